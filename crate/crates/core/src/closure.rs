//! Reflexive transitive closure via a reverse-topological bitset
//! dynamic program: reach(i) = {i} ∪ ⋃_{j ∈ N(i)} reach(j).

use crate::bits::Bitset;
use crate::dag::Dag;
use crate::error::{Error, Result};

/// Hard cap on closure size; n^2/8 bytes of bitsets beyond this would be a
/// multi-GB allocation.
pub const MAX_CLOSURE_VERTICES: usize = 1 << 16;

/// Per-vertex reflexive transitive closures of a [`Dag`], plus the derived
/// statistics gamma_star = max_i |Γ*(i)| and Δ = gamma_star - 1.
#[derive(Clone, Debug)]
pub struct Closure {
    n: usize,
    reach: Vec<Bitset>,
    gamma_star: usize,
}

impl Closure {
    pub fn of(g: &Dag) -> Result<Closure> {
        let n = g.n();
        if n > MAX_CLOSURE_VERTICES {
            return Err(Error::TooLarge { op: "transitive closure", n, cap: MAX_CLOSURE_VERTICES });
        }
        let words = n.div_ceil(64);
        let mut flat = vec![0u64; n * words];
        let adj = g.adj0();
        for &v in g.topo0().iter().rev() {
            let v = v as usize;
            flat[v * words + v / 64] |= 1u64 << (v % 64);
            for &u in &adj[v] {
                let u = u as usize;
                for k in 0..words {
                    let w = flat[u * words + k];
                    flat[v * words + k] |= w;
                }
            }
        }
        let mut reach = Vec::with_capacity(n);
        let mut gamma_star = 0;
        for v in (0..n).rev() {
            let b = Bitset::from_words(n, flat.split_off(v * words));
            gamma_star = gamma_star.max(b.count_ones());
            reach.push(b);
        }
        reach.reverse();
        Ok(Closure { n, reach, gamma_star })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Size of the largest RTC, γ*.
    pub fn gamma_star(&self) -> usize {
        self.gamma_star
    }

    /// Max out-degree of the transitive closure graph, Δ = γ* - 1.
    pub fn delta(&self) -> usize {
        self.gamma_star - 1
    }

    /// |Γ*(i)| in vertex order.
    pub fn rtc_sizes(&self) -> Vec<usize> {
        self.reach.iter().map(Bitset::count_ones).collect()
    }

    /// Does vertex i reach vertex j (1-based, reflexive)?
    pub fn reaches(&self, i: u32, j: u32) -> bool {
        self.reach[(i - 1) as usize].get((j - 1) as usize)
    }

    /// Γ*(i) as 1-based labels.
    pub fn rtc(&self, i: u32) -> Vec<u32> {
        self.reach[(i - 1) as usize].iter_ones().map(|v| v as u32 + 1).collect()
    }

    pub(crate) fn reach0(&self) -> &[Bitset] {
        &self.reach
    }

    pub fn heap_bytes(&self) -> usize {
        self.reach.iter().map(Bitset::heap_bytes).sum()
    }

    /// The transitive closure as a graph: edge (i, j) iff i reaches j, i ≠ j.
    /// This is the dependency digraph G* used by the domination machinery;
    /// materializing it is only sensible at enumeration scale.
    pub fn closure_dag(&self) -> Result<Dag> {
        const CAP: usize = 1 << 12;
        if self.n > CAP {
            return Err(Error::TooLarge { op: "closure graph materialization", n: self.n, cap: CAP });
        }
        let mut edges = Vec::new();
        for i in 0..self.n {
            for j in self.reach[i].iter_ones() {
                if i != j {
                    edges.push((i as u32 + 1, j as u32 + 1));
                }
            }
        }
        Dag::new(self.n, edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_reachability() {
        let g = Dag::new(3, vec![(1, 2), (2, 3)]).unwrap();
        let c = Closure::of(&g).unwrap();
        assert_eq!(c.rtc(1), vec![1, 2, 3]);
        assert_eq!(c.rtc(2), vec![2, 3]);
        assert_eq!(c.rtc(3), vec![3]);
        assert_eq!(c.rtc_sizes(), vec![3, 2, 1]);
        assert_eq!(c.gamma_star(), 3);
        assert_eq!(c.delta(), 2);
    }

    #[test]
    fn diamond_reachability() {
        let g = Dag::new(4, vec![(1, 2), (1, 3), (2, 4), (3, 4)]).unwrap();
        let c = Closure::of(&g).unwrap();
        assert_eq!(c.rtc(1), vec![1, 2, 3, 4]);
        assert_eq!(c.rtc_sizes(), vec![4, 2, 2, 1]);
    }

    #[test]
    fn empty_graph() {
        let g = Dag::new(5, vec![]).unwrap();
        let c = Closure::of(&g).unwrap();
        assert_eq!(c.rtc_sizes(), vec![1; 5]);
        assert_eq!(c.gamma_star(), 1);
    }

    #[test]
    fn empty_graph_n4_sizes() {
        let g = Dag::new(4, vec![]).unwrap();
        assert_eq!(Closure::of(&g).unwrap().rtc_sizes(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn extreme_densities() {
        let full = Dag::sample_barak_erdos(20, 1.0, 0).unwrap();
        assert_eq!(Closure::of(&full).unwrap().gamma_star(), 20);
        let empty = Dag::sample_barak_erdos(20, 0.0, 0).unwrap();
        assert_eq!(Closure::of(&empty).unwrap().gamma_star(), 1);
    }

    #[test]
    fn closure_dag_is_transitively_closed() {
        let g = Dag::sample_barak_erdos(12, 0.3, 5).unwrap();
        let c = Closure::of(&g).unwrap();
        let gc = c.closure_dag().unwrap();
        let cc = Closure::of(&gc).unwrap();
        // idempotence: closing the closure changes nothing
        assert_eq!(c.rtc_sizes(), cc.rtc_sizes());
        for i in 1..=12u32 {
            let nbrs: Vec<u32> = gc.out_neighbors(i).collect();
            let mut rtc = c.rtc(i);
            rtc.retain(|&j| j != i);
            assert_eq!(nbrs, rtc);
        }
    }
}
