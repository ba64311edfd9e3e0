//! Acyclic digraphs and the Barak-Erdos random DAG model.
//!
//! Vertices are labeled 1..=n. A Barak-Erdos sample puts an edge on each
//! pair i < j independently with probability p, oriented low-to-high.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt::Write as _;
use std::path::Path;

use rand::Rng;

use crate::error::{Error, Result};
use crate::rng::rng_from_seed;

/// An acyclic digraph on vertices 1..=n. Immutable after construction;
/// acyclicity is verified by the constructor.
#[derive(Clone, Debug)]
pub struct Dag {
    n: usize,
    edges: Vec<(u32, u32)>,
    adj: Vec<Vec<u32>>,   // 0-based out-neighbors
    topo: Vec<u32>,       // 0-based, smallest-label-first tie break
}

impl Dag {
    pub fn new(n: usize, mut edges: Vec<(u32, u32)>) -> Result<Dag> {
        if n == 0 {
            return Err(Error::InvalidParameter("vertex count must be >= 1".into()));
        }
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for &(i, j) in &edges {
            if i == j {
                return Err(Error::SelfLoop(i));
            }
            for v in [i, j] {
                if v < 1 || v as usize > n {
                    return Err(Error::VertexOutOfRange(v, n));
                }
            }
            adj[(i - 1) as usize].push(j - 1);
        }
        let topo = toposort(n, &adj)?;
        Ok(Dag { n, edges, adj, topo })
    }

    /// Sample from the Barak-Erdos model G_d(n, p). Deterministic given
    /// (n, p, seed). Sparse densities use geometric skipping over the
    /// linearized pair sequence so the expected cost is O(n + e(G)).
    pub fn sample_barak_erdos(n: usize, p: f64, seed: u64) -> Result<Dag> {
        if n == 0 {
            return Err(Error::InvalidParameter("vertex count must be >= 1".into()));
        }
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidParameter(format!("p = {p} outside [0, 1]")));
        }
        let mut edges = Vec::new();
        if p >= 1.0 {
            for i in 1..=n as u32 {
                for j in i + 1..=n as u32 {
                    edges.push((i, j));
                }
            }
        } else if p >= 0.1 {
            let mut rng = rng_from_seed(seed);
            for i in 1..=n as u32 {
                for j in i + 1..=n as u32 {
                    if rng.random::<f64>() < p {
                        edges.push((i, j));
                    }
                }
            }
        } else if p > 0.0 {
            let mut rng = rng_from_seed(seed);
            let total = (n as u64) * (n as u64 - 1) / 2;
            let log1mp = (-p).ln_1p();
            let mut pos: u64 = 0;
            // (row, row_end): linear positions [row_end - (n - row), row_end)
            // hold the pairs (row, row+1..n) for 1-based row.
            let mut row: u64 = 1;
            let mut row_end: u64 = n as u64 - 1;
            loop {
                let u: f64 = rng.random();
                let gap = ((-u).ln_1p() / log1mp).floor();
                pos = pos.saturating_add(if gap >= total as f64 { total } else { gap as u64 });
                if pos >= total {
                    break;
                }
                while pos >= row_end {
                    row += 1;
                    row_end += n as u64 - row;
                }
                let offset = pos - (row_end - (n as u64 - row));
                let j = row + 1 + offset;
                edges.push((row as u32, j as u32));
                pos += 1;
            }
        }
        Dag::new(n, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges as 1-based (i, j) pairs, sorted.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// 1-based out-neighbors of a 1-based vertex.
    pub fn out_neighbors(&self, i: u32) -> impl Iterator<Item = u32> + '_ {
        self.adj[(i - 1) as usize].iter().map(|&j| j + 1)
    }

    pub(crate) fn adj0(&self) -> &[Vec<u32>] {
        &self.adj
    }

    pub(crate) fn topo0(&self) -> &[u32] {
        &self.topo
    }

    pub fn max_out_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// e(G) / v(G).
    pub fn density(&self) -> f64 {
        self.edges.len() as f64 / self.n as f64
    }

    /// A topological order of the 1-based vertex labels. Deterministic:
    /// among the ready vertices the smallest label comes first.
    pub fn linear_extension(&self) -> Vec<u32> {
        self.topo.iter().map(|&v| v + 1).collect()
    }

    /// Edge-list text format: first line `n`, then one `i j` pair per line.
    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{}", self.n);
        for &(i, j) in &self.edges {
            let _ = writeln!(s, "{i} {j}");
        }
        s
    }

    pub fn parse_edge_list(text: &str) -> Result<Dag> {
        let mut lines = text.lines().enumerate();
        let (_, first) = lines
            .next()
            .ok_or_else(|| Error::Parse { line: 1, msg: "empty input".into() })?;
        let n: usize = first.trim().parse().map_err(|_| Error::Parse {
            line: 1,
            msg: format!("expected vertex count, got {first:?}"),
        })?;
        let mut edges = Vec::new();
        for (idx, line) in lines {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut it = line.split_whitespace();
            let parse = |tok: Option<&str>| -> Result<u32> {
                tok.and_then(|t| t.parse().ok()).ok_or_else(|| Error::Parse {
                    line: idx + 1,
                    msg: format!("expected `i j`, got {line:?}"),
                })
            };
            let i = parse(it.next())?;
            let j = parse(it.next())?;
            if it.next().is_some() {
                return Err(Error::Parse {
                    line: idx + 1,
                    msg: format!("trailing tokens in {line:?}"),
                });
            }
            edges.push((i, j));
        }
        Dag::new(n, edges)
    }

    pub fn read_edge_list(path: impl AsRef<Path>) -> Result<Dag> {
        Dag::parse_edge_list(&std::fs::read_to_string(path)?)
    }

    pub fn write_edge_list(&self, path: impl AsRef<Path>) -> Result<()> {
        Ok(std::fs::write(path, self.to_edge_list())?)
    }
}

fn toposort(n: usize, adj: &[Vec<u32>]) -> Result<Vec<u32>> {
    let mut indeg = vec![0u32; n];
    for nbrs in adj {
        for &j in nbrs {
            indeg[j as usize] += 1;
        }
    }
    let mut heap: BinaryHeap<Reverse<u32>> = (0..n as u32)
        .filter(|&v| indeg[v as usize] == 0)
        .map(Reverse)
        .collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(v)) = heap.pop() {
        order.push(v);
        for &j in &adj[v as usize] {
            indeg[j as usize] -= 1;
            if indeg[j as usize] == 0 {
                heap.push(Reverse(j));
            }
        }
    }
    if order.len() != n {
        let culprit = indeg.iter().position(|&d| d > 0).unwrap() as u32 + 1;
        return Err(Error::NotAcyclic(culprit));
    }
    Ok(order)
}
