//! Exact integer max-flow (Dinic) used by the domination decision
//! procedure. Capacities are probabilities scaled to 64-bit integers.

pub struct FlowNetwork {
    first: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u64>,
}

impl FlowNetwork {
    pub fn new(num_nodes: usize) -> FlowNetwork {
        FlowNetwork { first: vec![Vec::new(); num_nodes], to: Vec::new(), cap: Vec::new() }
    }

    /// Returns the edge id; the reverse edge is id ^ 1.
    pub fn add_edge(&mut self, from: usize, to: usize, cap: u64) -> usize {
        let id = self.to.len();
        self.first[from].push(id);
        self.to.push(to);
        self.cap.push(cap);
        self.first[to].push(id + 1);
        self.to.push(from);
        self.cap.push(0);
        id
    }

    /// Flow pushed through a forward edge (resides on the reverse arc).
    pub fn flow_on(&self, edge_id: usize) -> u64 {
        self.cap[edge_id ^ 1]
    }

    pub fn max_flow(&mut self, source: usize, sink: usize) -> u64 {
        let n = self.first.len();
        let mut total = 0u64;
        let mut level = vec![-1i32; n];
        let mut iter = vec![0usize; n];
        loop {
            // BFS level graph
            level.fill(-1);
            level[source] = 0;
            let mut queue = std::collections::VecDeque::from([source]);
            while let Some(v) = queue.pop_front() {
                for &e in &self.first[v] {
                    let u = self.to[e];
                    if self.cap[e] > 0 && level[u] < 0 {
                        level[u] = level[v] + 1;
                        queue.push_back(u);
                    }
                }
            }
            if level[sink] < 0 {
                return total;
            }
            iter.fill(0);
            while let Some(f) = self.augment(source, sink, u64::MAX, &level, &mut iter) {
                total += f;
            }
        }
    }

    fn augment(
        &mut self,
        v: usize,
        sink: usize,
        limit: u64,
        level: &[i32],
        iter: &mut [usize],
    ) -> Option<u64> {
        if v == sink {
            return Some(limit);
        }
        while iter[v] < self.first[v].len() {
            let e = self.first[v][iter[v]];
            let u = self.to[e];
            if self.cap[e] > 0 && level[u] == level[v] + 1 {
                if let Some(pushed) = self.augment(u, sink, limit.min(self.cap[e]), level, iter) {
                    self.cap[e] -= pushed;
                    self.cap[e ^ 1] += pushed;
                    return Some(pushed);
                }
            }
            iter[v] += 1;
        }
        None
    }
}
