//! Enumeration of conditional probabilities P(ω(pivot) = 1 | assignment),
//! where the assignment gives each scannable coordinate one of three roles:
//! forced to 1, forced to 0, or unconstrained. All other coordinates are
//! always marginalized out.
//!
//! The 3^m table is filled by a per-coordinate zeta transform over the dense
//! 2^n table, so a full scan costs O(2^n + m 3^m) instead of 3^m * 2^n.

/// Role of one scanned coordinate inside a pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    ForcedZero,
    ForcedOne,
    Free,
}

pub struct ConditionalScan {
    m: usize,
    pow3: Vec<usize>,
    /// t0[pat] + t1[pat] is the probability of the pattern's cylinder;
    /// t1 restricts to pivot = 1.
    t0: Vec<f64>,
    t1: Vec<f64>,
}

impl ConditionalScan {
    /// `coords` are the 0-based scannable coordinates; `pivot` must not be in
    /// `coords`. `dense` is the 2^n probability table.
    pub fn new(dense: &[f64], n: usize, pivot: usize, coords: &[usize]) -> ConditionalScan {
        let m = coords.len();
        debug_assert!(!coords.contains(&pivot));
        debug_assert!(dense.len() == 1 << n);
        let mut pow3 = vec![1usize; m + 1];
        for k in 0..m {
            pow3[k + 1] = pow3[k] * 3;
        }
        // Marginalize everything but (coords, pivot) into binary sub-tables.
        let mut s0 = vec![0.0f64; 1 << m];
        let mut s1 = vec![0.0f64; 1 << m];
        for (mask, &p) in dense.iter().enumerate() {
            if p == 0.0 {
                continue;
            }
            let mut sub = 0usize;
            for (k, &c) in coords.iter().enumerate() {
                sub |= (mask >> c & 1) << k;
            }
            if mask >> pivot & 1 == 1 {
                s1[sub] += p;
            } else {
                s0[sub] += p;
            }
        }
        // Seed the ternary tables at the all-binary patterns, then fill the
        // Free digit as the sum of the two forced digits, one coordinate at
        // a time.
        let size = pow3[m];
        let mut t0 = vec![0.0f64; size];
        let mut t1 = vec![0.0f64; size];
        for sub in 0..1usize << m {
            let mut idx = 0;
            for k in 0..m {
                idx += (sub >> k & 1) * pow3[k];
            }
            t0[idx] = s0[sub];
            t1[idx] = s1[sub];
        }
        for k in 0..m {
            let stride = pow3[k];
            for idx in 0..size {
                if idx / stride % 3 == 2 {
                    t0[idx] = t0[idx - 2 * stride] + t0[idx - stride];
                    t1[idx] = t1[idx - 2 * stride] + t1[idx - stride];
                }
            }
        }
        ConditionalScan { m, pow3, t0, t1 }
    }

    pub fn num_patterns(&self) -> usize {
        self.pow3[self.m]
    }

    pub fn role(&self, pattern: usize, k: usize) -> Role {
        match pattern / self.pow3[k] % 3 {
            0 => Role::ForcedZero,
            1 => Role::ForcedOne,
            _ => Role::Free,
        }
    }

    /// (P(assignment), P(pivot = 1 | assignment)); None when the assignment
    /// has probability zero (the "whenever nonzero" proviso).
    pub fn conditional(&self, pattern: usize) -> Option<(f64, f64)> {
        let tot = self.t0[pattern] + self.t1[pattern];
        if tot <= 0.0 {
            None
        } else {
            Some((tot, self.t1[pattern] / tot))
        }
    }

    /// Visit every positive-probability pattern; `visit` returns false to
    /// abort (a violation). Returns the aborting pattern, if any.
    pub fn find_violation(&self, mut visit: impl FnMut(usize, f64) -> bool) -> Option<usize> {
        for pattern in 0..self.num_patterns() {
            if let Some((_, cond)) = self.conditional(pattern) {
                if !visit(pattern, cond) {
                    return Some(pattern);
                }
            }
        }
        None
    }

    /// Like `find_violation`, but restricted to patterns with no ForcedOne
    /// digit (only-negative conditioning, as in the local lemma condition).
    pub fn find_violation_negative(&self, mut visit: impl FnMut(usize, f64) -> bool) -> Option<usize> {
        for pattern in 0..self.num_patterns() {
            if (0..self.m).any(|k| self.role(pattern, k) == Role::ForcedOne) {
                continue;
            }
            if let Some((_, cond)) = self.conditional(pattern) {
                if !visit(pattern, cond) {
                    return Some(pattern);
                }
            }
        }
        None
    }
}

/// Render a pattern as a human-readable assignment over 1-based labels.
pub fn describe_pattern(scan: &ConditionalScan, pattern: usize, coords: &[usize]) -> String {
    let mut parts = Vec::new();
    for (k, &c) in coords.iter().enumerate() {
        match scan.role(pattern, k) {
            Role::ForcedZero => parts.push(format!("x{}=0", c + 1)),
            Role::ForcedOne => parts.push(format!("x{}=1", c + 1)),
            Role::Free => {}
        }
    }
    if parts.is_empty() {
        "unconditional".into()
    } else {
        parts.join(" ")
    }
}
