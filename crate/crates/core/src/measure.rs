//! Exact probability measures on {0,1}^V and events over configurations.
//!
//! Configurations are bitmasks; coordinate i (1-based) is bit i-1. In the
//! text formats a configuration prints as a binary string with coordinate 1
//! leftmost. Everything here is exact dense arithmetic, capped at n = 20
//! coordinates (8 MB tables); large-n behavior is handled in closed form by
//! the formula module.

use std::borrow::Cow;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Dense-form cap: 2^20 f64 entries.
pub const MAX_DENSE_COORDS: usize = 20;

/// Default tolerance for inequality checks; accumulated rounding in 2^n sums
/// stays far below this at n <= 20.
pub const DEFAULT_TOL: f64 = 1e-9;

const SUM_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub enum MeasureForm {
    /// Full table of 2^n point masses, indexed by configuration bitmask.
    Dense(Vec<f64>),
    /// Independent coordinates; params[i] is the one-probability of
    /// coordinate i+1.
    Product(Vec<f64>),
    /// Convex combination of product measures.
    Mixture {
        weights: Vec<f64>,
        components: Vec<Vec<f64>>,
    },
}

/// A probability measure on {0,1}^n.
#[derive(Clone, Debug, PartialEq)]
pub struct Measure {
    n: usize,
    form: MeasureForm,
}

fn check_coords(n: usize) -> Result<()> {
    if n > MAX_DENSE_COORDS {
        return Err(Error::TooLarge { op: "measure", n, cap: MAX_DENSE_COORDS });
    }
    Ok(())
}

fn check_probability(label: &str, p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("{label} = {p} outside [0, 1]")));
    }
    Ok(())
}

impl Measure {
    pub fn dense(n: usize, table: Vec<f64>) -> Result<Measure> {
        check_coords(n)?;
        if table.len() != 1 << n {
            return Err(Error::InvalidParameter(format!(
                "dense table has {} entries, expected {}",
                table.len(),
                1usize << n
            )));
        }
        if table.iter().any(|&p| !(p >= 0.0) || !p.is_finite()) {
            return Err(Error::InvalidParameter("negative or non-finite point mass".into()));
        }
        let sum: f64 = table.iter().sum();
        if (sum - 1.0).abs() > SUM_TOL {
            return Err(Error::InvalidParameter(format!("point masses sum to {sum}, not 1")));
        }
        Ok(Measure { n, form: MeasureForm::Dense(table) })
    }

    /// The product measure with the given one-probabilities.
    pub fn product(params: &[f64]) -> Result<Measure> {
        check_coords(params.len())?;
        for &p in params {
            check_probability("product parameter", p)?;
        }
        Ok(Measure { n: params.len(), form: MeasureForm::Product(params.to_vec()) })
    }

    /// The Bernoulli product π_eps on n coordinates.
    pub fn bernoulli(n: usize, eps: f64) -> Result<Measure> {
        Measure::product(&vec![eps; n])
    }

    /// Convex combination of product measures.
    pub fn mixture(weights: &[f64], components: &[Measure]) -> Result<Measure> {
        if weights.len() != components.len() || weights.is_empty() {
            return Err(Error::InvalidParameter(
                "mixture needs matching, nonempty weights and components".into(),
            ));
        }
        for &w in weights {
            if !(w >= 0.0) {
                return Err(Error::InvalidParameter(format!("negative mixture weight {w}")));
            }
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > SUM_TOL {
            return Err(Error::InvalidParameter(format!("mixture weights sum to {sum}, not 1")));
        }
        let n = components[0].n;
        let mut params = Vec::with_capacity(components.len());
        for c in components {
            if c.n != n {
                return Err(Error::DimensionMismatch(c.n, n));
            }
            match &c.form {
                MeasureForm::Product(p) => params.push(p.clone()),
                _ => {
                    return Err(Error::InvalidParameter(
                        "mixture components must be product measures".into(),
                    ))
                }
            }
        }
        Ok(Measure { n, form: MeasureForm::Mixture { weights: weights.to_vec(), components: params } })
    }

    pub fn point_mass(n: usize, mask: u32) -> Result<Measure> {
        check_coords(n)?;
        let mut table = vec![0.0; 1 << n];
        table[mask as usize] = 1.0;
        Measure::dense(n, table)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn form(&self) -> &MeasureForm {
        &self.form
    }

    /// Point mass of a single configuration.
    pub fn mass(&self, mask: u32) -> f64 {
        match &self.form {
            MeasureForm::Dense(t) => t[mask as usize],
            MeasureForm::Product(p) => product_mass(p, mask),
            MeasureForm::Mixture { weights, components } => weights
                .iter()
                .zip(components)
                .map(|(w, p)| w * product_mass(p, mask))
                .sum(),
        }
    }

    /// The full table; borrows when already dense.
    pub fn dense_table(&self) -> Cow<'_, [f64]> {
        match &self.form {
            MeasureForm::Dense(t) => Cow::Borrowed(t),
            _ => Cow::Owned((0..1u32 << self.n).map(|m| self.mass(m)).collect()),
        }
    }

    pub fn prob(&self, e: &Event) -> Result<f64> {
        if e.n != self.n {
            return Err(Error::DimensionMismatch(self.n, e.n));
        }
        let table = self.dense_table();
        Ok(e.member_masks().map(|m| table[m as usize]).sum())
    }

    /// P(a | given). Conditioning on a zero-probability event is a distinct
    /// error; enumerative membership checks skip such cases.
    pub fn conditional(&self, a: &Event, given: &Event) -> Result<f64> {
        if a.n != self.n || given.n != self.n {
            return Err(Error::DimensionMismatch(a.n.max(given.n), self.n));
        }
        let table = self.dense_table();
        let mut joint = 0.0;
        let mut denom = 0.0;
        for m in given.member_masks() {
            let p = table[m as usize];
            denom += p;
            if a.contains(m) {
                joint += p;
            }
        }
        if denom <= 0.0 {
            return Err(Error::UndefinedConditional);
        }
        Ok(joint / denom)
    }

    /// μ(⋂ A̅_i): the point mass of the all-zeros configuration.
    pub fn failure_free_prob(&self) -> f64 {
        self.mass(0)
    }

    /// Law of the bit-flipped configuration; an involution.
    pub fn complement(&self) -> Measure {
        let full = (1u32 << self.n) - 1;
        let form = match &self.form {
            MeasureForm::Dense(t) => {
                let mut flipped = vec![0.0; t.len()];
                for (m, &p) in t.iter().enumerate() {
                    flipped[(m as u32 ^ full) as usize] = p;
                }
                MeasureForm::Dense(flipped)
            }
            MeasureForm::Product(p) => MeasureForm::Product(p.iter().map(|q| 1.0 - q).collect()),
            MeasureForm::Mixture { weights, components } => MeasureForm::Mixture {
                weights: weights.clone(),
                components: components
                    .iter()
                    .map(|c| c.iter().map(|q| 1.0 - q).collect())
                    .collect(),
            },
        };
        Measure { n: self.n, form }
    }

    /// Total variation distance: half the pointwise absolute-difference sum.
    pub fn tv_distance(&self, other: &Measure) -> Result<f64> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        let a = self.dense_table();
        let b = other.dense_table();
        Ok(0.5 * a.iter().zip(b.iter()).map(|(x, y)| (x - y).abs()).sum::<f64>())
    }

    /// Text form. Dense: `n`, then `bitmask probability` per line with
    /// coordinate 1 leftmost. Product and mixture forms serialize as labeled
    /// parameter lists.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        match &self.form {
            MeasureForm::Dense(t) => {
                let _ = writeln!(s, "{}", self.n);
                for (m, &p) in t.iter().enumerate() {
                    let _ = writeln!(s, "{} {:.17e}", mask_to_bitstring(m as u32, self.n), p);
                }
            }
            MeasureForm::Product(p) => {
                let _ = writeln!(s, "product {}", self.n);
                let _ = writeln!(s, "{}", join_floats(p));
            }
            MeasureForm::Mixture { weights, components } => {
                let _ = writeln!(s, "mixture {} {}", self.n, weights.len());
                for (w, c) in weights.iter().zip(components) {
                    let _ = writeln!(s, "{w:.17e} | {}", join_floats(c));
                }
            }
        }
        s
    }

    pub fn parse(text: &str) -> Result<Measure> {
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| Error::Parse { line: 1, msg: "empty input".into() })?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let bad = |line: usize, msg: String| Error::Parse { line, msg };
        match fields.as_slice() {
            [n] => {
                let n: usize = n.parse().map_err(|_| bad(1, format!("bad header {header:?}")))?;
                check_coords(n)?;
                let mut table = vec![0.0; 1 << n];
                for (idx, line) in lines.enumerate() {
                    let line = line.trim();
                    if line.is_empty() {
                        continue;
                    }
                    let (bits, prob) = line
                        .split_once(' ')
                        .ok_or_else(|| bad(idx + 2, format!("expected `bitmask probability`: {line:?}")))?;
                    let mask = bitstring_to_mask(bits.trim(), n)
                        .ok_or_else(|| bad(idx + 2, format!("bad bitmask {bits:?}")))?;
                    table[mask as usize] = prob
                        .trim()
                        .parse()
                        .map_err(|_| bad(idx + 2, format!("bad probability {prob:?}")))?;
                }
                Measure::dense(n, table)
            }
            ["product", n] => {
                let n: usize = n.parse().map_err(|_| bad(1, format!("bad header {header:?}")))?;
                let params = parse_floats(lines.next().unwrap_or(""), 2)?;
                if params.len() != n {
                    return Err(bad(2, format!("expected {n} parameters, got {}", params.len())));
                }
                Measure::product(&params)
            }
            ["mixture", n, k] => {
                let n: usize = n.parse().map_err(|_| bad(1, format!("bad header {header:?}")))?;
                let k: usize = k.parse().map_err(|_| bad(1, format!("bad header {header:?}")))?;
                let mut weights = Vec::with_capacity(k);
                let mut comps = Vec::with_capacity(k);
                for (idx, line) in lines.take(k).enumerate() {
                    let (w, params) = line
                        .split_once('|')
                        .ok_or_else(|| bad(idx + 2, format!("expected `weight | params`: {line:?}")))?;
                    weights.push(
                        w.trim()
                            .parse()
                            .map_err(|_| bad(idx + 2, format!("bad weight {w:?}")))?,
                    );
                    let params = parse_floats(params, idx + 2)?;
                    if params.len() != n {
                        return Err(bad(idx + 2, format!("expected {n} parameters")));
                    }
                    comps.push(Measure::product(&params)?);
                }
                if weights.len() != k {
                    return Err(bad(1, format!("expected {k} mixture components")));
                }
                Measure::mixture(&weights, &comps)
            }
            _ => Err(bad(1, format!("unrecognized header {header:?}"))),
        }
    }
}

fn product_mass(params: &[f64], mask: u32) -> f64 {
    params
        .iter()
        .enumerate()
        .map(|(i, &p)| if mask >> i & 1 == 1 { p } else { 1.0 - p })
        .product()
}

fn join_floats(xs: &[f64]) -> String {
    xs.iter().map(|x| format!("{x:.17e}")).collect::<Vec<_>>().join(" ")
}

fn parse_floats(line: &str, lineno: usize) -> Result<Vec<f64>> {
    line.split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| Error::Parse { line: lineno, msg: format!("bad number {t:?}") })
        })
        .collect()
}

/// Binary string with coordinate 1 as the leftmost character.
pub fn mask_to_bitstring(mask: u32, n: usize) -> String {
    (0..n).map(|i| if mask >> i & 1 == 1 { '1' } else { '0' }).collect()
}

pub fn bitstring_to_mask(s: &str, n: usize) -> Option<u32> {
    if s.len() != n {
        return None;
    }
    let mut mask = 0u32;
    for (i, ch) in s.chars().enumerate() {
        match ch {
            '1' => mask |= 1 << i,
            '0' => {}
            _ => return None,
        }
    }
    Some(mask)
}

/// An event: a subset of {0,1}^n held as a bitmask-indexed membership table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Event {
    n: usize,
    members: Vec<bool>,
}

impl Event {
    pub fn from_fn(n: usize, f: impl Fn(u32) -> bool) -> Result<Event> {
        check_coords(n)?;
        Ok(Event { n, members: (0..1u32 << n).map(f).collect() })
    }

    pub fn full(n: usize) -> Result<Event> {
        Event::from_fn(n, |_| true)
    }

    pub fn empty(n: usize) -> Result<Event> {
        Event::from_fn(n, |_| false)
    }

    /// {ω : ω(i) = value}, i 1-based.
    pub fn coordinate_is(n: usize, i: u32, value: bool) -> Result<Event> {
        Event::from_fn(n, |m| (m >> (i - 1) & 1 == 1) == value)
    }

    pub fn all_zeros(n: usize) -> Result<Event> {
        Event::from_fn(n, |m| m == 0)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, mask: u32) -> bool {
        self.members[mask as usize]
    }

    pub fn member_masks(&self) -> impl Iterator<Item = u32> + '_ {
        self.members
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| i as u32)
    }

    pub fn intersect(&self, other: &Event) -> Result<Event> {
        self.combine(other, |a, b| a && b)
    }

    pub fn union(&self, other: &Event) -> Result<Event> {
        self.combine(other, |a, b| a || b)
    }

    pub fn complement(&self) -> Event {
        Event { n: self.n, members: self.members.iter().map(|&m| !m).collect() }
    }

    fn combine(&self, other: &Event, op: impl Fn(bool, bool) -> bool) -> Result<Event> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        Ok(Event {
            n: self.n,
            members: self
                .members
                .iter()
                .zip(&other.members)
                .map(|(&a, &b)| op(a, b))
                .collect(),
        })
    }

    /// True iff membership is monotone along every hypercube covering edge:
    /// flipping one coordinate from 0 to 1 never exits the event.
    pub fn is_increasing(&self) -> bool {
        for mask in 0..1u32 << self.n {
            if !self.members[mask as usize] {
                continue;
            }
            for i in 0..self.n {
                if mask >> i & 1 == 0 && !self.members[(mask | 1 << i) as usize] {
                    return false;
                }
            }
        }
        true
    }
}
