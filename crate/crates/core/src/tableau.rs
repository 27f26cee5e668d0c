//! Partitions, updown tableaux and their combinatorial statistics.
//!
//! Boxes are `(row, col)` pairs, 1-based; the diagonal of a box is
//! `col - row`. Contents are kept symbolic as a sign and a diagonal, with value
//! `sign · ((ω−1)/2 + diagonal)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::field::{Field, FieldError, QOmega, QOmegaElem};

/// Default bound on `n` for exhaustive enumeration.
pub const DEFAULT_TABLEAU_BOUND: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("invalid partition {0:?}: parts must be weakly decreasing and positive")]
    InvalidPartition(Vec<usize>),
    #[error("step {step}: {from} -> {to} does not add or remove exactly one box")]
    InvalidStep { step: usize, from: String, to: String },
    #[error("no updown tableau of length {n} ends at a partition of {size}")]
    ShapeParityMismatch { n: usize, size: usize },
    #[error("n = {n} exceeds the enumeration bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
    #[error("cannot parse tableau text {0:?}")]
    Parse(String),
    #[error("factor of f(T) at step {0} vanishes")]
    ZeroFactor(usize),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }

    pub fn diagonal(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

/// A weakly decreasing list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, TableauError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(TableauError::InvalidPartition(parts));
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && self.0.get(c.row - 1).is_some_and(|&len| c.col <= len)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| Cell::new(i + 1, j)))
    }

    /// Boxes that can be added, by increasing row (decreasing diagonal).
    pub fn addable(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for (i, &len) in self.0.iter().enumerate() {
            if i == 0 || self.0[i - 1] > len {
                out.push(Cell::new(i + 1, len + 1));
            }
        }
        out.push(Cell::new(self.0.len() + 1, 1));
        out
    }

    /// Boxes that can be removed, by increasing row (decreasing diagonal).
    pub fn removable(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for (i, &len) in self.0.iter().enumerate() {
            if self.0.get(i + 1).is_none_or(|&next| next < len) {
                out.push(Cell::new(i + 1, len));
            }
        }
        out
    }

    pub fn with_added(&self, c: Cell) -> Self {
        let mut parts = self.0.clone();
        if c.row > parts.len() {
            parts.push(1);
        } else {
            parts[c.row - 1] += 1;
        }
        Self(parts)
    }

    pub fn with_removed(&self, c: Cell) -> Self {
        let mut parts = self.0.clone();
        parts[c.row - 1] -= 1;
        if parts[c.row - 1] == 0 {
            parts.pop();
        }
        Self(parts)
    }

    /// Conjugate (transposed) partition.
    pub fn conjugate(&self) -> Self {
        let cols = self.0.first().copied().unwrap_or(0);
        Self((1..=cols).map(|j| self.0.iter().filter(|&&len| len >= j).count()).collect())
    }

    /// All partitions of `size` in reverse lexicographic order.
    pub fn all_of_size(size: usize) -> Vec<Self> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for part in (1..=rest.min(max)).rev() {
                cur.push(part);
                rec(rest - part, part, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(size, size, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    /// Digits concatenated (`21`), comma-separated when a part exceeds 9,
    /// `0` for the empty partition.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        if self.0.iter().all(|&p| p < 10) {
            for p in &self.0 {
                write!(f, "{p}")?;
            }
            Ok(())
        } else {
            let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
            write!(f, "{}", s.join(","))
        }
    }
}

impl FromStr for Partition {
    type Err = TableauError;

    fn from_str(s: &str) -> Result<Self, TableauError> {
        let s = s.trim();
        if s.is_empty() || s == "0" || s == "∅" {
            return Ok(Self::empty());
        }
        let parts: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|p| p.trim().parse().map_err(|_| TableauError::Parse(s.to_string())))
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| TableauError::Parse(s.to_string())))
                .collect::<Result<_, _>>()?
        };
        Self::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Partition::new(Vec::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// Product of hook lengths.
pub fn hooks(lambda: &Partition) -> u64 {
    let conj = lambda.conjugate();
    lambda
        .cells()
        .map(|c| {
            let arm = lambda.0[c.row - 1] - c.col;
            let leg = conj.0[c.col - 1] - c.row;
            (arm + leg + 1) as u64
        })
        .product()
}

/// Symbolic content `sign · ((ω−1)/2 + diagonal)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ContentSymbol {
    pub sign: i8,
    pub diagonal: i64,
}

impl ContentSymbol {
    pub fn added(diagonal: i64) -> Self {
        Self { sign: 1, diagonal }
    }

    pub fn removed(diagonal: i64) -> Self {
        Self { sign: -1, diagonal }
    }

    /// Value in a field where ω is `omega`.
    pub fn value<F: Field>(&self, field: &F, omega: &F::Elem) -> Result<F::Elem, FieldError> {
        let half = field.div(&field.sub(omega, &field.one()), &field.from_i64(2))?;
        let v = field.add(&half, &field.from_i64(self.diagonal));
        Ok(if self.sign < 0 { field.neg(&v) } else { v })
    }

    /// Value in `Q(ω)`.
    pub fn exact(&self) -> QOmegaElem {
        let f = QOmega::omega();
        self.value(&f, &f.gen()).expect("2 is invertible in Q(ω)")
    }

    /// Whether `self - other` vanishes identically in ω.
    pub fn difference_is_zero(&self, other: &Self) -> bool {
        self == other
    }

    /// Whether `self + other` vanishes identically in ω.
    pub fn sum_is_zero(&self, other: &Self) -> bool {
        self.sign == -other.sign && self.diagonal == other.diagonal
    }
}

impl fmt::Display for ContentSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", if self.sign > 0 { '+' } else { '-' }, self.diagonal)
    }
}

/// Addable boxes (sign +1) and removable boxes (sign −1) of `mu` with their
/// contents, each list ordered by decreasing diagonal.
pub fn boxes_with_contents(mu: &Partition) -> (Vec<(Cell, ContentSymbol)>, Vec<(Cell, ContentSymbol)>) {
    let add = mu.addable().into_iter().map(|c| (c, ContentSymbol::added(c.diagonal()))).collect();
    let rem = mu.removable().into_iter().map(|c| (c, ContentSymbol::removed(c.diagonal()))).collect();
    (add, rem)
}

/// One step of an updown tableau.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Step {
    pub cell: Cell,
    pub added: bool,
}

impl Step {
    pub fn content(&self) -> ContentSymbol {
        if self.added {
            ContentSymbol::added(self.cell.diagonal())
        } else {
            ContentSymbol::removed(self.cell.diagonal())
        }
    }
}

/// A sequence `(Λ_1, …, Λ_n)`, each obtained from the previous (with
/// `Λ_0 = ∅`) by adding or removing one box.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UpdownTableau {
    shapes: Vec<Partition>,
}

fn step_between(from: &Partition, to: &Partition) -> Option<Step> {
    if to.size() == from.size() + 1 {
        from.addable().into_iter().find(|&c| from.with_added(c) == *to).map(|cell| Step { cell, added: true })
    } else if to.size() + 1 == from.size() {
        from.removable().into_iter().find(|&c| from.with_removed(c) == *to).map(|cell| Step { cell, added: false })
    } else {
        None
    }
}

impl UpdownTableau {
    pub fn new(shapes: Vec<Partition>) -> Result<Self, TableauError> {
        let empty = Partition::empty();
        for (r, to) in shapes.iter().enumerate() {
            let from = if r == 0 { &empty } else { &shapes[r - 1] };
            if step_between(from, to).is_none() {
                return Err(TableauError::InvalidStep {
                    step: r + 1,
                    from: from.to_string(),
                    to: to.to_string(),
                });
            }
        }
        Ok(Self { shapes })
    }

    /// Shorthand for tests and examples: `UpdownTableau::parse("1|2|21")`.
    pub fn parse(text: &str) -> Result<Self, TableauError> {
        text.parse()
    }

    pub fn n(&self) -> usize {
        self.shapes.len()
    }

    pub fn shapes(&self) -> &[Partition] {
        &self.shapes
    }

    /// `Λ_r`, with `Λ_0 = ∅`.
    pub fn shape(&self, r: usize) -> Partition {
        if r == 0 {
            Partition::empty()
        } else {
            self.shapes[r - 1].clone()
        }
    }

    pub fn final_shape(&self) -> Partition {
        self.shape(self.n())
    }

    /// `(Λ_1, …, Λ_r)`.
    pub fn prefix(&self, r: usize) -> Self {
        Self {
            shapes: self.shapes[..r].to_vec(),
        }
    }

    /// Step `r`, 1-based.
    pub fn step(&self, r: usize) -> Step {
        step_between(&self.shape(r - 1), &self.shape(r)).expect("validated tableau")
    }

    pub fn steps(&self) -> Vec<Step> {
        (1..=self.n()).map(|r| self.step(r)).collect()
    }

    /// Appends a shape reachable in one step.
    pub fn extended(&self, next: Partition) -> Result<Self, TableauError> {
        let mut shapes = self.shapes.clone();
        shapes.push(next);
        Self::new(shapes)
    }

    /// True when every step adds a box (a standard tableau).
    pub fn all_additions(&self) -> bool {
        self.steps().iter().all(|s| s.added)
    }

    pub fn to_json(&self) -> Value {
        json!({ "shapes": self.shapes })
    }

    pub fn from_json(v: &Value) -> Result<Self, TableauError> {
        let shapes: Vec<Partition> = serde_json::from_value(v.get("shapes").cloned().unwrap_or(Value::Null))
            .map_err(|e| TableauError::Parse(e.to_string()))?;
        Self::new(shapes)
    }
}

impl fmt::Display for UpdownTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.shapes.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join("|"))
    }
}

impl FromStr for UpdownTableau {
    type Err = TableauError;

    fn from_str(s: &str) -> Result<Self, TableauError> {
        if s.trim().is_empty() {
            return Err(TableauError::Parse(s.to_string()));
        }
        let shapes = s.split('|').map(str::parse).collect::<Result<Vec<Partition>, _>>()?;
        Self::new(shapes)
    }
}

/// Every updown tableau of length `n` (ending at `target` if given), depth
/// first, trying addable boxes then removable boxes, each by decreasing
/// diagonal.
pub fn enumerate_updown(n: usize, target: Option<&Partition>) -> Result<Vec<UpdownTableau>, TableauError> {
    enumerate_updown_bounded(n, target, DEFAULT_TABLEAU_BOUND)
}

pub fn enumerate_updown_bounded(
    n: usize,
    target: Option<&Partition>,
    bound: usize,
) -> Result<Vec<UpdownTableau>, TableauError> {
    if n > bound {
        return Err(TableauError::BoundExceeded { n, bound });
    }
    if let Some(t) = target {
        if t.size() > n || !(n - t.size()).is_multiple_of(2) {
            return Err(TableauError::ShapeParityMismatch { n, size: t.size() });
        }
    }
    fn rec(
        shapes: &mut Vec<Partition>,
        n: usize,
        target: Option<&Partition>,
        out: &mut Vec<UpdownTableau>,
    ) {
        let cur = shapes.last().cloned().unwrap_or_default();
        let left = n - shapes.len();
        if let Some(t) = target {
            // Reaching `t` needs at least |cur Δ t| more steps.
            let sym_diff = cur.cells().filter(|&c| !t.contains(c)).count()
                + t.cells().filter(|&c| !cur.contains(c)).count();
            if sym_diff > left {
                return;
            }
        }
        if left == 0 {
            if target.is_none_or(|t| *t == cur) {
                out.push(UpdownTableau { shapes: shapes.clone() });
            }
            return;
        }
        for c in cur.addable() {
            shapes.push(cur.with_added(c));
            rec(shapes, n, target, out);
            shapes.pop();
        }
        for c in cur.removable() {
            shapes.push(cur.with_removed(c));
            rec(shapes, n, target, out);
            shapes.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), n, target, &mut out);
    Ok(out)
}

/// Symbolic contents `c_1, …, c_n`.
pub fn contents(t: &UpdownTableau) -> Vec<ContentSymbol> {
    t.steps().iter().map(Step::content).collect()
}

/// Add/remove multiplicities of a prefix and the derived diagonal data.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TableauStatistics {
    /// Times each box was added.
    pub m: BTreeMap<Cell, i64>,
    /// Times each box was removed.
    pub m_prime: BTreeMap<Cell, i64>,
    pub d: BTreeMap<i64, i64>,
    pub d_prime: BTreeMap<i64, i64>,
    pub g: BTreeMap<i64, i64>,
    pub g_prime: BTreeMap<i64, i64>,
}

fn get(map: &BTreeMap<i64, i64>, k: i64) -> i64 {
    map.get(&k).copied().unwrap_or(0)
}

fn second_difference(d: &BTreeMap<i64, i64>, delta_at_zero: bool) -> BTreeMap<i64, i64> {
    let mut support: Vec<i64> = d.keys().flat_map(|&k| [k - 1, k, k + 1]).collect();
    if delta_at_zero {
        support.push(0);
    }
    support.sort_unstable();
    support.dedup();
    support
        .into_iter()
        .filter_map(|k| {
            let v = i64::from(delta_at_zero && k == 0) + get(d, k - 1) + get(d, k + 1) - 2 * get(d, k);
            (v != 0).then_some((k, v))
        })
        .collect()
}

impl TableauStatistics {
    /// Statistics of the shape sequence `(∅ = Λ_0, shapes…)`.
    pub fn of_shapes(shapes: &[Partition]) -> Self {
        let mut m = BTreeMap::new();
        let mut m_prime = BTreeMap::new();
        let mut prev = Partition::empty();
        for (r, next) in shapes.iter().enumerate() {
            let step = step_between(&prev, next)
                .unwrap_or_else(|| panic!("shape sequence broken at step {}", r + 1));
            let target = if step.added { &mut m } else { &mut m_prime };
            *target.entry(step.cell).or_insert(0) += 1;
            prev = next.clone();
        }
        let diag_sum = |mm: &BTreeMap<Cell, i64>| {
            let mut d = BTreeMap::new();
            for (c, v) in mm {
                *d.entry(c.diagonal()).or_insert(0) += v;
            }
            d
        };
        let d = diag_sum(&m);
        let d_prime = diag_sum(&m_prime);
        let g = second_difference(&d, true);
        let g_prime = second_difference(&d_prime, false);
        Self {
            m,
            m_prime,
            d,
            d_prime,
            g,
            g_prime,
        }
    }

    pub fn g(&self, k: i64) -> i64 {
        get(&self.g, k)
    }

    pub fn g_prime(&self, k: i64) -> i64 {
        get(&self.g_prime, k)
    }

    pub fn to_json(&self) -> Value {
        let cells = |mm: &BTreeMap<Cell, i64>| -> Value {
            mm.iter().map(|(c, v)| json!({"row": c.row, "col": c.col, "count": v})).collect()
        };
        let diag = |dd: &BTreeMap<i64, i64>| -> Value {
            dd.iter().map(|(k, v)| (k.to_string(), json!(v))).collect::<serde_json::Map<_, _>>().into()
        };
        json!({
            "m": cells(&self.m),
            "m_prime": cells(&self.m_prime),
            "d": diag(&self.d),
            "d_prime": diag(&self.d_prime),
            "g": diag(&self.g),
            "g_prime": diag(&self.g_prime),
        })
    }
}

pub fn tableau_statistics(u: &UpdownTableau) -> TableauStatistics {
    TableauStatistics::of_shapes(u.shapes())
}

/// Regularization exponents `p_1, …, p_n`.
pub fn exponents(t: &UpdownTableau) -> Vec<i64> {
    (1..=t.n())
        .map(|r| {
            let stats = TableauStatistics::of_shapes(&t.shapes()[..r - 1]);
            let step = t.step(r);
            let k = step.cell.diagonal();
            if step.added {
                1 - stats.g(k)
            } else {
                1 - stats.g_prime(k)
            }
        })
        .collect()
}

/// `f(T)` as an exact element of `Q(ω)`, with the per-step factors `φ`.
pub fn f_constant(t: &UpdownTableau) -> Result<(QOmegaElem, Vec<QOmegaElem>), TableauError> {
    let f = QOmega::omega();
    let w = f.gen();
    let mut factors = Vec::with_capacity(t.n());
    for r in 1..=t.n() {
        let stats = TableauStatistics::of_shapes(&t.shapes()[..r - 1]);
        let step = t.step(r);
        let kn = step.cell.diagonal();
        // `ω − 1 + shift` as an element of Q(ω)
        let omega_lin = |shift: i64| f.add(&w, &f.from_i64(shift - 1));
        let mut phi = f.one();
        let (integer_exps, omega_exps, sign) = if step.added {
            (&stats.g, &stats.g_prime, 1)
        } else {
            (&stats.g_prime, &stats.g, -1)
        };
        for (&k, &e) in integer_exps {
            if k != kn {
                phi = f.mul(&phi, &f.powi(&f.from_i64(sign * (kn - k)), e)?);
            }
        }
        for (&k, &e) in omega_exps {
            let base = omega_lin(kn + k);
            let base = if sign < 0 { f.neg(&base) } else { base };
            phi = f.mul(&phi, &f.powi(&base, e)?);
        }
        if f.is_zero(&phi) {
            return Err(TableauError::ZeroFactor(r));
        }
        factors.push(phi);
    }
    let total = factors.iter().fold(f.one(), |acc, x| f.mul(&acc, x));
    Ok((total, factors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::double_factorial_odd;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn cells(v: &[(Cell, ContentSymbol)]) -> Vec<(usize, usize, i64)> {
        v.iter().map(|(c, s)| (c.row, c.col, s.diagonal)).collect()
    }

    #[test]
    fn boxes_with_contents_examples() {
        let (a, r) = boxes_with_contents(&part("1"));
        assert_eq!(cells(&a), vec![(1, 2, 1), (2, 1, -1)]);
        assert_eq!(cells(&r), vec![(1, 1, 0)]);
        assert!(r.iter().all(|(_, s)| s.sign == -1) && a.iter().all(|(_, s)| s.sign == 1));
        let (a, r) = boxes_with_contents(&Partition::empty());
        assert_eq!(cells(&a), vec![(1, 1, 0)]);
        assert!(r.is_empty());
        let (a, r) = boxes_with_contents(&part("21"));
        assert_eq!(cells(&a), vec![(1, 3, 2), (2, 2, 0), (3, 1, -2)]);
        assert_eq!(cells(&r), vec![(1, 2, 1), (2, 1, -1)]);
    }

    #[test]
    fn parsing_and_display() {
        let t = UpdownTableau::parse("1|2|21|11|1|11").unwrap();
        assert_eq!(t.to_string(), "1|2|21|11|1|11");
        assert_eq!(UpdownTableau::parse("1|0|1").unwrap().to_string(), "1|0|1");
        assert_eq!(UpdownTableau::parse("1||1").unwrap(), UpdownTableau::parse("1|∅|1").unwrap());
        assert!(UpdownTableau::parse("2").is_err());
        assert!(UpdownTableau::parse("1|3").is_err());
        assert!(UpdownTableau::parse("12").is_err());
        assert!(UpdownTableau::parse("").is_err());
        assert!(UpdownTableau::parse("1|x").is_err());
        assert_eq!("10,2".parse::<Partition>().unwrap().parts(), &[10, 2]);
        let v = t.to_json();
        assert_eq!(UpdownTableau::from_json(&v).unwrap(), t);
    }

    /// Independent count: walk all shape sequences without the enumerator's
    /// pruning or ordering.
    fn brute_force_counts(n: usize) -> BTreeMap<Partition, u64> {
        let mut layer: BTreeMap<Partition, u64> = BTreeMap::from([(Partition::empty(), 1)]);
        for _ in 0..n {
            let mut next = BTreeMap::new();
            for (mu, count) in layer {
                let max = mu.size() + 1;
                for size in [mu.size().wrapping_sub(1), max] {
                    if size > max {
                        continue;
                    }
                    for nu in Partition::all_of_size(size) {
                        if step_between(&mu, &nu).is_some() {
                            *next.entry(nu).or_insert(0) += count;
                        }
                    }
                }
            }
            layer = next;
        }
        layer
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for n in 1..=6 {
            let all = enumerate_updown(n, None).unwrap();
            let brute = brute_force_counts(n);
            assert_eq!(all.len() as u64, brute.values().sum::<u64>());
            let squares: u64 = brute.values().map(|c| c * c).sum();
            assert_eq!(squares, double_factorial_odd(n), "n = {n}");
            for (lambda, count) in &brute {
                assert_eq!(enumerate_updown(n, Some(lambda)).unwrap().len() as u64, *count);
            }
        }
        assert_eq!(enumerate_updown(2, None).unwrap().len(), 3);
        assert_eq!(enumerate_updown(3, Some(&part("1"))).unwrap().len(), 3);
    }

    #[test]
    fn enumeration_order_and_errors() {
        let two: Vec<String> = enumerate_updown(2, None).unwrap().iter().map(|t| t.to_string()).collect();
        assert_eq!(two, ["1|2", "1|11", "1|0"]);
        assert_eq!(
            enumerate_updown(3, Some(&part("2"))),
            Err(TableauError::ShapeParityMismatch { n: 3, size: 2 })
        );
        assert!(matches!(enumerate_updown(7, None), Err(TableauError::BoundExceeded { .. })));
    }

    #[test]
    fn contents_examples() {
        let c = contents(&UpdownTableau::parse("1|2|21").unwrap());
        assert_eq!(c, vec![ContentSymbol::added(0), ContentSymbol::added(1), ContentSymbol::added(-1)]);
        let c = contents(&UpdownTableau::parse("1|0").unwrap());
        assert_eq!(c, vec![ContentSymbol::added(0), ContentSymbol::removed(0)]);
        let f = QOmega::omega();
        let half = f.div(&f.sub(&f.gen(), &f.one()), &f.from_i64(2)).unwrap();
        assert_eq!(c[0].exact(), half);
        assert_eq!(c[1].exact(), f.neg(&half));
        let c = contents(&UpdownTableau::parse("1|11").unwrap());
        assert_eq!(c[1].exact(), f.div(&f.sub(&f.gen(), &f.from_i64(3)), &f.from_i64(2)).unwrap());
    }

    #[test]
    fn matrices_of_the_nine_step_example() {
        let u = UpdownTableau::parse("1|2|21|11|1|11|21|22|21").unwrap();
        let s = tableau_statistics(&u);
        let m: BTreeMap<Cell, i64> =
            [((1, 1), 1), ((1, 2), 2), ((2, 1), 2), ((2, 2), 1)].map(|((r, c), v)| (Cell::new(r, c), v)).into();
        let mp: BTreeMap<Cell, i64> =
            [((1, 2), 1), ((2, 1), 1), ((2, 2), 1)].map(|((r, c), v)| (Cell::new(r, c), v)).into();
        assert_eq!(s.m, m);
        assert_eq!(s.m_prime, mp);
        assert_eq!(s.d, BTreeMap::from([(-1, 2), (0, 2), (1, 2)]));
        assert_eq!(s.d_prime, BTreeMap::from([(-1, 1), (0, 1), (1, 1)]));
    }

    #[test]
    fn single_box_statistics() {
        let s = tableau_statistics(&UpdownTableau::parse("1").unwrap());
        assert_eq!(s.d, BTreeMap::from([(0, 1)]));
        assert_eq!(s.g, BTreeMap::from([(-1, 1), (0, -1), (1, 1)]));
        assert!(s.g_prime.is_empty());
        let empty = TableauStatistics::of_shapes(&[]);
        assert_eq!(empty.g, BTreeMap::from([(0, 1)]));
    }

    #[test]
    fn exponent_examples() {
        assert_eq!(exponents(&UpdownTableau::parse("1|2|21|11|1|11").unwrap()), vec![0, 0, 0, 1, 1, 2]);
        assert_eq!(exponents(&UpdownTableau::parse("1|0").unwrap()), vec![0, 1]);
        for n in 1..=6 {
            for t in enumerate_updown(n, None).unwrap().iter().filter(|t| t.final_shape().size() == n) {
                assert!(exponents(t).iter().all(|&p| p == 0), "{t}");
            }
        }
    }

    #[test]
    fn f_constant_examples() {
        let f = QOmega::omega();
        let w = f.gen();
        let (one, factors) = f_constant(&UpdownTableau::parse("1").unwrap()).unwrap();
        assert_eq!(one, f.one());
        assert_eq!(factors.len(), 1);
        // ω(2 − ω)/(ω − 1)
        let (v, _) = f_constant(&UpdownTableau::parse("1|0").unwrap()).unwrap();
        let expect = f
            .div(&f.mul(&w, &f.sub(&f.from_i64(2), &w)), &f.sub(&w, &f.one()))
            .unwrap();
        assert_eq!(v, expect);
        for n in 1..=6 {
            for t in enumerate_updown(n, None).unwrap().iter().filter(|t| t.final_shape().size() == n) {
                let (v, _) = f_constant(t).unwrap();
                assert_eq!(v, f.from_i64(hooks(&t.final_shape()) as i64), "{t}");
            }
        }
    }

    #[test]
    fn hook_examples() {
        assert_eq!(hooks(&part("21")), 3);
        for n in 1..=6u64 {
            let fact: u64 = (1..=n).product();
            assert_eq!(hooks(&Partition::new(vec![n as usize]).unwrap()), fact);
            assert_eq!(hooks(&Partition::new(vec![1; n as usize]).unwrap()), fact);
        }
        assert_eq!(hooks(&Partition::empty()), 1);
    }

    #[test]
    fn prefix_difference_is_the_current_shape() {
        for t in enumerate_updown(6, None).unwrap() {
            for r in 0..=t.n() {
                let s = TableauStatistics::of_shapes(&t.shapes()[..r]);
                let shape = t.shape(r);
                let mut cells: Vec<Cell> = s.m.keys().chain(s.m_prime.keys()).copied().collect();
                cells.extend(shape.cells());
                for c in cells {
                    let diff = s.m.get(&c).unwrap_or(&0) - s.m_prime.get(&c).unwrap_or(&0);
                    assert_eq!(diff, i64::from(shape.contains(c)), "{t} prefix {r} cell {c:?}");
                }
            }
        }
    }

    #[test]
    fn g_is_plus_minus_one_on_addable_and_removable_diagonals() {
        for n in 0..=6 {
            for lambda in Partition::all_of_size(n) {
                // a standard path to λ: add row by row
                let mut shapes = Vec::new();
                let mut cur = Partition::empty();
                for c in lambda.cells() {
                    cur = cur.with_added(c);
                    shapes.push(cur.clone());
                }
                let s = TableauStatistics::of_shapes(&shapes);
                assert!(s.g_prime.is_empty());
                let mut expect = BTreeMap::new();
                for c in lambda.addable() {
                    expect.insert(c.diagonal(), 1);
                }
                for c in lambda.removable() {
                    expect.insert(c.diagonal(), -1);
                }
                assert_eq!(s.g, expect, "λ = {lambda}");
            }
        }
    }

    #[test]
    fn exponents_are_prefix_local() {
        for t in enumerate_updown(5, None).unwrap() {
            let p = exponents(&t);
            let (_, phi) = f_constant(&t).unwrap();
            for r in 1..=t.n() {
                let pre = t.prefix(r);
                assert_eq!(exponents(&pre), p[..r].to_vec());
                assert_eq!(f_constant(&pre).unwrap().1, phi[..r].to_vec());
            }
        }
    }
}
