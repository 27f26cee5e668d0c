//! Brauer n-diagrams as fixed-point-free involutions on 2n dots.
//!
//! Dots `0..n` are the top row left to right and `n..2n` the bottom row left
//! to right. The partner array is the canonical form, so derived `Ord`/`Hash`
//! give a unique, lexicographic key. The JSON form is 1-based.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest `n` that [`enumerate_diagrams`] accepts by default.
pub const DEFAULT_ENUMERATION_BOUND: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("generator index out of range for n = {n}: {detail}")]
    IndexOutOfRange { n: usize, detail: String },
    #[error("diagram sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("n = {n} exceeds the enumeration bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
    #[error("cannot embed an {from}-diagram into B_{to}")]
    ShrinkNotAllowed { from: usize, to: usize },
    #[error("not a perfect matching: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BrauerDiagram {
    partner: Box<[u8]>,
}

/// Named generators; indices are 1-based as in the usual notation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    Identity,
    /// Adjacent transposition `s_i`.
    S(usize),
    /// Adjacent contraction `e_i`.
    E(usize),
    /// Transposition `s_{ij}`.
    Sij(usize, usize),
    /// Contraction `e_{ij}`.
    Eij(usize, usize),
}

impl BrauerDiagram {
    /// Validates a 0-based partner array.
    pub fn from_partner(partner: Vec<u8>) -> Result<Self, DiagramError> {
        let len = partner.len();
        if len == 0 || !len.is_multiple_of(2) || len > 254 {
            return Err(DiagramError::Invalid(format!("length {len} is not 2n for 1 <= n <= 127")));
        }
        for (i, &p) in partner.iter().enumerate() {
            let p = p as usize;
            if p >= len || p == i || partner[p] as usize != i {
                return Err(DiagramError::Invalid(format!("dot {} is not properly paired", i + 1)));
            }
        }
        Ok(Self {
            partner: partner.into_boxed_slice(),
        })
    }

    pub fn identity(n: usize) -> Self {
        let mut p = vec![0u8; 2 * n];
        for i in 0..n {
            p[i] = (i + n) as u8;
            p[i + n] = i as u8;
        }
        Self { partner: p.into() }
    }

    /// The diagram of a permutation: top dot `i` joined to bottom dot `perm[i]`.
    pub fn from_permutation(perm: &[usize]) -> Result<Self, DiagramError> {
        let n = perm.len();
        let mut p = vec![0u8; 2 * n];
        for (i, &j) in perm.iter().enumerate() {
            if j >= n {
                return Err(DiagramError::Invalid(format!("{perm:?} is not a permutation")));
            }
            p[i] = (j + n) as u8;
            p[j + n] = i as u8;
        }
        Self::from_partner(p)
    }

    pub fn n(&self) -> usize {
        self.partner.len() / 2
    }

    /// 0-based partner array.
    pub fn partner(&self) -> &[u8] {
        &self.partner
    }

    /// True when every edge joins the two rows.
    pub fn is_permutation(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| self.partner[i] as usize >= n)
    }

    /// Number of horizontal edges in the top row.
    pub fn top_arcs(&self) -> usize {
        let n = self.n();
        (0..n).filter(|&i| (self.partner[i] as usize) < n).count() / 2
    }

    /// Adds vertical strands at positions `n+1..=m`.
    pub fn embed(&self, m: usize) -> Result<Self, DiagramError> {
        let n = self.n();
        if m < n {
            return Err(DiagramError::ShrinkNotAllowed { from: n, to: m });
        }
        if m == n {
            return Ok(self.clone());
        }
        let relabel = |v: usize| if v < n { v } else { v - n + m };
        let mut p = vec![0u8; 2 * m];
        for v in 0..2 * n {
            p[relabel(v)] = relabel(self.partner[v] as usize) as u8;
        }
        for i in n..m {
            p[i] = (i + m) as u8;
            p[i + m] = i as u8;
        }
        Ok(Self { partner: p.into() })
    }

    /// Concatenates `self` above `other`. Returns the product diagram and the
    /// number of closed loops formed in the middle row.
    pub fn multiply(&self, other: &Self) -> Result<(Self, u32), DiagramError> {
        let n = self.n();
        if other.n() != n {
            return Err(DiagramError::SizeMismatch(n, other.n()));
        }
        let top = &self.partner;
        let bot = &other.partner;
        let mut out = vec![u8::MAX; 2 * n];
        let mut middle_seen = vec![false; n];

        // Walk from an outer dot until the path leaves through another outer
        // dot. `in_top` tells which diagram the walk is currently inside.
        let walk = |start: usize, mut in_top: bool, middle_seen: &mut Vec<bool>| -> usize {
            let mut v = start;
            loop {
                if in_top {
                    let w = top[v] as usize;
                    if w < n {
                        return w;
                    }
                    middle_seen[w - n] = true;
                    v = w - n;
                    in_top = false;
                } else {
                    let w = bot[v] as usize;
                    if w >= n {
                        return w;
                    }
                    middle_seen[w] = true;
                    v = w + n;
                    in_top = true;
                }
            }
        };

        for s in 0..2 * n {
            if out[s] != u8::MAX {
                continue;
            }
            // Outer dots: top row of `self` (0..n) and bottom row of `other` (n..2n).
            let end = if s < n { walk(s, true, &mut middle_seen) } else { walk(s, false, &mut middle_seen) };
            out[s] = end as u8;
            out[end] = s as u8;
        }

        let mut loops = 0;
        for k in 0..n {
            if middle_seen[k] {
                continue;
            }
            loops += 1;
            let mut v = k;
            loop {
                middle_seen[v] = true;
                let a = top[v + n] as usize - n;
                middle_seen[a] = true;
                let b = bot[a] as usize;
                if b == k {
                    break;
                }
                v = b;
            }
        }
        Ok((Self { partner: out.into() }, loops))
    }

    /// Upside-down reflection.
    pub fn flip(&self) -> Self {
        let n = self.n();
        let swap = |v: usize| if v < n { v + n } else { v - n };
        let mut p = vec![0u8; 2 * n];
        for v in 0..2 * n {
            p[swap(v)] = swap(self.partner[v] as usize) as u8;
        }
        Self { partner: p.into() }
    }
}

impl fmt::Display for BrauerDiagram {
    /// Lists edges 1-based, bottom dots primed: `{1-2', 2-1'}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        let name = |v: usize| if v < n { format!("{}", v + 1) } else { format!("{}'", v - n + 1) };
        write!(f, "{{")?;
        let mut first = true;
        for v in 0..2 * n {
            let w = self.partner[v] as usize;
            if v < w {
                if !first {
                    write!(f, ", ")?;
                }
                first = false;
                write!(f, "{}-{}", name(v), name(w))?;
            }
        }
        write!(f, "}}")
    }
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    n: usize,
    partner: Vec<usize>,
}

impl Serialize for BrauerDiagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        DiagramJson {
            n: self.n(),
            partner: self.partner.iter().map(|&p| p as usize + 1).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BrauerDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = DiagramJson::deserialize(d)?;
        if raw.partner.len() != 2 * raw.n {
            return Err(serde::de::Error::custom("partner length must be 2n"));
        }
        let p = raw
            .partner
            .iter()
            .map(|&v| {
                if v == 0 || v > 2 * raw.n {
                    Err(serde::de::Error::custom(format!("partner index {v} out of range")))
                } else {
                    Ok((v - 1) as u8)
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        BrauerDiagram::from_partner(p).map_err(serde::de::Error::custom)
    }
}

/// The canonical diagram of a named generator in `B_n`.
pub fn generator(n: usize, kind: Generator) -> Result<BrauerDiagram, DiagramError> {
    let oob = |detail: String| DiagramError::IndexOutOfRange { n, detail };
    if n == 0 {
        return Err(oob("n must be positive".into()));
    }
    let (i, j, contract) = match kind {
        Generator::Identity => return Ok(BrauerDiagram::identity(n)),
        Generator::S(i) | Generator::E(i) => {
            if i == 0 || i >= n {
                return Err(oob(format!("need 1 <= i <= n-1, got {i}")));
            }
            (i, i + 1, matches!(kind, Generator::E(_)))
        }
        Generator::Sij(i, j) | Generator::Eij(i, j) => {
            if i == 0 || i >= j || j > n {
                return Err(oob(format!("need 1 <= i < j <= n, got ({i}, {j})")));
            }
            (i, j, matches!(kind, Generator::Eij(..)))
        }
    };
    let (a, b) = (i - 1, j - 1);
    let mut p: Vec<u8> = BrauerDiagram::identity(n).partner.into_vec();
    if contract {
        p[a] = b as u8;
        p[b] = a as u8;
        p[a + n] = (b + n) as u8;
        p[b + n] = (a + n) as u8;
    } else {
        p[a] = (b + n) as u8;
        p[b + n] = a as u8;
        p[b] = (a + n) as u8;
        p[a + n] = b as u8;
    }
    Ok(BrauerDiagram { partner: p.into() })
}

/// All n-diagrams in lexicographic order of their partner arrays.
pub fn enumerate_diagrams(n: usize) -> Result<Vec<BrauerDiagram>, DiagramError> {
    enumerate_diagrams_bounded(n, DEFAULT_ENUMERATION_BOUND)
}

pub fn enumerate_diagrams_bounded(n: usize, bound: usize) -> Result<Vec<BrauerDiagram>, DiagramError> {
    if n > bound {
        return Err(DiagramError::BoundExceeded { n, bound });
    }
    if n == 0 {
        return Err(DiagramError::IndexOutOfRange {
            n,
            detail: "n must be positive".into(),
        });
    }
    // Pairing the lowest free dot with each later free dot in increasing order
    // yields partner arrays in lexicographic order.
    fn rec(p: &mut Vec<u8>, out: &mut Vec<BrauerDiagram>) {
        let Some(first) = p.iter().position(|&x| x == u8::MAX) else {
            out.push(BrauerDiagram {
                partner: p.clone().into_boxed_slice(),
            });
            return;
        };
        for other in first + 1..p.len() {
            if p[other] == u8::MAX {
                p[first] = other as u8;
                p[other] = first as u8;
                rec(p, out);
                p[first] = u8::MAX;
                p[other] = u8::MAX;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut vec![u8::MAX; 2 * n], &mut out);
    Ok(out)
}

/// `(2n − 1)!!`
pub fn double_factorial_odd(n: usize) -> u64 {
    (1..=n as u64).map(|k| 2 * k - 1).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(n: usize, k: Generator) -> BrauerDiagram {
        generator(n, k).unwrap()
    }

    fn word(n: usize, ks: &[Generator]) -> (BrauerDiagram, u32) {
        ks.iter().fold((BrauerDiagram::identity(n), 0), |(d, l), &k| {
            let (p, s) = d.multiply(&g(n, k)).unwrap();
            (p, l + s)
        })
    }

    #[test]
    fn generator_examples() {
        let e1 = g(2, Generator::E(1));
        // top1–top2, bottom1–bottom2; 1-based partner [2,1,4,3]
        assert_eq!(e1.partner(), &[1, 0, 3, 2]);
        let s13 = g(3, Generator::Sij(1, 3));
        assert_eq!(s13.partner(), &[5, 4, 3, 2, 1, 0]);
        assert_eq!(g(3, Generator::Identity).partner(), &[3, 4, 5, 0, 1, 2]);
        assert!(generator(3, Generator::S(3)).is_err());
        assert!(generator(3, Generator::Eij(2, 2)).is_err());
        assert!(generator(3, Generator::Sij(1, 4)).is_err());
    }

    #[test]
    fn multiply_relation_examples() {
        let e1 = g(2, Generator::E(1));
        let s1 = g(2, Generator::S(1));
        assert_eq!(e1.multiply(&e1).unwrap(), (e1.clone(), 1));
        assert_eq!(s1.multiply(&s1).unwrap(), (BrauerDiagram::identity(2), 0));
        let (e1e2, l) = g(3, Generator::E(1)).multiply(&g(3, Generator::E(2))).unwrap();
        assert_eq!(l, 0);
        assert_eq!(e1e2.multiply(&g(3, Generator::E(1))).unwrap(), (g(3, Generator::E(1)), 0));
        assert_eq!(
            e1.multiply(&BrauerDiagram::identity(3)),
            Err(DiagramError::SizeMismatch(2, 3))
        );
    }

    #[test]
    fn composite_generators_match_words() {
        use Generator::*;
        for n in 2..=5 {
            for i in 1..n {
                for j in i + 1..=n {
                    // s_ij = s_i s_{i+1} … s_{j−1} … s_{i+1} s_i
                    let mut w: Vec<Generator> = (i..j).map(S).collect();
                    w.extend((i..j - 1).rev().map(S));
                    assert_eq!(word(n, &w), (g(n, Sij(i, j)), 0));
                    // e_ij = s_{i,j−1} e_{j−1} s_{i,j−1}
                    let e = if i == j - 1 {
                        (g(n, E(i)), 0)
                    } else {
                        word(n, &[Sij(i, j - 1), E(j - 1), Sij(i, j - 1)])
                    };
                    assert_eq!(e, (g(n, Eij(i, j)), 0));
                }
            }
        }
    }

    #[test]
    fn enumeration_counts_and_order() {
        for n in 1..=6 {
            let all = enumerate_diagrams(n).unwrap();
            assert_eq!(all.len() as u64, double_factorial_odd(n));
            assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
        assert_eq!(enumerate_diagrams(7), Err(DiagramError::BoundExceeded { n: 7, bound: 6 }));
    }

    #[test]
    fn embed_examples() {
        assert_eq!(BrauerDiagram::identity(2).embed(3).unwrap(), BrauerDiagram::identity(3));
        assert_eq!(g(2, Generator::E(1)).embed(3).unwrap(), g(3, Generator::E(1)));
        let d = g(3, Generator::Sij(1, 3));
        assert_eq!(d.embed(3).unwrap(), d);
        assert!(matches!(d.embed(2), Err(DiagramError::ShrinkNotAllowed { .. })));
    }

    #[test]
    fn json_is_one_based() {
        let e1 = g(2, Generator::E(1));
        let v = serde_json::to_value(&e1).unwrap();
        assert_eq!(v, serde_json::json!({"n": 2, "partner": [2, 1, 4, 3]}));
        let back: BrauerDiagram = serde_json::from_value(v).unwrap();
        assert_eq!(back, e1);
        assert!(serde_json::from_value::<BrauerDiagram>(serde_json::json!({"n": 2, "partner": [1, 2, 4, 3]})).is_err());
    }

    fn arb_diagram(n: usize) -> impl Strategy<Value = BrauerDiagram> {
        let all = enumerate_diagrams(n).unwrap();
        (0..all.len()).prop_map(move |i| all[i].clone())
    }

    proptest! {
        #[test]
        fn multiplication_associates_with_loops(
            (a, b, c) in (1usize..=5).prop_flat_map(|n| (arb_diagram(n), arb_diagram(n), arb_diagram(n)))
        ) {
            let (ab, l1) = a.multiply(&b).unwrap();
            let (ab_c, l2) = ab.multiply(&c).unwrap();
            let (bc, l3) = b.multiply(&c).unwrap();
            let (a_bc, l4) = a.multiply(&bc).unwrap();
            prop_assert_eq!(ab_c, a_bc);
            prop_assert_eq!(l1 + l2, l3 + l4);
        }

        #[test]
        fn permutations_form_a_group(
            (p, q) in (1usize..=5).prop_flat_map(|n| {
                let perms = Just((0..n).collect::<Vec<_>>()).prop_shuffle();
                (perms.clone(), perms)
            })
        ) {
            let a = BrauerDiagram::from_permutation(&p).unwrap();
            let b = BrauerDiagram::from_permutation(&q).unwrap();
            let (ab, loops) = a.multiply(&b).unwrap();
            prop_assert_eq!(loops, 0);
            prop_assert!(ab.is_permutation());
            // top i -> bottom p[i] -> bottom q[p[i]]
            let composed: Vec<usize> = p.iter().map(|&i| q[i]).collect();
            prop_assert_eq!(ab, BrauerDiagram::from_permutation(&composed).unwrap());
            let inv = {
                let mut v = vec![0; p.len()];
                for (i, &j) in p.iter().enumerate() { v[j] = i; }
                v
            };
            let (id, _) = a.multiply(&BrauerDiagram::from_permutation(&inv).unwrap()).unwrap();
            prop_assert_eq!(id, BrauerDiagram::identity(p.len()));
        }
    }
}
