//! Sparse linear combinations of Brauer diagrams over a coefficient field.

use std::collections::{BTreeMap, HashMap};

use serde_json::{json, Value};
use thiserror::Error;

use crate::diagram::{generator, BrauerDiagram, DiagramError, Generator};
use crate::field::{Field, FieldError, FieldMode, QOmega};
use crate::report::{CheckRecord, VerificationReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("elements live in B_{0} and B_{1}")]
    SizeMismatch(usize, usize),
    #[error("field modes differ: {0} vs {1}")]
    FieldModeMismatch(String, String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("malformed element JSON: {0}")]
    Json(String),
}

/// An element of `B_n(ω)`: diagrams with nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement<E> {
    n: usize,
    mode: FieldMode,
    terms: BTreeMap<BrauerDiagram, E>,
}

impl<E> AlgebraElement<E> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> FieldMode {
        self.mode
    }

    pub fn terms(&self) -> &BTreeMap<BrauerDiagram, E> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, d: &BrauerDiagram) -> Option<&E> {
        self.terms.get(d)
    }

    /// True when every diagram is a permutation.
    pub fn is_permutation_supported(&self) -> bool {
        self.terms.keys().all(BrauerDiagram::is_permutation)
    }
}

/// `B_n(ω)` over a field `F` in which ω is the element `omega`.
#[derive(Debug, Clone)]
pub struct BrauerAlgebra<F: Field> {
    n: usize,
    field: F,
    omega: F::Elem,
    mode: FieldMode,
    omega_pow: Vec<F::Elem>,
}

impl<F: Field> BrauerAlgebra<F> {
    pub fn new(n: usize, field: F, omega: F::Elem, mode: FieldMode) -> Self {
        let mut omega_pow = vec![field.one()];
        for s in 1..=n {
            let next = field.mul(&omega_pow[s - 1], &omega);
            omega_pow.push(next);
        }
        Self {
            n,
            field,
            omega,
            mode,
            omega_pow,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn omega(&self) -> &F::Elem {
        &self.omega
    }

    pub fn mode(&self) -> FieldMode {
        self.mode
    }

    /// The same field and ω in another rank.
    pub fn with_rank(&self, n: usize) -> Self {
        Self::new(n, self.field.clone(), self.omega.clone(), self.mode)
    }

    pub fn zero(&self) -> AlgebraElement<F::Elem> {
        AlgebraElement {
            n: self.n,
            mode: self.mode,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(&self, c: F::Elem) -> AlgebraElement<F::Elem> {
        self.term(BrauerDiagram::identity(self.n), c)
    }

    pub fn one(&self) -> AlgebraElement<F::Elem> {
        self.scalar(self.field.one())
    }

    /// `c · d`
    pub fn term(&self, d: BrauerDiagram, c: F::Elem) -> AlgebraElement<F::Elem> {
        assert_eq!(d.n(), self.n, "diagram rank");
        let mut terms = BTreeMap::new();
        if !self.field.is_zero(&c) {
            terms.insert(d, c);
        }
        AlgebraElement {
            n: self.n,
            mode: self.mode,
            terms,
        }
    }

    pub fn basis(&self, d: BrauerDiagram) -> AlgebraElement<F::Elem> {
        self.term(d, self.field.one())
    }

    /// Sums coefficients of repeated diagrams; drops zeros.
    pub fn from_terms(
        &self,
        terms: impl IntoIterator<Item = (BrauerDiagram, F::Elem)>,
    ) -> Result<AlgebraElement<F::Elem>, AlgebraError> {
        let mut buckets: HashMap<BrauerDiagram, Vec<F::Elem>> = HashMap::new();
        for (d, c) in terms {
            if d.n() != self.n {
                return Err(AlgebraError::SizeMismatch(self.n, d.n()));
            }
            buckets.entry(d).or_default().push(c);
        }
        Ok(self.collect(buckets))
    }

    fn collect(&self, buckets: HashMap<BrauerDiagram, Vec<F::Elem>>) -> AlgebraElement<F::Elem> {
        let terms = buckets
            .into_iter()
            .filter_map(|(d, cs)| {
                let c = if cs.len() == 1 {
                    cs.into_iter().next().expect("one")
                } else {
                    self.field.sum(cs)
                };
                (!self.field.is_zero(&c)).then_some((d, c))
            })
            .collect();
        AlgebraElement {
            n: self.n,
            mode: self.mode,
            terms,
        }
    }

    pub fn gen(&self, kind: Generator) -> Result<AlgebraElement<F::Elem>, AlgebraError> {
        Ok(self.basis(generator(self.n, kind)?))
    }

    fn check(&self, a: &AlgebraElement<F::Elem>) -> Result<(), AlgebraError> {
        if a.n != self.n {
            return Err(AlgebraError::SizeMismatch(self.n, a.n));
        }
        if a.mode != self.mode {
            return Err(AlgebraError::FieldModeMismatch(self.mode.label(), a.mode.label()));
        }
        Ok(())
    }

    pub fn add(
        &self,
        a: &AlgebraElement<F::Elem>,
        b: &AlgebraElement<F::Elem>,
    ) -> Result<AlgebraElement<F::Elem>, AlgebraError> {
        self.check(a)?;
        self.check(b)?;
        let mut terms = a.terms.clone();
        for (d, c) in &b.terms {
            match terms.get_mut(d) {
                Some(x) => {
                    let s = self.field.add(x, c);
                    if self.field.is_zero(&s) {
                        terms.remove(d);
                    } else {
                        *x = s;
                    }
                }
                None => {
                    terms.insert(d.clone(), c.clone());
                }
            }
        }
        Ok(AlgebraElement {
            n: self.n,
            mode: self.mode,
            terms,
        })
    }

    pub fn neg(&self, a: &AlgebraElement<F::Elem>) -> AlgebraElement<F::Elem> {
        AlgebraElement {
            n: a.n,
            mode: a.mode,
            terms: a.terms.iter().map(|(d, c)| (d.clone(), self.field.neg(c))).collect(),
        }
    }

    pub fn sub(
        &self,
        a: &AlgebraElement<F::Elem>,
        b: &AlgebraElement<F::Elem>,
    ) -> Result<AlgebraElement<F::Elem>, AlgebraError> {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &AlgebraElement<F::Elem>, c: &F::Elem) -> AlgebraElement<F::Elem> {
        if self.field.is_zero(c) {
            return AlgebraElement {
                n: a.n,
                mode: a.mode,
                terms: BTreeMap::new(),
            };
        }
        AlgebraElement {
            n: a.n,
            mode: a.mode,
            terms: a.terms.iter().map(|(d, x)| (d.clone(), self.field.mul(x, c))).collect(),
        }
    }

    /// Bilinear extension of diagram concatenation; each closed loop
    /// contributes a factor ω.
    pub fn mul(
        &self,
        a: &AlgebraElement<F::Elem>,
        b: &AlgebraElement<F::Elem>,
    ) -> Result<AlgebraElement<F::Elem>, AlgebraError> {
        self.check(a)?;
        self.check(b)?;
        if let Some(c) = self.as_scalar(a) {
            return Ok(self.scale(b, &c));
        }
        if let Some(c) = self.as_scalar(b) {
            return Ok(self.scale(a, &c));
        }
        let mut buckets: HashMap<BrauerDiagram, Vec<F::Elem>> = HashMap::new();
        for (d1, c1) in &a.terms {
            for (d2, c2) in &b.terms {
                let (d, loops) = d1.multiply(d2)?;
                let mut c = self.field.mul(c1, c2);
                if loops > 0 {
                    c = self.field.mul(&c, &self.omega_pow[loops as usize]);
                }
                buckets.entry(d).or_default().push(c);
            }
        }
        Ok(self.collect(buckets))
    }

    /// `a · (1 + c·d)` for a single diagram `d`, without a general product.
    pub fn mul_one_plus(
        &self,
        a: &AlgebraElement<F::Elem>,
        d: &BrauerDiagram,
        c: &F::Elem,
    ) -> Result<AlgebraElement<F::Elem>, AlgebraError> {
        self.check(a)?;
        if d.n() != self.n {
            return Err(AlgebraError::SizeMismatch(self.n, d.n()));
        }
        let mut buckets: HashMap<BrauerDiagram, Vec<F::Elem>> = HashMap::new();
        for (d1, c1) in &a.terms {
            buckets.entry(d1.clone()).or_default().push(c1.clone());
            let (prod, loops) = d1.multiply(d)?;
            let mut x = self.field.mul(c1, c);
            if loops > 0 {
                x = self.field.mul(&x, &self.omega_pow[loops as usize]);
            }
            buckets.entry(prod).or_default().push(x);
        }
        Ok(self.collect(buckets))
    }

    /// Product of a sequence, left to right.
    pub fn product<'a>(
        &self,
        factors: impl IntoIterator<Item = &'a AlgebraElement<F::Elem>>,
    ) -> Result<AlgebraElement<F::Elem>, AlgebraError>
    where
        F::Elem: 'a,
    {
        let mut acc = self.one();
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    /// The coefficient if `a` is a multiple of the identity.
    pub fn as_scalar(&self, a: &AlgebraElement<F::Elem>) -> Option<F::Elem> {
        match a.terms.len() {
            0 => Some(self.field.zero()),
            1 => {
                let (d, c) = a.terms.iter().next().expect("one term");
                (*d == BrauerDiagram::identity(self.n)).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn commutator(
        &self,
        a: &AlgebraElement<F::Elem>,
        b: &AlgebraElement<F::Elem>,
    ) -> Result<AlgebraElement<F::Elem>, AlgebraError> {
        self.sub(&self.mul(a, b)?, &self.mul(b, a)?)
    }

    /// `a · a == a`, exactly.
    pub fn is_idempotent(&self, a: &AlgebraElement<F::Elem>) -> bool {
        self.mul(a, a).map(|sq| sq == *a).unwrap_or(false)
    }

    /// Jucys–Murphy element `x_r = (ω−1)/2 + Σ_{k<r} (s_{kr} − e_{kr})`.
    pub fn jucys_murphy(&self, r: usize) -> Result<AlgebraElement<F::Elem>, AlgebraError> {
        if r == 0 || r > self.n {
            return Err(AlgebraError::IndexOutOfRange(format!("x_{r} in B_{}", self.n)));
        }
        self.jm_sum(r - 1, r)
    }

    /// `x_k^{(m)} = (ω−1)/2 + Σ_{i<k} (s_{im} − e_{im})` in `B_m`, `m = self.n`.
    pub fn jm_variant(&self, k: usize, m: usize) -> Result<AlgebraElement<F::Elem>, AlgebraError> {
        if m != self.n || k == 0 || k > m {
            return Err(AlgebraError::IndexOutOfRange(format!("x_{k}^({m}) in B_{}", self.n)));
        }
        self.jm_sum(k - 1, m)
    }

    /// `(ω−1)/2 + Σ_{i=1}^{count} (s_{i,target} − e_{i,target})`
    fn jm_sum(&self, count: usize, target: usize) -> Result<AlgebraElement<F::Elem>, AlgebraError> {
        let f = &self.field;
        let half_shift = f.div(&f.sub(&self.omega, &f.one()), &f.from_i64(2))?;
        let mut terms = vec![(BrauerDiagram::identity(self.n), half_shift)];
        for i in 1..=count {
            terms.push((generator(self.n, Generator::Sij(i, target))?, f.one()));
            terms.push((generator(self.n, Generator::Eij(i, target))?, f.from_i64(-1)));
        }
        self.from_terms(terms)
    }

    /// Embeds an element of a smaller-rank algebra over the same field.
    pub fn embed(&self, a: &AlgebraElement<F::Elem>) -> Result<AlgebraElement<F::Elem>, AlgebraError> {
        if a.mode != self.mode {
            return Err(AlgebraError::FieldModeMismatch(self.mode.label(), a.mode.label()));
        }
        let terms = a
            .terms
            .iter()
            .map(|(d, c)| Ok((d.embed(self.n)?, c.clone())))
            .collect::<Result<BTreeMap<_, _>, DiagramError>>()?;
        Ok(AlgebraElement {
            n: self.n,
            mode: self.mode,
            terms,
        })
    }

    /// Moves an element into another algebra by mapping coefficients.
    pub fn map_into<G: Field>(
        &self,
        target: &BrauerAlgebra<G>,
        a: &AlgebraElement<F::Elem>,
        map: impl Fn(&F::Elem) -> Result<G::Elem, FieldError>,
    ) -> Result<AlgebraElement<G::Elem>, AlgebraError> {
        let mut terms = BTreeMap::new();
        for (d, c) in &a.terms {
            let d = d.embed(target.n)?;
            let c = map(c)?;
            if !target.field.is_zero(&c) {
                terms.insert(d, c);
            }
        }
        Ok(AlgebraElement {
            n: target.n,
            mode: target.mode,
            terms,
        })
    }

    /// `a = λ · b` for a nonzero scalar λ; returns λ.
    pub fn proportionality(
        &self,
        a: &AlgebraElement<F::Elem>,
        b: &AlgebraElement<F::Elem>,
    ) -> Option<F::Elem> {
        let (d, cb) = b.terms.iter().next()?;
        let ca = a.terms.get(d)?;
        let ratio = self.field.div(ca, cb).ok()?;
        (self.scale(b, &ratio) == *a).then_some(ratio)
    }

    /// Human-readable form, e.g. `1/2*{1-1', 2-2'} + …`.
    pub fn format(&self, a: &AlgebraElement<F::Elem>) -> String {
        if a.terms.is_empty() {
            return "0".to_string();
        }
        a.terms
            .iter()
            .map(|(d, c)| format!("({})*{}", self.field.format(c), d))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    pub fn to_json(&self, a: &AlgebraElement<F::Elem>) -> Value {
        let terms: Vec<Value> = a
            .terms
            .iter()
            .map(|(d, c)| json!({"diagram": d, "coeff": self.field.to_json(c)}))
            .collect();
        json!({"n": a.n, "mode": a.mode, "terms": terms})
    }

    pub fn from_json(&self, v: &Value) -> Result<AlgebraElement<F::Elem>, AlgebraError> {
        let bad = |m: &str| AlgebraError::Json(m.to_string());
        let n = v.get("n").and_then(Value::as_u64).ok_or_else(|| bad("missing n"))? as usize;
        if n != self.n {
            return Err(AlgebraError::SizeMismatch(self.n, n));
        }
        let mode: FieldMode =
            serde_json::from_value(v.get("mode").cloned().ok_or_else(|| bad("missing mode"))?)
                .map_err(|e| bad(&e.to_string()))?;
        if mode != self.mode {
            return Err(AlgebraError::FieldModeMismatch(self.mode.label(), mode.label()));
        }
        let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing terms"))?;
        let parsed = terms
            .iter()
            .map(|t| {
                let d: BrauerDiagram = serde_json::from_value(t.get("diagram").cloned().ok_or_else(|| bad("missing diagram"))?)
                    .map_err(|e| bad(&e.to_string()))?;
                let c = self.field.from_json(t.get("coeff").ok_or_else(|| bad("missing coeff"))?)?;
                Ok((d, c))
            })
            .collect::<Result<Vec<_>, AlgebraError>>()?;
        self.from_terms(parsed)
    }
}

/// `B_n(ω)` over `Q(ω)`.
pub fn exact_algebra(n: usize) -> BrauerAlgebra<QOmega> {
    let f = QOmega::omega();
    let w = f.gen();
    BrauerAlgebra::new(n, f, w, FieldMode::ExactOmega)
}

/// Checks every defining relation of the standard presentation on the
/// generator diagrams of `B_n(ω)` over `Q(ω)`.
pub fn verify_presentation(n: usize) -> Result<VerificationReport, AlgebraError> {
    verify_presentation_in(&exact_algebra(n))
}

/// [`verify_presentation`] in an arbitrary realization of `B_n(ω)`.
pub fn verify_presentation_in<F: Field>(alg: &BrauerAlgebra<F>) -> Result<VerificationReport, AlgebraError> {
    let started = std::time::Instant::now();
    let n = alg.n();
    let s = |i| alg.gen(Generator::S(i));
    let e = |i| alg.gen(Generator::E(i));
    let w = alg.omega().clone();
    let mut records = Vec::new();
    let mut check = |id: String, lhs: AlgebraElement<_>, rhs: AlgebraElement<_>| {
        let passed = lhs == rhs;
        records.push(CheckRecord::new(id, format!("n={n}"), passed, if passed { String::new() } else { "sides differ".into() }));
    };
    let m = |a: &AlgebraElement<_>, b: &AlgebraElement<_>| alg.mul(a, b);
    for i in 1..n {
        let (si, ei) = (s(i)?, e(i)?);
        check(format!("s{i}^2=1"), m(&si, &si)?, alg.one());
        check(format!("e{i}^2=ωe{i}"), m(&ei, &ei)?, alg.scale(&ei, &w));
        check(format!("s{i}e{i}=e{i}"), m(&si, &ei)?, ei.clone());
        check(format!("e{i}s{i}=e{i}"), m(&ei, &si)?, ei.clone());
    }
    for i in 1..n {
        for j in i + 2..n {
            let (si, sj, ei, ej) = (s(i)?, s(j)?, e(i)?, e(j)?);
            check(format!("s{i}s{j}=s{j}s{i}"), m(&si, &sj)?, m(&sj, &si)?);
            check(format!("e{i}e{j}=e{j}e{i}"), m(&ei, &ej)?, m(&ej, &ei)?);
            check(format!("s{i}e{j}=e{j}s{i}"), m(&si, &ej)?, m(&ej, &si)?);
            check(format!("s{j}e{i}=e{i}s{j}"), m(&sj, &ei)?, m(&ei, &sj)?);
        }
    }
    for i in 1..n.saturating_sub(1) {
        let j = i + 1;
        let (si, sj, ei, ej) = (s(i)?, s(j)?, e(i)?, e(j)?);
        check(format!("s{i}s{j}s{i}=s{j}s{i}s{j}"), alg.product([&si, &sj, &si])?, alg.product([&sj, &si, &sj])?);
        check(format!("e{i}e{j}e{i}=e{i}"), alg.product([&ei, &ej, &ei])?, ei.clone());
        check(format!("e{j}e{i}e{j}=e{j}"), alg.product([&ej, &ei, &ej])?, ej.clone());
        check(format!("s{i}e{j}e{i}=s{j}e{i}"), alg.product([&si, &ej, &ei])?, m(&sj, &ei)?);
        check(format!("e{j}e{i}s{j}=e{j}s{i}"), alg.product([&ej, &ei, &sj])?, m(&ej, &si)?);
    }
    Ok(VerificationReport::new("presentation", records, started.elapsed()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::enumerate_diagrams;
    use crate::field::PrimeField;
    use proptest::prelude::*;

    #[test]
    fn element_mul_examples() {
        let alg = exact_algebra(2);
        let e1 = alg.gen(Generator::E(1)).unwrap();
        let s1 = alg.gen(Generator::S(1)).unwrap();
        let w = alg.field().gen();
        assert_eq!(alg.mul(&e1, &e1).unwrap(), alg.scale(&e1, &w));
        assert_eq!(alg.mul(&s1, &e1).unwrap(), e1);
        let one = alg.one();
        let a = alg.sub(&one, &s1).unwrap();
        let b = alg.add(&one, &s1).unwrap();
        assert!(alg.mul(&a, &b).unwrap().is_zero());
    }

    #[test]
    fn mismatches_are_reported() {
        let a2 = exact_algebra(2);
        let a3 = exact_algebra(3);
        assert_eq!(a2.mul(&a2.one(), &a3.one()), Err(AlgebraError::SizeMismatch(2, 3)));
        let fp = PrimeField::new(101).unwrap();
        let m1 = BrauerAlgebra::new(2, fp, 5, FieldMode::PrimeModular { prime: 101, omega: 5 });
        let m2 = BrauerAlgebra::new(2, fp, 7, FieldMode::PrimeModular { prime: 101, omega: 7 });
        assert!(matches!(m1.mul(&m1.one(), &m2.one()), Err(AlgebraError::FieldModeMismatch(..))));
    }

    #[test]
    fn jucys_murphy_examples() {
        let alg = exact_algebra(2);
        let f = alg.field();
        let half = f.div(&f.sub(&f.gen(), &f.one()), &f.from_i64(2)).unwrap();
        assert_eq!(alg.jucys_murphy(1).unwrap(), alg.scalar(half.clone()));
        let x2 = alg.jucys_murphy(2).unwrap();
        let expect = alg
            .from_terms([
                (BrauerDiagram::identity(2), half.clone()),
                (generator(2, Generator::S(1)).unwrap(), f.one()),
                (generator(2, Generator::E(1)).unwrap(), f.from_i64(-1)),
            ])
            .unwrap();
        assert_eq!(x2, expect);
        assert!(alg.jucys_murphy(3).is_err());
        assert!(alg.jucys_murphy(0).is_err());

        let b3 = exact_algebra(3);
        let x2 = b3.jucys_murphy(2).unwrap();
        let x3 = b3.jucys_murphy(3).unwrap();
        assert!(b3.commutator(&x2, &x3).unwrap().is_zero());
    }

    #[test]
    fn jm_variant_examples() {
        let b2 = exact_algebra(2);
        assert_eq!(b2.jm_variant(2, 2).unwrap(), b2.jucys_murphy(2).unwrap());
        let b3 = exact_algebra(3);
        let f = b3.field();
        let half = f.div(&f.sub(&f.gen(), &f.one()), &f.from_i64(2)).unwrap();
        let expect = b3
            .from_terms([
                (BrauerDiagram::identity(3), half.clone()),
                (generator(3, Generator::Sij(1, 3)).unwrap(), f.one()),
                (generator(3, Generator::Eij(1, 3)).unwrap(), f.from_i64(-1)),
            ])
            .unwrap();
        assert_eq!(b3.jm_variant(2, 3).unwrap(), expect);
        assert_eq!(b3.jm_variant(1, 3).unwrap(), b3.scalar(half));
        assert!(b3.jm_variant(2, 4).is_err());
    }

    #[test]
    fn idempotent_examples() {
        let alg = exact_algebra(2);
        let f = alg.field();
        assert!(alg.is_idempotent(&alg.one()));
        let e1 = alg.gen(Generator::E(1)).unwrap();
        let e_over_w = alg.scale(&e1, &f.inv(&f.gen()).unwrap());
        assert!(alg.is_idempotent(&e_over_w));
        assert!(!alg.is_idempotent(&alg.gen(Generator::S(1)).unwrap()));
    }

    #[test]
    fn presentation_small_cases() {
        for n in 2..=4 {
            let r = verify_presentation(n).unwrap();
            assert!(r.all_passed(), "{r:?}");
        }
        assert_eq!(verify_presentation(2).unwrap().records.len(), 4);
    }

    #[test]
    fn mul_one_plus_matches_product() {
        let alg = exact_algebra(3);
        let f = alg.field();
        let x = alg.add(&alg.jucys_murphy(3).unwrap(), &alg.gen(Generator::E(1)).unwrap()).unwrap();
        let d = generator(3, Generator::Eij(1, 3)).unwrap();
        let c = f.inv(&f.add(&f.gen(), &f.from_i64(2))).unwrap();
        let factor = alg.add(&alg.one(), &alg.term(d.clone(), c.clone())).unwrap();
        assert_eq!(alg.mul_one_plus(&x, &d, &c).unwrap(), alg.mul(&x, &factor).unwrap());
    }

    #[test]
    fn json_roundtrip() {
        let alg = exact_algebra(3);
        let x = alg.jucys_murphy(3).unwrap();
        let v = alg.to_json(&x);
        assert_eq!(v["terms"].as_array().unwrap().len(), 5);
        assert_eq!(alg.from_json(&v).unwrap(), x);
        assert!(exact_algebra(2).from_json(&v).is_err());
    }

    fn arb_element(n: usize) -> impl Strategy<Value = Vec<(usize, i64, i64)>> {
        let count = enumerate_diagrams(n).unwrap().len();
        prop::collection::vec((0..count, -3i64..=3, 0i64..=2), 1..4)
    }

    fn build(alg: &BrauerAlgebra<QOmega>, spec: &[(usize, i64, i64)]) -> AlgebraElement<crate::field::QOmegaElem> {
        let all = enumerate_diagrams(alg.n()).unwrap();
        let f = alg.field();
        alg.from_terms(spec.iter().map(|&(i, a, b)| {
            // a + b·ω
            (all[i].clone(), f.add(&f.from_i64(a), &f.mul(&f.from_i64(b), &f.gen())))
        }))
        .unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn multiplication_is_associative(
            (n, a, b, c) in (1usize..=4).prop_flat_map(|n| (Just(n), arb_element(n), arb_element(n), arb_element(n)))
        ) {
            let alg = exact_algebra(n);
            let (a, b, c) = (build(&alg, &a), build(&alg, &b), build(&alg, &c));
            let left = alg.mul(&alg.mul(&a, &b).unwrap(), &c).unwrap();
            let right = alg.mul(&a, &alg.mul(&b, &c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
    }
}
