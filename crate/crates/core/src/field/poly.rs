use super::{Field, FieldError};

/// Dense univariate polynomial, coefficients in ascending degree order.
///
/// Canonical: empty for zero, otherwise the last coefficient is nonzero.
/// Only a [`PolyRing`] can build one, which keeps the invariant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<E> {
    coeffs: Vec<E>,
}

impl<E> Polynomial<E> {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&E> {
        self.coeffs.last()
    }
}

/// Polynomials in one variable over `F`.
#[derive(Debug, Clone)]
pub struct PolyRing<F: Field> {
    base: F,
    var: &'static str,
}

impl<F: Field> PolyRing<F> {
    pub fn new(base: F, var: &'static str) -> Self {
        Self { base, var }
    }

    pub fn base(&self) -> &F {
        &self.base
    }

    pub fn var(&self) -> &'static str {
        self.var
    }

    pub fn from_coeffs(&self, mut coeffs: Vec<F::Elem>) -> Polynomial<F::Elem> {
        while coeffs.last().is_some_and(|c| self.base.is_zero(c)) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn constant(&self, c: F::Elem) -> Polynomial<F::Elem> {
        self.from_coeffs(vec![c])
    }

    pub fn one(&self) -> Polynomial<F::Elem> {
        self.constant(self.base.one())
    }

    /// The generator `t`.
    pub fn gen(&self) -> Polynomial<F::Elem> {
        self.from_coeffs(vec![self.base.zero(), self.base.one()])
    }

    /// `t - c`.
    pub fn linear_root(&self, c: &F::Elem) -> Polynomial<F::Elem> {
        self.from_coeffs(vec![self.base.neg(c), self.base.one()])
    }

    pub fn is_one(&self, a: &Polynomial<F::Elem>) -> bool {
        a.coeffs.len() == 1 && self.base.is_one(&a.coeffs[0])
    }

    pub fn add(&self, a: &Polynomial<F::Elem>, b: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        let (long, short) = if a.coeffs.len() >= b.coeffs.len() { (a, b) } else { (b, a) };
        let mut out = long.coeffs.clone();
        for (o, s) in out.iter_mut().zip(&short.coeffs) {
            *o = self.base.add(o, s);
        }
        self.from_coeffs(out)
    }

    pub fn neg(&self, a: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        Polynomial {
            coeffs: a.coeffs.iter().map(|c| self.base.neg(c)).collect(),
        }
    }

    pub fn sub(&self, a: &Polynomial<F::Elem>, b: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &Polynomial<F::Elem>, c: &F::Elem) -> Polynomial<F::Elem> {
        if self.base.is_zero(c) {
            return Polynomial::zero();
        }
        if self.base.is_one(c) {
            return a.clone();
        }
        self.from_coeffs(a.coeffs.iter().map(|x| self.base.mul(x, c)).collect())
    }

    pub fn mul(&self, a: &Polynomial<F::Elem>, b: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        if a.is_zero() || b.is_zero() {
            return Polynomial::zero();
        }
        if a.coeffs.len() == 1 {
            return self.scale(b, &a.coeffs[0]);
        }
        if b.coeffs.len() == 1 {
            return self.scale(a, &b.coeffs[0]);
        }
        let mut buckets: Vec<Vec<F::Elem>> = vec![Vec::new(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if self.base.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !self.base.is_zero(y) {
                    buckets[i + j].push(self.base.mul(x, y));
                }
            }
        }
        self.from_coeffs(buckets.into_iter().map(|b| self.base.sum(b)).collect())
    }

    /// Euclidean division; `b` must be nonzero.
    pub fn div_rem(
        &self,
        a: &Polynomial<F::Elem>,
        b: &Polynomial<F::Elem>,
    ) -> Result<(Polynomial<F::Elem>, Polynomial<F::Elem>), FieldError> {
        let lead = b.leading().ok_or(FieldError::InversionOfZero)?;
        let lead_inv = self.base.inv(lead)?;
        let db = b.coeffs.len() - 1;
        if a.coeffs.len() < b.coeffs.len() {
            return Ok((Polynomial::zero(), a.clone()));
        }
        let mut rem = a.coeffs.clone();
        let mut quot = vec![self.base.zero(); a.coeffs.len() - db];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + db];
            if self.base.is_zero(top) {
                continue;
            }
            let q = self.base.mul(top, &lead_inv);
            for (j, bc) in b.coeffs.iter().enumerate() {
                let t = self.base.mul(&q, bc);
                rem[k + j] = self.base.sub(&rem[k + j], &t);
            }
            quot[k] = q;
        }
        rem.truncate(db);
        Ok((self.from_coeffs(quot), self.from_coeffs(rem)))
    }

    /// Exact quotient; `b` must divide `a`.
    pub fn div_exact(
        &self,
        a: &Polynomial<F::Elem>,
        b: &Polynomial<F::Elem>,
    ) -> Polynomial<F::Elem> {
        if self.is_one(b) {
            return a.clone();
        }
        let (q, r) = self.div_rem(a, b).expect("nonzero divisor");
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Splits off the leading coefficient: `a = lc * monic`. Zero stays zero
    /// with `lc = 1`.
    pub fn monic(&self, a: &Polynomial<F::Elem>) -> (F::Elem, Polynomial<F::Elem>) {
        match a.leading() {
            None => (self.base.one(), Polynomial::zero()),
            Some(lc) if self.base.is_one(lc) => (lc.clone(), a.clone()),
            Some(lc) => {
                let inv = self.base.inv(lc).expect("leading coefficient is nonzero");
                (lc.clone(), self.scale(a, &inv))
            }
        }
    }

    /// Monic greatest common divisor; `gcd(a, 0) = monic(a)`, `gcd(0, 0) = 0`.
    pub fn gcd(&self, a: &Polynomial<F::Elem>, b: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        let (mut x, mut y) = (self.monic(a).1, self.monic(b).1);
        if x.coeffs.len() < y.coeffs.len() {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.is_zero() {
            if y.coeffs.len() == 1 {
                return self.one();
            }
            let (_, r) = self.div_rem(&x, &y).expect("nonzero divisor");
            x = y;
            y = self.monic(&r).1;
        }
        x
    }

    pub fn eval(&self, a: &Polynomial<F::Elem>, x: &F::Elem) -> F::Elem {
        a.coeffs
            .iter()
            .rev()
            .fold(self.base.zero(), |acc, c| self.base.add(&self.base.mul(&acc, x), c))
    }

    /// Synthetic division by `t - c`: returns `(quotient, a(c))`.
    pub fn div_linear(&self, a: &Polynomial<F::Elem>, c: &F::Elem) -> (Polynomial<F::Elem>, F::Elem) {
        if a.is_zero() {
            return (Polynomial::zero(), self.base.zero());
        }
        let mut quot = vec![self.base.zero(); a.coeffs.len() - 1];
        let mut carry = self.base.zero();
        for k in (0..a.coeffs.len()).rev() {
            let v = self.base.add(&a.coeffs[k], &self.base.mul(&carry, c));
            if k > 0 {
                quot[k - 1] = v.clone();
            }
            carry = v;
        }
        (self.from_coeffs(quot), carry)
    }

    /// Multiplicity of `c` as a root of nonzero `a`, with the cofactor.
    pub fn root_multiplicity(
        &self,
        a: &Polynomial<F::Elem>,
        c: &F::Elem,
    ) -> (usize, Polynomial<F::Elem>) {
        let mut mult = 0;
        let mut cur = a.clone();
        loop {
            let (q, r) = self.div_linear(&cur, c);
            if !self.base.is_zero(&r) || cur.is_zero() {
                return (mult, cur);
            }
            mult += 1;
            cur = q;
        }
    }

    /// Renders with the highest degree first, e.g. `1/2*ω^2 - ω + 3`.
    pub fn format(&self, a: &Polynomial<F::Elem>) -> String {
        if a.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in a.coeffs.iter().enumerate().rev() {
            if self.base.is_zero(c) {
                continue;
            }
            let mut s = self.base.format(c);
            let negative = s.starts_with('-') && !needs_parens(&s[1..]);
            if negative {
                s.remove(0);
            }
            if needs_parens(&s) {
                s = format!("({s})");
            }
            let mono = match k {
                0 => String::new(),
                1 => self.var.to_string(),
                _ => format!("{}^{}", self.var, k),
            };
            let term = match (k, s.as_str()) {
                (0, _) => s,
                (_, "1") => mono,
                _ => format!("{s}*{mono}"),
            };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            out.push_str(&term);
        }
        out
    }
}

fn needs_parens(s: &str) -> bool {
    s.contains(' ') || s.contains('(')
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn ring() -> PolyRing<Rationals> {
        PolyRing::new(Rationals, "ω")
    }

    fn p(c: &[i64]) -> Polynomial<num::BigRational> {
        let r = ring();
        r.from_coeffs(c.iter().map(|&x| Rationals.from_i64(x)).collect())
    }

    #[test]
    fn gcd_examples() {
        let r = ring();
        // gcd(ω² − 1, ω − 1) = ω − 1
        assert_eq!(r.gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])), p(&[-1, 1]));
        // gcd(p, 0) = monic(p)
        assert_eq!(r.gcd(&p(&[4, 2]), &Polynomial::zero()), p(&[2, 1]));
        assert_eq!(r.gcd(&p(&[1, 1]), &p(&[2, 0, 1])), p(&[1]));
    }

    #[test]
    fn division_identity() {
        let r = ring();
        let a = p(&[3, -2, 0, 5, 1]);
        let b = p(&[1, 0, 2]);
        let (q, rem) = r.div_rem(&a, &b).unwrap();
        assert_eq!(r.add(&r.mul(&q, &b), &rem), a);
        assert!(rem.degree() < b.degree());
    }

    #[test]
    fn root_multiplicity_and_eval() {
        let r = ring();
        let c = Rationals.from_i64(2);
        // (ω − 2)² (ω + 1)
        let a = r.mul(&r.mul(&p(&[-2, 1]), &p(&[-2, 1])), &p(&[1, 1]));
        let (m, co) = r.root_multiplicity(&a, &c);
        assert_eq!(m, 2);
        assert_eq!(co, p(&[1, 1]));
        assert_eq!(r.eval(&a, &Rationals.from_i64(3)), Rationals.from_i64(4));
    }

    #[test]
    fn formatting() {
        let r = ring();
        assert_eq!(r.format(&p(&[-1, 0, 2])), "2*ω^2 - 1");
        assert_eq!(r.format(&p(&[0, -1])), "-ω");
        assert_eq!(r.format(&Polynomial::zero()), "0");
    }
}
