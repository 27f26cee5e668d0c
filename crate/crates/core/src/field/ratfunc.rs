use std::collections::HashMap;

use serde_json::{json, Value};

use super::{Field, FieldError, PolyRing, Polynomial};

/// A fraction `num / den` of polynomials.
///
/// Canonical form: `gcd(num, den) = 1` and `den` is monic; zero is `0 / 1`.
/// Structural equality is therefore field equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction<E> {
    pub num: Polynomial<E>,
    pub den: Polynomial<E>,
}

/// The field of rational functions `F(t)`.
#[derive(Debug, Clone)]
pub struct RatFuncField<F: Field> {
    ring: PolyRing<F>,
}

impl<F: Field> RatFuncField<F> {
    pub fn new(base: F, var: &'static str) -> Self {
        Self {
            ring: PolyRing::new(base, var),
        }
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn base(&self) -> &F {
        self.ring.base()
    }

    /// Builds `num / den` in canonical form.
    pub fn make(
        &self,
        num: Polynomial<F::Elem>,
        den: Polynomial<F::Elem>,
    ) -> Result<RationalFunction<F::Elem>, FieldError> {
        if den.is_zero() {
            return Err(FieldError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(self.zero());
        }
        let g = self.ring.gcd(&num, &den);
        let (num, den) = if self.ring.is_one(&g) {
            (num, den)
        } else {
            (self.ring.div_exact(&num, &g), self.ring.div_exact(&den, &g))
        };
        Ok(self.normalize_lead(num, den))
    }

    fn normalize_lead(
        &self,
        num: Polynomial<F::Elem>,
        den: Polynomial<F::Elem>,
    ) -> RationalFunction<F::Elem> {
        let lc = den.leading().expect("nonzero denominator");
        if self.base().is_one(lc) {
            return RationalFunction { num, den };
        }
        let inv = self.base().inv(lc).expect("nonzero leading coefficient");
        RationalFunction {
            num: self.ring.scale(&num, &inv),
            den: self.ring.scale(&den, &inv),
        }
    }

    pub fn from_poly(&self, p: Polynomial<F::Elem>) -> RationalFunction<F::Elem> {
        RationalFunction {
            num: p,
            den: self.ring.one(),
        }
    }

    /// Embeds a base-field element as a constant.
    pub fn constant(&self, c: F::Elem) -> RationalFunction<F::Elem> {
        self.from_poly(self.ring.constant(c))
    }

    /// The transcendental generator `t`.
    pub fn gen(&self) -> RationalFunction<F::Elem> {
        self.from_poly(self.ring.gen())
    }

    /// `1 / (t - c)` style helper: `a / (t - c)`.
    pub fn over_linear(&self, a: &F::Elem, c: &F::Elem) -> RationalFunction<F::Elem> {
        self.make(self.ring.constant(a.clone()), self.ring.linear_root(c))
            .expect("linear denominator is nonzero")
    }

    /// The base-field value of a constant, if `f` is one.
    pub fn as_constant(&self, f: &RationalFunction<F::Elem>) -> Option<F::Elem> {
        match f.num.degree() {
            None => Some(self.base().zero()),
            Some(0) if f.den.degree() == Some(0) => Some(f.num.coeffs()[0].clone()),
            _ => None,
        }
    }

    /// Order of vanishing of `f` at `t = c`; negative for a pole.
    pub fn valuation_at(&self, f: &RationalFunction<F::Elem>, c: &F::Elem) -> Result<i64, FieldError> {
        if f.num.is_zero() {
            return Err(FieldError::ZeroInput);
        }
        let (zn, _) = self.ring.root_multiplicity(&f.num, c);
        let (zd, _) = self.ring.root_multiplicity(&f.den, c);
        Ok(zn as i64 - zd as i64)
    }

    /// Value of `(t - c)^shift * f` at `t = c`.
    ///
    /// Zero when `f` vanishes to order greater than `-shift`; an error when the
    /// pole order of `f` at `c` exceeds `shift`.
    pub fn shift_and_eval(
        &self,
        f: &RationalFunction<F::Elem>,
        c: &F::Elem,
        shift: i64,
    ) -> Result<F::Elem, FieldError> {
        if f.num.is_zero() {
            return Ok(self.base().zero());
        }
        let (zn, num_rest) = self.ring.root_multiplicity(&f.num, c);
        let (zd, den_rest) = self.ring.root_multiplicity(&f.den, c);
        let v = zn as i64 - zd as i64;
        if v + shift < 0 {
            return Err(FieldError::PoleAtEvaluationPoint { order: -v, shift });
        }
        if v + shift > 0 {
            return Ok(self.base().zero());
        }
        let n = self.ring.eval(&num_rest, c);
        let d = self.ring.eval(&den_rest, c);
        self.base().div(&n, &d)
    }

    /// Laurent expansion at `t = 0`: the valuation `v` and the coefficients of
    /// `t^v, …, t^(v + terms − 1)`.
    pub fn laurent_at_zero(
        &self,
        f: &RationalFunction<F::Elem>,
        terms: usize,
    ) -> Result<(i64, Vec<F::Elem>), FieldError> {
        if f.num.is_zero() {
            return Err(FieldError::ZeroInput);
        }
        let base = self.base();
        let zero = base.zero();
        let (zn, num) = self.ring.root_multiplicity(&f.num, &zero);
        let (zd, den) = self.ring.root_multiplicity(&f.den, &zero);
        let d0_inv = base.inv(&den.coeffs()[0])?;
        let mut out: Vec<F::Elem> = Vec::with_capacity(terms);
        for k in 0..terms {
            let mut acc = num.coeffs().get(k).cloned().unwrap_or_else(|| base.zero());
            for (j, d) in den.coeffs().iter().enumerate().skip(1).take(k) {
                acc = base.sub(&acc, &base.mul(d, &out[k - j]));
            }
            out.push(base.mul(&acc, &d0_inv));
        }
        Ok((zn as i64 - zd as i64, out))
    }

    /// Plain substitution `t = c`; fails at a pole.
    pub fn eval_at(&self, f: &RationalFunction<F::Elem>, c: &F::Elem) -> Result<F::Elem, FieldError> {
        self.shift_and_eval(f, c, 0)
    }

    /// Applies a base-field map coefficient-wise, then re-canonicalizes.
    pub fn map_coeffs<G: Field>(
        &self,
        target: &RatFuncField<G>,
        f: &RationalFunction<F::Elem>,
        map: impl Fn(&F::Elem) -> Result<G::Elem, FieldError>,
    ) -> Result<RationalFunction<G::Elem>, FieldError> {
        let conv = |p: &Polynomial<F::Elem>| -> Result<Polynomial<G::Elem>, FieldError> {
            Ok(target
                .ring
                .from_coeffs(p.coeffs().iter().map(&map).collect::<Result<_, _>>()?))
        };
        target.make(conv(&f.num)?, conv(&f.den)?)
    }
}

impl<F: Field> Field for RatFuncField<F> {
    type Elem = RationalFunction<F::Elem>;

    fn zero(&self) -> Self::Elem {
        RationalFunction {
            num: Polynomial::zero(),
            den: self.ring.one(),
        }
    }

    fn one(&self) -> Self::Elem {
        self.constant(self.base().one())
    }

    fn from_i64(&self, v: i64) -> Self::Elem {
        self.constant(self.base().from_i64(v))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.num.is_zero()
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.num.is_zero() {
            return b.clone();
        }
        if b.num.is_zero() {
            return a.clone();
        }
        if a.den == b.den {
            let num = self.ring.add(&a.num, &b.num);
            return self.make(num, a.den.clone()).expect("nonzero denominator");
        }
        let g = self.ring.gcd(&a.den, &b.den);
        let ad = self.ring.div_exact(&a.den, &g);
        let bd = self.ring.div_exact(&b.den, &g);
        let num = self.ring.add(&self.ring.mul(&a.num, &bd), &self.ring.mul(&b.num, &ad));
        let den = self.ring.mul(&ad, &b.den);
        self.make(num, den).expect("nonzero denominator")
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        RationalFunction {
            num: self.ring.neg(&a.num),
            den: a.den.clone(),
        }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.num.is_zero() || b.num.is_zero() {
            return self.zero();
        }
        // Cross-cancel; both inputs are already reduced.
        let g1 = self.ring.gcd(&a.num, &b.den);
        let g2 = self.ring.gcd(&b.num, &a.den);
        let num = self.ring.mul(&self.ring.div_exact(&a.num, &g1), &self.ring.div_exact(&b.num, &g2));
        let den = self.ring.mul(&self.ring.div_exact(&a.den, &g2), &self.ring.div_exact(&b.den, &g1));
        self.normalize_lead(num, den)
    }

    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, FieldError> {
        if a.num.is_zero() {
            return Err(FieldError::InversionOfZero);
        }
        Ok(self.normalize_lead(a.den.clone(), a.num.clone()))
    }

    fn format(&self, a: &Self::Elem) -> String {
        let num = self.ring.format(&a.num);
        if self.ring.is_one(&a.den) {
            return num;
        }
        let den = self.ring.format(&a.den);
        let wrap = |s: String| if s.contains(' ') { format!("({s})") } else { s };
        format!("{}/{}", wrap(num), wrap(den))
    }

    fn to_json(&self, a: &Self::Elem) -> Value {
        let list = |p: &Polynomial<F::Elem>| -> Value {
            Value::Array(p.coeffs().iter().map(|c| self.base().to_json(c)).collect())
        };
        json!({ "num": list(&a.num), "den": list(&a.den) })
    }

    fn from_json(&self, v: &Value) -> Result<Self::Elem, FieldError> {
        let list = |key: &str| -> Result<Polynomial<F::Elem>, FieldError> {
            let arr = v
                .get(key)
                .and_then(Value::as_array)
                .ok_or_else(|| FieldError::Parse(format!("missing \"{key}\" list")))?;
            let coeffs = arr
                .iter()
                .map(|c| self.base().from_json(c))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(self.ring.from_coeffs(coeffs))
        };
        self.make(list("num")?, list("den")?)
    }

    fn sum(&self, terms: Vec<Self::Elem>) -> Self::Elem {
        if terms.len() <= 2 {
            return terms.iter().fold(self.zero(), |acc, t| self.add(&acc, t));
        }
        // Numerators over a shared denominator add without any gcd work.
        let mut groups: HashMap<Polynomial<F::Elem>, Vec<Polynomial<F::Elem>>> = HashMap::new();
        let mut order = Vec::new();
        for t in terms {
            if t.num.is_zero() {
                continue;
            }
            let entry = groups.entry(t.den.clone()).or_insert_with(|| {
                order.push(t.den.clone());
                Vec::new()
            });
            entry.push(t.num);
        }
        order
            .into_iter()
            .map(|den| {
                let nums = groups.remove(&den).expect("group exists");
                let num = nums.iter().fold(Polynomial::zero(), |acc, n| self.ring.add(&acc, n));
                self.make(num, den).expect("nonzero denominator")
            })
            .fold(self.zero(), |acc, t| self.add(&acc, &t))
    }
}
