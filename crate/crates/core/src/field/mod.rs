//! Exact coefficient arithmetic.
//!
//! Fields are runtime *contexts*: a value implementing [`Field`] knows how to
//! combine its elements, and elements are plain data with a canonical form so
//! that `==` on elements is mathematical equality. This lets the prime field
//! carry its modulus at runtime and lets fraction fields stack on each other:
//! `Q -> Q(ω) -> Q(ω)(u)`, or `F_p -> F_p(u)`.

mod mode;
mod poly;
mod prime;
mod ratfunc;
mod rational;

use std::fmt::Debug;
use std::hash::Hash;

use thiserror::Error;

pub use mode::{is_prime, sample_omega, FieldMode};
pub use poly::{PolyRing, Polynomial};
pub use prime::PrimeField;
pub use ratfunc::{RatFuncField, RationalFunction};
pub use rational::{parse_rational, Rationals};

pub use num::BigRational;

/// `Q(ω)` with ω the generator.
pub type QOmega = RatFuncField<Rationals>;
/// Elements of `Q(ω)`.
pub type QOmegaElem = RationalFunction<BigRational>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("inversion of zero")]
    InversionOfZero,
    #[error("zero input where a nonzero element is required")]
    ZeroInput,
    #[error("pole of order {order} at the evaluation point exceeds the allowed shift {shift}")]
    PoleAtEvaluationPoint { order: i64, shift: i64 },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("modular degeneration: {0}")]
    ModularDegeneration(String),
    #[error("malformed field element: {0}")]
    Parse(String),
}

/// A field whose elements are canonical values.
pub trait Field: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, FieldError>;

    /// Human-readable rendering.
    fn format(&self, a: &Self::Elem) -> String;
    fn to_json(&self, a: &Self::Elem) -> serde_json::Value;
    fn from_json(&self, v: &serde_json::Value) -> Result<Self::Elem, FieldError>;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, FieldError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn from_ratio(&self, num: i64, den: i64) -> Result<Self::Elem, FieldError> {
        self.div(&self.from_i64(num), &self.from_i64(den))
    }

    fn pow(&self, a: &Self::Elem, mut e: u32) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Integer power, negative exponents invert.
    fn powi(&self, a: &Self::Elem, e: i64) -> Result<Self::Elem, FieldError> {
        let p = self.pow(a, e.unsigned_abs() as u32);
        if e < 0 {
            self.inv(&p)
        } else {
            Ok(p)
        }
    }

    /// Sum of many elements. Fraction fields override this to batch terms
    /// that share a denominator.
    fn sum(&self, terms: Vec<Self::Elem>) -> Self::Elem {
        let mut it = terms.into_iter();
        match it.next() {
            None => self.zero(),
            Some(first) => it.fold(first, |acc, t| self.add(&acc, &t)),
        }
    }
}

/// A field in which the Brauer algebra is realized: either `Q(ω)` itself or a
/// specialization of it (`F_p` with ω sent to a chosen residue).
pub trait GroundField: Field {
    /// Image of an exact element of `Q(ω)` when the generator maps to `omega`.
    fn specialize(&self, x: &QOmegaElem, omega: &Self::Elem) -> Result<Self::Elem, FieldError>;

    /// The field mode tag for elements built over this field with the given ω.
    fn mode(&self, omega: &Self::Elem) -> FieldMode;
}

impl GroundField for QOmega {
    fn specialize(&self, x: &QOmegaElem, _omega: &Self::Elem) -> Result<Self::Elem, FieldError> {
        Ok(x.clone())
    }

    fn mode(&self, _omega: &Self::Elem) -> FieldMode {
        FieldMode::ExactOmega
    }
}

impl GroundField for PrimeField {
    fn specialize(&self, x: &QOmegaElem, omega: &u64) -> Result<u64, FieldError> {
        let num = self.eval_rational_poly(x.num.coeffs(), *omega)?;
        let den = self.eval_rational_poly(x.den.coeffs(), *omega)?;
        if den == 0 {
            return Err(FieldError::ModularDegeneration(format!(
                "denominator of {} vanishes at ω = {} mod {}",
                QOmega::omega().format(x),
                omega,
                self.modulus()
            )));
        }
        self.div(&num, &den)
    }

    fn mode(&self, omega: &u64) -> FieldMode {
        FieldMode::PrimeModular {
            prime: self.modulus(),
            omega: *omega,
        }
    }
}

impl QOmega {
    /// `Q(ω)` with the generator printed as `ω`.
    pub fn omega() -> Self {
        RatFuncField::new(Rationals, "ω")
    }
}
