use num::{BigInt, BigRational, Integer, ToPrimitive};

use super::{is_prime, Field, FieldError};

/// The prime field `F_p`, elements stored as residues in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Fails unless `p` is an odd prime below 2^63.
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if !(3..1 << 63).contains(&p) || !is_prime(p) {
            return Err(FieldError::Parse(format!("{p} is not an odd prime below 2^63")));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_i128(&self, v: i128) -> u64 {
        v.rem_euclid(self.p as i128) as u64
    }

    pub fn reduce_bigint(&self, v: &BigInt) -> u64 {
        let r = v.mod_floor(&BigInt::from(self.p));
        r.to_u64().expect("residue fits in u64")
    }

    /// Reduces a rational; its denominator must be a unit mod p.
    pub fn reduce_rational(&self, q: &BigRational) -> Result<u64, FieldError> {
        let n = self.reduce_bigint(q.numer());
        let d = self.reduce_bigint(q.denom());
        if d == 0 {
            return Err(FieldError::ModularDegeneration(format!(
                "denominator of {q} vanishes mod {}",
                self.p
            )));
        }
        self.div(&n, &d)
    }

    /// Evaluates a polynomial with rational coefficients at `x` in `F_p`.
    pub fn eval_rational_poly(&self, coeffs: &[BigRational], x: u64) -> Result<u64, FieldError> {
        let mut acc = 0u64;
        for c in coeffs.iter().rev() {
            acc = self.add(&self.mul(&acc, &x), &self.reduce_rational(c)?);
        }
        Ok(acc)
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn from_i64(&self, v: i64) -> u64 {
        self.reduce_i128(v as i128)
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }

    fn inv(&self, a: &u64) -> Result<u64, FieldError> {
        if *a == 0 {
            return Err(FieldError::InversionOfZero);
        }
        // Extended Euclid on (a, p).
        let (mut r0, mut r1) = (self.p as i128, *a as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(self.reduce_i128(t0))
    }

    fn format(&self, a: &u64) -> String {
        a.to_string()
    }

    fn to_json(&self, a: &u64) -> serde_json::Value {
        serde_json::Value::String(a.to_string())
    }

    fn from_json(&self, v: &serde_json::Value) -> Result<u64, FieldError> {
        let raw = match v {
            serde_json::Value::String(s) => s
                .trim()
                .parse::<i128>()
                .map_err(|_| FieldError::Parse(format!("bad residue {s:?}")))?,
            serde_json::Value::Number(n) => n
                .as_i64()
                .ok_or_else(|| FieldError::Parse(format!("bad residue {n}")))?
                as i128,
            other => return Err(FieldError::Parse(format!("expected residue, got {other}"))),
        };
        Ok(self.reduce_i128(raw))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites() {
        assert!(PrimeField::new(15).is_err());
        assert!(PrimeField::new(2).is_err());
        assert!(PrimeField::new(101).is_ok());
    }

    #[test]
    fn inverse_and_negative_reduction() {
        let f = PrimeField::new(101).unwrap();
        for a in 1..101u64 {
            assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
        }
        assert_eq!(f.from_i64(-1), 100);
        assert_eq!(f.from_ratio(1, 2).unwrap(), 51);
    }

    #[test]
    fn rational_reduction_detects_bad_denominator() {
        let f = PrimeField::new(7).unwrap();
        let q = BigRational::new(1.into(), 14.into());
        assert!(matches!(f.reduce_rational(&q), Err(FieldError::ModularDegeneration(_))));
    }
}
