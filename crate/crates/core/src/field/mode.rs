use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Which coefficient field a computation runs in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldMode {
    /// Exact arithmetic over `Q(ω)` (and `Q(ω)(u)` where a spectral variable is live).
    ExactOmega,
    /// `F_p` with ω specialized to `omega`; `u` stays symbolic over `F_p`.
    PrimeModular { prime: u64, omega: u64 },
}

impl FieldMode {
    pub fn label(&self) -> String {
        match self {
            FieldMode::ExactOmega => "exact".to_string(),
            FieldMode::PrimeModular { prime, omega } => format!("modp(p={prime},ω={omega})"),
        }
    }
}

/// Samples ω uniformly from `[2, p-2]`, reproducibly from `seed`.
pub fn sample_omega(prime: u64, seed: u64) -> u64 {
    assert!(prime >= 5, "need p >= 5 to sample from [2, p-2]");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.gen_range(2..=prime - 2)
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in SMALL {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in SMALL {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
