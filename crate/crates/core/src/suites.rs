//! Named verification suites, runnable in either field mode.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{exact_algebra, verify_presentation_in, AlgebraElement, BrauerAlgebra};
use crate::diagram::Generator;
use crate::field::{is_prime, Field, FieldMode, GroundField, PrimeField, QOmega};
use crate::idempotent::checks::{
    factorization_check, jm_identity_check, psi_tilde_b3, row_column_product, ybe_check, ybetr_check, Extremal,
};
use crate::idempotent::spectral::spectral_suite;
use crate::idempotent::{
    fusion_all, fusion_idempotent, recurrence_all, specialize_element, symmetric_phi, IdempotentError,
};
use crate::report::{CheckRecord, VerificationReport};
use crate::tableau::{enumerate_updown, exponents, f_constant, hooks, Partition, UpdownTableau, DEFAULT_TABLEAU_BOUND};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Presentation,
    Jm,
    Spectral,
    Fusion,
    Symmetric,
    Ybe,
    RowColumn,
    PsiTilde,
    Factorization,
    JmIdentity,
    All,
}

impl Suite {
    pub const EACH: [Suite; 10] = [
        Suite::Presentation,
        Suite::Jm,
        Suite::Spectral,
        Suite::Fusion,
        Suite::Symmetric,
        Suite::Ybe,
        Suite::RowColumn,
        Suite::PsiTilde,
        Suite::Factorization,
        Suite::JmIdentity,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Presentation => "presentation",
            Suite::Jm => "jm",
            Suite::Spectral => "spectral",
            Suite::Fusion => "fusion",
            Suite::Symmetric => "symmetric",
            Suite::Ybe => "ybe",
            Suite::RowColumn => "rowcol",
            Suite::PsiTilde => "psitilde",
            Suite::Factorization => "factorization",
            Suite::JmIdentity => "jmidentity",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = SuiteError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::EACH
            .iter()
            .chain([Suite::All].iter())
            .find(|x| x.name() == s)
            .copied()
            .ok_or_else(|| SuiteError::Config(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuiteError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Computation(#[from] IdempotentError),
}

macro_rules! via_idempotent {
    ($($t:ty),*) => {$(
        impl From<$t> for SuiteError {
            fn from(e: $t) -> Self {
                SuiteError::Computation(e.into())
            }
        }
    )*};
}

via_idempotent!(crate::algebra::AlgebraError, crate::field::FieldError, crate::tableau::TableauError);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub n: usize,
    pub mode: FieldMode,
    pub seed: u64,
    /// Compare every fusion result with the recurrence.
    pub cross_check: bool,
}

impl SuiteConfig {
    pub fn exact(n: usize) -> Self {
        Self {
            n,
            mode: FieldMode::ExactOmega,
            seed: 0,
            cross_check: true,
        }
    }

    pub fn modular(n: usize, prime: u64, omega: u64) -> Self {
        Self {
            mode: FieldMode::PrimeModular { prime, omega },
            ..Self::exact(n)
        }
    }

    pub fn validate(&self) -> Result<(), SuiteError> {
        if self.n == 0 || self.n > DEFAULT_TABLEAU_BOUND {
            return Err(SuiteError::Config(format!("n must lie in 1..={DEFAULT_TABLEAU_BOUND}, got {}", self.n)));
        }
        validate_mode(self.n, self.mode)
    }
}

/// `p` must be a prime larger than `2n` (so that every content difference
/// that is nonzero over `Q(ω)` for generic ω has a chance to stay nonzero)
/// and `ω` must be a residue.
pub fn validate_mode(n: usize, mode: FieldMode) -> Result<(), SuiteError> {
    if let FieldMode::PrimeModular { prime, omega } = mode {
        if !is_prime(prime) {
            return Err(SuiteError::Config(format!("{prime} is not prime")));
        }
        if prime <= 2 * n as u64 {
            return Err(SuiteError::Config(format!("p = {prime} must exceed 2n = {}", 2 * n)));
        }
        if omega >= prime {
            return Err(SuiteError::Config(format!("ω = {omega} is not reduced mod {prime}")));
        }
    }
    Ok(())
}

/// Builds `B_n` in the requested mode and runs `suite`.
pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<VerificationReport, SuiteError> {
    cfg.validate()?;
    match cfg.mode {
        FieldMode::ExactOmega => run_in(&exact_algebra(cfg.n), suite, cfg),
        FieldMode::PrimeModular { prime, omega } => {
            let field = PrimeField::new(prime).map_err(|e| SuiteError::Config(e.to_string()))?;
            run_in(&BrauerAlgebra::new(cfg.n, field, omega, cfg.mode), suite, cfg)
        }
    }
}

fn run_in<F: GroundField>(alg: &BrauerAlgebra<F>, suite: Suite, cfg: &SuiteConfig) -> Result<VerificationReport, SuiteError> {
    let started = Instant::now();
    let mut report = match suite {
        Suite::All => {
            let parts = Suite::EACH
                .iter()
                .map(|s| run_in(alg, *s, cfg))
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(VerificationReport::merge("all", parts));
        }
        Suite::Presentation => verify_presentation_in(alg)?,
        Suite::Jm => jm_suite(alg)?,
        Suite::Spectral => spectral_suite(alg)?,
        Suite::Fusion => fusion_suite(alg, cfg)?,
        Suite::Symmetric => symmetric_suite(alg)?,
        Suite::Ybe => ybe_suite(alg, cfg.seed)?,
        Suite::RowColumn => rowcol_suite(alg)?,
        Suite::PsiTilde => psitilde_suite(alg)?,
        Suite::Factorization => factorization_suite(alg, cfg.seed)?,
        Suite::JmIdentity => jmidentity_suite(alg)?,
    };
    report.suite = suite.name().to_string();
    report.wall_time = started.elapsed();
    Ok(report)
}

fn record_eq(id: &str, inputs: String, ok: bool, detail: &str) -> CheckRecord {
    CheckRecord::new(id, inputs, ok, if ok { "" } else { detail })
}

/// Degenerate `(p, ω)` become findings; anything else is a failure.
fn record_error(id: &str, inputs: String, e: &IdempotentError, findings: &mut Vec<String>) -> Option<CheckRecord> {
    if e.is_degeneration() {
        findings.push(format!("{id} [{inputs}] skipped: {e}"));
        None
    } else {
        Some(CheckRecord::fail(id, inputs, e.to_string()))
    }
}

fn jm_suite<F: GroundField>(alg: &BrauerAlgebra<F>) -> Result<VerificationReport, SuiteError> {
    let n = alg.n();
    let xs = (1..=n).map(|r| alg.jucys_murphy(r)).collect::<Result<Vec<_>, _>>()?;
    let mut records = Vec::new();
    for m in 1..=n {
        let alg_m = alg.with_rank(m);
        let ok = alg.embed(&alg_m.jucys_murphy(m)?)? == xs[m - 1];
        records.push(record_eq("embedding", format!("x{m} from B_{m}"), ok, "x_m depends on the ambient rank"));
        for k in 1..m {
            let ok = alg.commutator(&xs[m - 1], &xs[k - 1])?.is_zero();
            records.push(record_eq("commute", format!("x{k} x{m}"), ok, "[x_k, x_m] ≠ 0"));
        }
        for i in 1..m.saturating_sub(1) {
            for g in [Generator::S(i), Generator::E(i)] {
                let name = match g {
                    Generator::S(_) => format!("s{i}"),
                    _ => format!("e{i}"),
                };
                let ok = alg.commutator(&xs[m - 1], &alg.gen(g)?)?.is_zero();
                records.push(record_eq("centralizes", format!("x{m} {name}"), ok, "x_m does not commute with B_{m-1}"));
            }
        }
    }
    Ok(VerificationReport::new("jm", records, Default::default()))
}

fn fusion_suite<F: GroundField>(alg: &BrauerAlgebra<F>, cfg: &SuiteConfig) -> Result<VerificationReport, SuiteError> {
    let n = alg.n();
    let mut records = Vec::new();
    let mut findings = Vec::new();
    let outcomes = fusion_all(alg, cfg.cross_check);
    for (t, out) in &outcomes {
        let inputs = format!("n={n} T={t}");
        match out {
            Ok(o) => {
                records.push(CheckRecord::new("fusion", inputs.clone(), true, ""));
                for note in o.order_findings() {
                    findings.push(format!("T={t}: {note}"));
                }
            }
            Err(e) => records.extend(record_error("fusion", inputs, e, &mut findings)),
        }
    }
    if let FieldMode::PrimeModular { .. } = alg.mode() {
        let (r, f) = mode_consistency(alg)?;
        records.extend(r);
        findings.extend(f);
    }
    Ok(VerificationReport::new("fusion", records, Default::default()).with_findings(findings))
}

/// Exact idempotents specialized to `F_p` against those computed in `F_p`.
pub fn mode_consistency<F: GroundField>(alg: &BrauerAlgebra<F>) -> Result<(Vec<CheckRecord>, Vec<String>), SuiteError> {
    let n = alg.n();
    let exact = exact_algebra(n);
    let exact_all = recurrence_all(&exact);
    let modular_all = recurrence_all(alg);
    let mut records = Vec::new();
    let mut findings = Vec::new();
    for ((t, ex), (t2, md)) in exact_all.iter().zip(&modular_all) {
        debug_assert_eq!(t, t2);
        let inputs = format!("n={n} T={t} {}", alg.mode().label());
        let ex = match ex {
            Ok(e) => e,
            Err(e) => {
                records.push(CheckRecord::fail("mode-consistency", inputs, e.to_string()));
                continue;
            }
        };
        match (specialize_element(&exact, alg, ex), md) {
            (Ok(s), Ok(m)) => records.push(record_eq(
                "mode-consistency",
                inputs,
                s == *m,
                "specialized exact idempotent differs",
            )),
            (Err(e), _) => records.extend(record_error("mode-consistency", inputs, &e, &mut findings)),
            (_, Err(e)) => records.extend(record_error("mode-consistency", inputs, e, &mut findings)),
        }
    }
    Ok((records, findings))
}

fn symmetric_suite<F: GroundField>(alg: &BrauerAlgebra<F>) -> Result<VerificationReport, SuiteError> {
    let n = alg.n();
    let f = alg.field();
    let q = QOmega::omega();
    let mut tabs = Vec::new();
    for lambda in Partition::all_of_size(n) {
        for t in enumerate_updown(n, Some(&lambda))? {
            if t.all_additions() {
                tabs.push((lambda.clone(), t));
            }
        }
    }
    let ys: Vec<AlgebraElement<F::Elem>> = (1..=n)
        .map(|r| {
            (1..r).try_fold(alg.zero(), |acc, k| alg.add(&acc, &alg.gen(Generator::Sij(k, r))?))
        })
        .collect::<Result<_, _>>()?;
    let per: Vec<Vec<CheckRecord>> = tabs
        .par_iter()
        .map(|(lambda, t)| -> Result<Vec<CheckRecord>, SuiteError> {
            let inputs = format!("n={n} λ={lambda} T={t}");
            let mut out = Vec::new();
            let h = hooks(lambda) as i64;
            let p = exponents(t);
            out.push(record_eq("exponents-zero", inputs.clone(), p.iter().all(|&x| x == 0), &format!("{p:?}")));
            let (f_t, _) = f_constant(t)?;
            out.push(record_eq("f=H", inputs.clone(), f_t == q.from_i64(h), &format!("f = {}, H = {h}", q.format(&f_t))));

            let phi = symmetric_phi(alg, t)?;
            let e = alg.scale(&phi, &f.inv(&f.from_i64(h))?);
            out.push(record_eq("phi/H-idempotent", inputs.clone(), alg.is_idempotent(&e), "(φ/H)² ≠ φ/H"));
            let perms = phi.terms().keys().all(|d| d.is_permutation());
            out.push(record_eq("permutation-support", inputs.clone(), perms, "φ involves a non-permutation diagram"));
            let mut bad = Vec::new();
            for (r, cell) in t.steps().iter().map(|s| s.cell).enumerate() {
                let c = f.from_i64(cell.diagonal());
                let target = alg.scale(&e, &c);
                if alg.mul(&ys[r], &e)? != target || alg.mul(&e, &ys[r])? != target {
                    bad.push(r + 1);
                }
            }
            out.push(record_eq(
                "young-eigenvalues",
                inputs.clone(),
                bad.is_empty(),
                &format!("fails for r in {bad:?}"),
            ));

            match fusion_idempotent(alg, t, false) {
                Ok(o) => {
                    let ok = o.result.constant == f.from_i64(h) && o.pole_orders.iter().all(|&x| x == 0);
                    out.push(record_eq("fusion-constant", inputs, ok, "fusion constant ≠ H or nonzero pole order"));
                }
                Err(e) if e.is_degeneration() => {}
                Err(e) => out.push(CheckRecord::fail("fusion-constant", inputs, e.to_string())),
            }
            Ok(out)
        })
        .collect::<Result<_, _>>()?;
    Ok(VerificationReport::new("symmetric", per.into_iter().flatten().collect(), Default::default()))
}

/// Nonzero rational `a/b` with `|a| ≤ 30`, `1 ≤ b ≤ 13`.
fn random_rational(rng: &mut ChaCha8Rng) -> (i64, i64) {
    loop {
        let a = rng.gen_range(-30..=30);
        if a != 0 {
            let b: i64 = rng.gen_range(1..=13);
            let g = a.gcd(&b);
            return (a / g, b / g);
        }
    }
}

fn rational_text((a, b): (i64, i64)) -> String {
    if b == 1 {
        a.to_string()
    } else {
        format!("{a}/{b}")
    }
}

const DRAW_LIMIT: usize = 1000;

fn is_degenerate_draw(e: &IdempotentError) -> bool {
    matches!(
        e,
        IdempotentError::DegenerateParameters(_) | IdempotentError::DegeneratePoints(_)
    ) || matches!(e, IdempotentError::Field(_))
}

pub const YBE_PAIRS: usize = 20;

fn ybe_suite<F: GroundField>(alg: &BrauerAlgebra<F>, seed: u64) -> Result<VerificationReport, SuiteError> {
    let f = alg.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut records = Vec::new();
    for _ in 0..DRAW_LIMIT {
        if records.len() == YBE_PAIRS {
            break;
        }
        let (u, v) = (random_rational(&mut rng), random_rational(&mut rng));
        let (Ok(ue), Ok(ve)) = (f.from_ratio(u.0, u.1), f.from_ratio(v.0, v.1)) else {
            continue;
        };
        let inputs = format!("u={} v={}", rational_text(u), rational_text(v));
        match ybe_check(alg, &ue, &ve) {
            Ok(ok) => records.push(record_eq("ybe", inputs, ok, "sides differ")),
            Err(e) if is_degenerate_draw(&e) => continue,
            Err(e) => records.push(CheckRecord::fail("ybe", inputs, e.to_string())),
        }
    }
    Ok(VerificationReport::new("ybe", records, Default::default()))
}

fn rowcol_suite<F: GroundField>(alg: &BrauerAlgebra<F>) -> Result<VerificationReport, SuiteError> {
    let mut records = Vec::new();
    let mut findings = Vec::new();
    for m in 2..=alg.n() {
        let alg_m = alg.with_rank(m);
        for which in [Extremal::Row, Extremal::Column] {
            let id = match which {
                Extremal::Row => "row",
                Extremal::Column => "column",
            };
            let inputs = format!("n={m}");
            match row_column_product(&alg_m, which) {
                Ok(p) => {
                    let constant = alg.field().format(&p.constant);
                    findings.push(format!("{id} product, n={m}: constant {constant}"));
                    records.push(CheckRecord::pass(id, inputs));
                }
                Err(e) => records.extend(record_error(id, inputs, &e, &mut findings)),
            }
        }
    }
    Ok(VerificationReport::new("rowcol", records, Default::default()).with_findings(findings))
}

fn psitilde_suite<F: GroundField>(alg: &BrauerAlgebra<F>) -> Result<VerificationReport, SuiteError> {
    let tabs = enumerate_updown(3, None)?;
    let alg3 = alg.with_rank(3);
    let results: Vec<(UpdownTableau, Result<_, IdempotentError>)> =
        tabs.into_par_iter().map(|t| {
            let r = psi_tilde_b3(&alg3, &t);
            (t, r)
        }).collect();
    let mut records = Vec::new();
    let mut findings = Vec::new();
    for (t, r) in results {
        let inputs = format!("T={t}");
        match r {
            Ok(o) => {
                findings.push(format!(
                    "Ψ̃ at {t}: orders {:?}, constant {}",
                    o.orders,
                    alg.field().format(&o.proportional.constant)
                ));
                records.push(CheckRecord::pass("psi-tilde", inputs));
            }
            Err(e) => records.extend(record_error("psi-tilde", inputs, &e, &mut findings)),
        }
    }
    Ok(VerificationReport::new("psitilde", records, Default::default()).with_findings(findings))
}

fn factorization_suite<F: GroundField>(alg: &BrauerAlgebra<F>, seed: u64) -> Result<VerificationReport, SuiteError> {
    let f = alg.field();
    let n = alg.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut records = Vec::new();
    for m in 2..=n {
        let alg_m = alg.with_rank(m);
        for _ in 0..DRAW_LIMIT {
            let pts: Vec<(i64, i64)> = (0..m).map(|_| random_rational(&mut rng)).collect();
            let Ok(vals) = pts.iter().map(|&(a, b)| f.from_ratio(a, b)).collect::<Result<Vec<_>, _>>() else {
                continue;
            };
            let inputs = format!(
                "n={m} u=({})",
                pts.iter().map(|&p| rational_text(p)).collect::<Vec<_>>().join(", ")
            );
            match factorization_check(&alg_m, &vals) {
                Ok(ok) => {
                    records.push(record_eq("factorization", inputs, ok, "lexicographic and factorized products differ"));
                    break;
                }
                Err(e) if is_degenerate_draw(&e) => continue,
                Err(e) => {
                    records.push(CheckRecord::fail("factorization", inputs, e.to_string()));
                    break;
                }
            }
        }
    }
    for r in 3..=n {
        for j in 2..r {
            for i in 1..j {
                for _ in 0..DRAW_LIMIT {
                    let (u, v) = (random_rational(&mut rng), random_rational(&mut rng));
                    let (Ok(ue), Ok(ve)) = (f.from_ratio(u.0, u.1), f.from_ratio(v.0, v.1)) else {
                        continue;
                    };
                    let inputs = format!("n={n} (i,j,r)=({i},{j},{r}) u={} v={}", rational_text(u), rational_text(v));
                    match ybetr_check(alg, (i, j, r), &ue, &ve) {
                        Ok(ok) => {
                            records.push(record_eq("braid-relation", inputs, ok, "sides differ"));
                            break;
                        }
                        Err(e) if is_degenerate_draw(&e) => continue,
                        Err(e) => {
                            records.push(CheckRecord::fail("braid-relation", inputs, e.to_string()));
                            break;
                        }
                    }
                }
            }
        }
    }
    Ok(VerificationReport::new("factorization", records, Default::default()))
}

fn jmidentity_suite<F: GroundField>(alg: &BrauerAlgebra<F>) -> Result<VerificationReport, SuiteError> {
    let n = alg.n();
    let mut jobs = Vec::new();
    for len in 2..=n {
        for u in enumerate_updown(len - 1, None)? {
            for m in [len, len + 1] {
                jobs.push((u.clone(), m));
            }
        }
    }
    let records: Vec<Option<CheckRecord>> = jobs
        .par_iter()
        .map(|(u, m)| {
            let inputs = format!("U={u} m={m}");
            match jm_identity_check(&alg.with_rank(*m), u) {
                Ok(o) => {
                    let ok = o.general && o.fusion_step != Some(false);
                    let detail = match (o.general, o.fusion_step) {
                        (false, _) => "identity with x_n^(m) fails",
                        _ => "fusion-step expansion fails",
                    };
                    Some(record_eq("jm-identity", inputs, ok, detail))
                }
                Err(e) if e.is_degeneration() => None,
                Err(e) => Some(CheckRecord::fail("jm-identity", inputs, e.to_string())),
            }
        })
        .collect();
    Ok(VerificationReport::new("jmidentity", records.into_iter().flatten().collect(), Default::default()))
}
