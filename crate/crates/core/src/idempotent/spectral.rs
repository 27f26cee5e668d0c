//! Spectral properties of the full family `{E_T}` for one `n`.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;

use crate::algebra::{AlgebraElement, BrauerAlgebra};
use crate::field::{Field, GroundField};
use crate::report::{CheckRecord, VerificationReport};
use crate::tableau::UpdownTableau;

use super::{content_values, lift, recurrence_all, regularized_eval, u_algebra, EvalOrder, IdempotentError};

type Family<E> = Vec<(UpdownTableau, AlgebraElement<E>)>;

fn family<F: GroundField>(alg: &BrauerAlgebra<F>) -> Result<Family<F::Elem>, IdempotentError> {
    recurrence_all(alg).into_iter().map(|(t, e)| Ok((t, e?))).collect()
}

/// Checks, for every updown tableau `T` of length `n = alg.n()`:
/// `x_r E_T = E_T x_r = c_r E_T`, `E_T² = E_T`, `E_T E_{T'} = 0` for
/// `T' ≠ T`, `Σ_T E_T = 1`, `E_U = Σ E_T` over the one-step extensions of
/// each `U`, and the resolvent form of the recurrence.
pub fn spectral_suite<F: GroundField>(alg: &BrauerAlgebra<F>) -> Result<VerificationReport, IdempotentError> {
    let started = Instant::now();
    let n = alg.n();
    let fam = family(alg)?;
    let xs = (1..=n).map(|r| alg.jucys_murphy(r)).collect::<Result<Vec<_>, _>>()?;
    let mut records = Vec::new();

    let per_tableau: Vec<Vec<CheckRecord>> = fam
        .par_iter()
        .enumerate()
        .map(|(i, (t, e))| -> Result<Vec<CheckRecord>, IdempotentError> {
            let inputs = format!("n={n} T={t}");
            let mut out = Vec::new();
            let cs = content_values(alg, t)?;
            let mut bad = Vec::new();
            for (r, (x, c)) in xs.iter().zip(&cs).enumerate() {
                let target = alg.scale(e, c);
                if alg.mul(x, e)? != target || alg.mul(e, x)? != target {
                    bad.push(r + 1);
                }
            }
            out.push(CheckRecord::new(
                "eigenvalues",
                inputs.clone(),
                bad.is_empty(),
                if bad.is_empty() { String::new() } else { format!("fails for r in {bad:?}") },
            ));
            out.push(CheckRecord::new("idempotent", inputs.clone(), alg.is_idempotent(e), ""));
            let mut not_orth = Vec::new();
            for (j, (t2, e2)) in fam.iter().enumerate() {
                if i != j && !alg.mul(e, e2)?.is_zero() {
                    not_orth.push(t2.to_string());
                }
            }
            out.push(CheckRecord::new(
                "orthogonal",
                inputs,
                not_orth.is_empty(),
                if not_orth.is_empty() { String::new() } else { format!("E_T E_T' ≠ 0 for {not_orth:?}") },
            ));
            Ok(out)
        })
        .collect::<Result<_, _>>()?;
    records.extend(per_tableau.into_iter().flatten());

    let sum = fam.iter().try_fold(alg.zero(), |acc, (_, e)| alg.add(&acc, e))?;
    records.push(CheckRecord::new(
        "complete",
        format!("n={n} tableaux={}", fam.len()),
        sum == alg.one(),
        "",
    ));

    // Idempotents of the length n−1 prefixes, embedded in B_n.
    let prefixes: BTreeMap<UpdownTableau, AlgebraElement<F::Elem>> = if n == 1 {
        BTreeMap::from([(UpdownTableau::new(Vec::new())?, alg.one())])
    } else {
        family(&alg.with_rank(n - 1))?
            .into_iter()
            .map(|(u, e)| Ok((u, alg.embed(&e)?)))
            .collect::<Result<_, IdempotentError>>()?
    };
    let mut children: BTreeMap<UpdownTableau, Vec<usize>> = BTreeMap::new();
    for (i, (t, _)) in fam.iter().enumerate() {
        children.entry(t.prefix(n - 1)).or_default().push(i);
    }
    for (u, e_u) in &prefixes {
        let kids = children.get(u).cloned().unwrap_or_default();
        let sum = kids.iter().try_fold(alg.zero(), |acc, &i| alg.add(&acc, &fam[i].1))?;
        records.push(CheckRecord::new("branching", format!("n={n} U={u}"), sum == *e_u, ""));
    }

    // Y(u) = Σ_{T'} E_{T'} (u − c_n(T))/(u − c_n(T')) over the siblings T' of T
    // must satisfy (u − x_n) Y = (u − c_n(T)) E_U and Y(c_n(T)) = E_T.
    let ualg = u_algebra(alg);
    let uf = ualg.field();
    let x_n = lift(alg, &ualg, &xs[n - 1])?;
    let last_content = |t: &UpdownTableau| -> Result<F::Elem, IdempotentError> {
        Ok(content_values(alg, t)?.pop().expect("nonempty"))
    };
    let resolvent: Vec<CheckRecord> = fam
        .par_iter()
        .map(|(t, e_t)| -> Result<CheckRecord, IdempotentError> {
            let u_tab = t.prefix(n - 1);
            let c = last_content(t)?;
            let u_minus_c = uf.sub(&uf.gen(), &uf.constant(c.clone()));
            let mut y = ualg.zero();
            for &i in &children[&u_tab] {
                let (t2, e2) = &fam[i];
                let c2 = last_content(t2)?;
                let ratio = uf.div(&u_minus_c, &uf.sub(&uf.gen(), &uf.constant(c2)))?;
                y = ualg.add(&y, &ualg.scale(&lift(alg, &ualg, e2)?, &ratio))?;
            }
            let lhs = ualg.sub(&ualg.scale(&y, &uf.gen()), &ualg.mul(&x_n, &y)?)?;
            let rhs = ualg.scale(&lift(alg, &ualg, &prefixes[&u_tab])?, &u_minus_c);
            let equation = lhs == rhs;
            let (_, value) = regularized_eval(&ualg, &y, &c, EvalOrder::Explicit(0))?;
            let evaluates = value == *e_t;
            Ok(CheckRecord::new(
                "resolvent",
                format!("n={n} T={t}"),
                equation && evaluates,
                match (equation, evaluates) {
                    (true, true) => String::new(),
                    (false, _) => "(u − x_n)·Y ≠ (u − c_n)·E_U".into(),
                    (true, false) => "Y(c_n) ≠ E_T".into(),
                },
            ))
        })
        .collect::<Result<_, _>>()?;
    records.extend(resolvent);

    Ok(VerificationReport::new("spectral", records, started.elapsed()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::exact_algebra;
    use crate::field::{FieldMode, PrimeField};

    #[test]
    fn small_ranks_pass() {
        for n in 1..=3 {
            let r = spectral_suite(&exact_algebra(n)).unwrap();
            assert!(r.all_passed(), "{r}");
        }
    }

    #[test]
    fn two_box_family() {
        let alg = exact_algebra(2);
        let fam = family(&alg).unwrap();
        assert_eq!(fam.len(), 3);
        let e2 = &fam.iter().find(|(t, _)| t.to_string() == "1|2").unwrap().1;
        let e11 = &fam.iter().find(|(t, _)| t.to_string() == "1|11").unwrap().1;
        assert!(alg.mul(e2, e11).unwrap().is_zero());
        let sum = fam.iter().fold(alg.zero(), |acc, (_, e)| alg.add(&acc, e).unwrap());
        assert_eq!(sum, alg.one());
    }

    #[test]
    fn modular_rank_three() {
        let p = 1_000_003;
        let alg = BrauerAlgebra::new(3, PrimeField::new(p).unwrap(), 777, FieldMode::PrimeModular { prime: p, omega: 777 });
        assert!(spectral_suite(&alg).unwrap().all_passed());
    }
}
