//! `E_T = E_U · Π_a (x_n − a)/(c_n − a)` over the contents `a` of the other
//! addable and removable boxes of the previous shape.

use crate::algebra::{AlgebraElement, BrauerAlgebra};
use crate::field::GroundField;
use crate::tableau::{boxes_with_contents, UpdownTableau};

use super::{content_value, tree_map, IdempotentError, IdempotentResult, Method};

/// One recurrence step. `t` has length `r = alg_r.n()`; `e_u` is the
/// idempotent of its length `r − 1` prefix in `B_{r−1}` (ignored for `r = 1`).
pub fn recurrence_step<F: GroundField>(
    alg_r: &BrauerAlgebra<F>,
    e_u: &AlgebraElement<F::Elem>,
    t: &UpdownTableau,
) -> Result<AlgebraElement<F::Elem>, IdempotentError> {
    let r = t.n();
    if alg_r.n() != r {
        return Err(IdempotentError::RankMismatch {
            tableau: r,
            algebra: alg_r.n(),
        });
    }
    let f = alg_r.field();
    let step = t.step(r);
    let c_sym = step.content();
    let c = content_value(alg_r, &c_sym)?;
    let (add, rem) = boxes_with_contents(&t.shape(r - 1));
    let others = add
        .iter()
        .filter(|(cell, _)| !(step.added && *cell == step.cell))
        .chain(rem.iter().filter(|(cell, _)| step.added || *cell != step.cell))
        .map(|(_, s)| *s);
    let mut acc = if r == 1 { alg_r.one() } else { alg_r.embed(e_u)? };
    let x = alg_r.jucys_murphy(r)?;
    for a_sym in others {
        let a = content_value(alg_r, &a_sym)?;
        let denom = f.sub(&c, &a);
        if f.is_zero(&denom) {
            return Err(if a_sym == c_sym {
                IdempotentError::ContentCollision {
                    step: r,
                    content: c_sym.to_string(),
                }
            } else {
                IdempotentError::ModularDegeneration(format!(
                    "contents {c_sym} and {a_sym} coincide in {} at step {r} of {t}",
                    alg_r.mode().label()
                ))
            });
        }
        let shifted = alg_r.sub(&alg_r.mul(&acc, &x)?, &alg_r.scale(&acc, &a))?;
        acc = alg_r.scale(&shifted, &f.inv(&denom)?);
    }
    Ok(acc)
}

/// `E_T` in `B_n`, `n = alg.n() = t.n()`.
pub fn recurrence_idempotent<F: GroundField>(
    alg: &BrauerAlgebra<F>,
    t: &UpdownTableau,
) -> Result<IdempotentResult<F::Elem>, IdempotentError> {
    if alg.n() != t.n() {
        return Err(IdempotentError::RankMismatch {
            tableau: t.n(),
            algebra: alg.n(),
        });
    }
    let mut e = alg.with_rank(0).one();
    for r in 1..=t.n() {
        e = recurrence_step(&alg.with_rank(r), &e, &t.prefix(r))?;
    }
    Ok(IdempotentResult {
        tableau: t.clone(),
        element: e,
        constant: alg.field().one(),
        method: Method::Recurrence,
    })
}

/// `E_T` for every updown tableau of length `alg.n()`, in enumeration order.
pub fn recurrence_all<F: GroundField>(
    alg: &BrauerAlgebra<F>,
) -> Vec<(UpdownTableau, Result<AlgebraElement<F::Elem>, IdempotentError>)> {
    let algs: Vec<BrauerAlgebra<F>> = (0..=alg.n()).map(|r| alg.with_rank(r)).collect();
    tree_map(alg.n(), algs[0].one(), &|e_u: &AlgebraElement<F::Elem>, t: &UpdownTableau| {
        recurrence_step(&algs[t.n()], e_u, t)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::exact_algebra;
    use crate::diagram::Generator;
    use crate::field::{Field, FieldMode, PrimeField};

    fn t(s: &str) -> UpdownTableau {
        UpdownTableau::parse(s).unwrap()
    }

    #[test]
    fn small_examples() {
        let alg = exact_algebra(2);
        let f = alg.field();
        let e1 = alg.gen(Generator::E(1)).unwrap();
        let s1 = alg.gen(Generator::S(1)).unwrap();
        let got = recurrence_idempotent(&alg, &t("1|0")).unwrap();
        assert_eq!(got.element, alg.scale(&e1, &f.inv(&f.gen()).unwrap()));
        assert_eq!(got.method, Method::Recurrence);
        let got = recurrence_idempotent(&alg, &t("1|11")).unwrap();
        let half = f.from_ratio(1, 2).unwrap();
        assert_eq!(got.element, alg.scale(&alg.sub(&alg.one(), &s1).unwrap(), &half));
        // (1 + s_1)/2 − e_1/ω
        let got = recurrence_idempotent(&alg, &t("1|2")).unwrap();
        let sym = alg.scale(&alg.add(&alg.one(), &s1).unwrap(), &half);
        let expect = alg.sub(&sym, &alg.scale(&e1, &f.inv(&f.gen()).unwrap())).unwrap();
        assert_eq!(got.element, expect);
        let one = exact_algebra(1);
        assert_eq!(recurrence_idempotent(&one, &t("1")).unwrap().element, one.one());
    }

    #[test]
    fn rank_must_match() {
        assert!(matches!(
            recurrence_idempotent(&exact_algebra(3), &t("1|2")),
            Err(IdempotentError::RankMismatch { .. })
        ));
    }

    #[test]
    fn tree_agrees_with_single_tableau_path() {
        let alg = exact_algebra(3);
        for (tab, e) in recurrence_all(&alg) {
            assert_eq!(e.unwrap(), recurrence_idempotent(&alg, &tab).unwrap().element, "{tab}");
        }
    }

    #[test]
    fn modular_collision_is_reported() {
        // For 1|0 the denominators c_2 − a are −ω and 2 − ω.
        let p = 7;
        let field = PrimeField::new(p).unwrap();
        for w in 0..p {
            let alg = BrauerAlgebra::new(2, field, w, FieldMode::PrimeModular { prime: p, omega: w });
            match recurrence_idempotent(&alg, &t("1|0")) {
                Ok(_) => assert!(w != 0 && w != 2),
                Err(e) => assert!(e.is_degeneration() && (w == 0 || w == 2), "{e}"),
            }
        }
    }
}
