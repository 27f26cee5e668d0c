//! Regularized consecutive evaluation of the fusion function.
//!
//! Step `r` multiplies the running value by
//! `Π_{k=r−1..1} (1 − e_{kr}/(c_k + u)) · Π_{k=1..r−1} (1 − s_{kr}/(c_k − u))`
//! over `F(u)` and evaluates `(u − c_r)^{p_r} · (…)` at `u = c_r`.

use crate::algebra::{AlgebraElement, BrauerAlgebra};
use crate::diagram::{generator, Generator};
use crate::field::{Field, FieldError, FieldMode, GroundField, RatFuncField, RationalFunction};
use crate::tableau::{contents, exponents, f_constant, ContentSymbol, UpdownTableau};

use super::{
    content_value, lift, recurrence_all, recurrence_idempotent, tree_map, u_algebra, IdempotentError,
    IdempotentResult, Method,
};

/// How many powers of `(u − c)` to multiply by before evaluating.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalOrder {
    Explicit(i64),
    /// The unique power giving a finite nonzero value.
    Auto,
}

/// Evaluates `(u − c)^p · X` at `u = c` coefficient-wise.
///
/// Returns the pole order of `X` at `c` (the power `Auto` would use) and the
/// value. With an explicit `p` smaller than the pole order this fails; with a
/// larger one the value is zero.
pub fn regularized_eval<F: Field>(
    ualg: &BrauerAlgebra<RatFuncField<F>>,
    x: &AlgebraElement<RationalFunction<F::Elem>>,
    c: &F::Elem,
    order: EvalOrder,
) -> Result<(i64, AlgebraElement<F::Elem>), IdempotentError> {
    let uf = ualg.field();
    let base = uf.base().clone();
    let omega = uf.as_constant(ualg.omega()).expect("ω is u-free");
    let target = BrauerAlgebra::new(ualg.n(), base, omega, ualg.mode());
    if x.is_zero() {
        return Err(FieldError::ZeroInput.into());
    }
    let mut min_val = i64::MAX;
    for coeff in x.terms().values() {
        min_val = min_val.min(uf.valuation_at(coeff, c)?);
    }
    let pole = -min_val;
    let p = match order {
        EvalOrder::Explicit(p) => p,
        EvalOrder::Auto => pole,
    };
    if pole > p {
        return Err(IdempotentError::PoleAtEvaluationPoint { step: 0, order: pole, shift: p });
    }
    let value = ualg.map_into(&target, x, |coeff| uf.shift_and_eval(coeff, c, p))?;
    Ok((pole, value))
}

/// Running value after `step` evaluations: `f(U)·E_U` for the prefix `U`,
/// in `B_step`, with the pole orders seen so far.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionState<E> {
    pub step: usize,
    pub partial: AlgebraElement<E>,
    pub pole_orders: Vec<i64>,
}

impl<E> FusionState<E> {
    pub fn initial<F: Field<Elem = E>>(alg: &BrauerAlgebra<F>) -> Self {
        Self {
            step: 0,
            partial: alg.with_rank(0).one(),
            pole_orders: Vec::new(),
        }
    }
}

fn is_modular(mode: FieldMode) -> bool {
    matches!(mode, FieldMode::PrimeModular { .. })
}

/// In `F_p` a factor may only be singular at `u = c_r` when it is singular
/// over `Q(ω)`; otherwise the pole structure changes.
fn check_pole_pattern<F: Field>(
    alg: &BrauerAlgebra<F>,
    syms: &[ContentSymbol],
    vals: &[F::Elem],
    with_e: bool,
) -> Result<(), IdempotentError> {
    let f = alg.field();
    let r = syms.len();
    let (cr_sym, cr) = (&syms[r - 1], &vals[r - 1]);
    for k in 0..r - 1 {
        let diff_zero = f.is_zero(&f.sub(&vals[k], cr));
        let sum_zero = f.is_zero(&f.add(&vals[k], cr));
        if diff_zero != syms[k].difference_is_zero(cr_sym) || (with_e && sum_zero != syms[k].sum_is_zero(cr_sym)) {
            return Err(IdempotentError::ModularDegeneration(format!(
                "c_{} ± c_{r} vanishes in {} but not over Q(ω)",
                k + 1,
                alg.mode().label()
            )));
        }
    }
    Ok(())
}

/// Multiplies `partial` (in `B_{r−1}`) by the step-`r` factors and evaluates
/// at `u = c_r`. Without `with_e` only the transposition factors are used.
fn consecutive_step<F: Field>(
    alg_r: &BrauerAlgebra<F>,
    partial: &AlgebraElement<F::Elem>,
    vals: &[F::Elem],
    with_e: bool,
    order: EvalOrder,
) -> Result<(i64, AlgebraElement<F::Elem>), IdempotentError> {
    let r = vals.len();
    let ualg = u_algebra(alg_r);
    let uf = ualg.field();
    let base = alg_r.field();
    let start = if r == 1 { alg_r.one() } else { alg_r.embed(partial)? };
    let mut x = lift(alg_r, &ualg, &start)?;
    if with_e {
        for k in (1..r).rev() {
            // −1/(c_k + u)
            let coef = uf.over_linear(&base.from_i64(-1), &base.neg(&vals[k - 1]));
            x = ualg.mul_one_plus(&x, &generator(r, Generator::Eij(k, r))?, &coef)?;
        }
    }
    for k in 1..r {
        // −1/(c_k − u)
        let coef = uf.over_linear(&base.one(), &vals[k - 1]);
        x = ualg.mul_one_plus(&x, &generator(r, Generator::Sij(k, r))?, &coef)?;
    }
    regularized_eval(&ualg, &x, &vals[r - 1], order).map_err(|e| match e {
        IdempotentError::PoleAtEvaluationPoint { order, shift, .. } => {
            IdempotentError::PoleAtEvaluationPoint { step: r, order, shift }
        }
        other => other,
    })
}

fn fusion_step<F: GroundField>(
    alg_r: &BrauerAlgebra<F>,
    state: &FusionState<F::Elem>,
    t: &UpdownTableau,
) -> Result<FusionState<F::Elem>, IdempotentError> {
    let r = t.n();
    let syms = contents(t);
    let vals = syms.iter().map(|s| content_value(alg_r, s)).collect::<Result<Vec<_>, _>>()?;
    let modular = is_modular(alg_r.mode());
    if modular {
        check_pole_pattern(alg_r, &syms, &vals, true)?;
    }
    let p_r = *exponents(t).last().expect("nonempty tableau");
    let degenerate = |what: String| IdempotentError::ModularDegeneration(format!("{what} at step {r} of {t}"));
    let (pole, value) = match consecutive_step(alg_r, &state.partial, &vals, true, EvalOrder::Explicit(p_r)) {
        Err(IdempotentError::PoleAtEvaluationPoint { order, .. }) if modular => {
            return Err(degenerate(format!("pole of order {order} exceeds p = {p_r}")))
        }
        other => other?,
    };
    if value.is_zero() {
        return Err(if modular {
            degenerate("value vanishes".into())
        } else {
            IdempotentError::ZeroValue { step: r }
        });
    }
    let mut pole_orders = state.pole_orders.clone();
    pole_orders.push(pole);
    Ok(FusionState {
        step: r,
        partial: value,
        pole_orders,
    })
}

/// The fusion value, `E_T`, and the pole orders observed at each step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionOutcome<E> {
    pub result: IdempotentResult<E>,
    /// The evaluated value before division, `f(T)·E_T`.
    pub value: AlgebraElement<E>,
    pub exponents: Vec<i64>,
    pub pole_orders: Vec<i64>,
}

impl<E> FusionOutcome<E> {
    /// Steps where the detected pole order differs from the exponent.
    pub fn order_findings(&self) -> Vec<String> {
        self.exponents
            .iter()
            .zip(&self.pole_orders)
            .enumerate()
            .filter(|(_, (p, o))| p != o)
            .map(|(i, (p, o))| format!("{}: step {} has pole order {o}, exponent {p}", self.result.tableau, i + 1))
            .collect()
    }
}

fn finish<F: GroundField>(
    alg: &BrauerAlgebra<F>,
    t: &UpdownTableau,
    state: FusionState<F::Elem>,
    reference: Option<&AlgebraElement<F::Elem>>,
) -> Result<FusionOutcome<F::Elem>, IdempotentError> {
    let f = alg.field();
    let (exact_f, _) = f_constant(t)?;
    let constant = f.specialize(&exact_f, alg.omega())?;
    if f.is_zero(&constant) {
        return Err(if is_modular(alg.mode()) {
            IdempotentError::ModularDegeneration(format!("f({t}) vanishes in {}", alg.mode().label()))
        } else {
            IdempotentError::ZeroValue { step: t.n() }
        });
    }
    let element = alg.scale(&state.partial, &f.inv(&constant)?);
    if let Some(expected) = reference {
        if *expected != element {
            return Err(IdempotentError::CrossCheckMismatch(t.to_string()));
        }
    }
    Ok(FusionOutcome {
        result: IdempotentResult {
            tableau: t.clone(),
            element,
            constant,
            method: Method::Fusion,
        },
        value: state.partial,
        exponents: exponents(t),
        pole_orders: state.pole_orders,
    })
}

/// `E_T` by regularized fusion. With `cross_check` the result is compared
/// with the recurrence and a mismatch is an error.
pub fn fusion_idempotent<F: GroundField>(
    alg: &BrauerAlgebra<F>,
    t: &UpdownTableau,
    cross_check: bool,
) -> Result<FusionOutcome<F::Elem>, IdempotentError> {
    if alg.n() != t.n() {
        return Err(IdempotentError::RankMismatch {
            tableau: t.n(),
            algebra: alg.n(),
        });
    }
    let mut state = FusionState::initial(alg);
    for r in 1..=t.n() {
        state = fusion_step(&alg.with_rank(r), &state, &t.prefix(r))?;
    }
    let reference = if cross_check {
        Some(recurrence_idempotent(alg, t)?.element)
    } else {
        None
    };
    finish(alg, t, state, reference.as_ref())
}

/// Fusion for every tableau of length `alg.n()`, sharing prefixes.
pub fn fusion_all<F: GroundField>(
    alg: &BrauerAlgebra<F>,
    cross_check: bool,
) -> Vec<(UpdownTableau, Result<FusionOutcome<F::Elem>, IdempotentError>)> {
    let algs: Vec<BrauerAlgebra<F>> = (0..=alg.n()).map(|r| alg.with_rank(r)).collect();
    let leaves = tree_map(alg.n(), FusionState::initial(alg), &|s: &FusionState<F::Elem>, t: &UpdownTableau| {
        fusion_step(&algs[t.n()], s, t)
    });
    let references: Vec<Option<Result<AlgebraElement<F::Elem>, IdempotentError>>> = if cross_check {
        recurrence_all(alg).into_iter().map(|(_, e)| Some(e)).collect()
    } else {
        vec![None; leaves.len()]
    };
    leaves
        .into_iter()
        .zip(references)
        .map(|((t, state), reference)| {
            let out = (|| {
                let reference = reference.transpose()?;
                finish(alg, &t, state?, reference.as_ref())
            })();
            (t, out)
        })
        .collect()
}

/// Consecutive evaluation of the symmetric-group fusion function at the
/// integer contents `j − i` of a standard tableau; equals `H(λ)·E_T` in the
/// group algebra.
pub fn symmetric_phi<F: GroundField>(
    alg: &BrauerAlgebra<F>,
    t: &UpdownTableau,
) -> Result<AlgebraElement<F::Elem>, IdempotentError> {
    if !t.all_additions() {
        return Err(IdempotentError::NotAllAdditions(t.to_string()));
    }
    if alg.n() != t.n() {
        return Err(IdempotentError::RankMismatch {
            tableau: t.n(),
            algebra: alg.n(),
        });
    }
    let f = alg.field();
    let vals: Vec<F::Elem> = t.steps().iter().map(|s| f.from_i64(s.cell.diagonal())).collect();
    if is_modular(alg.mode()) {
        for r in 1..vals.len() {
            for k in 0..r {
                let exact_zero = t.step(k + 1).cell.diagonal() == t.step(r + 1).cell.diagonal();
                if f.is_zero(&f.sub(&vals[k], &vals[r])) != exact_zero {
                    return Err(IdempotentError::ModularDegeneration(format!(
                        "contents {} and {} coincide in {}",
                        k + 1,
                        r + 1,
                        alg.mode().label()
                    )));
                }
            }
        }
    }
    let mut partial = alg.with_rank(0).one();
    for r in 1..=t.n() {
        let (_, value) = consecutive_step(&alg.with_rank(r), &partial, &vals[..r], false, EvalOrder::Explicit(0))?;
        partial = value;
    }
    Ok(partial)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::exact_algebra;
    use crate::field::PrimeField;
    use crate::tableau::{enumerate_updown, hooks};

    fn t(s: &str) -> UpdownTableau {
        UpdownTableau::parse(s).unwrap()
    }

    #[test]
    fn one_box() {
        let alg = exact_algebra(1);
        let out = fusion_idempotent(&alg, &t("1"), true).unwrap();
        assert_eq!(out.value, alg.one());
        assert_eq!(out.result.constant, alg.field().one());
    }

    #[test]
    fn box_then_empty() {
        let alg = exact_algebra(2);
        let f = alg.field();
        let w = f.gen();
        let e1 = alg.gen(Generator::E(1)).unwrap();
        let out = fusion_idempotent(&alg, &t("1|0"), true).unwrap();
        // (2 − ω)/(ω − 1) · e_1, worked out by hand
        let c = f.div(&f.sub(&f.from_i64(2), &w), &f.sub(&w, &f.one())).unwrap();
        assert_eq!(out.value, alg.scale(&e1, &c));
        assert_eq!(out.result.element, alg.scale(&e1, &f.inv(&w).unwrap()));
        assert_eq!(out.exponents, vec![0, 1]);
        assert_eq!(out.pole_orders, vec![0, 1]);
        assert!(out.order_findings().is_empty());
    }

    #[test]
    fn two_box_row() {
        let alg = exact_algebra(2);
        let f = alg.field();
        let s1 = alg.gen(Generator::S(1)).unwrap();
        let e1 = alg.gen(Generator::E(1)).unwrap();
        let out = fusion_idempotent(&alg, &t("1|2"), true).unwrap();
        // (1 + s_1) − 2e_1/ω
        let two_over_w = f.div(&f.from_i64(2), &f.gen()).unwrap();
        let expect = alg.sub(&alg.add(&alg.one(), &s1).unwrap(), &alg.scale(&e1, &two_over_w)).unwrap();
        assert_eq!(out.value, expect);
        assert_eq!(out.result.constant, f.from_i64(2));
    }

    #[test]
    fn regularized_eval_examples() {
        // X = (1 − e/(c₁+u)) at u = −c₁ for the 1|0 tableau
        let alg = exact_algebra(2);
        let ualg = u_algebra(&alg);
        let (uf, f) = (ualg.field(), alg.field());
        let c1 = content_value(&alg, &ContentSymbol::added(0)).unwrap();
        let e = generator(2, Generator::E(1)).unwrap();
        let x = ualg.mul_one_plus(&ualg.one(), &e, &uf.over_linear(&f.from_i64(-1), &f.neg(&c1))).unwrap();
        let (order, value) = regularized_eval(&ualg, &x, &f.neg(&c1), EvalOrder::Explicit(1)).unwrap();
        assert_eq!(order, 1);
        assert!(!value.is_zero());
        let (auto, value_auto) = regularized_eval(&ualg, &x, &f.neg(&c1), EvalOrder::Auto).unwrap();
        assert_eq!((auto, value_auto), (1, value));
        assert!(matches!(
            regularized_eval(&ualg, &x, &f.neg(&c1), EvalOrder::Explicit(0)),
            Err(IdempotentError::PoleAtEvaluationPoint { order: 1, shift: 0, .. })
        ));
        // regular point, p = 0 is plain evaluation
        let (order, value) = regularized_eval(&ualg, &x, &c1, EvalOrder::Explicit(0)).unwrap();
        assert_eq!(order, 0);
        let expect_coeff = f.neg(&f.inv(&f.add(&c1, &c1)).unwrap());
        assert_eq!(value.coeff(&e), Some(&expect_coeff));
        assert!(regularized_eval(&ualg, &ualg.zero(), &c1, EvalOrder::Auto).is_err());
    }

    #[test]
    fn fusion_matches_recurrence_up_to_three() {
        for n in 1..=3 {
            let alg = exact_algebra(n);
            for (tab, out) in fusion_all(&alg, true) {
                let out = out.unwrap_or_else(|e| panic!("{tab}: {e}"));
                let (f_exact, _) = f_constant(&tab).unwrap();
                assert_eq!(out.result.constant, f_exact);
                assert_eq!(out.value, alg.scale(&out.result.element, &f_exact));
                assert!(out.order_findings().is_empty(), "{:?}", out.order_findings());
            }
        }
    }

    #[test]
    fn modular_fusion_matches_modular_recurrence() {
        let p = 1_000_003;
        let field = PrimeField::new(p).unwrap();
        let alg = BrauerAlgebra::new(3, field, 4242, FieldMode::PrimeModular { prime: p, omega: 4242 });
        for (tab, out) in fusion_all(&alg, true) {
            out.unwrap_or_else(|e| panic!("{tab}: {e}"));
        }
    }

    #[test]
    fn symmetric_examples() {
        let alg = exact_algebra(2);
        let s1 = alg.gen(Generator::S(1)).unwrap();
        assert_eq!(symmetric_phi(&alg, &t("1|2")).unwrap(), alg.add(&alg.one(), &s1).unwrap());
        assert_eq!(symmetric_phi(&alg, &t("1|11")).unwrap(), alg.sub(&alg.one(), &s1).unwrap());
        assert!(matches!(symmetric_phi(&alg, &t("1|0")), Err(IdempotentError::NotAllAdditions(_))));
        let alg3 = exact_algebra(3);
        let f = alg3.field();
        for tab in enumerate_updown(3, None).unwrap().into_iter().filter(|t| t.all_additions()) {
            let phi = symmetric_phi(&alg3, &tab).unwrap();
            assert!(phi.is_permutation_supported());
            let h = f.from_i64(hooks(&tab.final_shape()) as i64);
            let e = alg3.scale(&phi, &f.inv(&h).unwrap());
            assert!(alg3.is_idempotent(&e), "{tab}");
        }
    }
}
