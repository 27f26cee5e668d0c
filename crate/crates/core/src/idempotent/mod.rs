//! Primitive idempotents `E_T` of `B_n(ω)`.
//!
//! Two constructions are provided: the Jucys–Murphy recurrence and the
//! regularized fusion procedure. Both run over any [`GroundField`], so the
//! same code serves exact `Q(ω)` arithmetic and the `F_p` specialization.
//! Auxiliary identity checks live in [`checks`] and [`spectral`].

pub mod checks;
mod fusion;
mod recurrence;
pub mod spectral;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{AlgebraElement, AlgebraError, BrauerAlgebra};
use crate::field::{Field, FieldError, GroundField, QOmega, QOmegaElem, RatFuncField, RationalFunction};
use crate::tableau::{ContentSymbol, TableauError, UpdownTableau};

pub use fusion::{
    fusion_all, fusion_idempotent, regularized_eval, symmetric_phi, EvalOrder, FusionOutcome, FusionState,
};
pub use recurrence::{recurrence_all, recurrence_idempotent, recurrence_step};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Recurrence,
    Fusion,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdempotentError {
    #[error("step {step}: content {content} collides with another content of the same shape")]
    ContentCollision { step: usize, content: String },
    #[error("modular degeneration: {0}")]
    ModularDegeneration(String),
    #[error("step {step}: pole of order {order} exceeds the exponent {shift}")]
    PoleAtEvaluationPoint { step: usize, order: i64, shift: i64 },
    #[error("step {step}: the regularized value vanishes")]
    ZeroValue { step: usize },
    #[error("fusion and recurrence disagree for {0}")]
    CrossCheckMismatch(String),
    #[error("tableau {0} removes a box")]
    NotAllAdditions(String),
    #[error("{0} is not a nonzero scalar multiple of the reference idempotent")]
    NotProportional(String),
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),
    #[error("degenerate points: {0}")]
    DegeneratePoints(String),
    #[error("tableau of length {tableau} used in B_{algebra}")]
    RankMismatch { tableau: usize, algebra: usize },
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error(transparent)]
    Algebra(AlgebraError),
    #[error(transparent)]
    Field(FieldError),
}

impl IdempotentError {
    /// True for failures caused by an unlucky `(p, ω)` rather than by the
    /// mathematics.
    pub fn is_degeneration(&self) -> bool {
        matches!(self, IdempotentError::ModularDegeneration(_))
    }
}

impl From<FieldError> for IdempotentError {
    fn from(e: FieldError) -> Self {
        match e {
            FieldError::ModularDegeneration(m) => IdempotentError::ModularDegeneration(m),
            other => IdempotentError::Field(other),
        }
    }
}

impl From<crate::diagram::DiagramError> for IdempotentError {
    fn from(e: crate::diagram::DiagramError) -> Self {
        IdempotentError::Algebra(e.into())
    }
}

impl From<AlgebraError> for IdempotentError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::Field(f) => f.into(),
            other => IdempotentError::Algebra(other),
        }
    }
}

/// `E_T` together with the scalar it was recovered from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdempotentResult<E> {
    pub tableau: UpdownTableau,
    pub element: AlgebraElement<E>,
    /// `f(T)` for fusion, 1 for the recurrence.
    pub constant: E,
    pub method: Method,
}

impl<E> IdempotentResult<E> {
    pub fn to_json<F: Field<Elem = E>>(&self, alg: &BrauerAlgebra<F>) -> Value {
        json!({
            "tableau": self.tableau.to_string(),
            "shapes": self.tableau.shapes(),
            "method": self.method,
            "mode": self.element.mode(),
            "constant": alg.field().to_json(&self.constant),
            "element": alg.to_json(&self.element),
        })
    }

    pub fn from_json<F: Field<Elem = E>>(alg: &BrauerAlgebra<F>, v: &Value) -> Result<Self, IdempotentError> {
        let bad = |m: String| IdempotentError::Algebra(AlgebraError::Json(m));
        let text = v.get("tableau").and_then(Value::as_str).ok_or_else(|| bad("missing tableau".into()))?;
        let tableau = UpdownTableau::parse(text)?;
        let method: Method = serde_json::from_value(v.get("method").cloned().unwrap_or(Value::Null))
            .map_err(|e| bad(e.to_string()))?;
        let constant = alg
            .field()
            .from_json(v.get("constant").ok_or_else(|| bad("missing constant".into()))?)?;
        let element = alg.from_json(v.get("element").ok_or_else(|| bad("missing element".into()))?)?;
        Ok(Self {
            tableau,
            element,
            constant,
            method,
        })
    }
}

/// Contents `c_1, …, c_n` of `t` as elements of the algebra's field.
pub fn content_values<F: Field>(alg: &BrauerAlgebra<F>, t: &UpdownTableau) -> Result<Vec<F::Elem>, IdempotentError> {
    crate::tableau::contents(t)
        .iter()
        .map(|s| content_value(alg, s))
        .collect()
}

pub(crate) fn content_value<F: Field>(alg: &BrauerAlgebra<F>, s: &ContentSymbol) -> Result<F::Elem, IdempotentError> {
    Ok(s.value(alg.field(), alg.omega())?)
}

/// `B_n` over `F(u)` with the same ω.
pub fn u_algebra<F: Field>(alg: &BrauerAlgebra<F>) -> BrauerAlgebra<RatFuncField<F>> {
    let uf = RatFuncField::new(alg.field().clone(), "u");
    let w = uf.constant(alg.omega().clone());
    BrauerAlgebra::new(alg.n(), uf, w, alg.mode())
}

/// Views an element with `u`-free coefficients inside a `u`-extended algebra
/// of the same or larger rank.
pub fn lift<F: Field>(
    alg: &BrauerAlgebra<F>,
    ualg: &BrauerAlgebra<RatFuncField<F>>,
    a: &AlgebraElement<F::Elem>,
) -> Result<AlgebraElement<RationalFunction<F::Elem>>, IdempotentError> {
    let uf = ualg.field().clone();
    Ok(alg.map_into(ualg, a, |c| Ok(uf.constant(c.clone())))?)
}

/// Image of an exact element under the specialization `Q(ω) → F`.
pub fn specialize_element<F: GroundField>(
    exact: &BrauerAlgebra<QOmega>,
    target: &BrauerAlgebra<F>,
    a: &AlgebraElement<QOmegaElem>,
) -> Result<AlgebraElement<F::Elem>, IdempotentError> {
    let field = target.field().clone();
    let omega = target.omega().clone();
    Ok(exact.map_into(target, a, |c| field.specialize(c, &omega))?)
}

/// Applies `step` along every prefix of every updown tableau of length `n`,
/// sharing work between tableaux with a common prefix. Leaves come back in
/// enumeration order.
pub(crate) fn tree_map<S, G>(n: usize, root: S, step: &G) -> Vec<(UpdownTableau, Result<S, IdempotentError>)>
where
    S: Clone + Send + Sync,
    G: Fn(&S, &UpdownTableau) -> Result<S, IdempotentError> + Sync,
{
    fn rec<S, G>(
        prefix: UpdownTableau,
        state: Result<S, IdempotentError>,
        n: usize,
        step: &G,
    ) -> Vec<(UpdownTableau, Result<S, IdempotentError>)>
    where
        S: Clone + Send + Sync,
        G: Fn(&S, &UpdownTableau) -> Result<S, IdempotentError> + Sync,
    {
        if prefix.n() == n {
            return vec![(prefix, state)];
        }
        let last = prefix.final_shape();
        let children: Vec<UpdownTableau> = last
            .addable()
            .into_iter()
            .map(|c| last.with_added(c))
            .chain(last.removable().into_iter().map(|c| last.with_removed(c)))
            .map(|shape| prefix.extended(shape).expect("one-box step"))
            .collect();
        children
            .into_par_iter()
            .map(|child| {
                let next = match &state {
                    Ok(s) => step(s, &child),
                    Err(e) => Err(e.clone()),
                };
                rec(child, next, n, step)
            })
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    }
    let empty = UpdownTableau::new(Vec::new()).expect("empty tableau");
    rec(empty, Ok(root), n, step)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::exact_algebra;
    use crate::tableau::enumerate_updown;

    #[test]
    fn tree_map_visits_in_enumeration_order() {
        for n in 1..=4 {
            let leaves = tree_map(n, 0usize, &|s: &usize, _t: &UpdownTableau| Ok(s + 1));
            let order: Vec<UpdownTableau> = leaves.iter().map(|(t, _)| t.clone()).collect();
            assert_eq!(order, enumerate_updown(n, None).unwrap());
            assert!(leaves.iter().all(|(_, s)| *s.as_ref().unwrap() == n));
        }
    }

    #[test]
    fn result_json_roundtrip() {
        let alg = exact_algebra(2);
        let t = UpdownTableau::parse("1|0").unwrap();
        let r = recurrence_idempotent(&alg, &t).unwrap();
        let v = r.to_json(&alg);
        assert_eq!(v["method"], "recurrence");
        assert_eq!(v["tableau"], "1|0");
        assert_eq!(IdempotentResult::from_json(&alg, &v).unwrap(), r);
    }
}
