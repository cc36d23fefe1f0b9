use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::line_operator::{
    ExtendedFunction, FunctionOnLine, LineModel, TriplePattern, TripleTable,
};

/// `Ef|_K = f` and `Ef(n) = f(x⁰ₙ) − f(x¹ₙ) + f(x²ₙ)`.
pub fn apply_operator(f: &FunctionOnLine, triples: &TripleTable) -> Result<ExtendedFunction> {
    let on_omega = triples
        .triples()
        .iter()
        .map(|t| Ok(f.eval(&t.x0)? - f.eval(&t.x1)? + f.eval(&t.x2)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(ExtendedFunction {
        on_k: f.clone(),
        on_omega,
    })
}

/// Exact norm of the operator on a finite model.
///
/// A row with three distinct points has coefficient mass 3 and is attained by
/// `f = (1, −1, 1)` on the triple; any coincidence collapses the signed sum to
/// a single evaluation (`x⁰ = x²` cannot occur in an ordered triple). The
/// restriction to `K` contributes 1.
pub fn operator_norm(triples: &TripleTable) -> BigRational {
    let strict = triples
        .triples()
        .iter()
        .any(|t| t.pattern() == TriplePattern::Strict);
    BigRational::from_integer(if strict { 3 } else { 1 }.into())
}

/// For the first strict row `n`, the function `1` on `x⁰ₙ, x²ₙ`, `−1` on
/// `x¹ₙ` and `0` elsewhere: `sup|f| = 1` and `Ef(n) = 3`.
pub fn norm_witness(triples: &TripleTable, model: &LineModel) -> Option<(usize, FunctionOnLine)> {
    let (n, t) = triples
        .triples()
        .iter()
        .enumerate()
        .find(|(_, t)| t.pattern() == TriplePattern::Strict)?;
    let f = FunctionOnLine::from_fn(model, |x| {
        if *x == t.x0 || *x == t.x2 {
            BigRational::one()
        } else if *x == t.x1 {
            -BigRational::one()
        } else {
            BigRational::zero()
        }
    });
    Some((n, f))
}
