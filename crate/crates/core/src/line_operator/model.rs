use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::chain_core::{ChainFamily, IndexValue};
use crate::error::{Error, Result};

/// A finite linear order `K` standing in for a compact line, with the subset
/// `Y ⊆ K` that indexes the family. Every point of a finite order is
/// isolated, so no further point classification is kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineModel {
    carrier: Vec<IndexValue>,
    dense: Vec<IndexValue>,
}

impl LineModel {
    pub fn new(carrier: Vec<IndexValue>, dense: Vec<IndexValue>) -> Result<Self> {
        if carrier.is_empty() {
            return Err(Error::InvalidModel("carrier is empty".into()));
        }
        if carrier.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidModel(
                "carrier is not strictly increasing".into(),
            ));
        }
        if dense.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidModel("Y is not strictly increasing".into()));
        }
        if let Some(y) = dense.iter().find(|y| carrier.binary_search(y).is_err()) {
            return Err(Error::InvalidModel(format!(
                "{y} is in Y but not in the carrier"
            )));
        }
        Ok(LineModel { carrier, dense })
    }

    /// `K = Y = ` the family's indices.
    pub fn from_family(family: &ChainFamily) -> Result<Self> {
        LineModel::new(family.indices().to_vec(), family.indices().to_vec())
    }

    /// `K = Y ∪ {top}`, with `top` above every index.
    pub fn with_top(family: &ChainFamily, top: IndexValue) -> Result<Self> {
        let mut carrier = family.indices().to_vec();
        carrier.push(top);
        LineModel::new(carrier, family.indices().to_vec())
    }

    pub fn carrier(&self) -> &[IndexValue] {
        &self.carrier
    }

    pub fn dense(&self) -> &[IndexValue] {
        &self.dense
    }

    pub fn max_point(&self) -> &IndexValue {
        self.carrier.last().expect("nonempty carrier")
    }

    pub fn contains(&self, x: &IndexValue) -> bool {
        self.carrier.binary_search(x).is_ok()
    }
}

/// A function `f : K → ℚ`. On a finite order every function is continuous.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionOnLine {
    values: BTreeMap<IndexValue, BigRational>,
}

impl FunctionOnLine {
    /// Requires exactly one value per carrier point.
    pub fn new(model: &LineModel, values: BTreeMap<IndexValue, BigRational>) -> Result<Self> {
        if let Some(x) = values.keys().find(|x| !model.contains(x)) {
            return Err(Error::FunctionOutsideCarrier(x.clone()));
        }
        if let Some(x) = model.carrier().iter().find(|x| !values.contains_key(x)) {
            return Err(Error::FunctionUndefined(x.clone()));
        }
        Ok(FunctionOnLine { values })
    }

    pub fn from_fn<F>(model: &LineModel, mut f: F) -> Self
    where
        F: FnMut(&IndexValue) -> BigRational,
    {
        FunctionOnLine {
            values: model.carrier().iter().map(|x| (x.clone(), f(x))).collect(),
        }
    }

    pub fn constant(model: &LineModel, c: BigRational) -> Self {
        Self::from_fn(model, |_| c.clone())
    }

    pub fn get(&self, x: &IndexValue) -> Option<&BigRational> {
        self.values.get(x)
    }

    pub fn eval(&self, x: &IndexValue) -> Result<&BigRational> {
        self.values
            .get(x)
            .ok_or_else(|| Error::FunctionUndefined(x.clone()))
    }

    pub fn values(&self) -> &BTreeMap<IndexValue, BigRational> {
        &self.values
    }

    pub fn sup_norm(&self) -> BigRational {
        sup_abs(self.values.values())
    }

    /// `α·self + β·other`, on the common domain.
    pub fn linear_combination(
        &self,
        alpha: &BigRational,
        other: &FunctionOnLine,
        beta: &BigRational,
    ) -> Result<FunctionOnLine> {
        let values = self
            .values
            .iter()
            .map(|(x, v)| Ok((x.clone(), alpha * v + beta * other.eval(x)?)))
            .collect::<Result<_>>()?;
        Ok(FunctionOnLine { values })
    }
}

pub(crate) fn sup_abs<'a>(values: impl Iterator<Item = &'a BigRational>) -> BigRational {
    values
        .map(|v| v.abs())
        .max()
        .unwrap_or_else(BigRational::zero)
}

/// `Ef` on `L = K ∪ ω`: `f` itself on `K`, and the three-point combination on
/// each ground element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedFunction {
    pub on_k: FunctionOnLine,
    pub on_omega: Vec<BigRational>,
}

impl ExtendedFunction {
    pub fn sup_norm(&self) -> BigRational {
        self.on_k.sup_norm().max(sup_abs(self.on_omega.iter()))
    }
}
