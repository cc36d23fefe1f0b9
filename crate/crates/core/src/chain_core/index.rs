use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational position of an index point.
///
/// Always stored in lowest terms with a positive denominator, so structural
/// equality coincides with numeric equality. Displayed as `p/q`, including
/// integers (`3/1`).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexValue(BigRational);

impl IndexValue {
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Result<Self> {
        let (numer, denom) = (numerator.into(), denominator.into());
        if denom.is_zero() {
            return Err(Error::ParseRational(format!("{numer}/0")));
        }
        Ok(IndexValue(BigRational::new(numer, denom)))
    }

    /// Shorthand for small literals; panics on a zero denominator.
    pub fn ratio(numerator: i64, denominator: i64) -> Self {
        Self::new(numerator, denominator).expect("nonzero denominator")
    }

    pub fn integer(value: i64) -> Self {
        IndexValue(BigRational::from_integer(value.into()))
    }

    pub fn from_rational(value: BigRational) -> Self {
        IndexValue(value)
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn into_rational(self) -> BigRational {
        self.0
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    /// True when the value is `k / 2^depth` for some integer `k`.
    pub fn is_dyadic_at_depth(&self, depth: u32) -> bool {
        let scaled = &self.0 * BigRational::from_integer(BigInt::one() << depth as usize);
        scaled.is_integer()
    }
}

/// Parses a rational written as `p/q` or a bare integer `p`.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let trimmed = text.trim();
    let err = || Error::ParseRational(text.to_string());
    let (numer, denom) = match trimmed.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (trimmed, "1"),
    };
    let numer = BigInt::from_str(numer).map_err(|_| err())?;
    let denom = BigInt::from_str(denom).map_err(|_| err())?;
    if denom.is_zero() {
        return Err(err());
    }
    Ok(BigRational::new(numer, denom))
}

impl FromStr for IndexValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_rational(s).map(IndexValue)
    }
}

impl fmt::Display for IndexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for IndexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<BigRational> for IndexValue {
    fn from(value: BigRational) -> Self {
        IndexValue(value)
    }
}

/// Formats a function value: integers without a denominator, otherwise `p/q`.
pub fn format_rational(value: &BigRational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}
