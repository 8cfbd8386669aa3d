use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Which coefficient ring an arithmetic function takes its values in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Domain {
    /// The field of rational numbers.
    #[serde(rename = "Q")]
    Rational,
    /// The ring of rational integers.
    #[serde(rename = "Z")]
    Integer,
}

impl Domain {
    pub fn symbol(self) -> &'static str {
        match self {
            Domain::Rational => "Q",
            Domain::Integer => "Z",
        }
    }

    pub fn contains(self, c: &Coefficient) -> bool {
        match self {
            Domain::Rational => true,
            Domain::Integer => c.is_integer(),
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Domain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "Q" | "q" | "rational" => Ok(Domain::Rational),
            "Z" | "z" | "integer" => Ok(Domain::Integer),
            other => Err(Error::Format(format!("unknown domain `{other}`"))),
        }
    }
}

/// An exact coefficient value.
///
/// Stored as a reduced rational with positive denominator; integers have
/// denominator one. Whether the value is admissible for a function is
/// decided by the function's [`Domain`], not by the coefficient itself.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coefficient(pub(crate) BigRational);

impl Coefficient {
    pub fn zero() -> Self {
        Coefficient(BigRational::zero())
    }

    pub fn one() -> Self {
        Coefficient(BigRational::one())
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Coefficient(BigRational::from_integer(n.into()))
    }

    /// Builds `numer / denom` in lowest terms. Returns `None` for a zero
    /// denominator.
    pub fn from_ratio(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Option<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return None;
        }
        Some(Coefficient(BigRational::new(numer.into(), denom)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.numer().clone())
    }

    pub fn abs(&self) -> Self {
        Coefficient(self.0.abs())
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }

    pub fn into_ratio(self) -> BigRational {
        self.0
    }
}

impl From<BigRational> for Coefficient {
    fn from(r: BigRational) -> Self {
        Coefficient(r)
    }
}

impl From<BigInt> for Coefficient {
    fn from(n: BigInt) -> Self {
        Coefficient::from_integer(n)
    }
}

impl From<i64> for Coefficient {
    fn from(n: i64) -> Self {
        Coefficient::from_integer(n)
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Coefficient {
    type Err = Error;

    /// Accepts `"n"` or `"p/q"`; the result is reduced.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Format(format!("`{s}` is not an integer or a fraction p/q"));
        let s = s.trim();
        match s.split_once('/') {
            None => s
                .parse::<BigInt>()
                .map(Coefficient::from_integer)
                .map_err(|_| bad()),
            Some((p, q)) => {
                let p: BigInt = p.trim().parse().map_err(|_| bad())?;
                let q: BigInt = q.trim().parse().map_err(|_| bad())?;
                Coefficient::from_ratio(p, q)
                    .ok_or_else(|| Error::Format(format!("`{s}` has a zero denominator")))
            }
        }
    }
}
