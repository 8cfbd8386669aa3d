use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::kernel;
use crate::{Coefficient, Domain, Error, Result};

/// An arithmetic function known on the indices `1..=N`.
///
/// Binary operations between functions of different bounds truncate to the
/// smaller bound. Operations between different domains are rejected.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArithFunc {
    domain: Domain,
    values: Vec<Coefficient>,
}

/// The least index carrying a nonzero value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rank {
    Detected {
        index: usize,
        leading: Coefficient,
    },
    /// Every value up to the bound is zero.
    NotVisibleAtBound,
}

impl Rank {
    pub fn index(&self) -> Option<usize> {
        match self {
            Rank::Detected { index, .. } => Some(*index),
            Rank::NotVisibleAtBound => None,
        }
    }
}

/// Outcome of solving `divisor ∗ γ = dividend` at the common bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DivisionVerdict {
    /// `divisor ∗ quotient = dividend` holds exactly on `1..=N`. The
    /// quotient is zero above `⌊N / rank(divisor)⌋`.
    Quotient(ArithFunc),
    /// No quotient exists at this bound; `witness` is the first index at
    /// which the equation fails (or, over the integers, where an exact
    /// division step fails).
    NotDivisibleAtBound { witness: usize },
}

impl DivisionVerdict {
    pub fn quotient(&self) -> Option<&ArithFunc> {
        match self {
            DivisionVerdict::Quotient(q) => Some(q),
            DivisionVerdict::NotDivisibleAtBound { .. } => None,
        }
    }

    pub fn is_quotient(&self) -> bool {
        self.quotient().is_some()
    }
}

impl ArithFunc {
    /// Builds a function from its values `α(1), …, α(N)`.
    pub fn new(values: Vec<Coefficient>, domain: Domain) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Empty);
        }
        if let Some((i, v)) = values.iter().enumerate().find(|(_, v)| !domain.contains(v)) {
            return Err(Error::NotInDomain {
                index: i + 1,
                value: v.to_string(),
                domain,
            });
        }
        Ok(ArithFunc { domain, values })
    }

    pub fn from_integers<I, T>(values: I, domain: Domain) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let values: Vec<_> = values.into_iter().map(Coefficient::from_integer).collect();
        if values.is_empty() {
            return Err(Error::Empty);
        }
        Ok(ArithFunc { domain, values })
    }

    /// The multiplicative identity: 1 at index 1, 0 elsewhere.
    pub fn epsilon(bound: usize, domain: Domain) -> Result<Self> {
        Self::nu(1, bound, domain)
    }

    /// The additive identity.
    pub fn omega(bound: usize, domain: Domain) -> Result<Self> {
        if bound == 0 {
            return Err(Error::Empty);
        }
        Ok(ArithFunc {
            domain,
            values: vec![Coefficient::zero(); bound],
        })
    }

    /// The indicator of the index `r`.
    pub fn nu(r: usize, bound: usize, domain: Domain) -> Result<Self> {
        if r == 0 || r > bound {
            return Err(Error::IndexOutOfRange { index: r, bound });
        }
        let mut f = Self::omega(bound, domain)?;
        f.values[r - 1] = Coefficient::one();
        Ok(f)
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn bound(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Coefficient] {
        &self.values
    }

    /// `α(n)` for `1 ≤ n ≤ N`.
    pub fn at(&self, n: usize) -> Option<&Coefficient> {
        n.checked_sub(1).and_then(|i| self.values.get(i))
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Coefficient::is_zero)
    }

    /// Reinterprets the values in another domain. Embedding into the
    /// rationals always succeeds; the reverse requires integral values.
    pub fn to_domain(&self, domain: Domain) -> Result<Self> {
        Self::new(self.values.clone(), domain)
    }

    pub fn add(&self, other: &ArithFunc) -> Result<ArithFunc> {
        let domain = self.common_domain(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| Coefficient(&a.0 + &b.0))
            .collect();
        Ok(ArithFunc { domain, values })
    }

    pub fn sub(&self, other: &ArithFunc) -> Result<ArithFunc> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ArithFunc {
        ArithFunc {
            domain: self.domain,
            values: self.values.iter().map(|v| Coefficient(-&v.0)).collect(),
        }
    }

    /// Dirichlet convolution `(α∗β)(n) = Σ_{dδ=n} α(d)β(δ)`.
    pub fn convolve(&self, other: &ArithFunc) -> Result<ArithFunc> {
        let domain = self.common_domain(other)?;
        Ok(match domain {
            Domain::Integer => Self::from_big(
                domain,
                kernel::convolve_integers(&self.integers(), &other.integers()),
            ),
            Domain::Rational => Self::from_ratios(
                domain,
                kernel::convolve_rationals(&self.ratios(), &other.ratios()),
            ),
        })
    }

    pub fn rank(&self) -> Rank {
        self.values
            .iter()
            .position(|v| !v.is_zero())
            .map_or(Rank::NotVisibleAtBound, |i| Rank::Detected {
                index: i + 1,
                leading: self.values[i].clone(),
            })
    }

    /// Over the rationals a function is a unit iff `α(1) ≠ 0`; over the
    /// integers iff `α(1) = ±1`.
    pub fn is_unit(&self) -> bool {
        let first = &self.values[0];
        match self.domain {
            Domain::Rational => !first.is_zero(),
            Domain::Integer => first.0.abs().is_one(),
        }
    }

    /// The convolution inverse, by forward substitution
    /// `γ(1) = α(1)⁻¹`, `γ(n) = −α(1)⁻¹ Σ_{d|n, d>1} α(d)γ(n/d)`.
    pub fn inverse(&self) -> Result<ArithFunc> {
        if !self.is_unit() {
            return Err(Error::NotAUnit(self.values[0].to_string()));
        }
        let eps = Self::epsilon(self.bound(), self.domain)?;
        Ok(match self.domain {
            Domain::Integer => {
                let gamma = kernel::solve_triangular(&self.integers(), &eps.integers(), 1)
                    .expect("division by a unit is exact");
                Self::from_big(self.domain, gamma)
            }
            Domain::Rational => {
                let gamma = kernel::solve_triangular(&self.ratios(), &eps.ratios(), 1)
                    .expect("division by a nonzero rational is exact");
                Self::from_ratios(self.domain, gamma)
            }
        })
    }

    /// Decides whether `divisor` divides `self` at the common bound, i.e.
    /// solves `divisor ∗ γ = self`.
    ///
    /// The quotient is solved on `1..=⌊N/b⌋` (`b` the divisor's rank) and
    /// then the full residual is checked on `1..=N`.
    pub fn divide(&self, divisor: &ArithFunc) -> Result<DivisionVerdict> {
        let domain = self.common_domain(divisor)?;
        let n = self.bound().min(divisor.bound());
        let dividend = self.restrict(n)?;
        let divisor = divisor.restrict(n)?;
        let b = divisor.rank().index().ok_or(Error::NoVisibleRank)?;
        if dividend.is_zero() {
            return Ok(DivisionVerdict::Quotient(Self::omega(n, domain)?));
        }
        let quotient = match domain {
            Domain::Integer => {
                kernel::solve_triangular(&divisor.integers(), &dividend.integers(), b)
                    .map(|g| Self::from_big(domain, pad(g, n)))
            }
            Domain::Rational => kernel::solve_triangular(&divisor.ratios(), &dividend.ratios(), b)
                .map(|g| Self::from_ratios(domain, pad(g, n))),
        };
        let quotient = match quotient {
            Ok(q) => q,
            Err(witness) => return Ok(DivisionVerdict::NotDivisibleAtBound { witness }),
        };
        let product = divisor.convolve(&quotient)?;
        Ok(match first_difference(&product, &dividend) {
            Some(witness) => DivisionVerdict::NotDivisibleAtBound { witness },
            None => DivisionVerdict::Quotient(quotient),
        })
    }

    /// Whether each of `self` and `other` divides the other at the common
    /// bound.
    pub fn are_associates(&self, other: &ArithFunc) -> Result<bool> {
        let two_sided = self.associates_by_division(other)?;
        debug_assert_eq!(
            Some(two_sided),
            self.associates_by_unit_quotient(other).ok(),
            "associate characterizations disagree"
        );
        Ok(two_sided)
    }

    /// Two-sided divisibility test.
    pub fn associates_by_division(&self, other: &ArithFunc) -> Result<bool> {
        self.common_domain(other)?;
        match (self.is_zero_at(other), other.is_zero_at(self)) {
            (true, true) => return Ok(true),
            (true, false) | (false, true) => return Ok(false),
            _ => {}
        }
        Ok(self.divide(other)?.is_quotient() && other.divide(self)?.is_quotient())
    }

    /// Equal ranks, and the one-sided quotient `self / other` exists and is
    /// a unit.
    pub fn associates_by_unit_quotient(&self, other: &ArithFunc) -> Result<bool> {
        self.common_domain(other)?;
        let n = self.bound().min(other.bound());
        let (a, b) = (self.restrict(n)?, other.restrict(n)?);
        match (a.rank().index(), b.rank().index()) {
            (None, None) => Ok(true),
            (Some(ra), Some(rb)) if ra == rb => {
                Ok(a.divide(&b)?.quotient().is_some_and(ArithFunc::is_unit))
            }
            _ => Ok(false),
        }
    }

    /// Multiplies every value by `c`; equal to convolving with `c·ε`.
    pub fn scale(&self, c: &Coefficient) -> Result<ArithFunc> {
        if !self.domain.contains(c) {
            return Err(Error::NotInDomain {
                index: 0,
                value: c.to_string(),
                domain: self.domain,
            });
        }
        Ok(ArithFunc {
            domain: self.domain,
            values: self
                .values
                .iter()
                .map(|v| Coefficient(&v.0 * &c.0))
                .collect(),
        })
    }

    /// Keeps indices `1..=m`.
    pub fn restrict(&self, m: usize) -> Result<ArithFunc> {
        if m == 0 || m > self.bound() {
            return Err(Error::IndexOutOfRange {
                index: m,
                bound: self.bound(),
            });
        }
        Ok(ArithFunc {
            domain: self.domain,
            values: self.values[..m].to_vec(),
        })
    }

    /// Scales so the leading value is 1 (rationals) or positive (integers).
    ///
    /// This is a convenience normalization only: two associates can have
    /// different monic forms, because unit factors other than scalars
    /// change the higher values.
    pub fn monic(&self) -> Result<ArithFunc> {
        let Rank::Detected { leading, .. } = self.rank() else {
            return Err(Error::NoVisibleRank);
        };
        let factor = match self.domain {
            Domain::Rational => Coefficient(leading.0.recip()),
            Domain::Integer => Coefficient::from_integer(leading.numer().signum()),
        };
        self.scale(&factor)
    }

    fn common_domain(&self, other: &ArithFunc) -> Result<Domain> {
        if self.domain == other.domain {
            Ok(self.domain)
        } else {
            Err(Error::DomainMismatch(self.domain, other.domain))
        }
    }

    fn is_zero_at(&self, other: &ArithFunc) -> bool {
        let n = self.bound().min(other.bound());
        self.values[..n].iter().all(Coefficient::is_zero)
    }

    fn integers(&self) -> Vec<BigInt> {
        debug_assert_eq!(self.domain, Domain::Integer);
        self.values.iter().map(|v| v.0.numer().clone()).collect()
    }

    fn ratios(&self) -> Vec<BigRational> {
        self.values.iter().map(|v| v.0.clone()).collect()
    }

    fn from_big(domain: Domain, values: Vec<BigInt>) -> ArithFunc {
        ArithFunc {
            domain,
            values: values.into_iter().map(Coefficient::from_integer).collect(),
        }
    }

    fn from_ratios(domain: Domain, values: Vec<BigRational>) -> ArithFunc {
        ArithFunc {
            domain,
            values: values.into_iter().map(Coefficient).collect(),
        }
    }
}

fn pad<T: Clone + Zero>(mut values: Vec<T>, n: usize) -> Vec<T> {
    values.resize(n, T::zero());
    values
}

/// First index (1-based) where two functions differ on their common range.
pub(crate) fn first_difference(a: &ArithFunc, b: &ArithFunc) -> Option<usize> {
    a.values
        .iter()
        .zip(&b.values)
        .position(|(x, y)| x != y)
        .map(|i| i + 1)
}

impl fmt::Display for ArithFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}
