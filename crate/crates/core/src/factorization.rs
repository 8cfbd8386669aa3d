//! Irreducibility certificates and factorization checks.
//!
//! Nothing here searches for factorizations. [`certify`] fires a small set
//! of sound rules and otherwise answers [`Verdict::Unknown`]; the other
//! entry points only check factorizations they are handed.
//!
//! The rules reason about every extension of the truncated function to
//! the full ring, so an `Irreducible` certificate does not depend on the
//! bound:
//!
//! * **prime support**: `α(1) = 0` and `α(p) ≠ 0` for a prime `p`. Two
//!   factors that both vanish at 1 produce a product vanishing at every
//!   prime. Over the integers a factor could instead be a rank-one
//!   nonunit `c·…` with `|c| ≥ 2`, which divides `α(p)` for every prime
//!   `p`; the rule therefore also requires the visible prime values to be
//!   coprime.
//! * **prime rank** (rationals only): ranks multiply, so one factor of a
//!   prime-rank function has rank 1 and is a unit. A prime rank `p`
//!   already means `α(p) ≠ 0`, so the prime-support rule reports these
//!   functions first.
//! * **prime leading magnitude** (integers only): `|α(1)|` is the product
//!   of the factors' leading magnitudes, so one of them is 1.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::{ArithFunc, Domain, Error, Rank, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reason {
    PrimeSupport(usize),
    PrimeRank(usize),
    PrimeLeadingMagnitude(BigInt),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Zero,
    Unit,
    Irreducible(Reason),
    /// Two nonunit factors whose convolution is the function at its bound.
    Reducible(ArithFunc, ArithFunc),
    Unknown,
}

impl Verdict {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Verdict::Irreducible(_))
    }

    pub fn reason(&self) -> Option<&Reason> {
        match self {
            Verdict::Irreducible(r) => Some(r),
            _ => None,
        }
    }

    /// Serializable summary: verdict name, reason, and the indices whose
    /// values justify it.
    pub fn report(&self) -> CertificateReport {
        let (verdict, reason, witness_indices) = match self {
            Verdict::Zero => ("zero", None, vec![]),
            Verdict::Unit => ("unit", None, vec![1]),
            Verdict::Irreducible(Reason::PrimeSupport(p)) => (
                "irreducible",
                Some(format!("prime_support({p})")),
                vec![1, *p],
            ),
            Verdict::Irreducible(Reason::PrimeRank(a)) => {
                ("irreducible", Some(format!("prime_rank({a})")), vec![*a])
            }
            Verdict::Irreducible(Reason::PrimeLeadingMagnitude(m)) => (
                "irreducible",
                Some(format!("prime_leading_magnitude({m})")),
                vec![1],
            ),
            Verdict::Reducible(b, c) => (
                "reducible",
                None,
                [b.rank().index(), c.rank().index()]
                    .into_iter()
                    .flatten()
                    .collect(),
            ),
            Verdict::Unknown => ("unknown", None, vec![]),
        };
        CertificateReport {
            verdict,
            reason,
            witness_indices,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    pub verdict: &'static str,
    pub reason: Option<String>,
    pub witness_indices: Vec<usize>,
}

/// Classifies `α` as zero, unit, certified irreducible, or unknown.
pub fn certify(alpha: &ArithFunc) -> Verdict {
    let Rank::Detected { index: rank, .. } = alpha.rank() else {
        return Verdict::Zero;
    };
    if alpha.is_unit() {
        return Verdict::Unit;
    }
    if let Some(p) = prime_support(alpha) {
        return Verdict::Irreducible(Reason::PrimeSupport(p));
    }
    match alpha.domain() {
        Domain::Rational if is_prime(rank as u64) => Verdict::Irreducible(Reason::PrimeRank(rank)),
        Domain::Integer => {
            let lead = alpha.values()[0].numer().abs();
            if is_prime_big(&lead) {
                Verdict::Irreducible(Reason::PrimeLeadingMagnitude(lead))
            } else {
                Verdict::Unknown
            }
        }
        Domain::Rational => Verdict::Unknown,
    }
}

/// Smallest prime `p ≤ N` with `α(p) ≠ 0`, provided `α(1) = 0` (and, over
/// the integers, the values at primes have gcd 1).
fn prime_support(alpha: &ArithFunc) -> Option<usize> {
    if !alpha.values()[0].is_zero() {
        return None;
    }
    let mut primes =
        (2..=alpha.bound()).filter(|&p| is_prime(p as u64) && !alpha.values()[p - 1].is_zero());
    let first = primes.next()?;
    if alpha.domain() == Domain::Integer {
        let mut g = alpha.values()[first - 1].numer().abs();
        for p in primes {
            if g.is_one() {
                break;
            }
            g = g.gcd(alpha.values()[p - 1].numer());
        }
        if !g.is_one() {
            return None;
        }
    }
    Some(first)
}

/// Checks a proposed factorization `α = β ∗ γ` into nonunits and returns
/// [`Verdict::Reducible`] when it holds.
pub fn check_witness(
    alpha: &ArithFunc,
    beta: &ArithFunc,
    gamma: &ArithFunc,
) -> Result<Option<Verdict>> {
    let product = beta.convolve(gamma)?;
    if product.bound() != alpha.bound() {
        return Err(Error::BoundMismatch {
            expected: alpha.bound(),
            found: product.bound(),
        });
    }
    let holds = product == *alpha
        && !beta.is_zero()
        && !gamma.is_zero()
        && !beta.is_unit()
        && !gamma.is_unit();
    Ok(holds.then(|| Verdict::Reducible(beta.clone(), gamma.clone())))
}

/// A claimed factorization `δ ∗ π₁ ∗ ⋯ ∗ π_k` with `δ` a unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationClaim {
    pub unit_part: ArithFunc,
    pub irreducibles: Vec<ArithFunc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum FactorStatus {
    Certified { reason: String },
    Unverified { index: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorizationReport {
    pub unit_ok: bool,
    pub factors: Vec<FactorStatus>,
    pub product_matches: bool,
    /// First index where the claimed product differs from the function.
    pub first_mismatch: Option<usize>,
}

impl FactorizationReport {
    pub fn passed(&self) -> bool {
        self.unit_ok
            && self.product_matches
            && self
                .factors
                .iter()
                .all(|f| matches!(f, FactorStatus::Certified { .. }))
    }
}

/// Checks the unit part, certifies each factor, and compares the full
/// product with `α` at the bound.
pub fn verify_factorization(
    alpha: &ArithFunc,
    claim: &FactorizationClaim,
) -> Result<FactorizationReport> {
    for part in std::iter::once(&claim.unit_part).chain(&claim.irreducibles) {
        if part.domain() != alpha.domain() {
            return Err(Error::DomainMismatch(alpha.domain(), part.domain()));
        }
        if part.bound() != alpha.bound() {
            return Err(Error::BoundMismatch {
                expected: alpha.bound(),
                found: part.bound(),
            });
        }
    }
    let factors = claim
        .irreducibles
        .iter()
        .enumerate()
        .map(|(i, pi)| match certify(pi) {
            Verdict::Irreducible(reason) => FactorStatus::Certified {
                reason: reason_label(&reason),
            },
            _ => FactorStatus::Unverified { index: i },
        })
        .collect();
    let product = claim
        .irreducibles
        .iter()
        .try_fold(claim.unit_part.clone(), |acc, pi| acc.convolve(pi))?;
    let first_mismatch = crate::ring::first_difference(&product, alpha);
    Ok(FactorizationReport {
        unit_ok: claim.unit_part.is_unit(),
        factors,
        product_matches: first_mismatch.is_none(),
        first_mismatch,
    })
}

fn reason_label(reason: &Reason) -> String {
    match reason {
        Reason::PrimeSupport(p) => format!("prime_support({p})"),
        Reason::PrimeRank(a) => format!("prime_rank({a})"),
        Reason::PrimeLeadingMagnitude(m) => format!("prime_leading_magnitude({m})"),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SplitNote {
    /// Both factors have rank above 1.
    Proper,
    /// Over the rationals a rank-1 factor is a unit.
    UnitFactor,
    /// Over the integers a rank-1 factor is a unit or has `|β(1)| ≥ 2`.
    UnitOrRankOneNonunit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RankSplit {
    pub left: usize,
    pub right: usize,
    pub note: SplitNote,
}

/// Every ordered pair of factor ranks `(b, c)` with `b·c = rank(α)`.
pub fn rank_screen(alpha: &ArithFunc) -> Result<Vec<RankSplit>> {
    let a = alpha.rank().index().ok_or(Error::NoVisibleRank)?;
    let trivial = match alpha.domain() {
        Domain::Rational => SplitNote::UnitFactor,
        Domain::Integer => SplitNote::UnitOrRankOneNonunit,
    };
    Ok((1..=a)
        .filter(|b| a % b == 0)
        .map(|b| RankSplit {
            left: b,
            right: a / b,
            note: if b == 1 || b == a {
                trivial
            } else {
                SplitNote::Proper
            },
        })
        .collect())
}

pub(crate) fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

fn is_prime_big(n: &BigInt) -> bool {
    match n.to_u64() {
        Some(small) => is_prime(small),
        // Leading magnitudes this large only arise from deliberately huge
        // inputs; trial division on BigInt is still exact, just slow.
        None => {
            let two = BigInt::from(2);
            let mut d = two.clone();
            while &d * &d <= *n {
                if (n % &d).is_zero() {
                    return false;
                }
                d += 1;
            }
            n >= &two
        }
    }
}
