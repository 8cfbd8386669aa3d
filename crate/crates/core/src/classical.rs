//! Classical arithmetic functions, generated by sieving, and the
//! Möbius-inversion identities that tie them together.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};
use serde::Serialize;

use crate::{ArithFunc, Domain, Error, Result};

/// Largest `k` accepted for `id_k` and `sigma_k`.
pub const MAX_K: u32 = 64;

/// Built-in functions, addressable by name (see [`NamedFunction::from_str`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedFunction {
    /// The constant function 1.
    One,
    /// `n ↦ n^k`, `k ≥ 1`.
    Id(u32),
    Epsilon,
    Mobius,
    EulerPhi,
    /// Number of divisors.
    Tau,
    /// `n ↦ Σ_{d|n} d^k`.
    Sigma(u32),
    /// `(−1)^Ω(n)`.
    LiouvilleLambda,
    /// 1 on primes, 0 elsewhere.
    PrimeChar,
    /// `π(n)²`, with `π` the prime-counting function.
    PiSquared,
}

impl NamedFunction {
    pub const NAMES: &'static [&'static str] = &[
        "one",
        "id_k",
        "epsilon",
        "mobius",
        "euler_phi",
        "tau",
        "sigma_k",
        "liouville_lambda",
        "prime_char",
        "pi_squared",
    ];

    /// Multiplicative functions take the value 1 at index 1.
    pub fn is_multiplicative(self) -> bool {
        !matches!(self, NamedFunction::PrimeChar | NamedFunction::PiSquared)
    }
}

impl fmt::Display for NamedFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedFunction::One => f.write_str("one"),
            NamedFunction::Id(k) => write!(f, "id_{k}"),
            NamedFunction::Epsilon => f.write_str("epsilon"),
            NamedFunction::Mobius => f.write_str("mobius"),
            NamedFunction::EulerPhi => f.write_str("euler_phi"),
            NamedFunction::Tau => f.write_str("tau"),
            NamedFunction::Sigma(k) => write!(f, "sigma_{k}"),
            NamedFunction::LiouvilleLambda => f.write_str("liouville_lambda"),
            NamedFunction::PrimeChar => f.write_str("prime_char"),
            NamedFunction::PiSquared => f.write_str("pi_squared"),
        }
    }
}

impl FromStr for NamedFunction {
    type Err = Error;

    /// `id` and `sigma` without a suffix mean `id_1` and `sigma_1`.
    fn from_str(s: &str) -> Result<Self> {
        let param = |name: &str, k: &str, min: u32| -> Result<u32> {
            let k: u32 = k.parse().map_err(|_| Error::UnknownName(s.to_string()))?;
            if k < min || k > MAX_K {
                return Err(Error::ParameterOutOfRange {
                    name: name.to_string(),
                    k,
                });
            }
            Ok(k)
        };
        Ok(match s {
            "one" => NamedFunction::One,
            "id" => NamedFunction::Id(1),
            "epsilon" => NamedFunction::Epsilon,
            "mobius" | "mu" => NamedFunction::Mobius,
            "euler_phi" | "phi" => NamedFunction::EulerPhi,
            "tau" => NamedFunction::Tau,
            "sigma" => NamedFunction::Sigma(1),
            "liouville_lambda" | "lambda" => NamedFunction::LiouvilleLambda,
            "prime_char" => NamedFunction::PrimeChar,
            "pi_squared" => NamedFunction::PiSquared,
            _ => {
                if let Some(k) = s.strip_prefix("id_") {
                    NamedFunction::Id(param("id_k", k, 1)?)
                } else if let Some(k) = s.strip_prefix("sigma_") {
                    NamedFunction::Sigma(param("sigma_k", k, 0)?)
                } else {
                    return Err(Error::UnknownName(s.to_string()));
                }
            }
        })
    }
}

/// Linear sieve over `1..=n`: least prime factor of each index and the
/// full power of that prime dividing it.
struct Sieve {
    lpf: Vec<u32>,
    /// `lpf_power[i] = p^e` with `p = lpf[i]`, `p^e ∥ i`.
    lpf_power: Vec<u32>,
}

impl Sieve {
    fn new(n: usize) -> Sieve {
        assert!(n < u32::MAX as usize, "sieve bound exceeds u32");
        let mut lpf = vec![0u32; n + 1];
        let mut primes: Vec<u32> = Vec::new();
        for i in 2..=n {
            if lpf[i] == 0 {
                lpf[i] = i as u32;
                primes.push(i as u32);
            }
            let li = lpf[i];
            for &p in &primes {
                if p > li || p as usize * i > n {
                    break;
                }
                lpf[p as usize * i] = p;
            }
        }
        let mut lpf_power = vec![1u32; n + 1];
        for i in 2..=n {
            let p = lpf[i];
            let rest = i / p as usize;
            lpf_power[i] = if lpf[rest] == p {
                lpf_power[rest] * p
            } else {
                p
            };
        }
        Sieve { lpf, lpf_power }
    }

    fn is_prime(&self, i: usize) -> bool {
        i >= 2 && self.lpf[i] as usize == i
    }

    /// Fills a multiplicative function from its values on prime powers.
    /// `at_prime_power(p, e, previous)` receives the value at `p^(e-1)`.
    fn multiplicative(
        &self,
        n: usize,
        at_prime_power: impl Fn(u32, u32, usize, &BigInt) -> BigInt,
    ) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); n + 1];
        let mut exponent = vec![0u32; n + 1];
        if n >= 1 {
            out[1] = BigInt::one();
        }
        for i in 2..=n {
            let q = self.lpf_power[i] as usize;
            if q == i {
                let p = self.lpf[i];
                let prev = i / p as usize;
                exponent[i] = exponent[prev] + 1;
                out[i] = at_prime_power(p, exponent[i], i, &out[prev]);
            } else {
                out[i] = &out[i / q] * &out[q];
            }
        }
        out.remove(0);
        out
    }
}

/// Builds a named function over the integers on `1..=n`.
pub fn build(name: NamedFunction, n: usize) -> Result<ArithFunc> {
    if n == 0 {
        return Err(Error::Empty);
    }
    let sieve = Sieve::new(n);
    let values: Vec<BigInt> = match name {
        NamedFunction::One => vec![BigInt::one(); n],
        NamedFunction::Epsilon => return ArithFunc::epsilon(n, Domain::Integer),
        NamedFunction::Id(k) => sieve.multiplicative(n, |_, _, q, _| BigInt::from(q).pow(k)),
        NamedFunction::Mobius => sieve.multiplicative(n, |_, e, _, _| {
            if e == 1 {
                -BigInt::one()
            } else {
                BigInt::zero()
            }
        }),
        NamedFunction::EulerPhi => {
            sieve.multiplicative(n, |p, _, q, _| BigInt::from(q - q / p as usize))
        }
        NamedFunction::Tau => sieve.multiplicative(n, |_, e, _, _| BigInt::from(e + 1)),
        NamedFunction::Sigma(k) => {
            sieve.multiplicative(n, |_, _, q, prev| prev + BigInt::from(q).pow(k))
        }
        NamedFunction::LiouvilleLambda => sieve.multiplicative(n, |_, _, _, prev| -prev),
        NamedFunction::PrimeChar => (1..=n)
            .map(|i| BigInt::from(u8::from(sieve.is_prime(i))))
            .collect(),
        NamedFunction::PiSquared => {
            let mut count = 0u64;
            (1..=n)
                .map(|i| {
                    count += u64::from(sieve.is_prime(i));
                    BigInt::from(count * count)
                })
                .collect()
        }
    };
    ArithFunc::from_integers(values, Domain::Integer)
}

/// Builds a named function in the requested domain.
pub fn build_in(name: NamedFunction, n: usize, domain: Domain) -> Result<ArithFunc> {
    build(name, n)?.to_domain(domain)
}

/// One of the convolution identities checked by [`identity_suite`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Identity {
    /// μ ∗ 1 = ε
    MobiusOneIsEpsilon,
    /// 1 ∗ 1 = τ
    OneOneIsTau,
    /// 1 ∗ id = σ
    OneIdIsSigma,
    /// μ ∗ id = φ
    MobiusIdIsPhi,
}

impl Identity {
    pub const ALL: [Identity; 4] = [
        Identity::MobiusOneIsEpsilon,
        Identity::OneOneIsTau,
        Identity::OneIdIsSigma,
        Identity::MobiusIdIsPhi,
    ];

    pub fn formula(self) -> &'static str {
        match self {
            Identity::MobiusOneIsEpsilon => "mobius * one = epsilon",
            Identity::OneOneIsTau => "one * one = tau",
            Identity::OneIdIsSigma => "one * id = sigma",
            Identity::MobiusIdIsPhi => "mobius * id = euler_phi",
        }
    }

    fn operands(self) -> (NamedFunction, NamedFunction, NamedFunction) {
        use NamedFunction::*;
        match self {
            Identity::MobiusOneIsEpsilon => (Mobius, One, Epsilon),
            Identity::OneOneIsTau => (One, One, Tau),
            Identity::OneIdIsSigma => (One, Id(1), Sigma(1)),
            Identity::MobiusIdIsPhi => (Mobius, Id(1), EulerPhi),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityOutcome {
    pub identity: Identity,
    pub formula: &'static str,
    pub holds: bool,
    pub first_failure: Option<usize>,
}

/// Checks each classical identity exactly on `1..=n`.
pub fn identity_suite(n: usize) -> Result<Vec<IdentityOutcome>> {
    Identity::ALL
        .iter()
        .map(|&identity| {
            let (lhs, rhs, expected) = identity.operands();
            let product = build(lhs, n)?.convolve(&build(rhs, n)?)?;
            let first_failure = crate::ring::first_difference(&product, &build(expected, n)?);
            Ok(IdentityOutcome {
                identity,
                formula: identity.formula(),
                holds: first_failure.is_none(),
                first_failure,
            })
        })
        .collect()
}
