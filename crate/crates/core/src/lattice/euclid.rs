//! Factorization of positive integers by descending divisor chains.

use crate::{Error, Result};

/// Prime factorization as `(p, e)` pairs, ascending, by trial division up
/// to `√n`. Returns an empty list for `n ≤ 1`.
pub fn trial_division(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// The least divisor `d` of `n` with `1 < d < n`, if `n` is composite.
pub fn smallest_nontrivial_divisor(n: u64) -> Option<u64> {
    (2u64..)
        .take_while(|&d| d.saturating_mul(d) <= n)
        .find(|&d| n.is_multiple_of(d))
}

/// A strictly descending chain of divisors `n = c₀ > c₁ > ⋯ > c_k`, each a
/// proper divisor of its predecessor, ending at an irreducible `c_k`.
///
/// Each step takes the smallest nontrivial divisor, which is already
/// irreducible, so the chain has at most two entries.
pub fn descend_to_irreducible(n: u64) -> Vec<u64> {
    let mut chain = vec![n];
    while let Some(d) = smallest_nontrivial_divisor(*chain.last().unwrap()) {
        chain.push(d);
    }
    chain
}

/// Splits `n ≥ 2` into irreducible factors, ascending, by repeatedly
/// extracting the bottom of a descending divisor chain and recursing on
/// the cofactor.
pub fn euclid_factorization(n: u64) -> Result<Vec<u64>> {
    if n < 2 {
        return Err(Error::NoFactorization(n));
    }
    let mut factors = Vec::new();
    let mut rest = n;
    while rest > 1 {
        let p = *descend_to_irreducible(rest).last().unwrap();
        factors.push(p);
        rest /= p;
    }
    factors.sort_unstable();
    Ok(factors)
}

/// First pair `(a, b)` with `p | ab` but `p ∤ a` and `p ∤ b`.
pub fn prime_property_counterexample(
    p: u64,
    pairs: impl IntoIterator<Item = (u64, u64)>,
) -> Option<(u64, u64)> {
    let p128 = u128::from(p);
    pairs
        .into_iter()
        .find(|&(a, b)| (u128::from(a) * u128::from(b)) % p128 == 0 && a % p != 0 && b % p != 0)
}

/// `p | ab ⇒ p | a or p | b` over every sampled pair.
pub fn prime_property_check(p: u64, pairs: impl IntoIterator<Item = (u64, u64)>) -> bool {
    p != 0 && prime_property_counterexample(p, pairs).is_none()
}
