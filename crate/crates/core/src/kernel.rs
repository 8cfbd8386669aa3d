//! Divisor-pair kernels shared by the ring operations.
//!
//! Every kernel walks pairs `(d, m)` with `d·m ≤ N` by scattering from `d`
//! over its multiples, so the total work is `Σ_{n≤N} τ(n) ~ N log N`.

use std::ops::{AddAssign, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Dirichlet convolution of two integer sequences, truncated to the
/// shorter length. Slice index `i` holds the value at `n = i + 1`.
pub(crate) fn convolve_integers(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().min(b.len());
    let (a, b) = (&a[..n], &b[..n]);
    match (small_values(a), small_values(b)) {
        (Some((sa, ma)), Some((sb, mb))) if fits_i128(ma, mb, n) => convolve_i128(&sa, &sb)
            .into_iter()
            .map(BigInt::from)
            .collect(),
        _ => convolve_big(a, b),
    }
}

/// Dirichlet convolution over the rationals.
///
/// Both operands are cleared to integers by the lcm of their
/// denominators, convolved with the integer kernel, and divided back.
pub(crate) fn convolve_rationals(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().min(b.len());
    let (ia, da) = clear_denominators(&a[..n]);
    let (ib, db) = clear_denominators(&b[..n]);
    let scale = da * db;
    convolve_integers(&ia, &ib)
        .into_iter()
        .map(|c| BigRational::new(c, scale.clone()))
        .collect()
}

fn clear_denominators(values: &[BigRational]) -> (Vec<BigInt>, BigInt) {
    let lcm = values
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let ints = values
        .iter()
        .map(|v| v.numer() * (&lcm / v.denom()))
        .collect();
    (ints, lcm)
}

/// Converts to `i64` when every value fits, returning the max magnitude.
fn small_values(values: &[BigInt]) -> Option<(Vec<i64>, u128)> {
    let mut max = 0u128;
    let mut out = Vec::with_capacity(values.len());
    for v in values {
        let x = v.to_i64()?;
        max = max.max(x.unsigned_abs() as u128);
        out.push(x);
    }
    Some((out, max))
}

/// Each output is a sum of at most `n` products, each bounded by `ma·mb`.
fn fits_i128(ma: u128, mb: u128, n: usize) -> bool {
    ma.checked_mul(mb)
        .and_then(|p| p.checked_mul(n as u128))
        .is_some_and(|total| total <= i128::MAX as u128)
}

fn convolve_i128(a: &[i64], b: &[i64]) -> Vec<i128> {
    let n = a.len().min(b.len());
    let mut out = vec![0i128; n];
    for d in 1..=n {
        let x = a[d - 1] as i128;
        if x == 0 {
            continue;
        }
        for (m, &y) in b[..n / d].iter().enumerate() {
            if y != 0 {
                out[d * (m + 1) - 1] += x * y as i128;
            }
        }
    }
    out
}

fn convolve_big(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().min(b.len());
    let mut out = vec![BigInt::zero(); n];
    for d in 1..=n {
        let x = &a[d - 1];
        if x.is_zero() {
            continue;
        }
        for (m, y) in b[..n / d].iter().enumerate() {
            if !y.is_zero() {
                out[d * (m + 1) - 1] += x * y;
            }
        }
    }
    out
}

/// Scalars the triangular solver can run over.
pub(crate) trait ExactScalar: Clone + Zero + for<'a> AddAssign<&'a Self>
where
    for<'a> &'a Self: Mul<&'a Self, Output = Self> + Sub<&'a Self, Output = Self>,
{
    /// `self / divisor` when the quotient exists in the scalar ring.
    fn exact_div(&self, divisor: &Self) -> Option<Self>;
}

impl ExactScalar for BigInt {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if divisor.abs().is_one() {
            return Some(self * divisor);
        }
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }
}

impl ExactScalar for BigRational {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        (!divisor.is_zero()).then(|| self / divisor)
    }
}

/// Solves `divisor ∗ γ = target` on indices `rank·m ≤ N` by forward
/// substitution, where `rank` is the least index with a nonzero divisor
/// value.
///
/// Returns `γ(1), …, γ(⌊N/rank⌋)`, or the first index `rank·m` at which
/// the leading division is not exact. Indices that are not multiples of
/// `rank` are not consulted; callers verify the full residual.
pub(crate) fn solve_triangular<T>(divisor: &[T], target: &[T], rank: usize) -> Result<Vec<T>, usize>
where
    T: ExactScalar,
    for<'a> &'a T: Mul<&'a T, Output = T> + Sub<&'a T, Output = T>,
{
    let n = divisor.len().min(target.len());
    let lead = &divisor[rank - 1];
    let steps = n / rank;
    // acc[k-1] collects divisor(d)·γ(m) over finalized m with d·m = k, d > rank.
    let mut acc = vec![T::zero(); n];
    let mut gamma = Vec::with_capacity(steps);
    for m in 1..=steps {
        let k = rank * m;
        let rhs = &target[k - 1] - &acc[k - 1];
        let g = rhs.exact_div(lead).ok_or(k)?;
        if !g.is_zero() {
            for d in (rank + 1)..=(n / m) {
                let c = &divisor[d - 1];
                if !c.is_zero() && (d * m) % rank == 0 {
                    acc[d * m - 1] += &(c * &g);
                }
            }
        }
        gamma.push(g);
    }
    Ok(gamma)
}
