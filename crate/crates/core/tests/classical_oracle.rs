use liouville::classical::{build, build_in, identity_suite, Identity, NamedFunction};
use liouville::{ArithFunc, Coefficient, Domain};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Prime factorization by trial division, independent of the sieves.
fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn divisors(n: u64) -> impl Iterator<Item = u64> {
    (1..=n).filter(move |d| n.is_multiple_of(*d))
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Value of a named function at `n`, computed from definitions.
fn oracle(name: NamedFunction, n: u64) -> BigInt {
    let f = factor(n);
    let omega_big: u32 = f.iter().map(|&(_, e)| e).sum();
    let is_prime = n >= 2 && f == [(n, 1)];
    match name {
        NamedFunction::One => 1.into(),
        NamedFunction::Id(k) => BigInt::from(n).pow(k),
        NamedFunction::Epsilon => u8::from(n == 1).into(),
        NamedFunction::Mobius => {
            if f.iter().any(|&(_, e)| e > 1) {
                0.into()
            } else if f.len().is_multiple_of(2) {
                1.into()
            } else {
                (-1).into()
            }
        }
        NamedFunction::EulerPhi => ((1..=n).filter(|&k| gcd(k, n) == 1).count()).into(),
        NamedFunction::Tau => divisors(n).count().into(),
        NamedFunction::Sigma(k) => divisors(n).map(|d| BigInt::from(d).pow(k)).sum(),
        NamedFunction::LiouvilleLambda => if omega_big.is_multiple_of(2) { 1 } else { -1 }.into(),
        NamedFunction::PrimeChar => u8::from(is_prime).into(),
        NamedFunction::PiSquared => {
            let pi = (2..=n).filter(|&m| factor(m) == [(m, 1)]).count();
            (pi * pi).into()
        }
    }
}

#[test]
fn sieves_match_definitions_up_to_1000() {
    let names = [
        NamedFunction::One,
        NamedFunction::Id(1),
        NamedFunction::Id(3),
        NamedFunction::Epsilon,
        NamedFunction::Mobius,
        NamedFunction::EulerPhi,
        NamedFunction::Tau,
        NamedFunction::Sigma(0),
        NamedFunction::Sigma(1),
        NamedFunction::Sigma(5),
        NamedFunction::LiouvilleLambda,
        NamedFunction::PrimeChar,
        NamedFunction::PiSquared,
    ];
    for name in names {
        let f = build(name, 1000).unwrap();
        assert_eq!(f.domain(), Domain::Integer);
        for n in 1..=1000u64 {
            assert_eq!(
                f.values()[n as usize - 1],
                Coefficient::from(oracle(name, n)),
                "{name} at {n}"
            );
        }
    }
}

#[test]
fn multiplicative_built_ins_are_units() {
    for name in [
        NamedFunction::One,
        NamedFunction::Id(2),
        NamedFunction::Mobius,
        NamedFunction::EulerPhi,
        NamedFunction::Tau,
        NamedFunction::Sigma(2),
        NamedFunction::LiouvilleLambda,
    ] {
        assert!(name.is_multiplicative());
        for domain in [Domain::Rational, Domain::Integer] {
            let f = build_in(name, 64, domain).unwrap();
            assert_eq!(f.values()[0], Coefficient::one(), "{name}");
            assert!(f.is_unit(), "{name}");
        }
    }
    for name in [NamedFunction::PrimeChar, NamedFunction::PiSquared] {
        let f = build(name, 64).unwrap();
        assert!(f.values()[0].is_zero() && !f.values()[1].is_zero());
    }
}

#[test]
fn identity_suite_at_ten_thousand() {
    let n = 10_000;
    let outcomes = identity_suite(n).unwrap();
    assert_eq!(outcomes.len(), Identity::ALL.len());
    assert!(outcomes
        .iter()
        .all(|o| o.holds && o.first_failure.is_none()));

    // Direct divisor sums at random indices.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..20 {
        let k: u64 = rng.gen_range(1..=n as u64);
        let sum = |f: &dyn Fn(u64) -> BigInt, g: &dyn Fn(u64) -> BigInt| -> BigInt {
            divisors(k).map(|d| f(d) * g(k / d)).sum()
        };
        let mu = |m| oracle(NamedFunction::Mobius, m);
        let one = |_| BigInt::from(1);
        let id = |m| BigInt::from(m);
        assert_eq!(
            sum(&mu, &one),
            oracle(NamedFunction::Epsilon, k),
            "mu*1 at {k}"
        );
        assert_eq!(sum(&one, &one), oracle(NamedFunction::Tau, k), "1*1 at {k}");
        assert_eq!(
            sum(&one, &id),
            oracle(NamedFunction::Sigma(1), k),
            "1*id at {k}"
        );
        assert_eq!(
            sum(&mu, &id),
            oracle(NamedFunction::EulerPhi, k),
            "mu*id at {k}"
        );
    }
}

#[test]
fn sigma_at_six() {
    let one = build(NamedFunction::One, 6).unwrap();
    let id = build(NamedFunction::Id(1), 6).unwrap();
    assert_eq!(
        one.convolve(&id).unwrap().values()[5],
        Coefficient::from(12)
    );
    let mu = build(NamedFunction::Mobius, 6).unwrap();
    assert_eq!(mu.convolve(&one).unwrap().values()[0], Coefficient::one());
}

#[test]
fn large_sigma_is_exact() {
    let f = build(NamedFunction::Sigma(40), 12).unwrap();
    let expected: BigInt = [1u64, 2, 3, 4, 6, 12]
        .iter()
        .map(|&d| BigInt::from(d).pow(40))
        .sum();
    assert_eq!(f.values()[11], Coefficient::from(expected));
}

#[test]
fn mobius_is_inverse_of_one_at_1000() {
    let one = build_in(NamedFunction::One, 1000, Domain::Rational).unwrap();
    let mu = build_in(NamedFunction::Mobius, 1000, Domain::Rational).unwrap();
    assert_eq!(one.inverse().unwrap(), mu);
    assert_eq!(
        mu.convolve(&one).unwrap(),
        ArithFunc::epsilon(1000, Domain::Rational).unwrap()
    );
}
