//! Acceptance suite: one pass/fail line per criterion, nonzero exit on any
//! failure. Criteria with runtime limits fail when they exceed them.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use liouville::classical::{build_in, identity_suite, NamedFunction};
use liouville::factorization::{
    certify, verify_factorization, FactorizationClaim, Reason, Verdict,
};
use liouville::lattice::{
    chain_cover, co_ideal, euclid_factorization, prime_property_check, trial_division, DivisorPoset,
};
use liouville::{ArithFunc, Coefficient, DivisionVerdict, Domain, Rank};
use num_bigint::BigInt;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const Q: Domain = Domain::Rational;
const Z: Domain = Domain::Integer;

type Check = fn() -> Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn scaled_epsilon(c: i64, n: usize, domain: Domain) -> ArithFunc {
    ArithFunc::epsilon(n, domain)
        .unwrap()
        .scale(&c.into())
        .unwrap()
}

fn ac01_indicator_law() -> Result<(), String> {
    let n = 200;
    for p in 1..=n {
        for q in 1..=n / p {
            let lhs = ArithFunc::nu(p, n, Q)
                .unwrap()
                .convolve(&ArithFunc::nu(q, n, Q).unwrap())
                .unwrap();
            ensure!(
                lhs == ArithFunc::nu(p * q, n, Q).unwrap(),
                "nu_{p} * nu_{q} != nu_{}",
                p * q
            );
        }
    }
    Ok(())
}

fn ac02_identity_suite() -> Result<(), String> {
    let outcomes = identity_suite(10_000).map_err(|e| e.to_string())?;
    ensure!(
        outcomes.len() == 4,
        "expected 4 identities, got {}",
        outcomes.len()
    );
    for o in outcomes {
        ensure!(o.holds, "{} fails at {:?}", o.formula, o.first_failure);
    }
    Ok(())
}

fn ac03_inverses() -> Result<(), String> {
    let mut rng = rng(3);
    let n = 512;
    let eps = ArithFunc::epsilon(n, Q).unwrap();
    for trial in 0..100 {
        let mut v: Vec<i64> = (0..n).map(|_| rng.gen_range(-9..=9)).collect();
        while v[0] == 0 {
            v[0] = rng.gen_range(-9..=9);
        }
        let alpha = ArithFunc::from_integers(v, Q).unwrap();
        let inv = alpha.inverse().map_err(|e| e.to_string())?;
        ensure!(
            alpha.convolve(&inv).unwrap() == eps,
            "trial {trial}: alpha * inverse != epsilon"
        );
    }
    let one = build_in(NamedFunction::One, 1000, Q).unwrap();
    let mu = build_in(NamedFunction::Mobius, 1000, Q).unwrap();
    ensure!(one.inverse().unwrap() == mu, "inverse(1) != mu at 1000");
    Ok(())
}

/// Random function of exact rank `r`.
fn with_rank(rng: &mut ChaCha8Rng, r: usize, n: usize) -> ArithFunc {
    let v: Vec<i64> = (1..=n)
        .map(|i| match i.cmp(&r) {
            std::cmp::Ordering::Less => 0,
            std::cmp::Ordering::Equal => [-9, -5, -2, -1, 1, 3, 7, 9][rng.gen_range(0..8)],
            std::cmp::Ordering::Greater => rng.gen_range(-9..=9),
        })
        .collect();
    ArithFunc::from_integers(v, if rng.gen_bool(0.5) { Q } else { Z }).unwrap()
}

fn ac04_rank_laws() -> Result<(), String> {
    let mut rng = rng(4);
    let n = 300;
    for trial in 0..200 {
        let a = rng.gen_range(1..=n);
        let b = rng.gen_range(1..=n / a);
        let alpha = with_rank(&mut rng, a, n);
        let beta = with_rank(&mut rng, b, n).to_domain(alpha.domain()).unwrap();
        let product = alpha.convolve(&beta).unwrap();
        ensure!(!product.is_zero(), "trial {trial}: zero divisor");
        let lead =
            Coefficient::from(alpha.values()[a - 1].as_ratio() * beta.values()[b - 1].as_ratio());
        ensure!(
            product.rank()
                == Rank::Detected {
                    index: a * b,
                    leading: lead
                },
            "trial {trial}: rank({a}) * rank({b}) gave {:?}",
            product.rank()
        );
    }
    Ok(())
}

fn ac05_lattice_30() -> Result<(), String> {
    let p = co_ideal(30).unwrap();
    ensure!(p.len() == 8, "{} elements", p.len());
    ensure!(p.atoms() == [2, 3, 5], "atoms {:?}", p.atoms());
    let cover = chain_cover(&p);
    ensure!(
        cover.width() == 3 && cover.is_valid_for(&p),
        "chain partition {:?}",
        cover.chains
    );
    for (x, c) in [(2, 15), (3, 10), (5, 6)] {
        let found = p.complements_of(x).unwrap();
        ensure!(found == [c], "complements of {x}: {found:?}");
    }
    ensure!(p.is_boolean(), "not boolean");
    Ok(())
}

fn ac06_lattice_12() -> Result<(), String> {
    let p = co_ideal(12).unwrap();
    let cover = chain_cover(&p);
    ensure!(
        cover.width() == 2 && cover.is_valid_for(&p),
        "chain partition {:?}",
        cover.chains
    );
    let pairs = p.complement_pairs();
    ensure!(pairs == [(1, 12), (3, 4)], "complement pairs {pairs:?}");
    ensure!(
        p.complements_of(2).unwrap().is_empty(),
        "2 has a complement"
    );
    ensure!(p.is_distributive(), "not distributive");
    ensure!(!p.is_boolean(), "boolean");
    Ok(())
}

fn brute_force_width(p: &DivisorPoset) -> usize {
    let e = p.elements();
    let conflicts: Vec<u32> = (0..e.len())
        .map(|i| {
            (0..e.len())
                .filter(|&j| j != i && p.comparable(e[i], e[j]))
                .fold(0, |m, j| m | 1 << j)
        })
        .collect();
    (0u32..1 << e.len())
        .filter(|&s| (0..e.len()).all(|i| s & 1 << i == 0 || conflicts[i] & s == 0))
        .map(u32::count_ones)
        .max()
        .unwrap() as usize
}

fn ac07_dilworth_210() -> Result<(), String> {
    let p = co_ideal(210).unwrap();
    ensure!(p.len() == 16, "{} elements", p.len());
    let cover = chain_cover(&p);
    ensure!(cover.is_valid_for(&p), "invalid chain cover");
    let brute = brute_force_width(&p);
    ensure!(
        cover.width() == 6 && brute == 6,
        "width {} vs brute force {brute}",
        cover.width()
    );
    ensure!(p.atoms().len() == 4, "atom count {}", p.atoms().len());
    println!(
        "       210: width {} with {} atoms",
        cover.width(),
        p.atoms().len()
    );
    Ok(())
}

fn ac08_euclid() -> Result<(), String> {
    for n in 2..=100_000u64 {
        let expected: Vec<u64> = trial_division(n)
            .into_iter()
            .flat_map(|(p, e)| std::iter::repeat_n(p, e as usize))
            .collect();
        let got = euclid_factorization(n).map_err(|e| e.to_string())?;
        ensure!(got == expected, "n = {n}: {got:?} vs {expected:?}");
    }
    let pairs: Vec<(u64, u64)> = (1..=200)
        .flat_map(|a| (1..=200).map(move |b| (a, b)))
        .collect();
    for p in (2..=50u64).filter(|&p| euclid_factorization(p).unwrap() == [p]) {
        ensure!(
            prime_property_check(p, pairs.iter().copied()),
            "prime property fails for {p}"
        );
    }
    Ok(())
}

fn ac09_divisibility_probes() -> Result<(), String> {
    let n = 100;
    let nu2 = ArithFunc::nu(2, n, Q).unwrap();
    let sum = nu2.add(&ArithFunc::nu(3, n, Q).unwrap()).unwrap();
    let verdict = sum.divide(&nu2).unwrap();
    ensure!(
        verdict == DivisionVerdict::NotDivisibleAtBound { witness: 3 },
        "divide(nu_2 + nu_3, nu_2) = {verdict:?}"
    );
    ensure!(
        !nu2.are_associates(&sum).unwrap(),
        "nu_2 and nu_2 + nu_3 are associates"
    );
    Ok(())
}

fn ac10_integer_ring() -> Result<(), String> {
    let n = 16;
    let two = scaled_epsilon(2, n, Z);
    let verdict = certify(&two);
    ensure!(
        verdict == Verdict::Irreducible(Reason::PrimeLeadingMagnitude(BigInt::from(2))),
        "certify(2 epsilon) = {verdict:?}"
    );
    let claim = FactorizationClaim {
        unit_part: ArithFunc::epsilon(n, Z).unwrap(),
        irreducibles: vec![two.clone(), two],
    };
    let report = verify_factorization(&scaled_epsilon(4, n, Z), &claim).unwrap();
    ensure!(
        report.passed(),
        "verify(4 epsilon, [2 epsilon, 2 epsilon]) = {report:?}"
    );

    let mut rng = rng(10);
    let lead = |f: &ArithFunc| f.values()[0].numer().abs();
    for trial in 0..100 {
        let b = ArithFunc::from_integers((0..64).map(|_| rng.gen_range(-9i64..=9)), Z).unwrap();
        let c = ArithFunc::from_integers((0..64).map(|_| rng.gen_range(-9i64..=9)), Z).unwrap();
        let a = b.convolve(&c).unwrap();
        ensure!(
            lead(&a) == lead(&b) * lead(&c),
            "trial {trial}: |a(1)| != |b(1)||c(1)|"
        );
    }
    Ok(())
}

fn ac11_prime_support_examples() -> Result<(), String> {
    for name in [NamedFunction::PrimeChar, NamedFunction::PiSquared] {
        let f = build_in(name, 100, Q).unwrap();
        let verdict = certify(&f);
        ensure!(
            verdict == Verdict::Irreducible(Reason::PrimeSupport(2)),
            "certify({name}) = {verdict:?}"
        );
    }
    Ok(())
}

fn ac12_truncation() -> Result<(), String> {
    let mut rng = rng(12);
    for trial in 0..50 {
        let n = rng.gen_range(2..=256);
        let domain = if trial % 2 == 0 { Q } else { Z };
        let a = ArithFunc::from_integers((0..n).map(|_| rng.gen_range(-9i64..=9)), domain).unwrap();
        let b = ArithFunc::from_integers((0..n).map(|_| rng.gen_range(-9i64..=9)), domain).unwrap();
        let full = a.convolve(&b).unwrap();
        for m in [1, n / 2, n] {
            let lhs = full.restrict(m).unwrap();
            let rhs = a
                .restrict(m)
                .unwrap()
                .convolve(&b.restrict(m).unwrap())
                .unwrap();
            ensure!(
                lhs == rhs,
                "trial {trial}: restriction to {m} of {n} differs"
            );
        }
    }
    Ok(())
}

fn ac13_dense_convolution() -> Result<(), String> {
    let n = 1_000_000;
    let mut rng = rng(13);
    let a: Vec<i64> = (0..n).map(|_| rng.gen_range(-9..=9)).collect();
    let b: Vec<i64> = (0..n).map(|_| rng.gen_range(-9..=9)).collect();
    let fa = ArithFunc::from_integers(a.iter().copied(), Z).unwrap();
    let fb = ArithFunc::from_integers(b.iter().copied(), Z).unwrap();
    let c = fa.convolve(&fb).unwrap();
    ensure!(c.bound() == n, "bound {}", c.bound());
    let mut spots: Vec<usize> = (0..20).map(|_| rng.gen_range(1..=n)).collect();
    spots.extend([1, 720_720, 997_920, n]);
    for k in spots {
        let direct: i64 = (1..=k)
            .filter(|d| k % d == 0)
            .map(|d| a[d - 1] * b[k / d - 1])
            .sum();
        ensure!(c.values()[k - 1] == Coefficient::from(direct), "index {k}");
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, &str, Check, Option<Duration>); 13] = [
        (
            "AC01",
            "indicator law nu_p * nu_q = nu_pq for pq <= 200",
            ac01_indicator_law,
            Some(Duration::from_secs(1)),
        ),
        (
            "AC02",
            "identity suite exact at N = 10^4",
            ac02_identity_suite,
            Some(Duration::from_secs(10)),
        ),
        (
            "AC03",
            "inverses of 100 random units at N = 512; inverse(1) = mu",
            ac03_inverses,
            None,
        ),
        (
            "AC04",
            "rank multiplicativity on 200 random pairs",
            ac04_rank_laws,
            None,
        ),
        (
            "AC05",
            "lattice {30}: 8 elements, width 3, complements, boolean",
            ac05_lattice_30,
            None,
        ),
        (
            "AC06",
            "lattice {12}: width 2, complement pairs, distributive, not boolean",
            ac06_lattice_12,
            None,
        ),
        (
            "AC07",
            "lattice {210}: width 6 by matching and brute force, 4 atoms",
            ac07_dilworth_210,
            Some(Duration::from_secs(5)),
        ),
        (
            "AC08",
            "Euclid factorizer vs trial division to 10^5; prime property",
            ac08_euclid,
            None,
        ),
        (
            "AC09",
            "nu_2 does not divide nu_2 + nu_3; not associates",
            ac09_divisibility_probes,
            None,
        ),
        (
            "AC10",
            "integer ring: 2 epsilon irreducible, 4 epsilon factorization, |a(1)|",
            ac10_integer_ring,
            None,
        ),
        (
            "AC11",
            "prime_char and pi_squared certified by prime support 2",
            ac11_prime_support_examples,
            None,
        ),
        (
            "AC12",
            "truncation commutes with convolution on 50 random pairs",
            ac12_truncation,
            None,
        ),
        (
            "AC13",
            "dense integer convolution at N = 10^6",
            ac13_dense_convolution,
            Some(Duration::from_secs(30)),
        ),
    ];

    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (id, description, check, limit) in criteria {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            Err(e
                .downcast_ref::<String>()
                .cloned()
                .unwrap_or_else(|| "panicked".into()))
        });
        let elapsed = start.elapsed();
        let result = result.and_then(|()| match limit {
            Some(limit) if elapsed > limit => Err(format!("exceeded {limit:?}")),
            _ => Ok(()),
        });
        match result {
            Ok(()) => println!("[PASS] {id} {description} ({elapsed:.2?})"),
            Err(why) => {
                failures += 1;
                println!("[FAIL] {id} {description} ({elapsed:.2?}): {why}");
            }
        }
    }
    println!("{} of 13 criteria passed", 13 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
