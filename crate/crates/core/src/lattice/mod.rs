//! Divisor lattices `{a}`: all divisors of `a` ordered by divisibility.
//!
//! Meet and join are gcd and lcm. The lattice is always distributive and
//! is a boolean algebra exactly when `a` is squarefree; the checks here
//! evaluate the definitions directly rather than assuming either fact.

mod chains;
mod dot;
mod euclid;

use std::collections::HashSet;

use num_integer::Integer;
use serde::Serialize;

use crate::{Error, Result};

pub use chains::{chain_cover, ChainCover};
pub use dot::to_dot;
pub use euclid::{
    descend_to_irreducible, euclid_factorization, prime_property_check,
    prime_property_counterexample, smallest_nontrivial_divisor, trial_division,
};

/// Largest root accepted by [`co_ideal`].
pub const DEFAULT_MAX_ROOT: u64 = 1_000_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorPoset {
    root: u64,
    prime_factors: Vec<(u64, u32)>,
    elements: Vec<u64>,
    hasse_edges: Vec<(u64, u64)>,
    atoms: Vec<u64>,
}

/// The divisor poset of `a`, for `1 ≤ a ≤ DEFAULT_MAX_ROOT`.
pub fn co_ideal(a: u64) -> Result<DivisorPoset> {
    co_ideal_with_limit(a, DEFAULT_MAX_ROOT)
}

pub fn co_ideal_with_limit(a: u64, limit: u64) -> Result<DivisorPoset> {
    if a == 0 || a > limit {
        return Err(Error::InvalidLatticeRoot(a));
    }
    let prime_factors = trial_division(a);
    let mut elements = vec![1u64];
    for &(p, e) in &prime_factors {
        let current = elements.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..current {
                elements.push(elements[i] * pk);
            }
        }
    }
    elements.sort_unstable();
    let mut hasse_edges: Vec<(u64, u64)> = elements
        .iter()
        .flat_map(|&x| {
            prime_factors
                .iter()
                .filter(move |&&(p, _)| a.is_multiple_of(x * p))
                .map(move |&(p, _)| (x, x * p))
        })
        .collect();
    hasse_edges.sort_unstable();
    let atoms = prime_factors.iter().map(|&(p, _)| p).collect();
    Ok(DivisorPoset {
        root: a,
        prime_factors,
        elements,
        hasse_edges,
        atoms,
    })
}

impl DivisorPoset {
    pub fn root(&self) -> u64 {
        self.root
    }

    /// All divisors of the root, ascending.
    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    /// Covering pairs `(x, x·p)`, `p` prime.
    pub fn hasse_edges(&self) -> &[(u64, u64)] {
        &self.hasse_edges
    }

    /// Elements covering 1, i.e. the prime divisors of the root.
    pub fn atoms(&self) -> &[u64] {
        &self.atoms
    }

    pub fn prime_factors(&self) -> &[(u64, u32)] {
        &self.prime_factors
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: u64) -> bool {
        x != 0 && self.root.is_multiple_of(x)
    }

    pub fn index_of(&self, x: u64) -> Option<usize> {
        self.elements.binary_search(&x).ok()
    }

    pub fn is_squarefree(&self) -> bool {
        self.prime_factors.iter().all(|&(_, e)| e == 1)
    }

    /// `x ≤ y` in the divisibility order.
    pub fn leq(&self, x: u64, y: u64) -> bool {
        y.is_multiple_of(x)
    }

    pub fn comparable(&self, x: u64, y: u64) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    fn check(&self, x: u64) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::NotAnElement {
                value: x,
                root: self.root,
            })
        }
    }

    /// Greatest lower bound: `gcd(x, y)`.
    pub fn meet(&self, x: u64, y: u64) -> Result<u64> {
        self.check(x)?;
        self.check(y)?;
        Ok(x.gcd(&y))
    }

    /// Least upper bound: `lcm(x, y)`.
    pub fn join(&self, x: u64, y: u64) -> Result<u64> {
        self.check(x)?;
        self.check(y)?;
        Ok(x.lcm(&y))
    }

    /// All `x'` with `x ∧ x' = 1` and `x ∨ x' = root`.
    pub fn complements_of(&self, x: u64) -> Result<Vec<u64>> {
        self.check(x)?;
        Ok(self
            .elements
            .iter()
            .copied()
            .filter(|&y| x.gcd(&y) == 1 && x.lcm(&y) == self.root)
            .collect())
    }

    pub fn is_complemented(&self) -> bool {
        self.complement_counts().all(|c| c >= 1)
    }

    pub fn is_uniquely_complemented(&self) -> bool {
        self.complement_counts().all(|c| c == 1)
    }

    fn complement_counts(&self) -> impl Iterator<Item = usize> + '_ {
        self.elements.iter().map(|&x| {
            self.elements
                .iter()
                .filter(|&&y| x.gcd(&y) == 1 && x.lcm(&y) == self.root)
                .count()
        })
    }

    /// Unordered complementary pairs `(x, x')` with `x ≤ x'` numerically.
    pub fn complement_pairs(&self) -> Vec<(u64, u64)> {
        let mut pairs = Vec::new();
        for &x in &self.elements {
            for &y in &self.elements {
                if x <= y && x.gcd(&y) == 1 && x.lcm(&y) == self.root {
                    pairs.push((x, y));
                }
            }
        }
        pairs
    }

    /// Evaluates both distributivity criteria.
    pub fn distributivity(&self) -> Distributivity {
        let tables = Tables::new(self);
        Distributivity {
            identity: tables.distributive_identity(),
            cancellation: tables.cancellation(),
        }
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity().holds()
    }

    /// Distributive and uniquely complemented.
    pub fn is_boolean(&self) -> bool {
        self.is_uniquely_complemented() && self.is_distributive()
    }

    /// `gcd(x, y) · lcm(x, y) = x · y` for every pair of elements.
    pub fn gcd_lcm_identity_check(&self) -> bool {
        self.elements.iter().all(|&x| {
            self.elements.iter().all(|&y| {
                u128::from(x.gcd(&y)) * u128::from(x.lcm(&y)) == u128::from(x) * u128::from(y)
            })
        })
    }

    pub fn report(&self) -> LatticeReport {
        let cover = chain_cover(self);
        LatticeReport {
            a: self.root,
            elements: self.elements.clone(),
            atoms: self.atoms.clone(),
            width: cover.width(),
            chains: cover.chains,
            boolean: self.is_boolean(),
            distributive: self.is_distributive(),
            complemented: self.is_complemented(),
        }
    }
}

/// Results of the two distributivity criteria, which must agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Distributivity {
    /// `x ∨ (y ∧ z) = (x ∨ y) ∧ (x ∨ z)` for all triples.
    pub identity: bool,
    /// `x ∧ y = x ∧ z` and `x ∨ y = x ∨ z` imply `y = z`.
    pub cancellation: bool,
}

impl Distributivity {
    pub fn holds(self) -> bool {
        self.identity && self.cancellation
    }
}

/// Meet and join as index tables, so triple loops avoid recomputing gcds.
struct Tables {
    n: usize,
    meet: Vec<u32>,
    join: Vec<u32>,
}

impl Tables {
    fn new(poset: &DivisorPoset) -> Tables {
        let n = poset.len();
        let idx = |v: u64| poset.index_of(v).expect("closed under gcd and lcm") as u32;
        let mut meet = Vec::with_capacity(n * n);
        let mut join = Vec::with_capacity(n * n);
        for &x in poset.elements() {
            for &y in poset.elements() {
                meet.push(idx(x.gcd(&y)));
                join.push(idx(x.lcm(&y)));
            }
        }
        Tables { n, meet, join }
    }

    fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.n + y] as usize
    }

    fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.n + y] as usize
    }

    fn distributive_identity(&self) -> bool {
        (0..self.n).all(|x| {
            (0..self.n).all(|y| {
                (0..self.n).all(|z| {
                    self.join(x, self.meet(y, z)) == self.meet(self.join(x, y), self.join(x, z))
                })
            })
        })
    }

    /// For each `x`, `y ↦ (x ∧ y, x ∨ y)` must be injective.
    fn cancellation(&self) -> bool {
        (0..self.n).all(|x| {
            let mut seen = HashSet::with_capacity(self.n);
            (0..self.n).all(|y| seen.insert((self.meet(x, y), self.join(x, y))))
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeReport {
    pub a: u64,
    pub elements: Vec<u64>,
    pub atoms: Vec<u64>,
    pub width: usize,
    pub chains: Vec<Vec<u64>>,
    pub boolean: bool,
    pub distributive: bool,
    pub complemented: bool,
}
