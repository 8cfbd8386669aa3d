//! Minimum chain partitions of a divisor poset.
//!
//! The strict order `x | y, x ≠ y` is viewed as a bipartite graph from a
//! "lower" copy of the elements to an "upper" copy. Each matched edge
//! `x → y` puts `y` directly after `x` in a chain, so a maximum matching
//! gives `n − |M|` chains, the minimum. König's theorem turns the same
//! matching into a minimum vertex cover, and the elements with neither
//! copy in the cover form an antichain of size `n − |M|`.

use std::collections::VecDeque;

use super::DivisorPoset;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainCover {
    /// Disjoint chains covering every element, each ascending.
    pub chains: Vec<Vec<u64>>,
    /// Pairwise non-comparable elements, as many as there are chains.
    pub antichain: Vec<u64>,
}

impl ChainCover {
    pub fn width(&self) -> usize {
        self.chains.len()
    }

    /// Extends every chain down to 1 and up to `root`.
    ///
    /// The result is still a family of chains covering the poset, but no
    /// longer disjoint: this is the overlapping form in which chain covers
    /// are usually drawn, e.g. `1,2,6,30; 1,3,15,30; 1,5,10,30` for 30.
    pub fn as_overlapping_cover(&self, root: u64) -> Vec<Vec<u64>> {
        self.chains
            .iter()
            .map(|chain| {
                let mut full = chain.clone();
                if full.first() != Some(&1) {
                    full.insert(0, 1);
                }
                if full.last() != Some(&root) {
                    full.push(root);
                }
                full
            })
            .collect()
    }

    /// Checks the cover against the poset: the chains partition the
    /// elements, each chain is totally ordered, the antichain has no
    /// comparable pair, and the two have equal size.
    pub fn is_valid_for(&self, poset: &DivisorPoset) -> bool {
        let mut seen: Vec<u64> = self.chains.iter().flatten().copied().collect();
        seen.sort_unstable();
        let partition = seen == poset.elements();
        let ordered = self
            .chains
            .iter()
            .all(|c| !c.is_empty() && c.windows(2).all(|w| w[0] != w[1] && w[1] % w[0] == 0));
        let independent = self.antichain.iter().enumerate().all(|(i, &x)| {
            poset.contains(x)
                && self.antichain[i + 1..]
                    .iter()
                    .all(|&y| !poset.comparable(x, y))
        });
        partition && ordered && independent && self.antichain.len() == self.chains.len()
    }
}

/// Minimum chain partition plus a maximum antichain certifying it.
///
/// Ties are broken by ascending element value, so the output is
/// deterministic.
pub fn chain_cover(poset: &DivisorPoset) -> ChainCover {
    let elements = poset.elements();
    let n = elements.len();
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (i + 1..n)
                .filter(|&j| elements[j].is_multiple_of(elements[i]))
                .collect()
        })
        .collect();
    let matching = Matching::maximum(&adj, n);

    let mut chains = Vec::new();
    for start in (0..n).filter(|&j| matching.right[j].is_none()) {
        let mut chain = vec![elements[start]];
        let mut cur = start;
        while let Some(next) = matching.left[cur] {
            chain.push(elements[next]);
            cur = next;
        }
        chains.push(chain);
    }

    let (reach_left, reach_right) = matching.alternating_reach(&adj);
    let antichain = (0..n)
        .filter(|&i| reach_left[i] && !reach_right[i])
        .map(|i| elements[i])
        .collect();

    let cover = ChainCover { chains, antichain };
    debug_assert!(cover.is_valid_for(poset));
    cover
}

struct Matching {
    left: Vec<Option<usize>>,
    right: Vec<Option<usize>>,
}

impl Matching {
    /// Hopcroft–Karp.
    fn maximum(adj: &[Vec<usize>], n_right: usize) -> Matching {
        let n_left = adj.len();
        let mut m = Matching {
            left: vec![None; n_left],
            right: vec![None; n_right],
        };
        let mut dist = vec![usize::MAX; n_left];
        loop {
            // Layer the free left vertices and everything reachable by
            // alternating paths.
            let mut queue = VecDeque::new();
            for (u, d) in dist.iter_mut().enumerate() {
                if m.left[u].is_none() {
                    *d = 0;
                    queue.push_back(u);
                } else {
                    *d = usize::MAX;
                }
            }
            let mut found = false;
            while let Some(u) = queue.pop_front() {
                for &v in &adj[u] {
                    match m.right[v] {
                        None => found = true,
                        Some(w) if dist[w] == usize::MAX => {
                            dist[w] = dist[u] + 1;
                            queue.push_back(w);
                        }
                        Some(_) => {}
                    }
                }
            }
            if !found {
                return m;
            }
            for u in 0..n_left {
                if m.left[u].is_none() {
                    m.augment(adj, &mut dist, u);
                }
            }
        }
    }

    fn augment(&mut self, adj: &[Vec<usize>], dist: &mut [usize], u: usize) -> bool {
        for &v in &adj[u] {
            let ok = match self.right[v] {
                None => true,
                Some(w) => dist[w] == dist[u] + 1 && self.augment(adj, dist, w),
            };
            if ok {
                self.left[u] = Some(v);
                self.right[v] = Some(u);
                return true;
            }
        }
        dist[u] = usize::MAX;
        false
    }

    /// Vertices reachable from free left vertices by alternating paths
    /// (any edge left→right, matched edges right→left).
    fn alternating_reach(&self, adj: &[Vec<usize>]) -> (Vec<bool>, Vec<bool>) {
        let mut reach_left = vec![false; adj.len()];
        let mut reach_right = vec![false; self.right.len()];
        let mut queue: VecDeque<usize> =
            (0..adj.len()).filter(|&u| self.left[u].is_none()).collect();
        for &u in &queue {
            reach_left[u] = true;
        }
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if reach_right[v] || self.left[u] == Some(v) {
                    continue;
                }
                reach_right[v] = true;
                if let Some(w) = self.right[v] {
                    if !reach_left[w] {
                        reach_left[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        (reach_left, reach_right)
    }
}
