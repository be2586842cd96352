//! Exhaustive enumeration of partial orders on small labeled sets.
//!
//! Every unordered pair `{i, j}` takes one of three states (incomparable,
//! `i < j`, `j < i`); candidates are walked as a base-3 odometer and the
//! ones failing transitivity are dropped.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::poset::FinitePoset;
use crate::subset::Subset;

/// Default size cap for [`enumerate_posets`].
pub const DEFAULT_ENUMERATION_CAP: usize = 5;
/// Hard size cap; `3^(n(n-1)/2)` candidates are walked.
pub const MAX_ENUMERATION_SIZE: usize = 6;

/// Streams every partial order on exactly `n` labeled points once.
pub struct PosetEnumerator {
    n: usize,
    pairs: Vec<(usize, usize)>,
    state: Vec<u8>,
    done: bool,
    seen: Option<HashSet<u64>>,
}

impl PosetEnumerator {
    /// All labeled posets of size `n`, `n <= cap`.
    pub fn new(n: usize, cap: usize) -> Result<Self> {
        let cap = cap.min(MAX_ENUMERATION_SIZE);
        if n > cap {
            return Err(Error::CapExceeded {
                what: "enumerated poset",
                size: n,
                cap,
            });
        }
        if n == 0 {
            return Err(Error::EmptyPoset);
        }
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Ok(PosetEnumerator {
            n,
            state: vec![0; pairs.len()],
            pairs,
            done: false,
            seen: None,
        })
    }

    /// Yield one representative per isomorphism class instead.
    pub fn up_to_isomorphism(mut self) -> Self {
        self.seen = Some(HashSet::new());
        self
    }

    fn advance(&mut self) {
        for s in self.state.iter_mut() {
            if *s < 2 {
                *s += 1;
                return;
            }
            *s = 0;
        }
        self.done = true;
    }

    fn candidate(&self) -> Option<FinitePoset> {
        let n = self.n;
        let mut up: Vec<Subset> = (0..n).map(Subset::singleton).collect();
        for (&(i, j), &s) in self.pairs.iter().zip(&self.state) {
            match s {
                1 => up[i].insert(j),
                2 => up[j].insert(i),
                _ => {}
            }
        }
        for x in 0..n {
            for y in up[x] {
                if !up[y].is_subset(up[x]) {
                    return None;
                }
            }
        }
        Some(FinitePoset::from_leq(n, |x, y| up[x].contains(y)).expect("checked poset"))
    }
}

impl Iterator for PosetEnumerator {
    type Item = FinitePoset;

    fn next(&mut self) -> Option<FinitePoset> {
        while !self.done {
            let cand = self.candidate();
            self.advance();
            if let Some(p) = cand {
                match &mut self.seen {
                    None => return Some(p),
                    Some(seen) => {
                        if seen.insert(canonical_code(&p)) {
                            return Some(p);
                        }
                    }
                }
            }
        }
        None
    }
}

/// All labeled posets on exactly `n` points, `n <= DEFAULT_ENUMERATION_CAP`.
pub fn enumerate_posets(n: usize) -> Result<PosetEnumerator> {
    PosetEnumerator::new(n, DEFAULT_ENUMERATION_CAP)
}

/// All labeled posets of every size `1..=n_max`, smallest first.
pub fn posets_up_to(n_max: usize, dedup: bool) -> Result<Vec<FinitePoset>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        let e = PosetEnumerator::new(n, MAX_ENUMERATION_SIZE)?;
        if dedup {
            out.extend(e.up_to_isomorphism());
        } else {
            out.extend(e);
        }
    }
    Ok(out)
}

/// Isomorphism invariant: the smallest relation bitmask over all
/// relabelings. Factorial in `n`; fine up to 8 points.
pub fn canonical_code(p: &FinitePoset) -> u64 {
    let n = p.len();
    assert!(n <= 8, "canonical form is limited to 8 elements");
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    permute(&mut perm, 0, &mut |perm| {
        let mut code = 0u64;
        for x in 0..n {
            for y in 0..n {
                if p.leq(perm[x], perm[y]) {
                    code |= 1 << (x * n + y);
                }
            }
        }
        best = best.min(code);
    });
    best
}

fn permute(perm: &mut [usize], k: usize, f: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, f);
        perm.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Count partial orders by brute force over all `2^(n^2)` relations.
    fn brute_force_count(n: usize) -> usize {
        let bits = n * n;
        (0u32..1 << bits)
            .filter(|&r| {
                let leq = |x: usize, y: usize| r >> (x * n + y) & 1 == 1;
                (0..n).all(|x| leq(x, x))
                    && (0..n).all(|x| (0..n).all(|y| x == y || !(leq(x, y) && leq(y, x))))
                    && (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| !(leq(x, y) && leq(y, z)) || leq(x, z))))
            })
            .count()
    }

    #[test]
    fn labeled_counts_match_brute_force() {
        assert_eq!(enumerate_posets(1).unwrap().count(), 1);
        assert_eq!(enumerate_posets(2).unwrap().count(), 3);
        assert_eq!(enumerate_posets(3).unwrap().count(), 19);
        assert_eq!(brute_force_count(2), 3);
        assert_eq!(brute_force_count(3), 19);
        assert_eq!(enumerate_posets(4).unwrap().count(), brute_force_count(4));
        assert_eq!(enumerate_posets(5).unwrap().count(), 4231);
    }

    #[test]
    fn unlabeled_counts() {
        let counts: Vec<usize> = (1..=5)
            .map(|n| enumerate_posets(n).unwrap().up_to_isomorphism().count())
            .collect();
        assert_eq!(counts, vec![1, 2, 5, 16, 63]);
    }

    #[test]
    fn distinct_and_capped() {
        let all: Vec<_> = enumerate_posets(4).unwrap().collect();
        let set: HashSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), all.len());
        assert!(matches!(
            enumerate_posets(6),
            Err(Error::CapExceeded { size: 6, cap: 5, .. })
        ));
        assert_eq!(posets_up_to(3, false).unwrap().len(), 1 + 3 + 19);
    }

    #[test]
    fn canonical_code_is_label_invariant() {
        let a = FinitePoset::from_relation(3, &[(0, 1)]).unwrap();
        let b = FinitePoset::from_relation(3, &[(2, 0)]).unwrap();
        assert_eq!(canonical_code(&a), canonical_code(&b));
        assert_ne!(canonical_code(&a), canonical_code(&FinitePoset::chain(3)));
    }
}
