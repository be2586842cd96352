//! Maps into the nonnegative rationals and their Choquet differences.

use std::sync::Arc;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::FinitePoset;

use super::JoinFamilies;

/// Exact rationals; sign tests on iterated differences must be sound.
pub type Rational = Ratio<i64>;

/// A monotone map from a join-semilattice into `ℚ₊`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalConeMap {
    source: Arc<FinitePoset>,
    values: Vec<Rational>,
    joins: Vec<Vec<usize>>,
}

/// A tuple `(g; g₁, …, gₙ)` where `(-1)^{n+1} Δ_{g₁}…Δ_{gₙ} v(g) < 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlternatingWitness {
    pub g: usize,
    pub gs: Vec<usize>,
    pub difference: String,
}

impl RationalConeMap {
    pub fn new(source: Arc<FinitePoset>, values: Vec<Rational>) -> Result<Self> {
        if !source.is_join_semilattice() {
            return Err(Error::NotJoinSemilattice("source"));
        }
        if values.len() != source.len() {
            return Err(Error::ValueCount {
                expected: source.len(),
                got: values.len(),
            });
        }
        if let Some(v) = values.iter().find(|v| **v < Rational::from_integer(0)) {
            return Err(Error::BadRational(v.to_string()));
        }
        for g in 0..source.len() {
            for h in source.up(g) {
                if values[g] > values[h] {
                    return Err(Error::NotMonotone(g, h));
                }
            }
        }
        let n = source.len();
        let joins = (0..n)
            .map(|g| (0..n).map(|h| source.join(g, h).expect("join-semilattice")).collect())
            .collect();
        Ok(RationalConeMap { source, values, joins })
    }

    pub fn from_integers(source: Arc<FinitePoset>, values: &[i64]) -> Result<Self> {
        Self::new(source, values.iter().map(|&x| Rational::from_integer(x)).collect())
    }

    pub fn source(&self) -> &FinitePoset {
        &self.source
    }

    pub fn value(&self, g: usize) -> Rational {
        self.values[g]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// Suprema of nonempty families go to the maximum of the values.
    pub fn is_maxitive(&self) -> Result<bool> {
        let fam = JoinFamilies::of(&self.source)?;
        Ok(fam
            .families()
            .iter()
            .all(|&(s, j)| s.iter().map(|g| self.values[g]).max() == Some(self.values[j])))
    }

    /// `Δ_{g₁}…Δ_{gₙ} v(g)`, with `Δ_{g₁} v(g) = v(g ∨ g₁) − v(g)` applied
    /// outermost first.
    pub fn delta(&self, g: usize, gs: &[usize]) -> Rational {
        match gs.split_first() {
            None => self.values[g],
            Some((&g1, rest)) => self.delta(self.joins[g][g1], rest) - self.delta(g, rest),
        }
    }

    /// First tuple breaking the sign condition with `n <= depth`, scanning
    /// `n = 1, 2, …` and tuples in lexicographic order.
    pub fn alternating_witness(&self, depth: usize) -> Option<AlternatingWitness> {
        let n = self.source.len();
        let zero = Rational::from_integer(0);
        for len in 1..=depth {
            let mut tuple = vec![0usize; len + 1];
            loop {
                let d = self.delta(tuple[0], &tuple[1..]);
                let signed = if len % 2 == 1 { d } else { -d };
                if signed < zero {
                    return Some(AlternatingWitness {
                        g: tuple[0],
                        gs: tuple[1..].to_vec(),
                        difference: d.to_string(),
                    });
                }
                if !odometer(&mut tuple, n) {
                    break;
                }
            }
        }
        None
    }

    pub fn is_alternating(&self, depth: usize) -> bool {
        assert!(depth >= 1, "depth must be at least 1");
        self.alternating_witness(depth).is_none()
    }
}

/// Default depth for the alternating check.
pub const DEFAULT_ALTERNATING_DEPTH: usize = 4;

fn odometer(t: &mut [usize], base: usize) -> bool {
    for d in t.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(x: i64) -> Rational {
        Rational::from_integer(x)
    }

    #[test]
    fn trivial_differences() {
        let d = Arc::new(FinitePoset::diamond());
        let v = RationalConeMap::from_integers(d.clone(), &[0, 2, 3, 3]).unwrap();
        for g in 0..4 {
            assert_eq!(v.delta(g, &[g]), q(0));
            for h in d.down(g) {
                assert_eq!(v.delta(g, &[h]), q(0));
            }
        }
        let (a, b) = (d.index_of("a").unwrap(), d.index_of("b").unwrap());
        // v(⊤) − v(a) = max(v(a), v(b)) − v(a)
        assert_eq!(v.delta(a, &[b]), q(1));
    }

    #[test]
    fn second_difference_by_hand() {
        // Δ_a Δ_b v(⊥) = v(⊤) − v(a) − v(b) + v(⊥)
        let d = Arc::new(FinitePoset::diamond());
        let v = RationalConeMap::from_integers(d, &[1, 2, 3, 3]).unwrap();
        assert_eq!(v.delta(0, &[1, 2]), q(3 - 2 - 3 + 1));
        assert_eq!(v.delta(0, &[2, 1]), v.delta(0, &[1, 2]));
    }

    #[test]
    fn chain_map_is_alternating() {
        let c = Arc::new(FinitePoset::chain(2));
        let v = RationalConeMap::from_integers(c, &[0, 1]).unwrap();
        assert!(v.is_maxitive().unwrap());
        assert!(v.is_alternating(4));
    }

    #[test]
    fn supermodular_map_is_not_alternating() {
        // v(⊤) > v(a) + v(b) − v(⊥): strictly supermodular
        let d = Arc::new(FinitePoset::diamond());
        let v = RationalConeMap::from_integers(d, &[0, 1, 1, 3]).unwrap();
        assert!(!v.is_maxitive().unwrap());
        let w = v.alternating_witness(4).unwrap();
        assert_eq!(w.gs.len(), 2);
        assert!(!v.is_alternating(2));
        assert!(v.is_alternating(1));
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(
            RationalConeMap::from_integers(Arc::new(FinitePoset::antichain(2)), &[0, 0]).unwrap_err(),
            Error::NotJoinSemilattice("source")
        );
        let c = Arc::new(FinitePoset::chain(2));
        assert!(matches!(
            RationalConeMap::from_integers(c.clone(), &[-1, 0]),
            Err(Error::BadRational(_))
        ));
        assert_eq!(
            RationalConeMap::from_integers(c, &[2, 1]).unwrap_err(),
            Error::NotMonotone(0, 1)
        );
    }
}
