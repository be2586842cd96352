//! Maxitive maps `v: E → L` between finite posets.
//!
//! A map is maxitive when it sends the supremum of every nonempty finite
//! family of `E` (whenever that supremum exists in `E`) to the supremum of
//! the images. Checking pairs alone is not enough outside join-semilattices.

mod alternating;
mod extension;
mod ideals;

pub use alternating::{AlternatingWitness, Rational, RationalConeMap, DEFAULT_ALTERNATING_DEPTH};
pub use extension::{
    e_lower_star, e_star, extend_lower_star, extend_star, lower_star_contains_base, maxitive_extensions, ExtendedMap,
};
pub use ideals::{from_ideal_family, ideal_family_of, IdealFamily};

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poset::FinitePoset;
use crate::subset::Subset;

/// Largest source for which maxitivity is checked over all families.
pub const FAMILY_CAP: usize = 16;

/// An order-preserving map between two finite posets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonotoneMap {
    source: Arc<FinitePoset>,
    target: Arc<FinitePoset>,
    values: Vec<usize>,
}

impl MonotoneMap {
    pub fn new(source: Arc<FinitePoset>, target: Arc<FinitePoset>, values: Vec<usize>) -> Result<Self> {
        if values.len() != source.len() {
            return Err(Error::ValueCount {
                expected: source.len(),
                got: values.len(),
            });
        }
        for &t in &values {
            target.check_element(t)?;
        }
        if let Some((g, h)) = monotonicity_violation(&source, &target, &values) {
            return Err(Error::NotMonotone(g, h));
        }
        Ok(MonotoneMap { source, target, values })
    }

    pub fn constant(source: Arc<FinitePoset>, target: Arc<FinitePoset>, t: usize) -> Result<Self> {
        let values = vec![t; source.len()];
        Self::new(source, target, values)
    }

    pub fn identity(p: Arc<FinitePoset>) -> Self {
        let values = (0..p.len()).collect();
        MonotoneMap {
            source: p.clone(),
            target: p,
            values,
        }
    }

    pub fn source(&self) -> &FinitePoset {
        &self.source
    }

    pub fn target(&self) -> &FinitePoset {
        &self.target
    }

    pub fn source_arc(&self) -> &Arc<FinitePoset> {
        &self.source
    }

    pub fn target_arc(&self) -> &Arc<FinitePoset> {
        &self.target
    }

    #[inline]
    pub fn value(&self, g: usize) -> usize {
        self.values[g]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Pointwise order, `self <= other`.
    pub fn pointwise_leq(&self, other: &MonotoneMap) -> bool {
        self.values
            .iter()
            .zip(&other.values)
            .all(|(&a, &b)| self.target.leq(a, b))
    }

    /// The map `g ↦ other(self(g))`.
    pub fn then(&self, other: &MonotoneMap) -> Result<MonotoneMap> {
        if !self.target.same_order(&other.source) {
            return Err(Error::PosetMismatch);
        }
        let values = self.values.iter().map(|&t| other.values[t]).collect();
        Ok(MonotoneMap {
            source: self.source.clone(),
            target: other.target.clone(),
            values,
        })
    }

    pub fn is_maxitive(&self) -> Result<bool> {
        Ok(self.maxitivity_witness()?.is_none())
    }

    /// A nonempty family of `E` whose existing supremum is not sent to the
    /// supremum of its images, smallest first.
    pub fn maxitivity_witness(&self) -> Result<Option<Subset>> {
        Ok(JoinFamilies::of(&self.source)?.violation(&self.target, &self.values))
    }

    /// `v(g ∨ g') = v(g) ∨ v(g')` whenever `g ∨ g'` exists in `E`.
    pub fn is_pairwise_maxitive(&self) -> bool {
        let (e, l) = (&*self.source, &*self.target);
        (0..e.len()).all(|g| {
            (g + 1..e.len()).all(|h| match e.join(g, h) {
                Some(j) => l.join(self.values[g], self.values[h]) == Some(self.values[j]),
                None => true,
            })
        })
    }
}

/// Every nonempty subset of a poset that has a supremum, with that supremum.
#[derive(Clone, Debug)]
pub struct JoinFamilies {
    families: Vec<(Subset, usize)>,
}

impl JoinFamilies {
    pub fn of(e: &FinitePoset) -> Result<Self> {
        if e.len() > FAMILY_CAP {
            return Err(Error::CapExceeded {
                what: "maxitivity source",
                size: e.len(),
                cap: FAMILY_CAP,
            });
        }
        let mut families: Vec<(Subset, usize)> = e
            .all()
            .subsets()
            .filter(|s| !s.is_empty())
            .filter_map(|s| e.lub(s).map(|j| (s, j)))
            .collect();
        families.sort_by_key(|&(s, _)| (s.len(), s));
        Ok(JoinFamilies { families })
    }

    pub fn families(&self) -> &[(Subset, usize)] {
        &self.families
    }

    /// First family breaking the join law for `values`, if any.
    pub fn violation(&self, target: &FinitePoset, values: &[usize]) -> Option<Subset> {
        self.families.iter().find_map(|&(s, j)| {
            let image: Subset = s.iter().map(|g| values[g]).collect();
            (target.lub(image) != Some(values[j])).then_some(s)
        })
    }
}

fn monotonicity_violation(e: &FinitePoset, l: &FinitePoset, values: &[usize]) -> Option<(usize, usize)> {
    (0..e.len()).find_map(|g| e.up(g).iter().find(|&h| !l.leq(values[g], values[h])).map(|h| (g, h)))
}

/// Number of candidate value vectors, `|L|^|E|`, saturating.
pub fn candidate_count(e: &FinitePoset, l: &FinitePoset) -> u128 {
    (0..e.len()).fold(1u128, |acc, _| acc.saturating_mul(l.len() as u128))
}

/// All order-preserving value vectors `E → L` that agree with `fixed`
/// wherever it is `Some`.
pub fn monotone_maps_with(e: &FinitePoset, l: &FinitePoset, fixed: &[Option<usize>]) -> Vec<Vec<usize>> {
    assert_eq!(fixed.len(), e.len());
    let order = e.linear_extension();
    let mut values = vec![usize::MAX; e.len()];
    let mut out = Vec::new();
    monotone_rec(e, l, fixed, &order, 0, &mut values, &mut out);
    out
}

fn monotone_rec(
    e: &FinitePoset,
    l: &FinitePoset,
    fixed: &[Option<usize>],
    order: &[usize],
    i: usize,
    values: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if i == order.len() {
        out.push(values.clone());
        return;
    }
    let g = order[i];
    // everything below g is assigned already
    let floor = e.down(g) - Subset::singleton(g);
    let candidates: Vec<usize> = match fixed[g] {
        Some(t) => vec![t],
        None => (0..l.len()).collect(),
    };
    for t in candidates {
        if floor.iter().all(|h| l.leq(values[h], t)) {
            values[g] = t;
            monotone_rec(e, l, fixed, order, i + 1, values, out);
        }
    }
    values[g] = usize::MAX;
}

/// All order-preserving value vectors `E → L`.
pub fn monotone_maps(e: &FinitePoset, l: &FinitePoset) -> Vec<Vec<usize>> {
    monotone_maps_with(e, l, &vec![None; e.len()])
}

/// All maxitive value vectors `E → L`.
pub fn maxitive_maps(e: &FinitePoset, l: &FinitePoset) -> Result<Vec<Vec<usize>>> {
    let fam = JoinFamilies::of(e)?;
    Ok(monotone_maps(e, l)
        .into_iter()
        .filter(|v| fam.violation(l, v).is_none())
        .collect())
}
