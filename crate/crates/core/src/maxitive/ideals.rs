use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poset::FinitePoset;
use crate::selection::{FilterSelection, WayAboveRelation};
use crate::subset::Subset;

use super::MonotoneMap;

/// A family `(I_t)_{t ∈ L}` of ideals of `E`, nondecreasing in `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFamily {
    source: Arc<FinitePoset>,
    target: Arc<FinitePoset>,
    family: Vec<Subset>,
}

impl IdealFamily {
    pub fn new(source: Arc<FinitePoset>, target: Arc<FinitePoset>, family: Vec<Subset>) -> Result<Self> {
        if family.len() != target.len() {
            return Err(Error::ValueCount {
                expected: target.len(),
                got: family.len(),
            });
        }
        for &i in &family {
            source.check_subset(i)?;
            if !source.is_ideal(i) {
                return Err(Error::NotIdeal(i));
            }
        }
        for s in 0..target.len() {
            for t in target.up(s) {
                if !family[s].is_subset(family[t]) {
                    return Err(Error::NotNondecreasing(s, t));
                }
            }
        }
        Ok(IdealFamily { source, target, family })
    }

    pub fn source(&self) -> &FinitePoset {
        &self.source
    }

    pub fn target(&self) -> &FinitePoset {
        &self.target
    }

    /// `I_t`.
    pub fn ideal(&self, t: usize) -> Subset {
        self.family[t]
    }

    pub fn ideals(&self) -> &[Subset] {
        &self.family
    }

    /// `{t ∈ L : g ∈ I_t}`.
    pub fn membership(&self, g: usize) -> Subset {
        (0..self.family.len()).filter(|&t| self.family[t].contains(g)).collect()
    }

    /// `⋂_{s ≫ t} I_s`, the whole of `E` when nothing is way above `t`.
    pub fn right_limit(&self, t: usize, rel: &WayAboveRelation) -> Subset {
        rel.way_above_set(t)
            .iter()
            .fold(self.source.all(), |acc, s| acc & self.family[s])
    }

    /// `I_t = ⋂_{s ≫ t} I_s` for every `t`.
    pub fn is_right_continuous(&self, rel: &WayAboveRelation) -> bool {
        (0..self.family.len()).all(|t| self.family[t] == self.right_limit(t, rel))
    }

    /// The family `J_t = ⋂_{s ≫ t} I_s`.
    pub fn right_continuous_hull(&self, rel: &WayAboveRelation) -> Result<IdealFamily> {
        let family = (0..self.family.len()).map(|t| self.right_limit(t, rel)).collect();
        IdealFamily::new(self.source.clone(), self.target.clone(), family)
    }
}

/// `v(g) = ⋀{t ∈ L : g ∈ I_t}`. Each membership set must be a nonempty
/// F-set of `L` with an infimum.
pub fn from_ideal_family(fam: &IdealFamily, sel_l: &FilterSelection<'_>) -> Result<MonotoneMap> {
    if !sel_l.poset().same_order(&fam.target) {
        return Err(Error::PosetMismatch);
    }
    let l = &*fam.target;
    let mut values = Vec::with_capacity(fam.source.len());
    for g in 0..fam.source.len() {
        let m = fam.membership(g);
        if m.is_empty() {
            return Err(Error::MissingInfimum(format!(
                "no ideal contains {}",
                fam.source.label(g)
            )));
        }
        if !sel_l.contains(m) {
            return Err(Error::NotFSet(m));
        }
        let t = l.glb(m).ok_or_else(|| Error::MissingInfimum(l.format_subset(m)))?;
        values.push(t);
    }
    MonotoneMap::new(fam.source.clone(), fam.target.clone(), values)
}

/// The sublevel family `I_t = {g ∈ E : v(g) <= t}` of a maxitive map.
pub fn ideal_family_of(v: &MonotoneMap) -> Result<IdealFamily> {
    if let Some(w) = v.maxitivity_witness()? {
        return Err(Error::NotMaxitive(w));
    }
    let (e, l) = (v.source(), v.target());
    let family = (0..l.len())
        .map(|t| (0..e.len()).filter(|&g| l.leq(v.value(g), t)).collect())
        .collect();
    IdealFamily::new(v.source_arc().clone(), v.target_arc().clone(), family)
}
