//! The space `𝓜` of all maxitive maps `E → L`, ordered pointwise.
//!
//! The space is materialized: every maxitive value vector is listed, sorted
//! lexicographically, and (when small enough) turned into a [`FinitePoset`]
//! so that the order-theoretic machinery applies to `𝓜` itself.

use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::maxitive::{candidate_count, from_ideal_family, monotone_maps, IdealFamily, JoinFamilies, MonotoneMap};
use crate::poset::FinitePoset;
use crate::residuation::heyting_arrow;
use crate::selection::{FilterSelection, SelectionKind, WayAboveRelation};
use crate::subset::{Subset, MAX_ELEMENTS};

/// Default bound on `|L|^|E|`.
pub const DEFAULT_SPACE_CAP: u128 = 1_000_000;

/// Most distinct generators whose subfamilies are searched exhaustively.
pub const GENERATOR_SUBSET_CAP: usize = 20;

#[derive(Clone, Debug)]
pub struct MaxMapSpace {
    source: Arc<FinitePoset>,
    target: Arc<FinitePoset>,
    maps: Vec<Vec<usize>>,
    order: Option<FinitePoset>,
}

/// The map `⟨h,s⟩`: `s` on `↓h`, the top of `L` elsewhere.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Generator {
    pub h: usize,
    pub s: usize,
}

/// Pointwise infimum of a family of maps, and where it sits in `𝓜`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointwiseInf {
    pub values: Vec<usize>,
    /// Index in the space, if the infimum is maxitive.
    pub index: Option<usize>,
    /// Whether it is also the infimum of the family in `𝓜`.
    pub is_infimum: bool,
}

/// Generators `⟨h,s⟩` with `s ≫ v(h)`, and the pointwise infimum of their maps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Representation {
    pub generators: Vec<Generator>,
    pub reconstructed: Vec<usize>,
    pub exact: bool,
}

pub fn build_space(e: Arc<FinitePoset>, l: Arc<FinitePoset>) -> Result<MaxMapSpace> {
    build_space_with_cap(e, l, DEFAULT_SPACE_CAP)
}

pub fn build_space_with_cap(e: Arc<FinitePoset>, l: Arc<FinitePoset>, cap: u128) -> Result<MaxMapSpace> {
    let count = candidate_count(&e, &l);
    if count > cap {
        return Err(Error::CapExceeded {
            what: "candidate maps",
            size: usize::try_from(count).unwrap_or(usize::MAX),
            cap: usize::try_from(cap).unwrap_or(usize::MAX),
        });
    }
    let fam = JoinFamilies::of(&e)?;
    let mut maps: Vec<Vec<usize>> = monotone_maps(&e, &l)
        .into_par_iter()
        .filter(|v| fam.violation(&l, v).is_none())
        .collect();
    maps.sort();
    let order = (maps.len() <= MAX_ELEMENTS).then(|| order_of(&l, &maps));
    Ok(MaxMapSpace {
        source: e,
        target: l,
        maps,
        order,
    })
}

fn order_of(l: &FinitePoset, maps: &[Vec<usize>]) -> FinitePoset {
    let leq = |i: usize, j: usize| maps[i].iter().zip(&maps[j]).all(|(&a, &b)| l.leq(a, b));
    let labels = maps
        .iter()
        .map(|v| {
            let parts: Vec<String> = v.iter().map(|&t| l.label(t)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    FinitePoset::from_leq(maps.len(), leq)
        .and_then(|p| p.with_labels(labels))
        .expect("pointwise order on distinct maps is a partial order")
}

impl MaxMapSpace {
    pub fn source(&self) -> &FinitePoset {
        &self.source
    }

    pub fn target(&self) -> &FinitePoset {
        &self.target
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn maps(&self) -> &[Vec<usize>] {
        &self.maps
    }

    pub fn values(&self, i: usize) -> &[usize] {
        &self.maps[i]
    }

    pub fn map(&self, i: usize) -> MonotoneMap {
        MonotoneMap::new(self.source.clone(), self.target.clone(), self.maps[i].clone()).expect("members are monotone")
    }

    pub fn index_of(&self, values: &[usize]) -> Option<usize> {
        self.maps.binary_search_by(|m| m.as_slice().cmp(values)).ok()
    }

    /// `𝓜` as a poset; needs at most [`MAX_ELEMENTS`] members.
    pub fn order(&self) -> Result<&FinitePoset> {
        self.order.as_ref().ok_or(Error::SpaceTooLarge(self.maps.len()))
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        pointwise_leq(&self.target, &self.maps[i], &self.maps[j])
    }

    /// Least member above both, found by scanning the space.
    pub fn join(&self, i: usize, j: usize) -> Option<usize> {
        let above: Vec<usize> = (0..self.len()).filter(|&k| self.leq(i, k) && self.leq(j, k)).collect();
        above.iter().copied().find(|&k| above.iter().all(|&m| self.leq(k, m)))
    }

    /// Greatest member below both, found by scanning the space.
    pub fn meet(&self, i: usize, j: usize) -> Option<usize> {
        let below: Vec<usize> = (0..self.len()).filter(|&k| self.leq(k, i) && self.leq(k, j)).collect();
        below.iter().copied().find(|&k| below.iter().all(|&m| self.leq(m, k)))
    }

    fn top_of_target(&self) -> Result<usize> {
        self.target
            .top()
            .ok_or_else(|| Error::MissingSupremum("L has no top".into()))
    }

    /// Pointwise infimum of an F-family of `𝓜`; the empty family gives the
    /// constant top map.
    pub fn pointwise_inf(&self, family: Subset, sel: &FilterSelection<'_>) -> Result<PointwiseInf> {
        let order = self.order()?;
        if !sel.poset().same_order(order) {
            return Err(Error::PosetMismatch);
        }
        if !sel.contains(family) {
            return Err(Error::NotFSet(family));
        }
        let values = self.pointwise_glb(family.iter().map(|i| self.maps[i].as_slice()))?;
        let index = self.index_of(&values);
        let is_infimum = index.is_some() && order.glb(family) == index;
        Ok(PointwiseInf {
            values,
            index,
            is_infimum,
        })
    }

    fn pointwise_glb<'a>(&self, family: impl Iterator<Item = &'a [usize]> + Clone) -> Result<Vec<usize>> {
        (0..self.source.len())
            .map(|g| {
                let at: Subset = family.clone().map(|v| v[g]).collect();
                self.target
                    .glb(at)
                    .ok_or_else(|| Error::MissingInfimum(self.target.format_subset(at)))
            })
            .collect()
    }

    /// Values of `⟨h,s⟩`.
    pub fn generator_values(&self, gen: Generator) -> Result<Vec<usize>> {
        self.source.check_element(gen.h)?;
        self.target.check_element(gen.s)?;
        let top = self.top_of_target()?;
        Ok((0..self.source.len())
            .map(|g| if self.source.leq(g, gen.h) { gen.s } else { top })
            .collect())
    }

    /// Index of `⟨h,s⟩` in the space.
    pub fn generator_map(&self, gen: Generator) -> Result<usize> {
        self.index_of(&self.generator_values(gen)?).ok_or(Error::NotInSpace)
    }

    /// Pairs `(⟨h,s⟩, v)` with `s ≫ v(h)` in `L` but not `⟨h,s⟩ ≫ v` in `𝓜`.
    pub fn generator_lemma_failures(
        &self,
        rel_l: &WayAboveRelation,
        rel_m: &WayAboveRelation,
    ) -> Result<Vec<(Generator, usize)>> {
        let mut failures = Vec::new();
        for h in 0..self.source.len() {
            for s in 0..self.target.len() {
                let gen = Generator { h, s };
                let k = self.generator_map(gen)?;
                for v in 0..self.len() {
                    if rel_l.is_way_above(s, self.maps[v][h]) && !rel_m.is_way_above(k, v) {
                        failures.push((gen, v));
                    }
                }
            }
        }
        Ok(failures)
    }

    /// `{⟨h,s⟩ : s ≫ v(h)}` in `(h, s)` order.
    pub fn generators_below(&self, v: usize, rel_l: &WayAboveRelation) -> Vec<Generator> {
        (0..self.source.len())
            .flat_map(|h| {
                rel_l
                    .way_above_set(self.maps[v][h])
                    .iter()
                    .map(move |s| Generator { h, s })
            })
            .collect()
    }

    pub fn representation(&self, v: usize, rel_l: &WayAboveRelation) -> Result<Representation> {
        let generators = self.generators_below(v, rel_l);
        let gens: Vec<Vec<usize>> = generators
            .iter()
            .map(|&g| self.generator_values(g))
            .collect::<Result<_>>()?;
        let reconstructed = self.pointwise_glb(gens.iter().map(Vec::as_slice))?;
        let exact = reconstructed == self.maps[v];
        Ok(Representation {
            generators,
            reconstructed,
            exact,
        })
    }

    /// `≫` on `𝓜` from its definition under `kind`.
    pub fn way_above_in_m(&self, kind: SelectionKind) -> Result<WayAboveRelation> {
        Ok(FilterSelection::new(self.order()?, kind)?.way_above())
    }

    /// `w ≫ v` iff `w >= ⋀_j ⟨h_j,s_j⟩` (meet in `𝓜`) for some finite
    /// family of generators with `s_j ≫ v(h_j)`.
    pub fn corollary_relation(&self, rel_l: &WayAboveRelation) -> Result<WayAboveRelation> {
        let order = self.order()?;
        let mut above = Vec::with_capacity(self.len());
        for v in 0..self.len() {
            let gens: Subset = self
                .generators_below(v, rel_l)
                .into_iter()
                .map(|g| self.generator_map(g))
                .collect::<Result<_>>()?;
            if gens.len() > GENERATOR_SUBSET_CAP {
                return Err(Error::CapExceeded {
                    what: "distinct generators",
                    size: gens.len(),
                    cap: GENERATOR_SUBSET_CAP,
                });
            }
            let mut row = Subset::EMPTY;
            for family in gens.subsets() {
                if let Some(m) = order.glb(family) {
                    row = row | order.up(m);
                }
            }
            above.push(row);
        }
        Ok(WayAboveRelation::from_above(above))
    }

    /// `(u ← v)(g) = ⋀{t : g ∈ I_t}` with
    /// `I_t = {g : v(h) <= u(h) ∨ t for all h <= g}`. Needs `L` a
    /// distributive lattice; fails with [`Error::NotIdeal`] when some `I_t`
    /// is not closed under the joins of `E`.
    pub fn m_arrow(&self, u: usize, v: usize) -> Result<usize> {
        let l = &*self.target;
        let profile = l.classify();
        if !profile.is_lattice {
            return Err(Error::NotLattice("L"));
        }
        if !profile.is_distributive {
            return Err(Error::NotDistributive("L"));
        }
        let (uu, vv) = (&self.maps[u], &self.maps[v]);
        let e = &*self.source;
        let family: Vec<Subset> = (0..l.len())
            .map(|t| {
                (0..e.len())
                    .filter(|&g| {
                        e.down(g).iter().all(|h| {
                            let j = l.join(uu[h], t).expect("lattice");
                            l.leq(vv[h], j)
                        })
                    })
                    .collect()
            })
            .collect();
        let fam = IdealFamily::new(self.source.clone(), self.target.clone(), family)?;
        let sel = FilterSelection::new(l, SelectionKind::Principal)?;
        let w = from_ideal_family(&fam, &sel)?;
        self.index_of(w.values()).ok_or(Error::NotInSpace)
    }

    /// `g ↦ ⋁_{h <= g} (u(h) ← v(h))`, the closed form of [`Self::m_arrow`].
    pub fn arrow_formula(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        let (e, l) = (&*self.source, &*self.target);
        (0..e.len())
            .map(|g| {
                let parts: Subset = e
                    .down(g)
                    .iter()
                    .map(|h| heyting_arrow(l, self.maps[u][h], self.maps[v][h]))
                    .collect::<Result<_>>()?;
                Ok(l.lub(parts).expect("lattice"))
            })
            .collect()
    }
}

fn pointwise_leq(l: &FinitePoset, a: &[usize], b: &[usize]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| l.leq(x, y))
}
