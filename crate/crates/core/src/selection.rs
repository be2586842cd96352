//! Filter selections and the way-above relation they induce.
//!
//! A filter selection designates, for a poset `P`, a family `F[P]` of upper
//! sets (the F-sets). Way-above is the dual of the classical way-below:
//! `y ≫ x` holds when every F-set `F` that has an infimum `⋀F <= x`
//! contains `y`. Continuity, domains and interpolation are all phrased in
//! terms of this relation, so they come out dual to the textbook notions.
//!
//! Chains and finite subsets are not offered as separate kinds: on a finite
//! poset their upper closures give the principal filters and all nonempty
//! upper sets, which `Principal` and `Upper` already cover (up to the empty
//! set).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::maxitive::MonotoneMap;
use crate::poset::FinitePoset;
use crate::subset::{Subset, MAX_ELEMENTS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SelectionKind {
    /// `{↑x : x ∈ P}`, from the singleton subset system.
    Principal,
    /// Nonempty codirected upper sets, from the filtered subset system.
    Filtered,
    /// Every upper set, `∅` included, from the all-subsets system.
    Upper,
    /// A user-supplied family, closed up with the principal filters.
    Explicit,
}

impl SelectionKind {
    pub const BUILT_IN: [SelectionKind; 3] = [SelectionKind::Principal, SelectionKind::Filtered, SelectionKind::Upper];

    pub fn name(self) -> &'static str {
        match self {
            SelectionKind::Principal => "principal",
            SelectionKind::Filtered => "filtered",
            SelectionKind::Upper => "upper",
            SelectionKind::Explicit => "explicit",
        }
    }

    pub fn parse(s: &str) -> Option<SelectionKind> {
        match s {
            "principal" => Some(SelectionKind::Principal),
            "filtered" => Some(SelectionKind::Filtered),
            "upper" => Some(SelectionKind::Upper),
            "explicit" => Some(SelectionKind::Explicit),
            _ => None,
        }
    }
}

/// The F-sets of one poset under one selection.
#[derive(Clone, Debug)]
pub struct FilterSelection<'p> {
    poset: &'p FinitePoset,
    kind: SelectionKind,
    recursion: SelectionKind,
    fsets: Vec<Subset>,
}

impl<'p> FilterSelection<'p> {
    /// One of the built-in selections.
    pub fn new(poset: &'p FinitePoset, kind: SelectionKind) -> Result<Self> {
        let fsets = match kind {
            SelectionKind::Principal => (0..poset.len()).map(|x| poset.up(x)).collect(),
            SelectionKind::Upper => poset.upper_sets(),
            SelectionKind::Filtered => poset
                .upper_sets()
                .into_iter()
                .filter(|&f| !f.is_empty() && is_codirected(poset, f))
                .collect(),
            SelectionKind::Explicit => return Err(Error::ExplicitRecursion),
        };
        Self::finish(poset, kind, kind, fsets)
    }

    /// An explicit family of upper sets. Principal filters are added. The
    /// built-in `recursion` kind is what [`Self::is_union_complete`] uses on
    /// the poset of F-sets.
    pub fn explicit(poset: &'p FinitePoset, sets: &[Subset], recursion: SelectionKind) -> Result<Self> {
        if recursion == SelectionKind::Explicit {
            return Err(Error::ExplicitRecursion);
        }
        let mut fsets = Vec::with_capacity(sets.len() + poset.len());
        for &s in sets {
            poset.check_subset(s)?;
            if !poset.is_upper_set(s) {
                return Err(Error::NotUpperSet(s));
            }
            fsets.push(s);
        }
        fsets.extend((0..poset.len()).map(|x| poset.up(x)));
        Self::finish(poset, SelectionKind::Explicit, recursion, fsets)
    }

    fn finish(
        poset: &'p FinitePoset,
        kind: SelectionKind,
        recursion: SelectionKind,
        mut fsets: Vec<Subset>,
    ) -> Result<Self> {
        fsets.sort();
        fsets.dedup();
        if !fsets.iter().any(|f| !f.is_empty()) {
            return Err(Error::EmptySelection);
        }
        Ok(FilterSelection {
            poset,
            kind,
            recursion,
            fsets,
        })
    }

    pub fn poset(&self) -> &'p FinitePoset {
        self.poset
    }

    pub fn kind(&self) -> SelectionKind {
        self.kind
    }

    pub fn recursion(&self) -> SelectionKind {
        self.recursion
    }

    pub fn fsets(&self) -> &[Subset] {
        &self.fsets
    }

    pub fn contains(&self, f: Subset) -> bool {
        self.fsets.binary_search(&f).is_ok()
    }

    /// A family `V` of F-sets that is an F-set of `(F[P], ⊇)` but whose union
    /// is not an F-set, if one exists.
    pub fn union_completeness_witness(&self) -> Result<Option<Vec<Subset>>> {
        let m = self.fsets.len();
        if m > MAX_ELEMENTS {
            return Err(Error::CapExceeded {
                what: "second-level selection",
                size: m,
                cap: MAX_ELEMENTS,
            });
        }
        let fs = &self.fsets;
        // F[P] ordered by reverse inclusion
        let second = FinitePoset::from_leq(m, |i, j| fs[j].is_subset(fs[i]))?;
        let outer = FilterSelection::new(&second, self.recursion)?;
        for &v in outer.fsets() {
            let union = v.iter().fold(Subset::EMPTY, |acc, i| acc | fs[i]);
            if !self.contains(union) {
                return Ok(Some(v.iter().map(|i| fs[i]).collect()));
            }
        }
        Ok(None)
    }

    /// `⋃V ∈ F[P]` for every `V ∈ F[F[P]]`.
    pub fn is_union_complete(&self) -> Result<bool> {
        Ok(self.union_completeness_witness()?.is_none())
    }

    pub fn way_above(&self) -> WayAboveRelation {
        let p = self.poset;
        let mut above = vec![p.all(); p.len()];
        for &f in &self.fsets {
            if let Some(m) = p.glb(f) {
                for x in p.up(m) {
                    above[x] = above[x] & f;
                }
            }
        }
        WayAboveRelation::from_above(above)
    }

    pub fn continuity_report(&self) -> ContinuityReport {
        let p = self.poset;
        let rel = self.way_above();
        let mut witnesses = Vec::new();
        let mut is_continuous = true;
        for x in 0..p.len() {
            let a = rel.way_above_set(x);
            if !self.contains(a) {
                is_continuous = false;
                witnesses.push(ContinuityWitness::NotAnFSet { x, way_above: a });
            } else if p.glb(a) != Some(x) {
                is_continuous = false;
                witnesses.push(ContinuityWitness::WrongInfimum { x, infimum: p.glb(a) });
            }
        }
        let mut complete = true;
        for &f in &self.fsets {
            if p.glb(f).is_none() {
                complete = false;
                witnesses.push(ContinuityWitness::NoInfimum { fset: f });
            }
        }
        let mut has_interpolation = true;
        for x in 0..p.len() {
            for y in rel.way_above_set(x) {
                if !rel.way_below_set(y).intersects(rel.way_above_set(x)) {
                    has_interpolation = false;
                    witnesses.push(ContinuityWitness::NoInterpolant { y, x });
                }
            }
        }
        ContinuityReport {
            is_continuous,
            is_domain: is_continuous && complete,
            has_interpolation,
            witnesses,
        }
    }
}

/// Free-function form of the selection constructors.
pub fn build_selection<'p>(
    poset: &'p FinitePoset,
    kind: SelectionKind,
    explicit_sets: Option<&[Subset]>,
) -> Result<FilterSelection<'p>> {
    match (kind, explicit_sets) {
        (SelectionKind::Explicit, Some(sets)) => FilterSelection::explicit(poset, sets, SelectionKind::Principal),
        (SelectionKind::Explicit, None) => Err(Error::EmptySelection),
        (k, _) => FilterSelection::new(poset, k),
    }
}

fn is_codirected(p: &FinitePoset, f: Subset) -> bool {
    f.iter()
        .all(|x| f.iter().all(|y| (p.down(x) & p.down(y)).intersects(f)))
}

/// `y ≫ x`, stored as the rows `⇑x = {y : y ≫ x}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WayAboveRelation {
    above: Vec<Subset>,
    below: Vec<Subset>,
}

impl WayAboveRelation {
    pub fn from_above(above: Vec<Subset>) -> Self {
        let n = above.len();
        let mut below = vec![Subset::EMPTY; n];
        for (x, row) in above.iter().enumerate() {
            for y in *row {
                below[y].insert(x);
            }
        }
        WayAboveRelation { above, below }
    }

    pub fn len(&self) -> usize {
        self.above.len()
    }

    pub fn is_empty(&self) -> bool {
        self.above.is_empty()
    }

    pub fn is_way_above(&self, y: usize, x: usize) -> bool {
        self.above[x].contains(y)
    }

    /// `⇑x`.
    pub fn way_above_set(&self, x: usize) -> Subset {
        self.above[x]
    }

    /// `⇓y = {x : y ≫ x}`.
    pub fn way_below_set(&self, y: usize) -> Subset {
        self.below[y]
    }

    /// `gg[y][x] ⇔ y ≫ x`.
    pub fn matrix(&self) -> Vec<Vec<bool>> {
        let n = self.above.len();
        (0..n)
            .map(|y| (0..n).map(|x| self.is_way_above(y, x)).collect())
            .collect()
    }

    /// Whether the relation coincides with `y >= x`.
    pub fn equals_order(&self, p: &FinitePoset) -> bool {
        (0..p.len()).all(|x| self.above[x] == p.up(x))
    }

    pub fn is_subrelation_of(&self, other: &WayAboveRelation) -> bool {
        self.above.iter().zip(&other.above).all(|(a, b)| a.is_subset(*b))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "failure", rename_all = "kebab-case")]
pub enum ContinuityWitness {
    /// `⇑x` is not an F-set.
    NotAnFSet { x: usize, way_above: Subset },
    /// `⋀⇑x` differs from `x` (or does not exist).
    WrongInfimum { x: usize, infimum: Option<usize> },
    /// An F-set without an infimum, so the poset is not a domain.
    NoInfimum { fset: Subset },
    /// `y ≫ x` with no `z` such that `y ≫ z ≫ x`.
    NoInterpolant { y: usize, x: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContinuityReport {
    pub is_continuous: bool,
    pub is_domain: bool,
    pub has_interpolation: bool,
    pub witnesses: Vec<ContinuityWitness>,
}

/// `↑f(F)`, the action of a monotone map on an F-set.
pub fn fmap(sel_p: &FilterSelection<'_>, sel_q: &FilterSelection<'_>, f: &MonotoneMap, fset: Subset) -> Result<Subset> {
    if !f.source().same_order(sel_p.poset()) || !f.target().same_order(sel_q.poset()) {
        return Err(Error::PosetMismatch);
    }
    if !sel_p.contains(fset) {
        return Err(Error::NotFSet(fset));
    }
    let image: Subset = fset.iter().map(|x| f.value(x)).collect();
    let up = sel_q.poset().up_set(image);
    if sel_q.kind() != SelectionKind::Explicit && !sel_q.contains(up) {
        return Err(Error::NotFSet(up));
    }
    Ok(up)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn set(p: &FinitePoset, names: &[&str]) -> Subset {
        names.iter().map(|s| p.index_of(s).unwrap()).collect()
    }

    /// Way-above straight from the quantifier, one pair at a time.
    fn way_above_oracle(sel: &FilterSelection<'_>, y: usize, x: usize) -> bool {
        let p = sel.poset();
        sel.fsets().iter().all(|&f| match p.glb(f) {
            Some(m) if p.leq(m, x) => f.contains(y),
            _ => true,
        })
    }

    #[test]
    fn principal_on_chain() {
        let c = FinitePoset::chain(3);
        let sel = FilterSelection::new(&c, SelectionKind::Principal).unwrap();
        let expect: Vec<Subset> = vec![Subset::singleton(2), [1, 2].into_iter().collect(), c.all()];
        assert_eq!(sel.fsets(), expect.as_slice());
        assert!(sel.way_above().equals_order(&c));
        assert!(sel.is_union_complete().unwrap());
    }

    #[test]
    fn antichain_filtered_and_upper() {
        let a = FinitePoset::antichain(2);
        let f = FilterSelection::new(&a, SelectionKind::Filtered).unwrap();
        assert_eq!(f.fsets(), &[Subset::singleton(0), Subset::singleton(1)]);
        let u = FilterSelection::new(&a, SelectionKind::Upper).unwrap();
        assert_eq!(u.fsets().len(), 4);
        assert!(u.contains(Subset::EMPTY));
        assert!(u.is_union_complete().unwrap());
    }

    #[test]
    fn way_above_matches_oracle() {
        for p in [
            FinitePoset::chain(3),
            FinitePoset::diamond(),
            FinitePoset::m3(),
            FinitePoset::n5(),
            FinitePoset::seven_element(),
        ] {
            for kind in SelectionKind::BUILT_IN {
                let sel = FilterSelection::new(&p, kind).unwrap();
                let rel = sel.way_above();
                for x in 0..p.len() {
                    for y in 0..p.len() {
                        assert_eq!(rel.is_way_above(y, x), way_above_oracle(&sel, y, x));
                    }
                }
            }
        }
    }

    #[test]
    fn upper_sets_on_chain() {
        // all upper sets of a chain are principal or empty; ⋀∅ is the top,
        // so nothing is way above the top and ≫ is ≥ elsewhere
        let c = FinitePoset::chain(3);
        let sel = FilterSelection::new(&c, SelectionKind::Upper).unwrap();
        let rel = sel.way_above();
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(rel.is_way_above(y, x), x < 2 && y >= x);
            }
        }
        let report = sel.continuity_report();
        assert!(report.is_continuous && report.is_domain && report.has_interpolation);
    }

    #[test]
    fn m3_is_not_supercontinuous() {
        let m3 = FinitePoset::m3();
        let sel = FilterSelection::new(&m3, SelectionKind::Upper).unwrap();
        let top = m3.top().unwrap();
        assert!(!sel.way_above().is_way_above(top, top));
        let report = sel.continuity_report();
        assert!(!report.is_continuous);
        assert!(!report.witnesses.is_empty());
        let d = FinitePoset::diamond();
        let sel = FilterSelection::new(&d, SelectionKind::Upper).unwrap();
        assert!(sel.continuity_report().is_continuous);
    }

    #[test]
    fn every_poset_is_continuous_under_principal() {
        for p in [
            FinitePoset::seven_element(),
            FinitePoset::antichain(3),
            FinitePoset::n5(),
        ] {
            let r = FilterSelection::new(&p, SelectionKind::Principal)
                .unwrap()
                .continuity_report();
            assert!(r.is_continuous && r.is_domain && r.has_interpolation);
        }
    }

    #[test]
    fn explicit_selection_on_diamond() {
        let d = FinitePoset::diamond();
        let extra = set(&d, &["a", "b", "⊤"]);
        let sel = FilterSelection::explicit(&d, &[extra], SelectionKind::Principal).unwrap();
        assert_eq!(sel.fsets().len(), 5);
        // the union of an F-family must again be an F-set; {a,b,⊤} ∪ ↑⊥ is
        // the whole lattice, which is principal, so the verdict is decided
        // by families like {↑a, ↑b} that are not principal in (F[P], ⊇)
        let oracle = {
            let fs = sel.fsets();
            let second = FinitePoset::from_leq(fs.len(), |i, j| fs[j].is_subset(fs[i])).unwrap();
            (0..fs.len()).all(|i| {
                let union = second.up(i).iter().fold(Subset::EMPTY, |acc, k| acc | fs[k]);
                sel.contains(union)
            })
        };
        assert_eq!(sel.is_union_complete().unwrap(), oracle);
        assert!(FilterSelection::explicit(&d, &[set(&d, &["a"])], SelectionKind::Principal).is_err());
        assert_eq!(
            FilterSelection::explicit(&d, &[], SelectionKind::Explicit).unwrap_err(),
            Error::ExplicitRecursion
        );
    }

    #[test]
    fn fmap_examples() {
        let c2 = Arc::new(FinitePoset::chain(2));
        let c3 = Arc::new(FinitePoset::chain(3));
        let s2 = FilterSelection::new(&c2, SelectionKind::Principal).unwrap();
        let s3 = FilterSelection::new(&c3, SelectionKind::Principal).unwrap();
        let incl = MonotoneMap::new(c2.clone(), c3.clone(), vec![0, 1]).unwrap();
        assert_eq!(
            fmap(&s2, &s3, &incl, Subset::singleton(1)).unwrap(),
            [1, 2].into_iter().collect()
        );
        let id = MonotoneMap::new(c3.clone(), c3.clone(), vec![0, 1, 2]).unwrap();
        for &f in s3.fsets() {
            assert_eq!(fmap(&s3, &s3, &id, f).unwrap(), f);
        }
        let top = MonotoneMap::new(c3.clone(), c3.clone(), vec![2, 2, 2]).unwrap();
        assert_eq!(fmap(&s3, &s3, &top, c3.all()).unwrap(), Subset::singleton(2));
        assert_eq!(
            fmap(&s3, &s3, &id, Subset::singleton(0)),
            Err(Error::NotFSet(Subset::singleton(0)))
        );
    }
}
