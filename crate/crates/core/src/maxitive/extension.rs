//! Extending a maxitive map from `E` into the enclosing complete lattice.
//!
//! `E*` holds the points `a ∈ Ē` whose trace `↑a ∩ E` is a nonempty F-set;
//! on it `v*(a) = ⋀{v(g) : g ∈ ↑a ∩ E}` is the greatest maxitive extension.
//! `E₍*₎` holds the points whose meets with all of `E` stay in `E`; on it
//! `v₍*₎(a) = ⋁{v(g) : g ∈ ↓a ∩ E}` is the least one when `Ē` is
//! distributive.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poset::OrderExtension;
use crate::selection::FilterSelection;
use crate::subset::Subset;

use super::{monotone_maps_with, JoinFamilies, MonotoneMap};

/// A map defined on a subset of `Ē`, with that subset as its poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedMap {
    /// Members of `Ē` making up the domain.
    pub domain: Subset,
    /// Index in `Ē` of each element of the domain poset.
    pub index: Vec<usize>,
    /// The map on the domain, ordered as a subposet of `Ē`.
    pub map: MonotoneMap,
}

impl ExtendedMap {
    /// The value at a point of `Ē`, if it lies in the domain.
    pub fn value_at(&self, a: usize) -> Option<usize> {
        self.index.iter().position(|&x| x == a).map(|i| self.map.value(i))
    }

    /// For each domain element, the element of `E` it is, if any.
    pub fn base_points(&self, ext: &OrderExtension) -> Vec<Option<usize>> {
        self.index.iter().map(|&a| ext.preimage(a)).collect()
    }

    /// Whether the map agrees with `v` on every point of `E` in the domain.
    pub fn restricts_to(&self, v: &MonotoneMap, ext: &OrderExtension) -> bool {
        self.base_points(ext)
            .iter()
            .enumerate()
            .all(|(i, g)| g.is_none_or(|g| self.map.value(i) == v.value(g)))
    }
}

/// `E* = {a ∈ Ē : ↑a ∩ E is a nonempty F-set of E}`.
pub fn e_star(ext: &OrderExtension, sel_e: &FilterSelection<'_>) -> Subset {
    let c = ext.complete();
    (0..c.len())
        .filter(|&a| {
            let trace = ext.pull(c.up(a));
            !trace.is_empty() && sel_e.contains(trace)
        })
        .collect()
}

/// `E₍*₎ = {a ∈ Ē : g ∧ a ∈ E for every g ∈ E}`.
pub fn e_lower_star(ext: &OrderExtension) -> Subset {
    let c = ext.complete();
    let image = ext.image();
    (0..c.len())
        .filter(|&a| {
            ext.embedding()
                .iter()
                .all(|&g| c.meet(g, a).is_some_and(|m| image.contains(m)))
        })
        .collect()
}

fn check_inputs(v: &MonotoneMap, ext: &OrderExtension) -> Result<()> {
    if !v.source().same_order(ext.base()) {
        return Err(Error::PosetMismatch);
    }
    if let Some(w) = v.maxitivity_witness()? {
        return Err(Error::NotMaxitive(w));
    }
    Ok(())
}

fn on_domain(v: &MonotoneMap, ext: &OrderExtension, domain: Subset, values: Vec<usize>) -> Result<ExtendedMap> {
    let (poset, index) = ext.complete().induced(domain);
    let map = MonotoneMap::new(Arc::new(poset), v.target_arc().clone(), values)?;
    Ok(ExtendedMap { domain, index, map })
}

/// `v*(a) = ⋀_{g ∈ ↑a ∩ E} v(g)` on `E*`. Needs `E` a join-semilattice, `L`
/// a domain under `sel_l` and `v` maxitive.
pub fn extend_star(
    v: &MonotoneMap,
    ext: &OrderExtension,
    sel_e: &FilterSelection<'_>,
    sel_l: &FilterSelection<'_>,
) -> Result<ExtendedMap> {
    check_inputs(v, ext)?;
    if !sel_e.poset().same_order(ext.base()) || !sel_l.poset().same_order(v.target()) {
        return Err(Error::PosetMismatch);
    }
    if !ext.base().is_join_semilattice() {
        return Err(Error::NotJoinSemilattice("E"));
    }
    if !sel_l.continuity_report().is_domain {
        return Err(Error::NotDomain("L"));
    }
    let (c, l) = (ext.complete(), v.target());
    let domain = e_star(ext, sel_e);
    let mut values = Vec::with_capacity(domain.len());
    for a in domain {
        let image: Subset = ext.pull(c.up(a)).iter().map(|g| v.value(g)).collect();
        let t = l
            .glb(image)
            .ok_or_else(|| Error::MissingInfimum(format!("v* at {}", c.label(a))))?;
        values.push(t);
    }
    on_domain(v, ext, domain, values)
}

/// `v₍*₎(a) = ⋁_{g ∈ ↓a ∩ E} v(g)` on `E₍*₎`. Needs `Ē` distributive and `v`
/// maxitive; a finite `L` is directed-complete.
pub fn extend_lower_star(v: &MonotoneMap, ext: &OrderExtension) -> Result<ExtendedMap> {
    check_inputs(v, ext)?;
    if !ext.complete().classify().is_distributive {
        return Err(Error::NotDistributive("Ē"));
    }
    let (c, l) = (ext.complete(), v.target());
    let domain = e_lower_star(ext);
    let mut values = Vec::with_capacity(domain.len());
    for a in domain {
        let image: Subset = ext.pull(c.down(a)).iter().map(|g| v.value(g)).collect();
        let t = l
            .lub(image)
            .ok_or_else(|| Error::MissingSupremum(format!("v₍*₎ at {}", c.label(a))))?;
        values.push(t);
    }
    on_domain(v, ext, domain, values)
}

/// Every maxitive map on the domain of `like` that agrees with `v` on the
/// points of `E` it contains.
pub fn maxitive_extensions(v: &MonotoneMap, ext: &OrderExtension, like: &ExtendedMap) -> Result<Vec<Vec<usize>>> {
    let domain = like.map.source();
    let fixed: Vec<Option<usize>> = like
        .base_points(ext)
        .into_iter()
        .map(|g| g.map(|g| v.value(g)))
        .collect();
    let fam = JoinFamilies::of(domain)?;
    Ok(monotone_maps_with(domain, v.target(), &fixed)
        .into_iter()
        .filter(|w| fam.violation(v.target(), w).is_none())
        .collect())
}

/// Whether `E ⊆ E₍*₎`, i.e. `v₍*₎` really extends `v`.
pub fn lower_star_contains_base(ext: &OrderExtension) -> bool {
    ext.image().is_subset(e_lower_star(ext))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{dm_completion, FinitePoset};
    use crate::selection::SelectionKind;

    #[test]
    fn complete_base_is_fixed() {
        let l = Arc::new(FinitePoset::chain(3));
        // diamond: ⊥ ↦ 0, a ↦ 1, b ↦ 2, ⊤ ↦ 2; chain: identity
        for (e, values) in [
            (FinitePoset::diamond(), vec![0, 1, 2, 2]),
            (FinitePoset::chain(3), vec![0, 1, 2]),
        ] {
            let ext = dm_completion(&e);
            let sel_e = FilterSelection::new(ext.base(), SelectionKind::Principal).unwrap();
            let sel_l = FilterSelection::new(&l, SelectionKind::Principal).unwrap();
            assert_eq!(e_star(&ext, &sel_e), ext.image());
            assert_eq!(e_lower_star(&ext), ext.image());
            let v = MonotoneMap::new(ext.base_arc().clone(), l.clone(), values).unwrap();
            assert!(v.is_maxitive().unwrap());
            let star = extend_star(&v, &ext, &sel_e, &sel_l).unwrap();
            assert!(star.restricts_to(&v, &ext));
            assert_eq!(star.domain, ext.image());
            let low = extend_lower_star(&v, &ext).unwrap();
            assert!(low.restricts_to(&v, &ext));
            assert_eq!(low.map.values(), star.map.values());
        }
    }

    #[test]
    fn antichain_in_its_completion() {
        let a2 = FinitePoset::antichain(2);
        let ext = dm_completion(&a2);
        for kind in [SelectionKind::Principal, SelectionKind::Filtered] {
            let sel = FilterSelection::new(ext.base(), kind).unwrap();
            assert_eq!(e_star(&ext, &sel), ext.image());
        }
        let top = ext.complete().top().unwrap();
        assert_eq!(e_lower_star(&ext), Subset::singleton(top));
        assert!(!lower_star_contains_base(&ext));
    }

    #[test]
    fn star_on_a_bowtie_completion() {
        // E: a, b < z; Ē adds ⊥ below a and b
        let e = Arc::new(
            FinitePoset::from_labeled_relation(vec!["a".into(), "b".into(), "z".into()], &[(0, 2), (1, 2)]).unwrap(),
        );
        let ext = dm_completion(&e);
        let l = Arc::new(FinitePoset::chain(2));
        let v = MonotoneMap::new(e.clone(), l.clone(), vec![0, 1, 1]).unwrap();
        let sel_e = FilterSelection::new(&e, SelectionKind::Upper).unwrap();
        let sel_l = FilterSelection::new(&l, SelectionKind::Upper).unwrap();
        let star = extend_star(&v, &ext, &sel_e, &sel_l).unwrap();
        let bottom = ext.complete().bottom().unwrap();
        assert_eq!(star.value_at(bottom), Some(0));
        let all = maxitive_extensions(&v, &ext, &star).unwrap();
        assert!(!all.is_empty());
        for w in all {
            assert!(w.iter().zip(star.map.values()).all(|(&a, &b)| l.leq(a, b)));
        }
    }

    #[test]
    fn lower_star_needs_distributive_completion() {
        let e = Arc::new(FinitePoset::antichain(3));
        let ext = dm_completion(&e);
        let l = Arc::new(FinitePoset::chain(2));
        let v = MonotoneMap::constant(e, l, 0).unwrap();
        assert_eq!(extend_lower_star(&v, &ext).unwrap_err(), Error::NotDistributive("Ē"));
    }
}
