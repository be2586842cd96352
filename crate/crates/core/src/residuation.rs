//! Residuated maps, their adjoints, and the residual `r ← s` in a lattice.
//!
//! `v: E → L` is residuated on `Ē/E` when every sublevel set
//! `I_t = {g ∈ E : v(g) <= t}` has the form `↓a ∩ E` for some `a ∈ Ē`.
//!
//! The residual follows the dual orientation used throughout the crate:
//! `r ← s` is the least `t` with `s <= r ∨ t`, so a "frame" here is what is
//! usually called a co-frame.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::maxitive::MonotoneMap;
use crate::poset::{FinitePoset, OrderExtension};
use crate::subset::Subset;

/// Upper adjoint `w: L → Ē` of a residuated map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Adjoint {
    /// `w(t)` as an element of `Ē`, indexed by `t ∈ L`.
    pub w: Vec<usize>,
}

impl Adjoint {
    pub fn value(&self, t: usize) -> usize {
        self.w[t]
    }

    /// `v(g) <= t ⟺ g <= w(t)` for every `g ∈ E` and `t ∈ L`.
    pub fn is_galois_for(&self, v: &MonotoneMap, ext: &OrderExtension) -> bool {
        let (l, c) = (v.target(), ext.complete());
        (0..v.source().len()).all(|g| (0..l.len()).all(|t| l.leq(v.value(g), t) == c.leq(ext.embed(g), self.w[t])))
    }
}

/// `I_t = {g ∈ E : v(g) <= t}`.
pub fn sublevel(v: &MonotoneMap, t: usize) -> Subset {
    let l = v.target();
    (0..v.source().len()).filter(|&g| l.leq(v.value(g), t)).collect()
}

/// Whether `v` sends the supremum of every nonempty family of `E` that has
/// one to the supremum of the images.
///
/// Families with supremum `g` live inside `↓g`, so each `↓g` is searched on
/// its own. The cost is exponential in the largest `|↓g|`.
pub fn is_completely_maxitive(v: &MonotoneMap) -> bool {
    completely_maxitive_witness(v).is_none()
}

/// A nonempty family breaking complete maxitivity, if any.
pub fn completely_maxitive_witness(v: &MonotoneMap) -> Option<Subset> {
    let (e, l) = (v.source(), v.target());
    let mut found: Option<Subset> = None;
    for g in 0..e.len() {
        for s in e.down(g).subsets() {
            if s.is_empty() || e.lub(s) != Some(g) {
                continue;
            }
            let image: Subset = s.iter().map(|h| v.value(h)).collect();
            if l.lub(image) != Some(v.value(g)) {
                let better = found.is_none_or(|f| (s.len(), s) < (f.len(), f));
                if better {
                    found = Some(s);
                }
            }
        }
    }
    found
}

/// Whether `v` preserves the supremum of every family of `E` that has one,
/// the empty family included: when `E` has a bottom, `v` must send it to
/// the bottom of `L`.
pub fn is_sup_map(v: &MonotoneMap) -> bool {
    sup_map_witness(v).is_none()
}

/// A family, possibly empty, whose supremum `v` does not preserve.
pub fn sup_map_witness(v: &MonotoneMap) -> Option<Subset> {
    let (e, l) = (v.source(), v.target());
    match e.bottom() {
        Some(b) if l.lub(Subset::EMPTY) != Some(v.value(b)) => Some(Subset::EMPTY),
        _ => completely_maxitive_witness(v),
    }
}

fn check_same_base(v: &MonotoneMap, ext: &OrderExtension) {
    assert!(
        v.source().same_order(ext.base()),
        "map source and extension base differ"
    );
}

/// The first `t` whose sublevel set is not of the form `↓a ∩ E`.
pub fn residuation_witness(v: &MonotoneMap, ext: &OrderExtension) -> Option<usize> {
    check_same_base(v, ext);
    (0..v.target().len()).find(|&t| ext.principal_witness(sublevel(v, t)).is_none())
}

/// Every `I_t` is a principal ideal of `Ē/E`.
///
/// Panics if `v` and `ext` are over different posets.
pub fn is_residuated(v: &MonotoneMap, ext: &OrderExtension) -> bool {
    residuation_witness(v, ext).is_none()
}

/// `w(t) = ⋁_Ē I_t`, with `⋁∅` the bottom of `Ē`.
pub fn adjoint_of(v: &MonotoneMap, ext: &OrderExtension) -> Result<Adjoint> {
    if !v.source().same_order(ext.base()) {
        return Err(Error::PosetMismatch);
    }
    let c = ext.complete();
    let mut w = Vec::with_capacity(v.target().len());
    for t in 0..v.target().len() {
        let i = sublevel(v, t);
        let a = c.lub(ext.push(i)).expect("complete lattice");
        if ext.pull(c.down(a)) != i {
            return Err(Error::NotResiduated);
        }
        w.push(a);
    }
    Ok(Adjoint { w })
}

/// Whether `x ∧ ⋁I = ⋁(↓x ∩ I)` in `Ē` for every ideal `I` of `E` and
/// every `x ∈ Ē`.
///
/// This is meet-continuity of `Ē` taken over ideals of the base rather than
/// ideals of `Ē` itself. Every finite lattice is meet-continuous, but this
/// relative form can fail.
pub fn is_meet_continuous_over_base(ext: &OrderExtension) -> bool {
    let c = ext.complete();
    ext.base().ideals().into_iter().all(|i| {
        let pushed = ext.push(i);
        let s = c.lub(pushed).expect("complete lattice");
        (0..c.len()).all(|x| c.meet(x, s) == c.lub(c.down(x) & pushed))
    })
}

/// Both directions of the comparison between residuated and completely
/// maxitive maps, evaluated on one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResiduationVerdict {
    pub residuated: bool,
    /// Over nonempty families.
    pub completely_maxitive: bool,
    /// Over all families, the empty one included.
    pub sup_map: bool,
    /// Intrinsic meet-continuity of `Ē`.
    pub meet_continuous: bool,
    /// Meet-continuity of `Ē` over the ideals of `E`.
    pub meet_continuous_over_base: bool,
    pub e_complete: bool,
    /// `residuated ⇒ sup_map`.
    pub forward_ok: bool,
    /// Whether `Ē` is meet-continuous or `E` is complete.
    pub converse_applicable: bool,
    /// `sup_map ⇒ residuated`; `None` when not applicable.
    pub converse_ok: Option<bool>,
    /// A family, possibly empty, whose supremum is not preserved.
    pub family_witness: Option<Subset>,
    /// A level `t` whose sublevel set is not principal.
    pub level_witness: Option<usize>,
}

pub fn residuation_verdict(v: &MonotoneMap, ext: &OrderExtension) -> ResiduationVerdict {
    let level_witness = residuation_witness(v, ext);
    let family_witness = sup_map_witness(v);
    let residuated = level_witness.is_none();
    let sup_map = family_witness.is_none();
    let completely_maxitive = is_completely_maxitive(v);
    let meet_continuous = ext.complete().classify().is_meet_continuous;
    let e_complete = ext.base().is_complete_lattice();
    let converse_applicable = meet_continuous || e_complete;
    ResiduationVerdict {
        residuated,
        completely_maxitive,
        sup_map,
        meet_continuous,
        meet_continuous_over_base: is_meet_continuous_over_base(ext),
        e_complete,
        forward_ok: !residuated || sup_map,
        converse_applicable,
        converse_ok: converse_applicable.then_some(!sup_map || residuated),
        family_witness,
        level_witness,
    }
}

/// `F_{r,s} = {t ∈ L : s <= r ∨ t}`; pairs without a join are left out.
pub fn residual_candidates(l: &FinitePoset, r: usize, s: usize) -> Subset {
    (0..l.len())
        .filter(|&t| l.join(r, t).is_some_and(|j| l.leq(s, j)))
        .collect()
}

/// The least `t` with `s <= r ∨ t`, if there is one. Works on any poset;
/// on M3 or N5 some pairs have none.
pub fn least_residual(l: &FinitePoset, r: usize, s: usize) -> Option<usize> {
    l.minimum(residual_candidates(l, r, s))
}

/// `r ← s`, the least `t ∈ L` with `s <= r ∨ t`, on a distributive lattice.
pub fn heyting_arrow(l: &FinitePoset, r: usize, s: usize) -> Result<usize> {
    l.check_element(r)?;
    l.check_element(s)?;
    let profile = l.classify();
    if !profile.is_lattice {
        return Err(Error::NotLattice("L"));
    }
    if !profile.is_distributive {
        return Err(Error::NotDistributive("L"));
    }
    let t = l
        .glb(residual_candidates(l, r, s))
        .expect("finite lattice has all meets");
    Ok(t)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::enumerate::posets_up_to;
    use crate::maxitive::monotone_maps;
    use crate::poset::dm_completion;

    fn identity_ext(p: FinitePoset) -> OrderExtension {
        let p = Arc::new(p);
        OrderExtension::new(p.clone(), p.clone(), (0..p.len()).collect()).unwrap()
    }

    #[test]
    fn identity_on_chain() {
        let ext = identity_ext(FinitePoset::chain(3));
        let v = MonotoneMap::identity(ext.base_arc().clone());
        assert!(is_residuated(&v, &ext));
        assert_eq!(adjoint_of(&v, &ext).unwrap().w, vec![0, 1, 2]);
    }

    #[test]
    fn constant_bottom_adjoint_is_top() {
        let e = Arc::new(FinitePoset::n5());
        let ext = dm_completion(&e);
        let l = Arc::new(FinitePoset::chain(3));
        let v = MonotoneMap::constant(e, l, 0).unwrap();
        let w = adjoint_of(&v, &ext).unwrap();
        let top = ext.complete().top().unwrap();
        assert!(w.w.iter().all(|&a| a == top));
        assert!(w.is_galois_for(&v, &ext));
    }

    #[test]
    fn seven_element_map_is_not_residuated() {
        let e = Arc::new(FinitePoset::seven_element());
        let z = e.index_of("z").unwrap();
        let values = (0..7).map(|g| usize::from(g == z)).collect();
        let v = MonotoneMap::new(e.clone(), Arc::new(FinitePoset::chain(2)), values).unwrap();
        let ext = dm_completion(&e);
        assert!(!is_completely_maxitive(&v));
        assert_eq!(e.format_subset(completely_maxitive_witness(&v).unwrap()), "{a,b,c}");
        assert!(!is_residuated(&v, &ext));
        assert_eq!(adjoint_of(&v, &ext).unwrap_err(), Error::NotResiduated);
    }

    #[test]
    fn completely_maxitive_matches_maxitive() {
        let l = FinitePoset::chain(2);
        let l3 = FinitePoset::diamond();
        for e in posets_up_to(4, true).unwrap() {
            let e = Arc::new(e);
            for target in [&l, &l3] {
                let t = Arc::new(target.clone());
                for values in monotone_maps(&e, target) {
                    let v = MonotoneMap::new(e.clone(), t.clone(), values).unwrap();
                    assert_eq!(is_completely_maxitive(&v), v.is_maxitive().unwrap());
                }
            }
        }
    }

    #[test]
    fn adjoint_recovers_sublevel_sets() {
        for e in posets_up_to(4, true).unwrap() {
            let e = Arc::new(e);
            let ext = dm_completion(&e);
            let l = Arc::new(FinitePoset::chain(3));
            for values in monotone_maps(&e, &l) {
                let v = MonotoneMap::new(e.clone(), l.clone(), values).unwrap();
                match adjoint_of(&v, &ext) {
                    Ok(w) => {
                        assert!(w.is_galois_for(&v, &ext));
                        for t in 0..l.len() {
                            assert_eq!(ext.pull(ext.complete().down(w.value(t))), sublevel(&v, t));
                        }
                        for s in 0..l.len() {
                            for t in l.up(s) {
                                assert!(ext.complete().leq(w.value(s), w.value(t)));
                            }
                        }
                    }
                    Err(err) => {
                        assert_eq!(err, Error::NotResiduated);
                        assert!(!is_residuated(&v, &ext));
                    }
                }
            }
        }
    }

    #[test]
    fn antichain_in_m3() {
        // M3 is meet-continuous, every map on an antichain is completely
        // maxitive, and yet {a, b} is not ↓x ∩ E for any x
        let e = Arc::new(FinitePoset::antichain(3));
        let ext = dm_completion(&e);
        let v = MonotoneMap::new(e, Arc::new(FinitePoset::chain(2)), vec![0, 0, 1]).unwrap();
        let verdict = residuation_verdict(&v, &ext);
        assert!(verdict.meet_continuous);
        assert!(!verdict.meet_continuous_over_base);
        assert!(verdict.completely_maxitive);
        assert!(verdict.sup_map);
        assert!(!verdict.residuated);
        assert_eq!(verdict.converse_ok, Some(false));
        assert_eq!(verdict.level_witness, Some(0));
    }

    #[test]
    fn empty_family_matters_on_a_point() {
        // on a one-point E every map is completely maxitive over nonempty
        // families, but only v = ⊥ keeps the empty supremum and is residuated
        let e = Arc::new(FinitePoset::chain(1));
        let ext = dm_completion(&e);
        let l = Arc::new(FinitePoset::chain(2));
        for t in 0..2 {
            let v = MonotoneMap::constant(e.clone(), l.clone(), t).unwrap();
            assert!(is_completely_maxitive(&v));
            assert_eq!(is_sup_map(&v), t == 0);
            assert_eq!(is_residuated(&v, &ext), t == 0);
        }
    }

    #[test]
    fn chain_residuals() {
        let c = FinitePoset::chain(3);
        assert_eq!(heyting_arrow(&c, 2, 1).unwrap(), 0);
        assert_eq!(heyting_arrow(&c, 0, 2).unwrap(), 2);
        for r in 0..3 {
            assert_eq!(heyting_arrow(&c, r, r).unwrap(), 0);
        }
    }

    #[test]
    fn residual_on_diamond() {
        let d = FinitePoset::diamond();
        let (a, b, top) = (1, 2, 3);
        assert_eq!(heyting_arrow(&d, a, top).unwrap(), b);
        assert_eq!(heyting_arrow(&d, a, b).unwrap(), b);
        assert_eq!(heyting_arrow(&d, top, b).unwrap(), 0);
    }

    #[test]
    fn non_distributive_lattices() {
        for l in [FinitePoset::m3(), FinitePoset::n5()] {
            assert_eq!(heyting_arrow(&l, 0, 0).unwrap_err(), Error::NotDistributive("L"));
            let missing = (0..l.len())
                .flat_map(|r| (0..l.len()).map(move |s| (r, s)))
                .any(|(r, s)| least_residual(&l, r, s).is_none());
            assert!(missing);
        }
        assert_eq!(
            heyting_arrow(&FinitePoset::antichain(2), 0, 1).unwrap_err(),
            Error::NotLattice("L")
        );
    }
}
