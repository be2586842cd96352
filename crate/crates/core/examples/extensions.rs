//! Extending a maxitive map on `{a, b < z}` into its completion, which adds
//! a bottom, from above (`v*`) and from below (`v₍*₎`). Since `a ∧ b` is
//! the new bottom, neither atom is in `E₍*₎`.

use std::sync::Arc;

use maxilat::maxitive::{e_lower_star, extend_lower_star, extend_star, maxitive_extensions};
use maxilat::{dm_completion, FilterSelection, FinitePoset, MonotoneMap, SelectionKind};

fn main() -> maxilat::Result<()> {
    let names = ["a", "b", "z"].map(String::from).to_vec();
    let e = Arc::new(FinitePoset::from_labeled_relation(names, &[(0, 2), (1, 2)])?);
    let l = Arc::new(FinitePoset::chain(3));
    let v = MonotoneMap::new(e.clone(), l.clone(), vec![1, 2, 2])?;
    let ext = dm_completion(&e);
    let c = ext.complete();

    let sel_e = FilterSelection::new(&e, SelectionKind::Filtered)?;
    let sel_l = FilterSelection::new(&l, SelectionKind::Filtered)?;
    let star = extend_star(&v, &ext, &sel_e, &sel_l)?;
    println!("v* on {}: {:?}", c.format_subset(star.domain), star.map.values());
    let others = maxitive_extensions(&v, &ext, &star)?;
    let dominates = others
        .iter()
        .all(|w| w.iter().zip(star.map.values()).all(|(&a, &b)| l.leq(a, b)));
    println!("  above all {} maxitive extensions: {dominates}", others.len());

    println!("E₍*₎ = {}", c.format_subset(e_lower_star(&ext)));
    let lower = extend_lower_star(&v, &ext)?;
    println!("v₍*₎ = {:?}", lower.map.values());
    let others = maxitive_extensions(&v, &ext, &lower)?;
    let dominated = others
        .iter()
        .all(|w| w.iter().zip(lower.map.values()).all(|(&a, &b)| l.leq(b, a)));
    println!("  below all {} maxitive extensions: {dominated}", others.len());
    Ok(())
}
