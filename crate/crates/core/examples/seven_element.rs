//! A map on the seven-element poset that preserves every binary join yet
//! fails to be maxitive, because `z` is the join of `{a,b,c}` while no two
//! of `a, b, c` have a join.

use std::sync::Arc;

use maxilat::{FinitePoset, MonotoneMap};

fn main() -> maxilat::Result<()> {
    let e = Arc::new(FinitePoset::seven_element());
    let l = Arc::new(FinitePoset::chain(2));
    let z = e.index_of("z").unwrap();
    let values = (0..e.len()).map(|g| usize::from(g == z)).collect();
    let v = MonotoneMap::new(e.clone(), l, values)?;

    println!("pairwise maxitive: {}", v.is_pairwise_maxitive());
    match v.maxitivity_witness()? {
        Some(w) => println!("maxitive: no, v(⋁{}) = 1 but each member maps to 0", e.format_subset(w)),
        None => println!("maxitive: yes"),
    }
    Ok(())
}
