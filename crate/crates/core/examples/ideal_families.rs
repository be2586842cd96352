//! A maxitive map on the diamond, its sublevel ideals `I_t`, and the map
//! rebuilt from them as `v(g) = ⋀{t : g ∈ I_t}`.

use std::sync::Arc;

use maxilat::maxitive::{from_ideal_family, ideal_family_of};
use maxilat::{FilterSelection, FinitePoset, MonotoneMap, SelectionKind};

fn main() -> maxilat::Result<()> {
    let e = Arc::new(FinitePoset::diamond());
    let l = Arc::new(FinitePoset::chain(3));
    let v = MonotoneMap::new(e.clone(), l.clone(), vec![0, 1, 2, 2])?;

    let fam = ideal_family_of(&v)?;
    for t in 0..l.len() {
        println!("I_{} = {}", l.label(t), e.format_subset(fam.ideal(t)));
    }
    let sel = FilterSelection::new(&l, SelectionKind::Filtered)?;
    println!("right-continuous: {}", fam.is_right_continuous(&sel.way_above()));
    let back = from_ideal_family(&fam, &sel)?;
    println!("rebuilt {:?}, original {:?}", back.values(), v.values());
    Ok(())
}
