//! The space of maxitive maps from the diamond into a 3-chain: its size,
//! the generator representation of each map, and the arrow `u ← v`.

use std::sync::Arc;

use maxilat::mspace::build_space;
use maxilat::{FilterSelection, FinitePoset, SelectionKind};

fn main() -> maxilat::Result<()> {
    let e = Arc::new(FinitePoset::diamond());
    let l = Arc::new(FinitePoset::chain(3));
    let m = build_space(e, l.clone())?;
    let rel = FilterSelection::new(&l, SelectionKind::Filtered)?.way_above();
    println!("{} maxitive maps", m.len());
    for i in 0..m.len() {
        let rep = m.representation(i, &rel)?;
        println!(
            "  {:?} from {} generators, exact={}",
            m.values(i),
            rep.generators.len(),
            rep.exact
        );
    }
    let u = m.index_of(&[0, 1, 0, 1]).unwrap();
    let v = m.index_of(&[1, 1, 2, 2]).unwrap();
    let w = m.m_arrow(u, v)?;
    println!("{:?} ← {:?} = {:?}", m.values(u), m.values(v), m.values(w));
    println!("u ∨ (u ← v) = {:?}", m.join(u, w).map(|j| m.values(j)));
    Ok(())
}
