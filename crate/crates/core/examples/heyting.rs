//! The arrow `r ← s`, the least `t` with `s ≤ r ∨ t`, tabulated on the
//! diamond (rows `r`, columns `s`) and refused on M3.

use maxilat::residuation::heyting_arrow;
use maxilat::FinitePoset;

fn main() {
    let d = FinitePoset::diamond();
    print!("  ←  ");
    for s in 0..d.len() {
        print!("{:>3}", d.label(s));
    }
    println!();
    for r in 0..d.len() {
        print!("{:>3}  ", d.label(r));
        for s in 0..d.len() {
            print!("{:>3}", d.label(heyting_arrow(&d, r, s).unwrap()));
        }
        println!();
    }
    match heyting_arrow(&FinitePoset::m3(), 1, 4) {
        Ok(t) => println!("M3: a ← ⊤ = {t}"),
        Err(e) => println!("M3: {e}"),
    }
}
