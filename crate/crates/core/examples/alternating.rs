//! Iterated differences of rational-valued maps on the diamond. The maxitive
//! map and the additive one are alternating; the supermodular one is not.

use std::sync::Arc;

use maxilat::maxitive::RationalConeMap;
use maxilat::FinitePoset;

fn main() -> maxilat::Result<()> {
    let e = Arc::new(FinitePoset::diamond());
    for (name, values) in [
        ("max", [0, 1, 2, 2]),
        ("sum", [0, 1, 1, 2]),
        ("supermodular", [0, 1, 1, 3]),
    ] {
        let v = RationalConeMap::from_integers(e.clone(), &values)?;
        print!("{name:<13} maxitive={:<5}", v.is_maxitive()?);
        match v.alternating_witness(4) {
            None => println!(" alternating to depth 4"),
            Some(w) => {
                let gs: Vec<String> = w.gs.iter().map(|&g| e.label(g)).collect();
                println!(
                    " fails at g={}, differences along [{}] = {}",
                    e.label(w.g),
                    gs.join(","),
                    w.difference
                );
            }
        }
    }
    Ok(())
}
