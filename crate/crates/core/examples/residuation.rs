//! Residuation against complete maxitivity. The identity on a chain has an
//! upper adjoint; a map on a three-element antichain inside M3 preserves
//! every existing supremum yet has none.

use std::sync::Arc;

use maxilat::residuation::{adjoint_of, residuation_verdict};
use maxilat::{dm_completion, FinitePoset, MonotoneMap, OrderExtension};

fn report(name: &str, v: &MonotoneMap, ext: &OrderExtension) {
    let verdict = residuation_verdict(v, ext);
    println!(
        "{name}: residuated={} sup-map={} meet-continuous over ideals of E={}",
        verdict.residuated, verdict.sup_map, verdict.meet_continuous_over_base
    );
    if let Ok(w) = adjoint_of(v, ext) {
        let c = ext.complete();
        let table: Vec<String> = (0..v.target().len())
            .map(|t| format!("{}↦{}", t, c.label(w.value(t))))
            .collect();
        println!("  adjoint {}", table.join(" "));
    }
}

fn main() -> maxilat::Result<()> {
    let chain = Arc::new(FinitePoset::chain(3));
    let id = MonotoneMap::identity(chain.clone());
    report("identity on 3-chain", &id, &dm_completion(&chain));

    let a = Arc::new(FinitePoset::antichain(3));
    let m3 = Arc::new(FinitePoset::m3());
    let ext = OrderExtension::new(a.clone(), m3, vec![1, 2, 3])?;
    let v = MonotoneMap::new(a, Arc::new(FinitePoset::chain(2)), vec![0, 0, 1])?;
    report("antichain in M3", &v, &ext);
    Ok(())
}
