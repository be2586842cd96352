//! The way-above relation under each built-in selection, on a few small
//! posets, with the continuity verdicts that follow from it.

use maxilat::io::named_poset;
use maxilat::{FilterSelection, SelectionKind};

fn main() -> maxilat::Result<()> {
    for name in ["chain:3", "diamond", "m3", "n5", "seven"] {
        let p = named_poset(name).unwrap();
        println!("{name}");
        for kind in SelectionKind::BUILT_IN {
            let sel = FilterSelection::new(&p, kind)?;
            let report = sel.continuity_report();
            let rel = sel.way_above();
            let pairs: Vec<String> = (0..p.len())
                .flat_map(|x| {
                    rel.way_above_set(x)
                        .iter()
                        .filter(move |&y| y != x)
                        .map(move |y| (x, y))
                })
                .map(|(x, y)| format!("{}≫{}", p.label(y), p.label(x)))
                .collect();
            println!(
                "  {:<9} union-complete={} continuous={} interpolation={}  strict ≫: {}",
                kind.name(),
                sel.is_union_complete()?,
                report.is_continuous,
                report.has_interpolation,
                if pairs.is_empty() {
                    "none".into()
                } else {
                    pairs.join(" ")
                }
            );
        }
    }
    Ok(())
}
