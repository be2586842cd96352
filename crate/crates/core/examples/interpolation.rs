//! Counts how many labeled posets are continuous under each selection, and
//! confirms that every one of them interpolates.

use maxilat::enumerate::posets_up_to;
use maxilat::{FilterSelection, SelectionKind};

fn main() -> maxilat::Result<()> {
    let n = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    let posets = posets_up_to(n, false)?;
    for kind in SelectionKind::BUILT_IN {
        let (mut continuous, mut interpolating) = (0, 0);
        for p in &posets {
            let sel = FilterSelection::new(p, kind)?;
            if !sel.is_union_complete()? {
                continue;
            }
            let report = sel.continuity_report();
            continuous += usize::from(report.is_continuous);
            interpolating += usize::from(report.is_continuous && report.has_interpolation);
        }
        println!(
            "{:<9} {} posets on ≤{n} points, {continuous} continuous, {interpolating} of those interpolate",
            kind.name(),
            posets.len()
        );
    }
    Ok(())
}
