//! Dedekind–MacNeille completions of the seven-element poset and of a
//! three-element antichain, printed as cuts.

use maxilat::{dm_completion, FinitePoset};

fn main() {
    for p in [FinitePoset::seven_element(), FinitePoset::antichain(3)] {
        let ext = dm_completion(&p);
        let c = ext.complete();
        println!("{} elements complete to {}", p.len(), c.len());
        for a in 0..c.len() {
            let below = ext.pull(c.down(a));
            let tag = ext
                .preimage(a)
                .map(|g| format!(" = {}", p.label(g)))
                .unwrap_or_default();
            println!("  cut {}{tag}", p.format_subset(below));
        }
        let covers: Vec<String> = c
            .covers()
            .iter()
            .map(|&(x, y)| format!("{}<{}", c.label(x), c.label(y)))
            .collect();
        println!("  covers {}", covers.join(" "));
    }
}
