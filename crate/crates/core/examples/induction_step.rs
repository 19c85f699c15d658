//! Adding one vertex to a graph in every possible way.
//!
//! cargo run --example induction_step

use domsum::{induction_gap_experiment, write_graph6, Counter, Graph};

fn main() -> domsum::Result<()> {
    let counter = Counter::default();
    for (name, g) in [
        ("K_{1,3}", Graph::star(4)?),
        ("K_{2,2}", Graph::complete_bipartite(2, 2)?),
        ("C5", Graph::cycle(5)?),
        ("P6", Graph::path(6)?),
    ] {
        let r = induction_gap_experiment(&g, &counter)?;
        let best = g.with_vertex(r.best_attachment_mask)?;
        println!(
            "{name:<8} balanced step {:>3}  best step {:>3} via {} ({} attachments)  beats the balanced step: {}",
            r.h_increment,
            r.best_increment,
            write_graph6(&best),
            r.attachments_scanned,
            r.violates
        );
    }
    Ok(())
}
