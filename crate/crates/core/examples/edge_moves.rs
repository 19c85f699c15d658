//! Moving single edges between a graph and its complement.
//!
//! cargo run --example edge_moves

use domsum::{edge_move_analysis, Counter, Graph};

fn main() -> domsum::Result<()> {
    let counter = Counter::default();
    for (name, g) in [
        ("C5", Graph::cycle(5)?),
        ("K_{2,3}", Graph::complete_bipartite(2, 3)?),
        ("P4", Graph::path(4)?),
    ] {
        let r = edge_move_analysis(&g, &counter)?;
        let sums: Vec<String> = r.moves.iter().map(|m| m.sum.to_string()).collect();
        println!(
            "{name:<8} base {:>3}  moves [{}]  improving move exists: {}",
            r.base_sum,
            sums.join(" "),
            r.any_improving
        );
    }
    Ok(())
}
