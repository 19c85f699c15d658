//! Dominating-set counts for a few named graphs and their complements.
//!
//! cargo run --example count_sums

use domsum::{count_dominating_brute, count_dominating_ie, summarize, Graph};

fn main() -> domsum::Result<()> {
    let graphs = [
        ("C5", Graph::cycle(5)?),
        ("K_{1,3}", Graph::star(4)?),
        ("K_{2,3}", Graph::complete_bipartite(2, 3)?),
        ("P6", Graph::path(6)?),
        ("K_{10,10}", Graph::complete_bipartite(10, 10)?),
    ];
    println!("{:<10} {:>3} {:>10} {:>10} {:>12} {:>12}", "graph", "n", "count_g", "count_gbar", "sum", "upsilon");
    for (name, g) in &graphs {
        let s = summarize(g)?;
        println!(
            "{name:<10} {:>3} {:>10} {:>10} {:>12} {:>12}",
            s.n, s.count_g, s.count_gbar, s.sum, s.upsilon
        );
        assert_eq!(s.sum, (1u128 << s.n) + s.upsilon);
    }

    let g = Graph::cycle(7)?;
    println!(
        "C7 by inclusion-exclusion {} and by brute force {}",
        count_dominating_ie(&g)?,
        count_dominating_brute(&g)?
    );
    Ok(())
}
