//! Isomorphism-free generation, checked with the orbit-counting identity.
//!
//! cargo run --release --example enumerate_graphs -- 8

use domsum::enumerate::nonisomorphic_graphs;
use domsum::{canonicalize, labeled_stream};

fn main() -> domsum::Result<()> {
    let max: usize = std::env::args().nth(1).map_or(Ok(7), |a| a.parse()).expect("order");
    for n in 1..=max {
        let graphs = nonisomorphic_graphs(n)?;
        let factorial: u128 = (1..=n as u128).product();
        let labelled: u128 = graphs
            .iter()
            .map(|g| factorial / canonicalize(g).automorphism_count().expect("n <= 34"))
            .sum();
        println!(
            "n={n:<2} classes {:>8}  labelled graphs recovered {:>12}  expected {:>12}",
            graphs.len(),
            labelled,
            1u128 << (n * (n - 1) / 2)
        );
    }
    let paired = labeled_stream(5, true)?.count();
    println!("labelled graphs on 5 vertices, one per complement pair: {paired}");
    Ok(())
}
