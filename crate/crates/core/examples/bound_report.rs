//! Every upper bound for a graph, next to its actual sum.
//!
//! cargo run --example bound_report

use domsum::bounds::degree_window;
use domsum::{lemma_k_bound, BoundReport, Counter, Graph};

fn main() -> domsum::Result<()> {
    let counter = Counter::default();
    for (name, g) in [
        ("C5", Graph::cycle(5)?),
        ("K_{5,5}", Graph::complete_bipartite(5, 5)?),
        ("K_{1,9}", Graph::star(10)?),
    ] {
        let r = BoundReport::with_actual(&g, &counter)?;
        let (lo, hi) = degree_window(r.n);
        println!(
            "{name:<8} n={:<2} actual {:>5}  best lemma {:>5}  order-wide {:>5}  conjectured max {:>5}  window [{lo},{hi}] {}",
            r.n,
            r.actual_sum.unwrap_or_default(),
            r.best_lemma_bound,
            r.theorem1_bound,
            r.conjecture_value,
            if r.degree_window_ok { "ok" } else { "violated" }
        );
    }

    let n = 12;
    let row: Vec<String> = (0..n).map(|k| lemma_k_bound(n, k).map(|b| b.to_string())).collect::<Result<_, _>>()?;
    println!("per-degree bounds at n={n}: {}", row.join(" "));
    Ok(())
}
