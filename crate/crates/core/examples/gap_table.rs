//! Distance between the largest sum and the trivial cap 2^(n+1).
//!
//! cargo run --example gap_table

use std::collections::BTreeMap;

use domsum::gap_table;

fn main() -> domsum::Result<()> {
    // exhaustively verified maxima; other orders use the conjectured value
    let known: BTreeMap<usize, u128> = [(8, 452), (9, 932)].into();
    println!("{:>3} {:>24} {:>10} {:>10} {:>12} {:>12} {:>8}", "n", "max", "gap", "min gap", "lower", "upper", "ratio");
    for r in gap_table(4, 40, &known)? {
        println!(
            "{:>3} {:>24} {:>10} {:>10} {:>12.1} {:>12.1} {:>8.4}",
            r.n, r.max_sum, r.gap, r.min_gap, r.lower_scaled, r.upper_scaled, r.gap_ratio
        );
    }
    Ok(())
}
