//! Closed-form sums for every complete multipartite graph of one order.
//!
//! cargo run --example multipartite -- 12

use domsum::{multipartite_scan, multipartite_sum, PartitionSpec};

fn main() -> domsum::Result<()> {
    let n: usize = std::env::args().nth(1).map_or(Ok(10), |a| a.parse()).expect("order");
    let scan = multipartite_scan(n)?;
    println!(
        "n={n}: {} partitions, balanced {} sums to {}, strictly best: {}",
        scan.partitions_checked, scan.balanced, scan.balanced_sum, scan.dominance_holds
    );
    for p in &scan.top {
        println!("  {:<20} {}", p.parts.to_string(), p.sum);
    }
    for v in &scan.violations {
        println!("  tie or better: {} {}", v.parts, v.sum);
    }

    let big = PartitionSpec::new(vec![32, 32])?;
    println!("K_{{32,32}} sums to {}", multipartite_sum(&big).sum);
    Ok(())
}
