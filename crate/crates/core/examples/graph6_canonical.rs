//! graph6 interchange and canonical labelling.
//!
//! cargo run --example graph6_canonical

use domsum::canon::are_isomorphic;
use domsum::{canonicalize, parse_graph6, write_graph6, Graph};

fn main() -> domsum::Result<()> {
    let petersen = Graph::from_edge_list(
        10,
        &[
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
        ],
    )?;
    let text = write_graph6(&petersen);
    println!("Petersen graph6: {text}");
    assert_eq!(parse_graph6(&text)?, petersen);

    let c = canonicalize(&petersen);
    println!("canonical graph6: {}", write_graph6(&c.graph));
    println!("automorphisms: {}", c.automorphism_count().unwrap_or_default());

    let shuffled = petersen.permuted(&[3, 7, 1, 9, 0, 5, 2, 8, 6, 4]);
    println!("relabelled copy isomorphic: {}", are_isomorphic(&petersen, &shuffled));
    println!("C5 is self-complementary: {}", are_isomorphic(&Graph::cycle(5)?, &Graph::cycle(5)?.complement()));
    Ok(())
}
