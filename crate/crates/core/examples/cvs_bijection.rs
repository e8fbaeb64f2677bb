//! Encode a small well-labeled tree as a quadrangulation, then check the
//! bijection by enumeration for small sizes.
//!
//!     cargo run --release --example cvs_bijection

use quadmap::cvs::{encode, distance_upper_bound, CornerSequence};
use quadmap::runner::enumeration_oracle;
use quadmap::tree::{LabelVariant, LabeledTree, PlaneTree};

fn main() -> quadmap::Result<()> {
    let parents = [None, Some(0), Some(1), Some(2), Some(3), Some(2), Some(1), Some(6)];
    let tree = PlaneTree::from_parents(&parents)?;
    let t = LabeledTree::new(tree, vec![1, 2, 3, 2, 1, 3, 1, 2], LabelVariant::WellLabeled)?;

    let corners = CornerSequence::of(&t);
    println!("corner labels: {:?}", corners.labels);
    println!("successors:    {:?}", corners.successors());

    let q = encode(&t)?;
    println!("edges (vertex {} is the extra vertex):", t.tree().n_vertices());
    for (a, b) in q.edges() {
        println!("  {a} - {b}");
    }
    println!("V = {}, E = {}, F = {:?}", q.n_vertices(), q.n_edges(), q.faces());
    let d = q.bfs_distances(4);
    println!("d(4, 7) = {} <= bound {}", d[7], distance_upper_bound(&t, 4, 7)?);

    for n in 1..=4 {
        let row = enumeration_oracle(n)?;
        println!(
            "n = {n}: {} trees, {} distinct maps (expected {}), {} pairs checked against the bound",
            row.trees, row.distinct_maps, row.expected, row.bound_pairs
        );
    }
    Ok(())
}
