//! Sample a uniform rooted quadrangulation and look at distances from the
//! pointed vertex.
//!
//!     cargo run --release --example sample_quadrangulation -- [faces] [seed]

use quadmap::cvs::{sample_quadrangulation, verify_distance_identity};
use quadmap::rng;

fn main() -> quadmap::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(10_000, |s| s.parse().expect("faces"));
    let seed: u64 = args.next().map_or(1, |s| s.parse().expect("seed"));

    let q = sample_quadrangulation(n, &mut rng::stream(seed, rng::tag::TREE, 0))?;
    let map = &q.map;
    println!(
        "V = {}, E = {}, F = {:?}, face degrees all 4: {}",
        map.n_vertices(),
        map.n_edges(),
        map.faces(),
        map.face_degrees().iter().all(|&d| d == 4)
    );

    let pointed = map.pointed().expect("encoded maps are pointed");
    let profile = map.distance_profile(pointed);
    println!("distances from the pointed vertex:");
    for (d, count) in profile.counts.iter().enumerate() {
        println!("{d:>4} {count:>7} {}", "#".repeat((count * 60 / profile.counts.iter().max().unwrap()).max(1)));
    }
    println!("labels match distances: {}", verify_distance_identity(&q.tree, map)?.holds());
    Ok(())
}
