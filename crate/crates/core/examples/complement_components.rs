//! Components of the complement of a ball that reach a given depth.
//!
//!     cargo run --release --example complement_components -- [faces] [seed]

use quadmap::cvs::sample_quadrangulation;
use quadmap::rng::{self, tag};
use quadmap::stats;
use rand::Rng;

fn main() -> quadmap::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(100_000, |s| s.parse().expect("faces"));
    let seed: u64 = args.next().map_or(1, |s| s.parse().expect("seed"));

    let q = sample_quadrangulation(n, &mut rng::stream(seed, tag::TREE, 0))?;
    let u = rng::stream(seed, tag::MAP_POINTS, 0).random_range(0..q.map.n_vertices());
    let r = (n as f64).powf(0.25).floor() as u32;
    let depths = q.map.complement_component_depths(u, r);
    println!("r = {r}: {} components outside the ball", depths.len());
    let eps: Vec<f64> = (2..=8).map(f64::from).collect();
    let counts: Vec<f64> = eps
        .iter()
        .map(|&e| depths.iter().filter(|&&d| d > r + e as u32).count() as f64)
        .collect();
    for (e, c) in eps.iter().zip(&counts) {
        println!("eps = {e}  N = {c}");
    }
    if counts.iter().all(|&c| c > 0.0) {
        println!("log-log slope {:.3}", stats::log_log_slope(&eps, &counts));
    }
    Ok(())
}
