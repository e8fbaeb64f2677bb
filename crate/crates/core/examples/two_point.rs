//! Rescaled two-point distances in quadrangulations against distances
//! between uniform points of the discretized Brownian map.
//!
//!     cargo run --release --example two_point -- [faces] [m] [samples]

use quadmap::cvs::sample_quadrangulation;
use quadmap::rng::{self, tag};
use quadmap::runner::replica_snake;
use quadmap::stats;
use rand::Rng;

fn main() -> quadmap::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(5000, |s| s.parse().expect("faces"));
    let m: usize = args.next().map_or(1000, |s| s.parse().expect("m"));
    let samples: usize = args.next().map_or(200, |s| s.parse().expect("samples"));

    let mut discrete = Vec::new();
    let mut continuum = Vec::new();
    for k in 0..samples {
        let q = sample_quadrangulation(n, &mut rng::stream(21, tag::TREE, k as u64))?;
        discrete.push(q.map.two_point_sample(&mut rng::stream(21, tag::MAP_POINTS, k as u64))?.rescaled);
        let s = replica_snake(22, m, k)?;
        let mut r = rng::stream(22, tag::SNAKE_POINTS, k as u64);
        continuum.push(s.distance(r.random_range(0..m), r.random_range(0..m)));
    }
    println!("discrete  mean {:.4}", stats::mean(&discrete));
    println!("continuum mean {:.4}", stats::mean(&continuum));
    println!("KS distance {:.4}", stats::ks_two_sample(&discrete, &continuum));
    Ok(())
}
