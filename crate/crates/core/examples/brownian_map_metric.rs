//! Build a discretized Brownian map and compute its metric from the
//! minimal-label point and between two uniform points.
//!
//!     cargo run --release --example brownian_map_metric -- [m] [seed]

use quadmap::brownian_map::{build_snake, sample_excursion};
use quadmap::rng::{self, tag};
use rand::Rng;

fn main() -> quadmap::Result<()> {
    let mut args = std::env::args().skip(1);
    let m: usize = args.next().map_or(3000, |s| s.parse().expect("m"));
    let seed: u64 = args.next().map_or(1, |s| s.parse().expect("seed"));

    let x = sample_excursion(m, &mut rng::stream(seed, tag::EXCURSION, 0))?;
    let s = build_snake(x, &mut rng::stream(seed, tag::SNAKE, 0));
    let classes = s.representatives().iter().enumerate().filter(|&(i, &r)| i == r).count();
    println!("m = {m}: {classes} distinct tree points, Z_* = {:.4} at {}", s.z_star(), s.rho_star());

    let field = s.metric_field(s.rho_star());
    let anchor = field
        .dist
        .iter()
        .zip(s.z())
        .map(|(d, z)| (d - (z - s.z_star())).abs())
        .fold(0.0, f64::max);
    println!("radius from rho_*: {:.4}; max |D - (Z - Z_*)| = {anchor:.2e}", field.radius());

    let mut pts = rng::stream(seed, tag::SNAKE_POINTS, 0);
    for _ in 0..5 {
        let (a, b) = (pts.random_range(0..m), pts.random_range(0..m));
        let d = s.distance(a, b);
        println!(
            "D({a}, {b}) = {d:.4}   D° = {:.4}   |Z_a - Z_b| = {:.4}",
            s.d_zero(a, b),
            (s.z()[a] - s.z()[b]).abs()
        );
    }
    Ok(())
}
