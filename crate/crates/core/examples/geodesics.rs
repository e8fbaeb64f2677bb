//! Simple geodesics towards the minimal-label point and how often two of
//! them merge before reaching it.
//!
//!     cargo run --release --example geodesics -- [m] [pairs]

use quadmap::brownian_map::share_terminal_segment;
use quadmap::rng::{self, tag};
use quadmap::runner::replica_snake;
use rand::Rng;

fn main() -> quadmap::Result<()> {
    let mut args = std::env::args().skip(1);
    let m: usize = args.next().map_or(3000, |s| s.parse().expect("m"));
    let pairs: usize = args.next().map_or(100, |s| s.parse().expect("pairs"));

    let s = replica_snake(3, m, 0)?;
    let mut r = rng::stream(3, tag::SNAKE_POINTS, 0);
    let g = s.simple_geodesic(r.random_range(0..m));
    println!("one simple geodesic ({} records), length {:.4}:", g.len(), s.path_length(&g));
    for &i in &g {
        println!("  t = {:.4}  Z - Z_* = {:.4}", i as f64 / m as f64, s.z()[i] - s.z_star());
    }

    let mut merged = 0;
    for k in 0..pairs {
        let s = replica_snake(4, m, k)?;
        let radius = s.z().iter().cloned().fold(f64::MIN, f64::max) - s.z_star();
        let mut r = rng::stream(4, tag::SNAKE_POINTS, k as u64);
        let mut far = || loop {
            let t = r.random_range(0..m);
            if s.z()[t] - s.z_star() >= 0.2 * radius {
                return t;
            }
        };
        let (a, b) = (far(), far());
        merged += share_terminal_segment(&s.simple_geodesic(a), &s.simple_geodesic(b)) as usize;
    }
    println!("{merged}/{pairs} pairs share their last step into rho_*");
    Ok(())
}
