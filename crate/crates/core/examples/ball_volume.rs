//! Ball volumes in the discretized Brownian map and their log-log slope.
//!
//!     cargo run --release --example ball_volume -- [m] [draws]

use quadmap::brownian_map::ball_volume_curve;
use quadmap::runner::{replica_snake, VOLUME_FIT_POINTS, VOLUME_FIT_RANGE};
use quadmap::stats;

fn main() -> quadmap::Result<()> {
    let mut args = std::env::args().skip(1);
    let m: usize = args.next().map_or(3000, |s| s.parse().expect("m"));
    let draws: usize = args.next().map_or(10, |s| s.parse().expect("draws"));

    let (lo, hi) = VOLUME_FIT_RANGE;
    let mut slopes = Vec::new();
    for k in 0..draws {
        let s = replica_snake(11, m, k)?;
        let curve = ball_volume_curve(&s, s.rho_star());
        let radius = curve.radius();
        if k == 0 {
            for f in [0.05, 0.1, 0.2, 0.3, 0.5, 0.75, 1.0] {
                println!("r = {:.3}  volume = {:.5}", f * radius, curve.volume(f * radius));
            }
        }
        slopes.push(curve.log_log_slope(lo * radius, hi * radius, VOLUME_FIT_POINTS));
    }
    println!("mean slope over r in [{lo}, {hi}] x radius: {:.3} ({draws} draws)", stats::mean(&slopes));
    Ok(())
}
