//! Brownian-plane window, the CSBP behind hull volumes, and a Monte Carlo
//! check of the hull Laplace transform.
//!
//!     cargo run --release --example plane_hull_process -- [paths]

use quadmap::plane::{
    csbp_u, hull_laplace, laplace_comparison, sample_plane_sketch, simulate_hull_process, FidelityParams,
};
use quadmap::rng::{self, tag};

fn main() -> quadmap::Result<()> {
    let paths: u64 = std::env::args().nth(1).map_or(2000, |s| s.parse().expect("paths"));

    let sketch = sample_plane_sketch(1.0, 500, 1)?;
    let d = sketch.truncated_distances(sketch.origin(), None);
    for q in [0.1, 0.25, 0.75, 0.9] {
        let k = (q * (sketch.len() - 1) as f64) as usize;
        println!("time {:+.3}: Y = {:.4}  Z = {:+.4}  D = {:.4}", sketch.time(k), sketch.y()[k], sketch.z()[k], d[k]);
    }

    for t in [0.0, 0.5, 2.0] {
        println!("u_{t}(1) = {:.6}", csbp_u(t, 1.0)?);
    }

    let params = FidelityParams::default();
    let runs = (0..paths)
        .map(|k| simulate_hull_process(1.0, &params, &mut rng::stream(1, tag::HULL, k)))
        .collect::<quadmap::Result<Vec<_>>>()?;
    for row in laplace_comparison(&runs, &[0.25, 1.0], &[0.5, 1.0])? {
        println!(
            "lambda {:.2} r {:.2}: closed form {:.5}  Monte Carlo {:.5} ± {:.5}",
            row.lambda, row.r, row.closed_form, row.monte_carlo, row.stderr
        );
    }
    println!("E[exp(-0.5 |B_1|)] = {:.4}", hull_laplace(0.5, 1.0)?);
    Ok(())
}
