//! Root-ball census of uniform quadrangulations at two sizes.
//!
//!     cargo run --release --example local_census -- [radius] [samples]

use quadmap::cvs::sample_quadrangulation;
use quadmap::rng::{self, tag};
use quadmap::stats;

fn main() -> quadmap::Result<()> {
    let mut args = std::env::args().skip(1);
    let k: u32 = args.next().map_or(1, |s| s.parse().expect("radius"));
    let samples: u64 = args.next().map_or(500, |s| s.parse().expect("samples"));

    let census = |n: usize, seed: u64| -> quadmap::Result<_> {
        let balls = (0..samples)
            .map(|i| Ok(sample_quadrangulation(n, &mut rng::stream(seed, tag::TREE, i))?.map.local_ball_census(k)))
            .collect::<quadmap::Result<Vec<String>>>()?;
        Ok(stats::histogram(balls))
    };
    let small = census(500, 31)?;
    let large = census(1000, 32)?;
    let mut top: Vec<_> = small.iter().collect();
    top.sort_by(|a, b| b.1.cmp(a.1).then(a.0.cmp(b.0)));
    for (code, count) in top.iter().take(5) {
        println!("{count:>5}  {code}");
    }
    println!("{} classes at n = 500, {} at n = 1000", small.len(), large.len());
    println!("total variation {:.4}", stats::total_variation(&small, &large));
    Ok(())
}
