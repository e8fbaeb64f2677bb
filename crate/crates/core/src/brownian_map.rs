//! Discretized Brownian map.
//!
//! A normalized excursion on the grid `t_i = i/m` codes a tree; Gaussian
//! labels `Z` on that tree give the one-step functional `D°`, and the metric
//! `D` is the shortest-path closure of `D°` over the grid points. Index `m` is
//! identified with index `0`, so metric computations run over `0..m`.

use std::io::Write;

use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{invalid, Result};
use crate::rmq::SparseTable;
use crate::snake::{label_tree, LabelTree};

/// Grid values `e_0..=e_m` of a normalized excursion.
#[derive(Clone, Debug)]
pub struct DiscretizedExcursion {
    values: Vec<f64>,
    rmq: SparseTable<f64>,
}

impl DiscretizedExcursion {
    /// Wrap grid values; they must vanish at both ends and be positive inside.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        let m = values.len().saturating_sub(1);
        if m < 2 {
            return Err(invalid("an excursion needs at least 3 grid values"));
        }
        if values[0] != 0.0 || values[m] != 0.0 {
            return Err(invalid("excursion must start and end at 0"));
        }
        if values[1..m].iter().any(|&x| !(x > 0.0 && x.is_finite())) {
            return Err(invalid("excursion must be finite and positive inside"));
        }
        let rmq = SparseTable::new(&values);
        Ok(Self { values, rmq })
    }

    pub fn m(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// `e_i + e_j - 2 min e[i∧j ..= i∨j]`.
    pub fn tree_distance(&self, i: usize, j: usize) -> f64 {
        let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
        self.values[i] + self.values[j] - 2.0 * self.rmq.min(lo, hi)
    }
}

/// Grid excursion by Vervaat's transform of a Gaussian bridge: the bridge
/// `B_k = S_k - (k/m) S_m` of a random walk with `N(0, 1/m)` steps is read
/// cyclically from its minimum.
pub fn sample_excursion<R: Rng + ?Sized>(m: usize, rng: &mut R) -> Result<DiscretizedExcursion> {
    if m < 2 {
        return Err(invalid("excursion grid size must be at least 2"));
    }
    let sd = (1.0 / m as f64).sqrt();
    let mut walk = Vec::with_capacity(m + 1);
    walk.push(0.0f64);
    for k in 0..m {
        let g: f64 = rng.sample(StandardNormal);
        walk.push(walk[k] + sd * g);
    }
    let end = walk[m];
    let bridge: Vec<f64> = (0..m).map(|k| walk[k] - end * k as f64 / m as f64).collect();
    let start = (0..m).min_by(|&a, &b| bridge[a].total_cmp(&bridge[b])).unwrap();
    let low = bridge[start];
    let mut values: Vec<f64> = (0..m).map(|i| bridge[(start + i) % m] - low).collect();
    values.push(0.0);
    DiscretizedExcursion::new(values)
}

/// Excursion with Gaussian labels on its tree.
#[derive(Clone, Debug)]
pub struct SnakeGrid {
    excursion: DiscretizedExcursion,
    tree: LabelTree,
    z: Vec<f64>,
    rep: Vec<usize>,
    rho_star: usize,
    z_rmq: SparseTable<f64>,
    prefix_min: Vec<f64>,
    suffix_min: Vec<f64>,
    classes: Vec<Vec<usize>>,
}

/// Label the tree of `x` with a Brownian motion indexed by it.
pub fn build_snake<R: Rng + ?Sized>(x: DiscretizedExcursion, rng: &mut R) -> SnakeGrid {
    let tree = label_tree(x.values(), rng);
    SnakeGrid::from_parts(x, tree)
}

impl SnakeGrid {
    fn from_parts(excursion: DiscretizedExcursion, tree: LabelTree) -> Self {
        let m = excursion.m();
        let z_all = tree.grid_labels();
        let z = z_all[..m].to_vec();
        let rep = tree.representatives()[..m].to_vec();
        let rho_star = (0..m).min_by(|&a, &b| z[a].total_cmp(&z[b]).then(a.cmp(&b))).unwrap();
        let mut prefix_min = z.clone();
        for i in 1..m {
            prefix_min[i] = prefix_min[i - 1].min(z[i]);
        }
        let mut suffix_min = z.clone();
        for i in (0..m - 1).rev() {
            suffix_min[i] = suffix_min[i + 1].min(z[i]);
        }
        let mut classes = vec![Vec::new(); m];
        for i in 0..m {
            classes[rep[i]].push(i);
        }
        Self {
            z_rmq: SparseTable::new(&z),
            excursion,
            tree,
            z,
            rep,
            rho_star,
            prefix_min,
            suffix_min,
            classes,
        }
    }

    pub fn m(&self) -> usize {
        self.z.len()
    }

    pub fn excursion(&self) -> &DiscretizedExcursion {
        &self.excursion
    }

    pub fn label_tree(&self) -> &LabelTree {
        &self.tree
    }

    /// Labels at grid indices `0..m`.
    pub fn z(&self) -> &[f64] {
        &self.z
    }

    /// Smallest grid index in the same tree point as each index.
    pub fn representatives(&self) -> &[usize] {
        &self.rep
    }

    /// Index of the smallest label (first one on ties).
    pub fn rho_star(&self) -> usize {
        self.rho_star
    }

    pub fn z_star(&self) -> f64 {
        self.z[self.rho_star]
    }

    /// `Z_i + Z_j - 2 max(min_[i,j] Z, min_[j,i] Z)` over the two contour arcs.
    pub fn d_zero(&self, i: usize, j: usize) -> f64 {
        if i == j {
            return 0.0;
        }
        let (lo, hi) = if i < j { (i, j) } else { (j, i) };
        let inner = self.z_rmq.min(lo, hi);
        let outer = self.suffix_min[hi].min(self.prefix_min[lo]);
        self.z[i] + self.z[j] - 2.0 * inner.max(outer)
    }

    /// `D°(u, v)` for every `v`, written into `out`. `O(m)`.
    fn d_zero_row(&self, u: usize, out: &mut [f64]) {
        let m = self.m();
        let zu = self.z[u];
        out[u] = 0.0;
        let mut run = zu;
        let pre_u = self.prefix_min[u];
        for v in u + 1..m {
            run = run.min(self.z[v]);
            out[v] = zu + self.z[v] - 2.0 * run.max(self.suffix_min[v].min(pre_u));
        }
        let mut run = zu;
        let suf_u = self.suffix_min[u];
        for v in (0..u).rev() {
            run = run.min(self.z[v]);
            out[v] = zu + self.z[v] - 2.0 * run.max(suf_u.min(self.prefix_min[v]));
        }
    }

    /// Single-source `D` from `source`. See [`SnakeGrid::metric_field_until`].
    pub fn metric_field(&self, source: usize) -> MetricField {
        self.metric_field_until(source, None)
    }

    /// Dijkstra on the complete graph over grid points with weights `D°`,
    /// stopping early once `target` is settled. Grid points in the same tree
    /// point are joined at zero cost. `O(m^2)` time, `O(m)` memory.
    pub fn metric_field_until(&self, source: usize, target: Option<usize>) -> MetricField {
        let m = self.m();
        let mut dist = vec![f64::INFINITY; m];
        let mut pred = vec![usize::MAX; m];
        let mut done = vec![false; m];
        let mut row = vec![0.0; m];
        dist[source] = 0.0;
        pred[source] = source;
        loop {
            let mut u = usize::MAX;
            let mut best = f64::INFINITY;
            for v in 0..m {
                if !done[v] && dist[v] < best {
                    best = dist[v];
                    u = v;
                }
            }
            if u == usize::MAX {
                break;
            }
            done[u] = true;
            if Some(u) == target {
                break;
            }
            for &w in &self.classes[self.rep[u]] {
                if !done[w] && best < dist[w] {
                    dist[w] = best;
                    pred[w] = u;
                }
            }
            self.d_zero_row(u, &mut row);
            for v in 0..m {
                let cand = best + row[v];
                if !done[v] && cand < dist[v] {
                    dist[v] = cand;
                    pred[v] = u;
                }
            }
        }
        MetricField {
            source,
            dist,
            pred,
            complete: target.is_none(),
        }
    }

    /// `D` between two grid points.
    pub fn distance(&self, a: usize, b: usize) -> f64 {
        self.metric_field_until(a, Some(b)).dist[b]
    }

    /// Simple geodesic from `t` to `ρ_*`: walking forward around the contour
    /// from `t`, the successive points where `Z` reaches a new running minimum.
    pub fn simple_geodesic(&self, t: usize) -> Vec<usize> {
        let m = self.m();
        let mut path = vec![t];
        let mut level = self.z[t];
        let mut i = t;
        while self.rep[i] != self.rep[self.rho_star] {
            i = (i + 1) % m;
            if self.z[i] < level {
                level = self.z[i];
                path.push(i);
            }
        }
        path
    }

    /// Sum of `D°` along consecutive points of `path`.
    pub fn path_length(&self, path: &[usize]) -> f64 {
        path.windows(2).map(|w| self.d_zero(w[0], w[1])).sum()
    }

    /// `index,e,Z,representative` CSV over `0..=m`.
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "index,e,Z,representative")?;
        let m = self.m();
        for i in 0..=m {
            let j = i % m;
            writeln!(w, "{i},{},{},{}", self.excursion.values()[i], self.z[j], self.rep[j])?;
        }
        Ok(())
    }
}

/// All-pairs `D` by relaxing `D°` (with zero cost inside tree points) to a
/// fixpoint. `O(m^3)` per sweep; an oracle for small grids.
pub fn relaxation_metric(s: &SnakeGrid) -> Vec<Vec<f64>> {
    let m = s.m();
    let rep = s.representatives();
    let mut d: Vec<Vec<f64>> = (0..m)
        .map(|i| (0..m).map(|j| if rep[i] == rep[j] { 0.0 } else { s.d_zero(i, j) }).collect())
        .collect();
    loop {
        let mut changed = false;
        for k in 0..m {
            for i in 0..m {
                for j in 0..m {
                    let c = d[i][k] + d[k][j];
                    if c < d[i][j] {
                        d[i][j] = c;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return d;
        }
    }
}

/// Do two simple geodesics end with a common segment of at least one grid step?
pub fn share_terminal_segment(a: &[usize], b: &[usize]) -> bool {
    a.len() >= 2 && b.len() >= 2 && a[a.len() - 2..] == b[b.len() - 2..]
}

/// Distances from one source, with shortest-path predecessors.
#[derive(Clone, Debug)]
pub struct MetricField {
    pub source: usize,
    pub dist: Vec<f64>,
    /// Predecessor on a shortest chain; the source points to itself.
    pub pred: Vec<usize>,
    /// False when the computation stopped early at a target.
    pub complete: bool,
}

impl MetricField {
    /// Chain of grid points from the source to `v`.
    pub fn path_to(&self, v: usize) -> Vec<usize> {
        let mut path = vec![v];
        let mut cur = v;
        while cur != self.source {
            cur = self.pred[cur];
            path.push(cur);
        }
        path.reverse();
        path
    }

    /// Largest finite distance.
    pub fn radius(&self) -> f64 {
        self.dist.iter().copied().filter(|d| d.is_finite()).fold(0.0, f64::max)
    }

    /// `representative,D` CSV, one row per class.
    pub fn write_csv<W: Write>(&self, reps: &[usize], mut w: W) -> Result<()> {
        writeln!(w, "representative,D")?;
        for (i, &r) in reps.iter().enumerate() {
            if r == i {
                writeln!(w, "{i},{}", self.dist[i])?;
            }
        }
        Ok(())
    }
}

/// `r ↦ Λ(B(source, r))` as the fraction of grid times within distance `r`.
#[derive(Clone, Debug)]
pub struct VolumeCurve {
    sorted: Vec<f64>,
}

impl VolumeCurve {
    pub fn new(field: &MetricField) -> Self {
        let mut sorted = field.dist.clone();
        sorted.sort_by(f64::total_cmp);
        Self { sorted }
    }

    pub fn volume(&self, r: f64) -> f64 {
        self.sorted.partition_point(|&d| d <= r) as f64 / self.sorted.len() as f64
    }

    pub fn radius(&self) -> f64 {
        *self.sorted.last().unwrap()
    }

    /// Least-squares slope of `log Λ(B(r))` against `log r` at `points`
    /// log-spaced radii in `[lo, hi]·radius`.
    pub fn log_log_slope(&self, lo: f64, hi: f64, points: usize) -> f64 {
        let (xs, ys) = self.log_log_points(lo, hi, points);
        crate::stats::ols_slope(&xs, &ys)
    }

    pub fn log_log_points(&self, lo: f64, hi: f64, points: usize) -> (Vec<f64>, Vec<f64>) {
        let radius = self.radius();
        let (a, b) = ((lo * radius).ln(), (hi * radius).ln());
        (0..points)
            .map(|k| {
                let x = a + (b - a) * k as f64 / (points - 1) as f64;
                (x, self.volume(x.exp()).ln())
            })
            .unzip()
    }

    /// `r,volume` CSV at `points` evenly spaced radii up to the radius.
    pub fn write_csv<W: Write>(&self, points: usize, mut w: W) -> Result<()> {
        writeln!(w, "r,volume")?;
        let radius = self.radius();
        for k in 0..=points {
            let r = radius * k as f64 / points as f64;
            writeln!(w, "{r},{}", self.volume(r))?;
        }
        Ok(())
    }
}

/// `ball_volume_curve` in one call.
pub fn ball_volume_curve(s: &SnakeGrid, source: usize) -> VolumeCurve {
    VolumeCurve::new(&s.metric_field(source))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng;
    use crate::stats;

    fn snake(m: usize, seed: u64) -> SnakeGrid {
        let mut r = rng::from_seed(seed);
        let x = sample_excursion(m, &mut r).unwrap();
        build_snake(x, &mut r)
    }

    /// Positive Gaussian bridge by plain rejection: an independent route to
    /// the same law as the Vervaat transform.
    fn excursion_by_rejection(m: usize, r: &mut rng::Rng) -> Vec<f64> {
        let sd = (1.0 / m as f64).sqrt();
        loop {
            let mut walk = vec![0.0f64];
            for k in 0..m {
                let g: f64 = r.sample(StandardNormal);
                walk.push(walk[k] + sd * g);
            }
            let end = walk[m];
            let bridge: Vec<f64> = (0..=m).map(|k| walk[k] - end * k as f64 / m as f64).collect();
            if bridge[1..m].iter().all(|&x| x > 0.0) {
                return bridge;
            }
        }
    }

    #[test]
    fn excursion_shape() {
        let mut r = rng::from_seed(2);
        for _ in 0..1000 {
            let x = sample_excursion(50, &mut r).unwrap();
            let v = x.values();
            assert_eq!((v[0], v[50]), (0.0, 0.0));
            assert!(v[1..50].iter().all(|&y| y > 0.0));
        }
        assert!(sample_excursion(1, &mut r).is_err());
    }

    #[test]
    fn excursion_max_matches_rejection_reference() {
        let mut r = rng::from_seed(3);
        let n = 4000;
        let a: Vec<f64> = (0..n)
            .map(|_| sample_excursion(64, &mut r).unwrap().values().iter().fold(0.0, |x: f64, &y| x.max(y)))
            .collect();
        let b: Vec<f64> = (0..n)
            .map(|_| excursion_by_rejection(64, &mut r).into_iter().fold(0.0, f64::max))
            .collect();
        assert!(stats::ks_two_sample(&a, &b) < 0.05);
    }

    #[test]
    fn tree_distance_matches_scan() {
        let mut r = rng::from_seed(5);
        let x = sample_excursion(1000, &mut r).unwrap();
        let v = x.values();
        for _ in 0..1000 {
            let (i, j) = (r.random_range(0..=1000), r.random_range(0..=1000));
            let (lo, hi) = (i.min(j), i.max(j));
            let min = v[lo..=hi].iter().copied().fold(f64::INFINITY, f64::min);
            assert_eq!(x.tree_distance(i, j), v[i] + v[j] - 2.0 * min);
            assert_eq!(x.tree_distance(i, j), x.tree_distance(j, i));
        }
        assert_eq!(x.tree_distance(7, 7), 0.0);
    }

    #[test]
    fn label_variance_tracks_height() {
        let mut r = rng::from_seed(6);
        let x = sample_excursion(400, &mut r).unwrap();
        let probes: Vec<usize> = (1..=10).map(|k| 36 * k).collect();
        let draws = 10_000;
        let mut sums = vec![0.0; probes.len()];
        for _ in 0..draws {
            let s = build_snake(x.clone(), &mut r);
            assert_eq!(s.z()[0], 0.0);
            for (k, &p) in probes.iter().enumerate() {
                sums[k] += s.z()[p] * s.z()[p];
            }
        }
        for (k, &p) in probes.iter().enumerate() {
            let var = sums[k] / draws as f64;
            // sd of the estimate is sqrt(2/draws) relative, about 1.4%.
            assert!((var / x.values()[p] - 1.0).abs() < 0.05, "probe {p}: {var} vs {}", x.values()[p]);
        }
    }

    #[test]
    fn d_zero_basics() {
        let s = snake(500, 7);
        let mut r = rng::from_seed(70);
        for _ in 0..2000 {
            let (i, j) = (r.random_range(0..500), r.random_range(0..500));
            let d = s.d_zero(i, j);
            assert_eq!(d, s.d_zero(j, i));
            assert!(d >= (s.z()[i] - s.z()[j]).abs() - 1e-12);
        }
        for j in 0..500 {
            assert!((s.d_zero(s.rho_star(), j) - (s.z()[j] - s.z_star())).abs() < 1e-12);
        }
        let mut row = vec![0.0; 500];
        for u in [0, 17, 250, 499] {
            s.d_zero_row(u, &mut row);
            for v in 0..500 {
                assert!((row[v] - s.d_zero(u, v)).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn anchor_identity() {
        let s = snake(1000, 8);
        let f = s.metric_field(s.rho_star());
        for (i, d) in f.dist.iter().enumerate() {
            assert!((d - (s.z()[i] - s.z_star())).abs() < 1e-9);
        }
    }


    #[test]
    fn metric_matches_brute_force() {
        for seed in 0..3 {
            let s = snake(60, 100 + seed);
            let all = relaxation_metric(&s);
            for src in [0, 13, 59, s.rho_star()] {
                let f = s.metric_field(src);
                for j in 0..60 {
                    assert!((f.dist[j] - all[src][j]).abs() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn metric_axioms() {
        let s = snake(400, 9);
        let mut r = rng::from_seed(90);
        let fields: Vec<MetricField> = (0..6).map(|_| s.metric_field(r.random_range(0..400))).collect();
        for a in &fields {
            assert_eq!(a.dist[a.source], 0.0);
            for b in &fields {
                assert!((a.dist[b.source] - b.dist[a.source]).abs() < 1e-9);
            }
            for v in 0..400 {
                assert!(a.dist[v] <= s.d_zero(a.source, v) + 1e-12);
                assert!(a.dist[v] >= (s.z()[v] - s.z()[a.source]).abs() - 1e-9);
                for b in &fields {
                    assert!(a.dist[v] <= a.dist[b.source] + b.dist[v] + 1e-9);
                }
            }
            let path = a.path_to(123);
            assert!((s.path_length(&path) - a.dist[123]).abs() < 1e-9);
        }
        let early = s.metric_field_until(fields[0].source, Some(fields[1].source));
        assert!(!early.complete);
        assert_eq!(early.dist[fields[1].source], fields[0].dist[fields[1].source]);
    }

    #[test]
    fn simple_geodesics_reach_the_minimum_with_the_right_length() {
        let s = snake(3000, 10);
        let f = s.metric_field(s.rho_star());
        assert_eq!(s.simple_geodesic(s.rho_star()), vec![s.rho_star()]);
        let mut r = rng::from_seed(11);
        for _ in 0..50 {
            let t = r.random_range(0..3000);
            let g = s.simple_geodesic(t);
            assert_eq!(*g.last().unwrap(), s.rho_star());
            assert!((s.path_length(&g) - f.dist[t]).abs() < 1e-9);
            for w in g.windows(2) {
                assert!(f.dist[w[1]] < f.dist[w[0]]);
            }
        }
    }

    #[test]
    fn volume_curve_ends() {
        let s = snake(300, 12);
        let c = ball_volume_curve(&s, 5);
        assert_eq!(c.volume(c.radius()), 1.0);
        assert_eq!(c.volume(0.0), 1.0 / 300.0);
        assert!(c.volume(0.5 * c.radius()) < 1.0);
    }

    #[test]
    fn csv_exports() {
        let s = snake(10, 13);
        let mut buf = Vec::new();
        s.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 12);
        assert!(text.starts_with("index,e,Z,representative\n0,0,0,0\n"));
        let mut buf = Vec::new();
        s.metric_field(0).write_csv(s.representatives(), &mut buf).unwrap();
        assert!(String::from_utf8(buf).unwrap().starts_with("representative,D\n0,0\n"));
    }
}
