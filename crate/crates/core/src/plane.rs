//! Brownian plane on a finite window, the `ψ`-CSBP and the hull process.
//!
//! The tree of the plane is coded by `Y_t = R_t` for `t ≥ 0` and `R'_{-t}` for
//! `t ≤ 0`, two independent Bessel(3) processes. On the window `[-T, T]` the
//! two sides are glued into one finite contour (right side up to `T`, then the
//! left side back from `-T` to `0`), which treats both window ends as a single
//! far point. Labels come from the same stack sweep as the Brownian map.

use std::collections::VecDeque;
use std::io::Write;

use rand::Rng;
use rand_distr::{Distribution, Exp1, Gamma, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::rmq::SparseTable;
use crate::rng::{self, tag};
use crate::snake::label_tree;

/// Bessel(3) path on `0, h, 2h, ..., m h` as the norm of a 3-d Brownian motion.
pub fn bessel3_path<R: Rng + ?Sized>(m: usize, h: f64, rng: &mut R) -> Vec<f64> {
    let sd = h.sqrt();
    let mut b = [0.0f64; 3];
    let mut out = Vec::with_capacity(m + 1);
    out.push(0.0);
    for _ in 0..m {
        for c in &mut b {
            let g: f64 = rng.sample(StandardNormal);
            *c += sd * g;
        }
        out.push((b[0] * b[0] + b[1] * b[1] + b[2] * b[2]).sqrt());
    }
    out
}

/// Finite-window sketch of the Brownian plane. Grid index `k` in `0..=2m`
/// is time `(k - m) T / m`.
#[derive(Clone, Debug)]
pub struct PlaneSketch {
    t_half: f64,
    m: usize,
    y: Vec<f64>,
    z: Vec<f64>,
    rep: Vec<usize>,
    z_rmq: SparseTable<f64>,
    y_rmq: SparseTable<f64>,
}

/// Sample on `[-T, T]` with `m` steps per side. The right path, the left path
/// and the labels use separate streams of `seed`, so a longer window with the
/// same step reuses the same Bessel paths.
pub fn sample_plane_sketch(t_half: f64, m: usize, seed: u64) -> Result<PlaneSketch> {
    if !(t_half > 0.0 && t_half.is_finite()) || m < 2 {
        return Err(invalid("plane sketch needs T > 0 and m >= 2"));
    }
    let h = t_half / m as f64;
    let right = bessel3_path(m, h, &mut rng::stream(seed, tag::PLANE_RIGHT, 0));
    let left = bessel3_path(m, h, &mut rng::stream(seed, tag::PLANE_LEFT, 0));
    PlaneSketch::from_sides(t_half, &right, &left, &mut rng::stream(seed, tag::PLANE_LABELS, 0))
}

impl PlaneSketch {
    /// Build from the two sides (`right[k] = Y(kh)`, `left[k] = Y(-kh)`).
    pub fn from_sides<R: Rng + ?Sized>(t_half: f64, right: &[f64], left: &[f64], rng: &mut R) -> Result<Self> {
        let m = right.len() - 1;
        if left.len() != m + 1 || right[0] != 0.0 || left[0] != 0.0 {
            return Err(invalid("both sides need m + 1 values starting at 0"));
        }
        if right.iter().chain(left).any(|&x| !(x >= 0.0)) {
            return Err(invalid("Bessel paths must be nonnegative"));
        }
        // Contour: right side forward, then the left side from its far end.
        let contour: Vec<f64> = right.iter().chain(left.iter().rev()).copied().collect();
        let tree = label_tree(&contour, rng);
        let z_contour = tree.grid_labels();
        let rep_contour = tree.representatives();
        let len = 2 * m + 1;
        let contour_of = |k: usize| if k >= m { k - m } else { m + 1 + k };
        let to_time = |c: usize| if c <= m { c + m } else { c - m - 1 };
        let mut y = vec![0.0; len];
        let mut z = vec![0.0; len];
        let mut rep = vec![0; len];
        for k in 0..len {
            let c = contour_of(k);
            y[k] = contour[c];
            z[k] = z_contour[c];
            rep[k] = to_time(rep_contour[c]);
        }
        // Representatives as smallest time index in each class.
        let mut first = vec![usize::MAX; len];
        for k in 0..len {
            let r = &mut first[rep[k]];
            if *r == usize::MAX {
                *r = k;
            }
        }
        let rep = rep.iter().map(|&r| first[r]).collect();
        Ok(Self {
            t_half,
            m,
            z_rmq: SparseTable::new(&z),
            y_rmq: SparseTable::new(&y),
            y,
            z,
            rep,
        })
    }

    pub fn t_half(&self) -> f64 {
        self.t_half
    }

    /// Steps per side.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.y.len()
    }

    pub fn is_empty(&self) -> bool {
        self.y.is_empty()
    }

    pub fn time(&self, k: usize) -> f64 {
        (k as f64 - self.m as f64) * self.t_half / self.m as f64
    }

    /// Grid index of the time `0`.
    pub fn origin(&self) -> usize {
        self.m
    }

    pub fn y(&self) -> &[f64] {
        &self.y
    }

    pub fn z(&self) -> &[f64] {
        &self.z
    }

    pub fn representatives(&self) -> &[usize] {
        &self.rep
    }

    /// `m_Y(s, t)`: minimum of `Y` on `[s∧t, s∨t]` when both sit on the same
    /// side of 0, otherwise on the outer ranges `[-T, s∧t] ∪ [s∨t, T]`.
    pub fn m_y(&self, i: usize, j: usize) -> f64 {
        let (lo, hi) = (i.min(j), i.max(j));
        if hi <= self.m || lo >= self.m {
            self.y_rmq.min(lo, hi)
        } else {
            self.y_rmq.min(0, lo).min(self.y_rmq.min(hi, self.len() - 1))
        }
    }

    /// `Z_i + Z_j - 2 min Z[i∧j ..= i∨j]`.
    pub fn d_zero(&self, i: usize, j: usize) -> f64 {
        let (lo, hi) = (i.min(j), i.max(j));
        self.z[i] + self.z[j] - 2.0 * self.z_rmq.min(lo, hi)
    }

    /// Chain infimum of `D°` over window points from `source`, stopping at
    /// `target` if given. Chains cannot leave the window, so this is an upper
    /// bound on the distance in the plane.
    pub fn truncated_distances(&self, source: usize, target: Option<usize>) -> Vec<f64> {
        let n = self.len();
        let mut dist = vec![f64::INFINITY; n];
        let mut done = vec![false; n];
        dist[source] = 0.0;
        loop {
            let mut u = usize::MAX;
            let mut best = f64::INFINITY;
            for v in 0..n {
                if !done[v] && dist[v] < best {
                    best = dist[v];
                    u = v;
                }
            }
            if u == usize::MAX || Some(u) == target {
                break;
            }
            done[u] = true;
            let zu = self.z[u];
            let mut run = zu;
            for v in u..n {
                run = run.min(self.z[v]);
                let c = best + zu + self.z[v] - 2.0 * run;
                if c < dist[v] {
                    dist[v] = c;
                }
            }
            let mut run = zu;
            for v in (0..u).rev() {
                run = run.min(self.z[v]);
                let c = best + zu + self.z[v] - 2.0 * run;
                if c < dist[v] {
                    dist[v] = c;
                }
            }
            for v in 0..n {
                if self.rep[v] == self.rep[u] && best < dist[v] {
                    dist[v] = best;
                }
            }
        }
        dist
    }

    /// Truncated `D_∞` between two window points.
    pub fn truncated_d_infinity(&self, i: usize, j: usize) -> f64 {
        if i == j {
            return 0.0;
        }
        self.truncated_distances(i, Some(j))[j]
    }

    /// The sub-window `[-T', T']` with `m'` steps per side, keeping this
    /// sketch's paths and labels.
    pub fn restrict(&self, inner_m: usize) -> Result<PlaneSketch> {
        if inner_m < 1 || inner_m > self.m {
            return Err(invalid("inner window must be nonempty and inside the sketch"));
        }
        let range = self.m - inner_m..=self.m + inner_m;
        let y: Vec<f64> = self.y[range.clone()].to_vec();
        let z: Vec<f64> = self.z[range.clone()].to_vec();
        let off = self.m - inner_m;
        let rep = self.rep[range]
            .iter()
            .enumerate()
            .map(|(k, &r)| if r >= off { r - off } else { k })
            .collect();
        Ok(PlaneSketch {
            t_half: self.t_half * inner_m as f64 / self.m as f64,
            m: inner_m,
            z_rmq: SparseTable::new(&z),
            y_rmq: SparseTable::new(&y),
            y,
            z,
            rep,
        })
    }
}

/// `ψ(λ) = (8/3)^{1/2} λ^{3/2}`.
pub fn psi(lambda: f64) -> f64 {
    (8.0f64 / 3.0).sqrt() * lambda.powf(1.5)
}

/// `u_t(λ) = (λ^{-1/2} + (2/3)^{1/2} t)^{-2}`, the solution of `u' = -ψ(u)`, `u_0 = λ`.
pub fn csbp_u(t: f64, lambda: f64) -> Result<f64> {
    if !(t >= 0.0) || !(lambda > 0.0) {
        return Err(invalid(format!("csbp_u needs t >= 0 and λ > 0, got t={t}, λ={lambda}")));
    }
    if lambda.is_infinite() {
        return Ok(1.5 / (t * t));
    }
    Ok((lambda.powf(-0.5) + (2.0f64 / 3.0).sqrt() * t).powi(-2))
}

/// `E[exp(-λ |B_r^•|)] = 3^{3/2} cosh(a r) / (cosh²(a r) + 2)^{3/2}` with `a = (2λ)^{1/4}`.
pub fn hull_laplace(lambda: f64, r: f64) -> Result<f64> {
    if !(lambda >= 0.0) || !(r >= 0.0) {
        return Err(invalid("hull_laplace needs λ >= 0 and r >= 0"));
    }
    let c = ((2.0 * lambda).powf(0.25) * r).cosh();
    if c.is_infinite() {
        return Ok(0.0);
    }
    Ok(3f64.powf(1.5) * c / (c * c + 2.0).powf(1.5))
}

/// Density `(2π)^{-1/2} x^{-5/2} e^{-1/(2x)}` of the hull marks.
pub fn xi_density(x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    (2.0 * std::f64::consts::PI).powf(-0.5) * x.powf(-2.5) * (-0.5 / x).exp()
}

/// CDF of [`xi_density`] by composite Simpson quadrature in `log x`, tabulated
/// once and interpolated linearly.
pub struct XiCdf {
    lo: f64,
    step: f64,
    table: Vec<f64>,
}

impl XiCdf {
    pub fn new() -> Self {
        let (lo, hi, cells) = (-10.0f64, 40.0f64, 200_000usize);
        let step = (hi - lo) / cells as f64;
        let g = |u: f64| {
            let x = u.exp();
            xi_density(x) * x
        };
        let mut table = Vec::with_capacity(cells + 1);
        table.push(0.0);
        let mut acc = 0.0;
        for k in 0..cells {
            let a = lo + k as f64 * step;
            acc += step / 6.0 * (g(a) + 4.0 * g(a + step / 2.0) + g(a + step));
            table.push(acc);
        }
        Self { lo, step, table }
    }

    /// Total mass on the tabulated range.
    pub fn total(&self) -> f64 {
        *self.table.last().unwrap()
    }

    pub fn cdf(&self, x: f64) -> f64 {
        if x <= 0.0 {
            return 0.0;
        }
        let pos = (x.ln() - self.lo) / self.step;
        if pos <= 0.0 {
            return 0.0;
        }
        let k = pos.floor() as usize;
        if k + 1 >= self.table.len() {
            return self.total();
        }
        let w = pos - k as f64;
        self.table[k] * (1.0 - w) + self.table[k + 1] * w
    }

    /// Numerical median by bisection.
    pub fn median(&self) -> f64 {
        let (mut a, mut b) = (1e-3f64, 1e3f64);
        for _ in 0..200 {
            let c = (a * b).sqrt();
            if self.cdf(c) < 0.5 {
                a = c;
            } else {
                b = c;
            }
        }
        (a * b).sqrt()
    }
}

impl Default for XiCdf {
    fn default() -> Self {
        Self::new()
    }
}

/// Hull mark: `1/G` with `G ~ Gamma(3/2, rate 1/2)`. Substituting `x = 1/g`
/// in the Gamma density gives exactly [`xi_density`].
pub fn sample_xi<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    let g = Gamma::new(1.5, 2.0).expect("valid Gamma parameters");
    1.0 / g.sample(rng)
}

/// Scale making the Chambers-Mallows-Stuck variable satisfy
/// `E[exp(-λS)] = exp(ψ(λ))`: `σ^{3/2} / cos(π/4) = (8/3)^{1/2}`.
pub fn stable_scale() -> f64 {
    ((8.0f64 / 3.0).sqrt() * std::f64::consts::FRAC_PI_4.cos()).powf(2.0 / 3.0)
}

/// Spectrally positive `3/2`-stable variable with Laplace exponent `ψ`,
/// by the Chambers-Mallows-Stuck method (`β = 1`).
pub fn sample_stable<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    use std::f64::consts::FRAC_PI_2;
    let alpha = 1.5f64;
    let tan = (FRAC_PI_2 * alpha).tan();
    let b = tan.atan() / alpha;
    let s = (1.0 + tan * tan).powf(1.0 / (2.0 * alpha));
    let v = rng.random_range(-FRAC_PI_2..FRAC_PI_2);
    let w: f64 = rng.sample(Exp1);
    let x = s * (alpha * (v + b)).sin() / v.cos().powf(1.0 / alpha)
        * ((v - alpha * (v + b)).cos() / w).powf((1.0 - alpha) / alpha);
    stable_scale() * x
}

/// Controls for [`simulate_hull_process`]; echoed in the fidelity manifest.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FidelityParams {
    /// Starting value of the CSBP.
    pub x0: f64,
    /// Relative step: each step lasts `dt · X^{1/2}` in CSBP time.
    pub dt: f64,
    /// Increments above `c · Δs^{2/3}` are recorded as jumps.
    pub jump_threshold: f64,
    /// Below this value the remaining extinction time is drawn exactly.
    pub x_floor: f64,
    /// Paths whose extinction comes before `r_max` are redrawn, up to this many times.
    pub rejection_budget: u64,
    /// Add the expected contribution of the jumps below the threshold to `W`.
    pub small_jump_compensation: bool,
}

impl Default for FidelityParams {
    fn default() -> Self {
        Self {
            x0: 100.0,
            dt: 1e-3,
            jump_threshold: 2.0,
            x_floor: 1e-4,
            rejection_budget: 1000,
            small_jump_compensation: true,
        }
    }
}

/// Jumps of the time-shifted CSBP on `[-r_max, 0]` and their hull marks.
#[derive(Clone, Debug, PartialEq)]
pub struct HullProcessPath {
    pub r_max: f64,
    /// Jump times `u ≤ 0`, increasing.
    pub times: Vec<f64>,
    /// Values just before each jump.
    pub before: Vec<f64>,
    pub sizes: Vec<f64>,
    pub marks: Vec<f64>,
    /// Expected contribution of the unrecorded small jumps on `[-r, 0]`, at
    /// `r = r_max k / (len - 1)`; zero when compensation is off.
    pub compensator: Vec<f64>,
    /// Paths redrawn because extinction came too early.
    pub rejected: u64,
}

impl HullProcessPath {
    /// `W_r = Σ_{-r ≤ u ≤ 0} ξ_u (ΔX_u)²`, plus the small-jump compensator.
    pub fn w(&self, r: f64) -> f64 {
        let jumps: f64 = self
            .times
            .iter()
            .zip(self.sizes.iter().zip(&self.marks))
            .filter(|(&u, _)| u >= -r)
            .map(|(_, (&s, &xi))| xi * s * s)
            .sum();
        jumps + self.compensator_at(r)
    }

    fn compensator_at(&self, r: f64) -> f64 {
        let n = self.compensator.len();
        if n < 2 || r <= 0.0 {
            return 0.0;
        }
        let pos = (r / self.r_max).min(1.0) * (n - 1) as f64;
        let k = (pos.floor() as usize).min(n - 2);
        let w = pos - k as f64;
        self.compensator[k] * (1.0 - w) + self.compensator[k + 1] * w
    }

    /// `(r, W_r)` on a grid of `points` radii over `[0, r_max]` merged with
    /// the jump radii.
    pub fn w_curve(&self, points: usize) -> Vec<(f64, f64)> {
        let mut radii: Vec<f64> = (0..=points).map(|k| self.r_max * k as f64 / points as f64).collect();
        radii.extend(self.times.iter().map(|&u| -u));
        radii.sort_by(f64::total_cmp);
        radii.dedup();
        radii.into_iter().map(|r| (r, self.w(r))).collect()
    }

    pub fn write_csv<W: Write>(&self, points: usize, mut w: W) -> Result<()> {
        writeln!(w, "r,W")?;
        for (r, v) in self.w_curve(points) {
            writeln!(w, "{r},{v}")?;
        }
        Ok(())
    }
}

/// Density constant of the Lévy measure `K x^{-5/2} dx` behind `ψ`:
/// `K Γ(-3/2) = (8/3)^{1/2}`.
pub fn levy_density_constant() -> f64 {
    (8.0f64 / 3.0).sqrt() * 3.0 / (4.0 * std::f64::consts::PI.sqrt())
}

/// Number of grid points on `[-r_max, 0]` at which the small-jump
/// compensator is stored.
const COMPENSATOR_POINTS: usize = 256;

struct RawPath {
    /// `(time, value before, size)` of recorded jumps.
    jumps: VecDeque<(f64, f64, f64)>,
    /// `(time, cumulative small-jump compensator)` after every step.
    comp: VecDeque<(f64, f64)>,
    extinction: f64,
}

/// One CSBP path from `x0` via the Lamperti time change of a `ψ`-stable
/// process: from state `X`, a step lasts `Δt = dt·X^{1/2}`, spends
/// `Δs = X Δt` of Lévy time, and moves by `Δs^{2/3} S`. Only the last
/// `keep` units of time are retained.
fn csbp_path<R: Rng + ?Sized>(p: &FidelityParams, keep: f64, rng: &mut R) -> RawPath {
    let k2 = 2.0 * levy_density_constant();
    let mut x = p.x0;
    let mut t = 0.0;
    let mut cum = 0.0;
    let mut out = RawPath {
        jumps: VecDeque::new(),
        comp: VecDeque::from([(0.0, 0.0)]),
        extinction: 0.0,
    };
    loop {
        if x < p.x_floor {
            let e: f64 = rng.sample(Exp1);
            out.extinction = t + (1.5 * x / e).sqrt();
            return out;
        }
        let dt = p.dt * x.sqrt();
        let ds = x * dt;
        let scale = ds.powf(2.0 / 3.0);
        let inc = scale * sample_stable(rng);
        let next = x + inc;
        if next <= 0.0 {
            out.extinction = t + dt * x / (x - next);
            return out;
        }
        let threshold = p.jump_threshold * scale;
        if inc > threshold {
            out.jumps.push_back((t + dt, x, inc));
        }
        if p.small_jump_compensation {
            // Expected Σ ξ J² over jumps J below the threshold, with E[ξ] = 1.
            cum += k2 * threshold.sqrt() * ds;
        }
        x = next;
        t += dt;
        out.comp.push_back((t, cum));
        while out.jumps.front().is_some_and(|j| j.0 < t - keep) {
            out.jumps.pop_front();
        }
        while out.comp.len() > 1 && out.comp[1].0 < t - keep {
            out.comp.pop_front();
        }
    }
}

/// Approximate the CSBP started from `+∞` and conditioned to die at time 0,
/// on `[-r_max, 0]`, with independent marks on its jumps.
pub fn simulate_hull_process<R: Rng + ?Sized>(
    r_max: f64,
    params: &FidelityParams,
    rng: &mut R,
) -> Result<HullProcessPath> {
    if !(r_max > 0.0) {
        return Err(invalid("r_max must be positive"));
    }
    if !(params.x0 > 0.0 && params.dt > 0.0 && params.x_floor > 0.0 && params.jump_threshold > 0.0) {
        return Err(invalid("fidelity parameters must be positive"));
    }
    for rejected in 0..=params.rejection_budget {
        let raw = csbp_path(params, r_max, rng);
        let ext = raw.extinction;
        if ext < r_max {
            continue;
        }
        let mut path = HullProcessPath {
            r_max,
            times: Vec::new(),
            before: Vec::new(),
            sizes: Vec::new(),
            marks: Vec::new(),
            compensator: Vec::with_capacity(COMPENSATOR_POINTS + 1),
            rejected,
        };
        for (t, before, size) in raw.jumps {
            let u = t - ext;
            if u >= -r_max {
                path.times.push(u);
                path.before.push(before);
                path.sizes.push(size);
                path.marks.push(sample_xi(rng));
            }
        }
        // Compensator mass on [u, 0], read off the cumulative curve.
        let comp: Vec<(f64, f64)> = raw.comp.into_iter().collect();
        let total = comp.last().map_or(0.0, |c| c.1);
        let at = |time: f64| {
            let k = comp.partition_point(|c| c.0 <= time);
            if k == 0 {
                comp[0].1
            } else if k == comp.len() {
                total
            } else {
                let (a, b) = (comp[k - 1], comp[k]);
                a.1 + (b.1 - a.1) * (time - a.0) / (b.0 - a.0)
            }
        };
        for k in 0..=COMPENSATOR_POINTS {
            let r = r_max * k as f64 / COMPENSATOR_POINTS as f64;
            path.compensator.push(total - at(ext - r));
        }
        return Ok(path);
    }
    Err(Error::BudgetExhausted {
        what: "hull process extinction-time rejection",
        budget: params.rejection_budget,
    })
}

/// CSBP value at time `t` from `x`, simulated with the same scheme (for
/// checking it against `E[exp(-λX_t)] = exp(-x u_t(λ))`).
pub fn simulate_csbp_at<R: Rng + ?Sized>(x: f64, t: f64, params: &FidelityParams, rng: &mut R) -> f64 {
    let mut x = x;
    let mut s = 0.0;
    while s < t && x > 0.0 {
        if x < params.x_floor {
            let e: f64 = rng.sample(Exp1);
            return if s + (1.5 * x / e).sqrt() <= t { 0.0 } else { x };
        }
        let dt = (params.dt * x.sqrt()).min(t - s);
        let inc = (x * dt).powf(2.0 / 3.0) * sample_stable(rng);
        x = (x + inc).max(0.0);
        s += dt;
    }
    x
}

/// One row of a closed-form versus Monte Carlo comparison.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LaplaceRow {
    pub lambda: f64,
    pub r: f64,
    pub closed_form: f64,
    pub monte_carlo: f64,
    pub stderr: f64,
}

/// Compare `E[exp(-λ W_r)]` over `paths` with [`hull_laplace`] on every `(λ, r)` pair.
pub fn laplace_comparison(paths: &[HullProcessPath], lambdas: &[f64], radii: &[f64]) -> Result<Vec<LaplaceRow>> {
    let mut rows = Vec::new();
    for &r in radii {
        let w: Vec<f64> = paths.iter().map(|p| p.w(r)).collect();
        for &lambda in lambdas {
            let e: Vec<f64> = w.iter().map(|&x| (-lambda * x).exp()).collect();
            rows.push(LaplaceRow {
                lambda,
                r,
                closed_form: hull_laplace(lambda, r)?,
                monte_carlo: crate::stats::mean(&e),
                stderr: crate::stats::std_error(&e),
            });
        }
    }
    Ok(rows)
}

pub fn write_laplace_csv<W: Write>(rows: &[LaplaceRow], mut w: W) -> Result<()> {
    writeln!(w, "lambda,r,closed_form,monte_carlo,stderr")?;
    for row in rows {
        writeln!(w, "{},{},{},{},{}", row.lambda, row.r, row.closed_form, row.monte_carlo, row.stderr)?;
    }
    Ok(())
}

/// Fidelity manifest written next to hull-process outputs.
#[derive(Clone, Debug, Serialize)]
pub struct FidelityReport {
    pub params: FidelityParams,
    pub r_max: f64,
    pub paths: usize,
    pub rejected: u64,
    pub mean_jumps: f64,
}

impl FidelityReport {
    pub fn new(params: &FidelityParams, r_max: f64, paths: &[HullProcessPath]) -> Self {
        Self {
            params: params.clone(),
            r_max,
            paths: paths.len(),
            rejected: paths.iter().map(|p| p.rejected).sum(),
            mean_jumps: paths.iter().map(|p| p.times.len() as f64).sum::<f64>() / paths.len().max(1) as f64,
        }
    }
}
