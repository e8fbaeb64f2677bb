//! Seeded experiment orchestration behind the `quadmap` binary.
//!
//! Replica `k` of an experiment with root seed `s` draws from the streams
//! `rng::stream(s, tag, k)`, one tag per purpose, so results do not depend on
//! how replicas are scheduled. Every run writes its files plus a
//! `manifest.json` holding the configuration, the crate version, a summary and
//! the SHA-256 of every output.

use std::collections::HashSet;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rand::Rng as _;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::brownian_map::{self, build_snake, sample_excursion, SnakeGrid};
use crate::cvs::{self, IdentityCheck};
use crate::error::{invalid, Error, Result};
use crate::map::{DistanceProfile, PlanarMapGraph};
use crate::plane::{self, FidelityParams, FidelityReport, HullProcessPath};
use crate::rng::{self, tag};
use crate::stats;
use crate::tree::enumerate_well_labeled;

/// Largest `n` accepted by the enumeration oracle.
pub const ORACLE_MAX_N: usize = 6;

/// Radii at which hull-process `W_r` curves are exported.
const HULL_CURVE_POINTS: usize = 64;

/// Simple geodesics exported per Brownian-map replica.
const GEODESICS_PER_SNAKE: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    SampleQuad,
    TwoPoint,
    BrownianMap,
    BrownianPlane,
    Oracle,
}

/// Base point for Brownian-map metric fields.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    #[default]
    RhoStar,
    Uniform,
}

impl FromStr for Source {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rho_star" => Ok(Source::RhoStar),
            "uniform" => Ok(Source::Uniform),
            other => Err(invalid(format!("unknown source {other:?} (expected rho_star or uniform)"))),
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::RhoStar => "rho_star",
            Source::Uniform => "uniform",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub command: Command,
    /// Faces of the quadrangulations.
    pub n: usize,
    /// Grid size (per side for the plane).
    pub m: usize,
    /// Half-width of the plane window.
    pub grid_t: f64,
    pub r_max: f64,
    pub seed: u64,
    pub replicas: usize,
    pub out: PathBuf,
    pub source: Source,
    pub fidelity: FidelityParams,
}

impl ExperimentConfig {
    /// Defaults for `command`, writing under `out`.
    pub fn new(command: Command, out: impl Into<PathBuf>) -> Self {
        let (n, m, replicas) = match command {
            Command::SampleQuad => (1000, 3000, 1),
            Command::TwoPoint => (10_000, 3000, 200),
            Command::BrownianMap => (1000, 3000, 1),
            Command::BrownianPlane => (1000, 1000, 1000),
            Command::Oracle => (3, 60, 1),
        };
        Self {
            command,
            n,
            m,
            grid_t: 1.0,
            r_max: 1.0,
            seed: 0,
            replicas,
            out: out.into(),
            source: Source::RhoStar,
            fidelity: FidelityParams::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |x: f64| x.is_finite() && x > 0.0;
        if self.n == 0 {
            return Err(invalid("--n must be positive"));
        }
        if self.command == Command::Oracle && self.n > ORACLE_MAX_N {
            return Err(invalid(format!("oracle enumeration is limited to n <= {ORACLE_MAX_N}")));
        }
        if self.m < 2 {
            return Err(invalid("--m must be at least 2"));
        }
        if self.replicas == 0 {
            return Err(invalid("--replicas must be positive"));
        }
        if !positive(self.grid_t) {
            return Err(invalid("--grid-T must be positive"));
        }
        if !positive(self.r_max) {
            return Err(invalid("--rmax must be positive"));
        }
        let f = &self.fidelity;
        if !(positive(f.x0) && positive(f.dt) && positive(f.jump_threshold) && positive(f.x_floor)) {
            return Err(invalid("fidelity parameters must be positive"));
        }
        if self.out.as_os_str().is_empty() {
            return Err(invalid("--out must not be empty"));
        }
        Ok(())
    }
}

/// A file written by a run.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OutputFile {
    pub file: String,
    pub sha256: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub config: ExperimentConfig,
    pub summary: Value,
    pub outputs: Vec<OutputFile>,
}

/// Exit status for an error: 2 for configuration and input problems, 3 for
/// violated contracts.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidArgument(_) | Error::Parse { .. } | Error::Json(_) | Error::Io(_) => 2,
        Error::VertexOutOfRange { .. }
        | Error::InvalidLabels(_)
        | Error::BudgetExhausted { .. }
        | Error::ContractViolation(_) => 3,
    }
}

/// One-line JSON error record.
pub fn error_record(e: &Error) -> String {
    let kind = match e {
        Error::InvalidArgument(_) => "invalid_argument",
        Error::VertexOutOfRange { .. } => "vertex_out_of_range",
        Error::InvalidLabels(_) => "invalid_labels",
        Error::BudgetExhausted { .. } => "budget_exhausted",
        Error::ContractViolation(_) => "contract_violation",
        Error::Parse { .. } => "parse",
        Error::Io(_) => "io",
        Error::Json(_) => "json",
    };
    json!({ "error": kind, "message": e.to_string(), "exit_code": exit_code(e) }).to_string()
}

struct Outputs {
    dir: PathBuf,
    files: Vec<OutputFile>,
}

impl Outputs {
    fn create(dir: &Path) -> Result<Self> {
        fs::create_dir_all(dir)?;
        Ok(Self {
            dir: dir.to_path_buf(),
            files: Vec::new(),
        })
    }

    fn write(&mut self, name: &str, bytes: &[u8]) -> Result<()> {
        fs::write(self.dir.join(name), bytes)?;
        self.files.push(OutputFile {
            file: name.to_string(),
            sha256: hex::encode(Sha256::digest(bytes)),
        });
        Ok(())
    }

    fn write_with(&mut self, name: &str, f: impl FnOnce(&mut Vec<u8>) -> Result<()>) -> Result<()> {
        let mut buf = Vec::new();
        f(&mut buf)?;
        self.write(name, &buf)
    }

    fn finish(self, config: &ExperimentConfig, summary: Value) -> Result<RunReport> {
        let report = RunReport {
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            config: config.clone(),
            summary,
            outputs: self.files,
        };
        let mut text = serde_json::to_string_pretty(&report)?;
        text.push('\n');
        fs::write(self.dir.join("manifest.json"), text)?;
        Ok(report)
    }
}

/// Run one experiment. Identical configurations produce byte-identical files.
pub fn run(config: &ExperimentConfig) -> Result<RunReport> {
    config.validate()?;
    let mut out = Outputs::create(&config.out)?;
    let summary = match config.command {
        Command::SampleQuad => sample_quad(config, &mut out)?,
        Command::TwoPoint => two_point(config, &mut out)?,
        Command::BrownianMap => brownian_map_run(config, &mut out)?,
        Command::BrownianPlane => brownian_plane_run(config, &mut out)?,
        Command::Oracle => oracle(config, &mut out)?,
    };
    out.finish(config, summary)
}

fn replica_name(stem: &str, k: usize, ext: &str) -> String {
    format!("{stem}_{k:04}.{ext}")
}

fn sample_quad(c: &ExperimentConfig, out: &mut Outputs) -> Result<Value> {
    let maps: Vec<cvs::SampledQuadrangulation> = (0..c.replicas)
        .into_par_iter()
        .map(|k| {
            let mut r = rng::stream(c.seed, tag::TREE, k as u64);
            let q = cvs::sample_quadrangulation(c.n, &mut r)?;
            if let IdentityCheck::Fails { vertex, expected, distance } = cvs::verify_distance_identity(&q.tree, &q.map)? {
                return Err(Error::ContractViolation(format!(
                    "replica {k}: vertex {vertex} has distance {distance} to the pointed vertex, label predicts {expected}"
                )));
            }
            Ok(q)
        })
        .collect::<Result<_>>()?;
    let mut rows = Vec::new();
    for (k, q) in maps.iter().enumerate() {
        let pointed = q.map.pointed().ok_or_else(|| Error::ContractViolation("encoded map without ∂".into()))?;
        let profile = q.map.distance_profile(pointed);
        out.write_with(&replica_name("quad", k, "edges"), |b| q.map.write_edge_list(b))?;
        out.write(&replica_name("tree", k, "txt"), q.tree.to_text().as_bytes())?;
        out.write_with(&replica_name("profile", k, "csv"), |b| profile.write_csv(b))?;
        rows.push(json!({
            "replica": k,
            "vertices": q.map.n_vertices(),
            "edges": q.map.n_edges(),
            "faces": q.map.faces(),
            "radius_from_pointed": profile.counts.len() - 1,
        }));
    }
    Ok(json!({ "maps": rows }))
}

fn two_point(c: &ExperimentConfig, out: &mut Outputs) -> Result<Value> {
    let samples: Vec<_> = (0..c.replicas)
        .into_par_iter()
        .map(|k| {
            let mut r = rng::stream(c.seed, tag::TREE, k as u64);
            let q = cvs::sample_quadrangulation(c.n, &mut r)?;
            q.map.two_point_sample(&mut rng::stream(c.seed, tag::MAP_POINTS, k as u64))
        })
        .collect::<Result<_>>()?;
    let mut csv = String::from("replica,v1,v2,graph_distance,rescaled\n");
    for (k, s) in samples.iter().enumerate() {
        csv.push_str(&format!("{k},{},{},{},{}\n", s.v1, s.v2, s.graph_distance, s.rescaled));
    }
    out.write("two_point.csv", csv.as_bytes())?;
    let values: Vec<f64> = samples.iter().map(|s| s.rescaled).collect();
    Ok(describe(&values))
}

fn describe(values: &[f64]) -> Value {
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let q = |p: f64| sorted[((p * (sorted.len() - 1) as f64).round() as usize).min(sorted.len() - 1)];
    let sd = if values.len() > 1 { stats::variance(values).sqrt() } else { 0.0 };
    json!({
        "count": values.len(),
        "mean": stats::mean(values),
        "std": sd,
        "q10": q(0.1),
        "median": q(0.5),
        "q90": q(0.9),
    })
}

/// Snake of replica `k`: excursion and labels from their own streams.
pub fn replica_snake(seed: u64, m: usize, k: usize) -> Result<SnakeGrid> {
    let x = sample_excursion(m, &mut rng::stream(seed, tag::EXCURSION, k as u64))?;
    Ok(build_snake(x, &mut rng::stream(seed, tag::SNAKE, k as u64)))
}

/// Log-log fit range for ball volumes, as fractions of the source's radius.
pub const VOLUME_FIT_RANGE: (f64, f64) = (0.05, 0.3);
pub const VOLUME_FIT_POINTS: usize = 16;

struct SnakeReplica {
    snake: SnakeGrid,
    source: usize,
    field: brownian_map::MetricField,
    volume: brownian_map::VolumeCurve,
    geodesics: Vec<Vec<usize>>,
    pair: (usize, usize, f64),
}

fn brownian_map_run(c: &ExperimentConfig, out: &mut Outputs) -> Result<Value> {
    let replicas: Vec<SnakeReplica> = (0..c.replicas)
        .into_par_iter()
        .map(|k| {
            let snake = replica_snake(c.seed, c.m, k)?;
            let mut pts = rng::stream(c.seed, tag::SNAKE_POINTS, k as u64);
            let source = match c.source {
                Source::RhoStar => snake.rho_star(),
                Source::Uniform => pts.random_range(0..c.m),
            };
            let field = snake.metric_field(source);
            if c.source == Source::RhoStar {
                let z_star = snake.z_star();
                for (i, (&d, &z)) in field.dist.iter().zip(snake.z()).enumerate() {
                    if (d - (z - z_star)).abs() > 1e-9 {
                        return Err(Error::ContractViolation(format!(
                            "replica {k}: D(rho_star, {i}) = {d} but Z - Z_* = {}",
                            z - z_star
                        )));
                    }
                }
            }
            let volume = brownian_map::VolumeCurve::new(&field);
            let geodesics = (0..GEODESICS_PER_SNAKE)
                .map(|_| snake.simple_geodesic(pts.random_range(0..c.m)))
                .collect();
            let (u1, u2) = (pts.random_range(0..c.m), pts.random_range(0..c.m));
            let d = snake.distance(u1, u2);
            Ok(SnakeReplica {
                snake,
                source,
                field,
                volume,
                geodesics,
                pair: (u1, u2, d),
            })
        })
        .collect::<Result<_>>()?;

    let mut pairs = String::from("replica,u1,u2,D\n");
    let mut slopes = String::from("replica,source,radius,slope\n");
    let mut slope_values = Vec::new();
    for (k, r) in replicas.iter().enumerate() {
        let s = &r.snake;
        out.write_with(&replica_name("snake", k, "csv"), |b| s.write_csv(b))?;
        out.write_with(&replica_name("metric", k, "csv"), |b| r.field.write_csv(s.representatives(), b))?;
        out.write_with(&replica_name("volume", k, "csv"), |b| r.volume.write_csv(200, b))?;
        let mut g = String::from("geodesic,step,index,Z\n");
        for (j, path) in r.geodesics.iter().enumerate() {
            for (step, &i) in path.iter().enumerate() {
                g.push_str(&format!("{j},{step},{i},{}\n", s.z()[i]));
            }
        }
        out.write(&replica_name("geodesics", k, "csv"), g.as_bytes())?;
        let radius = r.volume.radius();
        let slope = r.volume.log_log_slope(
            VOLUME_FIT_RANGE.0 * radius,
            VOLUME_FIT_RANGE.1 * radius,
            VOLUME_FIT_POINTS,
        );
        slope_values.push(slope);
        slopes.push_str(&format!("{k},{},{radius},{slope}\n", r.source));
        pairs.push_str(&format!("{k},{},{},{}\n", r.pair.0, r.pair.1, r.pair.2));
    }
    out.write("volume_slopes.csv", slopes.as_bytes())?;
    out.write("two_point_continuum.csv", pairs.as_bytes())?;
    let distances: Vec<f64> = replicas.iter().map(|r| r.pair.2).collect();
    Ok(json!({
        "source": c.source,
        "mean_volume_slope": stats::mean(&slope_values),
        "volume_fit_range": [VOLUME_FIT_RANGE.0, VOLUME_FIT_RANGE.1],
        "two_point": describe(&distances),
    }))
}

/// Lambdas and radius fractions of the exported Laplace comparison.
const LAPLACE_LAMBDAS: [f64; 4] = [0.25, 0.5, 1.0, 2.0];
const LAPLACE_RADII: [f64; 4] = [0.25, 0.5, 0.75, 1.0];

fn brownian_plane_run(c: &ExperimentConfig, out: &mut Outputs) -> Result<Value> {
    let sketch = plane::sample_plane_sketch(c.grid_t, c.m, c.seed)?;
    let d = sketch.truncated_distances(sketch.origin(), None);
    let mut csv = String::from("index,time,Y,Z,representative,D\n");
    for k in 0..sketch.len() {
        csv.push_str(&format!(
            "{k},{},{},{},{},{}\n",
            sketch.time(k),
            sketch.y()[k],
            sketch.z()[k],
            sketch.representatives()[k],
            d[k]
        ));
    }
    out.write("plane_sketch.csv", csv.as_bytes())?;

    let paths: Vec<HullProcessPath> = (0..c.replicas)
        .into_par_iter()
        .map(|k| plane::simulate_hull_process(c.r_max, &c.fidelity, &mut rng::stream(c.seed, tag::HULL, k as u64)))
        .collect::<Result<_>>()?;
    let mut w = String::from("replica,r,W\n");
    for (k, p) in paths.iter().enumerate() {
        for j in 0..=HULL_CURVE_POINTS {
            let r = c.r_max * j as f64 / HULL_CURVE_POINTS as f64;
            w.push_str(&format!("{k},{r},{}\n", p.w(r)));
        }
    }
    out.write("hull_w.csv", w.as_bytes())?;
    let radii: Vec<f64> = LAPLACE_RADII.iter().map(|f| f * c.r_max).collect();
    let rows = plane::laplace_comparison(&paths, &LAPLACE_LAMBDAS, &radii)?;
    out.write_with("laplace.csv", |b| plane::write_laplace_csv(&rows, b))?;
    let fidelity = FidelityReport::new(&c.fidelity, c.r_max, &paths);
    let mut text = serde_json::to_string_pretty(&fidelity)?;
    text.push('\n');
    out.write("fidelity.json", text.as_bytes())?;
    let worst = rows
        .iter()
        .map(|r| (r.monte_carlo / r.closed_form - 1.0).abs())
        .fold(0.0, f64::max);
    Ok(json!({
        "window_points": sketch.len(),
        "paths": paths.len(),
        "max_relative_laplace_error": worst,
        "fidelity": fidelity,
    }))
}

/// Number of rooted quadrangulations with `n` faces,
/// `2 · 3^n (2n)! / (n! (n + 2)!)`.
pub fn rooted_quadrangulation_count(n: usize) -> u64 {
    // Catalan(n) · 3^n · 2 / (n + 2), kept exact.
    let mut catalan: u64 = 1;
    for k in 0..n as u64 {
        catalan = catalan * 2 * (2 * k + 1) / (k + 2);
    }
    2 * 3u64.pow(n as u32) * catalan / (n as u64 + 2)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EnumerationRow {
    pub n: usize,
    pub trees: usize,
    pub distinct_maps: usize,
    pub expected: u64,
    pub identity_failures: usize,
    pub bound_pairs: u64,
    pub bound_violations: u64,
}

/// Encode every well-labeled tree with `n` edges and check the counts, the
/// distance identity and the pairwise distance bound on every instance.
pub fn enumeration_oracle(n: usize) -> Result<EnumerationRow> {
    let trees = enumerate_well_labeled(n)?;
    let mut codes = HashSet::new();
    let mut row = EnumerationRow {
        n,
        trees: trees.len(),
        distinct_maps: 0,
        expected: rooted_quadrangulation_count(n),
        identity_failures: 0,
        bound_pairs: 0,
        bound_violations: 0,
    };
    for t in &trees {
        let q = cvs::encode(t)?;
        codes.insert(q.canonical_code());
        if !cvs::verify_distance_identity(t, &q)?.holds() {
            row.identity_failures += 1;
        }
        let bound = cvs::DistanceBound::new(t);
        for v in 0..=n {
            let d = q.bfs_distances(v);
            for w in 0..=n {
                row.bound_pairs += 1;
                if u64::from(d[w]) > bound.bound(v, w)? {
                    row.bound_violations += 1;
                }
            }
        }
    }
    row.distinct_maps = codes.len();
    Ok(row)
}

/// Largest `|D_dijkstra - D_relaxation|` over all pairs of one snake.
pub fn metric_oracle(s: &SnakeGrid) -> f64 {
    let all = brownian_map::relaxation_metric(s);
    let mut worst: f64 = 0.0;
    for (i, row) in all.iter().enumerate() {
        let f = s.metric_field(i);
        for (a, b) in f.dist.iter().zip(row) {
            worst = worst.max((a - b).abs());
        }
    }
    worst
}

/// Tolerance of the chain-infimum oracle.
pub const METRIC_ORACLE_TOLERANCE: f64 = 1e-10;

fn oracle(c: &ExperimentConfig, out: &mut Outputs) -> Result<Value> {
    let rows: Vec<EnumerationRow> = (1..=c.n).map(enumeration_oracle).collect::<Result<_>>()?;
    let metric: Vec<f64> = (0..c.replicas)
        .into_par_iter()
        .map(|k| Ok(metric_oracle(&replica_snake(c.seed, c.m, k)?)))
        .collect::<Result<_>>()?;
    let worst = metric.iter().cloned().fold(0.0, f64::max);
    let report = json!({
        "enumeration": rows,
        "metric": { "m": c.m, "snakes": metric.len(), "max_abs_difference": worst },
    });
    let mut text = serde_json::to_string_pretty(&report)?;
    text.push('\n');
    out.write("oracle.json", text.as_bytes())?;
    for r in &rows {
        if r.distinct_maps as u64 != r.expected || r.distinct_maps != r.trees {
            return Err(Error::ContractViolation(format!(
                "n = {}: {} trees gave {} distinct maps, expected {}",
                r.n, r.trees, r.distinct_maps, r.expected
            )));
        }
        if r.identity_failures > 0 || r.bound_violations > 0 {
            return Err(Error::ContractViolation(format!(
                "n = {}: {} distance identity failures, {} bound violations",
                r.n, r.identity_failures, r.bound_violations
            )));
        }
    }
    if worst > METRIC_ORACLE_TOLERANCE {
        return Err(Error::ContractViolation(format!(
            "shortest paths differ from the relaxation oracle by {worst}"
        )));
    }
    Ok(report)
}

/// Read a map written by `sample-quad` and its profile from the pointed vertex.
pub fn load_map(path: &Path) -> Result<(PlanarMapGraph, Option<DistanceProfile>)> {
    let file = fs::File::open(path)?;
    let map = PlanarMapGraph::read_edge_list(std::io::BufReader::new(file))?;
    let profile = map.pointed().map(|p| map.distance_profile(p));
    Ok((map, profile))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(command: Command, dir: &Path) -> ExperimentConfig {
        let mut c = ExperimentConfig::new(command, dir);
        c.seed = 5;
        c
    }

    fn read(dir: &Path, name: &str) -> String {
        fs::read_to_string(dir.join(name)).unwrap()
    }

    #[test]
    fn quadrangulation_counts() {
        let counts: Vec<u64> = (1..=5).map(rooted_quadrangulation_count).collect();
        assert_eq!(counts, vec![2, 9, 54, 378, 2916]);
    }

    #[test]
    fn oracle_reports_54_at_n3() {
        let dir = tempfile::tempdir().unwrap();
        let mut c = config(Command::Oracle, dir.path());
        c.m = 30;
        let report = run(&c).unwrap();
        let rows = &report.summary["enumeration"];
        assert_eq!(rows[2]["distinct_maps"], 54);
        assert_eq!(rows[2]["expected"], 54);
        assert!(read(dir.path(), "oracle.json").contains("\"distinct_maps\": 54"));
        assert!(report.summary["metric"]["max_abs_difference"].as_f64().unwrap() < 1e-10);
    }

    #[test]
    fn reruns_are_byte_identical() {
        let a = tempfile::tempdir().unwrap();
        let b = tempfile::tempdir().unwrap();
        for command in [Command::SampleQuad, Command::TwoPoint, Command::BrownianMap, Command::BrownianPlane] {
            let mut c = config(command, a.path());
            c.n = 200;
            c.m = 200;
            c.replicas = 3;
            c.fidelity.dt = 1e-2;
            let first = run(&c).unwrap();
            c.out = b.path().to_path_buf();
            let second = run(&c).unwrap();
            assert_eq!(first.outputs, second.outputs);
            assert!(!first.outputs.is_empty());
            for f in &first.outputs {
                assert_eq!(fs::read(a.path().join(&f.file)).unwrap(), fs::read(b.path().join(&f.file)).unwrap());
            }
            let strip = |s: String| s.replace(&a.path().display().to_string(), "").replace(&b.path().display().to_string(), "");
            assert_eq!(strip(read(a.path(), "manifest.json")), strip(read(b.path(), "manifest.json")));
        }
    }

    #[test]
    fn different_seeds_differ() {
        let a = tempfile::tempdir().unwrap();
        let mut c = config(Command::TwoPoint, a.path());
        c.n = 100;
        c.replicas = 20;
        let first = run(&c).unwrap();
        c.seed = 6;
        let second = run(&c).unwrap();
        assert_ne!(first.outputs, second.outputs);
    }

    #[test]
    fn sample_quad_files_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let mut c = config(Command::SampleQuad, dir.path());
        c.n = 300;
        c.replicas = 2;
        let report = run(&c).unwrap();
        let names: Vec<&str> = report.outputs.iter().map(|f| f.file.as_str()).collect();
        assert_eq!(
            names,
            ["quad_0000.edges", "tree_0000.txt", "profile_0000.csv", "quad_0001.edges", "tree_0001.txt", "profile_0001.csv"]
        );
        let (map, profile) = load_map(&dir.path().join("quad_0001.edges")).unwrap();
        assert_eq!(map.n_vertices(), 302);
        assert_eq!(map.faces(), Some(300));
        let mut buf = Vec::new();
        profile.unwrap().write_csv(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), read(dir.path(), "profile_0001.csv"));
    }

    #[test]
    fn brownian_map_outputs() {
        let dir = tempfile::tempdir().unwrap();
        let mut c = config(Command::BrownianMap, dir.path());
        c.m = 300;
        c.replicas = 2;
        c.source = Source::Uniform;
        let report = run(&c).unwrap();
        assert_eq!(report.summary["source"], "uniform");
        assert!(read(dir.path(), "metric_0001.csv").starts_with("representative,D\n"));
        assert!(read(dir.path(), "geodesics_0000.csv").starts_with("geodesic,step,index,Z\n"));
        assert_eq!(read(dir.path(), "two_point_continuum.csv").lines().count(), 3);
    }

    #[test]
    fn brownian_plane_outputs() {
        let dir = tempfile::tempdir().unwrap();
        let mut c = config(Command::BrownianPlane, dir.path());
        c.m = 50;
        c.replicas = 20;
        c.fidelity.dt = 1e-2;
        run(&c).unwrap();
        assert_eq!(read(dir.path(), "plane_sketch.csv").lines().count(), 102);
        assert_eq!(read(dir.path(), "hull_w.csv").lines().count(), 1 + 20 * 65);
        assert_eq!(read(dir.path(), "laplace.csv").lines().count(), 17);
        let fidelity: Value = serde_json::from_str(&read(dir.path(), "fidelity.json")).unwrap();
        assert_eq!(fidelity["params"]["dt"], 1e-2);
        assert_eq!(fidelity["paths"], 20);
    }

    #[test]
    fn config_errors_map_to_exit_code_2() {
        let dir = tempfile::tempdir().unwrap();
        let bad = [
            ExperimentConfig { n: 0, ..config(Command::SampleQuad, dir.path()) },
            ExperimentConfig { n: 7, ..config(Command::Oracle, dir.path()) },
            ExperimentConfig { m: 1, ..config(Command::BrownianMap, dir.path()) },
            ExperimentConfig { replicas: 0, ..config(Command::TwoPoint, dir.path()) },
            ExperimentConfig { r_max: -1.0, ..config(Command::BrownianPlane, dir.path()) },
            ExperimentConfig { grid_t: f64::NAN, ..config(Command::BrownianPlane, dir.path()) },
        ];
        for c in bad {
            let e = run(&c).unwrap_err();
            assert_eq!(exit_code(&e), 2, "{c:?}");
            let record: Value = serde_json::from_str(&error_record(&e)).unwrap();
            assert_eq!(record["error"], "invalid_argument");
            assert_eq!(record["exit_code"], 2);
        }
        assert_eq!(exit_code(&Error::ContractViolation("x".into())), 3);
    }

    #[test]
    fn source_parsing() {
        assert_eq!("rho_star".parse::<Source>().unwrap(), Source::RhoStar);
        assert_eq!("uniform".parse::<Source>().unwrap(), Source::Uniform);
        assert!("center".parse::<Source>().is_err());
        assert_eq!(Source::Uniform.to_string(), "uniform");
    }
}
