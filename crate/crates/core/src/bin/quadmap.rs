use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use quadmap::plane::FidelityParams;
use quadmap::runner::{self, Command, ExperimentConfig, Source};

#[derive(Parser)]
#[command(name = "quadmap", version, about = "Seeded experiments on random quadrangulations and Brownian surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Sample quadrangulations; write edge lists, trees and distance profiles.
    SampleQuad(Common),
    /// Rescaled distances between two uniform vertices, one map per replica.
    TwoPoint(Common),
    /// Snake, metric field, ball volumes and simple geodesics.
    BrownianMap(Common),
    /// Plane sketch, hull-volume process and Laplace comparison.
    BrownianPlane(Common),
    /// Exhaustive small-n enumeration and brute-force metric checks.
    Oracle(Common),
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    replicas: Option<usize>,
    #[arg(long, default_value = "out")]
    out: PathBuf,
    #[arg(long = "grid-T")]
    grid_t: Option<f64>,
    #[arg(long)]
    rmax: Option<f64>,
    #[arg(long = "fidelity-x0")]
    fidelity_x0: Option<f64>,
    #[arg(long = "fidelity-dt")]
    fidelity_dt: Option<f64>,
    /// rho_star or uniform.
    #[arg(long, default_value = "rho_star", value_parser = parse_source)]
    source: Source,
}

fn parse_source(s: &str) -> Result<Source, String> {
    s.parse().map_err(|e: quadmap::Error| e.to_string())
}

impl Common {
    fn into_config(self, command: Command) -> ExperimentConfig {
        let mut c = ExperimentConfig::new(command, self.out);
        c.seed = self.seed;
        c.source = self.source;
        c.n = self.n.unwrap_or(c.n);
        c.m = self.m.unwrap_or(c.m);
        c.replicas = self.replicas.unwrap_or(c.replicas);
        c.grid_t = self.grid_t.unwrap_or(c.grid_t);
        c.r_max = self.rmax.unwrap_or(c.r_max);
        let defaults = FidelityParams::default();
        c.fidelity.x0 = self.fidelity_x0.unwrap_or(defaults.x0);
        c.fidelity.dt = self.fidelity_dt.unwrap_or(defaults.dt);
        c
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match cli.command {
        Cmd::SampleQuad(a) => a.into_config(Command::SampleQuad),
        Cmd::TwoPoint(a) => a.into_config(Command::TwoPoint),
        Cmd::BrownianMap(a) => a.into_config(Command::BrownianMap),
        Cmd::BrownianPlane(a) => a.into_config(Command::BrownianPlane),
        Cmd::Oracle(a) => a.into_config(Command::Oracle),
    };
    match runner::run(&config) {
        Ok(report) => {
            println!("{}", serde_json::to_string(&report.summary).unwrap_or_default());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{}", runner::error_record(&e));
            ExitCode::from(runner::exit_code(&e) as u8)
        }
    }
}
