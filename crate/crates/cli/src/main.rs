//! Command-line front end: run a case suite, validate a config, or print a
//! single capacity.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use slewing_core::{emit_outputs, load_config, run_cases, static_capacity, BoundaryCondition, CaseDefinition};

#[derive(Parser)]
#[command(name = "slewing", version, about = "Axial stiffness, capacity and contact-ellipse truncation of slewing bearings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BcChoice {
    Clamped,
    Unclamped,
    Both,
}

impl BcChoice {
    fn admits(self, bc: BoundaryCondition) -> bool {
        match self {
            BcChoice::Both => true,
            BcChoice::Clamped => bc == BoundaryCondition::Clamped,
            BcChoice::Unclamped => bc == BoundaryCondition::Unclamped,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run the suite and write summary, curves and optional plots.
    Run {
        config: PathBuf,
        /// Output directory.
        #[arg(long, default_value = "out")]
        out: PathBuf,
        /// Comma-separated case ids, e.g. `1,3,5`.
        #[arg(long, value_delimiter = ',')]
        cases: Option<Vec<u32>>,
        #[arg(long, value_enum, default_value = "both")]
        bc: BcChoice,
        /// Sweep steps; overrides the config.
        #[arg(long)]
        steps: Option<usize>,
        /// Also write SVG plots.
        #[arg(long)]
        svg: bool,
        /// Worker threads; 0 uses all cores, 1 runs serially.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Parse and check a config without running it.
    Validate { config: PathBuf },
    /// Print the static axial capacity of one case.
    Capacity {
        config: PathBuf,
        #[arg(long = "case")]
        case: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cmd: Command) -> Result<ExitCode> {
    match cmd {
        Command::Run {
            config,
            out,
            cases,
            bc,
            steps,
            svg,
            jobs,
        } => run(config, out, cases, bc, steps, svg, jobs),
        Command::Validate { config } => {
            let suite = load_config(&config).with_context(|| format!("loading {}", config.display()))?;
            for c in &suite.cases {
                println!("{}", c.label());
            }
            println!("{}: {} runs valid", config.display(), suite.cases.len());
            Ok(ExitCode::SUCCESS)
        }
        Command::Capacity { config, case } => {
            let suite = load_config(&config).with_context(|| format!("loading {}", config.display()))?;
            let Some(def) = suite.cases.iter().find(|c| c.case_id == case) else {
                bail!("case {case} is not defined in {}", config.display());
            };
            let (c0a, p) = static_capacity(def)?;
            println!("case {case}: C0a = {:.1} kN ({c0a} N)", c0a / 1e3);
            println!(
                "  axial displacement {:.6} mm, contact angle {:.3} deg, Q = {:.1} N, p0 = {:.1} MPa",
                p.axial_disp,
                p.contact_angle.to_degrees(),
                p.contact_force,
                p.hertz.peak_pressure_p0
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run(
    config: PathBuf,
    out: PathBuf,
    cases: Option<Vec<u32>>,
    bc: BcChoice,
    steps: Option<usize>,
    svg: bool,
    jobs: usize,
) -> Result<ExitCode> {
    let mut suite = load_config(&config).with_context(|| format!("loading {}", config.display()))?;
    if let Some(n) = steps {
        if n < 2 {
            bail!("--steps must be at least 2");
        }
        suite.settings.steps = n;
    }
    if let Some(ids) = &cases {
        for id in ids {
            if !suite.cases.iter().any(|c| c.case_id == *id) {
                bail!("case {id} is not defined in {}", config.display());
            }
        }
    }
    let selected: Vec<CaseDefinition> = suite
        .cases
        .into_iter()
        .filter(|c| cases.as_ref().is_none_or(|ids| ids.contains(&c.case_id)))
        .filter(|c| bc.admits(c.boundary_condition))
        .collect();
    if selected.is_empty() {
        println!("no cases selected");
        return Ok(ExitCode::SUCCESS);
    }

    let start = Instant::now();
    let report = run_cases(&selected, &suite.settings, jobs);
    let manifest = emit_outputs(&report.results, &report.failures, &out, svg)
        .with_context(|| format!("writing outputs to {}", out.display()))?;

    print!("{}", slewing_core::report::summary_text(&report.results));
    println!(
        "{} runs in {:.2} s, {} files written to {}",
        selected.len(),
        start.elapsed().as_secs_f64(),
        manifest.files.len(),
        out.display()
    );
    for f in &report.failures {
        eprintln!("FAILED {}: {}", f.label, f.message);
    }
    Ok(if report.is_success() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}
