//! Command-line surface: containment checks, resolution shapes,
//! Hilbert-Burch data, point listings and witness checks on builtin or
//! file-supplied ideals.
//!
//! Exit codes: 0 success, 1 error, 2 method disagreement under `--method
//! both`, 3 criterion refused in characteristic 3.

use clap::{Args, Parser, Subcommand};
use std::process::ExitCode;
use sympow::driver::{
    run_check, run_points, run_resolve, run_syzygy, run_witness, CheckMethod, CheckStatus, Report,
};
use sympow::error::Error;

#[derive(Parser)]
#[command(
    name = "sympow",
    version,
    about = "Decides the containment of the symbolic cube in the ordinary square for 3-generated planar point ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct TargetArgs {
    /// builtin name (fermat:<n>, klein, star3) or path to an ideal file
    target: String,
    /// coefficient field: Q, GF(p), GF(p)[c] or Q[c]; builtins have defaults
    #[arg(long)]
    field: Option<String>,
    /// emit the machine-readable report
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Run the containment check I^(m) subset of I^r
    Check {
        #[command(flatten)]
        target: TargetArgs,
        /// symbolic exponent
        #[arg(long, default_value_t = 3)]
        m: u32,
        /// ordinary exponent
        #[arg(long, default_value_t = 2)]
        r: u32,
        /// criterion | oracle | both | prop6
        #[arg(long, default_value = "both")]
        method: String,
    },
    /// Compute the minimal free resolution shape of I^power
    Resolve {
        #[command(flatten)]
        target: TargetArgs,
        /// which power to resolve (2 or 3)
        #[arg(long, default_value_t = 3)]
        power: u32,
    },
    /// Show the Hilbert-Burch presentation of the ideal
    Syzygy {
        #[command(flatten)]
        target: TargetArgs,
    },
    /// List configuration points with their incidence summary
    Points {
        #[command(flatten)]
        target: TargetArgs,
    },
    /// Check the product of the configuration lines against I^(3) and I^2
    Witness {
        #[command(flatten)]
        target: TargetArgs,
    },
}

fn print_check(report: &Report) {
    println!("target: {} over {}", report.target, report.field);
    println!("containment I^({}) in I^{}:", report.m, report.r);
    for res in &report.results {
        let verdict = if res.contained {
            "CONTAINED"
        } else {
            "NOT contained"
        };
        let method = serde_json::to_value(res.method)
            .ok()
            .and_then(|v| v.as_str().map(|s| s.to_string()))
            .unwrap_or_default();
        println!("  [{method}] {verdict}");
        if let Some(w) = &res.witness {
            println!("    witness: {w}");
        }
        if let Some(n) = &res.note {
            println!("    note: {n}");
        }
    }
    if let Some(p6) = &report.prop6 {
        println!(
            "  prop6: condition1={} condition2={} decomposition={:?} canonical={}",
            p6.condition1, p6.condition2, p6.decomposition_dims, p6.canonical
        );
    }
    if let Some(agree) = report.agreement {
        println!("  methods agree: {agree}");
    }
    for (k, v) in &report.timings_ms {
        println!("  {k}: {v} ms");
    }
}

fn print_report(report: &Report) {
    println!("target: {} over {}", report.target, report.field);
    if let Some(b) = &report.betti {
        println!("resolution of I^{}:", b.power);
        println!("  ranks: {:?}", b.shape.ranks);
        for (i, tw) in b.shape.twists.iter().enumerate() {
            println!("  step {i} twists: {tw:?}");
        }
        println!(
            "  last map matches the constructed Y: {}",
            b.last_map_equivalent
        );
    }
    if let Some(s) = &report.syzygy {
        println!(
            "Hilbert-Burch data: d = {}, column degrees d0 = {}, d1 = {}",
            s.d, s.d0, s.d1
        );
        for (i, p) in s.p_col.iter().enumerate() {
            println!("  P{} = {p}", i + 1);
        }
        for (i, q) in s.q_col.iter().enumerate() {
            println!("  Q{} = {q}", i + 1);
        }
        for (i, m) in s.minors.iter().enumerate() {
            println!("  minor {} = {m}", i + 1);
        }
        println!(
            "  change of basis (gens over minors): {:?}",
            s.change_of_basis
        );
    }
    if let Some(p) = &report.points {
        println!(
            "{} points, multiplicity {}; line counts: {:?}",
            p.count, p.multiplicity, p.incidence
        );
        for pt in &p.points {
            println!("  {pt}");
        }
        if let Some(id) = p.pair_count_identity {
            println!("  pair-count identity holds: {id}");
        }
    }
    if let Some(w) = &report.witness_info {
        for entry in &w.products {
            println!(
                "{} ({} lines, degree {}): in I^(3): {}, in I^2: {}",
                entry.label, entry.lines, entry.witness_degree, entry.in_symbolic, entry.in_ordinary
            );
        }
    }
    for (k, v) in &report.timings_ms {
        println!("  {k}: {v} ms");
    }
}

fn emit(report: &Report, json: bool, human: impl Fn(&Report)) {
    if json {
        println!("{}", report.to_json());
    } else {
        human(report);
    }
}

fn run() -> Result<u8, Error> {
    let cli = Cli::parse();
    match cli.command {
        Command::Check {
            target,
            m,
            r,
            method,
        } => {
            let method = CheckMethod::parse(&method)?;
            let (report, status) =
                run_check(&target.target, target.field.as_deref(), m, r, method)?;
            emit(&report, target.json, print_check);
            Ok(match status {
                CheckStatus::Ok => 0,
                CheckStatus::Disagreement => 2,
            })
        }
        Command::Resolve { target, power } => {
            let report = run_resolve(&target.target, target.field.as_deref(), power)?;
            emit(&report, target.json, print_report);
            Ok(0)
        }
        Command::Syzygy { target } => {
            let report = run_syzygy(&target.target, target.field.as_deref())?;
            emit(&report, target.json, print_report);
            Ok(0)
        }
        Command::Points { target } => {
            let report = run_points(&target.target, target.field.as_deref())?;
            emit(&report, target.json, print_report);
            Ok(0)
        }
        Command::Witness { target } => {
            let report = run_witness(&target.target, target.field.as_deref())?;
            emit(&report, target.json, print_report);
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(Error::CharacteristicThree) => {
            eprintln!("error: {}", Error::CharacteristicThree);
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
