use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qsemigroup::cli::{self, SuiteOptions};

#[derive(Parser)]
#[command(name = "qsemigroup", version, about = "Exact checks for quantum semigroups built from finite *-algebras")]
struct Args {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a named verification suite ("all" runs every suite)
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(cli::SUITES))]
        suite: String,
        /// Z<n> or a file holding a group table
        #[arg(long)]
        group: Option<String>,
        /// Number of free-product copies
        #[arg(long, default_value_t = 2)]
        copies: usize,
        /// Grid step for the character solver
        #[arg(long, default_value_t = 0.1)]
        step: f64,
        /// Residual tolerance for the character solver
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        /// Sample count for the function model (0 picks the suite default)
        #[arg(long, default_value_t = 0)]
        samples: usize,
        #[arg(long, default_value_t = 20100101)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Find the characters of a presentation file numerically
    SolveCharacters {
        file: PathBuf,
        #[arg(long, default_value_t = 0.1)]
        step: f64,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        /// Half-width of the search box in each real coordinate
        #[arg(long, default_value_t = 1.5)]
        bound: f64,
        #[arg(long)]
        json: bool,
    },
    /// Parse a presentation file and print it in canonical form
    PrintPresentation { file: PathBuf },
}

fn read(file: &PathBuf) -> Result<String, ExitCode> {
    std::fs::read_to_string(file).map_err(|e| {
        eprintln!("error: {}: {e}", file.display());
        ExitCode::from(2)
    })
}

fn presentation(file: &PathBuf) -> Result<qsemigroup::Presentation, ExitCode> {
    cli::parse_presentation(&read(file)?).map_err(|e| {
        eprintln!("error: {}: {e}", file.display());
        ExitCode::from(2)
    })
}

fn run(args: Args) -> Result<ExitCode, ExitCode> {
    match args.cmd {
        Cmd::Verify { suite, group, copies, step, tol, samples, seed, json } => {
            let group_parsed = match &group {
                Some(g) => Some(cli::parse_group(g).map_err(|e| {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                })?),
                None => None,
            };
            let opts = SuiteOptions { group: group_parsed, group_name: group, copies, step, tol, samples, seed };
            let rep = cli::run_suite(&suite, &opts).map_err(|e| {
                eprintln!("error: {e}");
                ExitCode::from(2)
            })?;
            if json {
                println!("{}", serde_json::to_string_pretty(&rep).expect("serializable"));
            } else {
                print!("{}", rep.to_text());
            }
            Ok(ExitCode::from(if rep.ok() { 0 } else { 1 }))
        }
        Cmd::SolveCharacters { file, step, tol, bound, json } => {
            let pres = presentation(&file)?;
            let rep = cli::solve_characters(&pres, bound, step, tol).map_err(|e| {
                eprintln!("error: {e}");
                ExitCode::from(2)
            })?;
            if json {
                println!("{}", serde_json::to_string_pretty(&rep).expect("serializable"));
            } else {
                println!("coordinates: {}", rep.coordinates.join(", "));
                println!(
                    "grid points {}, coarse hits {}, solutions {}, dropped {}",
                    rep.grid_points,
                    rep.coarse_hits,
                    rep.solutions.len(),
                    rep.dropped
                );
                println!(
                    "component_count = {}, isolated = {} (merge radius {})",
                    rep.components.component_count, rep.components.isolated_count, rep.components.merge_radius
                );
                for (k, c) in rep.components.components.iter().enumerate() {
                    let rep_pt: Vec<String> = c.representative.iter().map(|x| format!("{x:.6}")).collect();
                    println!(
                        "  component {}: {} samples, diameter {:.4}{}, at [{}]",
                        k + 1,
                        c.samples,
                        c.diameter,
                        if c.isolated { " (isolated)" } else { "" },
                        rep_pt.join(", ")
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::PrintPresentation { file } => {
            print!("{}", cli::print_presentation(&presentation(&file)?));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    run(args).unwrap_or_else(|code| code)
}
