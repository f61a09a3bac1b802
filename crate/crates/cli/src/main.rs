use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use orthomod::affine::{AlgebraSpec, Series};

mod commands;

use commands::{Outcome, Status};

#[derive(Parser)]
#[command(name = "orthomod", version, about = "Modular invariants of the affine orthogonal algebras B_r and D_r at levels 1-3")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Export the S matrix and its modular data.
    Smatrix(Common),
    /// The classified invariants, with names, flags and partition functions.
    List(Common),
    /// Brute-force search for every physical invariant, diffed against the list.
    Enumerate {
        #[command(flatten)]
        common: Common,
        /// Node budget for the search.
        #[arg(long, default_value_t = 50_000_000)]
        budget: u64,
    },
    /// Check a matrix file for physicality.
    Verify {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Closed-form invariant counts.
    Count(Common),
    /// Every claim for the selected algebras, pass/fail.
    CheckTheorems {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 50_000_000)]
        budget: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeriesArg {
    B,
    D,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum, ignore_case = true)]
    series: SeriesArg,
    #[arg(long, conflicts_with = "rank_range")]
    rank: Option<u32>,
    /// Inclusive range A..B.
    #[arg(long)]
    rank_range: Option<String>,
    #[arg(long)]
    level: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Common {
    fn algebras(&self) -> Result<Vec<AlgebraSpec>, String> {
        let series = match self.series {
            SeriesArg::B => Series::B,
            SeriesArg::D => Series::D,
        };
        let ranks = match (self.rank, &self.rank_range) {
            (Some(r), None) => r..=r,
            (None, Some(s)) => {
                let (a, b) = s.split_once("..").ok_or_else(|| format!("rank range {s:?} is not of the form A..B"))?;
                let parse = |x: &str| x.trim().parse::<u32>().map_err(|e| format!("rank range {s:?}: {e}"));
                let (a, b) = (parse(a)?, parse(b)?);
                if a > b {
                    return Err(format!("empty rank range {s:?}"));
                }
                a..=b
            }
            _ => return Err("give exactly one of --rank and --rank-range".into()),
        };
        ranks.map(|r| AlgebraSpec::new(series, r, self.level).map_err(|e| e.to_string())).collect()
    }
}

fn emit(out: &Outcome, format: Format, path: Option<&PathBuf>) -> Result<(), String> {
    let body = match format {
        Format::Json => serde_json::to_string_pretty(&out.json).map_err(|e| e.to_string())? + "\n",
        Format::Text => out.text.clone(),
    };
    match path {
        Some(p) => std::fs::write(p, body).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(Outcome, Format, Option<PathBuf>), String> {
    let with = |c: &Common, f: &dyn Fn(&[AlgebraSpec]) -> Result<Outcome, String>| -> Result<_, String> {
        let algs = c.algebras()?;
        Ok((f(&algs)?, c.format, c.out.clone()))
    };
    match cli.verb {
        Verb::Smatrix(c) => with(&c, &|a| commands::smatrix(a)),
        Verb::List(c) => with(&c, &|a| commands::list(a)),
        Verb::Count(c) => with(&c, &|a| commands::count(a)),
        Verb::Enumerate { common, budget } => with(&common, &|a| commands::enumerate(a, budget)),
        Verb::CheckTheorems { common, budget } => with(&common, &|a| commands::check_theorems(a, budget)),
        Verb::Verify { matrix, format, out } => Ok((commands::verify(&matrix)?, format, out)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok((out, format, path)) => {
            if let Err(e) = emit(&out, format, path.as_ref()) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            for w in &out.witnesses {
                eprintln!("{w}");
            }
            ExitCode::from(match out.status {
                Status::Ok => 0,
                Status::Mismatch => 1,
                Status::Inconclusive => 3,
            })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
