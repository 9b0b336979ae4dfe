//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when the input is well formed but rejected
//! (or a self-test check fails), 2 on I/O and parse errors.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::json::ExprFile;
use crate::resolution::{builtin, builtin_specs, ResolutionSpec};
use crate::ring::RingElement;
use crate::selftest;
use crate::series::{project_pi, project_pi_prime};

const EXPRESSIONS: &[(&str, &str)] = &[("z2-a15", include_str!("../exprs/z2-a15.json"))];

#[derive(Parser, Debug)]
#[command(
    name = "grsets",
    version,
    about = "Equivariant Poincaré series in rings of weighted G-sets"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute the equivariant Poincaré series of a resolution spec.
    Poincare {
        /// Path to a spec file, or the name of a built-in spec.
        spec: String,
        /// Override the truncation bound, e.g. `--bound 6` or `--bound 4,4`.
        #[arg(long, value_delimiter = ',')]
        bound: Option<Vec<u32>>,
        /// Print a projection instead of the ring element.
        #[arg(long, value_enum)]
        project: Option<Projection>,
        #[arg(long, value_enum, default_value_t = Format::Orbits)]
        format: Format,
    },
    /// Evaluate a ring expression file.
    Ring {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Orbits)]
        format: Format,
    },
    /// Evaluate a ring expression file and print one of its projections.
    Project {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Projection::Pi)]
        to: Projection,
        #[arg(long, value_enum, default_value_t = Format::Series)]
        format: Format,
    },
    /// Run the built-in verification suite.
    Selftest {
        /// Only run checks whose name contains this string.
        #[arg(long)]
        filter: Option<String>,
    },
    /// List the built-in specs and expressions, or write them to a directory.
    Examples {
        #[arg(long)]
        emit: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Projection {
    Pi,
    PiPrime,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Sum of orbits with integer coefficients.
    Orbits,
    /// Multi-index series in t (the pi projection unless --project says otherwise).
    Series,
    Json,
}

enum Failure {
    Io(String),
    Lib(Error),
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Lib(e)
    }
}

pub fn run(cli: Cli) -> u8 {
    let result = match cli.command {
        Command::Poincare {
            spec,
            bound,
            project,
            format,
        } => poincare(&spec, bound.as_deref(), project, format),
        Command::Ring { file, format } => ring(&file, None, format),
        Command::Project { file, to, format } => ring(&file, Some(to), format),
        Command::Selftest { filter } => run_selftest(filter.as_deref()),
        Command::Examples { emit } => examples(emit.as_deref()),
    };
    match result {
        Ok(()) => 0,
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            if e.is_parse() {
                2
            } else {
                1
            }
        }
        Err(Failure::Checks) => 1,
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn load_spec(arg: &str) -> Result<ResolutionSpec, Failure> {
    let path = Path::new(arg);
    if path.exists() {
        return Ok(ResolutionSpec::parse(&read(path)?)?);
    }
    match builtin(arg) {
        Err(Error::UnknownName(_)) => {
            Err(Failure::Io(format!("{arg}: no such file or built-in spec")))
        }
        other => Ok(other?),
    }
}

fn emit(value: &RingElement, project: Option<Projection>, format: Format) {
    let project = match (project, format) {
        (None, Format::Series) => Some(Projection::Pi),
        (p, _) => p,
    };
    let json = format == Format::Json;
    let out = match project {
        None if json => pretty(&value.to_json()),
        None => value.to_string(),
        Some(Projection::Pi) if json => pretty(&project_pi(value).to_json()),
        Some(Projection::Pi) => project_pi(value).to_string(),
        Some(Projection::PiPrime) if json => pretty(&project_pi_prime(value).to_json()),
        Some(Projection::PiPrime) => project_pi_prime(value).to_string(),
    };
    println!("{out}");
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize")
}

fn poincare(
    arg: &str,
    bound: Option<&[u32]>,
    project: Option<Projection>,
    format: Format,
) -> Result<(), Failure> {
    let mut spec = load_spec(arg)?;
    if let Some(b) = bound {
        spec = spec.with_bound(b)?;
    }
    emit(&spec.poincare_series()?, project, format);
    Ok(())
}

fn ring(path: &Path, project: Option<Projection>, format: Format) -> Result<(), Failure> {
    let file = ExprFile::parse(&read(path)?)?;
    emit(&file.evaluate()?, project, format);
    Ok(())
}

fn run_selftest(filter: Option<&str>) -> Result<(), Failure> {
    let results = selftest::run(filter);
    let failed = results.iter().filter(|r| !r.passed).count();
    for r in &results {
        let tag = if r.passed { "PASS" } else { "FAIL" };
        println!("{tag} {}: {}", r.name, r.detail);
    }
    println!("{} checks, {} failed", results.len(), failed);
    if failed > 0 {
        Err(Failure::Checks)
    } else {
        Ok(())
    }
}

fn examples(dir: Option<&Path>) -> Result<(), Failure> {
    let specs = builtin_specs().iter().map(|b| (b.name, b.json));
    let files: Vec<(&str, &str)> = specs.chain(EXPRESSIONS.iter().copied()).collect();
    match dir {
        None => {
            for b in builtin_specs() {
                let desc = serde_json::from_str::<serde_json::Value>(b.json)
                    .ok()
                    .and_then(|v| v["description"].as_str().map(str::to_string))
                    .unwrap_or_default();
                println!("{}\t{}", b.name, desc);
            }
            for (name, _) in EXPRESSIONS {
                println!("{name}\tring expression (use with `grsets ring`)");
            }
        }
        Some(dir) => {
            fs::create_dir_all(dir).map_err(|e| Failure::Io(format!("{}: {e}", dir.display())))?;
            for (name, json) in files {
                let path = dir.join(format!("{name}.json"));
                fs::write(&path, json)
                    .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
                println!("{}", path.display());
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_expression_evaluates() {
        let file = ExprFile::parse(EXPRESSIONS[0].1).unwrap();
        assert_eq!(
            file.evaluate().unwrap().to_string(),
            "O(stab=[0]; w=[(1),(5)])"
        );
    }

    #[test]
    fn arguments_parse() {
        let cli = Cli::try_parse_from([
            "grsets",
            "poincare",
            "cusp",
            "--bound",
            "4",
            "--project",
            "pi-prime",
        ])
        .unwrap();
        match cli.command {
            Command::Poincare { bound, project, .. } => {
                assert_eq!(bound, Some(vec![4]));
                assert_eq!(project, Some(Projection::PiPrime));
            }
            _ => panic!("wrong subcommand"),
        }
        assert!(Cli::try_parse_from(["grsets", "poincare", "cusp", "--format", "xml"]).is_err());
    }
}
