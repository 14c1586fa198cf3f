//! The `srcx` command line: argument definitions, file readers and the
//! command runner.

pub mod parse;

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use srcx::categories::{first_violation, is_morphism, ring_hom};
use srcx::oracle::random_audit;
use srcx::products::product;
use srcx::{
    apply, complex_of_ideal, sr_ideal, Category, FunctorKind, ProductKind, SetMap,
    SimplicialComplex, SqfIdeal,
};
use thiserror::Error;

pub use parse::{parse_complex, parse_ideal, parse_map, ParseError};

/// Environment variable that overrides `--seed`.
pub const SEED_VAR: &str = "SRCX_SEED";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("invalid {SEED_VAR} value {0:?}")]
    Seed(String),
    #[error(transparent)]
    Core(#[from] srcx::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "srcx",
    version,
    about = "Simplicial complexes, set maps and Stanley-Reisner ideals"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply one of the five functors along a map.
    Apply {
        /// ee, se, ss, sa or aa.
        #[arg(long)]
        functor: FunctorKind,
        #[arg(long)]
        map: PathBuf,
        complex: PathBuf,
    },
    /// Print the Stanley-Reisner ideal of a complex.
    Ideal {
        #[arg(long, default_value = "x")]
        prefix: String,
        complex: PathBuf,
    },
    /// Print the complex of a squarefree monomial ideal.
    ComplexOfIdeal { ideal: PathBuf },
    /// Print the Alexander dual of a complex.
    Dual { complex: PathBuf },
    /// Combine two complexes on disjoint vertex sets.
    Product {
        #[arg(long)]
        kind: ProductKind,
        left: PathBuf,
        right: PathBuf,
    },
    /// Decide whether a map is a morphism and print its ring homomorphism.
    Morphism {
        /// sc0, sc1 or sc2; for sc2 the map goes from the target's vertices
        /// to the source's.
        #[arg(long)]
        category: Category,
        #[arg(long)]
        map: PathBuf,
        #[arg(long, default_value = "y")]
        source_prefix: String,
        #[arg(long, default_value = "x")]
        target_prefix: String,
        source: PathBuf,
        target: PathBuf,
    },
    /// Run the randomized adjunction audit.
    Check {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 5)]
        max_vertices: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Summarize a complex: dimension, facets and cofacets.
    Info { complex: PathBuf },
}

/// What a command printed and the status it exits with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { status: 0, stdout }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn with_path<T>(path: &Path, r: Result<T, ParseError>) -> Result<T, CliError> {
    r.map_err(|source| CliError::Parse {
        path: path.to_owned(),
        source,
    })
}

pub fn read_complex(path: &Path) -> Result<SimplicialComplex, CliError> {
    with_path(path, parse_complex(&read(path)?))
}

pub fn read_map(path: &Path) -> Result<SetMap, CliError> {
    with_path(path, parse_map(&read(path)?))
}

pub fn read_ideal(path: &Path) -> Result<SqfIdeal, CliError> {
    with_path(path, parse_ideal(&read(path)?))
}

/// `ring: …` followed by the rendered ideal.
pub fn render_ideal(i: &SqfIdeal, prefix: &str) -> String {
    format!("ring: {}\n{}\n", i.ring(), i.render(prefix))
}

fn seed(flag: u64) -> Result<u64, CliError> {
    match std::env::var(SEED_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| CliError::Seed(v)),
        Err(_) => Ok(flag),
    }
}

pub fn run(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Apply {
            functor,
            map,
            complex,
        } => {
            let f = read_map(map)?;
            let z = read_complex(complex)?;
            log::info!(
                "applying {} along a map with {} fibers",
                functor.notation(),
                f.codomain().len()
            );
            Ok(Outcome::ok(format!("{}\n", apply(*functor, &f, &z)?)))
        }
        Command::Ideal { prefix, complex } => {
            let x = read_complex(complex)?;
            Ok(Outcome::ok(render_ideal(&sr_ideal(&x), prefix)))
        }
        Command::ComplexOfIdeal { ideal } => {
            let i = read_ideal(ideal)?;
            Ok(Outcome::ok(format!("{}\n", complex_of_ideal(&i))))
        }
        Command::Dual { complex } => {
            let x = read_complex(complex)?;
            Ok(Outcome::ok(format!("{}\n", x.alexander_dual())))
        }
        Command::Product { kind, left, right } => {
            let x = read_complex(left)?;
            let y = read_complex(right)?;
            Ok(Outcome::ok(format!("{}\n", product(*kind, &x, &y)?)))
        }
        Command::Morphism {
            category,
            map,
            source_prefix,
            target_prefix,
            source,
            target,
        } => {
            let f = read_map(map)?;
            let x = read_complex(source)?;
            let y = read_complex(target)?;
            morphism(*category, &f, &x, &y, source_prefix, target_prefix)
        }
        Command::Check {
            trials,
            max_vertices,
            seed: flag,
        } => {
            let seed = seed(*flag)?;
            let report = random_audit(*trials, *max_vertices, seed)?;
            let verdict = if report.is_clean() { "PASS" } else { "FAIL" };
            let stdout = format!("seed={seed} max-vertices={max_vertices}\n{report}\n{verdict}\n");
            Ok(Outcome {
                status: if report.is_clean() { 0 } else { 1 },
                stdout,
            })
        }
        Command::Info { complex } => {
            let x = read_complex(complex)?;
            Ok(Outcome::ok(info(&x)))
        }
    }
}

fn morphism(
    category: Category,
    f: &SetMap,
    x: &SimplicialComplex,
    y: &SimplicialComplex,
    source_prefix: &str,
    target_prefix: &str,
) -> Result<Outcome, CliError> {
    let (a, b) = category.ends(f);
    if a != x.vertices() || b != y.vertices() {
        return Err(srcx::Error::VertexSetMismatch {
            expected: format!("{a} -> {b}"),
            found: format!("{} -> {}", x.vertices(), y.vertices()),
        }
        .into());
    }
    let valid = is_morphism(category, f, x, y)?;
    let hom = ring_hom(category, f);
    let mut out = String::new();
    if valid {
        writeln!(out, "VALID category={category}").unwrap();
    } else {
        let bad = first_violation(&hom, &sr_ideal(y), &sr_ideal(x))?
            .map(|m| m.render(source_prefix))
            .unwrap_or_else(|| "?".into());
        writeln!(out, "INVALID reason={bad}").unwrap();
    }
    for line in hom.render(source_prefix, target_prefix) {
        writeln!(out, "{line}").unwrap();
    }
    Ok(Outcome {
        status: if valid { 0 } else { 1 },
        stdout: out,
    })
}

fn info(x: &SimplicialComplex) -> String {
    let list = |sets: Vec<srcx::Subset>| {
        if sets.is_empty() {
            " -".to_string()
        } else {
            sets.iter().map(|s| format!(" {s}")).collect()
        }
    };
    format!(
        "vertices: {}\ndimension: {}\nfacets:{}\ncofacets:{}\n",
        x.vertices(),
        x.dimension(),
        list(x.facets()),
        list(x.cofacets()),
    )
}
