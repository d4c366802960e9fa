use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};

use ratvol::io::{complex_dump, input_digest, read_polyhedron_file, PolyhedronFile, Report};
use ratvol::verify::{run_suite, VerifyOptions};
use ratvol::{lambda, lambda_vector, regular_triangulation, GnMap, IntMat, IntVec, Polyhedron};

#[derive(Parser)]
#[command(name = "ratvol", version, about = "Exact rational measures of rational polyhedra")]
struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// λ_d of a polyhedron, or the vector λ_0..λ_n.
    Measure {
        file: PathBuf,
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Triangulation of a polyhedron, regular with --regular.
    Triangulate {
        file: PathBuf,
        #[arg(long)]
        regular: bool,
    },
    /// Randomized property suite; files are used as extra instances.
    Verify {
        files: Vec<PathBuf>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 25)]
        trials: usize,
        #[arg(long, hide = true)]
        corrupt_lambda: bool,
    },
    /// Image under x ↦ Ax + t.
    Transform {
        file: PathBuf,
        /// Row-major integer entries of A.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        matrix: Vec<String>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        shift: Vec<String>,
    },
}

/// Failure before any result exists; exit status 2.
struct InputFailure(String);

impl<E: std::fmt::Display> From<E> for InputFailure {
    fn from(e: E) -> Self {
        InputFailure(e.to_string())
    }
}

fn load(path: &PathBuf) -> Result<(Polyhedron, String), InputFailure> {
    let (file, text) =
        read_polyhedron_file(path).map_err(|e| InputFailure(format!("{}: {e}", path.display())))?;
    let p = file.to_polyhedron().map_err(|e| InputFailure(format!("{}: {e}", path.display())))?;
    Ok((p, text))
}

fn strings(v: &[ratvol::MeasureValue]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

fn parse_ints(items: &[String], what: &str) -> Result<Vec<BigInt>, InputFailure> {
    items
        .iter()
        .flat_map(|s| s.split_whitespace())
        .map(|s| s.parse::<BigInt>().map_err(|_| InputFailure(format!("{what}: invalid integer {s:?}"))))
        .collect()
}

/// Result document and whether every check in it passed.
fn run(cmd: &Command) -> Result<(Vec<String>, Value, Option<Vec<ratvol::io::PropertyResult>>, bool), InputFailure> {
    match cmd {
        Command::Measure { file, dim } => {
            let (p, text) = load(file)?;
            let results = match dim {
                Some(d) => json!({ "dim": d, "lambda": lambda(&p, *d).to_string() }),
                None => json!({ "lambda": strings(&lambda_vector(&p)) }),
            };
            Ok((vec![text], results, None, true))
        }
        Command::Triangulate { file, regular } => {
            let (p, text) = load(file)?;
            let c = if *regular { regular_triangulation(&p) } else { p.canonical().clone() };
            Ok((vec![text], json!({ "regular": c.is_regular(), "complex": complex_dump(&c) }), None, true))
        }
        Command::Verify { files, seed, trials, corrupt_lambda } => {
            let mut texts = Vec::new();
            let mut corpus = Vec::new();
            for f in files {
                let (p, text) = load(f)?;
                corpus.push(p);
                texts.push(text);
            }
            let opts = VerifyOptions { seed: *seed, trials: *trials, corrupt_lambda: *corrupt_lambda };
            let table = run_suite(&corpus, &opts);
            let passed = table.iter().all(|p| p.passed);
            let executed = if *trials == 0 { 0 } else { table.len() };
            let results = json!({
                "seed": seed,
                "trials": trials,
                "properties_executed": executed,
                "vacuous": *trials == 0,
                "passed": passed,
            });
            Ok((texts, results, Some(table), passed))
        }
        Command::Transform { file, matrix, shift } => {
            let (p, text) = load(file)?;
            let n = p.ambient_dim();
            let entries = parse_ints(matrix, "--matrix")?;
            if entries.len() != n * n {
                return Err(InputFailure(format!("--matrix needs {} entries for dimension {n}", n * n)));
            }
            let mut shift = parse_ints(shift, "--shift")?;
            if shift.is_empty() {
                shift = vec![BigInt::from(0); n];
            }
            if shift.len() != n {
                return Err(InputFailure(format!("--shift needs {n} entries")));
            }
            let rows: Vec<IntVec> = entries.chunks(n).map(|r| IntVec::new(r.to_vec())).collect();
            let g = GnMap::new(IntMat::from_rows(&rows, n), IntVec::new(shift))?;
            let image = g.apply_polyhedron(&p);
            let (before, after) = (lambda_vector(&p), lambda_vector(&image));
            let preserved = before == after;
            let results = json!({
                "image": PolyhedronFile::from_polyhedron(&image),
                "lambda_before": strings(&before),
                "lambda_after": strings(&after),
                "lambda_preserved": preserved,
            });
            Ok((vec![text], results, None, preserved))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command: Vec<String> = std::env::args().collect();
    let start = Instant::now();
    match run(&cli.command) {
        Ok((inputs, results, properties, ok)) => {
            let report = Report {
                command,
                input_digest: input_digest(inputs.iter().map(String::as_str)),
                results,
                timing_ms: start.elapsed().as_millis() as u64,
                properties,
            };
            if cli.pretty {
                print!("{}", report.pretty());
            } else {
                println!("{}", serde_json::to_string(&report).expect("serializable"));
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(InputFailure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
