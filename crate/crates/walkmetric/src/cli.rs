//! Command-line front end. Exit codes: 0 success, 1 usage error,
//! 2 data error (bad format, disconnected graph, ...).

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use ndarray::Array2;

use crate::error::{Error, Result};
use crate::export;
use crate::graph::{Graph, GraphKind};
use crate::metric::{embedding_coords, DistanceMode};
use crate::oracle;
use crate::walk::Laziness;

#[derive(Parser)]
#[command(
    name = "walkmetric",
    about = "Probabilistic Euclidean geometry of graphs via lazy random walks",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct InputArgs {
    /// Edge-list file: lines "u v [w]", '#' comments
    #[arg(short, long)]
    input: PathBuf,
    /// Uniform laziness in (0, 1]
    #[arg(long)]
    beta: Option<f64>,
    /// Per-node laziness file, one value per line in node order
    #[arg(long)]
    beta_file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a canonical unit-weight graph as an edge list
    Generate {
        /// One of: path N, cycle N, complete N, lattice2d R C
        kind: String,
        dims: Vec<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Summarize the walk operators and spectrum of a graph
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        /// Write the spectrum as CSV (s,mu,psi_1..psi_N)
        #[arg(long)]
        dump_spectrum: Option<PathBuf>,
    },
    /// Pairwise distances: one pair to stdout, or the full matrix
    /// (CSV, or a PGM heatmap when the output path ends in .pgm)
    Distances {
        #[command(flatten)]
        input: InputArgs,
        /// Distance convention: sqrt (Euclidean) or commute (squared)
        #[arg(long, default_value = "sqrt")]
        mode: String,
        /// Single node pair instead of the full matrix
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        pair: Option<Vec<String>>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Expected first-arrival steps between nodes
    Hitting {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        pair: Option<Vec<String>>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Export k-dimensional spectral embedding coordinates
    Embed {
        #[command(flatten)]
        input: InputArgs,
        /// Embedding dimension
        #[arg(short, default_value_t = 3)]
        k: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List the nodes strictly within distance r of a node
    Ball {
        node: String,
        radius: f64,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Cross-check spectral hitting times against the linear solve and
    /// Monte Carlo simulation over sampled pairs
    Validate {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 2000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Monte Carlo estimate of one hitting time
    Simulate {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, num_args = 2, value_names = ["U", "V"], required = true)]
        pair: Vec<String>,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Parses and runs; returns the process exit code.
pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.cmd) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cmd: Cmd) -> Result<()> {
    match cmd {
        Cmd::Generate { kind, dims, output } => {
            let kind = parse_kind(&kind, &dims)?;
            let g = Graph::generate(kind)?;
            emit(output.as_deref(), g.to_edge_list().as_bytes())
        }
        Cmd::Analyze {
            input,
            dump_spectrum,
        } => {
            let (g, beta) = load(&input)?;
            let labels = g.labels();
            let a = crate::analyze(g, beta)?;
            let n = a.walk.graph().node_count();
            println!("nodes: {n}");
            println!("edges: {}", a.walk.graph().edge_count());
            println!("volume: {}", export::fmt_sig(a.walk.graph().volume(), 12));
            println!(
                "detailed balance violation: {:e}",
                a.walk.detailed_balance_violation()
            );
            println!("mu_2: {}", export::fmt_sig(a.spectrum.eigenvalue(1), 12));
            println!(
                "mu_N: {}",
                export::fmt_sig(a.spectrum.eigenvalue(n - 1), 12)
            );
            println!(
                "spectral gap: {}",
                export::fmt_sig(1.0 - a.spectrum.eigenvalue(1), 12)
            );
            let f = a.space.first_passage();
            let (mut argmin, mut argmax) = (0usize, 0usize);
            for x in 1..n {
                if f[x] < f[argmin] {
                    argmin = x;
                }
                if f[x] > f[argmax] {
                    argmax = x;
                }
            }
            println!(
                "first-passage min: {} at node {}",
                export::fmt_sig(f[argmin], 12),
                labels[argmin]
            );
            println!(
                "first-passage max: {} at node {}",
                export::fmt_sig(f[argmax], 12),
                labels[argmax]
            );
            if let Some(path) = dump_spectrum {
                fs::write(&path, export::spectrum_csv(&a.spectrum))?;
            }
            Ok(())
        }
        Cmd::Distances {
            input,
            mode,
            pair,
            output,
        } => {
            let (g, beta) = load(&input)?;
            let labels = g.labels();
            let mode: DistanceMode = mode.parse()?;
            let a = crate::analyze(g, beta)?;
            if let Some(pair) = pair {
                let (x, y) = resolve_pair(&pair, &labels)?;
                let d2 = a.space.squared_distance(x, y);
                let v = match mode {
                    DistanceMode::Commute => d2,
                    DistanceMode::Sqrt => d2.sqrt(),
                };
                println!("{}", export::fmt_sig(v, 12));
                Ok(())
            } else {
                let m = a.space.distance_matrix(mode);
                emit_matrix(output.as_deref(), &m, &labels)
            }
        }
        Cmd::Hitting {
            input,
            pair,
            output,
        } => {
            let (g, beta) = load(&input)?;
            let labels = g.labels();
            let a = crate::analyze(g, beta)?;
            if let Some(pair) = pair {
                let (x, y) = resolve_pair(&pair, &labels)?;
                println!("{}", export::fmt_sig(a.space.hitting_spectral(x, y), 12));
                Ok(())
            } else {
                let m = a.space.hitting_matrix();
                emit_matrix(output.as_deref(), &m, &labels)
            }
        }
        Cmd::Embed { input, k, output } => {
            let (g, beta) = load(&input)?;
            let labels = g.labels();
            let degrees = g.weighted_degrees();
            let a = crate::analyze(g, beta)?;
            let coords = embedding_coords(&a.spectrum, k)?;
            let csv = export::embedding_csv(&coords, &degrees, &labels);
            emit(output.as_deref(), csv.as_bytes())
        }
        Cmd::Ball {
            node,
            radius,
            input,
        } => {
            let (g, beta) = load(&input)?;
            let labels = g.labels();
            let x = resolve_node(&node, &labels)?;
            if radius < 0.0 {
                return Err(Error::Usage("radius must be non-negative".into()));
            }
            let a = crate::analyze(g, beta)?;
            let members = a.space.metric_ball(x, radius);
            let names: Vec<String> = members.iter().map(|&m| labels[m].clone()).collect();
            println!("{}", names.join(" "));
            Ok(())
        }
        Cmd::Validate {
            input,
            trials,
            seed,
            output,
        } => {
            let (g, beta) = load(&input)?;
            let n = g.node_count();
            let a = crate::analyze(g.clone(), beta.clone())?;
            let pairs = 200.min(n * (n - 1));
            let rows = oracle::validate(&g, &beta, &a.space, pairs, trials, seed)?;
            let mut csv =
                String::from("x,y,spectral,solve,mc_mean,mc_stderr,rel_discrepancy\n");
            for r in &rows {
                csv.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    r.x,
                    r.y,
                    export::fmt_sig(r.spectral, 12),
                    export::fmt_sig(r.solve, 12),
                    export::fmt_sig(r.mc_mean, 12),
                    export::fmt_sig(r.mc_stderr, 12),
                    export::fmt_sig(r.rel_discrepancy, 4),
                ));
            }
            emit(output.as_deref(), csv.as_bytes())?;
            let worst = rows
                .iter()
                .map(|r| r.rel_discrepancy)
                .fold(0.0f64, f64::max);
            eprintln!("max spectral-vs-solve relative discrepancy: {worst:e}");
            Ok(())
        }
        Cmd::Simulate {
            input,
            pair,
            trials,
            seed,
        } => {
            let (g, beta) = load(&input)?;
            let labels = g.labels();
            let (x, y) = resolve_pair(&pair, &labels)?;
            let r = oracle::simulate_hitting(&g, &beta, x, y, trials, seed)?;
            println!(
                "mean {} stderr {} trials {} censored {}",
                export::fmt_sig(r.mean, 12),
                export::fmt_sig(r.stderr, 12),
                r.trials_used,
                r.censored
            );
            Ok(())
        }
    }
}

fn parse_kind(kind: &str, dims: &[usize]) -> Result<GraphKind> {
    let need = |k: usize| -> Result<()> {
        if dims.len() == k {
            Ok(())
        } else {
            Err(Error::Usage(format!(
                "generate {kind} takes {k} size argument(s), got {}",
                dims.len()
            )))
        }
    };
    match kind {
        "path" => need(1).map(|_| GraphKind::Path(dims[0])),
        "cycle" => need(1).map(|_| GraphKind::Cycle(dims[0])),
        "complete" => need(1).map(|_| GraphKind::Complete(dims[0])),
        "lattice2d" => need(2).map(|_| GraphKind::Lattice2d(dims[0], dims[1])),
        other => Err(Error::Usage(format!(
            "unknown generator {other:?} (expected path, cycle, complete, lattice2d)"
        ))),
    }
}

fn load(input: &InputArgs) -> Result<(Graph, Laziness)> {
    let text = fs::read_to_string(&input.input)
        .map_err(|e| Error::Usage(format!("cannot read {}: {e}", input.input.display())))?;
    let g = Graph::parse_edge_list(&text)?;
    let n = g.node_count();
    let beta = match (&input.beta, &input.beta_file) {
        (Some(_), Some(_)) => {
            return Err(Error::Usage(
                "--beta and --beta-file are mutually exclusive".into(),
            ))
        }
        // a bad flag value is a usage error, not a data error
        (Some(b), None) => Laziness::uniform(n, *b).map_err(|e| Error::Usage(e.to_string()))?,
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))?;
            let values: std::result::Result<Vec<f64>, _> = text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .map(str::parse::<f64>)
                .collect();
            let values =
                values.map_err(|e| Error::Usage(format!("bad beta file entry: {e}")))?;
            if values.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: values.len(),
                });
            }
            Laziness::from_values(values)?
        }
        (None, None) => Laziness::uniform(n, 1.0)?,
    };
    Ok((g, beta))
}

fn resolve_node(token: &str, labels: &[String]) -> Result<usize> {
    if let Some(i) = labels.iter().position(|l| l == token) {
        return Ok(i);
    }
    token
        .parse::<usize>()
        .ok()
        .filter(|&i| i < labels.len())
        .ok_or_else(|| Error::Usage(format!("unknown node {token:?}")))
}

fn resolve_pair(pair: &[String], labels: &[String]) -> Result<(usize, usize)> {
    Ok((
        resolve_node(&pair[0], labels)?,
        resolve_node(&pair[1], labels)?,
    ))
}

fn emit(output: Option<&Path>, bytes: &[u8]) -> Result<()> {
    match output {
        Some(path) => fs::write(path, bytes)?,
        None => {
            use std::io::Write as _;
            std::io::stdout().write_all(bytes)?;
        }
    }
    Ok(())
}

fn emit_matrix(output: Option<&Path>, m: &Array2<f64>, labels: &[String]) -> Result<()> {
    match output {
        Some(path) if path.extension().is_some_and(|e| e == "pgm") => export::write_pgm(path, m),
        other => emit(
            other.map(|p| p as &Path),
            export::matrix_csv(m, labels).as_bytes(),
        ),
    }
}
