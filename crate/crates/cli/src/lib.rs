//! Command-line front end for `spinorgraph-core`.
//!
//! [`run`] parses arguments, executes one subcommand and writes its output;
//! the binary only maps the result to an exit code.

pub mod io;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use spinorgraph_core::clifford::{
    center_basis, center_oracle, format_support, predicted_center_dim, CenterShape, CliffordError,
};
use spinorgraph_core::dimer::{
    count_matchings_brute, glued_count_brute, glued_tiling_count, gluing_case, gluing_identity_check,
    kasteleyn_abs_det, tiling_closed, tiling_count, DimerError, GluingSpec, LatticeGraph,
};
use spinorgraph_core::eigen::{spectrum, EigenError};
use spinorgraph_core::evolution::{
    is_steady, quadratic_form, time_series, EvolutionError, EvolutionParams, FormKind, StateKind, StateVector,
};
use spinorgraph_core::graph::incidence_matrix;
use spinorgraph_core::ops::{even_laplacian, incidence_dirac, kernel_of, odd_laplacian, spectral_dirac, Parity};
use spinorgraph_core::walks::{enumerate_signed_walks, walk_count_matrix, WalkElement, WalkError};
use spinorgraph_core::{Complex64, OrientedGraph};
use thiserror::Error;

use crate::io::{format_float, format_matrix, format_state, format_time_series, parse_graph, parse_state, FormatError, Matrix};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Format { path: PathBuf, source: FormatError },
    #[error(transparent)]
    Eigen(#[from] EigenError),
    #[error(transparent)]
    Evolution(#[from] EvolutionError),
    #[error(transparent)]
    Walk(#[from] WalkError),
    #[error(transparent)]
    Dimer(#[from] DimerError),
    #[error(transparent)]
    Clifford(#[from] CliffordError),
}

impl CliError {
    /// 2 for usage errors, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "spinorgraph", version, about = "Graph Laplace/Dirac operators, walks, dimers and Clifford centers")]
pub struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Reduced Planck constant for time evolution.
    #[arg(long, global = true, default_value_t = 1.0)]
    pub hbar: f64,
    /// Relative tolerance for kernel and steady-state tests.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print an operator matrix.
    Ops(OpArgs),
    /// Eigenvalues (and optionally eigenvectors) of an operator.
    Spectrum {
        #[command(flatten)]
        op: OpArgs,
        #[arg(long)]
        vectors: bool,
    },
    /// Orthonormal kernel basis of an operator.
    Kernel(OpArgs),
    /// Time series of exp((i/hbar) A t) psi0 as CSV.
    Evolve {
        #[command(flatten)]
        op: OpArgs,
        /// JSON array of amplitudes (numbers or [re, im] pairs).
        #[arg(long)]
        state: PathBuf,
        #[arg(long, default_value_t = 10.0)]
        t_end: f64,
        #[arg(long, default_value_t = 100)]
        steps: usize,
        /// Explicit comma-separated time grid; overrides --t-end/--steps.
        #[arg(long, value_delimiter = ',')]
        times: Option<Vec<f64>>,
        /// Write the CSV here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Whether a state is fixed by the evolution.
    Steady {
        #[command(flatten)]
        op: OpArgs,
        #[arg(long)]
        state: PathBuf,
    },
    /// Evaluate a quadratic form on a state.
    Qform {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        kind: FormArg,
        #[arg(long)]
        state: PathBuf,
    },
    /// List signed vertex-edge walks, or print a power of the incidence Dirac operator.
    Walks {
        #[arg(long)]
        input: PathBuf,
        /// Start element, e.g. v1 or e2 (1-based).
        #[arg(long, requires = "to")]
        from: Option<String>,
        #[arg(long, requires = "from")]
        to: Option<String>,
        #[arg(long)]
        length: usize,
    },
    /// Domino tilings of lattices and glued lattices.
    #[command(subcommand)]
    Dimer(DimerCommand),
    /// Centers of Clifford graph algebras.
    #[command(subcommand)]
    Clifford(CliffordCommand),
}

#[derive(Debug, Args)]
pub struct OpArgs {
    /// Graph JSON file.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub op: OpKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OpKind {
    Incidence,
    EvenLaplacian,
    OddLaplacian,
    IncidenceDirac,
    EvenDirac,
    OddDirac,
}

impl OpKind {
    fn state_kind(self) -> Option<StateKind> {
        match self {
            OpKind::Incidence => None,
            OpKind::EvenLaplacian | OpKind::EvenDirac => Some(StateKind::Vertex),
            OpKind::OddLaplacian | OpKind::OddDirac => Some(StateKind::Edge),
            OpKind::IncidenceDirac => Some(StateKind::VertexEdge),
        }
    }

    fn name(self) -> &'static str {
        match self {
            OpKind::Incidence => "incidence",
            OpKind::EvenLaplacian => "even-laplacian",
            OpKind::OddLaplacian => "odd-laplacian",
            OpKind::IncidenceDirac => "incidence-dirac",
            OpKind::EvenDirac => "even-dirac",
            OpKind::OddDirac => "odd-dirac",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormArg {
    Even,
    Odd,
    Incidence,
}

#[derive(Debug, Subcommand)]
pub enum DimerCommand {
    /// Domino tilings of a k x n lattice.
    Count {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long, value_enum, default_value_t = CountMethod::Recurrence)]
        method: CountMethod,
    },
    /// Tilings of two lattices glued with a shift and forced bridges.
    Glue {
        #[arg(long)]
        rows: usize,
        #[arg(short)]
        m: usize,
        #[arg(short)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        shift: usize,
        /// 1-based bridge labels, top to bottom.
        #[arg(long, value_delimiter = ',')]
        bridges: Vec<usize>,
        #[arg(long, value_enum, default_value_t = GlueMethod::Formula)]
        method: GlueMethod,
    },
    /// Split T_k(m+n) over the bridge sets of the unshifted gluing.
    Identity {
        #[arg(long)]
        rows: usize,
        #[arg(short)]
        m: usize,
        #[arg(short)]
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountMethod {
    Recurrence,
    Brute,
    Kasteleyn,
    Closed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GlueMethod {
    Formula,
    Brute,
}

#[derive(Debug, Subcommand)]
pub enum CliffordCommand {
    /// Central monomials of the Clifford graph algebra.
    Center {
        #[arg(long)]
        input: PathBuf,
        /// Use the direct commutation test instead of the parity test.
        #[arg(long)]
        oracle: bool,
    },
    /// Predicted center dimension for a graph family.
    Predict {
        /// path:N, ends:N,M, glued:N,M,K, or A+B for a disjoint union.
        #[arg(long)]
        shape: String,
        /// Also compute the center and compare.
        #[arg(long)]
        check: bool,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_owned(), source })
}

fn load_graph(path: &Path) -> Result<OrientedGraph, CliError> {
    parse_graph(&read(path)?).map_err(|source| CliError::Format { path: path.to_owned(), source })
}

fn load_state(path: &Path) -> Result<Vec<Complex64>, CliError> {
    parse_state(&read(path)?).map_err(|source| CliError::Format { path: path.to_owned(), source })
}

fn build_operator(g: &OrientedGraph, op: OpKind) -> Result<Matrix, CliError> {
    Ok(match op {
        OpKind::Incidence => Matrix::Int(incidence_matrix(g)),
        OpKind::EvenLaplacian => Matrix::Int(even_laplacian(g)),
        OpKind::OddLaplacian => Matrix::Int(odd_laplacian(g)),
        OpKind::IncidenceDirac => Matrix::Int(incidence_dirac(g)),
        OpKind::EvenDirac => Matrix::Dense(spectral_dirac(g, Parity::Even)?),
        OpKind::OddDirac => Matrix::Dense(spectral_dirac(g, Parity::Odd)?),
    })
}

fn load_operator(args: &OpArgs) -> Result<(OrientedGraph, Matrix), CliError> {
    let g = load_graph(&args.input)?;
    let m = build_operator(&g, args.op)?;
    Ok((g, m))
}

fn state_for(g: &OrientedGraph, op: OpKind, values: Vec<Complex64>) -> Result<StateVector, CliError> {
    let kind = op
        .state_kind()
        .ok_or_else(|| CliError::Usage(format!("{} does not act on states", op.name())))?;
    Ok(StateVector::for_graph(g, kind, values)?)
}

fn parse_element(text: &str) -> Result<WalkElement, CliError> {
    let bad = || CliError::Usage(format!("walk element must look like v1 or e2, got {text:?}"));
    let (tag, index) = text.split_at_checked(1).ok_or_else(bad)?;
    let index: usize = index.parse().map_err(|_| bad())?;
    if index == 0 {
        return Err(bad());
    }
    match tag {
        "v" => Ok(WalkElement::Vertex(index - 1)),
        "e" => Ok(WalkElement::Edge(index - 1)),
        _ => Err(bad()),
    }
}

/// Parses `path:N`, `ends:N,M`, `glued:N,M,K` and `A+B`.
pub fn parse_shape(text: &str) -> Result<CenterShape, CliError> {
    if let Some((a, b)) = text.split_once('+') {
        return Ok(CenterShape::Disjoint(Box::new(parse_shape(a)?), Box::new(parse_shape(b)?)));
    }
    let bad = || CliError::Usage(format!("unrecognised shape {text:?}"));
    let (name, params) = text.trim().split_once(':').ok_or_else(bad)?;
    let nums: Vec<usize> = params.split(',').map(|p| p.trim().parse()).collect::<Result<_, _>>().map_err(|_| bad())?;
    match (name, nums.as_slice()) {
        ("path", &[n]) => Ok(CenterShape::Path(n)),
        ("ends", &[n, m]) => Ok(CenterShape::EndToEnd { n, m }),
        ("glued", &[n, m, attach]) => Ok(CenterShape::GluedPaths { n, m, attach }),
        _ => Err(bad()),
    }
}

fn complex_json(z: Complex64) -> serde_json::Value {
    json!([z.re, z.im])
}

/// Executes one parsed command and returns its standard output.
pub fn execute(cli: &Cli) -> Result<String, CliError> {
    let mut out = String::new();
    if !(cli.hbar > 0.0 && cli.hbar.is_finite()) {
        return Err(CliError::Usage(format!("--hbar must be positive, got {}", cli.hbar)));
    }
    if !(cli.tol > 0.0 && cli.tol.is_finite()) {
        return Err(CliError::Usage(format!("--tol must be positive, got {}", cli.tol)));
    }
    match &cli.command {
        Command::Ops(args) => {
            let (_, m) = load_operator(args)?;
            if cli.json {
                let matrix: serde_json::Value = serde_json::from_str(&format_matrix(&m)).expect("matrix output is JSON");
                writeln!(out, "{}", json!({ "operator": args.op.name(), "matrix": matrix })).unwrap();
            } else {
                writeln!(out, "{}", format_matrix(&m)).unwrap();
            }
        }
        Command::Spectrum { op, vectors } => {
            let (_, m) = load_operator(op)?;
            let spec = spectrum(&m.to_dense())?;
            if cli.json {
                let mut doc = json!({ "operator": op.op.name(), "eigenvalues": spec.eigenvalues });
                if *vectors {
                    let vs: Vec<Vec<_>> = (0..spec.dimension())
                        .map(|k| spec.eigenvector(k).into_iter().map(complex_json).collect())
                        .collect();
                    doc["eigenvectors"] = json!(vs);
                }
                writeln!(out, "{doc}").unwrap();
            } else {
                for k in 0..spec.dimension() {
                    if *vectors {
                        writeln!(out, "{} {}", format_float(spec.eigenvalues[k]), format_state(&spec.eigenvector(k))).unwrap();
                    } else {
                        writeln!(out, "{}", format_float(spec.eigenvalues[k])).unwrap();
                    }
                }
            }
        }
        Command::Kernel(args) => {
            let (_, m) = load_operator(args)?;
            let dense = m.to_dense();
            let spec = spectrum(&dense)?;
            let basis = kernel_of(&spec, cli.tol * dense.frobenius_norm().max(1.0));
            if cli.json {
                let vs: Vec<Vec<_>> = basis.iter().map(|v| v.iter().copied().map(complex_json).collect()).collect();
                writeln!(out, "{}", json!({ "operator": args.op.name(), "dimension": basis.len(), "basis": vs })).unwrap();
            } else {
                writeln!(out, "dim {}", basis.len()).unwrap();
                for v in &basis {
                    writeln!(out, "{}", format_state(v)).unwrap();
                }
            }
        }
        Command::Evolve { op, state, t_end, steps, times, output } => {
            let (g, m) = load_operator(op)?;
            let psi0 = state_for(&g, op.op, load_state(state)?)?;
            let params = match times {
                Some(ts) => EvolutionParams::new(cli.hbar, ts.clone())?,
                None => EvolutionParams::uniform(cli.hbar, *t_end, *steps)?,
            };
            let csv = format_time_series(&time_series(&m.to_dense(), &psi0, &params)?);
            match output {
                Some(path) => {
                    std::fs::write(path, csv).map_err(|source| CliError::Write { path: path.clone(), source })?
                }
                None => out.push_str(&csv),
            }
        }
        Command::Steady { op, state } => {
            let (g, m) = load_operator(op)?;
            let psi0 = state_for(&g, op.op, load_state(state)?)?;
            let steady = is_steady(&m.to_dense(), &psi0, cli.tol)?;
            if cli.json {
                writeln!(out, "{}", json!({ "steady": steady })).unwrap();
            } else {
                writeln!(out, "{}", if steady { "steady" } else { "not steady" }).unwrap();
            }
        }
        Command::Qform { input, kind, state } => {
            let g = load_graph(input)?;
            let kind = match kind {
                FormArg::Even => FormKind::Even,
                FormArg::Odd => FormKind::Odd,
                FormArg::Incidence => FormKind::Incidence,
            };
            let psi = StateVector::for_graph(&g, kind.state_kind(), load_state(state)?)?;
            let q = quadratic_form(kind, &g, &psi)?;
            if cli.json {
                writeln!(out, "{}", json!({ "value": complex_json(q) })).unwrap();
            } else {
                writeln!(out, "{} {}", format_float(q.re), format_float(q.im)).unwrap();
            }
        }
        Command::Walks { input, from, to, length } => {
            let g = load_graph(input)?;
            match (from, to) {
                (Some(from), Some(to)) => {
                    let walks = enumerate_signed_walks(&g, parse_element(from)?, parse_element(to)?, *length)?;
                    let sum: i64 = walks.iter().map(|w| w.sign as i64).sum();
                    if cli.json {
                        let list: Vec<_> = walks
                            .iter()
                            .map(|w| {
                                let steps: Vec<String> = w.steps.iter().map(|s| s.to_string()).collect();
                                json!({ "steps": steps, "sign": w.sign })
                            })
                            .collect();
                        writeln!(out, "{}", json!({ "walks": list, "sum": sum })).unwrap();
                    } else {
                        for w in &walks {
                            writeln!(out, "{w}").unwrap();
                        }
                        writeln!(out, "sum={sum}").unwrap();
                    }
                }
                _ => {
                    let m = Matrix::Int(walk_count_matrix(&g, *length)?);
                    writeln!(out, "{}", format_matrix(&m)).unwrap();
                }
            }
        }
        Command::Dimer(cmd) => dimer(cmd, cli.json, &mut out)?,
        Command::Clifford(cmd) => clifford(cmd, cli.json, &mut out)?,
    }
    Ok(out)
}

fn dimer(cmd: &DimerCommand, as_json: bool, out: &mut String) -> Result<(), CliError> {
    match cmd {
        DimerCommand::Count { rows, cols, method } => {
            let value = match method {
                CountMethod::Recurrence => tiling_count(*rows, *cols)?.to_string(),
                CountMethod::Brute => {
                    count_matchings_brute(LatticeGraph::new(*rows, *cols)?.graph(), &[], &[]).to_string()
                }
                CountMethod::Kasteleyn => kasteleyn_abs_det(&LatticeGraph::new(*rows, *cols)?)
                    .map(|d| d.sqrt().to_string())
                    .unwrap_or_else(|| "non-integral determinant".into()),
                CountMethod::Closed => format_float(tiling_closed(*rows, *cols)?),
            };
            if as_json {
                writeln!(out, "{}", json!({ "rows": rows, "cols": cols, "count": value })).unwrap();
            } else {
                writeln!(out, "{value}").unwrap();
            }
        }
        DimerCommand::Glue { rows, m, n, shift, bridges, method } => {
            let spec = GluingSpec::new(*rows, *m, *n, *shift, bridges.iter().copied())?;
            let count = match method {
                GlueMethod::Formula => glued_tiling_count(&spec)?,
                GlueMethod::Brute => glued_count_brute(&spec)?,
            };
            if as_json {
                let case = gluing_case(&spec).map(|c| c.formula()).unwrap_or("brute force");
                writeln!(out, "{}", json!({ "count": count.to_string(), "formula": case })).unwrap();
            } else {
                writeln!(out, "{count}").unwrap();
            }
        }
        DimerCommand::Identity { rows, m, n } => {
            let r = gluing_identity_check(*rows, *m, *n)?;
            if as_json {
                let terms: Vec<_> = r
                    .terms
                    .iter()
                    .map(|t| json!({ "bridges": t.bridges, "count": t.count.to_string() }))
                    .collect();
                let doc = json!({
                    "terms": terms,
                    "case_sum": r.case_sum.to_string(),
                    "corollary": r.corollary.to_string(),
                    "direct": r.direct.to_string(),
                });
                writeln!(out, "{doc}").unwrap();
            } else {
                for t in &r.terms {
                    let labels: Vec<String> = t.bridges.iter().map(|b| format!("e{b}")).collect();
                    writeln!(out, "B={{{}}} {}", labels.join(","), t.count).unwrap();
                }
                writeln!(out, "sum {}", r.case_sum).unwrap();
                writeln!(out, "T{}({}) {}", rows, m + n, r.direct).unwrap();
            }
        }
    }
    Ok(())
}

fn clifford(cmd: &CliffordCommand, as_json: bool, out: &mut String) -> Result<(), CliError> {
    match cmd {
        CliffordCommand::Center { input, oracle } => {
            let g = load_graph(input)?;
            let basis = if *oracle { center_oracle(&g)? } else { center_basis(&g)? };
            let names: Vec<String> = basis.iter().map(|&s| format_support(s)).collect();
            if as_json {
                writeln!(out, "{}", json!({ "dimension": basis.len(), "monomials": names })).unwrap();
            } else {
                writeln!(out, "{}", names.join("; ")).unwrap();
                writeln!(out, "dim {}", basis.len()).unwrap();
            }
        }
        CliffordCommand::Predict { shape, check } => {
            let shape = parse_shape(shape)?;
            let predicted = predicted_center_dim(&shape)?;
            let computed = if *check { Some(center_basis(&shape.graph()?)?.len()) } else { None };
            if as_json {
                writeln!(out, "{}", json!({ "predicted": predicted, "computed": computed })).unwrap();
            } else {
                writeln!(out, "{predicted}").unwrap();
                if let Some(c) = computed {
                    writeln!(out, "computed {c}").unwrap();
                }
            }
        }
    }
    Ok(())
}

/// Parses `args` (including the program name) and runs the command.
///
/// Returns the text for standard output, or the text for standard error
/// together with the exit code.
pub fn run<I, T>(args: I) -> Result<String, (String, i32)>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Ok(e.to_string()),
                _ => Err((e.to_string(), 2)),
            }
        }
    };
    execute(&cli).map_err(|e| (format!("error: {e}\n"), e.exit_code()))
}
