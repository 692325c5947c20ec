//! The `werner` command line: every library operation behind a subcommand,
//! with deterministic seeds and byte-stable JSON/CSV/text reports.
//!
//! Exit codes: 0 success (including conjecture refutations, which are
//! findings), 1 malformed input or over-cap refusal, 2 internal numerical
//! failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

use werner_core::diagrams::{
    catalan, enumerate_noncrossing_matchings, enumerate_noncrossing_partitions, Matching, Partition,
};
use werner_core::linalg::CMatrix;
use werner_core::pauli::{expand, reconstruct, PauliVector};
use werner_core::stabilizer::{pure_stabilizer_cross_check, stabilizer_conjecture_test};
use werner_core::states::{
    chord_state, cn_density, cyclic_state, diagram_density, radial_element, singlet, sym_element,
    BitString, PureState,
};
use werner_core::suite::{run_all, SuiteConfig};
use werner_core::{
    commutant_dimension, conjecture_test, gram_rank_test, is_werner, monte_carlo_twirl,
    pure_werner_dimension, twirl_project,
};

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_SEED: u64 = 42;

/// Dense-matrix commands scale as 4^n (16^n for dimension); refuse above
/// this without --force.
const MIXED_CAP: usize = 6;
/// Amplitude-level commands scale as 2^n.
const PURE_CAP: usize = 12;
/// The conjecture experiment repeats the n-qubit commutant computation.
const CONJECTURE_CAP: usize = 5;

#[derive(Parser)]
#[command(
    name = "werner",
    version,
    about = "Construct multiqubit Werner states from diagrams and verify their invariants"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StateFormat {
    Amps,
    Matrix,
    Pauli,
}

#[derive(Subcommand)]
enum Command {
    /// List non-crossing matchings or partitions of {1..n}
    Enumerate(EnumerateArgs),
    /// Build a state from one diagram family and print it
    State(StateArgs),
    /// Verify collective-rotation invariance of a diagram state
    Check(CheckArgs),
    /// Werner space dimension at a given qubit count
    Dimension(DimensionArgs),
    /// Diagram-basis experiment: counts, Gram rank, verdict
    Conjecture(ConjectureArgs),
    /// Stabilizer algebra of a diagram mixture (or chord combination with --pure)
    Stabilizer(StabilizerArgs),
    /// Project a Pauli-coefficient state onto the Werner space
    Twirl(TwirlArgs),
    /// Run the full verification suite
    Suite(SuiteArgs),
}

#[derive(Args)]
struct EnumerateArgs {
    /// List perfect matchings (chord diagrams); n must be even
    #[arg(long)]
    matchings: bool,
    /// List set partitions (polygon diagrams)
    #[arg(long)]
    partitions: bool,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: ReportFormat,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Ignore the size cap
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct StateArgs {
    /// The two-qubit singlet
    #[arg(long)]
    singlet: bool,
    /// Product of singlets over a matching, e.g. "1 4 | 2 3"
    #[arg(long)]
    chord: Option<String>,
    /// Cyclic superposition of the shifts of a bit string, e.g. 001
    #[arg(long)]
    cyclic: Option<String>,
    /// Uniform mixture of all nonzero cyclic states on N qubits
    #[arg(long, value_name = "N")]
    cn: Option<usize>,
    /// Tensor product of cyclic mixtures over a partition, e.g. "1 2 4 | 3 | 5"
    #[arg(long)]
    diagram: Option<String>,
    /// Symmetrized Pauli word with digit counts n1,n2,n3 on n qubits
    #[arg(long, value_name = "N1,N2,N3,N")]
    sym: Option<String>,
    /// Symmetrized radial polynomial r^2m on n qubits
    #[arg(long, value_name = "M,N")]
    radial: Option<String>,
    #[arg(long, value_enum, default_value = "amps")]
    format: StateFormat,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct CheckArgs {
    /// Polygon diagram whose state to check, e.g. "1 2 | 3 4"
    #[arg(long)]
    diagram: String,
    /// Invariance threshold on commutator and conjugation residuals
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    /// Number of random collective rotations to spot-check
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, value_enum, default_value = "json")]
    format: ReportFormat,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct DimensionArgs {
    #[arg(long)]
    n: usize,
    /// Count pure Werner state vectors instead of the mixed-state algebra
    #[arg(long)]
    pure: bool,
    /// Rank tolerance for the null-space computation
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    #[arg(long, value_enum, default_value = "json")]
    format: ReportFormat,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct ConjectureArgs {
    #[arg(long)]
    n: usize,
    /// Rank tolerance for Gram and null-space computations
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    /// Threshold for the internal invariance self-checks
    #[arg(long, default_value_t = 1e-10)]
    residual_tol: f64,
    /// json or text for the report; csv emits the Gram matrix
    #[arg(long, value_enum, default_value = "json")]
    format: ReportFormat,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct StabilizerArgs {
    /// Weighted diagrams, e.g. "1 2 | 3 4 : 1.0 ; 1 4 | 2 3 : 1.0"
    #[arg(long)]
    terms: String,
    /// Treat terms as matchings and analyze the pure chord combination
    #[arg(long)]
    pure: bool,
    /// Rank tolerance for the null-space computation
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    /// Threshold for the containment residual
    #[arg(long, default_value_t = 1e-10)]
    residual_tol: f64,
    #[arg(long, value_enum, default_value = "json")]
    format: ReportFormat,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct TwirlArgs {
    /// Input state as Pauli-coefficient JSON: {"n": ..., "coeffs": [...]}
    #[arg(long = "in", value_name = "PATH")]
    input: PathBuf,
    /// Estimate the twirl by Monte Carlo instead of exact projection
    #[arg(long)]
    mc: bool,
    /// Sample count for --mc
    #[arg(long, default_value_t = 100_000)]
    samples: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, value_enum, default_value = "json")]
    format: ReportFormat,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct SuiteArgs {
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Rank tolerance shared by all criteria
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    /// Invariance threshold shared by all criteria
    #[arg(long, default_value_t = 1e-10)]
    residual_tol: f64,
    /// Monte Carlo sample count for the twirl cross-check
    #[arg(long, default_value_t = 100_000)]
    samples: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: ReportFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

enum CliError {
    Usage(String),
    Numerical(String),
}

impl From<werner_core::Error> for CliError {
    fn from(e: werner_core::Error) -> Self {
        use werner_core::Error as E;
        match e {
            E::Parse { .. } | E::InvalidArgument(_) | E::DimMismatch(_) => {
                CliError::Usage(e.to_string())
            }
            E::NotHermitian { .. } | E::NoConvergence { .. } | E::Numerical(_) => {
                CliError::Numerical(e.to_string())
            }
        }
    }
}

struct CommandOutput {
    body: String,
    out: Option<PathBuf>,
    exit: i32,
}

impl CommandOutput {
    fn new(body: String, out: Option<PathBuf>) -> Self {
        CommandOutput { body, out, exit: 0 }
    }
}

/// Parse argv, run one command, write the report. Returns the process exit
/// code; diagnostics go to stderr.
pub fn run<I, T, W>(argv: I, stdout: &mut W) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = write!(stdout, "{e}");
            return 0;
        }
        Err(e) => {
            eprintln!("{e}");
            return 1;
        }
    };
    let result = match cli.command {
        Command::Enumerate(a) => cmd_enumerate(a),
        Command::State(a) => cmd_state(a),
        Command::Check(a) => cmd_check(a),
        Command::Dimension(a) => cmd_dimension(a),
        Command::Conjecture(a) => cmd_conjecture(a),
        Command::Stabilizer(a) => cmd_stabilizer(a),
        Command::Twirl(a) => cmd_twirl(a),
        Command::Suite(a) => cmd_suite(a),
    };
    match result {
        Ok(output) => {
            if let Some(path) = output.out {
                if let Err(e) = std::fs::write(&path, output.body) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return 1;
                }
            } else if stdout.write_all(output.body.as_bytes()).is_err() {
                return 1;
            }
            output.exit
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            1
        }
        Err(CliError::Numerical(msg)) => {
            eprintln!("numerical failure: {msg}");
            2
        }
    }
}

fn enforce_cap(n: usize, cap: usize, force: bool, what: &str) -> Result<(), CliError> {
    if n == 0 {
        return Err(CliError::Usage("n must be at least 1".into()));
    }
    if n > cap {
        if force {
            eprintln!(
                "warning: n={n} is over the n<={cap} cap for {what}; expect heavy runtime and memory"
            );
        } else {
            return Err(CliError::Usage(format!(
                "n={n} exceeds the n<={cap} cap for {what}; pass --force to override"
            )));
        }
    }
    Ok(())
}

fn require_positive(tol: f64, flag: &str) -> Result<(), CliError> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(CliError::Usage(format!(
            "--{flag} must be a positive real, got {tol}"
        )))
    }
}

#[derive(Serialize)]
struct Versioned<T: Serialize> {
    schema_version: u32,
    #[serde(flatten)]
    report: T,
}

fn to_json<T: Serialize>(report: T) -> String {
    let wrapped = Versioned {
        schema_version: SCHEMA_VERSION,
        report,
    };
    let mut body = serde_json::to_string_pretty(&wrapped).expect("report serializes");
    body.push('\n');
    body
}

fn complex_pairs(v: &[Complex64]) -> Vec<(f64, f64)> {
    v.iter().map(|z| (z.re, z.im)).collect()
}

fn matrix_rows(m: &CMatrix) -> Vec<Vec<(f64, f64)>> {
    (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| (m[(i, j)].re, m[(i, j)].im))
                .collect()
        })
        .collect()
}

// ---- enumerate ----

#[derive(Serialize)]
struct EnumerateReport {
    kind: &'static str,
    n: usize,
    count: usize,
    diagrams: Vec<String>,
}

fn cmd_enumerate(a: EnumerateArgs) -> Result<CommandOutput, CliError> {
    let kind = match (a.matchings, a.partitions) {
        (true, false) => "matchings",
        (false, true) => "partitions",
        _ => {
            return Err(CliError::Usage(
                "pass exactly one of --matchings or --partitions".into(),
            ))
        }
    };
    enforce_cap(a.n, PURE_CAP, a.force, "diagram enumeration")?;
    let diagrams: Vec<String> = if a.matchings {
        enumerate_noncrossing_matchings(a.n)?
            .iter()
            .map(Matching::to_string)
            .collect()
    } else {
        enumerate_noncrossing_partitions(a.n)
            .iter()
            .map(Partition::to_string)
            .collect()
    };
    let body = match a.format {
        ReportFormat::Text => {
            let mut s = diagrams.join("\n");
            s.push('\n');
            s
        }
        ReportFormat::Json => to_json(EnumerateReport {
            kind,
            n: a.n,
            count: diagrams.len(),
            diagrams,
        }),
        ReportFormat::Csv => {
            return Err(CliError::Usage(
                "csv is only available for Gram matrices (conjecture --format csv)".into(),
            ))
        }
    };
    Ok(CommandOutput::new(body, a.out))
}

// ---- state ----

enum StateSource {
    Pure {
        kind: &'static str,
        n: usize,
        state: Option<PureState>,
    },
    Mixed {
        kind: &'static str,
        n: usize,
        rho: CMatrix,
    },
}

#[derive(Serialize)]
struct AmpsReport {
    kind: &'static str,
    n: usize,
    zero: bool,
    amps: Vec<(f64, f64)>,
}

#[derive(Serialize)]
struct MatrixReport {
    kind: &'static str,
    n: usize,
    matrix: Vec<Vec<(f64, f64)>>,
}

#[derive(Serialize)]
struct PauliReport {
    n: usize,
    coeffs: Vec<f64>,
}

fn parse_usize_list(s: &str, want: usize, flag: &str) -> Result<Vec<usize>, CliError> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != want {
        return Err(CliError::Usage(format!(
            "--{flag} takes {want} comma-separated integers, got '{s}'"
        )));
    }
    parts
        .iter()
        .map(|p| {
            p.trim().parse::<usize>().map_err(|_| {
                CliError::Usage(format!(
                    "--{flag}: '{}' is not a nonnegative integer",
                    p.trim()
                ))
            })
        })
        .collect()
}

fn state_source(a: &StateArgs) -> Result<StateSource, CliError> {
    let picked = [
        a.singlet,
        a.chord.is_some(),
        a.cyclic.is_some(),
        a.cn.is_some(),
        a.diagram.is_some(),
        a.sym.is_some(),
        a.radial.is_some(),
    ]
    .iter()
    .filter(|&&b| b)
    .count();
    if picked != 1 {
        return Err(CliError::Usage(
            "pass exactly one state source: --singlet, --chord, --cyclic, --cn, --diagram, --sym, or --radial"
                .into(),
        ));
    }
    if a.singlet {
        return Ok(StateSource::Pure {
            kind: "singlet",
            n: 2,
            state: Some(singlet()),
        });
    }
    if let Some(s) = &a.chord {
        let m: Matching = s.parse()?;
        enforce_cap(m.n(), PURE_CAP, a.force, "state vectors")?;
        return Ok(StateSource::Pure {
            kind: "chord",
            n: m.n(),
            state: Some(chord_state(&m)),
        });
    }
    if let Some(s) = &a.cyclic {
        let bits: BitString = s.parse()?;
        enforce_cap(bits.len(), PURE_CAP, a.force, "state vectors")?;
        return Ok(StateSource::Pure {
            kind: "cyclic",
            n: bits.len(),
            state: cyclic_state(&bits),
        });
    }
    if let Some(n) = a.cn {
        enforce_cap(n, MIXED_CAP, a.force, "density matrices")?;
        return Ok(StateSource::Mixed {
            kind: "cn",
            n,
            rho: cn_density(n),
        });
    }
    if let Some(s) = &a.diagram {
        let d: Partition = s.parse()?;
        enforce_cap(d.n(), MIXED_CAP, a.force, "density matrices")?;
        return Ok(StateSource::Mixed {
            kind: "diagram",
            n: d.n(),
            rho: diagram_density(&d),
        });
    }
    if let Some(s) = &a.sym {
        let v = parse_usize_list(s, 4, "sym")?;
        enforce_cap(v[3], MIXED_CAP, a.force, "density matrices")?;
        return Ok(StateSource::Mixed {
            kind: "sym",
            n: v[3],
            rho: sym_element(v[0], v[1], v[2], v[3])?,
        });
    }
    let s = a.radial.as_ref().expect("one source is set");
    let v = parse_usize_list(s, 2, "radial")?;
    enforce_cap(v[1], MIXED_CAP, a.force, "density matrices")?;
    Ok(StateSource::Mixed {
        kind: "radial",
        n: v[1],
        rho: radial_element(v[0], v[1])?,
    })
}

fn cmd_state(a: StateArgs) -> Result<CommandOutput, CliError> {
    let source = state_source(&a)?;
    let body = match a.format {
        StateFormat::Amps => match source {
            StateSource::Pure { kind, n, state } => {
                let amps = match &state {
                    Some(psi) => complex_pairs(psi.amps()),
                    None => vec![(0.0, 0.0); 1 << n],
                };
                to_json(AmpsReport {
                    kind,
                    n,
                    zero: state.is_none(),
                    amps,
                })
            }
            StateSource::Mixed { .. } => {
                return Err(CliError::Usage(
                    "amps format needs a pure-state source; use --format matrix or pauli".into(),
                ))
            }
        },
        StateFormat::Matrix => {
            let (kind, n, rho) = state_matrix(source);
            to_json(MatrixReport {
                kind,
                n,
                matrix: matrix_rows(&rho),
            })
        }
        StateFormat::Pauli => {
            let (_, n, rho) = state_matrix(source);
            let v = expand(&rho, n).map_err(CliError::from)?;
            to_json(PauliReport {
                n,
                coeffs: v.coeffs,
            })
        }
    };
    Ok(CommandOutput::new(body, a.out))
}

fn state_matrix(source: StateSource) -> (&'static str, usize, CMatrix) {
    match source {
        StateSource::Pure { kind, n, state } => {
            let rho = match state {
                Some(psi) => psi.projector(),
                None => CMatrix::zeros(1 << n, 1 << n),
            };
            (kind, n, rho)
        }
        StateSource::Mixed { kind, n, rho } => (kind, n, rho),
    }
}

// ---- check ----

fn cmd_check(a: CheckArgs) -> Result<CommandOutput, CliError> {
    require_positive(a.tol, "tol")?;
    let d: Partition = a.diagram.parse()?;
    enforce_cap(d.n(), MIXED_CAP, a.force, "density matrices")?;
    let report = is_werner(&diagram_density(&d), a.tol, a.samples, a.seed)?;
    let body = match a.format {
        ReportFormat::Json => to_json(&report),
        ReportFormat::Text => format!(
            "diagram: {d}\nn: {}\ncommutator residual: {:.3e}\nrandom conjugation max: {:.3e} over {} draws (seed {})\ntol: {:.1e}\nis_werner: {}\n",
            report.n,
            report.residual,
            report.random_conjugation_max,
            report.random_checks,
            report.seed,
            report.tol,
            report.is_werner
        ),
        ReportFormat::Csv => {
            return Err(CliError::Usage(
                "csv is only available for Gram matrices (conjecture --format csv)".into(),
            ))
        }
    };
    Ok(CommandOutput::new(body, a.out))
}

// ---- dimension ----

#[derive(Serialize)]
struct MixedDimensionReport {
    n: usize,
    commutant_dim: usize,
    catalan: u64,
}

#[derive(Serialize)]
struct PureDimensionReport {
    n: usize,
    pure_dim: usize,
}

fn cmd_dimension(a: DimensionArgs) -> Result<CommandOutput, CliError> {
    require_positive(a.tol, "tol")?;
    let body = if a.pure {
        enforce_cap(a.n, PURE_CAP, a.force, "pure-state null spaces")?;
        let report = PureDimensionReport {
            n: a.n,
            pure_dim: pure_werner_dimension(a.n),
        };
        match a.format {
            ReportFormat::Json => to_json(&report),
            ReportFormat::Text => format!("n: {}\npure_dim: {}\n", report.n, report.pure_dim),
            ReportFormat::Csv => {
                return Err(CliError::Usage(
                    "csv is only available for Gram matrices (conjecture --format csv)".into(),
                ))
            }
        }
    } else {
        enforce_cap(a.n, MIXED_CAP, a.force, "the commutant computation")?;
        let report = MixedDimensionReport {
            n: a.n,
            commutant_dim: commutant_dimension(a.n),
            catalan: catalan(a.n as u32),
        };
        match a.format {
            ReportFormat::Json => to_json(&report),
            ReportFormat::Text => format!(
                "n: {}\ncommutant_dim: {}\ncatalan: {}\n",
                report.n, report.commutant_dim, report.catalan
            ),
            ReportFormat::Csv => {
                return Err(CliError::Usage(
                    "csv is only available for Gram matrices (conjecture --format csv)".into(),
                ))
            }
        }
    };
    Ok(CommandOutput::new(body, a.out))
}

// ---- conjecture ----

fn cmd_conjecture(a: ConjectureArgs) -> Result<CommandOutput, CliError> {
    require_positive(a.tol, "tol")?;
    require_positive(a.residual_tol, "residual-tol")?;
    enforce_cap(a.n, CONJECTURE_CAP, a.force, "the conjecture experiment")?;
    if a.format == ReportFormat::Csv {
        // Gram matrix of the diagram states, one row per line
        let states: Vec<CMatrix> = enumerate_noncrossing_partitions(a.n)
            .iter()
            .map(diagram_density)
            .collect();
        let (gram, _) = gram_rank_test(&states, a.tol)?;
        let mut body = String::new();
        for i in 0..gram.rows() {
            let row: Vec<String> = (0..gram.cols())
                .map(|j| format!("{}", gram[(i, j)].re))
                .collect();
            body.push_str(&row.join(","));
            body.push('\n');
        }
        return Ok(CommandOutput::new(body, a.out));
    }
    let report = conjecture_test(a.n, a.tol, a.residual_tol)?;
    let body = match a.format {
        ReportFormat::Json => to_json(&report),
        ReportFormat::Text => format!(
            "n: {}\ndiagrams: {}\ngram rank: {}\ncatalan: {}\ncommutant dim: {}\nmax residuals: werner {:.3e}, span {:.3e}\nverdict: {}\n",
            report.n,
            report.num_diagrams,
            report.gram_rank,
            report.catalan,
            report.commutant_dim,
            report.max_werner_residual,
            report.max_span_residual,
            report.verdict
        ),
        ReportFormat::Csv => unreachable!("handled above"),
    };
    Ok(CommandOutput::new(body, a.out))
}

// ---- stabilizer ----

fn parse_terms(s: &str) -> Result<Vec<(Partition, f64)>, CliError> {
    let mut terms = Vec::new();
    let mut base = 0usize;
    for piece in s.split(';') {
        let colon = piece.find(':').ok_or_else(|| {
            CliError::Usage(format!(
                "parse error at position {base}: term '{}' needs the form 'diagram : coeff'",
                piece.trim()
            ))
        })?;
        let diagram_text = &piece[..colon];
        let coeff_text = piece[colon + 1..].trim();
        let d: Partition = diagram_text.parse().map_err(|e| match e {
            werner_core::Error::Parse { pos, msg } => {
                CliError::Usage(format!("parse error at position {}: {msg}", base + pos))
            }
            other => CliError::from(other),
        })?;
        let coeff: f64 = coeff_text.parse().map_err(|_| {
            CliError::Usage(format!(
                "parse error at position {}: invalid coefficient '{coeff_text}'",
                base + colon + 1
            ))
        })?;
        terms.push((d, coeff));
        base += piece.len() + 1;
    }
    Ok(terms)
}

fn cmd_stabilizer(a: StabilizerArgs) -> Result<CommandOutput, CliError> {
    require_positive(a.tol, "tol")?;
    require_positive(a.residual_tol, "residual-tol")?;
    let terms = parse_terms(&a.terms)?;
    let first_n = terms.first().map(|(d, _)| d.n()).unwrap_or(0);
    let body = if a.pure {
        enforce_cap(first_n, PURE_CAP, a.force, "state vectors")?;
        let matchings: Vec<(Matching, f64)> = terms
            .into_iter()
            .map(|(d, c)| Matching::new(d).map(|m| (m, c)).map_err(CliError::from))
            .collect::<Result<_, _>>()?;
        let report = pure_stabilizer_cross_check(&matchings, a.tol)?;
        match a.format {
            ReportFormat::Json => to_json(&report),
            ReportFormat::Text => format!(
                "n: {}\ncomputed dim: {}\nbipartition criterion: {}\nconsistent: {}\n",
                report.n, report.computed_dim, report.criterion_holds, report.consistent
            ),
            ReportFormat::Csv => {
                return Err(CliError::Usage(
                    "csv is only available for Gram matrices (conjecture --format csv)".into(),
                ))
            }
        }
    } else {
        enforce_cap(first_n, MIXED_CAP, a.force, "density matrices")?;
        let report = stabilizer_conjecture_test(&terms, a.tol, a.residual_tol)?;
        match a.format {
            ReportFormat::Json => to_json(&report),
            ReportFormat::Text => format!(
                "n: {}\nterms: {}\nglb: {}\ncomputed dim: {}\npredicted dim: {}\ncontainment: {} (residual {:.3e})\nmatch: {}\n",
                report.n,
                report.num_terms,
                report.glb,
                report.computed_dim,
                report.predicted_dim,
                report.containment_ok,
                report.max_containment_residual,
                report.dims_match
            ),
            ReportFormat::Csv => {
                return Err(CliError::Usage(
                    "csv is only available for Gram matrices (conjecture --format csv)".into(),
                ))
            }
        }
    };
    Ok(CommandOutput::new(body, a.out))
}

// ---- twirl ----

#[derive(Serialize)]
struct TwirlReport {
    n: usize,
    method: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    coeffs: Vec<f64>,
}

fn cmd_twirl(a: TwirlArgs) -> Result<CommandOutput, CliError> {
    let raw = std::fs::read_to_string(&a.input)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", a.input.display())))?;
    let parsed: PauliVector = serde_json::from_str(&raw).map_err(|e| {
        CliError::Usage(format!(
            "{} is not Pauli-coefficient JSON: {e}",
            a.input.display()
        ))
    })?;
    let v = PauliVector::new(parsed.n, parsed.coeffs)?;
    enforce_cap(v.n, MIXED_CAP, a.force, "density matrices")?;
    let rho = reconstruct(&v);
    let (method, samples, seed, projected) = if a.mc {
        if a.samples == 0 {
            return Err(CliError::Usage("--samples must be at least 1".into()));
        }
        (
            "monte-carlo",
            Some(a.samples),
            Some(a.seed),
            monte_carlo_twirl(&rho, a.samples, a.seed)?,
        )
    } else {
        ("exact", None, None, twirl_project(&rho)?)
    };
    let out_v = expand(&projected, v.n)?;
    let report = TwirlReport {
        n: v.n,
        method,
        samples,
        seed,
        coeffs: out_v.coeffs,
    };
    let body = match a.format {
        ReportFormat::Json => to_json(&report),
        ReportFormat::Text => {
            let mut s = format!("n: {}\nmethod: {}\n", report.n, report.method);
            for (i, c) in report.coeffs.iter().enumerate() {
                if c.abs() > 1e-12 {
                    s.push_str(&format!("coeff[{i}] = {c}\n"));
                }
            }
            s
        }
        ReportFormat::Csv => {
            return Err(CliError::Usage(
                "csv is only available for Gram matrices (conjecture --format csv)".into(),
            ))
        }
    };
    Ok(CommandOutput::new(body, a.out))
}

// ---- suite ----

#[derive(Serialize)]
struct SuiteReport {
    seed: u64,
    rel_tol: f64,
    residual_tol: f64,
    mc_samples: usize,
    passed: bool,
    criteria: Vec<werner_core::suite::CriterionOutcome>,
}

fn cmd_suite(a: SuiteArgs) -> Result<CommandOutput, CliError> {
    require_positive(a.tol, "tol")?;
    require_positive(a.residual_tol, "residual-tol")?;
    let cfg = SuiteConfig {
        seed: a.seed,
        rel_tol: a.tol,
        residual_tol: a.residual_tol,
        mc_samples: a.samples,
    };
    let criteria = run_all(&cfg);
    let all_passed = criteria.iter().all(|c| c.passed);
    let body = match a.format {
        ReportFormat::Json => to_json(SuiteReport {
            seed: cfg.seed,
            rel_tol: cfg.rel_tol,
            residual_tol: cfg.residual_tol,
            mc_samples: cfg.mc_samples,
            passed: all_passed,
            criteria,
        }),
        ReportFormat::Text => {
            let mut s = String::new();
            for c in &criteria {
                s.push_str(&format!(
                    "criterion {:2} [{}] {}: {}\n",
                    c.id,
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.details
                ));
            }
            let ok = criteria.iter().filter(|c| c.passed).count();
            s.push_str(&format!("{ok}/{} criteria passed\n", criteria.len()));
            s
        }
        ReportFormat::Csv => {
            return Err(CliError::Usage(
                "csv is only available for Gram matrices (conjecture --format csv)".into(),
            ))
        }
    };
    Ok(CommandOutput {
        body,
        out: a.out,
        exit: if all_passed { 0 } else { 2 },
    })
}
