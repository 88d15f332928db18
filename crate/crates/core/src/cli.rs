//! Command line operations behind the `qpmut` binary.
//!
//! Every command reads JSON files and writes JSON, either to `--out` or to
//! standard output. Failures print `{"error": code, "detail": message}` on
//! standard error and exit with 2 for bad input, 3 for a violated
//! mathematical precondition and 4 for a failed invariant check.
//!
//! `QPMUT_DEFAULT_ORDER` sets the truncation order used when a command is
//! given an exact QP and no `--order`.

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::decorated::{check_relations, default_nilpotency_bound, is_isomorphic, mutate_decorated, ISO_TRIALS};
use crate::error::Error;
use crate::format::{self, qp_from_json, qp_to_json, rep_from_json, rep_to_json, split_to_json, QpJson, RepJson};
use crate::jacobian::{jacobian_dims, Qp};
use crate::mutation::{check_involution, mutate_qp_traced, random_potential, InvolutionReport, MUTATION_ORDER};
use crate::quiver::{mutate_quiver, ArrowOrigin, Quiver};
use crate::reduction::split;
use crate::server::{self, AppState, ErrorBody, ServeOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_INVARIANT: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "qpmut", version, about = "Mutations of quivers with potentials")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Mutate a quiver (combinatorial three-step rule).
    Mutate {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        vertex: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Mutate a QP; prints the provenance of the new arrows.
    MutateQp {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        vertex: String,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Split a QP into trivial and reduced parts, with the witness.
    Reduce {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dimensions of the truncated Jacobian algebra by degree.
    JacDims {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Mutate a decorated representation at a sink or source.
    ///
    /// Also reflects twice and checks the result is isomorphic to the
    /// input, exiting with 4 if no isomorphism is found in `--trials` tries.
    RepMutate {
        #[arg(long)]
        rep: PathBuf,
        #[arg(long)]
        qp: PathBuf,
        #[arg(long)]
        vertex: String,
        #[arg(long, default_value_t = ISO_TRIALS)]
        trials: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare a QP with its double mutation at a vertex.
    CheckInvolution {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        vertex: String,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Random potential with one term per cyclic class; prints a QP file.
    RandomPotential {
        #[arg(long)]
        quiver: PathBuf,
        #[arg(long)]
        seed: u64,
        /// Highest term degree; defaults to one below the default order.
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the session server.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        /// QP for an initial session.
        #[arg(long)]
        qp: Option<PathBuf>,
        /// File holding sessions across restarts; written on shutdown.
        #[arg(long)]
        snapshot: Option<PathBuf>,
    },
}

/// A failed command: error code, message and exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: String,
    pub detail: String,
    pub exit: i32,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let exit = if e.is_precondition() { EXIT_PRECONDITION } else { EXIT_INPUT };
        let body = ErrorBody::from_error(&e);
        Failure { code: body.error, detail: body.detail, exit }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure { code: "IoError".into(), detail: format!("{}: {e}", path.display()), exit: EXIT_INPUT }
}

type CmdResult = Result<i32, Failure>;

/// Order used for exact inputs when none is given.
pub fn default_order() -> usize {
    std::env::var("QPMUT_DEFAULT_ORDER").ok().and_then(|s| s.parse().ok()).unwrap_or(MUTATION_ORDER)
}

/// An explicit order is applied as given, which fails for series that
/// would need lifting. Otherwise exact QPs are lifted to at least the
/// default order and series are left alone.
fn at_order(qp: Qp, order: Option<usize>) -> Result<Qp, Failure> {
    Ok(match order {
        Some(n) => qp.with_order(n)?,
        None if qp.is_exact() => qp.with_order(qp.order().max(default_order()))?,
        None => qp,
    })
}

fn read<T: for<'de> serde::Deserialize<'de>>(path: &Path) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
    Ok(format::from_str(&text)?)
}

fn read_qp(path: &Path) -> Result<Qp, Failure> {
    Ok(qp_from_json(&read::<QpJson>(path)?)?)
}

fn emit<T: Serialize>(x: &T, out: Option<&Path>) -> Result<(), Failure> {
    let text = format::to_string(x);
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| io_failure(p, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct MutateQpReport<'a> {
    vertex: &'a str,
    order: usize,
    exact: bool,
    arrows: Vec<String>,
    provenance: &'a std::collections::BTreeMap<String, ArrowOrigin>,
    trivial_pairs: Vec<[String; 2]>,
}

#[derive(Serialize)]
struct InvolutionOutput<'a> {
    passed: bool,
    #[serde(flatten)]
    report: &'a InvolutionReport,
}

fn cmd_mutate(input: &Path, vertex: &str, out: Option<&Path>) -> CmdResult {
    let q: Quiver = read(input)?;
    emit(&mutate_quiver(&q, vertex)?, out)?;
    Ok(EXIT_OK)
}

fn cmd_qp_mutate(input: &Path, vertex: &str, order: Option<usize>, out: Option<&Path>) -> CmdResult {
    let qp = at_order(read_qp(input)?, order)?;
    let trace = mutate_qp_traced(&qp, vertex)?;
    let result = trace.result();
    match out {
        Some(p) => {
            emit(&qp_to_json(result), Some(p))?;
            let m = format::mutation_to_json(&trace);
            emit(
                &MutateQpReport {
                    vertex,
                    order: result.order(),
                    exact: result.is_exact(),
                    arrows: result.quiver().arrows().iter().map(|a| a.id.clone()).collect(),
                    provenance: &m.provenance,
                    trivial_pairs: m.trivial_pairs,
                },
                None,
            )?;
        }
        None => emit(&format::mutation_to_json(&trace), None)?,
    }
    Ok(EXIT_OK)
}

fn cmd_reduce(input: &Path, order: Option<usize>, out: Option<&Path>) -> CmdResult {
    let qp = at_order(read_qp(input)?, order)?;
    emit(&split_to_json(&split(&qp)), out)?;
    Ok(EXIT_OK)
}

fn cmd_jac_dims(input: &Path, order: Option<usize>) -> CmdResult {
    let qp = at_order(read_qp(input)?, order)?;
    emit(&jacobian_dims(&qp).report(), None)?;
    Ok(EXIT_OK)
}

fn cmd_rep_mutate(rep: &Path, qp: &Path, vertex: &str, trials: usize, out: Option<&Path>) -> CmdResult {
    let qp = read_qp(qp)?;
    let dm = rep_from_json(&read::<RepJson>(rep)?, Some(qp.quiver()))?;
    if **dm.quiver() != **qp.quiver() {
        return Err(Error::QuiverMismatch.into());
    }
    if !check_relations(&dm.rep, &qp, default_nilpotency_bound(&dm.rep))? {
        return Err(Error::NotAModule.into());
    }
    let once = mutate_decorated(&dm, vertex)?;
    emit(&rep_to_json(&once), out)?;
    let twice = mutate_decorated(&once, vertex)?;
    if twice.decoration != dm.decoration || !is_isomorphic(&dm.rep, &twice.rep, trials)? {
        let detail = format!("double reflection at {vertex} found no isomorphism in {trials} trials");
        return Err(Failure { code: "InvariantFailed".into(), detail, exit: EXIT_INVARIANT });
    }
    Ok(EXIT_OK)
}

fn cmd_check_involution(input: &Path, vertex: &str, order: Option<usize>) -> CmdResult {
    let qp = at_order(read_qp(input)?, order)?;
    let report = check_involution(&qp, vertex)?;
    let passed = report.passed();
    emit(&InvolutionOutput { passed, report: &report }, None)?;
    Ok(if passed { EXIT_OK } else { EXIT_INVARIANT })
}

fn cmd_random_potential(quiver: &Path, seed: u64, max_degree: Option<usize>, out: Option<&Path>) -> CmdResult {
    let q = Arc::new(read::<Quiver>(quiver)?);
    let d = max_degree.unwrap_or(default_order() - 1);
    if d < 2 {
        return Err(Error::InsufficientOrder { have: d, need: 2 }.into());
    }
    emit(&qp_to_json(&Qp::exact(random_potential(&q, d, seed))), out)?;
    Ok(EXIT_OK)
}

fn cmd_serve(port: u16, qp: Option<&Path>, snapshot: Option<&Path>) -> CmdResult {
    let app = match snapshot {
        Some(p) => server::load_snapshot(p)?,
        None => AppState::new(),
    };
    if let Some(p) = qp {
        let id = app.create(read_qp(p)?);
        println!("{}", serde_json::json!({ "id": id }));
    }
    let opts = ServeOptions { port, snapshot: snapshot.map(Path::to_path_buf) };
    let rt = tokio::runtime::Runtime::new().map_err(|e| Failure { code: "IoError".into(), detail: e.to_string(), exit: 1 })?;
    rt.block_on(server::serve(Arc::new(app), &opts))
        .map_err(|e| Failure { code: "IoError".into(), detail: e.to_string(), exit: 1 })?;
    Ok(EXIT_OK)
}

pub fn execute(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Mutate { input, vertex, out } => cmd_mutate(input, vertex, out.as_deref()),
        Command::MutateQp { input, vertex, order, out } => cmd_qp_mutate(input, vertex, *order, out.as_deref()),
        Command::Reduce { input, order, out } => cmd_reduce(input, *order, out.as_deref()),
        Command::JacDims { input, order } => cmd_jac_dims(input, *order),
        Command::RepMutate { rep, qp, vertex, trials, out } => {
            cmd_rep_mutate(rep, qp, vertex, *trials, out.as_deref())
        }
        Command::CheckInvolution { input, vertex, order } => cmd_check_involution(input, vertex, *order),
        Command::RandomPotential { quiver, seed, max_degree, out } => {
            cmd_random_potential(quiver, *seed, *max_degree, out.as_deref())
        }
        Command::Serve { port, qp, snapshot } => cmd_serve(*port, qp.as_deref(), snapshot.as_deref()),
    }
}

/// Parses arguments, runs the command and returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return EXIT_OK;
        }
        Err(e) => {
            let body = ErrorBody { error: "UsageError".into(), detail: e.to_string().trim().to_string() };
            eprintln!("{}", serde_json::to_string(&body).expect("serializable"));
            return EXIT_INPUT;
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(f) => {
            let body = ErrorBody { error: f.code, detail: f.detail };
            eprintln!("{}", serde_json::to_string(&body).expect("serializable"));
            f.exit
        }
    }
}
