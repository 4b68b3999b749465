//! `hopfscope`: exact computations with finite-dimensional Hopf algebras from
//! the command line. Every command prints a deterministic JSON report; exit
//! status 0 means every check passed, 1 a check failed, 2 the input was
//! unusable.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hopfscope::tamefrob::Family;
use hopfscope::tensorcore::Level;
use hopfscope::Scalar;
use serde_json::json;

use commands::{CaseIIIArgs, SolveKArgs};
use report::{envelope, pretty, write_text, CliError, CliResult, Inputs, Outcome};

#[derive(Parser)]
#[command(name = "hopfscope", version, about = "Exact computations with finite-dimensional Hopf algebras")]
struct Cli {
    /// Write the JSON report to this file instead of standard output.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms of a structure-constant file.
    Verify {
        input: PathBuf,
        /// Level to check (defaults to the level declared in the file).
        #[arg(long)]
        level: Option<Level>,
        /// Collect every failing index tuple instead of the first.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Coradical filtration dimensions.
    Coradical {
        input: PathBuf,
        /// Include echelon bases of every filtration step.
        #[arg(long)]
        bases: bool,
    },
    /// Link quiver, one-sided invariants and separated quiver.
    LinkQuiver {
        input: PathBuf,
        #[arg(long)]
        simples_hint: Option<PathBuf>,
        /// Write the quiver and the separated quiver as DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Corepresentation-type verdict with evidence.
    RepType {
        input: PathBuf,
        #[arg(long)]
        simples_hint: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Assert that the coradical is a subalgebra and check |¹P| = |P¹|.
        #[arg(long)]
        dual_chevalley: bool,
    },
    /// Based ring of the coradical and its consistency checks.
    BasedRing {
        input: PathBuf,
        #[arg(long)]
        simples_hint: Option<PathBuf>,
    },
    /// Build a tame local Frobenius quotient and check it.
    TameIdeal {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<Scalar>,
        /// Write the algebra as structure constants.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// The polynomials H1, H2, H3 and the vanishing criterion.
    Combi {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        l: Option<usize>,
        /// Evaluate the vanishing criterion at this scalar (e.g. `z8^2`).
        #[arg(long, allow_hyphen_values = true)]
        z: Option<Scalar>,
    },
    /// Radford–Majid bosonization of Yetter–Drinfeld data.
    Bosonize {
        #[arg(long)]
        r: PathBuf,
        #[arg(long)]
        hp: PathBuf,
        #[arg(long)]
        action: PathBuf,
        #[arg(long)]
        coaction: PathBuf,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Radford projection and braided coproduct of a split Hopf algebra.
    Radford {
        #[arg(long)]
        h: PathBuf,
        #[arg(long)]
        proj: PathBuf,
        #[arg(long)]
        incl: PathBuf,
    },
    /// Build a catalog example.
    Example {
        /// case-ii, case-iii, d8star, q8star or h8.
        #[arg(long)]
        name: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        n1: Option<usize>,
        #[arg(long)]
        n2: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<Scalar>,
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<Scalar>,
        #[arg(long)]
        m: Option<usize>,
        /// Write the Hopf algebra.
        #[arg(long)]
        emit: Option<PathBuf>,
        /// Write every component (R, H′, action, coaction, splitting, hints, C, X).
        #[arg(long)]
        emit_dir: Option<PathBuf>,
    },
    /// Solve C ⊙′ X = K (X ⊙ C) for K.
    SolveK {
        input: Option<PathBuf>,
        #[arg(long)]
        c: Option<PathBuf>,
        #[arg(long)]
        x: Option<PathBuf>,
        /// Use a catalog example instead of input files.
        #[arg(long)]
        name: Option<String>,
        #[arg(long)]
        family: Option<Family>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<Scalar>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Verify { .. } => "verify",
            Command::Coradical { .. } => "coradical",
            Command::LinkQuiver { .. } => "link-quiver",
            Command::RepType { .. } => "rep-type",
            Command::BasedRing { .. } => "based-ring",
            Command::TameIdeal { .. } => "tame-ideal",
            Command::Combi { .. } => "combi",
            Command::Bosonize { .. } => "bosonize",
            Command::Radford { .. } => "radford",
            Command::Example { .. } => "example",
            Command::SolveK { .. } => "solve-k",
        }
    }

    /// Canonical parameters, hashed when the command reads no files.
    fn params(&self) -> serde_json::Value {
        let s = |x: &Option<Scalar>| x.as_ref().map(|v| v.to_string());
        match self {
            Command::TameIdeal { family, m, n, a, .. } => json!({"family": family.to_string(), "m": m, "n": n, "a": s(a)}),
            Command::Combi { m, l, z } => json!({"m": m, "l": l, "z": s(z)}),
            Command::Example { name, n, n1, n2, alpha, beta, m, .. } => {
                json!({"name": name, "n": n, "n1": n1, "n2": n2, "alpha": s(alpha), "beta": s(beta), "m": m})
            }
            Command::SolveK { name, family, m, a, .. } => {
                json!({"name": name, "family": family.map(|f| f.to_string()), "m": m, "a": s(a)})
            }
            _ => json!(null),
        }
    }
}

fn run(cmd: Command, inputs: &mut Inputs) -> CliResult<Outcome> {
    match cmd {
        Command::Verify { input, level, exhaustive } => commands::verify(inputs, &input, level, exhaustive),
        Command::Coradical { input, bases } => commands::coradical_cmd(inputs, &input, bases),
        Command::LinkQuiver { input, simples_hint, dot } => {
            commands::link_quiver_cmd(inputs, &input, simples_hint.as_ref(), dot.as_ref())
        }
        Command::RepType { input, simples_hint, dot, dual_chevalley } => {
            commands::rep_type(inputs, &input, simples_hint.as_ref(), dot.as_ref(), dual_chevalley)
        }
        Command::BasedRing { input, simples_hint } => commands::based_ring(inputs, &input, simples_hint.as_ref()),
        Command::TameIdeal { family, m, n, a, emit } => commands::tame_ideal(family, a, m, n, emit.as_ref()),
        Command::Combi { m, l, z } => commands::combi(m, l, z),
        Command::Bosonize { r, hp, action, coaction, emit } => {
            commands::bosonize_cmd(inputs, &r, &hp, &action, &coaction, emit.as_ref())
        }
        Command::Radford { h, proj, incl } => commands::radford(inputs, &h, &proj, &incl),
        Command::Example { name, n, n1, n2, alpha, beta, m, emit, emit_dir } => {
            let name = commands::example_name(&name, n, CaseIIIArgs { n1, n2, alpha, beta, m })?;
            commands::example_cmd(&name, emit.as_ref(), emit_dir.as_ref())
        }
        Command::SolveK { input, c, x, name, family, m, a } => {
            let none = || CaseIIIArgs { n1: None, n2: None, alpha: None, beta: None, m: None };
            let name = name.map(|n| commands::example_name(&n, None, none())).transpose()?;
            commands::solve_k_cmd(inputs, SolveKArgs { input, c, x, name, family, m, a })
        }
    }
}

fn configure_threads() -> CliResult<()> {
    let Ok(v) = std::env::var("HOPFSCOPE_THREADS") else { return Ok(()) };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Usage(format!("HOPFSCOPE_THREADS must be a positive integer, got `{v}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(format!("cannot configure {n} threads: {e}")))
}

fn emit_report(path: Option<&PathBuf>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => write_text(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("hopfscope: error: {e}");
        return ExitCode::from(2);
    }
    let name = cli.command.name();
    let params = cli.command.params();
    let mut inputs = Inputs::default();
    let outcome = run(cli.command, &mut inputs);
    let (result, code) = match outcome {
        Ok(o) => (o.result, if o.pass { 0 } else { 1 }),
        Err(e) if e.is_check_failure() => (json!({"error": e.to_string()}), 1),
        Err(e) => {
            eprintln!("hopfscope: error: {e}");
            return ExitCode::from(2);
        }
    };
    let report = envelope(name, inputs.digest(&params), result);
    if let Err(e) = emit_report(cli.report.as_ref(), &pretty(&report)) {
        eprintln!("hopfscope: error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
