//! The `pkat` command line.
//!
//! Exit codes: 0 success or holds, 1 a checked property fails, 2 usage or
//! parse error, 3 model or validation error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::engine::{self, AxiomId, Mode, Report, SearchConfig, Status, Verdict, WeightSpace};
use crate::error::Error;
use crate::lattice::{Godel, HeytingAlgebra, LatticeId, Luk3};
use crate::plts::{load_model, AnyModel, Model};
use crate::relp::PRel;
use crate::syntax::{parse, Declarations, Term};
use crate::with_model;

#[derive(Debug, Parser)]
#[command(name = "pkat", version, about = "Paraconsistent Kleene algebra with tests")]
pub struct Cli {
    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Print lattice constants as ⊤ and ⊥.
    #[arg(long, global = true)]
    unicode: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a term over a model.
    Eval {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        term: String,
    },
    /// Reflexive-transitive closure of a named relation.
    Star {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        program: String,
    },
    /// Compare two terms on a model or on random models.
    Equiv(EquivArgs),
    /// Check every axiom scheme over relations on a fixed state count.
    Axioms(AxiomArgs),
    /// Consistency class of each entry of a named relation.
    Classify {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        name: String,
    },
    /// Check a Hoare triple {pre} prog {post}.
    Hoare {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        pre: String,
        #[arg(long)]
        prog: String,
        #[arg(long)]
        post: String,
    },
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["model", "lattice"])))]
struct EquivArgs {
    #[arg(long)]
    t1: String,
    #[arg(long)]
    t2: String,
    #[arg(long)]
    model: Option<PathBuf>,
    #[arg(long, requires_all = ["states", "random"])]
    lattice: Option<LatticeId>,
    #[arg(long, requires = "lattice")]
    states: Option<usize>,
    /// Number of random models to try.
    #[arg(long, requires = "lattice")]
    random: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Atoms to treat as tests; all others are programs.
    #[arg(long, value_delimiter = ',')]
    tests: Vec<String>,
    /// Denominator of the godel value grid.
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(i64).range(1..))]
    grid: i64,
}

#[derive(Debug, Args)]
struct AxiomArgs {
    #[arg(long)]
    lattice: LatticeId,
    #[arg(long)]
    states: usize,
    #[arg(long, conflicts_with = "samples")]
    exhaustive: bool,
    #[arg(long)]
    samples: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(i64).range(1..))]
    grid: i64,
}

struct Output {
    json: bool,
    unicode: bool,
    text: String,
    code: i32,
}

impl Output {
    fn emit_json(&mut self, value: &Value) {
        self.text = serde_json::to_string_pretty(value).expect("JSON values serialize");
        self.text.push('\n');
    }
}

enum Failure {
    Usage(String),
    Model(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_usage() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Model(e.to_string())
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{e}");
                2
            } else {
                let _ = write!(out, "{e}");
                0
            };
            return code;
        }
    };
    let mut output = Output {
        json: cli.json,
        unicode: cli.unicode,
        text: String::new(),
        code: 0,
    };
    match dispatch(&cli.command, &mut output) {
        Ok(()) => {
            let _ = out.write_all(output.text.as_bytes());
            output.code
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Model(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            3
        }
    }
}

fn read_model(path: &Path) -> std::result::Result<AnyModel, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Model(format!("cannot read {}: {e}", path.display())))?;
    load_model(&text).map_err(|e| Failure::Model(format!("{}: {e}", path.display())))
}

fn parse_term(src: &str) -> std::result::Result<Term, Failure> {
    parse(src).map_err(|e| Failure::Usage(format!("in `{src}`: {e}")))
}

fn dispatch(command: &Command, out: &mut Output) -> Outcome {
    match command {
        Command::Eval { model, term } => {
            let term = parse_term(term)?;
            with_model!(&read_model(model)?, m => eval(m, &term, out))
        }
        Command::Star { model, program } => {
            with_model!(&read_model(model)?, m => star(m, program, out))
        }
        Command::Classify { model, name } => {
            with_model!(&read_model(model)?, m => classify(m, name, out))
        }
        Command::Hoare {
            model,
            pre,
            prog,
            post,
        } => {
            let (pre, prog, post) = (parse_term(pre)?, parse_term(prog)?, parse_term(post)?);
            with_model!(&read_model(model)?, m => hoare(m, &pre, &prog, &post, out))
        }
        Command::Equiv(args) => {
            let (t1, t2) = (parse_term(&args.t1)?, parse_term(&args.t2)?);
            match (&args.model, args.lattice) {
                (Some(model), _) => with_model!(&read_model(model)?, m => equiv(m, &t1, &t2, out)),
                (None, Some(lattice)) => match lattice {
                    LatticeId::Bool2 => equiv_random::<bool>(args, &t1, &t2, out),
                    LatticeId::Lukasiewicz3 => equiv_random::<Luk3>(args, &t1, &t2, out),
                    LatticeId::Godel => equiv_random::<Godel>(args, &t1, &t2, out),
                },
                (None, None) => Err(Failure::Usage("either --model or --lattice is required".into())),
            }
        }
        Command::Axioms(args) => match args.lattice {
            LatticeId::Bool2 => axioms::<bool>(args, out),
            LatticeId::Lukasiewicz3 => axioms::<Luk3>(args, out),
            LatticeId::Godel => axioms::<Godel>(args, out),
        },
    }
}

fn class_table<A: HeytingAlgebra>(rel: &PRel<A>, unicode: bool) -> String {
    let space = rel.space();
    let rows: Vec<[String; 3]> = rel
        .entries()
        .map(|(u, v, w)| {
            [
                format!("({}, {})", space.name(u), space.name(v)),
                w.render(unicode),
                w.classify().to_string(),
            ]
        })
        .collect();
    let header = ["entry".to_string(), "weight".to_string(), "class".to_string()];
    let width = |i: usize| {
        rows.iter()
            .chain([&header])
            .map(|r| r[i].chars().count())
            .max()
            .unwrap_or(0)
    };
    let (w0, w1) = (width(0), width(1));
    let mut text = String::new();
    for row in [&header].into_iter().chain(&rows) {
        let _ = writeln!(text, "{:<w0$}  {:<w1$}  {}", row[0], row[1], row[2]);
    }
    text
}

fn class_json<A: HeytingAlgebra>(rel: &PRel<A>) -> Value {
    let space = rel.space();
    Value::Array(
        rel.entries()
            .map(|(u, v, w)| {
                json!({
                    "from": space.name(u),
                    "to": space.name(v),
                    "weight": w.to_json(),
                    "class": w.classify().name(),
                })
            })
            .collect(),
    )
}

fn eval<A: HeytingAlgebra>(model: &Model<A>, term: &Term, out: &mut Output) -> Outcome {
    let rel = engine::evaluate(term, model)?;
    if out.json {
        out.emit_json(&json!({
            "term": term.to_string(),
            "lattice": A::ID.name(),
            "entries": class_json(&rel),
        }));
    } else {
        out.text = format!(
            "{}\n{}",
            rel.render(out.unicode),
            class_table(&rel, out.unicode)
        );
    }
    Ok(())
}

fn star<A: HeytingAlgebra>(model: &Model<A>, program: &str, out: &mut Output) -> Outcome {
    let run = model.relation(program)?.star_run()?;
    if out.json {
        out.emit_json(&json!({
            "program": program,
            "lattice": A::ID.name(),
            "iterations": run.iterations,
            "entries": run.closure.to_entry_list(),
        }));
    } else {
        out.text = format!(
            "{}\niterations: {}\n",
            run.closure.render(out.unicode),
            run.iterations
        );
    }
    Ok(())
}

fn classify<A: HeytingAlgebra>(model: &Model<A>, name: &str, out: &mut Output) -> Outcome {
    let rel = model.relation(name)?;
    if out.json {
        out.emit_json(&json!({ "name": name, "lattice": A::ID.name(), "entries": class_json(rel) }));
    } else {
        out.text = class_table(rel, out.unicode);
    }
    Ok(())
}

/// Writes a single-model verdict: the offending entry only, since the
/// assignment is the model itself.
fn model_verdict<A: HeytingAlgebra>(
    triple: Option<&str>,
    claim: String,
    verdict: &Verdict<PRel<A>>,
    states: usize,
    out: &mut Output,
) {
    out.code = i32::from(verdict.status == Status::Fails);
    if out.json {
        let mut report = verdict.report(triple.unwrap_or(&claim), states, Mode::Exhaustive, out.unicode);
        if let Some(w) = &mut report.witness {
            w.assignment = Value::Null;
        }
        out.emit_json(&serde_json::to_value(report).expect("reports serialize"));
        return;
    }
    let mut text = triple.map(|t| format!("triple: {t}\n")).unwrap_or_default();
    let _ = writeln!(text, "claim: {claim}\nverdict: {}", verdict.status.name());
    if let Some(w) = &verdict.witness {
        let d = &w.discrepancy;
        let _ = writeln!(
            text,
            "at {}: lhs {} vs rhs {}",
            d.location(),
            d.lhs.render(out.unicode),
            d.rhs.render(out.unicode)
        );
    }
    out.text = text;
}

fn equiv<A: HeytingAlgebra>(model: &Model<A>, t1: &Term, t2: &Term, out: &mut Output) -> Outcome {
    let verdict = engine::equiv(t1, t2, model)?;
    let claim = format!("{t1} = {t2}");
    model_verdict(None, claim, &verdict, model.states().len(), out);
    Ok(())
}

fn hoare<A: HeytingAlgebra>(
    model: &Model<A>,
    pre: &Term,
    prog: &Term,
    post: &Term,
    out: &mut Output,
) -> Outcome {
    let verdict = engine::hoare_check(pre, prog, post, model)?;
    let guarded = pre.clone().dot(prog.clone());
    let claim = format!("{guarded} <= {}", guarded.clone().dot(post.clone()));
    model_verdict(
        Some(&format!("{{{pre}}} {prog} {{{post}}}")),
        claim,
        &verdict,
        model.states().len(),
        out,
    );
    Ok(())
}

fn weights_for<A: HeytingAlgebra>(grid: i64) -> WeightSpace<A> {
    match A::ID {
        LatticeId::Godel => WeightSpace::godel_grid(grid),
        _ => WeightSpace::standard(),
    }
}

fn equiv_random<A: HeytingAlgebra>(args: &EquivArgs, t1: &Term, t2: &Term, out: &mut Output) -> Outcome {
    let states = args.states.expect("required by clap");
    let samples = args.random.expect("required by clap");
    let decls = Declarations::infer([t1, t2], &args.tests);
    let verdict = engine::equiv_random(t1, t2, &decls, &weights_for::<A>(args.grid), states, samples, args.seed)?;
    out.code = i32::from(verdict.status == Status::Fails);
    let claim = format!("{t1} = {t2}");
    let mode = Mode::Random {
        samples,
        seed: args.seed,
    };
    if out.json {
        let report = verdict.report(&claim, states, mode, out.unicode);
        out.emit_json(&serde_json::to_value(report).expect("reports serialize"));
        return Ok(());
    }
    let mut text = format!(
        "equiv: {claim}\nlattice: {}, states: {states}, seed: {}\n",
        A::ID.name(),
        args.seed
    );
    match (&verdict.status, &verdict.witness) {
        (Status::Fails, Some(w)) => {
            let _ = writeln!(text, "verdict: fails (countermodel at sample {})", w.candidate);
            let _ = writeln!(text, "{}", w.describe(out.unicode));
        }
        (Status::Holds, _) => {
            let _ = writeln!(text, "verdict: holds (no countermodel found in {samples} samples)");
        }
        (status, _) => {
            let _ = writeln!(text, "verdict: {}", status.name());
        }
    }
    out.text = text;
    Ok(())
}

fn axioms<A: HeytingAlgebra>(args: &AxiomArgs, out: &mut Output) -> Outcome {
    let mode = match args.samples {
        Some(samples) if !args.exhaustive => Mode::Random {
            samples,
            seed: args.seed,
        },
        _ => Mode::Exhaustive,
    };
    let weights = weights_for::<A>(args.grid);
    let config = SearchConfig::default();
    let mut reports: Vec<(AxiomId, Report)> = Vec::new();
    for id in AxiomId::all() {
        let verdict = engine::check_axiom(id, &weights, args.states, mode, &config)?;
        if let Some(w) = &verdict.witness {
            debug_assert!(w.recheck().unwrap_or(false));
        }
        reports.push((id, verdict.report(&id.to_string(), args.states, mode, out.unicode)));
    }
    let core_failed = reports
        .iter()
        .any(|(id, r)| !id.is_boolean() && r.status == Status::Fails);
    out.code = i32::from(core_failed);
    if out.json {
        let list: Vec<Value> = reports
            .iter()
            .map(|(_, r)| serde_json::to_value(r).expect("reports serialize"))
            .collect();
        out.emit_json(&Value::Array(list));
        return Ok(());
    }
    let mode_text = match mode {
        Mode::Exhaustive => "exhaustive".to_string(),
        Mode::Random { samples, seed } => format!("random, {samples} samples, seed {seed}"),
    };
    let mut text = format!(
        "lattice: {}, states: {}, mode: {mode_text}\n\n",
        A::ID.name(),
        args.states
    );
    let stmt_width = AxiomId::all().map(|id| id.statement().len()).max().unwrap_or(0);
    let _ = writeln!(
        text,
        "{:<6} {:<stmt_width$}  {:<7} {:>8}  witness",
        "axiom", "statement", "status", "searched"
    );
    for (id, report) in &reports {
        let witness = report
            .witness
            .as_ref()
            .map(|w| w.summary.replace('\n', "; "))
            .unwrap_or_default();
        let line = format!(
            "{:<6} {:<stmt_width$}  {:<7} {:>8}  {witness}",
            id.to_string(),
            id.statement(),
            report.status.name(),
            report.samples
        );
        let _ = writeln!(text, "{}", line.trim_end());
    }
    let held = reports.iter().filter(|(_, r)| r.status == Status::Holds).count();
    let _ = writeln!(text, "\n{held} of {} schemes hold", reports.len());
    out.text = text;
    Ok(())
}
