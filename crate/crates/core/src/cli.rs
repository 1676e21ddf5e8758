//! Command-line front end. `run` parses arguments, dispatches, and returns the
//! process exit code: 0 on success, 1 when a verification finds a failed
//! property, 2 on a bad invocation, bad input or an exceeded budget.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::bijections::{
    dyck_stats, dyck_to_pp, dyck_to_standard, matrix_to_pp, pp_to_matrix, rsk, rsk_inverse, standard_to_dyck,
    verify_chain, DyckWord, PlanePartition, Ssyt,
};
use crate::budget::Budget;
use crate::enumeration::{
    catalan, enumerate_dyck_with_budget, enumerate_pp_with_budget, macmahon_count, narayana,
};
use crate::error::{Error, Result};
use crate::fock::{excitation_basis, invariant_dimension, verify_fock_with_progress, FockCheck, StateVector};
use crate::ideal::{buchberger_verify_with_progress, IdealPresentation};
use crate::poly::{polynomial_to_json, ExponentMatrix};
use crate::stdmono::enumerate_standard_with_budget;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "excitation",
    version,
    about = "Excitation rings, their standard monomials, bijections and Fock-space models"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, Args)]
struct Mk {
    /// Total number of orbitals.
    #[arg(long)]
    m: usize,
    /// Number of occupied orbitals.
    #[arg(long)]
    k: usize,
}

#[derive(Debug, Clone, Args)]
struct Input {
    /// Inline input; otherwise read from --in or stdin.
    value: Option<String>,
    /// Read input from a file.
    #[arg(long = "in", value_name = "FILE", conflicts_with = "value")]
    path: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the cubic generators of the ideal.
    Gens(Mk),
    /// Check that the generators form a Groebner basis.
    Groebner(Mk),
    /// Enumerate standard monomials.
    Stdmono {
        #[command(flatten)]
        mk: Mk,
        /// Only print the number of standard monomials.
        #[arg(long, conflicts_with = "list")]
        count: bool,
        /// Print every standard monomial.
        #[arg(long)]
        list: bool,
    },
    /// Dimension of the excitation ring.
    Dim(Mk),
    /// RSK: matrix to tableau pair, or back with --inverse.
    Rsk {
        #[arg(long)]
        inverse: bool,
        #[command(flatten)]
        input: Input,
    },
    /// Matrix to plane partition, or back with --inverse.
    Pp {
        #[arg(long)]
        inverse: bool,
        #[command(flatten)]
        input: Input,
    },
    /// Standard matrix to Dyck word; --inverse, --pp and --stats read a word.
    Dyck {
        #[arg(long, conflicts_with_all = ["stats", "pp"])]
        inverse: bool,
        /// Print the plane partition of a word.
        #[arg(long, conflicts_with = "stats")]
        pp: bool,
        /// Print valley and central-letter statistics of a word.
        #[arg(long)]
        stats: bool,
        #[command(flatten)]
        input: Input,
    },
    /// Closed-form counts.
    #[command(subcommand)]
    Count(CountCommand),
    /// Exhaustive enumeration of combinatorial families.
    #[command(subcommand)]
    Enum(EnumCommand),
    /// Fock-space computations.
    #[command(subcommand)]
    Fock(FockCommand),
    /// Run every check at (m, k) and print a summary table.
    VerifyAll(Mk),
}

#[derive(Debug, Subcommand)]
enum CountCommand {
    /// N(n, r) = C(n, r) C(n, r-1) / n.
    Narayana {
        n: u64,
        r: u64,
    },
    Catalan {
        n: u64,
    },
    /// Plane partitions in an a x b x c box.
    Macmahon {
        a: u64,
        b: u64,
        c: u64,
    },
}

#[derive(Debug, Subcommand)]
enum EnumCommand {
    /// Plane partitions with a rows, b columns and entries at most c.
    Pp {
        a: usize,
        b: usize,
        c: u32,
        /// Only print the number of elements.
        #[arg(long)]
        count: bool,
    },
    /// Dyck words of semilength n with the given number of valleys.
    Dyck {
        n: usize,
        valleys: usize,
        #[arg(long)]
        count: bool,
    },
}

#[derive(Debug, Subcommand)]
enum FockCommand {
    /// Dimension of the spin-invariant subspace of H_{m,d}.
    InvariantDim {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        d: usize,
    },
    /// Operator identities, invariant dimension and excitation basis.
    Verify(Mk),
    /// Excitation vectors of the standard monomials.
    Basis(Mk),
}

struct Output {
    json: Value,
    text: String,
    failed: bool,
}

impl Output {
    fn ok(json: Value, text: impl Into<String>) -> Self {
        Output {
            json,
            text: text.into(),
            failed: false,
        }
    }
}

struct Context<'a> {
    stdin: &'a mut dyn Read,
    err: &'a mut (dyn Write + Send),
    budget: Budget,
}

impl Context<'_> {
    fn progress(&mut self, msg: &str) {
        let _ = writeln!(self.err, "{msg}");
    }

    fn read_input(&mut self, input: &Input) -> Result<String> {
        if let Some(v) = &input.value {
            return Ok(v.clone());
        }
        if let Some(path) = &input.path {
            return std::fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())));
        }
        let mut buf = String::new();
        self.stdin
            .read_to_string(&mut buf)
            .map_err(|e| Error::Parse(format!("cannot read stdin: {e}")))?;
        Ok(buf)
    }
}

fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn parse_matrix(text: &str) -> Result<ExponentMatrix> {
    let rows: Vec<Vec<u32>> = serde_json::from_str(text).map_err(|e| Error::Parse(format!("matrix: {e}")))?;
    ExponentMatrix::from_rows(&rows)
}

fn parse_word(text: &str) -> Result<DyckWord> {
    let t = text.trim();
    let t = match serde_json::from_str::<String>(t) {
        Ok(s) => s,
        Err(_) => t.to_string(),
    };
    t.parse()
}

fn compact(rows: &[Vec<u32>]) -> String {
    serde_json::to_string(rows).expect("rows serialize")
}

fn max_entry(rows: &[Vec<u32>]) -> u32 {
    rows.iter().flatten().copied().max().unwrap_or(0)
}

fn state_text(v: &StateVector) -> String {
    if v.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (b, c)) in v.components().iter().enumerate() {
        let negative = c < &num_traits::Zero::zero();
        let sep = match (i, negative) {
            (0, false) => "",
            (0, true) => "-",
            (_, false) => " + ",
            (_, true) => " - ",
        };
        let magnitude = if negative { -c.clone() } else { c.clone() };
        out.push_str(&format!("{sep}{magnitude} {b}"));
    }
    out
}

fn check_mk(mk: Mk) -> Result<()> {
    if mk.k == 0 || mk.k > mk.m {
        return Err(Error::InvalidParameters(format!(
            "need 1 <= k <= m, got m={}, k={}",
            mk.m, mk.k
        )));
    }
    Ok(())
}

fn table(checks: &[FockCheck]) -> String {
    let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(5).max(5);
    let mut out = format!("{:<width$}  result  detail\n", "check");
    for c in checks {
        let result = if c.passed { "pass" } else { "FAIL" };
        out.push_str(&format!("{:<width$}  {result:<6}  {}\n", c.name, c.detail));
    }
    out.trim_end().to_string()
}

fn checks_json(checks: &[FockCheck]) -> Value {
    Value::Array(
        checks
            .iter()
            .map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail}))
            .collect(),
    )
}

fn gens(mk: Mk) -> Result<Output> {
    let ideal = IdealPresentation::new(mk.m, mk.k)?;
    let mut text = Vec::new();
    let mut items = Vec::new();
    for (label, g) in ideal.generators() {
        text.push(format!("{label} = {g}"));
        items.push(json!({
            "label": label.to_string(),
            "rows": label.rows,
            "cols": label.cols,
            "polynomial": polynomial_to_json(g),
        }));
    }
    Ok(Output::ok(
        json!({"m": mk.m, "k": mk.k, "count": items.len(), "generators": items}),
        text.join("\n"),
    ))
}

fn groebner(mk: Mk, ctx: &mut Context) -> Result<Output> {
    check_mk(mk)?;
    let err = std::sync::Mutex::new(&mut *ctx.err);
    let report = buchberger_verify_with_progress(mk.m, mk.k, |done, total| {
        if let Ok(mut e) = err.lock() {
            let _ = writeln!(e, "groebner: {done}/{total} pairs reduced");
        }
    })?;
    let text = format!(
        "m={} k={} generators={} pairs={} coprime_skipped={} checked={} all_reduced={}",
        report.m,
        report.k,
        report.generators,
        report.pairs_total,
        report.coprime_skipped,
        report.pairs_checked,
        report.all_reduced
    );
    let mut out = Output::ok(report.to_json(), text);
    out.failed = !report.all_reduced;
    Ok(out)
}

fn stdmono(mk: Mk, count: bool, list: bool, ctx: &Context) -> Result<Output> {
    let basis = enumerate_standard_with_budget(mk.m, mk.k, &ctx.budget)?;
    let top = basis.iter().map(ExponentMatrix::degree).max().unwrap_or(0) as usize;
    let mut hilbert = vec![0u64; top + 1];
    for b in &basis {
        hilbert[b.degree() as usize] += 1;
    }
    let json = if list {
        json!(basis.iter().map(ExponentMatrix::to_rows).collect::<Vec<_>>())
    } else if count {
        json!({"m": mk.m, "k": mk.k, "count": basis.len()})
    } else {
        json!({"m": mk.m, "k": mk.k, "count": basis.len(), "hilbert": hilbert})
    };
    let text = if count {
        basis.len().to_string()
    } else if list {
        basis
            .iter()
            .map(|b| format!("{} {}", b.degree(), compact(&b.to_rows())))
            .collect::<Vec<_>>()
            .join("\n")
    } else {
        format!(
            "count {}\nhilbert {}",
            basis.len(),
            serde_json::to_string(&hilbert).expect("vec")
        )
    };
    Ok(Output::ok(json, text))
}

fn dim(mk: Mk, ctx: &Context) -> Result<Output> {
    let n = enumerate_standard_with_budget(mk.m, mk.k, &ctx.budget)?.len();
    Ok(Output::ok(json!({"m": mk.m, "k": mk.k, "dim": n}), n.to_string()))
}

fn rsk_cmd(inverse: bool, raw: &str) -> Result<Output> {
    if inverse {
        let v = parse_json(raw)?;
        let get_rows = |key: &str| -> Result<Vec<Vec<u32>>> {
            serde_json::from_value(v.get(key).cloned().unwrap_or(Value::Null))
                .map_err(|e| Error::Parse(format!("{key}: {e}")))
        };
        let p_rows = get_rows("P")?;
        let q_rows = get_rows("Q")?;
        let bound = |key: &str, default: u32| -> Result<u32> {
            match v.get(key) {
                None => Ok(default),
                Some(x) => x
                    .as_u64()
                    .and_then(|x| u32::try_from(x).ok())
                    .ok_or_else(|| Error::Parse(format!("{key} must be a non-negative integer"))),
            }
        };
        let cols = bound("cols", max_entry(&p_rows))?;
        let rows = bound("rows", max_entry(&q_rows))?;
        let m = rsk_inverse(&Ssyt::new(p_rows, cols)?, &Ssyt::new(q_rows, rows)?)?;
        let r = m.to_rows();
        return Ok(Output::ok(json!(r), compact(&r)));
    }
    let m = parse_matrix(raw)?;
    let (p, q) = rsk(&m);
    let text = format!("P = {}\nQ = {}", compact(p.rows()), compact(q.rows()));
    Ok(Output::ok(
        json!({"P": p.rows(), "Q": q.rows(), "shape": p.shape().parts()}),
        text,
    ))
}

fn pp_cmd(inverse: bool, raw: &str) -> Result<Output> {
    if inverse {
        let pp = PlanePartition::from_json(&parse_json(raw)?)?;
        let r = pp_to_matrix(&pp)?.to_rows();
        return Ok(Output::ok(json!(r), compact(&r)));
    }
    let pp = matrix_to_pp(&parse_matrix(raw)?)?;
    Ok(Output::ok(
        pp.to_json(),
        format!("{} bound {}", compact(&pp.rows()), pp.bound()),
    ))
}

/// `D(m+1, k+1)` is read off the word: semilength `m+1` and `k` valleys.
fn word_mk(w: &DyckWord) -> Result<(usize, usize)> {
    let n = w.semilength();
    if n == 0 {
        return Err(Error::InvalidParameters("the empty word has no matrix".into()));
    }
    Ok((n - 1, w.valleys().len()))
}

fn dyck_cmd(inverse: bool, pp: bool, stats: bool, raw: &str) -> Result<Output> {
    if stats {
        let w = parse_word(raw)?;
        let s = dyck_stats(&w);
        let text = format!(
            "valleys {:?}\ncentral {:?}\nup {:?}\ndown {:?}",
            s.valleys, s.central, s.up, s.down
        );
        let json = serde_json::to_value(&s).map_err(|e| Error::Parse(e.to_string()))?;
        return Ok(Output::ok(json, text));
    }
    if pp {
        let w = parse_word(raw)?;
        let (m, k) = word_mk(&w)?;
        let b = dyck_to_pp(&w, m, k)?;
        return Ok(Output::ok(b.to_json(), compact(&b.rows())));
    }
    if inverse {
        let w = parse_word(raw)?;
        let (m, k) = word_mk(&w)?;
        let r = dyck_to_standard(&w, m, k)?.to_rows();
        return Ok(Output::ok(json!(r), compact(&r)));
    }
    let mat = parse_matrix(raw)?;
    let w = standard_to_dyck(&mat, mat.nrows() + mat.ncols())?;
    Ok(Output::ok(json!({"word": w.to_string()}), w.to_string()))
}

fn count_cmd(c: &CountCommand) -> Output {
    let (kind, args, value) = match *c {
        CountCommand::Narayana { n, r } => ("narayana", vec![n, r], narayana(n, r)),
        CountCommand::Catalan { n } => ("catalan", vec![n], catalan(n)),
        CountCommand::Macmahon { a, b, c } => ("macmahon", vec![a, b, c], macmahon_count(a, b, c)),
    };
    Output::ok(
        json!({"kind": kind, "args": args, "value": value.to_string()}),
        value.to_string(),
    )
}

fn enum_cmd(e: &EnumCommand, ctx: &Context) -> Result<Output> {
    let (items, count) = match *e {
        EnumCommand::Pp { a, b, c, count } => {
            let items = enumerate_pp_with_budget(a, b, c, &ctx.budget)?;
            let rows: Vec<Value> = items.iter().map(|p| json!(p.rows())).collect();
            (rows, count)
        }
        EnumCommand::Dyck { n, valleys, count } => {
            let items = enumerate_dyck_with_budget(n, valleys, &ctx.budget)?;
            (items.iter().map(|w| json!(w.to_string())).collect(), count)
        }
    };
    if count {
        return Ok(Output::ok(json!({"count": items.len()}), items.len().to_string()));
    }
    let text = items
        .iter()
        .map(|v| match v {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        })
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Output::ok(json!({"count": items.len(), "items": items}), text))
}

fn fock_cmd(f: &FockCommand, ctx: &mut Context) -> Result<Output> {
    match *f {
        FockCommand::InvariantDim { m, d } => {
            let dim = invariant_dimension(m, d)?;
            Ok(Output::ok(json!({"m": m, "d": d, "dim": dim}), dim.to_string()))
        }
        FockCommand::Verify(mk) => {
            check_mk(mk)?;
            let err = std::cell::RefCell::new(&mut *ctx.err);
            let report = verify_fock_with_progress(mk.m, mk.k, |stage| {
                let _ = writeln!(err.borrow_mut(), "fock: {stage}");
            })?;
            let passed = report.all_passed();
            let mut out = Output::ok(
                json!({"m": mk.m, "k": mk.k, "checks": checks_json(&report.checks), "all_passed": passed}),
                table(&report.checks),
            );
            out.failed = !passed;
            Ok(out)
        }
        FockCommand::Basis(mk) => {
            let basis = excitation_basis(mk.m, mk.k)?;
            let items: Vec<Value> = basis
                .iter()
                .map(|e| json!({"monomial": e.monomial.to_rows(), "state": e.state.to_json()}))
                .collect();
            let text = basis
                .iter()
                .map(|e| format!("{} -> {}", compact(&e.monomial.to_rows()), state_text(&e.state)))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Output::ok(
                json!({"m": mk.m, "k": mk.k, "count": items.len(), "basis": items}),
                text,
            ))
        }
    }
}

fn verify_all(mk: Mk, ctx: &mut Context) -> Result<Output> {
    check_mk(mk)?;
    let mut checks = Vec::new();

    ctx.progress("verify-all: groebner");
    let g = buchberger_verify_with_progress(mk.m, mk.k, |_, _| {})?;
    checks.push(FockCheck {
        name: "groebner",
        passed: g.all_reduced,
        detail: format!(
            "{} of {} non-coprime S-pairs reduce to 0",
            g.pairs_checked - g.witnesses.len(),
            g.pairs_checked
        ),
    });

    ctx.progress("verify-all: standard monomials");
    let basis = enumerate_standard_with_budget(mk.m, mk.k, &ctx.budget)?;
    let expected = narayana(mk.m as u64 + 1, mk.k as u64 + 1);
    checks.push(FockCheck {
        name: "standard_count",
        passed: expected.to_usize() == Some(basis.len()),
        detail: format!("{} standard monomials, narayana {}", basis.len(), expected),
    });

    ctx.progress("verify-all: bijections");
    let chain = verify_chain(mk.m, mk.k)?;
    checks.push(FockCheck {
        name: "bijection_chain",
        passed: chain.all_passed(),
        detail: format!(
            "rsk {} tableaux {} dyck {} full {} onto {} transpose {}",
            chain.rsk_round_trip,
            chain.tableaux_round_trip,
            chain.dyck_round_trip,
            chain.full_round_trip,
            chain.onto_family,
            chain.transpose_compatible
        ),
    });

    ctx.progress("verify-all: fock");
    match verify_fock_with_progress(mk.m, mk.k, |_| {}) {
        Ok(report) => checks.extend(report.checks),
        Err(Error::BudgetExceeded { needed, limit, .. }) => checks.push(FockCheck {
            name: "fock",
            passed: true,
            detail: format!("skipped: Fock space of dimension {needed} exceeds budget {limit}"),
        }),
        Err(e) => return Err(e),
    }

    let passed = checks.iter().all(|c| c.passed);
    let mut out = Output::ok(
        json!({"m": mk.m, "k": mk.k, "checks": checks_json(&checks), "all_passed": passed}),
        table(&checks),
    );
    out.failed = !passed;
    Ok(out)
}

fn dispatch(command: &Command, ctx: &mut Context) -> Result<Output> {
    match command {
        Command::Gens(mk) => gens(*mk),
        Command::Groebner(mk) => groebner(*mk, ctx),
        Command::Stdmono { mk, count, list } => stdmono(*mk, *count, *list, ctx),
        Command::Dim(mk) => dim(*mk, ctx),
        Command::Rsk { inverse, input } => {
            let raw = ctx.read_input(input)?;
            rsk_cmd(*inverse, &raw)
        }
        Command::Pp { inverse, input } => {
            let raw = ctx.read_input(input)?;
            pp_cmd(*inverse, &raw)
        }
        Command::Dyck {
            inverse,
            pp,
            stats,
            input,
        } => {
            let raw = ctx.read_input(input)?;
            dyck_cmd(*inverse, *pp, *stats, &raw)
        }
        Command::Count(c) => Ok(count_cmd(c)),
        Command::Enum(e) => enum_cmd(e, ctx),
        Command::Fock(f) => fock_cmd(f, ctx),
        Command::VerifyAll(mk) => verify_all(*mk, ctx),
    }
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::PropertyViolation(_) | Error::LinearDependence(_) | Error::ZeroPolynomial => 1,
        _ => 2,
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    let budget = match Budget::from_env() {
        Ok(b) => b,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let mut ctx = Context { stdin, err, budget };
    match dispatch(&cli.command, &mut ctx) {
        Ok(output) => {
            let body = match cli.format {
                Format::Json => serde_json::to_string_pretty(&output.json).expect("json serializes"),
                Format::Text => output.text,
            };
            let _ = writeln!(out, "{body}");
            i32::from(output.failed)
        }
        Err(e) => {
            let _ = writeln!(ctx.err, "error: {e}");
            exit_code(&e)
        }
    }
}
