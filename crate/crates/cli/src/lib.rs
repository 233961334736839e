//! Command-line front end: argument and config handling, JSON reports, and
//! the append-only result cache.

pub mod cache;
pub mod job;
pub mod parse;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::mpsc;
use std::time::Duration;

use clap::{Args, CommandFactory, Parser, Subcommand};
use serde_json::{json, Value};
use thiserror::Error;

use job::{execute, poly_input, Job, DEFAULT_GALOIS_BUDGET, DEFAULT_RAMIFY_BOUND};
use parse::GroupInput;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_NOT_FOUND: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    NotFound(String),
    #[error("{0}")]
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::NotFound(_) => EXIT_NOT_FOUND,
            CliError::Verification(_) => EXIT_VERIFICATION,
        }
    }

    fn status(&self) -> &'static str {
        match self {
            CliError::Input(_) => "input-error",
            CliError::NotFound(_) => "not-found",
            CliError::Verification(_) => "verification-failure",
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "minram", version, about = "Field extensions with prescribed automorphism group and few ramified places")]
pub struct Cli {
    /// Result cache (JSON lines); defaults to $MINRAM_CACHE, then ./minram-cache.jsonl.
    #[arg(long, global = true, value_name = "PATH")]
    pub cache: Option<PathBuf>,
    /// Do not append to the cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
    /// `key = value` file presetting flags; flags on the command line win.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Worker threads for the searches (0: all cores).
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,
    /// Wall-clock budget; exceeding it exits with code 2.
    #[arg(long, global = true, value_name = "MS")]
    pub budget_ms: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Search the Schinzel family for a prime value of H(a, t).
    Schinzel(SchinzelArgs),
    /// First prime triple r = n^n p + (n-1)^(n-1) q with a certified trinomial.
    Bms(BmsArgs),
    /// The family X^n + T X^(n-4) + 1 over F_q(T).
    Ffield(FfieldArgs),
    /// Graph with the given automorphism group and its field recipe.
    Frucht(FruchtArgs),
    /// Subgroups H of S_n or A_n with N(H)/H isomorphic to G.
    NqSearch(NqArgs),
    /// Galois-group certificate (S_n / A_n) for an integer polynomial.
    Galois(PolyArgs),
    /// Ramified primes of the stem field of an irreducible polynomial.
    Ramify(RamifyArgs),
    /// Full realization certificate for a group G.
    Realize(RealizeArgs),
    /// Re-check cached or saved records by recomputation.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct SchinzelArgs {
    #[arg(long)]
    pub n: usize,
    /// Fix a instead of selecting it, e.g. `1,-1`.
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    /// `Q`, or a monic irreducible polynomial defining a number field.
    #[arg(long, default_value = "Q", allow_hyphen_values = true)]
    pub base: String,
    #[arg(long, default_value_t = 1)]
    pub t_min: u64,
    #[arg(long, default_value_t = 100_000)]
    pub t_max: u64,
    /// Coordinates of a are drawn from [-B, B].
    #[arg(long, default_value_t = 3)]
    pub a_box: i64,
    #[arg(long)]
    pub require_proven: bool,
    /// Allow bases of degree > 1.
    #[arg(long)]
    pub experimental: bool,
}

#[derive(Args, Debug)]
pub struct BmsArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 50)]
    pub p_max: u64,
    /// Defaults to --p-max.
    #[arg(long)]
    pub q_max: Option<u64>,
    #[arg(long)]
    pub require_proven: bool,
}

#[derive(Args, Debug)]
pub struct FfieldArgs {
    #[arg(long, default_value_t = 9)]
    pub n: usize,
    #[arg(long, default_value_t = 2)]
    pub q: u64,
    #[arg(long, default_value = "F2(T)")]
    pub base: String,
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct FruchtArgs {
    #[arg(long)]
    pub group: String,
    #[arg(long, default_value_t = 50)]
    pub p_max: u64,
    /// Include the edge list in the report.
    #[arg(long)]
    pub emit_graph: bool,
}

#[derive(Args, Debug)]
pub struct NqArgs {
    #[arg(long)]
    pub group: String,
    #[arg(long, default_value_t = 1)]
    pub n_min: usize,
    #[arg(long, default_value_t = 7)]
    pub n_max: usize,
    /// `S`, `A`, or `S,A`.
    #[arg(long, default_value = "S,A")]
    pub kinds: String,
}

#[derive(Args, Debug)]
pub struct PolyArgs {
    /// e.g. `x^5 - x - 1`, or a lowest-first list `[-1,-1,0,0,0,1]`.
    #[arg(allow_hyphen_values = true)]
    pub poly: String,
    #[arg(long, default_value_t = DEFAULT_GALOIS_BUDGET)]
    pub prime_budget: usize,
}

#[derive(Args, Debug)]
pub struct RamifyArgs {
    #[arg(allow_hyphen_values = true)]
    pub poly: String,
    /// Trial-division bound for factoring the discriminant.
    #[arg(long, default_value_t = DEFAULT_RAMIFY_BOUND)]
    pub factor_bound: u64,
}

#[derive(Args, Debug)]
pub struct RealizeArgs {
    #[arg(long)]
    pub group: String,
    /// Defaults to `ffield` when --base is a function field, else `bms`.
    #[arg(long)]
    pub strategy: Option<String>,
    #[arg(long, default_value = "Q")]
    pub base: String,
    /// Degree of Gamma; required with an explicit --h.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 7)]
    pub n_max: usize,
    /// `auto`, `an-1` (A_(n-1) in S_n), or generators in cycle notation.
    #[arg(long, default_value = "auto")]
    pub h: String,
    #[arg(long, default_value_t = 2)]
    pub q: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 50)]
    pub p_max: u64,
    #[arg(long, default_value_t = 100_000)]
    pub t_max: u64,
    #[arg(long)]
    pub require_proven: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// A JSON-lines cache or a saved report; defaults to the cache path.
    pub file: Option<PathBuf>,
}

fn split_list(s: &str) -> Vec<String> {
    s.split(',').map(|x| x.trim().to_string()).filter(|x| !x.is_empty()).collect()
}

fn check_positive(name: &str, v: u64) -> Result<(), CliError> {
    if v == 0 {
        return Err(CliError::Input(format!("--{name} must be positive")));
    }
    Ok(())
}

/// Normalized job for a search subcommand; `None` for `verify`.
pub fn job_of(cmd: &Command) -> Result<Option<Job>, CliError> {
    Ok(Some(match cmd {
        Command::Schinzel(a) => {
            check_positive("t-max", a.t_max)?;
            Job::Schinzel {
                n: a.n,
                a: a.a.as_deref().map(split_list),
                base: a.base.clone(),
                t_min: a.t_min,
                t_max: a.t_max,
                a_box: a.a_box,
                require_proven: a.require_proven,
                experimental: a.experimental,
            }
        }
        Command::Bms(a) => Job::Bms {
            n: a.n,
            p_max: a.p_max,
            q_max: a.q_max.unwrap_or(a.p_max),
            require_proven: a.require_proven,
        },
        Command::Ffield(a) => {
            if let job::BaseField::FunctionField(Some(q)) = job::parse_base(&a.base)? {
                if q != a.q && a.base != "F2(T)" {
                    return Err(CliError::Input(format!("--base {} disagrees with --q {}", a.base, a.q)));
                }
            }
            check_positive("samples", a.samples as u64)?;
            Job::Ffield { n: a.n, q: a.q, samples: a.samples, seed: a.seed }
        }
        Command::Frucht(a) => Job::Frucht { group: GroupInput::read(&a.group)?, p_max: a.p_max, emit_graph: a.emit_graph },
        Command::NqSearch(a) => {
            check_positive("n-max", a.n_max as u64)?;
            Job::Nq { group: GroupInput::read(&a.group)?, n_min: a.n_min, n_max: a.n_max, kinds: split_list(&a.kinds) }
        }
        Command::Galois(a) => Job::Galois { coeffs: poly_input(&a.poly)?, prime_budget: a.prime_budget },
        Command::Ramify(a) => Job::Ramify { coeffs: poly_input(&a.poly)?, factor_bound: a.factor_bound },
        Command::Realize(a) => {
            let base = job::parse_base(&a.base)?;
            let (strategy, q) = match (&a.strategy, base) {
                (Some(s), job::BaseField::FunctionField(_)) if s != "ffield" => {
                    return Err(CliError::Input(format!("strategy `{s}` does not work over a function field")));
                }
                (Some(s), job::BaseField::Rationals) if s == "ffield" => {
                    return Err(CliError::Input("strategy `ffield` needs --base Fq(T)".into()));
                }
                (_, job::BaseField::NumberField(_)) => {
                    return Err(CliError::Input("realize supports --base Q or Fq(T)".into()));
                }
                (_, job::BaseField::FunctionField(q)) => ("ffield".to_string(), q.unwrap_or(a.q)),
                (Some(s), _) => (s.clone(), a.q),
                (None, _) => ("bms".to_string(), a.q),
            };
            check_positive("n-max", a.n_max as u64)?;
            Job::Realize {
                group: GroupInput::read(&a.group)?,
                strategy,
                n: a.n,
                n_max: a.n_max,
                h: a.h.clone(),
                q,
                seed: a.seed,
                p_max: a.p_max,
                t_max: a.t_max,
                require_proven: a.require_proven,
            }
        }
        Command::Verify(_) => return Ok(None),
    }))
}

/// The full record: payload plus tool version and timestamp.
pub fn record(job: &Job, result: Value, timestamp: &str) -> Value {
    let mut v = job.to_value();
    v["v"] = json!(SCHEMA_VERSION);
    v["result"] = result;
    v["tool_version"] = json!(TOOL_VERSION);
    v["timestamp"] = json!(timestamp);
    v
}

pub fn now_utc() -> String {
    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Millis, true)
}

fn with_budget<T: Send + 'static>(budget_ms: Option<u64>, f: impl FnOnce() -> T + Send + 'static) -> Option<T> {
    let Some(ms) = budget_ms else { return Some(f()) };
    let (tx, rx) = mpsc::channel();
    std::thread::spawn(move || {
        let _ = tx.send(f());
    });
    rx.recv_timeout(Duration::from_millis(ms)).ok()
}

/// Flags from the config file are inserted right after the subcommand name,
/// so that later command-line flags override them. Keys that the subcommand
/// does not take are skipped.
fn apply_config(argv: Vec<OsString>) -> Result<Vec<OsString>, CliError> {
    let strs: Vec<String> = argv.iter().map(|s| s.to_string_lossy().into_owned()).collect();
    let path = strs.iter().enumerate().find_map(|(i, s)| {
        s.strip_prefix("--config=").map(str::to_string).or_else(|| (s == "--config").then(|| strs.get(i + 1).cloned()).flatten())
    });
    let Some(path) = path else { return Ok(argv) };
    let text = std::fs::read_to_string(&path).map_err(|e| CliError::Input(format!("config {path}: {e}")))?;
    let entries = parse::parse_config(&text)?;
    let mut root = Cli::command();
    root.build();
    let Some(pos) = strs.iter().skip(1).position(|s| root.find_subcommand(s).is_some()).map(|p| p + 1) else {
        return Ok(argv);
    };
    let sub = root.find_subcommand(&strs[pos]).unwrap();
    let known = |key: &str| -> Option<bool> {
        sub.get_arguments()
            .find(|a| a.get_long() == Some(key))
            .map(|a| matches!(a.get_action(), clap::ArgAction::SetTrue))
    };
    let any_known = |key: &str| root.get_subcommands().any(|s| s.get_arguments().any(|a| a.get_long() == Some(key)));
    let mut injected = Vec::new();
    for (key, value) in entries {
        if key == "config" {
            continue;
        }
        match known(&key) {
            Some(true) => match value.as_str() {
                "true" | "yes" | "1" => injected.push(format!("--{key}")),
                "false" | "no" | "0" => {}
                _ => return Err(CliError::Input(format!("config: `{key}` expects true or false"))),
            },
            Some(false) => {
                injected.push(format!("--{key}"));
                injected.push(value);
            }
            None if any_known(&key) => {}
            None => return Err(CliError::Input(format!("config: unknown key `{key}`"))),
        }
    }
    let mut out = argv;
    for (i, a) in injected.into_iter().enumerate() {
        out.insert(pos + 1 + i, a.into());
    }
    Ok(out)
}

fn emit(out: &mut dyn Write, v: &Value) {
    let _ = writeln!(out, "{}", serde_json::to_string_pretty(v).expect("json"));
}

fn error_doc(kind: &str, e: &CliError) -> Value {
    json!({ "v": SCHEMA_VERSION, "kind": kind, "status": e.status(), "error": e.to_string() })
}

/// Runs one command; writes one JSON document to `out` and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let argv = match apply_config(argv) {
        Ok(a) => a,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            emit(out, &error_doc("config", &e));
            return e.exit_code();
        }
    };
    let cli = match Cli::command().args_override_self(true).try_get_matches_from(argv) {
        Ok(m) => match <Cli as clap::FromArgMatches>::from_arg_matches(&m) {
            Ok(c) => c,
            Err(e) => {
                let _ = write!(err, "{e}");
                return EXIT_INPUT;
            }
        },
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let _ = write!(err, "{e}");
            return EXIT_INPUT;
        }
    };
    let cache_path = cache::resolve_path(cli.cache.as_deref());
    if let Command::Verify(v) = &cli.command {
        let path = v.file.clone().unwrap_or(cache_path);
        let threads = cli.threads;
        let Some(res) = with_budget(cli.budget_ms, move || minram::par::with_threads(threads, || cache::verify_file(&path))) else {
            let e = CliError::NotFound("time budget exhausted".into());
            emit(out, &error_doc("verify", &e));
            return e.exit_code();
        };
        return match res {
            Ok((doc, code)) => {
                emit(out, &doc);
                code
            }
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                emit(out, &error_doc("verify", &e));
                e.exit_code()
            }
        };
    }
    let job = match job_of(&cli.command) {
        Ok(j) => j.expect("search command"),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            emit(out, &error_doc("input", &e));
            return e.exit_code();
        }
    };
    let kind = job.kind();
    let threads = cli.threads;
    let j2 = job.clone();
    let res = with_budget(cli.budget_ms, move || minram::par::with_threads(threads, || execute(&j2)))
        .unwrap_or_else(|| Err(CliError::NotFound(format!("time budget of {} ms exhausted", cli.budget_ms.unwrap()))));
    match res {
        Ok(result) => {
            let rec = record(&job, result, &now_utc());
            if !cli.no_cache {
                if let Err(e) = cache::append(&cache_path, &rec) {
                    let _ = writeln!(err, "warning: cache {}: {e}", cache_path.display());
                }
            }
            emit(out, &rec);
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            emit(out, &error_doc(kind, &e));
            e.exit_code()
        }
    }
}
