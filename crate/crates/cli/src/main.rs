mod cache;

use std::io::Write;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use brauer_core::algebra::exact_algebra;
use brauer_core::field::{sample_omega, PrimeField};
use brauer_core::idempotent::{
    fusion_idempotent, recurrence_idempotent, FusionOutcome, IdempotentError, IdempotentResult, Method,
};
use brauer_core::suites::{run_suite, validate_mode, Suite, SuiteConfig, SuiteError};
use brauer_core::tableau::{contents, enumerate_updown, exponents, f_constant, Partition, TableauError};
use brauer_core::{BrauerAlgebra, Field, FieldMode, GroundField, QOmega, UpdownTableau};

use cache::Cache;

const DEFAULT_PRIME: u64 = 1_000_003;

#[derive(Parser)]
#[command(name = "brauer", version, about = "Primitive idempotents of the Brauer algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List updown tableaux with contents, exponents and f(T).
    Tableaux(Opts),
    /// Compute E_T for one tableau.
    Idempotent(Opts),
    /// Run a verification suite.
    Verify(Opts),
    /// Time recurrence and fusion in both field modes.
    Bench(Opts),
}

#[derive(Args, Clone)]
struct Opts {
    /// Tableau length.
    #[arg(long)]
    n: Option<usize>,
    /// Final shape, e.g. `2,1`; `0` for the empty partition.
    #[arg(long)]
    shape: Option<String>,
    /// Tableau as `|`-separated shapes, e.g. `1|2|21`.
    #[arg(long)]
    tableau: Option<String>,
    #[arg(long, value_enum, default_value_t = MethodArg::Recurrence)]
    method: MethodArg,
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
    mode: ModeArg,
    /// Prime for `--mode modp`.
    #[arg(long)]
    prime: Option<u64>,
    /// Residue of ω for `--mode modp`; sampled from the seed when absent.
    #[arg(long = "omega-val")]
    omega_val: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads for tableau-level parallelism.
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum MethodArg {
    Recurrence,
    Fusion,
    Both,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum ModeArg {
    Exact,
    Modp,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

enum CliError {
    Usage(String),
    Failed(String),
}

impl From<TableauError> for CliError {
    fn from(e: TableauError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<IdempotentError> for CliError {
    fn from(e: IdempotentError) -> Self {
        if e.is_degeneration() {
            CliError::Usage(format!("{e}; choose another prime or ω"))
        } else {
            CliError::Failed(e.to_string())
        }
    }
}

impl From<SuiteError> for CliError {
    fn from(e: SuiteError) -> Self {
        match e {
            SuiteError::Config(m) => CliError::Usage(m),
            SuiteError::Computation(e) => e.into(),
        }
    }
}

/// Validated options.
struct RunConfig {
    n: usize,
    shape: Option<Partition>,
    tableau: Option<UpdownTableau>,
    method: MethodArg,
    suite: String,
    mode: FieldMode,
    prime: u64,
    seed: u64,
    format: Format,
}

impl RunConfig {
    fn resolve(o: &Opts, default_n: Option<usize>) -> Result<Self, CliError> {
        let tableau = o
            .tableau
            .as_deref()
            .map(UpdownTableau::parse)
            .transpose()
            .map_err(|e| CliError::Usage(format!("bad --tableau: {e}")))?;
        let shape = o
            .shape
            .as_deref()
            .map(str::parse::<Partition>)
            .transpose()
            .map_err(|e| CliError::Usage(format!("bad --shape: {e}")))?;
        let n = match (o.n, &tableau) {
            (Some(n), Some(t)) if n != t.n() => {
                return Err(CliError::Usage(format!("--n {n} but the tableau has length {}", t.n())))
            }
            (Some(n), _) => n,
            (None, Some(t)) => t.n(),
            (None, None) => default_n.ok_or_else(|| CliError::Usage("--n is required".into()))?,
        };
        if n == 0 {
            return Err(CliError::Usage("--n must be at least 1".into()));
        }
        if o.jobs == Some(0) {
            return Err(CliError::Usage("--jobs must be at least 1".into()));
        }
        let prime = o.prime.unwrap_or(DEFAULT_PRIME);
        let mode = match o.mode {
            ModeArg::Exact => FieldMode::ExactOmega,
            ModeArg::Modp => modular_mode(n, prime, o.omega_val, o.seed)?,
        };
        Ok(Self {
            n,
            shape,
            tableau,
            method: o.method,
            suite: o.suite.clone(),
            mode,
            prime,
            seed: o.seed,
            format: o.format,
        })
    }
}

fn modular_mode(n: usize, prime: u64, omega: Option<u64>, seed: u64) -> Result<FieldMode, CliError> {
    // validate_mode rejects tiny primes before sample_omega could panic
    validate_mode(n, FieldMode::PrimeModular { prime, omega: 0 })?;
    let omega = omega.unwrap_or_else(|| sample_omega(prime, seed));
    let mode = FieldMode::PrimeModular { prime, omega };
    validate_mode(n, mode)?;
    Ok(mode)
}

fn prime_algebra(n: usize, mode: FieldMode) -> Result<BrauerAlgebra<PrimeField>, CliError> {
    let FieldMode::PrimeModular { prime, omega } = mode else {
        unreachable!("called for modular modes only")
    };
    let field = PrimeField::new(prime).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(BrauerAlgebra::new(n, field, omega, mode))
}

/// Writes to stdout; a closed pipe (e.g. `| head`) is not an error.
fn emit(format: Format, v: &Value, text: String) {
    let body = match format {
        Format::Json => serde_json::to_string_pretty(v).expect("JSON value"),
        Format::Text => text,
    };
    let _ = writeln!(std::io::stdout().lock(), "{body}");
}

fn cmd_tableaux(cfg: &RunConfig) -> Result<(), CliError> {
    let tabs = match &cfg.tableau {
        Some(t) => vec![t.clone()],
        None => enumerate_updown(cfg.n, cfg.shape.as_ref())?,
    };
    let q = QOmega::omega();
    let mut rows = Vec::new();
    let mut lines = Vec::new();
    for t in &tabs {
        let cs = contents(t);
        let (f, _) = f_constant(t)?;
        let p = exponents(t);
        let values: Vec<String> = cs.iter().map(|c| q.format(&c.exact())).collect();
        rows.push(json!({
            "tableau": t.to_string(),
            "shapes": t.shapes(),
            "contents": cs.iter().zip(&values).map(|(c, v)| json!({"symbol": c.to_string(), "value": v})).collect::<Vec<_>>(),
            "exponents": p,
            "f": q.to_json(&f),
        }));
        let p_text: Vec<String> = p.iter().map(i64::to_string).collect();
        lines.push(format!(
            "{t}\tc = {}\t[{}]\tp = ({})\tf = {}",
            cs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "),
            values.join(", "),
            p_text.join(","),
            q.format(&f)
        ));
    }
    lines.push(format!("{} tableaux", tabs.len()));
    emit(cfg.format, &json!({"n": cfg.n, "tableaux": rows}), lines.join("\n"));
    Ok(())
}

fn cmd_idempotent(cfg: &RunConfig) -> Result<(), CliError> {
    let t = cfg
        .tableau
        .clone()
        .ok_or_else(|| CliError::Usage("idempotent needs --tableau".into()))?;
    let cache = Cache::from_env();
    match cfg.mode {
        FieldMode::ExactOmega => idempotent_in(&exact_algebra(cfg.n), &t, cfg, cache.as_ref()),
        mode => idempotent_in(&prime_algebra(cfg.n, mode)?, &t, cfg, cache.as_ref()),
    }
}

fn cached_recurrence<F: GroundField>(
    alg: &BrauerAlgebra<F>,
    t: &UpdownTableau,
    cache: Option<&Cache>,
) -> Result<IdempotentResult<F::Elem>, CliError> {
    if let Some(hit) = cache
        .and_then(|c| c.load(t, alg.mode(), Method::Recurrence))
        .and_then(|v| IdempotentResult::from_json(alg, &v).ok())
        .filter(|r| r.tableau == *t)
    {
        return Ok(hit);
    }
    let r = recurrence_idempotent(alg, t)?;
    if let Some(c) = cache {
        c.store(t, alg.mode(), Method::Recurrence, &r.to_json(alg));
    }
    Ok(r)
}

fn fusion_json<F: GroundField>(alg: &BrauerAlgebra<F>, o: &FusionOutcome<F::Elem>) -> Value {
    let mut v = o.result.to_json(alg);
    v["exponents"] = json!(o.exponents);
    v["pole_orders"] = json!(o.pole_orders);
    v
}

fn idempotent_in<F: GroundField>(
    alg: &BrauerAlgebra<F>,
    t: &UpdownTableau,
    cfg: &RunConfig,
    cache: Option<&Cache>,
) -> Result<(), CliError> {
    let f = alg.field();
    let rec = match cfg.method {
        MethodArg::Recurrence | MethodArg::Both => Some(cached_recurrence(alg, t, cache)?),
        MethodArg::Fusion => None,
    };
    let fus = match cfg.method {
        MethodArg::Fusion | MethodArg::Both => {
            let o = fusion_idempotent(alg, t, false)?;
            if let Some(c) = cache {
                c.store(t, alg.mode(), Method::Fusion, &o.result.to_json(alg));
            }
            Some(o)
        }
        MethodArg::Recurrence => None,
    };
    let agree = match (&rec, &fus) {
        (Some(r), Some(o)) => Some(r.element == o.result.element),
        _ => None,
    };

    let mut lines = vec![format!("T = {t} ({})", alg.mode().label())];
    let mut out = json!({"tableau": t.to_string(), "mode": alg.mode()});
    if let Some(r) = &rec {
        lines.push(format!("recurrence: E_T = {}", alg.format(&r.element)));
        out["recurrence"] = r.to_json(alg);
    }
    if let Some(o) = &fus {
        lines.push(format!(
            "fusion: exponents {:?}, pole orders {:?}, f(T) = {}",
            o.exponents,
            o.pole_orders,
            f.format(&o.result.constant)
        ));
        lines.push(format!("fusion: E_T = {}", alg.format(&o.result.element)));
        out["fusion"] = fusion_json(alg, o);
    }
    if let Some(a) = agree {
        lines.push(format!("agree: {}", if a { "yes" } else { "NO" }));
        out["agree"] = json!(a);
    }
    emit(cfg.format, &out, lines.join("\n"));
    match agree {
        Some(false) => Err(CliError::Failed(format!("fusion and recurrence disagree for {t}"))),
        _ => Ok(()),
    }
}

fn cmd_verify(cfg: &RunConfig) -> Result<(), CliError> {
    let suite: Suite = cfg.suite.parse()?;
    let sc = SuiteConfig {
        n: cfg.n,
        mode: cfg.mode,
        seed: cfg.seed,
        cross_check: true,
    };
    let report = run_suite(suite, &sc)?;
    let v = serde_json::to_value(&report).expect("report serializes");
    emit(cfg.format, &v, report.to_string());
    if report.all_passed() {
        Ok(())
    } else {
        Err(CliError::Failed(format!("{} of {} checks failed", report.failed, report.records.len())))
    }
}

fn millis(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

/// Per-tableau wall times, sequential so the numbers are comparable.
fn bench_in<F: GroundField>(alg: &BrauerAlgebra<F>, tabs: &[UpdownTableau]) -> Value {
    let mut per = Vec::new();
    let (mut rec_total, mut fus_total, mut timed) = (Duration::ZERO, Duration::ZERO, 0usize);
    for t in tabs {
        let s = Instant::now();
        let rec = recurrence_idempotent(alg, t);
        let rec_time = s.elapsed();
        let s = Instant::now();
        let fus = fusion_idempotent(alg, t, false);
        let fus_time = s.elapsed();
        let ok = rec.is_ok() && fus.is_ok();
        if ok {
            rec_total += rec_time;
            fus_total += fus_time;
            timed += 1;
        }
        per.push(json!({
            "tableau": t.to_string(),
            "recurrence_ms": millis(rec_time),
            "fusion_ms": millis(fus_time),
            "ok": ok,
        }));
    }
    let avg = |d: Duration| if timed == 0 { 0.0 } else { millis(d) / timed as f64 };
    json!({
        "mode": alg.mode(),
        "timed": timed,
        "skipped": tabs.len() - timed,
        "recurrence_ms_per_tableau": avg(rec_total),
        "fusion_ms_per_tableau": avg(fus_total),
        "per_tableau": per,
    })
}

fn cmd_bench(cfg: &RunConfig) -> Result<(), CliError> {
    let tabs = enumerate_updown(cfg.n, cfg.shape.as_ref())?;
    let modular = match cfg.mode {
        FieldMode::ExactOmega => modular_mode(cfg.n, cfg.prime, None, cfg.seed)?,
        m => m,
    };
    let exact = bench_in(&exact_algebra(cfg.n), &tabs);
    let modp = bench_in(&prime_algebra(cfg.n, modular)?, &tabs);
    let out = json!({"n": cfg.n, "seed": cfg.seed, "tableaux": tabs.len(), "exact": exact, "modp": modp});
    let text = format!(
        "n = {}, {} tableaux\n{:<28} {:>16} {:>16}\n{:<28} {:>16.3} {:>16.3}\n{:<28} {:>16.3} {:>16.3}",
        cfg.n,
        tabs.len(),
        "mode",
        "recurrence ms",
        "fusion ms",
        "exact",
        exact["recurrence_ms_per_tableau"].as_f64().unwrap_or(0.0),
        exact["fusion_ms_per_tableau"].as_f64().unwrap_or(0.0),
        modular.label(),
        modp["recurrence_ms_per_tableau"].as_f64().unwrap_or(0.0),
        modp["fusion_ms_per_tableau"].as_f64().unwrap_or(0.0),
    );
    emit(cfg.format, &out, text);
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    let (opts, default_n): (&Opts, Option<usize>) = match &cli.command {
        Command::Tableaux(o) | Command::Idempotent(o) => (o, None),
        Command::Verify(o) => (o, Some(3)),
        Command::Bench(o) => (o, Some(4)),
    };
    let cfg = RunConfig::resolve(opts, default_n)?;
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = opts.jobs {
        pool = pool.num_threads(j);
    }
    let pool = pool.build().map_err(|e| CliError::Usage(e.to_string()))?;
    let started = Instant::now();
    let result = pool.install(|| match &cli.command {
        Command::Tableaux(_) => cmd_tableaux(&cfg),
        Command::Idempotent(_) => cmd_idempotent(&cfg),
        Command::Verify(_) => cmd_verify(&cfg),
        Command::Bench(_) => cmd_bench(&cfg),
    });
    eprintln!("wall time: {:.3} s", started.elapsed().as_secs_f64());
    result
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Failed(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(m)) => {
            eprintln!("usage error: {m}");
            ExitCode::from(2)
        }
    }
}
