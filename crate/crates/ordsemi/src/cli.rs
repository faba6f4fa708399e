//! Command-line front end: a `RunConfig` names an instance, an operation, and
//! an optional universe recipe; `run` executes it into a `Report` envelope
//! `{config, result, violations, witnesses, timing-ms}`.
//!
//! Exit statuses: 0 = ran with no violations, 1 = violations or a
//! counterexample found, 2 = usage or validation error.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::commute::{
    centralizer, check_normalizer_equals_centralizer, neumann_chain, normalizer, periodicity,
    power_commutation_scan,
};
use crate::error::{Error, Result};
use crate::instances::semiring::SemigroupSemiring;
use crate::instances::words::FreeMonoid;
use crate::instances::{pagano_witness, LeftZero, LowerTriangular, NatAdd, NonNegRationals, UpperTriangular};
use crate::products::{
    product_set, small_doubling_verdict, superadditivity_check, DEFAULT_PRODUCT_CAP,
};
use crate::search::{
    exhaustive_theorem_scan, freiman_progression_explorer, randomized_law_suite,
    randomized_semiring_suite, ScanCaps, SuiteOptions, SuiteReport,
};
use crate::semigroup::{ordering_label, Sample, Semigroup, Semiring};
use crate::sets::{FiniteSubset, Universe, UniverseSpec};

/// Which instance a run targets. Serialized with a `name` tag so batch files
/// read naturally: `{"name": "free_monoid", "alphabet_size": 2}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case", deny_unknown_fields)]
pub enum InstanceSpec {
    FreeMonoid { alphabet_size: usize },
    UpperTriangular { dim: usize },
    LowerTriangular { dim: usize },
    NatAdd,
    LeftZero { carrier: Vec<String> },
    /// Maps from free-monoid words to nonnegative rational coefficients.
    Semiring { alphabet_size: usize },
    NonnegRationals,
}

fn default_depth() -> u32 {
    8
}
fn default_period_depth() -> u32 {
    10
}
fn default_trials() -> u64 {
    2000
}

/// What to compute. Element texts use the instance's own syntax.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case", deny_unknown_fields)]
pub enum OperationSpec {
    /// Elementwise product of the listed sets, in order.
    Product { sets: Vec<Vec<String>> },
    /// Superadditive lower bound `|S1...Sn| >= 1 - n + sum |Si|`.
    Bound { sets: Vec<Vec<String>> },
    /// Square-size dichotomy verdict for one set.
    Verdict { set: Vec<String> },
    Centralizer { set: Vec<String> },
    Normalizer { set: Vec<String> },
    /// Interleaving chain `a^n b < a^(n-1) b a < ... < b a^n` from `ab < ba`.
    Chain {
        a: String,
        b: String,
        #[serde(default = "default_depth")]
        depth: u32,
    },
    /// `a^n b` vs `b a^n` for `1 <= n <= depth`.
    Powerscan {
        a: String,
        b: String,
        #[serde(default = "default_depth")]
        depth: u32,
    },
    /// First repeated power of an element, if any.
    Period {
        element: String,
        #[serde(default = "default_period_depth")]
        depth: u32,
    },
    /// Exhaustive dichotomy scan over all k-subsets of the universe.
    ScanTheorem { kmin: usize, kmax: usize },
    /// Progression-cover exploration of commuting small-square subsets.
    ScanFreiman { kmin: usize, kmax: usize },
    /// Randomized law suite with fresh samples each trial.
    Laws {
        #[serde(default = "default_trials")]
        trials: u64,
    },
    /// Two distinct all-positive matrices with equal products against a
    /// third; instance-independent.
    Pagano { dim: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Caps {
    pub product: usize,
    pub enumeration: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { product: DEFAULT_PRODUCT_CAP, enumeration: 1_000_000 }
    }
}

fn default_seed() -> u64 {
    1
}

/// One complete run description; `batch` files hold a JSON array of these.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub instance: InstanceSpec,
    pub operation: OperationSpec,
    /// Defaults per instance when absent: words up to length 3, the range
    /// 1..=12, the full carrier, or 24 sampled elements.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub universe: Option<UniverseSpec>,
    #[serde(default)]
    pub caps: Caps,
    #[serde(default = "default_seed")]
    pub seed: u64,
    /// Worker threads for scans; 0 means one per core.
    #[serde(default)]
    pub jobs: usize,
}

/// The report envelope every run produces.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub config: RunConfig,
    pub result: Value,
    pub violations: u64,
    pub witnesses: Vec<Value>,
    #[serde(rename = "timing-ms")]
    pub timing_ms: u64,
}

pub fn run(config: &RunConfig) -> Result<Report> {
    let start = Instant::now();
    let (result, violations, witnesses) = dispatch(config)?;
    Ok(Report {
        config: config.clone(),
        result,
        violations,
        witnesses,
        timing_ms: start.elapsed().as_millis() as u64,
    })
}

type Outcome = (Value, u64, Vec<Value>);

fn dispatch(config: &RunConfig) -> Result<Outcome> {
    match &config.instance {
        InstanceSpec::FreeMonoid { alphabet_size } => {
            exec(&FreeMonoid::new(*alphabet_size)?, config)
        }
        InstanceSpec::UpperTriangular { dim } => exec(&UpperTriangular::new(*dim)?, config),
        InstanceSpec::LowerTriangular { dim } => exec(&LowerTriangular::new(*dim)?, config),
        InstanceSpec::NatAdd => exec(&NatAdd, config),
        InstanceSpec::LeftZero { carrier } => exec(&LeftZero::new(carrier.clone())?, config),
        InstanceSpec::Semiring { alphabet_size } => exec_semiring(
            &SemigroupSemiring::new(NonNegRationals, FreeMonoid::new(*alphabet_size)?),
            config,
        ),
        InstanceSpec::NonnegRationals => exec_semiring(&NonNegRationals, config),
    }
}

fn exec<I>(inst: &I, config: &RunConfig) -> Result<Outcome>
where
    I: Sample + Sync,
    I::Elem: Send + Sync,
{
    if let OperationSpec::Laws { trials } = &config.operation {
        let report = randomized_law_suite(inst, *trials, config.seed, &SuiteOptions::default())?;
        return Ok(law_suite_outcome(report)?);
    }
    exec_common(inst, config)
}

/// Semiring instances answer `laws` with the semiring battery (additive and
/// multiplicative axioms); everything else runs as for plain instances.
fn exec_semiring<K>(inst: &K, config: &RunConfig) -> Result<Outcome>
where
    K: Semiring + Sample + Sync,
    K::Elem: Send + Sync,
{
    if let OperationSpec::Laws { trials } = &config.operation {
        let report = randomized_semiring_suite(inst, *trials, config.seed)?;
        return Ok(law_suite_outcome(report)?);
    }
    exec_common(inst, config)
}

fn law_suite_outcome(report: SuiteReport) -> Result<Outcome> {
    let violations = report
        .laws
        .iter()
        .filter(|l| l.applicable)
        .map(|l| l.failures)
        .sum();
    let witnesses = report
        .laws
        .iter()
        .filter(|l| l.failures > 0)
        .map(|l| json!({ "law": l.law, "applicable": l.applicable, "witness": l.witness }))
        .collect();
    Ok((serde_json::to_value(&report)?, violations, witnesses))
}

fn parse_set<I: Semigroup>(inst: &I, texts: &[String]) -> Result<FiniteSubset<I::Elem>> {
    let elems = texts.iter().map(|t| inst.parse(t)).collect::<Result<Vec<_>>>()?;
    Ok(FiniteSubset::new(inst, elems))
}

fn parse_sets<I: Semigroup>(
    inst: &I,
    sets: &[Vec<String>],
) -> Result<Vec<FiniteSubset<I::Elem>>> {
    sets.iter().map(|texts| parse_set(inst, texts)).collect()
}

fn default_universe(instance: &InstanceSpec) -> UniverseSpec {
    match instance {
        InstanceSpec::FreeMonoid { .. } => UniverseSpec::Words { max_len: 3 },
        InstanceSpec::NatAdd => UniverseSpec::Range { max: 12 },
        InstanceSpec::LeftZero { .. } => UniverseSpec::Carrier,
        _ => UniverseSpec::Sampled { count: 24 },
    }
}

fn resolve_universe<I: Sample>(inst: &I, config: &RunConfig) -> Result<Universe<I::Elem>> {
    let spec = config
        .universe
        .clone()
        .unwrap_or_else(|| default_universe(&config.instance));
    match &spec {
        UniverseSpec::Sampled { count } => Universe::sampled(inst, *count, config.seed),
        other => inst.universe(other, config.seed),
    }
}

fn scan_caps(config: &RunConfig) -> ScanCaps {
    ScanCaps { product: config.caps.product, enumeration: config.caps.enumeration }
}

fn exec_common<I>(inst: &I, config: &RunConfig) -> Result<Outcome>
where
    I: Sample + Sync,
    I::Elem: Send + Sync,
{
    match &config.operation {
        OperationSpec::Product { sets } => {
            let parsed = parse_sets(inst, sets)?;
            let product = product_set(inst, &parsed, config.caps.product)?;
            let factors: Vec<Vec<String>> = parsed.iter().map(|s| s.render_all(inst)).collect();
            let result = json!({
                "factors": factors,
                "product": product.render_all(inst),
                "size": product.len(),
            });
            Ok((result, 0, Vec::new()))
        }
        OperationSpec::Bound { sets } => {
            let parsed = parse_sets(inst, sets)?;
            let check = superadditivity_check(inst, &parsed, config.caps.product)?;
            let factors: Vec<Vec<String>> = parsed.iter().map(|s| s.render_all(inst)).collect();
            let result = json!({
                "factors": factors,
                "bound": check.bound,
                "actual": check.actual,
                "holds": check.holds,
            });
            let witnesses =
                if check.holds { Vec::new() } else { vec![serde_json::to_value(check)?] };
            Ok((result, u64::from(!check.holds), witnesses))
        }
        OperationSpec::Verdict { set } => {
            let s = parse_set(inst, set)?;
            let verdict = small_doubling_verdict(inst, &s)?;
            let witnesses = if verdict.theorem_consistent {
                Vec::new()
            } else {
                vec![serde_json::to_value(&verdict)?]
            };
            let violations = u64::from(!verdict.theorem_consistent);
            let result = json!({
                "set": s.render_all(inst),
                "verdict": serde_json::to_value(&verdict)?,
            });
            Ok((result, violations, witnesses))
        }
        OperationSpec::Centralizer { set } => {
            let s = parse_set(inst, set)?;
            let universe = resolve_universe(inst, config)?;
            let c = centralizer(inst, &s, &universe)?;
            let result = json!({
                "set": s.render_all(inst),
                "universe": universe.recipe,
                "universe_size": universe.len(),
                "centralizer": c.render_all(inst),
                "size": c.len(),
            });
            Ok((result, 0, Vec::new()))
        }
        OperationSpec::Normalizer { set } => {
            let s = parse_set(inst, set)?;
            let universe = resolve_universe(inst, config)?;
            let n = normalizer(inst, &s, &universe)?;
            let c = centralizer(inst, &s, &universe)?;
            let agreement = check_normalizer_equals_centralizer(inst, &s, &universe)?;
            let violations = if agreement.applicable { agreement.failures } else { 0 };
            let witnesses = agreement.witness.iter().map(|w| json!(w)).collect();
            let result = json!({
                "set": s.render_all(inst),
                "universe": universe.recipe,
                "universe_size": universe.len(),
                "normalizer": n.render_all(inst),
                "centralizer": c.render_all(inst),
                "agreement": serde_json::to_value(&agreement)?,
            });
            Ok((result, violations, witnesses))
        }
        OperationSpec::Chain { a, b, depth } => {
            let pa = inst.parse(a)?;
            let pb = inst.parse(b)?;
            let chain = neumann_chain(inst, &pa, &pb, *depth)?;
            let rendered: Vec<String> = chain.chain.iter().map(|e| inst.render(e)).collect();
            let comparisons: Vec<&str> = chain
                .chain
                .windows(2)
                .map(|w| ordering_label(inst.compare(&w[0], &w[1])))
                .collect();
            let violations = u64::from(!chain.strictly_increasing);
            let witnesses =
                if chain.strictly_increasing { Vec::new() } else { vec![json!(rendered)] };
            let result = json!({
                "a": inst.render(&pa),
                "b": inst.render(&pb),
                "chain": rendered,
                "adjacent_comparisons": comparisons,
                "strictly_increasing": chain.strictly_increasing,
            });
            Ok((result, violations, witnesses))
        }
        OperationSpec::Powerscan { a, b, depth } => {
            let pa = inst.parse(a)?;
            let pb = inst.parse(b)?;
            let report = power_commutation_scan(inst, &pa, &pb, *depth)?;
            let witnesses = report.witness.iter().map(|w| json!(w)).collect();
            let violations = report.failures;
            Ok((serde_json::to_value(&report)?, violations, witnesses))
        }
        OperationSpec::Period { element, depth } => {
            let e = inst.parse(element)?;
            let record = periodicity(inst, &e, *depth)?;
            Ok((serde_json::to_value(&record)?, 0, Vec::new()))
        }
        OperationSpec::ScanTheorem { kmin, kmax } => {
            let universe = resolve_universe(inst, config)?;
            let report = exhaustive_theorem_scan(
                inst,
                &universe,
                *kmin,
                *kmax,
                &scan_caps(config),
                config.jobs,
            )?;
            let witnesses = report
                .violation_examples
                .iter()
                .map(serde_json::to_value)
                .collect::<std::result::Result<_, _>>()?;
            let violations = report.violations;
            Ok((serde_json::to_value(&report)?, violations, witnesses))
        }
        OperationSpec::ScanFreiman { kmin, kmax } => {
            let universe = resolve_universe(inst, config)?;
            let report = freiman_progression_explorer(
                inst,
                &universe,
                *kmin,
                *kmax,
                &scan_caps(config),
                config.jobs,
            )?;
            let witnesses = report
                .uncovered_examples
                .iter()
                .map(serde_json::to_value)
                .collect::<std::result::Result<_, _>>()?;
            let violations = report.uncovered;
            Ok((serde_json::to_value(&report)?, violations, witnesses))
        }
        OperationSpec::Laws { trials } => {
            let report =
                randomized_law_suite(inst, *trials, config.seed, &SuiteOptions::default())?;
            law_suite_outcome(report)
        }
        OperationSpec::Pagano { dim } => pagano_outcome(*dim),
    }
}

fn pagano_outcome(dim: usize) -> Result<Outcome> {
    let witness = pagano_witness(dim)?;
    let alpha = witness.alpha.rows_rendered();
    let beta = witness.beta.rows_rendered();
    let result = json!({
        "dim": witness.n,
        "alpha": alpha,
        "beta": beta,
        "alpha_squared": witness.alpha_squared().rows_rendered(),
        "alpha_times_beta": witness.alpha_times_beta().rows_rendered(),
        "products_equal": true,
        "factors_distinct": true,
    });
    let witnesses = vec![json!({ "alpha": alpha, "beta": beta })];
    Ok((result, 0, witnesses))
}

// ---------------------------------------------------------------------------
// Argument parsing.

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
enum InstanceArg {
    FreeMonoid,
    UpperTriangular,
    LowerTriangular,
    NatAdd,
    LeftZero,
    Semiring,
    NonnegRationals,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct GlobalOpts {
    /// Instance to run against.
    #[arg(long, global = true, value_enum, default_value_t = InstanceArg::FreeMonoid)]
    instance: InstanceArg,
    /// Alphabet size for word-based instances.
    #[arg(long, global = true, default_value_t = 2)]
    alphabet_size: usize,
    /// Matrix dimension for triangular instances and the pagano witness.
    #[arg(long, visible_alias = "n", global = true, default_value_t = 3)]
    dim: usize,
    /// Universe bound for word instances: all words up to this length.
    #[arg(long, global = true, default_value_t = 3)]
    max_word_len: usize,
    /// Universe bound for the additive naturals: the range 1..=N.
    #[arg(long, global = true, default_value_t = 12)]
    nat_max: u64,
    /// Universe size for instances with sampled universes.
    #[arg(long, global = true, default_value_t = 24)]
    pool_size: usize,
    /// Carrier labels for the left-zero instance, ';'-separated.
    #[arg(long, global = true, value_delimiter = ';', default_value = "p;q;r")]
    carrier: Vec<String>,
    /// Cap on pairwise products formed per product stage.
    #[arg(long, global = true, default_value_t = DEFAULT_PRODUCT_CAP)]
    cap_product: usize,
    /// Cap on subsets enumerated per scan.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    cap_enum: u64,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Worker threads for scans; 0 means one per core.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SetsArg {
    /// One set per flag, elements ';'-separated (e.g. --set "a;b" --set "ab").
    #[arg(long = "set", required = true)]
    sets: Vec<String>,
}

#[derive(Debug, Args)]
struct SetArg {
    /// Set elements, ';'-separated.
    #[arg(long)]
    set: String,
}

#[derive(Debug, Args)]
struct PairArgs {
    #[arg(long)]
    a: String,
    #[arg(long)]
    b: String,
    #[arg(long, default_value_t = 8)]
    depth: u32,
}

#[derive(Debug, Args)]
struct ScanArgs {
    /// Smallest subset size.
    #[arg(long, default_value_t = 2)]
    kmin: usize,
    /// Largest subset size.
    #[arg(long, default_value_t = 4)]
    kmax: usize,
}

#[derive(Debug, Subcommand)]
enum ScanCommand {
    /// Check every subset for the square-size dichotomy.
    Theorem(ScanArgs),
    /// Probe commuting small-square subsets for progression covers.
    Freiman(ScanArgs),
}

#[derive(Debug, Subcommand)]
enum WitnessCommand {
    /// Distinct all-positive matrices alpha, beta with alpha^2 = alpha*beta.
    Pagano,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Multiply finite sets elementwise.
    Product(SetsArg),
    /// Superadditive lower bound on a product of sets.
    Bound(SetsArg),
    /// Square one set and test the small-doubling dichotomy.
    Verdict(SetArg),
    /// Universe elements commuting with every element of the set.
    Centralizer(SetArg),
    /// Universe elements u with uS = Su, compared against the centralizer.
    Normalizer(SetArg),
    /// Interleaving chain between the powers of a non-commuting pair.
    Chain(PairArgs),
    /// Compare a^n b with b a^n for n up to the depth.
    Powerscan(PairArgs),
    /// Find the first repeated power of an element.
    Period {
        #[arg(long)]
        element: String,
        #[arg(long, default_value_t = 10)]
        depth: u32,
    },
    /// Exhaustive subset scans over the universe.
    Scan {
        #[command(subcommand)]
        which: ScanCommand,
    },
    /// Randomized law suite with fresh seeded samples each trial.
    Laws {
        #[arg(long, default_value_t = 2000)]
        trials: u64,
    },
    /// Constructed witnesses.
    Witness {
        #[command(subcommand)]
        which: WitnessCommand,
    },
    /// Run a JSON array of run configurations from a file.
    Batch { file: PathBuf },
}

#[derive(Debug, Parser)]
#[command(
    name = "ordsemi",
    version,
    about = "Ordered semigroups: order constructions, product growth, commutation scans"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: GlobalOpts,
}

fn split_set(text: &str) -> Vec<String> {
    text.split(';').map(str::to_string).collect()
}

fn assemble_config(opts: &GlobalOpts, command: &Command) -> Result<RunConfig> {
    let instance = match opts.instance {
        InstanceArg::FreeMonoid => InstanceSpec::FreeMonoid { alphabet_size: opts.alphabet_size },
        InstanceArg::UpperTriangular => InstanceSpec::UpperTriangular { dim: opts.dim },
        InstanceArg::LowerTriangular => InstanceSpec::LowerTriangular { dim: opts.dim },
        InstanceArg::NatAdd => InstanceSpec::NatAdd,
        InstanceArg::LeftZero => InstanceSpec::LeftZero { carrier: opts.carrier.clone() },
        InstanceArg::Semiring => InstanceSpec::Semiring { alphabet_size: opts.alphabet_size },
        InstanceArg::NonnegRationals => InstanceSpec::NonnegRationals,
    };
    let universe = Some(match &instance {
        InstanceSpec::FreeMonoid { .. } => UniverseSpec::Words { max_len: opts.max_word_len },
        InstanceSpec::NatAdd => UniverseSpec::Range { max: opts.nat_max },
        InstanceSpec::LeftZero { .. } => UniverseSpec::Carrier,
        _ => UniverseSpec::Sampled { count: opts.pool_size },
    });
    let operation = match command {
        Command::Product(s) => {
            OperationSpec::Product { sets: s.sets.iter().map(|t| split_set(t)).collect() }
        }
        Command::Bound(s) => {
            OperationSpec::Bound { sets: s.sets.iter().map(|t| split_set(t)).collect() }
        }
        Command::Verdict(s) => OperationSpec::Verdict { set: split_set(&s.set) },
        Command::Centralizer(s) => OperationSpec::Centralizer { set: split_set(&s.set) },
        Command::Normalizer(s) => OperationSpec::Normalizer { set: split_set(&s.set) },
        Command::Chain(p) => {
            OperationSpec::Chain { a: p.a.clone(), b: p.b.clone(), depth: p.depth }
        }
        Command::Powerscan(p) => {
            OperationSpec::Powerscan { a: p.a.clone(), b: p.b.clone(), depth: p.depth }
        }
        Command::Period { element, depth } => {
            OperationSpec::Period { element: element.clone(), depth: *depth }
        }
        Command::Scan { which: ScanCommand::Theorem(s) } => {
            OperationSpec::ScanTheorem { kmin: s.kmin, kmax: s.kmax }
        }
        Command::Scan { which: ScanCommand::Freiman(s) } => {
            OperationSpec::ScanFreiman { kmin: s.kmin, kmax: s.kmax }
        }
        Command::Laws { trials } => OperationSpec::Laws { trials: *trials },
        Command::Witness { which: WitnessCommand::Pagano } => {
            OperationSpec::Pagano { dim: opts.dim }
        }
        Command::Batch { .. } => {
            return Err(Error::Config("batch runs are assembled from their file".into()))
        }
    };
    Ok(RunConfig {
        instance,
        operation,
        universe,
        caps: Caps { product: opts.cap_product, enumeration: opts.cap_enum },
        seed: opts.seed,
        jobs: opts.jobs,
    })
}

fn render_text(report: &Report) -> String {
    let mut s = String::new();
    let config = serde_json::to_string(&report.config).expect("config serializes");
    let result = serde_json::to_string_pretty(&report.result).expect("result serializes");
    let _ = writeln!(s, "config: {config}");
    let _ = writeln!(s, "result:\n{result}");
    if !report.witnesses.is_empty() {
        let witnesses =
            serde_json::to_string(&report.witnesses).expect("witnesses serialize");
        let _ = writeln!(s, "witnesses: {witnesses}");
    }
    let _ = writeln!(s, "violations: {}", report.violations);
    let _ = writeln!(s, "timing-ms: {}", report.timing_ms);
    s
}

/// Single commands emit one report object; batch runs always emit an array,
/// even for a one-entry file.
fn render_reports(format: Format, reports: &[Report], batch: bool) -> String {
    match format {
        Format::Json => {
            let mut body = if batch {
                serde_json::to_string_pretty(&reports).expect("reports serialize")
            } else {
                serde_json::to_string_pretty(&reports[0]).expect("report serializes")
            };
            body.push('\n');
            body
        }
        Format::Text => {
            reports.iter().map(render_text).collect::<Vec<_>>().join("\n")
        }
    }
}

fn emit(out: &Option<PathBuf>, body: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, body)?,
        None => print!("{body}"),
    }
    Ok(())
}

fn execute(cli: Cli) -> Result<i32> {
    let batch = matches!(cli.command, Command::Batch { .. });
    let reports = match &cli.command {
        Command::Batch { file } => {
            let text = fs::read_to_string(file)?;
            let configs: Vec<RunConfig> = serde_json::from_str(&text)
                .map_err(|e| Error::Config(format!("batch file: {e}")))?;
            let mut reports = Vec::with_capacity(configs.len());
            for (i, config) in configs.iter().enumerate() {
                let report =
                    run(config).map_err(|e| Error::Config(format!("batch entry {i}: {e}")))?;
                reports.push(report);
            }
            reports
        }
        command => vec![run(&assemble_config(&cli.opts, command)?)?],
    };
    let body = render_reports(cli.opts.format, &reports, batch);
    emit(&cli.opts.out, &body)?;
    Ok(if reports.iter().any(|r| r.violations > 0) { 1 } else { 0 })
}

/// Parses the process arguments, runs, and returns the exit status.
pub fn main_entry() -> i32 {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
