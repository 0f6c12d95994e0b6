//! Command-line front end and benchmark harness.
//!
//! [`run`] takes the full argument vector and writes to the supplied
//! streams, so the binary is a thin wrapper and tests can drive every
//! subcommand in-process. Exit codes: 0 success, 1 domain error (budget,
//! precondition, failed verification), 2 usage error.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use crate::covers::{exact_min_cover, CoverBudget, CoverStrategy};
use crate::error::Error;
use crate::exact::{
    enumerate_systems, theorem1_bound, EnumParams, ExactSolver, SearchBudget,
};
use crate::gen::{random_system, sample_tuples, GenParams};
use crate::io::{
    parse_raw_tuple, parse_rules, serialize_rules, simulation_json, write_csv, BenchRow,
    RULE_GRAMMAR, TUPLE_GRAMMAR,
};
use crate::rules::RuleSystem;
use crate::simulate::simulate_ear;
use crate::suite::{run_suite, SuiteOptions};
use crate::transform::{hypergraph, s_max};

#[derive(Debug, Parser)]
#[command(name = "dtsim", version, about = "Simulate decision trees over decision rule systems")]
pub struct Cli {
    /// Base seed for generation and sampling.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Emit JSON instead of text where supported.
    #[arg(long, global = true)]
    pub json: bool,

    /// key=value file presetting any flag; command-line flags win.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a random rule system.
    Gen(GenArgs),
    /// Build a node cover of G(S).
    Cover(CoverArgs),
    /// Simulate the decision tree on one tuple.
    Simulate(SimulateArgs),
    /// Compute the minimum depth h_EAR(S) exactly.
    ExactDepth(ExactArgs),
    /// Check the lower and upper bounds on one system or exhaustively.
    Verify(VerifyArgs),
    /// Compare greedy and rule strategies on a grid of random systems.
    Bench(BenchArgs),
    /// Dump G(S) as adjacency text.
    Hypergraph(InputArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Rule file.
    #[arg(long)]
    pub input: PathBuf,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, default_value_t = 6)]
    pub n_attrs: u32,
    #[arg(long, default_value_t = 6)]
    pub n_rules: usize,
    #[arg(long, default_value_t = 1)]
    pub min_len: usize,
    #[arg(long, default_value_t = 3)]
    pub max_len: usize,
    #[arg(long, default_value_t = 2)]
    pub values: u32,
    /// Write the rule file here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CoverMethod {
    Greedy,
    Rule,
    Exact,
}

#[derive(Debug, Args)]
pub struct CoverArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = CoverMethod::Greedy)]
    pub method: CoverMethod,
    /// Cover G(S^max) instead of G(S).
    #[arg(long)]
    pub smax: bool,
    /// Attribute limit for the exact method.
    #[arg(long, default_value_t = CoverBudget::default().max_attrs)]
    pub budget: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Greedy,
    Rule,
}

impl From<StrategyArg> for CoverStrategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Greedy => CoverStrategy::Greedy,
            StrategyArg::Rule => CoverStrategy::Rule,
        }
    }
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Tuple such as "a1=0,a2=*"; values outside V_S(a) are read as *.
    #[arg(long)]
    pub tuple: String,
    #[arg(long, value_enum, default_value_t = StrategyArg::Greedy)]
    pub strategy: StrategyArg,
}

#[derive(Debug, Clone, Args)]
pub struct BudgetArgs {
    #[arg(long, default_value_t = SearchBudget::default().max_attrs)]
    pub max_attrs: usize,
    #[arg(long, default_value_t = SearchBudget::default().max_rules)]
    pub max_system_rules: usize,
    #[arg(long, default_value_t = SearchBudget::default().max_values)]
    pub max_values: usize,
}

impl BudgetArgs {
    fn budget(&self) -> SearchBudget {
        SearchBudget {
            max_attrs: self.max_attrs,
            max_rules: self.max_system_rules,
            max_values: self.max_values,
        }
    }
}

#[derive(Debug, Args)]
pub struct ExactArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Verify a single rule file.
    #[arg(long, conflicts_with = "exhaustive", required_unless_present = "exhaustive")]
    pub input: Option<PathBuf>,
    /// Verify every system within the enumeration bounds.
    #[arg(long)]
    pub exhaustive: bool,
    #[arg(long, default_value_t = 3)]
    pub max_n: u32,
    #[arg(long, default_value_t = 3)]
    pub max_rules: usize,
    #[arg(long, default_value_t = 2)]
    pub max_len: usize,
    #[arg(long, default_value_t = 2)]
    pub values: u32,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Grid cell, e.g. "n=6,rules=8,min-len=1,max-len=2,values=2". Repeatable.
    #[arg(long = "cell", required = true)]
    pub cells: Vec<String>,
    /// Systems per cell; system i uses seed base+i.
    #[arg(long, default_value_t = 10)]
    pub seeds: u64,
    /// Tuples sampled per system.
    #[arg(long, default_value_t = 20)]
    pub tuples: usize,
    /// Also compute h_EAR and the depth bound (small cells only).
    #[arg(long)]
    pub exact: bool,
    /// Write CSV here; the summary then goes to stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Failure of a command, mapped onto an exit status.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

type CliResult<T = ()> = Result<T, CliError>;

/// Reads `key=value` lines; `#` comments and blank lines are skipped.
pub fn read_config(path: &Path) -> CliResult<Vec<(String, String)>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
    let mut pairs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| {
            CliError::Usage(format!("{}:{}: expected key=value", path.display(), i + 1))
        })?;
        pairs.push((k.trim().to_string(), v.trim().to_string()));
    }
    Ok(pairs)
}

fn config_path(args: &[String]) -> Option<PathBuf> {
    args.iter().enumerate().find_map(|(i, a)| {
        if let Some(p) = a.strip_prefix("--config=") {
            Some(PathBuf::from(p))
        } else if a == "--config" {
            args.get(i + 1).map(PathBuf::from)
        } else {
            None
        }
    })
}

/// Appends config entries as flags unless the flag was given explicitly.
/// `true`/`false` values toggle boolean flags.
fn apply_config(args: Vec<String>) -> CliResult<Vec<String>> {
    let Some(path) = config_path(&args) else {
        return Ok(args);
    };
    let mut out = args.clone();
    for (key, value) in read_config(&path)? {
        let flag = format!("--{key}");
        let given = args
            .iter()
            .any(|a| a == &flag || a.starts_with(&format!("{flag}=")));
        // repeatable flags (bench cells) still accumulate from config
        if given && key != "cell" {
            continue;
        }
        match value.as_str() {
            "true" => out.push(flag),
            "false" => {}
            _ => {
                out.push(flag);
                out.push(value);
            }
        }
    }
    Ok(out)
}

/// Entry point shared by the binary and the tests.
pub fn run(args: Vec<String>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let args = match apply_config(args) {
        Ok(a) => a,
        Err(e) => return report(e, stderr),
    };
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(&cli, stdout, stderr) {
        Ok(()) => 0,
        Err(e) => report(e, stderr),
    }
}

fn report(e: CliError, stderr: &mut dyn Write) -> i32 {
    let code = e.exit_code();
    let msg = match e {
        CliError::Usage(m) | CliError::Domain(m) => m,
    };
    let _ = writeln!(stderr, "error: {msg}");
    code
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    match &cli.command {
        Command::Gen(a) => cmd_gen(cli, a, out),
        Command::Cover(a) => cmd_cover(cli, a, out),
        Command::Simulate(a) => cmd_simulate(cli, a, out),
        Command::ExactDepth(a) => cmd_exact_depth(cli, a, out),
        Command::Verify(a) => cmd_verify(cli, a, out),
        Command::Bench(a) => cmd_bench(cli, a, out, err),
        Command::Hypergraph(a) => {
            let s = load_rules(&a.input)?;
            write!(out, "{}", hypergraph(&s))?;
            Ok(())
        }
    }
}

fn load_rules(path: &Path) -> CliResult<RuleSystem> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Domain(format!("cannot read {}: {e}", path.display())))?;
    parse_rules(&text).map_err(|e| match e {
        Error::Parse { .. } => CliError::Usage(format!(
            "{}: {e}\nrule file grammar:\n{RULE_GRAMMAR}",
            path.display()
        )),
        other => CliError::Domain(format!("{}: {other}", path.display())),
    })
}

fn cmd_gen(cli: &Cli, a: &GenArgs, out: &mut dyn Write) -> CliResult {
    let p = GenParams {
        n_attrs: a.n_attrs,
        n_rules: a.n_rules,
        min_len: a.min_len,
        max_len: a.max_len,
        n_values: a.values,
        seed: cli.seed,
    };
    let s = random_system(&p).map_err(|e| CliError::Usage(e.to_string()))?;
    let text = serialize_rules(&s);
    match &a.output {
        Some(path) => std::fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn cmd_cover(cli: &Cli, a: &CoverArgs, out: &mut dyn Write) -> CliResult {
    let s = load_rules(&a.input)?;
    let target = if a.smax { s_max(&s) } else { s };
    let cover = match a.method {
        CoverMethod::Greedy => crate::covers::greedy_cover(&target)?,
        CoverMethod::Rule => crate::covers::rule_cover(&target)?,
        CoverMethod::Exact => {
            exact_min_cover(&target, CoverBudget { max_attrs: a.budget })?.0
        }
    };
    if cli.json {
        let attrs: Vec<String> = cover.attributes().iter().map(ToString::to_string).collect();
        let v = json!({"method": format!("{:?}", a.method).to_lowercase(), "cover": attrs, "size": cover.len()});
        writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json"))?;
    } else {
        writeln!(out, "cover: {cover}")?;
        writeln!(out, "size: {}", cover.len())?;
    }
    Ok(())
}

fn cmd_simulate(cli: &Cli, a: &SimulateArgs, out: &mut dyn Write) -> CliResult {
    let s = load_rules(&a.input)?;
    let raw = parse_raw_tuple(&s, &a.tuple).map_err(|e| {
        CliError::Usage(format!("--tuple {:?}: {e}\ntuple grammar:\n{TUPLE_GRAMMAR}", a.tuple))
    })?;
    let result = simulate_ear(&s, raw, a.strategy.into())?;
    if cli.json {
        writeln!(out, "{}", simulation_json(&result))?;
        return Ok(());
    }
    let ids: Vec<String> = result.answer.iter().map(ToString::to_string).collect();
    let trace: Vec<String> = result
        .trace
        .iter()
        .map(|q| format!("{}={}", q.attribute, q.value))
        .collect();
    let rounds: Vec<String> = result.rounds.iter().map(ToString::to_string).collect();
    writeln!(out, "answer: [{}]", ids.join(", "))?;
    for id in &result.answer {
        if let Some(r) = s.rule(*id) {
            writeln!(out, "  r{id}: {r}")?;
        }
    }
    writeln!(out, "trace: {}", trace.join(" "))?;
    writeln!(out, "rounds: [{}]", rounds.join(", "))?;
    writeln!(out, "depth: {}", result.depth)?;
    Ok(())
}

fn cmd_exact_depth(cli: &Cli, a: &ExactArgs, out: &mut dyn Write) -> CliResult {
    let s = load_rules(&a.input)?;
    let h = ExactSolver::new(a.budget.budget()).min_depth(&s)?;
    if cli.json {
        writeln!(out, "{}", json!({ "h_exact": h }))?;
    } else {
        writeln!(out, "h_EAR: {h}")?;
    }
    Ok(())
}

fn cmd_verify(cli: &Cli, a: &VerifyArgs, out: &mut dyn Write) -> CliResult {
    let budget = a.budget.budget();
    if let Some(path) = &a.input {
        let s = load_rules(path)?;
        let report = ExactSolver::new(budget).verify_bounds(&s)?;
        if cli.json {
            writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("json"))?;
        } else {
            let v = &report.verdicts;
            let line = |ok: bool| if ok { "PASS" } else { "FAIL" };
            writeln!(out, "h_EAR = {}  beta = {}  d = {}  k = {}  |S^max| = {}", report.h_exact, report.beta, report.d, report.k, report.smax_size)?;
            let rows = [
                (format!("lemma 2  h >= beta = {}", report.beta), v.lemma2),
                (format!("lemma 3  h >= d = {}", report.d), v.lemma3),
                (format!("lemma 4  h >= {:.4}", report.lb_count), v.lemma4),
                (format!("theorem 1  greedy depth {} <= {:.4}", report.max_depth_greedy, report.ub_theorem1), v.theorem1),
                (format!("per-round bound {:.4}", report.ub_round), v.round_size),
                ("round discipline".to_string(), v.round_discipline),
                (format!("answers = realizable ({} tuples)", report.tuples), v.answers),
            ];
            for (label, ok) in rows {
                writeln!(out, "{label:<40} {}", line(ok))?;
            }
            writeln!(out, "max rule-strategy depth: {}", report.max_depth_rule)?;
        }
        return if report.verdicts.all() {
            Ok(())
        } else {
            Err(CliError::Domain("verification failed".into()))
        };
    }

    let systems = enumerate_systems(EnumParams::new(a.max_n, a.max_rules, a.max_len, a.values))
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let report = run_suite(systems, SuiteOptions { budget, all_alphas: true })?;
    if cli.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("json"))?;
    } else {
        write!(out, "{report}")?;
    }
    if report.passed() {
        Ok(())
    } else {
        Err(CliError::Domain("verification failed".into()))
    }
}

/// One `--cell` of the bench grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cell {
    pub n_attrs: u32,
    pub n_rules: usize,
    pub min_len: usize,
    pub max_len: usize,
    pub n_values: u32,
}

impl std::str::FromStr for Cell {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let mut cell = Cell {
            n_attrs: 6,
            n_rules: 6,
            min_len: 1,
            max_len: 3,
            n_values: 2,
        };
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| format!("cell entry {part:?} is not key=value"))?;
            let num: usize = v
                .trim()
                .parse()
                .map_err(|_| format!("cell entry {part:?}: expected a number"))?;
            match k.trim() {
                "n" => cell.n_attrs = num as u32,
                "rules" => cell.n_rules = num,
                "min-len" | "min_len" => cell.min_len = num,
                "max-len" | "max_len" => cell.max_len = num,
                "values" => cell.n_values = num as u32,
                other => return Err(format!("unknown cell key {other:?} (n, rules, min-len, max-len, values)")),
            }
        }
        Ok(cell)
    }
}

impl Cell {
    fn params(&self, seed: u64) -> GenParams {
        GenParams {
            n_attrs: self.n_attrs,
            n_rules: self.n_rules,
            min_len: self.min_len,
            max_len: self.max_len,
            n_values: self.n_values,
            seed,
        }
    }
}

fn bench_cell(cell: &Cell, base_seed: u64, seeds: u64, tuples: usize, exact: bool) -> crate::Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    let mut solver = ExactSolver::new(SearchBudget::default());
    for i in 0..seeds {
        let seed = base_seed.wrapping_add(i);
        let s = random_system(&cell.params(seed))?;
        let m = s.measures();
        let (h, ub) = if exact {
            let h = solver.min_depth(&s)?;
            (Some(h), Some(theorem1_bound(h, m.k)))
        } else {
            (None, None)
        };
        for (tuple_id, t) in sample_tuples(&s, seed, tuples).iter().enumerate() {
            for strategy in CoverStrategy::ALL {
                let r = simulate_ear(&s, t, strategy)?;
                rows.push(BenchRow {
                    seed,
                    n: m.n,
                    d: m.d,
                    k: m.k,
                    rules: s.len(),
                    tuple_id,
                    strategy: strategy.name().to_string(),
                    depth: r.depth,
                    rounds: r.rounds.len(),
                    h_exact: h,
                    ub_theorem1: ub,
                    answer_size: r.answer.len(),
                });
            }
        }
    }
    Ok(rows)
}

#[derive(Default)]
struct Group {
    pairs: usize,
    greedy_sum: usize,
    greedy_max: usize,
    rule_sum: usize,
    rule_max: usize,
    greedy_wins: usize,
    rule_wins: usize,
    ties: usize,
}

impl Group {
    fn add(&mut self, greedy: usize, rule: usize) {
        self.pairs += 1;
        self.greedy_sum += greedy;
        self.rule_sum += rule;
        self.greedy_max = self.greedy_max.max(greedy);
        self.rule_max = self.rule_max.max(rule);
        match greedy.cmp(&rule) {
            std::cmp::Ordering::Less => self.greedy_wins += 1,
            std::cmp::Ordering::Greater => self.rule_wins += 1,
            std::cmp::Ordering::Equal => self.ties += 1,
        }
    }

    fn line(&self, label: &str, d: &str) -> String {
        let mean = |sum: usize| sum as f64 / self.pairs.max(1) as f64;
        format!(
            "{label:<8} {d:>4} {:>7} {:>11.3} {:>10} {:>9.3} {:>8} {:>11} {:>9} {:>6}",
            self.pairs,
            mean(self.greedy_sum),
            self.greedy_max,
            mean(self.rule_sum),
            self.rule_max,
            self.greedy_wins,
            self.rule_wins,
            self.ties
        )
    }
}

/// Mean and max depth per strategy, per cell and d(S), with win counts
/// (fewer queries on the same tuple).
pub fn bench_summary(cells: &[Cell], rows_per_cell: &[Vec<BenchRow>]) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:<8} {:>4} {:>7} {:>11} {:>10} {:>9} {:>8} {:>11} {:>9} {:>6}",
        "cell", "d", "tuples", "greedy_mean", "greedy_max", "rule_mean", "rule_max", "greedy_wins", "rule_wins", "ties"
    );
    for (i, (cell, rows)) in cells.iter().zip(rows_per_cell).enumerate() {
        let mut by_d: BTreeMap<usize, Group> = BTreeMap::new();
        let mut all = Group::default();
        for pair in rows.chunks(2) {
            let [g, r] = pair else { continue };
            debug_assert!(g.strategy == "greedy" && r.strategy == "rule");
            by_d.entry(g.d).or_default().add(g.depth, r.depth);
            all.add(g.depth, r.depth);
        }
        let label = format!("#{i}");
        let _ = writeln!(
            s,
            "# cell {i}: n={} rules={} min-len={} max-len={} values={}",
            cell.n_attrs, cell.n_rules, cell.min_len, cell.max_len, cell.n_values
        );
        for (d, g) in &by_d {
            let _ = writeln!(s, "{}", g.line(&label, &d.to_string()));
        }
        let _ = writeln!(s, "{}", all.line(&label, "all"));
    }
    s
}

fn cmd_bench(cli: &Cli, a: &BenchArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let cells: Vec<Cell> = a
        .cells
        .iter()
        .map(|c| c.parse().map_err(CliError::Usage))
        .collect::<CliResult<_>>()?;
    for (i, c) in cells.iter().enumerate() {
        c.params(0)
            .validate()
            .map_err(|e| CliError::Usage(format!("cell {i}: {e}")))?;
        if a.exact {
            let b = SearchBudget::default();
            for (dimension, actual, limit) in [
                ("n(S)", c.n_attrs as usize, b.max_attrs),
                ("|S|", c.n_rules, b.max_rules),
                ("k(S)", c.n_values as usize, b.max_values),
            ] {
                if actual > limit {
                    return Err(CliError::Domain(format!(
                        "cell {i}: {}",
                        Error::BudgetExceeded { dimension, actual, limit }
                    )));
                }
            }
        }
    }
    let rows: Vec<Vec<BenchRow>> = cells
        .par_iter()
        .map(|c| bench_cell(c, cli.seed, a.seeds, a.tuples, a.exact))
        .collect::<crate::Result<_>>()?;
    let flat: Vec<BenchRow> = rows.iter().flatten().cloned().collect();
    let summary = bench_summary(&cells, &rows);
    match &a.out {
        Some(path) => {
            let file = std::fs::File::create(path)?;
            write_csv(std::io::BufWriter::new(file), &flat)?;
            out.write_all(summary.as_bytes())?;
        }
        None => {
            write_csv(&mut *out, &flat)?;
            err.write_all(summary.as_bytes())?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cell_parsing() {
        let c: Cell = "n=12,rules=10,min-len=1,max-len=8,values=2".parse().unwrap();
        assert_eq!(
            c,
            Cell { n_attrs: 12, n_rules: 10, min_len: 1, max_len: 8, n_values: 2 }
        );
        assert!("n=x".parse::<Cell>().is_err());
        assert!("depth=3".parse::<Cell>().is_err());
    }

    #[test]
    fn config_does_not_override_explicit_flags() {
        let dir = tempfile::tempdir().unwrap();
        let cfg = dir.path().join("cfg");
        std::fs::write(&cfg, "# preset\nseed = 5\ntuples=3\njson=true\n").unwrap();
        let args: Vec<String> = ["dtsim", "--config", cfg.to_str().unwrap(), "--seed", "9", "bench", "--cell", "n=3"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let out = apply_config(args).unwrap();
        assert_eq!(out.iter().filter(|a| *a == "--seed").count(), 1);
        assert!(out.windows(2).any(|w| w[0] == "--tuples" && w[1] == "3"));
        assert!(out.contains(&"--json".to_string()));
    }
}
