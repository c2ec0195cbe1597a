//! The `qbrauer` command line.
//!
//! Exit status is 0 when every check passes, 1 when a check fails and 2 on
//! usage errors, including size bounds exceeded without `--unsafe-large`.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::{
    brauer_oracle_check, check_defining_relations, check_lemma_identities, diagram_label, parse_label, parse_word,
    AlgebraElement, QBrauer, RelationCheck,
};
use crate::canonical::{positivity_scan, CanonicalTable, Variant, ZSubstitution, DEFAULT_MAX_N};
use crate::coeff::{parse, parse_rational, FieldElem};
use crate::diagram::{parse_diagram, BrauerDiagram};
use crate::duality::{
    aii_coproduct_check, centralizer_dims, classical_limit_check, commutation_check, e_is_local, qgroup_relations_check,
    relations_check, representation_check, CheckResult, DualityError, DualityType, ParamSet, DEFAULT_MAX_TENSOR_DIM,
};
use crate::symgroup::MAX_N;

pub const SCHEMA_VERSION: u32 = 1;
/// Largest `n` for `verify-relations` and sampled oracle runs.
pub const DEFAULT_MAX_WORD_N: usize = 7;
/// Largest `n` for the exhaustive oracle.
pub const DEFAULT_MAX_ORACLE_N: usize = 4;
/// Largest `n` for the positivity scan.
pub const DEFAULT_MAX_POSITIVITY_N: usize = 4;
/// Largest tensor dimension for the commutant computation.
pub const DEFAULT_MAX_CENTRALIZER_DIM: usize = 32;

#[derive(Parser, Debug)]
#[command(name = "qbrauer", version, about = "Exact computations in the q-Brauer algebra")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Cap on worker threads.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Lift the default size caps.
    #[arg(long, global = true)]
    pub unsafe_large: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Ai,
    Aii,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// The canonical (or dual canonical) basis of B_n(q, z).
    CanonicalBasis {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        dual: bool,
    },
    /// Multiply two elements: diagram edge lists, generator words, `H_<label>`,
    /// `C_<label>`, `C*_<label>` or a JSON expansion.
    Multiply {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        lhs: String,
        #[arg(long, allow_hyphen_values = true)]
        rhs: String,
    },
    /// Check (Q1)-(Q8) and the standard identities.
    VerifyRelations {
        #[arg(long)]
        n: usize,
    },
    /// Compare with the classical Brauer algebra at z = q^N, q -> 1.
    BrauerOracle {
        #[arg(long)]
        n: usize,
        #[arg(long = "N")]
        big_n: i32,
        #[arg(long)]
        exhaustive: bool,
        /// Number of random pairs when not exhaustive.
        #[arg(long, default_value_t = 500)]
        samples: usize,
    },
    /// Check the tensor-space duality of type AI or AII.
    DualityCheck {
        #[arg(long, value_enum)]
        variant: VariantArg,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Add the generator rho (type AI).
        #[arg(long)]
        rho: bool,
        /// Parameter override `i=expr`, e.g. `--varsigma 1=-q`.
        #[arg(long = "varsigma", allow_hyphen_values = true)]
        varsigma: Vec<String>,
        #[arg(long, default_value = "5/7")]
        q_sample: String,
        /// Random basis pairs for the homomorphism check.
        #[arg(long, default_value_t = 40)]
        samples: usize,
    },
    /// Positivity of the canonical-basis structure constants.
    PositivityScan {
        #[arg(long)]
        n: usize,
        /// Substitute z = q^M; without it the generic test is used.
        #[arg(long)]
        zm: Option<i32>,
    },
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failed(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(s) | CliError::Failed(s) => f.write_str(s),
        }
    }
}

fn usage(s: impl ToString) -> CliError {
    CliError::Usage(s.to_string())
}

impl From<DualityError> for CliError {
    fn from(e: DualityError) -> Self {
        match e {
            DualityError::Coeff(_) | DualityError::Singular => CliError::Failed(e.to_string()),
            _ => usage(e),
        }
    }
}

/// A finished report: whether every check passed, plus both renderings.
pub struct Outcome {
    pub passed: bool,
    pub json: Value,
    pub text: String,
}

impl Outcome {
    fn new(passed: bool, command: &str, params: Value, result: Value, text: String) -> Self {
        let json = json!({
            "schema_version": SCHEMA_VERSION,
            "command": command,
            "params": params,
            "passed": passed,
            "result": result,
        });
        Outcome { passed, json, text }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => format!("{}\n", serde_json::to_string_pretty(&self.json).unwrap()),
        }
    }
}

fn check_bound(what: &str, value: usize, bound: usize, unsafe_large: bool) -> Result<(), CliError> {
    if value > bound && !unsafe_large {
        return Err(usage(format!("{what} = {value} exceeds the default cap {bound}; pass --unsafe-large to override")));
    }
    Ok(())
}

fn algebra(n: usize) -> Result<QBrauer, CliError> {
    QBrauer::new(n).map_err(usage)
}

fn canonical_bound(unsafe_large: bool) -> usize {
    if unsafe_large {
        MAX_N
    } else {
        DEFAULT_MAX_N
    }
}

/// Parse an element of `B_n`. Canonical labels build the needed table on
/// first use and cache it in `tables`.
pub fn parse_element(
    alg: &QBrauer,
    s: &str,
    tables: &mut BTreeMap<Variant, CanonicalTable>,
    bound: usize,
) -> Result<(AlgebraElement, Option<Variant>), String> {
    let n = alg.n();
    let s = s.trim();
    let strip_braces = |l: &str| l.strip_prefix('{').and_then(|r| r.strip_suffix('}')).unwrap_or(l).to_string();
    if s.starts_with('[') {
        let v: Value = serde_json::from_str(s).map_err(|e| e.to_string())?;
        return Ok((AlgebraElement::from_json(&v, n)?, None));
    }
    if s.starts_with('{') {
        return Ok((AlgebraElement::basis(parse_diagram(s, n)?), None));
    }
    for (prefix, v) in [("C*_", Variant::Dual), ("C_", Variant::Canonical)] {
        if let Some(label) = s.strip_prefix(prefix) {
            let d = parse_label(&strip_braces(label), n)?.0;
            let t = match tables.entry(v) {
                std::collections::btree_map::Entry::Occupied(o) => o.into_mut(),
                std::collections::btree_map::Entry::Vacant(slot) => {
                    slot.insert(CanonicalTable::build(alg, v, bound).map_err(|e| e.to_string())?)
                }
            };
            return Ok((t.element(&d).clone(), Some(v)));
        }
    }
    if let Some(label) = s.strip_prefix("H_").filter(|l| !l.contains('*')) {
        if let Ok((d, _)) = parse_label(&strip_braces(label), n) {
            return Ok((AlgebraElement::basis(d), None));
        }
    }
    Ok((alg.eval_word(&parse_word(s, n)?), None))
}

fn render_in(coords: &BTreeMap<BrauerDiagram, FieldElem>, n: usize, sym: &str) -> (String, Value) {
    let mut x = AlgebraElement::zero(n);
    for (d, c) in coords {
        x.add_term(*d, c.clone());
    }
    (x.render(sym), x.to_json())
}

fn relation_lines(rs: &[RelationCheck]) -> String {
    rs.iter().map(|r| format!("{} {}\n", if r.holds { "ok  " } else { "FAIL" }, r.name)).collect()
}

fn check_lines(title: &str, rs: &[CheckResult]) -> String {
    let bad: Vec<&str> = rs.iter().filter(|r| !r.holds).map(|r| r.name.as_str()).collect();
    let mut out = format!("{title}: {}/{} hold\n", rs.len() - bad.len(), rs.len());
    for b in bad {
        out.push_str(&format!("  FAIL {b}\n"));
    }
    out
}

fn canonical_basis(cli: &Cli, n: usize, dual: bool) -> Result<Outcome, CliError> {
    check_bound("n", n, DEFAULT_MAX_N, cli.unsafe_large)?;
    let alg = algebra(n)?;
    let variant = if dual { Variant::Dual } else { Variant::Canonical };
    let t = CanonicalTable::build(&alg, variant, canonical_bound(cli.unsafe_large))
        .map_err(|e| CliError::Failed(e.to_string()))?;
    let passed = t.classes_ok();
    Ok(Outcome::new(passed, "canonical-basis", json!({"n": n, "dual": dual}), t.to_json(), t.render()))
}

fn multiply(cli: &Cli, n: usize, lhs: &str, rhs: &str) -> Result<Outcome, CliError> {
    let alg = algebra(n)?;
    let mut tables = BTreeMap::new();
    let bound = canonical_bound(cli.unsafe_large);
    let (a, va) = parse_element(&alg, lhs, &mut tables, bound).map_err(usage)?;
    let (b, vb) = parse_element(&alg, rhs, &mut tables, bound).map_err(usage)?;
    let prod = alg.multiply(&a, &b);
    let mut result = json!({"standard": prod.to_json()});
    let text = match va.or(vb) {
        Some(v) => {
            let (sym, key) = match v {
                Variant::Canonical => ("C", "canonical"),
                Variant::Dual => ("C*", "dual_canonical"),
            };
            let (s, j) = render_in(&tables[&v].express(&prod), n, sym);
            result[key] = j;
            format!("{s}\n")
        }
        None => format!("{prod}\n"),
    };
    Ok(Outcome::new(true, "multiply", json!({"n": n, "lhs": lhs, "rhs": rhs}), result, text))
}

fn verify_relations(cli: &Cli, n: usize) -> Result<Outcome, CliError> {
    check_bound("n", n, DEFAULT_MAX_WORD_N, cli.unsafe_large)?;
    let alg = algebra(n)?;
    let defining = check_defining_relations(&alg);
    let lemmas = check_lemma_identities(&alg);
    let passed = defining.iter().chain(&lemmas).all(|r| r.holds);
    let text = format!("{}{}", relation_lines(&defining), relation_lines(&lemmas));
    let result = json!({"defining": defining, "identities": lemmas});
    Ok(Outcome::new(passed, "verify-relations", json!({"n": n}), result, text))
}

fn brauer_oracle(cli: &Cli, n: usize, big_n: i32, exhaustive: bool, samples: usize) -> Result<Outcome, CliError> {
    if exhaustive {
        check_bound("n", n, DEFAULT_MAX_ORACLE_N, cli.unsafe_large)?;
    } else {
        check_bound("n", n, DEFAULT_MAX_WORD_N, cli.unsafe_large)?;
    }
    let alg = algebra(n)?;
    let r = brauer_oracle_check(&alg, big_n, (!exhaustive).then_some(samples), cli.seed);
    let mut text = format!("n = {n}, N = {big_n}: {} pairs, {} mismatches\n", r.pairs_checked, r.mismatches.len());
    for m in &r.mismatches {
        text.push_str(&format!("  {} * {}: {}\n", m.left, m.right, m.detail));
    }
    let params = json!({"n": n, "N": big_n, "exhaustive": exhaustive, "samples": samples, "seed": cli.seed});
    Ok(Outcome::new(r.passed(), "brauer-oracle", params, serde_json::to_value(&r).unwrap(), text))
}

fn parse_overrides(items: &[String]) -> Result<BTreeMap<usize, FieldElem>, CliError> {
    items
        .iter()
        .map(|s| {
            let (i, e) = s.split_once('=').ok_or_else(|| usage(format!("expected i=expr, got '{s}'")))?;
            let i: usize = i.trim().parse().map_err(|_| usage(format!("bad index in '{s}'")))?;
            Ok((i, parse(e).map_err(usage)?))
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn duality_check(
    cli: &Cli,
    variant: VariantArg,
    m: usize,
    n: usize,
    rho: bool,
    varsigma: &[String],
    q_sample: &str,
    samples: usize,
) -> Result<Outcome, CliError> {
    let variant = match variant {
        VariantArg::Ai => DualityType::AI,
        VariantArg::Aii => DualityType::AII,
    };
    let overrides = parse_overrides(varsigma)?;
    let defaults = overrides.is_empty();
    let p = ParamSet::with_parameters(variant, m, n, overrides)?;
    let size = p.dim().checked_pow(n as u32).unwrap_or(usize::MAX);
    check_bound("tensor dimension", size, DEFAULT_MAX_TENSOR_DIM, cli.unsafe_large)?;
    let q = parse_rational(q_sample).map_err(usage)?;

    let relations = relations_check(&p)?;
    let commutators = commutation_check(&p, rho)?;
    let qgroup = qgroup_relations_check(&p)?;
    let coproduct = aii_coproduct_check(&p)?;
    let limits = if defaults { classical_limit_check(&p)? } else { Vec::new() };
    let local = n < 2 || e_is_local(&p)?;
    let (rep_checked, rep_failures) = if n >= 2 { representation_check(&p, samples, cli.seed)? } else { (0, Vec::new()) };

    let mut text = format!("type {variant:?}, m = {m}, n = {n}, tensor dimension {size}\n");
    text.push_str(&check_lines("q-Brauer relations", &relations));
    text.push_str(&check_lines("commutators", &commutators));
    text.push_str(&check_lines("quantum group relations", &qgroup));
    if !coproduct.is_empty() {
        text.push_str(&check_lines("two-factor coproduct", &coproduct));
    }
    if !limits.is_empty() {
        text.push_str(&check_lines("q = 1 limit", &limits));
    }
    text.push_str(&format!("e acts on the first two factors: {local}\n"));
    text.push_str(&format!("homomorphism: {rep_checked} pairs, {} failures\n", rep_failures.len()));

    let centralizer_bound = if cli.unsafe_large { DEFAULT_MAX_TENSOR_DIM } else { DEFAULT_MAX_CENTRALIZER_DIM };
    let dims = if size <= centralizer_bound {
        let d = centralizer_dims(&p, q, cli.seed, rho, centralizer_bound)?;
        text.push_str(&format!(
            "at q = {}: dim image(B_n) = {}, dim commutant(U) = {}, dim image(U) = {}, dim commutant(B_n) = {}, double centralizer: {}\n",
            d.q_sample,
            d.dim_qbrauer_image,
            d.dim_commutant_of_uq,
            d.dim_uq_image,
            d.dim_commutant_of_qbrauer,
            d.double_centralizer()
        ));
        Some(d)
    } else {
        text.push_str(&format!("centralizer dimensions skipped: tensor dimension {size} > {centralizer_bound}\n"));
        None
    };

    let all = |rs: &[CheckResult]| rs.iter().all(|r| r.holds);
    let passed = all(&relations)
        && all(&commutators)
        && all(&qgroup)
        && all(&coproduct)
        && all(&limits)
        && local
        && rep_failures.is_empty();
    let failures: Vec<Value> =
        rep_failures.iter().map(|(a, b)| json!([diagram_label(a), diagram_label(b)])).collect();
    let result = json!({
        "tensor_dim": size,
        "relations": relations,
        "commutators": commutators,
        "qgroup_relations": qgroup,
        "coproduct": coproduct,
        "classical_limit": limits,
        "e_local": local,
        "homomorphism": {"checked": rep_checked, "failures": failures},
        "centralizer": dims,
    });
    let params = json!({
        "variant": variant,
        "m": m,
        "n": n,
        "rho": rho,
        "varsigma": p.parameters(),
        "seed": cli.seed,
        "samples": samples,
    });
    Ok(Outcome::new(passed, "duality-check", params, result, text))
}

fn positivity(cli: &Cli, n: usize, zm: Option<i32>) -> Result<Outcome, CliError> {
    check_bound("n", n, DEFAULT_MAX_POSITIVITY_N, cli.unsafe_large)?;
    let alg = algebra(n)?;
    let t = CanonicalTable::build(&alg, Variant::Canonical, canonical_bound(cli.unsafe_large))
        .map_err(|e| CliError::Failed(e.to_string()))?;
    let sub = zm.map_or(ZSubstitution::Generic, ZSubstitution::Power);
    let r = positivity_scan(&alg, &t, sub);
    let mut text = format!("n = {n}, {:?}: {} of {} constants positive\n", sub, r.positive, r.constants_checked);
    for e in &r.exceptions {
        text.push_str(&format!("  C_{} * C_{} -> C_{}: {} ({:?})\n", e.left, e.right, e.target, e.coeff, e.verdict));
    }
    let params = json!({"n": n, "zm": zm});
    Ok(Outcome::new(r.all_positive(), "positivity-scan", params, serde_json::to_value(&r).unwrap(), text))
}

/// Run a parsed command.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::CanonicalBasis { n, dual } => canonical_basis(cli, *n, *dual),
        Command::Multiply { n, lhs, rhs } => multiply(cli, *n, lhs, rhs),
        Command::VerifyRelations { n } => verify_relations(cli, *n),
        Command::BrauerOracle { n, big_n, exhaustive, samples } => brauer_oracle(cli, *n, *big_n, *exhaustive, *samples),
        Command::DualityCheck { variant, m, n, rho, varsigma, q_sample, samples } => {
            duality_check(cli, *variant, *m, *n, *rho, varsigma, q_sample, *samples)
        }
        Command::PositivityScan { n, zm } => positivity(cli, *n, *zm),
    }
}

/// Parse arguments, run, write the report and return the exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return 2;
        }
    }
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return e.exit_code();
        }
    };
    let body = outcome.render(cli.format);
    let written = match &cli.output {
        Some(path) => std::fs::write(path, body),
        None => std::io::stdout().write_all(body.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return 2;
    }
    if outcome.passed {
        0
    } else {
        1
    }
}
