//! Command-line reports over the `kottwitz` library.
//!
//! Every subcommand assembles its whole report as a string before printing,
//! so identical inputs give byte-identical output regardless of thread count.
//! Rational numbers are always printed exactly (`p/q`), never as decimals.
//!
//! Usage:
//!   kottwitz enumerate --group gl:4 --mu 1,1,0,0 [--all] [--eps E] [--delta D]
//!   kottwitz wa-eq-a   --group gl:4 --mu 1,1,0,0 [--nu N] [--eps E]
//!   kottwitz avg-coroot --type F4
//!   kottwitz strata    --group gl:4 --mu 1,1,0,0 [--kappa K]
//!   kottwitz witness   --group gl:5 --mu 1,1,0,0,0 --nu 1/2,1/2,1/3,1/3,1/3
//!   kottwitz split-scan --bound 30 [--verify]
//!
//! All subcommands accept `--json` for machine output and `--config FILE`
//! pointing at a TOML file whose keys override the corresponding flags.
//! The environment variable KOTTWITZ_DENOM_BOUND overrides the enumeration
//! caps. Exit codes: 0 success, 2 parse/input error, 3 enumeration bound hit.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num::ToPrimitive;
use serde::Deserialize;
use serde_json::{json, Value};

use kottwitz::ff_bundles::splitting_disjunction_scan;
use kottwitz::hodge_newton::{avg_coroot, find_nonbasic_witness, i_sequence, wa_equals_a, Verdict};
use kottwitz::kottwitz::{
    basic_class_from_kappa, class_from_newton, enumerate_a_g_mu, enumerate_b_g_mu,
    enumerate_generalized, is_basic, EnumerationLimits, SigmaClass,
};
use kottwitz::linalg::Int;
use kottwitz::rootdata::pi1::{Pi1Element, Pi1Group};
use kottwitz::rootdata::{
    build_datum, parse_group_descriptor, BasedRootDatum, Coweight, LeviDescriptor, RootFamily,
};
use kottwitz::strata::strata_report;
use kottwitz::{KottwitzError, Result};

#[derive(Parser)]
#[command(name = "kottwitz", version, disable_help_subcommand = true)]
#[command(about = "Exact sigma-conjugacy class reports: Kottwitz sets, strata, witnesses")]
struct Cli {
    /// TOML file whose keys override the corresponding flags.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate B(G,mu), A(G,mu), or a generalized set B(G,eps,delta).
    Enumerate(EnumerateArgs),
    /// Decide whether the weakly admissible locus equals the admissible one.
    WaEqA(WaArgs),
    /// Average-coroot coefficient table and I-sequence of a Dynkin type.
    AvgCoroot(TypeArgs),
    /// Newton strata of a basic class, with bundles and statuses.
    Strata(StrataArgs),
    /// Witness data for an indecomposable non-basic class.
    Witness(WitnessArgs),
    /// Scan the two-part splitting disjunction up to a rank bound.
    SplitScan(ScanArgs),
}

#[derive(Args)]
struct EnumerateArgs {
    /// Group descriptor `<family>:<rank>[:galois=<k>]`, e.g. `gl:4` or `a:3:galois=2`.
    #[arg(long)]
    group: Option<String>,
    /// Dominant integral cocharacter, comma-separated.
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<String>,
    /// Torsion twist in component-group display coordinates.
    #[arg(long, allow_hyphen_values = true)]
    eps: Option<String>,
    /// Dominant rational bound; selects the generalized set B(G,eps,delta).
    #[arg(long, allow_hyphen_values = true)]
    delta: Option<String>,
    /// Enumerate A(G,mu), the union over torsion twists.
    #[arg(long)]
    all: bool,
    /// Machine-readable output.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct WaArgs {
    #[arg(long)]
    group: Option<String>,
    /// Minuscule dominant cocharacter, comma-separated.
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<String>,
    /// Newton point selecting the class; defaults to the basic class.
    #[arg(long, allow_hyphen_values = true)]
    nu: Option<String>,
    /// Torsion twist in display coordinates.
    #[arg(long, allow_hyphen_values = true)]
    eps: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct TypeArgs {
    /// Dynkin type, e.g. `F4`, `2A5`, `3D4`, or a full descriptor like `a:5:galois=2`.
    #[arg(long = "type")]
    dynkin: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct StrataArgs {
    #[arg(long)]
    group: Option<String>,
    /// Modification cocharacter, comma-separated.
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<String>,
    /// Integral lift of kappa(b) selecting the basic class; defaults to mu.
    #[arg(long, allow_hyphen_values = true)]
    kappa: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct WitnessArgs {
    #[arg(long)]
    group: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<String>,
    /// Newton point of the non-basic class to certify.
    #[arg(long, allow_hyphen_values = true)]
    nu: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    eps: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ScanArgs {
    /// Upper bound on the summand ranks r1, r2, r3.
    #[arg(long)]
    bound: Option<usize>,
    /// Also build and check the splitting witness of every configuration.
    #[arg(long)]
    verify: bool,
    #[arg(long)]
    json: bool,
}

/// Keys mirror the command-line flags; any key present overrides the flag.
#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    group: Option<String>,
    mu: Option<String>,
    nu: Option<String>,
    kappa: Option<String>,
    eps: Option<String>,
    delta: Option<String>,
    #[serde(rename = "type")]
    dynkin: Option<String>,
    bound: Option<usize>,
    all: Option<bool>,
    verify: Option<bool>,
    json: Option<bool>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                KottwitzError::CapExceeded(_) => 3u8,
                KottwitzError::Internal(_) => 1,
                _ => 2,
            })
        }
    }
}

fn run(cli: Cli) -> Result<String> {
    let cfg = load_config(cli.config.as_deref())?;
    match cli.command {
        Command::Enumerate(a) => cmd_enumerate(a, cfg),
        Command::WaEqA(a) => cmd_wa_eq_a(a, cfg),
        Command::AvgCoroot(a) => cmd_avg_coroot(a, cfg),
        Command::Strata(a) => cmd_strata(a, cfg),
        Command::Witness(a) => cmd_witness(a, cfg),
        Command::SplitScan(a) => cmd_split_scan(a, cfg),
    }
}

fn load_config(path: Option<&std::path::Path>) -> Result<FileConfig> {
    let Some(path) = path else {
        return Ok(FileConfig::default());
    };
    let text = std::fs::read_to_string(path).map_err(|e| {
        KottwitzError::Parse(format!("cannot read config {}: {e}", path.display()))
    })?;
    toml::from_str(&text)
        .map_err(|e| KottwitzError::Parse(format!("bad config {}: {e}", path.display())))
}

fn need(v: Option<String>, what: &str) -> Result<String> {
    v.ok_or_else(|| KottwitzError::Parse(format!("missing required value `{what}`")))
}

fn parse_coweight(datum: &BasedRootDatum, s: &str) -> Result<Coweight> {
    let v = Coweight::parse(s)?;
    if v.len() != datum.rank {
        return Err(KottwitzError::DimensionMismatch {
            expected: datum.rank,
            got: v.len(),
        });
    }
    Ok(v)
}

fn parse_ints(s: &str) -> Result<Vec<Int>> {
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<i64>()
                .map(Int::from)
                .map_err(|_| KottwitzError::Parse(format!("bad integer `{tok}`")))
        })
        .collect()
}

fn limits_from_env() -> Result<EnumerationLimits> {
    let mut limits = EnumerationLimits::default();
    if let Ok(s) = std::env::var("KOTTWITZ_DENOM_BOUND") {
        let v: u64 = s.trim().parse().map_err(|_| {
            KottwitzError::Parse(format!("KOTTWITZ_DENOM_BOUND must be a positive integer, got `{s}`"))
        })?;
        if v == 0 {
            return Err(KottwitzError::Parse(
                "KOTTWITZ_DENOM_BOUND must be positive".into(),
            ));
        }
        limits.orbit_cap = usize::try_from(v).unwrap_or(usize::MAX);
        limits.box_cap = v;
    }
    Ok(limits)
}

fn parse_eps(group: &Pi1Group, s: Option<&str>) -> Result<Pi1Element> {
    match s {
        None => Ok(group.zero()),
        Some(text) => {
            let e = group.element_from_display(&parse_ints(text)?)?;
            if !group.is_torsion(&e) {
                return Err(KottwitzError::InvalidInput(format!(
                    "{e} is not a torsion class"
                )));
            }
            Ok(e)
        }
    }
}

fn rat_strings(v: &Coweight) -> Vec<String> {
    v.0.iter().map(|r| r.to_string()).collect()
}

fn kappa_ints(group: &Pi1Group, e: &Pi1Element) -> Result<Vec<i64>> {
    group
        .display_values(e)
        .iter()
        .map(|x| {
            x.to_i64()
                .ok_or_else(|| KottwitzError::Internal("kappa coordinate overflows i64".into()))
        })
        .collect()
}

fn kappa_str(group: &Pi1Group, e: &Pi1Element) -> String {
    let parts: Vec<String> = group.display_values(e).iter().map(Int::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn nodes_str(levi: &LeviDescriptor) -> String {
    let parts: Vec<String> = levi.nodes.iter().map(usize::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

fn orbit_str(orbit: &[usize]) -> String {
    let parts: Vec<String> = orbit.iter().map(usize::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Left-aligns each column to the width of its longest cell (in characters).
fn render_table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0usize; cols];
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            for _ in cell.chars().count()..widths[i] {
                line.push(' ');
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn json_line(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable report");
    s.push('\n');
    s
}

fn class_json(datum: &BasedRootDatum, group: &Pi1Group, c: &SigmaClass) -> Result<Value> {
    Ok(json!({
        "newton": rat_strings(&c.newton),
        "kappa": kappa_ints(group, &c.kappa)?,
        "basic": is_basic(datum, c),
    }))
}

fn cmd_enumerate(a: EnumerateArgs, cfg: FileConfig) -> Result<String> {
    let datum = parse_group_descriptor(&need(cfg.group.or(a.group), "--group")?)?;
    let limits = limits_from_env()?;
    let json_mode = cfg.json.unwrap_or(a.json);
    let all_mode = cfg.all.unwrap_or(a.all);
    let eps_s = cfg.eps.or(a.eps);
    let delta_s = cfg.delta.or(a.delta);
    let mu_s = cfg.mu.or(a.mu);
    let group = Pi1Group::full(&datum);

    let (set_label, classes) = if let Some(ds) = &delta_s {
        let delta = parse_coweight(&datum, ds)?;
        let eps = parse_eps(&group, eps_s.as_deref())?;
        let label = format!("B({}, eps={}, delta={})", datum.label, eps, delta);
        (label, enumerate_generalized(&datum, &eps, &delta, &limits)?)
    } else {
        let mu = parse_coweight(&datum, &need(mu_s, "--mu")?)?;
        if all_mode {
            let label = format!("A({}, mu={})", datum.label, mu);
            (label, enumerate_a_g_mu(&datum, &mu, &limits)?)
        } else if eps_s.is_some() {
            let eps = parse_eps(&group, eps_s.as_deref())?;
            let target = group.add(&group.project_coweight(&mu)?, &eps);
            let label = format!("B({}, mu={}, eps={})", datum.label, mu, eps);
            let delta = datum.galois_average(&mu);
            (label, enumerate_generalized(&datum, &target, &delta, &limits)?)
        } else {
            let label = format!("B({}, mu={})", datum.label, mu);
            (label, enumerate_b_g_mu(&datum, &mu, &limits)?)
        }
    };

    if json_mode {
        let rows: Result<Vec<Value>> = classes
            .iter()
            .map(|c| class_json(&datum, &group, c))
            .collect();
        return Ok(json_line(&json!({
            "set": set_label,
            "group": datum.label,
            "classes": rows?,
        })));
    }
    let mut rows = vec![vec![
        "newton".to_string(),
        "kappa".to_string(),
        "basic".to_string(),
    ]];
    for c in &classes {
        rows.push(vec![
            c.newton.to_string(),
            kappa_str(&group, &c.kappa),
            yes_no(is_basic(&datum, c)).to_string(),
        ]);
    }
    let mut out = format!("{set_label}\n");
    out.push_str(&render_table(&rows));
    let _ = writeln!(out, "classes: {}", classes.len());
    Ok(out)
}

fn cmd_wa_eq_a(a: WaArgs, cfg: FileConfig) -> Result<String> {
    let datum = parse_group_descriptor(&need(cfg.group.or(a.group), "--group")?)?;
    let mu = parse_coweight(&datum, &need(cfg.mu.or(a.mu), "--mu")?)?;
    let limits = limits_from_env()?;
    let json_mode = cfg.json.unwrap_or(a.json);
    let group = Pi1Group::full(&datum);
    let eps = parse_eps(&group, cfg.eps.or(a.eps).as_deref())?;

    let class = match cfg.nu.or(a.nu) {
        Some(ns) => class_from_newton(&datum, &parse_coweight(&datum, &ns)?)?,
        None => {
            if !mu.is_integral() || !datum.is_dominant(&mu) {
                return Err(KottwitzError::InvalidInput(format!(
                    "cocharacter {mu} must be integral dominant"
                )));
            }
            let kappa = group.add(&group.project_coweight(&mu)?, &eps);
            SigmaClass {
                newton: group.basic_newton(&datum, &kappa),
                kappa,
            }
        }
    };
    let explanation = wa_equals_a(&datum, &mu, &class, &eps, &limits)?;
    let verdict = match explanation.verdict {
        Verdict::Equal => "EQUAL",
        Verdict::NotEqual => "NOT EQUAL",
    };

    if json_mode {
        return Ok(json_line(&json!({
            "group": datum.label,
            "mu": rat_strings(&mu),
            "nu": rat_strings(&class.newton),
            "levi": explanation.levi.nodes,
            "basic_in_levi": explanation.basic_in_levi,
            "offending": explanation
                .offending
                .iter()
                .map(|c| rat_strings(&c.newton))
                .collect::<Vec<_>>(),
            "verdict": verdict,
        })));
    }
    let mut out = String::new();
    let _ = writeln!(out, "group {}", datum.label);
    let _ = writeln!(out, "mu {mu}");
    let _ = writeln!(out, "nu {}", class.newton);
    let _ = writeln!(out, "levi {}", nodes_str(&explanation.levi));
    let _ = writeln!(out, "basic in levi: {}", yes_no(explanation.basic_in_levi));
    let _ = writeln!(out, "verdict: {verdict}");
    if !explanation.offending.is_empty() {
        out.push_str("offending classes in the levi:\n");
        for c in &explanation.offending {
            let _ = writeln!(out, "  {}", c.newton);
        }
    }
    Ok(out)
}

/// Accepts either a descriptor (`a:5:galois=2`) or a compact Dynkin label
/// such as `F4`, `2A5`, `3D4`.
fn parse_type(s: &str) -> Result<BasedRootDatum> {
    if s.contains(':') {
        return parse_group_descriptor(s);
    }
    let t = s.trim();
    let (galois, rest) = match t.chars().next() {
        Some('2') => (2, &t[1..]),
        Some('3') => (3, &t[1..]),
        _ => (1, t),
    };
    let mut chars = rest.chars();
    let family: RootFamily = chars
        .next()
        .ok_or_else(|| KottwitzError::Parse(format!("bad type `{s}`")))?
        .to_string()
        .parse()?;
    let rank: usize = chars
        .as_str()
        .parse()
        .map_err(|_| KottwitzError::Parse(format!("bad rank in type `{s}`")))?;
    build_datum(family, rank, galois)
}

fn cmd_avg_coroot(a: TypeArgs, cfg: FileConfig) -> Result<String> {
    let datum = parse_type(&need(cfg.dynkin.or(a.dynkin), "--type")?)?;
    let json_mode = cfg.json.unwrap_or(a.json);
    let sequence = i_sequence(&datum)?;
    let mut per_beta = Vec::new();
    for beta in 0..datum.ss_rank() {
        per_beta.push((beta, avg_coroot(&datum, beta)?));
    }

    if json_mode {
        let coeffs: Vec<Value> = per_beta
            .iter()
            .map(|(beta, orbits)| {
                json!({
                    "beta": beta,
                    "orbits": orbits
                        .iter()
                        .map(|(orbit, c)| json!({"orbit": orbit, "value": c.to_string()}))
                        .collect::<Vec<_>>(),
                })
            })
            .collect();
        return Ok(json_line(&json!({
            "type": datum.label,
            "coefficients": coeffs,
            "i_sequence": sequence,
        })));
    }
    let mut out = format!("type {}\n", datum.label);
    out.push_str("average coroot coefficients\n");
    for (beta, orbits) in &per_beta {
        let entries: Vec<String> = orbits
            .iter()
            .map(|(orbit, c)| format!("{}={}", orbit_str(orbit), c))
            .collect();
        let _ = writeln!(out, "  beta {beta}: {}", entries.join(" "));
    }
    let stages: Vec<String> = sequence.iter().map(|level| orbit_str(level)).collect();
    let _ = writeln!(out, "I-sequence: {}", stages.join(" -> "));
    Ok(out)
}

fn cmd_strata(a: StrataArgs, cfg: FileConfig) -> Result<String> {
    let datum = parse_group_descriptor(&need(cfg.group.or(a.group), "--group")?)?;
    let mu = parse_coweight(&datum, &need(cfg.mu.or(a.mu), "--mu")?)?;
    let limits = limits_from_env()?;
    let json_mode = cfg.json.unwrap_or(a.json);
    let kappa_lift = match cfg.kappa.or(a.kappa) {
        Some(ks) => parse_coweight(&datum, &ks)?,
        None => mu.clone(),
    };
    let b = basic_class_from_kappa(&datum, &kappa_lift)?;
    let reports = strata_report(&datum, &b, &mu, &limits)?;
    let group = Pi1Group::full(&datum);

    if json_mode {
        let rows: Result<Vec<Value>> = reports
            .iter()
            .map(|r| {
                Ok(json!({
                    "newton": rat_strings(&r.class.newton),
                    "kappa": kappa_ints(&group, &r.class.kappa)?,
                    "bundle": r.bundle.as_ref().map(|b| b.to_string()),
                    "status": r.status.to_string(),
                }))
            })
            .collect();
        return Ok(json_line(&Value::Array(rows?)));
    }
    let mut rows = vec![vec![
        "newton".to_string(),
        "bundle".to_string(),
        "status".to_string(),
    ]];
    for r in &reports {
        rows.push(vec![
            r.class.newton.to_string(),
            r.bundle.as_ref().map_or("-".to_string(), |b| b.to_string()),
            r.status.to_string(),
        ]);
    }
    let mut out = format!(
        "strata of ({}, kappa={}, mu={})\n",
        datum.label,
        kappa_str(&group, &b.kappa),
        mu
    );
    out.push_str(&render_table(&rows));
    let _ = writeln!(out, "strata: {}", reports.len());
    Ok(out)
}

fn cmd_witness(a: WitnessArgs, cfg: FileConfig) -> Result<String> {
    let datum = parse_group_descriptor(&need(cfg.group.or(a.group), "--group")?)?;
    let mu = parse_coweight(&datum, &need(cfg.mu.or(a.mu), "--mu")?)?;
    let nu = parse_coweight(&datum, &need(cfg.nu.or(a.nu), "--nu")?)?;
    let limits = limits_from_env()?;
    let json_mode = cfg.json.unwrap_or(a.json);
    let group = Pi1Group::full(&datum);
    let eps = parse_eps(&group, cfg.eps.or(a.eps).as_deref())?;

    let class = class_from_newton(&datum, &nu)?;
    let w = find_nonbasic_witness(&datum, &mu, &class, &eps, &limits)?;
    let cert = &w.certificate;

    if json_mode {
        return Ok(json_line(&json!({
            "group": datum.label,
            "mu": rat_strings(&mu),
            "nu": rat_strings(&class.newton),
            "alpha_orbit": w.alpha_orbit,
            "beta_node": w.beta_node,
            "w_mu": rat_strings(&w.w_mu),
            "w1_mu": rat_strings(&w.w1_mu),
            "certificate": {
                "pairing_positive": cert.pairing_positive,
                "levi_dominant": cert.levi_dominant,
                "eps_lifts": cert.eps_lifts,
                "kappa_equation": cert.eqn_kappa,
                "nu_equation": cert.eqn_nu,
                "membership": cert.membership,
                "all_hold": cert.all_hold(),
            },
        })));
    }
    let mut out = String::new();
    let _ = writeln!(out, "group {}", datum.label);
    let _ = writeln!(out, "mu {mu}");
    let _ = writeln!(out, "nu {}", class.newton);
    let _ = writeln!(out, "alpha orbit {}", orbit_str(&w.alpha_orbit));
    let _ = writeln!(out, "beta node {}", w.beta_node);
    let _ = writeln!(out, "w.mu  {}", w.w_mu);
    let _ = writeln!(out, "w1.mu {}", w.w1_mu);
    out.push_str("certificate:\n");
    let _ = writeln!(out, "  pairing positive: {}", yes_no(cert.pairing_positive));
    let _ = writeln!(out, "  levi dominant:    {}", yes_no(cert.levi_dominant));
    let _ = writeln!(out, "  eps lifts:        {}", yes_no(cert.eps_lifts));
    let _ = writeln!(out, "  kappa equation:   {}", yes_no(cert.eqn_kappa));
    let _ = writeln!(out, "  nu equation:      {}", yes_no(cert.eqn_nu));
    let _ = writeln!(out, "  membership:       {}", yes_no(cert.membership));
    let _ = writeln!(out, "certificate holds: {}", yes_no(cert.all_hold()));
    Ok(out)
}

fn cmd_split_scan(a: ScanArgs, cfg: FileConfig) -> Result<String> {
    let bound = cfg.bound.or(a.bound).unwrap_or(30);
    let verify = cfg.verify.unwrap_or(a.verify);
    let json_mode = cfg.json.unwrap_or(a.json);
    let report = splitting_disjunction_scan(bound, verify)?;

    if json_mode {
        let config_json = |cs: &[kottwitz::ff_bundles::ScanConfig]| -> Vec<Value> {
            cs.iter()
                .map(|c| json!({"r1": c.r1, "r2": c.r2, "r3": c.r3, "s": c.s}))
                .collect()
        };
        return Ok(json_line(&json!({
            "bound": report.bound,
            "configurations": report.valid,
            "skipped": report.skipped,
            "counterexamples": config_json(&report.counterexamples),
            "witness_failures": config_json(&report.witness_failures),
        })));
    }
    let mut out = format!(
        "{} counterexamples, {} configurations\n",
        report.counterexamples.len(),
        report.valid
    );
    if verify {
        let _ = writeln!(out, "{} witness failures", report.witness_failures.len());
    }
    Ok(out)
}
