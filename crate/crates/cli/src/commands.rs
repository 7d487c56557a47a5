//! The subcommands. Each returns its stdout text and whether it succeeded.

use std::fmt::Write as _;
use std::path::Path;

use anyhow::Context as _;
use ibox_core::chain::{self, MAX_ENUMERATION};
use ibox_core::ibox::KRDescriptor;
use ibox_core::qchar::{kr_qcharacter, oracle_supported, QCharEngine};
use ibox_core::seed::SeedContext;
use ibox_core::{Chain, IBox, IntMatrix, Interval, Seed};

use crate::config::{parse_interval, Config, Setup, UsageError};
use crate::schema::{
    seed_dot, span, ChainJson, ChainReportJson, CheckReportJson, ConnectJson, MoveJson, QCharJson, SeedJson,
    SequenceJson, VerifyJson,
};

/// Largest range for which `verify` checks the seed of every chain.
pub const VERIFY_ALL_CHAINS: usize = 8;
/// Largest range for which `verify` connects the canonical chain to every chain.
pub const VERIFY_CONNECT_ALL: usize = 10;
/// Largest KR module (number of heights) whose T-system `verify` checks.
pub const VERIFY_MAX_COUNT: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub success: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, success: true }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("payloads serialize");
    s.push('\n');
    s
}

pub fn parse_chain(s: &str) -> anyhow::Result<Chain> {
    s.parse::<Chain>().map_err(|e| UsageError(e.to_string()).into())
}

/// Builds the setup for a chain, defaulting the range to the chain's own.
pub fn setup_for_chain(config: &Config, chain: &Chain) -> anyhow::Result<Setup> {
    let mut config = config.clone();
    if config.range.is_none() && config.preset.is_none() {
        let r = chain.range();
        config.range = Some(format!("{}..{}", r.lo, r.hi));
    }
    let setup = config.build()?;
    if setup.range != Some(chain.range()) {
        return Err(UsageError(format!(
            "chain {chain} has range {}, but the configured range is {}",
            chain.range(),
            setup.require_range()?
        ))
        .into());
    }
    Ok(setup)
}

pub fn sequence(setup: &Setup, json: bool) -> Output {
    let report = SequenceJson::new(&setup.seq, &setup.orientation, setup.range);
    let success = report.checks.all_pass();
    if json {
        return Output { text: to_json(&report), success };
    }
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# type {}  orientation {}  window {}",
        report.type_label,
        report.orientation,
        setup.seq.window()
    );
    if let Some(r) = setup.range {
        let _ = writeln!(out, "# range {r}");
    }
    for e in &report.entries {
        let _ = writeln!(out, "{} {} {}", e.k, e.i, e.t);
    }
    for (name, c) in report.checks.named() {
        match c.at {
            None => {
                let _ = writeln!(out, "# {name} pass");
            }
            Some(k) => {
                let _ = writeln!(out, "# {name} fail at {k}");
            }
        }
    }
    Output { text: out, success }
}

pub fn chain_report(setup: &Setup, chain: &Chain, json: bool) -> anyhow::Result<Output> {
    let report = ChainReportJson::new(&setup.seq, chain)?;
    if json {
        return Ok(Output::ok(to_json(&report)));
    }
    let mut out = String::new();
    let _ = writeln!(out, "# chain {chain}  range {}  type {}", chain.range(), setup.type_label());
    let _ = writeln!(out, "# k box color envelope");
    for (k, (b, e)) in report.boxes.iter().zip(&report.envelopes).enumerate() {
        let color = b.color.map_or("-".to_string(), |c| c.to_string());
        let _ = writeln!(out, "{} [{},{}] {} [{}, {}]", k + 1, b.a, b.b, color, e[0], e[1]);
    }
    let movable: Vec<String> = report.movable.iter().map(|m| format!("B_{} {}", m.s, m.kind)).collect();
    let _ = writeln!(out, "# movable {}", if movable.is_empty() { "none".into() } else { movable.join(", ") });
    Ok(Output::ok(out))
}

pub fn connect_chains(setup: Option<&Setup>, from: &Chain, to: &Chain) -> anyhow::Result<ConnectJson> {
    let moves = if from.range().len() <= 12 { chain::connect(from, to)? } else { chain::route(from, to)? };
    let mut path = Vec::with_capacity(moves.len());
    let mut kinds = setup.map(|_| Vec::with_capacity(moves.len()));
    let mut cur = from.clone();
    for &s in &moves {
        if let (Some(setup), Some(kinds)) = (setup, kinds.as_mut()) {
            kinds.push(MoveJson::new(s, &cur.classify_move(&setup.seq, s)?));
        }
        cur = cur.box_move(s)?;
        path.push(ChainJson::from(&cur));
    }
    Ok(ConnectJson { from: from.into(), to: to.into(), moves, path, kinds })
}

pub fn connect(setup: Option<&Setup>, from: &Chain, to: &Chain, json: bool) -> anyhow::Result<Output> {
    let report = connect_chains(setup, from, to)?;
    if json {
        return Ok(Output::ok(to_json(&report)));
    }
    let mut out = String::new();
    let _ = writeln!(out, "# {} -> {}  {} moves", from, to, report.moves.len());
    for (n, (s, c)) in report.moves.iter().zip(&report.path).enumerate() {
        let kind = report.kinds.as_ref().map_or("", |k| k[n].kind.as_str());
        let _ = writeln!(out, "B_{s} {}:{} {kind}", c.start, c.pattern);
    }
    Ok(Output::ok(out.lines().map(str::trim_end).collect::<Vec<_>>().join("\n") + "\n"))
}

/// Seed of `chain`, or the canonical seed of the configured range, followed
/// by the mutations in `word`.
pub fn build_seed(setup: &Setup, ctx: &SeedContext, chain: Option<&Chain>, word: &[usize]) -> anyhow::Result<Seed> {
    let mut seed = match chain {
        Some(c) => Seed::for_chain(ctx, c)?,
        None => Seed::canonical(ctx, setup.require_range()?)?,
    };
    for &k in word {
        seed = seed.mutate(ctx, k)?;
    }
    Ok(seed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum SeedFormat {
    Json,
    Dot,
}

pub fn seed(
    setup: &Setup,
    chain: Option<&Chain>,
    word: &[usize],
    format: SeedFormat,
    dot_file: Option<&Path>,
) -> anyhow::Result<Output> {
    let ctx = setup.context();
    let seed = build_seed(setup, &ctx, chain, word)?;
    let dot = seed_dot(&setup.seq, &seed);
    if let Some(path) = dot_file {
        std::fs::write(path, &dot).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(Output::ok(match format {
        SeedFormat::Json => to_json(&SeedJson::new(&setup.seq, &seed)),
        SeedFormat::Dot => dot,
    }))
}

/// Reads a Λ table: a JSON integer matrix, or a seed JSON with `Lambda`.
pub fn read_lambda(path: &Path) -> anyhow::Result<IntMatrix> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let value: serde_json::Value = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    let table = match value {
        serde_json::Value::Object(mut map) => map.remove("Lambda").context("object has no `Lambda` key")?,
        other => other,
    };
    let rows: Vec<Vec<i64>> = serde_json::from_value(table).context("Λ table is not an integer matrix")?;
    anyhow::ensure!(rows.iter().all(|r| r.len() == rows.len()), "Λ table is not square");
    Ok(IntMatrix::from_rows(&rows))
}

fn check(name: &str, pass: bool, detail: String) -> CheckReportJson {
    CheckReportJson { name: name.into(), pass, detail, witness: None }
}

fn boxes_in(setup: &Setup, range: Interval) -> Vec<IBox> {
    let seq = &setup.seq;
    let mut out = Vec::new();
    for a in range.iter() {
        let Ok(i) = seq.color(a) else { continue };
        for &b in seq.positions_of(i).iter().filter(|&&b| b > a && b <= range.hi) {
            if let Ok(x) = IBox::new(seq, a, b) {
                out.push(x);
            }
        }
    }
    out
}

fn verify_t_systems(setup: &Setup, range: Interval) -> CheckReportJson {
    let name = "t-systems";
    if !oracle_supported(&setup.root) {
        return check(name, true, format!("skipped: no q-character oracle for {}", setup.type_label()));
    }
    let mut engine = QCharEngine::new(&setup.root, setup.cap);
    let mut count = 0;
    for b in boxes_in(setup, range) {
        match b.kr_descriptor(&setup.seq) {
            Ok(d) if d.count <= VERIFY_MAX_COUNT => {}
            _ => continue,
        }
        match engine.verify_t_system(&setup.seq, &b) {
            Ok(c) if c.holds => count += 1,
            Ok(c) => {
                let (m, h, s) = c.dims;
                return check(name, false, format!("{b}: dimensions {m} vs {h} + {s}"));
            }
            Err(e) => return check(name, false, format!("{b}: {e}")),
        }
    }
    check(name, true, format!("{count} boxes with at most {VERIFY_MAX_COUNT} heights"))
}

fn verify_lambda(ctx: &SeedContext, range: Interval, table: Option<IntMatrix>) -> anyhow::Result<CheckReportJson> {
    let name = "lambda-admissibility";
    let canonical = Seed::canonical(ctx, range)?;
    let mut seeds = vec![("canonical".to_string(), match table {
        Some(t) => canonical.clone().with_lambda(t)?,
        None => canonical.clone(),
    })];
    for k in canonical.exchangeable() {
        seeds.push((format!("canonical mutated at {k}"), canonical.mutate(ctx, k)?));
    }
    if range.len() <= VERIFY_ALL_CHAINS {
        for c in chain::enumerate_chains(range)? {
            seeds.push((format!("chain {c}"), Seed::for_chain(ctx, &c)?));
        }
    }
    for (what, seed) in &seeds {
        if let Some((j, k, v)) = seed.check_lambda_admissible().witness {
            let mut report = check(name, false, format!("{what}: (ΛB̃)[{j}][{k}] = {v}"));
            report.witness = Some(vec![j as i64, k as i64, v]);
            return Ok(report);
        }
    }
    Ok(check(name, true, format!("{} seeds", seeds.len())))
}

fn verify_involution(ctx: &SeedContext, range: Interval) -> anyhow::Result<CheckReportJson> {
    let seed = Seed::canonical(ctx, range)?;
    let ks = seed.exchangeable();
    for &k in &ks {
        if !seed.mutate(ctx, k)?.mutate(ctx, k)?.same_data(&seed) {
            return Ok(check("mutation-involution", false, format!("vertex {k}")));
        }
    }
    Ok(check("mutation-involution", true, format!("{} exchangeable vertices", ks.len())))
}

fn verify_connectivity(range: Interval) -> anyhow::Result<CheckReportJson> {
    let name = "connectivity";
    let start = Chain::canonical(range);
    let targets = if range.len() <= VERIFY_CONNECT_ALL.min(MAX_ENUMERATION) {
        chain::enumerate_chains(range)?
    } else {
        let all_r = vec![ibox_core::Step::R; range.len() - 1];
        vec![Chain::with_range(range, all_r)?]
    };
    for target in &targets {
        let moves = if range.len() <= 12 { chain::connect(&start, target)? } else { chain::route(&start, target)? };
        let mut cur = start.clone();
        for s in moves {
            cur = cur.box_move(s)?;
        }
        if &cur != target {
            return Ok(check(name, false, format!("path to {target} ends at {cur}")));
        }
    }
    Ok(check(name, true, format!("{} chains reached", targets.len())))
}

pub fn verify_report(setup: &Setup, table: Option<IntMatrix>) -> anyhow::Result<VerifyJson> {
    let range = setup.require_range()?;
    let ctx = setup.context();
    let validation = crate::schema::ValidationJson::new(setup.seq.validate(), setup.seq.check_periodicity());
    let failed: Vec<&str> = validation.named().iter().filter(|(_, c)| !c.pass).map(|(n, _)| *n).collect();
    let checks = vec![
        check(
            "sequence",
            failed.is_empty(),
            if failed.is_empty() { "all conditions hold".into() } else { format!("failed: {}", failed.join(", ")) },
        ),
        verify_t_systems(setup, range),
        verify_lambda(&ctx, range, table)?,
        verify_involution(&ctx, range)?,
        verify_connectivity(range)?,
    ];
    let pass = checks.iter().all(|c| c.pass);
    Ok(VerifyJson { type_label: setup.type_label(), range: span(range), checks, pass })
}

pub fn verify(setup: &Setup, lambda_file: Option<&Path>) -> anyhow::Result<Output> {
    let table = lambda_file.map(read_lambda).transpose()?;
    let report = verify_report(setup, table)?;
    Ok(Output { success: report.pass, text: to_json(&report) })
}

/// Selects a KR module by box `a..b` or by node, first height and count.
pub fn kr_descriptor(
    setup: &Setup,
    ibox: Option<&str>,
    node: Option<usize>,
    t: Option<i64>,
    count: usize,
) -> anyhow::Result<KRDescriptor> {
    match (ibox, node, t) {
        (Some(b), None, None) => {
            let r = parse_interval(b)?;
            Ok(IBox::new(&setup.seq, r.lo, r.hi)?.kr_descriptor(&setup.seq)?)
        }
        (None, Some(i), Some(t)) => {
            setup.root.check_node(i)?;
            if (t + setup.root.parity(i)).rem_euclid(2) != 0 {
                return Err(UsageError(format!("height {t} has the wrong parity for node {i}")).into());
            }
            anyhow::ensure!(count >= 1, "count must be at least 1");
            Ok(KRDescriptor { color: i, count, heights: (0..count as i64).map(|n| t + 2 * n).collect() })
        }
        _ => Err(UsageError("pass either --box a..b or --node i --t t".into()).into()),
    }
}

pub fn qchar(setup: &Setup, desc: &KRDescriptor, json: bool) -> anyhow::Result<Output> {
    let ch = kr_qcharacter(&setup.root, desc, setup.cap)?;
    let report = QCharJson::new(setup.type_label(), &ch);
    if json {
        return Ok(Output::ok(to_json(&report)));
    }
    let mut out = String::new();
    let _ = writeln!(out, "# type {}  highest {}", report.type_label, report.highest);
    let _ = writeln!(out, "# {} terms, dimension {}", report.terms.len(), report.dimension);
    out.push_str(&ch.to_string());
    Ok(Output::ok(out))
}
