//! JSON payloads shared by the subcommands and the API, and the DOT export.

use std::fmt::Write as _;

use ibox_core::adm_seq::{Check, ValidationReport};
use ibox_core::chain::MoveKind;
use ibox_core::ibox::IBox;
use ibox_core::{AdmissibleSeq, Chain, Interval, Orientation, QCharacter, Seed};
use serde::{Deserialize, Serialize};

use crate::config::format_orientation;

pub type Span = [i64; 2];

pub fn span(r: Interval) -> Span {
    [r.lo, r.hi]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckJson {
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub at: Option<i64>,
}

impl From<Check> for CheckJson {
    fn from(c: Check) -> Self {
        match c {
            Check::Pass => Self { pass: true, at: None },
            Check::Fail { at } => Self { pass: false, at: Some(at) },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationJson {
    pub parity: CheckJson,
    pub step: CheckJson,
    pub order: CheckJson,
    pub longest: CheckJson,
    pub periodic: CheckJson,
}

impl ValidationJson {
    pub fn new(report: ValidationReport, periodic: Check) -> Self {
        Self {
            parity: report.parity.into(),
            step: report.step.into(),
            order: report.order.into(),
            longest: report.longest.into(),
            periodic: periodic.into(),
        }
    }

    pub fn all_pass(&self) -> bool {
        [&self.parity, &self.step, &self.order, &self.longest, &self.periodic].iter().all(|c| c.pass)
    }

    pub fn named(&self) -> [(&'static str, &CheckJson); 5] {
        [
            ("parity", &self.parity),
            ("step", &self.step),
            ("order", &self.order),
            ("longest", &self.longest),
            ("periodic", &self.periodic),
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub k: i64,
    pub i: usize,
    pub t: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceJson {
    #[serde(rename = "type")]
    pub type_label: String,
    pub orientation: String,
    pub window: Span,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub range: Option<Span>,
    pub entries: Vec<EntryJson>,
    pub checks: ValidationJson,
}

impl SequenceJson {
    pub fn new(seq: &AdmissibleSeq, orientation: &Orientation, range: Option<Interval>) -> Self {
        Self {
            type_label: seq.root().label().to_string(),
            orientation: format_orientation(orientation),
            window: span(seq.window()),
            range: range.map(span),
            entries: seq.entries().map(|(k, i, t)| EntryJson { k, i, t }).collect(),
            checks: ValidationJson::new(seq.validate(), seq.check_periodicity()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainJson {
    pub start: i64,
    pub pattern: String,
    pub range: Span,
}

impl From<&Chain> for ChainJson {
    fn from(c: &Chain) -> Self {
        let text = c.to_string();
        let pattern = text.split_once(':').map(|x| x.1.to_string()).unwrap_or_default();
        Self { start: c.start(), pattern, range: span(c.range()) }
    }
}

impl ChainJson {
    /// The chain, checked against the stated range.
    pub fn to_chain(&self) -> anyhow::Result<Chain> {
        let chain: Chain = format!("{}:{}", self.start, self.pattern).parse()?;
        anyhow::ensure!(
            span(chain.range()) == self.range,
            "chain {chain} has range {}, not [{}, {}]",
            chain.range(),
            self.range[0],
            self.range[1]
        );
        Ok(chain)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxJson {
    pub a: i64,
    pub b: i64,
    pub color: Option<usize>,
}

impl From<&IBox> for BoxJson {
    fn from(b: &IBox) -> Self {
        Self { a: b.a(), b: b.b(), color: b.color() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveJson {
    pub s: usize,
    pub kind: String,
    /// For permutation moves, `perm[k]` is the old index of the new `k`-th box.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub perm: Option<Vec<usize>>,
}

impl MoveJson {
    pub fn new(s: usize, kind: &MoveKind) -> Self {
        match kind {
            MoveKind::Permutation(p) => Self { s, kind: "permutation".into(), perm: Some(p.clone()) },
            MoveKind::Mutation => Self { s, kind: "mutation".into(), perm: None },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainReportJson {
    pub chain: ChainJson,
    pub boxes: Vec<BoxJson>,
    pub envelopes: Vec<Span>,
    pub movable: Vec<MoveJson>,
}

impl ChainReportJson {
    pub fn new(seq: &AdmissibleSeq, chain: &Chain) -> ibox_core::Result<Self> {
        let boxes = chain.boxes(seq)?;
        let envelopes = (1..=chain.len()).map(|k| chain.envelope(k).map(span)).collect::<Result<_, _>>()?;
        let movable = chain
            .movable_positions()
            .into_iter()
            .map(|s| Ok(MoveJson::new(s, &chain.classify_move(seq, s)?)))
            .collect::<ibox_core::Result<_>>()?;
        Ok(Self { chain: chain.into(), boxes: boxes.iter().map(BoxJson::from).collect(), envelopes, movable })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub pos: Option<i64>,
    pub color: Option<usize>,
    pub t: Option<i64>,
    #[serde(rename = "box")]
    pub ibox: Option<Span>,
    pub label: String,
    pub frozen: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibilityJson {
    pub holds: bool,
    /// `[j, k, (ΛB̃)_{jk}]` for the first failing entry.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<[i64; 3]>,
}

/// A seed. `B` is the exchange quiver on all vertices, so its columns at
/// `exchangeable` form `B̃`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedJson {
    #[serde(rename = "type")]
    pub type_label: String,
    pub range: Span,
    pub chain: Option<String>,
    pub vertices: Vec<VertexJson>,
    pub exchangeable: Vec<usize>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<i64>>,
    #[serde(rename = "Lambda")]
    pub lambda: Vec<Vec<i64>>,
    pub admissible: AdmissibilityJson,
}

impl SeedJson {
    pub fn new(seq: &AdmissibleSeq, seed: &Seed) -> Self {
        let vertices = (0..seed.len())
            .map(|k| {
                let label = &seed.labels()[k];
                let v = seed.vertex(k, seq);
                VertexJson {
                    pos: v.map(|v| v.pos),
                    color: v.map(|v| v.color),
                    t: v.map(|v| v.t),
                    ibox: label.ibox.map(|b| [b.a(), b.b()]),
                    label: label.highest.to_string(),
                    frozen: seed.is_frozen(k),
                }
            })
            .collect();
        let check = seed.check_lambda_admissible();
        Self {
            type_label: seq.root().label().to_string(),
            range: span(seed.range()),
            chain: seed.chain().map(Chain::to_string),
            vertices,
            exchangeable: seed.exchangeable(),
            b: seed.quiver().to_rows(),
            lambda: seed.lambda().entries.to_rows(),
            admissible: AdmissibilityJson {
                holds: check.holds(),
                witness: check.witness.map(|(j, k, v)| [j as i64, k as i64, v]),
            },
        }
    }
}

/// The quiver in DOT, vertices and edges in index order. Frozen vertices are
/// drawn as boxes; an arrow of multiplicity `m > 1` carries the label `m`.
pub fn seed_dot(seq: &AdmissibleSeq, seed: &Seed) -> String {
    let mut out = String::from("digraph seed {\n");
    let json = SeedJson::new(seq, seed);
    for (k, v) in json.vertices.iter().enumerate() {
        let name = match v.ibox {
            Some([a, b]) => format!("[{a},{b}]"),
            None => v.label.clone(),
        };
        let shape = if v.frozen { "box" } else { "ellipse" };
        let _ = writeln!(out, "  v{k} [label=\"{k}: {name}\", shape={shape}];");
    }
    for (v, row) in json.b.iter().enumerate() {
        for (w, &m) in row.iter().enumerate() {
            match m {
                1 => {
                    let _ = writeln!(out, "  v{v} -> v{w};");
                }
                m if m > 1 => {
                    let _ = writeln!(out, "  v{v} -> v{w} [label=\"{m}\"];");
                }
                _ => {}
            }
        }
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: u64,
    pub monomial: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QCharJson {
    #[serde(rename = "type")]
    pub type_label: String,
    pub highest: String,
    pub dimension: u64,
    pub terms: Vec<TermJson>,
}

impl QCharJson {
    pub fn new(type_label: String, ch: &QCharacter) -> Self {
        Self {
            type_label,
            highest: ch.highest().to_string(),
            dimension: ch.dimension(),
            terms: ch.terms().map(|(m, c)| TermJson { coeff: c, monomial: m.to_string() }).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReportJson {
    pub name: String,
    pub pass: bool,
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyJson {
    #[serde(rename = "type")]
    pub type_label: String,
    pub range: Span,
    pub checks: Vec<CheckReportJson>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectJson {
    pub from: ChainJson,
    pub to: ChainJson,
    pub moves: Vec<usize>,
    /// Chain after each move.
    pub path: Vec<ChainJson>,
    /// Move classes, present when a type was given.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kinds: Option<Vec<MoveJson>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeJson {
    #[serde(rename = "type")]
    pub type_label: String,
    pub rank: usize,
    pub coxeter: usize,
    pub longest: usize,
    pub oracle: bool,
}
