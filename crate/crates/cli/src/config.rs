//! Parsing of the options shared by every subcommand and by the query
//! strings of the JSON API.

use std::fmt;

use clap::Args;
use ibox_core::adm_seq::Preset;
use ibox_core::invariants::default_order;
use ibox_core::seed::SeedContext;
use ibox_core::{AdmissibleSeq, CartanSeries, Error, Interval, Node, Orientation, RootData, TypeLabel};
use serde::Deserialize;

/// Default term cap for q-character work.
pub const DEFAULT_CAP: usize = 200_000;

/// A malformed option. Reported with exit code 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

fn core_usage(e: Error) -> anyhow::Error {
    usage(e.to_string())
}

/// Raw options. Every field is kept as text so that the same struct can be
/// filled from command-line flags or from a URL query.
#[derive(Debug, Clone, Default, Args, Deserialize)]
pub struct Config {
    /// Type label such as A2, D4 or E6.
    #[arg(long = "type", value_name = "LABEL")]
    #[serde(rename = "type")]
    pub type_label: Option<String>,
    /// Dynkin quiver as `i>j` arrows, e.g. `1>2,3>2`, or `bipartite`.
    #[arg(long)]
    pub orientation: Option<String>,
    /// Window of positions `lo..hi`.
    #[arg(long, allow_hyphen_values = true)]
    pub window: Option<String>,
    /// Range of positions `lo..hi`.
    #[arg(long, allow_hyphen_values = true)]
    pub range: Option<String>,
    /// Named subcategory: CN, C- or CQ.
    #[arg(long)]
    pub preset: Option<String>,
    /// Parameter N of the CN preset.
    #[arg(long = "N", value_name = "N")]
    #[serde(rename = "N")]
    pub n: Option<String>,
    /// Parameter W of the C- preset.
    #[arg(long = "W", value_name = "W", allow_hyphen_values = true)]
    #[serde(rename = "W")]
    pub w: Option<String>,
    /// Order of the inverse quantum Cartan series.
    #[arg(long)]
    pub order: Option<String>,
    /// Term cap for q-characters.
    #[arg(long)]
    pub cap: Option<String>,
}

/// Everything a command needs, built from a [`Config`].
#[derive(Debug, Clone)]
pub struct Setup {
    pub root: RootData,
    pub orientation: Orientation,
    pub seq: AdmissibleSeq,
    pub range: Option<Interval>,
    pub series: CartanSeries,
    pub cap: usize,
}

impl Setup {
    pub fn context(&self) -> SeedContext {
        SeedContext::with_series(self.seq.clone(), self.series.clone())
    }

    pub fn require_range(&self) -> anyhow::Result<Interval> {
        self.range.ok_or_else(|| usage("a range is required: pass --range lo..hi or --preset"))
    }

    pub fn type_label(&self) -> String {
        self.root.label().to_string()
    }
}

/// Parses `lo..hi` (also `lo..=hi` and `[lo,hi]`).
pub fn parse_interval(s: &str) -> anyhow::Result<Interval> {
    let t = s.trim();
    let inner = t.strip_prefix('[').and_then(|x| x.strip_suffix(']'));
    let (lo, hi) = match inner {
        Some(x) => x.split_once(','),
        None => t.split_once("..=").or_else(|| t.split_once("..")),
    }
    .ok_or_else(|| usage(format!("`{s}` is not an interval lo..hi")))?;
    let num = |x: &str| x.trim().parse::<i64>().map_err(|_| usage(format!("`{s}` is not an interval lo..hi")));
    Ok(Interval::new(num(lo)?, num(hi)?))
}

/// Parses `i>j,k>l` into arrows, or `bipartite`.
pub fn parse_orientation(root: &RootData, s: Option<&str>) -> anyhow::Result<Orientation> {
    let s = match s.map(str::trim) {
        None | Some("") | Some("bipartite") => return Ok(Orientation::bipartite(root)),
        Some(s) => s,
    };
    let arrows = s
        .split(',')
        .map(|a| {
            let (i, j) = a.split_once('>').ok_or_else(|| usage(format!("arrow `{a}` is not of the form i>j")))?;
            let node = |x: &str| x.trim().parse::<Node>().map_err(|_| usage(format!("arrow `{a}` has a bad node")));
            Ok((node(i)?, node(j)?))
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    Orientation::new(root, &arrows).map_err(core_usage)
}

pub fn format_orientation(o: &Orientation) -> String {
    o.arrows().iter().map(|(i, j)| format!("{i}>{j}")).collect::<Vec<_>>().join(",")
}

fn parse_num<T: std::str::FromStr>(name: &str, s: Option<&str>) -> anyhow::Result<Option<T>> {
    s.map(|x| x.trim().parse::<T>().map_err(|_| usage(format!("--{name} expects a number, got `{x}`")))).transpose()
}

fn parse_preset(cfg: &Config) -> anyhow::Result<Option<Preset>> {
    let Some(name) = cfg.preset.as_deref() else {
        return Ok(None);
    };
    let preset = match name.trim() {
        "CN" => Preset::CN(parse_num("N", cfg.n.as_deref())?.ok_or_else(|| usage("preset CN needs --N"))?),
        "C-" | "CMinus" => Preset::CMinus(parse_num("W", cfg.w.as_deref())?.ok_or_else(|| usage("preset C- needs --W"))?),
        "CQ" => Preset::CQ,
        other => return Err(usage(format!("unknown preset `{other}`; expected CN, C- or CQ"))),
    };
    Ok(Some(preset))
}

impl Config {
    pub fn root(&self) -> anyhow::Result<RootData> {
        let label = self.type_label.as_deref().ok_or_else(|| usage("--type is required"))?;
        Ok(RootData::new(label.parse::<TypeLabel>().map_err(core_usage)?))
    }

    /// Builds the sequence, range and series. A range supplied without a
    /// window gets a window reaching `2ℓ` beyond it on both sides.
    pub fn build(&self) -> anyhow::Result<Setup> {
        let root = self.root()?;
        let orientation = parse_orientation(&root, self.orientation.as_deref())?;
        let window = self.window.as_deref().map(parse_interval).transpose()?;
        let explicit = self.range.as_deref().map(parse_interval).transpose()?;
        let preset = parse_preset(self)?;
        if explicit.is_some() && preset.is_some() {
            return Err(usage("pass either --range or --preset, not both"));
        }
        if let Some(w) = window {
            if w.is_empty() {
                return Err(usage(format!("window {w} is empty")));
            }
        }
        if let Some(r) = explicit {
            if r.is_empty() {
                return Err(usage(format!("range {r} is empty")));
            }
        }
        let l = root.longest_len() as i64;
        let (seq, range) = match preset {
            Some(p) if window.is_none() && self.orientation.is_none() => {
                let (seq, range) = AdmissibleSeq::preset(&root, p).map_err(core_usage)?;
                (seq, Some(range))
            }
            _ => {
                let range = match preset {
                    Some(p) => Some(AdmissibleSeq::preset(&root, p).map_err(core_usage)?.1),
                    None => explicit,
                };
                let window = window.unwrap_or_else(|| {
                    let d = AdmissibleSeq::default_window(&root);
                    match range {
                        Some(r) => Interval::new(d.lo.min(r.lo - 2 * l), d.hi.max(r.hi + 2 * l)),
                        None => d,
                    }
                });
                (AdmissibleSeq::from_quiver_in(&root, &orientation, window).map_err(core_usage)?, range)
            }
        };
        if let Some(r) = range {
            if !seq.window().contains_interval(&r) {
                return Err(usage(format!("range {r} is not inside the window {}", seq.window())));
            }
        }
        let order = parse_num("order", self.order.as_deref())?.unwrap_or_else(|| default_order(&seq));
        let series = CartanSeries::new(&root, order).map_err(core_usage)?;
        let cap = parse_num("cap", self.cap.as_deref())?.unwrap_or(DEFAULT_CAP);
        Ok(Setup { root, orientation, seq, range, series, cap })
    }
}

/// True when `err` should be reported as a usage error.
pub fn is_usage(err: &anyhow::Error) -> bool {
    err.is::<UsageError>()
}
