//! Admissible sequences `k ↦ (i_k, t_k)` materialized over a finite window,
//! and the index operators `k±`, `k(j)±` everything else is written in.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cartan::{is_positive, Node, RootData};
use crate::matrix::IntMatrix;
use crate::{Error, Result};

/// Inclusive integer interval `[lo, hi]`. Empty when `lo > hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    pub lo: i64,
    pub hi: i64,
}

impl Interval {
    pub const fn new(lo: i64, hi: i64) -> Self {
        Self { lo, hi }
    }

    pub fn len(&self) -> usize {
        if self.hi < self.lo {
            0
        } else {
            (self.hi - self.lo + 1) as usize
        }
    }

    pub fn is_empty(&self) -> bool {
        self.hi < self.lo
    }

    pub fn contains(&self, k: i64) -> bool {
        self.lo <= k && k <= self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        other.is_empty() || (self.lo <= other.lo && other.hi <= self.hi)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = i64> {
        self.lo..=self.hi
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// An orientation of every edge of the Dynkin diagram, stored as arrows
/// `source -> target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    arrows: Vec<(Node, Node)>,
}

impl Orientation {
    pub fn new(root: &RootData, arrows: &[(Node, Node)]) -> Result<Self> {
        let mut oriented = Vec::with_capacity(arrows.len());
        for &(u, v) in arrows {
            root.check_node(u)?;
            root.check_node(v)?;
            if !root.adjacent(u, v) {
                return Err(Error::InvalidOrientation(format!("{u}->{v} is not an edge")));
            }
            if oriented.contains(&(v, u)) {
                return Err(Error::CyclicOrientation);
            }
            if oriented.contains(&(u, v)) {
                return Err(Error::InvalidOrientation(format!("{u}->{v} given twice")));
            }
            oriented.push((u, v));
        }
        for (u, v) in root.edges() {
            if !oriented.contains(&(u, v)) && !oriented.contains(&(v, u)) {
                return Err(Error::InvalidOrientation(format!("edge {u}-{v} is not oriented")));
            }
        }
        let o = Self { arrows: oriented };
        if !o.is_acyclic(root) {
            return Err(Error::CyclicOrientation);
        }
        Ok(o)
    }

    /// Nodes in the parity class of the base node are sources.
    pub fn bipartite(root: &RootData) -> Self {
        let arrows = root
            .edges()
            .into_iter()
            .map(|(u, v)| if root.parity(u) == 0 { (u, v) } else { (v, u) })
            .collect();
        Self { arrows }
    }

    /// All `2^(#edges)` orientations, in a fixed order.
    pub fn all(root: &RootData) -> Vec<Self> {
        let edges = root.edges();
        (0..1u32 << edges.len())
            .map(|mask| {
                let arrows = edges
                    .iter()
                    .enumerate()
                    .map(|(b, &(u, v))| if mask >> b & 1 == 0 { (u, v) } else { (v, u) })
                    .collect();
                Self { arrows }
            })
            .collect()
    }

    pub fn arrows(&self) -> &[(Node, Node)] {
        &self.arrows
    }

    fn is_acyclic(&self, root: &RootData) -> bool {
        let n = root.rank();
        let mut indeg = vec![0usize; n + 1];
        for &(_, v) in &self.arrows {
            indeg[v] += 1;
        }
        let mut queue: VecDeque<Node> = root.nodes().filter(|&i| indeg[i] == 0).collect();
        let mut seen = 0;
        while let Some(u) = queue.pop_front() {
            seen += 1;
            for &(a, b) in &self.arrows {
                if a == u {
                    indeg[b] -= 1;
                    if indeg[b] == 0 {
                        queue.push_back(b);
                    }
                }
            }
        }
        seen == n
    }

    fn is_sink(&self, i: Node) -> bool {
        self.arrows.iter().all(|&(u, _)| u != i)
    }

    fn reflect(&mut self, i: Node) {
        for arrow in &mut self.arrows {
            if arrow.0 == i || arrow.1 == i {
                *arrow = (arrow.1, arrow.0);
            }
        }
    }
}

/// Named subcategory presets, each returning a sequence and a range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    /// `[1 - N·|I₀|, 0]`.
    CN(usize),
    /// `[-W, 0]`, a finite window standing in for `[-∞, 0]`.
    CMinus(i64),
    /// A range of length ℓ.
    CQ,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    Pass,
    Fail { at: i64 },
}

impl Check {
    pub fn passed(self) -> bool {
        self == Check::Pass
    }
}

/// Per-condition outcome of [`AdmissibleSeq::validate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ValidationReport {
    /// `(i_k, t_k) ∈ Î`.
    pub parity: Check,
    /// `t_{k⁺} = t_k + 2`.
    pub step: Check,
    /// `k > k'`, `d(i_k, i_{k'}) = 1` imply `t_k > t_{k'}`.
    pub order: Check,
    /// Every length-ℓ subword is a reduced word of `w0`.
    pub longest: Check,
}

impl ValidationReport {
    pub fn all_pass(&self) -> bool {
        self.parity.passed() && self.step.passed() && self.order.passed() && self.longest.passed()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct BaseWord {
    /// `i_1, …, i_ℓ`.
    word: Vec<Node>,
    /// `t_1, …, t_ℓ`.
    heights: Vec<i64>,
}

/// An admissible sequence restricted to a window of positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleSeq {
    root: RootData,
    window: Interval,
    colors: Vec<Node>,
    heights: Vec<i64>,
    by_color: Vec<Vec<i64>>,
    base: Option<BaseWord>,
}

impl AdmissibleSeq {
    pub fn default_window(root: &RootData) -> Interval {
        let l = root.longest_len() as i64;
        Interval::new(-10 * l, 10 * l)
    }

    /// Builds the sequence whose base word `i_1 … i_ℓ` is adapted to
    /// `orientation`: each letter is a sink of the quiver reflected at all
    /// previous letters, and sinks are peeled in rounds so that a bipartite
    /// orientation gives a power of a Coxeter element. Heights are
    /// normalized so that `t_1 ∈ {1, 2}`.
    pub fn from_quiver(root: &RootData, orientation: &Orientation) -> Result<Self> {
        Self::from_quiver_in(root, orientation, Self::default_window(root))
    }

    pub fn from_quiver_in(root: &RootData, orientation: &Orientation, window: Interval) -> Result<Self> {
        let l = root.longest_len();
        let n = root.rank();
        let mut quiver = orientation.clone();
        let mut w = IntMatrix::identity(n);
        let mut word = Vec::with_capacity(l);
        while word.len() < l {
            // all sinks of the current quiver form one round
            let round: Vec<Node> = root.nodes().filter(|&i| quiver.is_sink(i)).collect();
            let before = word.len();
            for i in round {
                let col: Vec<i64> = (0..n).map(|r| w[(r, i - 1)]).collect();
                if word.len() == l || !is_positive(&col) {
                    continue;
                }
                word.push(i);
                w = &w * root.simple_reflection(i)?.matrix();
                quiver.reflect(i);
            }
            if word.len() == before {
                return Err(Error::InvalidOrientation(format!(
                    "sink peeling stalled after {} letters",
                    word.len()
                )));
            }
        }

        // Height function on the diagram: a Q-arrow u -> v puts v one below u.
        let first = word[0];
        let mut xi = vec![None; n + 1];
        xi[first] = Some(2 - root.parity(first));
        let mut queue = VecDeque::from([first]);
        while let Some(u) = queue.pop_front() {
            let hu = xi[u].expect("visited");
            for &(a, b) in orientation.arrows() {
                let (other, h) = if a == u {
                    (b, hu - 1)
                } else if b == u {
                    (a, hu + 1)
                } else {
                    continue;
                };
                if xi[other].is_none() {
                    xi[other] = Some(h);
                    queue.push_back(other);
                }
            }
        }
        let mut seen = vec![0i64; n + 1];
        let heights = word
            .iter()
            .map(|&i| {
                let t = xi[i].expect("Dynkin diagram is connected") + 2 * seen[i];
                seen[i] += 1;
                t
            })
            .collect();

        let seq = Self::periodic(root.clone(), BaseWord { word, heights }, window);
        let report = seq.validate();
        if !report.all_pass() {
            return Err(Error::InvalidOrientation(format!("constructed sequence is not admissible: {report:?}")));
        }
        Ok(seq)
    }

    fn periodic(root: RootData, base: BaseWord, window: Interval) -> Self {
        let l = root.longest_len() as i64;
        let h = root.coxeter_number() as i64;
        let mut colors = Vec::with_capacity(window.len());
        let mut heights = Vec::with_capacity(window.len());
        for k in window.iter() {
            // k = r + m·ℓ with r ∈ [1, ℓ]
            let m = (k - 1).div_euclid(l);
            let r = (k - 1).rem_euclid(l) as usize;
            let mut i = base.word[r];
            if m.rem_euclid(2) == 1 {
                i = root.star(i);
            }
            colors.push(i);
            heights.push(base.heights[r] + m * h);
        }
        Self::assemble(root, window, colors, heights, Some(base))
    }

    fn assemble(
        root: RootData,
        window: Interval,
        colors: Vec<Node>,
        heights: Vec<i64>,
        base: Option<BaseWord>,
    ) -> Self {
        let mut by_color = vec![Vec::new(); root.rank() + 1];
        for (k, &i) in window.iter().zip(&colors) {
            by_color[i].push(k);
        }
        Self { root, window, colors, heights, by_color, base }
    }

    /// Loads an arbitrary sequence given as `(k, i_k, t_k)` triples over a
    /// contiguous window. Nothing beyond node validity is enforced; call
    /// [`validate`](Self::validate) to check admissibility.
    pub fn from_entries(root: &RootData, entries: &[(i64, Node, i64)]) -> Result<Self> {
        let Some(&(lo, _, _)) = entries.first() else {
            return Err(Error::InvalidParameter("empty sequence".into()));
        };
        let window = Interval::new(lo, lo + entries.len() as i64 - 1);
        let mut colors = Vec::with_capacity(entries.len());
        let mut heights = Vec::with_capacity(entries.len());
        for (expected, &(k, i, t)) in window.iter().zip(entries) {
            if k != expected {
                return Err(Error::InvalidParameter(format!("positions must be contiguous; found {k} after {}", expected - 1)));
            }
            root.check_node(i)?;
            colors.push(i);
            heights.push(t);
        }
        Ok(Self::assemble(root.clone(), window, colors, heights, None))
    }

    /// The same sequence over a different window. Only sequences built from
    /// a quiver carry the periodic data needed for this.
    pub fn with_window(&self, window: Interval) -> Result<Self> {
        let base = self.base.clone().ok_or(Error::NotPeriodic)?;
        Ok(Self::periodic(self.root.clone(), base, window))
    }

    /// Builds the sequence and range for a named subcategory, using the
    /// bipartite orientation. The window is widened to cover the range with a
    /// margin of 2ℓ on both sides.
    pub fn preset(root: &RootData, preset: Preset) -> Result<(Self, Interval)> {
        let l = root.longest_len() as i64;
        let range = match preset {
            Preset::CN(0) => return Err(Error::InvalidParameter("N must be at least 1".into())),
            Preset::CN(n) => Interval::new(1 - (n * root.rank()) as i64, 0),
            Preset::CMinus(w) if w < 0 => {
                return Err(Error::InvalidParameter("window parameter W must be nonnegative".into()))
            }
            Preset::CMinus(w) => Interval::new(-w, 0),
            Preset::CQ => Interval::new(1, l),
        };
        let default = Self::default_window(root);
        let window = Interval::new(default.lo.min(range.lo - 2 * l), default.hi.max(range.hi + 2 * l));
        let seq = Self::from_quiver_in(root, &Orientation::bipartite(root), window)?;
        Ok((seq, range))
    }

    pub fn root(&self) -> &RootData {
        &self.root
    }

    pub fn window(&self) -> Interval {
        self.window
    }

    pub fn is_periodic(&self) -> bool {
        self.base.is_some()
    }

    /// `i_1 … i_ℓ` when the sequence was built from a quiver.
    pub fn base_word(&self) -> Option<&[Node]> {
        self.base.as_ref().map(|b| b.word.as_slice())
    }

    fn offset(&self, k: i64) -> Result<usize> {
        if self.window.contains(k) {
            Ok((k - self.window.lo) as usize)
        } else {
            Err(Error::OutOfWindow { pos: k, window: self.window })
        }
    }

    pub fn color(&self, k: i64) -> Result<Node> {
        Ok(self.colors[self.offset(k)?])
    }

    pub fn height(&self, k: i64) -> Result<i64> {
        Ok(self.heights[self.offset(k)?])
    }

    /// `(i_k, t_k)`.
    pub fn entry(&self, k: i64) -> Result<(Node, i64)> {
        let o = self.offset(k)?;
        Ok((self.colors[o], self.heights[o]))
    }

    pub fn entries(&self) -> impl Iterator<Item = (i64, Node, i64)> + '_ {
        self.window.iter().zip(&self.colors).zip(&self.heights).map(|((k, &i), &t)| (k, i, t))
    }

    /// Positions of color `j` inside the window, increasing.
    pub fn positions_of(&self, j: Node) -> &[i64] {
        self.by_color.get(j).map_or(&[], Vec::as_slice)
    }

    fn exhausted(&self) -> Error {
        Error::WindowExhausted(self.window)
    }

    /// `k⁺ = min{p > k : i_p = i_k}`.
    pub fn succ(&self, k: i64) -> Result<i64> {
        let list = self.positions_of(self.color(k)?);
        let idx = list.partition_point(|&p| p <= k);
        list.get(idx).copied().ok_or_else(|| self.exhausted())
    }

    /// `k⁻ = max{p < k : i_p = i_k}`.
    pub fn pred(&self, k: i64) -> Result<i64> {
        let list = self.positions_of(self.color(k)?);
        let idx = list.partition_point(|&p| p < k);
        idx.checked_sub(1).map(|i| list[i]).ok_or_else(|| self.exhausted())
    }

    /// `k(j)⁺ = min{p ≥ k : i_p = j}`.
    pub fn succ_color(&self, k: i64, j: Node) -> Result<i64> {
        self.root.check_node(j)?;
        self.offset(k)?;
        let list = self.positions_of(j);
        let idx = list.partition_point(|&p| p < k);
        list.get(idx).copied().ok_or_else(|| self.exhausted())
    }

    /// `k(j)⁻ = max{p ≤ k : i_p = j}`.
    pub fn pred_color(&self, k: i64, j: Node) -> Result<i64> {
        self.root.check_node(j)?;
        self.offset(k)?;
        let list = self.positions_of(j);
        let idx = list.partition_point(|&p| p <= k);
        idx.checked_sub(1).map(|i| list[i]).ok_or_else(|| self.exhausted())
    }

    /// Checks the admissibility conditions over the whole window and reports
    /// the first violating position for each.
    pub fn validate(&self) -> ValidationReport {
        let root = &self.root;
        let entries: Vec<_> = self.entries().collect();

        let parity = entries
            .iter()
            .find(|&&(_, i, t)| (t - root.parity(i)).rem_euclid(2) != 0)
            .map_or(Check::Pass, |&(k, _, _)| Check::Fail { at: k });

        let step = entries
            .iter()
            .find(|&&(k, _, t)| matches!(self.succ(k), Ok(p) if self.height(p) != Ok(t + 2)))
            .map_or(Check::Pass, |&(k, _, _)| Check::Fail { at: k });

        // Heights along a color increase, so comparing against the latest
        // earlier occurrence of each neighbor color is enough.
        let mut last: Vec<Option<i64>> = vec![None; root.rank() + 1];
        let mut order = Check::Pass;
        for &(k, i, t) in &entries {
            let bad = root.neighbors(i).any(|j| last[j].is_some_and(|tj| t <= tj));
            if bad {
                order = Check::Fail { at: k };
                break;
            }
            last[i] = Some(t);
        }

        ValidationReport { parity, step, order, longest: self.check_longest() }
    }

    /// With `s_{i_k}⋯s_{i_{k+ℓ-1}} = w0`, the next window is also `w0` iff
    /// `i_{k+ℓ} = i_k*`, since `w0 s_i w0 = s_{i*}`.
    fn check_longest(&self) -> Check {
        let l = self.root.longest_len();
        if self.colors.len() < l {
            return Check::Pass;
        }
        if !self.root.is_longest(&self.colors[..l]) {
            return Check::Fail { at: self.window.lo };
        }
        for o in 0..self.colors.len() - l {
            if self.colors[o + l] != self.root.star(self.colors[o]) {
                return Check::Fail { at: self.window.lo + o as i64 + 1 };
            }
        }
        Check::Pass
    }

    /// `i_{k+ℓ} = i_k*` and `t_{k+ℓ} = t_k + h` for every `k` with both ends
    /// in the window.
    pub fn check_periodicity(&self) -> Check {
        let l = self.root.longest_len();
        let h = self.root.coxeter_number() as i64;
        for o in 0..self.colors.len().saturating_sub(l) {
            if self.colors[o + l] != self.root.star(self.colors[o]) || self.heights[o + l] != self.heights[o] + h {
                return Check::Fail { at: self.window.lo + o as i64 };
            }
        }
        Check::Pass
    }

    /// Largest minus smallest height in the window.
    pub fn height_spread(&self) -> i64 {
        let max = self.heights.iter().max().copied().unwrap_or(0);
        let min = self.heights.iter().min().copied().unwrap_or(0);
        max - min
    }

    #[cfg(test)]
    pub(crate) fn set_entry_for_test(&mut self, k: i64, i: Node, t: i64) {
        let o = self.offset(k).expect("in window");
        self.colors[o] = i;
        self.heights[o] = t;
        let (root, window, colors, heights) = (self.root.clone(), self.window, self.colors.clone(), self.heights.clone());
        *self = Self::assemble(root, window, colors, heights, self.base.clone());
    }
}
