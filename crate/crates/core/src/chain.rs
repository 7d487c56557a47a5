//! Admissible chains of i-boxes, stored as a start position and a pattern
//! over `{L, R}`.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::adm_seq::{AdmissibleSeq, Interval};
use crate::ibox::{grow_left, grow_right, IBox};
use crate::{Error, Result};

/// Largest range size accepted by [`enumerate_chains`] and [`connect`].
pub const MAX_ENUMERATION: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    L,
    R,
}

impl Step {
    pub fn flip(self) -> Self {
        match self {
            Step::L => Step::R,
            Step::R => Step::L,
        }
    }
}

/// An admissible chain `(a, 𝔗)` with `𝔗 = (T_1, …, T_{l-1})`.
///
/// Positions `k` and move indices `s` are 1-based throughout.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain {
    start: i64,
    pattern: Vec<Step>,
}

impl Chain {
    pub fn new(start: i64, pattern: Vec<Step>) -> Self {
        Self { start, pattern }
    }

    /// The chain `(hi, L^(n-1))` whose boxes are `[p, hi}` for `p = hi, hi-1, …`.
    pub fn canonical(range: Interval) -> Self {
        Self { start: range.hi, pattern: vec![Step::L; range.len().saturating_sub(1)] }
    }

    /// The chain of a range whose pattern is `pattern`; the start is forced.
    pub fn with_range(range: Interval, pattern: Vec<Step>) -> Result<Self> {
        if pattern.len() + 1 != range.len() {
            return Err(Error::InvalidParameter(alloc::format!(
                "pattern of length {} does not fit range {range}",
                pattern.len()
            )));
        }
        let lefts = pattern.iter().filter(|&&t| t == Step::L).count() as i64;
        Ok(Self { start: range.lo + lefts, pattern })
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    pub fn pattern(&self) -> &[Step] {
        &self.pattern
    }

    /// Number of boxes `l`.
    pub fn len(&self) -> usize {
        self.pattern.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `c̃_k`, the union of the first `k` boxes.
    pub fn envelope(&self, k: usize) -> Result<Interval> {
        if k == 0 || k > self.len() {
            return Err(Error::ChainIndex(k));
        }
        let (mut lo, mut hi) = (self.start, self.start);
        for t in &self.pattern[..k - 1] {
            match t {
                Step::L => lo -= 1,
                Step::R => hi += 1,
            }
        }
        Ok(Interval::new(lo, hi))
    }

    pub fn range(&self) -> Interval {
        self.envelope(self.len()).expect("l ≥ 1")
    }

    /// `c_1 = [a, a]`, `c_k = T_{k-1}(c̃_{k-1})`.
    pub fn boxes(&self, seq: &AdmissibleSeq) -> Result<Vec<IBox>> {
        let mut out = Vec::with_capacity(self.len());
        out.push(IBox::new(seq, self.start, self.start)?);
        let mut env = Interval::new(self.start, self.start);
        for t in &self.pattern {
            let next = match t {
                Step::L => grow_left(seq, env)?,
                Step::R => grow_right(seq, env)?,
            };
            match t {
                Step::L => env.lo -= 1,
                Step::R => env.hi += 1,
            }
            out.push(next);
        }
        Ok(out)
    }

    /// `c_s` is movable if `s = 1` or `T_{s-1} ≠ T_s`, for `1 ≤ s < l`.
    pub fn is_movable(&self, s: usize) -> bool {
        if s == 0 || s >= self.len() {
            return false;
        }
        s == 1 || self.pattern[s - 2] != self.pattern[s - 1]
    }

    pub fn movable_positions(&self) -> Vec<usize> {
        (1..self.len()).filter(|&s| self.is_movable(s)).collect()
    }

    /// `B_s`: moves `c̃_s` by one inside `c̃_{s+1}`.
    pub fn box_move(&self, s: usize) -> Result<Chain> {
        if !self.is_movable(s) {
            return Err(Error::NotMovable(s));
        }
        let mut next = self.clone();
        if s == 1 {
            next.start += match self.pattern[0] {
                Step::R => 1,
                Step::L => -1,
            };
        } else {
            next.pattern[s - 2] = next.pattern[s - 2].flip();
        }
        next.pattern[s - 1] = next.pattern[s - 1].flip();
        Ok(next)
    }

    /// Whether `B_s` relabels the boxes or mutates one of them.
    pub fn classify_move(&self, seq: &AdmissibleSeq, s: usize) -> Result<MoveKind> {
        if !self.is_movable(s) {
            return Err(Error::NotMovable(s));
        }
        let old = self.boxes(seq)?;
        if self.envelope(s + 1)? == old[s].interval() {
            return Ok(MoveKind::Mutation);
        }
        let new = self.box_move(s)?.boxes(seq)?;
        let perm = new
            .iter()
            .map(|b| old.iter().position(|o| o == b))
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::NotAPermutation(s))?;
        Ok(MoveKind::Permutation(perm))
    }

    fn mask(&self) -> u32 {
        self.pattern.iter().enumerate().fold(0, |m, (k, t)| if *t == Step::R { m | 1 << k } else { m })
    }

    fn from_mask(range: Interval, mask: u32) -> Self {
        let pattern = (0..range.len() - 1).map(|k| if mask >> k & 1 == 1 { Step::R } else { Step::L }).collect();
        Self::with_range(range, pattern).expect("length matches")
    }
}

/// Parses the literal `a:LLRL…`.
impl FromStr for Chain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::InvalidParameter(alloc::format!("chain literal `{s}`: {why}"));
        let (start, pattern) = s.trim().split_once(':').ok_or_else(|| bad("expected `a:pattern`"))?;
        let start = start.trim().parse().map_err(|_| bad("start is not an integer"))?;
        let pattern = pattern
            .chars()
            .map(|c| match c {
                'L' | 'l' => Ok(Step::L),
                'R' | 'r' => Ok(Step::R),
                other => Err(bad(&alloc::format!("unexpected `{other}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { start, pattern })
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.start)?;
        for t in &self.pattern {
            f.write_str(match t {
                Step::L => "L",
                Step::R => "R",
            })?;
        }
        Ok(())
    }
}

/// Outcome of a box move.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MoveKind {
    /// The boxes are unchanged as a set; `perm[k]` is the old index of the
    /// new `k`-th box (0-based).
    Permutation(Vec<usize>),
    /// The box at position `s` is replaced; the seed mutates there.
    Mutation,
}

/// All `2^(n-1)` chains with the given range.
pub fn enumerate_chains(range: Interval) -> Result<Vec<Chain>> {
    let n = range.len();
    if n == 0 {
        return Err(Error::InvalidParameter("empty range".into()));
    }
    if n > MAX_ENUMERATION {
        return Err(Error::RangeTooLarge(n, MAX_ENUMERATION));
    }
    Ok((0..1u32 << (n - 1)).map(|m| Chain::from_mask(range, m)).collect())
}

fn move_mask(mask: u32, s: usize) -> u32 {
    if s == 1 {
        mask ^ 1
    } else {
        mask ^ (0b11 << (s - 2))
    }
}

fn movable_mask(mask: u32, n: usize, s: usize) -> bool {
    s >= 1 && s < n && (s == 1 || (mask >> (s - 2) & 1) != (mask >> (s - 1) & 1))
}

/// Shortest sequence `(t_1, …, t_r)` with `B_{t_r} ∘ ⋯ ∘ B_{t_1}(from) = to`,
/// found by breadth-first search; ties go to the lower move index.
pub fn connect(from: &Chain, to: &Chain) -> Result<Vec<usize>> {
    let range = from.range();
    if range != to.range() {
        return Err(Error::RangeMismatch(range, to.range()));
    }
    let n = range.len();
    if n > MAX_ENUMERATION {
        return Err(Error::RangeTooLarge(n, MAX_ENUMERATION));
    }
    let (src, dst) = (from.mask(), to.mask());
    let mut parent: Vec<Option<(u32, u8)>> = vec![None; 1 << (n - 1)];
    let mut queue = VecDeque::from([src]);
    let mut seen = vec![false; 1 << (n - 1)];
    seen[src as usize] = true;
    while let Some(m) = queue.pop_front() {
        if m == dst {
            break;
        }
        for s in 1..n {
            if !movable_mask(m, n, s) {
                continue;
            }
            let next = move_mask(m, s);
            if !seen[next as usize] {
                seen[next as usize] = true;
                parent[next as usize] = Some((m, s as u8));
                queue.push_back(next);
            }
        }
    }
    let mut moves = Vec::new();
    let mut cur = dst;
    while cur != src {
        let (prev, s) = parent[cur as usize].expect("move graph is connected");
        moves.push(s as usize);
        cur = prev;
    }
    moves.reverse();
    Ok(moves)
}

/// A (not necessarily shortest) move sequence built directly: first fix the
/// number of `L`s by bringing an `R` or `L` to the front and flipping it with
/// `B_1`, then sort the pattern with adjacent swaps `B_s`. Works for any
/// range size in `O(n²)` moves.
pub fn route(from: &Chain, to: &Chain) -> Result<Vec<usize>> {
    if from.range() != to.range() {
        return Err(Error::RangeMismatch(from.range(), to.range()));
    }
    let mut cur = from.pattern.clone();
    let target = &to.pattern;
    let mut moves = Vec::new();
    let apply = |cur: &mut Vec<Step>, s: usize, moves: &mut Vec<usize>| {
        if s > 1 {
            debug_assert_ne!(cur[s - 2], cur[s - 1]);
            cur.swap(s - 2, s - 1);
        } else {
            cur[0] = cur[0].flip();
        }
        moves.push(s);
    };
    let lefts = |p: &[Step]| p.iter().filter(|&&t| t == Step::L).count();
    while lefts(&cur) != lefts(target) {
        let want = if lefts(&cur) < lefts(target) { Step::R } else { Step::L };
        let p = cur.iter().position(|&t| t == want).expect("count differs");
        for s in (2..=p + 1).rev() {
            apply(&mut cur, s, &mut moves);
        }
        apply(&mut cur, 1, &mut moves);
    }
    for q in 0..cur.len() {
        if cur[q] == target[q] {
            continue;
        }
        let p = (q..cur.len()).find(|&p| cur[p] == target[q]).expect("counts agree");
        for s in (q + 2..=p + 1).rev() {
            apply(&mut cur, s, &mut moves);
        }
    }
    debug_assert_eq!(&cur, target);
    Ok(moves)
}

/// Evidence for maximality of a chain's commuting family inside its range.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MaximalityReport {
    /// Member pairs `(j, k)` (1-based, `j < k`) the oracle rejected.
    pub failing_member_pairs: Vec<(usize, usize)>,
    /// Boxes of the range outside the chain, each with a member the oracle
    /// rejects against it.
    pub witnessed: Vec<(IBox, usize)>,
    /// Boxes outside the chain that the oracle accepts against every member.
    pub unwitnessed: Vec<IBox>,
}

impl MaximalityReport {
    pub fn is_clean(&self) -> bool {
        self.failing_member_pairs.is_empty() && self.unwitnessed.is_empty()
    }
}

/// Runs `oracle` on all member pairs, and on every i-box of the range that
/// is not a member against the members until one fails.
pub fn maximality_witness<F>(seq: &AdmissibleSeq, chain: &Chain, mut oracle: F) -> Result<MaximalityReport>
where
    F: FnMut(&IBox, &IBox) -> Result<bool>,
{
    let members = chain.boxes(seq)?;
    let mut report = MaximalityReport::default();
    for j in 0..members.len() {
        for k in j + 1..members.len() {
            if !oracle(&members[j], &members[k])? {
                report.failing_member_pairs.push((j + 1, k + 1));
            }
        }
    }
    let range = chain.range();
    for c in range.iter() {
        for d in c..=range.hi {
            let Ok(candidate) = IBox::new(seq, c, d) else { continue };
            if members.contains(&candidate) {
                continue;
            }
            let mut witness = None;
            for (k, m) in members.iter().enumerate() {
                if !oracle(m, &candidate)? {
                    witness = Some(k + 1);
                    break;
                }
            }
            match witness {
                Some(k) => report.witnessed.push((candidate, k)),
                None => report.unwitnessed.push(candidate),
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adm_seq::Orientation;
    use crate::ibox::commutes_sufficient;
    use crate::{RootData, TypeLabel};
    use Step::{L, R};

    fn a2() -> AdmissibleSeq {
        let r = RootData::new("A2".parse::<TypeLabel>().unwrap());
        AdmissibleSeq::from_quiver(&r, &Orientation::new(&r, &[(1, 2)]).unwrap()).unwrap()
    }

    fn boxes(s: &AdmissibleSeq, pairs: &[(i64, i64)]) -> Vec<IBox> {
        pairs.iter().map(|&(a, b)| IBox::new(s, a, b).unwrap()).collect()
    }

    #[test]
    fn literals_round_trip() {
        let c: Chain = "0:LLRL".parse().unwrap();
        assert_eq!(c, Chain::new(0, vec![L, L, R, L]));
        assert_eq!(c.to_string(), "0:LLRL");
        assert_eq!(c.range(), Interval::new(-3, 1));
        let single: Chain = "-2:".parse().unwrap();
        assert_eq!(single.range(), Interval::new(-2, -2));
        assert!("0:LXR".parse::<Chain>().is_err());
        assert!("LLR".parse::<Chain>().is_err());
    }

    #[test]
    fn boxes_of_fixture_chains() {
        let s = a2();
        let all_l = Chain::new(0, vec![L, L, L]);
        assert_eq!(all_l.boxes(&s).unwrap(), boxes(&s, &[(0, 0), (-1, -1), (-2, 0), (-3, -1)]));
        assert_eq!(Chain::new(5, vec![]).boxes(&s).unwrap(), boxes(&s, &[(5, 5)]));
        let rll = Chain::new(-1, vec![R, L, L]);
        assert_eq!(rll.boxes(&s).unwrap(), boxes(&s, &[(-1, -1), (0, 0), (-2, 0), (-3, -1)]));
    }

    #[test]
    fn envelopes() {
        let c = Chain::new(0, vec![L, L, L]);
        assert_eq!(c.envelope(1), Ok(Interval::new(0, 0)));
        assert_eq!(c.envelope(2), Ok(Interval::new(-1, 0)));
        assert_eq!(c.envelope(4), Ok(Interval::new(-3, 0)));
        assert_eq!(c.envelope(5), Err(Error::ChainIndex(5)));
        assert_eq!(c.envelope(0), Err(Error::ChainIndex(0)));
        assert_eq!(Chain::new(3, vec![R, L, R]).range(), Interval::new(2, 5));
    }

    #[test]
    fn moves() {
        let c = Chain::new(0, vec![L, L, L]);
        assert!(c.is_movable(1));
        assert!(!c.is_movable(2));
        assert!(!c.is_movable(4));
        assert!(Chain::new(-1, vec![R, L, L]).is_movable(2));
        assert_eq!(c.box_move(1), Ok(Chain::new(-1, vec![R, L, L])));
        assert_eq!(c.box_move(2), Err(Error::NotMovable(2)));
        assert_eq!(Chain::new(-1, vec![R, L, L]).box_move(2), Ok(Chain::new(-1, vec![L, R, L])));
        let back = c.box_move(1).unwrap().box_move(1).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn classification() {
        let s = a2();
        let c = Chain::new(0, vec![L, L, L]);
        assert_eq!(c.classify_move(&s, 1), Ok(MoveKind::Permutation(vec![1, 0, 2, 3])));
        let rll = Chain::new(-1, vec![R, L, L]);
        assert_eq!(rll.classify_move(&s, 2), Ok(MoveKind::Mutation));
        assert!(Chain::new(0, vec![]).movable_positions().is_empty());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_chains(Interval::new(0, 0)).unwrap().len(), 1);
        let four = enumerate_chains(Interval::new(-3, 0)).unwrap();
        assert_eq!(four.len(), 8);
        assert!(four.iter().all(|c| c.range() == Interval::new(-3, 0)));
        let mut dedup = four.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), 8);
        assert_eq!(enumerate_chains(Interval::new(1, 10)).unwrap().len(), 512);
        assert_eq!(enumerate_chains(Interval::new(0, 20)), Err(Error::RangeTooLarge(21, 20)));
    }

    #[test]
    fn connect_fixture() {
        let c = Chain::new(0, vec![L, L, L]);
        assert_eq!(connect(&c, &c), Ok(vec![]));
        assert_eq!(connect(&c, &Chain::new(-1, vec![R, L, L])), Ok(vec![1]));
        assert!(matches!(connect(&c, &Chain::new(0, vec![L, L])), Err(Error::RangeMismatch(..))));
    }

    fn replay(c: &Chain, moves: &[usize]) -> Chain {
        moves.iter().fold(c.clone(), |acc, &s| acc.box_move(s).unwrap())
    }

    #[test]
    fn connect_and_route_reach_target() {
        let chains = enumerate_chains(Interval::new(0, 7)).unwrap();
        // eccentricity of the first chain bounds every BFS distance from it
        let mut diameter = 0;
        for a in &chains {
            for b in chains.iter().step_by(7) {
                let moves = connect(a, b).unwrap();
                assert_eq!(&replay(a, &moves), b);
                diameter = diameter.max(moves.len());
                let r = route(a, b).unwrap();
                assert_eq!(&replay(a, &r), b);
                assert!(moves.len() <= r.len());
            }
        }
        assert!(diameter > 0);
    }

    #[test]
    fn route_large_range() {
        let range = Interval::new(-40, 0);
        let from = Chain::canonical(range);
        let to = Chain::with_range(range, (0..40).map(|k| if k % 3 == 0 { R } else { L }).collect()).unwrap();
        assert_eq!(replay(&from, &route(&from, &to).unwrap()), to);
    }

    #[test]
    fn maximality_with_sufficient_oracle() {
        let s = a2();
        let c = Chain::new(0, vec![L, L, L]);
        let report = maximality_witness(&s, &c, |x, y| commutes_sufficient(&s, x, y)).unwrap();
        assert!(report.failing_member_pairs.is_empty());
        assert!(report.unwitnessed.is_empty(), "{:?}", report.unwitnessed);
        let outside = IBox::new(&s, -2, -2).unwrap();
        assert!(report.witnessed.iter().any(|(b, _)| *b == outside));
        // [0,2] is not inside [-3,0] and is never considered
        assert!(report.witnessed.iter().all(|(b, _)| b.b() <= 0));
    }
}
