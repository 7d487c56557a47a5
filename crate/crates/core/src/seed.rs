//! Monoidal seeds of interval categories: exchange matrices from the quiver
//! Ψ, frozen vertices, mutation, transport along box moves and Laurent
//! expansion of cluster variables.

use alloc::vec::Vec;

use crate::adm_seq::{AdmissibleSeq, Interval};
use crate::cartan::Node;
use crate::chain::{self, Chain, MoveKind};
use crate::ibox::IBox;
use crate::invariants::{self, CartanSeries, LambdaMatrix};
use crate::laurent::Laurent;
use crate::matrix::IntMatrix;
use crate::qchar::YMonomial;
use crate::{Error, Result};

/// Longest mutation word accepted by [`Seed::laurent_expand`].
pub const MAX_WORD: usize = 8;

/// Ranges up to this size are connected by shortest paths; longer ones use
/// the constructive route.
const BFS_LIMIT: usize = 12;

/// The admissible sequence and the series a family of seeds is built over.
#[derive(Debug, Clone)]
pub struct SeedContext {
    seq: AdmissibleSeq,
    series: CartanSeries,
}

impl SeedContext {
    pub fn new(seq: AdmissibleSeq) -> Self {
        let series = CartanSeries::for_sequence(&seq);
        Self { seq, series }
    }

    pub fn with_series(seq: AdmissibleSeq, series: CartanSeries) -> Self {
        Self { seq, series }
    }

    pub fn seq(&self) -> &AdmissibleSeq {
        &self.seq
    }

    pub fn series(&self) -> &CartanSeries {
        &self.series
    }
}

/// The module at a seed vertex: its highest monomial, and the i-box it is
/// `M[a, b]` of when it is a KR module of the sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Label {
    pub highest: YMonomial,
    pub ibox: Option<IBox>,
}

impl Label {
    fn of_box(seq: &AdmissibleSeq, b: IBox) -> Result<Self> {
        Ok(Self { highest: YMonomial::from_descriptor(&b.kr_descriptor(seq)?), ibox: Some(b) })
    }

    /// Finds the i-box of `seq` whose KR monomial is `m`, if any.
    fn of_monomial(seq: &AdmissibleSeq, m: YMonomial) -> Self {
        let ibox = box_of_monomial(seq, &m);
        Self { highest: m, ibox }
    }
}

fn box_of_monomial(seq: &AdmissibleSeq, m: &YMonomial) -> Option<IBox> {
    let f = m.factors();
    let i = f.first()?.0;
    if f.iter().any(|x| x.0 != i || x.2 != 1) || f.windows(2).any(|w| w[1].1 != w[0].1 + 2) {
        return None;
    }
    let positions = seq.positions_of(i);
    let first = positions.iter().position(|&k| seq.height(k).ok() == Some(f[0].1))?;
    let last = first + f.len() - 1;
    if last >= positions.len() {
        return None;
    }
    IBox::new(seq, positions[first], positions[last]).ok()
}

/// Position, color and height of a seed vertex labeled by an i-box `[a, b]`:
/// the Ψ-vertex `(i_a, t_a)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Vertex {
    pub pos: i64,
    pub color: Node,
    pub t: i64,
}

/// A seed: modules `M_k`, the full exchange quiver on all vertices, frozen
/// flags, the Λ-matrix and optionally cluster variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Seed {
    chain: Option<Chain>,
    range: Interval,
    labels: Vec<Label>,
    quiver: IntMatrix,
    frozen: Vec<bool>,
    lambda: LambdaMatrix,
    cluster_vars: Option<Vec<Laurent>>,
}

/// Outcome of evaluating `(ΛB̃)_{jk} = -2δ_{jk}` over `K × K_ex`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdmissibilityCheck {
    /// First failing `(j, k, value)` with `j` and `k` vertex indices.
    pub witness: Option<(usize, usize, i64)>,
}

impl AdmissibilityCheck {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

impl Seed {
    /// Seed of the all-L chain on `range`: vertex `k` carries
    /// `[b-k, b}` and sits at the Ψ-vertex of its left end.
    pub fn canonical(ctx: &SeedContext, range: Interval) -> Result<Seed> {
        let seq = &ctx.seq;
        if range.is_empty() {
            return Err(Error::InvalidParameter(alloc::format!("empty range {range}")));
        }
        let chain = Chain::canonical(range);
        let boxes = chain.boxes(seq)?;
        let labels = boxes.iter().map(|&b| Label::of_box(seq, b)).collect::<Result<Vec<_>>>()?;
        let points = boxes.iter().map(|b| seq.entry(b.a())).collect::<Result<Vec<_>>>()?;
        let n = boxes.len();
        let root = seq.root();
        let arrows = |(i, t): (Node, i64), (j, s): (Node, i64)| -> i64 {
            i64::from(root.adjacent(i, j) && s - t == 1) + i64::from(i == j && t - s == 2)
        };
        let mut quiver = IntMatrix::zeros(n, n);
        for v in 0..n {
            for w in 0..n {
                quiver[(v, w)] = arrows(points[v], points[w]) - arrows(points[w], points[v]);
            }
        }
        let frozen = boxes
            .iter()
            .map(|b| {
                let i = b.color().expect("chain boxes are nonempty");
                seq.positions_of(i).iter().find(|&&k| range.contains(k)) == Some(&b.a())
            })
            .collect();
        let lambda = lambda_for(ctx, &labels)?;
        Ok(Seed { chain: Some(chain), range, labels, quiver, frozen, lambda, cluster_vars: None })
    }

    /// The canonical seed of `chain.range()` transported along box moves to
    /// `chain`.
    pub fn for_chain(ctx: &SeedContext, target: &Chain) -> Result<Seed> {
        let range = target.range();
        let mut seed = Seed::canonical(ctx, range)?;
        let start = Chain::canonical(range);
        let path =
            if range.len() <= BFS_LIMIT { chain::connect(&start, target)? } else { chain::route(&start, target)? };
        let mut cur = start;
        for (step, &s) in path.iter().enumerate() {
            seed = seed.transport(ctx, &cur, s).map_err(|e| match e {
                Error::TransportMismatch(_) => Error::TransportMismatch(step),
                other => other,
            })?;
            cur = cur.box_move(s)?;
        }
        Ok(seed)
    }

    /// Applies the box move `B_s` of `chain` (the chain this seed belongs
    /// to) to the seed.
    pub fn transport(&self, ctx: &SeedContext, chain: &Chain, s: usize) -> Result<Seed> {
        let seq = &ctx.seq;
        let next = chain.box_move(s)?;
        let new_boxes = next.boxes(seq)?;
        let mut seed = match chain.classify_move(seq, s)? {
            MoveKind::Permutation(perm) => self.permuted(&perm),
            MoveKind::Mutation => self.mutate(ctx, s - 1)?,
        };
        let perm = new_boxes
            .iter()
            .map(|b| seed.labels.iter().position(|l| l.ibox.as_ref() == Some(b)))
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::TransportMismatch(s))?;
        seed = seed.permuted(&perm);
        seed.chain = Some(next);
        Ok(seed)
    }

    /// The chain whose boxes label this seed, when it came from one.
    pub fn chain(&self) -> Option<&Chain> {
        self.chain.as_ref()
    }

    pub fn range(&self) -> Interval {
        self.range
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    /// The skew-symmetric matrix on all vertices, frozen ones included.
    pub fn quiver(&self) -> &IntMatrix {
        &self.quiver
    }

    pub fn frozen(&self) -> &[bool] {
        &self.frozen
    }

    pub fn is_frozen(&self, k: usize) -> bool {
        self.frozen.get(k).copied().unwrap_or(false)
    }

    /// `K_ex` in vertex order.
    pub fn exchangeable(&self) -> Vec<usize> {
        (0..self.len()).filter(|&k| !self.frozen[k]).collect()
    }

    /// `B̃`: rows `K`, columns `K_ex`.
    pub fn b_tilde(&self) -> IntMatrix {
        let rows: Vec<usize> = (0..self.len()).collect();
        self.quiver.select(&rows, &self.exchangeable())
    }

    pub fn lambda(&self) -> &LambdaMatrix {
        &self.lambda
    }

    /// Replaces the Λ-matrix, e.g. with an externally supplied table.
    pub fn with_lambda(mut self, entries: IntMatrix) -> Result<Seed> {
        if entries.rows() != self.len() || entries.cols() != self.len() {
            return Err(Error::InvalidParameter(alloc::format!(
                "Λ table is {}×{}, seed has {} vertices",
                entries.rows(),
                entries.cols(),
                self.len()
            )));
        }
        self.lambda.entries = entries;
        Ok(self)
    }

    pub fn vertex(&self, k: usize, seq: &AdmissibleSeq) -> Option<Vertex> {
        let b = self.labels.get(k)?.ibox?;
        let (color, t) = seq.entry(b.a()).ok()?;
        Some(Vertex { pos: b.a(), color, t })
    }

    pub fn cluster_vars(&self) -> Option<&[Laurent]> {
        self.cluster_vars.as_deref()
    }

    /// Attaches the initial variables `x_k`.
    pub fn with_initial_variables(mut self) -> Seed {
        let n = self.len();
        self.cluster_vars = Some((0..n).map(|k| Laurent::var(n, k)).collect());
        self
    }

    /// Same quiver, labels, frozen set, Λ-matrix and cluster variables.
    pub fn same_data(&self, other: &Seed) -> bool {
        self.labels == other.labels
            && self.quiver == other.quiver
            && self.frozen == other.frozen
            && self.lambda == other.lambda
            && self.cluster_vars == other.cluster_vars
    }

    /// Reorders vertices so that the new `k`-th vertex is the old `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> Seed {
        Seed {
            chain: self.chain.clone(),
            range: self.range,
            labels: perm.iter().map(|&k| self.labels[k].clone()).collect(),
            quiver: self.quiver.select(perm, perm),
            frozen: perm.iter().map(|&k| self.frozen[k]).collect(),
            lambda: self.lambda.permuted(perm),
            cluster_vars: self.cluster_vars.as_ref().map(|v| perm.iter().map(|&k| v[k].clone()).collect()),
        }
    }

    fn check_exchangeable(&self, k: usize) -> Result<()> {
        if k >= self.len() {
            return Err(Error::VertexIndex(k));
        }
        if self.frozen[k] {
            return Err(Error::Frozen(k));
        }
        Ok(())
    }

    /// The two exchange monomials at `k` as exponent lists over vertices.
    pub fn exchange_monomials(&self, k: usize) -> Result<(Vec<i64>, Vec<i64>)> {
        self.check_exchangeable(k)?;
        let col = (0..self.len()).map(|i| self.quiver[(i, k)]);
        Ok((col.clone().map(|b| b.max(0)).collect(), col.map(|b| (-b).max(0)).collect()))
    }

    /// Mutation at vertex `k`.
    pub fn mutate(&self, ctx: &SeedContext, k: usize) -> Result<Seed> {
        self.check_exchangeable(k)?;
        let (pos, neg) = self.exchange_monomials(k)?;
        let product = |exps: &[i64]| {
            YMonomial::from_factors(exps.iter().enumerate().flat_map(|(v, &e)| {
                self.labels[v].highest.factors().iter().map(move |&(i, t, f)| (i, t, f * e as i32))
            }))
        };
        let inv = self.labels[k].highest.inverse();
        let (up, down) = (product(&pos).mul(&inv), product(&neg).mul(&inv));
        let lower = |hi: &YMonomial, lo: &YMonomial| {
            lo.mul(&hi.inverse())
                .a_exponents(ctx.seq.root())
                .is_some_and(|v| !v.is_empty() && v.values().all(|&x| x >= 0))
        };
        let highest = if lower(&up, &down) {
            up
        } else if lower(&down, &up) {
            down
        } else {
            return Err(Error::InvalidParameter(alloc::format!("exchange monomials at vertex {k} are not comparable")));
        };
        let mut labels = self.labels.clone();
        labels[k] = Label::of_monomial(&ctx.seq, highest);
        let cluster_vars = match &self.cluster_vars {
            Some(vars) => Some(exchange(vars, &pos, &neg, k, crate::laurent::TERM_CAP)?),
            None => None,
        };
        Ok(Seed {
            chain: None,
            range: self.range,
            lambda: lambda_for(ctx, &labels)?,
            labels,
            quiver: mutate_matrix(&self.quiver, k),
            frozen: self.frozen.clone(),
            cluster_vars,
        })
    }

    /// Evaluates `(ΛB̃)_{jk} = -2δ_{jk}` for `j ∈ K`, `k ∈ K_ex`.
    pub fn check_lambda_admissible(&self) -> AdmissibilityCheck {
        let n = self.len();
        for k in self.exchangeable() {
            for j in 0..n {
                let v: i64 = (0..n).map(|l| self.lambda.entries[(j, l)] * self.quiver[(l, k)]).sum();
                let want = if j == k { -2 } else { 0 };
                if v != want {
                    return AdmissibilityCheck { witness: Some((j, k, v)) };
                }
            }
        }
        AdmissibilityCheck { witness: None }
    }

    /// Cluster variables after mutating along `word`, as Laurent
    /// polynomials in the initial variables of this seed.
    pub fn laurent_expand(&self, word: &[usize], cap: usize) -> Result<Vec<Laurent>> {
        if word.len() > MAX_WORD {
            return Err(Error::WordTooLong(word.len(), MAX_WORD));
        }
        let n = self.len();
        let mut vars: Vec<Laurent> = (0..n).map(|k| Laurent::var(n, k)).collect();
        let mut quiver = self.quiver.clone();
        for &k in word {
            self.check_exchangeable(k)?;
            let col = (0..n).map(|i| quiver[(i, k)]);
            let pos: Vec<i64> = col.clone().map(|b| b.max(0)).collect();
            let neg: Vec<i64> = col.map(|b| (-b).max(0)).collect();
            vars = exchange(&vars, &pos, &neg, k, cap)?;
            quiver = mutate_matrix(&quiver, k);
        }
        Ok(vars)
    }
}

fn lambda_for(ctx: &SeedContext, labels: &[Label]) -> Result<LambdaMatrix> {
    let modules: Vec<_> = labels.iter().map(|l| (l.highest.clone(), l.ibox)).collect();
    invariants::lambda_matrix_of(&ctx.series, &ctx.seq, &modules)
}

/// `b'_ij = -b_ij` if `k ∈ {i, j}`, else `b_ij + (|b_ik| b_kj + b_ik |b_kj|) / 2`.
pub fn mutate_matrix(b: &IntMatrix, k: usize) -> IntMatrix {
    let mut out = b.clone();
    for i in 0..b.rows() {
        for j in 0..b.cols() {
            out[(i, j)] = if i == k || j == k {
                -b[(i, j)]
            } else {
                b[(i, j)] + (b[(i, k)].abs() * b[(k, j)] + b[(i, k)] * b[(k, j)].abs()) / 2
            };
        }
    }
    out
}

/// `x_k' = (∏ x_i^{pos_i} + ∏ x_i^{neg_i}) / x_k`.
fn exchange(vars: &[Laurent], pos: &[i64], neg: &[i64], k: usize, cap: usize) -> Result<Vec<Laurent>> {
    let nvars = vars[0].nvars();
    let product = |exps: &[i64]| -> Result<Laurent> {
        let mut acc = Laurent::one(nvars);
        for (v, &e) in exps.iter().enumerate() {
            if e > 0 {
                acc = acc.mul(&vars[v].pow(e as u32, cap)?, cap)?;
            }
        }
        Ok(acc)
    };
    let numerator = product(pos)?.add(&product(neg)?)?;
    let mut out = vars.to_vec();
    out[k] = numerator.exact_div(&vars[k], cap)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adm_seq::Orientation;
    use crate::chain::Step::{L, R};
    use crate::laurent::TERM_CAP;
    use crate::{RootData, TypeLabel};

    fn ctx(label: &str) -> SeedContext {
        let r = RootData::new(label.parse::<TypeLabel>().unwrap());
        let o = if label == "A2" { Orientation::new(&r, &[(1, 2)]).unwrap() } else { Orientation::bipartite(&r) };
        SeedContext::new(AdmissibleSeq::from_quiver(&r, &o).unwrap())
    }

    #[test]
    fn a2_canonical() {
        let c = ctx("A2");
        let s = Seed::canonical(&c, Interval::new(-3, 0)).unwrap();
        let boxes: Vec<String> = s.labels().iter().map(|l| l.ibox.unwrap().to_string()).collect();
        assert_eq!(boxes, ["[0,0]", "[-1,-1]", "[-2,0]", "[-3,-1]"]);
        assert_eq!(s.frozen(), [false, false, true, true]);
        assert_eq!(s.b_tilde().to_rows(), vec![vec![0, -1], vec![1, 0], vec![-1, 1], vec![0, -1]]);
        assert!(s.quiver().is_skew_symmetric());
        assert!(s.check_lambda_admissible().holds());
        assert_eq!(s.vertex(1, c.seq()), Some(Vertex { pos: -1, color: 2, t: -1 }));
    }

    #[test]
    fn small_ranges() {
        let c = ctx("A2");
        let s = Seed::canonical(&c, Interval::new(0, 0)).unwrap();
        assert_eq!(s.frozen(), [true]);
        assert_eq!(s.b_tilde().cols(), 0);
        let c1 = ctx("A1");
        let s = Seed::canonical(&c1, Interval::new(-2, 0)).unwrap();
        assert_eq!(s.frozen(), [false, false, true]);
        assert_eq!(s.b_tilde().to_rows(), vec![vec![0, 1], vec![-1, 0], vec![0, -1]]);
        assert!(s.check_lambda_admissible().holds());
    }

    #[test]
    fn frozen_labels_are_maximal_boxes() {
        for label in ["A1", "A2", "A3", "D4"] {
            let c = ctx(label);
            let r = c.seq().root().clone();
            let range = Interval::new(1 - 2 * r.longest_len() as i64, 0);
            let s = Seed::canonical(&c, range).unwrap();
            let mut frozen: Vec<IBox> =
                (0..s.len()).filter(|&k| s.is_frozen(k)).map(|k| s.labels()[k].ibox.unwrap()).collect();
            let mut maximal: Vec<IBox> = r
                .nodes()
                .map(|i| {
                    let ps: Vec<i64> = c.seq().positions_of(i).iter().copied().filter(|&k| range.contains(k)).collect();
                    IBox::new(c.seq(), ps[0], *ps.last().unwrap()).unwrap()
                })
                .collect();
            frozen.sort();
            maximal.sort();
            assert_eq!(frozen, maximal, "{label}");
        }
    }

    #[test]
    fn mutation_is_an_involution() {
        let c = ctx("A3");
        let s = Seed::canonical(&c, Interval::new(-8, 0)).unwrap().with_initial_variables();
        for k in s.exchangeable() {
            let m = s.mutate(&c, k).unwrap();
            assert!(m.check_lambda_admissible().holds(), "vertex {k}");
            assert!(m.mutate(&c, k).unwrap().same_data(&s), "vertex {k}");
        }
        let frozen = (0..s.len()).find(|&k| s.is_frozen(k)).unwrap();
        assert_eq!(s.mutate(&c, frozen), Err(Error::Frozen(frozen)));
        assert_eq!(s.mutate(&c, 99), Err(Error::VertexIndex(99)));
    }

    #[test]
    fn exchange_relations_hold_for_characters() {
        use crate::qchar::{QCharEngine, YPolynomial};
        for (label, range) in [("A1", Interval::new(-3, 0)), ("A2", Interval::new(-5, 0)), ("A3", Interval::new(-7, 0))] {
            let c = ctx(label);
            let s = Seed::canonical(&c, range).unwrap();
            let mut engine = QCharEngine::new(c.seq().root(), crate::qchar::TERM_CAP);
            let mut chi = |m: &YMonomial| engine.character(m).unwrap().to_polynomial();
            for k in s.exchangeable() {
                let (pos, neg) = s.exchange_monomials(k).unwrap();
                assert!(pos.iter().zip(&neg).all(|(p, n)| p * n == 0));
                let side = |exps: &[i64], chi: &mut dyn FnMut(&YMonomial) -> YPolynomial| {
                    exps.iter().enumerate().fold(YPolynomial::one(), |acc, (v, &e)| {
                        (0..e).fold(acc, |a, _| a.mul(&chi(&s.labels()[v].highest), TERM_CAP).unwrap())
                    })
                };
                let m = s.mutate(&c, k).unwrap();
                let lhs = chi(&s.labels()[k].highest).mul(&chi(&m.labels()[k].highest), TERM_CAP).unwrap();
                let rhs = side(&pos, &mut chi).add(&side(&neg, &mut chi)).unwrap();
                assert_eq!(lhs, rhs, "{label} vertex {k}");
            }
        }
    }

    #[test]
    fn a2_singleton_exchange() {
        let c = ctx("A2");
        let s = Seed::canonical(&c, Interval::new(-3, 0)).unwrap();
        let m = s.mutate(&c, 1).unwrap();
        assert_eq!(m.labels()[1].highest.to_string(), "Y[1,0] Y[2,-3]");
        assert_eq!(m.labels()[1].ibox, None);
        assert_eq!(m.chain(), None);
    }

    #[test]
    fn broken_b_matrix_fails_admissibility() {
        let c = ctx("A2");
        let mut s = Seed::canonical(&c, Interval::new(-3, 0)).unwrap();
        s.quiver[(0, 1)] = -s.quiver[(0, 1)];
        let check = s.check_lambda_admissible();
        assert!(!check.holds());
        assert!(check.witness.is_some());
    }

    #[test]
    fn transport() {
        let c = ctx("A2");
        let range = Interval::new(-3, 0);
        let canonical = Seed::canonical(&c, range).unwrap();
        let same = Seed::for_chain(&c, &Chain::canonical(range)).unwrap();
        assert_eq!(same, canonical);
        let target = Chain::new(-1, vec![R, L, L]);
        let s = Seed::for_chain(&c, &target).unwrap();
        let mut got: Vec<IBox> = s.labels().iter().map(|l| l.ibox.unwrap()).collect();
        let mut want = canonical.labels().iter().map(|l| l.ibox.unwrap()).collect::<Vec<_>>();
        assert_eq!(got, target.boxes(c.seq()).unwrap());
        got.sort();
        want.sort();
        assert_eq!(got, want);
        for chain in chain::enumerate_chains(range).unwrap() {
            let s = Seed::for_chain(&c, &chain).unwrap();
            let labels: Vec<IBox> = s.labels().iter().map(|l| l.ibox.unwrap()).collect();
            assert_eq!(labels, chain.boxes(c.seq()).unwrap());
            assert!(s.check_lambda_admissible().holds(), "{chain}");
        }
    }

    #[test]
    fn laurent_expansion() {
        let c = ctx("A2");
        let s = Seed::canonical(&c, Interval::new(-3, 0)).unwrap();
        let n = s.len();
        let initial: Vec<Laurent> = (0..n).map(|k| Laurent::var(n, k)).collect();
        assert_eq!(s.laurent_expand(&[], TERM_CAP).unwrap(), initial);
        assert_eq!(s.laurent_expand(&[0, 0], TERM_CAP).unwrap(), initial);
        let vars = s.laurent_expand(&[0, 1, 0, 1], TERM_CAP).unwrap();
        assert!(vars.iter().all(Laurent::is_positive));
        assert_eq!(s.laurent_expand(&[0; 9], TERM_CAP), Err(Error::WordTooLong(9, 8)));
        assert_eq!(s.laurent_expand(&[2], TERM_CAP), Err(Error::Frozen(2)));
        let tracked = s.clone().with_initial_variables().mutate(&c, 0).unwrap().mutate(&c, 1).unwrap();
        assert_eq!(tracked.cluster_vars().unwrap(), s.laurent_expand(&[0, 1], TERM_CAP).unwrap());
    }
}
