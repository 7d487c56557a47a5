//! The inverse quantum Cartan series and the Λ pairing between
//! fundamental and KR modules.

use alloc::vec::Vec;

use crate::adm_seq::AdmissibleSeq;
use crate::cartan::{Node, RootData};
use crate::ibox::{commutes_sufficient, IBox, KRDescriptor};
use crate::matrix::IntMatrix;
use crate::qchar::YMonomial;
use crate::{Error, Result};

/// Coefficients `c̃_ij(m)`, `1 ≤ m ≤ order`, of the inverse of the quantum
/// Cartan matrix `C(z)` with `C_ii = z + z⁻¹` and `C_ij = -1` on edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanSeries {
    root: RootData,
    order: usize,
    coeffs: Vec<IntMatrix>,
}

impl CartanSeries {
    /// Solves `c̃_ij(m+1) = Σ_{k ~ i} c̃_kj(m) - c̃_ij(m-1)` from `c̃(1) = 1`.
    pub fn new(root: &RootData, order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidParameter("series order must be positive".into()));
        }
        let n = root.rank();
        let mut coeffs = alloc::vec![IntMatrix::identity(n)];
        for m in 1..order {
            let cur = &coeffs[m - 1];
            let mut next = IntMatrix::zeros(n, n);
            for i in root.nodes() {
                for j in root.nodes() {
                    let from_nbrs: i64 = root.neighbors(i).map(|k| cur[(k - 1, j - 1)]).sum();
                    let prev = if m >= 2 { coeffs[m - 2][(i - 1, j - 1)] } else { 0 };
                    next[(i - 1, j - 1)] = from_nbrs - prev;
                }
            }
            coeffs.push(next);
        }
        Ok(Self { root: root.clone(), order, coeffs })
    }

    /// Order `height_spread + 4`, enough for every pair in the window.
    pub fn for_sequence(seq: &AdmissibleSeq) -> Self {
        Self::new(seq.root(), default_order(seq)).expect("positive order")
    }

    pub fn root(&self) -> &RootData {
        &self.root
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `c̃_ij(m)`, zero for `m ≤ 0`.
    pub fn coeff(&self, i: Node, j: Node, m: i64) -> Result<i64> {
        self.root.check_node(i)?;
        self.root.check_node(j)?;
        if m <= 0 {
            return Ok(0);
        }
        let idx = m as usize;
        if idx > self.order {
            return Err(Error::SeriesOrder { have: self.order, need: idx });
        }
        Ok(self.coeffs[idx - 1][(i - 1, j - 1)])
    }

    /// `C(z)·C̃(z) = I` up to order `z^order`.
    pub fn check_inverse(&self) -> bool {
        let n = self.root.rank();
        let at = |m: usize| -> Option<&IntMatrix> { if m == 0 { None } else { self.coeffs.get(m - 1) } };
        (0..self.order).all(|m| {
            (0..n).all(|i| {
                (0..n).all(|j| {
                    let get = |mm: usize, r: usize| at(mm).map_or(0, |c| c[(r, j)]);
                    let mut v = if m >= 1 { get(m - 1, i) } else { 0 } + get(m + 1, i);
                    v -= self.root.neighbors(i + 1).map(|k| get(m, k - 1)).sum::<i64>();
                    v == i64::from(m == 0 && i == j)
                })
            })
        })
    }
}

pub fn invert_quantum_cartan(root: &RootData, order: usize) -> Result<CartanSeries> {
    CartanSeries::new(root, order)
}

pub fn default_order(seq: &AdmissibleSeq) -> usize {
    seq.height_spread() as usize + 4
}

/// Candidate closed forms for Λ between fundamentals, as a signed
/// combination of `c̃_ij` at shifts around `d = p - s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LambdaVariant {
    pub sign: i64,
    pub offset: i64,
    /// Use `c̃(d-δ) - c̃(-d-δ) - c̃(d+δ) + c̃(-d+δ)`; otherwise only the
    /// one-sided `c̃(d-δ) - c̃(d+δ)`.
    pub antisymmetric: bool,
}

impl LambdaVariant {
    /// The variant fixed by calibration against `ΛB̃ = -2I`.
    pub const FROZEN: LambdaVariant = LambdaVariant { sign: 1, offset: 1, antisymmetric: true };

    pub fn all() -> Vec<LambdaVariant> {
        let mut out = Vec::new();
        for antisymmetric in [true, false] {
            for offset in [1, 2] {
                for sign in [1, -1] {
                    out.push(LambdaVariant { sign, offset, antisymmetric });
                }
            }
        }
        out
    }
}

/// `Λ(V(ϖ_i)_{(-q)^p}, V(ϖ_j)_{(-q)^s})`.
pub fn lambda_fundamental(series: &CartanSeries, (i, p): (Node, i64), (j, s): (Node, i64)) -> Result<i64> {
    lambda_fundamental_with(series, LambdaVariant::FROZEN, (i, p), (j, s))
}

pub fn lambda_fundamental_with(
    series: &CartanSeries,
    v: LambdaVariant,
    (i, p): (Node, i64),
    (j, s): (Node, i64),
) -> Result<i64> {
    let d = p - s;
    let need = d.unsigned_abs() as usize + v.offset as usize + 1;
    if need > series.order() {
        return Err(Error::SeriesOrder { have: series.order(), need });
    }
    let c = |m| series.coeff(i, j, m);
    let body = if v.antisymmetric {
        c(d - v.offset)? - c(-d - v.offset)? - c(d + v.offset)? + c(-d + v.offset)?
    } else {
        c(d - v.offset)? - c(d + v.offset)?
    };
    Ok(v.sign * body)
}

/// Bilinear extension of [`lambda_fundamental`] over the factors of two
/// Y-monomials.
pub fn lambda_monomials(series: &CartanSeries, x: &YMonomial, y: &YMonomial) -> Result<i64> {
    lambda_monomials_with(series, LambdaVariant::FROZEN, x, y)
}

pub fn lambda_monomials_with(series: &CartanSeries, v: LambdaVariant, x: &YMonomial, y: &YMonomial) -> Result<i64> {
    let mut total = 0i64;
    for &(i, p, e) in x.factors() {
        for &(j, s, f) in y.factors() {
            let term = lambda_fundamental_with(series, v, (i, p), (j, s))?;
            total = total
                .checked_add(term.checked_mul(i64::from(e) * i64::from(f)).ok_or(Error::Overflow)?)
                .ok_or(Error::Overflow)?;
        }
    }
    Ok(total)
}

pub fn lambda_kr(series: &CartanSeries, d1: &KRDescriptor, d2: &KRDescriptor) -> Result<i64> {
    lambda_monomials(series, &YMonomial::from_descriptor(d1), &YMonomial::from_descriptor(d2))
}

/// `Λ(M_k, M_l)` for the modules of a seed or chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaMatrix {
    pub entries: IntMatrix,
    /// Pairs `(k, l)`, `k < l`, not known to commute by the sufficient
    /// criterion; their entries carry no guarantee.
    pub unverified: Vec<(usize, usize)>,
}

impl LambdaMatrix {
    pub fn len(&self) -> usize {
        self.entries.rows()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.rows() == 0
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.entries.is_skew_symmetric()
    }

    /// Reorders so that the new `k`-th index is the old `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let inverse = invert(perm);
        let mut unverified: Vec<_> = self
            .unverified
            .iter()
            .map(|&(k, l)| {
                let (a, b) = (inverse[k], inverse[l]);
                (a.min(b), a.max(b))
            })
            .collect();
        unverified.sort_unstable();
        Self { entries: self.entries.select(perm, perm), unverified }
    }
}

pub(crate) fn invert(perm: &[usize]) -> Vec<usize> {
    let mut inv = alloc::vec![0; perm.len()];
    for (new, &old) in perm.iter().enumerate() {
        inv[old] = new;
    }
    inv
}

/// All-pairs Λ of a list of modules given by highest monomials, with the
/// boxes (when known) used to flag pairs outside the sufficient criterion.
pub fn lambda_matrix_of(
    series: &CartanSeries,
    seq: &AdmissibleSeq,
    modules: &[(YMonomial, Option<IBox>)],
) -> Result<LambdaMatrix> {
    let n = modules.len();
    let mut entries = IntMatrix::zeros(n, n);
    let mut unverified = Vec::new();
    for k in 0..n {
        for l in k + 1..n {
            let v = lambda_monomials(series, &modules[k].0, &modules[l].0)?;
            entries[(k, l)] = v;
            entries[(l, k)] = -v;
            let verified = match (&modules[k].1, &modules[l].1) {
                (Some(x), Some(y)) if x.is_unit() || y.is_unit() => true,
                (Some(x), Some(y)) => commutes_sufficient(seq, x, y).unwrap_or(false),
                _ => false,
            };
            if !verified {
                unverified.push((k, l));
            }
        }
    }
    Ok(LambdaMatrix { entries, unverified })
}

/// Λ-matrix of the boxes of a chain, in chain order.
pub fn lambda_matrix(series: &CartanSeries, seq: &AdmissibleSeq, chain: &crate::Chain) -> Result<LambdaMatrix> {
    let modules = chain
        .boxes(seq)?
        .into_iter()
        .map(|b| Ok((YMonomial::from_descriptor(&b.kr_descriptor(seq)?), Some(b))))
        .collect::<Result<Vec<_>>>()?;
    lambda_matrix_of(series, seq, &modules)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adm_seq::Orientation;
    use crate::{Interval, TypeLabel};

    fn root(label: &str) -> RootData {
        RootData::new(label.parse::<TypeLabel>().unwrap())
    }

    #[test]
    fn a1_series() {
        let s = CartanSeries::new(&root("A1"), 6).unwrap();
        let got: Vec<i64> = (1..=6).map(|m| s.coeff(1, 1, m).unwrap()).collect();
        assert_eq!(got, vec![1, 0, -1, 0, 1, 0]);
        assert_eq!(s.coeff(1, 1, 0).unwrap(), 0);
        assert_eq!(s.coeff(1, 1, 7), Err(Error::SeriesOrder { have: 6, need: 7 }));
        assert!(CartanSeries::new(&root("A1"), 0).is_err());
    }

    #[test]
    fn series_inverts_in_every_type() {
        for label in TypeLabel::all() {
            let s = CartanSeries::new(&RootData::new(label), 40).unwrap();
            assert!(s.check_inverse(), "{label}");
            for i in s.root().nodes() {
                for j in s.root().nodes() {
                    for m in 1..=40 {
                        assert_eq!(s.coeff(i, j, m), s.coeff(j, i, m));
                    }
                }
            }
        }
    }

    #[test]
    fn bipartite_parity() {
        // c̃_ij(m) vanishes unless m ≡ d(i,j) + 1 mod 2
        let s = CartanSeries::new(&root("A2"), 4).unwrap();
        let row = |i, j| (1..=4).map(|m| s.coeff(i, j, m).unwrap()).collect::<Vec<_>>();
        assert_eq!(row(1, 1), vec![1, 0, 0, 0]);
        assert_eq!(row(1, 2), vec![0, 1, 0, -1]);
    }

    #[test]
    fn fundamental_pairs() {
        let s = CartanSeries::new(&root("A1"), 12).unwrap();
        assert_eq!(lambda_fundamental(&s, (1, 4), (1, 4)).unwrap(), 0);
        assert_eq!(lambda_fundamental(&s, (1, 0), (1, 2)).unwrap(), -2);
        let x = lambda_fundamental(&s, (1, 0), (1, 6)).unwrap();
        assert_eq!(lambda_fundamental(&s, (1, 6), (1, 0)).unwrap(), -x);
        assert_eq!(lambda_fundamental(&s, (1, 2), (1, 8)).unwrap(), x);
        assert!(matches!(lambda_fundamental(&s, (1, 0), (1, 20)), Err(Error::SeriesOrder { .. })));
    }

    #[test]
    fn chain_matrix() {
        let r = root("A2");
        let seq = AdmissibleSeq::from_quiver(&r, &Orientation::new(&r, &[(1, 2)]).unwrap()).unwrap();
        let series = CartanSeries::for_sequence(&seq);
        let one = lambda_matrix(&series, &seq, &crate::Chain::canonical(Interval::new(0, 0))).unwrap();
        assert_eq!(one.entries, IntMatrix::zeros(1, 1));
        let m = lambda_matrix(&series, &seq, &crate::Chain::canonical(Interval::new(-3, 0))).unwrap();
        assert!(m.is_skew_symmetric());
        assert!(m.unverified.is_empty());
        let p = m.permuted(&[3, 2, 1, 0]);
        assert_eq!(p.entries[(0, 1)], m.entries[(3, 2)]);
        let d = KRDescriptor { color: 1, count: 2, heights: vec![-2, 0] };
        assert_eq!(lambda_kr(&series, &d, &d).unwrap(), 0);
    }
}
