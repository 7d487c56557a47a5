//! i-boxes `[a, b]` (intervals with `i_a = i_b`), the Kirillov–Reshetikhin
//! data they label, the bracket operators and T-system triples.

use alloc::vec::Vec;
use core::fmt;

use crate::adm_seq::{AdmissibleSeq, Interval};
use crate::cartan::Node;
use crate::{Error, Result};

/// An i-box of a fixed admissible sequence. `a = b + 1` is the unit box.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IBox {
    a: i64,
    b: i64,
    color: Option<Node>,
}

impl IBox {
    pub fn new(seq: &AdmissibleSeq, a: i64, b: i64) -> Result<Self> {
        if a > b + 1 {
            return Err(Error::InvalidParameter(alloc::format!("[{a},{b}] has a > b + 1")));
        }
        if a == b + 1 {
            return Ok(Self::unit(a));
        }
        let (left, right) = (seq.color(a)?, seq.color(b)?);
        if left != right {
            return Err(Error::ColorMismatch { a, b, left, right });
        }
        Ok(Self { a, b, color: Some(left) })
    }

    /// The unit box `[p, p-1]`.
    pub fn unit(p: i64) -> Self {
        Self { a: p, b: p - 1, color: None }
    }

    /// `[lo, hi]`, or the unit box at `lo` when `lo > hi`.
    fn span(seq: &AdmissibleSeq, lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            Ok(Self::unit(lo))
        } else {
            Self::new(seq, lo, hi)
        }
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn color(&self) -> Option<Node> {
        self.color
    }

    pub fn is_unit(&self) -> bool {
        self.color.is_none()
    }

    pub fn interval(&self) -> Interval {
        Interval::new(self.a, self.b)
    }

    /// Color and heights of the KR module `M[a, b]`: the heights `t_k` for
    /// `a ≤ k ≤ b` with `i_k = i_a`.
    pub fn kr_descriptor(&self, seq: &AdmissibleSeq) -> Result<KRDescriptor> {
        let color = self.color.ok_or(Error::UnitBox)?;
        let heights = seq
            .positions_of(color)
            .iter()
            .filter(|&&k| self.a <= k && k <= self.b)
            .map(|&k| seq.height(k))
            .collect::<Result<Vec<_>>>()?;
        Ok(KRDescriptor { color, count: heights.len(), heights })
    }
}

impl fmt::Display for IBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            write!(f, "empty")
        } else {
            write!(f, "[{},{}]", self.a, self.b)
        }
    }
}

/// The KR module `M[a, b]`: `count` consecutive heights at one node.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KRDescriptor {
    pub color: Node,
    pub count: usize,
    pub heights: Vec<i64>,
}

impl KRDescriptor {
    /// A single fundamental module `V(ϖ_i)` at height `t`.
    pub fn fundamental(color: Node, t: i64) -> Self {
        Self { color, count: 1, heights: alloc::vec![t] }
    }
}

/// `[a, b} = [a, b(i_a)⁻]`. An empty input gives the unit box at `a`.
pub fn shrink_right(seq: &AdmissibleSeq, c: Interval) -> Result<IBox> {
    if c.is_empty() {
        return Ok(IBox::unit(c.lo));
    }
    let i = seq.color(c.lo)?;
    IBox::span(seq, c.lo, seq.pred_color(c.hi, i)?)
}

/// `{a, b] = [a(i_b)⁺, b]`. An empty input gives the unit box at `a`.
pub fn shrink_left(seq: &AdmissibleSeq, c: Interval) -> Result<IBox> {
    if c.is_empty() {
        return Ok(IBox::unit(c.lo));
    }
    let i = seq.color(c.hi)?;
    IBox::span(seq, seq.succ_color(c.lo, i)?, c.hi)
}

/// `L(c) = [a-1, b}`.
pub fn grow_left(seq: &AdmissibleSeq, c: Interval) -> Result<IBox> {
    shrink_right(seq, Interval::new(c.lo - 1, c.hi.max(c.lo - 1)))
}

/// `R(c) = {a, b+1]`.
pub fn grow_right(seq: &AdmissibleSeq, c: Interval) -> Result<IBox> {
    shrink_left(seq, Interval::new(c.lo.min(c.hi + 1), c.hi + 1))
}

/// Sufficient condition for `M[a,b]` and `M[c,d]` to commute:
/// `a⁻ < c ≤ d < b⁺` or `c⁻ < a ≤ b < d⁺`.
///
/// This is not a decision procedure; a `false` says nothing.
pub fn commutes_sufficient(seq: &AdmissibleSeq, x: &IBox, y: &IBox) -> Result<bool> {
    if x.is_unit() || y.is_unit() {
        return Err(Error::UnitBox);
    }
    let nested = |p: &IBox, q: &IBox| -> Result<bool> {
        Ok(seq.pred(p.a)? < q.a && q.a <= q.b && q.b < seq.succ(p.b)?)
    };
    Ok(nested(x, y)? || nested(y, x)?)
}

/// The factors of the T-system of a box `[a, b]` with `a < b`:
///
/// `0 → ⊗_j M[a(j)⁺, b(j)⁻] → M[a⁺, b] ⊗ M[a, b⁻] → M[a, b] ⊗ M[a⁺, b⁻] → 0`
///
/// with `j` running over the neighbors of `i_a`. Unit factors are kept in the
/// lists and contribute the trivial module to products.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TSystem {
    pub target: IBox,
    pub socle: Vec<IBox>,
    pub middle: (IBox, IBox),
    pub head: (IBox, IBox),
}

impl TSystem {
    /// Socle factors other than unit boxes.
    pub fn socle_factors(&self) -> impl Iterator<Item = &IBox> {
        self.socle.iter().filter(|b| !b.is_unit())
    }
}

pub fn t_system(seq: &AdmissibleSeq, target: &IBox) -> Result<TSystem> {
    let i = target.color.ok_or(Error::UnitBox)?;
    let (a, b) = (target.a, target.b);
    if a == b {
        return Err(Error::SingletonBox(a, b));
    }
    let (a_next, b_prev) = (seq.succ(a)?, seq.pred(b)?);
    let socle = seq
        .root()
        .neighbors(i)
        .map(|j| IBox::span(seq, seq.succ_color(a, j)?, seq.pred_color(b, j)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(TSystem {
        target: *target,
        socle,
        middle: (IBox::new(seq, a_next, b)?, IBox::new(seq, a, b_prev)?),
        head: (*target, IBox::span(seq, a_next, b_prev)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adm_seq::Orientation;
    use crate::{RootData, TypeLabel};

    fn seq(label: &str) -> AdmissibleSeq {
        let r = RootData::new(label.parse::<TypeLabel>().unwrap());
        AdmissibleSeq::from_quiver(&r, &Orientation::bipartite(&r)).unwrap()
    }

    fn a2() -> AdmissibleSeq {
        let r = RootData::new("A2".parse().unwrap());
        AdmissibleSeq::from_quiver(&r, &Orientation::new(&r, &[(1, 2)]).unwrap()).unwrap()
    }

    fn bx(s: &AdmissibleSeq, a: i64, b: i64) -> IBox {
        IBox::new(s, a, b).unwrap()
    }

    #[test]
    fn make_boxes() {
        let s = a2();
        assert_eq!(bx(&s, 0, 2).color(), Some(1));
        assert_eq!(bx(&s, 0, 0).interval().len(), 1);
        assert_eq!(IBox::new(&s, 0, 1), Err(Error::ColorMismatch { a: 0, b: 1, left: 1, right: 2 }));
        assert!(bx(&s, 3, 2).is_unit());
        assert!(IBox::new(&s, 4, 2).is_err());
    }

    #[test]
    fn descriptors() {
        let s = a2();
        let d = bx(&s, 0, 2).kr_descriptor(&s).unwrap();
        assert_eq!((d.color, d.count, d.heights), (1, 2, vec![0, 2]));
        let d = bx(&s, 0, 0).kr_descriptor(&s).unwrap();
        assert_eq!((d.color, d.count, d.heights), (1, 1, vec![0]));
        let d = bx(&s, -3, -1).kr_descriptor(&s).unwrap();
        assert_eq!((d.color, d.count, d.heights), (2, 2, vec![-3, -1]));
        assert_eq!(IBox::unit(0).kr_descriptor(&s), Err(Error::UnitBox));
    }

    #[test]
    fn brackets() {
        let s = a2();
        assert_eq!(shrink_right(&s, Interval::new(-1, 0)).unwrap(), bx(&s, -1, -1));
        assert_eq!(shrink_right(&s, Interval::new(0, 2)).unwrap(), bx(&s, 0, 2));
        assert_eq!(shrink_left(&s, Interval::new(-1, 0)).unwrap(), bx(&s, 0, 0));
        assert_eq!(grow_left(&s, Interval::new(0, 0)).unwrap(), bx(&s, -1, -1));
        assert_eq!(grow_right(&s, Interval::new(-1, -1)).unwrap(), bx(&s, 0, 0));
        // unit box at p: L gives the singleton at p-1, R the singleton at p
        assert_eq!(grow_left(&s, Interval::new(5, 4)).unwrap(), bx(&s, 4, 4));
        assert_eq!(grow_right(&s, Interval::new(5, 4)).unwrap(), bx(&s, 5, 5));
        assert!(shrink_right(&s, Interval::new(3, 2)).unwrap().is_unit());
    }

    #[test]
    fn sufficient_commutation() {
        let s = a2();
        assert!(commutes_sufficient(&s, &bx(&s, -2, 0), &bx(&s, -1, -1)).unwrap());
        let c = bx(&s, -2, 0);
        assert!(commutes_sufficient(&s, &c, &c).unwrap());
        assert!(!commutes_sufficient(&s, &bx(&s, 0, 0), &bx(&s, 2, 2)).unwrap());
        assert_eq!(commutes_sufficient(&s, &IBox::unit(0), &c), Err(Error::UnitBox));
    }

    #[test]
    fn t_system_triples() {
        let s = a2();
        let t = t_system(&s, &bx(&s, 0, 2)).unwrap();
        assert_eq!(t.socle, vec![bx(&s, 1, 1)]);
        assert_eq!(t.middle, (bx(&s, 2, 2), bx(&s, 0, 0)));
        assert_eq!(t.head.0, bx(&s, 0, 2));
        assert!(t.head.1.is_unit());

        let t = t_system(&s, &bx(&s, -2, 0)).unwrap();
        assert_eq!(t.socle, vec![bx(&s, -1, -1)]);
        assert_eq!(t.middle, (bx(&s, 0, 0), bx(&s, -2, -2)));
        assert!(t.head.1.is_unit());

        let a1 = seq("A1");
        let t = t_system(&a1, &bx(&a1, 0, 1)).unwrap();
        assert!(t.socle.is_empty());
        assert_eq!(t.middle, (bx(&a1, 1, 1), bx(&a1, 0, 0)));
        assert!(t.head.1.is_unit());

        assert_eq!(t_system(&s, &bx(&s, 0, 0)), Err(Error::SingletonBox(0, 0)));
    }

    #[test]
    fn descriptor_heights_step_two() {
        for label in ["A3", "D4", "E6"] {
            let s = seq(label);
            for a in -20..20 {
                for b in a..a + 20 {
                    let Ok(c) = IBox::new(&s, a, b) else { continue };
                    let d = c.kr_descriptor(&s).unwrap();
                    assert_eq!(d.heights.len(), d.count);
                    assert!(d.heights.windows(2).all(|w| w[1] == w[0] + 2));
                }
            }
        }
    }

    #[test]
    fn grow_operators_on_envelopes() {
        let s = seq("A3");
        for a in -10..10 {
            for b in a..a + 8 {
                let c = Interval::new(a, b);
                let l = grow_left(&s, c).unwrap();
                let r = grow_right(&s, c).unwrap();
                assert_eq!(l, shrink_right(&s, Interval::new(a - 1, b)).unwrap());
                assert_eq!(r, shrink_left(&s, Interval::new(a, b + 1)).unwrap());
                // the new box contains the added letter and stays in the grown envelope
                assert_eq!((l.a(), r.b()), (a - 1, b + 1));
                assert!(Interval::new(a - 1, b).contains_interval(&l.interval()));
                assert!(Interval::new(a, b + 1).contains_interval(&r.interval()));
                // R after L and L after R reach the same envelope and the same boxes
                let rl = grow_right(&s, Interval::new(a - 1, b)).unwrap();
                let lr = grow_left(&s, Interval::new(a, b + 1)).unwrap();
                assert_eq!(rl.b(), b + 1);
                assert_eq!(lr.a(), a - 1);
            }
        }
    }
}
