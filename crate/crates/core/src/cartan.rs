//! Simply-laced Cartan data and the Weyl group in its reflection
//! representation.
//!
//! Nodes are labelled `1..=rank` in Bourbaki order. Node `1` is the base node
//! used for the parity of heights.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::RangeInclusive;
use core::str::FromStr;

use crate::matrix::IntMatrix;
use crate::{Error, Result};

/// A Dynkin node, `1..=rank`.
pub type Node = usize;

pub const MAX_RANK: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    D,
    E,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeLabel {
    family: Family,
    rank: usize,
}

impl TypeLabel {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
        };
        if rank > MAX_RANK {
            return Err(Error::UnsupportedRank(rank));
        }
        if !ok {
            return Err(Error::UnknownType(alloc::format!("{family:?}{rank}")));
        }
        Ok(Self { family, rank })
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Every supported label, `A1..A8, D4..D8, E6..E8`.
    pub fn all() -> Vec<TypeLabel> {
        let a = (1..=MAX_RANK).map(|n| (Family::A, n));
        let d = (4..=MAX_RANK).map(|n| (Family::D, n));
        let e = (6..=8).map(|n| (Family::E, n));
        a.chain(d).chain(e).map(|(family, rank)| TypeLabel { family, rank }).collect()
    }

    fn edges(self) -> Vec<(Node, Node)> {
        let n = self.rank;
        match self.family {
            Family::A => (1..n).map(|i| (i, i + 1)).collect(),
            Family::D => {
                let mut e: Vec<_> = (1..n - 1).map(|i| (i, i + 1)).collect();
                e.push((n - 2, n));
                e
            }
            Family::E => {
                let mut e = vec![(1, 3), (2, 4), (3, 4)];
                e.extend((4..n).map(|i| (i, i + 1)));
                e
            }
        }
    }

    /// The diagram involution induced by the longest element, from tables.
    pub fn tabulated_star(self, i: Node) -> Node {
        let n = self.rank;
        match (self.family, n) {
            (Family::A, _) => n + 1 - i,
            (Family::D, _) if n % 2 == 1 && i >= n - 1 => 2 * n - 1 - i,
            (Family::E, 6) => match i {
                1 => 6,
                6 => 1,
                3 => 5,
                5 => 3,
                _ => i,
            },
            _ => i,
        }
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for TypeLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let unknown = || Error::UnknownType(s.to_string());
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('D') => Family::D,
            Some('E') => Family::E,
            _ => return Err(unknown()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| unknown())?;
        Self::new(family, rank)
    }
}

/// Cartan matrix, graph distances, positive roots and the longest element of
/// a simply-laced finite type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootData {
    label: TypeLabel,
    cartan: IntMatrix,
    dist: IntMatrix,
    coxeter_h: usize,
    longest_len: usize,
    star: Vec<Node>,
    positive_roots: Vec<Vec<i64>>,
    w0: IntMatrix,
}

impl RootData {
    pub fn new(label: TypeLabel) -> Self {
        let n = label.rank();
        let mut cartan = IntMatrix::identity(n);
        for r in 0..n {
            cartan[(r, r)] = 2;
        }
        for (i, j) in label.edges() {
            cartan[(i - 1, j - 1)] = -1;
            cartan[(j - 1, i - 1)] = -1;
        }
        let dist = graph_distances(&cartan);
        let positive_roots = enumerate_positive_roots(&cartan);
        let longest_len = positive_roots.len();
        let highest = positive_roots.iter().map(|r| r.iter().sum::<i64>()).max().unwrap_or(0);
        let coxeter_h = highest as usize + 1;

        let mut data = Self {
            label,
            cartan,
            dist,
            coxeter_h,
            longest_len,
            star: Vec::new(),
            positive_roots,
            w0: IntMatrix::identity(n),
        };
        let word = data.greedy_longest_word();
        data.w0 = data.weyl_matrix_unchecked(&word);
        // w0(α_i) = -α_{i*}
        data.star = (0..n)
            .map(|i| {
                let image: Vec<i64> = (0..n).map(|r| data.w0[(r, i)]).collect();
                let j = image.iter().position(|&x| x != 0).expect("w0 is invertible");
                debug_assert_eq!(image[j], -1);
                j + 1
            })
            .collect();
        data
    }

    pub fn label(&self) -> TypeLabel {
        self.label
    }

    pub fn rank(&self) -> usize {
        self.label.rank()
    }

    pub fn nodes(&self) -> RangeInclusive<Node> {
        1..=self.rank()
    }

    pub fn contains(&self, i: Node) -> bool {
        (1..=self.rank()).contains(&i)
    }

    pub fn check_node(&self, i: Node) -> Result<()> {
        if self.contains(i) {
            Ok(())
        } else {
            Err(Error::InvalidNode(i))
        }
    }

    pub fn base_node(&self) -> Node {
        1
    }

    pub fn cartan(&self) -> &IntMatrix {
        &self.cartan
    }

    pub fn a(&self, i: Node, j: Node) -> i64 {
        self.cartan[(i - 1, j - 1)]
    }

    /// Graph distance in the Dynkin diagram.
    pub fn dist(&self, i: Node, j: Node) -> i64 {
        self.dist[(i - 1, j - 1)]
    }

    pub fn adjacent(&self, i: Node, j: Node) -> bool {
        self.a(i, j) == -1
    }

    pub fn neighbors(&self, i: Node) -> impl Iterator<Item = Node> + '_ {
        self.nodes().filter(move |&j| self.adjacent(i, j))
    }

    pub fn edges(&self) -> Vec<(Node, Node)> {
        self.label.edges()
    }

    pub fn coxeter_number(&self) -> usize {
        self.coxeter_h
    }

    /// ℓ(w0), which is also the number of positive roots.
    pub fn longest_len(&self) -> usize {
        self.longest_len
    }

    pub fn star(&self, i: Node) -> Node {
        self.star[i - 1]
    }

    /// Parity class of a node: heights at node `i` are `≡ d(1, i) mod 2`.
    pub fn parity(&self, i: Node) -> i64 {
        self.dist(self.base_node(), i).rem_euclid(2)
    }

    /// Positive roots in simple-root coordinates.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn longest_element(&self) -> WeylElement {
        WeylElement { matrix: self.w0.clone() }
    }

    /// Matrix of `s_i` acting on simple-root coordinates.
    pub fn simple_reflection(&self, i: Node) -> Result<WeylElement> {
        self.check_node(i)?;
        Ok(WeylElement { matrix: self.reflection_matrix(i) })
    }

    fn reflection_matrix(&self, i: Node) -> IntMatrix {
        let n = self.rank();
        let mut m = IntMatrix::identity(n);
        for c in 0..n {
            m[(i - 1, c)] -= self.cartan[(i - 1, c)];
        }
        m
    }

    fn weyl_matrix_unchecked(&self, word: &[Node]) -> IntMatrix {
        word.iter()
            .fold(IntMatrix::identity(self.rank()), |acc, &i| &acc * &self.reflection_matrix(i))
    }

    /// `s_{w_1} s_{w_2} ⋯ s_{w_k}` in the reflection representation.
    pub fn weyl_product(&self, word: &[Node]) -> Result<WeylElement> {
        for &i in word {
            self.check_node(i)?;
        }
        Ok(WeylElement { matrix: self.weyl_matrix_unchecked(word) })
    }

    /// True iff `word` has length ℓ and its product sends every positive root
    /// to a negative root.
    pub fn is_longest(&self, word: &[Node]) -> bool {
        if word.len() != self.longest_len || word.iter().any(|&i| !self.contains(i)) {
            return false;
        }
        let w = self.weyl_matrix_unchecked(word);
        self.positive_roots.iter().all(|beta| is_negative(&w.mul_vec(beta)))
    }

    fn greedy_longest_word(&self) -> Vec<Node> {
        let n = self.rank();
        let mut w = IntMatrix::identity(n);
        let mut word = Vec::new();
        loop {
            let ascent = self.nodes().find(|&i| {
                let col: Vec<i64> = (0..n).map(|r| w[(r, i - 1)]).collect();
                is_positive(&col)
            });
            match ascent {
                Some(i) => {
                    w = &w * &self.reflection_matrix(i);
                    word.push(i);
                }
                None => return word,
            }
        }
    }

    /// A reduced word for the longest element.
    pub fn longest_word(&self) -> Vec<Node> {
        self.greedy_longest_word()
    }
}

/// An element of the Weyl group, stored as its reflection-representation
/// matrix on simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    matrix: IntMatrix,
}

impl WeylElement {
    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == IntMatrix::identity(self.matrix.rows())
    }

    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        WeylElement { matrix: &self.matrix * &other.matrix }
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        self.matrix.mul_vec(v)
    }

    /// `wᵀ A w = A`.
    pub fn preserves_form(&self, cartan: &IntMatrix) -> bool {
        &(&self.matrix.transpose() * cartan) * &self.matrix == *cartan
    }
}

pub(crate) fn is_positive(v: &[i64]) -> bool {
    v.iter().all(|&x| x >= 0) && v.iter().any(|&x| x > 0)
}

pub(crate) fn is_negative(v: &[i64]) -> bool {
    v.iter().all(|&x| x <= 0) && v.iter().any(|&x| x < 0)
}

fn graph_distances(cartan: &IntMatrix) -> IntMatrix {
    let n = cartan.rows();
    let mut dist = IntMatrix::zeros(n, n);
    for s in 0..n {
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([(s, 0)]);
        seen[s] = true;
        while let Some((v, d)) = queue.pop_front() {
            dist[(s, v)] = d;
            for w in 0..n {
                if cartan[(v, w)] == -1 && !seen[w] {
                    seen[w] = true;
                    queue.push_back((w, d + 1));
                }
            }
        }
    }
    dist
}

/// Closure of the simple roots under height-increasing simple reflections.
fn enumerate_positive_roots(cartan: &IntMatrix) -> Vec<Vec<i64>> {
    let n = cartan.rows();
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(beta) = queue.pop_front() {
        for i in 0..n {
            let pairing: i64 = (0..n).map(|j| beta[j] * cartan[(j, i)]).sum();
            if pairing >= 0 {
                continue;
            }
            let mut next = beta.clone();
            next[i] -= pairing;
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let mut roots: Vec<_> = seen.into_iter().collect();
    roots.sort_by_key(|r| (r.iter().sum::<i64>(), core::cmp::Reverse(r.clone())));
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn data(s: &str) -> RootData {
        RootData::new(s.parse().unwrap())
    }

    #[test]
    fn small_types() {
        let a2 = data("A2");
        assert_eq!((a2.longest_len(), a2.coxeter_number()), (3, 3));
        assert_eq!((a2.star(1), a2.star(2)), (2, 1));
        let a1 = data("A1");
        assert_eq!((a1.longest_len(), a1.coxeter_number(), a1.star(1)), (1, 2, 1));
        let d4 = data("D4");
        assert_eq!((d4.longest_len(), d4.coxeter_number()), (12, 6));
        assert!(d4.nodes().all(|i| d4.star(i) == i));
    }

    #[test]
    fn label_parsing() {
        assert!("A9".parse::<TypeLabel>().is_err());
        assert!("D3".parse::<TypeLabel>().is_err());
        assert!("E5".parse::<TypeLabel>().is_err());
        assert!("B2".parse::<TypeLabel>().is_err());
        assert_eq!(
            "D9".parse::<TypeLabel>(),
            Err(Error::UnsupportedRank(9)),
            "rank above 8 is rejected"
        );
        for label in TypeLabel::all() {
            assert_eq!(label.to_string().parse::<TypeLabel>().unwrap(), label);
        }
        assert_eq!(TypeLabel::all().len(), 16);
    }

    #[test]
    fn cartan_invariants_all_types() {
        for label in TypeLabel::all() {
            let rd = RootData::new(label);
            let n = rd.rank();
            assert!(rd.cartan().is_symmetric());
            for i in rd.nodes() {
                assert_eq!(rd.a(i, i), 2);
                for j in rd.nodes() {
                    if i != j {
                        assert!(matches!(rd.a(i, j), 0 | -1));
                        assert_eq!(rd.dist(i, j) == 1, rd.a(i, j) == -1);
                    }
                }
            }
            // ADE: number of roots = rank * h
            assert_eq!(2 * rd.longest_len(), n * rd.coxeter_number(), "{label}");
            let fixed = rd.nodes().all(|i| rd.star(i) == i);
            let expect_fixed = match (label.family(), n) {
                (Family::A, 1) | (Family::E, 7) | (Family::E, 8) => true,
                (Family::D, n) => n % 2 == 0,
                _ => false,
            };
            assert_eq!(fixed, expect_fixed, "{label}");
            for i in rd.nodes() {
                assert_eq!(rd.star(rd.star(i)), i);
                assert_eq!(rd.star(i), label.tabulated_star(i), "{label} node {i}");
            }
            assert!(rd.is_longest(&rd.longest_word()));
            assert!(rd.longest_element().preserves_form(rd.cartan()));
        }
    }

    #[test]
    fn reflections() {
        let a2 = data("A2");
        let s1 = a2.weyl_product(&[1]).unwrap();
        assert!(s1.compose(&s1).is_identity());
        assert_eq!(a2.weyl_product(&[1, 2, 1]), a2.weyl_product(&[2, 1, 2]));
        assert!(a2.weyl_product(&[]).unwrap().is_identity());
        assert_eq!(a2.weyl_product(&[3]), Err(Error::InvalidNode(3)));
        assert!(a2.is_longest(&[1, 2, 1]));
        assert!(!a2.is_longest(&[1, 2]));
        assert!(!a2.is_longest(&[1, 1, 2]));
        assert!(data("A1").is_longest(&[1]));
    }
}
