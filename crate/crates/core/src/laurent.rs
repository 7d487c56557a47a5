//! Exact multivariate Laurent polynomials with integer coefficients.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Default bound on the number of terms of any intermediate result.
pub const TERM_CAP: usize = 1_000_000;

/// A Laurent polynomial in `x_0, …, x_{n-1}`. Terms are keyed by exponent
/// vectors in lexicographic order; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Laurent {
    nvars: usize,
    terms: BTreeMap<Vec<i32>, i64>,
}

impl Laurent {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(alloc::vec![0; nvars], 1)
    }

    /// The initial variable `x_k`.
    pub fn var(nvars: usize, k: usize) -> Self {
        let mut e = alloc::vec![0; nvars];
        e[k] = 1;
        Self::monomial(e, 1)
    }

    pub fn monomial(exponents: Vec<i32>, coeff: i64) -> Self {
        let nvars = exponents.len();
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exponents, coeff);
        }
        Self { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i32], i64)> {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    pub fn coeff(&self, exponents: &[i32]) -> i64 {
        self.terms.get(exponents).copied().unwrap_or(0)
    }

    /// All coefficients are positive.
    pub fn is_positive(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    /// Exponent vector with the most negative power of each variable.
    pub fn denominator(&self) -> Vec<i32> {
        let mut d = alloc::vec![0; self.nvars];
        for e in self.terms.keys() {
            for (dv, &x) in d.iter_mut().zip(e) {
                *dv = (*dv).min(x);
            }
        }
        d.iter().map(|x| -x).collect()
    }

    fn add_term(&mut self, e: Vec<i32>, c: i64) -> Result<()> {
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                if c != 0 {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let s = o.get().checked_add(c).ok_or(Error::Overflow)?;
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &Laurent) -> Result<Laurent> {
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Laurent) -> Result<Laurent> {
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), c.checked_neg().ok_or(Error::Overflow)?)?;
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Laurent, cap: usize) -> Result<Laurent> {
        let mut out = Laurent::zero(self.nvars);
        for (e1, &c1) in &self.terms {
            for (e2, &c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.checked_mul(c2).ok_or(Error::Overflow)?)?;
                if out.terms.len() > cap {
                    return Err(Error::CapExceeded(cap));
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32, cap: usize) -> Result<Laurent> {
        let mut out = Laurent::one(self.nvars);
        for _ in 0..n {
            out = out.mul(self, cap)?;
        }
        Ok(out)
    }

    /// Exact quotient `self / d`, or [`Error::InexactDivision`].
    ///
    /// Long division on lexicographic leading terms. Every quotient term of
    /// an exact division lies in the box spanned by the coordinate-wise
    /// differences of the extreme exponents, so leaving it means the
    /// division is not exact.
    pub fn exact_div(&self, d: &Laurent, cap: usize) -> Result<Laurent> {
        let (Some((d_lead, &d_coeff)), false) = (d.terms.last_key_value(), d.is_zero()) else {
            return Err(Error::InexactDivision);
        };
        let mut q = Laurent::zero(self.nvars);
        if self.is_zero() {
            return Ok(q);
        }
        let bounds = |p: &Laurent| {
            let mut lo = alloc::vec![i32::MAX; p.nvars];
            let mut hi = alloc::vec![i32::MIN; p.nvars];
            for e in p.terms.keys() {
                for v in 0..p.nvars {
                    lo[v] = lo[v].min(e[v]);
                    hi[v] = hi[v].max(e[v]);
                }
            }
            (lo, hi)
        };
        let (n_lo, n_hi) = bounds(self);
        let (d_lo, d_hi) = bounds(d);
        let lo: Vec<i32> = n_lo.iter().zip(&d_lo).map(|(a, b)| a - b).collect();
        let hi: Vec<i32> = n_hi.iter().zip(&d_hi).map(|(a, b)| a - b).collect();
        let mut r = self.clone();
        while let Some((r_lead, &r_coeff)) = r.terms.last_key_value() {
            if r_coeff % d_coeff != 0 {
                return Err(Error::InexactDivision);
            }
            let e: Vec<i32> = r_lead.iter().zip(d_lead).map(|(a, b)| a - b).collect();
            if e.iter().enumerate().any(|(v, &x)| x < lo[v] || x > hi[v]) {
                return Err(Error::InexactDivision);
            }
            let t = Laurent::monomial(e.clone(), r_coeff / d_coeff);
            r = r.sub(&t.mul(d, cap)?)?;
            q.add_term(e, r_coeff / d_coeff)?;
            if q.terms.len() > cap || r.terms.len() > cap {
                return Err(Error::CapExceeded(cap));
            }
        }
        Ok(q)
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (e, &c)) in self.terms.iter().rev().enumerate() {
            let body: Vec<_> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(v, &x)| if x == 1 { alloc::format!("x{v}") } else { alloc::format!("x{v}^{x}") })
                .collect();
            let sign = if c < 0 { "-" } else if n > 0 { "+" } else { "" };
            if n > 0 {
                f.write_str(" ")?;
            }
            f.write_str(sign)?;
            if n > 0 {
                f.write_str(" ")?;
            }
            match (c.unsigned_abs(), body.is_empty()) {
                (a, true) => write!(f, "{a}")?,
                (1, false) => write!(f, "{}", body.join("*"))?,
                (a, false) => write!(f, "{a}*{}", body.join("*"))?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(k: usize) -> Laurent {
        Laurent::var(3, k)
    }

    #[test]
    fn ring_operations() {
        let p = x(0).add(&x(1)).unwrap();
        let sq = p.mul(&p, TERM_CAP).unwrap();
        assert_eq!(sq.len(), 3);
        assert_eq!(sq.coeff(&[1, 1, 0]), 2);
        assert!(sq.sub(&sq).unwrap().is_zero());
        assert_eq!(p.pow(3, TERM_CAP).unwrap().coeff(&[2, 1, 0]), 3);
        assert_eq!(sq.to_string(), "x0^2 + 2*x0*x1 + x1^2");
    }

    #[test]
    fn exact_division() {
        let p = x(0).add(&x(1)).unwrap();
        let q = x(2).sub(&Laurent::one(3)).unwrap();
        let prod = p.mul(&q, TERM_CAP).unwrap();
        assert_eq!(prod.exact_div(&p, TERM_CAP).unwrap(), q);
        assert_eq!(prod.exact_div(&q, TERM_CAP).unwrap(), p);
        let inv = Laurent::one(3).exact_div(&x(1), TERM_CAP).unwrap();
        assert_eq!(inv, Laurent::monomial(vec![0, -1, 0], 1));
        assert_eq!(inv.denominator(), vec![0, 1, 0]);
        assert_eq!(Laurent::one(3).exact_div(&p, TERM_CAP), Err(Error::InexactDivision));
        assert_eq!(x(0).exact_div(&Laurent::monomial(vec![0; 3], 2), TERM_CAP), Err(Error::InexactDivision));
        assert_eq!(p.exact_div(&Laurent::zero(3), TERM_CAP), Err(Error::InexactDivision));
    }

    #[test]
    fn caps_and_overflow() {
        let p = x(0).add(&x(1)).unwrap().add(&x(2)).unwrap();
        assert_eq!(p.pow(4, 5), Err(Error::CapExceeded(5)));
        let big = Laurent::monomial(vec![0; 3], i64::MAX);
        assert_eq!(big.add(&Laurent::one(3)), Err(Error::Overflow));
    }
}
