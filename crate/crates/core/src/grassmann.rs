//! The Grassmann algebra Λ(N) over ℚ(i).
//!
//! Monomials are bitmasks over `{ξ_1, …, ξ_N}` (bit `k-1` is `ξ_k`), always
//! read in ascending index order.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Largest supported number of odd indeterminates.
pub const MAX_VARS: usize = 16;

pub type Monomial = u32;

/// Sign of `ξ_a · ξ_b` relative to the sorted monomial `ξ_{a∪b}`, or `None`
/// when the monomials share an index.
pub fn monomial_product_sign(a: Monomial, b: Monomial) -> Option<i64> {
    if a & b != 0 {
        return None;
    }
    // count pairs (i in a, j in b) with i > j
    let mut swaps = 0u32;
    let mut bb = b;
    while bb != 0 {
        let j = bb.trailing_zeros();
        bb &= bb - 1;
        swaps += (a >> (j + 1)).count_ones();
    }
    Some(if swaps.is_multiple_of(2) { 1 } else { -1 })
}

/// Number of indeterminates in a monomial.
pub fn monomial_degree(m: Monomial) -> usize {
    m.count_ones() as usize
}

/// Lists the monomials of Λ(N) ordered by degree, then lexicographically.
pub fn monomials(n: usize) -> Vec<Monomial> {
    let mut all: Vec<Monomial> = (0..(1u32 << n)).collect();
    all.sort_by_key(|&m| (m.count_ones(), index_list(m)));
    all
}

pub fn index_list(m: Monomial) -> Vec<usize> {
    (0..32).filter(|k| m >> k & 1 == 1).map(|k| k as usize + 1).collect()
}

pub fn monomial_name(m: Monomial) -> String {
    if m == 0 {
        return "1".to_string();
    }
    index_list(m).iter().map(|i| format!("x{i}")).collect::<Vec<_>>().join("")
}

/// Finite linear combination of Grassmann monomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GrassmannElement {
    n: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl GrassmannElement {
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_VARS, "at most {MAX_VARS} Grassmann variables");
        GrassmannElement { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, 0, Scalar::one())
    }

    pub fn monomial(n: usize, m: Monomial, c: Scalar) -> Self {
        let mut e = Self::zero(n);
        assert!(m < (1 << n), "monomial outside Λ({n})");
        if !c.is_zero() {
            e.terms.insert(m, c);
        }
        e
    }

    /// `ξ_i`, with `i` 1-based.
    pub fn var(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, max: n });
        }
        Ok(Self::monomial(n, 1 << (i - 1), Scalar::one()))
    }

    /// Product `ξ_{i1} ξ_{i2} …` in the given order (signs applied).
    pub fn word(n: usize, idx: &[usize]) -> Result<Self> {
        let mut acc = Self::one(n);
        for &i in idx {
            acc = acc.mul(&Self::var(n, i)?)?;
        }
        Ok(acc)
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &Scalar)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, m: Monomial) -> Scalar {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Parity if homogeneous (`Some(0|1)`), `None` for mixed or zero.
    pub fn parity(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|m| m.count_ones() as usize % 2);
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    pub fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(self.n);
        for (m, x) in &self.terms {
            out.add_term(*m, &(x * c));
        }
        out
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        Ok(())
    }

    /// Super-commutative product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = Self::zero(self.n);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if let Some(s) = monomial_product_sign(*a, *b) {
                    out.add_term(a | b, &(&(x * y) * &Scalar::from_int(s)));
                }
            }
        }
        Ok(out)
    }

    /// Left odd derivation `∂/∂ξ_i` (1-based `i`).
    pub fn derive(&self, i: usize) -> Result<Self> {
        if i == 0 || i > self.n {
            return Err(Error::IndexOutOfRange { index: i, max: self.n });
        }
        let bit = 1u32 << (i - 1);
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            if m & bit != 0 {
                let before = (m & (bit - 1)).count_ones();
                let c = if before.is_multiple_of(2) { c.clone() } else { -c };
                out.add_term(m & !bit, &c);
            }
        }
        Ok(out)
    }

    /// Degree in the ℤ-grading `deg ξ_i = 1`, if homogeneous.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|m| m.count_ones() as usize);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }
}

impl fmt::Display for GrassmannElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let names: Vec<String> = index_list(*m).iter().map(|i| format!("ξ{i}")).collect();
                let mono = if names.is_empty() { "1".to_string() } else { names.join("") };
                if c.is_one() {
                    mono
                } else {
                    format!("{c}·{mono}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> GrassmannElement {
        GrassmannElement::var(n, i).unwrap()
    }

    #[test]
    fn product_signs() {
        let x1x2 = x(2, 1).mul(&x(2, 2)).unwrap();
        assert_eq!(x1x2, GrassmannElement::monomial(2, 0b11, Scalar::one()));
        let x2x1 = x(2, 2).mul(&x(2, 1)).unwrap();
        assert_eq!(x2x1, x1x2.scale(&Scalar::from_int(-1)));
        assert!(x(2, 1).mul(&x(2, 1)).unwrap().is_zero());
    }

    #[test]
    fn derivative_signs() {
        let x1x2 = x(2, 1).mul(&x(2, 2)).unwrap();
        assert_eq!(x1x2.derive(1).unwrap(), x(2, 2));
        assert_eq!(x1x2.derive(2).unwrap(), x(2, 1).scale(&Scalar::from_int(-1)));
        assert!(x(2, 2).derive(1).unwrap().is_zero());
        assert!(x(2, 1).derive(3).is_err());
    }

    #[test]
    fn mismatched_n_is_error() {
        assert!(x(2, 1).mul(&x(3, 1)).is_err());
    }

    #[test]
    fn monomial_order() {
        assert_eq!(monomials(2), vec![0, 1, 2, 3]);
        assert_eq!(monomials(3).len(), 8);
        assert_eq!(monomial_name(0b101), "x1x3");
    }
}
