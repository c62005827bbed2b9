//! Polynomials in the formal symbol ∂ with Gaussian-rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Element of ℚ(i)[∂]; `coeffs[k]` multiplies `∂^k`, no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DPoly {
    coeffs: Vec<Scalar>,
}

impl DPoly {
    pub fn zero() -> Self {
        DPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c·∂^k`.
    pub fn monomial(c: Scalar, k: usize) -> Self {
        let mut v = vec![Scalar::zero(); k + 1];
        v[k] = c;
        Self::from_coeffs(v)
    }

    /// The polynomial `∂`.
    pub fn d() -> Self {
        Self::monomial(Scalar::one(), 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        DPoly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::from_coeffs(c.iter().map(|&x| Scalar::from_int(x)).collect())
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return DPoly::zero();
        }
        DPoly { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Multiplies by `∂^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return DPoly::zero();
        }
        let mut v = vec![Scalar::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        DPoly { coeffs: v }
    }

    /// `dp/d∂`.
    pub fn derivative(&self) -> Self {
        DPoly::from_coeffs(
            self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * &Scalar::from_int(k as i64)).collect(),
        )
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.inv()),
            None => DPoly::zero(),
        }
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// `p(∂ + c)`.
    pub fn translate(&self, c: &Scalar) -> Self {
        let mut acc = DPoly::zero();
        let lin = DPoly::from_coeffs(vec![c.clone(), Scalar::one()]);
        for coef in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &DPoly::constant(coef.clone());
        }
        acc
    }

    /// `p(-∂)`.
    pub fn reflect(&self) -> Self {
        DPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// Euclidean division: `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &DPoly) -> Result<(DPoly, DPoly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = divisor.coeffs[dd].inv();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((DPoly::zero(), self.clone()));
        }
        let mut quot = vec![Scalar::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (t, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + t] = &rem[k + t] - &(&c * dc);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((DPoly::from_coeffs(quot), DPoly::from_coeffs(rem)))
    }

    /// Exact quotient if `divisor` divides `self`.
    pub fn div_exact(&self, divisor: &DPoly) -> Option<DPoly> {
        let (q, r) = self.div_rem(divisor).ok()?;
        r.is_zero().then_some(q)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &DPoly) -> DPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl<'a> Add<&'a DPoly> for &'a DPoly {
    type Output = DPoly;
    fn add(self, rhs: &DPoly) -> DPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            v.push(match (self.coeffs.get(k), rhs.coeffs.get(k)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        DPoly::from_coeffs(v)
    }
}

impl<'a> Sub<&'a DPoly> for &'a DPoly {
    type Output = DPoly;
    fn sub(self, rhs: &DPoly) -> DPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a DPoly> for &'a DPoly {
    type Output = DPoly;
    fn mul(self, rhs: &DPoly) -> DPoly {
        if self.is_zero() || rhs.is_zero() {
            return DPoly::zero();
        }
        let mut v = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += &(a * b);
                }
            }
        }
        DPoly::from_coeffs(v)
    }
}

impl Neg for &DPoly {
    type Output = DPoly;
    fn neg(self) -> DPoly {
        DPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Add for DPoly {
    type Output = DPoly;
    fn add(self, rhs: DPoly) -> DPoly {
        &self + &rhs
    }
}

impl Sub for DPoly {
    type Output = DPoly;
    fn sub(self, rhs: DPoly) -> DPoly {
        &self - &rhs
    }
}

impl Mul for DPoly {
    type Output = DPoly;
    fn mul(self, rhs: DPoly) -> DPoly {
        &self * &rhs
    }
}

impl fmt::Display for DPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                _ if c.is_one() => write!(f, "d^{k}")?,
                _ => write!(f, "{c} d^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> DPoly {
        DPoly::from_ints(c)
    }

    #[test]
    fn product_of_linear_factors() {
        // (∂+1)(∂-1) = ∂² - 1
        assert_eq!(&p(&[1, 1]) * &p(&[-1, 1]), p(&[-1, 0, 1]));
    }

    #[test]
    fn divmod_exact_cases() {
        let (q, r) = p(&[0, 0, 1]).div_rem(&p(&[0, 1])).unwrap();
        assert_eq!(q, p(&[0, 1]));
        assert!(r.is_zero());
        // ∂²+1 = (∂+i)(∂-i)
        let num = p(&[1, 0, 1]);
        let den = DPoly::from_coeffs(vec![Scalar::i(), Scalar::one()]);
        let (q, r) = num.div_rem(&den).unwrap();
        assert_eq!(q, DPoly::from_coeffs(vec![-Scalar::i(), Scalar::one()]));
        assert!(r.is_zero());
    }

    #[test]
    fn divide_by_zero_is_error() {
        assert_eq!(p(&[1]).div_rem(&DPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn zero_degree_sentinel() {
        assert_eq!(DPoly::zero().degree(), None);
        assert_eq!(p(&[0, 0]).degree(), None);
        assert_eq!(p(&[3]).degree(), Some(0));
    }

    #[test]
    fn gcd_and_translate() {
        let a = &p(&[1, 1]) * &p(&[2, 1]);
        let b = &p(&[1, 1]) * &p(&[3, 1]);
        assert_eq!(a.gcd(&b), p(&[1, 1]));
        // (∂+1)^2 evaluated at ∂-1 is ∂^2
        let sq = &p(&[1, 1]) * &p(&[1, 1]);
        assert_eq!(sq.translate(&Scalar::from_int(-1)), p(&[0, 0, 1]));
        assert_eq!(p(&[1, 2, 3]).reflect(), p(&[1, -2, 3]));
    }
}
