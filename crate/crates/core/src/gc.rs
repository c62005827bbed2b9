//! Element-level arithmetic in the general conformal algebra `gc_N`.
//!
//! An element is a finitely supported sequence `A_(n)` of `N×N` matrices
//! over ℚ(i)[∂]; `A_(n)` gives the action on the free basis of ℚ(i)[∂]^N and
//! extends to all vectors by `A_(j)(q(∂)v) = Σ_s C(j,s) q^{(s)}(∂) A_(j-s)v`.

use std::collections::BTreeMap;

use crate::dpoly::DPoly;
use crate::element::Parity;
use crate::error::{Error, Result};
use crate::pdmatrix::PdMatrix;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GcElement {
    n: usize,
    parity: Parity,
    mats: BTreeMap<usize, PdMatrix>,
}

impl GcElement {
    pub fn zero(n: usize) -> Self {
        GcElement { n, parity: Parity::Even, mats: BTreeMap::new() }
    }

    /// From `(index, matrix)` pairs; zero matrices are dropped.
    pub fn from_modes(n: usize, modes: impl IntoIterator<Item = (usize, PdMatrix)>) -> Result<Self> {
        let mut out = Self::zero(n);
        for (k, m) in modes {
            if m.rows() != n || m.cols() != n {
                return Err(Error::DimensionMismatch { expected: n, found: m.rows().max(m.cols()) });
            }
            out.add_mode(k, &m);
        }
        Ok(out)
    }

    pub fn with_parity(mut self, p: Parity) -> Self {
        self.parity = p;
        self
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// `A_(k)` (zero outside the support).
    pub fn mode(&self, k: usize) -> PdMatrix {
        self.mats.get(&k).cloned().unwrap_or_else(|| PdMatrix::zeros(self.n, self.n))
    }

    pub fn modes(&self) -> impl Iterator<Item = (usize, &PdMatrix)> {
        self.mats.iter().map(|(k, m)| (*k, m))
    }

    pub fn is_zero(&self) -> bool {
        self.mats.is_empty()
    }

    /// One past the largest supported index.
    pub fn order(&self) -> usize {
        self.mats.keys().next_back().map_or(0, |k| k + 1)
    }

    pub fn max_degree(&self) -> usize {
        self.mats.values().map(PdMatrix::max_degree).max().unwrap_or(0)
    }

    fn add_mode(&mut self, k: usize, m: &PdMatrix) {
        let sum = match self.mats.get(&k) {
            Some(x) => x.add(m).expect("square matrices of equal size"),
            None => m.clone(),
        };
        if sum.is_zero() {
            self.mats.remove(&k);
        } else {
            self.mats.insert(k, sum);
        }
    }

    fn check(&self, other: &GcElement) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        Ok(())
    }

    pub fn add(&self, other: &GcElement) -> Result<GcElement> {
        self.check(other)?;
        let mut out = self.clone();
        for (k, m) in &other.mats {
            out.add_mode(*k, m);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> GcElement {
        let mut out = GcElement::zero(self.n).with_parity(self.parity);
        for (k, m) in &self.mats {
            out.add_mode(*k, &m.scale(c));
        }
        out
    }

    /// `(∂A)_(n) = -n A_(n-1)`.
    pub fn d(&self) -> GcElement {
        let mut out = GcElement::zero(self.n).with_parity(self.parity);
        for (k, m) in &self.mats {
            out.add_mode(k + 1, &m.scale(&Scalar::from_int(-(*k as i64 + 1))));
        }
        out
    }

    /// `p(∂)A`.
    pub fn apply_poly(&self, p: &DPoly) -> GcElement {
        let mut out = GcElement::zero(self.n).with_parity(self.parity);
        let mut pow = self.clone();
        for c in p.coeffs() {
            out = out.add(&pow.scale(c)).expect("same size");
            pow = pow.d();
        }
        out
    }

    /// The operator `A_(j) ∘ B_(k)` as a matrix.
    fn compose(&self, j: usize, other: &GcElement, k: usize) -> PdMatrix {
        let b = other.mode(k);
        let mut acc = PdMatrix::zeros(self.n, self.n);
        let mut deriv = b;
        for s in 0..=j {
            if deriv.is_zero() {
                break;
            }
            if let Some(a) = self.mats.get(&(j - s)) {
                let term = a.mul(&deriv).expect("square").scale(&Scalar::binomial(j as i64, s));
                acc = acc.add(&term).expect("square");
            }
            deriv = deriv.map(DPoly::derivative);
        }
        acc
    }

    /// Super-commutator `[A_(j), B_(k)]` of operators.
    pub fn commutator(&self, j: usize, other: &GcElement, k: usize) -> PdMatrix {
        let sign = -self.parity.koszul(other.parity);
        self.compose(j, other, k).add(&other.compose(k, self, j).scale(&sign)).expect("square")
    }
}

/// `(A_(m)B)_(n) = Σ_j (−1)^{m+j} C(m,j) [A_(j), B_(m+n−j)]`.
pub fn gc_nth_product(a: &GcElement, b: &GcElement, m: usize) -> Result<GcElement> {
    a.check(b)?;
    let bound = a.order() + b.order() + a.max_degree() + b.max_degree() + 1;
    let parity = a.parity.add(b.parity);
    let mut out = GcElement::zero(a.n).with_parity(parity);
    for n in 0..bound {
        let mut acc = PdMatrix::zeros(a.n, a.n);
        for j in 0..=m {
            let c = &Scalar::sign(m + j) * &Scalar::binomial(m as i64, j);
            acc = acc.add(&a.commutator(j, b, m + n - j).scale(&c)).expect("square");
        }
        out.add_mode(n, &acc);
    }
    Ok(out)
}

/// An index past which every `a_(m)b` vanishes.
pub fn product_bound(a: &GcElement, b: &GcElement) -> usize {
    a.order() + b.order() + a.max_degree() + b.max_degree() + 1
}

/// `A_(n)B = −(−1)^{p(A)p(B)} Σ_j (−1)^{n+j} ∂^j/j! (B_(n+j)A)`.
pub fn gc_skew_holds(a: &GcElement, b: &GcElement, n: usize) -> Result<bool> {
    let lhs = gc_nth_product(a, b, n)?;
    let mut rhs = GcElement::zero(a.n).with_parity(lhs.parity);
    for j in 0..=product_bound(a, b) {
        let p = gc_nth_product(b, a, n + j)?;
        let c = &Scalar::sign(n + j) * &Scalar::factorial(j).inv();
        rhs = rhs.add(&p.apply_poly(&DPoly::monomial(c, j)))?;
    }
    let sign = -a.parity.koszul(b.parity);
    Ok(lhs == rhs.scale(&sign).with_parity(lhs.parity))
}

/// `A_(m)(B_(n)C) = Σ_j C(m,j) (A_(j)B)_(m+n−j)C + (−1)^{p(A)p(B)} B_(n)(A_(m)C)`.
pub fn gc_jacobi_holds(a: &GcElement, b: &GcElement, c: &GcElement, m: usize, n: usize) -> Result<bool> {
    let lhs = gc_nth_product(a, &gc_nth_product(b, c, n)?, m)?;
    let mut rhs = gc_nth_product(b, &gc_nth_product(a, c, m)?, n)?.scale(&a.parity.koszul(b.parity));
    for j in 0..=m {
        let ab = gc_nth_product(a, b, j)?;
        let t = gc_nth_product(&ab, c, m + n - j)?.scale(&Scalar::binomial(m as i64, j));
        rhs = rhs.add(&t)?;
    }
    Ok(lhs.mats == rhs.mats)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rho_l(alpha: i64, delta: i64) -> GcElement {
        GcElement::from_modes(
            1,
            vec![
                (0, PdMatrix::from_rows(&[vec![DPoly::from_ints(&[alpha, 1])]])),
                (1, PdMatrix::from_rows(&[vec![DPoly::from_ints(&[delta])]])),
            ],
        )
        .unwrap()
    }

    #[test]
    fn virasoro_image_products() {
        let l = rho_l(3, 2);
        assert_eq!(gc_nth_product(&l, &l, 1).unwrap(), l.scale(&Scalar::from_int(2)));
        assert_eq!(gc_nth_product(&l, &l, 0).unwrap(), l.d());
        assert!(gc_nth_product(&l, &l, 2).unwrap().is_zero());
    }

    #[test]
    fn identity_commutes() {
        let a = GcElement::from_modes(2, vec![(0, PdMatrix::identity(2))]).unwrap();
        assert!(gc_nth_product(&a, &a, 0).unwrap().is_zero());
    }

    #[test]
    fn skew_and_jacobi_on_images() {
        let l = rho_l(3, 2);
        let x = GcElement::from_modes(1, vec![(0, PdMatrix::from_rows(&[vec![DPoly::from_ints(&[1, 0, 1])]]))]).unwrap();
        for n in 0..3 {
            assert!(gc_skew_holds(&l, &x, n).unwrap());
            assert!(gc_jacobi_holds(&l, &x, &l, n, 1).unwrap());
        }
    }

    #[test]
    fn derivative_shifts_modes() {
        let a = GcElement::from_modes(1, vec![(0, PdMatrix::identity(1))]).unwrap();
        assert_eq!(a.d().mode(1), PdMatrix::identity(1).scale(&Scalar::from_int(-1)));
    }
}
