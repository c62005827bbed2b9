//! ℚ(i)[∂]-submodules of a finitely generated module given by a [`Basis`].
//!
//! A submodule `S ⊆ M = F/R` (with `F` free on the basis and `R` spanned by
//! the torsion relations `(∂ - c)·t`) is stored through its preimage in `F`,
//! kept in column Hermite form.

use crate::dpoly::DPoly;
use crate::element::{Basis, Element};
use crate::pdmatrix::{size_of, Hermite, PdMatrix, Size};
use crate::scalar::Scalar;

const BATCH: usize = 16;

#[derive(Clone, Debug)]
pub struct Submodule {
    ambient: Basis,
    herm: Hermite,
    gens: Vec<Element>,
    /// Whether the submodule is known to be closed under the relevant products.
    pub closed: Option<bool>,
}

fn relation_columns(basis: &Basis) -> Vec<Vec<DPoly>> {
    let n = basis.len();
    (0..n)
        .filter_map(|t| {
            basis.get(t).torsion.as_ref().map(|c| {
                let mut v = vec![DPoly::zero(); n];
                v[t] = DPoly::from_coeffs(vec![-c, Scalar::one()]);
                v
            })
        })
        .collect()
}

impl Submodule {
    /// The submodule generated by `seeds`.
    pub fn new(ambient: &Basis, seeds: &[Element]) -> Self {
        let n = ambient.len();
        let rel = relation_columns(ambient);
        let mut herm = PdMatrix::from_columns(n, &rel).hermite();
        let mut pending: Vec<Vec<DPoly>> = Vec::new();
        for s in seeds {
            let v = ambient.to_vec(&ambient.normalize(s));
            if v.iter().all(DPoly::is_zero) || herm.contains(&v) {
                continue;
            }
            pending.push(v);
            if pending.len() >= BATCH {
                herm = extend(&herm, n, std::mem::take(&mut pending));
            }
        }
        if !pending.is_empty() {
            herm = extend(&herm, n, pending);
        }
        let gens = (0..herm.form.cols())
            .map(|k| ambient.from_vec(&herm.form.column(k)))
            .filter(|x| !x.is_zero())
            .collect();
        Submodule { ambient: ambient.clone(), herm, gens, closed: None }
    }

    pub fn zero(ambient: &Basis) -> Self {
        Self::new(ambient, &[])
    }

    pub fn full(ambient: &Basis) -> Self {
        let units: Vec<Element> = (0..ambient.len()).map(Element::unit).collect();
        Self::new(ambient, &units)
    }

    pub fn ambient(&self) -> &Basis {
        &self.ambient
    }

    /// Nonzero generators (images of the Hermite columns).
    pub fn generators(&self) -> &[Element] {
        &self.gens
    }

    /// Hermite basis of the preimage in the free cover.
    pub fn basis_matrix(&self) -> &PdMatrix {
        &self.herm.form
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.herm.contains(&self.ambient.to_vec(&self.ambient.normalize(x)))
    }

    pub fn contains_all(&self, other: &Submodule) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn same_as(&self, other: &Submodule) -> bool {
        self.contains_all(other) && other.contains_all(self)
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_full(&self) -> bool {
        (0..self.ambient.len()).all(|i| self.contains(&Element::unit(i)))
    }

    /// Size `(r, d)` of the submodule itself.
    pub fn size(&self) -> Size {
        let rel = relation_columns(&self.ambient);
        let k = self.herm.form.cols();
        let cols: Vec<Vec<DPoly>> = rel
            .iter()
            .map(|r| {
                let mut c = self.herm.solve_echelon(r).expect("relations lie in the preimage");
                c.resize(k, DPoly::zero());
                c
            })
            .collect();
        size_of(&PdMatrix::from_columns(k, &cols))
    }

    /// Size of the quotient of the ambient module by this submodule.
    pub fn quotient_size(&self) -> Size {
        size_of(&self.herm.form)
    }

    /// Submodule generated by this one and `extra`.
    pub fn join(&self, extra: &[Element]) -> Submodule {
        let mut seeds = self.gens.clone();
        seeds.extend(extra.iter().cloned());
        Submodule::new(&self.ambient, &seeds)
    }

    pub fn display(&self) -> String {
        if self.gens.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = self.gens.iter().map(|g| self.ambient.display(g)).collect();
        format!("<{}>", parts.join(", "))
    }
}

fn extend(herm: &Hermite, n: usize, extra: Vec<Vec<DPoly>>) -> Hermite {
    let mut cols = herm.form.columns();
    cols.extend(extra);
    PdMatrix::from_columns(n, &cols).hermite()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::Generator;

    #[test]
    fn sizes_of_sub_and_quotient() {
        let b = Basis::new(vec![Generator::even("v"), Generator::even("c").with_torsion(Scalar::zero())]);
        let s = Submodule::new(&b, &[Element::term(0, DPoly::from_ints(&[1, 1]))]);
        assert_eq!(s.size(), Size { r: 1, d: 0 });
        assert_eq!(s.quotient_size(), Size { r: 0, d: 2 });
        let t = Submodule::new(&b, &[Element::unit(1)]);
        assert_eq!(t.size(), Size { r: 0, d: 1 });
        assert!(t.contains(&Element::term(1, DPoly::from_ints(&[5]))));
        assert!(!t.contains(&Element::unit(0)));
    }

    #[test]
    fn full_and_zero() {
        let b = Basis::new(vec![Generator::even("a"), Generator::odd("b")]);
        assert!(Submodule::full(&b).is_full());
        assert!(Submodule::zero(&b).is_zero());
        assert_eq!(Submodule::full(&b).size(), Size { r: 2, d: 0 });
    }
}
