//! Elements of finitely generated ℚ(i)[∂]-modules and λ-brackets between them.
//!
//! A module is described by a [`Basis`]: free generators plus torsion
//! generators `t` with `(∂ - c)·t = 0`. Products are stored in λ-bracket form
//! `[a_λ b] = Σ_n λ^n/n! · a_(n)b`; [`LambdaPoly`] keeps the coefficient of
//! the ordinary power `λ^n`, so `a_(n)b = n! · coeff(n)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::dpoly::DPoly;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(b: usize) -> Self {
        if b.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> usize {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn add(self, other: Parity) -> Parity {
        Parity::from_bit(self.bit() + other.bit())
    }

    /// `(-1)^{p(a)p(b)}`.
    pub fn koszul(self, other: Parity) -> Scalar {
        if self == Parity::Odd && other == Parity::Odd {
            Scalar::from_int(-1)
        } else {
            Scalar::one()
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub parity: Parity,
    /// `Some(c)` marks a torsion generator with `∂·t = c·t`.
    pub torsion: Option<Scalar>,
}

impl Generator {
    pub fn even(name: impl Into<String>) -> Self {
        Generator { name: name.into(), parity: Parity::Even, torsion: None }
    }

    pub fn odd(name: impl Into<String>) -> Self {
        Generator { name: name.into(), parity: Parity::Odd, torsion: None }
    }

    pub fn new(name: impl Into<String>, parity: Parity) -> Self {
        Generator { name: name.into(), parity, torsion: None }
    }

    pub fn with_torsion(mut self, eigenvalue: Scalar) -> Self {
        self.torsion = Some(eigenvalue);
        self
    }

    pub fn is_torsion(&self) -> bool {
        self.torsion.is_some()
    }
}

/// Ordered generator list of a module.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Basis {
    gens: Vec<Generator>,
}

impl Basis {
    pub fn new(gens: Vec<Generator>) -> Self {
        Basis { gens }
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn gens(&self) -> &[Generator] {
        &self.gens
    }

    pub fn get(&self, i: usize) -> &Generator {
        &self.gens[i]
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.gens[i].parity
    }

    pub fn name(&self, i: usize) -> &str {
        &self.gens[i].name
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }

    pub fn free_rank(&self) -> usize {
        self.gens.iter().filter(|g| !g.is_torsion()).count()
    }

    pub fn torsion_dim(&self) -> usize {
        self.gens.iter().filter(|g| g.is_torsion()).count()
    }

    pub fn is_free(&self) -> bool {
        self.torsion_dim() == 0
    }

    /// Reduces torsion coordinates to constants.
    pub fn normalize(&self, x: &Element) -> Element {
        let mut out = Element::zero();
        for (i, p) in x.terms() {
            match &self.gens[i].torsion {
                Some(c) if !p.is_constant() => out.add_term(i, &DPoly::constant(p.eval(c))),
                _ => out.add_term(i, p),
            }
        }
        out
    }

    /// `p(∂)·x`.
    pub fn apply(&self, p: &DPoly, x: &Element) -> Element {
        if p.is_zero() {
            return Element::zero();
        }
        let mut out = Element::zero();
        for (i, q) in x.terms() {
            match &self.gens[i].torsion {
                Some(c) => out.add_term(i, &q.scale(&p.eval(c))),
                None => out.add_term(i, &(p * q)),
            }
        }
        out
    }

    /// `∂^k · x`.
    pub fn d_pow(&self, k: usize, x: &Element) -> Element {
        if k == 0 {
            return x.clone();
        }
        self.apply(&DPoly::monomial(Scalar::one(), k), x)
    }

    pub fn unit(&self, i: usize) -> Element {
        Element::unit(i)
    }

    /// Parity of an element if all its components agree.
    pub fn parity_of(&self, x: &Element) -> Option<Parity> {
        let mut it = x.terms().map(|(i, _)| self.gens[i].parity);
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    /// Dense coordinate vector.
    pub fn to_vec(&self, x: &Element) -> Vec<DPoly> {
        let mut v = vec![DPoly::zero(); self.len()];
        for (i, p) in x.terms() {
            v[i] = p.clone();
        }
        v
    }

    pub fn from_vec(&self, v: &[DPoly]) -> Element {
        self.normalize(&Element::from_dense(v))
    }

    pub fn display(&self, x: &Element) -> String {
        if x.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, p) in x.terms() {
            let name = &self.gens[i].name;
            if p.is_one() {
                parts.push(name.clone());
            } else if p.coeffs().len() == 1 {
                parts.push(format!("{} {}", p.coeffs()[0], name));
            } else {
                parts.push(format!("({p}) {name}"));
            }
        }
        parts.join(" + ")
    }
}

/// Sparse vector `Σ p_i(∂) g_i` over some [`Basis`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Element {
    terms: BTreeMap<usize, DPoly>,
}

impl Element {
    pub fn zero() -> Self {
        Element { terms: BTreeMap::new() }
    }

    pub fn unit(i: usize) -> Self {
        Self::term(i, DPoly::one())
    }

    pub fn term(i: usize, p: DPoly) -> Self {
        let mut e = Self::zero();
        e.add_term(i, &p);
        e
    }

    pub fn from_dense(v: &[DPoly]) -> Self {
        let mut e = Self::zero();
        for (i, p) in v.iter().enumerate() {
            e.add_term(i, p);
        }
        e
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, DPoly)>) -> Self {
        let mut e = Self::zero();
        for (i, p) in terms {
            e.add_term(i, &p);
        }
        e
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &DPoly)> {
        self.terms.iter().map(|(i, p)| (*i, p))
    }

    pub fn get(&self, i: usize) -> DPoly {
        self.terms.get(&i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.terms.keys().copied()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }

    /// Largest ∂-degree among the components.
    pub fn d_degree(&self) -> Option<usize> {
        self.terms.values().filter_map(DPoly::degree).max()
    }

    pub fn add_term(&mut self, i: usize, p: &DPoly) {
        if p.is_zero() {
            return;
        }
        match self.terms.get_mut(&i) {
            Some(q) => {
                *q = &*q + p;
                if q.is_zero() {
                    self.terms.remove(&i);
                }
            }
            None => {
                self.terms.insert(i, p.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Element, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (i, p) in other.terms() {
            self.add_term(i, &p.scale(c));
        }
    }

    pub fn add_assign(&mut self, other: &Element) {
        for (i, p) in other.terms() {
            self.add_term(i, p);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        let mut out = Element::zero();
        out.add_scaled(self, c);
        out
    }

    /// Multiplies every coefficient by a polynomial, ignoring torsion.
    pub fn mul_poly_free(&self, p: &DPoly) -> Element {
        let mut out = Element::zero();
        for (i, q) in self.terms() {
            out.add_term(i, &(p * q));
        }
        out
    }

    /// Renumbers generator indices.
    pub fn reindex(&self, map: impl Fn(usize) -> usize) -> Element {
        let mut out = Element::zero();
        for (i, p) in self.terms() {
            out.add_term(map(i), p);
        }
        out
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::from_int(-1));
        out
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(&Scalar::from_int(-1))
    }
}

/// Polynomial in λ with [`Element`] coefficients (ordinary powers).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LambdaPoly {
    coeffs: Vec<Element>,
}

impl LambdaPoly {
    pub fn zero() -> Self {
        LambdaPoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<Element>) -> Self {
        while coeffs.last().is_some_and(Element::is_zero) {
            coeffs.pop();
        }
        LambdaPoly { coeffs }
    }

    /// From the n-th products `a_(0)b, a_(1)b, …`.
    pub fn from_products(products: Vec<Element>) -> Self {
        let coeffs = products
            .into_iter()
            .enumerate()
            .map(|(n, x)| x.scale(&Scalar::factorial(n).inv()))
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[Element] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Element {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// The n-th product `n! · coeff(n)`.
    pub fn nth(&self, n: usize) -> Element {
        match self.coeffs.get(n) {
            Some(x) if n > 1 => x.scale(&Scalar::factorial(n)),
            Some(x) => x.clone(),
            None => Element::zero(),
        }
    }

    pub fn products(&self) -> Vec<Element> {
        (0..self.coeffs.len()).map(|n| self.nth(n)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of possibly nonzero products (the locality order).
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn add_at(&mut self, k: usize, x: &Element) {
        if x.is_zero() {
            return;
        }
        if self.coeffs.len() <= k {
            self.coeffs.resize(k + 1, Element::zero());
        }
        self.coeffs[k].add_assign(x);
        self.trim();
    }

    pub fn add_scaled_at(&mut self, k: usize, x: &Element, c: &Scalar) {
        if x.is_zero() || c.is_zero() {
            return;
        }
        if self.coeffs.len() <= k {
            self.coeffs.resize(k + 1, Element::zero());
        }
        self.coeffs[k].add_scaled(x, c);
        self.trim();
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Element::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn add_assign(&mut self, other: &LambdaPoly) {
        for (k, x) in other.coeffs.iter().enumerate() {
            self.add_at(k, x);
        }
    }

    pub fn scale(&self, c: &Scalar) -> LambdaPoly {
        LambdaPoly::from_coeffs(self.coeffs.iter().map(|x| x.scale(c)).collect())
    }

    /// Multiplies by a scalar polynomial in λ (given by its coefficients).
    pub fn mul_lambda_poly(&self, p: &DPoly) -> LambdaPoly {
        let mut out = LambdaPoly::zero();
        for (s, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, x) in self.coeffs.iter().enumerate() {
                out.add_scaled_at(s + k, x, c);
            }
        }
        out
    }

    /// `q(λ+∂)·self`, with ∂ acting through `basis`.
    pub fn shift_apply(&self, q: &DPoly, basis: &Basis) -> LambdaPoly {
        if q.is_one() {
            return self.clone();
        }
        let mut out = LambdaPoly::zero();
        let Some(deg) = q.degree() else { return out };
        for (k, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            // ∂^j x for j ≤ deg
            let mut dpows = Vec::with_capacity(deg + 1);
            dpows.push(x.clone());
            for j in 1..=deg {
                let prev: &Element = &dpows[j - 1];
                let next = basis.apply(&DPoly::d(), prev);
                dpows.push(next);
            }
            for (r, qr) in q.coeffs().iter().enumerate() {
                if qr.is_zero() {
                    continue;
                }
                for s in 0..=r {
                    let c = qr * &Scalar::binomial(r as i64, s);
                    out.add_scaled_at(s + k, &dpows[r - s], &c);
                }
            }
        }
        out
    }

    /// `Σ_k (-1)^k (λ+∂)^k X_k`, i.e. the substitution `λ ↦ -λ-∂`.
    pub fn reflect(&self, basis: &Basis) -> LambdaPoly {
        let mut out = LambdaPoly::zero();
        for (k, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let mut single = LambdaPoly::zero();
            single.add_at(0, x);
            let q = DPoly::monomial(Scalar::sign(k), k);
            out.add_assign(&single.shift_apply(&q, basis));
        }
        out
    }

    pub fn max_index(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(Element::max_index).max()
    }
}

/// Generator-level λ-brackets `[s_i λ t_j]` from a source basis into a target basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductTable {
    rows: usize,
    cols: usize,
    entries: Vec<LambdaPoly>,
}

impl ProductTable {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ProductTable { rows, cols, entries: vec![LambdaPoly::zero(); rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LambdaPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LambdaPoly) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn max_order(&self) -> usize {
        self.entries.iter().map(LambdaPoly::order).max().unwrap_or(0)
    }

    pub fn max_d_degree(&self) -> usize {
        self.entries
            .iter()
            .flat_map(|e| e.coeffs().iter())
            .filter_map(Element::d_degree)
            .max()
            .unwrap_or(0)
    }

    /// `[x_λ y]` for arbitrary elements, extended by sesquilinearity:
    /// `[p(∂)s_λ q(∂)t] = p(-λ) q(λ+∂) [s_λ t]`.
    pub fn bracket(&self, target: &Basis, x: &Element, y: &Element) -> LambdaPoly {
        let mut out = LambdaPoly::zero();
        for (j, q) in y.terms() {
            let mut acc = LambdaPoly::zero();
            for (i, p) in x.terms() {
                let t = self.get(i, j);
                if t.is_zero() {
                    continue;
                }
                if p.is_one() {
                    acc.add_assign(t);
                } else {
                    acc.add_assign(&t.mul_lambda_poly(&p.reflect()));
                }
            }
            if acc.is_zero() {
                continue;
            }
            out.add_assign(&acc.shift_apply(q, target));
        }
        out
    }
}

impl fmt::Display for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coeffs.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vir_table() -> (Basis, ProductTable) {
        let basis = Basis::new(vec![Generator::even("L")]);
        let mut t = ProductTable::zeros(1, 1);
        t.set(
            0,
            0,
            LambdaPoly::from_products(vec![Element::term(0, DPoly::d()), Element::term(0, DPoly::from_ints(&[2]))]),
        );
        (basis, t)
    }

    #[test]
    fn sesquilinear_extension_matches_hand_values() {
        let (basis, t) = vir_table();
        let l = Element::unit(0);
        let dl = Element::term(0, DPoly::d());
        // L_(1)(∂L) = 3∂L
        assert_eq!(t.bracket(&basis, &l, &dl).nth(1), Element::term(0, DPoly::from_ints(&[0, 3])));
        // (∂L)_(1)L = -∂L
        assert_eq!(t.bracket(&basis, &dl, &l).nth(1), Element::term(0, DPoly::from_ints(&[0, -1])));
    }

    #[test]
    fn reflect_is_involution() {
        let (basis, t) = vir_table();
        let lp = t.get(0, 0);
        assert_eq!(&lp.reflect(&basis).reflect(&basis), lp);
    }

    #[test]
    fn torsion_generator_absorbs_d() {
        let basis = Basis::new(vec![Generator::even("C").with_torsion(Scalar::zero())]);
        let c = Element::unit(0);
        assert!(basis.apply(&DPoly::d(), &c).is_zero());
        let shifted = basis.apply(&DPoly::from_ints(&[2, 1]), &c);
        assert_eq!(shifted, Element::term(0, DPoly::from_ints(&[2])));
    }
}
