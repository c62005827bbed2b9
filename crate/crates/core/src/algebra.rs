//! Finite conformal superalgebras given by generator-level structure constants.

use std::collections::HashMap;
use std::fmt;

use crate::dpoly::DPoly;
use crate::element::{Basis, Element, Generator, LambdaPoly, Parity, ProductTable};
use crate::error::{Error, Result};
use crate::pdmatrix::Size;
use crate::scalar::Scalar;

/// Default ∂-degree up to which the derivation rules are re-asserted.
pub const SHIFT_DEPTH: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConformalSuperalgebra {
    name: String,
    basis: Basis,
    table: ProductTable,
}

/// One nonzero product `a_(n)b` between generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub a: usize,
    pub b: usize,
    pub n: usize,
    pub value: Element,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    /// `(∂a)_(n)b = -n a_(n-1)b`
    DerivLeft,
    /// `a_(n)∂b = ∂(a_(n)b) + n a_(n-1)b`
    DerivRight,
    Skew,
    Jacobi,
    Parity,
    /// Torsion elements must act and be acted on trivially.
    Torsion,
    /// Module form of the Jacobi identity.
    ModuleJacobi,
    /// Module form of the derivation rules.
    ModuleDeriv,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::DerivLeft => "derivation-left",
            Axiom::DerivRight => "derivation-right",
            Axiom::Skew => "skew-symmetry",
            Axiom::Jacobi => "jacobi",
            Axiom::Parity => "parity",
            Axiom::Torsion => "torsion",
            Axiom::ModuleJacobi => "module-jacobi",
            Axiom::ModuleDeriv => "module-derivation",
        };
        write!(f, "{s}")
    }
}

/// A violated instance of an axiom. `lhs`/`rhs` are expressed over the
/// target basis (the algebra itself, or a module).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub gens: Vec<String>,
    pub m: Option<usize>,
    pub n: usize,
    pub lhs: Element,
    pub rhs: Element,
    pub lhs_text: String,
    pub rhs_text: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at ({}", self.axiom, self.gens.join(","))?;
        if let Some(m) = self.m {
            write!(f, ", m={m}")?;
        }
        write!(f, ", n={}): lhs {} vs rhs {}", self.n, self.lhs_text, self.rhs_text)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
    pub pairs_checked: usize,
    pub triples_checked: usize,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn count(&self, axiom: Axiom) -> usize {
        self.violations.iter().filter(|v| v.axiom == axiom).count()
    }
}

impl ConformalSuperalgebra {
    /// Builds an algebra from a complete table of generator brackets.
    pub fn new(name: impl Into<String>, basis: Basis, table: ProductTable) -> Result<Self> {
        let r = basis.len();
        if table.rows() != r || table.cols() != r {
            return Err(Error::DimensionMismatch { expected: r, found: table.rows().max(table.cols()) });
        }
        if let Some(k) = (0..r * r).filter_map(|t| table.get(t / r, t % r).max_index()).max() {
            if k >= r {
                return Err(Error::IndexOutOfRange { index: k, max: r.saturating_sub(1) });
            }
        }
        let mut table = table;
        for i in 0..r {
            for j in 0..r {
                let normalized = LambdaPoly::from_coeffs(
                    table.get(i, j).coeffs().iter().map(|x| basis.normalize(x)).collect(),
                );
                table.set(i, j, normalized);
            }
        }
        Ok(ConformalSuperalgebra { name: name.into(), basis, table })
    }

    /// Builds an algebra from brackets given for some ordered pairs; missing
    /// mirrors are completed by skew-symmetry. A pair given in both orders
    /// must agree with its mirror.
    pub fn from_brackets(
        name: impl Into<String>,
        gens: Vec<Generator>,
        brackets: impl IntoIterator<Item = ((usize, usize), LambdaPoly)>,
    ) -> Result<Self> {
        let basis = Basis::new(gens);
        let r = basis.len();
        let mut given: HashMap<(usize, usize), LambdaPoly> = HashMap::new();
        for ((i, j), lp) in brackets {
            if i >= r || j >= r {
                return Err(Error::IndexOutOfRange { index: i.max(j), max: r.saturating_sub(1) });
            }
            let lp = LambdaPoly::from_coeffs(lp.coeffs().iter().map(|x| basis.normalize(x)).collect());
            given.entry((i, j)).or_insert_with(LambdaPoly::zero).add_assign(&lp);
        }
        let mut table = ProductTable::zeros(r, r);
        for i in 0..r {
            for j in 0..r {
                let direct = given.get(&(i, j));
                let mirror = given.get(&(j, i)).map(|t| mirror_of(&basis, j, i, t));
                let value = match (direct, mirror) {
                    (Some(d), Some(m)) => {
                        if *d != m {
                            return Err(Error::ClosureFailure(format!(
                                "bracket of ({}, {}) disagrees with the skew-symmetric mirror",
                                basis.name(i),
                                basis.name(j)
                            )));
                        }
                        d.clone()
                    }
                    (Some(d), None) => d.clone(),
                    (None, Some(m)) => m,
                    (None, None) => LambdaPoly::zero(),
                };
                table.set(i, j, value);
            }
        }
        Self::new(name, basis, table)
    }

    /// Builds an algebra from n-th products `(i, j, n, a^i_(n)a^j)`.
    pub fn from_products(
        name: impl Into<String>,
        gens: Vec<Generator>,
        products: impl IntoIterator<Item = (usize, usize, usize, Element)>,
    ) -> Result<Self> {
        let mut brackets: HashMap<(usize, usize), LambdaPoly> = HashMap::new();
        for (i, j, n, x) in products {
            let c = Scalar::factorial(n).inv();
            brackets.entry((i, j)).or_insert_with(LambdaPoly::zero).add_scaled_at(n, &x, &c);
        }
        let mut items: Vec<_> = brackets.into_iter().collect();
        items.sort_by_key(|(k, _)| *k);
        Self::from_brackets(name, gens, items)
    }

    /// Algebra with the given generators and all products zero.
    pub fn abelian(name: impl Into<String>, gens: Vec<Generator>) -> Self {
        let r = gens.len();
        ConformalSuperalgebra { name: name.into(), basis: Basis::new(gens), table: ProductTable::zeros(r, r) }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn table(&self) -> &ProductTable {
        &self.table
    }

    /// Number of generators, free and torsion.
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn size(&self) -> Size {
        let d = self.basis.torsion_dim();
        Size { r: self.basis.free_rank(), d }
    }

    pub fn generator(&self, i: usize) -> &Generator {
        self.basis.get(i)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.index_of(name)
    }

    pub fn gen(&self, i: usize) -> Element {
        Element::unit(i)
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.basis.parity(i)
    }

    /// `a^i_λ a^j` as stored.
    pub fn gen_bracket(&self, i: usize, j: usize) -> &LambdaPoly {
        self.table.get(i, j)
    }

    pub fn gen_product(&self, i: usize, j: usize, n: usize) -> Element {
        self.table.get(i, j).nth(n)
    }

    /// `N_ij`: products `a^i_(n)a^j` vanish for `n >= N_ij`.
    pub fn order_bound(&self, i: usize, j: usize) -> usize {
        self.table.get(i, j).order()
    }

    pub fn max_order(&self) -> usize {
        self.table.max_order()
    }

    fn check_element(&self, x: &Element) -> Result<()> {
        match x.max_index() {
            Some(k) if k >= self.rank() => Err(Error::AlgebraMismatch),
            _ => Ok(()),
        }
    }

    /// `[x_λ y]` for arbitrary elements.
    pub fn bracket(&self, x: &Element, y: &Element) -> Result<LambdaPoly> {
        self.check_element(x)?;
        self.check_element(y)?;
        Ok(self.table.bracket(&self.basis, &self.basis.normalize(x), &self.basis.normalize(y)))
    }

    pub fn nth_product(&self, x: &Element, y: &Element, n: usize) -> Result<Element> {
        Ok(self.bracket(x, y)?.nth(n))
    }

    /// `p(∂)·x`.
    pub fn apply_d(&self, p: &DPoly, x: &Element) -> Element {
        self.basis.apply(p, x)
    }

    pub fn display(&self, x: &Element) -> String {
        self.basis.display(x)
    }

    /// All nonzero generator products ordered by `(i, j, n)`.
    pub fn lambda_table(&self) -> Vec<TableRow> {
        let mut rows = Vec::new();
        for a in 0..self.rank() {
            for b in 0..self.rank() {
                for (n, value) in self.table.get(a, b).products().into_iter().enumerate() {
                    if !value.is_zero() {
                        rows.push(TableRow { a, b, n, value });
                    }
                }
            }
        }
        rows
    }

    /// Copy with one generator product replaced; no mirror completion.
    pub fn with_raw_product(&self, i: usize, j: usize, n: usize, value: Element) -> Self {
        let mut out = self.clone();
        let mut coeffs = self.table.get(i, j).coeffs().to_vec();
        if coeffs.len() <= n {
            coeffs.resize(n + 1, Element::zero());
        }
        coeffs[n] = value.scale(&Scalar::factorial(n).inv());
        out.table.set(i, j, LambdaPoly::from_coeffs(coeffs));
        out
    }

    /// Checks the derivation rules, skew-symmetry, Jacobi, parity and torsion conditions on generators.
    pub fn check_axioms(&self) -> AxiomReport {
        self.check_axioms_with_depth(SHIFT_DEPTH)
    }

    pub fn check_axioms_with_depth(&self, shift_depth: usize) -> AxiomReport {
        let mut report = AxiomReport::default();
        let r = self.rank();
        let b = &self.basis;
        parity_violations(b, b, &self.table, &mut report.violations);
        torsion_violations(b, b, &self.table, &mut report.violations);
        for i in 0..r {
            for j in 0..r {
                report.pairs_checked += 1;
                if j >= i {
                    self.skew_violations(i, j, &mut report.violations);
                }
                shift_violations(b, b, &self.table, i, j, shift_depth, &mut report.violations);
            }
        }
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    report.triples_checked += 1;
                    report.violations.extend(jacobi_violations(self, b, &self.table, i, j, k));
                }
            }
        }
        report
    }

    fn skew_violations(&self, i: usize, j: usize, out: &mut Vec<Violation>) {
        let direct = self.table.get(i, j);
        let mirror = mirror_of(&self.basis, j, i, self.table.get(j, i));
        if *direct == mirror {
            return;
        }
        for n in 0..direct.order().max(mirror.order()) {
            let (l, rr) = (direct.nth(n), mirror.nth(n));
            if l != rr {
                out.push(violation(
                    &self.basis,
                    Axiom::Skew,
                    vec![self.basis.name(i).into(), self.basis.name(j).into()],
                    None,
                    n,
                    l,
                    rr,
                ));
            }
        }
    }
}

/// `-(−1)^{p(a)p(b)} [b_{-λ-∂} a]`, the value of `[a_λ b]` forced by `[b_λ a] = t`.
pub(crate) fn mirror_of(basis: &Basis, j: usize, i: usize, t: &LambdaPoly) -> LambdaPoly {
    let sign = -basis.parity(i).koszul(basis.parity(j));
    t.reflect(basis).scale(&sign)
}

fn violation(
    target: &Basis,
    axiom: Axiom,
    gens: Vec<String>,
    m: Option<usize>,
    n: usize,
    lhs: Element,
    rhs: Element,
) -> Violation {
    let lhs_text = target.display(&lhs);
    let rhs_text = target.display(&rhs);
    Violation { axiom, gens, m, n, lhs, rhs, lhs_text, rhs_text }
}

/// Wrong-parity components in generator products.
pub(crate) fn parity_violations(src: &Basis, tgt: &Basis, table: &ProductTable, out: &mut Vec<Violation>) {
    for i in 0..table.rows() {
        for j in 0..table.cols() {
            let expected = src.parity(i).add(tgt.parity(j));
            for (n, x) in table.get(i, j).products().into_iter().enumerate() {
                let wrong = Element::from_terms(
                    x.terms().filter(|(k, _)| tgt.parity(*k) != expected).map(|(k, p)| (k, p.clone())),
                );
                if !wrong.is_zero() {
                    out.push(violation(
                        tgt,
                        Axiom::Parity,
                        vec![src.name(i).into(), tgt.name(j).into()],
                        None,
                        n,
                        x,
                        Element::zero(),
                    ));
                }
            }
        }
    }
}

/// Torsion generators must have vanishing brackets in both slots.
pub(crate) fn torsion_violations(src: &Basis, tgt: &Basis, table: &ProductTable, out: &mut Vec<Violation>) {
    for i in 0..table.rows() {
        for j in 0..table.cols() {
            if !(src.get(i).is_torsion() || tgt.get(j).is_torsion()) {
                continue;
            }
            for (n, x) in table.get(i, j).products().into_iter().enumerate() {
                if !x.is_zero() {
                    out.push(violation(
                        tgt,
                        Axiom::Torsion,
                        vec![src.name(i).into(), tgt.name(j).into()],
                        None,
                        n,
                        x,
                        Element::zero(),
                    ));
                }
            }
        }
    }
}

/// Re-derives `(∂^k a)_(n)(∂^l b)` by the derivation recursions and compares
/// with the sesquilinear extension, for `k, l <= depth`.
pub(crate) fn shift_violations(
    src: &Basis,
    tgt: &Basis,
    table: &ProductTable,
    i: usize,
    j: usize,
    depth: usize,
    out: &mut Vec<Violation>,
) {
    let base = table.get(i, j);
    let ks = if src.get(i).is_torsion() { 0 } else { depth };
    let ls = if tgt.get(j).is_torsion() { 0 } else { depth };
    // memo[k][l] = products (∂^k a)_(n)(∂^l b) for n < base.order() + k + l
    let mut memo: Vec<Vec<Vec<Element>>> = vec![vec![Vec::new(); ls + 1]; ks + 1];
    memo[0][0] = base.products();
    for l in 1..=ls {
        let prev = memo[0][l - 1].clone();
        let len = prev.len() + usize::from(!prev.is_empty());
        let mut cur = Vec::with_capacity(len);
        for n in 0..len {
            let mut x = prev.get(n).map(|p| tgt.d_pow(1, p)).unwrap_or_default();
            if n > 0 {
                if let Some(p) = prev.get(n - 1) {
                    x.add_scaled(p, &Scalar::from_int(n as i64));
                }
            }
            cur.push(x);
        }
        memo[0][l] = cur;
    }
    for k in 1..=ks {
        for l in 0..=ls {
            let prev = memo[k - 1][l].clone();
            let len = prev.len() + usize::from(!prev.is_empty());
            let cur = (0..len)
                .map(|n| match n.checked_sub(1).and_then(|m| prev.get(m)) {
                    Some(p) => p.scale(&Scalar::from_int(-(n as i64))),
                    None => Element::zero(),
                })
                .collect();
            memo[k][l] = cur;
        }
    }
    for k in 0..=ks {
        for l in 0..=ls {
            if k + l == 0 {
                continue;
            }
            let x = src.d_pow(k, &Element::unit(i));
            let y = tgt.d_pow(l, &Element::unit(j));
            let direct = table.bracket(tgt, &x, &y);
            let expected = &memo[k][l];
            let len = direct.order().max(expected.len());
            for n in 0..len {
                let e = expected.get(n).cloned().unwrap_or_default();
                let d = direct.nth(n);
                if d != e {
                    let axiom = if k > 0 { Axiom::DerivLeft } else { Axiom::DerivRight };
                    out.push(violation(
                        tgt,
                        axiom,
                        vec![format!("d^{k} {}", src.name(i)), format!("d^{l} {}", tgt.name(j))],
                        None,
                        n,
                        d,
                        e,
                    ));
                }
            }
        }
    }
}

/// Coefficients of a polynomial in two variables `λ^k μ^n`.
type BiPoly = HashMap<(usize, usize), Element>;

fn bi_add(p: &mut BiPoly, k: usize, n: usize, x: &Element, c: &Scalar) {
    if x.is_zero() || c.is_zero() {
        return;
    }
    let e = p.entry((k, n)).or_default();
    e.add_scaled(x, c);
}

/// Checks `[a_λ [b_μ c]] = [[a_λ b]_{λ+μ} c] + (−1)^{p(a)p(b)} [b_μ [a_λ c]]`
/// where `a, b` are algebra generators and `c` a generator of the target
/// (the algebra itself, or a module acted on through `action`).
/// Violations are reported per `(m, n)` as `a_(m)(b_(n)c)` against the
/// right-hand side.
pub(crate) fn jacobi_violations(
    alg: &ConformalSuperalgebra,
    tgt: &Basis,
    action: &ProductTable,
    a: usize,
    b: usize,
    c: usize,
) -> Vec<Violation> {
    let ea = Element::unit(a);
    let eb = Element::unit(b);
    let one = Scalar::one();
    let mut lhs: BiPoly = HashMap::new();
    let mut rhs: BiPoly = HashMap::new();
    // [a_λ [b_μ c]]
    for (n, x) in action.get(b, c).coeffs().iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (k, y) in action.bracket(tgt, &ea, x).coeffs().iter().enumerate() {
            bi_add(&mut lhs, k, n, y, &one);
        }
    }
    // (−1)^{p(a)p(b)} [b_μ [a_λ c]]
    let sign = alg.parity(a).koszul(alg.parity(b));
    for (k, x) in action.get(a, c).coeffs().iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (n, y) in action.bracket(tgt, &eb, x).coeffs().iter().enumerate() {
            bi_add(&mut rhs, k, n, y, &sign);
        }
    }
    // [[a_λ b]_{λ+μ} c]
    let ec = Element::unit(c);
    for (j, z) in alg.gen_bracket(a, b).coeffs().iter().enumerate() {
        if z.is_zero() {
            continue;
        }
        for (s, w) in action.bracket(tgt, z, &ec).coeffs().iter().enumerate() {
            for t in 0..=s {
                bi_add(&mut rhs, j + t, s - t, w, &Scalar::binomial(s as i64, t));
            }
        }
    }
    let mut keys: Vec<(usize, usize)> = lhs.keys().chain(rhs.keys()).copied().collect();
    keys.sort_unstable();
    keys.dedup();
    let mut out = Vec::new();
    for (m, n) in keys {
        let l = lhs.get(&(m, n)).cloned().unwrap_or_default();
        let r = rhs.get(&(m, n)).cloned().unwrap_or_default();
        if l != r {
            let scale = &Scalar::factorial(m) * &Scalar::factorial(n);
            out.push(violation(
                tgt,
                Axiom::Jacobi,
                vec![alg.basis().name(a).into(), alg.basis().name(b).into(), tgt.name(c).into()],
                Some(m),
                n,
                l.scale(&scale),
                r.scale(&scale),
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vir() -> ConformalSuperalgebra {
        ConformalSuperalgebra::from_products(
            "vir",
            vec![Generator::even("L")],
            vec![
                (0, 0, 0, Element::term(0, DPoly::d())),
                (0, 0, 1, Element::term(0, DPoly::from_ints(&[2]))),
            ],
        )
        .unwrap()
    }

    #[test]
    fn virasoro_passes() {
        let report = vir().check_axioms();
        assert!(report.passed(), "{:?}", report.violations);
    }

    #[test]
    fn corrupted_virasoro_jacobi_witness() {
        let v = vir();
        let bad = v.with_raw_product(0, 0, 1, Element::term(0, DPoly::from_ints(&[3])));
        let report = bad.check_axioms();
        let w = report
            .violations
            .iter()
            .find(|x| x.axiom == Axiom::Jacobi && x.m == Some(1) && x.n == 1)
            .expect("jacobi violation at m=n=1");
        assert_eq!(w.lhs, Element::term(0, DPoly::from_ints(&[9])));
        assert_eq!(w.rhs, Element::term(0, DPoly::from_ints(&[12])));
    }

    #[test]
    fn mismatched_mirror_is_rejected() {
        let gens = vec![Generator::even("a"), Generator::even("b")];
        let bad = ConformalSuperalgebra::from_products(
            "x",
            gens,
            vec![(0, 1, 0, Element::unit(0)), (1, 0, 0, Element::unit(0))],
        );
        assert!(bad.is_err());
    }

    #[test]
    fn out_of_range_element_is_mismatch() {
        let v = vir();
        assert_eq!(v.nth_product(&Element::unit(3), &Element::unit(0), 0), Err(Error::AlgebraMismatch));
    }
}
