//! Conformal modules over a finite conformal superalgebra.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::{
    jacobi_violations, parity_violations, shift_violations, torsion_violations, Axiom, AxiomReport,
    ConformalSuperalgebra, TableRow, SHIFT_DEPTH,
};
use crate::constructions::{current, semidirect_vir_current, virasoro};
use crate::dpoly::DPoly;
use crate::element::{Basis, Element, Generator, LambdaPoly, ProductTable};
use crate::error::{Error, Result};
use crate::gc::{gc_nth_product, GcElement};
use crate::lie::LieSuperalgebraData;
use crate::linalg::{Matrix, RowReducer, SparseVec};
use crate::pdmatrix::{PdMatrix, Size};
use crate::scalar::Scalar;
use crate::structure::annihilator;
use crate::submodule::Submodule;

/// A module `M` over `R`, free over C[∂] up to explicit torsion generators.
/// `action(i, β)` stores `[a^i_λ v^β]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConformalModule {
    name: String,
    algebra: Arc<ConformalSuperalgebra>,
    basis: Basis,
    action: ProductTable,
}

impl ConformalModule {
    /// Builds a module from n-th actions `(i, β, n, a^i_(n)v^β)`.
    pub fn from_actions(
        name: impl Into<String>,
        algebra: Arc<ConformalSuperalgebra>,
        gens: Vec<Generator>,
        actions: impl IntoIterator<Item = (usize, usize, usize, Element)>,
    ) -> Result<Self> {
        let basis = Basis::new(gens);
        let mut table = ProductTable::zeros(algebra.rank(), basis.len());
        let mut acc: BTreeMap<(usize, usize), LambdaPoly> = BTreeMap::new();
        for (i, b, n, x) in actions {
            if i >= algebra.rank() {
                return Err(Error::IndexOutOfRange { index: i, max: algebra.rank().saturating_sub(1) });
            }
            if b >= basis.len() || x.max_index().is_some_and(|k| k >= basis.len()) {
                return Err(Error::IndexOutOfRange {
                    index: b.max(x.max_index().unwrap_or(0)),
                    max: basis.len().saturating_sub(1),
                });
            }
            let x = basis.normalize(&x);
            acc.entry((i, b)).or_insert_with(LambdaPoly::zero).add_scaled_at(n, &x, &Scalar::factorial(n).inv());
        }
        for ((i, b), lp) in acc {
            table.set(i, b, lp);
        }
        Ok(ConformalModule { name: name.into(), algebra, basis, action: table })
    }

    /// Module with every action zero.
    pub fn trivial_action(name: impl Into<String>, algebra: Arc<ConformalSuperalgebra>, gens: Vec<Generator>) -> Self {
        let basis = Basis::new(gens);
        let action = ProductTable::zeros(algebra.rank(), basis.len());
        ConformalModule { name: name.into(), algebra, basis, action }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn algebra(&self) -> &ConformalSuperalgebra {
        &self.algebra
    }

    pub fn algebra_arc(&self) -> &Arc<ConformalSuperalgebra> {
        &self.algebra
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn table(&self) -> &ProductTable {
        &self.action
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn size(&self) -> Size {
        Size { r: self.basis.free_rank(), d: self.basis.torsion_dim() }
    }

    pub fn max_order(&self) -> usize {
        self.action.max_order()
    }

    /// `a^i_(n) v^β`.
    pub fn gen_action(&self, i: usize, b: usize, n: usize) -> Element {
        self.action.get(i, b).nth(n)
    }

    /// `[x_λ v]`.
    pub fn act_lambda(&self, x: &Element, v: &Element) -> Result<LambdaPoly> {
        if x.max_index().is_some_and(|k| k >= self.algebra.rank())
            || v.max_index().is_some_and(|k| k >= self.rank())
        {
            return Err(Error::AlgebraMismatch);
        }
        Ok(self.action.bracket(&self.basis, &self.algebra.basis().normalize(x), &self.basis.normalize(v)))
    }

    /// `x_(n) v`.
    pub fn act(&self, x: &Element, v: &Element, n: usize) -> Result<Element> {
        Ok(self.act_lambda(x, v)?.nth(n))
    }

    /// Nonzero actions `a^i_(n)v^β` as table rows.
    pub fn action_rows(&self) -> Vec<TableRow> {
        let mut rows = Vec::new();
        for a in 0..self.algebra.rank() {
            for b in 0..self.rank() {
                for (n, value) in self.action.get(a, b).products().into_iter().enumerate() {
                    if !value.is_zero() {
                        rows.push(TableRow { a, b, n, value });
                    }
                }
            }
        }
        rows
    }

    /// Copy with one action replaced.
    pub fn with_raw_action(&self, i: usize, b: usize, n: usize, value: Element) -> Self {
        let mut out = self.clone();
        let mut coeffs = self.action.get(i, b).coeffs().to_vec();
        if coeffs.len() <= n {
            coeffs.resize(n + 1, Element::zero());
        }
        coeffs[n] = self.basis.normalize(&value).scale(&Scalar::factorial(n).inv());
        out.action.set(i, b, LambdaPoly::from_coeffs(coeffs));
        out
    }

    /// Checks the module Jacobi identity on all generator triples, the
    /// derivation rules on ∂-shifted generators, parity, and that torsion
    /// vectors are annihilated.
    pub fn check(&self) -> AxiomReport {
        self.check_with_depth(SHIFT_DEPTH)
    }

    pub fn check_with_depth(&self, shift_depth: usize) -> AxiomReport {
        let mut report = AxiomReport::default();
        let src = self.algebra.basis();
        parity_violations(src, &self.basis, &self.action, &mut report.violations);
        torsion_violations(src, &self.basis, &self.action, &mut report.violations);
        let r = self.algebra.rank();
        for i in 0..r {
            for b in 0..self.rank() {
                report.pairs_checked += 1;
                let mut out = Vec::new();
                shift_violations(src, &self.basis, &self.action, i, b, shift_depth, &mut out);
                report.violations.extend(out.into_iter().map(|mut v| {
                    v.axiom = Axiom::ModuleDeriv;
                    v
                }));
            }
        }
        for i in 0..r {
            for j in 0..r {
                for b in 0..self.rank() {
                    report.triples_checked += 1;
                    let found = jacobi_violations(&self.algebra, &self.basis, &self.action, i, j, b);
                    report.violations.extend(found.into_iter().map(|mut v| {
                        v.axiom = Axiom::ModuleJacobi;
                        v
                    }));
                }
            }
        }
        report
    }

    /// The module with `∂` replaced by `∂ + a`: actions are rewritten in the
    /// new derivation and torsion eigenvalues shift by `a`.
    pub fn twist(&self, a: &Scalar) -> ConformalModule {
        let gens = self
            .basis
            .gens()
            .iter()
            .map(|g| match &g.torsion {
                Some(c) => Generator::new(g.name.clone(), g.parity).with_torsion(c + a),
                None => g.clone(),
            })
            .collect();
        let basis = Basis::new(gens);
        let neg = -a;
        let mut action = ProductTable::zeros(self.action.rows(), self.action.cols());
        for i in 0..self.action.rows() {
            for b in 0..self.action.cols() {
                let coeffs = self
                    .action
                    .get(i, b)
                    .coeffs()
                    .iter()
                    .map(|x| basis.normalize(&Element::from_terms(x.terms().map(|(k, p)| (k, p.translate(&neg))))))
                    .collect();
                action.set(i, b, LambdaPoly::from_coeffs(coeffs));
            }
        }
        ConformalModule { name: self.name.clone(), algebra: self.algebra.clone(), basis, action }
    }

    /// Equal to `other` after replacing `∂` by `∂ + a` in `self`.
    pub fn equivalent_up_to_shift(&self, other: &ConformalModule, a: &Scalar) -> bool {
        let t = self.twist(a);
        t.basis == other.basis && t.action == other.action && *t.algebra == *other.algebra
    }

    /// Is `s` stable under all generator actions?
    pub fn is_submodule(&self, s: &Submodule) -> bool {
        if s.ambient() != &self.basis {
            return false;
        }
        for i in 0..self.algebra.rank() {
            let a = Element::unit(i);
            for v in s.generators() {
                let lp = self.action.bracket(&self.basis, &a, v);
                if lp.coeffs().iter().any(|x| !s.contains(x)) {
                    return false;
                }
            }
        }
        true
    }

    /// Least submodule containing `seeds`.
    pub fn submodule_closure(&self, seeds: &[Element]) -> Submodule {
        let mut s = Submodule::new(&self.basis, seeds);
        loop {
            let mut extra = Vec::new();
            for i in 0..self.algebra.rank() {
                let a = Element::unit(i);
                for v in s.generators() {
                    let lp = self.action.bracket(&self.basis, &a, v);
                    extra.extend(lp.coeffs().iter().filter(|x| !s.contains(x)).cloned());
                }
            }
            if extra.is_empty() {
                s.closed = Some(true);
                return s;
            }
            s = s.join(&extra);
        }
    }

    /// Joint kernel of all actions `a^i_(n)`.
    ///
    /// For `v = Σ p_β(∂)v^β`, `[a_λ v] = Σ_β p_β(λ+∂)[a_λ v^β]`; in the
    /// variables `x = λ+∂` and `∂` this is a C[x]-linear system.
    pub fn invariants(&self) -> Submodule {
        let free: Vec<usize> = (0..self.rank()).filter(|&b| !self.basis.get(b).is_torsion()).collect();
        let mut seeds: Vec<Element> =
            (0..self.rank()).filter(|&b| self.basis.get(b).is_torsion()).map(Element::unit).collect();
        let mut rows: Vec<Vec<DPoly>> = Vec::new();
        for i in 0..self.algebra.rank() {
            // (target γ, ∂-power e) -> per-column polynomial in x
            let mut block: BTreeMap<(usize, usize), Vec<DPoly>> = BTreeMap::new();
            for (col, &b) in free.iter().enumerate() {
                for (k, y) in self.action.get(i, b).coeffs().iter().enumerate() {
                    for (gamma, q) in y.terms() {
                        let eigen = self.basis.get(gamma).torsion.clone();
                        // (x - ∂)^k q(∂), expanded in ∂ with C[x] coefficients
                        for (e, qc) in q.coeffs().iter().enumerate() {
                            if qc.is_zero() {
                                continue;
                            }
                            for t in 0..=k {
                                // C(k,t) x^{k-t} (-∂)^t ∂^e
                                let c = &(qc * &Scalar::binomial(k as i64, t)) * &Scalar::sign(t);
                                let x_poly = DPoly::monomial(c, k - t);
                                let (key, poly) = match &eigen {
                                    Some(ev) => ((gamma, 0), x_poly.scale(&ev.pow(t + e))),
                                    None => ((gamma, t + e), x_poly),
                                };
                                let entry = block.entry(key).or_insert_with(|| vec![DPoly::zero(); free.len()]);
                                entry[col] = &entry[col] + &poly;
                            }
                        }
                    }
                }
            }
            rows.extend(block.into_values());
        }
        if rows.is_empty() {
            seeds.extend(free.iter().map(|&b| Element::unit(b)));
        } else {
            for col in PdMatrix::from_rows(&rows).kernel().columns() {
                seeds.push(Element::from_terms(free.iter().zip(col).map(|(&b, p)| (b, p))));
            }
        }
        let mut s = Submodule::new(&self.basis, &seeds);
        s.closed = Some(true);
        s
    }

    /// Whether `0 → S → M → M/S → 0` splits as modules.
    ///
    /// A section sends each generator image to `v^β + s_β` with `s_β ∈ S`;
    /// the relations of `M/S` and equivariance are linear conditions on the
    /// coefficients of `s_β`, taken with polynomial degree at most
    /// `degree_bound` over the generators of `S`. With `S` torsion (or when
    /// a solution is found) the answer is exact.
    pub fn is_split(&self, sub: &Submodule, degree_bound: usize) -> Result<bool> {
        if !self.is_submodule(sub) {
            return Err(Error::NotASubmodule(sub.display()));
        }
        let n = self.rank();
        let sgens = sub.generators();
        let dpow = degree_bound + 1;
        // unknown index: (β, t, e) -> coefficient of ∂^e g_t in s_β
        let unknowns = n * sgens.len() * dpow;
        let var = |b: usize, t: usize, e: usize| (b * sgens.len() + t) * dpow + e;
        // basis elements ∂^e g_t as module elements
        let shifted: Vec<Vec<Element>> =
            sgens.iter().map(|g| (0..dpow).map(|e| self.basis.d_pow(e, g)).collect()).collect();
        let mut red = RowReducer::new(unknowns + 1);
        let push = |eqs: BTreeMap<usize, Element>, constant: Element, red: &mut RowReducer| {
            // Σ_var coeff·eqs[var] + constant = 0, coordinate-wise
            let mut rows: BTreeMap<(usize, usize), SparseVec> = BTreeMap::new();
            for (v, x) in eqs {
                for (key, c) in coordinates(&x) {
                    rows.entry(key).or_default().insert(v, c);
                }
            }
            for (key, c) in coordinates(&constant) {
                rows.entry(key).or_default().insert(unknowns, c);
            }
            for (_, row) in rows {
                red.insert(row);
            }
        };
        // relations: h + Σ_β h_β(∂) s_β = 0 for each relation column h of M/S
        let mut relations: Vec<Vec<DPoly>> = sub.basis_matrix().columns();
        for b in 0..n {
            if let Some(c) = &self.basis.get(b).torsion {
                let mut col = vec![DPoly::zero(); n];
                col[b] = DPoly::from_coeffs(vec![-c, Scalar::one()]);
                relations.push(col);
            }
        }
        for h in &relations {
            let mut eqs: BTreeMap<usize, Element> = BTreeMap::new();
            for (b, hb) in h.iter().enumerate() {
                if hb.is_zero() {
                    continue;
                }
                for t in 0..sgens.len() {
                    for e in 0..dpow {
                        add_eq(&mut eqs, var(b, t, e), self.basis.apply(hb, &shifted[t][e]));
                    }
                }
            }
            push(eqs, self.basis.from_vec(h), &mut red);
        }
        // equivariance: a_(m) s_β = Σ_γ u_γ(∂) s_γ where a_(m)v^β = Σ u_γ v^γ
        for i in 0..self.algebra.rank() {
            let a = Element::unit(i);
            for b in 0..n {
                let image = self.action.get(i, b);
                for m in 0..self.max_order() + dpow {
                    let mut eqs: BTreeMap<usize, Element> = BTreeMap::new();
                    for t in 0..sgens.len() {
                        for e in 0..dpow {
                            let lhs = self.action.bracket(&self.basis, &a, &shifted[t][e]).nth(m);
                            add_eq(&mut eqs, var(b, t, e), lhs);
                        }
                    }
                    let target = image.nth(m);
                    for (g, u) in target.terms() {
                        for t in 0..sgens.len() {
                            for e in 0..dpow {
                                let x = self.basis.apply(u, &shifted[t][e]);
                                add_eq(&mut eqs, var(g, t, e), -&x);
                            }
                        }
                    }
                    push(eqs, Element::zero(), &mut red);
                }
            }
        }
        Ok(red.particular_solution(unknowns).is_some())
    }

    /// For a free module of rank 1: irreducible iff the coefficients of all
    /// `[a_λ v]` have no common factor of positive degree. Returns the monic
    /// gcd as witness (`p(∂)v` generates an invariant proper submodule when
    /// `deg p >= 1`; zero means every submodule is invariant).
    pub fn irreducibility_rank1(&self) -> Result<(bool, DPoly)> {
        if self.rank() != 1 {
            return Err(Error::RankNotOne(self.rank()));
        }
        if !self.basis.is_free() {
            return Err(Error::NotFree);
        }
        let mut g = DPoly::zero();
        for i in 0..self.algebra.rank() {
            for y in self.action.get(i, 0).coeffs() {
                g = g.gcd(&y.get(0));
            }
        }
        let irreducible = !g.is_zero() && g.degree() == Some(0);
        Ok((irreducible, g.monic()))
    }

    pub fn is_irreducible_rank1(&self) -> Result<bool> {
        Ok(self.irreducibility_rank1()?.0)
    }

    /// Representation matrices in `gc_N` for each algebra generator.
    pub fn rep_to_gc(&self) -> Result<GcReport> {
        if !self.basis.is_free() {
            return Err(Error::NotFree);
        }
        let n = self.rank();
        let images: Vec<GcElement> = (0..self.algebra.rank())
            .map(|i| {
                let modes = (0..self.action.get(i, 0).order().max(self.max_order())).map(|k| {
                    let cols: Vec<Vec<DPoly>> = (0..n).map(|b| self.basis.to_vec(&self.gen_action(i, b, k))).collect();
                    (k, PdMatrix::from_columns(n, &cols))
                });
                GcElement::from_modes(n, modes.collect::<Vec<_>>())
                    .expect("square blocks")
                    .with_parity(self.algebra.parity(i))
            })
            .collect();
        let mut failures = Vec::new();
        let mut checked = 0;
        let r = self.algebra.rank();
        for i in 0..r {
            for j in 0..r {
                for m in 0..=self.algebra.order_bound(i, j) {
                    checked += 1;
                    let expected = self.gc_image(&images, &self.algebra.gen_product(i, j, m));
                    let got = gc_nth_product(&images[i], &images[j], m)?;
                    if expected != got {
                        failures.push((i, j, m));
                    }
                }
            }
        }
        let kernel = annihilator(self.algebra.basis(), &self.basis, &self.action);
        let torsion = self.algebra.basis().torsion_dim() > 0;
        Ok(GcReport { images, failures, pairs_checked: checked, faithful: kernel.is_empty() && !torsion, kernel })
    }

    fn gc_image(&self, images: &[GcElement], x: &Element) -> GcElement {
        let mut out = GcElement::zero(self.rank());
        for (k, p) in x.terms() {
            out = out.add(&images[k].apply_poly(p)).expect("same size");
        }
        out
    }

    /// Direct sum; both modules must be over the same algebra.
    pub fn direct_sum(&self, other: &ConformalModule) -> Result<ConformalModule> {
        if *self.algebra != *other.algebra {
            return Err(Error::AlgebraMismatch);
        }
        let mut gens: Vec<Generator> = self.basis.gens().to_vec();
        for g in other.basis.gens() {
            let mut g = g.clone();
            while gens.iter().any(|h| h.name == g.name) {
                g.name.push('\'');
            }
            gens.push(g);
        }
        let off = self.rank();
        let mut action = ProductTable::zeros(self.algebra.rank(), off + other.rank());
        for i in 0..self.algebra.rank() {
            for b in 0..self.rank() {
                action.set(i, b, self.action.get(i, b).clone());
            }
            for b in 0..other.rank() {
                let lp = other.action.get(i, b);
                let coeffs = lp.coeffs().iter().map(|x| x.reindex(|k| k + off)).collect();
                action.set(i, b + off, LambdaPoly::from_coeffs(coeffs));
            }
        }
        Ok(ConformalModule {
            name: format!("{}+{}", self.name, other.name),
            algebra: self.algebra.clone(),
            basis: Basis::new(gens),
            action,
        })
    }

    /// Human-readable table of nonzero actions.
    pub fn display_table(&self) -> String {
        let mut out = String::new();
        for row in self.action_rows() {
            out.push_str(&format!(
                "{}_({}){} = {}\n",
                self.algebra.basis().name(row.a),
                row.n,
                self.basis.name(row.b),
                self.basis.display(&row.value)
            ));
        }
        out
    }
}

fn add_eq(eqs: &mut BTreeMap<usize, Element>, v: usize, x: Element) {
    if x.is_zero() {
        return;
    }
    eqs.entry(v).or_default().add_assign(&x);
}

/// Scalar coordinates `((generator, ∂-power), c)` of a normalized element.
fn coordinates(x: &Element) -> Vec<((usize, usize), Scalar)> {
    let mut out = Vec::new();
    for (b, p) in x.terms() {
        for (e, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                out.push(((b, e), c.clone()));
            }
        }
    }
    out
}

/// Outcome of [`ConformalModule::rep_to_gc`].
#[derive(Clone, Debug)]
pub struct GcReport {
    pub images: Vec<GcElement>,
    /// `(i, j, m)` with `ρ(a^i_(m)a^j) ≠ ρ(a^i)_(m)ρ(a^j)`.
    pub failures: Vec<(usize, usize, usize)>,
    pub pairs_checked: usize,
    /// C[∂]-generators of the kernel of the representation (free part).
    pub kernel: Vec<Element>,
    pub faithful: bool,
}

impl GcReport {
    pub fn is_homomorphism(&self) -> bool {
        self.failures.is_empty()
    }
}

fn scalar_poly(c: &Scalar) -> DPoly {
    DPoly::constant(c.clone())
}

/// `M(α, Δ)` over Vir: `L_(0)v = (∂+α)v`, `L_(1)v = Δv`.
pub fn m_alpha_delta(alpha: &Scalar, delta: &Scalar) -> ConformalModule {
    let vir = Arc::new(virasoro());
    ConformalModule::from_actions(
        format!("M({alpha},{delta})"),
        vir,
        vec![Generator::even("v")],
        vec![
            (0, 0, 0, Element::term(0, DPoly::from_coeffs(vec![alpha.clone(), Scalar::one()]))),
            (0, 0, 1, Element::term(0, scalar_poly(delta))),
        ],
    )
    .expect("indices in range")
}

fn matrix_action(m: &Matrix, b: usize, extra: Option<DPoly>) -> Element {
    let mut x = Element::from_terms(
        (0..m.rows()).filter(|&g| !m.get(g, b).is_zero()).map(|g| (g, scalar_poly(m.get(g, b)))),
    );
    if let Some(p) = extra {
        x.add_term(b, &p);
    }
    x
}

fn unit_gens(prefix: &str, k: usize) -> Vec<Generator> {
    if k == 1 {
        return vec![Generator::even(prefix)];
    }
    (1..=k).map(|i| Generator::even(format!("{prefix}{i}"))).collect()
}

/// `M(A, B)` over Vir on `C[∂] ⊗ U`: `L_(0)u = (∂+A)u`, `L_(1)u = Bu`.
pub fn m_a_b(a: &Matrix, b: &Matrix) -> Result<ConformalModule> {
    if !a.is_square() || !b.is_square() || a.rows() != b.rows() {
        return Err(Error::DimensionMismatch { expected: a.rows(), found: b.rows() });
    }
    if !a.commutator(b)?.is_zero() {
        return Err(Error::NonCommuting);
    }
    let k = a.rows();
    let mut actions = Vec::new();
    for col in 0..k {
        actions.push((0, col, 0, matrix_action(a, col, Some(DPoly::d()))));
        actions.push((0, col, 1, matrix_action(b, col, None)));
    }
    ConformalModule::from_actions("M(A,B)", Arc::new(virasoro()), unit_gens("v", k), actions)
}

/// `C[∂] ⊗ U` over `current(g)` with `a_(0)u = au`.
pub fn current_module(g: &LieSuperalgebraData, rho: &[Matrix]) -> Result<ConformalModule> {
    g.check_representation(rho)?;
    let k = rho.first().map_or(0, Matrix::rows);
    let mut actions = Vec::new();
    for (i, m) in rho.iter().enumerate() {
        for col in 0..k {
            actions.push((i, col, 0, matrix_action(m, col, None)));
        }
    }
    ConformalModule::from_actions(format!("C[d]U over current({})", g.name()), Arc::new(current(g)), unit_gens("u", k), actions)
}

/// `C[∂] ⊗ U` over Vir+current(g): `L_(0)u = ∂u`, `L_(1)u = Δu`, `a_(0)u = au`.
pub fn vir_current_module(g: &LieSuperalgebraData, rho: &[Matrix], delta: &Scalar) -> Result<ConformalModule> {
    g.check_representation(rho)?;
    let alg = Arc::new(semidirect_vir_current(g)?);
    let k = rho.first().map_or(0, Matrix::rows);
    let mut actions = Vec::new();
    for col in 0..k {
        actions.push((0, col, 0, Element::term(col, DPoly::d())));
        actions.push((0, col, 1, Element::term(col, scalar_poly(delta))));
    }
    for (i, m) in rho.iter().enumerate() {
        for col in 0..k {
            actions.push((i + 1, col, 0, matrix_action(m, col, None)));
        }
    }
    ConformalModule::from_actions(format!("C[d]U over {}", alg.name()), alg, unit_gens("u", k), actions)
}

/// One-dimensional module `ℂ` with zero action and `∂` acting by `eigenvalue`.
pub fn trivial_module(algebra: Arc<ConformalSuperalgebra>, eigenvalue: &Scalar) -> ConformalModule {
    ConformalModule::trivial_action("C", algebra, vec![Generator::even("c").with_torsion(eigenvalue.clone())])
}

/// `M(α, 0)`, the middle term of `0 → M(α,1) → M(α,0) → ℂ → 0`.
pub fn ext_quotient(alpha: &Scalar) -> ConformalModule {
    m_alpha_delta(alpha, &Scalar::zero()).with_name(format!("ext_quotient({alpha})"))
}

/// The image of `M(α,1)` in [`ext_quotient`]: the submodule `C[∂](∂+α)v`.
pub fn ext_quotient_submodule(m: &ConformalModule, alpha: &Scalar) -> Submodule {
    Submodule::new(m.basis(), &[Element::term(0, DPoly::from_coeffs(vec![alpha.clone(), Scalar::one()]))])
}

/// `C[∂]v + ℂ` with `L_(0)v = (∂+α)v`, `L_(1)v = Δv`, `L_(Δ+1)v = 1`.
/// The trivial summand carries `∂ = -α`, as forced by the derivation rule.
pub fn ext_torsion_sub(alpha: &Scalar, delta: usize) -> Result<ConformalModule> {
    if !(1..=2).contains(&delta) {
        return Err(Error::OutOfRange(format!("Δ = {delta}; a non-split extension needs Δ ∈ {{1, 2}}")));
    }
    ConformalModule::from_actions(
        format!("ext_torsion_sub({alpha},{delta})"),
        Arc::new(virasoro()),
        vec![Generator::even("v"), Generator::even("c").with_torsion(-alpha)],
        vec![
            (0, 0, 0, Element::term(0, DPoly::from_coeffs(vec![alpha.clone(), Scalar::one()]))),
            (0, 0, 1, Element::term(0, DPoly::from_ints(&[delta as i64]))),
            (0, 0, delta + 1, Element::unit(1)),
        ],
    )
}

/// `C[∂] ⊗ g + ℂ` over `current(g)`: `a_(0)b = [a,b]`, `a_(1)b = (a|b)·1`
/// with the Killing form.
pub fn ext_killing(g: &LieSuperalgebraData) -> Result<ConformalModule> {
    let kappa = g.killing_form();
    let dim = g.dim();
    let mut gens: Vec<Generator> = (0..dim).map(|i| Generator::new(g.names()[i].clone(), g.parity(i))).collect();
    let name = if g.index_of("c").is_some() { "one" } else { "c" };
    gens.push(Generator::even(name).with_torsion(Scalar::zero()));
    let mut actions = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            let x = Element::from_terms(
                g.structure(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k, scalar_poly(c))),
            );
            actions.push((i, j, 0, x));
            let k = kappa.get(i, j);
            if !k.is_zero() {
                actions.push((i, j, 1, Element::term(dim, scalar_poly(k))));
            }
        }
    }
    ConformalModule::from_actions(format!("ext({})", g.name()), Arc::new(current(g)), gens, actions)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: i64) -> Scalar {
        Scalar::from_int(x)
    }

    #[test]
    fn m_alpha_delta_passes_and_corruption_fails() {
        let m = m_alpha_delta(&s(3), &s(2));
        assert!(m.check().passed(), "{:?}", m.check().violations);
        let bad = m.with_raw_action(0, 0, 2, Element::unit(0));
        let report = bad.check();
        assert!(report.count(Axiom::ModuleJacobi) > 0);
    }

    #[test]
    fn irreducibility_rank1() {
        assert!(m_alpha_delta(&s(1), &s(2)).is_irreducible_rank1().unwrap());
        let (irr, p) = m_alpha_delta(&s(1), &s(0)).irreducibility_rank1().unwrap();
        assert!(!irr);
        assert_eq!(p, DPoly::from_ints(&[1, 1]));
    }

    #[test]
    fn extensions_are_non_split() {
        for delta in [1, 2] {
            for alpha in [0, 5] {
                let m = ext_torsion_sub(&s(alpha), delta).unwrap();
                assert!(m.check().passed(), "{delta} {alpha} {:?}", m.check().violations);
                let sub = Submodule::new(m.basis(), &[Element::unit(1)]);
                assert!(!m.is_split(&sub, 3).unwrap());
                assert!(m.invariants().same_as(&sub));
            }
        }
        assert!(ext_torsion_sub(&s(0), 3).is_err());
    }

    #[test]
    fn direct_sum_splits() {
        let v = m_alpha_delta(&s(0), &s(1));
        let c = trivial_module(v.algebra_arc().clone(), &s(0));
        let sum = v.direct_sum(&c).unwrap();
        assert!(sum.check().passed());
        let sub = Submodule::new(sum.basis(), &[Element::unit(1)]);
        assert!(sum.is_split(&sub, 3).unwrap());
    }

    #[test]
    fn ext_a_quotient_is_trivial() {
        let m = ext_quotient(&s(2));
        let sub = ext_quotient_submodule(&m, &s(2));
        assert!(m.is_submodule(&sub));
        assert_eq!(sub.quotient_size(), Size { r: 0, d: 1 });
        assert!(!m.is_split(&sub, 3).unwrap());
    }

    #[test]
    fn killing_extension() {
        let m = ext_killing(&LieSuperalgebraData::sl2()).unwrap();
        assert!(m.check().passed(), "{:?}", m.check().violations);
        assert_eq!(m.gen_action(0, 1, 1), Element::term(3, DPoly::from_ints(&[4])));
        let sub = Submodule::new(m.basis(), &[Element::unit(3)]);
        assert!(!m.is_split(&sub, 3).unwrap());
    }

    #[test]
    fn gc_image_of_virasoro_module() {
        let rep = m_alpha_delta(&s(1), &s(2)).rep_to_gc().unwrap();
        assert!(rep.is_homomorphism(), "{:?}", rep.failures);
        assert!(rep.faithful);
        let g = LieSuperalgebraData::sl2();
        let zero = vec![Matrix::zeros(1, 1); 3];
        let rep = current_module(&g, &zero).unwrap().rep_to_gc().unwrap();
        assert!(rep.is_homomorphism());
        assert!(!rep.faithful);
    }

    #[test]
    fn twist_relates_alpha() {
        let a = m_alpha_delta(&s(3), &s(2));
        let b = m_alpha_delta(&s(1), &s(2));
        assert!(a.equivalent_up_to_shift(&b, &s(2)));
        assert!(!a.equivalent_up_to_shift(&b, &s(1)));
    }
}
