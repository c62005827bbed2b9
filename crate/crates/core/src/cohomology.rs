//! Scalar 2-cocycles, coboundaries, bounded `H²` and central extensions.
//!
//! A cocycle is stored through its generator values `α_n(a^i, a^j)`; on
//! ∂-shifted arguments `α_λ(p(∂)a, q(∂)b) = p(−λ)q(λ)α_λ(a, b)` with
//! `α_λ = Σ λ^n/n! α_n`. Torsion generators pair to zero.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::algebra::ConformalSuperalgebra;
use crate::dpoly::DPoly;
use crate::element::{Element, Generator, LambdaPoly, ProductTable};
use crate::error::{Error, Result};
use crate::linalg::{axpy, RowReducer, SparseVec};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCocycle {
    algebra: Arc<ConformalSuperalgebra>,
    /// `(i, j, n) -> α_n(a^i, a^j)` as given.
    values: BTreeMap<(usize, usize, usize), Scalar>,
}

impl TwoCocycle {
    pub fn new(algebra: Arc<ConformalSuperalgebra>) -> Self {
        TwoCocycle { algebra, values: BTreeMap::new() }
    }

    /// From `(i, j, n, α_n(a^i, a^j))`; pairs given in one order only are
    /// completed by the skew rule.
    pub fn from_values(
        algebra: Arc<ConformalSuperalgebra>,
        values: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Self> {
        let r = algebra.rank();
        let mut map = BTreeMap::new();
        for (i, j, n, v) in values {
            if i >= r || j >= r {
                return Err(Error::IndexOutOfRange { index: i.max(j), max: r.saturating_sub(1) });
            }
            if !v.is_zero() {
                let e: &mut Scalar = map.entry((i, j, n)).or_default();
                *e += &v;
            }
        }
        map.retain(|_, v: &mut Scalar| !v.is_zero());
        Ok(TwoCocycle { algebra, values: map })
    }

    pub fn algebra(&self) -> &ConformalSuperalgebra {
        &self.algebra
    }

    pub fn algebra_arc(&self) -> &Arc<ConformalSuperalgebra> {
        &self.algebra
    }

    pub fn stored(&self) -> impl Iterator<Item = (&(usize, usize, usize), &Scalar)> {
        self.values.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    fn has_pair(&self, i: usize, j: usize) -> bool {
        self.values.range((i, j, 0)..=(i, j, usize::MAX)).next().is_some()
    }

    /// `α_n(a^i, a^j)`, using the skew rule when only the mirror pair is stored.
    pub fn value(&self, i: usize, j: usize, n: usize) -> Scalar {
        if self.has_pair(i, j) {
            return self.values.get(&(i, j, n)).cloned().unwrap_or_default();
        }
        match self.values.get(&(j, i, n)) {
            Some(v) => v * &skew_sign(&self.algebra, i, j, n),
            None => Scalar::zero(),
        }
    }

    /// One past the largest stored `n`.
    pub fn order(&self) -> usize {
        self.values.keys().map(|k| k.2 + 1).max().unwrap_or(0)
    }

    /// `α_λ(a^i, a^j)` as λ-coefficients (`α_n / n!`).
    fn lambda_coeffs(&self, i: usize, j: usize) -> Vec<Scalar> {
        (0..self.order()).map(|n| &self.value(i, j, n) * &Scalar::factorial(n).inv()).collect()
    }

    /// Vector in the full coordinates `(i, j, n)`, `n < n_count`.
    fn full_vector(&self, n_count: usize) -> SparseVec {
        let r = self.algebra.rank();
        let mut v = SparseVec::new();
        for i in 0..r {
            for j in 0..r {
                for n in 0..n_count {
                    let x = self.value(i, j, n);
                    if !x.is_zero() {
                        v.insert(full_index(r, i, j, n), x);
                    }
                }
            }
        }
        v
    }

    /// Sum with another cocycle on the same algebra.
    pub fn add(&self, other: &TwoCocycle) -> Result<TwoCocycle> {
        if *self.algebra != *other.algebra {
            return Err(Error::AlgebraMismatch);
        }
        let r = self.algebra.rank();
        let n = self.order().max(other.order());
        let mut vals = Vec::new();
        for i in 0..r {
            for j in 0..r {
                for k in 0..n {
                    vals.push((i, j, k, &self.value(i, j, k) + &other.value(i, j, k)));
                }
            }
        }
        TwoCocycle::from_values(self.algebra.clone(), vals)
    }

    pub fn display(&self) -> String {
        let b = self.algebra.basis();
        let parts: Vec<String> =
            self.values.iter().map(|((i, j, n), v)| format!("a_{n}({}, {}) = {v}", b.name(*i), b.name(*j))).collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("; ")
        }
    }
}

/// `(−1)^{n+1+p(a)p(b)}`: `α_n(a, b) = sign·α_n(b, a)`.
fn skew_sign(alg: &ConformalSuperalgebra, i: usize, j: usize, n: usize) -> Scalar {
    let p = alg.parity(i).bit() * alg.parity(j).bit();
    Scalar::sign(n + 1 + p)
}

fn full_index(r: usize, i: usize, j: usize, n: usize) -> usize {
    (n * r + i) * r + j
}

/// Violated condition of a cocycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CocycleViolation {
    /// `α_n(a, b) ≠ (−1)^{n+1+p(a)p(b)} α_n(b, a)`.
    Skew { a: String, b: String, n: usize, lhs: Scalar, rhs: Scalar },
    /// Third condition at `α_m(a, b_(n)c)`.
    Jacobi { a: String, b: String, c: String, m: usize, n: usize, lhs: Scalar, rhs: Scalar },
    /// Nonzero value on a torsion generator.
    Torsion { a: String, b: String, n: usize },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CocycleReport {
    pub violations: Vec<CocycleViolation>,
    pub triples_checked: usize,
}

impl CocycleReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Linear forms in cocycle coordinates, keyed by the monomial `λ^m μ^n`.
type FormPoly = HashMap<(usize, usize), SparseVec>;

fn form_add(p: &mut FormPoly, m: usize, n: usize, var: usize, c: &Scalar) {
    if c.is_zero() {
        return;
    }
    let row = p.entry((m, n)).or_default();
    let e = row.entry(var).or_default();
    *e += c;
    if e.is_zero() {
        row.remove(&var);
    }
}

/// Expresses the third cocycle condition for generators `(a, b, c)` as
/// linear forms over the coordinates chosen by `coord(i, j, n)`, returning
/// `λ^m μ^n`-coefficients of `LHS − RHS` (scaled by `m! n!` to n-th products).
fn jacobi_forms(
    alg: &ConformalSuperalgebra,
    n_count: usize,
    coord: &dyn Fn(usize, usize, usize) -> Option<(usize, Scalar)>,
    a: usize,
    b: usize,
    c: usize,
) -> FormPoly {
    // λ-coefficient k of α_λ(g, h) is α_k(g, h)/k!
    let inv_fact: Vec<Scalar> = (0..n_count).map(|k| Scalar::factorial(k).inv()).collect();
    let mut out: FormPoly = HashMap::new();
    let one = Scalar::one();
    let neg = -&one;
    // α_λ(a, [b_μ c]) = Σ_n μ^n Σ_{(g,q)} q(λ) α_λ(a, g)
    for (n, x) in alg.gen_bracket(b, c).coeffs().iter().enumerate() {
        for (g, q) in x.terms() {
            for (e, qe) in q.coeffs().iter().enumerate() {
                for k in 0..n_count {
                    if let Some((var, s)) = coord(a, g, k) {
                        form_add(&mut out, e + k, n, var, &(&(qe * &s) * &inv_fact[k]));
                    }
                }
            }
        }
    }
    // − α_{λ+μ}([a_λ b], c) = − Σ_j λ^j Σ_{(g,p)} p(−λ−μ) α_{λ+μ}(g, c)
    for (j, y) in alg.gen_bracket(a, b).coeffs().iter().enumerate() {
        for (g, p) in y.terms() {
            for (e, pe) in p.coeffs().iter().enumerate() {
                for k in 0..n_count {
                    let Some((var, s)) = coord(g, c, k) else { continue };
                    let base = &(&(pe * &s) * &inv_fact[k]) * &Scalar::sign(e);
                    let base = &base * &neg;
                    let d = e + k;
                    for t in 0..=d {
                        let coef = &base * &Scalar::binomial(d as i64, t);
                        form_add(&mut out, j + t, d - t, var, &coef);
                    }
                }
            }
        }
    }
    // − (−1)^{p(a)p(b)} α_μ(b, [a_λ c]) = − sign Σ_k λ^k Σ_{(g,q)} q(μ) α_μ(b, g)
    let sign = -&alg.parity(a).koszul(alg.parity(b));
    for (k, z) in alg.gen_bracket(a, c).coeffs().iter().enumerate() {
        for (g, q) in z.terms() {
            for (e, qe) in q.coeffs().iter().enumerate() {
                for t in 0..n_count {
                    if let Some((var, s)) = coord(b, g, t) {
                        form_add(&mut out, k, e + t, var, &(&(&(qe * &s) * &inv_fact[t]) * &sign));
                    }
                }
            }
        }
    }
    // scale λ^m μ^n coefficients to n-th product form
    for ((m, n), row) in out.iter_mut() {
        let f = &Scalar::factorial(*m) * &Scalar::factorial(*n);
        for v in row.values_mut() {
            *v *= &f;
        }
    }
    out.retain(|_, row| !row.is_empty());
    out
}

fn eval_form(row: &SparseVec, x: &SparseVec) -> Scalar {
    let mut acc = Scalar::zero();
    for (k, c) in row {
        if let Some(v) = x.get(k) {
            acc += &(c * v);
        }
    }
    acc
}

/// Verifies the skew and Jacobi conditions on generators (the derivation
/// rule is built into the representation) and vanishing on torsion.
pub fn cocycle_check(alpha: &TwoCocycle) -> CocycleReport {
    let alg = alpha.algebra();
    let r = alg.rank();
    let b = alg.basis();
    let mut report = CocycleReport::default();
    for (&(i, j, n), _) in alpha.stored() {
        if b.get(i).is_torsion() || b.get(j).is_torsion() {
            report.violations.push(CocycleViolation::Torsion { a: b.name(i).into(), b: b.name(j).into(), n });
        }
    }
    for i in 0..r {
        for j in i..r {
            if !(alpha.has_pair(i, j) && alpha.has_pair(j, i)) && i != j {
                continue;
            }
            for n in 0..alpha.order() {
                let lhs = alpha.value(i, j, n);
                let rhs = &alpha.value(j, i, n) * &skew_sign(alg, i, j, n);
                if lhs != rhs {
                    report.violations.push(CocycleViolation::Skew {
                        a: b.name(i).into(),
                        b: b.name(j).into(),
                        n,
                        lhs,
                        rhs,
                    });
                }
            }
        }
    }
    let n_count = alpha.order();
    if n_count == 0 {
        return report;
    }
    let x = alpha.full_vector(n_count);
    let coord = |i: usize, j: usize, n: usize| Some((full_index(r, i, j, n), Scalar::one()));
    for a in 0..r {
        for bb in 0..r {
            for c in 0..r {
                report.triples_checked += 1;
                let forms = jacobi_forms(alg, n_count, &coord, a, bb, c);
                let mut keys: Vec<_> = forms.keys().copied().collect();
                keys.sort_unstable();
                for (m, n) in keys {
                    let val = eval_form(&forms[&(m, n)], &x);
                    if !val.is_zero() {
                        let (lhs, rhs) = split_jacobi(alg, alpha, a, bb, c, m, n);
                        report.violations.push(CocycleViolation::Jacobi {
                            a: b.name(a).into(),
                            b: b.name(bb).into(),
                            c: b.name(c).into(),
                            m,
                            n,
                            lhs,
                            rhs,
                        });
                    }
                }
            }
        }
    }
    report
}

/// The two sides `α_m(a, b_(n)c)` and the right-hand side, for reporting.
fn split_jacobi(
    alg: &ConformalSuperalgebra,
    alpha: &TwoCocycle,
    a: usize,
    b: usize,
    c: usize,
    m: usize,
    n: usize,
) -> (Scalar, Scalar) {
    let lhs = apply_alpha_m(alpha, &Element::unit(a), &alg.gen_product(b, c, n), m);
    let mut rhs = Scalar::zero();
    for j in 0..=m {
        let ab = alg.gen_product(a, b, j);
        rhs += &(&Scalar::binomial(m as i64, j) * &apply_alpha_m(alpha, &ab, &Element::unit(c), m + n - j));
    }
    let sign = alg.parity(a).koszul(alg.parity(b));
    rhs += &(&sign * &apply_alpha_m(alpha, &Element::unit(b), &alg.gen_product(a, c, m), n));
    (lhs, rhs)
}

/// `α_n(x, y)` for arbitrary elements.
pub fn apply_alpha_m(alpha: &TwoCocycle, x: &Element, y: &Element, n: usize) -> Scalar {
    // α_λ(p(∂)g, q(∂)h) = p(−λ) q(λ) α_λ(g, h); take λ^n and multiply by n!
    let mut acc = Scalar::zero();
    for (g, p) in x.terms() {
        for (h, q) in y.terms() {
            let pq = &p.reflect() * q;
            let base = alpha.lambda_coeffs(g, h);
            for (k, bk) in base.iter().enumerate() {
                if k <= n {
                    acc += &(&pq.coeff(n - k) * bk);
                }
            }
        }
    }
    &acc * &Scalar::factorial(n)
}

/// Outcome of [`h2_dimension`].
#[derive(Clone, Debug)]
pub struct H2Result {
    pub dimension: usize,
    pub cocycle_dim: usize,
    pub trivial_dim: usize,
    pub representatives: Vec<TwoCocycle>,
    pub n_bound: usize,
    pub f_degree_bound: usize,
}

/// Canonical cocycle coordinates: pairs `i <= j` of free generators,
/// `n <= n_bound`, ordered by `n` first.
struct Canon {
    r: usize,
    n_count: usize,
    index: HashMap<(usize, usize, usize), usize>,
    keys: Vec<(usize, usize, usize)>,
}

impl Canon {
    fn new(alg: &ConformalSuperalgebra, n_bound: usize) -> Self {
        let r = alg.rank();
        let free: Vec<usize> = (0..r).filter(|&i| !alg.basis().get(i).is_torsion()).collect();
        let mut index = HashMap::new();
        let mut keys = Vec::new();
        for n in 0..=n_bound {
            for (pi, &i) in free.iter().enumerate() {
                for &j in &free[pi..] {
                    if i == j && skew_sign(alg, i, i, n) != Scalar::one() {
                        continue;
                    }
                    index.insert((i, j, n), keys.len());
                    keys.push((i, j, n));
                }
            }
        }
        Canon { r, n_count: n_bound + 1, index, keys }
    }

    fn coord(&self, alg: &ConformalSuperalgebra, i: usize, j: usize, n: usize) -> Option<(usize, Scalar)> {
        if n >= self.n_count {
            return None;
        }
        if i <= j {
            self.index.get(&(i, j, n)).map(|&k| (k, Scalar::one()))
        } else {
            self.index.get(&(j, i, n)).map(|&k| (k, skew_sign(alg, i, j, n)))
        }
    }

    fn to_cocycle(&self, alg: &Arc<ConformalSuperalgebra>, v: &SparseVec) -> TwoCocycle {
        let vals = v.iter().map(|(k, c)| {
            let (i, j, n) = self.keys[*k];
            (i, j, n, c.clone())
        });
        TwoCocycle::from_values(alg.clone(), vals).expect("indices in range")
    }
}

fn cocycle_space(alg: &ConformalSuperalgebra, canon: &Canon) -> Vec<SparseVec> {
    let r = canon.r;
    let coord = |i: usize, j: usize, n: usize| canon.coord(alg, i, j, n);
    let mut red = RowReducer::new(canon.keys.len());
    let free: Vec<usize> = (0..r).filter(|&i| !alg.basis().get(i).is_torsion()).collect();
    for &a in &free {
        for &b in &free {
            for &c in &free {
                for (_, row) in jacobi_forms(alg, canon.n_count, &coord, a, b, c) {
                    red.insert(row);
                }
            }
        }
    }
    red.nullspace()
}

/// Coboundaries `f(a_(n)b)` that satisfy the skew condition, in canonical
/// coordinates. `f` ranges over functionals on `∂^k a^g`, `k <= f_degree_bound`.
fn trivial_space(alg: &ConformalSuperalgebra, canon: &Canon, f_degree_bound: usize) -> Vec<SparseVec> {
    let r = alg.rank();
    let basis = alg.basis();
    let fdim = f_degree_bound + 1;
    let f_index = |g: usize, k: usize| g * fdim + k;
    // full image: (i, j, n) -> linear form in f
    let image = |i: usize, j: usize, n: usize| -> SparseVec {
        let mut row = SparseVec::new();
        for (g, p) in alg.gen_product(i, j, n).terms() {
            for (k, c) in p.coeffs().iter().enumerate() {
                if k < fdim && !c.is_zero() {
                    axpy(&mut row, c, &std::iter::once((f_index(g, k), Scalar::one())).collect());
                }
            }
        }
        row
    };
    let mut skew = RowReducer::new(r * fdim);
    for i in 0..r {
        if basis.get(i).is_torsion() {
            continue;
        }
        for j in i..r {
            if basis.get(j).is_torsion() {
                continue;
            }
            for n in 0..canon.n_count {
                let mut row = image(i, j, n);
                axpy(&mut row, &-&skew_sign(alg, i, j, n), &image(j, i, n));
                skew.insert(row);
            }
        }
    }
    let mut out = Vec::new();
    for f in skew.nullspace() {
        let mut v = SparseVec::new();
        for (k, &(i, j, n)) in canon.keys.iter().enumerate() {
            let x = eval_form(&image(i, j, n), &f);
            if !x.is_zero() {
                v.insert(k, x);
            }
        }
        if !v.is_empty() {
            out.push(v);
        }
    }
    out
}

/// `dim H²(R, ℂ)` for cocycles with `α_n = 0` for `n > n_bound`, modulo
/// coboundaries `f(a_(n)b)` with `f` on ∂-degree at most `f_degree_bound`.
pub fn h2_dimension(alg: &Arc<ConformalSuperalgebra>, n_bound: usize, f_degree_bound: usize) -> H2Result {
    let canon = Canon::new(alg, n_bound);
    let z = cocycle_space(alg, &canon);
    let trivial = trivial_space(alg, &canon, f_degree_bound);
    let mut red = RowReducer::new(canon.keys.len());
    for t in &trivial {
        red.insert(t.clone());
    }
    let trivial_dim = red.rank();
    let mut reps = Vec::new();
    for v in &z {
        let reduced = red.reduce(v);
        if reduced.is_empty() {
            continue;
        }
        red.insert(reduced.clone());
        reps.push(canon.to_cocycle(alg, &reduced));
    }
    H2Result {
        dimension: reps.len(),
        cocycle_dim: z.len(),
        trivial_dim,
        representatives: reps,
        n_bound,
        f_degree_bound,
    }
}

/// Witness functional for a coboundary: values on `∂^k a^g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoboundaryWitness {
    pub values: BTreeMap<(usize, usize), Scalar>,
}

/// Solves `α_n(a^i, a^j) = f(a^i_(n)a^j)` for all generator pairs and `n`
/// with `f` on ∂-degree at most `f_degree_bound`. Whether `α` is itself a
/// valid cocycle is reported separately by [`cocycle_check`].
pub fn is_coboundary(alpha: &TwoCocycle, f_degree_bound: usize) -> Option<CoboundaryWitness> {
    let alg = alpha.algebra();
    let r = alg.rank();
    let fdim = f_degree_bound + 1;
    let unknowns = r * fdim;
    let n_count = alpha.order().max(alg.max_order());
    let mut red = RowReducer::new(unknowns + 1);
    for i in 0..r {
        for j in 0..r {
            for n in 0..n_count {
                let mut row = SparseVec::new();
                for (g, p) in alg.gen_product(i, j, n).terms() {
                    for (k, c) in p.coeffs().iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        if k >= fdim {
                            return None;
                        }
                        row.insert(g * fdim + k, c.clone());
                    }
                }
                let target = alpha.value(i, j, n);
                if !target.is_zero() {
                    row.insert(unknowns, target);
                }
                red.insert(row);
            }
        }
    }
    let sol = red.particular_solution(unknowns)?;
    let values = sol.into_iter().map(|(k, v)| ((k / fdim, k % fdim), v)).collect();
    Some(CoboundaryWitness { values })
}

/// `R̃ = R ⊕ ℂC` with `∂C = 0` and `a_(ñ)b = a_(n)b + α_n(a,b)C`.
#[derive(Clone, Debug)]
pub struct CentralExtension {
    pub base: Arc<ConformalSuperalgebra>,
    pub cocycle: TwoCocycle,
    pub extended: ConformalSuperalgebra,
    /// Index of `C` in the extended basis.
    pub central: usize,
}

pub fn central_extend(alpha: &TwoCocycle) -> Result<CentralExtension> {
    let report = cocycle_check(alpha);
    if let Some(v) = report.violations.first() {
        return Err(Error::InvalidCocycle(format!("{v:?}")));
    }
    let alg = alpha.algebra();
    let r = alg.rank();
    let mut name = String::from("C");
    while alg.index_of(&name).is_some() {
        name.push('\'');
    }
    let mut gens: Vec<Generator> = alg.basis().gens().to_vec();
    gens.push(Generator::even(name).with_torsion(Scalar::zero()));
    let mut table = ProductTable::zeros(r + 1, r + 1);
    for i in 0..r {
        for j in 0..r {
            let mut coeffs = alg.gen_bracket(i, j).coeffs().to_vec();
            for (k, c) in alpha.lambda_coeffs(i, j).into_iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                if coeffs.len() <= k {
                    coeffs.resize(k + 1, Element::zero());
                }
                coeffs[k].add_term(r, &DPoly::constant(c));
            }
            table.set(i, j, LambdaPoly::from_coeffs(coeffs));
        }
    }
    let extended =
        ConformalSuperalgebra::new(format!("{}~", alg.name()), crate::element::Basis::new(gens), table)?;
    Ok(CentralExtension { base: alpha.algebra_arc().clone(), cocycle: alpha.clone(), extended, central: r })
}

impl CentralExtension {
    /// Table of `R̃` with `C` dropped.
    pub fn quotient_by_center(&self) -> ConformalSuperalgebra {
        let r = self.central;
        let gens = self.extended.basis().gens()[..r].to_vec();
        let mut table = ProductTable::zeros(r, r);
        for i in 0..r {
            for j in 0..r {
                let coeffs = self
                    .extended
                    .gen_bracket(i, j)
                    .coeffs()
                    .iter()
                    .map(|x| Element::from_terms(x.terms().filter(|(k, _)| *k != r).map(|(k, p)| (k, p.clone()))))
                    .collect();
                table.set(i, j, LambdaPoly::from_coeffs(coeffs));
            }
        }
        ConformalSuperalgebra::new(self.base.name(), crate::element::Basis::new(gens), table)
            .expect("sub-table of a valid table")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{current, virasoro};
    use crate::lie::LieSuperalgebraData;

    fn vir() -> Arc<ConformalSuperalgebra> {
        Arc::new(virasoro())
    }

    #[test]
    fn virasoro_cocycles() {
        let v = vir();
        let a3 = TwoCocycle::from_values(v.clone(), [(0, 0, 3, Scalar::one())]).unwrap();
        assert!(cocycle_check(&a3).passed());
        assert!(is_coboundary(&a3, 8).is_none());
        let a2 = TwoCocycle::from_values(v.clone(), [(0, 0, 2, Scalar::one())]).unwrap();
        assert!(cocycle_check(&a2).violations.iter().any(|x| matches!(x, CocycleViolation::Skew { .. })));
        let a0 = TwoCocycle::from_values(v.clone(), [(0, 0, 0, Scalar::one())]).unwrap();
        let w = is_coboundary(&a0, 8).unwrap();
        assert_eq!(w.values.get(&(0, 1)), Some(&Scalar::one()));
        assert!(is_coboundary(&TwoCocycle::new(v), 8).unwrap().values.is_empty());
    }

    #[test]
    fn virasoro_h2() {
        let h = h2_dimension(&vir(), 6, 8);
        assert_eq!(h.dimension, 1);
        let rep = &h.representatives[0];
        assert!(cocycle_check(rep).passed());
        assert!(is_coboundary(rep, 8).is_none());
    }

    #[test]
    fn affine_cocycle_and_extension() {
        let g = LieSuperalgebraData::sl2();
        let alg = Arc::new(current(&g));
        let k = g.killing_form();
        let vals = (0..3).flat_map(|i| (0..3).map(move |j| (i, j))).map(|(i, j)| (i, j, 1, k.get(i, j).clone()));
        let alpha = TwoCocycle::from_values(alg.clone(), vals).unwrap();
        assert!(cocycle_check(&alpha).passed());
        let ext = central_extend(&alpha).unwrap();
        assert!(ext.extended.check_axioms().passed());
        assert_eq!(ext.quotient_by_center(), (*alg).clone());
        assert_eq!(h2_dimension(&alg, 6, 8).dimension, 1);
    }
}
