//! Builders for the standard finite conformal superalgebras.

use crate::algebra::ConformalSuperalgebra;
use crate::dpoly::DPoly;
use crate::element::{Element, Generator, LambdaPoly, Parity};
use crate::error::{Error, Result};
use crate::grassmann::{index_list, monomial_degree, monomials, GrassmannElement, Monomial};
use crate::lie::LieSuperalgebraData;
use crate::pdmatrix::PdMatrix;
use crate::scalar::Scalar;

/// Largest supported number of odd indeterminates for the Grassmann series.
pub const MAX_N: usize = 6;

fn c(x: i64) -> DPoly {
    DPoly::from_ints(&[x])
}

fn bracket_from(products: Vec<Element>) -> LambdaPoly {
    LambdaPoly::from_products(products)
}

/// The Virasoro conformal algebra: `L_(0)L = ∂L`, `L_(1)L = 2L`.
pub fn virasoro() -> ConformalSuperalgebra {
    ConformalSuperalgebra::from_products(
        "vir",
        vec![Generator::even("L")],
        vec![(0, 0, 0, Element::term(0, DPoly::d())), (0, 0, 1, Element::term(0, c(2)))],
    )
    .expect("virasoro table is consistent")
}

fn lie_element(v: &[Scalar], offset: usize) -> Element {
    Element::from_terms(
        v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(k, x)| (k + offset, DPoly::constant(x.clone()))),
    )
}

/// Current conformal superalgebra `C[∂] ⊗ g` with `a_(0)b = [a, b]`.
pub fn current(g: &LieSuperalgebraData) -> ConformalSuperalgebra {
    let gens = (0..g.dim()).map(|i| Generator::new(g.names()[i].clone(), g.parity(i))).collect();
    let mut brackets = Vec::new();
    for i in 0..g.dim() {
        for j in 0..g.dim() {
            let x = lie_element(g.structure(i, j), 0);
            if !x.is_zero() {
                brackets.push(((i, j), bracket_from(vec![x])));
            }
        }
    }
    ConformalSuperalgebra::from_brackets(format!("current({})", g.name()), gens, brackets)
        .expect("a valid Lie superalgebra gives a consistent table")
}

/// Semidirect sum of Vir and `current(g)`: `L_(0)a = ∂a`, `L_(1)a = a`.
pub fn semidirect_vir_current(g: &LieSuperalgebraData) -> Result<ConformalSuperalgebra> {
    if g.index_of("L").is_some() {
        return Err(Error::InvalidLieData("generator name `L` is reserved for the Virasoro element".into()));
    }
    let mut gens = vec![Generator::even("L")];
    gens.extend((0..g.dim()).map(|i| Generator::new(g.names()[i].clone(), g.parity(i))));
    let mut brackets =
        vec![((0, 0), bracket_from(vec![Element::term(0, DPoly::d()), Element::term(0, c(2))]))];
    for i in 0..g.dim() {
        brackets.push(((0, i + 1), bracket_from(vec![Element::term(i + 1, DPoly::d()), Element::unit(i + 1)])));
        for j in 0..g.dim() {
            let x = lie_element(g.structure(i, j), 1);
            if !x.is_zero() {
                brackets.push(((i + 1, j + 1), bracket_from(vec![x])));
            }
        }
    }
    ConformalSuperalgebra::from_brackets(format!("vir+current({})", g.name()), gens, brackets)
}

fn check_n(n: usize) -> Result<()> {
    if n > MAX_N {
        return Err(Error::OutOfRange(format!("N = {n} exceeds the supported maximum {MAX_N}")));
    }
    Ok(())
}

/// Name of a Grassmann monomial as a generator: `u` for 1, `x12` for ξ1ξ2.
pub fn grassmann_gen_name(m: Monomial) -> String {
    if m == 0 {
        "u".to_string()
    } else {
        format!("x{}", index_list(m).iter().map(|i| i.to_string()).collect::<String>())
    }
}

/// Index layout of `W_N`: derivations `ξ^m ∂_i` first, then `Λ(N)`.
#[derive(Clone, Debug)]
pub struct WLayout {
    pub n: usize,
    pub monos: Vec<Monomial>,
    pos: Vec<usize>,
}

impl WLayout {
    pub fn new(n: usize) -> Self {
        let monos = monomials(n);
        let mut pos = vec![0; monos.len()];
        for (k, m) in monos.iter().enumerate() {
            pos[*m as usize] = k;
        }
        WLayout { n, monos, pos }
    }

    pub fn rank(&self) -> usize {
        (self.n + 1) * self.monos.len()
    }

    /// Index of `ξ^m ∂_i` (1-based `i`).
    pub fn der(&self, m: Monomial, i: usize) -> usize {
        self.pos[m as usize] * self.n + (i - 1)
    }

    /// Index of the Grassmann monomial `ξ^m`.
    pub fn lam(&self, m: Monomial) -> usize {
        self.n * self.monos.len() + self.pos[m as usize]
    }

    pub fn mono_pos(&self, m: Monomial) -> usize {
        self.pos[m as usize]
    }

    /// Decodes a basis index.
    pub fn decode(&self, idx: usize) -> WGen {
        let nd = self.n * self.monos.len();
        if idx < nd {
            WGen::Der(self.monos[idx / self.n], idx % self.n + 1)
        } else {
            WGen::Lam(self.monos[idx - nd])
        }
    }

    pub fn generators(&self) -> Vec<Generator> {
        (0..self.rank())
            .map(|k| match self.decode(k) {
                WGen::Der(m, i) => {
                    let prefix = if m == 0 { String::new() } else { grassmann_gen_name(m) };
                    Generator::new(format!("{prefix}D{i}"), Parity::from_bit(monomial_degree(m) + 1))
                }
                WGen::Lam(m) => Generator::new(grassmann_gen_name(m), Parity::from_bit(monomial_degree(m))),
            })
            .collect()
    }

    /// `(P_1, …, P_N; f)` with scalar coefficients to an element times `p(∂)`.
    pub fn element(&self, der: &[GrassmannElement], f: &GrassmannElement, p: &DPoly) -> Element {
        let mut out = Element::zero();
        for (i, pi) in der.iter().enumerate() {
            for (m, x) in pi.terms() {
                out.add_term(self.der(m, i + 1), &p.scale(x));
            }
        }
        for (m, x) in f.terms() {
            out.add_term(self.lam(m), &p.scale(x));
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WGen {
    Der(Monomial, usize),
    Lam(Monomial),
}

fn mono(n: usize, m: Monomial) -> GrassmannElement {
    GrassmannElement::monomial(n, m, Scalar::one())
}

fn gmul(a: &GrassmannElement, b: &GrassmannElement) -> GrassmannElement {
    a.mul(b).expect("same N")
}

/// The conformal superalgebra `W_N` of rank `(N+1)2^N`.
pub fn make_wn(n: usize) -> Result<ConformalSuperalgebra> {
    check_n(n)?;
    let lay = WLayout::new(n);
    let zero = GrassmannElement::zero(n);
    let zero_der = vec![zero.clone(); n];
    let one = DPoly::one();
    let gens = lay.generators();
    let mut brackets = Vec::new();
    for &pm in &lay.monos {
        let p = mono(n, pm);
        for i in 1..=n {
            let a = lay.der(pm, i);
            let pa = Parity::from_bit(monomial_degree(pm) + 1);
            // a_(0)b = [a, b]
            for &qm in &lay.monos {
                let q = mono(n, qm);
                for j in 1..=n {
                    let b = lay.der(qm, j);
                    let pb = Parity::from_bit(monomial_degree(qm) + 1);
                    let mut der = zero_der.clone();
                    der[j - 1] = gmul(&p, &q.derive(i)?);
                    let sign = pa.koszul(pb);
                    der[i - 1] = der[i - 1].add(&gmul(&q, &p.derive(j)?).scale(&-sign))?;
                    let x = lay.element(&der, &zero, &one);
                    if !x.is_zero() {
                        brackets.push(((a, b), bracket_from(vec![x])));
                    }
                }
            }
            // a_(0)f = a(f), a_(1)f = -(-1)^{p(a)p(f)} f·a
            for &fm in &lay.monos {
                let f = mono(n, fm);
                let pf = Parity::from_bit(monomial_degree(fm));
                let x0 = lay.element(&zero_der, &gmul(&p, &f.derive(i)?), &one);
                let mut der = zero_der.clone();
                der[i - 1] = gmul(&f, &p).scale(&-pa.koszul(pf));
                let x1 = lay.element(&der, &zero, &one);
                let lp = bracket_from(vec![x0, x1]);
                if !lp.is_zero() {
                    brackets.push(((a, lay.lam(fm)), lp));
                }
            }
        }
    }
    // f_(0)g = -∂(fg), f_(1)g = -2fg
    for &fm in &lay.monos {
        for &gm in &lay.monos {
            let fg = gmul(&mono(n, fm), &mono(n, gm));
            if fg.is_zero() {
                continue;
            }
            let x0 = lay.element(&zero_der, &fg, &DPoly::from_ints(&[0, -1]));
            let x1 = lay.element(&zero_der, &fg, &c(-2));
            brackets.push(((lay.lam(fm), lay.lam(gm)), bracket_from(vec![x0, x1])));
        }
    }
    ConformalSuperalgebra::from_brackets(format!("W{n}"), gens, brackets)
}

/// Divergence `div(Σ P_i ∂_i + f) = Σ (−1)^{p(P_i)} ∂_i P_i − ∂f` of an
/// element of `W_N`, as a coordinate vector over the monomials of `Λ(N)`.
///
/// The sign of the `∂f` term is the one for which the kernel is closed under
/// the products of [`make_wn`]; with `+∂f` the kernel is not a subalgebra
/// (already for `N = 2`).
pub fn divergence(n: usize, x: &Element) -> Result<Vec<DPoly>> {
    check_n(n)?;
    let lay = WLayout::new(n);
    let mut out = vec![DPoly::zero(); lay.monos.len()];
    for (idx, coeff) in x.terms() {
        if idx >= lay.rank() {
            return Err(Error::IndexOutOfRange { index: idx, max: lay.rank() - 1 });
        }
        match lay.decode(idx) {
            WGen::Der(m, i) => {
                let sign = Scalar::sign(monomial_degree(m));
                for (t, y) in mono(n, m).derive(i)?.terms() {
                    let k = lay.mono_pos(t);
                    out[k] = &out[k] + &coeff.scale(&(&sign * y));
                }
            }
            WGen::Lam(m) => {
                let k = lay.mono_pos(m);
                out[k] = &out[k] - &(coeff * &DPoly::d());
            }
        }
    }
    Ok(out)
}

/// Subalgebra of `parent` freely generated by the given homogeneous columns;
/// products are re-expressed in the new basis.
pub fn subalgebra(
    parent: &ConformalSuperalgebra,
    name: impl Into<String>,
    names: Vec<String>,
    columns: &PdMatrix,
) -> Result<ConformalSuperalgebra> {
    let pb = parent.basis();
    let cols: Vec<Element> = columns.columns().iter().map(|v| pb.from_vec(v)).collect();
    let mut gens = Vec::with_capacity(cols.len());
    for (k, x) in cols.iter().enumerate() {
        let parity = pb
            .parity_of(x)
            .ok_or_else(|| Error::ClosureFailure(format!("basis element {} is not homogeneous", names[k])))?;
        gens.push(Generator::new(names[k].clone(), parity));
    }
    let herm = columns.hermite();
    let mut brackets = Vec::new();
    for (i, x) in cols.iter().enumerate() {
        for (j, y) in cols.iter().enumerate() {
            let lp = parent.bracket(x, y)?;
            let mut coeffs = Vec::with_capacity(lp.order());
            for z in lp.coeffs() {
                let sol = herm.solve_columns(&pb.to_vec(z)).ok_or_else(|| {
                    Error::ClosureFailure(format!("[{}_λ {}] leaves the span", names[i], names[j]))
                })?;
                coeffs.push(Element::from_dense(&sol));
            }
            brackets.push(((i, j), LambdaPoly::from_coeffs(coeffs)));
        }
    }
    let alg = ConformalSuperalgebra::from_brackets(name, gens, brackets)?;
    Ok(alg)
}

/// The divergence-free subalgebra `S_N` of rank `N·2^N`.
pub fn make_sn(n: usize) -> Result<ConformalSuperalgebra> {
    let w = make_wn(n)?;
    let basis = sn_basis(n, &w)?;
    let names = (1..=basis.cols()).map(|k| format!("s{k}")).collect();
    subalgebra(&w, format!("S{n}"), names, &basis)
}

/// Homogeneous free basis of `ker div`, even part first.
pub fn sn_basis(n: usize, w: &ConformalSuperalgebra) -> Result<PdMatrix> {
    let lay = WLayout::new(n);
    let mut cols = Vec::new();
    for parity in [Parity::Even, Parity::Odd] {
        let idx: Vec<usize> = (0..lay.rank()).filter(|&k| w.parity(k) == parity).collect();
        let mut div_cols = Vec::new();
        for &k in &idx {
            div_cols.push(divergence(n, &Element::unit(k))?);
        }
        let dm = PdMatrix::from_columns(lay.monos.len(), &div_cols);
        let ker = dm.kernel();
        if ker.cols() == 0 {
            continue;
        }
        let red = ker.hermite_form();
        for col in red.columns() {
            let mut full = vec![DPoly::zero(); lay.rank()];
            for (t, &k) in idx.iter().enumerate() {
                full[k] = col[t].clone();
            }
            cols.push(full);
        }
    }
    Ok(PdMatrix::from_columns(lay.rank(), &cols))
}

/// Products of `K_N` on Grassmann monomials.
fn kn_bracket(n: usize, fm: Monomial, gm: Monomial, pos: &dyn Fn(Monomial) -> usize) -> Result<LambdaPoly> {
    let f = mono(n, fm);
    let g = mono(n, gm);
    let df = monomial_degree(fm) as i64;
    let dg = monomial_degree(gm) as i64;
    let fg = gmul(&f, &g);
    let half = Scalar::from_ratio(1, 2);
    let to_elem = |x: &GrassmannElement, p: &DPoly| {
        Element::from_terms(x.terms().map(|(m, s)| (pos(m), p.scale(s))))
    };
    // (½|f| − 1) ∂(fg) + ½(−1)^{|f|} Σ (∂_i f)(∂_i g)
    let mut x0 = to_elem(&fg, &DPoly::monomial(Scalar::from_ratio(df - 2, 2), 1));
    let mut sum = GrassmannElement::zero(n);
    for i in 1..=n {
        sum = sum.add(&gmul(&f.derive(i)?, &g.derive(i)?))?;
    }
    let s = &half * &Scalar::sign(df as usize);
    x0.add_assign(&to_elem(&sum, &DPoly::constant(s)));
    // (½(|f|+|g|) − 2) fg
    let x1 = to_elem(&fg, &DPoly::constant(Scalar::from_ratio(df + dg - 4, 2)));
    Ok(bracket_from(vec![x0, x1]))
}

/// The contact conformal superalgebra `K_N` of rank `2^N`.
pub fn make_kn(n: usize) -> Result<ConformalSuperalgebra> {
    check_n(n)?;
    let monos = monomials(n);
    let mut pos = vec![0; monos.len()];
    for (k, m) in monos.iter().enumerate() {
        pos[*m as usize] = k;
    }
    let posf = |m: Monomial| pos[m as usize];
    let gens = monos
        .iter()
        .map(|&m| Generator::new(grassmann_gen_name(m), Parity::from_bit(monomial_degree(m))))
        .collect();
    let mut brackets = Vec::new();
    for &fm in &monos {
        for &gm in &monos {
            let lp = kn_bracket(n, fm, gm, &posf)?;
            if !lp.is_zero() {
                brackets.push(((posf(fm), posf(gm)), lp));
            }
        }
    }
    ConformalSuperalgebra::from_brackets(format!("K{n}"), gens, brackets)
}

/// `(ξ_{i1} ξ_{i2} …)* = ∂_{i1} ∂_{i2} … ν` with `ν = ξ1⋯ξ6`.
fn hodge_star(indices: &[usize]) -> Result<GrassmannElement> {
    let mut x = GrassmannElement::monomial(6, 0b11_1111, Scalar::one());
    for &i in indices.iter().rev() {
        x = x.derive(i)?;
    }
    Ok(x)
}

/// The 42 spanning elements `f + α∂^{3−|f|} f*` of `CK_6` inside `K_6`
/// (`|f| ≤ 3`, `α = i`), with their index sets, ordered by degree.
///
/// All four families carry `+α`. With `ξ_i − α∂²ξ_i*` in the degree-1 family
/// the span is not closed under the products of [`make_kn`].
pub fn ck6_spanning_set() -> Result<Vec<(Vec<usize>, Element)>> {
    let monos = monomials(6);
    let mut pos = vec![0; monos.len()];
    for (k, m) in monos.iter().enumerate() {
        pos[*m as usize] = k;
    }
    let alpha = Scalar::i();
    let mut out = Vec::new();
    let mut sets: Vec<Vec<usize>> = vec![vec![]];
    for i in 1..=6 {
        sets.push(vec![i]);
    }
    for i in 1..=6 {
        for j in i + 1..=6 {
            sets.push(vec![i, j]);
        }
    }
    for i in 1..=6 {
        for j in i + 1..=6 {
            for k in j + 1..=6 {
                sets.push(vec![i, j, k]);
            }
        }
    }
    for set in sets {
        let word = GrassmannElement::word(6, &set)?;
        let star = hodge_star(&set)?;
        let dpow = 3 - set.len();
        let coeff = alpha.clone();
        let mut x = Element::from_terms(word.terms().map(|(m, s)| (pos[m as usize], DPoly::constant(s.clone()))));
        for (m, s) in star.terms() {
            x.add_term(pos[m as usize], &DPoly::monomial(&coeff * s, dpow));
        }
        out.push((set, x));
    }
    Ok(out)
}

/// The exceptional conformal superalgebra `CK_6` of rank 32.
///
/// The degree-3 spanning elements come in dependent pairs; the basis keeps
/// those whose index set contains 1.
pub fn make_ck6() -> Result<ConformalSuperalgebra> {
    let k6 = make_kn(6)?;
    let chosen: Vec<(Vec<usize>, Element)> = ck6_spanning_set()?
        .into_iter()
        .filter(|(set, _)| set.len() < 3 || set[0] == 1)
        .collect();
    let names = chosen
        .iter()
        .map(|(set, _)| {
            if set.is_empty() {
                "y".to_string()
            } else {
                format!("y{}", set.iter().map(|i| i.to_string()).collect::<String>())
            }
        })
        .collect();
    let cols: Vec<Vec<DPoly>> = chosen.iter().map(|(_, x)| k6.basis().to_vec(x)).collect();
    let m = PdMatrix::from_columns(k6.rank(), &cols);
    subalgebra(&k6, "CK6", names, &m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn virasoro_products() {
        let v = virasoro();
        assert_eq!(v.gen_product(0, 0, 1), Element::term(0, c(2)));
        assert!(v.gen_product(0, 0, 2).is_zero());
    }

    #[test]
    fn divergence_examples() {
        let lay = WLayout::new(1);
        assert!(divergence(1, &Element::unit(lay.der(0, 1))).unwrap().iter().all(DPoly::is_zero));
        let d = divergence(1, &Element::unit(lay.der(1, 1))).unwrap();
        assert_eq!(d[0], c(-1));
        let d = divergence(1, &Element::unit(lay.lam(0))).unwrap();
        assert_eq!(d[0], DPoly::from_ints(&[0, -1]));
    }

    #[test]
    fn w0_and_k0_are_virasoro_up_to_sign() {
        for alg in [make_wn(0).unwrap(), make_kn(0).unwrap()] {
            let l = Element::term(0, c(-1));
            assert_eq!(alg.nth_product(&l, &l, 0).unwrap(), Element::term(0, DPoly::from_ints(&[0, -1])));
            assert_eq!(alg.nth_product(&l, &l, 1).unwrap(), Element::term(0, c(-2)));
        }
    }

    #[test]
    fn n_out_of_range() {
        assert!(matches!(make_wn(7), Err(Error::OutOfRange(_))));
    }
}
