//! Structure theory: derived and lower central series, center, solvability,
//! nilpotency, ideal closures and the search for proper ideals.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::ConformalSuperalgebra;
use crate::dpoly::DPoly;
use crate::element::{Basis, Element, ProductTable};
use crate::linalg::Matrix;
use crate::pdmatrix::{PdMatrix, Size};
use crate::scalar::Scalar;
use crate::submodule::Submodule;

/// Three-valued answer for depth-bounded questions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    /// Not decided within the given depth.
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Unknown => "unknown",
        };
        write!(f, "{s}")
    }
}

/// Default depth `rank + torsion dimension + 2`.
pub fn default_depth(r: &ConformalSuperalgebra) -> usize {
    let s = r.size();
    s.r + s.d + 2
}

/// C[∂]-span of all products `a_(j)b` with `a ∈ A`, `b ∈ B`.
pub fn products_span(r: &ConformalSuperalgebra, a: &Submodule, b: &Submodule) -> Submodule {
    let mut seeds = Vec::new();
    for x in a.generators() {
        for y in b.generators() {
            let lp = r.bracket(x, y).expect("submodule elements belong to the algebra");
            seeds.extend(lp.coeffs().iter().filter(|z| !z.is_zero()).cloned());
        }
    }
    Submodule::new(r.basis(), &seeds)
}

/// `R ⊇ R' ⊇ R'' ⊇ …`: the first `k + 1` members, starting with `R`.
pub fn derived_series(r: &ConformalSuperalgebra, k: usize) -> Vec<Submodule> {
    let mut out = vec![Submodule::full(r.basis())];
    for _ in 0..k {
        let last = out.last().expect("nonempty");
        let next = products_span(r, last, last);
        let stop = next.is_zero() || next.same_as(last);
        out.push(next);
        if stop {
            break;
        }
    }
    out
}

/// `R = R^0 ⊇ R^1 ⊇ …` with `R^n` spanned by products of `R` with `R^{n-1}`.
pub fn lower_central_series(r: &ConformalSuperalgebra, k: usize) -> Vec<Submodule> {
    let full = Submodule::full(r.basis());
    let mut out = vec![full.clone()];
    for _ in 0..k {
        let last = out.last().expect("nonempty");
        let next = products_span(r, &full, last);
        let stop = next.is_zero() || next.same_as(last);
        out.push(next);
        if stop {
            break;
        }
    }
    out
}

/// Center `{x : x_(n)R = 0 for all n}`.
pub fn center(r: &ConformalSuperalgebra) -> Submodule {
    let basis = r.basis();
    let mut seeds: Vec<Element> =
        (0..r.rank()).filter(|&i| basis.get(i).is_torsion()).map(Element::unit).collect();
    seeds.extend(annihilator(basis, basis, r.table()));
    let mut s = Submodule::new(basis, &seeds);
    s.closed = Some(true);
    s
}

/// C[∂]-generators of `{x in the free part of src : x_(n)t = 0 for all t, n}`
/// where `table` gives the brackets of `src` generators on `tgt` generators.
///
/// Writing `x = Σ p_β(∂) a^β`, the condition `Σ_β p_β(−λ)[a^β_λ t^j] = 0`
/// is a linear system over C[y] (`y = −λ`), one row per target generator
/// and ∂-power.
pub(crate) fn annihilator(src: &Basis, tgt: &Basis, table: &ProductTable) -> Vec<Element> {
    let free: Vec<usize> = (0..src.len()).filter(|&i| !src.get(i).is_torsion()).collect();
    let mut rows: Vec<Vec<DPoly>> = Vec::new();
    for j in 0..tgt.len() {
        let mut block: BTreeMap<(usize, usize), Vec<Vec<Scalar>>> = BTreeMap::new();
        for (col, &beta) in free.iter().enumerate() {
            for (k, x) in table.get(beta, j).coeffs().iter().enumerate() {
                for (gamma, p) in x.terms() {
                    for (e, c) in p.coeffs().iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let entry = block.entry((gamma, e)).or_insert_with(|| vec![Vec::new(); free.len()]);
                        let poly = &mut entry[col];
                        if poly.len() <= k {
                            poly.resize(k + 1, Scalar::zero());
                        }
                        poly[k] += &(c * &Scalar::sign(k));
                    }
                }
            }
        }
        rows.extend(block.into_values().map(|entry| entry.into_iter().map(DPoly::from_coeffs).collect()));
    }
    if rows.is_empty() {
        return free.iter().map(|&i| Element::unit(i)).collect();
    }
    PdMatrix::from_rows(&rows)
        .kernel()
        .columns()
        .into_iter()
        .map(|col| Element::from_terms(free.iter().zip(col).map(|(&i, p)| (i, p))))
        .filter(|x| !x.is_zero())
        .collect()
}

/// Is `s` closed under `a_(n)·` for all generators `a` and all `n`?
pub fn is_ideal(r: &ConformalSuperalgebra, s: &Submodule) -> bool {
    for i in 0..r.rank() {
        let a = Element::unit(i);
        for x in s.generators() {
            let lp = r.bracket(&a, x).expect("same algebra");
            if lp.coeffs().iter().any(|z| !s.contains(z)) {
                return false;
            }
        }
    }
    true
}

/// Is `s` closed under products of its own elements?
pub fn is_subalgebra(r: &ConformalSuperalgebra, s: &Submodule) -> bool {
    for x in s.generators() {
        for y in s.generators() {
            let lp = r.bracket(x, y).expect("same algebra");
            if lp.coeffs().iter().any(|z| !s.contains(z)) {
                return false;
            }
        }
    }
    true
}

/// Least ideal containing `seeds`.
pub fn ideal_closure(r: &ConformalSuperalgebra, seeds: &[Element]) -> Submodule {
    let mut s = Submodule::new(r.basis(), seeds);
    loop {
        let mut extra = Vec::new();
        for i in 0..r.rank() {
            let a = Element::unit(i);
            for x in s.generators() {
                let lp = r.bracket(&a, x).expect("same algebra");
                extra.extend(lp.coeffs().iter().filter(|z| !s.contains(z)).cloned());
            }
        }
        if extra.is_empty() {
            s.closed = Some(true);
            return s;
        }
        s = s.join(&extra);
    }
}

/// Outcome of a depth-bounded series test.
#[derive(Clone, Debug)]
pub struct SeriesVerdict {
    pub verdict: Verdict,
    pub series: Vec<Submodule>,
    pub depth: usize,
}

impl SeriesVerdict {
    pub fn sizes(&self) -> Vec<Size> {
        self.series.iter().map(Submodule::size).collect()
    }
}

fn judge(series: Vec<Submodule>, depth: usize) -> SeriesVerdict {
    let last = series.last().expect("nonempty");
    let verdict = if last.is_zero() {
        Verdict::Yes
    } else if series.len() >= 2 && last.same_as(&series[series.len() - 2]) {
        Verdict::No
    } else {
        Verdict::Unknown
    };
    SeriesVerdict { verdict, series, depth }
}

pub fn is_solvable(r: &ConformalSuperalgebra, depth: usize) -> SeriesVerdict {
    judge(derived_series(r, depth), depth)
}

pub fn is_nilpotent(r: &ConformalSuperalgebra, depth: usize) -> SeriesVerdict {
    judge(lower_central_series(r, depth), depth)
}

/// Nilpotency of every operator `a^i_(n)` on the ℂ-span of `∂^k a^j`,
/// `k <= max_degree` (a finite filtration stable under these operators).
pub fn operators_nilpotent(r: &ConformalSuperalgebra, max_degree: usize) -> bool {
    let n = r.rank();
    let basis = r.basis();
    let index = |j: usize, k: usize| j * (max_degree + 1) + k;
    let dim = n * (max_degree + 1);
    for i in 0..n {
        for m in 0..r.max_order() {
            let mut op = Matrix::zeros(dim, dim);
            for j in 0..n {
                for k in 0..=max_degree {
                    let v = basis.d_pow(k, &Element::unit(j));
                    if v.is_zero() {
                        continue;
                    }
                    let img = r.nth_product(&Element::unit(i), &v, m).expect("same algebra");
                    for (t, p) in img.terms() {
                        for (e, c) in p.coeffs().iter().enumerate() {
                            if e > max_degree {
                                return false;
                            }
                            op.set(index(t, e), index(j, k), c.clone());
                        }
                    }
                }
            }
            let mut pow = op.clone();
            for _ in 0..dim {
                if pow.is_zero() {
                    break;
                }
                pow = pow.mul(&op).expect("square");
            }
            if !pow.is_zero() {
                return false;
            }
        }
    }
    true
}

/// Options for [`find_proper_ideal`].
#[derive(Clone, Copy, Debug)]
pub struct IdealSearch {
    /// Maximum number of candidate closures examined.
    pub budget: usize,
    /// Only accept solvable ideals.
    pub solvable_only: bool,
}

impl IdealSearch {
    pub fn new(r: &ConformalSuperalgebra) -> Self {
        IdealSearch { budget: 8 * r.rank() + 16, solvable_only: false }
    }
}

#[derive(Clone, Debug)]
pub struct IdealSearchResult {
    pub ideal: Option<Submodule>,
    pub candidates_examined: usize,
    pub budget_exhausted: bool,
}

/// Searches for a verified proper nonzero ideal, preferring the smallest size.
pub fn find_proper_ideal(r: &ConformalSuperalgebra, opts: IdealSearch) -> IdealSearchResult {
    let depth = default_depth(r);
    let mut examined = 0usize;
    let mut best: Option<Submodule> = None;
    let mut exhausted = false;
    let mut consider = |s: Submodule, examined: &mut usize| -> bool {
        if *examined >= opts.budget {
            return false;
        }
        *examined += 1;
        if s.is_zero() || s.is_full() || !is_ideal(r, &s) {
            return true;
        }
        if opts.solvable_only && submodule_solvable(r, &s, depth) != Verdict::Yes {
            return true;
        }
        let better = match &best {
            None => true,
            Some(b) => s.size() < b.size(),
        };
        if better {
            let mut s = s;
            s.closed = Some(true);
            best = Some(s);
        }
        true
    };
    let mut candidates: Vec<Box<dyn Fn() -> Vec<Submodule> + '_>> = vec![
        Box::new(|| vec![center(r)]),
        Box::new(|| derived_series(r, depth).into_iter().skip(1).collect()),
        Box::new(|| lower_central_series(r, depth).into_iter().skip(1).collect()),
        Box::new(|| {
            let t: Vec<Element> =
                (0..r.rank()).filter(|&i| r.basis().get(i).is_torsion()).map(Element::unit).collect();
            if t.is_empty() {
                Vec::new()
            } else {
                vec![ideal_closure(r, &t)]
            }
        }),
    ];
    candidates.push(Box::new(|| (0..r.rank()).map(|i| ideal_closure(r, &[Element::unit(i)])).collect()));
    candidates.push(Box::new(|| kernel_candidates(r).into_iter().map(|x| ideal_closure(r, &[x])).collect()));
    'outer: for gen in candidates {
        for s in gen() {
            if !consider(s, &mut examined) {
                exhausted = true;
                break 'outer;
            }
        }
    }
    IdealSearchResult { ideal: best, candidates_examined: examined, budget_exhausted: exhausted }
}

/// Elements of the ℂ-span of the generators killed by some `a^i_(n)`.
fn kernel_candidates(r: &ConformalSuperalgebra) -> Vec<Element> {
    let n = r.rank();
    let basis = r.basis();
    let mut out = Vec::new();
    for i in 0..n {
        for m in 0..r.max_order() {
            // columns: generators; rows: (target, ∂-power)
            let mut rows: BTreeMap<(usize, usize), Vec<Scalar>> = BTreeMap::new();
            for j in 0..n {
                let img = r.gen_product(i, j, m);
                for (t, p) in img.terms() {
                    for (e, c) in p.coeffs().iter().enumerate() {
                        rows.entry((t, e)).or_insert_with(|| vec![Scalar::zero(); n])[j] = c.clone();
                    }
                }
            }
            let mat = Matrix::from_rows(rows.into_values().collect()).expect("rectangular");
            let ns = if mat.rows() == 0 { identity_vectors(n) } else { mat.nullspace() };
            for v in ns {
                let x = Element::from_terms(
                    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, DPoly::constant(c.clone()))),
                );
                if !x.is_zero() && !out.contains(&x) && basis.parity_of(&x).is_some() {
                    out.push(x);
                }
            }
        }
    }
    out
}

fn identity_vectors(n: usize) -> Vec<Vec<Scalar>> {
    (0..n)
        .map(|k| {
            let mut v = vec![Scalar::zero(); n];
            v[k] = Scalar::one();
            v
        })
        .collect()
}

/// Derived series of a subalgebra `s` (as submodules of the ambient algebra).
pub fn submodule_derived_series(r: &ConformalSuperalgebra, s: &Submodule, depth: usize) -> Vec<Submodule> {
    let mut out = vec![s.clone()];
    for _ in 0..depth {
        let last = out.last().expect("nonempty");
        let next = products_span(r, last, last);
        let stop = next.is_zero() || next.same_as(last);
        out.push(next);
        if stop {
            break;
        }
    }
    out
}

pub fn submodule_solvable(r: &ConformalSuperalgebra, s: &Submodule, depth: usize) -> Verdict {
    judge(submodule_derived_series(r, s, depth), depth).verdict
}

/// Lower central series of a subalgebra `s`.
pub fn submodule_lower_central_series(r: &ConformalSuperalgebra, s: &Submodule, depth: usize) -> Vec<Submodule> {
    let mut out = vec![s.clone()];
    for _ in 0..depth {
        let last = out.last().expect("nonempty");
        let next = products_span(r, s, last);
        let stop = next.is_zero() || next.same_as(last);
        out.push(next);
        if stop {
            break;
        }
    }
    out
}

pub fn submodule_nilpotent(r: &ConformalSuperalgebra, s: &Submodule, depth: usize) -> Verdict {
    judge(submodule_lower_central_series(r, s, depth), depth).verdict
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{current, virasoro};
    use crate::lie::LieSuperalgebraData;

    #[test]
    fn virasoro_series_are_stationary() {
        let v = virasoro();
        assert_eq!(is_solvable(&v, 4).verdict, Verdict::No);
        assert_eq!(is_nilpotent(&v, 4).verdict, Verdict::No);
        assert!(center(&v).is_zero());
    }

    #[test]
    fn borel_is_solvable_not_nilpotent() {
        let b = current(&LieSuperalgebraData::borel_sl2());
        let s = is_solvable(&b, 5);
        assert_eq!(s.verdict, Verdict::Yes);
        assert_eq!(s.series.len(), 3);
        assert!(s.series[1].same_as(&Submodule::new(b.basis(), &[Element::unit(1)])));
        assert_eq!(is_nilpotent(&b, 5).verdict, Verdict::No);
    }

    #[test]
    fn heisenberg_is_nilpotent() {
        let h = current(&LieSuperalgebraData::heisenberg());
        let s = is_nilpotent(&h, 5);
        assert_eq!(s.verdict, Verdict::Yes);
        assert!(s.series[1].same_as(&Submodule::new(h.basis(), &[Element::unit(2)])));
        assert!(operators_nilpotent(&h, 3));
    }

    #[test]
    fn abelian_center_is_everything() {
        let a = current(&LieSuperalgebraData::abelian(2));
        assert!(center(&a).is_full());
    }
}
