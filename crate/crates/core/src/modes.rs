//! Brute-force mode oracle: the truncated Lie superalgebra of modes
//! `a_(m)`, `m ∈ [lo, hi]`, and mode actions on modules.
//!
//! `[a_(m), b_(n)] = Σ_j C(m,j) (a_(j)b)_(m+n−j)` with
//! `(∂^r c)_(s) = (−1)^r s(s−1)…(s−r+1) c_(s−r)`. A torsion generator with
//! `∂c = γc` has the single independent mode `c_(−1)`; `c_(s) = 0` for
//! `s >= 0` and `c_(−1−k) = γ^k/k! c_(−1)`.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;

use crate::algebra::ConformalSuperalgebra;
use crate::element::{Basis, Element, Parity, ProductTable};
use crate::module::ConformalModule;
use crate::scalar::{Rational, Scalar};

pub const DEFAULT_WINDOW: (i64, i64) = (-6, 6);

/// Independent modes `g_(m)` of a basis inside a window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModeSpace {
    pub lo: i64,
    pub hi: i64,
    /// `(generator, index)` for each mode id.
    pub modes: Vec<(usize, i64)>,
    names: Vec<String>,
    ids: BTreeMap<(usize, i64), usize>,
}

impl ModeSpace {
    pub fn new(basis: &Basis, lo: i64, hi: i64) -> Self {
        let mut modes = Vec::new();
        for g in 0..basis.len() {
            if basis.get(g).is_torsion() {
                if lo <= -1 && -1 <= hi {
                    modes.push((g, -1));
                }
            } else {
                modes.extend((lo..=hi).map(|m| (g, m)));
            }
        }
        let ids = modes.iter().enumerate().map(|(k, &x)| (x, k)).collect();
        let names = basis.gens().iter().map(|g| g.name.clone()).collect();
        ModeSpace { lo, hi, modes, names, ids }
    }

    pub fn len(&self) -> usize {
        self.modes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modes.is_empty()
    }

    pub fn id(&self, g: usize, m: i64) -> Option<usize> {
        self.ids.get(&(g, m)).copied()
    }

    pub fn display(&self, id: usize) -> String {
        let (g, m) = self.modes[id];
        format!("{}_({m})", self.names[g])
    }
}

/// A combination of in-window modes; `truncated` records that some
/// contribution fell outside the window.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ModeVec {
    pub terms: BTreeMap<usize, Scalar>,
    pub truncated: bool,
}

impl ModeVec {
    fn add(&mut self, id: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(id).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&id);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// `s(s−1)…(s−r+1)`.
fn falling(s: i64, r: usize) -> i64 {
    (0..r as i64).map(|t| s - t).product()
}

/// Expands `X_(s)` for an element `X` over `basis` into modes.
fn expand_element(basis: &Basis, space: &ModeSpace, x: &Element, s: i64, scale: &Scalar, out: &mut ModeVec) {
    for (g, p) in x.terms() {
        if let Some(gamma) = &basis.get(g).torsion {
            // normalized torsion coordinates are constants
            let c = p.coeff(0);
            if s >= 0 || c.is_zero() {
                continue;
            }
            let k = (-1 - s) as usize;
            let coef = &(&(&c * &gamma.pow(k)) * &Scalar::factorial(k).inv()) * scale;
            match space.id(g, -1) {
                Some(id) => out.add(id, &coef),
                None => out.truncated = true,
            }
            continue;
        }
        for (r, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let f = falling(s, r);
            if f == 0 {
                continue;
            }
            let coef = &(&(c * &Scalar::from_int(f)) * &Scalar::sign(r)) * scale;
            match space.id(g, s - r as i64) {
                Some(id) => out.add(id, &coef),
                None => out.truncated = true,
            }
        }
    }
}

/// `x_(m) y_(n) = Σ_j C(m,j) (x_(j)y)_(m+n−j)` for generator-level brackets.
fn expand_pair(
    table: &ProductTable,
    tgt: &Basis,
    space: &ModeSpace,
    a: usize,
    m: i64,
    b: usize,
    n: i64,
) -> ModeVec {
    let mut out = ModeVec::default();
    for (j, x) in table.get(a, b).products().iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let c = Scalar::binomial(m, j);
        if c.is_zero() {
            continue;
        }
        expand_element(tgt, space, x, m + n - j as i64, &c, &mut out);
    }
    out
}

/// All brackets between in-window modes of an algebra.
#[derive(Clone, Debug)]
pub struct ModeTable {
    pub space: ModeSpace,
    pub parities: Vec<Parity>,
    /// `brackets[x * len + y] = [x, y]`.
    brackets: Vec<ModeVec>,
}

impl ModeTable {
    pub fn bracket(&self, x: usize, y: usize) -> &ModeVec {
        &self.brackets[x * self.space.len() + y]
    }

    pub fn len(&self) -> usize {
        self.space.len()
    }

    pub fn is_empty(&self) -> bool {
        self.space.is_empty()
    }

    /// Nonzero brackets `(x, y, [x, y])`.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, &ModeVec)> {
        let n = self.len();
        self.brackets.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(move |(k, v)| (k / n, k % n, v))
    }
}

pub fn expand_modes(r: &ConformalSuperalgebra, window: (i64, i64)) -> ModeTable {
    let basis = r.basis();
    let space = ModeSpace::new(basis, window.0, window.1);
    let n = space.len();
    let mut brackets = Vec::with_capacity(n * n);
    for &(a, m) in &space.modes {
        for &(b, k) in &space.modes {
            brackets.push(expand_pair(r.table(), basis, &space, a, m, b, k));
        }
    }
    let parities = space.modes.iter().map(|&(g, _)| basis.parity(g)).collect();
    ModeTable { space, parities, brackets }
}

/// `N = 1 + max{n : a^i_(n)a^j ≠ 0}`.
pub fn locality_order(r: &ConformalSuperalgebra, i: usize, j: usize) -> usize {
    r.order_bound(i, j)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModeViolation {
    /// `"skew"` or `"jacobi"`.
    pub kind: &'static str,
    pub modes: Vec<String>,
    pub residual: Vec<(String, Scalar)>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ModeReport {
    pub violations: Vec<ModeViolation>,
    pub checked: usize,
    /// Triples skipped because an intermediate bracket left the window.
    pub skipped: usize,
}

impl ModeReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Gaussian integer used by the fast Jacobi path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
struct GInt(i128, i128);

impl GInt {
    fn mul(self, o: GInt) -> Option<GInt> {
        let re = self.0.checked_mul(o.0)?.checked_sub(self.1.checked_mul(o.1)?)?;
        let im = self.0.checked_mul(o.1)?.checked_add(self.1.checked_mul(o.0)?)?;
        Some(GInt(re, im))
    }

    fn add(self, o: GInt) -> Option<GInt> {
        Some(GInt(self.0.checked_add(o.0)?, self.1.checked_add(o.1)?))
    }

    fn is_zero(self) -> bool {
        self.0 == 0 && self.1 == 0
    }
}

fn lcm(a: i128, b: i128) -> Option<i128> {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        let t = x % y;
        x = y;
        y = t;
    }
    (a / x).checked_mul(b)
}

fn rational_parts(r: &Rational) -> Option<(i128, i128)> {
    Some((r.numer().to_i128()?, r.denom().to_i128()?))
}

/// Integer table `D·[x, y]` with a common denominator `D`.
fn integer_table(t: &ModeTable) -> Option<Vec<Vec<(usize, GInt)>>> {
    let mut d: i128 = 1;
    for v in &t.brackets {
        for c in v.terms.values() {
            d = lcm(d, rational_parts(&c.re)?.1)?;
            d = lcm(d, rational_parts(&c.im)?.1)?;
        }
    }
    let conv = |r: &Rational| -> Option<i128> {
        let (n, q) = rational_parts(r)?;
        n.checked_mul(d / q)
    };
    t.brackets
        .iter()
        .map(|v| v.terms.iter().map(|(k, c)| Some((*k, GInt(conv(&c.re)?, conv(&c.im)?)))).collect())
        .collect()
}

fn sign_of(a: Parity, b: Parity) -> i128 {
    if a == Parity::Odd && b == Parity::Odd {
        -1
    } else {
        1
    }
}

/// Super-antisymmetry on all pairs and super-Jacobi on all in-window
/// triples `x <= y <= z` whose brackets stay in the window.
pub fn jacobi_check(t: &ModeTable) -> ModeReport {
    let mut report = ModeReport::default();
    let n = t.len();
    for x in 0..n {
        for y in x..n {
            let xy = t.bracket(x, y);
            let yx = t.bracket(y, x);
            if xy.truncated || yx.truncated {
                continue;
            }
            let s = -t.space_sign(x, y);
            let mut res = xy.clone();
            for (k, c) in &yx.terms {
                res.add(*k, &-&(c * &s));
            }
            if !res.is_zero() {
                report.violations.push(ModeViolation {
                    kind: "skew",
                    modes: vec![t.name(x), t.name(y)],
                    residual: res.terms.iter().map(|(k, c)| (t.name(*k), c.clone())).collect(),
                });
            }
        }
    }
    match integer_table(t) {
        Some(int) => jacobi_fast(t, &int, &mut report),
        None => jacobi_exact(t, &mut report),
    }
    report
}

impl ModeTable {
    fn space_sign(&self, x: usize, y: usize) -> Scalar {
        Scalar::from_int(sign_of(self.parities[x], self.parities[y]) as i64)
    }

    fn name(&self, id: usize) -> String {
        self.space.display(id)
    }
}

/// Accumulates `coef·[w, z]` for `w` ranging over a combination; `None`
/// when some bracket is truncated.
fn fold_fast(
    t: &ModeTable,
    int: &[Vec<(usize, GInt)>],
    left: &[(usize, GInt)],
    z: usize,
    left_outer: bool,
    coef: GInt,
    acc: &mut BTreeMap<usize, GInt>,
) -> Option<bool> {
    let n = t.len();
    for &(w, c) in left {
        let k = if left_outer { w * n + z } else { z * n + w };
        if t.brackets[k].truncated {
            return Some(false);
        }
        let cc = c.mul(coef)?;
        for &(u, d) in &int[k] {
            let e = acc.entry(u).or_default();
            *e = e.add(d.mul(cc)?)?;
        }
    }
    Some(true)
}

fn jacobi_fast(t: &ModeTable, int: &[Vec<(usize, GInt)>], report: &mut ModeReport) {
    let n = t.len();
    for x in 0..n {
        for y in x..n {
            let xy = t.bracket(x, y);
            if xy.truncated {
                report.skipped += n - y;
                continue;
            }
            for z in y..n {
                let (yz, xz) = (t.bracket(y, z), t.bracket(x, z));
                if yz.truncated || xz.truncated {
                    report.skipped += 1;
                    continue;
                }
                // [x,[y,z]] − [[x,y],z] − s(x,y)[y,[x,z]]
                let mut acc: BTreeMap<usize, GInt> = BTreeMap::new();
                let s = sign_of(t.parities[x], t.parities[y]);
                let steps = [
                    (&int[y * n + z], x, false, GInt(1, 0)),
                    (&int[x * n + y], z, true, GInt(-1, 0)),
                    (&int[x * n + z], y, false, GInt(-s, 0)),
                ];
                let mut ok = Some(true);
                for (left, other, outer, coef) in steps {
                    ok = fold_fast(t, int, left, other, outer, coef, &mut acc);
                    if ok != Some(true) {
                        break;
                    }
                }
                match ok {
                    Some(true) => {
                        report.checked += 1;
                        if acc.values().any(|v| !v.is_zero()) {
                            report.violations.push(jacobi_witness(t, x, y, z));
                        }
                    }
                    Some(false) => report.skipped += 1,
                    None => {
                        // overflow: redo this triple exactly
                        match jacobi_triple_exact(t, x, y, z) {
                            Some(true) => report.checked += 1,
                            Some(false) => {
                                report.checked += 1;
                                report.violations.push(jacobi_witness(t, x, y, z));
                            }
                            None => report.skipped += 1,
                        }
                    }
                }
            }
        }
    }
}

/// `Some(true)` when the identity holds, `None` when truncated.
fn jacobi_triple_exact(t: &ModeTable, x: usize, y: usize, z: usize) -> Option<bool> {
    Some(jacobi_residual(t, x, y, z)?.is_zero())
}

fn jacobi_residual(t: &ModeTable, x: usize, y: usize, z: usize) -> Option<ModeVec> {
    let (xy, yz, xz) = (t.bracket(x, y), t.bracket(y, z), t.bracket(x, z));
    if xy.truncated || yz.truncated || xz.truncated {
        return None;
    }
    let s = t.space_sign(x, y);
    let mut acc = ModeVec::default();
    let mut fold = |left: &ModeVec, other: usize, outer: bool, coef: Scalar| -> Option<()> {
        for (w, c) in &left.terms {
            let b = if outer { t.bracket(*w, other) } else { t.bracket(other, *w) };
            if b.truncated {
                return None;
            }
            let cc = c * &coef;
            for (u, d) in &b.terms {
                acc.add(*u, &(d * &cc));
            }
        }
        Some(())
    };
    fold(yz, x, false, Scalar::one())?;
    fold(xy, z, true, Scalar::from_int(-1))?;
    fold(xz, y, false, -&s)?;
    Some(acc)
}

fn jacobi_exact(t: &ModeTable, report: &mut ModeReport) {
    let n = t.len();
    for x in 0..n {
        for y in x..n {
            for z in y..n {
                match jacobi_triple_exact(t, x, y, z) {
                    Some(true) => report.checked += 1,
                    Some(false) => {
                        report.checked += 1;
                        report.violations.push(jacobi_witness(t, x, y, z));
                    }
                    None => report.skipped += 1,
                }
            }
        }
    }
}

fn jacobi_witness(t: &ModeTable, x: usize, y: usize, z: usize) -> ModeViolation {
    let res = jacobi_residual(t, x, y, z).unwrap_or_default();
    ModeViolation {
        kind: "jacobi",
        modes: vec![t.name(x), t.name(y), t.name(z)],
        residual: res.terms.iter().map(|(k, c)| (t.name(*k), c.clone())).collect(),
    }
}

/// Mode actions `a_(m) v_(n)` of a module.
#[derive(Clone, Debug)]
pub struct ModuleModeTable {
    pub algebra: ModeTable,
    pub space: ModeSpace,
    /// `actions[x * len + v] = x·v`.
    actions: Vec<ModeVec>,
}

impl ModuleModeTable {
    pub fn action(&self, x: usize, v: usize) -> &ModeVec {
        &self.actions[x * self.space.len() + v]
    }
}

pub fn expand_module_modes(m: &ConformalModule, window: (i64, i64)) -> ModuleModeTable {
    let algebra = expand_modes(m.algebra(), window);
    let space = ModeSpace::new(m.basis(), window.0, window.1);
    let mut actions = Vec::with_capacity(algebra.len() * space.len());
    for &(a, k) in &algebra.space.modes {
        for &(b, n) in &space.modes {
            actions.push(expand_pair(m.table(), m.basis(), &space, a, k, b, n));
        }
    }
    ModuleModeTable { algebra, space, actions }
}

/// Checks `[x, y]·v = x·(y·v) − (−1)^{p(x)p(y)} y·(x·v)` in the window.
pub fn module_mode_check(t: &ModuleModeTable) -> ModeReport {
    let mut report = ModeReport::default();
    let na = t.algebra.len();
    let nv = t.space.len();
    let apply = |left: &ModeVec, x: usize, acc: &mut ModeVec, coef: &Scalar| -> bool {
        for (v, c) in &left.terms {
            let r = t.action(x, *v);
            if r.truncated {
                return false;
            }
            let cc = c * coef;
            for (u, d) in &r.terms {
                acc.add(*u, &(d * &cc));
            }
        }
        true
    };
    for x in 0..na {
        for y in 0..na {
            let xy = t.algebra.bracket(x, y);
            for v in 0..nv {
                let (yv, xv) = (t.action(y, v), t.action(x, v));
                if xy.truncated || yv.truncated || xv.truncated {
                    report.skipped += 1;
                    continue;
                }
                let mut acc = ModeVec::default();
                let s = t.algebra.space_sign(x, y);
                let ok = apply(yv, x, &mut acc, &Scalar::one())
                    && apply(xv, y, &mut acc, &-&s)
                    && {
                        // − [x,y]·v
                        let mut good = true;
                        for (w, c) in &xy.terms {
                            let r = t.action(*w, v);
                            if r.truncated {
                                good = false;
                                break;
                            }
                            for (u, d) in &r.terms {
                                acc.add(*u, &-&(d * c));
                            }
                        }
                        good
                    };
                if !ok {
                    report.skipped += 1;
                    continue;
                }
                report.checked += 1;
                if !acc.is_zero() {
                    report.violations.push(ModeViolation {
                        kind: "module",
                        modes: vec![t.algebra.name(x), t.algebra.name(y), t.space.display(v)],
                        residual: acc.terms.iter().map(|(k, c)| (t.space.display(*k), c.clone())).collect(),
                    });
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{current, virasoro};
    use crate::dpoly::DPoly;
    use crate::lie::LieSuperalgebraData;
    use crate::module::{ext_torsion_sub, m_alpha_delta, trivial_module};
    use std::sync::Arc;

    #[test]
    fn virasoro_mode_law() {
        let v = virasoro();
        let t = expand_modes(&v, (-6, 6));
        for m in -6..=6 {
            for n in -6..=6 {
                let x = t.space.id(0, m).unwrap();
                let y = t.space.id(0, n).unwrap();
                let b = t.bracket(x, y);
                match t.space.id(0, m + n - 1) {
                    Some(z) if m != n => {
                        assert_eq!(b.terms.len(), 1);
                        assert_eq!(b.terms[&z], Scalar::from_int(m - n));
                    }
                    Some(_) => assert!(b.is_zero()),
                    None => assert!(b.truncated || m == n),
                }
            }
        }
        let r = jacobi_check(&t);
        assert!(r.passed());
        assert!(r.checked > 0 && r.skipped > 0);
    }

    #[test]
    fn corrupted_virasoro_fails() {
        let bad = virasoro().with_raw_product(0, 0, 1, Element::term(0, DPoly::from_ints(&[3])));
        assert!(!jacobi_check(&expand_modes(&bad, (-6, 6))).passed());
    }

    #[test]
    fn current_modes() {
        let c = current(&LieSuperalgebraData::sl2());
        let t = expand_modes(&c, (-3, 3));
        let e = t.space.id(0, 2).unwrap();
        let f = t.space.id(1, -1).unwrap();
        let h = t.space.id(2, 1).unwrap();
        assert_eq!(t.bracket(e, f).terms, BTreeMap::from([(h, Scalar::one())]));
        assert!(jacobi_check(&t).passed());
        assert_eq!(locality_order(&c, 0, 1), 1);
        assert_eq!(locality_order(&virasoro(), 0, 0), 2);
    }

    #[test]
    fn m_alpha_delta_modes() {
        let (alpha, delta) = (Scalar::from_ratio(1, 2), Scalar::from_int(3));
        let t = expand_module_modes(&m_alpha_delta(&alpha, &delta), (-5, 5));
        for k in -5..=5 {
            for n in -5..=5 {
                let x = t.algebra.space.id(0, k).unwrap();
                let v = t.space.id(0, n).unwrap();
                let mut want = ModeVec::default();
                let c = &(&delta * &Scalar::from_int(k)) - &Scalar::from_int(k + n);
                match t.space.id(0, k + n - 1) {
                    Some(id) => want.add(id, &c),
                    None => want.truncated |= !c.is_zero(),
                }
                match t.space.id(0, k + n) {
                    Some(id) => want.add(id, &alpha),
                    None => want.truncated = true,
                }
                let got = t.action(x, v);
                assert_eq!(got.terms, want.terms, "L_({k}) v_({n})");
            }
        }
        assert!(module_mode_check(&t).passed());
    }

    #[test]
    fn trivial_module_modes_vanish() {
        let t = expand_module_modes(&trivial_module(Arc::new(virasoro()), &Scalar::zero()), (-4, 4));
        assert!(t.actions.iter().all(ModeVec::is_zero));
    }

    #[test]
    fn ext_b_central_component() {
        let m = ext_torsion_sub(&Scalar::zero(), 2).unwrap();
        let c = m.basis().index_of("c").unwrap();
        let t = expand_module_modes(&m, (-6, 6));
        let cid = t.space.id(c, -1).unwrap();
        for k in 0..=6 {
            let x = t.algebra.space.id(0, k).unwrap();
            let hits = t.space.modes.iter().enumerate().any(|(v, _)| t.action(x, v).terms.contains_key(&cid));
            assert_eq!(hits, k >= 3, "L_({k})");
        }
        assert!(module_mode_check(&t).passed());
    }
}
