//! Acceptance suite: one line per criterion. Exact arithmetic throughout, so
//! every tolerance is zero. `CFA_SEED` overrides the sampling seed.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use confalg::cohomology::{h2_dimension, is_coboundary, TwoCocycle};
use confalg::constructions::{ck6_spanning_set, current, make_kn, make_sn, semidirect_vir_current, virasoro};
use confalg::gc::{gc_jacobi_holds, gc_skew_holds, GcElement};
use confalg::lie::LieSuperalgebraData;
use confalg::linalg::Matrix;
use confalg::modes::{expand_modes, jacobi_check};
use confalg::module::{
    current_module, ext_killing, ext_quotient, ext_quotient_submodule, ext_torsion_sub, m_a_b, m_alpha_delta,
    trivial_module, vir_current_module, ConformalModule,
};
use confalg::structure::{
    default_depth, derived_series, find_proper_ideal, is_ideal, is_nilpotent, is_solvable, lower_central_series,
    submodule_nilpotent, IdealSearch, Verdict,
};
use confalg::submodule::Submodule;
use confalg::{builtins, dsl, Axiom, ConformalSuperalgebra, DPoly, Element, PdMatrix, Scalar};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn seed() -> u64 {
    std::env::var("CFA_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(20240611)
}

/// The algebras of the axiom suite, by built-in name.
const SUITE: &[&str] =
    &["vir", "current-sl2", "vir-current-sl2", "w0", "w1", "w2", "w3", "s2", "s3", "k0", "k1", "k2", "k3", "k4", "ck6"];

fn suite() -> Vec<ConformalSuperalgebra> {
    SUITE.iter().map(|n| builtins::algebra(n).unwrap_or_else(|e| panic!("{n}: {e}"))).collect()
}

fn corrupted_vir() -> ConformalSuperalgebra {
    virasoro().with_raw_product(0, 0, 1, Element::term(0, DPoly::from_ints(&[3])))
}

fn c1_axioms() -> Outcome {
    let start = Instant::now();
    for r in suite() {
        let rep = r.check_axioms();
        ensure(rep.passed(), || format!("{}: {} violations, first {}", r.name(), rep.violations.len(), rep.violations[0]))?;
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(120), || format!("took {t:?}, limit 120s"))?;
    Ok(format!("{} algebras, 0 violations", SUITE.len()))
}

fn c2_ranks() -> Outcome {
    let want = [("w2", 12), ("w3", 32), ("s2", 8), ("s3", 24), ("k3", 8), ("k4", 16), ("ck6", 32)];
    let mut got = Vec::new();
    for (name, rank) in want {
        let r = builtins::algebra(name).map_err(|e| e.to_string())?;
        ensure(r.rank() == rank && r.basis().is_free(), || format!("{name}: rank {} (want {rank})", r.rank()))?;
        got.push(format!("{name}={rank}"));
    }
    Ok(got.join(" "))
}

fn c3_ck6_closure() -> Outcome {
    let k6 = make_kn(6).map_err(|e| e.to_string())?;
    let set = ck6_spanning_set().map_err(|e| e.to_string())?;
    let cols: Vec<Vec<DPoly>> = set.iter().map(|(_, x)| k6.basis().to_vec(x)).collect();
    let herm = PdMatrix::from_columns(k6.rank(), &cols).hermite();
    let mut checked = 0;
    for (si, x) in &set {
        for (sj, y) in &set {
            let lp = k6.bracket(x, y).map_err(|e| e.to_string())?;
            for (n, z) in lp.products().iter().enumerate() {
                ensure(herm.contains(&k6.basis().to_vec(z)), || format!("{si:?}_({n}){sj:?} leaves the span"))?;
                checked += 1;
            }
        }
    }
    let rank = herm.form.rank();
    ensure(rank == 32, || format!("span has rank {rank}"))?;
    Ok(format!("{} spanning elements, {checked} products in the span (rank {rank})", set.len()))
}

fn c4_simplicity() -> Outcome {
    let mut out = Vec::new();
    let with_ideal = [make_sn(1).map_err(|e| e.to_string())?, current(&LieSuperalgebraData::gl2())];
    for r in &with_ideal {
        let res = find_proper_ideal(r, IdealSearch::new(r));
        let s = res.ideal.ok_or_else(|| format!("{}: no ideal found", r.name()))?;
        ensure(is_ideal(r, &s) && !s.is_zero() && !s.is_full(), || format!("{}: bad certificate", r.name()))?;
        out.push(format!("{}: ideal {}", r.name(), s.display()));
    }
    let simple = [virasoro(), current(&LieSuperalgebraData::sl2()), make_sn(2).map_err(|e| e.to_string())?];
    for r in &simple {
        let res = find_proper_ideal(r, IdealSearch::new(r));
        ensure(res.ideal.is_none(), || format!("{}: unexpected ideal", r.name()))?;
        out.push(format!("{}: none in {}", r.name(), res.candidates_examined));
    }
    Ok(out.join("; "))
}

fn c5_oracle() -> Outcome {
    let mut checked = 0;
    for r in suite() {
        let rep = jacobi_check(&expand_modes(&r, (-6, 6)));
        ensure(rep.passed(), || format!("{}: {} mode violations", r.name(), rep.violations.len()))?;
        checked += rep.checked;
    }
    let bad = corrupted_vir();
    let modes = jacobi_check(&expand_modes(&bad, (-6, 6)));
    ensure(!modes.passed(), || "corrupted Vir passes the mode check".into())?;
    let axioms = bad.check_axioms();
    let nine = Element::term(0, DPoly::from_ints(&[9]));
    let twelve = Element::term(0, DPoly::from_ints(&[12]));
    let witness = axioms.violations.iter().find(|v| {
        v.axiom == Axiom::Jacobi
            && v.gens == ["L", "L", "L"]
            && v.m == Some(1)
            && v.n == 1
            && ((v.lhs == nine && v.rhs == twelve) || (v.lhs == twelve && v.rhs == nine))
    });
    ensure(witness.is_some(), || format!("no (L,L,L,1,1) 9L vs 12L witness among {:?}", axioms.violations))?;
    Ok(format!(
        "{checked} in-window triples clean; corrupted Vir: {} mode violations, witness {}",
        modes.violations.len(),
        witness.unwrap()
    ))
}

fn c6_mode_law() -> Outcome {
    let t = expand_modes(&virasoro(), (-6, 6));
    let mut checked = 0;
    for m in -6..=6i64 {
        for n in -6..=6i64 {
            let b = t.bracket(t.space.id(0, m).unwrap(), t.space.id(0, n).unwrap());
            let target = m + n - 1;
            if !(-6..=6).contains(&target) {
                continue;
            }
            let z = t.space.id(0, target).unwrap();
            let want: Vec<(usize, Scalar)> =
                if m == n { Vec::new() } else { vec![(z, Scalar::from_int(m - n))] };
            let got: Vec<(usize, Scalar)> = b.terms.iter().map(|(k, c)| (*k, c.clone())).collect();
            ensure(got == want && !b.truncated, || format!("[L_({m}), L_({n})] = {got:?}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} in-window pairs"))
}

fn killing_cocycle(alg: &Arc<ConformalSuperalgebra>, g: &LieSuperalgebraData, scale: &Scalar) -> TwoCocycle {
    let k = g.killing_form();
    let mut vals = Vec::new();
    for i in 0..g.dim() {
        for j in 0..g.dim() {
            vals.push((i, j, 1, k.get(i, j) * scale));
        }
    }
    TwoCocycle::from_values(alg.clone(), vals).expect("indices in range")
}

fn c7_cohomology() -> Outcome {
    let start = Instant::now();
    let mut out = Vec::new();
    for (name, want) in [("vir", 1), ("w1", 1), ("w3", 0), ("s2", 1), ("k3", 1)] {
        let r = Arc::new(builtins::algebra(name).map_err(|e| e.to_string())?);
        let h = h2_dimension(&r, 6, 8);
        ensure(h.dimension == want, || format!("H2({name}) = {} (want {want})", h.dimension))?;
        out.push(format!("{name}={}", h.dimension));
    }
    let g = LieSuperalgebraData::sl2();
    let r = Arc::new(current(&g));
    let h = h2_dimension(&r, 6, 8);
    ensure(h.dimension == 1, || format!("H2(current sl2) = {}", h.dimension))?;
    let rep = &h.representatives[0];
    let (ie, jf) = (g.index_of("e").unwrap(), g.index_of("f").unwrap());
    let kef = g.killing_form().get(ie, jf).clone();
    let c = &rep.value(ie, jf, 1) * &kef.inv();
    ensure(!c.is_zero(), || "representative vanishes on (e, f) at n = 1".into())?;
    let diff = killing_cocycle(&r, &g, &-&c);
    let diff = rep.add(&diff).map_err(|e| e.to_string())?;
    ensure(diff.is_zero() || is_coboundary(&diff, 8).is_some(), || {
        format!("representative {} is not proportional to the Killing cocycle", rep.display())
    })?;
    out.push("current(sl2)=1 (Killing form at n=1)".into());
    let t = start.elapsed();
    ensure(t < Duration::from_secs(300), || format!("took {t:?}, limit 300s"))?;
    Ok(out.join(" "))
}

fn module_ok(m: &ConformalModule) -> Result<(), String> {
    let rep = m.check();
    ensure(rep.passed(), || format!("{}: {}", m.name(), rep.violations[0]))
}

fn c8_modules() -> Outcome {
    let q = |a: i64, b: i64| Scalar::from_ratio(a, b);
    let mut count = 0;
    for (a, d) in [(q(0, 1), q(0, 1)), (q(1, 2), q(2, 1)), (q(-3, 1), q(1, 1)), (q(2, 3), q(5, 7))] {
        let m = m_alpha_delta(&a, &d);
        module_ok(&m)?;
        let irr = m.is_irreducible_rank1().map_err(|e| e.to_string())?;
        ensure(irr == !d.is_zero(), || format!("{}: irreducible = {irr}", m.name()))?;
        count += 1;
    }
    let pair = m_a_b(&Matrix::from_ints(&[&[1, 1], &[0, 1]]), &Matrix::from_ints(&[&[2, 3], &[0, 2]]))
        .map_err(|e| e.to_string())?;
    module_ok(&pair)?;
    let sl2 = LieSuperalgebraData::sl2();
    module_ok(&current_module(&sl2, &LieSuperalgebraData::sl2_standard_rep()).map_err(|e| e.to_string())?)?;
    module_ok(&current_module(&sl2, &sl2.adjoint_rep()).map_err(|e| e.to_string())?)?;
    module_ok(
        &vir_current_module(&sl2, &LieSuperalgebraData::sl2_standard_rep(), &q(1, 2)).map_err(|e| e.to_string())?,
    )?;
    let a = q(1, 3);
    let ea = ext_quotient(&a);
    module_ok(&ea)?;
    ensure(ea.is_submodule(&ext_quotient_submodule(&ea, &a)), || "ext_quotient submodule".into())?;
    count += 5;
    for delta in [1, 2] {
        let m = ext_torsion_sub(&a, delta).map_err(|e| e.to_string())?;
        module_ok(&m)?;
        let c = Submodule::new(m.basis(), &[Element::unit(1)]);
        ensure(!m.is_split(&c, 4).map_err(|e| e.to_string())?, || format!("{} splits", m.name()))?;
        count += 1;
    }
    let k = ext_killing(&sl2).map_err(|e| e.to_string())?;
    module_ok(&k)?;
    let one = Submodule::new(k.basis(), &[Element::unit(sl2.dim())]);
    ensure(!k.is_split(&one, 4).map_err(|e| e.to_string())?, || "Killing extension splits".into())?;
    let m1 = m_alpha_delta(&q(1, 1), &q(2, 1));
    let sum = m1.direct_sum(&m_alpha_delta(&q(0, 1), &q(1, 1))).map_err(|e| e.to_string())?;
    module_ok(&sum)?;
    ensure(sum.is_split(&Submodule::new(sum.basis(), &[Element::unit(0)]), 4).map_err(|e| e.to_string())?, || {
        "free direct sum does not split".into()
    })?;
    let tsum = m1.direct_sum(&trivial_module(m1.algebra_arc().clone(), &q(0, 1))).map_err(|e| e.to_string())?;
    module_ok(&tsum)?;
    ensure(tsum.is_split(&Submodule::new(tsum.basis(), &[Element::unit(1)]), 4).map_err(|e| e.to_string())?, || {
        "torsion direct sum does not split".into()
    })?;
    count += 3;
    Ok(format!("{count} modules pass; 3 non-split extensions, 2 split sums; irreducible iff Δ ≠ 0"))
}

fn c9_structure() -> Outcome {
    let verify = |r: &ConformalSuperalgebra| -> Result<usize, String> {
        let depth = default_depth(r);
        let mut n = 0;
        for s in derived_series(r, depth).iter().chain(lower_central_series(r, depth).iter()) {
            ensure(is_ideal(r, s), || format!("{}: series member {} is not an ideal", r.name(), s.display()))?;
            n += 1;
        }
        Ok(n)
    };
    let h3 = current(&LieSuperalgebraData::heisenberg());
    ensure(is_nilpotent(&h3, default_depth(&h3)).verdict == Verdict::Yes, || "current(h3) not nilpotent".into())?;
    let b = current(&LieSuperalgebraData::borel_sl2());
    let sol = is_solvable(&b, default_depth(&b));
    ensure(sol.verdict == Verdict::Yes, || "current(borel) not solvable".into())?;
    ensure(submodule_nilpotent(&b, &sol.series[1], default_depth(&b)) == Verdict::Yes, || {
        "derived algebra of current(borel) not nilpotent".into()
    })?;
    let v = virasoro();
    ensure(is_solvable(&v, default_depth(&v)).verdict == Verdict::No, || "Vir solvable?".into())?;
    ensure(is_nilpotent(&v, default_depth(&v)).verdict == Verdict::No, || "Vir nilpotent?".into())?;
    let mut members = 0;
    for r in [&h3, &b, &v, &semidirect_vir_current(&LieSuperalgebraData::sl2()).map_err(|e| e.to_string())?] {
        members += verify(r)?;
    }
    Ok(format!("verdicts as expected; {members} series members re-verified as ideals"))
}

fn random_gc(rng: &mut ChaCha8Rng, n: usize) -> GcElement {
    let support = rng.gen_range(1..=3);
    let modes = (0..support).map(|_| {
        let k = rng.gen_range(0..3);
        let rows: Vec<Vec<DPoly>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        let deg = rng.gen_range(0..=2);
                        DPoly::from_ints(&(0..=deg).map(|_| rng.gen_range(-2..=2)).collect::<Vec<i64>>())
                    })
                    .collect()
            })
            .collect();
        (k, PdMatrix::from_rows(&rows))
    });
    GcElement::from_modes(n, modes.collect::<Vec<_>>()).expect("square matrices")
}

fn c10_gc() -> Outcome {
    for (a, d) in [(0, 1), (1, 2), (3, 0)] {
        let m = m_alpha_delta(&Scalar::from_int(a), &Scalar::from_int(d));
        let rep = m.rep_to_gc().map_err(|e| e.to_string())?;
        ensure(rep.is_homomorphism() && rep.faithful, || {
            format!("{}: homomorphism {}, faithful {}", m.name(), rep.is_homomorphism(), rep.faithful)
        })?;
    }
    let seed = seed();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples = 200;
    for s in 0..samples {
        let n = rng.gen_range(1..=2);
        let (a, b, c) = (random_gc(&mut rng, n), random_gc(&mut rng, n), random_gc(&mut rng, n));
        let (m, k) = (rng.gen_range(0..3), rng.gen_range(0..3));
        ensure(gc_skew_holds(&a, &b, k).map_err(|e| e.to_string())?, || format!("skew fails at sample {s}"))?;
        ensure(gc_jacobi_holds(&a, &b, &c, m, k).map_err(|e| e.to_string())?, || format!("Jacobi fails at sample {s}"))?;
    }
    Ok(format!("Vir images faithful; {samples} random samples (seed {seed}) satisfy skew and Jacobi"))
}

fn mutate(rng: &mut ChaCha8Rng, text: &str) -> String {
    const ALPHABET: &[char] = &[
        '[', ']', '<', '>', '(', ')', '{', '}', ';', '=', '+', '-', '*', '^', '/', '0', '1', '2', '9', 'd', 'i', 'L',
        'x', ' ', '\n', '#', ',', 'é', '\0',
    ];
    let mut s: Vec<char> = text.chars().collect();
    for _ in 0..rng.gen_range(1..=4) {
        if s.is_empty() {
            break;
        }
        let p = rng.gen_range(0..s.len());
        match rng.gen_range(0..4) {
            0 => {
                s.remove(p);
            }
            1 => s.insert(p, ALPHABET[rng.gen_range(0..ALPHABET.len())]),
            2 => s[p] = ALPHABET[rng.gen_range(0..ALPHABET.len())],
            _ => {
                let q = rng.gen_range(p..s.len());
                let chunk: Vec<char> = s[p..=q.min(p + 8)].to_vec();
                let at = rng.gen_range(0..s.len());
                s.splice(at..at, chunk);
            }
        }
    }
    s.into_iter().collect()
}

fn c11_parser() -> Outcome {
    let mut texts = Vec::new();
    for name in SUITE {
        let r = builtins::algebra(name).map_err(|e| e.to_string())?;
        let text = dsl::emit_algebra(&r);
        let back = dsl::parse_algebra(&text).map_err(|e| format!("{name}: {e}"))?;
        ensure(back.table() == r.table() && back.basis() == r.basis(), || format!("{name}: round trip differs"))?;
        if r.rank() <= 12 {
            texts.push(text);
        }
    }
    texts.push(dsl::emit_module(&m_alpha_delta(&Scalar::from_ratio(1, 2), &Scalar::from_int(2))));
    let mut rng = ChaCha8Rng::seed_from_u64(seed() ^ 0xf022);
    let trials = 10_000;
    let (mut errors, mut positioned) = (0, 0);
    for k in 0..trials {
        let text = mutate(&mut rng, &texts[k % texts.len()]);
        let res = catch_unwind(AssertUnwindSafe(|| dsl::parse(&text)));
        match res {
            Err(_) => return Err(format!("parser panicked on mutation {k}:\n{text}")),
            Ok(Err(e)) => {
                errors += 1;
                if e.line >= 1 && e.col >= 1 {
                    positioned += 1;
                }
            }
            Ok(Ok(_)) => {}
        }
    }
    ensure(errors == positioned, || "an error without position".into())?;
    Ok(format!("{} round trips; {trials} mutations, {errors} structured errors, 0 panics", SUITE.len()))
}

fn main() -> ExitCode {
    let criteria: Vec<(&str, fn() -> Outcome)> = vec![
        ("axiom suite", c1_axioms),
        ("ranks", c2_ranks),
        ("CK6 closure", c3_ck6_closure),
        ("simplicity instances", c4_simplicity),
        ("mode oracle equivalence", c5_oracle),
        ("Virasoro mode law", c6_mode_law),
        ("cohomology dimensions", c7_cohomology),
        ("module instances", c8_modules),
        ("structure theory", c9_structure),
        ("gc embedding", c10_gc),
        ("parser", c11_parser),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (k, (title, f)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let res = catch_unwind(f).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panic: {}", msg.unwrap_or_default()))
        });
        let t = start.elapsed().as_secs_f64();
        match res {
            Ok(detail) => println!("[PASS] {:>2}. {title} (tolerance 0, {t:.1}s): {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {:>2}. {title} (tolerance 0, {t:.1}s): {detail}", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
