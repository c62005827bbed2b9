//! Canonical JSON: sorted keys, scalars as `{"re":"p/q","im":"p/q"}`,
//! polynomials as coefficient arrays by ∂-degree.

use serde_json::{json, Map, Value};

use crate::algebra::{AxiomReport, ConformalSuperalgebra, Violation};
use crate::cohomology::{H2Result, TwoCocycle};
use crate::dpoly::DPoly;
use crate::element::{Basis, Element, Parity};
use crate::modes::{ModeReport, ModeTable};
use crate::module::ConformalModule;
use crate::pdmatrix::Size;
use crate::scalar::{Rational, Scalar};
use crate::submodule::Submodule;

pub fn rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn scalar(c: &Scalar) -> Value {
    json!({ "re": rational(&c.re), "im": rational(&c.im) })
}

pub fn poly(p: &DPoly) -> Value {
    Value::Array(p.coeffs().iter().map(scalar).collect())
}

/// `{"GEN": [coefficients]}` over the generators in the support.
pub fn element(basis: &Basis, x: &Element) -> Value {
    let mut m = Map::new();
    for (g, p) in x.terms() {
        m.insert(basis.name(g).to_string(), poly(p));
    }
    Value::Object(m)
}

pub fn size(s: Size) -> Value {
    json!({ "r": s.r, "d": s.d })
}

pub fn parity(p: Parity) -> &'static str {
    match p {
        Parity::Even => "even",
        Parity::Odd => "odd",
    }
}

pub fn generators(basis: &Basis) -> Value {
    Value::Array(
        basis
            .gens()
            .iter()
            .map(|g| {
                let mut m = Map::new();
                m.insert("name".into(), json!(g.name));
                m.insert("parity".into(), json!(parity(g.parity)));
                if let Some(c) = &g.torsion {
                    m.insert("torsion".into(), scalar(c));
                }
                Value::Object(m)
            })
            .collect(),
    )
}

pub fn submodule(s: &Submodule) -> Value {
    let basis = s.ambient();
    json!({
        "size": size(s.size()),
        "generators": s.generators().iter().map(|x| element(basis, x)).collect::<Vec<_>>(),
    })
}

/// All nonzero products `a_(n)b`.
pub fn algebra_table(r: &ConformalSuperalgebra) -> Value {
    let basis = r.basis();
    let products: Vec<Value> = r
        .lambda_table()
        .iter()
        .map(|row| {
            json!({
                "a": basis.name(row.a),
                "b": basis.name(row.b),
                "n": row.n,
                "rhs": element(basis, &row.value),
            })
        })
        .collect();
    json!({
        "algebra": r.name(),
        "generators": generators(basis),
        "size": size(r.size()),
        "products": products,
    })
}

pub fn module_table(m: &ConformalModule) -> Value {
    let alg = m.algebra().basis();
    let basis = m.basis();
    let actions: Vec<Value> = m
        .action_rows()
        .iter()
        .map(|row| {
            json!({
                "a": alg.name(row.a),
                "v": basis.name(row.b),
                "n": row.n,
                "rhs": element(basis, &row.value),
            })
        })
        .collect();
    json!({
        "module": m.name(),
        "algebra": m.algebra().name(),
        "generators": generators(basis),
        "actions": actions,
    })
}

pub fn violation(target: &Basis, v: &Violation) -> Value {
    json!({
        "axiom": v.axiom.to_string(),
        "gens": v.gens,
        "m": v.m,
        "n": v.n,
        "lhs": element(target, &v.lhs),
        "rhs": element(target, &v.rhs),
        "text": v.to_string(),
    })
}

pub fn axiom_report(target: &Basis, r: &AxiomReport) -> Value {
    json!({
        "passed": r.passed(),
        "pairs_checked": r.pairs_checked,
        "triples_checked": r.triples_checked,
        "violations": r.violations.iter().map(|v| violation(target, v)).collect::<Vec<_>>(),
    })
}

pub fn cocycle(c: &TwoCocycle) -> Value {
    let basis = c.algebra().basis();
    let values: Vec<Value> = c
        .stored()
        .map(|(&(i, j, n), v)| json!({ "a": basis.name(i), "b": basis.name(j), "n": n, "value": scalar(v) }))
        .collect();
    json!({ "algebra": c.algebra().name(), "values": values })
}

pub fn h2(r: &H2Result) -> Value {
    json!({
        "dim": r.dimension,
        "cocycle_dim": r.cocycle_dim,
        "trivial_dim": r.trivial_dim,
        "n_bound": r.n_bound,
        "f_degree_bound": r.f_degree_bound,
        "representatives": r.representatives.iter().map(cocycle).collect::<Vec<_>>(),
    })
}

pub fn mode_table(t: &ModeTable) -> Value {
    let brackets: Vec<Value> = t
        .nonzero()
        .map(|(x, y, v)| {
            let mut rhs = Map::new();
            for (k, c) in &v.terms {
                rhs.insert(t.space.display(*k), scalar(c));
            }
            json!({ "x": t.space.display(x), "y": t.space.display(y), "rhs": rhs, "truncated": v.truncated })
        })
        .collect();
    json!({ "window": [t.space.lo, t.space.hi], "modes": t.len(), "brackets": brackets })
}

pub fn mode_report(r: &ModeReport) -> Value {
    let violations: Vec<Value> = r
        .violations
        .iter()
        .map(|v| {
            let mut res = Map::new();
            for (k, c) in &v.residual {
                res.insert(k.clone(), scalar(c));
            }
            json!({ "kind": v.kind, "modes": v.modes, "residual": res })
        })
        .collect();
    json!({ "passed": r.passed(), "checked": r.checked, "skipped": r.skipped, "violations": violations })
}

/// Pretty-printed canonical text with a trailing newline.
pub fn to_bytes(v: &Value) -> Vec<u8> {
    let mut s = serde_json::to_string_pretty(v).expect("values built here always serialize");
    s.push('\n');
    s.into_bytes()
}

/// Inverse of [`scalar`].
pub fn parse_scalar(v: &Value) -> Option<Scalar> {
    let re: Rational = v.get("re")?.as_str()?.parse().ok()?;
    let im: Rational = v.get("im")?.as_str()?.parse().ok()?;
    Some(Scalar { re, im })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::virasoro;

    #[test]
    fn virasoro_table_shape() {
        let v = algebra_table(&virasoro());
        let products = v["products"].as_array().unwrap();
        assert_eq!(products.len(), 2);
        assert_eq!(products[0]["n"], 0);
        assert_eq!(products[0]["rhs"]["L"][1], json!({"re": "1/1", "im": "0/1"}));
        assert_eq!(products[1]["rhs"]["L"][0]["re"], "2/1");
    }

    #[test]
    fn sorted_keys_and_scalars() {
        let c: Scalar = "-1/2+3i".parse().unwrap();
        let text = String::from_utf8(to_bytes(&scalar(&c))).unwrap();
        assert!(text.find("\"im\"").unwrap() < text.find("\"re\"").unwrap());
        assert_eq!(parse_scalar(&scalar(&c)), Some(c));
    }

    #[test]
    fn zero_algebra_has_no_products() {
        let z = ConformalSuperalgebra::from_products("zero", Vec::new(), Vec::new()).unwrap();
        assert_eq!(algebra_table(&z)["products"], json!([]));
    }
}
