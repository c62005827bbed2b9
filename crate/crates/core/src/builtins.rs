//! Named built-in algebras for the CLI and the DSL `over` clause.

use crate::algebra::ConformalSuperalgebra;
use crate::constructions::{current, make_ck6, make_kn, make_sn, make_wn, semidirect_vir_current, virasoro};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::lie::LieSuperalgebraData;
use crate::module::{
    current_module, ext_killing, ext_quotient, ext_quotient_submodule, ext_torsion_sub, m_alpha_delta,
    vir_current_module, ConformalModule,
};
use crate::scalar::Scalar;
use crate::submodule::Submodule;

/// Names accepted by [`algebra`], with `N` standing for a number.
pub const NAMES: &[&str] = &[
    "vir",
    "current-<lie>",
    "vir-current-<lie>",
    "wN",
    "sN",
    "kN",
    "ck6",
    "zero",
];

/// Lie algebras usable in `current-<lie>`.
pub const LIE_NAMES: &[&str] = &["sl2", "gl2", "borel", "h3", "abelianN"];

fn lie(name: &str) -> Result<LieSuperalgebraData> {
    LieSuperalgebraData::builtin(name).ok_or_else(|| Error::UnknownBuiltin(name.to_string()))
}

fn numbered(name: &str, prefix: &str) -> Option<usize> {
    name.strip_prefix(prefix).and_then(|k| k.parse().ok())
}

/// Looks up a built-in algebra such as `vir`, `current-sl2`, `w2` or `ck6`.
pub fn algebra(name: &str) -> Result<ConformalSuperalgebra> {
    let lower = name.to_ascii_lowercase();
    if lower == "vir" {
        return Ok(virasoro());
    }
    if lower == "ck6" {
        return make_ck6();
    }
    if lower == "zero" {
        return ConformalSuperalgebra::from_products("zero", Vec::new(), Vec::new());
    }
    if let Some(g) = lower.strip_prefix("vir-current-") {
        return semidirect_vir_current(&lie(g)?);
    }
    if let Some(g) = lower.strip_prefix("current-") {
        return Ok(current(&lie(g)?));
    }
    if let Some(n) = numbered(&lower, "w") {
        return make_wn(n);
    }
    if let Some(n) = numbered(&lower, "s") {
        return make_sn(n);
    }
    if let Some(n) = numbered(&lower, "k") {
        return make_kn(n);
    }
    Err(Error::UnknownBuiltin(name.to_string()))
}

/// Module specs accepted by [`module`]; scalars may be written `1/2`, `2i`.
pub const MODULE_NAMES: &[&str] = &[
    "mad:ALPHA:DELTA",
    "ext-quotient:ALPHA",
    "ext-torsion:ALPHA:DELTA",
    "ext-killing:<lie>",
    "current-std-sl2",
    "current-adjoint:<lie>",
    "vir-current-std-sl2:DELTA",
];

fn scalar_arg(spec: &str, s: &str) -> Result<Scalar> {
    s.parse().map_err(|_| Error::UnknownBuiltin(spec.to_string()))
}

fn torsion_part(m: &ConformalModule) -> Submodule {
    let basis = m.basis();
    let seeds: Vec<Element> = (0..basis.len()).filter(|&k| basis.get(k).is_torsion()).map(Element::unit).collect();
    Submodule::new(basis, &seeds)
}

/// Looks up a built-in module by spec, together with its distinguished
/// submodule when it is presented as an extension.
pub fn module(spec: &str) -> Result<(ConformalModule, Option<Submodule>)> {
    let parts: Vec<&str> = spec.split(':').collect();
    let unknown = || Error::UnknownBuiltin(spec.to_string());
    match parts.as_slice() {
        ["mad", a, d] => Ok((m_alpha_delta(&scalar_arg(spec, a)?, &scalar_arg(spec, d)?), None)),
        ["ext-quotient", a] => {
            let alpha = scalar_arg(spec, a)?;
            let m = ext_quotient(&alpha);
            let sub = ext_quotient_submodule(&m, &alpha);
            Ok((m, Some(sub)))
        }
        ["ext-torsion", a, d] => {
            let delta: usize = d.parse().map_err(|_| unknown())?;
            let m = ext_torsion_sub(&scalar_arg(spec, a)?, delta)?;
            let sub = torsion_part(&m);
            Ok((m, Some(sub)))
        }
        ["ext-killing", g] => {
            let m = ext_killing(&lie(g)?)?;
            let sub = torsion_part(&m);
            Ok((m, Some(sub)))
        }
        ["current-std-sl2"] => {
            Ok((current_module(&LieSuperalgebraData::sl2(), &LieSuperalgebraData::sl2_standard_rep())?, None))
        }
        ["current-adjoint", g] => {
            let g = lie(g)?;
            Ok((current_module(&g, &g.adjoint_rep())?, None))
        }
        ["vir-current-std-sl2", d] => {
            let g = LieSuperalgebraData::sl2();
            Ok((vir_current_module(&g, &LieSuperalgebraData::sl2_standard_rep(), &scalar_arg(spec, d)?)?, None))
        }
        _ => Err(unknown()),
    }
}

/// The algebras of the standard verification suite.
pub fn suite() -> Vec<&'static str> {
    vec!["vir", "current-sl2", "vir-current-sl2", "w1", "w2", "w3", "s2", "s3", "k1", "k2", "k3", "k4", "ck6"]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookups() {
        assert_eq!(algebra("vir").unwrap().rank(), 1);
        assert_eq!(algebra("current-sl2").unwrap().rank(), 3);
        assert_eq!(algebra("vir-current-sl2").unwrap().rank(), 4);
        assert_eq!(algebra("W2").unwrap().rank(), 12);
        assert_eq!(algebra("zero").unwrap().rank(), 0);
        assert!(matches!(algebra("nope"), Err(Error::UnknownBuiltin(_))));
        assert!(algebra("current-e8").is_err());
    }

    #[test]
    fn module_specs() {
        let (m, sub) = module("mad:1/2:2").unwrap();
        assert_eq!(m.rank(), 1);
        assert!(sub.is_none());
        let (m, sub) = module("ext-torsion:0:2").unwrap();
        assert!(!m.is_split(&sub.unwrap(), 3).unwrap());
        assert!(module("ext-torsion:0:5").is_err());
        assert!(module("mad:x:1").is_err());
    }
}
