//! Assembly of the normalized invariant: raw evaluation, inertia of the
//! Kirby linking matrix, the dimension factors, the band scalars, and the
//! division.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::json;
use thiserror::Error;

use crate::algebra::{inertia, CycloNumber, InertiaTriple};
use crate::category::{
    cap_scalar, cup_scalar, swim_check, transparent_degrees, CategoryParams, KirbyScope,
};
use crate::diagram::{link_summary, validate, Diagram};
use crate::engine::{eval_closed, EngineError, EvalContext};

#[derive(Debug, Error)]
pub enum InvariantError {
    #[error("engine error: {0}")]
    Engine(#[from] EngineError),
    #[error("diagram error: {0}")]
    Diagram(#[from] crate::diagram::DiagramError),
    #[error("invalid diagram: {0}")]
    Invalid(String),
}

/// The raw evaluation together with every normalization factor and the
/// final value. The reconstruction identity
/// `value * delta_b^b0 * (delta_c * delta_pp)^b+ * k^s * kappa^omega = raw`
/// holds exactly whenever `value` is present.
#[derive(Clone, Debug)]
pub struct InvariantReport {
    pub raw: CycloNumber,
    pub inertia: InertiaTriple,
    pub s: usize,
    pub omega: usize,
    pub delta_b: u32,
    pub delta_c: u32,
    pub delta_pp: u32,
    pub k: CycloNumber,
    pub kappa: CycloNumber,
    pub value: Option<CycloNumber>,
    pub float_value: Option<String>,
    pub warnings: Vec<String>,
}

impl InvariantReport {
    /// The denominator of the normalization.
    pub fn denominator(&self) -> CycloNumber {
        let n = self.raw.modulus();
        let mut d = CycloNumber::from_integer(n, self.delta_b as i64).pow(self.inertia.b_zero as u32);
        let dc = CycloNumber::from_integer(n, (self.delta_c * self.delta_pp) as i64);
        d = d.mul(&dc.pow(self.inertia.b_plus as u32));
        d = d.mul(&self.k.pow(self.s as u32));
        d = d.mul(&self.kappa.pow(self.omega as u32));
        d
    }

    /// JSON rendering of the report; cyclotomic values carry both the
    /// rational coefficient list and a 9-decimal float string.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "raw": cyclo_json(&self.raw),
            "inertia": {
                "b_plus": self.inertia.b_plus,
                "b_minus": self.inertia.b_minus,
                "b_zero": self.inertia.b_zero,
            },
            "s": self.s,
            "omega": self.omega,
            "delta_b": self.delta_b,
            "delta_c": self.delta_c,
            "delta_pp": self.delta_pp,
            "k": cyclo_json(&self.k),
            "kappa": cyclo_json(&self.kappa),
            "value": self.value.as_ref().map(cyclo_json),
            "float": self.float_value,
            "warnings": self.warnings,
        })
    }
}

/// Serialize a cyclotomic number as coefficient strings plus displays.
pub fn cyclo_json(x: &CycloNumber) -> serde_json::Value {
    json!({
        "modulus": x.modulus(),
        "coeffs": x.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "text": x.to_string(),
        "float": x.float_string(),
    })
}

/// The three dimension factors: Delta_B = |H|, Delta_C = N, and
/// Delta'' = #(H intersect T_C), counted by the transparency scan.
pub fn deltas(params: &CategoryParams) -> (u32, u32, u32) {
    let delta_b = params.subgroup().len() as u32;
    let delta_c = params.n;
    let transparent = transparent_degrees(params, KirbyScope::Full);
    let delta_pp = params
        .subgroup()
        .iter()
        .filter(|d| transparent.contains(d))
        .count() as u32;
    (delta_b, delta_c, delta_pp)
}

/// Evaluate a diagram and assemble the full normalized report.
pub fn invariant(diag: &Diagram) -> Result<InvariantReport, InvariantError> {
    let ctx = EvalContext::from_header(&diag.header)?;
    invariant_with(diag, &ctx)
}

pub fn invariant_with(diag: &Diagram, ctx: &EvalContext) -> Result<InvariantReport, InvariantError> {
    let validation = validate(diag)?;
    if !validation.is_ok() {
        return Err(InvariantError::Invalid(validation.errors.join("; ")));
    }
    let mut warnings = validation.warnings;
    let summary = link_summary(diag)?;
    let raw = eval_closed(diag, ctx)?;
    let triple = inertia(&summary.kirby_matrix).expect("kirby matrix is symmetric");
    let (delta_b, delta_c, delta_pp) = deltas(&ctx.params);
    let n = ctx.params.n;

    let has_bands = diag
        .rows
        .iter()
        .flatten()
        .any(|c| matches!(c, crate::diagram::CellKind::Act
            | crate::diagram::CellKind::Coact
            | crate::diagram::CellKind::DualAct
            | crate::diagram::CellKind::DualCoact
            | crate::diagram::CellKind::Mu
            | crate::diagram::CellKind::Comul
            | crate::diagram::CellKind::Unit
            | crate::diagram::CellKind::Counit
            | crate::diagram::CellKind::Cup(crate::diagram::ColorRole::Bd)
            | crate::diagram::CellKind::Puc(crate::diagram::ColorRole::Bd)));

    let mut usable = true;
    let (k, kappa) = match (&ctx.frob, &ctx.module) {
        (Some(frob), Some(module)) => {
            let swim = swim_check(&ctx.params, frob, module);
            if !swim.b_transparent {
                warnings.push(format!(
                    "swim condition fails: image degrees {:?} are not B-transparent",
                    swim.image_degrees
                ));
                usable = false;
            }
            let k = match cap_scalar(frob, module) {
                Ok(k) => k,
                Err(e) => {
                    warnings.push(e.to_string());
                    usable = false;
                    CycloNumber::one(n)
                }
            };
            let kappa = match cup_scalar(frob, module) {
                Ok(kappa) => kappa,
                Err(e) => {
                    warnings.push(e.to_string());
                    usable = false;
                    CycloNumber::one(n)
                }
            };
            (k, kappa)
        }
        _ => {
            if has_bands {
                warnings.push(
                    "band cells present but no Frobenius/module data declared".to_string(),
                );
                usable = false;
            }
            (CycloNumber::one(n), CycloNumber::one(n))
        }
    };

    if triple.b_plus > 0 {
        warnings.push(format!(
            "normalization divides by (Delta_C * Delta'')^b+ with Delta'' = {delta_pp} \
             computed by the transparency count and pinned by stabilization consistency"
        ));
    }

    let mut report = InvariantReport {
        raw: raw.clone(),
        inertia: triple,
        s: summary.s,
        omega: summary.omega,
        delta_b,
        delta_c,
        delta_pp,
        k,
        kappa,
        value: None,
        float_value: None,
        warnings,
    };
    if usable {
        let denom = report.denominator();
        let value = raw
            .div(&denom)
            .expect("normalization denominator is nonzero");
        report.float_value = Some(value.float_string());
        report.value = Some(value);
    } else {
        report
            .warnings
            .push("no normalized value: preconditions failed".to_string());
    }
    Ok(report)
}

/// Scale helper used by expectations in tests: x / d for an integer d.
pub fn div_int(x: &CycloNumber, d: i64) -> CycloNumber {
    x.scale(&BigRational::new(BigInt::from(1), BigInt::from(d)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn report(name: &str) -> InvariantReport {
        let f = fixtures::fixture(name).unwrap();
        invariant(&f.diagram().unwrap()).unwrap()
    }

    #[test]
    fn delta_examples() {
        let p = CategoryParams::new(6, 1, 2).unwrap();
        assert_eq!(deltas(&p), (3, 6, 1));
        let sym = CategoryParams::new(6, 0, 2).unwrap();
        assert_eq!(deltas(&sym), (3, 6, 3));
    }

    #[test]
    fn empty_diagram_has_invariant_one() {
        let r = report("empty");
        assert_eq!(r.value.unwrap(), CycloNumber::one(6));
    }

    #[test]
    fn fixture_values_match_expectations() {
        for name in fixtures::list() {
            let f = fixtures::fixture(&name).unwrap();
            let r = invariant(&f.diagram().unwrap()).unwrap();
            if let Some(raw) = &f.expected_raw {
                assert_eq!(&r.raw, raw, "raw mismatch on {name}");
            }
            if let Some(value) = &f.expected_value {
                assert_eq!(r.value.as_ref(), Some(value), "value mismatch on {name}");
            }
        }
    }

    #[test]
    fn reconstruction_identity() {
        for name in fixtures::list() {
            let r = report(&name);
            let value = r.value.clone().unwrap();
            assert_eq!(value.mul(&r.denominator()), r.raw, "reconstruction on {name}");
        }
    }

    #[test]
    fn torus_normalization() {
        let r = report("torus");
        assert_eq!(r.s, 2);
        assert_eq!(r.k, CycloNumber::from_integer(6, 2));
        assert_eq!(r.value.unwrap(), div_int(&CycloNumber::from_integer(6, 1), 2));
    }

    #[test]
    fn s2xc_normalization() {
        let r = report("s2xc");
        assert_eq!(r.inertia.b_zero, 1);
        assert_eq!(r.delta_b, 3);
        assert_eq!(r.value.unwrap(), CycloNumber::one(6));
    }

    #[test]
    fn stabilization_consistency() {
        let blank = fixtures::fixture("blank_stab").unwrap().diagram().unwrap();
        let hopf = fixtures::fixture("hopf_stab").unwrap().diagram().unwrap();
        for name in fixtures::list() {
            let d = fixtures::fixture(&name).unwrap().diagram().unwrap();
            let base = invariant(&d).unwrap().value;
            let with_blank = invariant(&d.disjoint_union(&blank)).unwrap().value;
            let with_hopf = invariant(&d.disjoint_union(&hopf)).unwrap().value;
            assert_eq!(base, with_blank, "blank stabilization changed {name}");
            assert_eq!(base, with_hopf, "hopf stabilization changed {name}");
        }
    }

    #[test]
    fn dotted_hopf_evaluates_to_delta_c_delta_pp() {
        let r = report("hopf_stab");
        let (_, delta_c, delta_pp) = deltas(&CategoryParams::new(6, 1, 2).unwrap());
        assert_eq!(r.raw, CycloNumber::from_integer(6, (delta_c * delta_pp) as i64));
        assert_eq!(r.inertia.b_plus, 1);
    }

    #[test]
    fn invalid_diagram_is_rejected() {
        let d = crate::diagram::parse("category N=6 t=1 H=2\ndiagram\ncup:h1\n/-\ncap\nend")
            .unwrap();
        assert!(matches!(invariant(&d), Err(InvariantError::Invalid(_))));
    }

    #[test]
    fn json_schema_fields() {
        let r = report("cp2");
        let v = r.to_json();
        for key in [
            "raw", "inertia", "s", "omega", "delta_b", "delta_c", "delta_pp", "k", "kappa",
            "value", "float", "warnings",
        ] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["value"]["float"], "0.000000000+1.732050808i");
    }
}
