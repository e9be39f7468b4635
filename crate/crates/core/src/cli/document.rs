//! The machine-readable analysis document: schema_version "1", complex
//! numbers as {re, im} pairs, the point at infinity as the string "inf".
//! Serialization round-trips losslessly (shortest-round-trip floats).

use crate::fixpoint::{FixedPoint, FixedPointReport, PolynomialSums, Tolerances};
use crate::harmonic::{
    ComponentFixedPoint, ConjectureReport, HFixedPoint, HarmonicAnalysis, QuadraticReport,
    RemarkReport,
};
use crate::poly::ExtComplex;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexJson {
    fn from(z: Complex64) -> Self {
        ComplexJson { re: z.re, im: z.im }
    }
}

impl From<ComplexJson> for Complex64 {
    fn from(z: ComplexJson) -> Self {
        Complex64::new(z.re, z.im)
    }
}

/// A finite point as {re, im} or the string "inf".
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LocationJson {
    Finite(ComplexJson),
    Symbol(String),
}

impl LocationJson {
    pub fn infinity() -> Self {
        LocationJson::Symbol("inf".to_owned())
    }

    pub fn finite(&self) -> Option<Complex64> {
        match self {
            LocationJson::Finite(z) => Some((*z).into()),
            LocationJson::Symbol(_) => None,
        }
    }
}

impl From<ExtComplex> for LocationJson {
    fn from(p: ExtComplex) -> Self {
        match p {
            ExtComplex::Finite(z) => LocationJson::Finite(z.into()),
            ExtComplex::Infinity => LocationJson::infinity(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FixedPointJson {
    pub location: LocationJson,
    pub multiplier: ComplexJson,
    pub multiplicity: usize,
    pub index: ComplexJson,
    pub class: String,
    pub weakly_repelling: bool,
    pub simple: bool,
    pub multiplier_one: bool,
    pub rationally_indifferent: Option<u32>,
}

impl From<&FixedPoint> for FixedPointJson {
    fn from(fp: &FixedPoint) -> Self {
        FixedPointJson {
            location: fp.location.into(),
            multiplier: fp.multiplier.into(),
            multiplicity: fp.multiplicity,
            index: fp.index.into(),
            class: fp.classification.as_str().to_owned(),
            weakly_repelling: fp.weakly_repelling,
            simple: fp.simple,
            multiplier_one: fp.multiplier_one,
            rationally_indifferent: fp.rationally_indifferent,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HFixedPointJson {
    pub mu: LocationJson,
    pub omega: LocationJson,
    /// Numeric for the finite kind, the symbol "inf" otherwise.
    pub zeta: LocationJson,
    pub lambda: ComplexJson,
    pub theta: ComplexJson,
    pub kind: String,
    pub multiplicity_mu: usize,
    pub multiplicity_omega: usize,
}

impl From<&HFixedPoint> for HFixedPointJson {
    fn from(p: &HFixedPoint) -> Self {
        HFixedPointJson {
            mu: p.mu.into(),
            omega: p.omega.into(),
            zeta: match p.zeta {
                Some(z) => LocationJson::Finite(z.into()),
                None => LocationJson::infinity(),
            },
            lambda: p.lambda.into(),
            theta: p.theta.into(),
            kind: p.kind.as_str().to_owned(),
            multiplicity_mu: p.multiplicity_mu,
            multiplicity_omega: p.multiplicity_omega,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComponentPointJson {
    pub component: String,
    pub point: FixedPointJson,
}

impl From<&ComponentFixedPoint> for ComponentPointJson {
    fn from(p: &ComponentFixedPoint) -> Self {
        ComponentPointJson {
            component: p.component.as_str().to_owned(),
            point: (&p.point).into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConjectureJson {
    pub applies: bool,
    pub hypothesis: String,
    pub pass: bool,
    pub witnesses: Vec<HFixedPointJson>,
    pub witnesses_le1: Vec<HFixedPointJson>,
}

impl From<&ConjectureReport> for ConjectureJson {
    fn from(r: &ConjectureReport) -> Self {
        ConjectureJson {
            applies: r.theorem_applies,
            hypothesis: r.hypothesis.as_str().to_owned(),
            pass: r.pass,
            witnesses: r.witnesses_ge1.iter().map(Into::into).collect(),
            witnesses_le1: r.witnesses_le1.iter().map(Into::into).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RemarkJson {
    pub le1: Vec<HFixedPointJson>,
    pub im_nonneg: Vec<ComponentPointJson>,
    pub all_simple_h: bool,
    pub all_simple_g: bool,
}

impl From<&RemarkReport> for RemarkJson {
    fn from(r: &RemarkReport) -> Self {
        RemarkJson {
            le1: r.le1.iter().map(Into::into).collect(),
            im_nonneg: r.im_nonneg.iter().map(Into::into).collect(),
            all_simple_h: r.all_simple_h,
            all_simple_g: r.all_simple_g,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadraticJson {
    pub c: ComplexJson,
    pub fixed_points: Vec<ComplexJson>,
    pub multipliers: Vec<ComplexJson>,
    pub single_point: bool,
    pub multiplicity: usize,
    pub single_zeta: Option<ComplexJson>,
    pub re_exactly_one: bool,
    pub predicate_real_c_ge_quarter: bool,
    pub equivalence_holds: Option<bool>,
}

impl From<&QuadraticReport> for QuadraticJson {
    fn from(r: &QuadraticReport) -> Self {
        QuadraticJson {
            c: r.c.into(),
            fixed_points: r.fixed_points.iter().map(|&z| z.into()).collect(),
            multipliers: r.multipliers.iter().map(|&z| z.into()).collect(),
            single_point: r.single_point,
            multiplicity: r.multiplicity,
            single_zeta: r.single_zeta.map(Into::into),
            re_exactly_one: r.re_exactly_one,
            predicate_real_c_ge_quarter: r.predicate_real_c_ge_quarter,
            equivalence_holds: r.equivalence_holds,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolynomialSumsJson {
    pub e3_sum: Option<ComplexJson>,
    pub e4_sum: Option<f64>,
    pub im_sum: Option<f64>,
    pub e3_pass: Option<bool>,
    pub witnesses_re_ge1: Vec<usize>,
    pub witnesses_re_le1: Vec<usize>,
    pub witnesses_im_nonneg: Vec<usize>,
    pub multiple_fixed_point: Option<usize>,
}

impl PolynomialSumsJson {
    pub fn from_sums(sums: &PolynomialSums, identity_tol: f64) -> Self {
        let e3_pass = sums.e3_sum.map(|e3| {
            e3.norm() <= identity_tol
                && sums.e4_sum.is_some_and(|v| v.abs() <= identity_tol)
                && sums.im_sum.is_some_and(|v| v.abs() <= identity_tol)
        });
        PolynomialSumsJson {
            e3_sum: sums.e3_sum.map(Into::into),
            e4_sum: sums.e4_sum,
            im_sum: sums.im_sum,
            e3_pass,
            witnesses_re_ge1: sums.witnesses_re_ge1.clone(),
            witnesses_re_le1: sums.witnesses_re_le1.clone(),
            witnesses_im_nonneg: sums.witnesses_im_nonneg.clone(),
            multiple_fixed_point: sums.multiple_fixed_point,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
pub struct Verdicts {
    pub index_sum: Option<ComplexJson>,
    pub index_sum_deviation: Option<f64>,
    pub index_sum_pass: Option<bool>,
    pub conjecture: Option<ConjectureJson>,
    pub remark: Option<RemarkJson>,
    pub quadratic: Option<QuadraticJson>,
    pub polynomial_sums: Option<PolynomialSumsJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TolerancesJson {
    pub root_tol: f64,
    pub cluster_eps: f64,
    pub multiplier_one_band: f64,
    pub index_agreement: f64,
    pub sum_pass: f64,
    pub super_attracting_band: f64,
    pub circle_band: f64,
    pub rational_indifference_eps: f64,
    pub rational_indifference_max_k: u32,
    pub identity_band: f64,
    pub fixed_residual: f64,
    pub contour_agreement: f64,
    pub witness_band: f64,
}

impl From<&Tolerances> for TolerancesJson {
    fn from(t: &Tolerances) -> Self {
        TolerancesJson {
            root_tol: t.root_tol,
            cluster_eps: t.cluster_eps,
            multiplier_one_band: t.multiplier_one_band,
            index_agreement: t.index_agreement,
            sum_pass: t.sum_pass,
            super_attracting_band: t.super_attracting_band,
            circle_band: t.circle_band,
            rational_indifference_eps: t.rational_indifference_eps,
            rational_indifference_max_k: t.rational_indifference_max_k,
            identity_band: t.identity_band,
            fixed_residual: t.fixed_residual,
            contour_agreement: t.contour_agreement,
            witness_band: t.witness_band,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
pub struct InputEcho {
    pub f: Option<String>,
    pub h: Option<String>,
    pub g: Option<String>,
    pub c: Option<ComplexJson>,
    pub options: Option<InputOptions>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
pub struct InputOptions {
    pub format: String,
    pub check: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Diagnostics {
    pub tolerances: TolerancesJson,
    pub solver_sweeps: u32,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisDocument {
    pub schema_version: String,
    pub input: InputEcho,
    pub fixed_points: Vec<FixedPointJson>,
    pub h_fixed_points: Vec<HFixedPointJson>,
    pub verdicts: Verdicts,
    pub diagnostics: Diagnostics,
}

impl AnalysisDocument {
    pub fn new(input: InputEcho, tol: &Tolerances) -> Self {
        AnalysisDocument {
            schema_version: SCHEMA_VERSION.to_owned(),
            input,
            fixed_points: Vec::new(),
            h_fixed_points: Vec::new(),
            verdicts: Verdicts::default(),
            diagnostics: Diagnostics {
                tolerances: tol.into(),
                solver_sweeps: 0,
                warnings: Vec::new(),
            },
        }
    }

    pub fn with_fixed_point_report(mut self, report: &FixedPointReport, tol: &Tolerances) -> Self {
        self.fixed_points = report.points.iter().map(Into::into).collect();
        self.verdicts.index_sum = Some(report.index_sum.into());
        self.verdicts.index_sum_deviation = Some(report.index_sum_deviation);
        self.verdicts.index_sum_pass = Some(report.index_sum_deviation <= tol.sum_pass);
        self.diagnostics.solver_sweeps = report.solver_sweeps;
        self.diagnostics.warnings.extend(report.warnings.clone());
        self
    }

    pub fn with_harmonic_analysis(mut self, analysis: &HarmonicAnalysis) -> Self {
        self.h_fixed_points = analysis.points.iter().map(Into::into).collect();
        self.diagnostics.solver_sweeps = analysis
            .h_report
            .solver_sweeps
            .max(analysis.g_report.solver_sweeps);
        for report in [&analysis.h_report, &analysis.g_report] {
            self.diagnostics.warnings.extend(report.warnings.clone());
        }
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serialization cannot fail")
    }

    pub fn to_json_compact(&self) -> String {
        serde_json::to_string(self).expect("document serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn document_round_trips_losslessly() {
        let tol = Tolerances::default();
        let mut doc = AnalysisDocument::new(
            InputEcho {
                f: Some("z^2".to_owned()),
                options: Some(InputOptions {
                    format: "json".to_owned(),
                    check: None,
                }),
                ..Default::default()
            },
            &tol,
        );
        doc.fixed_points.push(FixedPointJson {
            location: LocationJson::Finite(ComplexJson {
                re: 0.1 + 0.2, // deliberately non-representable sum
                im: -3.0303030303e-7,
            }),
            multiplier: ComplexJson { re: 2.0, im: 0.0 },
            multiplicity: 1,
            index: ComplexJson { re: -1.0, im: 0.0 },
            class: "repelling".to_owned(),
            weakly_repelling: true,
            simple: true,
            multiplier_one: false,
            rationally_indifferent: None,
        });
        doc.fixed_points.push(FixedPointJson {
            location: LocationJson::infinity(),
            multiplier: ComplexJson { re: 0.0, im: 0.0 },
            multiplicity: 1,
            index: ComplexJson { re: 1.0, im: 0.0 },
            class: "super-attracting".to_owned(),
            weakly_repelling: false,
            simple: true,
            multiplier_one: false,
            rationally_indifferent: None,
        });
        let text = doc.to_json();
        let back = AnalysisDocument::from_json(&text).unwrap();
        assert_eq!(doc, back);
        assert_eq!(back.schema_version, "1");
    }

    #[test]
    fn infinity_encodes_as_string() {
        let loc = LocationJson::infinity();
        assert_eq!(serde_json::to_string(&loc).unwrap(), "\"inf\"");
        let finite = LocationJson::Finite(ComplexJson { re: 1.0, im: -2.0 });
        assert_eq!(
            serde_json::to_string(&finite).unwrap(),
            "{\"re\":1.0,\"im\":-2.0}"
        );
    }
}
