//! h-fixed points of harmonic maps `f = h + conj(g)`: induced enumeration,
//! non-attractive witness reports, and the closed-form quadratic-family
//! analysis.
//!
//! Only induced points are enumerated (pairs with `h(mu) = mu` and
//! `g(omega) = omega`): the defining equation is one complex equation in two
//! complex unknowns, so the general solution set is a continuum and carries
//! no isolated-point structure to report.

use crate::fixpoint::{self, FixError, FixedPoint, FixedPointReport, Tolerances};
use crate::poly::{ExtComplex, Polynomial, RationalMap};
use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HarmonicError {
    #[error("component {which} has degree {degree}, need at least {need}")]
    ComponentDegree {
        which: &'static str,
        degree: usize,
        need: usize,
    },
    #[error("component {which}: {source}")]
    Component {
        which: &'static str,
        source: FixError,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HarmonicKind {
    /// Both parts are polynomials of degree >= 2.
    PolynomialHarmonic,
    /// Both parts are rational of degree >= 2, at least one a true quotient.
    RationalHarmonic,
    /// At least one part has degree < 2; the theorems do not speak here.
    General,
}

impl HarmonicKind {
    pub fn as_str(self) -> &'static str {
        match self {
            HarmonicKind::PolynomialHarmonic => "polynomial_harmonic",
            HarmonicKind::RationalHarmonic => "rational_harmonic",
            HarmonicKind::General => "general",
        }
    }
}

/// The analytic pair (h, g) of `f = h + conj(g)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicMap {
    pub h: RationalMap,
    pub g: RationalMap,
}

impl HarmonicMap {
    pub fn new(h: RationalMap, g: RationalMap) -> Self {
        HarmonicMap { h, g }
    }

    pub fn kind(&self) -> HarmonicKind {
        if self.h.degree() < 2 || self.g.degree() < 2 {
            HarmonicKind::General
        } else if self.h.is_polynomial() && self.g.is_polynomial() {
            HarmonicKind::PolynomialHarmonic
        } else {
            HarmonicKind::RationalHarmonic
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HFixedPointKind {
    Finite,
    /// mu finite and fixed, omega at infinity.
    InfiniteMuFixed,
    /// omega finite and fixed, mu at infinity.
    InfiniteOmegaFixed,
    InfiniteBoth,
}

impl HFixedPointKind {
    pub fn as_str(self) -> &'static str {
        match self {
            HFixedPointKind::Finite => "finite",
            HFixedPointKind::InfiniteMuFixed => "infinite_mu_fixed",
            HFixedPointKind::InfiniteOmegaFixed => "infinite_omega_fixed",
            HFixedPointKind::InfiniteBoth => "infinite_both",
        }
    }
}

/// An induced h-fixed point: `zeta = mu + conj(omega)` with multipliers
/// `lambda = h'(mu)` and `theta = g'(omega)` (chart derivatives at infinity).
/// `zeta` is only numeric for the finite kind; the infinite kinds are
/// identified by their tag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HFixedPoint {
    pub mu: ExtComplex,
    pub omega: ExtComplex,
    pub zeta: Option<Complex64>,
    pub lambda: Complex64,
    pub theta: Complex64,
    pub kind: HFixedPointKind,
    pub multiplicity_mu: usize,
    pub multiplicity_omega: usize,
}

/// Induced enumeration together with the component fixed-point reports.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicAnalysis {
    pub map: HarmonicMap,
    pub points: Vec<HFixedPoint>,
    pub h_report: FixedPointReport,
    pub g_report: FixedPointReport,
}

impl HarmonicAnalysis {
    pub fn finite_points(&self) -> impl Iterator<Item = &HFixedPoint> {
        self.points
            .iter()
            .filter(|p| p.kind == HFixedPointKind::Finite)
    }
}

/// Status of the theorem hypotheses for a harmonic map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hypothesis {
    /// Polynomial harmonic: infinity is super-attracting for both parts.
    PolynomialHarmonic,
    /// Rational harmonic with a super-attracting fixed point in each part.
    SuperAttractingPair,
    NotMet,
}

impl Hypothesis {
    pub fn met(self) -> bool {
        !matches!(self, Hypothesis::NotMet)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Hypothesis::PolynomialHarmonic => "polynomial_harmonic",
            Hypothesis::SuperAttractingPair => "super_attracting_pair",
            Hypothesis::NotMet => "not_met",
        }
    }
}

/// Witness report for the non-attractive fixed point statement.
#[derive(Debug, Clone, PartialEq)]
pub struct ConjectureReport {
    pub theorem_applies: bool,
    pub hypothesis: Hypothesis,
    /// Finite induced points with Re(lambda) >= 1 and Re(theta) >= 1.
    pub witnesses_ge1: Vec<HFixedPoint>,
    /// Finite induced points with Re(lambda) <= 1 and Re(theta) <= 1.
    pub witnesses_le1: Vec<HFixedPoint>,
    /// False exactly when the hypotheses hold and no witness was found.
    pub pass: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Component {
    H,
    G,
}

impl Component {
    pub fn as_str(self) -> &'static str {
        match self {
            Component::H => "h",
            Component::G => "g",
        }
    }
}

/// A component fixed point tagged with which part it belongs to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComponentFixedPoint {
    pub component: Component,
    pub point: FixedPoint,
}

/// Witnesses for the two remark statements: points with both real parts at
/// most 1, and component fixed points with non-negative imaginary part of
/// the multiplier (meaningful when that component's points are all simple).
#[derive(Debug, Clone, PartialEq)]
pub struct RemarkReport {
    pub le1: Vec<HFixedPoint>,
    pub im_nonneg: Vec<ComponentFixedPoint>,
    pub all_simple_h: bool,
    pub all_simple_g: bool,
}

fn component_report(
    which: &'static str,
    map: &RationalMap,
    tol: &Tolerances,
) -> Result<FixedPointReport, HarmonicError> {
    if map.degree() < 1 {
        return Err(HarmonicError::ComponentDegree {
            which,
            degree: map.degree(),
            need: 1,
        });
    }
    fixpoint::fixed_points(map, tol).map_err(|source| HarmonicError::Component { which, source })
}

/// Enumerate all induced h-fixed points: the Cartesian product of the finite
/// fixed points of h and g, plus the three infinite kinds when the parts fix
/// infinity. Output is ordered lexicographically by (Re mu, Im mu, Re omega,
/// Im omega), finite kind first.
pub fn induced_h_fixed_points(
    f: &HarmonicMap,
    tol: &Tolerances,
) -> Result<HarmonicAnalysis, HarmonicError> {
    let h_report = component_report("h", &f.h, tol)?;
    let g_report = component_report("g", &f.g, tol)?;

    let h_finite: Vec<&FixedPoint> = h_report.finite_points().collect();
    let g_finite: Vec<&FixedPoint> = g_report.finite_points().collect();
    let h_inf = h_report.infinity_point();
    let g_inf = g_report.infinity_point();

    let mut points = Vec::new();
    for mu in &h_finite {
        for omega in &g_finite {
            let mu_loc = mu.location.finite().unwrap();
            let omega_loc = omega.location.finite().unwrap();
            points.push(HFixedPoint {
                mu: mu.location,
                omega: omega.location,
                zeta: Some(mu_loc + omega_loc.conj()),
                lambda: mu.multiplier,
                theta: omega.multiplier,
                kind: HFixedPointKind::Finite,
                multiplicity_mu: mu.multiplicity,
                multiplicity_omega: omega.multiplicity,
            });
        }
    }
    if let Some(g_inf) = g_inf {
        for mu in &h_finite {
            points.push(HFixedPoint {
                mu: mu.location,
                omega: ExtComplex::Infinity,
                zeta: None,
                lambda: mu.multiplier,
                theta: g_inf.multiplier,
                kind: HFixedPointKind::InfiniteMuFixed,
                multiplicity_mu: mu.multiplicity,
                multiplicity_omega: g_inf.multiplicity,
            });
        }
    }
    if let Some(h_inf) = h_inf {
        for omega in &g_finite {
            points.push(HFixedPoint {
                mu: ExtComplex::Infinity,
                omega: omega.location,
                zeta: None,
                lambda: h_inf.multiplier,
                theta: omega.multiplier,
                kind: HFixedPointKind::InfiniteOmegaFixed,
                multiplicity_mu: h_inf.multiplicity,
                multiplicity_omega: omega.multiplicity,
            });
        }
    }
    if let (Some(h_inf), Some(g_inf)) = (h_inf, g_inf) {
        points.push(HFixedPoint {
            mu: ExtComplex::Infinity,
            omega: ExtComplex::Infinity,
            zeta: None,
            lambda: h_inf.multiplier,
            theta: g_inf.multiplier,
            kind: HFixedPointKind::InfiniteBoth,
            multiplicity_mu: h_inf.multiplicity,
            multiplicity_omega: g_inf.multiplicity,
        });
    }

    Ok(HarmonicAnalysis {
        map: f.clone(),
        points,
        h_report,
        g_report,
    })
}

fn has_super_attracting(report: &FixedPointReport, tol: &Tolerances) -> bool {
    report
        .points
        .iter()
        .any(|p| p.multiplier.norm() <= tol.super_attracting_band)
}

/// Detect whether the theorem hypotheses hold for `f`.
pub fn detect_hypothesis(analysis: &HarmonicAnalysis, tol: &Tolerances) -> Hypothesis {
    match analysis.map.kind() {
        HarmonicKind::PolynomialHarmonic => Hypothesis::PolynomialHarmonic,
        HarmonicKind::RationalHarmonic => {
            if has_super_attracting(&analysis.h_report, tol)
                && has_super_attracting(&analysis.g_report, tol)
            {
                Hypothesis::SuperAttractingPair
            } else {
                Hypothesis::NotMet
            }
        }
        HarmonicKind::General => Hypothesis::NotMet,
    }
}

/// Check the non-attractive fixed point statement: under the hypotheses
/// there is a finite induced point with both multiplier real parts >= 1.
/// When the hypotheses fail, witnesses are still reported but an empty set
/// is a finding, not a failure.
pub fn conjecture_witness(
    f: &HarmonicMap,
    tol: &Tolerances,
) -> Result<ConjectureReport, HarmonicError> {
    for (which, map) in [("h", &f.h), ("g", &f.g)] {
        if map.degree() < 2 {
            return Err(HarmonicError::ComponentDegree {
                which,
                degree: map.degree(),
                need: 2,
            });
        }
    }
    let analysis = induced_h_fixed_points(f, tol)?;
    Ok(conjecture_witness_from(&analysis, tol))
}

/// As `conjecture_witness` but reusing an existing enumeration.
pub fn conjecture_witness_from(analysis: &HarmonicAnalysis, tol: &Tolerances) -> ConjectureReport {
    let hypothesis = detect_hypothesis(analysis, tol);
    let band = tol.witness_band;
    let witnesses_ge1: Vec<HFixedPoint> = analysis
        .finite_points()
        .filter(|p| p.lambda.re >= 1.0 - band && p.theta.re >= 1.0 - band)
        .copied()
        .collect();
    let witnesses_le1: Vec<HFixedPoint> = analysis
        .finite_points()
        .filter(|p| p.lambda.re <= 1.0 + band && p.theta.re <= 1.0 + band)
        .copied()
        .collect();
    let theorem_applies = hypothesis.met();
    let pass = !theorem_applies || !witnesses_ge1.is_empty();
    ConjectureReport {
        theorem_applies,
        hypothesis,
        witnesses_ge1,
        witnesses_le1,
        pass,
    }
}

/// Witnesses for the remark statements.
pub fn remark_witnesses(f: &HarmonicMap, tol: &Tolerances) -> Result<RemarkReport, HarmonicError> {
    let analysis = induced_h_fixed_points(f, tol)?;
    Ok(remark_witnesses_from(&analysis, tol))
}

/// As `remark_witnesses` but reusing an existing enumeration.
pub fn remark_witnesses_from(analysis: &HarmonicAnalysis, tol: &Tolerances) -> RemarkReport {
    let band = tol.witness_band;
    let le1: Vec<HFixedPoint> = analysis
        .finite_points()
        .filter(|p| p.lambda.re <= 1.0 + band && p.theta.re <= 1.0 + band)
        .copied()
        .collect();

    let all_simple_h = analysis.h_report.points.iter().all(|p| p.simple);
    let all_simple_g = analysis.g_report.points.iter().all(|p| p.simple);

    let mut im_nonneg = Vec::new();
    if all_simple_h {
        for point in analysis.h_report.finite_points() {
            if point.multiplier.im >= -band {
                im_nonneg.push(ComponentFixedPoint {
                    component: Component::H,
                    point: *point,
                });
            }
        }
    }
    if all_simple_g {
        for point in analysis.g_report.finite_points() {
            if point.multiplier.im >= -band {
                im_nonneg.push(ComponentFixedPoint {
                    component: Component::G,
                    point: *point,
                });
            }
        }
    }

    RemarkReport {
        le1,
        im_nonneg,
        all_simple_h,
        all_simple_g,
    }
}

/// Closed-form analysis of `z^2 + c + conj(z^2 + c)`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadraticReport {
    pub c: Complex64,
    /// Component fixed points (1 +/- sqrt(1-4c))/2; one entry when they
    /// coincide.
    pub fixed_points: Vec<Complex64>,
    /// Multipliers 1 +/- sqrt(1-4c), aligned with `fixed_points`.
    pub multipliers: Vec<Complex64>,
    pub single_point: bool,
    pub multiplicity: usize,
    /// zeta = mu + conj(mu) of the single point, when there is one.
    pub single_zeta: Option<Complex64>,
    /// Both multipliers have real part within band of exactly 1.
    pub re_exactly_one: bool,
    /// The predicate "c is real and c >= 1/4".
    pub predicate_real_c_ge_quarter: bool,
    /// For real c: whether the two sides of the equivalence agree.
    pub equivalence_holds: Option<bool>,
}

pub fn quadratic_family_analyze(c: Complex64, tol: &Tolerances) -> QuadraticReport {
    let disc = Complex64::new(1.0, 0.0) - c * 4.0;
    let s = disc.sqrt();
    let half = Complex64::new(0.5, 0.0);
    let one = Complex64::new(1.0, 0.0);

    let single_point = (c - Complex64::new(0.25, 0.0)).norm() <= 1e-12;
    let (fixed_points, multipliers, multiplicity) = if single_point {
        (vec![half], vec![one], 2)
    } else {
        (
            vec![(one - s) * 0.5, (one + s) * 0.5],
            vec![one - s, one + s],
            1,
        )
    };

    let re_exactly_one = multipliers
        .iter()
        .all(|m| (m.re - 1.0).abs() <= tol.witness_band);
    let c_is_real = c.im == 0.0;
    let predicate_real_c_ge_quarter = c_is_real && c.re >= 0.25;
    let equivalence_holds = if c_is_real {
        Some(re_exactly_one == predicate_real_c_ge_quarter)
    } else {
        None
    };
    let single_zeta = single_point.then(|| half + half.conj());

    QuadraticReport {
        c,
        fixed_points,
        multipliers,
        single_point,
        multiplicity,
        single_zeta,
        re_exactly_one,
        predicate_real_c_ge_quarter,
        equivalence_holds,
    }
}

/// The quadratic component map `z^2 + c` as a rational map.
pub fn quadratic_component(c: Complex64) -> RationalMap {
    RationalMap::from_polynomial(Polynomial::new(vec![
        c,
        Complex64::new(0.0, 0.0),
        Complex64::new(1.0, 0.0),
    ]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_function;

    fn r(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    fn harmonic(h: &str, g: &str) -> HarmonicMap {
        HarmonicMap::new(parse_function(h).unwrap(), parse_function(g).unwrap())
    }

    fn find_zeta(analysis: &HarmonicAnalysis, zeta: Complex64) -> Vec<&HFixedPoint> {
        analysis
            .finite_points()
            .filter(|p| (p.zeta.unwrap() - zeta).norm() < 1e-8)
            .collect()
    }

    #[test]
    fn cubic_harmonic_enumeration() {
        // z^3 + conj(z^3): mu, omega in {0, 1, -1} -> 9 finite points,
        // plus 3 + 3 + 1 infinite ones since both parts fix infinity
        let f = harmonic("z^3", "z^3");
        let analysis = induced_h_fixed_points(&f, &tol()).unwrap();
        assert_eq!(analysis.finite_points().count(), 9);
        assert_eq!(analysis.points.len(), 16);

        let at_two = find_zeta(&analysis, r(2.0));
        assert_eq!(at_two.len(), 1);
        assert!((at_two[0].lambda - r(3.0)).norm() < 1e-10);
        assert!((at_two[0].theta - r(3.0)).norm() < 1e-10);

        // zeta = 1 from (1, 0) has mixed multipliers lambda = 3, theta = 0
        let at_one = find_zeta(&analysis, r(1.0));
        assert!(at_one.iter().any(|p| (p.lambda - r(3.0)).norm() < 1e-10
            && p.theta.norm() < 1e-10));

        // zeta = 0 appears from (0,0), (1,-1), (-1,1)
        let at_zero = find_zeta(&analysis, r(0.0));
        assert_eq!(at_zero.len(), 3);
    }

    #[test]
    fn square_harmonic_repelling_pair() {
        let f = harmonic("z^2", "z^2");
        let analysis = induced_h_fixed_points(&f, &tol()).unwrap();
        let at_two = find_zeta(&analysis, r(2.0));
        assert_eq!(at_two.len(), 1);
        assert!((at_two[0].lambda - r(2.0)).norm() < 1e-12);
        assert!((at_two[0].theta - r(2.0)).norm() < 1e-12);
    }

    #[test]
    fn rational_harmonic_zero_point() {
        let f = harmonic("(2*z)/(z^2 + z + 1)", "(2*z)/(z^2 + z + 1)");
        let analysis = induced_h_fixed_points(&f, &tol()).unwrap();
        let at_zero = find_zeta(&analysis, r(0.0));
        assert!(at_zero.iter().any(|p| (p.lambda - r(2.0)).norm() < 1e-10
            && (p.theta - r(2.0)).norm() < 1e-10));
    }

    #[test]
    fn defining_equation_residual_holds() {
        let f = harmonic("z^3", "z^2 + 0.25");
        let analysis = induced_h_fixed_points(&f, &tol()).unwrap();
        for p in analysis.finite_points() {
            let mu = p.mu.finite().unwrap();
            let omega = p.omega.finite().unwrap();
            let h_mu = f.h.evaluate(mu).unwrap().finite().unwrap();
            let g_omega = f.g.evaluate(omega).unwrap().finite().unwrap();
            let residual = (mu + omega.conj() - h_mu - g_omega.conj()).norm();
            assert!(residual <= 1e-8);
        }
    }

    #[test]
    fn conjecture_passes_for_cubic() {
        let f = harmonic("z^3", "z^3");
        let report = conjecture_witness(&f, &tol()).unwrap();
        assert!(report.theorem_applies);
        assert_eq!(report.hypothesis, Hypothesis::PolynomialHarmonic);
        assert!(report.pass);
        let zetas: Vec<Complex64> = report
            .witnesses_ge1
            .iter()
            .map(|p| p.zeta.unwrap())
            .collect();
        assert!(zetas.iter().any(|z| (z - r(2.0)).norm() < 1e-10));
        assert!(zetas.iter().any(|z| (z - r(-2.0)).norm() < 1e-10));
        assert!(zetas.iter().any(|z| z.norm() < 1e-10));
    }

    #[test]
    fn hypothesis_not_met_for_reciprocal_square() {
        // 1/z^2 has all multipliers -2 and does not fix infinity: no
        // super-attracting point, so the theorem does not apply
        let f = harmonic("1/z^2", "1/z^2");
        let report = conjecture_witness(&f, &tol()).unwrap();
        assert!(!report.theorem_applies);
        assert_eq!(report.hypothesis, Hypothesis::NotMet);
        assert!(report.witnesses_ge1.is_empty());
        assert!(report.pass, "hypothesis-not-met is a finding, not a failure");
    }

    #[test]
    fn low_degree_component_rejected() {
        let f = harmonic("2*z", "z^2");
        assert!(matches!(
            conjecture_witness(&f, &tol()),
            Err(HarmonicError::ComponentDegree { which: "h", .. })
        ));
    }

    #[test]
    fn remark_witnesses_for_cubic() {
        let f = harmonic("z^3", "z^3");
        let report = remark_witnesses(&f, &tol()).unwrap();
        // (0,0) gives zeta = 0 with lambda = theta = 0
        assert!(report
            .le1
            .iter()
            .any(|p| p.zeta.unwrap().norm() < 1e-10 && p.lambda.norm() < 1e-10));
        assert!(report.all_simple_h && report.all_simple_g);
        assert!(!report.im_nonneg.is_empty());
    }

    #[test]
    fn remark_witnesses_for_square() {
        let f = harmonic("z^2", "z^2");
        let report = remark_witnesses(&f, &tol()).unwrap();
        assert!(report.le1.iter().any(|p| p.zeta.unwrap().norm() < 1e-10));
        assert!(!report.im_nonneg.is_empty());
    }

    #[test]
    fn quadratic_family_at_quarter() {
        let report = quadratic_family_analyze(r(0.25), &tol());
        assert!(report.single_point);
        assert_eq!(report.multiplicity, 2);
        assert_eq!(report.fixed_points.len(), 1);
        assert!((report.fixed_points[0] - r(0.5)).norm() < 1e-15);
        assert!((report.multipliers[0] - r(1.0)).norm() < 1e-15);
        assert_eq!(report.single_zeta, Some(r(1.0)));
        assert!(report.re_exactly_one);
        assert_eq!(report.equivalence_holds, Some(true));
    }

    #[test]
    fn quadratic_family_above_quarter() {
        // c = 1: multipliers 1 +/- i sqrt(3)
        let report = quadratic_family_analyze(r(1.0), &tol());
        assert!(!report.single_point);
        assert!(report.re_exactly_one);
        for m in &report.multipliers {
            assert!((m.re - 1.0).abs() < 1e-12);
            assert!((m.im.abs() - 3.0_f64.sqrt()).abs() < 1e-12);
        }
        assert_eq!(report.equivalence_holds, Some(true));
    }

    #[test]
    fn quadratic_family_at_zero() {
        let report = quadratic_family_analyze(r(0.0), &tol());
        assert!(!report.re_exactly_one);
        let mut res: Vec<f64> = report.multipliers.iter().map(|m| m.re).collect();
        res.sort_by(f64::total_cmp);
        assert!((res[0] - 0.0).abs() < 1e-15 && (res[1] - 2.0).abs() < 1e-15);
        assert_eq!(report.equivalence_holds, Some(true));
    }

    #[test]
    fn quadratic_family_matches_generic_pipeline() {
        for &c_re in &[-1.0, 0.0, 0.24, 0.26, 1.0, 10.0] {
            let c = r(c_re);
            let closed = quadratic_family_analyze(c, &tol());
            let map = quadratic_component(c);
            let report = fixpoint::fixed_points(&map, &tol()).unwrap();
            let finite: Vec<&FixedPoint> = report.finite_points().collect();
            assert_eq!(finite.len(), closed.fixed_points.len());
            for fp in finite {
                let loc = fp.location.finite().unwrap();
                let k = closed
                    .fixed_points
                    .iter()
                    .enumerate()
                    .min_by(|a, b| (a.1 - loc).norm().total_cmp(&(b.1 - loc).norm()))
                    .unwrap()
                    .0;
                assert!((closed.fixed_points[k] - loc).norm() < 1e-10);
                assert!((closed.multipliers[k] - fp.multiplier).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn swap_symmetry_of_multiplier_pairs() {
        let f = harmonic("z^3 + z", "z^2 + 0.1");
        let g = harmonic("z^2 + 0.1", "z^3 + z");
        let a = induced_h_fixed_points(&f, &tol()).unwrap();
        let b = induced_h_fixed_points(&g, &tol()).unwrap();
        let mut pairs_a: Vec<(i64, i64, i64, i64)> = a
            .finite_points()
            .map(|p| {
                (
                    (p.lambda.re * 1e9).round() as i64,
                    (p.lambda.im * 1e9).round() as i64,
                    (p.theta.re * 1e9).round() as i64,
                    (p.theta.im * 1e9).round() as i64,
                )
            })
            .collect();
        let mut pairs_b: Vec<(i64, i64, i64, i64)> = b
            .finite_points()
            .map(|p| {
                (
                    (p.theta.re * 1e9).round() as i64,
                    (p.theta.im * 1e9).round() as i64,
                    (p.lambda.re * 1e9).round() as i64,
                    (p.lambda.im * 1e9).round() as i64,
                )
            })
            .collect();
        pairs_a.sort_unstable();
        pairs_b.sort_unstable();
        assert_eq!(pairs_a, pairs_b);
    }

    #[test]
    fn finite_count_is_product_of_component_counts() {
        let f = harmonic("z^3 + z", "z^2 + i");
        let analysis = induced_h_fixed_points(&f, &tol()).unwrap();
        let h_count = analysis.h_report.finite_points().count();
        let g_count = analysis.g_report.finite_points().count();
        assert_eq!(analysis.finite_points().count(), h_count * g_count);
    }

    #[test]
    fn harmonic_kind_detection() {
        assert_eq!(
            harmonic("z^2", "z^3").kind(),
            HarmonicKind::PolynomialHarmonic
        );
        assert_eq!(
            harmonic("1/z^2", "z^2").kind(),
            HarmonicKind::RationalHarmonic
        );
        assert_eq!(harmonic("2*z", "z^2").kind(), HarmonicKind::General);
    }
}
