//! Fixed points of rational maps on the extended plane: multipliers,
//! multiplicities, residue fixed-point indices, and verification of the
//! index-sum identities.
//!
//! The point at infinity is handled exclusively through the inversion chart
//! `w -> 1/R(1/w)`: infinity is fixed iff `deg num > deg den`, its multiplier
//! is the chart derivative at 0 and its multiplicity the order of 0 as a
//! fixed point of the chart.

use crate::poly::{ExtComplex, PolyError, Polynomial, RationalMap};
use crate::roots::{self, RootError, RootSet};
use num_complex::Complex64;
use thiserror::Error;

/// Every tolerance used by the analysis, in one record with documented
/// defaults. Overridable from the CLI.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Root-finder convergence: |dz| <= root_tol * (1 + |z|).
    pub root_tol: f64,
    /// Cluster width base; the effective width is scaled by (1 + max |root|).
    pub cluster_eps: f64,
    /// |lambda - 1| band treated as multiplier one.
    pub multiplier_one_band: f64,
    /// Required agreement between contour and closed-form indices.
    pub index_agreement: f64,
    /// |index_sum - 1| pass band.
    pub sum_pass: f64,
    /// |lambda| band treated as super-attracting.
    pub super_attracting_band: f64,
    /// Distance from the unit circle below which a multiplier is labeled
    /// indifferent rather than attracting/repelling.
    pub circle_band: f64,
    /// |lambda^k - 1| band for rational indifference detection.
    pub rational_indifference_eps: f64,
    /// Highest power probed for rational indifference.
    pub rational_indifference_max_k: u32,
    /// Relative band for identity detection and spurious-leading-coefficient
    /// truncation of `num - z*den`.
    pub identity_band: f64,
    /// Fixed-point residual band: |R(z) - z| / (1 + |z|).
    pub fixed_residual: f64,
    /// Agreement between successive contour quadrature refinements.
    pub contour_agreement: f64,
    /// Witness band for the Re >= 1 / Re <= 1 / Im >= 0 comparisons.
    pub witness_band: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            root_tol: 1e-12,
            cluster_eps: 1e-6,
            multiplier_one_band: 1e-8,
            index_agreement: 1e-8,
            sum_pass: 1e-7,
            super_attracting_band: 1e-12,
            circle_band: 1e-9,
            rational_indifference_eps: 1e-6,
            rational_indifference_max_k: 64,
            identity_band: 1e-14,
            fixed_residual: 1e-8,
            contour_agreement: 1e-10,
            witness_band: 1e-9,
        }
    }
}

pub const CONTOUR_START_POINTS: usize = 64;
pub const CONTOUR_MAX_POINTS: usize = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FixError {
    #[error("identity map excluded: every point is fixed")]
    IdentityMap,
    #[error("map has degree 0")]
    DegreeZero,
    #[error("{location} is not a fixed point (residual {residual:.3e})")]
    NotAFixedPoint { location: ExtComplex, residual: f64 },
    #[error("singularity on or near the integration contour at z = {at}")]
    PoleOnContour { at: Complex64 },
    #[error("contour quadrature did not converge within {CONTOUR_MAX_POINTS} points")]
    ContourNonConvergence,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Root(#[from] RootError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    SuperAttracting,
    Attracting,
    Repelling,
    Indifferent,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::SuperAttracting => "super-attracting",
            Classification::Attracting => "attracting",
            Classification::Repelling => "repelling",
            Classification::Indifferent => "indifferent",
        }
    }
}

/// Multiplier classification plus the flags that depend only on lambda.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassifiedMultiplier {
    pub classification: Classification,
    pub weakly_repelling: bool,
    pub multiplier_one: bool,
    /// Smallest k <= max_k with lambda^k close to 1, for indifferent lambda.
    pub rationally_indifferent: Option<u32>,
}

/// Classify a multiplier into bands. A lambda within `circle_band` of the
/// unit circle is labeled indifferent rather than guessed either way;
/// weakly repelling is the literal `|lambda| > 1 or lambda = 1` predicate.
pub fn classify_multiplier(lambda: Complex64, tol: &Tolerances) -> ClassifiedMultiplier {
    let norm = lambda.norm();
    let classification = if norm <= tol.super_attracting_band {
        Classification::SuperAttracting
    } else if norm < 1.0 - tol.circle_band {
        Classification::Attracting
    } else if norm > 1.0 + tol.circle_band {
        Classification::Repelling
    } else {
        Classification::Indifferent
    };
    let multiplier_one = (lambda - Complex64::new(1.0, 0.0)).norm() <= tol.multiplier_one_band;
    let weakly_repelling = norm > 1.0 || multiplier_one;
    let rationally_indifferent = if classification == Classification::Indifferent {
        let mut power = Complex64::new(1.0, 0.0);
        let mut found = None;
        for k in 1..=tol.rational_indifference_max_k {
            power *= lambda;
            if (power - Complex64::new(1.0, 0.0)).norm() <= tol.rational_indifference_eps {
                found = Some(k);
                break;
            }
        }
        found
    } else {
        None
    };
    ClassifiedMultiplier {
        classification,
        weakly_repelling,
        multiplier_one,
        rationally_indifferent,
    }
}

/// A fixed point of a rational map with everything the analysis derives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixedPoint {
    pub location: ExtComplex,
    pub multiplier: Complex64,
    pub multiplicity: usize,
    pub index: Complex64,
    pub classification: Classification,
    pub weakly_repelling: bool,
    pub simple: bool,
    pub multiplier_one: bool,
    pub rationally_indifferent: Option<u32>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FixedPointReport {
    pub map: RationalMap,
    pub points: Vec<FixedPoint>,
    pub index_sum: Complex64,
    pub index_sum_deviation: f64,
    pub solver_sweeps: u32,
    pub warnings: Vec<String>,
}

impl FixedPointReport {
    pub fn multiplicity_sum(&self) -> usize {
        self.points.iter().map(|p| p.multiplicity).sum()
    }

    pub fn finite_points(&self) -> impl Iterator<Item = &FixedPoint> {
        self.points.iter().filter(|p| !p.location.is_infinite())
    }

    pub fn infinity_point(&self) -> Option<&FixedPoint> {
        self.points.iter().find(|p| p.location.is_infinite())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IndexSumReport {
    pub sum: Complex64,
    pub deviation: f64,
    pub pass: bool,
}

/// The polynomial identities over finite fixed points: the complex sum of
/// 1/(1-lambda_i), its real-part form, and its imaginary-part form. The sums
/// are skipped when a multiple fixed point is present.
#[derive(Debug, Clone, PartialEq)]
pub struct PolynomialSums {
    pub finite_points: Vec<FixedPoint>,
    pub e3_sum: Option<Complex64>,
    pub e4_sum: Option<f64>,
    pub im_sum: Option<f64>,
    /// Indices into finite_points with Re(lambda) >= 1.
    pub witnesses_re_ge1: Vec<usize>,
    /// Indices into finite_points with Re(lambda) <= 1.
    pub witnesses_re_le1: Vec<usize>,
    /// Indices into finite_points with Im(lambda) >= 0.
    pub witnesses_im_nonneg: Vec<usize>,
    /// Index of a multiplier-one fixed point, when one exists.
    pub multiple_fixed_point: Option<usize>,
}

fn is_nearly_identity(map: &RationalMap, tol: &Tolerances) -> bool {
    let f = map.fixed_point_polynomial();
    let scale = 1.0 + map.max_coeff_norm();
    f.max_coeff_norm() <= tol.identity_band * scale
}

/// Multiplier at a finite fixed point or at infinity through the chart.
pub fn multiplier_at(
    map: &RationalMap,
    location: ExtComplex,
    tol: &Tolerances,
) -> Result<Complex64, FixError> {
    match location {
        ExtComplex::Finite(z) => {
            let image = map.evaluate(z)?;
            let residual = match image {
                ExtComplex::Finite(w) => (w - z).norm() / (1.0 + z.norm()),
                ExtComplex::Infinity => f64::INFINITY,
            };
            if residual > tol.fixed_residual {
                return Err(FixError::NotAFixedPoint { location, residual });
            }
            match map.derivative().evaluate(z)? {
                ExtComplex::Finite(lambda) => Ok(lambda),
                ExtComplex::Infinity => Err(FixError::Poly(PolyError::Indeterminate { at: z })),
            }
        }
        ExtComplex::Infinity => infinity_multiplier(map).ok_or(FixError::NotAFixedPoint {
            location,
            residual: f64::INFINITY,
        }),
    }
}

/// Multiplier at infinity by degree bookkeeping on the chart: 0 when
/// `deg num >= deg den + 2`, lead(den)/lead(num) when `deg num = deg den + 1`,
/// absent when infinity is not fixed.
fn infinity_multiplier(map: &RationalMap) -> Option<Complex64> {
    let n = map.num().degree().as_usize()?;
    let m = map.den().degree().or_zero();
    if n >= m + 2 {
        Some(Complex64::new(0.0, 0.0))
    } else if n == m + 1 {
        Some(map.den().leading().unwrap() / map.num().leading().unwrap())
    } else {
        None
    }
}

/// Multiplicity of a fixed point: cluster count for finite points, order of
/// 0 as a fixed point of the inversion chart for infinity.
pub fn multiplicity_at(
    map: &RationalMap,
    location: ExtComplex,
    tol: &Tolerances,
) -> Result<usize, FixError> {
    match location {
        ExtComplex::Finite(z) => {
            // validates fixedness
            multiplier_at(map, location, tol)?;
            let f = map
                .fixed_point_polynomial()
                .truncate_leading(tol.identity_band);
            let set = roots::find_roots_scaled(&f, tol.root_tol, tol.cluster_eps)?;
            let eps = roots::default_cluster_eps(&set.roots.iter().map(|r| r.location).collect::<Vec<_>>());
            let nearest = set
                .roots
                .iter()
                .min_by(|a, b| (a.location - z).norm().total_cmp(&(b.location - z).norm()))
                .ok_or(FixError::NotAFixedPoint {
                    location,
                    residual: f64::INFINITY,
                })?;
            let dist = (nearest.location - z).norm();
            if dist > eps.max(tol.fixed_residual * (1.0 + z.norm())) {
                return Err(FixError::NotAFixedPoint {
                    location,
                    residual: dist,
                });
            }
            Ok(nearest.multiplicity)
        }
        ExtComplex::Infinity => {
            if !map.fixes_infinity() {
                return Err(FixError::NotAFixedPoint {
                    location,
                    residual: f64::INFINITY,
                });
            }
            Ok(infinity_multiplicity(map, tol))
        }
    }
}

fn infinity_multiplicity(map: &RationalMap, tol: &Tolerances) -> usize {
    let chart = map
        .inversion_chart()
        .expect("a map fixing infinity has a nonzero numerator");
    chart
        .fixed_point_polynomial()
        .order_at_zero(tol.identity_band)
}

/// Residue fixed-point index by trapezoidal quadrature of
/// `(1/2 pi i) * contour integral of dz/(z - R(z))` on a circle. The sample
/// count doubles from `n_start` until two successive values agree within the
/// contour band (the trapezoid rule is spectrally accurate on analytic
/// integrands).
pub fn residue_index_contour(
    map: &RationalMap,
    center: Complex64,
    radius: f64,
    n_start: usize,
    tol: &Tolerances,
) -> Result<Complex64, FixError> {
    let mut n = n_start.max(4);
    let mut previous: Option<Complex64> = None;
    while n <= CONTOUR_MAX_POINTS {
        let mut sum = Complex64::new(0.0, 0.0);
        for k in 0..n {
            let angle = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64);
            let dir = Complex64::from_polar(1.0, angle);
            let z = center + dir * radius;
            let den_v = map.den().eval(z);
            if den_v.norm() < 1e-12 {
                return Err(FixError::PoleOnContour { at: z });
            }
            let rz = map.num().eval(z) / den_v;
            let w = z - rz;
            if w.norm() == 0.0 {
                return Err(FixError::PoleOnContour { at: z });
            }
            sum += dir * radius / w;
        }
        let value = sum / (n as f64);
        if let Some(prev) = previous {
            if (value - prev).norm() <= tol.contour_agreement {
                return Ok(value);
            }
        }
        previous = Some(value);
        n *= 2;
    }
    Err(FixError::ContourNonConvergence)
}

/// Half the distance from `center` to the nearest other fixed point or pole,
/// the contour radius that satisfies the small-loop requirement.
fn auto_radius(map: &RationalMap, center: Complex64, tol: &Tolerances) -> Result<f64, FixError> {
    let mut min_dist = f64::INFINITY;
    let f = map
        .fixed_point_polynomial()
        .truncate_leading(tol.identity_band);
    if f.degree().as_usize().is_some_and(|d| d >= 1) {
        let set = roots::find_roots_scaled(&f, tol.root_tol, tol.cluster_eps)?;
        let own_band = roots::default_cluster_eps(&set.roots.iter().map(|r| r.location).collect::<Vec<_>>());
        for root in &set.roots {
            let d = (root.location - center).norm();
            if d > own_band {
                min_dist = min_dist.min(d);
            }
        }
    }
    if !map.den().is_constant() {
        let poles = roots::find_roots_scaled(map.den(), tol.root_tol, tol.cluster_eps)?;
        for pole in &poles.roots {
            min_dist = min_dist.min((pole.location - center).norm());
        }
    }
    Ok(if min_dist.is_finite() {
        0.5 * min_dist
    } else {
        0.5 * (1.0 + center.norm())
    })
}

/// Residue fixed-point index: the closed form 1/(1-lambda) away from
/// multiplier one, contour quadrature otherwise (the index stays finite
/// there). At infinity the chart at 0 is used.
pub fn residue_index(
    map: &RationalMap,
    fp: &FixedPoint,
    tol: &Tolerances,
) -> Result<Complex64, FixError> {
    if !fp.multiplier_one {
        return Ok((Complex64::new(1.0, 0.0) - fp.multiplier).inv());
    }
    match fp.location {
        ExtComplex::Finite(z) => {
            let radius = auto_radius(map, z, tol)?;
            residue_index_contour(map, z, radius, CONTOUR_START_POINTS, tol)
        }
        ExtComplex::Infinity => {
            let chart = map.inversion_chart()?;
            let radius = auto_radius(&chart, Complex64::new(0.0, 0.0), tol)?;
            residue_index_contour(
                &chart,
                Complex64::new(0.0, 0.0),
                radius,
                CONTOUR_START_POINTS,
                tol,
            )
        }
    }
}

/// Compute and classify all fixed points on the extended plane.
///
/// Finite fixed points are the clustered roots of `num(z) - z*den(z)`;
/// infinity is included iff `deg num > deg den`. The index sum over all
/// points is reported along with its deviation from 1.
pub fn fixed_points(map: &RationalMap, tol: &Tolerances) -> Result<FixedPointReport, FixError> {
    if map.degree() == 0 {
        return Err(FixError::DegreeZero);
    }
    if is_nearly_identity(map, tol) {
        return Err(FixError::IdentityMap);
    }

    let mut warnings = Vec::new();
    let f = map
        .fixed_point_polynomial()
        .truncate_leading(tol.identity_band);

    let mut solver_sweeps = 0;
    let finite_set: Option<RootSet> = if f.degree().as_usize().is_some_and(|d| d >= 1) {
        let set = roots::find_roots_scaled(&f, tol.root_tol, tol.cluster_eps)?;
        solver_sweeps = set.sweeps;
        if !set.converged {
            warnings.push(format!(
                "root finder hit the sweep limit (best residual {:.3e}); accuracy near multiple fixed points degrades to about tol^(1/m)",
                set.residual
            ));
        }
        Some(set)
    } else {
        None
    };

    let derivative = map.derivative();
    let mut points = Vec::new();

    if let Some(set) = &finite_set {
        for root in &set.roots {
            let z = root.location;
            let lambda = match derivative.evaluate(z)? {
                ExtComplex::Finite(l) => l,
                ExtComplex::Infinity => {
                    return Err(FixError::Poly(PolyError::Indeterminate { at: z }))
                }
            };
            let classified = classify_multiplier(lambda, tol);
            let index = if classified.multiplier_one {
                let radius = contour_radius_among(map, z, set, tol)?;
                residue_index_contour(map, z, radius, CONTOUR_START_POINTS, tol)?
            } else {
                (Complex64::new(1.0, 0.0) - lambda).inv()
            };
            points.push(FixedPoint {
                location: ExtComplex::Finite(z),
                multiplier: lambda,
                multiplicity: root.multiplicity,
                index,
                classification: classified.classification,
                weakly_repelling: classified.weakly_repelling,
                simple: root.multiplicity == 1,
                multiplier_one: classified.multiplier_one,
                rationally_indifferent: classified.rationally_indifferent,
            });
        }
    }

    if map.fixes_infinity() {
        let lambda = infinity_multiplier(map).unwrap();
        let classified = classify_multiplier(lambda, tol);
        let multiplicity = infinity_multiplicity(map, tol);
        let index = if classified.multiplier_one {
            let chart = map.inversion_chart()?;
            let radius = auto_radius(&chart, Complex64::new(0.0, 0.0), tol)?;
            residue_index_contour(
                &chart,
                Complex64::new(0.0, 0.0),
                radius,
                CONTOUR_START_POINTS,
                tol,
            )?
        } else {
            (Complex64::new(1.0, 0.0) - lambda).inv()
        };
        points.push(FixedPoint {
            location: ExtComplex::Infinity,
            multiplier: lambda,
            multiplicity,
            index,
            classification: classified.classification,
            weakly_repelling: classified.weakly_repelling,
            simple: multiplicity == 1,
            multiplier_one: classified.multiplier_one,
            rationally_indifferent: classified.rationally_indifferent,
        });
    }

    if let Some(warning) = common_root_warning(map, tol)? {
        warnings.push(warning);
    }

    let index_sum: Complex64 = points.iter().map(|p| p.index).sum();
    let index_sum_deviation = (index_sum - Complex64::new(1.0, 0.0)).norm();

    Ok(FixedPointReport {
        map: map.clone(),
        points,
        index_sum,
        index_sum_deviation,
        solver_sweeps,
        warnings,
    })
}

/// Contour radius using an already-computed finite fixed point set.
fn contour_radius_among(
    map: &RationalMap,
    center: Complex64,
    set: &RootSet,
    tol: &Tolerances,
) -> Result<f64, FixError> {
    let own_band =
        roots::default_cluster_eps(&set.roots.iter().map(|r| r.location).collect::<Vec<_>>());
    let mut min_dist = f64::INFINITY;
    for root in &set.roots {
        let d = (root.location - center).norm();
        if d > own_band {
            min_dist = min_dist.min(d);
        }
    }
    if !map.den().is_constant() {
        let poles = roots::find_roots_scaled(map.den(), tol.root_tol, tol.cluster_eps)?;
        for pole in &poles.roots {
            min_dist = min_dist.min((pole.location - center).norm());
        }
    }
    Ok(if min_dist.is_finite() {
        0.5 * min_dist
    } else {
        0.5 * (1.0 + center.norm())
    })
}

/// Numerator/denominator roots within 1e-8 of each other indicate an
/// unreduced common factor; reported as a warning, never silently.
fn common_root_warning(
    map: &RationalMap,
    tol: &Tolerances,
) -> Result<Option<String>, FixError> {
    if map.den().is_constant() || map.num().degree().as_usize().map_or(true, |d| d < 1) {
        return Ok(None);
    }
    let num_roots = roots::find_roots_scaled(map.num(), tol.root_tol, tol.cluster_eps)?;
    let den_roots = roots::find_roots_scaled(map.den(), tol.root_tol, tol.cluster_eps)?;
    for a in &num_roots.roots {
        for b in &den_roots.roots {
            if (a.location - b.location).norm() < 1e-8 {
                return Ok(Some(format!(
                    "numerator and denominator share a root near {} within 1e-8; the map is not in lowest terms",
                    a.location
                )));
            }
        }
    }
    Ok(None)
}

/// Check the index-sum identity: the indices over the extended plane sum
/// to 1 for every non-identity, non-constant rational map.
pub fn verify_index_sum(map: &RationalMap, tol: &Tolerances) -> Result<IndexSumReport, FixError> {
    let report = fixed_points(map, tol)?;
    Ok(IndexSumReport {
        sum: report.index_sum,
        deviation: report.index_sum_deviation,
        pass: report.index_sum_deviation <= tol.sum_pass,
    })
}

/// The finite-point identities for a polynomial of degree >= 2: since the
/// index at infinity is 1, the finite indices sum to 0, and so do the
/// real-part and imaginary-part forms. A multiple fixed point is reported
/// and the sums skipped.
pub fn verify_polynomial_sums(p: &Polynomial, tol: &Tolerances) -> Result<PolynomialSums, FixError> {
    let Some(degree) = p.degree().as_usize() else {
        return Err(FixError::DegreeZero);
    };
    if degree < 2 {
        return Err(FixError::DegreeZero);
    }
    let map = RationalMap::from_polynomial(p.clone());
    let report = fixed_points(&map, tol)?;
    let finite_points: Vec<FixedPoint> = report.finite_points().copied().collect();

    let multiple_fixed_point = finite_points.iter().position(|fp| fp.multiplier_one);

    let one = Complex64::new(1.0, 0.0);
    let band = tol.witness_band;
    let mut witnesses_re_ge1 = Vec::new();
    let mut witnesses_re_le1 = Vec::new();
    let mut witnesses_im_nonneg = Vec::new();
    for (i, fp) in finite_points.iter().enumerate() {
        if fp.multiplier.re >= 1.0 - band {
            witnesses_re_ge1.push(i);
        }
        if fp.multiplier.re <= 1.0 + band {
            witnesses_re_le1.push(i);
        }
        if fp.multiplier.im >= -band {
            witnesses_im_nonneg.push(i);
        }
    }

    let (e3_sum, e4_sum, im_sum) = if multiple_fixed_point.is_some() {
        (None, None, None)
    } else {
        let mut e3 = Complex64::new(0.0, 0.0);
        let mut e4 = 0.0;
        let mut im = 0.0;
        for fp in &finite_points {
            let denom = (one - fp.multiplier).norm_sqr();
            e3 += (one - fp.multiplier).inv();
            e4 += (1.0 - fp.multiplier.re) / denom;
            im += fp.multiplier.im / denom;
        }
        (Some(e3), Some(e4), Some(im))
    };

    Ok(PolynomialSums {
        finite_points,
        e3_sum,
        e4_sum,
        im_sum,
        witnesses_re_ge1,
        witnesses_re_le1,
        witnesses_im_nonneg,
        multiple_fixed_point,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_function;

    fn r(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    fn analyze(text: &str) -> FixedPointReport {
        fixed_points(&parse_function(text).unwrap(), &tol()).unwrap()
    }

    fn point_near(report: &FixedPointReport, z: Complex64) -> &FixedPoint {
        report
            .points
            .iter()
            .filter_map(|p| p.location.finite().map(|loc| (p, loc)))
            .min_by(|a, b| (a.1 - z).norm().total_cmp(&(b.1 - z).norm()))
            .map(|(p, _)| p)
            .expect("no finite points")
    }

    #[test]
    fn square_map_report() {
        let report = analyze("z^2");
        assert_eq!(report.points.len(), 3);

        let at_zero = point_near(&report, r(0.0));
        assert!((at_zero.multiplier).norm() < 1e-12);
        assert_eq!(at_zero.multiplicity, 1);
        assert!((at_zero.index - r(1.0)).norm() < 1e-12);
        assert_eq!(at_zero.classification, Classification::SuperAttracting);

        let at_one = point_near(&report, r(1.0));
        assert!((at_one.multiplier - r(2.0)).norm() < 1e-12);
        assert!((at_one.index - r(-1.0)).norm() < 1e-12);
        assert!(at_one.weakly_repelling);

        let inf = report.infinity_point().expect("infinity is fixed");
        assert_eq!(inf.multiplier, r(0.0));
        assert_eq!(inf.multiplicity, 1);
        assert!((inf.index - r(1.0)).norm() < 1e-12);

        assert!(report.index_sum_deviation < 1e-12);
        assert_eq!(report.multiplicity_sum(), 3);
    }

    #[test]
    fn parabolic_quadratic_report() {
        // z^2 + 1/4: double fixed point at 1/2 with lambda = 1 and index 0
        let report = analyze("z^2 + 0.25");
        let fp = point_near(&report, r(0.5));
        assert!((fp.location.finite().unwrap() - r(0.5)).norm() < 1e-7);
        assert!(fp.multiplier_one);
        assert_eq!(fp.multiplicity, 2);
        assert!(fp.index.norm() < 1e-9);
        assert!(!fp.simple);
        assert!(fp.weakly_repelling);

        let inf = report.infinity_point().unwrap();
        assert!((inf.index - r(1.0)).norm() < 1e-12);
        assert!(report.index_sum_deviation < 1e-9);
        assert_eq!(report.multiplicity_sum(), 3);
    }

    #[test]
    fn reciprocal_square_report() {
        // 1/z^2: fixed points at the cube roots of unity, multiplier -2,
        // index 1/3 each, no fixed point at infinity
        let report = analyze("1/z^2");
        assert_eq!(report.points.len(), 3);
        assert!(report.infinity_point().is_none());
        for p in &report.points {
            let z = p.location.finite().unwrap();
            let cube = z * z * z;
            assert!((cube - r(1.0)).norm() < 1e-10);
            assert!((p.multiplier - r(-2.0)).norm() < 1e-10);
            assert!((p.index - r(1.0 / 3.0)).norm() < 1e-9);
            assert!(p.weakly_repelling);
        }
        assert!(report.index_sum_deviation < 1e-9);
    }

    #[test]
    fn cubic_indices_match_closed_forms() {
        // z^3: lambda in {0, 3, 3}, indices {1, -1/2, -1/2}, infinity 1
        let report = analyze("z^3");
        assert_eq!(report.multiplicity_sum(), 4);
        let at_zero = point_near(&report, r(0.0));
        assert!((at_zero.index - r(1.0)).norm() < 1e-12);
        let at_one = point_near(&report, r(1.0));
        assert!((at_one.index - r(-0.5)).norm() < 1e-12);
        let at_minus_one = point_near(&report, r(-1.0));
        assert!((at_minus_one.index - r(-0.5)).norm() < 1e-12);
        assert!(report.index_sum_deviation < 1e-12);
    }

    #[test]
    fn multiplier_examples() {
        let tol = tol();
        let p = parse_function("i*z + z^2").unwrap();
        let lambda = multiplier_at(&p, ExtComplex::Finite(r(0.0)), &tol).unwrap();
        assert!((lambda - c(0.0, 1.0)).norm() < 1e-15);
        assert!((lambda.norm() - 1.0).abs() < 1e-15);
        assert!((lambda.powu(4) - r(1.0)).norm() < 1e-15);

        let cube = parse_function("z^3").unwrap();
        let inf = multiplier_at(&cube, ExtComplex::Infinity, &tol).unwrap();
        assert_eq!(inf, r(0.0));

        let rational = parse_function("(2*z)/(z^2 + z + 1)").unwrap();
        let at_zero = multiplier_at(&rational, ExtComplex::Finite(r(0.0)), &tol).unwrap();
        assert!((at_zero - r(2.0)).norm() < 1e-15);
    }

    #[test]
    fn multiplier_rejects_non_fixed_point() {
        let tol = tol();
        let p = parse_function("z^2").unwrap();
        let err = multiplier_at(&p, ExtComplex::Finite(r(0.3)), &tol).unwrap_err();
        assert!(matches!(err, FixError::NotAFixedPoint { .. }));
        // infinity is not fixed for 1/z^2
        let m = parse_function("1/z^2").unwrap();
        assert!(multiplier_at(&m, ExtComplex::Infinity, &tol).is_err());
    }

    #[test]
    fn multiplicity_examples() {
        let tol = tol();
        let parabolic = parse_function("z^2 + 0.25").unwrap();
        assert_eq!(
            multiplicity_at(&parabolic, ExtComplex::Finite(r(0.5)), &tol).unwrap(),
            2
        );
        let square = parse_function("z^2").unwrap();
        assert_eq!(
            multiplicity_at(&square, ExtComplex::Finite(r(1.0)), &tol).unwrap(),
            1
        );
        let indiff = parse_function("i*z + z^2").unwrap();
        assert_eq!(
            multiplicity_at(&indiff, ExtComplex::Finite(r(0.0)), &tol).unwrap(),
            1
        );
    }

    #[test]
    fn classification_bands() {
        let tol = tol();
        let at_i = classify_multiplier(c(0.0, 1.0), &tol);
        assert_eq!(at_i.classification, Classification::Indifferent);
        assert_eq!(at_i.rationally_indifferent, Some(4));
        assert!(!at_i.weakly_repelling);

        let repelling = classify_multiplier(r(-2.0), &tol);
        assert_eq!(repelling.classification, Classification::Repelling);
        assert!(repelling.weakly_repelling);

        let zero = classify_multiplier(r(0.0), &tol);
        assert_eq!(zero.classification, Classification::SuperAttracting);

        let one = classify_multiplier(r(1.0), &tol);
        assert!(one.multiplier_one);
        assert!(one.weakly_repelling);
        assert_eq!(one.rationally_indifferent, Some(1));
    }

    #[test]
    fn contour_index_closed_form_agreement() {
        let tol = tol();
        // z^2 at 1: closed form 1/(1-2) = -1
        let square = parse_function("z^2").unwrap();
        let v = residue_index_contour(&square, r(1.0), 0.3, CONTOUR_START_POINTS, &tol).unwrap();
        assert!((v - r(-1.0)).norm() < 1e-10);

        // z^2 + 1/4 at 1/2: residue of -1/(z-1/2)^2 is 0
        let parabolic = parse_function("z^2 + 0.25").unwrap();
        let v =
            residue_index_contour(&parabolic, r(0.5), 0.25, CONTOUR_START_POINTS, &tol).unwrap();
        assert!(v.norm() < 1e-9);

        // iz + z^2 at 0: closed form 1/(1-i) = 0.5 + 0.5i
        let indiff = parse_function("i*z + z^2").unwrap();
        let v = residue_index_contour(&indiff, r(0.0), 0.4, CONTOUR_START_POINTS, &tol).unwrap();
        assert!((v - c(0.5, 0.5)).norm() < 1e-10);
    }

    #[test]
    fn residue_index_delegates_by_multiplier() {
        let tol = tol();
        let report = analyze("z^2 + 0.25");
        let fp = *point_near(&report, r(0.5));
        let map = parse_function("z^2 + 0.25").unwrap();
        let idx = residue_index(&map, &fp, &tol).unwrap();
        assert!(idx.norm() < 1e-9);

        let report = analyze("i*z + z^2");
        let fp = *point_near(&report, r(0.0));
        let map = parse_function("i*z + z^2").unwrap();
        let idx = residue_index(&map, &fp, &tol).unwrap();
        assert!((idx - c(0.5, 0.5)).norm() < 1e-12);
    }

    #[test]
    fn pole_on_contour_is_reported() {
        let tol = tol();
        // 1/z^2 has a pole at 0; a contour through it must be rejected
        let m = parse_function("1/z^2").unwrap();
        let err = residue_index_contour(&m, r(1.0), 1.0, 8, &tol).unwrap_err();
        assert!(matches!(err, FixError::PoleOnContour { .. }));
    }

    #[test]
    fn index_sum_verifies_on_examples() {
        let tol = tol();
        for text in ["1/z^2", "z^3", "z^2 + 0.25", "(2*z)/(z^2 + z + 1)", "z + 1/z"] {
            let map = parse_function(text).unwrap();
            let report = verify_index_sum(&map, &tol).unwrap();
            assert!(report.pass, "{text}: deviation {}", report.deviation);
        }
    }

    #[test]
    fn infinity_only_fixed_point_carries_full_weight() {
        // z + 1 has no finite fixed point; infinity has multiplicity 2
        let report = analyze("z + 1");
        assert_eq!(report.points.len(), 1);
        let inf = &report.points[0];
        assert!(inf.location.is_infinite());
        assert_eq!(inf.multiplicity, 2);
        assert!(inf.multiplier_one);
        assert!((inf.index - r(1.0)).norm() < 1e-9);
        assert_eq!(report.multiplicity_sum(), 2);
    }

    #[test]
    fn multiplier_one_at_infinity_with_multiplicity_three() {
        // z + 1/z: no finite fixed points, infinity has multiplicity 3
        let report = analyze("z + 1/z");
        assert_eq!(report.points.len(), 1);
        let inf = &report.points[0];
        assert_eq!(inf.multiplicity, 3);
        assert!(inf.multiplier_one);
        assert!((inf.index - r(1.0)).norm() < 1e-9);
        assert_eq!(report.multiplicity_sum(), 3);
    }

    #[test]
    fn identity_map_is_rejected() {
        let map = parse_function("z").unwrap();
        assert!(matches!(
            fixed_points(&map, &tol()),
            Err(FixError::IdentityMap)
        ));
    }

    #[test]
    fn degree_one_map_still_verifies() {
        // 2z: fixed points 0 (index -1) and infinity (lambda 1/2, index 2)
        let report = analyze("2*z");
        assert_eq!(report.points.len(), 2);
        let inf = report.infinity_point().unwrap();
        assert!((inf.multiplier - r(0.5)).norm() < 1e-15);
        assert!((inf.index - r(2.0)).norm() < 1e-12);
        assert!(report.index_sum_deviation < 1e-12);
    }

    #[test]
    fn polynomial_sums_vanish_for_simple_points() {
        let tol = tol();
        // z^2: lambda in {0, 2} -> e3 = 1 - 1 = 0, e4 = 1 - 1 = 0
        let p = parse_function("z^2").unwrap();
        let sums = verify_polynomial_sums(p.num(), &tol).unwrap();
        assert!(sums.e3_sum.unwrap().norm() < 1e-12);
        assert!(sums.e4_sum.unwrap().abs() < 1e-12);
        assert!(sums.im_sum.unwrap().abs() < 1e-12);
        assert!(!sums.witnesses_re_ge1.is_empty());
        assert!(!sums.witnesses_re_le1.is_empty());
        assert!(!sums.witnesses_im_nonneg.is_empty());

        // z^3: 1 - 1/2 - 1/2 = 0
        let p = parse_function("z^3").unwrap();
        let sums = verify_polynomial_sums(p.num(), &tol).unwrap();
        assert!(sums.e3_sum.unwrap().norm() < 1e-12);
    }

    #[test]
    fn polynomial_sums_skip_on_multiple_point() {
        let tol = tol();
        let p = parse_function("z^2 + 0.25").unwrap();
        let sums = verify_polynomial_sums(p.num(), &tol).unwrap();
        assert!(sums.multiple_fixed_point.is_some());
        assert!(sums.e3_sum.is_none());
        let witness = &sums.finite_points[sums.multiple_fixed_point.unwrap()];
        assert!((witness.location.finite().unwrap() - r(0.5)).norm() < 1e-7);
    }

    #[test]
    fn multiplicity_sum_is_degree_plus_one() {
        for text in [
            "z^2",
            "z^3",
            "z^2 + 0.25",
            "1/z^2",
            "(2*z)/(z^2 + z + 1)",
            "z + 1",
            "z + 1/z",
            "(z^3 + 1)/(z + 2)",
        ] {
            let map = parse_function(text).unwrap();
            let report = fixed_points(&map, &tol()).unwrap();
            assert_eq!(
                report.multiplicity_sum(),
                map.degree() + 1,
                "mismatch for {text}"
            );
        }
    }

    #[test]
    fn multiplier_one_iff_multiple_across_examples() {
        for text in ["z^2", "z^3", "z^2 + 0.25", "1/z^2", "z + 1/z", "i*z + z^2"] {
            let map = parse_function(text).unwrap();
            let report = fixed_points(&map, &tol()).unwrap();
            for p in &report.points {
                assert_eq!(
                    p.multiplier_one,
                    p.multiplicity >= 2,
                    "coupling violated for {text} at {}",
                    p.location
                );
            }
        }
    }

    #[test]
    fn common_root_is_warned() {
        // z(z-1) / z(z+2): shared root at 0
        let num = Polynomial::new(vec![r(0.0), r(-1.0), r(1.0)]);
        let den = Polynomial::new(vec![r(0.0), r(2.0), r(1.0)]);
        let map = RationalMap::new(num, den).unwrap();
        let report = fixed_points(&map, &tol()).unwrap();
        assert!(report.warnings.iter().any(|w| w.contains("share a root")));
    }
}
