//! Simultaneous root finding (Aberth–Ehrlich) and single-linkage clustering
//! of near-coincident roots into multiplicities.

use crate::poly::Polynomial;
use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RootError {
    #[error("root finding requires degree >= 1, got degree {0}")]
    DegreeTooLow(String),
}

/// One clustered root with its multiplicity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root {
    pub location: Complex64,
    pub multiplicity: usize,
}

/// All roots of a polynomial, clustered. `residual` is the max `|p(root)|`
/// over the reported locations; `converged` is false when the solver hit the
/// sweep limit (expected near multiple roots, where accuracy degrades to
/// roughly tol^(1/m)).
#[derive(Debug, Clone, PartialEq)]
pub struct RootSet {
    pub roots: Vec<Root>,
    pub residual: f64,
    pub converged: bool,
    pub sweeps: u32,
}

impl RootSet {
    pub fn multiplicity_sum(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }

    pub fn locations(&self) -> impl Iterator<Item = Complex64> + '_ {
        self.roots.iter().map(|r| r.location)
    }
}

pub const DEFAULT_ROOT_TOL: f64 = 1e-12;
pub const MAX_SWEEPS: u32 = 1000;

/// Default clustering width, scaled with root magnitude.
pub fn default_cluster_eps(raw: &[Complex64]) -> f64 {
    let max_norm = raw.iter().map(|z| z.norm()).fold(0.0, f64::max);
    1e-6 * (1.0 + max_norm)
}

/// Find all complex roots of `p` with the Aberth–Ehrlich scheme and cluster
/// them with the default width.
///
/// All roots are refined together (implicit deflation through the mutual
/// repulsion term). Converged when every correction satisfies
/// `|dz_i| <= tol * (1 + |z_i|)`. Initial guesses sit on the Cauchy root
/// bound circle, rotated by a fixed irrational angle so they never align
/// with a root symmetry. Fully deterministic.
pub fn find_roots(p: &Polynomial, tol: f64) -> Result<RootSet, RootError> {
    find_roots_scaled(p, tol, 1e-6)
}

/// As `find_roots` but with a configurable cluster width base; the effective
/// width is `eps_base * (1 + max |root|)`.
pub fn find_roots_scaled(p: &Polynomial, tol: f64, eps_base: f64) -> Result<RootSet, RootError> {
    let raw = raw_roots(p, tol)?;
    let max_norm = raw.0.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let eps = eps_base * (1.0 + max_norm);
    let mut set = cluster_roots(&raw.0, eps);
    set.converged = raw.1;
    set.sweeps = raw.2;
    set.residual = residual(p, &set);
    Ok(set)
}

/// As `find_roots` but with an explicit absolute clustering width.
pub fn find_roots_with_eps(p: &Polynomial, tol: f64, eps: f64) -> Result<RootSet, RootError> {
    let raw = raw_roots(p, tol)?;
    let mut set = cluster_roots(&raw.0, eps);
    set.converged = raw.1;
    set.sweeps = raw.2;
    set.residual = residual(p, &set);
    Ok(set)
}

fn residual(p: &Polynomial, set: &RootSet) -> f64 {
    set.roots
        .iter()
        .map(|r| p.eval(r.location).norm())
        .fold(0.0, f64::max)
}

/// Unclustered simultaneous iteration. Returns (roots, converged, sweeps).
fn raw_roots(p: &Polynomial, tol: f64) -> Result<(Vec<Complex64>, bool, u32), RootError> {
    let Some(degree) = p.degree().as_usize().filter(|&d| d >= 1) else {
        return Err(RootError::DegreeTooLow(p.degree().to_string()));
    };
    let monic = p.monic();
    let deriv = monic.derivative();

    // Cauchy bound: all roots lie inside |z| <= 1 + max |a_i| (monic).
    let bound = 1.0
        + monic.coeffs()[..degree]
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max);

    // 0.5 rad offset: irrational fraction of a turn, breaks root symmetries.
    let mut z: Vec<Complex64> = (0..degree)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * (k as f64) / (degree as f64) + 0.5;
            Complex64::from_polar(bound, angle)
        })
        .collect();

    let mut corrections = vec![Complex64::new(0.0, 0.0); degree];
    for sweep in 1..=MAX_SWEEPS {
        let mut all_small = true;
        for i in 0..degree {
            let zi = z[i];
            let pv = monic.eval(zi);
            let dv = deriv.eval(zi);
            let newton = if dv.re == 0.0 && dv.im == 0.0 {
                // flat spot: nudge instead of dividing by zero
                Complex64::new(tol * (1.0 + zi.norm()), 0.0)
            } else {
                pv / dv
            };
            let mut repulsion = Complex64::new(0.0, 0.0);
            for (j, &zj) in z.iter().enumerate() {
                if j == i {
                    continue;
                }
                let diff = zi - zj;
                if diff.re == 0.0 && diff.im == 0.0 {
                    // coincident iterates: deterministic tiny separation
                    repulsion += Complex64::new(1e12, 0.0);
                } else {
                    repulsion += diff.inv();
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * repulsion;
            let correction = if denom.re == 0.0 && denom.im == 0.0 {
                newton
            } else {
                newton / denom
            };
            corrections[i] = if correction.is_finite() {
                correction
            } else {
                Complex64::new(0.0, 0.0)
            };
            if corrections[i].norm() > tol * (1.0 + zi.norm()) {
                all_small = false;
            }
        }
        for i in 0..degree {
            z[i] -= corrections[i];
        }
        if all_small {
            return Ok((z, true, sweep));
        }
    }
    Ok((z, false, MAX_SWEEPS))
}

/// Single-linkage clustering: roots closer than `eps` (transitively) merge
/// into one cluster, reported at the centroid with multiplicity equal to the
/// cluster size. Output is sorted by (re, im).
pub fn cluster_roots(raw: &[Complex64], eps: f64) -> RootSet {
    let n = raw.len();
    let mut parent: Vec<usize> = (0..n).collect();

    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let root = find(parent, parent[i]);
            parent[i] = root;
        }
        parent[i]
    }

    for i in 0..n {
        for j in (i + 1)..n {
            if (raw[i] - raw[j]).norm() <= eps {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri] = rj;
                }
            }
        }
    }

    let mut clusters: Vec<(Complex64, usize)> = Vec::new();
    let mut cluster_of = vec![usize::MAX; n];
    for i in 0..n {
        let rep = find(&mut parent, i);
        if cluster_of[rep] == usize::MAX {
            cluster_of[rep] = clusters.len();
            clusters.push((Complex64::new(0.0, 0.0), 0));
        }
        let c = &mut clusters[cluster_of[rep]];
        c.0 += raw[i];
        c.1 += 1;
    }

    let mut roots: Vec<Root> = clusters
        .into_iter()
        .map(|(sum, count)| Root {
            location: sum / count as f64,
            multiplicity: count,
        })
        .collect();
    roots.sort_by(|a, b| {
        a.location
            .re
            .total_cmp(&b.location.re)
            .then(a.location.im.total_cmp(&b.location.im))
    });

    RootSet {
        roots,
        residual: 0.0,
        converged: true,
        sweeps: 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn r(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn cubic_minus_z_has_three_simple_roots() {
        // z^3 - z -> {-1, 0, 1}
        let p = Polynomial::new(vec![r(0.0), r(-1.0), r(0.0), r(1.0)]);
        let set = find_roots(&p, DEFAULT_ROOT_TOL).unwrap();
        assert_eq!(set.roots.len(), 3);
        let expected = [-1.0, 0.0, 1.0];
        for (root, want) in set.roots.iter().zip(expected) {
            assert_eq!(root.multiplicity, 1);
            assert!((root.location - r(want)).norm() < 1e-10);
        }
        assert!(set.converged);
    }

    #[test]
    fn double_root_is_clustered() {
        // (z - 1/2)^2 = z^2 - z + 1/4
        let p = Polynomial::new(vec![r(0.25), r(-1.0), r(1.0)]);
        let set = find_roots(&p, DEFAULT_ROOT_TOL).unwrap();
        assert_eq!(set.roots.len(), 1);
        assert_eq!(set.roots[0].multiplicity, 2);
        assert!((set.roots[0].location - r(0.5)).norm() < 1e-7);
    }

    #[test]
    fn roots_of_unity() {
        // z^3 - 1
        let p = Polynomial::new(vec![r(-1.0), r(0.0), r(0.0), r(1.0)]);
        let set = find_roots(&p, DEFAULT_ROOT_TOL).unwrap();
        assert_eq!(set.roots.len(), 3);
        assert!(set.residual < 1e-12);
        for root in &set.roots {
            let cube = root.location * root.location * root.location;
            assert!((cube - r(1.0)).norm() < 1e-10);
        }
    }

    #[test]
    fn construct_then_solve_recovers_known_roots() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..25 {
            // well-separated random roots
            let mut roots: Vec<Complex64> = Vec::new();
            while roots.len() < 6 {
                let cand = c(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
                if roots.iter().all(|&z| (z - cand).norm() > 0.3) {
                    roots.push(cand);
                }
            }
            let p = Polynomial::from_roots(&roots);
            let set = find_roots(&p, DEFAULT_ROOT_TOL).unwrap();
            assert_eq!(set.roots.len(), 6);
            for root in &set.roots {
                let nearest = roots
                    .iter()
                    .map(|&z| (z - root.location).norm())
                    .fold(f64::INFINITY, f64::min);
                assert!(nearest < 1e-8, "root off by {nearest}");
            }
        }
    }

    #[test]
    fn forced_merge_of_close_pair() {
        let raw = [r(0.5 + 1e-9), r(0.5 - 1e-9)];
        let set = cluster_roots(&raw, 1e-6);
        assert_eq!(set.roots.len(), 1);
        assert_eq!(set.roots[0].multiplicity, 2);
        assert!((set.roots[0].location - r(0.5)).norm() < 1e-12);
    }

    #[test]
    fn well_separated_stay_apart() {
        let raw = [r(0.0), r(1.0), r(-1.0)];
        let set = cluster_roots(&raw, 1e-6);
        assert_eq!(set.roots.len(), 3);
        assert!(set.roots.iter().all(|r| r.multiplicity == 1));
    }

    #[test]
    fn near_double_root_boundary_behavior() {
        // z^2 - z + 0.2500000001: the quadratic formula gives
        // 0.5 +/- 1e-5 i, a separation of 2e-5. That exceeds the default
        // clustering width (~1.5e-6), so the pair stays split; a width
        // above the separation merges it into one double root.
        let p = Polynomial::new(vec![r(0.2500000001), r(-1.0), r(1.0)]);
        let set = find_roots(&p, DEFAULT_ROOT_TOL).unwrap();
        assert_eq!(set.roots.len(), 2);
        assert!(set.roots.iter().all(|r| r.multiplicity == 1));
        for root in &set.roots {
            assert!((root.location.re - 0.5).abs() < 1e-9);
            assert!((root.location.im.abs() - 1e-5).abs() < 1e-9);
        }

        let merged = find_roots_with_eps(&p, DEFAULT_ROOT_TOL, 1e-4).unwrap();
        assert_eq!(merged.roots.len(), 1);
        assert_eq!(merged.roots[0].multiplicity, 2);
        assert!((merged.roots[0].location - r(0.5)).norm() < 1e-9);
    }

    #[test]
    fn multiplicity_sum_equals_degree() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let deg = rng.gen_range(1..=8);
            let mut coeffs: Vec<Complex64> = (0..=deg)
                .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect();
            if coeffs[deg].norm() < 0.1 {
                coeffs[deg] = r(1.0);
            }
            let p = Polynomial::new(coeffs);
            let set = find_roots(&p, DEFAULT_ROOT_TOL).unwrap();
            assert_eq!(set.multiplicity_sum(), deg);
        }
    }

    #[test]
    fn reconstruction_from_rootset_matches_monic_input() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..30 {
            let deg = rng.gen_range(2..=8);
            let mut coeffs: Vec<Complex64> = (0..=deg)
                .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect();
            if coeffs[deg].norm() < 0.2 {
                coeffs[deg] = r(1.0);
            }
            let p = Polynomial::new(coeffs);
            let set = find_roots(&p, DEFAULT_ROOT_TOL).unwrap();
            let mut expanded = Polynomial::one();
            for root in &set.roots {
                for _ in 0..root.multiplicity {
                    expanded = &expanded
                        * &Polynomial::new(vec![-root.location, Complex64::new(1.0, 0.0)]);
                }
            }
            let monic = p.monic();
            for k in 0..=deg {
                let diff = (expanded.coeff(k) - monic.coeff(k)).norm();
                assert!(diff < 1e-7, "coeff {k} off by {diff}");
            }
        }
    }

    #[test]
    fn residuals_small_for_well_separated_roots() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..30 {
            let deg = rng.gen_range(2..=8);
            let mut roots: Vec<Complex64> = Vec::new();
            while roots.len() < deg {
                let cand = c(rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5));
                if roots.iter().all(|&z| (z - cand).norm() > 0.25) {
                    roots.push(cand);
                }
            }
            let p = Polynomial::from_roots(&roots);
            let set = find_roots(&p, DEFAULT_ROOT_TOL).unwrap();
            assert!(set.residual <= 1e-9 * p.max_coeff_norm().max(1.0));
        }
    }

    #[test]
    fn degree_zero_is_rejected() {
        let p = Polynomial::constant(r(3.0));
        assert!(find_roots(&p, DEFAULT_ROOT_TOL).is_err());
        assert!(find_roots(&Polynomial::zero(), DEFAULT_ROOT_TOL).is_err());
    }

    #[test]
    fn monomial_cluster_collapses_to_origin() {
        // z^5: one root of multiplicity 5 at 0
        let p = Polynomial::monomial(r(1.0), 5);
        let set = find_roots(&p, DEFAULT_ROOT_TOL).unwrap();
        assert_eq!(set.roots.len(), 1);
        assert_eq!(set.roots[0].multiplicity, 5);
        assert!(set.roots[0].location.norm() < 1e-6);
    }
}
