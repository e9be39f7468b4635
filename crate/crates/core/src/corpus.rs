//! Seeded random generators for maps used by the batch command and the
//! verification corpora. Everything is driven by a ChaCha stream so a seed
//! pins the whole corpus.

use crate::poly::{MobiusMap, Polynomial, RationalMap};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform sample from the closed unit disk.
pub fn unit_disk(rng: &mut ChaCha8Rng) -> Complex64 {
    let radius = rng.gen_range(0.0f64..=1.0).sqrt();
    let angle = rng.gen_range(0.0..(2.0 * std::f64::consts::PI));
    Complex64::from_polar(radius, angle)
}

/// Polynomial of exact degree `degree` with unit-disk coefficients. The
/// leading coefficient is resampled until its magnitude reaches 0.05 so the
/// degree is honest in floating point.
pub fn random_polynomial(rng: &mut ChaCha8Rng, degree: usize) -> Polynomial {
    let mut coeffs: Vec<Complex64> = (0..=degree).map(|_| unit_disk(rng)).collect();
    while coeffs[degree].norm() < 0.05 {
        coeffs[degree] = unit_disk(rng);
    }
    Polynomial::new(coeffs)
}

fn nearly_identity(map: &RationalMap) -> bool {
    let f = map.fixed_point_polynomial();
    f.max_coeff_norm() <= 1e-8 * (1.0 + map.max_coeff_norm())
}

/// Rational map of exact degree `degree` (max of the part degrees), with
/// unit-disk coefficients, resampled when nearly the identity.
pub fn random_rational_map(rng: &mut ChaCha8Rng, degree: usize) -> RationalMap {
    loop {
        let num_degree = rng.gen_range(0..=degree);
        let den_degree = rng.gen_range(0..=degree);
        let (num_degree, den_degree) = if num_degree.max(den_degree) == degree {
            (num_degree, den_degree)
        } else if rng.gen_bool(0.5) {
            (degree, den_degree)
        } else {
            (num_degree, degree)
        };
        let num = random_polynomial(rng, num_degree);
        let den = random_polynomial(rng, den_degree);
        let Ok(map) = RationalMap::new(num, den) else {
            continue;
        };
        if !nearly_identity(&map) {
            return map;
        }
    }
}

/// Polynomial map of exact degree `degree` as a rational map, resampled when
/// nearly the identity.
pub fn random_polynomial_map(rng: &mut ChaCha8Rng, degree: usize) -> RationalMap {
    loop {
        let map = RationalMap::from_polynomial(random_polynomial(rng, degree));
        if !nearly_identity(&map) {
            return map;
        }
    }
}

/// Polynomial map whose finite fixed points all have multipliers comfortably
/// away from 1 (within `margin`), so the identity sums are well conditioned.
pub fn random_simple_polynomial_map(
    rng: &mut ChaCha8Rng,
    degree: usize,
    margin: f64,
) -> RationalMap {
    use crate::fixpoint::{fixed_points, Tolerances};
    let tol = Tolerances::default();
    loop {
        let map = random_polynomial_map(rng, degree);
        let Ok(report) = fixed_points(&map, &tol) else {
            continue;
        };
        let ok = report
            .finite_points()
            .all(|p| (p.multiplier - Complex64::new(1.0, 0.0)).norm() >= margin);
        if ok {
            return map;
        }
    }
}

/// Möbius map with unit-disk entries and determinant magnitude at least 0.1.
pub fn random_mobius(rng: &mut ChaCha8Rng) -> MobiusMap {
    loop {
        let a = unit_disk(rng);
        let b = unit_disk(rng);
        let c = unit_disk(rng);
        let d = unit_disk(rng);
        if (a * d - b * c).norm() < 0.1 {
            continue;
        }
        if let Ok(map) = MobiusMap::new(a, b, c, d) {
            return map;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_deterministic() {
        let mut a = rng_from_seed(42);
        let mut b = rng_from_seed(42);
        for _ in 0..10 {
            let m1 = random_rational_map(&mut a, 4);
            let m2 = random_rational_map(&mut b, 4);
            assert_eq!(m1, m2);
        }
    }

    #[test]
    fn degrees_are_exact() {
        let mut rng = rng_from_seed(1);
        for degree in 2..=6 {
            for _ in 0..20 {
                let m = random_rational_map(&mut rng, degree);
                assert_eq!(m.degree(), degree);
                let p = random_polynomial(&mut rng, degree);
                assert_eq!(p.degree().as_usize(), Some(degree));
            }
        }
    }
}
