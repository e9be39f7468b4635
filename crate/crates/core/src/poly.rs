//! Polynomial and rational-map arithmetic over complex coefficients:
//! evaluation, derivatives, Möbius conjugation and the inversion chart
//! `w -> 1/R(1/w)` used to study the point at infinity.

use num_complex::Complex64;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PolyError {
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,
    #[error("degenerate Möbius map: |ad - bc| = {det:.3e} below the invertibility threshold")]
    DegenerateMobius { det: f64 },
    #[error("indeterminate value 0/0 at z = {at} (numerator and denominator share a root)")]
    Indeterminate { at: Complex64 },
    #[error("inversion chart of the zero map is undefined")]
    ChartOfZeroMap,
}

/// Degree with a dedicated case for the zero polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn as_usize(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }

    /// Degree as a count, treating the zero polynomial as 0.
    pub fn or_zero(self) -> usize {
        self.as_usize().unwrap_or(0)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// A point of the extended complex plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtComplex {
    Finite(Complex64),
    Infinity,
}

impl ExtComplex {
    pub fn is_infinite(self) -> bool {
        matches!(self, ExtComplex::Infinity)
    }

    pub fn finite(self) -> Option<Complex64> {
        match self {
            ExtComplex::Finite(z) => Some(z),
            ExtComplex::Infinity => None,
        }
    }
}

impl fmt::Display for ExtComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtComplex::Finite(z) => write!(f, "{z}"),
            ExtComplex::Infinity => write!(f, "inf"),
        }
    }
}

impl From<Complex64> for ExtComplex {
    fn from(z: Complex64) -> Self {
        ExtComplex::Finite(z)
    }
}

/// Complex polynomial in ascending powers. Trailing zero coefficients are
/// stripped; the zero polynomial is the empty sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<Complex64>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        while coeffs.last().is_some_and(|c| c.re == 0.0 && c.im == 0.0) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Complex64::new(1.0, 0.0))
    }

    pub fn constant(c: Complex64) -> Self {
        Polynomial::new(vec![c])
    }

    /// The monomial `c * z^k`.
    pub fn monomial(c: Complex64, k: usize) -> Self {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); k + 1];
        coeffs[k] = c;
        Polynomial::new(coeffs)
    }

    /// The identity polynomial `z`.
    pub fn identity() -> Self {
        Polynomial::monomial(Complex64::new(1.0, 0.0), 1)
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots(roots: &[Complex64]) -> Self {
        let mut p = Polynomial::one();
        for &r in roots {
            p = &p * &Polynomial::new(vec![-r, Complex64::new(1.0, 0.0)]);
        }
        p
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `z^k`, zero beyond the stored length.
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    pub fn degree(&self) -> Degree {
        if self.coeffs.is_empty() {
            Degree::NegInfinity
        } else {
            Degree::Finite(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<Complex64> {
        self.coeffs.last().copied()
    }

    pub fn max_coeff_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| c * k as f64)
            .collect();
        Polynomial::new(coeffs)
    }

    pub fn scale(&self, c: Complex64) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Divide all coefficients so the leading one becomes 1.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            Some(lead) => self.scale(lead.inv()),
            None => Polynomial::zero(),
        }
    }

    /// Multiply by `z^k`.
    pub fn shift_up(&self, k: usize) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Complex64::new(0.0, 0.0); k];
        coeffs.extend_from_slice(&self.coeffs);
        Polynomial::new(coeffs)
    }

    /// Coefficient reversal as a degree-`n` polynomial: `w^n * p(1/w)`.
    /// `n` must be at least the degree of `p`.
    pub fn reversed(&self, n: usize) -> Polynomial {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
        for (k, &c) in self.coeffs.iter().enumerate() {
            coeffs[n - k] = c;
        }
        Polynomial::new(coeffs)
    }

    pub fn pow(&self, k: usize) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Drop leading coefficients whose magnitude is below `tol` relative to
    /// the largest coefficient. Used where floating-point cancellation can
    /// leave a spurious tiny leading term.
    pub fn truncate_leading(&self, tol: f64) -> Polynomial {
        let scale = self.max_coeff_norm();
        if scale == 0.0 {
            return Polynomial::zero();
        }
        let mut coeffs = self.coeffs.clone();
        while coeffs.last().is_some_and(|c| c.norm() <= tol * scale) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// Number of low-order coefficients below `tol` relative to the largest,
    /// i.e. the multiplicity of 0 as a root.
    pub fn order_at_zero(&self, tol: f64) -> usize {
        let scale = self.max_coeff_norm();
        if scale == 0.0 {
            return 0;
        }
        self.coeffs
            .iter()
            .take_while(|c| c.norm() <= tol * scale)
            .count()
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Polynomial::new(coeffs)
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        Polynomial::new(coeffs)
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Complex64::new(0.0, 0.0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

/// Quotient of two polynomials. The denominator is never zero and both parts
/// are normalized by the denominator's leading coefficient on construction,
/// so a constant denominator is exactly `1`.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalMap {
    num: Polynomial,
    den: Polynomial,
}

impl RationalMap {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, PolyError> {
        let lead = den.leading().ok_or(PolyError::ZeroDenominator)?;
        let inv = lead.inv();
        Ok(RationalMap {
            num: num.scale(inv),
            den: den.scale(inv),
        })
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalMap {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    /// Map degree: max of numerator and denominator degrees.
    pub fn degree(&self) -> usize {
        self.num.degree().or_zero().max(self.den.degree().or_zero())
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// Whether the point at infinity is fixed, i.e. `deg num > deg den`.
    pub fn fixes_infinity(&self) -> bool {
        self.num.degree() > self.den.degree()
    }

    /// Evaluate `num(z)/den(z)`, reporting a pole as the infinity marker and
    /// an exact 0/0 as an indeterminate error.
    pub fn evaluate(&self, z: Complex64) -> Result<ExtComplex, PolyError> {
        let d = self.den.eval(z);
        if d.re == 0.0 && d.im == 0.0 {
            let n = self.num.eval(z);
            if n.re == 0.0 && n.im == 0.0 {
                return Err(PolyError::Indeterminate { at: z });
            }
            return Ok(ExtComplex::Infinity);
        }
        Ok(ExtComplex::Finite(self.num.eval(z) / d))
    }

    /// Evaluate on the extended plane, sending `inf` through the map.
    pub fn evaluate_ext(&self, z: ExtComplex) -> Result<ExtComplex, PolyError> {
        match z {
            ExtComplex::Finite(z) => self.evaluate(z),
            ExtComplex::Infinity => {
                use std::cmp::Ordering;
                match self.num.degree().cmp(&self.den.degree()) {
                    Ordering::Greater => Ok(ExtComplex::Infinity),
                    Ordering::Equal => Ok(ExtComplex::Finite(
                        self.num.leading().unwrap() / self.den.leading().unwrap(),
                    )),
                    Ordering::Less => Ok(ExtComplex::Finite(Complex64::new(0.0, 0.0))),
                }
            }
        }
    }

    /// Quotient-rule derivative; no cancellation is attempted. A constant
    /// denominator keeps the result polynomial.
    pub fn derivative(&self) -> RationalMap {
        if self.is_polynomial() {
            // den is exactly 1 after normalization
            return RationalMap::from_polynomial(self.num.derivative());
        }
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let den = &self.den * &self.den;
        RationalMap::new(num, den).expect("square of a nonzero polynomial is nonzero")
    }

    /// The fixed-point polynomial `num(z) - z * den(z)`; its roots are the
    /// finite fixed points.
    pub fn fixed_point_polynomial(&self) -> Polynomial {
        &self.num - &self.den.shift_up(1)
    }

    /// The chart `w -> 1/R(1/w)` as a rational map. Both coefficient
    /// sequences are reversed, swapped and padded so the powers align.
    pub fn inversion_chart(&self) -> Result<RationalMap, PolyError> {
        let n = self.num.degree().as_usize().ok_or(PolyError::ChartOfZeroMap)?;
        let m = self.den.degree().or_zero();
        let rev_num = self.num.reversed(n);
        let rev_den = self.den.reversed(m);
        let (chart_num, chart_den) = if n >= m {
            (rev_den.shift_up(n - m), rev_num)
        } else {
            (rev_den, rev_num.shift_up(m - n))
        };
        RationalMap::new(chart_num, chart_den)
    }

    /// Conjugate by a Möbius map: returns `g ∘ R ∘ g⁻¹`, computed by
    /// polynomial substitution and clearing denominators.
    pub fn mobius_conjugate(&self, mob: &MobiusMap) -> Result<RationalMap, PolyError> {
        // g⁻¹(w) = (d w - b) / (-c w + a)
        let a_poly = Polynomial::new(vec![-mob.b, mob.d]);
        let b_poly = Polynomial::new(vec![mob.a, -mob.c]);

        let n = self.num.degree().or_zero();
        let m = self.den.degree().or_zero();
        let big = n.max(m);

        let substitute = |p: &Polynomial, deg: usize| {
            let mut acc = Polynomial::zero();
            for i in 0..=deg {
                let c = p.coeff(i);
                if c.re == 0.0 && c.im == 0.0 {
                    continue;
                }
                let term = &a_poly.pow(i) * &b_poly.pow(deg - i);
                acc = &acc + &term.scale(c);
            }
            acc
        };

        let u = &substitute(&self.num, n) * &b_poly.pow(big - n);
        let v = &substitute(&self.den, m) * &b_poly.pow(big - m);

        let s_num = &u.scale(mob.a) + &v.scale(mob.b);
        let s_den = &u.scale(mob.c) + &v.scale(mob.d);
        RationalMap::new(s_num, s_den)
    }

    pub fn max_coeff_norm(&self) -> f64 {
        self.num.max_coeff_norm().max(self.den.max_coeff_norm())
    }

    /// Coefficient-wise comparison within a relative tolerance.
    pub fn approx_eq(&self, other: &RationalMap, tol: f64) -> bool {
        let scale = 1.0 + self.max_coeff_norm().max(other.max_coeff_norm());
        let close = |p: &Polynomial, q: &Polynomial| {
            let n = p.coeffs().len().max(q.coeffs().len());
            (0..n).all(|k| (p.coeff(k) - q.coeff(k)).norm() <= tol * scale)
        };
        close(&self.num, &other.num) && close(&self.den, &other.den)
    }
}

/// Invertible map `z -> (az + b)/(cz + d)` of the extended plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MobiusMap {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

impl MobiusMap {
    /// Determinant threshold: relative to the squared largest coefficient.
    const DET_TOL: f64 = 1e-14;

    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self, PolyError> {
        let det = (a * d - b * c).norm();
        let scale = a.norm().max(b.norm()).max(c.norm()).max(d.norm());
        if det <= Self::DET_TOL * scale * scale {
            return Err(PolyError::DegenerateMobius { det });
        }
        Ok(MobiusMap { a, b, c, d })
    }

    pub fn identity() -> Self {
        MobiusMap {
            a: Complex64::new(1.0, 0.0),
            b: Complex64::new(0.0, 0.0),
            c: Complex64::new(0.0, 0.0),
            d: Complex64::new(1.0, 0.0),
        }
    }

    /// The translation `z -> z + t`.
    pub fn translation(t: Complex64) -> Self {
        MobiusMap {
            a: Complex64::new(1.0, 0.0),
            b: t,
            c: Complex64::new(0.0, 0.0),
            d: Complex64::new(1.0, 0.0),
        }
    }

    pub fn inverse(&self) -> MobiusMap {
        MobiusMap {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }

    /// Apply on the extended plane.
    pub fn apply(&self, z: ExtComplex) -> ExtComplex {
        match z {
            ExtComplex::Finite(z) => {
                let den = self.c * z + self.d;
                if den.re == 0.0 && den.im == 0.0 {
                    ExtComplex::Infinity
                } else {
                    ExtComplex::Finite((self.a * z + self.b) / den)
                }
            }
            ExtComplex::Infinity => {
                if self.c.re == 0.0 && self.c.im == 0.0 {
                    ExtComplex::Infinity
                } else {
                    ExtComplex::Finite(self.a / self.c)
                }
            }
        }
    }
}
