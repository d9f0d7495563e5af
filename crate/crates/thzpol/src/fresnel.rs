//! Fresnel reflection of a finite-thickness lossless dielectric slab.
//!
//! The slab (a planar high-resistivity silicon mirror in the intended
//! setup) is hit at oblique incidence; multiple internal reflections are
//! summed in closed form (Airy), giving complex amplitude reflection and
//! transmission coefficients per polarization. Reflection zeros sit at the
//! half-wave resonances `f_p = p c0 / (2 n t cos(theta_t))` with `theta_t`
//! the internal refraction angle.
//!
//! Sign convention: the single-interface coefficients are
//! `r_perp = (cos(a) - n cos(t)) / (cos(a) + n cos(t))` and
//! `r_par = (n cos(a) - cos(t)) / (n cos(a) + cos(t))`, so at 45 degrees
//! on silicon `Re r_perp` and `Re r_par` carry opposite signs, and at
//! normal incidence `r_par = -r_perp`.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::float::{wrap_phase, Real};

/// Lossless dielectric slab at a fixed incidence angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DielectricSlab<T> {
    n_index: T,
    thickness: T,
    alpha_deg: T,
}

impl<T: Real> DielectricSlab<T> {
    /// `n_index >= 1`, `thickness > 0` (m), `0 <= alpha_deg < 90`.
    pub fn new(n_index: T, thickness: T, alpha_deg: T) -> Result<Self> {
        if !n_index.is_finite() || n_index < T::one() {
            return Err(Error::InvalidParameter(format!(
                "refractive index must be >= 1, got {n_index}"
            )));
        }
        if !thickness.is_finite() || thickness <= T::zero() {
            return Err(Error::InvalidParameter(format!(
                "thickness must be positive, got {thickness}"
            )));
        }
        if !alpha_deg.is_finite() || alpha_deg < T::zero() || alpha_deg >= T::lit(90.0) {
            return Err(Error::InvalidParameter(format!(
                "incidence angle must lie in [0, 90) degrees, got {alpha_deg}"
            )));
        }
        Ok(Self { n_index, thickness, alpha_deg })
    }

    /// The float-zone silicon mirror the toolkit defaults model:
    /// n = 3.416, t = 3.415 mm, 45 degree incidence.
    pub fn standard() -> Self {
        Self {
            n_index: T::lit(3.416),
            thickness: T::lit(3.415e-3),
            alpha_deg: T::lit(45.0),
        }
    }

    pub fn n_index(&self) -> T {
        self.n_index
    }

    /// Thickness in meters.
    pub fn thickness(&self) -> T {
        self.thickness
    }

    /// Incidence angle in degrees.
    pub fn alpha_deg(&self) -> T {
        self.alpha_deg
    }

    /// Cosine of the internal refraction angle, by Snell's law.
    fn cos_theta_t(&self) -> T {
        let sin_t = self.alpha_deg.to_radians().sin() / self.n_index;
        (T::one() - sin_t * sin_t).sqrt()
    }

    /// Spacing of the reflection zeros, `c0 / (2 n t cos(theta_t))` (Hz).
    pub fn resonance_spacing(&self) -> T {
        T::speed_of_light()
            / (T::lit(2.0) * self.n_index * self.thickness * self.cos_theta_t())
    }

    /// Alternative spacing sometimes quoted with the external incidence
    /// angle in place of the internal refraction angle:
    /// `c0 / (2 n t cos(alpha))`. For the standard mirror this gives
    /// 18.17 GHz instead of the 13.13 GHz the etalon actually shows; it is
    /// kept only for comparison against that quoted form.
    pub fn resonance_spacing_incidence_angle(&self) -> T {
        T::speed_of_light()
            / (T::lit(2.0)
                * self.n_index
                * self.thickness
                * self.alpha_deg.to_radians().cos())
    }
}

/// Complex slab reflection coefficients at one frequency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlabReflection<T> {
    pub f: T,
    pub r_par: Complex<T>,
    pub r_perp: Complex<T>,
}

/// Phase angles of a [`SlabReflection`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseOffsets<T> {
    pub phi_par: T,
    pub phi_perp: T,
    /// `phi_par - phi_perp`, wrapped to `(-pi, pi]`.
    pub delta_phi: T,
}

/// Scale applied to the parallel channel to compensate detector coupling
/// asymmetry, `0 < A <= 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymmetryCalibration<T> {
    a: T,
}

impl<T: Real> AsymmetryCalibration<T> {
    pub fn new(a: T) -> Result<Self> {
        if !a.is_finite() || a <= T::zero() || a > T::one() {
            return Err(Error::InvalidParameter(format!(
                "asymmetry must lie in (0, 1], got {a}"
            )));
        }
        Ok(Self { a })
    }

    /// Unit scale: ideal symmetric coupling.
    pub fn ideal() -> Self {
        Self { a: T::one() }
    }

    /// The experimentally calibrated default, A = 0.85.
    pub fn standard() -> Self {
        Self { a: T::lit(0.85) }
    }

    pub fn scale(&self) -> T {
        self.a
    }
}

fn airy<T: Real>(r01: T, phase: T) -> (Complex<T>, Complex<T>) {
    let e = Complex::from_polar(T::one(), phase);
    let one = Complex::new(T::one(), T::zero());
    let denom = one - e * (r01 * r01);
    let r = (one - e) * r01 / denom;
    let t = Complex::from_polar(T::one(), phase / T::lit(2.0)) * (T::one() - r01 * r01) / denom;
    (r, t)
}

fn interface_coefficients<T: Real>(slab: &DielectricSlab<T>) -> (T, T) {
    let n = slab.n_index();
    let cos_a = slab.alpha_deg().to_radians().cos();
    let cos_t = slab.cos_theta_t();
    let r_par = (n * cos_a - cos_t) / (n * cos_a + cos_t);
    let r_perp = (cos_a - n * cos_t) / (cos_a + n * cos_t);
    (r_par, r_perp)
}

fn round_trip_phase<T: Real>(slab: &DielectricSlab<T>, f: T) -> T {
    T::lit(2.0) * T::TAU() * f / T::speed_of_light()
        * slab.n_index()
        * slab.thickness()
        * slab.cos_theta_t()
}

/// Complex reflection coefficients of the slab at frequency `f`, both
/// polarizations, by the closed-form multiple-reflection sum.
pub fn slab_reflection<T: Real>(slab: &DielectricSlab<T>, f: T) -> Result<SlabReflection<T>> {
    if !(f > T::zero()) {
        return Err(Error::Domain(format!("frequency must be positive, got {f}")));
    }
    let (r01_par, r01_perp) = interface_coefficients(slab);
    let phase = round_trip_phase(slab, f);
    let (r_par, _) = airy(r01_par, phase);
    let (r_perp, _) = airy(r01_perp, phase);
    Ok(SlabReflection { f, r_par, r_perp })
}

/// Complex transmission coefficients `(t_par, t_perp)` of the slab;
/// `|r|^2 + |t|^2 = 1` per polarization for the lossless slab.
pub fn slab_transmission<T: Real>(slab: &DielectricSlab<T>, f: T) -> Result<(Complex<T>, Complex<T>)> {
    if !(f > T::zero()) {
        return Err(Error::Domain(format!("frequency must be positive, got {f}")));
    }
    let (r01_par, r01_perp) = interface_coefficients(slab);
    let phase = round_trip_phase(slab, f);
    let (_, t_par) = airy(r01_par, phase);
    let (_, t_perp) = airy(r01_perp, phase);
    Ok((t_par, t_perp))
}

/// Phase angles of both coefficients and their wrapped difference.
///
/// Errors when either coefficient is exactly zero, where the phase is
/// undefined (a reflection resonance hit dead on).
pub fn phase_offsets<T: Real>(refl: &SlabReflection<T>) -> Result<PhaseOffsets<T>> {
    if refl.r_par.norm() == T::zero() || refl.r_perp.norm() == T::zero() {
        return Err(Error::Degenerate(
            "reflection coefficient is exactly zero; phase undefined at resonance".into(),
        ));
    }
    let phi_par = refl.r_par.arg();
    let phi_perp = refl.r_perp.arg();
    Ok(PhaseOffsets {
        phi_par,
        phi_perp,
        delta_phi: wrap_phase(phi_par - phi_perp),
    })
}

/// Least-squares scale `A` minimizing `sum (A * measured - theory)^2`,
/// clamped to `(0, 1]`.
///
/// Requires equal-length series with theory nonzero on a majority of
/// points; errors on degenerate (all-zero) measured input.
pub fn calibrate_asymmetry<T: Real>(
    measured_par: &[T],
    theory_par: &[T],
) -> Result<AsymmetryCalibration<T>> {
    if measured_par.len() != theory_par.len() {
        return Err(Error::ShapeMismatch(format!(
            "measured has {} points, theory has {}",
            measured_par.len(),
            theory_par.len()
        )));
    }
    if measured_par.is_empty() {
        return Err(Error::Degenerate("empty calibration series".into()));
    }
    let nonzero = theory_par.iter().filter(|v| **v != T::zero()).count();
    if nonzero * 2 <= theory_par.len() {
        return Err(Error::Degenerate(
            "theory series is zero on half or more of the grid".into(),
        ));
    }
    let mut mm = T::zero();
    let mut mt = T::zero();
    for (&m, &t) in measured_par.iter().zip(theory_par) {
        mm += m * m;
        mt += m * t;
    }
    if mm == T::zero() {
        return Err(Error::Degenerate("measured series is identically zero".into()));
    }
    let a = (mt / mm).max(T::min_positive_value()).min(T::one());
    AsymmetryCalibration::new(a)
}
