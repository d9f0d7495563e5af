//! Analytic rectangular-waveguide mode catalog.
//!
//! Closed-form TE/TM cutoffs and dispersion for an ideal air-filled
//! rectangular guide, mode enumeration ordered by cutoff, and normalized
//! transverse field sampling. All quantities are SI (meters, hertz,
//! rad/m). Fields are the separable sin/cos solutions of the reduced wave
//! equation with conducting-wall boundary conditions, normalized to unit
//! peak transverse |E| over the cross-section.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::float::Real;

/// Air-filled rectangular waveguide cross-section.
///
/// `a` is the broad-wall width, `b` the narrow-wall height (meters),
/// with `a >= b > 0` so that TE10 is the fundamental mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RectangularGuide<T> {
    a: T,
    b: T,
}

impl<T: Real> RectangularGuide<T> {
    pub fn new(a: T, b: T) -> Result<Self> {
        if !(a.is_finite() && b.is_finite()) || a <= T::zero() || b <= T::zero() {
            return Err(Error::InvalidParameter(format!(
                "guide dimensions must be positive, got a = {a}, b = {b}"
            )));
        }
        if a < b {
            return Err(Error::InvalidParameter(format!(
                "broad wall must not be smaller than narrow wall, got a = {a} < b = {b}"
            )));
        }
        Ok(Self { a, b })
    }

    /// Broad-wall width (m).
    pub fn a(&self) -> T {
        self.a
    }

    /// Narrow-wall height (m).
    pub fn b(&self) -> T {
        self.b
    }

    /// The 800 um x 400 um full-height guide the toolkit defaults model.
    pub fn standard() -> Self {
        Self { a: T::lit(800e-6), b: T::lit(400e-6) }
    }
}

/// Mode family: transverse-electric (`E_z = 0`) or transverse-magnetic
/// (`H_z = 0`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ModeFamily {
    Te,
    Tm,
}

impl std::fmt::Display for ModeFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ModeFamily::Te => write!(f, "TE"),
            ModeFamily::Tm => write!(f, "TM"),
        }
    }
}

/// A TE or TM mode index `(m, n)`: half-period counts along the broad and
/// narrow walls.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModeId {
    family: ModeFamily,
    m: u32,
    n: u32,
}

impl ModeId {
    pub fn new(family: ModeFamily, m: u32, n: u32) -> Result<Self> {
        match family {
            ModeFamily::Te if m == 0 && n == 0 => Err(Error::InvalidParameter(
                "TE(0,0) does not exist".into(),
            )),
            ModeFamily::Tm if m == 0 || n == 0 => Err(Error::InvalidParameter(format!(
                "TM({m},{n}) does not exist; TM modes need m >= 1 and n >= 1"
            ))),
            _ => Ok(Self { family, m, n }),
        }
    }

    pub fn te(m: u32, n: u32) -> Result<Self> {
        Self::new(ModeFamily::Te, m, n)
    }

    pub fn tm(m: u32, n: u32) -> Result<Self> {
        Self::new(ModeFamily::Tm, m, n)
    }

    pub fn family(&self) -> ModeFamily {
        self.family
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Tie-break key for modes with equal cutoff: TE before TM, then
    /// lexicographic (m, n).
    fn order_key(&self) -> (u8, u32, u32) {
        let fam = match self.family {
            ModeFamily::Te => 0,
            ModeFamily::Tm => 1,
        };
        (fam, self.m, self.n)
    }
}

impl std::fmt::Display for ModeId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{}{}", self.family, self.m, self.n)
    }
}

/// Dispersion data for one mode at one query frequency.
///
/// When `evanescent` is false, `beta` is the real propagation constant;
/// when true, `beta` holds the attenuation magnitude `sqrt(k_c^2 - k^2)`
/// of the decaying solution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeDispersion<T> {
    pub mode: ModeId,
    /// Cutoff frequency (Hz).
    pub f_c: T,
    /// Cutoff wavenumber (rad/m).
    pub k_c: T,
    /// Propagation constant magnitude (rad/m), see `evanescent`.
    pub beta: T,
    pub evanescent: bool,
}

/// Normalized transverse fields at one point of the cross-section.
///
/// `e_x`, `e_y` are the transverse electric components, scaled so the peak
/// transverse |E| over the cross-section is 1. `longitudinal` is `h_z` for
/// TE modes and `e_z` for TM modes, scaled to unit peak of its own.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransverseFieldSample<T> {
    pub x: T,
    pub y: T,
    pub e_x: Complex<T>,
    pub e_y: Complex<T>,
    pub longitudinal: Complex<T>,
}

impl<T: Real> TransverseFieldSample<T> {
    /// Magnitude of the transverse electric field.
    pub fn e_magnitude(&self) -> T {
        (self.e_x.norm_sqr() + self.e_y.norm_sqr()).sqrt()
    }
}

/// Cutoff wavenumber `k_c = sqrt((m pi / a)^2 + (n pi / b)^2)` (rad/m).
pub fn cutoff_wavenumber<T: Real>(guide: &RectangularGuide<T>, mode: ModeId) -> T {
    let kx = T::from_u32(mode.m).unwrap() * T::PI() / guide.a;
    let ky = T::from_u32(mode.n).unwrap() * T::PI() / guide.b;
    (kx * kx + ky * ky).sqrt()
}

/// Cutoff frequency `f_c = c0 k_c / (2 pi)` (Hz).
pub fn cutoff_frequency<T: Real>(guide: &RectangularGuide<T>, mode: ModeId) -> T {
    T::speed_of_light() * cutoff_wavenumber(guide, mode) / T::TAU()
}

/// Dispersion at frequency `f`: `beta = sqrt(k^2 - k_c^2)` above cutoff,
/// evanescent decay magnitude at or below it.
pub fn propagation_constant<T: Real>(
    guide: &RectangularGuide<T>,
    mode: ModeId,
    f: T,
) -> Result<ModeDispersion<T>> {
    if !(f > T::zero()) {
        return Err(Error::Domain(format!("frequency must be positive, got {f}")));
    }
    let k_c = cutoff_wavenumber(guide, mode);
    let f_c = T::speed_of_light() * k_c / T::TAU();
    let k = T::TAU() * f / T::speed_of_light();
    let diff = k * k - k_c * k_c;
    let (beta, evanescent) = if f > f_c {
        (diff.sqrt(), false)
    } else {
        ((-diff).sqrt(), true)
    };
    Ok(ModeDispersion { mode, f_c, k_c, beta, evanescent })
}

/// All modes propagating at frequency `f` (`f_c < f`), sorted ascending by
/// cutoff with ties broken TE before TM, then lexicographic (m, n).
pub fn propagating_modes<T: Real>(guide: &RectangularGuide<T>, f: T) -> Result<Vec<ModeDispersion<T>>> {
    if !(f > T::zero()) {
        return Err(Error::Domain(format!("frequency must be positive, got {f}")));
    }
    // f_c(m, n) >= max(m c0/2a, n c0/2b), so indices beyond these bounds
    // cannot propagate.
    let two_over_c = T::lit(2.0) / T::speed_of_light();
    let m_max = (f * guide.a * two_over_c).to_u32().unwrap_or(0);
    let n_max = (f * guide.b * two_over_c).to_u32().unwrap_or(0);

    let mut modes = Vec::new();
    for m in 0..=m_max {
        for n in 0..=n_max {
            for fam in [ModeFamily::Te, ModeFamily::Tm] {
                let Ok(mode) = ModeId::new(fam, m, n) else { continue };
                let disp = propagation_constant(guide, mode, f)?;
                if !disp.evanescent {
                    modes.push(disp);
                }
            }
        }
    }
    modes.sort_by(|x, y| {
        x.f_c
            .partial_cmp(&y.f_c)
            .unwrap()
            .then_with(|| x.mode.order_key().cmp(&y.mode.order_key()))
    });
    Ok(modes)
}

/// Number of propagating modes at `f`; a non-decreasing step function of
/// frequency with steps exactly at the cutoffs.
pub fn mode_count<T: Real>(guide: &RectangularGuide<T>, f: T) -> Result<usize> {
    Ok(propagating_modes(guide, f)?.len())
}

/// Normalized transverse fields of `mode` at `(x, y)` in the cross-section.
///
/// TE(m,n): `h_z = cos(k_x x) cos(k_y y)`, `e_x ~ k_y cos(k_x x) sin(k_y y)`,
/// `e_y ~ -k_x sin(k_x x) cos(k_y y)`. TM(m,n): `e_z = sin(k_x x) sin(k_y y)`,
/// `e_x ~ -k_x cos(k_x x) sin(k_y y)`, `e_y ~ -k_y sin(k_x x) cos(k_y y)`.
/// Transverse components are divided by `max(k_x, k_y)`, which is the exact
/// peak of |E| over the cross-section for these separable solutions.
pub fn transverse_field<T: Real>(
    guide: &RectangularGuide<T>,
    mode: ModeId,
    x: T,
    y: T,
) -> Result<TransverseFieldSample<T>> {
    if x < T::zero() || x > guide.a || y < T::zero() || y > guide.b {
        return Err(Error::Domain(format!(
            "point ({x}, {y}) outside cross-section [0, {}] x [0, {}]",
            guide.a, guide.b
        )));
    }
    let kx = T::from_u32(mode.m).unwrap() * T::PI() / guide.a;
    let ky = T::from_u32(mode.n).unwrap() * T::PI() / guide.b;
    let norm = kx.max(ky);

    let (cx, sx) = ((kx * x).cos(), (kx * x).sin());
    let (cy, sy) = ((ky * y).cos(), (ky * y).sin());

    let (ex, ey, lz) = match mode.family {
        ModeFamily::Te => (ky * cx * sy / norm, -kx * sx * cy / norm, cx * cy),
        ModeFamily::Tm => (-kx * cx * sy / norm, -ky * sx * cy / norm, sx * sy),
    };
    Ok(TransverseFieldSample {
        x,
        y,
        e_x: Complex::new(ex, T::zero()),
        e_y: Complex::new(ey, T::zero()),
        longitudinal: Complex::new(lz, T::zero()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    const C0: f64 = 299_792_458.0;

    fn guide() -> RectangularGuide<f64> {
        RectangularGuide::new(800e-6, 400e-6).unwrap()
    }

    #[test]
    fn guide_invariants() {
        assert!(RectangularGuide::new(0.0, 1e-4).is_err());
        assert!(RectangularGuide::new(1e-4, -1.0).is_err());
        assert!(RectangularGuide::new(1e-4, 2e-4).is_err()); // a < b
        assert_eq!(RectangularGuide::<f64>::standard(), guide());
    }

    #[test]
    fn mode_id_validity() {
        assert!(ModeId::te(0, 0).is_err());
        assert!(ModeId::tm(0, 1).is_err());
        assert!(ModeId::tm(1, 0).is_err());
        assert!(ModeId::te(1, 0).is_ok());
        assert!(ModeId::tm(1, 1).is_ok());
        assert_eq!(ModeId::te(2, 0).unwrap().to_string(), "TE20");
    }

    // Cutoffs against the analytic closed forms evaluated independently.
    #[test]
    fn cutoff_te10_is_c0_over_2a() {
        let f = cutoff_frequency(&guide(), ModeId::te(1, 0).unwrap());
        assert_relative_eq!(f, C0 / (2.0 * 800e-6), max_relative = 1e-14);
        // 187.37 GHz to the spec'd 0.01 GHz
        assert!((f / 1e9 - 187.37).abs() < 0.01);
    }

    #[test]
    fn cutoff_te20_te01_coincide_for_a_eq_2b() {
        let g = guide();
        let f20 = cutoff_frequency(&g, ModeId::te(2, 0).unwrap());
        let f01 = cutoff_frequency(&g, ModeId::te(0, 1).unwrap());
        assert_relative_eq!(f20, C0 / 800e-6, max_relative = 1e-14);
        assert_eq!(f20, f01);
    }

    #[test]
    fn tm11_equals_te11_cutoff() {
        let g = RectangularGuide::new(1.3e-3, 0.5e-3).unwrap();
        assert_eq!(
            cutoff_frequency(&g, ModeId::te(1, 1).unwrap()),
            cutoff_frequency(&g, ModeId::tm(1, 1).unwrap())
        );
    }

    #[test]
    fn cutoff_ordering_for_a_eq_2b() {
        let g = guide();
        let f10 = cutoff_frequency(&g, ModeId::te(1, 0).unwrap());
        let f20 = cutoff_frequency(&g, ModeId::te(2, 0).unwrap());
        let f01 = cutoff_frequency(&g, ModeId::te(0, 1).unwrap());
        let f11 = cutoff_frequency(&g, ModeId::te(1, 1).unwrap());
        let g11 = cutoff_frequency(&g, ModeId::tm(1, 1).unwrap());
        assert!(f10 < f20);
        assert_eq!(f20, f01);
        assert!(f01 < f11);
        assert_eq!(f11, g11);
    }

    #[test]
    fn cutoff_monotone_in_indices() {
        let g = guide();
        for m in 1..5u32 {
            for n in 0..5u32 {
                let f1 = cutoff_frequency(&g, ModeId::te(m, n).unwrap());
                let f2 = cutoff_frequency(&g, ModeId::te(m + 1, n).unwrap());
                let f3 = cutoff_frequency(&g, ModeId::te(m, n + 1).unwrap());
                assert!(f2 > f1 && f3 > f1);
            }
        }
    }

    #[test]
    fn beta_zero_at_cutoff() {
        let g = guide();
        let mode = ModeId::te(1, 0).unwrap();
        let fc = cutoff_frequency(&g, mode);
        let d = propagation_constant(&g, mode, fc).unwrap();
        assert_eq!(d.beta, 0.0);
        assert!(d.evanescent); // beta real iff f > f_c
    }

    #[test]
    fn beta_analytic_at_270ghz() {
        let g = guide();
        let mode = ModeId::te(1, 0).unwrap();
        let f = 270e9;
        let d = propagation_constant(&g, mode, f).unwrap();
        let fc = C0 / (2.0 * 800e-6);
        let expected = 2.0 * std::f64::consts::PI * (f * f - fc * fc).sqrt() / C0;
        assert!(!d.evanescent);
        assert_relative_eq!(d.beta, expected, max_relative = 1e-12);
    }

    #[test]
    fn evanescent_below_cutoff() {
        let g = guide();
        let d = propagation_constant(&g, ModeId::te(1, 0).unwrap(), 100e9).unwrap();
        assert!(d.evanescent);
        assert!(d.beta > 0.0); // imaginary magnitude reported
    }

    #[test]
    fn five_modes_at_480ghz() {
        let modes = propagating_modes(&guide(), 480e9).unwrap();
        let labels: Vec<String> = modes.iter().map(|d| d.mode.to_string()).collect();
        assert_eq!(labels, ["TE10", "TE20", "TE01", "TE11", "TM11"]);
    }

    #[test]
    fn single_mode_at_270ghz() {
        let modes = propagating_modes(&guide(), 270e9).unwrap();
        assert_eq!(modes.len(), 1);
        assert_eq!(modes[0].mode, ModeId::te(1, 0).unwrap());
    }

    #[test]
    fn no_modes_at_100ghz() {
        assert!(propagating_modes(&guide(), 100e9).unwrap().is_empty());
    }

    #[test]
    fn mode_count_steps_at_cutoffs() {
        let g = guide();
        let fc10 = cutoff_frequency(&g, ModeId::te(1, 0).unwrap());
        let fc20 = cutoff_frequency(&g, ModeId::te(2, 0).unwrap());
        let eps = 1e3; // 1 kHz either side
        assert_eq!(mode_count(&g, fc10 - eps).unwrap(), 0);
        assert_eq!(mode_count(&g, fc10 + eps).unwrap(), 1);
        assert_eq!(mode_count(&g, fc20 - eps).unwrap(), 1);
        assert_eq!(mode_count(&g, fc20 + eps).unwrap(), 3); // TE20 and TE01 together
        // non-decreasing along a sweep
        let mut last = 0;
        let mut f = 150e9;
        while f < 600e9 {
            let c = mode_count(&g, f).unwrap();
            assert!(c >= last);
            last = c;
            f += 5e9;
        }
    }

    #[test]
    fn te10_field_peak_and_walls() {
        let g = guide();
        let mode = ModeId::te(1, 0).unwrap();
        let mid = transverse_field(&g, mode, g.a() / 2.0, 1e-4).unwrap();
        assert_relative_eq!(mid.e_magnitude(), 1.0, max_relative = 1e-12);
        let wall = transverse_field(&g, mode, 0.0, 2e-4).unwrap();
        assert!(wall.e_magnitude() < 1e-12);
    }

    #[test]
    fn te20_node_and_sign_flip_across_center() {
        let g = guide();
        let mode = ModeId::te(2, 0).unwrap();
        let center = transverse_field(&g, mode, g.a() / 2.0, 1e-4).unwrap();
        assert!(center.e_magnitude() < 1e-9);
        let left = transverse_field(&g, mode, g.a() / 4.0, 1e-4).unwrap();
        let right = transverse_field(&g, mode, 3.0 * g.a() / 4.0, 1e-4).unwrap();
        assert!(left.e_y.re * right.e_y.re < 0.0);
        assert_relative_eq!(left.e_y.re.abs(), right.e_y.re.abs(), max_relative = 1e-12);
    }

    #[test]
    fn field_outside_cross_section_is_domain_error() {
        let g = guide();
        assert!(transverse_field(&g, ModeId::te(1, 0).unwrap(), -1e-6, 0.0).is_err());
        assert!(transverse_field(&g, ModeId::te(1, 0).unwrap(), 0.0, 5e-4).is_err());
    }

    /// Tangential E on all four walls, all implemented modes.
    #[test]
    fn boundary_conditions_all_modes() {
        let g = guide();
        let modes = [
            ModeId::te(1, 0).unwrap(),
            ModeId::te(2, 0).unwrap(),
            ModeId::te(0, 1).unwrap(),
            ModeId::te(1, 1).unwrap(),
            ModeId::tm(1, 1).unwrap(),
            ModeId::tm(2, 1).unwrap(),
            ModeId::te(3, 2).unwrap(),
        ];
        let steps = 33;
        for mode in modes {
            for i in 0..=steps {
                let x = g.a() * i as f64 / steps as f64;
                let y = g.b() * i as f64 / steps as f64;
                // walls y = 0, b: tangential components are e_x and e_z
                for wy in [0.0, g.b()] {
                    let s = transverse_field(&g, mode, x, wy).unwrap();
                    assert!(s.e_x.norm() < 1e-12, "{mode} e_x at y-wall");
                    if mode.family() == ModeFamily::Tm {
                        assert!(s.longitudinal.norm() < 1e-12, "{mode} e_z at y-wall");
                    }
                }
                // walls x = 0, a: tangential components are e_y and e_z
                for wx in [0.0, g.a()] {
                    let s = transverse_field(&g, mode, wx, y).unwrap();
                    assert!(s.e_y.norm() < 1e-12, "{mode} e_y at x-wall");
                    if mode.family() == ModeFamily::Tm {
                        assert!(s.longitudinal.norm() < 1e-12, "{mode} e_z at x-wall");
                    }
                }
            }
        }
    }

    /// The longitudinal profile satisfies the reduced wave equation:
    /// a five-point discrete Laplacian plus k_c^2 times the field stays
    /// below 1e-6 of k_c^2 at interior points, with the stencil step small
    /// enough that truncation and cancellation are both far under the
    /// tolerance.
    #[test]
    fn helmholtz_residual_small() {
        let g = guide();
        let modes = [
            ModeId::te(1, 0).unwrap(),
            ModeId::te(2, 0).unwrap(),
            ModeId::te(0, 1).unwrap(),
            ModeId::te(1, 1).unwrap(),
            ModeId::tm(1, 1).unwrap(),
            ModeId::tm(2, 2).unwrap(),
        ];
        for mode in modes {
            let k_c = cutoff_wavenumber(&g, mode);
            let h = 2e-4 / k_c;
            let lz = |x: f64, y: f64| {
                transverse_field(&g, mode, x, y).unwrap().longitudinal.re
            };
            let n = 20;
            for i in 1..n {
                for j in 1..n {
                    let x = g.a() * i as f64 / n as f64;
                    let y = g.b() * j as f64 / n as f64;
                    let lap = (lz(x + h, y) + lz(x - h, y) + lz(x, y + h) + lz(x, y - h)
                        - 4.0 * lz(x, y))
                        / (h * h);
                    let residual = (lap + k_c * k_c * lz(x, y)).abs() / (k_c * k_c);
                    assert!(residual < 1e-6, "{mode} residual {residual} at ({i},{j})");
                }
            }
        }
    }

    proptest! {
        /// Dispersion identity k^2 = k_c^2 + beta^2 for random modes and
        /// frequencies, relative 1e-12.
        #[test]
        fn dispersion_identity(
            m in 0u32..5,
            n in 0u32..5,
            te in any::<bool>(),
            f_ghz in 1.0f64..2000.0,
        ) {
            let g = guide();
            let mode = if te { ModeId::te(m, n) } else { ModeId::tm(m, n) };
            prop_assume!(mode.is_ok());
            let mode = mode.unwrap();
            let f = f_ghz * 1e9;
            let d = propagation_constant(&g, mode, f).unwrap();
            let k = std::f64::consts::TAU * f / C0;
            let lhs = k * k;
            let rhs = if d.evanescent {
                d.k_c * d.k_c - d.beta * d.beta
            } else {
                d.k_c * d.k_c + d.beta * d.beta
            };
            prop_assert!((lhs - rhs).abs() <= 1e-12 * lhs.max(rhs));
            prop_assert_eq!(d.evanescent, f <= d.f_c);
        }

        /// Transverse |E| never exceeds the unit normalization anywhere.
        #[test]
        fn normalization_bound(
            m in 0u32..4,
            n in 0u32..4,
            xf in 0.0f64..=1.0,
            yf in 0.0f64..=1.0,
        ) {
            let g = guide();
            let mode = ModeId::te(m, n);
            prop_assume!(mode.is_ok());
            let s = transverse_field(&g, mode.unwrap(), g.a() * xf, g.b() * yf).unwrap();
            prop_assert!(s.e_magnitude() <= 1.0 + 1e-12);
        }
    }
}
