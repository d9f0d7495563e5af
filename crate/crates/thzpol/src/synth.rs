//! Coherent-detector current synthesis.
//!
//! Builds the real detector current traces recorded when the waveguide's
//! E- or H-plane is aligned with the mirror plane of incidence. Each mode
//! contributes two fringe terms, one per polarization channel: the
//! parallel channel is weighted by `A * Re[r_par]` and carries the
//! slab-induced differential phase on top of the mode's own phase offset,
//! the perpendicular channel by `Re[r_perp]`. The sum is scaled by the
//! coupling constant and the Lorentzian detector roll-off.
//!
//! The differential phase applied here is the reduced (mod pi) phase
//! difference `atan(Im/Re)_par - atan(Im/Re)_perp`: the sign flip between
//! the two channels is already carried by the signs of `Re[r]`, so only
//! the finite-thickness residual is added to the cosine argument. Using
//! the full wrapped argument difference would count the sign flip twice
//! and destroy the partial cancellation the opposite signs produce.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::float::Real;
use crate::fresnel::{slab_reflection, AsymmetryCalibration, DielectricSlab};
use crate::waveguide::ModeId;

/// Anything that yields complex parallel/perpendicular reflection
/// coefficients per frequency.
pub trait ReflectionModel<T> {
    fn reflection(&self, f: T) -> (Complex<T>, Complex<T>);
}

impl<T: Real> ReflectionModel<T> for DielectricSlab<T> {
    fn reflection(&self, f: T) -> (Complex<T>, Complex<T>) {
        let r = slab_reflection(self, f).expect("positive frequency");
        (r.r_par, r.r_perp)
    }
}

/// Frequency-independent reflection coefficients; handy for reductions
/// and tests (`r_par = 1, r_perp = 0` collapses a trace to one cosine).
#[derive(Debug, Clone, Copy)]
pub struct ConstantReflection<T> {
    pub r_par: Complex<T>,
    pub r_perp: Complex<T>,
}

impl<T: Real> ReflectionModel<T> for ConstantReflection<T> {
    fn reflection(&self, _f: T) -> (Complex<T>, Complex<T>) {
        (self.r_par, self.r_perp)
    }
}

/// Field amplitudes and phases of one mode feeding the detector model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeEntry<T> {
    pub mode: ModeId,
    /// E-plane field amplitude (arbitrary linear units, >= 0).
    pub amp_e: T,
    /// H-plane field amplitude (same units, >= 0).
    pub amp_h: T,
    /// Phase offset of the parallel-channel term (rad).
    pub phase_par: T,
    /// Phase offset of the perpendicular-channel term (rad).
    pub phase_perp: T,
    /// Current correction coefficients C1..C4, each in [0, 1].
    pub corr: [T; 4],
}

impl<T: Real> ModeEntry<T> {
    /// Entry with the given amplitudes, zero phases and unit corrections.
    pub fn new(mode: ModeId, amp_e: T, amp_h: T) -> Self {
        Self {
            mode,
            amp_e,
            amp_h,
            phase_par: T::zero(),
            phase_perp: T::zero(),
            corr: [T::one(); 4],
        }
    }
}

/// Per-mode amplitude table, at most six entries (l = 0..5).
///
/// Entry 0 is the single-mode reference and must keep unit correction
/// coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct ModeAmplitudeTable<T> {
    entries: Vec<ModeEntry<T>>,
}

impl<T: Real> ModeAmplitudeTable<T> {
    pub fn new(entries: Vec<ModeEntry<T>>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidParameter("mode table must not be empty".into()));
        }
        if entries.len() > 6 {
            return Err(Error::InvalidParameter(format!(
                "mode table supports at most 6 entries, got {}",
                entries.len()
            )));
        }
        for (l, e) in entries.iter().enumerate() {
            if !(e.amp_e >= T::zero() && e.amp_h >= T::zero()) {
                return Err(Error::InvalidParameter(format!(
                    "mode {l}: amplitudes must be non-negative"
                )));
            }
            if !(e.phase_par.is_finite() && e.phase_perp.is_finite()) {
                return Err(Error::InvalidParameter(format!("mode {l}: non-finite phase")));
            }
            for (i, c) in e.corr.iter().enumerate() {
                if !(*c >= T::zero() && *c <= T::one()) {
                    return Err(Error::InvalidParameter(format!(
                        "mode {l}: correction coefficient C{} must lie in [0, 1]",
                        i + 1
                    )));
                }
            }
        }
        if entries[0].corr.iter().any(|c| *c != T::one()) {
            return Err(Error::InvalidParameter(
                "entry 0 must keep unit correction coefficients".into(),
            ));
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[ModeEntry<T>] {
        &self.entries
    }

    /// Sum of `amp_e + amp_h` over all modes; bounds the trace magnitude
    /// together with the coupling and the roll-off envelope.
    pub fn total_amplitude(&self) -> T {
        self.entries
            .iter()
            .fold(T::zero(), |acc, e| acc + e.amp_e + e.amp_h)
    }
}

/// Split rule for [`mode_table_from_polarization`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModePopulation {
    /// Only the fundamental TE10 entry.
    SingleMode,
    /// TE10, TE20, TE01, TE11, TM11 in cutoff order.
    Multimode,
}

/// Builds an amplitude table from a cross-polarization power fraction.
///
/// Single-mode: `amp_h / amp_e = sqrt(p / (1 - p))` with unit total
/// power. Multimode: five entries of equal power `1/5` each; TE10 keeps
/// the single-mode split, TE01 gets it with E and H swapped, the rest are
/// split evenly between the two channels.
pub fn mode_table_from_polarization<T: Real>(
    crosspol_power_fraction: T,
    population: ModePopulation,
) -> Result<ModeAmplitudeTable<T>> {
    let p = crosspol_power_fraction;
    if !(p >= T::zero() && p <= T::one()) {
        return Err(Error::InvalidParameter(format!(
            "cross-polarization power fraction must lie in [0, 1], got {p}"
        )));
    }
    let co = (T::one() - p).sqrt();
    let cross = p.sqrt();
    let table = match population {
        ModePopulation::SingleMode => {
            vec![ModeEntry::new(ModeId::te(1, 0)?, co, cross)]
        }
        ModePopulation::Multimode => {
            let w = T::lit(0.2).sqrt(); // power 1/5 per mode
            let even = (T::lit(0.5)).sqrt() * w;
            vec![
                ModeEntry::new(ModeId::te(1, 0)?, co * w, cross * w),
                ModeEntry::new(ModeId::te(2, 0)?, even, even),
                ModeEntry::new(ModeId::te(0, 1)?, cross * w, co * w),
                ModeEntry::new(ModeId::te(1, 1)?, even, even),
                ModeEntry::new(ModeId::tm(1, 1)?, even, even),
            ]
        }
    };
    ModeAmplitudeTable::new(table)
}

/// Optical delay, coupling, detector asymmetry and roll-off of the
/// interferometric detection path.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterferometerConfig<T> {
    /// Optical delay length between the two arms (m), nonzero.
    pub delta_l: T,
    /// Coupling constant between free-space field and detector (m/Ohm).
    pub coupling: T,
    /// Parallel-channel coupling asymmetry.
    pub asymmetry: AsymmetryCalibration<T>,
    /// Detector roll-off time constant (s), >= 0.
    pub rolloff_tau: T,
    /// Roll-off envelope scale at DC.
    pub rolloff_a0: T,
}

impl<T: Real> InterferometerConfig<T> {
    pub fn new(
        delta_l: T,
        coupling: T,
        asymmetry: AsymmetryCalibration<T>,
        rolloff_tau: T,
        rolloff_a0: T,
    ) -> Result<Self> {
        if !delta_l.is_finite() || delta_l == T::zero() {
            return Err(Error::InvalidParameter(
                "delay length must be nonzero for meaningful fringes".into(),
            ));
        }
        if !(coupling > T::zero()) {
            return Err(Error::InvalidParameter(format!(
                "coupling must be positive, got {coupling}"
            )));
        }
        if !(rolloff_tau >= T::zero()) {
            return Err(Error::InvalidParameter(format!(
                "roll-off time constant must be non-negative, got {rolloff_tau}"
            )));
        }
        if !(rolloff_a0 > T::zero()) {
            return Err(Error::InvalidParameter(format!(
                "roll-off scale must be positive, got {rolloff_a0}"
            )));
        }
        Ok(Self { delta_l, coupling, asymmetry, rolloff_tau, rolloff_a0 })
    }

    /// Defaults: 0.15 m delay (about 2 GHz fringes), 1e-12 m/Ohm coupling,
    /// A = 0.85, 500 fs roll-off, unit envelope scale.
    pub fn standard() -> Self {
        Self {
            delta_l: T::lit(0.15),
            coupling: T::lit(1e-12),
            asymmetry: AsymmetryCalibration::standard(),
            rolloff_tau: T::lit(500e-15),
            rolloff_a0: T::one(),
        }
    }
}

/// Uniform frequency grid `start, start + step, ...` with `len` samples.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrequencyGrid<T> {
    start: T,
    step: T,
    len: usize,
}

impl<T: Real> FrequencyGrid<T> {
    pub fn new(start: T, step: T, len: usize) -> Result<Self> {
        if !(start > T::zero()) || !(step > T::zero()) {
            return Err(Error::InvalidParameter(format!(
                "grid needs positive start and step, got start = {start}, step = {step}"
            )));
        }
        if len < 2 {
            return Err(Error::InvalidParameter(format!(
                "grid needs at least 2 samples, got {len}"
            )));
        }
        Ok(Self { start, step, len })
    }

    /// Inclusive span `[start, stop]` sampled every `step`; the last
    /// sample is the largest `start + k step <= stop + step/2`.
    pub fn span(start: T, stop: T, step: T) -> Result<Self> {
        if !(stop > start) {
            return Err(Error::InvalidParameter(format!(
                "grid span needs stop > start, got [{start}, {stop}]"
            )));
        }
        let n = ((stop - start) / step + T::lit(0.5))
            .floor()
            .to_usize()
            .ok_or_else(|| Error::InvalidParameter("grid span overflows".into()))?;
        Self::new(start, step, n + 1)
    }

    pub fn start(&self) -> T {
        self.start
    }

    pub fn step(&self) -> T {
        self.step
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn frequencies(&self) -> Vec<T> {
        (0..self.len)
            .map(|i| self.start + self.step * T::from_usize(i).unwrap())
            .collect()
    }
}

/// Alignment of the waveguide planes with the mirror plane of incidence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// E-plane parallel to the plane of incidence.
    EParallel,
    /// H-plane parallel to the plane of incidence.
    HParallel,
}

impl std::fmt::Display for Orientation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Orientation::EParallel => write!(f, "E_parallel_to_incidence"),
            Orientation::HParallel => write!(f, "H_parallel_to_incidence"),
        }
    }
}

/// Real sampled detector current versus frequency.
#[derive(Debug, Clone, PartialEq)]
pub struct DetectorTrace<T> {
    frequencies: Vec<T>,
    currents: Vec<T>,
    orientation: Orientation,
}

impl<T: Real> DetectorTrace<T> {
    /// Validates a strictly increasing uniform grid and finite samples.
    pub fn new(frequencies: Vec<T>, currents: Vec<T>, orientation: Orientation) -> Result<Self> {
        if frequencies.len() != currents.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} frequencies vs {} currents",
                frequencies.len(),
                currents.len()
            )));
        }
        if frequencies.len() < 2 {
            return Err(Error::InvalidParameter("trace needs at least 2 samples".into()));
        }
        let step = frequencies[1] - frequencies[0];
        if !(step > T::zero()) {
            return Err(Error::InvalidParameter("grid must be strictly increasing".into()));
        }
        let tol = step * T::lit(1e-6);
        for w in frequencies.windows(2) {
            if ((w[1] - w[0]) - step).abs() > tol {
                return Err(Error::InvalidParameter(format!(
                    "grid not uniform near {} (step {} vs {})",
                    w[0],
                    w[1] - w[0],
                    step
                )));
            }
        }
        if currents.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidParameter("non-finite current sample".into()));
        }
        Ok(Self { frequencies, currents, orientation })
    }

    pub fn frequencies(&self) -> &[T] {
        &self.frequencies
    }

    pub fn currents(&self) -> &[T] {
        &self.currents
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn step(&self) -> T {
        self.frequencies[1] - self.frequencies[0]
    }

    pub fn len(&self) -> usize {
        self.frequencies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.frequencies.is_empty()
    }
}

/// Lorentzian roll-off `a0 / (1 + (2 pi f tau)^2)`.
pub fn lorentzian_envelope<T: Real>(f: T, tau: T, a0: T) -> T {
    let x = T::TAU() * f * tau;
    a0 / (T::one() + x * x)
}

/// Reduced (mod pi) phase of a complex coefficient: `atan(Im/Re)`, the
/// residual beyond the sign its real part already carries.
fn reduced_phase<T: Real>(c: Complex<T>) -> T {
    if c.re == T::zero() && c.im == T::zero() {
        T::zero()
    } else {
        (c.im / c.re).atan()
    }
}

/// Synthesizes the detector current trace for one waveguide orientation.
///
/// Per mode l, orientation E:
/// `A Re[r_par] amp_e cos(2 pi f dL/c0 + phase_par + dphi) C1
///  + Re[r_perp] amp_h cos(2 pi f dL/c0 + phase_perp) C2`,
/// orientation H swaps the roles:
/// `Re[r_perp] amp_e cos(... + phase_par) C3
///  + A Re[r_par] amp_h cos(... + phase_perp + dphi) C4`,
/// summed over modes, scaled by the coupling constant and the Lorentzian
/// envelope. `dphi` is the reduced differential phase of the two
/// reflection coefficients at that frequency.
pub fn synthesize_trace<T: Real, R: ReflectionModel<T>>(
    table: &ModeAmplitudeTable<T>,
    cfg: &InterferometerConfig<T>,
    reflector: &R,
    grid: &FrequencyGrid<T>,
    orientation: Orientation,
) -> Result<DetectorTrace<T>> {
    let frequencies = grid.frequencies();
    let a = cfg.asymmetry.scale();
    let delay = T::TAU() * cfg.delta_l / T::speed_of_light();

    let currents: Vec<T> = frequencies
        .iter()
        .map(|&f| {
            let (r_par, r_perp) = reflector.reflection(f);
            let dphi = reduced_phase(r_par) - reduced_phase(r_perp);
            let theta = delay * f;
            let mut sum = T::zero();
            for e in table.entries() {
                sum += match orientation {
                    Orientation::EParallel => {
                        a * r_par.re * e.amp_e * (theta + e.phase_par + dphi).cos() * e.corr[0]
                            + r_perp.re * e.amp_h * (theta + e.phase_perp).cos() * e.corr[1]
                    }
                    Orientation::HParallel => {
                        r_perp.re * e.amp_e * (theta + e.phase_par).cos() * e.corr[2]
                            + a * r_par.re
                                * e.amp_h
                                * (theta + e.phase_perp + dphi).cos()
                                * e.corr[3]
                    }
                };
            }
            cfg.coupling * sum * lorentzian_envelope(f, cfg.rolloff_tau, cfg.rolloff_a0)
        })
        .collect();

    DetectorTrace::new(frequencies, currents, orientation)
}
