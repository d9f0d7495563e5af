//! Sub-terahertz waveguide polarimetry toolkit.
//!
//! The crate models an end-to-end coherent polarimetry chain for fields
//! launched from a rectangular waveguide through a diagonal-horn antenna:
//!
//! * [`waveguide`] — analytic TE/TM mode catalog: cutoffs, dispersion,
//!   mode counting and normalized transverse fields;
//! * [`fresnel`] — complex reflection of a finite dielectric slab at
//!   oblique incidence (the planar silicon mirror) and the detector
//!   asymmetry calibration;
//! * [`synth`] — synthesis of coherent-detector current traces from a
//!   per-mode amplitude table, the slab model, the optical delay and the
//!   detector roll-off;
//! * [`phase`] — analytic-signal construction, instantaneous phase,
//!   phase-phase correlator, band histograms and polarization-angle
//!   recovery;
//! * [`farfield`] — co/cross-polarization content integrals over far-field
//!   grids, synthetic grid generation and grid file I/O;
//! * [`herald`] — Monte Carlo coincidence counting for heralded
//!   detector-efficiency estimation;
//! * [`pipeline`] — the end-to-end frequency sweep producing per-band
//!   pos/neg ratios and polarization angles.
//!
//! All numeric modules are generic over the scalar type via [`Real`]
//! (`f32` or `f64`); the aliases below fix the common `f64` choice. The
//! herald simulator deals in event counts and uses `f64` directly.

pub mod error;
pub mod farfield;
pub mod float;
pub mod fresnel;
pub mod herald;
pub mod phase;
pub mod pipeline;
pub mod synth;
pub mod waveguide;

pub use error::{Error, Result};
pub use float::{wrap_phase, Real, SPEED_OF_LIGHT};

/// `f64` rectangular guide.
pub type Guide = waveguide::RectangularGuide<f64>;
/// `f64` mode dispersion record.
pub type Dispersion = waveguide::ModeDispersion<f64>;
/// `f64` dielectric slab.
pub type Slab = fresnel::DielectricSlab<f64>;
/// `f64` slab reflection sample.
pub type Reflection = fresnel::SlabReflection<f64>;
/// `f64` mode amplitude table.
pub type AmplitudeTable = synth::ModeAmplitudeTable<f64>;
/// `f64` interferometer configuration.
pub type Interferometer = synth::InterferometerConfig<f64>;
/// `f64` detector trace.
pub type Trace = synth::DetectorTrace<f64>;
/// `f64` analytic trace.
pub type Analytic = phase::AnalyticTrace<f64>;
/// `f64` far-field grid.
pub type Grid = farfield::FarFieldGrid<f64>;
/// `f64` pipeline configuration.
pub type PipelineConfig = pipeline::PipelineConfig<f64>;
