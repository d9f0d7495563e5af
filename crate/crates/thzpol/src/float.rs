//! Scalar abstraction for the numeric core.
//!
//! Everything numerical in this crate is generic over [`Real`], a small
//! trait alias over `num-traits` satisfied by `f32` and `f64`. Concrete
//! type aliases for the common `f64` instantiation live at the crate root.

use std::fmt::{Debug, Display, LowerExp};

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// Floating-point scalar used throughout the crate: `f32` or `f64`.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + Debug
    + Display
    + LowerExp
    + Send
    + Sync
    + 'static
{
    /// Vacuum speed of light in m/s (exact in SI; rounds to nearest in `f32`).
    fn speed_of_light() -> Self {
        Self::from_f64(SPEED_OF_LIGHT).unwrap()
    }

    /// Shorthand for lossless-ish construction from an `f64` literal.
    fn lit(v: f64) -> Self {
        Self::from_f64(v).unwrap()
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Vacuum speed of light, m/s. Fixed exactly by the SI definition.
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Wraps an angle to the half-open interval `(-pi, pi]`.
pub fn wrap_phase<T: Real>(angle: T) -> T {
    let two_pi = T::TAU();
    let mut a = angle % two_pi;
    if a <= -T::PI() {
        a += two_pi;
    } else if a > T::PI() {
        a -= two_pi;
    }
    a
}
