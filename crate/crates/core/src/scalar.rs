//! Scalar abstraction for signal values and robustness margins.
//!
//! All robustness arithmetic is min/max selection plus subtraction, so the
//! engine is generic over the float width. `f64` is the default everywhere
//! (see the crate-root aliases); `f32` works for memory-tight deployments.

use std::fmt::{Debug, Display};

/// Signal sample / robustness value type: `f32` or `f64`.
///
/// Timestamps, time bounds and proportions stay `f64` regardless of the
/// scalar; only signal values and robustness margins use `T`.
pub trait Scalar:
    num_traits::Float
    + num_traits::FromPrimitive
    + num_traits::ToPrimitive
    + Debug
    + Display
    + Default
    + Send
    + Sync
    + 'static
{
    /// Lossy conversion from `f64`, used for thresholds parsed from text
    /// and for count-space robustness computed in `f64`.
    fn from_f64_lossy(x: f64) -> Self {
        Self::from(x).expect("finite f64 converts to any float scalar")
    }

    /// Widening (for `f64`: identity) conversion used at serialization
    /// boundaries, which are always `f64`.
    fn as_f64(self) -> f64 {
        self.to_f64().expect("float scalar converts to f64")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
