//! Scalar abstraction: the numeric kernels are generic over `f32`/`f64`.
//!
//! Simulation code instantiates everything at `f64` (see the aliases in the
//! crate root); the generic layer exists so the kernels can be checked at
//! single precision and reused elsewhere.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssign, ToPrimitive};

/// Floating-point scalar usable by the dense kernels.
pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + NumAssign + Sum<Self> + Debug + Display + Default + Send + Sync + 'static
{
    /// Conversion from an `f64` constant; panics only for non-representable
    /// values, which the callers never produce.
    fn from_f(x: f64) -> Self {
        <Self as FromPrimitive>::from_f64(x).expect("f64 constant not representable")
    }

    /// Widening conversion to `f64`.
    fn to_f(self) -> f64 {
        <Self as ToPrimitive>::to_f64(&self).expect("scalar not representable as f64")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
