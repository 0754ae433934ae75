//! Scalar abstraction: all numerics are generic over a real floating type.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::{Product, Sum};

use nalgebra::RealField;
use num_complex::Complex;
use num_traits::{Float, FromPrimitive, NumAssign, NumCast};

/// Real floating-point scalar backing every tensor, matrix and invariant.
///
/// Implemented for `f32` and `f64`. The `Float` side drives the elementwise
/// arithmetic, the `RealField` side unlocks the dense decompositions.
pub trait Real:
    Float
    + FromPrimitive
    + NumAssign
    + RealField
    + Default
    + Sum
    + Product
    + Display
    + LowerExp
    + Debug
    + Send
    + Sync
    + 'static
{
}

impl Real for f32 {}
impl Real for f64 {}

/// Complex scalar over the real type `T`.
pub type C<T> = Complex<T>;

/// Converts an `f64` constant (tolerances, amplitudes) into the scalar type.
#[inline]
pub fn real<T: Real>(x: f64) -> T {
    <T as NumCast>::from(x).expect("finite f64 constant")
}

/// Complex constant from a pair of `f64` literals.
#[inline]
pub fn complex<T: Real>(re: f64, im: f64) -> C<T> {
    Complex::new(real(re), real(im))
}

/// Integer power of a complex number, defined for negative exponents on
/// nonzero inputs.
pub fn cpowi<T: Real>(z: C<T>, n: i64) -> C<T> {
    let mut base = if n < 0 { Complex::new(T::one(), T::zero()) / z } else { z };
    let mut exp = n.unsigned_abs();
    let mut acc = Complex::new(T::one(), T::zero());
    while exp > 0 {
        if exp & 1 == 1 {
            acc *= base;
        }
        base *= base;
        exp >>= 1;
    }
    acc
}
