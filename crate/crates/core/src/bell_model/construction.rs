use super::interval::IntervalSet;
use crate::error::{Error, Result};
use crate::qmcore::UnitVector3;
use crate::scalar::Scalar;

/// Hidden variable `ω ∈ [-1/2, 1/2]`, uniformly distributed.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct HiddenVariable<T>(T);

impl<T: Scalar> HiddenVariable<T> {
    pub fn new(omega: T) -> Result<Self> {
        if !(omega >= -T::half() && omega <= T::half()) {
            return Err(Error::ArgumentError(format!(
                "hidden variable {} outside [-1/2, 1/2]",
                omega.as_f64()
            )));
        }
        Ok(Self(omega))
    }

    #[inline]
    pub fn omega(self) -> T {
        self.0
    }
}

/// Dispersion-free value of the projector `P_m` in the pure state with Bloch
/// vector `s`:
///
/// `½[1 + sign(ω + ½|s·m|)·sign(s·m)]`, with `sign(0) = +1`.
pub fn bell_value<T: Scalar>(m: &UnitVector3<T>, s: &UnitVector3<T>, w: HiddenVariable<T>) -> u8 {
    let c = s.overlap(m);
    let product = (w.omega() + T::half() * c.abs()).sign_nonneg() * c.sign_nonneg();
    if product > T::zero() {
        1
    } else {
        0
    }
}

/// Exact set `{ω : bell_value(m, s, ω) = 1}`.
///
/// `[-½|c|, ½]` for `c = s·m ≥ 0`, and `[-½, -½|c|)` for `c < 0`; its measure is
/// `(1 + c)/2` in both cases.
pub fn bell_support<T: Scalar>(m: &UnitVector3<T>, s: &UnitVector3<T>) -> IntervalSet<T> {
    let c = s.overlap(m);
    let edge = -T::half() * c.abs();
    if c >= T::zero() {
        IntervalSet::interval(edge, T::half())
    } else {
        IntervalSet::interval(-T::half(), edge)
    }
}
