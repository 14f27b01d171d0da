use std::ops::Neg;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Unit-norm tolerance for [`UnitVector3::new`].
pub const UNIT_NORM_TOL: f64 = 1e-12;

/// A direction on the Bloch sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitVector3<T> {
    x: T,
    y: T,
    z: T,
}

impl<T: Scalar> UnitVector3<T> {
    /// Accepts `(x, y, z)` only if its norm is 1 within `1e-12`.
    pub fn new(x: T, y: T, z: T) -> Result<Self> {
        let norm = (x * x + y * y + z * z).sqrt();
        if !norm.is_finite() || (norm - T::one()).abs() > T::tol(UNIT_NORM_TOL) {
            return Err(Error::InvalidDirection { norm: norm.as_f64() });
        }
        Ok(Self { x, y, z })
    }

    /// Rescales `(x, y, z)` onto the sphere when its norm is within `window`
    /// of 1; anything further away is rejected.
    pub fn normalized_within(x: T, y: T, z: T, window: T) -> Result<Self> {
        let norm = (x * x + y * y + z * z).sqrt();
        if !norm.is_finite() || norm == T::zero() || (norm - T::one()).abs() > window {
            return Err(Error::InvalidDirection { norm: norm.as_f64() });
        }
        Ok(Self {
            x: x / norm,
            y: y / norm,
            z: z / norm,
        })
    }

    /// Projects an arbitrary non-zero vector onto the sphere.
    pub fn normalize(x: T, y: T, z: T) -> Result<Self> {
        let norm = (x * x + y * y + z * z).sqrt();
        if !norm.is_finite() || norm <= T::epsilon() {
            return Err(Error::InvalidDirection { norm: norm.as_f64() });
        }
        Ok(Self {
            x: x / norm,
            y: y / norm,
            z: z / norm,
        })
    }

    /// Polar angle `theta` from +z, azimuth `phi` from +x.
    pub fn from_spherical(theta: T, phi: T) -> Self {
        let (st, ct) = theta.sin_cos();
        let (sp, cp) = phi.sin_cos();
        Self {
            x: st * cp,
            y: st * sp,
            z: ct,
        }
    }

    pub fn unit_x() -> Self {
        Self {
            x: T::one(),
            y: T::zero(),
            z: T::zero(),
        }
    }

    pub fn unit_y() -> Self {
        Self {
            x: T::zero(),
            y: T::one(),
            z: T::zero(),
        }
    }

    pub fn unit_z() -> Self {
        Self {
            x: T::zero(),
            y: T::zero(),
            z: T::one(),
        }
    }

    #[inline]
    pub fn x(&self) -> T {
        self.x
    }

    #[inline]
    pub fn y(&self) -> T {
        self.y
    }

    #[inline]
    pub fn z(&self) -> T {
        self.z
    }

    pub fn to_array(&self) -> [T; 3] {
        [self.x, self.y, self.z]
    }

    #[inline]
    pub fn dot(&self, other: &Self) -> T {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    /// Dot product of two unit vectors, clamped to `[-1, 1]` and snapped to
    /// `±1` when rounding leaves it within a few ulps of the boundary.
    pub fn overlap(&self, other: &Self) -> T {
        let c = self.dot(other).max(-T::one()).min(T::one());
        let snap = T::epsilon() * T::lit(8.0);
        if T::one() - c.abs() <= snap {
            T::one().copysign(c)
        } else {
            c
        }
    }

    pub fn cross(&self, other: &Self) -> [T; 3] {
        [
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        ]
    }

    /// `|self × other|`, the sine of the angle between the directions.
    pub fn cross_norm(&self, other: &Self) -> T {
        let [a, b, c] = self.cross(other);
        (a * a + b * b + c * c).sqrt()
    }

    /// Polar and azimuthal angles of this direction.
    pub fn to_spherical(&self) -> (T, T) {
        let theta = self.z.max(-T::one()).min(T::one()).acos();
        let phi = self.y.atan2(self.x);
        (theta, phi)
    }

    pub fn cast<U: Scalar>(&self) -> UnitVector3<U> {
        UnitVector3 {
            x: U::lit(self.x.as_f64()),
            y: U::lit(self.y.as_f64()),
            z: U::lit(self.z.as_f64()),
        }
    }
}

impl<T: Scalar> Neg for UnitVector3<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            x: -self.x,
            y: -self.y,
            z: -self.z,
        }
    }
}
