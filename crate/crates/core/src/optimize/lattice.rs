use crate::qmcore::UnitVector3;
use crate::scalar::Scalar;

fn golden_angle<T: Scalar>() -> T {
    // π(3 − √5)
    T::PI() * (T::lit(3.0) - T::lit(5.0).sqrt())
}

/// `count` nearly uniform points on the whole sphere.
pub fn fibonacci_sphere<T: Scalar>(count: usize) -> Vec<UnitVector3<T>> {
    let n = T::lit(count as f64);
    (0..count)
        .map(|i| {
            let fi = T::lit(i as f64);
            let z = T::one() - (fi + fi + T::one()) / n;
            lattice_point(z, fi * golden_angle::<T>())
        })
        .collect()
}

/// `count` nearly uniform points on the upper hemisphere `z > 0`.
///
/// Antipodal directions define the same qubit measurement, so this covers
/// every measurement basis once.
pub fn fibonacci_hemisphere<T: Scalar>(count: usize) -> Vec<UnitVector3<T>> {
    let n = T::lit(count as f64);
    (0..count)
        .map(|i| {
            let fi = T::lit(i as f64);
            let z = T::one() - (fi + T::half()) / n;
            lattice_point(z, fi * golden_angle::<T>())
        })
        .collect()
}

fn lattice_point<T: Scalar>(z: T, phi: T) -> UnitVector3<T> {
    let r = (T::one() - z * z).max(T::zero()).sqrt();
    let (sp, cp) = phi.sin_cos();
    UnitVector3::normalize(r * cp, r * sp, z).expect("lattice point has unit norm")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sphere_points_are_balanced() {
        let pts = fibonacci_sphere::<f64>(2000);
        let mean: [f64; 3] = pts
            .iter()
            .fold([0.0; 3], |acc, p| [acc[0] + p.x(), acc[1] + p.y(), acc[2] + p.z()]);
        for c in mean {
            assert!((c / 2000.0).abs() < 1e-3);
        }
    }

    #[test]
    fn hemisphere_stays_upper() {
        let pts = fibonacci_hemisphere::<f64>(1000);
        assert_eq!(pts.len(), 1000);
        assert!(pts.iter().all(|p| p.z() > 0.0));
        // coverage: every direction is within ~0.1 rad of a lattice point or its antipode
        for probe in fibonacci_sphere::<f64>(300) {
            let best = pts.iter().map(|p| p.dot(&probe).abs()).fold(0.0, f64::max);
            assert!(best > 0.99, "gap near {probe:?}");
        }
    }
}
