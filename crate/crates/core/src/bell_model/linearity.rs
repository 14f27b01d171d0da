//! Applying the value assignment term by term to `E = λP_n + (1−λ)P_m`.

use super::construction::bell_support;
use super::interval::IntervalSet;
use crate::error::{Error, Result};
use crate::qmcore::{eigvalsh, projector_from_bloch, UnitVector3};
use crate::scalar::Scalar;

/// `|n × m|` must exceed this for the two directions to count as non-collinear.
pub const NON_COLLINEAR_TOL: f64 = 1e-9;
const EIGENVALUE_MATCH_TOL: f64 = 1e-12;

/// One value of `λP_n,ψ(ω) + (1−λ)P_m,ψ(ω)` and where it is attained.
#[derive(Debug, Clone, PartialEq)]
pub struct RhsPiece<T> {
    pub value: T,
    pub n_fires: bool,
    pub m_fires: bool,
    pub set: IntervalSet<T>,
    /// Whether `value` is (within 1e-12) an eigenvalue of `E`.
    pub in_spectrum: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LinearityReport<T> {
    pub lambda: T,
    /// Spectrum of `E` from the eigensolver, ascending.
    pub spectrum: [T; 2],
    /// `½(1 ∓ |λn + (1−λ)m|)`.
    pub spectrum_closed_form: [T; 2],
    /// Pieces for (neither, n only, m only, both): values `0, λ, 1−λ, 1`.
    pub pieces: Vec<RhsPiece<T>>,
    /// Measure of ω where the term-by-term value is not an eigenvalue of `E`.
    pub mismatch_measure: T,
}

impl<T: Scalar> LinearityReport<T> {
    /// Measure of `{P_n,ψ = P_m,ψ = 0}`.
    pub fn both_zero_measure(&self) -> T {
        self.pieces
            .iter()
            .find(|p| !p.n_fires && !p.m_fires)
            .map(|p| p.set.measure())
            .unwrap_or_else(T::zero)
    }

    /// Distinct attained values (positive measure), ascending, with their total measure.
    pub fn attained_values(&self) -> Vec<(T, T)> {
        let mut out: Vec<(T, T)> = Vec::new();
        let mut pieces: Vec<&RhsPiece<T>> = self.pieces.iter().filter(|p| !p.set.is_empty()).collect();
        pieces.sort_by(|a, b| a.value.partial_cmp(&b.value).expect("values are finite"));
        for p in pieces {
            match out.last_mut() {
                Some((v, mu)) if (*v - p.value).abs() <= T::tol(EIGENVALUE_MATCH_TOL) => *mu += p.set.measure(),
                _ => out.push((p.value, p.set.measure())),
            }
        }
        out
    }
}

pub fn linearity_violation<T: Scalar>(
    lambda: T,
    n: &UnitVector3<T>,
    m: &UnitVector3<T>,
    s: &UnitVector3<T>,
) -> Result<LinearityReport<T>> {
    if !(lambda > T::zero() && lambda < T::one()) {
        return Err(Error::ArgumentError(format!(
            "lambda = {} must lie strictly between 0 and 1",
            lambda.as_f64()
        )));
    }
    if n.cross_norm(m) <= T::lit(NON_COLLINEAR_TOL) {
        return Err(Error::DegenerateConfiguration(
            "the two projector directions are collinear".into(),
        ));
    }
    let mu = T::one() - lambda;
    let pn = projector_from_bloch(*n)?;
    let pm = projector_from_bloch(*m)?;
    let e = &pn.matrix().scale(lambda) + &pm.matrix().scale(mu);
    let eig = eigvalsh(&e)?;
    let spectrum = [eig[0], eig[1]];
    let r = {
        let v = [
            lambda * n.x() + mu * m.x(),
            lambda * n.y() + mu * m.y(),
            lambda * n.z() + mu * m.z(),
        ];
        (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt()
    };
    let spectrum_closed_form = [T::half() * (T::one() - r), T::half() * (T::one() + r)];

    let sn = bell_support(n, s);
    let sm = bell_support(m, s);
    let tol = T::tol(EIGENVALUE_MATCH_TOL);
    let in_spectrum = |v: T| spectrum.iter().any(|&e| (e - v).abs() <= tol);
    let pieces: Vec<RhsPiece<T>> = [
        (false, false, T::zero(), sn.union(&sm).complement()),
        (true, false, lambda, sn.difference(&sm)),
        (false, true, mu, sm.difference(&sn)),
        (true, true, T::one(), sn.intersection(&sm)),
    ]
    .into_iter()
    .map(|(n_fires, m_fires, value, set)| RhsPiece {
        value,
        n_fires,
        m_fires,
        set,
        in_spectrum: in_spectrum(value),
    })
    .collect();
    let mismatch_measure = pieces.iter().filter(|p| !p.in_spectrum).map(|p| p.set.measure()).sum();

    Ok(LinearityReport {
        lambda,
        spectrum,
        spectrum_closed_form,
        pieces,
        mismatch_measure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: f64, y: f64, z: f64) -> UnitVector3<f64> {
        UnitVector3::new(x, y, z).unwrap()
    }

    #[test]
    fn orthogonal_equal_mixture() {
        let (x, y, z) = (v(1.0, 0.0, 0.0), v(0.0, 1.0, 0.0), v(0.0, 0.0, 1.0));
        let rep = linearity_violation(0.5, &x, &z, &y).unwrap();
        let r = 2f64.sqrt() / 4.0;
        assert!((rep.spectrum[0] - (0.5 - r)).abs() < 1e-12);
        assert!((rep.spectrum[1] - (0.5 + r)).abs() < 1e-12);
        assert_eq!(rep.mismatch_measure, 1.0);
        assert_eq!(rep.attained_values(), vec![(0.0, 0.5), (1.0, 0.5)]);
        assert_eq!(rep.both_zero_measure(), 0.5);
    }

    #[test]
    fn generic_state_reaches_every_value() {
        let (x, z) = (v(1.0, 0.0, 0.0), v(0.0, 0.0, 1.0));
        let s = UnitVector3::normalize(0.4, 0.3, -0.5).unwrap();
        let rep = linearity_violation(0.25, &x, &z, &s).unwrap();
        let values: Vec<f64> = rep.pieces.iter().map(|p| p.value).collect();
        assert_eq!(values, vec![0.0, 0.25, 0.75, 1.0]);
        let total: f64 = rep.pieces.iter().map(|p| p.set.measure()).sum();
        assert!((total - 1.0).abs() < 1e-15);
        assert!(rep.both_zero_measure() > 0.0);
        assert!(rep.mismatch_measure > 0.0);
        for i in 0..2 {
            assert!((rep.spectrum[i] - rep.spectrum_closed_form[i]).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_collinear_and_bad_lambda() {
        let n = v(0.0, 0.6, 0.8);
        assert!(matches!(
            linearity_violation(0.5, &n, &n, &n),
            Err(Error::DegenerateConfiguration(_))
        ));
        assert!(matches!(
            linearity_violation(0.5, &n, &-n, &n),
            Err(Error::DegenerateConfiguration(_))
        ));
        let z = v(0.0, 0.0, 1.0);
        for lambda in [0.0, 1.0, -0.1, f64::NAN] {
            assert!(matches!(
                linearity_violation(lambda, &n, &z, &z),
                Err(Error::ArgumentError(_))
            ));
        }
    }
}
