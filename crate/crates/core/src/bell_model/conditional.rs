//! Dispersion-free representations of a conditional measurement: projector
//! `A = P_m` measured immediately after `B = P_n`, in the pure state `s`.
//!
//! Two routes are implemented:
//!
//! * reduction first: the state becomes `ψ_B = n` and `A` is evaluated in a
//!   fresh hidden-variable space `ω′` (an indicator function);
//! * operator product first: `BAB = ½(1 + n·m)·B` is evaluated in the original
//!   state and divided by `⟨B⟩_ψ` (a step function in `ω`).
//!
//! Both average to `(1 + n·m)/2` but differ pointwise.

use super::construction::bell_support;
use super::interval::IntervalSet;
use super::step::StepFunction;
use crate::error::{Error, Result};
use crate::qmcore::UnitVector3;
use crate::scalar::Scalar;

/// Value tolerance used when comparing step-function values.
pub const VALUE_TOL: f64 = 1e-12;

/// Reduction-first representation, living on the post-measurement axis `ω′`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedRepresentation<T> {
    pub support: IntervalSet<T>,
    pub mean: T,
}

impl<T: Scalar> ReducedRepresentation<T> {
    pub fn as_step(&self) -> StepFunction<T> {
        StepFunction::indicator(self.support.clone(), T::one())
    }
}

/// Operator-product representation `(BAB)_ψ(ω)/⟨B⟩_ψ` on the original axis `ω`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductRepresentation<T> {
    pub step: StepFunction<T>,
    /// `(1 + n·m)/(1 + n·s)`, the value on the support of `B_ψ`.
    pub prefactor: T,
    /// `∫(BAB)_ψ dω / ∫B_ψ dω`.
    pub mean_ratio: T,
}

/// `A_{ψ_B}(ω′)` with `ψ_B` the state `n` left behind by the measurement of `B`.
pub fn conditional_rep_9<T: Scalar>(m: &UnitVector3<T>, n: &UnitVector3<T>) -> ReducedRepresentation<T> {
    let support = bell_support(m, n);
    let mean = support.measure();
    ReducedRepresentation { support, mean }
}

fn check_conditioning<T: Scalar>(n: &UnitVector3<T>, s: &UnitVector3<T>) -> Result<T> {
    let ns = s.overlap(n);
    if T::one() + ns <= T::tol(VALUE_TOL) {
        return Err(Error::ConditioningOnNullEvent);
    }
    Ok(ns)
}

/// `(BAB)_ψ(ω)/⟨B⟩_ψ = [(1 + n·m)/(1 + n·s)]·B_ψ(ω)`.
pub fn conditional_rep_12<T: Scalar>(
    m: &UnitVector3<T>,
    n: &UnitVector3<T>,
    s: &UnitVector3<T>,
) -> Result<ProductRepresentation<T>> {
    let ns = check_conditioning(n, s)?;
    let nm = n.overlap(m);
    let prefactor = (T::one() + nm) / (T::one() + ns);
    let b_support = bell_support(n, s);
    let b_mean = b_support.measure();
    // (BAB)_ψ(ω) = ½(1 + n·m)·B_ψ(ω)
    let bab_mean = T::half() * (T::one() + nm) * b_mean;
    Ok(ProductRepresentation {
        step: StepFunction::indicator(b_support, prefactor),
        prefactor,
        mean_ratio: bab_mean / b_mean,
    })
}

/// Both representations side by side.
#[derive(Debug, Clone, PartialEq)]
pub struct DispersionFreeReport<T> {
    /// Support of the reduction-first indicator over `ω′`.
    pub rep9_support: IntervalSet<T>,
    pub rep9: StepFunction<T>,
    pub rep12: StepFunction<T>,
    pub mean9: T,
    pub mean12: T,
    /// `(1 + n·m)/2`.
    pub quantum_mean: T,
    /// Measure of the set where the two functions differ.
    pub disagreement_measure: T,
}

impl<T: Scalar> DispersionFreeReport<T> {
    pub fn means_agree(&self, tol: T) -> bool {
        (self.mean9 - self.quantum_mean).abs() <= tol && (self.mean12 - self.quantum_mean).abs() <= tol
    }
}

pub fn conflict_report<T: Scalar>(
    m: &UnitVector3<T>,
    n: &UnitVector3<T>,
    s: &UnitVector3<T>,
) -> Result<DispersionFreeReport<T>> {
    let rep9 = conditional_rep_9(m, n);
    let rep12 = conditional_rep_12(m, n, s)?;
    let rep9_step = rep9.as_step();
    let report = DispersionFreeReport {
        disagreement_measure: rep9_step.disagreement_measure(&rep12.step, T::tol(VALUE_TOL)),
        rep9_support: rep9.support,
        rep9: rep9_step,
        mean9: rep9.mean,
        mean12: rep12.step.integral(),
        quantum_mean: T::half() * (T::one() + n.overlap(m)),
        rep12: rep12.step,
    };
    debug_assert!(report.means_agree(T::tol(1e-12)));
    Ok(report)
}

/// Classical conditional probability `μ[a ∩ b]/μ[b]` against `(1 + n·m)/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassicalRuleComparison<T> {
    pub intersection_ratio: T,
    pub quantum_ratio: T,
    pub gap: T,
}

pub fn classical_rule_comparison<T: Scalar>(
    m: &UnitVector3<T>,
    n: &UnitVector3<T>,
    s: &UnitVector3<T>,
) -> Result<ClassicalRuleComparison<T>> {
    check_conditioning(n, s)?;
    let a = bell_support(m, s);
    let b = bell_support(n, s);
    let intersection_ratio = a.intersection(&b).measure() / b.measure();
    let quantum_ratio = T::half() * (T::one() + n.overlap(m));
    Ok(ClassicalRuleComparison {
        intersection_ratio,
        quantum_ratio,
        gap: (intersection_ratio - quantum_ratio).abs(),
    })
}

/// Measuring `A` twice in a row.
#[derive(Debug, Clone, PartialEq)]
pub struct RepeatedMeasurement<T> {
    /// Reduction first: identically 1.
    pub rep9: StepFunction<T>,
    /// Operator product first: `A_ψ(ω)/∫A_ψ dω`.
    pub rep12: StepFunction<T>,
}

pub fn repeated_measurement<T: Scalar>(m: &UnitVector3<T>, s: &UnitVector3<T>) -> Result<RepeatedMeasurement<T>> {
    check_conditioning(m, s)?;
    let support = bell_support(m, s);
    let norm = support.measure();
    Ok(RepeatedMeasurement {
        rep9: StepFunction::constant(T::one()),
        rep12: StepFunction::indicator(support, T::one() / norm),
    })
}

/// Joint function `F(ω′, ω) = A_{ψ_B}(ω′)·B_ψ(ω)/∫B_ψ dω` on `[-½, ½]²`,
/// stored as its two factors.
#[derive(Debug, Clone, PartialEq)]
pub struct UnifiedRepresentation<T> {
    /// Factor in `ω′`.
    pub outer: StepFunction<T>,
    /// Factor in `ω`.
    pub inner: StepFunction<T>,
}

impl<T: Scalar> UnifiedRepresentation<T> {
    pub fn evaluate(&self, omega_prime: T, omega: T) -> T {
        self.outer.evaluate(omega_prime) * self.inner.evaluate(omega)
    }

    /// `∫ F dω`, a function of `ω′`.
    pub fn marginal_over_omega(&self) -> StepFunction<T> {
        self.outer.scaled(self.inner.integral())
    }

    /// `∫ F dω′`, a function of `ω`.
    pub fn marginal_over_omega_prime(&self) -> StepFunction<T> {
        self.inner.scaled(self.outer.integral())
    }

    pub fn double_integral(&self) -> T {
        self.outer.integral() * self.inner.integral()
    }
}

pub fn unified_rep<T: Scalar>(
    m: &UnitVector3<T>,
    n: &UnitVector3<T>,
    s: &UnitVector3<T>,
) -> Result<UnifiedRepresentation<T>> {
    check_conditioning(n, s)?;
    let b = bell_support(n, s);
    let b_mean = b.measure();
    Ok(UnifiedRepresentation {
        outer: conditional_rep_9(m, n).as_step(),
        inner: StepFunction::indicator(b, T::one() / b_mean),
    })
}

/// Outcome of comparing the two marginals with the two prescriptions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnifiedCheck<T> {
    /// Integrating out `ω` reproduces the reduction-first indicator.
    pub omega_marginal_matches: bool,
    /// Integrating out `ω′` reproduces the operator-product step function.
    pub omega_prime_marginal_matches: bool,
    pub double_integral: T,
    pub quantum_mean: T,
}

impl<T: Scalar> UnifiedCheck<T> {
    pub fn passed(&self, tol: T) -> bool {
        self.omega_marginal_matches
            && self.omega_prime_marginal_matches
            && (self.double_integral - self.quantum_mean).abs() <= tol
    }
}

/// Checks each marginal against its prescription: supports must be equal as
/// interval sets, values equal within `tol`.
pub fn check_unified<T: Scalar>(
    m: &UnitVector3<T>,
    n: &UnitVector3<T>,
    s: &UnitVector3<T>,
    tol: T,
) -> Result<UnifiedCheck<T>> {
    let unified = unified_rep(m, n, s)?;
    let rep9 = conditional_rep_9(m, n).as_step();
    let rep12 = conditional_rep_12(m, n, s)?.step;
    let matches = |marginal: &StepFunction<T>, target: &StepFunction<T>| {
        marginal.support() == target.support() && marginal.approx_eq(target, tol)
    };
    Ok(UnifiedCheck {
        omega_marginal_matches: matches(&unified.marginal_over_omega(), &rep9),
        omega_prime_marginal_matches: matches(&unified.marginal_over_omega_prime(), &rep12),
        double_integral: unified.double_integral(),
        quantum_mean: T::half() * (T::one() + n.overlap(m)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bell_model::construction::{bell_value, HiddenVariable};

    fn v(x: f64, y: f64, z: f64) -> UnitVector3<f64> {
        UnitVector3::new(x, y, z).unwrap()
    }

    fn with_overlap(axis: &UnitVector3<f64>, c: f64) -> UnitVector3<f64> {
        // rotate `axis` toward an orthogonal direction by acos(c)
        let ortho = if axis.x().abs() < 0.9 {
            v(1.0, 0.0, 0.0)
        } else {
            v(0.0, 1.0, 0.0)
        };
        let d = ortho.dot(axis);
        let perp = UnitVector3::normalize(
            ortho.x() - d * axis.x(),
            ortho.y() - d * axis.y(),
            ortho.z() - d * axis.z(),
        )
        .unwrap();
        let s = (1.0 - c * c).sqrt();
        UnitVector3::normalize(
            c * axis.x() + s * perp.x(),
            c * axis.y() + s * perp.y(),
            c * axis.z() + s * perp.z(),
        )
        .unwrap()
    }

    /// Brute-force midpoint quadrature of a function of ω built only from `bell_value`.
    fn grid_measure(f: impl Fn(f64) -> bool) -> f64 {
        let n = 200_000;
        (0..n).filter(|&k| f(-0.5 + (k as f64 + 0.5) / n as f64)).count() as f64 / n as f64
    }

    fn bit(m: &UnitVector3<f64>, s: &UnitVector3<f64>, w: f64) -> f64 {
        bell_value(m, s, HiddenVariable::new(w).unwrap()) as f64
    }

    #[test]
    fn rep9_examples() {
        let n = v(0.0, 0.6, 0.8);
        let r = conditional_rep_9(&n, &n);
        assert_eq!(r.support, IntervalSet::full());
        assert_eq!(r.mean, 1.0);
        let r = conditional_rep_9(&v(1.0, 0.0, 0.0), &v(0.0, 0.0, 1.0));
        assert_eq!(r.mean, 0.5);
        let m = with_overlap(&n, 0.6);
        assert!((conditional_rep_9(&m, &n).mean - 0.8).abs() < 1e-12);
    }

    #[test]
    fn rep12_examples() {
        let n = v(0.0, 0.6, 0.8);
        let m = with_overlap(&n, 0.3);
        let r = conditional_rep_12(&m, &n, &n).unwrap();
        assert_eq!(r.step.support(), IntervalSet::full());
        assert!((r.prefactor - 0.65).abs() < 1e-12);
        assert!((r.mean_ratio - 0.65).abs() < 1e-12);

        let z = v(0.0, 0.0, 1.0);
        let x = v(1.0, 0.0, 0.0);
        let y = v(0.0, 1.0, 0.0);
        let r = conditional_rep_12(&y, &x, &z).unwrap();
        assert_eq!(r.step, StepFunction::indicator(IntervalSet::interval(0.0, 0.5), 1.0));
        assert_eq!(r.mean_ratio, 0.5);
    }

    #[test]
    fn rep12_rejects_null_conditioning() {
        let z = v(0.0, 0.0, 1.0);
        assert_eq!(
            conditional_rep_12(&z, &-z, &z).unwrap_err(),
            Error::ConditioningOnNullEvent
        );
    }

    #[test]
    fn repeated_direction_conflict() {
        let s = v(0.0, 0.0, 1.0);
        let n = with_overlap(&s, 0.2);
        let rep = conflict_report(&n, &n, &s).unwrap();
        assert_eq!(rep.rep9, StepFunction::constant(1.0));
        assert!((rep.rep12.evaluate(0.45) - 2.0 / 1.2).abs() < 1e-12);
        assert_eq!(rep.rep12.evaluate(-0.45), 0.0);
        // the two functions differ everywhere
        assert!((rep.disagreement_measure - 1.0).abs() < 1e-15);
    }

    #[test]
    fn orthogonal_projectors_agree_pointwise() {
        let n = v(0.0, 0.6, 0.8);
        let rep = conflict_report(&-n, &n, &n).unwrap();
        assert_eq!(rep.disagreement_measure, 0.0);
        assert_eq!(rep.mean9, 0.0);
    }

    #[test]
    fn pinned_conflict_matches_brute_force() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let s = v(0.0, 0.0, 1.0);
        let n = v(1.0, 0.0, 0.0);
        let m = v(h, 0.0, h);
        let rep = conflict_report(&m, &n, &s).unwrap();
        // independent route: evaluate both prescriptions from bell_value on a grid
        let prefactor = (1.0 + n.dot(&m)) / (1.0 + n.dot(&s));
        let brute = grid_measure(|w| (bit(&m, &n, w) - prefactor * bit(&n, &s, w)).abs() > 1e-12);
        assert!((rep.disagreement_measure - brute).abs() < 1e-5);
        // closed form: ½ + √2/4
        assert!((rep.disagreement_measure - 0.853_553_390_593_273_7).abs() < 1e-12);
        assert!((rep.mean9 - 0.853_553_390_593_273_7).abs() < 1e-12);
        assert!((rep.mean12 - 0.853_553_390_593_273_7).abs() < 1e-12);
    }

    #[test]
    fn classical_rule_fails_for_non_commuting_pair() {
        let s = v(0.0, 0.0, 1.0);
        let n = v(1.0, 0.0, 0.0);
        let m = v(-0.6, 0.0, 0.8);
        let c = classical_rule_comparison(&m, &n, &s).unwrap();
        assert_eq!(c.intersection_ratio, 1.0);
        assert!((c.quantum_ratio - 0.2).abs() < 1e-15);
        assert!(c.gap > 0.1);
        let brute_ratio =
            grid_measure(|w| bit(&m, &s, w) == 1.0 && bit(&n, &s, w) == 1.0) / grid_measure(|w| bit(&n, &s, w) == 1.0);
        assert!((brute_ratio - c.intersection_ratio).abs() < 1e-4);
    }

    #[test]
    fn repeated_measurement_examples() {
        let m = v(0.0, 0.6, 0.8);
        let r = repeated_measurement(&m, &m).unwrap();
        assert_eq!(r.rep12, r.rep9);

        let s = v(0.0, 0.0, 1.0);
        let x = v(1.0, 0.0, 0.0);
        let r = repeated_measurement(&x, &s).unwrap();
        assert_eq!(r.rep12, StepFunction::indicator(IntervalSet::interval(0.0, 0.5), 2.0));
        assert_eq!(r.rep12.integral(), 1.0);

        let m = with_overlap(&s, -0.7);
        let r = repeated_measurement(&m, &s).unwrap();
        assert!((r.rep12.integral() - 1.0).abs() < 1e-12);
        assert!((r.rep12.pieces()[0].1 - 2.0 / 0.3).abs() < 1e-9);
        assert!(repeated_measurement(&-s, &s).is_err());
    }

    #[test]
    fn unified_marginals() {
        let s = v(0.0, 0.0, 1.0);
        let n = with_overlap(&s, 0.25);
        let m = with_overlap(&n, 0.6);
        let u = unified_rep(&m, &n, &s).unwrap();
        assert_eq!(u.marginal_over_omega().support(), bell_support(&m, &n));
        assert_eq!(u.marginal_over_omega_prime().support(), bell_support(&n, &s));
        assert!((u.double_integral() - 0.8).abs() < 1e-12);
        let check = check_unified(&m, &n, &s, 1e-12).unwrap();
        assert!(check.passed(1e-12));

        // 2-D midpoint quadrature of F as an independent cross-check
        let k = 400;
        let h = 1.0 / k as f64;
        let mut total = 0.0;
        for i in 0..k {
            for j in 0..k {
                total += u.evaluate(-0.5 + (i as f64 + 0.5) * h, -0.5 + (j as f64 + 0.5) * h);
            }
        }
        assert!((total * h * h - 0.8).abs() < 1e-2);
    }
}
