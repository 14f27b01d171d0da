use crate::scalar::Scalar;

/// Stopping rules for [`nelder_mead`].
#[derive(Debug, Clone, Copy)]
pub struct NelderMeadOptions<T> {
    /// Stop once the largest vertex distance from the best vertex falls below this.
    pub diameter_tol: T,
    pub max_iterations: usize,
}

#[derive(Debug, Clone)]
pub struct NelderMeadResult<T> {
    pub x: Vec<T>,
    pub value: T,
    pub iterations: usize,
    pub converged: bool,
}

/// Derivative-free simplex minimization from an explicit initial simplex
/// (`dim + 1` vertices of length `dim`).
pub fn nelder_mead<T, F>(f: F, simplex: Vec<Vec<T>>, options: &NelderMeadOptions<T>) -> NelderMeadResult<T>
where
    T: Scalar,
    F: Fn(&[T]) -> T,
{
    let dim = simplex.len().saturating_sub(1);
    assert!(dim >= 1 && simplex.iter().all(|v| v.len() == dim), "malformed simplex");
    let (alpha, gamma, rho, sigma) = (T::one(), T::lit(2.0), T::half(), T::half());

    let mut pts: Vec<(Vec<T>, T)> = simplex
        .into_iter()
        .map(|x| {
            let fx = f(&x);
            (x, fx)
        })
        .collect();
    let by_value = |a: &(Vec<T>, T), b: &(Vec<T>, T)| a.1.partial_cmp(&b.1).unwrap_or(std::cmp::Ordering::Equal);

    let mut iterations = 0;
    let mut converged = false;
    loop {
        pts.sort_by(by_value);
        if diameter(&pts) < options.diameter_tol {
            converged = true;
            break;
        }
        if iterations >= options.max_iterations {
            break;
        }
        iterations += 1;

        let centroid: Vec<T> = (0..dim)
            .map(|k| pts[..dim].iter().map(|p| p.0[k]).sum::<T>() / T::lit(dim as f64))
            .collect();
        let along = |t: T| -> Vec<T> {
            centroid
                .iter()
                .zip(&pts[dim].0)
                .map(|(&c, &w)| c + t * (c - w))
                .collect()
        };

        let xr = along(alpha);
        let fr = f(&xr);
        if fr < pts[0].1 {
            let xe = along(gamma);
            let fe = f(&xe);
            pts[dim] = if fe < fr { (xe, fe) } else { (xr, fr) };
            continue;
        }
        if fr < pts[dim - 1].1 {
            pts[dim] = (xr, fr);
            continue;
        }
        // contraction: outside if the reflection improved on the worst point
        let (xc, fc) = if fr < pts[dim].1 {
            let xc = along(rho * alpha);
            let fc = f(&xc);
            (xc, fc)
        } else {
            let xc = along(-rho);
            let fc = f(&xc);
            (xc, fc)
        };
        if fc < pts[dim].1.min(fr) {
            pts[dim] = (xc, fc);
            continue;
        }
        // shrink toward the best vertex
        let best = pts[0].0.clone();
        for p in pts.iter_mut().skip(1) {
            let x: Vec<T> = best.iter().zip(&p.0).map(|(&b, &v)| b + sigma * (v - b)).collect();
            let fx = f(&x);
            *p = (x, fx);
        }
    }

    let (x, value) = pts.swap_remove(0);
    NelderMeadResult {
        x,
        value,
        iterations,
        converged,
    }
}

fn diameter<T: Scalar>(pts: &[(Vec<T>, T)]) -> T {
    let best = &pts[0].0;
    pts.iter()
        .skip(1)
        .map(|p| p.0.iter().zip(best).map(|(&a, &b)| (a - b) * (a - b)).sum::<T>().sqrt())
        .fold(T::zero(), T::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> NelderMeadOptions<f64> {
        NelderMeadOptions {
            diameter_tol: 1e-10,
            max_iterations: 2000,
        }
    }

    #[test]
    fn quadratic_bowl() {
        let f = |x: &[f64]| (x[0] - 1.0).powi(2) + 3.0 * (x[1] + 0.5).powi(2) + 0.2;
        let r = nelder_mead(f, vec![vec![0.0, 0.0], vec![0.3, 0.0], vec![0.0, 0.3]], &opts());
        assert!(r.converged);
        assert!((r.x[0] - 1.0).abs() < 1e-8 && (r.x[1] + 0.5).abs() < 1e-8);
        assert!((r.value - 0.2).abs() < 1e-14);
    }

    #[test]
    fn rosenbrock() {
        let f = |x: &[f64]| 100.0 * (x[1] - x[0] * x[0]).powi(2) + (1.0 - x[0]).powi(2);
        let r = nelder_mead(f, vec![vec![-1.2, 1.0], vec![-1.0, 1.0], vec![-1.2, 1.2]], &opts());
        assert!(r.converged);
        assert!((r.x[0] - 1.0).abs() < 1e-6 && (r.x[1] - 1.0).abs() < 1e-6);
    }

    #[test]
    fn iteration_cap() {
        let f = |x: &[f64]| x[0].abs();
        let o = NelderMeadOptions {
            diameter_tol: 0.0,
            max_iterations: 5,
        };
        let r = nelder_mead(f, vec![vec![10.0], vec![11.0]], &o);
        assert_eq!(r.iterations, 5);
        assert!(!r.converged);
    }
}
