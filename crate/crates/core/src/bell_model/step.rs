use super::interval::IntervalSet;
use crate::scalar::Scalar;

/// Piecewise-constant function on the hidden-variable range.
///
/// Pieces are pairwise disjoint and together cover `[-1/2, 1/2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct StepFunction<T> {
    pieces: Vec<(IntervalSet<T>, T)>,
}

/// One elementary segment `[start, end)` of a step function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment<T> {
    pub start: T,
    pub end: T,
    pub value: T,
}

impl<T: Scalar> StepFunction<T> {
    pub fn constant(value: T) -> Self {
        Self {
            pieces: vec![(IntervalSet::full(), value)],
        }
    }

    /// `value` on `set`, zero elsewhere.
    pub fn indicator(set: IntervalSet<T>, value: T) -> Self {
        let rest = set.complement();
        let mut pieces = Vec::with_capacity(2);
        if !set.is_empty() {
            pieces.push((set, value));
        }
        if !rest.is_empty() {
            pieces.push((rest, T::zero()));
        }
        Self { pieces }
    }

    /// Builds from explicit pieces; the caller guarantees a disjoint cover.
    pub fn from_pieces(pieces: Vec<(IntervalSet<T>, T)>) -> Self {
        Self {
            pieces: pieces.into_iter().filter(|(s, _)| !s.is_empty()).collect(),
        }
    }

    pub fn pieces(&self) -> &[(IntervalSet<T>, T)] {
        &self.pieces
    }

    pub fn evaluate(&self, omega: T) -> T {
        self.pieces
            .iter()
            .find(|(s, _)| s.contains(omega))
            .map(|&(_, v)| v)
            .unwrap_or_else(T::zero)
    }

    pub fn integral(&self) -> T {
        self.pieces.iter().map(|(s, v)| s.measure() * *v).sum()
    }

    pub fn scaled(&self, k: T) -> Self {
        Self {
            pieces: self.pieces.iter().map(|(s, v)| (s.clone(), *v * k)).collect(),
        }
    }

    /// Where the function is non-zero.
    pub fn support(&self) -> IntervalSet<T> {
        self.pieces
            .iter()
            .filter(|(_, v)| *v != T::zero())
            .fold(IntervalSet::empty(), |acc, (s, _)| acc.union(s))
    }

    /// Measure of `{ω : |self(ω) − other(ω)| > tol}`.
    pub fn disagreement_measure(&self, other: &Self, tol: T) -> T {
        let mut acc = T::zero();
        for (a, va) in &self.pieces {
            for (b, vb) in &other.pieces {
                if (*va - *vb).abs() > tol {
                    acc += a.intersection(b).measure();
                }
            }
        }
        acc
    }

    /// Equal up to `tol` in value, everywhere except a null set.
    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        self.disagreement_measure(other, tol) == T::zero()
    }

    /// Sorted, de-duplicated interval endpoints including the domain bounds.
    pub fn breakpoints(&self) -> Vec<T> {
        let mut pts = vec![IntervalSet::<T>::lower(), IntervalSet::<T>::upper()];
        for (s, _) in &self.pieces {
            for &(a, b) in s.intervals() {
                pts.push(a);
                pts.push(b);
            }
        }
        pts.sort_by(|a, b| a.partial_cmp(b).expect("breakpoints are not NaN"));
        pts.dedup();
        pts
    }

    /// Elementary segments in increasing `ω`.
    pub fn segments(&self) -> Vec<Segment<T>> {
        segments_of(&self.breakpoints(), |w| self.evaluate(w))
    }
}

/// Common refinement of several step functions: one row of values per segment.
pub fn common_segments<T: Scalar>(functions: &[&StepFunction<T>]) -> Vec<(T, T, Vec<T>)> {
    let mut pts: Vec<T> = functions.iter().flat_map(|f| f.breakpoints()).collect();
    pts.sort_by(|a, b| a.partial_cmp(b).expect("breakpoints are not NaN"));
    pts.dedup();
    pts.windows(2)
        .filter(|w| w[0] < w[1])
        .map(|w| {
            let mid = (w[0] + w[1]) * T::half();
            (w[0], w[1], functions.iter().map(|f| f.evaluate(mid)).collect())
        })
        .collect()
}

fn segments_of<T: Scalar>(pts: &[T], f: impl Fn(T) -> T) -> Vec<Segment<T>> {
    pts.windows(2)
        .filter(|w| w[0] < w[1])
        .map(|w| Segment {
            start: w[0],
            end: w[1],
            value: f((w[0] + w[1]) * T::half()),
        })
        .collect()
}
