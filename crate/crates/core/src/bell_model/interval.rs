use crate::scalar::Scalar;

/// Finite union of disjoint half-open intervals `[a, b)` inside `[-1/2, 1/2]`.
///
/// Intervals are kept sorted, non-empty and non-adjacent, so two sets built
/// from the same endpoints compare equal with `==`. An interval ending at
/// `1/2` also contains the point `1/2` itself.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalSet<T> {
    intervals: Vec<(T, T)>,
}

impl<T: Scalar> IntervalSet<T> {
    #[inline]
    pub fn lower() -> T {
        -T::half()
    }

    #[inline]
    pub fn upper() -> T {
        T::half()
    }

    pub fn empty() -> Self {
        Self { intervals: Vec::new() }
    }

    /// The whole hidden-variable range.
    pub fn full() -> Self {
        Self {
            intervals: vec![(Self::lower(), Self::upper())],
        }
    }

    /// `[a, b)` clipped to the domain.
    pub fn interval(a: T, b: T) -> Self {
        Self::from_intervals(vec![(a, b)])
    }

    /// Clips, sorts and merges arbitrary intervals.
    pub fn from_intervals(raw: Vec<(T, T)>) -> Self {
        let mut clipped: Vec<(T, T)> = raw
            .into_iter()
            .map(|(a, b)| (a.max(Self::lower()), b.min(Self::upper())))
            .filter(|&(a, b)| a < b)
            .collect();
        clipped.sort_by(|x, y| x.0.partial_cmp(&y.0).expect("interval endpoints are not NaN"));
        let mut merged: Vec<(T, T)> = Vec::with_capacity(clipped.len());
        for (a, b) in clipped {
            match merged.last_mut() {
                Some(last) if a <= last.1 => last.1 = last.1.max(b),
                _ => merged.push((a, b)),
            }
        }
        Self { intervals: merged }
    }

    pub fn intervals(&self) -> &[(T, T)] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn measure(&self) -> T {
        self.intervals.iter().map(|&(a, b)| b - a).sum()
    }

    pub fn contains(&self, omega: T) -> bool {
        self.intervals
            .iter()
            .any(|&(a, b)| (a <= omega && omega < b) || (omega == b && b == Self::upper()))
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.intervals.len() && j < other.intervals.len() {
            let (a0, a1) = self.intervals[i];
            let (b0, b1) = other.intervals[j];
            let lo = a0.max(b0);
            let hi = a1.min(b1);
            if lo < hi {
                out.push((lo, hi));
            }
            if a1 < b1 {
                i += 1;
            } else {
                j += 1;
            }
        }
        Self { intervals: out }
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut all = self.intervals.clone();
        all.extend_from_slice(&other.intervals);
        Self::from_intervals(all)
    }

    /// Complement within `[-1/2, 1/2)`.
    pub fn complement(&self) -> Self {
        let mut out = Vec::new();
        let mut cursor = Self::lower();
        for &(a, b) in &self.intervals {
            if cursor < a {
                out.push((cursor, a));
            }
            cursor = b;
        }
        if cursor < Self::upper() {
            out.push((cursor, Self::upper()));
        }
        Self { intervals: out }
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.intersection(&other.complement())
    }

    pub fn symmetric_difference(&self, other: &Self) -> Self {
        self.difference(other).union(&other.difference(self))
    }

    pub fn cast<U: Scalar>(&self) -> IntervalSet<U> {
        IntervalSet {
            intervals: self
                .intervals
                .iter()
                .map(|&(a, b)| (U::lit(a.as_f64()), U::lit(b.as_f64())))
                .collect(),
        }
    }
}
