//! Sets of integers stored as sorted, disjoint, non-adjacent runs.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer set as maximal runs [lo, hi]; adjacent runs are merged, so the
/// representation is canonical and Eq compares set equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntSpectrum {
    runs: Vec<(i64, i64)>,
}

impl IntSpectrum {
    pub fn new() -> Self {
        IntSpectrum { runs: Vec::new() }
    }

    pub fn from_runs(runs: impl IntoIterator<Item = (i64, i64)>) -> Result<Self> {
        let mut v: Vec<(i64, i64)> = runs.into_iter().collect();
        for &(lo, hi) in &v {
            if lo > hi {
                return Err(Error::Domain(format!("empty run [{lo},{hi}]")));
            }
        }
        v.sort_unstable();
        let mut out: Vec<(i64, i64)> = Vec::with_capacity(v.len());
        for (lo, hi) in v {
            match out.last_mut() {
                Some((_, phi)) if lo <= (*phi).saturating_add(1) => {
                    *phi = (*phi).max(hi);
                }
                _ => out.push((lo, hi)),
            }
        }
        Ok(IntSpectrum { runs: out })
    }

    pub fn singleton(v: i64) -> Self {
        IntSpectrum { runs: vec![(v, v)] }
    }

    pub fn run(lo: i64, hi: i64) -> Result<Self> {
        Self::from_runs([(lo, hi)])
    }

    pub fn from_values(values: impl IntoIterator<Item = i64>) -> Self {
        let mut v: Vec<i64> = values.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        let mut runs: Vec<(i64, i64)> = Vec::new();
        for x in v {
            match runs.last_mut() {
                Some((_, hi)) if x == *hi + 1 => *hi = x,
                _ => runs.push((x, x)),
            }
        }
        IntSpectrum { runs }
    }

    pub fn runs(&self) -> &[(i64, i64)] {
        &self.runs
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Number of integers in the set.
    pub fn count(&self) -> u128 {
        self.runs.iter().map(|&(lo, hi)| (hi - lo) as u128 + 1).sum()
    }

    pub fn min(&self) -> Option<i64> {
        self.runs.first().map(|r| r.0)
    }

    pub fn max(&self) -> Option<i64> {
        self.runs.last().map(|r| r.1)
    }

    pub fn contains(&self, v: i64) -> bool {
        self.runs
            .binary_search_by(|&(lo, hi)| {
                if v < lo {
                    std::cmp::Ordering::Greater
                } else if v > hi {
                    std::cmp::Ordering::Less
                } else {
                    std::cmp::Ordering::Equal
                }
            })
            .is_ok()
    }

    pub fn insert(&mut self, v: i64) {
        *self = self.union(&IntSpectrum::singleton(v));
    }

    pub fn union(&self, other: &IntSpectrum) -> IntSpectrum {
        IntSpectrum::from_runs(self.runs.iter().chain(other.runs.iter()).copied())
            .expect("runs already valid")
    }

    /// The subset falling inside [lo, hi].
    pub fn clip(&self, lo: i64, hi: i64) -> IntSpectrum {
        let mut out = Vec::new();
        for &(a, b) in &self.runs {
            let a = a.max(lo);
            let b = b.min(hi);
            if a <= b {
                out.push((a, b));
            }
        }
        IntSpectrum { runs: out }
    }

    /// Integers of [lo, hi] not in the set.
    pub fn complement_within(&self, lo: i64, hi: i64) -> IntSpectrum {
        if lo > hi {
            return IntSpectrum::new();
        }
        let mut out = Vec::new();
        let mut cursor = lo;
        for &(a, b) in &self.runs {
            if b < lo {
                continue;
            }
            if a > hi {
                break;
            }
            if cursor < a {
                out.push((cursor, (a - 1).min(hi)));
            }
            cursor = cursor.max(b + 1);
            if cursor > hi {
                break;
            }
        }
        if cursor <= hi {
            out.push((cursor, hi));
        }
        IntSpectrum { runs: out }
    }

    /// {v + delta : v in self}.
    pub fn shift(&self, delta: i64) -> IntSpectrum {
        IntSpectrum { runs: self.runs.iter().map(|&(lo, hi)| (lo + delta, hi + delta)).collect() }
    }

    /// {c - v : v in self} (reflection, still sorted).
    pub fn reflect(&self, c: i64) -> IntSpectrum {
        IntSpectrum { runs: self.runs.iter().rev().map(|&(lo, hi)| (c - hi, c - lo)).collect() }
    }

    pub fn iter_values(&self) -> impl Iterator<Item = i64> + '_ {
        self.runs.iter().flat_map(|&(lo, hi)| lo..=hi)
    }

    /// Runs joined with ';', each as "lo,hi": the CSV cell format.
    pub fn to_csv_cell(&self) -> String {
        self.runs
            .iter()
            .map(|(lo, hi)| format!("{lo},{hi}"))
            .collect::<Vec<_>>()
            .join(";")
    }
}

impl fmt::Display for IntSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.runs.is_empty() {
            return write!(f, "{{}}");
        }
        for (i, (lo, hi)) in self.runs.iter().enumerate() {
            if i > 0 {
                write!(f, " U ")?;
            }
            if lo == hi {
                write!(f, "{{{lo}}}")?;
            } else {
                write!(f, "[{lo},{hi}]")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_and_merges() {
        let s = IntSpectrum::from_runs([(5, 9), (3, 3), (10, 12)]).unwrap();
        assert_eq!(s.runs(), &[(3, 3), (5, 12)]);
        assert_eq!(s.count(), 9);
        assert!(s.contains(3) && !s.contains(4) && s.contains(11));
        assert_eq!(s.to_string(), "{3} U [5,12]");
        assert_eq!(s.to_csv_cell(), "3,3;5,12");
    }

    #[test]
    fn from_values_builds_runs() {
        let s = IntSpectrum::from_values([4, 1, 2, 2, 9]);
        assert_eq!(s.runs(), &[(1, 2), (4, 4), (9, 9)]);
    }

    #[test]
    fn union_reflect_shift() {
        let a = IntSpectrum::from_runs([(0, 3)]).unwrap();
        let b = IntSpectrum::from_runs([(5, 7)]).unwrap();
        let u = a.union(&b);
        assert_eq!(u.runs(), &[(0, 3), (5, 7)]);
        let r = u.reflect(10);
        assert_eq!(r.runs(), &[(3, 5), (7, 10)]);
        assert_eq!(r.shift(1).runs(), &[(4, 6), (8, 11)]);
    }

    #[test]
    fn complement_within_bounds() {
        let s = IntSpectrum::from_runs([(2, 4), (8, 9)]).unwrap();
        let c = s.complement_within(0, 10);
        assert_eq!(c.runs(), &[(0, 1), (5, 7), (10, 10)]);
        assert_eq!(s.complement_within(3, 3).runs(), &[]);
        assert_eq!(s.complement_within(5, 7).runs(), &[(5, 7)]);
    }

    #[test]
    fn clip_intersects() {
        let s = IntSpectrum::from_runs([(0, 10)]).unwrap();
        assert_eq!(s.clip(4, 6).runs(), &[(4, 6)]);
        assert_eq!(s.clip(11, 20).runs(), &[]);
    }

    #[test]
    fn json_shape() {
        let s = IntSpectrum::from_runs([(3, 3), (5, 9)]).unwrap();
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, r#"{"runs":[[3,3],[5,9]]}"#);
        let back: IntSpectrum = serde_json::from_str(&j).unwrap();
        assert_eq!(back, s);
    }
}
