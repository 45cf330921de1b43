//! Permutations of `[n]` in one-line notation.
//!
//! Two ways of letting a permutation act on a tuple are provided and kept
//! separately named:
//!
//! * [`Permutation::gather`]: `result[i] = values[sigma(i)]`, i.e.
//!   `sigma(a) = (a_sigma(1), ..., a_sigma(n))`. This is how the parking
//!   rearrangement is formed.
//! * [`Permutation::scatter`]: `result[sigma(j)] = values[j]`, equivalently a
//!   gather by the inverse. This is what the map from ordered set partitions
//!   to unit-interval parking functions needs.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `1..=n` stored in one-line notation (1-indexed values).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotAPermutation { n });
            }
            seen[v] = true;
        }
        Ok(Permutation(one_line))
    }

    pub(crate) fn new_unchecked(one_line: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(one_line.clone()).is_ok());
        Permutation(one_line)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// `sigma(i)` for `i` in `1..=n`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                actual: other.len(),
            });
        }
        Ok(Permutation(
            other.0.iter().map(|&x| self.0[x - 1]).collect(),
        ))
    }

    /// `result[i] = values[sigma(i)]`.
    pub fn gather<T: Clone>(&self, values: &[T]) -> Result<Vec<T>> {
        self.check_len(values.len())?;
        Ok(self.0.iter().map(|&s| values[s - 1].clone()).collect())
    }

    /// `result[sigma(j)] = values[j]`.
    pub fn scatter<T: Clone>(&self, values: &[T]) -> Result<Vec<T>> {
        self.check_len(values.len())?;
        let mut slots: Vec<Option<T>> = vec![None; values.len()];
        for (j, &s) in self.0.iter().enumerate() {
            slots[s - 1] = Some(values[j].clone());
        }
        Ok(slots.into_iter().map(|v| v.expect("permutation")).collect())
    }

    fn check_len(&self, actual: usize) -> Result<()> {
        if actual != self.0.len() {
            return Err(Error::LengthMismatch {
                expected: self.0.len(),
                actual,
            });
        }
        Ok(())
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.0, ","))
    }
}

/// All permutations of `[n]` in lexicographic order.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    use itertools::Itertools;
    (1..=n).permutations(n).map(Permutation::new_unchecked)
}

pub(crate) fn join(values: &[usize], sep: &str) -> String {
    let mut out = String::new();
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            out.push_str(sep);
        }
        out.push_str(&v.to_string());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn scatter_example() {
        assert_eq!(
            p(&[4, 1, 3, 2]).scatter(&[1, 2, 2, 4]).unwrap(),
            vec![2, 4, 2, 1]
        );
        assert_eq!(p(&[1, 2, 3]).scatter(&[5, 6, 7]).unwrap(), vec![5, 6, 7]);
        assert_eq!(p(&[2, 1]).scatter(&[7, 9]).unwrap(), vec![9, 7]);
    }

    #[test]
    fn gather_differs_from_scatter() {
        assert_eq!(
            p(&[4, 1, 3, 2]).gather(&[1, 2, 2, 4]).unwrap(),
            vec![4, 1, 2, 2]
        );
    }

    #[test]
    fn scatter_is_gather_by_inverse() {
        for sigma in all_permutations(4) {
            let values = [10, 20, 30, 40];
            assert_eq!(
                sigma.scatter(&values).unwrap(),
                sigma.inverse().gather(&values).unwrap()
            );
        }
    }

    #[test]
    fn length_mismatch_is_reported() {
        assert_eq!(
            p(&[2, 1]).scatter(&[1, 2, 3]),
            Err(Error::LengthMismatch {
                expected: 2,
                actual: 3
            })
        );
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 3]).is_err());
    }

    #[test]
    fn compose_applies_right_first() {
        let v = p(&[2, 3, 1]);
        let w = p(&[2, 1, 3]);
        let vw = v.compose(&w).unwrap();
        for x in 1..=3 {
            assert_eq!(vw.apply(x), v.apply(w.apply(x)));
        }
    }
}
