//! Prime parking functions and the breakpoint decomposition.

use std::fmt;

use crate::error::{Error, Result};
use crate::parking::{breakpoints_of, PrefList};

/// Concatenates the tuples, shifting each one up by the total length of those before it.
pub fn pipe<T: AsRef<[usize]>>(tuples: &[T]) -> Result<Vec<usize>> {
    if tuples.is_empty() || tuples.iter().any(|t| t.as_ref().is_empty()) {
        return Err(Error::EmptyInput);
    }
    let mut out = Vec::with_capacity(tuples.iter().map(|t| t.as_ref().len()).sum());
    for t in tuples {
        let shift = out.len();
        out.extend(t.as_ref().iter().map(|&v| v + shift));
    }
    Ok(out)
}

/// `(1)` for `n = 1`, otherwise `(1, 1, 2, ..., n - 1)`.
pub fn unique_prime_upf(n: usize) -> PrefList {
    assert!(n >= 1, "length must be positive");
    PrefList::new_unchecked((0..n).map(|i| i.max(1)).collect())
}

impl PrefList {
    /// A parking function whose only breakpoint is `n`.
    pub fn is_prime(&self) -> Result<bool> {
        Ok(self.breakpoints()? == [self.len()])
    }

    /// Splits the parking rearrangement at its breakpoints.
    pub fn prime_decompose(&self) -> Result<PrimeComponentList> {
        let ordered = self.parking_rearrangement()?;
        let mut components = Vec::new();
        let mut start = 0;
        for b in breakpoints_of(ordered.as_slice()) {
            let comp = ordered.as_slice()[start..b]
                .iter()
                .map(|&v| v - start)
                .collect();
            components.push(PrefList::new_unchecked(comp));
            start = b;
        }
        Ok(PrimeComponentList { components })
    }

    /// Unit-interval test through the decomposition: every component must be the
    /// unique prime unit-interval parking function of its length.
    pub fn characterize_unit_interval(&self) -> Result<bool> {
        Ok(self
            .prime_decompose()?
            .components
            .iter()
            .all(|c| *c == unique_prime_upf(c.len())))
    }
}

/// Prime components of a parking function, in spot order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimeComponentList {
    pub components: Vec<PrefList>,
}

impl PrimeComponentList {
    /// Ordered component lengths (the ordered prime decomposition).
    pub fn lengths(&self) -> Vec<usize> {
        self.components.iter().map(PrefList::len).collect()
    }

    /// Number of components of length at least two.
    pub fn nontrivial_count(&self) -> usize {
        self.components.iter().filter(|c| c.len() >= 2).count()
    }

    pub fn reassemble(&self) -> Vec<usize> {
        let parts: Vec<&[usize]> = self.components.iter().map(PrefList::as_slice).collect();
        pipe(&parts).expect("decomposition is nonempty")
    }
}

impl fmt::Display for PrimeComponentList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pl(v: &[usize]) -> PrefList {
        PrefList::new(v.to_vec()).unwrap()
    }

    #[test]
    fn pipe_examples() {
        let a: &[usize] = &[1, 1, 2];
        let b: &[usize] = &[1, 1, 2, 3, 4];
        let c: &[usize] = &[1, 1];
        assert_eq!(
            pipe(&[a, b, c]).unwrap(),
            vec![1, 1, 2, 4, 4, 5, 6, 7, 9, 9]
        );
        let one: &[usize] = &[1];
        assert_eq!(pipe(&[one, c, one]).unwrap(), vec![1, 2, 2, 4]);
        assert_eq!(pipe(&[c]).unwrap(), vec![1, 1]);
        assert_eq!(pipe::<&[usize]>(&[]), Err(Error::EmptyInput));
        let empty: &[usize] = &[];
        assert_eq!(pipe(&[a, empty]), Err(Error::EmptyInput));
    }

    #[test]
    fn primality() {
        assert!(pl(&[1, 1, 2]).is_prime().unwrap());
        assert!(!pl(&[1, 1, 3]).is_prime().unwrap());
        assert!(pl(&[5, 2, 2, 1, 2, 5, 1]).is_prime().unwrap());
        assert!(pl(&[1, 3, 3]).is_prime().is_err());
    }

    #[test]
    fn unique_prime() {
        assert_eq!(unique_prime_upf(1), pl(&[1]));
        assert_eq!(unique_prime_upf(2), pl(&[1, 1]));
        assert_eq!(unique_prime_upf(4), pl(&[1, 1, 2, 3]));
        for n in 1..=8 {
            assert_eq!(unique_prime_upf(n).total_displacement().unwrap(), n - 1);
        }
    }

    #[test]
    fn decomposition_examples() {
        let d = pl(&[2, 2, 3, 6, 6, 1, 4]).prime_decompose().unwrap();
        assert_eq!(d.components, vec![pl(&[1]), pl(&[1, 1, 2, 3]), pl(&[1, 1])]);
        assert_eq!(d.to_string(), "1|1,1,2,3|1,1");
        assert_eq!(d.reassemble(), vec![1, 2, 2, 3, 4, 6, 6]);

        let d = pl(&[1, 2, 3]).prime_decompose().unwrap();
        assert_eq!(d.lengths(), vec![1, 1, 1]);

        let d = pl(&[2, 4, 2, 1]).prime_decompose().unwrap();
        assert_eq!(d.components, vec![pl(&[1]), pl(&[1, 1]), pl(&[1])]);
        assert_eq!(d.nontrivial_count(), 1);
    }

    #[test]
    fn characterization_examples() {
        assert!(pl(&[2, 2, 3, 6, 6, 1, 4])
            .characterize_unit_interval()
            .unwrap());
        assert!(!pl(&[5, 2, 2, 1, 2, 5, 1])
            .characterize_unit_interval()
            .unwrap());
        assert!(pl(&[1, 2, 3, 4, 5]).characterize_unit_interval().unwrap());
        assert!(!pl(&[1, 2, 3, 1, 5, 5, 6])
            .characterize_unit_interval()
            .unwrap());
    }
}
