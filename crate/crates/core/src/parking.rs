//! The parking protocol and the statistics read off from it.
//!
//! Cars `1..=n` arrive in order; car `i` drives to spot `a_i` and takes the first
//! free spot at or beyond it. Spots and cars are 1-indexed throughout.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{join, Permutation};

/// A preference list in `[n]^n`, not necessarily a parking function.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct PrefList(Vec<usize>);

/// Where each car parked and how far it was pushed past its preference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParkResult {
    /// `outcome.apply(i)` is the spot taken by car `i`.
    pub outcome: Permutation,
    /// `displacement[i - 1] = outcome(i) - a_i`.
    pub displacement: Vec<usize>,
}

impl ParkResult {
    pub fn total_displacement(&self) -> usize {
        self.displacement.iter().sum()
    }

    /// `sigma` with `sigma(j)` the car parked in spot `j`.
    pub fn car_in_spot(&self) -> Permutation {
        self.outcome.inverse()
    }
}

/// Nonzero displacements in weakly decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct DisplacementPartition(Vec<usize>);

impl DisplacementPartition {
    pub fn from_displacements(displacement: &[usize]) -> Self {
        let mut parts: Vec<usize> = displacement.iter().copied().filter(|&d| d > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        DisplacementPartition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The integer being partitioned.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for DisplacementPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.0, ","))
    }
}

impl PrefList {
    /// Checks that the list is nonempty and every entry lies in `1..=len`.
    pub fn new(prefs: Vec<usize>) -> Result<Self> {
        let n = prefs.len();
        if n == 0 {
            return Err(Error::EmptyInput);
        }
        if let Some((i, &a)) = prefs.iter().enumerate().find(|(_, &a)| a == 0 || a > n) {
            return Err(Error::InvalidPrefList(format!(
                "entry {} of car {} is outside 1..={n}",
                a,
                i + 1
            )));
        }
        Ok(PrefList(prefs))
    }

    pub(crate) fn new_unchecked(prefs: Vec<usize>) -> Self {
        debug_assert!(PrefList::new(prefs.clone()).is_ok());
        PrefList(prefs)
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

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Runs the parking protocol. Fails with the index of the first car that
    /// finds no free spot at or beyond its preference.
    pub fn park(&self) -> Result<ParkResult> {
        let n = self.0.len();
        let mut occupied = vec![false; n + 1];
        let mut outcome = Vec::with_capacity(n);
        let mut displacement = Vec::with_capacity(n);
        for (i, &a) in self.0.iter().enumerate() {
            let spot = (a..=n)
                .find(|&s| !occupied[s])
                .ok_or(Error::NotAParkingFunction { car: i + 1 })?;
            occupied[spot] = true;
            outcome.push(spot);
            displacement.push(spot - a);
        }
        Ok(ParkResult {
            outcome: Permutation::new_unchecked(outcome),
            displacement,
        })
    }

    /// Sorted-order test: the weakly increasing rearrangement `b` must satisfy `b_i <= i`.
    pub fn is_parking_function(&self) -> bool {
        let mut sorted = self.0.clone();
        sorted.sort_unstable();
        sorted.iter().enumerate().all(|(i, &b)| b <= i + 1)
    }

    pub fn total_displacement(&self) -> Result<usize> {
        Ok(self.park()?.total_displacement())
    }

    pub fn displacement_partition(&self) -> Result<DisplacementPartition> {
        Ok(DisplacementPartition::from_displacements(
            &self.park()?.displacement,
        ))
    }

    /// `a'_j` is the preference of the car that parks in spot `j`.
    pub fn parking_rearrangement(&self) -> Result<PrefList> {
        let sigma = self.park()?.car_in_spot();
        Ok(PrefList(sigma.gather(&self.0)?))
    }

    pub fn is_parking_ordered(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &a)| a <= i + 1)
    }

    /// All `k` in `1..=n` such that exactly `k` cars prefer one of the first `k` spots.
    pub fn breakpoints(&self) -> Result<Vec<usize>> {
        self.require_parking_function()?;
        Ok(breakpoints_of(&self.0))
    }

    /// Every car is displaced by at most one spot.
    pub fn is_unit_interval(&self) -> bool {
        match self.park() {
            Ok(r) => r.displacement.iter().all(|&d| d <= 1),
            Err(_) => false,
        }
    }

    pub(crate) fn require_parking_function(&self) -> Result<()> {
        self.park().map(|_| ())
    }

    /// Parks the cars, failing with [`Error::NotUnitInterval`] for anything outside `UPF_n`.
    pub(crate) fn require_unit_interval(&self) -> Result<ParkResult> {
        self.park()
            .ok()
            .filter(|r| r.displacement.iter().all(|&d| d <= 1))
            .ok_or(Error::NotUnitInterval)
    }
}

/// Breakpoints of any sequence over `[n]`; only meaningful for parking functions.
pub(crate) fn breakpoints_of(prefs: &[usize]) -> Vec<usize> {
    let n = prefs.len();
    let mut hist = vec![0usize; n + 1];
    for &a in prefs {
        hist[a] += 1;
    }
    let mut below = 0;
    let mut out = Vec::new();
    for (k, &h) in hist.iter().enumerate().skip(1) {
        below += h;
        if below == k {
            out.push(k);
        }
    }
    out
}

impl TryFrom<Vec<usize>> for PrefList {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        PrefList::new(v)
    }
}

impl From<PrefList> for Vec<usize> {
    fn from(p: PrefList) -> Vec<usize> {
        p.0
    }
}

impl fmt::Display for PrefList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.0, ","))
    }
}

/// Accepts `"2,4,2,1"`, or the compact digit string `"2421"` when there are at most 9 entries.
impl FromStr for PrefList {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PrefList::new(parse_int_list(s)?)
    }
}

/// Comma-separated integers, or a bare digit string of length at most 9 read one digit per entry.
pub(crate) fn parse_int_list(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::EmptyInput);
    }
    if !s.contains(',') && s.len() <= 9 && s.len() > 1 {
        return s
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::Parse(format!("unexpected character {c:?} in {s:?}")))
            })
            .collect();
    }
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<usize>()
                .map_err(|_| Error::Parse(format!("not an integer: {tok:?}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pl(v: &[usize]) -> PrefList {
        PrefList::new(v.to_vec()).unwrap()
    }

    #[test]
    fn park_examples() {
        let r = pl(&[2, 1, 3, 3]).park().unwrap();
        assert_eq!(r.outcome.as_slice(), &[2, 1, 3, 4]);
        assert_eq!(r.displacement, vec![0, 0, 0, 1]);

        assert_eq!(
            pl(&[1, 3, 3]).park(),
            Err(Error::NotAParkingFunction { car: 3 })
        );

        let r = pl(&[1, 2, 3, 4]).park().unwrap();
        assert_eq!(r.outcome.as_slice(), &[1, 2, 3, 4]);
        assert_eq!(r.displacement, vec![0; 4]);

        let r = pl(&[2, 5, 4, 6, 1, 1]).park().unwrap();
        assert_eq!(r.outcome.as_slice(), &[2, 5, 4, 6, 1, 3]);
        assert_eq!(r.car_in_spot().as_slice(), &[5, 1, 6, 3, 2, 4]);
    }

    #[test]
    fn recognition() {
        assert!(pl(&[2, 1, 3, 3]).is_parking_function());
        assert!(!pl(&[1, 3, 3]).is_parking_function());
        assert!(pl(&[1; 6]).is_parking_function());
    }

    #[test]
    fn displacement_examples() {
        assert_eq!(pl(&[2, 1, 3, 3]).total_displacement().unwrap(), 1);
        assert_eq!(pl(&[2, 2, 1, 1]).total_displacement().unwrap(), 4);
        assert_eq!(pl(&[1, 1, 1, 1]).total_displacement().unwrap(), 6);
        assert_eq!(
            pl(&[2, 2, 1, 1]).park().unwrap().displacement,
            vec![0, 1, 0, 3]
        );
        assert!(pl(&[1, 3, 3]).total_displacement().is_err());
    }

    #[test]
    fn displacement_partition_examples() {
        assert_eq!(
            pl(&[2, 2, 1, 1]).displacement_partition().unwrap().parts(),
            &[3, 1]
        );
        assert!(pl(&[1, 2, 3]).displacement_partition().unwrap().is_empty());
        assert_eq!(
            pl(&[1, 1, 1, 1]).displacement_partition().unwrap().parts(),
            &[3, 2, 1]
        );
        assert_eq!(
            pl(&[2, 2, 1, 1])
                .displacement_partition()
                .unwrap()
                .to_string(),
            "(3,1)"
        );
    }

    #[test]
    fn rearrangement_examples() {
        assert_eq!(
            pl(&[2, 5, 4, 6, 1, 1]).parking_rearrangement().unwrap(),
            pl(&[1, 2, 1, 4, 5, 6])
        );
        assert_eq!(
            pl(&[1, 2, 3]).parking_rearrangement().unwrap(),
            pl(&[1, 2, 3])
        );
        assert_eq!(
            pl(&[3, 1, 1]).parking_rearrangement().unwrap(),
            pl(&[1, 1, 3])
        );
        assert_eq!(
            pl(&[1, 3, 3]).parking_rearrangement(),
            Err(Error::NotAParkingFunction { car: 3 })
        );
    }

    #[test]
    fn parking_order_examples() {
        assert!(pl(&[1, 2, 1, 4, 5, 6]).is_parking_ordered());
        assert!(!pl(&[2, 1]).is_parking_ordered());
        assert!(pl(&[1, 1, 2, 3]).is_parking_ordered());
    }

    #[test]
    fn breakpoint_examples() {
        assert_eq!(pl(&[1, 1, 3]).breakpoints().unwrap(), vec![2, 3]);
        assert_eq!(pl(&[1, 1, 2]).breakpoints().unwrap(), vec![3]);
        assert_eq!(pl(&[2, 4, 2, 1]).breakpoints().unwrap(), vec![1, 3, 4]);
        assert!(pl(&[2, 2]).breakpoints().is_err());
    }

    #[test]
    fn unit_interval_examples() {
        assert!(pl(&[2, 1, 3, 3]).is_unit_interval());
        assert!(!pl(&[1, 1, 1]).is_unit_interval());
        assert!(pl(&[1, 1, 2]).is_unit_interval());
        assert!(!pl(&[1, 3, 3]).is_unit_interval());
    }

    #[test]
    fn text_forms() {
        assert_eq!("2,4,2,1".parse::<PrefList>().unwrap(), pl(&[2, 4, 2, 1]));
        assert_eq!("2421".parse::<PrefList>().unwrap(), pl(&[2, 4, 2, 1]));
        assert_eq!("1".parse::<PrefList>().unwrap(), pl(&[1]));
        assert_eq!(pl(&[2, 4, 2, 1]).to_string(), "2,4,2,1");
        assert!("".parse::<PrefList>().is_err());
        assert!("1,x".parse::<PrefList>().is_err());
        assert!("1,5".parse::<PrefList>().is_err());
        assert!(PrefList::new(vec![]).is_err());
    }
}
