//! The bijection between ordered set partitions of `[n]` and unit-interval
//! parking functions of length `n`.
//!
//! `psi` replaces each block `B_i` by the prime `(1, 1, 2, ..., |B_i| - 1)`,
//! pipes them together and scatters the result along the concatenation of the
//! blocks. `phi` reads the cars spot by spot and cuts at the breakpoints.

use rayon::prelude::*;

use crate::error::Result;
use crate::limits::Limits;
use crate::osp::{enumerate_osps, OrderedSetPartition};
use crate::parking::PrefList;
use crate::perm::Permutation;
use crate::prime::{pipe, unique_prime_upf};

/// `result[sigma(j)] = values[j]`.
pub fn scatter<T: Clone>(sigma: &Permutation, values: &[T]) -> Result<Vec<T>> {
    sigma.scatter(values)
}

pub fn psi(p: &OrderedSetPartition) -> PrefList {
    let primes: Vec<PrefList> = p
        .blocks()
        .iter()
        .map(|b| unique_prime_upf(b.len()))
        .collect();
    let slices: Vec<&[usize]> = primes.iter().map(PrefList::as_slice).collect();
    let piped = pipe(&slices).expect("blocks are nonempty");
    let values = p.concatenation().scatter(&piped).expect("lengths agree");
    PrefList::new_unchecked(values)
}

pub fn phi(prefs: &PrefList) -> Result<OrderedSetPartition> {
    let parked = prefs.require_unit_interval()?;
    let sigma = parked.car_in_spot();
    let cars = sigma.as_slice();
    let mut blocks = Vec::new();
    let mut start = 0;
    for b in prefs.breakpoints()? {
        let mut block = cars[start..b].to_vec();
        block.sort_unstable();
        blocks.push(block);
        start = b;
    }
    Ok(OrderedSetPartition::new_unchecked(prefs.len(), blocks))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundtripReport {
    pub n: usize,
    /// Ordered set partitions `p` checked for `phi(psi(p)) == p`.
    pub osp_checked: usize,
    /// Unit-interval parking functions `a` checked for `psi(phi(a)) == a`.
    pub upf_checked: usize,
    pub failures: usize,
    pub first_counterexample: Option<String>,
}

impl RoundtripReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Checks both compositions over every ordered set partition of `[n]` and every
/// unit-interval parking function of length `n`. The parking functions are taken
/// from a brute-force sweep so the check does not go through `psi` to find them.
pub fn roundtrip_check(n: usize, limits: &Limits) -> Result<RoundtripReport> {
    limits.check_exhaustive(n)?;
    let osps: Vec<OrderedSetPartition> = enumerate_osps(n, None, limits)?.collect();
    let osp_failures: Vec<String> = osps
        .par_iter()
        .filter_map(|p| {
            let back = phi(&psi(p)).ok();
            (back.as_ref() != Some(p)).then(|| format!("phi(psi({p})) != {p}"))
        })
        .collect();
    let upfs: Vec<PrefList> = crate::oracle::brute_upf(
        n,
        &Limits {
            max_brute_n: limits.max_exhaustive_n,
            ..*limits
        },
    )?
    .collect();
    let upf_failures: Vec<String> = upfs
        .par_iter()
        .filter_map(|a| match phi(a) {
            Ok(p) if psi(&p) == *a => None,
            _ => Some(format!("psi(phi({a})) != {a}")),
        })
        .collect();
    let first_counterexample = osp_failures.first().or(upf_failures.first()).cloned();
    Ok(RoundtripReport {
        n,
        osp_checked: osps.len(),
        upf_checked: upfs.len(),
        failures: osp_failures.len() + upf_failures.len(),
        first_counterexample,
    })
}
