//! Brute-force enumeration over `[n]^n` and the cross-checks built on it.
//!
//! Everything here is computed from raw preference lists and the parking
//! protocol, then compared against the closed forms and the structural maps.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::bijection::{phi, psi, roundtrip_check};
use crate::counting::{
    factorial, fubini, fubini_alternating_sum, lah_displacement_one, parking_function_count,
    prime_parking_function_count, t_count,
};
use crate::dyck::{is_upf_via_dyck, pf_to_labeled_dyck};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::osp::{enumerate_osps, is_fubini_ranking, OrderedSetPartition};
use crate::parking::PrefList;
use crate::perm::all_permutations;
use crate::permutohedron::{build_face_lattice, face_vertices, vertex_coordinates};
use crate::prime::unique_prime_upf;
use crate::symmetry::{
    act_on_osp, count_entry_permutations_preserving_upf, orbit, orbit_size, same_orbit, stabilizer,
};

/// All of `[n]^n` in lexicographic order, optionally with the first entry fixed.
#[derive(Debug, Clone)]
pub struct AllLists {
    n: usize,
    fixed: usize,
    current: Vec<usize>,
    started: bool,
    done: bool,
}

impl AllLists {
    pub fn new(n: usize) -> Self {
        AllLists {
            n,
            fixed: 0,
            current: vec![1; n],
            started: false,
            done: n == 0,
        }
    }

    pub fn with_first(n: usize, first: usize) -> Self {
        let mut it = AllLists::new(n);
        it.fixed = 1;
        it.current[0] = first;
        it
    }
}

impl Iterator for AllLists {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if self.started {
            let mut pos = self.n;
            loop {
                if pos == self.fixed {
                    self.done = true;
                    return None;
                }
                pos -= 1;
                if self.current[pos] < self.n {
                    self.current[pos] += 1;
                    break;
                }
                self.current[pos] = 1;
            }
        }
        self.started = true;
        Some(self.current.clone())
    }
}

/// Parking functions of length `n` in lexicographic order.
///
/// Prefixes are abandoned as soon as more than `n - j + 1` entries are `>= j`
/// for some `j`; every surviving list is still passed through
/// [`PrefList::is_parking_function`].
#[derive(Debug, Clone)]
pub struct BrutePf {
    n: usize,
    fixed: usize,
    current: Vec<usize>,
    /// `at_least[j]` = entries of the current prefix that are `>= j`.
    at_least: Vec<usize>,
    started: bool,
    done: bool,
}

impl BrutePf {
    fn new(n: usize, first: Option<usize>) -> Self {
        let mut it = BrutePf {
            n,
            fixed: 0,
            current: Vec::with_capacity(n),
            at_least: vec![0; n + 2],
            started: false,
            done: false,
        };
        if let Some(v) = first {
            if !it.fits(v) {
                it.done = true;
                return it;
            }
            it.push(v);
            it.fixed = 1;
        }
        it
    }

    fn fits(&self, v: usize) -> bool {
        (1..=v).all(|j| self.at_least[j] < self.n - j + 1)
    }

    fn push(&mut self, v: usize) {
        for j in 1..=v {
            self.at_least[j] += 1;
        }
        self.current.push(v);
    }

    fn pop(&mut self) -> usize {
        let v = self.current.pop().expect("nonempty prefix");
        for j in 1..=v {
            self.at_least[j] -= 1;
        }
        v
    }

    fn fill_ones(&mut self) {
        while self.current.len() < self.n {
            self.push(1);
        }
    }

    fn advance(&mut self) -> bool {
        if !self.started {
            self.started = true;
            self.fill_ones();
            return true;
        }
        while self.current.len() > self.fixed {
            let v = self.pop();
            if let Some(next) = (v + 1..=self.n).find(|&c| self.fits(c)) {
                self.push(next);
                self.fill_ones();
                return true;
            }
        }
        false
    }
}

impl Iterator for BrutePf {
    type Item = PrefList;

    fn next(&mut self) -> Option<PrefList> {
        while !self.done {
            if !self.advance() {
                self.done = true;
                break;
            }
            let candidate = PrefList::new_unchecked(self.current.clone());
            if candidate.is_parking_function() {
                return Some(candidate);
            }
        }
        None
    }
}

pub fn brute_pf(n: usize, limits: &Limits) -> Result<BrutePf> {
    check_brute(n, limits)?;
    Ok(BrutePf::new(n, None))
}

/// The shard of [`brute_pf`] whose first car prefers `first`.
pub fn brute_pf_shard(n: usize, first: usize, limits: &Limits) -> Result<BrutePf> {
    check_brute(n, limits)?;
    if first == 0 || first > n {
        return Err(Error::Domain(format!(
            "first preference {first} outside 1..={n}"
        )));
    }
    Ok(BrutePf::new(n, Some(first)))
}

pub fn brute_upf(n: usize, limits: &Limits) -> Result<impl Iterator<Item = PrefList>> {
    Ok(brute_pf(n, limits)?.filter(PrefList::is_unit_interval))
}

pub fn brute_ppf(n: usize, limits: &Limits) -> Result<impl Iterator<Item = PrefList>> {
    Ok(brute_pf(n, limits)?.filter(|p| p.is_prime().unwrap_or(false)))
}

fn check_brute(n: usize, limits: &Limits) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    limits.check_brute(n)
}

/// Runs `f` over every parking function of length `n`, sharded by first entry,
/// and merges the per-shard results in shard order.
pub fn par_fold_pf<T, F, M>(n: usize, limits: &Limits, init: T, f: F, merge: M) -> Result<T>
where
    T: Send + Sync + Clone,
    F: Fn(&mut T, &PrefList) + Sync,
    M: Fn(T, T) -> T,
{
    check_brute(n, limits)?;
    let shards: Vec<T> = (1..=n)
        .into_par_iter()
        .map(|first| {
            let mut acc = init.clone();
            for pf in BrutePf::new(n, Some(first)) {
                f(&mut acc, &pf);
            }
            acc
        })
        .collect();
    Ok(shards.into_iter().fold(init, merge))
}

/// `k -> |{a in UPF_n : D(a) = k}|`.
pub fn upf_displacement_histogram(n: usize, limits: &Limits) -> Result<BTreeMap<usize, BigUint>> {
    let counts = par_fold_pf(
        n,
        limits,
        vec![0usize; n],
        |acc, pf| {
            let r = pf.park().expect("parking function");
            if r.displacement.iter().all(|&d| d <= 1) {
                acc[r.total_displacement()] += 1;
            }
        },
        |a, b| a.iter().zip(&b).map(|(x, y)| x + y).collect(),
    )?;
    Ok(counts
        .into_iter()
        .enumerate()
        .map(|(k, c)| (k, BigUint::from(c)))
        .collect())
}

/// `psi` applied to every ordered set partition of `[n]`.
pub fn generate_upf_via_bijection(
    n: usize,
    limits: &Limits,
) -> Result<impl Iterator<Item = PrefList>> {
    Ok(enumerate_osps(n, None, limits)?.map(|p| psi(&p)))
}

/// Parking functions with total displacement exactly one, by brute force.
pub fn displacement_one_count(n: usize, limits: &Limits) -> Result<BigUint> {
    let c = par_fold_pf(
        n,
        limits,
        0usize,
        |acc, pf| {
            if pf.total_displacement() == Ok(1) {
                *acc += 1;
            }
        },
        |a, b| a + b,
    )?;
    Ok(BigUint::from(c))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub status: CheckStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumerationCounts {
    pub pf: String,
    pub upf: String,
    pub ppf: String,
    pub fubini_rankings: String,
    pub upf_by_displacement: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumerationReport {
    pub n: usize,
    pub counts: EnumerationCounts,
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl EnumerationReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }
}

#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn eq<T: PartialEq + ToString>(&mut self, name: &str, expected: T, actual: T) {
        let status = if expected == actual {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        self.0.push(Check {
            name: name.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            status,
        });
    }

    /// A check phrased as "no violations found".
    fn none(&mut self, name: &str, violations: usize) {
        self.eq(
            name,
            "0 violations".to_string(),
            format!("{violations} violations"),
        );
    }

    fn skip(&mut self, name: &str, why: &str) {
        self.0.push(Check {
            name: name.to_string(),
            expected: String::new(),
            actual: why.to_string(),
            status: CheckStatus::Skipped,
        });
    }
}

/// Per-parking-function tallies gathered in one sharded sweep.
#[derive(Debug, Clone, Default)]
struct PfSweep {
    pf: usize,
    upf: usize,
    ppf: usize,
    prime_upf: Vec<Vec<usize>>,
    hist: Vec<usize>,
    displacement_one: usize,
    max_displacement: usize,
    max_attained_by: Vec<Vec<usize>>,
    identity_violations: usize,
    rearrangement_violations: usize,
    breakpoint_violations: usize,
    pipe_violations: usize,
    prime_displacement_violations: usize,
    characterization_violations: usize,
    dyck_return_violations: usize,
    phi_block_violations: usize,
}

impl PfSweep {
    fn new(n: usize) -> Self {
        PfSweep {
            hist: vec![0; n],
            ..Default::default()
        }
    }

    fn observe(&mut self, pf: &PrefList) {
        let n = pf.len();
        let parked = pf.park().expect("parking function");
        let total = parked.total_displacement();
        let unit = parked.displacement.iter().all(|&d| d <= 1);
        self.pf += 1;

        let sum: usize = pf.as_slice().iter().sum();
        if total + sum != n * (n + 1) / 2 {
            self.identity_violations += 1;
        }
        if total == 1 {
            self.displacement_one += 1;
        }
        match total.cmp(&self.max_displacement) {
            std::cmp::Ordering::Greater => {
                self.max_displacement = total;
                self.max_attained_by = vec![pf.as_slice().to_vec()];
            }
            std::cmp::Ordering::Equal => self.max_attained_by.push(pf.as_slice().to_vec()),
            std::cmp::Ordering::Less => {}
        }

        let ordered = pf.parking_rearrangement().expect("parking function");
        if !ordered.is_parking_ordered()
            || ordered.displacement_partition() != pf.displacement_partition()
        {
            self.rearrangement_violations += 1;
        }

        let breakpoints = pf.breakpoints().expect("parking function");
        let mut sorted = pf.as_slice().to_vec();
        sorted.sort_unstable();
        let sorted = PrefList::new_unchecked(sorted);
        if sorted.breakpoints().ok().as_ref() != Some(&breakpoints)
            || ordered.breakpoints().ok().as_ref() != Some(&breakpoints)
        {
            self.breakpoint_violations += 1;
        }

        let decomposition = pf.prime_decompose().expect("parking function");
        if decomposition.reassemble() != ordered.as_slice()
            || decomposition
                .components
                .iter()
                .any(|c| c.is_prime() != Ok(true))
        {
            self.pipe_violations += 1;
        }

        let prime = breakpoints == [n];
        if prime {
            self.ppf += 1;
        }

        let via_components = pf.characterize_unit_interval().expect("parking function");
        let via_dyck = is_upf_via_dyck(pf).expect("parking function");
        if via_components != unit || via_dyck != unit {
            self.characterization_violations += 1;
        }

        let path = pf_to_labeled_dyck(pf).expect("parking function");
        if path.returns() != breakpoints {
            self.dyck_return_violations += 1;
        }

        if unit {
            self.upf += 1;
            self.hist[total] += 1;
            if prime {
                self.prime_upf.push(pf.as_slice().to_vec());
            }
            if prime != (total == n - 1) {
                self.prime_displacement_violations += 1;
            }
            match phi(pf) {
                Ok(p) if p.block_count() + total == n => {}
                _ => self.phi_block_violations += 1,
            }
        }
    }

    fn merge(mut self, other: PfSweep) -> PfSweep {
        self.pf += other.pf;
        self.upf += other.upf;
        self.ppf += other.ppf;
        self.prime_upf.extend(other.prime_upf);
        for (a, b) in self.hist.iter_mut().zip(&other.hist) {
            *a += b;
        }
        self.displacement_one += other.displacement_one;
        match other.max_displacement.cmp(&self.max_displacement) {
            std::cmp::Ordering::Greater => {
                self.max_displacement = other.max_displacement;
                self.max_attained_by = other.max_attained_by;
            }
            std::cmp::Ordering::Equal => self.max_attained_by.extend(other.max_attained_by),
            std::cmp::Ordering::Less => {}
        }
        self.identity_violations += other.identity_violations;
        self.rearrangement_violations += other.rearrangement_violations;
        self.breakpoint_violations += other.breakpoint_violations;
        self.pipe_violations += other.pipe_violations;
        self.prime_displacement_violations += other.prime_displacement_violations;
        self.characterization_violations += other.characterization_violations;
        self.dyck_return_violations += other.dyck_return_violations;
        self.phi_block_violations += other.phi_block_violations;
        self
    }
}

/// Sizes up to which the per-element group checks run over every `UPF_n`.
const EXHAUSTIVE_GROUP_N: usize = 6;
const SAME_ORBIT_PAIRS_N: usize = 5;

/// Runs every cross-check for one `n` and collects the outcomes.
pub fn verify_all(n: usize, limits: &Limits) -> Result<EnumerationReport> {
    check_brute(n, limits)?;
    limits.check_exhaustive(n)?;
    let mut checks = Checks::default();
    let big = BigUint::from;

    // [n]^n sweep: protocol versus sorted test, and Fubini rankings.
    let (disagreements, rankings, ranking_closure) = (1..=n)
        .into_par_iter()
        .map(|first| {
            let mut disagree = 0usize;
            let mut rankings = 0usize;
            let mut closure = 0usize;
            for list in AllLists::with_first(n, first) {
                let prefs = PrefList::new_unchecked(list.clone());
                if prefs.park().is_ok() != prefs.is_parking_function() {
                    disagree += 1;
                }
                if is_fubini_ranking(&list) {
                    rankings += 1;
                    let mut reversed = list.clone();
                    reversed.reverse();
                    let mut rotated = list.clone();
                    rotated.rotate_left(1);
                    if !is_fubini_ranking(&reversed) || !is_fubini_ranking(&rotated) {
                        closure += 1;
                    }
                }
            }
            (disagree, rankings, closure)
        })
        .reduce(|| (0, 0, 0), |a, b| (a.0 + b.0, a.1 + b.1, a.2 + b.2));
    checks.none("park succeeds iff sorted test passes", disagreements);
    checks.eq("Fubini rankings = fubini(n)", fubini(n), big(rankings));
    checks.none("Fubini rankings closed under permutation", ranking_closure);

    let sweep = par_fold_pf(
        n,
        limits,
        PfSweep::new(n),
        |acc, pf| acc.observe(pf),
        PfSweep::merge,
    )?;
    checks.eq(
        "|PF_n| = (n+1)^(n-1)",
        parking_function_count(n),
        big(sweep.pf),
    );
    checks.eq("|UPF_n| = fubini(n)", fubini(n), big(sweep.upf));
    checks.eq(
        "fubini: alternating sum = Stirling sum",
        fubini(n),
        fubini_alternating_sum(n),
    );
    checks.eq(
        "|PPF_n| = (n-1)^(n-1)",
        prime_parking_function_count(n),
        big(sweep.ppf),
    );
    for (k, &count) in sweep.hist.iter().enumerate() {
        checks.eq(
            &format!("|UPF_n with D = {k}| = T(n, n-{k})"),
            t_count(n, n - k)?,
            big(count),
        );
    }
    checks.none("D = n(n+1)/2 - sum of entries", sweep.identity_violations);
    checks.eq(
        "max displacement = n(n-1)/2",
        n * (n - 1) / 2,
        sweep.max_displacement,
    );
    checks.eq(
        "max displacement attained only by all ones",
        format!("{:?}", vec![vec![1usize; n]]),
        format!("{:?}", sweep.max_attained_by),
    );
    checks.eq(
        "|D = 1| = n!(n-1)/2",
        lah_displacement_one(n),
        big(sweep.displacement_one),
    );
    if n >= 2 {
        checks.eq(
            "|D = 1| = T(n, n-1)",
            t_count(n, n - 1)?,
            big(sweep.displacement_one),
        );
    }
    checks.none(
        "rearrangement is parking-ordered with equal partition",
        sweep.rearrangement_violations,
    );
    checks.none(
        "breakpoints depend only on the multiset",
        sweep.breakpoint_violations,
    );
    checks.none(
        "pipe of prime components = rearrangement",
        sweep.pipe_violations,
    );
    checks.eq(
        "unique prime unit-interval parking function",
        format!("{:?}", vec![unique_prime_upf(n).into_vec()]),
        format!("{:?}", sweep.prime_upf),
    );
    checks.none(
        "unit-interval: prime iff D = n-1",
        sweep.prime_displacement_violations,
    );
    checks.none(
        "three unit-interval tests agree",
        sweep.characterization_violations,
    );
    checks.none("Dyck returns = breakpoints", sweep.dyck_return_violations);
    checks.none("blocks of phi = n - D", sweep.phi_block_violations);

    let roundtrip = roundtrip_check(n, limits)?;
    checks.eq(
        "psi/phi round trips",
        format!("{} + {} round trips, 0 failures", fubini(n), fubini(n)),
        format!(
            "{} + {} round trips, {} failures",
            roundtrip.osp_checked, roundtrip.upf_checked, roundtrip.failures
        ),
    );

    let brute: BTreeSet<PrefList> = brute_upf(n, limits)?.collect();
    let image: BTreeSet<PrefList> = generate_upf_via_bijection(n, limits)?.collect();
    checks.eq("image of psi = brute-force UPF_n", brute.len(), image.len());
    checks.eq(
        "image of psi equals brute force as sets",
        true,
        brute == image,
    );

    let osps: Vec<OrderedSetPartition> = enumerate_osps(n, None, limits)?.collect();
    let psi_displacement = osps
        .par_iter()
        .filter(|p| psi(p).total_displacement() != Ok(n - p.block_count()))
        .count();
    checks.none("D(psi(p)) = n - blocks(p)", psi_displacement);

    group_checks(n, limits, &brute, &mut checks)?;
    lattice_checks(n, limits, &mut checks)?;

    let counts = EnumerationCounts {
        pf: sweep.pf.to_string(),
        upf: sweep.upf.to_string(),
        ppf: sweep.ppf.to_string(),
        fubini_rankings: rankings.to_string(),
        upf_by_displacement: sweep.hist.iter().map(ToString::to_string).collect(),
    };
    let passed = checks.0.iter().all(|c| c.status != CheckStatus::Fail);
    Ok(EnumerationReport {
        n,
        counts,
        checks: checks.0,
        passed,
    })
}

/// Number of `w` in `Sym_n` fixing the face labelled by `prefs`.
pub fn brute_stabilizer_order(prefs: &PrefList) -> Result<usize> {
    let face = phi(prefs)?;
    let mut fixed = 0;
    for w in all_permutations(prefs.len()) {
        if act_on_osp(&w, &face)? == face {
            fixed += 1;
        }
    }
    Ok(fixed)
}

fn group_checks(
    n: usize,
    limits: &Limits,
    upfs: &BTreeSet<PrefList>,
    checks: &mut Checks,
) -> Result<()> {
    let n_fact = factorial(n);
    // One representative per orbit beyond the exhaustive size.
    let subjects: Vec<&PrefList> = if n <= EXHAUSTIVE_GROUP_N {
        upfs.iter().collect()
    } else {
        let mut seen = HashSet::new();
        upfs.iter()
            .filter(|a| seen.insert(a.prime_decompose().map(|d| d.lengths()).ok()))
            .collect()
    };
    let label = if n <= EXHAUSTIVE_GROUP_N {
        "all UPFs"
    } else {
        "one UPF per orbit"
    };

    let violations: Vec<(usize, usize, usize, usize)> = subjects
        .par_iter()
        .map(|a| {
            let mut v = (0, 0, 0, 0);
            let orb = orbit(a, limits).expect("unit-interval");
            let stab = brute_stabilizer_order(a).expect("unit-interval");
            let described = stabilizer(a).expect("unit-interval");
            if BigUint::from(orb.len()) != orbit_size(a).expect("unit-interval")
                || BigUint::from(orb.len() * stab) != n_fact
            {
                v.0 += 1;
            }
            if BigUint::from(stab) != described.order {
                v.1 += 1;
            }
            let count = count_entry_permutations_preserving_upf(a, limits).expect("unit-interval");
            if !count.agrees() || count.enumerated.is_none() {
                v.2 += 1;
            }
            let target = a.displacement_partition().expect("parking function");
            let prefix_violation = all_permutations(n).any(|w| {
                let b = PrefList::new_unchecked(w.gather(a.as_slice()).expect("same length"));
                let keeps = b.displacement_partition().ok() == Some(target.clone());
                b.is_unit_interval() != keeps
            });
            let action_violation = orb.iter().any(|b| {
                b.total_displacement() != a.total_displacement()
                    || same_orbit(a, b).ok() != Some(true)
            });
            if prefix_violation || action_violation {
                v.3 += 1;
            }
            v
        })
        .collect();
    let sum = |f: fn(&(usize, usize, usize, usize)) -> usize| violations.iter().map(f).sum();
    checks.none(&format!("orbit-stabilizer ({label})"), sum(|v| v.0));
    checks.none(
        &format!("stabilizer order = prod l(j)! ({label})"),
        sum(|v| v.1),
    );
    checks.none(
        &format!("2^t n!/prod l(j)! = direct count ({label})"),
        sum(|v| v.2),
    );
    checks.none(
        &format!("action and rearrangement invariants ({label})"),
        sum(|v| v.3),
    );

    if n <= SAME_ORBIT_PAIRS_N {
        let orbits: Vec<(PrefList, BTreeSet<PrefList>)> = upfs
            .iter()
            .map(|a| {
                (
                    a.clone(),
                    orbit(a, limits)
                        .expect("unit-interval")
                        .into_iter()
                        .collect(),
                )
            })
            .collect();
        let bad = orbits
            .par_iter()
            .map(|(a, orb)| {
                upfs.iter()
                    .filter(|b| same_orbit(a, b).ok() != Some(orb.contains(*b)))
                    .count()
            })
            .sum();
        checks.none("same_orbit iff orbit membership", bad);
    } else {
        checks.skip(
            "same_orbit iff orbit membership",
            "pairwise check runs for n <= 5",
        );
    }
    Ok(())
}

fn lattice_checks(n: usize, limits: &Limits, checks: &mut Checks) -> Result<()> {
    if limits.check_lattice(n).is_err() {
        checks.skip("face lattice checks", "n above the lattice limit");
        return Ok(());
    }
    let lat = build_face_lattice(n, limits)?;
    let f = lat.f_vector();
    let expected: Vec<BigUint> = (0..n).map(|d| t_count(n, n - d)).collect::<Result<_>>()?;
    let got: Vec<BigUint> = f.iter().map(|&c| BigUint::from(c)).collect();
    checks.eq(
        "f-vector = T(n, n-d)",
        format!("{expected:?}"),
        format!("{got:?}"),
    );
    let euler: i64 = f
        .iter()
        .enumerate()
        .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
        .sum();
    checks.eq("Euler relation", 1, euler);

    let bad_faces = lat
        .faces
        .par_iter()
        .enumerate()
        .filter(|(id, face)| {
            let verts = face_vertices(face);
            let order = stabilizer(&face.upf_label).map(|s| s.order).ok();
            let count_ok =
                Some(BigUint::from(verts.len())) == order && verts.len() == lat.vertices[*id].len();
            let geometry_ok = verts.iter().all(|u| {
                let x = vertex_coordinates(u);
                let mut prefix = 0;
                let mut sum = 0;
                face.osp.blocks().iter().all(|b| {
                    prefix += b.len();
                    sum += b.iter().map(|&i| x[i - 1]).sum::<usize>();
                    sum == prefix * (prefix + 1) / 2
                })
            });
            let label_ok = face.upf_label.total_displacement() == Ok(face.dimension)
                && face.upf_label.prime_decompose().map(|d| d.lengths()).ok()
                    == Some(face.comb_type.clone());
            !(count_ok && geometry_ok && label_ok)
        })
        .count();
    checks.none("face vertices, hyperplanes and labels", bad_faces);
    let bad_covers = lat
        .covers
        .iter()
        .filter(|&&(c, p)| lat.faces[p].dimension != lat.faces[c].dimension + 1)
        .count();
    checks.none("covers raise dimension by one", bad_covers);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_lists_counts() {
        assert_eq!(AllLists::new(3).count(), 27);
        assert_eq!(AllLists::with_first(3, 2).count(), 9);
        assert!(AllLists::with_first(3, 2).all(|l| l[0] == 2));
    }

    #[test]
    fn brute_pf_examples() {
        let limits = Limits::default();
        let two: Vec<String> = brute_pf(2, &limits)
            .unwrap()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(two, ["1,1", "1,2", "2,1"]);
        assert_eq!(brute_pf(1, &limits).unwrap().count(), 1);
        assert_eq!(brute_pf(4, &limits).unwrap().count(), 125);
        assert!(brute_pf(8, &limits).is_err());
    }

    #[test]
    fn pruned_sweep_matches_unpruned_filter() {
        let limits = Limits::default();
        for n in 1..=5 {
            let pruned: Vec<PrefList> = brute_pf(n, &limits).unwrap().collect();
            let plain: Vec<PrefList> = AllLists::new(n)
                .map(PrefList::new_unchecked)
                .filter(PrefList::is_parking_function)
                .collect();
            assert_eq!(pruned, plain);
            let sharded: usize = (1..=n)
                .map(|f| brute_pf_shard(n, f, &limits).unwrap().count())
                .sum();
            assert_eq!(sharded, plain.len());
        }
    }

    #[test]
    fn histograms() {
        let limits = Limits::default();
        let h = upf_displacement_histogram(3, &limits).unwrap();
        assert_eq!(
            h.values().map(|c| c.to_string()).collect::<Vec<_>>(),
            ["6", "6", "1"]
        );
        let h = upf_displacement_histogram(4, &limits).unwrap();
        assert_eq!(
            h.values().map(|c| c.to_string()).collect::<Vec<_>>(),
            ["24", "36", "14", "1"]
        );
        let h = upf_displacement_histogram(1, &limits).unwrap();
        assert_eq!(h.len(), 1);
        assert_eq!(h[&0], BigUint::from(1u32));
    }

    #[test]
    fn bijection_generation() {
        let limits = Limits::default();
        assert_eq!(generate_upf_via_bijection(3, &limits).unwrap().count(), 13);
        let six: HashSet<PrefList> = generate_upf_via_bijection(6, &limits).unwrap().collect();
        assert_eq!(six.len(), 4683);
        let one: Vec<PrefList> = generate_upf_via_bijection(1, &limits).unwrap().collect();
        assert_eq!(one, vec![PrefList::new(vec![1]).unwrap()]);
    }

    #[test]
    fn displacement_one() {
        let limits = Limits::default();
        assert_eq!(
            displacement_one_count(3, &limits).unwrap(),
            BigUint::from(6u32)
        );
        assert_eq!(
            displacement_one_count(2, &limits).unwrap(),
            BigUint::from(1u32)
        );
        assert_eq!(
            displacement_one_count(4, &limits).unwrap(),
            BigUint::from(36u32)
        );
    }

    #[test]
    fn verify_small() {
        let limits = Limits::default();
        for n in 1..=4 {
            let report = verify_all(n, &limits).unwrap();
            let failed: Vec<_> = report.failures().collect();
            assert!(failed.is_empty(), "n = {n}: {failed:?}");
            assert!(report.passed);
        }
        assert_eq!(verify_all(3, &limits).unwrap().counts.upf, "13");
    }
}
