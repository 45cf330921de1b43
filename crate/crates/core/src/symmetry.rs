//! The symmetric group acting on faces of the permutohedron.
//!
//! Two different actions appear here and are kept apart:
//!
//! * the face action: relabel the elements of an ordered set partition, and
//!   carry that over to unit-interval parking functions through `phi`/`psi`.
//!   Orbits and stabilizers refer to this action.
//! * entry rearrangement of a preference list, `(a_w(1), ..., a_w(n))`. Only
//!   [`count_entry_permutations_preserving_upf`] uses it.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::One;

use crate::bijection::{phi, psi};
use crate::counting::factorial;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::osp::OrderedSetPartition;
use crate::parking::PrefList;
use crate::perm::{all_permutations, Permutation};

pub type PermGroupElement = Permutation;

/// Young-subgroup description of a face stabilizer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizerDescription {
    /// Adjacent transpositions `(b_i, b_{i+1})` within each ascending block.
    pub generators: Vec<(usize, usize)>,
    pub order: BigUint,
}

/// Closed-form and (when small enough) enumerated counts of entry rearrangements
/// that stay unit-interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreservingCount {
    pub closed_form: BigUint,
    pub enumerated: Option<BigUint>,
}

impl PreservingCount {
    pub fn agrees(&self) -> bool {
        self.enumerated
            .as_ref()
            .is_none_or(|e| *e == self.closed_form)
    }
}

/// `(w(B_1), ..., w(B_k))`, each block re-sorted.
pub fn act_on_osp(w: &PermGroupElement, p: &OrderedSetPartition) -> Result<OrderedSetPartition> {
    if w.len() != p.n() {
        return Err(Error::LengthMismatch {
            expected: p.n(),
            actual: w.len(),
        });
    }
    let blocks = p
        .blocks()
        .iter()
        .map(|b| {
            let mut image: Vec<usize> = b.iter().map(|&x| w.apply(x)).collect();
            image.sort_unstable();
            image
        })
        .collect();
    Ok(OrderedSetPartition::new_unchecked(p.n(), blocks))
}

pub fn act_on_upf(w: &PermGroupElement, prefs: &PrefList) -> Result<PrefList> {
    Ok(psi(&act_on_osp(w, &phi(prefs)?)?))
}

/// Ordered prime decomposition lengths of a unit-interval parking function.
pub fn ordered_prime_lengths(prefs: &PrefList) -> Result<Vec<usize>> {
    prefs.require_unit_interval()?;
    Ok(prefs.prime_decompose()?.lengths())
}

pub fn same_orbit(a: &PrefList, b: &PrefList) -> Result<bool> {
    Ok(ordered_prime_lengths(a)? == ordered_prime_lengths(b)?)
}

/// Orbit under the face action, sorted.
pub fn orbit(prefs: &PrefList, limits: &Limits) -> Result<Vec<PrefList>> {
    let face = phi(prefs)?;
    limits.check_exhaustive(prefs.len())?;
    let mut out = BTreeSet::new();
    for w in all_permutations(prefs.len()) {
        out.insert(psi(&act_on_osp(&w, &face)?));
    }
    Ok(out.into_iter().collect())
}

/// `n! / prod l(j)!` for the component lengths `l(j)`.
pub fn orbit_size(prefs: &PrefList) -> Result<BigUint> {
    let lengths = ordered_prime_lengths(prefs)?;
    Ok(factorial(prefs.len()) / product_of_factorials(&lengths))
}

pub fn stabilizer(prefs: &PrefList) -> Result<StabilizerDescription> {
    let face = phi(prefs)?;
    let generators = face
        .blocks()
        .iter()
        .flat_map(|b| b.windows(2).map(|w| (w[0], w[1])))
        .collect();
    Ok(StabilizerDescription {
        generators,
        order: product_of_factorials(&face.block_sizes()),
    })
}

/// Number of `w` with `(a_w(1), ..., a_w(n))` unit-interval, as `2^t n! / prod l(j)!`
/// where `t` counts the components of length at least two. The direct count over
/// `Sym_n` is included when `n` is within the exhaustive limit.
pub fn count_entry_permutations_preserving_upf(
    prefs: &PrefList,
    limits: &Limits,
) -> Result<PreservingCount> {
    prefs.require_unit_interval()?;
    let decomposition = prefs.prime_decompose()?;
    let n = prefs.len();
    let closed_form = (BigUint::one() << decomposition.nontrivial_count()) * factorial(n)
        / product_of_factorials(&decomposition.lengths());
    let enumerated = limits.check_exhaustive(n).is_ok().then(|| {
        let hits = all_permutations(n)
            .filter(|w| {
                let rearranged = w.gather(prefs.as_slice()).expect("same length");
                PrefList::new_unchecked(rearranged).is_unit_interval()
            })
            .count();
        BigUint::from(hits)
    });
    Ok(PreservingCount {
        closed_form,
        enumerated,
    })
}

fn product_of_factorials(lengths: &[usize]) -> BigUint {
    lengths.iter().map(|&l| factorial(l)).product()
}
