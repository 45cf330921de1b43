//! Reference implementations written directly from the definitions.
//!
//! Nothing here calls into the library, so the tests can compare the two.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// Every list in `[n]^n`, lexicographic.
pub fn all_lists(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (1..=n).map(move |v| {
                    let mut next = prefix.clone();
                    next.push(v);
                    next
                })
            })
            .collect();
    }
    out
}

/// Spot taken by each car, or `None` if some car drives off the street.
pub fn park(prefs: &[usize]) -> Option<Vec<usize>> {
    let n = prefs.len();
    let mut taken = vec![false; n + 1];
    let mut spots = Vec::with_capacity(n);
    for &a in prefs {
        let spot = (a..=n).find(|&s| !taken[s])?;
        taken[spot] = true;
        spots.push(spot);
    }
    Some(spots)
}

pub fn displacements(prefs: &[usize]) -> Option<Vec<usize>> {
    let spots = park(prefs)?;
    Some(spots.iter().zip(prefs).map(|(s, a)| s - a).collect())
}

pub fn parking_functions(n: usize) -> Vec<Vec<usize>> {
    all_lists(n)
        .into_iter()
        .filter(|a| park(a).is_some())
        .collect()
}

pub fn is_upf(prefs: &[usize]) -> bool {
    displacements(prefs).is_some_and(|d| d.iter().all(|&x| x <= 1))
}

pub fn total_displacement(prefs: &[usize]) -> Option<usize> {
    displacements(prefs).map(|d| d.iter().sum())
}

/// `k` with exactly `k` preferences at most `k`.
pub fn breakpoints(prefs: &[usize]) -> Vec<usize> {
    (1..=prefs.len())
        .filter(|&k| prefs.iter().filter(|&&a| a <= k).count() == k)
        .collect()
}

/// Preferences listed in the order of the spots the cars end up in.
pub fn rearrangement(prefs: &[usize]) -> Option<Vec<usize>> {
    let spots = park(prefs)?;
    let mut out = vec![0; prefs.len()];
    for (car, &s) in spots.iter().enumerate() {
        out[s - 1] = prefs[car];
    }
    Some(out)
}

/// Lengths of the stretches between consecutive breakpoints.
pub fn component_lengths(prefs: &[usize]) -> Vec<usize> {
    let mut prev = 0;
    breakpoints(prefs)
        .into_iter()
        .map(|b| {
            let len = b - prev;
            prev = b;
            len
        })
        .collect()
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

pub fn stirling2(n: usize, k: usize) -> u128 {
    let mut row = vec![1u128];
    for m in 1..=n {
        let mut next = vec![0u128; m + 1];
        for j in 1..=m {
            let stay = if j < m { j as u128 * row[j] } else { 0 };
            next[j] = stay + row[j - 1];
        }
        row = next;
    }
    row.get(k).copied().unwrap_or(0)
}

/// `(n-k)! S(n, n-k)`.
pub fn faces_of_dimension(n: usize, k: usize) -> u128 {
    factorial(n - k) * stirling2(n, n - k)
}

pub fn fubini(n: usize) -> u128 {
    (0..=n).map(|k| factorial(k) * stirling2(n, k)).sum()
}

/// One-line permutations of `[n]`, lexicographic.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in permutations(n - 1) {
        for pos in 0..n {
            let mut p = rest.clone();
            p.insert(pos, n);
            out.push(p);
        }
    }
    out.sort();
    out
}

/// Ordered set partitions of `[n]` as a set of block lists, each block sorted.
pub fn ordered_set_partitions(n: usize) -> BTreeSet<Vec<Vec<usize>>> {
    let mut out = BTreeSet::new();
    for labels in all_lists(n) {
        let used: BTreeSet<usize> = labels.iter().copied().collect();
        if used.len() != *used.iter().max().unwrap_or(&0) {
            continue;
        }
        let blocks = used
            .iter()
            .map(|&b| (1..=n).filter(|&i| labels[i - 1] == b).collect())
            .collect();
        out.insert(blocks);
    }
    out
}
