//! Exact counting formulas.
//!
//! The Fubini numbers are computed two independent ways, through the
//! alternating double sum of powers and through the Stirling numbers of the
//! second kind, so that each can check the other.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Stirling numbers of the second kind by `S(n, k) = k S(n-1, k) + S(n-1, k-1)`.
pub fn stirling2(n: usize, k: usize) -> Result<BigUint> {
    if k > n {
        return Err(Error::Domain(format!("S({n}, {k}) needs k <= n")));
    }
    Ok(stirling2_row(n).swap_remove(k))
}

/// `S(n, 0..=n)`.
pub fn stirling2_row(n: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for m in 1..=n {
        let mut next = vec![BigUint::zero(); m + 1];
        for k in 1..=m {
            let stay = if k < m { &row[k] * k } else { BigUint::zero() };
            next[k] = stay + &row[k - 1];
        }
        row = next;
    }
    row
}

/// Ordered set partitions of `[n]` into `k` blocks: `k! S(n, k)`.
pub fn t_count(n: usize, k: usize) -> Result<BigUint> {
    Ok(factorial(k) * stirling2(n, k)?)
}

/// `sum_k k! S(n, k)`.
pub fn fubini(n: usize) -> BigUint {
    stirling2_row(n)
        .into_iter()
        .enumerate()
        .map(|(k, s)| factorial(k) * s)
        .sum()
}

/// `sum_{k=0}^{n} sum_{j=0}^{k} (-1)^(k-j) C(k, j) j^n`.
pub fn fubini_alternating_sum(n: usize) -> BigUint {
    let mut total = BigInt::zero();
    for k in 0..=n {
        for j in 0..=k {
            let term = BigInt::from(binomial(k, j)) * BigInt::from(j).pow(n as u32);
            if (k - j) % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
    }
    total.try_into().expect("Fubini numbers are positive")
}

/// `(n + 1)^(n - 1)`, the number of parking functions of length `n >= 1`.
pub fn parking_function_count(n: usize) -> BigUint {
    assert!(n >= 1);
    BigUint::from(n + 1).pow(n as u32 - 1)
}

/// `(n - 1)^(n - 1)`, the number of prime parking functions of length `n >= 1`.
pub fn prime_parking_function_count(n: usize) -> BigUint {
    assert!(n >= 1);
    if n == 1 {
        return BigUint::one();
    }
    BigUint::from(n - 1).pow(n as u32 - 1)
}

/// `n! (n - 1) / 2`, the Lah numbers `L(n, n - 1)`.
pub fn lah_displacement_one(n: usize) -> BigUint {
    factorial(n) * n.saturating_sub(1) / 2u32
}
