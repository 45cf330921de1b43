//! Size limits for operations whose cost grows factorially in `n`.

use crate::error::{Error, Result};

/// Environment variable overriding every exhaustive limit at once.
pub const MAX_N_ENV: &str = "PERMUPARK_MAX_N";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Non-enumerative operations on a single preference list or partition.
    pub max_n: usize,
    /// Enumeration of ordered set partitions, orbits and round-trip sweeps.
    pub max_exhaustive_n: usize,
    /// Brute force over `[n]^n`.
    pub max_brute_n: usize,
    /// Face lattice construction.
    pub max_lattice_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: 20,
            max_exhaustive_n: 8,
            max_brute_n: 7,
            max_lattice_n: 7,
        }
    }
}

impl Limits {
    /// Defaults, with the exhaustive limits replaced by `PERMUPARK_MAX_N` when it is set
    /// to a valid integer.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(max) = std::env::var(MAX_N_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
        {
            limits.max_exhaustive_n = max;
            limits.max_brute_n = max;
            limits.max_lattice_n = max;
        }
        limits
    }

    pub fn check_n(&self, n: usize) -> Result<()> {
        check(n, self.max_n)
    }

    pub fn check_exhaustive(&self, n: usize) -> Result<()> {
        check(n, self.max_exhaustive_n)
    }

    pub fn check_brute(&self, n: usize) -> Result<()> {
        check(n, self.max_brute_n)
    }

    pub fn check_lattice(&self, n: usize) -> Result<()> {
        check(n, self.max_lattice_n)
    }
}

fn check(n: usize, max: usize) -> Result<()> {
    if n > max {
        Err(Error::LimitExceeded { n, max })
    } else {
        Ok(())
    }
}
