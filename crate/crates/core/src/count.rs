//! Closed-form node and schedule counts for the solution space tree.
//!
//! All counts are exact arbitrary-precision integers. `m^n` leaves the `u64`
//! range already at `m = 2, n = 64`.

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_traits::Signed;

use crate::error::{Error, Result};

fn check_machines(m: u32) -> Result<()> {
    if m < 2 {
        return Err(Error::DomainError(format!(
            "machine count must be at least 2, got {m}"
        )));
    }
    Ok(())
}

fn check_domain(m: u32, n: u32) -> Result<()> {
    check_machines(m)?;
    if n < 1 {
        return Err(Error::DomainError("job count must be at least 1".into()));
    }
    Ok(())
}

fn pow(m: u32, e: u32) -> BigUint {
    BigUint::from(m).pow(e)
}

/// Nodes in the perfect `m`-ary tree of height `h`: `(m^(h+1) - 1) / (m - 1)`.
pub fn count_nodes(m: u32, h: u32) -> Result<BigUint> {
    check_machines(m)?;
    Ok((pow(m, h + 1) - 1u32) / (m - 1))
}

/// Leaves of the tree, i.e. complete schedules: `m^n`.
pub fn count_schedules(m: u32, n: u32) -> Result<BigUint> {
    check_domain(m, n)?;
    Ok(pow(m, n))
}

/// Nodes on levels `1..=n-1`, i.e. partial schedules: `(m^n - m) / (m - 1)`.
pub fn count_partial(m: u32, n: u32) -> Result<BigUint> {
    check_domain(m, n)?;
    Ok((pow(m, n) - m) / (m - 1))
}

/// The published essential-schedule count `m^n - m`.
///
/// This only subtracts the `m` single-machine schedules. It equals the number
/// of schedules that use every machine when `m = 2`; for `m >= 3` and
/// `n >= 2` it over-counts, see [`count_essential_exact`].
pub fn count_essential_formula(m: u32, n: u32) -> Result<BigUint> {
    check_domain(m, n)?;
    Ok(pow(m, n) - m)
}

/// Schedules in which every machine receives at least one job, i.e.
/// surjections from `n` jobs onto `m` machines, by inclusion-exclusion:
/// `sum_{j=0..m} (-1)^j C(m, j) (m - j)^n`.
pub fn count_essential_exact(m: u32, n: u32) -> Result<BigUint> {
    check_domain(m, n)?;
    let mut total = BigInt::default();
    for j in 0..=m {
        let term = BigInt::from(binomial(BigUint::from(m), BigUint::from(j)))
            * BigInt::from(pow(m - j, n));
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    debug_assert!(!total.is_negative());
    Ok(total
        .to_biguint()
        .expect("surjection count is non-negative"))
}

/// The five counts reported together by the `count` command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeCounts {
    pub nodes: BigUint,
    pub schedules: BigUint,
    pub partial: BigUint,
    pub essential_formula: BigUint,
    pub essential_exact: BigUint,
}

impl TreeCounts {
    pub fn new(m: u32, n: u32) -> Result<Self> {
        Ok(TreeCounts {
            nodes: count_nodes(m, n)?,
            schedules: count_schedules(m, n)?,
            partial: count_partial(m, n)?,
            essential_formula: count_essential_formula(m, n)?,
            essential_exact: count_essential_exact(m, n)?,
        })
    }

    /// Whether the `m^n - m` formula disagrees with the surjection count.
    pub fn essential_mismatch(&self) -> bool {
        self.essential_formula != self.essential_exact
    }
}
