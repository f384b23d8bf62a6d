//! Reachable subset sums as a bitset dynamic program.

use crate::error::{Error, Result};

/// Default limit on the number of sums tracked by the table.
pub const DEFAULT_SUM_BUDGET: u64 = 1 << 27;

/// Whether some subset of `weights` sums to exactly `target`, with the
/// default table budget.
pub fn subset_sum_oracle(weights: &[u64], target: u64) -> Result<bool> {
    subset_sum_oracle_with_budget(weights, target, DEFAULT_SUM_BUDGET)
}

/// Whether some subset of `weights` sums to exactly `target`.
///
/// Runs in `O(n * min(target, sum w) / 64)` word operations. Fails with
/// [`Error::BudgetExceeded`] when more than `budget` sums would be tracked.
pub fn subset_sum_oracle_with_budget(weights: &[u64], target: u64, budget: u64) -> Result<bool> {
    let total = weights.iter().fold(0u64, |acc, &w| acc.saturating_add(w));
    if target > total {
        return Ok(false);
    }
    if target >= budget {
        return Err(Error::BudgetExceeded {
            requested: (target + 1).to_string(),
            budget,
        });
    }
    let bits = target as usize + 1;
    let words = bits.div_ceil(64);
    let mut reach = vec![0u64; words];
    reach[0] = 1;
    for &w in weights {
        if w > target {
            continue;
        }
        let (ws, bs) = ((w / 64) as usize, (w % 64) as u32);
        for i in (ws..words).rev() {
            let mut shifted = reach[i - ws] << bs;
            if bs > 0 && i > ws {
                shifted |= reach[i - ws - 1] >> (64 - bs);
            }
            reach[i] |= shifted;
        }
    }
    let t = target as usize;
    Ok(reach[t / 64] >> (t % 64) & 1 == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn by_enumeration(weights: &[u64], target: u64) -> bool {
        (0u32..1 << weights.len()).any(|mask| {
            weights
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, w)| w)
                .sum::<u64>()
                == target
        })
    }

    #[test]
    fn examples() {
        assert!(subset_sum_oracle(&[2, 3, 5, 4], 7).unwrap());
        assert!(subset_sum_oracle(&[1, 1, 3], 2).unwrap());
        assert!(!subset_sum_oracle(&[2, 4, 6], 5).unwrap());
        assert!(subset_sum_oracle(&[2, 4, 6], 0).unwrap());
        assert!(!subset_sum_oracle(&[2, 4, 6], 13).unwrap());
    }

    #[test]
    fn crosses_word_boundaries() {
        assert!(subset_sum_oracle(&[63, 1, 64, 129], 257).unwrap());
        assert!(!subset_sum_oracle(&[63, 64, 129], 130).unwrap());
        assert!(subset_sum_oracle(&[200, 64, 1000], 264).unwrap());
    }

    #[test]
    fn budget() {
        assert!(matches!(
            subset_sum_oracle_with_budget(&[100, 100], 150, 100),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    proptest! {
        #[test]
        fn agrees_with_enumeration(
            weights in prop::collection::vec(1u64..=200, 0..=12),
            target in 0u64..=1500,
        ) {
            prop_assert_eq!(
                subset_sum_oracle(&weights, target).unwrap(),
                by_enumeration(&weights, target)
            );
        }
    }
}
