//! Two-way number partitioning as two-machine scheduling.
//!
//! Element `a_i` of weight `w_i` becomes job `J_i` with `p_i = w_i` on two
//! machines. A subset `A'` corresponds to the jobs on `M_1`, its complement
//! to the jobs on `M_2`, and the makespan is `max(W(A'), W(A - A'))`. A
//! schedule with makespan at most `W(A) / 2` exists iff the weights split
//! into two halves of equal sum.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::model::{Instance, Schedule};
use crate::verifier::{self, Certificate, Decision};

/// A non-empty list of positive weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartitionInstance {
    weights: Vec<u64>,
    total: u64,
}

impl PartitionInstance {
    /// Zero weights are rejected with [`Error::ZeroWeight`] rather than
    /// dropped, so element `i` always maps to job `i`.
    pub fn new(weights: Vec<u64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidInstance("weight list is empty".into()));
        }
        if let Some(pos) = weights.iter().position(|&w| w == 0) {
            return Err(Error::ZeroWeight(pos + 1));
        }
        let total = weights
            .iter()
            .try_fold(0u64, |acc, &w| acc.checked_add(w))
            .ok_or_else(|| Error::InvalidInstance("total weight overflows u64".into()))?;
        Ok(PartitionInstance { weights, total })
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    /// `W(A)`.
    pub fn total_weight(&self) -> u64 {
        self.total
    }
}

/// The two-machine instance and the exact threshold `W(A) / 2`.
pub fn partition_to_2psp(pp: &PartitionInstance) -> Result<(Instance, BigRational)> {
    let instance = Instance::new(2, pp.weights.clone())?;
    let threshold = BigRational::new(BigInt::from(pp.total), BigInt::from(2));
    Ok((instance, threshold))
}

/// A balanced split witnessed by a two-machine schedule, or `None`.
///
/// Odd totals are answered without a search.
pub fn solve_partition(pp: &PartitionInstance) -> Result<Option<Certificate>> {
    if pp.total % 2 == 1 {
        return Ok(None);
    }
    let (instance, _) = partition_to_2psp(pp)?;
    Ok(match verifier::decide(&instance, pp.total / 2)? {
        Decision::Yes(cert) => Some(cert),
        Decision::No => None,
    })
}

/// Whether the weights split into two subsets of equal sum.
pub fn decide_partition(pp: &PartitionInstance) -> Result<bool> {
    Ok(solve_partition(pp)?.is_some())
}

/// Index sets `A'` (jobs on `M_1`) and `A - A'` (jobs on `M_2`), 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartitionSplit {
    pub subset: Vec<usize>,
    pub complement: Vec<usize>,
}

impl PartitionSplit {
    /// `(W(A'), W(A - A'))` for the given weights.
    pub fn weight_sums(&self, weights: &[u64]) -> (u64, u64) {
        let sum = |set: &[usize]| set.iter().map(|&i| weights[i - 1]).sum();
        (sum(&self.subset), sum(&self.complement))
    }
}

/// Reads the subset off a two-machine schedule.
pub fn schedule_to_partition(schedule: &Schedule) -> Result<PartitionSplit> {
    let mut split = PartitionSplit {
        subset: Vec::new(),
        complement: Vec::new(),
    };
    for (i, &machine) in schedule.assignment().iter().enumerate() {
        match machine {
            1 => split.subset.push(i + 1),
            2 => split.complement.push(i + 1),
            0 => {
                return Err(Error::InvalidMachineIndex {
                    job: i + 1,
                    machine,
                    machine_count: 2,
                })
            }
            _ => return Err(Error::NotTwoMachines(machine)),
        }
    }
    Ok(split)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reductions::subset_sum::subset_sum_oracle;
    use proptest::prelude::*;

    fn pp(w: &[u64]) -> PartitionInstance {
        PartitionInstance::new(w.to_vec()).unwrap()
    }

    #[test]
    fn transformation() {
        let (i, t) = partition_to_2psp(&pp(&[2, 3, 5, 4])).unwrap();
        assert_eq!(i.machine_count(), 2);
        assert_eq!(i.processing_times(), &[2, 3, 5, 4]);
        assert_eq!(t, BigRational::from_integer(7.into()));

        let (_, t) = partition_to_2psp(&pp(&[1, 1, 3])).unwrap();
        assert_eq!(t, BigRational::new(5.into(), 2.into()));
        assert!(!t.is_integer());

        assert_eq!(
            PartitionInstance::new(vec![1, 0, 3]),
            Err(Error::ZeroWeight(2))
        );
        assert!(PartitionInstance::new(vec![]).is_err());
    }

    #[test]
    fn decisions() {
        assert!(decide_partition(&pp(&[2, 3, 5, 4])).unwrap());
        assert!(!decide_partition(&pp(&[1, 1, 3])).unwrap());
        assert!(decide_partition(&pp(&[5, 5])).unwrap());
        assert!(!decide_partition(&pp(&[5])).unwrap());
        assert!(!decide_partition(&pp(&[1, 1, 4])).unwrap());
    }

    #[test]
    fn read_off() {
        let s = |v: &[u32]| schedule_to_partition(&Schedule::new(v.to_vec())).unwrap();
        assert_eq!(
            s(&[1, 2, 2, 1]),
            PartitionSplit {
                subset: vec![1, 4],
                complement: vec![2, 3]
            }
        );
        assert_eq!(s(&[1, 1, 1]).complement, Vec::<usize>::new());
        assert_eq!(s(&[2, 1]).subset, vec![2]);
        assert_eq!(
            schedule_to_partition(&Schedule::new(vec![1, 3])),
            Err(Error::NotTwoMachines(3))
        );
    }

    #[test]
    fn witness_round_trip() {
        let p = pp(&[2, 3, 5, 4]);
        let cert = solve_partition(&p).unwrap().unwrap();
        let split = schedule_to_partition(&cert.schedule).unwrap();
        assert_eq!(split.weight_sums(p.weights()), (7, 7));
    }

    proptest! {
        #[test]
        fn agrees_with_subset_sum(w in prop::collection::vec(1u64..=100, 1..=12)) {
            let p = pp(&w);
            let expected = p.total_weight() % 2 == 0
                && subset_sum_oracle(&w, p.total_weight() / 2).unwrap();
            let got = solve_partition(&p).unwrap();
            prop_assert_eq!(got.is_some(), expected);
            if let Some(cert) = got {
                let split = schedule_to_partition(&cert.schedule).unwrap();
                let half = p.total_weight() / 2;
                prop_assert_eq!(split.weight_sums(&w), (half, half));
            }
        }
    }
}
