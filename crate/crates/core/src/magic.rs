//! Magic Scheduling: the two-machine partition check with an explicit
//! partition selector.
//!
//! The procedure picks a split of the jobs between `M_1` and `M_2`, computes
//! `C_max = max(l_1, l_2)` and succeeds iff `C_max` equals `sum(p) / 2`
//! exactly. How the split is picked is left open by the procedure itself;
//! [`SelectPartition`] makes that choice a parameter.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::model::{Instance, Schedule};
use crate::solver::{check_leaf_budget, DEFAULT_LEAF_CAP};
use crate::tree::{self, NodeView, Step, WeightedVisitor};

/// How the partition is selected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SelectPartition {
    /// Try every leaf of the tree, machine 1 first; succeeds iff a balanced
    /// split exists.
    Exhaustive,
    /// Evaluate exactly this schedule.
    Certificate(Schedule),
    /// Draw `trials` uniform assignments from a ChaCha8 stream seeded with `seed`.
    Random { seed: u64, trials: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MsOutcome {
    /// A two-machine schedule whose makespan is exactly half the total work.
    Success {
        partition: Schedule,
    },
    Failure,
}

impl MsOutcome {
    pub fn is_success(&self) -> bool {
        matches!(self, MsOutcome::Success { .. })
    }

    pub fn partition(&self) -> Option<&Schedule> {
        match self {
            MsOutcome::Success { partition } => Some(partition),
            MsOutcome::Failure => None,
        }
    }
}

/// `C_max == sum(p) / 2`, compared without rounding.
fn balanced(makespan: u64, total: u64) -> bool {
    u128::from(makespan) * 2 == u128::from(total)
}

struct FirstBalanced {
    total: u64,
    found: Option<Vec<u32>>,
}

impl WeightedVisitor for FirstBalanced {
    fn visit_inner(&mut self, node: NodeView<'_>) -> Step {
        // weights only grow downwards
        if u128::from(node.weight) * 2 > u128::from(self.total) {
            Step::Prune
        } else {
            Step::Descend
        }
    }

    fn visit_leaf(&mut self, node: NodeView<'_>) -> Step {
        if balanced(node.weight, self.total) {
            self.found = Some(node.prefix.to_vec());
            Step::Stop
        } else {
            Step::Descend
        }
    }
}

/// Runs the procedure on a two-machine instance.
///
/// Fails with [`Error::NotTwoMachines`] for `m != 2`. The exhaustive selector
/// refuses trees with more than [`DEFAULT_LEAF_CAP`] leaves; a certificate is
/// checked for length and machine range.
pub fn magic_schedule(instance: &Instance, strategy: &SelectPartition) -> Result<MsOutcome> {
    if instance.machine_count() != 2 {
        return Err(Error::NotTwoMachines(instance.machine_count()));
    }
    let total = instance.total_work();
    let outcome = match strategy {
        SelectPartition::Exhaustive => {
            check_leaf_budget(instance, DEFAULT_LEAF_CAP)?;
            let mut v = FirstBalanced { total, found: None };
            if total % 2 == 0 {
                tree::traverse(instance, &[], &mut v)?;
            }
            v.found.map(Schedule::new)
        }
        SelectPartition::Certificate(schedule) => {
            let c_max = instance.makespan(schedule)?;
            balanced(c_max, total).then(|| schedule.clone())
        }
        SelectPartition::Random { seed, trials } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let n = instance.job_count();
            let mut found = None;
            for _ in 0..*trials {
                let candidate: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=2)).collect();
                let schedule = Schedule::new(candidate);
                if balanced(instance.makespan(&schedule)?, total) {
                    found = Some(schedule);
                    break;
                }
            }
            found
        }
    };
    Ok(match outcome {
        Some(partition) => MsOutcome::Success { partition },
        None => MsOutcome::Failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::brute_force_opt;
    use proptest::prelude::*;

    fn inst(p: &[u64]) -> Instance {
        Instance::new(2, p.to_vec()).unwrap()
    }

    #[test]
    fn exhaustive_examples() {
        let i = inst(&[2, 3, 5, 4]);
        let out = magic_schedule(&i, &SelectPartition::Exhaustive).unwrap();
        let part = out.partition().expect("balanced split exists");
        assert_eq!(i.loads(part).unwrap(), vec![7, 7]);
        assert_eq!(part.assignment(), &[1, 2, 1, 2]);

        let odd = magic_schedule(&inst(&[1, 1, 3]), &SelectPartition::Exhaustive).unwrap();
        assert_eq!(odd, MsOutcome::Failure);

        let no = magic_schedule(&inst(&[1, 1, 4]), &SelectPartition::Exhaustive).unwrap();
        assert_eq!(no, MsOutcome::Failure);
    }

    #[test]
    fn certificate_strategy() {
        let i = inst(&[2, 2]);
        let ok = magic_schedule(&i, &SelectPartition::Certificate(vec![1, 2].into())).unwrap();
        assert!(ok.is_success());
        let bad = magic_schedule(&i, &SelectPartition::Certificate(vec![1, 1].into())).unwrap();
        assert_eq!(bad, MsOutcome::Failure);
        assert!(matches!(
            magic_schedule(&i, &SelectPartition::Certificate(vec![1, 3].into())),
            Err(Error::InvalidMachineIndex { .. })
        ));
    }

    #[test]
    fn random_strategy_is_seeded() {
        let i = inst(&[3, 1, 1, 2, 2, 1]);
        let s = SelectPartition::Random {
            seed: 7,
            trials: 500,
        };
        let a = magic_schedule(&i, &s).unwrap();
        assert_eq!(a, magic_schedule(&i, &s).unwrap());
        let part = a.partition().expect("half of all splits balance here");
        assert_eq!(i.loads(part).unwrap(), vec![5, 5]);
        let none = SelectPartition::Random { seed: 7, trials: 0 };
        assert_eq!(magic_schedule(&i, &none).unwrap(), MsOutcome::Failure);
    }

    #[test]
    fn rejects_other_machine_counts() {
        let i = Instance::new(3, vec![1, 1, 1]).unwrap();
        assert_eq!(
            magic_schedule(&i, &SelectPartition::Exhaustive),
            Err(Error::NotTwoMachines(3))
        );
    }

    proptest! {
        #[test]
        fn exhaustive_succeeds_iff_optimum_is_half(p in prop::collection::vec(1u64..=30, 1..=10)) {
            let i = inst(&p);
            let out = magic_schedule(&i, &SelectPartition::Exhaustive).unwrap();
            let opt = brute_force_opt(&i).unwrap().optimum;
            prop_assert_eq!(out.is_success(), opt * 2 == i.total_work());
            if let Some(part) = out.partition() {
                let loads = i.loads(part).unwrap();
                prop_assert_eq!(loads[0], loads[1]);
            }
        }
    }
}
