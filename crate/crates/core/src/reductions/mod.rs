//! Reductions into and out of the scheduling problem.
//!
//! * [`partition`]: two-way number partitioning to two-machine scheduling,
//!   with certificate translation back to index sets.
//! * [`mumpsp`]: the multi-user variant, its per-user makespans and the
//!   single-user embedding of ordinary instances.
//! * [`subset_sum`]: an independent pseudo-polynomial oracle used to check
//!   the partition reduction.

pub mod mumpsp;
pub mod partition;
pub mod subset_sum;

pub use mumpsp::{mpsp_to_mumpsp, mumpsp_user_makespans, JobRef, MumpspInstance, OrderedSchedule};
pub use partition::{
    decide_partition, partition_to_2psp, schedule_to_partition, solve_partition, PartitionInstance,
    PartitionSplit,
};
pub use subset_sum::{subset_sum_oracle, subset_sum_oracle_with_budget};
