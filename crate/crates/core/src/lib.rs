//! Scheduling solution space trees for makespan minimization on identical
//! parallel machines.
//!
//! Every schedule of `n` jobs on `m` machines is a leaf of a perfect `m`-ary
//! tree of height `n`: level `b` fixes the machine of job `J_b`. Weighting
//! each node with its machine loads turns the tree into a search space for
//! the optimal makespan and a path-walk verifier for schedule certificates.
//!
//! ```
//! use ssst::{brute_force_opt, verify_certificate, Certificate, Instance, Verdict};
//!
//! let instance = Instance::new(2, vec![1, 1, 3])?;
//! let best = brute_force_opt(&instance)?;
//! assert_eq!(best.optimum, 3);
//! assert_eq!(best.best_schedule.assignment(), &[1, 1, 2]);
//!
//! let cert = Certificate::new(best.best_schedule, 3);
//! assert_eq!(verify_certificate(&instance, &cert, 3), Verdict::Accept);
//! # Ok::<(), ssst::Error>(())
//! ```
//!
//! The modules follow the workflow:
//!
//! * [`model`]: instances, schedules, loads and makespans.
//! * [`tree`]: lazy node generation, leaf streams, path walks and weighted
//!   depth-first traversal.
//! * [`count`]: closed-form node and schedule counts.
//! * [`dot`]: Graphviz rendering of the upper levels.
//! * [`solver`] and [`magic`]: exact optimization and the two-machine
//!   partition procedure.
//! * [`verifier`]: certificate checks and threshold decisions.
//! * [`reductions`]: partitioning and multi-user scheduling.

pub mod count;
pub mod dot;
pub mod error;
pub mod magic;
pub mod model;
pub mod reductions;
pub mod solver;
pub mod tree;
pub mod verifier;

pub use count::{
    count_essential_exact, count_essential_formula, count_nodes, count_partial, count_schedules,
    TreeCounts,
};
pub use dot::{to_dot, to_dot_with_cap, DEFAULT_NODE_CAP};
pub use error::{Error, Result};
pub use magic::{magic_schedule, MsOutcome, SelectPartition};
pub use model::{Instance, PartialSchedule, Schedule};
pub use solver::{
    branch_and_bound, branch_and_bound_with, brute_force_opt, brute_force_opt_with, BnbOptions,
    BruteForceOptions, SolveResult, DEFAULT_LEAF_CAP,
};
pub use tree::{children, leaves, leaves_with_prefix, root, walk_path, NodeWeight, SsstNode};
pub use verifier::{decide, prove, verify_certificate, Certificate, Decision, Verdict};
