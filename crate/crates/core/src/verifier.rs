//! Certificate checking and the threshold decision problem.
//!
//! A prover hands over a schedule together with the makespan it claims for
//! it. The verifier walks the schedule's root-to-leaf path in the tree, which
//! rejects anything that is not a complete assignment, then compares the
//! leaf weight with the claim and the claim with the threshold. The walk
//! touches `n` nodes and keeps one load vector, so a check costs `O(n + m)`.
//!
//! Thresholds are integers because every makespan is. To test against a
//! fractional bound `q`, pass `floor(q)`: `C_max <= q` iff `C_max <= floor(q)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::model::{Instance, Schedule};
use crate::solver::{self, check_leaf_budget, DEFAULT_LEAF_CAP};
use crate::tree::{self, NodeView, Step, WeightedVisitor};

/// A schedule plus the makespan its prover claims.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Certificate {
    pub schedule: Schedule,
    pub claimed_makespan: u64,
}

impl Certificate {
    pub fn new(schedule: Schedule, claimed_makespan: u64) -> Self {
        Certificate {
            schedule,
            claimed_makespan,
        }
    }
}

/// Why a certificate's schedule is not a valid leaf of the tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum InvalidSchedule {
    LengthMismatch { expected: usize, actual: usize },
    InvalidMachineIndex { job: usize, machine: u32 },
}

impl InvalidSchedule {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            InvalidSchedule::LengthMismatch { .. } => "length_mismatch",
            InvalidSchedule::InvalidMachineIndex { .. } => "invalid_machine_index",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Verdict {
    Accept,
    RejectInvalidSchedule(InvalidSchedule),
    RejectWrongMakespan { claimed: u64, actual: u64 },
    RejectAboveThreshold { actual: u64, threshold: u64 },
}

impl Verdict {
    pub fn is_accept(&self) -> bool {
        matches!(self, Verdict::Accept)
    }

    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Verdict::Accept => "accept",
            Verdict::RejectInvalidSchedule(_) => "reject_invalid_schedule",
            Verdict::RejectWrongMakespan { .. } => "reject_wrong_makespan",
            Verdict::RejectAboveThreshold { .. } => "reject_above_threshold",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Accept => write!(f, "accept"),
            Verdict::RejectInvalidSchedule(
                r @ InvalidSchedule::LengthMismatch { expected, actual },
            ) => {
                write!(
                    f,
                    "{} {}: expected {expected} entries, got {actual}",
                    self.code(),
                    r.code()
                )
            }
            Verdict::RejectInvalidSchedule(
                r @ InvalidSchedule::InvalidMachineIndex { job, machine },
            ) => {
                write!(
                    f,
                    "{} {}: job {job} on machine {machine}",
                    self.code(),
                    r.code()
                )
            }
            Verdict::RejectWrongMakespan { claimed, actual } => {
                write!(f, "{}: claimed {claimed}, actual {actual}", self.code())
            }
            Verdict::RejectAboveThreshold { actual, threshold } => {
                write!(
                    f,
                    "{}: makespan {actual} exceeds threshold {threshold}",
                    self.code()
                )
            }
        }
    }
}

/// Checks `cert` against `instance` and `threshold`.
///
/// Accepts iff the schedule is a leaf of the tree, the claim equals that
/// leaf's weight, and the claim is at most `threshold`. Never fails; every
/// problem with the certificate is reported as a rejecting [`Verdict`].
pub fn verify_certificate(instance: &Instance, cert: &Certificate, threshold: u64) -> Verdict {
    let leaf = match tree::walk_to_leaf(instance, &cert.schedule) {
        Ok(leaf) => leaf,
        Err(Error::LengthMismatch { expected, actual }) => {
            return Verdict::RejectInvalidSchedule(InvalidSchedule::LengthMismatch {
                expected,
                actual,
            })
        }
        Err(Error::InvalidMachineIndex { job, machine, .. }) => {
            return Verdict::RejectInvalidSchedule(InvalidSchedule::InvalidMachineIndex {
                job,
                machine,
            })
        }
        Err(other) => unreachable!("path walk of a full-length schedule: {other}"),
    };
    let actual = leaf.weight().0;
    if cert.claimed_makespan != actual {
        return Verdict::RejectWrongMakespan {
            claimed: cert.claimed_makespan,
            actual,
        };
    }
    if actual > threshold {
        return Verdict::RejectAboveThreshold { actual, threshold };
    }
    Verdict::Accept
}

/// Answer to "is there a schedule with `C_max <= threshold`?".
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Yes(Certificate),
    No,
}

impl Decision {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }

    pub fn witness(&self) -> Option<&Certificate> {
        match self {
            Decision::Yes(c) => Some(c),
            Decision::No => None,
        }
    }
}

struct FirstWithin {
    threshold: u64,
    found: Option<(Vec<u32>, u64)>,
}

impl WeightedVisitor for FirstWithin {
    fn visit_inner(&mut self, node: NodeView<'_>) -> Step {
        if node.weight > self.threshold {
            Step::Prune
        } else {
            Step::Descend
        }
    }

    fn visit_leaf(&mut self, node: NodeView<'_>) -> Step {
        if node.weight <= self.threshold {
            self.found = Some((node.prefix.to_vec(), node.weight));
            Step::Stop
        } else {
            Step::Descend
        }
    }
}

/// Decides whether some schedule has makespan at most `threshold`, with the
/// default leaf budget.
pub fn decide(instance: &Instance, threshold: u64) -> Result<Decision> {
    decide_with_cap(instance, threshold, DEFAULT_LEAF_CAP)
}

/// Decides whether some schedule has makespan at most `threshold`.
///
/// The weighted tree is searched depth first, machine 1 first, skipping
/// every subtree whose weight already exceeds the threshold. The witness is
/// the lexicographically least schedule within the threshold, so it passes
/// [`verify_certificate`] with the same threshold.
pub fn decide_with_cap(instance: &Instance, threshold: u64, leaf_cap: u64) -> Result<Decision> {
    check_leaf_budget(instance, leaf_cap)?;
    if threshold < instance.makespan_lower_bound() {
        return Ok(Decision::No);
    }
    let mut v = FirstWithin {
        threshold,
        found: None,
    };
    tree::traverse(instance, &[], &mut v)?;
    Ok(match v.found {
        Some((assignment, makespan)) => {
            Decision::Yes(Certificate::new(Schedule::new(assignment), makespan))
        }
        None => Decision::No,
    })
}

/// Plays the prover: an optimal certificate from full enumeration.
pub fn prove(instance: &Instance) -> Result<Certificate> {
    let r = solver::brute_force_opt(instance)?;
    Ok(Certificate::new(r.best_schedule, r.optimum))
}
