//! Instances, schedules and the load/makespan arithmetic.
//!
//! Machines are labelled `1..=m` and jobs are identified by their position in
//! the processing-time list. A [`Schedule`] is a total job-to-machine map, so
//! the induced job sets are disjoint and cover every job by construction.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

/// A set of `m >= 2` identical machines and the processing times of `n >= 1` jobs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Instance {
    machine_count: u32,
    processing_times: Vec<u64>,
    total_work: u64,
}

impl Instance {
    /// Validates and builds an instance.
    ///
    /// Fails with [`Error::InvalidInstance`] when `m < 2`, the job list is
    /// empty, a processing time is zero, or the total work overflows `u64`.
    pub fn new(machine_count: u32, processing_times: Vec<u64>) -> Result<Self> {
        if machine_count < 2 {
            return Err(Error::InvalidInstance(format!(
                "machine count must be at least 2, got {machine_count}"
            )));
        }
        if processing_times.is_empty() {
            return Err(Error::InvalidInstance("job list is empty".into()));
        }
        if let Some(pos) = processing_times.iter().position(|&p| p == 0) {
            return Err(Error::InvalidInstance(format!(
                "job {} has processing time 0, must be at least 1",
                pos + 1
            )));
        }
        let total_work = processing_times
            .iter()
            .try_fold(0u64, |acc, &p| acc.checked_add(p))
            .ok_or_else(|| Error::InvalidInstance("total work overflows u64".into()))?;
        Ok(Instance {
            machine_count,
            processing_times,
            total_work,
        })
    }

    pub fn machine_count(&self) -> u32 {
        self.machine_count
    }

    pub fn job_count(&self) -> usize {
        self.processing_times.len()
    }

    pub fn processing_times(&self) -> &[u64] {
        &self.processing_times
    }

    /// Processing time of job `job` (1-based).
    pub fn processing_time(&self, job: usize) -> u64 {
        self.processing_times[job - 1]
    }

    pub fn total_work(&self) -> u64 {
        self.total_work
    }

    /// The averaged reference value `sum(p) / m`, kept as an exact fraction.
    ///
    /// This is a lower bound on every makespan and is frequently not
    /// attainable; the exact optimum comes from the solvers.
    pub fn theoretical_opt(&self) -> BigRational {
        BigRational::new(
            BigInt::from(self.total_work),
            BigInt::from(self.machine_count),
        )
    }

    /// `max(ceil(sum(p) / m), max p_i)`, the trivial lower bound on any makespan.
    pub fn makespan_lower_bound(&self) -> u64 {
        let m = u64::from(self.machine_count);
        let longest = self.processing_times.iter().copied().max().unwrap_or(0);
        self.total_work.div_ceil(m).max(longest)
    }

    /// Checks that `assignment` names a machine in `1..=m` for jobs
    /// `1..=assignment.len()`. Length is not checked.
    pub(crate) fn check_machines(&self, assignment: &[u32]) -> Result<()> {
        match assignment
            .iter()
            .position(|&j| j == 0 || j > self.machine_count)
        {
            Some(pos) => Err(Error::InvalidMachineIndex {
                job: pos + 1,
                machine: assignment[pos],
                machine_count: self.machine_count,
            }),
            None => Ok(()),
        }
    }

    /// Checks that `schedule` is a complete, well-formed schedule for this instance.
    pub fn validate(&self, schedule: &Schedule) -> Result<()> {
        if schedule.len() != self.job_count() {
            return Err(Error::LengthMismatch {
                expected: self.job_count(),
                actual: schedule.len(),
            });
        }
        self.check_machines(schedule.assignment())
    }

    fn loads_of(&self, assignment: &[u32]) -> Vec<u64> {
        let mut loads = vec![0u64; self.machine_count as usize];
        for (&machine, &p) in assignment.iter().zip(&self.processing_times) {
            loads[machine as usize - 1] += p;
        }
        loads
    }

    /// Per-machine loads `l_1..l_m` of a complete schedule.
    pub fn loads(&self, schedule: &Schedule) -> Result<Vec<u64>> {
        self.validate(schedule)?;
        Ok(self.loads_of(schedule.assignment()))
    }

    /// Loads induced by the jobs a partial schedule has placed so far.
    pub fn partial_loads(&self, partial: &PartialSchedule) -> Vec<u64> {
        self.loads_of(partial.assignment_prefix())
    }

    /// The makespan `C_max`, i.e. the largest machine load.
    pub fn makespan(&self, schedule: &Schedule) -> Result<u64> {
        Ok(self
            .loads(schedule)?
            .into_iter()
            .max()
            .expect("at least two machines"))
    }

    /// Whether every machine receives at least one job.
    pub fn is_essential(&self, schedule: &Schedule) -> Result<bool> {
        self.validate(schedule)?;
        let mut used = vec![false; self.machine_count as usize];
        for &machine in schedule.assignment() {
            used[machine as usize - 1] = true;
        }
        Ok(used.into_iter().all(|u| u))
    }
}

/// A complete assignment of jobs to machines, `assignment[i]` being the
/// 1-based machine of job `i + 1`.
///
/// A schedule is not tied to an instance; operations taking both check the
/// length and machine range.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Schedule(Vec<u32>);

impl Schedule {
    pub fn new(assignment: Vec<u32>) -> Self {
        Schedule(assignment)
    }

    /// Builds a schedule from the job-set view `J^1..J^m`, where `sets[j]`
    /// holds the 1-based jobs placed on machine `j + 1`.
    ///
    /// The sets must be pairwise disjoint and cover `1..=n` for `n` the total
    /// number of listed jobs.
    pub fn from_job_sets(sets: &[Vec<usize>]) -> Result<Self> {
        let n: usize = sets.iter().map(Vec::len).sum();
        let mut assignment = vec![0u32; n];
        for (machine, set) in sets.iter().enumerate() {
            for &job in set {
                if job == 0 || job > n {
                    return Err(Error::InvalidInstance(format!(
                        "job {job} is outside 1..={n}"
                    )));
                }
                if assignment[job - 1] != 0 {
                    return Err(Error::InvalidInstance(format!(
                        "job {job} appears in more than one machine set"
                    )));
                }
                assignment[job - 1] = machine as u32 + 1;
            }
        }
        Ok(Schedule(assignment))
    }

    pub fn assignment(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The job sets `J^1..J^m` as 1-based job indices.
    pub fn job_sets(&self, machine_count: u32) -> Vec<Vec<usize>> {
        let mut sets = vec![Vec::new(); machine_count as usize];
        for (i, &machine) in self.0.iter().enumerate() {
            if let Some(set) = sets.get_mut((machine as usize).wrapping_sub(1)) {
                set.push(i + 1);
            }
        }
        sets
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }
}

impl From<Vec<u32>> for Schedule {
    fn from(v: Vec<u32>) -> Self {
        Schedule(v)
    }
}

impl fmt::Display for Schedule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("]")
    }
}

/// An assignment of a strict, non-empty prefix `J_1..J_b` of the jobs,
/// `1 <= b <= n - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialSchedule(Vec<u32>);

impl PartialSchedule {
    pub fn new(instance: &Instance, prefix: Vec<u32>) -> Result<Self> {
        let n = instance.job_count();
        if prefix.is_empty() || prefix.len() >= n {
            return Err(Error::DomainError(format!(
                "a partial schedule places between 1 and {} jobs, got {}",
                n.saturating_sub(1),
                prefix.len()
            )));
        }
        instance.check_machines(&prefix)?;
        Ok(PartialSchedule(prefix))
    }

    pub fn assignment_prefix(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}
