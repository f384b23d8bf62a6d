//! Multi-user scheduling: jobs arrive in per-user lists and each user cares
//! about the completion of its own last job.
//!
//! Every schedule starts at time 0 and machines run their queues back to
//! back, so job `(r, i)` completes at the total processing time of the jobs
//! queued before it on its machine plus `p^r_i`. User `r`'s makespan is the
//! largest completion time among its jobs.

use crate::error::{Error, Result};
use crate::model::{Instance, Schedule};

/// `m` identical machines and `k >= 1` non-empty lists of positive
/// processing times, one per user.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MumpspInstance {
    machine_count: u32,
    users: Vec<Vec<u64>>,
}

impl MumpspInstance {
    pub fn new(machine_count: u32, users: Vec<Vec<u64>>) -> Result<Self> {
        if machine_count < 2 {
            return Err(Error::InvalidInstance(format!(
                "machine count must be at least 2, got {machine_count}"
            )));
        }
        if users.is_empty() {
            return Err(Error::InvalidInstance(
                "there must be at least one user".into(),
            ));
        }
        for (r, list) in users.iter().enumerate() {
            if list.is_empty() {
                return Err(Error::InvalidInstance(format!(
                    "user {} has no jobs",
                    r + 1
                )));
            }
            if let Some(i) = list.iter().position(|&p| p == 0) {
                return Err(Error::InvalidInstance(format!(
                    "job {} of user {} has processing time 0",
                    i + 1,
                    r + 1
                )));
            }
        }
        users
            .iter()
            .flatten()
            .try_fold(0u64, |acc, &p| acc.checked_add(p))
            .ok_or_else(|| Error::InvalidInstance("total work overflows u64".into()))?;
        Ok(MumpspInstance {
            machine_count,
            users,
        })
    }

    pub fn machine_count(&self) -> u32 {
        self.machine_count
    }

    pub fn users(&self) -> &[Vec<u64>] {
        &self.users
    }

    pub fn user_count(&self) -> usize {
        self.users.len()
    }

    pub fn job_count(&self) -> usize {
        self.users.iter().map(Vec::len).sum()
    }

    /// Processing time of job `job` of user `user`, both 1-based.
    pub fn processing_time(&self, job: JobRef) -> Option<u64> {
        self.users
            .get(job.user.checked_sub(1)?)?
            .get(job.index.checked_sub(1)?)
            .copied()
    }

    /// Forgets the users: the lists concatenated in user order.
    pub fn to_instance(&self) -> Result<Instance> {
        Instance::new(self.machine_count, self.users.concat())
    }
}

/// The single-user instance with `n_1 = n` and `p^1_i = p_i`.
pub fn mpsp_to_mumpsp(instance: &Instance) -> MumpspInstance {
    MumpspInstance {
        machine_count: instance.machine_count(),
        users: vec![instance.processing_times().to_vec()],
    }
}

/// Job `index` of user `user`, both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JobRef {
    pub user: usize,
    pub index: usize,
}

impl JobRef {
    pub fn new(user: usize, index: usize) -> Self {
        JobRef { user, index }
    }
}

/// Per-machine job queues; `machines[j]` runs on `M_{j+1}` front to back.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderedSchedule {
    pub machines: Vec<Vec<JobRef>>,
}

impl OrderedSchedule {
    pub fn new(machines: Vec<Vec<JobRef>>) -> Self {
        OrderedSchedule { machines }
    }

    /// Queues for a single-user instance taken from an unordered schedule,
    /// each machine running its jobs in index order.
    pub fn from_schedule(machine_count: u32, schedule: &Schedule) -> Self {
        OrderedSchedule {
            machines: schedule
                .job_sets(machine_count)
                .into_iter()
                .map(|set| set.into_iter().map(|i| JobRef::new(1, i)).collect())
                .collect(),
        }
    }

    /// Completion time of every queued job, in queue order per machine.
    pub fn completion_times(&self, instance: &MumpspInstance) -> Result<Vec<Vec<u64>>> {
        check_coverage(instance, self)?;
        Ok(self
            .machines
            .iter()
            .map(|queue| {
                let mut clock = 0u64;
                queue
                    .iter()
                    .map(|&job| {
                        clock += instance.processing_time(job).expect("coverage checked");
                        clock
                    })
                    .collect()
            })
            .collect())
    }
}

fn check_coverage(instance: &MumpspInstance, schedule: &OrderedSchedule) -> Result<()> {
    if schedule.machines.len() != instance.machine_count as usize {
        return Err(Error::CoverageMismatch(format!(
            "schedule has {} machine queues, instance has {} machines",
            schedule.machines.len(),
            instance.machine_count
        )));
    }
    let mut seen: Vec<Vec<bool>> = instance
        .users
        .iter()
        .map(|l| vec![false; l.len()])
        .collect();
    for job in schedule.machines.iter().flatten() {
        let slot = job
            .user
            .checked_sub(1)
            .and_then(|r| seen.get_mut(r))
            .and_then(|list| list.get_mut(job.index.checked_sub(1)?))
            .ok_or_else(|| {
                Error::CoverageMismatch(format!(
                    "job ({}, {}) is not part of the instance",
                    job.user, job.index
                ))
            })?;
        if *slot {
            return Err(Error::CoverageMismatch(format!(
                "job ({}, {}) is scheduled more than once",
                job.user, job.index
            )));
        }
        *slot = true;
    }
    for (r, list) in seen.iter().enumerate() {
        if let Some(i) = list.iter().position(|&s| !s) {
            return Err(Error::CoverageMismatch(format!(
                "job ({}, {}) is not scheduled",
                r + 1,
                i + 1
            )));
        }
    }
    Ok(())
}

/// `C^r_max` for every user `r = 1..=k`.
pub fn mumpsp_user_makespans(
    instance: &MumpspInstance,
    schedule: &OrderedSchedule,
) -> Result<Vec<u64>> {
    let completions = schedule.completion_times(instance)?;
    let mut per_user = vec![0u64; instance.user_count()];
    for (queue, times) in schedule.machines.iter().zip(&completions) {
        for (job, &c) in queue.iter().zip(times) {
            let slot = &mut per_user[job.user - 1];
            *slot = (*slot).max(c);
        }
    }
    Ok(per_user)
}
