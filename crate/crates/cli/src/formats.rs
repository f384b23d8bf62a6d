//! JSON files read and written by the command line.
//!
//! Every file holds exactly one object and unknown fields are rejected.

use std::fs;
use std::io::{self, Read};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use ssst::reductions::{JobRef, MumpspInstance, OrderedSchedule, PartitionInstance};
use ssst::{Certificate, Instance, Schedule};

use crate::CliError;

/// `{"machines": m, "jobs": [p_1, ..., p_n]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub machines: u32,
    pub jobs: Vec<u64>,
}

/// `{"machines": m, "users": [[p^1_1, ...], ...]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MumpspFile {
    pub machines: u32,
    pub users: Vec<Vec<u64>>,
}

/// `{"weights": [w_1, ..., w_n]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PartitionFile {
    pub weights: Vec<u64>,
}

/// `{"assignment": [machine of J_1, ...], "makespan": C_max}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateFile {
    pub assignment: Vec<u32>,
    pub makespan: u64,
}

/// `{"queues": [[[user, job], ...], ...]}`, one queue per machine, front first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrderedScheduleFile {
    pub queues: Vec<Vec<(usize, usize)>>,
}

/// Reads `path`, or standard input for `-`.
pub fn read_source(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::usage(format!("<stdin>: {e}")))?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::usage(format!("{path}: {e}")))
    }
}

/// Parses one JSON object; errors carry the source name, line and column.
pub fn parse<T: DeserializeOwned>(path: &str) -> Result<T, CliError> {
    let text = read_source(path)?;
    serde_json::from_str(&text).map_err(|e| CliError::usage(format!("{path}: {e}")))
}

fn first_zero(values: &[u64]) -> Option<usize> {
    values.iter().position(|&v| v == 0)
}

impl InstanceFile {
    pub fn from_instance(instance: &Instance) -> Self {
        InstanceFile {
            machines: instance.machine_count(),
            jobs: instance.processing_times().to_vec(),
        }
    }

    pub fn into_instance(self, path: &str) -> Result<Instance, CliError> {
        if self.machines < 2 {
            return Err(CliError::usage(format!(
                "{path}: field `machines`: must be at least 2, got {}",
                self.machines
            )));
        }
        if self.jobs.is_empty() {
            return Err(CliError::usage(format!(
                "{path}: field `jobs`: must not be empty"
            )));
        }
        if let Some(i) = first_zero(&self.jobs) {
            return Err(CliError::usage(format!(
                "{path}: field `jobs[{i}]`: processing time must be at least 1"
            )));
        }
        Instance::new(self.machines, self.jobs).map_err(|e| CliError::usage(format!("{path}: {e}")))
    }
}

impl MumpspFile {
    pub fn from_instance(instance: &MumpspInstance) -> Self {
        MumpspFile {
            machines: instance.machine_count(),
            users: instance.users().to_vec(),
        }
    }

    pub fn into_instance(self, path: &str) -> Result<MumpspInstance, CliError> {
        for (r, list) in self.users.iter().enumerate() {
            if list.is_empty() {
                return Err(CliError::usage(format!(
                    "{path}: field `users[{r}]`: must not be empty"
                )));
            }
            if let Some(i) = first_zero(list) {
                return Err(CliError::usage(format!(
                    "{path}: field `users[{r}][{i}]`: processing time must be at least 1"
                )));
            }
        }
        MumpspInstance::new(self.machines, self.users)
            .map_err(|e| CliError::usage(format!("{path}: {e}")))
    }
}

impl PartitionFile {
    pub fn into_instance(self, path: &str) -> Result<PartitionInstance, CliError> {
        if let Some(i) = first_zero(&self.weights) {
            return Err(CliError::usage(format!(
                "{path}: field `weights[{i}]`: weight must be at least 1"
            )));
        }
        PartitionInstance::new(self.weights).map_err(|e| CliError::usage(format!("{path}: {e}")))
    }
}

impl CertificateFile {
    pub fn from_certificate(cert: &Certificate) -> Self {
        CertificateFile {
            assignment: cert.schedule.assignment().to_vec(),
            makespan: cert.claimed_makespan,
        }
    }

    pub fn into_certificate(self) -> Certificate {
        Certificate::new(Schedule::new(self.assignment), self.makespan)
    }
}

impl OrderedScheduleFile {
    pub fn into_schedule(self) -> OrderedSchedule {
        OrderedSchedule::new(
            self.queues
                .into_iter()
                .map(|q| q.into_iter().map(|(r, i)| JobRef::new(r, i)).collect())
                .collect(),
        )
    }
}

/// Compact JSON on one line.
pub fn to_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("file types always serialize")
}
