//! Exact makespan minimization over the weighted tree.
//!
//! [`brute_force_opt`] compares the weights of all `m^n` leaves.
//! [`branch_and_bound`] walks the same tree but cuts subtrees whose lower
//! bound cannot beat the incumbent, and skips children that only relabel
//! machines with equal load.

use std::sync::atomic::{AtomicU64, Ordering};
use std::thread;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::model::{Instance, Schedule};
use crate::tree::{self, NodeView, Step, WeightedVisitor};

/// Default cap on the number of leaves a full enumeration may visit.
pub const DEFAULT_LEAF_CAP: u64 = 1 << 26;

/// An optimal schedule plus search statistics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub best_schedule: Schedule,
    pub optimum: u64,
    pub leaves_explored: BigUint,
    pub nodes_pruned: BigUint,
}

/// Fails with [`Error::BudgetExceeded`] when the tree has more than `cap` leaves.
pub fn check_leaf_budget(instance: &Instance, cap: u64) -> Result<()> {
    let leaves = BigUint::from(instance.machine_count()).pow(instance.job_count() as u32);
    if leaves > BigUint::from(cap) {
        return Err(Error::BudgetExceeded {
            requested: leaves.to_string(),
            budget: cap,
        });
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruteForceOptions {
    pub leaf_cap: u64,
    /// Worker threads; `1` runs on the calling thread.
    pub threads: usize,
}

impl Default for BruteForceOptions {
    fn default() -> Self {
        BruteForceOptions {
            leaf_cap: DEFAULT_LEAF_CAP,
            threads: 1,
        }
    }
}

struct BestLeaf {
    best: u64,
    schedule: Vec<u32>,
    leaves: u64,
}

impl BestLeaf {
    fn new() -> Self {
        BestLeaf {
            best: u64::MAX,
            schedule: Vec::new(),
            leaves: 0,
        }
    }
}

impl WeightedVisitor for BestLeaf {
    fn visit_leaf(&mut self, node: NodeView<'_>) -> Step {
        self.leaves += 1;
        // strict: the first (lexicographically least) argmin is kept
        if node.weight < self.best {
            self.best = node.weight;
            self.schedule.clear();
            self.schedule.extend_from_slice(node.prefix);
        }
        Step::Descend
    }
}

/// Exact optimum by enumerating every leaf, with default options.
///
/// The returned schedule is the lexicographically least optimal assignment.
pub fn brute_force_opt(instance: &Instance) -> Result<SolveResult> {
    brute_force_opt_with(instance, BruteForceOptions::default())
}

pub fn brute_force_opt_with(instance: &Instance, opts: BruteForceOptions) -> Result<SolveResult> {
    check_leaf_budget(instance, opts.leaf_cap)?;
    let threads = opts.threads.max(1);
    let (optimum, schedule, leaves) = if threads == 1 {
        let mut v = BestLeaf::new();
        tree::traverse(instance, &[], &mut v)?;
        (v.best, v.schedule, v.leaves)
    } else {
        brute_force_parallel(instance, threads)?
    };
    Ok(SolveResult {
        best_schedule: Schedule::new(schedule),
        optimum,
        leaves_explored: BigUint::from(leaves),
        nodes_pruned: BigUint::default(),
    })
}

/// Smallest level with at least `4 * threads` nodes, capped at the height.
fn split_level(instance: &Instance, threads: usize) -> usize {
    let m = instance.machine_count() as usize;
    let mut level = 0;
    let mut width = 1usize;
    while width < 4 * threads && level < instance.job_count() {
        width = width.saturating_mul(m);
        level += 1;
    }
    level
}

fn brute_force_parallel(instance: &Instance, threads: usize) -> Result<(u64, Vec<u32>, u64)> {
    let prefixes = tree::prefixes(instance.machine_count(), split_level(instance, threads));
    let per_worker: Vec<Result<(u64, Vec<u32>, u64)>> = thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|w| {
                let prefixes = &prefixes;
                scope.spawn(move || {
                    let mut best = (u64::MAX, Vec::new());
                    let mut leaves = 0;
                    for prefix in prefixes.iter().skip(w).step_by(threads) {
                        let mut v = BestLeaf::new();
                        tree::traverse(instance, prefix, &mut v)?;
                        leaves += v.leaves;
                        if (v.best, &v.schedule) < (best.0, &best.1) {
                            best = (v.best, v.schedule);
                        }
                    }
                    Ok((best.0, best.1, leaves))
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("solver worker panicked"))
            .collect()
    });
    let mut best = (u64::MAX, Vec::new());
    let mut leaves = 0;
    for r in per_worker {
        let (w, s, l) = r?;
        leaves += l;
        if !s.is_empty() && (w, &s) < (best.0, &best.1) {
            best = (w, s);
        }
    }
    Ok((best.0, best.1, leaves))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BnbOptions {
    /// Consider jobs longest first instead of in input order.
    pub lpt_order: bool,
    /// Worker threads; `1` runs on the calling thread.
    pub threads: usize,
}

impl Default for BnbOptions {
    fn default() -> Self {
        BnbOptions {
            lpt_order: false,
            threads: 1,
        }
    }
}

/// Per-level data the bound needs: work and longest job still unplaced.
struct Remaining {
    work: Vec<u64>,
    longest: Vec<u64>,
}

impl Remaining {
    fn new(instance: &Instance) -> Self {
        let p = instance.processing_times();
        let n = p.len();
        let mut work = vec![0; n + 1];
        let mut longest = vec![0; n + 1];
        for i in (0..n).rev() {
            work[i] = work[i + 1] + p[i];
            longest[i] = longest[i + 1].max(p[i]);
        }
        Remaining { work, longest }
    }
}

struct Bnb<'a> {
    remaining: &'a Remaining,
    incumbent: &'a AtomicU64,
    global_lb: u64,
    machine_count: u64,
    best: u64,
    schedule: Vec<u32>,
    leaves: u64,
    pruned: u64,
}

impl Bnb<'_> {
    fn lower_bound(&self, node: &NodeView<'_>) -> u64 {
        let level = node.level();
        let assigned: u64 = node.loads.iter().sum();
        let least = node.loads.iter().copied().min().unwrap_or(0);
        // every remaining job lands on a machine that already carries at least `least`
        let completion = (assigned + self.remaining.work[level]).div_ceil(self.machine_count);
        node.weight
            .max(completion)
            .max(least + self.remaining.longest[level])
    }
}

impl WeightedVisitor for Bnb<'_> {
    fn visit_inner(&mut self, node: NodeView<'_>) -> Step {
        let incumbent = self.incumbent.load(Ordering::Relaxed);
        if self.lower_bound(&node) >= incumbent {
            self.pruned += 1;
            return Step::Prune;
        }
        Step::Descend
    }

    fn visit_leaf(&mut self, node: NodeView<'_>) -> Step {
        self.leaves += 1;
        if node.weight < self.best {
            self.best = node.weight;
            self.schedule.clear();
            self.schedule.extend_from_slice(node.prefix);
            self.incumbent.fetch_min(node.weight, Ordering::Relaxed);
        }
        if self.incumbent.load(Ordering::Relaxed) <= self.global_lb {
            return Step::Stop;
        }
        Step::Descend
    }

    fn skip_child(&mut self, parent: NodeView<'_>, machine: u32) -> bool {
        let slot = machine as usize - 1;
        let load = parent.loads[slot];
        if parent.loads[..slot].contains(&load) {
            self.pruned += 1;
            return true;
        }
        false
    }
}

/// Exact optimum by depth-first branch and bound, with default options.
pub fn branch_and_bound(instance: &Instance) -> Result<SolveResult> {
    branch_and_bound_with(instance, BnbOptions::default())
}

/// Exact optimum by depth-first branch and bound.
///
/// A node at level `b` with loads `l` is cut when
/// `max(weight, ceil((sum l + remaining work) / m), min l + longest remaining job)`
/// reaches the incumbent. Children whose machine has the same load as a
/// lower-numbered machine are skipped, since they only relabel machines. The
/// search ends early once the incumbent meets `max(ceil(sum p / m), max p)`.
///
/// With several threads, subtrees of a fixed level are distributed and the
/// incumbent is shared through an atomic; a stale read only weakens pruning.
/// The optimum is the same for every thread count, the returned schedule and
/// statistics may differ.
pub fn branch_and_bound_with(instance: &Instance, opts: BnbOptions) -> Result<SolveResult> {
    if opts.lpt_order {
        let mut order: Vec<usize> = (0..instance.job_count()).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(instance.processing_times()[i]));
        let permuted = Instance::new(
            instance.machine_count(),
            order
                .iter()
                .map(|&i| instance.processing_times()[i])
                .collect(),
        )?;
        let inner = branch_and_bound_with(
            &permuted,
            BnbOptions {
                lpt_order: false,
                ..opts
            },
        )?;
        let mut assignment = vec![0; instance.job_count()];
        for (pos, &job) in order.iter().enumerate() {
            assignment[job] = inner.best_schedule.assignment()[pos];
        }
        return Ok(SolveResult {
            best_schedule: Schedule::new(assignment),
            ..inner
        });
    }

    let remaining = Remaining::new(instance);
    let incumbent = AtomicU64::new(u64::MAX);
    let global_lb = instance.makespan_lower_bound();
    let make = || Bnb {
        remaining: &remaining,
        incumbent: &incumbent,
        global_lb,
        machine_count: u64::from(instance.machine_count()),
        best: u64::MAX,
        schedule: Vec::new(),
        leaves: 0,
        pruned: 0,
    };

    let threads = opts.threads.max(1);
    let runs: Vec<(u64, Vec<u32>, u64, u64)> = if threads == 1 {
        let mut v = make();
        tree::traverse(instance, &[], &mut v)?;
        vec![(v.best, v.schedule, v.leaves, v.pruned)]
    } else {
        // The first leaf is reached before fanning out so every worker starts
        // with a finite incumbent.
        let mut seed = make();
        let first: Vec<u32> = vec![1; instance.job_count()];
        let first_weight = instance.makespan(&Schedule::new(first.clone()))?;
        seed.best = first_weight;
        seed.schedule = first;
        seed.leaves = 1;
        incumbent.store(first_weight, Ordering::Relaxed);
        let prefixes = tree::prefixes(instance.machine_count(), split_level(instance, threads));
        let mut runs: Vec<(u64, Vec<u32>, u64, u64)> = thread::scope(|scope| {
            let handles: Vec<_> = (0..threads)
                .map(|w| {
                    let prefixes = &prefixes;
                    let make = &make;
                    scope.spawn(move || -> Result<(u64, Vec<u32>, u64, u64)> {
                        let mut v = make();
                        for prefix in prefixes.iter().skip(w).step_by(threads) {
                            if !tree::traverse(instance, prefix, &mut v)? {
                                break;
                            }
                        }
                        Ok((v.best, v.schedule, v.leaves, v.pruned))
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("solver worker panicked"))
                .collect::<Result<Vec<_>>>()
        })?;
        runs.push((seed.best, seed.schedule, seed.leaves, seed.pruned));
        runs
    };

    let leaves: u64 = runs.iter().map(|r| r.2).sum();
    let pruned: u64 = runs.iter().map(|r| r.3).sum();
    let (optimum, schedule, _, _) = runs
        .into_iter()
        .filter(|r| !r.1.is_empty())
        .min_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)))
        .expect("at least one leaf is always reached");
    Ok(SolveResult {
        best_schedule: Schedule::new(schedule),
        optimum,
        leaves_explored: BigUint::from(leaves),
        nodes_pruned: BigUint::from(pruned),
    })
}
