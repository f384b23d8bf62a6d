//! The scheduling solution space tree and its weighted form.
//!
//! The tree for an instance with `m` machines and `n` jobs is the perfect
//! `m`-ary tree of height `n`: a node at level `b` fixes the machines of jobs
//! `J_1..J_b`, its `j`-th child additionally places `J_{b+1}` on machine `j`,
//! and the leaves are exactly the `m^n` complete schedules. The weighted tree
//! attaches the machine load vector to every node, so a leaf's weight is the
//! makespan of its schedule.
//!
//! Nothing here materializes the tree. Nodes are produced on demand from an
//! assignment prefix and dropped once a walk moves past them, so a traversal
//! holds `O(n + m)` state regardless of how many leaves it visits.

use crate::error::{Error, Result};
use crate::model::{Instance, Schedule};

/// One configuration of the tree: which machines the first `level` jobs
/// went to, together with the resulting machine loads.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SsstNode {
    prefix: Vec<u32>,
    loads: Vec<u64>,
}

/// Weight of a weighted-tree node: the largest load in its load vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct NodeWeight(pub u64);

impl SsstNode {
    /// The initial configuration: no job placed, every load zero.
    pub fn root(instance: &Instance) -> Self {
        SsstNode {
            prefix: Vec::with_capacity(instance.job_count()),
            loads: vec![0; instance.machine_count() as usize],
        }
    }

    pub fn level(&self) -> usize {
        self.prefix.len()
    }

    pub fn assignment_prefix(&self) -> &[u32] {
        &self.prefix
    }

    pub fn load_vector(&self) -> &[u64] {
        &self.loads
    }

    pub fn weight(&self) -> NodeWeight {
        NodeWeight(self.loads.iter().copied().max().unwrap_or(0))
    }

    pub fn is_leaf(&self, instance: &Instance) -> bool {
        self.level() == instance.job_count()
    }

    /// The complete schedule of a leaf, `None` for inner nodes.
    pub fn schedule(&self, instance: &Instance) -> Option<Schedule> {
        self.is_leaf(instance)
            .then(|| Schedule::new(self.prefix.clone()))
    }

    /// Moves this node to its child along the arc `J_{level+1} -> M_machine`.
    pub fn descend(&mut self, instance: &Instance, machine: u32) -> Result<()> {
        let level = self.level();
        if level >= instance.job_count() {
            return Err(Error::LeafHasNoChildren { level });
        }
        if machine == 0 || machine > instance.machine_count() {
            return Err(Error::InvalidMachineIndex {
                job: level + 1,
                machine,
                machine_count: instance.machine_count(),
            });
        }
        self.loads[machine as usize - 1] += instance.processing_time(level + 1);
        self.prefix.push(machine);
        Ok(())
    }

    /// The `m` children of this node, ordered by machine `1..=m`.
    pub fn children(&self, instance: &Instance) -> Result<Vec<SsstNode>> {
        if self.is_leaf(instance) {
            return Err(Error::LeafHasNoChildren {
                level: self.level(),
            });
        }
        (1..=instance.machine_count())
            .map(|machine| {
                let mut child = self.clone();
                child.descend(instance, machine)?;
                Ok(child)
            })
            .collect()
    }

    /// Rebuilds the node addressed by `prefix`.
    pub fn at_prefix(instance: &Instance, prefix: &[u32]) -> Result<Self> {
        if prefix.len() > instance.job_count() {
            return Err(Error::LengthMismatch {
                expected: instance.job_count(),
                actual: prefix.len(),
            });
        }
        let mut node = SsstNode::root(instance);
        for &machine in prefix {
            node.descend(instance, machine)?;
        }
        Ok(node)
    }
}

/// The root node of the tree for `instance`.
pub fn root(instance: &Instance) -> SsstNode {
    SsstNode::root(instance)
}

/// The ordered children of `node`.
pub fn children(instance: &Instance, node: &SsstNode) -> Result<Vec<SsstNode>> {
    node.children(instance)
}

/// The root-to-leaf path selecting child `schedule[i]` at level `i`, all
/// `n + 1` nodes included.
pub fn walk_path(instance: &Instance, schedule: &Schedule) -> Result<Vec<SsstNode>> {
    instance.validate(schedule)?;
    let mut node = SsstNode::root(instance);
    let mut path = Vec::with_capacity(schedule.len() + 1);
    path.push(node.clone());
    for &machine in schedule.assignment() {
        node.descend(instance, machine)?;
        path.push(node.clone());
    }
    Ok(path)
}

/// Walks the path of `schedule` and returns only its leaf, discarding the
/// intermediate nodes as it goes. Linear in `n + m`.
pub fn walk_to_leaf(instance: &Instance, schedule: &Schedule) -> Result<SsstNode> {
    if schedule.len() != instance.job_count() {
        return Err(Error::LengthMismatch {
            expected: instance.job_count(),
            actual: schedule.len(),
        });
    }
    let mut node = SsstNode::root(instance);
    for &machine in schedule.assignment() {
        node.descend(instance, machine)?;
    }
    Ok(node)
}

/// Lazy lexicographic stream of the leaves (complete schedules) below a
/// fixed prefix.
#[derive(Debug, Clone)]
pub struct Leaves {
    machine_count: u32,
    fixed: usize,
    current: Option<Vec<u32>>,
}

impl Iterator for Leaves {
    type Item = Schedule;

    fn next(&mut self) -> Option<Schedule> {
        let out = self.current.clone()?;
        // odometer step over the free positions, machine 1 first
        let cur = self.current.as_mut().expect("checked above");
        let mut i = cur.len();
        loop {
            if i == self.fixed {
                self.current = None;
                break;
            }
            i -= 1;
            if cur[i] < self.machine_count {
                cur[i] += 1;
                break;
            }
            cur[i] = 1;
        }
        Some(Schedule::new(out))
    }
}

/// All `m^n` schedules of `instance` in lexicographic order.
pub fn leaves(instance: &Instance) -> Leaves {
    Leaves {
        machine_count: instance.machine_count(),
        fixed: 0,
        current: Some(vec![1; instance.job_count()]),
    }
}

/// The leaves of the subtree rooted at the node addressed by `prefix`.
///
/// Subtrees of distinct prefixes at the same level are disjoint and together
/// cover the tree, so they can be handed to independent workers.
pub fn leaves_with_prefix(instance: &Instance, prefix: &[u32]) -> Result<Leaves> {
    SsstNode::at_prefix(instance, prefix)?;
    let mut start = prefix.to_vec();
    start.resize(instance.job_count(), 1);
    Ok(Leaves {
        machine_count: instance.machine_count(),
        fixed: prefix.len(),
        current: Some(start),
    })
}

/// All assignment prefixes of length `level`, in lexicographic order.
pub fn prefixes(machine_count: u32, level: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::with_capacity(level)];
    for _ in 0..level {
        out = out
            .into_iter()
            .flat_map(|p| {
                (1..=machine_count).map(move |j| {
                    let mut q = p.clone();
                    q.push(j);
                    q
                })
            })
            .collect();
    }
    out
}

/// Read-only view of a node handed to a [`WeightedVisitor`].
#[derive(Debug, Clone, Copy)]
pub struct NodeView<'a> {
    pub prefix: &'a [u32],
    pub loads: &'a [u64],
    pub weight: u64,
}

impl NodeView<'_> {
    pub fn level(&self) -> usize {
        self.prefix.len()
    }
}

/// What a depth-first walk should do after visiting a node.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    /// Visit the node's children (ignored at leaves).
    Descend,
    /// Skip the node's subtree.
    Prune,
    /// Abandon the whole walk.
    Stop,
}

/// Callbacks for [`traverse`].
pub trait WeightedVisitor {
    /// Called for every inner node, the start node included.
    fn visit_inner(&mut self, _node: NodeView<'_>) -> Step {
        Step::Descend
    }

    /// Called for every leaf. Anything but [`Step::Stop`] continues the walk.
    fn visit_leaf(&mut self, node: NodeView<'_>) -> Step;

    /// Return `true` to skip the child of `parent` along machine `machine`.
    fn skip_child(&mut self, _parent: NodeView<'_>, _machine: u32) -> bool {
        false
    }
}

/// Depth-first walk of the weighted tree below `start`, children in machine
/// order. Returns `false` if the visitor stopped the walk.
///
/// Node weights are carried incrementally, so each step costs `O(1)` plus
/// whatever the visitor does.
pub fn traverse<V: WeightedVisitor>(
    instance: &Instance,
    start: &[u32],
    visitor: &mut V,
) -> Result<bool> {
    let node = SsstNode::at_prefix(instance, start)?;
    let weight = node.weight().0;
    let SsstNode {
        mut prefix,
        mut loads,
    } = node;
    Ok(walk(instance, &mut prefix, &mut loads, weight, visitor))
}

fn walk<V: WeightedVisitor>(
    instance: &Instance,
    prefix: &mut Vec<u32>,
    loads: &mut [u64],
    weight: u64,
    visitor: &mut V,
) -> bool {
    let level = prefix.len();
    let view = NodeView {
        prefix,
        loads,
        weight,
    };
    if level == instance.job_count() {
        return visitor.visit_leaf(view) != Step::Stop;
    }
    match visitor.visit_inner(view) {
        Step::Descend => {}
        Step::Prune => return true,
        Step::Stop => return false,
    }
    let p = instance.processing_times()[level];
    for machine in 1..=instance.machine_count() {
        let parent = NodeView {
            prefix,
            loads,
            weight,
        };
        if visitor.skip_child(parent, machine) {
            continue;
        }
        let slot = machine as usize - 1;
        loads[slot] += p;
        let child_weight = weight.max(loads[slot]);
        prefix.push(machine);
        let keep_going = walk(instance, prefix, loads, child_weight, visitor);
        prefix.pop();
        loads[slot] -= p;
        if !keep_going {
            return false;
        }
    }
    true
}
