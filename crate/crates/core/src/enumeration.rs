//! Exhaustive enumeration of numerical semigroups by genus over the
//! semigroup tree.
//!
//! The tree is rooted at ℕ and the children of `S` are `S \ {g}` for every
//! minimal generator `g > f(S)`. Every semigroup of genus `g` appears exactly
//! once at depth `g`, so no deduplication table is needed. Subtrees are
//! processed in parallel and per-subtree results are merged with an
//! associative, commutative reduction, which makes every summary independent
//! of the schedule.

use std::collections::BTreeMap;
use std::marker::PhantomData;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::Semigroup;
use crate::verifiers::{LemmaFinding, LemmaId};

pub const DEFAULT_NODE_LIMIT: u64 = 100_000_000;

/// Below this many remaining levels a subtree is walked sequentially.
const SEQUENTIAL_DEPTH: u64 = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeNode {
    pub semigroup: Semigroup,
    /// Minimal generators above the Frobenius number.
    pub effective_generators: Vec<u64>,
    /// Equals the genus.
    pub depth: u64,
}

impl TreeNode {
    pub fn root() -> Self {
        Self::new(Semigroup::naturals(), 0)
    }

    fn new(semigroup: Semigroup, depth: u64) -> Self {
        let f = semigroup.frobenius();
        let effective_generators = semigroup
            .generators()
            .iter()
            .copied()
            .filter(|&g| g as i64 > f)
            .collect();
        Self {
            semigroup,
            effective_generators,
            depth,
        }
    }

    pub fn children(&self) -> Result<Vec<TreeNode>> {
        self.effective_generators
            .iter()
            .map(|&g| {
                let child = self.semigroup.remove_generator(g)?;
                Ok(TreeNode::new(child, self.depth + 1))
            })
            .collect()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckerStats {
    pub checked: u64,
    pub hypothesis_met: u64,
    /// Generator lists of the counterexamples, sorted.
    pub counterexamples: Vec<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinSlack {
    pub slack: i64,
    pub witness: Vec<u64>,
}

impl MinSlack {
    /// Smallest slack wins; ties go to the lexicographically smallest
    /// generator list.
    fn better(self, other: Self) -> Self {
        if (other.slack, &other.witness) < (self.slack, &self.witness) {
            other
        } else {
            self
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationSummary {
    /// Semigroups traversed, per genus.
    pub genus_counts: Vec<u64>,
    /// Semigroups handed to the visitor (those passing the filter).
    pub visited: u64,
    pub checker_stats: BTreeMap<LemmaId, CheckerStats>,
    pub wilf_min_slack: Option<MinSlack>,
}

impl VerificationSummary {
    pub fn new(max_genus: u64) -> Self {
        Self {
            genus_counts: vec![0; max_genus as usize + 1],
            visited: 0,
            checker_stats: BTreeMap::new(),
            wilf_min_slack: None,
        }
    }

    pub fn record(&mut self, finding: &LemmaFinding) {
        let stats = self.checker_stats.entry(finding.lemma_id).or_default();
        stats.checked += 1;
        if finding.hypothesis_met {
            stats.hypothesis_met += 1;
        }
        if finding.is_counterexample() {
            stats.counterexamples.push(finding.semigroup.clone());
        }
    }

    pub fn observe_slack(&mut self, slack: i64, s: &Semigroup) {
        let candidate = MinSlack {
            slack,
            witness: s.generators().to_vec(),
        };
        self.wilf_min_slack = Some(match self.wilf_min_slack.take() {
            Some(current) => current.better(candidate),
            None => candidate,
        });
    }

    pub fn merge(mut self, other: Self) -> Self {
        if self.genus_counts.len() < other.genus_counts.len() {
            self.genus_counts.resize(other.genus_counts.len(), 0);
        }
        for (a, b) in self.genus_counts.iter_mut().zip(&other.genus_counts) {
            *a += b;
        }
        self.visited += other.visited;
        for (id, stats) in other.checker_stats {
            let mine = self.checker_stats.entry(id).or_default();
            mine.checked += stats.checked;
            mine.hypothesis_met += stats.hypothesis_met;
            mine.counterexamples.extend(stats.counterexamples);
        }
        self.wilf_min_slack = match (self.wilf_min_slack, other.wilf_min_slack) {
            (Some(a), Some(b)) => Some(a.better(b)),
            (a, b) => a.or(b),
        };
        self
    }

    pub fn total(&self) -> u64 {
        self.genus_counts.iter().sum()
    }

    pub fn counterexample_count(&self) -> usize {
        self.checker_stats
            .values()
            .map(|s| s.counterexamples.len())
            .sum()
    }

    fn finalize(mut self) -> Self {
        for stats in self.checker_stats.values_mut() {
            stats.counterexamples.sort();
        }
        self
    }
}

/// Configuration of a tree traversal.
#[derive(Clone, Debug)]
pub struct Enumerator {
    pub max_genus: u64,
    pub node_limit: u64,
    /// Worker threads; `None` uses the global rayon pool.
    pub jobs: Option<usize>,
}

impl Enumerator {
    pub fn new(max_genus: u64) -> Self {
        Self {
            max_genus,
            node_limit: DEFAULT_NODE_LIMIT,
            jobs: None,
        }
    }

    pub fn node_limit(mut self, limit: u64) -> Self {
        self.node_limit = limit;
        self
    }

    pub fn jobs(mut self, jobs: usize) -> Self {
        self.jobs = Some(jobs.max(1));
        self
    }

    /// Folds every tree node of genus `<= max_genus` into per-subtree
    /// accumulators that are combined with `merge`. `merge` must be
    /// associative and commutative for the result to be schedule-independent.
    pub fn fold<T, I, F, M>(&self, identity: I, fold: F, merge: M) -> Result<T>
    where
        T: Send,
        I: Fn() -> T + Sync,
        F: Fn(&mut T, &TreeNode) -> Result<()> + Sync,
        M: Fn(T, T) -> T + Sync,
    {
        let walker = Walker {
            max_genus: self.max_genus,
            limit: self.node_limit,
            nodes: AtomicU64::new(0),
            identity: &identity,
            fold: &fold,
            merge: &merge,
            _acc: PhantomData,
        };
        let run = || walker.walk(TreeNode::root());
        match self.jobs {
            None => run(),
            Some(n) => rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::InternalInconsistency(format!("thread pool: {e}")))?
                .install(run),
        }
    }

    /// Calls `visitor` once per semigroup of genus `<= max_genus`.
    pub fn run<V>(&self, visitor: V) -> Result<VerificationSummary>
    where
        V: Fn(&Semigroup, &mut VerificationSummary) -> Result<()> + Sync,
    {
        self.run_filtered(|_| true, visitor)
    }

    /// Like [`run`](Self::run) but only hands semigroups satisfying
    /// `predicate` to the visitor. The whole tree is still traversed.
    pub fn run_filtered<P, V>(&self, predicate: P, visitor: V) -> Result<VerificationSummary>
    where
        P: Fn(&Semigroup) -> bool + Sync,
        V: Fn(&Semigroup, &mut VerificationSummary) -> Result<()> + Sync,
    {
        let max_genus = self.max_genus;
        let summary = self.fold(
            || VerificationSummary::new(max_genus),
            |acc, node| {
                acc.genus_counts[node.depth as usize] += 1;
                if predicate(&node.semigroup) {
                    acc.visited += 1;
                    visitor(&node.semigroup, acc)?;
                }
                Ok(())
            },
            VerificationSummary::merge,
        )?;
        Ok(summary.finalize())
    }
}

struct Walker<'a, T, I, F, M> {
    max_genus: u64,
    limit: u64,
    nodes: AtomicU64,
    identity: &'a I,
    fold: &'a F,
    merge: &'a M,
    _acc: PhantomData<fn() -> T>,
}

impl<T, I, F, M> Walker<'_, T, I, F, M>
where
    T: Send,
    I: Fn() -> T + Sync,
    F: Fn(&mut T, &TreeNode) -> Result<()> + Sync,
    M: Fn(T, T) -> T + Sync,
{
    fn walk(&self, node: TreeNode) -> Result<T> {
        let mut acc = (self.identity)();
        if self.max_genus - node.depth <= SEQUENTIAL_DEPTH {
            self.walk_sequential(node, &mut acc)?;
            return Ok(acc);
        }
        self.visit(&node, &mut acc)?;
        let below = node
            .children()?
            .into_par_iter()
            .map(|child| self.walk(child))
            .try_reduce(self.identity, |a, b| Ok((self.merge)(a, b)))?;
        Ok((self.merge)(acc, below))
    }

    fn walk_sequential(&self, node: TreeNode, acc: &mut T) -> Result<()> {
        self.visit(&node, acc)?;
        if node.depth < self.max_genus {
            for child in node.children()? {
                self.walk_sequential(child, acc)?;
            }
        }
        Ok(())
    }

    fn visit(&self, node: &TreeNode, acc: &mut T) -> Result<()> {
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.limit {
            return Err(Error::ResourceLimit { limit: self.limit });
        }
        (self.fold)(acc, node)
    }
}

/// Visits every numerical semigroup of genus `<= max_genus`.
pub fn enumerate<V>(max_genus: u64, visitor: V) -> Result<VerificationSummary>
where
    V: Fn(&Semigroup, &mut VerificationSummary) -> Result<()> + Sync,
{
    Enumerator::new(max_genus).run(visitor)
}

/// Visits every numerical semigroup of genus `<= max_genus` satisfying
/// `predicate`.
pub fn enumerate_filtered<P, V>(
    max_genus: u64,
    predicate: P,
    visitor: V,
) -> Result<VerificationSummary>
where
    P: Fn(&Semigroup) -> bool + Sync,
    V: Fn(&Semigroup, &mut VerificationSummary) -> Result<()> + Sync,
{
    Enumerator::new(max_genus).run_filtered(predicate, visitor)
}
