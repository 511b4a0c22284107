use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use super::HModel;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Default cap on visited search states.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumOptions {
    /// Maximum number of partial assignments visited.
    pub budget: u64,
    /// Also prune partial labelings whose label classes can no longer be
    /// connected through unassigned vertices.
    pub prune_connectivity: bool,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions { budget: DEFAULT_BUDGET, prune_connectivity: false }
    }
}

/// All H-models of `g`, in lexicographic order of their label arrays.
///
/// Backtracks over vertices in index order; the search fans out over the
/// label of vertex 0 and the per-branch results are concatenated in label
/// order, so the output does not depend on the thread count.
pub fn enumerate_models<'g>(g: &'g Graph, h: &'g Graph, opts: EnumOptions) -> Result<Vec<HModel<'g>>> {
    let k = h.n();
    if k == 0 {
        return Err(Error::BadParameter("target graph has no vertices".into()));
    }
    let n = g.n();
    if n < k {
        return Ok(Vec::new());
    }
    let visited = AtomicU64::new(0);
    let parts: Vec<Result<Vec<Vec<usize>>>> = (0..k)
        .into_par_iter()
        .map(|first| {
            let mut search = Search { g, h, k, opts, visited: &visited, labels: vec![0; n], out: Vec::new() };
            search.labels[0] = first;
            search.descend(1)?;
            Ok(search.out)
        })
        .collect();
    let mut out = Vec::new();
    for part in parts {
        for labels in part? {
            out.push(HModel::new(g, h, labels).expect("labels are in range"));
        }
    }
    Ok(out)
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    k: usize,
    opts: EnumOptions,
    visited: &'a AtomicU64,
    labels: Vec<usize>,
    out: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// `labels[..depth]` is assigned.
    fn descend(&mut self, depth: usize) -> Result<()> {
        if self.visited.fetch_add(1, Ordering::Relaxed) >= self.opts.budget {
            return Err(Error::StateSpaceExceeded { budget: self.opts.budget });
        }
        let n = self.labels.len();
        let mut used = VertexSet::EMPTY;
        for &l in &self.labels[..depth] {
            used.insert(l);
        }
        if self.k - used.len() > n - depth {
            return Ok(());
        }
        if self.opts.prune_connectivity && !self.classes_connectable(depth) {
            return Ok(());
        }
        if depth == n {
            let m = HModel::new(self.g, self.h, self.labels.clone()).expect("labels are in range");
            if m.is_valid() {
                self.out.push(self.labels.clone());
            }
            return Ok(());
        }
        for l in 0..self.k {
            self.labels[depth] = l;
            self.descend(depth + 1)?;
        }
        Ok(())
    }

    /// Each assigned label class lies inside one component of the subgraph
    /// induced by that class plus the unassigned vertices.
    fn classes_connectable(&self, depth: usize) -> bool {
        let n = self.labels.len();
        let free = VertexSet::full(n) - VertexSet::full(depth);
        let mut classes = vec![VertexSet::EMPTY; self.k];
        for (v, &l) in self.labels[..depth].iter().enumerate() {
            classes[l].insert(v);
        }
        classes.iter().all(|&c| match c.first() {
            None => true,
            Some(s) => c.is_subset(self.g.reach_within(s, c | free)),
        })
    }
}
