//! Canonical labelling by colour refinement plus exhaustive individualization.
//!
//! Every branch of the search tree is explored (there is no automorphism
//! pruning), which is fine for the small graphs this crate enumerates.

use super::Graph;
use crate::vertex_set::VertexSet;

/// Isomorphism-invariant encoding: the adjacency rows of the canonically
/// relabelled graph. Two graphs are isomorphic iff their forms are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    rows: Vec<u64>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for (u, &row) in self.rows.iter().enumerate() {
            for v in VertexSet::from_bits(row).iter().filter(|&v| v > u) {
                g.insert_edge(u, v).expect("canonical rows are symmetric");
            }
        }
        g
    }
}

impl Graph {
    /// Permutation `perm[old] = new` realizing the canonical form.
    pub fn canonical_labeling(&self) -> Vec<usize> {
        let n = self.n();
        if n == 0 {
            return Vec::new();
        }
        let colors = refine(self, (0..n).map(|v| self.degree(v) as u32).collect());
        let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
        search(self, colors, &mut best);
        best.expect("search visits at least one leaf").1
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        let perm = self.canonical_labeling();
        CanonicalForm { n: self.n(), rows: rows_under(self, &perm) }
    }

    pub fn canonical_graph(&self) -> Graph {
        self.permuted(&self.canonical_labeling())
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.n() == other.n()
            && self.edge_count() == other.edge_count()
            && self.canonical_form() == other.canonical_form()
    }
}

fn rows_under(g: &Graph, perm: &[usize]) -> Vec<u64> {
    let mut rows = vec![0u64; g.n()];
    for v in 0..g.n() {
        rows[perm[v]] = g.neighbors(v).iter().fold(0u64, |acc, w| acc | 1 << perm[w]);
    }
    rows
}

/// Rank-normalizes `keys` so colours are `0..k` in key order.
fn normalize<K: Ord + Clone>(keys: &[K]) -> Vec<u32> {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter().map(|k| sorted.binary_search(k).unwrap() as u32).collect()
}

/// Equitable refinement: split colour classes by the multiset of neighbour
/// colours until stable.
fn refine(g: &Graph, colors: Vec<u32>) -> Vec<u32> {
    let mut colors = normalize(&colors);
    loop {
        let count = distinct(&colors);
        let sigs: Vec<(u32, Vec<u32>)> = (0..g.n())
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).iter().map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let next = normalize(&sigs);
        if distinct(&next) == count {
            return next;
        }
        colors = next;
    }
}

fn distinct(colors: &[u32]) -> usize {
    colors.iter().copied().max().map_or(0, |m| m as usize + 1)
}

fn search(g: &Graph, colors: Vec<u32>, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    let n = g.n();
    if distinct(&colors) == n {
        let perm: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
        let rows = rows_under(g, &perm);
        if best.as_ref().is_none_or(|(b, _)| rows < *b) {
            *best = Some((rows, perm));
        }
        return;
    }
    // First non-singleton colour class.
    let mut sizes = vec![0usize; n];
    for &c in &colors {
        sizes[c as usize] += 1;
    }
    let target = (0..n).find(|&c| sizes[c] > 1).unwrap() as u32;
    for v in (0..n).filter(|&v| colors[v] == target) {
        let keyed: Vec<u32> = (0..n).map(|u| 2 * colors[u] + u32::from(u != v)).collect();
        search(g, refine(g, keyed), best);
    }
}
