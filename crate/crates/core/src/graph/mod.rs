//! Simple undirected graphs on dense vertex indices `0..n`.
//!
//! Adjacency is stored as one [`VertexSet`] per vertex, which caps graphs at
//! [`MAX_VERTICES`](crate::MAX_VERTICES) vertices. Every structural question
//! this crate asks is at desk scale, so the cap is never the binding limit;
//! the state spaces built on top of these graphs are.

mod blocks;
mod canon;
mod flow;
mod io;
mod ops;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;
use crate::MAX_VERTICES;

pub use blocks::BlockTree;
pub use canon::CanonicalForm;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "EdgeListDoc", into = "EdgeListDoc")]
pub struct Graph {
    adj: Vec<VertexSet>,
}

/// Serialized shape of a graph: vertex count plus edge list.
#[derive(Serialize, Deserialize)]
pub struct EdgeListDoc {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl TryFrom<EdgeListDoc> for Graph {
    type Error = Error;

    fn try_from(doc: EdgeListDoc) -> Result<Self> {
        Graph::from_edges(doc.n, &doc.edges)
    }
}

impl From<Graph> for EdgeListDoc {
    fn from(g: Graph) -> Self {
        EdgeListDoc { n: g.n(), edges: g.edges() }
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// # Panics
    /// If `n` exceeds [`MAX_VERTICES`].
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graph on {n} vertices exceeds the {MAX_VERTICES}-vertex cap");
        Graph { adj: vec![VertexSet::EMPTY; n] }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge(n));
        }
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.adj[u].contains(v) {
            return Err(Error::EdgeExists(u.min(v), u.max(v)));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub(crate) fn remove_edge_mut(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n()).all(|v| self.degree(v) + 1 == self.n())
    }

    /// A vertex adjacent to every other vertex.
    pub fn is_universal(&self, v: usize) -> bool {
        self.degree(v) + 1 == self.n()
    }

    /// Union of the neighbourhoods of `set` (may intersect `set`).
    pub fn neighborhood(&self, set: VertexSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for v in set {
            out |= self.adj[v];
        }
        out
    }

    /// Vertices of `within` reachable from `start` inside `G[within]`.
    pub fn reach_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.neighborhood(frontier) & within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Whether `G[set]` is connected. The empty set is not connected.
    pub fn is_connected_within(&self, set: VertexSet) -> bool {
        match set.first() {
            None => false,
            Some(s) => self.reach_within(s, set) == set,
        }
    }

    /// Connected components of `G[set]`, ordered by smallest vertex.
    pub fn components_within(&self, set: VertexSet) -> Vec<VertexSet> {
        let mut rest = set;
        let mut out = Vec::new();
        while let Some(s) = rest.first() {
            let c = self.reach_within(s, rest);
            rest -= c;
            out.push(c);
        }
        out
    }

    /// Whether removing `v` disconnects `G[set]` (`v` must lie in `set`).
    pub fn is_cut_vertex_within(&self, set: VertexSet, v: usize) -> bool {
        let rest = set.without(v);
        !rest.is_empty() && !self.is_connected_within(rest)
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertices())
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// Vertices whose removal disconnects the graph.
    pub fn cut_vertices(&self) -> Result<VertexSet> {
        Ok(self.block_tree()?.cut_vertices)
    }

    /// Subgraph induced on `set`, relabelled to `0..|set|` in increasing order.
    pub fn induced(&self, set: VertexSet) -> Graph {
        let order = set.to_vec();
        let mut pos = [usize::MAX; MAX_VERTICES];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Graph::new(order.len());
        for (i, &v) in order.iter().enumerate() {
            g.adj[i] = (self.adj[v] & set).iter().map(|w| pos[w]).collect();
        }
        g
    }

    /// Graph obtained by renaming vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::new(self.n());
        for (u, v) in self.edges() {
            g.adj[perm[u]].insert(perm[v]);
            g.adj[perm[v]].insert(perm[u]);
        }
        g
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn p3() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn rejects_malformed_edges() {
        assert_eq!(Graph::from_edges(2, &[(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(Graph::from_edges(2, &[(0, 1), (1, 0)]), Err(Error::EdgeExists(0, 1)));
        assert!(matches!(Graph::from_edges(2, &[(0, 2)]), Err(Error::VertexOutOfRange { .. })));
        assert_eq!(Graph::from_edges(65, &[]), Err(Error::TooLarge(65)));
    }

    #[test]
    fn connectivity_examples() {
        assert!(p3().is_connected());
        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
        assert_eq!(two_edges.components().len(), 2);
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(k4.is_connected());
        assert!(!Graph::new(0).is_connected());
        assert!(Graph::new(1).is_connected());
    }

    #[test]
    fn induced_relabels_in_order() {
        let g = p3();
        let h = g.induced([1usize, 2].iter().collect());
        assert_eq!(h.edges(), vec![(0, 1)]);
    }

    #[test]
    fn serde_round_trip() {
        let g = p3();
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"n":3,"edges":[[0,1],[1,2]]}"#);
        let back: Graph = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[0,0]]}"#).is_err());
    }
}
