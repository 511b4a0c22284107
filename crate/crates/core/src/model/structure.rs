//! Connecting edges, essential and crucial vertices, weak connections,
//! lynchpins and branch-set block trees.

use serde::Serialize;

use super::HModel;
use crate::error::{Error, Result};
use crate::graph::BlockTree;
use crate::vertex_set::VertexSet;

/// The only host edge between branch sets `a` and `b` (`a < b`); `edge.0`
/// lies in `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EssentialEdge {
    pub a: usize,
    pub b: usize,
    pub edge: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeakConnection {
    pub label_a: usize,
    pub label_b: usize,
    /// Vertex of `G(f, label_a)` essential for `label_b`, if any.
    pub essential_in_a: Option<usize>,
    /// Vertex of `G(f, label_b)` essential for `label_a`, if any.
    pub essential_in_b: Option<usize>,
    pub essential_edge: Option<(usize, usize)>,
}

impl WeakConnection {
    pub fn witnesses(&self) -> VertexSet {
        self.essential_in_a.into_iter().chain(self.essential_in_b).collect()
    }

    /// Vertices that may serve as this connection's lynchpin: both ends of
    /// the essential edge, or else the single essential vertex.
    pub fn lynchpin_choices(&self) -> Vec<usize> {
        match self.essential_edge {
            Some((u, v)) => vec![u, v],
            None => self.witnesses().to_vec(),
        }
    }

    pub fn involves(&self, label: usize) -> bool {
        self.label_a == label || self.label_b == label
    }
}

/// One lynchpin per weak connection, parallel to the connection list it was
/// drawn from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LynchpinDesignation {
    pub lynchpins: Vec<usize>,
}

impl LynchpinDesignation {
    pub fn vertices(&self) -> VertexSet {
        self.lynchpins.iter().collect()
    }
}

/// Cartesian product of the lynchpin choices of `conns`.
pub(crate) fn designations_of(conns: &[WeakConnection]) -> Vec<LynchpinDesignation> {
    let mut out = vec![Vec::with_capacity(conns.len())];
    for c in conns {
        let choices = c.lynchpin_choices();
        out = out
            .into_iter()
            .flat_map(|prefix| {
                choices.iter().map(move |&v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    out.into_iter().map(|lynchpins| LynchpinDesignation { lynchpins }).collect()
}

impl HModel<'_> {
    fn check_h_edge(&self, a: usize, b: usize) -> Result<()> {
        let k = self.label_count();
        for l in [a, b] {
            if l >= k {
                return Err(Error::LabelOutOfRange { label: l, k });
            }
        }
        if a == b || !self.target().has_edge(a, b) {
            return Err(Error::NotAnHEdge(a, b));
        }
        Ok(())
    }

    /// Host edges `(u, v)` with `u` in branch `a` and `v` in branch `b`.
    pub fn connecting_edges(&self, a: usize, b: usize) -> Vec<(usize, usize)> {
        let host = self.host();
        let bb = self.branch(b);
        self.branch(a).iter().flat_map(|u| (host.neighbors(u) & bb).iter().map(move |v| (u, v))).collect()
    }

    /// Vertices of branch `a` with a neighbour in branch `b`.
    pub fn endpoints_toward(&self, a: usize, b: usize) -> VertexSet {
        self.branch(a) & self.host().neighborhood(self.branch(b))
    }

    /// Vertices with a neighbour in a different branch set.
    pub fn connecting_vertices(&self) -> VertexSet {
        let host = self.host();
        host.vertices().iter().filter(|&v| !(host.neighbors(v) - self.branch(self.label(v))).is_empty()).collect()
    }

    pub fn essential_edges(&self) -> Vec<EssentialEdge> {
        self.target()
            .edges()
            .into_iter()
            .filter_map(|(a, b)| match self.connecting_edges(a, b)[..] {
                [edge] => Some(EssentialEdge { a, b, edge }),
                _ => None,
            })
            .collect()
    }

    /// Vertices of branch `a` through which every `a`–`b` connecting edge
    /// passes (at most one).
    pub fn essential_vertices(&self, a: usize, b: usize) -> Result<VertexSet> {
        self.check_h_edge(a, b)?;
        let ends = self.endpoints_toward(a, b);
        Ok(if ends.len() == 1 { ends } else { VertexSet::EMPTY })
    }

    /// Whether `v` is an essential vertex for label `c`.
    pub fn is_essential_for(&self, v: usize, c: usize) -> bool {
        let a = self.label(v);
        a != c && self.target().has_edge(a, c) && self.endpoints_toward(a, c) == VertexSet::singleton(v)
    }

    /// Labels `v` is essential for.
    pub fn essential_labels(&self, v: usize) -> VertexSet {
        let a = self.label(v);
        self.target().neighbors(a).iter().filter(|&c| self.is_essential_for(v, c)).collect()
    }

    pub fn is_crucial(&self, v: usize) -> bool {
        self.essential_labels(v).len() >= 2
    }

    pub fn crucial_vertices(&self) -> VertexSet {
        self.host().vertices().iter().filter(|&v| self.is_crucial(v)).collect()
    }

    /// `v` has a neighbour labeled `b` and is essential for some label other
    /// than its own and `b`.
    pub fn is_b_crucial(&self, v: usize, b: usize) -> bool {
        b != self.label(v)
            && self.host().neighbors(v).intersects(self.branch(b))
            && !self.essential_labels(v).without(b).is_empty()
    }

    pub fn weak_connections(&self) -> Vec<WeakConnection> {
        let single = |s: VertexSet| if s.len() == 1 { s.first() } else { None };
        self.target()
            .edges()
            .into_iter()
            .filter_map(|(a, b)| {
                let essential_in_a = single(self.endpoints_toward(a, b));
                let essential_in_b = single(self.endpoints_toward(b, a));
                if essential_in_a.is_none() && essential_in_b.is_none() {
                    return None;
                }
                let essential_edge = match self.connecting_edges(a, b)[..] {
                    [e] => Some(e),
                    _ => None,
                };
                Some(WeakConnection { label_a: a, label_b: b, essential_in_a, essential_in_b, essential_edge })
            })
            .collect()
    }

    /// Every lynchpin designation over all weak connections.
    pub fn lynchpin_designations(&self) -> Vec<LynchpinDesignation> {
        designations_of(&self.weak_connections())
    }

    /// `T(G, f, a)`.
    pub fn branch_block_tree(&self, a: usize) -> BlockTree {
        self.host().block_tree_within(self.branch(a))
    }

    /// `T(G, f, a, A)`: the blocks of branch `a` meeting `set`.
    pub fn restricted_block_subtree(&self, a: usize, set: VertexSet) -> Result<BlockTree> {
        if !set.is_subset(self.branch(a)) {
            return Err(Error::BadParameter(format!("{set} is not inside branch set {a}")));
        }
        Ok(self.branch_block_tree(a).restrict_to(set))
    }

    /// Interior vertices of leaf blocks of the branch set labeled `a`.
    pub fn leaf_interior(&self, a: usize) -> VertexSet {
        self.branch_block_tree(a).leaf_interior()
    }

    pub fn leaf_crucial_vertices(&self) -> VertexSet {
        let crucial = self.crucial_vertices();
        (0..self.label_count()).fold(VertexSet::EMPTY, |acc, a| acc | (self.leaf_interior(a) & crucial))
    }

    /// `l`-crucial vertices that are interior vertices of leaf blocks.
    pub fn leaf_l_crucial_vertices(&self, l: usize) -> VertexSet {
        (0..self.label_count())
            .filter(|&a| a != l)
            .flat_map(|a| self.leaf_interior(a).iter())
            .filter(|&v| self.is_b_crucial(v, l))
            .collect()
    }

    pub fn is_leaf_crucial_model(&self) -> bool {
        !self.leaf_crucial_vertices().is_empty()
    }

    pub fn is_leaf_l_crucial_model(&self, l: usize) -> bool {
        !self.leaf_l_crucial_vertices(l).is_empty()
    }
}
