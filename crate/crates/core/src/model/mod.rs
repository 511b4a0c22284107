//! H-models: labelings of a host graph `G` by the vertices of a target `H`.

mod enumerate;
mod hits;
mod lemmas;
mod structure;

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub use enumerate::{enumerate_models, EnumOptions, DEFAULT_BUDGET};
pub use lemmas::{LemmaCheck, LemmaReport, LemmaViolation};
pub use structure::{EssentialEdge, LynchpinDesignation, WeakConnection};

/// The first model condition a labeling fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Violation {
    EmptyBranch { label: usize },
    DisconnectedBranch { label: usize },
    MissingEdge { a: usize, b: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::EmptyBranch { label } => write!(f, "branch set {label} is empty"),
            Violation::DisconnectedBranch { label } => write!(f, "branch set {label} disconnected"),
            Violation::MissingEdge { a, b } => write!(f, "no host edge connects branch sets {a} and {b}"),
        }
    }
}

/// A labeling `f: V(G) -> V(H)` together with its branch sets.
///
/// Construction only checks shape; use [`HModel::validate`] (or
/// [`HModel::valid`]) for the model conditions. Most structural queries
/// assume a valid model.
#[derive(Clone)]
pub struct HModel<'g> {
    host: &'g Graph,
    target: &'g Graph,
    labels: Vec<usize>,
    branches: Vec<VertexSet>,
}

impl<'g> HModel<'g> {
    pub fn new(host: &'g Graph, target: &'g Graph, labels: Vec<usize>) -> Result<Self> {
        if labels.len() != host.n() {
            return Err(Error::ShapeMismatch { expected: host.n(), got: labels.len() });
        }
        let k = target.n();
        let mut branches = vec![VertexSet::EMPTY; k];
        for (v, &l) in labels.iter().enumerate() {
            if l >= k {
                return Err(Error::LabelOutOfRange { label: l, k });
            }
            branches[l].insert(v);
        }
        Ok(HModel { host, target, labels, branches })
    }

    /// [`HModel::new`] followed by validation.
    pub fn valid(host: &'g Graph, target: &'g Graph, labels: Vec<usize>) -> Result<Self> {
        let m = Self::new(host, target, labels)?;
        m.validate().map_err(Error::InvalidModel)?;
        Ok(m)
    }

    pub fn host(&self) -> &'g Graph {
        self.host
    }

    pub fn target(&self) -> &'g Graph {
        self.target
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn into_labels(self) -> Vec<usize> {
        self.labels
    }

    #[inline]
    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    /// Vertex set of the branch set `G(f, a)`.
    #[inline]
    pub fn branch(&self, a: usize) -> VertexSet {
        self.branches[a]
    }

    /// Number of labels, `|V(H)|`.
    pub fn label_count(&self) -> usize {
        self.target.n()
    }

    pub fn validate(&self) -> std::result::Result<(), Violation> {
        let k = self.label_count();
        if let Some(label) = (0..k).find(|&a| self.branches[a].is_empty()) {
            return Err(Violation::EmptyBranch { label });
        }
        if let Some(label) = (0..k).find(|&a| !self.host.is_connected_within(self.branches[a])) {
            return Err(Violation::DisconnectedBranch { label });
        }
        for (a, b) in self.target.edges() {
            if !self.linked(a, b) {
                return Err(Violation::MissingEdge { a, b });
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// Whether some host edge joins branch sets `a` and `b`.
    pub fn linked(&self, a: usize, b: usize) -> bool {
        self.host.neighborhood(self.branches[a]).intersects(self.branches[b])
    }

    /// Copy with `v` relabeled to `b`; no validity check.
    pub fn with_label(&self, v: usize, b: usize) -> HModel<'g> {
        let mut m = self.clone();
        m.set_label(v, b);
        m
    }

    /// Relabels `v` to `b` in place; no validity check.
    pub fn set_label(&mut self, v: usize, b: usize) {
        let a = self.labels[v];
        self.branches[a].remove(v);
        self.branches[b].insert(v);
        self.labels[v] = b;
    }
}

impl PartialEq for HModel<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.host == other.host && self.target == other.target
    }
}

impl Eq for HModel<'_> {}

impl std::hash::Hash for HModel<'_> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.labels.hash(state);
    }
}

impl fmt::Debug for HModel<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HModel{:?}", self.labels)
    }
}

impl fmt::Display for HModel<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.labels)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::families;

    pub(crate) fn k(n: usize) -> Graph {
        families::gen_clique(n).unwrap()
    }

    pub(crate) fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e).unwrap()
    }

    #[test]
    fn validate_examples() {
        let (k3, k2) = (k(3), k(2));
        assert_eq!(HModel::new(&k3, &k2, vec![0, 1, 1]).unwrap().validate(), Ok(()));
        let c4 = families::gen_cycle(4).unwrap();
        let m = HModel::new(&c4, &k2, vec![0, 1, 0, 1]).unwrap();
        assert_eq!(m.validate(), Err(Violation::DisconnectedBranch { label: 0 }));
        let p3 = families::gen_path(3).unwrap();
        let m = HModel::new(&p3, &k2, vec![0, 1, 0]).unwrap();
        assert_eq!(m.validate(), Err(Violation::DisconnectedBranch { label: 0 }));
        assert_eq!(m.validate().unwrap_err().to_string(), "branch set 0 disconnected");
    }

    #[test]
    fn shape_errors() {
        let (k3, k2) = (k(3), k(2));
        assert_eq!(HModel::new(&k3, &k2, vec![0, 1]).unwrap_err(), Error::ShapeMismatch { expected: 3, got: 2 });
        assert_eq!(HModel::new(&k3, &k2, vec![0, 1, 2]).unwrap_err(), Error::LabelOutOfRange { label: 2, k: 2 });
    }

    #[test]
    fn missing_edge_and_empty_branch() {
        let p4 = families::gen_path(4).unwrap();
        let k3 = k(3);
        let m = HModel::new(&p4, &k3, vec![0, 1, 1, 2]).unwrap();
        assert_eq!(m.validate(), Err(Violation::MissingEdge { a: 0, b: 2 }));
        let m = HModel::new(&p4, &k3, vec![0, 0, 1, 1]).unwrap();
        assert_eq!(m.validate(), Err(Violation::EmptyBranch { label: 2 }));
    }

    #[test]
    fn relabel_tracks_branches() {
        let (k3, k2) = (k(3), k(2));
        let m = HModel::new(&k3, &k2, vec![0, 1, 1]).unwrap();
        let m2 = m.with_label(1, 0);
        assert_eq!(m2.labels(), &[0, 0, 1]);
        assert_eq!(m2.branch(0), [0usize, 1].iter().collect());
        assert_eq!(m2.branch(1), VertexSet::singleton(2));
    }
}
