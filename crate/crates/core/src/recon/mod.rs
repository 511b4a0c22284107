//! Single-step legality, the reconfiguration graph and searches over it.

mod graph;
mod search;
mod witness;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::HModel;

pub use graph::{build_recon_graph, is_host, Diameter, ReconGraph, ReconSummary};
pub use search::shortest_sequence;
pub use witness::{disconnection_witness, k2_target};

/// A condition of the single-step rule, numbered as in [`HModel::legal_step`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Condition {
    /// The branch set being left keeps another vertex.
    NonEmpty,
    /// The vertex is not a cut vertex of its branch set.
    NotCut,
    /// The vertex has a neighbour with the new label.
    Nbr,
    /// The vertex is not crucial toward the new label.
    Edges,
    /// Shortcut rule only: the branch set has another universal vertex.
    NoUniversal,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::NonEmpty => "nonempty",
            Condition::NotCut => "notcut",
            Condition::Nbr => "nbr",
            Condition::Edges => "edges",
            Condition::NoUniversal => "universal",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StepVerdict {
    pub legal: bool,
    pub failed_condition: Option<Condition>,
}

impl StepVerdict {
    const LEGAL: StepVerdict = StepVerdict { legal: true, failed_condition: None };

    fn failed(c: Condition) -> Self {
        StepVerdict { legal: false, failed_condition: Some(c) }
    }
}

impl<'g> HModel<'g> {
    fn check_step(&self, v: usize, b: usize) -> Result<usize> {
        if v >= self.host().n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.host().n() });
        }
        if b >= self.label_count() {
            return Err(Error::LabelOutOfRange { label: b, k: self.label_count() });
        }
        let a = self.label(v);
        if a == b {
            return Err(Error::SameLabel { vertex: v, label: b });
        }
        Ok(a)
    }

    /// Whether relabeling `v` from `a = f(v)` to `b` yields a model, for a
    /// valid model `f`. The conditions, checked in order:
    /// 1. `G(f, a)` has another vertex;
    /// 2. `v` is not a cut vertex of `G(f, a)`;
    /// 3. `v` has a neighbour in `G(f, b)`;
    /// 4. `v` is not `b`-crucial.
    ///
    /// The first failing condition is reported.
    pub fn legal_step(&self, v: usize, b: usize) -> Result<StepVerdict> {
        let a = self.check_step(v, b)?;
        let branch = self.branch(a);
        let host = self.host();
        Ok(if branch.len() <= 1 {
            StepVerdict::failed(Condition::NonEmpty)
        } else if host.is_cut_vertex_within(branch, v) {
            StepVerdict::failed(Condition::NotCut)
        } else if !host.neighbors(v).intersects(self.branch(b)) {
            StepVerdict::failed(Condition::Nbr)
        } else if self.is_b_crucial(v, b) {
            StepVerdict::failed(Condition::Edges)
        } else {
            StepVerdict::LEGAL
        })
    }

    /// Sufficient condition: `G(f, a)` holds a universal vertex other than
    /// `v`, and `v` has a neighbour labeled `b`. A negative verdict only
    /// means the shortcut does not apply.
    pub fn legal_step_universal(&self, v: usize, b: usize) -> Result<StepVerdict> {
        let a = self.check_step(v, b)?;
        let host = self.host();
        Ok(if !self.branch(a).without(v).iter().any(|u| host.is_universal(u)) {
            StepVerdict::failed(Condition::NoUniversal)
        } else if !host.neighbors(v).intersects(self.branch(b)) {
            StepVerdict::failed(Condition::Nbr)
        } else {
            StepVerdict::LEGAL
        })
    }

    /// All `(vertex, label)` pairs that are legal single steps, by vertex
    /// then label.
    pub fn legal_moves(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for v in 0..self.host().n() {
            for b in 0..self.label_count() {
                if b != self.label(v) && self.legal_step(v, b).is_ok_and(|s| s.legal) {
                    out.push((v, b));
                }
            }
        }
        out
    }

    /// Models one legal step away, by vertex then label.
    pub fn neighbors(&self) -> Vec<HModel<'g>> {
        self.legal_moves().into_iter().map(|(v, b)| self.with_label(v, b)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn star3() -> crate::graph::Graph {
        families::gen_star(3).unwrap()
    }

    #[test]
    fn legal_step_examples() {
        let c4 = families::gen_cycle(4).unwrap();
        let k2 = families::gen_clique(2).unwrap();
        let m = HModel::valid(&c4, &k2, vec![0, 1, 1, 1]).unwrap();
        assert_eq!(m.legal_step(1, 0).unwrap(), StepVerdict::LEGAL);
        assert!(m.with_label(1, 0).is_valid());
        // Vertex 2 is the middle of the path 1-2-3 and has no 0-neighbour;
        // the cut-vertex condition is the first to fail.
        let verdict = m.legal_step(2, 0).unwrap();
        assert!(!verdict.legal);
        assert_eq!(verdict.failed_condition, Some(Condition::NotCut));
        assert!(!c4.neighbors(2).intersects(m.branch(0)));

        let s = star3();
        let m = HModel::valid(&s, &k2, vec![1, 0, 1, 1]).unwrap();
        assert_eq!(m.legal_step(1, 1).unwrap().failed_condition, Some(Condition::NonEmpty));
        assert_eq!(m.legal_step(0, 0).unwrap().failed_condition, Some(Condition::NotCut));
        assert_eq!(m.legal_step(0, 1), Err(Error::SameLabel { vertex: 0, label: 1 }));
    }

    #[test]
    fn edges_condition() {
        // Vertex 0 is the only 0-vertex adjacent to label 2 and also touches
        // label 1, so moving it to 1 would cut the 0-2 connection.
        let host = crate::graph::Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]).unwrap();
        let k3 = families::gen_clique(3).unwrap();
        let m = HModel::valid(&host, &k3, vec![0, 0, 1, 2]).unwrap();
        assert_eq!(m.legal_step(0, 1).unwrap().failed_condition, Some(Condition::Edges));
        assert_eq!(m.with_label(0, 1).validate(), Err(crate::model::Violation::MissingEdge { a: 0, b: 2 }));
        assert!(m.legal_step(0, 2).unwrap().legal);
    }

    #[test]
    fn universal_shortcut_examples() {
        let k5 = families::gen_clique(5).unwrap();
        let k4 = families::gen_clique(4).unwrap();
        let m = HModel::valid(&k5, &k4, vec![0, 0, 1, 2, 3]).unwrap();
        assert!(m.legal_step_universal(1, 2).unwrap().legal);
        assert!(m.legal_step(1, 2).unwrap().legal);
        let c4 = families::gen_cycle(4).unwrap();
        let k2 = families::gen_clique(2).unwrap();
        let m = HModel::valid(&c4, &k2, vec![0, 1, 1, 1]).unwrap();
        assert_eq!(m.legal_step_universal(1, 0).unwrap().failed_condition, Some(Condition::NoUniversal));
    }

    #[test]
    fn neighbor_examples() {
        let k3 = families::gen_clique(3).unwrap();
        let k2 = families::gen_clique(2).unwrap();
        let m = HModel::valid(&k3, &k2, vec![0, 1, 1]).unwrap();
        let ns: Vec<Vec<usize>> = m.neighbors().iter().map(|n| n.labels().to_vec()).collect();
        assert_eq!(ns, vec![vec![0, 0, 1], vec![0, 1, 0]]);
        let s = star3();
        assert!(HModel::valid(&s, &k2, vec![1, 0, 1, 1]).unwrap().neighbors().is_empty());
    }
}
