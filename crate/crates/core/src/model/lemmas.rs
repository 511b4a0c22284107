//! Structural facts about models of highly connected hosts, checked on a
//! concrete model.

use serde::Serialize;

use super::structure::{designations_of, WeakConnection};
use super::HModel;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum LemmaCheck {
    /// Leaf blocks have enough interior vertices on connecting edges.
    LeafBlock,
    /// With `|V(H)| = k`, weak connections from `ℓ` to every label but `m`
    /// force interior `ℓ`–`m` connecting vertices in leaf blocks.
    TwoWeak,
    /// For `K_k`-models: no designation leaves non-lynchpins both in a
    /// branch set weakly connected to all others and outside it.
    AllWeak,
    /// For `K_4`-models of 4-connected hosts: no 4-cycle of weak connections
    /// leaves non-lynchpins at both ends of the cycle's closing pair.
    FourWeak,
    /// For `K_3`-models of 2-connected hosts: branch sets of size at least
    /// two have no crucial vertex.
    NoCrucial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaViolation {
    pub check: LemmaCheck,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    /// Checks whose hypotheses applied to this model.
    pub applied: Vec<LemmaCheck>,
    pub violations: Vec<LemmaViolation>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn fail(&mut self, check: LemmaCheck, detail: String) {
        self.violations.push(LemmaViolation { check, detail });
    }
}

fn find(conns: &[WeakConnection], a: usize, b: usize) -> Option<&WeakConnection> {
    conns.iter().find(|c| c.involves(a) && c.involves(b))
}

impl HModel<'_> {
    /// Runs every structural check whose hypotheses hold for this model on a
    /// `k`-connected host.
    pub fn check_structural_lemmas(&self, k: usize) -> Result<LemmaReport> {
        let host = self.host();
        if !host.is_k_connected(k) {
            return Err(Error::HypothesisNotMet(format!("host is not {k}-connected")));
        }
        let labels = self.label_count();
        let complete_target = self.target().is_complete();
        let weak = self.weak_connections();
        let mut report = LemmaReport::default();
        if labels >= 2 {
            report.applied.push(LemmaCheck::LeafBlock);
            self.check_leaf_blocks(k, &mut report);
        }
        if labels == k {
            report.applied.push(LemmaCheck::TwoWeak);
            self.check_two_weak(&weak, &mut report);
        }
        if labels == k && complete_target {
            report.applied.push(LemmaCheck::AllWeak);
            self.check_all_weak(&weak, &mut report);
        }
        if labels == 4 && k == 4 && complete_target {
            report.applied.push(LemmaCheck::FourWeak);
            self.check_four_weak(&weak, &mut report);
        }
        if labels == 3 && complete_target && host.is_k_connected(2) {
            report.applied.push(LemmaCheck::NoCrucial);
            for a in 0..3 {
                let crucial = self.crucial_vertices() & self.branch(a);
                if self.branch(a).len() >= 2 && !crucial.is_empty() {
                    report.fail(LemmaCheck::NoCrucial, format!("branch set {a} of size {} has crucial vertices {crucial}", self.branch(a).len()));
                }
            }
        }
        Ok(report)
    }

    /// Every interior vertex of a leaf block starts `k` disjoint paths into
    /// other branch sets, at most one through the joining vertex. So a leaf
    /// block either has `k - 1` interior vertices on connecting edges or all
    /// of its interior vertices are on connecting edges.
    fn check_leaf_blocks(&self, k: usize, report: &mut LemmaReport) {
        let conn = self.connecting_vertices();
        for a in 0..self.label_count() {
            let t = self.branch_block_tree(a);
            for i in t.leaf_blocks() {
                let interior = t.interior(i);
                let have = (interior & conn).len();
                let need = k.saturating_sub(1).min(interior.len());
                if have < need {
                    report.fail(
                        LemmaCheck::LeafBlock,
                        format!("leaf block {} of branch set {a} has {have} connecting interior vertices, needs {need}", t.blocks[i]),
                    );
                }
            }
        }
    }

    /// First leaf block of branch set `from` with no interior vertex
    /// adjacent to branch set `to`.
    fn leaf_block_missing(&self, from: usize, to: usize) -> Option<VertexSet> {
        let t = self.branch_block_tree(from);
        let ends = self.endpoints_toward(from, to);
        t.leaf_blocks().into_iter().find(|&i| !t.interior(i).intersects(ends)).map(|i| t.blocks[i])
    }

    fn check_two_weak(&self, weak: &[WeakConnection], report: &mut LemmaReport) {
        let labels = self.label_count();
        for (l, m) in self.target().edges().into_iter().flat_map(|(a, b)| [(a, b), (b, a)]) {
            let conns: Option<Vec<WeakConnection>> =
                (0..labels).filter(|&c| c != l && c != m).map(|c| find(weak, l, c).cloned()).collect();
            let Some(conns) = conns else { continue };
            if let Some(block) = self.leaf_block_missing(l, m) {
                report.fail(LemmaCheck::TwoWeak, format!("leaf block {block} of branch set {l} has no interior vertex adjacent to branch set {m}"));
            }
            let spare = designations_of(&conns).iter().any(|d| !self.branch(l).is_subset(d.vertices()));
            if spare {
                if let Some(block) = self.leaf_block_missing(m, l) {
                    report.fail(
                        LemmaCheck::TwoWeak,
                        format!("branch set {l} has a non-lynchpin but leaf block {block} of branch set {m} has no interior vertex adjacent to it"),
                    );
                }
            }
        }
    }

    fn check_all_weak(&self, weak: &[WeakConnection], report: &mut LemmaReport) {
        let labels = self.label_count();
        for b in 0..labels {
            let conns: Option<Vec<WeakConnection>> =
                (0..labels).filter(|&c| c != b).map(|c| find(weak, b, c).cloned()).collect();
            let Some(conns) = conns else { continue };
            let outside = self.host().vertices() - self.branch(b);
            for d in designations_of(&conns) {
                let pins = d.vertices();
                if !self.branch(b).is_subset(pins) && !outside.is_subset(pins) {
                    report.fail(
                        LemmaCheck::AllWeak,
                        format!("branch set {b} is weakly connected to all others and lynchpins {pins} leave non-lynchpins on both sides"),
                    );
                    break;
                }
            }
        }
    }

    fn check_four_weak(&self, weak: &[WeakConnection], report: &mut LemmaReport) {
        for [a, b, c, d] in permutations4() {
            let conns: Option<Vec<WeakConnection>> =
                [(a, b), (b, c), (c, d), (d, a)].iter().map(|&(x, y)| find(weak, x, y).cloned()).collect();
            let Some(conns) = conns else { continue };
            for des in designations_of(&conns) {
                let pins = des.vertices();
                if !self.branch(a).is_subset(pins) && !self.branch(d).is_subset(pins) {
                    report.fail(
                        LemmaCheck::FourWeak,
                        format!("weak cycle {a}-{b}-{c}-{d} with lynchpins {pins} leaves non-lynchpins in branch sets {a} and {d}"),
                    );
                    return;
                }
            }
        }
    }
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in (0..4).filter(|&b| b != a) {
            for c in (0..4).filter(|&c| c != a && c != b) {
                out.push([a, b, c, 6 - a - b - c]);
            }
        }
    }
    out
}
