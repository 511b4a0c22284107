//! Whether relabeling a set `A` inside one branch set is bound to run into a
//! leaf-crucial (or leaf-ℓ-crucial) model.
//!
//! Relabelings confined to `A` are taken to be sequences of legal single
//! steps that only touch vertices of `A`. The reachable set is closed under
//! reversal, so "every reachable model can be extended to a bad one" is the
//! same as "some reachable model is bad". A model counts as bad when one of
//! the vertices of `A` still carrying the original label is crucial (resp.
//! `ℓ`-crucial) and interior to a leaf block of that branch set.

use std::collections::{HashSet, VecDeque};

use super::HModel;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

impl HModel<'_> {
    pub fn hits_leaf_crucial(&self, set: VertexSet, budget: u64) -> Result<bool> {
        self.hits(set, budget, |m, v| m.is_crucial(v))
    }

    pub fn hits_leaf_l_crucial(&self, set: VertexSet, l: usize, budget: u64) -> Result<bool> {
        if l >= self.label_count() {
            return Err(Error::LabelOutOfRange { label: l, k: self.label_count() });
        }
        self.hits(set, budget, |m, v| m.is_b_crucial(v, l))
    }

    fn hits(&self, set: VertexSet, budget: u64, bad_vertex: impl Fn(&HModel, usize) -> bool) -> Result<bool> {
        let Some(first) = set.first() else {
            return Ok(false);
        };
        if first >= self.host().n() || !set.is_subset(self.host().vertices()) {
            return Err(Error::BadParameter(format!("{set} is not a vertex set of the host")));
        }
        let a = self.label(first);
        if !set.is_subset(self.branch(a)) {
            return Err(Error::BadParameter(format!("{set} is not inside one branch set")));
        }
        let bad = |m: &HModel| {
            let still = set & m.branch(a);
            !still.is_empty() && (m.leaf_interior(a) & still).iter().any(|v| bad_vertex(m, v))
        };
        let mut seen: HashSet<Vec<usize>> = HashSet::from([self.labels().to_vec()]);
        let mut queue = VecDeque::from([self.clone()]);
        while let Some(m) = queue.pop_front() {
            if bad(&m) {
                return Ok(true);
            }
            for v in set {
                for b in (0..self.label_count()).filter(|&b| b != m.label(v)) {
                    if m.legal_step(v, b)?.legal {
                        let next = m.with_label(v, b);
                        if seen.insert(next.labels().to_vec()) {
                            if seen.len() as u64 > budget {
                                return Err(Error::StateSpaceExceeded { budget });
                            }
                            queue.push_back(next);
                        }
                    }
                }
            }
        }
        Ok(false)
    }
}
