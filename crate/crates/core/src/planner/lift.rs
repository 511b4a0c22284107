//! Lifting sequences through a vertex split.

use super::walk::Walk;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::model::HModel;
use crate::sequence::ReconSequence;

const SPLIT: &str = "split-samelabel";

/// The model of `g_prime` that gives both halves of the split vertex `v`
/// its label under `m`. `g_prime` must come from [`Graph::split_vertex`],
/// so the new half is the last vertex.
pub fn lift_model<'g>(m: &HModel<'_>, g_prime: &'g Graph, target: &'g Graph, v: usize) -> Result<HModel<'g>> {
    let mut labels = m.labels().to_vec();
    labels.push(m.label(v));
    HModel::new(g_prime, target, labels)
}

fn check_split(g: &Graph, g_prime: &Graph, v: usize) -> Result<()> {
    let y = g.n();
    let ok = v < g.n()
        && g_prime.n() == y + 1
        && g_prime.has_edge(v, y)
        && g_prime.degree(v) >= 3
        && g_prime.degree(y) >= 3
        && !g_prime.neighbors(v).without(y).intersects(g_prime.neighbors(y).without(v))
        && g_prime.contract_edge(v, y).is_ok_and(|c| &c == g);
    if ok {
        Ok(())
    } else {
        Err(Error::BadParameter(format!("graph is not a split of vertex {v} into {v} and {y}")))
    }
}

/// Replays `seq` on `g_prime`, obtained by splitting vertex `v` of the
/// sequence's host into `v` and a new last vertex. Steps on other vertices
/// are copied; each step on `v` relabels both halves, with a detour
/// through a third label when the half next to the new label holds its
/// branch set together.
pub fn lift_sequence_through_split<'g>(seq: &ReconSequence<'g>, g_prime: &'g Graph, v: usize) -> Result<ReconSequence<'g>> {
    let (g, h) = (seq.start.host(), seq.start.target());
    check_split(g, g_prime, v)?;
    if !g.is_k_connected(2) {
        return Err(Error::precondition(SPLIT, "host is not 2-connected"));
    }
    if h.n() < 3 || !h.is_complete() {
        return Err(Error::precondition(SPLIT, "target is not a clique on at least three vertices"));
    }
    seq.start.validate().map_err(Error::InvalidModel)?;
    let start = lift_model(&seq.start, g_prime, h, v)?;
    let (x, y) = (v, g.n());
    let mut walk = Walk::new(SPLIT, &start);
    for (i, s) in seq.steps.iter().enumerate() {
        let failed = |_| Error::LiftFailed { step: i };
        if s.vertex != v {
            walk.step(s.vertex, s.label).map_err(failed)?;
            continue;
        }
        let (a, b) = (walk.model().label(x), s.label);
        let m = walk.model();
        let host = m.host();
        let has_b = |u: usize| host.neighbors(u).intersects(m.branch(b));
        let (p, q) = if has_b(x) { (x, y) } else { (y, x) };
        if !has_b(p) {
            return Err(Error::LiftFailed { step: i });
        }
        let branch = m.branch(a);
        if !host.is_cut_vertex_within(branch, p) {
            walk.step(p, b).map_err(failed)?;
            walk.step(q, b).map_err(failed)?;
        } else if has_b(q) {
            walk.step(q, b).map_err(failed)?;
            walk.step(p, b).map_err(failed)?;
        } else {
            let c = host
                .neighbors(q)
                .iter()
                .map(|u| m.label(u))
                .filter(|&c| c != a && c != b)
                .min()
                .ok_or(Error::LiftFailed { step: i })?;
            walk.step(q, c).map_err(failed)?;
            walk.step(p, b).map_err(failed)?;
            walk.step(q, b).map_err(failed)?;
        }
    }
    Ok(walk.finish())
}
