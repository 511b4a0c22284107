//! Two-label reconfiguration around a special vertex.

use super::walk::Walk;
use crate::error::{Error, Result};
use crate::model::HModel;
use crate::sequence::ReconSequence;
use crate::vertex_set::VertexSet;

const K2: &str = "k2";

/// Shrinks the branch set of `s` inside `region` down to `s` alone. The
/// region must carry exactly two labels and induce a 2-connected graph.
///
/// Each round relabels the lowest vertex other than `s` that shares `s`'s
/// label, has a neighbour in the region with the other label, and is not a
/// cut vertex of its branch set.
pub(crate) fn reduce_two_labels(walk: &mut Walk, s: usize, region: VertexSet) -> Result<()> {
    loop {
        let m = walk.model();
        let host = m.host();
        let p = m.label(s);
        let branch = m.branch(p);
        let mine = (branch & region).without(s);
        if mine.is_empty() {
            return Ok(());
        }
        let other = region - branch;
        let u = mine
            .iter()
            .find(|&u| host.neighbors(u).intersects(other) && !host.is_cut_vertex_within(branch, u))
            .ok_or_else(|| walk.invariant(format!("no vertex of {mine} can leave the branch set of {s} in {m}")))?;
        let q = m.label((host.neighbors(u) & other).first().expect("u has a neighbour in other"));
        walk.step(u, q)?;
    }
}

/// From a model where `s` alone carries one label of the region, moves to
/// the one where `s` carries the other label and everything else in the
/// region carries the first: a non-cut neighbour `w` of `s` takes `s`'s
/// label, then `s` switches, then the rest drains.
pub(crate) fn cross_two_labels(walk: &mut Walk, s: usize, region: VertexSet) -> Result<()> {
    let m = walk.model();
    let host = m.host();
    let p = m.label(s);
    let rest = region.without(s);
    let q = m.label(rest.first().ok_or_else(|| walk.invariant("region has a single vertex"))?);
    let branch = m.branch(q);
    let w = (host.neighbors(s) & rest)
        .iter()
        .find(|&w| !host.is_cut_vertex_within(branch, w))
        .ok_or_else(|| walk.invariant(format!("{s} has no non-cut neighbour labeled {q} in {m}")))?;
    walk.step(w, p)?;
    walk.step(s, q)?;
    reduce_two_labels(walk, s, region)
}

/// Reconfigures between two `K2`-models of a 2-connected host. Both models
/// are first reduced to the canonical model in which vertex 0 alone keeps
/// its label; when those canonical models differ, they are joined by a
/// crossing.
pub fn plan_k2<'g>(from: &HModel<'g>, to: &HModel<'g>) -> Result<ReconSequence<'g>> {
    super::same_instance(from, to)?;
    let h = from.target();
    if h.n() != 2 || !h.has_edge(0, 1) {
        return Err(Error::precondition(K2, "target is not K2"));
    }
    from.validate().map_err(Error::InvalidModel)?;
    to.validate().map_err(Error::InvalidModel)?;
    let host = from.host();
    if !host.is_k_connected(2) {
        return Err(Error::NotTwoConnected);
    }
    let s = 0;
    let region = host.vertices();

    let mut back = Walk::new(K2, to);
    reduce_two_labels(&mut back, s, region)?;
    let back = back.finish();

    let mut walk = Walk::new(K2, from);
    reduce_two_labels(&mut walk, s, region)?;
    if walk.model().label(s) != to.label(s) {
        cross_two_labels(&mut walk, s, region)?;
    }
    walk.extend(&back.reversed())?;
    Ok(walk.finish())
}
