//! Generalized wheels with complete targets.

use super::k2::{cross_two_labels, reduce_two_labels};
use super::walk::Walk;
use crate::error::{Error, Result};
use crate::families::GeneralizedWheel;
use crate::model::HModel;
use crate::sequence::ReconSequence;
use crate::vertex_set::VertexSet;

const GENWHEEL: &str = "genwheel";

/// Reconfigures between two `K_{l+2}`-models of a generalized wheel with `l`
/// hubs. Both models are brought to canonical form (distinct hub labels,
/// one label on the special vertex, one on every other subgraph vertex),
/// and the two canonical models are joined by label exchanges.
pub fn plan_genwheel<'g>(from: &HModel<'g>, to: &HModel<'g>) -> Result<ReconSequence<'g>> {
    super::same_instance(from, to)?;
    let (g, h) = (from.host(), from.target());
    if h.n() < 3 || !h.is_complete() {
        return Err(Error::precondition(GENWHEEL, "target is not a clique on at least three vertices"));
    }
    let w = GeneralizedWheel::recognize(g, h.n() - 2)?;
    from.validate().map_err(Error::InvalidModel)?;
    to.validate().map_err(Error::InvalidModel)?;

    let mut back = Walk::new(GENWHEEL, to);
    to_canonical(&mut back, &w)?;
    let back = back.finish();
    let goal = back.end();

    let mut walk = Walk::new(GENWHEEL, from);
    to_canonical(&mut walk, &w)?;
    permute(&mut walk, &w, &goal)?;
    walk.extend(&back.reversed())?;
    Ok(walk.finish())
}

fn to_canonical(walk: &mut Walk, w: &GeneralizedWheel) -> Result<()> {
    let n = walk.model().host().n();
    let k = walk.model().label_count();
    let hubs: Vec<usize> = (0..w.l).map(|i| w.hub(i)).collect();
    let region: VertexSet = (0..n).filter(|&v| !w.is_hub(v)).collect();

    // Distinct hub labels: a hub repeating an earlier hub's label takes the
    // lowest label no hub has.
    while let Some(j) = (1..w.l).find(|&j| (0..j).any(|i| walk.model().label(hubs[i]) == walk.model().label(hubs[j]))) {
        let used: VertexSet = hubs.iter().map(|&u| walk.model().label(u)).collect();
        let a = (0..k).find(|&a| !used.contains(a)).expect("fewer hub labels than labels");
        walk.step(hubs[j], a)?;
    }

    // No subgraph vertex keeps a hub label: the lowest offender next to a
    // subgraph vertex with a free label takes that label.
    let hub_labels: VertexSet = hubs.iter().map(|&u| walk.model().label(u)).collect();
    loop {
        let m = walk.model();
        let host = m.host();
        let free = |u: usize| !hub_labels.contains(m.label(u));
        let offenders: Vec<usize> = region.iter().filter(|&v| !free(v)).collect();
        if offenders.is_empty() {
            break;
        }
        let (v, c) = offenders
            .iter()
            .find_map(|&v| {
                (host.neighbors(v) & region).iter().filter(|&u| free(u)).map(|u| m.label(u)).min().map(|c| (v, c))
            })
            .ok_or_else(|| walk.invariant(format!("no subgraph vertex with a hub label borders a free label in {m}")))?;
        walk.step(v, c)?;
    }

    reduce_two_labels(walk, w.special(), region)
}

/// Positions of a canonical model: hub `i` for `i < l`, then the special
/// vertex, then the rest of the subgraph vertices.
fn slot_labels(m: &HModel, w: &GeneralizedWheel) -> Vec<usize> {
    let mut out: Vec<usize> = (0..w.l).map(|i| m.label(w.hub(i))).collect();
    out.push(m.label(w.special()));
    out.push(m.label(w.special_next()));
    out
}

fn permute(walk: &mut Walk, w: &GeneralizedWheel, goal: &HModel) -> Result<()> {
    let n = walk.model().host().n();
    let region: VertexSet = (0..n).filter(|&v| !w.is_hub(v)).collect();
    let (s, rest) = (w.l, w.l + 1);
    let want = slot_labels(goal, w);
    for p in 0..=w.l {
        let cur = slot_labels(walk.model(), w);
        if cur[p] == want[p] {
            continue;
        }
        let q = (p + 1..cur.len()).find(|&q| cur[q] == want[p]).ok_or_else(|| walk.invariant("goal is not a permutation"))?;
        match (p < w.l, q) {
            (true, q) if q < w.l => swap_hubs(walk, w, w.hub(p), w.hub(q))?,
            (true, q) if q == s => swap_hub_special(walk, w, w.hub(p))?,
            (true, _) => {
                swap_hub_special(walk, w, w.hub(p))?;
                cross_two_labels(walk, w.special(), region)?;
                swap_hub_special(walk, w, w.hub(p))?;
            }
            (false, q) => {
                debug_assert_eq!((p, q), (s, rest));
                cross_two_labels(walk, w.special(), region)?;
            }
        }
    }
    Ok(())
}

/// Exchanges the labels of hubs `hi` and `hj` with the help of `s⁺`.
fn swap_hubs(walk: &mut Walk, w: &GeneralizedWheel, hi: usize, hj: usize) -> Result<()> {
    let f = walk.model();
    let (a, b, r) = (f.label(hi), f.label(hj), f.label(w.special_next()));
    walk.step(w.special_next(), a)?;
    walk.step(hi, b)?;
    walk.step(hj, a)?;
    walk.step(w.special_next(), r)
}

/// Exchanges the labels of hub `hi` and the special vertex with the help of
/// `s⁺`.
fn swap_hub_special(walk: &mut Walk, w: &GeneralizedWheel, hi: usize) -> Result<()> {
    let f = walk.model();
    let s = w.special();
    let (a, b, r) = (f.label(hi), f.label(s), f.label(w.special_next()));
    walk.step(w.special_next(), a)?;
    walk.step(hi, b)?;
    walk.step(s, a)?;
    walk.step(w.special_next(), r)
}
