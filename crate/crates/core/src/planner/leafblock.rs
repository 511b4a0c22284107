//! Draining leaf blocks and whole components out of a branch set.

use super::walk::Walk;
use crate::error::{Error, Result};
use crate::model::{HModel, DEFAULT_BUDGET};
use crate::sequence::ReconSequence;
use crate::vertex_set::VertexSet;

const LEAFBLOCK: &str = "relabel-leafblock";
const SLURP: &str = "slurp-component";
const SIPHON: &str = "slurp-siphon";

fn require(cond: bool, lemma: &'static str, detail: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::precondition(lemma, detail()))
    }
}

fn check_label(m: &HModel, a: usize) -> Result<()> {
    if a >= m.label_count() {
        return Err(Error::LabelOutOfRange { label: a, k: m.label_count() });
    }
    Ok(())
}

/// Labels other than `v`'s own carried by its neighbours, as a set.
fn neighbor_labels(m: &HModel, v: usize) -> VertexSet {
    m.host().neighbors(v).iter().map(|u| m.label(u)).filter(|&l| l != m.label(v)).collect()
}

/// Moves every vertex of `interior` still labeled `a` out of branch set `a`,
/// one vertex at a time: the lowest vertex that has a neighbour outside the
/// branch set and is not a cut vertex of it goes to the smallest
/// neighbouring label it is not crucial toward.
fn drain(walk: &mut Walk, a: usize, interior: VertexSet) -> Result<()> {
    loop {
        let m = walk.model();
        let host = m.host();
        let branch = m.branch(a);
        let remaining = interior & branch;
        if remaining.is_empty() {
            return Ok(());
        }
        let outside = host.vertices() - branch;
        let v = remaining
            .iter()
            .find(|&v| host.neighbors(v).intersects(outside) && !host.is_cut_vertex_within(branch, v))
            .ok_or_else(|| walk.invariant(format!("no vertex of {remaining} can leave branch set {a} in {m}")))?;
        // The first neighbouring label unless v is crucial toward it; a
        // non-crucial vertex always has some label to fall back on.
        let c = neighbor_labels(m, v)
            .iter()
            .find(|&c| !m.is_b_crucial(v, c))
            .ok_or_else(|| walk.invariant(format!("vertex {v} is crucial toward every neighbouring label in {m}")))?;
        walk.step(v, c)?;
    }
}

/// Relabels the interior vertices of leaf block `leaf` of branch set `a`,
/// leaving every other vertex alone.
///
/// Requires that the branch set extends beyond the block, that some interior
/// vertex of the block lies on a connecting edge, and that relabeling inside
/// the block cannot reach a leaf-crucial model.
pub fn plan_relabel_leafblock<'g>(m: &HModel<'g>, a: usize, leaf: VertexSet) -> Result<ReconSequence<'g>> {
    m.validate().map_err(Error::InvalidModel)?;
    check_label(m, a)?;
    let tree = m.branch_block_tree(a);
    let i = tree.position(leaf).ok_or_else(|| Error::precondition(LEAFBLOCK, format!("{leaf} is not a block of branch set {a}")))?;
    require(tree.is_leaf(i), LEAFBLOCK, || format!("{leaf} is not a leaf block of branch set {a}"))?;
    require(!(m.branch(a) - leaf).is_empty(), LEAFBLOCK, || format!("branch set {a} is the single block {leaf}"))?;
    let interior = tree.interior(i);
    require(interior.intersects(m.connecting_vertices()), LEAFBLOCK, || {
        format!("no interior vertex of {leaf} is on a connecting edge")
    })?;
    require(!m.hits_leaf_crucial(leaf, DEFAULT_BUDGET)?, LEAFBLOCK, || format!("relabeling {leaf} hits a leaf-crucial model"))?;

    let mut walk = Walk::new(LEAFBLOCK, m);
    drain(&mut walk, a, interior)?;
    let end = walk.model();
    let changed: VertexSet = (0..m.host().n()).filter(|&v| end.label(v) != m.label(v)).collect();
    if changed != interior {
        return Err(walk.invariant(format!("changed {changed}, expected the interior {interior}")));
    }
    Ok(walk.finish())
}

/// Relabels the component `comp` of `G(f,a) - x` out of branch set `a` so
/// that `x` ends with a neighbour labeled `b`.
///
/// Blocks are removed leaf-first: a leaf block with an interior vertex next
/// to label `b` is relabeled to `b`, any other leaf block is drained to
/// whatever labels its vertices can take.
pub fn plan_slurp_component<'g>(m: &HModel<'g>, a: usize, b: usize, x: usize, comp: VertexSet) -> Result<ReconSequence<'g>> {
    m.validate().map_err(Error::InvalidModel)?;
    check_label(m, a)?;
    check_label(m, b)?;
    let host = m.host();
    if x >= host.n() {
        return Err(Error::VertexOutOfRange { vertex: x, n: host.n() });
    }
    require(host.is_k_connected(2), SLURP, || "host is not 2-connected".into())?;
    require(m.target().has_edge(a, b), SLURP, || format!("{a}{b} is not an edge of the target"))?;
    let branch = m.branch(a);
    require(m.label(x) == a && host.is_cut_vertex_within(branch, x), SLURP, || {
        format!("{x} is not a cut vertex of branch set {a}")
    })?;
    require(host.components_within(branch.without(x)).contains(&comp), SLURP, || {
        format!("{comp} is not a component of branch set {a} minus {x}")
    })?;
    require(host.neighborhood(comp).intersects(m.branch(b)), SLURP, || format!("no vertex of {comp} is adjacent to label {b}"))?;
    require(!m.hits_leaf_crucial(comp, DEFAULT_BUDGET)?, SLURP, || format!("relabeling {comp} hits a leaf-crucial model"))?;
    require(!m.hits_leaf_l_crucial(comp, b, DEFAULT_BUDGET)?, SLURP, || {
        format!("relabeling {comp} hits a leaf-{b}-crucial model")
    })?;

    let mut walk = Walk::new(SLURP, m);
    slurp(&mut walk, a, b, x, comp)?;
    let end = walk.model();
    let bad = (0..host.n()).find(|&v| (end.label(v) == m.label(v)) == comp.contains(v));
    if let Some(v) = bad {
        return Err(walk.invariant(format!("vertex {v} has the wrong label in {end}")));
    }
    if !host.neighbors(x).intersects(end.branch(b)) {
        return Err(walk.invariant(format!("{x} has no neighbour labeled {b} in {end}")));
    }
    Ok(walk.finish())
}

fn slurp(walk: &mut Walk, a: usize, b: usize, x: usize, comp: VertexSet) -> Result<()> {
    loop {
        let m = walk.model();
        let host = m.host();
        let rest = comp & m.branch(a);
        if rest.is_empty() {
            return Ok(());
        }
        // Blocks of the branch set inside comp + x are the blocks of that
        // induced subgraph; x is never a cut vertex of it.
        let tree = host.block_tree_within(rest.with(x));
        let interior = tree
            .leaf_blocks()
            .into_iter()
            .filter(|&i| !tree.blocks[i].contains(x))
            .map(|i| tree.interior(i))
            .min_by_key(|s| s.first())
            .unwrap_or(rest);
        let toward_b = host.neighborhood(m.branch(b));
        if interior.intersects(toward_b) {
            fill_with(walk, a, b, interior)?;
        } else {
            drain(walk, a, interior)?;
        }
    }
}

/// Relabels every vertex of `interior` to `b`, each time taking the lowest
/// remaining vertex that is next to label `b` and not a cut vertex.
fn fill_with(walk: &mut Walk, a: usize, b: usize, interior: VertexSet) -> Result<()> {
    loop {
        let m = walk.model();
        let host = m.host();
        let branch = m.branch(a);
        let remaining = interior & branch;
        if remaining.is_empty() {
            return Ok(());
        }
        let nb = host.neighborhood(m.branch(b));
        let v = remaining
            .iter()
            .find(|&v| nb.contains(v) && !host.is_cut_vertex_within(branch, v))
            .ok_or_else(|| walk.invariant(format!("no vertex of {remaining} can move to label {b} in {m}")))?;
        walk.step(v, b)?;
    }
}

/// For a `K3`-model of a 3-connected host: siphons every component of
/// `G(f,a) - x` except one component `D` next to the third label, then
/// relabels `x` to `b`.
pub fn plan_slurp_siphon<'g>(m: &HModel<'g>, a: usize, b: usize, x: usize) -> Result<ReconSequence<'g>> {
    m.validate().map_err(Error::InvalidModel)?;
    require(m.label_count() == 3 && m.target().is_complete(), SIPHON, || "target is not K3".into())?;
    check_label(m, a)?;
    check_label(m, b)?;
    let host = m.host();
    if x >= host.n() {
        return Err(Error::VertexOutOfRange { vertex: x, n: host.n() });
    }
    require(a != b, SIPHON, || "labels a and b coincide".into())?;
    require(host.is_k_connected(3), SIPHON, || "host is not 3-connected".into())?;
    require(m.label(x) == a, SIPHON, || format!("{x} is not labeled {a}"))?;
    require(m.branch(a).len() >= 2, SIPHON, || format!("{x} is alone in branch set {a}"))?;
    require(host.neighbors(x).intersects(m.branch(b)), SIPHON, || format!("{x} has no neighbour labeled {b}"))?;
    let c = 3 - a - b;
    require(!m.is_essential_for(x, c), SIPHON, || format!("{x} is essential for {c}"))?;

    let comps = host.components_within(m.branch(a).without(x));
    let toward_c = host.neighborhood(m.branch(c));
    let d = *comps
        .iter()
        .find(|comp| comp.intersects(toward_c))
        .ok_or_else(|| Error::PlanInvariant { planner: SIPHON, detail: "no component touches the third label".into() })?;
    let mut walk = Walk::new(SIPHON, m);
    for &comp in comps.iter().filter(|&&comp| comp != d) {
        let cur = walk.model().clone();
        let via = if host.neighborhood(comp).intersects(cur.branch(b)) { b } else { c };
        let seq = plan_slurp_component(&cur, a, via, x, comp)?;
        walk.extend(&seq)?;
    }
    walk.step(x, b)?;
    let end = walk.model();
    let wrong = m.branch(a).without(x).iter().find(|&v| (end.label(v) == a) != d.contains(v));
    if let Some(v) = wrong {
        return Err(walk.invariant(format!("vertex {v} has the wrong label in {end}")));
    }
    Ok(walk.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph::Graph;

    #[test]
    fn single_interior_vertex_takes_one_step() {
        // Branch set 0 is the rim path 1-2-3 of a wheel; its leaf block
        // {1,2} has the single interior vertex 1.
        let w = families::gen_wheel(5).unwrap();
        let k3 = families::gen_clique(3).unwrap();
        let m = HModel::valid(&w, &k3, vec![1, 0, 0, 0, 2, 2]).unwrap();
        let leaf: VertexSet = [1usize, 2].iter().collect();
        let seq = plan_relabel_leafblock(&m, 0, leaf).unwrap();
        assert_eq!(seq.len(), 1);
        let end = seq.replay().unwrap();
        assert_ne!(end.label(1), 0);
        assert_eq!(&end.labels()[2..], &m.labels()[2..]);
    }

    #[test]
    fn leaf_block_preconditions() {
        let k4 = families::gen_clique(4).unwrap();
        let k3 = families::gen_clique(3).unwrap();
        let m = HModel::valid(&k4, &k3, vec![0, 0, 1, 2]).unwrap();
        // The branch set is a single block.
        let err = plan_relabel_leafblock(&m, 0, [0usize, 1].iter().collect()).unwrap_err();
        assert!(matches!(err, Error::PreconditionFailed { lemma: LEAFBLOCK, .. }));
        // Vertex 0 is the only way from branch set 0 to labels 1 and 2 and
        // sits inside the leaf block {0,1} of the path 0-1-2.
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 3), (0, 4), (2, 5), (3, 4), (4, 5), (3, 5)]).unwrap();
        let m = HModel::valid(&g, &k4, vec![0, 0, 0, 1, 2, 3]).unwrap();
        assert!(m.is_crucial(0));
        let err = plan_relabel_leafblock(&m, 0, [0usize, 1].iter().collect()).unwrap_err();
        assert!(matches!(err, Error::PreconditionFailed { lemma: LEAFBLOCK, ref detail } if detail.contains("leaf-crucial")), "{err}");
    }

    #[test]
    fn slurp_single_vertex_component() {
        let w = families::gen_wheel(5).unwrap();
        let k3 = families::gen_clique(3).unwrap();
        // Branch set 0 = {1,2,3} is a path with cut vertex 2.
        let m = HModel::valid(&w, &k3, vec![1, 0, 0, 0, 2, 2]).unwrap();
        let seq = plan_slurp_component(&m, 0, 1, 2, VertexSet::singleton(3)).unwrap();
        assert_eq!(seq.len(), 1);
        let end = seq.replay().unwrap();
        assert_ne!(end.label(3), 0);
        assert!(w.neighbors(2).intersects(end.branch(1)));
        let err = plan_slurp_component(&m, 1, 2, 2, VertexSet::singleton(3)).unwrap_err();
        assert!(matches!(err, Error::PreconditionFailed { lemma: SLURP, .. }));
    }

    #[test]
    fn slurp_needs_a_target_edge() {
        let w = families::gen_wheel(5).unwrap();
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let m = HModel::valid(&w, &p3, vec![1, 0, 0, 0, 2, 2]).unwrap();
        let err = plan_slurp_component(&m, 0, 2, 2, VertexSet::singleton(3)).unwrap_err();
        assert!(matches!(err, Error::PreconditionFailed { lemma: SLURP, .. }), "{err}");
    }

    #[test]
    fn siphon_on_a_wheel() {
        let w = families::gen_wheel(6).unwrap();
        let k3 = families::gen_clique(3).unwrap();
        // Branch set 0 = {1,2,3}: x = 2 is a cut vertex with a 1-neighbour (hub).
        let m = HModel::valid(&w, &k3, vec![1, 0, 0, 0, 2, 2, 2]).unwrap();
        let seq = plan_slurp_siphon(&m, 0, 1, 2).unwrap();
        let end = seq.replay().unwrap();
        assert_eq!(end.label(2), 1);
        // Both components touch label 2; the lower one is kept.
        assert_eq!(end.label(1), 0);
        assert_ne!(end.label(3), 0);
        let single = HModel::valid(&w, &k3, vec![1, 0, 0, 2, 2, 2, 2]).unwrap();
        let seq = plan_slurp_siphon(&single, 0, 1, 2).unwrap();
        assert_eq!(seq.len(), 1);
        // Vertex 4 is the only 0-vertex next to the singleton branch set {5}.
        let m = HModel::valid(&w, &k3, vec![1, 0, 0, 0, 0, 2, 1]).unwrap();
        let err = plan_slurp_siphon(&m, 0, 1, 4).unwrap_err();
        assert!(matches!(err, Error::PreconditionFailed { lemma: SIPHON, .. }), "{err}");
    }
}
