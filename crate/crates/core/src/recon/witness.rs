use std::sync::OnceLock;

use crate::error::Result;
use crate::graph::Graph;
use crate::model::HModel;
use crate::vertex_set::VertexSet;

/// The single-edge target shared by every witness.
pub fn k2_target() -> &'static Graph {
    static K2: OnceLock<Graph> = OnceLock::new();
    K2.get_or_init(|| Graph::from_edges(2, &[(0, 1)]).expect("K2 is a simple graph"))
}

/// Two `K2`-models in different components of the reconfiguration graph of
/// a connected graph with a cut vertex, or `None` for 2-connected graphs.
///
/// With `x` the lowest cut vertex and `C1`, `C2` the two components of
/// `G - x` with the smallest minimum vertices, the first model labels `C2`
/// with 1 and the rest 0, the second labels `C1` with 1 and the rest 0.
pub fn disconnection_witness(g: &Graph) -> Result<Option<(HModel<'_>, HModel<'_>)>> {
    let Some(x) = g.cut_vertices()?.first() else {
        return Ok(None);
    };
    let mut comps = g.components_within(g.vertices().without(x));
    comps.sort_by_key(|c| c.first());
    let (c1, c2) = (comps[0], comps[1]);
    let label = |side: VertexSet| (0..g.n()).map(|v| usize::from(side.contains(v))).collect();
    let f = HModel::valid(g, k2_target(), label(c2))?;
    let h = HModel::valid(g, k2_target(), label(c1))?;
    Ok(Some((f, h)))
}
