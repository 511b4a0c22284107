use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{CanonicalForm, Graph};

/// Every graph on `n` vertices up to isomorphism whose connectivity is at
/// least `require` (0 keeps all graphs, 1 connected graphs, `k` the
/// `k`-connected ones). Ordered by edge count, then canonical form.
///
/// Isomorphism classes are grown one edge at a time: every class with `e+1`
/// edges arises from one with `e` edges by adding an edge.
pub fn enumerate_small_graphs(n: usize, require: usize) -> Result<Vec<Graph>> {
    if n > 8 {
        return Err(Error::BadParameter(format!("small-graph enumeration stops at 8 vertices, got {n}")));
    }
    let mut level: BTreeSet<CanonicalForm> = BTreeSet::from([Graph::new(n).canonical_form()]);
    let mut all: Vec<CanonicalForm> = level.iter().cloned().collect();
    while !level.is_empty() {
        let next: BTreeSet<CanonicalForm> = level
            .par_iter()
            .flat_map_iter(|form| {
                let g = form.to_graph();
                (0..n)
                    .flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
                    .filter(|&(u, v)| !g.has_edge(u, v))
                    .map(|(u, v)| g.add_edge(u, v).expect("edge is missing").canonical_form())
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        all.extend(next.iter().cloned());
        level = next;
    }
    Ok(all
        .into_par_iter()
        .map(|f| f.to_graph())
        .filter(|g| meets(g, require))
        .collect())
}

fn meets(g: &Graph, require: usize) -> bool {
    match require {
        0 => true,
        1 => g.is_connected(),
        k => g.is_k_connected(k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_counts() {
        let all: Vec<usize> = (1..=6).map(|n| enumerate_small_graphs(n, 0).unwrap().len()).collect();
        assert_eq!(all, [1, 2, 4, 11, 34, 156]);
        let connected: Vec<usize> = (1..=7).map(|n| enumerate_small_graphs(n, 1).unwrap().len()).collect();
        assert_eq!(connected, [1, 1, 2, 6, 21, 112, 853]);
        let two: Vec<usize> = (3..=7).map(|n| enumerate_small_graphs(n, 2).unwrap().len()).collect();
        assert_eq!(two, [1, 3, 10, 56, 468]);
        let three: Vec<usize> = (4..=7).map(|n| enumerate_small_graphs(n, 3).unwrap().len()).collect();
        assert_eq!(three, [1, 3, 17, 136]);
    }

    #[test]
    fn named_small_classes() {
        let k3 = crate::families::gen_clique(3).unwrap();
        let got = enumerate_small_graphs(3, 2).unwrap();
        assert_eq!(got.len(), 1);
        assert!(got[0].is_isomorphic(&k3));
        let four = enumerate_small_graphs(4, 2).unwrap();
        assert_eq!(four.iter().map(Graph::edge_count).collect::<Vec<_>>(), [4, 5, 6]);
        assert!(matches!(enumerate_small_graphs(9, 0), Err(Error::BadParameter(_))));
    }
}
