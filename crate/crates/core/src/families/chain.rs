use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{CanonicalForm, Graph};

/// Elementary operation between consecutive graphs of a chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ChainOp {
    Removal,
    #[default]
    Contraction,
}

impl fmt::Display for ChainOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChainOp::Removal => "removal",
            ChainOp::Contraction => "contraction",
        })
    }
}

impl FromStr for ChainOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "removal" | "remove" | "delete" => Ok(ChainOp::Removal),
            "contraction" | "contract" => Ok(ChainOp::Contraction),
            _ => Err(Error::BadParameter(format!("unknown chain operation {s:?}"))),
        }
    }
}

/// Depth-first search for a sequence of 4-connected graphs starting at `g`,
/// each obtained from the previous one by removing or contracting one edge,
/// and ending at a graph isomorphic to `C_6^2` or `K_5`. Returns `None` when
/// every branch dead-ends.
pub fn find_chain(g: &Graph, op: ChainOp) -> Result<Option<Vec<Graph>>> {
    if !g.is_k_connected(4) {
        return Err(Error::HypothesisNotMet("chain search needs a 4-connected graph".into()));
    }
    let ends = [super::gen_squared_cycle(6)?.canonical_form(), super::gen_clique(5)?.canonical_form()];
    let mut dead = HashSet::new();
    let mut chain = vec![g.clone()];
    Ok(search(&mut chain, op, &ends, &mut dead).then_some(chain))
}

fn search(chain: &mut Vec<Graph>, op: ChainOp, ends: &[CanonicalForm], dead: &mut HashSet<CanonicalForm>) -> bool {
    let g = chain.last().expect("chain is never empty").clone();
    let form = g.canonical_form();
    if ends.contains(&form) {
        return true;
    }
    if !dead.insert(form) {
        return false;
    }
    for (u, v) in g.edges() {
        let next = match op {
            ChainOp::Removal => g.remove_edge(u, v),
            ChainOp::Contraction => g.contract_edge(u, v),
        }
        .expect("edge taken from the graph");
        if next.is_k_connected(4) {
            chain.push(next);
            if search(chain, op, ends, dead) {
                return true;
            }
            chain.pop();
        }
    }
    false
}
