use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::model::HModel;
use crate::sequence::{ReconSequence, Step};

/// Shortest reconfiguration sequence by breadth-first search over models
/// generated on demand, without enumerating the whole space. Returns `None`
/// when `to` is unreachable. At most `budget` models are visited.
pub fn shortest_sequence<'g>(from: &HModel<'g>, to: &HModel<'g>, budget: u64) -> Result<Option<ReconSequence<'g>>> {
    if from.host() != to.host() || from.target() != to.target() {
        return Err(Error::BadParameter("models live in different reconfiguration graphs".into()));
    }
    for m in [from, to] {
        m.validate().map_err(Error::InvalidModel)?;
    }
    // Arena of visited models; `parent[i]` is (predecessor, step taken).
    let mut arena: Vec<HModel<'g>> = vec![from.clone()];
    let mut parent: Vec<Option<(usize, Step)>> = vec![None];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(from.labels().to_vec(), 0)]);
    let mut queue = VecDeque::from([0usize]);
    let goal = to.labels();
    while let Some(i) = queue.pop_front() {
        if arena[i].labels() == goal {
            let mut steps = Vec::new();
            let mut cur = i;
            while let Some((p, s)) = parent[cur] {
                steps.push(s);
                cur = p;
            }
            steps.reverse();
            return Ok(Some(ReconSequence { start: from.clone(), steps }));
        }
        for (v, b) in arena[i].legal_moves() {
            let next = arena[i].with_label(v, b);
            if index.contains_key(next.labels()) {
                continue;
            }
            if arena.len() as u64 >= budget {
                return Err(Error::StateSpaceExceeded { budget });
            }
            index.insert(next.labels().to_vec(), arena.len());
            parent.push(Some((i, Step { vertex: v, label: b })));
            queue.push_back(arena.len());
            arena.push(next);
        }
    }
    Ok(None)
}
