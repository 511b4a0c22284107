use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

const MAX_ATTEMPTS: usize = 64;

/// A 3-connected graph on `target_n` vertices, grown from a random wheel by
/// edge additions and vertex splits. Deterministic in `seed`.
pub fn gen_random_3connected(target_n: usize, seed: u64) -> Result<Graph> {
    if target_n < 4 {
        return Err(Error::BadParameter(format!("3-connected graphs need at least 4 vertices, got {target_n}")));
    }
    if target_n > crate::MAX_VERTICES {
        return Err(Error::TooLarge(target_n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // K4 admits neither move, so larger targets start from W4 or bigger.
    let rim = if target_n == 4 { 3 } else { rng.gen_range(4..target_n) };
    let mut g = super::gen_wheel(rim)?;
    while g.n() < target_n {
        let next = if rng.gen_bool(0.3) { add_random_edge(&g, &mut rng) } else { None };
        g = match next.or_else(|| split_random_vertex(&g, &mut rng)) {
            Some(h) => h,
            // No vertex can be split, so the graph is cubic and, not being
            // K4, misses an edge.
            None => add_random_edge(&g, &mut rng).ok_or_else(|| Error::BadParameter("generator stuck".into()))?,
        };
        debug_assert!(g.is_k_connected(3));
    }
    let extra = rng.gen_range(0..=target_n / 2);
    for _ in 0..extra {
        if let Some(h) = add_random_edge(&g, &mut rng) {
            g = h;
        }
    }
    Ok(g)
}

fn add_random_edge(g: &Graph, rng: &mut ChaCha8Rng) -> Option<Graph> {
    let n = g.n();
    let missing: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !g.has_edge(u, v)).collect();
    let &(u, v) = missing.choose(rng)?;
    g.add_edge(u, v).ok()
}

/// Splits a random vertex of degree at least four with a random balanced
/// enough partition, retrying until the result is 3-connected.
fn split_random_vertex(g: &Graph, rng: &mut ChaCha8Rng) -> Option<Graph> {
    let big: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= 4).collect();
    for _ in 0..MAX_ATTEMPTS {
        let &v = big.choose(rng)?;
        let mut nbrs = g.neighbors(v).to_vec();
        nbrs.shuffle(rng);
        let cut = rng.gen_range(2..=nbrs.len() - 2);
        let part1: VertexSet = nbrs[..cut].iter().collect();
        let part2: VertexSet = nbrs[cut..].iter().collect();
        if let Ok(h) = g.split_vertex(v, part1, part2) {
            if h.is_k_connected(3) {
                return Some(h);
            }
        }
    }
    None
}
