//! Generators for the graph families used as hosts and targets, plus the
//! corpus builders behind the campaigns.

mod chain;
mod genwheel;
mod random;
mod small;
mod spec;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use chain::{find_chain, ChainOp};
pub use genwheel::{gen_generalized_wheel, GeneralizedWheel, PartShape};
pub use random::gen_random_3connected;
pub use small::enumerate_small_graphs;
pub use spec::FamilySpec;

fn build(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
    let edges: Vec<_> = edges.into_iter().collect();
    Graph::from_edges(n, &edges)
}

fn at_least(what: &str, k: usize, min: usize) -> Result<()> {
    if k < min {
        return Err(Error::BadParameter(format!("{what} needs at least {min}, got {k}")));
    }
    Ok(())
}

/// `K_n`.
pub fn gen_clique(n: usize) -> Result<Graph> {
    at_least("clique size", n, 1)?;
    build(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Path `0 - 1 - ... - (n-1)`.
pub fn gen_path(n: usize) -> Result<Graph> {
    at_least("path length", n, 1)?;
    build(n, (1..n).map(|v| (v - 1, v)))
}

/// Cycle `0 - 1 - ... - (n-1) - 0`.
pub fn gen_cycle(n: usize) -> Result<Graph> {
    at_least("cycle length", n, 3)?;
    build(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// `K_{1,k}` with centre 0 and leaves `1..=k`.
pub fn gen_star(k: usize) -> Result<Graph> {
    at_least("star size", k, 1)?;
    build(k + 1, (1..=k).map(|v| (0, v)))
}

/// `K_{p,q}` with sides `0..p` and `p..p+q`.
pub fn gen_complete_bipartite(p: usize, q: usize) -> Result<Graph> {
    at_least("side size", p.min(q), 1)?;
    build(p + q, (0..p).flat_map(|u| (p..p + q).map(move |v| (u, v))))
}

/// Wheel `W_k`: hub 0 and rim cycle `1 - 2 - ... - k - 1`.
pub fn gen_wheel(k: usize) -> Result<Graph> {
    at_least("wheel rim", k, 3)?;
    build(k + 1, (1..=k).flat_map(|v| [(0, v), (v, v % k + 1)]))
}

/// Squared cycle `C_k^2`: the cycle plus every chord of length two.
pub fn gen_squared_cycle(k: usize) -> Result<Graph> {
    at_least("squared cycle length", k, 5)?;
    build(k, (0..k).flat_map(|v| [(v, (v + 1) % k), (v, (v + 2) % k)]))
}
