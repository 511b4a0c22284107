use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Shape of the parts of a generalized wheel, as named in family specs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PartShape {
    Single,
    Path,
    Cycle,
    Triangle,
    Clique,
    Star,
}

impl PartShape {
    pub fn graph(self, n: usize) -> Result<Graph> {
        match self {
            PartShape::Single if n == 1 => super::gen_clique(1),
            PartShape::Triangle if n == 3 => super::gen_clique(3),
            PartShape::Single | PartShape::Triangle => {
                Err(Error::BadParameter(format!("part shape {self} does not have {n} vertices")))
            }
            PartShape::Path => super::gen_path(n),
            PartShape::Cycle => super::gen_cycle(n),
            PartShape::Clique => super::gen_clique(n),
            PartShape::Star => super::gen_star(n.saturating_sub(1)),
        }
    }

    /// Part size implied by the shape alone.
    pub fn natural_size(self) -> Option<usize> {
        match self {
            PartShape::Single => Some(1),
            PartShape::Triangle => Some(3),
            _ => None,
        }
    }
}

impl fmt::Display for PartShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PartShape::Single => "single",
            PartShape::Path => "path",
            PartShape::Cycle => "cycle",
            PartShape::Triangle => "triangle",
            PartShape::Clique => "clique",
            PartShape::Star => "star",
        })
    }
}

impl FromStr for PartShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "single" | "vertex" => PartShape::Single,
            "path" => PartShape::Path,
            "cycle" => PartShape::Cycle,
            "triangle" => PartShape::Triangle,
            "clique" | "complete" => PartShape::Clique,
            "star" => PartShape::Star,
            _ => return Err(Error::BadParameter(format!("unknown part shape {s:?}"))),
        })
    }
}

/// Layout of a generalized wheel `W(G_1..G_m, n, l, m)`.
///
/// Hubs are vertices `0..l`; vertex `j` of part `i` (both 0-based) is
/// `l + i*n + j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedWheel {
    pub l: usize,
    pub m: usize,
    pub n: usize,
    pub graph: Graph,
}

impl GeneralizedWheel {
    pub fn new(parts: &[Graph], n: usize, l: usize, m: usize) -> Result<Self> {
        let graph = gen_generalized_wheel(parts, n, l, m)?;
        Ok(GeneralizedWheel { l, m, n, graph })
    }

    #[inline]
    pub fn hub(&self, i: usize) -> usize {
        i
    }

    #[inline]
    pub fn sub(&self, i: usize, j: usize) -> usize {
        self.l + i * self.n + j
    }

    pub fn is_hub(&self, v: usize) -> bool {
        v < self.l
    }

    /// The special subgraph vertex `s = s(0,0)`.
    pub fn special(&self) -> usize {
        self.sub(0, 0)
    }

    /// `s+ = s(1,0)`, the special vertex's rim successor.
    pub fn special_next(&self) -> usize {
        self.sub(1, 0)
    }

    /// Reads `g` as a generalized wheel with `l` hubs, trying part sizes in
    /// increasing order. The parts are whatever the layout induces, so this
    /// only checks the edge families.
    pub fn recognize(g: &Graph, l: usize) -> Result<Self> {
        if l == 0 || l >= g.n() {
            return Err(Error::NotAGeneralizedWheel(format!("{l} hubs on {} vertices", g.n())));
        }
        let rest = g.n() - l;
        for n in (1..=rest).filter(|n| rest.is_multiple_of(*n)) {
            let m = rest / n;
            if m < 3 {
                break;
            }
            let parts: Vec<Graph> = (0..m)
                .map(|i| g.induced((l + i * n..l + (i + 1) * n).collect()))
                .collect();
            if let Ok(w) = GeneralizedWheel::new(&parts, n, l, m) {
                if w.graph == *g {
                    return Ok(w);
                }
            }
        }
        Err(Error::NotAGeneralizedWheel(format!("no layout with {l} hubs and at least three parts matches")))
    }
}

/// `W(G_1..G_m, n, l, m)`: a hub clique on `l` vertices joined to every
/// subgraph vertex, copies of the parts, and rim edges joining vertex `j` of
/// each part to vertex `j` of the next part cyclically.
pub fn gen_generalized_wheel(parts: &[Graph], n: usize, l: usize, m: usize) -> Result<Graph> {
    if m != parts.len() {
        return Err(Error::BadParameter(format!("m = {m} but {} parts given", parts.len())));
    }
    if m < 3 {
        return Err(Error::BadParameter(format!("a generalized wheel needs at least three parts, got {m}")));
    }
    if l == 0 || n == 0 {
        return Err(Error::BadParameter("hub count and part size must be positive".into()));
    }
    for (i, p) in parts.iter().enumerate() {
        if p.n() != n {
            return Err(Error::PartSizeMismatch(n, p.n()));
        }
        if !p.is_connected() {
            return Err(Error::PartDisconnected(i));
        }
    }
    let total = l + m * n;
    if total > crate::MAX_VERTICES {
        return Err(Error::TooLarge(total));
    }
    let s = |i: usize, j: usize| l + i * n + j;
    let mut edges = Vec::new();
    for a in 0..l {
        edges.extend((a + 1..l).map(|b| (a, b)));
        edges.extend((l..total).map(|v| (a, v)));
    }
    for (i, p) in parts.iter().enumerate() {
        edges.extend(p.edges().into_iter().map(|(x, y)| (s(i, x), s(i, y))));
        edges.extend((0..n).map(|j| (s(i, j), s((i + 1) % m, j))));
    }
    Graph::from_edges(total, &edges)
}
