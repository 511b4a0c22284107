use super::Graph;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;
use crate::MAX_VERTICES;

impl Graph {
    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n() });
        }
        Ok(())
    }

    /// Splits `v` into `v` (keeping `part1`) and a new vertex `n` (taking
    /// `part2`), joined by an edge. Both new vertices must end with degree at
    /// least three.
    pub fn split_vertex(&self, v: usize, part1: VertexSet, part2: VertexSet) -> Result<Graph> {
        self.check_vertex(v)?;
        let nbrs = self.neighbors(v);
        if part1.intersects(part2) {
            return Err(Error::InvalidPartition(format!("parts {part1} and {part2} overlap")));
        }
        if part1 | part2 != nbrs {
            return Err(Error::InvalidPartition(format!(
                "parts {part1} and {part2} do not cover the neighbourhood {nbrs} of {v}"
            )));
        }
        if part1.len() < 2 || part2.len() < 2 {
            return Err(Error::InvalidPartition(format!(
                "new vertices would have degrees {} and {}; both must be at least 3",
                part1.len() + 1,
                part2.len() + 1
            )));
        }
        let n = self.n();
        if n + 1 > MAX_VERTICES {
            return Err(Error::TooLarge(n + 1));
        }
        let mut g = Graph::new(n + 1);
        for (a, b) in self.edges() {
            if a != v && b != v {
                g.insert_edge(a, b)?;
            }
        }
        for w in part1 {
            g.insert_edge(v, w)?;
        }
        for w in part2 {
            g.insert_edge(n, w)?;
        }
        g.insert_edge(v, n)?;
        Ok(g)
    }

    /// Copy of the graph with the edge `uv` added.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = self.clone();
        g.insert_edge(u, v)?;
        Ok(g)
    }

    /// Copy of the graph with the edge `uv` removed.
    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NoSuchEdge(u, v));
        }
        let mut g = self.clone();
        g.remove_edge_mut(u, v);
        Ok(g)
    }

    /// Contracts the edge `uv`. The merged vertex takes index `min(u, v)`;
    /// vertices above `max(u, v)` shift down by one. Loops and parallel
    /// edges are dropped.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NoSuchEdge(u, v));
        }
        let (keep, gone) = (u.min(v), u.max(v));
        let map = |w: usize| match w {
            w if w == gone => keep,
            w if w > gone => w - 1,
            w => w,
        };
        let mut g = Graph::new(self.n() - 1);
        for (a, b) in self.edges() {
            let (a, b) = (map(a), map(b));
            if a != b && !g.has_edge(a, b) {
                g.insert_edge(a, b)?;
            }
        }
        Ok(g)
    }

    /// One vertex per edge (in [`Graph::edges`] order); two are adjacent when
    /// the edges share an endpoint.
    pub fn line_graph(&self) -> Result<Graph> {
        let edges = self.edges();
        if edges.len() > MAX_VERTICES {
            return Err(Error::TooLarge(edges.len()));
        }
        let mut g = Graph::new(edges.len());
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                let (a, b) = edges[i];
                let (c, d) = edges[j];
                if a == c || a == d || b == c || b == d {
                    g.insert_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    /// Cubic, at least six vertices, and a 4-connected line graph.
    pub fn is_internally_4_connected_cubic(&self) -> bool {
        self.n() >= 6
            && (0..self.n()).all(|v| self.degree(v) == 3)
            && self.line_graph().map(|l| l.is_k_connected(4)).unwrap_or(false)
    }
}
