use std::collections::VecDeque;
use std::fmt::{self, Write as _};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::model::{enumerate_models, EnumOptions, HModel};
use crate::sequence::{ReconSequence, Step};

/// Explicit reconfiguration graph: every H-model of the host as a node,
/// adjacent when one legal step apart.
///
/// Nodes are stored as label arrays read as big-endian base-`|V(H)|`
/// integers; node order is increasing code order, which is lexicographic
/// order of the label arrays.
#[derive(Debug, Clone)]
pub struct ReconGraph<'g> {
    host: &'g Graph,
    target: &'g Graph,
    codes: Vec<u64>,
    adjacency: Vec<Vec<u32>>,
    component_id: Vec<u32>,
    components: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("Infinite"),
        }
    }
}

impl Serialize for Diameter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Diameter::Finite(d) => s.serialize_u64(*d as u64),
            Diameter::Infinite => s.serialize_str("Infinite"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReconSummary {
    pub nodes: usize,
    pub edges: usize,
    pub components: usize,
    pub diameter: Diameter,
    pub frozen: usize,
}

/// Positional weights `k^(n-1-i)`, or `None` if `k^n` overflows a `u64`.
fn weights(n: usize, k: usize) -> Option<Vec<u64>> {
    let k = k as u64;
    k.checked_pow(n as u32)?;
    let mut w = vec![1u64; n];
    for i in (0..n.saturating_sub(1)).rev() {
        w[i] = w[i + 1] * k;
    }
    Some(w)
}

pub fn build_recon_graph<'g>(g: &'g Graph, h: &'g Graph, opts: EnumOptions) -> Result<ReconGraph<'g>> {
    let w = weights(g.n(), h.n()).ok_or(Error::StateSpaceExceeded { budget: opts.budget })?;
    let models = enumerate_models(g, h, opts)?;
    if models.len() > u32::MAX as usize {
        return Err(Error::StateSpaceExceeded { budget: opts.budget });
    }
    let codes: Vec<u64> = models.iter().map(|m| m.labels().iter().zip(&w).map(|(&l, &x)| l as u64 * x).sum()).collect();
    let adjacency: Vec<Vec<u32>> = models
        .par_iter()
        .zip(codes.par_iter())
        .map(|(m, &code)| {
            m.legal_moves()
                .into_iter()
                .map(|(v, b)| {
                    let next = code - m.label(v) as u64 * w[v] + b as u64 * w[v];
                    codes.binary_search(&next).expect("a legal step leads to a model") as u32
                })
                .collect()
        })
        .collect();
    let (component_id, components) = label_components(&adjacency);
    Ok(ReconGraph { host: g, target: h, codes, adjacency, component_id, components })
}

fn label_components(adj: &[Vec<u32>]) -> (Vec<u32>, usize) {
    let mut id = vec![u32::MAX; adj.len()];
    let mut next = 0u32;
    for s in 0..adj.len() {
        if id[s] != u32::MAX {
            continue;
        }
        id[s] = next;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if id[w as usize] == u32::MAX {
                    id[w as usize] = next;
                    queue.push_back(w as usize);
                }
            }
        }
        next += 1;
    }
    (id, next as usize)
}

/// Whether the reconfiguration graph of `g` for `h` is connected.
pub fn is_host(g: &Graph, h: &Graph, opts: EnumOptions) -> Result<bool> {
    let rg = build_recon_graph(g, h, opts)?;
    if rg.is_empty() {
        return Err(Error::NotAMinor);
    }
    Ok(rg.is_connected())
}

impl<'g> ReconGraph<'g> {
    pub fn host(&self) -> &'g Graph {
        self.host
    }

    pub fn target(&self) -> &'g Graph {
        self.target
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn codes(&self) -> &[u64] {
        &self.codes
    }

    pub fn labels(&self, i: usize) -> Vec<usize> {
        let k = self.target.n() as u64;
        let mut out = vec![0; self.host.n()];
        let mut c = self.codes[i];
        for slot in out.iter_mut().rev() {
            *slot = (c % k) as usize;
            c /= k;
        }
        out
    }

    pub fn model(&self, i: usize) -> HModel<'g> {
        HModel::new(self.host, self.target, self.labels(i)).expect("stored models are in range")
    }

    pub fn index_of(&self, labels: &[usize]) -> Option<usize> {
        let k = self.target.n();
        if labels.len() != self.host.n() || labels.iter().any(|&l| l >= k) {
            return None;
        }
        let code = labels.iter().fold(0u64, |acc, &l| acc * k as u64 + l as u64);
        self.codes.binary_search(&code).ok()
    }

    pub fn neighbors(&self, i: usize) -> &[u32] {
        &self.adjacency[i]
    }

    pub fn component_id(&self, i: usize) -> usize {
        self.component_id[i] as usize
    }

    pub fn component_count(&self) -> usize {
        self.components
    }

    /// Node count of each component, indexed by component id.
    pub fn component_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.components];
        for &c in &self.component_id {
            sizes[c as usize] += 1;
        }
        sizes
    }

    pub fn is_connected(&self) -> bool {
        self.components == 1
    }

    /// Largest eccentricity; `Infinite` when disconnected. An empty graph
    /// has diameter 0.
    pub fn diameter(&self) -> Diameter {
        if self.components > 1 {
            return Diameter::Infinite;
        }
        let d = (0..self.len()).into_par_iter().map(|s| self.bfs(s).into_iter().max().unwrap_or(0)).max().unwrap_or(0);
        Diameter::Finite(d as usize)
    }

    fn bfs(&self, s: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.len()];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = dist[u] + 1;
                    queue.push_back(w as usize);
                }
            }
        }
        dist
    }

    /// Nodes with no neighbours.
    pub fn frozen(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.adjacency[i].is_empty()).collect()
    }

    /// A shortest sequence from `from` to `to`, or `None` if they lie in
    /// different components.
    pub fn find_path(&self, from: &HModel<'g>, to: &HModel<'g>) -> Result<Option<ReconSequence<'g>>> {
        let s = self.index_of(from.labels()).ok_or(Error::UnknownModel)?;
        let t = self.index_of(to.labels()).ok_or(Error::UnknownModel)?;
        if self.component_id[s] != self.component_id[t] {
            return Ok(None);
        }
        let mut prev = vec![u32::MAX; self.len()];
        prev[s] = s as u32;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if u == t {
                break;
            }
            for &w in &self.adjacency[u] {
                if prev[w as usize] == u32::MAX {
                    prev[w as usize] = u as u32;
                    queue.push_back(w as usize);
                }
            }
        }
        let mut path = vec![t];
        while *path.last().unwrap() != s {
            path.push(prev[*path.last().unwrap()] as usize);
        }
        path.reverse();
        let steps = path
            .windows(2)
            .map(|p| {
                let (x, y) = (self.labels(p[0]), self.labels(p[1]));
                let vertex = (0..x.len()).find(|&i| x[i] != y[i]).expect("adjacent models differ");
                Step { vertex, label: y[vertex] }
            })
            .collect();
        Ok(Some(ReconSequence { start: self.model(s), steps }))
    }

    pub fn summary(&self) -> ReconSummary {
        ReconSummary {
            nodes: self.len(),
            edges: self.edge_count(),
            components: self.components,
            diameter: self.diameter(),
            frozen: self.frozen().len(),
        }
    }

    /// Graphviz rendering; node labels are the label arrays.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph recon {\n");
        for i in 0..self.len() {
            let l: Vec<String> = self.labels(i).iter().map(ToString::to_string).collect();
            writeln!(s, "  n{i} [label=\"{}\"];", l.join(" ")).unwrap();
        }
        for (i, adj) in self.adjacency.iter().enumerate() {
            for &j in adj.iter().filter(|&&j| j as usize > i) {
                writeln!(s, "  n{i} -- n{j};").unwrap();
            }
        }
        s.push_str("}\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn build<'g>(g: &'g Graph, h: &'g Graph) -> ReconGraph<'g> {
        build_recon_graph(g, h, EnumOptions::default()).unwrap()
    }

    #[test]
    fn path_and_star_and_triangle() {
        let k2 = families::gen_clique(2).unwrap();
        let p3 = families::gen_path(3).unwrap();
        let rg = build(&p3, &k2);
        assert_eq!(rg.summary(), ReconSummary { nodes: 4, edges: 2, components: 2, diameter: Diameter::Infinite, frozen: 0 });

        let s = families::gen_star(3).unwrap();
        let rg = build(&s, &k2);
        assert_eq!(rg.summary(), ReconSummary { nodes: 6, edges: 0, components: 6, diameter: Diameter::Infinite, frozen: 6 });

        let k3 = families::gen_clique(3).unwrap();
        let rg = build(&k3, &k2);
        assert_eq!(rg.summary(), ReconSummary { nodes: 6, edges: 6, components: 1, diameter: Diameter::Finite(3), frozen: 0 });
        assert!((0..6).all(|i| rg.neighbors(i).len() == 2));
    }

    #[test]
    fn single_model_space_has_diameter_zero() {
        let k3 = families::gen_clique(3).unwrap();
        let rg = build(&k3, &k3);
        assert_eq!(rg.len(), 6);
        assert_eq!(rg.edge_count(), 0);
        let k1 = families::gen_clique(1).unwrap();
        let rg = build(&k1, &k1);
        assert_eq!(rg.len(), 1);
        assert_eq!(rg.diameter(), Diameter::Finite(0));
    }

    #[test]
    fn find_path_examples() {
        let k2 = families::gen_clique(2).unwrap();
        let k3 = families::gen_clique(3).unwrap();
        let rg = build(&k3, &k2);
        let f = HModel::valid(&k3, &k2, vec![0, 1, 1]).unwrap();
        let g = HModel::valid(&k3, &k2, vec![1, 1, 0]).unwrap();
        assert!(rg.find_path(&f, &f).unwrap().unwrap().is_empty());
        let seq = rg.find_path(&f, &g).unwrap().unwrap();
        assert!(seq.len() <= 3);
        assert_eq!(seq.replay().unwrap(), g);

        let p3 = families::gen_path(3).unwrap();
        let rg = build(&p3, &k2);
        let f = HModel::valid(&p3, &k2, vec![0, 0, 1]).unwrap();
        let g = HModel::valid(&p3, &k2, vec![1, 1, 0]).unwrap();
        assert_eq!(rg.find_path(&f, &g).unwrap(), None);
        let bad = HModel::new(&p3, &k2, vec![0, 1, 0]).unwrap();
        assert_eq!(rg.find_path(&f, &bad).unwrap_err(), Error::UnknownModel);
    }

    #[test]
    fn host_membership() {
        let k2 = families::gen_clique(2).unwrap();
        assert!(is_host(&families::gen_cycle(4).unwrap(), &k2, EnumOptions::default()).unwrap());
        assert!(!is_host(&families::gen_path(3).unwrap(), &k2, EnumOptions::default()).unwrap());
        let (k5, k4) = (families::gen_clique(5).unwrap(), families::gen_clique(4).unwrap());
        assert!(is_host(&k5, &k4, EnumOptions::default()).unwrap());
        let k3 = families::gen_clique(3).unwrap();
        assert_eq!(is_host(&families::gen_cycle(5).unwrap(), &k4, EnumOptions::default()), Err(Error::NotAMinor));
        assert_eq!(is_host(&families::gen_path(4).unwrap(), &k3, EnumOptions::default()), Err(Error::NotAMinor));
    }

    #[test]
    fn dot_lists_nodes_and_edges() {
        let k2 = families::gen_clique(2).unwrap();
        let p3 = families::gen_path(3).unwrap();
        let dot = build(&p3, &k2).to_dot();
        assert_eq!(dot.matches(" -- ").count(), 2);
        assert!(dot.contains("[label=\"0 0 1\"]"));
    }
}
