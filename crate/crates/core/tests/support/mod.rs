//! Brute-force oracles used to check the library from the outside. Nothing
//! here calls into the library's own connectivity, model or search code;
//! graphs are plain adjacency matrices.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use recon_minors::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Adj {
    pub n: usize,
    pub m: Vec<Vec<bool>>,
}

impl Adj {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Adj {
        let mut m = vec![vec![false; n]; n];
        for &(u, v) in edges {
            m[u][v] = true;
            m[v][u] = true;
        }
        Adj { n, m }
    }

    pub fn of(g: &Graph) -> Adj {
        Adj::new(g.n(), &g.edges())
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.m[u][v] {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_edges(self.n, &self.edges()).unwrap()
    }

    /// Whether the vertices with `keep[v]` induce a connected subgraph. The
    /// empty set counts as disconnected.
    pub fn connected_within(&self, keep: &[bool]) -> bool {
        let Some(start) = (0..self.n).find(|&v| keep[v]) else { return false };
        let mut seen = vec![false; self.n];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for v in 0..self.n {
                if keep[v] && self.m[u][v] && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        (0..self.n).all(|v| !keep[v] || seen[v])
    }

    pub fn connected(&self) -> bool {
        self.connected_within(&vec![true; self.n])
    }

    /// More than `k` vertices and no set of fewer than `k` vertices whose
    /// removal disconnects the rest.
    pub fn k_connected(&self, k: usize) -> bool {
        if self.n <= k {
            return false;
        }
        (0u32..1 << self.n).filter(|s| (s.count_ones() as usize) < k).all(|s| {
            let keep: Vec<bool> = (0..self.n).map(|v| s & (1 << v) == 0).collect();
            self.connected_within(&keep)
        })
    }

    /// The smallest edge bitmask over all relabelings, tagged with the
    /// vertex count so that graphs of different orders never collide.
    pub fn canon(&self) -> u64 {
        let mut perm: Vec<usize> = (0..self.n).collect();
        let mut best = u64::MAX;
        permute(&mut perm, 0, &mut |p| {
            let mut code = 0u64;
            let mut bit = 0;
            for u in 0..self.n {
                for v in u + 1..self.n {
                    if self.m[p[u]][p[v]] {
                        code |= 1 << bit;
                    }
                    bit += 1;
                }
            }
            best = best.min(code);
        });
        best | (self.n as u64) << 58
    }
}

fn permute(p: &mut Vec<usize>, i: usize, f: &mut impl FnMut(&[usize])) {
    if i == p.len() {
        f(p);
        return;
    }
    for j in i..p.len() {
        p.swap(i, j);
        permute(p, i + 1, f);
        p.swap(i, j);
    }
}

/// One representative per isomorphism class of the connected graphs on
/// `n` vertices.
pub fn connected_graphs(n: usize) -> Vec<Adj> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, e)| *e).collect();
        if edges.len() + 1 < n {
            continue;
        }
        let a = Adj::new(n, &edges);
        if a.connected() && seen.insert(a.canon()) {
            out.push(a);
        }
    }
    out
}

/// Straight from the definition: every label class nonempty and connected,
/// every target edge realized by a host edge.
pub fn is_model(g: &Adj, h: &Adj, labels: &[usize]) -> bool {
    if labels.len() != g.n || labels.iter().any(|&l| l >= h.n) {
        return false;
    }
    for a in 0..h.n {
        let keep: Vec<bool> = labels.iter().map(|&l| l == a).collect();
        if !g.connected_within(&keep) {
            return false;
        }
    }
    h.edges().iter().all(|&(a, b)| {
        g.edges().iter().any(|&(u, v)| (labels[u] == a && labels[v] == b) || (labels[u] == b && labels[v] == a))
    })
}

/// All models, in lexicographic order of label vectors.
pub fn models(g: &Adj, h: &Adj) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut labels = vec![0; g.n];
    loop {
        if is_model(g, h, &labels) {
            out.push(labels.clone());
        }
        let mut i = g.n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            labels[i] += 1;
            if labels[i] < h.n {
                break;
            }
            labels[i] = 0;
        }
    }
}

/// The reconfiguration graph built by trying every single relabeling.
pub struct Recon {
    pub models: Vec<Vec<usize>>,
    pub adj: Vec<Vec<usize>>,
}

impl Recon {
    pub fn build(g: &Adj, h: &Adj) -> Recon {
        let models = models(g, h);
        let index: HashMap<&[usize], usize> = models.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();
        let adj = models
            .iter()
            .map(|m| {
                let mut out = Vec::new();
                for v in 0..g.n {
                    for l in 0..h.n {
                        if l != m[v] {
                            let mut x = m.clone();
                            x[v] = l;
                            if let Some(&j) = index.get(x.as_slice()) {
                                out.push(j);
                            }
                        }
                    }
                }
                out
            })
            .collect();
        Recon { models, adj }
    }

    pub fn edges(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    fn bfs(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.models.len()];
        dist[s] = Some(0);
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(dist[u].unwrap() + 1);
                    q.push_back(v);
                }
            }
        }
        dist
    }

    pub fn component_sizes(&self) -> Vec<usize> {
        let mut comp = vec![false; self.models.len()];
        let mut sizes = Vec::new();
        for s in 0..self.models.len() {
            if !comp[s] {
                let d = self.bfs(s);
                let members: Vec<usize> = (0..d.len()).filter(|&i| d[i].is_some()).collect();
                for &i in &members {
                    comp[i] = true;
                }
                sizes.push(members.len());
            }
        }
        sizes.sort_unstable();
        sizes
    }

    /// `None` when disconnected or empty.
    pub fn diameter(&self) -> Option<usize> {
        if self.models.is_empty() {
            return None;
        }
        let mut best = 0;
        for s in 0..self.models.len() {
            for d in self.bfs(s) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    pub fn frozen(&self) -> usize {
        self.adj.iter().filter(|a| a.is_empty()).count()
    }

    pub fn connected(&self) -> bool {
        self.component_sizes().len() == 1
    }
}

pub fn clique(n: usize) -> Adj {
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Adj::new(n, &edges)
}

/// Checks every intermediate labeling of a step list with [`is_model`].
pub fn replays(g: &Adj, h: &Adj, start: &[usize], steps: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut cur = start.to_vec();
    if !is_model(g, h, &cur) {
        return None;
    }
    for &(v, l) in steps {
        if v >= g.n || cur[v] == l {
            return None;
        }
        cur[v] = l;
        if !is_model(g, h, &cur) {
            return None;
        }
    }
    Some(cur)
}
