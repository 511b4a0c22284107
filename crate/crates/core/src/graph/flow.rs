use std::collections::VecDeque;

use super::Graph;

impl Graph {
    /// At least `k + 1` vertices and no set of fewer than `k` vertices
    /// disconnects the graph.
    ///
    /// Checked as a minimum over non-adjacent pairs of unit-vertex-capacity
    /// max flow, stopping each flow as soon as it reaches `k`.
    pub fn is_k_connected(&self, k: usize) -> bool {
        let n = self.n();
        if n < k + 1 {
            return false;
        }
        if k == 0 {
            return true;
        }
        if !self.is_connected() {
            return false;
        }
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) && self.local_connectivity(u, v, k) < k {
                    return false;
                }
            }
        }
        true
    }

    /// Vertex connectivity: the largest `k` for which the graph is
    /// k-connected.
    pub fn connectivity(&self) -> usize {
        let n = self.n();
        if n == 0 || !self.is_connected() {
            return 0;
        }
        let mut best = n - 1;
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    best = best.min(self.local_connectivity(u, v, best));
                }
            }
        }
        best
    }

    /// Maximum number of internally vertex-disjoint `u`–`v` paths. The edge
    /// `uv`, when present, counts as one path.
    pub fn disjoint_paths(&self, u: usize, v: usize) -> usize {
        assert_ne!(u, v);
        if self.has_edge(u, v) {
            let mut h = self.clone();
            h.remove_edge_mut(u, v);
            h.local_connectivity(u, v, usize::MAX) + 1
        } else {
            self.local_connectivity(u, v, usize::MAX)
        }
    }

    /// Max flow from `s` to `t` where every other vertex has capacity one;
    /// `s` and `t` must be non-adjacent. Stops once `limit` is reached.
    fn local_connectivity(&self, s: usize, t: usize, limit: usize) -> usize {
        let n = self.n();
        // Node 2v is v's entry, 2v+1 its exit.
        let size = 2 * n;
        let mut cap = vec![0i32; size * size];
        let idx = |a: usize, b: usize| a * size + b;
        for v in 0..n {
            cap[idx(2 * v, 2 * v + 1)] = if v == s || v == t { n as i32 } else { 1 };
            for w in self.neighbors(v) {
                cap[idx(2 * v + 1, 2 * w)] = 1;
            }
        }
        let (source, sink) = (2 * s + 1, 2 * t);
        let mut flow = 0;
        let mut prev = vec![usize::MAX; size];
        while flow < limit {
            prev.iter_mut().for_each(|p| *p = usize::MAX);
            prev[source] = source;
            let mut queue = VecDeque::from([source]);
            while let Some(a) = queue.pop_front() {
                if a == sink {
                    break;
                }
                for b in 0..size {
                    if prev[b] == usize::MAX && cap[idx(a, b)] > 0 {
                        prev[b] = a;
                        queue.push_back(b);
                    }
                }
            }
            if prev[sink] == usize::MAX {
                break;
            }
            let mut b = sink;
            while b != source {
                let a = prev[b];
                cap[idx(a, b)] -= 1;
                cap[idx(b, a)] += 1;
                b = a;
            }
            flow += 1;
        }
        flow
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vertex_set::VertexSet;

    /// No vertex subset of size < k separates the graph, and n >= k + 1.
    fn brute_k_connected(g: &Graph, k: usize) -> bool {
        let n = g.n();
        if n < k + 1 {
            return false;
        }
        (0u64..1 << n).all(|bits| {
            let s = VertexSet::from_bits(bits);
            s.len() >= k || g.is_connected_within(g.vertices() - s)
        })
    }

    fn from(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e).unwrap()
    }

    #[test]
    fn examples() {
        let k4 = from(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(k4.is_k_connected(3));
        assert!(!k4.is_k_connected(4));
        let p3 = from(3, &[(0, 1), (1, 2)]);
        assert!(!p3.is_k_connected(2));
        assert!(p3.is_k_connected(1));
        let c62: Vec<(usize, usize)> = (0..6).flat_map(|i| [(i, (i + 1) % 6), (i, (i + 2) % 6)]).collect();
        let c62 = from(6, &c62);
        assert!(c62.is_k_connected(4));
        assert!(brute_k_connected(&c62, 4));
        assert_eq!(c62.connectivity(), 4);
    }

    #[test]
    fn agrees_with_bruteforce_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..400 {
            let n = rng.gen_range(1..=8);
            let mut g = Graph::new(n);
            let p: f64 = rng.gen_range(0.2..0.95);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        g.insert_edge(u, v).unwrap();
                    }
                }
            }
            for k in 1..=5 {
                assert_eq!(g.is_k_connected(k), brute_k_connected(&g, k), "{g:?} k={k}");
            }
        }
    }

    #[test]
    fn menger_counts_include_direct_edge() {
        let k4 = from(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(k4.disjoint_paths(0, 1), 3);
        let c4 = from(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(c4.disjoint_paths(0, 2), 2);
        assert_eq!(c4.disjoint_paths(0, 1), 2);
    }
}
