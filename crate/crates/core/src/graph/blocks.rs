use serde::Serialize;

use super::Graph;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Blocks (biconnected components) of a connected graph, its cut vertices,
/// and a tree over the blocks.
///
/// Blocks are maximal 2-connected subgraphs, bridges (as two-vertex blocks),
/// or a lone vertex. `edges` joins every block containing a cut vertex `c` to
/// the block through which `c` was first reached from block 0, so it is the
/// block/cut-vertex tree with each cut node folded into its parent block.
/// It is a tree even when a cut vertex lies in three or more blocks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockTree {
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
    pub edges: Vec<(usize, usize)>,
}

impl BlockTree {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Cut vertices of block `i` (its joining vertices).
    pub fn joining_vertices(&self, i: usize) -> VertexSet {
        self.blocks[i] & self.cut_vertices
    }

    /// Non-joining vertices of block `i`.
    pub fn interior(&self, i: usize) -> VertexSet {
        self.blocks[i] - self.cut_vertices
    }

    /// A block is a leaf when it holds at most one cut vertex.
    pub fn is_leaf(&self, i: usize) -> bool {
        self.joining_vertices(i).len() <= 1
    }

    pub fn leaf_blocks(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_leaf(i)).collect()
    }

    /// Union of the interior vertices of all leaf blocks.
    pub fn leaf_interior(&self) -> VertexSet {
        self.leaf_blocks().into_iter().fold(VertexSet::EMPTY, |acc, i| acc | self.interior(i))
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.blocks.iter().fold(VertexSet::EMPTY, |acc, &b| acc | b)
    }

    /// Index of the block equal to `set`, if any.
    pub fn position(&self, set: VertexSet) -> Option<usize> {
        self.blocks.iter().position(|&b| b == set)
    }

    /// Subtree induced by the blocks that meet `set`. Cut vertices are kept
    /// only where at least two retained blocks meet.
    pub fn restrict_to(&self, set: VertexSet) -> BlockTree {
        let keep: Vec<usize> = (0..self.len()).filter(|&i| self.blocks[i].intersects(set)).collect();
        let mut index = vec![usize::MAX; self.len()];
        for (new, &old) in keep.iter().enumerate() {
            index[old] = new;
        }
        let blocks: Vec<VertexSet> = keep.iter().map(|&i| self.blocks[i]).collect();
        let cut_vertices = self
            .cut_vertices
            .iter()
            .filter(|&c| blocks.iter().filter(|b| b.contains(c)).count() >= 2)
            .collect();
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| index[a] != usize::MAX && index[b] != usize::MAX)
            .map(|&(a, b)| (index[a], index[b]))
            .collect();
        BlockTree { blocks, cut_vertices, edges }
    }
}

impl Graph {
    /// Block tree of a connected graph.
    pub fn block_tree(&self) -> Result<BlockTree> {
        if !self.is_connected() {
            return Err(Error::DisconnectedInput);
        }
        Ok(self.block_tree_within(self.vertices()))
    }

    /// Block tree of `G[set]`. For a disconnected `set` the result is a forest.
    pub fn block_tree_within(&self, set: VertexSet) -> BlockTree {
        let mut st = Tarjan {
            g: self,
            set,
            disc: [0; crate::MAX_VERTICES],
            low: [0; crate::MAX_VERTICES],
            time: 0,
            stack: Vec::new(),
            blocks: Vec::new(),
            cuts: VertexSet::EMPTY,
        };
        for root in set {
            if st.disc[root] != 0 {
                continue;
            }
            st.time += 1;
            st.disc[root] = st.time;
            st.low[root] = st.time;
            let children = st.visit(root, usize::MAX);
            if children == 0 {
                st.blocks.push(VertexSet::singleton(root));
            } else if children >= 2 {
                st.cuts.insert(root);
            }
        }
        let mut blocks = st.blocks;
        blocks.sort_by_key(|b| (b.first(), b.bits()));
        let cut_vertices = st.cuts;
        let edges = fold_tree(&blocks, cut_vertices);
        BlockTree { blocks, cut_vertices, edges }
    }
}

struct Tarjan<'g> {
    g: &'g Graph,
    set: VertexSet,
    disc: [u32; crate::MAX_VERTICES],
    low: [u32; crate::MAX_VERTICES],
    time: u32,
    stack: Vec<(usize, usize)>,
    blocks: Vec<VertexSet>,
    cuts: VertexSet,
}

impl Tarjan<'_> {
    /// Returns the number of DFS children of `u`.
    fn visit(&mut self, u: usize, parent: usize) -> usize {
        let mut children = 0;
        for w in self.g.neighbors(u) & self.set {
            if self.disc[w] == 0 {
                children += 1;
                self.stack.push((u, w));
                self.time += 1;
                self.disc[w] = self.time;
                self.low[w] = self.time;
                self.visit(w, u);
                self.low[u] = self.low[u].min(self.low[w]);
                if self.low[w] >= self.disc[u] {
                    if parent != usize::MAX {
                        self.cuts.insert(u);
                    }
                    let mut block = VertexSet::EMPTY;
                    while let Some((a, b)) = self.stack.pop() {
                        block.insert(a);
                        block.insert(b);
                        if (a, b) == (u, w) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if w != parent && self.disc[w] < self.disc[u] {
                self.stack.push((u, w));
                self.low[u] = self.low[u].min(self.disc[w]);
            }
        }
        children
    }
}

/// Breadth-first over blocks from block 0 (per component), attaching each
/// unseen block at a shared cut vertex to the block it was reached from.
fn fold_tree(blocks: &[VertexSet], cuts: VertexSet) -> Vec<(usize, usize)> {
    let mut seen = vec![false; blocks.len()];
    let mut used_cut = VertexSet::EMPTY;
    let mut edges = Vec::new();
    for start in 0..blocks.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(b) = queue.pop_front() {
            for c in blocks[b] & (cuts - used_cut) {
                used_cut.insert(c);
                for (other, blk) in blocks.iter().enumerate() {
                    if !seen[other] && blk.contains(c) {
                        seen[other] = true;
                        edges.push((b.min(other), b.max(other)));
                        queue.push_back(other);
                    }
                }
            }
        }
    }
    edges.sort_unstable();
    edges
}
