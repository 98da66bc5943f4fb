//! State graphs and their reductions.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One vertex per state circle, one edge per chord. Loops and parallel
/// edges are kept.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateGraph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

/// A simple graph: no loops, no parallel edges; edges stored as sorted
/// pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ReducedGraph {
    pub vertices: usize,
    pub edges: BTreeSet<(usize, usize)>,
}

fn components(vertices: usize, edges: impl Iterator<Item = (usize, usize)>) -> usize {
    let mut parent: Vec<usize> = (0..vertices).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let mut count = vertices;
    for (a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            count -= 1;
        }
    }
    count
}

impl StateGraph {
    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(|(a, b)| a == b)
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Collapses parallel edges; fails on a loop edge.
    pub fn reduce(&self) -> Result<ReducedGraph> {
        if self.has_loop() {
            return Err(Error::NotAdequate("diagram not adequate".into()));
        }
        Ok(ReducedGraph {
            vertices: self.vertices,
            edges: self.edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect(),
        })
    }

    /// Edge list text: first line `vertices edges`, then one `a b` per line.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.vertices, self.edges.len());
        for (a, b) in &self.edges {
            s.push_str(&format!("{a} {b}\n"));
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

pub fn reduce_graph(g: &StateGraph) -> Result<ReducedGraph> {
    g.reduce()
}

impl ReducedGraph {
    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_components(&self) -> usize {
        components(self.vertices, self.edges.iter().copied())
    }

    /// First Betti number `E - V + components`.
    pub fn cycle_rank(&self) -> usize {
        self.edges.len() + self.num_components() - self.vertices
    }

    pub fn is_tree(&self) -> bool {
        self.num_components() == 1 && self.cycle_rank() == 0
    }

    /// Degree sequence, sorted; a cheap isomorphism invariant.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg.sort_unstable();
        deg
    }

    /// Isomorphism by brute force over vertex permutations; intended for
    /// graphs of at most eight vertices.
    pub fn is_isomorphic(&self, other: &ReducedGraph) -> bool {
        if self.vertices != other.vertices
            || self.edges.len() != other.edges.len()
            || self.degree_sequence() != other.degree_sequence()
        {
            return false;
        }
        let n = self.vertices;
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            let mapped: BTreeSet<(usize, usize)> = self
                .edges
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (perm[a], perm[b]);
                    (x.min(y), x.max(y))
                })
                .collect();
            if mapped == other.edges {
                return true;
            }
            if !next_permutation(&mut perm) {
                return false;
            }
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    /// The 2-connected blocks, each relabelled onto `0..k` in increasing
    /// vertex order. Isolated vertices give one-vertex blocks; a graph
    /// without edges or vertices gives itself.
    pub fn blocks(&self) -> Vec<ReducedGraph> {
        let n = self.vertices;
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut st = Blocks {
            adj: &adj,
            disc: vec![usize::MAX; n],
            low: vec![0; n],
            time: 0,
            stack: Vec::new(),
            out: Vec::new(),
        };
        for v in 0..n {
            if st.disc[v] == usize::MAX {
                st.visit(v, usize::MAX);
                if adj[v].is_empty() {
                    st.out.push(BTreeSet::new());
                    st.out.last_mut().expect("pushed").insert((v, v));
                }
            }
        }
        if st.out.is_empty() {
            return vec![self.clone()];
        }
        let mut blocks: Vec<ReducedGraph> = st
            .out
            .into_iter()
            .map(|edges| {
                let verts: BTreeSet<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
                let index = |v: usize| verts.iter().position(|&w| w == v).expect("member");
                ReducedGraph {
                    vertices: verts.len(),
                    edges: edges
                        .iter()
                        .filter(|(a, b)| a != b)
                        .map(|&(a, b)| {
                            let (x, y) = (index(a), index(b));
                            (x.min(y), x.max(y))
                        })
                        .collect(),
                }
            })
            .collect();
        blocks.sort_by_key(|g| (g.vertices, g.edges.clone()));
        blocks
    }
}

struct Blocks<'a> {
    adj: &'a [Vec<usize>],
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<(usize, usize)>,
    out: Vec<BTreeSet<(usize, usize)>>,
}

impl Blocks<'_> {
    fn visit(&mut self, v: usize, parent: usize) {
        self.disc[v] = self.time;
        self.low[v] = self.time;
        self.time += 1;
        for &w in &self.adj[v] {
            if w == parent {
                continue;
            }
            if self.disc[w] == usize::MAX {
                self.stack.push((v.min(w), v.max(w)));
                self.visit(w, v);
                self.low[v] = self.low[v].min(self.low[w]);
                if self.low[w] >= self.disc[v] {
                    let mut block = BTreeSet::new();
                    while let Some(e) = self.stack.pop() {
                        block.insert(e);
                        if e == (v.min(w), v.max(w)) {
                            break;
                        }
                    }
                    self.out.push(block);
                }
            } else if self.disc[w] < self.disc[v] {
                self.stack.push((v.min(w), v.max(w)));
                self.low[v] = self.low[v].min(self.disc[w]);
            }
        }
    }
}

pub fn cycle_rank(g: &ReducedGraph) -> usize {
    g.cycle_rank()
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
