//! Validated finite simple graphs.
//!
//! A [`Graph`] is undirected, loop-free, multi-edge-free and has no isolated
//! vertices; every constructor enforces this eagerly so downstream code can
//! rely on positive degrees. Vertices are `0..n`, adjacency lists are kept
//! strictly sorted.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("LoopEdge: self-loop at vertex {0}")]
    LoopEdge(usize),
    #[error("DuplicateEdge: edge ({0}, {1}) listed more than once")]
    DuplicateEdge(usize, usize),
    #[error("IsolatedVertex: vertex {0} has no incident edge")]
    IsolatedVertex(usize),
    #[error("IndexOutOfRange: vertex index {index} out of range for {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("OverlappingSets: subsets share vertex {0}")]
    OverlappingSets(usize),
    #[error("NoVertices: a graph needs at least one vertex")]
    NoVertices,
}

/// Undirected simple graph without isolated vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph on vertices `0..n` from an undirected edge list.
    ///
    /// Edges may be given in either endpoint order. Fails on out-of-range
    /// indices, self-loops, repeated edges and isolated vertices, naming the
    /// offending vertex or edge.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::IndexOutOfRange { index: x, n });
                }
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(v.min(w[0]), v.max(w[0])));
            }
            if list.is_empty() {
                return Err(GraphError::IsolatedVertex(v));
            }
        }
        Ok(Graph { n, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nbrs)| {
            nbrs.iter()
                .filter(move |&&w| w > u)
                .map(move |&w| (u, w))
        })
    }

    /// Sum of degrees over `subset`.
    pub fn volume(&self, subset: &VertexSubset) -> usize {
        subset
            .members()
            .iter()
            .map(|&v| {
                assert!(v < self.n, "subset member {v} out of range");
                self.degree(v)
            })
            .sum()
    }

    pub fn total_volume(&self) -> usize {
        2 * self.edge_count()
    }

    /// Number of edges with one endpoint in `s` and the other in `t`.
    ///
    /// The sets must be disjoint.
    pub fn cut_size(&self, s: &VertexSubset, t: &VertexSubset) -> Result<usize, GraphError> {
        if let Some(&v) = s.members().iter().find(|v| t.contains(**v)) {
            return Err(GraphError::OverlappingSets(v));
        }
        let count = s
            .members()
            .iter()
            .map(|&v| {
                assert!(v < self.n, "subset member {v} out of range");
                self.adj[v].iter().filter(|&&w| t.contains(w)).count()
            })
            .sum();
        Ok(count)
    }

    fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut stack = Vec::new();
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = next;
            stack.push(start);
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn component_count(&self) -> usize {
        self.components().iter().copied().max().map_or(0, |m| m + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Two-colorability of the whole graph.
    pub fn is_bipartite(&self) -> bool {
        self.bipartite_components().iter().all(|&b| b)
    }

    /// True if at least one connected component is bipartite. Relevant
    /// because the largest normalized-Laplacian eigenvalue reaches 2 exactly
    /// when such a component exists.
    pub fn has_bipartite_component(&self) -> bool {
        self.bipartite_components().iter().any(|&b| b)
    }

    /// For each component (indexed by discovery order), whether it is
    /// two-colorable.
    fn bipartite_components(&self) -> Vec<bool> {
        let comp = self.components();
        let count = comp.iter().copied().max().map_or(0, |m| m + 1);
        let mut ok = vec![true; count];
        let mut color = vec![u8::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        ok[comp[v]] = false;
                    }
                }
            }
        }
        ok
    }

    /// Size of the common neighborhood of two distinct vertices.
    pub fn common_neighbors(&self, v: usize, w: usize) -> usize {
        assert!(v < self.n && w < self.n, "vertex out of range");
        assert!(v != w, "common_neighbors needs distinct vertices");
        let (a, b) = (&self.adj[v], &self.adj[w]);
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }

    /// Partitions the vertices into classes with identical neighborhoods.
    ///
    /// Two vertices in a class are never adjacent (a shared neighborhood
    /// excludes each other) and always have equal degree; classes are sorted
    /// by smallest member, singletons included.
    pub fn duplicate_classes(&self) -> Vec<Vec<usize>> {
        let mut by_neighborhood: std::collections::BTreeMap<&[usize], Vec<usize>> =
            std::collections::BTreeMap::new();
        for v in 0..self.n {
            by_neighborhood.entry(&self.adj[v]).or_default().push(v);
        }
        let mut classes: Vec<Vec<usize>> = by_neighborhood.into_values().collect();
        classes.sort_by_key(|c| c[0]);
        for class in &classes {
            let deg = self.degree(class[0]);
            for window in class.windows(2) {
                debug_assert_eq!(self.degree(window[1]), deg);
                debug_assert!(!self.has_edge(window[0], window[1]));
            }
        }
        classes
    }
}

/// A set of vertex indices, stored strictly sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSubset {
    members: Vec<usize>,
}

impl VertexSubset {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        VertexSubset { members }
    }

    /// Decodes a bitmask, bit `i` marking vertex `i`.
    pub fn from_mask(mask: u32) -> Self {
        VertexSubset {
            members: (0..32).filter(|i| mask >> i & 1 == 1).collect(),
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    /// All vertices of an `n`-vertex graph that are not in `self`.
    pub fn complement(&self, n: usize) -> VertexSubset {
        VertexSubset {
            members: (0..n).filter(|&v| !self.contains(v)).collect(),
        }
    }
}
