//! Finite simple graphs with 0-based integer vertices.
//!
//! `Graph` is the substrate everything else builds on: hosts, guests,
//! factors of product hosts. Values are immutable after construction and
//! safe to share across threads.

mod coloring;
mod product;
mod transform;
mod walk;

pub use coloring::vizing_edge_color;
pub use product::{cartesian_product, ProductGraph};
pub use transform::{degree_reduce, simple_subdivision, DegreeReduction, Subdivision};
pub use walk::Walk;

use crate::error::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;

/// A finite simple graph: no self-loops, no multi-edges, vertices `0..vertex_count`.
#[derive(Clone, Eq)]
pub struct Graph {
    vertex_count: usize,
    /// Sorted, deduplicated, each stored with `u < v`.
    edges: Vec<(usize, usize)>,
    /// Sorted neighbor lists, derived from `edges`.
    adj: Vec<Vec<usize>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count && self.edges == other.edges
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.vertex_count, self.edges.len())
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {u}")));
            }
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::invalid(format!(
                    "edge ({u}, {v}) exceeds vertex count {vertex_count}"
                )));
            }
            set.insert((u.min(v), u.max(v)));
        }
        let edges: Vec<_> = set.into_iter().collect();
        let mut adj = vec![Vec::new(); vertex_count];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { vertex_count, edges, adj })
    }

    pub fn empty(vertex_count: usize) -> Self {
        Graph { vertex_count, edges: Vec::new(), adj: vec![Vec::new(); vertex_count] }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges sorted ascending, each as `(u, v)` with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.vertex_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u < self.vertex_count && v < self.vertex_count && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(Vec::is_empty)
    }

    /// Index of an edge in the sorted edge list.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    /// Breadth-first shortest walk from `u` to `v`, expanding neighbors in
    /// ascending label order so ties break deterministically.
    pub fn bfs_path(&self, u: usize, v: usize) -> Result<Walk> {
        if u >= self.vertex_count || v >= self.vertex_count {
            return Err(Error::usage(format!("bfs endpoints ({u}, {v}) out of range")));
        }
        if u == v {
            return Ok(Walk::single(u));
        }
        let mut parent = vec![usize::MAX; self.vertex_count];
        parent[u] = u;
        let mut queue = std::collections::VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    if y == v {
                        let mut path = vec![v];
                        let mut cur = v;
                        while cur != u {
                            cur = parent[cur];
                            path.push(cur);
                        }
                        path.reverse();
                        return Walk::new(path);
                    }
                    queue.push_back(y);
                }
            }
        }
        Err(Error::invalid(format!("vertices {u} and {v} are in different components")))
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &y in &self.adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == self.vertex_count
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.vertex_count];
        let mut out = Vec::new();
        for start in 0..self.vertex_count {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Drops vertices of degree zero and relabels the rest, preserving order.
    /// Returns the stripped graph and the old-to-new label map.
    pub fn strip_isolated(&self) -> (Graph, Vec<Option<usize>>) {
        let mut relabel = vec![None; self.vertex_count];
        let mut next = 0;
        for v in 0..self.vertex_count {
            if !self.adj[v].is_empty() {
                relabel[v] = Some(next);
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| (relabel[u].unwrap(), relabel[v].unwrap()));
        (Graph::new(next, edges).expect("relabeling preserves validity"), relabel)
    }
}

/// Named graph families plus free-form edge lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Cycle(usize),
    Path(usize),
    Complete(usize),
    Hypercube(usize),
    Custom { vertex_count: usize, edges: Vec<(usize, usize)> },
}

/// Constructs a named family with canonical vertex labels.
///
/// Hypercube vertices are d-bit strings read as integers, with adjacency at
/// Hamming distance one.
pub fn make_family(spec: &FamilySpec) -> Result<Graph> {
    match spec {
        FamilySpec::Cycle(n) => {
            if *n < 3 {
                return Err(Error::usage(format!("cycle needs at least 3 vertices, got {n}")));
            }
            Graph::new(*n, (0..*n).map(|i| (i, (i + 1) % n)))
        }
        FamilySpec::Path(n) => {
            if *n < 1 {
                return Err(Error::usage("path needs at least 1 vertex".to_string()));
            }
            Graph::new(*n, (1..*n).map(|i| (i - 1, i)))
        }
        FamilySpec::Complete(n) => {
            if *n < 1 {
                return Err(Error::usage("complete graph needs at least 1 vertex".to_string()));
            }
            Graph::new(*n, (0..*n).flat_map(|u| (u + 1..*n).map(move |v| (u, v))))
        }
        FamilySpec::Hypercube(d) => {
            if *d >= usize::BITS as usize {
                return Err(Error::usage(format!("hypercube dimension {d} too large")));
            }
            let n = 1usize << d;
            Graph::new(n, (0..n).flat_map(|u| (0..*d).map(move |b| (u, u ^ (1 << b))).filter(|&(u, v)| u < v)))
        }
        FamilySpec::Custom { vertex_count, edges } => Graph::new(*vertex_count, edges.iter().copied()),
    }
}

/// `hypercube(d)` shorthand; used pervasively by the pipeline.
pub fn hypercube(d: usize) -> Graph {
    make_family(&FamilySpec::Hypercube(d)).expect("hypercube dimension in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_counts() {
        let q2 = make_family(&FamilySpec::Hypercube(2)).unwrap();
        assert_eq!(q2.vertex_count(), 4);
        assert_eq!(q2.edge_count(), 4);

        let k4 = make_family(&FamilySpec::Complete(4)).unwrap();
        assert_eq!(k4.vertex_count(), 4);
        assert_eq!(k4.edge_count(), 6);

        let c22 = make_family(&FamilySpec::Cycle(22)).unwrap();
        assert_eq!(c22.vertex_count(), 22);
        assert_eq!(c22.edge_count(), 22);
        assert!(c22.vertices().all(|v| c22.degree(v) == 2));
    }

    #[test]
    fn q2_is_a_four_cycle() {
        let q2 = hypercube(2);
        // 00-01-11-10-00
        assert!(q2.has_edge(0, 1));
        assert!(q2.has_edge(1, 3));
        assert!(q2.has_edge(3, 2));
        assert!(q2.has_edge(2, 0));
        assert!(!q2.has_edge(0, 3));
        assert!(!q2.has_edge(1, 2));
    }

    #[test]
    fn rejects_malformed_descriptors() {
        assert!(make_family(&FamilySpec::Cycle(2)).is_err());
        assert!(make_family(&FamilySpec::Path(0)).is_err());
        assert!(Graph::new(3, [(0, 0)]).is_err());
        assert!(Graph::new(3, [(0, 5)]).is_err());
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(3, [(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn bfs_deterministic_tie_break() {
        let c6 = make_family(&FamilySpec::Cycle(6)).unwrap();
        let w = c6.bfs_path(0, 3).unwrap();
        assert_eq!(w.vertices(), &[0, 1, 2, 3]);

        let q3 = hypercube(3);
        // From 000 to 111 the lowest-index bit flips first at every step.
        let w = q3.bfs_path(0, 7).unwrap();
        assert_eq!(w.vertices(), &[0, 1, 3, 7]);

        let trivial = q3.bfs_path(5, 5).unwrap();
        assert_eq!(trivial.vertices(), &[5]);
    }

    #[test]
    fn bfs_disconnected_errors() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(g.bfs_path(0, 3).is_err());
    }

    #[test]
    fn strip_isolated_relabels() {
        let g = Graph::new(5, [(1, 3), (3, 4)]).unwrap();
        let (s, relabel) = g.strip_isolated();
        assert_eq!(s.vertex_count(), 3);
        assert_eq!(s.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(relabel[0], None);
        assert_eq!(relabel[1], Some(0));
    }
}
