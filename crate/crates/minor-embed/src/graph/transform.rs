//! Structure-changing constructions: simple subdivision and degree reduction.

use super::Graph;
use crate::error::{Error, Result};

/// Result of [`simple_subdivision`]: the subdivided graph plus provenance.
///
/// Original vertices keep their labels `0..original_count`. Each edge
/// `(u, v)` of the input (in sorted edge order) contributes two new
/// vertices: one owned by `u`, one owned by `v`, joined in a 3-edge path
/// `u - (u,v) - (v,u) - v`.
#[derive(Clone, Debug)]
pub struct Subdivision {
    pub graph: Graph,
    pub original_count: usize,
    /// Per input edge index: `(half owned by u, half owned by v)` with `u < v`.
    pub halves: Vec<(usize, usize)>,
    /// Per new vertex (indexed from `original_count`): `(owner, partner)`.
    pub provenance: Vec<(usize, usize)>,
}

impl Subdivision {
    /// Owner/partner pair for a subdivision vertex, `None` for originals.
    pub fn provenance_of(&self, v: usize) -> Option<(usize, usize)> {
        v.checked_sub(self.original_count).map(|i| self.provenance[i])
    }
}

/// Replaces every edge `uv` by the path `u - (u,v) - (v,u) - v`.
///
/// The output has `|V| + 2|E|` vertices and `3|E|` edges.
pub fn simple_subdivision(g: &Graph) -> Subdivision {
    let n = g.vertex_count();
    let mut edges = Vec::with_capacity(3 * g.edge_count());
    let mut halves = Vec::with_capacity(g.edge_count());
    let mut provenance = Vec::with_capacity(2 * g.edge_count());
    for (idx, &(u, v)) in g.edges().iter().enumerate() {
        let a = n + 2 * idx; // owned by u
        let b = n + 2 * idx + 1; // owned by v
        edges.push((u, a));
        edges.push((a, b));
        edges.push((b, v));
        halves.push((a, b));
        provenance.push((u, v));
        provenance.push((v, u));
    }
    let graph = Graph::new(n + 2 * g.edge_count(), edges).expect("subdivision edges are valid");
    Subdivision { graph, original_count: n, halves, provenance }
}

/// Result of [`degree_reduce`]: a graph of maximum degree at most 3 that
/// contracts back to the input.
#[derive(Clone, Debug)]
pub struct DegreeReduction {
    pub graph: Graph,
    /// Per input vertex: the sorted vertex set of its tree in the output.
    pub contraction: Vec<Vec<usize>>,
    /// `leaf[v][j]` hosts the edge toward the j-th neighbor of `v` (ascending).
    pub leaf: Vec<Vec<usize>>,
}

impl DegreeReduction {
    /// Contracts every tree back to a single vertex with the original label.
    pub fn contract_back(&self) -> Graph {
        let mut owner = vec![usize::MAX; self.graph.vertex_count()];
        for (v, set) in self.contraction.iter().enumerate() {
            for &t in set {
                owner[t] = v;
            }
        }
        let edges = self
            .graph
            .edges()
            .iter()
            .filter(|&&(a, b)| owner[a] != owner[b])
            .map(|&(a, b)| (owner[a], owner[b]));
        Graph::new(self.contraction.len(), edges).expect("contraction preserves validity")
    }
}

/// Replaces each vertex `v` by a balanced binary tree with `deg(v)` leaves
/// (at most `2 deg(v) - 1` vertices), wiring each original edge between the
/// corresponding leaves. Leaves are ordered by neighbor label, so the
/// construction is deterministic.
pub fn degree_reduce(g: &Graph) -> Result<DegreeReduction> {
    if g.has_isolated_vertex() {
        return Err(Error::invalid("degree reduction requires no isolated vertices"));
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut contraction = Vec::with_capacity(g.vertex_count());
    let mut leaf = Vec::with_capacity(g.vertex_count());
    let mut next = 0usize;
    for v in g.vertices() {
        let deg = g.degree(v);
        let block_start = next;
        let mut leaves = vec![0usize; deg];
        if deg == 1 {
            leaves[0] = next;
            next += 1;
        } else {
            // Build a balanced tree over leaf slots [0, deg). Each recursive
            // call allocates its root, then its children left to right.
            fn build(
                lo: usize,
                hi: usize,
                next: &mut usize,
                edges: &mut Vec<(usize, usize)>,
                leaves: &mut [usize],
            ) -> usize {
                let id = *next;
                *next += 1;
                if hi - lo == 1 {
                    leaves[lo] = id;
                    return id;
                }
                let mid = lo + (hi - lo + 1) / 2;
                let l = build(lo, mid, next, edges, leaves);
                edges.push((id, l));
                let r = build(mid, hi, next, edges, leaves);
                edges.push((id, r));
                id
            }
            build(0, deg, &mut next, &mut edges, &mut leaves);
        }
        contraction.push((block_start..next).collect());
        leaf.push(leaves);
    }
    for &(u, v) in g.edges() {
        let ju = g.neighbors(u).binary_search(&v).expect("neighbor present");
        let jv = g.neighbors(v).binary_search(&u).expect("neighbor present");
        edges.push((leaf[u][ju], leaf[v][jv]));
    }
    let graph = Graph::new(next, edges)?;
    debug_assert!(graph.max_degree() <= 3);
    Ok(DegreeReduction { graph, contraction, leaf })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, FamilySpec};

    fn triangle() -> Graph {
        make_family(&FamilySpec::Cycle(3)).unwrap()
    }

    #[test]
    fn subdivision_of_single_edge_is_p4() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        let s = simple_subdivision(&g);
        assert_eq!(s.graph.vertex_count(), 4);
        assert_eq!(s.graph.edge_count(), 3);
        assert!(s.graph.is_connected());
        assert_eq!(s.graph.max_degree(), 2);
        assert_eq!(s.provenance_of(2), Some((0, 1)));
        assert_eq!(s.provenance_of(3), Some((1, 0)));
        assert_eq!(s.provenance_of(1), None);
    }

    #[test]
    fn subdivision_of_triangle_is_nine_cycle() {
        let s = simple_subdivision(&triangle());
        assert_eq!(s.graph.vertex_count(), 9);
        assert_eq!(s.graph.edge_count(), 9);
        assert!(s.graph.is_connected());
        assert!(s.graph.vertices().all(|v| s.graph.degree(v) == 2));
    }

    #[test]
    fn subdivision_of_empty_graph() {
        let g = Graph::empty(3);
        let s = simple_subdivision(&g);
        assert_eq!(s.graph.vertex_count(), 3);
        assert_eq!(s.graph.edge_count(), 0);
    }

    #[test]
    fn subdivision_contracts_back() {
        // Collapsing both halves of each subdivided edge into the lesser
        // endpoint must reproduce the input graph exactly.
        for g in [
            triangle(),
            make_family(&FamilySpec::Complete(4)).unwrap(),
            make_family(&FamilySpec::Hypercube(3)).unwrap(),
        ] {
            let s = simple_subdivision(&g);
            let mut owner: Vec<usize> = (0..g.vertex_count()).collect();
            for (idx, &(a, b)) in s.halves.iter().enumerate() {
                let (u, _v) = g.edges()[idx];
                owner.push(0);
                owner.push(0);
                owner[a] = u;
                owner[b] = u;
            }
            let quotient = Graph::new(
                g.vertex_count(),
                s.graph
                    .edges()
                    .iter()
                    .map(|&(x, y)| (owner[x], owner[y]))
                    .filter(|&(x, y)| x != y),
            )
            .unwrap();
            assert_eq!(quotient, g);
        }
    }

    #[test]
    fn degree_reduce_single_edge_unchanged() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        let r = degree_reduce(&g).unwrap();
        assert_eq!(r.graph.vertex_count(), 2);
        assert_eq!(r.graph.edge_count(), 1);
        assert_eq!(r.contract_back(), g);
    }

    #[test]
    fn degree_reduce_star() {
        let star = Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let r = degree_reduce(&star).unwrap();
        assert!(r.graph.max_degree() <= 3);
        assert_eq!(r.contraction[0].len(), 7);
        assert!(r.graph.vertex_count() <= 16);
        assert_eq!(r.contract_back(), star);
    }

    #[test]
    fn degree_reduce_triangle() {
        let r = degree_reduce(&triangle()).unwrap();
        assert_eq!(r.graph.vertex_count(), 9);
        assert!(r.graph.max_degree() <= 3);
        assert_eq!(r.contract_back(), triangle());
    }

    #[test]
    fn degree_reduce_rejects_isolated() {
        let g = Graph::new(3, [(0, 1)]).unwrap();
        assert!(degree_reduce(&g).is_err());
    }

    #[test]
    fn degree_reduce_size_bound() {
        let k5 = make_family(&FamilySpec::Complete(5)).unwrap();
        let r = degree_reduce(&k5).unwrap();
        assert!(r.graph.vertex_count() <= 4 * k5.edge_count());
        assert!(r.graph.max_degree() <= 3);
        assert_eq!(r.contract_back(), k5);
    }
}
