//! Canonical forms and isomorphism-free enumeration of small guests.

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::BTreeSet;

/// A graph together with a canonical encoding: equal encodings iff
/// isomorphic.
#[derive(Clone, Debug)]
pub struct CanonicalGraph {
    /// Sorted component encodings; the full invariant.
    pub key: Vec<Vec<(usize, usize)>>,
    pub graph: Graph,
}

impl PartialEq for CanonicalGraph {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key
    }
}

impl Eq for CanonicalGraph {}

impl PartialOrd for CanonicalGraph {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalGraph {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key.cmp(&other.key)
    }
}

const PERM_LIMIT: usize = 10;

/// Lexicographically least edge list over all relabelings of a connected
/// piece with at most [`PERM_LIMIT`] vertices.
fn min_edge_encoding(n: usize, edges: &[(usize, usize)]) -> Result<Vec<(usize, usize)>> {
    if n > PERM_LIMIT {
        return Err(Error::resource(format!(
            "canonical form by permutation needs at most {PERM_LIMIT} vertices, got {n}"
        )));
    }
    let mut best: Option<Vec<(usize, usize)>> = None;
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let mut relabeled: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        relabeled.sort_unstable();
        if best.as_ref().map_or(true, |b| relabeled < *b) {
            best = Some(relabeled);
        }
        // next_permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    Ok(best.unwrap_or_default())
}

/// Computes the canonical form componentwise: each connected component is
/// minimized over its own relabelings, and the sorted list of component
/// encodings identifies the isomorphism class.
pub fn canonical_form(g: &Graph) -> Result<CanonicalGraph> {
    let mut key: Vec<Vec<(usize, usize)>> = Vec::new();
    for comp in g.components() {
        let local: std::collections::HashMap<usize, usize> =
            comp.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let edges: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .filter(|(u, _)| local.contains_key(u))
            .map(|&(u, v)| (local[&u], local[&v]))
            .collect();
        let mut enc = min_edge_encoding(comp.len(), &edges)?;
        // Tag isolated components (no edges) by an impossible loop marker
        // keyed on size so K1 components still count.
        if enc.is_empty() {
            enc = vec![(comp.len(), comp.len())];
        }
        key.push(enc);
    }
    key.sort();
    Ok(CanonicalGraph { key, graph: g.clone() })
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(a)?.key == canonical_form(b)?.key)
}

/// All isomorphism classes of graphs with `1..=m` edges and no isolated
/// vertices, grown one edge at a time with canonical deduplication.
/// Deterministic order: edge count, then vertex count, then encoding.
pub fn enumerate_guests(m: usize) -> Result<Vec<CanonicalGraph>> {
    if m == 0 {
        return Ok(Vec::new());
    }
    if m > 7 {
        return Err(Error::resource(format!(
            "guest enumeration is desk-scale only: m = {m} exceeds 7"
        )));
    }
    let single = canonical_form(&Graph::new(2, [(0, 1)])?)?;
    let mut levels: Vec<Vec<CanonicalGraph>> = vec![vec![single]];
    for _ in 1..m {
        let mut next: BTreeSet<CanonicalGraph> = BTreeSet::new();
        for parent in levels.last().unwrap() {
            let g = &parent.graph;
            let n = g.vertex_count();
            // New edge inside the existing vertices.
            for u in 0..n {
                for v in u + 1..n {
                    if !g.has_edge(u, v) {
                        let mut edges = g.edges().to_vec();
                        edges.push((u, v));
                        next.insert(canonical_form(&Graph::new(n, edges)?)?);
                    }
                }
            }
            // Pendant edge to one fresh vertex.
            for u in 0..n {
                let mut edges = g.edges().to_vec();
                edges.push((u, n));
                next.insert(canonical_form(&Graph::new(n + 1, edges)?)?);
            }
            // A fresh disjoint edge.
            let mut edges = g.edges().to_vec();
            edges.push((n, n + 1));
            next.insert(canonical_form(&Graph::new(n + 2, edges)?)?);
        }
        levels.push(next.into_iter().collect());
    }
    let mut out: Vec<CanonicalGraph> = levels.into_iter().flatten().collect();
    out.sort_by_key(|c| (c.graph.edge_count(), c.graph.vertex_count(), c.key.clone()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{hypercube, make_family, FamilySpec};

    #[test]
    fn q2_isomorphic_to_c4() {
        let q2 = hypercube(2);
        let c4 = make_family(&FamilySpec::Cycle(4)).unwrap();
        assert!(are_isomorphic(&q2, &c4).unwrap());
    }

    #[test]
    fn triangle_not_isomorphic_to_path() {
        let c3 = make_family(&FamilySpec::Cycle(3)).unwrap();
        let p4 = make_family(&FamilySpec::Path(4)).unwrap();
        assert!(!are_isomorphic(&c3, &p4).unwrap());
    }

    #[test]
    fn relabeled_graphs_share_canonical_form() {
        use rand::seq::SliceRandom;
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let n = rng.gen_range(2..=7);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, edges.iter().copied()).unwrap();
            let mut relabel: Vec<usize> = (0..n).collect();
            relabel.shuffle(&mut rng);
            let h = Graph::new(n, edges.iter().map(|&(u, v)| (relabel[u], relabel[v]))).unwrap();
            assert!(are_isomorphic(&g, &h).unwrap());
        }
    }

    #[test]
    fn enumeration_counts_match_hand_counts() {
        // Exactly one 1-edge class; two 2-edge classes (path, two disjoint
        // edges); five 3-edge classes (triangle, 4-path, 3-star,
        // path plus edge, three disjoint edges).
        let guests = enumerate_guests(3).unwrap();
        let count_with = |m: usize| guests.iter().filter(|g| g.graph.edge_count() == m).count();
        assert_eq!(count_with(1), 1);
        assert_eq!(count_with(2), 2);
        assert_eq!(count_with(3), 5);
        assert_eq!(guests.len(), 8);
    }

    #[test]
    fn enumeration_is_stable() {
        let a = enumerate_guests(4).unwrap();
        let b = enumerate_guests(4).unwrap();
        assert_eq!(a.len(), b.len());
        assert!(a.iter().zip(&b).all(|(x, y)| x.key == y.key));
        // No two classes share a key.
        let keys: BTreeSet<_> = a.iter().map(|c| c.key.clone()).collect();
        assert_eq!(keys.len(), a.len());
    }

    #[test]
    fn no_isolated_vertices_in_enumeration() {
        for c in enumerate_guests(4).unwrap() {
            assert!(!c.graph.has_isolated_vertex());
        }
    }

    #[test]
    fn too_large_m_is_a_resource_error() {
        assert!(matches!(enumerate_guests(8), Err(Error::Resource(_))));
    }
}
