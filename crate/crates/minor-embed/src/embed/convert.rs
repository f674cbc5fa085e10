//! Conversions between minor models and combinatorial embeddings.

use super::verify::{verify_embedding, verify_model};
use super::{CombinatorialEmbedding, MinorModel};
use crate::error::{Error, Result};
use crate::graph::{Graph, Subdivision, Walk};
use std::collections::{BTreeSet, HashMap, HashSet};

/// Shortest path between two members of `set` using only vertices of `set`,
/// ties broken by ascending label.
fn path_within(host: &Graph, set: &[usize], from: usize, to: usize) -> Result<Walk> {
    if from == to {
        return Ok(Walk::single(from));
    }
    let members: HashSet<usize> = set.iter().copied().collect();
    let mut parent: HashMap<usize, usize> = HashMap::new();
    parent.insert(from, from);
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        for &y in host.neighbors(x) {
            if members.contains(&y) && !parent.contains_key(&y) {
                parent.insert(y, x);
                if y == to {
                    let mut path = vec![to];
                    let mut cur = to;
                    while cur != from {
                        cur = parent[&cur];
                        path.push(cur);
                    }
                    path.reverse();
                    return Walk::new(path);
                }
                queue.push_back(y);
            }
        }
    }
    Err(Error::invalid(format!("no path from {from} to {to} within the branch set")))
}

/// Turns a valid minor model into a combinatorial embedding: each vertex
/// maps to the least member of its branch set; each road runs inside the
/// two branch sets and crosses a single witness edge between them.
pub fn model_to_embedding(m: &MinorModel) -> Result<CombinatorialEmbedding> {
    let report = verify_model(m);
    if !report.is_valid() {
        return Err(Error::Verification(format!("input model is invalid: {report}")));
    }
    let vertex_map: Vec<usize> = (0..m.guest.vertex_count())
        .map(|v| m.representative(v).expect("valid model has non-empty sets"))
        .collect();

    let mut owner: HashMap<usize, usize> = HashMap::new();
    for (v, set) in m.branch_sets.iter().enumerate() {
        for &x in set {
            owner.insert(x, v);
        }
    }

    let mut roads = Vec::with_capacity(m.guest.edge_count());
    for &(u, v) in m.guest.edges() {
        // Least witness edge in (a, b) order.
        let mut witness: Option<(usize, usize)> = None;
        for &a in &m.branch_sets[u] {
            for &b in m.host.neighbors(a) {
                if owner.get(&b) == Some(&v) {
                    witness = Some(match witness {
                        Some(w) if w <= (a, b) => w,
                        _ => (a, b),
                    });
                }
            }
        }
        let (a, b) = witness.expect("valid model witnesses every guest edge");
        let to_a = path_within(&m.host, &m.branch_sets[u], vertex_map[u], a)?;
        let from_b = path_within(&m.host, &m.branch_sets[v], b, vertex_map[v])?;
        roads.push(to_a.concat(&Walk::new(vec![a, b])?)?.concat(&from_b)?);
    }
    let out = CombinatorialEmbedding::new(m.guest.clone(), m.host.clone(), vertex_map, roads)?;
    debug_assert!(verify_embedding(&out).is_valid());
    Ok(out)
}

/// Intermediate sets of the subdivision-to-model construction, exposed so
/// the separation property between stars and crossing segments can be
/// checked mechanically.
#[derive(Clone, Debug)]
pub struct ConversionAudit {
    /// Star set per original vertex: union of its end-edge roads.
    pub stars: Vec<BTreeSet<usize>>,
    /// Per original edge `(u, v)`: the crossing vertex kept on `u`'s side
    /// and the segment handed to `v`.
    pub segments: Vec<SegmentSplit>,
}

#[derive(Clone, Debug)]
pub struct SegmentSplit {
    pub edge: (usize, usize),
    /// `R_{u,v}`: single vertex on the `u` side (already inside `u`'s star).
    pub kept: usize,
    /// `R_{v,u}`: the tail of the minimal crossing segment, ending in `v`'s star.
    pub handed: Vec<usize>,
}

/// Builds a minor model of `original` from a combinatorial embedding of its
/// simple subdivision.
///
/// Each vertex collects its star (the roads of its end edges, all of which
/// contain its image); each middle road is cut at its minimal segment that
/// leaves one star and enters the other without touching either in between.
pub fn subdivision_embedding_to_model(
    embedding: &CombinatorialEmbedding,
    subdivision: &Subdivision,
    original: &Graph,
) -> Result<(MinorModel, ConversionAudit)> {
    if embedding.guest != subdivision.graph {
        return Err(Error::invalid("embedding guest is not the given subdivision"));
    }
    if subdivision.original_count != original.vertex_count()
        || subdivision.halves.len() != original.edge_count()
    {
        return Err(Error::invalid("subdivision does not match the original graph"));
    }
    if original.has_isolated_vertex() {
        return Err(Error::invalid("original graph must have no isolated vertices"));
    }
    let report = verify_embedding(embedding);
    if !report.is_valid() {
        return Err(Error::Verification(format!("input embedding is invalid: {report}")));
    }

    let mut stars: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); original.vertex_count()];
    for (idx, &(u, v)) in original.edges().iter().enumerate() {
        let (a, b) = subdivision.halves[idx];
        for (owner_vertex, half) in [(u, a), (v, b)] {
            let road = embedding
                .road(owner_vertex, half)
                .ok_or_else(|| Error::invalid("subdivision end edge missing from embedding"))?;
            stars[owner_vertex].extend(road.vertices());
        }
    }

    let mut extra: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); original.vertex_count()];
    let mut segments = Vec::with_capacity(original.edge_count());
    for (idx, &(u, v)) in original.edges().iter().enumerate() {
        let (a, b) = subdivision.halves[idx];
        let road = embedding
            .road(a, b)
            .ok_or_else(|| Error::invalid("subdivision middle edge missing from embedding"))?;
        let verts = road.vertices();
        // First entry into v's star, then the last exit from u's star before it.
        let j = verts
            .iter()
            .position(|x| stars[v].contains(x))
            .ok_or_else(|| Error::invalid("middle road never reaches the far star"))?;
        let i = verts[..j]
            .iter()
            .rposition(|x| stars[u].contains(x))
            .ok_or_else(|| Error::invalid("middle road does not start in the near star"))?;
        let handed: Vec<usize> = verts[i + 1..=j].to_vec();
        extra[v].extend(handed.iter().copied());
        segments.push(SegmentSplit { edge: (u, v), kept: verts[i], handed });
    }

    let branch_sets: Vec<Vec<usize>> = (0..original.vertex_count())
        .map(|v| stars[v].union(&extra[v]).copied().collect())
        .collect();
    let model = MinorModel::new(original.clone(), embedding.host.clone(), branch_sets)?;
    Ok((model, ConversionAudit { stars, segments }))
}

impl ConversionAudit {
    /// The separation property: the kept crossing vertex avoids the far
    /// star and the handed segment avoids the near star.
    pub fn separation_holds(&self) -> bool {
        self.segments.iter().all(|s| {
            let (u, v) = s.edge;
            !self.stars[v].contains(&s.kept)
                && s.handed[..s.handed.len() - 1]
                    .iter()
                    .all(|x| !self.stars[u].contains(x) && !self.stars[v].contains(x))
                && !self.stars[u].contains(s.handed.last().expect("segment non-empty"))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, simple_subdivision, FamilySpec};

    #[test]
    fn identity_model_roads_are_host_edges() {
        let g = make_family(&FamilySpec::Cycle(4)).unwrap();
        let e = model_to_embedding(&MinorModel::identity(&g)).unwrap();
        assert!(verify_embedding(&e).is_valid());
        for (idx, &(u, v)) in g.edges().iter().enumerate() {
            assert_eq!(e.roads[idx].vertices(), &[u, v]);
        }
    }

    #[test]
    fn c4_in_q3_model_to_embedding() {
        let guest = make_family(&FamilySpec::Cycle(4)).unwrap();
        let host = make_family(&FamilySpec::Hypercube(3)).unwrap();
        let m = MinorModel::new(guest, host, vec![vec![0, 1], vec![3], vec![7, 6], vec![4]]).unwrap();
        let e = model_to_embedding(&m).unwrap();
        assert!(verify_embedding(&e).is_valid());
        assert!(e.roads.iter().all(|r| r.len() <= 3));
    }

    #[test]
    fn invalid_model_is_rejected() {
        let guest = make_family(&FamilySpec::Cycle(3)).unwrap();
        let host = make_family(&FamilySpec::Path(4)).unwrap();
        let m = MinorModel::new(guest, host, vec![vec![0, 3], vec![1], vec![2]]).unwrap();
        assert!(model_to_embedding(&m).is_err());
    }

    #[test]
    fn single_edge_subdivision_to_model() {
        let original = Graph::new(2, [(0, 1)]).unwrap();
        let sub = simple_subdivision(&original);
        // Map the 4-path subdivision 0-2-3-1 onto a host 4-path.
        let host = make_family(&FamilySpec::Path(4)).unwrap();
        let e = CombinatorialEmbedding::new(
            sub.graph.clone(),
            host,
            vec![0, 3, 1, 2],
            // Sorted guest edges: (0,2), (1,3), (2,3).
            vec![
                Walk::new(vec![0, 1]).unwrap(),
                Walk::new(vec![3, 2]).unwrap(),
                Walk::new(vec![1, 2]).unwrap(),
            ],
        )
        .unwrap();
        assert!(verify_embedding(&e).is_valid());
        let (model, audit) = subdivision_embedding_to_model(&e, &sub, &original).unwrap();
        assert!(verify_model(&model).is_valid());
        assert!(audit.separation_holds());
        assert_eq!(model.branch_sets, vec![vec![0, 1], vec![2, 3]]);
    }
}
