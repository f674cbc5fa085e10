//! Independent verifiers for embeddings and models.
//!
//! These share no code with the constructions they check: they work purely
//! from the stored vertex maps, roads and branch sets against the host's
//! adjacency. Violations are collected with witnesses, not raised as errors.

use super::{CombinatorialEmbedding, MinorModel, PiecewiseEmbedding};
use crate::graph::{Graph, Walk};
use std::collections::HashMap;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    VertexImageOutOfRange { guest: usize, image: usize },
    NonInjectiveVertexMap { u: usize, v: usize, image: usize },
    RoadEndpointMismatch { edge: (usize, usize), expected: (usize, usize), got: (usize, usize) },
    NotAWalk { edge: (usize, usize), position: usize, from: usize, to: usize },
    RoadsIntersect { e1: (usize, usize), e2: (usize, usize), at: usize },
    VertexOnRoad { vertex: usize, edge: (usize, usize), at: usize },
    PieceJunctionMismatch { edge: (usize, usize), piece: usize, from: usize, to: usize },
    PiecesIntersect { index: usize, e1: (usize, usize), e2: (usize, usize), at: usize },
    EmptyBranchSet { vertex: usize },
    BranchVertexOutOfRange { vertex: usize, host_vertex: usize },
    BranchSetsOverlap { u: usize, v: usize, at: usize },
    BranchSetDisconnected { vertex: usize },
    MissingEdgeWitness { edge: (usize, usize) },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::VertexImageOutOfRange { guest, image } => {
                write!(f, "image {image} of vertex {guest} is not a host vertex")
            }
            Violation::NonInjectiveVertexMap { u, v, image } => {
                write!(f, "vertices {u} and {v} share the image {image}")
            }
            Violation::RoadEndpointMismatch { edge, expected, got } => write!(
                f,
                "road of edge {edge:?} runs {got:?}, expected {expected:?}"
            ),
            Violation::NotAWalk { edge, position, from, to } => write!(
                f,
                "road of edge {edge:?} jumps {from} -> {to} at step {position}: not a host edge"
            ),
            Violation::RoadsIntersect { e1, e2, at } => write!(
                f,
                "roads of non-adjacent edges {e1:?} and {e2:?} meet at host vertex {at}"
            ),
            Violation::VertexOnRoad { vertex, edge, at } => write!(
                f,
                "image {at} of vertex {vertex} lies on the road of edge {edge:?}"
            ),
            Violation::PieceJunctionMismatch { edge, piece, from, to } => write!(
                f,
                "pieces {piece} and {} of edge {edge:?} do not chain: {from} vs {to}",
                piece + 1
            ),
            Violation::PiecesIntersect { index, e1, e2, at } => write!(
                f,
                "piece {index} of edges {e1:?} and {e2:?} meet at host vertex {at}"
            ),
            Violation::EmptyBranchSet { vertex } => {
                write!(f, "branch set of vertex {vertex} is empty")
            }
            Violation::BranchVertexOutOfRange { vertex, host_vertex } => {
                write!(f, "branch set of vertex {vertex} contains non-host vertex {host_vertex}")
            }
            Violation::BranchSetsOverlap { u, v, at } => {
                write!(f, "branch sets of {u} and {v} overlap at host vertex {at}")
            }
            Violation::BranchSetDisconnected { vertex } => {
                write!(f, "branch set of vertex {vertex} induces a disconnected subgraph")
            }
            Violation::MissingEdgeWitness { edge } => {
                write!(f, "no host edge joins the branch sets of guest edge {edge:?}")
            }
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct ValidityReport {
    pub violations: Vec<Violation>,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            writeln!(f, "VALID")
        } else {
            writeln!(f, "INVALID ({} violations)", self.violations.len())?;
            for v in &self.violations {
                writeln!(f, "  - {v}")?;
            }
            Ok(())
        }
    }
}

fn check_vertex_map(
    host: &Graph,
    vertex_map: &[usize],
    report: &mut ValidityReport,
) -> HashMap<usize, usize> {
    let mut image_of: HashMap<usize, usize> = HashMap::new();
    for (v, &img) in vertex_map.iter().enumerate() {
        if img >= host.vertex_count() {
            report.violations.push(Violation::VertexImageOutOfRange { guest: v, image: img });
            continue;
        }
        if let Some(&u) = image_of.get(&img) {
            report.violations.push(Violation::NonInjectiveVertexMap { u, v, image: img });
        } else {
            image_of.insert(img, v);
        }
    }
    image_of
}

fn check_walk(host: &Graph, edge: (usize, usize), walk: &Walk, report: &mut ValidityReport) {
    for (pos, w) in walk.vertices().windows(2).enumerate() {
        if !host.has_edge(w[0], w[1]) {
            report.violations.push(Violation::NotAWalk { edge, position: pos, from: w[0], to: w[1] });
        }
    }
}

/// Checks all conditions of a combinatorial embedding: injectivity, road
/// endpoints, walk adjacency, disjointness of roads of non-adjacent edges,
/// and isolation of vertex images from foreign roads.
pub fn verify_embedding(e: &CombinatorialEmbedding) -> ValidityReport {
    let mut report = ValidityReport::default();
    if e.vertex_map.len() != e.guest.vertex_count() || e.roads.len() != e.guest.edge_count() {
        report.violations.push(Violation::RoadEndpointMismatch {
            edge: (0, 0),
            expected: (e.guest.vertex_count(), e.guest.edge_count()),
            got: (e.vertex_map.len(), e.roads.len()),
        });
        return report;
    }
    let image_of = check_vertex_map(&e.host, &e.vertex_map, &mut report);

    for (idx, &(u, v)) in e.guest.edges().iter().enumerate() {
        let road = &e.roads[idx];
        let expected = (e.vertex_map[u], e.vertex_map[v]);
        let got = (road.first(), road.last());
        // Roads may run in either direction between the endpoint images.
        if got != expected && got != (expected.1, expected.0) {
            report.violations.push(Violation::RoadEndpointMismatch { edge: (u, v), expected, got });
        }
        check_walk(&e.host, (u, v), road, &mut report);
    }

    // Occupancy index: which edges' roads pass through each host vertex.
    let mut occupancy: HashMap<usize, Vec<usize>> = HashMap::new();
    for (idx, road) in e.roads.iter().enumerate() {
        let mut seen_here = std::collections::HashSet::new();
        for &x in road.vertices() {
            if seen_here.insert(x) {
                occupancy.entry(x).or_default().push(idx);
            }
        }
    }
    let mut flagged = std::collections::HashSet::new();
    let mut occupied: Vec<(&usize, &Vec<usize>)> = occupancy.iter().collect();
    occupied.sort();
    for (&x, idxs) in occupied {
        for a in 0..idxs.len() {
            for b in a + 1..idxs.len() {
                let (ia, ib) = (idxs[a], idxs[b]);
                let (u1, v1) = e.guest.edges()[ia];
                let (u2, v2) = e.guest.edges()[ib];
                let adjacent = u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2;
                if !adjacent && flagged.insert((ia, ib)) {
                    report
                        .violations
                        .push(Violation::RoadsIntersect { e1: (u1, v1), e2: (u2, v2), at: x });
                }
            }
        }
        // Vertex isolation: the image of a vertex outside the edge must not
        // lie on its road.
        if let Some(&w) = image_of.get(&x) {
            for &idx in idxs {
                let (u, v) = e.guest.edges()[idx];
                if w != u && w != v {
                    report.violations.push(Violation::VertexOnRoad { vertex: w, edge: (u, v), at: x });
                }
            }
        }
    }
    report
}

/// Checks a piecewise embedding: piece chaining per edge, endpoint images,
/// walk adjacency, and per-index disjointness for non-adjacent edges.
pub fn verify_piecewise(p: &PiecewiseEmbedding) -> ValidityReport {
    let mut report = ValidityReport::default();
    check_vertex_map(&p.host, &p.vertex_map, &mut report);
    if p.pieces.len() != p.guest.edge_count() {
        report.violations.push(Violation::RoadEndpointMismatch {
            edge: (0, 0),
            expected: (p.guest.edge_count(), p.piece_count),
            got: (p.pieces.len(), 0),
        });
        return report;
    }
    for (idx, &(u, v)) in p.guest.edges().iter().enumerate() {
        let pieces = &p.pieces[idx];
        if pieces.len() != p.piece_count {
            report.violations.push(Violation::PieceJunctionMismatch {
                edge: (u, v),
                piece: pieces.len(),
                from: p.piece_count,
                to: pieces.len(),
            });
            continue;
        }
        for (i, pair) in pieces.windows(2).enumerate() {
            if pair[0].last() != pair[1].first() {
                report.violations.push(Violation::PieceJunctionMismatch {
                    edge: (u, v),
                    piece: i,
                    from: pair[0].last(),
                    to: pair[1].first(),
                });
            }
        }
        let got = (
            pieces.first().map(Walk::first).unwrap_or(usize::MAX),
            pieces.last().map(Walk::last).unwrap_or(usize::MAX),
        );
        let expected = (p.vertex_map[u], p.vertex_map[v]);
        if got != expected && got != (expected.1, expected.0) {
            report.violations.push(Violation::RoadEndpointMismatch { edge: (u, v), expected, got });
        }
        for piece in pieces {
            check_walk(&p.host, (u, v), piece, &mut report);
        }
    }
    for i in 0..p.piece_count {
        let mut occupancy: HashMap<usize, Vec<usize>> = HashMap::new();
        for (idx, pieces) in p.pieces.iter().enumerate() {
            if let Some(piece) = pieces.get(i) {
                let mut seen_here = std::collections::HashSet::new();
                for &x in piece.vertices() {
                    if seen_here.insert(x) {
                        occupancy.entry(x).or_default().push(idx);
                    }
                }
            }
        }
        let mut occupied: Vec<(&usize, &Vec<usize>)> = occupancy.iter().collect();
        occupied.sort();
        for (&x, idxs) in occupied {
            for a in 0..idxs.len() {
                for b in a + 1..idxs.len() {
                    let (u1, v1) = p.guest.edges()[idxs[a]];
                    let (u2, v2) = p.guest.edges()[idxs[b]];
                    let adjacent = u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2;
                    if !adjacent {
                        report.violations.push(Violation::PiecesIntersect {
                            index: i,
                            e1: (u1, v1),
                            e2: (u2, v2),
                            at: x,
                        });
                    }
                }
            }
        }
    }
    report
}

/// Checks a minor model: branch sets non-empty, in range, pairwise
/// disjoint, connected in the induced subgraph, with a host edge witnessing
/// every guest edge.
pub fn verify_model(m: &MinorModel) -> ValidityReport {
    let mut report = ValidityReport::default();
    if m.branch_sets.len() != m.guest.vertex_count() {
        report.violations.push(Violation::EmptyBranchSet { vertex: m.branch_sets.len() });
        return report;
    }
    let mut owner: HashMap<usize, usize> = HashMap::new();
    for (v, set) in m.branch_sets.iter().enumerate() {
        if set.is_empty() {
            report.violations.push(Violation::EmptyBranchSet { vertex: v });
            continue;
        }
        for &x in set {
            if x >= m.host.vertex_count() {
                report.violations.push(Violation::BranchVertexOutOfRange { vertex: v, host_vertex: x });
                continue;
            }
            if let Some(&u) = owner.get(&x) {
                if u != v {
                    report.violations.push(Violation::BranchSetsOverlap { u, v, at: x });
                }
            } else {
                owner.insert(x, v);
            }
        }
    }
    // Connectivity within each branch set, searched in the induced subgraph.
    for (v, set) in m.branch_sets.iter().enumerate() {
        if set.is_empty() || set.iter().any(|&x| x >= m.host.vertex_count()) {
            continue;
        }
        let members: std::collections::HashSet<usize> = set.iter().copied().collect();
        let mut seen = std::collections::HashSet::new();
        let mut stack = vec![set[0]];
        seen.insert(set[0]);
        while let Some(x) = stack.pop() {
            for &y in m.host.neighbors(x) {
                if members.contains(&y) && seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        if seen.len() != members.len() {
            report.violations.push(Violation::BranchSetDisconnected { vertex: v });
        }
    }
    for &(u, v) in m.guest.edges() {
        let set_u = &m.branch_sets[u];
        let witnessed = set_u.iter().any(|&x| {
            x < m.host.vertex_count()
                && m.host.neighbors(x).iter().any(|&y| owner.get(&y) == Some(&v))
        });
        if !witnessed {
            report.violations.push(Violation::MissingEdgeWitness { edge: (u, v) });
        }
    }
    report
}
