//! The layered embedding pipeline for product hosts.
//!
//! Hosts are built from a 4-vertex layer graph, a k-vertex shuttle graph
//! and connected factors `G_1 .. G_n`, each of order at most `k`:
//!
//! ```text
//! P0 = G_1 x ... x G_n          positions live here
//! P1 = H_k x P0                 piecewise embedding of one matching
//! P2 = C_{6n-2} x P1            pieces lifted around a cycle
//! P3 = H_4 x P2                 up to four matchings layered
//! ```
//!
//! A matching with prescribed positions turns into a permutation of the
//! box of factor vertex sets; its decomposition into `2n - 1` one-dimensional
//! factors drives the piecewise construction, three pieces per stage: ride
//! `H_k` to the stage label, move along the stage axis, ride back.

use super::convert::subdivision_embedding_to_model;
use super::verify::verify_piecewise;
use super::{CombinatorialEmbedding, MinorModel, PiecewiseEmbedding};
use crate::error::{Error, Result};
use crate::graph::{
    degree_reduce, simple_subdivision, vizing_edge_color, Graph, ProductGraph, Subdivision, Walk,
};
use crate::permdec::{decompose, BoxPermutation, BoxShape, OneDimFactor};
use std::collections::BTreeMap;

/// The host family of the pipeline.
#[derive(Clone, Debug)]
pub struct ProductHosts {
    pub h4: Graph,
    pub hk: Graph,
    pub factors: Vec<Graph>,
}

impl ProductHosts {
    pub fn new(h4: Graph, hk: Graph, factors: Vec<Graph>) -> Result<Self> {
        if h4.vertex_count() != 4 || !h4.is_connected() {
            return Err(Error::usage("layer graph must be connected with exactly 4 vertices"));
        }
        if hk.vertex_count() == 0 || !hk.is_connected() {
            return Err(Error::usage("shuttle graph must be connected and non-empty"));
        }
        if factors.is_empty() {
            return Err(Error::usage("at least one factor is required"));
        }
        let k = hk.vertex_count();
        for (i, g) in factors.iter().enumerate() {
            if !g.is_connected() || g.vertex_count() == 0 {
                return Err(Error::usage(format!("factor {i} must be connected and non-empty")));
            }
            if g.vertex_count() > k {
                return Err(Error::usage(format!(
                    "factor {i} has {} vertices, more than the shuttle graph's {k}",
                    g.vertex_count()
                )));
            }
        }
        Ok(ProductHosts { h4, hk, factors })
    }

    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    /// Number of road pieces per matching edge: three per decomposition stage.
    pub fn piece_count(&self) -> usize {
        6 * self.factor_count() - 3
    }

    pub fn cycle_len(&self) -> usize {
        6 * self.factor_count() - 2
    }

    pub fn position_capacity(&self) -> u128 {
        self.factors.iter().map(|g| g.vertex_count() as u128).product()
    }

    pub fn box_shape(&self) -> BoxShape {
        BoxShape::new(self.factors.iter().map(Graph::vertex_count).collect())
            .expect("factors validated non-empty")
    }

    pub fn p0(&self) -> ProductGraph {
        ProductGraph::new(self.factors.clone()).expect("factors validated non-empty")
    }

    pub fn p1(&self) -> ProductGraph {
        ProductGraph::new(vec![self.hk.clone(), self.p0().to_graph()]).expect("two factors")
    }

    pub fn p2(&self) -> Result<ProductGraph> {
        let cycle = crate::graph::make_family(&crate::graph::FamilySpec::Cycle(self.cycle_len()))?;
        Ok(ProductGraph::new(vec![cycle, self.p1().to_graph()]).expect("two factors"))
    }

    pub fn p3(&self) -> Result<ProductGraph> {
        Ok(ProductGraph::new(vec![self.h4.clone(), self.p2()?.to_graph()]).expect("two factors"))
    }
}

/// One stage of the trio construction.
#[derive(Clone, Debug)]
pub struct TrioStage {
    /// Axis moved by this stage's one-dimensional factor.
    pub axis: usize,
    /// Accumulated permutation before this stage (identity at stage 0).
    pub prefix: BoxPermutation,
    /// Factor-path per routed point: flat start position to the path of
    /// axis labels walked inside the stage factor.
    pub factor_paths: BTreeMap<usize, Vec<usize>>,
}

/// Per-stage bookkeeping of a piecewise construction run.
#[derive(Clone, Debug)]
pub struct TrioSchedule {
    pub shape: BoxShape,
    pub stages: Vec<TrioStage>,
}

/// Embeds a matching with prescribed positions into `P1`, piecewise.
///
/// `positions[v]` is the flat `P0` index assigned to guest vertex `v`; the
/// lifted image is `(0, positions[v])`. The permutation swapping matched
/// positions decomposes into `2n - 1` one-dimensional factors; stage `i`
/// contributes three pieces per edge.
pub fn piecewise_matching_embed(
    matching: &Graph,
    positions: &[usize],
    hosts: &ProductHosts,
) -> Result<(PiecewiseEmbedding, TrioSchedule)> {
    if matching.max_degree() > 1 {
        return Err(Error::invalid("guest must be a matching: maximum degree 1"));
    }
    let p0 = hosts.p0();
    if positions.len() != matching.vertex_count() {
        return Err(Error::invalid("one position per guest vertex required"));
    }
    {
        let mut seen = std::collections::HashSet::new();
        for &p in positions {
            if p >= p0.vertex_count() {
                return Err(Error::invalid(format!("position {p} outside the factor box")));
            }
            if !seen.insert(p) {
                return Err(Error::invalid(format!("positions are not injective at {p}")));
            }
        }
    }

    let shape = hosts.box_shape();
    let n = hosts.factor_count();
    let stage_count = 2 * n - 1;

    // The matching as a product of disjoint transpositions of positions.
    let mut sigma_map: Vec<usize> = (0..shape.point_count()).collect();
    for &(u, v) in matching.edges() {
        sigma_map.swap(positions[u], positions[v]);
    }
    let sigma = BoxPermutation::new(shape.clone(), sigma_map)?;

    // The factor list composes rightmost first; stages apply first to last.
    let mut stages_perms: Vec<OneDimFactor> = decompose(&sigma)?;
    stages_perms.reverse();
    debug_assert_eq!(stages_perms.len(), stage_count);

    let p1 = hosts.p1();
    let p0_order = p0.vertex_count();
    let p1_flat = |hk_label: usize, p: usize| hk_label * p0_order + p;

    // Shuttle walks from the base label 0, reused across edges.
    let mut shuttle_to: Vec<Vec<usize>> = Vec::with_capacity(hosts.hk.vertex_count());
    for l in 0..hosts.hk.vertex_count() {
        shuttle_to.push(hosts.hk.bfs_path(0, l)?.into());
    }

    let mut stages: Vec<TrioStage> = stages_perms
        .iter()
        .map(|f| TrioStage { axis: f.axis(), prefix: BoxPermutation::identity(shape.clone()), factor_paths: BTreeMap::new() })
        .collect();

    // prefix[i] = composition of stages 0..i applied in order (identity first).
    let mut prefix = BoxPermutation::identity(shape.clone());
    let mut prefixes: Vec<BoxPermutation> = Vec::with_capacity(stage_count + 1);
    prefixes.push(prefix.clone());
    for f in &stages_perms {
        let map: Vec<usize> = (0..shape.point_count()).map(|x| f.perm().apply(prefix.apply(x))).collect();
        prefix = BoxPermutation::new(shape.clone(), map)?;
        prefixes.push(prefix.clone());
    }
    for (i, stage) in stages.iter_mut().enumerate() {
        stage.prefix = prefixes[i].clone();
    }

    let mut pieces: Vec<Vec<Walk>> = Vec::with_capacity(matching.edge_count());
    for &(x, y) in matching.edges() {
        // Route from the endpoint with the smaller position.
        let start = positions[x].min(positions[y]);
        let mut edge_pieces = Vec::with_capacity(3 * stage_count);
        let mut at = start;
        for (i, f) in stages_perms.iter().enumerate() {
            let axis = f.axis();
            let coords = shape.unflatten(at);
            let label = coords[axis];
            let target = f.perm().apply(at);
            let target_label = shape.unflatten(target)[axis];

            // Ride the shuttle up to the stage label.
            let up: Vec<usize> = shuttle_to[label].iter().map(|&h| p1_flat(h, at)).collect();
            edge_pieces.push(Walk::new(up)?);

            // Move along the stage axis inside the factor.
            let factor_path: Vec<usize> = hosts.factors[axis].bfs_path(label, target_label)?.into();
            let mid: Vec<usize> = factor_path
                .iter()
                .map(|&c| {
                    let mut cs = coords.clone();
                    cs[axis] = c;
                    p1_flat(label, shape.flatten(&cs))
                })
                .collect();
            edge_pieces.push(Walk::new(mid)?);
            stages[i].factor_paths.insert(at, factor_path);

            // Ride back down to the base label.
            let down: Vec<usize> = shuttle_to[label].iter().rev().map(|&h| p1_flat(h, target)).collect();
            edge_pieces.push(Walk::new(down)?);

            at = target;
        }
        debug_assert_eq!(at, sigma.apply(start));
        pieces.push(edge_pieces);
    }

    let embedding = PiecewiseEmbedding {
        guest: matching.clone(),
        host: p1.to_graph(),
        piece_count: 3 * stage_count,
        vertex_map: positions.to_vec(),
        pieces,
    };
    Ok((embedding, TrioSchedule { shape, stages }))
}

/// Lifts a piecewise embedding into the product of a cycle with its host:
/// piece `i` is walked on cycle layer `i`, and every road closes up through
/// layer 0, visiting layers `0, 1, ..., N, 0` in order.
pub fn lift_with_cycle(p: &PiecewiseEmbedding) -> Result<CombinatorialEmbedding> {
    let report = verify_piecewise(p);
    if !report.is_valid() {
        return Err(Error::Verification(format!("piecewise embedding invalid: {report}")));
    }
    let n_pieces = p.piece_count;
    let cycle = crate::graph::make_family(&crate::graph::FamilySpec::Cycle(n_pieces + 1))?;
    let product = ProductGraph::new(vec![cycle, p.host.clone()])?;
    let host = product.to_graph();
    let y_order = p.host.vertex_count();

    let vertex_map: Vec<usize> = p.vertex_map.clone();
    let mut roads = Vec::with_capacity(p.pieces.len());
    for pieces in &p.pieces {
        let mut road = Vec::new();
        road.push(pieces[0].first());
        for (i, piece) in pieces.iter().enumerate() {
            let layer = i + 1;
            for &x in piece.vertices() {
                road.push(layer * y_order + x);
            }
        }
        road.push(pieces[n_pieces - 1].last());
        roads.push(Walk::new(road)?);
    }
    CombinatorialEmbedding::new(p.guest.clone(), host, vertex_map, roads)
}

/// Embeds the simple subdivision of a graph of maximum degree at most 3
/// into `P3`, partitioning the subdivision's edges into at most four
/// matchings and layering one matching per vertex of the 4-vertex graph.
pub fn embed_max_degree_3(
    gamma: &Graph,
    hosts: &ProductHosts,
) -> Result<(CombinatorialEmbedding, Subdivision)> {
    if gamma.max_degree() > 3 {
        return Err(Error::usage(format!(
            "guest has maximum degree {}, the layered construction handles at most 3",
            gamma.max_degree()
        )));
    }
    let sub = simple_subdivision(gamma);
    let capacity = hosts.position_capacity();
    if (sub.graph.vertex_count() as u128) > capacity {
        return Err(Error::capacity(format!(
            "subdivision has {} vertices, the factor box holds {capacity}",
            sub.graph.vertex_count()
        )));
    }

    // Positions: vertex v sits at flat index v of P0.
    let positions: Vec<usize> = (0..sub.graph.vertex_count()).collect();

    let classes = vizing_edge_color(&sub.graph);
    debug_assert!(classes.len() <= 4);

    // One lifted embedding per matching class, all sharing the vertex map.
    let mut per_class: Vec<CombinatorialEmbedding> = Vec::with_capacity(classes.len());
    for class in &classes {
        let matching = Graph::new(sub.graph.vertex_count(), class.iter().copied())?;
        let (piecewise, _schedule) = piecewise_matching_embed(&matching, &positions, hosts)?;
        per_class.push(lift_with_cycle(&piecewise)?);
    }

    let p2_graph = match per_class.first() {
        Some(e) => e.host.clone(),
        None => hosts.p2()?.to_graph(),
    };
    let p2_order = p2_graph.vertex_count();
    let host = ProductGraph::new(vec![hosts.h4.clone(), p2_graph])?.to_graph();

    // Walks in the 4-vertex layer graph from the base layer to each class layer.
    let mut layer_walk: Vec<Vec<usize>> = Vec::with_capacity(4);
    for i in 0..4 {
        layer_walk.push(hosts.h4.bfs_path(0, i)?.into());
    }

    let vertex_map: Vec<usize> = (0..sub.graph.vertex_count()).collect();
    let mut roads: Vec<Option<Walk>> = vec![None; sub.graph.edge_count()];
    for (layer, class) in classes.iter().enumerate() {
        let lifted = &per_class[layer];
        for &(u, v) in class {
            let idx = sub.graph.edge_index(u, v).expect("class edge in subdivision");
            let inner = lifted.road(u, v).expect("road per matching edge");
            let mut road = Vec::with_capacity(inner.vertices().len() + 2 * layer_walk[layer].len());
            for &w in &layer_walk[layer] {
                road.push(w * p2_order + inner.first());
            }
            for &x in &inner.vertices()[1..] {
                road.push(layer * p2_order + x);
            }
            for &w in layer_walk[layer].iter().rev().skip(1) {
                road.push(w * p2_order + inner.last());
            }
            roads[idx] = Some(Walk::new(road)?);
        }
    }
    let roads: Vec<Walk> = roads.into_iter().map(|r| r.expect("classes cover all edges")).collect();
    let embedding = CombinatorialEmbedding::new(sub.graph.clone(), host, vertex_map, roads)?;
    Ok((embedding, sub))
}

/// Produces a verified-by-construction minor model of any guest within the
/// edge budget `|V_1| ... |V_n| / 16`: reduce degrees to 3 with binary
/// trees, embed the subdivision into `P3`, read a model off the embedding,
/// and contract each tree's branch sets back into one.
pub fn minor_universal_embed(guest: &Graph, hosts: &ProductHosts) -> Result<MinorModel> {
    if guest.has_isolated_vertex() {
        return Err(Error::usage("guest must have no isolated vertices"));
    }
    let budget = hosts.position_capacity() / 16;
    if (guest.edge_count() as u128) > budget {
        return Err(Error::capacity(format!(
            "guest has {} edges, the host budget is {budget}",
            guest.edge_count()
        )));
    }
    let reduction = degree_reduce(guest)?;
    let (embedding, sub) = embed_max_degree_3(&reduction.graph, hosts)?;
    let (tree_model, _audit) = subdivision_embedding_to_model(&embedding, &sub, &reduction.graph)?;

    let mut branch_sets: Vec<Vec<usize>> = Vec::with_capacity(guest.vertex_count());
    for set in &reduction.contraction {
        let mut merged = Vec::new();
        for &t in set {
            merged.extend_from_slice(&tree_model.branch_sets[t]);
        }
        branch_sets.push(merged);
    }
    MinorModel::new(guest.clone(), tree_model.host.clone(), branch_sets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::verify::{verify_embedding, verify_model};
    use crate::graph::{make_family, FamilySpec};

    fn small_hosts() -> ProductHosts {
        // Two C4 factors, shuttle P4, layer C4.
        let c4 = make_family(&FamilySpec::Cycle(4)).unwrap();
        let p4 = make_family(&FamilySpec::Path(4)).unwrap();
        ProductHosts::new(c4.clone(), p4, vec![c4.clone(), c4]).unwrap()
    }

    #[test]
    fn empty_matching_is_vacuously_valid() {
        let hosts = small_hosts();
        let guest = Graph::empty(3);
        let (pw, schedule) = piecewise_matching_embed(&guest, &[0, 5, 9], &hosts).unwrap();
        assert!(verify_piecewise(&pw).is_valid());
        assert_eq!(pw.piece_count, 9);
        assert_eq!(schedule.stages.len(), 3);
    }

    #[test]
    fn single_edge_piecewise_into_c4_c4() {
        let hosts = small_hosts();
        let guest = Graph::new(2, [(0, 1)]).unwrap();
        let (pw, _) = piecewise_matching_embed(&guest, &[2, 11], &hosts).unwrap();
        assert_eq!(pw.piece_count, 9);
        let report = verify_piecewise(&pw);
        assert!(report.is_valid(), "{report}");
        // The chained pieces run between the two lifted endpoints.
        let chain: Vec<usize> = pw.pieces[0]
            .iter()
            .flat_map(|w| w.vertices().to_vec())
            .collect();
        assert_eq!(chain.first(), Some(&2));
        assert_eq!(chain.last(), Some(&11));
    }

    #[test]
    fn two_disjoint_edges_have_disjoint_pieces_per_index() {
        let hosts = small_hosts();
        let guest = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let (pw, _) = piecewise_matching_embed(&guest, &[0, 15, 5, 10], &hosts).unwrap();
        let report = verify_piecewise(&pw);
        assert!(report.is_valid(), "{report}");
        for i in 0..pw.piece_count {
            let a: std::collections::HashSet<usize> =
                pw.pieces[0][i].vertices().iter().copied().collect();
            assert!(pw.pieces[1][i].vertices().iter().all(|x| !a.contains(x)));
        }
    }

    #[test]
    fn rejects_non_matching_guest() {
        let hosts = small_hosts();
        let guest = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(piecewise_matching_embed(&guest, &[0, 1, 2], &hosts).is_err());
    }

    #[test]
    fn rejects_non_injective_positions() {
        let hosts = small_hosts();
        let guest = Graph::new(2, [(0, 1)]).unwrap();
        assert!(piecewise_matching_embed(&guest, &[3, 3], &hosts).is_err());
    }

    #[test]
    fn lift_single_edge_to_cycle_product() {
        let hosts = small_hosts();
        let guest = Graph::new(2, [(0, 1)]).unwrap();
        let (pw, _) = piecewise_matching_embed(&guest, &[2, 11], &hosts).unwrap();
        let lifted = lift_with_cycle(&pw).unwrap();
        let report = verify_embedding(&lifted);
        assert!(report.is_valid(), "{report}");
        // Cycle coordinate sequence is 0, 1, ..., N, 0.
        let y = pw.host.vertex_count();
        let layers: Vec<usize> = lifted.roads[0].vertices().iter().map(|&x| x / y).collect();
        let mut expected: Vec<usize> = Vec::new();
        expected.push(0);
        for (i, piece) in pw.pieces[0].iter().enumerate() {
            expected.extend(std::iter::repeat(i + 1).take(piece.vertices().len()));
        }
        expected.push(0);
        assert_eq!(layers, expected);
    }

    #[test]
    fn lift_matching_on_eight_vertices() {
        let hosts = small_hosts();
        let guest = Graph::new(8, [(0, 1), (2, 3), (4, 5), (6, 7)]).unwrap();
        let (pw, _) = piecewise_matching_embed(&guest, &[0, 3, 5, 6, 9, 10, 12, 15], &hosts).unwrap();
        let lifted = lift_with_cycle(&pw).unwrap();
        let report = verify_embedding(&lifted);
        assert!(report.is_valid(), "{report}");
    }

    #[test]
    fn embed_single_edge_max_degree_3() {
        let hosts = small_hosts();
        let guest = Graph::new(2, [(0, 1)]).unwrap();
        let (embedding, _sub) = embed_max_degree_3(&guest, &hosts).unwrap();
        let report = verify_embedding(&embedding);
        assert!(report.is_valid(), "{report}");
    }

    #[test]
    fn capacity_boundary_is_enforced() {
        let hosts = small_hosts(); // capacity 16
        // A path with 5 vertices subdivides to 13 <= 16: fits.
        let p5 = make_family(&FamilySpec::Path(5)).unwrap();
        assert!(embed_max_degree_3(&p5, &hosts).is_ok());
        // A path with 6 vertices subdivides to 16 <= 16: fits.
        let p6 = make_family(&FamilySpec::Path(6)).unwrap();
        assert!(embed_max_degree_3(&p6, &hosts).is_ok());
        // 7 vertices subdivide to 19 > 16: capacity error.
        let p7 = make_family(&FamilySpec::Path(7)).unwrap();
        assert!(matches!(embed_max_degree_3(&p7, &hosts), Err(Error::Capacity(_))));
    }

    #[test]
    fn minor_universal_single_edge() {
        let hosts = small_hosts(); // budget 16/16 = 1
        let guest = Graph::new(2, [(0, 1)]).unwrap();
        let model = minor_universal_embed(&guest, &hosts).unwrap();
        let report = verify_model(&model);
        assert!(report.is_valid(), "{report}");
    }

    #[test]
    fn minor_universal_budget_exceeded() {
        let hosts = small_hosts();
        let guest = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(matches!(minor_universal_embed(&guest, &hosts), Err(Error::Capacity(_))));
    }
}
