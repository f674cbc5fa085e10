//! Separator audit of a combinatorial embedding into a hypercube.
//!
//! The audit works with the ball filtration around the all-zeros vertex:
//! it finds a radius splitting the guest's images roughly in half, takes
//! the guest edges crossing the split, extracts a pairwise non-adjacent
//! quarter of them by edge coloring, and checks that their roads meet the
//! splitting sphere at pairwise distinct vertices — which caps the number
//! of disjoint crossing roads by the sphere size.

use super::report::BoundsReport;
use super::sphere_sizes;
use crate::embed::{verify_embedding, CombinatorialEmbedding};
use crate::error::{Error, Result};
use crate::graph::{vizing_edge_color, Graph};
use num::bigint::BigUint;
use num::traits::ToPrimitive;

#[derive(Clone, Debug)]
pub enum AuditOutcome {
    /// The instance does not meet the audit's hypotheses; not an error.
    Inapplicable { reason: String },
    Applicable(Box<AuditData>),
}

#[derive(Clone, Debug)]
pub struct AuditData {
    pub dimension: usize,
    /// Guest order, the audit's `n`.
    pub guest_order: usize,
    /// `rho[r]` counts guest images at Hamming weight strictly below `r`.
    pub rho: Vec<usize>,
    /// Whether every sphere size is at most a tenth of the guest order.
    pub sphere_hypothesis_ok: bool,
    /// First radius whose sphere is heavier than a tenth of the guest, if any.
    pub heavy_sphere: Option<usize>,
    /// Whether the chosen radius keeps between 0.4 n and 0.5 n images inside.
    pub window_hit: bool,
    pub radius: usize,
    pub sphere_size: BigUint,
    /// Guest edges crossing the split.
    pub crossing: usize,
    /// Extracted pairwise non-adjacent crossing edges.
    pub extracted: Vec<(usize, usize)>,
    /// First sphere vertex met by each extracted road.
    pub meet_points: Vec<usize>,
    pub meets_distinct: bool,
    pub sphere_at_least_extracted: bool,
}

fn hypercube_dimension(host: &Graph) -> Result<usize> {
    let n = host.vertex_count();
    if n == 0 || n & (n - 1) != 0 {
        return Err(Error::usage("host order is not a power of two"));
    }
    let d = n.trailing_zeros() as usize;
    if host.edge_count() != d * n / 2
        || host.edges().iter().any(|&(u, v)| (u ^ v).count_ones() != 1)
    {
        return Err(Error::usage("host is not a hypercube under the bit labeling"));
    }
    Ok(d)
}

/// Runs the separator audit. The embedding must be valid, the guest must
/// have maximum degree at most 3, and the host must be a hypercube with
/// the canonical bit labeling.
pub fn separation_audit(embedding: &CombinatorialEmbedding) -> Result<AuditOutcome> {
    let d = hypercube_dimension(&embedding.host)?;
    if embedding.guest.max_degree() > 3 {
        return Err(Error::usage("audit requires guest maximum degree at most 3"));
    }
    let report = verify_embedding(embedding);
    if !report.is_valid() {
        return Err(Error::Verification(format!("embedding invalid: {report}")));
    }

    let n = embedding.guest.vertex_count();
    let weight = |x: usize| x.count_ones() as usize;

    // rho[r] = images with weight < r, for r = 0..=d+1.
    let mut rho = vec![0usize; d + 2];
    for &img in &embedding.vertex_map {
        for r in (weight(img) + 1)..=(d + 1) {
            rho[r] += 1;
        }
    }

    let spheres = sphere_sizes(d);
    // A sphere is heavy when 10 |S_r| > n, exact in integers.
    let heavy_sphere = (0..=d).find(|&r| &spheres[r] * 10u32 > BigUint::from(n));
    let sphere_hypothesis_ok = heavy_sphere.is_none();

    if n < 10 {
        return Ok(AuditOutcome::Inapplicable {
            reason: format!(
                "guest order {n} is below 10, so no sphere can hold a tenth of it"
            ),
        });
    }

    // Prefer a radius keeping 0.4 n..0.5 n images inside; fall back to the
    // most balanced split.
    let window = (1..=d).find(|&r| 5 * rho[r] >= 2 * n && 2 * rho[r] <= n);
    let (radius, window_hit) = match window {
        Some(r) => (r, true),
        None => {
            let Some(r) = (1..=d)
                .filter(|&r| rho[r] > 0 && rho[r] < n)
                .max_by_key(|&r| (rho[r].min(n - rho[r]), std::cmp::Reverse(r)))
            else {
                return Ok(AuditOutcome::Inapplicable {
                    reason: "no radius separates the guest images".to_string(),
                });
            };
            (r, false)
        }
    };

    let inside: Vec<bool> = embedding
        .vertex_map
        .iter()
        .map(|&img| weight(img) < radius)
        .collect();
    let crossing_edges: Vec<(usize, usize)> = embedding
        .guest
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| inside[u] != inside[v])
        .collect();

    // A quarter of the crossing edges is pairwise non-adjacent: the
    // crossing subgraph has maximum degree at most 3, so four matchings
    // cover it and the largest is at least a quarter.
    let crossing_graph = Graph::new(n, crossing_edges.iter().copied())?;
    let classes = vizing_edge_color(&crossing_graph);
    let extracted: Vec<(usize, usize)> = classes
        .into_iter()
        .max_by_key(|c| c.len())
        .unwrap_or_default();
    debug_assert!(4 * extracted.len() >= crossing_edges.len());

    let mut meet_points = Vec::with_capacity(extracted.len());
    for &(u, v) in &extracted {
        let road = embedding.road(u, v).expect("crossing edge has a road");
        let meet = road
            .vertices()
            .iter()
            .copied()
            .find(|&x| weight(x) == radius)
            .expect("a road crossing the split passes through the sphere");
        meet_points.push(meet);
    }
    let mut sorted = meet_points.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let meets_distinct = sorted.len() == meet_points.len();
    let sphere_size = spheres[radius].clone();
    let sphere_at_least_extracted = sphere_size >= BigUint::from(extracted.len());

    Ok(AuditOutcome::Applicable(Box::new(AuditData {
        dimension: d,
        guest_order: n,
        rho,
        sphere_hypothesis_ok,
        heavy_sphere,
        window_hit,
        radius,
        sphere_size,
        crossing: crossing_edges.len(),
        extracted,
        meet_points,
        meets_distinct,
        sphere_at_least_extracted,
    })))
}

impl AuditOutcome {
    pub fn to_report(&self) -> BoundsReport {
        let mut r = BoundsReport::new("separation-audit");
        match self {
            AuditOutcome::Inapplicable { reason } => {
                r.push("status", "inapplicable");
                r.push("reason", reason);
            }
            AuditOutcome::Applicable(data) => {
                r.push("status", "applicable");
                r.push("d", data.dimension);
                r.push("guest_order", data.guest_order);
                r.push(
                    "rho",
                    data.rho
                        .iter()
                        .map(usize::to_string)
                        .collect::<Vec<_>>()
                        .join(" "),
                );
                r.push("sphere_hypothesis_ok", data.sphere_hypothesis_ok);
                if let Some(k) = data.heavy_sphere {
                    r.push("heavy_sphere", k);
                }
                r.push("window_hit", data.window_hit);
                r.push("radius", data.radius);
                r.push("sphere_size", &data.sphere_size);
                r.push("crossing_edges", data.crossing);
                r.push("extracted_count", data.extracted.len());
                r.push(
                    "meet_points",
                    data.meet_points
                        .iter()
                        .map(usize::to_string)
                        .collect::<Vec<_>>()
                        .join(" "),
                );
                r.push("meets_distinct", data.meets_distinct);
                r.push("sphere_at_least_extracted", data.sphere_at_least_extracted);
                if let Some(ratio) = data.sphere_size.to_f64() {
                    r.push_f64("extracted_over_sphere", data.extracted.len() as f64 / ratio);
                }
            }
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::{model_to_embedding, MinorModel};
    use crate::graph::hypercube;

    #[test]
    fn single_edge_in_q3_is_inapplicable() {
        let guest = Graph::new(2, [(0, 1)]).unwrap();
        let host = hypercube(3);
        let m = MinorModel::new(guest, host, vec![vec![0], vec![1]]).unwrap();
        let e = model_to_embedding(&m).unwrap();
        let outcome = separation_audit(&e).unwrap();
        assert!(matches!(outcome, AuditOutcome::Inapplicable { .. }));
    }

    #[test]
    fn non_hypercube_host_is_rejected() {
        let guest = Graph::new(2, [(0, 1)]).unwrap();
        let host = crate::graph::make_family(&crate::graph::FamilySpec::Cycle(6)).unwrap();
        let m = MinorModel::new(guest, host, vec![vec![0], vec![1]]).unwrap();
        let e = model_to_embedding(&m).unwrap();
        assert!(separation_audit(&e).is_err());
    }

    #[test]
    fn identity_model_of_q4_audits() {
        // Guest = Q4 itself has degree 4: too high. Use a 16-vertex cycle
        // inside Q4 instead via its Gray order.
        let gray: Vec<usize> = (0..16).map(|i| i ^ (i >> 1)).collect();
        let host = hypercube(4);
        let guest = Graph::new(16, (0..16).map(|i| (i, (i + 1) % 16))).unwrap();
        let branch: Vec<Vec<usize>> = gray.iter().map(|&g| vec![g]).collect();
        let m = MinorModel::new(guest, host, branch).unwrap();
        let e = model_to_embedding(&m).unwrap();
        match separation_audit(&e).unwrap() {
            AuditOutcome::Applicable(data) => {
                assert!(data.meets_distinct);
                assert!(data.sphere_at_least_extracted);
                assert!(data.crossing > 0);
                assert!(4 * data.extracted.len() >= data.crossing);
            }
            AuditOutcome::Inapplicable { reason } => panic!("expected applicable: {reason}"),
        }
    }
}
