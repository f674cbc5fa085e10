//! Hypercube specialization: every factor is an edge, the cycle factor is
//! realized inside a small cube along its Gray cycle, and everything
//! composes into one model in `Q_d`.

use super::algebra::{compose_models, product_model, product_model_left};
use super::pipeline::{minor_universal_embed, ProductHosts};
use super::MinorModel;
use crate::error::{Error, Result};
use crate::graph::{hypercube, make_family, FamilySpec, Graph, ProductGraph};

fn ceil_log2(x: usize) -> usize {
    debug_assert!(x >= 1);
    (usize::BITS - (x - 1).leading_zeros()) as usize
}

/// Contracts the Gray cycle of `Q_t` into `l` consecutive arcs, giving a
/// model of the `l`-cycle. Arc sizes differ by at most one, larger arcs
/// first.
pub fn cycle_minor_in_hypercube(l: usize, t: usize) -> Result<MinorModel> {
    if l < 3 {
        return Err(Error::usage(format!("cycle length {l} below 3")));
    }
    let points = 1usize << t;
    if l > points {
        return Err(Error::capacity(format!("cycle length {l} exceeds the {points} cube vertices")));
    }
    let guest = make_family(&FamilySpec::Cycle(l))?;
    let host = hypercube(t);
    let gray: Vec<usize> = (0..points).map(|i| i ^ (i >> 1)).collect();
    let (base, extra) = (points / l, points % l);
    let mut branch_sets = Vec::with_capacity(l);
    let mut cursor = 0usize;
    for arc in 0..l {
        let size = base + usize::from(arc < extra);
        branch_sets.push(gray[cursor..cursor + size].to_vec());
        cursor += size;
    }
    debug_assert_eq!(cursor, points);
    MinorModel::new(guest, host, branch_sets)
}

/// The trivial model of `Q_s` inside `Q_d` as the low-bits subcube.
pub fn subcube_inclusion(s: usize, d: usize) -> Result<MinorModel> {
    if s > d {
        return Err(Error::usage(format!("Q_{s} does not fit inside Q_{d}")));
    }
    let guest = hypercube(s);
    let host = hypercube(d);
    let branch_sets = (0..guest.vertex_count()).map(|x| vec![x]).collect();
    MinorModel::new(guest, host, branch_sets)
}

/// Widest pipeline that fits in `Q_d`: the largest `n >= 1` such that
/// `n + ceil(log2(6n - 2)) + 3 <= d`, together with the cube dimension
/// `t = ceil(log2(6n - 2))` hosting the cycle factor.
pub fn hypercube_pipeline_width(d: usize) -> Option<(usize, usize)> {
    (1..=d)
        .filter(|&n| n + ceil_log2(6 * n - 2) + 3 <= d)
        .max()
        .map(|n| (n, ceil_log2(6 * n - 2)))
}

/// Embed-budget of `hypercube_embed` at dimension `d`.
pub fn hypercube_edge_budget(d: usize) -> Option<u128> {
    hypercube_pipeline_width(d).map(|(n, _)| (1u128 << n) / 16)
}

/// Builds a minor model of `guest` in `Q_d` through the product pipeline:
/// the model lands in `Q_2 x C_{6n-2} x Q_1^{n+1}`, the cycle factor is
/// replaced by its Gray-arc model in `Q_t`, and the result includes into
/// `Q_d` as a subcube.
pub fn hypercube_embed(guest: &Graph, d: usize) -> Result<MinorModel> {
    if guest.has_isolated_vertex() {
        return Err(Error::usage("guest must have no isolated vertices"));
    }
    let Some((n, t)) = hypercube_pipeline_width(d) else {
        return Err(Error::capacity(format!("dimension {d} too small for the pipeline")));
    };
    let budget = (1u128 << n) / 16;
    if (guest.edge_count() as u128) > budget {
        return Err(Error::capacity(format!(
            "guest has {} edges, the budget in Q_{d} is {budget}",
            guest.edge_count()
        )));
    }

    let q1 = hypercube(1);
    let q2 = hypercube(2);
    let hosts = ProductHosts::new(q2.clone(), q1.clone(), vec![q1.clone(); n])?;
    let in_p3 = minor_universal_embed(guest, &hosts)?;

    // Swap the cycle factor for its cube model, then restore the flanking
    // factors on both sides.
    let cycle_model = cycle_minor_in_hypercube(hosts.cycle_len(), t)?;
    let tail = ProductGraph::new(vec![q1.clone(); n + 1])?.to_graph();
    let with_tail = product_model(&cycle_model, &tail)?;
    let full = product_model_left(&q2, &with_tail)?;

    // The flattened product guest coincides with the pipeline host, and the
    // flattened product host is exactly the (n + t + 3)-cube.
    debug_assert_eq!(full.guest, in_p3.host);
    let s = n + t + 3;
    debug_assert_eq!(full.host, hypercube(s));
    let in_cube = compose_models(&in_p3, &full)?;
    compose_models(&in_cube, &subcube_inclusion(s, d)?)
}
