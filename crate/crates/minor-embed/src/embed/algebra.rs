//! Algebra on minor models: products with a fixed graph and transitive
//! composition.

use super::verify::verify_model;
use super::MinorModel;
use crate::error::{Error, Result};
use crate::graph::{Graph, ProductGraph};

fn require_valid(m: &MinorModel, role: &str) -> Result<()> {
    let report = verify_model(m);
    if !report.is_valid() {
        return Err(Error::Verification(format!("{role} model is invalid: {report}")));
    }
    Ok(())
}

/// From a model of `H` in `G`, a model of `H x L` in `G x L`: the branch
/// set of `(h, l)` is `branch(h) x {l}`.
pub fn product_model(m: &MinorModel, l: &Graph) -> Result<MinorModel> {
    require_valid(m, "input")?;
    let guest = ProductGraph::new(vec![m.guest.clone(), l.clone()])?.to_graph();
    let host = ProductGraph::new(vec![m.host.clone(), l.clone()])?.to_graph();
    let l_order = l.vertex_count();
    let host_order = m.host.vertex_count();
    let mut branch_sets = Vec::with_capacity(m.guest.vertex_count() * l_order);
    for h in 0..m.guest.vertex_count() {
        for lv in 0..l_order {
            branch_sets.push(m.branch_sets[h].iter().map(|&g| g * l_order + lv).collect());
        }
    }
    debug_assert_eq!(host.vertex_count(), host_order * l_order);
    MinorModel::new(guest, host, branch_sets)
}

/// Mirror image of [`product_model`]: a model of `L x H` in `L x G`.
pub fn product_model_left(l: &Graph, m: &MinorModel) -> Result<MinorModel> {
    require_valid(m, "input")?;
    let guest = ProductGraph::new(vec![l.clone(), m.guest.clone()])?.to_graph();
    let host = ProductGraph::new(vec![l.clone(), m.host.clone()])?.to_graph();
    let guest_order = m.guest.vertex_count();
    let host_order = m.host.vertex_count();
    let mut branch_sets = Vec::with_capacity(l.vertex_count() * guest_order);
    for lv in 0..l.vertex_count() {
        for h in 0..guest_order {
            branch_sets.push(m.branch_sets[h].iter().map(|&g| lv * host_order + g).collect());
        }
    }
    MinorModel::new(guest, host, branch_sets)
}

/// Transitive composition: given `F` in `H` and `H` in `G`, a model of `F`
/// in `G` whose branch sets are unions of inner branch sets. The inner
/// model's edge witnesses tie each union together, so the result stays
/// connected without extra vertices.
pub fn compose_models(outer: &MinorModel, inner: &MinorModel) -> Result<MinorModel> {
    if outer.host != inner.guest {
        return Err(Error::invalid(
            "composition needs the first model's host to equal the second model's guest",
        ));
    }
    require_valid(outer, "outer")?;
    require_valid(inner, "inner")?;
    let mut branch_sets = Vec::with_capacity(outer.guest.vertex_count());
    for set in &outer.branch_sets {
        let mut merged = Vec::new();
        for &h in set {
            merged.extend_from_slice(&inner.branch_sets[h]);
        }
        branch_sets.push(merged);
    }
    MinorModel::new(outer.guest.clone(), inner.host.clone(), branch_sets)
}
