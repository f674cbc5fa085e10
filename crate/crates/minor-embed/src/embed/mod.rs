//! Embeddings and minor models: the constructive core.
//!
//! Three ways of placing a guest graph inside a host:
//!
//! * a [`MinorModel`] assigns each guest vertex a connected branch set,
//!   disjoint across vertices, with a host edge witnessing every guest edge;
//! * a [`CombinatorialEmbedding`] maps vertices injectively and edges to
//!   walks ("roads") such that roads of non-adjacent edges are disjoint and
//!   no road passes through the image of an outside vertex;
//! * a [`PiecewiseEmbedding`] weakens the road discipline to indexed pieces
//!   with disjointness required only within each index.
//!
//! Models of a guest exist iff the guest is a minor of the host. A
//! combinatorial embedding does not imply a minor in general, but an
//! embedding of the guest's simple subdivision does, and [`convert`] makes
//! both directions explicit. The construction pipeline in [`pipeline`]
//! builds embeddings into product hosts layer by layer; [`hypercube`]
//! specializes it to powers of two.

mod algebra;
mod convert;
mod hypercube;
mod pipeline;
mod verify;

pub use algebra::{compose_models, product_model, product_model_left};
pub use convert::{model_to_embedding, subdivision_embedding_to_model, ConversionAudit};
pub use hypercube::{cycle_minor_in_hypercube, hypercube_embed, hypercube_pipeline_width, subcube_inclusion};
pub use pipeline::{
    embed_max_degree_3, lift_with_cycle, minor_universal_embed, piecewise_matching_embed,
    ProductHosts, TrioSchedule, TrioStage,
};
pub use verify::{verify_embedding, verify_model, verify_piecewise, ValidityReport, Violation};

use crate::error::{Error, Result};
use crate::graph::{Graph, Walk};

/// An injective vertex map plus one road per guest edge.
///
/// Roads are stored in guest edge order; the road for edge `(u, v)` with
/// `u < v` runs from the image of `u` to the image of `v`.
#[derive(Clone, Debug)]
pub struct CombinatorialEmbedding {
    pub guest: Graph,
    pub host: Graph,
    pub vertex_map: Vec<usize>,
    pub roads: Vec<Walk>,
}

impl CombinatorialEmbedding {
    pub fn new(guest: Graph, host: Graph, vertex_map: Vec<usize>, roads: Vec<Walk>) -> Result<Self> {
        if vertex_map.len() != guest.vertex_count() {
            return Err(Error::invalid("vertex map length must equal guest order"));
        }
        if roads.len() != guest.edge_count() {
            return Err(Error::invalid("need exactly one road per guest edge"));
        }
        Ok(CombinatorialEmbedding { guest, host, vertex_map, roads })
    }

    pub fn road(&self, u: usize, v: usize) -> Option<&Walk> {
        self.guest.edge_index(u, v).map(|i| &self.roads[i])
    }
}

/// Roads cut into `piece_count` indexed pieces; pieces of non-adjacent
/// edges must be disjoint index by index, and per edge the pieces must
/// chain into one walk between the endpoint images.
#[derive(Clone, Debug)]
pub struct PiecewiseEmbedding {
    pub guest: Graph,
    pub host: Graph,
    pub piece_count: usize,
    pub vertex_map: Vec<usize>,
    /// `pieces[e][i]` is piece `i` of the road for guest edge `e`.
    pub pieces: Vec<Vec<Walk>>,
}

/// Branch sets, one connected host territory per guest vertex.
#[derive(Clone, Debug)]
pub struct MinorModel {
    pub guest: Graph,
    pub host: Graph,
    /// Sorted host vertex lists, indexed by guest vertex.
    pub branch_sets: Vec<Vec<usize>>,
}

impl MinorModel {
    pub fn new(guest: Graph, host: Graph, mut branch_sets: Vec<Vec<usize>>) -> Result<Self> {
        if branch_sets.len() != guest.vertex_count() {
            return Err(Error::invalid("need exactly one branch set per guest vertex"));
        }
        for set in &mut branch_sets {
            set.sort_unstable();
            set.dedup();
        }
        Ok(MinorModel { guest, host, branch_sets })
    }

    /// The identity model of a graph in itself: singleton branch sets.
    pub fn identity(g: &Graph) -> Self {
        MinorModel {
            guest: g.clone(),
            host: g.clone(),
            branch_sets: (0..g.vertex_count()).map(|v| vec![v]).collect(),
        }
    }

    /// Least host vertex of each branch set, the canonical representative.
    pub fn representative(&self, v: usize) -> Option<usize> {
        self.branch_sets.get(v).and_then(|s| s.first().copied())
    }
}
