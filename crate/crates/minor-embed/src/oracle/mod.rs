//! Ground truth at desk scale: exhaustive minor testing, small-graph
//! enumeration up to isomorphism, and exact universality numbers.

mod canon;

pub use canon::{canonical_form, enumerate_guests, CanonicalGraph};

use crate::embed::MinorModel;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Search budget measured in explored nodes, so YES/NO/budget outcomes are
/// deterministic.
#[derive(Clone, Copy, Debug)]
pub struct SearchBudget {
    pub max_nodes: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_nodes: 10_000_000 }
    }
}

struct MinorSearch<'a> {
    guest: &'a Graph,
    host: &'a Graph,
    /// Guest vertices in assignment order (descending degree, then label).
    order: Vec<usize>,
    /// Adjacency masks of the host.
    adj: Vec<u64>,
    nodes: u64,
    budget: u64,
}

impl<'a> MinorSearch<'a> {
    /// `assigned[j]` = branch mask of `order[j]`; `used` = union of masks.
    /// Returns the completed assignment if one exists.
    fn assign(&mut self, depth: usize, used: u64, assigned: &mut Vec<u64>) -> Result<bool> {
        if depth == self.order.len() {
            return Ok(true);
        }
        let v = self.order[depth];
        let free = !used & ((1u64 << self.host.vertex_count()) - 1);
        // Each of the remaining guest vertices needs at least one host vertex.
        if (free.count_ones() as usize) < self.order.len() - depth {
            return Ok(false);
        }
        // Earlier-placed neighbors constrain the branch set: it must touch
        // the host neighborhood of each of their masks.
        let mut required: Vec<u64> = Vec::new();
        for j in 0..depth {
            if self.guest.has_edge(self.order[j], v) {
                let mut frontier = 0u64;
                let mut m = assigned[j];
                while m != 0 {
                    let x = m.trailing_zeros() as usize;
                    m &= m - 1;
                    frontier |= self.adj[x];
                }
                frontier &= free;
                if frontier == 0 {
                    return Ok(false);
                }
                required.push(frontier);
            }
        }
        let later_neighbors = self
            .guest
            .neighbors(v)
            .iter()
            .filter(|&&w| self.order[depth + 1..].contains(&w))
            .count();

        let ctx = LevelCtx { depth, used, required: &required, later_neighbors };
        // Enumerate connected subsets of the free host vertices, each subset
        // generated once from its minimum vertex.
        let mut roots = free;
        while roots != 0 {
            let r = roots.trailing_zeros() as usize;
            roots &= roots - 1;
            let allowed = free & !((1u64 << r) - 1);
            let root = 1u64 << r;
            if self.grow(root, self.adj[r] & allowed & !root, 0, allowed, &ctx, assigned)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Extends the branch set `set` by frontier candidates from `ext`.
    /// `banned` vertices were offered higher up the enumeration tree and
    /// may never reappear below, which makes each connected subset come up
    /// exactly once.
    fn grow(
        &mut self,
        set: u64,
        ext: u64,
        banned: u64,
        allowed: u64,
        ctx: &LevelCtx<'_>,
        assigned: &mut Vec<u64>,
    ) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::resource(format!(
                "minor search exceeded {} explored nodes",
                self.budget
            )));
        }
        if ctx.required.iter().all(|&f| f & set != 0) {
            // The set works for earlier neighbors; check the later ones can
            // still reach it before committing.
            let mut boundary = 0u64;
            let mut m = set;
            while m != 0 {
                let x = m.trailing_zeros() as usize;
                m &= m - 1;
                boundary |= self.adj[x];
            }
            let free_after = !(ctx.used | set) & ((1u64 << self.host.vertex_count()) - 1);
            if (boundary & free_after).count_ones() as usize >= ctx.later_neighbors {
                assigned.push(set);
                if self.assign(ctx.depth + 1, ctx.used | set, assigned)? {
                    return Ok(true);
                }
                assigned.pop();
            }
        }
        let mut candidates = ext;
        let mut processed = 0u64;
        while candidates != 0 {
            let x = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            let xbit = 1u64 << x;
            let child_banned = banned | processed;
            let new_set = set | xbit;
            let new_ext = (ext | (self.adj[x] & allowed)) & !new_set & !child_banned;
            if self.grow(new_set, new_ext, child_banned, allowed, ctx, assigned)? {
                return Ok(true);
            }
            processed |= xbit;
        }
        Ok(false)
    }
}

struct LevelCtx<'a> {
    depth: usize,
    used: u64,
    required: &'a [u64],
    later_neighbors: usize,
}

/// Exhaustive minor test. Returns a model iff the guest is a minor of the
/// host; `Ok(None)` is a definitive NO, the search space having been
/// exhausted. Budget exhaustion is an error, distinct from NO.
pub fn is_minor_bruteforce(
    guest: &Graph,
    host: &Graph,
    budget: SearchBudget,
) -> Result<Option<MinorModel>> {
    if host.vertex_count() > 64 {
        return Err(Error::resource(format!(
            "host has {} vertices, the exhaustive search handles at most 64",
            host.vertex_count()
        )));
    }
    if guest.vertex_count() == 0 {
        return Ok(Some(MinorModel::new(guest.clone(), host.clone(), Vec::new())?));
    }
    if guest.vertex_count() > host.vertex_count() || guest.edge_count() > host.edge_count() {
        return Ok(None);
    }

    let mut order: Vec<usize> = guest.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(guest.degree(v)), v));
    let adj: Vec<u64> = host
        .vertices()
        .map(|v| host.neighbors(v).iter().fold(0u64, |m, &w| m | (1 << w)))
        .collect();
    let mut search = MinorSearch { guest, host, order, adj, nodes: 0, budget: budget.max_nodes };
    let mut assigned: Vec<u64> = Vec::new();
    if search.assign(0, 0, &mut assigned)? {
        let mut branch_sets = vec![Vec::new(); guest.vertex_count()];
        for (j, &mask) in assigned.iter().enumerate() {
            let v = search.order[j];
            let mut m = mask;
            while m != 0 {
                let x = m.trailing_zeros() as usize;
                m &= m - 1;
                branch_sets[v].push(x);
            }
        }
        let model = MinorModel::new(guest.clone(), host.clone(), branch_sets)?;
        debug_assert!(crate::embed::verify_model(&model).is_valid());
        Ok(Some(model))
    } else {
        Ok(None)
    }
}

/// Outcome of a universality sweep.
#[derive(Clone, Debug)]
pub struct UniversalityResult {
    /// Largest `m` such that every guest with at most `m` edges embeds.
    pub value: usize,
    /// True when the sweep never found a counterexample up to `m_max`.
    pub saturated: bool,
    /// The first non-embeddable guest in enumeration order, if any.
    pub falsifier: Option<CanonicalGraph>,
}

/// Computes the largest `m <= m_max` such that every graph with at most `m`
/// edges and no isolated vertices is a minor of `host`.
pub fn universality_number(
    host: &Graph,
    m_max: usize,
    budget: SearchBudget,
) -> Result<UniversalityResult> {
    for m in 1..=m_max {
        for guest in enumerate_guests(m)? {
            if guest.graph.edge_count() != m {
                continue;
            }
            if is_minor_bruteforce(&guest.graph, host, budget)?.is_none() {
                return Ok(UniversalityResult { value: m - 1, saturated: false, falsifier: Some(guest) });
            }
        }
    }
    Ok(UniversalityResult { value: m_max, saturated: true, falsifier: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::verify_model;
    use crate::graph::{hypercube, make_family, FamilySpec};

    fn star3() -> Graph {
        Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn triangle_is_not_a_minor_of_the_star() {
        let triangle = make_family(&FamilySpec::Cycle(3)).unwrap();
        let result = is_minor_bruteforce(&triangle, &star3(), SearchBudget::default()).unwrap();
        assert!(result.is_none());
    }

    #[test]
    fn single_edge_embeds_anywhere_with_an_edge() {
        let edge = Graph::new(2, [(0, 1)]).unwrap();
        for host in [star3(), hypercube(3), make_family(&FamilySpec::Path(2)).unwrap()] {
            let model = is_minor_bruteforce(&edge, &host, SearchBudget::default())
                .unwrap()
                .expect("an edge is a minor of any graph with an edge");
            assert!(verify_model(&model).is_valid());
        }
    }

    #[test]
    fn k4_is_a_minor_of_q3() {
        let k4 = make_family(&FamilySpec::Complete(4)).unwrap();
        let model = is_minor_bruteforce(&k4, &hypercube(3), SearchBudget::default())
            .unwrap()
            .expect("k4 embeds in the 3-cube");
        assert!(verify_model(&model).is_valid());
    }

    #[test]
    fn k5_is_not_a_minor_of_q3() {
        // Q3 is planar, K5 is not.
        let k5 = make_family(&FamilySpec::Complete(5)).unwrap();
        assert!(is_minor_bruteforce(&k5, &hypercube(3), SearchBudget::default())
            .unwrap()
            .is_none());
    }

    #[test]
    fn budget_exhaustion_is_distinct_from_no() {
        let k4 = make_family(&FamilySpec::Complete(4)).unwrap();
        let result = is_minor_bruteforce(&k4, &hypercube(3), SearchBudget { max_nodes: 3 });
        assert!(matches!(result, Err(Error::Resource(_))));
    }

    #[test]
    fn universality_of_an_edge_is_one() {
        let edge = Graph::new(2, [(0, 1)]).unwrap();
        let r = universality_number(&edge, 3, SearchBudget::default()).unwrap();
        assert_eq!(r.value, 1);
        assert!(!r.saturated);
        assert_eq!(r.falsifier.unwrap().graph.edge_count(), 2);
    }

    #[test]
    fn universality_of_the_star_is_one() {
        // Every edge of the star contains the center, so two vertex-disjoint
        // witness edges cannot coexist: two disjoint edges already fail.
        let two_k2 = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(is_minor_bruteforce(&two_k2, &star3(), SearchBudget::default())
            .unwrap()
            .is_none());
        let r = universality_number(&star3(), 3, SearchBudget::default()).unwrap();
        assert_eq!(r.value, 1);
        let falsifier = r.falsifier.unwrap();
        assert_eq!(falsifier.graph.vertex_count(), 4);
        assert_eq!(falsifier.graph.edge_count(), 2);
    }

    #[test]
    fn q3_is_at_least_3_universal() {
        let r = universality_number(&hypercube(3), 3, SearchBudget::default()).unwrap();
        assert_eq!(r.value, 3);
        assert!(r.saturated);
    }

    #[test]
    fn monotone_under_host_edge_addition() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..30 {
            let n = rng.gen_range(3..=7);
            let mut edges = std::collections::BTreeSet::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.45) {
                        edges.insert((u, v));
                    }
                }
            }
            let host = Graph::new(n, edges.iter().copied()).unwrap();
            let guest_pool = [
                make_family(&FamilySpec::Cycle(3)).unwrap(),
                make_family(&FamilySpec::Path(3)).unwrap(),
                Graph::new(4, [(0, 1), (2, 3)]).unwrap(),
            ];
            let guest = &guest_pool[rng.gen_range(0..guest_pool.len())];
            let before = is_minor_bruteforce(guest, &host, SearchBudget::default()).unwrap();
            // Add one absent edge if any.
            let mut absent = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if !edges.contains(&(u, v)) {
                        absent.push((u, v));
                    }
                }
            }
            if before.is_some() && !absent.is_empty() {
                let add = absent[rng.gen_range(0..absent.len())];
                let mut bigger: Vec<(usize, usize)> = edges.iter().copied().collect();
                bigger.push(add);
                let host2 = Graph::new(n, bigger).unwrap();
                assert!(is_minor_bruteforce(guest, &host2, SearchBudget::default())
                    .unwrap()
                    .is_some());
            }
        }
    }

    #[test]
    fn transitivity_spot_check() {
        let p3 = make_family(&FamilySpec::Path(3)).unwrap();
        let c4 = make_family(&FamilySpec::Cycle(4)).unwrap();
        let q3 = hypercube(3);
        let b = SearchBudget::default();
        assert!(is_minor_bruteforce(&p3, &c4, b).unwrap().is_some());
        assert!(is_minor_bruteforce(&c4, &q3, b).unwrap().is_some());
        assert!(is_minor_bruteforce(&p3, &q3, b).unwrap().is_some());
    }
}
