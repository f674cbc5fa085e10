//! Edge coloring with at most `max_degree + 1` classes via fan rotation.

use super::Graph;
use std::collections::HashSet;

struct EdgeColorer<'a> {
    graph: &'a Graph,
    /// Incident edge list per vertex: (edge index, other endpoint).
    incident: Vec<Vec<(usize, usize)>>,
    max_degree: usize,
    colors: Vec<Option<usize>>,
    used_at: Vec<HashSet<usize>>,
}

impl<'a> EdgeColorer<'a> {
    fn new(graph: &'a Graph) -> Self {
        let mut incident = vec![Vec::new(); graph.vertex_count()];
        for (idx, &(u, v)) in graph.edges().iter().enumerate() {
            incident[u].push((idx, v));
            incident[v].push((idx, u));
        }
        EdgeColorer {
            graph,
            incident,
            max_degree: graph.max_degree(),
            colors: vec![None; graph.edge_count()],
            used_at: vec![HashSet::new(); graph.vertex_count()],
        }
    }

    fn set_colors(&mut self, changes: &[(usize, usize)]) {
        for &(e, _) in changes {
            if let Some(old) = self.colors[e] {
                let (u, v) = self.graph.edges()[e];
                self.used_at[u].remove(&old);
                self.used_at[v].remove(&old);
            }
        }
        for &(e, c) in changes {
            let (u, v) = self.graph.edges()[e];
            self.used_at[u].insert(c);
            self.used_at[v].insert(c);
            self.colors[e] = Some(c);
        }
    }

    fn is_free(&self, v: usize, c: usize) -> bool {
        !self.used_at[v].contains(&c)
    }

    fn free_color(&self, v: usize) -> usize {
        (0..=self.max_degree)
            .find(|c| !self.used_at[v].contains(c))
            .expect("a free color exists in a palette of max_degree + 1")
    }

    /// Maximal fan at `u` starting from the uncolored edge toward `v`:
    /// each next fan edge is colored with a color free at the previous
    /// fan vertex.
    fn maximal_fan(&self, first_edge: usize, u: usize, v: usize) -> Vec<(usize, usize)> {
        let mut fan = vec![(first_edge, v)];
        let mut pool: Vec<(usize, usize)> = self
            .incident[u]
            .iter()
            .copied()
            .filter(|&(e, _)| e != first_edge)
            .collect();
        let mut last = v;
        loop {
            let mut extended = false;
            for i in 0..pool.len() {
                let (e, w) = pool[i];
                if let Some(c) = self.colors[e] {
                    if self.is_free(last, c) {
                        fan.push((e, w));
                        last = w;
                        pool.swap_remove(i);
                        extended = true;
                        break;
                    }
                }
            }
            if !extended {
                return fan;
            }
        }
    }

    /// Maximal alternating path from `u` whose first edge is colored `start`
    /// and which alternates `start` and `other`.
    fn alternating_path(&self, u: usize, start: usize, other: usize) -> Vec<(usize, usize)> {
        let mut path = Vec::new();
        let mut cur = u;
        let mut want = start;
        'outer: loop {
            for &(e, w) in &self.incident[cur] {
                if self.colors[e] == Some(want) && path.last().map(|&(p, _)| p) != Some(e) {
                    path.push((e, want));
                    cur = w;
                    want = if want == start { other } else { start };
                    continue 'outer;
                }
            }
            return path;
        }
    }

    fn run(mut self) -> Vec<usize> {
        for e in 0..self.graph.edge_count() {
            let (u, v) = self.graph.edges()[e];
            let fan = self.maximal_fan(e, u, v);
            let c = self.free_color(u);
            let d = self.free_color(fan.last().unwrap().1);
            // Swap c and d along the maximal cd-path out of u (d first: c is
            // free at u, so u carries at most one edge of the pair).
            let path = self.alternating_path(u, d, c);
            let inverted: Vec<(usize, usize)> = path
                .iter()
                .map(|&(pe, pc)| (pe, if pc == d { c } else { d }))
                .collect();
            self.set_colors(&inverted);
            // First fan vertex where d is now free; the prefix up to it is
            // still a fan, so rotating it keeps the coloring proper.
            let mut w = 0;
            for (i, &(_, x)) in fan.iter().enumerate() {
                if self.is_free(x, d) {
                    w = i;
                    break;
                }
            }
            let mut rotation: Vec<(usize, usize)> = Vec::with_capacity(w + 1);
            for i in 1..=w {
                rotation.push((fan[i - 1].0, self.colors[fan[i].0].unwrap()));
            }
            rotation.push((fan[w].0, d));
            self.set_colors(&rotation);
        }
        self.colors.into_iter().map(|c| c.unwrap()).collect()
    }
}

/// Partitions the edge set into at most `max_degree + 1` matchings.
///
/// Returns the classes as edge lists in graph edge order; empty classes are
/// dropped, so the result length is the number of colors actually used.
pub fn vizing_edge_color(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    if g.edge_count() == 0 {
        return Vec::new();
    }
    let colors = EdgeColorer::new(g).run();
    let class_count = colors.iter().max().unwrap() + 1;
    let mut classes = vec![Vec::new(); class_count];
    for (e, &c) in colors.iter().enumerate() {
        classes[c].push(g.edges()[e]);
    }
    classes.retain(|class| !class.is_empty());
    classes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, FamilySpec};
    use std::collections::BTreeSet;

    fn assert_proper(g: &Graph, classes: &[Vec<(usize, usize)>]) {
        assert!(classes.len() <= g.max_degree() + 1, "too many classes");
        let mut seen = BTreeSet::new();
        for class in classes {
            let mut touched = BTreeSet::new();
            for &(u, v) in class {
                assert!(g.has_edge(u, v));
                assert!(seen.insert((u, v)), "edge colored twice");
                assert!(touched.insert(u), "class is not a matching at {u}");
                assert!(touched.insert(v), "class is not a matching at {v}");
            }
        }
        assert_eq!(seen.len(), g.edge_count(), "classes do not cover all edges");
    }

    #[test]
    fn single_edge_one_class() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        let classes = vizing_edge_color(&g);
        assert_eq!(classes.len(), 1);
        assert_proper(&g, &classes);
    }

    #[test]
    fn k4_at_most_four_classes() {
        let g = make_family(&FamilySpec::Complete(4)).unwrap();
        let classes = vizing_edge_color(&g);
        assert_proper(&g, &classes);
        assert!(classes.len() <= 4);
    }

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, 5 + i));
        }
        Graph::new(10, edges).unwrap()
    }

    /// Exhaustive check that no proper 3-edge-coloring exists.
    fn three_colorable(g: &Graph) -> bool {
        fn go(g: &Graph, colors: &mut Vec<Option<usize>>, e: usize) -> bool {
            if e == g.edge_count() {
                return true;
            }
            let (u, v) = g.edges()[e];
            'color: for c in 0..3 {
                for (i, &(a, b)) in g.edges().iter().enumerate().take(e) {
                    if colors[i] == Some(c) && (a == u || a == v || b == u || b == v) {
                        continue 'color;
                    }
                }
                colors[e] = Some(c);
                if go(g, colors, e + 1) {
                    return true;
                }
                colors[e] = None;
            }
            false
        }
        go(g, &mut vec![None; g.edge_count()], 0)
    }

    #[test]
    fn petersen_needs_four_matchings() {
        let g = petersen();
        assert_eq!(g.max_degree(), 3);
        assert!(!three_colorable(&g), "petersen has chromatic index 4");
        let classes = vizing_edge_color(&g);
        assert_proper(&g, &classes);
        assert_eq!(classes.len(), 4);
    }

    #[test]
    fn random_graphs_stay_proper() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        for trial in 0..300 {
            let n = rng.gen_range(2..=24);
            let max_edges = n * (n - 1) / 2;
            let m = rng.gen_range(1..=max_edges.min(60));
            let mut edges = BTreeSet::new();
            while edges.len() < m {
                let u = rng.gen_range(0..n);
                let v = rng.gen_range(0..n);
                if u != v {
                    edges.insert((u.min(v), u.max(v)));
                }
            }
            let g = Graph::new(n, edges).unwrap();
            let classes = vizing_edge_color(&g);
            assert_proper(&g, &classes);
            let _ = trial;
        }
    }
}
