//! Exhaustive breadth-first search for the minimum number of
//! one-dimensional factors realizing a given box permutation.

use super::{BoxPermutation, BoxShape, OneDimFactor};
use crate::error::{Error, Result};
use std::collections::HashMap;

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Number of one-dimensional permutations of the box on `axis`.
fn count_axis_generators(shape: &BoxShape, axis: usize) -> u128 {
    let n = shape.dims()[axis];
    let fibers = (shape.point_count() / n) as u32;
    factorial(n).checked_pow(fibers).unwrap_or(u128::MAX)
}

/// Enumerates every one-dimensional permutation of the box on `axis`:
/// independent sub-permutations of each fiber along that axis.
fn axis_generators(shape: &BoxShape, axis: usize) -> Vec<BoxPermutation> {
    let n = shape.dims()[axis];
    let total = shape.point_count();
    let fiber_count = total / n;

    // All permutations of 0..n in lexicographic order.
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        perms.push(cur.clone());
        // next_permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    let per_fiber = perms.len();

    // Fibers indexed by the flat index of their axis-0-slot representative,
    // in ascending order of that representative.
    let mut fiber_points: Vec<Vec<usize>> = Vec::with_capacity(fiber_count);
    let mut fiber_of = vec![usize::MAX; total];
    for p in 0..total {
        let coords = shape.unflatten(p);
        if coords[axis] == 0 {
            let mut pts = Vec::with_capacity(n);
            let mut c = coords.clone();
            for v in 0..n {
                c[axis] = v;
                pts.push(shape.flatten(&c));
            }
            for &pt in &pts {
                fiber_of[pt] = fiber_points.len();
            }
            fiber_points.push(pts);
        }
    }
    debug_assert!(fiber_of.iter().all(|&f| f != usize::MAX));

    // Odometer over per-fiber permutation choices.
    let count = per_fiber.checked_pow(fiber_count as u32).unwrap_or(usize::MAX);
    let mut out = Vec::with_capacity(count.min(1 << 20));
    let mut choice = vec![0usize; fiber_count];
    loop {
        let mut map = vec![0usize; total];
        for (f, pts) in fiber_points.iter().enumerate() {
            let perm = &perms[choice[f]];
            for (slot, &pt) in pts.iter().enumerate() {
                map[pt] = pts[perm[slot]];
            }
        }
        out.push(BoxPermutation::new(shape.clone(), map).expect("fiber permutations are bijections"));
        let mut i = fiber_count;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < per_fiber {
                break;
            }
            choice[i] = 0;
        }
    }
}

/// Finds the exact minimum `r <= r_max` such that `sigma` is a composition
/// of `r` one-dimensional factors, together with a witness sequence
/// (rightmost applied first). Returns `None` when no decomposition of
/// length at most `r_max` exists.
///
/// The search is breadth-first over composition length, deduplicating
/// composed mappings, so the returned `r` is minimal. `budget` caps the
/// number of states expanded; exceeding it is an error, never a silent
/// truncation.
pub fn min_factors_exhaustive(
    sigma: &BoxPermutation,
    r_max: usize,
    budget: usize,
) -> Result<Option<(usize, Vec<OneDimFactor>)>> {
    let shape = sigma.shape().clone();
    if sigma.is_identity() {
        return Ok(Some((0, Vec::new())));
    }
    if r_max == 0 {
        return Ok(None);
    }

    let generator_count: u128 = (0..shape.dim())
        .map(|axis| count_axis_generators(&shape, axis))
        .sum();
    if generator_count > budget as u128 {
        return Err(Error::resource(format!(
            "{generator_count} one-dimensional generators exceed the budget of {budget}"
        )));
    }
    let mut generators: Vec<(usize, BoxPermutation)> = Vec::new();
    for axis in 0..shape.dim() {
        for p in axis_generators(&shape, axis) {
            if !p.is_identity() {
                generators.push((axis, p));
            }
        }
    }

    // visited maps a reached mapping to (generator index, predecessor key).
    let identity = BoxPermutation::identity(shape.clone());
    let mut visited: HashMap<Vec<usize>, (usize, Vec<usize>)> = HashMap::new();
    let mut frontier = vec![identity.map().to_vec()];
    visited.insert(identity.map().to_vec(), (usize::MAX, Vec::new()));
    let mut expanded = 0usize;

    for depth in 1..=r_max {
        let mut next_frontier = Vec::new();
        for state in &frontier {
            expanded += 1;
            if expanded > budget {
                return Err(Error::resource(format!(
                    "search expanded more than {budget} states at depth {depth}"
                )));
            }
            for (gi, (_, g)) in generators.iter().enumerate() {
                // Extend the word on the right: new(x) = state(g(x)).
                let mut next = vec![0usize; state.len()];
                for (x, y) in next.iter_mut().enumerate() {
                    *y = state[g.apply(x)];
                }
                if visited.contains_key(&next) {
                    continue;
                }
                visited.insert(next.clone(), (gi, state.clone()));
                if next == sigma.map() {
                    // Reconstruct the word back to the identity.
                    let mut word = Vec::with_capacity(depth);
                    let mut key = next;
                    while let Some((gi, prev)) = visited.get(&key) {
                        if *gi == usize::MAX {
                            break;
                        }
                        let (axis, perm) = &generators[*gi];
                        word.push(OneDimFactor::new(*axis, perm.clone())?);
                        key = prev.clone();
                    }
                    // Walking back yields the first-applied factor first;
                    // stored order puts the last-applied factor first.
                    word.reverse();
                    return Ok(Some((depth, word)));
                }
                next_frontier.push(next);
            }
        }
        frontier = next_frontier;
        if frontier.is_empty() {
            return Ok(None);
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permdec::compose;

    fn shape(dims: &[usize]) -> BoxShape {
        BoxShape::new(dims.to_vec()).unwrap()
    }

    #[test]
    fn identity_needs_zero() {
        let s = shape(&[2, 2]);
        let id = BoxPermutation::identity(s);
        let (r, w) = min_factors_exhaustive(&id, 0, 10_000).unwrap().unwrap();
        assert_eq!(r, 0);
        assert!(w.is_empty());
    }

    #[test]
    fn corner_swap_2x2_needs_three() {
        let s = shape(&[2, 2]);
        let swap = BoxPermutation::corner_swap(s.clone()).unwrap();
        assert!(min_factors_exhaustive(&swap, 2, 1_000_000).unwrap().is_none());
        let (r, w) = min_factors_exhaustive(&swap, 3, 1_000_000).unwrap().unwrap();
        assert_eq!(r, 3);
        assert_eq!(compose(&s, &w).unwrap(), swap);
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let s = shape(&[2, 2]);
        let swap = BoxPermutation::corner_swap(s).unwrap();
        assert!(matches!(
            min_factors_exhaustive(&swap, 3, 5),
            Err(crate::error::Error::Resource(_))
        ));
    }

    #[test]
    fn one_dim_target_needs_one() {
        let s = shape(&[3, 2]);
        // Rotate axis 0 in one fiber only.
        let mut map: Vec<usize> = (0..6).collect();
        // Points (i, 0) have flat index 2i; cycle 0 -> 2 -> 4 -> 0.
        map[0] = 2;
        map[2] = 4;
        map[4] = 0;
        let sigma = BoxPermutation::new(s.clone(), map).unwrap();
        let (r, w) = min_factors_exhaustive(&sigma, 3, 1_000_000).unwrap().unwrap();
        assert_eq!(r, 1);
        assert_eq!(compose(&s, &w).unwrap(), sigma);
    }
}
