//! Exact Cheeger constants by exhaustive cut search, plus a spectral lower
//! bound for graphs beyond the exhaustive limit.

use crate::error::{Error, Result};
use crate::graph::Graph;
use num::rational::Ratio;

const EXHAUSTIVE_LIMIT: usize = 24;

/// A witnessing cut: subset, boundary edge count, and the exact ratio.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheegerCut {
    pub subset: Vec<usize>,
    pub boundary: usize,
    pub ratio: Ratio<u64>,
}

/// Exact Cheeger constant over all non-empty subsets of at most half the
/// vertices. Ties resolve to the lexicographically least subset as a sorted
/// vertex list.
pub fn cheeger_exact(g: &Graph) -> Result<(Ratio<u64>, CheegerCut)> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::usage("cheeger constant needs at least 2 vertices"));
    }
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::resource(format!(
            "{n} vertices exceed the exhaustive limit of {EXHAUSTIVE_LIMIT}; use the spectral bound"
        )));
    }
    let adj: Vec<u64> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | (1 << w)))
        .collect();
    let mut best: Option<(Ratio<u64>, u64, usize)> = None;
    let full = (1u64 << n) - 1;
    for mask in 1..=full {
        let size = mask.count_ones() as usize;
        if 2 * size > n {
            continue;
        }
        let mut boundary = 0usize;
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            boundary += (adj[v] & !mask).count_ones() as usize;
        }
        let ratio = Ratio::new(boundary as u64, size as u64);
        let better = match &best {
            None => true,
            Some((r, bmask, _)) => {
                ratio < *r || (ratio == *r && lex_less(mask, *bmask))
            }
        };
        if better {
            best = Some((ratio, mask, boundary));
        }
    }
    let (ratio, mask, boundary) = best.expect("at least one subset exists");
    let subset: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
    Ok((ratio, CheegerCut { subset, boundary, ratio }))
}

/// Sorted-vertex-list lexicographic order on subset masks.
fn lex_less(a: u64, b: u64) -> bool {
    let mut x = a;
    let mut y = b;
    while x != 0 && y != 0 {
        let va = x.trailing_zeros();
        let vb = y.trailing_zeros();
        if va != vb {
            return va < vb;
        }
        x &= x - 1;
        y &= y - 1;
    }
    x == 0 && y != 0
}

/// Spectral lower bound `h(G) >= lambda_2 / 2` from the Laplacian's
/// algebraic connectivity, computed by power iteration on the complement
/// shift with the constant vector projected out. An estimate, not a
/// certificate.
pub fn cheeger_spectral_lower_bound(g: &Graph) -> Result<f64> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::usage("spectral bound needs at least 2 vertices"));
    }
    let shift = 2.0 * g.max_degree() as f64;
    // y = (shift I - L) x, restricted to the complement of constants.
    let apply = |x: &[f64]| -> Vec<f64> {
        let mut y = vec![0.0; n];
        for v in 0..n {
            let deg = g.degree(v) as f64;
            y[v] = (shift - deg) * x[v];
            for &w in g.neighbors(v) {
                y[v] += x[w];
            }
        }
        let mean = y.iter().sum::<f64>() / n as f64;
        for t in y.iter_mut() {
            *t -= mean;
        }
        y
    };
    let mut x: Vec<f64> = (0..n).map(|i| ((i * 2654435761 + 1) % 1000) as f64 / 1000.0 - 0.5).collect();
    let mean = x.iter().sum::<f64>() / n as f64;
    for t in x.iter_mut() {
        *t -= mean;
    }
    let mut eigen = 0.0;
    for _ in 0..200 {
        let y = apply(&x);
        let norm = y.iter().map(|t| t * t).sum::<f64>().sqrt();
        if norm < 1e-300 {
            break;
        }
        eigen = x.iter().zip(&y).map(|(a, b)| a * b).sum::<f64>()
            / x.iter().map(|t| t * t).sum::<f64>();
        x = y.into_iter().map(|t| t / norm).collect();
    }
    let lambda2 = (shift - eigen).max(0.0);
    Ok(lambda2 / 2.0)
}
