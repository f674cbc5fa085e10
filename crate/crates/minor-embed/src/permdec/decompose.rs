//! Constructive factorization of a box permutation into `2d - 1`
//! one-dimensional factors.

use super::disperse::{well_disperse, LabelMatrix};
use super::{compose, BoxPermutation, BoxShape, OneDimFactor};
use crate::error::{Error, Result};

/// Two-dimensional base case. Returns `[g_last, g_mid, g_first]` with axes
/// `[1, 0, 1]` whose rightmost-first composition equals `sigma`.
///
/// Working on the matrix whose `(i, j)` entry is `sigma^{-1}(i, j)`:
/// rearranging within rows until first coordinates are rainbow per column
/// (an axis-1 move), sorting first coordinates within columns (axis 0),
/// then sorting second coordinates within rows (axis 1) brings every entry
/// home, and the three moves read off the factors.
pub fn decompose_2d(sigma: &BoxPermutation) -> Result<[OneDimFactor; 3]> {
    let shape = sigma.shape().clone();
    if shape.dim() != 2 {
        return Err(Error::usage(format!("decompose_2d needs d = 2, got d = {}", shape.dim())));
    }
    let (m, n) = (shape.dims()[0], shape.dims()[1]);
    let inv = sigma.inverse();

    // a[i][j] = sigma^{-1}(i, j), stored as a flat point index.
    let a: Vec<Vec<usize>> = (0..m)
        .map(|i| (0..n).map(|j| inv.apply(shape.flatten(&[i, j]))).collect())
        .collect();

    // Rainbow the first coordinates within rows.
    let first_coords =
        LabelMatrix::new(a.iter().map(|row| row.iter().map(|&p| p / n).collect()).collect())?;
    let row_perms = well_disperse(&first_coords)?;
    let mut g_last_map = vec![0usize; m * n];
    for i in 0..m {
        for j in 0..n {
            g_last_map[shape.flatten(&[i, j])] = shape.flatten(&[i, row_perms[i][j]]);
        }
    }
    let g_last = OneDimFactor::new(1, BoxPermutation::new(shape.clone(), g_last_map)?)?;
    let b: Vec<Vec<usize>> = (0..m)
        .map(|i| (0..n).map(|j| a[i][row_perms[i][j]]).collect())
        .collect();

    // Sort first coordinates within each column; every column holds each
    // first coordinate exactly once now.
    let mut g_mid_map = vec![0usize; m * n];
    let mut c = vec![vec![0usize; n]; m];
    for j in 0..n {
        let mut row_with = vec![usize::MAX; m];
        for i in 0..m {
            row_with[b[i][j] / n] = i;
        }
        for i in 0..m {
            let src = row_with[i];
            g_mid_map[shape.flatten(&[i, j])] = shape.flatten(&[src, j]);
            c[i][j] = b[src][j];
        }
    }
    let g_mid = OneDimFactor::new(0, BoxPermutation::new(shape.clone(), g_mid_map)?)?;

    // Sort second coordinates within each row.
    let mut g_first_map = vec![0usize; m * n];
    for i in 0..m {
        let mut col_with = vec![usize::MAX; n];
        for j in 0..n {
            col_with[c[i][j] % n] = j;
        }
        for j in 0..n {
            g_first_map[shape.flatten(&[i, j])] = shape.flatten(&[i, col_with[j]]);
        }
    }
    let g_first = OneDimFactor::new(1, BoxPermutation::new(shape, g_first_map)?)?;

    debug_assert_eq!(
        &compose(sigma.shape(), &[g_last.clone(), g_mid.clone(), g_first.clone()])?,
        sigma
    );
    Ok([g_last, g_mid, g_first])
}

/// Factors `sigma` into exactly `2d - 1` one-dimensional factors with the
/// axis palindrome `d-1, ..., 1, 0, 1, ..., d-1` (identity factors where the
/// permutation needs fewer). Rightmost factor applies first.
pub fn decompose(sigma: &BoxPermutation) -> Result<Vec<OneDimFactor>> {
    let shape = sigma.shape().clone();
    let d = shape.dim();
    if d == 1 {
        return Ok(vec![OneDimFactor::new(0, sigma.clone())?]);
    }

    // View the box as [prefix] x [n_last] and run the base case there; the
    // flat index sets coincide, so the mapping carries over unchanged.
    let n_last = shape.dims()[d - 1];
    let prefix_size = shape.point_count() / n_last;
    let view = BoxShape::new(vec![prefix_size, n_last])?;
    let sigma_view = BoxPermutation::new(view.clone(), sigma.map().to_vec())?;
    let [v_last, v_mid, v_first] = decompose_2d(&sigma_view)?;

    let g_last = OneDimFactor::new(d - 1, BoxPermutation::new(shape.clone(), v_last.perm().map().to_vec())?)?;
    let g_first = OneDimFactor::new(d - 1, BoxPermutation::new(shape.clone(), v_first.perm().map().to_vec())?)?;

    // The middle factor fixes the last coordinate; split it into slices,
    // recurse, and unify slice factors position by position.
    let prefix_shape = BoxShape::new(shape.dims()[..d - 1].to_vec())?;
    let mut slice_factors: Vec<Vec<OneDimFactor>> = Vec::with_capacity(n_last);
    for s in 0..n_last {
        let mut slice_map = vec![0usize; prefix_size];
        for y in 0..prefix_size {
            let image = v_mid.perm().apply(y * n_last + s);
            debug_assert_eq!(image % n_last, s);
            slice_map[y] = image / n_last;
        }
        let tau_s = BoxPermutation::new(prefix_shape.clone(), slice_map)?;
        slice_factors.push(decompose(&tau_s)?);
    }

    let inner_len = 2 * (d - 1) - 1;
    let mut middle = Vec::with_capacity(inner_len);
    for q in 0..inner_len {
        let axis = slice_factors[0][q].axis();
        let mut map = vec![0usize; shape.point_count()];
        for s in 0..n_last {
            debug_assert_eq!(slice_factors[s][q].axis(), axis);
            for y in 0..prefix_size {
                map[y * n_last + s] = slice_factors[s][q].perm().apply(y) * n_last + s;
            }
        }
        middle.push(OneDimFactor::new(axis, BoxPermutation::new(shape.clone(), map)?)?);
    }

    let mut factors = Vec::with_capacity(2 * d - 1);
    factors.push(g_last);
    factors.extend(middle);
    factors.push(g_first);
    Ok(factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn shape(dims: &[usize]) -> BoxShape {
        BoxShape::new(dims.to_vec()).unwrap()
    }

    fn random_perm(s: &BoxShape, rng: &mut impl rand::Rng) -> BoxPermutation {
        let mut map: Vec<usize> = (0..s.point_count()).collect();
        map.shuffle(rng);
        BoxPermutation::new(s.clone(), map).unwrap()
    }

    #[test]
    fn identity_decomposes_to_identities() {
        for dims in [vec![2, 2], vec![3, 2, 2], vec![4]] {
            let s = shape(&dims);
            let id = BoxPermutation::identity(s.clone());
            let factors = decompose(&id).unwrap();
            assert_eq!(factors.len(), 2 * dims.len() - 1);
            assert!(factors.iter().all(|f| f.perm().is_identity()));
        }
    }

    #[test]
    fn d1_returns_sigma_itself() {
        let s = shape(&[5]);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let sigma = random_perm(&s, &mut rng);
        let factors = decompose(&sigma).unwrap();
        assert_eq!(factors.len(), 1);
        assert_eq!(factors[0].perm(), &sigma);
    }

    #[test]
    fn corner_swap_2x2_composes_back() {
        let s = shape(&[2, 2]);
        let swap = BoxPermutation::corner_swap(s.clone()).unwrap();
        let factors = decompose_2d(&swap).unwrap();
        let composed = compose(&s, &factors.to_vec()).unwrap();
        assert_eq!(composed, swap);
    }

    #[test]
    fn axis_palindrome() {
        let s = shape(&[2, 3, 2]);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let sigma = random_perm(&s, &mut rng);
        let factors = decompose(&sigma).unwrap();
        let axes: Vec<usize> = factors.iter().map(|f| f.axis()).collect();
        assert_eq!(axes, vec![2, 1, 0, 1, 2]);
    }

    #[test]
    fn random_2d_roundtrip() {
        let s = shape(&[4, 5]);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        for _ in 0..500 {
            let sigma = random_perm(&s, &mut rng);
            let factors = decompose_2d(&sigma).unwrap();
            assert_eq!(compose(&s, &factors.to_vec()).unwrap(), sigma);
        }
    }

    #[test]
    fn random_3d_roundtrip() {
        let s = shape(&[3, 3, 2]);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(22);
        for _ in 0..1000 {
            let sigma = random_perm(&s, &mut rng);
            let factors = decompose(&sigma).unwrap();
            assert!(factors.len() <= 5);
            assert_eq!(compose(&s, &factors).unwrap(), sigma);
        }
    }

    #[test]
    fn degenerate_dims_allowed() {
        let s = shape(&[1, 4, 1]);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..50 {
            let sigma = random_perm(&s, &mut rng);
            let factors = decompose(&sigma).unwrap();
            assert_eq!(compose(&s, &factors).unwrap(), sigma);
        }
    }
}
