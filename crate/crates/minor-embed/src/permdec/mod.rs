//! Decomposition of box permutations into one-dimensional factors.
//!
//! A permutation of a box `[n_1] x ... x [n_d]` is one-dimensional if it
//! moves at most one coordinate of every point. Any box permutation splits
//! into at most `2d - 1` such factors arranged along the axis palindrome
//! `d-1, ..., 1, 0, 1, ..., d-1`, and the bound is tight: the swap of the
//! two corner points needs all `2d - 1` on boxes with every side >= 2.
//!
//! Composition convention throughout: in a factor sequence
//! `[f_0, f_1, ..., f_k]` the rightmost factor applies first, so the
//! composite is `f_0 . f_1 . ... . f_k` as functions.

mod decompose;
mod disperse;
mod search;

pub use decompose::{decompose, decompose_2d};
pub use disperse::{well_disperse, LabelMatrix};
pub use search::min_factors_exhaustive;

use crate::error::{Error, Result};

/// Shape of a box `[n_1] x ... x [n_d]`, coordinates 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxShape {
    dims: Vec<usize>,
}

impl BoxShape {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::usage("a box needs at least one dimension"));
        }
        if dims.iter().any(|&n| n == 0) {
            return Err(Error::usage("box dimensions must be positive"));
        }
        Ok(BoxShape { dims })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.dims.len()
    }

    pub fn point_count(&self) -> usize {
        self.dims.iter().product()
    }

    /// Row-major flattening, last coordinate fastest.
    pub fn flatten(&self, coords: &[usize]) -> usize {
        debug_assert_eq!(coords.len(), self.dims.len());
        let mut idx = 0;
        for (c, n) in coords.iter().zip(&self.dims) {
            debug_assert!(c < n);
            idx = idx * n + c;
        }
        idx
    }

    pub fn unflatten(&self, mut index: usize) -> Vec<usize> {
        let mut coords = vec![0; self.dims.len()];
        for i in (0..self.dims.len()).rev() {
            coords[i] = index % self.dims[i];
            index /= self.dims[i];
        }
        coords
    }
}

/// A bijection on the flat index set of a box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxPermutation {
    shape: BoxShape,
    map: Vec<usize>,
}

impl BoxPermutation {
    /// Validates that `map` is a bijection on `0..shape.point_count()`.
    pub fn new(shape: BoxShape, map: Vec<usize>) -> Result<Self> {
        let n = shape.point_count();
        if map.len() != n {
            return Err(Error::invalid(format!(
                "permutation has {} entries, box has {} points",
                map.len(),
                n
            )));
        }
        let mut seen = vec![false; n];
        for &y in &map {
            if y >= n || seen[y] {
                return Err(Error::invalid("mapping is not a bijection"));
            }
            seen[y] = true;
        }
        Ok(BoxPermutation { shape, map })
    }

    pub fn identity(shape: BoxShape) -> Self {
        let n = shape.point_count();
        BoxPermutation { shape, map: (0..n).collect() }
    }

    /// The permutation exchanging the all-zeros and all-ones corners.
    pub fn corner_swap(shape: BoxShape) -> Result<Self> {
        if shape.dims().iter().any(|&n| n < 2) {
            return Err(Error::usage("corner swap needs every dimension >= 2"));
        }
        let a = shape.flatten(&vec![0; shape.dim()]);
        let b = shape.flatten(&vec![1; shape.dim()]);
        let mut map: Vec<usize> = (0..shape.point_count()).collect();
        map.swap(a, b);
        Ok(BoxPermutation { shape, map })
    }

    pub fn shape(&self) -> &BoxShape {
        &self.shape
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &y)| i == y)
    }

    pub fn inverse(&self) -> BoxPermutation {
        let mut inv = vec![0; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y] = x;
        }
        BoxPermutation { shape: self.shape.clone(), map: inv }
    }

    /// Axes whose coordinate the permutation can change.
    pub fn moved_axes(&self) -> Vec<usize> {
        let d = self.shape.dim();
        let mut moved = vec![false; d];
        for (x, &y) in self.map.iter().enumerate() {
            if x != y {
                let cx = self.shape.unflatten(x);
                let cy = self.shape.unflatten(y);
                for i in 0..d {
                    if cx[i] != cy[i] {
                        moved[i] = true;
                    }
                }
            }
        }
        (0..d).filter(|&i| moved[i]).collect()
    }
}

/// A one-dimensional factor: a box permutation that moves only `axis`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneDimFactor {
    axis: usize,
    perm: BoxPermutation,
}

impl OneDimFactor {
    /// Checks, for every point, that only the declared axis moves.
    pub fn new(axis: usize, perm: BoxPermutation) -> Result<Self> {
        if axis >= perm.shape().dim() {
            return Err(Error::usage(format!("axis {axis} out of range")));
        }
        for (x, &y) in perm.map().iter().enumerate() {
            if x == y {
                continue;
            }
            let cx = perm.shape().unflatten(x);
            let cy = perm.shape().unflatten(y);
            for i in 0..cx.len() {
                if i != axis && cx[i] != cy[i] {
                    return Err(Error::invalid(format!(
                        "factor declared on axis {axis} moves axis {i} at point {x}"
                    )));
                }
            }
        }
        Ok(OneDimFactor { axis, perm })
    }

    pub fn identity(axis: usize, shape: BoxShape) -> Self {
        OneDimFactor { axis, perm: BoxPermutation::identity(shape) }
    }

    pub fn axis(&self) -> usize {
        self.axis
    }

    pub fn perm(&self) -> &BoxPermutation {
        &self.perm
    }

    pub fn shape(&self) -> &BoxShape {
        self.perm.shape()
    }
}

/// Composes factors, rightmost applied first. The empty sequence is the
/// identity on `shape`.
pub fn compose(shape: &BoxShape, factors: &[OneDimFactor]) -> Result<BoxPermutation> {
    for f in factors {
        if f.shape() != shape {
            return Err(Error::invalid(format!(
                "factor shape {:?} does not match {:?}",
                f.shape().dims(),
                shape.dims()
            )));
        }
    }
    let n = shape.point_count();
    let mut map: Vec<usize> = (0..n).collect();
    for f in factors.iter().rev() {
        for y in map.iter_mut() {
            *y = f.perm.apply(*y);
        }
    }
    // map[x] now holds f_0(f_1(...f_k(x)...)).
    let mut composed = vec![0; n];
    for (x, &y) in map.iter().enumerate() {
        composed[x] = y;
    }
    BoxPermutation::new(shape.clone(), composed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(dims: &[usize]) -> BoxShape {
        BoxShape::new(dims.to_vec()).unwrap()
    }

    #[test]
    fn flatten_is_row_major_last_fastest() {
        let s = shape(&[2, 3]);
        assert_eq!(s.flatten(&[0, 0]), 0);
        assert_eq!(s.flatten(&[0, 2]), 2);
        assert_eq!(s.flatten(&[1, 0]), 3);
        assert_eq!(s.unflatten(4), vec![1, 1]);
    }

    #[test]
    fn bijection_checked() {
        let s = shape(&[2, 2]);
        assert!(BoxPermutation::new(s.clone(), vec![0, 0, 1, 2]).is_err());
        assert!(BoxPermutation::new(s.clone(), vec![0, 1, 2]).is_err());
        assert!(BoxPermutation::new(s, vec![3, 2, 1, 0]).is_ok());
    }

    #[test]
    fn one_dim_factor_validation() {
        let s = shape(&[2, 2]);
        // Swap (0,0) <-> (0,1): moves axis 1 only.
        let mut map: Vec<usize> = (0..4).collect();
        map.swap(0, 1);
        let p = BoxPermutation::new(s.clone(), map).unwrap();
        assert!(OneDimFactor::new(1, p.clone()).is_ok());
        assert!(OneDimFactor::new(0, p).is_err());
    }

    #[test]
    fn compose_empty_is_identity() {
        let s = shape(&[3, 2]);
        let p = compose(&s, &[]).unwrap();
        assert!(p.is_identity());
    }

    #[test]
    fn compose_rightmost_first() {
        // f moves axis 1 (cyclic shift), g moves axis 0 (swap rows); check
        // compose([g, f]) applies f first.
        let s = shape(&[2, 2]);
        let f = OneDimFactor::new(
            1,
            BoxPermutation::new(s.clone(), vec![1, 0, 2, 3]).unwrap(),
        )
        .unwrap();
        let g = OneDimFactor::new(
            0,
            BoxPermutation::new(s.clone(), vec![2, 1, 0, 3]).unwrap(),
        )
        .unwrap();
        let gf = compose(&s, &[g.clone(), f.clone()]).unwrap();
        // x=0: f(0)=1, g(1)=1.
        assert_eq!(gf.apply(0), 1);
        // x=1: f(1)=0, g(0)=2.
        assert_eq!(gf.apply(1), 2);
        let fg = compose(&s, &[f, g]).unwrap();
        // x=0: g(0)=2, f(2)=2.
        assert_eq!(fg.apply(0), 2);
    }

    #[test]
    fn compose_shape_mismatch() {
        let s = shape(&[2, 2]);
        let t = shape(&[4]);
        let f = OneDimFactor::identity(0, t);
        assert!(compose(&s, &[f]).is_err());
    }

    #[test]
    fn moved_axes_of_corner_swap() {
        let s = shape(&[2, 2, 2]);
        let p = BoxPermutation::corner_swap(s).unwrap();
        assert_eq!(p.moved_axes(), vec![0, 1, 2]);
    }
}
