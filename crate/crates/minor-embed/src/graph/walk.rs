//! Walks: non-empty vertex sequences, the carriers of embedding roads.

use crate::error::{Error, Result};

/// A walk given by its vertex sequence. A single vertex is a length-0 walk.
///
/// Adjacency of consecutive entries is a property of the ambient graph and
/// is checked where walks are used, not at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Walk {
    vertices: Vec<usize>,
}

impl Walk {
    pub fn new(vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::invalid("a walk must contain at least one vertex"));
        }
        Ok(Walk { vertices })
    }

    pub fn single(v: usize) -> Self {
        Walk { vertices: vec![v] }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    /// Number of steps, one less than the number of vertices.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn reversed(&self) -> Walk {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Walk { vertices }
    }

    /// Concatenates `other` onto this walk. The junction vertices must be
    /// equal; the duplicate is dropped.
    pub fn concat(&self, other: &Walk) -> Result<Walk> {
        if self.last() != other.first() {
            return Err(Error::invalid(format!(
                "walk junction mismatch: {} vs {}",
                self.last(),
                other.first()
            )));
        }
        let mut vertices = self.vertices.clone();
        vertices.extend_from_slice(&other.vertices[1..]);
        Ok(Walk { vertices })
    }

    /// Checks that every consecutive pair is an edge of `g`.
    pub fn is_walk_in(&self, g: &super::Graph) -> bool {
        self.vertices.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }
}

impl From<Walk> for Vec<usize> {
    fn from(w: Walk) -> Self {
        w.vertices
    }
}
