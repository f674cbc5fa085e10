//! The well-dispersed rearrangement: permuting within rows until every
//! column holds all labels.

use crate::error::{Error, Result};

/// An `m x n` matrix over labels `0..m`, each label appearing in exactly
/// `n` entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<usize>>,
}

impl LabelMatrix {
    pub fn new(entries: Vec<Vec<usize>>) -> Result<Self> {
        let rows = entries.len();
        if rows == 0 {
            return Err(Error::usage("label matrix needs at least one row"));
        }
        let cols = entries[0].len();
        if cols == 0 || entries.iter().any(|r| r.len() != cols) {
            return Err(Error::usage("label matrix rows must be non-empty and equal length"));
        }
        let mut counts = vec![0usize; rows];
        for row in &entries {
            for &l in row {
                if l >= rows {
                    return Err(Error::invalid(format!("label {l} out of range 0..{rows}")));
                }
                counts[l] += 1;
            }
        }
        for (l, &c) in counts.iter().enumerate() {
            if c != cols {
                return Err(Error::invalid(format!(
                    "label {l} appears {c} times, expected {cols}"
                )));
            }
        }
        Ok(LabelMatrix { rows, cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.entries[i][j]
    }

    /// Every column contains all `rows` labels.
    pub fn is_well_dispersed(&self) -> bool {
        for j in 0..self.cols {
            let mut seen = vec![false; self.rows];
            for i in 0..self.rows {
                let l = self.entries[i][j];
                if seen[l] {
                    return false;
                }
                seen[l] = true;
            }
        }
        true
    }

    /// Applies per-row position permutations: entry `(i, j)` of the result
    /// is entry `(i, perm[i][j])` of `self`.
    pub fn permute_rows(&self, perms: &[Vec<usize>]) -> Result<LabelMatrix> {
        if perms.len() != self.rows {
            return Err(Error::invalid("need one permutation per row"));
        }
        let mut entries = Vec::with_capacity(self.rows);
        for (row, perm) in self.entries.iter().zip(perms) {
            if perm.len() != self.cols {
                return Err(Error::invalid("row permutation length mismatch"));
            }
            let mut new_row = Vec::with_capacity(self.cols);
            for &p in perm {
                if p >= self.cols {
                    return Err(Error::invalid("row permutation index out of range"));
                }
                new_row.push(row[p]);
            }
            entries.push(new_row);
        }
        LabelMatrix::new(entries)
    }
}

/// Kuhn-style augmenting matching of rows to labels; `avail[i]` lists the
/// labels still present in row `i`'s unfixed suffix.
fn perfect_matching(m: usize, avail: &[Vec<bool>]) -> Option<Vec<usize>> {
    let mut row_of_label = vec![usize::MAX; m];
    fn try_row(
        i: usize,
        avail: &[Vec<bool>],
        visited: &mut [bool],
        row_of_label: &mut [usize],
    ) -> bool {
        for l in 0..avail[i].len() {
            if avail[i][l] && !visited[l] {
                visited[l] = true;
                if row_of_label[l] == usize::MAX
                    || try_row(row_of_label[l], avail, visited, row_of_label)
                {
                    row_of_label[l] = i;
                    return true;
                }
            }
        }
        false
    }
    for i in 0..m {
        let mut visited = vec![false; m];
        if !try_row(i, avail, &mut visited, &mut row_of_label) {
            return None;
        }
    }
    let mut label_of_row = vec![usize::MAX; m];
    for (l, &i) in row_of_label.iter().enumerate() {
        label_of_row[i] = l;
    }
    Some(label_of_row)
}

/// Finds per-row permutations making every column of the matrix contain all
/// labels, without changing any row's multiset.
///
/// Column positions are fixed left to right. At each position the rows are
/// matched to distinct labels drawn from their unfixed suffixes; the counting
/// invariant (every label occurs equally often in the suffix) keeps the
/// matching feasible at every step.
pub fn well_disperse(a: &LabelMatrix) -> Result<Vec<Vec<usize>>> {
    let (m, n) = (a.rows(), a.cols());
    // work[i] holds the row contents; pos[i][j] tracks which original
    // column the entry now at position j came from.
    let mut work: Vec<Vec<usize>> = (0..m).map(|i| (0..n).map(|j| a.entry(i, j)).collect()).collect();
    let mut pos: Vec<Vec<usize>> = (0..m).map(|_| (0..n).collect()).collect();
    for j in 0..n {
        let mut avail = vec![vec![false; m]; m];
        for i in 0..m {
            for p in j..n {
                avail[i][work[i][p]] = true;
            }
        }
        let assignment = perfect_matching(m, &avail)
            .ok_or_else(|| Error::invalid("matching infeasible; label counts violated"))?;
        for i in 0..m {
            let want = assignment[i];
            let p = (j..n)
                .find(|&p| work[i][p] == want)
                .expect("matched label present in suffix");
            work[i].swap(j, p);
            pos[i].swap(j, p);
        }
    }
    debug_assert!(a.permute_rows(&pos).map(|r| r.is_well_dispersed()).unwrap_or(false));
    Ok(pos)
}
