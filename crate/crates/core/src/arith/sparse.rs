use std::collections::BTreeMap;

use super::Scalar;

/// Incremental row echelon form for sparse rows, tracking only the rank.
///
/// Rows generated by monomial commutation equations have two terms, and
/// reducing them against two-term pivots keeps them at two terms.
#[derive(Clone, Debug)]
pub struct SparseEchelon<T> {
    cols: usize,
    /// Leading column to pivot row; each pivot row starts with coefficient 1.
    pivots: BTreeMap<usize, Vec<(usize, T)>>,
}

impl<T: Scalar> SparseEchelon<T> {
    pub fn new(cols: usize) -> Self {
        SparseEchelon {
            cols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Insert a row given as `(column, value)` pairs. Returns true when the rank grew.
    pub fn insert(&mut self, terms: Vec<(usize, T)>) -> bool {
        let mut row = normalize(terms);
        while let Some((lead, c)) = row.first().cloned() {
            debug_assert!(lead < self.cols);
            match self.pivots.get(&lead) {
                Some(p) => row = axpy(&row, &c, p),
                None => {
                    let inv = c.try_inverse().expect("nonzero lead");
                    let row = row.into_iter().map(|(j, v)| (j, v.times(&inv))).collect();
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
        false
    }
}

fn normalize<T: Scalar>(mut terms: Vec<(usize, T)>) -> Vec<(usize, T)> {
    terms.sort_by_key(|t| t.0);
    let mut out: Vec<(usize, T)> = Vec::with_capacity(terms.len());
    for (j, v) in terms {
        match out.last_mut() {
            Some((lj, lv)) if *lj == j => *lv = lv.plus(&v),
            _ => out.push((j, v)),
        }
    }
    out.retain(|t| !t.1.is_zero_value());
    out
}

/// `row - c * pivot`, both sorted by column.
fn axpy<T: Scalar>(row: &[(usize, T)], c: &T, pivot: &[(usize, T)]) -> Vec<(usize, T)> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let take_row = j == pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_piv = i == row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        if take_row {
            out.push(row[i].clone());
            i += 1;
        } else if take_piv {
            out.push((pivot[j].0, c.times(&pivot[j].1).negated()));
            j += 1;
        } else {
            let v = row[i].1.minus(&c.times(&pivot[j].1));
            if !v.is_zero_value() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}
