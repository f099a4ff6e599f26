use std::fmt;

use super::{fmt_rational, Cyclotomic, Rational, Scalar};
use crate::error::{Error, Result};

/// Dense row-major matrix over an exact field.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    zero: T,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize, proto: &T) -> Self {
        let zero = proto.zero_like();
        Matrix {
            rows,
            cols,
            data: vec![zero.clone(); rows * cols],
            zero,
        }
    }

    pub fn identity(n: usize, proto: &T) -> Self {
        let mut m = Self::zeros(n, n, proto);
        for i in 0..n {
            m.set(i, i, proto.one_like());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>, proto: &T) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            zero: proto.zero_like(),
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &T) {
        let idx = i * self.cols + j;
        self.data[idx] = self.data[idx].plus(v);
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn zero_value(&self) -> &T {
        &self.zero
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero_value)
    }

    pub fn map<U: Scalar>(&self, proto: &U, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            zero: proto.zero_like(),
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows, &self.zero);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    fn same_shape(&self, rhs: &Self) -> Result<()> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::Dimension(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.same_shape(rhs)?;
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a = a.plus(b);
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.same_shape(rhs)?;
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a = a.minus(b);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = a.times(c);
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols, &self.zero);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero_value() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(l, j);
                    if !b.is_zero_value() {
                        out.add_at(i, j, &a.times(b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.cols {
            return Err(Error::Dimension("vector length".into()));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(self.zero.clone(), |acc, (a, b)| acc.plus(&a.times(b)))
            })
            .collect())
    }

    /// `self - c * I`.
    pub fn shift_diagonal(&self, c: &T) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::Dimension("not square".into()));
        }
        let mut out = self.clone();
        for i in 0..self.rows {
            let v = out.get(i, i).minus(c);
            out.set(i, i, v);
        }
        Ok(out)
    }

    /// Stack matrices with equal column counts.
    pub fn vstack(parts: &[Self]) -> Result<Self> {
        let first = parts
            .first()
            .ok_or_else(|| Error::Dimension("empty stack".into()))?;
        if parts.iter().any(|m| m.cols != first.cols) {
            return Err(Error::Dimension("column counts differ".into()));
        }
        Ok(Matrix {
            rows: parts.iter().map(|m| m.rows).sum(),
            cols: first.cols,
            zero: first.zero.clone(),
            data: parts.iter().flat_map(|m| m.data.iter().cloned()).collect(),
        })
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&i| !m.get(i, col).is_zero_value()) else {
                continue;
            };
            m.swap_rows(p, row);
            let inv = m.get(row, col).try_inverse().expect("nonzero pivot");
            for j in col..m.cols {
                let v = m.get(row, j).times(&inv);
                m.set(row, j, v);
            }
            for i in 0..m.rows {
                if i == row || m.get(i, col).is_zero_value() {
                    continue;
                }
                let f = m.get(i, col).clone();
                for j in col..m.cols {
                    let pv = m.get(row, j);
                    if pv.is_zero_value() {
                        continue;
                    }
                    let v = m.get(i, j).minus(&f.times(pv));
                    m.set(i, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// A basis of `{v : A v = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<T>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![self.zero.clone(); self.cols];
            v[free] = self.zero.one_like();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = r.get(i, free).negated();
            }
            debug_assert!(self
                .mul_vec(&v)
                .map(|w| w.iter().all(Scalar::is_zero_value))
                .unwrap_or(false));
            basis.push(v);
        }
        basis
    }
}

impl Matrix<Rational> {
    pub fn rational_zeros(rows: usize, cols: usize) -> Self {
        Self::zeros(rows, cols, &Rational::default())
    }

    pub fn rational_identity(n: usize) -> Self {
        Self::identity(n, &Rational::default())
    }

    /// Rows of exact fraction strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            (0..self.rows)
                .map(|i| self.row(i).iter().map(|q| serde_json::Value::String(fmt_rational(q))).collect())
                .collect(),
        )
    }
}

impl Matrix<Cyclotomic> {
    /// Entrywise conversion, failing if some entry is irrational.
    pub fn to_rational(&self) -> Result<Matrix<Rational>> {
        let mut out = Matrix::rational_zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let q = self.get(i, j).to_rational().ok_or_else(|| {
                    Error::Invariant(format!("entry ({i},{j}) = {} is not rational", self.get(i, j)))
                })?;
                out.set(i, j, q);
            }
        }
        Ok(out)
    }
}

impl<T: Scalar> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{}\n{}", self.rows, self.cols, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, CyclotomicField};
    use proptest::prelude::*;

    fn qm(rows: &[&[i64]]) -> Matrix<Rational> {
        let rows = rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
        Matrix::from_rows(rows, &rat(0)).unwrap()
    }

    #[test]
    fn rank_and_nullspace() {
        let a = qm(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(a.mul_vec(&ns[0]).unwrap().iter().all(|x| *x == rat(0)));
    }

    #[test]
    fn dimension_errors() {
        let a = qm(&[&[1, 2]]);
        assert!(matches!(a.mul(&a), Err(Error::Dimension(_))));
        assert!(Matrix::from_rows(vec![vec![rat(1)], vec![]], &rat(0)).is_err());
    }

    #[test]
    fn cyclotomic_rank() {
        let f = CyclotomicField::get(3).unwrap();
        let z = Cyclotomic::zeta_pow(&f, 1);
        let one = Cyclotomic::one(&f);
        // [[1, z], [z^2, 1]] is singular since z * z^2 = 1
        let m = Matrix::from_rows(
            vec![vec![one.clone(), z.clone()], vec![z.times(&z), one.clone()]],
            &one,
        )
        .unwrap();
        assert_eq!(m.rank(), 1);
    }

    proptest! {
        #[test]
        fn rank_of_transpose(entries in proptest::collection::vec(-3i64..4, 12)) {
            let rows: Vec<Vec<Rational>> = entries.chunks(4).map(|c| c.iter().map(|&x| rat(x)).collect()).collect();
            let a = Matrix::from_rows(rows, &rat(0)).unwrap();
            prop_assert_eq!(a.rank(), a.transpose().rank());
            for v in a.nullspace() {
                prop_assert!(a.mul_vec(&v).unwrap().iter().all(|x| *x == rat(0)));
            }
        }

        #[test]
        fn field_axioms(a in proptest::collection::vec(-5i64..6, 4),
                        b in proptest::collection::vec(-5i64..6, 4),
                        c in proptest::collection::vec(-5i64..6, 4)) {
            let f = CyclotomicField::get(5).unwrap();
            let mk = |v: &[i64]| v.iter().enumerate().fold(Cyclotomic::zero(&f), |acc, (i, &x)| {
                acc.plus(&Cyclotomic::zeta_pow(&f, i as i64).scale(&rat(x)))
            });
            let (x, y, z) = (mk(&a), mk(&b), mk(&c));
            prop_assert_eq!(x.times(&y), y.times(&x));
            prop_assert_eq!(x.times(&y.plus(&z)), x.times(&y).plus(&x.times(&z)));
            prop_assert_eq!(x.times(&y).times(&z), x.times(&y.times(&z)));
            if !x.is_zero_value() {
                prop_assert!(x.times(&x.try_inverse().unwrap()).is_one_value());
            }
        }
    }
}
