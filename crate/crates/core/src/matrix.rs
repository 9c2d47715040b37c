//! Dense row-major matrices and the exact elimination routines built on them.
//!
//! A [`DenseMatrix`] carries no basis tag; callers keep track of which basis
//! a Bézout or resultant matrix is expressed in.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut};

use crate::count::{Ops, Uncounted};
use crate::error::Error;
use crate::field::Field;

#[derive(Clone, PartialEq)]
pub struct DenseMatrix<F> {
    rows: usize,
    cols: usize,
    entries: Vec<F>,
}

impl<F: Field> DenseMatrix<F> {
    /// Builds a matrix from row-major entries.
    pub fn new(rows: usize, cols: usize, entries: Vec<F>) -> Result<Self, Error> {
        if rows == 0 || cols == 0 {
            return Err(Error::Dimension("matrix must have at least one row and column"));
        }
        if entries.len() != rows * cols {
            return Err(Error::Dimension("entry count differs from rows * cols"));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self, Error> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged rows"));
        }
        let n = rows.len();
        Self::new(n, cols, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| F::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, F::one())
    }

    /// `value · I`.
    pub fn scalar(n: usize, value: F) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { value.clone() } else { F::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[F] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<F> {
        self.entries
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        self.entries.chunks(self.cols).map(<[F]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(F::is_zero)
    }

    pub fn map<G: Field>(&self, f: impl FnMut(&F) -> G) -> DenseMatrix<G> {
        DenseMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    pub fn mul_with<O: Ops>(&self, rhs: &Self, ops: &mut O) -> Result<Self, Error> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension("inner dimensions differ in product"));
        }
        let mut out = Vec::with_capacity(self.rows * rhs.cols);
        for i in 0..self.rows {
            let row = self.row(i);
            for j in 0..rhs.cols {
                let mut acc = ops.mul(&row[0], &rhs[(0, j)]);
                for k in 1..self.cols {
                    let t = ops.mul(&row[k], &rhs[(k, j)]);
                    acc = ops.add(&acc, &t);
                }
                out.push(acc);
            }
        }
        Ok(Self { rows: self.rows, cols: rhs.cols, entries: out })
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, Error> {
        self.mul_with(rhs, &mut Uncounted)
    }

    pub fn add_with<O: Ops>(&self, rhs: &Self, ops: &mut O) -> Result<Self, Error> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::Dimension("shapes differ in sum"));
        }
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| ops.add(a, b)).collect();
        Ok(Self { rows: self.rows, cols: self.cols, entries })
    }

    /// Adds `value` to every diagonal entry in place.
    pub fn add_diagonal_with<O: Ops>(&mut self, value: &F, ops: &mut O) {
        for i in 0..self.rows.min(self.cols) {
            let v = ops.add(&self[(i, i)], value);
            self[(i, i)] = v;
        }
    }
}

impl<F> Index<(usize, usize)> for DenseMatrix<F> {
    type Output = F;

    fn index(&self, (i, j): (usize, usize)) -> &F {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.entries[i * self.cols + j]
    }
}

impl<F> IndexMut<(usize, usize)> for DenseMatrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &mut self.entries[i * self.cols + j]
    }
}

impl<F: fmt::Display> fmt::Debug for DenseMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.entries[i * self.cols + j])?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// Row index of the pivot for column `col`, searching rows `from..`.
///
/// Exact fields take the first nonzero entry so results are reproducible;
/// floats take the entry of largest magnitude.
fn pick_pivot<F: Field>(m: &DenseMatrix<F>, col: usize, from: usize) -> Option<usize> {
    if F::EXACT {
        (from..m.rows).find(|&r| !m[(r, col)].is_zero())
    } else {
        (from..m.rows).filter(|&r| !m[(r, col)].is_zero()).max_by(|&a, &b| {
            m[(a, col)].magnitude().partial_cmp(&m[(b, col)].magnitude()).unwrap_or(core::cmp::Ordering::Equal)
        })
    }
}

fn swap_rows<F>(m: &mut DenseMatrix<F>, a: usize, b: usize) {
    if a != b {
        for j in 0..m.cols {
            m.entries.swap(a * m.cols + j, b * m.cols + j);
        }
    }
}

/// Solves `A · X = B` by Gaussian elimination with back substitution.
pub fn solve_linear_with<F: Field, O: Ops>(
    a: &DenseMatrix<F>,
    b: &DenseMatrix<F>,
    ops: &mut O,
) -> Result<DenseMatrix<F>, Error> {
    if !a.is_square() {
        return Err(Error::Dimension("coefficient matrix must be square"));
    }
    if b.rows != a.rows {
        return Err(Error::Dimension("right-hand side row count differs"));
    }
    let n = a.rows;
    let mut a = a.clone();
    let mut b = b.clone();
    for col in 0..n {
        let p = pick_pivot(&a, col, col).ok_or(Error::Singular)?;
        swap_rows(&mut a, p, col);
        swap_rows(&mut b, p, col);
        for r in col + 1..n {
            if a[(r, col)].is_zero() {
                continue;
            }
            let factor = ops.div(&a[(r, col)], &a[(col, col)]);
            a[(r, col)] = F::zero();
            for j in col + 1..n {
                let t = ops.mul(&factor, &a[(col, j)]);
                a[(r, j)] = ops.sub(&a[(r, j)], &t);
            }
            for j in 0..b.cols {
                let t = ops.mul(&factor, &b[(col, j)]);
                b[(r, j)] = ops.sub(&b[(r, j)], &t);
            }
        }
    }
    let mut x = DenseMatrix::zeros(n, b.cols);
    for j in 0..b.cols {
        for i in (0..n).rev() {
            let mut acc = b[(i, j)].clone();
            for k in i + 1..n {
                let t = ops.mul(&a[(i, k)], &x[(k, j)]);
                acc = ops.sub(&acc, &t);
            }
            x[(i, j)] = ops.div(&acc, &a[(i, i)]);
        }
    }
    Ok(x)
}

/// Solves `A · X = B`. Fails with [`Error::Singular`] when `A` is singular.
pub fn solve_linear<F: Field>(a: &DenseMatrix<F>, b: &DenseMatrix<F>) -> Result<DenseMatrix<F>, Error> {
    solve_linear_with(a, b, &mut Uncounted)
}

/// Determinant by elimination, tracking row-swap signs.
pub fn determinant_with<F: Field, O: Ops>(a: &DenseMatrix<F>, ops: &mut O) -> Result<F, Error> {
    if !a.is_square() {
        return Err(Error::Dimension("determinant of a non-square matrix"));
    }
    let n = a.rows;
    let mut a = a.clone();
    let mut negate = false;
    let mut det = F::one();
    for col in 0..n {
        let Some(p) = pick_pivot(&a, col, col) else {
            return Ok(F::zero());
        };
        if p != col {
            swap_rows(&mut a, p, col);
            negate = !negate;
        }
        for r in col + 1..n {
            if a[(r, col)].is_zero() {
                continue;
            }
            let factor = ops.div(&a[(r, col)], &a[(col, col)]);
            for j in col + 1..n {
                let t = ops.mul(&factor, &a[(col, j)]);
                a[(r, j)] = ops.sub(&a[(r, j)], &t);
            }
        }
        det = ops.mul(&det, &a[(col, col)]);
    }
    Ok(if negate { ops.neg(&det) } else { det })
}

pub fn determinant<F: Field>(a: &DenseMatrix<F>) -> Result<F, Error> {
    determinant_with(a, &mut Uncounted)
}

/// Inverse of a unit upper-triangular matrix by back substitution.
///
/// The unit diagonal is assumed, not checked; entries below it are ignored.
pub fn invert_unit_upper_with<F: Field, O: Ops>(u: &DenseMatrix<F>, ops: &mut O) -> Result<DenseMatrix<F>, Error> {
    if !u.is_square() {
        return Err(Error::Dimension("triangular inverse of a non-square matrix"));
    }
    let n = u.rows;
    let mut w = DenseMatrix::identity(n);
    // Column j of W solves U w = e_j; w is zero below row j.
    for j in 0..n {
        for i in (0..j).rev() {
            let mut acc = ops.mul(&u[(i, i + 1)], &w[(i + 1, j)]);
            for k in i + 2..=j {
                let t = ops.mul(&u[(i, k)], &w[(k, j)]);
                acc = ops.add(&acc, &t);
            }
            w[(i, j)] = ops.neg(&acc);
        }
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use alloc::vec;

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    fn qm(rows: &[&[i64]]) -> DenseMatrix<Rational> {
        DenseMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect()).unwrap()
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(DenseMatrix::<Rational>::new(2, 2, vec![q(1)]).is_err());
        assert!(DenseMatrix::<Rational>::from_rows(vec![vec![q(1)], vec![q(1), q(2)]]).is_err());
        assert!(qm(&[&[1, 2]]).mul(&qm(&[&[1, 2]])).is_err());
    }

    #[test]
    fn solve_with_identity_returns_rhs() {
        let b = qm(&[&[3, -1], &[4, 9]]);
        assert_eq!(solve_linear(&DenseMatrix::identity(2), &b).unwrap(), b);
    }

    #[test]
    fn diagonal_inverse() {
        let x = solve_linear(&qm(&[&[2, 0], &[0, 4]]), &DenseMatrix::identity(2)).unwrap();
        let expected = DenseMatrix::from_rows(vec![
            vec![Rational::new(1.into(), 2.into()), q(0)],
            vec![q(0), Rational::new(1.into(), 4.into())],
        ])
        .unwrap();
        assert_eq!(x, expected);
    }

    #[test]
    fn solve_needs_row_swap() {
        let a = qm(&[&[0, 1], &[1, 0]]);
        let b = qm(&[&[5], &[7]]);
        assert_eq!(solve_linear(&a, &b).unwrap(), qm(&[&[7], &[5]]));
    }

    #[test]
    fn singular_solve_fails() {
        let a = qm(&[&[1, 2], &[2, 4]]);
        assert_eq!(solve_linear(&a, &DenseMatrix::identity(2)), Err(Error::Singular));
        let f = DenseMatrix::<f64>::from_rows(vec![vec![1.0, 2.0], vec![2.0, 4.0]]).unwrap();
        assert_eq!(solve_linear(&f, &DenseMatrix::identity(2)), Err(Error::Singular));
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(&DenseMatrix::<Rational>::identity(4)).unwrap(), q(1));
        assert_eq!(determinant(&qm(&[&[1, -2], &[-2, 1]])).unwrap(), q(-3));
        assert_eq!(determinant(&qm(&[&[1, 2, 3], &[4, 5, 6], &[1, 2, 3]])).unwrap(), q(0));
        assert_eq!(determinant(&qm(&[&[0, 1], &[1, 0]])).unwrap(), q(-1));
    }

    #[test]
    fn float_pivoting_by_magnitude() {
        let a = DenseMatrix::<f64>::from_rows(vec![vec![1e-20, 1.0], vec![1.0, 1.0]]).unwrap();
        let b = DenseMatrix::<f64>::from_rows(vec![vec![1.0], vec![2.0]]).unwrap();
        let x = solve_linear(&a, &b).unwrap();
        assert!((x[(0, 0)] - 1.0).abs() < 1e-12);
        assert!((x[(1, 0)] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn unit_upper_inverse() {
        let u = qm(&[&[1, 1, 0], &[0, 1, 1], &[0, 0, 1]]);
        let w = invert_unit_upper_with(&u, &mut Uncounted).unwrap();
        assert_eq!(u.mul(&w).unwrap(), DenseMatrix::identity(3));
        assert_eq!(w, qm(&[&[1, -1, 1], &[0, 1, -1], &[0, 0, 1]]));
    }

    #[test]
    fn product_counts_are_cubic() {
        let a = DenseMatrix::<f64>::identity(3);
        let (_, c) = crate::with_counting(|ops| a.mul_with(&a, ops).unwrap());
        assert_eq!((c.multiplications, c.additions), (27, 18));
    }
}
