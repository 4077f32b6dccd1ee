//! Dense matrices over an exact field.

use std::fmt;

use crate::scalar::Field;

/// Result of a linear solve.
#[derive(Clone, Debug, PartialEq)]
pub enum Solution<T> {
    Unique(Vec<T>),
    Inconsistent,
    Underdetermined,
}

#[derive(Clone, PartialEq)]
pub struct Matrix<T: Field> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Field> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn diagonal(d: Vec<T>) -> Self {
        let n = d.len();
        let mut m = Self::zeros(n, n);
        for (i, x) in d.into_iter().enumerate() {
            m.data[i * n + i] = x;
        }
        m
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

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch");
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.add_ref(b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch");
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.sub_ref(b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.neg_ref()).collect() }
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        let data = self.data.iter().map(|a| if a.is_zero() { T::zero() } else { a.mul_ref(c) }).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// `self += c * o`.
    pub fn add_scaled(&mut self, o: &Self, c: &T) {
        for (a, b) in self.data.iter_mut().zip(&o.data) {
            if !b.is_zero() {
                *a = a.add_ref(&b.mul_ref(c));
            }
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "shape mismatch");
        let mut r = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o.data[k * o.cols + j];
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * o.cols + j;
                    r.data[idx] = r.data[idx].add_ref(&a.mul_ref(b));
                }
            }
        }
        r
    }

    pub fn kron(&self, o: &Self) -> Self {
        let (r, c) = (self.rows * o.rows, self.cols * o.cols);
        let mut m = Self::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self.data[i * self.cols + j];
                if a.is_zero() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        let b = &o.data[k * o.cols + l];
                        if !b.is_zero() {
                            m.data[(i * o.rows + k) * c + j * o.cols + l] = a.mul_ref(b);
                        }
                    }
                }
            }
        }
        m
    }

    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Gauss-Jordan inverse; `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let piv = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if piv != col {
                for j in 0..n {
                    a.data.swap(piv * n + j, col * n + j);
                    inv.data.swap(piv * n + j, col * n + j);
                }
            }
            let p = a.get(col, col).inv_ref()?;
            for j in 0..n {
                a.data[col * n + j] = a.data[col * n + j].mul_ref(&p);
                inv.data[col * n + j] = inv.data[col * n + j].mul_ref(&p);
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for j in 0..n {
                    let x = a.data[col * n + j].mul_ref(&f);
                    a.data[r * n + j] = a.data[r * n + j].sub_ref(&x);
                    let y = inv.data[col * n + j].mul_ref(&f);
                    inv.data[r * n + j] = inv.data[r * n + j].sub_ref(&y);
                }
            }
        }
        Some(inv)
    }

    /// Solve `self * x = b` by row reduction.
    pub fn solve(&self, b: &[T]) -> Solution<T> {
        assert_eq!(self.rows, b.len(), "right-hand side has the wrong length");
        let (m, n) = (self.rows, self.cols);
        let w = n + 1;
        let mut a: Vec<T> = Vec::with_capacity(m * w);
        for r in 0..m {
            a.extend_from_slice(&self.data[r * n..(r + 1) * n]);
            a.push(b[r].clone());
        }
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..n {
            let Some(piv) = (row..m).find(|&r| !a[r * w + col].is_zero()) else { continue };
            for j in 0..w {
                a.swap(piv * w + j, row * w + j);
            }
            let p = a[row * w + col].inv_ref().expect("nonzero pivot");
            for j in 0..w {
                a[row * w + j] = a[row * w + j].mul_ref(&p);
            }
            for r in 0..m {
                if r == row || a[r * w + col].is_zero() {
                    continue;
                }
                let f = a[r * w + col].clone();
                for j in 0..w {
                    let x = a[row * w + j].mul_ref(&f);
                    a[r * w + j] = a[r * w + j].sub_ref(&x);
                }
            }
            pivots.push(col);
            row += 1;
            if row == m {
                break;
            }
        }
        if (row..m).any(|r| !a[r * w + n].is_zero()) {
            return Solution::Inconsistent;
        }
        if pivots.len() < n {
            return Solution::Underdetermined;
        }
        Solution::Unique((0..n).map(|r| a[r * w + n].clone()).collect())
    }

    /// Entrywise conversion into another field.
    pub fn try_map<U: Field, E>(&self, f: impl Fn(&T) -> Result<U, E>) -> Result<Matrix<U>, E> {
        let data = self.data.iter().map(f).collect::<Result<Vec<U>, E>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }
}

impl<T: Field + fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<T: Field> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{}x{}{:?}", self.rows, self.cols, self.data)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_fn(3, 3, |i, j| r(((i * 3 + j) as i64 * 7 + 1) % 5 + (i == j) as i64));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(3));
    }

    #[test]
    fn singular_has_no_inverse() {
        let m = Matrix::from_fn(2, 2, |_, _| r(1));
        assert!(m.inverse().is_none());
    }

    #[test]
    fn kron_dimensions_and_identity() {
        let a: Matrix<BigRational> = Matrix::identity(2);
        let b: Matrix<BigRational> = Matrix::identity(3);
        assert_eq!(a.kron(&b), Matrix::identity(6));
    }
}
