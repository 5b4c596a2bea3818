use std::fmt;
use std::ops::{Neg, Sub};

use num_traits::{One, Zero};

use super::{CScalar, LinalgError, Scalar};

/// Entry types a dense matrix can be built over. Satisfied by [`Scalar`] and
/// [`CScalar`]; addition and multiplication come with `Zero`/`One`.
pub trait Entry:
    Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
}

impl<T> Entry for T where
    T: Clone + PartialEq + Zero + One + Neg<Output = T> + Sub<Output = T>
{
}

/// Lift of a real scalar into an entry type, used when checking a
/// representation over a complexified context against real structure
/// constants.
pub trait FromScalar {
    fn from_scalar(s: &Scalar) -> Self;
    /// Exact nonnegative rational bounding the entry away from zero; zero iff
    /// the entry is zero. For complex entries this is `|re| + |im|`.
    fn magnitude_bound(&self) -> Scalar;
}

impl FromScalar for Scalar {
    fn from_scalar(s: &Scalar) -> Self {
        s.clone()
    }
    fn magnitude_bound(&self) -> Scalar {
        super::abs(self)
    }
}

impl FromScalar for CScalar {
    fn from_scalar(s: &Scalar) -> Self {
        super::creal(s)
    }
    fn magnitude_bound(&self) -> Scalar {
        super::abs(&self.re) + super::abs(&self.im)
    }
}

/// Dense matrix with exact entries. Immutable after construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T = Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Entry> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::RaggedRows);
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
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

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }

    fn shape(&self) -> String {
        format!("{}x{}", self.rows, self.cols)
    }

    fn dim_err(&self, other: &Self, op: &'static str) -> LinalgError {
        LinalgError::DimMismatch {
            op,
            left: self.shape(),
            right: other.shape(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(self.dim_err(other, "add"));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(self.dim_err(other, "sub"));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        })
    }

    pub fn neg(&self) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a.clone()).collect(),
        }
    }

    pub fn scale(&self, s: &T) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.clone() * s.clone()).collect(),
        }
    }

    /// Exact matrix product.
    pub fn mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(self.dim_err(other, "mul"));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).clone();
                    out.set(i, j, cur + a.clone() * b.clone());
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product, size `(r_a r_b) x (c_a c_b)`.
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(
                            i * other.rows + k,
                            j * other.cols + l,
                            a.clone() * b.clone(),
                        );
                    }
                }
            }
        }
        out
    }

    /// `ab - ba` for square matrices of equal size.
    pub fn commutator(&self, other: &Self) -> Result<Self, LinalgError> {
        if !self.is_square() || self.rows != other.rows || self.cols != other.cols {
            return Err(self.dim_err(other, "commutator"));
        }
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// `ab + ba`.
    pub fn anticommutator(&self, other: &Self) -> Result<Self, LinalgError> {
        if !self.is_square() || self.rows != other.rows || self.cols != other.cols {
            return Err(self.dim_err(other, "anticommutator"));
        }
        self.mul(other)?.add(&other.mul(self)?)
    }

    pub fn pow(&self, k: u32) -> Result<Self, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut out = Self::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> Result<T, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut t = T::zero();
        for i in 0..self.rows {
            t = t + self.get(i, i).clone();
        }
        Ok(t)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn map<U: Entry>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl Matrix<Scalar> {
    /// Largest absolute value among the entries.
    pub fn max_abs(&self) -> Scalar {
        self.data
            .iter()
            .map(super::abs)
            .max()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn to_complex(&self) -> Matrix<CScalar> {
        self.map(super::creal)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn json_rows(&self) -> serde_json::Value {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        serde_json::json!(rows)
    }
}

impl Matrix<CScalar> {
    pub fn max_magnitude_bound(&self) -> Scalar {
        self.data
            .iter()
            .map(FromScalar::magnitude_bound)
            .max()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn json_rows(&self) -> serde_json::Value {
        let rows: Vec<Vec<[String; 2]>> = (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| {
                        let e = self.get(i, j);
                        [e.re.to_string(), e.im.to_string()]
                    })
                    .collect()
            })
            .collect();
        serde_json::json!(rows)
    }
}

impl<T: Entry + fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
