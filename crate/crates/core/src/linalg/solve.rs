use num_traits::{One, Signed, Zero};

use super::{LinalgError, Matrix, Scalar};

/// Reduced row echelon form with bookkeeping.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Matrix<Scalar>,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
    /// Determinant, populated for square inputs only.
    pub det: Option<Scalar>,
}

pub fn rref(m: &Matrix<Scalar>) -> Rref {
    let rows = m.rows();
    let cols = m.cols();
    let mut a = m.clone();
    let mut det = if m.is_square() {
        Some(Scalar::one())
    } else {
        None
    };
    let mut rank = 0usize;
    let mut pivot_cols = Vec::new();
    for c in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !a.get(r, c).is_zero()) else {
            continue;
        };
        if pivot != rank {
            for j in 0..cols {
                let t = a.get(rank, j).clone();
                a.set(rank, j, a.get(pivot, j).clone());
                a.set(pivot, j, t);
            }
            if let Some(d) = det.as_mut() {
                *d = -d.clone();
            }
        }
        let p = a.get(rank, c).clone();
        if let Some(d) = det.as_mut() {
            *d *= p.clone();
        }
        let inv = Scalar::one() / p;
        for j in 0..cols {
            let v = a.get(rank, j).clone() * inv.clone();
            a.set(rank, j, v);
        }
        for r in 0..rows {
            if r == rank || a.get(r, c).is_zero() {
                continue;
            }
            let f = a.get(r, c).clone();
            for j in 0..cols {
                let v = a.get(r, j).clone() - f.clone() * a.get(rank, j).clone();
                a.set(r, j, v);
            }
        }
        pivot_cols.push(c);
        rank += 1;
        if rank == rows {
            break;
        }
    }
    if rank < rows {
        if let Some(d) = det.as_mut() {
            *d = Scalar::zero();
        }
    }
    Rref {
        matrix: a,
        rank,
        pivot_cols,
        det,
    }
}

pub fn rank(m: &Matrix<Scalar>) -> usize {
    rref(m).rank
}

pub fn det(m: &Matrix<Scalar>) -> Result<Scalar, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    Ok(rref(m).det.unwrap())
}

pub fn inverse(m: &Matrix<Scalar>) -> Result<Option<Matrix<Scalar>>, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let aug = Matrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            m.get(i, j).clone()
        } else if j - n == i {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    });
    let r = rref(&aug);
    // Invertible iff the pivots of the left block are the full column range.
    if (0..n).any(|i| r.pivot_cols.get(i) != Some(&i)) {
        return Ok(None);
    }
    Ok(Some(Matrix::from_fn(n, n, |i, j| {
        r.matrix.get(i, j + n).clone()
    })))
}

/// Outcome of exact linear solving.
#[derive(Clone, Debug)]
pub enum LinearSolution {
    /// A representative solution (free variables set to zero) together with
    /// the nullity and a nullspace basis.
    Solution {
        particular: Matrix<Scalar>,
        nullity: usize,
        nullspace: Vec<Matrix<Scalar>>,
    },
    /// The system has no solution at all.
    Inconsistent,
}

/// Solves `A x = b` exactly. `b` may carry several right-hand sides as
/// columns; inconsistency of any column reports [`LinearSolution::Inconsistent`].
pub fn solve_linear(
    a: &Matrix<Scalar>,
    b: &Matrix<Scalar>,
) -> Result<LinearSolution, LinalgError> {
    if a.rows() != b.rows() {
        return Err(LinalgError::DimMismatch {
            op: "solve_linear",
            left: format!("{}x{}", a.rows(), a.cols()),
            right: format!("{}x{}", b.rows(), b.cols()),
        });
    }
    let n = a.cols();
    let k = b.cols();
    let aug = Matrix::from_fn(a.rows(), n + k, |i, j| {
        if j < n {
            a.get(i, j).clone()
        } else {
            b.get(i, j - n).clone()
        }
    });
    let r = rref(&aug);
    // A pivot in an augmented column marks an inconsistent system.
    if r.pivot_cols.iter().any(|&c| c >= n) {
        return Ok(LinearSolution::Inconsistent);
    }
    let pivots = &r.pivot_cols;
    let mut particular = Matrix::zeros(n, k);
    for (row, &col) in pivots.iter().enumerate() {
        for rhs in 0..k {
            particular.set(col, rhs, r.matrix.get(row, n + rhs).clone());
        }
    }
    let free_cols: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let nullspace = free_cols
        .iter()
        .map(|&fc| {
            let mut v = Matrix::zeros(n, 1);
            v.set(fc, 0, Scalar::one());
            for (row, &col) in pivots.iter().enumerate() {
                v.set(col, 0, -r.matrix.get(row, fc).clone());
            }
            v
        })
        .collect();
    Ok(LinearSolution::Solution {
        particular,
        nullity: free_cols.len(),
        nullspace,
    })
}

/// Exact signature `(plus, minus, zero)` of a symmetric matrix by congruence
/// diagonalization over the rationals. No eigenvalues are computed.
pub fn symmetric_signature(
    m: &Matrix<Scalar>,
) -> Result<(usize, usize, usize), LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if !m.is_symmetric() {
        return Err(LinalgError::NotSymmetric);
    }
    let n = m.rows();
    let mut a = m.clone();
    let (mut plus, mut minus, mut zero) = (0usize, 0usize, 0usize);
    for i in 0..n {
        if a.get(i, i).is_zero() {
            if let Some(j) = ((i + 1)..n).find(|&j| !a.get(j, j).is_zero()) {
                // Congruence swap of basis vectors i and j.
                for c in 0..n {
                    let t = a.get(i, c).clone();
                    a.set(i, c, a.get(j, c).clone());
                    a.set(j, c, t);
                }
                for r in 0..n {
                    let t = a.get(r, i).clone();
                    a.set(r, i, a.get(r, j).clone());
                    a.set(r, j, t);
                }
            } else if let Some(j) = ((i + 1)..n).find(|&j| !a.get(i, j).is_zero()) {
                // b_i := b_i + b_j turns the off-diagonal pairing into a
                // nonzero diagonal entry.
                for c in 0..n {
                    let v = a.get(i, c).clone() + a.get(j, c).clone();
                    a.set(i, c, v);
                }
                for r in 0..n {
                    let v = a.get(r, i).clone() + a.get(r, j).clone();
                    a.set(r, i, v);
                }
            } else {
                zero += 1;
                continue;
            }
        }
        let d = a.get(i, i).clone();
        if d.is_positive() {
            plus += 1;
        } else {
            minus += 1;
        }
        for j in (i + 1)..n {
            if a.get(i, j).is_zero() {
                continue;
            }
            let f = a.get(i, j).clone() / d.clone();
            for c in 0..n {
                let v = a.get(j, c).clone() - f.clone() * a.get(i, c).clone();
                a.set(j, c, v);
            }
            for r in 0..n {
                let v = a.get(r, j).clone() - f.clone() * a.get(r, i).clone();
                a.set(r, j, v);
            }
        }
    }
    Ok((plus, minus, zero))
}
