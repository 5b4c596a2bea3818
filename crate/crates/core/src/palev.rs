//! Statistics whose probability algebra envelops a semisimple Lie algebra.
//!
//! Three constructions: the so(3) rotaton tower (at most `2l + 1` quanta in
//! an extreme-weight-`l` irreducible), di-fermions as the bivector grade of a
//! split Clifford algebra, and the Fock representation of sl(n+1) on
//! symmetric tensors of fixed degree.

use num_traits::{One, Zero};

use crate::clifford::{second_grade_basis, CliffordError, Metric, Multivector};
use crate::lie::{LieAlgebraSC, LieError};
use crate::linalg::{cimag, creal, frac, int, CScalar, Matrix, Scalar};

#[derive(Debug, thiserror::Error)]
pub enum PalevError {
    #[error("spin parameter must satisfy 2l in {{0, 1, 2, ...}}, got {0}")]
    InvalidSpin(String),
    #[error("di-fermion count must be at least 1")]
    InvalidDiFermion,
    #[error("commutator of bivectors left grade 2; the second grade does not close")]
    BivectorClosure,
    #[error(transparent)]
    Clifford(#[from] CliffordError),
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// Irreducible so(3) system of spin `l`, dimension `2l + 1`.
///
/// The matrices `L1, L2, L3` live in a complexified context and satisfy the
/// real antisymmetric relations `[L_i, L_j] = eps_ijk L_k` exactly; `L3` has
/// extreme eigenvalues `+- i l`. The weight operator `i L3`, diagonal with
/// spectrum `-l ... +l` in steps of one, counts quanta as the offset from the
/// lowest weight. Ladder matrices stay integer because the usual square-root
/// normalizations are absorbed pairwise into the lowering coefficients.
#[derive(Clone, Debug)]
pub struct RotatonSystem {
    l: Scalar,
    dim: usize,
    l1: Matrix<CScalar>,
    l2: Matrix<CScalar>,
    l3: Matrix<CScalar>,
    weight: Matrix<Scalar>,
    j_plus: Matrix<Scalar>,
    j_minus: Matrix<Scalar>,
}

/// Builds the spin-`l` rotaton system; `2l` must be a nonnegative integer.
pub fn so3_irrep(l: &Scalar) -> Result<RotatonSystem, PalevError> {
    let two_l = l.clone() * int(2);
    if !two_l.denom().is_one() || two_l < Scalar::zero() {
        return Err(PalevError::InvalidSpin(l.to_string()));
    }
    let dim_big: num_bigint::BigInt = two_l.to_integer() + 1;
    let dim: usize = dim_big
        .try_into()
        .map_err(|_| PalevError::InvalidSpin(l.to_string()))?;

    let weight_at = |idx: usize| -> Scalar { int(idx as i64) - l.clone() };
    let weight = Matrix::from_fn(dim, dim, |i, j| {
        if i == j {
            weight_at(i)
        } else {
            Scalar::zero()
        }
    });
    // Raising: e_m -> e_{m+1} with unit coefficient.
    let j_plus = Matrix::from_fn(dim, dim, |i, j| {
        if i == j + 1 {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    });
    // Lowering: e_m -> (l(l+1) - m(m-1)) e_{m-1}, which keeps
    // [J+, J-] = 2 J3 and [J3, J+-] = +- J+- exact.
    let j_minus = Matrix::from_fn(dim, dim, |i, j| {
        if i + 1 == j {
            let m = weight_at(j);
            l.clone() * (l.clone() + int(1)) - m.clone() * (m - int(1))
        } else {
            Scalar::zero()
        }
    });

    let half = frac(1, 2);
    let minus_i_half = cimag(&-half.clone());
    let sum = j_plus.add(&j_minus).expect("same shape");
    let diff = j_plus.sub(&j_minus).expect("same shape");
    let l1 = sum.to_complex().scale(&minus_i_half);
    let l2 = diff.to_complex().scale(&creal(&-half));
    let l3 = weight.to_complex().scale(&cimag(&int(-1)));

    Ok(RotatonSystem {
        l: l.clone(),
        dim,
        l1,
        l2,
        l3,
        weight,
        j_plus,
        j_minus,
    })
}

impl RotatonSystem {
    pub fn spin(&self) -> &Scalar {
        &self.l
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The three so(3) matrices in the real antisymmetric convention.
    pub fn so3_matrices(&self) -> [&Matrix<CScalar>; 3] {
        [&self.l1, &self.l2, &self.l3]
    }

    /// Diagonal weight operator `i L3` with exact spectrum `-l ..= l`.
    pub fn weight(&self) -> &Matrix<Scalar> {
        &self.weight
    }

    pub fn weight_spectrum(&self) -> Vec<Scalar> {
        (0..self.dim).map(|i| self.weight.get(i, i).clone()).collect()
    }

    /// Ladder pair `L+- = L1 +- i L2` in the complexified context.
    pub fn ladder(&self) -> (Matrix<CScalar>, Matrix<CScalar>) {
        let i = cimag(&int(1));
        let plus = self.l1.add(&self.l2.scale(&i)).expect("same shape");
        let minus = self.l1.sub(&self.l2.scale(&i)).expect("same shape");
        (plus, minus)
    }

    /// Integer-entried ladder pair `(J+, J-)` generating the same tower.
    pub fn integer_ladder(&self) -> (&Matrix<Scalar>, &Matrix<Scalar>) {
        (&self.j_plus, &self.j_minus)
    }
}

/// The bivector grade of `Cl(N, N)` as a Lie algebra under the geometric
/// commutator: the probability space of a fermion pair and simultaneously
/// spin(N, N), of dimension `N (2N - 1)`.
#[derive(Clone, Debug)]
pub struct DiFermionAlgebra {
    n: u32,
    algebra: LieAlgebraSC,
    bivectors: Vec<Multivector>,
}

pub fn difermion(n: u32) -> Result<DiFermionAlgebra, PalevError> {
    if n < 1 {
        return Err(PalevError::InvalidDiFermion);
    }
    let metric = Metric::new(n, n);
    let bivectors = second_grade_basis(metric);
    let dim = bivectors.len();
    let index_of: std::collections::BTreeMap<u64, usize> = bivectors
        .iter()
        .enumerate()
        .map(|(i, b)| (b.terms().next().expect("bivector is a single blade").0, i))
        .collect();
    let labels: Vec<String> = bivectors
        .iter()
        .map(|b| {
            let mask = b.terms().next().unwrap().0;
            let lo = mask.trailing_zeros() + 1;
            let hi = 63 - mask.leading_zeros() + 1;
            format!("e{lo}{hi}")
        })
        .collect();
    let mut constants = vec![Scalar::zero(); dim * dim * dim];
    for (i, a) in bivectors.iter().enumerate() {
        for (j, b) in bivectors.iter().enumerate().skip(i + 1) {
            let comm = a
                .geometric_product(b)?
                .sub(&b.geometric_product(a)?)
                .expect("same algebra");
            for (mask, coeff) in comm.terms() {
                if mask.count_ones() != 2 {
                    return Err(PalevError::BivectorClosure);
                }
                let k = index_of[&mask];
                constants[(i * dim + j) * dim + k] = coeff.clone();
                constants[(j * dim + i) * dim + k] = -coeff.clone();
            }
        }
    }
    let algebra =
        LieAlgebraSC::from_raw_constants(format!("difermion({n})"), labels, constants)?;
    debug_assert!(algebra.jacobi_defect().is_zero());
    Ok(DiFermionAlgebra {
        n,
        algebra,
        bivectors,
    })
}

impl DiFermionAlgebra {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn algebra(&self) -> &LieAlgebraSC {
        &self.algebra
    }

    pub fn bivectors(&self) -> &[Multivector] {
        &self.bivectors
    }
}

/// Fock representation of gl(n+1) / sl(n+1) on symmetric tensors of degree
/// `p` over `n + 1` slots. Basis vectors are occupation monomials; the
/// generator `E_ij` moves one quantum from slot `j` to slot `i` with the
/// occupation number as coefficient, so every entry is an integer and no slot
/// ever holds more than `p` quanta.
#[derive(Clone, Debug)]
pub struct FockRep {
    n: usize,
    degree: usize,
    dim: usize,
    basis: Vec<Vec<u32>>,
    matrices: Vec<Matrix<Scalar>>,
}

pub fn sl_fock(n: usize, degree: usize) -> FockRep {
    let slots = n + 1;
    let mut basis: Vec<Vec<u32>> = Vec::new();
    fill_monomials(slots, degree as u32, &mut Vec::new(), &mut basis);
    let dim = basis.len();
    let index: std::collections::BTreeMap<Vec<u32>, usize> = basis
        .iter()
        .enumerate()
        .map(|(i, b)| (b.clone(), i))
        .collect();
    let mut matrices = Vec::with_capacity(slots * slots);
    for i in 0..slots {
        for j in 0..slots {
            let mut m = Matrix::<Scalar>::zeros(dim, dim);
            for (col, occ) in basis.iter().enumerate() {
                if occ[j] == 0 {
                    continue;
                }
                let coeff = int(i64::from(occ[j]));
                if i == j {
                    m.set(col, col, coeff);
                } else {
                    let mut target = occ.clone();
                    target[j] -= 1;
                    target[i] += 1;
                    let row = index[&target];
                    m.set(row, col, coeff);
                }
            }
            matrices.push(m);
        }
    }
    FockRep {
        n,
        degree,
        dim,
        basis,
        matrices,
    }
}

fn fill_monomials(slots: usize, remaining: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if prefix.len() + 1 == slots {
        prefix.push(remaining);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for take in (0..=remaining).rev() {
        prefix.push(take);
        fill_monomials(slots, remaining - take, prefix, out);
        prefix.pop();
    }
}

impl FockRep {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    /// Generator `E_ij` acting as `x_i d/d x_j`.
    pub fn e(&self, i: usize, j: usize) -> &Matrix<Scalar> {
        &self.matrices[i * (self.n + 1) + j]
    }

    /// Cartan elements `H_i = E_ii - E_{i+1,i+1}` of sl(n+1).
    pub fn cartan(&self) -> Vec<Matrix<Scalar>> {
        (0..self.n)
            .map(|i| {
                self.e(i, i)
                    .sub(self.e(i + 1, i + 1))
                    .expect("same shape")
            })
            .collect()
    }

    /// Basis `E_ij (i != j)` in lexicographic order followed by the Cartan
    /// elements, matching the layout of the structure-constant presentation
    /// of sl(n+1).
    pub fn sl_basis(&self) -> Vec<Matrix<Scalar>> {
        let slots = self.n + 1;
        let mut out = Vec::new();
        for i in 0..slots {
            for j in 0..slots {
                if i != j {
                    out.push(self.e(i, j).clone());
                }
            }
        }
        out.extend(self.cartan());
        out
    }

    /// Exact maximum defect of `[E_ij, E_kl] = d_jk E_il - d_li E_kj` over
    /// all index quadruples.
    pub fn gl_relation_defect(&self) -> Scalar {
        let slots = self.n + 1;
        let mut max = Scalar::zero();
        for i in 0..slots {
            for j in 0..slots {
                for k in 0..slots {
                    for l in 0..slots {
                        let mut expected = Matrix::<Scalar>::zeros(self.dim, self.dim);
                        if j == k {
                            expected = expected.add(self.e(i, l)).expect("shape");
                        }
                        if l == i {
                            expected = expected.sub(self.e(k, j)).expect("shape");
                        }
                        let defect = self
                            .e(i, j)
                            .commutator(self.e(k, l))
                            .expect("shape")
                            .sub(&expected)
                            .expect("shape")
                            .max_abs();
                        if defect > max {
                            max = defect;
                        }
                    }
                }
            }
        }
        max
    }
}

/// Binomial coefficient as exact usize, for dimension checks.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= (n - i) as u128;
        den *= (i + 1) as u128;
    }
    (num / den) as usize
}
