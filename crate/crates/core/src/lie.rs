//! Lie algebras presented by structure constants.
//!
//! A [`LieAlgebraSC`] is a labeled basis with exact rational constants
//! `c^k_{ij}`, antisymmetric in `i, j` and satisfying the Jacobi identity.
//! On top of that sit Killing forms with exact congruence signatures,
//! semisimplicity tests, representation verification, and Inonu-Wigner style
//! contraction families where each basis element carries an integer scaling
//! exponent and the singular limit is taken termwise.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::linalg::{
    self, det, int, symmetric_signature, Entry, FromScalar, LinalgError, Matrix, Scalar,
};

#[derive(Debug, thiserror::Error)]
pub enum LieError {
    #[error("structure constants not antisymmetric at ({i},{j},{k})")]
    NotAntisymmetric { i: usize, j: usize, k: usize },
    #[error("Jacobi identity fails, max defect {defect}")]
    JacobiFails { defect: Scalar },
    #[error("coefficient vector has length {got}, algebra dimension is {want}")]
    VectorLength { got: usize, want: usize },
    #[error("representation has {got} matrices, algebra dimension is {want}")]
    RepSize { got: usize, want: usize },
    #[error("representation matrices must be square and equal-sized")]
    RepShape,
    #[error("unknown algebra name `{0}`")]
    UnknownName(String),
    #[error("contraction exponent list has length {got}, algebra dimension is {want}")]
    ExponentLength { got: usize, want: usize },
    #[error("contraction diverges: constant at ({i},{j},{k}) carries negative epsilon power {power}")]
    Divergent {
        i: usize,
        j: usize,
        k: usize,
        power: i64,
    },
    #[error("contraction parameter must be nonzero")]
    ZeroEpsilon,
    #[error("span of basis indices is not closed under the bracket: [{i},{j}] leaves it")]
    NotClosed { i: usize, j: usize },
    #[error("basis change matrix is singular")]
    SingularBasisChange,
    #[error("matrix set does not close into a Lie algebra: commutator [{i},{j}] outside the span")]
    MatricesNotClosed { i: usize, j: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Finite-dimensional Lie algebra: labeled basis plus rational structure
/// constants `[b_i, b_j] = sum_k c^k_{ij} b_k`.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebraSC {
    name: String,
    labels: Vec<String>,
    dim: usize,
    /// Flattened `c[i][j][k]`.
    constants: Vec<Scalar>,
}

impl fmt::Debug for LieAlgebraSC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebraSC({}, dim {})", self.name, self.dim)
    }
}

impl LieAlgebraSC {
    /// Builds from a sparse list of `(i, j, k, value)` with `i < j`; the
    /// antisymmetric counterparts are filled in. Jacobi is verified exactly.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        entries: &[(usize, usize, usize, Scalar)],
    ) -> Result<Self, LieError> {
        let dim = labels.len();
        let mut constants = vec![Scalar::zero(); dim * dim * dim];
        for (i, j, k, v) in entries {
            let idx = (i * dim + j) * dim + k;
            constants[idx] = constants[idx].clone() + v.clone();
            let jdx = (j * dim + i) * dim + k;
            constants[jdx] = constants[jdx].clone() - v.clone();
        }
        let alg = LieAlgebraSC {
            name: name.into(),
            labels,
            dim,
            constants,
        };
        let defect = alg.jacobi_defect();
        if !defect.is_zero() {
            return Err(LieError::JacobiFails { defect });
        }
        Ok(alg)
    }

    /// Raw constructor without the Jacobi gate, for contraction internals and
    /// deliberate corruption in tests.
    pub fn from_raw_constants(
        name: impl Into<String>,
        labels: Vec<String>,
        constants: Vec<Scalar>,
    ) -> Result<Self, LieError> {
        let dim = labels.len();
        assert_eq!(constants.len(), dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let a = &constants[(i * dim + j) * dim + k];
                    let b = &constants[(j * dim + i) * dim + k];
                    if (a.clone() + b.clone()) != Scalar::zero() {
                        return Err(LieError::NotAntisymmetric { i, j, k });
                    }
                }
            }
        }
        Ok(LieAlgebraSC {
            name: name.into(),
            labels,
            dim,
            constants,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.constants[(i * self.dim + j) * self.dim + k]
    }

    pub fn nonzero_constants(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                for k in 0..self.dim {
                    let c = self.constant(i, j, k);
                    if !c.is_zero() {
                        out.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        out
    }

    /// Bracket of coefficient vectors, `[v, w]^k = sum_{ij} v_i w_j c^k_{ij}`.
    pub fn bracket(&self, v: &[Scalar], w: &[Scalar]) -> Result<Vec<Scalar>, LieError> {
        if v.len() != self.dim || w.len() != self.dim {
            return Err(LieError::VectorLength {
                got: v.len().max(w.len()),
                want: self.dim,
            });
        }
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (j, wj) in w.iter().enumerate() {
                if wj.is_zero() {
                    continue;
                }
                let f = vi.clone() * wj.clone();
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.constant(i, j, k);
                    if !c.is_zero() {
                        *o += f.clone() * c.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    /// Exact maximum absolute Jacobi defect; zero for a valid Lie algebra.
    pub fn jacobi_defect(&self) -> Scalar {
        let mut max = Scalar::zero();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                for k in (j + 1)..self.dim {
                    for l in 0..self.dim {
                        let mut sum = Scalar::zero();
                        for m in 0..self.dim {
                            sum += self.constant(j, k, m).clone()
                                * self.constant(i, m, l).clone()
                                + self.constant(k, i, m).clone()
                                    * self.constant(j, m, l).clone()
                                + self.constant(i, j, m).clone()
                                    * self.constant(k, m, l).clone();
                        }
                        let a = sum.abs();
                        if a > max {
                            max = a;
                        }
                    }
                }
            }
        }
        max
    }

    /// Killing form `K_ij = sum_{kl} c^l_{ik} c^k_{jl}`.
    pub fn killing_form(&self) -> Matrix<Scalar> {
        Matrix::from_fn(self.dim, self.dim, |i, j| {
            let mut sum = Scalar::zero();
            for k in 0..self.dim {
                for l in 0..self.dim {
                    let a = self.constant(i, k, l);
                    if a.is_zero() {
                        continue;
                    }
                    sum += a.clone() * self.constant(j, l, k).clone();
                }
            }
            sum
        })
    }

    /// Signature `(plus, minus, zero)` of the Killing form by exact
    /// congruence diagonalization.
    pub fn killing_signature(&self) -> (usize, usize, usize) {
        symmetric_signature(&self.killing_form()).expect("Killing form is symmetric")
    }

    pub fn is_semisimple(&self) -> bool {
        !det(&self.killing_form())
            .expect("Killing form is square")
            .is_zero()
    }

    /// Adjoint representation: `ad(b_i)` with entries `(ad b_i)_{kj} = c^k_{ij}`.
    pub fn adjoint_rep(&self) -> Vec<Matrix<Scalar>> {
        (0..self.dim)
            .map(|i| {
                Matrix::from_fn(self.dim, self.dim, |k, j| self.constant(i, j, k).clone())
            })
            .collect()
    }

    /// Restriction to a subset of basis indices. Errors if the span does not
    /// close under the bracket.
    pub fn restrict(
        &self,
        name: impl Into<String>,
        indices: &[usize],
    ) -> Result<LieAlgebraSC, LieError> {
        let pos: std::collections::HashMap<usize, usize> = indices
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new))
            .collect();
        let sub_dim = indices.len();
        let mut constants = vec![Scalar::zero(); sub_dim * sub_dim * sub_dim];
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                for k in 0..self.dim {
                    let c = self.constant(i, j, k);
                    if c.is_zero() {
                        continue;
                    }
                    match pos.get(&k) {
                        Some(&kk) => {
                            constants[(a * sub_dim + b) * sub_dim + kk] = c.clone();
                        }
                        None => return Err(LieError::NotClosed { i, j }),
                    }
                }
            }
        }
        LieAlgebraSC::from_raw_constants(
            name,
            indices.iter().map(|&i| self.labels[i].clone()).collect(),
            constants,
        )
    }

    /// Change of basis: column `k` of `s` expresses the new basis vector
    /// `b'_k` in the old basis. Structure constants transform by congruence
    /// in the lower indices and inversely in the upper one.
    pub fn transform_basis(
        &self,
        name: impl Into<String>,
        labels: Vec<String>,
        s: &Matrix<Scalar>,
    ) -> Result<LieAlgebraSC, LieError> {
        let n = self.dim;
        let inv = linalg::inverse(s)?.ok_or(LieError::SingularBasisChange)?;
        let mut constants = vec![Scalar::zero(); n * n * n];
        for a in 0..n {
            for b in 0..n {
                // [b'_a, b'_b] in old coordinates.
                let va: Vec<Scalar> = (0..n).map(|r| s.get(r, a).clone()).collect();
                let vb: Vec<Scalar> = (0..n).map(|r| s.get(r, b).clone()).collect();
                let br = self.bracket(&va, &vb)?;
                // Convert back to the new basis with s^{-1}.
                for k in 0..n {
                    let mut sum = Scalar::zero();
                    for (r, v) in br.iter().enumerate() {
                        sum += inv.get(k, r).clone() * v.clone();
                    }
                    constants[(a * n + b) * n + k] = sum;
                }
            }
        }
        LieAlgebraSC::from_raw_constants(name, labels, constants)
    }

    /// Structure constants read off from a closed set of matrices: each
    /// commutator `[m_i, m_j]` is expanded in the span of the given basis.
    pub fn from_matrices(
        name: impl Into<String>,
        labels: Vec<String>,
        mats: &[Matrix<Scalar>],
    ) -> Result<LieAlgebraSC, LieError> {
        let dim = mats.len();
        assert_eq!(labels.len(), dim);
        let n = mats.first().map_or(0, Matrix::rows);
        if mats.iter().any(|m| m.rows() != n || m.cols() != n) {
            return Err(LieError::RepShape);
        }
        // Flatten the basis into the columns of one matrix.
        let basis = Matrix::from_fn(n * n, dim, |r, c| {
            mats[c].get(r / n, r % n).clone()
        });
        let mut constants = vec![Scalar::zero(); dim * dim * dim];
        for i in 0..dim {
            for j in (i + 1)..dim {
                let comm = mats[i].commutator(&mats[j])?;
                let rhs = Matrix::from_fn(n * n, 1, |r, _| comm.get(r / n, r % n).clone());
                match linalg::solve_linear(&basis, &rhs)? {
                    linalg::LinearSolution::Solution { particular, .. } => {
                        for k in 0..dim {
                            let v = particular.get(k, 0).clone();
                            constants[(i * dim + j) * dim + k] = v.clone();
                            constants[(j * dim + i) * dim + k] = -v;
                        }
                    }
                    linalg::LinearSolution::Inconsistent => {
                        return Err(LieError::MatricesNotClosed { i, j });
                    }
                }
            }
        }
        LieAlgebraSC::from_raw_constants(name, labels, constants)
    }

    /// JSON descriptor `{name, dim, labels, constants: [(i,j,k,num,den)]}`.
    pub fn descriptor_json(&self) -> serde_json::Value {
        let constants: Vec<serde_json::Value> = self
            .nonzero_constants()
            .into_iter()
            .map(|(i, j, k, c)| {
                serde_json::json!([i, j, k, c.numer().to_string(), c.denom().to_string()])
            })
            .collect();
        serde_json::json!({
            "name": self.name,
            "dim": self.dim,
            "labels": self.labels,
            "constants": constants,
        })
    }

    /// Largest absolute difference between the constants of two algebras of
    /// equal dimension.
    pub fn constant_distance(&self, other: &LieAlgebraSC) -> Option<Scalar> {
        if self.dim != other.dim {
            return None;
        }
        let mut max = Scalar::zero();
        for (a, b) in self.constants.iter().zip(&other.constants) {
            let d = (a.clone() - b.clone()).abs();
            if d > max {
                max = d;
            }
        }
        Some(max)
    }

    pub fn same_constants(&self, other: &LieAlgebraSC) -> bool {
        self.dim == other.dim && self.constants == other.constants
    }
}

/// Exact defect `max_{i,j} || [rho_i, rho_j] - sum_k c^k_{ij} rho_k ||_inf`.
/// Zero iff the matrices represent the algebra. Works over the rationals or
/// a complexified entry type.
pub fn verify_rep<T: Entry + FromScalar>(
    alg: &LieAlgebraSC,
    mats: &[Matrix<T>],
) -> Result<Scalar, LieError> {
    if mats.len() != alg.dim() {
        return Err(LieError::RepSize {
            got: mats.len(),
            want: alg.dim(),
        });
    }
    let n = mats.first().map_or(0, Matrix::rows);
    if mats.iter().any(|m| !m.is_square() || m.rows() != n) {
        return Err(LieError::RepShape);
    }
    let mut max = Scalar::zero();
    for i in 0..alg.dim() {
        for j in (i + 1)..alg.dim() {
            let mut expected = Matrix::<T>::zeros(n, n);
            for (k, mat) in mats.iter().enumerate() {
                let c = alg.constant(i, j, k);
                if c.is_zero() {
                    continue;
                }
                expected = expected
                    .add(&mat.scale(&T::from_scalar(c)))
                    .map_err(LieError::Linalg)?;
            }
            let defect = mats[i]
                .commutator(&mats[j])
                .map_err(LieError::Linalg)?
                .sub(&expected)
                .map_err(LieError::Linalg)?;
            for e in defect.entries() {
                let b = e.magnitude_bound();
                if b > max {
                    max = b;
                }
            }
        }
    }
    Ok(max)
}

/// A family of rescalings `b_i -> eps^{m_i} b_i` of a base algebra, with the
/// singular limit taken at `eps -> 0`.
#[derive(Clone, Debug)]
pub struct ContractionFamily {
    base: LieAlgebraSC,
    exponents: Vec<i64>,
}

impl ContractionFamily {
    /// Validates that no surviving constant carries a negative epsilon power,
    /// so the declared limit exists.
    pub fn new(base: LieAlgebraSC, exponents: Vec<i64>) -> Result<Self, LieError> {
        if exponents.len() != base.dim() {
            return Err(LieError::ExponentLength {
                got: exponents.len(),
                want: base.dim(),
            });
        }
        for (i, j, k, _) in base.nonzero_constants() {
            let power = exponents[i] + exponents[j] - exponents[k];
            if power < 0 {
                return Err(LieError::Divergent { i, j, k, power });
            }
        }
        Ok(ContractionFamily { base, exponents })
    }

    pub fn base(&self) -> &LieAlgebraSC {
        &self.base
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    /// The rescaled algebra at `eps != 0`:
    /// `c^k_{ij}(eps) = eps^{m_i + m_j - m_k} c^k_{ij}`. Isomorphic to the
    /// base for every nonzero parameter.
    pub fn contract(&self, eps: &Scalar) -> Result<LieAlgebraSC, LieError> {
        if eps.is_zero() {
            return Err(LieError::ZeroEpsilon);
        }
        let n = self.base.dim();
        let mut constants = vec![Scalar::zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = self.base.constant(i, j, k);
                    if c.is_zero() {
                        continue;
                    }
                    let power = self.exponents[i] + self.exponents[j] - self.exponents[k];
                    constants[(i * n + j) * n + k] = c.clone() * eps_power(eps, power);
                }
            }
        }
        LieAlgebraSC::from_raw_constants(
            format!("{}(eps={})", self.base.name(), eps),
            self.base.labels().to_vec(),
            constants,
        )
    }

    /// Termwise `eps -> 0` limit. Jacobi is re-validated exactly on the
    /// limit algebra.
    pub fn limit(&self) -> Result<LieAlgebraSC, LieError> {
        let n = self.base.dim();
        let mut constants = vec![Scalar::zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = self.base.constant(i, j, k);
                    if c.is_zero() {
                        continue;
                    }
                    let power = self.exponents[i] + self.exponents[j] - self.exponents[k];
                    if power < 0 {
                        return Err(LieError::Divergent { i, j, k, power });
                    }
                    if power == 0 {
                        constants[(i * n + j) * n + k] = c.clone();
                    }
                }
            }
        }
        let alg = LieAlgebraSC::from_raw_constants(
            format!("{}(limit)", self.base.name()),
            self.base.labels().to_vec(),
            constants,
        )?;
        let defect = alg.jacobi_defect();
        if !defect.is_zero() {
            return Err(LieError::JacobiFails { defect });
        }
        Ok(alg)
    }
}

fn eps_power(eps: &Scalar, power: i64) -> Scalar {
    let mut out = Scalar::one();
    if power >= 0 {
        for _ in 0..power {
            out *= eps.clone();
        }
    } else {
        for _ in 0..(-power) {
            out /= eps.clone();
        }
    }
    out
}

pub mod builtins {
    //! Named algebras with exact constants.

    use super::*;

    /// Levi-Civita epsilon on three indices.
    fn eps3(i: usize, j: usize, k: usize) -> i64 {
        match (i, j, k) {
            (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
            (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
            _ => 0,
        }
    }

    /// so(3) in the real antisymmetric convention `[L_i, L_j] = eps_ijk L_k`.
    pub fn so3() -> LieAlgebraSC {
        let labels = vec!["L1".into(), "L2".into(), "L3".into()];
        let mut entries = Vec::new();
        for i in 0..3 {
            for j in (i + 1)..3 {
                for k in 0..3 {
                    let e = eps3(i, j, k);
                    if e != 0 {
                        entries.push((i, j, k, int(e)));
                    }
                }
            }
        }
        LieAlgebraSC::new("so(3)", labels, &entries).expect("so(3) satisfies Jacobi")
    }

    /// Rotations and boosts with `[K_i, K_j] = -eps_ijk L_k`. The shared
    /// basis layout with [`galilean`] makes the contraction comparable
    /// constant by constant.
    pub fn so31_rotation_boost() -> LieAlgebraSC {
        let labels: Vec<String> = ["L1", "L2", "L3", "K1", "K2", "K3"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let mut entries = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    let e = eps3(i, j, k);
                    if e == 0 {
                        continue;
                    }
                    if i < j {
                        // [L_i, L_j] = eps L_k
                        entries.push((i, j, k, int(e)));
                        // [K_i, K_j] = -eps L_k
                        entries.push((3 + i, 3 + j, k, int(-e)));
                    }
                    // [L_i, K_j] = eps K_k
                    entries.push((i, 3 + j, 3 + k, int(e)));
                }
            }
        }
        LieAlgebraSC::new("so(3,1)", labels, &entries).expect("so(3,1) satisfies Jacobi")
    }

    /// Homogeneous Galilean algebra: rotations act on commuting boosts.
    pub fn galilean() -> LieAlgebraSC {
        let labels: Vec<String> = ["L1", "L2", "L3", "K1", "K2", "K3"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let mut entries = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    let e = eps3(i, j, k);
                    if e == 0 {
                        continue;
                    }
                    if i < j {
                        entries.push((i, j, k, int(e)));
                    }
                    entries.push((i, 3 + j, 3 + k, int(e)));
                }
            }
        }
        LieAlgebraSC::new("galilean", labels, &entries).expect("galilean satisfies Jacobi")
    }

    /// Canonical (Heisenberg) algebra h(N): `[x_a, p_a] = i`, all other
    /// commutators vanishing. The central element is a real basis element
    /// named `i`; the quantum of action is absorbed into it.
    pub fn heisenberg(n: usize) -> LieAlgebraSC {
        let mut labels: Vec<String> = (1..=n).map(|a| format!("x{a}")).collect();
        labels.extend((1..=n).map(|a| format!("p{a}")));
        labels.push("i".into());
        let center = 2 * n;
        let entries: Vec<(usize, usize, usize, Scalar)> = (0..n)
            .map(|a| (a, n + a, center, int(1)))
            .collect();
        LieAlgebraSC::new(format!("h({n})"), labels, &entries)
            .expect("h(N) satisfies Jacobi")
    }

    /// Generic so(p, q) on generators `L_ab = e_a eta_b^T - e_b eta_a^T`,
    /// basis ordered by lexicographic index pairs `a < b`:
    /// `[L_ab, L_cd] = eta_bc L_ad - eta_ac L_bd - eta_bd L_ac + eta_ad L_bc`.
    pub fn so_pq(p: u32, q: u32) -> LieAlgebraSC {
        let n = (p + q) as usize;
        let eta = |a: usize| -> i64 {
            if a < p as usize {
                1
            } else {
                -1
            }
        };
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
            .collect();
        let index_of = |a: usize, b: usize| -> (usize, i64) {
            // L_ba = -L_ab.
            if a < b {
                (pairs.iter().position(|&x| x == (a, b)).unwrap(), 1)
            } else {
                (pairs.iter().position(|&x| x == (b, a)).unwrap(), -1)
            }
        };
        let labels: Vec<String> = pairs
            .iter()
            .map(|(a, b)| format!("L{}{}", a + 1, b + 1))
            .collect();
        let mut entries = Vec::new();
        for (i, &(a, b)) in pairs.iter().enumerate() {
            for (j, &(c, d)) in pairs.iter().enumerate() {
                if i >= j {
                    continue;
                }
                let mut add = |x: usize, y: usize, factor: i64| {
                    if x == y || factor == 0 {
                        return;
                    }
                    let (k, sign) = index_of(x, y);
                    entries.push((i, j, k, int(factor * sign)));
                };
                if b == c {
                    add(a, d, eta(b));
                }
                if a == c {
                    add(b, d, -eta(a));
                }
                if b == d {
                    add(a, c, -eta(b));
                }
                if a == d {
                    add(b, c, eta(a));
                }
            }
        }
        LieAlgebraSC::new(format!("so({p},{q})"), labels, &entries)
            .expect("so(p,q) satisfies Jacobi")
    }

    /// Index pairs of [`so_pq`] in basis order.
    pub fn so_pq_pairs(p: u32, q: u32) -> Vec<(usize, usize)> {
        let n = (p + q) as usize;
        (0..n)
            .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
            .collect()
    }

    /// sl(n, R): elementary matrices `E_ij` (i != j) in lexicographic order
    /// followed by the Cartan elements `H_i = E_ii - E_{i+1,i+1}`.
    pub fn sl(n: usize) -> LieAlgebraSC {
        assert!(n >= 2);
        let mut mats = Vec::new();
        let mut labels = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    let mut m = Matrix::<Scalar>::zeros(n, n);
                    m.set(i, j, Scalar::one());
                    mats.push(m);
                    labels.push(format!("E{}{}", i + 1, j + 1));
                }
            }
        }
        for i in 0..(n - 1) {
            let mut m = Matrix::<Scalar>::zeros(n, n);
            m.set(i, i, Scalar::one());
            m.set(i + 1, i + 1, -Scalar::one());
            mats.push(m);
            labels.push(format!("H{}", i + 1));
        }
        LieAlgebraSC::from_matrices(format!("sl({n})"), labels, &mats)
            .expect("sl(n) closes on its standard basis")
    }

    /// The Heisenberg-Poincare algebra hp(4): Lorentz generators acting on
    /// four commuting positions and four commuting momenta, with the
    /// canonical pairing `[x_mu, p_nu] = -delta_munu eta_mu i` into a central
    /// `i`, for `eta = (+,+,+,-)`.
    ///
    /// Assembled directly from these block relations. Basis order follows the
    /// lexicographic pair order of so(3,3) so a contraction limit of that
    /// algebra is comparable entry by entry; labels name the physical roles.
    pub fn heisenberg_poincare4() -> LieAlgebraSC {
        let pairs = so_pq_pairs(3, 3);
        let labels: Vec<String> = pairs.iter().map(|&(a, b)| hp_label(a, b)).collect();
        let eta = |a: usize| -> i64 {
            if a < 3 {
                1
            } else {
                -1
            }
        };
        let lorentz = |a: usize, b: usize| -> usize {
            pairs.iter().position(|&x| x == (a.min(b), a.max(b))).unwrap()
        };
        let x_of = |mu: usize| lorentz(mu, 4);
        let p_of = |mu: usize| lorentz(mu, 5);
        let center = lorentz(4, 5);

        let mut entries: Vec<(usize, usize, usize, Scalar)> = Vec::new();
        // Lorentz block [L_ab, L_cd] over eta = (+,+,+,-).
        let lorentz_pairs: Vec<(usize, usize)> = pairs
            .iter()
            .copied()
            .filter(|&(_, b)| b <= 3)
            .collect();
        for (pi, &(a, b)) in lorentz_pairs.iter().enumerate() {
            for &(c, d) in lorentz_pairs.iter().skip(pi + 1) {
                let i = lorentz(a, b);
                let j = lorentz(c, d);
                let mut add = |x: usize, y: usize, f: i64| {
                    if x != y && f != 0 {
                        let sign = if x < y { 1 } else { -1 };
                        entries.push((i, j, lorentz(x, y), int(f * sign)));
                    }
                };
                if b == c {
                    add(a, d, eta(b));
                }
                if a == c {
                    add(b, d, -eta(a));
                }
                if b == d {
                    add(a, c, -eta(b));
                }
                if a == d {
                    add(b, c, eta(a));
                }
            }
        }
        // Vector action on positions and momenta:
        // [L_ab, v_c] = eta_bc v_a - eta_ac v_b.
        let x_idx: Vec<usize> = (0..4).map(x_of).collect();
        let p_idx: Vec<usize> = (0..4).map(p_of).collect();
        for &(a, b) in &lorentz_pairs {
            for c in 0..4usize {
                for col in [&x_idx, &p_idx] {
                    if b == c {
                        entries.push((lorentz(a, b), col[c], col[a], int(eta(b))));
                    }
                    if a == c {
                        entries.push((lorentz(a, b), col[c], col[b], int(-eta(a))));
                    }
                }
            }
        }
        // Canonical pairing into the center.
        for mu in 0..4usize {
            entries.push((x_of(mu), p_of(mu), center, int(-eta(mu))));
        }
        LieAlgebraSC::new("hp(4)", labels, &entries).expect("hp(4) satisfies Jacobi")
    }

    fn hp_label(a: usize, b: usize) -> String {
        match (a, b) {
            (a, b) if b <= 3 => format!("L{}{}", a + 1, b + 1),
            (a, 4) => format!("x{}", a + 1),
            (a, 5) if a <= 3 => format!("p{}", a + 1),
            (4, 5) => "i".into(),
            _ => unreachable!(),
        }
    }

    /// Poincare algebra: the Lorentz pair block of so(3,1) plus four
    /// commuting translations transforming as a vector, in the same sign
    /// conventions as [`heisenberg_poincare4`].
    pub fn poincare() -> LieAlgebraSC {
        let hp = heisenberg_poincare4();
        // Lorentz pairs plus the p column.
        let idx: Vec<usize> = (0..hp.dim())
            .filter(|&i| {
                let l = hp.label(i);
                l.starts_with('L') || l.starts_with('p')
            })
            .collect();
        hp.restrict("poincare", &idx)
            .expect("Lorentz plus translations closes")
    }

    /// Lookup by name. Accepted: `so(3)`, `so(3,1)`, `so(3,3)`, `so(5,1)`,
    /// generic `so(p,q)`, `sl(n)`, `h(N)`, `galilean`, `poincare`, `hp(4)`,
    /// `yang` (alias for so(3,3)).
    pub fn builtin(name: &str) -> Result<LieAlgebraSC, LieError> {
        let s = name.trim().to_lowercase();
        match s.as_str() {
            "so(3)" => return Ok(so3()),
            "so(3,1)" => return Ok(so31_rotation_boost()),
            "galilean" => return Ok(galilean()),
            "poincare" => return Ok(poincare()),
            "hp(4)" => return Ok(heisenberg_poincare4()),
            "yang" => return Ok(so_pq(3, 3)),
            _ => {}
        }
        if let Some(args) = s.strip_prefix("so(").and_then(|r| r.strip_suffix(')')) {
            if let Some((p, q)) = args.split_once(',') {
                let p: u32 = p.trim().parse().map_err(|_| LieError::UnknownName(name.into()))?;
                let q: u32 = q.trim().parse().map_err(|_| LieError::UnknownName(name.into()))?;
                if p + q >= 2 {
                    return Ok(so_pq(p, q));
                }
            }
        }
        if let Some(args) = s.strip_prefix("sl(").and_then(|r| r.strip_suffix(')')) {
            let n: usize = args.trim().parse().map_err(|_| LieError::UnknownName(name.into()))?;
            if n >= 2 {
                return Ok(sl(n));
            }
        }
        if let Some(args) = s.strip_prefix("h(").and_then(|r| r.strip_suffix(')')) {
            let n: usize = args.trim().parse().map_err(|_| LieError::UnknownName(name.into()))?;
            if n >= 1 {
                return Ok(heisenberg(n));
            }
        }
        Err(LieError::UnknownName(name.into()))
    }

    /// so(3,1) with the boosts rescaled by one power of epsilon; the limit is
    /// the Galilean algebra.
    pub fn so31_boost_family() -> ContractionFamily {
        ContractionFamily::new(so31_rotation_boost(), vec![0, 0, 0, 1, 1, 1])
            .expect("boost scaling has no divergent constants")
    }
}
