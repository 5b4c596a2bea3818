//! Clifford and Grassmann algebras over signed quadratic spaces.
//!
//! Basis blades are bit sets over the generators, kept in canonical ascending
//! index order; the sign of a term lives in its coefficient. The geometric
//! product realizes `e_i e_j + e_j e_i = 2 eta_ij`, the wedge product is the
//! metric-free exterior product, and the Berezin integral extracts the
//! coefficient of the top blade. Spinor representations are built from 2x2
//! tensor blocks so that the split algebra on `N + N` generators acts on
//! `2^N` dimensions.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::linalg::{int, Matrix, Scalar, SignedPermMatrix};

/// Signature of a quadratic space: `p` generators squaring to `+1` followed
/// by `q` generators squaring to `-1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub struct Metric {
    pub p: u32,
    pub q: u32,
}

impl Metric {
    pub fn new(p: u32, q: u32) -> Self {
        Metric { p, q }
    }

    pub fn generators(&self) -> u32 {
        self.p + self.q
    }

    /// `+1` or `-1` for generator `i`; positive-norm generators come first.
    pub fn sign_of(&self, i: u32) -> i8 {
        if i < self.p {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl({},{})", self.p, self.q)
    }
}

/// Identity of the algebra a multivector belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum AlgebraId {
    Clifford(Metric),
    Grassmann { generators: u32 },
}

impl AlgebraId {
    pub fn generators(&self) -> u32 {
        match self {
            AlgebraId::Clifford(m) => m.generators(),
            AlgebraId::Grassmann { generators } => *generators,
        }
    }

    /// Total dimension `2^n` of the algebra as a vector space.
    pub fn dimension(&self) -> u64 {
        1u64 << self.generators()
    }

    pub fn top_mask(&self) -> u64 {
        let n = self.generators();
        if n == 64 {
            u64::MAX
        } else {
            (1u64 << n) - 1
        }
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraId::Clifford(m) => write!(f, "{m}"),
            AlgebraId::Grassmann { generators } => write!(f, "Gr({generators})"),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliffordError {
    #[error("algebra mismatch: {left} vs {right}")]
    AlgebraMismatch { left: String, right: String },
    #[error("operation requires a Clifford algebra, got {algebra}")]
    NotClifford { algebra: String },
    #[error("generator index {index} out of range for {algebra}")]
    GeneratorOutOfRange { index: u32, algebra: String },
    #[error("blade mask {mask:#x} uses generators outside {algebra}")]
    BladeOutOfRange { mask: u64, algebra: String },
    #[error("{n} generators exceed the 63-generator blade mask limit")]
    TooManyGenerators { n: u32 },
    #[error("dense representation of dimension {dim} exceeds the 4096 limit")]
    DenseTooLarge { dim: usize },
    #[error("bad serialized coefficient: {0}")]
    BadTriple(String),
}

/// Parity sign for sorting the concatenation of two ascending blades:
/// counts pairs `(i in a, j in b)` with `i > j`.
pub(crate) fn reorder_sign(a: u64, b: u64) -> i8 {
    let mut shifted = a >> 1;
    let mut count = 0u32;
    while shifted != 0 {
        count += (shifted & b).count_ones();
        shifted >>= 1;
    }
    if count.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Multivector with exact rational coefficients, keyed by basis blade.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Multivector {
    algebra: AlgebraId,
    terms: BTreeMap<u64, Scalar>,
}

impl Multivector {
    pub fn zero(algebra: AlgebraId) -> Self {
        check_generator_count(algebra);
        Multivector {
            algebra,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(algebra: AlgebraId, value: Scalar) -> Self {
        let mut mv = Self::zero(algebra);
        if !value.is_zero() {
            mv.terms.insert(0, value);
        }
        mv
    }

    pub fn generator(algebra: AlgebraId, index: u32) -> Result<Self, CliffordError> {
        if index >= algebra.generators() {
            return Err(CliffordError::GeneratorOutOfRange {
                index,
                algebra: algebra.to_string(),
            });
        }
        Self::basis_blade(algebra, 1u64 << index)
    }

    pub fn basis_blade(algebra: AlgebraId, mask: u64) -> Result<Self, CliffordError> {
        check_generator_count(algebra);
        if mask & !algebra.top_mask() != 0 {
            return Err(CliffordError::BladeOutOfRange {
                mask,
                algebra: algebra.to_string(),
            });
        }
        let mut mv = Self::zero(algebra);
        mv.terms.insert(mask, int(1));
        Ok(mv)
    }

    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &Scalar)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, mask: u64) -> Scalar {
        self.terms.get(&mask).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    fn insert(&mut self, mask: u64, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&mask) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&mask);
                }
            }
            None => {
                self.terms.insert(mask, coeff);
            }
        }
    }

    fn check_same(&self, other: &Self, _op: &'static str) -> Result<(), CliffordError> {
        if self.algebra != other.algebra {
            return Err(CliffordError::AlgebraMismatch {
                left: self.algebra.to_string(),
                right: other.algebra.to_string(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, CliffordError> {
        self.check_same(other, "add")?;
        let mut out = self.clone();
        for (mask, c) in other.terms() {
            out.insert(mask, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, CliffordError> {
        self.check_same(other, "sub")?;
        let mut out = self.clone();
        for (mask, c) in other.terms() {
            out.insert(mask, -c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        Multivector {
            algebra: self.algebra,
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero(self.algebra);
        }
        Multivector {
            algebra: self.algebra,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, c.clone() * s.clone()))
                .collect(),
        }
    }

    /// Geometric (Clifford) product. Generators obey
    /// `e_i e_j + e_j e_i = 2 eta_ij`.
    pub fn geometric_product(&self, other: &Self) -> Result<Self, CliffordError> {
        self.check_same(other, "geometric_product")?;
        let AlgebraId::Clifford(metric) = self.algebra else {
            return Err(CliffordError::NotClifford {
                algebra: self.algebra.to_string(),
            });
        };
        let mut out = Self::zero(self.algebra);
        for (ma, ca) in self.terms() {
            for (mb, cb) in other.terms() {
                let mut sign = reorder_sign(ma, mb);
                let mut common = ma & mb;
                while common != 0 {
                    let i = common.trailing_zeros();
                    sign *= metric.sign_of(i);
                    common &= common - 1;
                }
                let coeff = ca.clone() * cb.clone() * int(i64::from(sign));
                out.insert(ma ^ mb, coeff);
            }
        }
        Ok(out)
    }

    /// Exterior product: associative, graded anticommutative, and `s ^ s = 0`
    /// for grade-1 elements. Available in both Grassmann and Clifford
    /// algebras; the metric plays no role.
    pub fn wedge(&self, other: &Self) -> Result<Self, CliffordError> {
        self.check_same(other, "wedge")?;
        let mut out = Self::zero(self.algebra);
        for (ma, ca) in self.terms() {
            for (mb, cb) in other.terms() {
                if ma & mb != 0 {
                    continue;
                }
                let sign = reorder_sign(ma, mb);
                out.insert(ma | mb, ca.clone() * cb.clone() * int(i64::from(sign)));
            }
        }
        Ok(out)
    }

    /// Sum of the grade-`k` terms.
    pub fn grade_project(&self, k: u32) -> Self {
        Multivector {
            algebra: self.algebra,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.count_ones() == k)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn grades(&self) -> Vec<u32> {
        let mut gs: Vec<u32> = self.terms.keys().map(|m| m.count_ones()).collect();
        gs.sort_unstable();
        gs.dedup();
        gs
    }

    /// Reversal anti-automorphism: a grade-`k` blade picks up
    /// `(-1)^(k(k-1)/2)`.
    pub fn reversal(&self) -> Self {
        Multivector {
            algebra: self.algebra,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let k = m.count_ones();
                    let c = if k % 4 == 2 || k % 4 == 3 {
                        -c.clone()
                    } else {
                        c.clone()
                    };
                    (*m, c)
                })
                .collect(),
        }
    }

    /// Berezin integral with respect to the top element: the coefficient of
    /// the blade containing every generator.
    pub fn berezin_top(&self) -> Scalar {
        self.coeff(self.algebra.top_mask())
    }

    /// Serialization as `(blade bitmask, numerator, denominator)` triples.
    pub fn to_triples(&self) -> Vec<(u64, String, String)> {
        self.terms
            .iter()
            .map(|(m, c)| (*m, c.numer().to_string(), c.denom().to_string()))
            .collect()
    }

    pub fn from_triples(
        algebra: AlgebraId,
        triples: &[(u64, String, String)],
    ) -> Result<Self, CliffordError> {
        let mut mv = Self::zero(algebra);
        for (mask, num, den) in triples {
            if *mask & !algebra.top_mask() != 0 {
                return Err(CliffordError::BladeOutOfRange {
                    mask: *mask,
                    algebra: algebra.to_string(),
                });
            }
            let n: num_bigint::BigInt = num
                .parse()
                .map_err(|_| CliffordError::BadTriple(num.clone()))?;
            let d: num_bigint::BigInt = den
                .parse()
                .map_err(|_| CliffordError::BadTriple(den.clone()))?;
            if d.is_zero() {
                return Err(CliffordError::BadTriple(den.clone()));
            }
            mv.insert(*mask, Scalar::new(n, d));
        }
        Ok(mv)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self
            .to_triples()
            .into_iter()
            .map(|(m, n, d)| serde_json::json!([m, n, d]))
            .collect::<Vec<_>>())
    }
}

fn check_generator_count(algebra: AlgebraId) {
    assert!(
        algebra.generators() <= 63,
        "blade masks support at most 63 generators"
    );
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mask, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if mask == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "({c})")?;
                let mut m = mask;
                write!(f, "e")?;
                while m != 0 {
                    let i = m.trailing_zeros();
                    write!(f, "{}", i + 1)?;
                    m &= m - 1;
                }
            }
        }
        Ok(())
    }
}

/// All bivectors `e_i e_j`, `i < j`, of the Clifford algebra on `metric`.
/// There are `(p+q choose 2)` of them; for the split metric `(N, N)` that is
/// `N (2N - 1)`, the dimension of `spin(N, N)`.
pub fn second_grade_basis(metric: Metric) -> Vec<Multivector> {
    let alg = AlgebraId::Clifford(metric);
    let n = metric.generators();
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            out.push(
                Multivector::basis_blade(alg, (1u64 << i) | (1u64 << j))
                    .expect("bivector blade in range"),
            );
        }
    }
    out
}

/// Witness of a failed generator relation.
#[derive(Clone, Debug)]
pub struct RelationWitness {
    pub i: usize,
    pub j: usize,
    pub expected: i64,
}

impl fmt::Display for RelationWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "generators {} and {} fail G_i G_j + G_j G_i = {} I",
            self.i, self.j, self.expected
        )
    }
}

/// Matrix representation of a Clifford algebra: generator matrices satisfying
/// `G_i G_j + G_j G_i = 2 eta_ij I` exactly.
///
/// Generators are stored as signed permutation matrices (every generator is a
/// tensor chain over `{I, X, Z, [[0,1],[-1,0]]}`), which keeps relation checks
/// linear in the dimension. Dense copies are available for dimensions up to
/// 4096.
#[derive(Clone, Debug)]
pub struct CliffordRep {
    metric: Metric,
    dim: usize,
    generators: Vec<SignedPermMatrix>,
}

impl CliffordRep {
    pub fn metric(&self) -> Metric {
        self.metric
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn generator(&self, i: usize) -> &SignedPermMatrix {
        &self.generators[i]
    }

    pub fn generators(&self) -> &[SignedPermMatrix] {
        &self.generators
    }

    pub fn generator_dense(&self, i: usize) -> Result<Matrix<Scalar>, CliffordError> {
        if self.dim > 4096 {
            return Err(CliffordError::DenseTooLarge { dim: self.dim });
        }
        Ok(self.generators[i].to_dense())
    }

    pub fn dense_generators(&self) -> Result<Vec<Matrix<Scalar>>, CliffordError> {
        (0..self.generators.len())
            .map(|i| self.generator_dense(i))
            .collect()
    }

    /// Exact check of all anticommutation relations; `Err` carries the first
    /// failing pair.
    pub fn relation_check(&self) -> Result<(), RelationWitness> {
        let n = self.generators.len();
        for i in 0..n {
            for j in i..n {
                let expected = if i == j {
                    2 * i64::from(self.metric.sign_of(i as u32))
                } else {
                    0
                };
                let got = self.generators[i]
                    .anticommutator_scaled_identity(&self.generators[j]);
                if got != Some(expected) {
                    return Err(RelationWitness { i, j, expected });
                }
            }
        }
        Ok(())
    }
}

/// Builds a matrix representation of `Cl(p, q)`.
///
/// Slot `k` of an `m`-fold tensor chain hosts `Z^(k-1) (x) X (x) I^(m-k)`
/// (squares `+I`) and `Z^(k-1) (x) [[0,1],[-1,0]] (x) I^(m-k)` (squares
/// `-I`); the full chain `Z^m` supplies one further positive generator. All
/// of these pairwise anticommute. The split metric `(N, N)` lands on `2^N`
/// dimensions. For odd `p + q` the construction factors through an even-type
/// quotient (the volume element is not represented faithfully), which is the
/// documented convention here.
pub fn matrix_rep(metric: Metric) -> CliffordRep {
    let p = metric.p as usize;
    let q = metric.q as usize;
    let slots = q.max(p.saturating_sub(1));
    let dim = 1usize << slots;

    let chain = |kind: u8, slot: usize| -> SignedPermMatrix {
        use crate::linalg::signed_perm_factors::{id2, x, y_real, z};
        let mut acc = SignedPermMatrix::identity(1);
        for k in 0..slots {
            let factor = match (k < slot, k == slot, kind) {
                (true, _, _) => z(),
                (_, true, 0) => x(),
                (_, true, 1) => y_real(),
                _ => id2(),
            };
            acc = acc.kron(&factor);
        }
        acc
    };
    let omega = || -> SignedPermMatrix {
        use crate::linalg::signed_perm_factors::z;
        let mut acc = SignedPermMatrix::identity(1);
        for _ in 0..slots {
            acc = acc.kron(&z());
        }
        acc
    };

    let mut generators = Vec::with_capacity(p + q);
    for i in 0..p {
        if i < slots {
            generators.push(chain(0, i));
        } else {
            // Only reachable when p = slots + 1; the full Z chain is the one
            // extra positive generator the slot construction admits.
            generators.push(omega());
        }
    }
    for j in 0..q {
        generators.push(chain(1, j));
    }
    debug_assert_eq!(generators.len(), p + q);
    CliffordRep {
        metric,
        dim,
        generators,
    }
}

#[cfg(test)]
mod tests {
    use num_traits::One;

    use super::*;
    use crate::linalg::{frac, int};

    fn cl(p: u32, q: u32) -> AlgebraId {
        AlgebraId::Clifford(Metric::new(p, q))
    }

    fn gr(n: u32) -> AlgebraId {
        AlgebraId::Grassmann { generators: n }
    }

    #[test]
    fn generator_squares_follow_metric() {
        let e1 = Multivector::generator(cl(1, 0), 0).unwrap();
        let sq = e1.geometric_product(&e1).unwrap();
        assert_eq!(sq, Multivector::scalar(cl(1, 0), int(1)));

        let f1 = Multivector::generator(cl(0, 1), 0).unwrap();
        let sq = f1.geometric_product(&f1).unwrap();
        assert_eq!(sq, Multivector::scalar(cl(0, 1), int(-1)));
    }

    #[test]
    fn sum_of_generators_squares() {
        // (e1+e2)^2 = e1^2 + e1 e2 + e2 e1 + e2^2 = 2 in Cl(2,0), expanded by
        // anticommutation by hand.
        let alg = cl(2, 0);
        let v = Multivector::generator(alg, 0)
            .unwrap()
            .add(&Multivector::generator(alg, 1).unwrap())
            .unwrap();
        let sq = v.geometric_product(&v).unwrap();
        assert_eq!(sq, Multivector::scalar(alg, int(2)));
    }

    #[test]
    fn anticommutation_all_pairs_small() {
        for p in 0..=4u32 {
            for q in 0..=(4 - p) {
                if p + q == 0 {
                    continue;
                }
                let alg = cl(p, q);
                let n = p + q;
                for i in 0..n {
                    for j in 0..n {
                        let ei = Multivector::generator(alg, i).unwrap();
                        let ej = Multivector::generator(alg, j).unwrap();
                        let anti = ei
                            .geometric_product(&ej)
                            .unwrap()
                            .add(&ej.geometric_product(&ei).unwrap())
                            .unwrap();
                        let expected = if i == j {
                            Multivector::scalar(
                                alg,
                                int(2 * i64::from(Metric::new(p, q).sign_of(i))),
                            )
                        } else {
                            Multivector::zero(alg)
                        };
                        assert_eq!(anti, expected, "pair ({i},{j}) in Cl({p},{q})");
                    }
                }
            }
        }
    }

    #[test]
    fn wedge_exclusion_and_antisymmetry() {
        let alg = gr(3);
        let s = Multivector::generator(alg, 0)
            .unwrap()
            .add(&Multivector::generator(alg, 2).unwrap().scale(&frac(3, 7)))
            .unwrap();
        assert!(s.wedge(&s).unwrap().is_zero());

        let e1 = Multivector::generator(alg, 0).unwrap();
        let e2 = Multivector::generator(alg, 1).unwrap();
        let e12 = Multivector::basis_blade(alg, 0b11).unwrap();
        assert_eq!(e1.wedge(&e2).unwrap(), e12);
        assert_eq!(e2.wedge(&e1).unwrap(), e12.neg());
    }

    #[test]
    fn wedge_bilinear_expansion() {
        // (e1+e2) ^ (e1-e2) = -2 e12, by expanding the four cross terms.
        let alg = gr(2);
        let e1 = Multivector::generator(alg, 0).unwrap();
        let e2 = Multivector::generator(alg, 1).unwrap();
        let sum = e1.add(&e2).unwrap();
        let diff = e1.sub(&e2).unwrap();
        let expected = Multivector::basis_blade(alg, 0b11).unwrap().scale(&int(-2));
        assert_eq!(sum.wedge(&diff).unwrap(), expected);
    }

    #[test]
    fn grade_projection() {
        let alg = cl(2, 0);
        let mv = Multivector::scalar(alg, int(1))
            .add(&Multivector::generator(alg, 0).unwrap())
            .unwrap()
            .add(&Multivector::basis_blade(alg, 0b11).unwrap())
            .unwrap();
        assert_eq!(
            mv.grade_project(1),
            Multivector::generator(alg, 0).unwrap()
        );
        assert_eq!(
            Multivector::scalar(alg, int(5)).grade_project(0),
            Multivector::scalar(alg, int(5))
        );
    }

    #[test]
    fn grade_two_of_vector_product_is_wedge() {
        let alg = cl(2, 1);
        let u = Multivector::generator(alg, 0)
            .unwrap()
            .add(&Multivector::generator(alg, 2).unwrap().scale(&int(2)))
            .unwrap();
        let v = Multivector::generator(alg, 1)
            .unwrap()
            .sub(&Multivector::generator(alg, 0).unwrap().scale(&frac(1, 3)))
            .unwrap();
        let product = u.geometric_product(&v).unwrap();
        assert_eq!(product.grade_project(2), u.wedge(&v).unwrap());
    }

    #[test]
    fn reversal_signs() {
        let alg = cl(3, 0);
        let e1 = Multivector::generator(alg, 0).unwrap();
        assert_eq!(e1.reversal(), e1);
        let e12 = Multivector::basis_blade(alg, 0b11).unwrap();
        assert_eq!(e12.reversal(), e12.neg());
    }

    #[test]
    fn berezin_top_examples() {
        let alg = gr(3);
        let top = Multivector::basis_blade(alg, 0b111).unwrap();
        assert!(top.berezin_top().is_one());
        let e1 = Multivector::generator(alg, 0).unwrap();
        assert!(e1.berezin_top().is_zero());

        // psi = e1 + e2 e3: psi ^ psi has top coefficient 2, twice the pairing
        // of the complementary blades (the two cross terms agree in sign for
        // N = 3).
        let psi = e1
            .add(&Multivector::basis_blade(alg, 0b110).unwrap())
            .unwrap();
        assert_eq!(psi.wedge(&psi).unwrap().berezin_top(), int(2));
    }

    #[test]
    fn algebra_mismatch_rejected() {
        let a = Multivector::generator(cl(2, 0), 0).unwrap();
        let b = Multivector::generator(cl(1, 1), 0).unwrap();
        assert!(a.geometric_product(&b).is_err());
        let g = Multivector::generator(gr(2), 0).unwrap();
        assert!(g.geometric_product(&g).is_err());
    }

    #[test]
    fn second_grade_counts() {
        assert_eq!(second_grade_basis(Metric::new(2, 0)).len(), 1);
        assert_eq!(second_grade_basis(Metric::new(3, 3)).len(), 15);
        for n in 1..=5u32 {
            let count = second_grade_basis(Metric::new(n, n)).len() as u32;
            assert_eq!(count, n * (2 * n - 1));
        }
    }

    #[test]
    fn bivector_commutators_stay_grade_two() {
        let metric = Metric::new(2, 2);
        let basis = second_grade_basis(metric);
        for a in &basis {
            for b in &basis {
                let comm = a
                    .geometric_product(b)
                    .unwrap()
                    .sub(&b.geometric_product(a).unwrap())
                    .unwrap();
                for g in comm.grades() {
                    assert_eq!(g, 2);
                }
            }
        }
    }

    #[test]
    fn rep_cl11() {
        let rep = matrix_rep(Metric::new(1, 1));
        assert_eq!(rep.dim(), 2);
        assert!(rep.relation_check().is_ok());
        let g0 = rep.generator_dense(0).unwrap();
        let g1 = rep.generator_dense(1).unwrap();
        assert_eq!(g0.mul(&g0).unwrap(), Matrix::<Scalar>::identity(2));
        assert_eq!(
            g1.mul(&g1).unwrap(),
            Matrix::<Scalar>::identity(2).neg()
        );
        assert!(g0.anticommutator(&g1).unwrap().is_zero());
    }

    #[test]
    fn rep_cl33() {
        let rep = matrix_rep(Metric::new(3, 3));
        assert_eq!(rep.dim(), 8);
        assert_eq!(rep.generator_count(), 6);
        assert!(rep.relation_check().is_ok());
    }

    #[test]
    fn rep_split_dimension_law() {
        for n in 1..=6u32 {
            let rep = matrix_rep(Metric::new(n, n));
            assert_eq!(rep.dim(), 1usize << n);
            assert!(rep.relation_check().is_ok());
        }
    }

    #[test]
    fn rep_feynman_factor_is_four_dimensional() {
        for metric in [Metric::new(3, 1), Metric::new(1, 3)] {
            let rep = matrix_rep(metric);
            assert!(rep.relation_check().is_ok(), "{metric}");
        }
        assert_eq!(matrix_rep(Metric::new(3, 1)).dim(), 4);
    }

    #[test]
    fn triples_round_trip() {
        let alg = cl(2, 1);
        let mv = Multivector::generator(alg, 0)
            .unwrap()
            .scale(&frac(-3, 5))
            .add(&Multivector::basis_blade(alg, 0b101).unwrap())
            .unwrap();
        let t = mv.to_triples();
        assert_eq!(Multivector::from_triples(alg, &t).unwrap(), mv);
    }
}
