//! Hereditarily finite sets, their serial coding, and the quantum rank tower.
//!
//! A finite set built from the empty set alone carries the serial number
//! `n = sum over children of 2^serial(child)`; rank `r` sets occupy exactly
//! the serial interval `[D[r-1], D[r])` where `D[0] = 1` and
//! `D[r] = 2^D[r-1]`. The quantum rank space at rank `r` is the Grassmann
//! algebra over the `D[r-1]` lower sets, so serials double as basis blade
//! masks. On that space live the brace (linearized singleton), the per-rank
//! exterior product, the Berezin pairing with its exact signature, and the
//! Fock action of creation and annihilation operators that realizes the
//! split Clifford algebra on the rank space.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::clifford::{reorder_sign, AlgebraId, CliffordError, Multivector};
use crate::linalg::{
    frac, int, rank as matrix_rank, solve_linear, LinearSolution, Matrix, Scalar,
    SignedPermMatrix,
};

#[derive(Debug, thiserror::Error)]
pub enum QSetError {
    #[error("rank {0} is too large for this operation")]
    RankTooLarge(u32),
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: u32, right: u32 },
    #[error("serial {serial} does not belong to the rank-{rank} space")]
    SerialOutOfRange { serial: u64, rank: u32 },
    #[error("child serial {0} is too large to exponentiate")]
    SerialOverflow(BigUint),
    #[error(transparent)]
    Clifford(#[from] CliffordError),
}

/// Iterated exponential `D[r]`: 1, 2, 4, 16, 65536, ... `None` once the
/// value leaves `u64`.
pub fn dim_of_rank(r: u32) -> Option<u64> {
    let mut d: u64 = 1;
    for _ in 0..r {
        if d >= 64 {
            return None;
        }
        d = 1u64 << d;
    }
    Some(d)
}

/// `D[r]` as a big integer, feasible through `r = 5`.
pub fn dim_of_rank_big(r: u32) -> Option<BigUint> {
    let mut d = BigUint::one();
    for _ in 0..r {
        let exp = d.to_u64()?;
        if exp > 1_000_000 {
            return None;
        }
        d = BigUint::one() << exp;
    }
    Some(d)
}

/// Number of Grassmann generators of the rank-`r` space: `D[r-1]`, zero at
/// rank zero.
pub fn generators_of_rank(r: u32) -> Option<u64> {
    if r == 0 {
        Some(0)
    } else {
        dim_of_rank(r - 1)
    }
}

/// Rank of a serial number: 0 for 0, else one more than the largest rank
/// among the set bits.
pub fn rank_of_serial(n: u64) -> u32 {
    // Bit indices are below 64, so a small table covers the recursion.
    fn small(n: u64, table: &mut [Option<u32>; 64]) -> u32 {
        if n == 0 {
            return 0;
        }
        let mut max = 0;
        let mut m = n;
        while m != 0 {
            let b = m.trailing_zeros() as usize;
            let r = match table[b] {
                Some(r) => r,
                None => {
                    let r = small(b as u64, table);
                    table[b] = Some(r);
                    r
                }
            };
            max = max.max(r);
            m &= m - 1;
        }
        max + 1
    }
    let mut table: [Option<u32>; 64] = [None; 64];
    small(n, &mut table)
}

/// Hereditarily finite set: a finite set of smaller such sets, cached with
/// its serial number and rank. Equality and order go by serial.
#[derive(Debug)]
pub struct PerfiniteSet {
    children: Vec<Arc<PerfiniteSet>>,
    serial: BigUint,
    rank: u32,
}

impl PartialEq for PerfiniteSet {
    fn eq(&self, other: &Self) -> bool {
        self.serial == other.serial
    }
}
impl Eq for PerfiniteSet {}
impl PartialOrd for PerfiniteSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for PerfiniteSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.serial.cmp(&other.serial)
    }
}

fn memo() -> &'static RwLock<HashMap<u64, Arc<PerfiniteSet>>> {
    static MEMO: OnceLock<RwLock<HashMap<u64, Arc<PerfiniteSet>>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

impl PerfiniteSet {
    pub fn empty() -> Arc<PerfiniteSet> {
        set_of(0)
    }

    /// Builds a set from children; duplicates collapse. Fails only when a
    /// child serial is too large to appear as a power-of-two exponent.
    pub fn from_children(
        mut children: Vec<Arc<PerfiniteSet>>,
    ) -> Result<Arc<PerfiniteSet>, QSetError> {
        children.sort();
        children.dedup_by(|a, b| a.serial == b.serial);
        let mut serial = BigUint::zero();
        let mut rank = 0;
        for c in &children {
            let exp = c
                .serial
                .to_u64()
                .filter(|&e| e <= 1_000_000)
                .ok_or_else(|| QSetError::SerialOverflow(c.serial.clone()))?;
            serial += BigUint::one() << exp;
            rank = rank.max(c.rank + 1);
        }
        Ok(Arc::new(PerfiniteSet {
            children,
            serial,
            rank,
        }))
    }

    pub fn singleton(a: Arc<PerfiniteSet>) -> Result<Arc<PerfiniteSet>, QSetError> {
        Self::from_children(vec![a])
    }

    pub fn children(&self) -> &[Arc<PerfiniteSet>] {
        &self.children
    }

    pub fn serial(&self) -> &BigUint {
        &self.serial
    }

    pub fn serial_u64(&self) -> Option<u64> {
        self.serial.to_u64()
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// Canonical bracket string, children in descending serial order:
    /// `{{∅},∅}` for serial 3.
    pub fn bracket_string(&self) -> String {
        if self.children.is_empty() {
            return "∅".to_string();
        }
        let inner: Vec<String> = self
            .children
            .iter()
            .rev()
            .map(|c| c.bracket_string())
            .collect();
        format!("{{{}}}", inner.join(","))
    }
}

impl std::fmt::Display for PerfiniteSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.bracket_string())
    }
}

/// Serial number of a set: `sum 2^serial(child)`.
pub fn serial_of(s: &PerfiniteSet) -> &BigUint {
    s.serial()
}

/// The set with serial `n`, decoding set bits as children. Total on `u64`.
/// Results are memoized in a shared table safe for concurrent reads and
/// idempotent inserts.
pub fn set_of(n: u64) -> Arc<PerfiniteSet> {
    if let Some(hit) = memo().read().expect("memo lock").get(&n) {
        return Arc::clone(hit);
    }
    let mut children = Vec::new();
    let mut m = n;
    while m != 0 {
        let b = m.trailing_zeros() as u64;
        children.push(set_of(b));
        m &= m - 1;
    }
    let serial = BigUint::from(n);
    let rank = rank_of_serial(n);
    let built = Arc::new(PerfiniteSet {
        children,
        serial,
        rank,
    });
    let mut w = memo().write().expect("memo lock");
    Arc::clone(w.entry(n).or_insert(built))
}

/// Symmetric difference of child sets; on serials this is bitwise XOR, with
/// the empty set as identity and every set its own inverse.
pub fn disjoint_union(
    a: &Arc<PerfiniteSet>,
    b: &Arc<PerfiniteSet>,
) -> Result<Arc<PerfiniteSet>, QSetError> {
    let mut children = Vec::new();
    let mut ai = a.children().iter().peekable();
    let mut bi = b.children().iter().peekable();
    loop {
        match (ai.peek(), bi.peek()) {
            (None, None) => break,
            (Some(_), None) => children.push(Arc::clone(ai.next().unwrap())),
            (None, Some(_)) => children.push(Arc::clone(bi.next().unwrap())),
            (Some(x), Some(y)) => match x.serial().cmp(y.serial()) {
                std::cmp::Ordering::Less => children.push(Arc::clone(ai.next().unwrap())),
                std::cmp::Ordering::Greater => {
                    children.push(Arc::clone(bi.next().unwrap()))
                }
                std::cmp::Ordering::Equal => {
                    ai.next();
                    bi.next();
                }
            },
        }
    }
    PerfiniteSet::from_children(children)
}

/// One row of the serial table: the sets of rank exactly `r`.
#[derive(Clone, Debug)]
pub struct TableRow {
    pub rank: u32,
    pub start: u64,
    pub width: u64,
    /// Listed serials (the row is truncated once it exceeds the listing cap).
    pub serials: Vec<u64>,
    pub sets: Vec<String>,
    pub truncated: bool,
}

/// Rows `0 ..= max_rank` of the serial table; rank 4 is the last row whose
/// bounds fit in machine integers.
pub fn table_rows(max_rank: u32, listing_cap: usize) -> Result<Vec<TableRow>, QSetError> {
    if max_rank > 4 {
        return Err(QSetError::RankTooLarge(max_rank));
    }
    let mut rows = Vec::new();
    for r in 0..=max_rank {
        let start = if r == 0 { 0 } else { dim_of_rank(r - 1).unwrap() };
        let end = dim_of_rank(r).unwrap();
        let width = end - start;
        let listed = (width as usize).min(listing_cap);
        let serials: Vec<u64> = (start..start + listed as u64).collect();
        let sets: Vec<String> = serials
            .iter()
            .map(|&n| set_of(n).bracket_string())
            .collect();
        rows.push(TableRow {
            rank: r,
            start,
            width,
            serials,
            sets,
            truncated: (width as usize) > listed,
        });
    }
    Ok(rows)
}

/// Vector in the rank-`r` quantum set space: a Grassmann element over the
/// `D[r-1]` lower sets, coefficients keyed by serial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QSetVector {
    rank: u32,
    mv: Multivector,
}

fn grassmann_of_rank(r: u32) -> Result<AlgebraId, QSetError> {
    let gens = generators_of_rank(r).ok_or(QSetError::RankTooLarge(r))?;
    if gens > 63 {
        return Err(QSetError::RankTooLarge(r));
    }
    Ok(AlgebraId::Grassmann {
        generators: gens as u32,
    })
}

impl QSetVector {
    pub fn zero(rank: u32) -> Result<Self, QSetError> {
        Ok(QSetVector {
            rank,
            mv: Multivector::zero(grassmann_of_rank(rank)?),
        })
    }

    /// Basis probability vector `1_serial` at the given rank.
    pub fn basis(rank: u32, serial: u64) -> Result<Self, QSetError> {
        let alg = grassmann_of_rank(rank)?;
        if serial >= alg.dimension() {
            return Err(QSetError::SerialOutOfRange { serial, rank });
        }
        Ok(QSetVector {
            rank,
            mv: Multivector::basis_blade(alg, serial)?,
        })
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn multivector(&self) -> &Multivector {
        &self.mv
    }

    pub fn coeff(&self, serial: u64) -> Scalar {
        self.mv.coeff(serial)
    }

    pub fn is_zero(&self) -> bool {
        self.mv.is_zero()
    }

    pub fn add(&self, other: &Self) -> Result<Self, QSetError> {
        self.check_rank(other)?;
        Ok(QSetVector {
            rank: self.rank,
            mv: self.mv.add(&other.mv)?,
        })
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        QSetVector {
            rank: self.rank,
            mv: self.mv.scale(s),
        }
    }

    fn check_rank(&self, other: &Self) -> Result<(), QSetError> {
        if self.rank != other.rank {
            return Err(QSetError::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(())
    }
}

/// Linear extension of the singleton brace: the basis set with serial `n`
/// maps to the rank-`r+1` generator monomial `2^n`.
pub fn brace(v: &QSetVector) -> Result<QSetVector, QSetError> {
    let target_rank = v.rank() + 1;
    let alg = grassmann_of_rank(target_rank)?;
    let mut out = Multivector::zero(alg);
    for (serial, c) in v.multivector().terms() {
        debug_assert!(serial < 64);
        let blade = Multivector::basis_blade(alg, 1u64 << serial)?;
        out = out.add(&blade.scale(c))?;
    }
    Ok(QSetVector {
        rank: target_rank,
        mv: out,
    })
}

/// Per-rank exterior product: `1_m ^ 1_n = +-1_(m xor n)` when the serials
/// share no generator, zero otherwise. Cross-rank products are errors, not
/// coercions.
pub fn qwedge(u: &QSetVector, v: &QSetVector) -> Result<QSetVector, QSetError> {
    u.check_rank(v)?;
    Ok(QSetVector {
        rank: u.rank,
        mv: u.mv.wedge(&v.mv)?,
    })
}

/// Berezin pairing on the rank-`r` basis:
/// `beta(1_m, 1_n) = berezin_top(reversal(1_m) ^ 1_n)`, nonzero exactly on
/// complementary serial pairs.
pub fn pauli_pairing(rank: u32, m: u64, n: u64) -> Result<Scalar, QSetError> {
    let gens = generators_of_rank(rank).ok_or(QSetError::RankTooLarge(rank))?;
    if gens > 63 {
        return Err(QSetError::RankTooLarge(rank));
    }
    let full = if gens == 0 { 0 } else { (1u64 << gens) - 1 };
    if m > full || n > full {
        return Err(QSetError::SerialOutOfRange {
            serial: m.max(n),
            rank,
        });
    }
    if m ^ n != full {
        return Ok(Scalar::zero());
    }
    let k = m.count_ones();
    let rev = if k % 4 == 2 || k % 4 == 3 { -1i64 } else { 1 };
    Ok(int(rev * i64::from(reorder_sign(m, n))))
}

/// Dimensions of the space of forms `B` making every Fock Clifford generator
/// `G` symmetric, `G^T B = B G`, split by symmetry type of `B`.
#[derive(Clone, Debug)]
pub struct HermitianSpace {
    pub total: usize,
    pub symmetric: usize,
    pub antisymmetric: usize,
}

/// Signature report for the Berezin pairing on the rank-`r` space.
#[derive(Clone, Debug)]
pub struct PauliFormReport {
    pub rank: u32,
    pub generators: u64,
    pub dim: u64,
    /// Dense Gram matrix, kept only through rank 3.
    pub gram: Option<Matrix<Scalar>>,
    /// Signature (plus, minus, zero) of the symmetrized pairing.
    pub signature: (u64, u64, u64),
    /// `plus / minus` when the negative count is nonzero.
    pub ratio: Option<Scalar>,
    /// Whether the pairing itself is symmetric at this rank.
    pub symmetric: bool,
    pub exactly_neutral: bool,
    /// Solution space of the generator-symmetry condition, computed for
    /// rank <= 2 where the linear system stays small.
    pub hermitian_space: Option<HermitianSpace>,
    pub note: String,
}

/// Computes the Berezin pairing signature at rank `r <= 4`. Rank 4 is
/// handled purely through the complementary-pair combinatorics; the dense
/// Gram matrix is never materialized there.
pub fn pauli_form(rank: u32) -> Result<PauliFormReport, QSetError> {
    if rank > 4 {
        return Err(QSetError::RankTooLarge(rank));
    }
    let gens = generators_of_rank(rank).unwrap();
    let dim = dim_of_rank(rank).unwrap();
    let full: u64 = if gens == 0 { 0 } else { (1u64 << gens) - 1 };

    let pairing = |m: u64, n: u64| -> i64 {
        if m ^ n != full {
            return 0;
        }
        let k = m.count_ones();
        let rev = if k % 4 == 2 || k % 4 == 3 { -1i64 } else { 1 };
        rev * i64::from(reorder_sign(m, n))
    };

    let (mut plus, mut minus, mut zero) = (0u64, 0u64, 0u64);
    let mut symmetric = true;
    if gens == 0 {
        // One-dimensional space pairing with itself.
        plus = 1;
    } else {
        for m in 0..dim {
            let c = m ^ full;
            if m > c {
                continue;
            }
            let s = pairing(m, c);
            let s_back = pairing(c, m);
            if s != s_back {
                symmetric = false;
            }
            // Symmetrized 2x2 block [[0, t], [t, 0]] contributes one plus and
            // one minus when t != 0, two zeros otherwise.
            if s + s_back != 0 {
                plus += 1;
                minus += 1;
            } else {
                zero += 2;
            }
        }
    }

    let gram = if rank <= 3 {
        let d = dim as usize;
        Some(Matrix::from_fn(d, d, |i, j| int(pairing(i as u64, j as u64))))
    } else {
        None
    };

    let ratio = if minus > 0 {
        Some(frac(plus as i64, minus as i64))
    } else {
        None
    };
    let exactly_neutral = plus == minus && zero == 0;
    let note = if exactly_neutral {
        "exactly neutral under the top-blade pairing convention".to_string()
    } else if plus == 0 && minus == 0 {
        "symmetrized pairing vanishes at this rank (skew pairing)".to_string()
    } else {
        "not neutral".to_string()
    };

    let hermitian_space = if rank <= 2 {
        Some(hermitian_form_space(rank)?)
    } else {
        None
    };

    Ok(PauliFormReport {
        rank,
        generators: gens,
        dim,
        gram,
        signature: (plus, minus, zero),
        ratio,
        symmetric,
        exactly_neutral,
        hermitian_space,
        note,
    })
}

/// Signature rows for ranks `1 ..= r_max`.
pub fn neutrality_report(r_max: u32) -> Result<Vec<PauliFormReport>, QSetError> {
    (1..=r_max).map(pauli_form).collect()
}

/// Exterior multiplication by generator `g` on the rank space, as a dense
/// matrix over monomial basis columns.
pub fn exterior_op(gens: u64, g: u64, coeff: &Scalar) -> Matrix<Scalar> {
    let dim = 1usize << gens;
    let mut m = Matrix::<Scalar>::zeros(dim, dim);
    for col in 0..dim as u64 {
        if col & (1 << g) != 0 {
            continue;
        }
        let sign = reorder_sign(1 << g, col);
        m.set(
            (col | (1 << g)) as usize,
            col as usize,
            coeff.clone() * int(i64::from(sign)),
        );
    }
    m
}

/// Interior derivative against generator `g`.
pub fn interior_op(gens: u64, g: u64, coeff: &Scalar) -> Matrix<Scalar> {
    let dim = 1usize << gens;
    let mut m = Matrix::<Scalar>::zeros(dim, dim);
    for col in 0..dim as u64 {
        if col & (1 << g) == 0 {
            continue;
        }
        let rest = col & !(1 << g);
        let sign = reorder_sign(1 << g, rest);
        m.set(rest as usize, col as usize, coeff.clone() * int(i64::from(sign)));
    }
    m
}

/// The `2N` Fock Clifford generators on the rank space with `N` generators:
/// `ext(g) + int(g)` squaring to `+1` first, then `ext(g) - int(g)` squaring
/// to `-1`, as signed permutation matrices.
pub fn fock_clifford_generators(gens: u64) -> Vec<SignedPermMatrix> {
    let dim = 1usize << gens;
    let mut out = Vec::with_capacity(2 * gens as usize);
    for negative in [false, true] {
        for g in 0..gens {
            let mut targets = Vec::with_capacity(dim);
            let mut signs = Vec::with_capacity(dim);
            for col in 0..dim as u64 {
                targets.push((col ^ (1 << g)) as usize);
                let below = (col & ((1 << g) - 1)).count_ones();
                let mut sign = if below % 2 == 0 { 1i8 } else { -1 };
                if negative && col & (1 << g) != 0 {
                    sign = -sign;
                }
                signs.push(sign);
            }
            out.push(SignedPermMatrix::new(targets, signs));
        }
    }
    out
}

fn hermitian_form_space(rank: u32) -> Result<HermitianSpace, QSetError> {
    let gens = generators_of_rank(rank).ok_or(QSetError::RankTooLarge(rank))?;
    let dim = 1usize << gens;
    let d2 = dim * dim;
    let generators = fock_clifford_generators(gens);
    let dense: Vec<Matrix<Scalar>> = generators.iter().map(SignedPermMatrix::to_dense).collect();

    // Rows: for each generator G and each (i, j), the equation
    // (G^T B - B G)_{ij} = 0 in the unknowns B_{ab}.
    let build = |extra_symmetry: Option<i64>| -> usize {
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for g in &dense {
            for i in 0..dim {
                for j in 0..dim {
                    let mut row = vec![Scalar::zero(); d2];
                    for a in 0..dim {
                        // G^T B term: coefficient of B_{a j}.
                        let c = g.get(a, i).clone();
                        if !c.is_zero() {
                            row[a * dim + j] = row[a * dim + j].clone() + c;
                        }
                        // -B G term: coefficient of B_{i a}.
                        let c = g.get(a, j).clone();
                        if !c.is_zero() {
                            row[i * dim + a] = row[i * dim + a].clone() - c;
                        }
                    }
                    rows.push(row);
                }
            }
        }
        if let Some(sign) = extra_symmetry {
            for a in 0..dim {
                for b in (a + 1)..dim {
                    let mut row = vec![Scalar::zero(); d2];
                    row[a * dim + b] = int(1);
                    row[b * dim + a] = int(-sign);
                    rows.push(row);
                }
            }
        }
        let a = Matrix::from_rows(rows).expect("equal row lengths");
        let b = Matrix::<Scalar>::zeros(a.rows(), 1);
        match solve_linear(&a, &b).expect("homogeneous system") {
            LinearSolution::Solution { nullity, .. } => nullity,
            LinearSolution::Inconsistent => unreachable!("homogeneous"),
        }
    };

    Ok(HermitianSpace {
        total: build(None),
        symmetric: build(Some(1)),
        antisymmetric: build(Some(-1)),
    })
}

/// Witness-carrying outcome of the operator-algebra check at one rank.
#[derive(Clone, Debug)]
pub struct EndoIsoReport {
    pub rank: u32,
    pub generators: usize,
    pub space_dim: u64,
    pub relations_ok: bool,
    pub relation_witness: Option<String>,
    pub algebra_rank: u64,
    pub expected_rank: u64,
    pub full: bool,
}

/// Verifies that the Fock action of the doubled rank space realizes the
/// split Clifford relations on the rank-`r` spinor space and generates the
/// full operator algebra of dimension `D[r]^2`, by exact rank computation.
///
/// Every generator toggles one occupation bit, so each of the `2^(2N)` blade
/// products is supported on a single XOR translation class of matrix
/// entries. Products with distinct translations occupy disjoint entry sets,
/// which lets the span rank be computed exactly class by class.
pub fn endo_iso_check(rank: u32) -> Result<EndoIsoReport, QSetError> {
    if rank == 0 || rank > 3 {
        return Err(QSetError::RankTooLarge(rank));
    }
    let gens = generators_of_rank(rank).unwrap();
    let dim = dim_of_rank(rank).unwrap() as usize;
    let generators = fock_clifford_generators(gens);
    let n2 = generators.len();

    let mut relations_ok = true;
    let mut relation_witness = None;
    'outer: for i in 0..n2 {
        for j in i..n2 {
            let expected = if i != j {
                0
            } else if i < gens as usize {
                2
            } else {
                -2
            };
            let got = generators[i].anticommutator_scaled_identity(&generators[j]);
            if got != Some(expected) {
                relations_ok = false;
                relation_witness = Some(format!(
                    "generators {i} and {j}: anticommutator is not {expected} I"
                ));
                break 'outer;
            }
        }
    }

    // All 2^(2N) products, grouped by the XOR translation they induce on the
    // monomial basis.
    let mut groups: HashMap<usize, Vec<Vec<i8>>> = HashMap::new();
    let product_count: u64 = 1u64 << n2;
    for mask in 0..product_count {
        let mut prod = SignedPermMatrix::identity(dim);
        let mut m = mask;
        while m != 0 {
            let g = m.trailing_zeros() as usize;
            prod = prod.compose(&generators[g]);
            m &= m - 1;
        }
        let t = prod.target(0);
        // Sign vector over the monomial basis.
        let signs: Vec<i8> = (0..dim).map(|c| prod.sign(c)).collect();
        debug_assert!((0..dim).all(|c| prod.target(c) == c ^ t));
        groups.entry(t).or_default().push(signs);
    }

    let mut algebra_rank = 0u64;
    for (_, sign_rows) in groups {
        let rows = sign_rows.len();
        let m = Matrix::from_fn(rows, dim, |i, j| int(i64::from(sign_rows[i][j])));
        algebra_rank += matrix_rank(&m) as u64;
    }

    let expected_rank = (dim as u64) * (dim as u64);
    Ok(EndoIsoReport {
        rank,
        generators: n2,
        space_dim: dim as u64,
        relations_ok,
        relation_witness,
        algebra_rank,
        expected_rank,
        full: relations_ok && algebra_rank == expected_rank,
    })
}
