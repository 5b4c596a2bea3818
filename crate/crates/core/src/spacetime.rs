//! Finite quantum space-time operators.
//!
//! Position coordinates are finite sums of commuting one-site spin factors:
//! `x^mu = X [ gamma^mu(1) + ... + gamma^mu(N) ]` with a four-generator
//! Clifford factor per site, so the operator space has dimension `4^N` and
//! the full probability algebra dimension `16^N`. Spectra are exact ladders.
//! The orbital algebra so(3,3) is realized by spinor bivectors and carries a
//! contraction family whose singular limit is the Heisenberg-Poincare
//! algebra, the momentum-position-Lorentz algebra with a central imaginary
//! unit.

use num_traits::{One, Signed, Zero};

use crate::clifford::{matrix_rep, CliffordError, Metric};
use crate::lie::{builtins, ContractionFamily, LieError};
use crate::linalg::{
    self, charpoly, frac, int, rational_roots, LinalgError, Matrix, Poly, Scalar,
    SignedPermMatrix,
};

#[derive(Debug, thiserror::Error)]
pub enum SpacetimeError {
    #[error("chronon count must be at least 1")]
    NoChronons,
    #[error("metric for the chronon factor must be (3,1) or (1,3)")]
    BadMetric,
    #[error("coordinate index must lie in 1..=4, got {0}")]
    BadCoordinate(usize),
    #[error("dense realization of dimension {0} exceeds the 4096 limit")]
    DenseTooLarge(usize),
    #[error("generator index {got} out of range for {have} generators")]
    BadGeneratorIndex { got: usize, have: usize },
    #[error(transparent)]
    Clifford(#[from] CliffordError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Configuration of a chronon-sum coordinate operator.
#[derive(Clone, Debug)]
pub struct FeynmanConfig {
    /// Number of chronons N.
    pub chronons: usize,
    /// Display unit for spectra; all internals stay in integer units.
    pub chrone: Scalar,
    /// Metric of the four-generator factor, `(3,1)` or `(1,3)`.
    pub metric: Metric,
}

impl FeynmanConfig {
    pub fn new(chronons: usize, chrone: Scalar, metric: Metric) -> Result<Self, SpacetimeError> {
        if chronons == 0 {
            return Err(SpacetimeError::NoChronons);
        }
        if !(metric == Metric::new(3, 1) || metric == Metric::new(1, 3)) {
            return Err(SpacetimeError::BadMetric);
        }
        Ok(FeynmanConfig {
            chronons,
            chrone,
            metric,
        })
    }

    /// Dimension `4^N` of the matrix realization.
    pub fn operator_dim(&self) -> Option<u64> {
        4u64.checked_pow(self.chronons as u32)
    }

    /// Dimension `16^N` of the full Clifford probability space: sixteen
    /// basis blades per chronon factor.
    pub fn probability_dim(&self) -> num_bigint::BigUint {
        num_bigint::BigUint::from(16u32).pow(self.chronons as u32)
    }

    /// Generator index of `gamma^mu` in the factor representation; spatial
    /// coordinates are mu = 1..3 and mu = 4 is the time direction, which
    /// squares to `-I` under `(3,1)` and to `+I` under `(1,3)`.
    fn factor_index(&self, mu: usize) -> Result<usize, SpacetimeError> {
        if !(1..=4).contains(&mu) {
            return Err(SpacetimeError::BadCoordinate(mu));
        }
        Ok(if self.metric == Metric::new(3, 1) {
            // Generators ordered +,+,+,-: space first, then time.
            mu - 1
        } else {
            // (1,3): the single positive generator is the time direction.
            if mu == 4 {
                0
            } else {
                mu
            }
        })
    }

    fn factor_square(&self, mu: usize) -> Result<i8, SpacetimeError> {
        let idx = self.factor_index(mu)?;
        Ok(self.metric.sign_of(idx as u32))
    }
}

/// A coordinate operator kept in factored form: the same one-site factor at
/// each of `copies` sites, summed. Never materialized densely unless asked.
#[derive(Clone, Debug)]
pub struct KroneckerSum {
    factor: SignedPermMatrix,
    copies: usize,
}

impl KroneckerSum {
    pub fn factor(&self) -> &SignedPermMatrix {
        &self.factor
    }

    pub fn copies(&self) -> usize {
        self.copies
    }

    pub fn dim(&self) -> usize {
        self.factor.dim().pow(self.copies as u32)
    }

    /// `I (x) ... (x) factor (x) ... (x) I` with the factor at `site`.
    pub fn embedded(&self, site: usize) -> SignedPermMatrix {
        assert!(site < self.copies);
        let mut acc = SignedPermMatrix::identity(1);
        for s in 0..self.copies {
            if s == site {
                acc = acc.kron(&self.factor);
            } else {
                acc = acc.kron(&SignedPermMatrix::identity(self.factor.dim()));
            }
        }
        acc
    }

    /// Dense sum of the embedded factors.
    pub fn dense(&self) -> Result<Matrix<Scalar>, SpacetimeError> {
        let dim = self.dim();
        if dim > 4096 {
            return Err(SpacetimeError::DenseTooLarge(dim));
        }
        let terms: Vec<SignedPermMatrix> =
            (0..self.copies).map(|s| self.embedded(s)).collect();
        Ok(SignedPermMatrix::dense_sum(&terms))
    }

    /// Applies the operator to a coefficient vector without materializing
    /// anything dense; this is the only access path above the dense limit.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>, SpacetimeError> {
        let dim = self.dim();
        if v.len() != dim {
            return Err(SpacetimeError::BadGeneratorIndex {
                got: v.len(),
                have: dim,
            });
        }
        let d = self.factor.dim();
        let mut out = vec![Scalar::zero(); dim];
        for (idx, coeff) in v.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for site in 0..self.copies {
                // Little-endian from the right: site s occupies the digit of
                // weight d^(copies - 1 - s), matching iterated kron order.
                let weight = d.pow((self.copies - 1 - site) as u32);
                let digit = (idx / weight) % d;
                let target_digit = self.factor.target(digit);
                let sign = self.factor.sign(digit);
                let target = idx - digit * weight + target_digit * weight;
                let term = coeff.clone() * int(i64::from(sign));
                out[target] = out[target].clone() + term;
            }
        }
        Ok(out)
    }
}

/// The position operator `x^mu` for the given configuration, as a factored
/// Kronecker sum. Factors at distinct sites commute.
pub fn feynman_position(
    cfg: &FeynmanConfig,
    mu: usize,
) -> Result<KroneckerSum, SpacetimeError> {
    let idx = cfg.factor_index(mu)?;
    let rep = matrix_rep(cfg.metric);
    Ok(KroneckerSum {
        factor: rep.generator(idx).clone(),
        copies: cfg.chronons,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LadderKind {
    /// Eigenvalues are the listed exact rationals.
    Real,
    /// The factor squares to `-I`; eigenvalues are `i` times the listed
    /// values and the operator has no real spectrum.
    Imaginary,
}

/// Exact ladder spectrum of a chronon-sum coordinate.
#[derive(Clone, Debug)]
pub struct FeynmanSpectrum {
    pub kind: LadderKind,
    /// `(value, multiplicity)` sorted ascending; values carry the chrone
    /// factor. For [`LadderKind::Imaginary`] the value is the imaginary part.
    pub entries: Vec<(Scalar, u128)>,
}

impl FeynmanSpectrum {
    pub fn total_multiplicity(&self) -> u128 {
        self.entries.iter().map(|(_, m)| m).sum()
    }
}

/// Combinatorial spectrum of the N-fold sum: the one-site spectrum is
/// convolved with itself N times, multiplicities multiplying. The one-site
/// eigenvalues are `+-1`, each of multiplicity 2, either on the real axis or
/// on the imaginary axis depending on the square of `gamma^mu`.
pub fn feynman_spectrum(
    cfg: &FeynmanConfig,
    mu: usize,
) -> Result<FeynmanSpectrum, SpacetimeError> {
    let square = cfg.factor_square(mu)?;
    let kind = if square > 0 {
        LadderKind::Real
    } else {
        LadderKind::Imaginary
    };
    // One site: values +-1 with multiplicity dim/2 = 2 each. This follows
    // from gamma^2 = +-I with zero trace; the dense route below re-derives it
    // for small N without this shortcut.
    let site: Vec<(i64, u128)> = vec![(-1, 2), (1, 2)];
    let mut acc: Vec<(i64, u128)> = vec![(0, 1)];
    for _ in 0..cfg.chronons {
        let mut next: std::collections::BTreeMap<i64, u128> = std::collections::BTreeMap::new();
        for (v, m) in &acc {
            for (sv, sm) in &site {
                *next.entry(v + sv).or_insert(0) += m * sm;
            }
        }
        acc = next.into_iter().collect();
    }
    let entries = acc
        .into_iter()
        .map(|(v, m)| (int(v) * cfg.chrone.clone(), m))
        .collect();
    Ok(FeynmanSpectrum { kind, entries })
}

/// Dense eigendecomposition of the coordinate operator, feasible for
/// `N <= 3` in the real case. Values carry the chrone factor.
pub fn feynman_spectrum_dense(
    cfg: &FeynmanConfig,
    mu: usize,
) -> Result<FeynmanSpectrum, SpacetimeError> {
    let square = cfg.factor_square(mu)?;
    let op = feynman_position(cfg, mu)?;
    let dense = op.dense()?;
    if square > 0 {
        let spectrum = linalg::rational_spectrum(&dense)?;
        Ok(FeynmanSpectrum {
            kind: LadderKind::Real,
            entries: spectrum
                .eigenvalues
                .into_iter()
                .map(|(v, m)| (v * cfg.chrone.clone(), m as u128))
                .collect(),
        })
    } else {
        // Imaginary ladder: nonzero eigenvalues are conjugate pairs read off
        // the even part of the characteristic polynomial; only the rung at
        // zero is real.
        let q = operator_spectrum(&dense)?;
        let only_zero = q.real.iter().all(|(v, _)| v.is_zero());
        if !only_zero || q.unresolved_factor.is_some() {
            return Err(SpacetimeError::Linalg(LinalgError::NonRationalSpectrum {
                remaining: q.unresolved_factor.unwrap_or_else(Poly::one),
            }));
        }
        let mut entries: Vec<(Scalar, u128)> = Vec::new();
        for (v, mult) in q.real {
            entries.push((v * cfg.chrone.clone(), mult as u128));
        }
        for (mag, mult) in q.imaginary_pairs {
            entries.push((-mag.clone() * cfg.chrone.clone(), mult as u128));
            entries.push((mag * cfg.chrone.clone(), mult as u128));
        }
        entries.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(FeynmanSpectrum {
            kind: LadderKind::Imaginary,
            entries,
        })
    }
}

/// The fifteen so(3,3) generators realized as spinor bivectors
/// `sigma_ab = (1/2) G_a G_b` over the split representation on 8 dimensions,
/// with the index pairs labeling the physical blocks: the Lorentz 4x4 block,
/// the position column `(mu, 5)`, the momentum column `(mu, 6)` and the
/// central candidate `(5, 6)`.
#[derive(Clone, Debug)]
pub struct YangBlocks {
    pairs: Vec<(usize, usize)>,
    generators: Vec<Matrix<Scalar>>,
}

pub fn yang_generators() -> YangBlocks {
    let rep = matrix_rep(Metric::new(3, 3));
    let dense: Vec<Matrix<Scalar>> = (0..6)
        .map(|i| rep.generator(i).to_dense())
        .collect();
    let pairs = builtins::so_pq_pairs(3, 3);
    let half = frac(1, 2);
    let generators = pairs
        .iter()
        .map(|&(a, b)| dense[a].mul(&dense[b]).expect("8x8").scale(&half))
        .collect();
    YangBlocks { pairs, generators }
}

impl YangBlocks {
    pub fn count(&self) -> usize {
        self.generators.len()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn generators(&self) -> &[Matrix<Scalar>] {
        &self.generators
    }

    pub fn index_of(&self, a: usize, b: usize) -> Option<usize> {
        self.pairs
            .iter()
            .position(|&p| p == (a.min(b), a.max(b)))
    }

    /// `L_ab`, antisymmetric in its labels.
    pub fn generator(&self, a: usize, b: usize) -> Option<Matrix<Scalar>> {
        let idx = self.index_of(a, b)?;
        let m = self.generators[idx].clone();
        Some(if a < b { m } else { m.neg() })
    }

    pub fn labels(&self) -> Vec<String> {
        self.pairs
            .iter()
            .map(|&(a, b)| format!("L{}{}", a + 1, b + 1))
            .collect()
    }

    /// Indices of the Lorentz block `(a, b)` with `b <= 3`.
    pub fn lorentz_indices(&self) -> Vec<usize> {
        self.pairs
            .iter()
            .enumerate()
            .filter(|(_, &(_, b))| b <= 3)
            .map(|(i, _)| i)
            .collect()
    }

    /// Indices of the position column `(mu, 5)` in 1-based labels.
    pub fn x_indices(&self) -> Vec<usize> {
        self.pairs
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| b == 4 && a <= 3)
            .map(|(i, _)| i)
            .collect()
    }

    /// Indices of the momentum column `(mu, 6)`.
    pub fn p_indices(&self) -> Vec<usize> {
        self.pairs
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| b == 5 && a <= 3)
            .map(|(i, _)| i)
            .collect()
    }

    /// Index of the central candidate `L_56`.
    pub fn central_index(&self) -> usize {
        self.index_of(4, 5).expect("pair (5,6) is present")
    }
}

/// Contraction family over so(3,3): the position column scales by
/// `eps^scale_x`, the momentum column by `eps^scale_p`, and the `(5,6)`
/// plane by the sum, so the canonical pairing survives the limit. The limit
/// is the Heisenberg-Poincare algebra.
pub fn yang_contraction_family(
    scale_x: i64,
    scale_p: i64,
) -> Result<ContractionFamily, SpacetimeError> {
    let base = builtins::so_pq(3, 3);
    let pairs = builtins::so_pq_pairs(3, 3);
    let exponents: Vec<i64> = pairs
        .iter()
        .map(|&(a, b)| {
            if b <= 3 {
                0
            } else if b == 4 {
                scale_x
            } else if a <= 3 {
                scale_p
            } else {
                scale_x + scale_p
            }
        })
        .collect();
    Ok(ContractionFamily::new(base, exponents)?)
}

/// Exact spectrum data of one operator: rational eigenvalues, conjugate
/// imaginary pairs `+- i m` with exact magnitude, and whatever factor of the
/// characteristic polynomial resists both.
#[derive(Clone, Debug)]
pub struct OperatorSpectrum {
    pub real: Vec<(Scalar, usize)>,
    pub imaginary_pairs: Vec<(Scalar, usize)>,
    pub unresolved_factor: Option<Poly>,
    /// Largest magnitude among resolved eigenvalues.
    pub extreme_magnitude: Option<Scalar>,
}

fn exact_sqrt(s: &Scalar) -> Option<Scalar> {
    if s.is_negative() {
        return None;
    }
    let num = s.numer().magnitude().sqrt();
    let den = s.denom().magnitude().sqrt();
    let cand = Scalar::new(num.into(), den.into());
    if cand.clone() * cand.clone() == *s {
        Some(cand)
    } else {
        None
    }
}

/// Spectrum of `mats[index]`, splitting the characteristic polynomial into
/// rational roots, imaginary conjugate pairs from the even part, and an
/// unresolved remainder.
pub fn quantized_i_spectrum(
    mats: &[Matrix<Scalar>],
    index: usize,
) -> Result<OperatorSpectrum, SpacetimeError> {
    let m = mats
        .get(index)
        .ok_or(SpacetimeError::BadGeneratorIndex {
            got: index,
            have: mats.len(),
        })?;
    operator_spectrum(m)
}

pub fn operator_spectrum(m: &Matrix<Scalar>) -> Result<OperatorSpectrum, SpacetimeError> {
    let p = charpoly(m)?;
    let mut real: Vec<(Scalar, usize)> = Vec::new();
    let mut rest = p.monic();
    if let Some(roots) = rational_roots(&p) {
        for r in roots {
            let mut mult = 0usize;
            loop {
                let (q, rem) = rest.deflate(&r);
                if rem.is_zero() {
                    rest = q;
                    mult += 1;
                } else {
                    break;
                }
            }
            if mult > 0 {
                real.push((r, mult));
            }
        }
    }
    real.sort_by(|a, b| a.0.cmp(&b.0));

    let mut imaginary_pairs: Vec<(Scalar, usize)> = Vec::new();
    let mut unresolved = None;
    if rest.degree().unwrap_or(0) > 0 {
        if let Some(in_y) = rest.even_substitution() {
            let mut leftover = Poly::one();
            let mut y_rest = in_y.monic();
            if let Some(y_roots) = rational_roots(&in_y) {
                for y0 in y_roots {
                    let mut mult = 0usize;
                    loop {
                        let (q, rem) = y_rest.deflate(&y0);
                        if rem.is_zero() {
                            y_rest = q;
                            mult += 1;
                        } else {
                            break;
                        }
                    }
                    if mult == 0 {
                        continue;
                    }
                    let neg = -y0.clone();
                    match (y0.is_negative(), exact_sqrt(&neg)) {
                        (true, Some(mag)) => imaginary_pairs.push((mag, mult)),
                        _ => {
                            // x^2 - y0 stays unresolved.
                            let factor =
                                Poly::from_coeffs(vec![-y0.clone(), Scalar::zero(), Scalar::one()]);
                            for _ in 0..mult {
                                leftover = leftover.mul(&factor);
                            }
                        }
                    }
                }
            } else {
                leftover = y_rest.clone();
                y_rest = Poly::one();
            }
            // Whatever survived in y, plus non-deflated content.
            if y_rest.degree().unwrap_or(0) > 0 {
                let mut back = Poly::zero();
                for (k, c) in y_rest.coeffs().iter().enumerate() {
                    back = back.add(&Poly::from_coeffs(vec![c.clone()]).shift(2 * k));
                }
                leftover = leftover.mul(&back);
            }
            if leftover.degree().unwrap_or(0) > 0 {
                unresolved = Some(leftover);
            }
        } else {
            unresolved = Some(rest.clone());
        }
        imaginary_pairs.sort_by(|a, b| a.0.cmp(&b.0));
    }

    let mut extreme: Option<Scalar> = None;
    if unresolved.is_none() {
        for (v, _) in &real {
            let a = v.abs();
            if extreme.as_ref().is_none_or(|e| a > *e) {
                extreme = Some(a);
            }
        }
        for (mag, _) in &imaginary_pairs {
            if extreme.as_ref().is_none_or(|e| *mag > *e) {
                extreme = Some(mag.clone());
            }
        }
    }

    Ok(OperatorSpectrum {
        real,
        imaginary_pairs,
        unresolved_factor: unresolved,
        extreme_magnitude: extreme,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::verify_rep;

    fn cfg(n: usize) -> FeynmanConfig {
        FeynmanConfig::new(n, int(1), Metric::new(3, 1)).unwrap()
    }

    #[test]
    fn config_validation() {
        assert!(FeynmanConfig::new(0, int(1), Metric::new(3, 1)).is_err());
        assert!(FeynmanConfig::new(1, int(1), Metric::new(2, 2)).is_err());
        assert!(feynman_position(&cfg(1), 0).is_err());
        assert!(feynman_position(&cfg(1), 5).is_err());
    }

    #[test]
    fn single_chronon_spectrum() {
        let spectrum = feynman_spectrum(&cfg(1), 1).unwrap();
        assert_eq!(spectrum.kind, LadderKind::Real);
        assert_eq!(spectrum.entries, vec![(int(-1), 2), (int(1), 2)]);
        // Dense route agrees: eigenvalues of the 4x4 factor itself.
        let dense = feynman_spectrum_dense(&cfg(1), 1).unwrap();
        assert_eq!(dense.entries, spectrum.entries);
    }

    #[test]
    fn two_chronon_spectrum_brute_force() {
        // 16x16 dense eigendecomposition against the ladder.
        let spectrum = feynman_spectrum(&cfg(2), 2).unwrap();
        assert_eq!(
            spectrum.entries,
            vec![(int(-2), 4), (int(0), 8), (int(2), 4)]
        );
        let dense = feynman_spectrum_dense(&cfg(2), 2).unwrap();
        assert_eq!(dense.entries, spectrum.entries);
    }

    #[test]
    fn chrone_scales_output_only() {
        let c = FeynmanConfig::new(3, frac(1, 7), Metric::new(3, 1)).unwrap();
        let spectrum = feynman_spectrum(&c, 3).unwrap();
        let values: Vec<Scalar> = spectrum.entries.iter().map(|(v, _)| v.clone()).collect();
        assert_eq!(values, vec![frac(-3, 7), frac(-1, 7), frac(1, 7), frac(3, 7)]);
    }

    #[test]
    fn same_coordinate_commutes() {
        let op = feynman_position(&cfg(2), 1).unwrap();
        let dense = op.dense().unwrap();
        assert!(dense.commutator(&dense).unwrap().is_zero());
    }

    #[test]
    fn factored_apply_matches_dense() {
        let op = feynman_position(&cfg(2), 3).unwrap();
        let dense = op.dense().unwrap();
        let dim = op.dim();
        let v: Vec<Scalar> = (0..dim).map(|i| frac(i as i64 - 5, 3)).collect();
        let direct = op.apply(&v).unwrap();
        let column = Matrix::from_fn(dim, 1, |i, _| v[i].clone());
        let expected = dense.mul(&column).unwrap();
        for (i, got) in direct.iter().enumerate() {
            assert_eq!(got, expected.get(i, 0));
        }
    }

    #[test]
    fn factored_apply_works_above_dense_limit() {
        // Seven chronons: 4^7 = 16384 exceeds the dense cap, the factored
        // action still runs on basis vectors.
        let c = FeynmanConfig::new(7, int(1), Metric::new(3, 1)).unwrap();
        let op = feynman_position(&c, 1).unwrap();
        assert!(op.dense().is_err());
        let mut v = vec![Scalar::zero(); op.dim()];
        v[0] = int(1);
        let out = op.apply(&v).unwrap();
        let nonzero = out.iter().filter(|x| !x.is_zero()).count();
        assert_eq!(nonzero, 7);
    }

    #[test]
    fn dimension_bookkeeping() {
        let c = cfg(3);
        assert_eq!(c.operator_dim(), Some(64));
        assert_eq!(c.probability_dim(), num_bigint::BigUint::from(4096u32));
    }

    #[test]
    fn distinct_sites_commute() {
        let c = cfg(3);
        for mu in 1..=4usize {
            for nu in 1..=4usize {
                let a = feynman_position(&c, mu).unwrap();
                let b = feynman_position(&c, nu).unwrap();
                for s in 0..3 {
                    for t in 0..3 {
                        if s == t {
                            continue;
                        }
                        assert!(a.embedded(s).commutes_with(&b.embedded(t)));
                    }
                }
            }
        }
    }

    #[test]
    fn timelike_coordinate_flagged_imaginary() {
        let spectrum = feynman_spectrum(&cfg(2), 4).unwrap();
        assert_eq!(spectrum.kind, LadderKind::Imaginary);
        assert_eq!(spectrum.total_multiplicity(), 16);
        let dense = feynman_spectrum_dense(&cfg(2), 4).unwrap();
        assert_eq!(dense.kind, LadderKind::Imaginary);
        assert_eq!(dense.entries, spectrum.entries);
    }

    #[test]
    fn opposite_metric_swaps_roles() {
        let c = FeynmanConfig::new(1, int(1), Metric::new(1, 3)).unwrap();
        // Spacelike directions now square to -I.
        assert_eq!(
            feynman_spectrum(&c, 1).unwrap().kind,
            LadderKind::Imaginary
        );
        // Time is the positive generator.
        assert_eq!(feynman_spectrum(&c, 4).unwrap().kind, LadderKind::Real);
    }

    #[test]
    fn yang_count_and_relations() {
        let y = yang_generators();
        assert_eq!(y.count(), 15);
        let so33 = builtins::so_pq(3, 3);
        let defect = verify_rep(&so33, y.generators()).unwrap();
        assert!(defect.is_zero());
    }

    #[test]
    fn yang_labels_are_antisymmetric() {
        let y = yang_generators();
        let l12 = y.generator(0, 1).unwrap();
        let l21 = y.generator(1, 0).unwrap();
        assert_eq!(l21, l12.neg());
        assert!(y.generator(0, 6).is_none());
    }

    #[test]
    fn yang_block_commutators() {
        let y = yang_generators();
        // [L12, L23] lands on the L13 direction: eta_22 = +1.
        let l12 = y.generator(0, 1).unwrap();
        let l23 = y.generator(1, 2).unwrap();
        let l13 = y.generator(0, 2).unwrap();
        assert_eq!(l12.commutator(&l23).unwrap(), l13);
        // L56 commutes with the entire Lorentz block.
        let central = y.generators()[y.central_index()].clone();
        for i in y.lorentz_indices() {
            assert!(central.commutator(&y.generators()[i]).unwrap().is_zero());
        }
    }

    #[test]
    fn yang_family_limit_is_heisenberg_poincare() {
        let fam = yang_contraction_family(1, 1).unwrap();
        let limit = fam.limit().unwrap();
        assert!(limit.same_constants(&builtins::heisenberg_poincare4()));
        // eps = 1 is the base algebra.
        assert!(fam
            .contract(&int(1))
            .unwrap()
            .same_constants(&builtins::so_pq(3, 3)));
    }

    #[test]
    fn canonical_pairing_exact_at_finite_eps() {
        // [x_mu, p_nu](eps) keeps its central coefficient exactly while the
        // position-position bracket shrinks as eps^2.
        let fam = yang_contraction_family(1, 1).unwrap();
        let pairs = builtins::so_pq_pairs(3, 3);
        let x1 = pairs.iter().position(|&p| p == (0, 4)).unwrap();
        let p1 = pairs.iter().position(|&p| p == (0, 5)).unwrap();
        let x2 = pairs.iter().position(|&p| p == (1, 4)).unwrap();
        let center = pairs.iter().position(|&p| p == (4, 5)).unwrap();
        let l12 = pairs.iter().position(|&p| p == (0, 1)).unwrap();
        let base = builtins::so_pq(3, 3);
        for eps in [int(1), frac(1, 10), frac(1, 100)] {
            let at = fam.contract(&eps).unwrap();
            assert_eq!(at.constant(x1, p1, center), base.constant(x1, p1, center));
            assert_eq!(
                *at.constant(x1, x2, l12),
                base.constant(x1, x2, l12).clone() * eps.clone() * eps.clone()
            );
        }
    }

    #[test]
    fn quantized_i_in_spinor_rep() {
        let y = yang_generators();
        let spectrum = quantized_i_spectrum(y.generators(), y.central_index()).unwrap();
        // The (5,6) plane is definite, so the spectrum is an imaginary pair.
        assert!(spectrum.real.is_empty());
        assert_eq!(spectrum.imaginary_pairs, vec![(frac(1, 2), 4)]);
        assert!(spectrum.unresolved_factor.is_none());
        assert_eq!(spectrum.extreme_magnitude, Some(frac(1, 2)));
    }

    #[test]
    fn split_plane_bivector_has_real_spectrum() {
        let y = yang_generators();
        // (1,5) mixes a positive and a negative direction: a split plane.
        let idx = y.index_of(0, 4).unwrap();
        let spectrum = quantized_i_spectrum(y.generators(), idx).unwrap();
        assert_eq!(spectrum.real, vec![(frac(-1, 2), 4), (frac(1, 2), 4)]);
        assert!(spectrum.imaginary_pairs.is_empty());
        // Symmetric about zero with equal extreme magnitudes.
        assert_eq!(spectrum.extreme_magnitude, Some(frac(1, 2)));
    }

    #[test]
    fn scalar_rep_spectrum_is_zero() {
        let trivial = vec![Matrix::<Scalar>::zeros(1, 1); 15];
        let spectrum = quantized_i_spectrum(&trivial, 14).unwrap();
        assert_eq!(spectrum.real, vec![(int(0), 1)]);
        assert!(spectrum.imaginary_pairs.is_empty());
    }

    #[test]
    fn bad_generator_index() {
        let y = yang_generators();
        assert!(quantized_i_spectrum(y.generators(), 99).is_err());
    }
}
