use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{LinalgError, Matrix, Poly, Scalar};

/// Exact eigenvalues with multiplicities, sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    pub eigenvalues: Vec<(Scalar, usize)>,
}

impl Spectrum {
    pub fn dimension(&self) -> usize {
        self.eigenvalues.iter().map(|(_, m)| m).sum()
    }

    /// `prod (x - lambda)^m`, for cross-checking against the characteristic
    /// polynomial.
    pub fn reconstruct_charpoly(&self) -> Poly {
        let mut p = Poly::one();
        for (value, mult) in &self.eigenvalues {
            let lin = Poly::from_coeffs(vec![-value.clone(), Scalar::one()]);
            for _ in 0..*mult {
                p = p.mul(&lin);
            }
        }
        p
    }

    pub fn json(&self) -> serde_json::Value {
        serde_json::json!(self
            .eigenvalues
            .iter()
            .map(|(v, m)| serde_json::json!({"value": v.to_string(), "multiplicity": m}))
            .collect::<Vec<_>>())
    }
}

/// Characteristic polynomial `det(xI - A)` by similarity reduction to upper
/// Hessenberg form followed by the leading-minor recurrence. O(n^3) exact
/// field operations.
pub fn charpoly(a: &Matrix<Scalar>) -> Result<Poly, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    if n == 0 {
        return Ok(Poly::one());
    }
    let mut h = a.clone();

    // Similarity transforms preserve the characteristic polynomial.
    for j in 0..n.saturating_sub(2) {
        if h.get(j + 1, j).is_zero() {
            if let Some(p) = ((j + 2)..n).find(|&i| !h.get(i, j).is_zero()) {
                // Swap rows j+1,p and columns j+1,p.
                for c in 0..n {
                    let t = h.get(j + 1, c).clone();
                    h.set(j + 1, c, h.get(p, c).clone());
                    h.set(p, c, t);
                }
                for r in 0..n {
                    let t = h.get(r, j + 1).clone();
                    h.set(r, j + 1, h.get(r, p).clone());
                    h.set(r, p, t);
                }
            } else {
                continue;
            }
        }
        let pivot = h.get(j + 1, j).clone();
        for i in (j + 2)..n {
            if h.get(i, j).is_zero() {
                continue;
            }
            let f = h.get(i, j).clone() / pivot.clone();
            for c in 0..n {
                let v = h.get(i, c).clone() - f.clone() * h.get(j + 1, c).clone();
                h.set(i, c, v);
            }
            for r in 0..n {
                let v = h.get(r, j + 1).clone() + f.clone() * h.get(r, i).clone();
                h.set(r, j + 1, v);
            }
        }
    }

    // p_k = charpoly of the leading k x k block of the Hessenberg matrix.
    let mut p: Vec<Poly> = Vec::with_capacity(n + 1);
    p.push(Poly::one());
    for k in 1..=n {
        let x_minus = Poly::from_coeffs(vec![-h.get(k - 1, k - 1).clone(), Scalar::one()]);
        let mut pk = x_minus.mul(&p[k - 1]);
        let mut subdiag = Scalar::one();
        for m in 2..=k {
            subdiag *= h.get(k - m + 1, k - m).clone();
            if subdiag.is_zero() {
                break;
            }
            let coeff = h.get(k - m, k - 1).clone() * subdiag.clone();
            if coeff.is_zero() {
                continue;
            }
            pk = pk.sub(&p[k - m].scale(&coeff));
        }
        p.push(pk);
    }
    Ok(p.pop().unwrap())
}

/// Characteristic polynomial by the Faddeev-LeVerrier trace recursion.
/// O(n^4); retained as an independent route for cross-checks.
pub fn charpoly_faddeev(a: &Matrix<Scalar>) -> Result<Poly, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[n] = Scalar::one();
    let mut m = Matrix::<Scalar>::zeros(n, n);
    let mut c = Scalar::one();
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{k-1} I
        let mut am = a.mul(&m)?;
        for i in 0..n {
            let v = am.get(i, i).clone() + c.clone();
            am.set(i, i, v);
        }
        m = am;
        let t = a.mul(&m)?.trace()?;
        c = -t / Scalar::from_integer(k.into());
        coeffs[n - k] = c.clone();
    }
    Ok(Poly::from_coeffs(coeffs))
}

fn trial_factor_divisors(n: &BigInt, cap: usize) -> Option<Vec<BigInt>> {
    // Factor |n| by trial division; n is expected to be smooth in practice.
    let mut m = n.abs();
    if m.is_zero() {
        return None;
    }
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut d = BigInt::from(2u32);
    let limit = BigInt::from(1_000_000u64);
    while &d * &d <= m && d <= limit {
        let mut e = 0u32;
        while (&m % &d).is_zero() {
            m /= &d;
            e += 1;
        }
        if e > 0 {
            factors.push((d.clone(), e));
        }
        d += 1u32;
    }
    if !m.is_one() {
        factors.push((m, 1));
    }
    let mut divisors = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divisors.len() * (e as usize + 1));
        for d in &divisors {
            let mut pe = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pe);
                pe *= &p;
                if next.len() > cap {
                    return None;
                }
            }
        }
        divisors = next;
    }
    Some(divisors)
}

/// Clears denominators, returning integer coefficients.
fn integerize(p: &Poly) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in p.coeffs() {
        let d = c.denom();
        let g = num_integer_gcd(&lcm, d);
        lcm = lcm / g * d;
    }
    p.coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect()
}

fn num_integer_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

/// All rational roots of `p` (squarefree search over divisor candidates).
/// Returns `None` when the divisor enumeration is infeasible.
pub(crate) fn rational_roots(p: &Poly) -> Option<Vec<Scalar>> {
    let squarefree = {
        let d = p.derivative();
        if d.is_zero() {
            p.monic()
        } else {
            let g = p.gcd(&d);
            p.divrem(&g).0.monic()
        }
    };
    let mut roots = Vec::new();
    let mut s = squarefree;
    // Strip the root at zero first.
    if !s.is_zero() && s.coeff(0).is_zero() {
        roots.push(Scalar::zero());
        let (q, _) = s.deflate(&Scalar::zero());
        s = q;
    }
    if s.degree() == Some(0) || s.is_zero() {
        return Some(roots);
    }
    let ints = integerize(&s);
    let lead = ints.last().cloned()?;
    let constant = ints.first().cloned()?;
    let nums = trial_factor_divisors(&constant, 4096)?;
    let dens = trial_factor_divisors(&lead, 4096)?;
    for num in &nums {
        for den in &dens {
            for sign in [1, -1] {
                let cand = Scalar::new(num * BigInt::from(sign), den.clone());
                if s.eval(&cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    Some(roots)
}

/// Exact eigenvalues with multiplicities for a matrix whose characteristic
/// polynomial splits over the rationals. A non-splitting spectrum is reported
/// as an error carrying the unsplit factor.
pub fn rational_spectrum(a: &Matrix<Scalar>) -> Result<Spectrum, LinalgError> {
    let p = charpoly(a)?;
    spectrum_of_charpoly(&p)
}

pub(crate) fn spectrum_of_charpoly(p: &Poly) -> Result<Spectrum, LinalgError> {
    let n = p.degree().unwrap_or(0);
    let roots = rational_roots(p).ok_or_else(|| LinalgError::NonRationalSpectrum {
        remaining: p.clone(),
    })?;
    let mut eigenvalues: Vec<(Scalar, usize)> = Vec::new();
    let mut rest = p.monic();
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
            eigenvalues.push((r, mult));
        }
    }
    if rest.degree().unwrap_or(0) > 0 {
        return Err(LinalgError::NonRationalSpectrum { remaining: rest });
    }
    eigenvalues.sort_by(|a, b| a.0.cmp(&b.0));
    let spectrum = Spectrum { eigenvalues };
    debug_assert_eq!(spectrum.dimension(), n);
    Ok(spectrum)
}
