use std::fmt;

use num_traits::{One, Zero};

use super::Scalar;

/// Univariate polynomial over the exact rationals, coefficients ascending.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly {
            coeffs: vec![Scalar::one()],
        }
    }

    pub fn constant(c: Scalar) -> Self {
        Poly { coeffs: vec![c] }.normalized()
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Poly {
            coeffs: vec![Scalar::zero(), Scalar::one()],
        }
    }

    pub fn from_coeffs(coeffs: Vec<Scalar>) -> Self {
        Poly { coeffs }.normalized()
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        Poly { coeffs }.normalized()
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - other.coeff(k)).collect();
        Poly { coeffs }.normalized()
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.clone() * s.clone()).collect(),
        }
        .normalized()
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a.clone() * b.clone();
            }
        }
        Poly { coeffs }.normalized()
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Scalar::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.clone() * Scalar::from_integer(k.into()))
            .collect();
        Poly { coeffs }.normalized()
    }

    /// Euclidean division; the divisor must be nonzero.
    pub fn divrem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dd = divisor.degree().unwrap();
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut quot = vec![Scalar::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let f = rem.leading().unwrap().clone() / lead.clone();
            quot[rd - dd] = f.clone();
            let sub = divisor.scale(&f).shift(rd - dd);
            rem = rem.sub(&sub);
        }
        (Poly { coeffs: quot }.normalized(), rem)
    }

    /// Synthetic division by `x - r`; returns quotient and remainder value.
    pub fn deflate(&self, r: &Scalar) -> (Self, Scalar) {
        if self.is_zero() {
            return (Poly::zero(), Scalar::zero());
        }
        let mut quot = vec![Scalar::zero(); self.coeffs.len() - 1];
        let mut acc = Scalar::zero();
        for k in (0..self.coeffs.len()).rev() {
            let v = self.coeffs[k].clone() + acc.clone() * r.clone();
            if k == 0 {
                return (Poly { coeffs: quot }.normalized(), v);
            }
            quot[k - 1] = v.clone();
            acc = v;
        }
        unreachable!()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => {
                let inv = Scalar::one() / l.clone();
                self.scale(&inv)
            }
        }
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// True when only even powers of `x` carry nonzero coefficients.
    pub fn is_even(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(k, c)| k % 2 == 0 || c.is_zero())
    }

    /// For an even polynomial, the polynomial in `y = x^2`.
    pub fn even_substitution(&self) -> Option<Self> {
        if !self.is_even() {
            return None;
        }
        let coeffs = self.coeffs.iter().step_by(2).cloned().collect();
        Some(Poly { coeffs }.normalized())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::super::int;
    use super::*;

    fn p(coeffs: Vec<i64>) -> Poly {
        Poly::from_coeffs(coeffs.into_iter().map(int).collect())
    }

    #[test]
    fn divrem_exact() {
        // (x^2 - 1) = (x - 1)(x + 1)
        let sq = p(vec![-1, 0, 1]);
        let lin = p(vec![-1, 1]);
        let (q, r) = sq.divrem(&lin);
        assert_eq!(q, p(vec![1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn deflate_matches_divrem() {
        let poly = p(vec![6, -5, 1]); // (x-2)(x-3)
        let (q, rem) = poly.deflate(&int(2));
        assert!(rem.is_zero());
        assert_eq!(q, p(vec![-3, 1]));
        assert_eq!(poly.eval(&int(3)), int(0));
        assert_eq!(poly.eval(&int(1)), int(2));
    }

    #[test]
    fn gcd_squarefree() {
        // p = (x-1)^2 (x+2); gcd(p, p') = (x-1).
        let poly = p(vec![-1, 1]).mul(&p(vec![-1, 1])).mul(&p(vec![2, 1]));
        let g = poly.gcd(&poly.derivative());
        assert_eq!(g, p(vec![-1, 1]));
    }

    #[test]
    fn even_substitution() {
        let poly = p(vec![1, 0, 2, 0, 1]); // (x^2+1)^2
        let y = poly.even_substitution().unwrap();
        assert_eq!(y, p(vec![1, 2, 1]));
        assert!(p(vec![0, 1]).even_substitution().is_none());
    }
}
