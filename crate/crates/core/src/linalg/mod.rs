//! Exact scalar and dense matrix kernel shared by every other module.
//!
//! All computation runs over arbitrary-precision rationals ([`Scalar`]).
//! Contexts that declare themselves complexified use [`CScalar`], a pair
//! `a + b i` of exact rationals; nothing here ever touches floating point
//! except for display-time approximations.

mod matrix;
mod poly;
mod signed_perm;
mod solve;
mod spectrum;

pub use matrix::{Entry, FromScalar, Matrix};
pub use poly::Poly;
pub use signed_perm::SignedPermMatrix;
pub(crate) use signed_perm::factors as signed_perm_factors;
pub use solve::{
    det, inverse, rank, rref, solve_linear, symmetric_signature, LinearSolution, Rref,
};
pub use spectrum::{charpoly, charpoly_faddeev, rational_spectrum, Spectrum};
pub(crate) use spectrum::rational_roots;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Exact rational number in canonical reduced form.
pub type Scalar = BigRational;

/// Complexified scalar `a + b i` with exact rational parts.
pub type CScalar = num_complex::Complex<Scalar>;

/// Errors of the exact kernel.
#[derive(Debug, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {left} vs {right} in {op}")]
    DimMismatch {
        op: &'static str,
        left: String,
        right: String,
    },
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix must be symmetric for signature computation")]
    NotSymmetric,
    #[error("ragged row lengths in matrix constructor")]
    RaggedRows,
    #[error("characteristic polynomial does not split over the rationals; remaining factor {remaining}")]
    NonRationalSpectrum { remaining: Poly },
    #[error("cannot parse `{input}` as an exact rational")]
    ParseScalar { input: String },
    #[error("division by zero scalar")]
    DivisionByZero,
}

/// Integer as an exact scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Exact fraction `n / d`.
pub fn frac(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// Real rational lifted into the complexified context.
pub fn creal(s: &Scalar) -> CScalar {
    CScalar::new(s.clone(), Scalar::zero())
}

/// Purely imaginary rational `b i`.
pub fn cimag(s: &Scalar) -> CScalar {
    CScalar::new(Scalar::zero(), s.clone())
}

/// Parses "3", "-7/2" or a plain decimal like "0.125" into an exact rational.
pub fn parse_scalar(input: &str) -> Result<Scalar, LinalgError> {
    let s = input.trim();
    let err = || LinalgError::ParseScalar {
        input: input.to_string(),
    };
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| err())?;
        let d: BigInt = den.trim().parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        return Ok(Scalar::new(n, d));
    }
    if let Some((whole, fract)) = s.split_once('.') {
        let sign = if whole.trim_start().starts_with('-') { -1 } else { 1 };
        let w: BigInt = if whole.is_empty() || whole == "-" {
            BigInt::zero()
        } else {
            whole.parse().map_err(|_| err())?
        };
        if fract.is_empty() || !fract.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let f: BigInt = fract.parse().map_err(|_| err())?;
        let scale = BigInt::from(10u32).pow(fract.len() as u32);
        return Ok(Scalar::from_integer(w)
            + Scalar::new(f * BigInt::from(sign), scale));
    }
    let n: BigInt = s.parse().map_err(|_| err())?;
    Ok(Scalar::from_integer(n))
}

/// Display-time approximation. Never feeds back into any computation.
pub fn approx(s: &Scalar) -> f64 {
    s.numer()
        .to_f64()
        .and_then(|n| s.denom().to_f64().map(|d| n / d))
        .unwrap_or(f64::NAN)
}

/// Exact absolute value.
pub fn abs(s: &Scalar) -> Scalar {
    s.abs()
}

/// JSON rendering of an exact rational: numerator/denominator strings plus a
/// decimal approximation, so exactness survives the pipe.
pub fn scalar_json(s: &Scalar) -> serde_json::Value {
    serde_json::json!({
        "num": s.numer().to_string(),
        "den": s.denom().to_string(),
        "approx": approx(s),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_scalar_forms() {
        assert_eq!(parse_scalar("3").unwrap(), int(3));
        assert_eq!(parse_scalar("-7/2").unwrap(), frac(-7, 2));
        assert_eq!(parse_scalar("0.125").unwrap(), frac(1, 8));
        assert_eq!(parse_scalar("-0.5").unwrap(), frac(-1, 2));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
    }

    #[test]
    fn canonical_form() {
        let s = frac(4, -6);
        assert_eq!(s, frac(-2, 3));
        assert!(s.denom() > &BigInt::zero());
    }
}
