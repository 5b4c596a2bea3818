//! Exact computer algebra for finite quantum structures.
//!
//! Everything is computed over arbitrary-precision rationals; every claimed
//! identity is checked exactly, never to a tolerance. The crate covers:
//!
//! * [`linalg`]: dense exact matrices, characteristic polynomials, rational
//!   spectra, linear solving, congruence signatures.
//! * [`clifford`]: Clifford and Grassmann algebras over signed quadratic
//!   spaces, Berezin integration, spinor representations.
//! * [`lie`]: Lie algebras as structure constants, Killing forms,
//!   semisimplicity, Inonu-Wigner contraction families, named algebras.
//! * [`palev`]: statistics whose probability algebra envelops a semisimple
//!   Lie algebra: so(3) rotaton towers, di-fermions from split Clifford
//!   bivectors, Fock representations of sl(n+1).
//! * [`qset`]: hereditarily finite sets under the power-of-two serial code,
//!   the quantum rank tower of iterated Grassmann spaces, and the Berezin
//!   pairing with its signature reports.
//! * [`spacetime`]: finite quantum space-time operators: chronon position
//!   sums with exact spectra, and the so(3,3) orbital algebra with its
//!   contraction onto the Heisenberg-Poincare algebra.

pub mod clifford;
pub mod lie;
pub mod linalg;
pub mod palev;
pub mod qset;
pub mod spacetime;

pub use clifford::{AlgebraId, CliffordRep, Metric, Multivector};
pub use lie::{ContractionFamily, LieAlgebraSC};
pub use linalg::{CScalar, Matrix, Scalar};
