use super::{int, Matrix, Scalar};

/// Square matrix with exactly one `+1` or `-1` entry per column, stored as a
/// column map. Products of tensor factors drawn from `{I, X, Z, [[0,1],[-1,0]]}`
/// all have this shape, which keeps Clifford generator algebra linear in the
/// dimension instead of cubic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignedPermMatrix {
    /// `targets[j]` is the row of the nonzero entry in column `j`.
    targets: Vec<usize>,
    /// `signs[j]` is that entry, `+1` or `-1`.
    signs: Vec<i8>,
}

impl SignedPermMatrix {
    pub fn identity(n: usize) -> Self {
        SignedPermMatrix {
            targets: (0..n).collect(),
            signs: vec![1; n],
        }
    }

    pub fn new(targets: Vec<usize>, signs: Vec<i8>) -> Self {
        assert_eq!(targets.len(), signs.len());
        assert!(signs.iter().all(|s| *s == 1 || *s == -1));
        let n = targets.len();
        assert!(targets.iter().all(|t| *t < n));
        SignedPermMatrix { targets, signs }
    }

    pub fn dim(&self) -> usize {
        self.targets.len()
    }

    pub fn target(&self, col: usize) -> usize {
        self.targets[col]
    }

    pub fn sign(&self, col: usize) -> i8 {
        self.signs[col]
    }

    /// Matrix product `self * rhs`.
    pub fn compose(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim(), rhs.dim());
        let n = self.dim();
        let mut targets = Vec::with_capacity(n);
        let mut signs = Vec::with_capacity(n);
        for j in 0..n {
            let mid = rhs.targets[j];
            targets.push(self.targets[mid]);
            signs.push(self.signs[mid] * rhs.signs[j]);
        }
        SignedPermMatrix { targets, signs }
    }

    pub fn neg(&self) -> Self {
        SignedPermMatrix {
            targets: self.targets.clone(),
            signs: self.signs.iter().map(|s| -s).collect(),
        }
    }

    pub fn kron(&self, rhs: &Self) -> Self {
        let nb = rhs.dim();
        let n = self.dim() * nb;
        let mut targets = Vec::with_capacity(n);
        let mut signs = Vec::with_capacity(n);
        for ja in 0..self.dim() {
            for jb in 0..nb {
                targets.push(self.targets[ja] * nb + rhs.targets[jb]);
                signs.push(self.signs[ja] * rhs.signs[jb]);
            }
        }
        SignedPermMatrix { targets, signs }
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self.compose(other) == other.compose(self)
    }

    /// If `self*other + other*self` equals `c * I` exactly, returns `c`
    /// (one of -2, 0, 2 for signed permutations); otherwise `None`.
    pub fn anticommutator_scaled_identity(&self, other: &Self) -> Option<i64> {
        let ab = self.compose(other);
        let ba = other.compose(self);
        let n = self.dim();
        let mut c: Option<i64> = None;
        for j in 0..n {
            let (s, pos) = if ab.targets[j] == ba.targets[j] {
                (
                    i64::from(ab.signs[j]) + i64::from(ba.signs[j]),
                    ab.targets[j],
                )
            } else {
                // Two nonzero entries in distinct rows can never sum to a
                // multiple of the identity column.
                return None;
            };
            let col_value = if s == 0 {
                0
            } else if pos == j {
                s
            } else {
                return None;
            };
            match c {
                None => c = Some(col_value),
                Some(v) if v == col_value => {}
                Some(_) => return None,
            }
        }
        c
    }

    pub fn to_dense(&self) -> Matrix<Scalar> {
        let n = self.dim();
        let mut m = Matrix::<Scalar>::zeros(n, n);
        for j in 0..n {
            m.set(self.targets[j], j, int(i64::from(self.signs[j])));
        }
        m
    }

    /// Sum of signed permutation matrices as a dense matrix.
    pub fn dense_sum(terms: &[Self]) -> Matrix<Scalar> {
        let n = terms.first().map_or(0, Self::dim);
        let mut m = Matrix::<Scalar>::zeros(n, n);
        for t in terms {
            assert_eq!(t.dim(), n);
            for j in 0..n {
                let cur = m.get(t.targets[j], j).clone();
                m.set(t.targets[j], j, cur + int(i64::from(t.signs[j])));
            }
        }
        m
    }
}

/// The four 2x2 tensor factors used by the spinor constructions.
pub(crate) mod factors {
    use super::SignedPermMatrix;

    /// `[[1,0],[0,1]]`
    pub fn id2() -> SignedPermMatrix {
        SignedPermMatrix::new(vec![0, 1], vec![1, 1])
    }

    /// `[[0,1],[1,0]]`, squares to +I.
    pub fn x() -> SignedPermMatrix {
        SignedPermMatrix::new(vec![1, 0], vec![1, 1])
    }

    /// `[[0,1],[-1,0]]`, squares to -I.
    pub fn y_real() -> SignedPermMatrix {
        SignedPermMatrix::new(vec![1, 0], vec![-1, 1])
    }

    /// `[[1,0],[0,-1]]`, squares to +I.
    pub fn z() -> SignedPermMatrix {
        SignedPermMatrix::new(vec![0, 1], vec![1, -1])
    }
}

#[cfg(test)]
mod tests {
    use super::factors::*;
    use super::*;

    #[test]
    fn factor_squares() {
        let i2 = SignedPermMatrix::identity(2);
        assert_eq!(x().compose(&x()), i2);
        assert_eq!(z().compose(&z()), i2);
        assert_eq!(y_real().compose(&y_real()), i2.neg());
    }

    #[test]
    fn anticommutators() {
        assert_eq!(x().anticommutator_scaled_identity(&z()), Some(0));
        assert_eq!(x().anticommutator_scaled_identity(&x()), Some(2));
        assert_eq!(
            y_real().anticommutator_scaled_identity(&y_real()),
            Some(-2)
        );
        assert_eq!(x().anticommutator_scaled_identity(&id2()), None);
    }

    #[test]
    fn dense_round_trip() {
        let m = x().kron(&z());
        let dense = m.to_dense();
        let direct = x().to_dense().kron(&z().to_dense());
        assert_eq!(dense, direct);
    }
}
