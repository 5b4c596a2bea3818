//! Property-based invariants of the exact kernel and the algebra layers.

use finq_core::clifford::{AlgebraId, Metric, Multivector};
use finq_core::lie::builtins;
use finq_core::linalg::{frac, int, rational_spectrum, Matrix, Scalar};
use proptest::prelude::*;

fn scalar_strategy() -> impl Strategy<Value = Scalar> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| frac(n, d))
}

fn matrix_strategy(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<Scalar>> {
    proptest::collection::vec(scalar_strategy(), rows * cols).prop_map(move |data| {
        let mut idx = 0;
        Matrix::from_fn(rows, cols, |_, _| {
            let v = data[idx].clone();
            idx += 1;
            v
        })
    })
}

fn multivector_strategy(algebra: AlgebraId) -> impl Strategy<Value = Multivector> {
    let dim = algebra.dimension();
    proptest::collection::vec((0..dim, scalar_strategy()), 0..5).prop_map(move |terms| {
        let mut mv = Multivector::zero(algebra);
        for (mask, c) in terms {
            let blade = Multivector::basis_blade(algebra, mask).unwrap().scale(&c);
            mv = mv.add(&blade).unwrap();
        }
        mv
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn matmul_associative(
        a in matrix_strategy(3, 2),
        b in matrix_strategy(2, 4),
        c in matrix_strategy(4, 2),
    ) {
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn kron_mixed_product(
        a in matrix_strategy(2, 3),
        b in matrix_strategy(2, 2),
        c in matrix_strategy(3, 2),
        d in matrix_strategy(2, 3),
    ) {
        // kron(A,B) kron(C,D) = kron(AC, BD) whenever the shapes permit.
        let left = a.kron(&b).mul(&c.kron(&d)).unwrap();
        let right = a.mul(&c).unwrap().kron(&b.mul(&d).unwrap());
        prop_assert_eq!(left, right);
    }

    #[test]
    fn geometric_product_associative(
        a in multivector_strategy(AlgebraId::Clifford(Metric::new(2, 1))),
        b in multivector_strategy(AlgebraId::Clifford(Metric::new(2, 1))),
        c in multivector_strategy(AlgebraId::Clifford(Metric::new(2, 1))),
    ) {
        let left = a.geometric_product(&b).unwrap().geometric_product(&c).unwrap();
        let right = a.geometric_product(&b.geometric_product(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn wedge_associative_and_graded(
        a in multivector_strategy(AlgebraId::Grassmann { generators: 4 }),
        b in multivector_strategy(AlgebraId::Grassmann { generators: 4 }),
        c in multivector_strategy(AlgebraId::Grassmann { generators: 4 }),
    ) {
        let left = a.wedge(&b).unwrap().wedge(&c).unwrap();
        let right = a.wedge(&b.wedge(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn reversal_is_anti_automorphism(
        a in multivector_strategy(AlgebraId::Clifford(Metric::new(2, 2))),
        b in multivector_strategy(AlgebraId::Clifford(Metric::new(2, 2))),
    ) {
        let left = a.geometric_product(&b).unwrap().reversal();
        let right = b.reversal().geometric_product(&a.reversal()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn grade_two_of_vector_product_is_wedge(
        u in proptest::collection::vec(scalar_strategy(), 4),
        v in proptest::collection::vec(scalar_strategy(), 4),
    ) {
        let alg = AlgebraId::Clifford(Metric::new(2, 2));
        let mk = |coeffs: &[Scalar]| {
            let mut mv = Multivector::zero(alg);
            for (i, c) in coeffs.iter().enumerate() {
                let g = Multivector::generator(alg, i as u32).unwrap().scale(c);
                mv = mv.add(&g).unwrap();
            }
            mv
        };
        let x = mk(&u);
        let y = mk(&v);
        prop_assert_eq!(
            x.geometric_product(&y).unwrap().grade_project(2),
            x.wedge(&y).unwrap()
        );
    }

    #[test]
    fn spectrum_of_conjugated_diagonal(
        d in proptest::collection::vec(-4i64..=4, 3),
        shear in -3i64..=3,
    ) {
        // S D S^-1 has exactly D's eigenvalues; S is unit-determinant.
        let n = d.len();
        let diag = Matrix::from_fn(n, n, |i, j| if i == j { int(d[i]) } else { int(0) });
        let mut s = Matrix::<Scalar>::identity(n);
        s.set(0, 1, int(shear));
        s.set(1, 2, int(-shear));
        let inv = finq_core::linalg::inverse(&s).unwrap().unwrap();
        let conj = s.mul(&diag).unwrap().mul(&inv).unwrap();
        let spec = rational_spectrum(&conj).unwrap();
        let mut expected: Vec<i64> = d.clone();
        expected.sort_unstable();
        let mut got: Vec<Scalar> = Vec::new();
        for (v, m) in spec.eigenvalues {
            for _ in 0..m {
                got.push(v.clone());
            }
        }
        prop_assert_eq!(got, expected.into_iter().map(int).collect::<Vec<_>>());
    }

    #[test]
    fn killing_signature_congruence_invariant(
        shear_a in -3i64..=3,
        shear_b in -2i64..=2,
        which in 0usize..3,
    ) {
        let alg = match which {
            0 => builtins::so3(),
            1 => builtins::so31_rotation_boost(),
            _ => builtins::heisenberg(2),
        };
        let n = alg.dim();
        let mut s = Matrix::<Scalar>::identity(n);
        s.set(0, n - 1, int(shear_a));
        if n > 2 {
            s.set(1, 2, int(shear_b));
        }
        let moved = alg
            .transform_basis("moved", alg.labels().to_vec(), &s)
            .unwrap();
        prop_assert_eq!(moved.killing_signature(), alg.killing_signature());
    }
}
