//! Invariants that tie the modules together: spinor representations against
//! structure constants, serial coding against the rank tower, and the
//! contraction chains.

use finq_core::clifford::{matrix_rep, Metric, Multivector};
use finq_core::lie::{builtins, verify_rep};
use finq_core::linalg::{frac, int, Scalar};
use finq_core::palev::difermion;
use finq_core::qset::{
    dim_of_rank, endo_iso_check, rank_of_serial, set_of, table_rows,
};
use finq_core::spacetime::{
    feynman_position, feynman_spectrum, feynman_spectrum_dense, yang_contraction_family,
    yang_generators, FeynmanConfig, LadderKind,
};
use num_traits::{Signed, Zero};

#[test]
fn matrix_rep_relations_up_to_twelve_generators() {
    // Exact, no tolerance, every signature with p + q <= 12.
    for n in 1..=12u32 {
        for p in 0..=n {
            let metric = Metric::new(p, n - p);
            let rep = matrix_rep(metric);
            assert!(rep.relation_check().is_ok(), "relations fail for {metric}");
        }
    }
}

#[test]
fn algebra_anticommutation_up_to_twelve_generators() {
    // Abstract multivector level: e_i e_j + e_j e_i = 2 eta_ij and dimension
    // 2^n, for every split of up to 12 generators.
    for n in 1..=12u32 {
        for p in 0..=n {
            let metric = Metric::new(p, n - p);
            let alg = finq_core::clifford::AlgebraId::Clifford(metric);
            assert_eq!(alg.dimension(), 1u64 << n);
            for i in 0..n {
                for j in i..n {
                    let ei = Multivector::generator(alg, i).unwrap();
                    let ej = Multivector::generator(alg, j).unwrap();
                    let anti = ei
                        .geometric_product(&ej)
                        .unwrap()
                        .add(&ej.geometric_product(&ei).unwrap())
                        .unwrap();
                    let expected = if i == j {
                        Multivector::scalar(alg, int(2 * i64::from(metric.sign_of(i))))
                    } else {
                        Multivector::zero(alg)
                    };
                    assert_eq!(anti, expected, "{metric} pair ({i},{j})");
                }
            }
        }
    }
}

#[test]
fn serial_roundtrip_to_sixty_four_k() {
    for n in 0..(1u64 << 16) {
        let s = set_of(n);
        assert_eq!(s.serial_u64(), Some(n));
        assert_eq!(s.rank(), rank_of_serial(n));
    }
}

#[test]
fn rank_row_counts_match_table() {
    let rows = table_rows(4, 16).unwrap();
    for r in 1..=4u32 {
        let expected = dim_of_rank(r).unwrap() - dim_of_rank(r - 1).unwrap();
        assert_eq!(rows[r as usize].width, expected);
    }
}

#[test]
fn gamma_factor_spectrum() {
    // A spacelike generator of the (3,1) factor squares to +I with zero
    // trace, so its exact spectrum is {+1, -1} with multiplicity 2 each;
    // checked through the characteristic polynomial route.
    let rep = matrix_rep(Metric::new(3, 1));
    let gamma = rep.generator_dense(0).unwrap();
    let spectrum = finq_core::linalg::rational_spectrum(&gamma).unwrap();
    assert_eq!(spectrum.eigenvalues, vec![(int(-1), 2), (int(1), 2)]);
    assert_eq!(
        spectrum.reconstruct_charpoly(),
        finq_core::linalg::charpoly(&gamma).unwrap()
    );
}

#[test]
fn every_builtin_satisfies_jacobi_exactly() {
    let names = [
        "so(3)",
        "so(3,1)",
        "so(3,3)",
        "so(5,1)",
        "sl(4)",
        "h(1)",
        "h(4)",
        "galilean",
        "poincare",
        "hp(4)",
        "yang",
    ];
    for name in names {
        let alg = builtins::builtin(name).unwrap();
        assert!(alg.jacobi_defect().is_zero(), "{name}");
    }
    // Contraction limits satisfy it as well (revalidated inside limit()).
    assert!(builtins::so31_boost_family().limit().is_ok());
    assert!(yang_contraction_family(1, 1).unwrap().limit().is_ok());
}

#[test]
fn so33_killing_signature_split_form() {
    // Count oracle: a generator mixing a positive and a negative direction
    // has positive Killing norm (9 of them for the split (3,3) form), one
    // inside a definite plane has negative norm (3 + 3), and the form is
    // non-degenerate.
    let so33 = builtins::so_pq(3, 3);
    assert_eq!(so33.killing_signature(), (9, 6, 0));
    // det(-2 I_3) = -8 for so(3).
    let k3 = builtins::so3().killing_form();
    assert_eq!(finq_core::linalg::det(&k3).unwrap(), int(-8));
}

#[test]
fn difermion_killing_matches_so_nn() {
    for n in 2..=3u32 {
        let d = difermion(n).unwrap();
        let so = builtins::so_pq(n, n);
        assert_eq!(d.algebra().dim() as u32, n * (2 * n - 1));
        assert!(d.algebra().jacobi_defect().is_zero());
        assert!(d.algebra().is_semisimple());
        assert_eq!(d.algebra().killing_signature(), so.killing_signature());
    }
}

#[test]
fn bivector_rep_of_so33_from_spinors() {
    let y = yang_generators();
    let so33 = builtins::so_pq(3, 3);
    assert_eq!(verify_rep(&so33, y.generators()).unwrap(), Scalar::zero());
}

#[test]
fn contraction_chain_so31_and_yang() {
    let boost = builtins::so31_boost_family();
    assert!(boost.limit().unwrap().same_constants(&builtins::galilean()));

    let yang = yang_contraction_family(1, 1).unwrap();
    assert!(yang
        .limit()
        .unwrap()
        .same_constants(&builtins::heisenberg_poincare4()));

    // Quadratic deviation: distance to the limit scales exactly as eps^2.
    for fam in [boost, yang] {
        let lim = fam.limit().unwrap();
        let mut prev: Option<Scalar> = None;
        for k in 1..=3u32 {
            let eps = frac(1, 10i64.pow(k));
            let at = fam.contract(&eps).unwrap();
            let dist = at.constant_distance(&lim).unwrap();
            assert!(!dist.is_zero());
            if let Some(p) = prev.clone() {
                assert_eq!(p / dist.clone(), int(100));
            }
            prev = Some(dist);
        }
    }
}

#[test]
fn feynman_ladder_invariants() {
    for n in 1..=5usize {
        let cfg = FeynmanConfig::new(n, int(1), Metric::new(3, 1)).unwrap();
        let spectrum = feynman_spectrum(&cfg, 1).unwrap();
        assert_eq!(spectrum.kind, LadderKind::Real);
        // Multiplicities sum to 4^N.
        assert_eq!(spectrum.total_multiplicity(), 4u128.pow(n as u32));
        // Symmetric about zero, bounded by N, spacing 2.
        let values: Vec<Scalar> = spectrum.entries.iter().map(|(v, _)| v.clone()).collect();
        for (v, m) in &spectrum.entries {
            let mirrored = spectrum
                .entries
                .iter()
                .find(|(w, _)| w == &-v.clone())
                .map(|(_, mm)| *mm);
            assert_eq!(mirrored, Some(*m));
        }
        assert!(values.iter().all(|v| v.abs() <= int(n as i64)));
        for w in values.windows(2) {
            assert_eq!(w[1].clone() - w[0].clone(), int(2));
        }
    }
}

#[test]
fn feynman_dense_matches_combinatorial_up_to_three() {
    for n in 1..=3usize {
        let cfg = FeynmanConfig::new(n, int(1), Metric::new(3, 1)).unwrap();
        for mu in [1usize, 2, 3] {
            let ladder = feynman_spectrum(&cfg, mu).unwrap();
            let dense = feynman_spectrum_dense(&cfg, mu).unwrap();
            assert_eq!(ladder.entries, dense.entries, "N={n} mu={mu}");
        }
    }
}

#[test]
fn chronon_factors_commute_exhaustively() {
    for n in 2..=3usize {
        let cfg = FeynmanConfig::new(n, int(1), Metric::new(3, 1)).unwrap();
        for mu in 1..=4usize {
            for nu in 1..=4usize {
                let a = feynman_position(&cfg, mu).unwrap();
                let b = feynman_position(&cfg, nu).unwrap();
                for s in 0..n {
                    for t in 0..n {
                        if s != t {
                            assert!(a.embedded(s).commutes_with(&b.embedded(t)));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn endo_iso_through_rank_three() {
    for r in 1..=3u32 {
        let report = endo_iso_check(r).unwrap();
        assert!(report.relations_ok, "rank {r}");
        assert_eq!(report.algebra_rank, report.expected_rank, "rank {r}");
        assert!(report.full);
    }
}
