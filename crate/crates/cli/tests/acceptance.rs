//! Acceptance suite: one test per criterion, every tolerance exact, every
//! runtime budget asserted. Each test prints a single pass line on success;
//! a failure panics with the offending detail.

use std::time::{Duration, Instant};

use finq_core::clifford::{AlgebraId, Metric, Multivector};
use finq_core::lie::builtins;
use finq_core::linalg::{frac, int, Scalar};
use finq_core::palev::{difermion, so3_irrep};
use finq_core::qset;
use finq_core::spacetime::{
    feynman_spectrum, feynman_spectrum_dense, yang_contraction_family, FeynmanConfig,
};
use num_traits::Zero;

fn finish(criterion: &str, what: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    assert!(
        elapsed <= budget,
        "criterion {criterion} exceeded its {budget:?} budget: {elapsed:?}"
    );
    println!("criterion {criterion} ({what}): PASS in {elapsed:?}");
}

#[test]
fn criterion_01_serial_table_reproduction() {
    let started = Instant::now();
    let rows = qset::table_rows(4, 16).expect("rank 4 is supported");
    assert_eq!(rows[0].serials, vec![0]);
    assert_eq!(rows[1].serials, vec![1]);
    assert_eq!(rows[2].serials, vec![2, 3]);
    assert_eq!(rows[3].serials, (4..=15).collect::<Vec<u64>>());
    assert_eq!(rows[4].start, 16);
    assert_eq!(rows[4].width, 65520);
    // Every listed serial really has the rank of its row.
    for row in &rows {
        for &n in &row.serials {
            assert_eq!(qset::rank_of_serial(n), row.rank, "serial {n}");
        }
    }
    finish("01", "serial table", started, Duration::from_secs(1));
}

#[test]
fn criterion_02_fermi_regularity() {
    let started = Instant::now();
    for n in 1..=12u32 {
        for p in 0..=n {
            let metric = Metric::new(p, n - p);
            let alg = AlgebraId::Clifford(metric);
            assert_eq!(alg.dimension(), 1u64 << n, "{metric}");
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
    finish("02", "fermi regularity", started, Duration::from_secs(10));
}

#[test]
fn criterion_03_palev_bound() {
    let started = Instant::now();
    let mut l = frac(1, 2);
    while l <= int(4) {
        let sys = so3_irrep(&l).unwrap();
        let (plus, _) = sys.ladder();
        let two_l: u32 = (l.clone() * int(2)).to_integer().try_into().unwrap();
        assert!(
            plus.pow(two_l + 1).unwrap().is_zero(),
            "(L+)^(2l+1) must vanish at l = {l}"
        );
        assert!(
            !plus.pow(two_l).unwrap().is_zero(),
            "(L+)^(2l) must survive at l = {l}"
        );
        l += frac(1, 2);
    }
    finish("03", "palev bound", started, Duration::from_secs(1));
}

#[test]
fn criterion_04_difermion_identification() {
    let started = Instant::now();
    let d = difermion(3).unwrap();
    let alg = d.algebra();
    assert_eq!(alg.dim(), 15);
    assert!(alg.jacobi_defect().is_zero(), "bracket closure");
    assert!(alg.is_semisimple());
    let so33 = builtins::so_pq(3, 3);
    assert_eq!(alg.killing_signature(), so33.killing_signature());
    finish("04", "di-fermion identification", started, Duration::from_secs(5));
}

#[test]
fn criterion_05_contraction_chain() {
    let started = Instant::now();
    let boost = builtins::so31_boost_family();
    assert!(boost.limit().unwrap().same_constants(&builtins::galilean()));
    let yang = yang_contraction_family(1, 1).unwrap();
    assert!(yang
        .limit()
        .unwrap()
        .same_constants(&builtins::heisenberg_poincare4()));
    // Deviation at eps = 10^-k scales as eps^2: successive ratios are 100
    // within the stated factor 1.01, in exact arithmetic.
    let lo = frac(100, 1) / frac(101, 100);
    let hi = frac(100, 1) * frac(101, 100);
    for fam in [boost, yang] {
        let lim = fam.limit().unwrap();
        let mut prev: Option<Scalar> = None;
        for k in 1..=3u32 {
            let eps = frac(1, 10i64.pow(k));
            let dist = fam
                .contract(&eps)
                .unwrap()
                .constant_distance(&lim)
                .unwrap();
            assert!(!dist.is_zero());
            if let Some(p) = prev.clone() {
                let ratio = p / dist.clone();
                assert!(ratio >= lo && ratio <= hi, "ratio {ratio} at k = {k}");
            }
            prev = Some(dist);
        }
    }
    finish("05", "contraction chain", started, Duration::from_secs(5));
}

#[test]
fn criterion_06_killing_degeneracy() {
    let started = Instant::now();
    for n in 1..=4usize {
        let h = builtins::heisenberg(n);
        assert!(h.killing_form().is_zero(), "h({n})");
        assert_eq!(h.killing_signature(), (0, 0, 2 * n + 1));
    }
    finish("06", "killing degeneracy", started, Duration::from_secs(1));
}

#[test]
fn criterion_07_spinor_isomorphism() {
    let started = Instant::now();
    for r in 1..=3u32 {
        let report = qset::endo_iso_check(r).unwrap();
        assert!(report.relations_ok, "rank {r} relations");
        assert_eq!(
            report.algebra_rank, report.expected_rank,
            "rank {r} operator algebra dimension"
        );
    }
    finish("07", "spinor isomorphism", started, Duration::from_secs(60));
}

#[test]
fn criterion_08_feynman_spectra() {
    let started = Instant::now();
    for n in 1..=3usize {
        let cfg = FeynmanConfig::new(n, int(1), Metric::new(3, 1)).unwrap();
        for mu in [1usize, 2, 3] {
            let ladder = feynman_spectrum(&cfg, mu).unwrap();
            let dense = feynman_spectrum_dense(&cfg, mu).unwrap();
            assert_eq!(ladder.entries, dense.entries, "N = {n}, mu = {mu}");
            assert_eq!(
                ladder.total_multiplicity(),
                4u128.pow(n as u32),
                "N = {n}, mu = {mu}"
            );
            // The ladder {N - 2k}.
            let values: Vec<Scalar> =
                ladder.entries.iter().map(|(v, _)| v.clone()).collect();
            let expected: Vec<Scalar> = (0..=n)
                .map(|k| int(n as i64 - 2 * k as i64))
                .rev()
                .collect();
            assert_eq!(values, expected);
        }
    }
    finish("08", "feynman spectra", started, Duration::from_secs(30));
}

#[test]
fn criterion_09_neutrality_report() {
    let started = Instant::now();
    let rows = qset::neutrality_report(4).unwrap();
    assert_eq!(rows.len(), 4);
    for row in &rows {
        // The computation must complete with an explicit neutrality flag and
        // a stated ratio whenever the negative count is nonzero.
        assert!(!row.note.is_empty());
        if row.signature.1 > 0 {
            assert!(row.ratio.is_some());
        }
        if row.rank <= 3 {
            assert!(row.gram.is_some(), "dense Gram through rank 3");
        } else {
            assert!(row.gram.is_none(), "rank 4 stays factored");
        }
    }
    // Signature content under the documented pairing convention.
    assert_eq!(rows[0].signature, (1, 1, 0));
    assert_eq!(rows[1].signature, (0, 0, 4));
    assert_eq!(rows[2].signature, (8, 8, 0));
    assert_eq!(rows[3].signature, (32768, 32768, 0));
    finish("09", "neutrality report", started, Duration::from_secs(60));
}

#[test]
fn criterion_10_verify_all_exit_zero() {
    let started = Instant::now();
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_finq"))
        .args(["verify-all", "--max-rank", "4", "--max-n", "3"])
        .output()
        .expect("binary runs");
    assert!(
        out.status.success(),
        "verify-all failed:\n{}",
        String::from_utf8_lossy(&out.stdout)
    );
    let elapsed = started.elapsed();
    assert!(
        elapsed <= Duration::from_secs(300),
        "verify-all exceeded five minutes: {elapsed:?}"
    );
    // The smaller sweep exits 0 as well.
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_finq"))
        .args(["verify-all", "--max-rank", "3", "--max-n", "3"])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    finish("10", "global verify-all", started, Duration::from_secs(300));
}
