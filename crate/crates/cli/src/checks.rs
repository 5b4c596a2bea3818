//! The verify-all suite: every invariant the library claims, runnable in one
//! shot. Checks are assembled in deterministic name order; the exit code of
//! the command is 0 exactly when everything passes.

use serde_json::{json, Value};

use finq_core::clifford::{matrix_rep, AlgebraId, Metric, Multivector};
use finq_core::lie::builtins;
use finq_core::linalg::{frac, int, scalar_json, Matrix, Scalar};
use finq_core::palev::{difermion, so3_irrep};
use finq_core::qset;
use finq_core::spacetime::{
    feynman_position, feynman_spectrum, feynman_spectrum_dense, yang_contraction_family,
    FeynmanConfig,
};
use num_traits::Zero;

use crate::report::{Check, Report};

/// Small deterministic generator for the randomized spot checks.
struct Rng(u64);

impl Rng {
    fn new(seed: u64) -> Self {
        Rng(seed.wrapping_mul(2862933555777941757).wrapping_add(3037000493) | 1)
    }

    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next() % ((hi - lo + 1) as u64)) as i64
    }

    fn scalar(&mut self) -> Scalar {
        frac(self.int_in(-9, 9), self.int_in(1, 4))
    }

    fn matrix(&mut self, rows: usize, cols: usize) -> Matrix<Scalar> {
        Matrix::from_fn(rows, cols, |_, _| self.scalar())
    }
}

pub fn verify_all(max_rank: u32, max_n: usize, eps: &str, seed: u64) -> Report {
    let params = json!({
        "max_rank": max_rank,
        "max_n": max_n,
        "eps": eps,
        "seed": seed,
    });
    let eps = match crate::commands::parse_eps(eps) {
        Ok(e) => e,
        Err(m) => return Report::error("verify-all", params, m),
    };

    let mut checks: Vec<Check> = Vec::new();
    let mut results = serde_json::Map::new();

    check_table(&mut checks, &mut results, max_rank.min(4));
    check_fermi_regularity(&mut checks);
    check_palev_bound(&mut checks);
    check_difermion(&mut checks, max_n.min(3) as u32);
    check_contractions(&mut checks, &eps);
    check_killing_degeneracy(&mut checks);
    check_spinor_isomorphism(&mut checks, max_rank.min(3));
    check_feynman(&mut checks, &mut results, max_n.min(3));
    check_neutrality(&mut checks, &mut results, max_rank.min(4));
    check_seeded(&mut checks, seed);

    checks.sort_by(|a, b| a.name.cmp(&b.name));
    Report::new("verify-all", params, Value::Object(results)).with_checks(checks)
}

fn check_table(checks: &mut Vec<Check>, results: &mut serde_json::Map<String, Value>, max_rank: u32) {
    let rows = qset::table_rows(max_rank, 16).expect("rank capped at 4");
    let mut summary = Vec::new();
    for row in &rows {
        let expected: Vec<u64> = match row.rank {
            0 => vec![0],
            1 => vec![1],
            2 => vec![2, 3],
            3 => (4..=15).collect(),
            _ => Vec::new(),
        };
        let pass = if row.rank <= 3 {
            row.serials == expected && row.width == expected.len() as u64
        } else {
            row.start == 16 && row.width == 65520
        };
        checks.push(Check::from_bool(
            format!("01-serial-table-rank-{}", row.rank),
            pass,
            json!({"start": row.start, "width": row.width}),
        ));
        summary.push(json!({"rank": row.rank, "start": row.start, "width": row.width}));
    }
    results.insert("serial_table".into(), json!(summary));
}

fn check_fermi_regularity(checks: &mut Vec<Check>) {
    let mut dim_ok = true;
    let mut relations_ok = true;
    let mut witness = Value::Null;
    for n in 1..=12u32 {
        for p in 0..=n {
            let metric = Metric::new(p, n - p);
            let alg = AlgebraId::Clifford(metric);
            if alg.dimension() != 1u64 << n {
                dim_ok = false;
            }
            for i in 0..n {
                for j in i..n {
                    let ei = Multivector::generator(alg, i).expect("in range");
                    let ej = Multivector::generator(alg, j).expect("in range");
                    let anti = ei
                        .geometric_product(&ej)
                        .expect("same algebra")
                        .add(&ej.geometric_product(&ei).expect("same algebra"))
                        .expect("same algebra");
                    let expected = if i == j {
                        Multivector::scalar(alg, int(2 * i64::from(metric.sign_of(i))))
                    } else {
                        Multivector::zero(alg)
                    };
                    if anti != expected {
                        relations_ok = false;
                        witness = json!(format!("{metric} pair ({i},{j})"));
                    }
                }
            }
        }
    }
    checks.push(Check::from_bool(
        "02-fermi-regularity-dimension-2-pow-n",
        dim_ok,
        json!(null),
    ));
    checks.push(Check::from_bool(
        "02-fermi-regularity-anticommutation",
        relations_ok,
        witness,
    ));
    // Matrix representations satisfy the same relations exactly.
    let mut rep_ok = true;
    let mut rep_witness = Value::Null;
    for n in 1..=12u32 {
        for p in 0..=n {
            let metric = Metric::new(p, n - p);
            if let Err(w) = matrix_rep(metric).relation_check() {
                rep_ok = false;
                rep_witness = json!(format!("{metric}: {w}"));
            }
        }
    }
    checks.push(Check::from_bool(
        "02-fermi-regularity-matrix-representations",
        rep_ok,
        rep_witness,
    ));
}

fn check_palev_bound(checks: &mut Vec<Check>) {
    let mut pass = true;
    let mut witness = Value::Null;
    let mut l = frac(1, 2);
    while l <= int(4) {
        let sys = so3_irrep(&l).expect("valid spin");
        let (plus, _) = sys.ladder();
        let two_l: u32 = (l.clone() * int(2)).to_integer().try_into().expect("small");
        let vanishes = plus.pow(two_l + 1).expect("square").is_zero();
        let survives = !plus.pow(two_l).expect("square").is_zero();
        if !(vanishes && survives) {
            pass = false;
            witness = json!(format!("l = {l}"));
        }
        l += frac(1, 2);
    }
    checks.push(Check::from_bool(
        "03-palev-bound-ladder-nilpotency",
        pass,
        witness,
    ));
}

fn check_difermion(checks: &mut Vec<Check>, max_n: u32) {
    let n = max_n.max(3);
    let d = difermion(n).expect("n >= 1");
    let alg = d.algebra();
    checks.push(Check::from_bool(
        "04-difermion-dimension",
        alg.dim() == (n as usize) * (2 * n as usize - 1),
        json!(alg.dim()),
    ));
    checks.push(Check::from_bool(
        "04-difermion-jacobi-closure",
        alg.jacobi_defect().is_zero(),
        json!(null),
    ));
    checks.push(Check::from_bool(
        "04-difermion-semisimple",
        alg.is_semisimple(),
        json!(null),
    ));
    let so = builtins::so_pq(n, n);
    checks.push(Check::from_bool(
        "04-difermion-killing-signature-matches-so-nn",
        alg.killing_signature() == so.killing_signature(),
        json!({
            "got": vec![alg.killing_signature().0, alg.killing_signature().1, alg.killing_signature().2],
        }),
    ));
}

fn check_contractions(checks: &mut Vec<Check>, eps: &Scalar) {
    let boost = builtins::so31_boost_family();
    checks.push(Check::from_bool(
        "05-contraction-boost-limit-is-galilean",
        boost
            .limit()
            .expect("family validated")
            .same_constants(&builtins::galilean()),
        json!(null),
    ));
    let yang = yang_contraction_family(1, 1).expect("default exponents");
    checks.push(Check::from_bool(
        "05-contraction-yang-limit-is-heisenberg-poincare",
        yang.limit()
            .expect("family validated")
            .same_constants(&builtins::heisenberg_poincare4()),
        json!(null),
    ));
    // Quadratic scaling of the deviation across eps = 10^-1, 10^-2, 10^-3,
    // within the stated factor 1.01 in exact arithmetic.
    for (name, fam) in [("boost", &boost), ("yang", &yang)] {
        let lim = fam.limit().expect("family validated");
        let mut pass = true;
        let mut prev: Option<Scalar> = None;
        for k in 1..=3u32 {
            let e = frac(1, 10i64.pow(k));
            let at = fam.contract(&e).expect("nonzero eps");
            let dist = at.constant_distance(&lim).expect("same dimension");
            if dist.is_zero() {
                pass = false;
            }
            if let Some(p) = prev.clone() {
                let ratio = p / dist.clone();
                let lo = frac(100, 1) / frac(101, 100);
                let hi = frac(100, 1) * frac(101, 100);
                if ratio < lo || ratio > hi {
                    pass = false;
                }
            }
            prev = Some(dist);
        }
        checks.push(Check::from_bool(
            format!("05-contraction-quadratic-deviation-{name}"),
            pass,
            json!(null),
        ));
    }
    // At the user-provided eps, rescaling back recovers the base exactly.
    let at = yang.contract(eps).expect("nonzero eps checked");
    let n = at.dim();
    let mut back = Matrix::<Scalar>::zeros(n, n);
    for i in 0..n {
        let mut f = Scalar::from_integer(1.into());
        let m = yang.exponents()[i];
        for _ in 0..m.unsigned_abs() {
            if m >= 0 {
                f /= eps.clone();
            } else {
                f *= eps.clone();
            }
        }
        back.set(i, i, f);
    }
    let recovered = at
        .transform_basis("recovered", at.labels().to_vec(), &back)
        .expect("diagonal is invertible");
    checks.push(Check::from_bool(
        "05-contraction-isomorphic-at-nonzero-eps",
        recovered.same_constants(yang.base()),
        json!(null),
    ));
}

fn check_killing_degeneracy(checks: &mut Vec<Check>) {
    let mut pass = true;
    let mut witness = Value::Null;
    for n in 1..=4usize {
        let h = builtins::heisenberg(n);
        if !h.killing_form().is_zero() {
            pass = false;
            witness = json!(format!("h({n})"));
        }
        if h.killing_signature() != (0, 0, 2 * n + 1) {
            pass = false;
            witness = json!(format!("h({n}) signature"));
        }
    }
    checks.push(Check::from_bool(
        "06-killing-form-heisenberg-identically-zero",
        pass,
        witness,
    ));
}

fn check_spinor_isomorphism(checks: &mut Vec<Check>, max_rank: u32) {
    for r in 1..=max_rank.max(1) {
        let report = qset::endo_iso_check(r).expect("rank capped at 3");
        checks.push(Check::from_bool(
            format!("07-spinor-isomorphism-rank-{r}-relations"),
            report.relations_ok,
            json!(report.relation_witness),
        ));
        checks.push(Check::from_bool(
            format!("07-spinor-isomorphism-rank-{r}-full-operator-algebra"),
            report.algebra_rank == report.expected_rank,
            json!({"got": report.algebra_rank, "expected": report.expected_rank}),
        ));
    }
}

fn check_feynman(
    checks: &mut Vec<Check>,
    results: &mut serde_json::Map<String, Value>,
    max_n: usize,
) {
    let mut summary = Vec::new();
    for n in 1..=max_n.max(1) {
        let cfg = FeynmanConfig::new(n, int(1), Metric::new(3, 1)).expect("valid");
        let mut dense_matches = true;
        let mut sums_ok = true;
        for mu in [1usize, 2, 3] {
            let ladder = feynman_spectrum(&cfg, mu).expect("valid mu");
            let dense = feynman_spectrum_dense(&cfg, mu).expect("dense feasible");
            if ladder.entries != dense.entries {
                dense_matches = false;
            }
            if ladder.total_multiplicity() != 4u128.pow(n as u32) {
                sums_ok = false;
            }
        }
        checks.push(Check::from_bool(
            format!("08-feynman-dense-matches-ladder-n-{n}"),
            dense_matches,
            json!(null),
        ));
        checks.push(Check::from_bool(
            format!("08-feynman-multiplicities-sum-n-{n}"),
            sums_ok,
            json!(null),
        ));
        if n >= 2 {
            let mut commute = true;
            for mu in 1..=4usize {
                for nu in 1..=4usize {
                    let a = feynman_position(&cfg, mu).expect("valid mu");
                    let b = feynman_position(&cfg, nu).expect("valid mu");
                    for s in 0..n {
                        for t in 0..n {
                            if s != t && !a.embedded(s).commutes_with(&b.embedded(t)) {
                                commute = false;
                            }
                        }
                    }
                }
            }
            checks.push(Check::from_bool(
                format!("08-feynman-distinct-chronons-commute-n-{n}"),
                commute,
                json!(null),
            ));
        }
        let spectrum = feynman_spectrum(&cfg, 1).expect("valid mu");
        summary.push(json!({
            "n": n,
            "values": spectrum.entries.iter().map(|(v, m)| json!({
                "value": scalar_json(v),
                "multiplicity": *m as u64,
            })).collect::<Vec<_>>(),
        }));
    }
    results.insert("feynman_spectra".into(), json!(summary));
}

fn check_neutrality(
    checks: &mut Vec<Check>,
    results: &mut serde_json::Map<String, Value>,
    max_rank: u32,
) {
    let rows = qset::neutrality_report(max_rank.max(1)).expect("rank capped at 4");
    let mut summary = Vec::new();
    for r in &rows {
        checks.push(Check::pass(format!(
            "09-neutrality-rank-{}-computed-and-flagged",
            r.rank
        )));
        summary.push(json!({
            "rank": r.rank,
            "plus": r.signature.0,
            "minus": r.signature.1,
            "zero": r.signature.2,
            "ratio": r.ratio.as_ref().map(scalar_json),
            "exactly_neutral": r.exactly_neutral,
            "note": r.note,
        }));
    }
    results.insert("neutrality".into(), json!(summary));
}

fn check_seeded(checks: &mut Vec<Check>, seed: u64) {
    let mut rng = Rng::new(seed);

    // Associativity of exact matrix products on random triples.
    let mut pass = true;
    for _ in 0..8 {
        let a = rng.matrix(3, 2);
        let b = rng.matrix(2, 4);
        let c = rng.matrix(4, 3);
        let left = a.mul(&b).expect("shape").mul(&c).expect("shape");
        let right = a.mul(&b.mul(&c).expect("shape")).expect("shape");
        if left != right {
            pass = false;
        }
    }
    checks.push(Check::from_bool(
        "90-random-matmul-associativity",
        pass,
        json!({"seed": seed}),
    ));

    // Mixed product identity for Kronecker products.
    let mut pass = true;
    for _ in 0..8 {
        let a = rng.matrix(2, 3);
        let b = rng.matrix(2, 2);
        let c = rng.matrix(3, 2);
        let d = rng.matrix(2, 3);
        let left = a.kron(&b).mul(&c.kron(&d)).expect("shape");
        let right = a.mul(&c).expect("shape").kron(&b.mul(&d).expect("shape"));
        if left != right {
            pass = false;
        }
    }
    checks.push(Check::from_bool(
        "90-random-kron-mixed-product",
        pass,
        json!({"seed": seed}),
    ));

    // Killing signature is congruence-invariant under random shears.
    let mut pass = true;
    for _ in 0..4 {
        let alg = builtins::so31_rotation_boost();
        let n = alg.dim();
        let mut s = Matrix::<Scalar>::identity(n);
        s.set(0, rng.int_in(1, 5) as usize, int(rng.int_in(-3, 3)));
        s.set(3, rng.int_in(4, 5) as usize, int(rng.int_in(-3, 3)));
        let moved = alg
            .transform_basis("moved", alg.labels().to_vec(), &s)
            .expect("unit determinant");
        if moved.killing_signature() != alg.killing_signature() {
            pass = false;
        }
    }
    checks.push(Check::from_bool(
        "90-random-killing-congruence-invariance",
        pass,
        json!({"seed": seed}),
    ));
}
