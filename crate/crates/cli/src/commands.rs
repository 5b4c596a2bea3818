use serde_json::{json, Value};

use finq_core::clifford::{matrix_rep, second_grade_basis, Metric};
use finq_core::lie::{builtins, verify_rep};
use finq_core::linalg::{parse_scalar, scalar_json, Matrix, Scalar};
use finq_core::palev::{binomial, difermion, sl_fock, so3_irrep};
use finq_core::qset;
use finq_core::spacetime::{
    feynman_spectrum, quantized_i_spectrum, yang_contraction_family, yang_generators,
    FeynmanConfig, LadderKind,
};
use num_traits::Zero;

use crate::report::{Check, Report};
use crate::{CliffordVerb, LieVerb, PalevVerb, QsetVerb, SpacetimeVerb};

pub fn clifford(verb: &CliffordVerb) -> Report {
    match verb {
        CliffordVerb::Rep { p, q } => {
            let params = json!({"p": p, "q": q});
            if p + q > 12 {
                return Report::error("clifford rep", params, "p + q must be at most 12".into());
            }
            let rep = matrix_rep(Metric::new(*p, *q));
            let matrices: Value = if rep.dim() <= 64 {
                json!(rep
                    .dense_generators()
                    .expect("small dimension")
                    .iter()
                    .map(|m: &Matrix<Scalar>| m.json_rows())
                    .collect::<Vec<_>>())
            } else {
                Value::Null
            };
            let relation = rep.relation_check();
            let checks = vec![Check::from_bool(
                "generator-relations-exact",
                relation.is_ok(),
                json!(relation.err().map(|w| w.to_string())),
            )];
            Report::new(
                "clifford rep",
                params,
                json!({
                    "dim": rep.dim(),
                    "generators": rep.generator_count(),
                    "matrices": matrices,
                }),
            )
            .with_checks(checks)
        }
        CliffordVerb::Bivectors { p, q } => {
            let params = json!({"p": p, "q": q});
            if p + q > 10 {
                return Report::error(
                    "clifford bivectors",
                    params,
                    "p + q must be at most 10".into(),
                );
            }
            let metric = Metric::new(*p, *q);
            let basis = second_grade_basis(metric);
            let n = (p + q) as usize;
            let expected = n * n.saturating_sub(1) / 2;
            let mut closed = true;
            for a in &basis {
                for b in &basis {
                    let comm = a
                        .geometric_product(b)
                        .expect("same algebra")
                        .sub(&b.geometric_product(a).expect("same algebra"))
                        .expect("same algebra");
                    if comm.grades().iter().any(|&g| g != 2) {
                        closed = false;
                    }
                }
            }
            let checks = vec![
                Check::from_bool(
                    "bivector-count",
                    basis.len() == expected,
                    json!({"got": basis.len(), "expected": expected}),
                ),
                Check::from_bool("commutator-closure-grade-two", closed, json!(null)),
            ];
            Report::new(
                "clifford bivectors",
                params,
                json!({
                    "count": basis.len(),
                    // Each multivector as (blade bitmask, numerator,
                    // denominator) triples.
                    "bivectors": basis.iter().map(|b| b.to_json()).collect::<Vec<_>>(),
                }),
            )
            .with_checks(checks)
        }
    }
}

pub fn lie(verb: &LieVerb) -> Report {
    let (cmd, name) = match verb {
        LieVerb::Show { name } => ("lie show", name),
        LieVerb::Killing { name } => ("lie killing", name),
        LieVerb::Jacobi { name } => ("lie jacobi", name),
    };
    let params = json!({"name": name});
    let alg = match builtins::builtin(name) {
        Ok(alg) => alg,
        Err(e) => return Report::error(cmd, params, e.to_string()),
    };
    let defect = alg.jacobi_defect();
    let jacobi_check = Check::from_bool(
        "jacobi-identity-exact",
        defect.is_zero(),
        scalar_json(&defect),
    );
    match verb {
        LieVerb::Show { .. } => Report::new(cmd, params, alg.descriptor_json())
            .with_checks(vec![jacobi_check]),
        LieVerb::Killing { .. } => {
            let k = alg.killing_form();
            let (plus, minus, zero) = alg.killing_signature();
            Report::new(
                cmd,
                params,
                json!({
                    "dim": alg.dim(),
                    "killing": if alg.dim() <= 16 { k.json_rows() } else { Value::Null },
                    "signature": {"plus": plus, "minus": minus, "zero": zero},
                    "semisimple": alg.is_semisimple(),
                }),
            )
            .with_checks(vec![jacobi_check])
        }
        LieVerb::Jacobi { .. } => Report::new(
            cmd,
            params,
            json!({"defect": scalar_json(&defect)}),
        )
        .with_checks(vec![jacobi_check]),
    }
}

pub fn palev(verb: &PalevVerb) -> Report {
    match verb {
        PalevVerb::Rotaton { l } => {
            let params = json!({"l": l});
            let l = match parse_scalar(l) {
                Ok(v) => v,
                Err(e) => return Report::error("palev rotaton", params, e.to_string()),
            };
            let sys = match so3_irrep(&l) {
                Ok(s) => s,
                Err(e) => return Report::error("palev rotaton", params, e.to_string()),
            };
            let so3 = builtins::so3();
            let mats: Vec<_> = sys.so3_matrices().into_iter().cloned().collect();
            let defect = verify_rep(&so3, &mats).expect("shapes agree");
            let (plus, _) = sys.ladder();
            let two_l: u32 = (l.clone() * finq_core::linalg::int(2))
                .to_integer()
                .try_into()
                .expect("validated");
            let vanishes = plus.pow(two_l + 1).expect("square").is_zero();
            let survives = two_l == 0 || !plus.pow(two_l).expect("square").is_zero();
            let checks = vec![
                Check::from_bool("so3-relations-exact", defect.is_zero(), scalar_json(&defect)),
                Check::from_bool(
                    "ladder-nilpotency-bound",
                    vanishes && survives,
                    json!({"vanishes_at": two_l + 1, "nonzero_at": two_l}),
                ),
            ];
            let [l1, l2, l3] = sys.so3_matrices();
            Report::new(
                "palev rotaton",
                params,
                json!({
                    "dim": sys.dim(),
                    "weight_spectrum": sys
                        .weight_spectrum()
                        .iter()
                        .map(scalar_json)
                        .collect::<Vec<_>>(),
                    "l1": l1.json_rows(),
                    "l2": l2.json_rows(),
                    "l3": l3.json_rows(),
                    "ladder_plus": plus.json_rows(),
                }),
            )
            .with_checks(checks)
        }
        PalevVerb::Difermion { n } => {
            let params = json!({"n": n});
            let d = match difermion(*n) {
                Ok(d) => d,
                Err(e) => return Report::error("palev difermion", params, e.to_string()),
            };
            let alg = d.algebra();
            let expected_dim = (*n as usize) * (2 * *n as usize - 1);
            let (plus, minus, zero) = alg.killing_signature();
            let so = builtins::so_pq(*n, *n);
            let mut checks = vec![
                Check::from_bool(
                    "dimension-n-2n-minus-1",
                    alg.dim() == expected_dim,
                    json!({"got": alg.dim(), "expected": expected_dim}),
                ),
                Check::from_bool(
                    "jacobi-identity-exact",
                    alg.jacobi_defect().is_zero(),
                    json!(null),
                ),
                Check::from_bool(
                    "killing-signature-matches-so-nn",
                    (plus, minus, zero) == so.killing_signature(),
                    json!({"got": [plus, minus, zero]}),
                ),
            ];
            if *n >= 2 {
                checks.push(Check::from_bool(
                    "semisimple",
                    alg.is_semisimple(),
                    json!(null),
                ));
            }
            Report::new(
                "palev difermion",
                params,
                json!({
                    "dim": alg.dim(),
                    "signature": {"plus": plus, "minus": minus, "zero": zero},
                    "descriptor": alg.descriptor_json(),
                }),
            )
            .with_checks(checks)
        }
        PalevVerb::Fock { n, p } => {
            let params = json!({"n": n, "p": p});
            if *n > 6 || *p > 6 {
                return Report::error("palev fock", params, "n and p must be at most 6".into());
            }
            let f = sl_fock(*n, *p);
            let expected = binomial(n + p, *n);
            let defect = f.gl_relation_defect();
            let checks = vec![
                Check::from_bool(
                    "dimension-stars-and-bars",
                    f.dim() == expected,
                    json!({"got": f.dim(), "expected": expected}),
                ),
                Check::from_bool("gl-relations-exact", defect.is_zero(), scalar_json(&defect)),
            ];
            let matrices: Value = if f.dim() <= 20 {
                let slots = n + 1;
                let mut all = serde_json::Map::new();
                for i in 0..slots {
                    for j in 0..slots {
                        all.insert(format!("E{}{}", i + 1, j + 1), f.e(i, j).json_rows());
                    }
                }
                Value::Object(all)
            } else {
                Value::Null
            };
            Report::new(
                "palev fock",
                params,
                json!({"dim": f.dim(), "matrices": matrices}),
            )
            .with_checks(checks)
        }
    }
}

pub fn qset(verb: &QsetVerb) -> Report {
    match verb {
        QsetVerb::Serial { n } => {
            let params = json!({"n": n});
            let s = qset::set_of(*n);
            let children: Vec<u64> = s
                .children()
                .iter()
                .map(|c| c.serial_u64().expect("children of u64 serial"))
                .collect();
            let checks = vec![Check::from_bool(
                "serial-roundtrip",
                s.serial_u64() == Some(*n),
                json!(s.serial().to_string()),
            )];
            Report::new(
                "qset serial",
                params,
                json!({
                    "serial": n,
                    "rank": s.rank(),
                    "set": s.bracket_string(),
                    "children": children,
                }),
            )
            .with_checks(checks)
        }
        QsetVerb::Table { rank } => {
            let params = json!({"rank": rank});
            let rows = match qset::table_rows(*rank, 12) {
                Ok(r) => r,
                Err(e) => return Report::error("qset table", params, e.to_string()),
            };
            let mut checks = Vec::new();
            let mut table = Vec::new();
            for row in &rows {
                let expected_start = if row.rank == 0 {
                    0
                } else {
                    qset::dim_of_rank(row.rank - 1).unwrap()
                };
                let expected_width =
                    qset::dim_of_rank(row.rank).unwrap() - expected_start;
                checks.push(Check::from_bool(
                    format!("row-{}-bounds", row.rank),
                    row.start == expected_start && row.width == expected_width,
                    json!({"start": row.start, "width": row.width}),
                ));
                let mut line: Vec<String> = row
                    .serials
                    .iter()
                    .zip(&row.sets)
                    .map(|(n, s)| format!("{n}:{s}"))
                    .collect();
                if row.truncated {
                    line.push(format!("... ({} entries)", row.width));
                }
                table.push(json!({
                    "rank": row.rank,
                    "start": row.start,
                    "width": row.width,
                    "serials": row.serials,
                    "sets": row.sets,
                    "truncated": row.truncated,
                    "line": line.join(" "),
                }));
            }
            Report::new("qset table", params, json!({"table": table})).with_checks(checks)
        }
        QsetVerb::Signature { rank } => {
            let params = json!({"rank": rank});
            let reports = match qset::neutrality_report(*rank) {
                Ok(r) => r,
                Err(e) => return Report::error("qset signature", params, e.to_string()),
            };
            let mut checks = Vec::new();
            let rows: Vec<Value> = reports
                .iter()
                .map(|r| {
                    checks.push(Check::pass(format!("rank-{}-signature-computed", r.rank)));
                    checks.push(Check::pass(format!(
                        "rank-{}-neutrality-flag-emitted",
                        r.rank
                    )));
                    json!({
                        "rank": r.rank,
                        "generators": r.generators,
                        "dim": r.dim,
                        "plus": r.signature.0,
                        "minus": r.signature.1,
                        "zero": r.signature.2,
                        "ratio": r.ratio.as_ref().map(scalar_json),
                        "pairing_symmetric": r.symmetric,
                        "exactly_neutral": r.exactly_neutral,
                        "note": r.note,
                        "hermitian_space": r.hermitian_space.as_ref().map(|h| json!({
                            "total": h.total,
                            "symmetric": h.symmetric,
                            "antisymmetric": h.antisymmetric,
                        })),
                    })
                })
                .collect();
            Report::new("qset signature", params, json!({"rows": rows})).with_checks(checks)
        }
        QsetVerb::IsoCheck { rank } => {
            let params = json!({"rank": rank});
            let r = match qset::endo_iso_check(*rank) {
                Ok(r) => r,
                Err(e) => return Report::error("qset iso-check", params, e.to_string()),
            };
            let checks = vec![
                Check::from_bool(
                    "split-clifford-relations",
                    r.relations_ok,
                    json!(r.relation_witness),
                ),
                Check::from_bool(
                    "operator-algebra-full-dimension",
                    r.algebra_rank == r.expected_rank,
                    json!({"got": r.algebra_rank, "expected": r.expected_rank}),
                ),
            ];
            Report::new(
                "qset iso-check",
                params,
                json!({
                    "rank": r.rank,
                    "generators": r.generators,
                    "space_dim": r.space_dim,
                    "algebra_rank": r.algebra_rank,
                    "expected_rank": r.expected_rank,
                }),
            )
            .with_checks(checks)
        }
    }
}

pub fn spacetime(verb: &SpacetimeVerb) -> Report {
    match verb {
        SpacetimeVerb::Feynman {
            n,
            mu,
            chrone,
            metric,
        } => {
            let params = json!({"n": n, "mu": mu, "chrone": chrone, "metric": metric});
            let chrone = match parse_scalar(chrone) {
                Ok(c) => c,
                Err(e) => return Report::error("spacetime feynman", params, e.to_string()),
            };
            let metric = match metric.trim() {
                "3,1" => Metric::new(3, 1),
                "1,3" => Metric::new(1, 3),
                other => {
                    return Report::error(
                        "spacetime feynman",
                        params,
                        format!("metric must be 3,1 or 1,3, got {other}"),
                    )
                }
            };
            if *n > 31 {
                return Report::error(
                    "spacetime feynman",
                    params,
                    "chronon count must be at most 31".into(),
                );
            }
            let cfg = match FeynmanConfig::new(*n, chrone, metric) {
                Ok(c) => c,
                Err(e) => return Report::error("spacetime feynman", params, e.to_string()),
            };
            let spectrum = match feynman_spectrum(&cfg, *mu) {
                Ok(s) => s,
                Err(e) => return Report::error("spacetime feynman", params, e.to_string()),
            };
            let total = spectrum.total_multiplicity();
            let expected = 4u128.pow(*n as u32);
            let symmetric = spectrum.entries.iter().all(|(v, m)| {
                spectrum.entries
                    .iter()
                    .any(|(w, mm)| *w == -v.clone() && mm == m)
            });
            let checks = vec![
                Check::from_bool(
                    "multiplicities-sum-4-pow-n",
                    total == expected,
                    json!({"got": total.to_string(), "expected": expected.to_string()}),
                ),
                Check::from_bool("spectrum-symmetric-about-zero", symmetric, json!(null)),
            ];
            Report::new(
                "spacetime feynman",
                params,
                json!({
                    "kind": match spectrum.kind {
                        LadderKind::Real => "real",
                        LadderKind::Imaginary => "imaginary-ladder",
                    },
                    "operator_dim": cfg.operator_dim().map(|d| d.to_string()),
                    "probability_dim": cfg.probability_dim().to_string(),
                    "spectrum": spectrum.entries.iter().map(|(v, m)| json!({
                        "value": scalar_json(v),
                        "multiplicity": *m as u64,
                    })).collect::<Vec<_>>(),
                }),
            )
            .with_checks(checks)
        }
        SpacetimeVerb::Yang { blocks } => {
            let params = json!({"blocks": blocks});
            let y = yang_generators();
            let so33 = builtins::so_pq(3, 3);
            let defect = verify_rep(&so33, y.generators()).expect("shapes agree");
            let labels = y.labels();
            let central = y.generators()[y.central_index()].clone();
            let central_commutes = y.lorentz_indices().iter().all(|&i| {
                central
                    .commutator(&y.generators()[i])
                    .expect("same size")
                    .is_zero()
            });
            let checks = vec![
                Check::from_bool(
                    "fifteen-independent-components",
                    y.count() == 15,
                    json!(y.count()),
                ),
                Check::from_bool(
                    "so33-relations-exact",
                    defect.is_zero(),
                    scalar_json(&defect),
                ),
                Check::from_bool(
                    "central-commutes-with-lorentz-block",
                    central_commutes,
                    json!(null),
                ),
            ];
            let results = if *blocks {
                let mut gens = serde_json::Map::new();
                for (i, label) in labels.iter().enumerate() {
                    gens.insert(label.clone(), y.generators()[i].json_rows());
                }
                let s = quantized_i_spectrum(y.generators(), y.central_index())
                    .expect("index in range");
                let central_spectrum = json!({
                    "imaginary_pairs": s.imaginary_pairs.iter().map(|(m, k)| json!({
                        "magnitude": scalar_json(m),
                        "multiplicity": k,
                    })).collect::<Vec<_>>(),
                    "extreme_magnitude": s.extreme_magnitude.as_ref().map(scalar_json),
                });
                json!({
                    "labels": labels,
                    "blocks": {
                        "lorentz": y.lorentz_indices().iter().map(|&i| labels[i].clone()).collect::<Vec<_>>(),
                        "x": y.x_indices().iter().map(|&i| labels[i].clone()).collect::<Vec<_>>(),
                        "p": y.p_indices().iter().map(|&i| labels[i].clone()).collect::<Vec<_>>(),
                        "central": labels[y.central_index()].clone(),
                    },
                    "generators": Value::Object(gens),
                    "central_spectrum": central_spectrum,
                })
            } else {
                json!({"labels": labels})
            };
            Report::new("spacetime yang", params, results).with_checks(checks)
        }
        SpacetimeVerb::Contract {
            eps,
            scale_x,
            scale_p,
        } => {
            let params = json!({"eps": eps, "scale_x": scale_x, "scale_p": scale_p});
            let eps = match parse_scalar(eps) {
                Ok(e) => e,
                Err(e) => return Report::error("spacetime contract", params, e.to_string()),
            };
            let fam = match yang_contraction_family(*scale_x, *scale_p) {
                Ok(f) => f,
                Err(e) => return Report::error("spacetime contract", params, e.to_string()),
            };
            let at = match fam.contract(&eps) {
                Ok(a) => a,
                Err(e) => return Report::error("spacetime contract", params, e.to_string()),
            };
            let limit = fam.limit().expect("family validated");
            let deviation = at.constant_distance(&limit).expect("same dimension");
            let hp = builtins::heisenberg_poincare4();
            let checks = vec![Check::from_bool(
                "limit-is-heisenberg-poincare",
                limit.same_constants(&hp),
                json!(null),
            )];
            Report::new(
                "spacetime contract",
                params,
                json!({
                    "constants": at.descriptor_json(),
                    "deviation_norm": scalar_json(&deviation),
                    "limit": limit.descriptor_json(),
                }),
            )
            .with_checks(checks)
        }
    }
}

/// Parse helper shared with verify-all.
pub fn parse_eps(eps: &str) -> Result<Scalar, String> {
    let v = parse_scalar(eps).map_err(|e| e.to_string())?;
    if v.is_zero() {
        return Err("eps must be nonzero".into());
    }
    Ok(v)
}
