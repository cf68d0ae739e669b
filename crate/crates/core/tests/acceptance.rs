//! Acceptance suite: one PASS/FAIL line per criterion, with pinned runtime
//! limits. Criteria listed in `KNOWN_UNATTAINABLE` are expected to stay red;
//! the test fails if one of them turns green or any other criterion is red.

use std::time::{Duration, Instant};

use as_strata::algebra::{
    as_minimal_form, partial_fractions, specialize, BiPoly, BivariateRatFunc, Field, Fq,
};
use as_strata::deform::{
    alt_binom_sum, build_family, check_type1_nondiv, check_type1_params, lucas_binom_check,
    squared_binomial_poly, standard_suite, verify_all, FamilySpec, MIN_SUCCESSES,
};
use as_strata::graph::{build_cd, build_gd, connectivity_report_d, Status, StratGraph};
use as_strata::partition::{enumerate_omega, is_valid_entry, Partition};
use as_strata::strata::{
    dimension, edge_dim_case, edge_dim_case_direct, edge_dim_case_uncorrected,
};

/// Ω_4 at p = 5 has three members, so the two-partition golden data cannot
/// be reproduced.
const KNOWN_UNATTAINABLE: &[u32] = &[3];

type Check = fn() -> Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    check: Check,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn edge_set(g: &StratGraph) -> Vec<(String, String)> {
    let mut v: Vec<(String, String)> = g
        .edges
        .iter()
        .map(|e| {
            (
                g.vertices[e.from].partition.to_string(),
                g.vertices[e.to].partition.to_string(),
            )
        })
        .collect();
    v.sort();
    v
}

fn pairs(list: &[(&str, &str)]) -> Vec<(String, String)> {
    let mut v: Vec<(String, String)> = list
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    v.sort();
    v
}

fn c1_g7() -> Result<String, String> {
    let g = build_gd(5, 7).map_err(|e| e.to_string())?;
    let mut verts: Vec<String> = g.vertices.iter().map(|v| v.partition.to_string()).collect();
    verts.sort();
    let mut want_v: Vec<String> = [
        "[9]",
        "[5,4]",
        "[7,2]",
        "[3,3,3]",
        "[4,3,2]",
        "[5,2,2]",
        "[3,2,2,2]",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    want_v.sort();
    ensure(verts == want_v, || format!("vertices {verts:?}"))?;
    let want = pairs(&[
        ("[9]", "[5,4]"),
        ("[9]", "[3,3,3]"),
        ("[9]", "[7,2]"),
        ("[7,2]", "[5,2,2]"),
        ("[7,2]", "[4,3,2]"),
        ("[5,4]", "[4,3,2]"),
        ("[5,4]", "[5,2,2]"),
        ("[4,3,2]", "[3,2,2,2]"),
        ("[5,2,2]", "[3,2,2,2]"),
    ]);
    let got = edge_set(&g);
    ensure(got == want, || format!("edges {got:?}"))?;
    Ok("7 vertices, 9 edges".into())
}

fn c2_c7() -> Result<String, String> {
    let g = build_cd(5, 7).map_err(|e| e.to_string())?;
    ensure(g.is_connected(), || "C_7 is disconnected".into())?;
    let got = edge_set(&g);
    let want = pairs(&[
        ("[9]", "[5,4]"),
        ("[9]", "[3,3,3]"),
        ("[7,2]", "[4,3,2]"),
        ("[7,2]", "[5,2,2]"),
        ("[9]", "[3,2,2,2]"),
        ("[9]", "[4,3,2]"),
    ]);
    let missing: Vec<_> = want.iter().filter(|e| !got.contains(e)).collect();
    ensure(missing.is_empty(), || format!("missing edges {missing:?}"))?;
    Ok(format!(
        "connected, {} edges including the 6 drawn",
        got.len()
    ))
}

fn c3_omega4() -> Result<String, String> {
    let omega: Vec<String> = enumerate_omega(5, 4)
        .map_err(|e| e.to_string())?
        .iter()
        .map(|p| p.to_string())
        .collect();
    let cd = build_cd(5, 4).map_err(|e| e.to_string())?;
    let comps = cd.connected_components().len();
    ensure(omega == ["[4,2]", "[3,3]"] && comps == 2, || {
        format!("Omega_4 = {omega:?} with {comps} C_4 components; expected [[4,2],[3,3]] with 2")
    })?;
    Ok("Omega_4 matches".into())
}

fn c4_p3() -> Result<String, String> {
    for d in 0..=30 {
        let gd = build_gd(3, d).map_err(|e| e.to_string())?;
        let cd = build_cd(3, d).map_err(|e| e.to_string())?;
        let cd_edges = edge_set(&cd);
        for e in edge_set(&gd) {
            ensure(cd_edges.contains(&e), || {
                format!("d={d}: G_d edge {e:?} not in C_d")
            })?;
        }
        ensure(cd.is_connected(), || format!("d={d}: C_d disconnected"))?;
    }
    Ok("d = 0..=30".into())
}

fn isolated(g: &StratGraph) -> Vec<String> {
    let mut v: Vec<String> = g
        .isolated_vertices()
        .iter()
        .map(|&i| g.vertices[i].partition.to_string())
        .collect();
    v.sort();
    v
}

fn c5_p5() -> Result<String, String> {
    for d in [0, 1].into_iter().chain(7..=25) {
        let cd = build_cd(5, d).map_err(|e| e.to_string())?;
        ensure(cd.is_connected(), || format!("d={d}: C_d disconnected"))?;
    }
    let c5 = isolated(&build_cd(5, 5).map_err(|e| e.to_string())?);
    ensure(c5.contains(&"[3,2,2]".to_string()), || {
        format!("C_5 isolated {c5:?}")
    })?;
    let c6 = isolated(&build_cd(5, 6).map_err(|e| e.to_string())?);
    ensure(
        c6.contains(&"[3,3,2]".to_string()) && c6.contains(&"[2,2,2,2]".to_string()),
        || format!("C_6 isolated {c6:?}"),
    )?;
    Ok(format!("C_5 isolated {c5:?}, C_6 isolated {c6:?}"))
}

fn c6_p7() -> Result<String, String> {
    for d in 2..=6 {
        let cd = build_cd(7, d).map_err(|e| e.to_string())?;
        ensure(cd.edges.is_empty(), || {
            format!("d={d}: {} edges", cd.edges.len())
        })?;
        ensure(cd.vertices.iter().all(|v| v.dim == d as i64 - 1), || {
            format!("d={d}: dims differ")
        })?;
        let r = connectivity_report_d(7, d).map_err(|e| e.to_string())?;
        if cd.vertices.len() >= 2 {
            ensure(r.status == Status::Disconnected, || {
                format!("d={d}: status {:?}", r.status)
            })?;
        }
    }
    Ok("d = 2..=6".into())
}

fn c7_dims() -> Result<String, String> {
    let dim = |e: Vec<u32>| dimension(&Partition::new(5, e).unwrap());
    ensure(dim(vec![7]) == 3 && dim(vec![5, 2]) == 4, || {
        "spot checks".into()
    })?;
    let mut checked = 0;
    let mut uncorrected_misses = 0;
    for p in [3, 5, 7] {
        for e in 2..=60 {
            if !is_valid_entry(p, e) {
                continue;
            }
            for e2 in 2..=e / 2 {
                let e1 = e - e2;
                if !is_valid_entry(p, e1) || !is_valid_entry(p, e2) {
                    continue;
                }
                let a = edge_dim_case(p, e, [e1, e2]).map_err(|x| x.to_string())?;
                let b = edge_dim_case_direct(p, e, [e1, e2]).map_err(|x| x.to_string())?;
                ensure(a == b, || {
                    format!("p={p}, {e} -> [{e1},{e2}]: {a:?} vs {b:?}")
                })?;
                if edge_dim_case_uncorrected(p, e, [e1, e2]).map_err(|x| x.to_string())? != b {
                    uncorrected_misses += 1;
                }
                checked += 1;
            }
        }
    }
    ensure(uncorrected_misses > 0, || {
        "uncorrected reading never disagrees".into()
    })?;
    Ok(format!(
        "{checked} splits; uncorrected reading wrong on {uncorrected_misses}"
    ))
}

fn c8_worked_example() -> Result<String, String> {
    let fam = build_family(&FamilySpec::A { p: 5, e1: 4, e2: 3 }).map_err(|e| e.to_string())?;
    let fp = Field::prime(5).unwrap();
    let x = BiPoly::x(&fp);
    let t = BiPoly::t(&fp);
    let want = BivariateRatFunc::new(
        t.sub(&x.scale(fp.int(2))),
        x.pow(5).scale(fp.int(-2)).mul(&x.sub(&t).pow(2)),
    )
    .unwrap();
    let func = fam.bivariate().unwrap();
    ensure(func.equivalent(&want), || format!("family is {func}"))?;
    let f1 = specialize(func, &fp, Fq::ONE).map_err(|e| e.to_string())?;
    let mf = as_minimal_form(&f1).map_err(|e| e.to_string())?;
    ensure(mf.profile.to_string() == "{(0, 3), (1, 2)}", || {
        format!("profile {}", mf.profile)
    })?;
    let dec = partial_fractions(&f1, &[(Fq::ZERO, 5), (Fq::ONE, 2)]).map_err(|e| e.to_string())?;
    // -1/(2x^5) + 1/(2x^3) + 1/x^2 + 3/(2x) + 1/(2(x-1)^2) - 3/(2(x-1)) over F_5.
    let half = fp.inv(fp.int(2)).unwrap();
    let v = |n: i64| fp.mul(fp.int(n), half);
    let at0 = vec![v(3), fp.int(1), v(1), Fq::ZERO, v(-1)];
    let at1 = vec![v(-3), v(1)];
    ensure(dec.poly_part.is_zero(), || "nonzero polynomial part".into())?;
    ensure(dec.terms.len() == 2, || {
        "expected two principal parts".into()
    })?;
    ensure(
        dec.terms[0].point == Fq::ZERO && dec.terms[0].coeffs == at0,
        || format!("principal part at 0: {:?}", dec.terms[0].coeffs),
    )?;
    ensure(
        dec.terms[1].point == Fq::ONE && dec.terms[1].coeffs == at1,
        || format!("principal part at 1: {:?}", dec.terms[1].coeffs),
    )?;
    Ok("formula, profile and six-term expansion match".into())
}

fn c9_suite() -> Result<String, String> {
    let specs = standard_suite(0).map_err(|e| e.to_string())?;
    let reports = verify_all(specs.clone());
    for (s, r) in specs.iter().zip(reports) {
        let r = r.map_err(|e| format!("{s}: {e}"))?;
        ensure(r.passed(), || {
            format!("{s}: {:?}", r.verdict.first_discrepancy)
        })?;
        ensure(r.successes() >= MIN_SUCCESSES, || {
            format!("{s}: {} successes", r.successes())
        })?;
        let e = s.e();
        for g in &r.generic {
            let total: u32 = g.jumps_observed.iter().map(|j| j + 1).sum();
            ensure(total == e, || {
                format!("{s}: sum of e_i is {total}, expected {e}")
            })?;
        }
    }
    Ok(format!("{} families", specs.len()))
}

fn c10_lemmas() -> Result<String, String> {
    for u in 0..=60 {
        for v in 0..=u {
            let r = alt_binom_sum(u, v).map_err(|e| e.to_string())?;
            ensure(r.holds, || format!("alt sum fails at ({u}, {v})"))?;
        }
    }
    let mut n = 0;
    for p in [3, 5, 7] {
        for e in 4..=50 {
            for e2 in 2..=e / 2 {
                let e1 = e - e2;
                if check_type1_params(p, e1, e2).is_ok() {
                    ensure(check_type1_nondiv(p, e1, e2).unwrap(), || {
                        format!("p | binomial at p={p}, ({e1}, {e2})")
                    })?;
                    n += 1;
                }
            }
        }
        for a in 0..=200 {
            for i in 0..p as u64 {
                ensure(lucas_binom_check(p, a, i).unwrap(), || {
                    format!("Lucas at ({p}, {a}, {i})")
                })?;
            }
        }
    }
    for p in [3, 5, 7, 11, 13] {
        let s = squared_binomial_poly(p).map_err(|e| e.to_string())?;
        ensure(s.is_separable(), || format!("S not separable at p={p}"))?;
    }
    Ok(format!("{n} type-A parameter pairs"))
}

fn c11_stress() -> Result<String, String> {
    let omega = enumerate_omega(7, 40).map_err(|e| e.to_string())?;
    let cd = build_cd(7, 40).map_err(|e| e.to_string())?;
    let comps = cd.connected_components().len();
    Ok(format!(
        "|Omega_40| = {}, {} edges, {comps} components",
        omega.len(),
        cd.edges.len()
    ))
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        id: 1,
        name: "G_7 golden graph",
        limit: Duration::from_secs(1),
        check: c1_g7,
    },
    Criterion {
        id: 2,
        name: "C_7 golden subgraph",
        limit: Duration::from_secs(1),
        check: c2_c7,
    },
    Criterion {
        id: 3,
        name: "Omega_4 two-partition claim",
        limit: Duration::from_secs(1),
        check: c3_omega4,
    },
    Criterion {
        id: 4,
        name: "p=3 sweep d<=30",
        limit: Duration::from_secs(30),
        check: c4_p3,
    },
    Criterion {
        id: 5,
        name: "p=5 sweep and isolated strata",
        limit: Duration::from_secs(60),
        check: c5_p5,
    },
    Criterion {
        id: 6,
        name: "p=7 disconnected range",
        limit: Duration::from_secs(10),
        check: c6_p7,
    },
    Criterion {
        id: 7,
        name: "dimension formula and edge cases",
        limit: Duration::from_secs(10),
        check: c7_dims,
    },
    Criterion {
        id: 8,
        name: "worked example",
        limit: Duration::from_secs(1),
        check: c8_worked_example,
    },
    Criterion {
        id: 9,
        name: "deformation verification suite",
        limit: Duration::from_secs(300),
        check: c9_suite,
    },
    Criterion {
        id: 10,
        name: "binomial lemma suite",
        limit: Duration::from_secs(60),
        check: c10_lemmas,
    },
    Criterion {
        id: 11,
        name: "p=7 d=40 stress (slow)",
        limit: Duration::from_secs(600),
        check: c11_stress,
    },
];

#[test]
fn acceptance() {
    let mut unexpected = Vec::new();
    for c in CRITERIA {
        let start = Instant::now();
        let result = (c.check)();
        let elapsed = start.elapsed();
        let outcome = match result {
            Ok(detail) if elapsed <= c.limit => Ok(detail),
            Ok(_) => Err(format!("took {elapsed:?}, limit {:?}", c.limit)),
            Err(e) => Err(e),
        };
        let known = KNOWN_UNATTAINABLE.contains(&c.id);
        match &outcome {
            Ok(detail) => println!(
                "criterion {:>2}: PASS  {} ({elapsed:.2?}) {detail}",
                c.id, c.name
            ),
            Err(why) => println!(
                "criterion {:>2}: FAIL  {} ({elapsed:.2?}) {why}{}",
                c.id,
                c.name,
                if known { " [known unattainable]" } else { "" }
            ),
        }
        if outcome.is_ok() == known {
            unexpected.push(c.id);
        }
    }
    assert!(
        unexpected.is_empty(),
        "criteria with unexpected outcome: {unexpected:?}"
    );
}
