//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

use std::collections::HashMap;
use std::process::{Command, ExitCode};

use superschur_core::catalog::{
    catalog_default, catalog_get, catalog_list, heisenberg, heisenberg_plus_abelian, CatalogParams,
};
use superschur_core::homology::{
    d2_matrix, d3_matrix, induced_multiplier_map, schur_multiplier, schur_multiplier_cochain_oracle,
};
use superschur_core::invariants::{
    check_derived_bound, check_maximal_class_bounds, s_offset, t_invariant, universal_bound,
    InvariantReport,
};
use superschur_core::linalg::{frac, q};
use superschur_core::random::{random_rebasis, rng, seed_from_env};
use superschur_core::{GradedSubspace, LieSuperalgebra};

type Check = Result<(), String>;
type Criterion = (&'static str, Box<dyn Fn() -> Check>);

const TRIALS: usize = 20;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn get(key: &str) -> LieSuperalgebra {
    catalog_get(key, &CatalogParams::default()).expect("catalog entry builds")
}

fn entries() -> Vec<LieSuperalgebra> {
    catalog_list().iter().filter_map(catalog_default).collect()
}

fn dual(l: &LieSuperalgebra) -> Result<(usize, usize), String> {
    let chain = schur_multiplier(l).map_err(|e| e.to_string())?.dims();
    let oracle = schur_multiplier_cochain_oracle(l).map_err(|e| e.to_string())?;
    ensure(chain == oracle, || {
        format!("{}: chain {chain:?} vs oracle {oracle:?}", l.name())
    })?;
    Ok(chain)
}

fn anchors() -> Check {
    for key in ["L12_3", "D15A11_4"] {
        let d = dual(&get(key))?;
        ensure(d == (1, 1), || format!("{key}: A({}|{})", d.0, d.1))?;
    }
    Ok(())
}

fn abelian_law() -> Check {
    for total in 1..=6 {
        for m in 0..=total {
            let l = LieSuperalgebra::abelian(m, total - m);
            let d = dual(&l)?;
            ensure((d.0 + d.1) as i64 == universal_bound(m, total - m), || {
                l.name().to_string()
            })?;
            ensure(t_invariant(&l).unwrap() == 0, || {
                format!("{} has t != 0", l.name())
            })?;
        }
    }
    for l in entries().iter().filter(|l| !l.is_abelian()) {
        ensure(t_invariant(l).unwrap() > 0, || {
            format!("{} has t <= 0", l.name())
        })?;
    }
    Ok(())
}

fn derived_bound_equality() -> Check {
    for (m, n) in [(3, 0), (4, 1), (5, 2)] {
        let l = heisenberg_plus_abelian(m, n).map_err(|e| e.to_string())?;
        let d = dual(&l)?;
        let target = (m + n - 1) * (m + n - 2) / 2 + n + 1;
        ensure(d.0 + d.1 == target, || {
            format!("({m}|{n}): dim {} vs {target}", d.0 + d.1)
        })?;
        let v =
            check_derived_bound(&l, &schur_multiplier(&l).unwrap()).map_err(|e| e.to_string())?;
        ensure(v.equality == Some(true), || {
            format!("({m}|{n}): equality not detected")
        })?;
    }
    let h01 = get("H01");
    let v =
        check_derived_bound(&h01, &schur_multiplier(&h01).unwrap()).map_err(|e| e.to_string())?;
    ensure(v.bound.holds() && v.equality == Some(false), || {
        "H(0,1) is not strict".into()
    })
}

fn identities(seed: u64) -> Check {
    let mut rng = rng(seed);
    for l in entries() {
        let r = InvariantReport::compute(&l).map_err(|e| e.to_string())?;
        if let Some(s) = r.s {
            let (m, n) = l.dims();
            ensure(r.t - s == (m + n) as i64 - 2, || {
                format!("{}: t - s = {}", l.name(), r.t - s)
            })?;
        }
        dual(&l)?;
        for _ in 0..TRIALS {
            let k = random_rebasis(&mut rng, &l);
            let d3 = d3_matrix(&k).map_err(|e| e.to_string())?;
            ensure(d2_matrix(&k).mul(&d3).is_zero(), || {
                format!("{}: d2 d3 != 0", l.name())
            })?;
            dual(&k)?;
        }
    }
    Ok(())
}

fn max_class_bounds() -> Check {
    let mut tested = 0;
    let in_scope = |l: &&LieSuperalgebra| {
        l.dims().1 >= 1 && l.is_nilpotent() && l.is_maximal_class() && !l.is_abelian()
    };
    for l in entries().iter().filter(in_scope) {
        let v = check_maximal_class_bounds(l, &schur_multiplier(l).unwrap())
            .map_err(|e| e.to_string())?;
        for c in v.checks() {
            ensure(c.holds(), || format!("{}: {c}", l.name()))?;
        }
        tested += 1;
    }
    ensure(tested >= 14, || {
        format!("only {tested} maximal-class entries")
    })
}

fn basis_invariance(seed: u64) -> Check {
    let run = |seed| -> Result<Vec<(usize, usize)>, String> {
        let mut rng = rng(seed);
        let mut out = Vec::new();
        for l in entries() {
            let base = dual(&l)?;
            for _ in 0..TRIALS {
                let d = dual(&random_rebasis(&mut rng, &l))?;
                ensure(d == base, || format!("{}: {base:?} became {d:?}", l.name()))?;
                out.push(d);
            }
        }
        Ok(out)
    };
    let first = run(seed)?;
    ensure(first == run(seed)?, || {
        "same seed gave different results".into()
    })
}

fn verify_csv(dir: &std::path::Path) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_superschur"))
        .args(["verify-paper", "--out"])
        .arg(dir)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.code() == Some(0), || {
        format!("verify-paper exit {:?}", out.status.code())
    })?;
    std::fs::read_to_string(dir.join("report.csv")).map_err(|e| e.to_string())
}

fn reproduction_report() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let csv = verify_csv(dir.path())?;
    let mut lines = csv.lines();
    let header: Vec<&str> = lines.next().unwrap_or_default().split(',').collect();
    let rows: Vec<HashMap<&str, &str>> = lines
        .map(|l| header.iter().copied().zip(l.split(',')).collect())
        .collect();
    let by_key: HashMap<&str, &HashMap<&str, &str>> = rows.iter().map(|r| (r["key"], r)).collect();

    for e in catalog_list().iter().filter(|e| e.tabulated) {
        ensure(by_key.contains_key(e.key), || {
            format!("no row for {}", e.key)
        })?;
    }
    for r in &rows {
        if r["claimed_dim"].is_empty() {
            ensure(r["status"] == "UNTABULATED", || {
                format!("{}: untabulated row with status {}", r["key"], r["status"])
            })?;
            continue;
        }
        let (m, n, dim): (usize, usize, i64) = (
            r["m"].parse().unwrap(),
            r["n"].parse().unwrap(),
            r["claimed_dim"].parse().unwrap(),
        );
        let bucket: i64 = r["s_claimed"].parse().unwrap();
        ensure(bucket == s_offset(m, n) - dim, || {
            format!("{}: listed s {bucket} is inconsistent", r["key"])
        })?;
    }
    for key in [
        "L12_1", "L12_3", "L13_5", "L22_10", "L22_11", "D15A11_2", "D15A11_4",
    ] {
        ensure(by_key[key]["status"] == "MATCH", || {
            format!("{key} is {}", by_key[key]["status"])
        })?;
    }
    let p1 = dual(&catalog_get("L22_11", &CatalogParams::with_p(q(1))).unwrap())?;
    ensure(p1 == (1, 0), || "L22_11 at p = 1".into())?;
    for r in rows.iter().filter(|r| r["status"] == "MISMATCH") {
        ensure(
            !r["claimed_dim"].is_empty() && !r["computed_dim"].is_empty(),
            || format!("{}: missing values", r["key"]),
        )?;
        let d = dual(&get(r["key"]))?;
        ensure(
            d.0.to_string() == r["computed_even"] && d.1.to_string() == r["computed_odd"],
            || format!("{}: report disagrees with recomputation", r["key"]),
        )?;
    }
    Ok(())
}

fn dimension_law() -> Check {
    for l in entries() {
        let derived = l.derived_subalgebra();
        for x in l.center().basis() {
            let line = GradedSubspace::graded_hull(&l, [x]);
            let map = induced_multiplier_map(&l, &line).map_err(|e| e.to_string())?;
            let meet = line.intersection_dims(&derived);
            let meet = (meet.0 + meet.1) as i64;
            if map.injective {
                let gap = map.target.total() as i64 - map.source.total() as i64;
                ensure(gap == meet, || format!("{}: {gap} vs {meet}", l.name()))?;
            } else {
                ensure(map.kernel_dim > 0, || {
                    format!("{}: non-injective with zero kernel", l.name())
                })?;
            }
        }
    }
    let h = heisenberg();
    let e3 = GradedSubspace::graded_hull(&h, h.center().basis());
    let map = induced_multiplier_map(&h, &e3).map_err(|e| e.to_string())?;
    ensure(!map.injective, || {
        "H(1,0) -> H(1,0)/<e3> is injective".into()
    })
}

fn catalog_audit() -> Check {
    for e in catalog_list().iter().filter(|e| e.tabulated) {
        let l = get(e.key);
        ensure(l.validate().is_valid(), || {
            format!("{} fails the axioms", e.key)
        })?;
        ensure(l.is_nilpotent(), || format!("{} not nilpotent", e.key))?;
        ensure(!l.is_abelian(), || format!("{} abelian", e.key))?;
        ensure(l.is_maximal_class(), || {
            format!("{} not maximal class", e.key)
        })?;
    }
    ensure(!get("L31_1").is_nilpotent(), || "L31_1 not flagged".into())?;
    for p in [q(0), q(-1), frac(-1, 2)] {
        for key in ["L22_11", "L22_12"] {
            ensure(
                catalog_get(key, &CatalogParams::with_p(p.clone())).is_err(),
                || format!("{key} accepted p = {p}"),
            )?;
        }
    }
    Ok(())
}

fn determinism() -> Check {
    let a = tempfile::tempdir().map_err(|e| e.to_string())?;
    let b = tempfile::tempdir().map_err(|e| e.to_string())?;
    ensure(verify_csv(a.path())? == verify_csv(b.path())?, || {
        "CSV bodies differ".into()
    })
}

fn main() -> ExitCode {
    let seed = seed_from_env();
    println!("acceptance (seed {seed})");
    let criteria: [Criterion; 10] = [
        ("anchor multipliers", Box::new(anchors)),
        ("abelian law", Box::new(abelian_law)),
        (
            "derived-bound equality family",
            Box::new(derived_bound_equality),
        ),
        ("identity suite", Box::new(move || identities(seed))),
        ("maximal-class bounds", Box::new(max_class_bounds)),
        (
            "basis-change invariance",
            Box::new(move || basis_invariance(seed)),
        ),
        ("reproduction report", Box::new(reproduction_report)),
        ("central-line dimension law", Box::new(dimension_law)),
        ("catalog audit", Box::new(catalog_audit)),
        ("determinism", Box::new(determinism)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("criterion {:>2} {name}: PASS", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({why})", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
