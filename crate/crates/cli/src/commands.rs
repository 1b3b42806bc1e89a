use superschur_core::analysis::{
    capability_report, classify_maximal_class, derived_equals_multiplier, Fingerprint,
};
use superschur_core::catalog::{
    catalog_entry, catalog_get, catalog_list, CatalogParams, ParameterKind,
};
use superschur_core::homology::{
    schur_multiplier, schur_multiplier_cochain_oracle, MultiplierResult,
};
use superschur_core::invariants::InvariantReport;
use superschur_core::linalg::{parse_scalar, zero_vec};
use superschur_core::{LieSuperalgebra, Parity, Scalar};

use crate::file::AlgebraFile;
use crate::{Failure, Outcome};

fn dims(d: (usize, usize)) -> String {
    format!("({}|{})", d.0, d.1)
}

fn lines(v: Vec<String>) -> String {
    let mut s = v.join("\n");
    s.push('\n');
    s
}

pub fn require_valid(algebra: &LieSuperalgebra) -> Result<(), Failure> {
    let report = algebra.validate();
    if report.is_valid() {
        return Ok(());
    }
    let mut msg = vec![format!("{} fails the superalgebra axioms", algebra.name())];
    msg.extend(report.describe(algebra));
    Err(Failure::Axioms(msg.join("\n")))
}

/// Chain-engine multiplier, confirmed by the cochain oracle.
pub fn checked_multiplier(algebra: &LieSuperalgebra) -> Result<MultiplierResult, Failure> {
    let mult = schur_multiplier(algebra)?;
    let oracle = schur_multiplier_cochain_oracle(algebra)?;
    if mult.dims() != oracle {
        return Err(Failure::Engines(format!(
            "{}: chain engine {} but cochain oracle {}",
            algebra.name(),
            dims(mult.dims()),
            dims(oracle)
        )));
    }
    Ok(mult)
}

pub fn validate(algebra: &LieSuperalgebra) -> Outcome {
    let report = algebra.validate();
    let mut out = vec![format!("{}: dims {}", algebra.name(), dims(algebra.dims()))];
    out.extend(report.describe(algebra));
    let ok = report.is_valid();
    out.push(if ok { "valid".into() } else { "INVALID".into() });
    Outcome {
        text: lines(out),
        code: if ok { 0 } else { 1 },
    }
}

pub fn info(algebra: &LieSuperalgebra) -> Result<Outcome, Failure> {
    require_valid(algebra)?;
    let series = algebra.lower_central_series();
    let terms: Vec<String> = series.term_dims().into_iter().map(dims).collect();
    let class = match series.class() {
        Some(c) => format!("nilpotent, class {c}"),
        None => "not nilpotent".into(),
    };
    Ok(Outcome::ok(lines(vec![
        format!("{}: dims {}", algebra.name(), dims(algebra.dims())),
        format!("L²: {}", dims(algebra.derived_subalgebra().dims())),
        format!("lower central series: {}", terms.join(" > ")),
        format!("class: {class}"),
        format!("center: {}", dims(algebra.center().dims())),
        format!(
            "[L1,L1]: {}",
            if algebra.is_trivial_ls() {
                "zero (trivial)"
            } else {
                "nonzero (non-trivial)"
            }
        ),
        format!("maximal class: {}", algebra.is_maximal_class()),
    ])))
}

pub fn multiplier(algebra: &LieSuperalgebra, representatives: bool) -> Result<Outcome, Failure> {
    require_valid(algebra)?;
    let mult = checked_multiplier(algebra)?;
    let mut out = vec![
        format!("M({}) = {}", algebra.name(), mult),
        format!(
            "chain engine: {}, cochain oracle: {}",
            dims(mult.dims()),
            dims(mult.dims())
        ),
    ];
    if representatives {
        for parity in [Parity::Odd, Parity::Even] {
            let reps: Vec<String> = mult
                .describe(algebra)
                .into_iter()
                .filter(|(p, _)| *p == parity)
                .map(|(_, s)| s)
                .collect();
            if !reps.is_empty() {
                out.push(format!("{parity}: {}", reps.join(", ")));
            }
        }
    }
    Ok(Outcome::ok(lines(out)))
}

pub fn invariants(algebra: &LieSuperalgebra) -> Result<Outcome, Failure> {
    require_valid(algebra)?;
    let mult = checked_multiplier(algebra)?;
    let r = InvariantReport::with_multiplier(algebra, &mult)?;
    let mut out = vec![
        format!(
            "{}: dims {}, L² {}",
            algebra.name(),
            dims(r.dims),
            dims(r.derived_dims)
        ),
        format!("M(L) = {mult} (dim {})", mult.total()),
        format!("t(L) = {}", r.t),
        match r.s {
            Some(s) => format!("s(L) = {s}"),
            None if r.abelian => "s(L): not applicable (abelian)".into(),
            None => "s(L): not applicable (not nilpotent)".into(),
        },
    ];
    out.extend(r.checks().iter().map(|c| c.to_string()));
    if r.general.equality {
        out.push("universal bound attained (L abelian)".into());
    }
    if let Some(d) = &r.derived_bound {
        if d.equality == Some(true) {
            out.push(format!(
                "derived bound equality case: attained; L is {}of the form H(1,0) + A(m-3|n)",
                if d.heisenberg_form == Some(true) {
                    ""
                } else {
                    "NOT "
                }
            ));
        } else if d.equality == Some(false) {
            out.push("derived bound: strict inequality".into());
        }
    }
    if let Some(note) = r.nonvanishing.as_ref().and_then(|n| n.note.as_ref()) {
        out.push(format!("note: {note}"));
    }
    Ok(Outcome {
        text: lines(out),
        code: if r.all_hold() { 0 } else { 1 },
    })
}

/// Parses `name=coeff,name=coeff` into a coordinate vector.
pub fn parse_candidate(algebra: &LieSuperalgebra, text: &str) -> Result<Vec<Scalar>, Failure> {
    let mut v = zero_vec(algebra.dim());
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (name, coeff) = match part.split_once('=') {
            Some((n, c)) => (
                n.trim(),
                parse_scalar(c.trim()).map_err(|e| Failure::Parse(format!("{part}: {e}")))?,
            ),
            None => (part, Scalar::from_integer(1.into())),
        };
        let k = algebra
            .index_of(name)
            .ok_or_else(|| Failure::Parse(format!("candidate: unknown basis name {name:?}")))?;
        v[k] += coeff;
    }
    Ok(v)
}

pub fn capability(algebra: &LieSuperalgebra, candidates: &[String]) -> Result<Outcome, Failure> {
    require_valid(algebra)?;
    let extra = candidates
        .iter()
        .map(|c| parse_candidate(algebra, c))
        .collect::<Result<Vec<_>, _>>()?;
    let report = capability_report(algebra, &extra)?;
    let mut out = vec![format!(
        "{}: center {}",
        algebra.name(),
        dims(report.center_dims)
    )];
    for c in &report.candidates {
        let m = &c.map;
        let mut line = format!(
            "x = {} ({}): M(L) {} -> M(L/<x>) {}, rank {}, kernel {}, ",
            algebra.format_vector(&c.vector),
            c.parity,
            m.source,
            m.target,
            m.rank,
            m.kernel_dim
        );
        if c.in_epicenter {
            line.push_str("injective, x in Z*(L)");
            if let Some(law) = c.dimension_law {
                line.push_str(&format!(
                    "; dim M(L/<x>) - dim M(L) = {} - {} vs dim(<x> ∩ L²) = {}: {}",
                    m.target.total(),
                    m.source.total(),
                    m.n_cap_derived_dim(),
                    if law { "holds" } else { "FAILS" }
                ));
            }
        } else {
            line.push_str("not injective");
        }
        out.push(line);
    }
    let tag = if report.exhaustive {
        " (exhaustive)"
    } else {
        ""
    };
    out.push(format!("conclusion: {}{tag}", report.conclusion));
    out.push(report.note.clone());
    Ok(Outcome::ok(lines(out)))
}

pub fn classify(algebra: &LieSuperalgebra) -> Result<Outcome, Failure> {
    require_valid(algebra)?;
    let mult = checked_multiplier(algebra)?;
    let c = classify_maximal_class(algebra)?;
    let display = |keys: &[&str]| -> String {
        if keys.is_empty() {
            return "none".into();
        }
        keys.iter()
            .map(|k| catalog_entry(k).map(|e| e.display).unwrap_or(k))
            .collect::<Vec<_>>()
            .join(", ")
    };
    let p1 = derived_equals_multiplier(algebra, None)?;
    let mut out = vec![
        format!(
            "{}: {}",
            algebra.name(),
            Fingerprint::with_multiplier(algebra, &mult)
        ),
        format!("s(L) = {}", c.s),
        format!("listed under s = {}: {}", c.s, display(&c.bucket)),
        format!("fingerprint matches: {}", display(&c.fingerprint_matches)),
        format!("dim L² = dim M(L) = m+n-2: {}", p1.computed),
    ];
    if p1.computed {
        out.push(format!(
            "candidates for that case: {}",
            display(&p1.candidates)
        ));
    }
    out.extend(c.notes);
    Ok(Outcome::ok(lines(out)))
}

pub fn catalog_listing() -> Outcome {
    let mut out = Vec::new();
    for e in catalog_list() {
        let d = e.dims.map_or("(m|n)".to_string(), dims);
        let claim = match e.claim {
            Some(c) => format!(
                "claim A({}|{}) dim {}, s = {}",
                c.even, c.odd, c.dim, c.s_bucket
            ),
            None => "no claim".into(),
        };
        let param = match e.parameter {
            ParameterKind::None => "",
            ParameterKind::Positive => " --p",
            ParameterKind::Dims => " --m --n",
        };
        let mut line = format!(
            "{:<10} {:<20} {:<6} {:<26} {}{}",
            e.key, e.display, d, claim, e.group, param
        );
        if !e.relations.is_empty() {
            line.push_str(": ");
            line.push_str(e.relations);
        }
        out.push(line);
    }
    Outcome::ok(lines(out))
}

pub fn catalog_params(
    p: Option<&str>,
    m: Option<usize>,
    n: Option<usize>,
) -> Result<CatalogParams, Failure> {
    let p = p
        .map(|s| parse_scalar(s).map_err(|e| Failure::Parse(format!("--p: {e}"))))
        .transpose()?;
    Ok(CatalogParams { p, m, n })
}

pub fn catalog_emit(key: &str, params: &CatalogParams) -> Result<String, Failure> {
    let algebra = catalog_get(key, params)?;
    Ok(AlgebraFile::from_algebra(&algebra).to_json())
}
