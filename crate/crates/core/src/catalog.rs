//! Named algebras with their published multiplier data.
//!
//! Odd basis elements use Greek letters and even ones Latin letters. The
//! `claim` attached to an entry is the tabulated value exactly as published;
//! nothing in this module computes it.

use std::collections::BTreeMap;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::homology::{schur_multiplier, schur_multiplier_cochain_oracle};
use crate::linalg::Scalar;
use crate::superalg::LieSuperalgebra;

/// Published multiplier data for one entry.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub dim: usize,
    pub even: usize,
    pub odd: usize,
    /// Value of `s(L)` under which the entry is listed in the summary.
    pub s_bucket: i64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ParameterKind {
    None,
    /// A rational `p > 0`.
    Positive,
    /// Dimensions `m`, `n`.
    Dims,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub key: &'static str,
    pub display: &'static str,
    /// `None` when the dimensions depend on parameters.
    pub dims: Option<(usize, usize)>,
    pub parameter: ParameterKind,
    pub claim: Option<Claim>,
    /// Whether the entry belongs to the published maximal-class list.
    pub tabulated: bool,
    pub group: &'static str,
    pub relations: &'static str,
}

#[derive(Clone, Debug, Default)]
pub struct CatalogParams {
    pub p: Option<Scalar>,
    pub m: Option<usize>,
    pub n: Option<usize>,
}

impl CatalogParams {
    pub fn with_p(p: Scalar) -> Self {
        CatalogParams {
            p: Some(p),
            ..Default::default()
        }
    }

    pub fn with_dims(m: usize, n: usize) -> Self {
        CatalogParams {
            m: Some(m),
            n: Some(n),
            ..Default::default()
        }
    }
}

const fn claim(dim: usize, even: usize, odd: usize, s_bucket: i64) -> Option<Claim> {
    Some(Claim {
        dim,
        even,
        odd,
        s_bucket,
    })
}

const fn table(
    key: &'static str,
    display: &'static str,
    dims: (usize, usize),
    parameter: ParameterKind,
    claim: Option<Claim>,
    group: &'static str,
    relations: &'static str,
) -> CatalogEntry {
    CatalogEntry {
        key,
        display,
        dims: Some(dims),
        parameter,
        claim,
        tabulated: true,
        group,
        relations,
    }
}

/// Every entry, in a fixed order.
pub fn catalog_list() -> Vec<CatalogEntry> {
    use ParameterKind::*;
    vec![
        table(
            "L12_1",
            "L_{1,2}^{(1)}",
            (1, 2),
            None,
            claim(2, 2, 0, 2),
            "(1|2) non-trivial",
            "[α,α]=a, [β,β]=a",
        ),
        table(
            "L12_2",
            "L_{1,2}^{(2)}",
            (1, 2),
            None,
            claim(2, 2, 0, 2),
            "(1|2) non-trivial",
            "[α,α]=a, [β,β]=-a",
        ),
        table(
            "L12_3",
            "L_{1,2}^{(3)}",
            (1, 2),
            None,
            claim(2, 1, 1, 2),
            "(1|2) trivial",
            "[a,β]=α",
        ),
        table(
            "L13_5",
            "L_{1,3}^{(5)}",
            (1, 3),
            None,
            claim(3, 2, 1, 4),
            "(1|3) trivial",
            "[a,β]=α, [a,γ]=β",
        ),
        table(
            "L22_9",
            "L_{2,2}^{(9)}",
            (2, 2),
            None,
            claim(2, 1, 1, 4),
            "(2|2) non-trivial",
            "[α,α]=a, [β,β]=b",
        ),
        table(
            "L22_10",
            "L_{2,2}^{(10)}",
            (2, 2),
            None,
            claim(1, 1, 0, 5),
            "(2|2) non-trivial",
            "[α,α]=a, [β,β]=b, [α,β]=a",
        ),
        table(
            "L22_11",
            "L_{2,2}^{(11)}",
            (2, 2),
            Positive,
            claim(1, 1, 0, 5),
            "(2|2) non-trivial",
            "[α,α]=a, [β,β]=b, [α,β]=p(a+b), p>0",
        ),
        table(
            "L22_12",
            "L_{2,2}^{(12)}",
            (2, 2),
            Positive,
            claim(1, 1, 0, 5),
            "(2|2) non-trivial",
            "[α,α]=a, [β,β]=b, [α,β]=p(a-b), p>0",
        ),
        table(
            "E22",
            "E^{22}",
            (1, 4),
            None,
            claim(6, 5, 1, 5),
            "(1|4) trivial",
            "[a,α]=β, [a,β]=γ, [a,γ]=δ",
        ),
        table(
            "3A11+2A",
            "3A_{1,1}+2A",
            (3, 2),
            None,
            claim(3, 1, 2, 6),
            "(3|2) non-trivial",
            "[α,α]=a, [β,β]=b, [α,β]=c",
        ),
        table(
            "D15A11_1",
            "(D^{15}+A_{1,1})^1",
            (2, 3),
            None,
            claim(1, 0, 1, 9),
            "(2|3) non-trivial",
            "[a,β]=α, [a,γ]=β, [γ,γ]=b",
        ),
        table(
            "D15A11_2",
            "(D^{15}+A_{1,1})^2",
            (2, 3),
            None,
            claim(2, 1, 1, 8),
            "(2|3) non-trivial",
            "[a,β]=α, [a,γ]=β, [β,β]=b, [α,γ]=-b",
        ),
        table(
            "D15A11_3",
            "(D^{15}+A_{1,1})^3",
            (2, 3),
            None,
            claim(3, 2, 1, 7),
            "(2|3) non-trivial",
            "[a,β]=α, [a,γ]=β, [β,β]=b, [γ,γ]=b, [α,γ]=-b",
        ),
        table(
            "D15A11_4",
            "(D^{15}+A_{1,1})^4",
            (2, 3),
            None,
            claim(2, 1, 1, 8),
            "(2|3) non-trivial",
            "[a,β]=α, [a,γ]=β, [β,β]=b, [γ,γ]=-b, [α,γ]=-b",
        ),
        CatalogEntry {
            key: "L31_1",
            display: "L_{3,1}^{(1)}",
            dims: Some((3, 1)),
            parameter: None,
            claim: Option::None,
            tabulated: false,
            group: "(3|1) used in the capability argument",
            relations: "[b,c]=a, [b,α]=α",
        },
        CatalogEntry {
            key: "H10",
            display: "H(1,0)",
            dims: Some((3, 0)),
            parameter: None,
            claim: Option::None,
            tabulated: false,
            group: "special Heisenberg",
            relations: "[e1,e2]=e3",
        },
        CatalogEntry {
            key: "H01",
            display: "H(0,1)",
            dims: Some((1, 1)),
            parameter: None,
            claim: Option::None,
            tabulated: false,
            group: "odd Heisenberg",
            relations: "[α,α]=a",
        },
        CatalogEntry {
            key: "A",
            display: "A(m|n)",
            dims: Option::None,
            parameter: Dims,
            claim: Option::None,
            tabulated: false,
            group: "abelian",
            relations: "",
        },
        CatalogEntry {
            key: "H10+A",
            display: "H(1,0)⊕A(m-3|n)",
            dims: Option::None,
            parameter: Dims,
            claim: Option::None,
            tabulated: false,
            group: "derived-bound equality family",
            relations: "[e1,e2]=e3",
        },
    ]
}

pub fn catalog_entry(key: &str) -> Result<CatalogEntry> {
    catalog_list()
        .into_iter()
        .find(|e| e.key == key || e.display == key)
        .ok_or_else(|| Error::UnknownKey(key.to_string()))
}

/// Entries of the published maximal-class list, with their claims.
pub fn tabulated_entries() -> Vec<CatalogEntry> {
    catalog_list().into_iter().filter(|e| e.tabulated).collect()
}

fn positive_p(params: &CatalogParams) -> Result<Scalar> {
    let p = params.p.clone().unwrap_or_else(Scalar::one);
    if !p.is_positive() {
        return Err(Error::InvalidParameter(format!(
            "p must satisfy p>0, got {p}"
        )));
    }
    Ok(p)
}

fn dims_param(params: &CatalogParams, key: &str) -> Result<(usize, usize)> {
    match (params.m, params.n) {
        (Some(m), Some(n)) => Ok((m, n)),
        _ => Err(Error::InvalidParameter(format!(
            "{key} requires both m and n"
        ))),
    }
}

pub fn heisenberg() -> LieSuperalgebra {
    LieSuperalgebra::builder("H(1,0)")
        .even(&["e1", "e2", "e3"])
        .bracket("e1", "e2", &[("e3", 1)])
        .build()
        .expect("static definition")
}

/// `H(1,0) ⊕ A(m-3|n)`; needs `m >= 3`.
pub fn heisenberg_plus_abelian(m: usize, n: usize) -> Result<LieSuperalgebra> {
    if m < 3 {
        return Err(Error::InvalidParameter(format!(
            "H(1,0)⊕A(m-3|n) requires m >= 3, got m = {m}"
        )));
    }
    let sum = heisenberg().direct_sum(&LieSuperalgebra::abelian(m - 3, n));
    Ok(sum.with_name(format!("H(1,0)⊕A({}|{n})", m - 3)))
}

fn d15(display: &str, extra: &[(&str, &str, i64)]) -> Result<LieSuperalgebra> {
    let mut b = LieSuperalgebra::builder(display)
        .even(&["a", "b"])
        .odd(&["α", "β", "γ"])
        .bracket("a", "β", &[("α", 1)])
        .bracket("a", "γ", &[("β", 1)]);
    for &(l, r, c) in extra {
        b = b.bracket(l, r, &[("b", c)]);
    }
    b.build()
}

fn l22_family(display: &str, p: &Scalar, sign_b: i64) -> Result<LieSuperalgebra> {
    LieSuperalgebra::builder(display)
        .even(&["a", "b"])
        .odd(&["α", "β"])
        .bracket("α", "α", &[("a", 1)])
        .bracket("β", "β", &[("b", 1)])
        .bracket_scalar(
            "α",
            "β",
            &[
                ("a", p.clone()),
                ("b", p * Scalar::from_integer(sign_b.into())),
            ],
        )
        .build()
}

/// Builds an entry. `p` defaults to 1 for the `p`-families.
pub fn catalog_get(key: &str, params: &CatalogParams) -> Result<LieSuperalgebra> {
    let entry = catalog_entry(key)?;
    let name = entry.display;
    let odd12 = |rels: &[(&str, &str, &str, i64)]| -> Result<LieSuperalgebra> {
        let mut b = LieSuperalgebra::builder(name).even(&["a"]).odd(&["α", "β"]);
        for &(l, r, v, c) in rels {
            b = b.bracket(l, r, &[(v, c)]);
        }
        b.build()
    };
    match entry.key {
        "L12_1" => odd12(&[("α", "α", "a", 1), ("β", "β", "a", 1)]),
        "L12_2" => odd12(&[("α", "α", "a", 1), ("β", "β", "a", -1)]),
        "L12_3" => odd12(&[("a", "β", "α", 1)]),
        "L13_5" => LieSuperalgebra::builder(name)
            .even(&["a"])
            .odd(&["α", "β", "γ"])
            .bracket("a", "β", &[("α", 1)])
            .bracket("a", "γ", &[("β", 1)])
            .build(),
        "L22_9" => LieSuperalgebra::builder(name)
            .even(&["a", "b"])
            .odd(&["α", "β"])
            .bracket("α", "α", &[("a", 1)])
            .bracket("β", "β", &[("b", 1)])
            .build(),
        "L22_10" => LieSuperalgebra::builder(name)
            .even(&["a", "b"])
            .odd(&["α", "β"])
            .bracket("α", "α", &[("a", 1)])
            .bracket("β", "β", &[("b", 1)])
            .bracket("α", "β", &[("a", 1)])
            .build(),
        "L22_11" => l22_family(name, &positive_p(params)?, 1),
        "L22_12" => l22_family(name, &positive_p(params)?, -1),
        "E22" => LieSuperalgebra::builder(name)
            .even(&["a"])
            .odd(&["α", "β", "γ", "δ"])
            .bracket("a", "α", &[("β", 1)])
            .bracket("a", "β", &[("γ", 1)])
            .bracket("a", "γ", &[("δ", 1)])
            .build(),
        "3A11+2A" => LieSuperalgebra::builder(name)
            .even(&["a", "b", "c"])
            .odd(&["α", "β"])
            .bracket("α", "α", &[("a", 1)])
            .bracket("β", "β", &[("b", 1)])
            .bracket("α", "β", &[("c", 1)])
            .build(),
        "D15A11_1" => d15(name, &[("γ", "γ", 1)]),
        "D15A11_2" => d15(name, &[("β", "β", 1), ("α", "γ", -1)]),
        "D15A11_3" => d15(name, &[("β", "β", 1), ("γ", "γ", 1), ("α", "γ", -1)]),
        "D15A11_4" => d15(name, &[("β", "β", 1), ("γ", "γ", -1), ("α", "γ", -1)]),
        "L31_1" => LieSuperalgebra::builder(name)
            .even(&["a", "b", "c"])
            .odd(&["α"])
            .bracket("b", "c", &[("a", 1)])
            .bracket("b", "α", &[("α", 1)])
            .build(),
        "H10" => Ok(heisenberg()),
        "H01" => LieSuperalgebra::builder(name)
            .even(&["a"])
            .odd(&["α"])
            .bracket("α", "α", &[("a", 1)])
            .build(),
        "A" => {
            let (m, n) = dims_param(params, "A")?;
            if m + n == 0 {
                return Err(Error::InvalidParameter("A(m|n) requires m+n >= 1".into()));
            }
            Ok(LieSuperalgebra::abelian(m, n))
        }
        "H10+A" => {
            let (m, n) = dims_param(params, "H10+A")?;
            heisenberg_plus_abelian(m, n)
        }
        other => Err(Error::UnknownKey(other.to_string())),
    }
}

/// Builds an entry with default parameters; `None` for entries that need
/// explicit dimensions.
pub fn catalog_default(entry: &CatalogEntry) -> Option<LieSuperalgebra> {
    match entry.parameter {
        ParameterKind::Dims => None,
        _ => catalog_get(entry.key, &CatalogParams::default()).ok(),
    }
}

#[derive(Clone, Debug)]
pub struct ScanRow {
    pub p: Scalar,
    pub dims: (usize, usize),
    pub oracle_dims: (usize, usize),
    pub exceptional: bool,
}

/// Multiplier dims of a `p`-family over the given values. The generic value
/// is the most frequent result (ties broken by first occurrence); rows that
/// differ from it are flagged.
pub fn parameter_scan(key: &str, values: &[Scalar]) -> Result<Vec<ScanRow>> {
    let entry = catalog_entry(key)?;
    if entry.parameter != ParameterKind::Positive {
        return Err(Error::InvalidParameter(format!("{key} has no p parameter")));
    }
    let mut rows = Vec::new();
    for p in values {
        let l = catalog_get(key, &CatalogParams::with_p(p.clone()))?;
        let dims = schur_multiplier(&l)?.dims();
        let oracle_dims = schur_multiplier_cochain_oracle(&l)?;
        if dims != oracle_dims {
            return Err(Error::Internal(format!(
                "engines disagree for {key} at p={p}: chain {dims:?}, cochain {oracle_dims:?}"
            )));
        }
        rows.push(ScanRow {
            p: p.clone(),
            dims,
            oracle_dims,
            exceptional: false,
        });
    }
    let mut counts: BTreeMap<(usize, usize), (usize, usize)> = BTreeMap::new();
    for (idx, r) in rows.iter().enumerate() {
        let e = counts.entry(r.dims).or_insert((0, idx));
        e.0 += 1;
    }
    if let Some((&generic, _)) = counts
        .iter()
        .max_by(|a, b| a.1 .0.cmp(&b.1 .0).then(b.1 .1.cmp(&a.1 .1)))
    {
        for r in &mut rows {
            r.exceptional = r.dims != generic;
        }
    }
    Ok(rows)
}

/// `½(m+n-2)(m+n-1) + n + 1 - dim`, the `s` value a claimed dimension implies.
pub fn implied_s(dims: (usize, usize), multiplier_dim: usize) -> i64 {
    crate::invariants::s_offset(dims.0, dims.1) - multiplier_dim as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    #[test]
    fn nineteen_entries_with_unique_keys() {
        let list = catalog_list();
        assert_eq!(list.len(), 19);
        let mut keys: Vec<_> = list.iter().map(|e| e.key).collect();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), 19);
        assert_eq!(tabulated_entries().len(), 14);
    }

    #[test]
    fn claims_are_internally_consistent() {
        for e in tabulated_entries() {
            let c = e.claim.unwrap();
            assert_eq!(c.dim, c.even + c.odd, "{}", e.key);
            assert_eq!(implied_s(e.dims.unwrap(), c.dim), c.s_bucket, "{}", e.key);
        }
    }

    #[test]
    fn every_entry_builds_valid() {
        for e in catalog_list() {
            let l = match e.parameter {
                ParameterKind::Dims => catalog_get(e.key, &CatalogParams::with_dims(4, 2)).unwrap(),
                _ => catalog_default(&e).unwrap(),
            };
            assert!(l.validate().is_valid(), "{}", e.key);
            if let Some(d) = e.dims {
                assert_eq!(l.dims(), d, "{}", e.key);
            }
        }
    }

    #[test]
    fn p_family_brackets() {
        let l = catalog_get("L22_11", &CatalogParams::with_p(q(1))).unwrap();
        assert_eq!(l.structure_constant(2, 3), vec![q(1), q(1), q(0), q(0)]);
        let l = catalog_get("L22_12", &CatalogParams::with_p(q(2))).unwrap();
        assert_eq!(l.structure_constant(2, 3), vec![q(2), q(-2), q(0), q(0)]);
        for bad in [q(0), q(-1)] {
            let err = catalog_get("L22_11", &CatalogParams::with_p(bad)).unwrap_err();
            assert!(err.to_string().contains("p>0"));
        }
    }

    #[test]
    fn parameterized_and_named_lookups() {
        let a = catalog_get("A", &CatalogParams::with_dims(3, 2)).unwrap();
        assert_eq!(a.dims(), (3, 2));
        assert!(a.is_abelian());
        assert!(catalog_get("A", &CatalogParams::default()).is_err());
        assert!(catalog_get("H10+A", &CatalogParams::with_dims(2, 0)).is_err());
        assert!(matches!(
            catalog_get("nope", &CatalogParams::default()),
            Err(Error::UnknownKey(_))
        ));
        let l = catalog_get("L_{3,1}^{(1)}", &CatalogParams::default()).unwrap();
        assert_eq!(l.dims(), (3, 1));
    }

    #[test]
    fn scan_single_value_and_rejects_unparameterized() {
        let rows = parameter_scan("L22_11", &[q(1)]).unwrap();
        assert_eq!(rows.len(), 1);
        assert!(!rows[0].exceptional);
        assert!(parameter_scan("E22", &[q(1)]).is_err());
    }
}
