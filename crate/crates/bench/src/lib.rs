//! Inputs shared by the benchmarks.

use superschur_core::catalog::{catalog_get, heisenberg_plus_abelian, CatalogParams};
use superschur_core::LieSuperalgebra;

/// Catalog algebras of increasing size plus two larger abelian ones.
pub fn fixtures() -> Vec<(String, LieSuperalgebra)> {
    let mut out: Vec<(String, LieSuperalgebra)> = ["L12_3", "L22_11", "E22", "D15A11_4"]
        .iter()
        .map(|k| {
            (
                k.to_string(),
                catalog_get(k, &CatalogParams::default()).expect("catalog key"),
            )
        })
        .collect();
    out.push((
        "H10+A(5|2)".into(),
        heisenberg_plus_abelian(5, 2).expect("m >= 3"),
    ));
    out.push(("A(3|3)".into(), LieSuperalgebra::abelian(3, 3)));
    out.push(("A(4|4)".into(), LieSuperalgebra::abelian(4, 4)));
    out
}
