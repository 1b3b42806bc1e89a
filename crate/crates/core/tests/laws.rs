use superschur_core::analysis::{capability_report, CapabilityConclusion};
use superschur_core::catalog::{
    catalog_default, catalog_get, catalog_list, heisenberg, heisenberg_plus_abelian, CatalogParams,
};
use superschur_core::homology::{induced_multiplier_map, schur_multiplier};
use superschur_core::invariants::{
    check_derived_bound, t_invariant, universal_bound, InvariantReport,
};
use superschur_core::{GradedSubspace, LieSuperalgebra};

#[test]
fn abelian_multiplier_meets_universal_bound() {
    for total in 1..=6 {
        for m in 0..=total {
            let l = LieSuperalgebra::abelian(m, total - m);
            let dim = schur_multiplier(&l).unwrap().total() as i64;
            assert_eq!(dim, universal_bound(m, total - m));
            assert_eq!(t_invariant(&l).unwrap(), 0);
        }
    }
}

#[test]
fn non_abelian_catalog_entries_have_positive_t() {
    for l in catalog_list().iter().filter_map(catalog_default) {
        if !l.is_abelian() {
            assert!(t_invariant(&l).unwrap() > 0, "{}", l.name());
        }
    }
}

#[test]
fn heisenberg_family_attains_derived_bound() {
    for (m, n) in [(3, 0), (4, 1), (5, 2)] {
        let l = heisenberg_plus_abelian(m, n).unwrap();
        let v = check_derived_bound(&l, &schur_multiplier(&l).unwrap()).unwrap();
        assert!(v.bound.holds());
        assert_eq!(v.equality, Some(true), "({m}|{n})");
    }
    let h01 = catalog_get("H01", &CatalogParams::default()).unwrap();
    let v = check_derived_bound(&h01, &schur_multiplier(&h01).unwrap()).unwrap();
    assert_eq!(v.equality, Some(false));
    assert!(v.bound.holds());
}

#[test]
fn every_catalog_entry_satisfies_t_minus_s() {
    for l in catalog_list().iter().filter_map(catalog_default) {
        let r = InvariantReport::compute(&l).unwrap();
        assert!(r.all_hold(), "{}", l.name());
        if let Some(s) = r.s {
            let (m, n) = l.dims();
            assert_eq!(r.t - s, m as i64 + n as i64 - 2);
        }
    }
}

#[test]
fn central_lines_obey_dimension_law_and_exactness() {
    for l in catalog_list().iter().filter_map(catalog_default) {
        let derived = l.derived_subalgebra();
        for x in l.center().basis() {
            let line = GradedSubspace::graded_hull(&l, [x]);
            let map = induced_multiplier_map(&l, &line).unwrap();
            let meet = line.intersection_dims(&derived);
            assert_eq!(map.coker_dim, meet.0 + meet.1, "{}", l.name());
            if map.injective {
                assert_eq!(map.target.total() - map.source.total(), meet.0 + meet.1);
            } else {
                assert!(map.kernel_dim > 0);
            }
        }
    }
}

#[test]
fn heisenberg_center_line_is_not_injective() {
    let h = heisenberg();
    let r = capability_report(&h, &[]).unwrap();
    assert!(!r.candidates[0].map.injective);
    assert_eq!(r.candidates[0].map.source.total(), 2);
    assert_eq!(r.candidates[0].map.target.total(), 1);
    assert_eq!(r.conclusion, CapabilityConclusion::NoObstructionFound);
}

#[test]
fn large_center_is_not_exhaustive() {
    let l = catalog_get("3A11+2A", &CatalogParams::default()).unwrap();
    let r = capability_report(&l, &[]).unwrap();
    assert_eq!(r.center_dims.0, 3);
    assert!(!r.exhaustive);
}

#[test]
fn tabulated_entries_pass_audit() {
    for e in catalog_list().iter().filter(|e| e.tabulated) {
        let l = catalog_default(e).unwrap();
        assert!(l.validate().is_valid(), "{}", e.key);
        assert!(
            l.is_nilpotent() && !l.is_abelian() && l.is_maximal_class(),
            "{}",
            e.key
        );
    }
    let l31 = catalog_get("L31_1", &CatalogParams::default()).unwrap();
    assert!(!l31.is_nilpotent());
}
