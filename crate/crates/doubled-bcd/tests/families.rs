use doubled_bcd::*;
use lie_core::{LieType, ThetaSet};

fn candidate_types(max_rank: usize) -> Vec<LieType> {
    let mut out = Vec::new();
    for r in 1..=max_rank {
        out.push(LieType::b(r));
        out.push(LieType::c(r));
        if r >= 3 {
            out.push(LieType::d(r));
        }
    }
    out
}

#[test]
fn table_of_properties() {
    let mut failures = Vec::new();
    let mut checked = 0;
    for spec in all_family_specs(4, 4) {
        let t = family_tableau(&spec).unwrap();
        assert_eq!(t.columns.iter().map(|c| c.height()).collect::<Vec<_>>(), spec.column_heights());
        for ty in candidate_types(spec.big + 3) {
            if !family_standard_for(&spec, &ty) {
                continue;
            }
            checked += 1;
            let rep = evaluate_tableau(&t, &ty, &ThetaSet::empty()).unwrap();
            let want = family_expected_syndrome(&spec, &ty);
            if !(rep.g_standard && rep.null && rep.syndrome == want) {
                failures.push(format!(
                    "{spec} in {ty}: young {} adm {} null {} syndrome {} expected {want}",
                    rep.young, rep.admissible, rep.null, rep.syndrome
                ));
            }
        }
    }
    assert!(checked > 100);
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn excluded_cases_fail() {
    // T[2k+1,2k+1] and T'[2k+1,2k+1] break the parity rule in D_{2k+1}
    for k in 1..=3 {
        let d = LieType::d(2 * k + 1);
        for spec in [FamilySpec::t_pair(2 * k + 1, 2 * k + 1), FamilySpec::t_pair_prime(2 * k + 1, 2 * k + 1)] {
            let t = family_tableau(&spec.unwrap()).unwrap();
            assert!(!evaluate_tableau(&t, &d, &ThetaSet::empty()).unwrap().young);
        }
    }
}
