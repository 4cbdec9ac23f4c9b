use std::collections::BTreeSet;

use lie_core::{classify_weight, theta_of, Family, LieType, RealForm, RootData, Weight};
use monoid::{
    additivity_check, decompose, m_table_membership, primitive_basis, primitive_labels, rows_for, sweep_weights,
    table3_membership, tableau_invariant_dim,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn classical(max_rank: usize) -> Vec<LieType> {
    let mut out = Vec::new();
    for r in 1..=max_rank {
        out.extend([LieType::a(r), LieType::b(r), LieType::c(r)]);
        if r >= 3 {
            out.push(LieType::d(r));
        }
    }
    out
}

#[test]
fn table3_agrees_with_table1() {
    let mut compared = 0;
    for ty in classical(7) {
        let weights = sweep_weights(ty, 2).unwrap();
        for form in RealForm::classical_forms_of(ty) {
            for w in &weights {
                let t1 = m_table_membership(&form, w).unwrap();
                if let Some(t3) = table3_membership(&form, w).unwrap() {
                    assert_eq!(t1.in_table, t3.in_table, "{form} {w}: {t1:?} vs {t3:?}");
                    compared += 1;
                }
            }
        }
    }
    assert!(compared > 2_000, "{compared}");
}

#[test]
fn basic_results() {
    for ty in classical(6) {
        let weights = sweep_weights(ty, 2).unwrap();
        for form in RealForm::classical_forms_of(ty) {
            let theta = theta_of(&form).unwrap();
            for w in &weights {
                let v = m_table_membership(&form, w).unwrap();
                let radical = classify_weight(ty, w).unwrap().radical;
                assert_eq!(v.failed_condition.is_some(), !v.in_table);
                if v.in_table {
                    assert!(radical, "{form} {w}");
                }
                if theta.is_empty() {
                    assert_eq!(v.in_table, radical, "quasi-split {form} {w}");
                }
                if theta.len() == ty.rank {
                    assert_eq!(v.in_table, w.is_zero(), "compact {form} {w}");
                }
            }
        }
        let compact = RealForm::Compact(ty);
        for w in &weights {
            assert_eq!(m_table_membership(&compact, w).unwrap().in_table, w.is_zero());
        }
    }
    for e in lie_core::ExceptionalForm::ALL {
        let f = RealForm::Exceptional(e);
        let ty = f.complexified().unwrap();
        for row in rows_for(ty.family) {
            let w: Weight = row.e_coords.parse().unwrap();
            assert!(m_table_membership(&f, &w).unwrap().in_table);
            assert!(!m_table_membership(&RealForm::Compact(ty), &w).unwrap().in_table);
        }
    }
}

/// Minimal nonzero radical points of a box, by brute force.
fn brute_basis(ty: LieType, side: i64) -> BTreeSet<Vec<i64>> {
    let rd = RootData::new(ty);
    let r = ty.rank;
    let mut pts = Vec::new();
    let total = (side + 1).pow(r as u32);
    for code in 1..total {
        let mut x = Vec::with_capacity(r);
        let mut c = code;
        for _ in 0..r {
            x.push(c % (side + 1));
            c /= side + 1;
        }
        let w = rd.from_int_labels(&x);
        if rd.root_coefficients(&w).iter().all(|c| c.is_integer()) {
            pts.push(x);
        }
    }
    let set: BTreeSet<Vec<i64>> = pts.iter().cloned().collect();
    pts.iter()
        .filter(|x| {
            !set.iter().any(|y| y != *x && y.iter().zip(x.iter()).all(|(a, b)| a <= b))
        })
        .cloned()
        .collect()
}

#[test]
fn basis_matches_brute_force_and_generates() {
    let mut tys = classical(4);
    tys.push(LieType::exceptional(Family::F4));
    tys.push(LieType::exceptional(Family::G2));
    for ty in tys {
        let basis = primitive_labels(ty).unwrap();
        let rd = RootData::new(ty);
        let side = rd.fundamental_orders().into_iter().max().unwrap() + 1;
        let side = side.min(if ty.rank >= 4 { 5 } else { 8 });
        let brute = brute_basis(ty, side);
        let got: BTreeSet<Vec<i64>> = basis.iter().filter(|b| b.iter().all(|&v| v <= side)).cloned().collect();
        assert_eq!(got, brute, "{ty}");
        for w in sweep_weights(ty, 3).unwrap_or_default() {
            let c = classify_weight(ty, &w).unwrap();
            if c.radical {
                let labels = monoid::labels_of(ty, &w).unwrap();
                let parts = decompose(&labels, &basis).unwrap_or_else(|| panic!("{ty} {w}"));
                let mut sum = vec![0; ty.rank];
                for k in parts {
                    sum.iter_mut().zip(&basis[k]).for_each(|(s, b)| *s += b);
                }
                assert_eq!(sum, labels);
            }
        }
    }
}

#[test]
fn exceptional_bases() {
    let f4 = primitive_basis(LieType::exceptional(Family::F4)).unwrap();
    let expected: BTreeSet<Weight> =
        ["1,1,0,0", "2,1,1,0", "3/2,1/2,1/2,1/2", "1,0,0,0"].iter().map(|s| s.parse().unwrap()).collect();
    assert_eq!(f4.elements.iter().cloned().collect::<BTreeSet<_>>(), expected);
    for (family, size) in [(Family::E6, 14), (Family::E7, 10), (Family::E8, 8)] {
        let ty = LieType::exceptional(family);
        let got: BTreeSet<Vec<i64>> = primitive_labels(ty).unwrap().into_iter().collect();
        let rows: BTreeSet<Vec<i64>> = rows_for(family)
            .map(|r| r.labels.split(',').map(|x| x.parse().unwrap()).collect())
            .collect();
        assert_eq!(got.len(), size);
        assert_eq!(got, rows, "{ty}");
        let rd = RootData::new(ty);
        for r in rows_for(family) {
            let labels: Vec<i64> = r.labels.split(',').map(|x| x.parse().unwrap()).collect();
            assert_eq!(rd.from_int_labels(&labels), r.e_coords.parse::<Weight>().unwrap(), "{}", r.labels);
        }
    }
}

#[test]
fn additivity_on_random_pairs() {
    let mut rng = StdRng::seed_from_u64(5);
    for ty in classical(3).into_iter().filter(|t| t.family != Family::D || t.rank >= 3) {
        let weights = sweep_weights(ty, 2).unwrap();
        for form in RealForm::classical_forms_of(ty) {
            let members: Vec<&Weight> =
                weights.iter().filter(|w| tableau_invariant_dim(&form, w, 64).unwrap() > 0).collect();
            for _ in 0..100 {
                let a = members[rng.gen_range(0..members.len())];
                let b = members[rng.gen_range(0..members.len())];
                assert!(additivity_check(&form, a, b).unwrap(), "{form}: {a} + {b}");
            }
        }
    }
}
