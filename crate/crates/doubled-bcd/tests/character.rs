use doubled_bcd::*;
use lie_core::{dominant_weights_bcd, theta_of, LieType, RealForm, ThetaSet, Weight};
use oracle::{dim_invariants_oracle, weight_multiplicities};

#[test]
fn character_matches_freudenthal() {
    for ty in [LieType::b(2), LieType::b(3), LieType::c(2), LieType::c(3), LieType::d(3), LieType::d(4)] {
        for lambda in dominant_weights_bcd(ty, 3).unwrap() {
            let tab = character_bcd(&lambda, &ty).unwrap();
            let fr = weight_multiplicities(&lambda, ty).unwrap();
            assert_eq!(tab, fr.entries, "{ty} {lambda}");
        }
    }
}

#[test]
fn spec_character_examples() {
    let ch = character_bcd(&Weight::from_ints(&[1, 1]), &LieType::b(2)).unwrap();
    assert_eq!(ch.values().sum::<u64>(), 10);
    assert_eq!(ch[&Weight::zero(2)], 2);
    let ch = character_bcd(&Weight::from_ints(&[2, 0]), &LieType::c(2)).unwrap();
    assert_eq!(ch.values().sum::<u64>(), 10);
    assert_eq!(ch[&Weight::zero(2)], 2);
    assert_eq!(character_bcd(&Weight::from_ints(&[1, 1]), &LieType::c(2)).unwrap().values().sum::<u64>(), 5);
}

#[test]
fn invariant_counts_match_oracle() {
    for ty in [LieType::b(2), LieType::b(3), LieType::c(2), LieType::c(3), LieType::d(3), LieType::d(4)] {
        let mut thetas: Vec<ThetaSet> = RealForm::classical_forms_of(ty)
            .iter()
            .map(|f| theta_of(f).unwrap())
            .collect();
        thetas.push(ThetaSet::empty());
        thetas.push(ThetaSet::full(ty.rank));
        thetas.sort();
        thetas.dedup();
        for lambda in dominant_weights_bcd(ty, 2).unwrap() {
            for theta in &thetas {
                let n = count_invariants_bcd(&lambda, &ty, theta).unwrap();
                let o = dim_invariants_oracle(&lambda, ty, theta).unwrap();
                assert_eq!(n, o, "{ty} {lambda} {theta}");
            }
        }
    }
}
