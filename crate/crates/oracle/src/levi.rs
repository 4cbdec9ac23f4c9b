//! Dimension of the Levi-invariant subspace V_lambda^{l(Theta)}.
//!
//! The trivial l-module occurs in V with multiplicity
//! sum over w in W_Theta of sgn(w) * m_lambda(rho_Theta - w rho_Theta),
//! where rho_Theta may be taken as the sum of the fundamental weights in Theta.

use std::collections::{HashMap, VecDeque};

use lie_core::{LieType, RootData, ThetaSet, Weight};

use crate::character::{check_budget, DEFAULT_BUDGET};
use crate::error::Result;
use crate::freudenthal::{dominant_labels, LabelSystem};

pub fn dim_invariants_oracle(lambda: &Weight, g: LieType, theta: &ThetaSet) -> Result<u64> {
    dim_invariants_budget(lambda, g, theta, DEFAULT_BUDGET)
}

pub fn dim_invariants_budget(lambda: &Weight, g: LieType, theta: &ThetaSet, budget: u64) -> Result<u64> {
    Ok(dim_invariants_many(lambda, g, std::slice::from_ref(theta), budget)?[0])
}

/// One Freudenthal run shared by several Levi subalgebras.
pub fn dim_invariants_many(lambda: &Weight, g: LieType, thetas: &[ThetaSet], budget: u64) -> Result<Vec<u64>> {
    for theta in thetas {
        theta.validate(&g)?;
    }
    let rd = RootData::new(g);
    let m = dominant_labels(&rd, lambda)?;
    let sys = LabelSystem::new(&rd);
    check_budget(&sys, &m, budget)?;
    let mult = sys.dominant_multiplicities(&m);
    Ok(thetas.iter().map(|t| trivial_multiplicity(&sys, &mult, t)).collect())
}

fn trivial_multiplicity(sys: &LabelSystem, mult: &HashMap<Vec<i64>, u64>, theta: &ThetaSet) -> u64 {
    let idx: Vec<usize> = theta.iter().map(|i| i - 1).collect();
    let rho: Vec<i64> = (0..sys.rank).map(|i| i64::from(idx.contains(&i))).collect();

    // W_Theta rho_Theta is a regular orbit, so it lists W_Theta with signs.
    let mut sign: HashMap<Vec<i64>, i64> = HashMap::new();
    let mut queue = VecDeque::new();
    sign.insert(rho.clone(), 1);
    queue.push_back(rho.clone());
    while let Some(x) = queue.pop_front() {
        let s = sign[&x];
        for &i in &idx {
            let mut y = x.clone();
            sys.reflect(&mut y, i);
            sign.entry(y.clone()).or_insert_with(|| {
                queue.push_back(y);
                -s
            });
        }
    }
    let mut total: i64 = 0;
    for (wrho, s) in &sign {
        let nu: Vec<i64> = rho.iter().zip(wrho).map(|(a, b)| a - b).collect();
        total += s * mult.get(&sys.dominantize(&nu)).copied().unwrap_or(0) as i64;
    }
    debug_assert!(total >= 0);
    total.max(0) as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::weight_multiplicities;
    use lie_core::Family;

    #[test]
    fn degenerate_thetas() {
        for ty in [LieType::a(2), LieType::b(2), LieType::c(3), LieType::d(4)] {
            let rd = RootData::new(ty);
            for labels in [[0, 0, 0, 0], [1, 1, 0, 0], [2, 0, 0, 2], [0, 2, 0, 0]] {
                let v = rd.from_int_labels(&labels[..ty.rank]);
                if !rd.root_coefficients(&v).iter().all(|c| c.is_integer()) {
                    continue;
                }
                let zero = weight_multiplicities(&v, ty).unwrap().multiplicity(&Weight::zero(ty.ambient_dim()));
                assert_eq!(dim_invariants_oracle(&v, ty, &ThetaSet::empty()).unwrap(), zero);
                let full = dim_invariants_oracle(&v, ty, &ThetaSet::full(ty.rank)).unwrap();
                assert_eq!(full, u64::from(v.is_zero()));
            }
        }
    }

    #[test]
    fn adjoint_rows() {
        // adjoint: dim of invariants = r - |Theta| (the centre of l)
        let e6 = LieType::exceptional(Family::E6);
        let rd = RootData::new(e6);
        let adj = rd.from_int_labels(&[0, 1, 0, 0, 0, 0]);
        let eiii = ThetaSet::from_indices([3, 4, 5]);
        let eiv = ThetaSet::from_indices([2, 3, 4, 5]);
        assert_eq!(dim_invariants_oracle(&adj, e6, &eiii).unwrap(), 3);
        assert_eq!(dim_invariants_oracle(&adj, e6, &eiv).unwrap(), 2);
    }

    #[test]
    fn f4_fii_column() {
        let f4 = LieType::exceptional(Family::F4);
        let rd = RootData::new(f4);
        let fii = ThetaSet::from_indices([1, 2, 3]);
        for i in 0..4 {
            let mut l = [0; 4];
            l[i] = 1;
            assert_eq!(dim_invariants_oracle(&rd.from_int_labels(&l), f4, &fii).unwrap(), 1);
        }
    }

    #[test]
    fn so14_vector() {
        // so(1,4): the vector rep has no l-invariants, the adjoint-like (1,1) does
        let b2 = LieType::b(2);
        let v = Weight::from_ints(&[1, 0]);
        assert_eq!(dim_invariants_oracle(&v, b2, &ThetaSet::from_indices([2])).unwrap(), 0);
        assert!(dim_invariants_oracle(&Weight::from_ints(&[1, 1]), b2, &ThetaSet::from_indices([2])).unwrap() >= 1);
    }
}
