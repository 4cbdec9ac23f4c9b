//! Primitive elements (Hilbert basis) of the monoid Q ∩ h^+.
//!
//! In fundamental-weight coordinates x ∈ N^r the monoid is the kernel of
//! x ↦ Σ x_i [ϖ_i] in the finite group P/Q. A primitive element has
//! x_i ≤ d_i (d_i the order of [ϖ_i]), and its coordinate sum is at most |P/Q|,
//! since a longer sequence in P/Q has a proper zero-sum subsequence.

use lie_core::{LieError, LieType, Rat, RootData, Weight};
use serde::Serialize;

use crate::error::{MonoidError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonoidElementSet {
    pub elements: Vec<Weight>,
    pub context: LieType,
}

pub const MAX_CLASSICAL_RANK: usize = 8;

struct Lattice {
    /// root coordinates of each fundamental weight
    coeffs: Vec<Vec<Rat>>,
    orders: Vec<i64>,
}

impl Lattice {
    fn new(ty: LieType) -> Self {
        let rd = RootData::new(ty);
        let coeffs = (0..ty.rank)
            .map(|i| {
                let mut e = vec![0; ty.rank];
                e[i] = 1;
                rd.root_coefficients(&rd.from_int_labels(&e))
            })
            .collect();
        let orders = rd.fundamental_orders();
        Lattice { coeffs, orders }
    }

    fn radical(&self, x: &[i64]) -> bool {
        let r = x.len();
        (0..r).all(|j| {
            let c: Rat = (0..r).map(|i| self.coeffs[i][j] * Rat::from_integer(x[i])).sum();
            c.is_integer()
        })
    }

    fn group_order(&self) -> i64 {
        // |P/Q|, as the number of classes hit by label vectors below the orders
        let mut seen = std::collections::HashSet::new();
        let r = self.orders.len();
        let mut x = vec![0i64; r];
        loop {
            let key: Vec<Rat> = (0..r)
                .map(|j| {
                    let c: Rat = (0..r).map(|i| self.coeffs[i][j] * Rat::from_integer(x[i])).sum();
                    c - c.floor()
                })
                .collect();
            seen.insert(key);
            let mut i = 0;
            while i < r {
                x[i] += 1;
                if x[i] < self.orders[i] {
                    break;
                }
                x[i] = 0;
                i += 1;
            }
            if i == r {
                return seen.len() as i64;
            }
        }
    }
}

fn check_supported(ty: &LieType) -> Result<()> {
    if ty.is_classical() && ty.rank > MAX_CLASSICAL_RANK {
        return Err(MonoidError::Unsupported(format!(
            "primitive_basis supports classical ranks up to {MAX_CLASSICAL_RANK}, got {ty}"
        )));
    }
    Ok(())
}

/// Label vectors of the primitive elements, sorted by coordinate sum then lexicographically.
pub fn primitive_labels(ty: LieType) -> Result<Vec<Vec<i64>>> {
    check_supported(&ty)?;
    let lat = Lattice::new(ty);
    let r = ty.rank;
    let max_sum = lat.group_order();
    let mut cands = Vec::new();
    let mut x = vec![0i64; r];
    fn rec(lat: &Lattice, i: usize, left: i64, x: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i == x.len() {
            if x.iter().any(|&v| v > 0) && lat.radical(x) {
                out.push(x.clone());
            }
            return;
        }
        for v in 0..=lat.orders[i].min(left) {
            x[i] = v;
            rec(lat, i + 1, left - v, x, out);
        }
        x[i] = 0;
    }
    rec(&lat, 0, max_sum, &mut x, &mut cands);
    cands.sort_by_key(|c| (c.iter().sum::<i64>(), c.clone()));
    let mut basis: Vec<Vec<i64>> = Vec::new();
    for c in cands {
        // c - b is radical and dominant whenever b <= c componentwise
        if !basis.iter().any(|b| b.iter().zip(&c).all(|(u, v)| u <= v)) {
            basis.push(c);
        }
    }
    Ok(basis)
}

/// The Hilbert basis of Q ∩ h^+ in e-coordinates.
pub fn primitive_basis(ty: LieType) -> Result<MonoidElementSet> {
    let labels = primitive_labels(ty)?;
    let rd = RootData::new(ty);
    Ok(MonoidElementSet { elements: labels.iter().map(|x| rd.from_int_labels(x)).collect(), context: ty })
}

/// Write a radical dominant label vector as a sum of basis elements (greedy with backtracking).
pub fn decompose(labels: &[i64], basis: &[Vec<i64>]) -> Option<Vec<usize>> {
    if labels.iter().all(|&v| v == 0) {
        return Some(Vec::new());
    }
    for (k, b) in basis.iter().enumerate() {
        if b.iter().zip(labels).all(|(u, v)| u <= v) {
            let rest: Vec<i64> = labels.iter().zip(b).map(|(v, u)| v - u).collect();
            if let Some(mut d) = decompose(&rest, basis) {
                d.push(k);
                return Some(d);
            }
        }
    }
    None
}

/// Fundamental-weight coordinates of a weight; fails if it is not integral.
pub fn labels_of(ty: LieType, w: &Weight) -> Result<Vec<i64>> {
    let rd = RootData::new(ty);
    rd.check_len(w)?;
    rd.labels(w)
        .into_iter()
        .map(|l| {
            if l.is_integer() {
                Ok(l.to_integer())
            } else {
                Err(LieError::InvalidForm(format!("{w} is not integral for {ty}")).into())
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use lie_core::Family;

    #[test]
    fn small_cases() {
        let a1 = primitive_basis(LieType::a(1)).unwrap();
        assert_eq!(a1.elements, vec![Weight::from_ints(&[1, -1])]);
        // B2: Q = integer points; the spin weight needs doubling
        assert_eq!(primitive_labels(LieType::b(2)).unwrap(), vec![vec![1, 0], vec![0, 2]]);
        // A2: 3 mod 3 sequences in Z/3
        assert_eq!(primitive_labels(LieType::a(2)).unwrap(), vec![vec![1, 1], vec![0, 3], vec![3, 0]]);
        let g2 = primitive_basis(LieType::exceptional(Family::G2)).unwrap();
        assert_eq!(g2.elements.len(), 2);
    }

    #[test]
    fn rank_guard() {
        assert!(primitive_basis(LieType::a(9)).is_err());
        assert!(primitive_basis(LieType::d(8)).is_ok());
    }

    #[test]
    fn decomposition() {
        let basis = primitive_labels(LieType::a(2)).unwrap();
        assert_eq!(decompose(&[2, 2], &basis).map(|d| d.len()), Some(2));
        assert!(decompose(&[1, 0], &basis).is_none());
    }
}
