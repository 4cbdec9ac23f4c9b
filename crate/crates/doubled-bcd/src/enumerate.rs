//! Generation of g-standard doubled tableaux of a given shape.
//!
//! Columns are placed left to right. A partial tableau is summarised by its
//! last column and the sum of column weights so far; Young order, admissibility
//! of right-anchored pairs, prefix codominance and the reachability of a zero
//! total only depend on that.

use std::collections::{BTreeMap, HashMap};

use lie_core::{Family, LieType, ThetaSet, Weight};
use young_a::YoungDiagram;

use crate::column::{columns_of_height, Column};
use crate::error::{BcdError, Result};
use crate::order::{admissible_pair, young_compare};
use crate::tableau::{psi_shape, require_bcd, simple_root_ints, DoubledTableau};

pub const DEFAULT_BOX_BUDGET: usize = 64;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DoubledFilter {
    pub null: bool,
    /// required sign; None accepts every sign
    pub sign: Option<i8>,
    pub codominant: Option<ThetaSet>,
}

impl DoubledFilter {
    pub fn null() -> Self {
        DoubledFilter { null: true, ..Default::default() }
    }

    pub fn invariants(theta: ThetaSet, sign: Option<i8>) -> Self {
        DoubledFilter { null: true, sign, codominant: Some(theta) }
    }
}

type State = (usize, Vec<i8>);

struct Walker {
    r: usize,
    heights: Vec<usize>,
    /// candidate columns per position
    cands: Vec<Vec<Column>>,
    weights: Vec<Vec<Vec<i8>>>,
    /// allowed[j][a][b]: candidate b at position j may follow candidate a at j-1
    allowed: Vec<Vec<Vec<bool>>>,
    roots: Vec<Vec<i64>>,
    null: bool,
}

impl Walker {
    fn new(shape: &YoungDiagram, ty: &LieType, filter: &DoubledFilter, budget: usize) -> Result<Option<Self>> {
        require_bcd(ty)?;
        let boxes = shape.size();
        if boxes > budget {
            return Err(BcdError::Budget { boxes, budget });
        }
        let r = ty.rank;
        let heights = shape.column_heights();
        if heights.iter().any(|&h| h > r) {
            return Ok(None);
        }
        let n = heights.len();
        let has_top = heights.first() == Some(&r);
        if let Some(s) = filter.sign {
            let available = match (has_top, ty.family) {
                (false, _) => s == 0,
                (true, Family::D) => s != 0,
                (true, _) => s == 1,
            };
            if !available {
                return Ok(None);
            }
        }
        let mut by_height: HashMap<usize, Vec<Column>> = HashMap::new();
        let mut cands = Vec::with_capacity(n);
        for (j, &h) in heights.iter().enumerate() {
            let mut cs = by_height.entry(h).or_insert_with(|| columns_of_height(r, h)).clone();
            if j == 0 && has_top && ty.family == Family::D {
                if let Some(s) = filter.sign {
                    cs.retain(|c| (c.barred() % 2 == 0) == (s > 0));
                }
            }
            cands.push(cs);
        }
        let weights = cands
            .iter()
            .map(|cs| cs.iter().map(|c| c.weight_ints(r).into_iter().map(|x| x as i8).collect()).collect())
            .collect();
        let mut allowed = vec![Vec::new()];
        for j in 1..n {
            let paired = (j + 1) % 2 == n % 2;
            let m: Vec<Vec<bool>> = cands[j - 1]
                .iter()
                .map(|a| {
                    cands[j]
                        .iter()
                        .map(|b| young_compare(a, b, ty) && (!paired || admissible_pair(b, a, ty)))
                        .collect()
                })
                .collect();
            allowed.push(m);
        }
        let all_roots = simple_root_ints(ty);
        let roots = match &filter.codominant {
            Some(theta) => {
                theta.validate(ty)?;
                theta.iter().map(|i| all_roots[i - 1].clone()).collect()
            }
            None => Vec::new(),
        };
        Ok(Some(Walker { r, heights, cands, weights, allowed, roots, null: filter.null }))
    }

    fn step(&self, j: usize, w: &[i8], b: usize) -> Option<Vec<i8>> {
        let mut v: Vec<i8> = w.iter().zip(&self.weights[j][b]).map(|(x, y)| x + y).collect();
        let left = (self.heights.len() - j - 1) as i8;
        if self.null && v.iter().any(|x| x.abs() > left) {
            return None;
        }
        for alpha in &self.roots {
            let s: i64 = alpha.iter().zip(&v).map(|(a, x)| a * *x as i64).sum();
            if s > 0 {
                return None;
            }
        }
        v.shrink_to_fit();
        Some(v)
    }

    /// Counts grouped by the final doubled weight.
    fn count(&self) -> HashMap<Vec<i8>, u64> {
        let n = self.heights.len();
        let mut out = HashMap::new();
        if n == 0 {
            out.insert(vec![0; self.r], 1);
            return out;
        }
        let zero = vec![0i8; self.r];
        let mut layer: HashMap<State, u64> = HashMap::new();
        for b in 0..self.cands[0].len() {
            if let Some(v) = self.step(0, &zero, b) {
                *layer.entry((b, v)).or_insert(0) += 1;
            }
        }
        for j in 1..n {
            let mut next: HashMap<State, u64> = HashMap::new();
            for ((a, w), k) in &layer {
                for b in 0..self.cands[j].len() {
                    if !self.allowed[j][*a][b] {
                        continue;
                    }
                    if let Some(v) = self.step(j, w, b) {
                        *next.entry((b, v)).or_insert(0) += k;
                    }
                }
            }
            layer = next;
        }
        for ((_, w), k) in layer {
            *out.entry(w).or_insert(0) += k;
        }
        out
    }

    fn enumerate(&self, j: usize, prev: Option<usize>, w: &[i8], cols: &mut Vec<usize>, out: &mut Vec<DoubledTableau>) {
        if j == self.heights.len() {
            out.push(DoubledTableau {
                columns: cols.iter().enumerate().map(|(i, &b)| self.cands[i][b].clone()).collect(),
            });
            return;
        }
        for b in 0..self.cands[j].len() {
            if let Some(a) = prev {
                if !self.allowed[j][a][b] {
                    continue;
                }
            }
            if let Some(v) = self.step(j, w, b) {
                cols.push(b);
                self.enumerate(j + 1, Some(b), &v, cols, out);
                cols.pop();
            }
        }
    }
}

/// Every g-standard doubled tableau of the shape passing the filter.
pub fn enumerate_doubled(
    shape: &YoungDiagram,
    ty: &LieType,
    filter: &DoubledFilter,
    budget: usize,
) -> Result<Vec<DoubledTableau>> {
    let Some(w) = Walker::new(shape, ty, filter, budget)? else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    w.enumerate(0, None, &vec![0; w.r], &mut Vec::new(), &mut out);
    Ok(out)
}

pub fn count_doubled(shape: &YoungDiagram, ty: &LieType, filter: &DoubledFilter, budget: usize) -> Result<u64> {
    match Walker::new(shape, ty, filter, budget)? {
        Some(w) => Ok(w.count().values().sum()),
        None => Ok(0),
    }
}

fn lambda_sign(lambda: &Weight, ty: &LieType) -> Option<i8> {
    if ty.family != Family::D {
        return None;
    }
    let last = lambda.coords[ty.rank - 1];
    Some(if last > 0.into() {
        1
    } else if last < 0.into() {
        -1
    } else {
        0
    })
}

/// Multiset of total weights of the tableaux of shape Psi(lambda) with the sign of lambda_r.
pub fn character_bcd(lambda: &Weight, ty: &LieType) -> Result<BTreeMap<Weight, u64>> {
    character_bcd_budget(lambda, ty, DEFAULT_BOX_BUDGET)
}

pub fn character_bcd_budget(lambda: &Weight, ty: &LieType, budget: usize) -> Result<BTreeMap<Weight, u64>> {
    let shape = psi_shape(lambda, ty)?;
    let filter = DoubledFilter { sign: lambda_sign(lambda, ty), ..Default::default() };
    let mut out = BTreeMap::new();
    if let Some(w) = Walker::new(&shape, ty, &filter, budget)? {
        for (v, k) in w.count() {
            let d: Vec<i64> = v.into_iter().map(i64::from).collect();
            *out.entry(Weight::from_doubled(&d)).or_insert(0) += k;
        }
    }
    Ok(out)
}

/// Null, correctly signed, Theta-codominant tableaux of shape Psi(lambda): dim V_lambda^{l(Theta)}.
pub fn count_invariants_bcd(lambda: &Weight, ty: &LieType, theta: &ThetaSet) -> Result<u64> {
    count_invariants_bcd_budget(lambda, ty, theta, DEFAULT_BOX_BUDGET)
}

pub fn count_invariants_bcd_budget(lambda: &Weight, ty: &LieType, theta: &ThetaSet, budget: usize) -> Result<u64> {
    let shape = psi_shape(lambda, ty)?;
    let filter = DoubledFilter::invariants(theta.clone(), lambda_sign(lambda, ty));
    count_doubled(&shape, ty, &filter, budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn yd(rows: &[usize], n: usize) -> YoungDiagram {
        YoungDiagram::new(rows, n).unwrap()
    }

    #[test]
    fn vector_rep_b2() {
        let b2 = LieType::b(2);
        let all = enumerate_doubled(&yd(&[2], 2), &b2, &DoubledFilter::default(), 64).unwrap();
        assert_eq!(all.len(), 5);
        let null = enumerate_doubled(&yd(&[2], 2), &b2, &DoubledFilter::null(), 64).unwrap();
        assert_eq!(null, vec![DoubledTableau::parse_columns(&["2", "-2"]).unwrap()]);
        let ch = character_bcd(&Weight::from_ints(&[1, 0]), &b2).unwrap();
        assert_eq!(ch.len(), 5);
        assert!(ch.values().all(|&k| k == 1));
    }

    #[test]
    fn trivial() {
        for ty in [LieType::b(2), LieType::c(3), LieType::d(4)] {
            let z = Weight::zero(ty.rank);
            assert_eq!(character_bcd(&z, &ty).unwrap().get(&z), Some(&1));
            assert_eq!(count_invariants_bcd(&z, &ty, &ThetaSet::full(ty.rank)).unwrap(), 1);
        }
        let e = enumerate_doubled(&YoungDiagram::empty(3), &LieType::d(3), &DoubledFilter::default(), 64).unwrap();
        assert_eq!(e, vec![DoubledTableau::empty()]);
    }

    #[test]
    fn so14_invariants() {
        let b2 = LieType::b(2);
        let theta = ThetaSet::from_indices([2]);
        assert_eq!(count_invariants_bcd(&Weight::from_ints(&[1, 0]), &b2, &theta).unwrap(), 0);
        assert!(count_invariants_bcd(&Weight::from_ints(&[1, 1]), &b2, &theta).unwrap() >= 1);
    }

    #[test]
    fn budget() {
        let err = enumerate_doubled(&yd(&[40, 40], 2), &LieType::b(2), &DoubledFilter::default(), 64);
        assert!(matches!(err, Err(BcdError::Budget { .. })));
    }
}
