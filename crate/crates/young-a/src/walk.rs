//! Column-by-column generation of semistandard fillings.
//!
//! Columns are visited left to right. A partial filling is summarised by its
//! last column and the symbol counts so far, which is all that the row
//! condition, balancedness and codominance of left parts depend on.

use std::collections::{BTreeMap, HashMap};

use lie_core::{Rat, ThetaSet, Weight};

use crate::diagram::{reduced_from_weight, SkewDiagram, YoungDiagram};
use crate::error::{Result, YoungError};
use crate::tableau::TableauA;

pub const DEFAULT_BOX_BUDGET: usize = 24;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FillingFilter {
    /// every symbol occurs equally often (equivalently: total weight 0)
    pub balanced: bool,
    /// left parts have nonpositive alpha_i for every i in the set
    pub codominant: Option<ThetaSet>,
}

impl FillingFilter {
    pub fn balanced() -> Self {
        FillingFilter { balanced: true, codominant: None }
    }

    pub fn null_codominant(theta: ThetaSet) -> Self {
        FillingFilter { balanced: true, codominant: Some(theta) }
    }
}

struct Walker {
    n: usize,
    spans: Vec<(usize, usize)>,
    cands: HashMap<usize, Vec<Vec<u8>>>,
    target: Option<u8>,
    theta: Vec<usize>,
}

fn increasing(n: usize, h: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(h);
    fn rec(start: usize, n: usize, h: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == h {
            out.push(cur.clone());
            return;
        }
        for s in start..=n {
            if n - s + 1 < h - cur.len() {
                break;
            }
            cur.push(s as u8);
            rec(s + 1, n, h, cur, out);
            cur.pop();
        }
    }
    rec(1, n, h, &mut cur, &mut out);
    out
}

impl Walker {
    fn new(shape: &SkewDiagram, n: usize, filter: &FillingFilter, budget: usize) -> Result<Option<Self>> {
        let boxes = shape.size();
        if boxes > budget {
            return Err(YoungError::Budget { boxes, budget });
        }
        let spans: Vec<(usize, usize)> = (1..=shape.width()).map(|j| shape.column_span(j)).collect();
        if spans.iter().any(|(t, b)| b - t > n) {
            return Ok(None);
        }
        let target = if filter.balanced {
            if n == 0 || boxes % n != 0 {
                return Ok(None);
            }
            Some((boxes / n) as u8)
        } else {
            None
        };
        let theta: Vec<usize> = filter.codominant.as_ref().map(|t| t.iter().collect()).unwrap_or_default();
        if theta.iter().any(|&i| i == 0 || i >= n) {
            return Err(YoungError::InvalidDiagram(format!("Theta index out of range for order {n}")));
        }
        let mut cands = HashMap::new();
        for (t, b) in &spans {
            cands.entry(b - t).or_insert_with(|| increasing(n, b - t));
        }
        Ok(Some(Walker { n, spans, cands, target, theta }))
    }

    fn compatible(&self, j: usize, left: &[u8], right: &[u8]) -> bool {
        let (tl, _) = self.spans[j - 1];
        let (tr, br) = self.spans[j];
        (tl.max(tr)..br.min(self.spans[j - 1].1)).all(|i| left[i - tl] <= right[i - tr])
    }

    fn admissible(&self, counts: &[u8]) -> bool {
        if let Some(a) = self.target {
            if counts.iter().any(|&c| c > a) {
                return false;
            }
        }
        self.theta.iter().all(|&i| counts[i - 1] <= counts[i])
    }

    fn step(&self, counts: &[u8], col: &[u8]) -> Option<Vec<u8>> {
        let mut c = counts.to_vec();
        for &s in col {
            c[s as usize - 1] += 1;
        }
        self.admissible(&c).then_some(c)
    }

    fn finished(&self, counts: &[u8]) -> bool {
        match self.target {
            Some(a) => counts.iter().all(|&c| c == a),
            None => true,
        }
    }

    /// Number of fillings grouped by final symbol counts.
    fn count(&self) -> HashMap<Vec<u8>, u64> {
        let mut layer: HashMap<(Vec<u8>, Vec<u8>), u64> = HashMap::new();
        layer.insert((Vec::new(), vec![0; self.n]), 1);
        for j in 0..self.spans.len() {
            let h = self.spans[j].1 - self.spans[j].0;
            let mut next: HashMap<(Vec<u8>, Vec<u8>), u64> = HashMap::new();
            for ((last, counts), k) in &layer {
                for col in &self.cands[&h] {
                    if j > 0 && !self.compatible(j, last, col) {
                        continue;
                    }
                    if let Some(c) = self.step(counts, col) {
                        *next.entry((col.clone(), c)).or_insert(0) += k;
                    }
                }
            }
            layer = next;
        }
        let mut out = HashMap::new();
        for ((_, counts), k) in layer {
            if self.finished(&counts) {
                *out.entry(counts).or_insert(0) += k;
            }
        }
        out
    }

    fn enumerate(&self, j: usize, counts: &[u8], cols: &mut Vec<Vec<u8>>, out: &mut Vec<Vec<Vec<u8>>>) {
        if j == self.spans.len() {
            if self.finished(counts) {
                out.push(cols.clone());
            }
            return;
        }
        let h = self.spans[j].1 - self.spans[j].0;
        for col in &self.cands[&h] {
            if j > 0 && !self.compatible(j, &cols[j - 1], col) {
                continue;
            }
            if let Some(c) = self.step(counts, col) {
                cols.push(col.clone());
                self.enumerate(j + 1, &c, cols, out);
                cols.pop();
            }
        }
    }
}

/// All semistandard {1..n}-fillings of the shape passing the filter.
pub fn enumerate_fillings_a(
    shape: &SkewDiagram,
    n: usize,
    filter: &FillingFilter,
    budget: usize,
) -> Result<Vec<TableauA>> {
    let Some(w) = Walker::new(shape, n, filter, budget)? else {
        return Ok(Vec::new());
    };
    let mut raw = Vec::new();
    w.enumerate(0, &vec![0; n], &mut Vec::new(), &mut raw);
    Ok(raw
        .into_iter()
        .map(|cols| {
            let cols: Vec<Vec<usize>> =
                cols.into_iter().map(|c| c.into_iter().map(usize::from).collect()).collect();
            TableauA::from_columns(shape, &cols, n)
        })
        .collect())
}

pub fn count_fillings(shape: &SkewDiagram, n: usize, filter: &FillingFilter, budget: usize) -> Result<u64> {
    match Walker::new(shape, n, filter, budget)? {
        Some(w) => Ok(w.count().values().sum()),
        None => Ok(0),
    }
}

/// dim V_lambda^{l(Theta)} for sl_n: reduced Theta-dominant null tableaux.
pub fn count_null_dominant_a(lambda: &Weight, n: usize, theta: &ThetaSet) -> Result<u64> {
    count_null_dominant_a_budget(lambda, n, theta, DEFAULT_BOX_BUDGET)
}

pub fn count_null_dominant_a_budget(lambda: &Weight, n: usize, theta: &ThetaSet, budget: usize) -> Result<u64> {
    if lambda.len() != n {
        return Err(YoungError::NotDominant(lambda.to_string()));
    }
    let p = reduced_from_weight(lambda)?;
    count_fillings(&SkewDiagram::straight(p), n, &FillingFilter::null_codominant(theta.clone()), budget)
}

/// Multiset of total weights over reduced semistandard tableaux of sl_n-shape lambda.
pub fn character_a(lambda: &Weight, n: usize) -> Result<BTreeMap<Weight, u64>> {
    character_a_budget(lambda, n, DEFAULT_BOX_BUDGET)
}

pub fn character_a_budget(lambda: &Weight, n: usize, budget: usize) -> Result<BTreeMap<Weight, u64>> {
    if lambda.len() != n {
        return Err(YoungError::NotDominant(lambda.to_string()));
    }
    let p: YoungDiagram = reduced_from_weight(lambda)?;
    let boxes = p.size();
    let mut out = BTreeMap::new();
    let Some(w) = Walker::new(&SkewDiagram::straight(p), n, &FillingFilter::default(), budget)? else {
        return Ok(out);
    };
    let avg = Rat::new(boxes as i64, n as i64);
    for (counts, k) in w.count() {
        let wt = Weight::new(counts.iter().map(|&c| Rat::from_integer(c as i64) - avg).collect());
        *out.entry(wt).or_insert(0) += k;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn straight(r: &[usize], n: usize) -> SkewDiagram {
        SkewDiagram::straight(YoungDiagram::new(r, n).unwrap())
    }

    #[test]
    fn small_balanced() {
        let f = enumerate_fillings_a(&straight(&[1, 1], 2), 2, &FillingFilter::balanced(), 24).unwrap();
        assert_eq!(f, vec![TableauA::new(vec![vec![1], vec![2]], 2)]);
        let f = enumerate_fillings_a(&straight(&[2, 0], 2), 2, &FillingFilter::balanced(), 24).unwrap();
        assert_eq!(f, vec![TableauA::new(vec![vec![1, 2]], 2)]);
    }

    #[test]
    fn rectangle() {
        let flt = FillingFilter::null_codominant(ThetaSet::from_indices([1, 2]));
        let f = enumerate_fillings_a(&straight(&[2, 2, 2], 3), 3, &flt, 24).unwrap();
        assert_eq!(f, vec![TableauA::new(vec![vec![1, 1], vec![2, 2], vec![3, 3]], 3)]);
    }

    #[test]
    fn counts_match_enumeration() {
        let shape = straight(&[4, 2, 2, 0], 4);
        for flt in [
            FillingFilter::default(),
            FillingFilter::balanced(),
            FillingFilter::null_codominant(ThetaSet::from_indices([1, 3])),
        ] {
            let e = enumerate_fillings_a(&shape, 4, &flt, 24).unwrap();
            assert_eq!(e.len() as u64, count_fillings(&shape, 4, &flt, 24).unwrap());
            for t in &e {
                assert!(t.is_semistandard());
            }
        }
    }

    #[test]
    fn null_dominant_counts() {
        let adj = Weight::from_ints(&[1, -1]);
        assert_eq!(count_null_dominant_a(&adj, 2, &ThetaSet::empty()).unwrap(), 1);
        assert_eq!(count_null_dominant_a(&adj, 2, &ThetaSet::from_indices([1])).unwrap(), 0);
        let l = Weight::from_ints(&[1, 0, -1]);
        assert!(count_null_dominant_a(&l, 3, &ThetaSet::from_indices([2])).unwrap() >= 1);
    }

    #[test]
    fn characters() {
        let c = character_a(&Weight::from_ints(&[1, -1]), 2).unwrap();
        assert_eq!(c.len(), 3);
        let std3 = Weight::new(vec![Rat::new(2, 3), Rat::new(-1, 3), Rat::new(-1, 3)]);
        let c = character_a(&std3, 3).unwrap();
        assert_eq!(c.values().sum::<u64>(), 3);
        assert!(c.contains_key(&std3));
        let c = character_a(&Weight::zero(3), 3).unwrap();
        assert_eq!(c.into_iter().collect::<Vec<_>>(), vec![(Weight::zero(3), 1)]);
    }

    #[test]
    fn budget() {
        let big = straight(&[20, 10], 3);
        assert!(matches!(
            count_fillings(&big, 3, &FillingFilter::default(), 24),
            Err(YoungError::Budget { .. })
        ));
    }
}
