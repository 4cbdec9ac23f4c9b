use lie_core::{Rat, ThetaSet, Weight};
use serde::Serialize;

use crate::diagram::{SkewDiagram, YoungDiagram};
use crate::error::{Result, YoungError};

/// A filling of a (possibly skew) diagram by symbols 1..=n.
///
/// Row i occupies columns inner[i] .. inner[i] + rows[i].len() (0-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TableauA {
    #[serde(skip)]
    pub n: usize,
    #[serde(skip)]
    pub inner: Vec<usize>,
    pub rows: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableauReport {
    pub semistandard: bool,
    pub balanced: bool,
    pub codominant: bool,
    pub total_weight: Weight,
}

impl TableauA {
    pub fn new(rows: Vec<Vec<usize>>, n: usize) -> Self {
        let inner = vec![0; rows.len()];
        TableauA { n, inner, rows }
    }

    pub fn skew(inner: Vec<usize>, rows: Vec<Vec<usize>>, n: usize) -> Self {
        assert_eq!(inner.len(), rows.len());
        TableauA { n, inner, rows }
    }

    /// Build from columns of a skew shape, each listed top to bottom.
    pub fn from_columns(shape: &SkewDiagram, cols: &[Vec<usize>], n: usize) -> Self {
        let h = shape.outer.order();
        let inner: Vec<usize> = (1..=h).map(|i| shape.inner.row(i)).collect();
        let mut rows = vec![Vec::new(); h];
        for (j, col) in cols.iter().enumerate() {
            let (top, _) = shape.column_span(j + 1);
            for (k, &s) in col.iter().enumerate() {
                rows[top + k].push(s);
            }
        }
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        let inner = inner[..rows.len()].to_vec();
        TableauA { n, inner, rows }
    }

    pub fn width(&self) -> usize {
        self.rows.iter().zip(&self.inner).map(|(r, o)| o + r.len()).max().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> Option<usize> {
        let row = self.rows.get(i)?;
        let o = self.inner[i];
        if j < o {
            return None;
        }
        row.get(j - o).copied()
    }

    /// Entries of column j (0-based), top to bottom.
    pub fn column(&self, j: usize) -> Vec<usize> {
        (0..self.rows.len()).filter_map(|i| self.get(i, j)).collect()
    }

    pub fn outer_shape(&self) -> Result<YoungDiagram> {
        let rows: Vec<usize> = self.rows.iter().zip(&self.inner).map(|(r, o)| o + r.len()).collect();
        YoungDiagram::new(&rows, self.n.max(rows.len()))
    }

    pub fn counts(&self) -> Vec<usize> {
        let mut c = vec![0; self.n + 1];
        for s in self.rows.iter().flatten() {
            if *s <= self.n {
                c[*s] += 1;
            }
        }
        c
    }

    /// nu(T): symbol counts minus the average, in the n e-coordinates.
    pub fn total_weight(&self) -> Weight {
        let c = self.counts();
        let avg = Rat::new(self.size() as i64, self.n.max(1) as i64);
        Weight::new((1..=self.n).map(|s| Rat::from_integer(c[s] as i64) - avg).collect())
    }

    pub fn is_semistandard(&self) -> bool {
        for (i, row) in self.rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
            if i > 0 {
                for (k, &s) in row.iter().enumerate() {
                    if let Some(above) = self.get(i - 1, self.inner[i] + k) {
                        if above >= s {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn prefix_counts(&self) -> Vec<Vec<i64>> {
        let w = self.width();
        let mut out = vec![vec![0i64; self.n + 2]];
        for j in 0..w {
            let mut c = out.last().expect("nonempty").clone();
            for s in self.column(j) {
                c[s] += 1;
            }
            out.push(c);
        }
        out
    }

    /// Every left part has nonpositive alpha_i for i in theta.
    pub fn is_codominant(&self, theta: &ThetaSet) -> bool {
        self.prefix_counts().iter().all(|c| theta.iter().all(|i| c[i] <= c[i + 1]))
    }

    /// Every right part has nonnegative alpha_i for i in theta.
    pub fn is_dominant(&self, theta: &ThetaSet) -> bool {
        let pre = self.prefix_counts();
        let total = pre.last().expect("nonempty");
        pre.iter().all(|c| theta.iter().all(|i| total[i] - c[i] >= total[i + 1] - c[i + 1]))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(&self.rows).expect("serializable")
    }
}

pub fn check_tableau_a(t: &TableauA, n: usize, theta: &ThetaSet) -> Result<TableauReport> {
    for &s in t.rows.iter().flatten() {
        if s == 0 || s > n {
            return Err(YoungError::SymbolRange { symbol: s, n });
        }
    }
    if let Some(&i) = theta.indices.iter().find(|&&i| i == 0 || i >= n) {
        return Err(YoungError::InvalidDiagram(format!("simple root index {i} for order {n}")));
    }
    let mut t = t.clone();
    t.n = n;
    let c = t.counts();
    let balanced = n == 0 || (1..=n).all(|s| c[s] * n == t.size());
    Ok(TableauReport {
        semistandard: t.is_semistandard(),
        balanced,
        codominant: t.is_codominant(theta),
        total_weight: t.total_weight(),
    })
}

/// Nested diagrams P_0 = empty, ..., P_n, with P_s the boxes holding symbols <= s.
pub fn strip_decompose(t: &TableauA) -> Result<Vec<YoungDiagram>> {
    if !t.is_semistandard() || t.inner.iter().any(|&o| o != 0) {
        return Err(YoungError::NotSemistandard);
    }
    let h = t.n.max(t.rows.len());
    (0..=t.n)
        .map(|s| {
            let rows: Vec<usize> = t.rows.iter().map(|r| r.iter().filter(|&&x| x <= s).count()).collect();
            YoungDiagram::new(&rows, h)
        })
        .collect()
}

/// Inverse of strip_decompose; each step must be a horizontal strip.
pub fn strips_to_tableau(chain: &[YoungDiagram]) -> Result<TableauA> {
    let n = chain.len().saturating_sub(1);
    let top = chain.last().ok_or_else(|| YoungError::InvalidDiagram("empty chain".into()))?;
    let h = top.order();
    let mut rows = vec![Vec::new(); h];
    for s in 1..=n {
        let (a, b) = (&chain[s - 1], &chain[s]);
        let skew = SkewDiagram::new(b.clone(), a.clone())?;
        if skew.thickness() > 1 {
            return Err(YoungError::InvalidDiagram(format!("{b}/{a} is not a horizontal strip")));
        }
        for i in 1..=h {
            for _ in a.row(i)..b.row(i) {
                rows[i - 1].push(s);
            }
        }
    }
    while rows.last().is_some_and(|r| r.is_empty()) {
        rows.pop();
    }
    Ok(TableauA::new(rows, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn figure1() -> TableauA {
        TableauA::new(vec![vec![1, 1, 2, 2, 2, 4], vec![2, 3, 3, 3], vec![4], vec![5]], 5)
    }

    #[test]
    fn figure1_checks() {
        let t = figure1();
        let r = check_tableau_a(&t, 5, &ThetaSet::empty()).unwrap();
        assert!(r.semistandard);
        assert_eq!(t.size(), 12);
        assert_eq!(t.column(3), vec![2, 3]);
        assert_eq!(t.outer_shape().unwrap().rows(), &[6, 4, 1, 1, 0]);
        assert_eq!(t.counts()[2], 4);
    }

    #[test]
    fn single_row() {
        let t = TableauA::new(vec![vec![1, 2]], 2);
        let r = check_tableau_a(&t, 2, &ThetaSet::from_indices([1])).unwrap();
        assert!(r.balanced && r.semistandard);
        assert_eq!(r.total_weight, Weight::zero(2));
        assert!(!r.codominant);
        assert!(t.is_dominant(&ThetaSet::empty()));
    }

    #[test]
    fn empty_tableau() {
        let t = TableauA::new(vec![], 3);
        let r = check_tableau_a(&t, 3, &ThetaSet::full(2)).unwrap();
        assert!(r.semistandard && r.balanced && r.codominant);
        assert!(check_tableau_a(&TableauA::new(vec![vec![4]], 3), 3, &ThetaSet::empty()).is_err());
    }

    #[test]
    fn strips() {
        let row = TableauA::new(vec![vec![1, 2]], 2);
        let c = strip_decompose(&row).unwrap();
        assert_eq!(c.iter().map(|d| d.rows().to_vec()).collect::<Vec<_>>(), vec![vec![0, 0], vec![1, 0], vec![2, 0]]);
        let col = TableauA::new(vec![vec![1], vec![2]], 2);
        let c = strip_decompose(&col).unwrap();
        assert_eq!(c[1].rows(), &[1, 0]);
        assert_eq!(c[2].rows(), &[1, 1]);
        let t = figure1();
        assert_eq!(strips_to_tableau(&strip_decompose(&t).unwrap()).unwrap(), t);
        let bad = TableauA::new(vec![vec![2, 1]], 2);
        assert!(strip_decompose(&bad).is_err());
    }
}
