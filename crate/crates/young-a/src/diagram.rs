use std::fmt;
use std::ops::Add;

use lie_core::{Rat, Weight};
use serde::{Serialize, Serializer};

use crate::error::{Result, YoungError};

/// Row lengths of a Young diagram of order n, padded with zeros to length n.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YoungDiagram {
    rows: Vec<usize>,
}

impl YoungDiagram {
    pub fn new(rows: &[usize], n: usize) -> Result<Self> {
        let mut r: Vec<usize> = rows.to_vec();
        while r.len() > n && r.last() == Some(&0) {
            r.pop();
        }
        if r.len() > n {
            return Err(YoungError::InvalidDiagram(format!("{rows:?} has more than {n} rows")));
        }
        if r.windows(2).any(|w| w[0] < w[1]) {
            return Err(YoungError::InvalidDiagram(format!("{rows:?} is not nonincreasing")));
        }
        r.resize(n, 0);
        Ok(YoungDiagram { rows: r })
    }

    pub fn empty(n: usize) -> Self {
        YoungDiagram { rows: vec![0; n] }
    }

    /// A single column of height i.
    pub fn column(i: usize, n: usize) -> Self {
        assert!(i <= n);
        YoungDiagram { rows: (0..n).map(|k| usize::from(k < i)).collect() }
    }

    /// Sum of columns: heights[i-1] copies of C_i.
    pub fn from_column_counts(counts: &[usize], n: usize) -> Self {
        let mut d = YoungDiagram::empty(n);
        for (i, &c) in counts.iter().enumerate() {
            for _ in 0..c {
                d = &d + &YoungDiagram::column(i + 1, n);
            }
        }
        d
    }

    pub fn from_column_heights(heights: &[usize], n: usize) -> Result<Self> {
        if heights.windows(2).any(|w| w[0] < w[1]) || heights.iter().any(|&h| h > n) {
            return Err(YoungError::InvalidDiagram(format!("column heights {heights:?}")));
        }
        let rows = (0..n).map(|i| heights.iter().filter(|&&h| h > i).count()).collect();
        Ok(YoungDiagram { rows })
    }

    pub fn parse(s: &str, n: Option<usize>) -> Result<Self> {
        let rows: Vec<usize> = if s.trim().is_empty() {
            Vec::new()
        } else {
            s.split(',')
                .map(|x| x.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| YoungError::InvalidDiagram(s.to_string()))?
        };
        let n = n.unwrap_or(rows.len());
        YoungDiagram::new(&rows, n)
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Length of row i (1-based); zero beyond the order.
    pub fn row(&self, i: usize) -> usize {
        if i == 0 {
            return usize::MAX;
        }
        self.rows.get(i - 1).copied().unwrap_or(0)
    }

    pub fn width(&self) -> usize {
        self.rows.first().copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Height of column j (1-based).
    pub fn col(&self, j: usize) -> usize {
        self.rows.iter().filter(|&&r| r >= j).count()
    }

    pub fn column_heights(&self) -> Vec<usize> {
        (1..=self.width()).map(|j| self.col(j)).collect()
    }

    /// Multiplicity x_i of C_i in the column decomposition, for i = 1..=n.
    pub fn column_counts(&self) -> Vec<usize> {
        let n = self.order();
        (1..=n).map(|i| self.row(i) - if i < n { self.row(i + 1) } else { 0 }).collect()
    }

    pub fn contains(&self, other: &YoungDiagram) -> bool {
        (1..=self.order().max(other.order())).all(|i| other.row(i) <= self.row(i))
    }

    pub fn with_order(&self, n: usize) -> Result<Self> {
        YoungDiagram::new(&self.rows, n)
    }
}

impl Add for &YoungDiagram {
    type Output = YoungDiagram;
    fn add(self, o: &YoungDiagram) -> YoungDiagram {
        let n = self.order().max(o.order());
        YoungDiagram { rows: (1..=n).map(|i| self.row(i) + o.row(i)).collect() }
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl Serialize for YoungDiagram {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

/// P/Q with Q contained in P.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewDiagram {
    pub outer: YoungDiagram,
    pub inner: YoungDiagram,
}

impl SkewDiagram {
    pub fn new(outer: YoungDiagram, inner: YoungDiagram) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(YoungError::InvalidDiagram(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewDiagram { outer, inner })
    }

    pub fn straight(p: YoungDiagram) -> Self {
        let n = p.order();
        SkewDiagram { outer: p, inner: YoungDiagram::empty(n) }
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn width(&self) -> usize {
        self.outer.width()
    }

    /// (top row, bottom row) of column j, 0-based rows, half-open.
    pub fn column_span(&self, j: usize) -> (usize, usize) {
        (self.inner.col(j), self.outer.col(j))
    }

    pub fn thickness(&self) -> usize {
        (1..=self.width()).map(|j| self.outer.col(j) - self.inner.col(j)).max().unwrap_or(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeStats {
    pub offset: Rat,
    pub sln_shape: Weight,
    pub reduced: YoungDiagram,
}

pub fn shape_stats(p: &YoungDiagram) -> ShapeStats {
    let n = p.order();
    let offset = if n == 0 { Rat::from_integer(0) } else { Rat::new(p.size() as i64, n as i64) };
    let sln_shape = Weight::new(p.rows().iter().map(|&r| Rat::from_integer(r as i64) - offset).collect());
    let last = p.row(n);
    let reduced = YoungDiagram { rows: p.rows().iter().map(|r| r - last).collect() };
    ShapeStats { offset, sln_shape, reduced }
}

/// The reduced diagram of sl_n-shape lambda.
pub fn reduced_from_weight(lambda: &Weight) -> Result<YoungDiagram> {
    let n = lambda.len();
    let bad = || YoungError::NotDominant(lambda.to_string());
    if n == 0 {
        return Ok(YoungDiagram::empty(0));
    }
    let last = lambda.coords[n - 1];
    let mut rows = Vec::with_capacity(n);
    for c in &lambda.coords {
        let d = *c - last;
        if !d.is_integer() || d < Rat::from_integer(0) {
            return Err(bad());
        }
        rows.push(d.to_integer() as usize);
    }
    YoungDiagram::new(&rows, n).map_err(|_| bad())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn yd(r: &[usize], n: usize) -> YoungDiagram {
        YoungDiagram::new(r, n).unwrap()
    }

    #[test]
    fn stats() {
        let s = shape_stats(&yd(&[6, 4, 1, 1, 0], 5));
        assert_eq!(s.offset, Rat::new(12, 5));
        let s = shape_stats(&yd(&[2, 1, 0], 3));
        assert_eq!(s.sln_shape, Weight::from_ints(&[1, 0, -1]));
        let s = shape_stats(&yd(&[3, 3, 3], 3));
        assert_eq!(s.sln_shape, Weight::zero(3));
        assert!(s.reduced.is_empty());
    }

    #[test]
    fn columns() {
        let p = yd(&[6, 4, 1, 1, 0], 5);
        assert_eq!(p.column_heights(), vec![4, 2, 2, 2, 1, 1]);
        assert_eq!(p.column_counts(), vec![2, 3, 0, 1, 0]);
        assert_eq!(YoungDiagram::from_column_counts(&p.column_counts(), 5), p);
        assert_eq!(YoungDiagram::from_column_heights(&p.column_heights(), 5).unwrap(), p);
        assert_eq!(p.to_string(), "6,4,1,1,0");
        assert_eq!(YoungDiagram::parse("6,4,1,1", Some(5)).unwrap(), p);
        assert!(YoungDiagram::new(&[1, 2], 2).is_err());
        assert!(YoungDiagram::new(&[1, 1, 1], 2).is_err());
    }

    #[test]
    fn reduced_roundtrip() {
        let p = yd(&[5, 3, 3, 1], 4);
        let s = shape_stats(&p);
        assert_eq!(reduced_from_weight(&s.sln_shape).unwrap(), s.reduced);
        assert!(reduced_from_weight(&Weight::from_ints(&[0, 1, -1])).is_err());
    }

    #[test]
    fn skew_thickness() {
        let s = SkewDiagram::new(yd(&[3, 2, 1], 3), yd(&[1, 0, 0], 3)).unwrap();
        assert_eq!(s.thickness(), 2);
        assert_eq!(s.size(), 5);
        assert!(SkewDiagram::new(yd(&[1], 1), yd(&[2], 1)).is_err());
    }
}
