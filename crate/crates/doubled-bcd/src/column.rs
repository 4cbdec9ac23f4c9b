//! Strongly standard columns over A_r and the weights they encode.

use std::fmt;
use std::str::FromStr;

use lie_core::{Rat, Weight};
use serde::{Serialize, Serializer};

use crate::error::{BcdError, Result};
use crate::symbol::{format_symbol, key};

/// A strongly standard column, symbols sorted by the total order of A_r.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Column {
    symbols: Vec<i32>,
}

impl Column {
    /// Sorts the symbols; fails if a symbol is 0, repeated, or occurs together with its bar.
    pub fn new(mut symbols: Vec<i32>) -> Result<Self> {
        symbols.sort_by_key(|&s| key(s));
        let mut seen = std::collections::HashSet::new();
        for &s in &symbols {
            if s == 0 || !seen.insert(s.abs()) {
                return Err(BcdError::NotStronglyStandard(format!("{symbols:?}")));
            }
        }
        Ok(Column { symbols })
    }

    pub fn empty() -> Self {
        Column { symbols: Vec::new() }
    }

    /// The column of a vector in {-1,0,1}^r.
    pub fn from_signs(v: &[i64]) -> Result<Self> {
        let mut s = Vec::new();
        for (i, &x) in v.iter().enumerate() {
            match x {
                0 => {}
                1 => s.push(i as i32 + 1),
                -1 => s.push(-(i as i32 + 1)),
                _ => return Err(BcdError::NotStronglyStandard(format!("{v:?}"))),
            }
        }
        Column::new(s)
    }

    pub fn symbols(&self) -> &[i32] {
        &self.symbols
    }

    pub fn height(&self) -> usize {
        self.symbols.len()
    }

    pub fn get(&self, i: usize) -> i32 {
        self.symbols[i]
    }

    pub fn contains(&self, s: i32) -> bool {
        self.symbols.contains(&s)
    }

    pub fn max_abs(&self) -> usize {
        self.symbols.iter().map(|s| s.unsigned_abs() as usize).max().unwrap_or(0)
    }

    pub fn barred(&self) -> usize {
        self.symbols.iter().filter(|&&s| s < 0).count()
    }

    pub fn unbarred(&self) -> usize {
        self.height() - self.barred()
    }

    pub fn check_rank(&self, r: usize) -> Result<()> {
        match self.symbols.iter().find(|s| s.unsigned_abs() as usize > r) {
            Some(&s) => Err(BcdError::SymbolRange { symbol: s, rank: r }),
            None => Ok(()),
        }
    }

    /// nu(C) as integer coordinates.
    pub fn weight_ints(&self, r: usize) -> Vec<i64> {
        let mut v = vec![0; r];
        for &s in &self.symbols {
            v[s.unsigned_abs() as usize - 1] += s.signum() as i64;
        }
        v
    }

    /// Replace symbols by other symbols and re-sort.
    pub fn replaced(&self, pairs: &[(i32, i32)]) -> Result<Self> {
        let s = self
            .symbols
            .iter()
            .map(|&x| pairs.iter().find(|(a, _)| *a == x).map_or(x, |(_, b)| *b))
            .collect();
        Column::new(s)
    }

    pub fn map(&self, f: impl Fn(i32) -> i32) -> Result<Self> {
        Column::new(self.symbols.iter().map(|&s| f(s)).collect())
    }

    /// Maximal runs of consecutive absolute values: (a, b, x) meaning
    /// values a+1..=b, x of them unbarred.
    pub fn intervals(&self) -> Vec<(usize, usize, usize)> {
        let mut abs: Vec<(usize, bool)> =
            self.symbols.iter().map(|&s| (s.unsigned_abs() as usize, s > 0)).collect();
        abs.sort();
        let mut out: Vec<(usize, usize, usize)> = Vec::new();
        for (v, pos) in abs {
            match out.last_mut() {
                Some(last) if last.1 == v - 1 => {
                    last.1 = v;
                    last.2 += pos as usize;
                }
                _ => out.push((v - 1, v, pos as usize)),
            }
        }
        out
    }
}

pub fn column_weight(c: &Column, r: usize) -> Result<Weight> {
    c.check_rank(r)?;
    Ok(Weight::new(c.weight_ints(r).into_iter().map(Rat::from_integer).collect()))
}

/// Every nonempty strongly standard column of rank r, ordered by height then symbols.
pub fn all_columns(r: usize) -> Vec<Column> {
    let mut out = Vec::new();
    let total = 3usize.pow(r as u32);
    for mut code in 0..total {
        let mut v = vec![0i64; r];
        for x in v.iter_mut() {
            *x = (code % 3) as i64 - 1;
            code /= 3;
        }
        if v.iter().any(|&x| x != 0) {
            out.push(Column::from_signs(&v).expect("valid signs"));
        }
    }
    out.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.symbols.iter().map(|&s| key(s)).cmp(b.symbols.iter().map(|&s| key(s)))));
    out
}

pub fn columns_of_height(r: usize, h: usize) -> Vec<Column> {
    all_columns(r).into_iter().filter(|c| c.height() == h).collect()
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.symbols.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl Column {
    /// Human-readable form with combining overlines for bars.
    pub fn pretty(&self) -> String {
        let parts: Vec<String> = self.symbols.iter().map(|&s| format_symbol(s)).collect();
        format!("[{}]", parts.join(","))
    }
}

impl FromStr for Column {
    type Err = BcdError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        if s.is_empty() {
            return Ok(Column::empty());
        }
        let v: std::result::Result<Vec<i32>, _> = s.split(',').map(|t| t.trim().parse::<i32>()).collect();
        Column::new(v.map_err(|_| BcdError::Parse(s.to_string()))?)
    }
}

impl Serialize for Column {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        self.symbols.serialize(ser)
    }
}
