use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{parse_err, LieError, Result};
use crate::types::LieType;

/// A set of simple-root indices, 1-based.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ThetaSet {
    pub indices: BTreeSet<usize>,
}

impl ThetaSet {
    pub fn empty() -> Self {
        ThetaSet::default()
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        ThetaSet { indices: it.into_iter().collect() }
    }

    /// Pi_{[x,y]}; empty when y < x.
    pub fn interval(x: usize, y: usize) -> Self {
        if y < x {
            return Self::empty();
        }
        Self::from_indices(x.max(1)..=y)
    }

    /// Pi_odd for rank r.
    pub fn odd(r: usize) -> Self {
        Self::from_indices((1..=r).step_by(2))
    }

    pub fn full(r: usize) -> Self {
        Self::interval(1, r)
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.contains(&i)
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.indices.iter().copied()
    }

    pub fn union(&self, other: &ThetaSet) -> ThetaSet {
        ThetaSet { indices: self.indices.union(&other.indices).copied().collect() }
    }

    pub fn is_disjoint(&self, other: &ThetaSet) -> bool {
        self.indices.is_disjoint(&other.indices)
    }

    pub fn validate(&self, ty: &LieType) -> Result<()> {
        match self.indices.iter().find(|&&i| i == 0 || i > ty.rank) {
            Some(&index) => Err(LieError::ThetaIndex { index, ty: ty.to_string() }),
            None => Ok(()),
        }
    }

    /// Image under the diagram automorphism swapping r-1 and r (type D only).
    pub fn sigma(&self, ty: &LieType) -> ThetaSet {
        if ty.family != crate::types::Family::D {
            return self.clone();
        }
        let r = ty.rank;
        Self::from_indices(self.iter().map(|i| {
            if i == r {
                r - 1
            } else if i == r - 1 {
                r
            } else {
                i
            }
        }))
    }

    /// Parses "1,3" or "{1,3}"; "" and "{}" are the empty set.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('{').trim_end_matches('}').trim();
        if t.is_empty() {
            return Ok(Self::empty());
        }
        t.split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| parse_err("theta set", s)))
            .collect::<Result<BTreeSet<_>>>()
            .map(|indices| ThetaSet { indices })
    }
}

impl fmt::Display for ThetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.indices.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i)?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn intervals_and_odd() {
        assert!(ThetaSet::interval(3, 2).is_empty());
        assert_eq!(ThetaSet::odd(5), ThetaSet::from_indices([1, 3, 5]));
        assert_eq!(ThetaSet::parse("{1, 3}").unwrap().to_string(), "{1,3}");
        assert!(ThetaSet::parse("").unwrap().is_empty());
    }

    #[test]
    fn sigma_swaps_last_two_in_d() {
        let d4 = LieType::d(4);
        let t = ThetaSet::from_indices([1, 3]);
        assert_eq!(t.sigma(&d4), ThetaSet::from_indices([1, 4]));
        assert_eq!(t.sigma(&d4).sigma(&d4), t);
        assert_eq!(t.sigma(&LieType::b(4)), t);
    }
}
