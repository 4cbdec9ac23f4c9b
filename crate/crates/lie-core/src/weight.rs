use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{parse_err, LieError};

pub type Rat = Ratio<i64>;

/// A vector of exact rational coordinates in the ambient e-basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Weight {
    pub coords: Vec<Rat>,
}

impl Weight {
    pub fn new(coords: Vec<Rat>) -> Self {
        Weight { coords }
    }

    pub fn zero(n: usize) -> Self {
        Weight { coords: vec![Rat::zero(); n] }
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        Weight { coords: xs.iter().map(|&x| Rat::from_integer(x)).collect() }
    }

    /// Build from integers that are twice the actual coordinates.
    pub fn from_doubled(xs: &[i64]) -> Self {
        Weight { coords: xs.iter().map(|&x| Rat::new(x, 2)).collect() }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn dot(&self, other: &Weight) -> Rat {
        self.coords
            .iter()
            .zip(&other.coords)
            .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn norm2(&self) -> Rat {
        self.dot(self)
    }

    pub fn scale(&self, k: Rat) -> Weight {
        Weight { coords: self.coords.iter().map(|c| c * k).collect() }
    }

    pub fn sum(&self) -> Rat {
        self.coords.iter().fold(Rat::zero(), |a, b| a + b)
    }

    pub fn all_integers(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    pub fn all_half_odd(&self) -> bool {
        self.coords
            .iter()
            .all(|c| !c.is_integer() && (c * Rat::from_integer(2)).is_integer())
    }

    /// Coordinates as integers, if they all are.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.coords
            .iter()
            .map(|c| if c.is_integer() { Some(c.to_integer()) } else { None })
            .collect()
    }

    /// Twice the coordinates as integers, if denominators divide 2.
    pub fn to_doubled(&self) -> Option<Vec<i64>> {
        self.coords
            .iter()
            .map(|c| {
                let d = c * Rat::from_integer(2);
                if d.is_integer() {
                    Some(d.to_integer())
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn max_abs(&self) -> Rat {
        self.coords.iter().map(|c| c.abs()).max().unwrap_or_else(Rat::zero)
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight { coords: self.coords.iter().map(|a| -a).collect() }
    }
}

fn parse_rat(tok: &str) -> Result<Rat, LieError> {
    let t = tok.trim();
    let bad = || parse_err("rational", tok);
    match t.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Rat::new(n, d))
        }
        None => t.parse::<i64>().map(Rat::from_integer).map_err(|_| bad()),
    }
}

impl FromStr for Weight {
    type Err = LieError;

    /// Parses "3/2,1/2,-1"; the empty string is the zero-length weight.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Weight::default());
        }
        s.split(',').map(parse_rat).collect::<Result<Vec<_>, _>>().map(Weight::new)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", c)?;
        }
        Ok(())
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_roundtrip() {
        let w: Weight = "3/2,1/2,-1,0".parse().unwrap();
        assert_eq!(w.coords[0], Rat::new(3, 2));
        assert_eq!(w.to_string(), "3/2,1/2,-1,0");
        assert!("1,x".parse::<Weight>().is_err());
        assert!("1/0".parse::<Weight>().is_err());
    }

    #[test]
    fn doubled_coordinates() {
        let w = Weight::from_doubled(&[3, 1, -1]);
        assert_eq!(w.to_doubled().unwrap(), vec![3, 1, -1]);
        assert!(w.to_ints().is_none());
        assert!(w.all_half_odd());
    }
}
