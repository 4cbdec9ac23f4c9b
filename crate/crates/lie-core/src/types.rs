use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{parse_err, LieError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LieType {
    pub family: Family,
    pub rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A | Family::B | Family::C => rank >= 1,
            Family::D => rank >= 3,
            Family::E6 => rank == 6,
            Family::E7 => rank == 7,
            Family::E8 => rank == 8,
            Family::F4 => rank == 4,
            Family::G2 => rank == 2,
        };
        if !ok {
            return Err(LieError::UnsupportedRank { family: format!("{:?}", family), rank });
        }
        Ok(LieType { family, rank })
    }

    pub fn a(r: usize) -> Self {
        Self::new(Family::A, r).expect("valid A rank")
    }
    pub fn b(r: usize) -> Self {
        Self::new(Family::B, r).expect("valid B rank")
    }
    pub fn c(r: usize) -> Self {
        Self::new(Family::C, r).expect("valid C rank")
    }
    pub fn d(r: usize) -> Self {
        Self::new(Family::D, r).expect("valid D rank")
    }

    pub fn exceptional(family: Family) -> Self {
        let rank = match family {
            Family::E6 => 6,
            Family::E7 => 7,
            Family::E8 => 8,
            Family::F4 => 4,
            Family::G2 => 2,
            _ => panic!("not an exceptional family"),
        };
        LieType { family, rank }
    }

    /// Length of the coordinate vectors used for weights of this type.
    pub fn ambient_dim(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            Family::B | Family::C | Family::D => self.rank,
            Family::E6 | Family::E7 | Family::E8 => 8,
            Family::F4 => 4,
            Family::G2 => 3,
        }
    }

    pub fn is_classical(&self) -> bool {
        matches!(self.family, Family::A | Family::B | Family::C | Family::D)
    }

    pub fn is_bcd(&self) -> bool {
        matches!(self.family, Family::B | Family::C | Family::D)
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "A{}", self.rank),
            Family::B => write!(f, "B{}", self.rank),
            Family::C => write!(f, "C{}", self.rank),
            Family::D => write!(f, "D{}", self.rank),
            other => write!(f, "{:?}", other),
        }
    }
}

impl FromStr for LieType {
    type Err = LieError;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || parse_err("Lie type", s);
        let mut chars = t.chars();
        let head = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        let family = match (head, rank) {
            ('A', _) => Family::A,
            ('B', _) => Family::B,
            ('C', _) => Family::C,
            ('D', _) => Family::D,
            ('E', 6) => Family::E6,
            ('E', 7) => Family::E7,
            ('E', 8) => Family::E8,
            ('F', 4) => Family::F4,
            ('G', 2) => Family::G2,
            _ => return Err(bad()),
        };
        LieType::new(family, rank)
    }
}
