//! Explicit null tableaux of shapes 2C_K, 2C_K + 2C_L and 4C_K used to fill
//! the monoid generators, with their standardness ranges and syndromes.

use std::fmt;
use std::str::FromStr;

use lie_core::{Family, LieType, ThetaSet};
use serde::Serialize;

use crate::column::Column;
use crate::error::{BcdError, Result};
use crate::tableau::DoubledTableau;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FamilyKind {
    /// T[K], shape 2C_K
    T,
    /// T'[K], shape 2C_K with K even
    TPrime,
    /// T[K,L], shape 2C_K + 2C_L with L odd
    TPair,
    /// T'[K,L], K and L odd
    TPairPrime,
    /// S[K], shape 4C_K with K odd
    S,
    /// S'[K]
    SPrime,
}

/// A family member: kind plus the column heights K and (for pairs) L.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub big: usize,
    pub small: Option<usize>,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, big: usize, small: Option<usize>) -> Result<Self> {
        let spec = FamilySpec { kind, big, small };
        spec.check()?;
        Ok(spec)
    }

    pub fn t(big: usize) -> Result<Self> {
        Self::new(FamilyKind::T, big, None)
    }

    pub fn t_prime(big: usize) -> Result<Self> {
        Self::new(FamilyKind::TPrime, big, None)
    }

    pub fn t_pair(big: usize, small: usize) -> Result<Self> {
        Self::new(FamilyKind::TPair, big, Some(small))
    }

    pub fn t_pair_prime(big: usize, small: usize) -> Result<Self> {
        Self::new(FamilyKind::TPairPrime, big, Some(small))
    }

    pub fn s(big: usize) -> Result<Self> {
        Self::new(FamilyKind::S, big, None)
    }

    pub fn s_prime(big: usize) -> Result<Self> {
        Self::new(FamilyKind::SPrime, big, None)
    }

    /// (k, l) with K = 2k or 2k+1 and L = 2l+1.
    pub fn params(&self) -> (usize, usize) {
        (self.big / 2, self.small.map_or(0, |l| l / 2))
    }

    fn check(&self) -> Result<()> {
        let bad = || Err(BcdError::FamilyRange(self.to_string()));
        let (k, l) = self.params();
        let odd = self.big % 2 == 1;
        let paired = matches!(self.kind, FamilyKind::TPair | FamilyKind::TPairPrime);
        if paired != self.small.is_some() {
            return bad();
        }
        if self.small.is_some_and(|s| s % 2 == 0) {
            return bad();
        }
        let ok = match self.kind {
            FamilyKind::T => self.big >= 1,
            FamilyKind::TPrime => !odd && k >= 2,
            FamilyKind::TPair if odd => l <= k,
            FamilyKind::TPair => k >= 1 && l < k,
            FamilyKind::TPairPrime => odd && if l == 0 { k >= 1 } else { l <= k },
            FamilyKind::S => odd && k >= 1,
            FamilyKind::SPrime => odd && k >= 2,
        };
        if ok {
            Ok(())
        } else {
            bad()
        }
    }

    /// Shape 2C_K (+ 2C_L), or 4C_K, as column heights.
    pub fn column_heights(&self) -> Vec<usize> {
        match (self.kind, self.small) {
            (FamilyKind::S | FamilyKind::SPrime, _) => vec![self.big; 4],
            (_, Some(l)) => vec![self.big, self.big, l, l],
            _ => vec![self.big; 2],
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            FamilyKind::T | FamilyKind::TPair => "T",
            FamilyKind::TPrime | FamilyKind::TPairPrime => "T'",
            FamilyKind::S => "S",
            FamilyKind::SPrime => "S'",
        };
        match self.small {
            Some(l) => write!(f, "{name}[{},{l}]", self.big),
            None => write!(f, "{name}[{}]", self.big),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = BcdError;

    fn from_str(s: &str) -> Result<Self> {
        let err = || BcdError::Parse(s.to_string());
        let s = s.trim();
        let open = s.find('[').ok_or_else(err)?;
        let inner = s[open + 1..].strip_suffix(']').ok_or_else(err)?;
        let nums: Vec<usize> =
            inner.split(',').map(|x| x.trim().parse::<usize>().map_err(|_| err())).collect::<Result<_>>()?;
        let kind = match (&s[..open], nums.len()) {
            ("T", 1) => FamilyKind::T,
            ("T'", 1) => FamilyKind::TPrime,
            ("T", 2) => FamilyKind::TPair,
            ("T'", 2) => FamilyKind::TPairPrime,
            ("S", 1) => FamilyKind::S,
            ("S'", 1) => FamilyKind::SPrime,
            _ => return Err(err()),
        };
        FamilySpec::new(kind, nums[0], nums.get(1).copied())
    }
}

/// a, a+1, ..., b (empty when a > b).
fn up(a: usize, b: usize) -> Vec<i32> {
    (a..=b).map(|s| s as i32).collect()
}

/// bar(b), ..., bar(a) for a <= b (empty when a > b).
fn bars(a: usize, b: usize) -> Vec<i32> {
    (a..=b).map(|s| -(s as i32)).collect()
}

fn col(parts: &[Vec<i32>]) -> Column {
    Column::new(parts.concat()).expect("family columns are strongly standard")
}

pub fn family_tableau(spec: &FamilySpec) -> Result<DoubledTableau> {
    spec.check()?;
    let (k, l) = spec.params();
    let odd = spec.big % 2 == 1;
    let cols = match spec.kind {
        FamilyKind::T if odd => vec![col(&[up(1, k + 1), bars(k + 2, 2 * k + 1)]), col(&[up(k + 2, 2 * k + 1), bars(1, k + 1)])],
        FamilyKind::T => vec![col(&[up(1, k), bars(k + 1, 2 * k)]), col(&[up(k + 1, 2 * k), bars(1, k)])],
        FamilyKind::TPrime => vec![
            col(&[up(1, k - 1), vec![k as i32 + 1], bars(k + 2, 2 * k), vec![-(k as i32)]]),
            col(&[vec![k as i32], up(k + 2, 2 * k), vec![-(k as i32 + 1)], bars(1, k - 1)]),
        ],
        FamilyKind::TPair => {
            // K = 2k+1 or 2k; the second column stops at K
            let top = spec.big;
            let tail = col(&[up(k + 2, k + l + 1), bars(k - l + 1, k + 1)]);
            vec![
                col(&[up(1, k + 1), bars(k + 2, top)]),
                col(&[up(k - l + 1, k + 1), up(k + l + 2, top), bars(k + 2, k + l + 1), bars(1, k - l)]),
                tail.clone(),
                tail,
            ]
        }
        FamilyKind::TPairPrime if l == 0 => {
            let tail = col(&[vec![-(k as i32 + 2)]]);
            vec![
                col(&[up(1, k), vec![k as i32 + 2], bars(k + 3, 2 * k + 1), vec![-(k as i32 + 1)]]),
                col(&[up(k + 1, 2 * k + 1), bars(1, k)]),
                tail.clone(),
                tail,
            ]
        }
        FamilyKind::TPairPrime => {
            let tail = col(&[up(k + 3, k + l + 1), bars(k - l + 1, k + 2)]);
            vec![
                col(&[up(1, k + 2), bars(k + 3, 2 * k + 1)]),
                col(&[up(k - l + 1, k + 2), up(k + l + 2, 2 * k + 1), bars(k + 3, k + l + 1), bars(1, k - l)]),
                tail.clone(),
                tail,
            ]
        }
        FamilyKind::S => {
            let n = 2 * k as i32 + 1;
            vec![
                col(&[up(1, k + 1), vec![n], bars(k + 2, 2 * k)]),
                col(&[up(1, k), bars(k + 1, 2 * k + 1)]),
                col(&[up(k + 1, 2 * k), vec![-n], bars(1, k)]),
                col(&[up(k + 2, 2 * k + 1), bars(1, k + 1)]),
            ]
        }
        FamilyKind::SPrime => {
            let n = 2 * k as i32 + 1;
            vec![
                col(&[up(1, 2 * k + 1)]),
                col(&[up(1, 2 * k - 2), vec![n - 1, -n, -(n - 2)]]),
                col(&[vec![n - 2, -n, -(n - 1)], bars(1, 2 * k - 2)]),
                col(&[vec![n, -(n - 1), -(n - 2)], bars(1, 2 * k - 2)]),
            ]
        }
    };
    DoubledTableau::new(cols)
}

/// Whether the family member is listed as g-standard for this type.
pub fn family_standard_for(spec: &FamilySpec, ty: &LieType) -> bool {
    let (k, l) = spec.params();
    let r = ty.rank;
    let odd = spec.big % 2 == 1;
    let (b, c, d) = (ty.family == Family::B, ty.family == Family::C, ty.family == Family::D);
    let bcd = b || c || d;
    match spec.kind {
        FamilyKind::T if odd => b && r == 2 * k + 1,
        FamilyKind::T => bcd && r >= 2 * k,
        FamilyKind::TPrime => (c || d) && r >= 2 * k,
        FamilyKind::TPair if odd => bcd && r > 2 * k && !(d && l == k && r == 2 * k + 1),
        FamilyKind::TPair => b && r == 2 * k,
        FamilyKind::TPairPrime => (c || d) && r > 2 * k && !(d && l == k && r == 2 * k + 1),
        FamilyKind::S | FamilyKind::SPrime => d && r == 2 * k + 1,
    }
}

/// Simple root shapes indexed by the e-coordinates they involve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Root {
    /// e_i - e_{i+1}
    Diff(usize),
    /// e_i
    Short(usize),
    /// 2 e_i
    Long(usize),
    /// e_i + e_{i+1}
    Sum(usize),
}

impl Root {
    fn index(self, ty: &LieType) -> Option<usize> {
        let r = ty.rank;
        match self {
            Root::Diff(i) if i >= 1 && i < r => Some(i),
            Root::Short(i) if ty.family == Family::B && i == r => Some(r),
            Root::Long(i) if ty.family == Family::C && i == r => Some(r),
            Root::Sum(i) if ty.family == Family::D && i + 1 == r => Some(r),
            _ => None,
        }
    }
}

/// Simple roots at which the tableau fails to be codominant.
pub fn family_expected_syndrome(spec: &FamilySpec, ty: &LieType) -> ThetaSet {
    use Root::*;
    let (k, l) = spec.params();
    let odd = spec.big % 2 == 1;
    let list = match spec.kind {
        FamilyKind::T if odd => vec![Diff(k + 1), Short(k + 1)],
        FamilyKind::T => vec![Diff(k)],
        FamilyKind::TPrime => vec![Diff(k - 1), Diff(k + 1)],
        FamilyKind::TPair if odd => {
            let mut v = vec![Diff(k + 1), Short(k + 1), Long(k + 1)];
            if k == 1 && l == 0 {
                v.push(Sum(2));
            }
            v
        }
        FamilyKind::TPair => vec![Diff(k + 1), Short(k + 1)],
        // e_{k+2} + e_{k+3} is simple only in D_{k+3}, reachable for k <= 2
        FamilyKind::TPairPrime if l == 0 => {
            let mut v = vec![Diff(k), Diff(k + 2), Long(k + 2), Sum(k + 2)];
            if k == 1 {
                v.push(Sum(2));
            }
            v
        }
        FamilyKind::TPairPrime => vec![Diff(k + 2), Long(k + 2), Sum(k + 2)],
        FamilyKind::S => vec![Diff(k), Diff(k + 1), Sum(2)],
        FamilyKind::SPrime => vec![Diff(2 * k - 2), Diff(2 * k), Sum(2 * k)],
    };
    ThetaSet::from_indices(list.into_iter().filter_map(|a| a.index(ty)))
}

/// Every family member with k, l <= kmax (and l <= lmax).
pub fn all_family_specs(kmax: usize, lmax: usize) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for k in 0..=kmax {
        out.extend(FamilySpec::t(2 * k + 1));
        out.extend(FamilySpec::t(2 * k));
        out.extend(FamilySpec::t_prime(2 * k));
        for l in 0..=lmax.min(k) {
            out.extend(FamilySpec::t_pair(2 * k + 1, 2 * l + 1));
            out.extend(FamilySpec::t_pair(2 * k, 2 * l + 1));
            out.extend(FamilySpec::t_pair_prime(2 * k + 1, 2 * l + 1));
        }
        out.extend(FamilySpec::s(2 * k + 1));
        out.extend(FamilySpec::s_prime(2 * k + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::evaluate_tableau;

    #[test]
    fn parse_and_display() {
        for s in ["T[5]", "T[4]", "T'[4]", "T[5,3]", "T[4,1]", "T'[5,1]", "T'[5,3]", "S[3]", "S'[5]"] {
            let f: FamilySpec = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
        }
        assert!("T'[3]".parse::<FamilySpec>().is_err());
        assert!("T[3,5]".parse::<FamilySpec>().is_err());
        assert!("T[4,5]".parse::<FamilySpec>().is_err());
        assert!("S'[3]".parse::<FamilySpec>().is_err());
        assert!("T'[1,1]".parse::<FamilySpec>().is_err());
        assert!("Q[1]".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn small_members() {
        let t2 = family_tableau(&FamilySpec::t(2).unwrap()).unwrap();
        assert_eq!(t2, DoubledTableau::parse_columns(&["1,-2", "2,-1"]).unwrap());
        let t1 = family_tableau(&FamilySpec::t(1).unwrap()).unwrap();
        assert_eq!(t1, DoubledTableau::parse_columns(&["1", "-1"]).unwrap());
        let t11 = family_tableau(&FamilySpec::t_pair(1, 1).unwrap()).unwrap();
        assert_eq!(t11, DoubledTableau::parse_columns(&["1", "1", "-1", "-1"]).unwrap());
    }

    #[test]
    fn s_prime_five_is_null_in_d5() {
        let s = family_tableau(&FamilySpec::s_prime(5).unwrap()).unwrap();
        assert_eq!(s.columns[1].symbols(), &[1, 2, 4, -5, -3]);
        let d5 = LieType::d(5);
        let rep = evaluate_tableau(&s, &d5, &ThetaSet::empty()).unwrap();
        assert!(rep.null && rep.g_standard);
        assert_eq!(rep.syndrome, family_expected_syndrome(&FamilySpec::s_prime(5).unwrap(), &d5));
    }
}
