//! Closed-form existence of Theta-codominant balanced fillings.

use lie_core::ThetaSet;

use crate::diagram::YoungDiagram;
use crate::error::{Result, YoungError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThetaPattern {
    /// Pi_{[1,k-1]}
    Initial(usize),
    /// Pi_odd, order even
    Odd,
    Empty,
}

impl ThetaPattern {
    pub fn detect(theta: &ThetaSet, n: usize) -> Result<Self> {
        if theta.is_empty() {
            return Ok(ThetaPattern::Empty);
        }
        let k = theta.len() + 1;
        if theta.iter().eq(1..k) && k <= n {
            return Ok(ThetaPattern::Initial(k));
        }
        if n % 2 == 0 && *theta == ThetaSet::odd(n - 1) {
            return Ok(ThetaPattern::Odd);
        }
        Err(YoungError::UnsupportedTheta(theta.to_string()))
    }
}

/// The two inequalities characterising Pi_odd-codominant balanced fillings, n = 2m.
pub fn slmh_condition(p: &YoungDiagram, m: usize) -> bool {
    let r = |i: usize| p.row(i) as i64;
    if m == 0 {
        return true;
    }
    let first = -r(1) + (2..=m + 1).map(r).sum::<i64>() - (m + 2..=2 * m).map(r).sum::<i64>();
    let second = -(1..m).map(r).sum::<i64>() + (m..2 * m).map(r).sum::<i64>() - r(2 * m);
    first >= 0 && second <= 0
}

pub fn exists_balanced_filling(p: &YoungDiagram, n: usize, theta: &ThetaSet) -> Result<bool> {
    let pattern = ThetaPattern::detect(theta, n)?;
    if n == 0 {
        return Ok(p.is_empty());
    }
    if p.size() % n != 0 || p.order() > n && p.row(n + 1) > 0 {
        return Ok(false);
    }
    let a = p.size() / n;
    Ok(match pattern {
        ThetaPattern::Empty => true,
        ThetaPattern::Initial(k) => p.row(k) >= a && a >= p.row(n - k + 1),
        ThetaPattern::Odd => slmh_condition(p, n / 2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn yd(r: &[usize], n: usize) -> YoungDiagram {
        YoungDiagram::new(r, n).unwrap()
    }

    #[test]
    fn examples() {
        assert!(exists_balanced_filling(&yd(&[2, 1, 0], 3), 3, &ThetaSet::empty()).unwrap());
        assert!(exists_balanced_filling(&yd(&[1, 1, 1, 1], 4), 4, &ThetaSet::odd(3)).unwrap());
        assert!(exists_balanced_filling(&yd(&[1, 1], 2), 2, &ThetaSet::odd(1)).unwrap());
        assert!(!exists_balanced_filling(&yd(&[2, 0], 2), 2, &ThetaSet::odd(1)).unwrap());
        assert!(!exists_balanced_filling(&yd(&[2, 1, 0], 3), 3, &ThetaSet::from_indices([1, 2])).unwrap());
        assert!(exists_balanced_filling(&yd(&[3, 1, 0], 4), 4, &ThetaSet::from_indices([2])).is_err());
    }

    #[test]
    fn patterns() {
        assert_eq!(ThetaPattern::detect(&ThetaSet::from_indices([1, 2]), 4).unwrap(), ThetaPattern::Initial(3));
        assert_eq!(ThetaPattern::detect(&ThetaSet::from_indices([1, 3]), 4).unwrap(), ThetaPattern::Odd);
        assert!(ThetaPattern::detect(&ThetaSet::from_indices([1, 3]), 5).is_err());
    }
}
