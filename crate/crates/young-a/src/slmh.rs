//! Primitive diagrams of the even-size sl_m(H) monoid and their partners Q^-(P), Q^+(P).

use crate::balanced::slmh_condition;
use crate::diagram::{SkewDiagram, YoungDiagram};
use crate::error::{Result, YoungError};
use crate::thin::bridges;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartnerSide {
    Minus,
    Plus,
}

/// Elements of B' in column notation; n = 2m is the order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BPrime {
    /// C_i, i even
    Col(usize),
    /// C_i + a C_1
    WithOnes { i: usize, a: usize },
    /// a C_{n-1} + C_i
    WithTops { a: usize, i: usize },
    /// C_j + C_i, i < j odd
    Pair { j: usize, i: usize },
    /// 2 C_i, i odd
    Double(usize),
}

/// Classify P as an element of B', if it is one.
pub fn in_b_prime(p: &YoungDiagram) -> Option<BPrime> {
    let n = p.order();
    if n < 4 || n % 2 == 1 {
        return None;
    }
    let x = p.column_counts();
    let nz: Vec<(usize, usize)> = (1..=n).filter(|&i| x[i - 1] > 0).map(|i| (i, x[i - 1])).collect();
    match nz.as_slice() {
        [(i, 1)] if i % 2 == 0 && *i >= 2 => Some(BPrime::Col(*i)),
        [(i, 2)] if i % 2 == 1 && *i >= 3 && *i <= n - 2 => Some(BPrime::Double(*i)),
        [(1, a), (i, 1)] if *a <= (i - 2).min(n - i) && (i + a) % 2 == 0 && *i >= 3 => {
            Some(BPrime::WithOnes { i: *i, a: *a })
        }
        [(i, 1), (top, a)] if *top == n - 1 && *i + 2 <= n && *a <= (*i).min(n - 2 - i) && (i + a) % 2 == 0 => {
            Some(BPrime::WithTops { a: *a, i: *i })
        }
        [(i, 1), (j, 1)] if i % 2 == 1 && j % 2 == 1 && *i >= 3 && *j <= n - 2 => {
            Some(BPrime::Pair { j: *j, i: *i })
        }
        _ => None,
    }
}

fn sum_cols(parts: &[(usize, usize)], order: usize) -> YoungDiagram {
    let mut counts = vec![0; order];
    for &(h, c) in parts {
        if h > 0 && c > 0 {
            counts[h - 1] += c;
        }
    }
    YoungDiagram::from_column_counts(&counts, order)
}

/// Q^-(P) or Q^+(P), a diagram of order n-2.
pub fn construct_slmh_partner(p: &YoungDiagram, side: PartnerSide) -> Result<YoungDiagram> {
    let n = p.order();
    let m = n / 2;
    let kind = in_b_prime(p).ok_or_else(|| YoungError::NotInBasis(p.to_string()))?;
    let o = n - 2;
    let (minus, plus): (Vec<(usize, usize)>, Vec<(usize, usize)>) = match kind {
        BPrime::Col(i) if i < n => (vec![(i - 2, 1)], vec![(i, 1)]),
        BPrime::Col(i) => (vec![(i - 2, 1)], vec![(i - 2, 1)]),
        BPrime::WithOnes { i, a } => {
            let low = vec![(i - 1, 1), (1, a - 1)];
            if a < n - i {
                (low, vec![(i, 1), (1, a)])
            } else {
                (low.clone(), low)
            }
        }
        BPrime::WithTops { a, i } => {
            let high = vec![(n - 2, 1), (n - 3, a - 1), (i - 1, 1)];
            if a == i {
                (high.clone(), high)
            } else {
                (vec![(n - 3, a), (i.saturating_sub(2), 1)], high)
            }
        }
        BPrime::Pair { j, i } => {
            let mid = vec![(j - 1, 1), (i - 1, 1)];
            match (i + j).cmp(&n) {
                std::cmp::Ordering::Less => (mid, vec![(j, 1), (i, 1)]),
                std::cmp::Ordering::Equal => (mid.clone(), mid),
                std::cmp::Ordering::Greater => (vec![(j - 2, 1), (i - 2, 1)], mid),
            }
        }
        BPrime::Double(i) => {
            let mid = vec![(i, 1), (i - 2, 1)];
            match i.cmp(&m) {
                std::cmp::Ordering::Less => (mid, vec![(i, 2)]),
                std::cmp::Ordering::Equal => (mid.clone(), mid),
                std::cmp::Ordering::Greater => (vec![(i - 2, 2)], mid),
            }
        }
    };
    Ok(sum_cols(if side == PartnerSide::Minus { &minus } else { &plus }, o))
}

/// Conditions (i)-(iv) relating P of order 2m and Q of order 2m-2.
pub fn induction_pair_ok(p: &YoungDiagram, q: &YoungDiagram) -> bool {
    let n = p.order();
    if n < 4 || q.order() + 2 != n {
        return false;
    }
    let m = n / 2;
    if !slmh_condition(q, m - 1) || (p.size() - q.size().min(p.size())) % 2 == 1 {
        return false;
    }
    let Ok(qn) = q.with_order(n) else { return false };
    let Ok(s) = SkewDiagram::new(p.clone(), qn) else { return false };
    if s.thickness() > 2 {
        return false;
    }
    let b = bridges(&s, n);
    let total: usize = b.iter().sum();
    b.iter().all(|&x| 2 * x <= total)
}

/// All elements of B' for a given even order n.
pub fn b_prime_elements(n: usize) -> Vec<YoungDiagram> {
    let mut out = Vec::new();
    let col = |i: usize| YoungDiagram::column(i, n);
    for i in (2..=n).step_by(2) {
        out.push(col(i));
    }
    for i in 3..=n {
        for a in 1..=(i - 2).min(n - i) {
            if (i + a) % 2 == 0 {
                out.push(sum_cols(&[(i, 1), (1, a)], n));
            }
        }
    }
    for i in 1..=n.saturating_sub(2) {
        for a in 1..=i.min(n - 2 - i) {
            if (i + a) % 2 == 0 {
                let d = sum_cols(&[(n - 1, a), (i, 1)], n);
                if !out.contains(&d) {
                    out.push(d);
                }
            }
        }
    }
    for i in (3..=n.saturating_sub(2)).step_by(2) {
        for j in (i..=n - 2).step_by(2) {
            out.push(sum_cols(&[(i, 1), (j, 1)], n));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(i: usize, n: usize) -> YoungDiagram {
        YoungDiagram::column(i, n)
    }

    #[test]
    fn table_examples() {
        let m = 3;
        let n = 2 * m;
        for side in [PartnerSide::Minus, PartnerSide::Plus] {
            assert_eq!(construct_slmh_partner(&c(n, n), side).unwrap(), c(n - 2, n - 2));
            let p = &c(m, n) + &c(m, n);
            assert_eq!(construct_slmh_partner(&p, side).unwrap(), &c(m, n - 2) + &c(m - 2, n - 2));
        }
        let n = 8;
        let p = &c(5, n) + &c(3, n);
        assert_eq!(construct_slmh_partner(&p, PartnerSide::Plus).unwrap(), &c(4, 6) + &c(2, 6));
        assert!(construct_slmh_partner(&c(3, 8), PartnerSide::Plus).is_err());
    }

    #[test]
    fn partners_satisfy_the_lemma() {
        for m in 2..=6 {
            let n = 2 * m;
            let elems = b_prime_elements(n);
            for p in &elems {
                assert!(in_b_prime(p).is_some(), "{p}");
                assert!(slmh_condition(p, m) && p.size() % 2 == 0, "{p}");
                let target = (n - 2) * p.size();
                let lo = construct_slmh_partner(p, PartnerSide::Minus).unwrap();
                let hi = construct_slmh_partner(p, PartnerSide::Plus).unwrap();
                assert_eq!(lo.size(), 2 * (target / (2 * n)), "{p}");
                assert_eq!(hi.size(), 2 * target.div_ceil(2 * n), "{p}");
                assert!(induction_pair_ok(p, &lo), "Q- of {p}");
                assert!(induction_pair_ok(p, &hi), "Q+ of {p}");
            }
        }
    }

    #[test]
    fn basis_is_primitive_and_complete() {
        // brute force over diagrams with few columns
        for m in 2..=3 {
            let n = 2 * m;
            let elems = b_prime_elements(n);
            let mut members = Vec::new();
            let mut stack = vec![vec![0usize; n]];
            while let Some(x) = stack.pop() {
                let d = YoungDiagram::from_column_counts(&x, n);
                if d.width() > 4 {
                    continue;
                }
                if !d.is_empty() && d.size() % 2 == 0 && slmh_condition(&d, m) {
                    members.push(d.clone());
                }
                let last = x.iter().rposition(|&v| v > 0).unwrap_or(0);
                for i in last..n {
                    let mut y = x.clone();
                    y[i] += 1;
                    stack.push(y);
                }
            }
            let is_sum = |d: &YoungDiagram| {
                members.iter().any(|a| {
                    d.contains(a) && a != d && {
                        let rest: Vec<usize> =
                            d.rows().iter().zip(a.rows()).map(|(x, y)| x - y).collect();
                        let r = YoungDiagram::new(&rest, n);
                        r.is_ok_and(|r| members.contains(&r))
                    }
                })
            };
            let primitive: Vec<&YoungDiagram> = members.iter().filter(|d| !is_sum(d)).collect();
            for d in &primitive {
                assert!(elems.contains(d), "{d} primitive but not listed");
            }
            for e in &elems {
                if e.width() <= 4 {
                    assert!(primitive.contains(&e), "{e} listed but not primitive");
                }
            }
        }
    }
}
