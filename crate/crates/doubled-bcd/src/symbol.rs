//! The alphabet 1 < ... < r < r̄ < ... < 1̄, with barred symbols stored as negatives.

use lie_core::{Family, LieType};

/// Sort key for the total order: unbarred ascending, then barred by decreasing value.
pub fn key(s: i32) -> i32 {
    if s > 0 {
        s
    } else {
        i32::MAX / 2 + s
    }
}

pub fn lt_total(s: i32, t: i32) -> bool {
    key(s) < key(t)
}

/// Strict order for type g: total in B/C; in D_r the symbols r and r̄ are incomparable.
pub fn lt_g(s: i32, t: i32, ty: &LieType) -> bool {
    if ty.family == Family::D {
        let r = ty.rank as i32;
        if s.abs() == r && t.abs() == r {
            return false;
        }
    }
    lt_total(s, t)
}

pub fn leq_g(s: i32, t: i32, ty: &LieType) -> bool {
    s == t || lt_g(s, t, ty)
}

/// Symbols of A_r in increasing total order.
pub fn alphabet(r: usize) -> Vec<i32> {
    let r = r as i32;
    (1..=r).chain((1..=r).rev().map(|s| -s)).collect()
}

/// Covering pairs (s, t) of the order on A_r used by type g.
pub fn alphabet_edges(ty: &LieType) -> Vec<(i32, i32)> {
    let r = ty.rank as i32;
    let a = alphabet(ty.rank);
    let mut out = Vec::new();
    for &s in &a {
        for &t in &a {
            if lt_g(s, t, ty) && !a.iter().any(|&x| lt_g(s, x, ty) && lt_g(x, t, ty)) {
                out.push((s, t));
            }
        }
    }
    debug_assert!(out.len() >= (2 * r - 1) as usize);
    out
}

pub fn format_symbol(s: i32) -> String {
    if s > 0 {
        s.to_string()
    } else {
        format!("{}\u{0304}", -s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert!(lt_total(2, -2) && lt_total(-3, -1) && lt_total(3, -3));
        let d3 = LieType::d(3);
        assert!(!lt_g(3, -3, &d3) && !lt_g(-3, 3, &d3));
        assert!(lt_g(2, -3, &d3) && lt_g(3, -2, &d3));
        assert_eq!(alphabet(2), vec![1, 2, -2, -1]);
    }

    #[test]
    fn edges() {
        assert_eq!(alphabet_edges(&LieType::b(2)), vec![(1, 2), (2, -2), (-2, -1)]);
        let e = alphabet_edges(&LieType::d(3));
        assert_eq!(e.len(), 6);
        assert!(e.contains(&(2, -3)) && e.contains(&(3, -2)) && !e.contains(&(3, -3)));
    }
}
