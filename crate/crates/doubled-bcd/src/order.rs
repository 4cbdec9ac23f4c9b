//! Young order (with parity in type D), its Hasse diagram, and admissible pairs.

use std::collections::{HashSet, VecDeque};

use lie_core::{Family, LieType};

use crate::column::Column;
use crate::error::{BcdError, Result};
use crate::symbol::{alphabet, alphabet_edges, leq_g, lt_g};

fn require_bcd(ty: &LieType) -> Result<()> {
    if ty.is_bcd() {
        Ok(())
    } else {
        Err(BcdError::NotBcd(ty.to_string()))
    }
}

/// C ⪯ C' for the order attached to g: the two columns side by side form a
/// semistandard tableau, plus the rectangle parity rule in type D.
pub fn young_compare(c: &Column, d: &Column, ty: &LieType) -> bool {
    if c.height() < d.height() {
        return false;
    }
    if !(0..d.height()).all(|i| leq_g(c.get(i), d.get(i), ty)) {
        return false;
    }
    ty.family != Family::D || parity_ok(c, d, ty.rank)
}

/// Consecutive columns compare; enough since the order is transitive.
pub fn young_nondecreasing(cols: &[Column], ty: &LieType) -> bool {
    cols.windows(2).all(|w| young_compare(&w[0], &w[1], ty))
}

/// Weight norms (column heights) nonincreasing and, in type D, all full-height
/// columns in one Weyl orbit, i.e. with the same parity of barred symbols.
pub fn bruhat_side_conditions(cols: &[Column], ty: &LieType) -> bool {
    if !cols.windows(2).all(|w| w[0].height() >= w[1].height()) {
        return false;
    }
    if ty.family != Family::D {
        return true;
    }
    let mut parities = cols.iter().filter(|c| c.height() == ty.rank).map(|c| c.barred() % 2);
    match parities.next() {
        Some(p) => parities.all(|q| q == p),
        None => true,
    }
}

fn parity_ok(c: &Column, d: &Column, r: usize) -> bool {
    let h = d.height();
    for i0 in 0..h {
        for k in 1..=h - i0 {
            let want = r - k + 1..=r;
            let abs_set = |col: &Column| {
                let mut v: Vec<usize> = (i0..i0 + k).map(|i| col.get(i).unsigned_abs() as usize).collect();
                v.sort();
                v
            };
            let target: Vec<usize> = want.collect();
            if abs_set(c) == target && abs_set(d) == target {
                let unbarred = (i0..i0 + k).filter(|&i| c.get(i) > 0).count()
                    + (i0..i0 + k).filter(|&i| d.get(i) > 0).count();
                if unbarred % 2 == 1 {
                    return false;
                }
            }
        }
    }
    true
}

fn diff(a: &Column, b: &Column) -> Vec<i32> {
    a.symbols().iter().copied().filter(|s| !b.contains(*s)).collect()
}

/// True iff C' covers C in the Hasse diagram of the Young order for g.
pub fn hasse_cover(c: &Column, d: &Column, ty: &LieType) -> bool {
    if c == d {
        return false;
    }
    let r = ty.rank as i32;
    if c.height() == d.height() {
        let (only_c, only_d) = (diff(c, d), diff(d, c));
        match (only_c.as_slice(), only_d.as_slice()) {
            ([s], [t]) => {
                let (s, t) = (*s, *t);
                lt_g(s, t, ty)
                    && alphabet(ty.rank)
                        .into_iter()
                        .filter(|&x| lt_g(s, x, ty) && lt_g(x, t, ty))
                        .all(|x| c.contains(-x) && d.contains(-x))
            }
            ([_, _], [_, _]) => alphabet_edges(ty).into_iter().any(|(s, t)| {
                s != -t && {
                    let mut a = vec![s, -t];
                    let mut b = vec![t, -s];
                    a.sort();
                    b.sort();
                    let mut oc = only_c.clone();
                    let mut od = only_d.clone();
                    oc.sort();
                    od.sort();
                    oc == a && od == b
                }
            }) && young_compare(c, d, ty),
            _ => false,
        }
    } else if c.height() == d.height() + 1 {
        let last = c.get(c.height() - 1);
        if c.symbols()[..d.height()] != *d.symbols() {
            return false;
        }
        let absent: Vec<i32> = (1..=r)
            .filter(|&v| !d.symbols().iter().any(|s| s.abs() == v))
            .flat_map(|v| [v, -v])
            .collect();
        !absent.iter().any(|&x| lt_g(last, x, ty))
    } else {
        false
    }
}

/// Closed-form admissibility of the pair (C, C') with C ⪰ C'.
pub fn admissible_pair(c: &Column, d: &Column, ty: &LieType) -> bool {
    if c.height() != d.height() || !young_compare(d, c, ty) {
        return false;
    }
    let (ic, id) = (c.intervals(), d.intervals());
    if ic.len() != id.len() {
        return false;
    }
    let r = ty.rank;
    ic.iter().zip(&id).all(|(&(a, b, x), &(a2, b2, x2))| {
        a == a2
            && b == b2
            && if b == r {
                match ty.family {
                    Family::B => true,
                    Family::D => x % 2 == x2 % 2,
                    _ => x == x2,
                }
            } else {
                x == x2
            }
    })
}

pub const DEFAULT_ORACLE_RANK: usize = 8;

/// Breadth-first search from C' using the admissible simple-reflection rewrites.
pub fn admissible_oracle(c: &Column, d: &Column, ty: &LieType) -> Result<bool> {
    require_bcd(ty)?;
    if ty.rank > DEFAULT_ORACLE_RANK {
        return Err(BcdError::RankBound { rank: ty.rank, bound: DEFAULT_ORACLE_RANK });
    }
    let r = ty.rank as i32;
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(d.clone());
    queue.push_back(d.clone());
    while let Some(cur) = queue.pop_front() {
        if cur == *c {
            return Ok(true);
        }
        let mut next = Vec::new();
        for i in 1..r {
            if cur.contains(i) && cur.contains(-(i + 1)) {
                next.push(cur.replaced(&[(i, i + 1), (-(i + 1), -i)])?);
            }
        }
        match ty.family {
            Family::B if cur.contains(r) => next.push(cur.replaced(&[(r, -r)])?),
            Family::D if cur.contains(r - 1) && cur.contains(r) => {
                next.push(cur.replaced(&[(r - 1, -r), (r, -(r - 1))])?)
            }
            _ => {}
        }
        for n in next {
            if seen.insert(n.clone()) {
                queue.push_back(n);
            }
        }
    }
    Ok(false)
}
