use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{LieError, Result};
use crate::roots::RootData;
use crate::types::{Family, LieType};
use crate::weight::{Rat, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WeightClass {
    pub dominant: bool,
    pub integral: bool,
    pub radical: bool,
}

fn nonincreasing(xs: &[Rat]) -> bool {
    xs.windows(2).all(|w| w[0] >= w[1])
}

fn even(x: Rat) -> bool {
    x.is_integer() && x.to_integer() % 2 == 0
}

/// Dominance, integrality and radicality flags.
pub fn classify_weight(ty: LieType, w: &Weight) -> Result<WeightClass> {
    if w.len() != ty.ambient_dim() {
        return Err(LieError::LengthMismatch { ty: ty.to_string(), expected: ty.ambient_dim(), got: w.len() });
    }
    let x = &w.coords;
    let r = ty.rank;
    let class = match ty.family {
        Family::A => {
            let in_h = w.sum().is_zero();
            let integral = in_h && x.iter().all(|c| (c - x[0]).is_integer());
            WeightClass {
                dominant: in_h && nonincreasing(x),
                integral,
                radical: in_h && w.all_integers(),
            }
        }
        Family::B | Family::C | Family::D => {
            let dominant = match ty.family {
                Family::D => nonincreasing(&x[..r - 1]) && x[r - 2] >= x[r - 1].abs(),
                _ => nonincreasing(x) && !x[r - 1].is_negative(),
            };
            let ints = w.all_integers();
            let integral = match ty.family {
                Family::C => ints,
                _ => ints || w.all_half_odd(),
            };
            let radical = match ty.family {
                Family::B => ints,
                _ => ints && even(w.sum()),
            };
            WeightClass { dominant, integral, radical }
        }
        _ => {
            let rd = RootData::new(ty);
            let labels = rd.labels(w);
            let in_span = rd.in_span(w);
            WeightClass {
                dominant: in_span && labels.iter().all(|l| !l.is_negative()),
                integral: in_span && labels.iter().all(|l| l.is_integer()),
                radical: in_span && rd.root_coefficients(w).iter().all(|c| c.is_integer()),
            }
        }
    };
    Ok(class)
}

/// The unique dominant element of the Weyl orbit of v.
pub fn dominant_representative(ty: LieType, v: &Weight) -> Result<Weight> {
    let rd = RootData::new(ty);
    rd.check_len(v)?;
    let mut x = v.coords.clone();
    match ty.family {
        Family::A => {
            x.sort_by(|a, b| b.cmp(a));
        }
        Family::B | Family::C => {
            x.iter_mut().for_each(|c| *c = c.abs());
            x.sort_by(|a, b| b.cmp(a));
        }
        Family::D => {
            let negatives = x.iter().filter(|c| c.is_negative()).count();
            x.iter_mut().for_each(|c| *c = c.abs());
            x.sort_by(|a, b| b.cmp(a));
            let last = x.len() - 1;
            if negatives % 2 == 1 && !x[last].is_zero() {
                x[last] = -x[last];
            }
        }
        _ => return Ok(dominant_by_reflection(&rd, v)),
    }
    Ok(Weight::new(x))
}

/// Reflect along simple roots with negative pairing until dominant.
pub fn dominant_by_reflection(rd: &RootData, v: &Weight) -> Weight {
    let mut w = v.clone();
    loop {
        match (0..rd.rank()).find(|&i| rd.pairing(&w, i).is_negative()) {
            Some(i) => w = rd.reflect(&w, i),
            None => return w,
        }
    }
}

/// The diagram automorphism sigma: negates e_r in type D, identity otherwise.
pub fn apply_sigma(ty: LieType, w: &Weight) -> Weight {
    let mut out = w.clone();
    if ty.family == Family::D {
        if let Some(last) = out.coords.last_mut() {
            *last = -*last;
        }
    }
    out
}

/// Dominant integral weights of B_r, C_r or D_r with lambda_1 <= bound, in
/// lexicographic order of doubled coordinates.
pub fn dominant_weights_bcd(ty: LieType, bound: i64) -> Result<Vec<Weight>> {
    let r = ty.rank;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    fn rec(ty: LieType, r: usize, hi: i64, cur: &mut Vec<i64>, out: &mut Vec<Weight>) -> Result<()> {
        if cur.len() == r {
            let w = Weight::from_doubled(cur);
            let c = classify_weight(ty, &w)?;
            if c.dominant && c.integral {
                out.push(w);
            }
            return Ok(());
        }
        let lo = if cur.len() + 1 == r && ty.family == Family::D { -hi } else { 0 };
        for x in lo..=hi {
            cur.push(x);
            rec(ty, r, if x < 0 { hi } else { x }, cur, out)?;
            cur.pop();
        }
        Ok(())
    }
    rec(ty, r, 2 * bound, &mut cur, &mut out)?;
    Ok(out)
}
