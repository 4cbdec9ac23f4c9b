//! Doubled tableaux: sequences of strongly standard columns read left to right.

use lie_core::{classify_weight, Family, LieType, Rat, ThetaSet, Weight};
use serde::Serialize;
use young_a::YoungDiagram;

use crate::column::Column;
use crate::error::{BcdError, Result};
use crate::order::{admissible_pair, young_compare};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct DoubledTableau {
    pub columns: Vec<Column>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableauReport {
    pub young: bool,
    pub admissible: bool,
    pub g_standard: bool,
    pub weight: Weight,
    pub null: bool,
    pub sign: i8,
    pub codominant: bool,
    pub syndrome: ThetaSet,
}

impl DoubledTableau {
    pub fn new(columns: Vec<Column>) -> Result<Self> {
        if columns.windows(2).any(|w| w[0].height() < w[1].height()) {
            return Err(BcdError::MalformedShape);
        }
        Ok(DoubledTableau { columns })
    }

    pub fn empty() -> Self {
        DoubledTableau { columns: Vec::new() }
    }

    pub fn parse_columns(cols: &[&str]) -> Result<Self> {
        let cs: Result<Vec<Column>> = cols.iter().map(|s| s.parse()).collect();
        DoubledTableau::new(cs?)
    }

    pub fn width(&self) -> usize {
        self.columns.len()
    }

    pub fn height(&self) -> usize {
        self.columns.first().map_or(0, |c| c.height())
    }

    pub fn size(&self) -> usize {
        self.columns.iter().map(|c| c.height()).sum()
    }

    /// Largest absolute value of a symbol.
    pub fn max_abs(&self) -> usize {
        self.columns.iter().map(|c| c.max_abs()).max().unwrap_or(0)
    }

    pub fn shape(&self, r: usize) -> Result<YoungDiagram> {
        let heights: Vec<usize> = self.columns.iter().map(|c| c.height()).collect();
        Ok(YoungDiagram::from_column_heights(&heights, r)?)
    }

    /// Sum of the column weights (twice the total weight).
    pub fn doubled_weight(&self, r: usize) -> Vec<i64> {
        let mut v = vec![0; r];
        for c in &self.columns {
            for (a, b) in v.iter_mut().zip(c.weight_ints(r)) {
                *a += b;
            }
        }
        v
    }

    pub fn weight(&self, r: usize) -> Weight {
        Weight::from_doubled(&self.doubled_weight(r))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }

    pub fn pretty(&self) -> String {
        self.columns.iter().map(|c| c.pretty()).collect::<Vec<_>>().join(" ")
    }
}

pub(crate) fn require_bcd(ty: &LieType) -> Result<()> {
    if ty.is_bcd() {
        Ok(())
    } else {
        Err(BcdError::NotBcd(ty.to_string()))
    }
}

/// Simple roots of B_r, C_r, D_r as integer e-coordinates.
pub fn simple_root_ints(ty: &LieType) -> Vec<Vec<i64>> {
    let r = ty.rank;
    let mut out = Vec::with_capacity(r);
    for i in 0..r.saturating_sub(1) {
        let mut v = vec![0; r];
        v[i] = 1;
        v[i + 1] = -1;
        out.push(v);
    }
    let mut v = vec![0; r];
    match ty.family {
        Family::B => v[r - 1] = 1,
        Family::C => v[r - 1] = 2,
        _ => {
            v[r - 2] = 1;
            v[r - 1] = 1;
        }
    }
    out.push(v);
    out
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Sign: 0 without a height-r column; in type D the parity of bars of such a column, +1 otherwise.
pub fn tableau_sign(t: &DoubledTableau, ty: &LieType) -> i8 {
    match t.columns.iter().find(|c| c.height() == ty.rank) {
        None => 0,
        Some(c) if ty.family == Family::D && c.barred() % 2 == 1 => -1,
        Some(_) => 1,
    }
}

/// Simple roots at which some left prefix of columns pairs positively.
pub fn syndrome(t: &DoubledTableau, ty: &LieType) -> ThetaSet {
    let r = ty.rank;
    let roots = simple_root_ints(ty);
    let mut bad = vec![false; r];
    let mut acc = vec![0i64; r];
    for c in &t.columns {
        for (a, b) in acc.iter_mut().zip(c.weight_ints(r)) {
            *a += b;
        }
        for (i, alpha) in roots.iter().enumerate() {
            if dot(alpha, &acc) > 0 {
                bad[i] = true;
            }
        }
    }
    ThetaSet::from_indices((1..=r).filter(|&i| bad[i - 1]))
}

/// Checks H1-H3 and reports weight, sign and codominance data.
pub fn evaluate_tableau(t: &DoubledTableau, ty: &LieType, theta: &ThetaSet) -> Result<TableauReport> {
    require_bcd(ty)?;
    let r = ty.rank;
    for c in &t.columns {
        c.check_rank(r)?;
    }
    if t.columns.windows(2).any(|w| w[0].height() < w[1].height()) {
        return Err(BcdError::MalformedShape);
    }
    let young = t.columns.windows(2).all(|w| young_compare(&w[0], &w[1], ty));
    let n = t.width();
    let admissible = (2..=n)
        .filter(|j| j % 2 == n % 2)
        .all(|j| admissible_pair(&t.columns[j - 1], &t.columns[j - 2], ty));
    let weight = t.weight(r);
    let syn = syndrome(t, ty);
    Ok(TableauReport {
        young,
        admissible,
        g_standard: young && admissible,
        null: weight.is_zero(),
        weight,
        sign: tableau_sign(t, ty),
        codominant: syn.is_disjoint(theta),
        syndrome: syn,
    })
}

/// Psi(lambda) = (2 lambda_1, ..., 2 lambda_{r-1}, 2 |lambda_r|).
pub fn psi_shape(lambda: &Weight, ty: &LieType) -> Result<YoungDiagram> {
    require_bcd(ty)?;
    let class = classify_weight(*ty, lambda)?;
    if !class.dominant || !class.integral {
        return Err(BcdError::NotDominant(lambda.to_string()));
    }
    let two = Rat::from_integer(2);
    let rows: Vec<usize> = lambda
        .coords
        .iter()
        .map(|x| (*x * two).to_integer().unsigned_abs() as usize)
        .collect();
    Ok(YoungDiagram::new(&rows, ty.rank)?)
}

/// Every symbol's absolute value increased by x.
pub fn shift_tableau(t: &DoubledTableau, x: usize) -> DoubledTableau {
    let x = x as i32;
    let columns = t
        .columns
        .iter()
        .map(|c| c.map(|s| s.signum() * (s.abs() + x)).expect("shift keeps columns strongly standard"))
        .collect();
    DoubledTableau { columns }
}

/// Exchange r and r̄ (outer automorphism of D_r).
pub fn sigma_tableau(t: &DoubledTableau, ty: &LieType) -> Result<DoubledTableau> {
    if ty.family != Family::D {
        return Err(BcdError::NotBcd(format!("{ty} (sigma needs type D)")));
    }
    let r = ty.rank as i32;
    let columns: Result<Vec<Column>> =
        t.columns.iter().map(|c| c.map(|s| if s.abs() == r { -s } else { s })).collect();
    Ok(DoubledTableau { columns: columns? })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tab(cols: &[&str]) -> DoubledTableau {
        DoubledTableau::parse_columns(cols).unwrap()
    }

    #[test]
    fn t2_in_b2() {
        let t = tab(&["1,-2", "2,-1"]);
        let rep = evaluate_tableau(&t, &LieType::b(2), &ThetaSet::empty()).unwrap();
        assert!(rep.g_standard && rep.null);
        assert_eq!(rep.syndrome, ThetaSet::from_indices([1]));
        assert_eq!(rep.sign, 1);
    }

    #[test]
    fn vector_zero_weight() {
        let t = tab(&["2", "-2"]);
        let rep = evaluate_tableau(&t, &LieType::b(2), &ThetaSet::from_indices([2])).unwrap();
        assert!(rep.g_standard && rep.null && !rep.codominant);
        assert_eq!(rep.syndrome, ThetaSet::from_indices([2]));
    }

    #[test]
    fn empty_tableau() {
        let rep = evaluate_tableau(&DoubledTableau::empty(), &LieType::d(3), &ThetaSet::full(3)).unwrap();
        assert!(rep.g_standard && rep.null && rep.codominant);
        assert_eq!(rep.sign, 0);
        assert!(rep.syndrome.is_empty());
    }

    #[test]
    fn psi() {
        let p = psi_shape(&Weight::from_ints(&[2, 1, 1]), &LieType::b(3)).unwrap();
        assert_eq!(p.rows(), &[4, 2, 2]);
        let p = psi_shape(&Weight::from_ints(&[1, 1, -1]), &LieType::d(3)).unwrap();
        assert_eq!(p.rows(), &[2, 2, 2]);
        assert!(psi_shape(&Weight::zero(2), &LieType::c(2)).unwrap().is_empty());
        assert!(psi_shape(&Weight::from_ints(&[0, 1]), &LieType::c(2)).is_err());
    }

    #[test]
    fn shift_and_sigma() {
        let t = tab(&["1,-2", "2,-1"]);
        let s = shift_tableau(&t, 1);
        assert_eq!(s, tab(&["2,-3", "3,-2"]));
        assert_eq!(shift_tableau(&t, 0), t);
        let rep = evaluate_tableau(&s, &LieType::b(3), &ThetaSet::empty()).unwrap();
        assert!(rep.g_standard && rep.null);
        assert_eq!(rep.syndrome, ThetaSet::from_indices([2]));
        let d3 = LieType::d(3);
        let u = tab(&["1,2,3", "1,2,3"]);
        let v = sigma_tableau(&u, &d3).unwrap();
        assert_eq!(tableau_sign(&u, &d3), 1);
        assert_eq!(tableau_sign(&v, &d3), -1);
        assert_eq!(sigma_tableau(&v, &d3).unwrap(), u);
        assert!(sigma_tableau(&u, &LieType::b(3)).is_err());
    }
}
