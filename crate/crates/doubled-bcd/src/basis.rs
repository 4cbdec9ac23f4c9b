//! Null fillings of Psi(lambda) for the generators of the monoid of
//! Levi-spherical weights, one list per classical real form.

use lie_core::{Family, LieType, RealForm, ThetaSet};
use serde::Serialize;

use crate::error::Result;
use crate::families::{family_tableau, FamilySpec};
use crate::tableau::{shift_tableau, DoubledTableau};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisFilling {
    /// e.g. "T[4]" or "1+T[2]"
    pub label: String,
    pub tableau: DoubledTableau,
    /// simple roots at which the filling is expected to fail codominance
    pub syndrome: ThetaSet,
}

fn member(spec: Result<FamilySpec>, shift: usize, syndrome: &[usize]) -> BasisFilling {
    let spec = spec.expect("basis members are in range");
    let t = family_tableau(&spec).expect("basis members are in range");
    let label = if shift == 0 { spec.to_string() } else { format!("{shift}+{spec}") };
    BasisFilling { label, tableau: shift_tableau(&t, shift), syndrome: ThetaSet::from_indices(syndrome.iter().copied()) }
}

fn explicit(label: &str, cols: &[&str], syndrome: &[usize]) -> BasisFilling {
    BasisFilling {
        label: label.to_string(),
        tableau: DoubledTableau::parse_columns(cols).expect("valid columns"),
        syndrome: ThetaSet::from_indices(syndrome.iter().copied()),
    }
}

/// 2C_{2k} rows shared by sp2(p,q) and so*(2r): T, T' or a shifted T[2] by parity of k.
fn even_column_c_or_star(k: usize) -> BasisFilling {
    if k == 1 {
        member(FamilySpec::t(2), 1, &[2])
    } else if k % 2 == 0 {
        member(FamilySpec::t(2 * k), 0, &[k])
    } else {
        member(FamilySpec::t_prime(2 * k), 0, &[k - 1, k + 1])
    }
}

fn so_odd(p: usize, r: usize) -> Vec<BasisFilling> {
    let mut out = Vec::new();
    for k in 1..=p.min(r / 2) {
        out.push(member(FamilySpec::t(2 * k), 0, &[k]));
    }
    for k in 0..p {
        if 2 * k + 1 > r {
            break;
        }
        for l in 0..=k {
            out.push(member(FamilySpec::t_pair(2 * k + 1, 2 * l + 1), 0, &[k + 1]));
        }
    }
    for k in r.saturating_sub(p)..=(r - 1) / 2 {
        out.push(member(FamilySpec::t(2 * k + 1), r - 2 * k - 1, &[r - k]));
    }
    let q = r - p;
    for k in q + 1..=r / 2 {
        for l in 0..q {
            out.push(member(FamilySpec::t_pair(2 * k, 2 * l + 1), r - 2 * k, &[r - k + 1]));
        }
    }
    out
}

fn sp_unitary(p: usize, r: usize) -> Vec<BasisFilling> {
    if r == 2 && p == 1 {
        return vec![
            explicit("1+T[1,1]", &["2", "2", "-2", "-2"], &[2]),
            explicit("4C_2", &["1,2", "1,2", "-2,-1", "-2,-1"], &[2]),
        ];
    }
    let mut out = Vec::new();
    for k in 1..=(2 * p).min(r / 2) {
        out.push(even_column_c_or_star(k));
    }
    for k in 0..2 * p {
        if 2 * k + 1 > r {
            break;
        }
        for l in 0..=k {
            out.push(odd_pair_c_or_star(k, l, r, Family::C));
        }
    }
    out
}

/// 2(C_{2k+1} + C_{2l+1}) with 2l+1 < r for sp2(p,q) and so*(2r).
fn odd_pair_c_or_star(k: usize, l: usize, r: usize, ty: Family) -> BasisFilling {
    let d5 = ty == Family::D && r == 5;
    if k == 0 {
        member(FamilySpec::t_pair(1, 1), 1, &[2])
    } else if k % 2 == 1 {
        member(FamilySpec::t_pair(2 * k + 1, 2 * l + 1), 0, &[k + 1])
    } else if l > 0 {
        let mut syn = vec![k + 2];
        if k == 2 && l == 1 && d5 {
            syn.push(5);
        }
        member(FamilySpec::t_pair_prime(2 * k + 1, 2 * l + 1), 0, &syn)
    } else {
        let mut syn = vec![k, k + 2];
        if k == 2 && d5 {
            syn.push(5);
        }
        member(FamilySpec::t_pair_prime(2 * k + 1, 1), 0, &syn)
    }
}

fn so_even(p: usize, r: usize) -> Vec<BasisFilling> {
    let mut out = Vec::new();
    for k in 1..=p.min(r / 2) {
        out.push(member(FamilySpec::t(2 * k), 0, &[k]));
    }
    for k in 0..p {
        if 2 * k + 1 > r {
            break;
        }
        for l in 0..=k {
            if 2 * l + 1 < r {
                let mut syn = vec![k + 1];
                if k == 1 && l == 0 && r == 3 {
                    syn.push(3);
                }
                out.push(member(FamilySpec::t_pair(2 * k + 1, 2 * l + 1), 0, &syn));
            } else {
                let mut syn = vec![k, k + 1];
                if r == 3 {
                    syn.push(3);
                }
                out.push(member(FamilySpec::s(2 * k + 1), 0, &syn));
            }
        }
    }
    out
}

fn so_star(r: usize) -> Vec<BasisFilling> {
    if r == 3 {
        return vec![
            // the e_2 prefix also meets alpha_3 = e_2 + e_3
            member(FamilySpec::t_pair(1, 1), 1, &[2, 3]),
            member(FamilySpec::t(2), 1, &[2]),
            member(FamilySpec::t_pair(3, 1), 0, &[2, 3]),
        ];
    }
    let mut out = Vec::new();
    for k in 1..=r / 2 {
        out.push(even_column_c_or_star(k));
    }
    for k in 0..=(r - 1) / 2 {
        for l in 0..=k {
            if 2 * l + 1 < r {
                out.push(odd_pair_c_or_star(k, l, r, Family::D));
            } else {
                out.push(member(FamilySpec::s_prime(2 * k + 1), 0, &[2 * k - 2, 2 * k, 2 * k + 1]));
            }
        }
    }
    out
}

/// Fillings for the monoid generators of a classical form of type B, C or D,
/// or None when the form is not handled by an explicit list (split, compact, complex).
pub fn basis_fillings(form: &RealForm) -> Result<Option<Vec<BasisFilling>>> {
    let ty: LieType = form.complexified()?;
    let r = ty.rank;
    Ok(match (*form, ty.family) {
        (RealForm::So(p, _), Family::B) => Some(so_odd(p, r)),
        (RealForm::So(p, _), Family::D) => Some(so_even(p, r)),
        (RealForm::Sp2(p, _), Family::C) if p > 0 => Some(sp_unitary(p, r)),
        (RealForm::SoStar(_), Family::D) => Some(so_star(r)),
        _ => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels() {
        let f = basis_fillings(&"so*(6)".parse().unwrap()).unwrap().unwrap();
        let names: Vec<&str> = f.iter().map(|b| b.label.as_str()).collect();
        assert_eq!(names, vec!["1+T[1,1]", "1+T[2]", "T[3,1]"]);
        assert!(basis_fillings(&"sl_R(3)".parse().unwrap()).unwrap().is_none());
        assert!(basis_fillings(&"sp2_R(3)".parse().unwrap()).unwrap().is_none());
    }
}
