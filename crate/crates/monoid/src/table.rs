//! Membership in the tabulated monoid of highest weights with a nonzero
//! Levi-invariant vector.

use lie_core::{classify_weight, Family, Rat, RealForm, Weight};
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{MonoidError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationVerdict {
    pub in_table: bool,
    /// the violated clause; present iff `in_table` is false
    pub failed_condition: Option<String>,
}

impl ClassificationVerdict {
    pub fn accept() -> Self {
        ClassificationVerdict { in_table: true, failed_condition: None }
    }

    pub fn reject(clause: impl Into<String>) -> Self {
        ClassificationVerdict { in_table: false, failed_condition: Some(clause.into()) }
    }

    fn require(ok: bool, clause: impl FnOnce() -> String) -> Self {
        if ok {
            Self::accept()
        } else {
            Self::reject(clause())
        }
    }
}

/// lambda_i, 1-based, with lambda_i = 0 past the end.
fn at(lambda: &Weight, i: usize) -> Rat {
    if i == 0 {
        return Rat::zero();
    }
    lambda.coords.get(i - 1).copied().unwrap_or_else(Rat::zero)
}

fn sum_range(lambda: &Weight, from: usize, to: usize) -> Rat {
    (from..=to).map(|i| at(lambda, i)).sum()
}

fn is_even(x: Rat) -> bool {
    x.is_integer() && x.to_integer() % 2 == 0
}

/// Dominant integral check shared by both tables; returns whether lambda is radical.
fn radical(form: &RealForm, lambda: &Weight) -> Result<bool> {
    let ty = form.complexified()?;
    let c = classify_weight(ty, lambda)?;
    if !(c.dominant && c.integral) {
        return Err(MonoidError::NotDominant(lambda.to_string(), ty.to_string()));
    }
    Ok(c.radical)
}

const RADICAL: &str = "λ ∈ Q";

/// The row of the classification table for `form`, or the exceptional/complex/compact rules.
pub fn m_table_membership(form: &RealForm, lambda: &Weight) -> Result<ClassificationVerdict> {
    if !radical(form, lambda)? {
        return Ok(ClassificationVerdict::reject(RADICAL));
    }
    let r = form.complexified()?.rank;
    let l = |i| at(lambda, i);
    let v = match *form {
        RealForm::Compact(_) => ClassificationVerdict::require(lambda.is_zero(), || "λ = 0".into()),
        RealForm::Complex(_) | RealForm::Exceptional(_) | RealForm::SlR(_) | RealForm::Sp2R(_) => {
            ClassificationVerdict::accept()
        }
        RealForm::Su(p, q) if p == q => ClassificationVerdict::accept(),
        RealForm::Su(p, _) => {
            let (a, b) = (r + 1 - 2 * p, 2 * p + 1);
            ClassificationVerdict::require(l(a) >= Rat::zero() && l(b) <= Rat::zero(), || {
                format!("λ_{a} ≥ 0 ≥ λ_{b}")
            })
        }
        RealForm::SlH(m) => {
            let left = sum_range(lambda, 2, m + 1);
            let right = sum_range(lambda, m, 2 * m - 1);
            ClassificationVerdict::require(!left.is_negative() && !right.is_positive(), || {
                format!("Σ_{{i=2}}^{{{}}} λ_i ≥ 0 ≥ Σ_{{i={m}}}^{{{}}} λ_i", m + 1, 2 * m - 1)
            })
        }
        RealForm::So(p, q) if (p + q) % 2 == 1 => {
            let zero = 2 * p + 1;
            if !l(zero).is_zero() {
                ClassificationVerdict::reject(format!("λ_{zero} = 0"))
            } else {
                let k = 2 * r - 2 * p + 1;
                ClassificationVerdict::require(is_even(lambda.sum()) || l(k).is_positive(), || {
                    format!("Σ λ_i odd ⇒ λ_{k} > 0")
                })
            }
        }
        RealForm::So(p, _) => {
            let zero = 2 * p + 1;
            ClassificationVerdict::require(l(zero).is_zero(), || format!("λ_{zero} = 0"))
        }
        RealForm::Sp2(1, 1) => ClassificationVerdict::require(is_even(l(2)), || "λ_2 ∈ 2Z".into()),
        RealForm::Sp2(p, _) => {
            let zero = 4 * p + 1;
            ClassificationVerdict::require(l(zero).is_zero(), || format!("λ_{zero} = 0"))
        }
        RealForm::SoStar(3) => {
            ClassificationVerdict::require(l(3).abs() <= l(1) - l(2), || "|λ_3| ≤ λ_1 − λ_2".into())
        }
        RealForm::SoStar(_) => ClassificationVerdict::accept(),
    };
    Ok(v)
}

/// The simplified conditions for su(p,q), so(p,q), sp2(p,q) split by whether
/// p < (p+q)/4. None for the other forms.
pub fn table3_membership(form: &RealForm, lambda: &Weight) -> Result<Option<ClassificationVerdict>> {
    let (p, q) = match *form {
        RealForm::Su(p, q) | RealForm::So(p, q) | RealForm::Sp2(p, q) => (p, q),
        _ => return Ok(None),
    };
    if !radical(form, lambda)? {
        return Ok(Some(ClassificationVerdict::reject(RADICAL)));
    }
    let low = 4 * p < p + q;
    let l = |i| at(lambda, i);
    let v = match form {
        RealForm::Su(..) if p == q || q == p + 1 => ClassificationVerdict::accept(),
        RealForm::Su(..) if low => {
            let ok = (2 * p + 1..=q - p).all(|i| l(i).is_zero());
            ClassificationVerdict::require(ok, || format!("λ_{} = … = λ_{} = 0", 2 * p + 1, q - p))
        }
        RealForm::Su(..) => {
            let (a, b) = (q - p, 2 * p + 1);
            ClassificationVerdict::require(l(a) >= Rat::zero() && l(b) <= Rat::zero(), || {
                format!("λ_{a} ≥ 0 ≥ λ_{b}")
            })
        }
        RealForm::So(..) if (p + q) % 2 == 1 => {
            if low {
                if !l(2 * p + 1).is_zero() {
                    ClassificationVerdict::reject(format!("λ_{} = 0", 2 * p + 1))
                } else {
                    ClassificationVerdict::require(is_even(sum_range(lambda, 1, 2 * p)), || {
                        format!("Σ_{{i=1}}^{{{}}} λ_i ∈ 2Z", 2 * p)
                    })
                }
            } else {
                let k = q - p;
                let ok = l(k).is_positive() || is_even(sum_range(lambda, 1, k - 1));
                ClassificationVerdict::require(ok, || format!("λ_{k} > 0 or Σ_{{i=1}}^{{{}}} λ_i ∈ 2Z", k - 1))
            }
        }
        RealForm::So(..) if low => {
            ClassificationVerdict::require(l(2 * p + 1).is_zero(), || format!("λ_{} = 0", 2 * p + 1))
        }
        RealForm::So(..) => ClassificationVerdict::accept(),
        RealForm::Sp2(1, 1) => ClassificationVerdict::require(is_even(l(2)), || "λ_2 ∈ 2Z".into()),
        RealForm::Sp2(..) if low => {
            ClassificationVerdict::require(l(4 * p + 1).is_zero(), || format!("λ_{} = 0", 4 * p + 1))
        }
        _ => ClassificationVerdict::accept(),
    };
    Ok(Some(v))
}

/// Printable form of the table row that applies to `form`.
pub fn table1_row(form: &RealForm) -> Result<String> {
    let ty = form.complexified()?;
    let r = ty.rank;
    let cond = match *form {
        RealForm::Compact(_) => "λ = 0".to_string(),
        RealForm::Su(p, q) if p != q => format!("λ ∈ Q ∩ h^+ and λ_{} ≥ 0 ≥ λ_{}", r + 1 - 2 * p, 2 * p + 1),
        RealForm::SlH(m) => {
            format!("λ ∈ Q ∩ h^+ and Σ_{{i=2}}^{{{}}} λ_i ≥ 0 ≥ Σ_{{i={m}}}^{{{}}} λ_i", m + 1, 2 * m - 1)
        }
        RealForm::So(p, _) if ty.family == Family::B => format!(
            "λ ∈ Q ∩ h^+, λ_{} = 0 and if Σ λ_i odd then λ_{} > 0",
            2 * p + 1,
            2 * r - 2 * p + 1
        ),
        RealForm::So(p, _) => format!("λ ∈ Q ∩ h^+ and λ_{} = 0", 2 * p + 1),
        RealForm::Sp2(1, 1) => "λ ∈ Q ∩ h^+ and λ_2 ∈ 2Z".to_string(),
        RealForm::Sp2(p, _) => format!("λ ∈ Q ∩ h^+ and λ_{} = 0", 4 * p + 1),
        RealForm::SoStar(3) => "λ ∈ Q ∩ h^+ and |λ_3| ≤ λ_1 − λ_2".to_string(),
        _ => "λ ∈ Q ∩ h^+".to_string(),
    };
    Ok(format!("{form} [{ty}]: {cond}"))
}
