//! The three-way comparison table / tableaux / oracle over a box of weights.

use lie_core::{dominant_weights_bcd, Family, LieType, Rat, RealForm, Weight, theta_of};
use num_traits::Signed;
use rayon::prelude::*;
use serde::Serialize;

use crate::dims::tableau_invariant_dim;
use crate::error::{MonoidError, Result};
use crate::table::{m_table_membership, table3_membership};
use crate::Verdict;

/// Dominant integral weights of a classical type: lambda_1 <= bound in types B, C, D,
/// sum |lambda_i| <= 2 bound in type A.
pub fn sweep_weights(ty: LieType, bound: i64) -> Result<Vec<Weight>> {
    match ty.family {
        Family::A => Ok(weights_a(ty.rank + 1, 2 * bound)),
        Family::B | Family::C | Family::D => Ok(dominant_weights_bcd(ty, bound)?),
        _ => Err(MonoidError::Unsupported(format!("no sweep box for {ty}"))),
    }
}

fn weights_a(n: usize, abs_sum: i64) -> Vec<Weight> {
    let mut out = Vec::new();
    fn rec(n: usize, hi: i64, cur: &mut Vec<i64>, abs_sum: i64, out: &mut Vec<Weight>) {
        if cur.len() + 1 == n {
            cur.push(0);
            let total: i64 = cur.iter().sum();
            let shift = Rat::new(total, n as i64);
            let w = Weight::new(cur.iter().map(|&m| Rat::from_integer(m) - shift).collect());
            if w.coords.iter().map(|c| c.abs()).sum::<Rat>() <= Rat::from_integer(abs_sum) {
                out.push(w);
            }
            cur.pop();
            return;
        }
        for x in 0..=hi {
            cur.push(x);
            rec(n, x, cur, abs_sum, out);
            cur.pop();
        }
    }
    // lambda_1 - lambda_n <= sum |lambda_i|
    rec(n, abs_sum, &mut Vec::new(), abs_sum, &mut out);
    out.sort();
    out
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SweepReport {
    pub checked: usize,
    pub in_table: usize,
    /// (form, lambda, reason) for budget overruns
    pub skipped: Vec<(String, String, String)>,
    pub failures: Vec<Verdict>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn merge(&mut self, other: SweepReport) {
        self.checked += other.checked;
        self.in_table += other.in_table;
        self.skipped.extend(other.skipped);
        self.failures.extend(other.failures);
    }
}

/// Every classical form of `ty` against every weight of the box.
pub fn form_sweep(ty: LieType, bound: i64, box_budget: usize, dim_budget: u64) -> Result<SweepReport> {
    let forms = RealForm::classical_forms_of(ty);
    let thetas = forms.iter().map(theta_of).collect::<std::result::Result<Vec<_>, _>>()?;
    let weights = sweep_weights(ty, bound)?;
    let parts: Vec<Result<SweepReport>> = weights
        .par_iter()
        .map(|lambda| {
            let mut rep = SweepReport::default();
            let oracle = match oracle::dim_invariants_many(lambda, ty, &thetas, dim_budget) {
                Ok(v) => Some(v),
                Err(oracle::OracleError::Budget { dim, .. }) => {
                    rep.skipped.push((ty.to_string(), lambda.to_string(), format!("oracle dimension {dim}")));
                    None
                }
                Err(e) => return Err(e.into()),
            };
            for (k, form) in forms.iter().enumerate() {
                let verdict = m_table_membership(form, lambda)?;
                let tab = match tableau_invariant_dim(form, lambda, box_budget) {
                    Ok(d) => Some(d),
                    Err(e) if e.is_budget() => {
                        rep.skipped.push((form.to_string(), lambda.to_string(), e.to_string()));
                        None
                    }
                    Err(e) => return Err(e),
                };
                let dim_oracle = oracle.as_ref().map(|v| v[k]);
                let t3 = table3_membership(form, lambda)?;
                let mut ok = t3.map_or(true, |v| v.in_table == verdict.in_table);
                if let Some(t) = tab {
                    ok &= verdict.in_table == (t > 0);
                }
                if let Some(o) = dim_oracle {
                    ok &= verdict.in_table == (o > 0);
                }
                if let (Some(t), Some(o)) = (tab, dim_oracle) {
                    ok &= t == o;
                }
                if tab.is_some() || dim_oracle.is_some() {
                    rep.checked += 1;
                }
                rep.in_table += usize::from(verdict.in_table);
                if !ok {
                    rep.failures.push(Verdict {
                        form: *form,
                        lambda: lambda.clone(),
                        in_table: verdict.in_table,
                        failed_condition: verdict.failed_condition,
                        dim_tableaux: tab,
                        dim_oracle,
                    });
                }
            }
            Ok(rep)
        })
        .collect();
    let mut out = SweepReport::default();
    for p in parts {
        out.merge(p?);
    }
    out.skipped.sort();
    out.failures.sort_by(|a, b| (a.form.to_string(), &a.lambda).cmp(&(b.form.to_string(), &b.lambda)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn box_sizes() {
        // sl_2: lambda = (k/2, -k/2), |.| sum = k <= 2
        assert_eq!(sweep_weights(LieType::a(1), 1).unwrap().len(), 3);
        let a2 = sweep_weights(LieType::a(2), 1).unwrap();
        assert!(a2.contains(&Weight::from_ints(&[1, 0, -1])));
        assert!(a2.iter().all(|w| w.sum() == Rat::from_integer(0)));
    }

    #[test]
    fn small_sweep() {
        let rep = form_sweep(LieType::b(2), 1, 64, 1_000_000).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures);
        assert!(rep.skipped.is_empty());
        assert!(rep.checked > 0);
    }
}
