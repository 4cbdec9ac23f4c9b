//! dim V_lambda^{l(Theta)} for a real form, from the tableau counters or from the oracle.

use doubled_bcd::count_invariants_bcd_budget;
use lie_core::{theta_of, Family, RealForm, Weight};
use young_a::walk::count_null_dominant_a_budget;

use crate::error::{MonoidError, Result};

pub const DEFAULT_BOX_BUDGET: usize = 64;

/// Count of the tableaux certifying l-invariant vectors (classical types).
pub fn tableau_invariant_dim(form: &RealForm, lambda: &Weight, budget: usize) -> Result<u64> {
    let ty = form.complexified()?;
    let theta = theta_of(form)?;
    match ty.family {
        Family::A => Ok(count_null_dominant_a_budget(lambda, ty.rank + 1, &theta, budget)?),
        Family::B | Family::C | Family::D => Ok(count_invariants_bcd_budget(lambda, &ty, &theta, budget)?),
        _ => Err(MonoidError::Unsupported(format!("no tableau model for {ty}"))),
    }
}

pub fn oracle_invariant_dim(form: &RealForm, lambda: &Weight, budget: u64) -> Result<u64> {
    let ty = form.complexified()?;
    Ok(oracle::levi::dim_invariants_budget(lambda, ty, &theta_of(form)?, budget)?)
}

/// Whether lambda, mu in M_{l-inv} implies lambda + mu in M_{l-inv}, by the tableau counters.
pub fn additivity_check(form: &RealForm, lambda: &Weight, mu: &Weight) -> Result<bool> {
    additivity_check_budget(form, lambda, mu, DEFAULT_BOX_BUDGET)
}

pub fn additivity_check_budget(form: &RealForm, lambda: &Weight, mu: &Weight, budget: usize) -> Result<bool> {
    if tableau_invariant_dim(form, lambda, budget)? == 0 || tableau_invariant_dim(form, mu, budget)? == 0 {
        return Ok(true);
    }
    Ok(tableau_invariant_dim(form, &(lambda + mu), budget)? > 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let f: RealForm = "so(1,4)".parse().unwrap();
        let l = Weight::from_ints(&[1, 1]);
        assert!(tableau_invariant_dim(&f, &l, 64).unwrap() > 0);
        assert!(additivity_check(&f, &l, &l).unwrap());
        let f: RealForm = "su(1,2)".parse().unwrap();
        let l = Weight::from_ints(&[1, 0, -1]);
        assert!(additivity_check(&f, &l, &l).unwrap());
        assert!(additivity_check(&f, &Weight::zero(3), &l).unwrap());
        assert_eq!(tableau_invariant_dim(&f, &l, 64).unwrap(), oracle_invariant_dim(&f, &l, 1_000_000).unwrap());
    }

    #[test]
    fn exceptional_has_no_tableaux() {
        let f: RealForm = "FII".parse().unwrap();
        assert!(tableau_invariant_dim(&f, &Weight::from_ints(&[1, 0, 0, 0]), 64).is_err());
        assert_eq!(oracle_invariant_dim(&f, &Weight::from_ints(&[1, 0, 0, 0]), 1_000_000).unwrap(), 1);
    }
}
