use std::collections::BTreeMap;

use lie_core::{LieType, RootData, Weight};
use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{OracleError, Result};
use crate::freudenthal::{dominant_labels, to_u64, LabelSystem};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Weight multiplicities of a finite-dimensional module.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CharacterTable {
    pub entries: BTreeMap<Weight, u64>,
}

#[derive(Serialize)]
struct Entry<'a> {
    weight: &'a Weight,
    multiplicity: u64,
}

impl CharacterTable {
    pub fn from_weights<I: IntoIterator<Item = Weight>>(it: I) -> Self {
        let mut t = CharacterTable::default();
        for w in it {
            *t.entries.entry(w).or_insert(0) += 1;
        }
        t
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    pub fn dimension(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let list: Vec<Entry> =
            self.entries.iter().map(|(w, m)| Entry { weight: w, multiplicity: *m }).collect();
        serde_json::to_value(list).expect("serializable")
    }
}

pub fn weyl_dim(lambda: &Weight, g: LieType) -> Result<BigInt> {
    let rd = RootData::new(g);
    let m = dominant_labels(&rd, lambda)?;
    Ok(LabelSystem::new(&rd).weyl_dim(&m))
}

pub fn weight_multiplicities(lambda: &Weight, g: LieType) -> Result<CharacterTable> {
    weight_multiplicities_budget(lambda, g, DEFAULT_BUDGET)
}

pub fn weight_multiplicities_budget(lambda: &Weight, g: LieType, budget: u64) -> Result<CharacterTable> {
    let rd = RootData::new(g);
    let m = dominant_labels(&rd, lambda)?;
    let sys = LabelSystem::new(&rd);
    check_budget(&sys, &m, budget)?;
    let dom = sys.dominant_multiplicities(&m);
    let mut table = CharacterTable::default();
    for (mu, k) in dom {
        for x in sys.orbit(&mu) {
            table.entries.insert(rd.from_int_labels(&x), k);
        }
    }
    Ok(table)
}

pub(crate) fn check_budget(sys: &LabelSystem, m: &[i64], budget: u64) -> Result<()> {
    let dim = sys.weyl_dim(m);
    match to_u64(&dim) {
        Some(d) if d <= budget => Ok(()),
        _ => Err(OracleError::Budget { dim: dim.to_string(), budget }),
    }
}
