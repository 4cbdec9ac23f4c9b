//! Bruhat-nondecreasing tuples: w_1 <= ... <= w_N with nu_i in w_i h^+.

use std::collections::HashMap;

use lie_core::{lattice::classify_weight, BruhatPoset, LieType, Weight};

use crate::error::Result;

pub const DEFAULT_RANK_BOUND: usize = 5;

/// Reusable oracle holding the Bruhat poset and chamber sets per weight.
pub struct BruhatOracle {
    pub poset: BruhatPoset,
    chambers: HashMap<Weight, Vec<u64>>,
}

impl BruhatOracle {
    pub fn new(ty: LieType) -> Result<Self> {
        Self::with_bound(ty, DEFAULT_RANK_BOUND)
    }

    pub fn with_bound(ty: LieType, rank_bound: usize) -> Result<Self> {
        Ok(BruhatOracle { poset: BruhatPoset::new(ty, rank_bound)?, chambers: HashMap::new() })
    }

    /// Bitset of {w : w^{-1} nu is dominant}.
    pub fn chamber_set(&mut self, nu: &Weight) -> Result<Vec<u64>> {
        if let Some(s) = self.chambers.get(nu) {
            return Ok(s.clone());
        }
        let ty = self.poset.group.ty;
        let mut set = vec![0u64; self.poset.words()];
        for (i, w) in self.poset.group.elements().iter().enumerate() {
            if classify_weight(ty, &w.inverse().apply(nu))?.dominant {
                set[i / 64] |= 1 << (i % 64);
            }
        }
        self.chambers.insert(nu.clone(), set.clone());
        Ok(set)
    }

    /// All elements above some element of the set.
    pub fn up_closure(&self, set: &[u64]) -> Vec<u64> {
        let mut up = vec![0u64; set.len()];
        for (wi, word) in set.iter().enumerate() {
            let mut bits = *word;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                for (u, x) in up.iter_mut().zip(self.poset.up_set(wi * 64 + b)) {
                    *u |= *x;
                }
            }
        }
        up
    }

    /// Possible w_N for a Bruhat-nondecreasing tuple ending in nu, given the
    /// possible w_{N-1} for the prefix (None for an empty prefix).
    pub fn extend(&mut self, prev: Option<&[u64]>, nu: &Weight) -> Result<Vec<u64>> {
        let mut s = self.chamber_set(nu)?;
        if let Some(prev) = prev {
            let up = self.up_closure(prev);
            for (a, b) in s.iter_mut().zip(&up) {
                *a &= *b;
            }
        }
        Ok(s)
    }

    pub fn is_nondecreasing(&mut self, weights: &[Weight]) -> Result<bool> {
        let mut reach: Option<Vec<u64>> = None;
        for nu in weights {
            let s = self.extend(reach.as_deref(), nu)?;
            if s.iter().all(|x| *x == 0) {
                return Ok(false);
            }
            reach = Some(s);
        }
        Ok(true)
    }
}

pub fn bruhat_tuple_oracle(ty: LieType, weights: &[Weight]) -> Result<bool> {
    BruhatOracle::new(ty)?.is_nondecreasing(weights)
}
