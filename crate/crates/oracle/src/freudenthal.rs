//! Freudenthal's multiplicity recursion in Dynkin-label coordinates.

use std::collections::{HashMap, HashSet, VecDeque};

use lie_core::{RootData, Weight};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{OracleError, Result};

/// Root system data with an integer-scaled invariant form, all in labels.
#[derive(Clone, Debug)]
pub struct LabelSystem {
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    /// scale * (varpi_i, varpi_j)
    pub gram: Vec<Vec<i64>>,
    /// scale * (alpha_j, alpha_j) / 2
    pub half_norms: Vec<i64>,
    /// positive roots as simple-root coefficient vectors
    pub pos_coeffs: Vec<Vec<i64>>,
    /// the same roots in labels
    pub pos_labels: Vec<Vec<i64>>,
}

impl LabelSystem {
    pub fn new(rd: &RootData) -> Self {
        let r = rd.rank();
        let mut scale = 1i64;
        let mut raw = vec![vec![Default::default(); r]; r];
        for i in 0..r {
            for j in 0..r {
                let g = rd.fundamental[i].dot(&rd.fundamental[j]);
                scale = scale.lcm(g.denom());
                raw[i][j] = g;
            }
        }
        let halves: Vec<_> = rd.simple.iter().map(|a| a.norm2() / 2).collect();
        for h in &halves {
            scale = scale.lcm(h.denom());
        }
        let gram = raw
            .iter()
            .map(|row| row.iter().map(|g| (*g * scale).to_integer()).collect())
            .collect();
        let half_norms = halves.iter().map(|h| (*h * scale).to_integer()).collect();
        let mut pos_coeffs = Vec::new();
        let mut pos_labels = Vec::new();
        for a in &rd.positive {
            let c: Vec<i64> = rd.root_coefficients(a).iter().map(|x| x.to_integer()).collect();
            let lab = (0..r).map(|j| (0..r).map(|i| c[i] * rd.cartan[i][j]).sum()).collect();
            pos_coeffs.push(c);
            pos_labels.push(lab);
        }
        LabelSystem { rank: r, cartan: rd.cartan.clone(), gram, half_norms, pos_coeffs, pos_labels }
    }

    /// Scaled (mu, nu) for label vectors.
    pub fn form(&self, m: &[i64], n: &[i64]) -> i64 {
        let mut s = 0;
        for i in 0..self.rank {
            if m[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                s += m[i] * self.gram[i][j] * n[j];
            }
        }
        s
    }

    /// Scaled (mu, alpha) for a root given by coefficients.
    pub fn pair_root(&self, m: &[i64], coeffs: &[i64]) -> i64 {
        (0..self.rank).map(|j| m[j] * coeffs[j] * self.half_norms[j]).sum()
    }

    pub fn reflect(&self, m: &mut [i64], i: usize) {
        let k = m[i];
        for j in 0..self.rank {
            m[j] -= k * self.cartan[i][j];
        }
    }

    pub fn dominantize(&self, m: &[i64]) -> Vec<i64> {
        let mut x = m.to_vec();
        while let Some(i) = (0..self.rank).find(|&i| x[i] < 0) {
            self.reflect(&mut x, i);
        }
        x
    }

    /// Exact Weyl dimension of the irreducible module with labels m.
    pub fn weyl_dim(&self, m: &[i64]) -> BigInt {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        let shifted: Vec<i64> = m.iter().map(|x| x + 1).collect();
        let rho = vec![1; self.rank];
        for c in &self.pos_coeffs {
            num *= BigInt::from(self.pair_root(&shifted, c));
            den *= BigInt::from(self.pair_root(&rho, c));
        }
        num / den
    }

    /// W-orbit of a label vector, by closure under simple reflections.
    pub fn orbit(&self, m: &[i64]) -> Vec<Vec<i64>> {
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(m.to_vec());
        queue.push_back(m.to_vec());
        let mut out = Vec::new();
        while let Some(x) = queue.pop_front() {
            for i in 0..self.rank {
                if x[i] != 0 {
                    let mut y = x.clone();
                    self.reflect(&mut y, i);
                    if seen.insert(y.clone()) {
                        queue.push_back(y);
                    }
                }
            }
            out.push(x);
        }
        out
    }

    /// Multiplicities of all dominant weights of V(lambda).
    pub fn dominant_multiplicities(&self, lambda: &[i64]) -> HashMap<Vec<i64>, u64> {
        // dominant weights with their depth (height of lambda - mu)
        let mut depth: HashMap<Vec<i64>, i64> = HashMap::new();
        let mut queue = VecDeque::new();
        depth.insert(lambda.to_vec(), 0);
        queue.push_back(lambda.to_vec());
        while let Some(mu) = queue.pop_front() {
            let d = depth[&mu];
            for (lab, c) in self.pos_labels.iter().zip(&self.pos_coeffs) {
                let nu: Vec<i64> = mu.iter().zip(lab).map(|(a, b)| a - b).collect();
                if nu.iter().all(|x| *x >= 0) && !depth.contains_key(&nu) {
                    depth.insert(nu.clone(), d + c.iter().sum::<i64>());
                    queue.push_back(nu);
                }
            }
        }
        let mut order: Vec<(i64, Vec<i64>)> = depth.into_iter().map(|(k, v)| (v, k)).collect();
        order.sort();
        let lr: Vec<i64> = lambda.iter().map(|x| x + 1).collect();
        let top = self.form(&lr, &lr);
        let mut mult: HashMap<Vec<i64>, u64> = HashMap::new();
        for (d, mu) in order {
            if d == 0 {
                mult.insert(mu, 1);
                continue;
            }
            let mut sum: i128 = 0;
            for (lab, c) in self.pos_labels.iter().zip(&self.pos_coeffs) {
                let mut nu = mu.clone();
                loop {
                    for j in 0..self.rank {
                        nu[j] += lab[j];
                    }
                    match mult.get(&self.dominantize(&nu)) {
                        Some(&m) => sum += m as i128 * self.pair_root(&nu, c) as i128,
                        None => break,
                    }
                }
            }
            let mr: Vec<i64> = mu.iter().map(|x| x + 1).collect();
            let gap = (top - self.form(&mr, &mr)) as i128;
            debug_assert!(gap > 0 && (2 * sum) % gap == 0);
            let m = (2 * sum / gap) as u64;
            if m > 0 {
                mult.insert(mu, m);
            }
        }
        mult
    }
}

/// Labels of a dominant integral weight, or an error.
pub fn dominant_labels(rd: &RootData, w: &Weight) -> Result<Vec<i64>> {
    rd.check_len(w)?;
    let bad = || OracleError::NotDominantIntegral(w.to_string());
    if !rd.in_span(w) {
        return Err(bad());
    }
    rd.labels(w)
        .into_iter()
        .map(|l| if l.is_integer() && !l.is_negative() { Ok(l.to_integer()) } else { Err(bad()) })
        .collect()
}

pub(crate) fn to_u64(x: &BigInt) -> Option<u64> {
    if x.is_zero() {
        Some(0)
    } else {
        x.to_u64()
    }
}
