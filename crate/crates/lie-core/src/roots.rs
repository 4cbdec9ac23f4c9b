use std::collections::{BTreeSet, VecDeque};

use num_traits::{Signed, Zero};

use crate::error::{LieError, Result};
use crate::linalg::invert;
use crate::types::{Family, LieType};
use crate::weight::{Rat, Weight};

/// Simple roots, fundamental weights, Cartan matrix and positive roots.
#[derive(Clone, Debug)]
pub struct RootData {
    pub ty: LieType,
    pub simple: Vec<Weight>,
    pub fundamental: Vec<Weight>,
    /// cartan[i][j] = <alpha_i, alpha_j^vee>.
    pub cartan: Vec<Vec<i64>>,
    pub positive: Vec<Weight>,
}

fn unit(n: usize, i: usize, x: Rat) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n];
    v[i] = x;
    v
}

fn e_diff(n: usize, i: usize, j: usize) -> Weight {
    let mut v = vec![Rat::zero(); n];
    v[i] += Rat::from_integer(1);
    v[j] -= Rat::from_integer(1);
    Weight::new(v)
}

fn e_sum(n: usize, i: usize, j: usize) -> Weight {
    let mut v = vec![Rat::zero(); n];
    v[i] += Rat::from_integer(1);
    v[j] += Rat::from_integer(1);
    Weight::new(v)
}

fn halves(xs: &[i64]) -> Weight {
    Weight::from_doubled(xs)
}

fn simple_roots(ty: &LieType) -> Vec<Weight> {
    let r = ty.rank;
    let n = ty.ambient_dim();
    let one = Rat::from_integer(1);
    match ty.family {
        Family::A => (0..r).map(|i| e_diff(n, i, i + 1)).collect(),
        Family::B | Family::C | Family::D => {
            let mut s: Vec<Weight> = (0..r.saturating_sub(1)).map(|i| e_diff(n, i, i + 1)).collect();
            s.push(match ty.family {
                Family::B => Weight::new(unit(n, r - 1, one)),
                Family::C => Weight::new(unit(n, r - 1, Rat::from_integer(2))),
                _ => e_sum(n, r - 2, r - 1),
            });
            s
        }
        Family::E6 | Family::E7 | Family::E8 => {
            let mut s = vec![halves(&[1, -1, -1, -1, -1, -1, -1, 1]), e_sum(8, 0, 1), e_diff(8, 1, 0)];
            for i in 2..r - 1 {
                s.push(e_diff(8, i, i - 1));
            }
            s
        }
        Family::F4 => vec![
            e_diff(4, 1, 2),
            e_diff(4, 2, 3),
            Weight::new(unit(4, 3, one)),
            halves(&[1, -1, -1, -1]),
        ],
        Family::G2 => vec![Weight::from_ints(&[1, -1, 0]), Weight::from_ints(&[-2, 1, 1])],
    }
}

impl RootData {
    pub fn new(ty: LieType) -> Self {
        let simple = simple_roots(&ty);
        let r = ty.rank;
        let two = Rat::from_integer(2);
        let cartan_q: Vec<Vec<Rat>> = (0..r)
            .map(|i| (0..r).map(|j| two * simple[i].dot(&simple[j]) / simple[j].norm2()).collect())
            .collect();
        let cartan: Vec<Vec<i64>> =
            cartan_q.iter().map(|row| row.iter().map(|x| x.to_integer()).collect()).collect();
        let inv = invert(&cartan_q).expect("Cartan matrix is invertible");
        let n = ty.ambient_dim();
        let fundamental = (0..r)
            .map(|i| {
                let mut v = Weight::zero(n);
                for j in 0..r {
                    v = &v + &simple[j].scale(inv[i][j]);
                }
                v
            })
            .collect();
        let mut rd = RootData { ty, simple, fundamental, cartan, positive: Vec::new() };
        rd.positive = rd.generate_positive_roots();
        rd
    }

    fn generate_positive_roots(&self) -> Vec<Weight> {
        let mut seen: BTreeSet<Weight> = self.simple.iter().cloned().collect();
        let mut queue: VecDeque<Weight> = self.simple.iter().cloned().collect();
        while let Some(b) = queue.pop_front() {
            for i in 0..self.ty.rank {
                let c = self.reflect(&b, i);
                if seen.insert(c.clone()) {
                    queue.push_back(c);
                }
            }
        }
        let mut pos: Vec<Weight> = seen
            .into_iter()
            .filter(|b| self.root_coefficients(b).iter().all(|c| !c.is_negative()))
            .collect();
        pos.sort_by_key(|b| (self.height(b), b.clone()));
        pos
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    /// <v, alpha_i^vee>.
    pub fn pairing(&self, v: &Weight, i: usize) -> Rat {
        Rat::from_integer(2) * v.dot(&self.simple[i]) / self.simple[i].norm2()
    }

    /// Dynkin labels <v, alpha_i^vee> for all i.
    pub fn labels(&self, v: &Weight) -> Vec<Rat> {
        (0..self.ty.rank).map(|i| self.pairing(v, i)).collect()
    }

    pub fn from_labels(&self, labels: &[Rat]) -> Weight {
        let mut v = Weight::zero(self.ty.ambient_dim());
        for (l, w) in labels.iter().zip(&self.fundamental) {
            v = &v + &w.scale(*l);
        }
        v
    }

    pub fn from_int_labels(&self, labels: &[i64]) -> Weight {
        let q: Vec<Rat> = labels.iter().map(|&x| Rat::from_integer(x)).collect();
        self.from_labels(&q)
    }

    /// Simple reflection s_i applied to v.
    pub fn reflect(&self, v: &Weight, i: usize) -> Weight {
        v - &self.simple[i].scale(self.pairing(v, i))
    }

    /// Coefficients of v in the simple-root basis (v assumed in their span).
    pub fn root_coefficients(&self, v: &Weight) -> Vec<Rat> {
        (0..self.ty.rank)
            .map(|i| Rat::from_integer(2) * v.dot(&self.fundamental[i]) / self.simple[i].norm2())
            .collect()
    }

    pub fn height(&self, v: &Weight) -> Rat {
        self.root_coefficients(v).into_iter().fold(Rat::zero(), |a, b| a + b)
    }

    pub fn in_span(&self, v: &Weight) -> bool {
        let mut back = Weight::zero(self.ty.ambient_dim());
        for (c, a) in self.root_coefficients(v).iter().zip(&self.simple) {
            back = &back + &a.scale(*c);
        }
        &back == v
    }

    pub fn rho(&self) -> Weight {
        let ones = vec![Rat::from_integer(1); self.ty.rank];
        self.from_labels(&ones)
    }

    /// Order of each fundamental weight in P/Q.
    pub fn fundamental_orders(&self) -> Vec<i64> {
        self.fundamental
            .iter()
            .map(|w| {
                (1..=12)
                    .find(|&d| {
                        let c = self.root_coefficients(&w.scale(Rat::from_integer(d)));
                        c.iter().all(|x| x.is_integer())
                    })
                    .expect("P/Q has exponent at most 4")
            })
            .collect()
    }

    pub fn check_len(&self, v: &Weight) -> Result<()> {
        if v.len() != self.ty.ambient_dim() {
            return Err(LieError::LengthMismatch {
                ty: self.ty.to_string(),
                expected: self.ty.ambient_dim(),
                got: v.len(),
            });
        }
        Ok(())
    }
}

/// Simple roots and fundamental weights in e-coordinates.
pub fn root_data(ty: LieType) -> Result<(Vec<Weight>, Vec<Weight>)> {
    let ty = LieType::new(ty.family, ty.rank)?;
    let rd = RootData::new(ty);
    Ok((rd.simple, rd.fundamental))
}
