use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{LieError, Result};
use crate::types::{Family, LieType};
use crate::weight::Weight;

/// A signed permutation: e_i maps to signs[i] * e_{perm[i]}.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    pub perm: Vec<usize>,
    pub signs: Vec<i8>,
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        WeylElement { perm: (0..n).collect(), signs: vec![1; n] }
    }

    pub fn degree(&self) -> usize {
        self.perm.len()
    }

    pub fn apply_ints(&self, x: &[i64]) -> Vec<i64> {
        let mut y = vec![0; x.len()];
        for i in 0..x.len() {
            y[self.perm[i]] = self.signs[i] as i64 * x[i];
        }
        y
    }

    pub fn apply(&self, v: &Weight) -> Weight {
        let mut y = v.coords.clone();
        for i in 0..v.len() {
            y[self.perm[i]] = v.coords[i] * self.signs[i] as i64;
        }
        Weight::new(y)
    }

    /// self after other.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let n = self.degree();
        let mut perm = vec![0; n];
        let mut signs = vec![1; n];
        for i in 0..n {
            let j = other.perm[i];
            perm[i] = self.perm[j];
            signs[i] = other.signs[i] * self.signs[j];
        }
        WeylElement { perm, signs }
    }

    pub fn inverse(&self) -> WeylElement {
        let n = self.degree();
        let mut perm = vec![0; n];
        let mut signs = vec![1; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
            signs[self.perm[i]] = self.signs[i];
        }
        WeylElement { perm, signs }
    }

    /// The reflection in the hyperplane orthogonal to an integer root.
    pub fn reflection(root: &[i64]) -> WeylElement {
        let n = root.len();
        let nn: i64 = root.iter().map(|a| a * a).sum();
        let mut perm = vec![0; n];
        let mut signs = vec![1; n];
        for i in 0..n {
            let mut img = vec![0i64; n];
            img[i] = 1;
            let k = 2 * root[i];
            for j in 0..n {
                img[j] = img[j] * nn - k * root[j];
            }
            let (j, v) = img.iter().enumerate().find(|(_, v)| **v != 0).expect("nonzero image");
            perm[i] = j;
            signs[i] = if *v > 0 { 1 } else { -1 };
        }
        WeylElement { perm, signs }
    }

    pub fn sign_flips(&self) -> usize {
        self.signs.iter().filter(|&&s| s < 0).count()
    }
}

/// Positive roots of a classical type as integer vectors.
pub fn classical_positive_roots(ty: &LieType) -> Result<Vec<Vec<i64>>> {
    let n = ty.ambient_dim();
    let mut out = Vec::new();
    let unit = |i: usize, x: i64| {
        let mut v = vec![0; n];
        v[i] = x;
        v
    };
    for i in 0..n {
        for j in i + 1..n {
            let mut d = vec![0; n];
            d[i] = 1;
            d[j] = -1;
            out.push(d);
            if ty.family != Family::A {
                let mut s = vec![0; n];
                s[i] = 1;
                s[j] = 1;
                out.push(s);
            }
        }
        match ty.family {
            Family::B => out.push(unit(i, 1)),
            Family::C => out.push(unit(i, 2)),
            Family::A | Family::D => {}
            _ => return Err(LieError::NotClassical { op: "Weyl group", ty: ty.to_string() }),
        }
    }
    Ok(out)
}

fn is_positive(v: &[i64]) -> bool {
    v.iter().find(|x| **x != 0).is_some_and(|x| *x > 0)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(n, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}

/// The Weyl group of a classical type as explicit signed permutations.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    pub ty: LieType,
    elements: Vec<WeylElement>,
    index: HashMap<WeylElement, usize>,
    lengths: Vec<usize>,
    positive: Vec<Vec<i64>>,
}

impl WeylGroup {
    pub fn new(ty: LieType, rank_bound: usize) -> Result<Self> {
        if !ty.is_classical() {
            return Err(LieError::NotClassical { op: "Weyl group", ty: ty.to_string() });
        }
        if ty.rank > rank_bound {
            return Err(LieError::RankBound { rank: ty.rank, bound: rank_bound });
        }
        let n = ty.ambient_dim();
        let positive = classical_positive_roots(&ty)?;
        let mut elements = Vec::new();
        for perm in permutations(n) {
            if ty.family == Family::A {
                elements.push(WeylElement { perm, signs: vec![1; n] });
                continue;
            }
            for mask in 0u32..(1 << n) {
                if ty.family == Family::D && mask.count_ones() % 2 == 1 {
                    continue;
                }
                let signs = (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
                elements.push(WeylElement { perm: perm.clone(), signs });
            }
        }
        let lengths = elements.iter().map(|w| length_with(&positive, w)).collect();
        let index = elements.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        Ok(WeylGroup { ty, elements, index, lengths, positive })
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, w: &WeylElement) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn length(&self, i: usize) -> usize {
        self.lengths[i]
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    pub fn reflections(&self) -> Vec<WeylElement> {
        self.positive.iter().map(|a| WeylElement::reflection(a)).collect()
    }

    pub fn longest(&self) -> &WeylElement {
        let i = (0..self.order()).max_by_key(|&i| self.lengths[i]).expect("nonempty group");
        &self.elements[i]
    }
}

fn length_with(positive: &[Vec<i64>], w: &WeylElement) -> usize {
    positive.iter().filter(|a| !is_positive(&w.apply_ints(a))).count()
}

/// Length of w as a word in the simple reflections.
pub fn length(ty: &LieType, w: &WeylElement) -> Result<usize> {
    Ok(length_with(&classical_positive_roots(ty)?, w))
}

/// Full Bruhat order of a small Weyl group as up-set bitsets.
#[derive(Clone, Debug)]
pub struct BruhatPoset {
    pub group: WeylGroup,
    words: usize,
    ups: Vec<Vec<u64>>,
}

impl BruhatPoset {
    pub fn new(ty: LieType, rank_bound: usize) -> Result<Self> {
        let group = WeylGroup::new(ty, rank_bound)?;
        let n = group.order();
        let words = n.div_ceil(64);
        let refl = group.reflections();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(group.length(i)));
        let mut ups = vec![vec![0u64; words]; n];
        for &i in &order {
            let mut set = vec![0u64; words];
            set[i / 64] |= 1 << (i % 64);
            for s in &refl {
                let u = s.compose(&group.elements[i]);
                let j = group.index_of(&u).expect("closed under reflections");
                if group.length(j) > group.length(i) {
                    for (a, b) in set.iter_mut().zip(&ups[j]) {
                        *a |= *b;
                    }
                }
            }
            ups[i] = set;
        }
        Ok(BruhatPoset { group, words, ups })
    }

    pub fn words(&self) -> usize {
        self.words
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.ups[i][j / 64] >> (j % 64) & 1 == 1
    }

    /// Bitset of all elements above i.
    pub fn up_set(&self, i: usize) -> &[u64] {
        &self.ups[i]
    }
}

/// w1 <= w2 in the Bruhat order, by search over length-increasing reflections.
pub fn bruhat_leq(ty: LieType, w1: &WeylElement, w2: &WeylElement) -> Result<bool> {
    bruhat_leq_bounded(ty, w1, w2, 6)
}

pub fn bruhat_leq_bounded(ty: LieType, w1: &WeylElement, w2: &WeylElement, rank_bound: usize) -> Result<bool> {
    if !ty.is_classical() {
        return Err(LieError::NotClassical { op: "bruhat_leq", ty: ty.to_string() });
    }
    if ty.rank > rank_bound {
        return Err(LieError::RankBound { rank: ty.rank, bound: rank_bound });
    }
    let pos = classical_positive_roots(&ty)?;
    let refl: Vec<WeylElement> = pos.iter().map(|a| WeylElement::reflection(a)).collect();
    let target = length_with(&pos, w2);
    let mut seen: HashSet<WeylElement> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w1.clone());
    queue.push_back((w1.clone(), length_with(&pos, w1)));
    while let Some((u, lu)) = queue.pop_front() {
        if &u == w2 {
            return Ok(true);
        }
        for s in &refl {
            let v = s.compose(&u);
            let lv = length_with(&pos, &v);
            if lv > lu && lv <= target && seen.insert(v.clone()) {
                queue.push_back((v, lv));
            }
        }
    }
    Ok(false)
}
