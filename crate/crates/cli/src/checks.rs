//! Verification sweeps shared by `verify` and the acceptance suite.

use std::collections::BTreeSet;

use doubled_bcd::{
    admissible_oracle, admissible_pair, all_columns, all_family_specs, basis_fillings, bruhat_side_conditions,
    character_bcd_budget, column_weight, enumerate_doubled, evaluate_tableau, family_expected_syndrome,
    family_standard_for, family_tableau, young_compare, young_nondecreasing, Column, DoubledFilter,
};
use lie_core::{classify_weight, theta_of, Family, LieType, RealForm, RootData, ThetaSet, Weight};
use monoid::{
    additivity_check_budget, decompose, form_sweep, forms_for, labels_of, primitive_labels, rows_for,
    sweep_weights, tableau_invariant_dim, MonoidError,
};
use num_bigint::BigInt;
use oracle::{dim_invariants_many, weight_multiplicities_budget, weyl_dim, BruhatOracle, OracleError};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;
use young_a::{
    bridges, count_fillings, enumerate_fillings_a, exists_filling_2row, filling_from_witness, strip_decompose,
    strips_to_tableau, FillingFilter, SkewDiagram, YoungDiagram,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub cases: usize,
    pub skipped: usize,
    pub counterexamples: Vec<String>,
    pub note: String,
}

impl Check {
    fn new(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: Status::Pass,
            cases: 0,
            skipped: 0,
            counterexamples: Vec::new(),
            note: String::new(),
        }
    }

    fn case(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.counterexamples.push(what());
        }
    }

    fn error(&mut self, e: impl std::fmt::Display, budget: bool, context: &str) {
        if budget {
            self.skipped += 1;
        } else {
            self.cases += 1;
            self.counterexamples.push(format!("{context}: error {e}"));
        }
    }

    fn absorb(&mut self, other: Check) {
        self.cases += other.cases;
        self.skipped += other.skipped;
        self.counterexamples.extend(other.counterexamples);
    }

    fn finish(mut self) -> Self {
        self.status = if !self.counterexamples.is_empty() {
            Status::Fail
        } else if self.skipped > 0 {
            Status::Skipped
        } else {
            Status::Pass
        };
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn summary(&self) -> String {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
        };
        let mut s = format!("{tag} {}: {} cases", self.name, self.cases);
        if self.skipped > 0 {
            s.push_str(&format!(", {} skipped", self.skipped));
        }
        if !self.counterexamples.is_empty() {
            s.push_str(&format!(", {} counterexamples", self.counterexamples.len()));
        }
        if !self.note.is_empty() {
            s.push_str(&format!(" ({})", self.note));
        }
        s
    }
}

pub const DIM_BUDGET: u64 = 50_000_000;
pub const BOX_BUDGET: usize = 64;

/// Classical types of the headline sweep.
pub fn sweep_types() -> Vec<LieType> {
    let mut out = Vec::new();
    for r in 1..=4 {
        out.extend([LieType::a(r), LieType::b(r), LieType::c(r)]);
    }
    out.extend([LieType::d(3), LieType::d(4)]);
    out
}

pub fn classification_sweep(types: &[LieType], bound: i64) -> Check {
    let mut c = Check::new("classification sweep (table, tableaux, oracle)");
    let mut in_table = 0;
    for &ty in types {
        match form_sweep(ty, bound, BOX_BUDGET, DIM_BUDGET) {
            Ok(rep) => {
                c.cases += rep.checked;
                c.skipped += rep.skipped.len();
                in_table += rep.in_table;
                for f in rep.failures {
                    c.counterexamples.push(format!(
                        "{} λ=({}): table {} tableaux {:?} oracle {:?}",
                        f.form, f.lambda, f.in_table, f.dim_tableaux, f.dim_oracle
                    ));
                }
            }
            Err(e) => c.error(&e, e.is_budget(), &ty.to_string()),
        }
    }
    let names: Vec<String> = types.iter().map(|t| t.to_string()).collect();
    c.note = format!("{} in table; {}", in_table, names.join(" "));
    c.finish()
}

pub fn exceptional_dims() -> Check {
    let mut c = Check::new("exceptional primitive dimensions");
    for row in monoid::EXCEPTIONAL_PRIMITIVES {
        let ty = LieType::exceptional(row.family);
        let w: Weight = row.e_coords.parse().expect("frozen coordinates");
        let labels: Vec<i64> = row.labels.split(',').map(|x| x.parse().expect("frozen labels")).collect();
        let rd = RootData::new(ty);
        c.case(rd.from_int_labels(&labels) == w, || format!("{ty} {} has e-coordinates {}", row.labels, w));
        match weyl_dim(&w, ty) {
            Ok(d) => c.case(d == BigInt::from(row.dim), || format!("{ty} {}: dim {d}, expected {}", row.labels, row.dim)),
            Err(e) => c.error(e, false, row.labels),
        }
    }
    c.finish()
}

/// F4 with FII on every primitive weight, and the E6 adjoint row.
pub fn exceptional_invariants_desk() -> Check {
    let mut c = Check::new("exceptional invariant dimensions (F4, E6 adjoint)");
    let mut rows: Vec<_> = rows_for(Family::F4).collect();
    rows.extend(rows_for(Family::E6).filter(|r| r.labels == "0,1,0,0,0,0"));
    for row in rows {
        let ty = LieType::exceptional(row.family);
        let w: Weight = row.e_coords.parse().expect("frozen coordinates");
        let thetas: Vec<ThetaSet> = forms_for(row.family).iter().map(|f| f.theta()).collect();
        match dim_invariants_many(&w, ty, &thetas, DIM_BUDGET) {
            Ok(got) => c.case(got == row.invariants, || format!("{ty} {}: {got:?}, expected {:?}", row.labels, row.invariants)),
            Err(e) => c.error(&e, matches!(e, OracleError::Budget { .. }), row.labels),
        }
    }
    c.finish()
}

/// Tableau characters against Freudenthal on the sweep box of each type.
pub fn character(types: &[LieType], bound: i64) -> Check {
    let mut c = Check::new("tableau characters vs Freudenthal");
    for &ty in types {
        let weights = match sweep_weights(ty, bound) {
            Ok(w) => w,
            Err(e) => {
                c.error(e, false, &ty.to_string());
                continue;
            }
        };
        let parts: Vec<Check> = weights
            .par_iter()
            .map(|lambda| {
                let mut c = Check::new("");
                let ctx = format!("{ty} {lambda}");
                let tab = match ty.family {
                    Family::A => young_a::walk::character_a_budget(lambda, ty.rank + 1, BOX_BUDGET)
                        .map_err(|e| (e.to_string(), matches!(e, young_a::YoungError::Budget { .. }))),
                    _ => character_bcd_budget(lambda, &ty, BOX_BUDGET)
                        .map_err(|e| (e.to_string(), matches!(e, doubled_bcd::BcdError::Budget { .. }))),
                };
                let fr = weight_multiplicities_budget(lambda, ty, DIM_BUDGET);
                match (tab, fr) {
                    (Ok(t), Ok(f)) => c.case(t == f.entries, || format!("{ctx}: characters differ")),
                    (Err((e, b)), _) => c.error(e, b, &ctx),
                    (_, Err(e)) => c.error(&e, matches!(e, OracleError::Budget { .. }), &ctx),
                }
                c
            })
            .collect();
        parts.into_iter().for_each(|p| c.absorb(p));
    }
    c.finish()
}

pub fn admissible(types: &[LieType]) -> Check {
    let mut c = Check::new("admissible pairs: closed form vs reflection search");
    for ty in types {
        let cols = all_columns(ty.rank);
        for a in &cols {
            for b in &cols {
                match admissible_oracle(a, b, ty) {
                    Ok(o) => c.case(admissible_pair(a, b, ty) == o, || format!("{ty} ({}) ({})", a.pretty(), b.pretty())),
                    Err(e) => c.error(e, false, &ty.to_string()),
                }
            }
        }
    }
    c.finish()
}

/// Young order with side conditions against Bruhat chaining, tuples of length <= 3.
pub fn bruhat_vs_young(types: &[LieType]) -> Check {
    let mut c = Check::new("Bruhat vs Young on column tuples");
    for &ty in types {
        if let Err(e) = bruhat_one(ty, &mut c) {
            c.error(e, false, &ty.to_string());
        }
    }
    non_transitive(&mut c);
    c.finish()
}

fn bruhat_one(ty: LieType, c: &mut Check) -> oracle::Result<()> {
    let r = ty.rank;
    let cols = all_columns(r);
    let n = cols.len();
    let mut br = BruhatOracle::new(ty)?;
    let mut chambers = Vec::with_capacity(n);
    for col in &cols {
        let w = column_weight(col, r).expect("columns fit the rank");
        chambers.push(br.extend(None, &w)?);
    }
    let ups: Vec<Vec<u64>> = chambers.iter().map(|s| br.up_closure(s)).collect();
    let young: Vec<Vec<bool>> = cols.iter().map(|a| cols.iter().map(|b| young_compare(a, b, &ty)).collect()).collect();
    let side: Vec<Vec<bool>> = cols
        .iter()
        .map(|a| cols.iter().map(|b| bruhat_side_conditions(&[a.clone(), b.clone()], &ty)).collect())
        .collect();
    let meets = |a: &[u64], b: &[u64]| a.iter().zip(b).any(|(x, y)| x & y != 0);
    for i in 0..n {
        for j in 0..n {
            let reach: Vec<u64> = ups[i].iter().zip(&chambers[j]).map(|(x, y)| x & y).collect();
            let got = reach.iter().any(|x| *x != 0) && side[i][j];
            c.case(young[i][j] == got, || format!("{ty} ({}) ({})", cols[i], cols[j]));
            let up = br.up_closure(&reach);
            for k in 0..n {
                let expect = young[i][j] && young[j][k];
                let got = meets(&up, &chambers[k]) && side[i][j] && side[j][k] && side[i][k];
                c.case(expect == got, || format!("{ty} ({}) ({}) ({})", cols[i], cols[j], cols[k]));
            }
        }
    }
    Ok(())
}

fn non_transitive(c: &mut Check) {
    let d3 = LieType::d(3);
    let nu = [Weight::from_ints(&[-1, -1, 1]), Weight::from_ints(&[1, -1, 1]), Weight::from_ints(&[2, 0, 0])];
    let Ok(mut br) = BruhatOracle::new(d3) else {
        c.case(false, || "D3 Weyl group".into());
        return;
    };
    let pattern: Vec<bool> = [&nu[..2], &nu[1..], &nu[..]]
        .iter()
        .map(|t| br.is_nondecreasing(t).unwrap_or(false))
        .collect();
    c.case(pattern == [true, true, false], || format!("non-transitive triple gave {pattern:?}"));
    let c1: Column = "3,-2,-1".parse().expect("column");
    let c2: Column = "1,3,-2".parse().expect("column");
    c.case(!young_nondecreasing(&[c1.clone(), c2.clone()], &d3) && !bruhat_side_conditions(&[c1, c2], &d3), || {
        "full columns of opposite parity compare".into()
    });
}

fn skew(outer: &[usize], inner: &[usize], n: usize) -> SkewDiagram {
    SkewDiagram::new(YoungDiagram::new(outer, n).expect("shape"), YoungDiagram::new(inner, n).expect("shape"))
        .expect("inner fits in outer")
}

/// The six-row thin skew diagram with five bridges.
pub fn thin_regression() -> Check {
    let mut c = Check::new("two-row skew regression");
    let s = skew(&[15, 13, 10, 6, 4, 2], &[12, 12, 7, 3, 0, 0], 6);
    let b = bridges(&s, 6);
    c.case(b == [2, 0, 3, 2, 1, 0], || format!("bridges {b:?}"));
    let f = exists_filling_2row(&s, 6);
    c.case(f.witness.as_deref() == Some(&[2, 0, 2, 0, 0, 0][..]), || format!("witness {:?}", f.witness));
    if let Some(w) = &f.witness {
        let t = filling_from_witness(&s, w);
        let rep = young_a::check_tableau_a(&t, 2, &ThetaSet::from_indices([1]));
        c.case(rep.map(|r| r.semistandard && r.balanced && r.codominant).unwrap_or(false), || {
            format!("witness {w:?} does not give a valid filling")
        });
    }
    // widening the first row makes the height-1 bridge a strict majority
    let p = skew(&[21, 13, 10, 6, 4, 2], &[12, 12, 7, 3, 0, 0], 6);
    let b = bridges(&p, 6);
    let total: usize = b.iter().sum();
    c.case(b[0] == 8 && total == 14, || format!("perturbed bridges {b:?}"));
    c.case(!exists_filling_2row(&p, 6).exists, || "majority bridge still fills".into());
    c.finish()
}

pub fn families(kmax: usize, lmax: usize) -> Check {
    let mut c = Check::new("column families");
    for spec in all_family_specs(kmax, lmax) {
        let t = match family_tableau(&spec) {
            Ok(t) => t,
            Err(e) => {
                c.error(e, false, &spec.to_string());
                continue;
            }
        };
        let heights: Vec<usize> = t.columns.iter().map(|x| x.height()).collect();
        c.case(heights == spec.column_heights(), || format!("{spec}: heights {heights:?}"));
        for r in 1..=spec.big + 3 {
            let mut types = vec![LieType::b(r), LieType::c(r)];
            if r >= 3 {
                types.push(LieType::d(r));
            }
            for ty in types {
                if !family_standard_for(&spec, &ty) {
                    continue;
                }
                match evaluate_tableau(&t, &ty, &ThetaSet::empty()) {
                    Ok(rep) => {
                        let want = family_expected_syndrome(&spec, &ty);
                        c.case(rep.g_standard && rep.null && rep.syndrome == want, || {
                            format!("{spec} in {ty}: standard {} null {} syndrome {} expected {want}", rep.g_standard, rep.null, rep.syndrome)
                        });
                    }
                    Err(e) => c.error(e, false, &format!("{spec} in {ty}")),
                }
            }
        }
    }
    c.finish()
}

/// Generator fillings per classical form avoid Theta ∪ sigma Theta.
pub fn generator_fillings(max_rank: usize) -> Check {
    let mut c = Check::new("generator fillings avoid Θ ∪ σΘ");
    for r in 1..=max_rank {
        let mut forms = RealForm::classical_forms_of(LieType::b(r));
        forms.extend(RealForm::classical_forms_of(LieType::c(r)));
        if r >= 3 {
            forms.extend(RealForm::classical_forms_of(LieType::d(r)));
        }
        for form in forms {
            let Ok(Some(list)) = basis_fillings(&form) else { continue };
            let ty = form.complexified().expect("classical form");
            let theta = theta_of(&form).expect("classical form");
            let both = theta.union(&theta.sigma(&ty));
            for b in list {
                match evaluate_tableau(&b.tableau, &ty, &both) {
                    Ok(rep) => c.case(rep.g_standard && rep.null && rep.codominant && rep.syndrome == b.syndrome, || {
                        format!("{form} {}: syndrome {} vs {both}", b.label, rep.syndrome)
                    }),
                    Err(e) => c.error(e, false, &format!("{form} {}", b.label)),
                }
            }
        }
    }
    c.finish()
}

fn partitions(rows: usize, max_boxes: usize) -> Vec<YoungDiagram> {
    fn go(rows: usize, left: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        if cur.len() == rows {
            return;
        }
        for x in 1..=cap.min(left) {
            cur.push(x);
            go(rows, left - x, x, cur, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    go(rows, max_boxes, max_boxes, &mut Vec::new(), &mut raw);
    raw.into_iter().map(|r| YoungDiagram::new(&r, rows).expect("partition")).collect()
}

/// Height bounds of null Pi_{[x+1,r]}-codominant doubled tableaux and the odd half-size case.
pub fn height_restrictions(types: &[LieType], max_boxes: usize) -> Check {
    let mut c = Check::new("height restrictions");
    for ty in types {
        let r = ty.rank;
        for shape in partitions(r, max_boxes) {
            for x in 0..=r {
                let f = DoubledFilter { null: true, sign: None, codominant: Some(ThetaSet::interval(x + 1, r)) };
                let found = match enumerate_doubled(&shape, ty, &f, BOX_BUDGET) {
                    Ok(v) => v,
                    Err(e) => {
                        c.error(e, false, &format!("{ty} {shape}"));
                        continue;
                    }
                };
                for t in found {
                    let (h, top) = (t.height(), t.max_abs());
                    let mut ok = h <= top && h + 2 * x >= 2 * top && h <= 2 * x;
                    if (t.size() / 2) % 2 == 1 {
                        ok &= ty.family == Family::B && top == r && h > 2 * (r - x);
                    }
                    c.case(ok, || format!("{ty} x={x} {}", t.pretty()));
                }
            }
        }
    }
    c.finish()
}

fn initial(k: usize) -> ThetaSet {
    if k <= 1 {
        ThetaSet::empty()
    } else {
        ThetaSet::interval(1, k - 1)
    }
}

/// Only rectangles admit fully codominant null fillings, and then only the row filling.
pub fn rectangles(kmax: usize) -> Check {
    let mut c = Check::new("rectangle lemma");
    for k in 1..=kmax {
        let theta = initial(k);
        for p in partitions(k, 3 * k) {
            let shape = SkewDiagram::straight(p.clone());
            match enumerate_fillings_a(&shape, k, &FillingFilter::null_codominant(theta.clone()), 32) {
                Ok(found) => {
                    let a = p.row(1);
                    let ok = if p.rows().iter().all(|&x| x == a) {
                        found.len() == 1 && found[0].rows.iter().enumerate().all(|(i, row)| row.iter().all(|&s| s == i + 1))
                    } else {
                        found.is_empty()
                    };
                    c.case(ok, || format!("k={k} {p}: {} fillings", found.len()));
                }
                Err(e) => c.error(e, false, &p.to_string()),
            }
        }
    }
    c.finish()
}

/// Skew shapes of thickness <= m and size divisible by m have balanced fillings.
pub fn thin_skew(mmax: usize, max_boxes: usize) -> Check {
    let mut c = Check::new("thin skew fillings");
    for m in 1..=mmax {
        let shapes = partitions(m, max_boxes);
        for outer in &shapes {
            for inner in shapes.iter().filter(|i| outer.contains(i)) {
                let s = SkewDiagram::new(outer.clone(), inner.clone()).expect("contained");
                if s.size() > max_boxes || s.size() % m != 0 || s.thickness() > m {
                    continue;
                }
                let n = count_fillings(&s, m, &FillingFilter::balanced(), 32).unwrap_or(0);
                c.case(n > 0, || format!("{outer}/{inner} m={m}"));
            }
        }
    }
    c.finish()
}

pub fn strip_roundtrip(nmax: usize, max_boxes: usize) -> Check {
    let mut c = Check::new("strip decomposition roundtrip");
    for n in 1..=nmax {
        for p in partitions(n, max_boxes) {
            let all = enumerate_fillings_a(&SkewDiagram::straight(p.clone()), n, &FillingFilter::default(), 32)
                .unwrap_or_default();
            for t in all {
                let back = strip_decompose(&t).and_then(|chain| strips_to_tableau(&chain));
                c.case(back.as_ref() == Ok(&t), || format!("n={n} {p}"));
            }
        }
    }
    c.finish()
}

/// Random member pairs per form; members drawn from the sweep box.
pub fn additivity(types: &[LieType], bound: i64, pairs: usize, seed: u64) -> Check {
    let mut c = Check::new("additivity of the invariant monoid");
    let mut rng = StdRng::seed_from_u64(seed);
    for &ty in types {
        let Ok(weights) = sweep_weights(ty, bound) else { continue };
        for form in RealForm::classical_forms_of(ty) {
            let members: Vec<&Weight> = weights
                .iter()
                .filter(|w| tableau_invariant_dim(&form, w, BOX_BUDGET).map(|d| d > 0).unwrap_or(false))
                .collect();
            let draws: Vec<(usize, usize)> =
                (0..pairs).map(|_| (rng.gen_range(0..members.len()), rng.gen_range(0..members.len()))).collect();
            let results: Vec<(String, Result<bool, MonoidError>)> = draws
                .par_iter()
                .map(|&(i, j)| {
                    let (a, b) = (members[i], members[j]);
                    (format!("{form}: ({a}) + ({b})"), additivity_check_budget(&form, a, b, BOX_BUDGET))
                })
                .collect();
            for (ctx, r) in results {
                match r {
                    Ok(ok) => c.case(ok, || ctx),
                    Err(e) => c.error(&e, e.is_budget(), &ctx),
                }
            }
        }
    }
    c.note = format!("{pairs} pairs per form");
    c.finish()
}

/// Hilbert basis checks: exceptional types against the frozen rows, classical
/// types against brute force on a box and by decomposing the sweep weights.
pub fn primitive_basis(ty: LieType) -> Check {
    let mut c = Check::new(format!("primitive basis of {ty}"));
    let basis = match primitive_labels(ty) {
        Ok(b) => b,
        Err(e) => {
            c.error(e, false, &ty.to_string());
            return c.finish();
        }
    };
    c.note = format!("{} elements", basis.len());
    let got: BTreeSet<Vec<i64>> = basis.iter().cloned().collect();
    if !ty.is_classical() {
        let rows: BTreeSet<Vec<i64>> =
            rows_for(ty.family).map(|r| r.labels.split(',').map(|x| x.parse().expect("labels")).collect()).collect();
        if ty.family == Family::G2 {
            c.case(got.len() == 2, || format!("{got:?}"));
        } else {
            c.case(got == rows, || format!("{got:?} vs frozen {rows:?}"));
        }
        if ty.family == Family::F4 {
            let fundamental: BTreeSet<Vec<i64>> = (0..4).map(|i| (0..4).map(|j| i64::from(i == j)).collect()).collect();
            c.case(got == fundamental, || "F4 basis is not the fundamental weights".into());
        }
        return c.finish();
    }
    let rd = RootData::new(ty);
    let side = rd.fundamental_orders().into_iter().max().unwrap_or(1).min(if ty.rank >= 4 { 4 } else { 6 });
    let brute = brute_basis(&rd, side);
    let inside: BTreeSet<Vec<i64>> = got.iter().filter(|b| b.iter().all(|&v| v <= side)).cloned().collect();
    c.case(inside == brute, || format!("box {side}: {inside:?} vs brute {brute:?}"));
    for w in sweep_weights(ty, 3).unwrap_or_default() {
        if !classify_weight(ty, &w).map(|x| x.radical).unwrap_or(false) {
            continue;
        }
        let Ok(labels) = labels_of(ty, &w) else { continue };
        let ok = decompose(&labels, &basis).is_some_and(|parts| {
            let mut sum = vec![0; ty.rank];
            for k in parts {
                sum.iter_mut().zip(&basis[k]).for_each(|(s, b)| *s += b);
            }
            sum == labels
        });
        c.case(ok, || format!("{w} does not decompose"));
    }
    c.finish()
}

fn brute_basis(rd: &RootData, side: i64) -> BTreeSet<Vec<i64>> {
    let r = rd.rank();
    let mut pts = Vec::new();
    for code in 1..(side + 1).pow(r as u32) {
        let mut x = Vec::with_capacity(r);
        let mut k = code;
        for _ in 0..r {
            x.push(k % (side + 1));
            k /= side + 1;
        }
        if rd.root_coefficients(&rd.from_int_labels(&x)).iter().all(|q| q.is_integer()) {
            pts.push(x);
        }
    }
    pts.iter()
        .filter(|x| !pts.iter().any(|y| y != *x && y.iter().zip(x.iter()).all(|(a, b)| a <= b)))
        .cloned()
        .collect()
}

/// All structural items as one list.
pub fn structural() -> Vec<Check> {
    let bcd = [LieType::b(2), LieType::c(2), LieType::b(3), LieType::c(3), LieType::d(3), LieType::b(4), LieType::c(4), LieType::d(4)];
    vec![
        height_restrictions(&bcd, 16),
        rectangles(4),
        thin_skew(3, 12),
        strip_roundtrip(4, 9),
        additivity(&sweep_types(), 2, 500, 17),
        primitive_basis(LieType::exceptional(Family::F4)),
        primitive_basis(LieType::exceptional(Family::E6)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_checks_pass() {
        assert!(thin_regression().passed());
        assert!(exceptional_dims().passed());
        assert!(primitive_basis(LieType::b(2)).passed());
        assert!(classification_sweep(&[LieType::a(1), LieType::c(2)], 2).passed());
        assert!(character(&[LieType::a(1), LieType::b(2)], 2).passed());
    }

    #[test]
    fn summary_line() {
        let mut c = Check::new("x");
        c.case(false, || "bad".into());
        let c = c.finish();
        assert_eq!(c.status, Status::Fail);
        assert!(c.summary().starts_with("FAIL x: 1 cases, 1 counterexamples"));
    }
}
