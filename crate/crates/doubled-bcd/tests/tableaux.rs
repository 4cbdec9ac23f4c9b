use doubled_bcd::*;
use lie_core::{apply_sigma, Family, LieType, ThetaSet};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use young_a::YoungDiagram;

fn shapes(rows: usize, max_boxes: usize) -> Vec<YoungDiagram> {
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
    raw.into_iter().map(|r| YoungDiagram::new(&r, rows).unwrap()).collect()
}

fn types() -> Vec<LieType> {
    vec![LieType::b(2), LieType::c(2), LieType::b(3), LieType::c(3), LieType::d(3), LieType::b(4), LieType::c(4), LieType::d(4)]
}

#[test]
fn height_restrictions() {
    for ty in types() {
        let r = ty.rank;
        for shape in shapes(r, 16) {
            for x in 0..=r {
                let theta = ThetaSet::interval(x + 1, r);
                let f = DoubledFilter { null: true, sign: None, codominant: Some(theta) };
                for t in enumerate_doubled(&shape, &ty, &f, 32).unwrap() {
                    let (h, top) = (t.height(), t.max_abs());
                    assert!(h <= top, "{ty} {t:?}");
                    assert!(h + 2 * x >= 2 * top, "{ty} x={x} {t:?}");
                    assert!(h <= 2 * x, "{ty} x={x} {t:?}");
                    if (t.size() / 2) % 2 == 1 {
                        assert_eq!(ty.family, Family::B, "{t:?}");
                        assert_eq!(top, r);
                        assert!(h > 2 * (r - x), "{ty} x={x} {t:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn null_tableaux_pair_up() {
    for ty in types() {
        let r = ty.rank;
        for shape in shapes(r, 12) {
            let found = enumerate_doubled(&shape, &ty, &DoubledFilter::null(), 32).unwrap();
            if found.is_empty() {
                continue;
            }
            assert!(shape.rows().iter().all(|x| x % 2 == 0), "{ty} {shape}");
            for t in found {
                let hs: Vec<usize> = t.columns.iter().map(|c| c.height()).collect();
                assert!(hs.chunks(2).all(|p| p.len() == 2 && p[0] == p[1]), "{ty} {t:?}");
            }
        }
    }
}

#[test]
fn sigma_properties() {
    let mut rng = StdRng::seed_from_u64(11);
    for ty in [LieType::d(3), LieType::d(4)] {
        let r = ty.rank;
        for shape in shapes(r, 8) {
            let mut all = enumerate_doubled(&shape, &ty, &DoubledFilter::default(), 32).unwrap();
            all.shuffle(&mut rng);
            for t in all.iter().take(40) {
                let s = sigma_tableau(t, &ty).unwrap();
                assert_eq!(sigma_tableau(&s, &ty).unwrap(), *t);
                assert_eq!(s.shape(r).unwrap(), t.shape(r).unwrap());
                assert_eq!(s.weight(r), apply_sigma(ty, &t.weight(r)));
                for i in 1..=r {
                    let theta = ThetaSet::from_indices([i]);
                    let a = evaluate_tableau(t, &ty, &theta).unwrap();
                    let b = evaluate_tableau(&s, &ty, &theta.sigma(&ty)).unwrap();
                    assert!(a.g_standard && b.g_standard);
                    assert_eq!(a.null, b.null);
                    assert_eq!(a.sign, -b.sign);
                    assert_eq!(a.codominant, b.codominant);
                }
            }
        }
    }
}

#[test]
fn shift_properties() {
    let ty = LieType::b(2);
    for shape in shapes(2, 8) {
        for t in enumerate_doubled(&shape, &ty, &DoubledFilter::null(), 32).unwrap() {
            assert_eq!(shift_tableau(&t, 0), t);
            for x in 1..=2 {
                let big = LieType::b(2 + x);
                let s = shift_tableau(&t, x);
                let rep = evaluate_tableau(&s, &big, &ThetaSet::empty()).unwrap();
                assert!(rep.null && rep.g_standard, "{t:?} shifted by {x}");
            }
        }
    }
}
