use doubled_bcd::*;
use lie_core::LieType;

fn types(max_r: usize) -> Vec<LieType> {
    let mut v = Vec::new();
    for r in 1..=max_r {
        v.push(LieType::b(r));
        v.push(LieType::c(r));
        if r >= 3 {
            v.push(LieType::d(r));
        }
    }
    v
}

#[test]
fn admissible_closed_form_matches_oracle() {
    for ty in types(4) {
        let cols = all_columns(ty.rank);
        for c in &cols {
            for d in &cols {
                let closed = admissible_pair(c, d, &ty);
                let bfs = admissible_oracle(c, d, &ty).unwrap();
                assert_eq!(closed, bfs, "{ty}: ({}, {})", c.pretty(), d.pretty());
            }
        }
    }
}

#[test]
fn hasse_cover_is_transitive_reduction() {
    for ty in types(4) {
        let cols = all_columns(ty.rank);
        let n = cols.len();
        let leq: Vec<Vec<bool>> =
            cols.iter().map(|a| cols.iter().map(|b| young_compare(a, b, &ty)).collect()).collect();
        for i in 0..n {
            for j in 0..n {
                let cover = i != j && leq[i][j] && !(0..n).any(|k| k != i && k != j && leq[i][k] && leq[k][j]);
                assert_eq!(
                    hasse_cover(&cols[i], &cols[j], &ty),
                    cover,
                    "{ty}: ({}, {})",
                    cols[i].pretty(),
                    cols[j].pretty()
                );
            }
        }
    }
}

#[test]
fn young_order_is_a_partial_order() {
    for ty in [LieType::b(3), LieType::c(3), LieType::d(3), LieType::d(4)] {
        let cols = all_columns(ty.rank);
        let n = cols.len();
        let leq: Vec<Vec<bool>> =
            cols.iter().map(|a| cols.iter().map(|b| young_compare(a, b, &ty)).collect()).collect();
        for i in 0..n {
            assert!(leq[i][i]);
            for j in 0..n {
                if i != j && leq[i][j] {
                    assert!(!leq[j][i]);
                }
                if !leq[i][j] {
                    continue;
                }
                for k in 0..n {
                    if leq[j][k] {
                        assert!(leq[i][k], "{ty}: {} {} {}", cols[i], cols[j], cols[k]);
                    }
                }
            }
        }
    }
}
