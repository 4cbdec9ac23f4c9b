use lie_core::LieType;
use monoid::form_sweep;

fn run(ty: LieType) {
    run_bounded(ty, 4);
}

fn run_bounded(ty: LieType, bound: i64) {
    let t = std::time::Instant::now();
    let rep = form_sweep(ty, bound, 64, 50_000_000).unwrap();
    eprintln!("{ty}: {} checked, {} in table, {} skipped, {:?}", rep.checked, rep.in_table, rep.skipped.len(), t.elapsed());
    assert!(rep.skipped.is_empty(), "{:?}", &rep.skipped[..rep.skipped.len().min(5)]);
    assert!(rep.passed(), "{:#?}", &rep.failures[..rep.failures.len().min(5)]);
}

#[test]
fn type_a() {
    for r in 1..=4 {
        run(LieType::a(r));
    }
}

#[test]
fn type_b() {
    for r in 1..=4 {
        run(LieType::b(r));
    }
}

#[test]
fn type_c() {
    for r in 1..=4 {
        run(LieType::c(r));
    }
}

#[test]
fn type_d() {
    for r in 3..=4 {
        run(LieType::d(r));
    }
}

#[test]
fn rank_five_spot_checks() {
    for ty in [LieType::a(5), LieType::b(5), LieType::c(5), LieType::d(5)] {
        run_bounded(ty, 2);
    }
}
