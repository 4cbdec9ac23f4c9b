//! One PASS/FAIL line per acceptance criterion. All comparisons are exact.

use cli::checks::{self, Check, Status};
use lie_core::LieType;

fn merge(name: &str, parts: Vec<Check>) -> (String, bool, String) {
    let ok = parts.iter().all(|c| c.status == Status::Pass);
    let detail: Vec<String> = parts.iter().map(|c| c.summary()).collect();
    (name.to_string(), ok, detail.join("; "))
}

fn main() {
    let rank34 = |fs: [fn(usize) -> LieType; 3]| -> Vec<LieType> {
        [3, 4].iter().flat_map(|&r| fs.iter().map(move |f| f(r))).collect()
    };
    let bcd4: Vec<LieType> = (1..=4)
        .flat_map(|r| {
            let mut v = vec![LieType::b(r), LieType::c(r)];
            if r >= 3 {
                v.push(LieType::d(r));
            }
            v
        })
        .collect();
    let criteria: Vec<(String, bool, String)> = vec![
        merge("1 classification sweep", vec![checks::classification_sweep(&checks::sweep_types(), 4)]),
        merge("2 exceptional dimensions", vec![checks::exceptional_dims()]),
        merge("3 exceptional invariants", vec![checks::exceptional_invariants_desk()]),
        merge(
            "4 character equivalence",
            vec![
                checks::character(&[LieType::a(1), LieType::a(2)], 3),
                checks::character(
                    &[LieType::b(2), LieType::b(3), LieType::c(2), LieType::c(3), LieType::d(3), LieType::d(4)],
                    3,
                ),
            ],
        ),
        merge("5 admissible pairs", vec![checks::admissible(&bcd4)]),
        merge("6 bruhat vs young", vec![checks::bruhat_vs_young(&rank34([LieType::b, LieType::c, LieType::d]))]),
        merge("7 two-row skew regression", vec![checks::thin_regression()]),
        merge("8 family suite", vec![checks::families(4, 4), checks::generator_fillings(9)]),
        merge("9 structural invariants", checks::structural()),
    ];
    let mut failed = Vec::new();
    for (name, ok, detail) in &criteria {
        println!("{} criterion {name}: {detail}", if *ok { "PASS" } else { "FAIL" });
        if !ok {
            failed.push(name.clone());
        }
    }
    if !failed.is_empty() {
        eprintln!("failed: {failed:?}");
        std::process::exit(1);
    }
}
