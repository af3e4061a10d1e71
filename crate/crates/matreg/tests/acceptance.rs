//! End-to-end acceptance gate: each test prints one pass/fail line for the
//! criterion it covers (visible with `--nocapture`) and asserts the result.

use matreg::arboricity;
use matreg::graph;
use matreg::ideal;
use matreg::subsets;
use matreg::suites::{run_suite, SuiteOptions, SuiteResult};
use matreg::Matroid;

fn verdict(name: &str, ok: bool) -> bool {
    println!(
        "criterion {name}: {}",
        if ok { "pass" } else { "FAIL" }
    );
    ok
}

fn summarize(results: &[SuiteResult]) -> String {
    results
        .iter()
        .map(|r| r.render(false))
        .collect::<Vec<_>>()
        .join("")
}

fn square() -> Matroid {
    Matroid::from_bases(4, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]]).unwrap()
}

#[test]
fn criterion_01_main_formula() {
    let opts = SuiteOptions {
        exhaustive_n: 4,
        t_list: vec![1, 2, 3],
        p_list: vec![2, 3],
        curated: true,
        ..SuiteOptions::default()
    };
    let r = run_suite("regsym", &opts).unwrap();
    let ok = r.ok() && r.instances > 0;
    assert!(
        verdict("1 main-formula", ok),
        "{}",
        summarize(&[r])
    );
}

#[test]
fn criterion_02_betti_agreement() {
    let opts = SuiteOptions {
        exhaustive_n: 4,
        t_list: vec![1, 2],
        with_betti: true,
        ..SuiteOptions::default()
    };
    let r = run_suite("regsym", &opts).unwrap();
    let ok = r.ok() && r.instances > 0;
    assert!(
        verdict("2 betti-agreement", ok),
        "{}",
        summarize(&[r])
    );
}

#[test]
fn criterion_03_worked_example() {
    let a = [1, 8, 3, 2];
    let gamma = ideal::degree_complex_matroid(&square(), 11, &a).unwrap();
    let expected: Vec<u32> = {
        let mut v = vec![
            subsets::mask_of(&[1, 2]),
            subsets::mask_of(&[2, 3]),
            subsets::mask_of(&[3, 4]),
        ];
        subsets::sort_canonical(&mut v);
        v
    };
    let facets_ok = gamma.facets() == expected.as_slice();
    let non_pure = !gamma.delete_vertex(3).is_pure();
    let ok = facets_ok && non_pure;
    assert!(
        verdict("3 worked-example", ok),
        "facets = {:?}, non-pure after deletion = {non_pure}",
        gamma.facets()
    );
}

#[test]
fn criterion_04_arboricity_bound() {
    let opts = SuiteOptions {
        exhaustive_n: 6,
        ..SuiteOptions::default()
    };
    let r = run_suite("arbor", &opts).unwrap();
    let ok = r.ok() && r.instances > 0 && r.equalities > 0;
    assert!(
        verdict("4 arboricity-bound", ok),
        "{}",
        summarize(&[r])
    );
}

#[test]
fn criterion_05_gamma_and_mb_bounds() {
    let opts = SuiteOptions {
        exhaustive_n: 6,
        ..SuiteOptions::default()
    };
    let g = run_suite("gamma", &opts).unwrap();
    let mb = run_suite("mb", &opts).unwrap();
    let ok = g.ok() && mb.ok() && g.instances > 0 && mb.instances > 0;
    assert!(
        verdict("5 gamma-mb-bounds", ok),
        "{}",
        summarize(&[g, mb])
    );
}

#[test]
fn criterion_06_edmonds_nash_williams() {
    let opts = SuiteOptions {
        exhaustive_n: 6,
        ..SuiteOptions::default()
    };
    let e = run_suite("edmonds", &opts).unwrap();
    let nw = run_suite("nashwilliams", &opts).unwrap();
    // four-cycle attains a(G) = c*(G) = 2
    let c4 = graph::cycle_graph(4);
    let (a_c4, _) = arboricity::arboricity_exact(&c4.graphic_matroid().unwrap()).unwrap();
    let attained = a_c4 == 2 && c4.largest_bond().unwrap() == 2;
    let ok = e.ok() && nw.ok() && e.instances > 0 && nw.instances > 0 && attained;
    assert!(
        verdict("6 edmonds-nash-williams", ok),
        "C4 a = {a_c4}; {}",
        summarize(&[e, nw])
    );
}

#[test]
fn criterion_07_cone_iff_acyclic() {
    let opts = SuiteOptions {
        exhaustive_n: 6,
        p_list: vec![2, 3],
        ..SuiteOptions::default()
    };
    let r = run_suite("cone_acyclic", &opts).unwrap();
    let ok = r.ok() && r.instances > 0;
    assert!(
        verdict("7 cone-iff-acyclic", ok),
        "{}",
        summarize(&[r])
    );
}

#[test]
fn criterion_08_degree_complex_lemmas() {
    let opts = SuiteOptions {
        samples: 500,
        ..SuiteOptions::default()
    };
    let r = run_suite("degree_lemmas", &opts).unwrap();
    let ok = r.ok() && r.instances >= 2 * opts.samples;
    assert!(
        verdict("8 degree-lemmas", ok),
        "{}",
        summarize(&[r])
    );
}

#[test]
fn criterion_09_upper_bound_window() {
    let opts = SuiteOptions {
        exhaustive_n: 4,
        t_list: vec![1, 2, 3],
        ..SuiteOptions::default()
    };
    let r = run_suite("upper", &opts).unwrap();
    let ok = r.ok() && r.instances > 0;
    assert!(
        verdict("9 upper-bound", ok),
        "{}",
        summarize(&[r])
    );
}

#[test]
fn criterion_10_linear_resolution_uniform() {
    let opts = SuiteOptions {
        exhaustive_n: 4,
        t_list: vec![1, 2],
        ..SuiteOptions::default()
    };
    let r = run_suite("linear_uniform", &opts).unwrap();
    let ok = r.ok() && r.instances > 0;
    assert!(
        verdict("10 linear-resolution", ok),
        "{}",
        summarize(&[r])
    );
}
