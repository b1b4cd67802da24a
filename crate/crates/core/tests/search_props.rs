mod common;

use proptest::prelude::*;
use uksat::graph::all_pairs;
use uksat::search::{
    check_c1, check_c2, run_jobs_parallel, saturated_search, split_jobs, SearchConfig, SearchJob,
};
use uksat::symmetry::canonical_form;
use uksat::{graph6, is_uniquely_kr_saturated, Pair, PairColor, Trigraph};

fn config(n: usize, r: usize, primitive: bool) -> SearchConfig {
    SearchConfig::new(n, r).unwrap().primitive(primitive)
}

#[test]
fn search_matches_brute_force_oracle() {
    for n in 4..=6 {
        for r in [3, 4] {
            for primitive in [false, true] {
                let out = saturated_search(&config(n, r, primitive)).unwrap();
                assert_eq!(
                    common::classes_of_output(&out.graphs),
                    common::oracle_classes(n, r, primitive),
                    "n={n} r={r} primitive={primitive}"
                );
            }
        }
    }
}

#[test]
fn outputs_are_sound_and_canonical() {
    for (n, r) in [(8, 4), (9, 4), (8, 5)] {
        let out = saturated_search(&config(n, r, false)).unwrap();
        for s in &out.graphs {
            let g = graph6::decode(s).unwrap();
            assert!(is_uniquely_kr_saturated(&g, r).unwrap());
            assert_eq!(&canonical_form(&g), s);
        }
    }
}

#[test]
fn runs_are_deterministic() {
    let cfg = config(9, 4, false);
    let a = saturated_search(&cfg).unwrap();
    let b = saturated_search(&cfg).unwrap();
    assert_eq!(a, b);
}

#[test]
fn parallel_split_matches_serial() {
    let cfg = config(8, 4, false);
    let serial = saturated_search(&cfg).unwrap();
    assert!(!serial.graphs.is_empty());
    for depth in 0..=4 {
        let jobs = split_jobs(&cfg, depth).unwrap();
        for workers in [1, 2, 8] {
            let par = run_jobs_parallel(&cfg, &jobs, workers, None).unwrap();
            assert_eq!(
                par.graphs, serial.graphs,
                "depth {depth}, {workers} workers"
            );
        }
    }
}

#[test]
fn job_tokens_round_trip() {
    let cfg = config(9, 4, false);
    for job in split_jobs(&cfg, 3).unwrap() {
        let text = job.to_string();
        assert_eq!(text.parse::<SearchJob>().unwrap(), job);
    }
}

fn trigraph_from(n: usize, colours: &[u8]) -> Trigraph {
    let mut t = Trigraph::all_gray(n);
    for (p, &c) in all_pairs(n).zip(colours) {
        match c % 3 {
            0 => {
                t.set_black(p);
            }
            1 => {
                t.set_white(p);
            }
            _ => {}
        }
    }
    t
}

fn arb_trigraph(min: usize, max: usize) -> impl Strategy<Value = (Trigraph, Vec<bool>)> {
    (min..=max).prop_flat_map(|n| {
        let m = n * (n - 1) / 2;
        (
            prop::collection::vec(
                prop_oneof![2 => Just(0u8), 1 => Just(1u8), 2 => Just(2u8)],
                m,
            ),
            prop::collection::vec(any::<bool>(), m),
        )
            .prop_map(move |(c, extra)| (trigraph_from(n, &c), extra))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn constraint_failures_survive_more_black((t, extra) in arb_trigraph(4, 9), r in 3usize..5) {
        let fails_c1 = !check_c1(&t, r);
        let fails_c2 = !check_c2(&t, r);
        prop_assume!(fails_c1 || fails_c2);
        let n = t.order();
        let mut more = t.clone();
        for (p, add) in all_pairs(n).zip(extra) {
            if add && more.color(p) == PairColor::Gray {
                more.set_black(p);
            }
        }
        if fails_c1 {
            prop_assert!(!check_c1(&more, r));
        }
        if fails_c2 {
            prop_assert!(!check_c2(&more, r));
        }
    }
}

#[test]
fn root_trigraph_has_one_white_pair_with_completion() {
    let t = uksat::search::root_trigraph(7, 4);
    assert_eq!(t.color(Pair::new(0, 1)), PairColor::White);
    assert_eq!(uksat::kr_completions(&t, Pair::new(0, 1), 4).len(), 1);
}
