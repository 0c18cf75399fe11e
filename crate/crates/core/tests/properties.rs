use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use pseudoline::coloring::{
    degree_ge4_coloring, degree_ge4_reference_bound, greedy_cell_coloring, greedy_cell_coloring_with_order,
    greedy_pl_coloring, line_respecting_coloring, lll_resample, ordinary_graph, Coloring, LllParams,
};
use pseudoline::format::{parse_inline, parse_wd, serialize_wd, to_inline};
use pseudoline::generate::{gen_random, gen_random_simple};
use pseudoline::oracles::{chi_graph, min_colors, verify_coloring, Mode};
use pseudoline::topology::{
    arrangement_graph, boundary_segments_contiguous, build_cells, conflict_ancestors, line_vertex_hypergraph,
    sample_orders,
};
use pseudoline::Arrangement;

fn arrangement(max_n: usize) -> impl Strategy<Value = Arrangement> {
    (1..=max_n, any::<u64>(), 0.0..0.8f64).prop_map(|(n, seed, merge)| gen_random(n, seed, merge).unwrap())
}

fn compact(c: &Coloring) -> bool {
    let mut seen = vec![false; c.num_colors()];
    for &x in c.colors() {
        if x >= c.num_colors() {
            return false;
        }
        seen[x] = true;
    }
    seen.into_iter().all(|s| s)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn generated_diagrams_are_valid(a in arrangement(9)) {
        prop_assert!(a.diagram().validate().valid);
    }

    #[test]
    fn each_pair_crosses_once(a in arrangement(9)) {
        let n = a.n();
        let total: usize = a.crossings().iter().map(|c| c.degree() * (c.degree() - 1) / 2).sum();
        prop_assert_eq!(total, n * (n - 1) / 2);
    }

    #[test]
    fn text_round_trips(a in arrangement(8)) {
        let d = a.diagram();
        let text = serialize_wd(d);
        prop_assert_eq!(&parse_wd(&text).unwrap(), d);
        prop_assert_eq!(serialize_wd(&parse_wd(&text).unwrap()), text);
        prop_assert_eq!(&parse_inline(&to_inline(d)).unwrap(), d);
    }

    #[test]
    fn random_simple_is_reproducible(n in 1usize..10, seed in any::<u64>()) {
        let a = gen_random_simple(n, seed).unwrap();
        let b = gen_random_simple(n, seed).unwrap();
        prop_assert_eq!(a.diagram(), b.diagram());
        prop_assert!(a.is_simple());
    }

    #[test]
    fn restriction_composes(a in arrangement(8), mask_a in any::<u16>(), mask_b in any::<u16>()) {
        let n = a.n();
        let keep_a: BTreeSet<usize> = (1..=n).filter(|w| mask_a >> (w - 1) & 1 == 1).collect();
        prop_assume!(!keep_a.is_empty());
        // B as a subset of A, given by labels of d
        let keep_b: BTreeSet<usize> = keep_a.iter().copied().filter(|w| mask_b >> (w - 1) & 1 == 1).collect();
        prop_assume!(!keep_b.is_empty());
        let sub_a = a.restrict(&keep_a).unwrap();
        let labels_a: Vec<usize> = keep_a.iter().copied().collect();
        let b_in_a: BTreeSet<usize> = keep_b.iter().map(|w| labels_a.iter().position(|x| x == w).unwrap() + 1).collect();
        let twice = sub_a.restrict(&b_in_a).unwrap();
        let once = a.restrict(&keep_b).unwrap();
        prop_assert_eq!(twice.diagram(), once.diagram());
        prop_assert!(once.diagram().validate().valid);
    }

    #[test]
    fn mx_and_ordinary_point_bounds(a in arrangement(6)) {
        prop_assume!(!a.is_trivial());
        let (n, mx) = (a.n(), a.mx());
        prop_assert!(n <= mx * (mx - 1) + 1);
        prop_assert!(13 * a.ordinary_points().len() >= 6 * n);
    }

    #[test]
    fn cell_incidences(a in arrangement(9)) {
        let cx = build_cells(&a);
        let mut total = 0;
        for c in a.crossings() {
            prop_assert_eq!(cx.incident_cells(c.index).len(), 2 * c.degree());
            total += 2 * c.degree();
        }
        let boundary: usize = cx.cells().iter().map(|f| cx.boundary(f.id).len()).sum();
        prop_assert_eq!(boundary, total);
        prop_assert!(boundary_segments_contiguous(&a, &cx));
        if a.is_simple() {
            let n = a.n();
            prop_assert_eq!(cx.num_cells(), 1 + n + n * (n - 1) / 2);
        }
    }

    #[test]
    fn line_hypergraph_codegree(a in arrangement(9)) {
        prop_assert!(line_vertex_hypergraph(&a).codegree() <= 1);
    }

    #[test]
    fn conflict_ancestors_bounded_for_any_order(a in arrangement(9), seed in any::<u64>()) {
        let cx = build_cells(&a);
        let g = arrangement_graph(&a);
        prop_assert!(g.is_acyclic());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for order in sample_orders(&g, 3, &mut rng) {
            for c in 0..a.num_crossings() {
                prop_assert!(conflict_ancestors(&cx, &order, c).len() < a.n());
            }
            let col = greedy_cell_coloring_with_order(&cx, &order);
            prop_assert!(col.num_colors() <= a.n());
            prop_assert!(verify_coloring(&a, &col, Mode::Cell).unwrap().is_empty());
        }
    }

    #[test]
    fn constructive_colorings_verify(a in arrangement(9), seed in any::<u64>()) {
        let n = a.n();
        let cell = greedy_cell_coloring(&a);
        prop_assert!(verify_coloring(&a, &cell, Mode::Cell).unwrap().is_empty());
        prop_assert!(cell.num_colors() <= n);

        let line = line_respecting_coloring(&a, None).unwrap();
        prop_assert!(verify_coloring(&a, &line, Mode::Line).unwrap().is_empty());
        prop_assert!(line.num_colors() <= n);

        let pl = greedy_pl_coloring(&a);
        prop_assert!(verify_coloring(&a, &pl, Mode::Pl).unwrap().is_empty());

        let d4 = degree_ge4_coloring(&a, seed).unwrap();
        prop_assert!(verify_coloring(&a, &d4, Mode::PlDegreeAtLeast(4)).unwrap().is_empty());
        prop_assert!(d4.num_colors() <= degree_ge4_reference_bound(n));

        for c in [&cell, &line, &pl, &d4] {
            prop_assert!(compact(c));
        }
    }

    #[test]
    fn resampling_hits_its_target(a in arrangement(9), seed in any::<u64>(), l in 3usize..5) {
        prop_assume!(a.n() >= l);
        let r = a.n() - l;
        let res = lll_resample(&a, &LllParams::new(l, r, seed)).unwrap();
        prop_assert!(res.rounds <= 1000 * a.num_crossings().max(1));
        for c in a.crossings().iter().filter(|c| c.degree() >= l) {
            let first = res.coloring.line_color(c.lines[0]);
            prop_assert!(c.lines.iter().any(|&w| res.coloring.line_color(w) != first));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn oracle_relations(a in arrangement(5)) {
        let n = a.n();
        let cell = min_colors(&a, Mode::Cell, None).unwrap();
        let line = min_colors(&a, Mode::Line, None).unwrap();
        let both = min_colors(&a, Mode::Simultaneous, None).unwrap();
        let pl = min_colors(&a, Mode::Pl, None).unwrap();
        let (cell_v, line_v, both_v, pl_v) = (cell.value().unwrap(), line.value().unwrap(), both.value().unwrap(), pl.value().unwrap());
        prop_assert!(both_v >= cell_v.max(line_v));
        prop_assert!(line_v <= n);
        prop_assert!(greedy_cell_coloring(&a).num_colors() >= cell_v);
        prop_assert!(pl_v >= chi_graph(&ordinary_graph(&a), n).unwrap());
        if a.is_simple() {
            prop_assert_eq!(pl_v, n);
        }
        for (m, mode) in [(&cell, Mode::Cell), (&line, Mode::Line), (&both, Mode::Simultaneous), (&pl, Mode::Pl)] {
            prop_assert!(verify_coloring(&a, m.witness().unwrap(), mode).unwrap().is_empty());
        }
    }
}
