use std::collections::HashSet;

use pseudoline::format::{parse_wd, serialize_wd};
use pseudoline::generate::{enumerate_all, enumerate_canonical};
use pseudoline::topology::build_cells;
use pseudoline::Arrangement;

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Reduced words of the longest permutation of `S_n` are counted by the
/// standard Young tableaux of the staircase shape `(n-1, ..., 1)`.
fn staircase_tableaux(n: usize) -> usize {
    let cells = n * (n - 1) / 2;
    let mut hooks = 1usize;
    for row in 0..n - 1 {
        let len = n - 1 - row;
        for col in 0..len {
            // arm + leg + 1 in the staircase shape
            hooks *= 2 * (len - col) - 1;
        }
    }
    factorial(cells) / hooks
}

#[test]
fn simple_counts_match_hook_length() {
    for n in 2..=5 {
        let simple = enumerate_all(n).unwrap().filter(|d| Arrangement::new(d.clone()).unwrap().is_simple()).count();
        assert_eq!(simple, staircase_tableaux(n), "n={n}");
    }
    assert_eq!(staircase_tableaux(5), 768);
}

#[test]
fn enumeration_is_distinct_and_valid() {
    for n in 1..=5 {
        let all: Vec<_> = enumerate_all(n).unwrap().collect();
        let set: HashSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), all.len());
        assert!(all.iter().all(|d| d.validate().valid));
    }
    assert_eq!(enumerate_all(4).unwrap().count(), 25);
    assert_eq!(enumerate_all(5).unwrap().count(), 1211);
}

#[test]
fn canonical_classes_cover_everything() {
    for n in 2..=5 {
        let canon: HashSet<_> = enumerate_canonical(n).unwrap().collect();
        let from_all: HashSet<_> = enumerate_all(n).unwrap().map(|d| d.canonical_form()).collect();
        assert_eq!(canon, from_all, "n={n}");
    }
}

#[test]
fn text_round_trip_small() {
    for n in 1..=4 {
        for d in enumerate_all(n).unwrap() {
            assert_eq!(parse_wd(&serialize_wd(&d)).unwrap(), d);
        }
    }
}

#[test]
fn simple_cell_count_n6() {
    let mut simple = 0;
    for d in enumerate_all(6).unwrap() {
        let a = Arrangement::new(d).unwrap();
        if a.is_simple() {
            assert_eq!(build_cells(&a).num_cells(), 1 + 6 + 15);
            simple += 1;
        }
    }
    assert_eq!(simple, staircase_tableaux(6));
}
