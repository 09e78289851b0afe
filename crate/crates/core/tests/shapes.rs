use proptest::prelude::*;

use cyclohecke::shapes::{dominance_geq, dominance_linear_extension, standard_tableaux, Multipartition};

fn shapes() -> Vec<Multipartition> {
    Multipartition::all(2, 4)
}

proptest! {
    #[test]
    fn dominance_is_a_partial_order(a in 0usize..20, b in 0usize..20, c in 0usize..20) {
        let all = shapes();
        let (x, y, z) = (&all[a % all.len()], &all[b % all.len()], &all[c % all.len()]);
        prop_assert!(dominance_geq(x, x).unwrap());
        if dominance_geq(x, y).unwrap() && dominance_geq(y, x).unwrap() {
            prop_assert_eq!(x, y);
        }
        if dominance_geq(x, y).unwrap() && dominance_geq(y, z).unwrap() {
            prop_assert!(dominance_geq(x, z).unwrap());
        }
    }
}

#[test]
fn linear_extension_respects_dominance() {
    let order = dominance_linear_extension(&shapes());
    for (i, x) in order.iter().enumerate() {
        for y in &order[i + 1..] {
            assert!(!(dominance_geq(y, x).unwrap() && x != y), "{y} dominates {x} but comes later");
        }
    }
}

#[test]
fn multipartition_counts() {
    // coefficients of Π (1 - t^k)^{-2}
    let counts: Vec<usize> = (0..=5).map(|n| Multipartition::all(2, n).len()).collect();
    assert_eq!(counts, vec![1, 2, 5, 10, 20, 36]);
}

#[test]
fn hook_length_formula() {
    for lambda in Multipartition::all(1, 6) {
        let p = lambda.component(1).parts().to_vec();
        let conj: Vec<usize> = (0..p.first().copied().unwrap_or(0))
            .map(|j| p.iter().filter(|&&r| r > j).count())
            .collect();
        let mut hooks = 1usize;
        for (i, &row) in p.iter().enumerate() {
            for j in 0..row {
                hooks *= row - j + conj[j] - i - 1;
            }
        }
        assert_eq!(standard_tableaux(&lambda).len(), 720 / hooks, "{lambda}");
    }
}
