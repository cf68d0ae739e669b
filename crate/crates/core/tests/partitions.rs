use proptest::prelude::*;

use as_strata::partition::{
    count_omega, d_from_genus, enumerate_omega, genus_of, is_refinement, is_valid_entry,
    maximal_count_formula, maximal_partitions, minimal_partitions, Partition,
};

fn part(p: u32, v: &[u32]) -> Partition {
    Partition::new(p, v.to_vec()).unwrap()
}

#[test]
fn refinement_examples() {
    let w = is_refinement(&part(5, &[9]), &part(5, &[5, 4])).unwrap();
    assert_eq!(w, Some(vec![vec![5, 4]]));
    let e = part(5, &[4, 3, 2]);
    assert_eq!(
        is_refinement(&e, &e).unwrap(),
        Some(vec![vec![4], vec![3], vec![2]])
    );
    assert_eq!(
        is_refinement(&part(5, &[5, 4]), &part(5, &[7, 2])).unwrap(),
        None
    );
    assert!(is_refinement(&part(5, &[9]), &part(5, &[7])).is_err());
    assert!(is_refinement(&part(5, &[4]), &part(7, &[4])).is_err());
}

#[test]
fn refinement_is_a_partial_order() {
    for p in [3, 5] {
        for d in 0..=12 {
            let om = enumerate_omega(p, d).unwrap();
            let rel: Vec<Vec<bool>> = om
                .iter()
                .map(|a| {
                    om.iter()
                        .map(|b| is_refinement(a, b).unwrap().is_some())
                        .collect()
                })
                .collect();
            let n = om.len();
            for i in 0..n {
                assert!(rel[i][i]);
                for j in 0..n {
                    if i != j {
                        assert!(
                            !(rel[i][j] && rel[j][i]),
                            "p={p} d={d}: {} {}",
                            om[i],
                            om[j]
                        );
                    }
                    for k in 0..n {
                        if rel[i][j] && rel[j][k] {
                            assert!(
                                rel[i][k],
                                "p={p} d={d}: transitivity {} {} {}",
                                om[i], om[j], om[k]
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn witness_groupings_sum_correctly() {
    for d in 0..=12 {
        let om = enumerate_omega(5, d).unwrap();
        for a in &om {
            for b in &om {
                if let Some(blocks) = is_refinement(a, b).unwrap() {
                    let sums: Vec<u32> = blocks.iter().map(|bl| bl.iter().sum()).collect();
                    assert_eq!(sums, a.entries());
                    let mut all: Vec<u32> = blocks.concat();
                    all.sort_unstable_by(|x, y| y.cmp(x));
                    assert_eq!(all, b.entries());
                }
            }
        }
    }
}

#[test]
fn single_entry_partition_is_the_unique_minimum_when_valid() {
    for p in [3, 5, 7] {
        for d in 0..=30 {
            let om = enumerate_omega(p, d).unwrap();
            let top = om.iter().find(|x| x.len() == 1);
            if (d + 1) % p != 0 {
                let top = top.expect("single entry partition");
                assert_eq!(top.entries(), [d + 2]);
                assert!(om.iter().all(|x| is_refinement(top, x).unwrap().is_some()));
                assert_eq!(minimal_partitions(p, d).unwrap(), vec![top.clone()]);
            } else {
                assert!(top.is_none(), "p={p} d={d}");
            }
        }
    }
}

#[test]
fn maximal_partitions_use_only_twos_and_threes() {
    for p in [3, 5, 7] {
        for d in 0..=30 {
            let max = maximal_partitions(p, d).unwrap();
            assert!(max
                .iter()
                .all(|x| x.entries().iter().all(|&e| e == 2 || e == 3)));
            assert_eq!(max.len() as i64, maximal_count_formula(d), "p={p} d={d}");
        }
    }
}

#[test]
fn examples_at_p5_d7() {
    assert_eq!(minimal_partitions(5, 7).unwrap(), vec![part(5, &[9])]);
    assert_eq!(
        maximal_partitions(5, 7).unwrap(),
        vec![part(5, &[3, 3, 3]), part(5, &[3, 2, 2, 2])]
    );
    assert_eq!(maximal_count_formula(7), 2);
    let single = enumerate_omega(3, 0).unwrap();
    assert_eq!(single, vec![part(3, &[2])]);
    assert_eq!(minimal_partitions(3, 0).unwrap(), single);
    assert_eq!(maximal_partitions(3, 0).unwrap(), single);
}

#[test]
fn genus_conversions() {
    let g = genus_of(&part(5, &[4, 3]));
    assert_eq!((g.d, g.g, g.p_rank), (5, 10, 4));
    assert_eq!(d_from_genus(5, 14).unwrap(), Some(7));
    assert_eq!(d_from_genus(3, 0).unwrap(), Some(0));
    assert_eq!(d_from_genus(5, 3).unwrap(), None);
    assert!(d_from_genus(4, 3).is_err());
}

#[test]
fn invalid_partitions_are_rejected() {
    assert!(Partition::new(5, vec![6, 3]).is_err());
    assert!(Partition::new(5, vec![1, 3]).is_err());
    assert!(Partition::new(5, vec![]).is_err());
    assert!(Partition::new(6, vec![2]).is_err());
    assert_eq!(part(5, &[2, 4, 3]).entries(), [4, 3, 2]);
}

proptest! {
    #[test]
    fn enumeration_is_valid_sorted_and_complete(p in prop::sample::select(vec![2u32, 3, 5, 7, 11]), d in 0u32..28) {
        let om = enumerate_omega(p, d).unwrap();
        prop_assert_eq!(om.len() as u64, count_omega(p, d).unwrap());
        for x in &om {
            prop_assert_eq!(x.d(), d);
            prop_assert!(x.entries().iter().all(|&e| is_valid_entry(p, e)));
            prop_assert!(x.entries().windows(2).all(|w| w[0] >= w[1]));
        }
        prop_assert!(om.windows(2).all(|w| w[0].entries() > w[1].entries()));
    }

    #[test]
    fn genus_round_trip(p in prop::sample::select(vec![2u32, 3, 5, 7]), d in 0u32..40) {
        if let Some(x) = enumerate_omega(p, d).unwrap().first() {
            let g = genus_of(x);
            prop_assert_eq!(d_from_genus(p, g.g).unwrap(), Some(d));
        }
    }
}
