use as_strata::partition::{is_valid_entry, Partition};
use as_strata::strata::{
    dimension, edge_dim_case, edge_dim_case_direct, edge_dim_case_uncorrected, is_irreducible,
    stratum_dims, EdgeDimCase,
};

fn part(p: u32, v: &[u32]) -> Partition {
    Partition::new(p, v.to_vec()).unwrap()
}

#[test]
fn dimension_spot_checks() {
    assert_eq!(dimension(&part(5, &[7])), 3);
    assert_eq!(dimension(&part(5, &[5, 2])), 4);
    assert_eq!(dimension(&part(5, &[9])), 5);
    assert_eq!(dimension(&part(3, &[2])), -1);
}

#[test]
fn residue_criterion_agrees_with_dimensions() {
    for p in [2, 3, 5, 7] {
        for e in 2..=60 {
            for e2 in 2..=e / 2 {
                let e1 = e - e2;
                if [e, e1, e2].iter().all(|&x| is_valid_entry(p, x)) {
                    assert_eq!(
                        edge_dim_case(p, e, [e1, e2]).unwrap(),
                        edge_dim_case_direct(p, e, [e1, e2]).unwrap(),
                        "p={p}: {e} -> {e1} + {e2}"
                    );
                }
            }
        }
    }
}

#[test]
fn uncorrected_criterion_regression() {
    assert_eq!(
        edge_dim_case_direct(5, 7, [5, 2]).unwrap(),
        EdgeDimCase::DropByOne
    );
    assert_eq!(
        edge_dim_case_uncorrected(5, 7, [5, 2]).unwrap(),
        EdgeDimCase::EqualDims
    );
    assert_eq!(edge_dim_case(5, 4, [2, 2]).unwrap(), EdgeDimCase::EqualDims);
}

#[test]
fn dims_never_exceed_top() {
    for p in [3, 5, 7] {
        for d in 0..=25 {
            for s in stratum_dims(p, d).unwrap() {
                assert!(s.dim < d as i64);
            }
        }
    }
}

#[test]
fn irreducibility() {
    assert!(is_irreducible(5, 0).unwrap());
    assert!(!is_irreducible(5, 4).unwrap());
    assert!(is_irreducible(3, 1).unwrap());
}
