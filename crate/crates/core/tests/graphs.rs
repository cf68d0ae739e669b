use as_strata::graph::{
    build_cd, build_gd, connectivity_report, high_entry_strata_share_component, EdgeKind,
    Justification, Status,
};
use as_strata::partition::is_valid_entry;

#[test]
fn closure_edges_increase_dimension() {
    for p in [3, 5, 7] {
        for d in 0..=20 {
            let cd = build_cd(p, d).unwrap();
            for e in &cd.edges {
                assert!(
                    cd.vertices[e.from].dim < cd.vertices[e.to].dim,
                    "p={p} d={d}"
                );
            }
        }
    }
}

#[test]
fn two_split_edges_are_closures_iff_dimension_grows() {
    for p in [3, 5, 7] {
        for d in 0..=20 {
            let gd = build_gd(p, d).unwrap();
            let cd = build_cd(p, d).unwrap();
            for e in gd.edges.iter().filter(|e| e.has(EdgeKind::Gd2split)) {
                let (a, b) = (&gd.vertices[e.from], &gd.vertices[e.to]);
                let in_cd = cd
                    .find_edge(a.partition.entries(), b.partition.entries())
                    .is_some();
                assert_eq!(
                    in_cd,
                    a.dim < b.dim,
                    "p={p} d={d}: {} -> {}",
                    a.partition,
                    b.partition
                );
            }
        }
    }
}

#[test]
fn char3_refinements_are_closures() {
    for d in 0..=30 {
        let gd = build_gd(3, d).unwrap();
        let cd = build_cd(3, d).unwrap();
        for e in &gd.edges {
            let (a, b) = (&gd.vertices[e.from].partition, &gd.vertices[e.to].partition);
            assert!(
                cd.find_edge(a.entries(), b.entries()).is_some(),
                "d={d}: {a} -> {b}"
            );
        }
        assert!(cd.is_connected(), "d={d}");
    }
}

#[test]
fn high_entry_strata_share_a_component() {
    for p in [5, 7] {
        for d in 0..=20 {
            if is_valid_entry(p, d + 2) {
                assert!(
                    high_entry_strata_share_component(p, d).unwrap(),
                    "p={p} d={d}"
                );
            } else {
                assert!(high_entry_strata_share_component(p, d).is_err());
            }
        }
    }
}

#[test]
fn labels_record_the_split() {
    let cd = build_cd(5, 7).unwrap();
    let e = cd.find_edge(&[9], &[4, 3, 2]).unwrap();
    assert!(e.has(EdgeKind::CdC));
    let e = cd.find_edge(&[9], &[3, 2, 2, 2]).unwrap();
    assert!(e.has(EdgeKind::CdE));
    let cd = build_cd(5, 8).unwrap();
    let e = cd.find_edge(&[10], &[5, 5]).unwrap();
    assert!(e.has(EdgeKind::CdA) && e.has(EdgeKind::CdD));
}

#[test]
fn json_and_dot_exports() {
    let cd = build_cd(5, 7).unwrap();
    let j = cd.to_json();
    assert_eq!(j["vertices"].as_array().unwrap().len(), 7);
    assert_eq!(j["kind"], "Cd");
    let nine = j["vertices"]
        .as_array()
        .unwrap()
        .iter()
        .find(|v| v["partition"] == serde_json::json!([9]))
        .unwrap();
    assert_eq!(nine["dim"], 5);
    let dot = build_gd(5, 7).unwrap().to_dot();
    assert!(dot.starts_with("digraph Gd_p5_d7 {"));
    assert_eq!(dot.matches(" -> ").count(), 9);
    let g4 = build_gd(5, 4).unwrap().to_dot();
    assert_eq!(g4.matches("[label=").count(), 3);
    assert_eq!(g4.matches(" -> ").count(), 1);
}

#[test]
fn reports() {
    let r = connectivity_report(5, 14).unwrap();
    assert_eq!(
        (r.status, r.justification, r.d),
        (Status::Connected, Justification::CdConnected, Some(7))
    );
    let r = connectivity_report(5, 3).unwrap();
    assert_eq!(
        (r.status, r.justification, r.d),
        (Status::Connected, Justification::EmptyModuli, None)
    );
    let r = connectivity_report(7, 6).unwrap();
    assert_eq!(
        (r.status, r.justification),
        (Status::Disconnected, Justification::EqualDimensionStrata)
    );
    let r = connectivity_report(5, 10).unwrap();
    assert_eq!(r.status, Status::Unknown);
    assert!(connectivity_report(6, 3).is_err());
}
