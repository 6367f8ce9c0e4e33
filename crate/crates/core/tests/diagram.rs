use knotforge::diagram::corpus::{self, equivalent_pairs, MoveKind};
use knotforge::diagram::{parse_diagram, smooth, BraidWord, DiagramError, KauffmanState, LinkDiagram, Sign, Smoothing};

#[test]
fn trefoil_summary() {
    let d = parse_diagram("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap();
    assert_eq!((d.crossing_count(), d.component_count(), d.writhe()), (3, 1, -3));
    assert_eq!(d.is_alternating(), Ok(true));
    assert!(d.is_connected());
}

#[test]
fn three_formats_agree() {
    let pd = parse_diagram("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]").unwrap();
    let json = parse_diagram(r#"{"pd": [[1,4,2,5],[3,6,4,1],[5,2,6,3]], "free_loops": 0}"#).unwrap();
    assert_eq!(pd, json);
    let braid = parse_diagram("braid 2: -1 -1 -1").unwrap();
    assert_eq!((braid.crossing_count(), braid.writhe(), braid.component_count()), (3, -3, 1));
}

#[test]
fn pd_text_round_trips() {
    for (name, d) in corpus::all() {
        if d.free_loops() > 0 {
            continue;
        }
        assert_eq!(parse_diagram(&d.to_pd_string()).unwrap(), d, "{name}");
        let json = serde_json::to_string(&d.to_pd_json()).unwrap();
        assert_eq!(parse_diagram(&json).unwrap(), d, "{name}");
    }
}

#[test]
fn empty_and_free_loops() {
    let e = parse_diagram("").unwrap();
    assert_eq!((e.crossing_count(), e.component_count()), (0, 0));
    let u = parse_diagram(r#"{"pd": [], "free_loops": 2}"#).unwrap();
    assert_eq!(u.component_count(), 2);
    assert_eq!(smooth(&u, &KauffmanState(vec![])).unwrap().circle_count, 2);
}

#[test]
fn malformed_input_reports_location() {
    match parse_diagram("X[1,2,3]") {
        Err(DiagramError::MalformedSyntax { line, column, .. }) => assert_eq!((line, column), (1, 8)),
        other => panic!("{other:?}"),
    }
    assert!(matches!(parse_diagram("X[1,2,3,4]"), Err(DiagramError::LabelCountError { .. })));
    assert!(matches!(parse_diagram("braid 2: 3"), Err(DiagramError::BadGenerator { .. })));
}

#[test]
fn mirror_negates_writhe() {
    for (name, d) in corpus::all() {
        let m = d.mirror();
        assert_eq!(m.writhe(), -d.writhe(), "{name}");
        assert_eq!(m.mirror(), d, "{name}");
        assert_eq!(m.component_count(), d.component_count());
    }
}

#[test]
fn torus_link_components() {
    for n in 1..=6 {
        let d = corpus::load(&format!("sigma1_{n}")).unwrap();
        assert_eq!(d.component_count(), if n % 2 == 0 { 2 } else { 1 });
        assert_eq!(d.writhe(), n as i64);
    }
    let w = BraidWord::new(3, vec![1, 2]).unwrap();
    assert_eq!(w.concat(&w.inverse()).closure().unwrap().writhe(), 0);
}

#[test]
fn smoothing_circle_counts() {
    let d = corpus::load("sigma1_3").unwrap();
    assert_eq!(smooth(&d, &KauffmanState::all(3, Smoothing::A)).unwrap().circle_count, 2);
    assert_eq!(smooth(&d, &KauffmanState::all(3, Smoothing::B)).unwrap().circle_count, 3);
    assert!(matches!(smooth(&d, &KauffmanState(vec![])), Err(DiagramError::StateSizeMismatch { .. })));
}

#[test]
fn kink_pairs_differ_by_one_crossing() {
    for p in equivalent_pairs() {
        match p.kind {
            MoveKind::Kink(s) => {
                assert_eq!(p.right.crossing_count(), p.left.crossing_count() + 1, "{}", p.name);
                assert_eq!(p.right.writhe() - p.left.writhe(), s.value(), "{}", p.name);
            }
            _ => assert_eq!(p.left.writhe(), p.right.writhe(), "{}", p.name),
        }
        assert_eq!(p.left.component_count(), p.right.component_count(), "{}", p.name);
    }
}

#[test]
fn reordering_keeps_the_diagram() {
    let d = corpus::load("knot_6_2").unwrap();
    let order: Vec<usize> = (0..d.crossing_count()).rev().collect();
    let r = d.reorder_crossings(&order);
    assert_eq!((r.writhe(), r.component_count()), (d.writhe(), d.component_count()));
    assert_eq!(r.crossings()[0], d.crossings()[d.crossing_count() - 1]);
    let k = LinkDiagram::unknot().with_kink(None, Sign::Negative).unwrap();
    assert_eq!(k.writhe(), -1);
}
