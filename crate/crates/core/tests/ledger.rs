//! Ledger contents on hand-checkable graphs.

use dpcolor::discharging::{discharge, string_rate, Charge, Element, Rule};
use dpcolor::fixtures;
use dpcolor::format::parse_pg;
use dpcolor::labelling::LabelledGraph;
use dpcolor::classify;

fn id(g: dpcolor::PlaneGraph) -> LabelledGraph {
    LabelledGraph::identity(g, 3).unwrap()
}

#[test]
fn h_ledger_golden() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/");
    let g = parse_pg(&std::fs::read_to_string(format!("{dir}h.pg")).unwrap()).unwrap();
    let want = std::fs::read_to_string(format!("{dir}h.ledger")).unwrap();
    assert_eq!(discharge(&id(g)).unwrap().to_text(), want);
}

#[test]
fn anchors_pay_each_string_vertex() {
    for k in [5, 6, 8, 10, 11, 12] {
        for t in 1..=(k - 1) / 2 - 1 {
            let g = fixtures::string_face(k, t);
            assert!(classify(&g).in_class_g);
            let led = discharge(&id(g.clone())).unwrap();
            let f = (1..g.n_faces()).find(|&f| g.face_size(f) == k).unwrap();
            let rate = if k == 5 { Charge::new(5, 52) } else { Charge::new(2, k as i64) - Charge::new(2, 13) };
            assert_eq!(string_rate(k, false), rate);
            for x in 1..=t {
                for anchor in [0, t + 1] {
                    let got = led.sent(Rule::R8, Element::Vertex(anchor), Element::Vertex(x));
                    assert_eq!(got, rate, "k {k} t {t}: {anchor} -> {x}");
                }
            }
            // the face keeps nothing and each string vertex gets its share
            let share = if k == 5 { Charge::new(1, 2) } else { Charge::new(k as i64 - 4, k as i64) };
            let rule = if k == 5 { Rule::R5 } else { Rule::R6 };
            assert_eq!(led.sent(rule, Element::Face(f), Element::Vertex(1)), share);
            if k >= 6 {
                assert!(led.ch_star(Element::Face(f)).is_zero());
            }
            assert!(led.total_final().is_zero());
        }
    }
}

#[test]
fn string_on_a_long_face_pays_nothing() {
    let g = fixtures::string_face(14, 3);
    let led = discharge(&id(g)).unwrap();
    assert!(led.transfers.iter().all(|t| t.rule != Rule::R8));
}
