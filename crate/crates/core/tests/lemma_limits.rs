use varchenko_core::euler::{classify, euler_closure_minus_panels, lemma_chm_check, predicted_minus_panels, ChamberType};
use varchenko_core::format::parse_arrangement;
use varchenko_core::{corpus, enumerate_faces, FaceComplex, FaceId, SignVector};

fn id(c: &FaceComplex, s: &str) -> FaceId {
    c.lookup(SignVector::parse(s).unwrap().signs()).unwrap()
}

/// Two disjoint pairs of adjacent edges of a hexagon: the remaining cells are
/// the open hexagon, two edges and no vertices.
#[test]
fn disconnected_panel_sets_in_a_hexagon() {
    let arr = parse_arrangement("dim 2\n1 0 2\n1 0 -2\n0 1 2\n0 1 -2\n1 1 3\n1 1 -3\n").unwrap();
    let c = enumerate_faces(&arr).unwrap();
    let hexagon = id(&c, "-+-+-+");
    assert_eq!(classify(&c, hexagon).unwrap(), ChamberType::Bounded);
    let panels = c.panels(hexagon).unwrap();
    assert_eq!(panels.len(), 6);

    // Order the edges cyclically around the hexagon.
    let mut cycle = vec![panels[0]];
    while cycle.len() < 6 {
        let last = *cycle.last().unwrap();
        let next = panels
            .iter()
            .copied()
            .find(|&p| !cycle.contains(&p) && c.ids().any(|v| c.face(v).dim == 0 && c.leq(v, p) && c.leq(v, last)))
            .unwrap();
        cycle.push(next);
    }
    let j = [cycle[0], cycle[1], cycle[3], cycle[4]];
    assert_eq!(euler_closure_minus_panels(&c, hexagon, &j).unwrap(), -1);
    assert_eq!(predicted_minus_panels(&c, ChamberType::Bounded, &j).unwrap(), 0);
    let connected = [cycle[0], cycle[1], cycle[2]];
    assert_eq!(euler_closure_minus_panels(&c, hexagon, &connected).unwrap(), 0);
}

/// Removing the strip panel over the segment of `x + y = 1` leaves the open
/// chamber and the two half-plane panels.
#[test]
fn strip_panel_in_a_prism() {
    let c = enumerate_faces(&corpus::prism3()).unwrap();
    let chamber = id(&c, "+++");
    assert_eq!(classify(&c, chamber).unwrap(), ChamberType::Type1);
    let strip = id(&c, "++0");
    assert_eq!(euler_closure_minus_panels(&c, chamber, &[strip]).unwrap(), 1);
    assert_eq!(predicted_minus_panels(&c, ChamberType::Type1, &[strip]).unwrap(), 0);
    assert!(!lemma_chm_check(&c).passed());
}

#[test]
fn plane_corpus_has_no_such_chambers() {
    for arr in corpus::random_corpus(2024, 2, 4, 40) {
        let c = enumerate_faces(&arr).unwrap();
        assert!(lemma_chm_check(&c).passed());
    }
}
