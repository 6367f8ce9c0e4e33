//! Built-in diagrams and pairs of diagrams related by Reidemeister moves.

use super::{parse_diagram, BraidWord, LinkDiagram, Sign};

pub struct CorpusEntry {
    pub name: &'static str,
    pub source: &'static str,
}

macro_rules! entry {
    ($name:literal, $file:literal) => {
        CorpusEntry { name: $name, source: include_str!(concat!("../../data/corpus/", $file)) }
    };
}

static ENTRIES: &[CorpusEntry] = &[
    entry!("unknot", "unknot.json"),
    entry!("kink_positive", "kink_positive.pd"),
    entry!("kink_negative", "kink_negative.pd"),
    entry!("trefoil_left", "trefoil_left.pd"),
    entry!("trefoil_right", "trefoil_right.pd"),
    entry!("figure8", "figure8.pd"),
    entry!("knot_6_2", "knot_6_2.pd"),
    entry!("sigma1_1", "sigma1_1.braid"),
    entry!("sigma1_2", "sigma1_2.braid"),
    entry!("sigma1_3", "sigma1_3.braid"),
    entry!("sigma1_4", "sigma1_4.braid"),
    entry!("sigma1_5", "sigma1_5.braid"),
    entry!("sigma1_6", "sigma1_6.braid"),
    entry!("sigma12_inv3", "sigma12_inv3.braid"),
    entry!("sigma12_inv4", "sigma12_inv4.braid"),
];

pub fn entries() -> &'static [CorpusEntry] {
    ENTRIES
}

pub fn load(name: &str) -> Option<LinkDiagram> {
    ENTRIES
        .iter()
        .find(|e| e.name == name)
        .map(|e| parse_diagram(e.source).expect("corpus files are valid"))
}

pub fn all() -> Vec<(&'static str, LinkDiagram)> {
    ENTRIES
        .iter()
        .map(|e| (e.name, parse_diagram(e.source).expect("corpus files are valid")))
        .collect()
}

/// Knots in the corpus that have a connected alternating diagram.
pub fn alternating_knots() -> Vec<(&'static str, LinkDiagram)> {
    all()
        .into_iter()
        .filter(|(_, d)| d.component_count() == 1 && d.crossing_count() > 0 && d.is_alternating() == Ok(true))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MoveKind {
    /// `right` has one extra curl of the given sign.
    Kink(Sign),
    /// Directly oriented second move.
    R2,
    R3,
    /// Same link, diagrams of equal writhe related by some sequence of moves.
    Isotopy,
}

#[derive(Clone, Debug)]
pub struct EquivalentPair {
    pub name: String,
    pub kind: MoveKind,
    pub left: LinkDiagram,
    pub right: LinkDiagram,
}

fn braid(strands: usize, letters: &[i32]) -> LinkDiagram {
    BraidWord::new(strands, letters.to_vec())
        .and_then(|w| w.closure())
        .expect("valid braid")
}

fn pair(name: &str, kind: MoveKind, left: LinkDiagram, right: LinkDiagram) -> EquivalentPair {
    EquivalentPair { name: name.to_string(), kind, left, right }
}

pub fn kink_pairs() -> Vec<EquivalentPair> {
    let mut out = Vec::new();
    for (name, label) in [("unknot", None), ("trefoil_left", Some(3)), ("figure8", Some(5)), ("sigma1_3", Some(2)), ("knot_6_2", Some(7))] {
        let d = load(name).expect("corpus entry");
        for sign in [Sign::Positive, Sign::Negative] {
            let k = d.with_kink(label, sign).expect("kink insertion");
            let tag = if sign == Sign::Positive { "+" } else { "-" };
            out.push(pair(&format!("{name} / curl{tag}"), MoveKind::Kink(sign), d.clone(), k));
        }
    }
    // Markov stabilization of the closed braid
    out.push(pair("sigma1^3 / stabilized", MoveKind::Kink(Sign::Positive), braid(2, &[1, 1, 1]), braid(3, &[1, 1, 1, 2])));
    out.push(pair("sigma1^3 / destabilized", MoveKind::Kink(Sign::Negative), braid(2, &[1, 1, 1]), braid(3, &[1, 1, 1, -2])));
    out
}

pub fn r2_pairs() -> Vec<EquivalentPair> {
    vec![
        pair("unlink2 / s1 s1^-1", MoveKind::R2, LinkDiagram::unlink(2), braid(2, &[1, -1])),
        pair("s1^3 s2 / inserted s2 s2^-1", MoveKind::R2, braid(3, &[1, 1, 1, 2]), braid(3, &[1, 2, -2, 1, 1, 2])),
        pair("s1^-3 s2 / inserted s2^-1 s2", MoveKind::R2, braid(3, &[-1, -1, -1, 2]), braid(3, &[-1, -2, 2, -1, -1, 2])),
        pair("figure8 braid / inserted s1 s1^-1", MoveKind::R2, braid(3, &[1, -2, 1, -2]), braid(3, &[1, -2, 1, -1, 1, -2])),
    ]
}

pub fn r3_pairs() -> Vec<EquivalentPair> {
    vec![
        pair("s1 s2 s1 s2 / s2 s1 s2 s2", MoveKind::R3, braid(3, &[1, 2, 1, 2]), braid(3, &[2, 1, 2, 2])),
        pair("negative triple", MoveKind::R3, braid(3, &[-1, -2, -1, 2]), braid(3, &[-2, -1, -2, 2])),
        pair("mixed triple", MoveKind::R3, braid(3, &[1, 2, -1, 2]), braid(3, &[-2, 1, 2, 2])),
        pair("four strands", MoveKind::R3, braid(4, &[1, 2, 1, 3, -2]), braid(4, &[2, 1, 2, 3, -2])),
    ]
}

pub fn isotopy_pairs() -> Vec<EquivalentPair> {
    vec![
        pair("trefoil_right / sigma1_3", MoveKind::Isotopy, load("trefoil_right").unwrap(), load("sigma1_3").unwrap()),
        pair("trefoil_left / sigma1^-3", MoveKind::Isotopy, load("trefoil_left").unwrap(), braid(2, &[-1, -1, -1])),
    ]
}

/// Every pair: curls, second and third moves, and whole-diagram isotopies.
pub fn equivalent_pairs() -> Vec<EquivalentPair> {
    let mut out = kink_pairs();
    out.extend(r2_pairs());
    out.extend(r3_pairs());
    out.extend(isotopy_pairs());
    out
}
