//! Planar diagrams of small knots and links, stored as braid closures.

use serde::{Deserialize, Serialize};

use super::PlanarDiagram;

/// Fixture file: the braid and the diagram generated from it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FixtureFile {
    pub name: String,
    pub braid: Vec<i32>,
    pub strands: usize,
    #[serde(flatten)]
    pub diagram: PlanarDiagram,
}

/// `(name, braid word, strands)`. Braids with positive generators give the chirality
/// with positive writhe; `8_17` is the closure read off its three-strand ladder.
const TABLE: &[(&str, &[i32], usize)] = &[
    ("unknot", &[], 1),
    ("hopf", &[1, 1], 2),
    ("3_1", &[1, 1, 1], 2),
    ("4_1", &[1, -2, 1, -2], 3),
    ("5_1", &[1, 1, 1, 1, 1], 2),
    ("5_2", &[1, 1, 1, 2, -1, 2], 3),
    ("8_17", &[-1, 2, -1, 2, -1, -1, 2, 2], 3),
    ("8_19", &[1, 2, 1, 2, 1, 2, 1, 2], 3),
];

pub const FIXTURE_NAMES: &[&str] = &["unknot", "hopf", "3_1", "4_1", "5_1", "5_2", "8_17", "8_19"];

const FILES: &[(&str, &str)] = &[
    ("unknot", include_str!("../../data/pd/unknot.json")),
    ("hopf", include_str!("../../data/pd/hopf.json")),
    ("3_1", include_str!("../../data/pd/3_1.json")),
    ("4_1", include_str!("../../data/pd/4_1.json")),
    ("5_1", include_str!("../../data/pd/5_1.json")),
    ("5_2", include_str!("../../data/pd/5_2.json")),
    ("8_17", include_str!("../../data/pd/8_17.json")),
    ("8_19", include_str!("../../data/pd/8_19.json")),
];

/// `(braid, strands)` of a fixture.
pub fn fixture_braid(name: &str) -> Option<(&'static [i32], usize)> {
    TABLE.iter().find(|e| e.0 == name).map(|e| (e.1, e.2))
}

/// The stored diagram of a fixture.
pub fn fixture(name: &str) -> Option<PlanarDiagram> {
    let (_, text) = FILES.iter().find(|e| e.0 == name)?;
    let f: FixtureFile = serde_json::from_str(text).expect("bundled fixture parses");
    Some(f.diagram)
}

#[cfg(test)]
fn generate(name: &str) -> FixtureFile {
    let (braid, strands) = fixture_braid(name).expect("known fixture");
    FixtureFile {
        name: name.into(),
        braid: braid.to_vec(),
        strands,
        diagram: PlanarDiagram::from_braid(braid, strands).expect("valid braid"),
    }
}
