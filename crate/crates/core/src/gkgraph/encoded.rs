use super::graph::GkGraph;
use crate::catalog::{Family, GroupId};
use crate::error::{Error, Result};

const TWISTED_E6_3_VERTICES: [u64; 10] = [2, 3, 5, 7, 13, 19, 37, 41, 61, 73];
const TWISTED_E6_3_EDGES: [(u64, u64); 12] = [
    (19, 37),
    (2, 41),
    (2, 5),
    (2, 13),
    (2, 61),
    (2, 3),
    (2, 7),
    (5, 13),
    (13, 7),
    (7, 3),
    (61, 3),
    (73, 7),
];

const E6_3_VERTICES: [u64; 9] = [2, 3, 5, 7, 11, 13, 41, 73, 757];
const E6_3_EDGES: [(u64, u64); 12] = [
    (2, 7),
    (2, 5),
    (2, 13),
    (2, 11),
    (2, 3),
    (2, 41),
    (13, 73),
    (13, 7),
    (3, 13),
    (7, 5),
    (3, 7),
    (3, 11),
];

/// The published prime graphs of `E6(3)` and `2E6(3)`, transcribed edge by
/// edge. These are reference data, not computed.
pub fn encoded_graph(target: &GroupId) -> Result<GkGraph> {
    let (vertices, edges): (&[u64], &[(u64, u64)]) = match *target {
        GroupId::Exceptional {
            family: Family::E6,
            q: 3,
        } => (&E6_3_VERTICES, &E6_3_EDGES),
        GroupId::Exceptional {
            family: Family::E6Twisted,
            q: 3,
        } => (&TWISTED_E6_3_VERTICES, &TWISTED_E6_3_EDGES),
        _ => {
            return Err(Error::Unsupported {
                group: target.to_string(),
                reason: "encoded graphs exist only for E6(3) and 2E6(3)".into(),
            })
        }
    };
    GkGraph::new(vertices.iter().copied(), edges.iter().copied())
}
