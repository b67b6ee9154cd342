//! Prime graphs: the transcribed graphs of the two target groups, rule-based
//! graphs for `Alt(n)` and `L(2,q)`, and text serialization.

mod encoded;
mod export;
mod graph;
mod rule;

pub use encoded::encoded_graph;
pub use export::{export, parse_graph, parse_graph_as, GraphFormat};
pub use graph::{nonneighbors_of, GkGraph};
pub use rule::{alternating_graph, l2_graph, rule_graph};
