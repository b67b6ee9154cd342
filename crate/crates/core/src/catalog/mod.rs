//! Finite simple groups: identifiers, parsing, isomorphism handling and
//! factored orders.

mod group;
mod order;
mod sporadic;

pub use group::{parse_group, parse_group_verbose, Family, GroupId, ParsedGroup};
pub use order::{order, order_data, out_order, pi, LieOrder, OrderData};
pub use sporadic::{Sporadic, ALL_SPORADIC};
