//! Splits, handles, line graphs, contraction chains, exhaustive
//! enumeration, and the exhaustive check of the classification.

pub mod chain;
pub mod enumerate;
pub mod handle;
pub mod line;
pub mod split;
pub mod theorem;

pub use chain::{chain_decompose, chain_search, contractible_edges, Chain};
pub use enumerate::{enumerate_graphs, enumerate_graphs_bounded};
pub use handle::{add_handle, generate_cyclically_4conn_cubic, handle_additions};
pub use line::{
    is_cubic_line_graph, is_square_of_cycle, is_terminal, line_graph, root_graph_cubic,
};
pub use split::{
    apply_split, enumerate_splits, enumerate_vertex_splits, split_specs, SplitClass, SplitSpec,
};
pub use theorem::{verify_theorem, OrderReport, TheoremReport};
