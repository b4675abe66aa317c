//! Anti-Ramsey numbers of paths: the maximum number of colors an edge
//! coloring of a graph can use without a rainbow path of `k` edges.
//!
//! * [`exact`]: exhaustive search for `ar(G, P_k)`, with a precolored variant.
//! * [`tree`]: linear-time `ar(T, P_3)` on forests.
//! * [`approx`]: greedy and bipartite approximations for `P_3`.
//! * [`reductions`]: the independent set and 3-SAT hardness constructions.

pub mod approx;
pub mod coloring;
pub mod exact;
pub mod format;
pub mod generators;
pub mod graph;
pub mod paths;
pub mod reductions;
pub mod solve;
pub mod tree;

pub use approx::{bipartite_star, greedy_bounded_degree, ApproxError, Bipartition, Side};
pub use coloring::{color_classes_connected, distinct_color_count, vertex_role, Color, EdgeColoring, PartialColoring, VertexRole};
pub use exact::{ar_exact, ar_precolored, upper_bound, PrecoloredInstance, SearchLimits, SolveError};
pub use format::{parse_graph, write_graph, GraphFile, ParseError};
pub use graph::{Graph, GraphError};
pub use paths::{enumerate_paths, find_rainbow_path, is_pk_free, SimplePath};
pub use solve::{SearchStats, SolveResult, SolveStatus};
pub use tree::{carnit, carnit_rooted, improve_to_mono_rainbow, normalize_color_connected, TreeDpTable, TreeError};
