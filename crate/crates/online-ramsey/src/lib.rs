//! Game engine, strategy library, and exact solver for the **online Ramsey
//! game for the triangle** played on restricted host-graph classes.
//!
//! The game: Builder draws one edge per turn on an unbounded vertex set,
//! subject to the evolving graph staying inside a host class (for example
//! "contains no copy of a fixed graph F", or "has no K₄ minor"); Painter
//! immediately colors each edge red or blue. Builder wins at the first
//! monochromatic triangle; Painter wins by surviving forever — here,
//! by surviving an edge budget under exhaustive adversarial search.
//!
//! The crate is organized as a library with a thin `ramsey` binary on top:
//!
//! - [`graph`] — the colored board and its incremental queries;
//! - [`patterns`] — the fixed pattern catalog and subgraph search;
//! - [`minors`] — minor containment (fast K₄ recognition and a generic
//!   desk-scale oracle) plus the path-ordering predicate;
//! - [`painter`] — all Painter policies and the good/bad taxonomy;
//! - [`builder`] — all Builder policies, as adaptive move generators;
//! - [`engine`] — the referee: legality, win detection, replayable traces;
//! - [`solver`] — exact minimax over canonicalized boards, plus exhaustive
//!   verification of painters and builders;
//! - [`cli`] — the `ramsey` command-line front end (play / verify / solve /
//!   classify / repl).
//!
//! Runnable walkthroughs of each capability live in `examples/`.

pub mod builder;
pub mod cli;
pub mod engine;
pub mod graph;
pub mod minors;
pub mod painter;
pub mod patterns;
pub mod solver;

pub use builder::{
    builder_k15free, builder_k4free, builder_yfree, builder_yfree_pendant, force_mono_path,
    mono_path_move_bound, strategy1, BuilderMove, BuilderPolicy,
};
pub use engine::{
    check_move, run_game, Constraint, EngineError, GameTrace, MinorTarget, Outcome,
};
pub use graph::{Color, ColoredGraph, CycleView, GraphError, Vertex};
pub use minors::{
    check_path_ordering, find_minor_model, has_k23_minor, has_k4_minor, has_minor, MinorError,
    MinorModel, OrderingError,
};
pub use painter::{
    is_good, is_zero_cycle_good, strategy2, strategy2_closure, strategy3, strategy3_closure,
    strategy4, strategy4_closure, strategy_zero_cycle, GoodnessProperty, GoodnessVerdict,
    PainterError, PainterPolicy, Subject,
};
pub use patterns::{
    catalog, classify_forbidden_graph, contains_subgraph, contains_subgraph_anchored, mono_c3,
    Classification, Embedding, Pattern, PatternError,
};
pub use solver::{
    canonical_key, probe_open, solve, solve_with, verify_builder, verify_builder_with_objective,
    verify_painter, verify_painter_with_invariant, BuilderVerdict, CanonicalKey, PainterVerdict,
    SearchStats, SolveOptions, SolveResult, SolverError, StrategyTree, TranspositionTable,
    Verdict, BUILDER_EDGE_CAP, MAX_SOLVE_EDGES, MAX_SOLVE_VERTICES,
};
