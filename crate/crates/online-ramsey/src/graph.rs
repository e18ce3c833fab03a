//! The evolving game board: a simple graph whose edges each carry one of two
//! colors, plus the incremental queries the strategies need (components,
//! cycles through an edge, color-restricted neighborhoods, `f`-values).
//!
//! Vertices are nonnegative integer ids. The game is defined over an
//! unbounded supply of isolated vertices, so any id that no edge touches is
//! implicitly available; [`ColoredGraph::fresh_vertex`] hands out the
//! smallest unused id, which keeps traces deterministic and replayable.
//!
//! The edge set only grows during a game and colors are immutable once
//! assigned: there is deliberately no `remove_edge` or `recolor` API.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

/// Vertex identifier. Ids are dense in practice (strategies allocate the
/// smallest unused id) but nothing requires it.
pub type Vertex = u32;

/// Default ceiling for [`ColoredGraph::cycles_through`]. Series-parallel
/// hosts can hold exponentially many cycles, but desk-scale games stay far
/// below this.
pub const DEFAULT_CYCLE_CAP: usize = 1_000_000;

// ===========================================================================
// Color
// ===========================================================================

/// One of the two edge colors. Color-swap ([`Color::flipped`]) is an
/// involution; several strategies use it to implement "without loss of
/// generality" arguments as a role swap instead of duplicated code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    /// The other color.
    #[inline]
    pub fn flipped(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }

    /// Lowercase name, matching the trace serialization.
    pub fn name(self) -> &'static str {
        match self {
            Color::Red => "red",
            Color::Blue => "blue",
        }
    }

    /// Both colors, in the fixed deterministic order used by searches.
    pub const BOTH: [Color; 2] = [Color::Red, Color::Blue];
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

// ===========================================================================
// Errors
// ===========================================================================

/// Errors from board operations. Each failure mode is distinct so callers
/// (and tests) can tell a rule violation from a resource bound.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    /// Attempted to add a loop `v -- v`.
    #[error("loop edges are not allowed (vertex {0})")]
    LoopEdge(Vertex),
    /// Attempted to add an edge that is already present.
    #[error("edge {{{0}, {1}}} is already present")]
    DuplicateEdge(Vertex, Vertex),
    /// An edge-subset query mentioned an edge the graph does not have.
    #[error("edge {{{0}, {1}}} is not in the graph")]
    UnknownEdge(Vertex, Vertex),
    /// Cycle enumeration found more cycles than the caller's cap. This
    /// signals that the desk-scale bound was hit, not a wrong answer.
    #[error("more than {0} cycles through the edge; cap exceeded")]
    CycleCapExceeded(usize),
    /// A vertex sequence did not describe a cycle of this graph.
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
}

// ===========================================================================
// ColoredGraph
// ===========================================================================

/// A growing simple graph whose edges each carry a [`Color`].
///
/// Equality compares the labeled edge sets (insertion order is irrelevant),
/// which is what trace replay needs to assert "identical final graph".
#[derive(Debug, Clone, Default)]
pub struct ColoredGraph {
    /// Adjacency lists indexed by vertex id; an empty slot is an unused id.
    adj: Vec<Vec<(Vertex, Color)>>,
    /// Edges in insertion (draw) order, endpoints normalized `u < v`.
    edges: Vec<(Vertex, Vertex, Color)>,
}

impl PartialEq for ColoredGraph {
    fn eq(&self, other: &Self) -> bool {
        self.edge_set() == other.edge_set()
    }
}
impl Eq for ColoredGraph {}

impl ColoredGraph {
    /// The empty board.
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from `(u, v, color)` triples. Convenience for tests
    /// and pattern instantiation; fails on loops and duplicates.
    pub fn from_edges<I>(edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex, Color)>,
    {
        let mut g = Self::new();
        for (u, v, c) in edges {
            g.add_edge(u, v, c)?;
        }
        Ok(g)
    }

    /// Adds the edge `{u, v}` with color `c`. Exactly one game turn.
    ///
    /// Rejects loops and parallel edges with distinct errors; on error the
    /// graph is unchanged. Colors are immutable afterwards — the game never
    /// recolors, so no API exists to do it.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex, c: Color) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::LoopEdge(u));
        }
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        if self.has_edge(a, b) {
            return Err(GraphError::DuplicateEdge(a, b));
        }
        let need = b as usize + 1;
        if self.adj.len() < need {
            self.adj.resize(need, Vec::new());
        }
        self.adj[a as usize].push((b, c));
        self.adj[b as usize].push((a, c));
        self.edges.push((a, b, c));
        Ok(())
    }

    /// Clone-and-add, for hypothetical "what if this edge were drawn red?"
    /// queries. The original board is untouched.
    pub fn with_edge(&self, u: Vertex, v: Vertex, c: Color) -> Result<Self, GraphError> {
        let mut g = self.clone();
        g.add_edge(u, v, c)?;
        Ok(g)
    }

    /// Is `{u, v}` an edge (of either color)?
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj
            .get(u as usize)
            .is_some_and(|l| l.iter().any(|&(w, _)| w == v))
    }

    /// The color of edge `{u, v}`, if present.
    pub fn color_of(&self, u: Vertex, v: Vertex) -> Option<Color> {
        self.adj
            .get(u as usize)?
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, c)| c)
    }

    /// Edges in draw order, endpoints normalized `u < v`.
    pub fn edges(&self) -> &[(Vertex, Vertex, Color)] {
        &self.edges
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// The labeled edge set (order-free view), used for equality and tests.
    pub fn edge_set(&self) -> BTreeSet<(Vertex, Vertex, Color)> {
        self.edges.iter().copied().collect()
    }

    /// Degree of `v` (0 for unused ids).
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj.get(v as usize).map_or(0, Vec::len)
    }

    /// Number of incident edges of color `c`.
    pub fn color_degree(&self, v: Vertex, c: Color) -> usize {
        self.adj
            .get(v as usize)
            .map_or(0, |l| l.iter().filter(|&&(_, k)| k == c).count())
    }

    /// Neighbors of `v` with the connecting edge's color, in insertion order.
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = (Vertex, Color)> + '_ {
        self.adj
            .get(v as usize)
            .map(Vec::as_slice)
            .unwrap_or(&[])
            .iter()
            .copied()
    }

    /// Neighbors of `v` reached by an edge of color `c`.
    pub fn neighbors_colored(&self, v: Vertex, c: Color) -> impl Iterator<Item = Vertex> + '_ {
        self.neighbors(v)
            .filter(move |&(_, k)| k == c)
            .map(|(w, _)| w)
    }

    /// All non-isolated vertices, ascending. Unused ids never appear: the
    /// board conceptually owns infinitely many isolated vertices and tracks
    /// none of them.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj
            .iter()
            .enumerate()
            .filter(|(_, l)| !l.is_empty())
            .map(|(v, _)| v as Vertex)
    }

    /// Number of non-isolated vertices.
    pub fn vertex_count(&self) -> usize {
        self.adj.iter().filter(|l| !l.is_empty()).count()
    }

    /// The smallest id no edge touches — the deterministic "fresh vertex"
    /// every strategy uses when it needs new territory.
    pub fn fresh_vertex(&self) -> Vertex {
        self.adj
            .iter()
            .position(Vec::is_empty)
            .unwrap_or(self.adj.len()) as Vertex
    }

    /// The `k` smallest unused ids (the board is not modified; drawing an
    /// edge on the first of them does not invalidate the rest of the list
    /// unless it touches them).
    pub fn fresh_vertices(&self, k: usize) -> Vec<Vertex> {
        let mut out = Vec::with_capacity(k);
        let mut v = 0u32;
        while out.len() < k {
            if self.degree(v) == 0 {
                out.push(v);
            }
            v += 1;
        }
        out
    }

    // -----------------------------------------------------------------------
    // f-values
    // -----------------------------------------------------------------------

    /// The `f`-value of an edge subset: (#red − #blue) mod 3, as a residue in
    /// {0, 1, 2}. Residues 0/1/2 are called zero/positive/negative.
    ///
    /// Errors if the subset mentions an edge the graph does not have.
    pub fn f_value<I>(&self, edge_subset: I) -> Result<u8, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut acc: i64 = 0;
        for (u, v) in edge_subset {
            match self.color_of(u, v) {
                Some(Color::Red) => acc += 1,
                Some(Color::Blue) => acc -= 1,
                None => return Err(GraphError::UnknownEdge(u, v)),
            }
        }
        Ok(acc.rem_euclid(3) as u8)
    }

    // -----------------------------------------------------------------------
    // Components
    // -----------------------------------------------------------------------

    /// Connected components of the non-isolated vertices, ignoring colors.
    /// Each component is ascending; components are ordered by smallest
    /// member. Isolated ids appear in no component.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.adj.len()];
        let mut out = Vec::new();
        for v in 0..self.adj.len() {
            if self.adj[v].is_empty() || seen[v] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![v as Vertex];
            seen[v] = true;
            while let Some(x) = stack.pop() {
                comp.push(x);
                for (w, _) in self.neighbors(x) {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The vertices of `v`'s component, ascending; empty if `v` is isolated.
    pub fn component_of(&self, v: Vertex) -> Vec<Vertex> {
        if self.degree(v) == 0 {
            return Vec::new();
        }
        let mut seen = BTreeSet::new();
        let mut stack = vec![v];
        seen.insert(v);
        while let Some(x) = stack.pop() {
            for (w, _) in self.neighbors(x) {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Size of `v`'s component; 0 for an isolated id (which by convention
    /// belongs to no component).
    pub fn component_size(&self, v: Vertex) -> usize {
        self.component_of(v).len()
    }

    /// Are `u` and `v` connected? (False if either is isolated, unless they
    /// are equal and non-isolated.)
    pub fn same_component(&self, u: Vertex, v: Vertex) -> bool {
        if self.degree(u) == 0 || self.degree(v) == 0 {
            return false;
        }
        self.component_of(u).binary_search(&v).is_ok()
    }

    // -----------------------------------------------------------------------
    // Cycle enumeration
    // -----------------------------------------------------------------------

    /// All simple cycles containing the edge `{u, v}`, each reported once.
    ///
    /// Found by depth-first enumeration of the simple `u,v`-paths of length
    /// ≥ 2 in `g − uv`; each path plus the closing edge is one cycle.
    /// Errors with [`GraphError::CycleCapExceeded`] if more than `cap`
    /// cycles exist (the bound signals scale, not wrongness), and with
    /// [`GraphError::UnknownEdge`] if `{u, v}` is not an edge.
    pub fn cycles_through(
        &self,
        u: Vertex,
        v: Vertex,
        cap: usize,
    ) -> Result<Vec<CycleView>, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::UnknownEdge(u, v));
        }
        let mut out = Vec::new();
        let mut path = vec![u];
        let mut on_path = BTreeSet::from([u]);
        self.cycle_dfs(v, u, &mut path, &mut on_path, cap, &mut out)?;
        Ok(out)
    }

    fn cycle_dfs(
        &self,
        target: Vertex,
        at: Vertex,
        path: &mut Vec<Vertex>,
        on_path: &mut BTreeSet<Vertex>,
        cap: usize,
        out: &mut Vec<CycleView>,
    ) -> Result<(), GraphError> {
        for (w, _) in self.neighbors(at) {
            // Skip the anchor edge itself; a cycle must return via a detour.
            // `path[0]` is the anchor endpoint the walk started from.
            if at == path[0] && w == target {
                continue;
            }
            if w == target {
                if path.len() >= 2 {
                    if out.len() == cap {
                        return Err(GraphError::CycleCapExceeded(cap));
                    }
                    let mut cycle = path.clone();
                    cycle.push(target);
                    out.push(CycleView::new(self, cycle).expect("enumerated cycle is valid"));
                }
                continue;
            }
            if on_path.contains(&w) {
                continue;
            }
            path.push(w);
            on_path.insert(w);
            self.cycle_dfs(target, w, path, on_path, cap, out)?;
            path.pop();
            on_path.remove(&w);
        }
        Ok(())
    }
}

// ===========================================================================
// CycleView
// ===========================================================================

/// A simple cycle of a host graph, stored as its cyclic vertex sequence.
/// Consecutive vertices (and last→first) are edges of the host; no vertex
/// repeats; length ≥ 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleView {
    vertices: Vec<Vertex>,
}

impl CycleView {
    /// Validates `vertices` as a simple cycle of `g` and wraps it.
    pub fn new(g: &ColoredGraph, vertices: Vec<Vertex>) -> Result<Self, GraphError> {
        if vertices.len() < 3 {
            return Err(GraphError::InvalidCycle(format!(
                "length {} < 3",
                vertices.len()
            )));
        }
        let distinct: BTreeSet<_> = vertices.iter().collect();
        if distinct.len() != vertices.len() {
            return Err(GraphError::InvalidCycle("repeated vertex".into()));
        }
        for i in 0..vertices.len() {
            let a = vertices[i];
            let b = vertices[(i + 1) % vertices.len()];
            if !g.has_edge(a, b) {
                return Err(GraphError::InvalidCycle(format!(
                    "missing edge {{{a}, {b}}}"
                )));
            }
        }
        Ok(CycleView { vertices })
    }

    /// The cyclic vertex sequence.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Number of vertices (= number of edges).
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    /// True only for the impossible empty view; present for API hygiene.
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// The cycle's edges in cyclic order (including the closing edge).
    pub fn cycle_edges(&self) -> Vec<(Vertex, Vertex)> {
        (0..self.vertices.len())
            .map(|i| {
                (
                    self.vertices[i],
                    self.vertices[(i + 1) % self.vertices.len()],
                )
            })
            .collect()
    }

    /// Does the cycle pass through vertex `v`?
    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    /// `f`-value of the whole cycle in `g`.
    pub fn f_value(&self, g: &ColoredGraph) -> Result<u8, GraphError> {
        g.f_value(self.cycle_edges())
    }

    /// The two arcs between positions `i` and `j` (`i ≠ j`), each as a vertex
    /// sequence from `vertices[i]` to `vertices[j]` — one walking forward
    /// around the cycle, one backward. Every arc has at least one edge;
    /// together they partition the cycle's edges.
    pub fn arcs(&self, i: usize, j: usize) -> (Vec<Vertex>, Vec<Vertex>) {
        assert!(i != j, "arc endpoints must differ");
        let n = self.vertices.len();
        let walk = |step: usize| {
            let mut arc = Vec::new();
            let mut k = i;
            loop {
                arc.push(self.vertices[k]);
                if k == j {
                    return arc;
                }
                k = (k + step) % n;
            }
        };
        (walk(1), walk(n - 1))
    }
}

/// Edges of a vertex path (consecutive pairs).
pub fn path_edges(path: &[Vertex]) -> Vec<(Vertex, Vertex)> {
    path.windows(2).map(|w| (w[0], w[1])).collect()
}
