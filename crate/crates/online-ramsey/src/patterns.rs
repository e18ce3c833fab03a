//! The fixed pattern catalog (X, X₁–X₅, Y, and the standard small graphs)
//! and subgraph-containment tests, including color-restricted searches for
//! monochromatic targets.
//!
//! Containment is always **subgraph** containment (injective homomorphism),
//! never induced-subgraph containment: a host "contains" a pattern when some
//! injective vertex map sends every pattern edge to a host edge. Hosts are
//! tiny here, so the matcher is a plain backtracking search with degree
//! pruning; it deliberately explores pattern vertices in index order and
//! host candidates in ascending order so the first embedding found is the
//! lexicographically least one — deterministic output for traces and tests.
//!
//! The catalog ships as edge-list data files compiled into the binary; the
//! `RAMSEY_CATALOG_DIR` environment variable substitutes a directory of
//! replacement `.edges` files at runtime (all entries must be present), so a
//! transcription can be audited or swapped without rebuilding.

use crate::graph::{Color, ColoredGraph, Vertex};
use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

/// Environment variable that overrides the built-in catalog data directory.
pub const CATALOG_DIR_ENV: &str = "RAMSEY_CATALOG_DIR";

// ===========================================================================
// Errors
// ===========================================================================

/// Errors from pattern construction and parsing.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PatternError {
    /// A line of an edge-list file could not be parsed.
    #[error("{name}: line {line}: {msg}")]
    Parse {
        name: String,
        line: usize,
        msg: String,
    },
    /// Pattern with no edges.
    #[error("{0}: a pattern must have at least one edge")]
    Empty(String),
    /// Loop edge in a pattern.
    #[error("{0}: loop edge at vertex {1}")]
    LoopEdge(String, Vertex),
    /// Duplicate edge in a pattern.
    #[error("{0}: duplicate edge {{{1}, {2}}}")]
    DuplicateEdge(String, Vertex, Vertex),
    /// The standing assumption: patterns have no isolated vertices. Vertex
    /// ids must therefore be exactly `0..n` with every id used by an edge.
    #[error("{0}: vertex {1} is isolated (patterns must have no isolated vertices)")]
    IsolatedVertex(String, Vertex),
    /// A catalog override directory is missing an entry.
    #[error("catalog override ({0}): missing or unreadable file {1}")]
    MissingCatalogFile(String, String),
}

// ===========================================================================
// Pattern
// ===========================================================================

/// A fixed small uncolored graph given as an edge list over `{0..n−1}`,
/// with no isolated vertices (every id below `n` has degree ≥ 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    name: String,
    n: u32,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
}

impl Pattern {
    /// Builds a pattern from unordered pairs, validating simplicity and the
    /// no-isolated-vertices assumption.
    pub fn new<I>(name: &str, edges: I) -> Result<Self, PatternError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut norm: Vec<(Vertex, Vertex)> = Vec::new();
        let mut n: u32 = 0;
        for (u, v) in edges {
            if u == v {
                return Err(PatternError::LoopEdge(name.into(), u));
            }
            let e = (u.min(v), u.max(v));
            if norm.contains(&e) {
                return Err(PatternError::DuplicateEdge(name.into(), e.0, e.1));
            }
            n = n.max(e.1 + 1);
            norm.push(e);
        }
        if norm.is_empty() {
            return Err(PatternError::Empty(name.into()));
        }
        let mut adj = vec![Vec::new(); n as usize];
        for &(u, v) in &norm {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        if let Some(v) = adj.iter().position(Vec::is_empty) {
            return Err(PatternError::IsolatedVertex(name.into(), v as Vertex));
        }
        Ok(Pattern {
            name: name.into(),
            n,
            edges: norm,
            adj,
        })
    }

    /// Parses the edge-list text format: one `u v` pair per line, whitespace
    /// separated, `#` starts a comment, blank lines ignored.
    pub fn parse(name: &str, text: &str) -> Result<Self, PatternError> {
        let mut edges = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut it = line.split_whitespace();
            let parse_one = |tok: Option<&str>| -> Result<Vertex, PatternError> {
                tok.ok_or(())
                    .and_then(|t| t.parse::<Vertex>().map_err(|_| ()))
                    .map_err(|_| PatternError::Parse {
                        name: name.into(),
                        line: i + 1,
                        msg: format!("expected two nonnegative integers, got {raw:?}"),
                    })
            };
            let u = parse_one(it.next())?;
            let v = parse_one(it.next())?;
            if it.next().is_some() {
                return Err(PatternError::Parse {
                    name: name.into(),
                    line: i + 1,
                    msg: format!("trailing tokens in {raw:?}"),
                });
            }
            edges.push((u, v));
        }
        Pattern::new(name, edges)
    }

    /// The pattern's stable identifier (also its CLI name).
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Number of vertices (ids are exactly `0..n`).
    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// The normalized edge list (`u < v`, input order).
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Degree of a pattern vertex.
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v as usize].len()
    }

    /// Neighbors of a pattern vertex.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v as usize]
    }

    /// Is `{u, v}` a pattern edge?
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        let e = (u.min(v), u.max(v));
        self.edges.contains(&e)
    }

    /// The pattern realized as a board with every edge colored `c` (used to
    /// run the matcher pattern-on-pattern).
    pub fn to_graph(&self, c: Color) -> ColoredGraph {
        ColoredGraph::from_edges(self.edges.iter().map(|&(u, v)| (u, v, c)))
            .expect("patterns are simple by construction")
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({} vertices", self.name, self.n)?;
        write!(f, ", {} edges)", self.edges.len())
    }
}

// ===========================================================================
// Embedding
// ===========================================================================

/// An injective map from pattern vertices to host vertices under which every
/// pattern edge lands on a host edge (of the required color, if a color
/// filter was supplied).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    map: Vec<Vertex>,
}

impl Embedding {
    /// Image of pattern vertex `pv`.
    pub fn image(&self, pv: Vertex) -> Vertex {
        self.map[pv as usize]
    }

    /// The full image tuple, indexed by pattern vertex.
    pub fn as_slice(&self) -> &[Vertex] {
        &self.map
    }

    /// The set of host vertices used.
    pub fn image_set(&self) -> BTreeSet<Vertex> {
        self.map.iter().copied().collect()
    }
}

impl fmt::Display for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.map.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}→{v}")?;
        }
        write!(f, "]")
    }
}

// ===========================================================================
// Subgraph matcher
// ===========================================================================

/// Searches for `p` as a subgraph of `g`; with `color` set, only host edges
/// of that color may carry pattern edges.
///
/// Returns the lexicographically least embedding (as the image tuple
/// `(image(0), image(1), …)`), or `None`.
pub fn contains_subgraph(g: &ColoredGraph, p: &Pattern, color: Option<Color>) -> Option<Embedding> {
    let hosts = host_candidates(g, color);
    let mut map: Vec<Option<Vertex>> = vec![None; p.vertex_count() as usize];
    if match_from(g, p, color, &hosts, &mut map, 0) {
        Some(Embedding {
            map: map.into_iter().map(Option::unwrap).collect(),
        })
    } else {
        None
    }
}

/// Like [`contains_subgraph`], but only embeddings that use the host edge
/// `{eu, ev}` for some pattern edge are considered. On a host that was free
/// of `p` before `{eu, ev}` was added, this decides whether adding it
/// created a copy of `p` — the engine's incremental class check.
///
/// The returned embedding is deterministic but not necessarily the global
/// lexicographic minimum (the anchor is placed first).
pub fn contains_subgraph_anchored(
    g: &ColoredGraph,
    p: &Pattern,
    (eu, ev): (Vertex, Vertex),
    color: Option<Color>,
) -> Option<Embedding> {
    if let Some(c) = color {
        if g.color_of(eu, ev) != Some(c) {
            return None;
        }
    } else if !g.has_edge(eu, ev) {
        return None;
    }
    let hosts = host_candidates(g, color);
    for &(pa, pb) in p.edges() {
        for (iu, iv) in [(eu, ev), (ev, eu)] {
            let mut map: Vec<Option<Vertex>> = vec![None; p.vertex_count() as usize];
            map[pa as usize] = Some(iu);
            map[pb as usize] = Some(iv);
            if !degree_feasible(g, p, color, pa, iu) || !degree_feasible(g, p, color, pb, iv) {
                continue;
            }
            if match_from(g, p, color, &hosts, &mut map, 0) {
                return Some(Embedding {
                    map: map.into_iter().map(Option::unwrap).collect(),
                });
            }
        }
    }
    None
}

/// Completes a partial embedding: `pins` fixes images for some pattern
/// vertices (distinct host vertices), and the remaining pattern vertices are
/// matched into `g` by the usual backtracking. Pattern edges between pinned
/// vertices are verified against the host (with the color filter) up front.
pub(crate) fn complete_embedding(
    g: &ColoredGraph,
    p: &Pattern,
    pins: &[(Vertex, Vertex)],
    color: Option<Color>,
) -> Option<Embedding> {
    let mut map: Vec<Option<Vertex>> = vec![None; p.vertex_count() as usize];
    let mut used = BTreeSet::new();
    for &(pv, hv) in pins {
        if !used.insert(hv) || map[pv as usize].is_some() {
            return None;
        }
        map[pv as usize] = Some(hv);
    }
    for &(a, b) in p.edges() {
        if let (Some(ha), Some(hb)) = (map[a as usize], map[b as usize]) {
            match (color, g.color_of(ha, hb)) {
                (None, Some(_)) => {}
                (Some(c), Some(k)) if k == c => {}
                _ => return None,
            }
        }
    }
    let hosts = host_candidates(g, color);
    if match_from(g, p, color, &hosts, &mut map, 0) {
        Some(Embedding {
            map: map.into_iter().map(Option::unwrap).collect(),
        })
    } else {
        None
    }
}

/// Does `host` (a pattern) contain `p` as a subgraph?
pub fn pattern_contains(host: &Pattern, p: &Pattern) -> Option<Embedding> {
    contains_subgraph(&host.to_graph(Color::Red), p, None)
}

/// Are two patterns isomorphic? (Equal vertex and edge counts plus mutual
/// containment of one direction suffice: an injective edge-preserving map
/// between equal-sized simple graphs with equal edge counts is an
/// isomorphism.)
pub fn pattern_isomorphic(a: &Pattern, b: &Pattern) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && pattern_contains(a, b).is_some()
}

/// Host vertices eligible under the color filter, ascending.
fn host_candidates(g: &ColoredGraph, color: Option<Color>) -> Vec<Vertex> {
    match color {
        None => g.vertices().collect(),
        Some(c) => g.vertices().filter(|&v| g.color_degree(v, c) > 0).collect(),
    }
}

/// Degree prune for a proposed image vertex.
fn degree_feasible(
    g: &ColoredGraph,
    p: &Pattern,
    color: Option<Color>,
    pv: Vertex,
    hv: Vertex,
) -> bool {
    let have = match color {
        None => g.degree(hv),
        Some(c) => g.color_degree(hv, c),
    };
    have >= p.degree(pv)
}

/// Core backtracking step: place pattern vertex `next` (skipping any already
/// pinned by an anchor), trying host candidates in ascending order.
fn match_from(
    g: &ColoredGraph,
    p: &Pattern,
    color: Option<Color>,
    hosts: &[Vertex],
    map: &mut [Option<Vertex>],
    next: usize,
) -> bool {
    // Find the next unplaced pattern vertex.
    let mut pv = next;
    while pv < map.len() && map[pv].is_some() {
        pv += 1;
    }
    if pv == map.len() {
        return true;
    }
    'cand: for &hv in hosts {
        if map.contains(&Some(hv)) {
            continue;
        }
        if !degree_feasible(g, p, color, pv as Vertex, hv) {
            continue;
        }
        // Every pattern edge to an already-placed vertex must be realized.
        for &q in p.neighbors(pv as Vertex) {
            if let Some(hq) = map[q as usize] {
                match (color, g.color_of(hv, hq)) {
                    (None, Some(_)) => {}
                    (Some(c), Some(k)) if k == c => {}
                    _ => continue 'cand,
                }
            }
        }
        map[pv] = Some(hv);
        if match_from(g, p, color, hosts, map, pv + 1) {
            return true;
        }
        map[pv] = None;
    }
    false
}

// ===========================================================================
// Monochromatic triangle
// ===========================================================================

/// Finds a single-colored triangle if one exists (red checked first, then
/// blue; within a color, the lexicographically least triangle). This is the
/// game's win condition.
pub fn mono_c3(g: &ColoredGraph) -> Option<(Color, Embedding)> {
    let c3 = &catalog().get("C3").expect("C3 is in the catalog");
    Color::BOTH
        .iter()
        .find_map(|&c| contains_subgraph(g, c3, Some(c)).map(|e| (c, e)))
}

/// Like [`mono_c3`], but only triangles through the edge `{u, v}` — the
/// incremental form used after each move (a new monochromatic triangle must
/// use the newest edge).
pub fn mono_c3_through(g: &ColoredGraph, u: Vertex, v: Vertex) -> Option<(Color, Embedding)> {
    let c3 = &catalog().get("C3").expect("C3 is in the catalog");
    Color::BOTH
        .iter()
        .find_map(|&c| contains_subgraph_anchored(g, c3, (u, v), Some(c)).map(|e| (c, e)))
}

// ===========================================================================
// Catalog
// ===========================================================================

/// Built-in catalog entries: `(name, file name, embedded contents)`.
const CATALOG_DATA: [(&str, &str, &str); 19] = [
    ("X", "x.edges", include_str!("../data/x.edges")),
    ("X1", "x1.edges", include_str!("../data/x1.edges")),
    ("X2", "x2.edges", include_str!("../data/x2.edges")),
    ("X3", "x3.edges", include_str!("../data/x3.edges")),
    ("X4", "x4.edges", include_str!("../data/x4.edges")),
    ("X5", "x5.edges", include_str!("../data/x5.edges")),
    ("Y", "y.edges", include_str!("../data/y.edges")),
    ("K4", "k4.edges", include_str!("../data/k4.edges")),
    ("K13", "k13.edges", include_str!("../data/k13.edges")),
    ("K15", "k15.edges", include_str!("../data/k15.edges")),
    ("K23", "k23.edges", include_str!("../data/k23.edges")),
    ("C3", "c3.edges", include_str!("../data/c3.edges")),
    ("C4", "c4.edges", include_str!("../data/c4.edges")),
    ("P2", "p2.edges", include_str!("../data/p2.edges")),
    ("P3", "p3.edges", include_str!("../data/p3.edges")),
    ("P4", "p4.edges", include_str!("../data/p4.edges")),
    ("P5", "p5.edges", include_str!("../data/p5.edges")),
    ("P6", "p6.edges", include_str!("../data/p6.edges")),
    ("P7", "p7.edges", include_str!("../data/p7.edges")),
];

/// The named set of fixed patterns. Names are stable CLI identifiers.
pub struct Catalog {
    patterns: Vec<Pattern>,
}

impl Catalog {
    /// Looks a pattern up by name (ASCII case-insensitive).
    pub fn get(&self, name: &str) -> Option<&Pattern> {
        self.patterns
            .iter()
            .find(|p| p.name().eq_ignore_ascii_case(name))
    }

    /// All catalog names, in fixed order.
    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.patterns.iter().map(Pattern::name)
    }

    /// All catalog patterns, in fixed order.
    pub fn patterns(&self) -> &[Pattern] {
        &self.patterns
    }

    /// The four painter-side boundary patterns X₁..X₄ (in order).
    pub fn painter_boundary(&self) -> [&Pattern; 4] {
        ["X1", "X2", "X3", "X4"].map(|n| self.get(n).expect("catalog is complete"))
    }
}

/// The catalog, loading the override directory if [`CATALOG_DIR_ENV`] is
/// set (every entry must then be present there), else the embedded data.
/// The result is computed once per process.
pub fn try_catalog() -> Result<&'static Catalog, PatternError> {
    static CATALOG: OnceLock<Result<Catalog, PatternError>> = OnceLock::new();
    CATALOG
        .get_or_init(|| {
            let dir = std::env::var(CATALOG_DIR_ENV).ok();
            let mut patterns = Vec::new();
            for (name, file, embedded) in CATALOG_DATA {
                let text = match &dir {
                    Some(d) => {
                        let path = std::path::Path::new(d).join(file);
                        std::fs::read_to_string(&path).map_err(|_| {
                            PatternError::MissingCatalogFile(
                                d.clone(),
                                path.display().to_string(),
                            )
                        })?
                    }
                    None => embedded.to_string(),
                };
                patterns.push(Pattern::parse(name, &text)?);
            }
            Ok(Catalog { patterns })
        })
        .as_ref()
        .map_err(|e| e.clone())
}

/// Infallible catalog access for contexts where the embedded data is known
/// to be in use (or the override has already been validated via
/// [`try_catalog`], which the CLI does at startup).
pub fn catalog() -> &'static Catalog {
    try_catalog().expect("pattern catalog failed to load")
}

// ===========================================================================
// Classification of forbidden graphs
// ===========================================================================

/// The winner of the game on F-free host graphs, as far as it is known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    /// Painter wins: `F` embeds into the boundary pattern `X<index>`
    /// (1-based, in {1..4}); `embedding` is the witnessing map.
    Painter { index: u8, embedding: Embedding },
    /// Builder wins: `F` embeds into none of X₁..X₄ and is not X₅.
    Builder,
    /// The one open case: `F` is isomorphic to X₅.
    Open,
}

impl Classification {
    /// The verdict keyword, as printed by the CLI.
    pub fn verdict(&self) -> &'static str {
        match self {
            Classification::Painter { .. } => "PAINTER",
            Classification::Builder => "BUILDER",
            Classification::Open => "OPEN",
        }
    }
}

/// Classifies a forbidden graph `F` (no isolated vertices, which the
/// [`Pattern`] type already guarantees):
///
/// - `OPEN` iff `F` is isomorphic to X₅;
/// - `PAINTER` iff `F` is isomorphic to a subgraph of some Xᵢ, i ∈ {1..4}
///   (the least such `i` is reported);
/// - `BUILDER` otherwise — including every `F` that is not a subgraph of X.
pub fn classify_forbidden_graph(f: &Pattern) -> Classification {
    let cat = catalog();
    let x5 = cat.get("X5").expect("catalog is complete");
    if pattern_isomorphic(x5, f) {
        return Classification::Open;
    }
    for (i, xi) in cat.painter_boundary().into_iter().enumerate() {
        if let Some(embedding) = pattern_contains(xi, f) {
            return Classification::Painter {
                index: (i + 1) as u8,
                embedding,
            };
        }
    }
    Classification::Builder
}
