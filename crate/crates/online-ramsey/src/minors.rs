//! Minor containment tests for the host-class checks, plus the
//! common-order property of paths in K₄-minor-free graphs.
//!
//! Three testers with different scaling contracts:
//!
//! - [`has_k4_minor`] handles hosts of any size via the classic degree-≤2
//!   reduction (delete degree-≤1 vertices, suppress degree-2 vertices): the
//!   graph reduces to nothing iff it has no K₄ minor, and a reduced graph
//!   with minimum degree ≥ 3 always contains a K₄ subdivision.
//! - [`has_k23_minor`] also handles hosts of any size. K₂,₃ has maximum
//!   degree 3, so minor containment coincides with topological-minor
//!   containment, which in turn is the existence of two vertices joined by
//!   three internally vertex-disjoint paths of length ≥ 2 — a unit-capacity
//!   flow question answered per vertex pair.
//! - [`find_minor_model`] / [`has_minor`] take an arbitrary pattern but cap
//!   the host at [`MINOR_HOST_CAP`] non-isolated vertices; they run a direct
//!   branch-set search and return a self-checked [`MinorModel`]. The two
//!   specialized testers are validated against this one in the test suite.

use crate::graph::{ColoredGraph, Vertex};
use crate::patterns::Pattern;
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// Upper bound on non-isolated host vertices for the generic minor search.
pub const MINOR_HOST_CAP: usize = 12;

/// Errors from the generic minor search.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MinorError {
    /// The host exceeds [`MINOR_HOST_CAP`] non-isolated vertices. The
    /// specialized testers ([`has_k4_minor`], [`has_k23_minor`]) have no
    /// such limit.
    #[error(
        "host has {vertices} non-isolated vertices; the generic minor search handles at most {cap}"
    )]
    HostTooLarge { vertices: usize, cap: usize },
}

// ===========================================================================
// K4 minors (any host size)
// ===========================================================================

/// Does the graph contain a K₄ minor?
///
/// Works by exhaustive reduction: vertices of degree ≤ 1 are deleted and
/// vertices of degree 2 are suppressed (their two neighbors joined). Both
/// operations preserve the presence of a K₄ minor in each direction, so the
/// graph has one iff the reduction gets stuck on a nonempty remainder — and
/// a stuck remainder has minimum degree ≥ 3, which forces a K₄ subdivision.
pub fn has_k4_minor(g: &ColoredGraph) -> bool {
    let mut adj: BTreeMap<Vertex, BTreeSet<Vertex>> = BTreeMap::new();
    for &(u, v, _) in g.edges() {
        adj.entry(u).or_default().insert(v);
        adj.entry(v).or_default().insert(u);
    }
    loop {
        let Some((&v, _)) = adj.iter().find(|(_, ns)| ns.len() <= 2) else {
            return !adj.is_empty();
        };
        let ns: Vec<Vertex> = adj[&v].iter().copied().collect();
        adj.remove(&v);
        for n in &ns {
            adj.get_mut(n).expect("adjacency is symmetric").remove(&v);
        }
        if let [a, b] = ns[..] {
            adj.get_mut(&a).expect("still present").insert(b);
            adj.get_mut(&b).expect("still present").insert(a);
        }
    }
}

// ===========================================================================
// K2,3 minors (any host size)
// ===========================================================================

/// Does the graph contain a K₂,₃ minor?
///
/// Since K₂,₃ has maximum degree 3, it is a minor exactly when it is a
/// topological minor: two vertices `u`, `v` joined by three internally
/// vertex-disjoint paths, each of length ≥ 2. Dropping a direct `u`–`v`
/// edge first makes every remaining path have length ≥ 2, so the test is a
/// vertex-capacity max-flow of value 3 between `u` and `v` in `g − uv`,
/// tried over all pairs.
pub fn has_k23_minor(g: &ColoredGraph) -> bool {
    // K2,3 needs five branch sets and six cross edges.
    if g.edge_count() < 6 {
        return false;
    }
    let verts: Vec<Vertex> = g.vertices().collect();
    if verts.len() < 5 {
        return false;
    }
    for (i, &u) in verts.iter().enumerate() {
        for &v in &verts[i + 1..] {
            let direct = usize::from(g.has_edge(u, v));
            if g.degree(u) - direct < 3 || g.degree(v) - direct < 3 {
                continue;
            }
            if internally_disjoint_paths(g, u, v) >= 3 {
                return true;
            }
        }
    }
    false
}

/// Number of internally vertex-disjoint `u`,`v`-paths in `g − uv`, capped
/// at 3 (all that the K₂,₃ test needs). Unit-capacity max flow on the
/// vertex-split network, source `u`ᵒᵘᵗ, sink `v`ⁱⁿ.
fn internally_disjoint_paths(g: &ColoredGraph, u: Vertex, v: Vertex) -> u32 {
    let verts: Vec<Vertex> = g.vertices().collect();
    let index: BTreeMap<Vertex, usize> = verts.iter().enumerate().map(|(i, &w)| (w, i)).collect();
    let n = verts.len();
    // Node 2i is wᵢⁱⁿ, node 2i+1 is wᵢᵒᵘᵗ.
    let node_in = |i: usize| 2 * i;
    let node_out = |i: usize| 2 * i + 1;
    let mut cap = vec![vec![0i8; 2 * n]; 2 * n];
    for (i, &w) in verts.iter().enumerate() {
        cap[node_in(i)][node_out(i)] = if w == u || w == v { 3 } else { 1 };
    }
    for &(a, b, _) in g.edges() {
        if (a.min(b), a.max(b)) == (u.min(v), u.max(v)) {
            continue; // drop the direct edge: paths must have length ≥ 2
        }
        let (ia, ib) = (index[&a], index[&b]);
        cap[node_out(ia)][node_in(ib)] = 1;
        cap[node_out(ib)][node_in(ia)] = 1;
    }
    let (source, sink) = (node_out(index[&u]), node_in(index[&v]));
    let mut flow = 0;
    while flow < 3 {
        // BFS for an augmenting path in the residual network.
        let mut prev = vec![usize::MAX; 2 * n];
        prev[source] = source;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            for y in 0..2 * n {
                if prev[y] == usize::MAX && cap[x][y] > 0 {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if prev[sink] == usize::MAX {
            break;
        }
        let mut y = sink;
        while y != source {
            let x = prev[y];
            cap[x][y] -= 1;
            cap[y][x] += 1;
            y = x;
        }
        flow += 1;
    }
    flow
}

// ===========================================================================
// Generic minor search (host capped at MINOR_HOST_CAP vertices)
// ===========================================================================

/// A witness that a pattern is a minor of a host: one branch set per
/// pattern vertex. Branch sets are disjoint, nonempty, and connected in the
/// host, and every pattern edge has a host edge between the corresponding
/// branch sets; [`find_minor_model`] re-checks all of that before returning.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorModel {
    branch_sets: Vec<Vec<Vertex>>,
}

impl MinorModel {
    /// The branch set standing in for pattern vertex `pv`.
    pub fn branch_set(&self, pv: Vertex) -> &[Vertex] {
        &self.branch_sets[pv as usize]
    }

    /// All branch sets, indexed by pattern vertex.
    pub fn branch_sets(&self) -> &[Vec<Vertex>] {
        &self.branch_sets
    }

    /// Structural validity of this model against a host and pattern.
    fn is_valid(&self, g: &ColoredGraph, p: &Pattern) -> bool {
        if self.branch_sets.len() != p.vertex_count() as usize {
            return false;
        }
        let mut seen = BTreeSet::new();
        for set in &self.branch_sets {
            if set.is_empty() || !set.iter().all(|&v| seen.insert(v)) {
                return false;
            }
            // Connectivity of the branch set inside the host.
            let mut reach = BTreeSet::from([set[0]]);
            let mut queue = VecDeque::from([set[0]]);
            while let Some(x) = queue.pop_front() {
                for (y, _) in g.neighbors(x) {
                    if set.contains(&y) && reach.insert(y) {
                        queue.push_back(y);
                    }
                }
            }
            if reach.len() != set.len() {
                return false;
            }
        }
        p.edges().iter().all(|&(a, b)| {
            self.branch_sets[a as usize]
                .iter()
                .any(|&x| self.branch_sets[b as usize].iter().any(|&y| g.has_edge(x, y)))
        })
    }
}

/// Searches for `p` as a minor of `g` and returns a witnessing model.
///
/// The host may have at most [`MINOR_HOST_CAP`] non-isolated vertices; this
/// is an exact reference search, not a scalable one. Pattern vertices are
/// placed in descending-degree order and branch sets are enumerated as
/// connected subsets of the unused host vertices, with cross-edge checks
/// against the already-placed neighbors pruning the search.
pub fn find_minor_model(g: &ColoredGraph, p: &Pattern) -> Result<Option<MinorModel>, MinorError> {
    let verts: Vec<Vertex> = g.vertices().collect();
    if verts.len() > MINOR_HOST_CAP {
        return Err(MinorError::HostTooLarge {
            vertices: verts.len(),
            cap: MINOR_HOST_CAP,
        });
    }
    let m = verts.len();
    let k = p.vertex_count() as usize;
    if k > m {
        return Ok(None);
    }
    // Host adjacency as bitmasks over vertex indices.
    let mut adj = vec![0u16; m];
    for i in 0..m {
        for j in i + 1..m {
            if g.has_edge(verts[i], verts[j]) {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(p.degree(v as Vertex)));
    let full: u16 = if m == 16 { u16::MAX } else { (1 << m) - 1 };
    let mut sets = vec![0u16; k];
    if !place(p, &adj, &order, &mut sets, 0, full) {
        return Ok(None);
    }
    let branch_sets = sets
        .iter()
        .map(|&mask| {
            (0..m)
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| verts[i])
                .collect()
        })
        .collect();
    let model = MinorModel { branch_sets };
    assert!(
        model.is_valid(g, p),
        "internal error: minor search produced an invalid model"
    );
    Ok(Some(model))
}

/// Is `p` a minor of `g`? See [`find_minor_model`] for the host-size cap.
pub fn has_minor(g: &ColoredGraph, p: &Pattern) -> Result<bool, MinorError> {
    find_minor_model(g, p).map(|m| m.is_some())
}

/// Recursive branch-set placement for [`find_minor_model`].
fn place(
    p: &Pattern,
    adj: &[u16],
    order: &[usize],
    sets: &mut [u16],
    level: usize,
    free: u16,
) -> bool {
    let Some(&pv) = order.get(level) else {
        return true;
    };
    let remaining = order.len() - level;
    if (free.count_ones() as usize) < remaining {
        return false;
    }
    // Enumerate nonempty submasks of `free`, keeping connected ones.
    let mut s = free;
    loop {
        if s != 0
            && free.count_ones() - s.count_ones() >= remaining as u32 - 1
            && mask_connected(s, adj)
            && p.neighbors(pv as Vertex).iter().all(|&q| {
                let placed = sets[q as usize];
                placed == 0 || masks_adjacent(s, placed, adj)
            })
        {
            sets[pv] = s;
            if place(p, adj, order, sets, level + 1, free & !s) {
                return true;
            }
            sets[pv] = 0;
        }
        if s == 0 {
            return false;
        }
        s = (s - 1) & free;
    }
}

/// Is the set of vertices in `mask` connected under `adj`?
fn mask_connected(mask: u16, adj: &[u16]) -> bool {
    let start = mask.trailing_zeros() as usize;
    let mut reach: u16 = 1 << start;
    loop {
        let mut grown = reach;
        for (i, &row) in adj.iter().enumerate() {
            if reach & (1 << i) != 0 {
                grown |= row & mask;
            }
        }
        if grown == reach {
            return reach == mask;
        }
        reach = grown;
    }
}

/// Is there a host edge between the two (disjoint) masked sets?
fn masks_adjacent(a: u16, b: u16, adj: &[u16]) -> bool {
    (0..adj.len()).any(|i| a & (1 << i) != 0 && adj[i] & b != 0)
}

// ===========================================================================
// Common order of paths in K4-minor-free graphs
// ===========================================================================

/// Errors from [`check_path_ordering`], one per violated precondition.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OrderingError {
    /// The anchor pair is not an edge of the graph.
    #[error("anchor {{{0}, {1}}} is not an edge of the graph")]
    MissingAnchorEdge(Vertex, Vertex),
    /// One of the two sequences is not an `x`,`y`-path in `g − xy`.
    /// `index` is 1 for the first path, 2 for the second.
    #[error("path {index} is not a valid path between the anchor endpoints: {reason}")]
    InvalidPath { index: u8, reason: String },
    /// The ordering property is only meaningful on K₄-minor-free graphs.
    #[error("the graph has a K4 minor; the common-order property applies to K4-minor-free graphs")]
    HostHasK4Minor,
}

/// Checks the common-order property at an edge `{x, y}` of a K₄-minor-free
/// graph: any two `x`,`y`-paths that avoid the edge itself must visit their
/// shared vertices in the same order.
///
/// `p` and `q` are vertex sequences with endpoints `{x, y}` (either
/// orientation); both are normalized to run from `x` to `y` before
/// comparison. Returns whether the shared vertices appear in the same
/// order — which, on valid inputs, is a theorem, so `Ok(false)` signals a
/// broken precondition checker rather than an interesting graph. Each
/// violated precondition reports its own [`OrderingError`].
pub fn check_path_ordering(
    g: &ColoredGraph,
    (x, y): (Vertex, Vertex),
    p: &[Vertex],
    q: &[Vertex],
) -> Result<bool, OrderingError> {
    if !g.has_edge(x, y) {
        return Err(OrderingError::MissingAnchorEdge(x, y));
    }
    let p = validate_xy_path(g, (x, y), p, 1)?;
    let q = validate_xy_path(g, (x, y), q, 2)?;
    if has_k4_minor(g) {
        return Err(OrderingError::HostHasK4Minor);
    }
    Ok(common_vertices_in_same_order(&p, &q))
}

/// Validates one path argument and returns it oriented from `x` to `y`.
fn validate_xy_path(
    g: &ColoredGraph,
    (x, y): (Vertex, Vertex),
    path: &[Vertex],
    index: u8,
) -> Result<Vec<Vertex>, OrderingError> {
    let err = |reason: String| OrderingError::InvalidPath { index, reason };
    if path.len() < 2 {
        return Err(err("fewer than two vertices".into()));
    }
    let mut path = path.to_vec();
    if (path[0], *path.last().expect("nonempty")) == (y, x) {
        path.reverse();
    }
    if (path[0], *path.last().expect("nonempty")) != (x, y) {
        return Err(err(format!("endpoints are not {{{x}, {y}}}")));
    }
    let mut seen = BTreeSet::new();
    for &v in &path {
        if !seen.insert(v) {
            return Err(err(format!("vertex {v} repeats")));
        }
    }
    for w in path.windows(2) {
        let (a, b) = (w[0], w[1]);
        if (a.min(b), a.max(b)) == (x.min(y), x.max(y)) {
            return Err(err("uses the anchor edge itself".into()));
        }
        if !g.has_edge(a, b) {
            return Err(err(format!("{{{a}, {b}}} is not an edge of the graph")));
        }
    }
    Ok(path)
}

/// Do the vertices common to both sequences appear in the same order?
fn common_vertices_in_same_order(p: &[Vertex], q: &[Vertex]) -> bool {
    let pset: BTreeSet<Vertex> = p.iter().copied().collect();
    let qset: BTreeSet<Vertex> = q.iter().copied().collect();
    let in_p: Vec<Vertex> = p.iter().copied().filter(|v| qset.contains(v)).collect();
    let in_q: Vec<Vertex> = q.iter().copied().filter(|v| pset.contains(v)).collect();
    in_p == in_q
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Color::Red;
    use crate::patterns::catalog;

    fn graph_of(name: &str) -> ColoredGraph {
        catalog().get(name).unwrap().to_graph(Red)
    }

    fn cycle(n: Vertex) -> ColoredGraph {
        ColoredGraph::from_edges((0..n).map(|i| (i, (i + 1) % n, Red))).unwrap()
    }

    #[test]
    fn k4_minor_base_cases() {
        assert!(has_k4_minor(&graph_of("K4")));
        assert!(has_k4_minor(&graph_of("X")));
        for name in ["C3", "C4", "K23", "K15", "P7", "X1", "X2", "X3", "X4", "X5", "Y"] {
            assert!(!has_k4_minor(&graph_of(name)), "{name}");
        }
    }

    #[test]
    fn k4_minor_subdivision_and_wheel() {
        // Subdivide every edge of K4: still a K4 minor, no K4 subgraph.
        let k4 = catalog().get("K4").unwrap();
        let mut edges = Vec::new();
        for (i, &(u, v)) in k4.edges().iter().enumerate() {
            let mid = 4 + i as Vertex;
            edges.push((u, mid, Red));
            edges.push((mid, v, Red));
        }
        let subdivided = ColoredGraph::from_edges(edges).unwrap();
        assert!(has_k4_minor(&subdivided));
        assert!(crate::patterns::contains_subgraph(&subdivided, k4, None).is_none());
        // The 4-wheel: a 4-cycle plus a hub.
        let mut wheel = cycle(4);
        for i in 0..4 {
            wheel.add_edge(i, 4, Red).unwrap();
        }
        assert!(has_k4_minor(&wheel));
        // A 4-cycle with one chord is K4 minus an edge: no K4 minor.
        let mut chorded = cycle(4);
        chorded.add_edge(0, 2, Red).unwrap();
        assert!(!has_k4_minor(&chorded));
    }

    #[test]
    fn k23_minor_base_cases() {
        assert!(has_k23_minor(&graph_of("K23")));
        // K4 has only four vertices: five branch sets cannot fit.
        assert!(!has_k23_minor(&graph_of("K4")));
        for name in ["X", "X1", "X2", "X3", "X4", "X5", "Y", "C4", "K15"] {
            assert!(!has_k23_minor(&graph_of(name)), "{name}");
        }
    }

    #[test]
    fn k23_minor_subdivision_and_cube() {
        // Subdivide every edge of K2,3: the minor survives.
        let k23 = catalog().get("K23").unwrap();
        let mut edges = Vec::new();
        for (i, &(u, v)) in k23.edges().iter().enumerate() {
            let mid = 5 + i as Vertex;
            edges.push((u, mid, Red));
            edges.push((mid, v, Red));
        }
        let subdivided = ColoredGraph::from_edges(edges).unwrap();
        assert!(has_k23_minor(&subdivided));
        assert!(
            crate::patterns::contains_subgraph(&subdivided, k23, None).is_none(),
            "subdivision removed the subgraph copy"
        );
        // The cube graph has K2,3 minors (two antipodal-ish vertices with
        // three disjoint paths).
        let cube = ColoredGraph::from_edges([
            (0, 1, Red),
            (1, 2, Red),
            (2, 3, Red),
            (3, 0, Red),
            (4, 5, Red),
            (5, 6, Red),
            (6, 7, Red),
            (7, 4, Red),
            (0, 4, Red),
            (1, 5, Red),
            (2, 6, Red),
            (3, 7, Red),
        ])
        .unwrap();
        assert!(has_k23_minor(&cube));
    }

    #[test]
    fn k23_direct_edge_does_not_shorten_paths() {
        // Two vertices joined by an edge plus two 2-paths: only two
        // internally disjoint paths of length ≥ 2, so no K2,3 minor even
        // though connectivity counting the direct edge is 3.
        let g = ColoredGraph::from_edges([
            (0, 1, Red),
            (0, 2, Red),
            (2, 1, Red),
            (0, 3, Red),
            (3, 1, Red),
            (0, 4, Red),
        ])
        .unwrap();
        assert!(!has_k23_minor(&g));
        // A third 2-path tips it over.
        let mut h = g.clone();
        h.add_edge(4, 1, Red).unwrap();
        assert!(has_k23_minor(&h));
    }

    #[test]
    fn generic_search_agrees_with_specialized_testers() {
        let cat = catalog();
        let k4 = cat.get("K4").unwrap();
        let k23 = cat.get("K23").unwrap();
        for name in [
            "X", "X1", "X2", "X3", "X4", "X5", "Y", "K4", "K23", "K15", "C3", "C4", "P7",
        ] {
            let g = graph_of(name);
            assert_eq!(
                has_minor(&g, k4).unwrap(),
                has_k4_minor(&g),
                "K4 disagreement on {name}"
            );
            assert_eq!(
                has_minor(&g, k23).unwrap(),
                has_k23_minor(&g),
                "K2,3 disagreement on {name}"
            );
        }
    }

    #[test]
    fn minor_model_is_a_real_witness() {
        let mut wheel = cycle(4);
        for i in 0..4 {
            wheel.add_edge(i, 4, Red).unwrap();
        }
        let k4 = catalog().get("K4").unwrap();
        let model = find_minor_model(&wheel, k4).unwrap().unwrap();
        // Four disjoint branch sets covering at most all five vertices.
        let total: usize = model.branch_sets().iter().map(Vec::len).sum();
        assert!(model.branch_sets().len() == 4 && total <= 5);
    }

    #[test]
    fn host_cap_is_enforced() {
        let big = ColoredGraph::from_edges((0..13).map(|i| (i, (i + 1) % 13, Red))).unwrap();
        let k4 = catalog().get("K4").unwrap();
        assert_eq!(
            has_minor(&big, k4),
            Err(MinorError::HostTooLarge {
                vertices: 13,
                cap: MINOR_HOST_CAP
            })
        );
        // The specialized testers handle the same host fine.
        assert!(!has_k4_minor(&big));
    }

    #[test]
    fn path_ordering_on_a_theta_graph() {
        // Edge {0,1} plus two internally disjoint 0,1-paths.
        let g = ColoredGraph::from_edges([
            (0, 1, Red),
            (0, 2, Red),
            (2, 1, Red),
            (0, 3, Red),
            (3, 1, Red),
        ])
        .unwrap();
        assert_eq!(check_path_ordering(&g, (0, 1), &[0, 2, 1], &[0, 3, 1]), Ok(true));
        // Orientation of the arguments does not matter.
        assert_eq!(check_path_ordering(&g, (0, 1), &[0, 2, 1], &[1, 3, 0]), Ok(true));
    }

    #[test]
    fn path_ordering_with_shared_interior() {
        // 0-2-3-1 and 0-2-4-3-1 share {0, 2, 3, 1} in the same order.
        let g = ColoredGraph::from_edges([
            (0, 1, Red),
            (0, 2, Red),
            (2, 3, Red),
            (3, 1, Red),
            (2, 4, Red),
            (4, 3, Red),
        ])
        .unwrap();
        assert!(!has_k4_minor(&g));
        assert_eq!(
            check_path_ordering(&g, (0, 1), &[0, 2, 3, 1], &[0, 2, 4, 3, 1]),
            Ok(true)
        );
    }

    #[test]
    fn path_ordering_rejects_bad_inputs() {
        let g = ColoredGraph::from_edges([
            (0, 1, Red),
            (0, 2, Red),
            (2, 1, Red),
            (0, 3, Red),
            (3, 1, Red),
        ])
        .unwrap();
        assert_eq!(
            check_path_ordering(&g, (0, 4), &[0, 2, 1], &[0, 3, 1]),
            Err(OrderingError::MissingAnchorEdge(0, 4))
        );
        // The bare anchor edge is not a path in g − xy.
        assert!(matches!(
            check_path_ordering(&g, (0, 1), &[0, 1], &[0, 3, 1]),
            Err(OrderingError::InvalidPath { index: 1, .. })
        ));
        // Wrong endpoints.
        assert!(matches!(
            check_path_ordering(&g, (0, 1), &[0, 2, 1], &[0, 2, 3]),
            Err(OrderingError::InvalidPath { index: 2, .. })
        ));
        // Non-edge hop.
        assert!(matches!(
            check_path_ordering(&g, (0, 1), &[0, 3, 2, 1], &[0, 2, 1]),
            Err(OrderingError::InvalidPath { index: 1, .. })
        ));
        // Repeated vertex.
        assert!(matches!(
            check_path_ordering(&g, (0, 1), &[0, 2, 0, 2, 1], &[0, 2, 1]),
            Err(OrderingError::InvalidPath { index: 1, .. })
        ));
        // K4 host is out of scope.
        let k4 = graph_of("K4");
        assert_eq!(
            check_path_ordering(&k4, (0, 1), &[0, 2, 1], &[0, 3, 1]),
            Err(OrderingError::HostHasK4Minor)
        );
    }

    #[test]
    fn order_comparator_detects_disorder() {
        // The comparator itself must be able to say "no": feed it raw
        // sequences that reverse their shared interior.
        assert!(common_vertices_in_same_order(&[0, 2, 3, 1], &[0, 2, 3, 1]));
        assert!(!common_vertices_in_same_order(&[0, 2, 3, 1], &[0, 3, 2, 1]));
        assert!(common_vertices_in_same_order(&[0, 2, 3, 1], &[0, 5, 3, 6, 1]));
    }
}
