//! Exercises the minor-containment oracles and the path-ordering fact
//! they power.
//!
//! Minor containment drives two things here: the host classes
//! `minor-free:K4` and `minor-free:K23` the referee enforces, and a
//! structural lemma — across an edge xy of a K₄-minor-free graph, any
//! two x,y-paths meet their common vertices in the same order — that the
//! corresponding painter leans on.

use online_ramsey::{
    catalog, check_path_ordering, find_minor_model, has_k23_minor, has_k4_minor, Color,
    ColoredGraph, OrderingError, Vertex,
};

/// Builds an all-red board from an edge list (colors are irrelevant to
/// minors; the testers never look at them).
fn board(edges: &[(Vertex, Vertex)]) -> ColoredGraph {
    let mut g = ColoredGraph::new();
    for &(u, v) in edges {
        g.add_edge(u, v, Color::Red).expect("fresh edge");
    }
    g
}

fn main() {
    // A subdivision is the classic minor the subgraph relation misses:
    // replace each K₄ edge by a two-edge path and no K₄ subgraph
    // remains, but contracting half of each path brings it back.
    let k4_subdivided = board(&[
        (0, 4), (4, 1), (0, 5), (5, 2), (0, 6), (6, 3),
        (1, 7), (7, 2), (1, 8), (8, 3), (2, 9), (9, 3),
    ]);
    println!("subdivided K4: has K4 minor = {}", has_k4_minor(&k4_subdivided));

    // The theta graph — two vertices joined by three disjoint paths — is
    // where K₂,₃ appears and K₄ does not: contracting each path's tail
    // leaves the two hubs on one side and a path-middle on the other.
    let theta = board(&[(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)]);
    println!(
        "theta graph:   has K4 minor = {}, has K23 minor = {}",
        has_k4_minor(&theta),
        has_k23_minor(&theta)
    );

    // The generic oracle exhibits the witness, not just the bit: one
    // connected branch set per pattern vertex, pairwise linked by host
    // edges wherever the pattern has an edge.
    let k23 = catalog().get("K23").expect("catalog is complete");
    let model = find_minor_model(&theta, k23)
        .expect("host is small enough for the generic oracle")
        .expect("the theta graph was just reported to contain it");
    println!("  witness branch sets: {:?}", model.branch_sets());

    // The ordering lemma, on a board built as two x,y-paths over the
    // edge {0, 1}: the paths share the interior vertices 3 and 4 and
    // visit them in the same order — forced, since the board has no K4
    // minor.
    let ladder = board(&[
        (0, 1),                          // the anchor edge xy
        (0, 2), (2, 3), (3, 4), (4, 5), (5, 1), // path P
        (0, 6), (6, 3), (3, 7), (7, 4), (4, 8), (8, 1), // path Q
    ]);
    assert!(!has_k4_minor(&ladder));
    let same = check_path_ordering(
        &ladder,
        (0, 1),
        &[0, 2, 3, 4, 5, 1],
        &[0, 6, 3, 7, 4, 8, 1],
    )
    .expect("valid paths on a K4-minor-free host");
    println!("ladder paths order their shared vertices alike: {same}");

    // On K₄ itself two paths *can* disagree on the order — and the
    // checker refuses the host rather than answer outside the lemma's
    // premises.
    let k4 = board(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
    match check_path_ordering(&k4, (0, 1), &[0, 2, 3, 1], &[0, 3, 2, 1]) {
        Err(OrderingError::HostHasK4Minor) => {
            println!("on K4 the premise fails and the checker says so")
        }
        other => println!("unexpected: {other:?}"),
    }
}
