//! Verifies builder policies exhaustively: every painter reply sequence,
//! not just the replies some painter policy happens to give.
//!
//! `verify_builder` walks the full binary tree of red/blue answers to the
//! builder's moves. A win means every branch ends in a monochromatic
//! triangle with every drawn edge legal in the class; any branch where
//! the builder proposes an illegal edge, stalls past the edge cap, or
//! claims a win the board does not show comes back as a failing trace.

use online_ramsey::{
    catalog, contains_subgraph, force_mono_path, mono_path_move_bound, verify_builder,
    verify_builder_with_objective, BuilderPolicy, BuilderVerdict, Color, Constraint,
};

/// Verifies one builder on one class and prints the verdict.
fn check(builder: &BuilderPolicy, class: &str) {
    let constraint = Constraint::parse(class).expect("valid constraint");
    print!("{} on {class}: ", builder.name());
    match verify_builder(builder, &constraint) {
        BuilderVerdict::Wins { worst_case_edges, branches } => {
            println!("wins every branch, worst case {worst_case_edges} edges ({branches} branches)");
        }
        BuilderVerdict::Fails { reason, trace } => {
            println!("FAILS after {} moves: {reason}", trace.moves().len());
        }
    }
}

fn main() {
    // The stars of the show, each on its home class. (The heavyweight
    // sibling construction for boards with no K₄ subgraph also verifies —
    // worst case 30 edges over 4.26 million branches — but needs a couple
    // of minutes, so the full run lives in the test suite, not here.)
    check(&BuilderPolicy::by_name("star-triangle").expect("known"), "minor-free:K23");
    check(&BuilderPolicy::by_name("k15free").expect("known"), "subgraph-free:K15");
    check(&BuilderPolicy::by_name("yfree").expect("known"), "subgraph-free:Y");

    // Verification is honest: the same star builder dropped onto a class
    // with almost no legal edges is caught proposing an illegal one.
    check(&BuilderPolicy::by_name("star-triangle").expect("known"), "subgraph-free:P3");

    // Sub-goal policies verify against their own objective instead of
    // the triangle. The path forcer must produce a monochromatic path
    // with k edges; its worst case over all reply sequences lands exactly
    // on the precomputed bound.
    println!();
    let unconstrained = Constraint::parse("none").expect("valid constraint");
    for k in 1..=4usize {
        let path = catalog().get(&format!("P{}", k + 1)).expect("catalog path");
        let verdict = verify_builder_with_objective(&force_mono_path(k), &unconstrained, |g| {
            Color::BOTH.iter().any(|&c| contains_subgraph(g, path, Some(c)).is_some())
        });
        match verdict {
            BuilderVerdict::Wins { worst_case_edges, branches } => println!(
                "mono-path:{k}: forces it in ≤{worst_case_edges} edges \
                 (bound says {}, {branches} branches)",
                mono_path_move_bound(k)
            ),
            BuilderVerdict::Fails { reason, .. } => println!("mono-path:{k}: FAILS: {reason}"),
        }
    }
}
