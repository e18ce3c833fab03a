//! Plays complete games between library policies and prints the traces.
//!
//! The opening act is the classic forced win: on boards with no K₂,₃
//! minor, the star-triangle builder draws a five-edge star, takes the
//! majority color among the spokes, and then triangulates three
//! like-colored leaves — a majority answer closes a triangle with two
//! spokes, and three minority answers close one by themselves. Constant
//! painters fall in six edges, the strongest replies in at most eight.

use online_ramsey::{run_game, BuilderPolicy, Constraint, GameTrace, PainterPolicy};

/// Runs one game and prints its moves and outcome.
fn play(builder: &str, painter: &str, constraint: &Constraint) -> GameTrace {
    let builder = BuilderPolicy::by_name(builder).expect("known builder");
    let painter = PainterPolicy::by_name(painter).expect("known painter");
    println!(
        "— {} vs {} on {} —",
        builder.name(),
        painter.name(),
        constraint.spec_string()
    );
    let trace = run_game(builder, painter, constraint, 30).expect("game runs to completion");
    for (i, (u, v, color)) in trace.moves().iter().enumerate() {
        println!("  move {}: {{{u}, {v}}} colored {}", i + 1, color.name());
    }
    println!("  outcome: {}\n", trace.outcome());
    trace
}

fn main() {
    let no_k23_minor = Constraint::parse("minor-free:K23").expect("valid constraint");

    // The punchline first: constant red loses in six.
    let quick = play("star-triangle", "always-red", &no_k23_minor);
    assert_eq!(quick.moves().len(), 6);

    // Constant blue fares no better: the would-be red star turns into a
    // blue star, and closing any two leaves wins just as fast.
    play("star-triangle", "always-blue", &no_k23_minor);

    // A painter that actually looks at the board survives longer but
    // still loses — no painter policy can hold this class forever.
    play("star-triangle", "strategy2", &no_k23_minor);

    // The same builder on a much poorer class forfeits: boards that must
    // stay a matching admit no second spoke, and the referee charges the
    // builder with the illegal attempt.
    let matchings_only = Constraint::parse("subgraph-free:P3").expect("valid constraint");
    play("star-triangle", "always-red", &matchings_only);
}
