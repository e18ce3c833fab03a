//! Serializes a finished game, reads it back, replays it, and shows the
//! replayer catching a tampered record.
//!
//! A trace is JSON Lines: a header naming the class and the players, one
//! line per move, and a footer with the outcome. `from_jsonl` only
//! checks shape; `replay` re-referees the whole game — every edge legal
//! in the class, colors consistent, recorded outcome matching what the
//! board actually shows — so a trace that replays is evidence, not
//! hearsay.

use online_ramsey::{run_game, BuilderPolicy, Constraint, GameTrace, PainterPolicy};

fn main() {
    let constraint = Constraint::parse("minor-free:K23").expect("valid constraint");
    let trace = run_game(
        BuilderPolicy::by_name("star-triangle").expect("known builder"),
        PainterPolicy::by_name("strategy2").expect("known painter"),
        &constraint,
        30,
    )
    .expect("game runs to completion");
    println!("played: {} in {} moves\n", trace.outcome(), trace.moves().len());

    // The wire format, as written to disk by the front end.
    let text = trace.to_jsonl();
    print!("{text}");

    // Round trip: parse, replay, compare. Serialization is canonical, so
    // re-serializing the parsed trace reproduces the text byte for byte.
    let parsed = GameTrace::from_jsonl(&text).expect("well-formed trace");
    let board = parsed.replay().expect("honest traces replay");
    assert_eq!(parsed.to_jsonl(), text);
    println!(
        "\nreplayed: {} vertices, {} edges, outcome consistent",
        board.vertex_count(),
        board.edge_count()
    );

    // Flip the winning move's color and the story no longer matches the
    // board: parsing still succeeds, replay refuses. (Tampering has to
    // touch something load-bearing — rewriting a move nothing depended
    // on merely describes a different, equally consistent game.)
    let mut moves = parsed.moves().to_vec();
    let (u, v, color) = moves.last_mut().expect("the game had moves");
    *color = color.flip();
    let tampered = GameTrace::from_parts(
        &constraint,
        parsed.builder_name(),
        parsed.painter_name(),
        moves.clone(),
        parsed.outcome().clone(),
    )
    .to_jsonl();
    println!("\nflipping the color of the final move {{{u}, {v}}}:");
    let bad = GameTrace::from_jsonl(&tampered).expect("still well-formed JSON");
    match bad.replay() {
        Err(e) => println!("tampered trace rejected: {e}"),
        Ok(_) => println!("unexpected: tampered trace replayed"),
    }

    // The same game as Graphviz DOT, red and blue edges marked, for
    // writeups and quick visual checks.
    println!("\n{}", trace.to_dot());
}
