//! Solves bounded games exactly and checks the machine-checkable parts.
//!
//! `solve` answers, by exhaustive minimax over canonicalized boards: can
//! Builder force a monochromatic triangle within the given vertex and
//! edge budget, against *every* painter? A Builder win comes with two
//! artifacts — a principal variation (one optimal line) and a complete
//! strategy tree whose every leaf is a win, re-checkable independently
//! of the search that produced it.

use online_ramsey::{probe_open, solve, Constraint, Verdict};

fn main() {
    // On unconstrained boards the exact threshold within six vertices
    // is eight edges: Painter holds every budget through seven.
    let none = Constraint::parse("none").expect("valid constraint");
    for edges in 5..=8 {
        let result = solve(&none, 6, edges).expect("bounds are within solver limits");
        println!("none, ≤6 vertices, ≤{edges} edges:  {}", result.verdict);
    }

    // Forbidding a K₂,₃ minor takes away Builder's favorite dense traps,
    // yet costs nothing at this budget: still a win in exactly eight.
    let no_k23 = Constraint::parse("minor-free:K23").expect("valid constraint");
    let close = solve(&no_k23, 6, 7).expect("bounds are within solver limits");
    println!("minor-free:K23, ≤6v, ≤7e:   {}", close.verdict);
    let result = solve(&no_k23, 6, 8).expect("bounds are within solver limits");
    println!("minor-free:K23, ≤6v, ≤8e:   {}", result.verdict);
    assert!(matches!(result.verdict, Verdict::BuilderWins { plies: 8 }));

    // One optimal line. Painter's replies here are minimax too: the
    // moves show best play on both sides, not a straw painter.
    println!("\nprincipal variation:");
    for (i, (u, v, color)) in result.principal_variation.moves().iter().enumerate() {
        println!("  {}. {{{u}, {v}}} {}", i + 1, color.name());
    }

    // The certificate is the whole winning strategy, not just one line:
    // a tree with a Builder move at every node and a child per painter
    // reply. `verify` walks it — legality, budgets, win at every leaf —
    // and reports the deepest one.
    let tree = result.certificate.as_ref().expect("wins carry a certificate");
    let depth = tree.verify(&no_k23).expect("certificate checks out");
    println!("\ncertificate: {} nodes, worst leaf at {} edges", tree.size(), depth);
    println!(
        "search: {} positions explored, {} transposition hits",
        result.stats.nodes, result.stats.tt_hits
    );

    // The one forbidden graph with no known answer. Bounded probes chip
    // at it from below; this one says only that Painter holds nine edges
    // on boards of up to seven vertices, nothing beyond.
    let open = probe_open(7, 9).expect("bounds are within solver limits");
    println!("\nopen configuration, ≤7v, ≤9e: {}", open.verdict);
}
