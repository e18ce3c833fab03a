//! Classifies forbidden graphs: for each connected graph `F`, who wins the
//! triangle game on `F`-subgraph-free boards?
//!
//! The split is a finite lattice check. Painter has a winning policy
//! exactly when `F` embeds into one of four boundary patterns X₁..X₄;
//! Builder wins whenever `F` embeds into none of them and is not the one
//! exceptional graph X₅, whose game is open. This walkthrough classifies
//! the whole built-in catalog and then a pattern supplied as raw text.

use online_ramsey::{catalog, classify_forbidden_graph, Classification, Pattern};

/// Prints one classification line for `p`.
fn report(p: &Pattern) {
    match classify_forbidden_graph(p) {
        Classification::Painter { index, embedding } => {
            println!(
                "  {:5} PAINTER  embeds into X{index} as {}",
                p.name(),
                embedding.as_slice().iter().enumerate().map(|(a, b)| format!("{a}→{b}")).collect::<Vec<_>>().join(" ")
            );
        }
        Classification::Builder => println!("  {:5} BUILDER  fits no boundary pattern", p.name()),
        Classification::Open => println!("  {:5} OPEN     the one unresolved graph", p.name()),
    }
}

fn main() {
    println!("built-in catalog:");
    let catalog = catalog();
    let mut names: Vec<&str> = catalog.names().collect();
    names.sort_unstable();
    for name in names {
        report(catalog.get(name).expect("name came from the catalog"));
    }

    // Any connected graph classifies, not just the catalog: patterns parse
    // from an edge list, one `u v` pair per line. Here is the bull — a
    // triangle wearing two horns.
    let bull = Pattern::parse("bull", "0 1\n1 2\n2 0\n0 3\n1 4").expect("well-formed edge list");
    println!("ad hoc:");
    report(&bull);

    // Subdividing one horn stretches the bull past every boundary pattern:
    // the classification is not monotone under subdivision.
    let long_horn_bull =
        Pattern::parse("bull+", "0 1\n1 2\n2 0\n0 3\n3 5\n1 4").expect("well-formed edge list");
    report(&long_horn_bull);
}
