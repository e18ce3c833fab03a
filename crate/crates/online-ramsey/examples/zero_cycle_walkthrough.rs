//! Walks through the zero-cycle machinery behind the painter for boards
//! with no K₄ minor.
//!
//! Weigh edges red = +1, blue = −1 and read sums mod 3. A *zero cycle*
//! is a cycle whose edges sum to 0; it is *good* when two of its
//! vertices α, β cut it into arcs summing to 0 and the board links α to
//! β outside the cycle. Two facts carry the strategy: a monochromatic
//! triangle is a zero cycle that can never be good (its arcs sum to ±1),
//! and on K₄-minor-free boards some color for each new edge keeps every
//! zero cycle good. Keep the invariant, never lose.

use online_ramsey::{
    is_zero_cycle_good, strategy_zero_cycle, Color, ColoredGraph, CycleView, PainterError,
};

/// Prints a cycle's f-value and, when it is a zero cycle, its goodness.
fn inspect(g: &ColoredGraph, cycle: &CycleView) {
    let f = cycle.f_value(g).expect("cycle edges are board edges");
    print!("  cycle {:?}: f = {f}", cycle.vertices());
    if f == 0 {
        let good = is_zero_cycle_good(g, cycle).expect("f = 0 was just checked");
        println!(", zero cycle, {}", if good { "good" } else { "BAD" });
    } else {
        println!(" (not a zero cycle)");
    }
}

fn main() {
    // Handcrafted, painter bypassed: an all-red hexagon. Six reds sum to
    // 6 ≡ 0, and with no chords anywhere the cycle is a bad zero cycle —
    // exactly what the strategy must never allow on the live board.
    let mut g = ColoredGraph::new();
    for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)] {
        g.add_edge(u, v, Color::Red).expect("fresh edge");
    }
    let hexagon = CycleView::new(&g, vec![0, 1, 2, 3, 4, 5]).expect("drawn as a cycle");
    println!("all-red hexagon, no chords:");
    inspect(&g, &hexagon);

    // One red chord repairs it: the arc 0-1-2-3 sums to 3 ≡ 0, and the
    // chord itself links α = 0 to β = 3 outside the cycle. Good again.
    g.add_edge(0, 3, Color::Red).expect("fresh edge");
    println!("after the red chord {{0, 3}}:");
    inspect(&g, &hexagon);

    // The monochromatic triangle, by contrast, is beyond repair: every
    // arc between two of its vertices sums to 1 or 2 mod 3, so no α, β
    // pair can ever witness goodness, chords or not.
    let mut t = ColoredGraph::new();
    for (u, v) in [(0, 1), (1, 2), (2, 0)] {
        t.add_edge(u, v, Color::Red).expect("fresh edge");
    }
    let triangle = CycleView::new(&t, vec![0, 1, 2]).expect("drawn as a cycle");
    println!("a red triangle is a permanently bad zero cycle:");
    inspect(&t, &triangle);

    // Now the policy plays for real. Five path edges draw no cycle and
    // come back red; the closing edge is the first real decision. Red
    // would complete an all-red hexagon — a bad zero cycle, since this
    // board has no chords — so the policy answers blue, and the hexagon
    // is not a zero cycle at all.
    let mut board = ColoredGraph::new();
    println!("\nthe policy colors a growing board:");
    for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 2)] {
        let color = strategy_zero_cycle(&board, (u, v)).expect("board stays K4-minor-free");
        board.add_edge(u, v, color).expect("fresh edge");
        println!("  {{{u}, {v}}} → {}", color.name());
    }
    for cycle in board.cycles_through(5, 0, 64).expect("edge exists") {
        inspect(&board, &cycle);
    }

    // The chord {0, 2} above also went blue: red would have made the
    // triangle {0, 1, 2} all red. One more chord would hand the board a
    // K₄ minor on {0, 1, 2, 3}, and this policy — alone in the roster —
    // checks its own precondition rather than color outside its class.
    match strategy_zero_cycle(&board, (1, 3)) {
        Err(PainterError::HostNotK4MinorFree) => {
            println!("drawing {{1, 3}} refused: the board would carry a K4 minor")
        }
        other => println!("unexpected: {other:?}"),
    }
}
