//! Game referee: alternates Builder proposals and Painter colors, enforces
//! the host-class constraint, detects the monochromatic triangle, and
//! records replayable traces.
//!
//! The engine — not the policies — is the single source of truth for win
//! detection: after every colored edge it checks for a monochromatic C₃
//! through that edge, and a [`BuilderMove::ClaimWin`] is re-verified before
//! it is honored. Illegal Builder moves (loops, duplicate edges, edges that
//! leave the host class, false win claims) forfeit the game as
//! [`Outcome::BuilderIllegal`] rather than raising an error, so searches and
//! fuzzers see total behavior.
//!
//! Traces serialize to JSON Lines (one header object, one object per move,
//! one footer object) and to Graphviz DOT. [`GameTrace::replay`] validates a
//! trace move by move — every move a new edge, every prefix inside the
//! class, the monochromatic triangle appearing exactly when the outcome says
//! so — and reconstructs the final board.

use crate::builder::{BuilderMove, BuilderPolicy};
use crate::graph::{Color, ColoredGraph, Vertex};
use crate::minors::{has_k23_minor, has_k4_minor};
use crate::painter::{PainterError, PainterPolicy};
use crate::patterns::{
    contains_subgraph, contains_subgraph_anchored, mono_c3, mono_c3_through, try_catalog,
    Embedding, Pattern, PatternError,
};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::fmt::Write as _;

// ===========================================================================
// Errors
// ===========================================================================

/// Errors from constraint parsing, game setup, and trace decoding/replay.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    /// [`run_game`] needs a budget of at least one edge.
    #[error("max_edges must be at least 1")]
    ZeroBudget,
    /// A constraint string matched none of the grammar's forms.
    #[error(
        "unrecognized constraint `{0}`; expected `none`, `subgraph-free:<name-or-file>`, \
         `minor-free:K4`, or `minor-free:K23`"
    )]
    UnrecognizedConstraint(String),
    /// Minor-exclusion constraints are limited to the two targets with
    /// dedicated testers.
    #[error("minor-free constraints support K4 and K23 only, got `{0}`")]
    UnsupportedMinor(String),
    /// A subgraph-free constraint named neither a catalog pattern nor a
    /// readable file.
    #[error("`{given}` is neither a catalog pattern (available: {available}) nor a readable file")]
    UnknownPattern { given: String, available: String },
    /// A pattern file (or a catalog override) failed to parse.
    #[error(transparent)]
    Pattern(#[from] PatternError),
    /// The painter policy failed. Only `zero-cycle` can: it refuses to color
    /// when the board plus the new edge is not K₄-minor-free, which the
    /// `minor-free:K4` constraint rules out.
    #[error(transparent)]
    Painter(#[from] PainterError),
    /// A JSON Lines trace did not decode.
    #[error("trace line {line}: {msg}")]
    TraceSyntax { line: usize, msg: String },
    /// Replay found the trace inconsistent with the rules.
    #[error("replay: {0}")]
    Replay(String),
}

// ===========================================================================
// Host-class constraints
// ===========================================================================

/// The two minor-exclusion targets with dedicated testers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinorTarget {
    /// No K₄ minor (equivalently, every block is series-parallel).
    K4,
    /// No K₂,₃ minor.
    K23,
}

impl MinorTarget {
    /// The spelling used in constraint spec strings.
    pub fn token(self) -> &'static str {
        match self {
            MinorTarget::K4 => "K4",
            MinorTarget::K23 => "K23",
        }
    }
}

/// A host-graph class restriction: Builder may only draw edges that keep
/// the board inside the class. Colors never matter here — membership is a
/// property of the underlying uncolored graph.
///
/// Membership is monotone-decreasing under edge addition (once a board
/// leaves the class it can never return), which is what lets the engine
/// check only the effect of each newly proposed edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Constraint {
    /// All simple graphs.
    Unrestricted,
    /// Graphs containing no copy of the pattern as a subgraph.
    SubgraphFree(Pattern),
    /// Graphs containing no minor of the given target.
    MinorFree(MinorTarget),
}

impl Constraint {
    /// Parses the spec grammar `none | subgraph-free:<name-or-file> |
    /// minor-free:K4 | minor-free:K23` (keywords ASCII case-insensitive).
    ///
    /// The `subgraph-free` argument resolves against the pattern catalog
    /// first, then falls back to reading it as an edge-list file; an
    /// unknown name is rejected with the catalog listed.
    pub fn parse(spec: &str) -> Result<Constraint, EngineError> {
        let spec = spec.trim();
        if spec.eq_ignore_ascii_case("none") {
            return Ok(Constraint::Unrestricted);
        }
        let Some((kind, arg)) = spec.split_once(':') else {
            return Err(EngineError::UnrecognizedConstraint(spec.to_string()));
        };
        let (kind, arg) = (kind.trim(), arg.trim());
        if kind.eq_ignore_ascii_case("minor-free") {
            return if arg.eq_ignore_ascii_case("K4") {
                Ok(Constraint::MinorFree(MinorTarget::K4))
            } else if arg.eq_ignore_ascii_case("K23") {
                Ok(Constraint::MinorFree(MinorTarget::K23))
            } else {
                Err(EngineError::UnsupportedMinor(arg.to_string()))
            };
        }
        if !kind.eq_ignore_ascii_case("subgraph-free") {
            return Err(EngineError::UnrecognizedConstraint(spec.to_string()));
        }
        let catalog = try_catalog()?;
        if let Some(p) = catalog.get(arg) {
            return Ok(Constraint::SubgraphFree(p.clone()));
        }
        match std::fs::read_to_string(arg) {
            Ok(text) => Ok(Constraint::SubgraphFree(Pattern::parse(arg, &text)?)),
            Err(_) => Err(EngineError::UnknownPattern {
                given: arg.to_string(),
                available: catalog.names().collect::<Vec<_>>().join(", "),
            }),
        }
    }

    /// The canonical spec string. [`Constraint::parse`] round-trips it, as
    /// long as file-based patterns stay readable at their recorded path.
    pub fn spec_string(&self) -> String {
        match self {
            Constraint::Unrestricted => "none".to_string(),
            Constraint::SubgraphFree(p) => format!("subgraph-free:{}", p.name()),
            Constraint::MinorFree(t) => format!("minor-free:{}", t.token()),
        }
    }

    /// Full membership test (colors ignored).
    pub fn in_class(&self, g: &ColoredGraph) -> bool {
        match self {
            Constraint::Unrestricted => true,
            Constraint::SubgraphFree(p) => contains_subgraph(g, p, None).is_none(),
            Constraint::MinorFree(MinorTarget::K4) => !has_k4_minor(g),
            Constraint::MinorFree(MinorTarget::K23) => !has_k23_minor(g),
        }
    }

    /// Incremental membership test: `g` is a board with the new edge `e`
    /// already added, and the board without `e` was in the class — does it
    /// stay inside? Subgraph constraints anchor the pattern search at `e`;
    /// the minor testers are whole-graph but cheap. Agrees with
    /// [`Constraint::in_class`] under the stated precondition (tested).
    pub fn permits(&self, g: &ColoredGraph, e: (Vertex, Vertex)) -> bool {
        match self {
            Constraint::Unrestricted => true,
            Constraint::SubgraphFree(p) => contains_subgraph_anchored(g, p, e, None).is_none(),
            Constraint::MinorFree(MinorTarget::K4) => !has_k4_minor(g),
            Constraint::MinorFree(MinorTarget::K23) => !has_k23_minor(g),
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec_string())
    }
}

/// Checks a proposed Builder edge for legality on the current board: it
/// must be a new simple edge and must keep the board inside the class. On
/// rejection the error is a human-readable reason, used verbatim by the
/// interactive front end.
pub fn check_move(g: &ColoredGraph, c: &Constraint, u: Vertex, v: Vertex) -> Result<(), String> {
    if u == v {
        return Err(format!("{{{u}, {v}}} is a loop, not an edge"));
    }
    if g.has_edge(u, v) {
        return Err(format!("{{{u}, {v}}} is already on the board"));
    }
    // The color is irrelevant to class membership.
    let tentative = g
        .with_edge(u, v, Color::Red)
        .expect("a fresh simple edge always inserts");
    if !c.permits(&tentative, (u, v)) {
        return Err(match c {
            Constraint::Unrestricted => unreachable!("the unrestricted class permits everything"),
            Constraint::SubgraphFree(p) => {
                format!("drawing {{{u}, {v}}} would put a copy of {} on the board", p.name())
            }
            Constraint::MinorFree(t) => {
                format!("drawing {{{u}, {v}}} would create a {} minor", t.token())
            }
        });
    }
    Ok(())
}

// ===========================================================================
// Outcomes and traces
// ===========================================================================

/// How a game ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    /// A monochromatic triangle appeared; Builder wins. The witness lists
    /// the triangle's vertices in ascending order.
    BuilderWin { color: Color, witness: [Vertex; 3] },
    /// The edge budget ran out with no monochromatic triangle.
    BudgetExhausted,
    /// Builder's `move_index`-th proposal (1-based) was illegal — a loop, a
    /// duplicate, an edge leaving the host class, or a false win claim —
    /// and forfeited the game.
    BuilderIllegal { move_index: usize },
}

impl Outcome {
    /// The stable tag used in trace footers.
    pub fn tag(&self) -> &'static str {
        match self {
            Outcome::BuilderWin { .. } => "BUILDER_WIN",
            Outcome::BudgetExhausted => "BUDGET_EXHAUSTED",
            Outcome::BuilderIllegal { .. } => "BUILDER_ILLEGAL",
        }
    }

    /// Did Builder complete a monochromatic triangle?
    pub fn is_builder_win(&self) -> bool {
        matches!(self, Outcome::BuilderWin { .. })
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::BuilderWin { color, witness: [a, b, c] } => {
                write!(f, "BUILDER_WIN ({} triangle {{{a}, {b}, {c}}})", color.name())
            }
            Outcome::BudgetExhausted => f.write_str("BUDGET_EXHAUSTED"),
            Outcome::BuilderIllegal { move_index } => {
                write!(f, "BUILDER_ILLEGAL (move {move_index})")
            }
        }
    }
}

/// The ascending vertex triple of a triangle embedding.
pub(crate) fn witness_triple(emb: &Embedding) -> [Vertex; 3] {
    let mut t = [0; 3];
    for (slot, v) in t.iter_mut().zip(emb.image_set()) {
        *slot = v;
    }
    t
}

/// A completed game: configuration, the colored moves in order, and the
/// outcome. Immutable once constructed; replaying the moves reproduces the
/// final board exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameTrace {
    constraint: String,
    builder: String,
    painter: String,
    moves: Vec<(Vertex, Vertex, Color)>,
    outcome: Outcome,
}

impl GameTrace {
    /// Assembles a trace from parts (the exhaustive searches use this to
    /// package counterexample lines). Edges are stored with endpoints in
    /// ascending order. [`GameTrace::replay`] validates any trace, however
    /// it was built.
    pub fn from_parts(
        constraint: &Constraint,
        builder: &str,
        painter: &str,
        moves: Vec<(Vertex, Vertex, Color)>,
        outcome: Outcome,
    ) -> GameTrace {
        GameTrace {
            constraint: constraint.spec_string(),
            builder: builder.to_string(),
            painter: painter.to_string(),
            moves: moves.into_iter().map(|(u, v, c)| (u.min(v), u.max(v), c)).collect(),
            outcome,
        }
    }

    /// The constraint spec string the game was played under.
    pub fn constraint_spec(&self) -> &str {
        &self.constraint
    }

    /// The Builder policy's name.
    pub fn builder_name(&self) -> &str {
        &self.builder
    }

    /// The Painter policy's name.
    pub fn painter_name(&self) -> &str {
        &self.painter
    }

    /// The colored moves, in the order they were played.
    pub fn moves(&self) -> &[(Vertex, Vertex, Color)] {
        &self.moves
    }

    /// How the game ended.
    pub fn outcome(&self) -> &Outcome {
        &self.outcome
    }

    /// Replays the trace from the empty board, validating every step: each
    /// move must be a legal new edge, every prefix must lie in the class,
    /// and a monochromatic triangle must appear exactly when (and how) the
    /// outcome says. Returns the final board.
    pub fn replay(&self) -> Result<ColoredGraph, EngineError> {
        let constraint = Constraint::parse(&self.constraint)?;
        let mut g = ColoredGraph::new();
        let last = self.moves.len();
        let mut won = false;
        for (i, &(u, v, c)) in self.moves.iter().enumerate() {
            let turn = i + 1;
            check_move(&g, &constraint, u, v)
                .map_err(|msg| EngineError::Replay(format!("move {turn}: {msg}")))?;
            g.add_edge(u, v, c).expect("check_move admitted the edge");
            let mono = mono_c3_through(&g, u, v);
            match (&self.outcome, mono) {
                (_, None) => {}
                (Outcome::BuilderWin { color, witness }, Some((mc, emb))) if turn == last => {
                    if *color != mc || *witness != witness_triple(&emb) {
                        return Err(EngineError::Replay(format!(
                            "the final board's {} triangle {:?} does not match the recorded \
                             witness",
                            mc.name(),
                            witness_triple(&emb),
                        )));
                    }
                    won = true;
                }
                (_, Some((mc, emb))) => {
                    return Err(EngineError::Replay(format!(
                        "move {turn} completes a {} triangle {:?}, which the outcome does not \
                         account for",
                        mc.name(),
                        witness_triple(&emb),
                    )));
                }
            }
        }
        match &self.outcome {
            Outcome::BuilderWin { .. } if !won => Err(EngineError::Replay(
                "BUILDER_WIN recorded but the final board has no monochromatic triangle".into(),
            )),
            Outcome::BuilderIllegal { move_index } if *move_index != last + 1 => {
                Err(EngineError::Replay(format!(
                    "BUILDER_ILLEGAL at move {move_index} does not follow the {last} recorded \
                     moves"
                )))
            }
            _ => Ok(g),
        }
    }
}

// ===========================================================================
// Trace persistence: JSON Lines and DOT
// ===========================================================================

#[derive(Serialize, Deserialize)]
struct HeaderLine {
    constraint: String,
    builder: String,
    painter: String,
}

#[derive(Serialize, Deserialize)]
struct MoveLine {
    turn: usize,
    edge: [Vertex; 2],
    color: String,
}

#[derive(Serialize, Deserialize)]
struct FooterLine {
    outcome: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    witness: Option<[Vertex; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    color: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    move_index: Option<usize>,
}

/// Parses a serialized color name.
fn parse_color(name: &str) -> Option<Color> {
    match name {
        "red" => Some(Color::Red),
        "blue" => Some(Color::Blue),
        _ => None,
    }
}

impl GameTrace {
    /// Serializes to JSON Lines: a header object, one object per move, and
    /// a footer object.
    pub fn to_jsonl(&self) -> String {
        fn dump<T: Serialize>(out: &mut String, line: &T) {
            out.push_str(&serde_json::to_string(line).expect("trace lines are plain data"));
            out.push('\n');
        }
        let mut out = String::new();
        dump(
            &mut out,
            &HeaderLine {
                constraint: self.constraint.clone(),
                builder: self.builder.clone(),
                painter: self.painter.clone(),
            },
        );
        for (i, &(u, v, c)) in self.moves.iter().enumerate() {
            dump(&mut out, &MoveLine { turn: i + 1, edge: [u, v], color: c.name().to_string() });
        }
        let footer = match &self.outcome {
            Outcome::BuilderWin { color, witness } => FooterLine {
                outcome: self.outcome.tag().into(),
                witness: Some(*witness),
                color: Some(color.name().into()),
                move_index: None,
            },
            Outcome::BudgetExhausted => FooterLine {
                outcome: self.outcome.tag().into(),
                witness: None,
                color: None,
                move_index: None,
            },
            Outcome::BuilderIllegal { move_index } => FooterLine {
                outcome: self.outcome.tag().into(),
                witness: None,
                color: None,
                move_index: Some(*move_index),
            },
        };
        dump(&mut out, &footer);
        out
    }

    /// Decodes the JSON Lines form. This checks structure only (line shape,
    /// move numbering, footer fields); use [`GameTrace::replay`] to validate
    /// game legality.
    pub fn from_jsonl(text: &str) -> Result<GameTrace, EngineError> {
        let syntax =
            |line: usize, msg: String| EngineError::TraceSyntax { line, msg };
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty())
            .collect();
        if lines.len() < 2 {
            return Err(syntax(
                lines.len(),
                "a trace needs at least a header line and a footer line".into(),
            ));
        }
        let (hno, hline) = lines[0];
        let header: HeaderLine =
            serde_json::from_str(hline).map_err(|e| syntax(hno, e.to_string()))?;
        let (fno, fline) = lines[lines.len() - 1];
        let footer: FooterLine =
            serde_json::from_str(fline).map_err(|e| syntax(fno, e.to_string()))?;
        let mut moves = Vec::new();
        for (k, &(no, line)) in lines[1..lines.len() - 1].iter().enumerate() {
            let m: MoveLine = serde_json::from_str(line).map_err(|e| syntax(no, e.to_string()))?;
            if m.turn != k + 1 {
                return Err(syntax(no, format!("turn {} out of sequence (expected {})", m.turn, k + 1)));
            }
            let color = parse_color(&m.color)
                .ok_or_else(|| syntax(no, format!("unknown color {:?}", m.color)))?;
            moves.push((m.edge[0], m.edge[1], color));
        }
        let outcome = match footer.outcome.as_str() {
            "BUILDER_WIN" => Outcome::BuilderWin {
                color: footer
                    .color
                    .as_deref()
                    .and_then(parse_color)
                    .ok_or_else(|| syntax(fno, "BUILDER_WIN needs a color".into()))?,
                witness: footer
                    .witness
                    .ok_or_else(|| syntax(fno, "BUILDER_WIN needs a witness triangle".into()))?,
            },
            "BUDGET_EXHAUSTED" => Outcome::BudgetExhausted,
            "BUILDER_ILLEGAL" => Outcome::BuilderIllegal {
                move_index: footer
                    .move_index
                    .ok_or_else(|| syntax(fno, "BUILDER_ILLEGAL needs a move_index".into()))?,
            },
            other => return Err(syntax(fno, format!("unknown outcome {other:?}"))),
        };
        Ok(GameTrace {
            constraint: header.constraint,
            builder: header.builder,
            painter: header.painter,
            moves,
            outcome,
        })
    }

    /// Renders the final board as Graphviz DOT: red and blue edge colors,
    /// the witness triangle (if any) in bold.
    pub fn to_dot(&self) -> String {
        let witness: &[Vertex] = match &self.outcome {
            Outcome::BuilderWin { witness, .. } => witness,
            _ => &[],
        };
        let mut out = String::new();
        let _ = writeln!(out, "graph trace {{");
        let _ = writeln!(out, "  label=\"{}\";", self.outcome);
        let _ = writeln!(out, "  node [shape=circle];");
        for &(u, v, c) in &self.moves {
            if witness.contains(&u) && witness.contains(&v) {
                let _ = writeln!(out, "  {u} -- {v} [color={}, style=bold, penwidth=2];", c.name());
            } else {
                let _ = writeln!(out, "  {u} -- {v} [color={}];", c.name());
            }
        }
        let _ = writeln!(out, "}}");
        out
    }
}

// ===========================================================================
// The game loop
// ===========================================================================

/// Plays one full game from the empty board and returns its trace.
///
/// Each turn: Builder proposes a move; an illegal proposal (or a false win
/// claim) immediately ends the game as [`Outcome::BuilderIllegal`]. A legal
/// edge goes to Painter, whose color is final; the engine then checks for a
/// monochromatic triangle through the new edge and ends the game on a win.
/// Once `max_edges` edges are drawn with no triangle, Painter survives.
///
/// Deterministic policies give a deterministic trace. Painter errors
/// propagate; see [`EngineError::Painter`].
pub fn run_game(
    mut builder: BuilderPolicy,
    painter: PainterPolicy,
    constraint: &Constraint,
    max_edges: usize,
) -> Result<GameTrace, EngineError> {
    if max_edges == 0 {
        return Err(EngineError::ZeroBudget);
    }
    let mut g = ColoredGraph::new();
    let mut moves: Vec<(Vertex, Vertex, Color)> = Vec::new();
    let outcome = loop {
        if moves.len() == max_edges {
            break Outcome::BudgetExhausted;
        }
        match builder.next_move(&g) {
            BuilderMove::ClaimWin => match mono_c3(&g) {
                Some((color, emb)) => {
                    break Outcome::BuilderWin { color, witness: witness_triple(&emb) }
                }
                None => break Outcome::BuilderIllegal { move_index: moves.len() + 1 },
            },
            BuilderMove::Draw(u, v) => {
                if check_move(&g, constraint, u, v).is_err() {
                    break Outcome::BuilderIllegal { move_index: moves.len() + 1 };
                }
                let color = painter.color(&g, (u, v))?;
                g.add_edge(u, v, color).expect("check_move admitted the edge");
                moves.push((u.min(v), u.max(v), color));
                if let Some((c, emb)) = mono_c3_through(&g, u, v) {
                    break Outcome::BuilderWin { color: c, witness: witness_triple(&emb) };
                }
            }
        }
    };
    Ok(GameTrace {
        constraint: constraint.spec_string(),
        builder: builder.name().to_string(),
        painter: painter.name().to_string(),
        moves,
        outcome,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builder::{force_mono_path, strategy1};
    use crate::patterns::catalog;

    fn c(spec: &str) -> Constraint {
        Constraint::parse(spec).expect("test constraint parses")
    }

    #[test]
    fn constraint_spec_strings_round_trip() {
        for (given, canonical) in [
            ("none", "none"),
            ("NONE", "none"),
            ("subgraph-free:X1", "subgraph-free:X1"),
            ("subgraph-free:x1", "subgraph-free:X1"),
            ("minor-free:K4", "minor-free:K4"),
            ("MINOR-FREE:k23", "minor-free:K23"),
            (" minor-free : K4 ", "minor-free:K4"),
        ] {
            let parsed = c(given);
            assert_eq!(parsed.spec_string(), canonical, "from {given:?}");
            assert_eq!(Constraint::parse(&parsed.spec_string()).unwrap(), parsed);
        }
    }

    #[test]
    fn constraint_rejects_unknown_forms() {
        let err = Constraint::parse("minor-free:K5").unwrap_err();
        assert!(matches!(err, EngineError::UnsupportedMinor(_)), "{err}");
        let err = Constraint::parse("subgraph-free:NOPE").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("X1") && msg.contains("K23"), "should list the catalog: {msg}");
        assert!(Constraint::parse("frobnicate").is_err());
        assert!(Constraint::parse("").is_err());
        assert!(Constraint::parse("subgraph-free").is_err());
    }

    #[test]
    fn constraint_from_pattern_file() {
        let dir = tempfile::tempdir().expect("temp dir");
        let path = dir.path().join("house.edges");
        std::fs::write(&path, "# a 4-cycle with a roof\n0 1\n1 2\n2 3\n3 0\n0 4\n1 4\n").unwrap();
        let spec = format!("subgraph-free:{}", path.display());
        let parsed = c(&spec);
        assert_eq!(parsed.spec_string(), spec);
        let c4 = catalog().get("C4").unwrap().to_graph(Color::Red);
        assert!(parsed.in_class(&c4));
        let house = Pattern::parse("house", "0 1\n1 2\n2 3\n3 0\n0 4\n1 4")
            .unwrap()
            .to_graph(Color::Blue);
        assert!(!parsed.in_class(&house));
    }

    #[test]
    fn in_class_dispatches_to_the_right_testers() {
        let x = catalog().get("X").unwrap().to_graph(Color::Red);
        assert!(!c("subgraph-free:X5").in_class(&x));
        let path6 = catalog().get("P6").unwrap().to_graph(Color::Red);
        assert!(c("minor-free:K4").in_class(&path6));
        assert!(c("minor-free:K23").in_class(&path6));
        let k4 = catalog().get("K4").unwrap().to_graph(Color::Blue);
        assert!(!c("minor-free:K4").in_class(&k4));
        assert!(c("none").in_class(&k4));
    }

    /// Grows boards edge by edge and checks that the engine's incremental
    /// class test agrees with a full recheck at every step, for every
    /// constraint kind — exactly the monotonicity contract the engine
    /// relies on.
    #[test]
    fn incremental_permits_agrees_with_full_recheck() {
        let constraints = [
            c("none"),
            c("subgraph-free:C3"),
            c("subgraph-free:K13"),
            c("subgraph-free:C4"),
            c("minor-free:K4"),
            c("minor-free:K23"),
        ];
        let all: Vec<(Vertex, Vertex)> =
            (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
        for mask in 0u32..(1 << all.len()) {
            let mut g = ColoredGraph::new();
            for (i, &(u, v)) in all.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    let color = if i % 2 == 0 { Color::Red } else { Color::Blue };
                    g.add_edge(u, v, color).unwrap();
                }
            }
            for constraint in &constraints {
                if !constraint.in_class(&g) {
                    continue; // the incremental contract assumes a legal prior board
                }
                for &(u, v) in &all {
                    if g.has_edge(u, v) {
                        continue;
                    }
                    let next = g.with_edge(u, v, Color::Red).unwrap();
                    assert_eq!(
                        constraint.permits(&next, (u, v)),
                        constraint.in_class(&next),
                        "constraint {} on {:?} plus {{{u}, {v}}}",
                        constraint.spec_string(),
                        g.edges(),
                    );
                }
            }
        }
    }

    #[test]
    fn run_game_rejects_a_zero_budget() {
        let err = run_game(strategy1(), PainterPolicy::AlwaysRed, &c("none"), 0).unwrap_err();
        assert!(matches!(err, EngineError::ZeroBudget));
    }

    #[test]
    fn star_triangle_beats_always_red_in_six_moves() {
        let trace =
            run_game(strategy1(), PainterPolicy::AlwaysRed, &c("minor-free:K23"), 20).unwrap();
        assert!(trace.outcome().is_builder_win(), "{}", trace.outcome());
        assert_eq!(trace.moves().len(), 6);
        let g = trace.replay().expect("the engine's own trace replays");
        assert!(mono_c3(&g).is_some());
    }

    #[test]
    fn star_triangle_cannot_beat_strategy2_on_x1_free_boards() {
        let trace =
            run_game(strategy1(), PainterPolicy::Strategy2, &c("subgraph-free:X1"), 50).unwrap();
        assert!(!trace.outcome().is_builder_win(), "{}", trace.outcome());
        trace.replay().expect("every prefix stays X1-free");
    }

    #[test]
    fn the_budget_is_counted_in_drawn_edges() {
        let trace = run_game(strategy1(), PainterPolicy::Greedy, &c("none"), 3).unwrap();
        assert_eq!(*trace.outcome(), Outcome::BudgetExhausted);
        assert_eq!(trace.moves().len(), 3);
    }

    #[test]
    fn the_engine_detects_wins_the_moment_they_appear() {
        let trace = run_game(strategy1(), PainterPolicy::Greedy, &c("none"), 20).unwrap();
        let Outcome::BuilderWin { witness, .. } = trace.outcome() else {
            panic!("expected a win, got {}", trace.outcome());
        };
        // Greedy forces the star-triangle worst case: all eight edges.
        assert_eq!(trace.moves().len(), 8);
        let g = trace.replay().unwrap();
        let (_, emb) = mono_c3(&g).unwrap();
        assert_eq!(*witness, witness_triple(&emb));
    }

    #[test]
    fn zero_cycle_painter_errors_outside_its_class_and_is_safe_inside_it() {
        // Unrestricted, the star-triangle line eventually proposes the edge
        // completing a K4, whose coloring the zero-cycle painter refuses.
        let err = run_game(strategy1(), PainterPolicy::ZeroCycle, &c("none"), 20).unwrap_err();
        assert!(
            matches!(err, EngineError::Painter(PainterError::HostNotK4MinorFree)),
            "{err}"
        );
        // Under minor-free:K4 the engine blocks that same edge first.
        let trace =
            run_game(strategy1(), PainterPolicy::ZeroCycle, &c("minor-free:K4"), 20).unwrap();
        assert_eq!(*trace.outcome(), Outcome::BuilderIllegal { move_index: 8 });
        assert_eq!(trace.moves().len(), 7);
        trace.replay().unwrap();
    }

    #[test]
    fn traces_round_trip_through_jsonl() {
        let configs: Vec<(BuilderPolicy, PainterPolicy, Constraint, usize)> = vec![
            (strategy1(), PainterPolicy::AlwaysRed, c("minor-free:K23"), 20),
            (strategy1(), PainterPolicy::Strategy2, c("subgraph-free:X1"), 50),
            (strategy1(), PainterPolicy::Greedy, c("none"), 3),
            (force_mono_path(3), PainterPolicy::AlwaysBlue, c("none"), 12),
        ];
        for (b, p, constraint, budget) in configs {
            let trace = run_game(b, p, &constraint, budget).unwrap();
            let text = trace.to_jsonl();
            assert_eq!(text.lines().count(), trace.moves().len() + 2);
            let back = GameTrace::from_jsonl(&text).unwrap();
            assert_eq!(back, trace);
            assert_eq!(back.replay().unwrap().edge_set(), trace.replay().unwrap().edge_set());
        }
    }

    #[test]
    fn replay_rejects_inconsistent_traces() {
        let cons = c("none");
        let triangle = vec![(0, 1, Color::Red), (0, 2, Color::Red), (1, 2, Color::Red)];
        // A triangle the footer does not account for.
        let t = GameTrace::from_parts(&cons, "x", "x", triangle.clone(), Outcome::BudgetExhausted);
        assert!(matches!(t.replay(), Err(EngineError::Replay(_))));
        // The right outcome but the wrong witness.
        let t = GameTrace::from_parts(
            &cons,
            "x",
            "x",
            triangle.clone(),
            Outcome::BuilderWin { color: Color::Red, witness: [0, 1, 3] },
        );
        assert!(matches!(t.replay(), Err(EngineError::Replay(_))));
        // The honest version passes.
        let t = GameTrace::from_parts(
            &cons,
            "x",
            "x",
            triangle,
            Outcome::BuilderWin { color: Color::Red, witness: [0, 1, 2] },
        );
        assert!(t.replay().is_ok());
        // A duplicate edge.
        let t = GameTrace::from_parts(
            &cons,
            "x",
            "x",
            vec![(0, 1, Color::Red), (1, 0, Color::Blue)],
            Outcome::BudgetExhausted,
        );
        assert!(matches!(t.replay(), Err(EngineError::Replay(_))));
        // A prefix leaving the class.
        let t = GameTrace::from_parts(
            &c("subgraph-free:P3"),
            "x",
            "x",
            vec![(0, 1, Color::Red), (1, 2, Color::Blue)],
            Outcome::BudgetExhausted,
        );
        assert!(matches!(t.replay(), Err(EngineError::Replay(_))));
        // A win claimed with no triangle on the board.
        let t = GameTrace::from_parts(
            &cons,
            "x",
            "x",
            vec![(0, 1, Color::Red)],
            Outcome::BuilderWin { color: Color::Red, witness: [0, 1, 2] },
        );
        assert!(matches!(t.replay(), Err(EngineError::Replay(_))));
        // An illegal-move index that does not point past the last move.
        let t = GameTrace::from_parts(
            &cons,
            "x",
            "x",
            vec![(0, 1, Color::Red)],
            Outcome::BuilderIllegal { move_index: 1 },
        );
        assert!(matches!(t.replay(), Err(EngineError::Replay(_))));
    }

    #[test]
    fn jsonl_decoding_reports_syntax_problems() {
        assert!(matches!(GameTrace::from_jsonl(""), Err(EngineError::TraceSyntax { .. })));
        assert!(matches!(GameTrace::from_jsonl("{}"), Err(EngineError::TraceSyntax { .. })));
        let good =
            run_game(strategy1(), PainterPolicy::AlwaysRed, &c("none"), 20).unwrap().to_jsonl();
        assert!(good.contains("\"witness\":[0,1,2]"), "{good}");
        let tampered = good.replace("\"turn\":2", "\"turn\":7");
        assert!(matches!(GameTrace::from_jsonl(&tampered), Err(EngineError::TraceSyntax { .. })));
        let tampered = good.replace("\"color\":\"red\"", "\"color\":\"green\"");
        assert!(matches!(GameTrace::from_jsonl(&tampered), Err(EngineError::TraceSyntax { .. })));
        let tampered = good.replace(",\"witness\":[0,1,2]", "");
        assert!(matches!(GameTrace::from_jsonl(&tampered), Err(EngineError::TraceSyntax { .. })));
    }

    #[test]
    fn dot_export_bolds_exactly_the_witness_triangle() {
        let trace = run_game(strategy1(), PainterPolicy::Greedy, &c("none"), 20).unwrap();
        let dot = trace.to_dot();
        assert!(dot.starts_with("graph trace {"), "{dot}");
        assert_eq!(dot.matches("style=bold").count(), 3, "{dot}");
        assert_eq!(dot.matches(" -- ").count(), trace.moves().len());
        assert!(dot.contains("color=red") && dot.contains("color=blue"), "{dot}");
    }

    #[test]
    fn a_first_move_forfeit_leaves_an_empty_move_list() {
        // Under subgraph-free:P2 any first edge is already a forbidden copy.
        let trace =
            run_game(strategy1(), PainterPolicy::AlwaysRed, &c("subgraph-free:P2"), 5).unwrap();
        assert_eq!(*trace.outcome(), Outcome::BuilderIllegal { move_index: 1 });
        assert!(trace.moves().is_empty());
        let text = trace.to_jsonl();
        assert_eq!(text.lines().count(), 2);
        let back = GameTrace::from_jsonl(&text).unwrap();
        assert_eq!(back, trace);
        assert_eq!(back.replay().unwrap().edge_count(), 0);
    }

    #[test]
    fn rejected_moves_come_with_explanations() {
        let cons = c("subgraph-free:C3");
        let mut g = ColoredGraph::new();
        g.add_edge(0, 1, Color::Red).unwrap();
        g.add_edge(0, 2, Color::Blue).unwrap();
        assert_eq!(check_move(&g, &cons, 3, 3).unwrap_err(), "{3, 3} is a loop, not an edge");
        assert_eq!(check_move(&g, &cons, 1, 0).unwrap_err(), "{1, 0} is already on the board");
        let msg = check_move(&g, &cons, 1, 2).unwrap_err();
        assert!(msg.contains("C3"), "{msg}");
        assert!(check_move(&g, &cons, 2, 3).is_ok());
        let mut near_k4 = ColoredGraph::new();
        for (u, v) in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)] {
            near_k4.add_edge(u, v, Color::Red).unwrap();
        }
        let msg = check_move(&near_k4, &c("minor-free:K4"), 2, 3).unwrap_err();
        assert!(msg.contains("K4 minor"), "{msg}");
    }
}
