//! Command-line front end: play matches between named policies, verify a
//! policy exhaustively, run the exact solver, classify forbidden graphs,
//! replay and export recorded traces, and play one side interactively.
//!
//! Everything routes through [`execute`], which takes the argument list and
//! explicit input/output streams so the whole surface is drivable from
//! tests. Exit codes are stable across subcommands: [`EXIT_OK`] for an
//! expected-good verdict, [`EXIT_COUNTEREXAMPLE`] when a run produced
//! evidence against a policy (which is always also written as a replayable
//! trace), and [`EXIT_USAGE`] for malformed invocations.

use std::ffi::OsString;
use std::fs;
use std::io::{self, BufRead, Write};
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use crate::builder::{BuilderMove, BuilderPolicy};
use crate::engine::{check_move, run_game, witness_triple, Constraint, GameTrace, Outcome};
use crate::graph::{Color, ColoredGraph, Vertex};
use crate::painter::PainterPolicy;
use crate::patterns::{
    classify_forbidden_graph, mono_c3, mono_c3_through, try_catalog, Classification, Pattern,
};
use crate::solver::{
    solve_with, verify_builder, verify_painter, BuilderVerdict, PainterVerdict, SolveOptions,
    TranspositionTable,
};

// ===========================================================================
// Exit codes and errors
// ===========================================================================

/// The run produced the expected-good verdict (a finished game, a surviving
/// painter, a winning builder, a solver verdict, a classification).
pub const EXIT_OK: i32 = 0;
/// The run found a counterexample: a lost game line, a failing policy
/// branch, or an illegal builder move.
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
/// The invocation itself was invalid: unknown names, unparsable specs,
/// missing flags, unreadable files.
pub const EXIT_USAGE: i32 = 2;

/// An error that aborts a subcommand: a message plus the exit code it maps
/// to. Internal to the front end; [`execute`] prints it and returns.
struct CliError {
    code: i32,
    msg: String,
}

/// A usage-level failure ([`EXIT_USAGE`]).
fn usage(msg: impl Into<String>) -> CliError {
    CliError { code: EXIT_USAGE, msg: msg.into() }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError { code: EXIT_COUNTEREXAMPLE, msg: format!("i/o failure: {e}") }
    }
}

// ===========================================================================
// Argument grammar
// ===========================================================================

#[derive(Parser)]
#[command(
    name = "ramsey",
    version,
    about = "Online Ramsey game for the triangle on restricted host-graph classes",
    after_help = "Constraints follow the grammar `none | subgraph-free:<name-or-file> | \
                  minor-free:K4 | minor-free:K23`. Pattern names resolve against the \
                  built-in catalog, or against edge-list files in the directory named \
                  by RAMSEY_CATALOG_DIR if set; any argument that is not a catalog \
                  name is tried as an edge-list file path."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Play one game between named policies, or replay a recorded trace
    Play(PlayArgs),
    /// Exhaustively verify one painter or one builder policy
    Verify(VerifyArgs),
    /// Solve the bounded game exactly by exhaustive search
    Solve(SolveArgs),
    /// Classify a forbidden graph: PAINTER, BUILDER, or OPEN
    Classify(ClassifyArgs),
    /// Play one side of a game interactively at a text prompt
    Repl(ReplArgs),
}

#[derive(Args)]
struct PlayArgs {
    /// Builder policy (star-triangle, k4free, k15free, yfree, mono-path:<k>)
    #[arg(long, required_unless_present = "replay", conflicts_with = "replay")]
    builder: Option<String>,
    /// Painter policy (strategy2, strategy3, strategy4, zero-cycle, always-red, always-blue, greedy)
    #[arg(long, required_unless_present = "replay", conflicts_with = "replay")]
    painter: Option<String>,
    /// Host-class constraint spec
    #[arg(long, required_unless_present = "replay", conflicts_with = "replay")]
    constraint: Option<String>,
    /// Edge budget before the game is called off
    #[arg(long, default_value_t = 30)]
    max_edges: usize,
    /// Write the finished game as a JSONL trace
    #[arg(long)]
    trace: Option<PathBuf>,
    /// Write the final board in DOT format
    #[arg(long)]
    dot: Option<PathBuf>,
    /// Replay a recorded JSONL trace instead of playing
    #[arg(long)]
    replay: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Painter policy to test against every builder line within the bounds
    #[arg(long, conflicts_with = "builder")]
    painter: Option<String>,
    /// Builder policy to test against every painter reply sequence
    #[arg(long)]
    builder: Option<String>,
    /// Host-class constraint spec
    #[arg(long)]
    constraint: String,
    /// Vertex bound for painter verification
    #[arg(long)]
    max_vertices: Option<usize>,
    /// Edge bound for painter verification
    #[arg(long)]
    max_edges: Option<usize>,
    /// Write a counterexample trace here instead of printing it
    #[arg(long)]
    trace: Option<PathBuf>,
}

#[derive(Args)]
struct SolveArgs {
    /// Host-class constraint spec
    #[arg(long)]
    constraint: String,
    /// Most non-isolated vertices any board may use
    #[arg(long)]
    max_vertices: usize,
    /// Edge budget
    #[arg(long)]
    max_edges: usize,
    /// Worker threads (0 and 1 both mean single-threaded)
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Transposition table file: loaded if present, saved back after
    #[arg(long)]
    tt: Option<PathBuf>,
    /// Write the principal variation as a JSONL trace
    #[arg(long)]
    trace: Option<PathBuf>,
    /// Write the principal variation's final board in DOT format
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Forbidden graph: a catalog name or an edge-list file
    #[arg(long)]
    pattern: String,
}

#[derive(Args)]
struct ReplArgs {
    /// Automated painter (you play Builder)
    #[arg(long, conflicts_with = "builder")]
    painter: Option<String>,
    /// Automated builder (you play Painter)
    #[arg(long)]
    builder: Option<String>,
    /// Host-class constraint spec
    #[arg(long)]
    constraint: String,
    /// Edge budget for the session
    #[arg(long, default_value_t = 30)]
    max_edges: usize,
    /// Write the session transcript as a JSONL trace on exit
    #[arg(long)]
    trace: Option<PathBuf>,
}

// ===========================================================================
// Entry point
// ===========================================================================

/// Runs one invocation of the front end and returns its exit code.
///
/// `args` is the argument list *without* a leading program name; `input`
/// feeds the REPL; all output (help, errors, reports, prompts) goes to
/// `out`. The binary passes locked stdin/stdout, tests pass buffers.
pub fn execute<I, T>(args: I, input: &mut dyn BufRead, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv = std::iter::once(OsString::from("ramsey")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = write!(out, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        Command::Play(args) => cmd_play(args, out),
        Command::Verify(args) => cmd_verify(args, out),
        Command::Solve(args) => cmd_solve(args, out),
        Command::Classify(args) => cmd_classify(args, out),
        Command::Repl(args) => cmd_repl(args, input, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(out, "error: {}", e.msg);
            e.code
        }
    }
}

// ===========================================================================
// Shared lookup and rendering helpers
// ===========================================================================

/// Resolves a builder policy name or rejects it with the roster.
fn builder_by_name(name: &str) -> Result<BuilderPolicy, CliError> {
    BuilderPolicy::by_name(name).ok_or_else(|| {
        usage(format!(
            "unknown builder policy {name:?}; available: {}, mono-path:<k>",
            BuilderPolicy::NAMED.join(", ")
        ))
    })
}

/// Resolves a painter policy name or rejects it with the roster.
fn painter_by_name(name: &str) -> Result<PainterPolicy, CliError> {
    PainterPolicy::by_name(name).ok_or_else(|| {
        let roster: Vec<&str> = PainterPolicy::ALL.iter().map(|p| p.name()).collect();
        usage(format!("unknown painter policy {name:?}; available: {}", roster.join(", ")))
    })
}

/// Parses a constraint spec or rejects it with the parser's explanation.
fn constraint_from(spec: &str) -> Result<Constraint, CliError> {
    Constraint::parse(spec).map_err(|e| usage(e.to_string()))
}

/// Resolves a pattern argument: catalog name first, then edge-list file.
fn resolve_pattern(arg: &str) -> Result<Pattern, CliError> {
    let catalog = try_catalog().map_err(|e| usage(e.to_string()))?;
    if let Some(p) = catalog.get(arg) {
        return Ok(p.clone());
    }
    match fs::read_to_string(arg) {
        Ok(text) => Pattern::parse(arg, &text).map_err(|e| usage(e.to_string())),
        Err(_) => Err(usage(format!(
            "unknown pattern {arg:?} (not a catalog name, not a readable file); catalog: {}",
            catalog.names().collect::<Vec<_>>().join(", ")
        ))),
    }
}

/// `1 edge`, `2 edges`: counted nouns for report lines.
fn counted(n: usize, noun: &str) -> String {
    if n == 1 {
        return format!("1 {noun}");
    }
    match noun {
        "vertex" => format!("{n} vertices"),
        "entry" => format!("{n} entries"),
        _ => format!("{n} {noun}s"),
    }
}

/// One-line outcome summary: tag, move count, and the witness if any.
fn outcome_line(outcome: &Outcome, moves_played: usize) -> String {
    let moves = counted(moves_played, "move");
    match outcome {
        Outcome::BuilderWin { color, witness: [a, b, c] } => {
            format!("BUILDER_WIN in {moves} ({} triangle {{{a}, {b}, {c}}})", color.name())
        }
        Outcome::BudgetExhausted => {
            format!("BUDGET_EXHAUSTED after {moves} (no monochromatic triangle)")
        }
        Outcome::BuilderIllegal { move_index } => {
            format!("BUILDER_ILLEGAL at move {move_index} ({moves} legally played)")
        }
    }
}

/// The exit code a finished game maps to: an illegal builder move is a
/// counterexample, the other outcomes are ordinary results.
fn outcome_code(outcome: &Outcome) -> i32 {
    match outcome {
        Outcome::BuilderIllegal { .. } => EXIT_COUNTEREXAMPLE,
        _ => EXIT_OK,
    }
}

/// The final board as indented `{u, v} color` lines in ascending order.
fn board_lines(g: &ColoredGraph) -> String {
    let mut edges = g.edges().to_vec();
    edges.sort_by_key(|&(u, v, _)| (u, v));
    let mut text = format!(
        "final board: {}, {}",
        counted(g.vertex_count(), "vertex"),
        counted(g.edge_count(), "edge")
    );
    for (u, v, c) in edges {
        text.push_str(&format!("\n  {{{u}, {v}}} {}", c.name()));
    }
    text
}

/// A trace's moves as numbered `  i. {u, v} color` lines.
fn move_lines(trace: &GameTrace) -> String {
    trace
        .moves()
        .iter()
        .enumerate()
        .map(|(i, (u, v, c))| format!("  {}. {{{u}, {v}}} {}", i + 1, c.name()))
        .collect::<Vec<_>>()
        .join("\n")
}

/// A trace's moves on one line: `{0, 1} red; {0, 2} blue; …`.
fn inline_moves(trace: &GameTrace) -> String {
    trace
        .moves()
        .iter()
        .map(|(u, v, c)| format!("{{{u}, {v}}} {}", c.name()))
        .collect::<Vec<_>>()
        .join("; ")
}

/// Writes `text` to `path`, reporting the destination on `out`.
fn write_file(path: &Path, text: &str, what: &str, out: &mut dyn Write) -> Result<(), CliError> {
    fs::write(path, text)
        .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
    writeln!(out, "{what} written to {}", path.display())?;
    Ok(())
}

/// Publishes a counterexample trace: to the named file when given, inline
/// as JSONL otherwise, so every counterexample is replayable either way.
fn emit_counterexample(
    trace: &GameTrace,
    dest: Option<&PathBuf>,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    match dest {
        Some(path) => write_file(path, &trace.to_jsonl(), "counterexample trace", out),
        None => {
            writeln!(out, "counterexample trace (JSONL):")?;
            write!(out, "{}", trace.to_jsonl())?;
            Ok(())
        }
    }
}

// ===========================================================================
// play
// ===========================================================================

fn cmd_play(args: PlayArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    if let Some(path) = &args.replay {
        return cmd_replay(path, &args, out);
    }
    // clap guarantees the trio is present when --replay is absent.
    let builder = builder_by_name(args.builder.as_deref().expect("required by clap"))?;
    let painter = painter_by_name(args.painter.as_deref().expect("required by clap"))?;
    let constraint = constraint_from(args.constraint.as_deref().expect("required by clap"))?;

    let trace = run_game(builder, painter, &constraint, args.max_edges)
        .map_err(|e| usage(e.to_string()))?;
    let board = trace.replay().expect("a trace fresh from the engine replays");

    writeln!(out, "{}", outcome_line(trace.outcome(), trace.moves().len()))?;
    writeln!(out, "{}", board_lines(&board))?;
    if let Some(path) = &args.trace {
        write_file(path, &trace.to_jsonl(), "trace", out)?;
    }
    if let Some(path) = &args.dot {
        write_file(path, &trace.to_dot(), "dot", out)?;
    }
    Ok(outcome_code(trace.outcome()))
}

/// `play --replay`: validate a recorded trace and reproduce its outcome and
/// final board. `--trace` re-serializes (canonical form is byte-stable),
/// `--dot` exports the board.
fn cmd_replay(path: &Path, args: &PlayArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let trace = GameTrace::from_jsonl(&text).map_err(|e| usage(e.to_string()))?;
    let board = trace.replay().map_err(|e| CliError {
        code: EXIT_COUNTEREXAMPLE,
        msg: format!("replay of {} failed: {e}", path.display()),
    })?;

    writeln!(
        out,
        "replayed {} under {} ({} vs {})",
        counted(trace.moves().len(), "move"),
        trace.constraint_spec(),
        trace.builder_name(),
        trace.painter_name()
    )?;
    writeln!(out, "{}", outcome_line(trace.outcome(), trace.moves().len()))?;
    writeln!(out, "{}", board_lines(&board))?;
    if let Some(dest) = &args.trace {
        write_file(dest, &trace.to_jsonl(), "trace", out)?;
    }
    if let Some(dest) = &args.dot {
        write_file(dest, &trace.to_dot(), "dot", out)?;
    }
    Ok(outcome_code(trace.outcome()))
}

// ===========================================================================
// verify
// ===========================================================================

fn cmd_verify(args: VerifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let constraint = constraint_from(&args.constraint)?;
    match (&args.painter, &args.builder) {
        (Some(painter), None) => verify_painter_cmd(painter, &constraint, &args, out),
        (None, Some(builder)) => verify_builder_cmd(builder, &constraint, &args, out),
        (None, None) => Err(usage("choose exactly one of --painter or --builder")),
        (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
    }
}

fn verify_painter_cmd(
    name: &str,
    constraint: &Constraint,
    args: &VerifyArgs,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let painter = painter_by_name(name)?;
    let max_vertices = args
        .max_vertices
        .ok_or_else(|| usage("--max-vertices is required when verifying a painter"))?;
    let max_edges = args
        .max_edges
        .ok_or_else(|| usage("--max-edges is required when verifying a painter"))?;

    writeln!(
        out,
        "verifying painter {} on {constraint}: every builder line within \
         {max_vertices} vertices and {max_edges} edges",
        painter.name()
    )?;
    let verdict = verify_painter(painter, constraint, max_vertices, max_edges)
        .map_err(|e| usage(e.to_string()))?;
    match verdict {
        PainterVerdict::Survives => {
            writeln!(out, "SURVIVES: no line within the bounds forces a monochromatic triangle")?;
            Ok(EXIT_OK)
        }
        PainterVerdict::Loses(trace) => {
            writeln!(out, "LOSES in {}:", counted(trace.moves().len(), "move"))?;
            writeln!(out, "{}", move_lines(&trace))?;
            writeln!(out, "{}", outcome_line(trace.outcome(), trace.moves().len()))?;
            emit_counterexample(&trace, args.trace.as_ref(), out)?;
            Ok(EXIT_COUNTEREXAMPLE)
        }
        PainterVerdict::InvariantViolated { trace, reason } => {
            writeln!(out, "INVARIANT VIOLATED: {reason}")?;
            writeln!(out, "{}", move_lines(&trace))?;
            emit_counterexample(&trace, args.trace.as_ref(), out)?;
            Ok(EXIT_COUNTEREXAMPLE)
        }
    }
}

fn verify_builder_cmd(
    name: &str,
    constraint: &Constraint,
    args: &VerifyArgs,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    if args.max_vertices.is_some() || args.max_edges.is_some() {
        return Err(usage(
            "--max-vertices/--max-edges apply only to painter verification; \
             builder verification explores every reply to the policy's own moves",
        ));
    }
    let builder = builder_by_name(name)?;
    writeln!(
        out,
        "verifying builder {} on {constraint} against every painter reply sequence",
        builder.name()
    )?;
    match verify_builder(&builder, constraint) {
        BuilderVerdict::Wins { worst_case_edges, branches } => {
            writeln!(
                out,
                "wins all branches, worst case {} ({} reply branches)",
                counted(worst_case_edges, "edge"),
                branches
            )?;
            Ok(EXIT_OK)
        }
        BuilderVerdict::Fails { trace, reason } => {
            writeln!(out, "FAILS: {reason}")?;
            if !trace.moves().is_empty() {
                writeln!(out, "{}", move_lines(&trace))?;
            }
            emit_counterexample(&trace, args.trace.as_ref(), out)?;
            Ok(EXIT_COUNTEREXAMPLE)
        }
    }
}

// ===========================================================================
// solve
// ===========================================================================

fn cmd_solve(args: SolveArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let constraint = constraint_from(&args.constraint)?;
    let options = SolveOptions {
        max_vertices: args.max_vertices,
        max_edges: args.max_edges,
        jobs: args.jobs,
    };

    let mut table = match &args.tt {
        Some(path) if path.exists() => {
            let t = TranspositionTable::load(path).map_err(|e| usage(e.to_string()))?;
            writeln!(out, "table loaded from {} ({})", path.display(), counted(t.len(), "entry"))?;
            Some(t)
        }
        Some(_) => Some(TranspositionTable::new()),
        None => None,
    };

    writeln!(
        out,
        "solving {constraint} within {} vertices and {} edges",
        options.max_vertices, options.max_edges
    )?;
    let result = solve_with(&constraint, &options, table.as_mut())
        .map_err(|e| usage(e.to_string()))?;

    writeln!(out, "{}", result.verdict)?;
    writeln!(out, "principal variation: {}", inline_moves(&result.principal_variation))?;
    if let Some(tree) = &result.certificate {
        writeln!(out, "certificate: complete strategy tree, {}", counted(tree.size(), "node"))?;
    }
    writeln!(
        out,
        "explored {} ({} transposition hits)",
        counted(result.stats.nodes as usize, "position"),
        result.stats.tt_hits
    )?;

    if let (Some(path), Some(t)) = (&args.tt, &table) {
        t.save(path).map_err(|e| usage(e.to_string()))?;
        writeln!(out, "table saved to {} ({})", path.display(), counted(t.len(), "entry"))?;
    }
    if let Some(path) = &args.trace {
        write_file(path, &result.principal_variation.to_jsonl(), "trace", out)?;
    }
    if let Some(path) = &args.dot {
        write_file(path, &result.principal_variation.to_dot(), "dot", out)?;
    }
    Ok(EXIT_OK)
}

// ===========================================================================
// classify
// ===========================================================================

fn cmd_classify(args: ClassifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let pattern = resolve_pattern(&args.pattern)?;
    match classify_forbidden_graph(&pattern) {
        Classification::Painter { index, embedding } => {
            let map = embedding
                .as_slice()
                .iter()
                .enumerate()
                .map(|(pv, hv)| format!("{pv}->{hv}"))
                .collect::<Vec<_>>()
                .join(", ");
            writeln!(
                out,
                "PAINTER: {} embeds into X{index} (pattern vertex -> host vertex: {map})",
                pattern.name()
            )?;
        }
        Classification::Builder => {
            writeln!(
                out,
                "BUILDER: {} embeds into none of X1, X2, X3, X4 and is not isomorphic to X5",
                pattern.name()
            )?;
        }
        Classification::Open => {
            writeln!(out, "OPEN: {} is isomorphic to X5, the one unresolved case", pattern.name())?;
        }
    }
    Ok(EXIT_OK)
}

// ===========================================================================
// repl
// ===========================================================================

/// The automated side of an interactive session.
enum Automated {
    /// The human builds; this policy colors.
    Painter(PainterPolicy),
    /// This policy builds; the human colors.
    Builder(BuilderPolicy),
}

/// What one line of input produced: text to print and, once the session is
/// over, the process exit code.
pub struct ReplReply {
    /// Printable response (no trailing newline; may span lines).
    pub text: String,
    /// `Some(code)` ends the session.
    pub exit: Option<i32>,
}

impl ReplReply {
    fn cont(text: impl Into<String>) -> ReplReply {
        ReplReply { text: text.into(), exit: None }
    }

    fn fin(text: impl Into<String>, code: i32) -> ReplReply {
        ReplReply { text: text.into(), exit: Some(code) }
    }
}

/// An interactive game with one automated side, driven line by line.
///
/// The grammar is `draw <u> <v>` (human Builder), `color red|blue` (human
/// Painter), `show`, and `quit`. Malformed or out-of-turn input produces an
/// explanation and changes nothing. [`ReplSession::transcript`] is a valid
/// [`GameTrace`] at every point, so a session can always be saved and
/// replayed.
pub struct ReplSession {
    constraint: Constraint,
    auto: Automated,
    board: ColoredGraph,
    moves: Vec<(Vertex, Vertex, Color)>,
    max_edges: usize,
    /// Human-Painter mode: the builder's proposed edge awaiting a color.
    pending: Option<(Vertex, Vertex)>,
    /// Set once the game itself has ended (not by quitting).
    outcome: Option<Outcome>,
}

impl ReplSession {
    /// Opens a session with the human as Builder against `painter`.
    pub fn human_builder(
        painter: PainterPolicy,
        constraint: Constraint,
        max_edges: usize,
    ) -> Result<(ReplSession, ReplReply), String> {
        ReplSession::start(Automated::Painter(painter), constraint, max_edges)
    }

    /// Opens a session with the human as Painter against `builder`.
    pub fn human_painter(
        builder: BuilderPolicy,
        constraint: Constraint,
        max_edges: usize,
    ) -> Result<(ReplSession, ReplReply), String> {
        ReplSession::start(Automated::Builder(builder), constraint, max_edges)
    }

    fn start(
        auto: Automated,
        constraint: Constraint,
        max_edges: usize,
    ) -> Result<(ReplSession, ReplReply), String> {
        if max_edges == 0 {
            return Err("the edge budget must be positive".into());
        }
        let mut session = ReplSession {
            constraint,
            auto,
            board: ColoredGraph::new(),
            moves: Vec::new(),
            max_edges,
            pending: None,
            outcome: None,
        };
        let mut text = match &session.auto {
            Automated::Painter(p) => format!(
                "online Ramsey game: you are Builder, {} is Painter\n\
                 class: {}, budget: {} edges\n\
                 commands: draw <u> <v> | show | quit",
                p.name(),
                session.constraint,
                max_edges
            ),
            Automated::Builder(b) => format!(
                "online Ramsey game: {} is Builder, you are Painter\n\
                 class: {}, budget: {} edges\n\
                 commands: color red | color blue | show | quit",
                b.name(),
                session.constraint,
                max_edges
            ),
        };
        let mut exit = None;
        if matches!(session.auto, Automated::Builder(_)) {
            let (proposal, code) = session.propose_next();
            text.push('\n');
            text.push_str(&proposal);
            exit = code;
        }
        Ok((session, ReplReply { text, exit }))
    }

    /// The prompt naming the human's role.
    pub fn prompt(&self) -> &'static str {
        match self.auto {
            Automated::Painter(_) => "builder> ",
            Automated::Builder(_) => "painter> ",
        }
    }

    /// The session so far as a replayable trace. A session that ended by
    /// quitting (or has not ended) records a budget-exhausted game over the
    /// moves played.
    pub fn transcript(&self) -> GameTrace {
        let (builder, painter) = match &self.auto {
            Automated::Painter(p) => ("human", p.name()),
            Automated::Builder(b) => (b.name(), "human"),
        };
        let outcome = self.outcome.clone().unwrap_or(Outcome::BudgetExhausted);
        GameTrace::from_parts(&self.constraint, builder, painter, self.moves.clone(), outcome)
    }

    /// Processes one line of input.
    pub fn feed(&mut self, line: &str) -> ReplReply {
        if let Some(outcome) = &self.outcome {
            return ReplReply::fin(
                format!("the game is over: {}", outcome_line(outcome, self.moves.len())),
                outcome_code(outcome),
            );
        }
        let mut words = line.split_whitespace();
        match words.next() {
            None => ReplReply::cont(""),
            Some("quit") => ReplReply::fin("session closed", EXIT_OK),
            Some("show") => ReplReply::cont(self.board_text()),
            Some("draw") => self.cmd_draw(&mut words),
            Some("color") => self.cmd_color(&mut words),
            Some(other) => {
                ReplReply::cont(format!("unknown command {other:?}\n{}", self.help_line()))
            }
        }
    }

    fn help_line(&self) -> &'static str {
        match self.auto {
            Automated::Painter(_) => "commands: draw <u> <v> | show | quit",
            Automated::Builder(_) => "commands: color red | color blue | show | quit",
        }
    }

    fn board_text(&self) -> String {
        let mut text = format!(
            "board: {}, {} ({}/{} budget used)",
            counted(self.board.vertex_count(), "vertex"),
            counted(self.board.edge_count(), "edge"),
            self.moves.len(),
            self.max_edges
        );
        let mut edges = self.board.edges().to_vec();
        edges.sort_by_key(|&(u, v, _)| (u, v));
        for (u, v, c) in edges {
            text.push_str(&format!("\n  {{{u}, {v}}} {}", c.name()));
        }
        if let Some((u, v)) = self.pending {
            text.push_str(&format!("\n  {{{u}, {v}}} awaiting your color"));
        }
        text
    }

    /// Human Builder: `draw u v`, colored immediately by the painter.
    fn cmd_draw(&mut self, words: &mut std::str::SplitWhitespace<'_>) -> ReplReply {
        let Automated::Painter(painter) = &self.auto else {
            return ReplReply::cont(
                "you are Painter in this session; the builder proposes, you color",
            );
        };
        let painter = *painter;
        let (u, v) = match (words.next(), words.next(), words.next()) {
            (Some(a), Some(b), None) => match (a.parse::<Vertex>(), b.parse::<Vertex>()) {
                (Ok(u), Ok(v)) => (u, v),
                _ => return ReplReply::cont("usage: draw <u> <v> (nonnegative integers)"),
            },
            _ => return ReplReply::cont("usage: draw <u> <v>"),
        };
        if let Err(reason) = check_move(&self.board, &self.constraint, u, v) {
            return ReplReply::cont(format!("illegal: {reason}"));
        }
        let color = match painter.color(&self.board, (u, v)) {
            Ok(c) => c,
            Err(e) => {
                return ReplReply::fin(
                    format!("painter error: {e} (pick a constraint that keeps the painter in its class)"),
                    EXIT_USAGE,
                )
            }
        };
        self.board.add_edge(u, v, color).expect("check_move admitted the edge");
        self.moves.push((u.min(v), u.max(v), color));
        let text = format!("painter colors {{{u}, {v}}} {}", color.name());
        self.after_edge(text, u, v, "you win")
    }

    /// Human Painter: `color red|blue` applied to the pending proposal.
    fn cmd_color(&mut self, words: &mut std::str::SplitWhitespace<'_>) -> ReplReply {
        if matches!(self.auto, Automated::Painter(_)) {
            return ReplReply::cont("you are Builder in this session; draw edges with draw <u> <v>");
        }
        let color = match (words.next(), words.next()) {
            (Some("red"), None) => Color::Red,
            (Some("blue"), None) => Color::Blue,
            _ => return ReplReply::cont("usage: color red | color blue"),
        };
        let Some((u, v)) = self.pending.take() else {
            return ReplReply::cont("no edge is awaiting a color");
        };
        self.board.add_edge(u, v, color).expect("proposals are checked before they pend");
        self.moves.push((u.min(v), u.max(v), color));
        let text = format!("you color {{{u}, {v}}} {}", color.name());
        let reply = self.after_edge(text, u, v, "the builder wins");
        if reply.exit.is_some() {
            return reply;
        }
        // The game goes on: the automated builder moves immediately.
        let (proposal, exit) = self.propose_next();
        ReplReply { text: format!("{}\n{proposal}", reply.text), exit }
    }

    /// Post-move bookkeeping shared by both sides: detect the win through
    /// the new edge, then the exhausted budget.
    fn after_edge(&mut self, text: String, u: Vertex, v: Vertex, winner: &str) -> ReplReply {
        if let Some((color, emb)) = mono_c3_through(&self.board, u, v) {
            let outcome = Outcome::BuilderWin { color, witness: witness_triple(&emb) };
            let line = outcome_line(&outcome, self.moves.len());
            let code = outcome_code(&outcome);
            self.outcome = Some(outcome);
            return ReplReply::fin(format!("{text}\n{line} — {winner}"), code);
        }
        if self.moves.len() == self.max_edges {
            self.outcome = Some(Outcome::BudgetExhausted);
            let line = outcome_line(&Outcome::BudgetExhausted, self.moves.len());
            return ReplReply::fin(format!("{text}\n{line} — Painter survives"), EXIT_OK);
        }
        ReplReply::cont(text)
    }

    /// Asks the automated builder for its next move; a legal edge becomes
    /// the pending proposal, anything else forfeits the game.
    fn propose_next(&mut self) -> (String, Option<i32>) {
        let Automated::Builder(builder) = &mut self.auto else {
            unreachable!("only human-Painter sessions propose");
        };
        match builder.next_move(&self.board) {
            BuilderMove::ClaimWin => match mono_c3(&self.board) {
                Some((color, emb)) => {
                    // Defensive: wins are normally caught at the closing edge.
                    let outcome =
                        Outcome::BuilderWin { color, witness: witness_triple(&emb) };
                    let line = outcome_line(&outcome, self.moves.len());
                    self.outcome = Some(outcome);
                    (format!("{line} — the builder wins"), Some(EXIT_OK))
                }
                None => {
                    let outcome = Outcome::BuilderIllegal { move_index: self.moves.len() + 1 };
                    let line = outcome_line(&outcome, self.moves.len());
                    self.outcome = Some(outcome);
                    (
                        format!(
                            "the builder claims a win, but the board shows no monochromatic \
                             triangle\n{line} — the builder forfeits"
                        ),
                        Some(EXIT_COUNTEREXAMPLE),
                    )
                }
            },
            BuilderMove::Draw(u, v) => match check_move(&self.board, &self.constraint, u, v) {
                Ok(()) => {
                    self.pending = Some((u, v));
                    (format!("builder proposes {{{u}, {v}}}: color red | color blue"), None)
                }
                Err(reason) => {
                    let outcome = Outcome::BuilderIllegal { move_index: self.moves.len() + 1 };
                    let line = outcome_line(&outcome, self.moves.len());
                    self.outcome = Some(outcome);
                    (
                        format!(
                            "the builder proposes {{{u}, {v}}}: {reason}\n\
                             {line} — the builder forfeits"
                        ),
                        Some(EXIT_COUNTEREXAMPLE),
                    )
                }
            },
        }
    }
}

fn cmd_repl(args: ReplArgs, input: &mut dyn BufRead, out: &mut dyn Write) -> Result<i32, CliError> {
    let constraint = constraint_from(&args.constraint)?;
    let started = match (&args.painter, &args.builder) {
        (Some(p), None) => {
            ReplSession::human_builder(painter_by_name(p)?, constraint, args.max_edges)
        }
        (None, Some(b)) => {
            ReplSession::human_painter(builder_by_name(b)?, constraint, args.max_edges)
        }
        (None, None) => return Err(usage("choose exactly one of --painter or --builder")),
        (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
    };
    let (mut session, mut reply) = started.map_err(usage)?;

    let code = loop {
        if !reply.text.is_empty() {
            writeln!(out, "{}", reply.text)?;
        }
        if let Some(code) = reply.exit {
            break code;
        }
        write!(out, "{}", session.prompt())?;
        out.flush()?;
        let mut line = String::new();
        let line = match input.read_line(&mut line) {
            Ok(0) => "quit",
            Ok(_) => line.as_str(),
            Err(e) => return Err(e.into()),
        };
        reply = session.feed(line);
    };

    if let Some(path) = &args.trace {
        write_file(path, &session.transcript().to_jsonl(), "trace", out)?;
    }
    Ok(code)
}

// ===========================================================================
// Tests
// ===========================================================================
