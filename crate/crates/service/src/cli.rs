//! `ccg` subcommands: play, analyze, solve, verify-paper, serve.

use std::ffi::OsString;
use std::io::{BufRead, Write};
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use coeffgame::checks::{all_checks, theorem_table_check};
use coeffgame::error::GameError;
use coeffgame::finitefield::fq_field;
use coeffgame::game::{new_game, DomainSpec, GameConfig, GameState, Move, Player};
use coeffgame::solver::{best_move_fq, solve_fq};
use coeffgame::strategies::{policy_move, random_move};
use coeffgame::wire::{verdict_to_json, GameRecord};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::http;
use crate::session::SessionStore;

#[derive(Parser, Debug)]
#[command(name = "ccg", version, about = "Coefficient-choosing game engine")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Play a game in the terminal, or watch engines play each other.
    Play(PlayArgs),
    /// Re-derive the verdict and certificate of a recorded game.
    Analyze(AnalyzeArgs),
    /// Solve a finite-field game exactly.
    Solve(SolveArgs),
    /// Re-run the worked examples and the finite-field winner table.
    VerifyPaper(VerifyArgs),
    /// Serve the JSON API.
    Serve(ServeArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Controller {
    Human,
    Engine,
    Random,
}

#[derive(clap::Args, Debug)]
struct PlayArgs {
    /// integers | rationals | zinv:N | nf:c0,c1,..[:int] | reals | fq:p:k | closed
    #[arg(long, default_value = "integers")]
    domain: String,
    #[arg(long = "d", visible_alias = "degree", default_value_t = 3)]
    degree: usize,
    #[arg(long, default_value = "wanda", value_parser = parse_player)]
    first: Player,
    #[arg(long, value_enum, default_value_t = Controller::Human)]
    wanda: Controller,
    #[arg(long, value_enum, default_value_t = Controller::Engine)]
    nora: Controller,
    /// Seed for random players.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Use the exact solver for engine moves on small finite fields.
    #[arg(long)]
    solver: bool,
    /// Write the finished game here.
    #[arg(long)]
    record: Option<PathBuf>,
}

#[derive(clap::Args, Debug)]
struct AnalyzeArgs {
    #[arg(long)]
    record: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(clap::Args, Debug)]
struct SolveArgs {
    #[arg(long)]
    p: u64,
    #[arg(long, default_value_t = 1)]
    k: u32,
    #[arg(long = "d", visible_alias = "degree")]
    degree: usize,
    #[arg(long, default_value = "wanda", value_parser = parse_player)]
    first: Player,
    /// Moves already played, e.g. "2=0 3=1" (coordinates as "1,2" in extensions).
    #[arg(long, default_value = "")]
    moves: String,
    #[arg(long)]
    json: bool,
}

#[derive(clap::Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    json: bool,
}

#[derive(clap::Args, Debug)]
struct ServeArgs {
    #[arg(long, default_value = "127.0.0.1:8080")]
    addr: String,
    /// Keep one JSON file per game here.
    #[arg(long)]
    data_dir: Option<PathBuf>,
}

fn parse_player(s: &str) -> Result<Player, String> {
    Player::parse(s).ok_or_else(|| format!("expected wanda or nora, got {s:?}"))
}

/// Accepts `2 5`, `2=5`, `a2 = 5`.
pub fn parse_move(domain: &DomainSpec, text: &str) -> Result<Move, GameError> {
    let text = text.trim();
    let (index, value) = text
        .split_once('=')
        .or_else(|| text.split_once(char::is_whitespace))
        .ok_or_else(|| GameError::InvalidConfig(format!("expected \"index value\", got {text:?}")))?;
    let index = index.trim().trim_start_matches('a');
    let index: usize = index.parse().map_err(|_| GameError::InvalidConfig(format!("bad index {index:?}")))?;
    Ok(Move::new(index, domain.parse_value(value.trim())?))
}

type Out<'a> = &'a mut dyn Write;

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

/// Runs the CLI against the given streams and returns the exit code:
/// 0 on success, 1 on runtime or verification failure, 2 on usage errors.
pub fn run<I, T>(args: I, input: &mut dyn BufRead, out: Out, err: Out) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return 2;
            }
            let _ = write!(out, "{}", e.render());
            return 0;
        }
    };
    let result = match cli.command {
        Command::Play(a) => play(a, input, out),
        Command::Analyze(a) => analyze(a, out),
        Command::Solve(a) => solve(a, out),
        Command::VerifyPaper(a) => verify(a, out),
        Command::Serve(a) => serve(a, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure(m)) => {
            let _ = writeln!(err, "error: {m}");
            1
        }
    }
}

fn play(a: PlayArgs, input: &mut dyn BufRead, out: Out) -> Result<i32, Failure> {
    let domain = DomainSpec::parse(&a.domain)?;
    let config = GameConfig::new(domain, a.degree, a.first)?;
    let solved = if a.solver { solve_fq(&config).ok() } else { None };
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let mut state = new_game(config)?;
    writeln!(out, "game over {}, degree {}; {} moves first", state.domain(), a.degree, a.first)?;
    while let Some(p) = state.to_move() {
        let controller = if p == Player::Wanda { a.wanda } else { a.nora };
        let (mv, note) = match controller {
            Controller::Engine => {
                let em = match &solved {
                    Some(s) => best_move_fq(s, &state)?,
                    None => policy_move(&state)?,
                };
                (em.mv, format!(" [{}: {}]", em.policy, em.explanation))
            }
            Controller::Random => (random_move(&mut rng, &state)?, String::new()),
            Controller::Human => match read_human_move(&state, p, input, out)? {
                Some(mv) => (mv, String::new()),
                None => return Err(Failure("input ended before the game finished".into())),
            },
        };
        state = state.apply(mv.clone())?;
        writeln!(out, "{p}: {mv}{note}")?;
        writeln!(out, "  {}", state.board_string())?;
    }
    let verdict = state.verdict()?;
    writeln!(out, "{verdict}")?;
    if let Some(path) = a.record {
        std::fs::write(&path, GameRecord::from_state(&state)?.to_json_string())?;
        writeln!(out, "recorded to {}", path.display())?;
    }
    Ok(0)
}

fn read_human_move(state: &GameState, p: Player, input: &mut dyn BufRead, out: Out) -> Result<Option<Move>, Failure> {
    loop {
        write!(out, "{p}, your move (index value, \"hint\" or \"quit\"): ")?;
        out.flush()?;
        let mut line = String::new();
        if input.read_line(&mut line)? == 0 {
            return Ok(None);
        }
        match line.trim() {
            "" => continue,
            "quit" => return Ok(None),
            "hint" => {
                let em = policy_move(state)?;
                writeln!(out, "hint: {} [{}: {}]", em.mv, em.policy, em.explanation)?;
            }
            text => match parse_move(state.domain(), text).and_then(|mv| state.check(&mv).map(|_| mv)) {
                Ok(mv) => return Ok(Some(mv)),
                Err(e) => writeln!(out, "rejected ({}): {e}", e.code())?,
            },
        }
    }
}

fn analyze(a: AnalyzeArgs, out: Out) -> Result<i32, Failure> {
    let text = std::fs::read_to_string(&a.record).map_err(|e| Failure(format!("{}: {e}", a.record.display())))?;
    let record = GameRecord::from_json_str(&text)?;
    let state = record.replay()?;
    let verdict = state.verdict()?;
    if a.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&verdict_to_json(&verdict))?)?;
    } else {
        writeln!(out, "{} over {}", state.board_string(), state.domain())?;
        writeln!(out, "{verdict}")?;
    }
    Ok(0)
}

fn solve(a: SolveArgs, out: Out) -> Result<i32, Failure> {
    let field = fq_field(a.p, a.k)?;
    let config = GameConfig::new(DomainSpec::FiniteField(field), a.degree, a.first)?;
    let mut state = new_game(config.clone())?;
    for text in a.moves.split_whitespace() {
        state = state.apply(parse_move(state.domain(), text)?)?;
    }
    let solved = solve_fq(&config)?;
    let winner = solved.winner_of(&state)?;
    let winning = if state.is_complete() { Vec::new() } else { solved.winning_moves(&state)? };
    if a.json {
        let j = json!({
            "winner": winner.name(),
            "positions_visited": solved.positions_visited,
            "to_move": state.to_move().map(|p| p.name()),
            "winning_moves": winning.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&j)?)?;
    } else {
        writeln!(out, "winner: {winner}")?;
        writeln!(out, "positions visited: {}", solved.positions_visited)?;
        if let Some(p) = state.to_move() {
            let list: Vec<String> = winning.iter().map(|m| m.to_string()).collect();
            let shown = if list.is_empty() { "none".to_string() } else { list.join(", ") };
            writeln!(out, "winning moves for {p}: {shown}")?;
        }
    }
    Ok(0)
}

fn verify(a: VerifyArgs, out: Out) -> Result<i32, Failure> {
    let checks = all_checks();
    let all_pass = checks.iter().all(|c| c.pass);
    if a.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&http::verify_report())?)?;
    } else {
        for c in &checks {
            writeln!(out, "{}", c.line())?;
        }
        write!(out, "{}", theorem_table_check().1.to_text())?;
        let failed = checks.iter().filter(|c| !c.pass).count();
        if all_pass {
            writeln!(out, "PASS: all {} checks", checks.len())?;
        } else {
            writeln!(out, "FAIL: {failed} of {} checks", checks.len())?;
        }
    }
    Ok(if all_pass { 0 } else { 1 })
}

fn serve(a: ServeArgs, out: Out) -> Result<i32, Failure> {
    let store = match &a.data_dir {
        Some(dir) => SessionStore::persistent(dir)?,
        None => SessionStore::in_memory(),
    };
    writeln!(out, "listening on http://{}/v1 ({} stored game(s))", a.addr, store.len())?;
    out.flush()?;
    let rt = tokio::runtime::Runtime::new()?;
    rt.block_on(http::serve(&a.addr, Arc::new(store)))?;
    Ok(0)
}
