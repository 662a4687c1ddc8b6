//! Perfect-play solver for finite-field games.
//!
//! A position is the assignment vector alone; whose turn it is follows from
//! how many slots are filled. Positions are packed base `q + 1` into a dense
//! table (slot value 0 means open, `idx + 1` means element `idx`).

use serde_json::{json, Value as Json};

use crate::error::GameError;
use crate::finitefield::{fq_roots, supported_fields, FqField};
use crate::game::{new_game, DomainSpec, GameConfig, GameState, Move, Player, Value};
use crate::poly::Polynomial;
use crate::strategies::EngineMove;

pub const MAX_Q: usize = 9;
pub const MAX_DEGREE: usize = 4;

const UNKNOWN: u8 = 0;
const WANDA: u8 = 1;
const NORA: u8 = 2;

fn encode(p: Player) -> u8 {
    match p {
        Player::Wanda => WANDA,
        Player::Nora => NORA,
    }
}

fn decode(v: u8) -> Option<Player> {
    match v {
        WANDA => Some(Player::Wanda),
        NORA => Some(Player::Nora),
        _ => None,
    }
}

/// Winners of every position reachable from the empty board.
#[derive(Debug, Clone)]
pub struct SolveResult {
    config: GameConfig,
    field: &'static FqField,
    table: Vec<u8>,
    pub winner: Player,
    pub positions_visited: usize,
}

struct Search<'a> {
    field: &'static FqField,
    degree: usize,
    player_one: Player,
    table: &'a mut Vec<u8>,
    visited: usize,
    cutoff: bool,
}

fn pow_checked(base: usize, exp: usize) -> u128 {
    (base as u128).pow(exp as u32)
}

impl Search<'_> {
    fn radix(&self) -> usize {
        self.field.q() + 1
    }

    fn slots(&self, mut key: usize) -> Vec<usize> {
        let r = self.radix();
        (0..=self.degree)
            .map(|_| {
                let s = key % r;
                key /= r;
                s
            })
            .collect()
    }

    fn leaf(&self, slots: &[usize]) -> Player {
        let f = Polynomial::new(slots.iter().map(|&s| self.field.element(s - 1)).collect());
        if fq_roots(self.field, &f).roots.is_empty() {
            Player::Nora
        } else {
            Player::Wanda
        }
    }

    fn solve(&mut self, key: usize) -> Player {
        if let Some(p) = decode(self.table[key]) {
            return p;
        }
        self.visited += 1;
        let slots = self.slots(key);
        let filled = slots.iter().filter(|&&s| s != 0).count();
        let winner = if filled == slots.len() {
            self.leaf(&slots)
        } else {
            let mover = if filled.is_multiple_of(2) { self.player_one } else { self.player_one.other() };
            let mut best = mover.other();
            let r = self.radix();
            let mut weight = 1;
            'outer: for (i, &slot) in slots.iter().enumerate() {
                if slot == 0 {
                    let start = if i == 0 || i == self.degree { 2 } else { 1 };
                    for s in start..r {
                        if self.solve(key + s * weight) == mover {
                            best = mover;
                            if self.cutoff {
                                break 'outer;
                            }
                        }
                    }
                }
                weight *= r;
            }
            best
        };
        self.table[key] = encode(winner);
        winner
    }
}

fn check_size(field: &FqField, degree: usize) -> Result<(), GameError> {
    if field.q() > MAX_Q || degree > MAX_DEGREE {
        return Err(GameError::TooLarge { bound: pow_checked(field.q() + 1, degree + 1) * 2 });
    }
    Ok(())
}

fn run(config: &GameConfig, cutoff: bool) -> Result<SolveResult, GameError> {
    config.validate()?;
    let DomainSpec::FiniteField(field) = config.domain else {
        return Err(GameError::Inapplicable("the solver handles finite fields only".into()));
    };
    check_size(field, config.degree)?;
    let size = (field.q() + 1).pow(config.degree as u32 + 1);
    let mut table = vec![UNKNOWN; size];
    let mut search = Search { field, degree: config.degree, player_one: config.player_one, table: &mut table, visited: 0, cutoff };
    let winner = search.solve(0);
    let positions_visited = search.visited;
    Ok(SolveResult { config: config.clone(), field, table, winner, positions_visited })
}

/// Exhaustive minimax over every reachable position (no cutoff, so every
/// position has a stored winner).
pub fn solve_fq(config: &GameConfig) -> Result<SolveResult, GameError> {
    run(config, false)
}

/// Winner only, with early cutoff once the mover finds a win.
pub fn solve_winner_fq(config: &GameConfig) -> Result<Player, GameError> {
    Ok(run(config, true)?.winner)
}

impl SolveResult {
    pub fn config(&self) -> &GameConfig {
        &self.config
    }

    fn key(&self, state: &GameState) -> Result<usize, GameError> {
        if state.config() != &self.config {
            return Err(GameError::Inapplicable("state belongs to a different configuration".into()));
        }
        let r = self.field.q() + 1;
        Ok(state.assigned().iter().rev().fold(0, |acc, v| {
            let s = match v {
                Some(Value::Fq(e)) => e.index() + 1,
                _ => 0,
            };
            acc * r + s
        }))
    }

    /// Stored perfect-play winner of `state`.
    pub fn winner_of(&self, state: &GameState) -> Result<Player, GameError> {
        decode(self.table[self.key(state)?]).ok_or_else(|| GameError::Inapplicable("position not reached".into()))
    }

    fn children(&self, state: &GameState) -> Vec<(Move, GameState)> {
        let d = state.degree();
        let mut out = Vec::new();
        for i in state.open_indices() {
            for e in self.field.elements() {
                if (i == 0 || i == d) && e.index() == 0 {
                    continue;
                }
                let mv = Move::new(i, Value::Fq(e));
                let next = state.apply(mv.clone()).expect("enumerated moves are legal");
                out.push((mv, next));
            }
        }
        out
    }

    /// Moves that keep a perfect-play win for the side to move.
    pub fn winning_moves(&self, state: &GameState) -> Result<Vec<Move>, GameError> {
        let mover = state.to_move().ok_or(GameError::GameOver)?;
        let mut out = Vec::new();
        for (mv, next) in self.children(state) {
            if self.winner_of(&next)? == mover {
                out.push(mv);
            }
        }
        Ok(out)
    }

    /// The smallest winning move, or from a lost position the smallest move
    /// leaving the opponent the fewest winning replies.
    pub fn best_move(&self, state: &GameState) -> Result<EngineMove, GameError> {
        let winning = self.winning_moves(state)?;
        if let Some(mv) = winning.first() {
            let why = format!("perfect play: {} winning move(s), chose the smallest", winning.len());
            return Ok(EngineMove { mv: mv.clone(), policy: "solver", explanation: why });
        }
        let mut best: Option<(usize, Move)> = None;
        for (mv, next) in self.children(state) {
            let replies = if next.is_complete() { 0 } else { self.winning_moves(&next)?.len() };
            if best.as_ref().is_none_or(|(n, _)| replies < *n) {
                best = Some((replies, mv));
            }
        }
        let (replies, mv) = best.expect("an open game has a legal move");
        let why = format!("lost position: opponent keeps {replies} winning repl(ies) after this move");
        Ok(EngineMove { mv, policy: "solver", explanation: why })
    }
}

/// `best_move_fq(result, state)`: table lookup into a solved configuration.
pub fn best_move_fq(result: &SolveResult, state: &GameState) -> Result<EngineMove, GameError> {
    result.best_move(state)
}

/// Expected winner: the last player, except d = 3 in characteristic 3 where
/// Wanda wins.
pub fn predicted_winner(field: &FqField, config: &GameConfig) -> Player {
    if config.degree == 3 && field.characteristic() == 3 {
        Player::Wanda
    } else {
        config.last_player()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremRow {
    pub q: usize,
    pub p: u64,
    pub k: u32,
    pub degree: usize,
    pub player_one: Player,
    pub solved: Player,
    pub predicted: Player,
    /// Wanda moving last implies Wanda wins.
    pub last_move_ok: bool,
}

impl TheoremRow {
    pub fn pass(&self) -> bool {
        self.solved == self.predicted && self.last_move_ok
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub rows: Vec<TheoremRow>,
}

impl TheoremReport {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(TheoremRow::pass)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::from("   q  d  first  solved  predicted  last-move  result\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{:>4} {:>2}  {:<5}  {:<6}  {:<9}  {:<9}  {}\n",
                r.q,
                r.degree,
                r.player_one.name(),
                r.solved.name(),
                r.predicted.name(),
                if r.last_move_ok { "ok" } else { "FAIL" },
                if r.pass() { "PASS" } else { "FAIL" }
            ));
        }
        let passed = self.rows.iter().filter(|r| r.pass()).count();
        out.push_str(&format!("{passed}/{} rows pass\n", self.rows.len()));
        out
    }

    pub fn to_json(&self) -> Json {
        json!({
            "all_pass": self.all_pass(),
            "rows": self.rows.iter().map(|r| json!({
                "q": r.q, "p": r.p, "k": r.k, "d": r.degree,
                "player_one": r.player_one.name(),
                "solved": r.solved.name(),
                "predicted": r.predicted.name(),
                "last_move_ok": r.last_move_ok,
                "pass": r.pass(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Solves every `(q, d, first player)` combination and compares with the
/// predicted winner.
pub fn verify_theorems(qs: &[usize], degrees: &[usize]) -> Result<TheoremReport, GameError> {
    let mut rows = Vec::new();
    for &q in qs {
        let field = supported_fields()
            .into_iter()
            .find(|f| f.q() == q)
            .ok_or_else(|| GameError::InvalidConfig(format!("no supported field of order {q}")))?;
        for &d in degrees {
            for player_one in [Player::Wanda, Player::Nora] {
                let config = GameConfig::new(DomainSpec::FiniteField(field), d, player_one)?;
                let solved = solve_winner_fq(&config)?;
                let predicted = predicted_winner(field, &config);
                let last_move_ok = config.last_player() != Player::Wanda || solved == Player::Wanda;
                rows.push(TheoremRow { q, p: field.p(), k: field.k(), degree: d, player_one, solved, predicted, last_move_ok });
            }
        }
    }
    Ok(TheoremReport { rows })
}

/// Helper for callers holding only a state: solves its configuration.
pub fn solve_state(state: &GameState) -> Result<SolveResult, GameError> {
    solve_fq(state.config())
}

/// The empty board of a finite-field configuration.
pub fn empty_board(field: &'static FqField, degree: usize, player_one: Player) -> Result<GameState, GameError> {
    new_game(GameConfig::new(DomainSpec::FiniteField(field), degree, player_one)?)
}
