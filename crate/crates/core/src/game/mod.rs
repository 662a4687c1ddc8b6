//! Rules of the coefficient-choosing game: configuration, legal moves, turn
//! order and certified verdicts.

mod domain;
mod verdict;

use std::fmt;

pub use domain::{DomainScalar, DomainSpec, Subring, Value};
pub use verdict::{verdict_for, Certificate, Verdict};

use crate::error::GameError;
use crate::poly::Polynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Player {
    Wanda,
    Nora,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::Wanda => Player::Nora,
            Player::Nora => Player::Wanda,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Player::Wanda => "wanda",
            Player::Nora => "nora",
        }
    }

    pub fn parse(text: &str) -> Option<Player> {
        match text.trim().to_ascii_lowercase().as_str() {
            "wanda" | "w" => Some(Player::Wanda),
            "nora" | "n" => Some(Player::Nora),
            _ => None,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::Wanda => "Wanda",
            Player::Nora => "Nora",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameConfig {
    pub domain: DomainSpec,
    pub degree: usize,
    pub player_one: Player,
}

impl GameConfig {
    pub fn new(domain: DomainSpec, degree: usize, player_one: Player) -> Result<Self, GameError> {
        let config = GameConfig { domain, degree, player_one };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<(), GameError> {
        if self.degree < 2 {
            return Err(GameError::InvalidConfig("degree must be at least 2".into()));
        }
        self.domain.validate()
    }

    /// The player who assigns the final coefficient.
    pub fn last_player(&self) -> Player {
        if self.degree.is_multiple_of(2) {
            self.player_one
        } else {
            self.player_one.other()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Move {
    pub index: usize,
    pub value: Value,
}

impl Move {
    pub fn new(index: usize, value: Value) -> Self {
        Move { index, value }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a{} = {}", self.index, self.value)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameState {
    config: GameConfig,
    assigned: Vec<Option<Value>>,
    history: Vec<Move>,
}

pub fn new_game(config: GameConfig) -> Result<GameState, GameError> {
    config.validate()?;
    let slots = config.degree + 1;
    Ok(GameState { config, assigned: vec![None; slots], history: Vec::new() })
}

impl GameState {
    pub fn config(&self) -> &GameConfig {
        &self.config
    }

    pub fn domain(&self) -> &DomainSpec {
        &self.config.domain
    }

    pub fn degree(&self) -> usize {
        self.config.degree
    }

    pub fn assigned(&self) -> &[Option<Value>] {
        &self.assigned
    }

    pub fn get(&self, index: usize) -> Option<&Value> {
        self.assigned.get(index).and_then(Option::as_ref)
    }

    pub fn history(&self) -> &[Move] {
        &self.history
    }

    pub fn moves_made(&self) -> usize {
        self.history.len()
    }

    pub fn is_complete(&self) -> bool {
        self.assigned.iter().all(Option::is_some)
    }

    pub fn open_indices(&self) -> Vec<usize> {
        (0..self.assigned.len()).filter(|&i| self.assigned[i].is_none()).collect()
    }

    /// Side to move, or `None` once every coefficient is set.
    pub fn to_move(&self) -> Option<Player> {
        if self.is_complete() {
            None
        } else if self.history.len().is_multiple_of(2) {
            Some(self.config.player_one)
        } else {
            Some(self.config.player_one.other())
        }
    }

    pub fn check(&self, mv: &Move) -> Result<(), GameError> {
        if self.is_complete() {
            return Err(GameError::GameOver);
        }
        let d = self.degree();
        if mv.index > d {
            return Err(GameError::IndexOutOfRange { index: mv.index, degree: d });
        }
        if self.assigned[mv.index].is_some() {
            return Err(GameError::IndexTaken { index: mv.index });
        }
        if !self.config.domain.contains(&mv.value) {
            return Err(GameError::NotInDomain { value: mv.value.to_string(), domain: self.config.domain.to_string() });
        }
        if (mv.index == 0 || mv.index == d) && mv.value.is_zero() {
            return Err(GameError::ZeroForbidden { index: mv.index });
        }
        Ok(())
    }

    /// The state after `mv`; `self` is untouched.
    pub fn apply(&self, mv: Move) -> Result<GameState, GameError> {
        self.check(&mv)?;
        let mut next = self.clone();
        next.assigned[mv.index] = Some(mv.value.clone());
        next.history.push(mv);
        Ok(next)
    }

    /// Replays a move list from the empty board.
    pub fn replay(config: GameConfig, moves: impl IntoIterator<Item = Move>) -> Result<GameState, GameError> {
        moves.into_iter().try_fold(new_game(config)?, |state, mv| state.apply(mv))
    }

    /// Σ aᵢxⁱ over the assigned coefficients, open slots read as zero.
    pub fn partial_poly<T: DomainScalar>(&self) -> Polynomial<T> {
        let zero = T::from_value(&self.config.domain.zero()).expect("domain zero has the domain's scalar type");
        Polynomial::new(
            self.assigned
                .iter()
                .map(|v| v.as_ref().and_then(T::from_value).unwrap_or_else(|| zero.clone()))
                .collect(),
        )
    }

    /// The final polynomial, once complete.
    pub fn final_poly<T: DomainScalar>(&self) -> Result<Polynomial<T>, GameError> {
        if !self.is_complete() {
            return Err(GameError::IncompleteGame);
        }
        Ok(self.partial_poly())
    }

    pub fn final_values(&self) -> Result<Vec<Value>, GameError> {
        self.assigned.iter().map(|v| v.clone().ok_or(GameError::IncompleteGame)).collect()
    }

    pub fn verdict(&self) -> Result<Verdict, GameError> {
        verdict_for(&self.config.domain, &self.final_values()?)
    }

    /// The board as `a_d x^d + … + a_0`, with `?` for open slots.
    pub fn board_string(&self) -> String {
        let d = self.degree();
        (0..=d)
            .rev()
            .map(|i| {
                let v = self.assigned[i].as_ref().map_or("?".to_string(), |v| format!("({v})"));
                match i {
                    0 => v,
                    1 => format!("{v}x"),
                    _ => format!("{v}x^{i}"),
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, rat};
    use num_bigint::BigInt;

    fn r(n: i64) -> Value {
        Value::Rational(rat(n))
    }

    #[test]
    fn first_example_replay() {
        let config = GameConfig::new(DomainSpec::Integers, 3, Player::Wanda).unwrap();
        let s = new_game(config.clone()).unwrap();
        assert_eq!(s.to_move(), Some(Player::Wanda));
        let s = s.apply(Move::new(2, r(-12))).unwrap();
        assert_eq!(s.to_move(), Some(Player::Nora));
        let s = s.apply(Move::new(3, r(7))).unwrap();
        let s = s.apply(Move::new(0, r(4))).unwrap();
        let s = s.apply(Move::new(1, r(10000))).unwrap();
        assert_eq!(s.to_move(), None);
        assert_eq!(s.final_poly::<crate::rational::Rational>().unwrap().to_string(), "7x^3 - 12x^2 + 10000x + 4");
        assert_eq!(s.verdict().unwrap().winner, Player::Nora);
        assert_eq!(s.apply(Move::new(1, r(1))), Err(GameError::GameOver));
    }

    #[test]
    fn rule_violations() {
        let config = GameConfig::new(DomainSpec::ZInvN(BigInt::from(2)), 3, Player::Wanda).unwrap();
        let s = new_game(config).unwrap();
        assert_eq!(s.apply(Move::new(0, r(0))), Err(GameError::ZeroForbidden { index: 0 }));
        assert_eq!(s.apply(Move::new(3, r(0))), Err(GameError::ZeroForbidden { index: 3 }));
        assert_eq!(s.apply(Move::new(1, Value::Rational(frac(1, 3)))).unwrap_err().code(), "NotInDomain");
        let s = s.apply(Move::new(1, Value::Rational(frac(5, 8)))).unwrap();
        assert_eq!(s.apply(Move::new(1, r(1))), Err(GameError::IndexTaken { index: 1 }));
        assert_eq!(s.apply(Move::new(4, r(1))).unwrap_err().code(), "IndexOutOfRange");
        assert_eq!(s.verdict(), Err(GameError::IncompleteGame));
    }

    #[test]
    fn config_checks() {
        assert!(GameConfig::new(DomainSpec::Integers, 1, Player::Wanda).is_err());
        assert!(GameConfig::new(DomainSpec::ZInvN(BigInt::from(1)), 3, Player::Wanda).is_err());
        let c = GameConfig::new(DomainSpec::Reals, 2, Player::Nora).unwrap();
        assert_eq!(new_game(c.clone()).unwrap().to_move(), Some(Player::Nora));
        assert_eq!(c.last_player(), Player::Nora);
    }

    #[test]
    fn domain_strings_round_trip() {
        for text in ["integers", "rationals", "zinv:7", "nf:-2,0,1", "nf:-2,0,0,1:int", "reals", "fq:3:2", "closed"] {
            assert_eq!(DomainSpec::parse(text).unwrap().to_cli_string(), text);
        }
        assert!(DomainSpec::parse("nf:-1,0,1").is_err());
        assert!(DomainSpec::parse("fq:4:1").is_err());
        assert!(DomainSpec::parse("zinv:1").is_err());
    }

    #[test]
    fn value_parsing() {
        let k = DomainSpec::parse("nf:-2,0,1:int").unwrap();
        assert_eq!(k.parse_value("1, 1").unwrap().to_string(), "1 + √2");
        assert_eq!(k.parse_value("1/2,1").unwrap_err().code(), "NotInDomain");
        let f9 = DomainSpec::parse("fq:3:2").unwrap();
        assert_eq!(f9.parse_value("1,2").unwrap().to_string(), "2t + 1");
        assert!(f9.parse_value("1").is_err());
        assert_eq!(DomainSpec::Integers.parse_value("-3").unwrap(), r(-3));
        assert!(DomainSpec::Integers.parse_value("1/2").is_err());
    }

    #[test]
    fn board_rendering() {
        let config = GameConfig::new(DomainSpec::Integers, 2, Player::Wanda).unwrap();
        let s = new_game(config).unwrap().apply(Move::new(1, r(-3))).unwrap();
        assert_eq!(s.board_string(), "?x^2 + (-3)x + ?");
    }
}
