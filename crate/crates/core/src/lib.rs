//! Exact-arithmetic engine for the coefficient-choosing game.
//!
//! Two players, Wanda and Nora, alternately fix the coefficients a₀..a_d of a
//! degree-d polynomial over a chosen domain. Wanda wins if the finished
//! polynomial has a root in the domain, Nora wins otherwise.
//!
//! ```
//! use coeffgame::checks::integer_game_moves;
//! use coeffgame::game::{DomainSpec, GameConfig, GameState, Player};
//!
//! let config = GameConfig::new(DomainSpec::Integers, 3, Player::Wanda).unwrap();
//! let game = GameState::replay(config, integer_game_moves()).unwrap();
//! assert_eq!(game.verdict().unwrap().to_string(), "winner: Nora; certificate: 12 candidates exhausted");
//! ```

pub mod checks;
pub mod error;
pub mod finitefield;
pub mod game;
pub mod numberfield;
pub mod poly;
pub mod qfactor;
pub mod rational;
pub mod ratroots;
pub mod realroots;
pub mod solver;
pub mod strategies;
pub mod wire;
