//! A scripted game over the integers, then engine-vs-random games over
//! several domains.
//!
//! `cargo run -p coeffgame --example play_game`

use coeffgame::checks::integer_game_moves;
use coeffgame::game::{new_game, DomainSpec, GameConfig, GameState, Player};
use coeffgame::strategies::{policy_move, random_move};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let config = GameConfig::new(DomainSpec::Integers, 3, Player::Wanda)?;
    let mut state = new_game(config)?;
    for mv in integer_game_moves() {
        let player = state.to_move().expect("game is not over");
        state = state.apply(mv.clone())?;
        println!("{player:<5} {mv:<12} {}", state.board_string());
    }
    println!("{}\n", state.verdict()?);

    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for (domain, degree, first) in [
        ("rationals", 5, Player::Nora),
        ("zinv:6", 3, Player::Wanda),
        ("nf:-2,0,1", 3, Player::Wanda),
        ("fq:2:3", 4, Player::Wanda),
        ("closed", 3, Player::Nora),
    ] {
        let config = GameConfig::new(DomainSpec::parse(domain)?, degree, first)?;
        let engine = config.last_player();
        let mut state: GameState = new_game(config)?;
        println!("{domain}, degree {degree}, engine plays {engine}");
        while let Some(p) = state.to_move() {
            if p == engine {
                let em = policy_move(&state)?;
                println!("  {p}: {} [{}]", em.mv, em.policy);
                state = state.apply(em.mv)?;
            } else {
                let mv = random_move(&mut rng, &state)?;
                println!("  {p}: {mv}");
                state = state.apply(mv)?;
            }
        }
        let verdict = state.verdict()?;
        println!("  {}\n  {verdict}", state.board_string());
        assert_eq!(verdict.winner, engine);
    }
    Ok(())
}
