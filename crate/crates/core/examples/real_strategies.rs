//! Strategies over the reals: Wanda in even degree and Nora in degree two,
//! with the engine's reasoning printed for every move.
//!
//! `cargo run -p coeffgame --example real_strategies`

use coeffgame::game::{new_game, DomainSpec, GameConfig, Move, Player, Value};
use coeffgame::rational::frac;
use coeffgame::strategies::{policy_move, random_move};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn real(n: i64) -> Value {
    Value::Rational(frac(n, 1))
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let config = GameConfig::new(DomainSpec::Reals, 4, Player::Nora)?;
    let state = [(3, 5), (4, 1), (0, 1)]
        .into_iter()
        .try_fold(new_game(config)?, |s, (i, v)| s.apply(Move::new(i, real(v))))?;
    let em = policy_move(&state)?;
    println!("{}", state.board_string());
    println!("Wanda replies {} because {}", em.mv, em.explanation);
    let done = state.apply(em.mv)?;
    let done = done.apply(Move::new(1, real(-1000)))?;
    println!("{}\n{}\n", done.board_string(), done.verdict()?);

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for (degree, engine) in [(6, Player::Wanda), (4, Player::Wanda), (2, Player::Nora)] {
        let config = GameConfig::new(DomainSpec::Reals, degree, Player::Nora)?;
        let mut state = new_game(config)?;
        println!("degree {degree}, Nora first and last, engine plays {engine}");
        while let Some(p) = state.to_move() {
            let mv = if p == engine {
                let em = policy_move(&state)?;
                println!("  {p}: {} ({})", em.mv, em.explanation);
                em.mv
            } else {
                let mv = random_move(&mut rng, &state)?;
                println!("  {p}: {mv}");
                mv
            };
            state = state.apply(mv)?;
        }
        let verdict = state.verdict()?;
        println!("  {}\n  {verdict}\n", state.board_string());
        assert_eq!(verdict.winner, engine);
    }
    Ok(())
}
