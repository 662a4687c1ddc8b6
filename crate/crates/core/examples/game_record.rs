//! Saving a game as JSON, reloading it, and re-checking its certificate.
//!
//! `cargo run -p coeffgame --example game_record`

use coeffgame::game::{new_game, DomainSpec, GameConfig, Player};
use coeffgame::strategies::{policy_move, random_move};
use coeffgame::wire::{verdict_to_json, GameRecord};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let domain = DomainSpec::parse("nf:-2,0,1")?;
    let config = GameConfig::new(domain, 3, Player::Wanda)?;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut state = new_game(config)?;
    while let Some(p) = state.to_move() {
        let mv = if p == Player::Nora { policy_move(&state)?.mv } else { random_move(&mut rng, &state)? };
        state = state.apply(mv)?;
    }

    let text = GameRecord::from_state(&state)?.to_json_string();
    println!("{text}");

    let reloaded = GameRecord::from_json_str(&text)?;
    assert_eq!(reloaded.to_json_string(), text);
    let replayed = reloaded.replay()?;
    let verdict = replayed.verdict()?;
    println!("{verdict}");
    println!("certificate verifies: {}", verdict.verify(replayed.domain(), &replayed.final_values()?));
    println!("certificate as JSON: {}", verdict_to_json(&verdict)["certificate"]["summary"]);

    let tampered = text.replacen("\"nora\"", "\"wanda\"", 1);
    match GameRecord::from_json_str(&tampered) {
        Ok(_) => println!("tampered record accepted"),
        Err(e) => println!("tampered record rejected: {e}"),
    }
    Ok(())
}
