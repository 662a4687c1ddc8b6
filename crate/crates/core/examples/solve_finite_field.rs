//! Exact solution of small finite-field games and the winner table.
//!
//! `cargo run -p coeffgame --release --example solve_finite_field`

use coeffgame::finitefield::fq_field;
use coeffgame::game::{new_game, DomainSpec, GameConfig, Move, Player};
use coeffgame::solver::{best_move_fq, solve_fq, verify_theorems};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f3 = fq_field(3, 1)?;
    let config = GameConfig::new(DomainSpec::FiniteField(f3), 3, Player::Wanda)?;
    let solved = solve_fq(&config)?;
    let start = new_game(config)?;
    println!("F_3, degree 3, Wanda first: {} wins ({} positions)", solved.winner, solved.positions_visited);
    let winning: Vec<String> = solved.winning_moves(&start)?.iter().map(|m| m.to_string()).collect();
    println!("  Wanda's winning openings: {}", winning.join(", "));
    let after = start.apply(Move::new(1, DomainSpec::FiniteField(f3).from_int(1)))?;
    let em = best_move_fq(&solved, &after)?;
    println!("  after a1 = 1 Nora plays {} ({})", em.mv, em.explanation);

    let f5 = fq_field(5, 1)?;
    let config = GameConfig::new(DomainSpec::FiniteField(f5), 3, Player::Wanda)?;
    let solved = solve_fq(&config)?;
    println!("F_5, degree 3, Wanda first: {} wins", solved.winner);

    let report = verify_theorems(&[2, 3, 4, 5, 7, 8, 9], &[2, 3, 4])?;
    print!("{}", report.to_text());
    assert!(report.all_pass());
    Ok(())
}
