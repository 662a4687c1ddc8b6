//! Root detection in Q(√2) with a replayable transcript, on
//! x³ + (√2 − 3)x² + a₁x − 4(1 + √2) for a₁ = 2, 4, 8.
//!
//! `cargo run -p coeffgame --example number_field_roots`

use coeffgame::checks::number_field_game_poly;
use coeffgame::numberfield::{roots_in_k, NumberField};
use coeffgame::rational::format_rational;

fn main() {
    let k = NumberField::from_minpoly(&[-2, 0, 1]).unwrap();
    for a1 in [2, 4, 8] {
        let f = number_field_game_poly(&k, a1);
        let (roots, t) = roots_in_k(&k, &f).unwrap();
        println!("a1 = {a1}: f = {f}");
        for (s, norm) in &t.rejected_shifts {
            println!("  shift {} rejected, norm {norm} is not squarefree", format_rational(s));
        }
        println!("  shift {}: {}", format_rational(&t.shift), t.shifted);
        println!("  norm {}", t.norm);
        for step in &t.gcds {
            println!("    factor {:<24} gcd {}  (unit {})", step.norm_factor.to_string(), step.gcd, step.euclid_unit);
        }
        let shown: Vec<String> = roots.iter().map(|r| r.to_string()).collect();
        println!("  roots in K: {}", if shown.is_empty() { "none".into() } else { shown.join(", ") });
        println!("  transcript replays: {}", t.verify(&k, &f));
    }

    let cubic = NumberField::from_minpoly(&[-2, 0, 0, 1]).unwrap();
    let theta = cubic.theta();
    let f = coeffgame::poly::Polynomial::from_roots(&[theta.clone(), cubic.from_ints(&[1, 0, 1])]);
    let (roots, _) = roots_in_k(&cubic, &f).unwrap();
    println!("over Q(θ), θ³ = 2: roots of {f}: {:?}", roots.iter().map(|r| r.to_string()).collect::<Vec<_>>());
}
