//! Candidate sets and rational roots of integer polynomials.
//!
//! `cargo run -p coeffgame --example rational_roots`

use coeffgame::poly::qpoly;
use coeffgame::rational::format_rational;
use coeffgame::ratroots::{rational_root_candidates, rational_roots};

fn main() {
    for a1 in [1, -6, 5, 10000] {
        let f = qpoly(&[4, a1, -12, 7]);
        let candidates = rational_root_candidates(&f).unwrap();
        let roots = rational_roots(&f).unwrap();
        let shown: Vec<String> = roots.iter().map(format_rational).collect();
        println!("{f}");
        println!("  {} candidates, roots: {}", candidates.len(), if shown.is_empty() { "none".into() } else { shown.join(", ") });
    }

    let f = qpoly(&[4, 10000, -12, 7]);
    let list: Vec<String> = rational_root_candidates(&f).unwrap().iter().map(format_rational).collect();
    println!("candidates for {f}: {{{}}}", list.join(", "));
}
