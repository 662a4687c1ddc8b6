//! Real root counting with Sturm chains.
//!
//! `cargo run -p coeffgame --example sturm_counts`

use coeffgame::poly::qpoly;
use coeffgame::rational::frac;
use coeffgame::realroots::{sturm_real_root_count, SturmChain};

fn main() {
    let inputs = [qpoly(&[1, 0, 1]), qpoly(&[-2, 0, 1]), qpoly(&[1, 1, 0, -3, 1]), qpoly(&[1, -5, 0, 0, 0, 1])];
    for f in &inputs {
        println!("{f}: {} real root(s)", sturm_real_root_count(f).unwrap());
    }

    let f = qpoly(&[1, -5, 0, 0, 0, 1]);
    let chain = SturmChain::new(&f).unwrap();
    println!("Sturm chain of {f}:");
    for p in &chain.chain {
        println!("  {p}");
    }
    for (a, b) in [(frac(-2, 1), frac(0, 1)), (frac(0, 1), frac(1, 1)), (frac(1, 1), frac(2, 1))] {
        println!("  roots in ({a}, {b}]: {}", chain.roots_between(&a, &b));
    }
}
