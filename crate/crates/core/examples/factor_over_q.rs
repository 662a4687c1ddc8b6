//! Complete factorization over the rationals.
//!
//! `cargo run -p coeffgame --example factor_over_q`

use coeffgame::poly::qpoly;
use coeffgame::qfactor::{factor_over_q, is_irreducible_over_q};
use coeffgame::rational::format_rational;

fn main() {
    let inputs = [
        qpoly(&[-16, -64, 104, -56, 23, -6, 1]),
        qpoly(&[-16, -16, 44, -20, 11, -6, 1]),
        qpoly(&[4, 0, 0, 0, 1]),
        &(&qpoly(&[1, 2, 1]) * &qpoly(&[-2, 0, 0, 1])) * &qpoly(&[1, -3]),
    ];
    for f in &inputs {
        let fac = factor_over_q(f).unwrap();
        let parts: Vec<String> = fac
            .factors
            .iter()
            .map(|(g, m)| if *m == 1 { format!("({g})") } else { format!("({g})^{m}") })
            .collect();
        println!("{f}");
        println!("  = {} · {}", format_rational(&fac.unit), parts.join(" · "));
        println!("  irreducible: {}", is_irreducible_over_q(f).unwrap());
        assert_eq!(&fac.expand(), f);
    }
}
