//! Permutation cubics over small finite fields, by enumeration and by the
//! closed-form criterion.
//!
//! `cargo run -p coeffgame --example finite_field_dickson`

use coeffgame::finitefield::{dickson_predicate_deg3, fq_roots, is_permutation_poly, supported_fields, FqElement};
use coeffgame::poly::Polynomial;

fn main() {
    for f in supported_fields().into_iter().filter(|f| f.q() <= 9) {
        let mut total = 0;
        let mut perms = 0;
        let mut agree = true;
        let mut sample: Option<Polynomial<FqElement>> = None;
        for a3 in f.elements().skip(1) {
            for a2 in f.elements() {
                for a1 in f.elements() {
                    let g = Polynomial::new(vec![f.zero(), a1, a2, a3]);
                    total += 1;
                    let p = is_permutation_poly(f, &g);
                    agree &= p == dickson_predicate_deg3(f, &g).unwrap();
                    if p {
                        perms += 1;
                        if sample.as_ref().is_none_or(|s| s.coeffs()[2].index() == 0) {
                            sample = Some(g);
                        }
                    }
                }
            }
        }
        let example = sample.map_or(String::new(), |g| format!(", e.g. {g}"));
        println!("F_{:<2} char {}: {perms:>3} of {total:>3} cubics permute{example}; criterion agrees: {agree}", f.q(), f.characteristic());
    }

    let f9 = supported_fields().into_iter().find(|f| f.q() == 9).unwrap();
    let t = f9.element(3);
    let g = Polynomial::new(vec![f9.one(), f9.zero(), f9.one()]);
    println!("in F_9 the element with index 3 is {t}; x^2 + 1 has roots {:?}", fq_roots(f9, &g).roots.iter().map(|r| r.to_string()).collect::<Vec<_>>());
}

