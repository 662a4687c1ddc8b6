use coeffgame::poly::{qpoly, Polynomial};
use coeffgame::qfactor::{factor_over_q, is_irreducible_over_q};
use coeffgame::rational::{frac, rat, Rational};
use coeffgame::ratroots::rational_roots;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

/// Primitive integer form with positive leading coefficient.
fn normalize(f: &Polynomial<Rational>) -> Vec<BigInt> {
    let lcm = f.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = f.coeffs().iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if ints.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
    ints.iter().map(|c| c / &g * &sign).collect()
}

#[derive(Debug, Clone)]
enum Known {
    Linear(i64, i64),
    Quadratic(i64, i64),
}

impl Known {
    fn poly(&self) -> Polynomial<Rational> {
        match *self {
            Known::Linear(n, d) => Polynomial::linear_root(&frac(n, d)),
            Known::Quadratic(b, c) => qpoly(&[c, b, 1]),
        }
    }
}

fn is_square(n: i64) -> bool {
    n >= 0 && {
        let r = (n as f64).sqrt().round() as i64;
        (r - 1..=r + 1).any(|k| k >= 0 && k * k == n)
    }
}

fn known() -> impl Strategy<Value = Known> {
    prop_oneof![
        (-9i64..=9, 1i64..=5).prop_map(|(n, d)| Known::Linear(n, d)),
        (-9i64..=9, -9i64..=9)
            .prop_filter("irreducible", |(b, c)| !is_square(b * b - 4 * c))
            .prop_map(|(b, c)| Known::Quadratic(b, c)),
    ]
}

fn random_poly() -> impl Strategy<Value = Polynomial<Rational>> {
    prop::collection::vec(-12i64..=12, 2..=8).prop_map(|c| qpoly(&c))
}

fn check_factorization(f: &Polynomial<Rational>) -> Result<(), TestCaseError> {
    let fac = factor_over_q(f).unwrap();
    prop_assert_eq!(&fac.expand(), f);
    let total: usize = fac.factors.iter().map(|(g, m)| g.degree().unwrap() * *m as usize).sum();
    prop_assert_eq!(total, f.degree().unwrap());
    for (i, (g, _)) in fac.factors.iter().enumerate() {
        for (h, _) in &fac.factors[i + 1..] {
            prop_assert_ne!(g, h);
        }
        let deg = g.degree().unwrap();
        if (2..=3).contains(&deg) {
            prop_assert!(rational_roots(g).map(|r| r.is_empty()).unwrap_or(true));
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn factorization_round_trips(f in random_poly()) {
        prop_assume!(f.degree().unwrap_or(0) >= 1);
        check_factorization(&f)?;
    }

    #[test]
    fn recovers_constructed_factors(parts in prop::collection::vec(known(), 2..=4), c in 1i64..=7) {
        let mut f = Polynomial::constant(rat(c));
        let mut expected: Vec<Vec<BigInt>> = Vec::new();
        for p in &parts {
            f = &f * &p.poly();
            expected.push(normalize(&p.poly()));
        }
        check_factorization(&f)?;
        let fac = factor_over_q(&f).unwrap();
        let mut got: Vec<Vec<BigInt>> = Vec::new();
        for (g, m) in &fac.factors {
            for _ in 0..*m {
                got.push(normalize(g));
            }
        }
        got.sort();
        expected.sort();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn squarefree_inputs_have_unit_multiplicities(parts in prop::collection::vec(known(), 1..=4)) {
        let mut f = Polynomial::constant(rat(1));
        let mut seen = Vec::new();
        for p in &parts {
            let n = normalize(&p.poly());
            if !seen.contains(&n) {
                seen.push(n);
                f = &f * &p.poly();
            }
        }
        prop_assert!(factor_over_q(&f).unwrap().is_squarefree());
    }
}

#[test]
fn ordering_is_by_degree_then_coefficients() {
    let f = &(&qpoly(&[-2, 0, 1]) * &qpoly(&[3, 1])) * &qpoly(&[-1, 1]);
    let fac = factor_over_q(&f).unwrap();
    let degrees: Vec<usize> = fac.factors.iter().map(|(g, _)| g.degree().unwrap()).collect();
    assert_eq!(degrees, vec![1, 1, 2]);
    assert_eq!(fac.expand(), f);
}

#[test]
fn classic_irreducibles() {
    assert!(is_irreducible_over_q(&qpoly(&[1, 0, 0, 0, 1])).unwrap());
    assert!(!is_irreducible_over_q(&qpoly(&[4, 0, 0, 0, 1])).unwrap());
    assert!(is_irreducible_over_q(&qpoly(&[-16, -64, 104, -56, 23, -6, 1])).unwrap());
}
