//! Self-checks on the two fully worked games and the finite-field table.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde_json::{json, Value as Json};

use crate::game::{DomainSpec, GameConfig, GameState, Move, Player, Subring, Value};
use crate::numberfield::{roots_in_k, squarefree_norm_shift, NfElement, NumberField};
use crate::poly::{qpoly, Polynomial};
use crate::qfactor::is_irreducible_over_q;
use crate::rational::{frac, Rational};
use crate::ratroots::rational_root_candidates;
use crate::solver::{verify_theorems, TheoremReport};
use crate::strategies::{nora_last_move_numberfield, NumberFieldSearch};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, pass: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), pass, detail: detail.into() }
    }

    pub fn line(&self) -> String {
        format!("{} {}: {}", if self.pass { "PASS" } else { "FAIL" }, self.name, self.detail)
    }

    pub fn to_json(&self) -> Json {
        json!({ "name": self.name, "pass": self.pass, "detail": self.detail })
    }
}

/// Wanda a₂ = −12, Nora a₃ = 7, Wanda a₀ = 4, Nora a₁ = 10000 over ℤ.
pub fn integer_game_moves() -> Vec<Move> {
    let v = |n| Value::Rational(frac(n, 1));
    vec![Move::new(2, v(-12)), Move::new(3, v(7)), Move::new(0, v(4)), Move::new(1, v(10000))]
}

pub fn integer_game_check() -> Check {
    let config = GameConfig::new(DomainSpec::Integers, 3, Player::Wanda).expect("valid config");
    let state = match GameState::replay(config, integer_game_moves()) {
        Ok(s) => s,
        Err(e) => return Check::new("integer game", false, e.to_string()),
    };
    let f = state.final_poly::<Rational>().expect("complete game");
    let expected: BTreeSet<Rational> =
        [1, 2, 4].iter().flat_map(|&n| [frac(n, 7), frac(-n, 7), frac(n, 1), frac(-n, 1)]).collect();
    let got: BTreeSet<Rational> = rational_root_candidates(&f).map(|c| c.to_vec().into_iter().collect()).unwrap_or_default();
    let verdict = state.verdict().expect("complete game");
    let pass = f == qpoly(&[4, 10000, -12, 7]) && got == expected && verdict.winner == Player::Nora;
    Check::new("integer game", pass, format!("f = {f}; {verdict}"))
}

fn sqrt2() -> Arc<NumberField> {
    NumberField::from_minpoly(&[-2, 0, 1]).expect("x^2 - 2 is irreducible")
}

/// x³ + (√2 − 3)x² + a₁x − 4(1 + √2).
pub fn number_field_game_poly(k: &Arc<NumberField>, a1: i64) -> Polynomial<NfElement> {
    Polynomial::new(vec![k.from_ints(&[-4, -4]), k.from_ints(&[a1]), k.from_ints(&[-3, 1]), k.one()])
}

pub fn number_field_checks() -> Vec<Check> {
    let k = sqrt2();
    let mut out = Vec::new();

    let f = number_field_game_poly(&k, 2);
    let (roots, t) = roots_in_k(&k, &f).expect("squarefree input");
    let factor = qpoly(&[-1, -2, 1]);
    let pass = t.norm == qpoly(&[-16, -16, 44, -20, 11, -6, 1])
        && t.norm_factors.factors.iter().any(|(g, _)| *g == factor)
        && roots.contains(&k.from_ints(&[1, 1]))
        && t.verify(&k, &f);
    out.push(Check::new("a1 = 2", pass, format!("norm {}; roots {:?}", t.norm, roots.iter().map(|r| r.to_string()).collect::<Vec<_>>())));

    let f = number_field_game_poly(&k, 4);
    let shift = squarefree_norm_shift(&k, &f).expect("squarefree input");
    let (roots, t) = roots_in_k(&k, &f).expect("squarefree input");
    let square = &qpoly(&[-2, 1]) * &qpoly(&[-2, 1]);
    let shifted = Polynomial::new(vec![k.from_ints(&[-10, -8]), k.from_ints(&[6, 6]), k.from_ints(&[-3, -2]), k.one()]);
    let pass = shift.rejected.first().is_some_and(|(_, n)| Polynomial::divides(&square, n))
        && shift.k == frac(1, 1)
        && shift.shifted == shifted
        && t.norm_factors.factors.iter().any(|(g, _)| *g == qpoly(&[2, -4, 1]))
        && roots.contains(&k.from_ints(&[2]))
        && t.verify(&k, &f);
    out.push(Check::new("a1 = 4", pass, format!("shift k = {}; shifted {}; roots {:?}", shift.k, shift.shifted, roots.iter().map(|r| r.to_string()).collect::<Vec<_>>())));

    let f = number_field_game_poly(&k, 8);
    let (roots, t) = roots_in_k(&k, &f).expect("squarefree input");
    let norm = qpoly(&[-16, -64, 104, -56, 23, -6, 1]);
    let pass = t.norm == norm && is_irreducible_over_q(&norm).unwrap_or(false) && roots.is_empty() && t.verify(&k, &f);
    out.push(Check::new("a1 = 8", pass, format!("norm {} irreducible; no roots", t.norm)));

    let config = GameConfig::new(DomainSpec::NumberField(k.clone(), Subring::Field), 3, Player::Wanda).expect("valid config");
    let moves = [(3, vec![1]), (2, vec![-3, 1]), (0, vec![-4, -4])].map(|(i, c)| Move::new(i, Value::Nf(k.from_ints(&c))));
    let state = GameState::replay(config, moves).expect("legal moves");
    let check = match nora_last_move_numberfield(&state, &NumberFieldSearch::default()) {
        Ok(mv) => Check::new("engine search", mv.mv == Move::new(1, Value::Nf(k.from_ints(&[8]))), mv.explanation),
        Err(e) => Check::new("engine search", false, e.to_string()),
    };
    out.push(check);
    out
}

pub const TABLE_QS: [usize; 6] = [2, 3, 4, 5, 7, 9];
pub const TABLE_DEGREES: [usize; 3] = [2, 3, 4];

pub fn theorem_table_check() -> (Check, TheoremReport) {
    let report = verify_theorems(&TABLE_QS, &TABLE_DEGREES).expect("all listed fields are supported");
    let passed = report.rows.iter().filter(|r| r.pass()).count();
    let check = Check::new("finite-field table", report.all_pass(), format!("{passed}/{} rows match", report.rows.len()));
    (check, report)
}

/// Every check above, in a fixed order.
///
/// ```
/// assert!(coeffgame::checks::all_checks().iter().all(|c| c.pass));
/// ```
pub fn all_checks() -> Vec<Check> {
    let mut out = vec![integer_game_check()];
    out.extend(number_field_checks());
    out.push(theorem_table_check().0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_pass() {
        for c in all_checks() {
            assert!(c.pass, "{}", c.line());
        }
    }

    #[test]
    fn engine_search_explains_the_accepted_value() {
        let c = number_field_checks().pop().unwrap();
        assert!(c.detail.contains("a1 = 8"), "{}", c.detail);
        assert!(c.detail.contains("accepted, norm irreducible"), "{}", c.detail);
    }
}
