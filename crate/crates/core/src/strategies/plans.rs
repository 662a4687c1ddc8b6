use num_traits::{One, Signed, Zero};

use super::{heuristic_move, nora_last_move_finitefield, require_turn, single_open, slots, wanda_last_move, EngineMove};
use crate::error::GameError;
use crate::finitefield::{FqElement, FqField};
use crate::game::{DomainSpec, GameState, Player, Value};
use crate::poly::{Polynomial, Scalar};
use crate::rational::{next_integer_above, Rational};

fn finite(state: &GameState) -> Result<&'static FqField, GameError> {
    match state.domain() {
        DomainSpec::FiniteField(f) => Ok(f),
        other => Err(GameError::Inapplicable(format!("domain {other} is not finite"))),
    }
}

fn fq(state: &GameState, i: usize) -> Option<FqElement> {
    match state.get(i) {
        Some(Value::Fq(e)) => Some(*e),
        _ => None,
    }
}

fn rational(state: &GameState, i: usize) -> Option<Rational> {
    state.get(i).and_then(Value::as_rational).cloned()
}

fn mv(index: usize, value: Value, policy: &'static str, why: impl Into<String>) -> EngineMove {
    EngineMove::new(index, value, policy, why.into())
}

/// Wanda as last player over 𝔽_q with q ≤ d, where an end slot may not be
/// finishable: pair the coefficients so that −1 is a root (d = 3), set
/// a₁ = 0 and match the ends (d = 2), or fill both ends early (d ≥ 4).
pub fn wanda_smallfield(state: &GameState) -> Result<EngineMove, GameError> {
    const NAME: &str = "wanda_smallfield";
    require_turn(state, Player::Wanda)?;
    let f = finite(state)?;
    let d = state.degree();
    if state.config().last_player() != Player::Wanda || f.q() > d {
        return Err(GameError::Inapplicable("needs Wanda last over a field with q <= d".into()));
    }
    let open = state.open_indices();
    match d {
        2 | 3 => {
            let pairs: &[(usize, usize)] = if d == 3 { &[(0, 3), (1, 2)] } else { &[(0, 2)] };
            for &(a, b) in pairs {
                let (set, free) = match (fq(state, a), fq(state, b)) {
                    (Some(v), None) => (v, b),
                    (None, Some(v)) => (v, a),
                    _ => continue,
                };
                let why = if d == 3 {
                    format!("pairing a{a} = a{b} = {set}, so x = -1 is a root")
                } else {
                    format!("a1 = 0 and a0 = a2 = {set}, so x = 1 is a root")
                };
                return Ok(mv(free, Value::Fq(set), NAME, why));
            }
            if d == 2 && open.contains(&1) {
                return Ok(mv(1, Value::Fq(f.zero()), NAME, "a1 = 0, then match the ends"));
            }
            if open.len() == 1 && open[0] != 0 && open[0] != d {
                return wanda_last_move(state);
            }
            heuristic_move(state)
        }
        _ => {
            if open.len() == 1 {
                return wanda_last_move(state);
            }
            if let Some(&i) = open.iter().find(|&&i| i == 0 || i == d) {
                return Ok(mv(i, Value::Fq(f.one()), NAME, format!("fill a{i} = 1 so the final slot is interior")));
            }
            let i = open[0];
            Ok(mv(i, Value::Fq(f.zero()), NAME, format!("filler a{i} = 0; ends already set")))
        }
    }
}

/// Nora as last player over 𝔽_q for d = 2 or d ≥ 4: a₁ = 1 first when d = 2,
/// otherwise fill both ends before the final move, then eliminate.
pub fn nora_fq_setup(state: &GameState) -> Result<EngineMove, GameError> {
    const NAME: &str = "nora_fq_setup";
    require_turn(state, Player::Nora)?;
    let f = finite(state)?;
    let d = state.degree();
    if state.config().last_player() != Player::Nora || d == 3 {
        return Err(GameError::Inapplicable("needs Nora last with d = 2 or d >= 4".into()));
    }
    let open = state.open_indices();
    if open.len() == 1 {
        return nora_last_move_finitefield(state);
    }
    if d == 2 {
        if open.contains(&1) {
            return Ok(mv(1, Value::Fq(f.one()), NAME, "a1 = 1, so x = 0 and one more point are roots of a2x^2 + x"));
        }
        return heuristic_move(state);
    }
    if let Some(&i) = open.iter().find(|&&i| i == 0 || i == d) {
        return Ok(mv(i, Value::Fq(f.one()), NAME, format!("fill a{i} = 1 so the final slot is interior")));
    }
    let i = open[0];
    Ok(mv(i, Value::Fq(f.zero()), NAME, format!("filler a{i} = 0; ends already set")))
}

/// Nora as last player over 𝔽_q, d = 3, characteristic not 3: answer an end
/// with the other end, and a middle coefficient so exactly one of a₁, a₂ is
/// zero. The pre-constant part can then never be a permutation polynomial.
pub fn nora_fq_d3(state: &GameState) -> Result<EngineMove, GameError> {
    const NAME: &str = "nora_fq_d3";
    require_turn(state, Player::Nora)?;
    let f = finite(state)?;
    if state.degree() != 3 || f.characteristic() == 3 || state.config().last_player() != Player::Nora {
        return Err(GameError::Inapplicable("needs Nora last, d = 3, characteristic not 3".into()));
    }
    let open = state.open_indices();
    if open.len() == 1 {
        return nora_last_move_finitefield(state);
    }
    match (fq(state, 0), fq(state, 3)) {
        (Some(_), None) => return Ok(mv(3, Value::Fq(f.one()), NAME, "both ends set before the final move: a3 = 1")),
        (None, Some(_)) => return Ok(mv(0, Value::Fq(f.one()), NAME, "both ends set before the final move: a0 = 1")),
        _ => {}
    }
    let reply = match (fq(state, 1), fq(state, 2)) {
        (Some(v), None) => Some((2, v)),
        (None, Some(v)) => Some((1, v)),
        _ => None,
    };
    match reply {
        Some((i, v)) => {
            let value = if v.is_zero() { f.one() } else { f.zero() };
            Ok(mv(i, Value::Fq(value), NAME, format!("a{i} = {value}: exactly one of a1, a2 is zero")))
        }
        None => heuristic_move(state),
    }
}

/// Wanda as first player over 𝔽_q, d = 3, characteristic 3: open with
/// a₂ = 0, then make the pre-constant part a permutation polynomial.
pub fn wanda_fq_char3_d3(state: &GameState) -> Result<EngineMove, GameError> {
    const NAME: &str = "wanda_fq_char3_d3";
    require_turn(state, Player::Wanda)?;
    let f = finite(state)?;
    if state.degree() != 3 || f.characteristic() != 3 {
        return Err(GameError::Inapplicable("needs d = 3 in characteristic 3".into()));
    }
    if state.moves_made() == 0 {
        return Ok(mv(2, Value::Fq(f.zero()), NAME, "a2 = 0"));
    }
    if state.open_indices().len() == 1 {
        return wanda_last_move(state);
    }
    if fq(state, 2).is_some_and(|v| v.is_zero()) && state.moves_made() == 2 {
        if let Some(a1) = fq(state, 1) {
            if a1.is_zero() {
                return Ok(mv(3, Value::Fq(f.one()), NAME, "a1 = 0, so a3 = 1 leaves the permutation polynomial x^3"));
            }
            let a3 = f
                .elements()
                .skip(1)
                .find(|a3| !a1.negated().times(&a3.inverse().unwrap()).is_square())
                .expect("every field of odd order has non-squares");
            let why = format!("a3 = {a3}: -a1/a3 is a non-square, so a3x^3 + a1x permutes the field");
            return Ok(mv(3, Value::Fq(a3), NAME, why));
        }
        if state.get(1).is_none() {
            return Ok(mv(1, Value::Fq(f.zero()), NAME, "a1 = 0 leaves a3x^3, a permutation polynomial"));
        }
    }
    heuristic_move(state)
}

fn sign(r: &Rational) -> i64 {
    if r.is_positive() {
        1
    } else {
        -1
    }
}

fn real(n: i64) -> Value {
    Value::Rational(Rational::from_integer(n.into()))
}

/// Wanda as second player over ℝ with even d ≥ 4: force opposite signs on
/// the ends if Nora touches them, zero even coefficients in the middle game,
/// then pick a final value that leaves Nora no root-free reply.
pub fn wanda_real_even(state: &GameState) -> Result<EngineMove, GameError> {
    const NAME: &str = "wanda_real_even";
    require_turn(state, Player::Wanda)?;
    let d = state.degree();
    if *state.domain() != DomainSpec::Reals || d % 2 == 1 || d < 4 {
        return Err(GameError::Inapplicable("needs D = R and even d >= 4".into()));
    }
    let (a0, ad) = (rational(state, 0), rational(state, d));
    let (a0, ad) = match (a0, ad) {
        (None, None) => return Ok(mv(d, real(1), NAME, format!("a{d} = 1 > 0"))),
        (Some(v), None) => {
            let s = -sign(&v);
            return Ok(mv(d, real(s), NAME, format!("a{d} = {s}: opposite sign to a0, so f(0) and f(+inf) differ in sign")));
        }
        (None, Some(v)) => {
            let s = -sign(&v);
            return Ok(mv(0, real(s), NAME, format!("a0 = {s}: opposite sign to a{d}, so f(0) and f(+inf) differ in sign")));
        }
        (Some(a0), Some(ad)) => (a0, ad),
    };
    if sign(&a0) != sign(&ad) {
        let filler = heuristic_move(state)?;
        return Ok(mv(filler.mv.index, filler.mv.value, NAME, "ends have opposite signs; every completion has a real root"));
    }
    let s = sign(&ad);
    let open = state.open_indices();
    if open.len() > 2 {
        if let Some(&i) = open.iter().find(|&&i| i % 2 == 0) {
            return Ok(mv(i, real(0), NAME, format!("middle game: a{i} = 0 (even degree)")));
        }
        let filler = heuristic_move(state)?;
        return Ok(mv(filler.mv.index, filler.mv.value, NAME, "middle game filler"));
    }
    if open.len() != 2 {
        return Err(GameError::Inapplicable("Wanda never moves last here".into()));
    }
    let sr = Rational::from_integer(s.into());
    let g = Polynomial::new(slots::<Rational>(state)).scale(&sr);
    let at = |x: i64| g.eval(&Rational::from_integer(x.into())).expect("rational evaluation");
    let (u, w) = (open[0], open[1]);
    match (u % 2, w % 2) {
        (0, 1) | (1, 0) => {
            let even = if u % 2 == 0 { u } else { w };
            let threshold = (at(1) + at(-1)) / Rational::from_integer(2.into());
            let a = next_integer_above(&threshold);
            let value = -&sr * Rational::from_integer(a.clone());
            let why = format!("Case a: A > (g(1)+g(-1))/2 = {threshold}, chose {a}; a{even} = {value}");
            Ok(mv(even, Value::Rational(value), NAME, why))
        }
        (1, 1) => {
            let (lo, hi) = (u, w);
            let two = Rational::from_integer(2.into());
            let rhs = at(1) + at(-2) / Scalar::pow(&two, lo as u64);
            let factor = Scalar::pow(&two, (hi - lo) as u64) - Rational::one();
            let threshold = &rhs / &factor;
            let a = next_integer_above(&threshold);
            let value = &sr * Rational::from_integer(a.clone());
            let why = format!(
                "Case b: A(2^{}-1) > g(1)+g(-2)/2^{lo} = {rhs}, so A > {threshold}, chose {a}; a{hi} = {value}",
                hi - lo
            );
            Ok(mv(hi, Value::Rational(value), NAME, why))
        }
        _ => {
            let filler = heuristic_move(state)?;
            Ok(mv(filler.mv.index, filler.mv.value, NAME, "two even slots remain; no forced win"))
        }
    }
}

/// Nora as first player over ℝ with d = 2: a₁ = 0, then copy Wanda's end
/// value so the discriminant is negative.
pub fn nora_real_quadratic(state: &GameState) -> Result<EngineMove, GameError> {
    const NAME: &str = "nora_real_quadratic";
    require_turn(state, Player::Nora)?;
    if *state.domain() != DomainSpec::Reals || state.degree() != 2 {
        return Err(GameError::Inapplicable("needs D = R and d = 2".into()));
    }
    if state.get(1).is_none() {
        return Ok(mv(1, real(0), NAME, "a1 = 0"));
    }
    let i = single_open(state)?;
    let other = rational(state, 2 - i).expect("the other end is set");
    let a1 = rational(state, 1).expect("a1 is set");
    if Zero::is_zero(&a1) {
        let why = format!("a{i} = {other} copies the other end; discriminant -4a0a2 < 0");
        return Ok(mv(i, Value::Rational(other), NAME, why));
    }
    let magnitude = next_integer_above(&(&a1 * &a1 / (Rational::from_integer(4.into()) * other.abs())));
    let value = Rational::from_integer(magnitude) * Rational::from_integer(sign(&other).into());
    Ok(mv(i, Value::Rational(value.clone()), NAME, format!("a{i} = {value} makes a1^2 - 4a0a2 negative")))
}
