use std::collections::BTreeSet;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{require_turn, single_open, slots, EngineMove};
use crate::error::GameError;
use crate::finitefield::{FqElement, FqField};
use crate::game::{DomainScalar, DomainSpec, GameState, Player, Value};
use crate::numberfield::{roots_in_k, NfElement, NumberField};
use crate::poly::{Polynomial, Scalar};
use crate::rational::{common_denominator, next_integer_above, primes, Rational};
use crate::ratroots::{rational_roots, CandidateSet};

const PRIME_CAP: usize = 10_000;

/// Wanda fills the final slot so the polynomial has a root: an interior slot
/// gets `-g(1)`; an end slot gets `-g(r)` for the first small `r` with
/// `g(r) ≠ 0` (on the reversed polynomial for the leading slot).
pub fn wanda_last_move(state: &GameState) -> Result<EngineMove, GameError> {
    require_turn(state, Player::Wanda)?;
    let i = single_open(state)?;
    match state.domain() {
        DomainSpec::NumberField(..) => wanda_last::<NfElement>(state, i),
        DomainSpec::FiniteField(f) => {
            if (i == 0 || i == state.degree()) && f.q() <= state.degree() {
                return Err(GameError::Inapplicable(format!("end slot over F_{} with degree {}", f.q(), state.degree())));
            }
            wanda_last::<FqElement>(state, i)
        }
        _ => wanda_last::<Rational>(state, i),
    }
}

fn wanda_last<T: DomainScalar>(state: &GameState, i: usize) -> Result<EngineMove, GameError> {
    let d = state.degree();
    let coeffs = slots::<T>(state);
    let one = T::from_value(&state.domain().one()).unwrap();
    let g = Polynomial::new(coeffs.clone());
    if i != 0 && i != d {
        let value = g.eval(&one)?.negated();
        let why = format!("a{i} = -g(1) = {value}, so x = 1 is a root");
        return Ok(EngineMove::new(i, value.into_value(), "wanda_last_move", why));
    }
    let base = if i == 0 { g } else { Polynomial::new(coeffs.into_iter().rev().collect()) };
    let points: Vec<T> = match state.domain() {
        DomainSpec::FiniteField(f) => f.elements().skip(1).filter_map(|e| T::from_value(&Value::Fq(e))).collect(),
        domain => (1..=d as i64 + 1).filter_map(|r| T::from_value(&domain.from_int(r))).collect(),
    };
    for r in points {
        let gr = base.eval(&r)?;
        if gr.is_zero() {
            continue;
        }
        let value = gr.negated();
        let why = if i == 0 {
            format!("g({r}) = {gr} is nonzero, so a0 = {value} makes x = {r} a root")
        } else {
            format!("reversed polynomial has g({r}) = {gr}, so a{d} = {value} makes x = 1/({r}) a root")
        };
        return Ok(EngineMove::new(i, value.into_value(), "wanda_last_move", why));
    }
    Err(GameError::SearchExhausted("no point with g(r) nonzero".into()))
}

/// Nora's final move over ℤ, ℚ or ℤ[1/N].
pub fn nora_last_move_rationals(state: &GameState) -> Result<EngineMove, GameError> {
    require_turn(state, Player::Nora)?;
    let i = single_open(state)?;
    if !matches!(state.domain(), DomainSpec::Integers | DomainSpec::Rationals | DomainSpec::ZInvN(_)) {
        return Err(GameError::Inapplicable(format!("domain {} is not a subring of Q", state.domain())));
    }
    let mut coeffs = slots::<Rational>(state);
    let (value, why) = nora_rational_value(&coeffs, i)?;
    coeffs[i] = value.clone();
    if !rational_roots(&Polynomial::new(coeffs))?.is_empty() {
        return Err(GameError::SearchExhausted(format!("a{i} = {value} leaves a rational root")));
    }
    Ok(EngineMove::new(i, Value::Rational(value), "nora_last_move_rationals", why))
}

fn nora_rational_value(coeffs: &[Rational], i: usize) -> Result<(Rational, String), GameError> {
    let d = coeffs.len() - 1;
    let l = common_denominator(coeffs);
    let lr = Rational::from_integer(l.clone());
    if i == d {
        let reversed: Vec<Rational> = coeffs.iter().rev().cloned().collect();
        let (value, why) = nora_rational_value(&reversed, 0)?;
        return Ok((value, format!("on the reversed polynomial, {why}")));
    }
    if i == 0 {
        for p in primes().filter(|&p| !(&l % p).is_zero()).take(PRIME_CAP) {
            let mut trial = coeffs.to_vec();
            trial[0] = Rational::from_integer(p.into());
            if rational_roots(&Polynomial::new(trial))?.is_empty() {
                let why = format!("cleared by N' = {l}; prime p = {p} gives cleared constant {} and no rational root", &l * p);
                return Ok((Rational::from_integer(p.into()), why));
            }
        }
        return Err(GameError::SearchExhausted("no suitable prime constant term".into()));
    }
    let cleared = |c: &Rational| -> BigInt { (c * &lr).to_integer() };
    let candidates = CandidateSet::from_integer_ends(&cleared(&coeffs[0]), &cleared(&coeffs[d]))?;
    let mut g = coeffs.to_vec();
    g[i] = Rational::zero();
    let g = Polynomial::new(g);
    let mut big_m = Rational::zero();
    let mut at = None;
    for s in candidates.iter() {
        let v = g.eval(s)?.abs();
        if at.is_none() || v > big_m {
            big_m = v;
            at = Some(s.clone());
        }
    }
    let m = candidates.min_abs().expect("candidate sets are never empty");
    let bound = &big_m / Scalar::pow(&m, i as u64);
    let value = Rational::from_integer(next_integer_above(&bound));
    let why = format!(
        "{} candidates, M = {big_m} at s = {}, m = {m}; a{i} > M/m^{i} = {bound}, chose {value}",
        candidates.len(),
        at.unwrap()
    );
    Ok((value, why))
}

/// Search schedule for Nora's final move over a number field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumberFieldSearch {
    /// Candidates are powers `base^n`.
    pub base: i64,
    /// Maximum candidates tried before giving up.
    pub cap: usize,
}

impl Default for NumberFieldSearch {
    fn default() -> Self {
        NumberFieldSearch { base: 2, cap: 64 }
    }
}

/// Nora's final move over a number field: every candidate is checked with
/// the exact root decider, so a returned move always wins.
pub fn nora_last_move_numberfield(state: &GameState, search: &NumberFieldSearch) -> Result<EngineMove, GameError> {
    require_turn(state, Player::Nora)?;
    let i = single_open(state)?;
    let DomainSpec::NumberField(k, _) = state.domain() else {
        return Err(GameError::Inapplicable(format!("domain {} is not a number field", state.domain())));
    };
    let d = state.degree();
    let coeffs = slots::<NfElement>(state);
    let middle_zero = coeffs[1..d].iter().all(Scalar::is_zero);
    let candidates: Vec<(NfElement, String)> = if (i == 0 || i == d) && middle_zero {
        let other = &coeffs[d - i];
        split_candidates(state.domain(), k, other, d, search)
    } else {
        let base = Rational::from_integer(search.base.into());
        (1..=search.cap as u64)
            .map(|n| (k.from_rational(Scalar::pow(&base, n)), format!("{}^{n}", search.base)))
            .collect()
    };
    let mut rejected = Vec::new();
    for (value, label) in candidates.into_iter().take(search.cap) {
        let mut trial = coeffs.clone();
        trial[i] = value.clone();
        let (roots, transcript) = roots_in_k(k, &Polynomial::new(trial))?;
        match roots.first() {
            Some(r) => rejected.push(format!("{value} (root {r})")),
            None => {
                let factors = transcript.norm_factors.factors.len();
                let norm_note = if factors == 1 { "norm irreducible".to_string() } else { format!("norm has {factors} factors") };
                let tried = if rejected.is_empty() { String::new() } else { format!("rejected {}; ", rejected.join(", ")) };
                let why = format!("{tried}a{i} = {value} = {label} accepted, {norm_note}, no linear gcd");
                return Ok(EngineMove::new(i, Value::Nf(value), "nora_last_move_numberfield", why));
            }
        }
    }
    Err(GameError::SearchExhausted(format!("{} candidates for a{i} all leave a root", search.cap)))
}

/// `-N^{kd} c^{d+1} p` over successive primes, with the smallest k ≥ 0 that
/// lands in the domain.
fn split_candidates(
    domain: &DomainSpec,
    k: &Arc<NumberField>,
    other: &NfElement,
    d: usize,
    search: &NumberFieldSearch,
) -> Vec<(NfElement, String)> {
    let base = Rational::from_integer(search.base.into());
    let core = Scalar::pow(other, d as u64 + 1).negated();
    primes()
        .take(search.cap)
        .filter_map(|p| {
            let with_p = core.times(&k.from_rational(Rational::from_integer(p.into())));
            (0..=8u64).find_map(|kk| {
                let v = with_p.times(&k.from_rational(Scalar::pow(&base, kk * d as u64)));
                domain
                    .contains(&Value::Nf(v.clone()))
                    .then(|| (v, format!("-{}^{} ({other})^{} * {p}", search.base, kk * d as u64, d + 1)))
            })
        })
        .collect()
}

/// Nora's final move over 𝔽_q: each nonzero b rules out the one value of
/// `a_i` that makes b a root; she plays the smallest value left.
pub fn nora_last_move_finitefield(state: &GameState) -> Result<EngineMove, GameError> {
    require_turn(state, Player::Nora)?;
    let i = single_open(state)?;
    let DomainSpec::FiniteField(f) = state.domain() else {
        return Err(GameError::Inapplicable(format!("domain {} is not finite", state.domain())));
    };
    let coeffs = slots::<FqElement>(state);
    let (value, excluded) = fq_elimination(f, &coeffs, i)
        .ok_or_else(|| GameError::SearchExhausted(format!("every value of a{i} leaves a root")))?;
    let excluded: Vec<String> = excluded.iter().map(|e| e.to_string()).collect();
    let why = format!("excluded {{{}}}, chose a{i} = {value}", excluded.join(", "));
    Ok(EngineMove::new(i, Value::Fq(value), "nora_last_move_finitefield", why))
}

pub(crate) fn fq_elimination(
    field: &'static FqField,
    coeffs: &[FqElement],
    i: usize,
) -> Option<(FqElement, BTreeSet<FqElement>)> {
    let d = coeffs.len() - 1;
    let mut g = coeffs.to_vec();
    g[i] = field.zero();
    let g = Polynomial::new(g);
    let mut excluded = BTreeSet::new();
    for b in field.elements().skip(1) {
        let gb = g.eval(&b).expect("same field");
        excluded.insert(gb.negated().times(&b.pow(i as u64).inverse().expect("b is nonzero")));
    }
    if i == 0 || i == d {
        excluded.insert(field.zero());
    }
    let value = field.elements().find(|v| !excluded.contains(v))?;
    Some((value, excluded))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{new_game, GameConfig, Move};
    use crate::rational::{frac, rat};

    fn play(domain: DomainSpec, d: usize, first: Player, moves: &[(usize, Value)]) -> GameState {
        let mut s = new_game(GameConfig::new(domain, d, first).unwrap()).unwrap();
        for (i, v) in moves {
            s = s.apply(Move::new(*i, v.clone())).unwrap();
        }
        s
    }

    fn q(r: Rational) -> Value {
        Value::Rational(r)
    }

    #[test]
    fn wanda_examples() {
        let s = play(
            DomainSpec::Rationals,
            3,
            Player::Nora,
            &[(3, q(frac(1, 6))), (2, q(rat(24))), (1, q(frac(-1, 4)))],
        );
        assert_eq!(wanda_last_move(&s).unwrap().mv, Move::new(0, q(frac(-287, 12))));
        let s = play(DomainSpec::Integers, 3, Player::Nora, &[(3, q(rat(1))), (2, q(rat(3))), (0, q(rat(7)))]);
        let mv = wanda_last_move(&s).unwrap();
        assert_eq!(mv.mv, Move::new(1, q(rat(-11))));
        let s = play(
            DomainSpec::Reals,
            4,
            Player::Wanda,
            &[(4, q(rat(5))), (3, q(rat(-6))), (2, q(rat(-3))), (0, q(rat(10)))],
        );
        assert_eq!(wanda_last_move(&s).unwrap().mv, Move::new(1, q(rat(-6))));
    }

    #[test]
    fn first_example_interior_bound() {
        let s = play(DomainSpec::Integers, 3, Player::Wanda, &[(2, q(rat(-12))), (3, q(rat(7))), (0, q(rat(4)))]);
        let mv = nora_last_move_rationals(&s).unwrap();
        assert_eq!(mv.mv, Move::new(1, q(rat(4453))));
        assert!(mv.explanation.contains("M = 636 at s = -4"), "{}", mv.explanation);
    }

    #[test]
    fn constant_and_leading_slots() {
        let s = play(DomainSpec::Integers, 2, Player::Nora, &[(2, q(rat(1))), (1, q(rat(0)))]);
        assert_eq!(nora_last_move_rationals(&s).unwrap().mv, Move::new(0, q(rat(2))));
        let s = play(DomainSpec::Integers, 3, Player::Wanda, &[(2, q(rat(2))), (1, q(rat(2))), (0, q(rat(2)))]);
        let mv = nora_last_move_rationals(&s).unwrap();
        assert_eq!(mv.mv.index, 3);
        assert!(s.apply(mv.mv).unwrap().verdict().unwrap().winner == Player::Nora);
    }

    #[test]
    fn number_field_worked_example() {
        let k = NumberField::from_minpoly(&[-2, 0, 1]).unwrap();
        let domain = DomainSpec::NumberField(k.clone(), crate::game::Subring::IntegerSpan);
        let s = play(
            domain,
            3,
            Player::Wanda,
            &[(3, Value::Nf(k.one())), (2, Value::Nf(k.from_ints(&[-3, 1]))), (0, Value::Nf(k.from_ints(&[-4, -4])))],
        );
        let mv = nora_last_move_numberfield(&s, &NumberFieldSearch::default()).unwrap();
        assert_eq!(mv.mv, Move::new(1, Value::Nf(k.from_ints(&[8]))));
        assert!(mv.explanation.contains("norm irreducible"), "{}", mv.explanation);
    }

    #[test]
    fn finite_field_elimination() {
        let f5 = crate::finitefield::fq_field(5, 1).unwrap();
        let s = play(
            DomainSpec::FiniteField(f5),
            2,
            Player::Nora,
            &[(2, Value::Fq(f5.one())), (0, Value::Fq(f5.one()))],
        );
        let mv = nora_last_move_finitefield(&s).unwrap();
        assert_eq!(mv.mv, Move::new(1, Value::Fq(f5.one())));
        assert_eq!(mv.explanation, "excluded {0, 2, 3}, chose a1 = 1");
    }
}
