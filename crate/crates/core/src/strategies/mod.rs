//! Engine policies. Each winning policy implements a proven strategy; the
//! losing side falls back to a plain deterministic filler.

mod endgame;
mod plans;

pub use endgame::{
    nora_last_move_finitefield, nora_last_move_numberfield, nora_last_move_rationals, wanda_last_move, NumberFieldSearch,
};
pub use plans::{nora_fq_d3, nora_fq_setup, nora_real_quadratic, wanda_fq_char3_d3, wanda_real_even, wanda_smallfield};

use num_bigint::BigInt;
use rand::Rng;

use crate::error::GameError;
use crate::game::{DomainScalar, DomainSpec, GameState, Move, Player, Subring, Value};
use crate::rational::Rational;

pub const HEURISTIC: &str = "heuristic";

/// A move together with the policy that produced it and a human-readable
/// justification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EngineMove {
    pub mv: Move,
    pub policy: &'static str,
    pub explanation: String,
}

impl EngineMove {
    fn new(index: usize, value: Value, policy: &'static str, explanation: String) -> Self {
        EngineMove { mv: Move::new(index, value), policy, explanation }
    }
}

pub(crate) fn require_turn(state: &GameState, player: Player) -> Result<(), GameError> {
    match state.to_move() {
        None => Err(GameError::GameOver),
        Some(p) if p == player => Ok(()),
        Some(p) => Err(GameError::Inapplicable(format!("it is {p}'s turn"))),
    }
}

pub(crate) fn single_open(state: &GameState) -> Result<usize, GameError> {
    match state.open_indices().as_slice() {
        [] => Err(GameError::GameOver),
        [i] => Ok(*i),
        _ => Err(GameError::NotLastMove),
    }
}

/// Coefficients `a₀..a_d` with open slots read as zero.
pub(crate) fn slots<T: DomainScalar>(state: &GameState) -> Vec<T> {
    let zero = T::from_value(&state.domain().zero()).expect("domain zero has the domain's scalar type");
    state.assigned().iter().map(|v| v.as_ref().and_then(T::from_value).unwrap_or_else(|| zero.clone())).collect()
}

/// Lowest open interior slot gets 0; otherwise the lowest open end gets the
/// smallest nonzero value.
pub fn heuristic_move(state: &GameState) -> Result<EngineMove, GameError> {
    if state.to_move().is_none() {
        return Err(GameError::GameOver);
    }
    let d = state.degree();
    let open = state.open_indices();
    if let Some(&i) = open.iter().find(|&&i| i != 0 && i != d) {
        return Ok(EngineMove::new(i, state.domain().zero(), HEURISTIC, format!("filler: a{i} = 0")));
    }
    let i = open[0];
    let value = state.domain().small_values().find(|v| !v.is_zero()).expect("every domain has a nonzero value");
    Ok(EngineMove::new(i, value.clone(), HEURISTIC, format!("filler: a{i} = {value}")))
}

fn random_rational<R: Rng + ?Sized>(rng: &mut R, domain: &DomainSpec) -> Rational {
    let n = BigInt::from(rng.gen_range(-20i64..=20));
    let den = match domain {
        DomainSpec::Integers | DomainSpec::NumberField(_, Subring::IntegerSpan) => BigInt::from(1),
        DomainSpec::ZInvN(m) => m.pow(rng.gen_range(0..=2)),
        _ => BigInt::from(rng.gen_range(1i64..=6)),
    };
    Rational::new(n, den)
}

/// A random element of the domain: small numerators with small
/// denominators where the domain allows them, uniform over finite fields.
pub fn random_value<R: Rng + ?Sized>(rng: &mut R, domain: &DomainSpec) -> Value {
    match domain {
        DomainSpec::FiniteField(f) => Value::Fq(f.element(rng.gen_range(0..f.q()))),
        DomainSpec::NumberField(k, _) => {
            Value::Nf(k.element((0..k.degree()).map(|_| random_rational(rng, domain)).collect()))
        }
        _ => Value::Rational(random_rational(rng, domain)),
    }
}

/// A uniformly random open slot with a random legal value.
pub fn random_move<R: Rng + ?Sized>(rng: &mut R, state: &GameState) -> Result<Move, GameError> {
    let open = state.open_indices();
    if open.is_empty() {
        return Err(GameError::GameOver);
    }
    let index = open[rng.gen_range(0..open.len())];
    let end = index == 0 || index == state.degree();
    loop {
        let value = random_value(rng, state.domain());
        if !(end && value.is_zero()) {
            return Ok(Move::new(index, value));
        }
    }
}

/// Options for [`policy_move_with`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PolicyOptions {
    pub number_field: NumberFieldSearch,
}

pub fn policy_move(state: &GameState) -> Result<EngineMove, GameError> {
    policy_move_with(state, &PolicyOptions::default())
}

/// Picks the proven policy for the side to move, or the filler when that
/// side has no winning strategy.
pub fn policy_move_with(state: &GameState, options: &PolicyOptions) -> Result<EngineMove, GameError> {
    let player = state.to_move().ok_or(GameError::GameOver)?;
    let config = state.config();
    let d = config.degree;
    let last = config.last_player();
    let final_move = state.open_indices().len() == 1;
    let mv = match (&config.domain, player) {
        (DomainSpec::Integers | DomainSpec::Rationals | DomainSpec::ZInvN(_), p) if p == last && final_move => match p {
            Player::Wanda => wanda_last_move(state)?,
            Player::Nora => nora_last_move_rationals(state)?,
        },
        (DomainSpec::NumberField(..), p) if p == last && final_move => match p {
            Player::Wanda => wanda_last_move(state)?,
            Player::Nora => nora_last_move_numberfield(state, &options.number_field)?,
        },
        (DomainSpec::Reals, Player::Nora) if d == 2 && config.player_one == Player::Nora => nora_real_quadratic(state)?,
        (DomainSpec::Reals, Player::Wanda) if d.is_multiple_of(2) && d >= 4 && config.player_one == Player::Nora => {
            wanda_real_even(state)?
        }
        (DomainSpec::Reals | DomainSpec::AlgebraicallyClosed, Player::Wanda) if last == Player::Wanda && final_move => {
            wanda_last_move(state)?
        }
        (DomainSpec::FiniteField(f), Player::Wanda) if last == Player::Wanda => {
            if f.q() <= d {
                wanda_smallfield(state)?
            } else if final_move {
                wanda_last_move(state)?
            } else {
                heuristic_move(state)?
            }
        }
        (DomainSpec::FiniteField(f), Player::Wanda) if d == 3 && f.characteristic() == 3 => wanda_fq_char3_d3(state)?,
        (DomainSpec::FiniteField(f), Player::Nora) if last == Player::Nora && !(d == 3 && f.characteristic() == 3) => {
            if d == 3 {
                nora_fq_d3(state)?
            } else {
                nora_fq_setup(state)?
            }
        }
        _ => heuristic_move(state)?,
    };
    debug_assert!(state.check(&mv.mv).is_ok(), "policy produced an illegal move: {mv:?}");
    Ok(mv)
}
