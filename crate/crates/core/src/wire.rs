//! JSON encodings for domains, values, moves, verdicts and game records.
//!
//! Rationals travel as `"p/q"` strings, number-field elements as arrays of
//! rational strings (power-basis coordinates), finite-field elements as
//! arrays of integers, and a number field by the integer coefficients of its
//! minimal polynomial.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value as Json};
use thiserror::Error;

use crate::error::GameError;
use crate::finitefield::{fq_field, FqRootTable};
use crate::game::{Certificate, DomainSpec, GameConfig, GameState, Move, Player, Subring, Value, Verdict};
use crate::numberfield::{GcdStep, NfElement, NumberField, TragerTranscript};
use crate::poly::Polynomial;
use crate::qfactor::FactorizationQ;
use crate::rational::{format_rational, parse_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WireError {
    #[error("malformed JSON: {0}")]
    Malformed(String),
    #[error(transparent)]
    Game(#[from] GameError),
}

impl WireError {
    pub fn code(&self) -> &'static str {
        match self {
            WireError::Malformed(_) => "Malformed",
            WireError::Game(e) => e.code(),
        }
    }
}

fn malformed(what: &str) -> WireError {
    WireError::Malformed(what.to_string())
}

fn field<'a>(obj: &'a Json, key: &str) -> Result<&'a Json, WireError> {
    obj.get(key).ok_or_else(|| malformed(&format!("missing field {key:?}")))
}

pub fn bigint_to_json(n: &BigInt) -> Json {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

pub fn bigint_from_json(j: &Json) -> Result<BigInt, WireError> {
    match j {
        Json::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| malformed("integer out of range")),
        Json::String(s) => s.parse().map_err(|_| malformed(&format!("bad integer {s:?}"))),
        _ => Err(malformed("expected an integer")),
    }
}

pub fn rational_to_json(r: &Rational) -> Json {
    json!(format_rational(r))
}

pub fn rational_from_json(j: &Json) -> Result<Rational, WireError> {
    match j {
        Json::String(s) => parse_rational(s).map_err(|e| malformed(&e.to_string())),
        Json::Number(n) => n.as_i64().map(|v| Rational::from_integer(v.into())).ok_or_else(|| malformed("expected an integer")),
        _ => Err(malformed("expected a rational string")),
    }
}

pub fn qpoly_to_json(f: &Polynomial<Rational>) -> Json {
    Json::Array(f.coeffs().iter().map(rational_to_json).collect())
}

pub fn nf_to_json(e: &NfElement) -> Json {
    Json::Array(e.coords().iter().map(rational_to_json).collect())
}

pub fn nfpoly_to_json(f: &Polynomial<NfElement>) -> Json {
    Json::Array(f.coeffs().iter().map(nf_to_json).collect())
}

pub fn value_to_json(v: &Value) -> Json {
    match v {
        Value::Rational(r) => rational_to_json(r),
        Value::Nf(e) => nf_to_json(e),
        Value::Fq(e) => json!(e.coords()),
    }
}

/// Accepts the canonical encoding, or the typed text form for any domain.
pub fn value_from_json(domain: &DomainSpec, j: &Json) -> Result<Value, WireError> {
    if let (Json::String(text), DomainSpec::NumberField(..) | DomainSpec::FiniteField(_)) = (j, domain) {
        return Ok(domain.parse_value(text)?);
    }
    let value = match domain {
        DomainSpec::NumberField(k, _) => {
            let coords = j
                .as_array()
                .ok_or_else(|| malformed("expected a coordinate array"))?
                .iter()
                .map(rational_from_json)
                .collect::<Result<Vec<_>, _>>()?;
            if coords.len() != k.degree() {
                return Err(malformed(&format!("expected {} coordinates", k.degree())));
            }
            Value::Nf(k.element(coords))
        }
        DomainSpec::FiniteField(f) => {
            let coords = j
                .as_array()
                .ok_or_else(|| malformed("expected a coordinate array"))?
                .iter()
                .map(|c| c.as_u64().ok_or_else(|| malformed("expected a residue")))
                .collect::<Result<Vec<_>, _>>()?;
            Value::Fq(f.from_coords(&coords).map_err(|e| malformed(&e.to_string()))?)
        }
        _ => Value::Rational(rational_from_json(j)?),
    };
    Ok(value)
}

pub fn domain_to_json(d: &DomainSpec) -> Json {
    match d {
        DomainSpec::Integers => json!({"kind": "integers"}),
        DomainSpec::Rationals => json!({"kind": "rationals"}),
        DomainSpec::ZInvN(n) => json!({"kind": "zinv", "n": bigint_to_json(n)}),
        DomainSpec::NumberField(k, sub) => json!({
            "kind": "number_field",
            "minpoly": k.minpoly().iter().map(bigint_to_json).collect::<Vec<_>>(),
            "subring": match sub { Subring::Field => "field", Subring::IntegerSpan => "integer_span" },
        }),
        DomainSpec::Reals => json!({"kind": "reals"}),
        DomainSpec::FiniteField(f) => json!({"kind": "finite_field", "p": f.p(), "k": f.k()}),
        DomainSpec::AlgebraicallyClosed => json!({"kind": "algebraically_closed"}),
    }
}

pub fn domain_from_json(j: &Json) -> Result<DomainSpec, WireError> {
    if let Json::String(text) = j {
        return Ok(DomainSpec::parse(text)?);
    }
    let kind = field(j, "kind")?.as_str().ok_or_else(|| malformed("kind must be a string"))?;
    let domain = match kind {
        "integers" => DomainSpec::Integers,
        "rationals" => DomainSpec::Rationals,
        "zinv" => DomainSpec::ZInvN(bigint_from_json(field(j, "n")?)?),
        "number_field" => {
            let minpoly = field(j, "minpoly")?
                .as_array()
                .ok_or_else(|| malformed("minpoly must be an array"))?
                .iter()
                .map(bigint_from_json)
                .collect::<Result<Vec<_>, _>>()?;
            let subring = match j.get("subring").and_then(Json::as_str).unwrap_or("field") {
                "field" => Subring::Field,
                "integer_span" => Subring::IntegerSpan,
                other => return Err(malformed(&format!("unknown subring {other:?}"))),
            };
            DomainSpec::NumberField(NumberField::new(minpoly).map_err(GameError::from)?, subring)
        }
        "reals" => DomainSpec::Reals,
        "finite_field" => {
            let p = field(j, "p")?.as_u64().ok_or_else(|| malformed("p must be an integer"))?;
            let k = field(j, "k")?.as_u64().ok_or_else(|| malformed("k must be an integer"))?;
            DomainSpec::FiniteField(fq_field(p, k as u32).map_err(GameError::from)?)
        }
        "algebraically_closed" => DomainSpec::AlgebraicallyClosed,
        other => return Err(malformed(&format!("unknown domain kind {other:?}"))),
    };
    domain.validate()?;
    Ok(domain)
}

pub fn player_from_json(j: &Json) -> Result<Player, WireError> {
    j.as_str().and_then(Player::parse).ok_or_else(|| malformed("player must be \"wanda\" or \"nora\""))
}

pub fn config_to_json(c: &GameConfig) -> Json {
    json!({"domain": domain_to_json(&c.domain), "degree": c.degree, "player_one": c.player_one.name()})
}

pub fn config_from_json(j: &Json) -> Result<GameConfig, WireError> {
    let domain = domain_from_json(field(j, "domain")?)?;
    let degree = field(j, "degree")?.as_u64().ok_or_else(|| malformed("degree must be an integer"))? as usize;
    let player_one = player_from_json(field(j, "player_one")?)?;
    Ok(GameConfig::new(domain, degree, player_one)?)
}

pub fn move_to_json(m: &Move) -> Json {
    json!({"index": m.index, "value": value_to_json(&m.value)})
}

pub fn move_from_json(domain: &DomainSpec, j: &Json) -> Result<Move, WireError> {
    let index = field(j, "index")?.as_u64().ok_or_else(|| malformed("index must be an integer"))? as usize;
    Ok(Move::new(index, value_from_json(domain, field(j, "value")?)?))
}

fn factorization_to_json(f: &FactorizationQ) -> Json {
    json!({
        "unit": rational_to_json(&f.unit),
        "factors": f.factors.iter().map(|(p, m)| json!({"factor": qpoly_to_json(p), "multiplicity": m})).collect::<Vec<_>>(),
    })
}

fn gcd_step_to_json(s: &GcdStep) -> Json {
    json!({
        "norm_factor": qpoly_to_json(&s.norm_factor),
        "gcd": nfpoly_to_json(&s.gcd),
        "euclid_unit": nf_to_json(&s.euclid_unit),
    })
}

pub fn transcript_to_json(t: &TragerTranscript) -> Json {
    json!({
        "squarefree": nfpoly_to_json(&t.squarefree),
        "rejected_shifts": t.rejected_shifts.iter().map(|(k, n)| json!({"k": rational_to_json(k), "norm": qpoly_to_json(n)})).collect::<Vec<_>>(),
        "shift": rational_to_json(&t.shift),
        "shifted": nfpoly_to_json(&t.shifted),
        "norm": qpoly_to_json(&t.norm),
        "norm_factors": factorization_to_json(&t.norm_factors),
        "gcds": t.gcds.iter().map(gcd_step_to_json).collect::<Vec<_>>(),
        "roots": t.roots.iter().map(nf_to_json).collect::<Vec<_>>(),
    })
}

fn fq_table_to_json(t: &FqRootTable) -> Json {
    json!({"values": t.values.iter().map(|v| v.coords()).collect::<Vec<_>>()})
}

pub fn certificate_to_json(c: &Certificate) -> Json {
    let mut obj = match c {
        Certificate::RootWitness(v) => json!({"kind": "root_witness", "root": value_to_json(v)}),
        Certificate::CandidatesExhausted { candidates } => json!({
            "kind": "candidates_exhausted",
            "candidates": candidates.iter().map(rational_to_json).collect::<Vec<_>>(),
        }),
        Certificate::Trager(t) => json!({"kind": "trager", "transcript": transcript_to_json(t)}),
        Certificate::SturmCount { count } => json!({"kind": "sturm_count", "count": count}),
        Certificate::FqEvaluationTable(t) => {
            let mut o = fq_table_to_json(t);
            o["kind"] = json!("fq_evaluation_table");
            o
        }
        Certificate::AlgebraicallyClosed { degree } => json!({"kind": "algebraically_closed", "degree": degree}),
    };
    obj["summary"] = json!(c.to_string());
    obj
}

pub fn verdict_to_json(v: &Verdict) -> Json {
    json!({"winner": v.winner.name(), "certificate": certificate_to_json(&v.certificate)})
}

pub fn state_to_json(s: &GameState) -> Json {
    let mut obj = Map::new();
    obj.insert("config".into(), config_to_json(s.config()));
    obj.insert(
        "assigned".into(),
        Json::Array(s.assigned().iter().map(|v| v.as_ref().map_or(Json::Null, value_to_json)).collect()),
    );
    obj.insert("history".into(), Json::Array(s.history().iter().map(move_to_json).collect()));
    obj.insert("to_move".into(), s.to_move().map_or(Json::Null, |p| json!(p.name())));
    obj.insert("complete".into(), json!(s.is_complete()));
    obj.insert("board".into(), json!(s.board_string()));
    Json::Object(obj)
}

/// A finished or partial game as stored on disk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameRecord {
    pub config: GameConfig,
    pub moves: Vec<Move>,
    pub verdict: Option<Verdict>,
}

impl GameRecord {
    /// Captures `state`, attaching the verdict when the game is complete.
    pub fn from_state(state: &GameState) -> Result<Self, GameError> {
        let verdict = if state.is_complete() { Some(state.verdict()?) } else { None };
        Ok(GameRecord { config: state.config().clone(), moves: state.history().to_vec(), verdict })
    }

    pub fn replay(&self) -> Result<GameState, GameError> {
        GameState::replay(self.config.clone(), self.moves.iter().cloned())
    }

    pub fn to_json(&self) -> Json {
        let mut obj = json!({
            "config": config_to_json(&self.config),
            "moves": self.moves.iter().map(move_to_json).collect::<Vec<_>>(),
        });
        if let Some(v) = &self.verdict {
            obj["verdict"] = verdict_to_json(v);
        }
        obj
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("JSON values always serialize")
    }

    /// Parses and replays a record. A stored verdict must match the verdict
    /// recomputed from the moves.
    pub fn from_json(j: &Json) -> Result<Self, WireError> {
        let config = config_from_json(field(j, "config")?)?;
        let moves = field(j, "moves")?
            .as_array()
            .ok_or_else(|| malformed("moves must be an array"))?
            .iter()
            .map(|m| move_from_json(&config.domain, m))
            .collect::<Result<Vec<_>, _>>()?;
        let state = GameState::replay(config.clone(), moves.iter().cloned())?;
        let verdict = match j.get("verdict") {
            None | Some(Json::Null) => None,
            Some(stored) => {
                let fresh = state.verdict()?;
                if verdict_to_json(&fresh) != *stored {
                    return Err(malformed("stored verdict does not match the replayed game"));
                }
                Some(fresh)
            }
        };
        Ok(GameRecord { config, moves, verdict })
    }

    pub fn from_json_str(text: &str) -> Result<Self, WireError> {
        let j: Json = serde_json::from_str(text).map_err(|e| malformed(&e.to_string()))?;
        Self::from_json(&j)
    }
}
