use std::fmt;

use super::{DomainScalar, DomainSpec, Player, Value};
use crate::error::GameError;
use crate::finitefield::{fq_roots, FqElement, FqRootTable};
use crate::numberfield::{roots_in_k, NfElement, TragerTranscript};
use crate::poly::{Polynomial, Scalar};
use crate::rational::Rational;
use crate::ratroots::{rational_root_candidates, rational_roots};
use crate::realroots::sturm_real_root_count;

/// Evidence for a verdict that can be checked without trusting the engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// A root in the fraction field.
    RootWitness(Value),
    /// Every rational root candidate, each of which evaluates to nonzero.
    CandidatesExhausted { candidates: Vec<Rational> },
    Trager(Box<TragerTranscript>),
    SturmCount { count: usize },
    FqEvaluationTable(FqRootTable),
    AlgebraicallyClosed { degree: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub winner: Player,
    pub certificate: Certificate,
}

fn poly_of<T: DomainScalar>(coeffs: &[Value]) -> Result<Polynomial<T>, GameError> {
    let values = coeffs
        .iter()
        .map(|v| T::from_value(v).ok_or_else(|| GameError::NotInDomain { value: v.to_string(), domain: "coefficient ring".into() }))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Polynomial::new(values))
}

fn winner_if(has_root: bool) -> Player {
    if has_root {
        Player::Wanda
    } else {
        Player::Nora
    }
}

/// Decides the game for a finished coefficient vector `a₀, …, a_d`.
pub fn verdict_for(domain: &DomainSpec, coeffs: &[Value]) -> Result<Verdict, GameError> {
    match domain {
        DomainSpec::Integers | DomainSpec::Rationals | DomainSpec::ZInvN(_) => {
            let f = poly_of::<Rational>(coeffs)?;
            let roots = rational_roots(&f)?;
            Ok(match roots.into_iter().next() {
                Some(r) => Verdict { winner: Player::Wanda, certificate: Certificate::RootWitness(Value::Rational(r)) },
                None => Verdict {
                    winner: Player::Nora,
                    certificate: Certificate::CandidatesExhausted { candidates: rational_root_candidates(&f)?.to_vec() },
                },
            })
        }
        DomainSpec::NumberField(k, _) => {
            let f = poly_of::<NfElement>(coeffs)?;
            let (roots, transcript) = roots_in_k(k, &f)?;
            Ok(match roots.into_iter().next() {
                Some(r) => Verdict { winner: Player::Wanda, certificate: Certificate::RootWitness(Value::Nf(r)) },
                None => Verdict { winner: Player::Nora, certificate: Certificate::Trager(Box::new(transcript)) },
            })
        }
        DomainSpec::Reals => {
            let count = sturm_real_root_count(&poly_of::<Rational>(coeffs)?)?;
            Ok(Verdict { winner: winner_if(count > 0), certificate: Certificate::SturmCount { count } })
        }
        DomainSpec::FiniteField(field) => {
            let table = fq_roots(field, &poly_of::<FqElement>(coeffs)?);
            Ok(match table.roots.first() {
                Some(&r) => Verdict { winner: Player::Wanda, certificate: Certificate::RootWitness(Value::Fq(r)) },
                None => Verdict { winner: Player::Nora, certificate: Certificate::FqEvaluationTable(table) },
            })
        }
        DomainSpec::AlgebraicallyClosed => {
            let f = poly_of::<Rational>(coeffs)?;
            let degree = f.degree().unwrap_or(0);
            if degree == 0 {
                return Err(GameError::InvalidConfig("constant polynomial".into()));
            }
            Ok(Verdict { winner: Player::Wanda, certificate: Certificate::AlgebraicallyClosed { degree } })
        }
    }
}

fn evaluates_to_zero<T: DomainScalar>(coeffs: &[Value], x: &T) -> bool {
    poly_of::<T>(coeffs).is_ok_and(|f| f.eval(x).is_ok_and(|v| v.is_zero()))
}

impl Verdict {
    /// Checks the certificate against `coeffs` from scratch.
    pub fn verify(&self, domain: &DomainSpec, coeffs: &[Value]) -> bool {
        let consistent = match (&self.certificate, domain) {
            (Certificate::RootWitness(Value::Rational(r)), _) => evaluates_to_zero(coeffs, r),
            (Certificate::RootWitness(Value::Nf(r)), _) => evaluates_to_zero(coeffs, r),
            (Certificate::RootWitness(Value::Fq(r)), _) => evaluates_to_zero(coeffs, r),
            (Certificate::CandidatesExhausted { candidates }, _) => poly_of::<Rational>(coeffs).is_ok_and(|f| {
                rational_root_candidates(&f).is_ok_and(|c| c.to_vec() == *candidates)
                    && candidates.iter().all(|r| f.eval(r).is_ok_and(|v| !Scalar::is_zero(&v)))
            }),
            (Certificate::Trager(t), DomainSpec::NumberField(k, _)) => {
                t.roots.is_empty() && poly_of::<NfElement>(coeffs).is_ok_and(|f| t.verify(k, &f))
            }
            (Certificate::SturmCount { count }, DomainSpec::Reals) => {
                poly_of::<Rational>(coeffs).is_ok_and(|f| sturm_real_root_count(&f) == Ok(*count))
            }
            (Certificate::FqEvaluationTable(table), DomainSpec::FiniteField(field)) => {
                table.roots.is_empty()
                    && table.values.iter().all(|v| !v.is_zero())
                    && poly_of::<FqElement>(coeffs).is_ok_and(|f| table.verify(field, &f))
            }
            (Certificate::AlgebraicallyClosed { degree }, DomainSpec::AlgebraicallyClosed) => {
                poly_of::<Rational>(coeffs).is_ok_and(|f| f.degree() == Some(*degree) && *degree > 0)
            }
            _ => false,
        };
        let expected = match &self.certificate {
            Certificate::RootWitness(_) | Certificate::AlgebraicallyClosed { .. } => Player::Wanda,
            Certificate::SturmCount { count } => winner_if(*count > 0),
            _ => Player::Nora,
        };
        consistent && expected == self.winner
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::RootWitness(v) => write!(f, "root x = {v}"),
            Certificate::CandidatesExhausted { candidates } => write!(f, "{} candidates exhausted", candidates.len()),
            Certificate::Trager(t) => write!(
                f,
                "norm {} has {} irreducible factor(s) over Q and no linear gcd",
                t.norm,
                t.norm_factors.factors.len()
            ),
            Certificate::SturmCount { count } => write!(f, "Sturm count {count} real root(s)"),
            Certificate::FqEvaluationTable(t) => write!(f, "nonzero at all {} field elements", t.values.len()),
            Certificate::AlgebraicallyClosed { degree } => write!(f, "degree {degree} over an algebraically closed field"),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "winner: {}; certificate: {}", self.winner, self.certificate)
    }
}
