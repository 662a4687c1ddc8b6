//! Rational Root Theorem machinery: candidate enumeration and exact root
//! detection for rational polynomials.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::AlgebraError;
use crate::poly::Polynomial;
use crate::rational::{common_denominator, divisors, Rational};

/// Every possible rational root `±p/q` of a polynomial with given constant and
/// leading coefficients. Never contains zero; closed under negation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateSet {
    candidates: BTreeSet<Rational>,
}

impl CandidateSet {
    /// Candidates for an integer polynomial with constant term `a0` and leading
    /// coefficient `ad`.
    pub fn from_integer_ends(a0: &BigInt, ad: &BigInt) -> Result<Self, AlgebraError> {
        if a0.is_zero() || ad.is_zero() {
            return Err(AlgebraError::ZeroEndCoefficient);
        }
        let nums = divisors(a0);
        let dens = divisors(ad);
        let mut candidates = BTreeSet::new();
        for p in &nums {
            for q in &dens {
                let r = Rational::new(p.clone(), q.clone());
                candidates.insert(-r.clone());
                candidates.insert(r);
            }
        }
        Ok(CandidateSet { candidates })
    }

    pub fn iter(&self) -> impl Iterator<Item = &Rational> {
        self.candidates.iter()
    }

    pub fn len(&self) -> usize {
        self.candidates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.candidates.is_empty()
    }

    pub fn contains(&self, r: &Rational) -> bool {
        self.candidates.contains(r)
    }

    pub fn to_vec(&self) -> Vec<Rational> {
        self.candidates.iter().cloned().collect()
    }

    /// Smallest absolute value among the candidates.
    pub fn min_abs(&self) -> Option<Rational> {
        self.candidates.iter().map(|r| r.abs()).min()
    }
}

/// Multiplies through by the least common denominator. Returns the multiplier
/// and the integer coefficients.
pub fn clear_denominators(f: &Polynomial<Rational>) -> (BigInt, Vec<BigInt>) {
    let l = common_denominator(f.coeffs());
    let ints = f
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
        .collect();
    (l, ints)
}

fn ends(f: &Polynomial<Rational>) -> Result<(BigInt, BigInt), AlgebraError> {
    if f.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let (_, ints) = clear_denominators(f);
    let a0 = ints[0].clone();
    let ad = ints.last().cloned().unwrap_or_else(BigInt::one);
    if a0.is_zero() || ad.is_zero() {
        return Err(AlgebraError::ZeroEndCoefficient);
    }
    Ok((a0, ad))
}

pub fn rational_root_candidates(f: &Polynomial<Rational>) -> Result<CandidateSet, AlgebraError> {
    let (a0, ad) = ends(f)?;
    CandidateSet::from_integer_ends(&a0, &ad)
}

/// Exactly the candidates that evaluate to zero, ascending.
pub fn rational_roots(f: &Polynomial<Rational>) -> Result<Vec<Rational>, AlgebraError> {
    let candidates = rational_root_candidates(f)?;
    Ok(candidates
        .iter()
        .filter(|r| f.eval(r).is_ok_and(|v| v.is_zero()))
        .cloned()
        .collect())
}
