//! Arithmetic in K = ℚ(θ) = ℚ[t]/(m(t)) and exact root detection in K.
//!
//! Roots are found with Trager's norm method: take the squarefree part,
//! shift `x → x − kθ` until the norm is squarefree, factor the norm over ℚ,
//! and take gcds with each irreducible norm factor in K[x]. Every linear gcd
//! is a root; no linear gcd means no root in K.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::AlgebraError;
use crate::poly::{Polynomial, Scalar};
use crate::qfactor::{factor_over_q, is_irreducible_over_q, FactorizationQ};
use crate::rational::{is_integer, Rational};

/// K = ℚ[t]/(m(t)) for a monic irreducible integer polynomial `m` of degree
/// at least 2.
#[derive(Debug, PartialEq, Eq)]
pub struct NumberField {
    minpoly: Vec<BigInt>,
    modulus: Polynomial<Rational>,
}

impl NumberField {
    pub fn new(minpoly: Vec<BigInt>) -> Result<Arc<Self>, AlgebraError> {
        let modulus = Polynomial::new(minpoly.iter().cloned().map(Rational::from_integer).collect());
        match modulus.degree() {
            Some(n) if n >= 2 => {}
            _ => return Err(AlgebraError::InvalidMinpoly("degree must be at least 2".into())),
        }
        if !modulus.leading().is_some_and(One::is_one) {
            return Err(AlgebraError::InvalidMinpoly("must be monic".into()));
        }
        if !is_irreducible_over_q(&modulus)? {
            return Err(AlgebraError::InvalidMinpoly("reducible over Q".into()));
        }
        let minpoly = modulus.coeffs().iter().map(|c| c.to_integer()).collect();
        Ok(Arc::new(NumberField { minpoly, modulus }))
    }

    pub fn from_minpoly(minpoly: &[i64]) -> Result<Arc<Self>, AlgebraError> {
        Self::new(minpoly.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Extension degree n.
    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    /// Integer coefficients of m(t), low degree first.
    pub fn minpoly(&self) -> &[BigInt] {
        &self.minpoly
    }

    pub fn modulus(&self) -> &Polynomial<Rational> {
        &self.modulus
    }

    /// `D` when the field is ℚ(√D), presented by t² − D.
    pub fn quadratic_radicand(&self) -> Option<BigInt> {
        (self.degree() == 2 && self.minpoly[1].is_zero()).then(|| -self.minpoly[0].clone())
    }

    pub fn element(self: &Arc<Self>, coords: Vec<Rational>) -> NfElement {
        let reduced = Polynomial::new(coords).rem(&self.modulus).expect("modulus is nonzero");
        NfElement::from_poly(self, &reduced)
    }

    pub fn from_ints(self: &Arc<Self>, coords: &[i64]) -> NfElement {
        self.element(coords.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn from_rational(self: &Arc<Self>, r: Rational) -> NfElement {
        self.element(vec![r])
    }

    pub fn zero(self: &Arc<Self>) -> NfElement {
        self.element(Vec::new())
    }

    pub fn one(self: &Arc<Self>) -> NfElement {
        self.from_rational(Rational::one())
    }

    /// The generator θ.
    pub fn theta(self: &Arc<Self>) -> NfElement {
        self.element(vec![Rational::zero(), Rational::one()])
    }

    /// A rational polynomial viewed in K[x].
    pub fn lift_poly(self: &Arc<Self>, f: &Polynomial<Rational>) -> Polynomial<NfElement> {
        Polynomial::new(f.coeffs().iter().map(|c| self.from_rational(c.clone())).collect())
    }
}

/// `Σ coords[i]·θⁱ`, always reduced modulo m(θ).
#[derive(Clone)]
pub struct NfElement {
    field: Arc<NumberField>,
    coords: Vec<Rational>,
}

impl NfElement {
    fn from_poly(field: &Arc<NumberField>, p: &Polynomial<Rational>) -> Self {
        let n = field.degree();
        let mut coords = p.coeffs().to_vec();
        coords.resize(n, Rational::zero());
        NfElement { field: Arc::clone(field), coords }
    }

    fn as_poly(&self) -> Polynomial<Rational> {
        Polynomial::new(self.coords.clone())
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    /// Coordinates in the power basis 1, θ, …, θⁿ⁻¹.
    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// Membership in ℤ[θ].
    pub fn has_integer_coords(&self) -> bool {
        self.coords.iter().all(is_integer)
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.coords[1..].iter().all(Zero::is_zero).then(|| &self.coords[0])
    }

    /// N_{K/ℚ}, the resultant of m(t) with the coordinate polynomial.
    pub fn norm(&self) -> Rational {
        let a = self.as_poly();
        if a.is_zero() {
            return Rational::zero();
        }
        self.field.modulus.resultant(&a).expect("both inputs nonzero")
    }
}

impl PartialEq for NfElement {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords && self.compatible(other)
    }
}

impl Eq for NfElement {}

impl Hash for NfElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

impl PartialOrd for NfElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NfElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coords.cmp(&other.coords)
    }
}

impl Scalar for NfElement {
    fn zero_like(&self) -> Self {
        self.field.zero()
    }
    fn one_like(&self) -> Self {
        self.field.one()
    }
    fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
    fn plus(&self, rhs: &Self) -> Self {
        let coords = self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect();
        NfElement { field: Arc::clone(&self.field), coords }
    }
    fn minus(&self, rhs: &Self) -> Self {
        let coords = self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect();
        NfElement { field: Arc::clone(&self.field), coords }
    }
    fn times(&self, rhs: &Self) -> Self {
        let prod = &self.as_poly() * &rhs.as_poly();
        let reduced = prod.rem(&self.field.modulus).expect("modulus is nonzero");
        NfElement::from_poly(&self.field, &reduced)
    }
    fn negated(&self) -> Self {
        NfElement { field: Arc::clone(&self.field), coords: self.coords.iter().map(|c| -c).collect() }
    }
    fn inverse(&self) -> Option<Self> {
        if Scalar::is_zero(self) {
            return None;
        }
        let (g, s, _) = self.as_poly().extended_gcd(&self.field.modulus).ok()?;
        debug_assert!(g.degree() == Some(0));
        Some(NfElement::from_poly(&self.field, &s.rem(&self.field.modulus).ok()?))
    }
    fn int_like(&self, n: i64) -> Self {
        self.field.from_rational(Rational::from_integer(n.into()))
    }
    fn compatible(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.field, &other.field) || self.field.minpoly == other.field.minpoly
    }
}

impl fmt::Debug for NfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NfElement({self})")
    }
}

impl fmt::Display for NfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let radicand = self.field.quadratic_radicand();
        let mut wrote = false;
        for (i, c) in self.coords.iter().enumerate() {
            if Zero::is_zero(c) {
                continue;
            }
            let symbol = match (i, &radicand) {
                (0, _) => String::new(),
                (1, Some(d)) => format!("√{d}"),
                (1, None) => "θ".to_string(),
                (i, _) => format!("θ^{i}"),
            };
            let mag = c.abs();
            let mag_text = if i > 0 && One::is_one(&mag) {
                String::new()
            } else if i > 0 && !is_integer(&mag) {
                format!("({mag})")
            } else {
                mag.to_string()
            };
            match (wrote, c.is_negative()) {
                (false, true) => f.write_str("-")?,
                (true, true) => f.write_str(" - ")?,
                (true, false) => f.write_str(" + ")?,
                (false, false) => {}
            }
            write!(f, "{mag_text}{symbol}")?;
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `N(A) = Π σᵢ(A)`, the resultant in t of m(t) and A(x, t), recovered by
/// evaluating element norms at `n·deg A + 1` rational points and
/// interpolating.
pub fn norm_polynomial(field: &Arc<NumberField>, a: &Polynomial<NfElement>) -> Result<Polynomial<Rational>, AlgebraError> {
    let deg = a.degree().ok_or(AlgebraError::ZeroPolynomial)?;
    let points = field.degree() * deg + 1;
    let samples = (0..points as i64)
        .map(|x| {
            let xr = Rational::from_integer(x.into());
            let value = a.eval(&field.from_rational(xr.clone()))?;
            Ok((xr, value.norm()))
        })
        .collect::<Result<Vec<_>, AlgebraError>>()?;
    Polynomial::interpolate(&samples)
}

/// Result of the squarefree-norm shift search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormShift {
    pub k: Rational,
    /// `A(x − kθ)`
    pub shifted: Polynomial<NfElement>,
    pub norm: Polynomial<Rational>,
    /// Earlier shifts whose norm was not squarefree, with that norm.
    pub rejected: Vec<(Rational, Polynomial<Rational>)>,
}

const INTEGER_SHIFT_LIMIT: i64 = 64;

/// 0, 1, −1, 2, −2, … then 1/2, −1/2, 3/2, −3/2, …
fn shift_schedule() -> impl Iterator<Item = Rational> {
    let ints = std::iter::once(0)
        .chain((1..=INTEGER_SHIFT_LIMIT).flat_map(|k| [k, -k]))
        .map(|k| Rational::from_integer(k.into()));
    let halves = (0..INTEGER_SHIFT_LIMIT)
        .flat_map(|k| [2 * k + 1, -(2 * k + 1)])
        .map(|k| Rational::new(k.into(), 2.into()));
    ints.chain(halves)
}

pub fn squarefree_norm_shift(field: &Arc<NumberField>, a: &Polynomial<NfElement>) -> Result<NormShift, AlgebraError> {
    if a.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    if !a.is_squarefree()? {
        return Err(AlgebraError::NotSquarefree);
    }
    let theta = field.theta();
    let mut rejected = Vec::new();
    for k in shift_schedule() {
        let offset = theta.times(&field.from_rational(-k.clone()));
        let shifted = a.shift(&offset);
        let norm = norm_polynomial(field, &shifted)?;
        if norm.is_squarefree()? {
            return Ok(NormShift { k, shifted, norm, rejected });
        }
        rejected.push((k, norm));
    }
    Err(AlgebraError::ShiftSearchExhausted)
}

/// One gcd of the shifted polynomial with an irreducible norm factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdStep {
    pub norm_factor: Polynomial<Rational>,
    /// Monic gcd in K[x].
    pub gcd: Polynomial<NfElement>,
    /// Leading coefficient of the last nonzero Euclidean remainder, i.e. the
    /// unit the monic normalization discarded.
    pub euclid_unit: NfElement,
}

/// Replayable record of one root-detection run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TragerTranscript {
    pub squarefree: Polynomial<NfElement>,
    pub rejected_shifts: Vec<(Rational, Polynomial<Rational>)>,
    pub shift: Rational,
    pub shifted: Polynomial<NfElement>,
    pub norm: Polynomial<Rational>,
    pub norm_factors: FactorizationQ,
    pub gcds: Vec<GcdStep>,
    pub roots: Vec<NfElement>,
}

impl TragerTranscript {
    /// Re-derives every recorded intermediate from `f` and checks the
    /// recorded conclusion.
    pub fn verify(&self, field: &Arc<NumberField>, f: &Polynomial<NfElement>) -> bool {
        let check = || -> Result<bool, AlgebraError> {
            if f.squarefree_part()? != self.squarefree {
                return Ok(false);
            }
            for (k, norm) in &self.rejected_shifts {
                let offset = field.theta().times(&field.from_rational(-k.clone()));
                let n = norm_polynomial(field, &self.squarefree.shift(&offset))?;
                if &n != norm || n.is_squarefree()? {
                    return Ok(false);
                }
            }
            let offset = field.theta().times(&field.from_rational(-self.shift.clone()));
            if self.squarefree.shift(&offset) != self.shifted {
                return Ok(false);
            }
            if norm_polynomial(field, &self.shifted)? != self.norm || !self.norm.is_squarefree()? {
                return Ok(false);
            }
            if self.norm_factors.expand() != self.norm || factor_over_q(&self.norm)? != self.norm_factors {
                return Ok(false);
            }
            if self.gcds.len() != self.norm_factors.factors.len() {
                return Ok(false);
            }
            for (step, (factor, _)) in self.gcds.iter().zip(&self.norm_factors.factors) {
                if &step.norm_factor != factor {
                    return Ok(false);
                }
                let raw = self.shifted.euclid(&field.lift_poly(factor))?;
                if raw.monic()? != step.gcd || raw.leading() != Some(&step.euclid_unit) {
                    return Ok(false);
                }
            }
            let roots = roots_from_gcds(field, &self.shift, &self.gcds);
            if roots != self.roots {
                return Ok(false);
            }
            for r in &self.roots {
                if !Scalar::is_zero(&f.eval(r)?) {
                    return Ok(false);
                }
            }
            Ok(true)
        };
        check().unwrap_or(false)
    }
}

fn roots_from_gcds(field: &Arc<NumberField>, k: &Rational, gcds: &[GcdStep]) -> Vec<NfElement> {
    let back = field.theta().times(&field.from_rational(k.clone()));
    let mut roots: Vec<NfElement> = gcds
        .iter()
        .filter(|step| step.gcd.degree() == Some(1))
        .map(|step| step.gcd.coeffs()[0].negated().minus(&back))
        .collect();
    roots.sort();
    roots.dedup();
    roots
}

/// All roots of `f` in K, with the transcript that certifies them (an empty
/// root list plus transcript is a no-root certificate).
pub fn roots_in_k(field: &Arc<NumberField>, f: &Polynomial<NfElement>) -> Result<(Vec<NfElement>, TragerTranscript), AlgebraError> {
    match f.degree() {
        None => return Err(AlgebraError::ZeroPolynomial),
        Some(0) => return Err(AlgebraError::ConstantPolynomial),
        _ => {}
    }
    if !f.leading().unwrap().compatible(&field.one()) {
        return Err(AlgebraError::UniverseMismatch);
    }
    let squarefree = f.squarefree_part()?;
    let NormShift { k, shifted, norm, rejected } = squarefree_norm_shift(field, &squarefree)?;
    let norm_factors = factor_over_q(&norm)?;
    let mut gcds = Vec::with_capacity(norm_factors.factors.len());
    for (factor, _) in &norm_factors.factors {
        let raw = shifted.euclid(&field.lift_poly(factor))?;
        gcds.push(GcdStep {
            norm_factor: factor.clone(),
            gcd: raw.monic()?,
            euclid_unit: raw.leading().cloned().unwrap(),
        });
    }
    let roots = roots_from_gcds(field, &k, &gcds);
    let transcript = TragerTranscript {
        squarefree,
        rejected_shifts: rejected,
        shift: k,
        shifted,
        norm,
        norm_factors,
        gcds,
        roots: roots.clone(),
    };
    Ok((roots, transcript))
}

/// `(2³⁵·n²)^(n³·s)`: the count bound on non-degenerate S-unit equation
/// solutions. Diagnostic only; no search is capped by it.
pub fn s_unit_bound(n: u32, s: u32) -> BigUint {
    let base = (BigUint::one() << 35u32) * BigUint::from(n) * BigUint::from(n);
    base.pow(n.pow(3) * s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::qpoly;
    use crate::rational::{frac, rat};

    fn k2() -> Arc<NumberField> {
        NumberField::from_minpoly(&[-2, 0, 1]).unwrap()
    }

    fn game_poly(k: &Arc<NumberField>, a1: i64) -> Polynomial<NfElement> {
        Polynomial::new(vec![
            k.from_ints(&[-4, -4]),
            k.from_ints(&[a1]),
            k.from_ints(&[-3, 1]),
            k.one(),
        ])
    }

    #[test]
    fn field_construction_checks() {
        assert!(NumberField::from_minpoly(&[-1, 0, 1]).is_err());
        assert!(NumberField::from_minpoly(&[-2, 0, 2]).is_err());
        assert!(NumberField::from_minpoly(&[5, 1]).is_err());
        assert_eq!(k2().degree(), 2);
    }

    #[test]
    fn inverses() {
        let k = k2();
        assert_eq!(k.from_ints(&[1, 1]).inverse().unwrap(), k.from_ints(&[-1, 1]));
        assert_eq!(k.theta().inverse().unwrap(), k.element(vec![rat(0), frac(1, 2)]));
        assert_eq!(k.from_ints(&[3]).inverse().unwrap(), k.from_rational(frac(1, 3)));
        assert!(k.zero().inverse().is_none());
    }

    #[test]
    fn element_display() {
        let k = k2();
        assert_eq!(k.from_ints(&[-4, -4]).to_string(), "-4 - 4√2");
        assert_eq!(k.from_ints(&[0, 1]).to_string(), "√2");
        assert_eq!(k.element(vec![frac(1, 2), frac(-3, 2)]).to_string(), "1/2 - (3/2)√2");
        let c = NumberField::from_minpoly(&[-2, 0, 0, 1]).unwrap();
        assert_eq!(c.from_ints(&[1, 0, -2]).to_string(), "1 - 2θ^2");
    }

    #[test]
    fn norm_examples() {
        let k = k2();
        assert_eq!(
            norm_polynomial(&k, &game_poly(&k, 2)).unwrap(),
            qpoly(&[-16, -16, 44, -20, 11, -6, 1])
        );
        assert_eq!(norm_polynomial(&k, &k.lift_poly(&qpoly(&[1, 1]))).unwrap(), qpoly(&[1, 2, 1]));
        let a = Polynomial::linear_root(&k.from_ints(&[1, 1]));
        assert_eq!(norm_polynomial(&k, &a).unwrap(), qpoly(&[-1, -2, 1]));
    }

    #[test]
    fn element_norm_matches_conjugate_product() {
        let k = k2();
        // N(a + b√2) = a² − 2b²
        assert_eq!(k.from_ints(&[3, 5]).norm(), rat(9 - 50));
    }

    #[test]
    fn shift_example_from_second_trial() {
        let k = k2();
        let shift = squarefree_norm_shift(&k, &game_poly(&k, 4)).unwrap();
        assert_eq!(shift.k, rat(1));
        let expected = Polynomial::new(vec![
            k.from_ints(&[-10, -8]),
            k.from_ints(&[6, 6]),
            k.from_ints(&[-3, -2]),
            k.one(),
        ]);
        assert_eq!(shift.shifted, expected);
        let product = &qpoly(&[2, -4, 1]) * &qpoly(&[-14, 8, 3, -2, 1]);
        assert_eq!(shift.norm, product);
        assert_eq!(shift.rejected.len(), 1);
        let sq = &qpoly(&[-2, 1]) * &qpoly(&[-2, 1]);
        assert_eq!(shift.rejected[0].1, &sq * &qpoly(&[-4, -12, 3, -2, 1]));
    }

    #[test]
    fn shift_zero_when_norm_already_squarefree() {
        let k = k2();
        let a = Polynomial::linear_root(&k.theta());
        let shift = squarefree_norm_shift(&k, &a).unwrap();
        assert_eq!(shift.k, rat(0));
        assert_eq!(shift.shifted, a);
        assert_eq!(shift.norm, qpoly(&[-2, 0, 1]));
    }

    #[test]
    fn shift_rejects_non_squarefree_input() {
        let k = k2();
        let a = k.lift_poly(&qpoly(&[1, 2, 1]));
        assert_eq!(squarefree_norm_shift(&k, &a), Err(AlgebraError::NotSquarefree));
    }

    #[test]
    fn worked_example_roots() {
        let k = k2();
        let (roots, t) = roots_in_k(&k, &game_poly(&k, 2)).unwrap();
        assert!(roots.contains(&k.from_ints(&[1, 1])));
        assert!(t.verify(&k, &game_poly(&k, 2)));
        let (roots, _) = roots_in_k(&k, &game_poly(&k, 4)).unwrap();
        assert!(roots.contains(&k.from_ints(&[2])));
        let (roots, t) = roots_in_k(&k, &game_poly(&k, 8)).unwrap();
        assert!(roots.is_empty());
        assert_eq!(t.gcds.len(), 1);
        assert_eq!(t.gcds[0].gcd, game_poly(&k, 8));
    }

    #[test]
    fn recorded_units_match_euclid() {
        let k = k2();
        let (_, t) = roots_in_k(&k, &game_poly(&k, 2)).unwrap();
        let step = t.gcds.iter().find(|s| s.norm_factor == qpoly(&[-1, -2, 1])).unwrap();
        assert_eq!(step.gcd, Polynomial::linear_root(&k.from_ints(&[1, 1])));
        assert_eq!(step.euclid_unit, k.from_ints(&[1, 2]));
    }

    #[test]
    fn tampered_transcript_fails_replay() {
        let k = k2();
        let f = game_poly(&k, 8);
        let (_, mut t) = roots_in_k(&k, &f).unwrap();
        t.roots.push(k.one());
        assert!(!t.verify(&k, &f));
    }

    #[test]
    fn s_unit_bound_values() {
        assert_eq!(s_unit_bound(1, 0), BigUint::one());
        assert_eq!(s_unit_bound(2, 0), BigUint::one());
        assert_eq!(s_unit_bound(2, 1), BigUint::one() << 296u32);
    }
}
