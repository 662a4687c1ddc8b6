//! Dense univariate polynomials over an exact coefficient field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::AlgebraError;
use crate::rational::Rational;

/// An element of one of the exact coefficient fields: rationals, a number
/// field, or a finite field.
///
/// Elements of number fields and finite fields carry their field with them,
/// so constants such as zero are produced from an existing element.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;
    /// Image of an integer under the canonical map ℤ → field.
    fn int_like(&self, n: i64) -> Self;
    /// Whether two values live in the same field.
    fn compatible(&self, _other: &Self) -> bool {
        true
    }

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            base = base.times(&base);
            e >>= 1;
        }
        acc
    }
}

impl Scalar for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn int_like(&self, n: i64) -> Self {
        Rational::from_integer(n.into())
    }
}

/// Coefficients `c₀..c_deg`, trimmed so the last entry is nonzero. The zero
/// polynomial is the empty list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c·xⁿ`
    pub fn monomial(c: T, n: usize) -> Self {
        let mut coeffs = vec![c.zero_like(); n];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// `x - r`
    pub fn linear_root(r: &T) -> Self {
        Polynomial { coeffs: vec![r.negated(), r.one_like()] }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Coefficient of `xⁱ`, `None` past the degree.
    pub fn coeff(&self, i: usize) -> Option<&T> {
        self.coeffs.get(i)
    }

    pub fn map<U: Scalar>(&self, f: impl FnMut(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }

    fn zip_with(&self, rhs: &Self, op: impl Fn(&T, &T) -> T, lone_rhs: impl Fn(&T) -> T) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => op(a, b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => lone_rhs(b),
                (None, None) => unreachable!(),
            });
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.times(c)).collect())
    }

    /// Horner evaluation. Universe mismatch (two different number fields,
    /// say) is reported instead of silently mixing values.
    pub fn eval(&self, x: &T) -> Result<T, AlgebraError> {
        if let Some(c) = self.coeffs.first() {
            if !c.compatible(x) {
                return Err(AlgebraError::UniverseMismatch);
            }
        }
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.times(x).plus(c);
        }
        Ok(acc)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.times(&c.int_like(i as i64)))
                .collect(),
        )
    }

    pub fn monic(&self) -> Result<Self, AlgebraError> {
        let lc = self.leading().ok_or(AlgebraError::ZeroPolynomial)?;
        let inv = lc.inverse().ok_or(AlgebraError::DivisionByZero)?;
        Ok(self.scale(&inv))
    }

    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), AlgebraError> {
        let dlc = divisor.leading().ok_or(AlgebraError::DivisionByZero)?;
        let dlc_inv = dlc.inverse().ok_or(AlgebraError::DivisionByZero)?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![dlc.zero_like(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].times(&dlc_inv);
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] = rem[k + j].minus(&c.times(dc));
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self, AlgebraError> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Whether `divisor` divides `self` with zero remainder.
    pub fn divides(divisor: &Self, f: &Self) -> bool {
        !divisor.is_zero() && f.rem(divisor).is_ok_and(|r| r.is_zero())
    }

    /// Monic greatest common divisor; `gcd(f, 0) = monic(f)`.
    pub fn gcd(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.euclid(other)?.monic()
    }

    /// Last nonzero remainder of the plain Euclidean sequence started at
    /// `(self, other)`, before monic normalization.
    pub fn euclid(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.is_zero() && other.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a)
    }

    /// Returns `(g, s, t)` with `s·self + t·other = g`, `g` monic.
    pub fn extended_gcd(&self, other: &Self) -> Result<(Self, Self, Self), AlgebraError> {
        let sample = self
            .leading()
            .or(other.leading())
            .ok_or(AlgebraError::ZeroPolynomial)?;
        let one = Self::constant(sample.one_like());
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (one.clone(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), one);
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = r0.leading().and_then(Scalar::inverse).ok_or(AlgebraError::ZeroPolynomial)?;
        Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
    }

    /// Monic `f / gcd(f, f')`. Valid in characteristic 0 or above the degree.
    pub fn squarefree_part(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative())?;
        self.div_rem(&g)?.0.monic()
    }

    pub fn is_squarefree(&self) -> Result<bool, AlgebraError> {
        Ok(self.gcd(&self.derivative())?.degree() == Some(0))
    }

    /// `f(x + c)`
    pub fn shift(&self, c: &T) -> Self {
        let Some(sample) = self.leading() else {
            return Self::zero();
        };
        let x_plus_c = Polynomial::new(vec![c.clone(), sample.one_like()]);
        let mut acc = Self::zero();
        for a in self.coeffs.iter().rev() {
            acc = &(&acc * &x_plus_c) + &Self::constant(a.clone());
        }
        acc
    }

    /// `x^d · f(1/x)` for a polynomial filling all `d+1` game slots. Only
    /// defined when both the constant and the degree-`d` coefficient are set.
    pub fn reverse(&self, d: usize) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        if self.degree() != Some(d) {
            return Err(AlgebraError::DegreeMismatch { expected: d, got: self.degree().unwrap_or(0) });
        }
        if self.coeffs[0].is_zero() {
            return Err(AlgebraError::ZeroEndCoefficient);
        }
        Ok(Self::new(self.coeffs.iter().rev().cloned().collect()))
    }

    /// Resultant `res(self, other)`, `lc(self)^deg(other) · Π other(α)` over
    /// the roots `α` of `self`.
    pub fn resultant(&self, other: &Self) -> Result<T, AlgebraError> {
        let sample = match (self.leading(), other.leading()) {
            (Some(s), Some(_)) => s.clone(),
            _ => return Err(AlgebraError::ZeroPolynomial),
        };
        let (mut a, mut b) = (self.clone(), other.clone());
        let mut acc = sample.one_like();
        loop {
            let da = a.coeffs.len() - 1;
            let db = b.coeffs.len() - 1;
            if db == 0 {
                return Ok(acc.times(&b.coeffs[0].pow(da as u64)));
            }
            let r = a.rem(&b)?;
            if r.is_zero() {
                return Ok(sample.zero_like());
            }
            let dr = r.coeffs.len() - 1;
            if da * db % 2 == 1 {
                acc = acc.negated();
            }
            acc = acc.times(&b.coeffs[db].pow((da - dr) as u64));
            a = b;
            b = r;
        }
    }

    /// Newton interpolation through points with distinct abscissae.
    pub fn interpolate(points: &[(T, T)]) -> Result<Self, AlgebraError> {
        let n = points.len();
        let mut coef: Vec<T> = points.iter().map(|(_, y)| y.clone()).collect();
        for level in 1..n {
            for i in (level..n).rev() {
                let dx = points[i].0.minus(&points[i - level].0);
                let inv = dx.inverse().ok_or(AlgebraError::DivisionByZero)?;
                coef[i] = coef[i].minus(&coef[i - 1]).times(&inv);
            }
        }
        let mut acc = Self::zero();
        for i in (0..n).rev() {
            acc = &(&acc * &Self::linear_root(&points[i].0)) + &Self::constant(coef[i].clone());
        }
        Ok(acc)
    }

    pub fn from_roots(roots: &[T]) -> Self {
        let Some(first) = roots.first() else {
            return Self::zero();
        };
        roots
            .iter()
            .fold(Self::constant(first.one_like()), |acc, r| &acc * &Self::linear_root(r))
    }
}

impl<T: Scalar> Add for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: Self) -> Polynomial<T> {
        self.zip_with(rhs, |a, b| a.plus(b), |b| b.clone())
    }
}

impl<T: Scalar> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: Self) -> Polynomial<T> {
        self.zip_with(rhs, |a, b| a.minus(b), |b| b.negated())
    }
}

impl<T: Scalar> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().map(Scalar::negated).collect())
    }
}

impl<T: Scalar> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].plus(&a.times(b));
            }
        }
        Polynomial::new(out)
    }
}

impl<T: Scalar> fmt::Debug for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl<T: Scalar> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let compound = text.contains(['+', ' ']) || text.chars().skip(1).any(|c| c == '-');
            let (neg, body) = match text.strip_prefix('-') {
                Some(rest) if !compound => (true, rest.to_string()),
                _ => (false, text.clone()),
            };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let body = if compound { format!("({body})") } else { body };
            match i {
                0 => f.write_str(&body)?,
                _ => {
                    if body != "1" {
                        f.write_str(&body)?;
                    }
                    f.write_str("x")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Rational polynomial from integer coefficients, low degree first.
pub fn qpoly(coeffs: &[i64]) -> Polynomial<Rational> {
    Polynomial::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
}

impl Polynomial<Rational> {
    /// Sign of the value at `x`.
    pub fn sign_at(&self, x: &Rational) -> i8 {
        let v = self.eval(x).expect("rationals share one universe");
        if Zero::is_zero(&v) {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, rat};

    #[test]
    fn eval_examples() {
        let f = qpoly(&[4, 10000, -12, 7]);
        assert_eq!(f.eval(&rat(1)).unwrap(), rat(9999));
        assert_eq!(f.eval(&rat(2)).unwrap(), rat(20012));
        assert_eq!(qpoly(&[-5, 1, 3, 1]).eval(&rat(1)).unwrap(), rat(0));
        assert_eq!(Polynomial::<Rational>::zero().eval(&rat(3)).unwrap(), rat(0));
    }

    #[test]
    fn gcd_examples() {
        let g = qpoly(&[-1, 0, 1]).gcd(&qpoly(&[1, -2, 1])).unwrap();
        assert_eq!(g, qpoly(&[-1, 1]));
        assert_eq!(qpoly(&[1, 0, 1]).gcd(&qpoly(&[-1, 0, 1])).unwrap(), qpoly(&[1]));
        assert_eq!(qpoly(&[2, 4]).gcd(&Polynomial::zero()).unwrap(), qpoly(&[1, 2]).scale(&frac(1, 2)).monic().unwrap());
        assert_eq!(
            Polynomial::<Rational>::zero().gcd(&Polynomial::zero()),
            Err(AlgebraError::ZeroPolynomial)
        );
    }

    #[test]
    fn squarefree_examples() {
        let xm2 = qpoly(&[-2, 1]);
        let xp1 = qpoly(&[1, 1]);
        let f = &(&xm2 * &xm2) * &xp1;
        assert_eq!(f.squarefree_part().unwrap(), &xm2 * &xp1);

        let quartic = qpoly(&[-4, -12, 3, -2, 1]);
        assert_eq!(quartic.gcd(&quartic.derivative()).unwrap(), qpoly(&[1]));
        let f = &(&xm2 * &xm2) * &quartic;
        assert_eq!(f.squarefree_part().unwrap(), &xm2 * &quartic);

        assert_eq!(qpoly(&[0, 0, 0, 1]).squarefree_part().unwrap(), qpoly(&[0, 1]));
        assert_eq!(Polynomial::<Rational>::zero().squarefree_part(), Err(AlgebraError::ZeroPolynomial));
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(qpoly(&[4, 5, -12, 7]).reverse(3).unwrap(), qpoly(&[7, -12, 5, 4]));
        assert_eq!(qpoly(&[2, 0, 0, 1]).reverse(3).unwrap(), qpoly(&[1, 0, 0, 2]));
        assert_eq!(qpoly(&[0, 1, 3]).reverse(2), Err(AlgebraError::ZeroEndCoefficient));
    }

    #[test]
    fn shift_and_division() {
        let f = qpoly(&[1, 2, 3]);
        let shifted = f.shift(&rat(1));
        // 3(x+1)^2 + 2(x+1) + 1 = 3x^2 + 8x + 6
        assert_eq!(shifted, qpoly(&[6, 8, 3]));
        let (q, r) = f.div_rem(&qpoly(&[1, 1])).unwrap();
        assert_eq!(&(&q * &qpoly(&[1, 1])) + &r, f);
    }

    #[test]
    fn extended_gcd_bezout() {
        let a = qpoly(&[-1, 0, 0, 1]);
        let b = qpoly(&[1, 0, 1]);
        let (g, s, t) = a.extended_gcd(&b).unwrap();
        assert_eq!(&(&s * &a) + &(&t * &b), g);
        assert_eq!(g, qpoly(&[1]));
    }

    #[test]
    fn resultant_matches_root_product() {
        // res(x^2 - 2, x - 3) = (sqrt2 - 3)(-sqrt2 - 3) = 7
        assert_eq!(qpoly(&[-2, 0, 1]).resultant(&qpoly(&[-3, 1])).unwrap(), rat(7));
        assert_eq!(qpoly(&[-1, 0, 1]).resultant(&qpoly(&[1, 1])).unwrap(), rat(0));
        assert_eq!(qpoly(&[5]).resultant(&qpoly(&[1, 0, 1])).unwrap(), rat(25));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let f = qpoly(&[3, -1, 0, 2]);
        let pts: Vec<_> = (0..4).map(|x| (rat(x), f.eval(&rat(x)).unwrap())).collect();
        assert_eq!(Polynomial::interpolate(&pts).unwrap(), f);
    }

    #[test]
    fn display_form() {
        assert_eq!(qpoly(&[4, 10000, -12, 7]).to_string(), "7x^3 - 12x^2 + 10000x + 4");
        assert_eq!(qpoly(&[-1, 1]).to_string(), "x - 1");
        assert_eq!(Polynomial::new(vec![frac(-1, 4), rat(0), frac(1, 6)]).to_string(), "1/6x^2 - 1/4");
    }
}
