use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{AlgebraError, GameError};
use crate::finitefield::{fq_field, FqElement, FqField};
use crate::numberfield::{NfElement, NumberField};
use crate::poly::Scalar;
use crate::rational::{denominator_divides_power_of, is_integer, parse_rational, Rational};

/// Which elements of K = ℚ(θ) may be played.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Subring {
    /// All of K.
    Field,
    /// ℤ[θ]: integer power-basis coordinates.
    IntegerSpan,
}

/// The coefficient domain D. Reals and algebraically closed fields are played
/// with rational values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DomainSpec {
    Integers,
    Rationals,
    ZInvN(BigInt),
    NumberField(Arc<NumberField>, Subring),
    Reals,
    FiniteField(&'static FqField),
    AlgebraicallyClosed,
}

/// One coefficient value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Value {
    Rational(Rational),
    Nf(NfElement),
    Fq(FqElement),
}

impl Value {
    pub fn is_zero(&self) -> bool {
        match self {
            Value::Rational(r) => Zero::is_zero(r),
            Value::Nf(e) => Scalar::is_zero(e),
            Value::Fq(e) => Scalar::is_zero(e),
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Value::Rational(r) => Some(r),
            _ => None,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Rational(r) => write!(f, "{r}"),
            Value::Nf(e) => write!(f, "{e}"),
            Value::Fq(e) => write!(f, "{e}"),
        }
    }
}

/// Scalar types a game polynomial can be built over.
pub trait DomainScalar: Scalar {
    fn from_value(v: &Value) -> Option<Self>;
    fn into_value(self) -> Value;
}

impl DomainScalar for Rational {
    fn from_value(v: &Value) -> Option<Self> {
        v.as_rational().cloned()
    }
    fn into_value(self) -> Value {
        Value::Rational(self)
    }
}

impl DomainScalar for NfElement {
    fn from_value(v: &Value) -> Option<Self> {
        match v {
            Value::Nf(e) => Some(e.clone()),
            _ => None,
        }
    }
    fn into_value(self) -> Value {
        Value::Nf(self)
    }
}

impl DomainScalar for FqElement {
    fn from_value(v: &Value) -> Option<Self> {
        match v {
            Value::Fq(e) => Some(*e),
            _ => None,
        }
    }
    fn into_value(self) -> Value {
        Value::Fq(self)
    }
}

fn parse_int_list(text: &str) -> Result<Vec<BigInt>, GameError> {
    text.split(',')
        .map(|s| s.trim().parse::<BigInt>().map_err(|_| GameError::InvalidConfig(format!("bad integer {s:?}"))))
        .collect()
}

impl DomainSpec {
    pub fn number_field(minpoly: &[i64], subring: Subring) -> Result<Self, GameError> {
        Ok(DomainSpec::NumberField(NumberField::from_minpoly(minpoly)?, subring))
    }

    pub fn finite_field(p: u64, k: u32) -> Result<Self, GameError> {
        Ok(DomainSpec::FiniteField(fq_field(p, k)?))
    }

    /// Parses `integers`, `rationals`, `zinv:N`, `nf:c0,c1,…[:int]`, `reals`,
    /// `fq:p:k` or `closed`.
    pub fn parse(text: &str) -> Result<Self, GameError> {
        let parts: Vec<&str> = text.trim().split(':').collect();
        let domain = match parts.as_slice() {
            ["integers" | "z"] => DomainSpec::Integers,
            ["rationals" | "q"] => DomainSpec::Rationals,
            ["reals" | "r"] => DomainSpec::Reals,
            ["closed"] => DomainSpec::AlgebraicallyClosed,
            ["zinv", n] => DomainSpec::ZInvN(
                n.parse().map_err(|_| GameError::InvalidConfig(format!("bad N {n:?}")))?,
            ),
            ["nf", coeffs] | ["nf", coeffs, "field"] => {
                DomainSpec::NumberField(NumberField::new(parse_int_list(coeffs)?)?, Subring::Field)
            }
            ["nf", coeffs, "int"] => {
                DomainSpec::NumberField(NumberField::new(parse_int_list(coeffs)?)?, Subring::IntegerSpan)
            }
            ["fq", p, k] => {
                let p = p.parse().map_err(|_| GameError::InvalidConfig(format!("bad p {p:?}")))?;
                let k = k.parse().map_err(|_| GameError::InvalidConfig(format!("bad k {k:?}")))?;
                DomainSpec::finite_field(p, k)?
            }
            _ => return Err(GameError::InvalidConfig(format!("unknown domain {text:?}"))),
        };
        domain.validate()?;
        Ok(domain)
    }

    /// Inverse of [`DomainSpec::parse`].
    pub fn to_cli_string(&self) -> String {
        match self {
            DomainSpec::Integers => "integers".into(),
            DomainSpec::Rationals => "rationals".into(),
            DomainSpec::ZInvN(n) => format!("zinv:{n}"),
            DomainSpec::NumberField(k, sub) => {
                let coeffs: Vec<String> = k.minpoly().iter().map(|c| c.to_string()).collect();
                let suffix = if *sub == Subring::IntegerSpan { ":int" } else { "" };
                format!("nf:{}{suffix}", coeffs.join(","))
            }
            DomainSpec::Reals => "reals".into(),
            DomainSpec::FiniteField(f) => format!("fq:{}:{}", f.p(), f.k()),
            DomainSpec::AlgebraicallyClosed => "closed".into(),
        }
    }

    pub fn validate(&self) -> Result<(), GameError> {
        match self {
            DomainSpec::ZInvN(n) if *n < BigInt::from(2) => Err(GameError::InvalidConfig("N must be at least 2".into())),
            _ => Ok(()),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, DomainSpec::FiniteField(_))
    }

    /// `q` for finite fields.
    pub fn size(&self) -> Option<usize> {
        match self {
            DomainSpec::FiniteField(f) => Some(f.q()),
            _ => None,
        }
    }

    pub fn contains(&self, v: &Value) -> bool {
        match (self, v) {
            (DomainSpec::Integers, Value::Rational(r)) => is_integer(r),
            (DomainSpec::Rationals | DomainSpec::Reals | DomainSpec::AlgebraicallyClosed, Value::Rational(_)) => true,
            (DomainSpec::ZInvN(n), Value::Rational(r)) => denominator_divides_power_of(r.denom(), n),
            (DomainSpec::NumberField(k, sub), Value::Nf(e)) => {
                e.compatible(&k.one()) && (*sub == Subring::Field || e.has_integer_coords())
            }
            (DomainSpec::FiniteField(f), Value::Fq(e)) => e.field() == *f,
            _ => false,
        }
    }

    pub fn from_int(&self, n: i64) -> Value {
        match self {
            DomainSpec::NumberField(k, _) => Value::Nf(k.from_rational(Rational::from_integer(n.into()))),
            DomainSpec::FiniteField(f) => Value::Fq(f.from_int(n)),
            _ => Value::Rational(Rational::from_integer(n.into())),
        }
    }

    pub fn zero(&self) -> Value {
        self.from_int(0)
    }

    pub fn one(&self) -> Value {
        self.from_int(1)
    }

    /// Canonical enumeration: 0, 1, −1, 2, −2, … for infinite domains, index
    /// order for finite fields.
    pub fn small_values(&self) -> Box<dyn Iterator<Item = Value> + '_> {
        match self {
            DomainSpec::FiniteField(f) => Box::new(f.elements().map(Value::Fq)),
            _ => Box::new(
                std::iter::once(0)
                    .chain((1i64..).flat_map(|k| [k, -k]))
                    .map(move |k| self.from_int(k)),
            ),
        }
    }

    /// Parses a value typed by a player: `p/q` for rational domains,
    /// comma-separated coordinates for number fields and extension fields.
    pub fn parse_value(&self, text: &str) -> Result<Value, GameError> {
        let bad = |e: AlgebraError| GameError::NotInDomain { value: format!("{text:?} ({e})"), domain: self.to_string() };
        let value = match self {
            DomainSpec::NumberField(k, _) => {
                let coords = text.split(',').map(|s| parse_rational(s.trim())).collect::<Result<Vec<_>, _>>().map_err(bad)?;
                if coords.is_empty() || coords.len() > k.degree() {
                    return Err(GameError::NotInDomain { value: text.into(), domain: self.to_string() });
                }
                Value::Nf(k.element(coords))
            }
            DomainSpec::FiniteField(f) => {
                let coords = text
                    .split(',')
                    .map(|s| s.trim().parse::<u64>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| GameError::NotInDomain { value: text.into(), domain: self.to_string() })?;
                if coords.len() == 1 && f.k() > 1 {
                    return Err(GameError::NotInDomain { value: text.into(), domain: self.to_string() });
                }
                Value::Fq(f.from_coords(&coords).map_err(bad)?)
            }
            _ => Value::Rational(parse_rational(text.trim()).map_err(bad)?),
        };
        if !self.contains(&value) {
            return Err(GameError::NotInDomain { value: value.to_string(), domain: self.to_string() });
        }
        Ok(value)
    }
}

impl fmt::Display for DomainSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainSpec::Integers => f.write_str("Z"),
            DomainSpec::Rationals => f.write_str("Q"),
            DomainSpec::ZInvN(n) => write!(f, "Z[1/{n}]"),
            DomainSpec::NumberField(k, sub) => {
                let gen = match k.quadratic_radicand() {
                    Some(d) => format!("√{d}"),
                    None => "θ".into(),
                };
                let m = crate::poly::Polynomial::new(k.minpoly().iter().cloned().map(Rational::from_integer).collect());
                match sub {
                    Subring::Field => write!(f, "Q({gen})"),
                    Subring::IntegerSpan => write!(f, "Z[{gen}]"),
                }?;
                if k.quadratic_radicand().is_none() {
                    write!(f, " with m(θ) = {}", m)?;
                }
                Ok(())
            }
            DomainSpec::Reals => f.write_str("R (rational moves)"),
            DomainSpec::FiniteField(field) => write!(f, "F_{}", field.q()),
            DomainSpec::AlgebraicallyClosed => f.write_str("algebraically closed (rational moves)"),
        }
    }
}

