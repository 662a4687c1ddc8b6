//! 𝔽_q for the small prime powers the game supports, with table-driven
//! arithmetic, root finding by enumeration, permutation testing and the
//! degree-3 Dickson classification.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use crate::error::AlgebraError;
use crate::poly::{Polynomial, Scalar};
use crate::rational::is_prime_u64;

/// `(p, k, modulus low degree first)`; the modulus is monic of degree k.
const TABLE: &[(u64, u32, &[u64])] = &[
    (2, 1, &[0, 1]),
    (3, 1, &[0, 1]),
    (5, 1, &[0, 1]),
    (7, 1, &[0, 1]),
    (11, 1, &[0, 1]),
    (13, 1, &[0, 1]),
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (3, 2, &[1, 0, 1]),
];

pub struct FqField {
    p: u64,
    k: u32,
    q: usize,
    modulus: Vec<u64>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
    square: Vec<bool>,
}

fn coords_of(idx: usize, p: u64, k: u32) -> Vec<u64> {
    let mut rest = idx as u64;
    (0..k)
        .map(|_| {
            let c = rest % p;
            rest /= p;
            c
        })
        .collect()
}

fn index_of(coords: &[u64], p: u64) -> usize {
    coords.iter().rev().fold(0, |acc, &c| acc * p + c) as usize
}

fn mul_mod(a: &[u64], b: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    let k = modulus.len() - 1;
    let mut prod = vec![0u64; 2 * k];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for top in (k..prod.len()).rev() {
        let c = prod[top];
        if c == 0 {
            continue;
        }
        for (j, &m) in modulus.iter().enumerate() {
            let t = top - k + j;
            prod[t] = (prod[t] + p * p - c * m) % p;
        }
    }
    prod.truncate(k);
    prod
}

impl FqField {
    fn build(p: u64, k: u32, modulus: &[u64]) -> Self {
        let q = p.pow(k) as usize;
        let coords: Vec<Vec<u64>> = (0..q).map(|i| coords_of(i, p, k)).collect();
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            for b in 0..q {
                let sum: Vec<u64> = coords[a].iter().zip(&coords[b]).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = index_of(&sum, p) as u8;
                mul[a * q + b] = index_of(&mul_mod(&coords[a], &coords[b], modulus, p), p) as u8;
            }
        }
        let neg = (0..q).map(|a| (0..q).find(|&b| add[a * q + b] == 0).unwrap() as u8).collect();
        let inv = (0..q)
            .map(|a| (1..q).find(|&b| mul[a * q + b] == 1).unwrap_or(0) as u8)
            .collect();
        let mut square = vec![false; q];
        for a in 0..q {
            square[mul[a * q + a] as usize] = true;
        }
        FqField { p, k, q, modulus: modulus.to_vec(), add, mul, neg, inv, square }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    /// Monic modulus over 𝔽_p, low degree first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn element(&'static self, idx: usize) -> FqElement {
        assert!(idx < self.q, "element index out of range");
        FqElement { field: self, idx: idx as u8 }
    }

    /// Element from power-basis coordinates; each must lie in `[0, p)`.
    pub fn from_coords(&'static self, coords: &[u64]) -> Result<FqElement, AlgebraError> {
        if coords.len() != self.k as usize || coords.iter().any(|&c| c >= self.p) {
            return Err(AlgebraError::Parse(format!(
                "expected {} coordinates in [0, {})",
                self.k, self.p
            )));
        }
        Ok(self.element(index_of(coords, self.p)))
    }

    pub fn from_int(&'static self, n: i64) -> FqElement {
        self.element(n.rem_euclid(self.p as i64) as usize)
    }

    pub fn zero(&'static self) -> FqElement {
        self.element(0)
    }

    pub fn one(&'static self) -> FqElement {
        self.element(1)
    }

    /// All q elements in canonical order: 0, 1, … by index.
    pub fn elements(&'static self) -> impl Iterator<Item = FqElement> {
        (0..self.q).map(move |i| self.element(i))
    }
}

impl PartialEq for FqField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k
    }
}

impl Eq for FqField {}

impl fmt::Debug for FqField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.q)
    }
}

fn table() -> &'static [FqField] {
    static FIELDS: OnceLock<Vec<FqField>> = OnceLock::new();
    FIELDS.get_or_init(|| TABLE.iter().map(|&(p, k, m)| FqField::build(p, k, m)).collect())
}

/// The supported field 𝔽_{p^k} with its pinned modulus.
pub fn fq_field(p: u64, k: u32) -> Result<&'static FqField, AlgebraError> {
    if !is_prime_u64(p) {
        return Err(AlgebraError::UnsupportedField { p, k, reason: format!("{p} is not prime") });
    }
    if !(1..=3).contains(&k) {
        return Err(AlgebraError::UnsupportedField { p, k, reason: "extension degree must be 1, 2 or 3".into() });
    }
    table().iter().find(|f| f.p == p && f.k == k).ok_or_else(|| AlgebraError::UnsupportedField {
        p,
        k,
        reason: "not in the built-in field table".into(),
    })
}

/// Every supported field, smallest q first.
pub fn supported_fields() -> Vec<&'static FqField> {
    let mut out: Vec<&'static FqField> = table().iter().collect();
    out.sort_by_key(|f| (f.q, f.p));
    out
}

/// An element of a supported 𝔽_q, stored by its index `Σ cᵢ pⁱ`.
#[derive(Clone, Copy)]
pub struct FqElement {
    field: &'static FqField,
    idx: u8,
}

impl FqElement {
    pub fn field(&self) -> &'static FqField {
        self.field
    }

    pub fn index(&self) -> usize {
        self.idx as usize
    }

    pub fn coords(&self) -> Vec<u64> {
        coords_of(self.idx as usize, self.field.p, self.field.k)
    }

    pub fn is_square(&self) -> bool {
        self.field.square[self.idx as usize]
    }

    fn with(&self, idx: u8) -> Self {
        FqElement { field: self.field, idx }
    }
}

impl PartialEq for FqElement {
    fn eq(&self, other: &Self) -> bool {
        self.idx == other.idx && self.field == other.field
    }
}

impl Eq for FqElement {}

impl Hash for FqElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.idx.hash(state);
    }
}

impl PartialOrd for FqElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FqElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.idx.cmp(&other.idx)
    }
}

impl Scalar for FqElement {
    fn zero_like(&self) -> Self {
        self.with(0)
    }
    fn one_like(&self) -> Self {
        self.with(1)
    }
    fn is_zero(&self) -> bool {
        self.idx == 0
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.with(self.field.add[self.index() * self.field.q + rhs.index()])
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negated())
    }
    fn times(&self, rhs: &Self) -> Self {
        self.with(self.field.mul[self.index() * self.field.q + rhs.index()])
    }
    fn negated(&self) -> Self {
        self.with(self.field.neg[self.index()])
    }
    fn inverse(&self) -> Option<Self> {
        (self.idx != 0).then(|| self.with(self.field.inv[self.index()]))
    }
    fn int_like(&self, n: i64) -> Self {
        self.field.from_int(n)
    }
    fn compatible(&self, other: &Self) -> bool {
        self.field == other.field
    }
}

impl fmt::Debug for FqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for FqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords = self.coords();
        let mut terms = Vec::new();
        for (i, &c) in coords.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coeff = if c == 1 && i > 0 { String::new() } else { c.to_string() };
            terms.push(match i {
                0 => coeff,
                1 => format!("{coeff}t"),
                _ => format!("{coeff}t^{i}"),
            });
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// Values `f(b)` for every b in canonical order, plus the roots among them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FqRootTable {
    pub values: Vec<FqElement>,
    pub roots: Vec<FqElement>,
}

impl FqRootTable {
    /// Re-evaluates every entry.
    pub fn verify(&self, field: &'static FqField, f: &Polynomial<FqElement>) -> bool {
        if self.values.len() != field.q() {
            return false;
        }
        let fresh = fq_roots(field, f);
        fresh == *self
    }
}

pub fn fq_roots(field: &'static FqField, f: &Polynomial<FqElement>) -> FqRootTable {
    let mut values = Vec::with_capacity(field.q());
    let mut roots = Vec::new();
    for b in field.elements() {
        let v = f.eval(&b).expect("coefficients belong to the field");
        if v.is_zero() {
            roots.push(b);
        }
        values.push(v);
    }
    FqRootTable { values, roots }
}

pub fn is_permutation_poly(field: &'static FqField, g: &Polynomial<FqElement>) -> bool {
    let mut seen = vec![false; field.q()];
    for b in field.elements() {
        let v = g.eval(&b).expect("coefficients belong to the field").index();
        if seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

/// Membership in the classified family of degree-3 permutation polynomials,
/// decided from the coefficients alone.
pub fn dickson_predicate_deg3(field: &'static FqField, g: &Polynomial<FqElement>) -> Result<bool, AlgebraError> {
    if g.degree() != Some(3) {
        return Err(AlgebraError::DegreeMismatch { expected: 3, got: g.degree().unwrap_or(0) });
    }
    let c = g.coeffs();
    let (a1, a2, a3) = (c[1], c[2], c[3]);
    if field.p == 3 {
        if !a2.is_zero() {
            return Ok(false);
        }
        if a1.is_zero() {
            return Ok(true);
        }
        let a = a1.negated().times(&a3.inverse().unwrap());
        return Ok(!a.is_square());
    }
    if field.q % 3 == 1 {
        return Ok(false);
    }
    // x → x − a₂/(3a₃) kills the x² term; what remains of x¹ must vanish.
    let three_a3 = a3.times(&field.from_int(3));
    let reduced = a1.minus(&a2.times(&a2).times(&three_a3.inverse().unwrap()));
    Ok(reduced.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(field: &'static FqField, coeffs: &[i64]) -> Polynomial<FqElement> {
        Polynomial::new(coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    #[test]
    fn construction() {
        assert_eq!(fq_field(2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(fq_field(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert!(matches!(fq_field(4, 1), Err(AlgebraError::UnsupportedField { p: 4, .. })));
        assert!(fq_field(17, 1).is_err());
        assert!(fq_field(5, 2).is_err());
        assert_eq!(supported_fields().iter().map(|f| f.q()).collect::<Vec<_>>(), vec![2, 3, 4, 5, 7, 8, 9, 11, 13]);
    }

    #[test]
    fn moduli_are_rootless() {
        for f in supported_fields().into_iter().filter(|f| f.k() > 1) {
            let p = f.p();
            assert!((0..p).all(|x| f.modulus().iter().rev().fold(0, |acc, &c| (acc * x + c) % p) != 0));
        }
    }

    #[test]
    fn extension_arithmetic() {
        let f9 = fq_field(3, 2).unwrap();
        let t = f9.from_coords(&[0, 1]).unwrap();
        assert_eq!(t.times(&t), f9.from_int(-1));
        let f8 = fq_field(2, 3).unwrap();
        let t = f8.from_coords(&[0, 1, 0]).unwrap();
        assert_eq!(t.pow(3), t.plus(&f8.one()));
        assert_eq!(t.pow(7), f8.one());
        for f in supported_fields() {
            for a in f.elements().skip(1) {
                assert_eq!(a.times(&a.inverse().unwrap()), f.one());
            }
        }
    }

    #[test]
    fn coords_round_trip_and_display() {
        let f9 = fq_field(3, 2).unwrap();
        for e in f9.elements() {
            assert_eq!(f9.from_coords(&e.coords()).unwrap(), e);
        }
        assert_eq!(f9.from_coords(&[1, 2]).unwrap().to_string(), "2t + 1");
        assert_eq!(f9.zero().to_string(), "0");
        assert!(f9.from_coords(&[3, 0]).is_err());
        assert!(f9.from_coords(&[1]).is_err());
    }

    #[test]
    fn root_examples() {
        let f2 = fq_field(2, 1).unwrap();
        assert!(fq_roots(f2, &poly(f2, &[1, 1, 1])).roots.is_empty());
        let f3 = fq_field(3, 1).unwrap();
        assert_eq!(fq_roots(f3, &poly(f3, &[0, -1, 0, 1])).roots.len(), 3);
        let f5 = fq_field(5, 1).unwrap();
        let table = fq_roots(f5, &poly(f5, &[1, 1, 1]));
        assert!(table.roots.is_empty());
        let values: Vec<usize> = table.values.iter().map(|v| v.index()).collect();
        assert_eq!(values, vec![1, 3, 2, 3, 1]);
        assert!(table.verify(f5, &poly(f5, &[1, 1, 1])));
    }

    #[test]
    fn permutation_examples() {
        let f3 = fq_field(3, 1).unwrap();
        assert!(is_permutation_poly(f3, &poly(f3, &[0, 0, 0, 1])));
        let f7 = fq_field(7, 1).unwrap();
        assert!(!is_permutation_poly(f7, &poly(f7, &[0, 0, 0, 1])));
        let f2 = fq_field(2, 1).unwrap();
        assert!(is_permutation_poly(f2, &poly(f2, &[0, 0, 1])));
    }

    #[test]
    fn dickson_examples() {
        let f5 = fq_field(5, 1).unwrap();
        assert_eq!(dickson_predicate_deg3(f5, &poly(f5, &[0, 0, 0, 1])), Ok(true));
        let f7 = fq_field(7, 1).unwrap();
        assert_eq!(dickson_predicate_deg3(f7, &poly(f7, &[0, 0, 0, 1])), Ok(false));
        let f9 = fq_field(3, 2).unwrap();
        let nonsquare = f9.elements().find(|e| !e.is_square()).unwrap();
        let g = Polynomial::new(vec![f9.zero(), nonsquare.negated(), f9.zero(), f9.one()]);
        assert_eq!(dickson_predicate_deg3(f9, &g), Ok(true));
        assert!(dickson_predicate_deg3(f5, &poly(f5, &[0, 0, 1])).is_err());
    }

    #[test]
    fn dickson_agrees_with_enumeration() {
        for f in supported_fields().into_iter().filter(|f| f.q() <= 9) {
            let els: Vec<FqElement> = f.elements().collect();
            for &a3 in &els[1..] {
                for &a2 in &els {
                    for &a1 in &els {
                        let g = Polynomial::new(vec![f.zero(), a1, a2, a3]);
                        assert_eq!(dickson_predicate_deg3(f, &g), Ok(is_permutation_poly(f, &g)), "{f:?} {g}");
                    }
                }
            }
        }
    }
}
