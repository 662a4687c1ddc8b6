//! Complete factorization of rational univariate polynomials.
//!
//! Route: squarefree decomposition over ℚ, then for each squarefree layer a
//! factorization modulo the smallest suitable odd prime, Hensel lifting past
//! the Mignotte bound and Zassenhaus subset recombination.

mod modp;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::AlgebraError;
use crate::poly::Polynomial;
use crate::rational::Rational;

/// `unit · Π factorᵢ^multᵢ`, factors primitive with integer coefficients and
/// positive leading coefficient, irreducible over ℚ, pairwise distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationQ {
    pub unit: Rational,
    pub factors: Vec<(Polynomial<Rational>, u32)>,
}

impl FactorizationQ {
    pub fn expand(&self) -> Polynomial<Rational> {
        let mut acc = Polynomial::constant(self.unit.clone());
        for (f, m) in &self.factors {
            for _ in 0..*m {
                acc = &acc * f;
            }
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, m)| *m == 1)
    }
}

type IntPoly = Vec<BigInt>;

fn trim(mut a: IntPoly) -> IntPoly {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

fn content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Primitive part with positive leading coefficient.
fn primitive(a: IntPoly) -> IntPoly {
    let a = trim(a);
    let mut c = content(&a);
    if a.last().is_some_and(Signed::is_negative) {
        c = -c;
    }
    if c.is_zero() {
        return a;
    }
    a.into_iter().map(|x| x / &c).collect()
}

fn to_int_poly(f: &Polynomial<Rational>) -> IntPoly {
    let l = crate::rational::common_denominator(f.coeffs());
    primitive(
        f.coeffs()
            .iter()
            .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
            .collect(),
    )
}

fn to_rational_poly(a: &[BigInt]) -> Polynomial<Rational> {
    Polynomial::new(a.iter().map(|c| Rational::from_integer(c.clone())).collect())
}

fn int_mul(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Exact quotient `a / b` over ℤ, `None` if `b` does not divide `a`.
fn int_div_exact(a: &[BigInt], b: &[BigInt]) -> Option<IntPoly> {
    let db = b.len().checked_sub(1)?;
    if a.len() <= db {
        return if a.is_empty() { Some(Vec::new()) } else { None };
    }
    let lc = &b[db];
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for k in (0..q.len()).rev() {
        let (c, m) = r[k + db].div_rem(lc);
        if !m.is_zero() {
            return None;
        }
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                r[k + j] -= &c * bj;
            }
        }
        q[k] = c;
    }
    r.iter().all(Zero::is_zero).then(|| trim(q))
}

fn mod_sym(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

/// Lifts `f ≡ g·h (mod p)` to `(mod p^k)`; `f` monic modulo `p^k`, `g`, `h`
/// monic and coprime modulo `p`.
fn lift_two(f: &[BigInt], g0: &modp::Poly, h0: &modp::Poly, p: u64, k: u32) -> (IntPoly, IntPoly) {
    let (s, t) = modp::bezout(g0, h0, p);
    let pb = BigInt::from(p);
    let mut g = modp::to_bigint(g0);
    let mut h = modp::to_bigint(h0);
    let mut pj = pb.clone();
    for _ in 1..k {
        let pj1 = &pj * &pb;
        let gh = int_mul(&g, &h);
        let n = f.len().max(gh.len());
        let diff: IntPoly = (0..n)
            .map(|i| {
                let a = f.get(i).cloned().unwrap_or_default();
                let b = gh.get(i).cloned().unwrap_or_default();
                (a - b).mod_floor(&pj1) / &pj
            })
            .collect();
        let e = modp::reduce(&diff, p);
        let dg = modp::rem(&modp::mul(&t, &e, p), g0, p);
        let dh = modp::rem(&modp::mul(&s, &e, p), h0, p);
        for (i, c) in dg.iter().enumerate() {
            g[i] += &pj * c;
        }
        for (i, c) in dh.iter().enumerate() {
            h[i] += &pj * c;
        }
        pj = pj1;
    }
    (g, h)
}

fn hensel_lift(f: &[BigInt], factors: &[modp::Poly], p: u64, k: u32) -> Vec<IntPoly> {
    let pk = BigInt::from(p).pow(k);
    let lc = f.last().unwrap();
    let lc_inv = lc.extended_gcd(&pk).x.mod_floor(&pk);
    let mut current: IntPoly = f.iter().map(|c| (c * &lc_inv).mod_floor(&pk)).collect();
    let mut out = Vec::with_capacity(factors.len());
    for idx in 0..factors.len() - 1 {
        let g0 = &factors[idx];
        let h0 = factors[idx + 1..]
            .iter()
            .fold(vec![1u64], |acc, x| modp::mul(&acc, x, p));
        let (g, h) = lift_two(&current, g0, &h0, p, k);
        out.push(g.into_iter().map(|c| c.mod_floor(&pk)).collect());
        current = h.into_iter().map(|c| c.mod_floor(&pk)).collect();
    }
    out.push(current);
    out
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let s = idx.len();
    for i in (0..s).rev() {
        if idx[i] < n - s + i {
            idx[i] += 1;
            for j in i + 1..s {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Irreducible factors of a primitive squarefree integer polynomial.
fn factor_squarefree_primitive(g: IntPoly) -> Vec<IntPoly> {
    let n = g.len() - 1;
    if n <= 1 {
        return vec![g];
    }
    if g[0].is_zero() {
        let mut out = vec![vec![BigInt::zero(), BigInt::one()]];
        out.extend(factor_squarefree_primitive(g[1..].to_vec()));
        return out;
    }
    let lc = g[n].clone();
    let p = (3u64..)
        .step_by(2)
        .filter(|&p| crate::rational::is_prime_u64(p))
        .find(|&p| !(&lc % p).is_zero() && modp::is_squarefree(&modp::reduce(&g, p), p))
        .expect("some prime avoids the discriminant");
    let mut rng = ChaCha8Rng::seed_from_u64(p);
    let image = modp::monic(&modp::reduce(&g, p), p);
    let modular = modp::factor_squarefree(&image, p, &mut rng);
    if modular.len() == 1 {
        return vec![g];
    }

    let norm2 = g.iter().map(|c| c * c).sum::<BigInt>().sqrt() + 1;
    let bound = (BigInt::one() << n) * norm2 * lc.abs() * 2;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut pk = pb.clone();
    while pk <= bound {
        pk *= &pb;
        k += 1;
    }
    let mut lifted = hensel_lift(&g, &modular, p, k);

    let mut rest = g;
    let mut out = Vec::new();
    let mut s = 1;
    while 2 * s <= lifted.len() {
        let mut idx: Vec<usize> = (0..s).collect();
        let mut found = None;
        loop {
            let lead = rest.last().unwrap().clone();
            let cand = idx
                .iter()
                .fold(vec![lead], |acc, &i| {
                    int_mul(&acc, &lifted[i]).iter().map(|c| c.mod_floor(&pk)).collect()
                });
            let cand = primitive(cand.iter().map(|c| mod_sym(c, &pk)).collect());
            if let Some(q) = int_div_exact(&rest, &cand) {
                found = Some((cand, q));
                break;
            }
            if !next_combination(&mut idx, lifted.len()) {
                break;
            }
        }
        match found {
            Some((factor, q)) => {
                out.push(factor);
                rest = q;
                for &i in idx.iter().rev() {
                    lifted.remove(i);
                }
            }
            None => s += 1,
        }
    }
    if rest.len() > 1 {
        out.push(primitive(rest));
    }
    out
}

/// Yun's squarefree decomposition over ℚ: monic pairwise coprime layers with
/// their multiplicities.
fn squarefree_decomposition(f: &Polynomial<Rational>) -> Result<Vec<(Polynomial<Rational>, u32)>, AlgebraError> {
    let f = f.monic()?;
    let df = f.derivative();
    if df.is_zero() {
        return Ok(Vec::new());
    }
    let a0 = f.gcd(&df)?;
    let mut b = f.div_rem(&a0)?.0;
    let c = df.div_rem(&a0)?.0;
    let mut d = &c - &b.derivative();
    let mut out = Vec::new();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d)?;
        let nb = b.div_rem(&a)?.0;
        let nc = d.div_rem(&a)?.0;
        d = &nc - &nb.derivative();
        b = nb;
        if a.degree().unwrap_or(0) > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    Ok(out)
}

fn canonical_order(a: &Polynomial<Rational>, b: &Polynomial<Rational>) -> std::cmp::Ordering {
    a.degree().cmp(&b.degree()).then_with(|| a.coeffs().cmp(b.coeffs()))
}

pub fn factor_over_q(f: &Polynomial<Rational>) -> Result<FactorizationQ, AlgebraError> {
    let lc = f.leading().ok_or(AlgebraError::ZeroPolynomial)?;
    let mut factors = Vec::new();
    for (layer, mult) in squarefree_decomposition(f)? {
        for factor in factor_squarefree_primitive(to_int_poly(&layer)) {
            factors.push((to_rational_poly(&factor), mult));
        }
    }
    factors.sort_by(|a, b| canonical_order(&a.0, &b.0).then(a.1.cmp(&b.1)));
    let lead_product = factors.iter().fold(Rational::one(), |acc, (g, m)| {
        let l = g.leading().unwrap();
        (0..*m).fold(acc, |a, _| a * l)
    });
    Ok(FactorizationQ { unit: lc / lead_product, factors })
}

pub fn is_irreducible_over_q(f: &Polynomial<Rational>) -> Result<bool, AlgebraError> {
    match f.degree() {
        None => return Err(AlgebraError::ZeroPolynomial),
        Some(0) => return Err(AlgebraError::ConstantPolynomial),
        _ => {}
    }
    let fac = factor_over_q(f)?;
    Ok(fac.factors.len() == 1 && fac.factors[0].1 == 1)
}
