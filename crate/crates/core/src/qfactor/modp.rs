//! Polynomials over a small prime field 𝔽_p, coefficients as `u64`, low
//! degree first. Used only as the modular image inside factorization.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type Poly = Vec<u64>;

fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn reduce(f: &[BigInt], p: u64) -> Poly {
    let pb = BigInt::from(p);
    trim(f.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect())
}

pub fn inv(a: u64, p: u64) -> u64 {
    pow_scalar(a, p - 2, p)
}

fn pow_scalar(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

pub fn deg(a: &Poly) -> Option<usize> {
    a.len().checked_sub(1)
}

#[cfg(test)]
pub fn add(a: &Poly, b: &Poly, p: u64) -> Poly {
    let n = a.len().max(b.len());
    trim((0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
        .collect())
}

pub fn sub(a: &Poly, b: &Poly, p: u64) -> Poly {
    let n = a.len().max(b.len());
    trim((0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
        .collect())
}

pub fn mul(a: &Poly, b: &Poly, p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

pub fn scale(a: &Poly, c: u64, p: u64) -> Poly {
    trim(a.iter().map(|&x| x * c % p).collect())
}

pub fn monic(a: &Poly, p: u64) -> Poly {
    match a.last() {
        Some(&lc) => scale(a, inv(lc, p), p),
        None => Vec::new(),
    }
}

pub fn div_rem(a: &Poly, b: &Poly, p: u64) -> (Poly, Poly) {
    let db = deg(b).expect("division by zero polynomial");
    let binv = inv(b[db], p);
    let mut r = a.clone();
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![0u64; r.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db] * binv % p;
        q[k] = c;
        if c != 0 {
            for (j, &bj) in b.iter().enumerate() {
                r[k + j] = (r[k + j] + p - c * bj % p) % p;
            }
        }
    }
    r.truncate(db);
    (trim(q), trim(r))
}

pub fn rem(a: &Poly, b: &Poly, p: u64) -> Poly {
    div_rem(a, b, p).1
}

pub fn gcd(a: &Poly, b: &Poly, p: u64) -> Poly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

/// `(s, t)` with `s·a + t·b = 1`, for coprime `a`, `b`.
pub fn bezout(a: &Poly, b: &Poly, p: u64) -> (Poly, Poly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (vec![1], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = div_rem(&r0, &r1, p);
        let s = sub(&s0, &mul(&q, &s1, p), p);
        let t = sub(&t0, &mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    debug_assert_eq!(r0.len(), 1, "bezout on non-coprime inputs");
    let c = inv(r0[0], p);
    (scale(&s0, c, p), scale(&t0, c, p))
}

pub fn derivative(a: &Poly, p: u64) -> Poly {
    trim(a.iter().enumerate().skip(1).map(|(i, &c)| (i as u64 % p) * c % p).collect())
}

pub fn pow_mod(base: &Poly, exp: &BigUint, modulus: &Poly, p: u64) -> Poly {
    let mut acc: Poly = vec![1];
    let base = rem(base, modulus, p);
    for i in (0..exp.bits()).rev() {
        acc = rem(&mul(&acc, &acc, p), modulus, p);
        if exp.bit(i) {
            acc = rem(&mul(&acc, &base, p), modulus, p);
        }
    }
    acc
}

pub fn is_squarefree(a: &Poly, p: u64) -> bool {
    gcd(a, &derivative(a, p), p).len() == 1
}

/// Distinct-degree factorization of a monic squarefree polynomial: pairs of
/// (product of all irreducible factors of degree `d`, `d`).
fn distinct_degree(f: &Poly, p: u64) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x: Poly = vec![0, 1];
    let mut h = x.clone();
    let pb = BigUint::from(p);
    let mut d = 0;
    while deg(&rest).unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = pow_mod(&h, &pb, &rest, p);
        let g = gcd(&sub(&h, &x, p), &rest, p);
        if g.len() > 1 {
            out.push((g.clone(), d));
            rest = div_rem(&rest, &g, p).0;
            h = rem(&h, &rest, p);
        }
    }
    if deg(&rest).unwrap_or(0) > 0 {
        let d = deg(&rest).unwrap();
        out.push((rest, d));
    }
    out
}

/// Cantor–Zassenhaus equal-degree splitting (odd `p`).
fn equal_degree(f: &Poly, d: usize, p: u64, rng: &mut ChaCha8Rng) -> Vec<Poly> {
    let n = deg(f).unwrap();
    if n == d {
        return vec![f.clone()];
    }
    let exp = (BigUint::from(p).pow(d as u32) - BigUint::one()) >> 1;
    loop {
        let a: Poly = trim((0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.len() < 2 {
            continue;
        }
        let b = sub(&pow_mod(&a, &exp, f, p), &vec![1], p);
        let g = gcd(&b, f, p);
        if g.len() > 1 && g.len() < f.len() {
            let h = div_rem(f, &g, p).0;
            let mut out = equal_degree(&g, d, p, rng);
            out.extend(equal_degree(&monic(&h, p), d, p, rng));
            return out;
        }
    }
}

/// Monic irreducible factors of a monic squarefree polynomial over 𝔽_p,
/// `p` odd. Output sorted for determinism.
pub fn factor_squarefree(f: &Poly, p: u64, rng: &mut ChaCha8Rng) -> Vec<Poly> {
    assert!(p % 2 == 1, "equal-degree splitting needs odd p");
    let mut out = Vec::new();
    for (g, d) in distinct_degree(f, p) {
        out.extend(equal_degree(&g, d, p, rng));
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

pub fn to_bigint(a: &Poly) -> Vec<BigInt> {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn product(fs: &[Poly], p: u64) -> Poly {
        fs.iter().fold(vec![1], |acc, f| mul(&acc, f, p))
    }

    #[test]
    fn splits_completely_split_polynomial() {
        let p = 7;
        // (x-1)(x-2)(x-3)(x^2+1) over F_7; x^2+1 irreducible since -1 is a non-residue mod 7
        let f = product(&[vec![6, 1], vec![5, 1], vec![4, 1], vec![1, 0, 1]], p);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let fs = factor_squarefree(&f, p, &mut rng);
        assert_eq!(fs, vec![vec![4, 1], vec![5, 1], vec![6, 1], vec![1, 0, 1]]);
        assert_eq!(product(&fs, p), f);
    }

    #[test]
    fn bezout_identity() {
        let p = 11;
        let a = vec![3, 0, 1];
        let b = vec![5, 1];
        let (s, t) = bezout(&a, &b, p);
        assert_eq!(add(&mul(&s, &a, p), &mul(&t, &b, p), p), vec![1]);
    }

    #[test]
    fn frobenius_power() {
        let p = 5;
        let m = vec![2, 0, 1]; // x^2 + 2, irreducible mod 5
        // x^(p^2) ≡ x in F_25
        let x = vec![0, 1];
        assert_eq!(pow_mod(&x, &BigUint::from(25u32), &m, p), x);
    }
}
