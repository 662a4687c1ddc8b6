//! Exact count of distinct real roots via Sturm chains.

use num_traits::{Signed, Zero};

use crate::error::AlgebraError;
use crate::poly::Polynomial;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmChain {
    pub chain: Vec<Polynomial<Rational>>,
    pub sign_at_minus_inf: Vec<i8>,
    pub sign_at_plus_inf: Vec<i8>,
}

fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

fn variations(signs: &[i8]) -> usize {
    let nonzero: Vec<i8> = signs.iter().copied().filter(|&s| s != 0).collect();
    nonzero.windows(2).filter(|w| w[0] != w[1]).count()
}

impl SturmChain {
    pub fn new(f: &Polynomial<Rational>) -> Result<Self, AlgebraError> {
        match f.degree() {
            None => return Err(AlgebraError::ZeroPolynomial),
            Some(0) => return Err(AlgebraError::ConstantPolynomial),
            _ => {}
        }
        let p0 = f.squarefree_part()?;
        let mut chain = vec![p0.clone(), p0.derivative()];
        loop {
            let n = chain.len();
            let r = chain[n - 2].rem(&chain[n - 1])?;
            if r.is_zero() {
                break;
            }
            chain.push(-&r);
        }
        let sign_at_plus_inf = chain.iter().map(|p| sign(p.leading().unwrap())).collect();
        let sign_at_minus_inf = chain
            .iter()
            .map(|p| {
                let s = sign(p.leading().unwrap());
                if p.degree().unwrap() % 2 == 1 {
                    -s
                } else {
                    s
                }
            })
            .collect();
        Ok(SturmChain { chain, sign_at_minus_inf, sign_at_plus_inf })
    }

    /// Sign variations of the chain evaluated at `x`.
    pub fn variations_at(&self, x: &Rational) -> usize {
        let signs: Vec<i8> = self.chain.iter().map(|p| p.sign_at(x)).collect();
        variations(&signs)
    }

    pub fn root_count(&self) -> usize {
        variations(&self.sign_at_minus_inf) - variations(&self.sign_at_plus_inf)
    }

    /// Distinct roots in the half-open interval `(a, b]`.
    pub fn roots_between(&self, a: &Rational, b: &Rational) -> usize {
        self.variations_at(a).saturating_sub(self.variations_at(b))
    }
}

/// Number of distinct real roots.
pub fn sturm_real_root_count(f: &Polynomial<Rational>) -> Result<usize, AlgebraError> {
    Ok(SturmChain::new(f)?.root_count())
}
