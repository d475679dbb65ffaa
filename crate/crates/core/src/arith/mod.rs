//! Exact integer primitives: gcd, elementary symmetric polynomials and
//! factorization. Everything is arbitrary precision.

mod factor;

pub use factor::{factorize, factorize_with, is_prime, FactorConfig, Factorization};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Non-negative gcd; `gcd(0, 0) = 0`.
pub fn gcd(x: &BigInt, y: &BigInt) -> BigInt {
    x.gcd(y)
}

/// `sigma_k(xs)`: sum over all `k`-subsets of the product of their entries.
///
/// Computed as the coefficient of `y^(m-k)` in `prod_j (y + x_j)`, built up
/// one linear factor at a time.
pub fn elementary_symmetric(k: usize, xs: &[BigInt]) -> Result<BigInt> {
    if k > xs.len() {
        return Err(Error::SymmetricIndex { k, len: xs.len() });
    }
    let mut e = vec![BigInt::zero(); k + 1];
    e[0] = BigInt::one();
    for (n, x) in xs.iter().enumerate() {
        for j in (1..=k.min(n + 1)).rev() {
            let term = &e[j - 1] * x;
            e[j] += term;
        }
    }
    Ok(e.swap_remove(k))
}

/// All of `sigma_0 .. sigma_m` at once.
pub fn elementary_symmetric_all(xs: &[BigInt]) -> Vec<BigInt> {
    let mut e = vec![BigInt::zero(); xs.len() + 1];
    e[0] = BigInt::one();
    for (n, x) in xs.iter().enumerate() {
        for j in (1..=n + 1).rev() {
            let term = &e[j - 1] * x;
            e[j] += term;
        }
    }
    e
}

#[cfg(test)]
pub(crate) fn big(v: i64) -> BigInt {
    BigInt::from(v)
}
