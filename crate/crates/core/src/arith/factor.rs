//! Integer factorization: trial division, then Brent's variant of Pollard
//! rho on the remaining cofactor, with Miller-Rabin certifying every prime.
//!
//! The cofactor left after trial division must have at most
//! [`FactorConfig::max_digits`] decimal digits. The default of 24 keeps every
//! primality decision inside the range where the fixed Miller-Rabin base set
//! {2, 3, ..., 41} is deterministic (n < 3.3e24).

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

const MR_BASES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
// Extra bases used above the deterministic range.
const MR_EXTRA_BASES: [u32; 12] = [43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97];

const RHO_ATTEMPTS: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorConfig {
    /// Trial division covers all primes up to this bound.
    pub trial_bound: u64,
    /// Largest cofactor (in decimal digits) handed to rho.
    pub max_digits: usize,
    /// Seed for the rho polynomial constants.
    pub seed: u64,
}

impl Default for FactorConfig {
    fn default() -> Self {
        FactorConfig {
            trial_bound: 1_000_000,
            max_digits: 24,
            seed: 0x5eed_e5c4,
        }
    }
}

/// Signed prime factorization of a nonzero integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub sign: Sign,
    /// `(prime, exponent)` with primes strictly increasing.
    pub factors: Vec<(BigUint, u32)>,
}

impl Factorization {
    pub fn value(&self) -> BigInt {
        let mut m = BigUint::one();
        for (p, e) in &self.factors {
            m *= num_traits::pow(p.clone(), *e as usize);
        }
        BigInt::from_biguint(self.sign, m)
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigUint> {
        self.factors.iter().map(|(p, _)| p)
    }
}

pub fn factorize(n: &BigInt) -> Result<Factorization> {
    factorize_with(n, &FactorConfig::default())
}

pub fn factorize_with(n: &BigInt, cfg: &FactorConfig) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::FactorZero);
    }
    let sign = if n.sign() == Sign::Minus {
        Sign::Minus
    } else {
        Sign::Plus
    };
    let mut m = n.magnitude().clone();
    let mut primes: Vec<BigUint> = Vec::new();

    trial_divide(&mut m, cfg.trial_bound, &mut primes);

    if !m.is_one() {
        let digits = m.to_str_radix(10).len();
        if digits > cfg.max_digits {
            return Err(Error::FactorizationIncomplete {
                n: n.clone(),
                digits,
                bound: cfg.max_digits,
            });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let mut stack = vec![m];
        while let Some(x) = stack.pop() {
            if x.is_one() {
                continue;
            }
            if is_prime(&x) {
                primes.push(x);
                continue;
            }
            let d = find_divisor(&x, &mut rng).ok_or_else(|| Error::FactorizationIncomplete {
                n: n.clone(),
                digits,
                bound: cfg.max_digits,
            })?;
            let rest = &x / &d;
            stack.push(d);
            stack.push(rest);
        }
    }

    primes.sort();
    let mut factors: Vec<(BigUint, u32)> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    Ok(Factorization { sign, factors })
}

fn trial_divide(m: &mut BigUint, bound: u64, out: &mut Vec<BigUint>) {
    let mut d: u64 = 2;
    loop {
        if let Some(mut v) = m.to_u64() {
            // Finish on machine words once the cofactor fits.
            trial_divide_u64_from(&mut v, d, bound, out);
            *m = BigUint::from(v);
            return;
        }
        let dd = BigUint::from(d);
        if d > bound || &dd * &dd > *m {
            break;
        }
        while (&*m % d).is_zero() {
            *m /= d;
            out.push(dd.clone());
        }
        d += if d == 2 { 1 } else { 2 };
    }
    let dd = BigUint::from(d);
    if !m.is_one() && &dd * &dd > *m {
        out.push(std::mem::replace(m, BigUint::one()));
    }
}

fn trial_divide_u64_from(v: &mut u64, start: u64, bound: u64, out: &mut Vec<BigUint>) {
    let mut d = start.max(2);
    while d <= bound && (d as u128) * (d as u128) <= *v as u128 {
        while (*v).is_multiple_of(d) {
            *v /= d;
            out.push(BigUint::from(d));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    // Nothing below min(bound, sqrt(v)) divides v; if the whole square root
    // was covered, v itself is prime.
    if *v > 1 && (d as u128) * (d as u128) > *v as u128 {
        out.push(BigUint::from(*v));
        *v = 1;
    }
}

/// Miller-Rabin. Deterministic below 3.3e24, a strong probable-prime test
/// with 25 bases above.
pub fn is_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    for &p in MR_BASES.iter().chain(MR_EXTRA_BASES.iter()) {
        let p = BigUint::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n_minus_1 = n - 1u32;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    // 2^81 < 3.3e24
    let deterministic = n.bits() <= 81;
    let bases: Vec<u32> = if deterministic {
        MR_BASES.to_vec()
    } else {
        MR_BASES
            .iter()
            .chain(MR_EXTRA_BASES.iter())
            .copied()
            .collect()
    };
    'witness: for a in bases {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A nontrivial divisor of the odd composite `n`, or `None` if every rho
/// attempt cycles without splitting.
fn find_divisor(n: &BigUint, rng: &mut ChaCha8Rng) -> Option<BigUint> {
    if n.is_even() {
        return Some(BigUint::from(2u32));
    }
    for _ in 0..RHO_ATTEMPTS {
        let c = BigUint::from(rng.random_range(1u64..u64::MAX)) % n;
        let y0 = BigUint::from(rng.random::<u64>()) % n;
        if let Some(d) = brent_rho(n, &c, y0) {
            return Some(d);
        }
    }
    None
}

fn brent_rho(n: &BigUint, c: &BigUint, y0: BigUint) -> Option<BigUint> {
    let f = |x: &BigUint| (x * x + c) % n;
    let batch = 128usize;
    let mut y = y0;
    let mut r = 1usize;
    let mut q = BigUint::one();
    let mut g = BigUint::one();
    let mut x = y.clone();
    let mut ys = y.clone();
    // Bounded so a pathological input cannot spin forever.
    let max_r = 1usize << 26;
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            for _ in 0..batch.min(r - k) {
                y = f(&y);
                let diff = if x > y { &x - &y } else { &y - &x };
                q = (q * diff) % n;
            }
            g = q.gcd(n);
            k += batch;
        }
        r *= 2;
        if r > max_r {
            return None;
        }
    }
    if g == *n {
        // Batch overshot; replay one step at a time.
        loop {
            ys = f(&ys);
            let diff = if x > ys { &x - &ys } else { &ys - &x };
            g = diff.gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    if g == *n || g.is_one() {
        None
    } else {
        Some(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fz(n: i64) -> Factorization {
        factorize(&BigInt::from(n)).unwrap()
    }

    fn pairs(f: &Factorization) -> Vec<(u64, u32)> {
        f.factors
            .iter()
            .map(|(p, e)| (p.to_u64().unwrap(), *e))
            .collect()
    }

    #[test]
    fn small_examples() {
        let f = fz(-15);
        assert_eq!(f.sign, Sign::Minus);
        assert_eq!(pairs(&f), vec![(3, 1), (5, 1)]);
        let f = fz(169);
        assert_eq!(f.sign, Sign::Plus);
        assert_eq!(pairs(&f), vec![(13, 2)]);
        assert_eq!(
            pairs(&fz(4_089_800)),
            vec![(2, 3), (5, 2), (11, 2), (13, 2)]
        );
        assert_eq!(pairs(&fz(1)), vec![]);
        assert_eq!(pairs(&fz(-1)), vec![]);
    }

    #[test]
    fn zero_is_rejected() {
        assert_eq!(factorize(&BigInt::zero()), Err(Error::FactorZero));
    }

    #[test]
    fn rho_splits_semiprime_beyond_trial_bound() {
        // 1000003 * 1000033, both past the default trial bound.
        let n = BigInt::from(1_000_003u64 * 1_000_033u64);
        let f = factorize(&n).unwrap();
        assert_eq!(pairs(&f), vec![(1_000_003, 1), (1_000_033, 1)]);
        // A tiny trial bound pushes everything through rho.
        let cfg = FactorConfig {
            trial_bound: 3,
            ..FactorConfig::default()
        };
        let f = factorize_with(&BigInt::from(2 * 2 * 3 * 7 * 7 * 101 * 65_537i64), &cfg).unwrap();
        assert_eq!(
            pairs(&f),
            vec![(2, 2), (3, 1), (7, 2), (101, 1), (65_537, 1)]
        );
    }

    #[test]
    fn large_prime_cofactor() {
        // (2^61 - 1) * 12
        let m61 = (1u128 << 61) - 1;
        let n = BigInt::from(m61 * 12);
        let f = factorize(&n).unwrap();
        assert_eq!(f.factors.len(), 3);
        assert_eq!(f.factors[2].0, BigUint::from(m61));
        assert_eq!(f.value(), n);
    }

    #[test]
    fn digit_bound_gives_explicit_error() {
        // product of two 13-digit primes: 26 digits after trial division
        let p = BigInt::from(1_000_000_000_039u64);
        let q = BigInt::from(1_000_000_000_061u64);
        let err = factorize(&(&p * &q)).unwrap_err();
        assert!(matches!(
            err,
            Error::FactorizationIncomplete {
                digits: 25,
                bound: 24,
                ..
            }
        ));
        let cfg = FactorConfig {
            max_digits: 30,
            ..FactorConfig::default()
        };
        let f = factorize_with(&(&p * &q), &cfg).unwrap();
        assert_eq!(f.value(), &p * &q);
    }

    #[test]
    fn primality_known_values() {
        let primes = [2u64, 3, 5, 97, 65_537, 1_000_003, 2_147_483_647];
        for p in primes {
            assert!(is_prime(&BigUint::from(p)), "{p}");
        }
        // strong pseudoprimes to several small bases
        let composites = [1u64, 4, 561, 3_215_031_751, 3_825_123_056_546_413_051];
        for c in composites {
            assert!(!is_prime(&BigUint::from(c)), "{c}");
        }
    }

    proptest! {
        #[test]
        fn reconstruction_is_identity(n in (-10_000_000_000i64..10_000_000_000).prop_filter("nonzero", |n| *n != 0)) {
            let f = fz(n);
            prop_assert_eq!(f.value(), BigInt::from(n));
            for w in f.factors.windows(2) {
                prop_assert!(w[0].0 < w[1].0);
            }
            for (p, e) in &f.factors {
                prop_assert!(*e >= 1);
                prop_assert!(is_prime(p));
            }
        }
    }
}
