//! Seeded random parameter generators used by the randomized checks.

use num_bigint::BigInt;
use rand::Rng;

use crate::bazaikin::BazParams;
use crate::eschenburg::EschParams;

/// Uniform `a` in `[-max_abs, max_abs]^3`, uniform `b_1, b_2`, and `b_3`
/// fixed by the sum condition; rejected until `|b_3| <= max_abs`.
pub fn random_esch<R: Rng + ?Sized>(rng: &mut R, max_abs: i64) -> EschParams {
    loop {
        let a: [i64; 3] = std::array::from_fn(|_| rng.random_range(-max_abs..=max_abs));
        let b1 = rng.random_range(-max_abs..=max_abs);
        let b2 = rng.random_range(-max_abs..=max_abs);
        let b3 = a.iter().sum::<i64>() - b1 - b2;
        if b3.abs() <= max_abs {
            return EschParams::from_i64(a, [b1, b2, b3]).expect("sums agree");
        }
    }
}

/// [`random_esch`] conditioned on freeness.
pub fn random_free_esch<R: Rng + ?Sized>(rng: &mut R, max_abs: i64) -> EschParams {
    loop {
        let e = random_esch(rng, max_abs);
        if e.is_free() {
            return e;
        }
    }
}

/// Five odd integers in `[-max_abs, max_abs]` (`max_abs` odd).
pub fn random_odd_q<R: Rng + ?Sized>(rng: &mut R, max_abs: i64) -> BazParams {
    let half = (max_abs - 1) / 2;
    BazParams::new(std::array::from_fn(|_| {
        BigInt::from(2 * rng.random_range(-half - 1..=half) + 1)
    }))
}
