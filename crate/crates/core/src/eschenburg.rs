//! Eschenburg parameters `(a, b)` and the predicates that only depend on
//! them: freeness, positive curvature, the order of `H^4`, and the
//! isometric normal forms.
//!
//! Moves that are isometries of `E_{a,b}` with its fixed metric:
//! - a common shift `(a + c, b + c)`,
//! - any permutation of `a`,
//! - swapping `b_2` and `b_3`,
//! - dividing out an ineffective kernel.
//!
//! Cyclic relabelings of `b` and the swap `a <-> b` are diffeomorphisms only
//! and are never applied implicitly.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{elementary_symmetric, gcd};
use crate::error::{Error, Result};

pub(crate) const S3: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// `{i, j}` complementary to `k` in `{0, 1, 2}`.
pub(crate) fn complement(k: usize) -> (usize, usize) {
    match k {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

/// Parameters of the Eschenburg biquotient `E^7_{a,b}`; `sum(a) = sum(b)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EschParams {
    a: [BigInt; 3],
    b: [BigInt; 3],
}

impl EschParams {
    pub fn new(a: [BigInt; 3], b: [BigInt; 3]) -> Result<Self> {
        let sum_a: BigInt = a.iter().sum();
        let sum_b: BigInt = b.iter().sum();
        if sum_a != sum_b {
            return Err(Error::SumMismatch { sum_a, sum_b });
        }
        Ok(EschParams { a, b })
    }

    pub fn from_i64(a: [i64; 3], b: [i64; 3]) -> Result<Self> {
        Self::new(a.map(BigInt::from), b.map(BigInt::from))
    }

    pub fn a(&self) -> &[BigInt; 3] {
        &self.a
    }

    pub fn b(&self) -> &[BigInt; 3] {
        &self.b
    }

    pub fn a_min(&self) -> &BigInt {
        self.a.iter().min().unwrap()
    }

    pub fn a_max(&self) -> &BigInt {
        self.a.iter().max().unwrap()
    }

    /// `a_k - b_l` (zero-based indices).
    pub fn difference(&self, k: usize, l: usize) -> BigInt {
        &self.a[k] - &self.b[l]
    }

    /// True if some `a_k = b_l`.
    pub fn has_zero_difference(&self) -> bool {
        self.a.iter().any(|x| self.b.contains(x))
    }

    /// `(a + c, b + c)`.
    pub fn shifted(&self, c: &BigInt) -> Self {
        EschParams {
            a: self.a.clone().map(|x| x + c),
            b: self.b.clone().map(|x| x + c),
        }
    }

    /// `(-a, -b)`: the same circle traversed by `z -> conj(z)`.
    pub fn negated(&self) -> Self {
        EschParams {
            a: self.a.clone().map(|x| -x),
            b: self.b.clone().map(|x| -x),
        }
    }

    /// `(b, a)`.
    pub fn swapped(&self) -> Self {
        EschParams {
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }

    pub fn is_free(&self) -> bool {
        S3.iter()
            .all(|s| gcd(&self.difference(0, s[0]), &self.difference(1, s[1])).is_one())
    }

    /// Freeness by searching for a common divisor `m >= 2` directly.
    ///
    /// Slow on large entries; intended as a cross-check of [`is_free`](Self::is_free).
    pub fn is_free_oracle(&self) -> bool {
        let two = BigInt::from(2);
        for s in &S3 {
            let x = self.difference(0, s[0]).abs();
            let y = self.difference(1, s[1]).abs();
            let limit = match (x.is_zero(), y.is_zero()) {
                // every m divides 0
                (true, true) => return false,
                (true, false) => y.clone(),
                (false, true) => x.clone(),
                (false, false) => x.clone().min(y.clone()),
            };
            let mut m = two.clone();
            while m <= limit {
                if (&x % &m).is_zero() && (&y % &m).is_zero() {
                    return false;
                }
                m += 1;
            }
        }
        true
    }

    /// gcd of all nine differences `a_i - b_j`; the order of the ineffective
    /// kernel, or 0 when the action is trivial.
    pub fn kernel_order(&self) -> BigInt {
        let mut g = BigInt::zero();
        for k in 0..3 {
            for l in 0..3 {
                g = gcd(&g, &self.difference(k, l));
            }
        }
        g
    }

    /// Divides out the ineffective kernel.
    pub fn effectivize(&self) -> Result<Self> {
        let g = self.kernel_order();
        if g.is_zero() {
            return Err(Error::DegenerateAction);
        }
        if g.is_one() {
            return Ok(self.clone());
        }
        // All entries are congruent to a_1 mod g.
        let t = self.a[0].mod_floor(&g);
        let f = |x: &BigInt| (x - &t) / &g;
        Ok(EschParams {
            a: [f(&self.a[0]), f(&self.a[1]), f(&self.a[2])],
            b: [f(&self.b[0]), f(&self.b[1]), f(&self.b[2])],
        })
    }

    /// `a` sorted descending and `(b_2, b_3)` sorted descending.
    pub fn sort_isometric(&self) -> Self {
        let mut a = self.a.clone();
        a.sort_by(|x, y| y.cmp(x));
        let mut b = self.b.clone();
        if b[1] < b[2] {
            b.swap(1, 2);
        }
        EschParams { a, b }
    }

    /// Isometry-canonical representative: [`sort_isometric`](Self::sort_isometric),
    /// then shifted so that `min(a) = 0`.
    pub fn canonicalize(&self) -> Self {
        let s = self.sort_isometric();
        let c = -s.a[2].clone();
        s.shifted(&c)
    }

    /// Every `b_i` lies outside `[min a, max a]`.
    pub fn admits_positive_curvature(&self) -> bool {
        let (lo, hi) = (self.a_min(), self.a_max());
        self.b.iter().all(|x| x < lo || x > hi)
    }

    /// Positive curvature for the fixed metric: additionally `b_2` and `b_3`
    /// lie on the same side of `[min a, max a]`.
    pub fn is_pc_metric(&self) -> bool {
        if !self.admits_positive_curvature() {
            return false;
        }
        let lo = self.a_min();
        let below = |x: &BigInt| x < lo;
        below(&self.b[1]) == below(&self.b[2])
    }

    /// `b_3 <= b_2 < a_3 <= a_2 <= a_1 < b_1` for the labeling as given.
    pub fn is_first_chain(&self) -> bool {
        let (a, b) = (&self.a, &self.b);
        b[2] <= b[1] && b[1] < a[2] && a[2] <= a[1] && a[1] <= a[0] && a[0] < b[0]
    }

    /// Representative satisfying the first chain.
    ///
    /// Inputs already in the first chain after isometric sorting keep their
    /// shift; inputs in the second chain are negated and canonicalized.
    pub fn pc_normal_form(&self) -> Result<Self> {
        if !self.is_pc_metric() {
            return Err(Error::NotPositivelyCurved);
        }
        let sorted = self.sort_isometric();
        if sorted.is_first_chain() {
            return Ok(sorted);
        }
        let flipped = self.negated().canonicalize();
        if !flipped.is_first_chain() {
            return Err(Error::Internal(format!(
                "negation of {self} is not in the first chain"
            )));
        }
        Ok(flipped)
    }

    pub fn sigma_a(&self, k: usize) -> BigInt {
        elementary_symmetric(k, &self.a).expect("k <= 3")
    }

    pub fn sigma_b(&self, k: usize) -> BigInt {
        elementary_symmetric(k, &self.b).expect("k <= 3")
    }

    /// `|sigma_2(a) - sigma_2(b)|`, the order of `H^4(E)`. Zero only for
    /// degenerate parameters.
    pub fn h4_order(&self) -> BigInt {
        (self.sigma_a(2) - self.sigma_b(2)).abs()
    }
}

impl fmt::Display for EschParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a1, a2, a3] = &self.a;
        let [b1, b2, b3] = &self.b;
        write!(f, "a=({a1},{a2},{a3}), b=({b1},{b2},{b3})")
    }
}

/// Cohomogeneity-one member `a = (p, 1, 1)`, `b = (p + 2, 0, 0)`, `p >= 1`.
pub fn cohomogeneity_one(p: i64) -> Result<EschParams> {
    if p < 1 {
        return Err(Error::InvalidArgument(format!("p must be >= 1, got {p}")));
    }
    EschParams::from_i64([p, 1, 1], [p + 2, 0, 0])
}

/// Recognizes `(p, 1, 1), (p + 2, 0, 0)` up to isometric sorting.
pub fn cohomogeneity_one_index(e: &EschParams) -> Option<BigInt> {
    let s = e.sort_isometric();
    let one = BigInt::one();
    let zero = BigInt::zero();
    let p = s.a[0].clone();
    let matches = s.a[1] == one
        && s.a[2] == one
        && s.b[1] == zero
        && s.b[2] == zero
        && s.b[0] == &p + 2
        && p >= one;
    matches.then_some(p)
}

/// The two infinite cohomogeneity-two families whose members have no
/// nonsingular candidate in their positive-curvature window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cohom2Variant {
    /// `a = (15015k + 39, 0, 0)`, `b = (15015k + 55, -3, -13)`
    A,
    /// `a = (15015k + 12909, 0, 0)`, `b = (15015k + 12925, -3, -13)`
    B,
}

impl fmt::Display for Cohom2Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cohom2Variant::A => f.write_str("A"),
            Cohom2Variant::B => f.write_str("B"),
        }
    }
}

pub fn cohomogeneity_two(variant: Cohom2Variant, k: i64) -> Result<EschParams> {
    if k < 0 {
        return Err(Error::InvalidArgument(format!("k must be >= 0, got {k}")));
    }
    let base = BigInt::from(15015) * k;
    let (a1, b1) = match variant {
        Cohom2Variant::A => (39, 55),
        Cohom2Variant::B => (12909, 12925),
    };
    EschParams::new(
        [&base + a1, BigInt::zero(), BigInt::zero()],
        [&base + b1, BigInt::from(-3), BigInt::from(-13)],
    )
}
