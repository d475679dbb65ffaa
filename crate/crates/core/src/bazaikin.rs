//! Bazaikin parameters `q = (q_1, ..., q_5)` and the ten Eschenburg spaces
//! sitting totally geodesically inside `B^13_q`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::arith::{elementary_symmetric, gcd};
use crate::error::{Error, Result};
use crate::eschenburg::EschParams;

/// The 15 ways to pick two disjoint unordered pairs from `{0, .., 4}`.
pub const DISJOINT_PAIRS: [([usize; 2], [usize; 2]); 15] = [
    ([0, 1], [2, 3]),
    ([0, 1], [2, 4]),
    ([0, 1], [3, 4]),
    ([0, 2], [1, 3]),
    ([0, 2], [1, 4]),
    ([0, 2], [3, 4]),
    ([0, 3], [1, 2]),
    ([0, 3], [1, 4]),
    ([0, 3], [2, 4]),
    ([0, 4], [1, 2]),
    ([0, 4], [1, 3]),
    ([0, 4], [2, 3]),
    ([1, 2], [3, 4]),
    ([1, 3], [2, 4]),
    ([1, 4], [2, 3]),
];

/// The ten 2-subsets of `{0, .., 4}` in lexicographic order.
pub const PAIRS: [[usize; 2]; 10] = [
    [0, 1],
    [0, 2],
    [0, 3],
    [0, 4],
    [1, 2],
    [1, 3],
    [1, 4],
    [2, 3],
    [2, 4],
    [3, 4],
];

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BazParams {
    q: [BigInt; 5],
}

/// A pair of disjoint pair-sums whose gcd is not 2. Indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OffendingPair {
    pub first: [usize; 2],
    pub second: [usize; 2],
    pub gcd: BigInt,
}

impl fmt::Display for OffendingPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "gcd(q{} + q{}, q{} + q{}) = {}",
            self.first[0], self.first[1], self.second[0], self.second[1], self.gcd
        )
    }
}

/// One totally geodesic Eschenburg space, selected by the 2-subset
/// `{l, m}` (1-based) whose entries go into `b_2, b_3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Submanifold {
    pub pair: [usize; 2],
    pub esch: EschParams,
}

impl BazParams {
    pub fn new(q: [BigInt; 5]) -> Self {
        BazParams { q }
    }

    pub fn from_i64(q: [i64; 5]) -> Self {
        BazParams::new(q.map(BigInt::from))
    }

    pub fn q(&self) -> &[BigInt; 5] {
        &self.q
    }

    /// `q_1 + ... + q_5`.
    pub fn qsum(&self) -> BigInt {
        self.q.iter().sum()
    }

    pub fn all_odd(&self) -> bool {
        self.q.iter().all(|x| x.is_odd())
    }

    fn pair_sum(&self, p: [usize; 2]) -> BigInt {
        &self.q[p[0]] + &self.q[p[1]]
    }

    /// All entries odd and `gcd(q_i + q_j, q_k + q_l) = 2` for every two
    /// disjoint pairs.
    pub fn is_free(&self) -> bool {
        self.all_odd()
            && DISJOINT_PAIRS
                .iter()
                .all(|(x, y)| gcd(&self.pair_sum(*x), &self.pair_sum(*y)) == BigInt::from(2))
    }

    /// The freeness condition read literally: one gcd per permutation of S_5.
    pub fn is_free_oracle(&self) -> bool {
        if !self.all_odd() {
            return false;
        }
        let two = BigInt::from(2);
        permutations5().iter().all(|s| {
            let x = &self.q[s[0]] + &self.q[s[1]];
            let y = &self.q[s[2]] + &self.q[s[3]];
            gcd(&x, &y) == two
        })
    }

    /// Disjoint pair-sums whose gcd differs from 2.
    pub fn offending_pairs(&self) -> Vec<OffendingPair> {
        let two = BigInt::from(2);
        DISJOINT_PAIRS
            .iter()
            .filter_map(|(x, y)| {
                let g = gcd(&self.pair_sum(*x), &self.pair_sum(*y));
                (g != two).then(|| OffendingPair {
                    first: [x[0] + 1, x[1] + 1],
                    second: [y[0] + 1, y[1] + 1],
                    gcd: g,
                })
            })
            .collect()
    }

    /// 1-based indices of even entries.
    pub fn even_entries(&self) -> Vec<usize> {
        (0..5)
            .filter(|&i| self.q[i].is_even())
            .map(|i| i + 1)
            .collect()
    }

    /// All ten `q_i + q_j` strictly positive, or all strictly negative.
    pub fn is_pc(&self) -> bool {
        let sums: Vec<BigInt> = PAIRS.iter().map(|p| self.pair_sum(*p)).collect();
        sums.iter().all(|s| s.is_positive()) || sums.iter().all(|s| s.is_negative())
    }

    /// `sigma_3(q_1, .., q_5, -qsum)`.
    pub fn sigma3_extended(&self) -> BigInt {
        let mut six: Vec<BigInt> = self.q.to_vec();
        six.push(-self.qsum());
        elementary_symmetric(3, &six).expect("6 >= 3")
    }

    /// Order of `H^6(B)`: `|sigma_3(q, -qsum)| / 8`.
    pub fn h6_order(&self) -> Result<BigInt> {
        if let Some(i) = (0..5).find(|&i| self.q[i].is_even()) {
            return Err(Error::EvenEntry {
                index: i + 1,
                value: self.q[i].clone(),
            });
        }
        let s = self.sigma3_extended();
        let (quot, rem) = s.abs().div_rem(&BigInt::from(8));
        if !rem.is_zero() {
            return Err(Error::Internal(format!(
                "sigma_3 = {s} is not divisible by 8 for odd {self}"
            )));
        }
        Ok(quot)
    }

    /// The ten embedded Eschenburg spaces, one per 2-subset `{l, m}`:
    /// `a = ((q_i - 1)/2, (q_j - 1)/2, (q_k - 1)/2)` over the complement,
    /// `b = ((qsum - 1)/2, -(q_l + 1)/2, -(q_m + 1)/2)`.
    pub fn submanifolds(&self) -> Result<Vec<Submanifold>> {
        if let Some(i) = (0..5).find(|&i| self.q[i].is_even()) {
            return Err(Error::EvenEntry {
                index: i + 1,
                value: self.q[i].clone(),
            });
        }
        let qsum = self.qsum();
        let half_dec = |x: &BigInt| (x - 1u32) / 2u32;
        let half_inc_neg = |x: &BigInt| -((x + 1u32) / 2u32);
        PAIRS
            .iter()
            .map(|&[l, m]| {
                let rest: Vec<usize> = (0..5).filter(|i| *i != l && *i != m).collect();
                let a = [
                    half_dec(&self.q[rest[0]]),
                    half_dec(&self.q[rest[1]]),
                    half_dec(&self.q[rest[2]]),
                ];
                let b = [
                    half_dec(&qsum),
                    half_inc_neg(&self.q[l]),
                    half_inc_neg(&self.q[m]),
                ];
                Ok(Submanifold {
                    pair: [l + 1, m + 1],
                    esch: EschParams::new(a, b)?,
                })
            })
            .collect()
    }
}

/// Number of pairwise non-isometric entries (by canonical form).
pub fn distinct_submanifold_count(subs: &[Submanifold]) -> usize {
    subs.iter()
        .map(|s| s.esch.canonicalize())
        .collect::<BTreeSet<_>>()
        .len()
}

impl fmt::Display for BazParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [q1, q2, q3, q4, q5] = &self.q;
        write!(f, "({q1},{q2},{q3},{q4},{q5})")
    }
}

/// All 120 permutations of `0..5`.
pub fn permutations5() -> Vec<[usize; 5]> {
    fn go(prefix: &mut Vec<usize>, out: &mut Vec<[usize; 5]>) {
        if prefix.len() == 5 {
            out.push([prefix[0], prefix[1], prefix[2], prefix[3], prefix[4]]);
            return;
        }
        for i in 0..5 {
            if !prefix.contains(&i) {
                prefix.push(i);
                go(prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::with_capacity(120);
    go(&mut Vec::with_capacity(5), &mut out);
    out
}
