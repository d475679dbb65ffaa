//! Bazaikin hosts for a given Eschenburg space.
//!
//! For a shift `c`, `E_{a,b}` is isometric to `E_{a+c,b+c}`, which sits
//! totally geodesically in the Bazaikin biquotient with
//!
//! ```text
//! q^c = (2(a_1+c)+1, 2(a_2+c)+1, 2(a_3+c)+1, -(2(b_2+c)+1), -(2(b_3+c)+1)).
//! ```
//!
//! For free `(a, b)` this host is nonsingular iff
//! `gcd(a_i + a_j + 1 + 2c, a_k - b_l) = 1` for all `k, l`, where `{i, j}`
//! is the complement of `k`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::arith::{elementary_symmetric, factorize_with, gcd, FactorConfig};
use crate::bazaikin::{BazParams, OffendingPair};
use crate::error::{Error, Result};
use crate::eschenburg::{cohomogeneity_one_index, complement, EschParams};

/// The candidate host `q^c`.
pub fn candidate_q(e: &EschParams, c: &BigInt) -> BazParams {
    let two_c_1: BigInt = 2 * c + 1;
    let (a, b) = (e.a(), e.b());
    BazParams::new([
        2 * &a[0] + &two_c_1,
        2 * &a[1] + &two_c_1,
        2 * &a[2] + &two_c_1,
        -(2u32 * &b[1] + &two_c_1),
        -(2u32 * &b[2] + &two_c_1),
    ])
}

/// `d^c_{kl} = gcd(a_i + a_j + 1 + 2c, a_k - b_l)`, indexed `[k][l]`.
pub fn shift_gcds(e: &EschParams, c: &BigInt) -> [[BigInt; 3]; 3] {
    std::array::from_fn(|k| {
        let (i, j) = complement(k);
        let s = &e.a()[i] + &e.a()[j] + 1 + 2 * c;
        std::array::from_fn(|l| gcd(&s, &e.difference(k, l)))
    })
}

fn shift_gcds_all_one(e: &EschParams, c: &BigInt) -> bool {
    (0..3).all(|k| {
        let (i, j) = complement(k);
        let s = &e.a()[i] + &e.a()[j] + 1 + 2 * c;
        (0..3).all(|l| gcd(&s, &e.difference(k, l)).is_one())
    })
}

/// `E` is free and every `d^c_{kl}` is 1.
pub fn nonsingular_shift(e: &EschParams, c: &BigInt) -> bool {
    e.is_free() && shift_gcds_all_one(e, c)
}

/// Like [`nonsingular_shift`] for parameters already known to be free.
pub(crate) fn nonsingular_shift_of_free(e: &EschParams, c: &BigInt) -> bool {
    shift_gcds_all_one(e, c)
}

/// Inclusive, nonempty range of integer shifts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftWindow {
    pub lo: BigInt,
    pub hi: BigInt,
}

impl ShiftWindow {
    pub fn contains(&self, c: &BigInt) -> bool {
        &self.lo <= c && c <= &self.hi
    }

    pub fn len(&self) -> BigInt {
        &self.hi - &self.lo + 1
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    pub fn iter(&self) -> impl Iterator<Item = BigInt> + '_ {
        let mut c = self.lo.clone();
        std::iter::from_fn(move || {
            (c <= self.hi).then(|| {
                let out = c.clone();
                c += 1;
                out
            })
        })
    }
}

impl fmt::Display for ShiftWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} <= c <= {}", self.lo, self.hi)
    }
}

/// Shifts `c` with `-(a_2 + a_3 + 1) < 2c < -(b_2 + b_3 + 1)`: exactly the
/// `c` for which `q^c` has positive curvature, for `E` in the first chain
/// `b_3 <= b_2 < a_3 <= a_2 <= a_1 < b_1`.
pub fn pc_shift_window(e: &EschParams) -> Result<ShiftWindow> {
    if !e.is_first_chain() {
        return Err(Error::NotNormalForm);
    }
    let (a, b) = (e.a(), e.b());
    let two = BigInt::from(2);
    // 2c >= -(a_2 + a_3)  and  2c <= -(b_2 + b_3 + 2)
    let lo = (-(&a[1] + &a[2])).div_ceil(&two);
    let hi = (-(&b[1] + &b[2] + 2u32)).div_floor(&two);
    let w = ShiftWindow { lo, hi };
    if w.is_empty() {
        return Err(Error::Internal(format!("empty curvature window for {e}")));
    }
    Ok(w)
}

/// One candidate host, with every flag recomputed from `(esch, shift)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingCertificate {
    pub esch: EschParams,
    pub shift: BigInt,
    /// `esch` shifted by `shift`: the labeling that sits inside `baz`.
    pub embedded: EschParams,
    pub baz: BazParams,
    pub baz_free: bool,
    pub baz_pc: bool,
    pub esch_pc: bool,
    /// `|H^6(baz)|`, or 0 when `baz` is singular.
    pub h6: BigInt,
    pub offending_pairs: Vec<OffendingPair>,
}

impl EmbeddingCertificate {
    pub fn new(esch: &EschParams, shift: &BigInt) -> Self {
        let host = candidate_q(esch, shift);
        let baz_free = host.is_free();
        let h6 = if baz_free {
            host.h6_order().expect("candidate entries are odd")
        } else {
            BigInt::zero()
        };
        let offending_pairs = if baz_free {
            Vec::new()
        } else {
            host.offending_pairs()
        };
        EmbeddingCertificate {
            esch: esch.clone(),
            shift: shift.clone(),
            embedded: esch.shifted(shift),
            baz_pc: host.is_pc(),
            esch_pc: esch.is_pc_metric(),
            baz: host,
            baz_free,
            h6,
            offending_pairs,
        }
    }

    /// Recomputes every field from `(esch, shift)` and compares.
    pub fn verify(&self) -> bool {
        *self == EmbeddingCertificate::new(&self.esch, &self.shift)
    }
}

/// Every candidate host in the positive-curvature window of `esch`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowReport {
    /// Input in first-chain normal form.
    pub esch: EschParams,
    pub window: ShiftWindow,
    /// One per shift, ordered by `c`.
    pub certificates: Vec<EmbeddingCertificate>,
    pub any_nonsingular: bool,
    pub notes: Vec<String>,
}

pub fn window_scan(e: &EschParams) -> Result<WindowReport> {
    let esch = e.pc_normal_form()?;
    let window = pc_shift_window(&esch)?;
    let shifts: Vec<BigInt> = window.iter().collect();
    let certificates: Vec<EmbeddingCertificate> = shifts
        .par_iter()
        .map(|c| EmbeddingCertificate::new(&esch, c))
        .collect();
    let any_nonsingular = certificates.iter().any(|c| c.baz_free);
    let mut notes = Vec::new();
    if let Some(p) = cohomogeneity_one_index(&esch) {
        notes.push(cohomogeneity_one_note(&p, &window));
    }
    Ok(WindowReport {
        esch,
        window,
        certificates,
        any_nonsingular,
        notes,
    })
}

fn cohomogeneity_one_note(p: &BigInt, window: &ShiftWindow) -> String {
    format!(
        "cohomogeneity-one member a=({p},1,1), b=({},0,0): the stated range \
         -1 <= c <= 0 does not match the strict window inequalities, which give \
         {{{}}} (c = 0 makes q4 + q5 = -2 while the other pair sums are positive)",
        p + 2,
        window
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn apply(self, x: BigInt) -> BigInt {
        match self {
            Sign::Plus => x,
            Sign::Minus => -x,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Product over all nine `(k, l)` of the distinct primes of `a_k - b_l`
/// that are coprime to `a_i + a_j + 1`. A prime contributes once for every
/// pair in which it qualifies.
pub fn lemma2_prime_product(e: &EschParams, cfg: &FactorConfig) -> Result<BigInt> {
    if !e.is_free() {
        return Err(Error::NotFree);
    }
    let mut product = BigInt::one();
    for k in 0..3 {
        let (i, j) = complement(k);
        let s = &e.a()[i] + &e.a()[j] + 1;
        for l in 0..3 {
            let d = e.difference(k, l);
            if d.is_zero() {
                return Err(Error::ZeroDifference { k: k + 1, l: l + 1 });
            }
            for p in factorize_with(&d, cfg)?.primes() {
                let p = BigInt::from(p.clone());
                if gcd(&p, &s).is_one() {
                    product *= p;
                }
            }
        }
    }
    Ok(product)
}

/// `c_mu = sign * 2^(mu-1) * P^mu` with `P` from [`lemma2_prime_product`].
pub fn lemma2_shift(e: &EschParams, mu: u32, sign: Sign) -> Result<BigInt> {
    lemma2_shift_with(e, mu, sign, &FactorConfig::default())
}

pub fn lemma2_shift_with(
    e: &EschParams,
    mu: u32,
    sign: Sign,
    cfg: &FactorConfig,
) -> Result<BigInt> {
    if mu < 1 {
        return Err(Error::InvalidArgument("mu must be >= 1".into()));
    }
    let p = lemma2_prime_product(e, cfg)?;
    Ok(shift_from_product(&p, mu, sign))
}

/// `sign * 2^(mu-1) * p^mu`.
pub fn shift_from_product(p: &BigInt, mu: u32, sign: Sign) -> BigInt {
    let magnitude = num_traits::pow(BigInt::from(2), (mu - 1) as usize)
        * num_traits::pow(p.clone(), mu as usize);
    sign.apply(magnitude)
}

/// `q_c = (2(a_i+c)+1, -2(b_i+c)-1)`: the five host entries plus `-qsum`,
/// up to order.
pub fn shift_sextuple(e: &EschParams, c: &BigInt) -> [BigInt; 6] {
    let t: BigInt = 2 * c + 1;
    let (a, b) = (e.a(), e.b());
    [
        2 * &a[0] + &t,
        2 * &a[1] + &t,
        2 * &a[2] + &t,
        -(2u32 * &b[0] + &t),
        -(2u32 * &b[1] + &t),
        -(2u32 * &b[2] + &t),
    ]
}

/// `sigma_3(q_c) = 8(s3(a) - s3(b)) - 8(s1(a) + 2c + 1)(s2(a) - s2(b))`.
pub fn sigma3_shift_closed_form(e: &EschParams, c: &BigInt) -> BigInt {
    let d3 = e.sigma_a(3) - e.sigma_b(3);
    let d2 = e.sigma_a(2) - e.sigma_b(2);
    8 * d3 - 8 * (e.sigma_a(1) + 2 * c + 1) * d2
}

pub fn sigma3_shift_direct(e: &EschParams, c: &BigInt) -> BigInt {
    elementary_symmetric(3, &shift_sextuple(e, c)).expect("6 >= 3")
}

/// Where `|sigma_3(q_c)| = |sigma_3(q_d)|` for `c != d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Collision {
    /// `sigma_2(a) = sigma_2(b)`: every pair of shifts collides.
    Everywhere,
    /// Collisions happen exactly when `c + d` equals this value.
    At(BigRational),
}

impl Collision {
    /// Whether shifts `c != d` give the same `|sigma_3|`.
    pub fn collides(&self, c: &BigInt, d: &BigInt) -> bool {
        match self {
            Collision::Everywhere => true,
            Collision::At(r) => BigRational::from_integer(c + d) == *r,
        }
    }
}

impl fmt::Display for Collision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Collision::Everywhere => f.write_str("everywhere"),
            Collision::At(r) => write!(f, "c + d = {r}"),
        }
    }
}

/// `c + d = (s3(a) - s3(b)) / (s2(a) - s2(b)) - s1(a) - 1`.
pub fn collision_locus(e: &EschParams) -> Collision {
    let d2 = e.sigma_a(2) - e.sigma_b(2);
    if d2.is_zero() {
        return Collision::Everywhere;
    }
    let d3 = e.sigma_a(3) - e.sigma_b(3);
    let r = BigRational::new(d3, d2) - BigRational::from_integer(e.sigma_a(1) + 1);
    Collision::At(r)
}

/// `n` nonsingular hosts with pairwise distinct `|H^6|`, taken from the
/// shifts `c_mu` for `mu = 1, 2, ...` (sign `+` before `-`).
pub fn homotopy_distinct_embeddings(e: &EschParams, n: usize) -> Result<Vec<EmbeddingCertificate>> {
    homotopy_distinct_embeddings_with(e, n, &FactorConfig::default())
}

pub fn homotopy_distinct_embeddings_with(
    e: &EschParams,
    n: usize,
    cfg: &FactorConfig,
) -> Result<Vec<EmbeddingCertificate>> {
    if n < 1 {
        return Err(Error::InvalidArgument("n must be >= 1".into()));
    }
    if !e.is_free() {
        return Err(Error::NotFree);
    }
    if collision_locus(e) == Collision::Everywhere {
        return Err(Error::NoSeparation);
    }
    let p = lemma2_prime_product(e, cfg)?;
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(n);
    let mut mu = 1u32;
    while out.len() < n {
        for sign in [Sign::Plus, Sign::Minus] {
            let c = shift_from_product(&p, mu, sign);
            let cert = EmbeddingCertificate::new(e, &c);
            if !cert.baz_free {
                return Err(Error::Internal(format!(
                    "shift c = {c} from mu = {mu} gives a singular host for {e}"
                )));
            }
            if seen.insert(cert.h6.clone()) && out.len() < n {
                out.push(cert);
            }
        }
        mu += 1;
    }
    Ok(out)
}

/// The swapped space `E_{b+c, a+c}` and its host
/// `(qsum, -q_4, -q_5, -q_2, -q_3)` where `q = q^c`.
pub fn dual_embedding(e: &EschParams, c: &BigInt) -> Result<(EschParams, BazParams)> {
    if !nonsingular_shift(e, c) {
        return Err(Error::SingularCandidate { c: c.clone() });
    }
    let dual = e.shifted(c).swapped();
    let host = candidate_q(&dual, &BigInt::zero());
    let q = candidate_q(e, c);
    let [_, q2, q3, q4, q5] = q.q();
    let expected = BazParams::new([q.qsum(), -q4, -q5, -q2, -q3]);
    if host != expected {
        return Err(Error::Internal(format!(
            "dual host {host} differs from {expected}"
        )));
    }
    Ok((dual, host))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::factorize;
    use crate::sample::{random_esch, random_free_esch};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn e(a: [i64; 3], b: [i64; 3]) -> EschParams {
        EschParams::from_i64(a, b).unwrap()
    }

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn example() -> EschParams {
        e([2, 0, 0], [15, -2, -11])
    }

    #[test]
    fn candidate_examples() {
        let x = example();
        assert_eq!(
            candidate_q(&x, &int(0)),
            BazParams::from_i64([5, 1, 1, 3, 21])
        );
        assert_eq!(
            candidate_q(&x, &int(2)),
            BazParams::from_i64([9, 5, 5, -1, 17])
        );
        assert_eq!(
            candidate_q(&x, &int(-1)),
            BazParams::from_i64([3, -1, -1, 5, 23])
        );
        for c in -5..5 {
            let q = candidate_q(&x, &int(c));
            assert_eq!(q.qsum(), 2 * (&x.b()[0] + int(c)) + 1);
        }
    }

    #[test]
    fn nonsingular_examples() {
        let x = example();
        assert!(!nonsingular_shift(&x, &int(0)));
        assert!(nonsingular_shift(&x, &int(-1)));
        assert!(nonsingular_shift(&x, &int(5)));
        assert!(!nonsingular_shift(&e([0, 0, 0], [0, 0, 0]), &int(0)));
    }

    #[test]
    fn window_examples() {
        let w = pc_shift_window(&e([39, 0, 0], [55, -3, -13])).unwrap();
        assert_eq!((w.lo.clone(), w.hi.clone()), (int(0), int(7)));
        let w = pc_shift_window(&e([309, 6, 0], [323, -3, -5])).unwrap();
        assert_eq!((w.lo.clone(), w.hi.clone()), (int(-3), int(3)));
        let w = pc_shift_window(&example()).unwrap();
        assert_eq!((w.lo.clone(), w.hi.clone()), (int(0), int(5)));
        assert_eq!(w.iter().count(), 6);
        assert_eq!(
            pc_shift_window(&e([1, 1, 1], [-1, 2, 2])),
            Err(Error::NotNormalForm)
        );
    }

    #[test]
    fn window_scan_examples() {
        let r = window_scan(&e([39, 0, 0], [55, -3, -13])).unwrap();
        assert!(!r.any_nonsingular);
        assert_eq!(r.certificates.len(), 8);
        assert!(r.certificates.iter().all(|c| c.baz_pc && !c.baz_free));
        assert!(r.notes.is_empty());

        let r = window_scan(&example()).unwrap();
        let good: Vec<BigInt> = r
            .certificates
            .iter()
            .filter(|c| c.baz_free && c.baz_pc)
            .map(|c| c.shift.clone())
            .collect();
        assert_eq!(good, vec![int(2), int(5)]);

        let r = window_scan(&e([3, 1, 1], [5, 0, 0])).unwrap();
        assert_eq!(
            (r.window.lo.clone(), r.window.hi.clone()),
            (int(-1), int(-1))
        );
        let cert = &r.certificates[0];
        assert!(cert.baz_free && cert.baz_pc);
        assert_eq!(cert.baz, BazParams::from_i64([5, 1, 1, 1, 1]));
        assert_eq!(r.notes.len(), 1);
        assert!(r.notes[0].contains("{-1}"), "{}", r.notes[0]);

        assert_eq!(
            window_scan(&e([1, 1, 0], [2, 1, -1])),
            Err(Error::NotPositivelyCurved)
        );
    }

    #[test]
    fn window_scan_normalizes_second_chain() {
        // conjugate of the example
        let r = window_scan(&example().negated()).unwrap();
        assert_eq!(r.esch, example());
        assert!(r.any_nonsingular);
    }

    #[test]
    fn lemma2_examples() {
        let x = example();
        let c1 = lemma2_shift(&x, 1, Sign::Plus).unwrap();
        assert_eq!(c1, int(4_089_800));
        assert_eq!(c1, int(8 * 25 * 121 * 169));
        let c2 = lemma2_shift(&x, 2, Sign::Plus).unwrap();
        assert_eq!(c2, 2 * int(4_089_800) * int(4_089_800));
        assert_eq!(lemma2_shift(&x, 1, Sign::Minus).unwrap(), int(-4_089_800));
        assert_eq!(
            lemma2_shift(&e([1, 1, 1], [3, 0, 0]), 1, Sign::Plus).unwrap(),
            int(8)
        );
        assert_eq!(
            lemma2_shift(&e([0, 0, 0], [0, 0, 0]), 1, Sign::Plus),
            Err(Error::NotFree)
        );
        assert!(lemma2_shift(&x, 0, Sign::Plus).is_err());
        for mu in 1..=3 {
            for s in [Sign::Plus, Sign::Minus] {
                let c = lemma2_shift(&x, mu, s).unwrap();
                assert!(nonsingular_shift(&x, &c));
                // none of these hosts is positively curved
                assert!(!candidate_q(&x, &c).is_pc());
            }
        }
    }

    #[test]
    fn lemma2_rejects_zero_difference() {
        // free, with a_1 = b_1
        let x = e([0, 0, 0], [0, 1, -1]);
        assert!(x.is_free());
        assert_eq!(
            lemma2_shift(&x, 1, Sign::Plus),
            Err(Error::ZeroDifference { k: 1, l: 1 })
        );
        // the formula without the zero pair would give c = 1, which is singular
        assert!(!nonsingular_shift(&x, &int(1)));
    }

    #[test]
    fn closed_form_examples() {
        let x = example();
        assert_eq!(sigma3_shift_closed_form(&x, &int(-1)), int(-4024));
        assert_eq!(sigma3_shift_closed_form(&x, &int(2)), int(-12328));
        let same = e([1, 0, 0], [1, 0, 0]);
        for c in -3..3 {
            assert_eq!(sigma3_shift_closed_form(&same, &int(c)), int(0));
        }
    }

    /// Pairs `c < d` in `[-range, range]` with equal `|sigma_3|`, by direct
    /// evaluation of the sextuple.
    fn brute_collisions(x: &EschParams, range: i64) -> Vec<(i64, i64)> {
        use num_traits::Signed;
        let vals: Vec<BigInt> = (-range..=range)
            .map(|c| sigma3_shift_direct(x, &int(c)).abs())
            .collect();
        let mut out = Vec::new();
        for (i, vc) in vals.iter().enumerate() {
            for (j, vd) in vals.iter().enumerate().skip(i + 1) {
                if vc == vd {
                    out.push((i as i64 - range, j as i64 - range));
                }
            }
        }
        out
    }

    #[test]
    fn collision_examples() {
        let x = example();
        let r = BigRational::new(int(-849), int(173));
        assert_eq!(collision_locus(&x), Collision::At(r));
        // -849/173 is not an integer: no pair of shifts collides
        assert!(brute_collisions(&x, 400).is_empty());

        assert_eq!(
            collision_locus(&e([1, 0, 0], [1, 0, 0])),
            Collision::Everywhere
        );

        let y = e([1, 1, 1], [3, 0, 0]);
        assert_eq!(
            collision_locus(&y),
            Collision::At(BigRational::new(int(-11), int(3)))
        );
        assert!(brute_collisions(&y, 50).is_empty());

        // an integral locus: (2,0,0),(3,0,-1) has c + d = -3
        let z = e([2, 0, 0], [3, 0, -1]);
        let Collision::At(r) = collision_locus(&z) else {
            panic!()
        };
        assert!(r.is_integer());
        let found = brute_collisions(&z, 30);
        assert!(!found.is_empty());
        for (c, d) in found {
            assert_eq!(BigRational::from_integer(int(c + d)), r);
        }
    }

    #[test]
    fn distinct_examples() {
        let certs = homotopy_distinct_embeddings(&example(), 3).unwrap();
        assert_eq!(certs.len(), 3);
        assert!(certs.iter().all(|c| c.baz_free && c.verify()));
        let h6: BTreeSet<_> = certs.iter().map(|c| c.h6.clone()).collect();
        assert_eq!(h6.len(), 3);
        assert_eq!(certs[0].shift, int(4_089_800));
        assert_eq!(certs[0].embedded, example().shifted(&int(4_089_800)));

        let certs = homotopy_distinct_embeddings(&e([1, 1, 1], [3, 0, 0]), 2).unwrap();
        assert_eq!(certs.len(), 2);
        assert_ne!(certs[0].h6, certs[1].h6);

        let certs = homotopy_distinct_embeddings(&e([39, 0, 0], [55, -3, -13]), 1).unwrap();
        assert!(certs[0].baz_free);

        assert_eq!(
            homotopy_distinct_embeddings(&e([0, 0, 0], [0, 0, 0]), 1),
            Err(Error::NotFree)
        );
    }

    #[test]
    fn distinct_many() {
        let certs = homotopy_distinct_embeddings(&example(), 12).unwrap();
        let h6: BTreeSet<_> = certs.iter().map(|c| c.h6.clone()).collect();
        assert_eq!(h6.len(), 12);
    }

    #[test]
    fn dual_examples() {
        let x = example();
        let (dual, baz) = dual_embedding(&x, &int(-1)).unwrap();
        assert_eq!(dual, e([14, -3, -12], [1, -1, -1]));
        assert_eq!(baz, BazParams::from_i64([29, -5, -23, 1, 1]));
        assert!(baz.is_free());
        assert_eq!(baz.h6_order().unwrap(), int(503));

        let y = e([3, 1, 1], [5, 0, 0]);
        let (_, baz) = dual_embedding(&y, &int(-1)).unwrap();
        assert_eq!(baz, BazParams::from_i64([9, -1, -1, -1, -1]));
        assert_eq!(
            baz.h6_order().unwrap(),
            BazParams::from_i64([5, 1, 1, 1, 1]).h6_order().unwrap()
        );

        assert_eq!(
            dual_embedding(&x, &int(0)),
            Err(Error::SingularCandidate { c: int(0) })
        );
    }

    #[test]
    fn two_nonsingularity_routes_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..10_000 {
            let x = random_free_esch(&mut rng, 50);
            let c = int(rng.random_range(-200..=200));
            assert_eq!(
                nonsingular_shift(&x, &c),
                candidate_q(&x, &c).is_free(),
                "{x}, c = {c}"
            );
        }
    }

    #[test]
    fn shift_gcds_of_free_params_are_odd() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for _ in 0..5_000 {
            let x = random_free_esch(&mut rng, 50);
            for k in 0..3 {
                let (i, j) = complement(k);
                let s = &x.a()[i] + &x.a()[j] + 1;
                for l in 0..3 {
                    let g = gcd(&s, &x.difference(k, l));
                    if g.is_zero() {
                        continue;
                    }
                    for p in factorize(&g).unwrap().primes() {
                        assert!(p.is_odd(), "{x}: prime {p} of d_{k}{l}");
                    }
                }
            }
        }
    }

    #[test]
    fn lemma2_free_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let mut refused = 0;
        for _ in 0..2_000 {
            let x = random_free_esch(&mut rng, 50);
            for mu in 1..=3 {
                for s in [Sign::Plus, Sign::Minus] {
                    match lemma2_shift(&x, mu, s) {
                        Ok(c) => assert!(nonsingular_shift(&x, &c), "{x} mu={mu}"),
                        Err(Error::ZeroDifference { .. }) => {
                            assert!(x.has_zero_difference());
                            refused += 1;
                        }
                        Err(other) => panic!("{x}: {other}"),
                    }
                }
            }
        }
        assert!(refused < 100);
    }

    #[test]
    fn closed_form_matches_direct() {
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        for _ in 0..10_000 {
            let x = random_esch(&mut rng, 50);
            let c = int(rng.random_range(-1000..=1000));
            assert_eq!(
                sigma3_shift_closed_form(&x, &c),
                sigma3_shift_direct(&x, &c)
            );
        }
    }

    #[test]
    fn sextuple_sigma3_is_host_sigma3() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..1_000 {
            let x = random_esch(&mut rng, 50);
            let c = int(rng.random_range(-100..=100));
            assert_eq!(
                sigma3_shift_direct(&x, &c),
                candidate_q(&x, &c).sigma3_extended()
            );
        }
    }

    fn first_chain_strategy() -> impl Strategy<Value = EschParams> {
        // b3 <= b2 < a3 <= a2 <= a1 < b1 with b1 fixed by the sum
        (-30i64..30, 0i64..20, 0i64..20, 1i64..20, 0i64..20).prop_filter_map(
            "chain",
            |(a3, da2, da1, db2, db3)| {
                let a2 = a3 + da2;
                let a1 = a2 + da1;
                let b2 = a3 - db2;
                let b3 = b2 - db3;
                let b1 = a1 + a2 + a3 - b2 - b3;
                (b1 > a1).then(|| EschParams::from_i64([a1, a2, a3], [b1, b2, b3]).unwrap())
            },
        )
    }

    proptest! {
        #[test]
        fn candidate_compatible_with_shift(x in first_chain_strategy(), c in -500i64..500) {
            prop_assert_eq!(
                candidate_q(&x.shifted(&int(c)), &int(0)),
                candidate_q(&x, &int(c))
            );
        }

        #[test]
        fn window_is_exactly_pc(x in first_chain_strategy(), c in -80i64..80) {
            let w = pc_shift_window(&x).unwrap();
            prop_assert!(!w.is_empty());
            prop_assert_eq!(w.contains(&int(c)), candidate_q(&x, &int(c)).is_pc());
        }

        #[test]
        fn collision_locus_matches_closed_form(x in first_chain_strategy(), c in -60i64..60, d in -60i64..60) {
            use num_traits::Signed;
            prop_assume!(c != d);
            let same = sigma3_shift_closed_form(&x, &int(c)).abs()
                == sigma3_shift_closed_form(&x, &int(d)).abs();
            prop_assert_eq!(same, collision_locus(&x).collides(&int(c), &int(d)));
        }
    }
}
