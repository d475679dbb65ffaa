//! Batch checks: the nine tabulated counterexamples, the two infinite
//! cohomogeneity-two families, the cohomogeneity-one family, and an
//! exhaustive scan of a parameter box.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::embedding::{
    nonsingular_shift_of_free, pc_shift_window, window_scan, EmbeddingCertificate, ShiftWindow,
    WindowReport,
};
use crate::error::{Error, Result};
use crate::eschenburg::{cohomogeneity_one, cohomogeneity_two, Cohom2Variant, EschParams};

/// Positively curved Eschenburg spaces none of whose curvature-window
/// hosts is nonsingular: `(a, b, c_lo, c_hi)`.
pub const TABLE1: [([i64; 3], [i64; 3], i64, i64); 9] = [
    ([39, 0, 0], [55, -3, -13], 0, 7),
    ([77, 2, 0], [93, -3, -11], -1, 6),
    ([171, 2, 0], [187, -3, -11], -1, 6),
    ([225, 4, 0], [247, -5, -13], -2, 8),
    ([281, 3, 0], [294, -2, -8], -1, 4),
    ([309, 6, 0], [323, -3, -5], -3, 3),
    ([664, 2, 0], [678, -3, -9], -1, 5),
    ([827, 4, 0], [843, -3, -9], -2, 5),
    ([12909, 0, 0], [12925, -3, -13], 0, 7),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyRow {
    pub esch: EschParams,
    pub window: ShiftWindow,
    /// `(c, nonsingular)` for every `c` in the window.
    pub verdicts: Vec<(BigInt, bool)>,
    pub is_counterexample: bool,
    pub h4: BigInt,
}

impl From<&WindowReport> for SurveyRow {
    fn from(r: &WindowReport) -> Self {
        let verdicts: Vec<(BigInt, bool)> = r
            .certificates
            .iter()
            .map(|c| (c.shift.clone(), c.baz_free))
            .collect();
        SurveyRow {
            h4: r.esch.h4_order(),
            esch: r.esch.clone(),
            window: r.window.clone(),
            is_counterexample: !verdicts.is_empty() && verdicts.iter().all(|(_, ok)| !ok),
            verdicts,
        }
    }
}

fn mismatch(context: String, expected: impl ToString, actual: impl ToString) -> Error {
    Error::Mismatch {
        context,
        expected: expected.to_string(),
        actual: actual.to_string(),
    }
}

/// Checks that `e` is a free, positively curved counterexample.
fn counterexample_row(e: &EschParams, context: &str) -> Result<SurveyRow> {
    if !e.is_free() {
        return Err(mismatch(format!("{context}: freeness"), "free", "not free"));
    }
    if !e.is_pc_metric() {
        return Err(mismatch(
            format!("{context}: curvature"),
            "positively curved",
            "not positively curved",
        ));
    }
    let row = SurveyRow::from(&window_scan(e)?);
    if !row.is_counterexample {
        let good: Vec<String> = row
            .verdicts
            .iter()
            .filter(|(_, ok)| *ok)
            .map(|(c, _)| c.to_string())
            .collect();
        return Err(mismatch(
            format!("{context}: window hosts"),
            "all singular",
            format!("nonsingular at c = {}", good.join(", ")),
        ));
    }
    Ok(row)
}

pub fn verify_table1() -> Result<Vec<SurveyRow>> {
    TABLE1
        .iter()
        .enumerate()
        .map(|(i, (a, b, lo, hi))| {
            let context = format!("table row {}", i + 1);
            let e = EschParams::from_i64(*a, *b)?;
            let row = counterexample_row(&e, &context)?;
            let expected = ShiftWindow {
                lo: BigInt::from(*lo),
                hi: BigInt::from(*hi),
            };
            if row.window != expected {
                return Err(mismatch(
                    format!("{context}: window"),
                    &expected,
                    &row.window,
                ));
            }
            if row.esch != e {
                return Err(mismatch(format!("{context}: normal form"), &e, &row.esch));
            }
            Ok(row)
        })
        .collect()
}

/// Members `0..=k_max` of both cohomogeneity-two families, variant A first.
pub fn verify_infinite_families(k_max: i64) -> Result<Vec<(Cohom2Variant, i64, SurveyRow)>> {
    if k_max < 0 {
        return Err(Error::InvalidArgument(format!(
            "k_max must be >= 0, got {k_max}"
        )));
    }
    let jobs: Vec<(Cohom2Variant, i64)> = [Cohom2Variant::A, Cohom2Variant::B]
        .into_iter()
        .flat_map(|v| (0..=k_max).map(move |k| (v, k)))
        .collect();
    jobs.into_par_iter()
        .map(|(v, k)| {
            let e = cohomogeneity_two(v, k)?;
            let row = counterexample_row(&e, &format!("family {v}, k = {k}"))?;
            Ok((v, k, row))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cohom1Member {
    pub p: i64,
    pub window: ShiftWindow,
    /// Host at `c = -1`.
    pub certificate: EmbeddingCertificate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cohom1Summary {
    pub members: Vec<Cohom1Member>,
    pub notes: Vec<String>,
}

/// For `1 <= p <= p_max`: the host at `c = -1` is `(2p-1, 1, 1, 1, 1)`,
/// nonsingular and positively curved, and is the whole curvature window.
pub fn verify_cohomogeneity_one(p_max: i64) -> Result<Cohom1Summary> {
    if p_max < 1 {
        return Err(Error::InvalidArgument(format!(
            "p_max must be >= 1, got {p_max}"
        )));
    }
    let minus_one = BigInt::from(-1);
    let mut members = Vec::new();
    let mut notes = Vec::new();
    for p in 1..=p_max {
        let e = cohomogeneity_one(p)?;
        let report = window_scan(&e)?;
        let context = format!("cohomogeneity-one p = {p}");
        let expected_window = ShiftWindow {
            lo: minus_one.clone(),
            hi: minus_one.clone(),
        };
        if report.window != expected_window {
            return Err(mismatch(
                format!("{context}: window"),
                &expected_window,
                &report.window,
            ));
        }
        let cert = EmbeddingCertificate::new(&e, &minus_one);
        let expected_q = [2 * p - 1, 1, 1, 1, 1].map(BigInt::from);
        if cert.baz.q() != &expected_q {
            return Err(mismatch(
                format!("{context}: host"),
                format!("{expected_q:?}"),
                &cert.baz,
            ));
        }
        if !(cert.baz_free && cert.baz_pc) {
            return Err(mismatch(
                format!("{context}: host flags"),
                "free and positively curved",
                format!("free = {}, pc = {}", cert.baz_free, cert.baz_pc),
            ));
        }
        if p == 1 {
            notes.extend(report.notes.iter().cloned());
        }
        members.push(Cohom1Member {
            p,
            window: report.window,
            certificate: cert,
        });
    }
    Ok(Cohom1Summary { members, notes })
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ScanStats {
    /// Free, positively curved canonical parameters visited.
    pub total: u64,
    /// Those with a nonsingular host somewhere in the window.
    pub embeddable: u64,
    pub counterexamples: u64,
}

impl std::ops::AddAssign for ScanStats {
    fn add_assign(&mut self, o: ScanStats) {
        self.total += o.total;
        self.embeddable += o.embeddable;
        self.counterexamples += o.counterexamples;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanConfig {
    pub max_abs: i64,
    pub limit: usize,
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    pub stats: ScanStats,
    /// At most `limit` counterexamples, ordered by `(h4, a, b)`.
    pub rows: Vec<SurveyRow>,
}

pub fn scan_box(max_abs: i64, limit: usize) -> Result<ScanReport> {
    scan_box_with(&ScanConfig {
        max_abs,
        limit,
        workers: None,
    })
}

/// Scans every first-chain parameter set with `min(a) = 0` and all entries
/// bounded by `max_abs`. One shard per value of `a_1`; shards are merged by
/// sorting, so the output does not depend on the worker count.
pub fn scan_box_with(cfg: &ScanConfig) -> Result<ScanReport> {
    if cfg.max_abs < 1 {
        return Err(Error::InvalidArgument("max_abs must be >= 1".into()));
    }
    if cfg.limit < 1 {
        return Err(Error::InvalidArgument("limit must be >= 1".into()));
    }
    let max_abs = cfg.max_abs;
    // b_1 = a_1 + a_2 - b_2 - b_3 >= a_1 + 2, so a_1 <= max_abs - 2.
    let run = || -> Result<Vec<ShardResult>> {
        (0..=max_abs - 2)
            .into_par_iter()
            .map(|a1| scan_shard(max_abs, a1))
            .collect()
    };
    let shards = match cfg.workers {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))?
            .install(run)?,
        None => run()?,
    };
    let mut stats = ScanStats::default();
    let mut rows = Vec::new();
    for shard in shards {
        stats += shard.stats;
        rows.extend(shard.rows);
    }
    rows.sort_by(|x, y| x.h4.cmp(&y.h4).then_with(|| x.esch.cmp(&y.esch)));
    rows.truncate(cfg.limit);
    Ok(ScanReport { stats, rows })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShardResult {
    pub stats: ScanStats,
    /// Every counterexample in the shard, in enumeration order.
    pub rows: Vec<SurveyRow>,
}

/// The slice of the scan with fixed `a_1`:
/// `a = (a_1, a_2, 0)` with `0 <= a_2 <= a_1`, `b_3 <= b_2 <= -1`, and
/// `b_1 = a_1 + a_2 - b_2 - b_3 <= max_abs`.
pub fn scan_shard(max_abs: i64, a1: i64) -> Result<ShardResult> {
    let mut stats = ScanStats::default();
    let mut rows = Vec::new();
    for a2 in 0..=a1 {
        let budget = max_abs - a1 - a2;
        // m = -b_2, n = -b_3, 1 <= m <= n, m + n <= budget
        for m in 1..=budget / 2 {
            for n in m..=budget - m {
                let e = EschParams::from_i64([a1, a2, 0], [a1 + a2 + m + n, -m, -n])?;
                if !e.is_free() {
                    continue;
                }
                stats.total += 1;
                let window = pc_shift_window(&e)?;
                if window.iter().any(|c| nonsingular_shift_of_free(&e, &c)) {
                    stats.embeddable += 1;
                } else {
                    stats.counterexamples += 1;
                    rows.push(SurveyRow::from(&window_scan(&e)?));
                }
            }
        }
    }
    Ok(ShardResult { stats, rows })
}
