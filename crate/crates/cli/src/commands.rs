//! One function per subcommand; each fills a [`Report`] or returns the
//! library error that stopped it.

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use eschbaz::arith::FactorConfig;
use eschbaz::bazaikin::distinct_submanifold_count;
use eschbaz::embedding::{
    collision_locus, dual_embedding, homotopy_distinct_embeddings_with, lemma2_prime_product,
    nonsingular_shift, shift_from_product, window_scan, Sign,
};
use eschbaz::survey::{
    scan_box, verify_cohomogeneity_one, verify_infinite_families, verify_table1,
};
use eschbaz::{
    BazParams, EmbeddingCertificate, Error, EschParams, OffendingPair, Result, SurveyRow,
};

use crate::report::{int, ints, Record, Report};

fn esch_input(r: &mut Report, e: &EschParams) {
    r.input.insert("a".into(), ints(e.a()));
    r.input.insert("b".into(), ints(e.b()));
}

fn esch_fields(rec: &mut Record, e: &EschParams) {
    rec.insert("a".into(), ints(e.a()));
    rec.insert("b".into(), ints(e.b()));
}

fn record(pairs: Vec<(&str, Value)>) -> Record {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn offending(pairs: &[OffendingPair]) -> Value {
    Value::Array(
        pairs
            .iter()
            .map(|p| json!({ "first": p.first, "second": p.second, "gcd": int(&p.gcd) }))
            .collect(),
    )
}

fn certificate(c: &EmbeddingCertificate) -> Record {
    let mut rec = Record::new();
    esch_fields(&mut rec, &c.esch);
    rec.insert("c".into(), int(&c.shift));
    rec.insert("q".into(), ints(c.baz.q()));
    rec.insert("free".into(), json!(c.baz_free));
    rec.insert("pc".into(), json!(c.baz_pc));
    rec.insert("esch_pc".into(), json!(c.esch_pc));
    rec.insert(
        "h6".into(),
        if c.baz_free { int(&c.h6) } else { Value::Null },
    );
    rec.insert("offending_pairs".into(), offending(&c.offending_pairs));
    rec
}

pub fn verify_esch(e: &EschParams) -> Result<Report> {
    let mut r = Report::new("verify-esch");
    esch_input(&mut r, e);
    let canon = e.canonicalize();
    let mut rec = Record::new();
    esch_fields(&mut rec, e);
    rec.insert("free".into(), json!(e.is_free()));
    rec.insert("admits_pc".into(), json!(e.admits_positive_curvature()));
    rec.insert("pc_metric".into(), json!(e.is_pc_metric()));
    rec.insert("first_chain".into(), json!(e.is_first_chain()));
    rec.insert("h4".into(), int(&e.h4_order()));
    rec.insert("kernel_order".into(), int(&e.kernel_order()));
    rec.insert("canonical_a".into(), ints(canon.a()));
    rec.insert("canonical_b".into(), ints(canon.b()));
    let normal = e.pc_normal_form().ok();
    rec.insert(
        "normal_a".into(),
        normal.as_ref().map_or(Value::Null, |n| ints(n.a())),
    );
    rec.insert(
        "normal_b".into(),
        normal.as_ref().map_or(Value::Null, |n| ints(n.b())),
    );
    r.results.push(rec);
    Ok(r)
}

pub fn verify_baz(q: &BazParams) -> Result<Report> {
    let mut r = Report::new("verify-baz");
    r.input.insert("q".into(), ints(q.q()));
    let h6 = if q.all_odd() {
        int(&q.h6_order()?)
    } else {
        Value::Null
    };
    r.results.push(record(vec![
        ("q", ints(q.q())),
        ("free", json!(q.is_free())),
        ("all_odd", json!(q.all_odd())),
        ("even_entries", json!(q.even_entries())),
        ("offending_pairs", offending(&q.offending_pairs())),
        ("pc", json!(q.is_pc())),
        ("h6", h6),
    ]));
    Ok(r)
}

pub fn embed(e: &EschParams, c: &BigInt) -> Result<Report> {
    let mut r = Report::new("embed");
    esch_input(&mut r, e);
    r.input.insert("c".into(), int(c));
    r.results
        .push(certificate(&EmbeddingCertificate::new(e, c)));
    Ok(r)
}

pub fn window(e: &EschParams) -> Result<Report> {
    let mut r = Report::new("window");
    esch_input(&mut r, e);
    let w = window_scan(e)?;
    r.results = w.certificates.iter().map(certificate).collect();
    esch_fields(&mut r.summary, &w.esch);
    r.summary
        .insert("window".into(), json!(w.window.to_string()));
    r.summary.insert("window_lo".into(), int(&w.window.lo));
    r.summary.insert("window_hi".into(), int(&w.window.hi));
    r.summary
        .insert("any_nonsingular".into(), json!(w.any_nonsingular));
    r.discrepancy_notes = w.notes;
    Ok(r)
}

/// Every `c_mu` for `1 <= mu <= mu_max` and both signs. A singular shift is
/// a verification failure.
pub fn lemma2(e: &EschParams, mu_max: u32, cfg: &FactorConfig) -> Result<(Report, bool)> {
    let mut r = Report::new("lemma2");
    esch_input(&mut r, e);
    r.input.insert("mu_max".into(), json!(mu_max));
    if mu_max < 1 {
        return Err(Error::InvalidArgument("mu-max must be >= 1".into()));
    }
    let p = lemma2_prime_product(e, cfg)?;
    r.summary.insert("prime_product".into(), int(&p));
    let mut all_ok = true;
    for mu in 1..=mu_max {
        for sign in [Sign::Plus, Sign::Minus] {
            let c = shift_from_product(&p, mu, sign);
            let ok = nonsingular_shift(e, &c);
            all_ok &= ok;
            let cert = EmbeddingCertificate::new(e, &c);
            r.results.push(record(vec![
                ("mu", json!(mu)),
                ("sign", json!(sign.to_string())),
                ("c", int(&c)),
                ("nonsingular", json!(ok)),
                (
                    "h6",
                    if cert.baz_free {
                        int(&cert.h6)
                    } else {
                        Value::Null
                    },
                ),
            ]));
        }
    }
    Ok((r, all_ok))
}

pub fn distinct(e: &EschParams, n: usize, cfg: &FactorConfig) -> Result<Report> {
    let mut r = Report::new("distinct");
    esch_input(&mut r, e);
    r.input.insert("n".into(), json!(n));
    let certs = homotopy_distinct_embeddings_with(e, n, cfg)?;
    r.results = certs.iter().map(certificate).collect();
    r.summary.insert(
        "collision_locus".into(),
        json!(collision_locus(e).to_string()),
    );
    r.summary.insert("h4".into(), int(&e.h4_order()));
    Ok(r)
}

pub fn submanifolds(q: &BazParams) -> Result<Report> {
    let mut r = Report::new("submanifolds");
    r.input.insert("q".into(), ints(q.q()));
    let subs = q.submanifolds()?;
    for s in &subs {
        let mut rec = record(vec![("pair", json!(s.pair))]);
        esch_fields(&mut rec, &s.esch);
        rec.insert("free".into(), json!(s.esch.is_free()));
        rec.insert("h4".into(), int(&s.esch.h4_order()));
        r.results.push(rec);
    }
    r.summary
        .insert("distinct".into(), json!(distinct_submanifold_count(&subs)));
    r.summary.insert("baz_free".into(), json!(q.is_free()));
    Ok(r)
}

pub fn dual(e: &EschParams, c: &BigInt) -> Result<Report> {
    let mut r = Report::new("dual");
    esch_input(&mut r, e);
    r.input.insert("c".into(), int(c));
    let original = EmbeddingCertificate::new(e, c);
    let (d, host) = dual_embedding(e, c)?;
    let mut rec = Record::new();
    esch_fields(&mut rec, &d);
    rec.insert("q".into(), ints(host.q()));
    rec.insert("free".into(), json!(host.is_free()));
    rec.insert("pc".into(), json!(host.is_pc()));
    rec.insert("h6".into(), int(&host.h6_order()?));
    rec.insert("original_q".into(), ints(original.baz.q()));
    rec.insert("original_h6".into(), int(&original.h6));
    r.results.push(rec);
    Ok(r)
}

/// `q^c` with the shift left symbolic, e.g. `(79 + 2c, 1 + 2c, ...)`.
pub fn symbolic_host(e: &EschParams) -> String {
    let q = eschbaz::embedding::candidate_q(e, &BigInt::zero());
    let term = |k: &BigInt, plus: bool| format!("{k} {} 2c", if plus { '+' } else { '-' });
    let parts: Vec<String> = q
        .q()
        .iter()
        .enumerate()
        .map(|(i, k)| term(k, i < 3))
        .collect();
    format!("({})", parts.join(", "))
}

fn survey_row(row: &SurveyRow) -> Record {
    let singular: Vec<&BigInt> = row
        .verdicts
        .iter()
        .filter(|(_, ok)| !ok)
        .map(|(c, _)| c)
        .collect();
    let mut rec = Record::new();
    esch_fields(&mut rec, &row.esch);
    rec.insert("q_c".into(), json!(symbolic_host(&row.esch)));
    rec.insert("window".into(), json!(row.window.to_string()));
    rec.insert("window_lo".into(), int(&row.window.lo));
    rec.insert("window_hi".into(), int(&row.window.hi));
    rec.insert("counterexample".into(), json!(row.is_counterexample));
    rec.insert("h4".into(), int(&row.h4));
    rec.insert("singular_shifts".into(), ints(singular));
    rec
}

const TABLE_COLUMNS: [&str; 6] = ["a", "b", "q_c", "window", "counterexample", "h4"];

pub fn table1() -> Result<Report> {
    let mut r = Report::new("table1");
    r.results = verify_table1()?.iter().map(survey_row).collect();
    r.summary.insert("rows".into(), json!(r.results.len()));
    r.csv_columns = Some(TABLE_COLUMNS.to_vec());
    Ok(r)
}

pub fn families(k_max: i64) -> Result<Report> {
    let mut r = Report::new("families");
    r.input.insert("k_max".into(), json!(k_max));
    for (v, k, row) in verify_infinite_families(k_max)? {
        let mut rec = record(vec![("variant", json!(v.to_string())), ("k", json!(k))]);
        rec.extend(survey_row(&row));
        r.results.push(rec);
    }
    r.summary.insert("members".into(), json!(r.results.len()));
    r.csv_columns = Some(["variant", "k"].into_iter().chain(TABLE_COLUMNS).collect());
    Ok(r)
}

pub fn cohom1(p_max: i64) -> Result<Report> {
    let mut r = Report::new("cohom1");
    r.input.insert("p_max".into(), json!(p_max));
    let s = verify_cohomogeneity_one(p_max)?;
    for m in &s.members {
        let mut rec = record(vec![("p", json!(m.p))]);
        rec.extend(certificate(&m.certificate));
        rec.remove("offending_pairs");
        rec.insert("window".into(), json!(m.window.to_string()));
        r.results.push(rec);
    }
    r.discrepancy_notes = s.notes;
    Ok(r)
}

pub fn scan(max_abs: i64, limit: usize) -> Result<Report> {
    let mut r = Report::new("scan");
    r.input.insert("max_abs".into(), json!(max_abs));
    r.input.insert("limit".into(), json!(limit));
    let s = scan_box(max_abs, limit)?;
    r.results = s.rows.iter().map(survey_row).collect();
    r.summary.insert("total".into(), json!(s.stats.total));
    r.summary
        .insert("embeddable".into(), json!(s.stats.embeddable));
    r.summary
        .insert("counterexamples".into(), json!(s.stats.counterexamples));
    r.csv_columns = Some(TABLE_COLUMNS.to_vec());
    Ok(r)
}
