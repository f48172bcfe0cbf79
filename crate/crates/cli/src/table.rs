use std::collections::BTreeMap;
use std::fmt::Write;

use frey_core::algebra::Rat;
use frey_core::classifier::{
    classify_grid, cross_validate, table_rows, Exponent, Mode, Signature, ValCase,
};
use serde_json::{json, Value};

use crate::args::TableArgs;
use crate::classify::report_json;
use crate::error::CliError;
use crate::json::rat;
use crate::Report;

/// Valuations used to annotate rows against the pipelines.
const ANNOTATION_GRID: std::ops::RangeInclusive<i64> = -11..=11;

struct Conflict {
    t: Rat,
    table: u8,
    pipeline: u8,
}

#[derive(Default)]
struct Tally {
    points: usize,
    agree: usize,
    conflicts: Vec<Conflict>,
}

/// The `r` values a signature is evaluated at (35p has no free `r`).
fn rs_for(sig: Signature, rs: &[u32]) -> Vec<u32> {
    if sig.uses_r() {
        rs.to_vec()
    } else {
        vec![5]
    }
}

fn signatures(filter: Option<Signature>) -> Vec<Signature> {
    Signature::ALL
        .into_iter()
        .filter(|s| filter.is_none_or(|f| f == *s))
        .collect()
}

/// Source string -> r -> agreement with the pipelines over the grid.
fn annotate(
    sigs: &[Signature],
    rs: &[u32],
    mode: Mode,
) -> Result<BTreeMap<String, BTreeMap<u32, Tally>>, CliError> {
    let grid: Vec<i64> = ANNOTATION_GRID.collect();
    let mut out: BTreeMap<String, BTreeMap<u32, Tally>> = BTreeMap::new();
    for &sig in sigs {
        for r in rs_for(sig, rs) {
            for rep in classify_grid(sig, r, &grid, mode)? {
                let Exponent::Value(e) = rep.exponent else {
                    continue;
                };
                let x = cross_validate(sig, r, &rep.t)?;
                let tally = out
                    .entry(rep.source.clone())
                    .or_default()
                    .entry(r)
                    .or_default();
                tally.points += 1;
                if x.oracle_exponent == e {
                    tally.agree += 1;
                } else {
                    tally.conflicts.push(Conflict {
                        t: rep.t.clone(),
                        table: e,
                        pipeline: x.oracle_exponent,
                    });
                }
            }
        }
    }
    Ok(out)
}

fn rows(a: &TableArgs) -> Result<Report, CliError> {
    let sigs = signatures(a.signature);
    let notes = annotate(&sigs, &a.r.0, a.mode)?;
    let mut json_rows = Vec::new();
    let mut t = String::new();
    writeln!(
        t,
        "{} mode; annotations compare each row with the reduction pipelines for v2 in [{}, {}]",
        a.mode.name(),
        ANNOTATION_GRID.start(),
        ANNOTATION_GRID.end()
    )
    .unwrap();
    for row in table_rows(a.mode)
        .into_iter()
        .filter(|r| sigs.contains(&r.signature))
    {
        let empty = BTreeMap::new();
        let tallies = notes.get(&row.source).unwrap_or(&empty);
        let ann: Vec<Value> = tallies
            .iter()
            .map(|(r, tl)| {
                json!({
                    "r": r,
                    "grid_points": tl.points,
                    "agree": tl.agree,
                    "conflicts": tl.conflicts.iter().map(|c| json!({
                        "t": rat(&c.t),
                        "table_exponent": c.table,
                        "pipeline_exponent": c.pipeline,
                    })).collect::<Vec<_>>(),
                })
            })
            .collect();
        json_rows.push(json!({
            "signature": row.signature.name(),
            "label": row.label,
            "degree": row.degree,
            "v2_t": row.v_t,
            "v2_1mt": row.v_1mt,
            "conductor_exponent": row.exponent,
            "source": row.source,
            "mode": a.mode.name(),
            "annotations": ann,
        }));
        writeln!(
            t,
            "{} {:4}  v2(t): {:20}  v2(1-t): {:20}  exponent {}",
            row.label, row.degree, row.v_t, row.v_1mt, row.exponent
        )
        .unwrap();
        for (r, tl) in tallies {
            write!(t, "    r = {r}: {}/{} agree", tl.agree, tl.points).unwrap();
            if !tl.conflicts.is_empty() {
                let list: Vec<String> = tl
                    .conflicts
                    .iter()
                    .map(|c| format!("t = {}: table {}, pipeline {}", c.t, c.table, c.pipeline))
                    .collect();
                write!(t, "; conflicts: {}", list.join("; ")).unwrap();
            }
            t.push('\n');
        }
    }
    Ok(Report::ok(t, Value::Array(json_rows)))
}

fn grid(a: &TableArgs, (lo, hi): (i64, i64)) -> Result<Report, CliError> {
    let vs: Vec<i64> = (lo..=hi).collect();
    let mut items = Vec::new();
    for sig in signatures(a.signature) {
        for r in rs_for(sig, &a.r.0) {
            for rep in classify_grid(sig, r, &vs, a.mode)? {
                items.push(rep);
            }
        }
    }
    // Stable, so valuation order within a block is kept.
    let regime = |t: &Rat| match ValCase::of(t) {
        Ok(ValCase::TNeg(_)) => 0,
        Ok(ValCase::TPos(_)) => 1,
        _ => 2,
    };
    items.sort_by_key(|c| (c.signature, regime(&c.t), c.r));
    let mut t = String::new();
    for c in &items {
        let r = if c.signature.uses_r() {
            format!("r = {:2}", c.r)
        } else {
            "      ".into()
        };
        writeln!(
            t,
            "{:8} {r}  t = {:>12}  {:18}  exponent {:11}  {}",
            c.signature.name(),
            c.t.to_string(),
            c.case,
            c.exponent.to_string(),
            c.source
        )
        .unwrap();
    }
    Ok(Report::ok(
        t,
        Value::Array(items.iter().map(report_json).collect()),
    ))
}

pub fn run(a: &TableArgs) -> Result<Report, CliError> {
    match a.grid_exponents {
        Some(range) => grid(a, range),
        None => rows(a),
    }
}
