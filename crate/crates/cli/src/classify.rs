use std::fmt::Write;

use frey_core::classifier::{classify, cross_validate, ConductorReport, Exponent};
use frey_core::Error;
use serde_json::{json, Value};

use crate::args::ClassifyArgs;
use crate::error::CliError;
use crate::json::rat;
use crate::Report;

pub fn exponent_json(e: Exponent) -> Value {
    match e {
        Exponent::Value(v) => json!(v),
        Exponent::NotCovered => json!("not_covered"),
    }
}

pub fn report_json(c: &ConductorReport) -> Value {
    json!({
        "signature": c.signature.name(),
        "r": if c.signature.uses_r() { json!(c.r) } else { Value::Null },
        "t": rat(&c.t),
        "case": c.case,
        "conductor_exponent": exponent_json(c.exponent),
        "inertial_type": c.inertial_type.map(|i| i.name()),
        "source": c.source,
        "oracle": c.oracle,
        "mode": c.mode.name(),
    })
}

pub fn run(a: &ClassifyArgs) -> Result<Report, CliError> {
    let c = classify(a.signature, a.r, &a.t, a.mode)?;
    if c.exponent == Exponent::NotCovered {
        return Err(Error::NotCovered(format!(
            "{} at t = {}: {}, {}",
            c.signature, c.t, c.case, c.source
        ))
        .into());
    }
    let mut json = report_json(&c);
    let mut text = String::new();
    let r = if c.signature.uses_r() {
        format!(", r = {}", c.r)
    } else {
        String::new()
    };
    writeln!(
        text,
        "{}{r}, t = {} ({} mode)",
        c.signature,
        c.t,
        c.mode.name()
    )
    .unwrap();
    writeln!(text, "case: {}", c.case).unwrap();
    writeln!(text, "conductor exponent: {}", c.exponent).unwrap();
    if let Some(i) = c.inertial_type {
        writeln!(text, "inertial type: {i}").unwrap();
    }
    writeln!(text, "source: {}", c.source).unwrap();
    if let Some(o) = &c.oracle {
        writeln!(text, "oracle: {o}").unwrap();
    }
    if a.cross_validate {
        let x = cross_validate(a.signature, a.r, &a.t)?;
        json["cross_validation"] = json!({
            "printed_exponent": exponent_json(x.printed.exponent),
            "corrected_exponent": exponent_json(x.corrected.exponent),
            "pipeline_exponent": x.oracle_exponent,
            "agree": x.agree,
            "pipeline": x.witness.label,
            "fiber": x.witness.fiber.to_string(),
            "fiber_type": x.witness.fiber_type.label(),
            "field_of_definition": x.witness.field_of_definition.to_string(),
        });
        writeln!(
            text,
            "cross-validation: printed {}, corrected {}, pipeline {} ({}): {}",
            x.printed.exponent,
            x.corrected.exponent,
            x.oracle_exponent,
            x.witness.label,
            if x.agree { "agree" } else { "CONFLICT" }
        )
        .unwrap();
    }
    Ok(Report::ok(text, json))
}
