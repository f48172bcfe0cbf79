//! Canonical JSON encodings. Object keys are sorted (serde_json's default
//! map), rationals are `"num/den"` strings and polynomials are coefficient
//! arrays, lowest degree first.

use frey_core::algebra::{rat_to_string, Domain, Gf2kElem, Poly, Rat};
use frey_core::fibers::{PointKind, PointReport, SpecialFiber};
use frey_core::hyperelliptic::HyperEq;
use frey_core::local::{LocalLaurent, TameElem};
use frey_core::pipelines::{DiscValuation, FinalModel, PipelineResult};
use serde_json::{json, Value};

pub fn rat(q: &Rat) -> Value {
    Value::String(rat_to_string(q))
}

pub fn gf(e: &Gf2kElem) -> Value {
    let f = e.field();
    json!({ "k": f.k(), "modulus": f.modulus(), "bits": e.bits() })
}

pub fn poly<D: Domain>(p: &Poly<D>, coeff: impl Fn(&D) -> Value) -> Value {
    Value::Array(p.coeffs().iter().map(coeff).collect())
}

fn laurent(x: &LocalLaurent) -> Value {
    Value::Array(x.terms().map(|(e, c)| json!([e, rat(c)])).collect())
}

fn tame(x: &TameElem) -> Value {
    json!({
        "pi_degree": x.degree(),
        "coeffs": x.coeffs().iter().map(rat).collect::<Vec<_>>(),
    })
}

fn equation<D: Domain + std::fmt::Display>(e: &HyperEq<D>, coeff: impl Fn(&D) -> Value) -> Value {
    json!({
        "equation": e.to_string(),
        "genus": e.genus(),
        "q": poly(e.q(), &coeff),
        "p": poly(e.p(), &coeff),
    })
}

pub fn fiber(f: &SpecialFiber) -> Value {
    json!({
        "equation": f.to_string(),
        "genus": f.genus(),
        "q": poly(f.q(), gf),
        "p": poly(f.p(), gf),
    })
}

pub fn point_kind(k: PointKind) -> &'static str {
    match k {
        PointKind::Smooth => "smooth",
        PointKind::Node => "node",
        PointKind::NonSemistable => "non_semistable",
    }
}

pub fn point(p: &PointReport) -> Value {
    json!({
        "patch": format!("{:?}", p.patch).to_lowercase(),
        "x": gf(&p.x),
        "y": gf(&p.y),
        "kind": point_kind(p.kind),
    })
}

pub fn pipeline(res: &PipelineResult) -> Value {
    let model = match &res.model {
        FinalModel::Laurent(e) => equation(e, laurent),
        FinalModel::Tame(e) => equation(e, tame),
    };
    let valuation = match &res.disc_valuation {
        DiscValuation::Exact(form) => json!({
            "constant": rat(&form.constant),
            "slope": rat(&form.slope),
            "text": form.to_string(),
        }),
        DiscValuation::Ambiguous(why) => json!({ "ambiguous": why }),
    };
    json!({
        "label": res.label,
        "r": res.r,
        "model": model,
        "integral": res.integral,
        "discriminant": res.discriminant,
        "discriminant_valuation": valuation,
        "cumulative_factor": res.cumulative_factor,
        "bookkeeping_holds": res.bookkeeping_holds,
        "good_reduction": res.is_good_reduction(),
        "fiber": fiber(&res.fiber),
        "fiber_type": res.fiber_type.label(),
        "nodes": res.fiber_type.nodes(),
        "points": res.points.iter().map(point).collect::<Vec<_>>(),
        "field_of_definition": res.field_of_definition.to_string(),
        "notes": res.notes,
    })
}

pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}
