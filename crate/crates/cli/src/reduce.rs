use std::fmt::Write;

use frey_core::local::WeightInterval;
use frey_core::pipelines::{
    pipeline_35p, pipeline_odd_good_reduction, pipeline_ppr_even, Case35, PipelineResult, PprCase,
};

use crate::args::{PipelineName, ReduceArgs};
use crate::error::CliError;
use crate::json;
use crate::Report;

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn render_text(res: &PipelineResult) -> String {
    let mut t = String::new();
    writeln!(t, "pipeline: {}", res.label).unwrap();
    writeln!(t, "model: {}", res.model).unwrap();
    writeln!(t, "integral: {}", yes(res.integral)).unwrap();
    writeln!(t, "discriminant: {}", res.discriminant).unwrap();
    writeln!(t, "discriminant valuation: {}", res.disc_valuation).unwrap();
    writeln!(t, "cumulative factor: {}", res.cumulative_factor).unwrap();
    writeln!(t, "bookkeeping holds: {}", yes(res.bookkeeping_holds)).unwrap();
    writeln!(t, "fiber: {}", res.fiber).unwrap();
    writeln!(
        t,
        "fiber type: {} ({} nodes)",
        res.fiber_type.label(),
        res.fiber_type.nodes()
    )
    .unwrap();
    for p in &res.points {
        let patch = format!("{:?}", p.patch).to_lowercase();
        let k = p.x.field().k().max(p.y.field().k());
        writeln!(
            t,
            "  {patch} point x = {}, y = {} in GF(2^{k}): {}",
            p.x,
            p.y,
            json::point_kind(p.kind)
        )
        .unwrap();
    }
    writeln!(t, "field of definition: {}", res.field_of_definition).unwrap();
    writeln!(t, "good reduction: {}", yes(res.is_good_reduction())).unwrap();
    for n in &res.notes {
        writeln!(t, "note: {n}").unwrap();
    }
    t
}

pub fn run(a: &ReduceArgs) -> Result<Report, CliError> {
    let weight = a.weight.clone().unwrap_or_else(WeightInterval::positive);
    let res = match a.pipeline {
        PipelineName::PprEvenVneg => pipeline_ppr_even(PprCase::VNeg, a.r, &weight)?,
        PipelineName::PprEvenVt => pipeline_ppr_even(PprCase::VTPos, a.r, &weight)?,
        PipelineName::PprEvenV1mt => pipeline_ppr_even(PprCase::V1mtPos, a.r, &weight)?,
        PipelineName::P35Vneg => pipeline_35p(Case35::VNeg)?,
        PipelineName::P35Vt => pipeline_35p(Case35::VTPos)?,
        PipelineName::P35V1mt => pipeline_35p(Case35::V1mtPos)?,
        PipelineName::OddGood => {
            let (Some(z), Some(s)) = (&a.z, &a.s) else {
                return Err(CliError::Usage("odd-good needs --z and --s".into()));
            };
            pipeline_odd_good_reduction(z, s, a.r)?
        }
    };
    Ok(Report::ok(render_text(&res), json::pipeline(&res)))
}
