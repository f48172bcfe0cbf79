use std::fmt::Write;

use frey_core::algebra::{int, rat, rat_to_string, two_pow, Poly, Rat};
use frey_core::families::{
    verify_closed_form_disc, verify_czs_disc_at_unit_z, verify_h_disc_via_czs, verify_identities,
    DiscReport, FamilyId,
};
use frey_core::hyperelliptic::{apply_change, hyper_discriminant, HyperEq, MobiusChange};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::args::VerifyArgs;
use crate::error::CliError;
use crate::Report;

/// Largest `r` for which two-variable discriminants are computed directly.
const DIRECT_LIMIT: u32 = 7;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Pass,
    Fail,
    /// The printed statement is off in a known, characterized way.
    DocumentedMismatch,
}

impl Status {
    fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::DocumentedMismatch => "documented-mismatch",
        }
    }

    fn short(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::DocumentedMismatch => "DOC",
        }
    }
}

pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, ok: bool, detail: impl Into<String>) -> Self {
        let status = if ok { Status::Pass } else { Status::Fail };
        Check {
            name,
            status,
            detail: detail.into(),
        }
    }

    fn json(&self) -> Value {
        json!({
            "name": self.name,
            "status": self.status.name(),
            "passed": self.status == Status::Pass,
            "detail": self.detail,
        })
    }
}

fn disc_check(
    name: &'static str,
    rep: &DiscReport,
    method: &str,
    tolerated: Option<&Rat>,
) -> Check {
    let ratio = rep
        .ratio
        .as_ref()
        .map(rat_to_string)
        .unwrap_or_else(|| "not constant".into());
    if rep.matches {
        return Check::new(
            name,
            true,
            format!("{method}: equals the printed closed form"),
        );
    }
    let status = match (&rep.ratio, tolerated) {
        (Some(q), Some(t)) if q == t => Status::DocumentedMismatch,
        _ => Status::Fail,
    };
    Check {
        name,
        status,
        detail: format!(
            "{method}: computed / printed = {ratio}; computed {}",
            rep.direct
        ),
    }
}

fn checks_for(r: u32) -> Result<Vec<Check>, CliError> {
    let id = verify_identities(r)?;
    let mut out = vec![
        Check::new(
            "f_recurrence_matches_h",
            id.f_definitional,
            format!("f = {}", id.f),
        ),
        Check::new(
            "f_plus_2_identity",
            id.plus_identity,
            "f + 2 = (x + 2) h(-x)^2",
        ),
        Check::new(
            "f_squared_minus_4_identity",
            id.product_identity,
            "f^2 - 4 = (x^2 - 4)(h(x) h(-x))^2",
        ),
    ];
    out.push(if id.minus_printed_holds {
        Check::new("f_minus_2_square_factor", true, "f - 2 = (x - 2) h(-x)^2")
    } else if id.minus_factor_is_h {
        Check {
            name: "f_minus_2_square_factor",
            status: Status::DocumentedMismatch,
            detail: format!("f - 2 = (x - 2) h(x)^2, not h(-x)^2; h(x) = {}", id.h),
        }
    } else {
        Check::new(
            "f_minus_2_square_factor",
            false,
            format!("square factor {}", id.minus_square_factor),
        )
    });

    let direct = r <= DIRECT_LIMIT;
    let czs = if direct {
        verify_closed_form_disc(FamilyId::Czs, r)?
    } else {
        verify_czs_disc_at_unit_z(r)?
    };
    let czs_method = if direct {
        "direct"
    } else {
        "at z = 1, weighted homogeneous"
    };
    out.push(disc_check("disc_C_zs", &czs, czs_method, None));

    let cplus = verify_closed_form_disc(FamilyId::CPlus, r)?;
    out.push(disc_check(
        "disc_C_plus",
        &cplus,
        "direct",
        Some(&two_pow(2 * r as i64 - 2)),
    ));

    for (name, family) in [("disc_H_2r", FamilyId::H2r), ("disc_H_rr", FamilyId::Hrr)] {
        let (rep, method) = if direct {
            (verify_closed_form_disc(family, r)?, "direct")
        } else {
            (
                verify_h_disc_via_czs(family, r)?,
                "via the C_zs closed form",
            )
        };
        out.push(disc_check(name, &rep, method, None));
    }
    Ok(out)
}

fn random_poly(rng: &mut ChaCha8Rng, deg: usize, monic_nonzero: bool) -> Poly<Rat> {
    let mut c: Vec<i64> = (0..=deg).map(|_| rng.random_range(-4..=4)).collect();
    if monic_nonzero && c[deg] == 0 {
        c[deg] = if rng.random_bool(0.5) { 1 } else { -1 };
    }
    Poly::from_ints(&c)
}

fn random_pair(rng: &mut ChaCha8Rng) -> (HyperEq<Rat>, MobiusChange<Rat>) {
    loop {
        let g = rng.random_range(1..=2usize);
        let dp = 2 * g + rng.random_range(1..=2usize);
        let q = random_poly(rng, g + 1, false);
        let p = random_poly(rng, dp, true);
        let Ok(eq) = HyperEq::new(q, p, g) else {
            continue;
        };
        let mut k = || int(rng.random_range(-3..=3));
        let (a, b, c, d) = (k(), k(), k(), k());
        let e = rat(
            rng.random_range(1..=5) * if rng.random_bool(0.5) { 1 } else { -1 },
            rng.random_range(1..=5),
        );
        let ds = rng.random_range(0..=g + 1);
        let shift = random_poly(rng, ds, false);
        let Ok(m) = MobiusChange::new(a, b, c, d, e, shift) else {
            continue;
        };
        if hyper_discriminant(&eq).is_ok_and(|d| d != int(0)) {
            return (eq, m);
        }
    }
}

fn change_law(samples: usize, seed: u64) -> Result<Check, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..samples {
        let (eq, m) = random_pair(&mut rng);
        let before = hyper_discriminant(&eq)?;
        let (after, factor) = apply_change(&eq, &m)?;
        if hyper_discriminant(&after)? != factor * before {
            return Ok(Check::new(
                "change_of_variables_law",
                false,
                format!("sample {i}: {eq}"),
            ));
        }
    }
    Ok(Check::new(
        "change_of_variables_law",
        true,
        format!("{samples} random pairs, seed {seed}"),
    ))
}

fn global_checks(a: &VerifyArgs) -> Result<Vec<Check>, CliError> {
    let h35 = verify_closed_form_disc(FamilyId::H35, 5)?;
    Ok(vec![
        disc_check("disc_H_35", &h35, "direct", None),
        change_law(a.samples, a.seed)?,
    ])
}

pub fn run(a: &VerifyArgs) -> Result<Report, CliError> {
    let per_r: Vec<(u32, Vec<Check>)> =
        a.r.0
            .iter()
            .map(|&r| Ok((r, checks_for(r)?)))
            .collect::<Result<_, CliError>>()?;
    let global = global_checks(a)?;
    let all = || per_r.iter().flat_map(|(_, c)| c).chain(&global);
    let count = |s: Status| all().filter(|c| c.status == s).count();
    let (failed, documented, passed) = (
        count(Status::Fail),
        count(Status::DocumentedMismatch),
        count(Status::Pass),
    );

    let json = json!({
        "r": a.r.0,
        "per_r": per_r.iter().map(|(r, cs)| json!({
            "r": r,
            "checks": cs.iter().map(Check::json).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "global": global.iter().map(Check::json).collect::<Vec<_>>(),
        "summary": { "passed": passed, "failed": failed, "documented_mismatch": documented, "ok": failed == 0 },
    });

    let mut t = String::new();
    let names: Vec<&str> = per_r
        .first()
        .map(|(_, cs)| cs.iter().map(|c| c.name).collect())
        .unwrap_or_default();
    let width = names.iter().map(|n| n.len()).max().unwrap_or(5);
    write!(t, "{:width$}", "check").unwrap();
    for (r, _) in &per_r {
        write!(t, "  {:>5}", format!("r={r}")).unwrap();
    }
    t.push('\n');
    for (i, name) in names.iter().enumerate() {
        write!(t, "{name:width$}").unwrap();
        for (_, cs) in &per_r {
            write!(t, "  {:>5}", cs[i].status.short()).unwrap();
        }
        t.push('\n');
    }
    for c in &global {
        writeln!(t, "{:width$}  {} ({})", c.name, c.status.short(), c.detail).unwrap();
    }
    let notable: Vec<_> = per_r
        .iter()
        .flat_map(|(r, cs)| cs.iter().map(move |c| (r, c)))
        .filter(|(_, c)| c.status != Status::Pass)
        .collect();
    for (r, c) in notable {
        writeln!(t, "r = {r}, {}: {}: {}", c.name, c.status.name(), c.detail).unwrap();
    }
    writeln!(
        t,
        "{passed} passed, {failed} failed, {documented} documented mismatches"
    )
    .unwrap();
    Ok(Report {
        text: t,
        json,
        exit: if failed == 0 { 0 } else { 4 },
    })
}
