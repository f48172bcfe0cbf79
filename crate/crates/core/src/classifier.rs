//! Conductor exponents at the prime above 2, up to quadratic twist.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{int, require_odd_prime, two_pow, v2, Rat};
use crate::error::{Error, Result};
use crate::families::{h_family_zs, FamilyId};
use crate::local::WeightInterval;
use crate::pipelines::{
    field_of_definition, pipeline_35p, pipeline_odd_good_reduction, pipeline_ppr_even, Case35,
    FieldOfDefinition, PipelineResult, PprCase,
};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum Signature {
    PprEven,
    PprOdd,
    Rrp,
    TwoRp,
    P35,
}

impl Signature {
    pub const ALL: [Signature; 5] = [
        Signature::PprEven,
        Signature::PprOdd,
        Signature::Rrp,
        Signature::TwoRp,
        Signature::P35,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Signature::PprEven => "ppr-even",
            Signature::PprOdd => "ppr-odd",
            Signature::Rrp => "rrp",
            Signature::TwoRp => "2rp",
            Signature::P35 => "35p",
        }
    }

    /// Whether `r` is a real parameter (it is fixed to 5 for `35p`).
    pub fn uses_r(&self) -> bool {
        *self != Signature::P35
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Signature {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Signature::ALL
            .into_iter()
            .find(|sig| sig.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown signature {s:?}")))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, Default)]
pub enum Mode {
    /// The table exactly as printed.
    #[default]
    Printed,
    /// The `ppr-odd` congruence taken from the field-of-definition criterion.
    Oracle,
}

impl Mode {
    pub fn name(&self) -> &'static str {
        match self {
            Mode::Printed => "printed",
            Mode::Oracle => "oracle",
        }
    }
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "printed" => Ok(Mode::Printed),
            "oracle" => Ok(Mode::Oracle),
            _ => Err(Error::Parse(format!("unknown mode {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum InertialType {
    Good,
    PrincipalSeries,
    Supercuspidal,
    Toric,
}

impl InertialType {
    pub fn name(&self) -> &'static str {
        match self {
            InertialType::Good => "good",
            InertialType::PrincipalSeries => "principal_series",
            InertialType::Supercuspidal => "supercuspidal",
            InertialType::Toric => "toric",
        }
    }
}

impl fmt::Display for InertialType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Exponent {
    Value(u8),
    NotCovered,
}

impl Exponent {
    pub fn value(&self) -> Option<u8> {
        match *self {
            Exponent::Value(v) => Some(v),
            Exponent::NotCovered => None,
        }
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Value(v) => write!(f, "{v}"),
            Exponent::NotCovered => f.write_str("not_covered"),
        }
    }
}

/// The three mutually exclusive 2-adic regimes of `t ∉ {0, 1}`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum ValCase {
    /// `v2(t) < 0`, so also `v2(1 - t) = v2(t)`.
    TNeg(i64),
    /// `v2(t) > 0`.
    TPos(i64),
    /// `v2(1 - t) > 0`.
    OneMinusTPos(i64),
}

impl ValCase {
    pub fn of(t: &Rat) -> Result<Self> {
        let omt = int(1) - t;
        let (Some(vt), Some(v1)) = (v2(t), v2(&omt)) else {
            return Err(Error::DegenerateParameter(format!("t = {t}")));
        };
        Ok(if vt < 0 {
            ValCase::TNeg(vt)
        } else if vt > 0 {
            ValCase::TPos(vt)
        } else {
            assert!(v1 > 0, "a 2-adic unit t has 1 - t even");
            ValCase::OneMinusTPos(v1)
        })
    }

    pub fn label(&self) -> String {
        match self {
            ValCase::TNeg(v) => format!("v2(t) = {v} < 0"),
            ValCase::TPos(v) => format!("v2(t) = {v} > 0"),
            ValCase::OneMinusTPos(v) => format!("v2(1-t) = {v} > 0"),
        }
    }

    /// A simple `t` in this regime with the given valuation.
    pub fn representative(&self) -> Rat {
        match *self {
            ValCase::TNeg(v) | ValCase::TPos(v) => two_pow(v) * int(3),
            ValCase::OneMinusTPos(v) => int(1) - two_pow(v) * int(3),
        }
    }
}

/// Order of 2 in `(Z/r)^× / {±1}`: the residue degree of 2 in `Q(ζ_r)^+`.
pub fn residue_degree(r: u32) -> Result<u32> {
    require_odd_prime(r)?;
    let mut x = 2u64 % r as u64;
    let mut f = 1;
    while x != 1 && x != r as u64 - 1 {
        x = x * 2 % r as u64;
        f += 1;
    }
    Ok(f)
}

/// Principal series iff the tame ramification index divides `2^f - 1`,
/// `f` the residue degree.
pub fn inertial_type_in(residue_deg: u32, ram_index: u32) -> InertialType {
    let order = (1u128 << residue_deg) - 1;
    if order.is_multiple_of(ram_index as u128) {
        InertialType::PrincipalSeries
    } else {
        InertialType::Supercuspidal
    }
}

/// The inertial type of an exponent-2 case for signature exponent `r`.
pub fn inertial_type(r: u32) -> Result<InertialType> {
    Ok(inertial_type_in(residue_degree(r)?, r))
}

#[derive(Clone, PartialEq, Debug)]
pub struct ConductorReport {
    pub signature: Signature,
    pub r: u32,
    pub t: Rat,
    pub mode: Mode,
    pub case: String,
    pub exponent: Exponent,
    pub inertial_type: Option<InertialType>,
    /// The table row (or statement) the exponent comes from.
    pub source: String,
    /// Result of the field-of-definition check, when consulted.
    pub oracle: Option<String>,
}

fn annotate(exp: u8, ram: impl FnOnce() -> Result<InertialType>) -> Result<Option<InertialType>> {
    Ok(Some(match exp {
        0 => InertialType::Good,
        1 => InertialType::Toric,
        _ => ram()?,
    }))
}

/// Deferred inertial-type computation for an exponent-2 case.
type RamifiedType = Box<dyn FnOnce() -> Result<InertialType>>;

/// Classify by valuation regime, per the table or its oracle-corrected form.
pub fn classify(sig: Signature, r: u32, t: &Rat, mode: Mode) -> Result<ConductorReport> {
    let r = if sig.uses_r() {
        require_odd_prime(r)?;
        r
    } else {
        5
    };
    let case = ValCase::of(t)?;
    let ri = r as i64;
    let divides = |n: i64, m: i64| n.rem_euclid(m) == 0;
    let mut oracle = None;
    let (exponent, source, ram): (Exponent, String, Option<RamifiedType>) = match (sig, case) {
        (Signature::PprEven, ValCase::TNeg(v)) => {
            let e = if divides(v, ri) { 0 } else { 2 };
            (
                Exponent::Value(e),
                format!(
                    "(p,p,r) even: v2(t) < 0, {} 0 mod r",
                    if e == 0 { "≡" } else { "≢" }
                ),
                Some(Box::new(move || inertial_type(r))),
            )
        }
        (Signature::PprEven, ValCase::TPos(_)) => {
            (Exponent::Value(1), "(p,p,r) even: v2(t) > 0".into(), None)
        }
        (Signature::PprEven, ValCase::OneMinusTPos(_)) => {
            (Exponent::Value(1), "(p,p,r) even: v2(1-t) > 0".into(), None)
        }
        (Signature::PprOdd, ValCase::TNeg(v)) if v <= -4 => {
            let base = match mode {
                Mode::Printed => divides(v + 2, ri),
                Mode::Oracle => {
                    let s = int(2) - int(4) * t;
                    let b = field_of_definition(&int(1), &s, r)?;
                    oracle = Some(format!("field_of_definition(1, {s}, {r}) = {b}"));
                    b
                }
            };
            let rule = match mode {
                Mode::Printed => "-2",
                Mode::Oracle => "-4",
            };
            (
                Exponent::Value(if base { 0 } else { 2 }),
                format!(
                    "(p,p,r) odd: v2(t) <= -4, {} {rule} mod r",
                    if base { "≡" } else { "≢" }
                ),
                Some(Box::new(move || inertial_type(r))),
            )
        }
        (Signature::Rrp, ValCase::TPos(m) | ValCase::OneMinusTPos(m)) if m >= 4 => {
            let e = if divides(m - 4, ri) { 0 } else { 2 };
            let which = if matches!(case, ValCase::TPos(_)) {
                "t"
            } else {
                "1-t"
            };
            (
                Exponent::Value(e),
                format!(
                    "(r,r,p): v2({which}) >= 4, {} 4 mod r",
                    if e == 0 { "≡" } else { "≢" }
                ),
                Some(Box::new(move || inertial_type(r))),
            )
        }
        (Signature::TwoRp, ValCase::OneMinusTPos(m)) if m >= 6 => {
            let e = if divides(m - 6, ri) { 0 } else { 2 };
            (
                Exponent::Value(e),
                format!(
                    "(2,r,p): v2(t-1) >= 6, {} 6 mod r",
                    if e == 0 { "≡" } else { "≢" }
                ),
                Some(Box::new(move || inertial_type(r))),
            )
        }
        (Signature::P35, ValCase::TPos(v)) => {
            let e = if divides(v, 3) { 0 } else { 2 };
            (
                Exponent::Value(e),
                format!(
                    "(3,5,p): v2(t) > 0, {} 0 mod 3",
                    if e == 0 { "≡" } else { "≢" }
                ),
                Some(Box::new(|| Ok(inertial_type_in(residue_degree(5)?, 3)))),
            )
        }
        (Signature::P35, ValCase::OneMinusTPos(v)) => {
            let e = if divides(v, 5) { 0 } else { 2 };
            (
                Exponent::Value(e),
                format!(
                    "(3,5,p): v2(1-t) > 0, {} 0 mod 5",
                    if e == 0 { "≡" } else { "≢" }
                ),
                Some(Box::new(|| Ok(inertial_type_in(residue_degree(5)?, 5)))),
            )
        }
        (Signature::P35, ValCase::TNeg(_)) => {
            (Exponent::Value(1), "(3,5,p): v2(t) < 0".into(), None)
        }
        _ => (
            Exponent::NotCovered,
            "outside the table's valuation ranges".into(),
            None,
        ),
    };
    let inertial_type = match exponent {
        Exponent::NotCovered => None,
        Exponent::Value(e) => annotate(e, || ram.map_or(Ok(InertialType::Toric), |f| f()))?,
    };
    Ok(ConductorReport {
        signature: sig,
        r,
        t: t.clone(),
        mode,
        case: case.label(),
        exponent,
        inertial_type,
        source,
        oracle,
    })
}

#[derive(Clone, PartialEq, Debug)]
pub struct CrossReport {
    pub printed: ConductorReport,
    pub corrected: ConductorReport,
    /// Exponent implied by the reduction pipeline.
    pub oracle_exponent: u8,
    pub agree: bool,
    pub witness: PipelineResult,
}

/// Exponent implied by a pipeline run: toric for a nodal fiber, otherwise 0
/// when no ramification is needed and 2 when it is.
fn pipeline_exponent(w: &PipelineResult, extension_trivial: bool) -> u8 {
    if !w.is_good_reduction() {
        return 1;
    }
    if extension_trivial || w.field_of_definition == FieldOfDefinition::Base {
        0
    } else {
        2
    }
}

fn not_covered(sig: Signature, t: &Rat) -> Error {
    Error::NotCovered(format!("no pipeline for {sig} at t = {t}"))
}

/// Run both classification modes and the matching pipeline; report whether
/// the printed exponent agrees with the pipeline.
pub fn cross_validate(sig: Signature, r: u32, t: &Rat) -> Result<CrossReport> {
    let printed = classify(sig, r, t, Mode::Printed)?;
    let corrected = classify(sig, r, t, Mode::Oracle)?;
    if printed.exponent == Exponent::NotCovered {
        return Err(not_covered(sig, t));
    }
    let r = printed.r;
    let case = ValCase::of(t)?;
    let (witness, trivial) = match (sig, case) {
        (Signature::PprEven, ValCase::TNeg(v)) => {
            let w = WeightInterval::point(Rat::new((-v).into(), (r as i64).into()))?;
            (pipeline_ppr_even(PprCase::VNeg, r, &w)?, v % r as i64 == 0)
        }
        (Signature::PprEven, ValCase::TPos(v)) => {
            let w = WeightInterval::point(int(v))?;
            (pipeline_ppr_even(PprCase::VTPos, r, &w)?, true)
        }
        (Signature::PprEven, ValCase::OneMinusTPos(v)) => {
            let w = WeightInterval::point(int(v))?;
            (pipeline_ppr_even(PprCase::V1mtPos, r, &w)?, true)
        }
        (Signature::P35, ValCase::TPos(v)) => (pipeline_35p(Case35::VTPos)?, v % 3 == 0),
        (Signature::P35, ValCase::OneMinusTPos(v)) => (pipeline_35p(Case35::V1mtPos)?, v % 5 == 0),
        (Signature::P35, ValCase::TNeg(_)) => (pipeline_35p(Case35::VNeg)?, true),
        (Signature::PprOdd, _) => {
            let s = int(2) - int(4) * t;
            (pipeline_odd_good_reduction(&int(1), &s, r)?, false)
        }
        (Signature::Rrp | Signature::TwoRp, _) => {
            let family = if sig == Signature::Rrp {
                FamilyId::Hrr
            } else {
                FamilyId::H2r
            };
            let (z, s) = h_family_zs(family, r, t)?;
            (pipeline_odd_good_reduction(&z, &s, r)?, false)
        }
    };
    let oracle_exponent = pipeline_exponent(&witness, trivial);
    Ok(CrossReport {
        agree: printed.exponent == Exponent::Value(oracle_exponent),
        printed,
        corrected,
        oracle_exponent,
        witness,
    })
}

/// One row of the summary table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TableRow {
    pub signature: Signature,
    pub label: &'static str,
    pub degree: &'static str,
    pub v_t: String,
    pub v_1mt: String,
    pub exponent: u8,
    /// The `source` string [`classify`] reports for this row.
    pub source: String,
}

/// The summary table; in oracle mode the `ppr-odd` rows use `≡ -4 (mod r)`.
pub fn table_rows(mode: Mode) -> Vec<TableRow> {
    let odd = match mode {
        Mode::Printed => "-2",
        Mode::Oracle => "-4",
    };
    let row = |signature, v_t: &str, v_1mt: &str, exponent, source: &str| {
        let (label, degree) = match signature {
            Signature::PprEven => ("(p,p,r)", "even"),
            Signature::PprOdd => ("(p,p,r)", "odd"),
            Signature::Rrp => ("(r,r,p)", "odd"),
            Signature::TwoRp => ("(2,r,p)", "odd"),
            Signature::P35 => ("(3,5,p)", "even"),
        };
        TableRow {
            signature,
            label,
            degree,
            v_t: v_t.to_string(),
            v_1mt: v_1mt.to_string(),
            exponent,
            source: source.to_string(),
        }
    };
    use Signature::*;
    vec![
        row(
            PprEven,
            "<0, ≡0 (mod r)",
            "<0, ≡0 (mod r)",
            0,
            "(p,p,r) even: v2(t) < 0, ≡ 0 mod r",
        ),
        row(
            PprEven,
            "<0, ≢0 (mod r)",
            "<0, ≢0 (mod r)",
            2,
            "(p,p,r) even: v2(t) < 0, ≢ 0 mod r",
        ),
        row(PprEven, ">0", "0", 1, "(p,p,r) even: v2(t) > 0"),
        row(PprEven, "0", ">0", 1, "(p,p,r) even: v2(1-t) > 0"),
        row(
            PprOdd,
            &format!("<=-4, ≡{odd} (mod r)"),
            &format!("<=-4, ≡{odd} (mod r)"),
            0,
            &format!("(p,p,r) odd: v2(t) <= -4, ≡ {odd} mod r"),
        ),
        row(
            PprOdd,
            &format!("<=-4, ≢{odd} (mod r)"),
            &format!("<=-4, ≢{odd} (mod r)"),
            2,
            &format!("(p,p,r) odd: v2(t) <= -4, ≢ {odd} mod r"),
        ),
        row(
            Rrp,
            ">=4, ≡4 (mod r)",
            "0",
            0,
            "(r,r,p): v2(t) >= 4, ≡ 4 mod r",
        ),
        row(
            Rrp,
            ">=4, ≢4 (mod r)",
            "0",
            2,
            "(r,r,p): v2(t) >= 4, ≢ 4 mod r",
        ),
        row(
            Rrp,
            "0",
            ">=4, ≡4 (mod r)",
            0,
            "(r,r,p): v2(1-t) >= 4, ≡ 4 mod r",
        ),
        row(
            Rrp,
            "0",
            ">=4, ≢4 (mod r)",
            2,
            "(r,r,p): v2(1-t) >= 4, ≢ 4 mod r",
        ),
        row(
            TwoRp,
            "0",
            ">=6, ≡6 (mod r)",
            0,
            "(2,r,p): v2(t-1) >= 6, ≡ 6 mod r",
        ),
        row(
            TwoRp,
            "0",
            ">=6, ≢6 (mod r)",
            2,
            "(2,r,p): v2(t-1) >= 6, ≢ 6 mod r",
        ),
        row(
            P35,
            ">0, ≡0 (mod 3)",
            "0",
            0,
            "(3,5,p): v2(t) > 0, ≡ 0 mod 3",
        ),
        row(
            P35,
            ">0, ≢0 (mod 3)",
            "0",
            2,
            "(3,5,p): v2(t) > 0, ≢ 0 mod 3",
        ),
        row(
            P35,
            "0",
            ">0, ≡0 (mod 5)",
            0,
            "(3,5,p): v2(1-t) > 0, ≡ 0 mod 5",
        ),
        row(
            P35,
            "0",
            ">0, ≢0 (mod 5)",
            2,
            "(3,5,p): v2(1-t) > 0, ≢ 0 mod 5",
        ),
        row(P35, "<0", "<0", 1, "(3,5,p): v2(t) < 0"),
    ]
}

/// Classify a representative `t` for each regime compatible with the sign of
/// each valuation: `v < 0` gives `v2(t) = v`, `v > 0` gives both `v2(t) = v`
/// and `v2(1 - t) = v`. Sorted by regime, then valuation.
pub fn classify_grid(
    sig: Signature,
    r: u32,
    exponents: &[i64],
    mode: Mode,
) -> Result<Vec<ConductorReport>> {
    let mut cases = Vec::new();
    for &v in exponents {
        match v.cmp(&0) {
            std::cmp::Ordering::Less => cases.push((0, v, ValCase::TNeg(v))),
            std::cmp::Ordering::Greater => {
                cases.push((1, v, ValCase::TPos(v)));
                cases.push((2, v, ValCase::OneMinusTPos(v)));
            }
            std::cmp::Ordering::Equal => {}
        }
    }
    cases.sort_by_key(|&(k, v, _)| (k, v));
    cases.dedup_by_key(|&mut (k, v, _)| (k, v));
    cases
        .into_iter()
        .map(|(_, _, c)| classify(sig, r, &c.representative(), mode))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn residue_degrees() {
        let got: Vec<u32> = [3, 5, 7, 11, 13, 17, 19]
            .iter()
            .map(|&r| residue_degree(r).unwrap())
            .collect();
        assert_eq!(got, [1, 2, 3, 5, 6, 4, 9]);
        assert!(matches!(residue_degree(9), Err(Error::NotOddPrime(9))));
    }

    #[test]
    fn inertial_types() {
        for r in [3, 5, 11, 13] {
            assert_eq!(
                inertial_type(r).unwrap(),
                InertialType::Supercuspidal,
                "r = {r}"
            );
        }
        assert_eq!(inertial_type(7).unwrap(), InertialType::PrincipalSeries);
        assert_eq!(inertial_type_in(2, 3), InertialType::PrincipalSeries);
        assert_eq!(inertial_type_in(2, 5), InertialType::Supercuspidal);
    }

    #[test]
    fn table_examples() {
        let c = |sig, r, t: Rat| classify(sig, r, &t, Mode::Printed).unwrap().exponent;
        assert_eq!(c(Signature::PprEven, 5, rat(1, 32)), Exponent::Value(0));
        assert_eq!(c(Signature::TwoRp, 5, int(65)), Exponent::Value(0));
        assert_eq!(c(Signature::P35, 0, rat(3, 2)), Exponent::Value(1));
        assert_eq!(c(Signature::PprOdd, 3, rat(1, 4)), Exponent::NotCovered);
        assert!(matches!(
            classify(Signature::PprEven, 3, &int(1), Mode::Printed),
            Err(Error::DegenerateParameter(_))
        ));
    }

    #[test]
    fn ppr_odd_modes_differ() {
        let t = rat(1, 16);
        let p = classify(Signature::PprOdd, 3, &t, Mode::Printed).unwrap();
        let o = classify(Signature::PprOdd, 3, &t, Mode::Oracle).unwrap();
        assert_eq!(p.exponent, Exponent::Value(2));
        assert_eq!(o.exponent, Exponent::Value(0));
        let x = cross_validate(Signature::PprOdd, 3, &t).unwrap();
        assert_eq!(x.oracle_exponent, 0);
        assert!(!x.agree);
    }

    #[test]
    fn table_rows_match_classify_sources() {
        let vs: Vec<i64> = (-11..=11).collect();
        for mode in [Mode::Printed, Mode::Oracle] {
            let rows = table_rows(mode);
            let mut hit = vec![false; rows.len()];
            for sig in Signature::ALL {
                for r in [3u32, 5, 7] {
                    for rep in classify_grid(sig, r, &vs, mode).unwrap() {
                        let Exponent::Value(e) = rep.exponent else {
                            continue;
                        };
                        let i = rows
                            .iter()
                            .position(|row| row.source == rep.source)
                            .unwrap_or_else(|| panic!("{}", rep.source));
                        assert_eq!(rows[i].exponent, e);
                        assert_eq!(rows[i].signature, sig);
                        hit[i] = true;
                    }
                }
            }
            assert!(hit.iter().all(|&h| h), "{mode:?}");
        }
    }

    #[test]
    fn grid_respects_sign() {
        let g = classify_grid(Signature::PprEven, 3, &[3, -3, 0, 3], Mode::Printed).unwrap();
        let cases: Vec<_> = g.iter().map(|c| c.case.clone()).collect();
        assert_eq!(
            cases,
            ["v2(t) = -3 < 0", "v2(t) = 3 > 0", "v2(1-t) = 3 > 0"]
        );
    }
}
