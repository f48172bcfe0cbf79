//! Darmon's polynomials and the Frey hyperelliptic families built from them.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{int, require_odd_prime, two_pow, Domain, Poly, QAlgebra, Rat};
use crate::error::{Error, Result};
use crate::hyperelliptic::{hyper_discriminant, HyperEq};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum FamilyId {
    /// `y^2 = f(x) + s`
    Cs,
    /// `y^2 = (x + 2)(f(x) + 2 - 4t)`
    CPlus,
    /// `y^2 = f(x) + 2 - 4t`
    CMinus,
    /// `y^2 = (-z)^{(r-1)/2} x h(2 - x^2/z) + s`
    Czs,
    Hrr,
    H2r,
    H35,
}

impl FamilyId {
    pub const ALL: [FamilyId; 7] = [
        FamilyId::Cs,
        FamilyId::CPlus,
        FamilyId::CMinus,
        FamilyId::Czs,
        FamilyId::Hrr,
        FamilyId::H2r,
        FamilyId::H35,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FamilyId::Cs => "C_s",
            FamilyId::CPlus => "C_plus",
            FamilyId::CMinus => "C_minus",
            FamilyId::Czs => "C_zs",
            FamilyId::Hrr => "H_rr",
            FamilyId::H2r => "H_2r",
            FamilyId::H35 => "H_35",
        }
    }

    /// Whether the family is parametrized by `t`.
    pub fn uses_t(&self) -> bool {
        !matches!(self, FamilyId::Cs | FamilyId::Czs)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyId::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(s.to_string()))
    }
}

/// `V_r` for `V_0 = 2`, `V_1 = x`, `V_{k+1} = x V_k - V_{k-1}`.
pub fn darmon_f(r: u32) -> Result<Poly<Rat>> {
    require_odd_prime(r)?;
    let x = Poly::<Rat>::x();
    let (mut prev, mut cur) = (Poly::constant(int(2)), x.clone());
    for _ in 1..r {
        let next = &(&x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Minimal polynomial of `2cos(2π/r)`, as the square root of `(f - 2)/(x - 2)`.
pub fn omega_min_poly(r: u32) -> Result<Poly<Rat>> {
    let f = darmon_f(r)?;
    let quotient = (&f - &Poly::constant(int(2)))
        .try_div_exact(&Poly::from_ints(&[-2, 1]))
        .ok_or_else(|| Error::AssertionFailed("x - 2 does not divide f - 2".into()))?;
    quotient
        .exact_sqrt()
        .ok_or_else(|| Error::AssertionFailed("(f - 2)/(x - 2) is not a square".into()))
}

/// `(-1)^{(r-1)/2} x h(2 - x^2)`.
pub fn definitional_f(r: u32) -> Result<Poly<Rat>> {
    let h = omega_min_poly(r)?;
    let inner = Poly::from_ints(&[2, 0, -1]);
    let sign = if ((r - 1) / 2).is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    };
    Ok((&Poly::x() * &h.compose(&inner)).scale(&sign))
}

/// The coefficients `c_k` with `f = Σ_k c_k x^{r-2k}`.
pub fn darmon_c(r: u32) -> Result<Vec<Rat>> {
    let f = darmon_f(r)?;
    Ok((0..=(r as usize - 1) / 2)
        .map(|k| f.coeff(r as usize - 2 * k))
        .collect())
}

fn genus(r: u32) -> usize {
    (r as usize - 1) / 2
}

fn lift<D: QAlgebra>(p: &Poly<Rat>) -> Poly<D> {
    p.map(D::from_rat)
}

/// `y^2 = Σ c_k z^k x^{r-2k} + s` over any Q-algebra.
pub fn czs_equation<D: QAlgebra>(r: u32, z: &D, s: &D) -> Result<HyperEq<D>> {
    let c = darmon_c(r)?;
    let mut coeffs = vec![D::zero(); r as usize + 1];
    for (k, ck) in c.iter().enumerate() {
        coeffs[r as usize - 2 * k] = D::from_rat(ck).times(&z.pow(k as u64));
    }
    coeffs[0] = coeffs[0].plus(s);
    HyperEq::new(Poly::zero(), Poly::new(coeffs), genus(r))
}

/// The `(z, s)` of `H_rr` and `H_2r` as functions of `t`.
pub fn h_family_zs<D: QAlgebra>(family: FamilyId, r: u32, t: &D) -> Result<(D, D)> {
    let g = genus(r) as u64;
    let tm1 = t.minus(&D::one());
    let z = t.times(&tm1);
    let s = match family {
        FamilyId::Hrr => z.pow(g).times(&t.mul_u64(2).minus(&D::one())),
        FamilyId::H2r => tm1.pow(g).times(&t.pow(g + 1)).mul_u64(2),
        _ => return Err(Error::Parse(format!("{family} is not given by (z, s)"))),
    };
    Ok((z, s))
}

/// Equation of a `t`-family over any Q-algebra (`s` for `C_s`).
pub fn one_param_equation<D: QAlgebra>(family: FamilyId, r: u32, t: &D) -> Result<HyperEq<D>> {
    let x_poly = |c: &[D]| Poly::new(c.to_vec());
    match family {
        FamilyId::H35 => {
            let omt = D::one().minus(t);
            let a = t.times(&omt.pow(2));
            let q = x_poly(&[a.clone(), D::zero(), D::zero(), D::one()]);
            let p = x_poly(&[
                t.pow(2).times(&omt.pow(4)),
                D::from_i64(3).times(&t.pow(2)).times(&omt.pow(3)),
                D::zero(),
                a.mul_u64(2),
            ]);
            HyperEq::new(q, p, 2)
        }
        FamilyId::Cs => {
            require_odd_prime(r)?;
            let f = lift::<D>(&darmon_f(r)?);
            HyperEq::new(Poly::zero(), &f + &Poly::constant(t.clone()), genus(r))
        }
        FamilyId::CMinus | FamilyId::CPlus => {
            require_odd_prime(r)?;
            let f = lift::<D>(&darmon_f(r)?);
            let shift = D::from_i64(2).minus(&t.mul_u64(4));
            let base = &f + &Poly::constant(shift);
            let p = if family == FamilyId::CPlus {
                &x_poly(&[D::from_i64(2), D::one()]) * &base
            } else {
                base
            };
            HyperEq::new(Poly::zero(), p, genus(r))
        }
        FamilyId::Hrr | FamilyId::H2r => {
            require_odd_prime(r)?;
            let (z, s) = h_family_zs(family, r, t)?;
            czs_equation(r, &z, &s)
        }
        FamilyId::Czs => Err(Error::Parse("C_zs takes two parameters".into())),
    }
}

/// Parameter values for [`build_curve`].
#[derive(Clone, PartialEq, Debug)]
pub enum CurveParams {
    Symbolic,
    /// `t`, or `s` for `C_s`.
    One(Rat),
    Zs(Rat, Rat),
}

/// An equation with rational, `Q[t]` or `Q[z][s]` coefficients.
#[derive(Clone, PartialEq, Debug)]
pub enum CurveEquation {
    Rational(HyperEq<Rat>),
    /// Coefficients in `Q[t]` (or `Q[s]` for `C_s`).
    OneParam(HyperEq<Poly<Rat>>),
    /// Coefficients in `Q[z][s]`: outer variable `s`, inner `z`.
    TwoParam(HyperEq<Poly<Poly<Rat>>>),
}

impl fmt::Display for CurveEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveEquation::Rational(e) => write!(f, "{e}"),
            CurveEquation::OneParam(e) => f.write_str(&render_with(e, |c| c.to_string_in("t"))),
            CurveEquation::TwoParam(e) => {
                f.write_str(&render_with(e, |c| c.to_string_in_nested("s", "z")))
            }
        }
    }
}

/// Render an equation whose coefficients are themselves polynomials.
pub fn render_with<D: Domain>(e: &HyperEq<D>, render: impl Fn(&D) -> String) -> String {
    let q = e.q().map(|c| RenderIn(render(c)));
    let p = e.p().map(|c| RenderIn(render(c)));
    HyperEq::for_display(q, p, e.genus()).to_string()
}

/// A string standing in for a coefficient, only used for display.
#[derive(Clone, PartialEq, Debug)]
struct RenderIn(String);

impl Domain for RenderIn {
    fn zero() -> Self {
        RenderIn("0".into())
    }
    fn one() -> Self {
        RenderIn("1".into())
    }
    fn is_zero(&self) -> bool {
        self.0 == "0"
    }
    fn plus(&self, _: &Self) -> Self {
        unreachable!("display only")
    }
    fn minus(&self, _: &Self) -> Self {
        unreachable!("display only")
    }
    fn times(&self, _: &Self) -> Self {
        unreachable!("display only")
    }
    fn negated(&self) -> Self {
        unreachable!("display only")
    }
    fn try_div(&self, _: &Self) -> Option<Self> {
        None
    }
}

impl fmt::Display for RenderIn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub trait NestedRender {
    fn to_string_in_nested(&self, outer: &str, inner: &str) -> String;
}

impl NestedRender for Poly<Poly<Rat>> {
    fn to_string_in_nested(&self, outer: &str, inner: &str) -> String {
        self.map(|c| RenderIn(c.to_string_in(inner)))
            .to_string_in(outer)
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct CurveInstance {
    pub family: FamilyId,
    pub r: u32,
    pub params: CurveParams,
    pub equation: CurveEquation,
}

fn degenerate(msg: String) -> Error {
    Error::DegenerateParameter(msg)
}

pub fn build_curve(family: FamilyId, r: u32, params: &CurveParams) -> Result<CurveInstance> {
    if family != FamilyId::H35 {
        require_odd_prime(r)?;
    }
    let equation = match (family, params) {
        (FamilyId::Czs, CurveParams::Symbolic) => {
            let z = Poly::constant(Poly::x());
            let s = Poly::x();
            CurveEquation::TwoParam(czs_equation(r, &z, &s)?)
        }
        (FamilyId::Czs, CurveParams::Zs(z, s)) => {
            if s * s == int(4) * Domain::pow(z, r as u64) {
                return Err(degenerate(format!("s^2 = 4z^r at z = {z}, s = {s}")));
            }
            CurveEquation::Rational(czs_equation(r, z, s)?)
        }
        (_, CurveParams::Symbolic) if family != FamilyId::Czs => {
            CurveEquation::OneParam(one_param_equation(family, r, &Poly::x())?)
        }
        (FamilyId::Cs, CurveParams::One(s)) => {
            if s * s == int(4) {
                return Err(degenerate(format!("s = {s} makes C(s) singular")));
            }
            CurveEquation::Rational(one_param_equation(family, r, s)?)
        }
        (_, CurveParams::One(t)) if family != FamilyId::Czs => {
            if t.is_zero() || t.is_one() {
                return Err(degenerate(format!("t = {t}")));
            }
            CurveEquation::Rational(one_param_equation(family, r, t)?)
        }
        _ => {
            return Err(Error::Parse(format!(
                "parameters {params:?} do not fit family {family}"
            )));
        }
    };
    Ok(CurveInstance {
        family,
        r,
        params: params.clone(),
        equation,
    })
}

/// Whether every coefficient, expanded in all variables, is an integer.
pub fn has_integer_coefficients(e: &CurveEquation) -> bool {
    fn ints(p: &Poly<Rat>) -> bool {
        p.coeffs().iter().all(|c| c.is_integer())
    }
    match e {
        CurveEquation::Rational(e) => ints(e.q()) && ints(e.p()),
        CurveEquation::OneParam(e) => e.q().coeffs().iter().chain(e.p().coeffs()).all(ints),
        CurveEquation::TwoParam(e) => e
            .q()
            .coeffs()
            .iter()
            .chain(e.p().coeffs())
            .all(|c| c.coeffs().iter().all(ints)),
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct IdentityReport {
    pub r: u32,
    pub f: Poly<Rat>,
    pub h: Poly<Rat>,
    /// The recurrence agrees with `(-1)^{(r-1)/2} x h(2 - x^2)`.
    pub f_definitional: bool,
    /// `f + 2 = (x + 2) h(-x)^2`.
    pub plus_identity: bool,
    /// The square factor `g` with `f - 2 = (x - 2) g^2`.
    pub minus_square_factor: Poly<Rat>,
    /// Whether the printed `f - 2 = (x - 2) h(-x)^2` holds.
    pub minus_printed_holds: bool,
    pub minus_factor_is_h: bool,
    /// `f^2 - 4 = (x^2 - 4)(h(x) h(-x))^2`.
    pub product_identity: bool,
}

pub fn verify_identities(r: u32) -> Result<IdentityReport> {
    let f = darmon_f(r)?;
    let h = omega_min_poly(r)?;
    let hm = h.reflect();
    let two = Poly::constant(int(2));
    let plus_identity = &f + &two == &Poly::from_ints(&[2, 1]) * &(&hm * &hm);
    let quotient = (&f - &two)
        .try_div_exact(&Poly::from_ints(&[-2, 1]))
        .ok_or_else(|| Error::AssertionFailed("x - 2 does not divide f - 2".into()))?;
    let g = quotient
        .exact_sqrt()
        .ok_or_else(|| Error::AssertionFailed("(f - 2)/(x - 2) is not a square".into()))?;
    let minus_printed_holds = &f - &two == &Poly::from_ints(&[-2, 1]) * &(&hm * &hm);
    let hh = &h * &hm;
    let product_identity =
        &(&f * &f) - &Poly::constant(int(4)) == &Poly::from_ints(&[-4, 0, 1]) * &(&hh * &hh);
    Ok(IdentityReport {
        r,
        f_definitional: definitional_f(r)? == f,
        plus_identity,
        minus_factor_is_h: g == h,
        minus_square_factor: g,
        minus_printed_holds,
        product_identity,
        f,
        h,
    })
}

/// The closed-form discriminants as printed, in `Q[t]`.
pub fn printed_disc_t(family: FamilyId, r: u32) -> Result<Poly<Rat>> {
    let t = Poly::<Rat>::x();
    let tm1 = Poly::from_ints(&[-1, 1]);
    let omt = Poly::from_ints(&[1, -1]);
    let g = genus(r) as u64;
    let rr = Domain::pow(&int(r as i64), r as u64);
    let sign = if g.is_multiple_of(2) { int(1) } else { int(-1) };
    let p = match family {
        FamilyId::CPlus => {
            require_odd_prime(r)?;
            (&t.pow(g + 2) * &omt.pow(g)).scale(&(two_pow(2 * (r as i64 + 1)) * &rr))
        }
        FamilyId::H2r => {
            require_odd_prime(r)?;
            (&t.pow(r as u64 * g) * &tm1.pow(2 * g * g))
                .scale(&(sign * two_pow(3 * (r as i64 - 1)) * &rr))
        }
        FamilyId::Hrr => {
            require_odd_prime(r)?;
            (&t * &tm1)
                .pow(2 * g * g)
                .scale(&(sign * two_pow(2 * (r as i64 - 1)) * &rr))
        }
        FamilyId::H35 => (&t.pow(10) * &tm1.pow(18)).scale(&(int(729) * int(3125))),
        _ => return Err(Error::NoClosedForm(family.to_string())),
    };
    Ok(p)
}

/// The discriminant actually satisfied by the family, in `Q[t]`. Equal to
/// the printed form except for `C_plus`, whose power of 2 is `2^{4r}`.
pub fn true_disc_t(family: FamilyId, r: u32) -> Result<Poly<Rat>> {
    let printed = printed_disc_t(family, r)?;
    Ok(match family {
        FamilyId::CPlus => printed.scale(&two_pow(2 * r as i64 - 2)),
        _ => printed,
    })
}

/// `(-1)^{(r-1)/2} 2^{2(r-1)} r^r (s^2 - 4z^r)^{(r-1)/2}` in `Q[z][s]`.
pub fn printed_disc_czs(r: u32) -> Result<Poly<Poly<Rat>>> {
    require_odd_prime(r)?;
    let g = genus(r) as u64;
    let z = Poly::<Rat>::x();
    let inner = Poly::new(vec![
        z.pow(r as u64).scale(&int(-4)),
        Poly::zero(),
        Poly::one(),
    ]);
    let sign = if g.is_multiple_of(2) { int(1) } else { int(-1) };
    let c = sign * two_pow(2 * (r as i64 - 1)) * Domain::pow(&int(r as i64), r as u64);
    Ok(inner.pow(g).scale(&Poly::constant(c)))
}

#[derive(Clone, PartialEq, Debug)]
pub struct DiscReport {
    pub family: FamilyId,
    pub r: u32,
    pub direct: String,
    pub printed: String,
    pub matches: bool,
    /// `direct / printed` when it is a constant.
    pub ratio: Option<Rat>,
}

fn constant_ratio(direct: &Poly<Rat>, printed: &Poly<Rat>) -> Option<Rat> {
    let lc = direct.lc()?.clone() / printed.lc()?.clone();
    (printed.scale(&lc) == *direct).then_some(lc)
}

/// Compare the symbolic discriminant of a family with its printed closed form.
pub fn verify_closed_form_disc(family: FamilyId, r: u32) -> Result<DiscReport> {
    match family {
        FamilyId::Czs => {
            let CurveEquation::TwoParam(e) =
                build_curve(family, r, &CurveParams::Symbolic)?.equation
            else {
                unreachable!("symbolic C_zs has two parameters")
            };
            let direct = hyper_discriminant(&e)?;
            let printed = printed_disc_czs(r)?;
            let ratio = direct
                .lc()
                .and_then(|d| constant_ratio(d, printed.lc()?))
                .filter(|q| printed.scale(&Poly::constant(q.clone())) == direct);
            Ok(DiscReport {
                family,
                r,
                direct: direct.to_string_in_nested("s", "z"),
                printed: printed.to_string_in_nested("s", "z"),
                matches: direct == printed,
                ratio,
            })
        }
        _ => {
            let printed = printed_disc_t(family, r)?;
            let CurveEquation::OneParam(e) =
                build_curve(family, r, &CurveParams::Symbolic)?.equation
            else {
                unreachable!("symbolic one-parameter family")
            };
            let direct = hyper_discriminant(&e)?;
            Ok(DiscReport {
                family,
                r,
                direct: direct.to_string_in("t"),
                printed: printed.to_string_in("t"),
                matches: direct == printed,
                ratio: constant_ratio(&direct, &printed),
            })
        }
    }
}

/// `C(1, s)` against the printed form at `z = 1`. Both sides are weighted
/// homogeneous in `(z, s)` with weights `(2, r)`, so this decides the
/// two-variable identity at a fraction of the cost.
pub fn verify_czs_disc_at_unit_z(r: u32) -> Result<DiscReport> {
    let e = czs_equation(r, &Poly::<Rat>::one(), &Poly::x())?;
    let direct = hyper_discriminant(&e)?;
    let printed = printed_disc_czs(r)?.map(|c| c.eval(&int(1)));
    Ok(DiscReport {
        family: FamilyId::Czs,
        r,
        direct: direct.to_string_in("s"),
        printed: printed.to_string_in("s"),
        matches: direct == printed,
        ratio: constant_ratio(&direct, &printed),
    })
}

/// `H_rr` or `H_2r` through the `C(z, s)` closed form at `(z(t), s(t))`,
/// compared with the family's printed form.
pub fn verify_h_disc_via_czs(family: FamilyId, r: u32) -> Result<DiscReport> {
    let (z, s) = h_family_zs(family, r, &Poly::<Rat>::x())?;
    let via = printed_disc_czs(r)?.eval_into(&s, |c| c.compose(&z));
    let printed = printed_disc_t(family, r)?;
    Ok(DiscReport {
        family,
        r,
        direct: via.to_string_in("t"),
        printed: printed.to_string_in("t"),
        matches: via == printed,
        ratio: constant_ratio(&via, &printed),
    })
}
