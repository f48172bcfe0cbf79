//! Laurent polynomials in a formal parameter whose 2-adic valuation is either
//! an unknown weight `w` in a declared interval or zero (a unit).
//!
//! Valuations are affine forms `c + m*w`; a claim such as "this coefficient
//! is a unit" is proved for every `w` in the interval at once.

use std::fmt;

use crate::algebra::{residue_mod_2pow, v2, Domain, Field, Gf2kElem, Poly, QAlgebra, Rat, RatFunc};
use crate::error::{Error, Result};

fn zero() -> Rat {
    <Rat as Domain>::zero()
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AffineForm {
    pub constant: Rat,
    pub slope: Rat,
}

impl AffineForm {
    pub fn constant(c: Rat) -> Self {
        AffineForm {
            constant: c,
            slope: zero(),
        }
    }

    pub fn new(constant: Rat, slope: Rat) -> Self {
        AffineForm { constant, slope }
    }

    pub fn eval(&self, w: &Rat) -> Rat {
        &self.constant + &self.slope * w
    }

    pub fn minus(&self, rhs: &Self) -> Self {
        AffineForm::new(&self.constant - &rhs.constant, &self.slope - &rhs.slope)
    }

    pub fn as_constant(&self) -> Option<&Rat> {
        self.slope.is_zero().then_some(&self.constant)
    }

    pub fn is_identically_zero(&self) -> bool {
        self.constant.is_zero() && self.slope.is_zero()
    }
}

impl fmt::Display for AffineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let slope = if self.slope.is_one() {
            "w".to_string()
        } else if self.slope == -Rat::from_integer(1.into()) {
            "-w".to_string()
        } else {
            format!("{}*w", self.slope)
        };
        match (self.constant.is_zero(), self.slope.is_zero()) {
            (_, true) => write!(f, "{}", self.constant),
            (true, false) => f.write_str(&slope),
            (false, false) => match slope.strip_prefix('-') {
                Some(rest) => write!(f, "{} - {rest}", self.constant),
                None => write!(f, "{} + {slope}", self.constant),
            },
        }
    }
}

/// A set of admissible weights `w > 0`, with optional closed ends.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WeightInterval {
    lo: Rat,
    lo_closed: bool,
    hi: Option<Rat>,
    hi_closed: bool,
}

impl WeightInterval {
    pub fn new(lo: Rat, lo_closed: bool, hi: Option<Rat>, hi_closed: bool) -> Result<Self> {
        let bad = |m: &str| Err(Error::InvalidInterval(m.to_string()));
        if lo < zero() || (lo.is_zero() && lo_closed) {
            return bad("weights must be strictly positive");
        }
        match &hi {
            None if hi_closed => return bad("an unbounded interval has no closed upper end"),
            Some(h) if *h < lo => return bad("upper end below lower end"),
            Some(h) if *h == lo && !(lo_closed && hi_closed) => return bad("empty interval"),
            _ => {}
        }
        Ok(WeightInterval {
            lo,
            lo_closed,
            hi,
            hi_closed,
        })
    }

    /// `(0, ∞)`.
    pub fn positive() -> Self {
        Self::new(zero(), false, None, false).expect("valid")
    }

    pub fn open(lo: Rat, hi: Rat) -> Result<Self> {
        Self::new(lo, false, Some(hi), false)
    }

    pub fn closed(lo: Rat, hi: Rat) -> Result<Self> {
        Self::new(lo, true, Some(hi), true)
    }

    pub fn point(w: Rat) -> Result<Self> {
        Self::new(w.clone(), true, Some(w), true)
    }

    /// `[lo, ∞)`.
    pub fn at_least(lo: Rat) -> Result<Self> {
        Self::new(lo, true, None, false)
    }

    pub fn contains(&self, w: &Rat) -> bool {
        let above = if self.lo_closed {
            *w >= self.lo
        } else {
            *w > self.lo
        };
        let below = match &self.hi {
            None => true,
            Some(h) if self.hi_closed => w <= h,
            Some(h) => w < h,
        };
        above && below
    }

    /// `form(w) > 0` for every admissible `w`. Affine forms are monotone, so
    /// checking the two ends suffices.
    pub fn is_positive(&self, form: &AffineForm) -> bool {
        if form.is_identically_zero() {
            return false;
        }
        let at_lo = form.eval(&self.lo);
        let lo_ok = if self.lo_closed {
            at_lo > zero()
        } else {
            at_lo >= zero()
        };
        let hi_ok = match &self.hi {
            None => form.slope >= zero(),
            Some(h) => {
                let at_hi = form.eval(h);
                if self.hi_closed {
                    at_hi > zero()
                } else {
                    at_hi >= zero()
                }
            }
        };
        lo_ok && hi_ok
    }

    /// `form(w) >= 0` for every admissible `w`.
    pub fn is_nonnegative(&self, form: &AffineForm) -> bool {
        let lo_ok = form.eval(&self.lo) >= zero();
        let hi_ok = match &self.hi {
            None => form.slope >= zero(),
            Some(h) => form.eval(h) >= zero(),
        };
        lo_ok && hi_ok
    }
}

impl fmt::Display for WeightInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let open = if self.lo_closed { '[' } else { '(' };
        match &self.hi {
            None => write!(f, "{open}{}, inf)", self.lo),
            Some(h) => {
                let close = if self.hi_closed { ']' } else { ')' };
                write!(f, "{open}{}, {h}{close}", self.lo)
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ParamKind {
    /// Valuation `w` somewhere in the interval.
    Positive(WeightInterval),
    /// Valuation 0 with the given nonzero residue.
    Unit(Gf2kElem),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FormalParam {
    pub name: String,
    pub kind: ParamKind,
}

impl FormalParam {
    pub fn positive(name: &str, interval: WeightInterval) -> Self {
        FormalParam {
            name: name.to_string(),
            kind: ParamKind::Positive(interval),
        }
    }

    pub fn unit(name: &str, residue: Gf2kElem) -> Result<Self> {
        if residue.is_zero() {
            return Err(Error::InvalidInterval(
                "a unit parameter needs a nonzero residue".into(),
            ));
        }
        Ok(FormalParam {
            name: name.to_string(),
            kind: ParamKind::Unit(residue),
        })
    }
}

/// `u^low * Σ coeffs[i] u^i`. Elements built from rationals alone carry no
/// parameter and combine with any other element.
#[derive(Clone, Eq)]
pub struct LocalLaurent {
    param: Option<FormalParam>,
    low: i64,
    coeffs: Vec<Rat>,
}

impl LocalLaurent {
    pub fn new(param: &FormalParam, low: i64, coeffs: Vec<Rat>) -> Self {
        LocalLaurent {
            param: Some(param.clone()),
            low,
            coeffs,
        }
        .normalized()
    }

    pub fn constant(q: Rat) -> Self {
        LocalLaurent {
            param: None,
            low: 0,
            coeffs: vec![q],
        }
        .normalized()
    }

    /// The parameter itself.
    pub fn var(param: &FormalParam) -> Self {
        Self::new(param, 1, vec![Rat::one()])
    }

    pub fn from_poly(param: &FormalParam, p: &Poly<Rat>) -> Self {
        Self::new(param, 0, p.coeffs().to_vec())
    }

    /// Requires the denominator to be a power of the variable.
    pub fn from_ratfunc(param: &FormalParam, f: &RatFunc) -> Result<Self> {
        let k = f.den().degree().expect("nonzero denominator");
        if *f.den() != Poly::monomial(Rat::one(), k) {
            return Err(Error::NonIntegral(format!(
                "{} is not a Laurent polynomial in {}",
                f.to_string_in(&param.name),
                param.name
            )));
        }
        Ok(Self::new(param, -(k as i64), f.num().coeffs().to_vec()))
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        self.coeffs.drain(..lead);
        self.low = if self.coeffs.is_empty() {
            0
        } else {
            self.low + lead as i64
        };
        self
    }

    pub fn param(&self) -> Option<&FormalParam> {
        self.param.as_ref()
    }

    /// `(exponent, coefficient)` pairs with nonzero coefficients.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rat)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    fn body(&self) -> Poly<Rat> {
        Poly::new(self.coeffs.clone())
    }

    fn common_param(&self, rhs: &Self) -> Option<FormalParam> {
        match (&self.param, &rhs.param) {
            (None, p) | (p, None) => p.clone(),
            (Some(a), Some(b)) if a == b => Some(a.clone()),
            (Some(a), Some(b)) => panic!("mixing parameters {} and {}", a.name, b.name),
        }
    }

    fn with(param: Option<FormalParam>, low: i64, coeffs: Vec<Rat>) -> Self {
        LocalLaurent { param, low, coeffs }.normalized()
    }

    pub fn val(&self) -> Result<AffineForm> {
        laurent_val(self)
    }

    pub fn residue(&self) -> Result<Gf2kElem> {
        laurent_residue(self)
    }

    pub fn to_string_in(&self, var: &str) -> String {
        if self.low >= 0 {
            let mut c = vec![zero(); self.low as usize];
            c.extend(self.coeffs.iter().cloned());
            return Poly::new(c).to_string_in(var);
        }
        let num = self.body().to_string_in(var);
        let num = if self.coeffs.len() > 1 {
            format!("({num})")
        } else {
            num
        };
        match -self.low {
            1 => format!("{num}/{var}"),
            k => format!("{num}/{var}^{k}"),
        }
    }
}

impl PartialEq for LocalLaurent {
    fn eq(&self, other: &Self) -> bool {
        self.low == other.low
            && self.coeffs == other.coeffs
            && (self.param == other.param || self.param.is_none() || other.param.is_none())
    }
}

impl Domain for LocalLaurent {
    fn zero() -> Self {
        Self::constant(zero())
    }
    fn one() -> Self {
        Self::constant(Rat::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn plus(&self, rhs: &Self) -> Self {
        let param = self.common_param(rhs);
        if self.is_zero() {
            return Self::with(param, rhs.low, rhs.coeffs.clone());
        }
        if rhs.is_zero() {
            return Self::with(param, self.low, self.coeffs.clone());
        }
        let low = self.low.min(rhs.low);
        let shift = |x: &Self| Poly::monomial(Rat::one(), (x.low - low) as usize).times(&x.body());
        let sum = shift(self).plus(&shift(rhs));
        Self::with(param, low, sum.into_coeffs())
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negated())
    }
    fn times(&self, rhs: &Self) -> Self {
        let param = self.common_param(rhs);
        Self::with(
            param,
            self.low + rhs.low,
            self.body().times(&rhs.body()).into_coeffs(),
        )
    }
    fn negated(&self) -> Self {
        LocalLaurent {
            param: self.param.clone(),
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    /// Exact division in `Q[u, 1/u]`.
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let param = self.common_param(rhs);
        let q = self.body().try_div_exact(&rhs.body())?;
        Some(Self::with(param, self.low - rhs.low, q.into_coeffs()))
    }
}

impl QAlgebra for LocalLaurent {
    fn from_rat(q: &Rat) -> Self {
        Self::constant(q.clone())
    }
}

impl fmt::Display for LocalLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = self.param.as_ref().map_or("u", |p| p.name.as_str());
        f.write_str(&self.to_string_in(var))
    }
}

impl fmt::Debug for LocalLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LocalLaurent({self})")
    }
}

fn term_form(exp: i64, c: &Rat) -> AffineForm {
    AffineForm::new(
        Rat::from_integer(v2(c).expect("nonzero").into()),
        Rat::from_integer(exp.into()),
    )
}

fn residue_of_rat(c: &Rat) -> Result<Gf2kElem> {
    Ok(Gf2kElem::from_bit(residue_mod_2pow(c, 1)? == 1))
}

/// `Σ (c_i / 2^m mod 2) * res^{e_i}` over the unit residue.
fn unit_reduction(x: &LocalLaurent, res: &Gf2kElem, m: i64) -> Result<Gf2kElem> {
    let inv = res.inv().expect("unit residue is nonzero");
    let scale = crate::algebra::two_pow(-m);
    let mut acc = Gf2kElem::from_bit(false);
    for (e, c) in x.terms() {
        let bit = residue_of_rat(&(c * &scale))?;
        if bit.is_zero() {
            continue;
        }
        let base = if e >= 0 { *res } else { inv };
        acc = acc.plus(&base.pow(e.unsigned_abs()));
    }
    Ok(acc)
}

/// The valuation of `x` as an affine form in the weight (slope 0 for
/// rational and unit parameters).
pub fn laurent_val(x: &LocalLaurent) -> Result<AffineForm> {
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    let kind = match &x.param {
        None => return Ok(term_form(0, &x.coeffs[0])),
        Some(p) => &p.kind,
    };
    match kind {
        ParamKind::Positive(interval) => {
            let forms: Vec<AffineForm> = x.terms().map(|(e, c)| term_form(e, c)).collect();
            forms
                .iter()
                .find(|f| {
                    forms
                        .iter()
                        .filter(|g| g != f)
                        .all(|g| interval.is_positive(&g.minus(f)))
                })
                .cloned()
                .ok_or_else(|| {
                    Error::ValuationAmbiguous(format!(
                        "{x}: no term is strictly smallest for w in {interval}"
                    ))
                })
        }
        ParamKind::Unit(res) => {
            let m = x
                .terms()
                .map(|(_, c)| v2(c).expect("nonzero"))
                .min()
                .expect("nonzero");
            if unit_reduction(x, res, m)?.is_zero() {
                Err(Error::ValuationAmbiguous(format!(
                    "{x}: leading terms cancel modulo 2, valuation exceeds {m}"
                )))
            } else {
                Ok(AffineForm::constant(Rat::from_integer(m.into())))
            }
        }
    }
}

/// Reduction of an integral element to the residue field.
pub fn laurent_residue(x: &LocalLaurent) -> Result<Gf2kElem> {
    if x.is_zero() {
        return Ok(Gf2kElem::from_bit(false));
    }
    let kind = match &x.param {
        None => {
            return residue_of_rat(&x.coeffs[0]).map_err(|_| Error::NonIntegral(x.to_string()));
        }
        Some(p) => &p.kind,
    };
    match kind {
        ParamKind::Positive(interval) => {
            let mut out = Gf2kElem::from_bit(false);
            for (e, c) in x.terms() {
                let form = term_form(e, c);
                if !interval.is_nonnegative(&form) {
                    return Err(Error::NonIntegral(format!(
                        "{x}: term of exponent {e} has negative valuation"
                    )));
                }
                if e == 0 {
                    out = residue_of_rat(c)?;
                } else if !interval.is_positive(&form) {
                    return Err(Error::ValuationAmbiguous(format!(
                        "{x}: term of exponent {e} can be a unit, residue undetermined"
                    )));
                }
            }
            Ok(out)
        }
        ParamKind::Unit(res) => {
            let m = x
                .terms()
                .map(|(_, c)| v2(c).expect("nonzero"))
                .min()
                .expect("nonzero");
            if m < 0 {
                let v = laurent_val(x)?;
                return Err(Error::NonIntegral(format!("{x} has valuation {v}")));
            }
            unit_reduction(x, res, 0)
        }
    }
}

/// Coefficient-wise residue of a polynomial over local elements.
pub fn reduce_laurent_poly(p: &Poly<LocalLaurent>) -> Result<Poly<Gf2kElem>> {
    p.try_map(laurent_residue)
}
