//! Hyperelliptic equations `y^2 + Q(x) y = P(x)`.

use std::fmt;

use crate::algebra::{discriminant_poly, two_pow, Domain, Poly, QAlgebra};
use crate::error::{Error, Result};

/// An equation `y^2 + Q y = P` of genus `g` with
/// `2g + 1 <= max(2 deg Q, deg P) <= 2g + 2`; outside characteristic 2 also
/// `deg(4P + Q^2) >= 2g + 1`.
#[derive(Clone, PartialEq)]
pub struct HyperEq<D> {
    q: Poly<D>,
    p: Poly<D>,
    g: usize,
}

impl<D: Domain> HyperEq<D> {
    pub fn new(q: Poly<D>, p: Poly<D>, g: usize) -> Result<Self> {
        let dq = q.deg_i64();
        let dp = p.deg_i64();
        let g_ = g as i64;
        if dq > g_ + 1 || dp > 2 * g_ + 2 {
            return Err(Error::DegreeViolation(format!(
                "deg Q = {dq}, deg P = {dp} exceed the bounds for genus {g}"
            )));
        }
        let m = (2 * dq).max(dp);
        if m < 2 * g_ + 1 {
            return Err(Error::DegreeViolation(format!(
                "max(2 deg Q, deg P) = {m} is below 2g + 1 = {}",
                2 * g_ + 1
            )));
        }
        let e = HyperEq { q, p, g };
        // In characteristic 2, R = Q^2 carries no genus information.
        if !D::one().mul_u64(4).is_zero() {
            let n = e.r_poly().deg_i64();
            if n < 2 * g_ + 1 {
                return Err(Error::DegreeViolation(format!(
                    "deg(4P + Q^2) = {n} is below 2g + 1 = {}",
                    2 * g_ + 1
                )));
            }
        }
        Ok(e)
    }

    /// No validation; for formatting coefficients that are not ring elements.
    pub(crate) fn for_display(q: Poly<D>, p: Poly<D>, g: usize) -> Self {
        HyperEq { q, p, g }
    }

    /// Genus read off from the degrees.
    pub fn with_inferred_genus(q: Poly<D>, p: Poly<D>) -> Result<Self> {
        let m = (2 * q.deg_i64()).max(p.deg_i64());
        if m < 1 {
            return Err(Error::DegreeViolation(
                "equation has no x-dependence".into(),
            ));
        }
        Self::new(q, p, ((m - 1) / 2) as usize)
    }

    pub fn q(&self) -> &Poly<D> {
        &self.q
    }

    pub fn p(&self) -> &Poly<D> {
        &self.p
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    /// `R = 4P + Q^2`.
    pub fn r_poly(&self) -> Poly<D> {
        &self.p.scale(&D::one().mul_u64(4)) + &(&self.q * &self.q)
    }

    pub fn map<E: Domain>(&self, f: impl Fn(&D) -> E) -> Result<HyperEq<E>> {
        HyperEq::new(self.q.map(&f), self.p.map(&f), self.g)
    }

    pub fn try_map<E: Domain>(&self, f: impl Fn(&D) -> Result<E>) -> Result<HyperEq<E>> {
        HyperEq::new(self.q.try_map(&f)?, self.p.try_map(&f)?, self.g)
    }
}

impl<D: QAlgebra> HyperEq<D> {
    pub fn discriminant(&self) -> Result<D> {
        hyper_discriminant(self)
    }
}

/// `Δ_E = 2^{-4(g+1)} Δ(R)` for `deg R = 2g + 2`, and
/// `2^{-4(g+1)} lc(R)^2 Δ(R)` for `deg R = 2g + 1`.
pub fn hyper_discriminant<D: QAlgebra>(e: &HyperEq<D>) -> Result<D> {
    let r = e.r_poly();
    let g = e.g as i64;
    let n = r.deg_i64();
    let scale = D::from_rat(&two_pow(-4 * (g + 1)));
    let disc = if n == 2 * g + 2 {
        discriminant_poly(&r)?
    } else if n == 2 * g + 1 {
        let k = r.lc().expect("nonzero").clone();
        k.times(&k).times(&discriminant_poly(&r)?)
    } else {
        return Err(Error::DegreeViolation(format!(
            "deg R = {n} is neither 2g + 1 nor 2g + 2 (g = {g})"
        )));
    };
    Ok(disc.times(&scale))
}

/// The chart at infinity: `S(u) = u^{2g+2} P(1/u)`, `T(u) = u^{g+1} Q(1/u)`,
/// returned as the equation `y^2 + T y = S`.
pub fn infinity_patch<D: Domain>(e: &HyperEq<D>) -> Result<HyperEq<D>> {
    let g = e.g;
    HyperEq::new(e.q.reciprocal(g + 1), e.p.reciprocal(2 * g + 2), g)
}

/// `x = (aX + b)/(cX + d)`, `y = (eY + R(X))/(cX + d)^{g+1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct MobiusChange<D> {
    pub a: D,
    pub b: D,
    pub c: D,
    pub d: D,
    pub e: D,
    pub shift: Poly<D>,
}

impl<D: Domain> MobiusChange<D> {
    pub fn new(a: D, b: D, c: D, d: D, e: D, shift: Poly<D>) -> Result<Self> {
        let det = a.times(&d).minus(&b.times(&c));
        if det.is_zero() || e.is_zero() {
            return Err(Error::SingularChange);
        }
        Ok(MobiusChange {
            a,
            b,
            c,
            d,
            e,
            shift,
        })
    }

    pub fn identity() -> Self {
        Self::scaling(D::one(), D::one())
    }

    /// `x = aX`, `y = eY`.
    pub fn scaling(a: D, e: D) -> Self {
        Self::new(a, D::zero(), D::zero(), D::one(), e, Poly::zero()).expect("nonzero scales")
    }

    /// `x = aX`, `y = eY + R(X)`.
    pub fn affine(a: D, e: D, shift: Poly<D>) -> Result<Self> {
        Self::new(a, D::zero(), D::zero(), D::one(), e, shift)
    }

    /// `x = 1/X`, `y = Y / X^{g+1}`.
    pub fn swap() -> Self {
        Self::new(
            D::zero(),
            D::one(),
            D::one(),
            D::zero(),
            D::one(),
            Poly::zero(),
        )
        .expect("det = -1")
    }

    pub fn det(&self) -> D {
        self.a.times(&self.d).minus(&self.b.times(&self.c))
    }

    /// `e^{-4(2g+1)} (ad - bc)^{2(g+1)(2g+1)}`.
    pub fn discriminant_factor(&self, g: usize) -> Result<D> {
        let g = g as u64;
        let num = self.det().pow(2 * (g + 1) * (2 * g + 1));
        num.try_div(&self.e.pow(4 * (2 * g + 1)))
            .ok_or(Error::NonInvertibleScale)
    }
}

/// `Σ coeffs_i (aX + b)^i (cX + d)^{n - i}`.
fn homogenize<D: Domain>(f: &Poly<D>, n: usize, m: &MobiusChange<D>) -> Poly<D> {
    let num = Poly::new(vec![m.b.clone(), m.a.clone()]);
    let den = Poly::new(vec![m.d.clone(), m.c.clone()]);
    let mut acc = Poly::zero();
    for (i, c) in f.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = &num.pow(i as u64) * &den.pow((n - i) as u64);
        acc = &acc + &term.scale(c);
    }
    acc
}

/// The transformed equation and the factor `Δ_new / Δ_old`.
pub fn apply_change<D: Domain>(e: &HyperEq<D>, m: &MobiusChange<D>) -> Result<(HyperEq<D>, D)> {
    let g = e.g;
    let qs = homogenize(&e.q, g + 1, m);
    let ps = homogenize(&e.p, 2 * g + 2, m);
    let r = &m.shift;
    let two = D::one().mul_u64(2);
    let q_new = (&r.scale(&two) + &qs)
        .try_div_scalar(&m.e)
        .ok_or(Error::NonInvertibleScale)?;
    let p_new = (&(&ps - &(r * &qs)) - &(r * r))
        .try_div_scalar(&m.e.times(&m.e))
        .ok_or(Error::NonInvertibleScale)?;
    let factor = m.discriminant_factor(g)?;
    Ok((HyperEq::new(q_new, p_new, g)?, factor))
}

/// `y^2 = δ^{2g+1} F(x/δ)` for odd `deg F`, `y^2 = δ F(x)` for even `deg F`.
pub fn quadratic_twist<D: Domain>(e: &HyperEq<D>, delta: &D) -> Result<HyperEq<D>> {
    if !e.q.is_zero() {
        return Err(Error::NotTwistable);
    }
    if delta.is_zero() {
        return Err(Error::ZeroDelta);
    }
    let n = 2 * e.g + 1;
    let f = &e.p;
    let twisted = if f.deg_i64() == n as i64 {
        Poly::new(
            f.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| c.times(&delta.pow((n - i) as u64)))
                .collect(),
        )
    } else {
        f.scale(delta)
    };
    HyperEq::new(Poly::zero(), twisted, e.g)
}

impl<D: Domain + fmt::Display> HyperEq<D> {
    pub fn to_string_in(&self, x: &str) -> String {
        let lhs = if self.q.is_zero() {
            "y^2".to_string()
        } else if self.q.is_one() {
            "y^2 + y".to_string()
        } else {
            let q = self.q.to_string_in(x);
            if q.contains(' ') {
                format!("y^2 + y*({q})")
            } else {
                format!("y^2 + {q}*y")
            }
        };
        format!("{lhs} = {}", self.p.to_string_in(x))
    }
}

impl<D: Domain + fmt::Display> fmt::Display for HyperEq<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("x"))
    }
}

impl<D: fmt::Debug> fmt::Debug for HyperEq<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HyperEq")
            .field("q", &self.q)
            .field("p", &self.p)
            .field("g", &self.g)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat, reduce_mod2, Rat};

    fn p(c: &[i64]) -> Poly<Rat> {
        Poly::from_ints(c)
    }

    fn eq(q: &[i64], pp: &[i64], g: usize) -> HyperEq<Rat> {
        HyperEq::new(p(q), p(pp), g).unwrap()
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(
            hyper_discriminant(&eq(&[1], &[0, 0, 0, 1], 1)).unwrap(),
            int(-27)
        );
        let e = HyperEq::<Rat>::new(
            Poly::zero(),
            Poly::from_rats(&[rat(7, 4), int(-3), int(0), int(1)]),
            1,
        )
        .unwrap();
        assert_eq!(hyper_discriminant(&e).unwrap(), int(405));
    }

    #[test]
    fn monic_odd_consistency() {
        // Δ_E = 2^{4g} Δ(P + Q^2/4) when P is monic of odd degree 2g+1, deg Q <= g
        let e = eq(&[1, 1], &[3, -1, 2, 0, 0, 1], 2);
        let r4 = &e.p().clone() + &(e.q() * e.q()).scale(&rat(1, 4));
        let alt = discriminant_poly(&r4).unwrap() * two_pow(8);
        assert_eq!(hyper_discriminant(&e).unwrap(), alt);
    }

    #[test]
    fn degree_window() {
        assert!(HyperEq::new(p(&[0, 1]), p(&[1, 1]), 1).is_err());
        assert!(HyperEq::new(p(&[0, 0, 0, 1]), p(&[1]), 1).is_err());
        assert_eq!(
            HyperEq::with_inferred_genus(p(&[0]), p(&[1, 0, 0, 0, 0, 1]))
                .unwrap()
                .genus(),
            2
        );
    }

    #[test]
    fn infinity_patch_examples() {
        let e = eq(&[], &[1, 0, 0, 1], 1);
        let pe = infinity_patch(&e).unwrap();
        assert_eq!(pe.p(), &p(&[0, 1, 0, 0, 1]));
        assert!(pe.q().is_zero());
        let e = eq(&[1], &[0, 0, 0, 1], 1);
        let pe = infinity_patch(&e).unwrap();
        assert_eq!((pe.q(), pe.p()), (&p(&[0, 0, 1]), &p(&[0, 1])));
        assert_eq!(infinity_patch(&pe).unwrap(), e);
    }

    #[test]
    fn change_examples() {
        let e = eq(&[1, 1], &[3, -1, 2, 0, 0, 1], 2);
        let (same, f) = apply_change(&e, &MobiusChange::identity()).unwrap();
        assert_eq!((same, f), (e.clone(), int(1)));

        let (sw, f) = apply_change(&e, &MobiusChange::swap()).unwrap();
        assert_eq!(f, int(1));
        assert_eq!(sw, infinity_patch(&e).unwrap());

        assert_eq!(
            MobiusChange::new(int(1), int(2), int(2), int(4), int(1), Poly::zero()),
            Err(Error::SingularChange)
        );
    }

    #[test]
    fn twist_examples() {
        let e = eq(&[], &[1, 0, 0, 1], 1);
        assert_eq!(quadratic_twist(&e, &int(1)).unwrap(), e);
        assert_eq!(
            quadratic_twist(&e, &int(2)).unwrap(),
            eq(&[], &[8, 0, 0, 1], 1)
        );
        assert_eq!(
            quadratic_twist(&eq(&[1], &[0, 0, 0, 1], 1), &int(2)),
            Err(Error::NotTwistable)
        );
        assert_eq!(quadratic_twist(&e, &int(0)), Err(Error::ZeroDelta));
        let even = eq(&[], &[1, 0, 0, 0, 1], 1);
        assert_eq!(
            quadratic_twist(&even, &int(-1)).unwrap(),
            eq(&[], &[-1, 0, 0, 0, -1], 1)
        );
    }

    #[test]
    fn rendering() {
        assert_eq!(
            eq(&[1, 0, 0, 1], &[1, 1], 2).to_string(),
            "y^2 + y*(x^3 + 1) = x + 1"
        );
        assert_eq!(eq(&[0, 0, 1], &[0, 1], 1).to_string(), "y^2 + x^2*y = x");
        assert_eq!(
            eq(&[1], &[-2, -3, 0, 1], 1).to_string(),
            "y^2 + y = x^3 - 3*x - 2"
        );
    }

    #[test]
    fn rejects_cancelling_leading_terms() {
        // 4P + Q^2 = 4x + 1 for Q = 2x^2 + 1, P = -x^4 + x.
        let q = Poly::from_ints(&[1, 0, 2]);
        let p = Poly::from_ints(&[0, 1, 0, 0, -1]);
        assert!(matches!(
            HyperEq::<Rat>::new(q.clone(), p.clone(), 1),
            Err(Error::DegreeViolation(_))
        ));
        let mod2 = |f: &Poly<Rat>| reduce_mod2(f).unwrap();
        assert!(HyperEq::new(mod2(&q), mod2(&p), 1).is_ok());
    }
}
