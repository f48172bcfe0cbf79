//! Rational functions over Q in one variable.

use std::fmt;

use super::domain::{Domain, Field, QAlgebra, Rat};
use super::poly::Poly;

/// `num / den` in lowest terms with `den` monic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly<Rat>,
    den: Poly<Rat>,
}

impl RatFunc {
    /// Panics if `den` is zero.
    pub fn new(num: Poly<Rat>, den: Poly<Rat>) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::from_poly(Poly::zero());
        }
        let g = num.gcd(&den);
        let mut num = num.div_rem(&g).0;
        let mut den = den.div_rem(&g).0;
        let lc = den.lc().expect("nonzero").clone();
        num = num.scale(&lc.inv().expect("nonzero"));
        den = den.make_monic();
        RatFunc { num, den }
    }

    pub fn from_poly(num: Poly<Rat>) -> Self {
        RatFunc {
            num,
            den: Poly::one(),
        }
    }

    /// The variable.
    pub fn var() -> Self {
        Self::from_poly(Poly::x())
    }

    pub fn num(&self) -> &Poly<Rat> {
        &self.num
    }

    pub fn den(&self) -> &Poly<Rat> {
        &self.den
    }

    pub fn as_poly(&self) -> Option<&Poly<Rat>> {
        self.den.is_constant().then_some(&self.num)
    }

    /// Value at a rational point; `None` at a pole.
    pub fn eval(&self, at: &Rat) -> Option<Rat> {
        self.num.eval(at).try_div(&self.den.eval(at))
    }

    /// `self(inner)`.
    pub fn compose(&self, inner: &RatFunc) -> RatFunc {
        let n = self.num.eval_into(inner, RatFunc::from_rat);
        let d = self.den.eval_into(inner, RatFunc::from_rat);
        n.try_div(&d).expect("composition has a zero denominator")
    }

    /// Multiplicity of the factor `u` (negative for a pole at 0); `None` for zero.
    pub fn ord_at_zero(&self) -> Option<i64> {
        let lead = |p: &Poly<Rat>| p.coeffs().iter().position(|c| !c.is_zero());
        Some(lead(&self.num)? as i64 - lead(&self.den).expect("nonzero") as i64)
    }
}

impl Domain for RatFunc {
    fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }
    fn one() -> Self {
        Self::from_poly(Poly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return Self::new(&self.num + &rhs.num, self.den.clone());
        }
        Self::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negated())
    }
    fn times(&self, rhs: &Self) -> Self {
        Self::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
    fn negated(&self) -> Self {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|i| self.times(&i))
    }
}

impl Field for RatFunc {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::new(self.den.clone(), self.num.clone()))
        }
    }
}

impl QAlgebra for RatFunc {
    fn from_rat(q: &Rat) -> Self {
        Self::from_poly(Poly::constant(q.clone()))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_in("t", f)
    }
}

impl RatFunc {
    fn fmt_in(&self, var: &str, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.num.to_string_in(var);
        if self.den.is_one() {
            return f.write_str(&n);
        }
        let d = self.den.to_string_in(var);
        let wrap = |s: String, p: &Poly<Rat>| {
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        write!(f, "{}/{}", wrap(n, &self.num), wrap(d, &self.den))
    }

    pub fn to_string_in(&self, var: &str) -> String {
        struct In<'a>(&'a RatFunc, &'a str);
        impl fmt::Display for In<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt_in(self.1, f)
            }
        }
        In(self, var).to_string()
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::domain::{int, rat};

    fn p(c: &[i64]) -> Poly<Rat> {
        Poly::from_ints(c)
    }

    #[test]
    fn normal_form() {
        let a = RatFunc::new(p(&[-2, 0, 2]), p(&[2, 2]));
        assert_eq!(a, RatFunc::from_poly(p(&[-1, 1])));
        let b = RatFunc::new(p(&[1]), p(&[0, 2]));
        assert_eq!(b.num(), &Poly::constant(rat(1, 2)));
        assert_eq!(b.den(), &p(&[0, 1]));
    }

    #[test]
    fn field_operations() {
        let u = RatFunc::var();
        let inv = u.inv().unwrap();
        assert!(u.times(&inv).is_one());
        let s = inv.plus(&RatFunc::one());
        assert_eq!(s, RatFunc::new(p(&[1, 1]), p(&[0, 1])));
        assert_eq!(s.eval(&int(2)), Some(rat(3, 2)));
        assert_eq!(s.eval(&int(0)), None);
        assert_eq!(s.ord_at_zero(), Some(-1));
    }

    #[test]
    fn composition() {
        // t = 1 / (1 + u) and 1 - t = u / (1 + u)
        let t = RatFunc::new(p(&[1]), p(&[1, 1]));
        let f = RatFunc::from_poly(p(&[1, -1]));
        let g = f.compose(&t);
        assert_eq!(g, RatFunc::new(p(&[0, 1]), p(&[1, 1])));
        assert_eq!(g.to_string_in("u"), "u/(u + 1)");
    }
}
