//! Dense univariate polynomials over a [`Domain`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::domain::{rat_sqrt, Domain, Field, QAlgebra, Rat};

/// Coefficients are stored lowest degree first with no trailing zeros, so the
/// zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<D> {
    coeffs: Vec<D>,
}

impl<D: Domain> Poly<D> {
    pub fn new(coeffs: Vec<D>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(D::one())
    }

    pub fn constant(c: D) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate.
    pub fn x() -> Self {
        Self::monomial(D::one(), 1)
    }

    pub fn monomial(c: D, n: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![D::zero(); n];
        coeffs.push(c);
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[D] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<D> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to -1, for degree-window checks.
    pub fn deg_i64(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, i: usize) -> D {
        self.coeffs.get(i).cloned().unwrap_or_else(D::zero)
    }

    pub fn lc(&self) -> Option<&D> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, at: &D) -> D {
        self.coeffs
            .iter()
            .rev()
            .fold(D::zero(), |acc, c| acc.times(at).plus(c))
    }

    /// Evaluate after embedding coefficients into a larger domain.
    pub fn eval_into<E: Domain>(&self, at: &E, embed: impl Fn(&D) -> E) -> E {
        self.coeffs
            .iter()
            .rev()
            .fold(E::zero(), |acc, c| acc.times(at).plus(&embed(c)))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul_u64(i as u64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &D) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.times(c)).collect())
    }

    /// Coefficient-wise exact division by a scalar.
    pub fn try_div_scalar(&self, c: &D) -> Option<Self> {
        self.coeffs
            .iter()
            .map(|a| a.try_div(c))
            .collect::<Option<Vec<_>>>()
            .map(Self::new)
    }

    pub fn map<E: Domain>(&self, f: impl Fn(&D) -> E) -> Poly<E> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn try_map<E: Domain, Err>(
        &self,
        f: impl Fn(&D) -> Result<E, Err>,
    ) -> Result<Poly<E>, Err> {
        Ok(Poly::new(
            self.coeffs.iter().map(f).collect::<Result<_, _>>()?,
        ))
    }

    pub fn pow(&self, n: u64) -> Self {
        Domain::pow(self, n)
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * inner) + &Self::constant(c.clone())
        })
    }

    /// `x^n self(1/x)`; requires `n >= deg self`.
    pub fn reciprocal(&self, n: usize) -> Self {
        assert!(self.coeffs.len() <= n + 1, "reciprocal degree too small");
        let mut c = self.coeffs.clone();
        c.resize(n + 1, D::zero());
        c.reverse();
        Self::new(c)
    }

    /// `self(-x)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { c.negated() } else { c.clone() })
                .collect(),
        )
    }

    /// Exact quotient, if `rhs` divides `self` in `D[x]`.
    pub fn try_div_exact(&self, rhs: &Self) -> Option<Self> {
        let (q, r) = self.pseudo_long_division(rhs)?;
        r.is_zero().then_some(q)
    }

    /// Long division where every leading-coefficient quotient must be exact
    /// in `D`. Returns `None` if some step is not.
    fn pseudo_long_division(&self, rhs: &Self) -> Option<(Self, Self)> {
        let dd = rhs.degree()?;
        let lc = rhs.lc()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![D::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = rem[i].try_div(lc)?;
            for (j, c) in rhs.coeffs.iter().enumerate() {
                rem[i - dd + j] = rem[i - dd + j].minus(&q.times(c));
            }
            quot[i - dd] = q;
        }
        Some((Self::new(quot), Self::new(rem)))
    }

    pub fn leading_term_is_one(&self) -> bool {
        self.lc().is_some_and(|c| c.is_one())
    }
}

impl<D: Field> Poly<D> {
    pub fn div_rem(&self, rhs: &Self) -> (Self, Self) {
        assert!(!rhs.is_zero(), "polynomial division by zero");
        self.pseudo_long_division(rhs)
            .expect("field coefficients divide exactly")
    }

    pub fn make_monic(&self) -> Self {
        match self.lc() {
            None => Self::zero(),
            Some(c) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, rhs: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// `self^e mod m` by square-and-multiply.
    pub fn pow_mod(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.div_rem(m).1;
        let mut acc = Self::one().div_rem(m).1;
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).div_rem(m).1;
            }
            e >>= 1;
            if e > 0 {
                base = (&base * &base).div_rem(m).1;
            }
        }
        acc
    }
}

impl<D: QAlgebra> Poly<D> {
    pub fn from_rats(coeffs: &[Rat]) -> Self {
        Self::new(coeffs.iter().map(D::from_rat).collect())
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| D::from_i64(c)).collect())
    }
}

impl Poly<Rat> {
    /// Exact square root with positive leading coefficient, matched from the
    /// top coefficient down. `None` if `self` is not a square in `Q[x]`.
    pub fn exact_sqrt(&self) -> Option<Self> {
        let n = match self.degree() {
            None => return Some(Self::zero()),
            Some(n) if n % 2 == 1 => return None,
            Some(n) => n / 2,
        };
        let lead = rat_sqrt(self.lc()?)?;
        let two_lead = &lead + &lead;
        // root coefficients from the top: root[n - k]
        let mut root = vec![<Rat as Domain>::zero(); n + 1];
        root[n] = lead;
        for k in 1..=n {
            // coefficient of x^{2n-k} in root^2 must equal self's
            let mut acc = self.coeff(2 * n - k);
            for i in 1..k {
                acc -= &root[n - i] * &root[n - (k - i)];
            }
            root[n - k] = acc / &two_lead;
        }
        let root = Self::new(root);
        (&root * &root == *self).then_some(root)
    }
}

impl<D: Domain> Domain for Poly<D> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        self.try_div_exact(rhs)
    }
}

impl<D: QAlgebra> QAlgebra for Poly<D> {
    fn from_rat(q: &Rat) -> Self {
        Poly::constant(D::from_rat(q))
    }
}

impl<D: Domain> Add for &Poly<D> {
    type Output = Poly<D>;
    fn add(self, rhs: &Poly<D>) -> Poly<D> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                    (Some(a), Some(b)) => a.plus(b),
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }
}

impl<D: Domain> Sub for &Poly<D> {
    type Output = Poly<D>;
    fn sub(self, rhs: &Poly<D>) -> Poly<D> {
        self + &(-rhs)
    }
}

impl<D: Domain> Neg for &Poly<D> {
    type Output = Poly<D>;
    fn neg(self) -> Poly<D> {
        Poly {
            coeffs: self.coeffs.iter().map(Domain::negated).collect(),
        }
    }
}

impl<D: Domain> Mul for &Poly<D> {
    type Output = Poly<D>;
    fn mul(self, rhs: &Poly<D>) -> Poly<D> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![D::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].plus(&a.times(b));
                }
            }
        }
        Poly::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<D: Domain> $tr for Poly<D> {
            type Output = Poly<D>;
            fn $m(self, rhs: Poly<D>) -> Poly<D> {
                (&self).$m(&rhs)
            }
        }
        impl<D: Domain> $tr<&Poly<D>> for Poly<D> {
            type Output = Poly<D>;
            fn $m(self, rhs: &Poly<D>) -> Poly<D> {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<D: Domain> Neg for Poly<D> {
    type Output = Poly<D>;
    fn neg(self) -> Poly<D> {
        -&self
    }
}

impl<D: Domain + fmt::Display> Poly<D> {
    /// Human-readable rendering in the named variable, highest degree first,
    /// e.g. `x^3 - 3*x - 2`.
    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let atomic = !s.trim_start_matches('-').contains([' ', '+', '-']);
            let (neg, body) = if atomic && s.starts_with('-') {
                (true, s[1..].to_string())
            } else if atomic {
                (false, s)
            } else {
                (false, format!("({s})"))
            };
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            let term = if i == 0 {
                body
            } else if body == "1" {
                mono
            } else {
                format!("{body}*{mono}")
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
                out.push_str(&term);
            } else {
                out.push_str(if neg { " - " } else { " + " });
                out.push_str(&term);
            }
        }
        out
    }
}

impl<D: Domain + fmt::Display> fmt::Display for Poly<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("x"))
    }
}

impl<D: fmt::Debug> fmt::Debug for Poly<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Poly").field(&self.coeffs).finish()
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
    fn arithmetic_and_degree() {
        let a = p(&[1, 1]);
        let b = p(&[-1, 1]);
        assert_eq!(&a * &b, p(&[-1, 0, 1]));
        assert_eq!(&a - &a, Poly::zero());
        assert_eq!((&a * &b).degree(), Some(2));
        assert_eq!(Poly::<Rat>::zero().degree(), None);
        assert_eq!(p(&[2, 3, 0, 0]).coeffs().len(), 2);
    }

    #[test]
    fn exact_division() {
        let a = p(&[-2, 0, 0, 1]) - p(&[0, 3]); // x^3 - 3x - 2
        let q = a.try_div_exact(&p(&[-2, 1])).unwrap();
        assert_eq!(q, p(&[1, 2, 1]));
        assert!(a.try_div_exact(&p(&[0, 1])).is_none());
    }

    #[test]
    fn square_roots() {
        let h = p(&[-1, 1, 1]);
        assert_eq!((&h * &h).exact_sqrt(), Some(h));
        assert_eq!(p(&[1, 0, 2]).exact_sqrt(), None);
        assert_eq!(p(&[1, 1]).exact_sqrt(), None);
        let quarter = Poly::from_rats(&[rat(1, 4), int(1), int(1)]);
        assert_eq!(
            quarter.exact_sqrt(),
            Some(Poly::from_rats(&[rat(1, 2), int(1)]))
        );
    }

    #[test]
    fn compose_reflect_reciprocal() {
        let h = p(&[1, 1]);
        assert_eq!(h.compose(&p(&[2, 0, -1])), p(&[3, 0, -1]));
        assert_eq!(p(&[1, 2, 3]).reflect(), p(&[1, -2, 3]));
        assert_eq!(p(&[1, 0, 0, 1]).reciprocal(4), p(&[0, 1, 0, 0, 1]));
    }

    #[test]
    fn gcd_over_rationals() {
        let a = &p(&[-1, 1]) * &p(&[2, 1]);
        let b = &p(&[-1, 1]) * &p(&[5, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
    }

    #[test]
    fn rendering() {
        let a = p(&[-2, -3, 0, 1]);
        assert_eq!(a.to_string(), "x^3 - 3*x - 2");
        let nested: Poly<Poly<Rat>> = Poly::new(vec![p(&[0, 1]), Poly::one(), p(&[1, -1])]);
        assert_eq!(nested.to_string_in("y"), "(-x + 1)*y^2 + y + x");
    }
}
