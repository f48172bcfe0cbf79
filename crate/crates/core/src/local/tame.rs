//! The tamely ramified field Q(π), π^r = 2.

use std::fmt;

use crate::algebra::{residue_mod_2pow, two_pow, v2, Domain, Field, Gf2kElem, QAlgebra, Rat};
use crate::error::{Error, Result};

/// `Σ a_i π^i` with `π^r = 2`. `r == 0` marks a rational element that has
/// not been placed in a particular extension yet; it combines with any `r`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TameElem {
    r: u32,
    coeffs: Vec<Rat>,
}

impl TameElem {
    pub fn from_coeffs(r: u32, mut coeffs: Vec<Rat>) -> Self {
        assert!(r >= 1, "tame degree must be positive");
        assert!(
            coeffs.len() <= r as usize,
            "too many coefficients for degree {r}"
        );
        coeffs.resize(r as usize, Rat::zero());
        TameElem { r, coeffs }.normalized()
    }

    pub fn rational(q: Rat) -> Self {
        TameElem {
            r: 0,
            coeffs: vec![q],
        }
    }

    /// The uniformizer of Q(2^{1/r}).
    pub fn pi(r: u32) -> Self {
        Self::pi_pow(r, 1)
    }

    /// `π^n` for any integer `n`.
    pub fn pi_pow(r: u32, n: i64) -> Self {
        assert!(r >= 1, "tame degree must be positive");
        let q = n.div_euclid(r as i64);
        let i = n.rem_euclid(r as i64) as usize;
        let mut coeffs = vec![Rat::zero(); r as usize];
        coeffs[i] = two_pow(q);
        TameElem { r, coeffs }.normalized()
    }

    /// Rational elements are kept in the shared `r == 0` form so that they
    /// compare equal regardless of the ambient extension.
    fn normalized(mut self) -> Self {
        if self.r > 0 && self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            self.coeffs.truncate(1);
            self.r = 0;
        }
        self
    }

    pub fn degree(&self) -> u32 {
        self.r
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        (self.r == 0).then(|| &self.coeffs[0])
    }

    fn common_r(&self, rhs: &Self) -> u32 {
        match (self.r, rhs.r) {
            (0, r) | (r, 0) => r,
            (a, b) if a == b => a,
            (a, b) => panic!("mixing Q(2^(1/{a})) and Q(2^(1/{b}))"),
        }
    }

    fn padded(&self, r: u32) -> Vec<Rat> {
        let mut c = self.coeffs.clone();
        c.resize(r.max(1) as usize, Rat::zero());
        c
    }

    /// Exact valuation with `v(2) = 1`.
    pub fn val(&self) -> Result<Rat> {
        let denom = self.r.max(1) as i64;
        self.coeffs
            .iter()
            .enumerate()
            .filter_map(|(i, c)| {
                v2(c).map(|v| Rat::new((v * denom + i as i64).into(), denom.into()))
            })
            .min()
            .ok_or(Error::ZeroElement)
    }

    /// Image in the residue field GF(2).
    pub fn residue(&self) -> Result<Gf2kElem> {
        if self.is_zero() {
            return Ok(Gf2kElem::from_bit(false));
        }
        if self.val()? < Rat::zero() {
            return Err(Error::NonIntegral(self.to_string()));
        }
        Ok(Gf2kElem::from_bit(
            residue_mod_2pow(&self.coeffs[0], 1)? == 1,
        ))
    }
}

/// Solve `m y = b` over Q for an invertible square `m`.
fn solve(mut m: Vec<Vec<Rat>>, mut b: Vec<Rat>) -> Option<Vec<Rat>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).find(|&i| !m[i][col].is_zero())?;
        m.swap(col, piv);
        b.swap(col, piv);
        let inv = m[col][col].inv()?;
        for x in &mut m[col][col..] {
            *x = &*x * &inv;
        }
        b[col] = &b[col] * &inv;
        let pivot = m[col].clone();
        for i in 0..n {
            if i != col && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for (x, p) in m[i][col..].iter_mut().zip(&pivot[col..]) {
                    *x -= &f * p;
                }
                let t = &f * &b[col];
                b[i] -= t;
            }
        }
    }
    Some(b)
}

impl Domain for TameElem {
    fn zero() -> Self {
        Self::rational(Rat::zero())
    }
    fn one() -> Self {
        Self::rational(Rat::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
    fn plus(&self, rhs: &Self) -> Self {
        let r = self.common_r(rhs);
        let (a, b) = (self.padded(r), rhs.padded(r));
        TameElem {
            r,
            coeffs: a.iter().zip(&b).map(|(x, y)| x + y).collect(),
        }
        .normalized()
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negated())
    }
    fn times(&self, rhs: &Self) -> Self {
        let r = self.common_r(rhs);
        let n = r.max(1) as usize;
        let (a, b) = (self.padded(r), rhs.padded(r));
        let mut out = vec![Rat::zero(); n];
        let two = Rat::from_integer(2.into());
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                let p = x * y;
                if i + j >= n {
                    out[i + j - n] += p * &two;
                } else {
                    out[i + j] += p;
                }
            }
        }
        TameElem { r, coeffs: out }.normalized()
    }
    fn negated(&self) -> Self {
        TameElem {
            r: self.r,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|i| self.times(&i))
    }
}

impl Field for TameElem {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(q) = self.as_rational() {
            return Some(Self::rational(q.recip()));
        }
        let n = self.r as usize;
        // column j of the multiplication matrix is self * π^j
        let cols: Vec<Vec<Rat>> = (0..n)
            .map(|j| self.times(&Self::pi_pow(self.r, j as i64)).padded(self.r))
            .collect();
        let m: Vec<Vec<Rat>> = (0..n)
            .map(|i| cols.iter().map(|c| c[i].clone()).collect())
            .collect();
        let mut e0 = vec![Rat::zero(); n];
        e0[0] = Rat::one();
        solve(m, e0).map(|y| Self::from_coeffs(self.r, y))
    }
}

impl QAlgebra for TameElem {
    fn from_rat(q: &Rat) -> Self {
        Self::rational(q.clone())
    }
}

/// `tame_val` in functional form.
pub fn tame_val(x: &TameElem) -> Result<Rat> {
    x.val()
}

impl fmt::Display for TameElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "pi".to_string(),
                _ => format!("pi^{i}"),
            };
            terms.push(match (i, c.is_one()) {
                (0, _) => c.to_string(),
                (_, true) => mono,
                _ if *c == -Rat::one() => format!("-{mono}"),
                _ => format!("{c}*{mono}"),
            });
        }
        if terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = terms[0].clone();
        for t in &terms[1..] {
            match t.strip_prefix('-') {
                Some(rest) => {
                    out.push_str(" - ");
                    out.push_str(rest);
                }
                None => {
                    out.push_str(" + ");
                    out.push_str(t);
                }
            }
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for TameElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TameElem[r={}]({self})", self.r)
    }
}
