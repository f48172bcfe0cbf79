//! Resultants and discriminants through the Sylvester matrix.

use super::domain::Domain;
use super::poly::Poly;
use crate::error::{Error, Result};

/// Determinant by fraction-free (Bareiss) elimination. Every division is
/// exact in an integral domain; a failing division is a bug and panics.
pub fn det_bareiss<D: Domain>(mut m: Vec<Vec<D>>) -> D {
    let n = m.len();
    if n == 0 {
        return D::one();
    }
    let mut sign_flip = false;
    let mut prev = D::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign_flip = !sign_flip;
                }
                None => return D::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].times(&m[i][j]).minus(&m[i][k].times(&m[k][j]));
                m[i][j] = num
                    .try_div(&prev)
                    .expect("Bareiss division is exact in an integral domain");
            }
            m[i][k] = D::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign_flip {
        d.negated()
    } else {
        d
    }
}

/// The `(m + n) x (m + n)` Sylvester matrix of `a` (degree m) and `b` (degree n).
pub fn sylvester_matrix<D: Domain>(a: &Poly<D>, b: &Poly<D>) -> Vec<Vec<D>> {
    let m = a.degree().unwrap_or(0);
    let n = b.degree().unwrap_or(0);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for shift in 0..n {
        let mut row = vec![D::zero(); size];
        for (i, c) in a.coeffs().iter().rev().enumerate() {
            row[shift + i] = c.clone();
        }
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![D::zero(); size];
        for (i, c) in b.coeffs().iter().rev().enumerate() {
            row[shift + i] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Sylvester resultant. If exactly one input is zero the result is 0.
pub fn resultant<D: Domain>(a: &Poly<D>, b: &Poly<D>) -> Result<D> {
    match (a.degree(), b.degree()) {
        (None, None) => Err(Error::ZeroInput),
        (None, _) | (_, None) => Ok(D::zero()),
        (Some(0), Some(n)) => Ok(a.coeff(0).pow(n as u64)),
        (Some(m), Some(0)) => Ok(b.coeff(0).pow(m as u64)),
        _ => Ok(det_bareiss(sylvester_matrix(a, b))),
    }
}

/// `(-1)^{n(n-1)/2} Res(H, H') / lc(H)`.
pub fn discriminant_poly<D: Domain>(h: &Poly<D>) -> Result<D> {
    let n = match h.degree() {
        None | Some(0) => return Err(Error::ZeroInput),
        Some(n) => n,
    };
    let res = resultant(h, &h.derivative())?;
    let lc = h.lc().expect("nonzero");
    let q = res.try_div(lc).ok_or_else(|| {
        Error::AssertionFailed("leading coefficient does not divide Res(H, H')".into())
    })?;
    Ok(if (n * (n - 1) / 2) % 2 == 1 {
        q.negated()
    } else {
        q
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::domain::{int, rat, Rat};

    fn p(c: &[i64]) -> Poly<Rat> {
        Poly::from_ints(c)
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(resultant(&p(&[0, 1]), &p(&[1, 0, 1])).unwrap(), int(1));
        assert_eq!(resultant(&p(&[-2, 1]), &p(&[-5, 1])).unwrap(), int(-3));
        assert_eq!(resultant(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap(), int(0));
        assert_eq!(
            resultant(&Poly::<Rat>::zero(), &Poly::zero()),
            Err(Error::ZeroInput)
        );
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(discriminant_poly(&p(&[2, 3, 1])).unwrap(), int(1));
        assert_eq!(discriminant_poly(&p(&[2, -3, 0, 1])).unwrap(), int(0));
        let h = Poly::<Rat>::from_rats(&[rat(7, 4), int(-3), int(0), int(1)]);
        assert_eq!(discriminant_poly(&h).unwrap(), rat(405, 16));
        assert_eq!(discriminant_poly(&p(&[5, 3])).unwrap(), int(1));
    }

    #[test]
    fn bareiss_needs_pivoting() {
        let m = vec![
            vec![int(0), int(1), int(2)],
            vec![int(1), int(0), int(3)],
            vec![int(4), int(-3), int(8)],
        ];
        // cofactor expansion: 0*(0+9) - 1*(8-12) + 2*(-3-0) = -2
        assert_eq!(det_bareiss(m), int(-2));
    }

    #[test]
    fn symbolic_cubic_discriminant() {
        // x^3 + a x + b over Q[a][b] would need two variables; check Q[t]:
        // x^3 - 3x + t has discriminant 108 - 27 t^2.
        let t = Poly::<Rat>::x();
        let h: Poly<Poly<Rat>> =
            Poly::new(vec![t, Poly::from_ints(&[-3]), Poly::zero(), Poly::one()]);
        assert_eq!(discriminant_poly(&h).unwrap(), p(&[108, 0, -27]));
    }
}
