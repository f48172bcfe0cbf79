//! Special fibers in characteristic 2 and their singular points.
//!
//! A point `(a, b)` of `y^2 + Q y = P` is singular iff `Q(a) = 0` and
//! `P'(a)^2 = Q'(a)^2 P(a)`; then `b = sqrt(P(a))`. It is a node iff
//! `Q'(a) != 0`, and not semistable iff `Q(a) = Q'(a) = P'(a) = 0`.

use std::fmt;

use crate::algebra::{roots_in_gf2k, Domain, Gf2k, Gf2kElem, Poly};
use crate::error::{Error, Result};
use crate::hyperelliptic::HyperEq;

type FPoly = Poly<Gf2kElem>;

#[derive(Clone, PartialEq)]
pub struct SpecialFiber {
    q: FPoly,
    p: FPoly,
    g: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum Patch {
    /// `y^2 + Q(x) y = P(x)`.
    Affine,
    /// `y^2 + T(u) y = S(u)` at `u = 0`.
    Infinity,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum PointKind {
    Smooth,
    Node,
    NonSemistable,
}

#[derive(Clone, PartialEq, Debug)]
pub struct PointReport {
    pub patch: Patch,
    pub x: Gf2kElem,
    pub y: Gf2kElem,
    pub kind: PointKind,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FiberType {
    Smooth,
    Nodal { nodes: usize },
    NonSemistable { nodes: usize, bad: usize },
}

impl FiberType {
    pub fn label(&self) -> &'static str {
        match self {
            FiberType::Smooth => "smooth",
            FiberType::Nodal { .. } => "nodal",
            FiberType::NonSemistable { .. } => "non-semistable",
        }
    }

    pub fn nodes(&self) -> usize {
        match *self {
            FiberType::Smooth => 0,
            FiberType::Nodal { nodes } | FiberType::NonSemistable { nodes, .. } => nodes,
        }
    }
}

/// The field all non-prime coefficients live in (GF(2) if there are none).
fn field_of<'a>(coeffs: impl IntoIterator<Item = &'a Gf2kElem>) -> Gf2k {
    let mut field = Gf2k::gf2();
    for c in coeffs {
        if !c.is_prime_field() {
            if field.k() > 1 && field != c.field() {
                panic!("fiber coefficients from two different fields");
            }
            field = c.field();
        }
    }
    field
}

impl SpecialFiber {
    pub fn new(q: FPoly, p: FPoly, g: usize) -> Result<Self> {
        if q.deg_i64() > g as i64 + 1 || p.deg_i64() > 2 * g as i64 + 2 {
            return Err(Error::DegreeViolation(format!(
                "deg Q = {}, deg P = {} exceed the bounds for genus {g}",
                q.deg_i64(),
                p.deg_i64()
            )));
        }
        if q.is_zero() && p.is_zero() {
            return Err(Error::NonReducedFiber);
        }
        let f = SpecialFiber { q, p, g };
        f.base_field();
        Ok(f)
    }

    pub fn from_eq(e: &HyperEq<Gf2kElem>) -> Result<Self> {
        Self::new(e.q().clone(), e.p().clone(), e.genus())
    }

    pub fn q(&self) -> &FPoly {
        &self.q
    }

    pub fn p(&self) -> &FPoly {
        &self.p
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn base_field(&self) -> Gf2k {
        field_of(self.q.coeffs().iter().chain(self.p.coeffs()))
    }

    /// `(T, S)` of the chart at infinity.
    pub fn infinity_polys(&self) -> (FPoly, FPoly) {
        (
            self.q.reciprocal(self.g + 1),
            self.p.reciprocal(2 * self.g + 2),
        )
    }

    fn patch_polys(&self, patch: Patch) -> (FPoly, FPoly) {
        match patch {
            Patch::Affine => (self.q.clone(), self.p.clone()),
            Patch::Infinity => self.infinity_polys(),
        }
    }

    /// `gcd(Q, P'^2 + Q'^2 P)`, whose roots are the singular x-coordinates.
    pub fn singular_locus(&self) -> Result<FPoly> {
        let (q, p) = (&self.q, &self.p);
        let (dq, dp) = (q.derivative(), p.derivative());
        let h = &(&dp * &dp) + &(&(&dq * &dq) * p);
        let g = q.gcd(&h);
        if g.is_zero() {
            return Err(Error::NonReducedFiber);
        }
        Ok(g)
    }

    pub fn to_eq_string(&self) -> String {
        match HyperEq::new(self.q.clone(), self.p.clone(), self.g) {
            Ok(e) => e.to_string(),
            Err(_) => format!("y^2 + ({})*y = {}", self.q, self.p),
        }
    }
}

impl fmt::Display for SpecialFiber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_eq_string())
    }
}

impl fmt::Debug for SpecialFiber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SpecialFiber({self}, g = {})", self.g)
    }
}

/// The distinct degrees of the irreducible factors of `f` over GF(2^k), by
/// distinct-degree factorization.
pub fn factor_degrees(f: &FPoly, k: u32) -> Vec<usize> {
    let mut rest = f.make_monic();
    let q = 1u64 << k;
    let x = FPoly::x();
    let mut h = x.clone();
    let mut out = Vec::new();
    let mut d = 0;
    while rest.deg_i64() > 0 {
        d += 1;
        if 2 * d > rest.deg_i64() as usize {
            // no factor of degree < d is left, so `rest` is irreducible
            out.push(rest.deg_i64() as usize);
            break;
        }
        h = h.pow_mod(q, &rest);
        let mut g = (&h - &x).gcd(&rest);
        if g.deg_i64() > 0 {
            out.push(d);
            while g.deg_i64() > 0 {
                rest = rest.div_rem(&g).0;
                g = g.gcd(&rest);
            }
            h = h.div_rem(&rest).1;
        }
    }
    out
}

fn lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

fn embed_poly(p: &FPoly, base: &Gf2k, target: &Gf2k) -> Result<FPoly> {
    if base.k() == 1 {
        return Ok(p.map(|c| c.in_field(target)));
    }
    let emb = base.embedding_into(target).ok_or_else(|| {
        Error::InvalidModulus(format!(
            "GF(2^{}) does not embed in GF(2^{})",
            base.k(),
            target.k()
        ))
    })?;
    Ok(emb.apply_poly(p))
}

/// Degree over GF(2) of the smallest field containing every singular point.
pub fn splitting_degree(f: &SpecialFiber) -> Result<u32> {
    let base = f.base_field();
    let locus = f.singular_locus()?;
    let m = factor_degrees(&locus, base.k()).into_iter().fold(1, lcm) as u64 * base.k() as u64;
    if m > crate::algebra::gf2k::MAX_K as u64 {
        return Err(Error::FieldTooLarge(m.min(u32::MAX as u64) as u32));
    }
    Ok(m as u32)
}

fn classify_at(q: &FPoly, p: &FPoly, a: &Gf2kElem) -> PointKind {
    let singular = q.eval(a).is_zero() && {
        let dp = p.derivative().eval(a);
        let dq = q.derivative().eval(a);
        dp.times(&dp) == dq.times(&dq).times(&p.eval(a))
    };
    if !singular {
        PointKind::Smooth
    } else if !q.derivative().eval(a).is_zero() {
        PointKind::Node
    } else {
        PointKind::NonSemistable
    }
}

/// Classify a point of the fiber.
pub fn classify_point(
    f: &SpecialFiber,
    patch: Patch,
    x: &Gf2kElem,
    y: &Gf2kElem,
) -> Result<PointKind> {
    let (q, p) = f.patch_polys(patch);
    let base = f.base_field();
    let field = [x, y]
        .into_iter()
        .find(|c| !c.is_prime_field())
        .map_or(base, |c| c.field());
    let (q, p) = (
        embed_poly(&q, &base, &field)?,
        embed_poly(&p, &base, &field)?,
    );
    if y.times(y).plus(&y.times(&q.eval(x))) != p.eval(x) {
        return Err(Error::PointNotOnCurve);
    }
    Ok(classify_at(&q, &p, x))
}

/// Singular points on both charts, over the given field (which should contain
/// the base field of the fiber).
pub fn singular_points_over(f: &SpecialFiber, field: &Gf2k) -> Result<Vec<PointReport>> {
    let base = f.base_field();
    let locus = embed_poly(&f.singular_locus()?, &base, field)?;
    let q = embed_poly(&f.q, &base, field)?;
    let p = embed_poly(&f.p, &base, field)?;
    let mut out: Vec<PointReport> = roots_in_gf2k(&locus, field)
        .into_iter()
        .map(|a| PointReport {
            patch: Patch::Affine,
            y: p.eval(&a).sqrt(),
            kind: classify_at(&q, &p, &a),
            x: a,
        })
        .collect();
    let (t, s) = f.infinity_polys();
    let (t, s) = (embed_poly(&t, &base, field)?, embed_poly(&s, &base, field)?);
    let zero = field.elem(0);
    let kind = classify_at(&t, &s, &zero);
    if kind != PointKind::Smooth {
        out.push(PointReport {
            patch: Patch::Infinity,
            y: s.eval(&zero).sqrt(),
            x: zero,
            kind,
        });
    }
    Ok(out)
}

/// Singular points over the splitting field of the singular locus.
pub fn singular_points(f: &SpecialFiber) -> Result<Vec<PointReport>> {
    let m = splitting_degree(f)?;
    let field = Gf2k::standard(m.max(f.base_field().k()))?;
    if field.k() == f.base_field().k() {
        return singular_points_over(f, &f.base_field());
    }
    singular_points_over(f, &field)
}

/// Exhaustive Jacobian-criterion search over `field × field` on the affine
/// chart and at `u = 0` on the chart at infinity.
pub fn brute_force_singular_points(
    f: &SpecialFiber,
    field: &Gf2k,
) -> Result<Vec<(Patch, Gf2kElem, Gf2kElem)>> {
    let base = f.base_field();
    let mut out = Vec::new();
    for patch in [Patch::Affine, Patch::Infinity] {
        let (q, p) = f.patch_polys(patch);
        let (q, p) = (embed_poly(&q, &base, field)?, embed_poly(&p, &base, field)?);
        let (dq, dp) = (q.derivative(), p.derivative());
        let xs: Vec<Gf2kElem> = match patch {
            Patch::Affine => field.elements().collect(),
            Patch::Infinity => vec![field.elem(0)],
        };
        for a in xs {
            let (qa, pa, dqa, dpa) = (q.eval(&a), p.eval(&a), dq.eval(&a), dp.eval(&a));
            for b in field.elements() {
                let on_curve = b.times(&b).plus(&b.times(&qa)) == pa;
                if on_curve && qa.is_zero() && b.times(&dqa) == dpa {
                    out.push((patch, a, b));
                }
            }
        }
    }
    Ok(out)
}

pub fn fiber_type(f: &SpecialFiber) -> Result<FiberType> {
    let pts = singular_points(f)?;
    let nodes = pts.iter().filter(|p| p.kind == PointKind::Node).count();
    let bad = pts
        .iter()
        .filter(|p| p.kind == PointKind::NonSemistable)
        .count();
    Ok(match (nodes, bad) {
        (0, 0) => FiberType::Smooth,
        (n, 0) => FiberType::Nodal { nodes: n },
        (n, b) => FiberType::NonSemistable { nodes: n, bad: b },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gp(bits: &[u32]) -> FPoly {
        Poly::new(bits.iter().map(|&b| Gf2kElem::from_bit(b == 1)).collect())
    }

    fn fiber(q: &[u32], p: &[u32], g: usize) -> SpecialFiber {
        SpecialFiber::new(gp(q), gp(p), g).unwrap()
    }

    #[test]
    fn toric_fiber_has_two_nodes_at_cube_roots() {
        let f = fiber(&[1, 0, 0, 1], &[1, 1], 2);
        let pts = singular_points(&f).unwrap();
        assert_eq!(pts.len(), 2);
        for pt in &pts {
            assert_eq!(pt.kind, PointKind::Node);
            assert_eq!(pt.x.field().k(), 2);
            assert!(!pt.x.is_prime_field());
            assert!(pt.x.pow(3).is_one());
        }
        assert_eq!(fiber_type(&f).unwrap(), FiberType::Nodal { nodes: 2 });
    }

    #[test]
    fn examples() {
        let f = fiber(&[0, 1, 1], &[], 1);
        let xs: Vec<u32> = singular_points(&f)
            .unwrap()
            .iter()
            .map(|p| p.x.bits())
            .collect();
        assert_eq!(xs, vec![0, 1]);
        assert_eq!(fiber_type(&f).unwrap(), FiberType::Nodal { nodes: 2 });

        assert!(singular_points(&fiber(&[1], &[0, 1, 0, 1], 1))
            .unwrap()
            .is_empty());

        let cusp = fiber(&[], &[0, 0, 0, 1], 1);
        let zero = Gf2kElem::from_bit(false);
        assert_eq!(
            classify_point(&cusp, Patch::Affine, &zero, &zero).unwrap(),
            PointKind::NonSemistable
        );
        let smooth = fiber(&[1], &[0, 0, 0, 1], 1);
        assert_eq!(
            classify_point(&smooth, Patch::Affine, &zero, &zero).unwrap(),
            PointKind::Smooth
        );
        let one = Gf2kElem::from_bit(true);
        assert_eq!(
            classify_point(&smooth, Patch::Affine, &one, &zero),
            Err(Error::PointNotOnCurve)
        );
    }

    #[test]
    fn non_reduced_is_rejected() {
        let f = fiber(&[], &[1, 0, 1], 1);
        assert_eq!(singular_points(&f), Err(Error::NonReducedFiber));
    }

    #[test]
    fn infinity_points() {
        // y^2 + y = x^4 + x^3 with g = 1: T = u^2, S = 1 + u, singular at u = 0? T(0) = 0,
        // S'(0)^2 = 1, T'(0)^2 S(0) = 0: smooth.
        let f = fiber(&[1], &[0, 0, 0, 1, 1], 1);
        assert!(singular_points(&f)
            .unwrap()
            .iter()
            .all(|p| p.patch == Patch::Affine));
        // y^2 = x^3 + x (g = 1): S = u + u^3, T = 0; at u = 0 S'(0) = 1 so smooth there
        let f = fiber(&[], &[0, 1, 0, 1], 1);
        let pts = singular_points(&f).unwrap();
        assert!(pts.iter().all(|p| p.kind == PointKind::NonSemistable));
        // y^2 + x y = x^3 (g = 1): T = u, S = u; infinity smooth, origin a node
        let f = fiber(&[0, 1], &[0, 0, 0, 1], 1);
        assert_eq!(fiber_type(&f).unwrap(), FiberType::Nodal { nodes: 1 });
        // y^2 + y = 1 (g = 1, degree drops): the whole chart at infinity matters
        let f = fiber(&[1], &[1], 1);
        let pts = singular_points(&f).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].patch, Patch::Infinity);
    }

    #[test]
    fn distinct_degree_factorization() {
        // (x^2 + x + 1)(x^3 + x + 1) x^2
        let f = &(&gp(&[1, 1, 1]) * &gp(&[1, 1, 0, 1])) * &gp(&[0, 0, 1]);
        let mut d = factor_degrees(&f, 1);
        d.sort_unstable();
        assert_eq!(d, vec![1, 2, 3]);
    }

    #[test]
    fn agrees_with_brute_force_on_reference_fibers() {
        for (q, p, g) in [
            (vec![1, 0, 0, 1], vec![1, 1], 2),
            (vec![0, 1, 1], vec![], 1),
            (vec![0, 0, 1], vec![0, 1], 1),
            (vec![0, 1, 1], vec![1], 1),
        ] {
            let f = fiber(&q, &p, g);
            let m = splitting_degree(&f).unwrap();
            let field = Gf2k::standard(m * 2).unwrap();
            let fast: Vec<(Patch, u32, u32)> = singular_points_over(&f, &field)
                .unwrap()
                .iter()
                .map(|p| (p.patch, p.x.bits(), p.y.bits()))
                .collect();
            let slow: Vec<(Patch, u32, u32)> = brute_force_singular_points(&f, &field)
                .unwrap()
                .iter()
                .map(|(p, a, b)| (*p, a.bits(), b.bits()))
                .collect();
            assert_eq!(fast, slow, "fiber {f}");
        }
    }
}
