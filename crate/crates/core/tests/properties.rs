use frey_core::algebra::{
    discriminant_poly, int, odd_part, rat, residue_mod_2pow, resultant, roots_in_gf2k, v2, Domain,
    Field, Gf2k, Gf2kElem, Poly, Rat,
};
use frey_core::classifier::{classify, Mode, Signature};
use frey_core::fibers::{
    brute_force_singular_points, singular_points, splitting_degree, Patch, SpecialFiber,
};
use frey_core::hyperelliptic::{
    apply_change, hyper_discriminant, infinity_patch, HyperEq, MobiusChange,
};
use frey_core::local::{normalize_twist, tame_val, TameElem};
use proptest::prelude::*;

fn ipoly(c: &[i64]) -> Poly<Rat> {
    Poly::from_ints(c)
}

fn small_poly(max_deg: usize) -> impl Strategy<Value = Poly<Rat>> {
    prop::collection::vec(-6i64..=6, 1..=max_deg + 1).prop_map(|c| ipoly(&c))
}

/// Polynomial of exactly degree `d`.
fn poly_of_degree(d: usize) -> impl Strategy<Value = Poly<Rat>> {
    (
        prop::collection::vec(-5i64..=5, d),
        prop_oneof![-4i64..=-1, 1i64..=4],
    )
        .prop_map(|(mut c, lc)| {
            c.push(lc);
            ipoly(&c)
        })
}

fn nonzero_rat() -> impl Strategy<Value = Rat> {
    (prop_oneof![-9i64..=-1, 1i64..=9], 1i64..=9).prop_map(|(n, d)| rat(n, d))
}

fn hyper_eq() -> impl Strategy<Value = HyperEq<Rat>> {
    (1usize..=2, any::<bool>())
        .prop_flat_map(|(g, odd)| {
            let dp = if odd { 2 * g + 1 } else { 2 * g + 2 };
            (Just(g), small_poly(g + 1), poly_of_degree(dp))
        })
        .prop_filter_map("window", |(g, q, p)| HyperEq::new(q, p, g).ok())
}

fn change() -> impl Strategy<Value = MobiusChange<Rat>> {
    (
        prop::array::uniform4(-3i64..=3),
        nonzero_rat(),
        prop::collection::vec(-3i64..=3, 0..=2),
    )
        .prop_filter_map("singular", |([a, b, c, d], e, shift)| {
            MobiusChange::new(int(a), int(b), int(c), int(d), e, ipoly(&shift)).ok()
        })
}

fn gf2_poly(max_deg: usize) -> impl Strategy<Value = Poly<Gf2kElem>> {
    prop::collection::vec(any::<bool>(), 0..=max_deg + 1)
        .prop_map(|b| Poly::new(b.into_iter().map(Gf2kElem::from_bit).collect()))
}

fn tame(r: u32) -> impl Strategy<Value = TameElem> {
    prop::collection::vec((-20i64..=20, 1i64..=8), r as usize).prop_map(move |c| {
        TameElem::from_coeffs(r, c.into_iter().map(|(n, d)| rat(n, d)).collect())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn resultant_antisymmetry(a in small_poly(4), b in small_poly(4)) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let (m, n) = (a.degree().unwrap(), b.degree().unwrap());
        let ab = resultant(&a, &b).unwrap();
        let ba = resultant(&b, &a).unwrap();
        let sign = if (m * n) % 2 == 0 { int(1) } else { int(-1) };
        prop_assert_eq!(ab, sign * ba);
    }

    #[test]
    fn discriminant_homogeneity(h in (2usize..=5).prop_flat_map(poly_of_degree), c in nonzero_rat()) {
        let n = h.degree().unwrap() as u64;
        let lhs = discriminant_poly(&h.scale(&c)).unwrap();
        let rhs = Domain::pow(&c, 2 * n - 2) * discriminant_poly(&h).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn discriminant_vanishes_iff_repeated_factor(a in (1usize..=3).prop_flat_map(poly_of_degree), b in (1usize..=2).prop_flat_map(poly_of_degree), square in any::<bool>()) {
        let h = if square { &(&a * &b) * &b } else { &a * &b };
        let repeated = !h.gcd(&h.derivative()).is_constant();
        prop_assert_eq!(discriminant_poly(&h).unwrap().is_zero(), repeated);
    }

    #[test]
    fn change_law_over_q(e in hyper_eq(), m in change()) {
        let before = hyper_discriminant(&e).unwrap();
        prop_assume!(!before.is_zero());
        let (after, factor) = apply_change(&e, &m).unwrap();
        prop_assert_eq!(hyper_discriminant(&after).unwrap(), factor * before);
    }

    #[test]
    fn infinity_patch_preserves_discriminant(e in hyper_eq()) {
        let before = hyper_discriminant(&e).unwrap();
        prop_assume!(!before.is_zero());
        let patched = infinity_patch(&e).unwrap();
        prop_assert_eq!(&hyper_discriminant(&patched).unwrap(), &before);
        let (swapped, f) = apply_change(&e, &MobiusChange::swap()).unwrap();
        prop_assert_eq!(f, int(1));
        prop_assert_eq!(swapped, patched);
    }

    #[test]
    fn tame_valuation_is_multiplicative(r in prop::sample::select(vec![3u32, 5, 7]), a in tame(7), b in tame(7)) {
        let cut = |x: &TameElem| TameElem::from_coeffs(r, x.coeffs()[..r as usize].to_vec());
        let (a, b) = (cut(&a), cut(&b));
        prop_assume!(!a.is_zero() && !b.is_zero());
        let ab = a.times(&b);
        prop_assert_eq!(tame_val(&ab).unwrap(), tame_val(&a).unwrap() + tame_val(&b).unwrap());
        prop_assert_eq!(ab.times(&b.inv().unwrap()), a);
    }

    #[test]
    fn twist_normalization(z in nonzero_rat(), s in nonzero_rat(), k in -6i64..=6, r in prop::sample::select(vec![3u32, 5, 7])) {
        let s = s * frey_core::algebra::two_pow(k);
        let (d, z1, s1) = normalize_twist(&z, &s, r).unwrap();
        let e = v2(&s1).unwrap();
        prop_assert_eq!(e % 2, 0);
        prop_assert_eq!(residue_mod_2pow(&odd_part(&s1).unwrap(), 2).unwrap(), 1);
        prop_assert_eq!(&z1, &(int(d * d) * &z));
        prop_assert_eq!(&s1, &(Domain::pow(&int(d), r as u64) * &s));
        let again = normalize_twist(&z1, &s1, r).unwrap();
        prop_assert_eq!(again, (1, z1, s1));
    }

    #[test]
    fn ppr_even_symmetry(n in prop_oneof![-999i64..=-1, 1i64..=999], k in -12i64..=12, r in prop::sample::select(vec![3u32, 5, 7, 11])) {
        let t = rat(n, 1) * frey_core::algebra::two_pow(k);
        prop_assume!(t != int(1));
        let a = classify(Signature::PprEven, r, &t, Mode::Printed).unwrap();
        let b = classify(Signature::PprEven, r, &(int(1) - &t), Mode::Printed).unwrap();
        prop_assert_eq!(a.exponent, b.exponent);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn change_law_over_q_t(
        q in prop::collection::vec(small_poly(1), 0..=2),
        p in prop::collection::vec(small_poly(1), 3..=4),
        [a, b, c, d] in prop::array::uniform4(-2i64..=2),
        e in prop_oneof![-2i64..=-1, 1i64..=2],
        shift in prop::collection::vec(small_poly(1), 0..=2),
    ) {
        let lift = |v: &[Poly<Rat>]| Poly::new(v.to_vec());
        let Ok(eq) = HyperEq::new(lift(&q), lift(&p), 1) else { return Ok(()); };
        let before = hyper_discriminant(&eq).unwrap();
        prop_assume!(!before.is_zero());
        let konst = |x: i64| Poly::constant(int(x));
        let Ok(m) = MobiusChange::new(konst(a), konst(b), konst(c), konst(d), konst(e), lift(&shift)) else { return Ok(()); };
        let (after, factor) = apply_change(&eq, &m).unwrap();
        prop_assert_eq!(hyper_discriminant(&after).unwrap(), &factor * &before);
    }

    #[test]
    fn root_count_matches_gcd(k in 1u32..=4, bits in prop::collection::vec(any::<u32>(), 2..=7)) {
        let field = Gf2k::standard(k).unwrap();
        let mask = (1u32 << k) - 1;
        let h = Poly::new(bits.iter().map(|b| field.elem(b & mask)).collect());
        prop_assume!(h.degree().is_some_and(|d| d >= 1));
        let x = Poly::x();
        let frob = &x.pow_mod(field.order(), &h) - &x;
        let g = h.gcd(&frob);
        prop_assert_eq!(roots_in_gf2k(&h, &field).len(), g.degree().unwrap());
    }

    #[test]
    fn fibers_match_brute_force(g in 1usize..=2, q in gf2_poly(3), p in gf2_poly(6)) {
        prop_assume!(q.deg_i64() <= g as i64 + 1 && p.deg_i64() <= 2 * g as i64 + 2);
        let Ok(fiber) = SpecialFiber::new(q, p, g) else { return Ok(()); };
        let Ok(m) = splitting_degree(&fiber) else { return Ok(()); };
        prop_assume!(m <= 8);
        let Ok(pts) = singular_points(&fiber) else { return Ok(()); };
        let field = Gf2k::standard(m).unwrap();
        let key = |patch: Patch, x: &Gf2kElem, y: &Gf2kElem| (patch, x.in_field(&field).bits(), y.in_field(&field).bits());
        let mut fast: Vec<_> = pts.iter().map(|pt| key(pt.patch, &pt.x, &pt.y)).collect();
        let mut slow: Vec<_> = brute_force_singular_points(&fiber, &field).unwrap().iter().map(|(pa, x, y)| key(*pa, x, y)).collect();
        fast.sort();
        slow.sort();
        prop_assert_eq!(fast, slow);
    }
}
