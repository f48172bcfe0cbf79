use frey_core::algebra::{int, rat, two_pow, v2, Rat};
use frey_core::fibers::{FiberType, PointKind};
use frey_core::local::WeightInterval;
use frey_core::pipelines::{
    field_of_definition, pipeline_35p, pipeline_odd_good_reduction, pipeline_ppr_even, Case35,
    DiscValuation, FieldOfDefinition, PprCase,
};

#[test]
fn ppr_even_node_counts() {
    for r in [3u32, 5, 7] {
        let i = WeightInterval::positive();
        let neg = pipeline_ppr_even(PprCase::VNeg, r, &i).unwrap();
        assert!(neg.is_good_reduction(), "r = {r}");
        assert!(neg.bookkeeping_holds);
        assert!(neg.notes.iter().any(|n| n.contains("printed closed-form")));

        let pos = pipeline_ppr_even(PprCase::VTPos, r, &i).unwrap();
        assert_eq!(
            pos.fiber_type,
            FiberType::Nodal {
                nodes: (r as usize).div_ceil(2)
            }
        );
        assert!(pos.points.iter().all(|p| p.kind == PointKind::Node));

        let one = pipeline_ppr_even(PprCase::V1mtPos, r, &i).unwrap();
        assert_eq!(
            one.fiber_type,
            FiberType::Nodal {
                nodes: (r as usize - 1) / 2
            }
        );
    }
}

#[test]
fn ppr_even_good_model_for_r5_matches_display() {
    let res = pipeline_ppr_even(
        PprCase::VNeg,
        5,
        &WeightInterval::open(int(0), int(3)).unwrap(),
    )
    .unwrap();
    assert_eq!(res.fiber.to_string(), "y^2 + x^3*y = x");
    assert_eq!(
        res.disc_valuation,
        DiscValuation::Exact(frey_core::local::AffineForm::constant(int(0)))
    );
    assert_eq!(res.field_of_definition, FieldOfDefinition::Ramified(5));
}

#[test]
fn h35_pipelines() {
    let t = pipeline_35p(Case35::VTPos).unwrap();
    assert!(t.is_good_reduction());
    assert_eq!(t.fiber.to_string(), "y^2 + y*(x^3 + 1) = 1");
    let s = pipeline_35p(Case35::V1mtPos).unwrap();
    assert!(s.is_good_reduction());
    assert_eq!(s.fiber.to_string(), "y^2 + x^3*y = x");
    let n = pipeline_35p(Case35::VNeg).unwrap();
    assert_eq!(n.fiber_type, FiberType::Nodal { nodes: 2 });
    for p in &n.points {
        assert_eq!(p.x.field().k(), 2);
        assert!(!p.x.is_prime_field());
    }
}

fn grid() -> Vec<(String, u32, Rat, Rat, bool)> {
    let mut out = Vec::new();
    for r in [3u32, 5, 7] {
        let g = (r - 1) / 2;
        for v in -9i64..=-4 {
            let t = two_pow(v) * int(3);
            let s = int(2) - int(4) * &t;
            out.push((
                format!("C_minus v={v}"),
                r,
                int(1),
                s,
                (v + 4).rem_euclid(r as i64) == 0,
            ));
        }
        for m in 4i64..=9 {
            for t in [two_pow(m) * int(5), int(1) + two_pow(m) * int(3)] {
                let z = &t * (&t - int(1));
                assert_eq!(v2(&z), Some(m));
                let s = frey_core::algebra::Domain::pow(&z, g as u64) * (int(2) * &t - int(1));
                out.push((
                    format!("H_rr m={m}"),
                    r,
                    z,
                    s,
                    (m - 4).rem_euclid(r as i64) == 0,
                ));
            }
        }
        for m in 6i64..=11 {
            let t = int(1) + two_pow(m) * int(7);
            let z = &t * (&t - int(1));
            let s = int(2)
                * frey_core::algebra::Domain::pow(&(&t - int(1)), g as u64)
                * frey_core::algebra::Domain::pow(&t, g as u64 + 1);
            out.push((
                format!("H_2r m={m}"),
                r,
                z,
                s,
                (m - 6).rem_euclid(r as i64) == 0,
            ));
        }
    }
    out
}

#[test]
fn good_reduction_grid() {
    for (name, r, z, s, congruence) in grid() {
        let res = pipeline_odd_good_reduction(&z, &s, r)
            .unwrap_or_else(|e| panic!("{name}, r = {r}: {e}"));
        assert!(res.is_good_reduction(), "{name}, r = {r}");
        assert!(res.bookkeeping_holds, "{name}, r = {r}");
        let base = field_of_definition(&z, &s, r).unwrap();
        assert_eq!(
            base,
            res.field_of_definition == FieldOfDefinition::Base,
            "{name}, r = {r}"
        );
        assert_eq!(base, congruence, "{name}, r = {r}");
    }
}

#[test]
fn hypothesis_example_from_rrp() {
    let t = int(16);
    let z = &t * (&t - int(1));
    let s = &z * (int(2) * &t - int(1));
    let res = pipeline_odd_good_reduction(&z, &s, 3).unwrap();
    assert!(res.is_good_reduction());
    assert_eq!(res.field_of_definition, FieldOfDefinition::Base);
    assert!(pipeline_odd_good_reduction(&int(0), &rat(7, 4), 3).is_err());
}
