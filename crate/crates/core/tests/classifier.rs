use frey_core::algebra::{int, rat};
use frey_core::classifier::{classify, cross_validate, Exponent, InertialType, Mode, Signature};
use frey_core::Error;

#[test]
fn cross_validation_agrees_on_covered_examples() {
    let x = cross_validate(Signature::PprEven, 3, &rat(1, 8)).unwrap();
    assert!(x.agree);
    assert_eq!(x.oracle_exponent, 0);
    let x = cross_validate(Signature::Rrp, 3, &int(16)).unwrap();
    assert!(x.agree);
    assert_eq!(x.printed.exponent, Exponent::Value(0));
    let x = cross_validate(Signature::P35, 5, &rat(-1, 4)).unwrap();
    assert!(x.agree);
    assert_eq!(x.oracle_exponent, 1);
}

#[test]
fn ppr_odd_conflict_is_reported() {
    let x = cross_validate(Signature::PprOdd, 3, &rat(3, 16)).unwrap();
    assert!(!x.agree);
    assert_eq!(x.printed.exponent, Exponent::Value(2));
    assert_eq!(x.corrected.exponent, Exponent::Value(0));
    assert_eq!(x.oracle_exponent, 0);
}

#[test]
fn uncovered_and_degenerate_inputs() {
    let c = classify(Signature::Rrp, 3, &int(6), Mode::Printed).unwrap();
    assert_eq!(c.exponent, Exponent::NotCovered);
    assert!(matches!(
        cross_validate(Signature::Rrp, 3, &int(6)),
        Err(Error::NotCovered(_))
    ));
    assert!(matches!(
        classify(Signature::P35, 0, &int(1), Mode::Printed),
        Err(Error::DegenerateParameter(_))
    ));
    assert!(matches!(
        classify(Signature::PprEven, 9, &int(3), Mode::Printed),
        Err(Error::NotOddPrime(9))
    ));
}

#[test]
fn inertial_annotations() {
    let c = classify(Signature::PprEven, 5, &rat(1, 2), Mode::Printed).unwrap();
    assert_eq!(c.exponent, Exponent::Value(2));
    assert_eq!(c.inertial_type, Some(InertialType::Supercuspidal));
    let c = classify(Signature::PprEven, 7, &rat(1, 2), Mode::Printed).unwrap();
    assert_eq!(c.inertial_type, Some(InertialType::PrincipalSeries));
    let c = classify(Signature::PprEven, 3, &rat(1, 2), Mode::Printed).unwrap();
    assert_eq!(c.inertial_type, Some(InertialType::Supercuspidal));
    let c = classify(Signature::PprEven, 3, &int(2), Mode::Printed).unwrap();
    assert_eq!(c.inertial_type, Some(InertialType::Toric));
}
