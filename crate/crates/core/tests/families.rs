use frey_core::algebra::{int, two_pow};
use frey_core::families::{
    true_disc_t, verify_closed_form_disc, verify_czs_disc_at_unit_z, verify_h_disc_via_czs,
    verify_identities, FamilyId,
};

#[test]
fn unit_z_shortcut_agrees_with_direct() {
    for r in [3u32, 5, 7] {
        let direct = verify_closed_form_disc(FamilyId::Czs, r).unwrap();
        let fast = verify_czs_disc_at_unit_z(r).unwrap();
        assert!(direct.matches && fast.matches, "r = {r}");
    }
}

#[test]
fn h_families_via_czs_agree_with_direct() {
    for r in [3u32, 5, 7] {
        for family in [FamilyId::Hrr, FamilyId::H2r] {
            let direct = verify_closed_form_disc(family, r).unwrap();
            let via = verify_h_disc_via_czs(family, r).unwrap();
            assert!(direct.matches, "{family}, r = {r}");
            assert!(via.matches, "{family}, r = {r}");
            assert_eq!(via.direct, direct.direct);
        }
    }
}

#[test]
fn larger_r_via_shortcuts() {
    for r in [11u32, 13] {
        assert!(verify_czs_disc_at_unit_z(r).unwrap().matches);
        assert!(verify_h_disc_via_czs(FamilyId::Hrr, r).unwrap().matches);
        assert!(verify_h_disc_via_czs(FamilyId::H2r, r).unwrap().matches);
    }
}

#[test]
fn c_plus_power_of_two() {
    for r in [3u32, 5, 7] {
        let rep = verify_closed_form_disc(FamilyId::CPlus, r).unwrap();
        assert!(!rep.matches);
        assert_eq!(rep.ratio, Some(two_pow(2 * r as i64 - 2)));
        assert_eq!(
            rep.direct,
            true_disc_t(FamilyId::CPlus, r).unwrap().to_string_in("t")
        );
    }
    assert_eq!(
        verify_closed_form_disc(FamilyId::H35, 5).unwrap().ratio,
        Some(int(1))
    );
}

#[test]
fn minus_square_factor_is_h() {
    for r in [3u32, 5, 7, 11] {
        let id = verify_identities(r).unwrap();
        assert!(id.minus_factor_is_h);
        assert!(!id.minus_printed_holds);
        assert_eq!(id.minus_square_factor, id.h);
    }
}
