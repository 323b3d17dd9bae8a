use super::*;
use crate::fp::{parse_presentation, todd_coxeter, DEFAULT_MAX_COSETS};

const CAP: usize = 1 << 16;

fn order_and_type(p: &Presentation) -> (u64, (u64, u64)) {
    let order = p.group_order(CAP).unwrap();
    let p1 = p
        .element_order(&p.relator("r0*r1").unwrap(), order, CAP)
        .unwrap();
    let p2 = p
        .element_order(&p.relator("r1*r2").unwrap(), order, CAP)
        .unwrap();
    (order, (p1, p2))
}

#[test]
fn h_10_2_7_matches_g1_10() {
    // excess n-s-t = 1 is odd, ninth relator carries exponent 2^0 = 1
    let h = build_h(10, 2, 7).unwrap();
    assert_eq!(order_and_type(&h), (1024, (4, 128)));
    let g1 = build_g(1, 10).unwrap();
    assert_eq!(order_and_type(&g1), (1024, (4, 128)));
}

#[test]
fn h_10_4_4_takes_the_even_branch() {
    let h = build_h(10, 4, 4).unwrap();
    assert_eq!(order_and_type(&h), (1024, (16, 16)));
}

#[test]
fn h_12_3_4_has_order_4096() {
    // excess 5 is odd, ninth relator exponent 2^2
    let h = build_h(12, 3, 4).unwrap();
    assert_eq!(order_and_type(&h), (4096, (8, 16)));
}

#[test]
fn h_rejects_hypothesis_violations() {
    assert!(matches!(build_h(10, 9, 9), Err(FamilyError::Constraint { .. })));
    assert!(matches!(build_h(10, 1, 7), Err(FamilyError::Constraint { .. })));
    assert!(matches!(build_h(9, 2, 6), Err(FamilyError::Constraint { .. })));
    assert!(build_h_relaxed(9, 2, 6).is_ok());
}

#[test]
fn g4_and_g7_orders_and_types() {
    assert_eq!(order_and_type(&build_g(4, 10).unwrap()), (1024, (4, 64)));
    assert_eq!(order_and_type(&build_g(7, 10).unwrap()), (1024, (4, 32)));
}

#[test]
fn g_floors_reject_small_n() {
    assert!(build_g(1, 4).is_err());
    assert!(build_g(1, 5).is_ok());
    assert!(build_g(4, 5).is_err());
    assert!(build_g(8, 6).is_err());
    assert!(build_g(8, 7).is_ok());
    assert!(build_g(9, 12).is_err());
}

#[test]
fn l_family_orders() {
    assert_eq!(build_l1().unwrap().group_order(CAP).unwrap(), 16);
    assert_eq!(build_l(2, 5).unwrap().group_order(CAP).unwrap(), 128);
    assert_eq!(build_l(3, 1).unwrap().group_order(CAP).unwrap(), 8);
    assert!(build_l(2, 0).is_err());
}

#[test]
fn m_family_orders() {
    assert_eq!(build_m(1, 1).unwrap().group_order(CAP).unwrap(), 16);
    assert_eq!(build_m(2, 2).unwrap().group_order(CAP).unwrap(), 32);
    assert_eq!(build_m(1, 4).unwrap().group_order(CAP).unwrap(), 256);
    assert!(build_m(1, 0).is_err());
}

#[test]
fn sporadic_orders_and_types() {
    assert_eq!(order_and_type(&build_sporadic(Sporadic::S8a)), (256, (4, 8)));
    assert_eq!(order_and_type(&build_sporadic(Sporadic::S8b)), (256, (4, 8)));
    assert_eq!(order_and_type(&build_sporadic(Sporadic::S9a)), (512, (4, 16)));
}

#[test]
fn s9b_left_normed_bracket_gives_the_claimed_group() {
    let p = build_s9b(BracketConvention::LeftNormed);
    assert_eq!(order_and_type(&p), (512, (4, 16)));
}

#[test]
fn family_spec_strings_round_trip() {
    for spec in [
        "H:n=12,s=3,t=4",
        "G1:n=10",
        "G8:n=11",
        "L1",
        "L2:t=5",
        "M2:b=3",
        "S9b",
    ] {
        let id: FamilyId = spec.parse().unwrap();
        assert_eq!(id.to_string(), spec);
        id.build().unwrap();
    }
}

#[test]
fn family_spec_rejects_garbage() {
    assert!("G9:n=10".parse::<FamilyId>().is_err());
    assert!("G1".parse::<FamilyId>().is_err());
    assert!("H:n=10".parse::<FamilyId>().is_err());
    assert!("Q:n=10".parse::<FamilyId>().is_err());
    assert!("M1:b=x".parse::<FamilyId>().is_err());
}

#[test]
fn built_presentations_round_trip_through_text() {
    let samples = [
        build_h(10, 2, 7).unwrap(),
        build_h(10, 4, 4).unwrap(),
        build_g(2, 10).unwrap(),
        build_g(6, 10).unwrap(),
        build_m(2, 3).unwrap(),
        build_sporadic(Sporadic::S8b),
        build_sporadic(Sporadic::S9b),
    ];
    for p in samples {
        let back = parse_presentation(&p.to_text()).unwrap();
        assert_eq!(p, back);
    }
}

#[test]
fn doubling_the_exponent_parameter_doubles_the_rotation_order() {
    // exponent law at desk scale: (i, n) against (i, n+1)
    for (i, ns) in [(1u8, [7u32, 8]), (4, [8, 9]), (7, [10, 11])] {
        for n in ns {
            let (o1, (_, r1)) = order_and_type(&build_g(i, n).unwrap());
            let (o2, (_, r2)) = order_and_type(&build_g(i, n + 1).unwrap());
            assert_eq!(o2, 2 * o1, "G{i} order step at n = {n}");
            assert_eq!(r2, 2 * r1, "G{i} rotation step at n = {n}");
        }
    }
}

#[test]
fn expected_order_matches_enumeration_for_small_instances() {
    let ids = [
        FamilyId::G { i: 3, n: 8 },
        FamilyId::L { i: 2, t: 3 },
        FamilyId::M { i: 2, b: 4 },
        FamilyId::Sporadic(Sporadic::S8a),
    ];
    for id in ids {
        let p = id.build().unwrap();
        let t = todd_coxeter(&p, &[], DEFAULT_MAX_COSETS).unwrap();
        assert_eq!(Some(t.num_cosets() as u64), id.expected_order(), "{id}");
    }
}
