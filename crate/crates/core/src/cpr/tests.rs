use super::*;
use crate::perm::PermGroup;

#[test]
fn g1_triple_at_n10_has_degree_256_and_order_1024() {
    let t = build_cpr(CprFamily::G1, 10).unwrap();
    assert_eq!(t.degree(), 256);
    let p = build_g(1, 10).unwrap();
    assert!(verify_images(&p, &t.generators()).unwrap());
    let g = PermGroup::new(t.generators().to_vec()).unwrap();
    assert_eq!(g.order().unwrap(), 1024);
    assert!(g.is_transitive().unwrap());
    assert_eq!(g.stabilizer_order(0).unwrap(), 4);
}

#[test]
fn g2_commutator_relation_holds_pointwise() {
    // [(ab)^2, c] = (bc)^(2^(n-4)) at n = 10
    let t = build_cpr(CprFamily::G2, 10).unwrap();
    assert_eq!(t.degree(), 256);
    let ab2 = t.a.compose(&t.b).unwrap().pow(2);
    let lhs = ab2.commutator(&t.c).unwrap();
    let rhs = t.b.compose(&t.c).unwrap().pow(1 << 6);
    assert_eq!(lhs, rhs);
}

#[test]
fn g4_commutator_relation_holds_pointwise() {
    // [(ab)^2, (bc)^2] = (bc)^(2^(n-5)) at n = 10
    let t = build_cpr(CprFamily::G4, 10).unwrap();
    assert_eq!(t.degree(), 256);
    let ab2 = t.a.compose(&t.b).unwrap().pow(2);
    let bc2 = t.b.compose(&t.c).unwrap().pow(2);
    let lhs = ab2.commutator(&bc2).unwrap();
    let rhs = t.b.compose(&t.c).unwrap().pow(1 << 5);
    assert_eq!(lhs, rhs);
}

#[test]
fn a_commutes_with_c_in_every_family() {
    for (family, n) in [
        (CprFamily::G1, 8),
        (CprFamily::G2, 8),
        (CprFamily::G4, 9),
        (CprFamily::G6, 10),
        (CprFamily::G7, 10),
        (CprFamily::G8, 10),
    ] {
        let t = build_cpr(family, n).unwrap();
        assert_eq!(
            t.a.conjugate_by(&t.c).unwrap(),
            t.a,
            "{family:?} at n = {n}"
        );
    }
}

#[test]
fn floors_are_enforced() {
    assert!(build_cpr(CprFamily::G1, 7).is_ok());
    assert!(matches!(
        build_cpr(CprFamily::G1, 6),
        Err(CprError::ParameterBelowFloor { .. })
    ));
    assert!(build_cpr(CprFamily::G8, 9).is_err());
}

#[test]
fn identity_triple_gives_edgeless_graph() {
    let id = Permutation::identity(4);
    let t = CprTriple {
        a: id.clone(),
        b: id.clone(),
        c: id,
        family: CprFamily::G1,
        n: 7,
    };
    let g = to_graph(&t);
    assert_eq!(g.nvertices, 4);
    assert!(g.edges.is_empty());
}

#[test]
fn g1_graph_has_128_label1_edges() {
    // b is fixed-point-free of degree 256, so 128 transpositions
    let t = build_cpr(CprFamily::G1, 10).unwrap();
    let g = to_graph(&t);
    let label1 = g.edges.iter().filter(|&&(_, _, l)| l == 1).count();
    assert_eq!(label1, 128);
}

#[test]
fn g7_graph_label0_count_matches_the_a_formula() {
    // a contributes 8 transpositions per i-cell and t/16 cells
    let t = build_cpr(CprFamily::G7, 10).unwrap();
    let g = to_graph(&t);
    let label0 = g.edges.iter().filter(|&&(_, _, l)| l == 0).count();
    let tt = 1usize << (10 - 6);
    assert_eq!(label0, 8 * (tt / 16));
}

#[test]
fn every_vertex_has_at_most_one_edge_per_label() {
    let t = build_cpr(CprFamily::G6, 9).unwrap();
    let g = to_graph(&t);
    let mut seen = std::collections::HashSet::new();
    for &(u, v, l) in &g.edges {
        assert!(seen.insert((u, l)), "vertex {u} repeats label {l}");
        assert!(seen.insert((v, l)), "vertex {v} repeats label {l}");
    }
}

#[test]
fn dot_export_of_edgeless_graph() {
    let g = CprGraph {
        nvertices: 2,
        edges: vec![],
    };
    assert_eq!(export_dot(&g), "graph cpr {\n  v1;\n  v2;\n}\n");
}

#[test]
fn dot_export_prints_matching_edges() {
    let g = CprGraph {
        nvertices: 4,
        edges: vec![(0, 1, 0), (2, 3, 2)],
    };
    let dot = export_dot(&g);
    assert!(dot.contains("v1 -- v2 [label=0];"));
    assert!(dot.contains("v3 -- v4 [label=2];"));
}

#[test]
fn dot_round_trips_the_g1_graph() {
    let t = build_cpr(CprFamily::G1, 7).unwrap();
    let g = to_graph(&t);
    assert_eq!(g.nvertices, 32);
    let parsed = parse_dot(&export_dot(&g)).unwrap();
    assert_eq!(parsed, g);
}

#[test]
fn certificate_for_g1_at_n10_passes_every_check() {
    let t = build_cpr(CprFamily::G1, 10).unwrap();
    let cert = certify(&t).unwrap();
    assert!(cert.relations_ok);
    assert!(cert.transitive);
    assert!(cert.stabilizer0_order >= 4);
    assert_eq!(cert.order, 1024);
    assert_eq!(cert.schlafli, (4, 128));
    assert!(cert.intersection_ok);
    assert!(cert.passed);
}

#[test]
fn certificate_for_g8_at_n10() {
    let t = build_cpr(CprFamily::G8, 10).unwrap();
    let cert = certify(&t).unwrap();
    assert_eq!(cert.order, 1024);
    assert_eq!(cert.schlafli, (4, 32));
    assert!(cert.passed, "notes: {:?}", cert.notes);
}

#[test]
fn corrupting_the_triple_fails_the_relation_check() {
    let mut t = build_cpr(CprFamily::G1, 10).unwrap();
    // drop one transposition of b by swapping the pair back
    let cycles = t.b.cycles();
    let victim = &cycles[0];
    let fix = Permutation::from_transpositions(t.degree(), &[(victim[0], victim[1])]).unwrap();
    t.b = t.b.compose(&fix).unwrap();
    let cert = certify(&t).unwrap();
    assert!(!cert.relations_ok);
    assert!(!cert.passed);
}

#[test]
fn g1_triple_supports_the_quotient_chain_facts() {
    // inside the degree-256 triple of order 1024: the 64th power of the
    // rotation is a central involution, its closure has order 2, the
    // cyclic core of the rotation is nontrivial, and the quotient by the
    // central involution has order 512
    let t = build_cpr(CprFamily::G1, 10).unwrap();
    let g = PermGroup::new(t.generators().to_vec()).unwrap();
    let bc = t.b.compose(&t.c).unwrap();
    assert_eq!(bc.order(), 128);

    let z = bc.pow(64);
    let n = g.normal_closure(std::slice::from_ref(&z)).unwrap();
    assert_eq!(n.order().unwrap(), 2);

    let core = g.core_of_cyclic(&bc).unwrap();
    assert!(core.order().unwrap() >= 2, "cyclic core must be nontrivial");

    let q = g.quotient_action(&n).unwrap();
    assert_eq!(q.order().unwrap(), 512);
}

#[test]
fn g1_rotation_subgroup_has_256_elements() {
    // <b, c> is dihedral of order 2 * 128
    let t = build_cpr(CprFamily::G1, 10).unwrap();
    let elems =
        crate::perm::subgroup_elements(&[t.b.clone(), t.c.clone()], 1 << 16).unwrap();
    assert_eq!(elems.len(), 256);
}

#[test]
fn g1_derived_subgroup_matches_all_pairs_commutator_oracle() {
    // |G'| = 128 = 2^(n-3) at n = 10, against the closure of the
    // commutators of every element pair
    let t = build_cpr(CprFamily::G1, 10).unwrap();
    let g = PermGroup::new(t.generators().to_vec()).unwrap();
    let derived = g.derived_subgroup().unwrap();
    assert_eq!(derived.order().unwrap(), 128);

    let elems = crate::perm::subgroup_elements(&t.generators(), 1 << 12).unwrap();
    assert_eq!(elems.len(), 1024);
    let mut comm_set = std::collections::HashSet::new();
    for x in &elems {
        for y in &elems {
            comm_set.insert(x.commutator(y).unwrap());
        }
    }
    let seeds: Vec<Permutation> = comm_set.into_iter().filter(|c| !c.is_identity()).collect();
    let oracle = crate::perm::subgroup_elements(&seeds, 1 << 12).unwrap();
    assert_eq!(oracle.len(), 128);
}

#[test]
fn swapping_generators_breaks_the_relations() {
    let t = build_cpr(CprFamily::G1, 10).unwrap();
    let p = build_g(1, 10).unwrap();
    let swapped = [t.b.clone(), t.a.clone(), t.c.clone()];
    assert!(!verify_images(&p, &swapped).unwrap());
}

#[test]
fn certificates_hold_at_extended_parameters() {
    // beyond the ranges the acceptance gate pins down
    for (family, n) in [
        (CprFamily::G1, 13),
        (CprFamily::G2, 13),
        (CprFamily::G4, 13),
        (CprFamily::G6, 12),
        (CprFamily::G7, 12),
        (CprFamily::G8, 12),
    ] {
        let cert = certify(&build_cpr(family, n).unwrap()).unwrap();
        assert!(cert.passed, "{family:?}({n}) notes: {:?}", cert.notes);
        assert_eq!(cert.order, 1u64 << n);
    }
}
