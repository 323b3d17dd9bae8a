use super::*;

fn cyc(degree: usize, cycles: &[&[u32]]) -> Permutation {
    let owned: Vec<Vec<u32>> = cycles.iter().map(|c| c.to_vec()).collect();
    Permutation::from_cycles(degree, &owned).unwrap()
}

/// Test-side closure oracle: plain hash-set product closure, no chains.
fn closure_oracle(gens: &[Permutation], cap: usize) -> Vec<Permutation> {
    let degree = gens[0].degree();
    let mut seen = std::collections::HashSet::new();
    let mut queue = vec![Permutation::identity(degree)];
    seen.insert(queue[0].clone());
    while let Some(x) = queue.pop() {
        for g in gens {
            let y = x.compose(g).unwrap();
            if seen.insert(y.clone()) {
                assert!(seen.len() <= cap, "oracle closure exceeded {cap}");
                queue.push(y);
            }
        }
    }
    seen.into_iter().collect()
}

fn all_tables(n: usize) -> Vec<Vec<u32>> {
    fn rec(prefix: &mut Vec<u32>, used: &mut [bool], n: usize, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 0..n as u32 {
            if !used[v as usize] {
                used[v as usize] = true;
                prefix.push(v);
                rec(prefix, used, n, out);
                prefix.pop();
                used[v as usize] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], n, &mut out);
    out
}

#[test]
fn compose_identity_is_neutral() {
    let p = cyc(5, &[&[0, 3, 1]]);
    let id = Permutation::identity(5);
    assert_eq!(id.compose(&p).unwrap(), p);
    assert_eq!(p.compose(&id).unwrap(), p);
}

#[test]
fn compose_involution_squares_to_identity() {
    let t = cyc(2, &[&[0, 1]]);
    assert!(t.compose(&t).unwrap().is_identity());
}

#[test]
fn compose_matches_exhaustive_table_check() {
    // (0 1 2) then (0 1): the expected product is the unique element of S3
    // mapping every point the same way, found by scanning all 3! tables.
    let p = cyc(3, &[&[0, 1, 2]]);
    let q = cyc(3, &[&[0, 1]]);
    let got = p.compose(&q).unwrap();
    let expected: Vec<Vec<u32>> = all_tables(3)
        .into_iter()
        .filter(|table| (0..3u32).all(|x| table[x as usize] == q.image_of(p.image_of(x))))
        .collect();
    assert_eq!(expected.len(), 1);
    assert_eq!(got.images(), expected[0].as_slice());
}

#[test]
fn compose_rejects_degree_mismatch() {
    let p = Permutation::identity(3);
    let q = Permutation::identity(4);
    assert_eq!(
        p.compose(&q),
        Err(PermError::DegreeMismatch { left: 3, right: 4 })
    );
}

#[test]
fn from_images_rejects_non_bijections() {
    assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
    assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
    assert!(Permutation::from_images(vec![]).is_err());
}

#[test]
fn from_transpositions_rejects_repeated_points() {
    assert!(Permutation::from_transpositions(4, &[(0, 1), (1, 2)]).is_err());
    assert!(Permutation::from_transpositions(4, &[(0, 4)]).is_err());
}

#[test]
fn order_of_identity_is_one() {
    assert_eq!(Permutation::identity(7).order(), 1);
}

#[test]
fn order_is_lcm_of_cycle_lengths() {
    let p = cyc(5, &[&[0, 1], &[2, 3, 4]]);
    assert_eq!(p.order(), 6);
}

#[test]
fn order_matches_repeated_composition() {
    // fixed degree-12 permutation; oracle iterates products until identity
    let p = Permutation::from_images(vec![3, 7, 0, 11, 5, 4, 9, 2, 10, 6, 8, 1]).unwrap();
    let mut k = 1u64;
    let mut acc = p.clone();
    while !acc.is_identity() {
        acc = acc.compose(&p).unwrap();
        k += 1;
    }
    assert_eq!(p.order(), k);
}

#[test]
fn group_order_cyclic_two() {
    let g = PermGroup::new(vec![cyc(2, &[&[0, 1]])]).unwrap();
    assert_eq!(g.order().unwrap(), 2);
}

#[test]
fn group_order_dihedral_matches_closure_oracle() {
    // NB: an adjacent transposition next to a 4-cycle would generate all of
    // S4; the diagonal reflection (1 3) gives the dihedral group of order 8.
    let gens = vec![cyc(4, &[&[1, 3]]), cyc(4, &[&[0, 1, 2, 3]])];
    let oracle = closure_oracle(&gens, 1 << 10).len() as u64;
    assert_eq!(oracle, 8);
    let g = PermGroup::new(gens).unwrap();
    assert_eq!(g.order().unwrap(), oracle);
}

#[test]
fn transitivity_examples() {
    let four_cycle = PermGroup::new(vec![cyc(4, &[&[0, 1, 2, 3]])]).unwrap();
    assert!(four_cycle.is_transitive().unwrap());
    let swap = PermGroup::new(vec![cyc(3, &[&[0, 1]])]).unwrap();
    assert!(!swap.is_transitive().unwrap());
}

#[test]
fn stabilizer_order_of_identity_group() {
    let g = PermGroup::trivial(5);
    assert_eq!(g.stabilizer_order(2).unwrap(), 1);
}

#[test]
fn stabilizer_order_matches_element_enumeration() {
    let gens = vec![cyc(4, &[&[0, 1]]), cyc(4, &[&[2, 3]])];
    let elems = closure_oracle(&gens, 16);
    let fixing_zero = elems.iter().filter(|p| p.image_of(0) == 0).count() as u64;
    assert_eq!(fixing_zero, 2);
    let g = PermGroup::new(gens).unwrap();
    assert_eq!(g.stabilizer_order(0).unwrap(), fixing_zero);
    assert!(g.stabilizer_order(7).is_err());
}

#[test]
fn subgroup_elements_identity_only() {
    let elems = subgroup_elements(&[Permutation::identity(3)], 10).unwrap();
    assert_eq!(elems, vec![Permutation::identity(3)]);
}

#[test]
fn subgroup_elements_two_commuting_transpositions() {
    let elems = subgroup_elements(&[cyc(4, &[&[0, 1]]), cyc(4, &[&[2, 3]])], 10).unwrap();
    assert_eq!(elems.len(), 4);
}

#[test]
fn subgroup_elements_cap_is_enforced() {
    let err = subgroup_elements(&[cyc(5, &[&[0, 1, 2, 3, 4]])], 3).unwrap_err();
    assert_eq!(err, PermError::ClosureCapExceeded { cap: 3 });
}

#[test]
fn derived_subgroup_of_abelian_group_is_trivial() {
    let g = PermGroup::new(vec![cyc(4, &[&[0, 1]]), cyc(4, &[&[2, 3]])]).unwrap();
    assert_eq!(g.derived_subgroup().unwrap().order().unwrap(), 1);
}

#[test]
fn derived_subgroup_of_dihedral_matches_commutator_oracle() {
    let gens = vec![cyc(4, &[&[1, 3]]), cyc(4, &[&[0, 1], &[2, 3]])];
    let g = PermGroup::new(gens.clone()).unwrap();
    assert_eq!(g.order().unwrap(), 8);
    // oracle: closure of the set of all commutators of all element pairs
    let elems = closure_oracle(&gens, 8);
    let mut comms = Vec::new();
    for x in &elems {
        for y in &elems {
            let c = x.commutator(y).unwrap();
            if !c.is_identity() {
                comms.push(c);
            }
        }
    }
    let oracle = closure_oracle(&comms, 8).len() as u64;
    assert_eq!(oracle, 2);
    assert_eq!(g.derived_subgroup().unwrap().order().unwrap(), oracle);
}

#[test]
fn normal_closure_of_identity_is_trivial() {
    let g = PermGroup::new(vec![cyc(4, &[&[1, 3]]), cyc(4, &[&[0, 1, 2, 3]])]).unwrap();
    let n = g.normal_closure(&[Permutation::identity(4)]).unwrap();
    assert_eq!(n.order().unwrap(), 1);
}

#[test]
fn normal_closure_of_central_element_is_the_cyclic_group_it_generates() {
    // (0 2)(1 3) is central in the dihedral group of order 8
    let g = PermGroup::new(vec![cyc(4, &[&[1, 3]]), cyc(4, &[&[0, 1, 2, 3]])]).unwrap();
    let z = cyc(4, &[&[0, 2], &[1, 3]]);
    let n = g.normal_closure(std::slice::from_ref(&z)).unwrap();
    assert_eq!(n.order().unwrap(), 2);
    assert!(n.contains(&z).unwrap());
}

#[test]
fn normal_closure_rejects_foreign_seeds() {
    let g = PermGroup::new(vec![cyc(4, &[&[0, 1]])]).unwrap();
    let err = g.normal_closure(&[cyc(4, &[&[2, 3]])]).unwrap_err();
    assert_eq!(err, PermError::SeedNotInGroup { index: 0 });
}

#[test]
fn normal_closure_generators_stay_normal() {
    let g = PermGroup::new(vec![cyc(4, &[&[0, 1]]), cyc(4, &[&[0, 1, 2, 3]])]).unwrap();
    let n = g.normal_closure(&[cyc(4, &[&[0, 2], &[1, 3]])]).unwrap();
    for x in n.generators() {
        for h in g.generators() {
            assert!(n.contains(&x.conjugate_by(h).unwrap()).unwrap());
        }
    }
}

#[test]
fn core_of_central_element_is_whole_cyclic_group() {
    let g = PermGroup::new(vec![cyc(4, &[&[1, 3]]), cyc(4, &[&[0, 1, 2, 3]])]).unwrap();
    let z = cyc(4, &[&[0, 2], &[1, 3]]);
    let core = g.core_of_cyclic(&z).unwrap();
    assert_eq!(core.order().unwrap(), 2);
}

#[test]
fn core_of_non_normal_transposition_is_trivial() {
    // S3 on 3 points; a 2-cycle is self-conjugate only under itself
    let g = PermGroup::new(vec![cyc(3, &[&[0, 1]]), cyc(3, &[&[0, 1, 2]])]).unwrap();
    let x = cyc(3, &[&[0, 1]]);
    // oracle: enumerate conjugates of <x> and intersect by hand
    let elems = closure_oracle(g.generators(), 6);
    let mut common: Vec<Permutation> = closure_oracle(std::slice::from_ref(&x), 2);
    common.sort_unstable();
    for e in &elems {
        let mut conj: Vec<Permutation> = common
            .iter()
            .map(|k| k.conjugate_by(e).unwrap())
            .collect();
        conj.sort_unstable();
        common.retain(|k| conj.binary_search(k).is_ok());
    }
    assert_eq!(common.len(), 1);
    assert_eq!(g.core_of_cyclic(&x).unwrap().order().unwrap(), 1);
}

#[test]
fn quotient_by_trivial_subgroup_preserves_order() {
    let g = PermGroup::new(vec![cyc(4, &[&[1, 3]]), cyc(4, &[&[0, 1, 2, 3]])]).unwrap();
    let q = g.quotient_action(&PermGroup::trivial(4)).unwrap();
    assert_eq!(q.degree(), 8);
    assert_eq!(q.order().unwrap(), 8);
    assert_eq!(q.generators().len(), g.generators().len());
}

#[test]
fn quotient_of_dihedral_by_center_has_order_four() {
    let g = PermGroup::new(vec![cyc(4, &[&[1, 3]]), cyc(4, &[&[0, 1, 2, 3]])]).unwrap();
    let center = PermGroup::new(vec![cyc(4, &[&[0, 2], &[1, 3]])]).unwrap();
    // oracle: brute-force right-coset table of the center
    let elems = closure_oracle(g.generators(), 8);
    let z = center.generators()[0].clone();
    let mut cosets: Vec<Vec<Permutation>> = Vec::new();
    for e in &elems {
        let pair = {
            let mut v = vec![e.clone(), z.compose(e).unwrap()];
            v.sort_unstable();
            v
        };
        if !cosets.contains(&pair) {
            cosets.push(pair);
        }
    }
    assert_eq!(cosets.len(), 4);
    let q = g.quotient_action(&center).unwrap();
    assert_eq!(q.order().unwrap(), cosets.len() as u64);
}

#[test]
fn quotient_action_rejects_non_normal_subgroups() {
    let g = PermGroup::new(vec![cyc(3, &[&[0, 1]]), cyc(3, &[&[0, 1, 2]])]).unwrap();
    let h = PermGroup::new(vec![cyc(3, &[&[0, 1]])]).unwrap();
    assert!(matches!(
        g.quotient_action(&h),
        Err(PermError::NotNormal { .. })
    ));
}

#[test]
fn permutation_json_round_trip() {
    let p = cyc(4, &[&[0, 2, 1]]);
    let json = serde_json::to_string(&p).unwrap();
    assert_eq!(json, r#"{"degree":4,"images":[2,0,1,3]}"#);
    let back: Permutation = serde_json::from_str(&json).unwrap();
    assert_eq!(back, p);
}

#[test]
fn bsgs_handles_duplicate_and_identity_generators() {
    let g = PermGroup::new(vec![
        Permutation::identity(4),
        cyc(4, &[&[0, 1]]),
        cyc(4, &[&[0, 1]]),
    ])
    .unwrap();
    assert_eq!(g.order().unwrap(), 2);
    assert_eq!(g.generators().len(), 3);
}
