mod common;

use twistlab::algebra::Axiom;
use twistlab::catalog::{
    boolean2, build_spec, connected_rotation, disconnected_rotation, dp_chain, godel_chain, nm_chain, ordinal_sum,
    parse_spec, rigid_witness_c5, wajsberg_chain,
};
use twistlab::structure::{
    congruence_lattice, enumerate_subuniverses, enumerate_subuniverses_up_to_iso, exists_embedding,
    generated_subuniverse, is_isomorphic, is_rigid, is_simple, is_subdirectly_irreducible, is_tight_reduct, monolith,
    quotient, stiffk3_subalgebra,
};
use twistlab::term::profile_failure;
use twistlab::twist::{
    canonical_embedding, dense_elements, dp_upset_subalgebra, enumerate_admissible, enumerate_good_filters,
    enumerate_lattice_filters, enumerate_regular_filters, filter_subalgebra_heyting, filter_subalgebra_involutive,
    filter_subalgebra_stonean, find_self_fixed_element, minimal_admissible, minimal_admissible_algebra, negative_cone,
    ordinal_transfer, twist_product, wajsberg_admissible, LatticeFilter, PairIndexing,
};
use twistlab::varieties::{almost_minimal_in, si_factors, variety_leq};
use twistlab::{satisfies_profile, verify_algebra, FiniteAlgebra, Limits, Op, Profile};

fn limits() -> Limits {
    Limits::default()
}

fn iso(a: &FiniteAlgebra, b: &FiniteAlgebra) -> bool {
    is_isomorphic(a, b).is_some()
}

fn two_plus_l2() -> FiniteAlgebra {
    ordinal_sum(&boolean2(), &wajsberg_chain(2).unwrap()).unwrap()
}

#[test]
fn residuation_failure_has_a_witness() {
    let g = godel_chain(3).unwrap();
    let mut mul = g.table(Op::Mul).to_vec();
    mul[3 + 1] = 2;
    let bad = FiniteAlgebra::new(
        "bad",
        3,
        g.table(Op::Meet).to_vec(),
        g.table(Op::Join).to_vec(),
        mul,
        g.table(Op::Imp).to_vec(),
        2,
        Some(0),
    )
    .unwrap();
    let report = verify_algebra(&bad).unwrap();
    let w = report
        .check(Axiom::Residuation)
        .unwrap()
        .counterexample
        .clone()
        .expect("witness");
    let (x, y, z) = (w[0], w[1], w[2]);
    assert_ne!(bad.leq(bad.mul(x, y), z), bad.leq(x, bad.imp(y, z)));
    assert!(verify_algebra(&g).unwrap().passed_integral());
}

#[test]
fn pairs_of_k2_are_incomparable() {
    let k = twist_product(&boolean2()).unwrap();
    let p = PairIndexing::new(&boolean2());
    let (oo, ii) = (p.index(0, 0), p.index(1, 1));
    assert!(!k.leq(oo, ii) && !k.leq(ii, oo));
    assert_eq!(k.mul(oo, oo), k.zero().unwrap());
}

#[test]
fn profiles_on_named_chains() {
    let l2 = wajsberg_chain(2).unwrap();
    assert!(satisfies_profile(&l2, Profile::Mtl).unwrap());
    assert!(satisfies_profile(&l2, Profile::Involutive).unwrap());
    assert!(satisfies_profile(&two_plus_l2(), Profile::Stonean).unwrap());
    let (_, asg) = profile_failure(&l2, Profile::Stonean)
        .unwrap()
        .expect("L2 is not Stonean");
    assert_eq!(asg, vec![("x".to_string(), 1)]);
    assert!(satisfies_profile(&nm_chain(4).unwrap(), Profile::Nm).unwrap());
    assert!(satisfies_profile(&dp_chain(5).unwrap(), Profile::Dp).unwrap());
    assert!(satisfies_profile(&twist_product(&l2).unwrap(), Profile::Bkl).unwrap());
    assert!(satisfies_profile(&twist_product(&godel_chain(3).unwrap()).unwrap(), Profile::Kl).unwrap());
    assert!(satisfies_profile(&dp_chain(3).unwrap(), Profile::Involutive).unwrap());
    assert!(satisfies_profile(&godel_chain(5).unwrap(), Profile::Bl).unwrap());
}

#[test]
fn chain_identifications() {
    let two = boolean2();
    let l2 = wajsberg_chain(2).unwrap();
    assert!(iso(&godel_chain(3).unwrap(), &ordinal_sum(&two, &two).unwrap()));
    assert!(iso(&dp_chain(3).unwrap(), &l2));
    assert!(iso(&nm_chain(3).unwrap(), &l2));
    assert!(iso(&nm_chain(4).unwrap(), &disconnected_rotation(&two).unwrap()));
    assert!(iso(&connected_rotation(&two).unwrap(), &nm_chain(5).unwrap()));
    for k in 2..=7 {
        assert!(iso(
            &nm_chain(k).unwrap(),
            &twistlab::catalog::nm_chain_direct(k).unwrap()
        ));
    }
    let g4 = godel_chain(4).unwrap();
    assert_eq!(g4.imp(2, 1), 1);
    let n5 = nm_chain(5).unwrap();
    assert_eq!(n5.neg(2), 2);
    let dp4 = dp_chain(4).unwrap();
    let (a1, a2) = (twistlab::catalog::dp_element(4, 1), twistlab::catalog::dp_element(4, 2));
    assert_eq!(dp4.mul(a2, a1), 0);
    assert_eq!(dp4.imp(a1, a2), a1);
    for n in 2..=8 {
        assert!(verify_algebra(&dp_chain(n).unwrap()).unwrap().passed_integral());
    }
}

#[test]
fn two_plus_l2_is_a_four_element_stonean_bl_chain() {
    let a = two_plus_l2();
    assert_eq!(a.size(), 4);
    assert!(satisfies_profile(&a, Profile::Bl).unwrap());
    assert_eq!(dense_elements(&a).unwrap(), vec![1, 2, 3]);
}

#[test]
fn witness_c5_products() {
    let c = rigid_witness_c5();
    let (b, a2, a) = (1, 2, 3);
    assert_eq!(c.imp(a, 0), b);
    assert_eq!(c.mul(a, a), a2);
    assert_eq!(c.mul(a2, a), a2);
    assert_eq!(c.mul(a, b), 0);
    assert_eq!(congruence_lattice(&c, &limits()).unwrap().len(), 3);
    let mu = monolith(&c, &limits()).unwrap().unwrap();
    assert!(iso(&quotient(&c, &mu).unwrap().0, &boolean2()));
}

#[test]
fn dsl_names() {
    let k8 = build_spec(&parse_spec("K0(G3)").unwrap(), &limits()).unwrap();
    assert_eq!(k8.size(), 8);
    let n4 = build_spec(&parse_spec("drot(B2)").unwrap(), &limits()).unwrap();
    assert!(iso(&n4, &nm_chain(4).unwrap()));
}

#[test]
fn cones_and_embeddings() {
    let l2 = wajsberg_chain(2).unwrap();
    let (cone, _) = negative_cone(&twist_product(&l2).unwrap()).unwrap();
    assert!(iso(&cone, &l2));
    let k3 = common::k3();
    assert!(iso(&negative_cone(&k3).unwrap().0, &boolean2()));
    let e = canonical_embedding(&k3).unwrap();
    let p = PairIndexing::new(&boolean2());
    let mut image = e.map.clone();
    image.sort_unstable();
    assert_eq!(image, vec![p.index(0, 1), p.index(1, 0), p.index(1, 1)]);
    assert!(canonical_embedding(&twist_product(&godel_chain(3).unwrap()).unwrap())
        .unwrap()
        .is_surjective());
}

#[test]
fn minimal_admissibles() {
    assert_eq!(minimal_admissible(&boolean2()).unwrap().len(), 3);
    let g3 = godel_chain(3).unwrap();
    let m = minimal_admissible(&g3).unwrap();
    assert_eq!(m.len(), 8);
    assert!(!m.contains(PairIndexing::new(&g3).index(0, 0)));
    let s = two_plus_l2();
    let ms = minimal_admissible(&s).unwrap();
    assert_eq!(ms.len(), 15);
    assert!(!ms.contains(0));
    let k3 = minimal_admissible(&boolean2()).unwrap();
    assert_eq!(
        ordinal_transfer(&k3, &boolean2(), &wajsberg_chain(2).unwrap()).unwrap(),
        ms
    );
    let g2 = godel_chain(2).unwrap();
    assert_eq!(
        enumerate_admissible(&ordinal_sum(&boolean2(), &g2).unwrap(), &limits())
            .unwrap()
            .len(),
        enumerate_admissible(&boolean2(), &limits()).unwrap().len()
    );
}

#[test]
fn filter_characterizations() {
    let g3 = godel_chain(3).unwrap();
    assert_eq!(enumerate_regular_filters(&g3).unwrap().len(), 2);
    let upper = LatticeFilter::principal(&g3, 1).unwrap();
    assert_eq!(
        filter_subalgebra_heyting(&g3, &upper).unwrap(),
        minimal_admissible(&g3).unwrap()
    );
    let all = LatticeFilter::principal(&g3, 0).unwrap();
    assert_eq!(filter_subalgebra_heyting(&g3, &all).unwrap().len(), 9);
    let two = boolean2();
    let top = LatticeFilter::principal(&two, 1).unwrap();
    assert_eq!(filter_subalgebra_heyting(&two, &top).unwrap().len(), 3);

    let s = two_plus_l2();
    let good = enumerate_good_filters(&s).unwrap();
    assert_eq!(good.len(), 2);
    assert_eq!(enumerate_admissible(&s, &limits()).unwrap().len(), 2);
    let nonzero = LatticeFilter::principal(&s, 1).unwrap();
    let t = filter_subalgebra_stonean(&s, &nonzero).unwrap();
    assert_eq!(t.len(), 15);
    assert!(!t.contains(0));

    let l4 = wajsberg_chain(4).unwrap();
    let one = LatticeFilter::principal(&l4, 4).unwrap();
    assert_eq!(
        filter_subalgebra_involutive(&l4, &one).unwrap(),
        minimal_admissible(&l4).unwrap()
    );
    let k = twist_product(&l4).unwrap();
    for m in 0..=4 {
        let f = LatticeFilter::principal(&l4, 4 - m).unwrap();
        let s = filter_subalgebra_involutive(&l4, &f).unwrap().to_algebra(&k, "s");
        assert!(iso(&s, &wajsberg_admissible(m, 4).unwrap()));
    }
    assert_eq!(enumerate_lattice_filters(&l4).unwrap().len(), 5);
}

#[test]
fn dp_up_sets() {
    let dp4 = dp_chain(4).unwrap();
    assert_eq!(dp_upset_subalgebra(4, &[]).unwrap(), minimal_admissible(&dp4).unwrap());
    assert_eq!(dp_upset_subalgebra(5, &[]).unwrap().len(), 16);
}

#[test]
fn self_fixed_elements() {
    let two = boolean2();
    assert_eq!(
        find_self_fixed_element(&twist_product(&two).unwrap()).unwrap(),
        Some(PairIndexing::new(&two).index(0, 0))
    );
    assert_eq!(find_self_fixed_element(&common::k3()).unwrap(), None);
    assert_eq!(
        find_self_fixed_element(&minimal_admissible_algebra(&godel_chain(3).unwrap()).unwrap()).unwrap(),
        None
    );
}

#[test]
fn subuniverses() {
    let two = boolean2();
    let k2 = twist_product(&two).unwrap();
    let p = PairIndexing::new(&two);
    let s = generated_subuniverse(&k2, &[p.index(0, 1)]);
    assert_eq!(s.carrier(), &[p.index(0, 1), p.index(1, 0), p.index(1, 1)]);
    assert_eq!(generated_subuniverse(&wajsberg_chain(4).unwrap(), &[3]).len(), 5);
    assert_eq!(enumerate_subuniverses(&k2, &limits()).unwrap().len(), 2);
    let kg3 = twist_product(&godel_chain(3).unwrap()).unwrap();
    let mut sizes: Vec<usize> = enumerate_subuniverses_up_to_iso(&kg3, &limits())
        .unwrap()
        .iter()
        .map(|s| s.len())
        .collect();
    sizes.sort_unstable();
    assert_eq!(sizes, [3, 4, 8, 9]);
    assert_eq!(
        enumerate_subuniverses(&godel_chain(4).unwrap(), &limits())
            .unwrap()
            .len(),
        4
    );
}

#[test]
fn congruence_examples() {
    let l = limits();
    assert_eq!(congruence_lattice(&wajsberg_chain(2).unwrap(), &l).unwrap().len(), 2);
    let g3 = godel_chain(3).unwrap();
    assert_eq!(congruence_lattice(&g3, &l).unwrap().len(), 3);
    assert!(is_subdirectly_irreducible(&g3, &l).unwrap());
    let mu = monolith(&g3, &l).unwrap().unwrap();
    assert!(mu.related(1, 2));
    assert!(iso(&quotient(&g3, &mu).unwrap().0, &boolean2()));
    for n in 2..=6 {
        assert!(is_simple(&dp_chain(n).unwrap(), &l).unwrap());
    }
}

#[test]
fn embedding_examples() {
    let k4 = common::k4();
    assert!(exists_embedding(&k4, &wajsberg_admissible(1, 2).unwrap()).is_none());
    assert!(exists_embedding(&k4, &twist_product(&wajsberg_chain(2).unwrap()).unwrap()).is_some());
    assert!(is_isomorphic(&nm_chain(3).unwrap(), &wajsberg_chain(2).unwrap()).is_some());
}

#[test]
fn rigidity_examples() {
    let l = limits();
    assert!(is_tight_reduct(&wajsberg_chain(2).unwrap()).unwrap());
    assert!(!is_tight_reduct(&rigid_witness_c5()).unwrap());
    for a in [rigid_witness_c5(), godel_chain(3).unwrap()] {
        let k = twist_product(&a).unwrap();
        let b = stiffk3_subalgebra(&a, &l).unwrap();
        let eq_class: Vec<usize> = k.elements().filter(|x| !b.contains(*x)).collect();
        assert!(eq_class.contains(&0), "{}", a.name());
        let sub = b.to_algebra(&k, "B");
        let con = congruence_lattice(&sub, &l).unwrap();
        let proper: Vec<_> = con.iter().filter(|c| !c.is_identity() && !c.is_total()).collect();
        assert_eq!(proper.len(), 1, "{}", a.name());
        assert!(
            iso(&quotient(&sub, proper[0]).unwrap().0, &common::k3()),
            "{}",
            a.name()
        );
    }
}

#[test]
fn si_catalogs() {
    let l = limits();
    let mut c = si_factors(&[twist_product(&wajsberg_chain(4).unwrap()).unwrap()], &l).unwrap();
    assert_eq!(c.len(), 10);
    common::rename_all(&mut c, &common::wajsberg_names(&[2, 4]));
    let mut names: Vec<&str> = c.classes().iter().map(|c| c.name.as_str()).collect();
    names.sort_unstable();
    assert_eq!(
        names,
        ["K0,2", "K0,4", "K1,2", "K1,4", "K2,2", "K2,4", "K3", "K3,4", "K4", "K4,4"]
    );
    assert_eq!(si_factors(&[common::k4()], &l).unwrap().len(), 2);
}

#[test]
fn variety_inclusions() {
    let l = limits();
    let k3 = common::k3();
    for a in [
        boolean2(),
        godel_chain(4).unwrap(),
        nm_chain(5).unwrap(),
        rigid_witness_c5(),
        dp_chain(4).unwrap(),
    ] {
        assert!(
            variety_leq(&k3, &twist_product(&a).unwrap(), &l).unwrap(),
            "{}",
            a.name()
        );
    }
    let k8 = minimal_admissible_algebra(&godel_chain(3).unwrap()).unwrap();
    assert!(!variety_leq(&common::k4(), &k8, &l).unwrap());
    let kn4 = twist_product(&nm_chain(4).unwrap()).unwrap();
    let kn5 = twist_product(&nm_chain(5).unwrap()).unwrap();
    assert!(variety_leq(&kn4, &kn5, &l).unwrap());
}

#[test]
fn covers_of_k3_in_the_n5_lattice() {
    let lat = common::named_lattice(twist_product(&nm_chain(5).unwrap()).unwrap(), &common::n5_names());
    let k3 = lat.node_by_label("V(K3)").unwrap();
    let mut covers: Vec<&str> = lat
        .edges()
        .iter()
        .filter(|e| e.0 == k3)
        .map(|e| lat.nodes()[e.1].label.as_str())
        .collect();
    covers.sort_unstable();
    assert_eq!(covers, ["V(K0(L2))", "V(K0(N4))", "V(K4)"]);
}

#[test]
fn almost_minimal_iff_rigid() {
    let l = limits();
    let mut rigid_found = Vec::new();
    for a in common::battery(5).iter().filter(|a| a.size() > 1) {
        if !is_subdirectly_irreducible(a, &l).unwrap() {
            continue;
        }
        let catalog = si_factors(std::slice::from_ref(a), &l).unwrap();
        let own = catalog.find(a).unwrap();
        let almost = almost_minimal_in(&catalog)
            .iter()
            .any(|c| iso(&c.algebra, &catalog.classes()[own].algebra));
        let rigid = is_rigid(a, &l).unwrap();
        assert_eq!(almost, rigid, "{}", a.name());
        if rigid {
            rigid_found.push(a.clone());
        }
    }
    for want in [
        godel_chain(3).unwrap(),
        nm_chain(4).unwrap(),
        wajsberg_chain(2).unwrap(),
        rigid_witness_c5(),
    ] {
        assert!(rigid_found.iter().any(|r| iso(r, &want)), "{}", want.name());
    }
}
