mod common;

use bieberbach::finite::FiniteGroupError;
use bieberbach::{catalog, FiniteGroup};

use common::{finite_corpus, subgroups_by_subsets};

#[test]
fn subgroup_lattice_matches_subset_search() {
    for (name, g) in finite_corpus().iter().filter(|(_, g)| g.order() <= 16) {
        assert_eq!(
            g.all_subgroups().unwrap().len(),
            subgroups_by_subsets(g),
            "{name}"
        );
    }
}

#[test]
fn named_subgroup_counts() {
    let v4 = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
    assert_eq!(v4.all_subgroups().unwrap().len(), 5);
    assert_eq!(FiniteGroup::cyclic(4).all_subgroups().unwrap().len(), 3);
    assert_eq!(FiniteGroup::cyclic(1).all_subgroups().unwrap().len(), 1);
}

#[test]
fn sylow_orders() {
    for (name, g) in finite_corpus() {
        for p in g.prime_divisors() {
            let s = g.sylow_subgroup(p).unwrap();
            assert_eq!(s.order(), g.p_part(p), "{name} p={p}");
            assert!(g.subgroup_from_elements(s.elements()).is_ok());
        }
    }
}

#[test]
fn named_sylow_and_complements() {
    let s3 = FiniteGroup::semidirect_cyclic(3, 2, 2).unwrap();
    let p3 = s3.sylow_subgroup(3).unwrap();
    assert_eq!(p3.order(), 3);
    let p2 = s3.sylow_subgroup(2).unwrap();
    assert_eq!(s3.normal_complement(&p2).unwrap(), Some(p3));
    let z4 = FiniteGroup::cyclic(4);
    let whole = z4.sylow_subgroup(2).unwrap();
    assert_eq!(whole.order(), 4);
    assert_eq!(z4.normal_complement(&whole).unwrap().unwrap().order(), 1);
    let v4 = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
    assert_eq!(v4.sylow_subgroup(2).unwrap().order(), 4);
    for h in v4
        .all_subgroups()
        .unwrap()
        .iter()
        .filter(|h| h.order() == 2)
    {
        assert!(v4.has_normal_complement(h).unwrap());
    }
    assert_eq!(
        z4.sylow_subgroup(3),
        Err(FiniteGroupError::PrimeDoesNotDivide { p: 3, order: 4 })
    );
}

/// `is_primitive` raises when its two criteria disagree, so success across
/// the corpus is the agreement check.
#[test]
fn primitivity_criteria_agree() {
    let mut primitive = Vec::new();
    for (name, g) in finite_corpus() {
        if g.is_primitive().unwrap() {
            primitive.push(name);
        }
    }
    assert!(primitive.contains(&"Z/2 x Z/2".to_string()));
    assert!(primitive.contains(&"Q8".to_string()));
    assert!(!primitive
        .iter()
        .any(|n| n.starts_with("Z/") && !n.contains('x')));
}

#[test]
fn named_primitivity() {
    assert!(!FiniteGroup::cyclic(6).is_primitive().unwrap());
    assert!(!FiniteGroup::cyclic(1).is_primitive().unwrap());
    let v4 = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
    assert!(v4.is_primitive().unwrap());
    assert!(!FiniteGroup::semidirect_cyclic(3, 2, 2)
        .unwrap()
        .is_primitive()
        .unwrap());
}

#[test]
fn coprime_class_excludes_primitive() {
    for (name, g) in finite_corpus() {
        if g.order() > 1 && g.in_coprime_class().unwrap().is_some() {
            assert!(!g.is_primitive().unwrap(), "{name}");
        }
    }
}

#[test]
fn coprime_trees_are_coprime() {
    for (name, g) in finite_corpus() {
        if let Some(t) = g.in_coprime_class().unwrap() {
            let orders = t.factor_orders();
            assert_eq!(orders.iter().product::<usize>(), g.order(), "{name}");
            for (i, a) in orders.iter().enumerate() {
                for b in &orders[i + 1..] {
                    assert_eq!(num_integer::gcd(*a, *b), 1, "{name}");
                }
            }
        }
    }
}

#[test]
fn named_coprime_class() {
    use bieberbach::CoprimeTree;
    assert_eq!(
        FiniteGroup::cyclic(12).in_coprime_class().unwrap(),
        Some(CoprimeTree::Leaf { order: 12 })
    );
    let s3 = FiniteGroup::semidirect_cyclic(3, 2, 2).unwrap();
    assert_eq!(
        s3.in_coprime_class().unwrap(),
        Some(CoprimeTree::Node {
            normal: Box::new(CoprimeTree::Leaf { order: 3 }),
            complement_order: 2
        })
    );
    let v4 = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
    assert_eq!(v4.in_coprime_class().unwrap(), None);
}

#[test]
fn split_examples() {
    let s3 = FiniteGroup::semidirect_cyclic(3, 2, 2).unwrap();
    let k = s3.generate(&[1]);
    let c = s3.generate(&[3]);
    let r = s3.coprime_split_properties(&k, &c).unwrap();
    assert!(r.all_hold());
    assert!(r.checks.iter().any(|x| x.normal_order == 3));
    assert!(r.checks.iter().any(|x| x.normal_order == 1));

    let z6 = FiniteGroup::cyclic(6);
    let (k, c) = (z6.generate(&[2]), z6.generate(&[3]));
    let r = z6.coprime_split_properties(&k, &c).unwrap();
    assert!(r.checks.iter().any(|x| x.normal_order == 2));
    assert!(r.all_hold());

    let v4 = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
    let (k, c) = (v4.generate(&[1]), v4.generate(&[2]));
    assert!(matches!(
        v4.coprime_split_properties(&k, &c),
        Err(FiniteGroupError::PreconditionViolation(_))
    ));
}

#[test]
fn holonomy_groups_of_catalog() {
    assert_eq!(FiniteGroup::from_holonomy(&catalog::torus(2)).order(), 1);
    let hw = FiniteGroup::from_holonomy(&catalog::hantzsche_wendt());
    assert_eq!(hw.order(), 4);
    assert!((1..4).all(|g| hw.element_order(g) == 2));
    let c4 = FiniteGroup::from_holonomy(&catalog::get("dim3_c4").unwrap().group);
    assert!(c4.is_cyclic() && c4.order() == 4);
    assert_eq!(c4.matrices().unwrap().len(), 4);
}

#[test]
fn budget_enforced() {
    let g = FiniteGroup::cyclic(70);
    assert_eq!(
        g.all_subgroups(),
        Err(FiniteGroupError::OrderBudgetExceeded {
            order: 70,
            budget: 64
        })
    );
    assert!(g
        .clone()
        .with_order_budget(80)
        .in_coprime_class()
        .unwrap()
        .is_some());
}
