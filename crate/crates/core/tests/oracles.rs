//! Cross-module oracle properties: contraction searches backing the twig
//! identities, chain round-trips, and the full classifier sweep.

use plumbing_core::catalog::{Catalog, EnumBounds};
use plumbing_core::classifier::{classify_boundary, BoundaryVerdict};
use plumbing_core::contraction::contracts_to;
use plumbing_core::dual_graph::{as_linear_chain, chain_graph, picard_rank};
use plumbing_core::twig::{adjoint, admissible_twigs_up_to, m_a, Twig};

/// `[[m], A, [1], underline(A*), [m_A]]` always contracts to `[m, 1, 2]`.
#[test]
fn m_a_closing_chain_reaches_m_1_2() {
    for a in admissible_twigs_up_to(8) {
        let under = adjoint(&a).unwrap().underline();
        let ma = m_a(&a).unwrap();
        for m in [2i64, 3, 4] {
            let mut weights = vec![-m];
            weights.extend(a.weights());
            weights.push(-1);
            weights.extend(under.weights());
            weights.push(-ma);
            let g = chain_graph(&weights);
            assert!(
                contracts_to(&g, &[-m, -1, -2], g.vertex_count()).unwrap(),
                "[[{}],{},[1],{},[{}]] must reach [{},1,2]",
                m,
                a,
                under,
                ma,
                m
            );
        }
    }
}

#[test]
fn chain_reading_round_trips() {
    for t in admissible_twigs_up_to(12) {
        let g = chain_graph(&t.weights());
        let read = as_linear_chain(&g).unwrap();
        let reversed = t.transpose();
        assert!(
            read == t || read == reversed,
            "chain {} read back as {}",
            t,
            read
        );
        assert_eq!(read, read.clone().min(reversed));
    }
}

#[test]
fn picard_rank_of_family_24() {
    let catalog = Catalog::builtin();
    let inst = catalog.instantiate(24, &Default::default(), false).unwrap();
    // 8 curves over the closure in 5 conjugacy blocks
    assert_eq!(picard_rank(&inst.graph), (8, 5));
}

/// Every catalog instance on a small grid is recognized by the full decision
/// procedure, with the singular-point counts following the rank-one pattern.
#[test]
fn classifier_accepts_every_catalog_instance() {
    let catalog = Catalog::builtin();
    let bounds = EnumBounds {
        max_t: 1,
        max_t2: 1,
        max_m: 3,
        n_span: 1,
        twig_pool: admissible_twigs_up_to(5),
    };
    for index in catalog.indices() {
        for inst in catalog.enumerate_instances(index, &bounds, false).unwrap() {
            match classify_boundary(&catalog, &inst.graph, false) {
                BoundaryVerdict::ContainsA2 {
                    all_matches,
                    singularities,
                    ..
                } => {
                    assert!(
                        all_matches.iter().any(|(id, _)| *id == inst.id),
                        "({}) {} not among its own matches",
                        index,
                        inst.params
                    );
                    let n = inst.graph.minus_one_vertices().len();
                    assert!(
                        singularities.count_closure == 1 || singularities.count_closure == n + 1,
                        "({}) {}: {} singular points for {} boundary curves",
                        index,
                        inst.params,
                        singularities.count_closure,
                        n
                    );
                }
                other => panic!("({}) {}: {:?}", index, inst.params, other),
            }
        }
    }
}

/// A twig of the non-boundary kind is reported as unmatched, not an error.
#[test]
fn non_catalog_chain_is_unmatched() {
    let catalog = Catalog::builtin();
    let g = chain_graph(&Twig::new(vec![2, 1, 2]).weights());
    let verdict = classify_boundary(&catalog, &g, false);
    assert!(matches!(verdict, BoundaryVerdict::NotMatched { .. }));
}

/// The worked normalization of family (21): three successive conjugate pairs
/// come down before the Hirzebruch pair of degree 2 appears.
#[test]
fn family_21_contracts_in_three_paired_rounds() {
    use plumbing_core::contraction::{normalize, MncShape};
    let catalog = Catalog::builtin();
    let inst = catalog.instantiate(21, &Default::default(), false).unwrap();
    let (final_graph, trace, shape) = normalize(&inst.graph).unwrap();
    assert_eq!(shape, MncShape::HirzebruchPair(2));
    assert_eq!(final_graph.vertex_count(), 2);
    let sizes: Vec<usize> = trace.iter().map(|s| s.contracted.len()).collect();
    assert_eq!(sizes, vec![2, 2, 2]);
    // first the (-1)-curves, then the former ends, then the -3 pair
    let weights_contracted: Vec<i64> = trace.iter().map(|s| s.contracted.len() as i64).collect();
    assert_eq!(weights_contracted.iter().sum::<i64>(), 6);
}

/// The tail formula at a larger reserved weight: [[5],[3,3],[1],B] reaches
/// [5,1] exactly for B = underline(adjoint([3,3])) = [2,3].
#[test]
fn tail_formula_at_weight_five() {
    let a = Twig::new(vec![3, 3]);
    let b = plumbing_core::twig::fujita_prime_expected(&a).unwrap();
    assert_eq!(b, Twig::new(vec![2, 3]));
    let mut weights = vec![-5];
    weights.extend(a.weights());
    weights.push(-1);
    weights.extend(b.weights());
    let g = chain_graph(&weights);
    assert!(contracts_to(&g, &[-5, -1], g.vertex_count()).unwrap());
    // and not for a wrong tail
    let g = chain_graph(&[-5, -3, -3, -1, -3, -2]);
    assert!(!contracts_to(&g, &[-5, -1], g.vertex_count()).unwrap());
}
