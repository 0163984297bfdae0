//! Every family instance over a small grid must contract exactly to its
//! published minimal model.

use plumbing_core::catalog::{mnc_target_shape, Catalog, EnumBounds};
use plumbing_core::contraction::{morrow_audit, normalize};
use plumbing_core::dual_graph::{
    intersection_matrix, is_forest, is_negative_definite, orbit_audit,
};

#[test]
fn all_families_reach_their_targets_small_grid() {
    let catalog = Catalog::builtin();
    let bounds = EnumBounds {
        max_t: 1,
        max_t2: 1,
        max_m: 3,
        n_span: 1,
        twig_pool: plumbing_core::twig::admissible_twigs_up_to(6),
    };
    let mut failures = Vec::new();
    for index in catalog.indices() {
        let instances = catalog.enumerate_instances(index, &bounds, false).unwrap();
        assert!(!instances.is_empty(), "family {} has no instances", index);
        for inst in instances {
            if !is_forest(&inst.graph) {
                failures.push(format!("({}) {}: not a forest", index, inst.params));
                continue;
            }
            if !orbit_audit(&inst.graph).passed() {
                failures.push(format!("({}) {}: orbit audit failed", index, inst.params));
                continue;
            }
            let exceptional = inst.graph.exceptional_part();
            if !is_negative_definite(&intersection_matrix(&exceptional)) {
                failures.push(format!(
                    "({}) {}: exceptional part not negative definite",
                    index, inst.params
                ));
                continue;
            }
            let want = mnc_target_shape(inst.id, &inst.params).unwrap();
            match normalize(&inst.graph) {
                Ok((final_graph, _, shape)) => {
                    if shape != want {
                        failures.push(format!(
                            "({}) {}: normalized to {} instead of {}",
                            index, inst.params, shape, want
                        ));
                    } else if !morrow_audit(&final_graph).passed() {
                        failures.push(format!("({}) {}: morrow audit failed", index, inst.params));
                    }
                }
                Err(e) => failures.push(format!("({}) {}: {}", index, inst.params, e)),
            }
        }
    }
    assert!(
        failures.is_empty(),
        "{} failures:\n{}",
        failures.len(),
        failures.join("\n")
    );
}

#[test]
fn group_structure_of_exceptional_parts() {
    use plumbing_core::dual_graph::{as_linear_chain, connected_components};
    let catalog = Catalog::builtin();
    let bounds = EnumBounds {
        max_t: 1,
        max_t2: 1,
        max_m: 3,
        n_span: 1,
        twig_pool: plumbing_core::twig::admissible_twigs_up_to(6),
    };
    for index in catalog.indices() {
        for inst in catalog.enumerate_instances(index, &bounds, false).unwrap() {
            let comps = connected_components(&inst.graph.exceptional_part());
            if index <= 10 {
                // cyclic central point: every exceptional component is a chain
                for c in &comps {
                    assert!(
                        as_linear_chain(c).is_some(),
                        "({}) {}: branched exceptional component",
                        index,
                        inst.params
                    );
                }
            }
            if index >= 28 {
                // the central component carries a curve of weight <= -3
                let bullets = inst.graph.minus_one_vertices();
                let central = comps
                    .iter()
                    .find(|c| {
                        bullets.iter().all(|b| {
                            inst.graph
                                .neighbors(b)
                                .iter()
                                .any(|nb| c.contains_vertex(nb))
                        })
                    })
                    .expect("central component");
                assert!(
                    central
                        .vertex_ids()
                        .any(|v| central.weight(v).unwrap() <= -3),
                    "({}) {}: no deep curve in the central component",
                    index,
                    inst.params
                );
            }
        }
    }
}
