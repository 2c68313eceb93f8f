use paraug::reduction::{
    assignment_to_augmentation, compile, example_formula, three_connectivity_check, Variant,
};
use paraug::verify_plane_augmentation;

fn assignments(n: usize) -> impl Iterator<Item = Vec<bool>> {
    (0..1u32 << n).map(move |m| (0..n).map(|i| m >> i & 1 == 1).collect())
}

#[test]
fn example_compiles_in_every_variant() {
    let phi = example_formula();
    for v in Variant::ALL {
        let inst = compile(&phi, v).unwrap_or_else(|e| panic!("{v}: {e}"));
        let g = &inst.graph;
        let f = g.faces().unwrap().len();
        assert_eq!(g.n() + f, g.num_edges() + 2, "{v}: Euler");
        assert!(g.is_connected(), "{v}");
        println!(
            "{v}: n={} m={} red={}",
            g.n(),
            g.num_edges(),
            inst.colors.red_count()
        );
    }
}

#[test]
fn satisfying_assignments_give_valid_augmentations() {
    let phi = example_formula();
    for v in Variant::ALL {
        let inst = compile(&phi, v).unwrap();
        for a in assignments(phi.num_vars) {
            let h = assignment_to_augmentation(&inst, &a).unwrap();
            match h {
                None => assert!(!phi.evaluate(&a)),
                Some(h) => {
                    let verdict = verify_plane_augmentation(&inst.graph, &inst.colors, &h).unwrap();
                    assert!(verdict.is_valid(), "{v} {a:?}: {verdict:?}");
                    if v.is_matching() {
                        assert!(
                            h.degrees(inst.graph.n()).iter().all(|&d| d <= 1),
                            "{v} {a:?}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn decision_graph_is_three_connected() {
    let inst = compile(&example_formula(), Variant::Decision).unwrap();
    assert!(three_connectivity_check(&inst.graph));
}

#[test]
fn single_clause_is_padded_and_compiles() {
    let phi = paraug::reduction::Cnf3Instance::parse("p cnf 1 1\n1 0\n").unwrap();
    assert_eq!(phi.clauses, vec![[1, 1, 1]]);
    for v in Variant::ALL {
        let inst = compile(&phi, v).unwrap();
        let h = assignment_to_augmentation(&inst, &[true])
            .unwrap()
            .expect("x = T satisfies");
        assert!(
            verify_plane_augmentation(&inst.graph, &inst.colors, &h)
                .unwrap()
                .is_valid(),
            "{v}"
        );
        assert!(assignment_to_augmentation(&inst, &[false])
            .unwrap()
            .is_none());
    }
}

#[test]
fn variants_have_their_colorings() {
    let phi = example_formula();
    for v in Variant::ALL {
        let inst = compile(&phi, v).unwrap();
        let g = &inst.graph;
        match v {
            Variant::AllRed | Variant::MatchingAllRed => assert_eq!(inst.colors.red_count(), g.n()),
            Variant::Eulerian | Variant::MatchingEulerian => {
                for x in 0..g.n() {
                    assert_eq!(
                        inst.colors.is_red(x),
                        g.degree(x) % 2 == 1,
                        "{v} vertex {x}"
                    );
                }
            }
            _ => {}
        }
        // The conversion gadgets add degree-two vertices.
        if matches!(v, Variant::Decision | Variant::Matching) {
            assert!(three_connectivity_check(g), "{v}");
        }
    }
}
