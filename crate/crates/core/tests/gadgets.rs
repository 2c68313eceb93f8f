//! Gadget realizations certified by exhaustive enumeration.

use std::collections::BTreeSet;

use paraug::oracle::{enumerate_augmentations_with, OracleBudget};
use paraug::reduction::gadgets::{
    basic_template, literal_template, polygon_template, Template, DECAGON_INPUTS, FOURTEEN_INPUTS,
    FOURTEEN_RED,
};
use paraug::reduction::{duplicate_faces, eulerize, recolor_all};
use paraug::{Augmentation, Edge, ParityColoring, PlaneGraph};

fn edge_sets(hs: &[Augmentation]) -> BTreeSet<BTreeSet<Edge>> {
    hs.iter()
        .map(|h| h.edges.iter().copied().collect())
        .collect()
}

fn set(es: impl IntoIterator<Item = Edge>) -> BTreeSet<Edge> {
    es.into_iter().collect()
}

#[test]
fn basic_gadget_has_two_states() {
    let (t, ids) = basic_template();
    let (g, col, region) = t.isolated().unwrap();
    assert_eq!(region.len(), 4);
    let hs = enumerate_augmentations_with(
        &g,
        &col,
        &region,
        &[ids.n, ids.e, ids.s, ids.w],
        &OracleBudget::default(),
    )
    .unwrap();
    assert_eq!(hs.len(), 2);
    let want = BTreeSet::from([set(ids.positive()), set(ids.negative())]);
    assert_eq!(edge_sets(&hs), want);
    // Positive leaves north and south open, negative east and west.
    let deg = |es: [Edge; 4], v: usize| es.iter().filter(|e| e.touches(v)).count();
    assert_eq!(
        (deg(ids.positive(), ids.n), deg(ids.positive(), ids.s)),
        (0, 0)
    );
    assert_eq!(
        (deg(ids.negative(), ids.e), deg(ids.negative(), ids.w)),
        (0, 0)
    );
}

#[test]
fn literal_gadget_has_two_states() {
    let (t, ids) = literal_template();
    let (g, col, region) = t.isolated().unwrap();
    let (o1, o2) = ids.outputs();
    let free = [o1, o2, ids.left(), ids.right()];
    let hs =
        enumerate_augmentations_with(&g, &col, &region, &free, &OracleBudget::default()).unwrap();
    assert_eq!(hs.len(), 2);
    let want = BTreeSet::from([set(ids.chords(true)), set(ids.chords(false))]);
    assert_eq!(edge_sets(&hs), want);
}

#[test]
fn wire_forces_one_pairing() {
    let mut t = Template::default();
    let p = t.vertex([0.0, 0.0], true, "basic");
    let q = t.vertex([4.0, 0.0], true, "basic");
    t.wire(p, q, [2.0, 1.0], [2.0, -1.0], "wire");
    let (g, col, region) = t.isolated().unwrap();
    let hs =
        enumerate_augmentations_with(&g, &col, &region, &[], &OracleBudget::default()).unwrap();
    assert_eq!(edge_sets(&hs), BTreeSet::from([set([Edge::new(p, q)])]));
}

/// Polygon with input ports recolored by whether the literal is true.
fn clause(
    red: &[bool],
    inputs: [(usize, usize); 3],
    mask: u32,
    true_port_red: bool,
) -> Vec<Augmentation> {
    let mut red = red.to_vec();
    for (i, &(a, b)) in inputs.iter().enumerate() {
        let on = mask >> i & 1 == 1;
        red[a] = on == true_port_red;
        red[b] = on == true_port_red;
    }
    let (t, _) = polygon_template(&red, "clause");
    let (g, col, region) = t.isolated().unwrap();
    assert_eq!(region.len(), 1);
    enumerate_augmentations_with(&g, &col, &region, &[], &OracleBudget::default()).unwrap()
}

fn is_matching(h: &Augmentation, n: usize) -> bool {
    h.degrees(n).iter().all(|&d| d <= 1)
}

#[test]
fn matching_clause_needs_a_true_input() {
    for mask in 0..8 {
        let hs: Vec<Augmentation> = clause(&FOURTEEN_RED, FOURTEEN_INPUTS, mask, true)
            .into_iter()
            .filter(|h| is_matching(h, 14))
            .collect();
        if mask == 0 {
            assert!(hs.is_empty(), "{:?}", edge_sets(&hs));
            continue;
        }
        let red = |v: usize| {
            FOURTEEN_RED[v]
                && FOURTEEN_INPUTS
                    .iter()
                    .enumerate()
                    .all(|(i, &(a, b))| (v != a && v != b) || mask >> i & 1 == 1)
        };
        let perfect = hs.iter().any(|h| {
            let d = h.degrees(14);
            (0..14).all(|v| d[v] == usize::from(red(v)))
        });
        assert!(perfect, "mask {mask}");
    }
}

#[test]
fn decagon_needs_a_true_input() {
    for mask in 0..8 {
        let hs = clause(&[true; 10], DECAGON_INPUTS, mask, false);
        assert_eq!(hs.is_empty(), mask == 0, "mask {mask}");
    }
}

fn square_with_diagonal() -> PlaneGraph {
    PlaneGraph::from_faces(4, &[vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 2, 1]]).unwrap()
}

#[test]
fn recolor_forces_two_chords() {
    let g = square_with_diagonal();
    let col = ParityColoring::from_red(4, [0, 2, 3]).unwrap();
    let t = recolor_all(&g, &col).unwrap();
    assert_eq!(t.added.len(), 3);
    assert_eq!(t.colors.red_count(), 7);
    let faces = t.graph.faces().unwrap();
    let region: Vec<usize> = (0..faces.len())
        .filter(|&i| faces[i].len() > 3 && faces[i].iter().any(|v| t.added.contains(v)))
        .collect();
    let free: Vec<usize> = vec![0, 2, 3];
    let hs = enumerate_augmentations_with(
        &t.graph,
        &t.colors,
        &region,
        &free,
        &OracleBudget::default(),
    )
    .unwrap();
    assert_eq!(edge_sets(&hs), BTreeSet::from([set(t.forced.clone())]));
    assert_eq!(set(t.forced), set([Edge::new(1, 4), Edge::new(5, 6)]));
}

#[test]
fn recolor_nests_in_one_triangle() {
    let g = PlaneGraph::from_faces(3, &[vec![0, 1, 2], vec![0, 2, 1]]).unwrap();
    let t = recolor_all(&g, &ParityColoring::all_blue(3)).unwrap();
    assert_eq!(t.added.len(), 9);
    assert_eq!(t.colors.red_count(), 12);
    let id = recolor_all(&g, &ParityColoring::all_red(3)).unwrap();
    assert!(id.added.is_empty() && id.graph.edges() == g.edges());
}

#[test]
fn doubled_edge_gadget_keeps_parities() {
    let g = PlaneGraph::from_faces(3, &[vec![0, 1, 2], vec![0, 2, 1]]).unwrap();
    let mut faces = vec![vec![0, 2, 1]];
    faces.extend(duplicate_faces(0, 1, 2, [3, 4, 5, 6, 7]));
    let h = PlaneGraph::from_faces(8, &faces).unwrap();
    assert_eq!(h.num_edges(), g.num_edges() + 14);
    for v in 3..8 {
        assert_eq!(h.degree(v) % 2, 0, "vertex {v}");
    }
    assert_eq!(h.degree(0) % 2, 1);
    assert_eq!(h.degree(1) % 2, 1);
    assert_eq!(h.degree(2) % 2, 0);
}

#[test]
fn eulerize_matches_colors() {
    let g = square_with_diagonal();
    // Already Eulerian-framed: odd-degree vertices are 0 and 2.
    let col = ParityColoring::from_red(4, [0, 2]).unwrap();
    let t = eulerize(&g, &col).unwrap();
    assert!(t.join.is_empty() && t.added.is_empty());
    let col = ParityColoring::from_red(4, [1, 3]).unwrap();
    let t = eulerize(&g, &col).unwrap();
    assert_eq!(t.graph.num_edges(), g.num_edges() + 14 * t.join.len());
    for v in 0..t.graph.n() {
        assert_eq!(t.colors.is_red(v), t.graph.degree(v) % 2 == 1);
    }
}
