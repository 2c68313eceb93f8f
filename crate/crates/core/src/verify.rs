//! Validity checks for augmentations.

use std::collections::HashSet;

use crate::chords::interleave_positions;
use crate::error::{invalid, Error, Result};
use crate::geometry::{in_open_segment, proper_crossing, segments_conflict, GeometricGraph};
use crate::graph::{Augmentation, CyclicMop, Edge, ParityColoring, PlaneGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    OddRedCount,
    /// The edge is already in the host or appears twice in the augmentation.
    DuplicatedEdge(Edge),
    Crossing(Edge, Edge),
    /// Vertex whose added degree has the wrong parity.
    Unmet(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(Violation),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

fn check_pairs(
    n: usize,
    edges: &[Edge],
    host: impl Fn(usize, usize) -> bool,
) -> Result<Option<Violation>> {
    let mut seen = HashSet::new();
    for &e in edges {
        if e.0 >= n || e.1 >= n {
            return invalid(format!("edge {e:?} out of range"));
        }
        if e.0 == e.1 {
            return invalid(format!("self-loop {e:?}"));
        }
        let e = Edge::new(e.0, e.1);
        if host(e.0, e.1) || !seen.insert(e) {
            return Ok(Some(Violation::DuplicatedEdge(e)));
        }
    }
    Ok(None)
}

fn parity_violation(n: usize, col: &ParityColoring, edges: &[Edge]) -> Option<Violation> {
    let mut deg = vec![0usize; n];
    for e in edges {
        deg[e.0] += 1;
        deg[e.1] += 1;
    }
    (0..n)
        .find(|&v| (deg[v] % 2 == 1) != col.is_red(v))
        .map(Violation::Unmet)
}

fn chords_crossing(cycle_pos: &dyn Fn(usize) -> usize, edges: &[Edge]) -> Option<Violation> {
    for (i, a) in edges.iter().enumerate() {
        for b in &edges[i + 1..] {
            if interleave_positions(
                cycle_pos(a.0),
                cycle_pos(a.1),
                cycle_pos(b.0),
                cycle_pos(b.1),
            ) {
                return Some(Violation::Crossing(*a, *b));
            }
        }
    }
    None
}

/// Verifies chords added in the unbounded face of a cyclic MOP.
pub fn verify_augmentation(
    g: &CyclicMop,
    col: &ParityColoring,
    h: &Augmentation,
) -> Result<Verdict> {
    let n = g.n();
    if col.len() != n {
        return invalid("coloring size differs from the host");
    }
    if col.red_count() % 2 == 1 {
        return Ok(Verdict::Invalid(Violation::OddRedCount));
    }
    if let Some(v) = check_pairs(n, &h.edges, |a, b| g.is_edge(a, b))? {
        return Ok(Verdict::Invalid(v));
    }
    if let Some(v) = chords_crossing(&|x| x, &h.edges) {
        return Ok(Verdict::Invalid(v));
    }
    Ok(match parity_violation(n, col, &h.edges) {
        Some(v) => Verdict::Invalid(v),
        None => Verdict::Valid,
    })
}

/// Verifies an augmentation of a plane graph whose faces are simple cycles.
/// Every edge must carry a placement naming a face that contains both ends.
pub fn verify_plane_augmentation(
    g: &PlaneGraph,
    col: &ParityColoring,
    h: &Augmentation,
) -> Result<Verdict> {
    let faces = g.faces()?;
    verify_with_faces(g, &faces, col, h)
}

/// Same as [`verify_plane_augmentation`] with precomputed faces.
pub fn verify_with_faces(
    g: &PlaneGraph,
    faces: &[Vec<usize>],
    col: &ParityColoring,
    h: &Augmentation,
) -> Result<Verdict> {
    let n = g.n();
    if col.len() != n {
        return invalid("coloring size differs from the host");
    }
    let placement: Vec<usize> = match &h.placement {
        Some(p) if p.len() == h.edges.len() => p.clone(),
        None if h.edges.is_empty() => Vec::new(),
        _ => return Err(Error::Placement("every edge needs a face".into())),
    };
    let mut by_face: std::collections::BTreeMap<usize, Vec<Edge>> = Default::default();
    for (&e, &f) in h.edges.iter().zip(&placement) {
        let face = faces
            .get(f)
            .ok_or_else(|| Error::Placement(format!("face {f} does not exist")))?;
        if !face.contains(&e.0) || !face.contains(&e.1) {
            return Err(Error::Placement(format!("edge {e:?} is not on face {f}")));
        }
        by_face.entry(f).or_default().push(e);
    }
    for &f in by_face.keys() {
        let face = &faces[f];
        let distinct: HashSet<usize> = face.iter().copied().collect();
        if distinct.len() != face.len() {
            return Err(Error::Placement(format!("face {f} is not a simple cycle")));
        }
    }
    if col.red_count() % 2 == 1 {
        return Ok(Verdict::Invalid(Violation::OddRedCount));
    }
    if let Some(v) = check_pairs(n, &h.edges, |a, b| g.has_edge(a, b))? {
        return Ok(Verdict::Invalid(v));
    }
    for (&f, edges) in &by_face {
        let face = &faces[f];
        let pos = |v: usize| face.iter().position(|&x| x == v).unwrap();
        if let Some(v) = chords_crossing(&pos, edges) {
            return Ok(Verdict::Invalid(v));
        }
    }
    Ok(match parity_violation(n, col, &h.edges) {
        Some(v) => Verdict::Invalid(v),
        None => Verdict::Valid,
    })
}

/// Verifies straight-line edges added to a geometric graph.
pub fn verify_geometric_augmentation(g: &GeometricGraph, h: &[Edge]) -> Result<Verdict> {
    let n = g.n();
    let host: HashSet<Edge> = g.edges.iter().copied().collect();
    if let Some(v) = check_pairs(n, h, |a, b| host.contains(&Edge::new(a, b)))? {
        return Ok(Verdict::Invalid(v));
    }
    let p = &g.points;
    for e in g.edges.iter().chain(h) {
        if let Some(v) = (0..n).find(|&v| in_open_segment(&p[v], &p[e.0], &p[e.1])) {
            return Err(Error::Degeneracy {
                a: e.0,
                b: e.1,
                vertex: v,
            });
        }
    }
    if g.colors.red_count() % 2 == 1 {
        return Ok(Verdict::Invalid(Violation::OddRedCount));
    }
    for (i, a) in h.iter().enumerate() {
        for b in g.edges.iter().chain(&h[i + 1..]) {
            if segments_conflict(&p[a.0], &p[a.1], &p[b.0], &p[b.1]) {
                return Ok(Verdict::Invalid(Violation::Crossing(*a, *b)));
            }
        }
    }
    Ok(match parity_violation(n, &g.colors, h) {
        Some(v) => Verdict::Invalid(v),
        None => Verdict::Valid,
    })
}

/// For a straight-line path, whether the segment joining its two ends
/// can be added without touching the path, closing it into a plane cycle.
/// A two-vertex path returns false because the closing edge would
/// duplicate the only path edge.
pub fn path_eulerian_check(g: &GeometricGraph) -> Result<bool> {
    let n = g.n();
    if n < 2 || g.edges.len() != n - 1 {
        return invalid("not a path");
    }
    let mut deg = vec![0; n];
    for e in &g.edges {
        deg[e.0] += 1;
        deg[e.1] += 1;
    }
    let ends: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    if ends.len() != 2 || deg.iter().any(|&d| d == 0 || d > 2) {
        return invalid("not a path");
    }
    if n == 2 {
        return Ok(false);
    }
    let (s, t) = (&g.points[ends[0]], &g.points[ends[1]]);
    for v in 0..n {
        if in_open_segment(&g.points[v], s, t) {
            return Ok(false);
        }
    }
    for e in &g.edges {
        let (a, b) = (&g.points[e.0], &g.points[e.1]);
        if proper_crossing(s, t, a, b) || segments_conflict(s, t, a, b) {
            return Ok(false);
        }
    }
    Ok(true)
}
