//! Gadget templates as small straight-line drawings.
//!
//! A template's bounded faces become faces of the compiled graph; its
//! outer face is left open and closed up during assembly. Faces marked
//! active are where augmentation chords may go; every other face longer
//! than a triangle is later filled with a blue hub.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Edge, ParityColoring, PlaneGraph};

#[derive(Clone, Debug, Default)]
pub struct Template {
    pub coords: Vec<[f64; 2]>,
    pub edges: Vec<Edge>,
    pub red: Vec<bool>,
    pub tags: Vec<&'static str>,
    /// Vertex sets of the active faces.
    pub active: Vec<BTreeSet<usize>>,
}

/// Vertex ids of one basic gadget. The ring `a` is NW, NE, SE, SW.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BasicIds {
    pub a: [usize; 4],
    pub c1: usize,
    pub c2: usize,
    pub n: usize,
    pub e: usize,
    pub s: usize,
    pub w: usize,
}

impl BasicIds {
    /// Chords of the positive configuration: `n` and `s` stay unfixed.
    pub fn positive(&self) -> [Edge; 4] {
        [
            Edge::new(self.a[0], self.a[1]),
            Edge::new(self.a[2], self.a[3]),
            Edge::new(self.c1, self.e),
            Edge::new(self.c2, self.w),
        ]
    }

    /// Chords of the negative configuration: `e` and `w` stay unfixed.
    pub fn negative(&self) -> [Edge; 4] {
        [
            Edge::new(self.a[1], self.a[2]),
            Edge::new(self.a[3], self.a[0]),
            Edge::new(self.c1, self.n),
            Edge::new(self.c2, self.s),
        ]
    }

    pub fn offset(&self, by: usize) -> BasicIds {
        BasicIds {
            a: self.a.map(|v| v + by),
            c1: self.c1 + by,
            c2: self.c2 + by,
            n: self.n + by,
            e: self.e + by,
            s: self.s + by,
            w: self.w + by,
        }
    }
}

/// Two basic gadgets joined by a middle wire (`b1.e` to `b2.w`) and a
/// bottom wire (`b1.s` to `b2.s`). Outputs are `b1.n` and `b2.n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LiteralIds {
    pub b1: BasicIds,
    pub b2: BasicIds,
}

impl LiteralIds {
    pub fn left(&self) -> usize {
        self.b1.w
    }

    pub fn right(&self) -> usize {
        self.b2.e
    }

    pub fn outputs(&self) -> (usize, usize) {
        (self.b1.n, self.b2.n)
    }

    /// Chords inside the literal gadget for the given state.
    pub fn chords(&self, positive: bool) -> Vec<Edge> {
        let mut out = Vec::with_capacity(9);
        if positive {
            out.extend(self.b1.positive());
            out.extend(self.b2.positive());
            out.push(Edge::new(self.b1.s, self.b2.s));
        } else {
            out.extend(self.b1.negative());
            out.extend(self.b2.negative());
            out.push(Edge::new(self.b1.e, self.b2.w));
        }
        out
    }

    pub fn offset(&self, by: usize) -> LiteralIds {
        LiteralIds {
            b1: self.b1.offset(by),
            b2: self.b2.offset(by),
        }
    }
}

/// Connection between consecutive literal gadgets of a variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Joint {
    /// Same-sign neighbors: one wire.
    Wire,
    /// Opposite signs: two wires through a red middle vertex.
    Double(usize),
}

impl Template {
    pub fn vertex(&mut self, at: [f64; 2], red: bool, tag: &'static str) -> usize {
        self.coords.push(at);
        self.red.push(red);
        self.tags.push(tag);
        self.coords.len() - 1
    }

    pub fn edge(&mut self, a: usize, b: usize) {
        self.edges.push(Edge::new(a, b));
    }

    pub fn activate(&mut self, face: &[usize]) {
        self.active.push(face.iter().copied().collect());
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    /// Quad `p, x, q, y` with blue `x`, `y`; the chord `p q` is the only
    /// usable one.
    pub fn wire(&mut self, p: usize, q: usize, x: [f64; 2], y: [f64; 2], tag: &'static str) {
        let xv = self.vertex(x, false, tag);
        let yv = self.vertex(y, false, tag);
        for (a, b) in [(p, xv), (xv, q), (q, yv), (yv, p)] {
            self.edge(a, b);
        }
        self.activate(&[p, xv, q, yv]);
    }

    /// Drawing with the rotation read off the coordinates, after checking
    /// that no two edges cross.
    pub fn plane(&self) -> Result<PlaneGraph> {
        check_drawing(&self.coords, &self.edges)?;
        PlaneGraph::from_coords(self.coords.clone(), &self.edges)
    }

    /// Bounded faces, counterclockwise, with their active flag.
    pub fn bounded_faces(&self) -> Result<Vec<(Vec<usize>, bool)>> {
        let g = self.plane()?;
        let mut out = Vec::new();
        for f in g.faces()? {
            if signed_area(&self.coords, &f) <= 0.0 {
                continue;
            }
            let set: BTreeSet<usize> = f.iter().copied().collect();
            let active = self.active.contains(&set);
            out.push((f, active));
        }
        if out.iter().filter(|f| f.1).count() != self.active.len() {
            return Err(Error::Structural(
                "an active face of a template is not a face".into(),
            ));
        }
        Ok(out)
    }
    /// The template as a standalone instance: graph, colors and the ids
    /// (in `faces()` order) of its active faces.
    pub fn isolated(&self) -> Result<(PlaneGraph, ParityColoring, Vec<usize>)> {
        let g = self.plane()?;
        let region: Vec<usize> = g
            .faces()?
            .iter()
            .enumerate()
            .filter(|(_, f)| {
                signed_area(&self.coords, f) > 0.0
                    && self.active.contains(&f.iter().copied().collect())
            })
            .map(|(i, _)| i)
            .collect();
        Ok((g, ParityColoring::from_bools(self.red.clone()), region))
    }
}

fn signed_area(c: &[[f64; 2]], f: &[usize]) -> f64 {
    let mut s = 0.0;
    for i in 0..f.len() {
        let (p, q) = (c[f[i]], c[f[(i + 1) % f.len()]]);
        s += p[0] * q[1] - q[0] * p[1];
    }
    s / 2.0
}

fn cross(o: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Templates use well-separated coordinates, so a floating-point test with
/// a small tolerance is enough here.
fn check_drawing(c: &[[f64; 2]], edges: &[Edge]) -> Result<()> {
    const EPS: f64 = 1e-9;
    for (i, e) in edges.iter().enumerate() {
        for v in 0..c.len() {
            if e.touches(v) {
                continue;
            }
            let (a, b, p) = (c[e.0], c[e.1], c[v]);
            let on_line = cross(a, b, p).abs() < EPS;
            let within =
                (p[0] - a[0]) * (p[0] - b[0]) <= EPS && (p[1] - a[1]) * (p[1] - b[1]) <= EPS;
            if on_line && within {
                return Err(Error::Structural(format!(
                    "template vertex {v} lies on edge {e:?}"
                )));
            }
        }
        for f in &edges[i + 1..] {
            if e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1 {
                continue;
            }
            let (a, b, p, q) = (c[e.0], c[e.1], c[f.0], c[f.1]);
            let d1 = cross(a, b, p);
            let d2 = cross(a, b, q);
            let d3 = cross(p, q, a);
            let d4 = cross(p, q, b);
            if d1 * d2 < -EPS && d3 * d4 < -EPS {
                return Err(Error::Structural(format!(
                    "template edges {e:?} and {f:?} cross"
                )));
            }
        }
    }
    Ok(())
}

/// Places a basic gadget using `map` from local to template coordinates.
pub fn add_basic(t: &mut Template, map: &dyn Fn(f64, f64) -> [f64; 2]) -> BasicIds {
    let a = [
        t.vertex(map(-1.0, 1.0), true, "basic"),
        t.vertex(map(1.0, 1.0), true, "basic"),
        t.vertex(map(1.0, -1.0), true, "basic"),
        t.vertex(map(-1.0, -1.0), true, "basic"),
    ];
    let c1 = t.vertex(map(0.5, 0.5), true, "basic");
    let c2 = t.vertex(map(-0.5, -0.5), true, "basic");
    let n = t.vertex(map(0.0, 3.0), true, "basic");
    let e = t.vertex(map(3.0, 0.0), true, "basic");
    let s = t.vertex(map(0.0, -3.0), true, "basic");
    let w = t.vertex(map(-3.0, 0.0), true, "basic");
    for (x, y) in [
        (n, a[0]),
        (n, a[1]),
        (e, a[1]),
        (e, a[2]),
        (s, a[2]),
        (s, a[3]),
        (w, a[3]),
        (w, a[0]),
        (c1, a[0]),
        (c1, a[1]),
        (c1, a[2]),
        (c2, a[2]),
        (c2, a[3]),
        (c2, a[0]),
        (c1, c2),
    ] {
        t.edge(x, y);
    }
    t.activate(&[a[0], n, a[1], c1]);
    t.activate(&[a[1], e, a[2], c1]);
    t.activate(&[a[2], s, a[3], c2]);
    t.activate(&[a[3], w, a[0], c2]);
    BasicIds {
        a,
        c1,
        c2,
        n,
        e,
        s,
        w,
    }
}

/// Literal gadget centered at local origin, 16 units wide, outputs up.
pub fn add_literal(t: &mut Template, map: &dyn Fn(f64, f64) -> [f64; 2]) -> LiteralIds {
    let b1 = add_basic(t, &|x, y| map(x - 5.0, y));
    let b2 = add_basic(t, &|x, y| map(x + 5.0, y));
    t.wire(b1.e, b2.w, map(0.0, 1.0), map(0.0, -1.0), "wire");
    t.wire(b1.s, b2.s, map(0.0, -2.0), map(0.0, -5.0), "wire");
    LiteralIds { b1, b2 }
}

pub fn basic_template() -> (Template, BasicIds) {
    let mut t = Template::default();
    let ids = add_basic(&mut t, &|x, y| [x, y]);
    (t, ids)
}

pub fn literal_template() -> (Template, LiteralIds) {
    let mut t = Template::default();
    let ids = add_literal(&mut t, &|x, y| [x, y]);
    (t, ids)
}

/// Ring of literal gadgets placed clockwise with outputs facing out.
/// `same[j]` tells whether literal `j` and `j + 1` (cyclically) have the
/// same sign.
pub fn variable_template(same: &[bool]) -> (Template, Vec<LiteralIds>, Vec<Joint>) {
    let k = same.len();
    let r = (8.0 * k as f64).max(20.0);
    let mut t = Template::default();
    let frame = |phi: f64| {
        let (s, c) = phi.sin_cos();
        move |x: f64, y: f64| [r * s + x * c + y * s, r * c - x * s + y * c]
    };
    let step = std::f64::consts::TAU / k as f64;
    let mut lits = Vec::with_capacity(k);
    for j in 0..k {
        let f = frame(j as f64 * step);
        lits.push(add_literal(&mut t, &f));
    }
    let ext = (8.0f64).atan2(r);
    let polar = |phi: f64, rad: f64| [rad * phi.sin(), rad * phi.cos()];
    let mut joints = Vec::with_capacity(k);
    for j in 0..k {
        let from = lits[j].right();
        let to = lits[(j + 1) % k].left();
        let start = j as f64 * step + ext;
        let span = step - 2.0 * ext;
        if same[j] {
            let mid = start + span / 2.0;
            t.wire(from, to, polar(mid, r + 2.0), polar(mid, r - 2.0), "joint");
            joints.push(Joint::Wire);
        } else {
            let mid = start + span / 2.0;
            let w = t.vertex(polar(mid, r), true, "double-wire");
            let a = start + span / 4.0;
            let b = start + 3.0 * span / 4.0;
            t.wire(from, w, polar(a, r + 2.0), polar(a, r - 2.0), "double-wire");
            t.wire(w, to, polar(b, r + 2.0), polar(b, r - 2.0), "double-wire");
            joints.push(Joint::Double(w));
        }
    }
    (t, lits, joints)
}

/// Clockwise polygon with the given colors; its interior is active.
pub fn polygon_template(red: &[bool], tag: &'static str) -> (Template, Vec<usize>) {
    let m = red.len();
    let mut t = Template::default();
    let rad = m as f64;
    let ids: Vec<usize> = (0..m)
        .map(|i| {
            let phi = std::f64::consts::TAU * i as f64 / m as f64;
            t.vertex([rad * phi.sin(), rad * phi.cos()], red[i], tag)
        })
        .collect();
    for i in 0..m {
        t.edge(ids[i], ids[(i + 1) % m]);
    }
    t.activate(&ids);
    (t, ids)
}

/// Decagon clause: all red, inputs `(1,3)`, `(4,6)`, `(7,9)` (0-based),
/// each with its middle vertex as star center.
pub const DECAGON_INPUTS: [(usize, usize); 3] = [(1, 3), (4, 6), (7, 9)];
pub const DECAGON_CENTERS: [usize; 3] = [2, 5, 8];

/// 14-gon clause for the matching variant: `v1 v2 b i1a i1b i2a b i2b b
/// i3a b i3b b b`, clockwise.
pub const FOURTEEN_RED: [bool; 14] = [
    true, true, false, true, true, true, false, true, false, true, false, true, false, false,
];
pub const FOURTEEN_INPUTS: [(usize, usize); 3] = [(3, 4), (5, 7), (9, 11)];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_template_faces() {
        let (t, _) = basic_template();
        let faces = t.bounded_faces().unwrap();
        assert_eq!(faces.len(), 6);
        assert_eq!(faces.iter().filter(|f| f.1).count(), 4);
    }

    #[test]
    fn variable_rings_are_plane() {
        for same in [
            vec![true],
            vec![false, false],
            vec![true, false, false],
            vec![true; 5],
        ] {
            let (t, lits, _) = variable_template(&same);
            assert_eq!(lits.len(), same.len());
            t.bounded_faces().unwrap();
        }
    }
}
