//! Barycentric drawings of 3-connected plane graphs, and SVG output.

mod svg;

pub use svg::render_svg;

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::graph::{Edge, PlaneGraph};
use crate::reduction::three_connectivity_check;

/// Largest number of interior vertices solved by dense elimination.
pub const DENSE_LIMIT: usize = 2000;
/// Required barycentric residual.
pub const RESIDUAL_TOL: f64 = 1e-10;
/// Angular slack for the convexity audit, in radians.
pub const ANGLE_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Solver {
    /// Dense LU up to [`DENSE_LIMIT`] interior vertices, Gauss-Seidel above.
    Auto,
    Dense,
    GaussSeidel,
}

#[derive(Clone, Debug)]
pub struct Drawing {
    pub coords: Vec<[f64; 2]>,
    pub outer_face: usize,
    /// Radius of the polygon the outer face is pinned to.
    pub radius: f64,
    /// Largest distance of an interior vertex from its neighbors' average.
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Audit {
    pub crossings: Vec<(Edge, Edge)>,
    /// Internal faces with a reflex corner.
    pub nonconvex: Vec<usize>,
}

impl Audit {
    pub fn is_clean(&self) -> bool {
        self.crossings.is_empty() && self.nonconvex.is_empty()
    }
}

pub fn tutte_embed(g: &PlaneGraph, outer_face: usize) -> Result<Drawing> {
    tutte_embed_with(g, outer_face, Solver::Auto)
}

/// Pins face `outer_face` (an index into `g.faces()`) to a regular polygon
/// of radius 1, clockwise, and puts every other vertex at the average of
/// its neighbors.
pub fn tutte_embed_with(g: &PlaneGraph, outer_face: usize, solver: Solver) -> Result<Drawing> {
    let faces = g.faces()?;
    if g.n() + faces.len() != g.num_edges() + 2 {
        return Err(Error::Precondition("embedding is not planar".into()));
    }
    if !three_connectivity_check(g) {
        return Err(Error::Precondition("graph is not 3-connected".into()));
    }
    let outer = faces
        .get(outer_face)
        .ok_or_else(|| Error::InvalidInput(format!("face {outer_face} does not exist")))?;
    let n = g.n();
    let mut coords = vec![[0.0; 2]; n];
    let mut pinned = vec![false; n];
    let k = outer.len();
    for (i, &v) in outer.iter().enumerate() {
        let t = std::f64::consts::FRAC_PI_2 - std::f64::consts::TAU * i as f64 / k as f64;
        coords[v] = [t.cos(), t.sin()];
        pinned[v] = true;
    }
    let inner: Vec<usize> = (0..n).filter(|&v| !pinned[v]).collect();
    let dense = match solver {
        Solver::Auto => inner.len() <= DENSE_LIMIT,
        Solver::Dense => true,
        Solver::GaussSeidel => false,
    };
    if dense {
        solve_dense(g, &inner, &mut coords)?;
    } else {
        solve_gauss_seidel(g, &inner, &mut coords);
    }
    let residual = barycentric_residual(g, &inner, &coords);
    if residual >= RESIDUAL_TOL || !residual.is_finite() {
        return Err(Error::Numerical(residual));
    }
    Ok(Drawing {
        coords,
        outer_face,
        radius: 1.0,
        residual,
    })
}

fn solve_dense(g: &PlaneGraph, inner: &[usize], coords: &mut [[f64; 2]]) -> Result<()> {
    let m = inner.len();
    if m == 0 {
        return Ok(());
    }
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in inner.iter().enumerate() {
        index[v] = i;
    }
    let mut a = DMatrix::<f64>::zeros(m, m);
    let mut b = DMatrix::<f64>::zeros(m, 2);
    for (i, &v) in inner.iter().enumerate() {
        a[(i, i)] = g.degree(v) as f64;
        for &u in g.neighbors(v) {
            if index[u] == usize::MAX {
                b[(i, 0)] += coords[u][0];
                b[(i, 1)] += coords[u][1];
            } else {
                a[(i, index[u])] -= 1.0;
            }
        }
    }
    let x = a.lu().solve(&b).ok_or(Error::Numerical(f64::INFINITY))?;
    for (i, &v) in inner.iter().enumerate() {
        coords[v] = [x[(i, 0)], x[(i, 1)]];
    }
    Ok(())
}

fn solve_gauss_seidel(g: &PlaneGraph, inner: &[usize], coords: &mut [[f64; 2]]) {
    const MAX_SWEEPS: usize = 1_000_000;
    for sweep in 0..MAX_SWEEPS {
        for &v in inner {
            coords[v] = average(g, v, coords);
        }
        if sweep % 64 == 0 && barycentric_residual(g, inner, coords) < RESIDUAL_TOL / 4.0 {
            return;
        }
    }
}

fn average(g: &PlaneGraph, v: usize, coords: &[[f64; 2]]) -> [f64; 2] {
    let d = g.degree(v) as f64;
    let s = g.neighbors(v).iter().fold([0.0, 0.0], |s, &u| {
        [s[0] + coords[u][0], s[1] + coords[u][1]]
    });
    [s[0] / d, s[1] / d]
}

fn barycentric_residual(g: &PlaneGraph, inner: &[usize], coords: &[[f64; 2]]) -> f64 {
    inner
        .iter()
        .map(|&v| {
            let a = average(g, v, coords);
            (a[0] - coords[v][0]).hypot(a[1] - coords[v][1])
        })
        .fold(0.0, f64::max)
}

/// Barycentric residual of a drawing, over the vertices not on its outer
/// face.
pub fn residual(g: &PlaneGraph, d: &Drawing) -> Result<f64> {
    let faces = g.faces()?;
    let outer = &faces[d.outer_face];
    let inner: Vec<usize> = (0..g.n()).filter(|v| !outer.contains(v)).collect();
    Ok(barycentric_residual(g, &inner, &d.coords))
}

fn cross(o: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Proper crossings between non-adjacent edges, and internal faces that
/// turn clockwise somewhere by more than [`ANGLE_TOL`].
pub fn audit_drawing(g: &PlaneGraph, coords: &[[f64; 2]], outer_face: usize) -> Result<Audit> {
    let edges = g.edges();
    let mut crossings = Vec::new();
    for (i, e) in edges.iter().enumerate() {
        for f in &edges[i + 1..] {
            if e.touches(f.0) || e.touches(f.1) {
                continue;
            }
            let (a, b, c, d) = (coords[e.0], coords[e.1], coords[f.0], coords[f.1]);
            let (d1, d2) = (cross(a, b, c), cross(a, b, d));
            let (d3, d4) = (cross(c, d, a), cross(c, d, b));
            if d1 * d2 < 0.0 && d3 * d4 < 0.0 {
                crossings.push((*e, *f));
            }
        }
    }
    let mut nonconvex = Vec::new();
    for (fi, face) in g.faces()?.iter().enumerate() {
        if fi == outer_face {
            continue;
        }
        let k = face.len();
        let reflex = (0..k).any(|i| {
            let (p, q, r) = (
                coords[face[i]],
                coords[face[(i + 1) % k]],
                coords[face[(i + 2) % k]],
            );
            let u = [q[0] - p[0], q[1] - p[1]];
            let w = [r[0] - q[0], r[1] - q[1]];
            let turn = (u[0] * w[1] - u[1] * w[0]).atan2(u[0] * w[0] + u[1] * w[1]);
            turn < -ANGLE_TOL
        });
        if reflex {
            nonconvex.push(fi);
        }
    }
    Ok(Audit {
        crossings,
        nonconvex,
    })
}

/// Index of a longest face, a reasonable outer face for drawing.
pub fn longest_face(g: &PlaneGraph) -> Result<usize> {
    let faces = g.faces()?;
    Ok((0..faces.len())
        .max_by_key(|&i| (faces[i].len(), std::cmp::Reverse(i)))
        .unwrap_or(0))
}
