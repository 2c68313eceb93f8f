//! Variant transforms on compiled instances: every vertex red, and degree
//! parity equal to color.

use std::collections::{HashMap, HashSet};

use super::compile::GadgetInstance;
use super::tjoin::{minimum_t_join, odd_vertices, tree_t_join, MAX_EXACT_T};
use crate::error::{Error, Result};
use crate::graph::{Edge, ParityColoring, PlaneGraph};

/// Faces replacing triangle `(v1, v2, v3)` when `v1` turns red. `p` can
/// only reach `v1` and `q`, `s` only each other.
pub fn recolor_faces(
    v1: usize,
    v2: usize,
    v3: usize,
    p: usize,
    q: usize,
    s: usize,
) -> [Vec<usize>; 5] {
    [
        vec![v1, v2, p, v3],
        vec![v2, v3, q],
        vec![v2, q, p],
        vec![q, v3, s, p],
        vec![v3, p, s],
    ]
}

/// Faces replacing triangle `(a, b, u)` when edge `a b` is doubled: five
/// blue vertices, fourteen edges, `a` and `b` change parity, `u` does not.
pub fn duplicate_faces(a: usize, b: usize, u: usize, w: [usize; 5]) -> [Vec<usize>; 10] {
    [
        vec![a, b, w[4]],
        vec![a, w[4], w[3]],
        vec![a, w[3], w[2]],
        vec![a, w[2], w[1]],
        vec![a, w[1], w[0]],
        vec![a, w[0], w[1], u],
        vec![w[1], w[2], u],
        vec![w[2], w[3], u],
        vec![w[3], w[4], u],
        vec![w[4], b, u],
    ]
}

fn rotate_to(f: &[usize], v: usize) -> Vec<usize> {
    let i = f.iter().position(|&x| x == v).expect("vertex on face");
    f[i..].iter().chain(&f[..i]).copied().collect()
}

/// Result of a graph-level transform.
#[derive(Clone, Debug)]
pub struct Transformed {
    pub graph: PlaneGraph,
    pub colors: ParityColoring,
    /// Vertices added, in creation order.
    pub added: Vec<usize>,
    /// Chords every augmentation of the output must contain.
    pub forced: Vec<Edge>,
    /// Doubled edges, for the parity transform.
    pub join: Vec<Edge>,
}

/// Turns every blue vertex red by adding three red vertices inside one of
/// its triangles. The new vertices can only be fixed by the two forced
/// chords, one of which also fixes the old vertex.
pub fn recolor_all(g: &PlaneGraph, col: &ParityColoring) -> Result<Transformed> {
    let mut faces = g.faces()?;
    let mut red = col.as_slice().to_vec();
    let n0 = red.len();
    let mut forced = Vec::new();
    for v in 0..n0 {
        if red[v] {
            continue;
        }
        let fi = faces
            .iter()
            .position(|f| f.len() == 3 && f.contains(&v))
            .ok_or_else(|| Error::Structural(format!("blue vertex {v} has no triangular face")))?;
        let tri = rotate_to(&faces[fi], v);
        let base = red.len();
        let (p, q, s) = (base, base + 1, base + 2);
        red[v] = true;
        red.extend([true; 3]);
        faces.swap_remove(fi);
        faces.extend(recolor_faces(tri[0], tri[1], tri[2], p, q, s));
        forced.push(Edge::new(p, v));
        forced.push(Edge::new(q, s));
    }
    let graph = if red.len() == n0 {
        g.clone()
    } else {
        PlaneGraph::from_faces(red.len(), &faces)?
    };
    Ok(Transformed {
        graph,
        added: (n0..red.len()).collect(),
        colors: ParityColoring::from_bools(red),
        forced,
        join: Vec::new(),
    })
}

/// [`recolor_all`] on a compiled instance; new vertices are tagged
/// `conversion`.
pub fn all_red_transform(inst: &GadgetInstance) -> Result<GadgetInstance> {
    let t = recolor_all(&inst.graph, &inst.colors)?;
    let mut out = inst.clone();
    if !t.added.is_empty() {
        out.tags
            .entry("conversion".into())
            .or_default()
            .extend(&t.added);
    }
    out.graph = t.graph;
    out.colors = t.colors;
    out.forced.extend(t.forced);
    Ok(out)
}

/// T-join used by [`eulerian_transform`]: exact when `|T|` allows,
/// otherwise a spanning-tree join. Either way it is reduced until no
/// triangular face holds two of its edges.
pub fn triangle_sparse_t_join(n: usize, faces: &[Vec<usize>], t: &[usize]) -> Result<Vec<Edge>> {
    let mut allowed: HashSet<Edge> = HashSet::new();
    for f in faces.iter().filter(|f| f.len() == 3) {
        for i in 0..3 {
            allowed.insert(Edge::new(f[i], f[(i + 1) % 3]));
        }
    }
    let mut edges: Vec<Edge> = allowed.into_iter().collect();
    edges.sort();
    let mut join: HashSet<Edge> = if t.len() <= MAX_EXACT_T {
        minimum_t_join(n, &edges, t)?
    } else {
        tree_t_join(n, &edges, t)?
    }
    .into_iter()
    .collect();
    loop {
        let mut changed = false;
        for f in faces.iter().filter(|f| f.len() == 3) {
            let es = [0, 1, 2].map(|i| Edge::new(f[i], f[(i + 1) % 3]));
            if es.iter().filter(|e| join.contains(e)).count() >= 2 {
                for e in es {
                    if !join.remove(&e) {
                        join.insert(e);
                    }
                }
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut out: Vec<Edge> = join.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Makes the odd-degree vertices exactly the red ones. Each edge of a
/// T-join is doubled, and the copy is replaced by a five-vertex gadget
/// inside a triangle next to it.
pub fn eulerize(g: &PlaneGraph, col: &ParityColoring) -> Result<Transformed> {
    let n0 = g.n();
    let t: Vec<usize> = (0..n0)
        .filter(|&v| col.is_red(v) != (g.degree(v) % 2 == 1))
        .collect();
    let mut faces = g.faces()?;
    let join = triangle_sparse_t_join(n0, &faces, &t)?;
    debug_assert_eq!(odd_vertices(n0, &join), t);
    // Dart -> triangular face holding it.
    let mut tri_of: HashMap<(usize, usize), usize> = HashMap::new();
    for (i, f) in faces.iter().enumerate().filter(|(_, f)| f.len() == 3) {
        for j in 0..3 {
            tri_of.insert((f[j], f[(j + 1) % 3]), i);
        }
    }
    let mut used = HashSet::new();
    let mut red = col.as_slice().to_vec();
    let mut replaced: Vec<(usize, [Vec<usize>; 10])> = Vec::new();
    for e in &join {
        let pick = [(e.0, e.1), (e.1, e.0)]
            .into_iter()
            .filter_map(|d| tri_of.get(&d).map(|&f| (d, f)))
            .find(|(_, f)| !used.contains(f));
        let ((a, b), fi) = pick
            .ok_or_else(|| Error::Structural(format!("no free triangle for doubled edge {e:?}")))?;
        used.insert(fi);
        let tri = rotate_to(&faces[fi], a);
        debug_assert_eq!(tri[1], b);
        let base = red.len();
        let w = [base, base + 1, base + 2, base + 3, base + 4];
        red.extend([false; 5]);
        replaced.push((fi, duplicate_faces(a, b, tri[2], w)));
    }
    let mut drop: Vec<usize> = replaced.iter().map(|r| r.0).collect();
    drop.sort_unstable_by(|a, b| b.cmp(a));
    for i in drop {
        faces.swap_remove(i);
    }
    for (_, fs) in replaced {
        faces.extend(fs);
    }
    let graph = if red.len() == n0 {
        g.clone()
    } else {
        PlaneGraph::from_faces(red.len(), &faces)?
    };
    let colors = ParityColoring::from_bools(red);
    for v in 0..graph.n() {
        if colors.is_red(v) != (graph.degree(v) % 2 == 1) {
            return Err(Error::Structural(format!(
                "vertex {v} parity differs from its color"
            )));
        }
    }
    Ok(Transformed {
        added: (n0..graph.n()).collect(),
        graph,
        colors,
        forced: Vec::new(),
        join,
    })
}

/// [`eulerize`] on a compiled instance; new vertices are tagged `eulerian`.
pub fn eulerian_transform(inst: &GadgetInstance) -> Result<GadgetInstance> {
    let t = eulerize(&inst.graph, &inst.colors)?;
    let mut out = inst.clone();
    if !t.added.is_empty() {
        out.tags
            .entry("eulerian".into())
            .or_default()
            .extend(&t.added);
    }
    out.graph = t.graph;
    out.colors = t.colors;
    Ok(out)
}
