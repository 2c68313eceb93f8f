//! Host graph types: cyclic maximal outerplane graphs, general plane graphs
//! given by rotation systems, colorings and augmentations.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::chords::chords_interleave;
use crate::error::{invalid, Error, Result};

/// Unordered vertex pair, stored with the smaller id first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge(pub usize, pub usize);

impl Edge {
    pub fn new(a: usize, b: usize) -> Edge {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn other(self, v: usize) -> usize {
        if self.0 == v {
            self.1
        } else {
            self.0
        }
    }

    pub fn touches(self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Edge {
        Edge::new(a, b)
    }
}

/// Red set of a parity constraint assignment. All other vertices are blue.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParityColoring {
    red: Vec<bool>,
}

impl ParityColoring {
    pub fn all_blue(n: usize) -> Self {
        ParityColoring {
            red: vec![false; n],
        }
    }

    pub fn all_red(n: usize) -> Self {
        ParityColoring { red: vec![true; n] }
    }

    pub fn from_red(n: usize, red: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut c = Self::all_blue(n);
        for v in red {
            if v >= n {
                return invalid(format!("red vertex {v} out of range (n = {n})"));
            }
            c.red[v] = true;
        }
        Ok(c)
    }

    pub fn from_mask(n: usize, mask: u64) -> Self {
        ParityColoring {
            red: (0..n).map(|v| mask >> v & 1 == 1).collect(),
        }
    }

    pub fn from_bools(red: Vec<bool>) -> Self {
        ParityColoring { red }
    }

    pub fn len(&self) -> usize {
        self.red.len()
    }

    pub fn is_empty(&self) -> bool {
        self.red.is_empty()
    }

    pub fn is_red(&self, v: usize) -> bool {
        self.red[v]
    }

    pub fn set(&mut self, v: usize, red: bool) {
        self.red[v] = red;
    }

    pub fn push(&mut self, red: bool) {
        self.red.push(red);
    }

    pub fn red_vertices(&self) -> Vec<usize> {
        (0..self.red.len()).filter(|&v| self.red[v]).collect()
    }

    pub fn red_count(&self) -> usize {
        self.red.iter().filter(|&&r| r).count()
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.red
    }
}

/// Added edges plus, for plane hosts, the face each edge is drawn in.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Augmentation {
    pub edges: Vec<Edge>,
    /// Face id per edge, parallel to `edges`. Unused for cyclic hosts,
    /// where every chord lies in the unbounded face.
    pub placement: Option<Vec<usize>>,
}

impl Augmentation {
    pub fn new(mut edges: Vec<Edge>) -> Self {
        edges.sort();
        Augmentation {
            edges,
            placement: None,
        }
    }

    pub fn placed(pairs: Vec<(Edge, usize)>) -> Self {
        let mut pairs = pairs;
        pairs.sort();
        let (edges, faces) = pairs.into_iter().unzip();
        Augmentation {
            edges,
            placement: Some(faces),
        }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn degrees(&self, n: usize) -> Vec<usize> {
        let mut d = vec![0; n];
        for e in &self.edges {
            d[e.0] += 1;
            d[e.1] += 1;
        }
        d
    }
}

/// Maximal outerplane graph with vertices `0..n` in clockwise order on a
/// circle, `n` arcs and `n - 3` non-crossing diagonals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicMop {
    n: usize,
    diagonals: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl CyclicMop {
    pub fn new(n: usize, diagonals: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n < 3 {
            return invalid(format!("a MOP needs at least 3 vertices, got {n}"));
        }
        let mut set = BTreeSet::new();
        for (a, b) in diagonals {
            if a >= n || b >= n {
                return invalid(format!("diagonal ({a}, {b}) out of range"));
            }
            if a == b || (a + 1) % n == b || (b + 1) % n == a {
                return invalid(format!("({a}, {b}) is not a diagonal"));
            }
            if !set.insert(Edge::new(a, b)) {
                return invalid(format!("duplicate diagonal ({a}, {b})"));
            }
        }
        if set.len() != n - 3 {
            return invalid(format!(
                "a MOP on {n} vertices has {} diagonals, got {}",
                n - 3,
                set.len()
            ));
        }
        let diagonals: Vec<Edge> = set.into_iter().collect();
        let cycle: Vec<usize> = (0..n).collect();
        for (i, &d) in diagonals.iter().enumerate() {
            for &e in &diagonals[i + 1..] {
                if chords_interleave((d.0, d.1), (e.0, e.1), &cycle)? {
                    return invalid(format!("diagonals {d:?} and {e:?} cross"));
                }
            }
        }
        let mut adj = vec![Vec::new(); n];
        for v in 0..n {
            adj[v].push((v + 1) % n);
            adj[(v + 1) % n].push(v);
        }
        for d in &diagonals {
            adj[d.0].push(d.1);
            adj[d.1].push(d.0);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_by_key(|&u| (u + n - v) % n);
            list.dedup();
        }
        Ok(CyclicMop { n, diagonals, adj })
    }

    /// Fan triangulation from vertex 0.
    pub fn fan(n: usize) -> Result<Self> {
        Self::new(n, (2..n.saturating_sub(1)).map(|k| (0, k)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diagonals(&self) -> &[Edge] {
        &self.diagonals
    }

    /// Neighbors of `v` in clockwise order starting at `v + 1`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(&b)
    }

    pub fn is_arc(&self, a: usize, b: usize) -> bool {
        (a + 1) % self.n == b || (b + 1) % self.n == a
    }

    pub fn edges(&self) -> Vec<Edge> {
        let mut e: Vec<Edge> = (0..self.n)
            .map(|v| Edge::new(v, (v + 1) % self.n))
            .collect();
        e.extend_from_slice(&self.diagonals);
        e.sort();
        e.dedup();
        e
    }

    /// Dense adjacency matrix, used by the interval DP.
    pub fn adjacency_matrix(&self) -> Vec<Vec<bool>> {
        let mut m = vec![vec![false; self.n]; self.n];
        for v in 0..self.n {
            for &u in &self.adj[v] {
                m[v][u] = true;
            }
        }
        m
    }

    /// Relabels vertices so that `start` becomes vertex 0.
    pub fn rotate_labels(&self, start: usize) -> Self {
        let n = self.n;
        let map = |v: usize| (v + n - start % n) % n;
        Self::new(n, self.diagonals.iter().map(|d| (map(d.0), map(d.1))))
            .expect("relabeling preserves validity")
    }

    /// Plane graph with the vertices on the unit circle, clockwise from the top.
    pub fn to_plane_graph(&self) -> PlaneGraph {
        let n = self.n;
        let coords = (0..n)
            .map(|k| {
                let t =
                    std::f64::consts::FRAC_PI_2 - 2.0 * std::f64::consts::PI * k as f64 / n as f64;
                [t.cos(), t.sin()]
            })
            .collect();
        PlaneGraph {
            rotation: self.adj.clone(),
            coords: Some(coords),
        }
    }
}

/// Combinatorial embedding: for every vertex the clockwise cyclic order of
/// its neighbors.
///
/// Faces are traced with `next(u -> v) = (v -> w)` where `w` follows `u` in
/// the clockwise rotation at `v`, so bounded faces of a straight-line
/// drawing come out counterclockwise and the outer face clockwise.
#[derive(Clone, Debug, PartialEq)]
pub struct PlaneGraph {
    rotation: Vec<Vec<usize>>,
    pub coords: Option<Vec<[f64; 2]>>,
}

impl PlaneGraph {
    /// Checks that the rotation is symmetric and simple. Planarity is
    /// checked lazily by [`PlaneGraph::faces`].
    pub fn from_rotation(rotation: Vec<Vec<usize>>) -> Result<Self> {
        let n = rotation.len();
        let mut seen = HashSet::new();
        for (v, list) in rotation.iter().enumerate() {
            for &u in list {
                if u >= n {
                    return Err(Error::Structural(format!(
                        "neighbor {u} of {v} out of range"
                    )));
                }
                if u == v {
                    return Err(Error::Structural(format!("self-loop at {v}")));
                }
                if !seen.insert((v, u)) {
                    return Err(Error::Structural(format!("repeated edge ({v}, {u})")));
                }
            }
        }
        for &(v, u) in &seen {
            if !seen.contains(&(u, v)) {
                return Err(Error::Structural(format!(
                    "edge ({v}, {u}) missing from the rotation at {u}"
                )));
            }
        }
        Ok(PlaneGraph {
            rotation,
            coords: None,
        })
    }

    /// Builds the rotation system whose face boundaries are `faces`, each
    /// traced in the library convention.
    pub fn from_faces(n: usize, faces: &[Vec<usize>]) -> Result<Self> {
        let mut succ: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
        for f in faces {
            let k = f.len();
            if k < 3 {
                return Err(Error::Structural(format!("face {f:?} is too short")));
            }
            for i in 0..k {
                let (u, v, w) = (f[i], f[(i + 1) % k], f[(i + 2) % k]);
                if u >= n || v >= n || w >= n {
                    return Err(Error::Structural(format!("face {f:?} out of range")));
                }
                if succ[v].insert(u, w).is_some() {
                    return Err(Error::Structural(format!("dart ({u}, {v}) used twice")));
                }
            }
        }
        let mut rotation = Vec::with_capacity(n);
        for (v, map) in succ.iter().enumerate() {
            let Some(&start) = map.keys().min() else {
                rotation.push(Vec::new());
                continue;
            };
            let mut order = vec![start];
            let mut cur = start;
            loop {
                let next = *map
                    .get(&cur)
                    .ok_or_else(|| Error::Structural(format!("open corner at vertex {v}")))?;
                if next == start {
                    break;
                }
                if order.len() > map.len() {
                    return Err(Error::Structural(format!("corner cycle broken at {v}")));
                }
                order.push(next);
                cur = next;
            }
            if order.len() != map.len() {
                return Err(Error::Structural(format!(
                    "faces around vertex {v} do not form a single disk"
                )));
            }
            rotation.push(order);
        }
        let g = Self::from_rotation(rotation)?;
        let traced = g.faces()?;
        if traced.len() != faces.len() {
            return Err(Error::Structural("face list does not close up".into()));
        }
        Ok(g)
    }

    /// Straight-line drawing; the rotation is read off the coordinates.
    pub fn from_coords(coords: Vec<[f64; 2]>, edges: &[Edge]) -> Result<Self> {
        let n = coords.len();
        let mut rotation = vec![Vec::new(); n];
        for e in edges {
            if e.0 >= n || e.1 >= n || e.0 == e.1 {
                return invalid(format!("bad edge {e:?}"));
            }
            rotation[e.0].push(e.1);
            rotation[e.1].push(e.0);
        }
        for (v, list) in rotation.iter_mut().enumerate() {
            let [x, y] = coords[v];
            // Clockwise means decreasing angle.
            list.sort_by(|&a, &b| {
                let ta = (coords[a][1] - y).atan2(coords[a][0] - x);
                let tb = (coords[b][1] - y).atan2(coords[b][0] - x);
                tb.partial_cmp(&ta).unwrap()
            });
        }
        let mut g = Self::from_rotation(rotation)?;
        g.coords = Some(coords);
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.rotation.len()
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.rotation[a].contains(&b)
    }

    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for (v, list) in self.rotation.iter().enumerate() {
            for &u in list {
                if v < u {
                    out.push(Edge(v, u));
                }
            }
        }
        out.sort();
        out
    }

    pub fn num_edges(&self) -> usize {
        self.rotation.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &u in &self.rotation[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == n
    }

    /// Traces all faces. Fails unless the graph is connected and the
    /// rotation has genus zero.
    pub fn faces(&self) -> Result<Vec<Vec<usize>>> {
        if !self.is_connected() {
            return Err(Error::Structural("graph is not connected".into()));
        }
        let n = self.n();
        let pos: Vec<HashMap<usize, usize>> = self
            .rotation
            .iter()
            .map(|l| l.iter().enumerate().map(|(i, &u)| (u, i)).collect())
            .collect();
        let mut used: Vec<Vec<bool>> = self.rotation.iter().map(|l| vec![false; l.len()]).collect();
        let mut faces = Vec::new();
        for v in 0..n {
            for i in 0..self.rotation[v].len() {
                if used[v][i] {
                    continue;
                }
                let mut face = Vec::new();
                let (mut a, mut ai) = (v, i);
                while !used[a][ai] {
                    used[a][ai] = true;
                    face.push(a);
                    let b = self.rotation[a][ai];
                    let k = pos[b][&a];
                    let bi = (k + 1) % self.rotation[b].len();
                    a = b;
                    ai = bi;
                }
                faces.push(face);
            }
        }
        let (vn, en, fn_) = (n as i64, self.num_edges() as i64, faces.len() as i64);
        if n > 1 && vn - en + fn_ != 2 {
            return Err(Error::Structural(format!(
                "rotation is not planar: V - E + F = {}",
                vn - en + fn_
            )));
        }
        Ok(faces)
    }

    /// Adds a vertex adjacent to all `corners` of a face traced in library
    /// order, keeping the embedding planar. Returns the new vertex id.
    pub fn insert_hub(&mut self, face: &[usize]) -> usize {
        let h = self.n();
        let k = face.len();
        let mut hub_rot = Vec::with_capacity(k);
        for i in 0..k {
            let (u, v, w) = (face[(i + k - 1) % k], face[i], face[(i + 1) % k]);
            // Dart u -> v -> w in the face: at v, w follows u clockwise.
            // The hub goes between u and w.
            let list = &mut self.rotation[v];
            let pu = list.iter().position(|&x| x == u).expect("face corner");
            debug_assert_eq!(list[(pu + 1) % list.len()], w);
            list.insert(pu + 1, h);
            hub_rot.push(v);
        }
        // Around the hub the corners appear in reverse face order.
        hub_rot.reverse();
        self.rotation.push(hub_rot);
        if let Some(c) = self.coords.as_mut() {
            let (mut x, mut y) = (0.0, 0.0);
            for &v in face {
                x += c[v][0];
                y += c[v][1];
            }
            c.push([x / k as f64, y / k as f64]);
        }
        h
    }
}

/// Convenience for callers that work with unordered pairs.
pub fn edge_set(edges: &[Edge]) -> HashSet<Edge> {
    edges.iter().copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mop_rejects_crossing_diagonals() {
        assert!(CyclicMop::new(4, [(0, 2), (1, 3)]).is_err());
        assert!(CyclicMop::new(5, [(0, 2), (1, 3)]).is_err());
        assert!(CyclicMop::new(5, [(0, 2), (0, 3)]).is_ok());
    }

    #[test]
    fn triangle_has_two_faces() {
        let g = CyclicMop::new(3, []).unwrap().to_plane_graph();
        let f = g.faces().unwrap();
        assert_eq!(f.len(), 2);
        assert!(f.iter().all(|x| x.len() == 3));
    }

    #[test]
    fn hexagon_mop_faces() {
        let g = CyclicMop::new(6, [(0, 2), (0, 3), (0, 4)])
            .unwrap()
            .to_plane_graph();
        let f = g.faces().unwrap();
        assert_eq!(f.len(), 5);
        assert_eq!(f.iter().filter(|x| x.len() == 3).count(), 4);
        assert_eq!(f.iter().filter(|x| x.len() == 6).count(), 1);
    }

    #[test]
    fn four_cycle_with_chord() {
        let coords = vec![[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]];
        let edges: Vec<Edge> = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]
            .into_iter()
            .map(Edge::from)
            .collect();
        let g = PlaneGraph::from_coords(coords, &edges).unwrap();
        assert_eq!(g.faces().unwrap().len(), 3);
    }

    #[test]
    fn from_faces_round_trip() {
        let g = CyclicMop::new(6, [(0, 2), (2, 4), (0, 4)])
            .unwrap()
            .to_plane_graph();
        let faces = g.faces().unwrap();
        let h = PlaneGraph::from_faces(6, &faces).unwrap();
        let mut a = h.faces().unwrap();
        let mut b = faces.clone();
        for f in a.iter_mut().chain(b.iter_mut()) {
            let m = f
                .iter()
                .position(|&x| x == *f.iter().min().unwrap())
                .unwrap();
            f.rotate_left(m);
        }
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn non_planar_rotation_is_rejected() {
        // K4 with a twisted rotation at one vertex has genus one.
        let rot = vec![vec![1, 2, 3], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2]];
        let g = PlaneGraph::from_rotation(rot).unwrap();
        assert!(g.faces().is_err());
    }

    #[test]
    fn hub_insertion_triangulates_face() {
        let mut g = CyclicMop::new(5, [(0, 2), (0, 3)])
            .unwrap()
            .to_plane_graph();
        let outer = g
            .faces()
            .unwrap()
            .into_iter()
            .find(|f| f.len() == 5)
            .unwrap();
        g.insert_hub(&outer);
        let f = g.faces().unwrap();
        assert!(f.iter().all(|x| x.len() == 3));
        assert_eq!(f.len(), 8);
    }
}
