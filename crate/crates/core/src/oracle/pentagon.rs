//! Rows of empty convex red pentagons in a triangulated blue frame.
//!
//! Each pentagon sits in a square cell; the region between pentagon and
//! cell is triangulated greedily, so a pentagon vertex sees nothing beyond
//! its own pentagon.

use std::collections::HashSet;

use super::OracleBudget;
use crate::error::{Error, Result};
use crate::geometry::{segments_conflict, GeometricGraph, Point};
use crate::graph::{Edge, ParityColoring};

const CELL: i64 = 300;
const RADIUS: f64 = 100.0;

#[derive(Clone, Debug)]
pub struct PentagonInstance {
    pub graph: GeometricGraph,
    /// Vertex ids of each pentagon, in convex order.
    pub blocks: Vec<[usize; 5]>,
    /// All vertices, frame included.
    pub n: usize,
    pub red_count: usize,
    /// `2n/5` with `n` counting every vertex.
    pub bound_all: f64,
    /// `2n/5` with `n` counting only the pentagon vertices.
    pub bound_red: f64,
}

/// Builds `k` pentagons and certifies that the only addable segments are
/// pentagon diagonals.
pub fn pentagon_instance(k: usize) -> Result<PentagonInstance> {
    if k == 0 {
        return Err(Error::InvalidInput("need at least one pentagon".into()));
    }
    let mut points = Vec::new();
    let mut blocks = Vec::new();
    let mut edges = Vec::new();
    for b in 0..k {
        let cx = CELL * b as i64 + CELL / 2;
        let cy = CELL / 2;
        let base = points.len();
        for j in 0..5 {
            let t = std::f64::consts::FRAC_PI_2 + j as f64 * std::f64::consts::TAU / 5.0;
            let x = cx + (RADIUS * t.cos()).round() as i64;
            let y = cy + (RADIUS * t.sin()).round() as i64;
            points.push(Point::int(x, y));
        }
        blocks.push([base, base + 1, base + 2, base + 3, base + 4]);
        for j in 0..5 {
            edges.push(Edge::new(base + j, base + (j + 1) % 5));
        }
    }
    let reds = points.len();
    let corner = |i: usize, top: bool| reds + 2 * i + top as usize;
    for i in 0..=k {
        points.push(Point::int(CELL * i as i64, 0));
        points.push(Point::int(CELL * i as i64, CELL));
        edges.push(Edge::new(corner(i, false), corner(i, true)));
        if i < k {
            edges.push(Edge::new(corner(i, false), corner(i + 1, false)));
            edges.push(Edge::new(corner(i, true), corner(i + 1, true)));
        }
    }
    let n = points.len();
    let block_of = |v: usize| (v < reds).then_some(v / 5);

    // Shortest first, skipping pentagon diagonals.
    let mut pairs: Vec<(BigLen, Edge)> = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if block_of(a).is_some() && block_of(a) == block_of(b) {
                continue;
            }
            pairs.push((BigLen::of(&points[a], &points[b]), Edge(a, b)));
        }
    }
    pairs.sort();
    let probe = GeometricGraph::new(points.clone(), Vec::new(), ParityColoring::all_blue(n))?;
    for (_, e) in pairs {
        if edges.contains(&e) || probe.vertex_on_segment(e).is_some() {
            continue;
        }
        let (p, q) = (&points[e.0], &points[e.1]);
        if edges
            .iter()
            .all(|f| !segments_conflict(p, q, &points[f.0], &points[f.1]))
        {
            edges.push(e);
        }
    }

    let colors = ParityColoring::from_red(n, 0..reds)?;
    let graph = GeometricGraph::new(points, edges, colors)?;
    graph.check_nondegenerate()?;
    let expected: HashSet<Edge> = blocks
        .iter()
        .flat_map(|b| [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)].map(|(x, y)| Edge::new(b[x], b[y])))
        .collect();
    let found: HashSet<Edge> = graph.candidate_edges().into_iter().collect();
    if found != expected {
        return Err(Error::Structural(
            "frame leaves segments other than pentagon diagonals addable".into(),
        ));
    }
    Ok(PentagonInstance {
        graph,
        blocks,
        n,
        red_count: reds,
        bound_all: 2.0 * n as f64 / 5.0,
        bound_red: 2.0 * reds as f64 / 5.0,
    })
}

/// Squared length, exact.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct BigLen(num_rational::BigRational);

impl BigLen {
    fn of(a: &Point, b: &Point) -> Self {
        let dx = &a.x - &b.x;
        let dy = &a.y - &b.y;
        BigLen(&dx * &dx + &dy * &dy)
    }
}

/// Largest number of red vertices made odd by a plane augmentation that
/// keeps every blue vertex even, searching all compatible candidate sets.
pub fn max_fixable_reds(g: &GeometricGraph, budget: &OracleBudget) -> Result<usize> {
    max_fixable_reds_within(g, &(0..g.n()).collect::<Vec<_>>(), budget)
}

/// As [`max_fixable_reds`], using only candidates with both endpoints in
/// `vertices` and counting only those vertices.
pub fn max_fixable_reds_within(
    g: &GeometricGraph,
    vertices: &[usize],
    budget: &OracleBudget,
) -> Result<usize> {
    g.check_nondegenerate()?;
    let inside: HashSet<usize> = vertices.iter().copied().collect();
    let cands: Vec<Edge> = g
        .candidate_edges()
        .into_iter()
        .filter(|e| inside.contains(&e.0) && inside.contains(&e.1))
        .collect();
    budget.admit(g.n(), cands.len())?;
    let pts = &g.points;
    let clash = |x: Edge, y: Edge| segments_conflict(&pts[x.0], &pts[x.1], &pts[y.0], &pts[y.1]);

    struct Walk<'a> {
        cands: &'a [Edge],
        vertices: &'a [usize],
        colors: &'a ParityColoring,
        deg: Vec<u32>,
        chosen: Vec<Edge>,
        best: usize,
        nodes: u64,
        limit: u64,
    }
    impl Walk<'_> {
        fn go(&mut self, at: usize, clash: &dyn Fn(Edge, Edge) -> bool) -> Result<()> {
            self.nodes += 1;
            if self.nodes > self.limit {
                return Err(Error::BudgetExceeded(format!(
                    "more than {} search nodes",
                    self.limit
                )));
            }
            if at == self.cands.len() {
                let blue_ok = self
                    .vertices
                    .iter()
                    .all(|&v| self.colors.is_red(v) || self.deg[v] % 2 == 0);
                if blue_ok {
                    let fixed = self
                        .vertices
                        .iter()
                        .filter(|&&v| self.colors.is_red(v) && self.deg[v] % 2 == 1)
                        .count();
                    self.best = self.best.max(fixed);
                }
                return Ok(());
            }
            let e = self.cands[at];
            if self.chosen.iter().all(|&f| !clash(e, f)) {
                self.chosen.push(e);
                self.deg[e.0] += 1;
                self.deg[e.1] += 1;
                self.go(at + 1, clash)?;
                self.deg[e.0] -= 1;
                self.deg[e.1] -= 1;
                self.chosen.pop();
            }
            self.go(at + 1, clash)
        }
    }
    let mut w = Walk {
        cands: &cands,
        vertices,
        colors: &g.colors,
        deg: vec![0; g.n()],
        chosen: Vec::new(),
        best: 0,
        nodes: 0,
        limit: budget.node_limit,
    };
    w.go(0, &clash)?;
    Ok(w.best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_pentagon_fixes_two() {
        let inst = pentagon_instance(1).unwrap();
        assert_eq!(inst.red_count, 5);
        assert_eq!(inst.n, 9);
        let best = max_fixable_reds(&inst.graph, &OracleBudget::default()).unwrap();
        assert_eq!(best, 2);
    }
}
