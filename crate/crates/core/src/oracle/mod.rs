//! Exhaustive ground-truth solvers.

mod pentagon;
pub(crate) mod search;

use std::collections::HashMap;

use crate::chords::interleave_positions;
use crate::error::{Error, Result};
use crate::geometry::{segments_conflict, GeometricGraph};
use crate::graph::{Augmentation, CyclicMop, Edge, ParityColoring, PlaneGraph};

pub use pentagon::{
    max_fixable_reds, max_fixable_reds_within, pentagon_instance, PentagonInstance,
};
use search::{solve, Goal, Need, Problem};

/// Limits for the exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_vertices: usize,
    pub max_candidate_edges: usize,
    /// Backtracking nodes before giving up.
    pub node_limit: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_vertices: 64,
            max_candidate_edges: 512,
            node_limit: 200_000_000,
        }
    }
}

impl OracleBudget {
    fn admit(&self, n: usize, cands: usize) -> Result<()> {
        if n > self.max_vertices {
            return Err(Error::BudgetExceeded(format!(
                "{n} vertices exceed the limit of {}",
                self.max_vertices
            )));
        }
        if cands > self.max_candidate_edges {
            return Err(Error::BudgetExceeded(format!(
                "{cands} candidate edges exceed the limit of {}",
                self.max_candidate_edges
            )));
        }
        Ok(())
    }
}

/// Optimum found by an exhaustive search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleOptimum {
    pub size: usize,
    pub augmentation: Augmentation,
    /// Number of optimal augmentations, capped at [`OPTIMA_CAP`].
    pub optima: u64,
}

pub const OPTIMA_CAP: u64 = 1_000_000;

fn needs(col: &ParityColoring) -> Vec<Need> {
    (0..col.len())
        .map(|v| if col.is_red(v) { Need::Odd } else { Need::Even })
        .collect()
}

/// Exact minimum augmentation of a cyclic MOP by exhaustive search over
/// non-interleaving sets of non-edges.
pub fn oracle_mop_min(
    g: &CyclicMop,
    col: &ParityColoring,
    budget: &OracleBudget,
) -> Result<Option<OracleOptimum>> {
    let n = g.n();
    let mut cands = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if !g.is_edge(a, b) {
                cands.push(Edge(a, b));
            }
        }
    }
    budget.admit(n, cands.len())?;
    if col.red_count() % 2 == 1 {
        return Ok(None);
    }
    let p = Problem::new(n, cands.clone(), needs(col), |i, j| {
        let (x, y) = (cands[i], cands[j]);
        interleave_positions(x.0, x.1, y.0, y.1)
    });
    let out = solve(
        &p,
        Goal::Minimum {
            count_cap: OPTIMA_CAP,
        },
        budget.node_limit,
    )?;
    Ok(out.best.map(|edges| OracleOptimum {
        size: edges.len(),
        augmentation: Augmentation::new(edges),
        optima: out.optima,
    }))
}

/// Exact minimum straight-line augmentation of a geometric graph.
pub fn oracle_geometric_min(
    g: &GeometricGraph,
    budget: &OracleBudget,
) -> Result<Option<OracleOptimum>> {
    g.check_nondegenerate()?;
    let cands = g.candidate_edges();
    budget.admit(g.n(), cands.len())?;
    if g.colors.red_count() % 2 == 1 {
        return Ok(None);
    }
    let pts = &g.points;
    let p = Problem::new(g.n(), cands.clone(), needs(&g.colors), |i, j| {
        let (x, y) = (cands[i], cands[j]);
        segments_conflict(&pts[x.0], &pts[x.1], &pts[y.0], &pts[y.1])
    });
    let out = solve(
        &p,
        Goal::Minimum {
            count_cap: OPTIMA_CAP,
        },
        budget.node_limit,
    )?;
    Ok(out.best.map(|edges| OracleOptimum {
        size: edges.len(),
        augmentation: Augmentation::new(edges),
        optima: out.optima,
    }))
}

/// All inclusion-minimal valid augmentations using chords of the faces in
/// `region` only.
pub fn enumerate_augmentations(
    g: &PlaneGraph,
    col: &ParityColoring,
    region: &[usize],
    budget: &OracleBudget,
) -> Result<Vec<Augmentation>> {
    enumerate_augmentations_with(g, col, region, &[], budget)
}

/// As [`enumerate_augmentations`], with `free` vertices whose parity is not
/// constrained. Used to certify gadgets in isolation, where boundary
/// vertices are fixed or left open by the surrounding construction.
pub fn enumerate_augmentations_with(
    g: &PlaneGraph,
    col: &ParityColoring,
    region: &[usize],
    free: &[usize],
    budget: &OracleBudget,
) -> Result<Vec<Augmentation>> {
    let faces = g.faces()?;
    let mut cands: Vec<(Edge, usize)> = Vec::new();
    let mut pos: Vec<HashMap<usize, usize>> = Vec::new();
    for &f in region {
        let face = faces
            .get(f)
            .ok_or_else(|| Error::InvalidInput(format!("face {f} does not exist")))?;
        let map: HashMap<usize, usize> = face.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        if map.len() != face.len() {
            return Err(Error::InvalidInput(format!(
                "face {f} is not a simple cycle"
            )));
        }
        for (i, &a) in face.iter().enumerate() {
            for &b in &face[i + 1..] {
                if !g.has_edge(a, b) {
                    cands.push((Edge::new(a, b), pos.len()));
                }
            }
        }
        pos.push(map);
    }
    budget.admit(g.n(), cands.len())?;
    let mut need = needs(col);
    for &v in free {
        need[v] = Need::Free;
    }
    let edges: Vec<Edge> = cands.iter().map(|c| c.0).collect();
    let p = Problem::new(g.n(), edges, need, |i, j| {
        let ((x, fx), (y, fy)) = (cands[i], cands[j]);
        if x == y {
            return true;
        }
        if fx != fy {
            return false;
        }
        let m = &pos[fx];
        interleave_positions(m[&x.0], m[&x.1], m[&y.0], m[&y.1])
    });
    let out = solve(&p, Goal::AllMinimal, budget.node_limit)?;
    let face_of: HashMap<Edge, usize> = cands.iter().map(|&(e, k)| (e, region[k])).collect();
    // Placement: the same pair may be a chord of two region faces; the
    // search treats those as distinct candidates, so recover by index.
    let mut result = Vec::new();
    for set in out.all {
        let pairs = set.iter().map(|&e| (e, face_of[&e])).collect();
        result.push(Augmentation::placed(pairs));
    }
    result.sort_by(|a, b| a.edges.cmp(&b.edges));
    Ok(result)
}
