//! Approximate augmentations: the degree-two star and zig-zag matchings.

use std::collections::HashSet;

use crate::error::{invalid, Result};
use crate::graph::{Augmentation, CyclicMop, Edge, ParityColoring};

fn unmet(n: usize, col: &ParityColoring, edges: &[Edge]) -> Vec<usize> {
    let mut deg = vec![0usize; n];
    for e in edges {
        deg[e.0] += 1;
        deg[e.1] += 1;
    }
    (0..n)
        .filter(|&v| (deg[v] % 2 == 1) != col.is_red(v))
        .collect()
}

/// Joins the first degree-two vertex to every red vertex it is not
/// adjacent to. At most two parity constraints stay unmet.
pub fn star_all_but_two(g: &CyclicMop, col: &ParityColoring) -> (Augmentation, Vec<usize>) {
    let n = g.n();
    let center = (0..n)
        .find(|&v| g.degree(v) == 2)
        .expect("every MOP has an ear");
    let edges: Vec<Edge> = col
        .red_vertices()
        .into_iter()
        .filter(|&r| r != center && !g.is_edge(center, r))
        .map(|r| Edge::new(center, r))
        .collect();
    let missing = unmet(n, col, &edges);
    (Augmentation::new(edges), missing)
}

/// `m / 2` zig-zag Hamiltonian paths over convex positions `0..m`.
///
/// The first path is `0, 1, m-1, 2, m-2, ...`; each further path adds one
/// to every label. Together they partition the edges of `K_m`.
pub fn zigzag_decomposition(m: usize) -> Result<Vec<Vec<usize>>> {
    if m % 2 == 1 || m < 4 {
        return invalid(format!(
            "zig-zag decomposition needs an even m >= 4, got {m}"
        ));
    }
    let mut first = vec![0, 1];
    let (mut lo, mut hi) = (2, m - 1);
    while lo <= hi {
        first.push(hi);
        if lo < hi {
            first.push(lo);
        }
        lo += 1;
        hi -= 1;
    }
    Ok((0..m / 2)
        .map(|s| first.iter().map(|&v| (v + s) % m).collect())
        .collect())
}

/// The `2 * p` and `2 * p + 1` matchings are the odd- and even-numbered
/// edges of path `p`.
pub fn zigzag_matchings(m: usize) -> Result<Vec<Vec<(usize, usize)>>> {
    let paths = zigzag_decomposition(m)?;
    let mut out = Vec::with_capacity(m);
    for p in paths {
        let edges: Vec<(usize, usize)> = p.windows(2).map(|w| (w[0], w[1])).collect();
        out.push(edges.iter().step_by(2).copied().collect());
        out.push(edges.iter().skip(1).step_by(2).copied().collect());
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatchingKind {
    /// Odd-numbered edges of a zig-zag path.
    Odd,
    /// Even-numbered edges of a zig-zag path.
    Even,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZigzagResult {
    pub matching: Augmentation,
    pub unmet: Vec<usize>,
    /// Index of the chosen matching and its kind, when a decomposition was
    /// used.
    pub chosen: Option<(usize, MatchingKind)>,
}

/// Plane matching on the red vertices leaving at most four of them
/// unmatched (five when the red count is odd).
pub fn zigzag_matching(g: &CyclicMop, col: &ParityColoring) -> ZigzagResult {
    let n = g.n();
    let mut reds = col.red_vertices();
    if reds.len() % 2 == 1 {
        reds.pop();
    }
    let m = reds.len();
    let mut edges = Vec::new();
    let mut chosen = None;
    if m == 2 {
        if !g.is_edge(reds[0], reds[1]) {
            edges.push(Edge::new(reds[0], reds[1]));
        }
    } else if m >= 4 {
        let matchings = zigzag_matchings(m).expect("m is even and at least 4");
        // Host edges between reds that are not consecutive in red order.
        let blocked: HashSet<(usize, usize)> = (0..m)
            .flat_map(|a| (a + 1..m).map(move |b| (a, b)))
            .filter(|&(a, b)| b - a != 1 && !(a == 0 && b == m - 1))
            .filter(|&(a, b)| g.is_edge(reds[a], reds[b]))
            .collect();
        let hit = |&(a, b): &(usize, usize)| blocked.contains(&(a.min(b), a.max(b)));
        let idx = (0..m)
            .find(|&i| !matchings[i].iter().any(hit))
            .expect("m disjoint matchings outnumber the blocked pairs");
        let kind = if idx % 2 == 0 {
            MatchingKind::Odd
        } else {
            MatchingKind::Even
        };
        chosen = Some((idx, kind));
        for &(a, b) in &matchings[idx] {
            let (u, v) = (reds[a], reds[b]);
            if !g.is_edge(u, v) {
                edges.push(Edge::new(u, v));
            }
        }
    }
    let missing = unmet(n, col, &edges);
    ZigzagResult {
        matching: Augmentation::new(edges),
        unmet: missing,
        chosen,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_path_shape() {
        assert_eq!(zigzag_decomposition(6).unwrap()[0], vec![0, 1, 5, 2, 4, 3]);
        assert_eq!(
            zigzag_decomposition(4).unwrap(),
            vec![vec![0, 1, 3, 2], vec![1, 2, 0, 3]]
        );
    }

    #[test]
    fn odd_m_rejected() {
        assert!(zigzag_decomposition(5).is_err());
    }

    #[test]
    fn star_on_red_square() {
        let g = CyclicMop::new(4, [(0, 2)]).unwrap();
        let (h, unmet) = star_all_but_two(&g, &ParityColoring::all_red(4));
        assert_eq!(h.edges, vec![Edge(1, 3)]);
        assert_eq!(unmet, vec![0, 2]);
    }
}
