//! Deciding augmentability of a cyclic MOP and building an augmentation
//! from a positive witness.

use crate::error::{invalid, Error, Result};
use crate::graph::{Augmentation, CyclicMop, Edge, ParityColoring};
use crate::verify::verify_augmentation;

use super::dp::min_augmentation_dp;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AugmentabilityWitness {
    /// No red vertex at all; the empty augmentation works.
    AllBlue,
    /// Condition (i): a diagonal with two blue endpoints.
    BlueDiagonal(Edge),
    /// Condition (ii): two red-blue diagonals whose endpoints alternate in
    /// color around the circle.
    NonParallelRedBlue(Edge, Edge),
    /// Condition (iii): parallel red-blue diagonals `d1 = (v_i, v_m)` and
    /// `d2 = (v_k, v_l)` and a degree-two vertex `j` with clockwise order
    /// v_i, v_j, v_k, v_l, v_m (v_l = v_m allowed).
    ParallelPlusDegreeTwo {
        d1: Edge,
        d2: Edge,
        j: usize,
    },
    NotAugmentable(Blocked),
}

impl AugmentabilityWitness {
    pub fn is_positive(&self) -> bool {
        !matches!(self, AugmentabilityWitness::NotAugmentable(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Blocked {
    OddRedCount,
    /// No condition holds. `u` is the clockwise interval `(first, last)`
    /// holding every blue endpoint of a red-blue diagonal and no red one,
    /// absent when there is no red-blue diagonal.
    NoCondition {
        u: Option<(usize, usize)>,
    },
}

fn blue_red(d: Edge, col: &ParityColoring) -> Option<(usize, usize)> {
    match (col.is_red(d.0), col.is_red(d.1)) {
        (false, true) => Some((d.0, d.1)),
        (true, false) => Some((d.1, d.0)),
        _ => None,
    }
}

/// True iff the cyclic color sequence of the endpoints of two red-blue
/// diagonals is red, red, blue, blue. Diagonals sharing an endpoint are
/// parallel.
pub fn diagonals_parallel(d1: Edge, d2: Edge, g: &CyclicMop, col: &ParityColoring) -> Result<bool> {
    for d in [d1, d2] {
        if !g.diagonals().contains(&d) {
            return invalid(format!("{d:?} is not a diagonal"));
        }
    }
    let (Some((b1, r1)), Some((b2, r2))) = (blue_red(d1, col), blue_red(d2, col)) else {
        return invalid("both diagonals must be red-blue");
    };
    if b1 == b2 || r1 == r2 {
        return Ok(true);
    }
    let mut pts = [(b1, false), (r1, true), (b2, false), (r2, true)];
    pts.sort();
    let alternating = (0..4).all(|i| pts[i].1 != pts[(i + 1) % 4].1);
    Ok(!alternating)
}

/// Decides augmentability in linear time and reports the first condition
/// that holds.
pub fn check_augmentable(g: &CyclicMop, col: &ParityColoring) -> AugmentabilityWitness {
    use AugmentabilityWitness::*;
    let n = g.n();
    assert_eq!(col.len(), n, "coloring size differs from the host");
    let reds = col.red_count();
    if reds % 2 == 1 {
        return NotAugmentable(Blocked::OddRedCount);
    }
    if reds == 0 {
        return AllBlue;
    }
    if let Some(&d) = g
        .diagonals()
        .iter()
        .find(|d| !col.is_red(d.0) && !col.is_red(d.1))
    {
        return BlueDiagonal(d);
    }
    let rb: Vec<(usize, usize)> = g
        .diagonals()
        .iter()
        .filter_map(|&d| blue_red(d, col))
        .collect();
    if rb.is_empty() {
        return NotAugmentable(Blocked::NoCondition { u: None });
    }
    if let Some((a, b)) = non_parallel_pair(n, &rb) {
        return NonParallelRedBlue(Edge::new(a.0, a.1), Edge::new(b.0, b.1));
    }
    // All red-blue diagonals are parallel: their blue endpoints form one
    // run around the circle.
    let mut mark: Vec<Option<bool>> = vec![None; n];
    for &(b, r) in &rb {
        mark[b] = Some(false);
        mark[r] = Some(true);
    }
    let start = (0..n)
        .find(|&v| mark[v] == Some(false) && mark[prev_marked(&mark, v)] == Some(true))
        .expect("blue run has a start");
    let mut end = start;
    let mut v = start;
    for _ in 0..n {
        v = (v + 1) % n;
        match mark[v] {
            Some(false) => end = v,
            Some(true) => break,
            None => {}
        }
    }
    let off = |x: usize| (x + n - start) % n;
    let span = off(end);
    let j = (1..span)
        .map(|o| (start + o) % n)
        .find(|&x| g.degree(x) == 2);
    let Some(j) = j else {
        return NotAugmentable(Blocked::NoCondition {
            u: Some((start, end)),
        });
    };
    let vi = (0..off(j))
        .rev()
        .map(|o| (start + o) % n)
        .find(|&x| mark[x] == Some(false))
        .unwrap();
    let vk = (off(j) + 1..=span)
        .map(|o| (start + o) % n)
        .find(|&x| mark[x] == Some(false))
        .unwrap();
    let vm = rb.iter().find(|&&(b, _)| b == vi).unwrap().1;
    let vl = rb.iter().find(|&&(b, _)| b == vk).unwrap().1;
    ParallelPlusDegreeTwo {
        d1: Edge::new(vi, vm),
        d2: Edge::new(vk, vl),
        j,
    }
}

fn prev_marked(mark: &[Option<bool>], v: usize) -> usize {
    let n = mark.len();
    let mut u = v;
    loop {
        u = (u + n - 1) % n;
        if mark[u].is_some() {
            return u;
        }
    }
}

/// Finds two red-blue diagonals, given as (blue, red), whose four
/// endpoints alternate in color. Linear time.
fn non_parallel_pair(n: usize, rb: &[(usize, usize)]) -> Option<((usize, usize), (usize, usize))> {
    let mut mark: Vec<Option<bool>> = vec![None; n];
    for &(b, r) in rb {
        mark[b] = Some(false);
        mark[r] = Some(true);
    }
    let seq: Vec<bool> = mark.iter().flatten().copied().collect();
    let changes = (0..seq.len())
        .filter(|&i| seq[i] != seq[(i + 1) % seq.len()])
        .count();
    if changes <= 2 {
        return None;
    }
    let (b1, r1) = rb[0];
    let off = |x: usize| (x + n - b1) % n;
    let split = off(r1);
    // Against the reference diagonal: on the side clockwise from b1 to r1 a
    // parallel diagonal meets its blue end first; on the other side its
    // red end first.
    for &(b, r) in &rb[1..] {
        if b == b1 || r == r1 {
            continue;
        }
        let near = off(b) < split;
        let bad = if near {
            off(r) < off(b)
        } else {
            off(b) < off(r)
        };
        if bad {
            return Some(((b1, r1), (b, r)));
        }
    }
    // Otherwise two diagonals on the same side are disjoint rather than
    // nested.
    let far_off = |x: usize| if x == b1 { n } else { off(x) };
    let mut near: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n + 1];
    let mut far: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n + 1];
    for (idx, &(b, r)) in rb.iter().enumerate() {
        if off(b) <= split && off(r) <= split {
            near[off(b)].push((off(r), idx));
        } else {
            far[off(r)].push((far_off(b), idx));
        }
    }
    let disjoint = |buckets: &Vec<Vec<(usize, usize)>>| {
        let mut best: Option<(usize, usize)> = None;
        for (s, bucket) in buckets.iter().enumerate() {
            for &(e, idx) in bucket {
                if let Some((be, bi)) = best {
                    if s > be {
                        return Some((bi, idx));
                    }
                }
                if best.map_or(true, |(be, _)| e < be) {
                    best = Some((e, idx));
                }
            }
        }
        None
    };
    if let Some((a, b)) = disjoint(&near).or_else(|| disjoint(&far)) {
        return Some((rb[a], rb[b]));
    }
    // Not reached for valid MOPs; kept as a safe exhaustive fallback.
    for (i, &a) in rb.iter().enumerate() {
        for &b in &rb[i + 1..] {
            let mut pts = [(a.0, false), (a.1, true), (b.0, false), (b.1, true)];
            pts.sort();
            if pts.windows(2).all(|w| w[0].0 != w[1].0)
                && (0..4).all(|k| pts[k].1 != pts[(k + 1) % 4].1)
            {
                return Some((a, b));
            }
        }
    }
    None
}

/// Vertices strictly between `a` and `b` going clockwise.
fn open_arc(n: usize, a: usize, b: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut x = (a + 1) % n;
    while x != b {
        out.push(x);
        x = (x + 1) % n;
    }
    out
}

/// Two-star construction across the cut between blue vertices `a` and `b`.
fn split_stars(n: usize, col: &ParityColoring, a: usize, b: usize) -> Vec<Edge> {
    let side_a = open_arc(n, b, a);
    let side_b = open_arc(n, a, b);
    let ra: Vec<usize> = side_a.iter().copied().filter(|&v| col.is_red(v)).collect();
    let rb: Vec<usize> = side_b.iter().copied().filter(|&v| col.is_red(v)).collect();
    if ra.is_empty() || rb.is_empty() {
        let (blue_side, reds) = if ra.is_empty() {
            (&side_a, &rb)
        } else {
            (&side_b, &ra)
        };
        if reds.is_empty() {
            return Vec::new();
        }
        let hub = *blue_side.first().expect("nonempty side");
        return reds.iter().map(|&r| Edge::new(hub, r)).collect();
    }
    let v = *ra.last().unwrap();
    let w = *rb.last().unwrap();
    let mut out: Vec<Edge> = rb
        .iter()
        .filter(|&&x| x != w)
        .map(|&x| Edge::new(v, x))
        .collect();
    out.extend(ra.iter().filter(|&&x| x != v).map(|&x| Edge::new(w, x)));
    if ra.len() % 2 == 1 {
        out.push(Edge::new(v, w));
    }
    out
}

/// Builds an augmentation from a positive witness.
///
/// The two-star construction for condition (ii) may hit a host diagonal
/// joining the two sides of the virtual blue edge; in that case the
/// minimum augmentation is returned instead.
pub fn construct_augmentation(
    g: &CyclicMop,
    col: &ParityColoring,
    w: &AugmentabilityWitness,
) -> Result<Augmentation> {
    use AugmentabilityWitness::*;
    let n = g.n();
    let bad = |m: &str| Err(Error::InvalidWitness(m.to_string()));
    let edges = match *w {
        AllBlue => {
            if col.red_count() != 0 {
                return bad("coloring has red vertices");
            }
            Vec::new()
        }
        BlueDiagonal(d) => {
            if !g.diagonals().contains(&d) || col.is_red(d.0) || col.is_red(d.1) {
                return bad("not a blue diagonal");
            }
            split_stars(n, col, d.0, d.1)
        }
        NonParallelRedBlue(d1, d2) => {
            let p = diagonals_parallel(d1, d2, g, col)
                .map_err(|e| Error::InvalidWitness(e.to_string()))?;
            if p {
                return bad("diagonals are parallel");
            }
            let (b1, _) = blue_red(d1, col).unwrap();
            let (b2, _) = blue_red(d2, col).unwrap();
            let edges = split_stars(n, col, b1, b2);
            let aug = Augmentation::new(edges);
            if verify_augmentation(g, col, &aug)?.is_valid() {
                return Ok(aug);
            }
            return min_augmentation_dp(g, col)
                .map(|(a, _)| a)
                .ok_or_else(|| Error::InvalidWitness("instance is not augmentable".into()));
        }
        ParallelPlusDegreeTwo { d1, d2, j } => {
            let ds = g.diagonals();
            let (Some((vi, vm)), Some((vk, vl))) = (blue_red(d1, col), blue_red(d2, col)) else {
                return bad("diagonals must be red-blue");
            };
            if !ds.contains(&d1) || !ds.contains(&d2) || j >= n || g.degree(j) != 2 {
                return bad("witness does not match the host");
            }
            let off = |x: usize| (x + n - vi) % n;
            if !(0 < off(j) && off(j) < off(vk) && off(vk) < off(vl) && off(vl) <= off(vm)) {
                return bad("witness vertices are out of order");
            }
            case_three(n, col, vi, j, vk)
        }
        NotAugmentable(_) => return bad("not a positive witness"),
    };
    Ok(Augmentation::new(edges))
}

fn case_three(n: usize, col: &ParityColoring, vi: usize, vj: usize, vk: usize) -> Vec<Edge> {
    let before = (vi + n - 1) % n;
    let after = (vk + 1) % n;
    let mut out = Vec::new();
    for x in open_arc(n, vi, vj) {
        if col.is_red(x) {
            out.push(Edge::new(before, x));
        }
    }
    for x in open_arc(n, vj, vk) {
        if col.is_red(x) {
            out.push(Edge::new(after, x));
        }
    }
    let mut deg = vec![0usize; n];
    for e in &out {
        deg[e.0] += 1;
        deg[e.1] += 1;
    }
    let mut rest = vec![after];
    if after != before {
        rest.extend(open_arc(n, after, before));
        rest.push(before);
    }
    for x in rest {
        if col.is_red(x) != (deg[x] % 2 == 1) {
            out.push(Edge::new(x, vj));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blue_diagonal_on_square() {
        let g = CyclicMop::new(4, [(0, 2)]).unwrap();
        let col = ParityColoring::from_red(4, [1, 3]).unwrap();
        let w = check_augmentable(&g, &col);
        assert_eq!(w, AugmentabilityWitness::BlueDiagonal(Edge(0, 2)));
        let h = construct_augmentation(&g, &col, &w).unwrap();
        assert_eq!(h.edges, vec![Edge(1, 3)]);
    }

    #[test]
    fn all_red_square_is_blocked() {
        let g = CyclicMop::new(4, [(0, 2)]).unwrap();
        let w = check_augmentable(&g, &ParityColoring::all_red(4));
        assert!(!w.is_positive());
    }

    #[test]
    fn odd_red_count_short_circuits() {
        let g = CyclicMop::fan(5).unwrap();
        let col = ParityColoring::from_red(5, [1]).unwrap();
        assert_eq!(
            check_augmentable(&g, &col),
            AugmentabilityWitness::NotAugmentable(Blocked::OddRedCount)
        );
    }

    #[test]
    fn non_parallel_witness_on_hexagon() {
        // 0 B, 2 R, 3 B, 5 R around (0,2) and (3,5); (2,5) is red.
        let g = CyclicMop::new(6, [(0, 2), (2, 5), (3, 5)]).unwrap();
        let col = ParityColoring::from_red(6, [2, 5]).unwrap();
        let w = check_augmentable(&g, &col);
        assert!(
            matches!(w, AugmentabilityWitness::NonParallelRedBlue(..)),
            "{w:?}"
        );
        let h = construct_augmentation(&g, &col, &w).unwrap();
        assert!(verify_augmentation(&g, &col, &h).unwrap().is_valid());
    }

    #[test]
    fn parallel_predicate() {
        let g = CyclicMop::new(6, [(0, 2), (2, 5), (2, 4)]).unwrap();
        // 0 blue, 2 red, 5 blue, 4 red.
        let col = ParityColoring::from_red(6, [2, 4]).unwrap();
        assert!(diagonals_parallel(Edge(0, 2), Edge(2, 5), &g, &col).unwrap());
        assert!(diagonals_parallel(Edge(0, 2), Edge(2, 4), &g, &col).is_err());
    }
}
