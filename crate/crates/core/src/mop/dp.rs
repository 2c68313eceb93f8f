//! Minimum augmentation of a cyclic MOP by interval dynamic programming.
//!
//! `C[i, j]` is the fewest chords among vertices `i..=j` that fix every
//! vertex of the interval, and `D[i, j]` the same with the chord `(i, j)`
//! forced in. The barred variants, where an endpoint has its color
//! exchanged, are two flip flags per cell.

use crate::graph::{Augmentation, CyclicMop, Edge, ParityColoring};

pub type Cost = u32;
pub const INFINITY: Cost = Cost::MAX;

fn add(a: Cost, b: Cost) -> Cost {
    a.saturating_add(b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Step {
    None,
    /// `C`: vertex `i` gets no chord. `D`: `(i, j)` is the only chord at `i`.
    Skip,
    /// Last chord at `i` (other than `(i, j)` in `D`) goes to `k`, with the
    /// requirement of `k` on the left part set to `x`.
    Split {
        k: u32,
        x: bool,
    },
}

/// Filled `C` and `D` tables.
#[derive(Clone, Debug)]
pub struct DpTables {
    n: usize,
    base: Vec<bool>,
    c: Vec<Cost>,
    d: Vec<Cost>,
    c_step: Vec<Step>,
    d_step: Vec<Step>,
}

impl DpTables {
    fn idx(&self, i: usize, j: usize, ci: bool, cj: bool) -> usize {
        ((i * self.n + j) * 2 + ci as usize) * 2 + cj as usize
    }

    /// `C` with flip flags on the endpoints, `i < j`.
    pub fn c(&self, i: usize, j: usize, flip_i: bool, flip_j: bool) -> Cost {
        self.c[self.idx(i, j, self.base[i] ^ flip_i, self.base[j] ^ flip_j)]
    }

    /// `D` with flip flags on the endpoints, `i < j`.
    pub fn d(&self, i: usize, j: usize, flip_i: bool, flip_j: bool) -> Cost {
        self.d[self.idx(i, j, self.base[i] ^ flip_i, self.base[j] ^ flip_j)]
    }

    /// Size of a minimum augmentation, or `INFINITY`.
    pub fn answer(&self) -> Cost {
        if self.n == 1 {
            return if self.base[0] { INFINITY } else { 0 };
        }
        self.c(0, self.n - 1, false, false)
    }

    // Cells below are addressed by effective colors (true = red).

    fn cx(&self, a: usize, b: usize, ca: bool, cb: bool) -> Cost {
        if a == b {
            if cb {
                INFINITY
            } else {
                0
            }
        } else {
            self.c[self.idx(a, b, ca, cb)]
        }
    }

    fn color_after(&self, i: usize, j: usize, cj: bool) -> bool {
        if i + 1 < j {
            self.base[i + 1]
        } else {
            cj
        }
    }
}

/// Fills both tables in `O(n^3)` time.
pub fn dp_tables(g: &CyclicMop, col: &ParityColoring) -> DpTables {
    let n = g.n();
    assert_eq!(col.len(), n, "coloring size differs from the host");
    let adj = g.adjacency_matrix();
    let size = n * n * 4;
    let mut t = DpTables {
        n,
        base: col.as_slice().to_vec(),
        c: vec![INFINITY; size],
        d: vec![INFINITY; size],
        c_step: vec![Step::None; size],
        d_step: vec![Step::None; size],
    };
    for len in 1..n {
        for i in 0..n - len {
            let j = i + len;
            for ci in [false, true] {
                for cj in [false, true] {
                    let (dv, ds) = fill_d(&t, &adj, i, j, ci, cj);
                    let at = t.idx(i, j, ci, cj);
                    t.d[at] = dv;
                    t.d_step[at] = ds;
                }
            }
            for ci in [false, true] {
                for cj in [false, true] {
                    let (cv, cs) = fill_c(&t, &adj, i, j, ci, cj);
                    let at = t.idx(i, j, ci, cj);
                    t.c[at] = cv;
                    t.c_step[at] = cs;
                }
            }
        }
    }
    t
}

fn fill_c(t: &DpTables, adj: &[Vec<bool>], i: usize, j: usize, ci: bool, cj: bool) -> (Cost, Step) {
    let mut best = INFINITY;
    let mut step = Step::None;
    for k in i + 2..=j {
        if adj[i][k] {
            continue;
        }
        if k == j {
            let v = t.d[t.idx(i, j, ci, cj)];
            if v < best {
                best = v;
                step = Step::Split { k: k as u32, x: cj };
            }
            continue;
        }
        let bk = t.base[k];
        for x in [bk, !bk] {
            let v = add(t.d[t.idx(i, k, ci, x)], t.c[t.idx(k, j, bk ^ x, cj)]);
            if v < best {
                best = v;
                step = Step::Split { k: k as u32, x };
            }
        }
    }
    if !ci {
        let v = t.cx(i + 1, j, t.color_after(i, j, cj), cj);
        if v < best {
            best = v;
            step = Step::Skip;
        }
    }
    (best, step)
}

fn fill_d(t: &DpTables, adj: &[Vec<bool>], i: usize, j: usize, ci: bool, cj: bool) -> (Cost, Step) {
    if j < i + 2 || adj[i][j] {
        return (INFINITY, Step::None);
    }
    let mut best = INFINITY;
    let mut step = Step::None;
    for k in i + 2..j {
        if adj[i][k] {
            continue;
        }
        let bk = t.base[k];
        for x in [bk, !bk] {
            let v = add(
                1,
                add(t.d[t.idx(i, k, !ci, x)], t.c[t.idx(k, j, bk ^ x, !cj)]),
            );
            if v < best {
                best = v;
                step = Step::Split { k: k as u32, x };
            }
        }
    }
    if ci {
        let v = add(1, t.cx(i + 1, j, t.color_after(i, j, !cj), !cj));
        if v < best {
            best = v;
            step = Step::Skip;
        }
    }
    (best, step)
}

/// Walks the back-pointers of a finite cell.
fn reconstruct(t: &DpTables) -> Vec<Edge> {
    enum Job {
        C(usize, usize, bool, bool),
        D(usize, usize, bool, bool),
    }
    let n = t.n;
    let mut out = Vec::new();
    let mut stack = vec![Job::C(0, n - 1, t.base[0], t.base[n - 1])];
    while let Some(job) = stack.pop() {
        match job {
            Job::C(i, j, ci, cj) => {
                if i == j {
                    continue;
                }
                match t.c_step[t.idx(i, j, ci, cj)] {
                    Step::None => unreachable!("reconstructing an infinite cell"),
                    Step::Skip => stack.push(Job::C(i + 1, j, t.color_after(i, j, cj), cj)),
                    Step::Split { k, x } => {
                        let k = k as usize;
                        if k == j {
                            stack.push(Job::D(i, j, ci, cj));
                        } else {
                            stack.push(Job::D(i, k, ci, x));
                            stack.push(Job::C(k, j, t.base[k] ^ x, cj));
                        }
                    }
                }
            }
            Job::D(i, j, ci, cj) => {
                out.push(Edge(i, j));
                match t.d_step[t.idx(i, j, ci, cj)] {
                    Step::None => unreachable!("reconstructing an infinite cell"),
                    Step::Skip => stack.push(Job::C(i + 1, j, t.color_after(i, j, !cj), !cj)),
                    Step::Split { k, x } => {
                        let k = k as usize;
                        stack.push(Job::D(i, k, !ci, x));
                        stack.push(Job::C(k, j, t.base[k] ^ x, !cj));
                    }
                }
            }
        }
    }
    out
}

/// Minimum-size augmentation in the unbounded face, or `None` when the
/// instance is not augmentable. `O(n^3)` time and `O(n^2)` space.
pub fn min_augmentation_dp(g: &CyclicMop, col: &ParityColoring) -> Option<(Augmentation, usize)> {
    let t = dp_tables(g, col);
    let best = t.answer();
    if best == INFINITY {
        return None;
    }
    let edges = reconstruct(&t);
    debug_assert_eq!(edges.len(), best as usize);
    Some((Augmentation::new(edges), best as usize))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_example() {
        let g = CyclicMop::new(4, [(0, 2)]).unwrap();
        let col = ParityColoring::from_red(4, [1, 3]).unwrap();
        let (h, k) = min_augmentation_dp(&g, &col).unwrap();
        assert_eq!(k, 1);
        assert_eq!(h.edges, vec![Edge(1, 3)]);
    }

    #[test]
    fn pentagon_example() {
        let g = CyclicMop::new(5, [(0, 2), (0, 3)]).unwrap();
        let col = ParityColoring::from_red(5, [1, 4]).unwrap();
        let (h, k) = min_augmentation_dp(&g, &col).unwrap();
        assert_eq!(k, 1);
        assert_eq!(h.edges, vec![Edge(1, 4)]);
    }

    #[test]
    fn all_blue_costs_nothing() {
        let g = CyclicMop::fan(7).unwrap();
        let (h, k) = min_augmentation_dp(&g, &ParityColoring::all_blue(7)).unwrap();
        assert_eq!(k, 0);
        assert!(h.is_empty());
    }

    #[test]
    fn all_red_square_is_infeasible() {
        let g = CyclicMop::new(4, [(0, 2)]).unwrap();
        assert!(min_augmentation_dp(&g, &ParityColoring::all_red(4)).is_none());
    }

    #[test]
    fn wraparound_chord_is_never_used() {
        let g = CyclicMop::fan(6).unwrap();
        let t = dp_tables(&g, &ParityColoring::all_red(6));
        for f in [false, true] {
            for h in [false, true] {
                assert_eq!(t.d(0, 5, f, h), INFINITY);
            }
        }
    }
}
