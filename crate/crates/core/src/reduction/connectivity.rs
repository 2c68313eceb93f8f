//! Vertex connectivity at least three.

use crate::graph::PlaneGraph;

/// True when no set of at most two vertices disconnects `g`. Removes each
/// vertex in turn and looks for an articulation point in the rest.
pub fn three_connectivity_check(g: &PlaneGraph) -> bool {
    let n = g.n();
    if n < 4 {
        return false;
    }
    (0..n).all(|x| biconnected_without(g, x))
}

/// Whether `g - skip` is connected with no articulation point.
fn biconnected_without(g: &PlaneGraph, skip: usize) -> bool {
    let n = g.n();
    let root = if skip == 0 { 1 } else { 0 };
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    // Iterative DFS: (vertex, parent, next neighbor index).
    let mut stack = vec![(root, usize::MAX, 0usize)];
    disc[root] = 0;
    low[root] = 0;
    time += 1;
    let mut root_children = 0;
    while let Some(&mut (v, parent, ref mut i)) = stack.last_mut() {
        let nb = g.neighbors(v);
        if *i < nb.len() {
            let u = nb[*i];
            *i += 1;
            if u == skip || u == parent {
                continue;
            }
            if disc[u] == usize::MAX {
                disc[u] = time;
                low[u] = time;
                time += 1;
                if v == root {
                    root_children += 1;
                }
                stack.push((u, v, 0));
            } else {
                low[v] = low[v].min(disc[u]);
            }
        } else {
            stack.pop();
            if parent != usize::MAX {
                low[parent] = low[parent].min(low[v]);
                if parent != root && low[v] >= disc[parent] {
                    return false;
                }
            }
        }
    }
    if root_children > 1 {
        return false;
    }
    time == n - 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::CyclicMop;

    #[test]
    fn k4_and_path() {
        let k4 = PlaneGraph::from_rotation(vec![
            vec![1, 2, 3],
            vec![0, 3, 2],
            vec![0, 1, 3],
            vec![0, 2, 1],
        ])
        .unwrap();
        assert!(three_connectivity_check(&k4));
        let path =
            PlaneGraph::from_rotation(vec![vec![1], vec![0, 2], vec![1, 3], vec![2]]).unwrap();
        assert!(!three_connectivity_check(&path));
        // Outerplanar graphs have degree-two vertices.
        assert!(!three_connectivity_check(
            &CyclicMop::fan(6).unwrap().to_plane_graph()
        ));
    }
}
