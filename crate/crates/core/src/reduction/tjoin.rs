//! T-joins in unit-weight graphs.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::Edge;

/// Largest `|T|` handled by the exact matching step.
pub const MAX_EXACT_T: usize = 22;

fn adjacency(n: usize, edges: &[Edge]) -> Result<Vec<Vec<usize>>> {
    let mut adj = vec![Vec::new(); n];
    for e in edges {
        if e.0 >= n || e.1 >= n {
            return Err(Error::InvalidInput(format!("edge {e:?} out of range")));
        }
        adj[e.0].push(e.1);
        adj[e.1].push(e.0);
    }
    Ok(adj)
}

fn bfs(adj: &[Vec<usize>], s: usize) -> (Vec<u32>, Vec<usize>) {
    let n = adj.len();
    let mut dist = vec![u32::MAX; n];
    let mut par = vec![usize::MAX; n];
    dist[s] = 0;
    let mut q = VecDeque::from([s]);
    while let Some(v) = q.pop_front() {
        for &u in &adj[v] {
            if dist[u] == u32::MAX {
                dist[u] = dist[v] + 1;
                par[u] = v;
                q.push_back(u);
            }
        }
    }
    (dist, par)
}

fn check_t(n: usize, t: &[usize]) -> Result<Vec<usize>> {
    let mut t = t.to_vec();
    t.sort();
    t.dedup();
    if t.iter().any(|&v| v >= n) {
        return Err(Error::InvalidInput("T has a vertex out of range".into()));
    }
    if t.len() % 2 == 1 {
        return Err(Error::InvalidInput(format!("|T| = {} is odd", t.len())));
    }
    Ok(t)
}

/// Minimum-size edge set whose odd-degree vertices are exactly `t`.
///
/// Pairs `t` by a minimum perfect matching under BFS distances (exact
/// subset DP) and takes the symmetric difference of the shortest paths.
pub fn minimum_t_join(n: usize, edges: &[Edge], t: &[usize]) -> Result<Vec<Edge>> {
    let t = check_t(n, t)?;
    let k = t.len();
    if k == 0 {
        return Ok(Vec::new());
    }
    if k > MAX_EXACT_T {
        return Err(Error::BudgetExceeded(format!(
            "|T| = {k} exceeds the exact limit of {MAX_EXACT_T}"
        )));
    }
    let adj = adjacency(n, edges)?;
    let trees: Vec<(Vec<u32>, Vec<usize>)> = t.iter().map(|&s| bfs(&adj, s)).collect();
    for (i, (dist, _)) in trees.iter().enumerate() {
        if let Some(&u) = t.iter().find(|&&u| dist[u] == u32::MAX) {
            return Err(Error::InvalidInput(format!(
                "T vertices {} and {u} are disconnected",
                t[i]
            )));
        }
    }
    let full = (1usize << k) - 1;
    let mut dp = vec![u32::MAX; 1 << k];
    let mut choice = vec![0u8; 1 << k];
    dp[0] = 0;
    for mask in 1..=full {
        if mask.count_ones() % 2 == 1 {
            continue;
        }
        let i = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << i);
        let mut bits = rest;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let prev = dp[rest & !(1 << j)];
            if prev == u32::MAX {
                continue;
            }
            let c = prev + trees[i].0[t[j]];
            if c < dp[mask] {
                dp[mask] = c;
                choice[mask] = j as u8;
            }
        }
    }
    let mut join: HashSet<Edge> = HashSet::new();
    let mut mask = full;
    while mask != 0 {
        let i = mask.trailing_zeros() as usize;
        let j = choice[mask] as usize;
        let par = &trees[i].1;
        let mut v = t[j];
        while v != t[i] {
            let e = Edge::new(v, par[v]);
            if !join.remove(&e) {
                join.insert(e);
            }
            v = par[v];
        }
        mask &= !(1 << i) & !(1 << j);
    }
    let mut out: Vec<Edge> = join.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Some T-join: the unique one inside a BFS spanning tree.
pub fn tree_t_join(n: usize, edges: &[Edge], t: &[usize]) -> Result<Vec<Edge>> {
    let t = check_t(n, t)?;
    if t.is_empty() {
        return Ok(Vec::new());
    }
    let adj = adjacency(n, edges)?;
    let root = t[0];
    let (dist, par) = bfs(&adj, root);
    if t.iter().any(|&v| dist[v] == u32::MAX) {
        return Err(Error::InvalidInput("T is not within one component".into()));
    }
    let mut order: Vec<usize> = (0..n).filter(|&v| dist[v] != u32::MAX).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(dist[v]));
    let mut odd = vec![false; n];
    for &v in &t {
        odd[v] = true;
    }
    let mut out = Vec::new();
    for v in order {
        if v != root && odd[v] {
            out.push(Edge::new(v, par[v]));
            odd[par[v]] = !odd[par[v]];
        }
    }
    out.sort();
    Ok(out)
}

/// Odd-degree vertices of an edge set.
pub fn odd_vertices(n: usize, edges: &[Edge]) -> Vec<usize> {
    let mut deg = vec![0usize; n];
    for e in edges {
        deg[e.0] += 1;
        deg[e.1] += 1;
    }
    (0..n).filter(|&v| deg[v] % 2 == 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_join() {
        let e = [Edge(0, 1), Edge(1, 2)];
        assert_eq!(minimum_t_join(3, &e, &[0, 2]).unwrap(), e.to_vec());
        assert!(minimum_t_join(3, &e, &[]).unwrap().is_empty());
        assert!(minimum_t_join(3, &e, &[0]).is_err());
    }

    #[test]
    fn tree_join_has_right_parity() {
        let e = [Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 0), Edge(0, 2)];
        let j = tree_t_join(4, &e, &[1, 3]).unwrap();
        assert_eq!(odd_vertices(4, &j), vec![1, 3]);
    }
}
