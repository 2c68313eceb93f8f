//! Random and exhaustive MOP corpora.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{CyclicMop, ParityColoring};

/// Uniformly random triangulation of the convex `n`-gon.
///
/// A random arrangement of `n - 2` internal nodes and `n - 1` leaves is
/// rotated into a valid preorder by the cycle lemma, giving a uniform full
/// binary tree, which maps to a triangulation.
pub fn random_mop<R: Rng>(n: usize, rng: &mut R) -> CyclicMop {
    assert!(n >= 3, "a MOP needs at least 3 vertices");
    let k = n - 2;
    let mut seq: Vec<bool> = std::iter::repeat(true)
        .take(k)
        .chain(std::iter::repeat(false).take(k + 1))
        .collect();
    seq.shuffle(rng);
    let (mut sum, mut min, mut at) = (0i64, i64::MAX, 0);
    for (i, &b) in seq.iter().enumerate() {
        sum += if b { 1 } else { -1 };
        if sum < min {
            min = sum;
            at = i + 1;
        }
    }
    let total = seq.len();
    seq.rotate_left(at % total);

    // End of each subtree in preorder, filled right to left.
    let len = seq.len();
    let mut end = vec![0usize; len];
    for node in (0..len).rev() {
        end[node] = if seq[node] {
            end[end[node + 1]]
        } else {
            node + 1
        };
    }
    let mut prefix = vec![0usize; len + 1];
    for i in 0..len {
        prefix[i + 1] = prefix[i] + seq[i] as usize;
    }
    let internal_size = |node: usize| prefix[end[node]] - prefix[node];

    let mut diagonals = Vec::with_capacity(n - 3);
    let mut jobs = vec![(0usize, 0usize, n - 1)];
    while let Some((node, lo, hi)) = jobs.pop() {
        if !seq[node] {
            continue;
        }
        let left = node + 1;
        let right = end[left];
        let left_size = internal_size(left);
        let apex = lo + left_size + 1;
        if apex - lo > 1 {
            diagonals.push((lo, apex));
        }
        if hi - apex > 1 {
            diagonals.push((apex, hi));
        }
        jobs.push((left, lo, apex));
        jobs.push((right, apex, hi));
    }
    CyclicMop::new(n, diagonals).expect("tree encodes a triangulation")
}

/// Coloring with each vertex red with probability one half, adjusted to an
/// even red count.
pub fn random_even_coloring<R: Rng>(n: usize, rng: &mut R) -> ParityColoring {
    let mut red: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    if red.iter().filter(|&&r| r).count() % 2 == 1 {
        let v = rng.gen_range(0..n);
        red[v] = !red[v];
    }
    ParityColoring::from_bools(red)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Seeded random MOP with a random even coloring.
pub fn random_instance(n: usize, seed: u64) -> (CyclicMop, ParityColoring) {
    let mut r = rng(seed);
    let g = random_mop(n, &mut r);
    let c = random_even_coloring(n, &mut r);
    (g, c)
}

/// Every triangulation of the convex `n`-gon.
pub fn all_mops(n: usize) -> Vec<CyclicMop> {
    fn rec(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
        if hi - lo < 2 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for k in lo + 1..hi {
            let left = rec(lo, k);
            let right = rec(k, hi);
            for l in &left {
                for r in &right {
                    let mut d = l.clone();
                    d.extend_from_slice(r);
                    if k - lo > 1 {
                        d.push((lo, k));
                    }
                    if hi - k > 1 {
                        d.push((k, hi));
                    }
                    out.push(d);
                }
            }
        }
        out
    }
    rec(0, n - 1)
        .into_iter()
        .map(|d| CyclicMop::new(n, d).expect("valid triangulation"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_counts() {
        let c: Vec<usize> = (3..=9).map(|n| all_mops(n).len()).collect();
        assert_eq!(c, vec![1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn random_mops_are_valid() {
        let mut r = rng(3);
        for n in 3..40 {
            let g = random_mop(n, &mut r);
            assert_eq!(g.diagonals().len(), n - 3);
        }
    }

    #[test]
    fn random_mop_is_roughly_uniform() {
        // 14 triangulations of the hexagon, each should show up.
        let mut r = rng(11);
        let mut seen = std::collections::HashMap::new();
        for _ in 0..7000 {
            let g = random_mop(6, &mut r);
            *seen.entry(g.diagonals().to_vec()).or_insert(0usize) += 1;
        }
        assert_eq!(seen.len(), 14);
        assert!(seen.values().all(|&c| (350..650).contains(&c)), "{seen:?}");
    }
}
