use paraug::reduction::{minimum_t_join, odd_vertices, tree_t_join, triangle_sparse_t_join};
use paraug::Edge;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random connected graph: a random tree plus extra edges, at most
/// `max_m` edges in total.
fn random_graph(rng: &mut ChaCha8Rng, n: usize, max_m: usize) -> Vec<Edge> {
    let mut es: Vec<Edge> = (1..n).map(|v| Edge::new(v, rng.gen_range(0..v))).collect();
    let extra = rng.gen_range(0..=max_m.saturating_sub(es.len()));
    for _ in 0..extra {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let e = Edge::new(a, b);
        if a != b && !es.contains(&e) {
            es.push(e);
        }
    }
    es
}

/// Smallest T-join by trying every edge subset.
fn brute_force(n: usize, es: &[Edge], t: &[usize]) -> usize {
    let target: u32 = t.iter().map(|&v| 1u32 << v).fold(0, |a, b| a ^ b);
    let masks: Vec<u32> = es.iter().map(|e| 1 << e.0 | 1 << e.1).collect();
    assert!(n <= 32);
    let mut best = usize::MAX;
    for s in 0u32..1 << es.len() {
        let mut odd = 0;
        let mut bits = s;
        while bits != 0 {
            odd ^= masks[bits.trailing_zeros() as usize];
            bits &= bits - 1;
        }
        if odd == target {
            best = best.min(s.count_ones() as usize);
        }
    }
    best
}

fn random_t(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut t: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
    if t.len() % 2 == 1 {
        t.pop();
    }
    t
}

#[test]
fn matches_subset_search() {
    for seed in 0..200u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(2..=12);
        let es = random_graph(&mut rng, n, 18);
        let t = random_t(&mut rng, n);
        let j = minimum_t_join(n, &es, &t).unwrap();
        assert_eq!(odd_vertices(n, &j), t, "seed {seed}");
        assert!(j.iter().all(|e| es.contains(e)));
        assert_eq!(j.len(), brute_force(n, &es, &t), "seed {seed}");
    }
}

#[test]
fn odd_t_is_rejected() {
    assert!(minimum_t_join(3, &[Edge(0, 1), Edge(1, 2)], &[0, 1, 2]).is_err());
}

/// Triangulated disk: a fan over a convex polygon plus the outer face.
fn fan_faces(n: usize) -> Vec<Vec<usize>> {
    let mut f: Vec<Vec<usize>> = (1..n - 1).map(|i| vec![0, i, i + 1]).collect();
    f.push((0..n).rev().collect());
    f
}

proptest! {
    #[test]
    fn tree_join_parity(seed in any::<u64>(), n in 2usize..40) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let es = random_graph(&mut rng, n, 3 * n);
        let t = random_t(&mut rng, n);
        let j = tree_t_join(n, &es, &t).unwrap();
        prop_assert_eq!(odd_vertices(n, &j), t);
    }

    #[test]
    fn joins_use_one_edge_per_triangle(seed in any::<u64>(), n in 4usize..60) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let faces = fan_faces(n);
        let t = random_t(&mut rng, n);
        let j = triangle_sparse_t_join(n, &faces, &t).unwrap();
        prop_assert_eq!(odd_vertices(n, &j), t);
        for f in faces.iter().filter(|f| f.len() == 3) {
            let k = (0..3).filter(|&i| j.contains(&Edge::new(f[i], f[(i + 1) % 3]))).count();
            prop_assert!(k <= 1);
        }
    }
}
