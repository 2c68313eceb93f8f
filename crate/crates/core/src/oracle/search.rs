//! Backtracking over sets of pairwise compatible candidate edges.
//!
//! Candidates are grouped by their earlier endpoint in a vertex order that
//! puts red vertices first, so a vertex's parity is final once its group
//! is decided. Sets containing a cycle (after merging all don't-care
//! vertices into one node) are cut: removing the cycle keeps every
//! constraint, so neither they nor their supersets are minimal.

use crate::error::{Error, Result};
use crate::graph::Edge;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Need {
    Odd,
    Even,
    Free,
}

pub struct Problem {
    pub n: usize,
    pub cands: Vec<Edge>,
    /// `conflict[i]` is a bitset of candidates incompatible with `i`.
    pub conflict: Vec<Vec<u64>>,
    pub need: Vec<Need>,
}

impl Problem {
    pub fn new(
        n: usize,
        cands: Vec<Edge>,
        need: Vec<Need>,
        clash: impl Fn(usize, usize) -> bool,
    ) -> Self {
        let m = cands.len();
        let words = m.div_ceil(64).max(1);
        let mut conflict = vec![vec![0u64; words]; m];
        for i in 0..m {
            for j in i + 1..m {
                if clash(i, j) {
                    conflict[i][j / 64] |= 1 << (j % 64);
                    conflict[j][i / 64] |= 1 << (i % 64);
                }
            }
        }
        Problem {
            n,
            cands,
            conflict,
            need,
        }
    }
}

pub enum Goal {
    /// Minimum size, one optimum, and the number of optima up to the cap.
    Minimum { count_cap: u64 },
    /// Every minimal valid set.
    AllMinimal,
}

#[derive(Debug, Default)]
pub struct Outcome {
    pub best: Option<Vec<Edge>>,
    pub optima: u64,
    pub all: Vec<Vec<Edge>>,
}

struct State<'a> {
    p: &'a Problem,
    /// Candidate indices sorted by group.
    seq: Vec<usize>,
    /// For each position in `seq`, the vertex finalized after it, if any.
    closes: Vec<Vec<usize>>,
    deg: Vec<u32>,
    chosen: Vec<usize>,
    blocked: Vec<u32>,
    parent: Vec<usize>,
    trail: Vec<(usize, usize)>,
    free_root: usize,
    nodes: u64,
    node_limit: u64,
    goal: Goal,
    out: Outcome,
}

impl<'a> State<'a> {
    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn node_of(&self, v: usize) -> usize {
        if self.p.need[v] == Need::Free {
            self.free_root
        } else {
            v
        }
    }

    fn mismatched(&self, v: usize) -> bool {
        match self.p.need[v] {
            Need::Free => false,
            Need::Odd => self.deg[v] % 2 == 0,
            Need::Even => self.deg[v] % 2 == 1,
        }
    }

    fn lower_bound(&self) -> usize {
        // Final vertices are never mismatched, so every mismatch is open.
        (0..self.p.n)
            .filter(|&v| self.mismatched(v))
            .count()
            .div_ceil(2)
    }

    fn run(&mut self, pos: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.node_limit {
            return Err(Error::BudgetExceeded(format!(
                "more than {} search nodes",
                self.node_limit
            )));
        }
        if let Goal::Minimum { .. } = self.goal {
            if let Some(best) = &self.out.best {
                if self.chosen.len() + self.lower_bound() > best.len() {
                    return Ok(());
                }
            }
        }
        if pos == self.seq.len() {
            if self
                .p
                .need
                .iter()
                .enumerate()
                .any(|(v, _)| self.mismatched(v))
            {
                return Ok(());
            }
            self.record();
            return Ok(());
        }
        let c = self.seq[pos];
        let e = self.p.cands[c];
        // Include.
        if self.blocked[c] == 0 {
            let (ra, rb) = (self.find(self.node_of(e.0)), self.find(self.node_of(e.1)));
            if ra != rb {
                self.parent[ra] = rb;
                self.trail.push((ra, rb));
                self.chosen.push(c);
                self.deg[e.0] += 1;
                self.deg[e.1] += 1;
                self.mark(c, true);
                if self.closes_ok(pos) {
                    self.run(pos + 1)?;
                }
                self.mark(c, false);
                self.deg[e.0] -= 1;
                self.deg[e.1] -= 1;
                self.chosen.pop();
                let (a, _) = self.trail.pop().unwrap();
                self.parent[a] = a;
            }
        }
        // Exclude.
        if self.closes_ok(pos) {
            self.run(pos + 1)?;
        }
        Ok(())
    }

    fn closes_ok(&self, pos: usize) -> bool {
        self.closes[pos].iter().all(|&v| !self.mismatched(v))
    }

    fn mark(&mut self, c: usize, on: bool) {
        for (w, &bits) in self.p.conflict[c].iter().enumerate() {
            let mut b = bits;
            while b != 0 {
                let j = w * 64 + b.trailing_zeros() as usize;
                b &= b - 1;
                if on {
                    self.blocked[j] += 1;
                } else {
                    self.blocked[j] -= 1;
                }
            }
        }
    }

    fn record(&mut self) {
        let mut set: Vec<Edge> = self.chosen.iter().map(|&c| self.p.cands[c]).collect();
        set.sort();
        match self.goal {
            Goal::Minimum { count_cap } => {
                let better = self.out.best.as_ref().map_or(true, |b| set.len() < b.len());
                if better {
                    self.out.best = Some(set);
                    self.out.optima = 1;
                } else if self.out.best.as_ref().is_some_and(|b| b.len() == set.len()) {
                    self.out.optima = (self.out.optima + 1).min(count_cap);
                }
            }
            Goal::AllMinimal => self.out.all.push(set),
        }
    }
}

pub fn solve(p: &Problem, goal: Goal, node_limit: u64) -> Result<Outcome> {
    let n = p.n;
    let rank = |v: usize| match p.need[v] {
        Need::Odd => 0,
        Need::Even => 1,
        Need::Free => 2,
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (rank(v), v));
    let mut place = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        place[v] = i;
    }
    let mut seq: Vec<usize> = (0..p.cands.len()).collect();
    seq.sort_by_key(|&c| {
        let e = p.cands[c];
        let (a, b) = (place[e.0].min(place[e.1]), place[e.0].max(place[e.1]));
        (a, b)
    });
    // `closes[pos]` lists the vertices no candidate after `pos` touches.
    let mut closes = vec![Vec::new(); seq.len() + 1];
    let mut untouched = Vec::new();
    for v in 0..n {
        match seq.iter().rposition(|&c| p.cands[c].touches(v)) {
            Some(at) => closes[at].push(v),
            None => untouched.push(v),
        }
    }
    let mut st = State {
        p,
        seq,
        closes,
        deg: vec![0; n],
        chosen: Vec::new(),
        blocked: vec![0; p.cands.len()],
        parent: (0..=n).collect(),
        trail: Vec::new(),
        free_root: n,
        nodes: 0,
        node_limit,
        goal,
        out: Outcome::default(),
    };
    // Vertices with no candidate at all must already be satisfied.
    if untouched.iter().any(|&v| st.mismatched(v)) {
        return Ok(st.out);
    }
    st.run(0)?;
    Ok(st.out)
}
