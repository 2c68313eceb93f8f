//! Planar 3-CNF formulas with an embedding of their incidence graph.
//!
//! Text format: DIMACS clauses, plus rotation lines
//!
//! ```text
//! rv <var> <clause>.<slot> ...   occurrences of a variable, clockwise
//! rc <clause> <slot> <slot> ...  slots of a clause, clockwise
//! ```
//!
//! All numbers 1-based. Missing lines default to input order.

use crate::error::{Error, Result};

/// Position of a literal: clause index and slot within the clause.
pub type Occurrence = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cnf3Instance {
    pub num_vars: usize,
    /// Signed literals, variables 1-based as in DIMACS. Exactly three per
    /// clause after padding.
    pub clauses: Vec<[i64; 3]>,
    /// Clockwise occurrences around each variable (index 0 = variable 1).
    pub var_rotation: Vec<Vec<Occurrence>>,
    /// Clockwise slot order around each clause.
    pub clause_rotation: Vec<[usize; 3]>,
}

impl Cnf3Instance {
    /// Pads short clauses and checks that the rotation is a planar
    /// embedding of a connected incidence graph.
    pub fn new(
        num_vars: usize,
        clauses: Vec<Vec<i64>>,
        var_rotation: Option<Vec<Vec<Occurrence>>>,
        clause_rotation: Option<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        if clauses.is_empty() {
            return Err(Error::InvalidInput("formula has no clauses".into()));
        }
        for (c, cl) in clauses.iter().enumerate() {
            if cl.is_empty() || cl.len() > 3 {
                return Err(Error::InvalidInput(format!(
                    "clause {} has {} literals",
                    c + 1,
                    cl.len()
                )));
            }
            for &l in cl {
                if l == 0 || l.unsigned_abs() as usize > num_vars {
                    return Err(Error::InvalidInput(format!("literal {l} out of range")));
                }
            }
        }
        let mut var_rot = match var_rotation {
            Some(r) => r,
            None => {
                let mut r = vec![Vec::new(); num_vars];
                for (c, cl) in clauses.iter().enumerate() {
                    for (s, &l) in cl.iter().enumerate() {
                        r[l.unsigned_abs() as usize - 1].push((c, s));
                    }
                }
                r
            }
        };
        let mut cl_rot: Vec<Vec<usize>> = match clause_rotation {
            Some(r) => r,
            None => clauses.iter().map(|cl| (0..cl.len()).collect()).collect(),
        };
        if var_rot.len() != num_vars || cl_rot.len() != clauses.len() {
            return Err(Error::InvalidInput(
                "rotation size does not match the formula".into(),
            ));
        }
        // Every occurrence exactly once around its variable.
        let mut expected: Vec<Vec<Occurrence>> = vec![Vec::new(); num_vars];
        for (c, cl) in clauses.iter().enumerate() {
            for (s, &l) in cl.iter().enumerate() {
                expected[l.unsigned_abs() as usize - 1].push((c, s));
            }
        }
        for v in 0..num_vars {
            let mut got = var_rot[v].clone();
            got.sort();
            if got != expected[v] {
                return Err(Error::InvalidInput(format!(
                    "rotation of variable {} does not list its occurrences",
                    v + 1
                )));
            }
        }
        for (c, r) in cl_rot.iter().enumerate() {
            let mut got = r.clone();
            got.sort();
            if got != (0..clauses[c].len()).collect::<Vec<_>>() {
                return Err(Error::InvalidInput(format!(
                    "rotation of clause {} is not a permutation",
                    c + 1
                )));
            }
        }
        // Pad by repeating the last literal. The copy sits right after the
        // original around the clause and right before it around the
        // variable, so the two parallel edges bound a digon.
        let mut padded = Vec::with_capacity(clauses.len());
        for (c, cl) in clauses.iter().enumerate() {
            let mut cl = cl.clone();
            while cl.len() < 3 {
                let orig = cl.len() - 1;
                let copy = cl.len();
                cl.push(cl[orig]);
                let r = &mut cl_rot[c];
                let at = r.iter().position(|&s| s == orig).unwrap();
                r.insert(at + 1, copy);
                let var = cl[orig].unsigned_abs() as usize - 1;
                let vr = &mut var_rot[var];
                let at = vr.iter().position(|&o| o == (c, orig)).unwrap();
                vr.insert(at, (c, copy));
            }
            padded.push([cl[0], cl[1], cl[2]]);
        }
        let inst = Cnf3Instance {
            num_vars,
            clauses: padded,
            var_rotation: var_rot,
            clause_rotation: cl_rot.into_iter().map(|r| [r[0], r[1], r[2]]).collect(),
        };
        inst.check_planar()?;
        Ok(inst)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut clauses = Vec::new();
        let mut current = Vec::new();
        let mut var_rot: Vec<(usize, Vec<Occurrence>)> = Vec::new();
        let mut cl_rot: Vec<(usize, Vec<usize>)> = Vec::new();
        let num = |t: &str| -> Result<usize> {
            t.parse::<usize>()
                .ok()
                .filter(|&x| x > 0)
                .ok_or_else(|| Error::InvalidInput(format!("bad index {t:?}")))
        };
        for (ln, line) in text.lines().enumerate() {
            let line = line.trim();
            let mut tok = line.split_whitespace();
            match tok.next() {
                None | Some("c") | Some("%") => continue,
                Some("p") => {
                    if tok.next() != Some("cnf") {
                        return Err(Error::InvalidInput(format!(
                            "line {}: expected 'p cnf'",
                            ln + 1
                        )));
                    }
                    let v = tok.next().map(str::parse::<usize>);
                    let c = tok.next().map(str::parse::<usize>);
                    match (v, c) {
                        (Some(Ok(v)), Some(Ok(c))) => header = Some((v, c)),
                        _ => {
                            return Err(Error::InvalidInput(format!("line {}: bad header", ln + 1)))
                        }
                    }
                }
                Some("rv") => {
                    let v = num(tok.next().unwrap_or(""))?;
                    let mut occ = Vec::new();
                    for t in tok {
                        let (c, s) = t.split_once('.').ok_or_else(|| {
                            Error::InvalidInput(format!("line {}: bad occurrence {t:?}", ln + 1))
                        })?;
                        occ.push((num(c)? - 1, num(s)? - 1));
                    }
                    var_rot.push((v - 1, occ));
                }
                Some("rc") => {
                    let c = num(tok.next().unwrap_or(""))?;
                    let slots = tok
                        .map(|t| num(t).map(|s| s - 1))
                        .collect::<Result<Vec<_>>>()?;
                    cl_rot.push((c - 1, slots));
                }
                Some(first) => {
                    for t in std::iter::once(first).chain(tok) {
                        let l: i64 = t.parse().map_err(|_| {
                            Error::InvalidInput(format!("line {}: bad literal {t:?}", ln + 1))
                        })?;
                        if l == 0 {
                            clauses.push(std::mem::take(&mut current));
                        } else {
                            current.push(l);
                        }
                    }
                }
            }
        }
        if !current.is_empty() {
            clauses.push(current);
        }
        let (nv, nc) =
            header.ok_or_else(|| Error::InvalidInput("missing 'p cnf' header".into()))?;
        if nc != clauses.len() {
            return Err(Error::InvalidInput(format!(
                "header announces {nc} clauses, found {}",
                clauses.len()
            )));
        }
        let var_rotation = if var_rot.is_empty() {
            None
        } else {
            let mut r: Vec<Option<Vec<Occurrence>>> = vec![None; nv];
            for (v, occ) in var_rot {
                if v >= nv || r[v].replace(occ).is_some() {
                    return Err(Error::InvalidInput(format!(
                        "bad or repeated rotation for variable {}",
                        v + 1
                    )));
                }
            }
            // Variables without a line keep input order.
            let mut fallback: Vec<Vec<Occurrence>> = vec![Vec::new(); nv];
            for (c, cl) in clauses.iter().enumerate() {
                for (s, &l) in cl.iter().enumerate() {
                    if let Some(f) = fallback.get_mut(l.unsigned_abs() as usize - 1) {
                        f.push((c, s));
                    }
                }
            }
            Some(
                r.into_iter()
                    .zip(fallback)
                    .map(|(a, b)| a.unwrap_or(b))
                    .collect(),
            )
        };
        let clause_rotation = if cl_rot.is_empty() {
            None
        } else {
            let mut r: Vec<Option<Vec<usize>>> = vec![None; clauses.len()];
            for (c, slots) in cl_rot {
                if c >= clauses.len() || r[c].replace(slots).is_some() {
                    return Err(Error::InvalidInput(format!(
                        "bad or repeated rotation for clause {}",
                        c + 1
                    )));
                }
            }
            Some(
                r.into_iter()
                    .enumerate()
                    .map(|(c, x)| x.unwrap_or_else(|| (0..clauses[c].len()).collect()))
                    .collect(),
            )
        };
        Cnf3Instance::new(nv, clauses, var_rotation, clause_rotation)
    }

    /// DIMACS text with rotation lines, after padding.
    pub fn to_text(&self) -> String {
        let mut s = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for cl in &self.clauses {
            s.push_str(&format!("{} {} {} 0\n", cl[0], cl[1], cl[2]));
        }
        for (v, occ) in self.var_rotation.iter().enumerate() {
            if occ.is_empty() {
                continue;
            }
            s.push_str(&format!("rv {}", v + 1));
            for (c, sl) in occ {
                s.push_str(&format!(" {}.{}", c + 1, sl + 1));
            }
            s.push('\n');
        }
        for (c, r) in self.clause_rotation.iter().enumerate() {
            s.push_str(&format!(
                "rc {} {} {} {}\n",
                c + 1,
                r[0] + 1,
                r[1] + 1,
                r[2] + 1
            ));
        }
        s
    }

    pub fn variable_of(&self, o: Occurrence) -> usize {
        self.clauses[o.0][o.1].unsigned_abs() as usize - 1
    }

    pub fn is_positive(&self, o: Occurrence) -> bool {
        self.clauses[o.0][o.1] > 0
    }

    /// Whether `assignment` (index 0 = variable 1) satisfies every clause.
    pub fn evaluate(&self, assignment: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|cl| self.clause_true(cl, assignment))
    }

    pub fn clause_true(&self, cl: &[i64; 3], assignment: &[bool]) -> bool {
        cl.iter()
            .any(|&l| assignment[l.unsigned_abs() as usize - 1] == (l > 0))
    }

    /// Euler check of the incidence multigraph. Variables without
    /// occurrences are ignored.
    fn check_planar(&self) -> Result<()> {
        let used: Vec<usize> = (0..self.num_vars)
            .filter(|&v| !self.var_rotation[v].is_empty())
            .collect();
        let nodes = used.len() + self.clauses.len();
        let edges = self.clauses.len() * 3;
        // Darts: (occurrence, toward clause).
        let mut seen = std::collections::HashSet::new();
        let mut faces = 0usize;
        for c in 0..self.clauses.len() {
            for s in 0..3 {
                for dir in [true, false] {
                    let start = ((c, s), dir);
                    if seen.contains(&start) {
                        continue;
                    }
                    faces += 1;
                    let mut cur = start;
                    while seen.insert(cur) {
                        let ((c, s), to_clause) = cur;
                        cur = if to_clause {
                            let r = &self.clause_rotation[c];
                            let i = r.iter().position(|&x| x == s).unwrap();
                            ((c, r[(i + 1) % 3]), false)
                        } else {
                            let r = &self.var_rotation[self.variable_of((c, s))];
                            let i = r.iter().position(|&o| o == (c, s)).unwrap();
                            (r[(i + 1) % r.len()], true)
                        };
                    }
                }
            }
        }
        if !self.incidence_connected(&used) {
            return Err(Error::InvalidEmbedding(
                "incidence graph is not connected".into(),
            ));
        }
        if nodes as i64 - edges as i64 + faces as i64 != 2 {
            return Err(Error::InvalidEmbedding(format!(
                "rotation is not planar: V - E + F = {}",
                nodes as i64 - edges as i64 + faces as i64
            )));
        }
        Ok(())
    }

    fn incidence_connected(&self, used: &[usize]) -> bool {
        let nc = self.clauses.len();
        let mut seen_c = vec![false; nc];
        let mut seen_v = vec![false; self.num_vars];
        let mut stack = vec![0usize];
        seen_c[0] = true;
        while let Some(c) = stack.pop() {
            for &l in &self.clauses[c] {
                let v = l.unsigned_abs() as usize - 1;
                if !seen_v[v] {
                    seen_v[v] = true;
                    for &(c2, _) in &self.var_rotation[v] {
                        if !seen_c[c2] {
                            seen_c[c2] = true;
                            stack.push(c2);
                        }
                    }
                }
            }
        }
        seen_c.iter().all(|&b| b) && used.iter().all(|&v| seen_v[v])
    }
}

/// `(!x1 | x2 | !x3) & (x1 | !x2 | !x3) & (x1 | !x3 | !x4)` with a planar
/// rotation in which the occurrences of `x1` read `x1, !x1, x1`.
pub fn example_formula() -> Cnf3Instance {
    Cnf3Instance::parse(EXAMPLE_TEXT).expect("example formula is planar")
}

pub const EXAMPLE_TEXT: &str = "p cnf 4 3
-1 2 -3 0
1 -2 -3 0
1 -3 -4 0
rv 1 1.1 3.1 2.1
rv 2 1.2 2.2
rv 3 1.3 2.3 3.2
rv 4 3.3
rc 1 1 2 3
rc 2 1 3 2
rc 3 1 2 3
";
