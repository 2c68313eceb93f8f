//! Assembles a plane graph from designed faces.
//!
//! Designed faces fix, at each vertex, runs of consecutive neighbors in the
//! rotation. A vertex may carry at most two such runs (a gadget side and a
//! wire side); their cyclic order is then forced, and the faces not listed
//! explicitly ("gaps") fall out of the completed rotation.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::gadgets::Template;
use crate::error::{Error, Result};
use crate::graph::{ParityColoring, PlaneGraph};

#[derive(Debug, Default)]
pub struct Builder {
    pub red: Vec<bool>,
    pub tags: BTreeMap<String, Vec<usize>>,
    faces: Vec<Vec<usize>>,
    active: Vec<bool>,
}

/// Result of assembly, before any variant transform.
#[derive(Debug)]
pub struct Assembled {
    pub graph: PlaneGraph,
    pub colors: ParityColoring,
    pub tags: BTreeMap<String, Vec<usize>>,
}

impl Builder {
    pub fn n(&self) -> usize {
        self.red.len()
    }

    pub fn vertex(&mut self, red: bool, tag: &str) -> usize {
        let v = self.red.len();
        self.red.push(red);
        self.tags.entry(tag.to_string()).or_default().push(v);
        v
    }

    pub fn face(&mut self, cycle: Vec<usize>, active: bool) {
        self.faces.push(cycle);
        self.active.push(active);
    }

    /// Copies a template's bounded faces; returns the id offset.
    pub fn template(&mut self, t: &Template) -> Result<usize> {
        let off = self.n();
        for v in 0..t.n() {
            self.vertex(t.red[v], t.tags[v]);
        }
        for (f, active) in t.bounded_faces()? {
            self.face(f.into_iter().map(|v| v + off).collect(), active);
        }
        Ok(off)
    }

    /// Active quad `p, x, q, y` with new blue `x`, `y`.
    pub fn wire(&mut self, p: usize, q: usize, tag: &str) {
        let x = self.vertex(false, tag);
        let y = self.vertex(false, tag);
        self.face(vec![p, x, q, y], true);
    }

    /// Two wires through a new red middle vertex, which is returned.
    pub fn double_wire(&mut self, p: usize, q: usize) -> usize {
        let w = self.vertex(true, "double-wire");
        self.wire(p, w, "double-wire");
        self.wire(w, q, "double-wire");
        w
    }

    pub fn finish(mut self) -> Result<Assembled> {
        let n = self.n();
        let mut succ: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
        let mut nbrs: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        for f in &self.faces {
            let k = f.len();
            for i in 0..k {
                let (u, v, w) = (f[i], f[(i + 1) % k], f[(i + 2) % k]);
                if succ[v].insert(u, w).is_some() {
                    return Err(Error::InvalidEmbedding(format!(
                        "dart ({u}, {v}) in two designed faces"
                    )));
                }
                nbrs[v].insert(u);
                nbrs[v].insert(w);
            }
        }
        let mut rotation = Vec::with_capacity(n);
        for v in 0..n {
            rotation.push(close_runs(v, &succ[v], &nbrs[v])?);
        }
        let mut g = PlaneGraph::from_rotation(rotation)?;
        let faces = g
            .faces()
            .map_err(|e| Error::InvalidEmbedding(format!("assembled graph: {e}")))?;
        let active: BTreeSet<Vec<usize>> = self
            .faces
            .iter()
            .zip(&self.active)
            .filter(|(_, &a)| a)
            .map(|(f, _)| canonical(f))
            .collect();
        for f in faces {
            if f.len() <= 3 || active.contains(&canonical(&f)) {
                continue;
            }
            let distinct: BTreeSet<usize> = f.iter().copied().collect();
            if distinct.len() != f.len() {
                return Err(Error::Structural(format!(
                    "face {f:?} is not a simple cycle"
                )));
            }
            let h = g.insert_hub(&f);
            debug_assert_eq!(h, self.red.len());
            self.red.push(false);
            self.tags.entry("hub".into()).or_default().push(h);
        }
        Ok(Assembled {
            graph: g,
            colors: ParityColoring::from_bools(self.red),
            tags: self.tags,
        })
    }
}

/// Rotation at `v` from its partial successor map.
fn close_runs(
    v: usize,
    succ: &HashMap<usize, usize>,
    nbrs: &BTreeSet<usize>,
) -> Result<Vec<usize>> {
    if nbrs.is_empty() {
        return Ok(Vec::new());
    }
    let has_pred: BTreeSet<usize> = succ.values().copied().collect();
    let starts: Vec<usize> = nbrs
        .iter()
        .copied()
        .filter(|u| !has_pred.contains(u))
        .collect();
    let mut runs = Vec::new();
    for &s in &starts {
        let mut run = vec![s];
        let mut cur = s;
        while let Some(&nx) = succ.get(&cur) {
            run.push(nx);
            cur = nx;
        }
        runs.push(run);
    }
    if starts.is_empty() {
        // Fully surrounded by designed faces.
        let s = *nbrs.iter().next().unwrap();
        let mut run = vec![s];
        let mut cur = succ[&s];
        while cur != s {
            run.push(cur);
            cur = succ[&cur];
        }
        runs.push(run);
    }
    if runs.len() > 2 {
        return Err(Error::InvalidEmbedding(format!(
            "vertex {v} has {} open corner runs, the order is ambiguous",
            runs.len()
        )));
    }
    let order: Vec<usize> = runs.concat();
    if order.len() != nbrs.len() {
        return Err(Error::InvalidEmbedding(format!(
            "corners around vertex {v} do not close up"
        )));
    }
    Ok(order)
}

/// Cycle rotated to start at its smallest vertex.
pub fn canonical(f: &[usize]) -> Vec<usize> {
    let i = (0..f.len()).min_by_key(|&i| f[i]).unwrap_or(0);
    f[i..].iter().chain(&f[..i]).copied().collect()
}
