//! Augmentation induced by a truth assignment.

use std::collections::HashMap;

use super::compile::{decagon_center, GadgetInstance};
use super::gadgets::{Joint, FOURTEEN_INPUTS, FOURTEEN_RED};
use crate::error::{Error, Result};
use crate::graph::{Augmentation, Edge, PlaneGraph};

/// Chords for a satisfying assignment, or `None` when some clause is false.
/// `assignment[v]` is the value of variable `v + 1`.
pub fn assignment_to_augmentation(
    inst: &GadgetInstance,
    assignment: &[bool],
) -> Result<Option<Augmentation>> {
    let phi = &inst.formula;
    if assignment.len() != phi.num_vars {
        return Err(Error::InvalidInput(format!(
            "assignment has {} values for {} variables",
            assignment.len(),
            phi.num_vars
        )));
    }
    if !phi.evaluate(assignment) {
        return Ok(None);
    }
    let matching = inst.variant.is_matching();
    let truth = |o| assignment[phi.variable_of(o)] == phi.is_positive(o);
    let mut edges: Vec<Edge> = inst.forced.clone();
    for var in inst.layout.variables.iter().flatten() {
        let k = var.literals.len();
        for (j, &(o, lit)) in var.literals.iter().enumerate() {
            let on = truth(o);
            edges.extend(lit.chords(on));
            let next = var.literals[(j + 1) % k].1;
            match var.joints[j] {
                // A negative literal leaves its ends to the joints.
                Joint::Wire => {
                    if !on {
                        edges.push(Edge::new(lit.right(), next.left()));
                    }
                }
                Joint::Double(w) => {
                    if on {
                        edges.push(Edge::new(w, next.left()));
                    } else {
                        edges.push(Edge::new(lit.right(), w));
                    }
                }
            }
        }
    }
    for (&o, wires) in &inst.layout.ribbons {
        let on = truth(o);
        for w in wires {
            match w.middle {
                None => {
                    if on {
                        edges.push(Edge::new(w.from, w.to));
                    }
                }
                Some(m) => {
                    if on {
                        edges.push(Edge::new(w.from, m));
                    } else {
                        edges.push(Edge::new(m, w.to));
                    }
                }
            }
        }
    }
    for (c, cl) in inst.layout.clauses.iter().enumerate() {
        let active: Vec<bool> = cl.slots.iter().map(|&s| truth((c, s))).collect();
        if matching {
            // Reds not served from outside: v1, v2 and the ports of true
            // literals.
            let mut need: Vec<usize> = vec![0, 1];
            for (i, &(a, b)) in FOURTEEN_INPUTS.iter().enumerate() {
                if active[i] {
                    need.push(a);
                    need.push(b);
                }
            }
            need.sort();
            debug_assert!(need.iter().all(|&p| FOURTEEN_RED[p]));
            let pairs = polygon_matching(cl.cycle.len(), &need).ok_or_else(|| {
                Error::Structural(
                    "clause polygon has no plane matching for a satisfied clause".into(),
                )
            })?;
            edges.extend(
                pairs
                    .into_iter()
                    .map(|(a, b)| Edge::new(cl.cycle[a], cl.cycle[b])),
            );
        } else {
            let first = active.iter().position(|&a| a).expect("clause is satisfied");
            let center = decagon_center(cl, first);
            let mut even = vec![center];
            for (i, &(a, b)) in cl.inputs.iter().enumerate() {
                if active[i] {
                    even.push(a);
                    even.push(b);
                }
            }
            for &v in &cl.cycle {
                if !even.contains(&v) {
                    edges.push(Edge::new(center, v));
                }
            }
        }
    }
    Ok(Some(place(&inst.graph, edges)?))
}

/// Assigns each chord to a face containing both endpoints.
pub fn place(g: &PlaneGraph, edges: Vec<Edge>) -> Result<Augmentation> {
    let faces = g.faces()?;
    let mut at: HashMap<usize, Vec<usize>> = HashMap::new();
    for (f, cyc) in faces.iter().enumerate() {
        if cyc.len() > 3 {
            for &v in cyc {
                at.entry(v).or_default().push(f);
            }
        }
    }
    let mut pairs = Vec::with_capacity(edges.len());
    for e in edges {
        let (fa, fb) = (at.get(&e.0), at.get(&e.1));
        let face = match (fa, fb) {
            (Some(a), Some(b)) => a.iter().copied().find(|f| b.contains(f)),
            _ => None,
        }
        .ok_or_else(|| Error::Structural(format!("no face holds both ends of {e:?}")))?;
        pairs.push((e, face));
    }
    Ok(Augmentation::placed(pairs))
}

/// Non-crossing perfect matching of polygon positions `need` (sorted)
/// using only chords, i.e. pairs not consecutive on the `m`-gon.
pub fn polygon_matching(m: usize, need: &[usize]) -> Option<Vec<(usize, usize)>> {
    if need.is_empty() {
        return Some(Vec::new());
    }
    if need.len() % 2 == 1 {
        return None;
    }
    let adjacent = |a: usize, b: usize| (a + 1) % m == b || (b + 1) % m == a;
    for i in (1..need.len()).step_by(2) {
        if adjacent(need[0], need[i]) {
            continue;
        }
        let inner = polygon_matching(m, &need[1..i]);
        let outer = polygon_matching(m, &need[i + 1..]);
        if let (Some(mut a), Some(b)) = (inner, outer) {
            a.push((need[0], need[i]));
            a.extend(b);
            return Some(a);
        }
    }
    None
}
