//! Interleaving of chords drawn inside one face.

use crate::error::{invalid, Result};

/// True iff the endpoints of `a` and `b` strictly alternate around `cycle`.
///
/// Chords sharing an endpoint never interleave. Fails if an endpoint is not
/// on the cycle or the two pairs coincide.
pub fn chords_interleave(a: (usize, usize), b: (usize, usize), cycle: &[usize]) -> Result<bool> {
    let pos = |v: usize| cycle.iter().position(|&x| x == v);
    let mut p = [0usize; 4];
    for (slot, v) in p.iter_mut().zip([a.0, a.1, b.0, b.1]) {
        match pos(v) {
            Some(i) => *slot = i,
            None => return invalid(format!("vertex {v} is not on the cycle")),
        }
    }
    let same = (a.0 == b.0 && a.1 == b.1) || (a.0 == b.1 && a.1 == b.0);
    if same {
        return invalid(format!("chords {a:?} and {b:?} coincide"));
    }
    Ok(interleave_positions(p[0], p[1], p[2], p[3]))
}

/// Interleaving test on cycle positions.
pub fn interleave_positions(a0: usize, a1: usize, b0: usize, b1: usize) -> bool {
    if a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1 {
        return false;
    }
    let (lo, hi) = if a0 < a1 { (a0, a1) } else { (a1, a0) };
    let inside = |x: usize| lo < x && x < hi;
    inside(b0) != inside(b1)
}
