//! From a planar formula to a gadget graph.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::build::Builder;
use super::cnf::{Cnf3Instance, Occurrence};
use super::gadgets::{
    polygon_template, variable_template, Joint, LiteralIds, DECAGON_CENTERS, DECAGON_INPUTS,
    FOURTEEN_INPUTS, FOURTEEN_RED,
};
use super::transforms::{all_red_transform, eulerian_transform};
use crate::error::{Error, Result};
use crate::graph::{Edge, ParityColoring, PlaneGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Decision,
    AllRed,
    Eulerian,
    Matching,
    MatchingAllRed,
    MatchingEulerian,
}

impl Variant {
    pub const ALL: [Variant; 6] = [
        Variant::Decision,
        Variant::AllRed,
        Variant::Eulerian,
        Variant::Matching,
        Variant::MatchingAllRed,
        Variant::MatchingEulerian,
    ];

    pub fn is_matching(self) -> bool {
        matches!(
            self,
            Variant::Matching | Variant::MatchingAllRed | Variant::MatchingEulerian
        )
    }

    fn base(self) -> Variant {
        if self.is_matching() {
            Variant::Matching
        } else {
            Variant::Decision
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Decision => "decision",
            Variant::AllRed => "all-red",
            Variant::Eulerian => "eulerian",
            Variant::Matching => "matching",
            Variant::MatchingAllRed => "matching-all-red",
            Variant::MatchingEulerian => "matching-eulerian",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Variant::ALL
            .into_iter()
            .find(|v| v.to_string() == s.replace('_', "-"))
            .ok_or_else(|| Error::InvalidInput(format!("unknown variant {s:?}")))
    }
}

#[derive(Clone, Debug)]
pub struct VariableLayout {
    /// Literal gadgets in rotation order, with their occurrence.
    pub literals: Vec<(Occurrence, LiteralIds)>,
    /// `joints[j]` links literal `j` to literal `j + 1` (cyclically).
    pub joints: Vec<Joint>,
}

#[derive(Clone, Debug)]
pub struct ClauseLayout {
    /// Polygon vertices, clockwise.
    pub cycle: Vec<usize>,
    /// Port pairs in clockwise order and the slot each one serves.
    pub inputs: [(usize, usize); 3],
    pub slots: [usize; 3],
}

/// One wire of a ribbon: literal output `from`, clause port `to`, and the
/// middle vertex when the wire is double.
#[derive(Clone, Copy, Debug)]
pub struct RibbonWire {
    pub from: usize,
    pub to: usize,
    pub middle: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct Layout {
    pub variables: Vec<Option<VariableLayout>>,
    pub clauses: Vec<ClauseLayout>,
    /// Ribbon wires of each occurrence.
    pub ribbons: BTreeMap<Occurrence, [RibbonWire; 2]>,
}

#[derive(Clone, Debug)]
pub struct GadgetInstance {
    pub graph: PlaneGraph,
    pub colors: ParityColoring,
    pub variant: Variant,
    /// Vertex ids by role: basic, wire, joint, double-wire, clause, hub,
    /// conversion, eulerian.
    pub tags: BTreeMap<String, Vec<usize>>,
    pub formula: Cnf3Instance,
    pub layout: Layout,
    /// Chords every augmentation must contain, added by the all-red
    /// transform.
    pub forced: Vec<Edge>,
}

pub fn compile(phi: &Cnf3Instance, variant: Variant) -> Result<GadgetInstance> {
    let base = compile_base(phi, variant.base())?;
    match variant {
        Variant::Decision | Variant::Matching => Ok(base),
        Variant::AllRed | Variant::MatchingAllRed => {
            let mut out = all_red_transform(&base)?;
            out.variant = variant;
            Ok(out)
        }
        Variant::Eulerian | Variant::MatchingEulerian => {
            let mut out = eulerian_transform(&base)?;
            out.variant = variant;
            Ok(out)
        }
    }
}

fn compile_base(phi: &Cnf3Instance, variant: Variant) -> Result<GadgetInstance> {
    let matching = variant.is_matching();
    let mut b = Builder::default();
    let mut variables = Vec::with_capacity(phi.num_vars);
    for v in 0..phi.num_vars {
        let occ = &phi.var_rotation[v];
        if occ.is_empty() {
            variables.push(None);
            continue;
        }
        let k = occ.len();
        let same: Vec<bool> = (0..k)
            .map(|j| phi.is_positive(occ[j]) == phi.is_positive(occ[(j + 1) % k]))
            .collect();
        let (t, lits, joints) = variable_template(&same);
        let off = b.template(&t)?;
        variables.push(Some(VariableLayout {
            literals: occ
                .iter()
                .zip(&lits)
                .map(|(&o, l)| (o, l.offset(off)))
                .collect(),
            joints: joints
                .into_iter()
                .map(|j| match j {
                    Joint::Wire => Joint::Wire,
                    Joint::Double(w) => Joint::Double(w + off),
                })
                .collect(),
        }));
    }
    let mut clauses = Vec::with_capacity(phi.clauses.len());
    for c in 0..phi.clauses.len() {
        let (t, ids) = if matching {
            polygon_template(&FOURTEEN_RED, "clause")
        } else {
            polygon_template(&[true; 10], "clause")
        };
        let off = b.template(&t)?;
        let cycle: Vec<usize> = ids.iter().map(|&v| v + off).collect();
        let pairs = if matching {
            FOURTEEN_INPUTS
        } else {
            DECAGON_INPUTS
        };
        clauses.push(ClauseLayout {
            inputs: pairs.map(|(x, y)| (cycle[x], cycle[y])),
            cycle,
            slots: phi.clause_rotation[c],
        });
    }
    // Ribbons: clockwise port pairs meet untwisted, first to second.
    let mut ribbons = BTreeMap::new();
    for var in variables.iter().flatten() {
        for &(o, lit) in &var.literals {
            let cl = &clauses[o.0];
            let pos = cl
                .slots
                .iter()
                .position(|&s| s == o.1)
                .expect("slot in rotation");
            let (p1, p2) = lit.outputs();
            let (q1, q2) = cl.inputs[pos];
            let mut wires = [(p1, q2), (p2, q1)].map(|(from, to)| RibbonWire {
                from,
                to,
                middle: None,
            });
            for w in wires.iter_mut() {
                if matching {
                    w.middle = Some(b.double_wire(w.from, w.to));
                } else {
                    b.wire(w.from, w.to, "wire");
                }
            }
            ribbons.insert(o, wires);
        }
    }
    let asm = b.finish()?;
    Ok(GadgetInstance {
        graph: asm.graph,
        colors: asm.colors,
        variant,
        tags: asm.tags,
        formula: phi.clone(),
        layout: Layout {
            variables,
            clauses,
            ribbons,
        },
        forced: Vec::new(),
    })
}

/// Star center of clause input `i` in the decagon.
pub(crate) fn decagon_center(cl: &ClauseLayout, i: usize) -> usize {
    cl.cycle[DECAGON_CENTERS[i]]
}
