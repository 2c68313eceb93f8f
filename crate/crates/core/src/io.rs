//! JSON files for instances, augmentations and reports.
//!
//! Every document carries `format_version`. Vertex and face ids in files
//! are 1-based; the in-memory types are 0-based.
//!
//! Instance:
//!
//! ```json
//! {"format_version": 1, "kind": "mop", "n": 4, "diagonals": [[1, 3]], "red": [2, 4]}
//! {"format_version": 1, "kind": "plane", "n": 3, "rotation": [[2, 3], [3, 1], [1, 2]], "red": []}
//! {"format_version": 1, "kind": "geometric", "n": 3, "edges": [[1, 2]],
//!  "coords": [["0", "0"], ["1/2", 3], [2, "-1"]], "red": [1, 2]}
//! ```
//!
//! `rotation` lists each vertex's neighbors clockwise. Plane instances may
//! carry `coords` (numbers) and `tags` (role name to vertex ids).
//! Geometric coordinates are exact: integers, decimals or `"p/q"` strings.
//!
//! Augmentation: `{"format_version": 1, "edges": [[2, 4]], "placement": [3]}`
//! where `placement[i]` is the face of `edges[i]` in `faces()` order.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{invalid, Error, Result};
use crate::geometry::{GeometricGraph, Point};
use crate::graph::{Augmentation, CyclicMop, Edge, ParityColoring, PlaneGraph};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Mop,
    Plane,
    Geometric,
}

/// Raw instance document.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub format_version: u32,
    pub kind: Kind,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagonals: Option<Vec<[usize; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rotation: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<[usize; 2]>>,
    pub red: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coords: Option<Vec<[Value; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tags: Option<BTreeMap<String, Vec<usize>>>,
}

/// Parsed instance.
#[derive(Clone, Debug, PartialEq)]
pub enum Instance {
    Mop(CyclicMop, ParityColoring),
    Plane {
        graph: PlaneGraph,
        colors: ParityColoring,
        tags: BTreeMap<String, Vec<usize>>,
    },
    Geometric(GeometricGraph),
}

impl Instance {
    pub fn kind(&self) -> Kind {
        match self {
            Instance::Mop(..) => Kind::Mop,
            Instance::Plane { .. } => Kind::Plane,
            Instance::Geometric(_) => Kind::Geometric,
        }
    }

    pub fn n(&self) -> usize {
        match self {
            Instance::Mop(g, _) => g.n(),
            Instance::Plane { graph, .. } => graph.n(),
            Instance::Geometric(g) => g.n(),
        }
    }

    pub fn colors(&self) -> &ParityColoring {
        match self {
            Instance::Mop(_, c) => c,
            Instance::Plane { colors, .. } => colors,
            Instance::Geometric(g) => &g.colors,
        }
    }
}

fn pair(p: [usize; 2], n: usize, what: &str) -> Result<Edge> {
    if p[0] == 0 || p[1] == 0 || p[0] > n || p[1] > n {
        return invalid(format!("{what} [{}, {}] out of range 1..={n}", p[0], p[1]));
    }
    Ok(Edge::new(p[0] - 1, p[1] - 1))
}

fn pairs(ps: &[[usize; 2]], n: usize, what: &str) -> Result<Vec<Edge>> {
    ps.iter().map(|&p| pair(p, n, what)).collect()
}

fn out_pairs(es: &[Edge]) -> Vec<[usize; 2]> {
    es.iter().map(|e| [e.0 + 1, e.1 + 1]).collect()
}

fn ids(vs: &[usize], n: usize, what: &str) -> Result<Vec<usize>> {
    vs.iter()
        .map(|&v| {
            if v == 0 || v > n {
                invalid(format!("{what} {v} out of range 1..={n}"))
            } else {
                Ok(v - 1)
            }
        })
        .collect()
}

/// Exact rational from a JSON number or string (`"3"`, `"-1.25"`, `"2/7"`).
pub fn parse_rational(v: &Value) -> Result<BigRational> {
    match v {
        Value::Number(x) => {
            if let Some(i) = x.as_i64() {
                Ok(BigRational::from_integer(BigInt::from(i)))
            } else {
                parse_rational_str(&x.to_string())
            }
        }
        Value::String(s) => parse_rational_str(s.trim()),
        _ => invalid(format!("coordinate {v} is neither number nor string")),
    }
}

fn parse_rational_str(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidInput(format!("bad rational {s:?}"));
    if let Some((p, q)) = s.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
        let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
        if q == BigInt::from(0) {
            return Err(bad());
        }
        return Ok(BigRational::new(p, q));
    }
    // Decimal with optional exponent, read exactly.
    let (mant, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (int, frac) = mant.split_once('.').unwrap_or((mant, ""));
    let digits = format!("{int}{frac}");
    let m = BigInt::from_str(&digits).map_err(|_| bad())?;
    let shift = exp - frac.len() as i32;
    let ten = BigInt::from(10);
    Ok(if shift >= 0 {
        BigRational::from_integer(m * num_traits::pow(ten, shift as usize))
    } else {
        BigRational::new(m, num_traits::pow(ten, (-shift) as usize))
    })
}

fn rational_text(r: &BigRational) -> Value {
    if r.is_integer() {
        Value::String(r.numer().to_string())
    } else {
        Value::String(format!("{}/{}", r.numer(), r.denom()))
    }
}

fn float_value(x: f64) -> Value {
    serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number)
}

impl InstanceFile {
    pub fn into_instance(self) -> Result<Instance> {
        if self.format_version != FORMAT_VERSION {
            return invalid(format!(
                "unsupported format_version {}",
                self.format_version
            ));
        }
        let n = self.n;
        let red = ids(&self.red, n, "red vertex")?;
        let colors = ParityColoring::from_red(n, red)?;
        match self.kind {
            Kind::Mop => {
                let ds = pairs(self.diagonals.as_deref().unwrap_or(&[]), n, "diagonal")?;
                let g = CyclicMop::new(n, ds.iter().map(|e| (e.0, e.1)))?;
                Ok(Instance::Mop(g, colors))
            }
            Kind::Plane => {
                let rot = self
                    .rotation
                    .ok_or_else(|| Error::InvalidInput("plane instance needs rotation".into()))?;
                if rot.len() != n {
                    return invalid(format!("rotation has {} lists for n = {n}", rot.len()));
                }
                let rot = rot
                    .iter()
                    .map(|l| ids(l, n, "neighbor"))
                    .collect::<Result<Vec<_>>>()?;
                let mut graph = PlaneGraph::from_rotation(rot)?;
                if let Some(cs) = self.coords {
                    if cs.len() != n {
                        return invalid("coords length differs from n");
                    }
                    let cs = cs
                        .iter()
                        .map(|[x, y]| {
                            let f = |v: &Value| {
                                v.as_f64()
                                    .or_else(|| v.as_str().and_then(|s| s.parse().ok()))
                                    .ok_or_else(|| {
                                        Error::InvalidInput(format!("bad coordinate {v}"))
                                    })
                            };
                            Ok([f(x)?, f(y)?])
                        })
                        .collect::<Result<Vec<_>>>()?;
                    graph.coords = Some(cs);
                }
                let mut tags = BTreeMap::new();
                for (k, vs) in self.tags.unwrap_or_default() {
                    tags.insert(k, ids(&vs, n, "tagged vertex")?);
                }
                Ok(Instance::Plane {
                    graph,
                    colors,
                    tags,
                })
            }
            Kind::Geometric => {
                let cs = self
                    .coords
                    .ok_or_else(|| Error::InvalidInput("geometric instance needs coords".into()))?;
                if cs.len() != n {
                    return invalid("coords length differs from n");
                }
                let points = cs
                    .iter()
                    .map(|[x, y]| Ok(Point::new(parse_rational(x)?, parse_rational(y)?)))
                    .collect::<Result<Vec<_>>>()?;
                let edges = pairs(self.edges.as_deref().unwrap_or(&[]), n, "edge")?;
                Ok(Instance::Geometric(GeometricGraph::new(
                    points, edges, colors,
                )?))
            }
        }
    }

    pub fn from_instance(inst: &Instance) -> Self {
        let red: Vec<usize> = inst.colors().red_vertices().iter().map(|v| v + 1).collect();
        let mut f = InstanceFile {
            format_version: FORMAT_VERSION,
            kind: inst.kind(),
            n: inst.n(),
            diagonals: None,
            rotation: None,
            edges: None,
            red,
            coords: None,
            tags: None,
        };
        match inst {
            Instance::Mop(g, _) => f.diagonals = Some(out_pairs(g.diagonals())),
            Instance::Plane { graph, tags, .. } => {
                f.rotation = Some(
                    graph
                        .rotation()
                        .iter()
                        .map(|l| l.iter().map(|v| v + 1).collect())
                        .collect(),
                );
                f.coords = graph.coords.as_ref().map(|cs| {
                    cs.iter()
                        .map(|c| [float_value(c[0]), float_value(c[1])])
                        .collect()
                });
                if !tags.is_empty() {
                    f.tags = Some(
                        tags.iter()
                            .map(|(k, vs)| (k.clone(), vs.iter().map(|v| v + 1).collect()))
                            .collect(),
                    );
                }
            }
            Instance::Geometric(g) => {
                f.edges = Some(out_pairs(&g.edges));
                f.coords = Some(
                    g.points
                        .iter()
                        .map(|p| [rational_text(&p.x), rational_text(&p.y)])
                        .collect(),
                );
            }
        }
        f
    }
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let f: InstanceFile = serde_json::from_str(text)
        .map_err(|e| Error::InvalidInput(format!("malformed instance JSON: {e}")))?;
    f.into_instance()
}

pub fn instance_to_json(inst: &Instance) -> String {
    let mut s =
        serde_json::to_string_pretty(&InstanceFile::from_instance(inst)).expect("serializable");
    s.push('\n');
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AugmentationFile {
    pub format_version: u32,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub placement: Option<Vec<usize>>,
}

/// Parses an augmentation for a host with `n` vertices.
pub fn parse_augmentation(text: &str, n: usize) -> Result<Augmentation> {
    let f: AugmentationFile = serde_json::from_str(text)
        .map_err(|e| Error::InvalidInput(format!("malformed augmentation JSON: {e}")))?;
    if f.format_version != FORMAT_VERSION {
        return invalid(format!("unsupported format_version {}", f.format_version));
    }
    let edges = pairs(&f.edges, n, "edge")?;
    let placement = match f.placement {
        None => None,
        Some(p) if p.len() == edges.len() => Some(
            p.iter()
                .map(|&x| {
                    if x == 0 {
                        invalid("face ids are 1-based")
                    } else {
                        Ok(x - 1)
                    }
                })
                .collect::<Result<Vec<_>>>()?,
        ),
        Some(_) => return invalid("placement length differs from edges"),
    };
    Ok(Augmentation { edges, placement })
}

pub fn augmentation_to_json(h: &Augmentation) -> String {
    let f = AugmentationFile {
        format_version: FORMAT_VERSION,
        edges: out_pairs(&h.edges),
        placement: h
            .placement
            .as_ref()
            .map(|p| p.iter().map(|x| x + 1).collect()),
    };
    let mut s = serde_json::to_string(&f).expect("serializable");
    s.push('\n');
    s
}
