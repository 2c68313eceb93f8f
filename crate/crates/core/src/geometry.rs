//! Exact planar predicates on rational coordinates.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Signed, Zero};

use crate::error::{invalid, Error, Result};
use crate::graph::{Edge, ParityColoring};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: BigRational,
    pub y: BigRational,
}

impl Point {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        Point { x, y }
    }

    pub fn int(x: i64, y: i64) -> Self {
        Point {
            x: BigRational::from_integer(BigInt::from(x)),
            y: BigRational::from_integer(BigInt::from(y)),
        }
    }

    /// Exact conversion of a finite double.
    pub fn from_f64(x: f64, y: f64) -> Result<Self> {
        match (BigRational::from_f64(x), BigRational::from_f64(y)) {
            (Some(x), Some(y)) => Ok(Point { x, y }),
            _ => invalid(format!("non-finite coordinate ({x}, {y})")),
        }
    }

    pub fn to_f64(&self) -> [f64; 2] {
        use num_traits::ToPrimitive;
        [
            self.x.to_f64().unwrap_or(f64::NAN),
            self.y.to_f64().unwrap_or(f64::NAN),
        ]
    }
}

/// Sign of the cross product (b - a) x (c - a): `Greater` for a left turn.
pub fn orient(a: &Point, b: &Point, c: &Point) -> Ordering {
    let d = (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x);
    if d.is_zero() {
        Ordering::Equal
    } else if d.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

/// `p` lies strictly between `a` and `b` on the segment `ab`.
pub fn in_open_segment(p: &Point, a: &Point, b: &Point) -> bool {
    if orient(a, b, p) != Ordering::Equal || p == a || p == b {
        return false;
    }
    let within = |u: &BigRational, v: &BigRational, w: &BigRational| {
        (u <= w && w <= v) || (v <= w && w <= u)
    };
    within(&a.x, &b.x, &p.x) && within(&a.y, &b.y, &p.y)
}

/// Segments `ab` and `cd` cross at a single interior point of both.
pub fn proper_crossing(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    o1 != Ordering::Equal
        && o2 != Ordering::Equal
        && o3 != Ordering::Equal
        && o4 != Ordering::Equal
        && o1 != o2
        && o3 != o4
}

/// Closed segments `ab` and `cd` meet somewhere other than at a shared
/// endpoint.
pub fn segments_conflict(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    if proper_crossing(a, b, c, d) {
        return true;
    }
    let shared = [(a, c), (a, d), (b, c), (b, d)]
        .iter()
        .filter(|(p, q)| p == q)
        .count();
    if shared >= 2 {
        return true;
    }
    // Touching or collinear overlap: an endpoint of one lies inside the other.
    in_open_segment(c, a, b)
        || in_open_segment(d, a, b)
        || in_open_segment(a, c, d)
        || in_open_segment(b, c, d)
}

/// Straight-line graph with exact coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct GeometricGraph {
    pub points: Vec<Point>,
    pub edges: Vec<Edge>,
    pub colors: ParityColoring,
}

impl GeometricGraph {
    pub fn new(points: Vec<Point>, edges: Vec<Edge>, colors: ParityColoring) -> Result<Self> {
        let n = points.len();
        if colors.len() != n {
            return invalid("coloring length differs from point count");
        }
        for e in &edges {
            if e.0 >= n || e.1 >= n || e.0 == e.1 {
                return invalid(format!("bad edge {e:?}"));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if points[i] == points[j] {
                    return invalid(format!("vertices {i} and {j} coincide"));
                }
            }
        }
        let mut edges = edges;
        edges.sort();
        edges.dedup();
        Ok(GeometricGraph {
            points,
            edges,
            colors,
        })
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    /// First vertex lying inside the given segment, if any.
    pub fn vertex_on_segment(&self, e: Edge) -> Option<usize> {
        let (a, b) = (&self.points[e.0], &self.points[e.1]);
        (0..self.n()).find(|&v| in_open_segment(&self.points[v], a, b))
    }

    /// Degeneracy check of the host drawing itself.
    pub fn check_nondegenerate(&self) -> Result<()> {
        for &e in &self.edges {
            if let Some(v) = self.vertex_on_segment(e) {
                return Err(Error::Degeneracy {
                    a: e.0,
                    b: e.1,
                    vertex: v,
                });
            }
        }
        Ok(())
    }

    /// First host edge that `e` conflicts with.
    pub fn blocking_edge(&self, e: Edge) -> Option<Edge> {
        let (a, b) = (&self.points[e.0], &self.points[e.1]);
        self.edges
            .iter()
            .copied()
            .find(|&f| f != e && segments_conflict(a, b, &self.points[f.0], &self.points[f.1]))
    }

    /// Pairs that can be added as straight segments: not host edges, no
    /// vertex inside, no conflict with a host edge.
    pub fn candidate_edges(&self) -> Vec<Edge> {
        let host: std::collections::HashSet<Edge> = self.edges.iter().copied().collect();
        let mut out = Vec::new();
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                let e = Edge(i, j);
                if host.contains(&e) || self.vertex_on_segment(e).is_some() {
                    continue;
                }
                if self.blocking_edge(e).is_none() {
                    out.push(e);
                }
            }
        }
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.touches(v)).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orientation_signs() {
        let (a, b) = (Point::int(0, 0), Point::int(1, 0));
        assert_eq!(orient(&a, &b, &Point::int(0, 1)), Ordering::Greater);
        assert_eq!(orient(&a, &b, &Point::int(0, -1)), Ordering::Less);
        assert_eq!(orient(&a, &b, &Point::int(5, 0)), Ordering::Equal);
    }

    #[test]
    fn crossing_cases() {
        let p = |x, y| Point::int(x, y);
        assert!(segments_conflict(&p(0, 0), &p(2, 2), &p(0, 2), &p(2, 0)));
        assert!(!segments_conflict(&p(0, 0), &p(1, 0), &p(1, 0), &p(1, 1)));
        assert!(segments_conflict(&p(0, 0), &p(2, 0), &p(1, 0), &p(1, 1)));
        assert!(segments_conflict(&p(0, 0), &p(2, 0), &p(0, 0), &p(3, 0)));
        assert!(!segments_conflict(&p(0, 0), &p(1, 0), &p(2, 0), &p(3, 0)));
    }

    #[test]
    fn exact_on_segment() {
        let a = Point::from_f64(0.1, 0.1).unwrap();
        let b = Point::from_f64(0.3, 0.3).unwrap();
        let m = Point::new(
            (&a.x + &b.x) / BigRational::from_integer(2.into()),
            (&a.y + &b.y) / BigRational::from_integer(2.into()),
        );
        assert!(in_open_segment(&m, &a, &b));
    }
}
