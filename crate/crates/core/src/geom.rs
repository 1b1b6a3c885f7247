//! Planar geometry primitives in a metric projected CRS.
//!
//! All coordinates are metres (easting/northing). Nothing here is geodesic:
//! callers guarantee that every layer was reprojected to one common metric
//! CRS before entering the pipeline.

use alloc::string::String;
use alloc::vec::Vec;

use crate::math;
use crate::{Error, Result};

/// A point in projected coordinates (metres).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2D {
    pub x: f64,
    pub y: f64,
}

impl Point2D {
    pub fn new(x: f64, y: f64) -> Self {
        Point2D { x, y }
    }

    pub fn dist(self, other: Point2D) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        math::sqrt(dx * dx + dy * dy)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

/// Axis-aligned rectangle.
///
/// Two containment rules are offered. `contains` is the ordinary closed test.
/// `contains_grid` is the half-open rule shared by every per-cell statistic in
/// the pipeline: a point on a shared vertical edge belongs to the cell with
/// the larger column, a point on a shared horizontal edge to the cell with the
/// larger row. Concretely: `min_x <= x < max_x` and `min_y < y <= max_y`
/// (rows grow downward, so the top edge is owned and the bottom edge is not).
/// Cells tiling an extent therefore partition it: every point lands in
/// exactly one cell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rect {
    pub min_x: f64,
    pub min_y: f64,
    pub max_x: f64,
    pub max_y: f64,
}

impl Rect {
    pub fn new(min_x: f64, min_y: f64, max_x: f64, max_y: f64) -> Self {
        Rect { min_x, min_y, max_x, max_y }
    }

    /// Smallest rectangle containing both operands.
    pub fn union(&self, other: &Rect) -> Rect {
        Rect {
            min_x: self.min_x.min(other.min_x),
            min_y: self.min_y.min(other.min_y),
            max_x: self.max_x.max(other.max_x),
            max_y: self.max_y.max(other.max_y),
        }
    }

    pub fn width(&self) -> f64 {
        self.max_x - self.min_x
    }

    pub fn height(&self) -> f64 {
        self.max_y - self.min_y
    }

    pub fn area(&self) -> f64 {
        self.width() * self.height()
    }

    pub fn contains(&self, p: Point2D) -> bool {
        p.x >= self.min_x && p.x <= self.max_x && p.y >= self.min_y && p.y <= self.max_y
    }

    /// Half-open containment used for pixel centers and road nodes; see the
    /// type-level docs for the edge-ownership convention.
    pub fn contains_grid(&self, p: Point2D) -> bool {
        p.x >= self.min_x && p.x < self.max_x && p.y > self.min_y && p.y <= self.max_y
    }

    pub fn intersects(&self, other: &Rect) -> bool {
        self.min_x <= other.max_x
            && other.min_x <= self.max_x
            && self.min_y <= other.max_y
            && other.min_y <= self.max_y
    }

    /// Gap between two rectangles (0 when they touch or overlap). Since a
    /// bounding box encloses its geometry, this is a lower bound on the
    /// distance between the geometries themselves — used for pruning.
    pub fn distance_to(&self, other: &Rect) -> f64 {
        let dx = (other.min_x - self.max_x).max(self.min_x - other.max_x).max(0.0);
        let dy = (other.min_y - self.max_y).max(self.min_y - other.max_y).max(0.0);
        math::sqrt(dx * dx + dy * dy)
    }
}

/// A simple polygon with optional holes.
///
/// Rings are stored closed (first point repeated last). Construction
/// validates each ring: at least four points, closed, finite coordinates, no
/// zero-length edges, no self-intersection, and strictly positive net area.
/// Invalid geometry is rejected outright; there is no repair pass.
#[derive(Debug, Clone, PartialEq)]
pub struct PolygonGeom {
    exterior: Vec<Point2D>,
    holes: Vec<Vec<Point2D>>,
}

impl PolygonGeom {
    pub fn new(exterior: Vec<Point2D>, holes: Vec<Vec<Point2D>>) -> Result<Self> {
        validate_ring(&exterior, "exterior")?;
        for hole in &holes {
            validate_ring(hole, "hole")?;
        }
        let poly = PolygonGeom { exterior, holes };
        if poly.area() <= 0.0 {
            return Err(Error::validation("polygon has non-positive net area"));
        }
        Ok(poly)
    }

    /// Convenience constructor for an axis-aligned rectangle.
    pub fn rect(r: &Rect) -> Result<Self> {
        PolygonGeom::new(
            alloc::vec![
                Point2D::new(r.min_x, r.min_y),
                Point2D::new(r.max_x, r.min_y),
                Point2D::new(r.max_x, r.max_y),
                Point2D::new(r.min_x, r.max_y),
                Point2D::new(r.min_x, r.min_y),
            ],
            Vec::new(),
        )
    }

    pub fn exterior(&self) -> &[Point2D] {
        &self.exterior
    }

    pub fn holes(&self) -> &[Vec<Point2D>] {
        &self.holes
    }

    /// Shoelace area of the exterior minus the holes, in square metres.
    pub fn area(&self) -> f64 {
        let mut a = ring_area(&self.exterior);
        for hole in &self.holes {
            a -= ring_area(hole);
        }
        a
    }

    pub fn bbox(&self) -> Rect {
        let mut min_x = f64::INFINITY;
        let mut min_y = f64::INFINITY;
        let mut max_x = f64::NEG_INFINITY;
        let mut max_y = f64::NEG_INFINITY;
        for p in &self.exterior {
            min_x = min_x.min(p.x);
            min_y = min_y.min(p.y);
            max_x = max_x.max(p.x);
            max_y = max_y.max(p.y);
        }
        Rect { min_x, min_y, max_x, max_y }
    }

    /// Even-odd containment test: inside the exterior and not inside any
    /// hole. Points exactly on an edge are not guaranteed either way; callers
    /// that care about boundary contact check segment distances first.
    pub fn contains_point(&self, p: Point2D) -> bool {
        if !point_in_ring(&self.exterior, p) {
            return false;
        }
        !self.holes.iter().any(|h| point_in_ring(h, p))
    }

    fn rings(&self) -> impl Iterator<Item = &[Point2D]> {
        core::iter::once(self.exterior.as_slice()).chain(self.holes.iter().map(|h| h.as_slice()))
    }
}

fn validate_ring(ring: &[Point2D], kind: &str) -> Result<()> {
    if ring.len() < 4 {
        return Err(Error::Validation(alloc::format!(
            "{kind} ring has {} point(s); a closed ring needs at least 4",
            ring.len()
        )));
    }
    if ring.iter().any(|p| !p.is_finite()) {
        return Err(Error::Validation(alloc::format!("{kind} ring has non-finite coordinates")));
    }
    if ring[0] != ring[ring.len() - 1] {
        return Err(Error::Validation(alloc::format!(
            "{kind} ring is not closed (first point must equal last)"
        )));
    }
    for w in ring.windows(2) {
        if w[0] == w[1] {
            return Err(Error::Validation(alloc::format!("{kind} ring has a zero-length edge")));
        }
    }
    // Pairwise check of non-adjacent edges. O(n^2), fine at settlement-polygon
    // vertex counts; rejects both crossings and pinch points.
    let m = ring.len() - 1; // number of edges
    for i in 0..m {
        for j in (i + 1)..m {
            let adjacent = j == i + 1 || (i == 0 && j == m - 1);
            if adjacent {
                continue;
            }
            if segments_intersect(ring[i], ring[i + 1], ring[j], ring[j + 1]) {
                return Err(Error::Validation(alloc::format!("{kind} ring is self-intersecting")));
            }
        }
    }
    if ring_area(ring) <= 0.0 {
        return Err(Error::Validation(alloc::format!("{kind} ring has zero area")));
    }
    Ok(())
}

/// Unsigned shoelace area of a closed ring.
pub(crate) fn ring_area(ring: &[Point2D]) -> f64 {
    if ring.len() < 4 {
        return 0.0;
    }
    let mut acc = 0.0;
    for w in ring.windows(2) {
        acc += w[0].x * w[1].y - w[1].x * w[0].y;
    }
    math::abs(acc) * 0.5
}

/// Even-odd ray cast against one closed ring.
fn point_in_ring(ring: &[Point2D], p: Point2D) -> bool {
    let mut inside = false;
    for w in ring.windows(2) {
        let (a, b) = (w[0], w[1]);
        if (a.y > p.y) != (b.y > p.y) {
            let x_cross = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if p.x < x_cross {
                inside = !inside;
            }
        }
    }
    inside
}

fn orient(a: Point2D, b: Point2D, c: Point2D) -> f64 {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

fn on_segment(a: Point2D, b: Point2D, p: Point2D) -> bool {
    p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
}

/// True when segments [p1,p2] and [q1,q2] share at least one point,
/// including endpoint touches and collinear overlap.
pub(crate) fn segments_intersect(p1: Point2D, p2: Point2D, q1: Point2D, q2: Point2D) -> bool {
    let d1 = orient(q1, q2, p1);
    let d2 = orient(q1, q2, p2);
    let d3 = orient(p1, p2, q1);
    let d4 = orient(p1, p2, q2);

    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    (d1 == 0.0 && on_segment(q1, q2, p1))
        || (d2 == 0.0 && on_segment(q1, q2, p2))
        || (d3 == 0.0 && on_segment(p1, p2, q1))
        || (d4 == 0.0 && on_segment(p1, p2, q2))
}

pub(crate) fn point_segment_distance(p: Point2D, a: Point2D, b: Point2D) -> f64 {
    let abx = b.x - a.x;
    let aby = b.y - a.y;
    let len2 = abx * abx + aby * aby;
    if len2 == 0.0 {
        return p.dist(a);
    }
    let t = ((p.x - a.x) * abx + (p.y - a.y) * aby) / len2;
    let t = t.clamp(0.0, 1.0);
    p.dist(Point2D::new(a.x + t * abx, a.y + t * aby))
}

fn segment_segment_distance(p1: Point2D, p2: Point2D, q1: Point2D, q2: Point2D) -> f64 {
    if segments_intersect(p1, p2, q1, q2) {
        return 0.0;
    }
    point_segment_distance(p1, q1, q2)
        .min(point_segment_distance(p2, q1, q2))
        .min(point_segment_distance(q1, p1, p2))
        .min(point_segment_distance(q2, p1, p2))
}

/// Shoelace area of a polygon (exterior minus holes).
pub fn polygon_area(p: &PolygonGeom) -> f64 {
    p.area()
}

/// Minimum Euclidean distance between the boundaries of two polygons.
/// Returns 0 when the boundaries cross, touch, or one polygon contains the
/// other. A polygon sitting inside the other's hole is *not* contained and
/// keeps its positive distance to the hole ring.
pub fn boundary_distance(a: &PolygonGeom, b: &PolygonGeom) -> f64 {
    let mut best = f64::INFINITY;
    for ra in a.rings() {
        for rb in b.rings() {
            for wa in ra.windows(2) {
                for wb in rb.windows(2) {
                    let d = segment_segment_distance(wa[0], wa[1], wb[0], wb[1]);
                    if d < best {
                        best = d;
                        if best == 0.0 {
                            return 0.0;
                        }
                    }
                }
            }
        }
    }
    // No boundary contact: one may still fully contain the other.
    if a.contains_point(b.exterior[0]) || b.contains_point(a.exterior[0]) {
        return 0.0;
    }
    best
}

/// Clips one closed ring against a rectangle (Sutherland–Hodgman) and returns
/// the unsigned area of the result. The clip region is convex, so the output
/// encloses the correct region even for concave subjects.
fn clipped_ring_area(ring: &[Point2D], r: &Rect) -> f64 {
    // Work on the open vertex list.
    let mut poly: Vec<Point2D> = ring[..ring.len() - 1].to_vec();

    // Each half-plane: (inside predicate, intersection along the boundary).
    // Boundaries are axis-aligned so the crossing point solves a 1-D lerp.
    enum Side {
        MinX(f64),
        MaxX(f64),
        MinY(f64),
        MaxY(f64),
    }
    let sides = [Side::MinX(r.min_x), Side::MaxX(r.max_x), Side::MinY(r.min_y), Side::MaxY(r.max_y)];

    for side in &sides {
        if poly.len() < 3 {
            return 0.0;
        }
        let inside = |p: Point2D| match side {
            Side::MinX(v) => p.x >= *v,
            Side::MaxX(v) => p.x <= *v,
            Side::MinY(v) => p.y >= *v,
            Side::MaxY(v) => p.y <= *v,
        };
        let cross = |s: Point2D, e: Point2D| -> Point2D {
            match side {
                Side::MinX(v) | Side::MaxX(v) => {
                    let t = (*v - s.x) / (e.x - s.x);
                    Point2D::new(*v, s.y + t * (e.y - s.y))
                }
                Side::MinY(v) | Side::MaxY(v) => {
                    let t = (*v - s.y) / (e.y - s.y);
                    Point2D::new(s.x + t * (e.x - s.x), *v)
                }
            }
        };

        let mut out: Vec<Point2D> = Vec::with_capacity(poly.len() + 4);
        for i in 0..poly.len() {
            let s = poly[i];
            let e = poly[(i + 1) % poly.len()];
            match (inside(s), inside(e)) {
                (true, true) => out.push(e),
                (true, false) => out.push(cross(s, e)),
                (false, true) => {
                    out.push(cross(s, e));
                    out.push(e);
                }
                (false, false) => {}
            }
        }
        poly = out;
    }

    if poly.len() < 3 {
        return 0.0;
    }
    let mut acc = 0.0;
    for i in 0..poly.len() {
        let a = poly[i];
        let b = poly[(i + 1) % poly.len()];
        acc += a.x * b.y - b.x * a.y;
    }
    math::abs(acc) * 0.5
}

/// Area of `polygon ∩ rect` in square metres: clipped exterior area minus
/// clipped hole areas, clamped at zero against floating-point dust.
pub fn polygon_rect_intersection_area(p: &PolygonGeom, r: &Rect) -> f64 {
    if !p.bbox().intersects(r) {
        return 0.0;
    }
    let mut a = clipped_ring_area(&p.exterior, r);
    for hole in &p.holes {
        a -= clipped_ring_area(hole, r);
    }
    a.max(0.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn square(min_x: f64, min_y: f64, side: f64) -> PolygonGeom {
        PolygonGeom::rect(&Rect::new(min_x, min_y, min_x + side, min_y + side)).unwrap()
    }

    #[test]
    fn unit_square_area() {
        assert_eq!(polygon_area(&square(0.0, 0.0, 1.0)), 1.0);
    }

    #[test]
    fn cell_square_area() {
        assert_eq!(polygon_area(&square(0.0, 0.0, 150.0)), 22500.0);
    }

    #[test]
    fn area_with_centered_hole() {
        let outer = vec![
            Point2D::new(0.0, 0.0),
            Point2D::new(3.0, 0.0),
            Point2D::new(3.0, 3.0),
            Point2D::new(0.0, 3.0),
            Point2D::new(0.0, 0.0),
        ];
        let hole = vec![
            Point2D::new(1.0, 1.0),
            Point2D::new(2.0, 1.0),
            Point2D::new(2.0, 2.0),
            Point2D::new(1.0, 2.0),
            Point2D::new(1.0, 1.0),
        ];
        let p = PolygonGeom::new(outer, vec![hole]).unwrap();
        assert_eq!(polygon_area(&p), 8.0);
    }

    #[test]
    fn degenerate_ring_rejected() {
        let open = vec![Point2D::new(0.0, 0.0), Point2D::new(1.0, 0.0), Point2D::new(0.0, 0.0)];
        assert!(matches!(PolygonGeom::new(open, vec![]), Err(Error::Validation(_))));
    }

    #[test]
    fn self_intersecting_ring_rejected() {
        // Bowtie.
        let ring = vec![
            Point2D::new(0.0, 0.0),
            Point2D::new(2.0, 2.0),
            Point2D::new(2.0, 0.0),
            Point2D::new(0.0, 2.0),
            Point2D::new(0.0, 0.0),
        ];
        assert!(matches!(PolygonGeom::new(ring, vec![]), Err(Error::Validation(_))));
    }

    #[test]
    fn unclosed_ring_rejected() {
        let ring = vec![
            Point2D::new(0.0, 0.0),
            Point2D::new(1.0, 0.0),
            Point2D::new(1.0, 1.0),
            Point2D::new(0.0, 1.0),
        ];
        assert!(PolygonGeom::new(ring, vec![]).is_err());
    }

    #[test]
    fn boundary_distance_horizontal_gap() {
        let a = square(0.0, 0.0, 1.0);
        let b = square(11.0, 0.0, 1.0);
        assert_eq!(boundary_distance(&a, &b), 10.0);
    }

    #[test]
    fn boundary_distance_overlap_is_zero() {
        let a = square(0.0, 0.0, 2.0);
        let b = square(1.0, 1.0, 2.0);
        assert_eq!(boundary_distance(&a, &b), 0.0);
    }

    #[test]
    fn boundary_distance_diagonal_345() {
        // Nearest corners at (0,0) and (3,4): a 3-4-5 triangle.
        let a = square(-1.0, -1.0, 1.0);
        let b = square(3.0, 4.0, 1.0);
        assert_eq!(boundary_distance(&a, &b), 5.0);
    }

    #[test]
    fn boundary_distance_containment_is_zero() {
        let outer = square(0.0, 0.0, 10.0);
        let inner = square(4.0, 4.0, 1.0);
        assert_eq!(boundary_distance(&outer, &inner), 0.0);
        assert_eq!(boundary_distance(&inner, &outer), 0.0);
    }

    #[test]
    fn polygon_inside_hole_keeps_distance() {
        let outer = vec![
            Point2D::new(0.0, 0.0),
            Point2D::new(10.0, 0.0),
            Point2D::new(10.0, 10.0),
            Point2D::new(0.0, 10.0),
            Point2D::new(0.0, 0.0),
        ];
        let hole = vec![
            Point2D::new(2.0, 2.0),
            Point2D::new(8.0, 2.0),
            Point2D::new(8.0, 8.0),
            Point2D::new(2.0, 8.0),
            Point2D::new(2.0, 2.0),
        ];
        let donut = PolygonGeom::new(outer, vec![hole]).unwrap();
        let island = square(4.0, 4.0, 2.0);
        assert_eq!(boundary_distance(&donut, &island), 2.0);
    }

    #[test]
    fn clip_half_overlap() {
        let cell = Rect::new(0.0, 0.0, 150.0, 150.0);
        let poly = square(-150.0, 0.0, 225.0); // covers x in [-150, 75]
        assert_eq!(polygon_rect_intersection_area(&poly, &cell), 75.0 * 150.0);
    }

    #[test]
    fn clip_contained_cell() {
        let cell = Rect::new(10.0, 10.0, 20.0, 20.0);
        let poly = square(0.0, 0.0, 100.0);
        assert_eq!(polygon_rect_intersection_area(&poly, &cell), 100.0);
    }

    #[test]
    fn clip_disjoint_is_zero() {
        let cell = Rect::new(0.0, 0.0, 1.0, 1.0);
        let poly = square(5.0, 5.0, 1.0);
        assert_eq!(polygon_rect_intersection_area(&poly, &cell), 0.0);
    }

    #[test]
    fn clip_respects_holes() {
        let outer = vec![
            Point2D::new(0.0, 0.0),
            Point2D::new(4.0, 0.0),
            Point2D::new(4.0, 4.0),
            Point2D::new(0.0, 4.0),
            Point2D::new(0.0, 0.0),
        ];
        let hole = vec![
            Point2D::new(1.0, 1.0),
            Point2D::new(3.0, 1.0),
            Point2D::new(3.0, 3.0),
            Point2D::new(1.0, 3.0),
            Point2D::new(1.0, 1.0),
        ];
        let donut = PolygonGeom::new(outer, vec![hole]).unwrap();
        // Rect covering the left half: outer 2x4=8 minus hole 1x2=2.
        let r = Rect::new(0.0, 0.0, 2.0, 4.0);
        assert_eq!(polygon_rect_intersection_area(&donut, &r), 6.0);
    }

    #[test]
    fn grid_containment_half_open() {
        let r = Rect::new(0.0, 0.0, 1.0, 1.0);
        assert!(r.contains_grid(Point2D::new(0.0, 1.0))); // left + top owned
        assert!(!r.contains_grid(Point2D::new(1.0, 1.0))); // right edge not owned
        assert!(!r.contains_grid(Point2D::new(0.0, 0.0))); // bottom edge not owned
        assert!(r.contains_grid(Point2D::new(0.5, 0.5)));
    }

    #[test]
    fn rect_distance() {
        let a = Rect::new(0.0, 0.0, 1.0, 1.0);
        let b = Rect::new(4.0, 5.0, 6.0, 7.0);
        assert_eq!(a.distance_to(&b), 5.0);
        assert_eq!(a.distance_to(&Rect::new(0.5, 0.5, 2.0, 2.0)), 0.0);
    }
}
