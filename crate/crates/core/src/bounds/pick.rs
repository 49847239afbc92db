use num_integer::gcd;

use crate::error::{Error, Result};

/// A triangle with integer vertices.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LatticeTriangle {
    vertices: [(i64, i64); 3],
}

impl LatticeTriangle {
    pub fn new(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> Self {
        LatticeTriangle {
            vertices: [a, b, c],
        }
    }

    pub fn vertices(&self) -> [(i64, i64); 3] {
        self.vertices
    }

    /// Signed cross product of `b - a` and `c - a`.
    fn cross(&self) -> i64 {
        let [(ax, ay), (bx, by), (cx, cy)] = self.vertices;
        (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    }

    /// Twice the area (shoelace formula), an integer.
    pub fn doubled_area(&self) -> i64 {
        self.cross().abs()
    }

    pub fn is_degenerate(&self) -> bool {
        self.cross() == 0
    }

    /// Lattice points on the boundary: the sum over edges of
    /// `gcd(|dx|, |dy|)`.
    pub fn boundary_points(&self) -> i64 {
        let v = self.vertices;
        (0..3)
            .map(|i| {
                let (p, q) = (v[i], v[(i + 1) % 3]);
                gcd(q.0 - p.0, q.1 - p.1)
            })
            .sum()
    }
}

/// Interior lattice points by Pick's theorem, `A - B/2 + 1`, in halved
/// integer arithmetic.
pub fn pick_interior(t: &LatticeTriangle) -> Result<i64> {
    if t.is_degenerate() {
        return Err(Error::DegenerateTriangle);
    }
    Ok((t.doubled_area() - t.boundary_points() + 2) / 2)
}

/// Interior lattice points by scanning the bounding box and testing the three
/// edges strictly.
pub fn triangle_interior_enumerate(t: &LatticeTriangle) -> Result<i64> {
    if t.is_degenerate() {
        return Err(Error::DegenerateTriangle);
    }
    let v = t.vertices();
    let orient = t.cross().signum();
    let side = |p: (i64, i64), q: (i64, i64), x: i64, y: i64| {
        ((q.0 - p.0) * (y - p.1) - (q.1 - p.1) * (x - p.0)).signum()
    };
    let (x0, x1) = (v.iter().map(|p| p.0).min().unwrap(), v.iter().map(|p| p.0).max().unwrap());
    let (y0, y1) = (v.iter().map(|p| p.1).min().unwrap(), v.iter().map(|p| p.1).max().unwrap());
    let mut count = 0;
    for x in x0..=x1 {
        for y in y0..=y1 {
            if (0..3).all(|i| side(v[i], v[(i + 1) % 3], x, y) == orient) {
                count += 1;
            }
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let t = LatticeTriangle::new((0, 0), (4, 0), (0, 4));
        assert_eq!((t.doubled_area(), t.boundary_points()), (16, 12));
        assert_eq!(pick_interior(&t), Ok(3));
        assert_eq!(triangle_interior_enumerate(&t), Ok(3));

        let t = LatticeTriangle::new((0, 0), (1, 0), (0, 1));
        assert_eq!((t.doubled_area(), t.boundary_points()), (1, 3));
        assert_eq!(pick_interior(&t), Ok(0));
        assert_eq!(triangle_interior_enumerate(&t), Ok(0));

        let t = LatticeTriangle::new((0, 0), (5, 0), (0, 3));
        assert_eq!((t.doubled_area(), t.boundary_points()), (15, 9));
        assert_eq!(pick_interior(&t), Ok(4));
        assert_eq!(triangle_interior_enumerate(&t), Ok(4));
    }

    #[test]
    fn orientation_does_not_matter() {
        let t = LatticeTriangle::new((0, 0), (0, 3), (5, 0));
        assert_eq!(pick_interior(&t), Ok(4));
        assert_eq!(triangle_interior_enumerate(&t), Ok(4));
    }

    #[test]
    fn degenerate() {
        let t = LatticeTriangle::new((0, 0), (2, 2), (5, 5));
        assert_eq!(pick_interior(&t), Err(Error::DegenerateTriangle));
        assert_eq!(triangle_interior_enumerate(&t), Err(Error::DegenerateTriangle));
    }
}
