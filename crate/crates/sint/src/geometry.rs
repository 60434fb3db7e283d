//! Axis-aligned boxes and overlap geometry.
//!
//! Boxes are stored center-based (`cx, cy, w, h`) in pixel units and treated
//! as the half-open region `[x0, x0+w) x [y0, y0+h)`. File formats use the
//! top-left `x,y,w,h` convention; see [`BBox::from_top_left`].

use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BBox<S> {
    pub cx: S,
    pub cy: S,
    pub w: S,
    pub h: S,
}

impl<S: Real> BBox<S> {
    pub fn new(cx: S, cy: S, w: S, h: S) -> Self {
        BBox { cx, cy, w, h }
    }

    pub fn from_top_left(x: S, y: S, w: S, h: S) -> Self {
        let two = S::of(2.0);
        BBox {
            cx: x + w / two,
            cy: y + h / two,
            w,
            h,
        }
    }

    pub fn x0(&self) -> S {
        self.cx - self.w / S::of(2.0)
    }

    pub fn y0(&self) -> S {
        self.cy - self.h / S::of(2.0)
    }

    pub fn x1(&self) -> S {
        self.cx + self.w / S::of(2.0)
    }

    pub fn y1(&self) -> S {
        self.cy + self.h / S::of(2.0)
    }

    pub fn area(&self) -> S {
        self.w.max(S::zero()) * self.h.max(S::zero())
    }

    /// Same center, width and height multiplied by `s`.
    pub fn scaled(&self, s: S) -> Self {
        BBox {
            cx: self.cx,
            cy: self.cy,
            w: self.w * s,
            h: self.h * s,
        }
    }

    pub fn translated(&self, dx: S, dy: S) -> Self {
        BBox {
            cx: self.cx + dx,
            cy: self.cy + dy,
            w: self.w,
            h: self.h,
        }
    }

    /// Euclidean distance between the centers of two boxes.
    pub fn center_distance(&self, other: &BBox<S>) -> S {
        let dx = self.cx - other.cx;
        let dy = self.cy - other.cy;
        (dx * dx + dy * dy).sqrt()
    }

    pub fn intersects_image(&self, width: usize, height: usize) -> bool {
        self.x1() > S::zero()
            && self.y1() > S::zero()
            && self.x0() < S::of(width as f64)
            && self.y0() < S::of(height as f64)
            && self.w > S::zero()
            && self.h > S::zero()
    }

    /// Intersection with the image rectangle, or `None` when empty.
    pub fn clipped(&self, width: usize, height: usize) -> Option<BBox<S>> {
        let x0 = self.x0().max(S::zero());
        let y0 = self.y0().max(S::zero());
        let x1 = self.x1().min(S::of(width as f64));
        let y1 = self.y1().min(S::of(height as f64));
        if x1 <= x0 || y1 <= y0 {
            return None;
        }
        Some(BBox {
            cx: (x0 + x1) / S::of(2.0),
            cy: (y0 + y1) / S::of(2.0),
            w: x1 - x0,
            h: y1 - y0,
        })
    }

    /// Pixels whose centers fall inside the box, as integer `(x, y)` pairs.
    pub fn covered_pixels(&self, width: usize, height: usize) -> Vec<(usize, usize)> {
        let half = S::of(0.5);
        let px0 = (self.x0() - half).ceil().as_f64().max(0.0) as usize;
        let py0 = (self.y0() - half).ceil().as_f64().max(0.0) as usize;
        let px1 = ((self.x1() - half).ceil().as_f64().max(0.0) as usize).min(width);
        let py1 = ((self.y1() - half).ceil().as_f64().max(0.0) as usize).min(height);
        let mut out = Vec::new();
        for y in py0..py1 {
            for x in px0..px1 {
                out.push((x, y));
            }
        }
        out
    }

    /// True when the point lies in the half-open box region.
    pub fn contains_point(&self, x: S, y: S) -> bool {
        x >= self.x0() && x < self.x1() && y >= self.y0() && y < self.y1()
    }
}

/// Intersection-over-union of two boxes. A zero-area union yields 0.
pub fn iou<S: Real>(a: &BBox<S>, b: &BBox<S>) -> S {
    let ix = (a.x1().min(b.x1()) - a.x0().max(b.x0())).max(S::zero());
    let iy = (a.y1().min(b.y1()) - a.y0().max(b.y0())).max(S::zero());
    let inter = ix * iy;
    let union = a.area() + b.area() - inter;
    if union <= S::zero() {
        S::zero()
    } else {
        inter / union
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iou_of_identical_boxes_is_one() {
        let b = BBox::new(10.0, 12.0, 4.0, 6.0);
        assert_eq!(iou(&b, &b), 1.0);
    }

    #[test]
    fn iou_of_disjoint_boxes_is_zero() {
        let a = BBox::new(5.0, 5.0, 2.0, 2.0);
        let b = BBox::new(50.0, 50.0, 2.0, 2.0);
        assert_eq!(iou(&a, &b), 0.0);
    }

    #[test]
    fn iou_unit_squares_offset_by_half_width() {
        // Overlap 1/2, union 3/2.
        let a = BBox::from_top_left(0.0, 0.0, 1.0, 1.0);
        let b = BBox::from_top_left(0.5, 0.0, 1.0, 1.0);
        assert!((iou(&a, &b) - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn iou_zero_area_union_defined_as_zero() {
        let a = BBox::new(1.0, 1.0, 0.0, 0.0);
        assert_eq!(iou(&a, &a), 0.0);
    }

    #[test]
    fn top_left_round_trip() {
        let b = BBox::<f64>::from_top_left(3.0, 4.0, 10.0, 20.0);
        assert_eq!(b.x0(), 3.0);
        assert_eq!(b.y0(), 4.0);
        assert_eq!((b.cx, b.cy), (8.0, 14.0));
    }

    #[test]
    fn covered_pixels_of_integer_box() {
        let b = BBox::<f64>::from_top_left(2.0, 3.0, 3.0, 2.0);
        let px = b.covered_pixels(100, 100);
        assert_eq!(px.len(), 6);
        assert!(px.contains(&(2, 3)) && px.contains(&(4, 4)));
        assert!(!px.contains(&(5, 3)));
    }

    #[test]
    fn clip_to_image() {
        let b = BBox::<f64>::from_top_left(-5.0, -5.0, 10.0, 10.0);
        let c = b.clipped(100, 100).unwrap();
        assert_eq!((c.x0(), c.y0(), c.w, c.h), (0.0, 0.0, 5.0, 5.0));
        assert!(BBox::<f64>::from_top_left(-20.0, 0.0, 5.0, 5.0).clipped(100, 100).is_none());
    }
}
