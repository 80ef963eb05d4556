use crate::geometry::{Color, PointSet};

/// Fixed-size set of point indices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct Mask(Vec<u64>);

impl Mask {
    pub fn empty(len: usize) -> Self {
        Mask(vec![0; len.div_ceil(64).max(1)])
    }

    pub fn full(len: usize) -> Self {
        let mut m = Mask::empty(len);
        for i in 0..len {
            m.set(i);
        }
        m
    }

    pub fn from_fn(len: usize, mut f: impl FnMut(usize) -> bool) -> Self {
        let mut m = Mask::empty(len);
        for i in 0..len {
            if f(i) {
                m.set(i);
            }
        }
        m
    }

    pub fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    pub fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn and(&self, other: &Mask) -> Mask {
        Mask(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    pub fn and_count(&self, other: &Mask) -> u64 {
        self.0.iter().zip(&other.0).map(|(a, b)| (a & b).count_ones() as u64).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|w| *w == 0)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(wi * 64 + b)
            })
        })
    }
}

/// Weighted tallies of masks: popcount over unit weights plus the surplus of
/// the few heavy points.
pub(crate) struct Weights {
    red: Mask,
    blue: Mask,
    all: Mask,
    heavy: Vec<(usize, u64, Option<Color>)>,
}

impl Weights {
    pub fn new(ps: &PointSet) -> Self {
        let n = ps.len();
        let pts = ps.points();
        Weights {
            red: Mask::from_fn(n, |i| pts[i].color == Some(Color::Red)),
            blue: Mask::from_fn(n, |i| pts[i].color == Some(Color::Blue)),
            all: Mask::full(n),
            heavy: pts
                .iter()
                .enumerate()
                .filter(|(_, p)| p.weight > 1)
                .map(|(i, p)| (i, p.weight - 1, p.color))
                .collect(),
        }
    }

    pub fn color(&self, mask: &Mask, color: Color) -> u64 {
        let unit = match color {
            Color::Red => &self.red,
            Color::Blue => &self.blue,
        };
        mask.and_count(unit)
            + self.heavy.iter().filter(|(i, _, c)| *c == Some(color) && mask.get(*i)).map(|(_, w, _)| w).sum::<u64>()
    }

    pub fn total(&self, mask: &Mask) -> u64 {
        mask.and_count(&self.all) + self.heavy.iter().filter(|(i, _, _)| mask.get(*i)).map(|(_, w, _)| w).sum::<u64>()
    }

    pub fn color_mask(&self, color: Color) -> &Mask {
        match color {
            Color::Red => &self.red,
            Color::Blue => &self.blue,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;

    #[test]
    fn mask_ops_across_words() {
        let a = Mask::from_fn(130, |i| i % 3 == 0);
        let b = Mask::from_fn(130, |i| i % 2 == 0);
        let c = a.and(&b);
        assert_eq!(c.ones().collect::<Vec<_>>(), (0..130).filter(|i| i % 6 == 0).collect::<Vec<_>>());
        assert_eq!(a.and_count(&b), 22);
        assert!(Mask::empty(130).is_empty());
        assert!(!c.is_empty());
    }

    #[test]
    fn heavy_weights() {
        let mut ps = PointSet::new(1).unwrap();
        ps.push_point(Point::origin(1), Some(Color::Blue), 14).unwrap();
        ps.push_point(Point::origin(1), Some(Color::Red), 1).unwrap();
        ps.push_point(Point::origin(1), None, 3).unwrap();
        let w = Weights::new(&ps);
        let all = Mask::full(3);
        assert_eq!((w.color(&all, Color::Blue), w.color(&all, Color::Red), w.total(&all)), (14, 1, 18));
        let only_red = Mask::from_fn(3, |i| i == 1);
        assert_eq!(w.total(&only_red), 1);
    }
}
