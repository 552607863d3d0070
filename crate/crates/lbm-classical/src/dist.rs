//! Link-indexed distribution function storage.

use crate::field::Field;
use crate::lattice::LINKS;

/// Five `nx × ny` planes, one per lattice link.
#[derive(Debug, Clone, PartialEq)]
pub struct DistributionSet {
    nx: usize,
    ny: usize,
    data: Vec<f64>,
}

impl DistributionSet {
    pub fn zeros(nx: usize, ny: usize) -> Self {
        Self {
            nx,
            ny,
            data: vec![0.0; LINKS * nx * ny],
        }
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    #[inline]
    fn idx(&self, link: usize, x: usize, y: usize) -> usize {
        debug_assert!(link < LINKS && x < self.nx && y < self.ny);
        (link * self.ny + y) * self.nx + x
    }

    #[inline]
    pub fn get(&self, link: usize, x: usize, y: usize) -> f64 {
        self.data[self.idx(link, x, y)]
    }

    #[inline]
    pub fn set(&mut self, link: usize, x: usize, y: usize, v: f64) {
        let i = self.idx(link, x, y);
        self.data[i] = v;
    }

    /// Sum over links at one node.
    pub fn sum_at(&self, x: usize, y: usize) -> f64 {
        (0..LINKS).map(|a| self.get(a, x, y)).sum()
    }

    /// One link plane as a field.
    pub fn plane(&self, link: usize) -> Field {
        Field::from_fn(self.nx, self.ny, |x, y| self.get(link, x, y))
    }
}
