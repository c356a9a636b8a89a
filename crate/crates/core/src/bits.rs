//! Small helpers for `u128` vertex sets.

pub type VertexSet = u128;

#[inline]
pub fn bit(v: usize) -> VertexSet {
    1u128 << v
}

#[inline]
pub fn low_mask(n: usize) -> VertexSet {
    if n >= 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

#[inline]
pub fn contains(set: VertexSet, v: usize) -> bool {
    (set >> v) & 1 == 1
}

/// Iterates the members of a vertex set in increasing order.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub VertexSet);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

pub fn set_of(vertices: &[usize]) -> VertexSet {
    vertices.iter().fold(0, |acc, &v| acc | bit(v))
}
