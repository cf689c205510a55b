//! Fixed-width bitset over `u64` words, sized at construction.
//!
//! The solver keeps one bit per unordered vertex pair and one bit per
//! candidate vertex; every hot operation is a word loop, so this stays
//! hand-rolled instead of pulling in a bit-vector crate.

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Bitset {
    bits: usize,
    words: Vec<u64>,
}

impl Bitset {
    pub fn new(bits: usize) -> Self {
        Bitset {
            bits,
            words: vec![0; bits.div_ceil(64)],
        }
    }

    pub fn full(bits: usize) -> Self {
        let mut s = Bitset::new(bits);
        for w in &mut s.words {
            *w = !0;
        }
        s.trim();
        s
    }

    /// Zeroes the padding bits above `self.bits`.
    fn trim(&mut self) {
        let rem = self.bits % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn len(&self) -> usize {
        self.bits
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.bits);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.bits);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn clear(&mut self, i: usize) {
        debug_assert!(i < self.bits);
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn and_count(&self, other: &Bitset) -> usize {
        debug_assert_eq!(self.bits, other.bits);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// `self &= !other`; returns how many set bits were removed.
    pub fn subtract(&mut self, other: &Bitset) -> usize {
        debug_assert_eq!(self.bits, other.bits);
        let mut removed = 0;
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            removed += (*a & b).count_ones() as usize;
            *a &= !b;
        }
        removed
    }

    pub fn union_with(&mut self, other: &Bitset) {
        debug_assert_eq!(self.bits, other.bits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Bitset) {
        debug_assert_eq!(self.bits, other.bits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    /// True when `self & other` has at least one bit.
    pub fn intersects(&self, other: &Bitset) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// Index of the lowest set bit of `self & other`, if any.
    pub fn first_common(&self, other: &Bitset) -> Option<usize> {
        for (i, (a, b)) in self.words.iter().zip(&other.words).enumerate() {
            let w = a & b;
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Raw word view; padding bits above `len()` are always zero.
    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    /// Mutable word view; callers must keep the padding bits zero.
    pub(crate) fn words_mut(&mut self) -> &mut [u64] {
        &mut self.words
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_count() {
        let mut b = Bitset::new(130);
        b.set(0);
        b.set(64);
        b.set(129);
        assert!(b.get(64) && !b.get(63));
        assert_eq!(b.count(), 3);
        assert_eq!(b.iter_ones().collect::<Vec<_>>(), vec![0, 64, 129]);
        b.clear(64);
        assert_eq!(b.count(), 2);
    }

    #[test]
    fn full_trims_padding() {
        let b = Bitset::full(70);
        assert_eq!(b.count(), 70);
        assert!(b.get(69));
    }

    #[test]
    fn subtract_reports_removed() {
        let mut a = Bitset::full(100);
        let mut mask = Bitset::new(100);
        mask.set(3);
        mask.set(99);
        assert_eq!(a.subtract(&mask), 2);
        assert_eq!(a.count(), 98);
        assert_eq!(a.subtract(&mask), 0);
        assert_eq!(a.first_common(&Bitset::full(100)), Some(0));
        assert!(!a.intersects(&mask));
    }
}
