//! Bit-mask plumbing shared by the two exhaustive solvers.

/// Iterator over the indices of set bits, lowest first.
pub(crate) struct Bits(u64);

impl Iterator for Bits {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

pub(crate) fn bits(mask: u64) -> Bits {
    Bits(mask)
}

/// Mask with the lowest `n` bits set. `n` must be below 64.
pub(crate) fn full_mask(n: usize) -> u64 {
    debug_assert!(n < 64);
    (1u64 << n) - 1
}
