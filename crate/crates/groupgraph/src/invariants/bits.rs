//! Bitset-on-word-slice helpers shared by the exact solvers.

pub(super) fn popcount(set: &[u64]) -> usize {
    set.iter().map(|w| w.count_ones() as usize).sum()
}

pub(super) fn has(set: &[u64], v: usize) -> bool {
    set[v / 64] >> (v % 64) & 1 == 1
}

pub(super) fn set_bit(set: &mut [u64], v: usize) {
    set[v / 64] |= 1 << (v % 64);
}

pub(super) fn clear_bit(set: &mut [u64], v: usize) {
    set[v / 64] &= !(1 << (v % 64));
}

/// Ascending indices of the set bits.
pub(super) fn ones(set: &[u64]) -> impl Iterator<Item = usize> + '_ {
    set.iter().enumerate().flat_map(|(i, &word)| {
        std::iter::successors(Some(word), |&w| Some(w & w.wrapping_sub(1)))
            .take_while(|&w| w != 0)
            .map(move |w| i * 64 + w.trailing_zeros() as usize)
    })
}

pub(super) fn and(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

pub(super) fn and_count(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
}

pub(super) fn subtract(a: &mut [u64], b: &[u64]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x &= !y;
    }
}

/// Clears bits `0..=v`.
pub(super) fn restrict_above(set: &mut [u64], v: usize) {
    for w in set.iter_mut().take(v / 64) {
        *w = 0;
    }
    set[v / 64] &= !((1u128 << (v % 64 + 1)) - 1) as u64;
}

/// The set `{0, .., n-1}`.
pub(super) fn full(n: usize) -> Vec<u64> {
    let words = n.div_ceil(64);
    let mut set = vec![u64::MAX; words];
    if n % 64 != 0 {
        set[words - 1] = (1u64 << (n % 64)) - 1;
    }
    set
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        let mut s = full(70);
        assert_eq!(popcount(&s), 70);
        assert!(has(&s, 69));
        clear_bit(&mut s, 69);
        assert!(!has(&s, 69));
        set_bit(&mut s, 69);
        restrict_above(&mut s, 64);
        assert_eq!(ones(&s).collect::<Vec<_>>(), vec![65, 66, 67, 68, 69]);
        restrict_above(&mut s, 69);
        assert_eq!(popcount(&s), 0);
    }

    #[test]
    fn set_algebra() {
        let a = full(10);
        let mut b = vec![0u64];
        set_bit(&mut b, 3);
        set_bit(&mut b, 9);
        assert_eq!(and(&a, &b), b);
        assert_eq!(and_count(&a, &b), 2);
        let mut c = a.clone();
        subtract(&mut c, &b);
        assert_eq!(popcount(&c), 8);
        assert!(!has(&c, 3));
    }
}
