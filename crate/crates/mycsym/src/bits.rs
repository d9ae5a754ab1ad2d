//! Minimal bitset helpers over `&[u64]` word slices.

pub(crate) const WORD: usize = 64;

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

pub(crate) fn test(bits: &[u64], i: usize) -> bool {
    bits[i / WORD] >> (i % WORD) & 1 == 1
}

pub(crate) fn set(bits: &mut [u64], i: usize) {
    bits[i / WORD] |= 1 << (i % WORD);
}

pub(crate) fn clear(bits: &mut [u64], i: usize) {
    bits[i / WORD] &= !(1 << (i % WORD));
}

pub(crate) fn count(bits: &[u64]) -> usize {
    bits.iter().map(|w| w.count_ones() as usize).sum()
}

pub(crate) fn disjoint(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & y == 0)
}

/// Indices of set bits, ascending.
pub(crate) fn ones(bits: &[u64]) -> impl Iterator<Item = usize> + '_ {
    bits.iter().enumerate().flat_map(|(wi, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(wi * WORD + b)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_test_clear_roundtrip() {
        let mut b = vec![0u64; 2];
        for i in [0, 1, 63, 64, 100, 127] {
            assert!(!test(&b, i));
            set(&mut b, i);
            assert!(test(&b, i));
        }
        assert_eq!(count(&b), 6);
        assert_eq!(ones(&b).collect::<Vec<_>>(), vec![0, 1, 63, 64, 100, 127]);
        clear(&mut b, 63);
        assert!(!test(&b, 63));
        assert_eq!(count(&b), 5);
    }

    #[test]
    fn disjoint_checks_word_overlap() {
        let mut a = vec![0u64; 2];
        let mut b = vec![0u64; 2];
        set(&mut a, 3);
        set(&mut b, 70);
        assert!(disjoint(&a, &b));
        set(&mut b, 3);
        assert!(!disjoint(&a, &b));
    }
}
