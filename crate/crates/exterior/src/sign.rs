//! Permutation-sign bookkeeping for alternating index tuples.

/// Sort an index tuple, tracking the permutation sign. `None` when an index
/// repeats (the alternating object vanishes).
pub(crate) fn sort_signed(mut v: Vec<usize>) -> Option<(Vec<usize>, i8)> {
    let mut sign = 1i8;
    // Insertion sort; each swap of adjacent entries flips the sign.
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, sign))
}

/// Sign of the permutation sorting `head ++ tail` when `head` and `tail` are
/// each sorted and mutually disjoint: the parity of the number of pairs
/// (h, t) with t < h.
pub(crate) fn merge_sign(head: &[usize], tail: &[usize]) -> i8 {
    let mut inversions = 0usize;
    for &h in head {
        inversions += tail.iter().filter(|&&t| t < h).count();
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Is `sub` (sorted) a subset of `sup` (sorted)?
pub(crate) fn is_subset(sub: &[usize], sup: &[usize]) -> bool {
    let mut it = sup.iter();
    'outer: for s in sub {
        for t in it.by_ref() {
            if t == s {
                continue 'outer;
            }
            if t > s {
                return false;
            }
        }
        return false;
    }
    true
}

/// Elements of `sup` not in `sub`, both sorted.
pub(crate) fn complement(sub: &[usize], sup: &[usize]) -> Vec<usize> {
    sup.iter().filter(|i| !sub.contains(i)).copied().collect()
}
