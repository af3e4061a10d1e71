//! Bitmask subsets of a ground set 1..=n (element e is bit e-1).
//!
//! The canonical order used everywhere for set-valued output is the
//! lexicographic order on sorted integer tuples, so {1,4} < {2,3} and a
//! proper prefix sorts first.

use std::cmp::Ordering;

pub type Mask = u32;

pub const MAX_GROUND: usize = 20;

#[inline]
pub fn bit(element: usize) -> Mask {
    1 << (element - 1)
}

#[inline]
pub fn full_mask(n: usize) -> Mask {
    if n == 0 {
        0
    } else {
        (1u32 << n) - 1
    }
}

#[inline]
pub fn contains(mask: Mask, element: usize) -> bool {
    mask & bit(element) != 0
}

/// Elements of a mask, ascending and 1-based.
pub fn elements(mask: Mask) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() as usize + 1);
        m &= m - 1;
    }
    out
}

pub fn mask_of(elements: &[usize]) -> Mask {
    elements.iter().fold(0, |m, &e| m | bit(e))
}

/// Lexicographic order on the sorted element tuples.
pub fn canonical_cmp(a: Mask, b: Mask) -> Ordering {
    let (mut x, mut y) = (a, b);
    while x != 0 && y != 0 {
        let i = x.trailing_zeros();
        let j = y.trailing_zeros();
        match i.cmp(&j) {
            Ordering::Equal => {
                x &= x - 1;
                y &= y - 1;
            }
            other => return other,
        }
    }
    x.count_ones().cmp(&y.count_ones())
}

pub fn sort_canonical(masks: &mut Vec<Mask>) {
    masks.sort_by(|&a, &b| canonical_cmp(a, b));
    masks.dedup();
}

/// All k-subsets of 1..=n in canonical order.
pub fn subsets_of_size(n: usize, k: usize) -> Vec<Mask> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut current = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Mask>) {
        if current.len() == k {
            out.push(mask_of(current));
            return;
        }
        for e in start..=n {
            if n - e + 1 < k - current.len() {
                break;
            }
            current.push(e);
            rec(n, k, e + 1, current, out);
            current.pop();
        }
    }
    rec(n, k, 1, &mut current, &mut out);
    out
}

/// All subsets of `mask`, including empty and `mask` itself (submask walk order).
pub fn submasks(mask: Mask) -> Vec<Mask> {
    let mut out = Vec::with_capacity(1 << mask.count_ones());
    let mut s = mask;
    loop {
        out.push(s);
        if s == 0 {
            break;
        }
        s = (s - 1) & mask;
    }
    out
}

/// All vectors in N^n with coordinate sum exactly `total`.
pub fn compositions(n: usize, total: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(idx: usize, remaining: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if idx + 1 == cur.len() {
            cur[idx] = remaining;
            out.push(cur.clone());
            return;
        }
        for v in 0..=remaining {
            cur[idx] = v;
            rec(idx + 1, remaining - v, cur, out);
        }
    }
    if n == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(0, total, &mut cur, &mut out);
    out
}
