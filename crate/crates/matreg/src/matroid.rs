//! Exact matroids given by their list of bases.
//!
//! Elements are 1..=n, subsets are bitmasks. Every constructor validates the
//! basis-exchange axiom; `from_bases`/`from_circuits` additionally reject
//! loops (elements lying in no basis), which only ever arise internally from
//! contractions and duals.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::subsets::{self, Mask};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matroid {
    n: usize,
    bases: Vec<Mask>,
}

impl Matroid {
    /// Validated constructor. Loops are permitted here; the file-level
    /// constructors reject them.
    pub fn new(n: usize, mut bases: Vec<Mask>) -> Result<Self> {
        if n > subsets::MAX_GROUND {
            return Err(Error::TooLarge(format!("ground set of {n} elements")));
        }
        if bases.is_empty() {
            return Err(Error::EmptyFamily);
        }
        let full = subsets::full_mask(n);
        for &b in &bases {
            if b & !full != 0 {
                let e = (b & !full).trailing_zeros() as usize + 1;
                return Err(Error::OutOfRange(e, n));
            }
        }
        subsets::sort_canonical(&mut bases);
        let r = bases[0].count_ones();
        for &b in &bases {
            if b.count_ones() != r {
                return Err(Error::UnequalCardinality(
                    subsets::elements(bases[0]),
                    subsets::elements(b),
                ));
            }
        }
        let set: HashSet<Mask> = bases.iter().copied().collect();
        for &b1 in &bases {
            for &b2 in &bases {
                if b1 == b2 {
                    continue;
                }
                let only1 = b1 & !b2;
                let only2 = b2 & !b1;
                let mut rest = only1;
                while rest != 0 {
                    let xbit = rest & rest.wrapping_neg();
                    rest &= rest - 1;
                    let stripped = b1 & !xbit;
                    let mut ys = only2;
                    let mut ok = false;
                    while ys != 0 {
                        let ybit = ys & ys.wrapping_neg();
                        ys &= ys - 1;
                        if set.contains(&(stripped | ybit)) {
                            ok = true;
                            break;
                        }
                    }
                    if !ok {
                        return Err(Error::ExchangeViolation {
                            b1: subsets::elements(b1),
                            b2: subsets::elements(b2),
                            x: xbit.trailing_zeros() as usize + 1,
                        });
                    }
                }
            }
        }
        Ok(Matroid { n, bases })
    }

    /// Build from explicit element lists; rejects loops.
    pub fn from_bases(n: usize, bases: &[Vec<usize>]) -> Result<Self> {
        let mut masks = Vec::with_capacity(bases.len());
        for b in bases {
            for &e in b {
                if e < 1 || e > n {
                    return Err(Error::OutOfRange(e, n));
                }
            }
            masks.push(subsets::mask_of(b));
        }
        let m = Matroid::new(n, masks)?;
        let loops = m.loops_mask();
        if loops != 0 {
            return Err(Error::LoopElement(loops.trailing_zeros() as usize + 1));
        }
        Ok(m)
    }

    /// Build from the circuit family; rejects non-antichains and families that
    /// are not the circuit set of a matroid.
    pub fn from_circuits(n: usize, circuits: &[Vec<usize>]) -> Result<Self> {
        let mut cmasks = Vec::with_capacity(circuits.len());
        for c in circuits {
            for &e in c {
                if e < 1 || e > n {
                    return Err(Error::OutOfRange(e, n));
                }
            }
            cmasks.push(subsets::mask_of(c));
        }
        for (i, &a) in cmasks.iter().enumerate() {
            for (j, &b) in cmasks.iter().enumerate() {
                if i != j && a & !b == 0 {
                    return Err(Error::NotAntichain(
                        subsets::elements(b),
                        subsets::elements(a),
                    ));
                }
            }
        }
        let full = subsets::full_mask(n);
        let circuit_free = |s: Mask| !cmasks.iter().any(|&c| c & !s == 0);
        // maximal circuit-free subsets
        let mut maximal = Vec::new();
        for s in 0..=full {
            if !circuit_free(s) {
                continue;
            }
            let mut is_max = true;
            for e in 1..=n {
                if !subsets::contains(s, e) && circuit_free(s | subsets::bit(e)) {
                    is_max = false;
                    break;
                }
            }
            if is_max {
                maximal.push(s);
            }
        }
        let m = Matroid::new(n, maximal)?;
        if m.circuits() != {
            let mut sorted = cmasks.clone();
            subsets::sort_canonical(&mut sorted);
            sorted
        } {
            return Err(Error::Inapplicable(
                "input is not the circuit set of a matroid".into(),
            ));
        }
        let loops = m.loops_mask();
        if loops != 0 {
            return Err(Error::LoopElement(loops.trailing_zeros() as usize + 1));
        }
        Ok(m)
    }

    /// The uniform matroid U_{k,n}: bases are all k-subsets of [n].
    pub fn uniform(k: isize, n: usize) -> Result<Self> {
        if k < 0 || k as usize > n || n == 0 {
            return Err(Error::InvalidRank { k, n });
        }
        Matroid::new(n, subsets::subsets_of_size(n, k as usize))
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.bases[0].count_ones() as usize
    }

    /// Bases in canonical order.
    pub fn bases(&self) -> &[Mask] {
        &self.bases
    }

    pub fn full(&self) -> Mask {
        subsets::full_mask(self.n)
    }

    pub fn is_basis(&self, s: Mask) -> bool {
        self.bases.binary_search_by(|&b| subsets::canonical_cmp(b, s)).is_ok()
    }

    pub fn is_independent(&self, s: Mask) -> bool {
        self.bases.iter().any(|&b| s & !b == 0)
    }

    /// r(A) = max |A ∩ B| over bases.
    pub fn rank_subset(&self, a: Mask) -> Result<usize> {
        if a & !self.full() != 0 {
            let e = (a & !self.full()).trailing_zeros() as usize + 1;
            return Err(Error::OutOfRange(e, self.n));
        }
        Ok(self
            .bases
            .iter()
            .map(|&b| (a & b).count_ones() as usize)
            .max()
            .unwrap())
    }

    pub fn dual(&self) -> Matroid {
        let full = self.full();
        let mut bases: Vec<Mask> = self.bases.iter().map(|&b| full & !b).collect();
        subsets::sort_canonical(&mut bases);
        Matroid { n: self.n, bases }
    }

    /// Minimal dependent sets, canonical order.
    pub fn circuits(&self) -> Vec<Mask> {
        let mut out = Vec::new();
        let r = self.rank();
        for size in 1..=(r + 1).min(self.n) {
            for s in subsets::subsets_of_size(self.n, size) {
                if self.is_independent(s) {
                    continue;
                }
                // every one-element-removed subset independent
                let mut minimal = true;
                let mut rest = s;
                while rest != 0 {
                    let ebit = rest & rest.wrapping_neg();
                    rest &= rest - 1;
                    if !self.is_independent(s & !ebit) {
                        minimal = false;
                        break;
                    }
                }
                if minimal {
                    out.push(s);
                }
            }
        }
        subsets::sort_canonical(&mut out);
        out
    }

    /// Size of the largest circuit; None for the free matroid.
    pub fn circumference(&self) -> Option<usize> {
        self.circuits()
            .iter()
            .map(|c| c.count_ones() as usize)
            .max()
    }

    /// Elements lying in no basis.
    pub fn loops_mask(&self) -> Mask {
        let union = self.bases.iter().fold(0, |m, &b| m | b);
        self.full() & !union
    }

    /// Elements lying in every basis (the coloops).
    pub fn star_centers(&self) -> Mask {
        self.bases.iter().fold(self.full(), |m, &b| m & b)
    }

    pub fn is_star(&self) -> bool {
        self.star_centers() != 0
    }

    /// Restriction to the elements of `a`, relabeled to 1..=|a|.
    /// Returns the relabeling map: map[new-1] = old.
    pub fn restriction(&self, a: Mask) -> Result<(Matroid, Vec<usize>)> {
        if a == 0 {
            return Err(Error::EmptySubset);
        }
        if a & !self.full() != 0 {
            let e = (a & !self.full()).trailing_zeros() as usize + 1;
            return Err(Error::OutOfRange(e, self.n));
        }
        let map = subsets::elements(a);
        let ra = self.rank_subset(a)?;
        let mut bases = Vec::new();
        for s in subsets::subsets_of_size(map.len(), ra) {
            let old = uncompress(s, &map);
            if self.is_independent(old) {
                bases.push(s);
            }
        }
        Ok((Matroid::new(map.len(), bases)?, map))
    }

    pub fn deletion(&self, x: usize) -> Result<(Matroid, Vec<usize>)> {
        self.restriction(self.full() & !subsets::bit(x))
    }

    /// Contraction by an independent set `f`, restricted to non-loop elements
    /// and relabeled. Its independence complex is lk of f in the complex of
    /// self. map[new-1] = old.
    pub fn link_matroid(&self, f: Mask) -> Result<(Matroid, Vec<usize>)> {
        if !self.is_independent(f) {
            return Err(Error::DependentFace(subsets::elements(f)));
        }
        if f == 0 {
            return Ok((self.clone(), (1..=self.n).collect()));
        }
        let mut bases: Vec<Mask> = self
            .bases
            .iter()
            .filter(|&&b| f & !b == 0)
            .map(|&b| b & !f)
            .collect();
        subsets::sort_canonical(&mut bases);
        let support = bases.iter().fold(0, |m, &b| m | b);
        let map = subsets::elements(support);
        let relabeled: Vec<Mask> = bases.iter().map(|&b| compress(b, &map)).collect();
        Ok((
            Matroid {
                n: map.len(),
                bases: if relabeled.is_empty() { vec![0] } else { relabeled },
            },
            map,
        ))
    }

    /// Restriction to the non-coloop elements. None when every element is a
    /// coloop (free matroid: the core has empty ground set).
    pub fn core(&self) -> Option<(Matroid, Vec<usize>)> {
        let centers = self.star_centers();
        if centers == self.full() {
            return None;
        }
        if centers == 0 {
            return Some((self.clone(), (1..=self.n).collect()));
        }
        Some(self.restriction(self.full() & !centers).expect("non-empty"))
    }

    /// Ground sets are concatenated; the second summand is shifted by n1.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        let n = self.n + other.n;
        if n > subsets::MAX_GROUND {
            return Err(Error::TooLarge(format!("direct sum on {n} elements")));
        }
        let mut bases = Vec::with_capacity(self.bases.len() * other.bases.len());
        for &b1 in &self.bases {
            for &b2 in &other.bases {
                bases.push(b1 | (b2 << self.n));
            }
        }
        Matroid::new(n, bases)
    }

    /// Some(r) iff the bases are exactly all r-subsets of the ground set.
    pub fn uniform_rank(&self) -> Option<usize> {
        let r = self.rank();
        let expected = crate::subsets::subsets_of_size(self.n, r);
        if self.bases == expected {
            Some(r)
        } else {
            None
        }
    }
}

/// Relabel a mask over `map` (new -> old) back into the old labeling.
pub fn uncompress(mask: Mask, map: &[usize]) -> Mask {
    let mut out = 0;
    for (i, &old) in map.iter().enumerate() {
        if mask & (1 << i) != 0 {
            out |= subsets::bit(old);
        }
    }
    out
}

/// Relabel a mask in old labels into positions of `map` (new -> old).
/// Bits of `mask` outside the map are dropped.
pub fn compress(mask: Mask, map: &[usize]) -> Mask {
    let mut out = 0;
    for (i, &old) in map.iter().enumerate() {
        if subsets::contains(mask, old) {
            out |= 1 << i;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subsets::mask_of;

    pub(crate) fn square() -> Matroid {
        Matroid::from_bases(4, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]]).unwrap()
    }

    #[test]
    fn from_bases_square() {
        let m = square();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.bases().len(), 4);
    }

    #[test]
    fn from_bases_rejects() {
        assert_eq!(
            Matroid::from_bases(2, &[]).unwrap_err(),
            Error::EmptyFamily
        );
        assert!(matches!(
            Matroid::from_bases(3, &[vec![1, 2], vec![3, 4]]).unwrap_err(),
            Error::OutOfRange(4, 3)
        ));
        assert!(matches!(
            Matroid::from_bases(3, &[vec![1, 2], vec![3]]).unwrap_err(),
            Error::UnequalCardinality(..)
        ));
        // {12, 34} violates exchange
        assert!(matches!(
            Matroid::from_bases(4, &[vec![1, 2], vec![3, 4]]).unwrap_err(),
            Error::ExchangeViolation { .. }
        ));
        // loop: 3 in no basis
        assert!(matches!(
            Matroid::from_bases(3, &[vec![1], vec![2]]).unwrap_err(),
            Error::LoopElement(3)
        ));
    }

    #[test]
    fn from_circuits_square() {
        let m = Matroid::from_circuits(4, &[vec![1, 3], vec![2, 4]]).unwrap();
        assert_eq!(m, square());
        let u = Matroid::from_circuits(3, &[vec![1, 2, 3]]).unwrap();
        assert_eq!(u, Matroid::uniform(2, 3).unwrap());
        assert!(matches!(
            Matroid::from_circuits(3, &[vec![1, 2], vec![1, 2, 3]]).unwrap_err(),
            Error::NotAntichain(..)
        ));
    }

    #[test]
    fn uniform_properties() {
        let u = Matroid::uniform(2, 4).unwrap();
        assert_eq!(u.bases().len(), 6);
        assert_eq!(u.circumference(), Some(3));
        assert_eq!(u.circuits(), subsets::subsets_of_size(4, 3));
        assert_eq!(u.dual(), Matroid::uniform(2, 4).unwrap());
        assert_eq!(
            Matroid::uniform(1, 3).unwrap().dual(),
            Matroid::uniform(2, 3).unwrap()
        );
        assert!(Matroid::uniform(-1, 3).is_err());
        assert!(Matroid::uniform(4, 3).is_err());
    }

    #[test]
    fn dual_involution_and_rank() {
        for m in [square(), Matroid::uniform(2, 5).unwrap()] {
            assert_eq!(m.dual().dual(), m);
            assert_eq!(m.dual().rank(), m.ground_size() - m.rank());
        }
        let free = Matroid::uniform(3, 3).unwrap();
        assert_eq!(free.dual().bases(), &[0]);
    }

    #[test]
    fn rank_subset_examples() {
        let m = square();
        assert_eq!(m.rank_subset(mask_of(&[1, 3])).unwrap(), 1);
        assert_eq!(m.rank_subset(0).unwrap(), 0);
        assert_eq!(m.rank_subset(m.full()).unwrap(), 2);
    }

    #[test]
    fn circuits_examples() {
        assert_eq!(square().circuits(), vec![mask_of(&[1, 3]), mask_of(&[2, 4])]);
        assert!(Matroid::uniform(3, 3).unwrap().circuits().is_empty());
        assert_eq!(Matroid::uniform(3, 3).unwrap().circumference(), None);
        assert_eq!(square().circumference(), Some(2));
    }

    #[test]
    fn restriction_examples() {
        let m = square();
        let (r, map) = m.restriction(mask_of(&[1, 2, 3])).unwrap();
        assert_eq!(map, vec![1, 2, 3]);
        assert_eq!(r.bases(), &[mask_of(&[1, 2]), mask_of(&[2, 3])]);
        assert_eq!(r.circuits(), vec![mask_of(&[1, 3])]);
        let (full, _) = m.restriction(m.full()).unwrap();
        assert_eq!(full, m);
        let (f, _) = Matroid::uniform(2, 4)
            .unwrap()
            .restriction(mask_of(&[1, 2]))
            .unwrap();
        assert_eq!(f, Matroid::uniform(2, 2).unwrap());
        assert!(m.restriction(0).is_err());
    }

    #[test]
    fn link_matroid_examples() {
        let u = Matroid::uniform(2, 4).unwrap();
        let (l, map) = u.link_matroid(mask_of(&[1])).unwrap();
        assert_eq!(map, vec![2, 3, 4]);
        assert_eq!(l, Matroid::uniform(1, 3).unwrap());

        // square, f={1}: element 3 is a loop of the contraction and drops out
        let (l, map) = square().link_matroid(mask_of(&[1])).unwrap();
        assert_eq!(map, vec![2, 4]);
        assert_eq!(l.bases(), &[mask_of(&[1]), mask_of(&[2])]);

        let (l, _) = square().link_matroid(0).unwrap();
        assert_eq!(l, square());

        assert!(matches!(
            square().link_matroid(mask_of(&[1, 3])).unwrap_err(),
            Error::DependentFace(_)
        ));
    }

    #[test]
    fn star_and_core() {
        let m = Matroid::new(3, vec![mask_of(&[1, 3]), mask_of(&[2, 3])]).unwrap();
        assert!(m.is_star());
        assert_eq!(m.star_centers(), mask_of(&[3]));
        let (c, map) = m.core().unwrap();
        assert_eq!(map, vec![1, 2]);
        assert_eq!(c, Matroid::uniform(1, 2).unwrap());
        // core is idempotent
        let (cc, _) = c.core().unwrap();
        assert_eq!(cc, c);
        assert_eq!(c.rank(), m.rank() - 1);

        assert!(!square().is_star());
        assert_eq!(square().core().unwrap().0, square());
        assert!(Matroid::uniform(3, 3).unwrap().core().is_none());
        let u = Matroid::uniform(2, 4).unwrap();
        assert_eq!(u.core().unwrap().0, u);
    }

    #[test]
    fn direct_sum_examples() {
        let u12 = Matroid::uniform(1, 2).unwrap();
        // bases product {1|2} x {3|4}: the square matroid up to swapping 2 and 3
        let s = u12.direct_sum(&u12).unwrap();
        assert_eq!(
            s.bases(),
            &[mask_of(&[1, 3]), mask_of(&[1, 4]), mask_of(&[2, 3]), mask_of(&[2, 4])]
        );
        assert_eq!(s.circumference(), square().circumference());
        assert_eq!(s.rank(), square().rank());
        let coloop = Matroid::uniform(1, 1).unwrap();
        let m = square().direct_sum(&coloop).unwrap();
        assert_eq!(m.star_centers(), mask_of(&[5]));
        let u23 = Matroid::uniform(2, 3).unwrap();
        let s = u23.direct_sum(&u23).unwrap();
        assert_eq!(s.circuits(), vec![mask_of(&[1, 2, 3]), mask_of(&[4, 5, 6])]);
    }

    #[test]
    fn circuits_restrict_invariant() {
        let m = Matroid::uniform(2, 5).unwrap();
        let a = mask_of(&[1, 3, 4, 5]);
        let (r, map) = m.restriction(a).unwrap();
        let restricted: Vec<Mask> = m
            .circuits()
            .into_iter()
            .filter(|&c| c & !a == 0)
            .map(|c| compress(c, &map))
            .collect();
        assert_eq!(r.circuits(), restricted);
    }

    #[test]
    fn uniform_rank_detection() {
        assert_eq!(Matroid::uniform(2, 4).unwrap().uniform_rank(), Some(2));
        assert_eq!(square().uniform_rank(), None);
        let rank0 = Matroid::new(2, vec![0]).unwrap();
        assert_eq!(rank0.uniform_rank(), Some(0));
    }
}
