//! Arboricity a(M), the intersection number γ(M), and the §-level checks
//! a(M) ≤ c(M*) and c(M)(n - r) ≥ n.
//!
//! Both searches are exact: iterative deepening over the number of bases,
//! with the observation that in a minimum witness every basis strictly
//! shrinks the running intersection (resp. strictly grows the covered set),
//! so index-increasing DFS with that pruning is complete.

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::report::VerificationRecord;
use crate::subsets::{self, Mask};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverKind {
    BaseCover,
    EmptyIntersection,
    ForestCover,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverCertificate {
    pub kind: CoverKind,
    pub witness: Vec<Mask>,
    pub size: usize,
}

impl CoverCertificate {
    /// Re-validate against the matroid, independently of the search.
    pub fn validate(&self, m: &Matroid) -> bool {
        if self.size != self.witness.len() || self.witness.is_empty() {
            return false;
        }
        match self.kind {
            CoverKind::BaseCover => {
                self.witness.iter().all(|&b| m.is_basis(b))
                    && self.witness.iter().fold(0, |acc, &b| acc | b) == m.full()
            }
            CoverKind::EmptyIntersection => {
                self.witness.iter().all(|&b| m.is_basis(b))
                    && self.witness.iter().fold(m.full(), |acc, &b| acc & b) == 0
            }
            CoverKind::ForestCover => false, // graph-side certificates validate in `graph`
        }
    }
}

/// Minimum number of bases with empty intersection, with a witness.
pub fn gamma(m: &Matroid) -> Result<(usize, CoverCertificate)> {
    if m.is_star() {
        return Err(Error::StarMatroid(subsets::elements(m.star_centers())));
    }
    let bases = m.bases();
    for k in 1..=m.ground_size().max(1) {
        let mut chosen = Vec::new();
        if intersect_dfs(bases, m.full(), 0, k, &mut chosen) {
            let witness: Vec<Mask> = chosen.iter().map(|&i| bases[i]).collect();
            let cert = CoverCertificate {
                kind: CoverKind::EmptyIntersection,
                size: witness.len(),
                witness,
            };
            debug_assert!(cert.validate(m));
            return Ok((k, cert));
        }
    }
    unreachable!("a non-star matroid always admits an empty intersection of bases")
}

fn intersect_dfs(
    bases: &[Mask],
    inter: Mask,
    start: usize,
    limit: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if inter == 0 {
        return !chosen.is_empty();
    }
    if chosen.len() == limit {
        return false;
    }
    for i in start..bases.len() {
        if inter & !bases[i] == 0 {
            continue; // would not shrink the intersection
        }
        chosen.push(i);
        if intersect_dfs(bases, inter & bases[i], i + 1, limit, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Minimum number of bases whose union covers the ground set, with a witness.
pub fn arboricity_exact(m: &Matroid) -> Result<(usize, CoverCertificate)> {
    let loops = m.loops_mask();
    if loops != 0 {
        return Err(Error::LoopElement(loops.trailing_zeros() as usize + 1));
    }
    let bases = m.bases();
    let r = m.rank().max(1);
    let lower = m.ground_size().div_ceil(r);
    for k in lower.max(1)..=m.ground_size().max(1) {
        let mut chosen = Vec::new();
        if cover_dfs(bases, 0, m.full(), 0, k, r, &mut chosen) {
            let witness: Vec<Mask> = chosen.iter().map(|&i| bases[i]).collect();
            let cert = CoverCertificate {
                kind: CoverKind::BaseCover,
                size: witness.len(),
                witness,
            };
            debug_assert!(cert.validate(m));
            return Ok((k, cert));
        }
    }
    unreachable!("a loop-free matroid is covered by at most n bases")
}

fn cover_dfs(
    bases: &[Mask],
    covered: Mask,
    full: Mask,
    start: usize,
    limit: usize,
    r: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if covered == full {
        return !chosen.is_empty();
    }
    let missing = (full & !covered).count_ones() as usize;
    let remaining = limit - chosen.len();
    if remaining * r < missing {
        return false;
    }
    for i in start..bases.len() {
        if bases[i] & !covered == 0 {
            continue; // adds nothing new
        }
        chosen.push(i);
        if cover_dfs(bases, covered | bases[i], full, i + 1, limit, r, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Edmonds' formula: max over nonempty A with r(A) >= 1 of ⌈|A| / r(A)⌉,
/// with a maximizing subset.
pub fn arboricity_edmonds(m: &Matroid) -> Result<(usize, Mask)> {
    if m.rank() == 0 {
        return Err(Error::ZeroRank);
    }
    let loops = m.loops_mask();
    if loops != 0 {
        return Err(Error::LoopElement(loops.trailing_zeros() as usize + 1));
    }
    let mut best: Option<(usize, Mask)> = None;
    for a in 1..=m.full() {
        let ra = m.rank_subset(a)?;
        if ra == 0 {
            continue;
        }
        let val = (a.count_ones() as usize).div_ceil(ra);
        let better = match best {
            None => true,
            Some((bv, bm)) => {
                val > bv
                    || (val == bv
                        && subsets::canonical_cmp(a, bm) == std::cmp::Ordering::Less)
            }
        };
        if better {
            best = Some((val, a));
        }
    }
    Ok(best.expect("nonempty ground set"))
}

/// Theorem check a(M) ≤ c(M*), after coloop stripping.
pub fn check_arbor(m: &Matroid, id: &str) -> Result<VerificationRecord> {
    let Some((core, _)) = m.core() else {
        return Err(Error::Inapplicable("free matroid: nothing to cover beyond V".into()));
    };
    if core.loops_mask() != 0 {
        return Err(Error::Inapplicable(
            "matroid has loops; no base cover exists".into(),
        ));
    }
    let stripped = core.ground_size() != m.ground_size();
    let (a, _) = arboricity_exact(&core)?;
    let c_dual = core
        .dual()
        .circumference()
        .expect("dual of a loop-free non-star matroid has a circuit");
    let mut rec = VerificationRecord::leq(id, "a(M) <= c(M*)", a as i64, c_dual as i64);
    if stripped {
        rec = rec.with_note("coloops stripped before the check");
    }
    Ok(rec)
}

/// Corollary check c(M)(|V| - r(M)) >= |V|.
pub fn check_mb(m: &Matroid, id: &str) -> Result<VerificationRecord> {
    if m.is_star() {
        return Err(Error::StarMatroid(subsets::elements(m.star_centers())));
    }
    let c = m.circumference().expect("non-star matroid has a circuit") as i64;
    let n = m.ground_size() as i64;
    let r = m.rank() as i64;
    Ok(VerificationRecord::leq(
        id,
        "|V| <= c(M)(|V|-r(M))",
        n,
        c * (n - r),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subsets::mask_of;

    fn square() -> Matroid {
        Matroid::from_bases(4, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]]).unwrap()
    }

    #[test]
    fn gamma_examples() {
        let (g, cert) = gamma(&square()).unwrap();
        assert_eq!(g, 2);
        assert!(cert.validate(&square()));
        assert_eq!(cert.witness, vec![mask_of(&[1, 2]), mask_of(&[3, 4])]);

        // bases = all (n-1)-subsets => gamma = n
        for n in 2..=5 {
            let m = Matroid::uniform(n as isize - 1, n).unwrap();
            assert_eq!(gamma(&m).unwrap().0, n);
            assert_eq!(m.circumference(), Some(n));
        }

        assert_eq!(gamma(&Matroid::uniform(2, 4).unwrap()).unwrap().0, 2);
        assert!(matches!(
            gamma(&Matroid::uniform(3, 3).unwrap()).unwrap_err(),
            Error::StarMatroid(_)
        ));
    }

    #[test]
    fn arboricity_examples() {
        assert_eq!(arboricity_exact(&Matroid::uniform(2, 4).unwrap()).unwrap().0, 2);
        assert_eq!(arboricity_exact(&Matroid::uniform(4, 4).unwrap()).unwrap().0, 1);
        assert_eq!(arboricity_exact(&square()).unwrap().0, 2);
    }

    #[test]
    fn arboricity_equals_gamma_dual_and_edmonds() {
        for m in [
            square(),
            Matroid::uniform(2, 4).unwrap(),
            Matroid::uniform(2, 5).unwrap(),
            Matroid::uniform(1, 4).unwrap(),
        ] {
            let a = arboricity_exact(&m).unwrap().0;
            assert_eq!(a, gamma(&m.dual()).unwrap().0);
            assert_eq!(a, arboricity_edmonds(&m).unwrap().0);
        }
        // uniform(1, n): every element is its own parallel class
        let m = Matroid::uniform(1, 5).unwrap();
        let (v, a) = arboricity_edmonds(&m).unwrap();
        assert_eq!(v, 5);
        assert_eq!(a, m.full());
    }

    #[test]
    fn check_arbor_examples() {
        let rec = check_arbor(&Matroid::uniform(2, 4).unwrap(), "u24").unwrap();
        assert!(rec.pass);
        assert_eq!((rec.lhs, rec.rhs), (2, 3));
        assert!(!rec.equality);

        // sharpness: dual has a rank-1 largest circuit
        let m = Matroid::uniform(1, 3).unwrap().dual(); // dual circuits: U_{1,3} parallel class
        let rec = check_arbor(&m, "sharp").unwrap();
        assert!(rec.pass && rec.equality);

        assert!(check_arbor(&Matroid::uniform(3, 3).unwrap(), "free").is_err());
    }

    #[test]
    fn check_mb_examples() {
        let rec = check_mb(&square(), "square").unwrap();
        assert!(rec.pass && rec.equality); // 2*(4-2) = 4
        let rec = check_mb(&Matroid::uniform(2, 4).unwrap(), "u24").unwrap();
        assert!(rec.pass && !rec.equality); // 3*2 >= 4
        for n in 2..=5 {
            let rec = check_mb(&Matroid::uniform(n as isize - 1, n).unwrap(), "h0").unwrap();
            assert!(rec.pass && rec.equality);
        }
    }
}
