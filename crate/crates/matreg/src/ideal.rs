//! Monomial ideals, Stanley-Reisner ideals, symbolic powers and degree
//! complexes.
//!
//! Exponent vectors are plain integer vectors over the ambient ground set;
//! degree vectors may have negative entries, with negative support G_a.

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::simplicial::SimplicialComplex;
use crate::subsets::{self, Mask};

/// Set of minimal monomial generators as nonnegative exponent vectors,
/// sorted by (total degree, entries).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    ambient: usize,
    generators: Vec<Vec<u32>>,
}

pub fn negative_support(a: &[i64]) -> Mask {
    a.iter()
        .enumerate()
        .filter(|&(_, &v)| v < 0)
        .fold(0, |m, (i, _)| m | (1 << i))
}

pub fn total_degree(a: &[i64]) -> i64 {
    a.iter().sum()
}

fn divides(b: &[u32], a: &[u32]) -> bool {
    b.iter().zip(a).all(|(x, y)| x <= y)
}

impl MonomialIdeal {
    pub fn new(ambient: usize, gens: Vec<Vec<u32>>) -> Result<Self> {
        for g in &gens {
            if g.len() != ambient {
                return Err(Error::TooLarge(format!(
                    "generator length {} != ambient {}",
                    g.len(),
                    ambient
                )));
            }
        }
        let mut minimal: Vec<Vec<u32>> = Vec::new();
        for g in &gens {
            if gens.iter().any(|h| h != g && divides(h, g)) {
                continue;
            }
            if !minimal.contains(g) {
                minimal.push(g.clone());
            }
        }
        minimal.sort_by(|a, b| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            da.cmp(&db).then_with(|| a.cmp(b))
        });
        Ok(Self { ambient, generators: minimal })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// x^a ∈ I (a nonnegative).
    pub fn contains_monomial(&self, a: &[u32]) -> bool {
        self.generators.iter().any(|g| divides(g, a))
    }

    /// The complex of sqrt(I): faces are the subsets containing no generator
    /// support.
    pub fn radical_complex(&self) -> Result<SimplicialComplex> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let supports: Vec<Mask> = self
            .generators
            .iter()
            .map(|g| {
                g.iter()
                    .enumerate()
                    .filter(|&(_, &v)| v > 0)
                    .fold(0, |m, (i, _)| m | (1 << i))
            })
            .collect();
        let full = subsets::full_mask(self.ambient);
        let mut facets = Vec::new();
        for f in 0..=full {
            if supports.iter().any(|&s| s & !f == 0) {
                continue; // f contains a non-face
            }
            // maximal?
            let mut is_max = true;
            for e in 1..=self.ambient {
                let cand = f | subsets::bit(e);
                if cand != f && !supports.iter().any(|&s| s & !cand == 0) {
                    is_max = false;
                    break;
                }
            }
            if is_max {
                facets.push(f);
            }
        }
        SimplicialComplex::from_facets(self.ambient, facets)
    }

    /// The general degree complex Δ_a(I): F ⊆ [n]∖G_a is a face iff
    /// x^a ∉ I S_F, i.e. every generator has some exponent exceeding a
    /// outside F ∪ G_a.
    pub fn degree_complex(&self, a: &[i64]) -> Result<SimplicialComplex> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let g_a = negative_support(a);
        let available = subsets::full_mask(self.ambient) & !g_a;
        let is_face = |f: Mask| -> bool {
            let outside = available & !f;
            self.generators.iter().all(|gen| {
                subsets::elements(outside)
                    .iter()
                    .any(|&i| a[i - 1] < gen[i - 1] as i64)
            })
        };
        let mut facets = Vec::new();
        for f in subsets::submasks(available) {
            if !is_face(f) {
                continue;
            }
            let mut is_max = true;
            let mut rest = available & !f;
            while rest != 0 {
                let b = rest & rest.wrapping_neg();
                rest &= rest - 1;
                if is_face(f | b) {
                    is_max = false;
                    break;
                }
            }
            if is_max {
                facets.push(f);
            }
        }
        if facets.is_empty() {
            return Ok(SimplicialComplex::void(self.ambient));
        }
        SimplicialComplex::from_facets(self.ambient, facets)
    }
}

/// The Stanley-Reisner ideal of a complex: one squarefree generator per
/// minimal non-face.
pub fn stanley_reisner(c: &SimplicialComplex) -> Result<MonomialIdeal> {
    if c.is_void() {
        return Err(Error::VoidComplex);
    }
    let n = c.vertex_count();
    let mut gens = Vec::new();
    for size in 1..=n {
        for s in subsets::subsets_of_size(n, size) {
            if c.is_face(s) {
                continue;
            }
            let mut minimal = true;
            let mut rest = s;
            while rest != 0 {
                let b = rest & rest.wrapping_neg();
                rest &= rest - 1;
                if !c.is_face(s & !b) {
                    minimal = false;
                    break;
                }
            }
            if minimal {
                gens.push(mask_to_exponents(s, n));
            }
        }
    }
    MonomialIdeal::new(n, gens)
}

fn mask_to_exponents(mask: Mask, n: usize) -> Vec<u32> {
    (0..n)
        .map(|i| if mask & (1 << i) != 0 { 1 } else { 0 })
        .collect()
}

/// x^a ∈ I_Δ^(t) iff Σ_{i ∉ B} a_i >= t for every basis B.
pub fn symbolic_membership(m: &Matroid, a: &[u32], t: u32) -> bool {
    m.bases().iter().all(|&b| {
        let sum: u32 = a
            .iter()
            .enumerate()
            .filter(|&(i, _)| b & (1 << i) == 0)
            .map(|(_, &v)| v)
            .sum();
        sum >= t
    })
}

/// Minimal generators of I_Δ^(t). Every coordinate of a generator is <= t
/// (clamping an exponent to t preserves every basis constraint), so the
/// search box [0, t]^n is exhaustive.
pub fn symbolic_generators(m: &Matroid, t: u32) -> Result<MonomialIdeal> {
    if m.circumference().is_none() {
        return Err(Error::FreeMatroid);
    }
    let n = m.ground_size();
    let mut members = Vec::new();
    let mut a = vec![0u32; n];
    loop {
        if symbolic_membership(m, &a, t) {
            members.push(a.clone());
        }
        // odometer over [0, t]^n
        let mut i = 0;
        loop {
            if i == n {
                return MonomialIdeal::new(n, members);
            }
            if a[i] < t {
                a[i] += 1;
                break;
            }
            a[i] = 0;
            i += 1;
        }
    }
}

/// The matroid specialization of the degree complex of I_Δ^(t):
/// facets are the facets F of lk_Δ(G_a) with Σ_{i ∉ F ∪ G_a} a_i <= t-1.
/// Errors when G_a is not a face of Δ (the Takayama zero branch is the
/// caller's concern).
pub fn degree_complex_matroid(m: &Matroid, t: u32, a: &[i64]) -> Result<SimplicialComplex> {
    let g_a = negative_support(a);
    if !m.is_independent(g_a) {
        return Err(Error::NegativeSupportNotFace(subsets::elements(g_a)));
    }
    let n = m.ground_size();
    let mut facets = Vec::new();
    for &b in m.bases() {
        if g_a & !b != 0 {
            continue;
        }
        let f = b & !g_a;
        let outside = subsets::full_mask(n) & !b; // !(f ∪ G_a) within [n]
        let sum: i64 = subsets::elements(outside).iter().map(|&i| a[i - 1]).sum();
        if sum < t as i64 {
            facets.push(f);
        }
    }
    if facets.is_empty() {
        return Ok(SimplicialComplex::void(n));
    }
    SimplicialComplex::from_facets(n, facets)
}
