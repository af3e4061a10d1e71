//! Facet-represented simplicial complexes and reduced homology over GF(p).
//!
//! Two degenerate states are kept distinct: the void complex (no faces at
//! all, `facets` empty) and the empty complex (`facets == [0]`, whose only
//! face is the empty set). The void complex has vanishing reduced homology
//! in every degree; the empty complex has dim H~_{-1} = 1.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subsets::{self, Mask};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    facets: Vec<Mask>,
}

/// dims[s] = dim H~_{s-1}, for s = 0 ..= dim(complex)+1.
/// Empty `dims` for the void complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyReport {
    pub prime: u32,
    pub dims: Vec<usize>,
}

impl HomologyReport {
    pub fn dim_at(&self, homological_degree: isize) -> usize {
        let s = homological_degree + 1;
        if s < 0 || s as usize >= self.dims.len() {
            0
        } else {
            self.dims[s as usize]
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

impl SimplicialComplex {
    /// Antichain-reduces and canonically orders the facet list.
    pub fn from_facets(vertex_count: usize, facets: Vec<Mask>) -> Result<Self> {
        if vertex_count > subsets::MAX_GROUND {
            return Err(Error::TooLarge(format!("{vertex_count} vertices")));
        }
        let full = subsets::full_mask(vertex_count);
        for &f in &facets {
            if f & !full != 0 {
                let e = (f & !full).trailing_zeros() as usize + 1;
                return Err(Error::OutOfRange(e, vertex_count));
            }
        }
        Ok(Self {
            vertex_count,
            facets: antichain_reduce(facets),
        })
    }

    pub fn void(vertex_count: usize) -> Self {
        Self { vertex_count, facets: Vec::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn facets(&self) -> &[Mask] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// None for the void complex; Some(-1) for the empty complex.
    pub fn dim(&self) -> Option<isize> {
        self.facets
            .iter()
            .map(|f| f.count_ones() as isize - 1)
            .max()
    }

    pub fn is_face(&self, f: Mask) -> bool {
        self.facets.iter().any(|&h| f & !h == 0)
    }

    pub fn independence_complex(m: &Matroid) -> Self {
        Self {
            vertex_count: m.ground_size(),
            facets: m.bases().to_vec(),
        }
    }

    /// lk_Δ(f): faces G disjoint from f with G ∪ f ∈ Δ.
    pub fn link(&self, f: Mask) -> Result<Self> {
        if !self.is_face(f) {
            return Err(Error::FaceNotInComplex(subsets::elements(f)));
        }
        let facets = self
            .facets
            .iter()
            .filter(|&&h| f & !h == 0)
            .map(|&h| h & !f)
            .collect();
        Ok(Self {
            vertex_count: self.vertex_count,
            facets: antichain_reduce(facets),
        })
    }

    /// Restriction to the vertices of `s`.
    pub fn restriction(&self, s: Mask) -> Self {
        let facets = self.facets.iter().map(|&h| h & s).collect();
        Self {
            vertex_count: self.vertex_count,
            facets: antichain_reduce(facets),
        }
    }

    pub fn delete_vertex(&self, u: usize) -> Self {
        self.restriction(subsets::full_mask(self.vertex_count) & !subsets::bit(u))
    }

    /// Least vertex contained in every facet, if any.
    pub fn cone_center(&self) -> Result<Option<usize>> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        let common = self
            .facets
            .iter()
            .fold(subsets::full_mask(self.vertex_count), |m, &f| m & f);
        Ok(if common == 0 {
            None
        } else {
            Some(common.trailing_zeros() as usize + 1)
        })
    }

    pub fn is_cone(&self) -> Result<bool> {
        Ok(self.cone_center()?.is_some())
    }

    pub fn is_pure(&self) -> bool {
        self.facets
            .windows(2)
            .all(|w| w[0].count_ones() == w[1].count_ones())
    }

    /// faces[s] = faces with s elements, canonical order; faces[0] = [∅].
    /// Empty outer vector for the void complex.
    pub fn faces_by_size(&self) -> Vec<Vec<Mask>> {
        if self.is_void() {
            return Vec::new();
        }
        let top = self.dim().unwrap() + 1;
        let mut sets: Vec<BTreeSet<Mask>> = vec![BTreeSet::new(); top as usize + 1];
        for &f in &self.facets {
            for s in subsets::submasks(f) {
                sets[s.count_ones() as usize].insert(s);
            }
        }
        sets.into_iter()
            .map(|set| {
                let mut v: Vec<Mask> = set.into_iter().collect();
                subsets::sort_canonical(&mut v);
                v
            })
            .collect()
    }

    pub fn face_count(&self) -> usize {
        self.faces_by_size().iter().map(|v| v.len()).sum()
    }

    /// Boundary matrix ∂_s : C_s -> C_{s-1} over GF(p), rows indexed by the
    /// (s-1)-element faces, columns by the s-element faces, alternating signs
    /// by position within the sorted tuple.
    fn boundary_matrix(faces: &[Vec<Mask>], s: usize, p: u32) -> Vec<Vec<u32>> {
        let cols = &faces[s];
        let rows = &faces[s - 1];
        let index: HashMap<Mask, usize> =
            rows.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let mut m = vec![vec![0u32; cols.len()]; rows.len()];
        for (j, &f) in cols.iter().enumerate() {
            let elems = subsets::elements(f);
            for (pos, &e) in elems.iter().enumerate() {
                let sub = f & !subsets::bit(e);
                let i = index[&sub];
                let sign = if pos % 2 == 0 { 1 } else { p - 1 };
                m[i][j] = sign % p;
            }
        }
        m
    }

    /// dim H~_i for i = -1 ..= dim(Δ), over GF(p).
    pub fn reduced_homology(&self, p: u32) -> Result<HomologyReport> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if self.is_void() {
            return Ok(HomologyReport { prime: p, dims: Vec::new() });
        }
        let faces = self.faces_by_size();
        let top = faces.len() - 1;
        let mut ranks = vec![0usize; top + 2]; // ranks[s] = rank ∂_s, ∂_0 = 0
        for (s, slot) in ranks.iter_mut().enumerate().take(top + 1).skip(1) {
            *slot = rank_mod_p(Self::boundary_matrix(&faces, s, p), p);
        }
        let dims = (0..=top)
            .map(|s| faces[s].len() - ranks[s] - ranks[s + 1])
            .collect();
        Ok(HomologyReport { prime: p, dims })
    }

    /// dim H~_j alone (j = -1 allowed); 0 outside the supported range.
    pub fn homology_dim_at(&self, j: isize, p: u32) -> Result<usize> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if self.is_void() {
            return Ok(0);
        }
        let s = j + 1;
        let faces = self.faces_by_size();
        let top = faces.len() as isize - 1;
        if s < 0 || s > top {
            return Ok(0);
        }
        let s = s as usize;
        let rank_in = if s == 0 {
            0
        } else {
            rank_mod_p(Self::boundary_matrix(&faces, s, p), p)
        };
        let rank_out = if (s as isize) == top {
            0
        } else {
            rank_mod_p(Self::boundary_matrix(&faces, s + 1, p), p)
        };
        Ok(faces[s].len() - rank_in - rank_out)
    }

    pub fn is_acyclic(&self, p: u32) -> Result<bool> {
        Ok(self.reduced_homology(p)?.is_trivial())
    }

    /// Reduced Euler characteristic Σ_s (-1)^{s-1} |C_s|, the empty face
    /// included with sign -1.
    pub fn reduced_euler(&self) -> i64 {
        self.faces_by_size()
            .iter()
            .enumerate()
            .map(|(s, layer)| {
                let sign: i64 = if s % 2 == 1 { 1 } else { -1 };
                sign * layer.len() as i64
            })
            .sum()
    }
}

fn antichain_reduce(mut facets: Vec<Mask>) -> Vec<Mask> {
    subsets::sort_canonical(&mut facets);
    let keep: Vec<Mask> = facets
        .iter()
        .copied()
        .filter(|&f| !facets.iter().any(|&g| g != f && f & !g == 0))
        .collect();
    keep
}

/// Row-echelon rank of a dense matrix over GF(p).
pub fn rank_mod_p(mut m: Vec<Vec<u32>>, p: u32) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    for col in 0..cols {
        let pivot = (rank..rows).find(|&r| !m[r][col].is_multiple_of(p));
        let Some(pr) = pivot else { continue };
        m.swap(rank, pr);
        let inv = mod_inverse(m[rank][col] % p, p);
        for v in &mut m[rank][col..] {
            *v = (*v * inv) % p;
        }
        let pivot_row = m[rank][col..].to_vec();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && !row[col].is_multiple_of(p) {
                let factor = row[col] % p;
                for (v, &pv) in row[col..].iter_mut().zip(&pivot_row) {
                    *v = (*v + (p - factor) * pv) % p;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn mod_inverse(a: u32, p: u32) -> u32 {
    // p is a small prime; Fermat
    let mut result: u64 = 1;
    let mut base: u64 = (a % p) as u64;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    result as u32
}
