//! Multigraphs (loops forbidden, parallel edges allowed), their graphic
//! matroids, bonds, and forest covers. Edge i of the list is matroid
//! element i.

use crate::arboricity::{self, CoverCertificate, CoverKind};
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subsets::{self, Mask};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }
    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }
    /// false if already joined
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

impl Graph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::TooLarge("graph needs at least one vertex".into()));
        }
        for &(a, b) in &edges {
            if a < 1 || a > vertex_count {
                return Err(Error::OutOfRange(a, vertex_count));
            }
            if b < 1 || b > vertex_count {
                return Err(Error::OutOfRange(b, vertex_count));
            }
            if a == b {
                return Err(Error::SelfLoop(a, b));
            }
        }
        if edges.len() > subsets::MAX_GROUND {
            return Err(Error::TooLarge(format!("{} edges", edges.len())));
        }
        Ok(Self { vertex_count, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edge subsets are masks over elements 1..=edge_count.
    pub fn is_forest(&self, edge_mask: Mask) -> bool {
        let mut uf = UnionFind::new(self.vertex_count);
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if edge_mask & (1 << i) != 0 && !uf.union(a - 1, b - 1) {
                return false;
            }
        }
        true
    }

    pub fn component_count(&self) -> usize {
        let mut uf = UnionFind::new(self.vertex_count);
        let mut components = self.vertex_count;
        for &(a, b) in &self.edges {
            if uf.union(a - 1, b - 1) {
                components -= 1;
            }
        }
        components
    }

    /// Matroid rank: vertices minus components.
    pub fn forest_rank(&self) -> usize {
        self.vertex_count - self.component_count()
    }

    /// The graphic matroid: bases are maximum spanning forests.
    pub fn graphic_matroid(&self) -> Result<Matroid> {
        let m = self.edge_count();
        if m == 0 {
            return Err(Error::NoEdges);
        }
        let rank = self.forest_rank();
        let mut bases = Vec::new();
        if rank == 0 {
            // only possible with parallel-free...; no edges case handled above
            bases.push(0);
        } else {
            for s in subsets::subsets_of_size(m, rank) {
                if self.is_forest(s) {
                    bases.push(s);
                }
            }
        }
        Matroid::new(m, bases)
    }

    /// Bonds (minimal edge cuts, per connected component): the circuits of
    /// the cographic matroid.
    pub fn bonds(&self) -> Result<Vec<Mask>> {
        Ok(self.graphic_matroid()?.dual().circuits())
    }

    pub fn largest_bond(&self) -> Result<usize> {
        self.bonds()?
            .iter()
            .map(|b| b.count_ones() as usize)
            .max()
            .ok_or(Error::NoCircuit)
    }

    /// Nash-Williams: max over induced subgraphs H with >= 2 vertices of
    /// ⌈e_H / (n_H - 1)⌉, with a maximizing vertex set.
    pub fn nash_williams(&self) -> Result<(usize, Mask)> {
        if self.edges.is_empty() {
            return Err(Error::NoEdges);
        }
        let mut best: Option<(usize, Mask)> = None;
        for vs in 1..=subsets::full_mask(self.vertex_count) {
            let nv = vs.count_ones() as usize;
            if nv < 2 {
                continue;
            }
            let ne = self
                .edges
                .iter()
                .filter(|&&(a, b)| subsets::contains(vs, a) && subsets::contains(vs, b))
                .count();
            if ne == 0 {
                continue;
            }
            let val = ne.div_ceil(nv - 1);
            let better = match best {
                None => true,
                Some((bv, bm)) => {
                    val > bv
                        || (val == bv
                            && subsets::canonical_cmp(vs, bm) == std::cmp::Ordering::Less)
                }
            };
            if better {
                best = Some((val, vs));
            }
        }
        Ok(best.expect("graph has an edge"))
    }

    /// Minimum number of forests covering all edges. With `disjoint`, the
    /// forests must partition the edge set.
    pub fn min_forest_cover(&self, disjoint: bool) -> Result<(usize, CoverCertificate)> {
        if self.edges.is_empty() {
            return Err(Error::NoEdges);
        }
        if !disjoint {
            let (k, cert) = arboricity_exact_as_forests(self)?;
            return Ok((k, cert));
        }
        let m = self.edge_count();
        for k in 1..=m {
            let mut forests = vec![0 as Mask; k];
            if self.partition_dfs(0, k, &mut forests) {
                let witness: Vec<Mask> = forests.into_iter().filter(|&f| f != 0).collect();
                let cert = CoverCertificate {
                    kind: CoverKind::ForestCover,
                    size: witness.len(),
                    witness,
                };
                debug_assert!(self.validate_forest_cover(&cert, true));
                return Ok((k, cert));
            }
        }
        unreachable!("one forest per edge always works")
    }

    fn partition_dfs(&self, edge: usize, k: usize, forests: &mut Vec<Mask>) -> bool {
        if edge == self.edge_count() {
            return true;
        }
        let ebit = 1 << edge;
        let mut seen_empty = false;
        for f in 0..k {
            if forests[f] == 0 {
                if seen_empty {
                    break; // empty forests are interchangeable
                }
                seen_empty = true;
            }
            if self.is_forest(forests[f] | ebit) {
                forests[f] |= ebit;
                if self.partition_dfs(edge + 1, k, forests) {
                    return true;
                }
                forests[f] &= !ebit;
            }
        }
        false
    }

    pub fn validate_forest_cover(&self, cert: &CoverCertificate, disjoint: bool) -> bool {
        if cert.kind != CoverKind::ForestCover || cert.size != cert.witness.len() {
            return false;
        }
        let all = subsets::full_mask(self.edge_count());
        let union = cert.witness.iter().fold(0, |acc, &f| acc | f);
        if union != all || !cert.witness.iter().all(|&f| self.is_forest(f)) {
            return false;
        }
        if disjoint {
            let total: u32 = cert.witness.iter().map(|f| f.count_ones()).sum();
            if total != all.count_ones() {
                return false;
            }
        }
        true
    }
}

fn arboricity_exact_as_forests(g: &Graph) -> Result<(usize, CoverCertificate)> {
    let m = g.graphic_matroid()?;
    let (k, cert) = arboricity::arboricity_exact(&m)?;
    Ok((
        k,
        CoverCertificate {
            kind: CoverKind::ForestCover,
            witness: cert.witness,
            size: cert.size,
        },
    ))
}

/// 4-cycle a-b-c-d-a; edge i of the matroid is edge i here.
pub fn cycle_graph(n: usize) -> Graph {
    let edges = (1..=n).map(|i| (i, i % n + 1)).collect();
    Graph::new(n, edges).unwrap()
}

/// Complete graph on n vertices, edges in canonical pair order.
pub fn complete_graph(n: usize) -> Graph {
    let mut edges = Vec::new();
    for a in 1..=n {
        for b in (a + 1)..=n {
            edges.push((a, b));
        }
    }
    Graph::new(n, edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subsets::mask_of;

    #[test]
    fn graphic_c4_is_u34() {
        let g = cycle_graph(4);
        let m = g.graphic_matroid().unwrap();
        assert_eq!(m, Matroid::uniform(3, 4).unwrap());
        assert_eq!(m.circuits(), vec![mask_of(&[1, 2, 3, 4])]);
    }

    #[test]
    fn graphic_k4() {
        let m = complete_graph(4).graphic_matroid().unwrap();
        assert_eq!(m.rank(), 3);
        assert_eq!(m.bases().len(), 16); // Cayley: 4^2 spanning trees
        let sizes: Vec<u32> = m.circuits().iter().map(|c| c.count_ones()).collect();
        assert!(sizes.iter().all(|&s| s == 3 || s == 4));
        assert_eq!(m.circumference(), Some(4));
        // triangle {ab, ac, bc} = edges 1,2,4 has rank 2
        assert_eq!(m.rank_subset(mask_of(&[1, 2, 4])).unwrap(), 2);
    }

    #[test]
    fn single_edge_free() {
        let g = Graph::new(2, vec![(1, 2)]).unwrap();
        let m = g.graphic_matroid().unwrap();
        assert_eq!(m.bases(), &[mask_of(&[1])]);
        assert_eq!(g.bonds().unwrap(), vec![mask_of(&[1])]);
        assert_eq!(g.largest_bond().unwrap(), 1);
        assert_eq!(g.nash_williams().unwrap().0, 1);
    }

    #[test]
    fn self_loop_rejected() {
        assert!(matches!(
            Graph::new(3, vec![(1, 1)]).unwrap_err(),
            Error::SelfLoop(1, 1)
        ));
    }

    #[test]
    fn bonds_c4_and_k4() {
        let b = cycle_graph(4).bonds().unwrap();
        assert_eq!(b.len(), 6); // any two cycle edges disconnect
        assert!(b.iter().all(|m| m.count_ones() == 2));
        assert_eq!(cycle_graph(4).largest_bond().unwrap(), 2);

        let b = complete_graph(4).bonds().unwrap();
        let sizes: Vec<u32> = b.iter().map(|m| m.count_ones()).collect();
        assert!(sizes.iter().all(|&s| s == 3 || s == 4));
        assert_eq!(complete_graph(4).largest_bond().unwrap(), 4);
    }

    #[test]
    fn bonds_match_direct_cut_enumeration() {
        // oracle: minimal edge sets whose removal increases the component count
        for g in [cycle_graph(4), complete_graph(4), cycle_graph(5)] {
            let all = subsets::full_mask(g.edge_count());
            let base_components = g.component_count();
            let disconnects = |s: Mask| {
                let mut uf = UnionFind::new(g.vertex_count());
                let mut comps = g.vertex_count();
                for (i, &(a, b)) in g.edges().iter().enumerate() {
                    if s & (1 << i) == 0 && uf.union(a - 1, b - 1) {
                        comps -= 1;
                    }
                }
                comps > base_components
            };
            let mut oracle: Vec<Mask> = (1..=all)
                .filter(|&s| {
                    disconnects(s)
                        && subsets::elements(s)
                            .iter()
                            .all(|&e| !disconnects(s & !subsets::bit(e)))
                })
                .collect();
            subsets::sort_canonical(&mut oracle);
            assert_eq!(g.bonds().unwrap(), oracle);
        }
    }

    #[test]
    fn nash_williams_examples() {
        let (v, h) = complete_graph(4).nash_williams().unwrap();
        assert_eq!(v, 2);
        // the triangle {1,2,3} ties with the full vertex set (3/2 vs 6/3)
        // and wins the canonical tie-break
        assert_eq!(h, mask_of(&[1, 2, 3]));
        assert_eq!(cycle_graph(4).nash_williams().unwrap().0, 2);
    }

    #[test]
    fn forest_cover_examples() {
        assert_eq!(complete_graph(4).min_forest_cover(false).unwrap().0, 2);
        let tree = Graph::new(4, vec![(1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(tree.min_forest_cover(false).unwrap().0, 1);
        // C4 disjoint variant: 2 <= c(C4) = 4
        let (k, cert) = cycle_graph(4).min_forest_cover(true).unwrap();
        assert_eq!(k, 2);
        assert!(cycle_graph(4).validate_forest_cover(&cert, true));
    }

    #[test]
    fn parallel_edges() {
        let g = Graph::new(2, vec![(1, 2), (1, 2), (1, 2)]).unwrap();
        let m = g.graphic_matroid().unwrap();
        assert_eq!(m, Matroid::uniform(1, 3).unwrap());
    }
}
