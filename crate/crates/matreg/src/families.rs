//! Test-matroid generation: exhaustive enumeration of all labeled matroids
//! on small ground sets, plus named parametric families (uniform, graphic,
//! cographic, direct sums).
//!
//! Enumeration is labeled, not isomorphism-reduced: the invariants under
//! test are label-invariant, so redundancy is harmless and matroid
//! isomorphism stays out of scope.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matroid::Matroid;
use crate::par;
use crate::subsets::{self, Mask};

pub const MAX_EXHAUSTIVE_N: usize = 6;

/// Every labeled matroid on [n], grouped per rank, in a fixed canonical
/// order. Counts for n = 0..6: 1, 2, 5, 16, 68, 406, 3807.
pub fn enumerate_all_matroids(n: usize) -> Result<Vec<Matroid>> {
    enumerate_all_matroids_opts(n, true)
}

pub fn enumerate_all_matroids_opts(n: usize, parallel: bool) -> Result<Vec<Matroid>> {
    if n > MAX_EXHAUSTIVE_N {
        return Err(Error::TooLarge(format!(
            "exhaustive enumeration capped at n = {MAX_EXHAUSTIVE_N}, got {n}"
        )));
    }
    let mut out = Vec::new();
    for r in 0..=n {
        if r == 0 || r == n {
            // the unique rank-0 (only ∅) and rank-n (free) matroids
            let b = if r == 0 { 0 } else { subsets::full_mask(n) };
            out.push(Matroid::new(n, vec![b])?);
            continue;
        }
        let slots = subsets::subsets_of_size(n, r);
        let reqs = exchange_requirements(&slots);
        let m = slots.len();
        let families = par::filter_map_range(1..(1u64 << m), parallel, |family| {
            let family = family as u32;
            if family_valid(family, &reqs) {
                Some(family)
            } else {
                None
            }
        });
        for family in families {
            let bases: Vec<Mask> = (0..m)
                .filter(|&i| family & (1 << i) != 0)
                .map(|i| slots[i])
                .collect();
            out.push(Matroid::new(n, bases)?);
        }
    }
    Ok(out)
}

/// For each ordered slot pair (i, j) and each x ∈ B_i∖B_j, the set of slots
/// that would witness exchange: B_i − x + y with y ∈ B_j∖B_i. A family F is
/// a matroid iff every such requirement intersects F.
fn exchange_requirements(slots: &[Mask]) -> Vec<Vec<Vec<u32>>> {
    let m = slots.len();
    let index: std::collections::HashMap<Mask, usize> =
        slots.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let mut reqs = vec![vec![Vec::new(); m]; m];
    for i in 0..m {
        for j in 0..m {
            if i == j {
                continue;
            }
            let only_i = slots[i] & !slots[j];
            let only_j = slots[j] & !slots[i];
            for x in subsets::elements(only_i) {
                let mut fixers: u32 = 0;
                for y in subsets::elements(only_j) {
                    let candidate = (slots[i] & !subsets::bit(x)) | subsets::bit(y);
                    if let Some(&k) = index.get(&candidate) {
                        fixers |= 1 << k;
                    }
                }
                reqs[i][j].push(fixers);
            }
        }
    }
    reqs
}

fn family_valid(family: u32, reqs: &[Vec<Vec<u32>>]) -> bool {
    for (i, row) in reqs.iter().enumerate() {
        if family & (1 << i) == 0 {
            continue;
        }
        for (j, cell) in row.iter().enumerate() {
            if i == j || family & (1 << j) == 0 {
                continue;
            }
            for &req in cell {
                if req & family == 0 {
                    return false;
                }
            }
        }
    }
    true
}

/// Independent oracle for cross-checking the enumeration: scan all
/// downward-closed subset families on [n] closed under augmentation and take
/// their maximal members. Feasible for n ≤ 4 (2^(2^n) families).
pub fn enumerate_via_independence_oracle(n: usize) -> Result<Vec<Matroid>> {
    if n > 4 {
        return Err(Error::TooLarge(format!(
            "independence-system oracle capped at n = 4, got {n}"
        )));
    }
    let all: Vec<Mask> = (0..(1u32 << n)).collect();
    let count = all.len();
    let mut out = Vec::new();
    for family in 1u64..(1 << count) {
        let member = |s: Mask| family & (1 << s) != 0;
        if !member(0) {
            continue;
        }
        // downward closed
        let closed = all.iter().all(|&s| {
            !member(s)
                || subsets::elements(s)
                    .iter()
                    .all(|&e| member(s & !subsets::bit(e)))
        });
        if !closed {
            continue;
        }
        // augmentation
        let augments = all.iter().all(|&a| {
            member(a)
                && all.iter().all(|&b| {
                    !(member(b) && b.count_ones() > a.count_ones())
                        || subsets::elements(b & !a)
                            .iter()
                            .any(|&e| member(a | subsets::bit(e)))
                })
                || !member(a)
        });
        if !augments {
            continue;
        }
        let mut maximal: Vec<Mask> = all
            .iter()
            .copied()
            .filter(|&s| member(s) && !all.iter().any(|&t| member(t) && t != s && s & !t == 0))
            .collect();
        subsets::sort_canonical(&mut maximal);
        out.push(Matroid::new(n, maximal)?);
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub enum FamilySpec {
    /// uniform(k, n) for k in k_range, n in n_range, k < n only
    Uniform {
        k_range: (usize, usize),
        n_range: (usize, usize),
    },
    /// graphic matroids of all simple graphs on ≤ 5 vertices with 1..=8
    /// edges, plus a parallel-edge series on two vertices
    Graphic,
    /// duals of the graphic family (bridge-containing graphs are skipped:
    /// their cographic matroids have loops)
    Cographic,
    /// pairwise direct sums of small seed matroids
    DirectSum,
}

/// Deterministic named streams; every emitted matroid is loop-free.
pub fn generate(spec: &FamilySpec) -> Result<Vec<(String, Matroid)>> {
    match spec {
        FamilySpec::Uniform { k_range, n_range } => {
            let mut out = Vec::new();
            for k in k_range.0..=k_range.1 {
                for n in n_range.0..=n_range.1 {
                    if k < n {
                        out.push((format!("uniform({k},{n})"), Matroid::uniform(k as isize, n)?));
                    }
                }
            }
            Ok(out)
        }
        FamilySpec::Graphic => {
            let mut out = Vec::new();
            let mut seen = HashSet::new();
            for (id, g) in graph_corpus() {
                let m = g.graphic_matroid()?;
                if seen.insert((m.ground_size(), m.bases().to_vec())) {
                    out.push((format!("graphic({id})"), m));
                }
            }
            Ok(out)
        }
        FamilySpec::Cographic => {
            let mut out = Vec::new();
            let mut seen = HashSet::new();
            for (id, g) in graph_corpus() {
                let m = g.graphic_matroid()?.dual();
                if m.loops_mask() != 0 {
                    continue;
                }
                if seen.insert((m.ground_size(), m.bases().to_vec())) {
                    out.push((format!("cographic({id})"), m));
                }
            }
            Ok(out)
        }
        FamilySpec::DirectSum => {
            let seeds = [
                ("U(1,2)", Matroid::uniform(1, 2)?),
                ("U(1,3)", Matroid::uniform(1, 3)?),
                ("U(2,3)", Matroid::uniform(2, 3)?),
                (
                    "square",
                    Matroid::from_bases(
                        4,
                        &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]],
                    )?,
                ),
            ];
            let mut out = Vec::new();
            for (i, (id1, m1)) in seeds.iter().enumerate() {
                for (id2, m2) in seeds.iter().skip(i) {
                    if m1.ground_size() + m2.ground_size() > 8 {
                        continue;
                    }
                    out.push((format!("{id1}+{id2}"), m1.direct_sum(m2)?));
                }
            }
            Ok(out)
        }
    }
}

/// All simple graphs on 5 vertices with 1..=8 edges (smaller vertex counts
/// are covered via isolated vertices), plus parallel-edge graphs on two
/// vertices for sharpness cases.
pub(crate) fn graph_corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    let mut pairs = Vec::new();
    for u in 1..=5usize {
        for v in (u + 1)..=5 {
            pairs.push((u, v));
        }
    }
    for mask in 1u32..(1 << pairs.len()) {
        let count = mask.count_ones();
        if count == 0 || count > 8 {
            continue;
        }
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask & (1 << i) != 0)
            .map(|(_, &e)| e)
            .collect();
        out.push((format!("g5.{mask:04x}"), Graph::new(5, edges).unwrap()));
    }
    for m in 2..=6usize {
        out.push((
            format!("parallel({m})"),
            Graph::new(2, vec![(1, 2); m]).unwrap(),
        ));
    }
    out
}

/// The curated n ∈ {5, 6} list backing the larger regularity sweep: all
/// uniforms with a circuit, all graphic/cographic matroids on 5 or 6
/// elements from ≤5-vertex graphs, and square ⊕ U_{1,2}.
pub fn curated_5_6() -> Result<Vec<(String, Matroid)>> {
    let mut out = Vec::new();
    for n in [5usize, 6] {
        for k in 1..n {
            out.push((format!("uniform({k},{n})"), Matroid::uniform(k as isize, n)?));
        }
    }
    let mut seen = HashSet::new();
    for spec in [FamilySpec::Graphic, FamilySpec::Cographic] {
        for (id, m) in generate(&spec)? {
            if (m.ground_size() == 5 || m.ground_size() == 6)
                && seen.insert((m.ground_size(), m.bases().to_vec()))
            {
                out.push((id, m));
            }
        }
    }
    let square = Matroid::from_bases(4, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]])?;
    out.push(("square+U(1,2)".into(), square.direct_sum(&Matroid::uniform(1, 2)?)?));
    Ok(out)
}
