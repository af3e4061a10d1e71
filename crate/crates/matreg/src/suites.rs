//! Verification suites: each runs one theorem- or lemma-level check over a
//! deterministic family stream and reports per-instance findings. Shared by
//! the CLI (`matreg verify`) and the acceptance tests.

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arboricity::{self, check_arbor, check_mb};
use crate::error::{Error, Result};
use crate::families::{self, enumerate_all_matroids, FamilySpec};
use crate::ideal;
use crate::matroid::{compress, Matroid};
use crate::par;
use crate::regularity::{self, Budget};
use crate::simplicial::SimplicialComplex;
use crate::subsets::{self, Mask};

pub const SUITE_NAMES: &[&str] = &[
    "arbor",
    "gamma",
    "mb",
    "edmonds",
    "nashwilliams",
    "cone_acyclic",
    "degree_lemmas",
    "upper",
    "regsym",
    "linear_uniform",
    "cm_guard",
];

#[derive(Debug, Clone)]
pub struct Finding {
    pub instance: String,
    pub claim: String,
    pub expected: String,
    pub observed: String,
    pub witness: String,
}

#[derive(Debug, Clone)]
pub struct SuiteResult {
    pub suite: String,
    pub instances: usize,
    pub passes: usize,
    pub skipped: usize,
    /// instances where the checked inequality held with equality
    pub equalities: usize,
    pub findings: Vec<Finding>,
}

impl SuiteResult {
    pub fn ok(&self) -> bool {
        self.findings.is_empty() && self.passes == self.instances
    }

    pub fn render(&self, tsv: bool) -> String {
        let mut out = if tsv {
            format!(
                "{}\t{}\t{}\t{}\t{}\n",
                self.suite, self.instances, self.passes, self.skipped, self.equalities
            )
        } else {
            format!(
                "suite {}: {}/{} pass ({} skipped, {} equalities)\n",
                self.suite, self.passes, self.instances, self.skipped, self.equalities
            )
        };
        for f in &self.findings {
            out.push_str(&format!(
                "finding\t{}\t{}\t{}\t{}\t{}\n",
                f.instance, f.claim, f.expected, f.observed, f.witness
            ));
        }
        out
    }
}

#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub exhaustive_n: usize,
    pub t_list: Vec<u32>,
    pub p_list: Vec<u32>,
    pub samples: usize,
    pub seed: u64,
    /// include the curated 5- and 6-element list in regsym
    pub curated: bool,
    /// cross-check regularity against the Betti oracle for t in t_list
    pub with_betti: bool,
    pub parallel: bool,
    pub budget_cap: Option<u64>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            exhaustive_n: 4,
            t_list: vec![1, 2, 3],
            p_list: vec![2],
            samples: 500,
            seed: 0x6d617472,
            curated: false,
            with_betti: false,
            parallel: true,
            budget_cap: None,
        }
    }
}

pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<SuiteResult> {
    match name {
        "arbor" => suite_arbor(opts),
        "gamma" => suite_gamma(opts),
        "mb" => suite_mb(opts),
        "edmonds" => suite_edmonds(opts),
        "nashwilliams" => suite_nashwilliams(opts),
        "cone_acyclic" => suite_cone_acyclic(opts),
        "degree_lemmas" => suite_degree_lemmas(opts),
        "upper" => suite_upper(opts),
        "regsym" => suite_regsym(opts),
        "linear_uniform" => suite_linear_uniform(opts),
        "cm_guard" => suite_cm_guard(opts),
        _ => Err(Error::UnknownSuite(name.to_string())),
    }
}

struct Outcome {
    pass: bool,
    equality: bool,
    finding: Option<Finding>,
}

impl Outcome {
    fn pass(equality: bool) -> Self {
        Self { pass: true, equality, finding: None }
    }

    fn fail(finding: Finding) -> Self {
        Self { pass: false, equality: false, finding: Some(finding) }
    }

    fn from_record(rec: &crate::report::VerificationRecord, witness: String) -> Self {
        if rec.pass {
            Self::pass(rec.equality)
        } else {
            Self::fail(Finding {
                instance: rec.id.clone(),
                claim: rec.claim.clone(),
                expected: format!("lhs <= {}", rec.rhs),
                observed: rec.lhs.to_string(),
                witness,
            })
        }
    }
}

fn collect(suite: &str, outcomes: Vec<Outcome>, skipped: usize) -> SuiteResult {
    let instances = outcomes.len();
    let passes = outcomes.iter().filter(|o| o.pass).count();
    let equalities = outcomes.iter().filter(|o| o.equality).count();
    let findings = outcomes.into_iter().filter_map(|o| o.finding).collect();
    SuiteResult {
        suite: suite.to_string(),
        instances,
        passes,
        skipped,
        equalities,
        findings,
    }
}

fn bases_str(m: &Matroid) -> String {
    m.bases()
        .iter()
        .map(|&b| {
            format!(
                "{{{}}}",
                subsets::elements(b)
                    .iter()
                    .map(|e| e.to_string())
                    .join(" ")
            )
        })
        .join(" ")
}

fn labeled(n_max: usize) -> Result<Vec<(String, Matroid)>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for (i, m) in enumerate_all_matroids(n)?.into_iter().enumerate() {
            out.push((format!("m{n}.{i}"), m));
        }
    }
    Ok(out)
}

/// Theorem check a(M) <= c(M*) over all labeled matroids that still have a
/// circuit and no loop after core reduction.
fn suite_arbor(opts: &SuiteOptions) -> Result<SuiteResult> {
    let pool = labeled(opts.exhaustive_n)?;
    let mut skipped = 0;
    let mut todo = Vec::new();
    for (id, m) in pool {
        match check_arbor(&m, &id) {
            Err(Error::Inapplicable(_)) => skipped += 1,
            Err(e) => return Err(e),
            Ok(rec) => todo.push(Outcome::from_record(&rec, bases_str(&m))),
        }
    }
    Ok(collect("arbor", todo, skipped))
}

/// Lemma check γ(M) <= c(M) over non-stars.
fn suite_gamma(opts: &SuiteOptions) -> Result<SuiteResult> {
    let pool = labeled(opts.exhaustive_n)?;
    let mut skipped = 0;
    let mut outcomes = Vec::new();
    for (id, m) in pool {
        if m.is_star() {
            skipped += 1;
            continue;
        }
        let (g, cert) = arboricity::gamma(&m)?;
        if !cert.validate(&m) {
            outcomes.push(Outcome::fail(Finding {
                instance: id,
                claim: "gamma certificate validates".into(),
                expected: "valid".into(),
                observed: "invalid".into(),
                witness: bases_str(&m),
            }));
            continue;
        }
        let c = m.circumference().expect("non-star has a circuit");
        if g <= c {
            outcomes.push(Outcome::pass(g == c));
        } else {
            outcomes.push(Outcome::fail(Finding {
                instance: id,
                claim: "gamma(M) <= c(M)".into(),
                expected: format!("<= {c}"),
                observed: g.to_string(),
                witness: bases_str(&m),
            }));
        }
    }
    Ok(collect("gamma", outcomes, skipped))
}

/// Corollary check |V| <= c(M)(|V| - r(M)) over non-stars.
fn suite_mb(opts: &SuiteOptions) -> Result<SuiteResult> {
    let pool = labeled(opts.exhaustive_n)?;
    let mut skipped = 0;
    let mut outcomes = Vec::new();
    for (id, m) in pool {
        if m.is_star() {
            skipped += 1;
            continue;
        }
        let rec = check_mb(&m, &id)?;
        outcomes.push(Outcome::from_record(&rec, bases_str(&m)));
    }
    Ok(collect("mb", outcomes, skipped))
}

/// Exact search vs Edmonds' formula on every loop-free matroid of positive
/// rank.
fn suite_edmonds(opts: &SuiteOptions) -> Result<SuiteResult> {
    let pool = labeled(opts.exhaustive_n)?;
    let mut skipped = 0;
    let mut items = Vec::new();
    for (id, m) in pool {
        if m.rank() == 0 || m.loops_mask() != 0 {
            skipped += 1;
            continue;
        }
        items.push((id, m));
    }
    let outcomes: Result<Vec<Outcome>> = par::map_slice(&items, opts.parallel, |(id, m)| {
        let (exact, cert) = arboricity::arboricity_exact(m)?;
        let (edmonds, witness_set) = arboricity::arboricity_edmonds(m)?;
        if exact == edmonds && cert.validate(m) {
            Ok(Outcome::pass(false))
        } else {
            Ok(Outcome::fail(Finding {
                instance: id.clone(),
                claim: "arboricity_exact == arboricity_edmonds".into(),
                expected: exact.to_string(),
                observed: format!(
                    "{edmonds} (A = {{{}}})",
                    subsets::elements(witness_set).iter().join(" ")
                ),
                witness: bases_str(m),
            }))
        }
    })
    .into_iter()
    .collect();
    Ok(collect("edmonds", outcomes?, skipped))
}

/// Graph-side consistency: Nash-Williams == minimum forest cover ==
/// matroid arboricity, and a(G) <= c*(G), over all ≤5-vertex graphs.
fn suite_nashwilliams(opts: &SuiteOptions) -> Result<SuiteResult> {
    let corpus = families::graph_corpus();
    let outcomes: Result<Vec<Outcome>> = par::map_slice(&corpus, opts.parallel, |(id, g)| {
        let m = g.graphic_matroid()?;
        let (a_m, _) = arboricity::arboricity_exact(&m)?;
        let (nw, _) = g.nash_williams()?;
        let (cover, cover_cert) = g.min_forest_cover(false)?;
        let (partition, part_cert) = g.min_forest_cover(true)?;
        let c_star = g.largest_bond()?;
        let consistent = nw == a_m
            && cover == a_m
            && partition == a_m
            && g.validate_forest_cover(&cover_cert, false)
            && g.validate_forest_cover(&part_cert, true)
            && a_m <= c_star;
        if consistent {
            Ok(Outcome::pass(a_m == c_star))
        } else {
            Ok(Outcome::fail(Finding {
                instance: id.clone(),
                claim: "nash_williams == forest covers == a(M(G)) <= c*(G)".into(),
                expected: format!("a = {a_m}, c* = {c_star}"),
                observed: format!("nw = {nw}, cover = {cover}, partition = {partition}"),
                witness: crate::io::write_graph(g).replace('\n', "; "),
            }))
        }
    })
    .into_iter()
    .collect();
    Ok(collect("nashwilliams", outcomes?, 0))
}

/// Matroid complexes are cones exactly when they are acyclic, and homology
/// over GF(2) and GF(3) agree.
fn suite_cone_acyclic(opts: &SuiteOptions) -> Result<SuiteResult> {
    let pool = labeled(opts.exhaustive_n)?;
    let outcomes: Result<Vec<Outcome>> = par::map_slice(&pool, opts.parallel, |(id, m)| {
        let delta = SimplicialComplex::independence_complex(m);
        let cone = delta.is_cone()?;
        let h2 = delta.reduced_homology(2)?;
        let h3 = delta.reduced_homology(3)?;
        if cone == h2.is_trivial() && cone == h3.is_trivial() && h2.dims == h3.dims {
            Ok(Outcome::pass(false))
        } else {
            Ok(Outcome::fail(Finding {
                instance: id.clone(),
                claim: "cone <=> acyclic; GF(2) and GF(3) agree".into(),
                expected: format!("cone = {cone}"),
                observed: format!("H(2) = {:?}, H(3) = {:?}", h2.dims, h3.dims),
                witness: bases_str(m),
            }))
        }
    })
    .into_iter()
    .collect();
    Ok(collect("cone_acyclic", outcomes?, 0))
}

/// Randomized property checks of the two degree-complex identities (link
/// and restriction), plus the matroid-vs-general degree complex agreement
/// on every sampled triple.
fn suite_degree_lemmas(opts: &SuiteOptions) -> Result<SuiteResult> {
    let mut pool: Vec<(String, Matroid)> = families::generate(&FamilySpec::Uniform {
        k_range: (1, 5),
        n_range: (2, 6),
    })?;
    for (id, m) in families::generate(&FamilySpec::Graphic)? {
        // forests give free matroids with no symbolic-power ideal
        if m.ground_size() <= 6 && m.circumference().is_some() {
            pool.push((id, m));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut outcomes = Vec::new();
    let mut link_trials = 0usize;
    let mut restrict_trials = 0usize;
    let max_attempts = opts.samples.saturating_mul(200).max(10_000);
    let mut attempts = 0usize;

    while (link_trials < opts.samples || restrict_trials < opts.samples)
        && attempts < max_attempts
    {
        attempts += 1;
        let (id, m) = &pool[rng.gen_range(0..pool.len())];
        let n = m.ground_size();
        let t: u32 = rng.gen_range(1..=3);
        let a: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=(t as i64 + 2))).collect();
        let gamma = ideal::degree_complex_matroid(m, t, &a)?;

        // specialization agreement on every sampled triple
        let general = ideal::symbolic_generators(m, t)?.degree_complex(&a)?;
        if gamma.facets() != general.facets() {
            outcomes.push(Outcome::fail(Finding {
                instance: format!("{id} t={t} a={a:?}"),
                claim: "degree_complex_matroid == degree_complex(symbolic_generators)".into(),
                expected: format!("{:?}", gamma.facets()),
                observed: format!("{:?}", general.facets()),
                witness: bases_str(m),
            }));
            continue;
        }
        if gamma.is_void() {
            continue;
        }

        // link identity
        if link_trials < opts.samples {
            if let Some(x) = (1..=n).find(|&x| gamma.is_face(subsets::bit(x))) {
                let (linked, map) = m.link_matroid(subsets::bit(x))?;
                if !map.is_empty() {
                    let dropped: i64 = (1..=n)
                        .filter(|&e| e != x && !map.contains(&e))
                        .map(|e| a[e - 1])
                        .sum();
                    if (t as i64) - dropped >= 1 {
                        let b: Vec<i64> = map.iter().map(|&old| a[old - 1]).collect();
                        let rhs = ideal::degree_complex_matroid(
                            &linked,
                            (t as i64 - dropped) as u32,
                            &b,
                        )?;
                        let mut lhs: Vec<Mask> = gamma
                            .link(subsets::bit(x))?
                            .facets()
                            .iter()
                            .map(|&f| compress(f, &map))
                            .collect();
                        subsets::sort_canonical(&mut lhs);
                        link_trials += 1;
                        if lhs == rhs.facets() {
                            outcomes.push(Outcome::pass(false));
                        } else {
                            outcomes.push(Outcome::fail(Finding {
                                instance: format!("{id} t={t} a={a:?} x={x}"),
                                claim: "lk of degree complex == degree complex of link".into(),
                                expected: format!("{:?}", rhs.facets()),
                                observed: format!("{lhs:?}"),
                                witness: bases_str(m),
                            }));
                        }
                    }
                }
            }
        }

        // restriction identity
        if restrict_trials < opts.samples {
            let min = *a.iter().min().unwrap();
            let u = a.iter().rposition(|&v| v == min).unwrap() + 1;
            // deleting a coloop drops the rank and the identity need not
            // hold (the lemma assumes the matroid is not a star there)
            let coloop = m.bases().iter().all(|&b| subsets::contains(b, u));
            if (t as i64) - min >= 1 && n >= 2 && !coloop {
                let (deleted, map) = m.deletion(u)?;
                let b: Vec<i64> = map.iter().map(|&old| a[old - 1]).collect();
                let rhs =
                    ideal::degree_complex_matroid(&deleted, (t as i64 - min) as u32, &b)?;
                let mut lhs: Vec<Mask> = gamma
                    .delete_vertex(u)
                    .facets()
                    .iter()
                    .map(|&f| compress(f, &map))
                    .collect();
                subsets::sort_canonical(&mut lhs);
                restrict_trials += 1;
                if lhs == rhs.facets() {
                    outcomes.push(Outcome::pass(false));
                } else {
                    outcomes.push(Outcome::fail(Finding {
                        instance: format!("{id} t={t} a={a:?} u={u}"),
                        claim: "restriction of degree complex == degree complex of deletion"
                            .into(),
                        expected: format!("{:?}", rhs.facets()),
                        observed: format!("{lhs:?}"),
                        witness: bases_str(m),
                    }));
                }
            }
        }
    }

    let mut result = collect("degree_lemmas", outcomes, 0);
    if link_trials < opts.samples || restrict_trials < opts.samples {
        result.findings.push(Finding {
            instance: "sampler".into(),
            claim: format!("{} accepted trials per lemma", opts.samples),
            expected: format!("{}/{}", opts.samples, opts.samples),
            observed: format!("{link_trials}/{restrict_trials}"),
            witness: String::new(),
        });
    }
    Ok(result)
}

/// Lemma-level upper bound: the slack window above c(M)(t-1) holds no
/// non-acyclic degree complex, and c(M)(t-1) itself is attained.
fn suite_upper(opts: &SuiteOptions) -> Result<SuiteResult> {
    let p = opts.p_list[0];
    let mut items = Vec::new();
    let mut skipped = 0;
    for (id, m) in labeled(opts.exhaustive_n)? {
        if m.circumference().is_none() {
            skipped += 1;
            continue;
        }
        for &t in &opts.t_list {
            items.push((format!("{id} t={t}"), m.clone(), t));
        }
    }
    let outcomes: Result<Vec<Outcome>> = par::map_slice(&items, opts.parallel, |(id, m, t)| {
        let rec = regularity::check_upper(m, *t, p, id)?;
        Ok(if rec.pass {
            Outcome::pass(true)
        } else {
            Outcome::fail(Finding {
                instance: id.clone(),
                claim: rec.claim.clone(),
                expected: rec.rhs.to_string(),
                observed: rec.lhs.to_string(),
                witness: bases_str(m),
            })
        })
    })
    .into_iter()
    .collect();
    Ok(collect("upper", outcomes?, skipped))
}

/// Main theorem: Takayama-formula regularity equals c(M)(t-1)+r(core)+1,
/// optionally cross-checked against the Betti oracle and the curated
/// 5/6-element list.
fn suite_regsym(opts: &SuiteOptions) -> Result<SuiteResult> {
    let mut items: Vec<(String, Matroid, u32, u32, bool)> = Vec::new();
    let mut skipped = 0;
    for (id, m) in labeled(opts.exhaustive_n)? {
        if m.circumference().is_none() {
            skipped += 1;
            continue;
        }
        for (&t, &p) in opts.t_list.iter().cartesian_product(&opts.p_list) {
            items.push((format!("{id} t={t} p={p}"), m.clone(), t, p, opts.with_betti));
        }
    }
    if opts.curated {
        let p = opts.p_list[0];
        for (id, m) in families::curated_5_6()? {
            if m.circumference().is_none() {
                skipped += 1;
                continue;
            }
            for t in [1u32, 2] {
                items.push((format!("{id} t={t} p={p}"), m.clone(), t, p, false));
            }
        }
    }
    let outcomes: Result<Vec<Outcome>> =
        par::map_slice(&items, opts.parallel, |(id, m, t, p, betti)| {
            let budget = match opts.budget_cap {
                Some(cap) => Budget::capped(cap),
                None => Budget::unlimited(),
            };
            // instance-level parallelism is enough; keep the inner search sequential
            let report = regularity::regularity_report(m, id, *t, *p, *betti, &budget)?;
            Ok(if report.agree {
                Outcome::pass(true)
            } else {
                Outcome::fail(Finding {
                    instance: id.clone(),
                    claim: "reg via Takayama (and Betti) == c(t-1)+r(core)+1".into(),
                    expected: report.formula_value.to_string(),
                    observed: format!(
                        "takayama = {}, betti = {:?}, witness a = {:?}",
                        report.takayama_value, report.betti_value, report.witness_a
                    ),
                    witness: bases_str(m),
                })
            })
        })
        .into_iter()
        .collect();
    Ok(collect("regsym", outcomes?, skipped))
}

/// Corollary: linear resolution of I^(t) iff the core is uniform.
fn suite_linear_uniform(opts: &SuiteOptions) -> Result<SuiteResult> {
    let p = opts.p_list[0];
    let mut items = Vec::new();
    let mut skipped = 0;
    for (id, m) in labeled(opts.exhaustive_n)? {
        if m.circumference().is_none() {
            skipped += 1;
            continue;
        }
        for &t in &opts.t_list {
            items.push((format!("{id} t={t}"), m.clone(), t));
        }
    }
    let outcomes: Result<Vec<Outcome>> = par::map_slice(&items, opts.parallel, |(id, m, t)| {
        let rec = regularity::check_uniform_characterization(m, *t, p, id)?;
        Ok(Outcome::from_record(&rec, bases_str(m)))
    })
    .into_iter()
    .collect();
    Ok(collect("linear_uniform", outcomes?, skipped))
}

/// Bounded Cohen-Macaulay evidence on a small corpus.
fn suite_cm_guard(opts: &SuiteOptions) -> Result<SuiteResult> {
    let p = opts.p_list[0];
    let n_max = opts.exhaustive_n.min(3);
    let mut items = Vec::new();
    let mut skipped = 0;
    for (id, m) in labeled(n_max)? {
        if m.circumference().is_none() {
            skipped += 1;
            continue;
        }
        for &t in &opts.t_list {
            items.push((format!("{id} t={t}"), m.clone(), t));
        }
    }
    let square =
        Matroid::from_bases(4, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]])?;
    for &t in &opts.t_list {
        items.push((format!("square t={t}"), square.clone(), t));
    }
    let outcomes: Result<Vec<Outcome>> = par::map_slice(&items, opts.parallel, |(id, m, t)| {
        let rec = regularity::cm_guard(m, *t, p, id)?;
        Ok(Outcome::from_record(&rec, bases_str(m)))
    })
    .into_iter()
    .collect();
    Ok(collect("cm_guard", outcomes?, skipped))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SuiteOptions {
        SuiteOptions {
            exhaustive_n: 3,
            t_list: vec![1, 2],
            samples: 25,
            ..SuiteOptions::default()
        }
    }

    #[test]
    fn unknown_suite_rejected() {
        assert!(matches!(
            run_suite("nope", &SuiteOptions::default()).unwrap_err(),
            Error::UnknownSuite(_)
        ));
    }

    #[test]
    fn combinatorial_suites_pass_small() {
        for name in ["arbor", "gamma", "mb", "edmonds", "cone_acyclic"] {
            let r = run_suite(name, &small()).unwrap();
            assert!(r.ok(), "{name}: {:?}", r.findings);
            assert!(r.instances > 0, "{name} ran nothing");
        }
    }

    #[test]
    fn regularity_suites_pass_small() {
        for name in ["upper", "regsym", "linear_uniform", "cm_guard"] {
            let r = run_suite(name, &small()).unwrap();
            assert!(r.ok(), "{name}: {:?}", r.findings);
            assert!(r.instances > 0, "{name} ran nothing");
        }
    }

    #[test]
    fn degree_lemmas_pass_small() {
        let r = run_suite("degree_lemmas", &small()).unwrap();
        assert!(r.ok(), "{:?}", r.findings);
        assert!(r.instances >= 2 * small().samples);
    }

    #[test]
    fn suite_results_render_both_forms() {
        let r = run_suite("mb", &small()).unwrap();
        assert!(r.render(false).starts_with("suite mb:"));
        assert!(r.render(true).starts_with("mb\t"));
    }

    #[test]
    fn arbor_equality_attained() {
        let r = run_suite("arbor", &small()).unwrap();
        assert!(r.equalities > 0);
    }
}
