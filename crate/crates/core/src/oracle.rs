//! Brute-force checks of the product set-labeling characterizations.
//!
//! Each check sweeps a bounded space (exhaustively when the budget allows,
//! otherwise by seeded sampling) and returns an [`OracleVerdict`]. The first
//! counterexample in canonical order is reported.
//!
//! The `*_with` variants take the predicate under test as an argument so that
//! deliberately broken variants can be plugged in as negative controls.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use itertools::Itertools;
use num_bigint::BigUint;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::constructors::{auto_bases, geometric_label};
use crate::graph::{build_graph, Graph, VertexId};
use crate::labeling::{
    edge_label, is_geometric, is_like_geometric, is_strong, is_strong_via_quotients,
    pair_is_strong, predicted_edge_size, Labeling,
};
use crate::setalgebra::{
    cardinality_bounds, detect_gp, is_minimal_product_pair, product_set, quotient_set, LabelSet,
    PositiveInt, Rational,
};

/// Bounds on a sweep over label sets drawn from `{1..universe_max}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchBudget {
    pub universe_max: u64,
    pub min_set_size: usize,
    pub max_set_size: usize,
    /// 0 selects an exhaustive sweep.
    pub max_samples: u64,
    pub seed: u64,
}

impl SearchBudget {
    pub const fn exhaustive(universe_max: u64, max_set_size: usize) -> Self {
        SearchBudget {
            universe_max,
            min_set_size: 1,
            max_set_size,
            max_samples: 0,
            seed: defaults::SEED,
        }
    }

    pub const fn sampled(universe_max: u64, max_set_size: usize, samples: u64, seed: u64) -> Self {
        SearchBudget {
            universe_max,
            min_set_size: 1,
            max_set_size,
            max_samples: samples,
            seed,
        }
    }

    pub const fn with_min_size(mut self, min_set_size: usize) -> Self {
        self.min_set_size = min_set_size;
        self
    }

    fn mode(&self) -> SearchMode {
        if self.max_samples == 0 {
            SearchMode::Exhaustive
        } else {
            SearchMode::Sampled
        }
    }

    fn describe(&self) -> String {
        let sizes = format!("sizes {}..={}", self.min_set_size, self.max_set_size);
        match self.mode() {
            SearchMode::Exhaustive => format!("subsets of 1..={}, {sizes}", self.universe_max),
            SearchMode::Sampled => format!(
                "{} samples from subsets of 1..={}, {sizes}, seed {}",
                self.max_samples, self.universe_max, self.seed
            ),
        }
    }

    /// Why the budget cannot be swept, if it cannot.
    pub fn validate(&self) -> Result<(), String> {
        if self.universe_max < 2 {
            return Err("universe_max must be at least 2".into());
        }
        if self.min_set_size < 1 || self.max_set_size < self.min_set_size {
            return Err("set sizes must satisfy 1 <= min <= max".into());
        }
        if self.min_set_size as u64 > self.universe_max {
            return Err("minimum set size exceeds the universe".into());
        }
        Ok(())
    }
}

/// Default budgets, each sized to finish well under a minute.
pub mod defaults {
    use super::SearchBudget;

    pub const SEED: u64 = 42;
    pub const THM1: SearchBudget = SearchBudget::exhaustive(12, 3);
    pub const THM1_SAMPLED: SearchBudget = SearchBudget::sampled(1000, 6, 10_000, 42);
    pub const THM2: SearchBudget = SearchBudget::exhaustive(20, 4).with_min_size(2);
    pub const THM3: SearchBudget = SearchBudget::exhaustive(10, 3);
    pub const THM3_SEED: u64 = 7;
    pub const PROP3: SearchBudget = SearchBudget::exhaustive(2, 5);
    pub const GEOM_RATIOS: [u64; 2] = [2, 3];
    pub const GEOM_M_MAX: usize = 5;
    pub const GEOM_N_MAX: usize = 5;
    pub const GEOM_K_MAX: u32 = 7;
    pub const LIKE_GEOM_BASE: u64 = 2;
    pub const LIKE_GEOM_EXP_MAX: u32 = 3;
    pub const LIKE_GEOM_SIZE_MAX: usize = 3;
    /// Largest number of ratio/size assignments a like-geometric search will visit.
    pub const LIKE_GEOM_LIMIT: u64 = 2_000_000;
    /// Labelings replayed through the labeling-level operations after a table sweep.
    pub const SPOT_CHECKS: u64 = 256;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// The search space exceeded the budget before a verdict was reached.
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    Exhaustive,
    Sampled,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub inputs: Value,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OracleVerdict {
    pub theorem_id: String,
    pub checked: u64,
    pub verdict: Verdict,
    pub counterexample: Option<Counterexample>,
    pub mode: SearchMode,
    pub bounds: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl OracleVerdict {
    fn new(theorem_id: &str, mode: SearchMode, bounds: String) -> Self {
        OracleVerdict {
            theorem_id: theorem_id.to_string(),
            checked: 0,
            verdict: Verdict::Pass,
            counterexample: None,
            mode,
            bounds,
            witness: None,
            elapsed: Duration::ZERO,
        }
    }

    fn fail(&mut self, cx: Counterexample) {
        self.verdict = Verdict::Fail;
        self.counterexample = Some(cx);
    }

    fn finish(mut self, start: Instant) -> Self {
        self.elapsed = start.elapsed();
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// JSON form; `elapsed_ms` is only included on request because it varies between runs.
    pub fn to_json(&self, include_timing: bool) -> Value {
        let mut v = serde_json::to_value(self).expect("verdict serializes");
        if include_timing {
            v["elapsed_ms"] = json!(self.elapsed.as_millis() as u64);
        }
        v
    }
}

fn invalid_budget(theorem_id: &str, why: String) -> OracleVerdict {
    let mut v = OracleVerdict::new(theorem_id, SearchMode::Exhaustive, why.clone());
    v.verdict = Verdict::Inconclusive;
    v
}

/// All subsets of `{1..universe_max}` with sizes in the budget, size-major then lexicographic.
pub fn enumerate_label_sets(b: &SearchBudget) -> impl Iterator<Item = LabelSet> {
    let universe = b.universe_max;
    (b.min_set_size..=b.max_set_size).flat_map(move |size| {
        (1..=universe)
            .combinations(size)
            .map(|c| LabelSet::from_u64s(&c).expect("positive elements"))
    })
}

/// A uniformly sized random subset of `{1..universe_max}`.
pub fn sample_label_set<R: Rng>(rng: &mut R, b: &SearchBudget) -> LabelSet {
    let universe = usize::try_from(b.universe_max).expect("universe fits in memory");
    let max = b.max_set_size.min(universe);
    let size = rng.gen_range(b.min_set_size..=max);
    let mut picks: Vec<u64> = sample(rng, universe, size).into_iter().map(|i| i as u64 + 1).collect();
    picks.sort_unstable();
    LabelSet::from_u64s(&picks).expect("positive elements")
}

fn pair_json(a: &LabelSet, b: &LabelSet) -> Value {
    json!({ "a": a, "b": b })
}

fn labeling_json(g: &Graph, f: &Labeling) -> Value {
    json!({ "graph": g, "labeling": f })
}

/// Visits set pairs: unordered pairs with repetition when exhaustive, random pairs when sampled.
/// Stops at the first pair for which `visit` returns `false`.
fn sweep_pairs(b: &SearchBudget, mut visit: impl FnMut(&LabelSet, &LabelSet) -> bool) -> u64 {
    let mut checked = 0;
    match b.mode() {
        SearchMode::Exhaustive => {
            let sets: Vec<LabelSet> = enumerate_label_sets(b).collect();
            for (i, a) in sets.iter().enumerate() {
                for c in &sets[i..] {
                    checked += 1;
                    if !visit(a, c) {
                        return checked;
                    }
                }
            }
        }
        SearchMode::Sampled => {
            let mut rng = ChaCha8Rng::seed_from_u64(b.seed);
            for _ in 0..b.max_samples {
                let a = sample_label_set(&mut rng, b);
                let c = sample_label_set(&mut rng, b);
                checked += 1;
                if !visit(&a, &c) {
                    return checked;
                }
            }
        }
    }
    checked
}

/// `|A| + |B| - 1 <= |A * B| <= |A| |B|` over the budget.
pub fn check_thm1(b: &SearchBudget) -> OracleVerdict {
    check_thm1_with(b, cardinality_bounds)
}

pub fn check_thm1_with(
    b: &SearchBudget,
    bounds: impl Fn(&LabelSet, &LabelSet) -> (usize, usize),
) -> OracleVerdict {
    const ID: &str = "thm1";
    if let Err(e) = b.validate() {
        return invalid_budget(ID, e);
    }
    let start = Instant::now();
    let mut verdict = OracleVerdict::new(ID, b.mode(), b.describe());
    let mut cx = None;
    verdict.checked = sweep_pairs(b, |a, c| {
        let (lo, hi) = bounds(a, c);
        let size = product_set(a, c).len();
        if lo <= size && size <= hi {
            return true;
        }
        cx = Some(Counterexample {
            inputs: pair_json(a, c),
            expected: format!("{lo} <= |A*B| <= {hi}"),
            actual: format!("|A*B| = {size}"),
        });
        false
    });
    if let Some(cx) = cx {
        verdict.fail(cx);
    }
    verdict.finish(start)
}

/// Both sets are progressions with one common ratio; a singleton fits any ratio.
pub fn same_ratio_progressions(a: &LabelSet, b: &LabelSet) -> bool {
    match (detect_gp(a), detect_gp(b)) {
        (Some(da), Some(db)) => match (da.ratio(), db.ratio()) {
            (Some(ra), Some(rb)) => ra == rb,
            _ => true,
        },
        _ => false,
    }
}

/// `|A * B| = |A| + |B| - 1` exactly when `A` and `B` are progressions with a common ratio.
pub fn check_thm2(b: &SearchBudget) -> OracleVerdict {
    const ID: &str = "thm2";
    if let Err(e) = b.validate() {
        return invalid_budget(ID, e);
    }
    let start = Instant::now();
    let mut verdict = OracleVerdict::new(ID, b.mode(), b.describe());
    let mut cx = None;
    // Progression ratios are interned once per set; the pair loop compares ids.
    let mut interned: BTreeMap<Rational, u32> = BTreeMap::new();
    let mut ratio_id = |s: &LabelSet| -> Option<Option<u32>> {
        let d = detect_gp(s)?;
        Some(d.ratio().map(|r| {
            let next = interned.len() as u32;
            *interned.entry(r.clone()).or_insert(next)
        }))
    };
    let shape = |x: Option<Option<u32>>, y: Option<Option<u32>>| match (x, y) {
        (Some(Some(p)), Some(Some(q))) => p == q,
        (Some(_), Some(_)) => true,
        _ => false,
    };
    let mut check = |a: &LabelSet, c: &LabelSet, ra, rc| {
        let minimal = is_minimal_product_pair(a, c);
        let same = shape(ra, rc);
        if minimal == same {
            return true;
        }
        cx = Some(Counterexample {
            inputs: pair_json(a, c),
            expected: format!("minimal product set = {same} (same-ratio progressions: {same})"),
            actual: format!("minimal product set = {minimal} (|A*B| = {})", product_set(a, c).len()),
        });
        false
    };
    match b.mode() {
        SearchMode::Exhaustive => {
            let sets: Vec<LabelSet> = enumerate_label_sets(b).collect();
            let ids: Vec<_> = sets.iter().map(&mut ratio_id).collect();
            'outer: for i in 0..sets.len() {
                for j in i..sets.len() {
                    verdict.checked += 1;
                    if !check(&sets[i], &sets[j], ids[i], ids[j]) {
                        break 'outer;
                    }
                }
            }
        }
        SearchMode::Sampled => {
            verdict.checked = sweep_pairs(b, |a, c| {
                let same = same_ratio_progressions(a, c);
                let ids = if same { (Some(None), Some(None)) } else { (None, None) };
                check(a, c, ids.0, ids.1)
            });
        }
    }
    if let Some(cx) = cx {
        verdict.fail(cx);
    }
    verdict.finish(start)
}

/// Strength of a labeling agrees with disjointness of adjacent quotient sets.
///
/// Exhaustive mode tabulates both edge predicates over every pair of label
/// sets and walks all injective labelings of `g`; branches where both
/// conjunctions are already false are counted without being expanded.
/// A sample of labelings is then replayed through [`is_strong`] and
/// [`is_strong_via_quotients`] to tie the table to the labeling-level operations.
pub fn check_thm3(b: &SearchBudget, g: &Graph) -> OracleVerdict {
    let mut verdict = check_thm3_with(b, g, pair_is_strong, quotient_set);
    if verdict.verdict != Verdict::Pass || b.validate().is_err() {
        return verdict;
    }
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(b.seed ^ 0x5eed);
    for _ in 0..defaults::SPOT_CHECKS {
        let Some(f) = random_injective_labeling(&mut rng, b, g) else { break };
        let direct = is_strong(g, &f).expect("valid labeling");
        let via_q = is_strong_via_quotients(g, &f).expect("valid labeling");
        let tabled = g.edges().all(|e| {
            let (u, v) = e.endpoints();
            pair_is_strong(f.get(u).unwrap(), f.get(v).unwrap())
        });
        if direct != via_q || direct != tabled {
            verdict.fail(Counterexample {
                inputs: labeling_json(g, &f),
                expected: format!("is_strong = {tabled}"),
                actual: format!("is_strong = {direct}, is_strong_via_quotients = {via_q}"),
            });
            break;
        }
    }
    verdict.elapsed += start.elapsed();
    verdict
}

fn random_injective_labeling<R: Rng>(rng: &mut R, b: &SearchBudget, g: &Graph) -> Option<Labeling> {
    let mut used = BTreeSet::new();
    let mut f = Labeling::default();
    for v in g.vertices() {
        let mut tries = 0;
        let s = loop {
            let s = sample_label_set(rng, b);
            if !used.contains(&s) {
                break s;
            }
            tries += 1;
            if tries > 1000 {
                return None;
            }
        };
        used.insert(s.clone());
        f.insert(v.clone(), s);
    }
    Some(f)
}

pub fn check_thm3_with(
    b: &SearchBudget,
    g: &Graph,
    strong_pair: impl Fn(&LabelSet, &LabelSet) -> bool,
    quotients: impl Fn(&LabelSet) -> BTreeSet<Rational>,
) -> OracleVerdict {
    const ID: &str = "thm3";
    if let Err(e) = b.validate() {
        return invalid_budget(ID, e);
    }
    let start = Instant::now();
    let mut verdict = OracleVerdict::new(ID, b.mode(), format!("{} on {} vertices", b.describe(), g.vertex_count()));
    let verts: Vec<&VertexId> = g.vertices().collect();
    let index: BTreeMap<&VertexId, usize> = verts.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    // Edges checked when their later endpoint is assigned.
    let mut back: Vec<Vec<usize>> = vec![Vec::new(); verts.len()];
    for e in g.edges() {
        let (u, v) = e.endpoints();
        let (i, j) = (index[u], index[v]);
        back[i.max(j)].push(i.min(j));
    }

    let report = |sets: &[&LabelSet], p: bool, q: bool| Counterexample {
        inputs: labeling_json(
            g,
            &verts.iter().zip(sets).map(|(v, s)| ((*v).clone(), (*s).clone())).collect(),
        ),
        expected: format!("is_strong = {p}"),
        actual: format!("is_strong_via_quotients = {q}"),
    };

    match b.mode() {
        SearchMode::Exhaustive => {
            let sets: Vec<LabelSet> = enumerate_label_sets(b).collect();
            let n = sets.len();
            if n < verts.len() {
                let mut v = invalid_budget(ID, "universe too small for an injective labeling".into());
                v.checked = 0;
                return v.finish(start);
            }
            let qs: Vec<BTreeSet<Rational>> = sets.iter().map(&quotients).collect();
            let mut strong_tab = vec![false; n * n];
            let mut quot_tab = vec![false; n * n];
            for i in 0..n {
                for j in 0..n {
                    strong_tab[i * n + j] = strong_pair(&sets[i], &sets[j]);
                    quot_tab[i * n + j] = qs[i].is_disjoint(&qs[j]);
                }
            }
            let mut search = StrengthSearch {
                n,
                back: &back,
                strong_tab: &strong_tab,
                quot_tab: &quot_tab,
                assignment: vec![0; verts.len()],
                used: vec![false; n],
                checked: 0,
                found: None,
            };
            search.descend(0, true, true);
            verdict.checked = search.checked;
            if let Some((assignment, p, q)) = search.found {
                let chosen: Vec<&LabelSet> = assignment.iter().map(|&i| &sets[i]).collect();
                verdict.fail(report(&chosen, p, q));
            }
        }
        SearchMode::Sampled => {
            let mut rng = ChaCha8Rng::seed_from_u64(b.seed);
            for _ in 0..b.max_samples {
                let Some(f) = random_injective_labeling(&mut rng, b, g) else { break };
                verdict.checked += 1;
                let chosen: Vec<&LabelSet> = verts.iter().map(|v| f.get(v).unwrap()).collect();
                let (mut p, mut q) = (true, true);
                for (j, earlier) in back.iter().enumerate() {
                    for &i in earlier {
                        p &= strong_pair(chosen[i], chosen[j]);
                        q &= quotients(chosen[i]).is_disjoint(&quotients(chosen[j]));
                    }
                }
                if p != q {
                    verdict.fail(report(&chosen, p, q));
                    break;
                }
            }
        }
    }
    verdict.finish(start)
}

struct StrengthSearch<'a> {
    n: usize,
    back: &'a [Vec<usize>],
    strong_tab: &'a [bool],
    quot_tab: &'a [bool],
    assignment: Vec<usize>,
    used: Vec<bool>,
    checked: u64,
    found: Option<(Vec<usize>, bool, bool)>,
}

impl StrengthSearch<'_> {
    /// Number of injective completions once `depth` vertices are fixed.
    fn completions(&self, depth: usize) -> u64 {
        let remaining = self.assignment.len() - depth;
        (0..remaining).map(|i| (self.n - depth - i) as u64).product()
    }

    fn descend(&mut self, depth: usize, p: bool, q: bool) {
        if self.found.is_some() {
            return;
        }
        if depth == self.assignment.len() {
            self.checked += 1;
            if p != q {
                self.found = Some((self.assignment.clone(), p, q));
            }
            return;
        }
        if !p && !q {
            self.checked += self.completions(depth);
            return;
        }
        for s in 0..self.n {
            if self.used[s] {
                continue;
            }
            let (mut p2, mut q2) = (p, q);
            for &i in &self.back[depth] {
                let cell = self.assignment[i] * self.n + s;
                p2 &= self.strong_tab[cell];
                q2 &= self.quot_tab[cell];
            }
            self.assignment[depth] = s;
            self.used[s] = true;
            self.descend(depth + 1, p2, q2);
            self.used[s] = false;
            if self.found.is_some() {
                return;
            }
        }
    }
}

fn k2() -> Graph {
    build_graph(
        vec![VertexId::new("u"), VertexId::new("v")],
        vec![(VertexId::new("u"), VertexId::new("v"))],
    )
    .expect("valid")
}

/// `u` gets `{a r^i}` (`m` terms), `v` gets `{b s^j}` (`n` terms).
fn gp_pair(a: u64, r: &BigUint, m: usize, b: u64, s: &BigUint, n: usize) -> Labeling {
    let base = |x: u64| PositiveInt::from_u64(x).expect("positive");
    [
        (VertexId::new("u"), geometric_label(&base(a), r, m)),
        (VertexId::new("v"), geometric_label(&base(b), s, n)),
    ]
    .into_iter()
    .collect()
}

/// Base pairs for the progression families; the two minima always differ so labelings stay injective.
const GP_BASES: [(u64, u64); 2] = [(1, 5), (7, 1)];

/// Ratio pairs where neither ratio is an integral power of the other.
const NON_POWER_RATIOS: [(u64, u64); 5] = [(2, 3), (2, 6), (2, 12), (3, 6), (4, 8)];

/// Edge label of progressions with ratios `r` and `r^k` is a progression exactly when `k <= m`.
pub fn check_geometric_characterization(r_values: &[u64], m_max: usize, n_max: usize, k_max: u32) -> OracleVerdict {
    const ID: &str = "geomchar";
    let start = Instant::now();
    let bounds = format!("r in {r_values:?}, m,n in 2..={m_max}/2..={n_max}, k in 1..={k_max}, plus non-power ratio controls");
    let mut verdict = OracleVerdict::new(ID, SearchMode::Exhaustive, bounds);
    if r_values.iter().any(|&r| r < 2) {
        verdict.verdict = Verdict::Inconclusive;
        verdict.bounds = "ratios must be at least 2".into();
        return verdict.finish(start);
    }
    let g = k2();
    let mut run = |f: Labeling, expect_gp: bool, what: String| -> bool {
        verdict.checked += 1;
        let got = is_geometric(&g, &f).expect("valid labeling");
        if got == expect_gp {
            return true;
        }
        verdict.fail(Counterexample {
            inputs: labeling_json(&g, &f),
            expected: format!("geometric = {expect_gp} ({what})"),
            actual: format!("geometric = {got}"),
        });
        false
    };
    for &r in r_values {
        let rb = BigUint::from(r);
        for m in 2..=m_max {
            for n in 2..=n_max {
                for k in 1..=k_max {
                    for (a, b) in GP_BASES {
                        let f = gp_pair(a, &rb, m, b, &rb.pow(k), n);
                        if !run(f, k as usize <= m, format!("k = {k}, m = {m}")) {
                            return verdict.finish(start);
                        }
                    }
                }
            }
        }
    }
    for (r, s) in NON_POWER_RATIOS {
        for m in 2..=m_max {
            for n in 2..=n_max {
                let f = gp_pair(1, &BigUint::from(r), m, 5, &BigUint::from(s), n);
                if !run(f, false, format!("ratios {r} and {s} are not powers of one another")) {
                    return verdict.finish(start);
                }
            }
        }
    }
    verdict.finish(start)
}

/// Within the geometric members (`k <= m`) of the progression family, the labeling is strong exactly when `k = m`.
pub fn check_thm4(r_values: &[u64], m_max: usize, n_max: usize, k_max: u32) -> OracleVerdict {
    const ID: &str = "thm4";
    let start = Instant::now();
    let bounds = format!("r in {r_values:?}, m,n in 2..={m_max}/2..={n_max}, k in 1..=min(m, {k_max})");
    let mut verdict = OracleVerdict::new(ID, SearchMode::Exhaustive, bounds);
    let g = k2();
    for &r in r_values {
        let rb = BigUint::from(r.max(2));
        for m in 2..=m_max {
            for n in 2..=n_max {
                for k in 1..=k_max.min(m as u32) {
                    for (a, b) in GP_BASES {
                        let f = gp_pair(a, &rb, m, b, &rb.pow(k), n);
                        verdict.checked += 1;
                        let geometric = is_geometric(&g, &f).expect("valid");
                        let strong = is_strong(&g, &f).expect("valid");
                        if !geometric || strong != (k as usize == m) {
                            verdict.fail(Counterexample {
                                inputs: labeling_json(&g, &f),
                                expected: format!("geometric, strong = {}", k as usize == m),
                                actual: format!("geometric = {geometric}, strong = {strong}"),
                            });
                            return verdict.finish(start);
                        }
                    }
                }
            }
        }
    }
    verdict.finish(start)
}

/// Predicted edge size `m + k (n - 1)` equals the actual product-set size.
///
/// Sweeps ratios `2..=1 + universe_max`, sizes `1..=max_set_size` and every `k <= m`.
pub fn check_prop3(b: &SearchBudget) -> OracleVerdict {
    const ID: &str = "prop3";
    if let Err(e) = b.validate() {
        return invalid_budget(ID, e);
    }
    let start = Instant::now();
    let bounds = format!(
        "r in 2..={}, m,n in 1..={}, k in 1..=m",
        b.universe_max + 1,
        b.max_set_size
    );
    let mut verdict = OracleVerdict::new(ID, SearchMode::Exhaustive, bounds);
    let (u, v) = (VertexId::new("u"), VertexId::new("v"));
    for r in 2..=b.universe_max + 1 {
        let rb = BigUint::from(r);
        for m in 1..=b.max_set_size {
            for n in 1..=b.max_set_size {
                for k in 1..=m as u32 {
                    for (a, c) in GP_BASES {
                        let f = gp_pair(a, &rb, m, c, &rb.pow(k), n);
                        verdict.checked += 1;
                        let actual = edge_label(&f, &u, &v).expect("assigned").len();
                        let predicted = predicted_edge_size(&f, &u, &v);
                        // A singleton endpoint has no ratio, so its index is 1.
                        let k_eff = if m == 1 || n == 1 { 1 } else { k as usize };
                        let mut consistent = predicted.as_ref() == Ok(&actual);
                        if k_eff == 1 {
                            consistent &= actual == m + n - 1;
                        }
                        if k_eff == m {
                            consistent &= actual == m * n;
                        }
                        if !consistent {
                            verdict.fail(Counterexample {
                                inputs: labeling_json(&k2(), &f),
                                expected: format!("|f*(uv)| = {actual} (k = {k}, m = {m}, n = {n})"),
                                actual: format!("predicted {predicted:?}"),
                            });
                            return verdict.finish(start);
                        }
                    }
                }
            }
        }
    }
    verdict.finish(start)
}

/// Searches for a like-geometric labeling of `g`.
///
/// Each vertex gets a ratio `ratio_base^e` with `1 <= e <= exponent_max`, a
/// size in `1..=size_max`, and an automatic base; every combination is
/// classified. A labeling should be found exactly when `g` is bipartite.
/// Spaces larger than `limit` assignments are not searched and yield
/// [`Verdict::Inconclusive`].
pub fn search_like_geometric(
    g: &Graph,
    ratio_base: u64,
    exponent_max: u32,
    size_max: usize,
    limit: u64,
) -> OracleVerdict {
    const ID: &str = "thm5";
    let start = Instant::now();
    let bounds = format!(
        "ratios {ratio_base}^1..={ratio_base}^{exponent_max}, sizes 1..={size_max}, {} vertices",
        g.vertex_count()
    );
    let mut verdict = OracleVerdict::new(ID, SearchMode::Exhaustive, bounds);
    if ratio_base < 2 || exponent_max < 1 || size_max < 1 {
        verdict.verdict = Verdict::Inconclusive;
        verdict.bounds.push_str(" (invalid search parameters)");
        return verdict.finish(start);
    }
    let choices_per_vertex = exponent_max as u64 * size_max as u64;
    let space = (0..g.vertex_count()).try_fold(1u64, |acc, _| acc.checked_mul(choices_per_vertex));
    if space.is_none_or(|s| s > limit) {
        verdict.verdict = Verdict::Inconclusive;
        verdict.bounds.push_str(&format!(" (search space exceeds the limit of {limit} assignments)"));
        return verdict.finish(start);
    }

    let verts: Vec<&VertexId> = g.vertices().collect();
    let bases: Vec<PositiveInt> = auto_bases(verts.len(), ratio_base)
        .into_iter()
        .map(|b| PositiveInt::from_u64(b).expect("positive"))
        .collect();
    let base_ratio = BigUint::from(ratio_base);
    let ratios: Vec<BigUint> = (1..=exponent_max).map(|e| base_ratio.pow(e)).collect();
    // Choice c encodes exponent index c / size_max and size c % size_max + 1.
    let mut odometer = vec![0u64; verts.len()];
    let mut found = None;
    'search: loop {
        let f: Labeling = verts
            .iter()
            .zip(&odometer)
            .zip(&bases)
            .map(|((v, &c), base)| {
                let ratio = &ratios[(c / size_max as u64) as usize];
                let size = (c % size_max as u64) as usize + 1;
                ((*v).clone(), geometric_label(base, ratio, size))
            })
            .collect();
        verdict.checked += 1;
        if let Some(k) = is_like_geometric(g, &f).expect("auto bases give injective labelings") {
            found = Some((f, k));
            break;
        }
        for digit in odometer.iter_mut().rev() {
            *digit += 1;
            if *digit < choices_per_vertex {
                continue 'search;
            }
            *digit = 0;
        }
        break;
    }

    let bipartite = g.bipartition().is_some();
    match (found, bipartite) {
        (Some((f, k)), true) => {
            verdict.witness = Some(json!({ "labeling": f, "characteristic_index": k }));
        }
        (Some((f, k)), false) => verdict.fail(Counterexample {
            inputs: labeling_json(g, &f),
            expected: "no like-geometric labeling of a non-bipartite graph".into(),
            actual: format!("like-geometric with index {k}"),
        }),
        (None, true) => verdict.fail(Counterexample {
            inputs: json!({ "graph": g }),
            expected: "a like-geometric labeling of a bipartite graph".into(),
            actual: "none within the searched bounds".into(),
        }),
        (None, false) => {}
    }
    verdict.finish(start)
}
