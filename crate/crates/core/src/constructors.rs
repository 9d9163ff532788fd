//! Labelings built to order: isogeometric, uniform, like-geometric and strong.
//!
//! Every constructor classifies its own output before returning it and fails
//! with [`ConstructionError::SelfCheck`] if a promised property does not hold.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Bipartition, Graph, OddCycle, VertexId};
use crate::labeling::{classify, CommonRatio, Labeling};
use crate::setalgebra::{LabelSet, PositiveInt, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("graph is not bipartite; odd cycle {0}")]
    NotBipartite(OddCycle),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("constructed labeling failed self-verification: {0}")]
    SelfCheck(String),
}

/// Parameters shared by the constructors. `sizes` and `bases` are keyed by vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstructionParams {
    pub ratio: u64,
    pub sizes: BTreeMap<VertexId, usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bases: Option<BTreeMap<VertexId, PositiveInt>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub char_index: Option<u32>,
}

impl ConstructionParams {
    /// Same size on every vertex, automatic bases.
    pub fn uniform(g: &Graph, ratio: u64, size: usize) -> Self {
        ConstructionParams {
            ratio,
            sizes: g.vertices().map(|v| (v.clone(), size)).collect(),
            bases: None,
            char_index: None,
        }
    }
}

/// The `count` smallest positive integers that are not multiples of `ratio`.
pub fn auto_bases(count: usize, ratio: u64) -> Vec<u64> {
    (1u64..).filter(|n| n % ratio != 0).take(count).collect()
}

/// `{base, base r, ..., base r^(len-1)}`.
pub fn geometric_label(base: &PositiveInt, ratio: &BigUint, len: usize) -> LabelSet {
    let mut term = base.as_biguint().clone();
    let mut elems = Vec::with_capacity(len);
    for _ in 0..len {
        elems.push(PositiveInt::new(term.clone()).expect("positive"));
        term *= ratio;
    }
    LabelSet::from_elements(elems).expect("non-empty")
}

fn check_ratio(ratio: u64) -> Result<(), ConstructionError> {
    if ratio < 2 {
        return Err(ConstructionError::InvalidParams(format!(
            "ratio must be at least 2, got {ratio}"
        )));
    }
    Ok(())
}

fn sizes_for(g: &Graph, sizes: &BTreeMap<VertexId, usize>) -> Result<Vec<usize>, ConstructionError> {
    if let Some(v) = sizes.keys().find(|v| !g.contains_vertex(v)) {
        return Err(ConstructionError::InvalidParams(format!("size given for unknown vertex {v}")));
    }
    g.vertices()
        .map(|v| match sizes.get(v) {
            None => Err(ConstructionError::InvalidParams(format!("no size for vertex {v}"))),
            Some(0) => Err(ConstructionError::InvalidParams(format!("size 0 for vertex {v}"))),
            Some(&s) => Ok(s),
        })
        .collect()
}

/// Bases in vertex order: the supplied map (total, pairwise distinct) or automatic ones.
fn bases_for(
    g: &Graph,
    bases: Option<&BTreeMap<VertexId, PositiveInt>>,
    ratio: u64,
) -> Result<Vec<PositiveInt>, ConstructionError> {
    let Some(bases) = bases else {
        return Ok(auto_bases(g.vertex_count(), ratio)
            .into_iter()
            .map(|b| PositiveInt::from_u64(b).expect("positive"))
            .collect());
    };
    let mut owner: BTreeMap<&PositiveInt, &VertexId> = BTreeMap::new();
    for (v, b) in bases {
        if !g.contains_vertex(v) {
            return Err(ConstructionError::InvalidParams(format!("base given for unknown vertex {v}")));
        }
        if let Some(w) = owner.insert(b, v) {
            return Err(ConstructionError::InvalidParams(format!(
                "vertices {w} and {v} share the base {b}"
            )));
        }
    }
    g.vertices()
        .map(|v| {
            bases
                .get(v)
                .cloned()
                .ok_or_else(|| ConstructionError::InvalidParams(format!("no base for vertex {v}")))
        })
        .collect()
}

fn bipartition_of(g: &Graph) -> Result<Bipartition, ConstructionError> {
    g.two_coloring().map_err(ConstructionError::NotBipartite)
}

fn self_check(ok: bool, what: impl FnOnce() -> String) -> Result<(), ConstructionError> {
    if ok {
        Ok(())
    } else {
        Err(ConstructionError::SelfCheck(what()))
    }
}

/// Every vertex gets a progression with ratio `p.ratio`; such a labeling is always isogeometric.
pub fn construct_isogeometric(g: &Graph, p: &ConstructionParams) -> Result<Labeling, ConstructionError> {
    check_ratio(p.ratio)?;
    let sizes = sizes_for(g, &p.sizes)?;
    let bases = bases_for(g, p.bases.as_ref(), p.ratio)?;
    let r = BigUint::from(p.ratio);
    let f: Labeling = g
        .vertices()
        .zip(bases.iter().zip(&sizes))
        .map(|(v, (b, &len))| (v.clone(), geometric_label(b, &r, len)))
        .collect();

    let report = classify(g, &f);
    let want = Rational::from_integer(p.ratio).expect("ratio >= 2");
    let iso_ok = match &report.isogeometric {
        Some(CommonRatio::Ratio(got)) => got == &want,
        Some(CommonRatio::Unconstrained) => sizes.iter().all(|&s| s == 1),
        None => false,
    };
    self_check(report.valid && iso_ok, || {
        format!("expected isogeometric ratio {want}, report says {:?}", report.isogeometric)
    })?;
    Ok(f)
}

/// Isogeometric and uniform: size `m` everywhere, or `m` on the `x` side and `n` on the `y` side.
pub fn construct_uniform_isogeometric(
    g: &Graph,
    m: usize,
    n: Option<usize>,
    ratio: u64,
) -> Result<Labeling, ConstructionError> {
    check_ratio(ratio)?;
    let sizes: BTreeMap<VertexId, usize> = match n {
        Some(n) if n != m => {
            let bp = bipartition_of(g)?;
            g.vertices()
                .map(|v| (v.clone(), if bp.x.contains(v) { m } else { n }))
                .collect()
        }
        _ => g.vertices().map(|v| (v.clone(), m)).collect(),
    };
    let params = ConstructionParams {
        ratio,
        sizes,
        bases: None,
        char_index: None,
    };
    let f = construct_isogeometric(g, &params)?;
    let expected = m + n.unwrap_or(m) - 1;
    let report = classify(g, &f);
    self_check(report.uniform == Some(expected), || {
        format!("expected uniform edge size {expected}, report says {:?}", report.uniform)
    })?;
    Ok(f)
}

/// Bipartite graphs only: ratio `r` on the `x` side and `r^k` on the `y` side.
///
/// `k` defaults to the smallest `x`-side size; every `x`-side size must be at
/// least `k` and every size at least 2.
pub fn construct_like_geometric(g: &Graph, p: &ConstructionParams) -> Result<Labeling, ConstructionError> {
    check_ratio(p.ratio)?;
    let bp = bipartition_of(g)?;
    let sizes = sizes_for(g, &p.sizes)?;
    let size_of: BTreeMap<&VertexId, usize> = g.vertices().zip(sizes.iter().copied()).collect();
    if let Some((v, s)) = size_of.iter().find(|(_, &s)| s < 2) {
        return Err(ConstructionError::InvalidParams(format!(
            "vertex {v} has size {s}; like-geometric labels need at least two elements"
        )));
    }
    let min_x = bp.x.iter().map(|v| size_of[v]).min().expect("bipartite graphs have edges");
    let k = p.char_index.unwrap_or(min_x as u32);
    if k < 2 {
        return Err(ConstructionError::InvalidParams(format!("characteristic index must be at least 2, got {k}")));
    }
    if k as usize > min_x {
        return Err(ConstructionError::InvalidParams(format!(
            "characteristic index {k} exceeds the smallest x-side size {min_x}"
        )));
    }
    let bases = bases_for(g, p.bases.as_ref(), p.ratio)?;
    let r = BigUint::from(p.ratio);
    let s = r.pow(k);
    let f: Labeling = g
        .vertices()
        .zip(&bases)
        .map(|(v, b)| {
            let ratio = if bp.x.contains(v) { &r } else { &s };
            (v.clone(), geometric_label(b, ratio, size_of[v]))
        })
        .collect();

    let report = classify(g, &f);
    self_check(report.valid && report.like_geometric == Some(k), || {
        format!("expected like-geometric index {k}, report says {:?}", report.like_geometric)
    })?;
    Ok(f)
}

/// Bipartite graphs only: size `m` and ratio `r` on the `x` side, ratio `r^m`
/// on the `y` side with sizes from `y_sizes`. Every edge label then has the
/// full `|f(u)| |f(v)|` elements.
///
/// Entries of `y_sizes` for `x`-side vertices must equal `m`.
pub fn construct_strong_like_geometric(
    g: &Graph,
    ratio: u64,
    m: usize,
    y_sizes: &BTreeMap<VertexId, usize>,
) -> Result<Labeling, ConstructionError> {
    check_ratio(ratio)?;
    if m == 0 {
        return Err(ConstructionError::InvalidParams("size 0".to_string()));
    }
    let bp = bipartition_of(g)?;
    let mut sizes = BTreeMap::new();
    for v in g.vertices() {
        let size = if bp.x.contains(v) {
            match y_sizes.get(v) {
                Some(&s) if s != m => {
                    return Err(ConstructionError::InvalidParams(format!(
                        "x-side vertex {v} must have size {m}, got {s}"
                    )))
                }
                _ => m,
            }
        } else {
            *y_sizes
                .get(v)
                .ok_or_else(|| ConstructionError::InvalidParams(format!("no size for y-side vertex {v}")))?
        };
        sizes.insert(v.clone(), size);
    }
    let sizes_vec = sizes_for(g, &sizes)?;
    if let Some(v) = y_sizes.keys().find(|v| !g.contains_vertex(v)) {
        return Err(ConstructionError::InvalidParams(format!("size given for unknown vertex {v}")));
    }
    let bases = bases_for(g, None, ratio)?;
    let r = BigUint::from(ratio);
    let s = r.pow(u32::try_from(m).map_err(|_| ConstructionError::InvalidParams("size too large".into()))?);
    let f: Labeling = g
        .vertices()
        .zip(bases.iter().zip(&sizes_vec))
        .map(|(v, (b, &len))| {
            let q = if bp.x.contains(v) { &r } else { &s };
            (v.clone(), geometric_label(b, q, len))
        })
        .collect();

    let report = classify(g, &f);
    self_check(report.valid && report.strong, || "expected a strong labeling".to_string())?;
    let y_all_ge2 = bp.y.iter().all(|v| sizes[v] >= 2);
    if m >= 2 && y_all_ge2 {
        self_check(report.like_geometric == Some(m as u32), || {
            format!("expected like-geometric index {m}, report says {:?}", report.like_geometric)
        })?;
    }
    let y_const: std::collections::BTreeSet<usize> = bp.y.iter().map(|v| sizes[v]).collect();
    if let (1, Some(&n)) = (y_const.len(), y_const.first()) {
        self_check(report.uniform == Some(m * n), || {
            format!("expected uniform edge size {}, report says {:?}", m * n, report.uniform)
        })?;
    }
    Ok(f)
}
