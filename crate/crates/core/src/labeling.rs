//! Product set-labelings: validation and classification.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::graph::{Edge, Graph, Side, VertexId};
use crate::setalgebra::{
    cardinality_bounds, characteristic_exponent, detect_gp, gp_ratio, product_cardinality,
    product_set, quotient_set, GpDescriptor, LabelSet, Rational,
};

/// Assignment of a label set to every vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Labeling {
    assignments: BTreeMap<VertexId, LabelSet>,
}

impl Labeling {
    pub fn new(assignments: BTreeMap<VertexId, LabelSet>) -> Self {
        Labeling { assignments }
    }

    pub fn get(&self, v: &VertexId) -> Option<&LabelSet> {
        self.assignments.get(v)
    }

    pub fn insert(&mut self, v: VertexId, label: LabelSet) -> Option<LabelSet> {
        self.assignments.insert(v, label)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&VertexId, &LabelSet)> {
        self.assignments.iter()
    }

    pub fn len(&self) -> usize {
        self.assignments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignments.is_empty()
    }

    pub fn to_document(&self) -> LabelingDocument {
        LabelingDocument {
            assignments: self
                .assignments
                .iter()
                .map(|(v, s)| (v.clone(), s.to_strings()))
                .collect(),
        }
    }
}

impl FromIterator<(VertexId, LabelSet)> for Labeling {
    fn from_iter<I: IntoIterator<Item = (VertexId, LabelSet)>>(iter: I) -> Self {
        Labeling::new(iter.into_iter().collect())
    }
}

impl Serialize for Labeling {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_document().serialize(serializer)
    }
}

/// Wire form of a labeling; labels are kept as raw strings so that
/// malformed entries can be reported individually.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabelingDocument {
    pub assignments: BTreeMap<VertexId, Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelingViolation {
    #[error("vertex {0} has no label")]
    MissingVertex(VertexId),
    #[error("label assigned to unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("vertices {first} and {second} share the label {label}")]
    DuplicateLabel {
        first: VertexId,
        second: VertexId,
        label: LabelSet,
    },
    #[error("malformed label at {vertex}: {reason}")]
    MalformedLabel { vertex: VertexId, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelingError {
    #[error("invalid labeling: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<LabelingViolation>),
    #[error("vertex {0} is not labeled")]
    Unassigned(VertexId),
    #[error("label of {0} is not a geometric progression")]
    NotGp(VertexId),
    #[error("no characteristic index relates the ratios of {0} and {1}")]
    NoCharacteristicIndex(VertexId, VertexId),
    #[error("characteristic index {k} exceeds label size {size} of {vertex}")]
    IndexExceedsSize { vertex: VertexId, k: u32, size: usize },
    #[error("{0} has the larger common ratio; pass the smaller-ratio endpoint first")]
    WrongOrientation(VertexId, VertexId),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("labeling is not isogeometric")]
    NotIsogeometric,
    #[error("labeling is not like-geometric")]
    NotLikeGeometric,
    #[error("smaller-ratio endpoints do not all lie on one side of the bipartition")]
    MixedOrientation,
}

/// Checks totality, injectivity and that no label is attached to a foreign vertex.
pub fn validate_labeling(g: &Graph, f: &Labeling) -> Result<(), Vec<LabelingViolation>> {
    let mut violations = Vec::new();
    for v in g.vertices() {
        if f.get(v).is_none() {
            violations.push(LabelingViolation::MissingVertex(v.clone()));
        }
    }
    let mut owner: BTreeMap<&LabelSet, &VertexId> = BTreeMap::new();
    for (v, label) in f.iter() {
        if !g.contains_vertex(v) {
            violations.push(LabelingViolation::UnknownVertex(v.clone()));
        }
        if let Some(first) = owner.insert(label, v) {
            violations.push(LabelingViolation::DuplicateLabel {
                first: first.clone(),
                second: v.clone(),
                label: label.clone(),
            });
        }
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

/// Parses and validates a wire-form labeling, collecting every violation.
pub fn validate_document(g: &Graph, doc: &LabelingDocument) -> Result<Labeling, Vec<LabelingViolation>> {
    let mut violations = Vec::new();
    let mut labeling = Labeling::default();
    for (v, raw) in &doc.assignments {
        match LabelSet::parse_strict(raw) {
            Ok(set) => {
                labeling.insert(v.clone(), set);
            }
            Err(e) => violations.push(LabelingViolation::MalformedLabel {
                vertex: v.clone(),
                reason: e.to_string(),
            }),
        }
    }
    if let Err(more) = validate_labeling(g, &labeling) {
        // A malformed label must not also be reported as missing.
        violations.extend(more.into_iter().filter(|m| match m {
            LabelingViolation::MissingVertex(v) => !doc.assignments.contains_key(v),
            _ => true,
        }));
    }
    if violations.is_empty() {
        Ok(labeling)
    } else {
        Err(violations)
    }
}

fn ensure_valid(g: &Graph, f: &Labeling) -> Result<(), LabelingError> {
    validate_labeling(g, f).map_err(LabelingError::Invalid)
}

fn label<'a>(f: &'a Labeling, v: &VertexId) -> Result<&'a LabelSet, LabelingError> {
    f.get(v).ok_or_else(|| LabelingError::Unassigned(v.clone()))
}

/// `f*(uv) = f(u) * f(v)`.
pub fn edge_label(f: &Labeling, u: &VertexId, v: &VertexId) -> Result<LabelSet, LabelingError> {
    Ok(product_set(label(f, u)?, label(f, v)?))
}

/// A single edge attains `|a| |b|`.
pub fn pair_is_strong(a: &LabelSet, b: &LabelSet) -> bool {
    product_cardinality(a, b) == a.len() * b.len()
}

/// The (strict) quotient sets of `a` and `b` share no ratio.
pub fn quotients_disjoint(a: &LabelSet, b: &LabelSet) -> bool {
    quotient_set(a).is_disjoint(&quotient_set(b))
}

fn edge_labels<'a>(g: &'a Graph, f: &'a Labeling) -> impl Iterator<Item = (&'a Edge, &'a LabelSet, &'a LabelSet)> {
    g.edges().map(move |e| {
        let (u, v) = e.endpoints();
        (e, &f.assignments[u], &f.assignments[v])
    })
}

/// True iff no two edges receive the same label.
pub fn is_set_indexer(g: &Graph, f: &Labeling) -> Result<bool, LabelingError> {
    ensure_valid(g, f)?;
    let mut seen = BTreeSet::new();
    Ok(edge_labels(g, f).all(|(_, a, b)| seen.insert(product_set(a, b))))
}

/// The common edge label size, if there is one.
pub fn is_uniform(g: &Graph, f: &Labeling) -> Result<Option<usize>, LabelingError> {
    ensure_valid(g, f)?;
    let sizes: BTreeSet<usize> = edge_labels(g, f).map(|(_, a, b)| product_cardinality(a, b)).collect();
    Ok(if sizes.len() == 1 { sizes.first().copied() } else { None })
}

/// Every edge label attains the upper bound `|f(u)| |f(v)|`.
pub fn is_strong(g: &Graph, f: &Labeling) -> Result<bool, LabelingError> {
    ensure_valid(g, f)?;
    Ok(edge_labels(g, f).all(|(_, a, b)| pair_is_strong(a, b)))
}

/// Strength decided from quotient sets alone: adjacent labels have disjoint quotient sets.
pub fn is_strong_via_quotients(g: &Graph, f: &Labeling) -> Result<bool, LabelingError> {
    ensure_valid(g, f)?;
    Ok(edge_labels(g, f).all(|(_, a, b)| quotients_disjoint(a, b)))
}

/// Every vertex label and every edge label is a geometric progression.
pub fn is_geometric(g: &Graph, f: &Labeling) -> Result<bool, LabelingError> {
    ensure_valid(g, f)?;
    let vertices_gp = f.iter().all(|(_, s)| detect_gp(s).is_some());
    Ok(vertices_gp && edge_labels(g, f).all(|(_, a, b)| detect_gp(&product_set(a, b)).is_some()))
}

fn index_between(du: &GpDescriptor, dv: &GpDescriptor) -> Option<u32> {
    match (du.ratio(), dv.ratio()) {
        (Some(ru), Some(rv)) => {
            let (small, large) = if ru <= rv { (ru, rv) } else { (rv, ru) };
            characteristic_exponent(small, large).expect("progression ratios exceed 1")
        }
        // A singleton endpoint scales the other label without changing its ratio.
        _ => Some(1),
    }
}

/// `k` with `r_large = r_small^k` for the endpoint ratios of `uv`.
pub fn characteristic_index(f: &Labeling, u: &VertexId, v: &VertexId) -> Result<Option<u32>, LabelingError> {
    let du = detect_gp(label(f, u)?).ok_or_else(|| LabelingError::NotGp(u.clone()))?;
    let dv = detect_gp(label(f, v)?).ok_or_else(|| LabelingError::NotGp(v.clone()))?;
    Ok(index_between(&du, &dv))
}

/// Outcome of an isogeometric check that succeeded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CommonRatio {
    Ratio(Rational),
    /// Every label is a singleton, so any ratio fits.
    Unconstrained,
}

impl fmt::Display for CommonRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CommonRatio::Ratio(r) => r.fmt(f),
            CommonRatio::Unconstrained => f.write_str("unconstrained"),
        }
    }
}

impl Serialize for CommonRatio {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// All vertex and edge labels are progressions sharing one ratio.
pub fn is_isogeometric(g: &Graph, f: &Labeling) -> Result<Option<CommonRatio>, LabelingError> {
    ensure_valid(g, f)?;
    let mut ratios = BTreeSet::new();
    let labels = f
        .iter()
        .map(|(_, s)| s.clone())
        .chain(edge_labels(g, f).map(|(_, a, b)| product_set(a, b)));
    for s in labels {
        match detect_gp(&s) {
            None => return Ok(None),
            Some(d) => {
                if let Some(r) = d.ratio() {
                    ratios.insert(r.clone());
                }
            }
        }
        if ratios.len() > 1 {
            return Ok(None);
        }
    }
    Ok(Some(match ratios.pop_first() {
        Some(r) => CommonRatio::Ratio(r),
        None => CommonRatio::Unconstrained,
    }))
}

/// Geometric, with every edge sharing one characteristic index `k > 1`.
pub fn is_like_geometric(g: &Graph, f: &Labeling) -> Result<Option<u32>, LabelingError> {
    if !is_geometric(g, f)? {
        return Ok(None);
    }
    let mut shared = None;
    for e in g.edges() {
        let (u, v) = e.endpoints();
        match characteristic_index(f, u, v)? {
            Some(k) if k > 1 && shared.is_none_or(|s| s == k) => shared = Some(k),
            _ => return Ok(None),
        }
    }
    Ok(shared)
}

/// `|f(u)| + k (|f(v)| - 1)` with `u` the smaller-ratio endpoint.
pub fn predicted_edge_size(f: &Labeling, u: &VertexId, v: &VertexId) -> Result<usize, LabelingError> {
    let (lu, lv) = (label(f, u)?, label(f, v)?);
    let ru = detect_gp(lu).ok_or_else(|| LabelingError::NotGp(u.clone()))?;
    let rv = detect_gp(lv).ok_or_else(|| LabelingError::NotGp(v.clone()))?;
    if let (Some(a), Some(b)) = (ru.ratio(), rv.ratio()) {
        if a > b {
            return Err(LabelingError::WrongOrientation(u.clone(), v.clone()));
        }
    }
    let k = index_between(&ru, &rv).ok_or_else(|| LabelingError::NoCharacteristicIndex(u.clone(), v.clone()))?;
    if k as usize > lu.len() {
        return Err(LabelingError::IndexExceedsSize {
            vertex: u.clone(),
            k,
            size: lu.len(),
        });
    }
    Ok(lu.len() + k as usize * (lv.len() - 1))
}

fn sizes_constant<'a>(f: &Labeling, vs: impl IntoIterator<Item = &'a VertexId>) -> bool {
    vs.into_iter()
        .map(|v| f.assignments[v].len())
        .collect::<BTreeSet<_>>()
        .len()
        <= 1
}

/// For an isogeometric labeling of a connected graph: whether all vertex
/// label sizes agree, or the graph is bipartite with sizes constant on each side.
/// These are exactly the conditions under which the labeling is uniform.
pub fn isogeometric_uniformity(g: &Graph, f: &Labeling) -> Result<bool, LabelingError> {
    if is_isogeometric(g, f)?.is_none() {
        return Err(LabelingError::NotIsogeometric);
    }
    if !g.is_connected() {
        return Err(LabelingError::Disconnected);
    }
    if sizes_constant(f, g.vertices()) {
        return Ok(true);
    }
    Ok(g
        .bipartition()
        .is_some_and(|bp| sizes_constant(f, &bp.x) && sizes_constant(f, &bp.y)))
}

/// For a like-geometric labeling of a connected graph whose smaller-ratio
/// endpoints all sit on one side: whether sizes are constant on each side,
/// which is exactly when the labeling is uniform.
///
/// Without the orientation requirement the condition is not sufficient: on the
/// path `a-b-c` with ratios 2, 4, 16 and sizes 2, 3, 2 both edges have index 2
/// but sizes 6 and 5.
pub fn like_geometric_uniformity(g: &Graph, f: &Labeling) -> Result<bool, LabelingError> {
    if is_like_geometric(g, f)?.is_none() {
        return Err(LabelingError::NotLikeGeometric);
    }
    if !g.is_connected() {
        return Err(LabelingError::Disconnected);
    }
    let bp = g.bipartition().ok_or(LabelingError::MixedOrientation)?;
    let mut small_sides = BTreeSet::new();
    for e in g.edges() {
        let (u, v) = e.endpoints();
        // Like-geometric edges have k > 1, so both ratios exist and differ.
        let ru = gp_ratio(&f.assignments[u]).expect("ratio");
        let rv = gp_ratio(&f.assignments[v]).expect("ratio");
        let small = if ru < rv { u } else { v };
        small_sides.insert(matches!(bp.side_of(small), Some(Side::X)));
    }
    if small_sides.len() > 1 {
        return Err(LabelingError::MixedOrientation);
    }
    Ok(sizes_constant(f, &bp.x) && sizes_constant(f, &bp.y))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeClassification {
    pub edge: Edge,
    pub label_size: usize,
    pub lower_bound: usize,
    pub upper_bound: usize,
    pub is_gp: bool,
    pub characteristic_index: Option<u32>,
}

/// Classification of one labeling against every labeling class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub valid: bool,
    pub set_indexer: bool,
    pub uniform: Option<usize>,
    pub strong: bool,
    pub strong_via_quotients: bool,
    pub geometric: bool,
    pub isogeometric: Option<CommonRatio>,
    pub like_geometric: Option<u32>,
    pub connected: bool,
    pub per_edge: Vec<EdgeClassification>,
    pub diagnostics: Vec<String>,
}

impl ClassificationReport {
    fn invalid(g: &Graph, violations: Vec<LabelingViolation>) -> Self {
        ClassificationReport {
            valid: false,
            set_indexer: false,
            uniform: None,
            strong: false,
            strong_via_quotients: false,
            geometric: false,
            isogeometric: None,
            like_geometric: None,
            connected: g.is_connected(),
            per_edge: Vec::new(),
            diagnostics: violations.iter().map(|v| v.to_string()).collect(),
        }
    }

    /// Cross-field invariants; returns a description of each that fails.
    pub fn invariant_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.isogeometric.is_some() && !self.geometric {
            out.push("isogeometric without geometric".to_string());
        }
        if let Some(k) = self.like_geometric {
            if !self.geometric || k <= 1 {
                out.push(format!("like_geometric {k} inconsistent with geometric flag"));
            }
            if self.per_edge.iter().any(|e| e.characteristic_index != Some(k)) {
                out.push(format!("like_geometric {k} not shared by every edge"));
            }
        }
        if self.strong && self.per_edge.iter().any(|e| e.label_size != e.upper_bound) {
            out.push("strong but some edge misses its upper bound".to_string());
        }
        for e in &self.per_edge {
            if e.label_size < e.lower_bound || e.label_size > e.upper_bound {
                out.push(format!("edge {} violates the cardinality bounds", e.edge));
            }
        }
        out
    }
}

fn classify_edge(f: &Labeling, e: &Edge, diagnostics: &mut Vec<String>) -> EdgeClassification {
    let (u, v) = e.endpoints();
    let (a, b) = (&f.assignments[u], &f.assignments[v]);
    let label = product_set(a, b);
    let (lower_bound, upper_bound) = cardinality_bounds(a, b);
    let is_gp = detect_gp(&label).is_some();
    let characteristic_index = characteristic_index(f, u, v).ok().flatten();
    if !is_gp {
        if let (Some(k), Some(ru), Some(rv)) = (characteristic_index, gp_ratio(a), gp_ratio(b)) {
            let (small, size) = if ru <= rv { (u, a.len()) } else { (v, b.len()) };
            diagnostics.push(format!(
                "edge {e}: characteristic index {k} exceeds label size {size} of smaller-ratio endpoint {small}"
            ));
        }
    }
    EdgeClassification {
        edge: e.clone(),
        label_size: label.len(),
        lower_bound,
        upper_bound,
        is_gp,
        characteristic_index,
    }
}

/// Full classification. Validation failures become diagnostics with every flag cleared.
pub fn classify(g: &Graph, f: &Labeling) -> ClassificationReport {
    if let Err(violations) = validate_labeling(g, f) {
        return ClassificationReport::invalid(g, violations);
    }
    let ok = |r: Result<bool, LabelingError>| r.expect("labeling validated");
    let mut diagnostics = Vec::new();
    let per_edge = g.edges().map(|e| classify_edge(f, e, &mut diagnostics)).collect();
    let strong = ok(is_strong(g, f));
    let strong_via_quotients = ok(is_strong_via_quotients(g, f));
    if strong != strong_via_quotients {
        diagnostics.push(format!(
            "internal consistency failure: product-set strength {strong} disagrees with quotient-set strength {strong_via_quotients}"
        ));
    }
    let connected = g.is_connected();
    if !connected {
        diagnostics.push(
            "graph is disconnected; the size-uniformity characterizations assume a connected graph"
                .to_string(),
        );
    }
    ClassificationReport {
        valid: true,
        set_indexer: ok(is_set_indexer(g, f)),
        uniform: is_uniform(g, f).expect("labeling validated"),
        strong,
        strong_via_quotients,
        geometric: ok(is_geometric(g, f)),
        isogeometric: is_isogeometric(g, f).expect("labeling validated"),
        like_geometric: is_like_geometric(g, f).expect("labeling validated"),
        connected,
        per_edge,
        diagnostics,
    }
}

/// Classifies a wire-form labeling, reporting malformed entries as diagnostics.
pub fn classify_document(g: &Graph, doc: &LabelingDocument) -> ClassificationReport {
    match validate_document(g, doc) {
        Ok(f) => classify(g, &f),
        Err(violations) => ClassificationReport::invalid(g, violations),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, families};

    fn set(v: &[u64]) -> LabelSet {
        LabelSet::from_u64s(v).unwrap()
    }

    fn lab(pairs: &[(&str, &[u64])]) -> Labeling {
        pairs.iter().map(|(v, s)| (VertexId::from(*v), set(s))).collect()
    }

    fn k2() -> Graph {
        families::path(2)
    }

    fn p3() -> Graph {
        families::path(3)
    }

    fn id(s: &str) -> VertexId {
        s.into()
    }

    /// The like-geometric C4 labeling with ratios 2 and 4 alternating.
    fn c4_like() -> (Graph, Labeling) {
        let g = build_graph(
            vec![id("v1"), id("v2"), id("v3"), id("v4")],
            vec![(id("v1"), id("v2")), (id("v2"), id("v3")), (id("v3"), id("v4")), (id("v4"), id("v1"))],
        )
        .unwrap();
        let f = lab(&[("v1", &[1, 2]), ("v2", &[1, 4]), ("v3", &[3, 6]), ("v4", &[5, 20])]);
        (g, f)
    }

    fn k3_iso() -> (Graph, Labeling) {
        (families::complete(3), lab(&[("a", &[1, 2]), ("b", &[3, 6]), ("c", &[5, 10])]))
    }

    #[test]
    fn validation_examples() {
        assert_eq!(validate_labeling(&k2(), &lab(&[("a", &[1, 2]), ("b", &[3, 6])])), Ok(()));
        assert_eq!(
            validate_labeling(&k2(), &lab(&[("a", &[1, 2]), ("b", &[1, 2])])),
            Err(vec![LabelingViolation::DuplicateLabel {
                first: id("a"),
                second: id("b"),
                label: set(&[1, 2])
            }])
        );
        assert_eq!(
            validate_labeling(&k2(), &lab(&[("a", &[1, 2])])),
            Err(vec![LabelingViolation::MissingVertex(id("b"))])
        );
        assert_eq!(
            validate_labeling(&k2(), &lab(&[("a", &[1]), ("b", &[2]), ("z", &[3])])),
            Err(vec![LabelingViolation::UnknownVertex(id("z"))])
        );
    }

    #[test]
    fn document_validation_reports_malformed_labels() {
        let doc: LabelingDocument =
            serde_json::from_str(r#"{"assignments":{"a":["2","1"],"b":["0"],"c":["3"]}}"#).unwrap();
        let errs = validate_document(&p3(), &doc).unwrap_err();
        assert_eq!(errs.len(), 2, "{errs:?}");
        assert!(errs.iter().all(|e| matches!(e, LabelingViolation::MalformedLabel { .. })));
    }

    #[test]
    fn edge_label_examples() {
        let f = lab(&[("u", &[1, 2]), ("v", &[1, 4]), ("w", &[1]), ("x", &[3, 6]), ("y", &[2, 4])]);
        assert_eq!(edge_label(&f, &id("u"), &id("v")).unwrap(), set(&[1, 2, 4, 8]));
        assert_eq!(edge_label(&f, &id("w"), &id("x")).unwrap(), set(&[3, 6]));
        assert_eq!(edge_label(&f, &id("y"), &id("x")).unwrap(), set(&[6, 12, 24]));
        assert_eq!(edge_label(&f, &id("u"), &id("q")), Err(LabelingError::Unassigned(id("q"))));
    }

    #[test]
    fn set_indexer_examples() {
        assert!(is_set_indexer(&k2(), &lab(&[("a", &[1, 2]), ("b", &[3, 6])])).unwrap());
        assert!(is_set_indexer(&p3(), &lab(&[("a", &[2]), ("b", &[3]), ("c", &[2, 3])])).unwrap());
        assert!(matches!(
            is_set_indexer(&p3(), &lab(&[("a", &[2]), ("b", &[5]), ("c", &[2])])),
            Err(LabelingError::Invalid(_))
        ));
        // {1,4}*{1,2} = {1,2,4}*{1,2} = {1,2,4,8}
        assert!(!is_set_indexer(&p3(), &lab(&[("a", &[1, 4]), ("b", &[1, 2]), ("c", &[1, 2, 4])])).unwrap());
    }

    #[test]
    fn uniform_examples() {
        let (g, f) = c4_like();
        assert_eq!(is_uniform(&g, &f).unwrap(), Some(4));
        assert_eq!(is_uniform(&k2(), &lab(&[("a", &[1, 2]), ("b", &[3, 6])])).unwrap(), Some(3));
        assert_eq!(
            is_uniform(&p3(), &lab(&[("a", &[1]), ("b", &[2, 3]), ("c", &[4, 5, 7])])).unwrap(),
            None
        );
    }

    #[test]
    fn strong_examples_both_routes() {
        let cases: [(&[u64], &[u64], bool); 3] =
            [(&[2, 3], &[5, 7], true), (&[2, 4], &[3, 6], false), (&[1], &[9], true)];
        for (a, b, want) in cases {
            let f = lab(&[("a", a), ("b", b)]);
            assert_eq!(is_strong(&k2(), &f).unwrap(), want, "{a:?} {b:?}");
            assert_eq!(is_strong_via_quotients(&k2(), &f).unwrap(), want, "{a:?} {b:?}");
        }
    }

    #[test]
    fn geometric_examples() {
        assert!(is_geometric(&k2(), &lab(&[("a", &[2, 4]), ("b", &[3, 12, 48])])).unwrap());
        assert!(!is_geometric(&k2(), &lab(&[("a", &[2, 4]), ("b", &[3, 24])])).unwrap());
        assert!(is_geometric(&k2(), &lab(&[("a", &[5]), ("b", &[7])])).unwrap());
        assert_eq!(
            edge_label(&lab(&[("a", &[2, 4]), ("b", &[3, 12, 48])]), &id("a"), &id("b")).unwrap(),
            set(&[6, 12, 24, 48, 96, 192])
        );
    }

    #[test]
    fn characteristic_index_examples() {
        let f = lab(&[("u", &[2, 4]), ("v", &[3, 12, 48]), ("w", &[3, 6]), ("x", &[5, 60]), ("y", &[2, 4, 7])]);
        assert_eq!(characteristic_index(&f, &id("u"), &id("v")).unwrap(), Some(2));
        assert_eq!(characteristic_index(&f, &id("v"), &id("u")).unwrap(), Some(2));
        assert_eq!(characteristic_index(&f, &id("u"), &id("w")).unwrap(), Some(1));
        assert_eq!(characteristic_index(&f, &id("u"), &id("x")).unwrap(), None);
        assert_eq!(characteristic_index(&f, &id("u"), &id("y")), Err(LabelingError::NotGp(id("y"))));
    }

    #[test]
    fn isogeometric_examples() {
        let (g, f) = k3_iso();
        assert_eq!(is_isogeometric(&g, &f).unwrap(), Some(CommonRatio::Ratio("2".parse().unwrap())));
        assert_eq!(is_isogeometric(&k2(), &lab(&[("a", &[2, 4]), ("b", &[3, 12, 48])])).unwrap(), None);
        assert_eq!(
            is_isogeometric(&k2(), &lab(&[("a", &[1, 2]), ("b", &[3, 6])])).unwrap(),
            Some(CommonRatio::Ratio("2".parse().unwrap()))
        );
        assert_eq!(
            is_isogeometric(&k2(), &lab(&[("a", &[1]), ("b", &[3])])).unwrap(),
            Some(CommonRatio::Unconstrained)
        );
    }

    #[test]
    fn like_geometric_examples() {
        let (g, f) = c4_like();
        assert_eq!(is_like_geometric(&g, &f).unwrap(), Some(2));
        let (g, f) = k3_iso();
        assert_eq!(is_like_geometric(&g, &f).unwrap(), None);
        assert_eq!(is_like_geometric(&k2(), &lab(&[("a", &[2, 4]), ("b", &[5, 60])])).unwrap(), None);
    }

    #[test]
    fn predicted_edge_size_examples() {
        let f = lab(&[
            ("u", &[1, 2, 4, 8]),
            ("v", &[3, 12]),
            ("p", &[1, 2]),
            ("q", &[1, 4]),
            ("s", &[2, 4]),
            ("t", &[3, 6]),
        ]);
        assert_eq!(predicted_edge_size(&f, &id("u"), &id("v")).unwrap(), 6);
        assert_eq!(edge_label(&f, &id("u"), &id("v")).unwrap(), set(&[3, 6, 12, 24, 48, 96]));
        assert_eq!(predicted_edge_size(&f, &id("p"), &id("q")).unwrap(), 4);
        assert_eq!(predicted_edge_size(&f, &id("s"), &id("t")).unwrap(), 3);
    }

    #[test]
    fn predicted_edge_size_errors() {
        let f = lab(&[("a", &[2, 4]), ("b", &[3, 24]), ("c", &[5, 60]), ("d", &[1, 4])]);
        assert_eq!(
            predicted_edge_size(&f, &id("a"), &id("b")),
            Err(LabelingError::IndexExceedsSize { vertex: id("a"), k: 3, size: 2 })
        );
        assert_eq!(
            predicted_edge_size(&f, &id("a"), &id("c")),
            Err(LabelingError::NoCharacteristicIndex(id("a"), id("c")))
        );
        assert_eq!(
            predicted_edge_size(&f, &id("d"), &id("a")),
            Err(LabelingError::WrongOrientation(id("d"), id("a")))
        );
    }

    #[test]
    fn classify_like_geometric_c4() {
        let (g, f) = c4_like();
        let r = classify(&g, &f);
        assert!(r.valid && r.strong && r.strong_via_quotients && r.geometric);
        assert_eq!(r.uniform, Some(4));
        assert_eq!(r.like_geometric, Some(2));
        assert_eq!(r.isogeometric, None);
        assert!(r.invariant_violations().is_empty());
    }

    #[test]
    fn classify_isogeometric_k3() {
        let (g, f) = k3_iso();
        let r = classify(&g, &f);
        assert!(r.valid && r.geometric && !r.strong);
        assert_eq!(r.isogeometric, Some(CommonRatio::Ratio("2".parse().unwrap())));
        assert_eq!(r.uniform, Some(3));
        assert!(r.per_edge.iter().all(|e| e.characteristic_index == Some(1)));
    }

    #[test]
    fn classify_invalid_input() {
        let r = classify(&k2(), &lab(&[("a", &[1, 2]), ("b", &[1, 2])]));
        assert!(!r.valid && !r.strong && !r.geometric);
        assert!(r.diagnostics[0].contains('a') && r.diagnostics[0].contains('b'));
    }

    #[test]
    fn classify_explains_non_gp_edges() {
        let r = classify(&k2(), &lab(&[("a", &[2, 4]), ("b", &[3, 24])]));
        assert!(!r.geometric);
        assert_eq!(r.per_edge[0].characteristic_index, Some(3));
        assert!(r.diagnostics.iter().any(|d| d.contains("exceeds label size 2")));
    }

    #[test]
    fn disconnected_graph_is_flagged() {
        let g = build_graph(
            vec![id("a"), id("b"), id("c"), id("d")],
            vec![(id("a"), id("b")), (id("c"), id("d"))],
        )
        .unwrap();
        let f = lab(&[("a", &[1, 2]), ("b", &[3, 6]), ("c", &[5, 10, 20]), ("d", &[7])]);
        let r = classify(&g, &f);
        assert!(!r.connected);
        assert!(r.diagnostics.iter().any(|d| d.contains("disconnected")));
        assert_eq!(isogeometric_uniformity(&g, &f), Err(LabelingError::Disconnected));
    }

    #[test]
    fn isogeometric_uniformity_matches_uniform_flag() {
        // bipartite sides sized 2 and 3
        let g = families::cycle(4);
        let f = lab(&[("a", &[1, 2]), ("b", &[3, 6, 12]), ("c", &[5, 10]), ("d", &[7, 14, 28])]);
        assert!(isogeometric_uniformity(&g, &f).unwrap());
        assert_eq!(is_uniform(&g, &f).unwrap(), Some(4));
        // odd cycle with unequal sizes
        let g = families::cycle(3);
        let f = lab(&[("a", &[1, 2]), ("b", &[3, 6, 12]), ("c", &[5, 10])]);
        assert!(!isogeometric_uniformity(&g, &f).unwrap());
        assert_eq!(is_uniform(&g, &f).unwrap(), None);
    }

    #[test]
    fn like_geometric_uniformity_needs_oriented_sides() {
        // ratios 2, 4, 16 along a path: b is the larger end of a-b but the smaller end of b-c
        let f = lab(&[("a", &[1, 2]), ("b", &[3, 12, 48]), ("c", &[5, 80])]);
        let g = p3();
        assert_eq!(is_like_geometric(&g, &f).unwrap(), Some(2));
        assert_eq!(is_uniform(&g, &f).unwrap(), None);
        assert_eq!(like_geometric_uniformity(&g, &f), Err(LabelingError::MixedOrientation));

        let (g, f) = c4_like();
        assert!(like_geometric_uniformity(&g, &f).unwrap());
    }

    #[test]
    fn report_json_field_names() {
        let (g, f) = c4_like();
        let v = serde_json::to_value(classify(&g, &f)).unwrap();
        for key in ["valid", "set_indexer", "uniform", "strong", "geometric", "isogeometric", "like_geometric", "per_edge", "diagnostics"] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["isogeometric"], serde_json::Value::Null);
        assert_eq!(v["per_edge"][0]["edge"], serde_json::json!(["v1", "v2"]));
        let (g, f) = k3_iso();
        assert_eq!(serde_json::to_value(classify(&g, &f)).unwrap()["isogeometric"], "2/1");
    }
}
