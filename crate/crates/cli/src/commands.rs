use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use psl_core::constructors::{
    construct_isogeometric, construct_like_geometric, construct_strong_like_geometric,
    construct_uniform_isogeometric, ConstructionError, ConstructionParams,
};
use psl_core::graph::{Graph, GraphDocument, VertexId};
use psl_core::labeling::{classify_document, edge_label, validate_document, LabelingDocument};
use psl_core::oracle::{self, defaults, OracleVerdict, SearchBudget, Verdict};
use psl_core::setalgebra::LabelSet;
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Value};

use crate::{CheckArgs, ConstructArgs, Scheme, TheoremId, VerifyArgs};

/// What a command produced: exit code 0 or 1, the payload, and notes for stderr.
pub struct Outcome {
    pub code: u8,
    pub payload: Value,
    pub notes: Vec<String>,
}

/// Bad input or parameters; exits with 2.
pub struct UsageError(pub String);

type CmdResult = Result<Outcome, UsageError>;

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types always serialize")
}

fn read_json<T: DeserializeOwned>(path: &Path, what: &str) -> Result<T, UsageError> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("cannot read {what} {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| usage(format!("malformed {what} {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, UsageError> {
    let doc: GraphDocument = read_json(path, "graph")?;
    Graph::from_document(doc).map_err(|e| usage(format!("{}: {e}", path.display())))
}

pub fn verify(a: &VerifyArgs) -> CmdResult {
    let g = load_graph(&a.graph)?;
    let doc: LabelingDocument = read_json(&a.labeling, "labeling")?;
    let report = classify_document(&g, &doc);
    Ok(Outcome {
        code: if report.valid { 0 } else { 1 },
        payload: to_value(&report),
        notes: report.diagnostics.clone(),
    })
}

pub fn edge_labels(a: &VerifyArgs) -> CmdResult {
    let g = load_graph(&a.graph)?;
    let doc: LabelingDocument = read_json(&a.labeling, "labeling")?;
    let f = match validate_document(&g, &doc) {
        Ok(f) => f,
        Err(violations) => {
            let notes: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
            return Ok(Outcome {
                code: 1,
                payload: json!({ "valid": false, "diagnostics": notes }),
                notes,
            });
        }
    };
    let labels: BTreeMap<String, LabelSet> = g
        .edges()
        .map(|e| {
            let (u, v) = e.endpoints();
            let label = edge_label(&f, u, v).expect("validated labeling covers every vertex");
            (e.to_string(), label)
        })
        .collect();
    Ok(Outcome {
        code: 0,
        payload: to_value(&labels),
        notes: Vec::new(),
    })
}

pub fn construct(a: &ConstructArgs) -> CmdResult {
    let g = load_graph(&a.graph)?;
    if a.k.is_some() && a.scheme != Scheme::LikeGeometric {
        return Err(usage("--k applies only to --scheme like-geometric"));
    }
    if a.size_y.is_some() && !matches!(a.scheme, Scheme::Uniform | Scheme::Strong) {
        return Err(usage("--size-y applies only to --scheme uniform and strong"));
    }
    if a.sizes_file.is_some() && a.scheme == Scheme::Uniform {
        return Err(usage("--sizes-file does not apply to --scheme uniform"));
    }
    if a.size == 0 || a.size_y == Some(0) {
        return Err(usage("label sizes must be positive"));
    }
    let file_sizes: Option<BTreeMap<VertexId, usize>> =
        a.sizes_file.as_deref().map(|p| read_json(p, "sizes file")).transpose()?;
    let sizes = || {
        file_sizes
            .clone()
            .unwrap_or_else(|| g.vertices().map(|v| (v.clone(), a.size)).collect())
    };
    let params = |char_index| ConstructionParams {
        ratio: a.ratio,
        sizes: sizes(),
        bases: None,
        char_index,
    };

    let result = match a.scheme {
        Scheme::Isogeometric => construct_isogeometric(&g, &params(None)),
        Scheme::Uniform => construct_uniform_isogeometric(&g, a.size, a.size_y, a.ratio),
        Scheme::LikeGeometric => construct_like_geometric(&g, &params(a.k)),
        Scheme::Strong => {
            let y_sizes = match (&file_sizes, a.size_y, g.bipartition()) {
                (Some(s), _, _) => s.clone(),
                (None, n, Some(bp)) => bp.y.iter().map(|v| (v.clone(), n.unwrap_or(a.size))).collect(),
                // Not bipartite; the constructor reports the odd cycle.
                (None, _, None) => BTreeMap::new(),
            };
            construct_strong_like_geometric(&g, a.ratio, a.size, &y_sizes)
        }
    };
    match result {
        Ok(f) => Ok(Outcome {
            code: 0,
            payload: to_value(&f),
            notes: Vec::new(),
        }),
        Err(ConstructionError::NotBipartite(cycle)) => Ok(Outcome {
            code: 1,
            payload: json!({ "error": "not_bipartite", "odd_cycle": cycle.0 }),
            notes: vec![format!("graph is not bipartite; odd cycle {cycle}")],
        }),
        Err(ConstructionError::InvalidParams(msg)) => Err(usage(msg)),
        Err(e @ ConstructionError::SelfCheck(_)) => Ok(Outcome {
            code: 1,
            payload: json!({ "error": "self_check", "detail": e.to_string() }),
            notes: vec![e.to_string()],
        }),
    }
}

fn budget(a: &CheckArgs, base: SearchBudget) -> Result<SearchBudget, UsageError> {
    let b = SearchBudget {
        universe_max: a.universe.unwrap_or(base.universe_max),
        min_set_size: a.min_size.unwrap_or(base.min_set_size),
        max_set_size: a.max_size.unwrap_or(base.max_set_size),
        max_samples: a.samples.unwrap_or(base.max_samples),
        seed: a.seed.unwrap_or(base.seed),
    };
    b.validate().map_err(usage)?;
    Ok(b)
}

fn ratio_arg(r: u64) -> Result<u64, UsageError> {
    if r < 2 {
        return Err(usage(format!("ratio must be at least 2, got {r}")));
    }
    Ok(r)
}

fn required_graph(a: &CheckArgs) -> Result<Graph, UsageError> {
    let path = a.graph.as_deref().ok_or_else(|| usage("this check needs --graph"))?;
    load_graph(path)
}

pub fn check_theorem(a: &CheckArgs) -> CmdResult {
    let verdict: OracleVerdict = match a.id {
        TheoremId::Thm1 => oracle::check_thm1(&budget(a, defaults::THM1)?),
        TheoremId::Thm2 => oracle::check_thm2(&budget(a, defaults::THM2)?),
        TheoremId::Thm3 => {
            let b = budget(a, SearchBudget { seed: defaults::THM3_SEED, ..defaults::THM3 })?;
            oracle::check_thm3(&b, &required_graph(a)?)
        }
        TheoremId::Prop3 => oracle::check_prop3(&budget(a, defaults::PROP3)?),
        TheoremId::Geomchar | TheoremId::Thm4 => {
            let ratios = match a.ratio {
                Some(r) => vec![ratio_arg(r)?],
                None => defaults::GEOM_RATIOS.to_vec(),
            };
            let m = a.max_size.unwrap_or(defaults::GEOM_M_MAX);
            let n = a.max_size.unwrap_or(defaults::GEOM_N_MAX);
            let k = a.k.unwrap_or(defaults::GEOM_K_MAX);
            if m == 0 || k == 0 {
                return Err(usage("--max-size and --k must be positive"));
            }
            if a.id == TheoremId::Thm4 {
                oracle::check_thm4(&ratios, m, n, k)
            } else {
                oracle::check_geometric_characterization(&ratios, m, n, k)
            }
        }
        TheoremId::Thm5 => {
            let g = required_graph(a)?;
            let base = ratio_arg(a.ratio.unwrap_or(defaults::LIKE_GEOM_BASE))?;
            let exp = a.exp_max.unwrap_or(defaults::LIKE_GEOM_EXP_MAX);
            let size = a.size_max.unwrap_or(defaults::LIKE_GEOM_SIZE_MAX);
            if exp == 0 || size == 0 {
                return Err(usage("--exp-max and --size-max must be positive"));
            }
            oracle::search_like_geometric(&g, base, exp, size, defaults::LIKE_GEOM_LIMIT)
        }
    };
    let mut notes = Vec::new();
    match verdict.verdict {
        Verdict::Pass => {}
        Verdict::Fail => notes.push(format!("{} failed after {} cases", verdict.theorem_id, verdict.checked)),
        Verdict::Inconclusive => notes.push(format!("{} inconclusive: {}", verdict.theorem_id, verdict.bounds)),
    }
    Ok(Outcome {
        code: if verdict.passed() { 0 } else { 1 },
        payload: verdict.to_json(a.timing),
        notes,
    })
}
