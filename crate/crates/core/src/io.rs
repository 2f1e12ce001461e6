//! graph6 text, JSON forms of graphs, broadcasts, results and certificates.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::broadcast::Broadcast;
use crate::constructions::{build_on, CertificateSpec};
use crate::error::{Error, Result};
use crate::families::generate;
use crate::graph::{distances, Graph};
use crate::solver::ParameterResult;

fn g6_err(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.strip_suffix('\n').unwrap_or(text);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(g6_err(format!("byte {b} outside 63..=126")));
    }
    let (n, body) = match bytes {
        [] => return Err(g6_err("empty input")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(g6_err("truncated 8-byte header"));
            }
            (decode_bits(&rest[..6]), &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(g6_err("truncated 4-byte header"));
            }
            (decode_bits(&rest[..3]), &rest[3..])
        }
        [b, rest @ ..] => ((b - 63) as usize, rest),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    if body.len() < expected {
        return Err(g6_err(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    if body.len() > expected {
        return Err(g6_err("trailing bytes after adjacency data"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if k % 6 != 0 && (body[k / 6] - 63) & ((1 << (6 - k % 6)) - 1) != 0 {
        return Err(g6_err("nonzero padding bits"));
    }
    Graph::from_edges(n, &edges)
}

fn decode_bits(chunk: &[u8]) -> usize {
    chunk.iter().fold(0, |acc, &b| acc << 6 | (b - 63) as usize)
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

pub fn graph_to_json(g: &Graph) -> String {
    let repr = GraphJson {
        n: g.n(),
        edges: g.edges().collect(),
        labels: g.labels().map(<[String]>::to_vec),
    };
    serde_json::to_string(&repr).expect("graph serializes")
}

pub fn graph_from_json(text: &str) -> Result<Graph> {
    let repr: GraphJson = serde_json::from_str(text)?;
    let g = Graph::from_edges(repr.n, &repr.edges)?;
    match repr.labels {
        Some(labels) => g.with_labels(labels),
        None => Ok(g),
    }
}

/// `{"by_label": {label: strength}}`, listing broadcasting vertices only.
pub fn broadcast_by_label(f: &Broadcast, g: &Graph) -> Result<Value> {
    if f.len() != g.n() {
        return Err(Error::LengthMismatch {
            left: f.len(),
            right: g.n(),
        });
    }
    let map: BTreeMap<String, u32> = f
        .broadcasters()
        .into_iter()
        .map(|v| (g.label(v), f.strength(v)))
        .collect();
    Ok(json!({ "by_label": map }))
}

/// Accepts either `{"strengths": [...]}` or `{"by_label": {...}}`.
pub fn broadcast_from_value(value: &Value, g: &Graph) -> Result<Broadcast> {
    if let Some(map) = value.get("by_label").and_then(Value::as_object) {
        let mut strengths = vec![0u32; g.n()];
        for (label, s) in map {
            let v = g
                .index_of(label)
                .ok_or_else(|| Error::InvalidBroadcast(format!("unknown vertex `{label}`")))?;
            strengths[v] = s
                .as_u64()
                .and_then(|s| u32::try_from(s).ok())
                .ok_or_else(|| Error::InvalidBroadcast(format!("bad strength for `{label}`")))?;
        }
        return Ok(Broadcast::new(strengths));
    }
    let f: Broadcast = serde_json::from_value(value.clone())?;
    if f.len() != g.n() {
        return Err(Error::LengthMismatch {
            left: f.len(),
            right: g.n(),
        });
    }
    Ok(f)
}

fn normalized(r: &ParameterResult) -> ParameterResult {
    let mut r = r.clone();
    if r.witness.is_zero() {
        r.optimal = false;
    }
    r
}

/// Serializes a result with the witness as a strength vector. An all-zero
/// witness is never reported as optimal.
pub fn serialize_result(r: &ParameterResult) -> String {
    serde_json::to_string(&normalized(r)).expect("result serializes")
}

/// As [`serialize_result`], with the witness keyed by vertex label.
pub fn serialize_result_labelled(r: &ParameterResult, g: &Graph) -> Result<String> {
    let r = normalized(r);
    let mut v = serde_json::to_value(&r)?;
    v["witness"] = broadcast_by_label(&r.witness, g)?;
    Ok(serde_json::to_string(&v)?)
}

/// Parses either serialized form; `g` is needed only for the labelled one.
pub fn parse_result(text: &str, g: Option<&Graph>) -> Result<ParameterResult> {
    let mut v: Value = serde_json::from_str(text)?;
    if v["witness"].get("by_label").is_some() {
        let g = g.ok_or_else(|| Error::Json("labelled witness needs the graph".into()))?;
        let f = broadcast_from_value(&v["witness"], g)?;
        v["witness"] = serde_json::to_value(&f)?;
    }
    let r: ParameterResult = serde_json::from_value(v)?;
    Ok(r)
}

/// `{"certificate": name, "family": spec, "by_label": {...}}`.
pub fn export_certificate(spec: &CertificateSpec, f: &Broadcast, g: &Graph) -> Result<String> {
    let mut v = serde_json::to_value(spec)?;
    v["by_label"] = broadcast_by_label(f, g)?["by_label"].clone();
    Ok(serde_json::to_string(&v)?)
}

/// Parses an exported certificate and re-validates it against the
/// construction on a freshly generated instance.
pub fn import_certificate(text: &str) -> Result<(CertificateSpec, Broadcast)> {
    let v: Value = serde_json::from_str(text)?;
    let spec = CertificateSpec {
        name: serde_json::from_value(v["certificate"].clone())?,
        family: serde_json::from_value(v["family"].clone())?,
    };
    let g = generate(&spec.family)?;
    let f = broadcast_from_value(&v, &g)?;
    let d = distances(&g);
    let expected = build_on(&spec, &g, &d)?;
    if f != expected {
        return Err(Error::CertificateRejected {
            name: spec.name.to_string(),
            reason: "broadcast differs from the construction".into(),
        });
    }
    Ok((spec, f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::broadcast::ParameterKind;
    use crate::families::FamilySpec;

    #[test]
    fn small_graph6_cases() {
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!(k2.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        let k3 = parse_graph6("Bw").unwrap();
        assert_eq!(k3.edge_count(), 3);
        assert_eq!(write_graph6(&k3), "Bw");
        assert_eq!(write_graph6(&Graph::empty(1)), "@");
        assert_eq!(parse_graph6("@").unwrap().n(), 1);
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(parse_graph6(""), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("B"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("Bww"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("B\x7f"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("A "), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("~?"), Err(Error::Graph6(_))));
        // K_2 with a padding bit set.
        assert!(matches!(parse_graph6("A`"), Err(Error::Graph6(_))));
    }

    #[test]
    fn result_forms() {
        let g = generate(&FamilySpec::Path(4)).unwrap();
        let r = crate::solver::solve(
            &g,
            ParameterKind::GammaUpper,
            &crate::solver::SolveOptions::default().with_threads(1),
        )
        .unwrap();
        let text = serialize_result(&r);
        assert!(text
            .starts_with(r#"{"kind":"Gamma_b","value":3,"optimal":true,"witness":{"strengths":["#));
        assert_eq!(parse_result(&text, None).unwrap(), r);
        let labelled = serialize_result_labelled(&r, &g).unwrap();
        assert!(labelled.contains("by_label"));
        assert_eq!(parse_result(&labelled, Some(&g)).unwrap(), r);
        assert!(parse_result(&labelled, None).is_err());
    }

    #[test]
    fn empty_incumbent_is_not_optimal() {
        let r = ParameterResult {
            kind: ParameterKind::AlphaBn,
            value: 0,
            optimal: true,
            witness: Broadcast::zeros(3),
            nodes_explored: 0,
            elapsed_ms: 0,
        };
        assert!(!parse_result(&serialize_result(&r), None).unwrap().optimal);
    }

    #[test]
    fn graph_json_round_trip() {
        let g = generate(&FamilySpec::Spider(vec![1, 2, 2])).unwrap();
        let back = graph_from_json(&graph_to_json(&g)).unwrap();
        assert_eq!(back, g);
    }
}
