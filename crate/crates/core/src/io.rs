//! JSON documents and DOT export.
//!
//! Modules are addressed by their dimension-vector keys (`"d1.d2.….dn"`);
//! every document carries `schemaVersion`.

use serde::{Deserialize, Serialize};

use crate::catalog::Catalog;
use crate::census::{CensusReport, ClusterCensus};
use crate::cluster::{CompatibleTuple, Leveled, MExcSequence};
use crate::error::{Error, Result};
use crate::sequence::{classify, ExceptionalSequence, SupportHasse};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ModuleRecord {
    pub key: String,
    /// 1-based vertices.
    pub support: Vec<usize>,
    pub projective: bool,
    pub injective: bool,
    pub simple: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CatalogDoc {
    pub schema_version: u32,
    pub quiver: String,
    pub modules: Vec<ModuleRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TermRecord {
    pub key: String,
    pub rel_proj: bool,
    pub rel_inj: bool,
    pub root: bool,
}

/// A classified exceptional sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SequenceDoc {
    pub schema_version: u32,
    pub quiver: String,
    pub terms: Vec<TermRecord>,
}

/// One line of an enumeration stream.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SequenceLine {
    pub schema_version: u32,
    pub keys: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeveledRecord {
    pub key: String,
    pub level: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TupleKind {
    Cluster,
    MExceptional,
}

/// A compatible tuple or an m-exceptional sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TupleDoc {
    pub schema_version: u32,
    pub quiver: String,
    pub kind: TupleKind,
    pub m: u32,
    pub objects: Vec<LeveledRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PositionRecord {
    pub position: usize,
    pub rel_proj: u64,
    pub rel_inj: u64,
    pub rpi: u64,
    pub rpi_probability: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SetRecord {
    pub positions: Vec<usize>,
    pub count: u64,
    pub probability: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ClusterRecord {
    pub m: u32,
    pub clusters: u64,
    pub positive_clusters: u64,
    pub ordered_tuples: u64,
    pub m_sequences: u64,
    pub projectively_signed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CensusDoc {
    pub schema_version: u32,
    pub quiver: String,
    pub dynkin: String,
    pub coxeter_number: u64,
    pub total: u64,
    pub positions: Vec<PositionRecord>,
    pub rpi_sets: Vec<SetRecord>,
    pub last_projective: Vec<u64>,
    pub last_rel_proj: Vec<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub clusters: Vec<ClusterRecord>,
}

pub fn catalog_doc(cat: &Catalog) -> CatalogDoc {
    CatalogDoc {
        schema_version: SCHEMA_VERSION,
        quiver: cat.quiver().to_string(),
        modules: cat
            .ids()
            .map(|id| ModuleRecord {
                key: cat.key(id),
                support: cat.support_vertices(id).iter().map(|v| v + 1).collect(),
                projective: cat.is_projective(id),
                injective: cat.is_injective(id),
                simple: cat.simple_vertex(id).is_some(),
            })
            .collect(),
    }
}

pub fn sequence_doc(cat: &Catalog, seq: &ExceptionalSequence) -> Result<SequenceDoc> {
    let classes = classify(cat, seq)?;
    Ok(SequenceDoc {
        schema_version: SCHEMA_VERSION,
        quiver: cat.quiver().to_string(),
        terms: seq
            .terms()
            .iter()
            .zip(classes)
            .map(|(&t, c)| TermRecord {
                key: cat.key(t),
                rel_proj: c.rel_proj,
                rel_inj: c.rel_inj,
                root: c.is_root(),
            })
            .collect(),
    })
}

pub fn sequence_line(cat: &Catalog, terms: &[crate::catalog::ModuleId]) -> SequenceLine {
    SequenceLine {
        schema_version: SCHEMA_VERSION,
        keys: terms.iter().map(|&t| cat.key(t)).collect(),
    }
}

fn leveled_records(cat: &Catalog, objects: &[Leveled]) -> Vec<LeveledRecord> {
    objects
        .iter()
        .map(|x| LeveledRecord {
            key: cat.key(x.module),
            level: x.level,
        })
        .collect()
}

pub fn tuple_doc(cat: &Catalog, tuple: &CompatibleTuple) -> TupleDoc {
    TupleDoc {
        schema_version: SCHEMA_VERSION,
        quiver: cat.quiver().to_string(),
        kind: TupleKind::Cluster,
        m: tuple.m(),
        objects: leveled_records(cat, tuple.objects()),
    }
}

pub fn m_sequence_doc(cat: &Catalog, seq: &MExcSequence) -> TupleDoc {
    TupleDoc {
        schema_version: SCHEMA_VERSION,
        quiver: cat.quiver().to_string(),
        kind: TupleKind::MExceptional,
        m: seq.m(),
        objects: leveled_records(cat, seq.terms()),
    }
}

pub fn census_doc(report: &CensusReport, clusters: &[ClusterCensus]) -> CensusDoc {
    CensusDoc {
        schema_version: SCHEMA_VERSION,
        quiver: report.label.clone(),
        dynkin: report.dynkin.to_string(),
        coxeter_number: report.coxeter_number,
        total: report.total,
        positions: report
            .positions
            .iter()
            .enumerate()
            .map(|(i, p)| PositionRecord {
                position: i + 1,
                rel_proj: p.rel_proj,
                rel_inj: p.rel_inj,
                rpi: p.rpi,
                rpi_probability: report.probability(p.rpi).to_string(),
            })
            .collect(),
        rpi_sets: report
            .rpi_sets
            .iter()
            .map(|(set, &count)| SetRecord {
                positions: set.clone(),
                count,
                probability: report.probability(count).to_string(),
            })
            .collect(),
        last_projective: report.last_projective.clone(),
        last_rel_proj: report.last_rel_proj.clone(),
        clusters: clusters
            .iter()
            .map(|c| ClusterRecord {
                m: c.m,
                clusters: c.clusters,
                positive_clusters: c.positive_clusters,
                ordered_tuples: c.ordered_tuples,
                m_sequences: c.m_sequences,
                projectively_signed: c.projectively_signed,
            })
            .collect(),
    }
}

fn check_quiver(cat: &Catalog, quiver: &str) -> Result<()> {
    let q = crate::quiver::Quiver::parse(quiver)?;
    if q.n() != cat.n() || q.arrows() != cat.quiver().arrows() {
        return Err(Error::Parse(format!(
            "document quiver {quiver} does not match {}",
            cat.quiver()
        )));
    }
    Ok(())
}

/// Rebuilds the exceptional sequence named by a document.
pub fn sequence_from_doc(cat: &Catalog, doc: &SequenceDoc) -> Result<ExceptionalSequence> {
    check_quiver(cat, &doc.quiver)?;
    let keys: Vec<&str> = doc.terms.iter().map(|t| t.key.as_str()).collect();
    ExceptionalSequence::from_keys(cat, &keys)
}

fn leveled_from_doc(cat: &Catalog, doc: &TupleDoc) -> Result<Vec<Leveled>> {
    check_quiver(cat, &doc.quiver)?;
    doc.objects
        .iter()
        .map(|r| Ok(Leveled::new(cat.parse_key(&r.key)?, r.level)))
        .collect()
}

pub fn tuple_from_doc(cat: &Catalog, doc: &TupleDoc) -> Result<CompatibleTuple> {
    if doc.kind != TupleKind::Cluster {
        return Err(Error::Parse("document is not a compatible tuple".into()));
    }
    CompatibleTuple::new(cat, doc.m, leveled_from_doc(cat, doc)?)
}

pub fn m_sequence_from_doc(cat: &Catalog, doc: &TupleDoc) -> Result<MExcSequence> {
    if doc.kind != TupleKind::MExceptional {
        return Err(Error::Parse(
            "document is not an m-exceptional sequence".into(),
        ));
    }
    MExcSequence::new(cat, doc.m, leveled_from_doc(cat, doc)?)
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    serde_json::to_string_pretty(doc).expect("documents serialize")
}

pub fn to_json_line<T: Serialize>(doc: &T) -> String {
    serde_json::to_string(doc).expect("documents serialize")
}

pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON document: {e}")))
}

/// Deterministic DOT rendering of a support Hasse diagram; edges point from
/// the smaller support to the larger one, maximal nodes are drawn bold with
/// a double border.
pub fn export_dot(cat: &Catalog, hasse: &SupportHasse) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, (&id, &max)) in hasse.nodes.iter().zip(&hasse.maximal).enumerate() {
        let style = if max {
            ", style=bold, peripheries=2"
        } else {
            ""
        };
        out.push_str(&format!(
            "  n{} [label=\"E{}: {}\"{style}];\n",
            i + 1,
            i + 1,
            cat.key(id)
        ));
    }
    let mut edges = hasse.edges.clone();
    edges.sort();
    for (a, b) in edges {
        out.push_str(&format!("  n{} -> n{};\n", a + 1, b + 1));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;
    use crate::sequence::support_hasse;

    fn cat(text: &str) -> Catalog {
        Catalog::build(&Quiver::parse(text).unwrap()).unwrap()
    }

    #[test]
    fn sequence_round_trip() {
        let a3 = cat("A3:1>2<3");
        let seq = ExceptionalSequence::from_keys(&a3, &["0.1.1", "1.1.1", "0.0.1"]).unwrap();
        let doc = sequence_doc(&a3, &seq).unwrap();
        assert!(doc.terms[1].root);
        let text = to_json(&doc);
        assert!(text.contains("\"schemaVersion\": 1"));
        assert!(text.contains("\"relProj\""));
        let back: SequenceDoc = from_json(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(sequence_from_doc(&a3, &back).unwrap(), seq);
    }

    #[test]
    fn quiver_mismatch_is_rejected() {
        let a3 = cat("A3:1>2<3");
        let seq = ExceptionalSequence::from_keys(&a3, &["0.1.1", "1.1.1", "0.0.1"]).unwrap();
        let mut doc = sequence_doc(&a3, &seq).unwrap();
        doc.quiver = "A3".into();
        assert!(sequence_from_doc(&a3, &doc).is_err());
    }

    #[test]
    fn dot_shapes() {
        let a3 = cat("A3:1>2<3");
        let seq = ExceptionalSequence::from_keys(&a3, &["0.1.1", "1.1.1", "0.0.1"]).unwrap();
        let dot = export_dot(&a3, &support_hasse(&a3, &seq));
        assert_eq!(dot.matches("->").count(), 2);
        assert_eq!(dot.matches("peripheries=2").count(), 1);
        assert!(dot.contains("n1 -> n2;") && dot.contains("n3 -> n1;"));

        let a1 = cat("A1");
        let single = ExceptionalSequence::from_keys(&a1, &["1"]).unwrap();
        let dot = export_dot(&a1, &support_hasse(&a1, &single));
        assert_eq!(dot.matches("->").count(), 0);
        assert_eq!(dot.matches("[label").count(), 1);
    }

    #[test]
    fn antichain_has_no_edges() {
        let d4 = cat("D4:sym-sink");
        let leaves: Vec<_> = [0, 2, 3].iter().map(|&v| d4.simple(v)).collect();
        let seq = ExceptionalSequence::new(&d4, leaves).unwrap();
        let dot = export_dot(&d4, &support_hasse(&d4, &seq));
        assert_eq!(dot.matches("->").count(), 0);
        assert_eq!(dot.matches("peripheries=2").count(), 3);
    }
}
