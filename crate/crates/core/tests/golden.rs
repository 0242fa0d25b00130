use excseq::census::{census, cluster_census, DEFAULT_RANK_CAP};
use excseq::cluster::{theta, theta_inverse};
use excseq::io::{
    catalog_doc, census_doc, export_dot, from_json, m_sequence_doc, m_sequence_from_doc,
    sequence_doc, sequence_from_doc, to_json, tuple_doc, tuple_from_doc, CatalogDoc, CensusDoc,
    SequenceDoc, TupleDoc,
};
use excseq::sequence::support_hasse;
use excseq::{Catalog, ExceptionalSequence, Leveled, MExcSequence, Quiver};

const ZIGZAG: &str = "A3:1>2<3";

fn fixture(name: &str) -> String {
    let path = format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).unwrap()
}

fn cat(text: &str) -> Catalog {
    Catalog::build(&Quiver::parse(text).unwrap()).unwrap()
}

fn seq(c: &Catalog, keys: &[&str]) -> ExceptionalSequence {
    let terms = keys.iter().map(|k| c.parse_key(k).unwrap()).collect();
    ExceptionalSequence::new(c, terms).unwrap()
}

#[test]
fn catalog_document() {
    let c = cat(ZIGZAG);
    let text = fixture("catalog_a3_zigzag.json");
    assert_eq!(to_json(&catalog_doc(&c)), text.trim_end());
    let doc: CatalogDoc = from_json(&text).unwrap();
    assert_eq!(doc, catalog_doc(&c));
}

#[test]
fn classified_sequence_document() {
    let c = cat(ZIGZAG);
    let s = seq(&c, &["0.1.1", "1.1.1", "0.0.1"]);
    let text = fixture("classify_a3_zigzag.json");
    assert_eq!(to_json(&sequence_doc(&c, &s).unwrap()), text.trim_end());
    let doc: SequenceDoc = from_json(&text).unwrap();
    assert_eq!(sequence_from_doc(&c, &doc).unwrap(), s);
}

#[test]
fn theta_document() {
    let c = cat(ZIGZAG);
    let s = seq(&c, &["0.1.1", "1.1.1", "0.0.1"]);
    let levels = [2, 0, 0];
    let terms = s
        .terms()
        .iter()
        .zip(levels)
        .map(|(&x, l)| Leveled::new(x, l))
        .collect();
    let m_seq = MExcSequence::new(&c, 2, terms).unwrap();
    let tuple = theta_inverse(&c, &m_seq).unwrap();
    let text = fixture("theta_a3_zigzag.json");
    assert_eq!(to_json(&tuple_doc(&c, &tuple)), text.trim_end());
    let doc: TupleDoc = from_json(&text).unwrap();
    let decoded = tuple_from_doc(&c, &doc).unwrap();
    assert_eq!(decoded, tuple);
    let back = theta(&c, &decoded).unwrap();
    assert_eq!(back, m_seq);
    let seq_doc = m_sequence_doc(&c, &back);
    assert_eq!(m_sequence_from_doc(&c, &seq_doc).unwrap(), m_seq);
}

#[test]
fn census_document() {
    let c = cat("A3");
    let report = census(&c, DEFAULT_RANK_CAP).unwrap();
    let clusters: Vec<_> = [1, 2]
        .into_iter()
        .map(|m| cluster_census(&c, m, DEFAULT_RANK_CAP).unwrap())
        .collect();
    let text = fixture("census_a3.json");
    let doc = census_doc(&report, &clusters);
    assert_eq!(to_json(&doc), text.trim_end());
    let parsed: CensusDoc = from_json(&text).unwrap();
    assert_eq!(parsed, doc);
}

#[test]
fn hasse_dot_export() {
    let c = cat(ZIGZAG);
    let s = seq(&c, &["0.1.1", "1.1.1", "0.0.1"]);
    let dot = export_dot(&c, &support_hasse(&c, &s));
    assert_eq!(dot.trim_end(), fixture("hasse_a3_zigzag.dot").trim_end());
}
