//! The three interchange formats, all canonical (fixed key order, UTF-8,
//! index sets as sorted 1-based label arrays):
//!
//! - set system: `{"type":"set_system","n":N,"points":[[labels…]…]}`
//! - Venn diagram: `{"type":"venn","n":N,"regions":[[labels…]…]}` with the
//!   regions in (cardinality, lex) order
//! - IE-vector: `{"type":"ie_vector","n":N,"terms":[{"set":[…],"coeff":"D"}…]}`
//!   with coefficients as decimal strings, so big integers survive losslessly
//!
//! Writers compute the `l1_norm`/`support_size` summary on an IE-vector and
//! re-emit any tube metadata unchanged, so writer output re-serializes
//! byte-identically after a round trip.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ie_vector::IEVector;
use crate::index_set::IndexSet;
use crate::set_system::SetSystem;
use crate::venn::VennDiagram;

/// Extra fields carried by tube-produced vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TubeMeta {
    pub permutation: Vec<u32>,
    pub restarts: u32,
    pub d_bound: u32,
    pub complex_size: usize,
}

/// An IE-vector document: the vector plus optional provenance metadata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IeVectorDoc {
    pub vector: IEVector,
    pub meta: Option<TubeMeta>,
}

/// Any of the three documents, distinguished by the `type` field.
#[derive(Clone, Debug)]
pub enum InputDoc {
    System(SetSystem),
    Venn(VennDiagram),
    Vector(IeVectorDoc),
}

#[derive(Serialize, Deserialize)]
struct SetSystemJson {
    r#type: String,
    n: u32,
    points: Vec<IndexSet>,
}

#[derive(Serialize, Deserialize)]
struct VennJson {
    r#type: String,
    n: u32,
    regions: Vec<IndexSet>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    set: IndexSet,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct IeVectorJson {
    r#type: String,
    n: u32,
    terms: Vec<TermJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    l1_norm: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    support_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    meta: Option<TubeMeta>,
}

fn render<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string(doc).expect("serialization cannot fail");
    s.push('\n');
    s
}

pub fn write_set_system(fs: &SetSystem) -> String {
    render(&SetSystemJson {
        r#type: "set_system".into(),
        n: fs.n(),
        points: fs.points().to_vec(),
    })
}

pub fn write_venn(venn: &VennDiagram) -> String {
    render(&VennJson {
        r#type: "venn".into(),
        n: venn.n(),
        regions: venn.regions().to_vec(),
    })
}

pub fn write_ie_vector(x: &IEVector, meta: Option<&TubeMeta>) -> String {
    render(&IeVectorJson {
        r#type: "ie_vector".into(),
        n: x.n(),
        terms: x
            .iter()
            .map(|(s, c)| TermJson { set: s.clone(), coeff: c.to_string() })
            .collect(),
        l1_norm: Some(x.l1_norm().to_string()),
        support_size: Some(x.support_size()),
        meta: meta.cloned(),
    })
}

fn doc_type(value: &serde_json::Value) -> Result<&str> {
    value
        .get("type")
        .and_then(|t| t.as_str())
        .ok_or_else(|| Error::Json("missing or non-string \"type\" field".into()))
}

/// Parses any of the three documents, dispatching on the `type` field.
pub fn read_input(text: &str) -> Result<InputDoc> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    match doc_type(&value)? {
        "set_system" => {
            let doc: SetSystemJson =
                serde_json::from_value(value).map_err(|e| Error::Json(e.to_string()))?;
            // decoded systems tolerate coinciding sets; generated test
            // systems may legitimately contain them
            Ok(InputDoc::System(SetSystem::from_parts(doc.n, doc.points)?))
        }
        "venn" => {
            let doc: VennJson =
                serde_json::from_value(value).map_err(|e| Error::Json(e.to_string()))?;
            Ok(InputDoc::Venn(VennDiagram::new(doc.n, doc.regions)?))
        }
        "ie_vector" => {
            let doc: IeVectorJson =
                serde_json::from_value(value).map_err(|e| Error::Json(e.to_string()))?;
            let mut x = IEVector::new(doc.n);
            for term in doc.terms {
                if term.set.is_empty() {
                    return Err(Error::Json("ie_vector term on the empty set".into()));
                }
                if term.set.max_label() > doc.n {
                    return Err(Error::Json(format!(
                        "term {} mentions a label above n = {}",
                        term.set, doc.n
                    )));
                }
                let coeff: BigInt = term
                    .coeff
                    .parse()
                    .map_err(|_| Error::Json(format!("bad coefficient {:?}", term.coeff)))?;
                x.add_term(term.set, coeff);
            }
            Ok(InputDoc::Vector(IeVectorDoc { vector: x, meta: doc.meta }))
        }
        other => Err(Error::Json(format!("unknown document type {:?}", other))),
    }
}

/// Reads a document and standardizes it to a Venn diagram, accepting either
/// a raw set system or an explicit Venn document.
pub fn read_as_venn(text: &str) -> Result<VennDiagram> {
    match read_input(text)? {
        InputDoc::System(fs) => crate::standardize::compute_venn(&fs),
        InputDoc::Venn(v) => Ok(v),
        InputDoc::Vector(_) => {
            Err(Error::Json("expected a set_system or venn document, got ie_vector".into()))
        }
    }
}

pub fn read_ie_vector(text: &str) -> Result<IeVectorDoc> {
    match read_input(text)? {
        InputDoc::Vector(doc) => Ok(doc),
        _ => Err(Error::Json("expected an ie_vector document".into())),
    }
}
