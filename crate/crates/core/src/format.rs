//! JSON structure documents.
//!
//! One document holds one structure. Keys are emitted sorted, tables
//! row-major with one row per line, and undefined local products as `null`:
//!
//! ```json
//! {
//!   "add": [
//!     [0, 1],
//!     [1, 0]
//!   ],
//!   "kind": "ring",
//!   "mul": [
//!     [0, 0],
//!     [0, 1]
//!   ],
//!   "name": "Z2",
//!   "one": 1,
//!   "order": 2
//! }
//! ```

use std::collections::BTreeMap;

use serde::Deserialize;
use serde_json::Value;
use thiserror::Error;

use crate::constructions::FiniteCommRing;
use crate::hlring::{HlRing, RawHlRing};
use crate::kernel::{validate_group, Elem, FiniteAbelianGroup, FiniteTable, GroupError};
use crate::lcrng::{LcRng, RawLcRng};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("malformed document: {0}")]
    MalformedDocument(String),
    #[error("unknown structure kind {0:?}")]
    UnknownKind(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("addition table: {0}")]
    InvalidGroup(#[from] GroupError),
}

/// A commutative ring as read from a file, not yet checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawRing {
    pub group: FiniteAbelianGroup,
    pub mul: FiniteTable,
    pub one: Elem,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    LcRng(RawLcRng),
    HlRing(RawHlRing),
    Ring(RawRing),
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::LcRng(_) => "lcrng",
            Structure::HlRing(_) => "hlring",
            Structure::Ring(_) => "ring",
        }
    }

    pub fn order(&self) -> usize {
        match self {
            Structure::LcRng(r) => r.group.order(),
            Structure::HlRing(h) => h.group.order(),
            Structure::Ring(r) => r.group.order(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub name: String,
    pub metadata: BTreeMap<String, Value>,
    pub structure: Structure,
}

impl Document {
    pub fn new(name: impl Into<String>, structure: Structure) -> Self {
        Document {
            name: name.into(),
            metadata: BTreeMap::new(),
            structure,
        }
    }

    pub fn lcrng(name: impl Into<String>, r: &LcRng) -> Self {
        Document::new(name, Structure::LcRng(r.raw().clone()))
    }

    pub fn hlring(name: impl Into<String>, h: &HlRing) -> Self {
        Document::new(name, Structure::HlRing(h.raw().clone()))
    }

    pub fn ring(name: impl Into<String>, r: &FiniteCommRing) -> Self {
        Document::new(
            name,
            Structure::Ring(RawRing {
                group: r.group().clone(),
                mul: r.mul_table().clone(),
                one: r.one(),
            }),
        )
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FileModel {
    #[serde(rename = "kind")]
    _kind: String,
    name: String,
    order: usize,
    add: Vec<Vec<Elem>>,
    mul: Option<Vec<Vec<Elem>>>,
    local_mul: Option<Vec<Vec<Option<Elem>>>>,
    left_identity: Option<Elem>,
    bullet: Option<Vec<Vec<Elem>>>,
    rarrow: Option<Vec<Vec<Elem>>>,
    larrow: Option<Vec<Vec<Elem>>>,
    identity: Option<Elem>,
    one: Option<Elem>,
    metadata: Option<BTreeMap<String, Value>>,
}

const LCRNG_KEYS: &[&str] = &["mul", "local_mul", "left_identity"];
const HLRING_KEYS: &[&str] = &["bullet", "rarrow", "larrow", "identity"];
const RING_KEYS: &[&str] = &["mul", "one"];

/// Reads a document. Only shapes are checked here, apart from the addition
/// table, which must form a group with zero at index 0.
pub fn parse_structure(text: &str) -> Result<Document, FormatError> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| FormatError::MalformedDocument(e.to_string()))?;
    let kind = value
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| FormatError::MalformedDocument("missing string field \"kind\"".into()))?
        .to_owned();
    let allowed = match kind.as_str() {
        "lcrng" => LCRNG_KEYS,
        "hlring" => HLRING_KEYS,
        "ring" => RING_KEYS,
        _ => return Err(FormatError::UnknownKind(kind)),
    };
    let model: FileModel =
        serde_json::from_value(value.clone()).map_err(|e| FormatError::MalformedDocument(e.to_string()))?;
    let obj = value.as_object().expect("deserialized as a struct");
    for key in LCRNG_KEYS.iter().chain(HLRING_KEYS).chain(RING_KEYS) {
        if obj.contains_key(*key) && !allowed.contains(key) {
            return Err(FormatError::ShapeMismatch(format!(
                "field {key:?} does not belong to kind {kind:?}"
            )));
        }
    }

    let n = model.order;
    if n == 0 {
        return Err(FormatError::ShapeMismatch("order must be positive".into()));
    }
    let add = total_table("add", &model.add, n)?;
    let group = validate_group(add)?;
    let element = |field: &str, e: Option<Elem>| match e {
        None => Err(FormatError::ShapeMismatch(format!("missing field {field:?}"))),
        Some(e) if e >= n => Err(FormatError::ShapeMismatch(format!(
            "{field} = {e} is not an element of a structure of order {n}"
        ))),
        Some(e) => Ok(e),
    };
    let required = |field: &str, t: &Option<Vec<Vec<Elem>>>| match t {
        None => Err(FormatError::ShapeMismatch(format!("missing table {field:?}"))),
        Some(rows) => total_table(field, rows, n),
    };

    let structure = match kind.as_str() {
        "lcrng" => {
            let local = model
                .local_mul
                .as_ref()
                .ok_or_else(|| FormatError::ShapeMismatch("missing table \"local_mul\"".into()))?;
            Structure::LcRng(RawLcRng {
                group,
                mul: required("mul", &model.mul)?,
                left_identity: element("left_identity", model.left_identity)?,
                local_mul: partial_table("local_mul", local, n)?,
            })
        }
        "hlring" => Structure::HlRing(RawHlRing {
            group,
            bullet: required("bullet", &model.bullet)?,
            rarrow: required("rarrow", &model.rarrow)?,
            larrow: required("larrow", &model.larrow)?,
            sigma: element("identity", model.identity)?,
        }),
        _ => Structure::Ring(RawRing {
            group,
            mul: required("mul", &model.mul)?,
            one: element("one", model.one)?,
        }),
    };
    Ok(Document {
        name: model.name,
        metadata: model.metadata.unwrap_or_default(),
        structure,
    })
}

fn total_table(field: &str, rows: &[Vec<Elem>], n: usize) -> Result<FiniteTable, FormatError> {
    let partial: Vec<Vec<Option<Elem>>> = rows
        .iter()
        .map(|r| r.iter().map(|&e| Some(e)).collect())
        .collect();
    partial_table(field, &partial, n)
}

fn partial_table(field: &str, rows: &[Vec<Option<Elem>>], n: usize) -> Result<FiniteTable, FormatError> {
    if rows.len() != n {
        return Err(FormatError::ShapeMismatch(format!(
            "{field} has {} rows, expected {n}",
            rows.len()
        )));
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(FormatError::ShapeMismatch(format!(
                "{field} row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        if let Some(j) = row.iter().position(|e| matches!(e, Some(e) if *e >= n)) {
            return Err(FormatError::ShapeMismatch(format!(
                "{field}[{i}][{j}] is not an element of a structure of order {n}"
            )));
        }
    }
    FiniteTable::from_partial_rows(rows).map_err(|e| FormatError::ShapeMismatch(e.to_string()))
}

enum Field {
    Scalar(Value),
    Table(Vec<Vec<Option<Elem>>>),
}

fn table_field(t: &FiniteTable) -> Field {
    Field::Table(t.partial_rows())
}

/// Canonical text of a document; `parse_structure(&emit_structure(d)) == d`.
pub fn emit_structure(doc: &Document) -> String {
    let mut fields: BTreeMap<&str, Field> = BTreeMap::new();
    let s = &doc.structure;
    fields.insert("kind", Field::Scalar(Value::from(s.kind())));
    fields.insert("name", Field::Scalar(Value::from(doc.name.clone())));
    fields.insert("order", Field::Scalar(Value::from(s.order())));
    if !doc.metadata.is_empty() {
        let map: serde_json::Map<String, Value> =
            doc.metadata.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        fields.insert("metadata", Field::Scalar(Value::Object(map)));
    }
    match s {
        Structure::LcRng(r) => {
            fields.insert("add", table_field(r.group.table()));
            fields.insert("mul", table_field(&r.mul));
            fields.insert("local_mul", table_field(&r.local_mul));
            fields.insert("left_identity", Field::Scalar(Value::from(r.left_identity)));
        }
        Structure::HlRing(h) => {
            fields.insert("add", table_field(h.group.table()));
            fields.insert("bullet", table_field(&h.bullet));
            fields.insert("rarrow", table_field(&h.rarrow));
            fields.insert("larrow", table_field(&h.larrow));
            fields.insert("identity", Field::Scalar(Value::from(h.sigma)));
        }
        Structure::Ring(r) => {
            fields.insert("add", table_field(r.group.table()));
            fields.insert("mul", table_field(&r.mul));
            fields.insert("one", Field::Scalar(Value::from(r.one)));
        }
    }

    let mut out = String::from("{\n");
    let last = fields.len() - 1;
    for (k, (key, field)) in fields.iter().enumerate() {
        out.push_str(&format!("  {}: ", Value::from(*key)));
        match field {
            Field::Scalar(v) => out.push_str(&v.to_string()),
            Field::Table(rows) => {
                out.push_str("[\n");
                for (i, row) in rows.iter().enumerate() {
                    let cells: Vec<String> = row
                        .iter()
                        .map(|e| e.map_or_else(|| "null".to_owned(), |e| e.to_string()))
                        .collect();
                    out.push_str("    [");
                    out.push_str(&cells.join(", "));
                    out.push(']');
                    if i + 1 < rows.len() {
                        out.push(',');
                    }
                    out.push('\n');
                }
                out.push_str("  ]");
            }
        }
        if k < last {
            out.push(',');
        }
        out.push('\n');
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::constructions::zmod;
    use crate::hlring::from_lcrng;

    #[test]
    fn r4_round_trip() {
        let doc = Document::lcrng("R4", &catalog::r4());
        let text = emit_structure(&doc);
        let back = parse_structure(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(emit_structure(&back), text);
        assert_eq!(back.structure.order(), 4);
    }

    #[test]
    fn kinds() {
        let h = from_lcrng(&catalog::r4()).unwrap();
        assert!(emit_structure(&Document::hlring("R4hl", &h)).contains("\"kind\": \"hlring\""));
        assert!(emit_structure(&Document::ring("Z4", &zmod(4))).contains("\"kind\": \"ring\""));
    }

    #[test]
    fn off_halo_local_entry_still_parses() {
        let text = emit_structure(&Document::lcrng("R4", &catalog::r4()));
        // row 1 of local_mul is all null in R4; define one entry
        let patched = text.replacen("[null, null, null, null]", "[null, null, 0, null]", 1);
        assert_ne!(patched, text);
        let doc = parse_structure(&patched).unwrap();
        let Structure::LcRng(raw) = doc.structure else { panic!() };
        assert!(crate::lcrng::validate_lcrng(raw).is_err());
    }

    #[test]
    fn truncated_and_unknown() {
        let text = emit_structure(&Document::lcrng("R4", &catalog::r4()));
        assert!(matches!(
            parse_structure(&text[..text.len() / 2]),
            Err(FormatError::MalformedDocument(_))
        ));
        let other = text.replace("\"lcrng\"", "\"quasigroup\"");
        assert_eq!(
            parse_structure(&other),
            Err(FormatError::UnknownKind("quasigroup".into()))
        );
    }

    #[test]
    fn wrong_dimensions() {
        let text = emit_structure(&Document::ring("Z2", &zmod(2)));
        let bad = text.replace("\"order\": 2", "\"order\": 3");
        assert!(matches!(parse_structure(&bad), Err(FormatError::ShapeMismatch(_))));
    }
}
