//! CSV and JSON encodings of instances.
//!
//! CSV holds the table only: a mandatory header whose first column is `_id`,
//! then one row per tuple. Dependencies travel in a sidecar JSON object
//! `{"fds": [{"lhs": [..], "rhs": [..]}], "ids": [..]}`. The JSON table format
//! carries attributes, tuples and the same dependency object in one document.

use serde::{Deserialize, Serialize};

use super::{AttributeId, DbError, Dependency, DependencyKind, Instance, Tuple, TupleId, Value};

pub const ID_COLUMN: &str = "_id";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
struct DependencyFile {
    #[serde(default)]
    fds: Vec<SidesRecord>,
    #[serde(default)]
    ids: Vec<SidesRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct SidesRecord {
    lhs: Vec<AttributeId>,
    rhs: Vec<AttributeId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct TupleRecord {
    id: TupleId,
    values: Vec<Value>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct TableDocument {
    attributes: Vec<AttributeId>,
    tuples: Vec<TupleRecord>,
    #[serde(default)]
    dependencies: DependencyFile,
}

impl DependencyFile {
    fn of(inst: &Instance) -> Self {
        let sides = |d: &Dependency| SidesRecord {
            lhs: d.lhs.clone(),
            rhs: d.rhs.clone(),
        };
        DependencyFile {
            fds: inst.functional_dependencies().map(sides).collect(),
            ids: inst.inclusion_dependencies().map(sides).collect(),
        }
    }

    /// FDs first, then IDs.
    fn into_dependencies(self) -> Vec<Dependency> {
        let fds = self.fds.into_iter().map(|s| Dependency {
            kind: DependencyKind::Functional,
            lhs: s.lhs,
            rhs: s.rhs,
        });
        let ids = self.ids.into_iter().map(|s| Dependency {
            kind: DependencyKind::Inclusion,
            lhs: s.lhs,
            rhs: s.rhs,
        });
        fds.chain(ids).collect()
    }
}

/// CSV yields the table alone; use [`export_dependencies`] for the sidecar.
pub fn export_table(inst: &Instance, format: TableFormat) -> String {
    match format {
        TableFormat::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            let header = std::iter::once(ID_COLUMN).chain(inst.schema().iter().map(AttributeId::as_str));
            writer.write_record(header).expect("writing to memory");
            for t in inst.tuples() {
                let row = std::iter::once(t.id.as_str()).chain(t.values.iter().map(Value::as_str));
                writer.write_record(row).expect("writing to memory");
            }
            String::from_utf8(writer.into_inner().expect("flushing to memory")).expect("csv output is utf-8")
        }
        TableFormat::Json => {
            let doc = TableDocument {
                attributes: inst.schema().to_vec(),
                tuples: inst
                    .tuples()
                    .iter()
                    .map(|t| TupleRecord {
                        id: t.id.clone(),
                        values: t.values.clone(),
                    })
                    .collect(),
                dependencies: DependencyFile::of(inst),
            };
            let mut text = serde_json::to_string_pretty(&doc).expect("serializing plain data");
            text.push('\n');
            text
        }
    }
}

pub fn export_dependencies(inst: &Instance) -> String {
    let mut text = serde_json::to_string_pretty(&DependencyFile::of(inst)).expect("serializing plain data");
    text.push('\n');
    text
}

/// CSV input produces an instance without dependencies.
pub fn import_table(text: &str, format: TableFormat) -> Result<Instance, DbError> {
    match format {
        TableFormat::Csv => {
            let (schema, tuples) = read_csv(text)?;
            Instance::new(schema, tuples, Vec::new())
        }
        TableFormat::Json => {
            let doc: TableDocument =
                serde_json::from_str(text).map_err(|e| DbError::Format(format!("table json: {e}")))?;
            let tuples = doc
                .tuples
                .into_iter()
                .map(|t| Tuple {
                    id: t.id,
                    values: t.values,
                })
                .collect();
            Instance::new(doc.attributes, tuples, doc.dependencies.into_dependencies())
        }
    }
}

/// A CSV table plus its dependency sidecar.
pub fn import_table_with_dependencies(csv_text: &str, dependencies_json: &str) -> Result<Instance, DbError> {
    let (schema, tuples) = read_csv(csv_text)?;
    let deps: DependencyFile = serde_json::from_str(dependencies_json)
        .map_err(|e| DbError::Format(format!("dependency json: {e}")))?;
    Instance::new(schema, tuples, deps.into_dependencies())
}

fn read_csv(text: &str) -> Result<(Vec<AttributeId>, Vec<Tuple>), DbError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut records = reader.records();
    let header = match records.next() {
        Some(r) => r.map_err(|e| DbError::Format(format!("csv: {e}")))?,
        None => return Err(DbError::Format("csv: missing header row".to_string())),
    };
    if header.get(0) != Some(ID_COLUMN) {
        return Err(DbError::Format(format!(
            "csv line 1: malformed header, first column must be `{ID_COLUMN}`"
        )));
    }
    let schema: Vec<AttributeId> = header.iter().skip(1).map(AttributeId::from).collect();
    let mut tuples = Vec::new();
    for record in records {
        let record = record.map_err(|e| DbError::Format(format!("csv: {e}")))?;
        let line = record.position().map_or(0, |p| p.line());
        if record.len() != schema.len() + 1 {
            return Err(DbError::Format(format!(
                "csv line {line}: expected {} fields, found {}",
                schema.len() + 1,
                record.len()
            )));
        }
        if record.iter().any(str::is_empty) {
            return Err(DbError::Format(format!("csv line {line}: empty cell")));
        }
        let mut fields = record.iter();
        let id = TupleId::from(fields.next().expect("arity checked"));
        tuples.push(Tuple {
            id,
            values: fields.map(Value::from).collect(),
        });
    }
    Ok((schema, tuples))
}
