//! The JSON algebra file format.
//!
//! ```json
//! {"name": "G3", "size": 3, "one": 2, "zero": 0,
//!  "meet": [[0,0,0],[0,1,1],[0,1,2]], "join": ..., "mul": ..., "imp": ...}
//! ```

use std::fmt::Write as _;
use std::path::Path;

use serde_json::Value;

use crate::algebra::{Elem, FiniteAlgebra, Op};
use crate::error::{Error, Result};

fn schema(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Schema {
        path: path.into(),
        message: message.into(),
    }
}

fn index(v: &Value, path: &str, size: usize) -> Result<Elem> {
    let x = v
        .as_u64()
        .ok_or_else(|| schema(path, "expected a non-negative integer"))? as usize;
    if x >= size {
        return Err(schema(path, format!("{x} is out of range for size {size}")));
    }
    Ok(x)
}

fn table(obj: &serde_json::Map<String, Value>, key: &str, size: usize) -> Result<Vec<Elem>> {
    let rows = obj
        .get(key)
        .ok_or_else(|| schema(key, "missing field"))?
        .as_array()
        .ok_or_else(|| schema(key, "expected an array of rows"))?;
    if rows.len() != size {
        return Err(schema(key, format!("expected {size} rows, found {}", rows.len())));
    }
    let mut out = Vec::with_capacity(size * size);
    for (r, row) in rows.iter().enumerate() {
        let row_path = format!("{key}[{r}]");
        let row = row.as_array().ok_or_else(|| schema(&row_path, "expected an array"))?;
        if row.len() != size {
            return Err(schema(
                &row_path,
                format!("expected {size} entries, found {}", row.len()),
            ));
        }
        for (c, v) in row.iter().enumerate() {
            out.push(index(v, &format!("{key}[{r}][{c}]"), size)?);
        }
    }
    Ok(out)
}

/// Parses the JSON text of an algebra file. Only the format is checked; the
/// axioms are left to `verify_algebra`.
pub fn parse_algebra(text: &str) -> Result<FiniteAlgebra> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let obj = value.as_object().ok_or_else(|| schema("$", "expected an object"))?;
    for key in obj.keys() {
        if !["name", "size", "one", "zero", "meet", "join", "mul", "imp"].contains(&key.as_str()) {
            return Err(schema(key, "unknown field"));
        }
    }
    let name = obj
        .get("name")
        .ok_or_else(|| schema("name", "missing field"))?
        .as_str()
        .ok_or_else(|| schema("name", "expected a string"))?;
    let size = obj
        .get("size")
        .ok_or_else(|| schema("size", "missing field"))?
        .as_u64()
        .filter(|&s| s > 0)
        .ok_or_else(|| schema("size", "expected a positive integer"))? as usize;
    let one = index(
        obj.get("one").ok_or_else(|| schema("one", "missing field"))?,
        "one",
        size,
    )?;
    let zero = match obj.get("zero") {
        None => return Err(schema("zero", "missing field (use null for unbounded)")),
        Some(Value::Null) => None,
        Some(v) => Some(index(v, "zero", size)?),
    };
    FiniteAlgebra::new(
        name,
        size,
        table(obj, "meet", size)?,
        table(obj, "join", size)?,
        table(obj, "mul", size)?,
        table(obj, "imp", size)?,
        one,
        zero,
    )
}

/// JSON text for `a`, one table row per line.
pub fn format_algebra(a: &FiniteAlgebra) -> String {
    let n = a.size();
    let mut out = String::from("{\n");
    let _ = writeln!(
        out,
        "  \"name\": {},",
        serde_json::to_string(a.name()).expect("strings serialize")
    );
    let _ = writeln!(out, "  \"size\": {n},");
    let _ = writeln!(out, "  \"one\": {},", a.one());
    match a.zero() {
        Some(z) => {
            let _ = writeln!(out, "  \"zero\": {z},");
        }
        None => out.push_str("  \"zero\": null,\n"),
    }
    for (k, op) in Op::ALL.iter().enumerate() {
        let _ = writeln!(out, "  \"{}\": [", op.name());
        let t = a.table(*op);
        for r in 0..n {
            let row: Vec<String> = t[r * n..(r + 1) * n].iter().map(|x| x.to_string()).collect();
            let sep = if r + 1 < n { "," } else { "" };
            let _ = writeln!(out, "    [{}]{sep}", row.join(", "));
        }
        out.push_str(if k + 1 < Op::ALL.len() { "  ],\n" } else { "  ]\n" });
    }
    out.push_str("}\n");
    out
}

pub fn load_algebra(path: &Path) -> Result<FiniteAlgebra> {
    parse_algebra(&std::fs::read_to_string(path)?)
}

pub fn save_algebra(a: &FiniteAlgebra, path: &Path) -> Result<()> {
    Ok(std::fs::write(path, format_algebra(a))?)
}
