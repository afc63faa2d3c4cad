//! JSON group files.
//!
//! ```json
//! {"name": "klein", "dimension": 2,
//!  "generators": [{"matrix": [[1,0],[0,-1]], "translation": ["1/2", "0"]}]}
//! ```
//!
//! Matrix entries are JSON integers or integer strings. Translation entries
//! are strings `"n"` or `"p/q"` (JSON integers are also accepted); decimals
//! and floating-point numbers are rejected so that every value stays exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Deserialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::crystal::{build_group, AffineGen, CrystalGroup, GroupError};
use crate::linalg::{IntMatrix, RatVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("malformed group file: {0}")]
    Malformed(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupFile {
    #[serde(default)]
    name: Option<String>,
    dimension: Value,
    generators: Vec<GeneratorFile>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GeneratorFile {
    matrix: Vec<Vec<Value>>,
    translation: Vec<Value>,
}

pub fn parse_integer(v: &Value) -> Result<BigInt, FormatError> {
    match v {
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(BigInt::from(
            n.as_i64()
                .map(i128::from)
                .or_else(|| n.as_u64().map(i128::from))
                .expect("integral JSON number"),
        )),
        Value::String(s) => parse_int_str(s),
        other => Err(FormatError::Malformed(format!(
            "expected an integer, found {other}"
        ))),
    }
}

fn parse_int_str(s: &str) -> Result<BigInt, FormatError> {
    let t = s.trim();
    let digits = t
        .strip_prefix('-')
        .or_else(|| t.strip_prefix('+'))
        .unwrap_or(t);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(FormatError::Malformed(format!("`{s}` is not an integer")));
    }
    t.parse::<BigInt>()
        .map_err(|_| FormatError::Malformed(format!("`{s}` is not an integer")))
}

/// Parses `"n"` or `"p/q"` exactly.
pub fn parse_rational(s: &str) -> Result<BigRational, FormatError> {
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(parse_int_str(s)?)),
        Some((p, q)) => {
            let (p, q) = (parse_int_str(p)?, parse_int_str(q)?);
            if q.is_zero() {
                return Err(FormatError::Malformed(format!(
                    "`{s}` has zero denominator"
                )));
            }
            Ok(BigRational::new(p, q))
        }
    }
}

fn parse_translation_entry(v: &Value) -> Result<BigRational, FormatError> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(_) => Ok(BigRational::from_integer(parse_integer(v)?)),
        other => Err(FormatError::Malformed(format!(
            "expected a rational string, found {other}"
        ))),
    }
}

pub fn parse_group(text: &str) -> Result<CrystalGroup, FormatError> {
    let file: GroupFile =
        serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()))?;
    let k = usize::try_from(parse_integer(&file.dimension)?).map_err(|_| {
        FormatError::Malformed("dimension must be a non-negative machine integer".into())
    })?;
    let mut gens = Vec::with_capacity(file.generators.len());
    for (i, g) in file.generators.iter().enumerate() {
        if g.matrix.len() != k || g.matrix.iter().any(|r| r.len() != k) {
            return Err(FormatError::Malformed(format!(
                "generator {i}: matrix is not {k}x{k}"
            )));
        }
        if g.translation.len() != k {
            return Err(FormatError::Malformed(format!(
                "generator {i}: translation has length {}, expected {k}",
                g.translation.len()
            )));
        }
        let rows = g
            .matrix
            .iter()
            .map(|r| r.iter().map(parse_integer).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        let m = IntMatrix::from_rows(&rows, k).expect("checked shape");
        let t = g
            .translation
            .iter()
            .map(parse_translation_entry)
            .collect::<Result<Vec<_>, _>>()?;
        gens.push(AffineGen::new(m, RatVector::new(t))?);
    }
    let name = file.name.unwrap_or_else(|| "unnamed".into());
    Ok(build_group(k, gens, &name)?)
}

/// The group file for `g`, listing its input generators.
pub fn export_group(g: &CrystalGroup) -> Value {
    json!({
        "name": g.name(),
        "dimension": g.dim().to_string(),
        "generators": g.generators().iter().map(generator_json).collect::<Vec<_>>(),
    })
}

pub fn generator_json(a: &AffineGen) -> Value {
    json!({
        "matrix": matrix_json(a.matrix()),
        "translation": rat_vector_json(a.translation()),
    })
}

pub fn matrix_json(m: &IntMatrix) -> Value {
    Value::Array((0..m.rows()).map(|i| int_list_json(m.row(i))).collect())
}

pub fn int_list_json(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

pub fn rat_vector_json(v: &RatVector) -> Value {
    Value::Array(
        v.entries()
            .iter()
            .map(|x| Value::String(x.to_string()))
            .collect(),
    )
}
