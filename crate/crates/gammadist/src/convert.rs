//! JSON encodings of scalars, characters, matrices and involutions.
//!
//! A scalar component written as a string (`"1/4"`, `"-3"`, `"0.25"`) is an
//! exact rational; a JSON number is a float unless exact mode is on, in which
//! case its decimal text is read as a rational. Indices are 1-based.

use gammadist_core::involution::Involution;
use gammadist_core::matrix::{MatrixC, MatrixR};
use gammadist_core::scalar::{format_rational, parse_rational};
use gammadist_core::{BorelCharacter, Character, GammaValue, Scalar};
use num_complex::Complex64;
use serde_json::{json, Map, Value};

use crate::error::CliError;

type Rational = num_rational::BigRational;

fn field<'a>(obj: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value, CliError> {
    obj.get(key)
        .ok_or_else(|| CliError::schema(path, format!("missing field {key:?}")))
}

fn object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>, CliError> {
    v.as_object()
        .ok_or_else(|| CliError::schema(path, "expected an object"))
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>, CliError> {
    v.as_array()
        .ok_or_else(|| CliError::schema(path, "expected an array"))
}

/// Unwraps `{"key": x}` to `x`; any other document is returned unchanged.
pub fn unwrap_key<'a>(v: &'a Value, key: &str) -> &'a Value {
    match v.as_object() {
        Some(obj) if obj.contains_key(key) => &obj[key],
        _ => v,
    }
}

enum Component {
    Exact(Rational),
    Float(f64),
}

fn component(v: &Value, exact: bool, path: &str) -> Result<Component, CliError> {
    match v {
        Value::String(s) => parse_rational(s)
            .map(Component::Exact)
            .map_err(|e| CliError::schema(path, e.to_string())),
        Value::Number(n) if exact => parse_rational(&n.to_string())
            .map(Component::Exact)
            .map_err(|_| {
                CliError::schema(
                    path,
                    format!("{n} is not a plain decimal; write it as \"p/q\""),
                )
            }),
        Value::Number(n) => Ok(Component::Float(n.as_f64().unwrap_or(f64::NAN))),
        _ => Err(CliError::schema(
            path,
            "expected a number or a rational string",
        )),
    }
}

pub fn scalar(v: &Value, exact: bool, path: &str) -> Result<Scalar, CliError> {
    let (re, im) = match v {
        Value::Object(obj) => {
            let re = obj
                .get("re")
                .map(|x| component(x, exact, &format!("{path}.re")))
                .transpose()?;
            let im = obj
                .get("im")
                .map(|x| component(x, exact, &format!("{path}.im")))
                .transpose()?;
            if let Some(key) = obj.keys().find(|k| *k != "re" && *k != "im") {
                return Err(CliError::schema(path, format!("unexpected field {key:?}")));
            }
            (
                re.unwrap_or(Component::Exact(Rational::default())),
                im.unwrap_or(Component::Exact(Rational::default())),
            )
        }
        other => (
            component(other, exact, path)?,
            Component::Exact(Rational::default()),
        ),
    };
    Ok(match (re, im) {
        (Component::Exact(a), Component::Exact(b)) => Scalar::exact(a, b),
        (a, b) => {
            let f = |c: Component| match c {
                Component::Exact(q) => gammadist_core::scalar::rational_to_f64(&q),
                Component::Float(x) => x,
            };
            Scalar::float(f(a), f(b))
        }
    })
}

pub fn scalar_json(s: &Scalar) -> Value {
    match s {
        Scalar::Exact(q) => json!({ "re": format_rational(&q.re), "im": format_rational(&q.im) }),
        Scalar::Float(z) => complex_json(*z),
    }
}

pub fn complex_json(z: Complex64) -> Value {
    json!({ "re": z.re, "im": z.im })
}

pub fn character(v: &Value, exact: bool, path: &str) -> Result<Character, CliError> {
    let obj = object(v, path)?;
    if let Some(key) = obj.keys().find(|k| *k != "sigma" && *k != "k") {
        return Err(CliError::schema(path, format!("unexpected field {key:?}")));
    }
    let sigma = scalar(field(obj, "sigma", path)?, exact, &format!("{path}.sigma"))?;
    let k = field(obj, "k", path)?
        .as_i64()
        .ok_or_else(|| CliError::schema(format!("{path}.k"), "expected an integer"))?;
    Ok(Character::new(sigma, k))
}

pub fn character_json(c: &Character) -> Value {
    json!({ "sigma": scalar_json(&c.sigma), "k": c.k })
}

/// An array of characters, optionally wrapped as `{"chi": [...]}`.
pub fn borel(v: &Value, exact: bool, path: &str) -> Result<BorelCharacter, CliError> {
    let list = array(v, path)?;
    let entries = list
        .iter()
        .enumerate()
        .map(|(i, c)| character(c, exact, &format!("{path}[{i}]")))
        .collect::<Result<_, _>>()?;
    Ok(BorelCharacter::new(entries))
}

pub fn borel_json(chi: &BorelCharacter) -> Value {
    Value::Array(chi.entries.iter().map(character_json).collect())
}

pub fn gamma_json(g: &GammaValue) -> Value {
    json!({
        "value": complex_json(g.value()),
        "kind": g.kind().as_str(),
        "order": g.order,
        "log": complex_json(g.log),
    })
}

/// Nested rows of `{"re", "im"}` objects or plain numbers.
pub fn matrix(v: &Value, path: &str) -> Result<MatrixC, CliError> {
    let rows = array(v, path)?;
    let n = rows.len();
    let mut out = MatrixC::zeros(n, n);
    for (i, row) in rows.iter().enumerate() {
        let row = array(row, &format!("{path}[{i}]"))?;
        if row.len() != n {
            return Err(CliError::schema(
                format!("{path}[{i}]"),
                format!("expected {n} entries, found {}", row.len()),
            ));
        }
        for (j, entry) in row.iter().enumerate() {
            out[(i, j)] = scalar(entry, false, &format!("{path}[{i}][{j}]"))?.to_c64();
        }
    }
    Ok(out)
}

pub fn matrix_json(m: &MatrixC) -> Value {
    Value::Array(
        (0..m.nrows())
            .map(|i| Value::Array((0..m.ncols()).map(|j| complex_json(m[(i, j)])).collect()))
            .collect(),
    )
}

pub fn real_matrix_json(m: &MatrixR) -> Value {
    matrix_json(&m.map(|x| Complex64::new(x, 0.0)))
}

/// One-line notation: `"3 2 1"` or `[3, 2, 1]`.
pub fn involution(v: &Value, path: &str) -> Result<Involution, CliError> {
    match v {
        Value::String(s) => Ok(Involution::from_one_line(s)?),
        Value::Array(items) => {
            let mut map = Vec::with_capacity(items.len());
            for (i, x) in items.iter().enumerate() {
                let j = x.as_u64().filter(|&j| j >= 1).ok_or_else(|| {
                    CliError::schema(format!("{path}[{i}]"), "expected a positive integer")
                })?;
                map.push(j as usize - 1);
            }
            Ok(Involution::new(map)?)
        }
        _ => Err(CliError::schema(path, "expected one-line notation")),
    }
}

pub fn involution_json(w: &Involution) -> Value {
    json!(w.to_one_line())
}

pub fn pair_json((i, j): (usize, usize)) -> Value {
    json!([i + 1, j + 1])
}

/// Exact rationals from strings or decimal numbers.
pub fn rationals(v: &Value, path: &str) -> Result<Vec<Rational>, CliError> {
    let list = match v {
        Value::String(s) => {
            return s
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| parse_rational(t).map_err(|e| CliError::schema(path, e.to_string())))
                .collect()
        }
        other => array(other, path)?,
    };
    list.iter()
        .enumerate()
        .map(
            |(i, x)| match component(x, true, &format!("{path}[{i}]"))? {
                Component::Exact(q) => Ok(q),
                Component::Float(_) => unreachable!("exact parsing"),
            },
        )
        .collect()
}

pub fn rational_json(q: &Rational) -> Value {
    Value::String(format_rational(q))
}
