//! JSON files for algebras and modules.
//!
//! Algebra:
//! `{"basis_labels": [..], "dim": n, "unit_index": i | "unit": [..],
//!   "structure_constants": [[i, j, [..]], ..], "idempotents": [[..], ..],
//!   "params": {"q": "2"}}`; only nonzero products are listed.
//!
//! Module:
//! `{"algebra": "file.json" | {..}, "dim": n, "action": {"x": [[..], ..]},
//!   "labels": [..]}`; the action may list generators only.
//!
//! Rationals are strings such as `"-1/2"`. Output is pretty-printed with
//! sorted keys, so it is byte-stable.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::algebra::{Algebra, AlgebraTable};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};
use crate::module::ModuleRep;

fn fmt_err(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Format { location: location.into(), message: message.into() }
}

fn scalar_json(s: &Scalar) -> Value {
    Value::String(s.to_string())
}

fn vector_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar_json).collect())
}

fn matrix_json(m: &Matrix) -> Value {
    Value::Array(m.row_iter().map(vector_json).collect())
}

pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

pub fn algebra_to_json(alg: &Algebra) -> Value {
    table_to_json(alg.table())
}

pub fn table_to_json(t: &AlgebraTable) -> Value {
    let n = t.dim();
    let mut constants = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let c = &t.constants[i * n + j];
            if c.iter().any(|x| !x.is_zero()) {
                constants.push(json!([i, j, vector_json(c)]));
            }
        }
    }
    let mut obj = Map::new();
    obj.insert("basis_labels".into(), json!(t.labels));
    obj.insert("dim".into(), json!(n));
    let unit_index = (0..n).find(|&i| t.unit.iter().enumerate().all(|(k, c)| if k == i { c.is_one() } else { c.is_zero() }));
    match unit_index {
        Some(u) => obj.insert("unit_index".into(), json!(u)),
        None => obj.insert("unit".into(), vector_json(&t.unit)),
    };
    obj.insert("structure_constants".into(), Value::Array(constants));
    obj.insert("idempotents".into(), Value::Array(t.idempotents.iter().map(|e| vector_json(e)).collect()));
    let params: Map<String, Value> = t.params.iter().map(|(k, v)| (k.clone(), scalar_json(v))).collect();
    obj.insert("params".into(), Value::Object(params));
    Value::Object(obj)
}

struct Reader<'a> {
    origin: &'a str,
}

impl Reader<'_> {
    fn loc(&self, path: &str) -> String {
        format!("{}: {}", self.origin, path)
    }

    fn field<'v>(&self, obj: &'v Map<String, Value>, key: &str, path: &str) -> Result<&'v Value> {
        obj.get(key).ok_or_else(|| fmt_err(self.loc(path), format!("missing field \"{key}\"")))
    }

    fn object<'v>(&self, v: &'v Value, path: &str) -> Result<&'v Map<String, Value>> {
        v.as_object().ok_or_else(|| fmt_err(self.loc(path), "expected an object"))
    }

    fn array<'v>(&self, v: &'v Value, path: &str) -> Result<&'v Vec<Value>> {
        v.as_array().ok_or_else(|| fmt_err(self.loc(path), "expected an array"))
    }

    fn usize(&self, v: &Value, path: &str) -> Result<usize> {
        v.as_u64().map(|x| x as usize).ok_or_else(|| fmt_err(self.loc(path), "expected a nonnegative integer"))
    }

    fn scalar(&self, v: &Value, path: &str) -> Result<Scalar> {
        let parsed = match v {
            Value::String(s) => s.parse::<Scalar>().ok(),
            Value::Number(n) if n.is_i64() => n.as_i64().map(Scalar::from_int),
            _ => None,
        };
        parsed.ok_or_else(|| fmt_err(self.loc(path), format!("expected a rational such as \"-1/2\", got {v}")))
    }

    fn vector(&self, v: &Value, len: usize, path: &str) -> Result<Vec<Scalar>> {
        let a = self.array(v, path)?;
        if a.len() != len {
            return Err(fmt_err(self.loc(path), format!("expected {len} entries, found {}", a.len())));
        }
        a.iter().enumerate().map(|(i, x)| self.scalar(x, &format!("{path}[{i}]"))).collect()
    }

    fn matrix(&self, v: &Value, rows: usize, cols: usize, path: &str) -> Result<Matrix> {
        let a = self.array(v, path)?;
        if a.len() != rows {
            return Err(fmt_err(self.loc(path), format!("expected {rows} rows, found {}", a.len())));
        }
        let rows = a
            .iter()
            .enumerate()
            .map(|(r, row)| self.vector(row, cols, &format!("{path}[{r}]")))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_rows(cols, rows))
    }

    fn labels(&self, v: &Value, path: &str) -> Result<Vec<String>> {
        self.array(v, path)?
            .iter()
            .enumerate()
            .map(|(i, l)| {
                l.as_str().map(str::to_string).ok_or_else(|| fmt_err(self.loc(&format!("{path}[{i}]")), "expected a string"))
            })
            .collect()
    }
}

pub fn algebra_from_json(v: &Value, origin: &str) -> Result<Arc<Algebra>> {
    Algebra::new(table_from_json(v, origin)?)
}

/// The raw table, without validation.
pub fn table_from_json(v: &Value, origin: &str) -> Result<AlgebraTable> {
    let rd = Reader { origin };
    let obj = rd.object(v, "$")?;
    let labels = rd.labels(rd.field(obj, "basis_labels", "$")?, "basis_labels")?;
    let n = labels.len();
    if let Some(d) = obj.get("dim") {
        let d = rd.usize(d, "dim")?;
        if d != n {
            return Err(fmt_err(rd.loc("dim"), format!("dim {d} but {n} basis labels")));
        }
    }
    let unit = match (obj.get("unit_index"), obj.get("unit")) {
        (Some(i), None) => {
            let i = rd.usize(i, "unit_index")?;
            if i >= n {
                return Err(fmt_err(rd.loc("unit_index"), format!("index {i} out of range")));
            }
            let mut u = vec![Scalar::zero(); n];
            u[i] = Scalar::one();
            u
        }
        (None, Some(u)) => rd.vector(u, n, "unit")?,
        _ => return Err(fmt_err(rd.loc("$"), "exactly one of \"unit_index\" and \"unit\" is required")),
    };
    let mut constants = vec![vec![Scalar::zero(); n]; n * n];
    let sc = rd.array(rd.field(obj, "structure_constants", "$")?, "structure_constants")?;
    for (k, entry) in sc.iter().enumerate() {
        let path = format!("structure_constants[{k}]");
        let e = rd.array(entry, &path)?;
        if e.len() != 3 {
            return Err(fmt_err(rd.loc(&path), "expected [i, j, [coefficients]]"));
        }
        let i = rd.usize(&e[0], &format!("{path}[0]"))?;
        let j = rd.usize(&e[1], &format!("{path}[1]"))?;
        if i >= n || j >= n {
            return Err(fmt_err(rd.loc(&path), format!("basis index out of range for dim {n}")));
        }
        constants[i * n + j] = rd.vector(&e[2], n, &format!("{path}[2]"))?;
    }
    let idempotents = match obj.get("idempotents") {
        Some(v) => rd
            .array(v, "idempotents")?
            .iter()
            .enumerate()
            .map(|(k, e)| rd.vector(e, n, &format!("idempotents[{k}]")))
            .collect::<Result<Vec<_>>>()?,
        None => vec![unit.clone()],
    };
    let mut params = BTreeMap::new();
    if let Some(p) = obj.get("params") {
        for (k, v) in rd.object(p, "params")? {
            params.insert(k.clone(), rd.scalar(v, &format!("params.{k}"))?);
        }
    }
    Ok(AlgebraTable { labels, constants, unit, idempotents, params })
}

fn read_json(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io { path: path.display().to_string(), source: e })?;
    serde_json::from_str(&text).map_err(|e| fmt_err(format!("{}:{}:{}", path.display(), e.line(), e.column()), e.to_string()))
}

pub fn read_algebra(path: &Path) -> Result<Arc<Algebra>> {
    algebra_from_json(&read_json(path)?, &path.display().to_string())
}

/// How a module file refers to its algebra.
#[derive(Clone, Debug)]
pub enum AlgebraRef {
    Path(String),
    Inline,
    Omit,
}

pub fn module_to_json(m: &ModuleRep, algebra: &AlgebraRef) -> Value {
    let mut obj = Map::new();
    match algebra {
        AlgebraRef::Path(p) => {
            obj.insert("algebra".into(), json!(p));
        }
        AlgebraRef::Inline => {
            obj.insert("algebra".into(), algebra_to_json(m.algebra()));
        }
        AlgebraRef::Omit => {}
    }
    obj.insert("dim".into(), json!(m.dim()));
    let action: Map<String, Value> = m
        .algebra()
        .labels()
        .iter()
        .enumerate()
        .map(|(i, l)| (l.clone(), matrix_json(m.act(i))))
        .collect();
    obj.insert("action".into(), Value::Object(action));
    if let Some(ls) = m.labels() {
        obj.insert("labels".into(), json!(ls));
    }
    Value::Object(obj)
}

/// Reads a module. `base_dir` resolves relative algebra paths; `given` is
/// used when the file names no algebra and must agree with it otherwise.
pub fn module_from_json(
    v: &Value,
    origin: &str,
    base_dir: Option<&Path>,
    given: Option<&Arc<Algebra>>,
) -> Result<ModuleRep> {
    let rd = Reader { origin };
    let obj = rd.object(v, "$")?;
    let own = match obj.get("algebra") {
        Some(Value::String(p)) => {
            let path: PathBuf = base_dir.map_or_else(|| PathBuf::from(p), |d| d.join(p));
            Some(read_algebra(&path)?)
        }
        Some(a @ Value::Object(_)) => Some(algebra_from_json(a, &format!("{origin}: algebra"))?),
        Some(_) => return Err(fmt_err(rd.loc("algebra"), "expected a file name or an inline algebra")),
        None => None,
    };
    let alg = match (own, given) {
        (Some(a), Some(g)) => {
            if !a.same_as(g) {
                return Err(fmt_err(rd.loc("algebra"), "differs from the algebra given on the command line"));
            }
            g.clone()
        }
        (Some(a), None) => a,
        (None, Some(g)) => g.clone(),
        (None, None) => return Err(fmt_err(rd.loc("$"), "no algebra given")),
    };
    let dim = rd.usize(rd.field(obj, "dim", "$")?, "dim")?;
    let action = rd.object(rd.field(obj, "action", "$")?, "action")?;
    let mut gens = Vec::new();
    for (label, mat) in action {
        let i = alg
            .label_index(label)
            .ok_or_else(|| fmt_err(rd.loc(&format!("action.{label}")), "not a basis label of the algebra"))?;
        gens.push((i, rd.matrix(mat, dim, dim, &format!("action.{label}"))?));
    }
    let m = if dim == 0 {
        ModuleRep::zero(alg)
    } else {
        ModuleRep::from_generator_actions(alg, &gens).map_err(|e| fmt_err(rd.loc("action"), e.to_string()))?
    };
    match obj.get("labels") {
        Some(l) => {
            let ls = rd.labels(l, "labels")?;
            if ls.len() != dim {
                return Err(fmt_err(rd.loc("labels"), format!("{} labels for dim {dim}", ls.len())));
            }
            Ok(m.with_labels(ls))
        }
        None => Ok(m),
    }
}

pub fn read_module(path: &Path, given: Option<&Arc<Algebra>>) -> Result<ModuleRep> {
    module_from_json(&read_json(path)?, &path.display().to_string(), path.parent(), given)
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|e| Error::Io { path: path.display().to_string(), source: e })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_dual_numbers, build_lambda};
    use crate::constructions::one_point_extension;
    use crate::module::{build_m_alpha, is_isomorphic};

    #[test]
    fn algebra_round_trip() {
        let l = build_lambda(&Scalar::from_int(2)).unwrap();
        let v = algebra_to_json(&l);
        let back = algebra_from_json(&v, "test").unwrap();
        assert!(back.same_as(&l));
        assert_eq!(to_pretty(&algebra_to_json(&back)), to_pretty(&v));
        let m = build_m_alpha(&l, &Scalar::from_int(2)).unwrap();
        let b = one_point_extension(&l, &m).unwrap();
        let v = algebra_to_json(b.algebra());
        assert!(v.get("unit").is_some() && v.get("unit_index").is_none());
        assert!(algebra_from_json(&v, "b").unwrap().same_as(b.algebra()));
    }

    #[test]
    fn module_from_generators() {
        let d = build_dual_numbers();
        let v = json!({"dim": 2, "action": {"x": [["0", "1"], ["0", "0"]]}});
        let m = module_from_json(&v, "t", None, Some(&d)).unwrap();
        assert!(is_isomorphic(&m, &ModuleRep::regular(&d), 0).unwrap().is_isomorphic());
        let l = build_lambda(&Scalar::from_int(2)).unwrap();
        let m2 = build_m_alpha(&l, &Scalar::from_int(2)).unwrap();
        let v = module_to_json(&m2, &AlgebraRef::Inline);
        let back = module_from_json(&v, "t", None, None).unwrap();
        assert_eq!(back.actions(), m2.actions());
        assert_eq!(back.labels().unwrap(), ["v", "v'", "v''"]);
    }

    #[test]
    fn errors_carry_locations() {
        let d = build_dual_numbers();
        let v = json!({"dim": 2, "action": {"x": [["0", "1"], ["0", "zz"]]}});
        let e = module_from_json(&v, "m.json", None, Some(&d)).unwrap_err();
        assert!(e.to_string().contains("m.json: action.x[1][1]"), "{e}");
        let v = json!({"dim": 2, "action": {"w": [["0", "1"], ["0", "0"]]}});
        let e = module_from_json(&v, "m.json", None, Some(&d)).unwrap_err();
        assert!(e.to_string().contains("action.w"), "{e}");
        let v = json!({"dim": 1, "action": {"x": [["1"]]}});
        assert!(module_from_json(&v, "m.json", None, Some(&d)).is_err());
        let v = json!({"basis_labels": ["1"], "structure_constants": [[0, 0, ["1"]]]});
        let e = algebra_from_json(&v, "a.json").unwrap_err();
        assert!(e.to_string().contains("a.json: $"), "{e}");
    }
}
