//! JSON documents for every model type.
//!
//! Objects are built with keys in schema order. Integers within `±(2^53 - 1)`
//! are JSON numbers; larger magnitudes are decimal strings. Parsers accept
//! either form and run the model validators before returning.

use serde_json::{json, Map, Value};

use crate::abgroup::{AbGroup, AbHom};
use crate::error::Error;
use crate::matrix::Matrix;
use crate::ring2mod::{FinGroupTable, FinMod, FinRing, Mod2, Mod2Hom, ModHom, Strict2Ring};
use crate::scalar::Int;
use crate::sgp2::{ChainMap, Complex, Homotopy};

const MAX_SAFE: i64 = (1 << 53) - 1;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DocError {
    #[error("{path}: {msg}")]
    Schema { path: String, msg: String },
    #[error("{path}: {source}")]
    Model { path: String, source: Error },
}

pub type DocResult<T> = std::result::Result<T, DocError>;

fn schema<T>(path: &str, msg: impl Into<String>) -> DocResult<T> {
    Err(DocError::Schema { path: path.into(), msg: msg.into() })
}

fn model<T>(path: &str, r: crate::error::Result<T>) -> DocResult<T> {
    r.map_err(|source| DocError::Model { path: path.into(), source })
}

pub fn int_to_json<T: Int>(x: &T) -> Value {
    match x.to_i64() {
        Some(v) if (-MAX_SAFE..=MAX_SAFE).contains(&v) => Value::from(v),
        _ => Value::String(x.to_string()),
    }
}

pub fn int_from_json<T: Int>(v: &Value, path: &str) -> DocResult<T> {
    match v {
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(T::from_i64(i).expect("i64 fits")),
            None => schema(path, "expected an integer"),
        },
        Value::String(s) => match T::from_str_radix(s.trim(), 10) {
            Ok(x) => Ok(x),
            Err(_) => schema(path, format!("invalid integer string {s:?}")),
        },
        _ => schema(path, "expected an integer"),
    }
}

pub fn vec_to_json<T: Int>(x: &[T]) -> Value {
    Value::Array(x.iter().map(int_to_json).collect())
}

pub fn vec_from_json<T: Int>(v: &Value, path: &str) -> DocResult<Vec<T>> {
    let Value::Array(items) = v else { return schema(path, "expected an array") };
    items.iter().enumerate().map(|(i, x)| int_from_json(x, &format!("{path}[{i}]"))).collect()
}

pub fn matrix_to_json<T: Int>(m: &Matrix<T>) -> Value {
    Value::Array((0..m.rows()).map(|i| vec_to_json(m.row(i))).collect())
}

/// Parses a list of rows. `cols` fixes the width when known, which also makes
/// an empty list a valid `0 x cols` matrix.
pub fn matrix_from_json<T: Int>(v: &Value, path: &str, rows: Option<usize>, cols: usize) -> DocResult<Matrix<T>> {
    let Value::Array(items) = v else { return schema(path, "expected an array of rows") };
    let data: Vec<Vec<T>> =
        items.iter().enumerate().map(|(i, r)| vec_from_json(r, &format!("{path}[{i}]"))).collect::<DocResult<_>>()?;
    if let Some(r) = rows {
        if data.len() != r && !(data.is_empty() && cols == 0) {
            return schema(path, format!("expected {r} rows, found {}", data.len()));
        }
        if data.is_empty() {
            return Ok(Matrix::zeros(r, cols));
        }
    }
    if let Some(i) = data.iter().position(|row| row.len() != cols) {
        return schema(&format!("{path}[{i}]"), format!("expected {cols} entries"));
    }
    Ok(Matrix::from_rows(cols, data).expect("shape checked"))
}

fn obj<'a>(v: &'a Value, path: &str) -> DocResult<&'a Map<String, Value>> {
    v.as_object().map_or_else(|| schema(path, "expected an object"), Ok)
}

fn field<'a>(m: &'a Map<String, Value>, key: &str, path: &str) -> DocResult<&'a Value> {
    m.get(key).map_or_else(|| schema(path, format!("missing field {key:?}")), Ok)
}

fn usize_field(m: &Map<String, Value>, key: &str, path: &str) -> DocResult<usize> {
    match field(m, key, path)?.as_u64() {
        Some(n) => Ok(n as usize),
        None => schema(&format!("{path}.{key}"), "expected a non-negative integer"),
    }
}

fn expect_type(m: &Map<String, Value>, ty: &str, path: &str) -> DocResult<()> {
    match m.get("type").and_then(Value::as_str) {
        Some(t) if t == ty => Ok(()),
        None => Ok(()),
        Some(t) => schema(path, format!("expected type {ty:?}, found {t:?}")),
    }
}

pub fn document_type(v: &Value) -> Option<&str> {
    v.get("type").and_then(Value::as_str)
}

// ---- abelian groups and complexes

pub fn group_to_json<T: Int>(g: &AbGroup<T>) -> Value {
    json!({"type": "fgab", "gens": g.gens(), "rels": matrix_to_json(g.rels())})
}

pub fn group_from_json<T: Int>(v: &Value, path: &str) -> DocResult<AbGroup<T>> {
    let m = obj(v, path)?;
    expect_type(m, "fgab", path)?;
    let gens = usize_field(m, "gens", path)?;
    let rels = match m.get("rels") {
        Some(r) => matrix_from_json(r, &format!("{path}.rels"), None, gens)?,
        None => Matrix::zeros(0, gens),
    };
    model(path, AbGroup::new(gens, rels))
}

pub fn hom_to_json<T: Int>(f: &AbHom<T>) -> Value {
    json!({
        "type": "abhom",
        "src": group_to_json(f.src()),
        "dst": group_to_json(f.dst()),
        "matrix": matrix_to_json(f.matrix()),
    })
}

fn hom_matrix<T: Int>(
    m: &Map<String, Value>,
    key: &str,
    src: &AbGroup<T>,
    dst: &AbGroup<T>,
    path: &str,
) -> DocResult<AbHom<T>> {
    let p = format!("{path}.{key}");
    let matrix = matrix_from_json(field(m, key, path)?, &p, Some(dst.gens()), src.gens())?;
    model(&p, AbHom::new(src.clone(), dst.clone(), matrix))
}

pub fn hom_from_json<T: Int>(v: &Value, path: &str) -> DocResult<AbHom<T>> {
    let m = obj(v, path)?;
    expect_type(m, "abhom", path)?;
    let src = group_from_json(field(m, "src", path)?, &format!("{path}.src"))?;
    let dst = group_from_json(field(m, "dst", path)?, &format!("{path}.dst"))?;
    hom_matrix(m, "matrix", &src, &dst, path)
}

pub fn element_to_json<T: Int>(x: &[T]) -> Value {
    json!({"type": "elt", "coords": vec_to_json(x)})
}

pub fn complex_to_json<T: Int>(a: &Complex<T>) -> Value {
    json!({
        "type": "sgp2",
        "c1": group_to_json(a.c1()),
        "c0": group_to_json(a.c0()),
        "delta": matrix_to_json(a.delta().matrix()),
    })
}

pub fn complex_from_json<T: Int>(v: &Value, path: &str) -> DocResult<Complex<T>> {
    let m = obj(v, path)?;
    expect_type(m, "sgp2", path)?;
    let c1 = group_from_json(field(m, "c1", path)?, &format!("{path}.c1"))?;
    let c0 = group_from_json(field(m, "c0", path)?, &format!("{path}.c0"))?;
    Ok(Complex::new(hom_matrix(m, "delta", &c1, &c0, path)?))
}

pub fn chain_map_to_json<T: Int>(f: &ChainMap<T>) -> Value {
    json!({
        "type": "sgp2hom",
        "src": complex_to_json(f.src()),
        "dst": complex_to_json(f.dst()),
        "f1": matrix_to_json(f.f1().matrix()),
        "f0": matrix_to_json(f.f0().matrix()),
    })
}

pub fn chain_map_from_json<T: Int>(v: &Value, path: &str) -> DocResult<ChainMap<T>> {
    let m = obj(v, path)?;
    expect_type(m, "sgp2hom", path)?;
    let src = complex_from_json(field(m, "src", path)?, &format!("{path}.src"))?;
    let dst = complex_from_json(field(m, "dst", path)?, &format!("{path}.dst"))?;
    let f1 = hom_matrix(m, "f1", src.c1(), dst.c1(), path)?;
    let f0 = hom_matrix(m, "f0", src.c0(), dst.c0(), path)?;
    model(path, ChainMap::new(src, dst, f1, f0))
}

/// `(src, dst, f1, f0)`
pub type ChainMapParts<T> = (Complex<T>, Complex<T>, Matrix<T>, Matrix<T>);

/// Endpoints and level matrices of a chain-map document, shape-checked but
/// not validated as a chain map.
pub fn chain_map_parts_from_json<T: Int>(v: &Value, path: &str) -> DocResult<ChainMapParts<T>> {
    let m = obj(v, path)?;
    expect_type(m, "sgp2hom", path)?;
    let src: Complex<T> = complex_from_json(field(m, "src", path)?, &format!("{path}.src"))?;
    let dst: Complex<T> = complex_from_json(field(m, "dst", path)?, &format!("{path}.dst"))?;
    let f1 = matrix_from_json(field(m, "f1", path)?, &format!("{path}.f1"), Some(dst.c1().gens()), src.c1().gens())?;
    let f0 = matrix_from_json(field(m, "f0", path)?, &format!("{path}.f0"), Some(dst.c0().gens()), src.c0().gens())?;
    Ok((src, dst, f1, f0))
}

/// Endpoints and `t` matrix of a homotopy document; the endpoints must be
/// valid chain maps, `t` is only shape-checked.
pub fn homotopy_parts_from_json<T: Int>(v: &Value, path: &str) -> DocResult<(ChainMap<T>, ChainMap<T>, Matrix<T>)> {
    let m = obj(v, path)?;
    expect_type(m, "htpy", path)?;
    let src: ChainMap<T> = chain_map_from_json(field(m, "src", path)?, &format!("{path}.src"))?;
    let dst = chain_map_from_json(field(m, "dst", path)?, &format!("{path}.dst"))?;
    let rows = src.dst().c1().gens();
    let t = matrix_from_json(field(m, "t", path)?, &format!("{path}.t"), Some(rows), src.src().c0().gens())?;
    Ok((src, dst, t))
}

/// Homotopy with its endpoints spelled out.
pub fn homotopy_to_json<T: Int>(h: &Homotopy<T>) -> Value {
    json!({
        "type": "htpy",
        "src": chain_map_to_json(h.src()),
        "dst": chain_map_to_json(h.dst()),
        "t": matrix_to_json(h.t().matrix()),
    })
}

/// Homotopy whose endpoints are implied by the surrounding document.
pub fn bare_homotopy_to_json<T: Int>(h: &Homotopy<T>) -> Value {
    json!({"type": "htpy", "t": matrix_to_json(h.t().matrix())})
}

/// `src` and `dst` are read from the document when present, otherwise taken from `implied`.
pub fn homotopy_from_json<T: Int>(
    v: &Value,
    path: &str,
    implied: Option<(&ChainMap<T>, &ChainMap<T>)>,
) -> DocResult<Homotopy<T>> {
    let m = obj(v, path)?;
    expect_type(m, "htpy", path)?;
    let (src, dst) = match (m.get("src"), m.get("dst"), implied) {
        (Some(s), Some(d), _) => {
            (chain_map_from_json(s, &format!("{path}.src"))?, chain_map_from_json(d, &format!("{path}.dst"))?)
        }
        (None, None, Some((s, d))) => (s.clone(), d.clone()),
        _ => return schema(path, "homotopy needs both \"src\" and \"dst\""),
    };
    let t = hom_matrix(m, "t", src.src().c0(), src.dst().c1(), path)?;
    model(path, Homotopy::new(src, dst, t))
}

/// `(Γ, Σ, φ)` with `φ: Σ ∘ Γ => 0`.
pub struct Triple<T: Int> {
    pub gamma: ChainMap<T>,
    pub sigma: ChainMap<T>,
    pub phi: Homotopy<T>,
}

pub fn triple_from_json<T: Int>(v: &Value, path: &str) -> DocResult<Triple<T>> {
    let m = obj(v, path)?;
    expect_type(m, "triple", path)?;
    let gamma = chain_map_from_json(field(m, "gamma", path)?, &format!("{path}.gamma"))?;
    let sigma = chain_map_from_json(field(m, "sigma", path)?, &format!("{path}.sigma"))?;
    let composite = model(path, sigma.compose(&gamma))?;
    let zero = ChainMap::zero(composite.src(), composite.dst());
    let phi = homotopy_from_json(field(m, "phi", path)?, &format!("{path}.phi"), Some((&composite, &zero)))?;
    Ok(Triple { gamma, sigma, phi })
}

pub fn triple_to_json<T: Int>(t: &Triple<T>) -> Value {
    json!({
        "type": "triple",
        "gamma": chain_map_to_json(&t.gamma),
        "sigma": chain_map_to_json(&t.sigma),
        "phi": bare_homotopy_to_json(&t.phi),
    })
}

/// Lifting problem: `G: P -> B` against `F: A -> B`.
pub fn lift_problem_from_json<T: Int>(v: &Value, path: &str) -> DocResult<(ChainMap<T>, ChainMap<T>)> {
    let m = obj(v, path)?;
    expect_type(m, "liftproblem", path)?;
    let g = chain_map_from_json(field(m, "g", path)?, &format!("{path}.g"))?;
    let f = chain_map_from_json(field(m, "f", path)?, &format!("{path}.f"))?;
    Ok((g, f))
}

// ---- finite rings and modules

fn table_from_json(v: &Value, path: &str) -> DocResult<Vec<Vec<usize>>> {
    let Value::Array(rows) = v else { return schema(path, "expected an array of rows") };
    rows.iter().enumerate().map(|(i, r)| index_list_from_json(r, &format!("{path}[{i}]"))).collect()
}

fn index_list_from_json(v: &Value, path: &str) -> DocResult<Vec<usize>> {
    let Value::Array(items) = v else { return schema(path, "expected an array of indices") };
    items
        .iter()
        .enumerate()
        .map(|(i, x)| {
            x.as_u64().map(|n| n as usize).map_or_else(|| schema(&format!("{path}[{i}]"), "expected an index"), Ok)
        })
        .collect()
}

pub fn finring_to_json(r: &FinRing) -> Value {
    json!({
        "type": "finring",
        "size": r.size(),
        "add": r.add_table(),
        "mul": r.mul_table(),
        "zero": r.zero(),
        "one": r.one(),
    })
}

pub fn finring_from_json(v: &Value, path: &str) -> DocResult<FinRing> {
    let m = obj(v, path)?;
    expect_type(m, "finring", path)?;
    let size = usize_field(m, "size", path)?;
    let add = table_from_json(field(m, "add", path)?, &format!("{path}.add"))?;
    let mul = table_from_json(field(m, "mul", path)?, &format!("{path}.mul"))?;
    let (zero, one) = (usize_field(m, "zero", path)?, usize_field(m, "one", path)?);
    model(path, FinRing::new(size, add, mul, zero, one))
}

pub fn finmod_to_json(n: &FinMod) -> Value {
    json!({
        "type": "finmod",
        "ring": finring_to_json(n.ring()),
        "size": n.size(),
        "add": n.add_table(),
        "act": n.act_table(),
    })
}

/// Module nested in a document that already fixes the ring.
fn nested_finmod_to_json(n: &FinMod) -> Value {
    json!({"type": "finmod", "size": n.size(), "add": n.add_table(), "act": n.act_table()})
}

pub fn finmod_from_json(v: &Value, path: &str, ring: Option<&FinRing>) -> DocResult<FinMod> {
    let m = obj(v, path)?;
    expect_type(m, "finmod", path)?;
    let own = m.get("ring").map(|r| finring_from_json(r, &format!("{path}.ring"))).transpose()?;
    let ring = match (own, ring) {
        (Some(a), Some(b)) if &a != b => return schema(path, "module ring differs from the enclosing ring"),
        (Some(a), _) => a,
        (None, Some(b)) => b.clone(),
        (None, None) => return schema(path, "missing field \"ring\""),
    };
    let size = usize_field(m, "size", path)?;
    let add = table_from_json(field(m, "add", path)?, &format!("{path}.add"))?;
    let act = table_from_json(field(m, "act", path)?, &format!("{path}.act"))?;
    model(path, FinMod::new(ring, size, add, act))
}

pub fn modhom_to_json(f: &ModHom) -> Value {
    json!({
        "type": "modhom",
        "src": finmod_to_json(f.src()),
        "dst": finmod_to_json(f.dst()),
        "map": f.map(),
    })
}

pub fn modhom_from_json(v: &Value, path: &str) -> DocResult<ModHom> {
    let m = obj(v, path)?;
    expect_type(m, "modhom", path)?;
    let src = finmod_from_json(field(m, "src", path)?, &format!("{path}.src"), None)?;
    let dst = finmod_from_json(field(m, "dst", path)?, &format!("{path}.dst"), None)?;
    let map = index_list_from_json(field(m, "map", path)?, &format!("{path}.map"))?;
    model(path, ModHom::new(src, dst, map))
}

pub fn fingroup_to_json(g: &FinGroupTable) -> Value {
    json!({"type": "fingroup", "size": g.size(), "add": g.add_table(), "zero": g.zero()})
}

pub fn fingroup_from_json(v: &Value, path: &str) -> DocResult<FinGroupTable> {
    let m = obj(v, path)?;
    expect_type(m, "fingroup", path)?;
    let size = usize_field(m, "size", path)?;
    let add = table_from_json(field(m, "add", path)?, &format!("{path}.add"))?;
    model(path, FinGroupTable::new(size, add, usize_field(m, "zero", path)?))
}

pub fn ring2_to_json(r: &Strict2Ring) -> Value {
    json!({
        "type": "ring2",
        "r1": fingroup_to_json(r.r1()),
        "r0": finring_to_json(r.r0()),
        "delta": r.delta(),
        "left": r.left(),
        "right": r.right(),
    })
}

pub fn ring2_from_json(v: &Value, path: &str) -> DocResult<Strict2Ring> {
    let m = obj(v, path)?;
    expect_type(m, "ring2", path)?;
    let r1 = fingroup_from_json(field(m, "r1", path)?, &format!("{path}.r1"))?;
    let r0 = finring_from_json(field(m, "r0", path)?, &format!("{path}.r0"))?;
    let delta = index_list_from_json(field(m, "delta", path)?, &format!("{path}.delta"))?;
    let left = table_from_json(field(m, "left", path)?, &format!("{path}.left"))?;
    let right = table_from_json(field(m, "right", path)?, &format!("{path}.right"))?;
    model(path, Strict2Ring::new(r1, r0, delta, left, right))
}

pub fn mod2_to_json(a: &Mod2) -> Value {
    json!({
        "type": "mod2",
        "ring": finring_to_json(a.ring()),
        "m1": nested_finmod_to_json(a.m1()),
        "m0": nested_finmod_to_json(a.m0()),
        "delta": a.delta().map(),
    })
}

pub fn mod2_from_json(v: &Value, path: &str) -> DocResult<Mod2> {
    let m = obj(v, path)?;
    expect_type(m, "mod2", path)?;
    let ring = finring_from_json(field(m, "ring", path)?, &format!("{path}.ring"))?;
    let m1 = finmod_from_json(field(m, "m1", path)?, &format!("{path}.m1"), Some(&ring))?;
    let m0 = finmod_from_json(field(m, "m0", path)?, &format!("{path}.m0"), Some(&ring))?;
    let delta = index_list_from_json(field(m, "delta", path)?, &format!("{path}.delta"))?;
    model(path, Mod2::from_tables(m1, m0, delta))
}

pub fn mod2hom_to_json(f: &Mod2Hom) -> Value {
    json!({
        "type": "mod2hom",
        "src": mod2_to_json(f.src()),
        "dst": mod2_to_json(f.dst()),
        "f1": f.f1().map(),
        "f0": f.f0().map(),
    })
}

pub fn mod2hom_from_json(v: &Value, path: &str) -> DocResult<Mod2Hom> {
    let m = obj(v, path)?;
    expect_type(m, "mod2hom", path)?;
    let src = mod2_from_json(field(m, "src", path)?, &format!("{path}.src"))?;
    let dst = mod2_from_json(field(m, "dst", path)?, &format!("{path}.dst"))?;
    let f1 = index_list_from_json(field(m, "f1", path)?, &format!("{path}.f1"))?;
    let f0 = index_list_from_json(field(m, "f0", path)?, &format!("{path}.f0"))?;
    model(path, Mod2Hom::from_tables(src, dst, f1, f0))
}

pub fn lift_problem_mod_from_json(v: &Value, path: &str) -> DocResult<(Mod2Hom, Mod2Hom)> {
    let m = obj(v, path)?;
    expect_type(m, "liftproblem-mod", path)?;
    let g = mod2hom_from_json(field(m, "g", path)?, &format!("{path}.g"))?;
    let f = mod2hom_from_json(field(m, "f", path)?, &format!("{path}.f"))?;
    Ok((g, f))
}
