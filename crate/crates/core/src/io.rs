//! Versioned JSON documents for algebras, cochains, jets, gauges and reports.
//!
//! Indices are 1-based in every document and rationals are written as
//! `"p/q"` strings in lowest terms (integers as `"p"`). Objects are emitted
//! with sorted keys, so equal values serialize to identical bytes.

use std::collections::HashSet;

use serde_json::{json, Map, Value};

use crate::algebra::Algebra;
use crate::catalog::catalog;
use crate::cochain::Cochain;
use crate::cohomology::{ClassCheck, CohomologyReport};
use crate::deformation::{DeformationJet, GaugeJet, Integration, ObstructionResult};
use crate::error::{Error, Result};
use crate::identities::IdentityReport;
use crate::linalg::{format_rational, parse_rational, Rational};

pub const ALGEBRA_FORMAT: &str = "altdef-algebra-v1";
pub const COCHAIN_FORMAT: &str = "altdef-cochain-v1";
pub const JET_FORMAT: &str = "altdef-jet-v1";
pub const GAUGE_FORMAT: &str = "altdef-gauge-v1";
pub const REPORT_FORMAT: &str = "altdef-report-v1";

fn fmt_err(msg: impl Into<String>) -> Error {
    Error::Format(msg.into())
}

/// Pretty JSON with a trailing newline.
pub fn to_canonical_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialize");
    s.push('\n');
    s
}

pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| fmt_err(format!("invalid JSON: {e}")))
}

fn as_object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| fmt_err(format!("{what}: expected an object")))
}

fn check_keys(map: &Map<String, Value>, allowed: &[&str], what: &str) -> Result<()> {
    for key in map.keys() {
        if !allowed.contains(&key.as_str()) {
            return Err(fmt_err(format!("{what}: unexpected key `{key}`")));
        }
    }
    Ok(())
}

fn field<'a>(map: &'a Map<String, Value>, key: &str, what: &str) -> Result<&'a Value> {
    map.get(key)
        .ok_or_else(|| fmt_err(format!("{what}: missing key `{key}`")))
}

fn check_format(map: &Map<String, Value>, expected: &str, what: &str) -> Result<()> {
    match field(map, "format", what)?.as_str() {
        Some(f) if f == expected => Ok(()),
        Some(f) => Err(fmt_err(format!(
            "{what}: format `{f}`, expected `{expected}`"
        ))),
        None => Err(fmt_err(format!("{what}: `format` must be a string"))),
    }
}

fn usize_field(map: &Map<String, Value>, key: &str, what: &str) -> Result<usize> {
    field(map, key, what)?
        .as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| fmt_err(format!("{what}: `{key}` must be a non-negative integer")))
}

fn array_field<'a>(map: &'a Map<String, Value>, key: &str, what: &str) -> Result<&'a Vec<Value>> {
    field(map, key, what)?
        .as_array()
        .ok_or_else(|| fmt_err(format!("{what}: `{key}` must be an array")))
}

fn parse_value(v: &Value, what: &str) -> Result<Rational> {
    match v {
        Value::String(s) => {
            parse_rational(s).map_err(|_| fmt_err(format!("{what}: invalid rational `{s}`")))
        }
        Value::Number(n) => n.as_i64().map(Rational::from).ok_or_else(|| {
            fmt_err(format!(
                "{what}: numbers must be integers; write fractions as \"p/q\""
            ))
        }),
        _ => Err(fmt_err(format!(
            "{what}: coefficient must be a string or integer"
        ))),
    }
}

/// Parses `[[i₁, …, i_arity, "p/q"], …]` with 1-based indices in `1..=dim`.
fn parse_entries(
    rows: &[Value],
    arity: usize,
    dim: usize,
    what: &str,
) -> Result<Vec<(Vec<usize>, Rational)>> {
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(rows.len());
    for (r, row) in rows.iter().enumerate() {
        let here = format!("{what}[{r}]");
        let items = row
            .as_array()
            .ok_or_else(|| fmt_err(format!("{here}: expected an array")))?;
        if items.len() != arity + 1 {
            return Err(fmt_err(format!(
                "{here}: expected {} indices and a coefficient, found {} items",
                arity,
                items.len()
            )));
        }
        let mut idx = Vec::with_capacity(arity);
        for item in &items[..arity] {
            let i = item
                .as_u64()
                .ok_or_else(|| fmt_err(format!("{here}: indices must be positive integers")))?
                as usize;
            if i == 0 || i > dim {
                return Err(fmt_err(format!("{here}: index {i} out of range 1..={dim}")));
            }
            idx.push(i - 1);
        }
        let c = parse_value(&items[arity], &here)?;
        if !seen.insert(idx.clone()) {
            let shown: Vec<String> = idx.iter().map(|i| (i + 1).to_string()).collect();
            return Err(fmt_err(format!(
                "{here}: duplicate entry ({})",
                shown.join(", ")
            )));
        }
        out.push((idx, c));
    }
    Ok(out)
}

fn rational_value(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

fn entries_value(idx_coeffs: impl Iterator<Item = (Vec<usize>, Rational)>) -> Value {
    Value::Array(
        idx_coeffs
            .map(|(idx, c)| {
                let mut row: Vec<Value> = idx.into_iter().map(|i| json!(i + 1)).collect();
                row.push(rational_value(&c));
                Value::Array(row)
            })
            .collect(),
    )
}

fn coords_value(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational_value).collect())
}

// algebras

pub fn algebra_to_value(a: &Algebra) -> Value {
    let n = a.dim();
    let table = (0..n * n * n).filter_map(|flat| {
        let (i, j, k) = (flat / (n * n), (flat / n) % n, flat % n);
        let c = a.constant(i, j, k);
        (*c != 0u32).then(|| (vec![i, j, k], c.clone()))
    });
    json!({
        "format": ALGEBRA_FORMAT,
        "name": a.name(),
        "dim": n,
        "basis": a.basis_names(),
        "table": entries_value(table),
    })
}

pub fn algebra_from_value(v: &Value) -> Result<Algebra> {
    let what = "algebra";
    let map = as_object(v, what)?;
    check_keys(map, &["format", "name", "dim", "basis", "table"], what)?;
    check_format(map, ALGEBRA_FORMAT, what)?;
    let name = field(map, "name", what)?
        .as_str()
        .ok_or_else(|| fmt_err("algebra: `name` must be a string"))?;
    let dim = usize_field(map, "dim", what)?;
    let basis = match map.get("basis") {
        None => Algebra::default_basis(dim),
        Some(b) => b
            .as_array()
            .ok_or_else(|| fmt_err("algebra: `basis` must be an array"))?
            .iter()
            .enumerate()
            .map(|(i, s)| {
                s.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| fmt_err(format!("algebra.basis[{i}]: expected a string")))
            })
            .collect::<Result<Vec<_>>>()?,
    };
    if basis.len() != dim {
        return Err(fmt_err(format!(
            "algebra: `basis` has {} names but `dim` is {dim}",
            basis.len()
        )));
    }
    let table = parse_entries(array_field(map, "table", what)?, 3, dim, "algebra.table")?;
    let table: Vec<_> = table
        .into_iter()
        .map(|(idx, c)| (idx[0], idx[1], idx[2], c))
        .collect();
    Algebra::from_table(name, basis, &table)
}

pub fn parse_algebra(text: &str) -> Result<Algebra> {
    algebra_from_value(&parse_json(text)?)
}

// cochains

fn cochain_entries(c: &Cochain) -> Value {
    entries_value(
        c.nonzero_entries()
            .into_iter()
            .map(|(idx, x)| (idx, x.clone())),
    )
}

pub fn cochain_to_value(c: &Cochain) -> Value {
    json!({
        "format": COCHAIN_FORMAT,
        "degree": c.degree(),
        "dim": c.dim(),
        "entries": cochain_entries(c),
    })
}

fn cochain_from_body(map: &Map<String, Value>, what: &str) -> Result<Cochain> {
    let degree = usize_field(map, "degree", what)?;
    let dim = usize_field(map, "dim", what)?;
    if degree > crate::cochain::MAX_DEGREE {
        return Err(fmt_err(format!("{what}: degree {degree} is not supported")));
    }
    let entries = parse_entries(
        array_field(map, "entries", what)?,
        degree + 1,
        dim,
        &format!("{what}.entries"),
    )?;
    Cochain::from_entries(degree, dim, &entries)
}

pub fn cochain_from_value(v: &Value) -> Result<Cochain> {
    let what = "cochain";
    let map = as_object(v, what)?;
    check_keys(map, &["format", "degree", "dim", "entries"], what)?;
    check_format(map, COCHAIN_FORMAT, what)?;
    cochain_from_body(map, what)
}

pub fn parse_cochain(text: &str) -> Result<Cochain> {
    cochain_from_value(&parse_json(text)?)
}

// jets and gauges

fn terms_value(terms: &[Cochain]) -> Value {
    Value::Array(
        terms
            .iter()
            .enumerate()
            .map(|(i, c)| {
                json!({
                    "order": i + 1,
                    "degree": c.degree(),
                    "dim": c.dim(),
                    "entries": cochain_entries(c),
                })
            })
            .collect(),
    )
}

fn terms_from_value(
    map: &Map<String, Value>,
    degree: usize,
    dim: usize,
    what: &str,
) -> Result<Vec<Cochain>> {
    let order = usize_field(map, "order", what)?;
    let mut terms: Vec<Option<Cochain>> = vec![None; order];
    for (t, term) in array_field(map, "terms", what)?.iter().enumerate() {
        let here = format!("{what}.terms[{t}]");
        let tm = as_object(term, &here)?;
        check_keys(tm, &["order", "degree", "dim", "entries"], &here)?;
        let k = usize_field(tm, "order", &here)?;
        if k == 0 || k > order {
            return Err(fmt_err(format!(
                "{here}: order {k} out of range 1..={order}"
            )));
        }
        let c = cochain_from_body(tm, &here)?;
        if c.degree() != degree {
            return Err(fmt_err(format!(
                "{here}: degree {} but terms must have degree {degree}",
                c.degree()
            )));
        }
        if c.dim() != dim {
            return Err(fmt_err(format!(
                "{here}: dim {} but the algebra has dim {dim}",
                c.dim()
            )));
        }
        if terms[k - 1].replace(c).is_some() {
            return Err(fmt_err(format!("{here}: duplicate term of order {k}")));
        }
    }
    Ok(terms
        .into_iter()
        .map(|c| c.unwrap_or_else(|| Cochain::zero(degree, dim)))
        .collect())
}

/// The algebra field of a jet: the catalog name when the base is a catalog
/// algebra, otherwise the inline algebra document.
fn algebra_reference(a: &Algebra) -> Value {
    match catalog(a.name()) {
        Ok(c) if c.same_multiplication(a) && c.basis_names() == a.basis_names() => json!(a.name()),
        _ => algebra_to_value(a),
    }
}

pub fn jet_to_value(jet: &DeformationJet) -> Value {
    json!({
        "format": JET_FORMAT,
        "algebra": algebra_reference(jet.base()),
        "order": jet.order(),
        "terms": terms_value(jet.terms()),
    })
}

/// Reads a jet over `base`. The document's algebra (a catalog name or an
/// inline algebra) must have the same multiplication table as `base`.
pub fn jet_from_value(v: &Value, base: &Algebra) -> Result<DeformationJet> {
    let what = "jet";
    let map = as_object(v, what)?;
    check_keys(map, &["format", "algebra", "order", "terms"], what)?;
    check_format(map, JET_FORMAT, what)?;
    let declared = match field(map, "algebra", what)? {
        Value::String(name) => catalog(name)?,
        other => algebra_from_value(other)?,
    };
    if !declared.same_multiplication(base) {
        return Err(fmt_err(format!(
            "jet: algebra `{}` does not match the given algebra `{}`",
            declared.name(),
            base.name()
        )));
    }
    let terms = terms_from_value(map, 2, base.dim(), what)?;
    DeformationJet::new(base.clone(), terms)
}

pub fn parse_jet(text: &str, base: &Algebra) -> Result<DeformationJet> {
    jet_from_value(&parse_json(text)?, base)
}

pub fn gauge_to_value(g: &GaugeJet) -> Value {
    json!({
        "format": GAUGE_FORMAT,
        "dim": g.dim(),
        "order": g.order(),
        "terms": terms_value(g.terms()),
    })
}

pub fn gauge_from_value(v: &Value, dim: usize) -> Result<GaugeJet> {
    let what = "gauge";
    let map = as_object(v, what)?;
    check_keys(map, &["format", "dim", "order", "terms"], what)?;
    check_format(map, GAUGE_FORMAT, what)?;
    let declared = usize_field(map, "dim", what)?;
    if declared != dim {
        return Err(fmt_err(format!(
            "gauge: dim {declared} but the algebra has dim {dim}"
        )));
    }
    GaugeJet::new(dim, terms_from_value(map, 1, dim, what)?)
}

pub fn parse_gauge(text: &str, dim: usize) -> Result<GaugeJet> {
    gauge_from_value(&parse_json(text)?, dim)
}

// reports

fn report(kind: &str, mut body: Map<String, Value>) -> Value {
    body.insert("format".into(), json!(REPORT_FORMAT));
    body.insert("kind".into(), json!(kind));
    Value::Object(body)
}

fn object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("json! object literal"),
    }
}

pub fn identity_report_value(r: &IdentityReport) -> Value {
    let witness = match &r.witness {
        None => Value::Null,
        Some(w) => json!({
            "indices": w.indices.iter().map(|i| i + 1).collect::<Vec<_>>(),
            "defect": coords_value(w.defect.coords()),
        }),
    };
    json!({ "identity": r.identity, "holds": r.holds, "witness": witness })
}

pub fn cohomology_report_value(algebra: &str, r: &CohomologyReport) -> Value {
    report(
        "cohomology",
        object(json!({
            "algebra": algebra,
            "theory": r.theory.name(),
            "degree": r.degree,
            "dims": {
                "cochains": r.dim_cochains,
                "cocycles": r.dim_cocycles,
                "coboundaries": r.dim_coboundaries,
                "H": r.dim_h,
            },
            "generators": r.generators.iter().map(cochain_to_value).collect::<Vec<_>>(),
            "verification": {
                "generators_are_cocycles": r.verification.generators_are_cocycles,
                "independent_mod_coboundaries": r.verification.independent_mod_coboundaries,
            },
            "flags": r.flags,
        })),
    )
}

pub fn class_check_value(algebra: &str, theory: &str, c: &ClassCheck) -> Value {
    report(
        "class",
        object(json!({
            "algebra": algebra,
            "theory": theory,
            "cocycle": c.cocycle,
            "coboundary": c.coboundary,
            "preimage": c.preimage.as_ref().map(cochain_to_value),
        })),
    )
}

pub fn obstruction_value(r: &ObstructionResult) -> Value {
    report(
        "obstruction",
        object(json!({
            "order": r.order,
            "obstruction": cochain_to_value(&r.obstruction),
            "is_cocycle": r.is_cocycle,
            "solvable": r.solvable,
            "extension": r.extension.as_ref().map(cochain_to_value),
        })),
    )
}

pub fn integration_value(r: &Integration, max_order: usize) -> Value {
    report(
        "integration",
        object(json!({
            "max_order": max_order,
            "stopped_at": r.stopped_at,
            "jet": jet_to_value(&r.jet),
            "failure": r.failure.as_ref().map(obstruction_value),
        })),
    )
}

/// Per-order residuals, as produced by the deformation equation and the
/// equivalence check.
pub fn residuals_value(kind: &str, residuals: &[Cochain]) -> Value {
    let rows: Vec<Value> = residuals
        .iter()
        .enumerate()
        .map(|(k, r)| json!({ "k": k, "zero": r.is_zero(), "residual": cochain_to_value(r) }))
        .collect();
    report(
        kind,
        object(json!({
            "all_zero": residuals.iter().all(Cochain::is_zero),
            "residuals": rows,
        })),
    )
}

pub fn normalization_value(jet: &DeformationJet, gauge: &GaugeJet) -> Value {
    let leading = jet.terms().iter().position(|t| !t.is_zero()).map(|i| i + 1);
    report(
        "normalization",
        object(json!({
            "jet": jet_to_value(jet),
            "gauge": gauge_to_value(gauge),
            "leading_order": leading,
        })),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::CATALOG_NAMES;

    fn catalog_sample() -> Vec<Algebra> {
        CATALOG_NAMES
            .iter()
            .map(|n| if *n == "zero-<n>" { "zero-3" } else { n })
            .map(|n| catalog(n).unwrap())
            .collect()
    }

    #[test]
    fn algebra_round_trip() {
        for a in catalog_sample() {
            let text = to_canonical_string(&algebra_to_value(&a));
            let back = parse_algebra(&text).unwrap();
            assert_eq!(back, a);
            assert_eq!(to_canonical_string(&algebra_to_value(&back)), text);
        }
    }

    #[test]
    fn algebra_document_shape() {
        let v = algebra_to_value(&catalog("alt4-a").unwrap());
        assert_eq!(v["format"], ALGEBRA_FORMAT);
        assert_eq!(v["table"][0], json!([1, 1, 1, "1"]));
        assert!(v["table"]
            .as_array()
            .unwrap()
            .contains(&json!([4, 3, 2, "-1"])));
    }

    #[test]
    fn algebra_parser_rejects_bad_input() {
        let base =
            r#"{"format":"altdef-algebra-v1","name":"x","dim":2,"basis":["a","b"],"table":TABLE}"#;
        let cases = [
            (r#"[[1,1,1,"1"],[1,1,1,"2"]]"#, "duplicate"),
            (r#"[[1,3,1,"1"]]"#, "out of range"),
            (r#"[[0,1,1,"1"]]"#, "out of range"),
            (r#"[[1,1,1,"1/0"]]"#, "invalid rational"),
            (r#"[[1,1,1,1.5]]"#, "integers"),
            (r#"[[1,1,"1"]]"#, "expected 3 indices"),
        ];
        for (table, needle) in cases {
            let err = parse_algebra(&base.replace("TABLE", table))
                .unwrap_err()
                .to_string();
            assert!(err.contains(needle), "{err} lacks {needle}");
        }
        assert!(
            parse_algebra(r#"{"format":"altdef-algebra-v2","name":"x","dim":0,"table":[]}"#)
                .is_err()
        );
        assert!(parse_algebra(
            r#"{"format":"altdef-algebra-v1","name":"x","dim":1,"table":[],"extra":1}"#
        )
        .is_err());
        assert!(parse_algebra("not json").is_err());
        let ok = parse_algebra(
            r#"{"format":"altdef-algebra-v1","name":"x","dim":1,"table":[[1,1,1,3]]}"#,
        )
        .unwrap();
        assert_eq!(ok.constant(0, 0, 0), &Rational::from(3));
    }

    #[test]
    fn cochain_round_trip() {
        let c = Cochain::from_entries(
            2,
            3,
            &[
                (vec![0, 2, 1], Rational::from_signeds(-3, 4)),
                (vec![2, 2, 2], Rational::from(7)),
            ],
        )
        .unwrap();
        let v = cochain_to_value(&c);
        assert_eq!(v["entries"], json!([[1, 3, 2, "-3/4"], [3, 3, 3, "7"]]));
        assert_eq!(parse_cochain(&to_canonical_string(&v)).unwrap(), c);
        let dup =
            r#"{"format":"altdef-cochain-v1","degree":1,"dim":2,"entries":[[1,1,"1"],[1,1,"1"]]}"#;
        assert!(parse_cochain(dup)
            .unwrap_err()
            .to_string()
            .contains("duplicate"));
    }

    #[test]
    fn jet_round_trip_and_algebra_match() {
        let m2 = catalog("m2").unwrap();
        let jet = DeformationJet::new(
            m2.clone(),
            vec![Cochain::basis(2, 4, 5), Cochain::zero(2, 4)],
        )
        .unwrap();
        let v = jet_to_value(&jet);
        assert_eq!(v["algebra"], json!("m2"));
        assert_eq!(jet_from_value(&v, &m2).unwrap(), jet);
        assert!(jet_from_value(&v, &catalog("alt4-a").unwrap()).is_err());

        let renamed = m2.renamed("custom");
        let v = jet_to_value(&DeformationJet::zero(renamed.clone(), 1));
        assert!(v["algebra"].is_object());
        assert_eq!(jet_from_value(&v, &renamed).unwrap().order(), 1);
        let missing = json!({"format": JET_FORMAT, "algebra": "m2", "order": 2, "terms": []});
        assert!(jet_from_value(&missing, &m2).unwrap().is_trivial());
        let bad = json!({"format": JET_FORMAT, "algebra": "m2", "order": 1,
            "terms": [{"order": 2, "degree": 2, "dim": 4, "entries": []}]});
        assert!(jet_from_value(&bad, &m2).is_err());
    }

    #[test]
    fn gauge_round_trip() {
        let g = GaugeJet::new(2, vec![Cochain::identity(2)]).unwrap();
        let v = gauge_to_value(&g);
        assert_eq!(gauge_from_value(&v, 2).unwrap(), g);
        assert!(gauge_from_value(&v, 3).is_err());
    }
}
