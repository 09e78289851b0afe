use std::fmt::Write;

use serde_json::{json, Value};

use super::{Common, Outcome, Output, EXIT_ASSERTION};
use crate::canon::{canonical_basis, decomposition_matrix, dimension_check};
use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::fock::{crystal_graph_dot, e_op, enumerate_kleshchev, f_op, is_kleshchev, kleshchev_series, FockVector};
use crate::hecke::{is_semisimple, parameter_orbits, HeckeAlgebra};
use crate::linalg::{self, Matrix};
use crate::multiseg::{aperiodic_series, count_family, count_multisegments, enumerate_multisegments, is_aperiodic};
use crate::shapes::{Modulus, Multipartition};
use crate::specht::CellularTable;

fn structured(json: Value, table: String, tex: String) -> Output {
    Output::Structured { json, table, tex }
}

fn lambda_arg(c: &Common) -> Result<Option<Multipartition>> {
    c.lambda.as_deref().map(Multipartition::parse).transpose()
}

fn matrix_strings(g: &Matrix<Scalar>) -> Vec<Vec<String>> {
    g.iter().map(|row| row.iter().map(|x| x.to_string()).collect()).collect()
}

fn tex_matrix(g: &[Vec<String>]) -> String {
    if g.is_empty() {
        return "\\begin{pmatrix}\\end{pmatrix}".into();
    }
    let rows: Vec<String> = g.iter().map(|r| r.join(" & ")).collect();
    format!("\\begin{{pmatrix}} {} \\end{{pmatrix}}", rows.join(" \\\\ "))
}

pub(super) fn semisimple(c: &Common) -> Result<Output> {
    let p = c.params()?;
    let verdict = is_semisimple(&p);
    let orbits = parameter_orbits(&p, p.n());
    let json = json!({
        "params": p.to_string(),
        "semisimple": verdict.semisimple,
        "witness": verdict.witness,
        "orbits": orbits,
    });
    let witness = verdict.witness.clone().unwrap_or_else(|| "-".into());
    let table = format!("params     {p}\nsemisimple {}\nwitness    {witness}\n", verdict.semisimple);
    let tex = format!(
        "% {p}\n\\text{{semisimple}} = \\text{{{}}}, \\quad \\text{{witness}}: {}\n",
        verdict.semisimple,
        verdict.witness.as_deref().unwrap_or("none")
    );
    Ok(structured(json, table, tex))
}

pub(super) fn gram(c: &Common) -> Result<Output> {
    let p = c.hecke_params()?;
    let alg = HeckeAlgebra::<Scalar>::new(&p)?;
    let table = CellularTable::new(&alg)?;
    let shapes: Vec<Multipartition> = match lambda_arg(c)? {
        Some(l) => vec![l],
        None => table.shapes().iter().map(|d| d.lambda.clone()).collect(),
    };
    let mut entries = Vec::new();
    let mut text = format!("params {p}\n");
    let mut tex = format!("% {p}\n");
    for lambda in &shapes {
        let g = table.gram(lambda)?;
        let rank = linalg::rank(&g);
        let gs = matrix_strings(&g);
        writeln!(text, "{lambda}  rank {rank}").unwrap();
        for row in &gs {
            writeln!(text, "  {}", row.join(" ")).unwrap();
        }
        writeln!(tex, "G_{{{lambda}}} = {} \\quad \\operatorname{{rank}} = {rank}\\\\", tex_matrix(&gs)).unwrap();
        entries.push(json!({"lambda": lambda.to_string(), "gram": gs, "rank": rank}));
    }
    Ok(structured(json!({"params": p.to_string(), "shapes": entries}), text, tex))
}

pub(super) fn simples(c: &Common) -> Result<Output> {
    let p = c.hecke_params()?;
    let alg = HeckeAlgebra::<Scalar>::new(&p)?;
    let labels: Vec<String> = CellularTable::new(&alg)?.simple_labels()?.iter().map(|l| l.to_string()).collect();
    let table = format!("params {p}\ncount  {}\n{}\n", labels.len(), labels.join("\n"));
    let tex = format!("% {p}\n\\{{{}\\}}\n", labels.join(",\\ "));
    Ok(structured(
        json!({"params": p.to_string(), "count": labels.len(), "simple_labels": labels}),
        table,
        tex,
    ))
}

pub(super) fn kleshchev(c: &Common, enumerate: Option<usize>, series: Option<usize>) -> Result<Output> {
    let cfg = c.fock_config()?;
    let head = json!({"r": cfg.modulus().to_string(), "gamma": cfg.gamma()});
    if let Some(n) = series {
        let s = kleshchev_series(&cfg, c.cap_n(n)?)?;
        let text: Vec<String> = s.iter().map(|x| x.to_string()).collect();
        return Ok(structured(
            json!({"config": head, "series": s}),
            format!("{}\n", text.join(" ")),
            format!("{}\n", text.join(", ")),
        ));
    }
    if let Some(n) = enumerate.or(if c.lambda.is_none() { c.n } else { None }) {
        let list: Vec<String> = enumerate_kleshchev(&cfg, c.cap_n(n)?)?.iter().map(|l| l.to_string()).collect();
        return Ok(structured(
            json!({"config": head, "n": n, "count": list.len(), "kleshchev": list}),
            format!("{}\n", list.join("\n")),
            format!("\\{{{}\\}}\n", list.join(",\\ ")),
        ));
    }
    let lambda = lambda_arg(c)?.ok_or_else(|| Error::InvalidArgument("give --lambda, --enumerate N or --series N".into()))?;
    c.cap_n(lambda.size())?;
    let k = is_kleshchev(&lambda, &cfg)?;
    Ok(structured(
        json!({"config": head, "lambda": lambda.to_string(), "kleshchev": k}),
        format!("{lambda} {k}\n"),
        format!("{lambda}: {k}\n"),
    ))
}

pub(super) fn crystal(c: &Common) -> Result<Output> {
    let cfg = c.fock_config()?;
    let n = c.cap_n(c.require_n()?)?;
    Ok(Output::Raw(crystal_graph_dot(&cfg, n)?))
}

pub(super) fn fock_apply(c: &Common, word: &str) -> Result<Output> {
    let cfg = c.fock_config()?;
    let start = lambda_arg(c)?.unwrap_or_else(|| Multipartition::empty(cfg.level()));
    let mut letters = Vec::new();
    for tok in word.split(|ch: char| ch.is_whitespace() || ch == ',').filter(|t| !t.is_empty()) {
        let (op, i) = tok.split_at(1);
        let i: i64 = i.parse().map_err(|_| Error::Parse(format!("bad letter '{tok}' in --word")))?;
        if op != "e" && op != "f" {
            return Err(Error::Parse(format!("bad letter '{tok}' in --word")));
        }
        letters.push((op == "f", cfg.reduce(i)));
    }
    c.cap_n(start.size() + letters.len())?;
    let mut x = FockVector::basis(&start);
    for &(is_f, i) in letters.iter().rev() {
        x = if is_f { f_op(&cfg, &x, i)? } else { e_op(&cfg, &x, i)? };
    }
    let text: String = x.terms().map(|(l, p)| format!("{l}  {p}\n")).collect();
    let tex = format!("{x}\n");
    Ok(structured(json!({"start": start.to_string(), "word": word, "vector": x.to_json()}), text, tex))
}

fn finite_r(c: &Common) -> Result<u32> {
    match c.modulus()? {
        Some(Modulus::Finite(r)) => Ok(r),
        _ => Err(Error::InvalidArgument("a finite -r is required".into())),
    }
}

pub(super) fn llt(c: &Common, matrix_only: bool, basis_only: bool) -> Result<Output> {
    let n = c.cap_n(c.require_n()?)?;
    let r = finite_r(c)?;
    let basis = canonical_basis(n, r)?;
    let d = decomposition_matrix(n, r)?;
    let mut json = serde_json::Map::new();
    let mut text = String::new();
    let mut tex = String::new();
    if !matrix_only {
        json.insert("canonical_basis".into(), basis.to_json());
        for lambda in &basis.order {
            writeln!(text, "G({lambda}) = {}", basis.vectors[lambda]).unwrap();
            writeln!(tex, "G({lambda}) = {}\\\\", basis.vectors[lambda]).unwrap();
        }
    }
    if !basis_only {
        json.insert("decomposition_matrix".into(), d.to_json());
        text.push_str(&d.to_table());
        tex.push_str(&d.to_tex());
    }
    Ok(structured(Value::Object(json), text, tex))
}

pub(super) fn decomp_check(c: &Common) -> Result<Outcome> {
    let n = c.cap_n(c.require_n()?)?;
    let r = finite_r(c)?;
    let rows = dimension_check(n, r)?;
    let ok = rows.iter().all(|x| x.lhs == x.dim_specht);
    let mut text = String::new();
    for row in &rows {
        writeln!(text, "{}  {} {}", row.lambda, row.lhs, row.dim_specht).unwrap();
    }
    writeln!(text, "{}", if ok { "PASS" } else { "FAIL" }).unwrap();
    let tex = text.clone();
    Ok(Outcome {
        output: structured(json!({"n": n, "r": r, "ok": ok, "rows": rows}), text, tex),
        code: if ok { 0 } else { EXIT_ASSERTION },
    })
}

pub(super) fn multiseg(c: &Common, enumerate: bool, labels: usize, window: Option<usize>) -> Result<Output> {
    let n = c.cap_n(c.require_n()?)?;
    let modulus = c.modulus()?.ok_or_else(|| Error::InvalidArgument("-r is required".into()))?;
    let window = window.unwrap_or(n.max(1));
    let (total, aperiodic) = count_multisegments(n, modulus, window);
    let mut json = serde_json::Map::new();
    json.insert("n".into(), json!(n));
    json.insert("r".into(), json!(modulus.to_string()));
    json.insert("total".into(), json!(total));
    json.insert("aperiodic".into(), json!(aperiodic));
    let mut text = format!("total {total}\naperiodic {aperiodic}\n");
    match modulus {
        Modulus::Finite(r) => {
            let series = aperiodic_series(n, r)?;
            let family = count_family(n, r, labels)?;
            json.insert("series".into(), json!(series));
            json.insert("labels".into(), json!(labels));
            json.insert("family".into(), json!(family.to_string()));
            writeln!(text, "family({labels}) {family}").unwrap();
        }
        Modulus::Infinite => {
            json.insert("window".into(), json!(window));
        }
    }
    if enumerate {
        let list: Vec<String> = enumerate_multisegments(n, modulus, window)
            .into_iter()
            .filter(|m| is_aperiodic(m, modulus))
            .map(|m| m.to_string())
            .collect();
        for m in &list {
            writeln!(text, "{m}").unwrap();
        }
        json.insert("multisegments".into(), json!(list));
    }
    let tex = text.clone();
    Ok(structured(Value::Object(json), text, tex))
}
