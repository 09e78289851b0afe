use std::fmt::Write;

use num_traits::ToPrimitive;
use serde::Serialize;

use super::{canonical_basis, CanonicalBasis};
use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::hecke::{HeckeAlgebra, HeckeParams};
use crate::shapes::{dominance_linear_extension, standard_tableaux, Multipartition, Partition};
use crate::specht::CellularTable;

/// `[S^λ : D^μ]` for `λ ⊢ n` (rows) and `r`-restricted `μ ⊢ n` (columns).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionMatrix {
    pub n: usize,
    pub r: u32,
    pub rows: Vec<Partition>,
    pub cols: Vec<Partition>,
    pub entries: Vec<Vec<i64>>,
}

impl DecompositionMatrix {
    pub fn entry(&self, lambda: &Partition, mu: &Partition) -> Option<i64> {
        let i = self.rows.iter().position(|x| x == lambda)?;
        let j = self.cols.iter().position(|x| x == mu)?;
        Some(self.entries[i][j])
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self
                .entries
                .iter()
                .enumerate()
                .all(|(i, row)| row.iter().enumerate().all(|(j, &x)| x == (i == j) as i64))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "r": self.r,
            "rows": self.rows.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "cols": self.cols.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "entries": self.entries,
        })
    }

    pub fn to_tex(&self) -> String {
        let mut out = String::new();
        writeln!(out, "\\begin{{tabular}}{{l|{}}}", "c".repeat(self.cols.len())).unwrap();
        let head: Vec<String> = self.cols.iter().map(|p| format!("${p}$")).collect();
        writeln!(out, " & {} \\\\ \\hline", head.join(" & ")).unwrap();
        for (lambda, row) in self.rows.iter().zip(&self.entries) {
            let cells: Vec<String> = row.iter().map(|x| if *x == 0 { ".".into() } else { x.to_string() }).collect();
            writeln!(out, "${lambda}$ & {} \\\\", cells.join(" & ")).unwrap();
        }
        out.push_str("\\end{tabular}\n");
        out
    }

    pub fn to_table(&self) -> String {
        let labels: Vec<String> = self.rows.iter().map(|p| p.to_string()).collect();
        let w = labels.iter().map(String::len).max().unwrap_or(0);
        let mut out = String::new();
        for (k, mu) in self.cols.iter().enumerate() {
            writeln!(out, "{:<w$}  col {}: {mu}", "", k + 1).unwrap();
        }
        for (label, row) in labels.iter().zip(&self.entries) {
            let cells: Vec<String> = row.iter().map(|x| if *x == 0 { ".".into() } else { x.to_string() }).collect();
            writeln!(out, "{label:<w$}  {}", cells.join(" ")).unwrap();
        }
        out
    }
}

/// Entry `(λ, μ)` is the coefficient of `λ` in `G(μ)` at `v = 1`.
pub fn decomposition_matrix(n: usize, r: u32) -> Result<DecompositionMatrix> {
    from_basis(&canonical_basis(n, r)?)
}

pub(crate) fn from_basis(basis: &CanonicalBasis) -> Result<DecompositionMatrix> {
    let all: Vec<Multipartition> = Partition::all(basis.n).into_iter().map(Multipartition::from_partition).collect();
    let rows: Vec<Partition> = dominance_linear_extension(&all)
        .into_iter()
        .map(|m| m.components()[0].clone())
        .collect();
    let cols = basis.order.clone();
    let mut entries = vec![vec![0i64; cols.len()]; rows.len()];
    for (j, mu) in cols.iter().enumerate() {
        for (lambda, c) in basis.vectors[mu].at_one() {
            let i = rows.iter().position(|x| *x == lambda.components()[0]).expect("row label");
            entries[i][j] = c
                .to_i64()
                .ok_or_else(|| Error::Invariant(format!("decomposition number at ({lambda}, {mu}) overflows")))?;
        }
    }
    Ok(DecompositionMatrix {
        n: basis.n,
        r: basis.r,
        rows,
        cols,
        entries,
    })
}

/// One row of the dimension identity `Σ_μ d_{λμ} dim D^μ = dim S^λ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionRow {
    pub lambda: String,
    pub lhs: usize,
    pub dim_specht: usize,
}

/// Compare the decomposition matrix with Gram ranks of the Hecke algebra of
/// `S_n` at `q = ζ_r`. Errors if the shapes with `D^μ ≠ 0` are not exactly
/// the `r`-restricted ones; otherwise returns one row per `λ ⊢ n`.
pub fn dimension_check(n: usize, r: u32) -> Result<Vec<DimensionRow>> {
    let d = decomposition_matrix(n, r)?;
    let q = crate::exactnum::root_of_unity(r, 1)?;
    let params = HeckeParams::new(1, n, q, vec![Scalar::from_int(1)])?;
    let alg = HeckeAlgebra::<Scalar>::new(&params)?;
    let table = CellularTable::new(&alg)?;
    let mut dims = Vec::with_capacity(d.rows.len());
    for lambda in &d.rows {
        let k = table.dim_simple(&Multipartition::from_partition(lambda.clone()))?;
        let restricted = d.cols.contains(lambda);
        if (k > 0) != restricted {
            return Err(Error::Invariant(format!(
                "dim D^{lambda} = {k} but {lambda} is{} {r}-restricted",
                if restricted { "" } else { " not" }
            )));
        }
        dims.push(k);
    }
    let col_dim: Vec<usize> = d
        .cols
        .iter()
        .map(|mu| dims[d.rows.iter().position(|x| x == mu).unwrap()])
        .collect();
    Ok(d.rows
        .iter()
        .zip(&d.entries)
        .map(|(lambda, row)| DimensionRow {
            lambda: lambda.to_string(),
            lhs: row.iter().zip(&col_dim).map(|(&e, &k)| e as usize * k).sum(),
            dim_specht: standard_tableaux(&Multipartition::from_partition(lambda.clone())).len(),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    #[test]
    fn small_matrices() {
        let d = decomposition_matrix(2, 2).unwrap();
        assert_eq!(d.rows, vec![p("[2]"), p("[1,1]")]);
        assert_eq!(d.cols, vec![p("[1,1]")]);
        assert_eq!(d.entries, vec![vec![1], vec![1]]);
        assert!(decomposition_matrix(3, 4).unwrap().is_identity());
        assert!(d.to_tex().contains("\\begin{tabular}"));
    }

    #[test]
    fn dimensions_at_minus_one() {
        for n in 0..=3 {
            for row in dimension_check(n, 2).unwrap() {
                assert_eq!(row.lhs, row.dim_specht, "{}", row.lambda);
            }
        }
    }
}
