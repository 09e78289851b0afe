use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactnum::Field;
use crate::hecke::{Acc, HeckeAlgebra, HeckeElement, Sparse};
use crate::linalg;
use crate::shapes::{
    canonical_tableau, dominance_linear_extension, dominates_strictly, Multipartition, Permutation,
    StandardTableau,
};

/// Row stabilizer of `t^λ`.
pub fn row_stabilizer(lambda: &Multipartition) -> Vec<Permutation> {
    let t = canonical_tableau(lambda);
    let n = lambda.size();
    let row_of: Vec<(usize, usize)> = (1..=n)
        .map(|k| {
            let x = t.cell_of(k);
            (x.comp, x.row)
        })
        .collect();
    Permutation::all(n)
        .into_iter()
        .filter(|w| (1..=n).all(|k| row_of[k - 1] == row_of[w.apply(k) - 1]))
        .collect()
}

/// `x_λ = Σ_{w ∈ S_λ} a_w`.
pub fn x_lambda<F: Field>(alg: &HeckeAlgebra<F>, lambda: &Multipartition) -> Result<HeckeElement<F>> {
    check_shape(alg, lambda)?;
    let stab = row_stabilizer(lambda);
    alg.from_terms(stab.iter().map(|w| (alg.basis().perm_index(w).unwrap(), alg.one_scalar())))
}

/// `u_a = Π_k (L_1 - v_k)⋯(L_{a_k} - v_k)` for the a-sequence of `λ`.
pub fn u_a<F: Field>(alg: &HeckeAlgebra<F>, lambda: &Multipartition) -> Result<HeckeElement<F>> {
    check_shape(alg, lambda)?;
    let mut u = alg.unit();
    for (k, &ak) in lambda.a_sequence().iter().enumerate() {
        let vk = alg.scalar(alg.v()[k].clone());
        for i in 1..=ak {
            let factor = alg.sub(&alg.murphy(i)?, &vk)?;
            u = alg.mul(&factor, &u)?;
        }
    }
    Ok(u)
}

fn check_shape<F: Field>(alg: &HeckeAlgebra<F>, lambda: &Multipartition) -> Result<()> {
    if lambda.level() != alg.m() || lambda.size() != alg.n() {
        return Err(Error::ShapeMismatch(format!(
            "{lambda} is not a multipartition of level {} and size {}",
            alg.m(),
            alg.n()
        )));
    }
    Ok(())
}

/// `m_λ = x_λ u_a`, checked against `u_a x_λ`.
pub fn m_lambda<F: Field>(alg: &HeckeAlgebra<F>, lambda: &Multipartition) -> Result<HeckeElement<F>> {
    let x = x_lambda(alg, lambda)?;
    let u = u_a(alg, lambda)?;
    let xu = alg.mul(&x, &u)?;
    if xu != alg.mul(&u, &x)? {
        return Err(Error::Invariant(format!("x_λ u_a ≠ u_a x_λ for λ = {lambda}")));
    }
    Ok(xu)
}

/// Data attached to one shape of the cellular basis.
pub struct ShapeData<F: Field> {
    pub lambda: Multipartition,
    pub tableaux: Vec<StandardTableau>,
    pub m_lambda: HeckeElement<F>,
    /// `m_λ a_{d(t)}` for each tableau `t`.
    pub(crate) right_rows: Vec<HeckeElement<F>>,
    /// Position of `m_{t^λ t^λ}` in the cellular basis.
    pub offset: usize,
}

impl<F: Field> ShapeData<F> {
    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    fn build(alg: &HeckeAlgebra<F>, lambda: Multipartition, offset: usize) -> Result<Self> {
        let tableaux = crate::shapes::standard_tableaux(&lambda);
        let m = m_lambda(alg, &lambda)?;
        let right_rows = tableaux
            .iter()
            .map(|t| alg.mul(&m, &alg.a_w(&t.d())?))
            .collect::<Result<Vec<_>>>()?;
        Ok(ShapeData {
            lambda,
            tableaux,
            m_lambda: m,
            right_rows,
            offset,
        })
    }
}

/// Position `(shape, s, t)` of `m_st` in the cellular basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellIndex {
    pub shape: usize,
    pub s: usize,
    pub t: usize,
}

fn all_shape_data<F: Field>(alg: &HeckeAlgebra<F>) -> Result<Vec<ShapeData<F>>> {
    let shapes = dominance_linear_extension(&Multipartition::all(alg.m(), alg.n()));
    let mut offsets = Vec::with_capacity(shapes.len());
    let mut acc = 0;
    for l in &shapes {
        offsets.push(acc);
        let k = crate::shapes::standard_tableaux(l).len();
        acc += k * k;
    }
    shapes
        .into_par_iter()
        .zip(offsets)
        .map(|(l, off)| ShapeData::build(alg, l, off))
        .collect()
}

/// `m_st = a_{d(s)}^* m_λ a_{d(t)}` in the normal-form basis.
fn m_st<F: Field>(alg: &HeckeAlgebra<F>, data: &ShapeData<F>, s: usize, t: usize) -> Result<HeckeElement<F>> {
    let mut x = data.right_rows[t].clone();
    // a_{d(s)}^* = a_{d(s)^{-1}}: apply the word of d(s) left to right
    for &j in data.tableaux[s].d().reduced_word().iter() {
        x = alg.left_mul_gen(&x, j + 1)?;
    }
    Ok(x)
}

fn cellular_rows<F: Field>(alg: &HeckeAlgebra<F>, shapes: &[ShapeData<F>]) -> Result<Vec<Sparse<F>>> {
    let jobs: Vec<(usize, usize, usize)> = shapes
        .iter()
        .enumerate()
        .flat_map(|(i, d)| {
            let k = d.dim();
            (0..k).flat_map(move |s| (0..k).map(move |t| (i, s, t)))
        })
        .collect();
    jobs.into_par_iter()
        .map(|(i, s, t)| Ok(m_st(alg, &shapes[i], s, t)?.terms().map(|(b, c)| (b as u32, c.clone())).collect()))
        .collect()
}

/// Rank of the matrix of all `m_st` over the normal-form basis. Cheap enough
/// for modular images of the largest algebras, where no inverse is needed.
pub fn cellular_rank<F: Field>(alg: &HeckeAlgebra<F>) -> Result<usize> {
    let shapes = all_shape_data(alg)?;
    let rows = cellular_rows(alg, &shapes)?;
    Ok(linalg::sparse_gauss_jordan(&rows, alg.dim(), &alg.one_scalar(), false).0)
}

/// The cellular basis `{m_st}` of `H_n` with a precomputed change of basis.
pub struct CellularTable<'a, F: Field> {
    alg: &'a HeckeAlgebra<F>,
    shapes: Vec<ShapeData<F>>,
    index: Vec<CellIndex>,
    /// Row `b`: cellular coordinates of the `b`-th normal basis element.
    inverse: Vec<Sparse<F>>,
}

impl<'a, F: Field> CellularTable<'a, F> {
    pub fn new(alg: &'a HeckeAlgebra<F>) -> Result<Self> {
        let shapes = all_shape_data(alg)?;
        let rows = cellular_rows(alg, &shapes)?;
        let total: usize = shapes.iter().map(|d| d.dim() * d.dim()).sum();
        if total != alg.dim() {
            return Err(Error::Invariant(format!(
                "Σ (#std λ)^2 = {total} but the algebra has dimension {}",
                alg.dim()
            )));
        }
        let (_, inverse) = linalg::sparse_gauss_jordan(&rows, alg.dim(), &alg.one_scalar(), true);
        let inverse = inverse.ok_or_else(|| Error::Invariant("cellular basis matrix is singular".into()))?;
        let mut index = Vec::with_capacity(total);
        for (i, d) in shapes.iter().enumerate() {
            for s in 0..d.dim() {
                for t in 0..d.dim() {
                    index.push(CellIndex { shape: i, s, t });
                }
            }
        }
        Ok(CellularTable {
            alg,
            shapes,
            index,
            inverse,
        })
    }

    pub fn algebra(&self) -> &HeckeAlgebra<F> {
        self.alg
    }

    /// Shapes in the fixed linear extension of dominance (most dominant first).
    pub fn shapes(&self) -> &[ShapeData<F>] {
        &self.shapes
    }

    pub fn shape_position(&self, lambda: &Multipartition) -> Result<usize> {
        self.shapes
            .iter()
            .position(|d| &d.lambda == lambda)
            .ok_or_else(|| Error::ShapeMismatch(format!("{lambda} is not a shape of this algebra")))
    }

    pub fn m_st(&self, shape: usize, s: usize, t: usize) -> Result<HeckeElement<F>> {
        m_st(self.alg, &self.shapes[shape], s, t)
    }

    /// Coordinates of `x` in the cellular basis, zero coordinates omitted.
    pub fn expand(&self, x: &HeckeElement<F>) -> Vec<(CellIndex, F)> {
        let mut acc = Acc::new();
        for (b, c) in x.terms() {
            acc.add_scaled(&self.inverse[b], c);
        }
        acc.finish()
            .into_iter()
            .map(|(i, c)| (self.index[i as usize], c))
            .collect()
    }

    /// Reassemble an element from cellular coordinates.
    pub fn assemble(&self, coords: &[(CellIndex, F)]) -> Result<HeckeElement<F>> {
        let mut acc = Acc::new();
        for (ci, c) in coords {
            let e = self.m_st(ci.shape, ci.s, ci.t)?;
            let sp: Sparse<F> = e.terms().map(|(b, x)| (b as u32, x.clone())).collect();
            acc.add_scaled(&sp, c);
        }
        Ok(self.alg.element_from_sparse(acc.finish()))
    }

    /// Expand `x` and keep the coordinates at shape `λ` modulo the ideal of
    /// shapes strictly dominating `λ`. Coordinates at shapes that neither
    /// equal nor dominate `λ` must vanish.
    pub(crate) fn expand_mod_ideal(&self, x: &HeckeElement<F>, shape: usize) -> Result<Vec<(CellIndex, F)>> {
        let lambda = &self.shapes[shape].lambda;
        let mut out = Vec::new();
        for (ci, c) in self.expand(x) {
            if ci.shape == shape {
                out.push((ci, c));
            } else if !dominates_strictly(&self.shapes[ci.shape].lambda, lambda)? {
                return Err(Error::Invariant(format!(
                    "element of m_λ H lies outside the cell filtration at {} (λ = {lambda})",
                    self.shapes[ci.shape].lambda
                )));
            }
        }
        Ok(out)
    }
}
