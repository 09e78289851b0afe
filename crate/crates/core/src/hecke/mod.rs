//! The cyclotomic Hecke algebra `H_n(v_1, …, v_m; q)` in the basis
//! `L_1^{e_1}⋯L_n^{e_n} a_w`.

mod algebra;
mod basis;
mod params;
mod relations;

pub use algebra::{HeckeAlgebra, HeckeElement};
pub(crate) use algebra::{Acc, Sparse};
pub use basis::{Basis, NormalIndex};
pub use params::{is_semisimple, parameter_orbits, HeckeParams, SemisimpleVerdict};
pub use relations::{check_relations, Side};
pub(crate) use relations::defining_relations;
