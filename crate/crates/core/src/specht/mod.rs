//! Cellular basis `m_st`, Specht modules, Gram matrices and the simple heads `D^λ`.

mod cellular;
mod module;

pub use cellular::{
    cellular_rank, m_lambda, row_stabilizer, u_a, x_lambda, CellIndex, CellularTable, ShapeData,
};
pub use module::SpechtModule;
