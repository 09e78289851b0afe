//! Exact scalars: rationals, cyclotomic fields, prime-field images, and
//! integer Laurent polynomials in `v`.

mod cyclo;
mod field;
mod fp;
mod laurent;
mod scalar;

pub use field::{Field, FromScalar};
pub use fp::{Fp, DEFAULT_PRIME};
pub use laurent::{
    bar, divide_exact, quantum_factorial, quantum_integer, signed_quantum_integer, LaurentPoly,
};
pub use scalar::{common_conductor, field_arith, root_of_unity, ArithOp, Cyclotomic, Scalar};

/// The prime field used for modular certificates.
pub type Fp61 = Fp<DEFAULT_PRIME>;
