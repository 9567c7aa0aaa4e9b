//! Racks, quandles and their free products, together with the rack
//! quasimorphisms induced by Rolli and homogeneous group quasimorphisms.
//!
//! Everything is computed exactly: exponents are arbitrary-precision
//! integers and quasimorphism values are rationals. The main entry points:
//!
//! - [`rack::FiniteRack`]: racks and quandles given by an operation table.
//! - [`word::GroupWord`] / [`word::AbelianWord`]: free and free-abelian
//!   normal forms with a small text grammar.
//! - [`adjoint`]: adjoint group presentations and the decidable models used
//!   as free-product factors.
//! - [`free_product::FreeProductRack`]: free products of racks over those
//!   models, including the free rack and the free quandle.
//! - [`quasimorphism`]: Rolli, Brooks and homogeneous quasimorphisms and
//!   their defect estimates.
//! - [`cochain`]: exact rack and quandle cochain complexes of finite racks.
//! - [`certify`]: finite-rank independence certificates and growth reports.
//! - [`builtin`]: the named racks, groups and λ families used throughout.

pub mod adjoint;
pub mod builtin;
pub mod certify;
pub mod cochain;
pub mod exec;
pub mod free_product;
pub mod io;
pub mod linalg;
pub mod num;
pub mod quasimorphism;
pub mod rack;
pub mod sample;
pub mod word;

pub use exec::Execution;
pub use num::{Int, Rational};

/// Exponent sign of a rack move: `x ◁ y` or `x ◁⁻¹ y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}
