//! Exact-arithmetic verification of noncommutative Novikov algebras, their
//! bialgebras, Yang-Baxter solutions and differential ASI bialgebras.

pub mod construct;
pub mod derived;
pub mod error;
pub mod io;
pub mod linalg;
pub mod model;
pub mod ybe;

pub use construct::{NNRepresentation, Verified};
pub use derived::PreNovikovSpec;
pub use error::{Error, Result};
pub use io::ReportFile;
pub use linalg::{BilinearForm, LinMap, Matrix, Perm3, Scalar, Tensor2, Tensor3};
pub use model::{
    check_identity, check_profile, ActionTable, AlgebraSpec, Binding, CheckOptions, CoprodTable,
    MulTable, Report, Representation, Status, Witness,
};
pub use ybe::OOperatorProblem;
