//! Exact rational scalars, matrices and low-order tensors.

mod matrix;
mod perm;
mod scalar;
mod tensor;

pub use matrix::Matrix;
pub use perm::{ParsePermError, Perm3};
pub use scalar::{ParseScalarError, Scalar};
pub use tensor::{dual_map, permute_tensor3, sharp, BilinearForm, LinMap, Tensor2, Tensor3};
