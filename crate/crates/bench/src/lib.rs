//! Inputs shared by the benchmarks in `benches/`.

use nvk_core::io::parse_spec_str;
use nvk_core::ybe::{lift_tensor, OOperatorProblem};
use nvk_core::{AlgebraSpec, Tensor2};

pub fn nn2() -> AlgebraSpec {
    parse_spec_str(include_str!("../../../fixtures/nn2.alg")).expect("fixture parses")
}

pub fn zero(dim: usize) -> AlgebraSpec {
    let text = match dim {
        2 => include_str!("../../../fixtures/zero2.alg"),
        3 => include_str!("../../../fixtures/zero3.alg"),
        _ => include_str!("../../../fixtures/zero4.alg"),
    };
    parse_spec_str(text).expect("fixture parses")
}

/// The six-dimensional lift of the Euler pre-Novikov algebra and its solution.
pub fn lift6() -> (AlgebraSpec, Tensor2) {
    let spec = parse_spec_str(include_str!("../../../fixtures/pnv3-o.alg")).expect("fixture parses");
    let p = OOperatorProblem::from_spec(&spec).expect("fixture has T");
    lift_tensor(&p).expect("dimensions agree")
}
