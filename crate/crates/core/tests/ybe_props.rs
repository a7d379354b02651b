use std::path::Path;

use nvk_core::derived::gelfand_nn;
use nvk_core::io::parse_spec;
use nvk_core::linalg::{LinMap, Matrix, Scalar, Tensor2, Tensor3};
use nvk_core::model::{all_passed, AlgebraSpec};
use nvk_core::ybe::{
    antisymmetric_from_upper, canonical_solution, check_o_operator, check_quasi_frobenius, eval_nybe,
    form_from_r, lift_tensor, oelda_test, r_from_form, OOperatorProblem,
};
use proptest::prelude::*;

fn fixture(name: &str) -> AlgebraSpec {
    parse_spec(&Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)).unwrap()
}

fn s(x: i64) -> Scalar {
    Scalar::from_int(x)
}

fn euler_nn() -> AlgebraSpec {
    gelfand_nn(&fixture("poly3.alg")).unwrap().into_inner()
}

fn transport(spec: &AlgebraSpec, p: &Matrix, p_inv: &Matrix) -> AlgebraSpec {
    AlgebraSpec::new(spec.dim)
        .with_op("prec", spec.op("prec").unwrap().conjugate(p, p_inv))
        .with_op("succ", spec.op("succ").unwrap().conjugate(p, p_inv))
}

fn invertible(n: usize) -> impl Strategy<Value = (Matrix, Matrix)> {
    prop::collection::vec(-2i64..=2, n * n).prop_filter_map("singular", move |v| {
        let p = Matrix::from_fn(n, n, |i, j| s(v[i * n + j]));
        p.inverse().map(|inv| (p, inv))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn nybe_agrees_with_the_o_operator_test(upper in prop::collection::vec(-2i64..=2, 3)) {
        let spec = euler_nn();
        let r = antisymmetric_from_upper(3, &upper.iter().map(|&v| s(v)).collect::<Vec<_>>());
        let (nybe, op) = oelda_test(&spec, &r).unwrap();
        prop_assert_eq!(nybe, op);
        prop_assert_eq!(nybe, eval_nybe(&spec, &r).unwrap().is_zero());
    }

    #[test]
    fn lift_solves_nybe_iff_t_is_an_o_operator(
        slot in 0usize..9,
        delta in -2i64..=2,
    ) {
        let mut p = OOperatorProblem::from_spec(&fixture("pnv3-o.alg")).unwrap();
        let (i, j) = (slot / 3, slot % 3);
        let v = p.t.entry(i, j) + &s(delta);
        p.t = LinMap(Matrix::from_fn(3, 3, |a, b| if (a, b) == (i, j) { v.clone() } else { p.t.entry(a, b).clone() }));
        let op = all_passed(&check_o_operator(&p).unwrap());
        let (algebra, r) = lift_tensor(&p).unwrap();
        prop_assert_eq!(op, eval_nybe(&algebra, &r).unwrap().is_zero());
    }

    #[test]
    fn quasi_frobenius_iff_nybe_on_the_lift(
        pos in (0usize..6, 0usize..6).prop_filter("off diagonal", |(a, b)| a != b),
        delta in -1i64..=1,
    ) {
        let p = OOperatorProblem::from_spec(&fixture("pnv3-o.alg")).unwrap();
        let (algebra, mut r) = lift_tensor(&p).unwrap();
        let (a, b) = pos;
        r.set(a, b, r.entry(a, b) + &s(delta));
        r.set(b, a, r.entry(b, a) - &s(delta));
        if let Ok(form) = form_from_r(&r) {
            prop_assert_eq!(r_from_form(&form).unwrap(), r.clone());
            let qf = all_passed(&check_quasi_frobenius(&algebra, &form).unwrap());
            prop_assert_eq!(qf, eval_nybe(&algebra, &r).unwrap().is_zero());
        }
    }

    #[test]
    fn nybe_is_equivariant((p, p_inv) in invertible(3), v in prop::collection::vec(-2i64..=2, 9)) {
        let spec = euler_nn();
        let r = Tensor2(Matrix::from_fn(3, 3, |i, j| s(v[i * 3 + j])));
        let moved = transport(&spec, &p, &p_inv);
        let r2 = Tensor2(&(&p_inv * &r.0) * &p_inv.transpose());
        let e = eval_nybe(&spec, &r).unwrap();
        let expect = Tensor3::from_fn(3, |i, j, k| {
            let mut acc = Scalar::zero();
            for ((a, b, c), x) in e.nonzero() {
                acc = &acc + &(&(&(p_inv.get(i, a) * p_inv.get(j, b)) * p_inv.get(k, c)) * x);
            }
            acc
        });
        prop_assert_eq!(eval_nybe(&moved, &r2).unwrap(), expect);
    }
}

#[test]
fn canonical_solution_of_the_lift_is_quasi_frobenius() {
    let p = OOperatorProblem::from_spec(&fixture("pnv3-o.alg")).unwrap();
    let (algebra, r) = lift_tensor(&p).unwrap();
    assert!(eval_nybe(&algebra, &r).unwrap().is_zero());
    assert!(all_passed(&check_quasi_frobenius(&algebra, &form_from_r(&r).unwrap()).unwrap()));
    assert!(canonical_solution(3).is_antisymmetric());
}
