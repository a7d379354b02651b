use nvk_core::linalg::{dual_map, permute_tensor3, sharp, LinMap, Matrix, Perm3, Scalar, Tensor2, Tensor3};
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| Scalar::ratio(n, d))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(scalar(), rows * cols).prop_map(move |v| Matrix::from_fn(rows, cols, |i, j| v[i * cols + j].clone()))
}

fn tensor3(n: usize) -> impl Strategy<Value = Tensor3> {
    prop::collection::vec(-3i64..=3, n * n * n)
        .prop_map(move |v| Tensor3::from_fn(n, |i, j, k| Scalar::from_int(v[(i * n + j) * n + k])))
}

fn tensor2(n: usize) -> impl Strategy<Value = Tensor2> {
    matrix(n, n).prop_map(Tensor2)
}

fn perm() -> impl Strategy<Value = Perm3> {
    (0usize..6).prop_map(|i| Perm3::all()[i])
}

proptest! {
    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &Scalar::zero(), a.clone());
        prop_assert_eq!(&a * &Scalar::one(), a.clone());
        prop_assert!((&a + &-&a).is_zero());
        if let Some(inv) = a.inv() {
            prop_assert!((&a * &inv).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
    }

    #[test]
    fn scalar_text_round_trip(a in scalar()) {
        let back: Scalar = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn dual_map_is_an_involution_reversing_composition(p in matrix(2, 3), q in matrix(3, 2)) {
        let (phi, psi) = (LinMap(p), LinMap(q));
        prop_assert_eq!(dual_map(&dual_map(&phi)), phi.clone());
        // (ψ∘φ)* = φ*∘ψ*
        prop_assert_eq!(dual_map(&psi.compose(&phi)), dual_map(&phi).compose(&dual_map(&psi)));
    }

    #[test]
    fn permutations_act_on_tensors(t in tensor3(2), a in perm(), b in perm()) {
        let step = permute_tensor3(&permute_tensor3(&t, &b), &a);
        prop_assert_eq!(step, permute_tensor3(&t, &a.compose(&b)));
        prop_assert_eq!(permute_tensor3(&t, &Perm3::identity()), t);
    }

    #[test]
    fn sharp_is_linear(r in tensor2(3), s in tensor2(3), c in scalar()) {
        let sum = Tensor2(&r.0 + &s.0);
        prop_assert_eq!(sharp(&sum).0, &sharp(&r).0 + &sharp(&s).0);
        let scaled = Tensor2(r.0.scale(&c));
        prop_assert_eq!(sharp(&scaled).0, sharp(&r).0.scale(&c));
    }

    #[test]
    fn inverse_and_determinant(m in matrix(3, 3), k in matrix(3, 3)) {
        match m.inverse() {
            Some(inv) => {
                prop_assert_eq!(&m * &inv, Matrix::identity(3));
                prop_assert_eq!(&inv * &m, Matrix::identity(3));
                prop_assert_eq!(m.rank(), 3);
            }
            None => prop_assert!(m.det().unwrap().is_zero()),
        }
        prop_assert_eq!((&m * &k).det().unwrap(), &m.det().unwrap() * &k.det().unwrap());
    }

    #[test]
    fn nullspace_has_complementary_dimension(m in matrix(3, 4)) {
        let ns = m.nullspace();
        prop_assert_eq!(ns.len() + m.rank(), 4);
        for v in &ns {
            prop_assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
        }
    }
}
