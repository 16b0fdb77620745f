use proptest::prelude::*;

use leibcoh::catalog::lambda6;
use leibcoh::complexes::{CoefficientAlgebra, TensorSpace};
use leibcoh::linalg::{axpy, combine, in_span, is_zero_vector, kernel_basis, rank, scale_vector};
use leibcoh::shuffle::{compose_permutations, cup_nonequivariant, inverse_permutation, sign, tilde, PermutationSum};
use leibcoh::{Field, Matrix, Scalar, Vector};

fn small_matrix() -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (1usize..5, 1usize..6).prop_flat_map(|(r, c)| (Just(c), prop::collection::vec(prop::collection::vec(-3i64..=3, c), r)))
}

fn to_matrix(field: Field, rows: &[Vec<i64>]) -> Matrix {
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    Matrix::from_ints(field, &refs)
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn ints(field: Field, xs: &[i64]) -> Vector {
    xs.iter().map(|&x| field.int(x)).collect()
}

proptest! {
    #[test]
    fn rank_nullity((_, rows) in small_matrix(), prime in prop::sample::select(vec![0u64, 2, 3, 5])) {
        let field = if prime == 0 { Field::Rational } else { Field::prime(prime).unwrap() };
        let m = to_matrix(field, &rows);
        let kernel = kernel_basis(&m);
        prop_assert_eq!(rank(&m) + kernel.len(), m.cols());
        for v in &kernel {
            prop_assert!(is_zero_vector(&m.mul_vec(v)));
        }
        prop_assert_eq!(rank(&m), rank(&m.transpose()));
    }

    #[test]
    fn in_span_reconstructs((cols, rows) in small_matrix(), coeffs in prop::collection::vec(-4i64..=4, 5)) {
        let q = Field::Rational;
        let basis: Vec<Vector> = rows.iter().map(|r| ints(q, r)).collect();
        let c = ints(q, &coeffs[..basis.len()]);
        let v = combine(q, cols, &c, &basis);
        let found = in_span(&v, &basis).unwrap().expect("combination lies in the span");
        prop_assert_eq!(combine(q, cols, &found, &basis), v);
    }

    #[test]
    fn permutation_group_laws(a in permutation(5), b in permutation(5)) {
        let ab = compose_permutations(&a, &b);
        prop_assert_eq!(sign(&ab), sign(&a) * sign(&b));
        prop_assert_eq!(compose_permutations(&a, &inverse_permutation(&a)), (0..5).collect::<Vec<_>>());
    }

    #[test]
    fn tilde_is_an_anti_homomorphism(a in permutation(4), b in permutation(4), x in -3i64..=3, y in -3i64..=3) {
        let q = Field::Rational;
        let s = PermutationSum::single(q, a.clone(), q.int(x)).add(&PermutationSum::identity(q, 4));
        let t = PermutationSum::single(q, b, q.int(y));
        prop_assert_eq!(tilde(&s.compose(&t)), tilde(&t).compose(&tilde(&s)));
        prop_assert_eq!(tilde(&tilde(&s)), s);
    }

    #[test]
    fn cup_is_bilinear(
        c1 in prop::collection::vec(-2i64..=2, 3),
        c2 in prop::collection::vec(-2i64..=2, 3),
        d in prop::collection::vec(-2i64..=2, 9),
        k in -3i64..=3,
    ) {
        let q = Field::Rational;
        let g = lambda6();
        let a = CoefficientAlgebra::ground(q);
        prop_assert_eq!(TensorSpace::new(3, 2).dim(), 9);
        let (c1, c2, d) = (ints(q, &c1), ints(q, &c2), ints(q, &d));
        let mut sum = c1.clone();
        axpy(&mut sum, &q.int(k), &c2);
        let lhs = cup_nonequivariant(&g, &a, 1, &sum, 2, &d).unwrap();
        let mut rhs = cup_nonequivariant(&g, &a, 1, &c1, 2, &d).unwrap();
        axpy(&mut rhs, &q.int(k), &cup_nonequivariant(&g, &a, 1, &c2, 2, &d).unwrap());
        prop_assert_eq!(&lhs, &rhs);
        let scaled: Vec<Scalar> = scale_vector(&q.int(k), &d);
        let right = cup_nonequivariant(&g, &a, 1, &c1, 2, &scaled).unwrap();
        prop_assert_eq!(right, scale_vector(&q.int(k), &cup_nonequivariant(&g, &a, 1, &c1, 2, &d).unwrap()));
    }
}
