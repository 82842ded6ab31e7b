use a3kit::bialgebra::{comultiplication_from_dual, dual_algebra};
use a3kit::representation::{adjoint_representation, dual_representation};
use a3kit::search::brute::{brute_residual, BruteInputs};
use a3kit::search::{generate_algebra, random_matrix, Family};
use a3kit::tensor::{
    apply_ops2, int, skew_part, tau_swap, xi_permute, Matrix, Scalar, Tensor2, Tensor3,
};
use a3kit::{check_law, LawKind};
use proptest::prelude::*;

fn scalars(len: usize) -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec(-3i64..=3, len).prop_map(|v| v.into_iter().map(int).collect())
}

fn tensor2(n: usize) -> impl Strategy<Value = Tensor2> {
    scalars(n * n).prop_map(move |c| {
        let rows = c.chunks(n).map(<[Scalar]>::to_vec).collect();
        Tensor2::from_matrix(&Matrix::from_rows(rows).unwrap()).unwrap()
    })
}

fn matrix(n: usize) -> impl Strategy<Value = Matrix> {
    scalars(n * n).prop_map(move |c| {
        Matrix::from_rows(c.chunks(n).map(<[Scalar]>::to_vec).collect()).unwrap()
    })
}

fn family() -> impl Strategy<Value = Family> {
    prop::sample::select(Family::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn xi_has_order_three(c in scalars(27)) {
        let t = Tensor3::from_coeffs(3, c).unwrap();
        let once = xi_permute(&t);
        prop_assert_eq!(xi_permute(&xi_permute(&once)), t);
    }

    #[test]
    fn tau_is_an_involution(t in tensor2(3)) {
        prop_assert_eq!(tau_swap(&tau_swap(&t)), t.clone());
        prop_assert!(skew_part(&t).is_skew());
    }

    #[test]
    fn apply_ops2_composes(t in tensor2(2), m1 in matrix(2), n1 in matrix(2), m2 in matrix(2), n2 in matrix(2)) {
        let nested = apply_ops2(&m1, &n1, &apply_ops2(&m2, &n2, &t).unwrap()).unwrap();
        prop_assert_eq!(nested, apply_ops2(&m1.mul(&m2), &n1.mul(&n2), &t).unwrap());
    }

    #[test]
    fn apply_ops2_is_linear(s in tensor2(2), t in tensor2(2), m in matrix(2), n in matrix(2), c in -3i64..=3) {
        let mut sum = s.clone();
        sum.add_scaled(&int(c), &t);
        let mut expected = apply_ops2(&m, &n, &s).unwrap();
        expected.add_scaled(&int(c), &apply_ops2(&m, &n, &t).unwrap());
        prop_assert_eq!(apply_ops2(&m, &n, &sum).unwrap(), expected);
    }

    #[test]
    fn families_pass_their_laws(fam in family(), seed in 0u64..10_000) {
        let a = generate_algebra(fam, seed).unwrap();
        for &law in fam.defining_laws() {
            prop_assert!(check_law(&a, law).passed(), "{} fails {}", fam, law);
        }
    }

    #[test]
    fn associative_implies_every_law(seed in 0u64..10_000) {
        let a = generate_algebra(Family::Associative, seed).unwrap();
        for law in LawKind::ALL {
            if law != LawKind::AdmissiblePoisson {
                prop_assert!(check_law(&a, law).passed(), "{}", law);
            }
        }
    }

    #[test]
    fn one_sided_symmetry_implies_lie_admissible(seed in 0u64..10_000) {
        let a = generate_algebra(Family::Random, seed).unwrap();
        let symmetric = check_law(&a, LawKind::LeftSymmetric).passed() || check_law(&a, LawKind::RightSymmetric).passed();
        prop_assert!(!symmetric || check_law(&a, LawKind::LieAdmissible).passed());
    }

    #[test]
    fn laws_are_invariant_under_change_of_basis(fam in family(), seed in 0u64..10_000) {
        let a = generate_algebra(fam, seed).unwrap();
        let g = (seed..).map(|s| random_matrix(a.dim(), a.dim(), s)).find(|m| m.inverse().is_ok()).unwrap();
        let b = a.transport(&g).unwrap();
        for law in LawKind::ALL {
            prop_assert_eq!(check_law(&a, law).passed(), check_law(&b, law).passed(), "{}", law);
        }
    }

    #[test]
    fn dual_round_trips(fam in family(), seed in 0u64..10_000) {
        let a = generate_algebra(fam, seed).unwrap();
        prop_assert_eq!(dual_algebra(&comultiplication_from_dual(&a)), a.clone());
        let rho = adjoint_representation(&a);
        prop_assert_eq!(dual_representation(&dual_representation(&rho)), rho);
    }

    #[test]
    fn law_checker_matches_naive_evaluation(fam in family(), seed in 0u64..10_000) {
        let a = generate_algebra(fam, seed).unwrap();
        let inputs = BruteInputs { algebra: Some(a.clone()), ..Default::default() };
        for law in LawKind::ALL {
            prop_assert_eq!(brute_residual(law.name(), &inputs).unwrap(), check_law(&a, law));
        }
    }
}
