//! Smith normal form: fixed oracle cases plus the randomized property
//! suite (1000 matrices up to 6×6 with entries in [−99, 99]).

use abelian_core::{smith_normal_form, IntMatrix};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn check_decomposition(m: &IntMatrix) {
    let snf = smith_normal_form(m);
    // Exact reconstruction.
    let prod = snf.u().mul(snf.s()).mul(snf.v());
    assert_eq!(&prod, m, "U·S·V must reproduce the input exactly");
    // Unimodular transforms.
    assert!(snf.u().is_unimodular(), "U must have determinant ±1");
    assert!(snf.v().is_unimodular(), "V must have determinant ±1");
    // Tracked inverses really are inverses.
    assert_eq!(
        snf.u().mul(snf.u_inv()),
        IntMatrix::identity(m.rows()),
        "u·u_inv = I"
    );
    assert_eq!(
        snf.v().mul(snf.v_inv()),
        IntMatrix::identity(m.cols()),
        "v·v_inv = I"
    );
    // S diagonal, nonnegative, divisibility chain.
    let diag = snf.diagonal();
    for r in 0..snf.s().rows() {
        for c in 0..snf.s().cols() {
            if r != c {
                assert!(snf.s().get(r, c).is_zero(), "S must be diagonal");
            }
        }
    }
    for d in &diag {
        assert!(!d.is_negative(), "diagonal entries must be nonnegative");
    }
    for w in diag.windows(2) {
        if w[0].is_zero() {
            assert!(w[1].is_zero(), "zeros must come last in the chain");
        } else {
            assert!(
                (&w[1] % &w[0]).is_zero(),
                "divisibility chain violated: {} does not divide {}",
                w[0],
                w[1]
            );
        }
    }
}

#[test]
fn identity_is_its_own_normal_form() {
    let m = IntMatrix::identity(3);
    let snf = smith_normal_form(&m);
    assert_eq!(snf.s(), &IntMatrix::identity(3));
    assert_eq!(snf.u(), &IntMatrix::identity(3));
    assert_eq!(snf.v(), &IntMatrix::identity(3));
}

#[test]
fn coprime_diagonal_merges() {
    // diag(2,3) has invariant factors 1, 6.
    let m = IntMatrix::diagonal(&[2, 3]);
    let snf = smith_normal_form(&m);
    assert_eq!(snf.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
    check_decomposition(&m);
}

#[test]
fn textbook_2x2_case() {
    // gcd of entries is 2 and d₁·d₂ = |det| = 8, so S = diag(2, 4).
    let m = IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]);
    let snf = smith_normal_form(&m);
    assert_eq!(snf.diagonal(), vec![BigInt::from(2), BigInt::from(4)]);
    check_decomposition(&m);
}

#[test]
fn zero_and_rectangular_matrices() {
    check_decomposition(&IntMatrix::zero(3, 5));
    check_decomposition(&IntMatrix::zero(0, 4));
    check_decomposition(&IntMatrix::from_rows(&[vec![0, 0, 7], vec![0, 0, 0]]));
    check_decomposition(&IntMatrix::from_rows(&[vec![4], vec![6], vec![10]]));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn random_matrices_decompose_correctly(
        rows in 1usize..=6,
        cols in 1usize..=6,
        entries in prop::collection::vec(-99i64..=99, 36),
    ) {
        let data: Vec<Vec<i64>> = (0..rows)
            .map(|r| entries[r * cols..r * cols + cols].to_vec())
            .collect();
        let m = IntMatrix::from_rows(&data);
        check_decomposition(&m);
    }
}
