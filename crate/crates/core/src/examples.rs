//! Small named algebras and coalgebras used as fixtures.

use crate::algebra::Algebra;
use crate::bialgebra::Comultiplication;
use crate::tensor::{int, Matrix};

/// `e1·e1 = e1·e2 = e2·e1 = e1 + 2e2`, `e2·e2 = e2`.
/// Admissible and A3-associative, not associative.
pub fn admissible_plane() -> Algebra {
    Algebra::from_int_table(
        2,
        &[
            (0, 0, &[1, 2]),
            (0, 1, &[1, 2]),
            (1, 0, &[1, 2]),
            (1, 1, &[0, 1]),
        ],
    )
}

/// `Δ(e1) = e1 ⊗ e1`, `Δ(e2) = 0`; its dual product is `e1*∘e1* = e1*`.
pub fn idempotent_delta() -> Comultiplication {
    let mut d = Comultiplication::zero(2);
    d.set(0, 0, 0, int(1));
    d
}

/// Two-dimensional, `e1·e1 = e1`, all other products zero.
pub fn idempotent_line() -> Algebra {
    Algebra::from_int_table(2, &[(0, 0, &[1, 0])])
}

/// Upper-triangular 2×2 matrices in the basis `E11, E12, E22`.
pub fn upper_triangular() -> Algebra {
    Algebra::from_int_table(
        3,
        &[
            (0, 0, &[1, 0, 0]),
            (0, 1, &[0, 1, 0]),
            (1, 2, &[0, 1, 0]),
            (2, 2, &[0, 0, 1]),
        ],
    )
}

/// First row of the 2×2 matrices, basis `E11, E12`. Associative, and
/// `e1⊗e2 − e2⊗e1` is an invertible skew solution of the Yang-Baxter equation.
pub fn matrix_row() -> Algebra {
    Algebra::from_int_table(2, &[(0, 0, &[1, 0]), (0, 1, &[0, 1])])
}

/// The map `T(e1) = e2`, `T(e2) = 0`, a relative Rota-Baxter operator on
/// [`idempotent_line`] for its adjoint representation.
pub fn idempotent_line_rb() -> Matrix {
    Matrix::from_ints(&[[0, 0], [1, 0]])
}
