//! Representations `(l, r, V)`, their duals, and semidirect products.

use crate::algebra::{check_law, Algebra, LawKind};
use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::tensor::{Matrix, Scalar};

/// Left and right actions of each basis element of `algebra` on a
/// `vdim`-dimensional space. Matrices act on column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub algebra: Algebra,
    pub vdim: usize,
    pub l: Vec<Matrix>,
    pub r: Vec<Matrix>,
}

impl Representation {
    pub fn new(algebra: Algebra, l: Vec<Matrix>, r: Vec<Matrix>) -> Result<Self> {
        let n = algebra.dim();
        if l.len() != n || r.len() != n {
            return Err(Error::DimensionMismatch {
                context: "action count",
                expected: n,
                found: l.len().min(r.len()),
            });
        }
        let d = l.first().map(Matrix::rows).unwrap_or(0);
        for m in l.iter().chain(&r) {
            if m.rows() != d || m.cols() != d {
                return Err(Error::DimensionMismatch {
                    context: "action matrix",
                    expected: d,
                    found: m.rows().max(m.cols()),
                });
            }
        }
        Ok(Representation {
            algebra,
            vdim: d,
            l,
            r,
        })
    }

    pub fn zero(algebra: Algebra, vdim: usize) -> Self {
        let n = algebra.dim();
        Representation {
            algebra,
            vdim,
            l: vec![Matrix::zero(vdim, vdim); n],
            r: vec![Matrix::zero(vdim, vdim); n],
        }
    }

    /// `l(e_i · e_j)` by linearity.
    pub fn l_of_product(&self, i: usize, j: usize) -> Matrix {
        self.combine(&self.l, i, j)
    }

    /// `r(e_i · e_j)` by linearity.
    pub fn r_of_product(&self, i: usize, j: usize) -> Matrix {
        self.combine(&self.r, i, j)
    }

    fn combine(&self, mats: &[Matrix], i: usize, j: usize) -> Matrix {
        let mut out = Matrix::zero(self.vdim, self.vdim);
        for (k, m) in mats.iter().enumerate() {
            out.add_scaled(self.algebra.sc(i, j, k), m);
        }
        out
    }
}

fn sum(terms: &[(i64, &Matrix)], d: usize) -> Matrix {
    let mut out = Matrix::zero(d, d);
    for &(c, m) in terms {
        out.add_scaled(&Scalar::from_integer(c.into()), m);
    }
    out
}

/// `l(xy) − r(xy) + r(x)l(y) − l(x)l(y) + r(y)r(x) − l(y)r(x) = 0` on basis pairs.
pub fn check_representation(rho: &Representation) -> CheckReport {
    let n = rho.algebra.dim();
    let d = rho.vdim;
    let mut report = CheckReport::new("representation");
    for i in 0..n {
        for j in 0..n {
            let (li, lj, ri, rj) = (&rho.l[i], &rho.l[j], &rho.r[i], &rho.r[j]);
            let res = sum(
                &[
                    (1, &rho.l_of_product(i, j)),
                    (-1, &rho.r_of_product(i, j)),
                    (1, &ri.mul(lj)),
                    (-1, &li.mul(lj)),
                    (1, &rj.mul(ri)),
                    (-1, &lj.mul(ri)),
                ],
                d,
            );
            report.record("representation", &[i, j], res.entries().to_vec());
        }
    }
    report
}

/// `l(xy) = l(x)l(y)`, `r(xy) = r(y)r(x)`, `l(x)r(y) = r(y)l(x)` on basis pairs.
pub fn check_associative_representation(rho: &Representation) -> CheckReport {
    let n = rho.algebra.dim();
    let mut report = CheckReport::new("associative representation");
    for (part, f) in [
        (
            "left",
            &(|i: usize, j: usize| &rho.l_of_product(i, j) - &rho.l[i].mul(&rho.l[j]))
                as &dyn Fn(usize, usize) -> Matrix,
        ),
        ("right", &|i, j| {
            &rho.r_of_product(i, j) - &rho.r[j].mul(&rho.r[i])
        }),
        ("commuting", &|i, j| {
            &rho.l[i].mul(&rho.r[j]) - &rho.r[j].mul(&rho.l[i])
        }),
    ] {
        for i in 0..n {
            for j in 0..n {
                report.record(part, &[i, j], f(i, j).entries().to_vec());
            }
        }
    }
    report
}

/// `r(y)l(x) − l(x)r(y) + r(x)l(y) − l(y)r(x) = 0` on basis pairs `(x, y) = (e_i, e_j)`.
pub fn check_admissible_representation(rho: &Representation) -> CheckReport {
    let n = rho.algebra.dim();
    let d = rho.vdim;
    let mut report = CheckReport::new("admissible representation");
    for i in 0..n {
        for j in 0..n {
            let (li, lj, ri, rj) = (&rho.l[i], &rho.l[j], &rho.r[i], &rho.r[j]);
            let res = sum(
                &[
                    (1, &rj.mul(li)),
                    (-1, &li.mul(rj)),
                    (1, &ri.mul(lj)),
                    (-1, &lj.mul(ri)),
                ],
                d,
            );
            report.record("admissible representation", &[i, j], res.entries().to_vec());
        }
    }
    report
}

/// `(r*, l*, V*)`: new left action is the transpose of `r`, new right action the transpose of `l`.
pub fn dual_representation(rho: &Representation) -> Representation {
    Representation {
        algebra: rho.algebra.clone(),
        vdim: rho.vdim,
        l: rho.r.iter().map(Matrix::transpose).collect(),
        r: rho.l.iter().map(Matrix::transpose).collect(),
    }
}

/// `(L, R, A)`.
pub fn adjoint_representation(a: &Algebra) -> Representation {
    let n = a.dim();
    Representation {
        algebra: a.clone(),
        vdim: n,
        l: (0..n).map(|i| a.left_mult(i)).collect(),
        r: (0..n).map(|i| a.right_mult(i)).collect(),
    }
}

/// `(R*, L*, A*)`; requires the algebra to be admissible.
pub fn coadjoint_representation(a: &Algebra) -> Result<Representation> {
    require_admissible(a)?;
    Ok(dual_representation(&adjoint_representation(a)))
}

pub(crate) fn require_admissible(a: &Algebra) -> Result<()> {
    for law in [LawKind::A3, LawKind::Admissible] {
        let rep = check_law(a, law);
        if !rep.passed() {
            return Err(Error::AdmissibilityRequired(Box::new(rep)));
        }
    }
    Ok(())
}

/// `φ l(e_i) = l'(e_i) φ` and `φ r(e_i) = r'(e_i) φ` for all `i`; `φ` must be invertible.
pub fn check_equivalence(
    rho: &Representation,
    rho2: &Representation,
    phi: &Matrix,
) -> Result<CheckReport> {
    if rho.algebra.dim() != rho2.algebra.dim() {
        return Err(Error::DimensionMismatch {
            context: "equivalent representations",
            expected: rho.algebra.dim(),
            found: rho2.algebra.dim(),
        });
    }
    if rho.vdim != rho2.vdim || phi.rows() != rho.vdim || phi.cols() != rho.vdim {
        return Err(Error::DimensionMismatch {
            context: "intertwiner",
            expected: rho.vdim,
            found: phi.rows(),
        });
    }
    phi.inverse()?;
    let mut report = CheckReport::new("equivalence");
    for i in 0..rho.algebra.dim() {
        report.record(
            "left",
            &[i],
            (&phi.mul(&rho.l[i]) - &rho2.l[i].mul(phi))
                .entries()
                .to_vec(),
        );
    }
    for i in 0..rho.algebra.dim() {
        report.record(
            "right",
            &[i],
            (&phi.mul(&rho.r[i]) - &rho2.r[i].mul(phi))
                .entries()
                .to_vec(),
        );
    }
    Ok(report)
}

/// `A ⋉_{l,r} V` on `A ⊕ V`: `(x + u)(y + v) = xy + l(x)v + r(y)u`.
/// Basis of `V` follows the basis of `A`.
pub fn semidirect_product(a: &Algebra, rho: &Representation) -> Result<Algebra> {
    if &rho.algebra != a {
        return Err(Error::MismatchedAlgebra);
    }
    let (n, d) = (a.dim(), rho.vdim);
    let mut out = Algebra::zero(n + d);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out.set_sc(i, j, k, a.sc(i, j, k).clone());
            }
        }
        for p in 0..d {
            for q in 0..d {
                // e_i · f_p = l(e_i) f_p, f_p · e_i = r(e_i) f_p
                out.set_sc(i, n + p, n + q, rho.l[i][(q, p)].clone());
                out.set_sc(n + p, i, n + q, rho.r[i][(q, p)].clone());
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::{admissible_plane, idempotent_line};
    use crate::tensor::{int, Vector};

    #[test]
    fn adjoint_of_a3_algebra_is_representation() {
        let a = admissible_plane();
        let rho = adjoint_representation(&a);
        assert_eq!(rho.l[0], Matrix::from_ints(&[[1, 1], [2, 2]]));
        assert!(check_representation(&rho).passed());
    }

    #[test]
    fn adjoint_left_only_fails() {
        let a = admissible_plane();
        let mut rho = adjoint_representation(&a);
        rho.r = vec![Matrix::zero(2, 2); 2];
        let rep = check_representation(&rho);
        // l(e1e1) − l(e1)l(e1) at (e1, e1)
        let l11 = &rho.l_of_product(0, 0) - &rho.l[0].mul(&rho.l[0]);
        assert_eq!(
            rep.failure_at("representation", &[0, 0]).unwrap().residual,
            l11.entries().to_vec()
        );
    }

    #[test]
    fn associative_rep_checks() {
        let line = idempotent_line();
        assert!(check_associative_representation(&adjoint_representation(&line)).passed());
        assert!(
            !check_associative_representation(&adjoint_representation(&admissible_plane()))
                .passed()
        );
        assert!(check_associative_representation(&Representation::zero(line, 3)).passed());
    }

    #[test]
    fn coadjoint_cases() {
        let rho = coadjoint_representation(&admissible_plane()).unwrap();
        assert!(check_representation(&rho).passed());
        let line = coadjoint_representation(&idempotent_line()).unwrap();
        assert!(check_representation(&line).passed());
        assert!(check_admissible_representation(&line).passed());
        let mut bad = Algebra::zero(2);
        bad.set_sc(0, 1, 0, int(1));
        bad.set_sc(0, 0, 1, int(1));
        if !check_law(&bad, LawKind::Admissible).passed() || !check_law(&bad, LawKind::A3).passed()
        {
            assert!(matches!(
                coadjoint_representation(&bad),
                Err(Error::AdmissibilityRequired(_))
            ));
        }
    }

    #[test]
    fn dual_twice_is_identity() {
        let rho = adjoint_representation(&admissible_plane());
        assert_eq!(dual_representation(&dual_representation(&rho)), rho);
        let mut one = Representation::zero(idempotent_line(), 2);
        one.l[0] = Matrix::from_ints(&[[0, 1], [0, 0]]);
        assert_eq!(
            dual_representation(&one).r[0],
            Matrix::from_ints(&[[0, 0], [1, 0]])
        );
    }

    #[test]
    fn equivalence_cases() {
        let rho = adjoint_representation(&admissible_plane());
        assert!(check_equivalence(&rho, &rho, &Matrix::identity(2))
            .unwrap()
            .passed());
        let zero = Representation::zero(admissible_plane(), 2);
        assert!(!check_equivalence(&rho, &zero, &Matrix::identity(2))
            .unwrap()
            .passed());
        assert!(matches!(
            check_equivalence(&rho, &rho, &Matrix::zero(2, 2)),
            Err(Error::NotInvertible(_))
        ));
    }

    #[test]
    fn semidirect_golden() {
        let a = admissible_plane();
        let s = semidirect_product(&a, &adjoint_representation(&a)).unwrap();
        let p = s
            .multiply(&Vector::basis(4, 0), &Vector::basis(4, 3))
            .unwrap();
        assert_eq!(p, Vector::from_ints(&[0, 0, 1, 2]));
        assert!(check_law(&s, LawKind::A3).passed());
        assert!(check_law(&s, LawKind::Admissible).passed());
        let z = semidirect_product(&a, &Representation::zero(a.clone(), 1)).unwrap();
        assert_eq!(z, a.direct_sum(&Algebra::zero(1)));
        assert!(matches!(
            semidirect_product(&idempotent_line(), &adjoint_representation(&a)),
            Err(Error::MismatchedAlgebra)
        ));
    }
}
