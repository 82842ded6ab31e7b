//! The A3-associative Yang-Baxter equation, coboundary comultiplications,
//! relative Rota-Baxter operators and Connes cocycles.
//!
//! A tensor `r ∈ A⊗A` is stored by coefficients, so every formula below is
//! written in index form rather than through a decomposition `Σ uᵢ⊗vᵢ`.

use crate::algebra::Algebra;
use crate::bialgebra::Comultiplication;
use crate::double::{standard_double, BilinearForm};
use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::representation::{
    adjoint_representation, coadjoint_representation, require_admissible, Representation,
};
use crate::tensor::{apply_ops2, tau_swap, xi_permute, Matrix, Scalar, Tensor2, Tensor3, Vector};

use num_traits::Zero;

fn same_dim(a: &Algebra, r: &Tensor2) -> Result<()> {
    if a.dim() != r.dim() {
        return Err(Error::DimensionMismatch {
            context: "tensor",
            expected: a.dim(),
            found: r.dim(),
        });
    }
    Ok(())
}

fn require_skew(r: &Tensor2) -> Result<()> {
    if r.is_skew() {
        Ok(())
    } else {
        Err(Error::NotSkew)
    }
}

/// `AY(r)[a][b][m] = Σ r[a][p] r[b][q] sc[p][q][m] − Σ r[a][t] r[s][m] sc[s][t][b] + Σ r[s][b] r[t][m] sc[s][t][a]`.
pub fn aybe_residual(a: &Algebra, r: &Tensor2) -> Result<Tensor3> {
    same_dim(a, r)?;
    let n = a.dim();
    let mut out = Tensor3::zero(n);
    for p in 0..n {
        for q in 0..n {
            for m in 0..n {
                let c = a.sc(p, q, m);
                if c.is_zero() {
                    continue;
                }
                for x in 0..n {
                    for y in 0..n {
                        // u_i ⊗ u_j ⊗ v_i·v_j
                        let t1 = &r[(x, p)] * &r[(y, q)];
                        if !t1.is_zero() {
                            out[(x, y, m)] += &t1 * c;
                        }
                        // − u_i ⊗ u_j·v_i ⊗ v_j, with u_j = e_p, v_i = e_q
                        let t2 = &r[(x, q)] * &r[(p, y)];
                        if !t2.is_zero() {
                            out[(x, m, y)] -= &t2 * c;
                        }
                        // u_j·u_i ⊗ v_j ⊗ v_i, with u_j = e_p, u_i = e_q
                        let t3 = &r[(p, x)] * &r[(q, y)];
                        if !t3.is_zero() {
                            out[(m, x, y)] += &t3 * c;
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// [`aybe_residual`] as a report, one entry per nonzero coefficient `(a, b, c)`.
pub fn check_aybe(a: &Algebra, r: &Tensor2) -> Result<CheckReport> {
    let ay = aybe_residual(a, r)?;
    let n = a.dim();
    let mut report = CheckReport::new("aybe");
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                report.record("aybe", &[x, y, z], [ay[(x, y, z)].clone()]);
            }
        }
    }
    Ok(report)
}

/// `Δ_r(x) = (id ⊗ L(x) − R(x) ⊗ id) r`.
pub fn delta_from_r(a: &Algebra, r: &Tensor2) -> Result<Comultiplication> {
    same_dim(a, r)?;
    let n = a.dim();
    let id = Matrix::identity(n);
    let images = (0..n)
        .map(|i| Ok(&apply_ops2(&id, &a.left_mult(i), r)? - &apply_ops2(&a.right_mult(i), &id, r)?))
        .collect::<Result<Vec<_>>>()?;
    Comultiplication::from_images(&images)
}

/// Residuals of the three conditions on `r` that are equivalent to `Δ_r`
/// being a coalgebra (`coalgebra[i]`) and to the two compatibility
/// identities (`first`, `second`, indexed `i * n + j`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleResiduals {
    pub coalgebra: Vec<Tensor3>,
    pub first: Vec<Tensor2>,
    pub second: Vec<Tensor2>,
}

impl CocycleResiduals {
    pub fn all_zero(&self) -> bool {
        self.coalgebra.iter().all(Tensor3::is_zero)
            && self.first.iter().all(Tensor2::is_zero)
            && self.second.iter().all(Tensor2::is_zero)
    }
}

fn ops_sum(terms: &[(i64, &Matrix, &Matrix)], s: &Tensor2) -> Result<Tensor2> {
    let mut out = Tensor2::zero(s.dim());
    for &(c, m, k) in terms {
        out.add_scaled(&Scalar::from_integer(c.into()), &apply_ops2(m, k, s)?);
    }
    Ok(out)
}

/// The conditions expressed through `AY(r)` and the symmetric part `r + τ(r)`.
pub fn cocycle_conditions_residual(a: &Algebra, r: &Tensor2) -> Result<CocycleResiduals> {
    same_dim(a, r)?;
    require_admissible(a)?;
    let n = a.dim();
    let id = Matrix::identity(n);
    let ay = aybe_residual(a, r)?;
    let s = r + &tau_swap(r);
    let ls: Vec<Matrix> = (0..n).map(|i| a.left_mult(i)).collect();
    let rs: Vec<Matrix> = (0..n).map(|i| a.right_mult(i)).collect();

    let mut coalgebra = Vec::with_capacity(n);
    for i in 0..n {
        let mut t = &ay.apply_slot(0, &rs[i]) - &ay.apply_slot(2, &ls[i]);
        for sidx in 0..n {
            for m in 0..n {
                let w = &r[(sidx, m)];
                if w.is_zero() {
                    continue;
                }
                // (id ⊗ (R(u)L(x) − L(x)R(u)))(r + τr) ⊗ v
                let inner = &rs[sidx].mul(&ls[i]) - &ls[i].mul(&rs[sidx]);
                let left = apply_ops2(&id, &inner, &s)?;
                t.add_scaled(w, &Tensor3::tensor_right(&left, &Vector::basis(n, m)));
                // u ⊗ ((R(x)L(v) − L(v)R(x)) ⊗ id)(r + τr)
                let inner = &rs[i].mul(&ls[m]) - &ls[m].mul(&rs[i]);
                let right = apply_ops2(&inner, &id, &s)?;
                t.add_scaled(w, &Tensor3::tensor_left(&Vector::basis(n, sidx), &right));
            }
        }
        let x = xi_permute(&t);
        let xx = xi_permute(&x);
        coalgebra.push(&(&t + &x) + &xx);
    }

    let mut first = Vec::with_capacity(n * n);
    let mut second = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let (lx, ly, rx, ry) = (&ls[i], &ls[j], &rs[i], &rs[j]);
            let lxy = a.left_op(&a.basis_product(i, j));
            let rxy = a.right_op(&a.basis_product(i, j));
            let lyx = a.left_op(&a.basis_product(j, i));
            let ryx = a.right_op(&a.basis_product(j, i));
            let (lxly, ryrx, rxly, rylx) = (lx.mul(ly), ry.mul(rx), rx.mul(ly), ry.mul(lx));
            first.push(ops_sum(
                &[
                    (1, &id, &lxly),
                    (-1, &id, &lxy),
                    (1, &lxy, &id),
                    (-1, &lxly, &id),
                    (1, lx, ly),
                    (1, ry, rx),
                    (-1, &id, &rxly),
                    (-1, &rylx, &id),
                ],
                &s,
            )?);
            let (rxry, lylx, lyrx) = (rx.mul(ry), ly.mul(lx), ly.mul(rx));
            second.push(ops_sum(
                &[
                    (1, &id, &ryx),
                    (-1, &id, &rxry),
                    (1, &id, &lylx),
                    (-1, &id, &lyx),
                    (-1, &id, &rylx),
                    (1, ly, lx),
                    (1, rx, ry),
                    (1, &lxy, &id),
                    (-1, &rxy, &id),
                    (-1, &lxly, &id),
                    (1, &ryrx, &id),
                    (-1, &lyrx, &id),
                ],
                &s,
            )?);
        }
    }
    Ok(CocycleResiduals {
        coalgebra,
        first,
        second,
    })
}

/// `(A, Δ_r)` for a skew solution `r` on an admissible algebra.
pub fn triangular_bialgebra(a: &Algebra, r: &Tensor2) -> Result<(Algebra, Comultiplication)> {
    same_dim(a, r)?;
    require_admissible(a)?;
    require_skew(r)?;
    let ay = check_aybe(a, r)?;
    if !ay.passed() {
        return Err(Error::NotYangBaxterSolution(Box::new(ay)));
    }
    Ok((a.clone(), delta_from_r(a, r)?))
}

/// Matrix of `r♯: A* → A`, `r♯(e_a*) = Σ_b r[a][b] e_b`.
pub fn rsharp(r: &Tensor2) -> Matrix {
    r.as_matrix().transpose()
}

/// `a*∘b* = R*(r♯(a*))b* + L*(r♯(b*))a*` on `A*`.
pub fn dual_product_from_r(a: &Algebra, r: &Tensor2) -> Result<Algebra> {
    same_dim(a, r)?;
    let n = a.dim();
    let mut out = Algebra::zero(n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let mut v = Scalar::zero();
                for p in 0..n {
                    v += &r[(x, p)] * a.sc(z, p, y);
                    v += &r[(y, p)] * a.sc(p, z, x);
                }
                out.set_sc(x, y, z, v);
            }
        }
    }
    Ok(out)
}

/// `⟨r♯(a*)·r♯(b*) − r♯(a*∘b*), c*⟩ = ⟨a*⊗b*⊗c*, AY(r)⟩` on dual basis triples.
pub fn aybe_rb_gap(a: &Algebra, r: &Tensor2) -> Result<CheckReport> {
    same_dim(a, r)?;
    require_skew(r)?;
    require_admissible(a)?;
    let n = a.dim();
    let sharp = rsharp(r);
    let circ = dual_product_from_r(a, r)?;
    let ay = aybe_residual(a, r)?;
    let mut report = CheckReport::new("aybe rb gap");
    for x in 0..n {
        for y in 0..n {
            let lhs = &a.multiply(&sharp.column(x), &sharp.column(y))?
                - &sharp.apply(&circ.basis_product(x, y));
            for z in 0..n {
                report.record("gap", &[x, y, z], [&lhs[z] - &ay[(x, y, z)]]);
            }
        }
    }
    Ok(report)
}

/// An algebra, a representation of it on `V`, and a map `T: V → A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativeRbData {
    pub algebra: Algebra,
    pub rep: Representation,
    pub t: Matrix,
}

/// `T(e_u)·T(e_v) − T(l(Te_u)e_v + r(Te_v)e_u)` for all basis pairs, indexed `u * d + v`.
pub fn relative_rb_residuals(data: &RelativeRbData) -> Result<Vec<Vector>> {
    let a = &data.algebra;
    let rho = &data.rep;
    if &rho.algebra != a {
        return Err(Error::MismatchedAlgebra);
    }
    let (n, d) = (a.dim(), rho.vdim);
    if data.t.rows() != n || data.t.cols() != d {
        return Err(Error::DimensionMismatch {
            context: "operator shape",
            expected: n * d,
            found: data.t.rows() * data.t.cols(),
        });
    }
    let act = |mats: &[Matrix], x: &Vector| {
        let mut m = Matrix::zero(d, d);
        for (k, c) in x.0.iter().enumerate() {
            m.add_scaled(c, &mats[k]);
        }
        m
    };
    let images: Vec<Vector> = (0..d).map(|u| data.t.column(u)).collect();
    let left: Vec<Matrix> = images.iter().map(|x| act(&rho.l, x)).collect();
    let right: Vec<Matrix> = images.iter().map(|x| act(&rho.r, x)).collect();
    let mut out = Vec::with_capacity(d * d);
    for u in 0..d {
        for v in 0..d {
            let lhs = a.multiply(&images[u], &images[v])?;
            let inner = &left[u].column(v) + &right[v].column(u);
            out.push(&lhs - &data.t.apply(&inner));
        }
    }
    Ok(out)
}

/// `T(u)·T(v) = T(l(Tu)v + r(Tv)u)` on basis pairs of `V`.
pub fn check_relative_rb(data: &RelativeRbData) -> Result<CheckReport> {
    let d = data.rep.vdim;
    let mut report = CheckReport::new("relative rota-baxter");
    for (idx, res) in relative_rb_residuals(data)?.into_iter().enumerate() {
        report.record("relative rota-baxter", &[idx / d, idx % d], res.0);
    }
    Ok(report)
}

/// `r♯` as a relative Rota-Baxter operator for the coadjoint representation.
pub fn check_rb_operator_form(a: &Algebra, r: &Tensor2) -> Result<CheckReport> {
    same_dim(a, r)?;
    require_skew(r)?;
    let rep = coadjoint_representation(a)?;
    check_relative_rb(&RelativeRbData {
        algebra: a.clone(),
        rep,
        t: rsharp(r),
    })
}

/// `ω(xy, z) + ω(yz, x) + ω(zx, y) = 0` on basis triples.
pub fn check_connes_cocycle(a: &Algebra, omega: &BilinearForm) -> Result<CheckReport> {
    let n = a.dim();
    if omega.dim() != n {
        return Err(Error::DimensionMismatch {
            context: "bilinear form",
            expected: n,
            found: omega.dim(),
        });
    }
    if !omega.gram.is_skew() {
        return Err(Error::NotSkew);
    }
    let mut report = CheckReport::new("connes cocycle");
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let e = |t| Vector::basis(n, t);
                let v = omega.eval(&a.basis_product(i, j), &e(k))
                    + omega.eval(&a.basis_product(j, k), &e(i))
                    + omega.eval(&a.basis_product(k, i), &e(j));
                report.record("cyclic sum", &[i, j, k], [v]);
            }
        }
    }
    Ok(report)
}

/// `ω(x, y) = ⟨(r♯)⁻¹(x), y⟩`.
pub fn omega_from_r(a: &Algebra, r: &Tensor2) -> Result<BilinearForm> {
    same_dim(a, r)?;
    let inv = rsharp(r).inverse()?;
    BilinearForm::new(inv.transpose())
}

/// For `T: A → A`, the algebra `D = A ⋉_{R*,L*} A*` and the skew tensor
/// `r = Σᵢ T(eᵢ)⊗eᵢ* − eᵢ*⊗T(eᵢ)` in `D⊗D`.
pub fn rb_to_ybe(a: &Algebra, t: &Matrix) -> Result<(Algebra, Tensor2)> {
    let n = a.dim();
    if t.rows() != n || t.cols() != n {
        return Err(Error::DimensionMismatch {
            context: "operator shape",
            expected: n * n,
            found: t.rows() * t.cols(),
        });
    }
    require_admissible(a)?;
    let (d, _) = standard_double(a, &Algebra::zero(n).with_labels(a.labels().to_vec())?)?;
    let mut r = Tensor2::zero(2 * n);
    for i in 0..n {
        for k in 0..n {
            r[(k, n + i)] = t[(k, i)].clone();
            r[(n + i, k)] = -t[(k, i)].clone();
        }
    }
    Ok((d, r))
}

/// `T` as a relative Rota-Baxter operator for the adjoint representation.
pub fn check_rb_adjoint(a: &Algebra, t: &Matrix) -> Result<CheckReport> {
    check_relative_rb(&RelativeRbData {
        algebra: a.clone(),
        rep: adjoint_representation(a),
        t: t.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebra::check_bialgebra;
    use crate::examples::{admissible_plane, idempotent_line, idempotent_line_rb};
    use crate::tensor::{int, skew_part};

    fn two_term() -> Tensor2 {
        Tensor2::from_ints(&[[0, 1], [-1, 0]])
    }

    /// Expansion over an explicit list of pure tensors `u ⊗ v`.
    fn aybe_by_decomposition(a: &Algebra, pairs: &[(Vector, Vector)]) -> Tensor3 {
        let n = a.dim();
        let mut out = Tensor3::zero(n);
        for (ui, vi) in pairs {
            for (uj, vj) in pairs {
                let t1 =
                    Tensor3::tensor_left(ui, &Tensor2::outer(uj, &a.multiply(vi, vj).unwrap()));
                let t2 =
                    Tensor3::tensor_left(ui, &Tensor2::outer(&a.multiply(uj, vi).unwrap(), vj));
                let t3 =
                    Tensor3::tensor_left(&a.multiply(uj, ui).unwrap(), &Tensor2::outer(vj, vi));
                out = &(&out + &t1) - &t2;
                out = &out + &t3;
            }
        }
        out
    }

    #[test]
    fn coefficient_form_matches_decomposition() {
        let a = admissible_plane();
        let e = |i| Vector::basis(2, i);
        let pairs = vec![(e(0), e(1)), (e(1), -&e(0))];
        assert_eq!(
            aybe_residual(&a, &two_term()).unwrap(),
            aybe_by_decomposition(&a, &pairs)
        );
        let r = Tensor2::from_ints(&[[1, -2], [3, 1]]);
        let mut pairs = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                pairs.push((e(x).scale(&r[(x, y)]), e(y)));
            }
        }
        assert_eq!(
            aybe_residual(&a, &r).unwrap(),
            aybe_by_decomposition(&a, &pairs)
        );
    }

    #[test]
    fn trivial_aybe_cases() {
        assert!(aybe_residual(&admissible_plane(), &Tensor2::zero(2))
            .unwrap()
            .is_zero());
        assert!(aybe_residual(&Algebra::zero(2), &two_term())
            .unwrap()
            .is_zero());
    }

    #[test]
    fn delta_golden() {
        let d = delta_from_r(&admissible_plane(), &two_term()).unwrap();
        assert_eq!(d.of_basis(1), Tensor2::from_ints(&[[0, 0], [0, -4]]));
        assert!(delta_from_r(&admissible_plane(), &Tensor2::zero(2))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn rsharp_and_omega() {
        let mut r = Tensor2::zero(2);
        r[(0, 1)] = int(1);
        assert_eq!(rsharp(&r).column(0), Vector::basis(2, 1));
        let om = omega_from_r(&admissible_plane(), &two_term()).unwrap();
        assert_eq!(om.gram, Matrix::from_ints(&[[0, -1], [1, 0]]));
        assert!(matches!(
            omega_from_r(&admissible_plane(), &r),
            Err(Error::NotInvertible(_))
        ));
    }

    #[test]
    fn connes_golden() {
        let om = BilinearForm::new(Matrix::from_ints(&[[0, 1], [-1, 0]])).unwrap();
        let rep = check_connes_cocycle(&admissible_plane(), &om).unwrap();
        assert_eq!(
            rep.failure_at("cyclic sum", &[0, 0, 1]).unwrap().residual,
            vec![int(-3)]
        );
        let sym = BilinearForm::new(Matrix::identity(2)).unwrap();
        assert!(matches!(
            check_connes_cocycle(&admissible_plane(), &sym),
            Err(Error::NotSkew)
        ));
    }

    #[test]
    fn relative_rb_golden() {
        let line = idempotent_line();
        assert!(check_rb_adjoint(&line, &idempotent_line_rb())
            .unwrap()
            .passed());
        assert!(check_rb_adjoint(&line, &Matrix::zero(2, 2))
            .unwrap()
            .passed());
        let rep = check_rb_adjoint(&line, &Matrix::identity(2)).unwrap();
        let w = rep.witness().unwrap();
        assert_eq!(w.index, vec![0, 0]);
        // e1 − 2e1
        assert_eq!(w.residual, Vector::from_ints(&[-1, 0]).0);
    }

    #[test]
    fn rb_lift_golden() {
        let line = idempotent_line();
        let (d, r) = rb_to_ybe(&line, &idempotent_line_rb()).unwrap();
        assert_eq!(d.dim(), 4);
        assert!(r.is_skew());
        assert!(aybe_residual(&d, &r).unwrap().is_zero());
        let (_, r1) = rb_to_ybe(&line, &Matrix::identity(2)).unwrap();
        assert!(!aybe_residual(&d, &r1).unwrap().is_zero());
        let (_, r0) = rb_to_ybe(&line, &Matrix::zero(2, 2)).unwrap();
        assert!(r0.is_zero());
    }

    #[test]
    fn lifted_solution_is_triangular() {
        let (d, r) = rb_to_ybe(&idempotent_line(), &idempotent_line_rb()).unwrap();
        let (_, delta) = triangular_bialgebra(&d, &r).unwrap();
        assert!(check_bialgebra(&d, &delta).unwrap().passed());
        assert!(check_rb_operator_form(&d, &r).unwrap().passed());
    }

    #[test]
    fn non_solution_is_rejected() {
        let a = admissible_plane();
        if !aybe_residual(&a, &two_term()).unwrap().is_zero() {
            assert!(matches!(
                triangular_bialgebra(&a, &two_term()),
                Err(Error::NotYangBaxterSolution(_))
            ));
        }
        let not_skew = Tensor2::from_ints(&[[1, 0], [0, 0]]);
        assert!(matches!(
            triangular_bialgebra(&a, &not_skew),
            Err(Error::NotSkew)
        ));
    }

    #[test]
    fn gap_identity_on_examples() {
        let a = admissible_plane();
        assert!(aybe_rb_gap(&a, &two_term()).unwrap().passed());
        assert!(aybe_rb_gap(&a, &Tensor2::zero(2)).unwrap().passed());
    }

    #[test]
    fn dual_product_matches_delta_route_for_skew() {
        let a = admissible_plane();
        let r = two_term();
        let via_delta = crate::bialgebra::dual_algebra(&delta_from_r(&a, &r).unwrap());
        assert_eq!(dual_product_from_r(&a, &r).unwrap(), via_delta);
        let s = skew_part(&Tensor2::from_ints(&[[0, 3], [0, 0]]));
        assert_eq!(
            dual_product_from_r(&a, &s).unwrap(),
            crate::bialgebra::dual_algebra(&delta_from_r(&a, &s).unwrap())
        );
    }

    #[test]
    fn cocycle_residuals_vanish_for_trivial_inputs() {
        let a = admissible_plane();
        assert!(cocycle_conditions_residual(&a, &Tensor2::zero(2))
            .unwrap()
            .all_zero());
        let (d, r) = rb_to_ybe(&idempotent_line(), &idempotent_line_rb()).unwrap();
        assert!(cocycle_conditions_residual(&d, &r).unwrap().all_zero());
    }
}
