//! Matched pairs, quadratic forms, invariant tensors, the standard double on
//! `A ⊕ A*`, and Manin triples.
//!
//! On `A ⊕ A*` the first `n` basis vectors are the basis of `A` and the last
//! `n` are the dual basis.

use crate::algebra::{check_law, check_subalgebra, stack_rows, Algebra, LawKind};
use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::representation::{check_representation, require_admissible, Representation};
use crate::tensor::{apply_ops2, Matrix, Scalar, Tensor2, Vector};

/// Two algebras acting on each other. `la[i]`, `ra[i]` act on `B` for each
/// basis element of `A`; `lb[p]`, `rb[p]` act on `A` for each basis element of `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPairData {
    pub a: Algebra,
    pub b: Algebra,
    pub la: Vec<Matrix>,
    pub ra: Vec<Matrix>,
    pub lb: Vec<Matrix>,
    pub rb: Vec<Matrix>,
}

impl MatchedPairData {
    /// All four actions zero.
    pub fn trivial(a: Algebra, b: Algebra) -> Self {
        let (n, m) = (a.dim(), b.dim());
        MatchedPairData {
            la: vec![Matrix::zero(m, m); n],
            ra: vec![Matrix::zero(m, m); n],
            lb: vec![Matrix::zero(n, n); m],
            rb: vec![Matrix::zero(n, n); m],
            a,
            b,
        }
    }

    /// Coadjoint actions both ways: `lA = R*`, `rA = L*`, `lB = R∘*`, `rB = L∘*`.
    pub fn coadjoint(a: &Algebra, astar: &Algebra) -> Result<Self> {
        if a.dim() != astar.dim() {
            return Err(Error::DimensionMismatch {
                context: "dual algebra",
                expected: a.dim(),
                found: astar.dim(),
            });
        }
        let n = a.dim();
        Ok(MatchedPairData {
            la: (0..n).map(|i| a.right_mult(i).transpose()).collect(),
            ra: (0..n).map(|i| a.left_mult(i).transpose()).collect(),
            lb: (0..n).map(|p| astar.right_mult(p).transpose()).collect(),
            rb: (0..n).map(|p| astar.left_mult(p).transpose()).collect(),
            a: a.clone(),
            b: astar.clone(),
        })
    }

    fn validate(&self) -> Result<()> {
        let (n, m) = (self.a.dim(), self.b.dim());
        let ok_a = self.la.len() == n && self.ra.len() == n;
        let ok_b = self.lb.len() == m && self.rb.len() == m;
        if !ok_a || !ok_b {
            return Err(Error::DimensionMismatch {
                context: "matched pair action count",
                expected: n + m,
                found: self.la.len() + self.lb.len(),
            });
        }
        for x in self.la.iter().chain(&self.ra) {
            if x.rows() != m || x.cols() != m {
                return Err(Error::DimensionMismatch {
                    context: "action on second algebra",
                    expected: m,
                    found: x.rows(),
                });
            }
        }
        for x in self.lb.iter().chain(&self.rb) {
            if x.rows() != n || x.cols() != n {
                return Err(Error::DimensionMismatch {
                    context: "action on first algebra",
                    expected: n,
                    found: x.rows(),
                });
            }
        }
        Ok(())
    }
}

/// `(x + a)(y + b) = xy + lB(a)y + rB(b)x + a∘b + lA(x)b + rA(y)a` on `A ⊕ B`.
pub fn matched_pair_product(mp: &MatchedPairData) -> Result<Algebra> {
    mp.validate()?;
    let (n, m) = (mp.a.dim(), mp.b.dim());
    let mut out = Algebra::zero(n + m);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out.set_sc(i, j, k, mp.a.sc(i, j, k).clone());
            }
        }
    }
    for p in 0..m {
        for q in 0..m {
            for s in 0..m {
                out.set_sc(n + p, n + q, n + s, mp.b.sc(p, q, s).clone());
            }
        }
    }
    for i in 0..n {
        for p in 0..m {
            for k in 0..n {
                out.set_sc(i, n + p, k, mp.rb[p][(k, i)].clone());
                out.set_sc(n + p, i, k, mp.lb[p][(k, i)].clone());
            }
            for s in 0..m {
                out.set_sc(i, n + p, n + s, mp.la[i][(s, p)].clone());
                out.set_sc(n + p, i, n + s, mp.ra[i][(s, p)].clone());
            }
        }
    }
    Ok(out)
}

/// `Σ_c w_c (r[c] − l[c])`
fn diff_action(l: &[Matrix], r: &[Matrix], w: &Vector, d: usize) -> Matrix {
    let mut out = Matrix::zero(d, d);
    for (c, wc) in w.0.iter().enumerate() {
        out.add_scaled(wc, &r[c]);
        out.add_scaled(&-wc, &l[c]);
    }
    out
}

/// Compatibility residuals with values in `a`, for `x, y` in `a` and one
/// element of `b`: `(rB − lB)(β)(x·y)` against its six-term expansion.
#[allow(clippy::too_many_arguments, clippy::needless_range_loop)]
fn compatibility(
    part: &str,
    a: &Algebra,
    b_dim: usize,
    la: &[Matrix],
    ra: &[Matrix],
    lb: &[Matrix],
    rb: &[Matrix],
    report: &mut CheckReport,
) -> Result<()> {
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (Vector::basis(n, i), Vector::basis(n, j));
            let xy = a.basis_product(i, j);
            for p in 0..b_dim {
                let beta = Vector::basis(b_dim, p);
                let lhs = diff_action(lb, rb, &beta, n).apply(&xy);
                let rb_y = rb[p].apply(&y);
                let lb_x = lb[p].apply(&x);
                let mut rhs = a.multiply(&x, &rb_y)?;
                rhs = &rhs - &a.multiply(&rb_y, &x)?;
                rhs = &rhs + &a.multiply(&y, &lb_x)?;
                rhs = &rhs - &a.multiply(&lb_x, &y)?;
                rhs = &rhs + &diff_action(lb, rb, &la[j].apply(&beta), n).apply(&x);
                rhs = &rhs + &diff_action(lb, rb, &ra[i].apply(&beta), n).apply(&y);
                report.record(part, &[i, j, p], (&lhs - &rhs).0);
            }
        }
    }
    Ok(())
}

/// Both algebras A3-associative, both action pairs representations, and the
/// two compatibility identities on basis elements.
pub fn check_matched_pair(mp: &MatchedPairData) -> Result<CheckReport> {
    mp.validate()?;
    let mut report = CheckReport::new("matched pair");
    let mut first = check_law(&mp.a, LawKind::A3);
    first
        .failures
        .iter_mut()
        .for_each(|f| f.part = "first algebra a3".into());
    report.absorb(first);
    let mut second = check_law(&mp.b, LawKind::A3);
    second
        .failures
        .iter_mut()
        .for_each(|f| f.part = "second algebra a3".into());
    report.absorb(second);

    let on_b = Representation {
        algebra: mp.a.clone(),
        vdim: mp.b.dim(),
        l: mp.la.clone(),
        r: mp.ra.clone(),
    };
    let mut rep = check_representation(&on_b);
    rep.failures
        .iter_mut()
        .for_each(|f| f.part = "action on second".into());
    report.absorb(rep);
    let on_a = Representation {
        algebra: mp.b.clone(),
        vdim: mp.a.dim(),
        l: mp.lb.clone(),
        r: mp.rb.clone(),
    };
    let mut rep = check_representation(&on_a);
    rep.failures
        .iter_mut()
        .for_each(|f| f.part = "action on first".into());
    report.absorb(rep);

    compatibility(
        "compatibility in first",
        &mp.a,
        mp.b.dim(),
        &mp.la,
        &mp.ra,
        &mp.lb,
        &mp.rb,
        &mut report,
    )?;
    compatibility(
        "compatibility in second",
        &mp.b,
        mp.a.dim(),
        &mp.lb,
        &mp.rb,
        &mp.la,
        &mp.ra,
        &mut report,
    )?;
    Ok(report)
}

/// A bilinear form `B(u, v) = uᵀ G v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    pub gram: Matrix,
}

impl BilinearForm {
    pub fn new(gram: Matrix) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::DimensionMismatch {
                context: "gram matrix",
                expected: gram.rows(),
                found: gram.cols(),
            });
        }
        Ok(BilinearForm { gram })
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn eval(&self, u: &Vector, v: &Vector) -> Scalar {
        u.dot(&self.gram.apply(v))
    }

    /// `⟨b*, x⟩ + ⟨a*, y⟩` on `A ⊕ A*`.
    pub fn standard_pairing(n: usize) -> Self {
        let mut g = Matrix::zero(2 * n, 2 * n);
        for i in 0..n {
            g[(i, n + i)] = Scalar::from_integer(1.into());
            g[(n + i, i)] = Scalar::from_integer(1.into());
        }
        BilinearForm { gram: g }
    }
}

/// Symmetric, nondegenerate, and `B(xy, z) = B(x, yz)` on basis triples.
pub fn check_quadratic(a: &Algebra, form: &BilinearForm) -> Result<CheckReport> {
    let n = a.dim();
    if form.dim() != n {
        return Err(Error::DimensionMismatch {
            context: "bilinear form",
            expected: n,
            found: form.dim(),
        });
    }
    let mut report = CheckReport::new("quadratic");
    report.record_flag("symmetric", form.gram.is_symmetric());
    report.record_flag("nondegenerate", form.gram.inverse().is_ok());
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = form.eval(&a.basis_product(i, j), &Vector::basis(n, k));
                let rhs = form.eval(&Vector::basis(n, i), &a.basis_product(j, k));
                report.record("invariance", &[i, j, k], [lhs - rhs]);
            }
        }
    }
    Ok(report)
}

/// Matrix of `x ↦ B(x, ·)` from `A` to `A*` (column `i` is the image of `e_i`).
pub fn bflat(form: &BilinearForm) -> Matrix {
    form.gram.transpose()
}

/// `h(e_i) r = (id ⊗ L(e_i) − R(e_i) ⊗ id) r` for each `i`.
pub fn invariance_residual(a: &Algebra, r: &Tensor2) -> Result<Vec<Tensor2>> {
    let n = a.dim();
    if r.dim() != n {
        return Err(Error::DimensionMismatch {
            context: "tensor",
            expected: n,
            found: r.dim(),
        });
    }
    let id = Matrix::identity(n);
    (0..n)
        .map(|i| Ok(&apply_ops2(&id, &a.left_mult(i), r)? - &apply_ops2(&a.right_mult(i), &id, r)?))
        .collect()
}

/// The tensor dual to a nondegenerate form: coefficients are the inverse gram matrix.
pub fn form_to_tensor(form: &BilinearForm) -> Result<Tensor2> {
    let inv = bflat(form).inverse()?;
    Tensor2::from_matrix(&inv.transpose())
}

/// The algebra on `A ⊕ A*` built from both coadjoint actions, with the
/// standard pairing form. `astar` is the product on `A*` in the dual basis.
pub fn standard_double(a: &Algebra, astar: &Algebra) -> Result<(Algebra, BilinearForm)> {
    if a.dim() != astar.dim() {
        return Err(Error::DimensionMismatch {
            context: "dual algebra",
            expected: a.dim(),
            found: astar.dim(),
        });
    }
    require_admissible(a)?;
    require_admissible(astar)?;
    let n = a.dim();
    let mut d = Algebra::zero(2 * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                d.set_sc(i, j, k, a.sc(i, j, k).clone());
                d.set_sc(n + i, n + j, n + k, astar.sc(i, j, k).clone());
            }
        }
    }
    for i in 0..n {
        for b in 0..n {
            for k in 0..n {
                // e_i · e_b* = L∘*(e_b*) e_i + R*(e_i) e_b*
                d.set_sc(i, n + b, k, astar.sc(b, k, i).clone());
                d.set_sc(i, n + b, n + k, a.sc(k, i, b).clone());
                // e_b* · e_i = R∘*(e_b*) e_i + L*(e_i) e_b*
                d.set_sc(n + b, i, k, astar.sc(k, b, i).clone());
                d.set_sc(n + b, i, n + k, a.sc(i, k, b).clone());
            }
        }
    }
    let labels: Vec<String> = a
        .labels()
        .iter()
        .cloned()
        .chain(a.labels().iter().map(|l| format!("{l}*")))
        .collect();
    let d = d.with_labels(labels)?;
    Ok((d, BilinearForm::standard_pairing(n)))
}

/// The canonical spans `A = span(first n)` and `A* = span(last n)` of a double.
pub fn canonical_spans(n: usize) -> (Vec<Vector>, Vec<Vector>) {
    let first = (0..n).map(|i| Vector::basis(2 * n, i)).collect();
    let second = (0..n).map(|i| Vector::basis(2 * n, n + i)).collect();
    (first, second)
}

/// `(d, Bd)` is a quadratic A3-associative algebra and the two spans are
/// complementary isotropic subalgebras.
pub fn check_manin_triple(
    d: &Algebra,
    bd: &BilinearForm,
    span_a: &[Vector],
    span_a2: &[Vector],
) -> Result<CheckReport> {
    let dim = d.dim();
    let all: Vec<Vector> = span_a.iter().chain(span_a2).cloned().collect();
    if all.iter().any(|v| v.dim() != dim) {
        return Err(Error::DimensionMismatch {
            context: "span vector",
            expected: dim,
            found: all.iter().map(Vector::dim).find(|&k| k != dim).unwrap_or(0),
        });
    }
    let rank = stack_rows(&all, dim).rank();
    if rank != dim || all.len() != dim {
        return Err(Error::NotComplementary {
            rank,
            total: all.len(),
            dim,
        });
    }
    let mut report = CheckReport::new("manin triple");
    let mut a3 = check_law(d, LawKind::A3);
    a3.failures.iter_mut().for_each(|f| f.part = "a3".into());
    report.absorb(a3);
    report.absorb(check_quadratic(d, bd)?);
    for (name, span) in [("first", span_a), ("second", span_a2)] {
        let mut sub = check_subalgebra(d, span)?;
        sub.failures
            .iter_mut()
            .for_each(|f| f.part = format!("{name} subalgebra"));
        report.absorb(sub);
        for (p, u) in span.iter().enumerate() {
            for (q, v) in span.iter().enumerate() {
                report.record(&format!("{name} isotropic"), &[p, q], [bd.eval(u, v)]);
            }
        }
    }
    Ok(report)
}
