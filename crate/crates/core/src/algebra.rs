//! Algebras given by structure constants, and the single-algebra laws.
//!
//! Every law is multilinear, so it holds on all of `A` exactly when it holds
//! on every triple of basis elements. The checkers evaluate the two cubic
//! contractions `(e_i e_j) e_k` and `e_i (e_j e_k)` once and then assemble
//! each law from them.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::tensor::{int, Matrix, Scalar, Vector};

/// A finite-dimensional algebra: `e_i · e_j = Σ_k sc[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Algebra {
    labels: Vec<String>,
    sc: Vec<Scalar>,
}

pub fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

impl Algebra {
    pub fn new(labels: Vec<String>, sc: Vec<Scalar>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Parse("algebra dimension must be positive".into()));
        }
        if sc.len() != n * n * n {
            return Err(Error::DimensionMismatch {
                context: "structure constants",
                expected: n * n * n,
                found: sc.len(),
            });
        }
        let mut seen = HashSet::new();
        if let Some(dup) = labels.iter().find(|l| !seen.insert(l.as_str())) {
            return Err(Error::Parse(format!("duplicate basis label {dup:?}")));
        }
        Ok(Algebra { labels, sc })
    }

    pub fn zero(n: usize) -> Self {
        Algebra {
            labels: default_labels(n),
            sc: vec![Scalar::zero(); n * n * n],
        }
    }

    /// Builds an algebra from basis products `e_i · e_j`, each given as a coordinate vector.
    pub fn from_fn(n: usize, mut product: impl FnMut(usize, usize) -> Vector) -> Self {
        let mut a = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                let v = product(i, j);
                assert_eq!(v.dim(), n, "product has wrong dimension");
                for k in 0..n {
                    a.sc[(i * n + j) * n + k] = v[k].clone();
                }
            }
        }
        a
    }

    /// Integer structure constants from a sparse table of `(i, j, coords)`.
    pub fn from_int_table(n: usize, table: &[(usize, usize, &[i64])]) -> Self {
        let mut a = Self::zero(n);
        for &(i, j, coords) in table {
            for (k, &c) in coords.iter().enumerate() {
                a.sc[(i * n + j) * n + k] = int(c);
            }
        }
        a
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        let a = Algebra::new(labels, std::mem::take(&mut self.sc))?;
        Ok(a)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn structure_constants(&self) -> &[Scalar] {
        &self.sc
    }

    #[inline]
    pub fn sc(&self, i: usize, j: usize, k: usize) -> &Scalar {
        let n = self.dim();
        &self.sc[(i * n + j) * n + k]
    }

    pub fn set_sc(&mut self, i: usize, j: usize, k: usize, value: Scalar) {
        let n = self.dim();
        self.sc[(i * n + j) * n + k] = value;
    }

    /// `e_i · e_j`
    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        let n = self.dim();
        Vector(self.sc[(i * n + j) * n..(i * n + j + 1) * n].to_vec())
    }

    /// `x · y`, bilinear in both arguments.
    pub fn multiply(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        let n = self.dim();
        for v in [x, y] {
            if v.dim() != n {
                return Err(Error::DimensionMismatch {
                    context: "multiply",
                    expected: n,
                    found: v.dim(),
                });
            }
        }
        let mut out = Vector::zero(n);
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let c = &x[i] * &y[j];
                for k in 0..n {
                    let s = self.sc(i, j, k);
                    if !s.is_zero() {
                        out[k] += &c * s;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `L(e_i): y ↦ e_i · y`; column `j` is `e_i · e_j`.
    pub fn left_mult(&self, i: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zero(n, n);
        for j in 0..n {
            for k in 0..n {
                m[(k, j)] = self.sc(i, j, k).clone();
            }
        }
        m
    }

    /// Matrix of `R(e_j): x ↦ x · e_j`; column `i` is `e_i · e_j`.
    pub fn right_mult(&self, j: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            for k in 0..n {
                m[(k, i)] = self.sc(i, j, k).clone();
            }
        }
        m
    }

    /// `L(x)` for an arbitrary element.
    pub fn left_op(&self, x: &Vector) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.add_scaled(&x[i], &self.left_mult(i));
        }
        m
    }

    /// `R(x)` for an arbitrary element.
    pub fn right_op(&self, x: &Vector) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.add_scaled(&x[i], &self.right_mult(i));
        }
        m
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..i).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// Multiplies every structure constant by `c`.
    pub fn scale(&self, c: &Scalar) -> Algebra {
        Algebra {
            labels: self.labels.clone(),
            sc: self.sc.iter().map(|x| x * c).collect(),
        }
    }

    /// Direct sum with zero cross products; labels of `other` are suffixed on collision.
    pub fn direct_sum(&self, other: &Algebra) -> Algebra {
        let (n, m) = (self.dim(), other.dim());
        let mut out = Algebra::zero(n + m);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    out.set_sc(i, j, k, self.sc(i, j, k).clone());
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    out.set_sc(n + i, n + j, n + k, other.sc(i, j, k).clone());
                }
            }
        }
        out
    }

    /// Transports the product along an invertible change of basis `g`
    /// (columns of `g` are the new basis in old coordinates):
    /// `x ·' y = g⁻¹(g x · g y)`.
    pub fn transport(&self, g: &Matrix) -> Result<Algebra> {
        let n = self.dim();
        if g.rows() != n || g.cols() != n {
            return Err(Error::DimensionMismatch {
                context: "basis change",
                expected: n,
                found: g.rows(),
            });
        }
        let ginv = g.inverse()?;
        let cols: Vec<Vector> = (0..n).map(|i| g.column(i)).collect();
        let mut out = Algebra::zero(n);
        out.labels = self.labels.clone();
        for i in 0..n {
            for j in 0..n {
                let p = ginv.apply(&self.multiply(&cols[i], &cols[j])?);
                for k in 0..n {
                    out.set_sc(i, j, k, p[k].clone());
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let p = self.basis_product(i, j);
                if p.is_zero() {
                    continue;
                }
                writeln!(
                    f,
                    "{} · {} = {}",
                    self.labels[i],
                    self.labels[j],
                    format_combination(&p, &self.labels)
                )?;
            }
        }
        Ok(())
    }
}

/// Renders `Σ c_k e_k` using basis labels, e.g. `e1 + 2·e2`.
pub fn format_combination(v: &Vector, labels: &[String]) -> String {
    use crate::tensor::format_scalar;
    use num_traits::{One, Signed};
    let mut out = String::new();
    for (k, c) in v.0.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        if mag.is_one() {
            out.push_str(&labels[k]);
        } else {
            out.push_str(&format!("{}·{}", format_scalar(&mag), labels[k]));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// The seven laws that can be checked on a single algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LawKind {
    /// `(xy)z + (yz)x + (zx)y = x(yz) + y(zx) + z(xy)`
    A3,
    /// `(xy)z = x(yz)`
    Associative,
    /// `3(xy)z = 3x(yz) + (xz)y + (yz)x − (yx)z − (zx)y`
    AdmissiblePoisson,
    /// `(xz)y − x(zy) = y(zx) − (yz)x`
    Admissible,
    /// `(xy)z − x(yz) = (yx)z − y(xz)`
    LeftSymmetric,
    /// `(xy)z − x(yz) = (xz)y − x(zy)`
    RightSymmetric,
    /// Jacobi identity for the commutator, expanded in the product.
    LieAdmissible,
}

impl LawKind {
    pub const ALL: [LawKind; 7] = [
        LawKind::A3,
        LawKind::Associative,
        LawKind::AdmissiblePoisson,
        LawKind::Admissible,
        LawKind::LeftSymmetric,
        LawKind::RightSymmetric,
        LawKind::LieAdmissible,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LawKind::A3 => "a3",
            LawKind::Associative => "associative",
            LawKind::AdmissiblePoisson => "admissible-poisson",
            LawKind::Admissible => "admissible",
            LawKind::LeftSymmetric => "left-symmetric",
            LawKind::RightSymmetric => "right-symmetric",
            LawKind::LieAdmissible => "lie-admissible",
        }
    }

    /// Signed terms of the law: `(coefficient, left_nested, permutation)`;
    /// `left_nested` selects `(ab)c` over `a(bc)`, and the permutation maps
    /// `(x, y, z)` positions to `(a, b, c)`.
    fn terms(self) -> &'static [(i64, bool, [usize; 3])] {
        const X: usize = 0;
        const Y: usize = 1;
        const Z: usize = 2;
        match self {
            LawKind::A3 => &[
                (1, true, [X, Y, Z]),
                (1, true, [Y, Z, X]),
                (1, true, [Z, X, Y]),
                (-1, false, [X, Y, Z]),
                (-1, false, [Y, Z, X]),
                (-1, false, [Z, X, Y]),
            ],
            LawKind::Associative => &[(1, true, [X, Y, Z]), (-1, false, [X, Y, Z])],
            LawKind::AdmissiblePoisson => &[
                (3, true, [X, Y, Z]),
                (-3, false, [X, Y, Z]),
                (-1, true, [X, Z, Y]),
                (-1, true, [Y, Z, X]),
                (1, true, [Y, X, Z]),
                (1, true, [Z, X, Y]),
            ],
            LawKind::Admissible => &[
                (1, true, [X, Z, Y]),
                (-1, false, [X, Z, Y]),
                (-1, false, [Y, Z, X]),
                (1, true, [Y, Z, X]),
            ],
            LawKind::LeftSymmetric => &[
                (1, true, [X, Y, Z]),
                (-1, false, [X, Y, Z]),
                (-1, true, [Y, X, Z]),
                (1, false, [Y, X, Z]),
            ],
            LawKind::RightSymmetric => &[
                (1, true, [X, Y, Z]),
                (-1, false, [X, Y, Z]),
                (-1, true, [X, Z, Y]),
                (1, false, [X, Z, Y]),
            ],
            LawKind::LieAdmissible => &[
                (1, true, [X, Y, Z]),
                (-1, true, [Y, X, Z]),
                (1, true, [Y, Z, X]),
                (-1, true, [Z, Y, X]),
                (1, true, [Z, X, Y]),
                (-1, true, [X, Z, Y]),
                (-1, false, [X, Y, Z]),
                (1, false, [X, Z, Y]),
                (-1, false, [Y, Z, X]),
                (1, false, [Y, X, Z]),
                (-1, false, [Z, X, Y]),
                (1, false, [Z, Y, X]),
            ],
        }
    }
}

impl fmt::Display for LawKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LawKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        LawKind::ALL
            .into_iter()
            .find(|l| l.name() == s.trim().to_ascii_lowercase())
            .ok_or_else(|| Error::Parse(format!("unknown law {s:?}")))
    }
}

/// `(e_i e_j) e_k` and `e_i (e_j e_k)` for all basis triples, flattened as
/// `[((i*n + j)*n + k)*n + m]`.
struct Cubics {
    n: usize,
    left: Vec<Scalar>,
    right: Vec<Scalar>,
}

impl Cubics {
    fn new(a: &Algebra) -> Self {
        let n = a.dim();
        let mut left = vec![Scalar::zero(); n * n * n * n];
        let mut right = vec![Scalar::zero(); n * n * n * n];
        for i in 0..n {
            for j in 0..n {
                for p in 0..n {
                    let s = a.sc(i, j, p);
                    if s.is_zero() {
                        continue;
                    }
                    for k in 0..n {
                        for m in 0..n {
                            // (e_i e_j) e_k picks up sc[i][j][p] sc[p][k][m]
                            let t = a.sc(p, k, m);
                            if !t.is_zero() {
                                left[((i * n + j) * n + k) * n + m] += s * t;
                            }
                        }
                    }
                }
            }
        }
        for j in 0..n {
            for k in 0..n {
                for p in 0..n {
                    let s = a.sc(j, k, p);
                    if s.is_zero() {
                        continue;
                    }
                    for i in 0..n {
                        for m in 0..n {
                            // e_i (e_j e_k) picks up sc[j][k][p] sc[i][p][m]
                            let t = a.sc(i, p, m);
                            if !t.is_zero() {
                                right[((i * n + j) * n + k) * n + m] += s * t;
                            }
                        }
                    }
                }
            }
        }
        Cubics { n, left, right }
    }

    fn slice(&self, left_nested: bool, [i, j, k]: [usize; 3]) -> &[Scalar] {
        let n = self.n;
        let base = ((i * n + j) * n + k) * n;
        if left_nested {
            &self.left[base..base + n]
        } else {
            &self.right[base..base + n]
        }
    }
}

/// Evaluates `law` on every basis triple; every nonzero residual is reported,
/// first failing triple (lexicographic) first.
pub fn check_law(a: &Algebra, law: LawKind) -> CheckReport {
    let n = a.dim();
    let cubics = Cubics::new(a);
    let mut report = CheckReport::new(law.name());
    let terms = law.terms();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let xyz = [i, j, k];
                let mut res = vec![Scalar::zero(); n];
                for &(c, left_nested, perm) in terms {
                    let c = int(c);
                    let idx = [xyz[perm[0]], xyz[perm[1]], xyz[perm[2]]];
                    for (r, v) in res.iter_mut().zip(cubics.slice(left_nested, idx)) {
                        if !v.is_zero() {
                            *r += &c * v;
                        }
                    }
                }
                report.record(law.name(), &xyz, res);
            }
        }
    }
    report
}

/// Commutator bracket `[x, y] = x·y − y·x` as an algebra on the same space.
pub fn commutator_algebra(a: &Algebra) -> Algebra {
    let n = a.dim();
    let mut out = a.clone();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out.set_sc(i, j, k, a.sc(i, j, k) - a.sc(j, i, k));
            }
        }
    }
    out
}

/// Jacobi identity `[[x,y],z] + [[y,z],x] + [[z,x],y] = 0`, reading the
/// algebra's product as the bracket.
pub fn check_jacobi(bracket: &Algebra) -> CheckReport {
    let n = bracket.dim();
    let mut report = CheckReport::new("jacobi");
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut res = Vector::zero(n);
                for [a, b, c] in [[i, j, k], [j, k, i], [k, i, j]] {
                    let ab = bracket.basis_product(a, b);
                    for p in 0..n {
                        res.add_scaled(&ab[p], &bracket.basis_product(p, c));
                    }
                }
                report.record("jacobi", &[i, j, k], res.0);
            }
        }
    }
    report
}

/// `φ(e_i ·₁ e_j) = φ(e_i) ·₂ φ(e_j)` for all basis pairs.
pub fn check_homomorphism(phi: &Matrix, a1: &Algebra, a2: &Algebra) -> Result<CheckReport> {
    if phi.rows() != a2.dim() || phi.cols() != a1.dim() {
        return Err(Error::DimensionMismatch {
            context: "homomorphism shape",
            expected: a2.dim() * a1.dim(),
            found: phi.rows() * phi.cols(),
        });
    }
    let n = a1.dim();
    let images: Vec<Vector> = (0..n).map(|i| phi.column(i)).collect();
    let mut report = CheckReport::new("homomorphism");
    for i in 0..n {
        for j in 0..n {
            let lhs = phi.apply(&a1.basis_product(i, j));
            let rhs = a2.multiply(&images[i], &images[j])?;
            report.record("homomorphism", &[i, j], (&lhs - &rhs).0);
        }
    }
    Ok(report)
}

/// Whether `span` is closed under the product. Membership of each product
/// in the span is decided by exact rank; a failure records the offending
/// product.
pub fn check_subalgebra(a: &Algebra, span: &[Vector]) -> Result<CheckReport> {
    let n = a.dim();
    if let Some(v) = span.iter().find(|v| v.dim() != n) {
        return Err(Error::DimensionMismatch {
            context: "subalgebra span",
            expected: n,
            found: v.dim(),
        });
    }
    let base_rank = stack_rows(span, n).rank();
    let mut report = CheckReport::new("subalgebra");
    for (p, u) in span.iter().enumerate() {
        for (q, v) in span.iter().enumerate() {
            let w = a.multiply(u, v)?;
            let mut rows = span.to_vec();
            rows.push(w.clone());
            if stack_rows(&rows, n).rank() != base_rank {
                report.record("closure", &[p, q], w.0);
            }
        }
    }
    Ok(report)
}

pub(crate) fn stack_rows(vs: &[Vector], n: usize) -> Matrix {
    let mut m = Matrix::zero(vs.len(), n);
    for (i, v) in vs.iter().enumerate() {
        for j in 0..n {
            m[(i, j)] = v[j].clone();
        }
    }
    m
}
