//! Naive reference evaluation of every identity.
//!
//! Nothing here calls the optimized checkers or the matrix and tensor
//! helpers: products are expanded from the structure constants with plain
//! nested loops. Each identity produces a [`CheckReport`] with the same part
//! names, index order and residual layout as the corresponding checker, so
//! the two can be compared with `==`.

#![allow(clippy::needless_range_loop, clippy::too_many_arguments)]

use num_traits::{One, Zero};

use crate::algebra::{Algebra, LawKind};
use crate::bialgebra::Comultiplication;
use crate::double::{BilinearForm, MatchedPairData};
use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::representation::Representation;
use crate::tensor::{Matrix, Scalar, Tensor2};

/// Identifiers accepted by [`brute_residual`].
pub const IDENTITIES: [&str; 22] = [
    "a3",
    "associative",
    "admissible-poisson",
    "admissible",
    "left-symmetric",
    "right-symmetric",
    "lie-admissible",
    "jacobi",
    "homomorphism",
    "representation",
    "associative-representation",
    "admissible-representation",
    "equivalence",
    "quadratic",
    "matched-pair",
    "coalgebra",
    "coassociative",
    "admissible-coalgebra",
    "bialgebra",
    "aybe",
    "relative-rota-baxter",
    "connes-cocycle",
];

/// Inputs for [`brute_residual`]; each identity reads the fields it needs.
#[derive(Clone, Debug, Default)]
pub struct BruteInputs {
    pub algebra: Option<Algebra>,
    /// Codomain of a homomorphism.
    pub target: Option<Algebra>,
    pub rep: Option<Representation>,
    /// Second representation for equivalence.
    pub rep2: Option<Representation>,
    pub delta: Option<Comultiplication>,
    pub tensor: Option<Tensor2>,
    pub form: Option<BilinearForm>,
    pub map: Option<Matrix>,
    pub matched_pair: Option<MatchedPairData>,
}

type V = Vec<Scalar>;
type M = Vec<Vec<Scalar>>;

fn zeros(n: usize) -> V {
    vec![Scalar::zero(); n]
}

fn unit(n: usize, i: usize) -> V {
    let mut v = zeros(n);
    v[i] = Scalar::one();
    v
}

fn lin(terms: &[(i64, &V)]) -> V {
    let n = terms.first().map(|t| t.1.len()).unwrap_or(0);
    let mut out = zeros(n);
    for (c, v) in terms {
        let c = Scalar::from_integer((*c).into());
        for k in 0..n {
            out[k] += &c * &v[k];
        }
    }
    out
}

fn sub(x: &V, y: &V) -> V {
    lin(&[(1, x), (-1, y)])
}

fn add(x: &V, y: &V) -> V {
    lin(&[(1, x), (1, y)])
}

/// `x · y` straight from the structure constants.
fn mul(a: &Algebra, x: &V, y: &V) -> V {
    let n = a.dim();
    let mut out = zeros(n);
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                out[k] += &x[i] * &y[j] * a.sc(i, j, k);
            }
        }
    }
    out
}

fn mat(m: &Matrix) -> M {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m[(i, j)].clone()).collect())
        .collect()
}

fn mat_zero(r: usize, c: usize) -> M {
    vec![zeros(c); r]
}

fn mm(x: &M, y: &M) -> M {
    let (r, k, c) = (x.len(), y.len(), y.first().map_or(0, Vec::len));
    let mut out = mat_zero(r, c);
    for i in 0..r {
        for j in 0..c {
            for p in 0..k {
                out[i][j] += &x[i][p] * &y[p][j];
            }
        }
    }
    out
}

fn mv(x: &M, v: &V) -> V {
    x.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .map(|(a, b)| a * b)
                .fold(Scalar::zero(), |s, t| s + t)
        })
        .collect()
}

fn mlin(terms: &[(i64, &M)]) -> M {
    let (r, c) = (terms[0].1.len(), terms[0].1.first().map_or(0, Vec::len));
    let mut out = mat_zero(r, c);
    for (k, m) in terms {
        let k = Scalar::from_integer((*k).into());
        for i in 0..r {
            for j in 0..c {
                out[i][j] += &k * &m[i][j];
            }
        }
    }
    out
}

fn flat(m: &M) -> V {
    m.iter().flatten().cloned().collect()
}

fn transpose(m: &M) -> M {
    let c = m.first().map_or(0, Vec::len);
    (0..c)
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

/// `Σ w_k mats[k]`
fn combine(mats: &[M], w: &V, d: usize) -> M {
    let mut out = mat_zero(d, d);
    for (k, m) in mats.iter().enumerate() {
        for i in 0..d {
            for j in 0..d {
                out[i][j] += &w[k] * &m[i][j];
            }
        }
    }
    out
}

/// Left multiplication by `e_i` as a matrix, read off the constants.
fn left(a: &Algebra, i: usize) -> M {
    let n = a.dim();
    (0..n)
        .map(|k| (0..n).map(|j| a.sc(i, j, k).clone()).collect())
        .collect()
}

fn right(a: &Algebra, j: usize) -> M {
    let n = a.dim();
    (0..n)
        .map(|k| (0..n).map(|i| a.sc(i, j, k).clone()).collect())
        .collect()
}

fn det(m: &M) -> Scalar {
    let n = m.len();
    if n == 0 {
        return Scalar::one();
    }
    let mut total = Scalar::zero();
    for c in 0..n {
        if m[0][c].is_zero() {
            continue;
        }
        let minor: M = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != c)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][c] * det(&minor);
        if c % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn need<'a, T>(x: &'a Option<T>, what: &'static str) -> Result<&'a T> {
    x.as_ref().ok_or(Error::MissingInput(what))
}

/// Evaluates the identity `expr_id` on `inputs` by direct expansion.
pub fn brute_residual(expr_id: &str, inputs: &BruteInputs) -> Result<CheckReport> {
    if let Ok(law) = expr_id.parse::<LawKind>() {
        return Ok(law_report(law, need(&inputs.algebra, "algebra")?));
    }
    match expr_id {
        "jacobi" => Ok(jacobi(need(&inputs.algebra, "algebra")?)),
        "homomorphism" => homomorphism(
            need(&inputs.algebra, "algebra")?,
            need(&inputs.target, "target")?,
            need(&inputs.map, "map")?,
        ),
        "representation" => Ok(representation(need(&inputs.rep, "representation")?)),
        "associative-representation" => Ok(associative_representation(need(
            &inputs.rep,
            "representation",
        )?)),
        "admissible-representation" => Ok(admissible_representation(need(
            &inputs.rep,
            "representation",
        )?)),
        "equivalence" => equivalence(
            need(&inputs.rep, "representation")?,
            need(&inputs.rep2, "second representation")?,
            need(&inputs.map, "map")?,
        ),
        "quadratic" => quadratic(
            need(&inputs.algebra, "algebra")?,
            need(&inputs.form, "form")?,
        ),
        "matched-pair" => Ok(matched_pair(need(&inputs.matched_pair, "matched pair")?)),
        "coalgebra" => Ok(coalgebra(need(&inputs.delta, "comultiplication")?)),
        "coassociative" => Ok(coassociative(need(&inputs.delta, "comultiplication")?)),
        "admissible-coalgebra" => Ok(admissible_coalgebra(need(
            &inputs.delta,
            "comultiplication",
        )?)),
        "bialgebra" => bialgebra(
            need(&inputs.algebra, "algebra")?,
            need(&inputs.delta, "comultiplication")?,
        ),
        "aybe" => aybe(
            need(&inputs.algebra, "algebra")?,
            need(&inputs.tensor, "tensor")?,
        ),
        "relative-rota-baxter" => relative_rb(
            need(&inputs.rep, "representation")?,
            need(&inputs.map, "map")?,
        ),
        "connes-cocycle" => connes(
            need(&inputs.algebra, "algebra")?,
            need(&inputs.form, "form")?,
        ),
        other => Err(Error::UnknownIdentity(other.to_string())),
    }
}

fn law_value(law: LawKind, a: &Algebra, x: &V, y: &V, z: &V) -> V {
    let m = |p: &V, q: &V| mul(a, p, q);
    match law {
        LawKind::A3 => lin(&[
            (1, &m(&m(x, y), z)),
            (1, &m(&m(y, z), x)),
            (1, &m(&m(z, x), y)),
            (-1, &m(x, &m(y, z))),
            (-1, &m(y, &m(z, x))),
            (-1, &m(z, &m(x, y))),
        ]),
        LawKind::Associative => sub(&m(&m(x, y), z), &m(x, &m(y, z))),
        LawKind::AdmissiblePoisson => lin(&[
            (3, &m(&m(x, y), z)),
            (-3, &m(x, &m(y, z))),
            (-1, &m(&m(x, z), y)),
            (-1, &m(&m(y, z), x)),
            (1, &m(&m(y, x), z)),
            (1, &m(&m(z, x), y)),
        ]),
        LawKind::Admissible => lin(&[
            (1, &m(&m(x, z), y)),
            (-1, &m(x, &m(z, y))),
            (-1, &m(y, &m(z, x))),
            (1, &m(&m(y, z), x)),
        ]),
        LawKind::LeftSymmetric => lin(&[
            (1, &m(&m(x, y), z)),
            (-1, &m(x, &m(y, z))),
            (-1, &m(&m(y, x), z)),
            (1, &m(y, &m(x, z))),
        ]),
        LawKind::RightSymmetric => lin(&[
            (1, &m(&m(x, y), z)),
            (-1, &m(x, &m(y, z))),
            (-1, &m(&m(x, z), y)),
            (1, &m(x, &m(z, y))),
        ]),
        LawKind::LieAdmissible => {
            let br = |p: &V, q: &V| sub(&m(p, q), &m(q, p));
            lin(&[
                (1, &br(&br(x, y), z)),
                (1, &br(&br(y, z), x)),
                (1, &br(&br(z, x), y)),
            ])
        }
    }
}

fn law_report(law: LawKind, a: &Algebra) -> CheckReport {
    let n = a.dim();
    let mut report = CheckReport::new(law.name());
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = law_value(law, a, &unit(n, i), &unit(n, j), &unit(n, k));
                report.record(law.name(), &[i, j, k], v);
            }
        }
    }
    report
}

fn jacobi(a: &Algebra) -> CheckReport {
    let n = a.dim();
    let m = |p: &V, q: &V| mul(a, p, q);
    let mut report = CheckReport::new("jacobi");
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (unit(n, i), unit(n, j), unit(n, k));
                let v = lin(&[
                    (1, &m(&m(&x, &y), &z)),
                    (1, &m(&m(&y, &z), &x)),
                    (1, &m(&m(&z, &x), &y)),
                ]);
                report.record("jacobi", &[i, j, k], v);
            }
        }
    }
    report
}

fn homomorphism(a1: &Algebra, a2: &Algebra, phi: &Matrix) -> Result<CheckReport> {
    if phi.rows() != a2.dim() || phi.cols() != a1.dim() {
        return Err(Error::DimensionMismatch {
            context: "homomorphism shape",
            expected: a2.dim() * a1.dim(),
            found: phi.rows() * phi.cols(),
        });
    }
    let p = mat(phi);
    let n = a1.dim();
    let mut report = CheckReport::new("homomorphism");
    for i in 0..n {
        for j in 0..n {
            let lhs = mv(&p, &mul(a1, &unit(n, i), &unit(n, j)));
            let rhs = mul(a2, &mv(&p, &unit(n, i)), &mv(&p, &unit(n, j)));
            report.record("homomorphism", &[i, j], sub(&lhs, &rhs));
        }
    }
    Ok(report)
}

struct Rep {
    n: usize,
    d: usize,
    l: Vec<M>,
    r: Vec<M>,
    sc: Algebra,
}

impl Rep {
    fn of(rho: &Representation) -> Self {
        Rep {
            n: rho.algebra.dim(),
            d: rho.vdim,
            l: rho.l.iter().map(mat).collect(),
            r: rho.r.iter().map(mat).collect(),
            sc: rho.algebra.clone(),
        }
    }

    fn product_coords(&self, i: usize, j: usize) -> V {
        (0..self.n).map(|k| self.sc.sc(i, j, k).clone()).collect()
    }
}

fn rep_residual(rep: &Rep, i: usize, j: usize) -> M {
    let p = rep.product_coords(i, j);
    let (li, lj, ri, rj) = (&rep.l[i], &rep.l[j], &rep.r[i], &rep.r[j]);
    mlin(&[
        (1, &combine(&rep.l, &p, rep.d)),
        (-1, &combine(&rep.r, &p, rep.d)),
        (1, &mm(ri, lj)),
        (-1, &mm(li, lj)),
        (1, &mm(rj, ri)),
        (-1, &mm(lj, ri)),
    ])
}

fn representation(rho: &Representation) -> CheckReport {
    let rep = Rep::of(rho);
    let mut report = CheckReport::new("representation");
    for i in 0..rep.n {
        for j in 0..rep.n {
            report.record("representation", &[i, j], flat(&rep_residual(&rep, i, j)));
        }
    }
    report
}

fn associative_representation(rho: &Representation) -> CheckReport {
    let rep = Rep::of(rho);
    let n = rep.n;
    let mut report = CheckReport::new("associative representation");
    for i in 0..n {
        for j in 0..n {
            let v = mlin(&[
                (1, &combine(&rep.l, &rep.product_coords(i, j), rep.d)),
                (-1, &mm(&rep.l[i], &rep.l[j])),
            ]);
            report.record("left", &[i, j], flat(&v));
        }
    }
    for i in 0..n {
        for j in 0..n {
            let v = mlin(&[
                (1, &combine(&rep.r, &rep.product_coords(i, j), rep.d)),
                (-1, &mm(&rep.r[j], &rep.r[i])),
            ]);
            report.record("right", &[i, j], flat(&v));
        }
    }
    for i in 0..n {
        for j in 0..n {
            let v = mlin(&[
                (1, &mm(&rep.l[i], &rep.r[j])),
                (-1, &mm(&rep.r[j], &rep.l[i])),
            ]);
            report.record("commuting", &[i, j], flat(&v));
        }
    }
    report
}

fn admissible_representation(rho: &Representation) -> CheckReport {
    let rep = Rep::of(rho);
    let mut report = CheckReport::new("admissible representation");
    for i in 0..rep.n {
        for j in 0..rep.n {
            let (li, lj, ri, rj) = (&rep.l[i], &rep.l[j], &rep.r[i], &rep.r[j]);
            let v = mlin(&[
                (1, &mm(rj, li)),
                (-1, &mm(li, rj)),
                (1, &mm(ri, lj)),
                (-1, &mm(lj, ri)),
            ]);
            report.record("admissible representation", &[i, j], flat(&v));
        }
    }
    report
}

fn equivalence(rho: &Representation, rho2: &Representation, phi: &Matrix) -> Result<CheckReport> {
    let (a, b) = (Rep::of(rho), Rep::of(rho2));
    if a.n != b.n {
        return Err(Error::DimensionMismatch {
            context: "equivalent representations",
            expected: a.n,
            found: b.n,
        });
    }
    if a.d != b.d || phi.rows() != a.d || phi.cols() != a.d {
        return Err(Error::DimensionMismatch {
            context: "intertwiner",
            expected: a.d,
            found: phi.rows(),
        });
    }
    let p = mat(phi);
    if det(&p).is_zero() {
        return Err(Error::NotInvertible("intertwiner".into()));
    }
    let mut report = CheckReport::new("equivalence");
    for i in 0..a.n {
        report.record(
            "left",
            &[i],
            flat(&mlin(&[(1, &mm(&p, &a.l[i])), (-1, &mm(&b.l[i], &p))])),
        );
    }
    for i in 0..a.n {
        report.record(
            "right",
            &[i],
            flat(&mlin(&[(1, &mm(&p, &a.r[i])), (-1, &mm(&b.r[i], &p))])),
        );
    }
    Ok(report)
}

fn bil(g: &M, u: &V, v: &V) -> Scalar {
    let mut s = Scalar::zero();
    for i in 0..u.len() {
        for j in 0..v.len() {
            s += &u[i] * &g[i][j] * &v[j];
        }
    }
    s
}

fn quadratic(a: &Algebra, form: &BilinearForm) -> Result<CheckReport> {
    let n = a.dim();
    if form.dim() != n {
        return Err(Error::DimensionMismatch {
            context: "bilinear form",
            expected: n,
            found: form.dim(),
        });
    }
    let g = mat(&form.gram);
    let mut report = CheckReport::new("quadratic");
    report.record_flag(
        "symmetric",
        (0..n).all(|i| (0..n).all(|j| g[i][j] == g[j][i])),
    );
    report.record_flag("nondegenerate", !det(&g).is_zero());
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (unit(n, i), unit(n, j), unit(n, k));
                let v = bil(&g, &mul(a, &x, &y), &z) - bil(&g, &x, &mul(a, &y, &z));
                report.record("invariance", &[i, j, k], [v]);
            }
        }
    }
    Ok(report)
}

fn renamed(mut r: CheckReport, part: &str) -> CheckReport {
    for f in &mut r.failures {
        f.part = part.to_string();
    }
    r
}

/// Values in the first algebra of the compatibility identity, for
/// `x = e_i`, `y = e_j` in `a` and `β = f_p` in the other algebra.
fn compat(
    a: &Algebra,
    m: usize,
    la: &[M],
    ra: &[M],
    lb: &[M],
    rb: &[M],
    i: usize,
    j: usize,
    p: usize,
) -> V {
    let n = a.dim();
    let x = unit(n, i);
    let y = unit(n, j);
    let beta = unit(m, p);
    let diff = |w: &V| mlin(&[(1, &combine(rb, w, n)), (-1, &combine(lb, w, n))]);
    let lhs = mv(&diff(&beta), &mul(a, &x, &y));
    let rby = mv(&rb[p], &y);
    let lbx = mv(&lb[p], &x);
    let rhs = lin(&[
        (1, &mul(a, &x, &rby)),
        (-1, &mul(a, &rby, &x)),
        (1, &mul(a, &y, &lbx)),
        (-1, &mul(a, &lbx, &y)),
        (1, &mv(&diff(&mv(&la[j], &beta)), &x)),
        (1, &mv(&diff(&mv(&ra[i], &beta)), &y)),
    ]);
    sub(&lhs, &rhs)
}

fn matched_pair(mp: &MatchedPairData) -> CheckReport {
    let mut report = CheckReport::new("matched pair");
    report.absorb(renamed(law_report(LawKind::A3, &mp.a), "first algebra a3"));
    report.absorb(renamed(law_report(LawKind::A3, &mp.b), "second algebra a3"));
    let on_b = Representation {
        algebra: mp.a.clone(),
        vdim: mp.b.dim(),
        l: mp.la.clone(),
        r: mp.ra.clone(),
    };
    report.absorb(renamed(representation(&on_b), "action on second"));
    let on_a = Representation {
        algebra: mp.b.clone(),
        vdim: mp.a.dim(),
        l: mp.lb.clone(),
        r: mp.rb.clone(),
    };
    report.absorb(renamed(representation(&on_a), "action on first"));
    let (la, ra, lb, rb): (Vec<M>, Vec<M>, Vec<M>, Vec<M>) = (
        mp.la.iter().map(mat).collect(),
        mp.ra.iter().map(mat).collect(),
        mp.lb.iter().map(mat).collect(),
        mp.rb.iter().map(mat).collect(),
    );
    let (n, m) = (mp.a.dim(), mp.b.dim());
    for i in 0..n {
        for j in 0..n {
            for p in 0..m {
                report.record(
                    "compatibility in first",
                    &[i, j, p],
                    compat(&mp.a, m, &la, &ra, &lb, &rb, i, j, p),
                );
            }
        }
    }
    for i in 0..m {
        for j in 0..m {
            for p in 0..n {
                report.record(
                    "compatibility in second",
                    &[i, j, p],
                    compat(&mp.b, n, &lb, &rb, &la, &ra, i, j, p),
                );
            }
        }
    }
    report
}

/// `(Δ⊗id)Δ(e_i)` and `(id⊗Δ)Δ(e_i)` as nested arrays `[x][y][z]`.
fn iterates(delta: &Comultiplication, i: usize) -> (Vec<M>, Vec<M>) {
    let n = delta.dim();
    let mut l = vec![mat_zero(n, n); n];
    let mut r = vec![mat_zero(n, n); n];
    for j in 0..n {
        for k in 0..n {
            for p in 0..n {
                for q in 0..n {
                    l[p][q][k] += delta.get(i, j, k) * delta.get(j, p, q);
                    r[j][p][q] += delta.get(i, j, k) * delta.get(k, p, q);
                }
            }
        }
    }
    (l, r)
}

fn flat3(n: usize, f: impl Fn(usize, usize, usize) -> Scalar) -> V {
    let mut out = Vec::with_capacity(n * n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                out.push(f(x, y, z));
            }
        }
    }
    out
}

fn coalgebra(delta: &Comultiplication) -> CheckReport {
    let n = delta.dim();
    let mut report = CheckReport::new("coalgebra");
    for i in 0..n {
        let (l, r) = iterates(delta, i);
        let d = |x: usize, y: usize, z: usize| &l[x][y][z] - &r[x][y][z];
        report.record(
            "coalgebra",
            &[i],
            flat3(n, |x, y, z| d(x, y, z) + d(z, x, y) + d(y, z, x)),
        );
    }
    report
}

fn coassociative(delta: &Comultiplication) -> CheckReport {
    let n = delta.dim();
    let mut report = CheckReport::new("coassociative");
    for i in 0..n {
        let (l, r) = iterates(delta, i);
        report.record(
            "coassociative",
            &[i],
            flat3(n, |x, y, z| &l[x][y][z] - &r[x][y][z]),
        );
    }
    report
}

fn admissible_coalgebra(delta: &Comultiplication) -> CheckReport {
    let n = delta.dim();
    let mut report = CheckReport::new("admissible coalgebra");
    for i in 0..n {
        let (l, r) = iterates(delta, i);
        let res = flat3(n, |x, y, z| {
            &l[x][z][y] - &r[x][z][y] + &l[y][z][x] - &r[y][z][x]
        });
        report.record("admissible coalgebra", &[i], res);
    }
    report
}

/// `(M ⊗ N) t` by a quadruple loop.
fn ops2(m: &M, k: &M, t: &M) -> M {
    let n = t.len();
    let mut out = mat_zero(n, n);
    for a2 in 0..n {
        for b2 in 0..n {
            for a in 0..n {
                for b in 0..n {
                    out[a2][b2] += &m[a2][a] * &k[b2][b] * &t[a][b];
                }
            }
        }
    }
    out
}

fn identity(n: usize) -> M {
    (0..n).map(|i| unit(n, i)).collect()
}

fn delta_of(delta: &Comultiplication, x: &V) -> M {
    let n = delta.dim();
    let mut out = mat_zero(n, n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out[j][k] += &x[i] * delta.get(i, j, k);
            }
        }
    }
    out
}

fn bialgebra(a: &Algebra, delta: &Comultiplication) -> Result<CheckReport> {
    let n = a.dim();
    if delta.dim() != n {
        return Err(Error::DimensionMismatch {
            context: "comultiplication",
            expected: n,
            found: delta.dim(),
        });
    }
    let mut report = CheckReport::new("bialgebra");
    report.absorb(renamed(law_report(LawKind::A3, a), "a3"));
    report.absorb(coalgebra(delta));
    let id = identity(n);
    let mut seconds = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (unit(n, i), unit(n, j));
            let (lx, ly, rx, ry) = (left(a, i), left(a, j), right(a, i), right(a, j));
            let dx = delta_of(delta, &x);
            let dy = delta_of(delta, &y);
            let dxy = delta_of(delta, &mul(a, &x, &y));
            let dyx = delta_of(delta, &mul(a, &y, &x));
            let tdx = transpose(&dx);
            let inner = mlin(&[
                (1, &dxy),
                (-1, &ops2(&ry, &id, &dx)),
                (-1, &ops2(&id, &lx, &dy)),
            ]);
            let first = mlin(&[
                (1, &transpose(&inner)),
                (-1, &inner),
                (1, &ops2(&id, &ly, &tdx)),
                (-1, &ops2(&ry, &id, &tdx)),
                (1, &ops2(&lx, &id, &dy)),
                (-1, &ops2(&id, &rx, &dy)),
            ]);
            report.record("compatibility one", &[i, j], flat(&first));
            let skew = mlin(&[(1, &dy), (-1, &transpose(&dy))]);
            let second = mlin(&[
                (1, &dxy),
                (-1, &dyx),
                (1, &ops2(&id, &ly, &dx)),
                (-1, &ops2(&ry, &id, &dx)),
                (1, &ops2(&ly, &id, &dx)),
                (-1, &ops2(&id, &ry, &dx)),
                (-1, &ops2(&id, &lx, &skew)),
                (1, &ops2(&rx, &id, &skew)),
            ]);
            seconds.push(([i, j], flat(&second)));
        }
    }
    for (idx, v) in seconds {
        report.record("compatibility two", &idx, v);
    }
    Ok(report)
}

fn aybe(a: &Algebra, r: &Tensor2) -> Result<CheckReport> {
    let n = a.dim();
    if r.dim() != n {
        return Err(Error::DimensionMismatch {
            context: "tensor",
            expected: n,
            found: r.dim(),
        });
    }
    // r = Σ (r[a][b] e_a) ⊗ e_b
    let mut pairs = Vec::new();
    for p in 0..n {
        for q in 0..n {
            if !r[(p, q)].is_zero() {
                let mut u = zeros(n);
                u[p] = r[(p, q)].clone();
                pairs.push((u, unit(n, q)));
            }
        }
    }
    let mut t = vec![mat_zero(n, n); n];
    for (ui, vi) in &pairs {
        for (uj, vj) in &pairs {
            let vv = mul(a, vi, vj);
            let uv = mul(a, uj, vi);
            let uu = mul(a, uj, ui);
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        t[x][y][z] += &ui[x] * &uj[y] * &vv[z];
                        t[x][y][z] -= &ui[x] * &uv[y] * &vj[z];
                        t[x][y][z] += &uu[x] * &vj[y] * &vi[z];
                    }
                }
            }
        }
    }
    let mut report = CheckReport::new("aybe");
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                report.record("aybe", &[x, y, z], [t[x][y][z].clone()]);
            }
        }
    }
    Ok(report)
}

fn relative_rb(rho: &Representation, t: &Matrix) -> Result<CheckReport> {
    let rep = Rep::of(rho);
    let (n, d) = (rep.n, rep.d);
    if t.rows() != n || t.cols() != d {
        return Err(Error::DimensionMismatch {
            context: "operator shape",
            expected: n * d,
            found: t.rows() * t.cols(),
        });
    }
    let tm = mat(t);
    let mut report = CheckReport::new("relative rota-baxter");
    for u in 0..d {
        for v in 0..d {
            let (eu, ev) = (unit(d, u), unit(d, v));
            let (tu, tv) = (mv(&tm, &eu), mv(&tm, &ev));
            let lhs = mul(&rep.sc, &tu, &tv);
            let inner = add(
                &mv(&combine(&rep.l, &tu, d), &ev),
                &mv(&combine(&rep.r, &tv, d), &eu),
            );
            report.record("relative rota-baxter", &[u, v], sub(&lhs, &mv(&tm, &inner)));
        }
    }
    Ok(report)
}

fn connes(a: &Algebra, form: &BilinearForm) -> Result<CheckReport> {
    let n = a.dim();
    if form.dim() != n {
        return Err(Error::DimensionMismatch {
            context: "bilinear form",
            expected: n,
            found: form.dim(),
        });
    }
    let g = mat(&form.gram);
    if !(0..n).all(|i| (0..n).all(|j| g[i][j] == -g[j][i].clone())) {
        return Err(Error::NotSkew);
    }
    let mut report = CheckReport::new("connes cocycle");
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (unit(n, i), unit(n, j), unit(n, k));
                let v = bil(&g, &mul(a, &x, &y), &z)
                    + bil(&g, &mul(a, &y, &z), &x)
                    + bil(&g, &mul(a, &z, &x), &y);
                report.record("cyclic sum", &[i, j, k], [v]);
            }
        }
    }
    Ok(report)
}
