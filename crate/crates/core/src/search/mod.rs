//! Exhaustive grid solvers, random algebra generators, and the naive
//! reference evaluator in [`brute`].
//!
//! Both equations solved here are quadratic in the unknowns. The solver reads
//! the polynomial coefficients off the exact residual function by
//! polarization, evaluates candidates in `i128` (exactly, with a rational
//! fallback on overflow) and re-checks every hit with the exact checker.

pub mod brute;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{check_law, Algebra, LawKind};
use crate::error::{Error, Result};
use crate::examples::{admissible_plane, idempotent_line, matrix_row, upper_triangular};
use crate::par::map_ordered;
use crate::representation::Representation;
use crate::tensor::{frac, int, parse_scalar, Matrix, Scalar, Tensor2};
use crate::yangbaxter::{
    aybe_residual, check_aybe, check_relative_rb, relative_rb_residuals, RelativeRbData,
};

/// Candidate values for every unknown, tried in the given order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridSpec {
    values: Vec<Scalar>,
    pub max_solutions: usize,
}

impl GridSpec {
    pub fn new(values: Vec<Scalar>, max_solutions: usize) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidGrid("no values".into()));
        }
        if max_solutions == 0 {
            return Err(Error::InvalidGrid("max_solutions must be positive".into()));
        }
        for (i, v) in values.iter().enumerate() {
            if values[..i].contains(v) {
                return Err(Error::InvalidGrid(format!("duplicate value {v}")));
            }
        }
        Ok(GridSpec {
            values,
            max_solutions,
        })
    }

    /// Comma-separated rationals, e.g. `-1,0,1/2`.
    pub fn parse(s: &str, max_solutions: usize) -> Result<Self> {
        let values = s
            .split(',')
            .map(|t| parse_scalar(t).map_err(|_| Error::InvalidGrid(format!("bad value {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(values, max_solutions)
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn with_max_solutions(mut self, max_solutions: usize) -> Self {
        self.max_solutions = max_solutions.max(1);
        self
    }
}

impl Default for GridSpec {
    /// `{-2, -1, 0, 1, 2}`, at most 10000 solutions.
    fn default() -> Self {
        GridSpec {
            values: (-2..=2).map(int).collect(),
            max_solutions: 10_000,
        }
    }
}

/// Largest number of unknowns enumerated for relative Rota-Baxter operators.
pub const MAX_RB_ENTRIES: usize = 6;
/// Largest number of free upper-triangle entries for skew tensors.
pub const MAX_SKEW_ENTRIES: usize = 8;

fn space_size(grid: &GridSpec, unknowns: usize, max: usize) -> Result<u128> {
    let g = grid.values.len() as u128;
    let candidates = g.saturating_pow(unknowns as u32);
    if unknowns > max {
        return Err(Error::SearchSpaceTooLarge {
            candidates,
            limit: g.saturating_pow(max as u32),
        });
    }
    Ok(candidates)
}

/// One residual coordinate as a polynomial of degree at most two.
#[derive(Clone, Debug)]
struct Row {
    constant: Scalar,
    linear: Vec<(usize, Scalar)>,
    quadratic: Vec<(usize, usize, Scalar)>,
}

impl Row {
    fn eval(&self, x: &[Scalar]) -> Scalar {
        let mut s = self.constant.clone();
        for (u, c) in &self.linear {
            s += c * &x[*u];
        }
        for (u, v, c) in &self.quadratic {
            s += c * &x[*u] * &x[*v];
        }
        s
    }
}

#[derive(Clone, Debug)]
struct IntRow {
    constant: i128,
    linear: Vec<(usize, i128)>,
    quadratic: Vec<(usize, usize, i128)>,
}

impl IntRow {
    fn eval(&self, x: &[i128]) -> Option<i128> {
        let mut s = self.constant;
        for &(u, c) in &self.linear {
            s = s.checked_add(c.checked_mul(x[u])?)?;
        }
        for &(u, v, c) in &self.quadratic {
            s = s.checked_add(c.checked_mul(x[u])?.checked_mul(x[v])?)?;
        }
        Some(s)
    }
}

/// Residual coordinates as polynomials in the unknowns, nonzero rows only.
struct QuadraticSystem {
    rows: Vec<Row>,
}

impl QuadraticSystem {
    /// Recovers the coefficients of a residual map of degree at most two
    /// from its values at `0`, `±e_u` and `e_u + e_v`.
    fn polarize(m: usize, f: &dyn Fn(&[Scalar]) -> Result<Vec<Scalar>>) -> Result<Self> {
        let unit = |terms: &[(usize, i64)]| {
            let mut x = vec![Scalar::zero(); m];
            for &(u, c) in terms {
                x[u] = int(c);
            }
            x
        };
        let k = f(&unit(&[]))?;
        let half = frac(1, 2);
        let plus: Vec<Vec<Scalar>> = (0..m).map(|u| f(&unit(&[(u, 1)]))).collect::<Result<_>>()?;
        let minus: Vec<Vec<Scalar>> = (0..m)
            .map(|u| f(&unit(&[(u, -1)])))
            .collect::<Result<_>>()?;
        let mut rows: Vec<Row> = k
            .iter()
            .map(|c| Row {
                constant: c.clone(),
                linear: Vec::new(),
                quadratic: Vec::new(),
            })
            .collect();
        let mut diag = vec![vec![Scalar::zero(); k.len()]; m];
        let mut lin = vec![vec![Scalar::zero(); k.len()]; m];
        for u in 0..m {
            for (c, row) in rows.iter_mut().enumerate() {
                let q = (&plus[u][c] + &minus[u][c]) * &half - &k[c];
                let l = (&plus[u][c] - &minus[u][c]) * &half;
                if !l.is_zero() {
                    row.linear.push((u, l.clone()));
                }
                if !q.is_zero() {
                    row.quadratic.push((u, u, q.clone()));
                }
                diag[u][c] = q;
                lin[u][c] = l;
            }
        }
        for u in 0..m {
            for v in u + 1..m {
                let both = f(&unit(&[(u, 1), (v, 1)]))?;
                for (c, row) in rows.iter_mut().enumerate() {
                    let q = &both[c] - &diag[u][c] - &diag[v][c] - &lin[u][c] - &lin[v][c] - &k[c];
                    if !q.is_zero() {
                        row.quadratic.push((u, v, q));
                    }
                }
            }
        }
        rows.retain(|r| !(r.constant.is_zero() && r.linear.is_empty() && r.quadratic.is_empty()));
        Ok(QuadraticSystem { rows })
    }

    /// Integer form of the system for grid values scaled by a common
    /// denominator; `None` if any coefficient leaves `i128`.
    fn integer_form(&self, grid: &[Scalar]) -> Option<(Vec<IntRow>, Vec<i128>)> {
        let lcm = |acc: BigInt, q: &Scalar| acc.lcm(q.denom());
        let d = grid.iter().fold(BigInt::one(), lcm);
        let c = self
            .rows
            .iter()
            .flat_map(|r| {
                std::iter::once(&r.constant)
                    .chain(r.linear.iter().map(|x| &x.1))
                    .chain(r.quadratic.iter().map(|x| &x.2))
            })
            .fold(BigInt::one(), lcm);
        let to_int = |q: Scalar| -> Option<i128> {
            debug_assert!(q.is_integer());
            q.to_integer().to_i128()
        };
        let ds = Scalar::from_integer(d.clone());
        let cs = Scalar::from_integer(c);
        let values = grid
            .iter()
            .map(|v| to_int(v * &ds))
            .collect::<Option<Vec<_>>>()?;
        let rows = self
            .rows
            .iter()
            .map(|r| {
                Some(IntRow {
                    constant: to_int(&r.constant * &cs * &ds * &ds)?,
                    linear: r
                        .linear
                        .iter()
                        .map(|(u, q)| Some((*u, to_int(q * &cs * &ds)?)))
                        .collect::<Option<_>>()?,
                    quadratic: r
                        .quadratic
                        .iter()
                        .map(|(u, v, q)| Some((*u, *v, to_int(q * &cs)?)))
                        .collect::<Option<_>>()?,
                })
            })
            .collect::<Option<Vec<_>>>()?;
        Some((rows, values))
    }
}

/// Lexicographically ordered grid points (as value indices) where every
/// residual of `system` vanishes.
fn enumerate_zeros(
    system: &QuadraticSystem,
    grid: &GridSpec,
    m: usize,
    total: u128,
) -> Vec<Vec<usize>> {
    let g = grid.values.len();
    let ints = system.integer_form(&grid.values);
    let digits_of = |mut idx: u128| {
        let mut digits = vec![0usize; m];
        for slot in digits.iter_mut().rev() {
            *slot = (idx % g as u128) as usize;
            idx /= g as u128;
        }
        digits
    };
    let is_zero = |digits: &[usize]| -> bool {
        if let Some((rows, values)) = &ints {
            let x: Vec<i128> = digits.iter().map(|&k| values[k]).collect();
            let mut overflow = false;
            for row in rows {
                match row.eval(&x) {
                    Some(0) => {}
                    Some(_) => return false,
                    None => {
                        overflow = true;
                        break;
                    }
                }
            }
            if !overflow {
                return true;
            }
        }
        let x: Vec<Scalar> = digits.iter().map(|&k| grid.values[k].clone()).collect();
        system.rows.iter().all(|r| r.eval(&x).is_zero())
    };
    const CHUNK: u128 = 4096;
    let chunks: Vec<(u128, u128)> = (0..total.div_ceil(CHUNK))
        .map(|c| (c * CHUNK, ((c + 1) * CHUNK).min(total)))
        .collect();
    let found = map_ordered(chunks, |(lo, hi)| {
        let mut hits = Vec::new();
        for idx in lo..hi {
            let digits = digits_of(idx);
            if is_zero(&digits) {
                hits.push(digits);
            }
        }
        hits
    });
    found.into_iter().flatten().collect()
}

/// All `T: V → A` with entries from the grid satisfying the relative
/// Rota-Baxter identity, in lexicographic order of the row-major entries.
pub fn solve_relative_rb(
    a: &Algebra,
    rho: &Representation,
    grid: &GridSpec,
) -> Result<Vec<Matrix>> {
    if &rho.algebra != a {
        return Err(Error::MismatchedAlgebra);
    }
    let (n, d) = (a.dim(), rho.vdim);
    let m = n * d;
    let total = space_size(grid, m, MAX_RB_ENTRIES)?;
    let build = |x: &[Scalar]| {
        let mut t = Matrix::zero(n, d);
        for (idx, v) in x.iter().enumerate() {
            t[(idx / d, idx % d)] = v.clone();
        }
        RelativeRbData {
            algebra: a.clone(),
            rep: rho.clone(),
            t,
        }
    };
    let residual = |x: &[Scalar]| -> Result<Vec<Scalar>> {
        Ok(relative_rb_residuals(&build(x))?
            .into_iter()
            .flat_map(|v| v.0)
            .collect())
    };
    let system = QuadraticSystem::polarize(m, &residual)?;
    let mut out = Vec::new();
    for digits in enumerate_zeros(&system, grid, m, total) {
        let x: Vec<Scalar> = digits.iter().map(|&k| grid.values[k].clone()).collect();
        let data = build(&x);
        if check_relative_rb(&data)?.passed() {
            out.push(data.t);
        }
        if out.len() >= grid.max_solutions {
            break;
        }
    }
    Ok(out)
}

/// Skew tensor from its strict upper triangle, listed row by row.
pub fn skew_from_upper(n: usize, upper: &[Scalar]) -> Tensor2 {
    let mut r = Tensor2::zero(n);
    let mut it = upper.iter();
    for a in 0..n {
        for b in a + 1..n {
            let v = it.next().cloned().unwrap_or_default();
            r[(b, a)] = -v.clone();
            r[(a, b)] = v;
        }
    }
    r
}

/// Every skew tensor whose strict upper triangle takes grid values, in
/// lexicographic order.
pub fn skew_grid_tensors(n: usize, grid: &GridSpec) -> Result<Vec<Tensor2>> {
    let m = n * n.saturating_sub(1) / 2;
    let total = space_size(grid, m, MAX_SKEW_ENTRIES)?;
    let g = grid.values.len() as u128;
    Ok((0..total)
        .map(|mut idx| {
            let mut x = vec![Scalar::zero(); m];
            for slot in x.iter_mut().rev() {
                *slot = grid.values[(idx % g) as usize].clone();
                idx /= g;
            }
            skew_from_upper(n, &x)
        })
        .collect())
}

/// All skew solutions of the Yang-Baxter equation with upper-triangle
/// entries from the grid, in lexicographic order.
pub fn solve_aybe_skew(a: &Algebra, grid: &GridSpec) -> Result<Vec<Tensor2>> {
    let n = a.dim();
    let m = n * (n - 1) / 2;
    let total = space_size(grid, m, MAX_SKEW_ENTRIES)?;
    let residual = |x: &[Scalar]| -> Result<Vec<Scalar>> {
        Ok(aybe_residual(a, &skew_from_upper(n, x))?.coeffs().to_vec())
    };
    let system = QuadraticSystem::polarize(m, &residual)?;
    let mut out = Vec::new();
    for digits in enumerate_zeros(&system, grid, m, total) {
        let x: Vec<Scalar> = digits.iter().map(|&k| grid.values[k].clone()).collect();
        let r = skew_from_upper(n, &x);
        if check_aybe(a, &r)?.passed() {
            out.push(r);
        }
        if out.len() >= grid.max_solutions {
            break;
        }
    }
    Ok(out)
}

/// Families of generated algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Zero,
    /// Associative algebras in a random basis.
    Associative,
    /// Commutative associative algebras in a random basis; these satisfy the
    /// admissible Poisson law.
    CommutativeAssociative,
    /// The 2-dimensional admissible algebra with `e2·e2 = e2`, verbatim.
    AdmissiblePlane,
    /// That algebra in a random basis, rescaled by a random rational.
    DeformedPlane,
    /// Admissible A3-associative algebras drawn from the families above.
    Admissible,
    /// Structure constants drawn from `{-1, 0, 1}`.
    Random,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Zero,
        Family::Associative,
        Family::CommutativeAssociative,
        Family::AdmissiblePlane,
        Family::DeformedPlane,
        Family::Admissible,
        Family::Random,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Zero => "zero",
            Family::Associative => "associative",
            Family::CommutativeAssociative => "commutative-associative",
            Family::AdmissiblePlane => "admissible-plane",
            Family::DeformedPlane => "deformed-plane",
            Family::Admissible => "admissible",
            Family::Random => "random",
        }
    }

    /// The law every member of the family passes, if any.
    pub fn defining_laws(self) -> &'static [LawKind] {
        match self {
            Family::Zero | Family::Associative => &[LawKind::Associative],
            Family::CommutativeAssociative => &[LawKind::Associative, LawKind::AdmissiblePoisson],
            Family::AdmissiblePlane | Family::DeformedPlane | Family::Admissible => {
                &[LawKind::A3, LawKind::Admissible]
            }
            Family::Random => &[],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

fn dual_numbers() -> Algebra {
    // 1, ε with ε² = 0
    Algebra::from_int_table(2, &[(0, 0, &[1, 0]), (0, 1, &[0, 1]), (1, 0, &[0, 1])])
}

fn nilpotent_square() -> Algebra {
    // x, x² with x³ = 0
    Algebra::from_int_table(2, &[(0, 0, &[0, 1])])
}

fn truncated_polynomials() -> Algebra {
    // 1, x, x² with x³ = 0
    Algebra::from_int_table(
        3,
        &[
            (0, 0, &[1, 0, 0]),
            (0, 1, &[0, 1, 0]),
            (1, 0, &[0, 1, 0]),
            (0, 2, &[0, 0, 1]),
            (2, 0, &[0, 0, 1]),
            (1, 1, &[0, 0, 1]),
        ],
    )
}

fn split_pair() -> Algebra {
    // two orthogonal idempotents
    Algebra::from_int_table(2, &[(0, 0, &[1, 0]), (1, 1, &[0, 1])])
}

fn matrix_algebra() -> Algebra {
    // E11, E12, E21, E22 with E_ij E_jk = E_ik
    let mut a = Algebra::zero(4);
    let idx = |i: usize, j: usize| 2 * i + j;
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                a.set_sc(idx(i, j), idx(j, k), idx(i, k), int(1));
            }
        }
    }
    a
}

fn commutative_seeds() -> Vec<Algebra> {
    vec![
        idempotent_line(),
        dual_numbers(),
        nilpotent_square(),
        truncated_polynomials(),
        split_pair(),
    ]
}

fn associative_seeds() -> Vec<Algebra> {
    let mut v = commutative_seeds();
    v.push(matrix_row());
    v.push(upper_triangular());
    v.push(matrix_algebra());
    v
}

const REJECTION_BUDGET: usize = 256;

fn random_invertible(n: usize, rng: &mut ChaCha8Rng) -> Result<Matrix> {
    for _ in 0..REJECTION_BUDGET {
        let mut g = Matrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                g[(i, j)] = int(rng.gen_range(-2..=2));
            }
        }
        if g.determinant().map(|d| !d.is_zero()).unwrap_or(false) {
            return Ok(g);
        }
    }
    Err(Error::RejectionBudgetExceeded(REJECTION_BUDGET))
}

fn random_nonzero_rational(rng: &mut ChaCha8Rng) -> Scalar {
    let num = [-3, -2, -1, 1, 2, 3][rng.gen_range(0..6)];
    frac(num, rng.gen_range(1..=3))
}

fn pick_seed(pool: Vec<Algebra>, dim: Option<usize>, rng: &mut ChaCha8Rng) -> Result<Algebra> {
    let pool: Vec<Algebra> = pool
        .into_iter()
        .filter(|a| dim.is_none_or(|d| a.dim() == d))
        .collect();
    if pool.is_empty() {
        return Err(Error::MissingInput(
            "no seed algebra of the requested dimension",
        ));
    }
    Ok(pool[rng.gen_range(0..pool.len())].clone())
}

fn generate(family: Family, dim: Option<usize>, rng: &mut ChaCha8Rng) -> Result<Algebra> {
    let a = match family {
        Family::Zero => Algebra::zero(dim.unwrap_or_else(|| rng.gen_range(1..=4))),
        Family::AdmissiblePlane => {
            if dim.is_some_and(|d| d != 2) {
                return Err(Error::MissingInput("that family only has dimension 2"));
            }
            admissible_plane()
        }
        Family::Associative | Family::CommutativeAssociative => {
            let pool = if family == Family::Associative {
                associative_seeds()
            } else {
                commutative_seeds()
            };
            let seed = pick_seed(pool, dim, rng)?;
            let g = random_invertible(seed.dim(), rng)?;
            seed.transport(&g)?
        }
        Family::DeformedPlane => {
            let base = generate(Family::AdmissiblePlane, dim, rng)?;
            let g = random_invertible(2, rng)?;
            base.transport(&g)?.scale(&random_nonzero_rational(rng))
        }
        Family::Admissible => {
            let pick = if dim.is_some_and(|d| d != 2) {
                1
            } else {
                rng.gen_range(0..3)
            };
            match pick {
                0 => generate(Family::DeformedPlane, dim, rng)?,
                1 => generate(Family::Associative, dim, rng)?,
                _ => Algebra::zero(dim.unwrap_or(2)),
            }
        }
        Family::Random => {
            let n = dim.unwrap_or_else(|| rng.gen_range(1..=3));
            let mut a = Algebra::zero(n);
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        if rng.gen_bool(0.5) {
                            a.set_sc(i, j, k, int(if rng.gen_bool(0.5) { 1 } else { -1 }));
                        }
                    }
                }
            }
            a
        }
    };
    for &law in family.defining_laws() {
        let rep = check_law(&a, law);
        if !rep.passed() {
            return Err(Error::Precondition(Box::new(rep)));
        }
    }
    Ok(a)
}

/// A member of `family`, determined by `seed`.
pub fn generate_algebra(family: Family, seed: u64) -> Result<Algebra> {
    generate(family, None, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// A member of `family` of dimension `dim`, determined by `seed`.
pub fn generate_algebra_with_dim(family: Family, dim: usize, seed: u64) -> Result<Algebra> {
    generate(family, Some(dim), &mut ChaCha8Rng::seed_from_u64(seed))
}

/// A random tensor with entries in `{-2, …, 2}`, determined by `seed`.
pub fn random_tensor(n: usize, seed: u64) -> Tensor2 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tensor2::zero(n);
    for a in 0..n {
        for b in 0..n {
            t[(a, b)] = int(rng.gen_range(-2..=2));
        }
    }
    t
}

/// A random skew tensor with entries in `{-2, …, 2}`, determined by `seed`.
pub fn random_skew_tensor(n: usize, seed: u64) -> Tensor2 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let upper: Vec<Scalar> = (0..n * n.saturating_sub(1) / 2)
        .map(|_| int(rng.gen_range(-2..=2)))
        .collect();
    skew_from_upper(n, &upper)
}

/// A random square matrix with entries in `{-2, …, 2}`, determined by `seed`.
pub fn random_matrix(rows: usize, cols: usize, seed: u64) -> Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = Matrix::zero(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m[(i, j)] = int(rng.gen_range(-2..=2));
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::idempotent_line_rb;
    use crate::representation::adjoint_representation;
    use crate::yangbaxter::check_rb_adjoint;

    fn grid(vals: &[i64]) -> GridSpec {
        GridSpec::new(vals.iter().map(|&v| int(v)).collect(), 100_000).unwrap()
    }

    #[test]
    fn grid_validation() {
        assert!(GridSpec::new(vec![], 1).is_err());
        assert!(GridSpec::new(vec![int(1), int(1)], 1).is_err());
        assert!(GridSpec::new(vec![int(1)], 0).is_err());
        assert_eq!(
            GridSpec::parse("-1,0,1/2", 5).unwrap().values()[2],
            frac(1, 2)
        );
        assert!(GridSpec::parse("1,x", 5).is_err());
    }

    #[test]
    fn rb_solver_finds_known_operator() {
        let line = idempotent_line();
        let sols =
            solve_relative_rb(&line, &adjoint_representation(&line), &grid(&[-1, 0, 1])).unwrap();
        assert!(sols.contains(&Matrix::zero(2, 2)));
        assert!(sols.contains(&idempotent_line_rb()));
        // completeness against a direct sweep
        let mut expected = 0;
        for idx in 0..81 {
            let mut t = Matrix::zero(2, 2);
            let mut k = idx;
            for e in (0..4).rev() {
                t[(e / 2, e % 2)] = int((k % 3) as i64 - 1);
                k /= 3;
            }
            if check_rb_adjoint(&line, &t).unwrap().passed() {
                expected += 1;
            }
        }
        assert_eq!(sols.len(), expected);
    }

    #[test]
    fn aybe_solver_on_zero_algebra_returns_everything() {
        let sols = solve_aybe_skew(&Algebra::zero(3), &grid(&[-1, 0, 1])).unwrap();
        assert_eq!(sols.len(), 27);
        assert!(sols[13].is_zero());
        assert_eq!(sols, skew_grid_tensors(3, &grid(&[-1, 0, 1])).unwrap());
    }

    #[test]
    fn rational_grid_values() {
        let g = GridSpec::parse("-1/2,0,1/3", 100).unwrap();
        let sols = solve_aybe_skew(&Algebra::zero(2), &g).unwrap();
        assert_eq!(sols.len(), 3);
    }

    #[test]
    fn max_solutions_truncates() {
        let g = grid(&[-1, 0, 1]).with_max_solutions(4);
        assert_eq!(solve_aybe_skew(&Algebra::zero(3), &g).unwrap().len(), 4);
    }

    #[test]
    fn too_large_search_space() {
        let a = Algebra::zero(5);
        assert!(matches!(
            solve_aybe_skew(&a, &GridSpec::default()),
            Err(Error::SearchSpaceTooLarge { .. })
        ));
        let b = Algebra::zero(3);
        assert!(matches!(
            solve_relative_rb(&b, &adjoint_representation(&b), &GridSpec::default()),
            Err(Error::SearchSpaceTooLarge { .. })
        ));
    }

    #[test]
    fn generators_are_deterministic_and_lawful() {
        for family in Family::ALL {
            for seed in 0..20 {
                let a = generate_algebra(family, seed).unwrap();
                assert_eq!(a, generate_algebra(family, seed).unwrap());
                for &law in family.defining_laws() {
                    assert!(check_law(&a, law).passed(), "{family} {seed} {law}");
                }
            }
        }
        assert_eq!(
            generate_algebra(Family::AdmissiblePlane, 7).unwrap(),
            admissible_plane()
        );
        assert_eq!(
            generate_algebra(Family::Zero, 3)
                .unwrap()
                .structure_constants()
                .iter()
                .filter(|x| !x.is_zero())
                .count(),
            0
        );
    }
}
