//! Instance builders shared by the acceptance criteria.

use std::sync::OnceLock;

use a3kit::algebra::check_homomorphism;
use a3kit::bialgebra::{
    check_admissible_coalgebra, check_bialgebra, check_coalgebra, check_coassociative,
    comultiplication_from_dual, dual_algebra, Comultiplication,
};
use a3kit::double::{
    canonical_spans, check_manin_triple, check_matched_pair, check_quadratic, standard_double,
    BilinearForm, MatchedPairData,
};
use a3kit::examples::{admissible_plane, idempotent_delta, idempotent_line, matrix_row};
use a3kit::representation::{
    adjoint_representation, check_admissible_representation, check_associative_representation,
    check_equivalence, check_representation, coadjoint_representation, Representation,
};
use a3kit::search::brute::BruteInputs;
use a3kit::search::{
    generate_algebra, generate_algebra_with_dim, random_matrix, random_skew_tensor, random_tensor,
    solve_aybe_skew, Family, GridSpec,
};
use a3kit::tensor::int;
use a3kit::yangbaxter::{
    check_aybe, check_connes_cocycle, check_relative_rb, omega_from_r, triangular_bialgebra,
    RelativeRbData,
};
use a3kit::{check_law, Algebra, CheckReport, LawKind, Matrix, Result, Tensor2};

pub fn admissible(a: &Algebra) -> bool {
    check_law(a, LawKind::A3).passed() && check_law(a, LawKind::Admissible).passed()
}

pub fn perturb(d: &Comultiplication, at: usize, by: i64) -> Comultiplication {
    let mut c = d.coeffs().to_vec();
    c[at] += int(by);
    Comultiplication::from_coeffs(d.dim(), c).expect("same size")
}

pub fn scaled(d: &Comultiplication, k: i64) -> Comultiplication {
    Comultiplication::from_coeffs(d.dim(), d.coeffs().iter().map(|x| x * int(k)).collect())
        .expect("same size")
}

/// Pairs `(A, Δ)` with both `A` and the dual product admissible, passing and failing.
pub fn bialgebra_instances() -> &'static [(Algebra, Comultiplication)] {
    static CACHE: OnceLock<Vec<(Algebra, Comultiplication)>> = OnceLock::new();
    CACHE.get_or_init(build_bialgebra_instances)
}

fn build_bialgebra_instances() -> Vec<(Algebra, Comultiplication)> {
    let mut raw: Vec<(Algebra, Comultiplication)> = Vec::new();
    let (ex, ex_d) = (admissible_plane(), idempotent_delta());
    for k in [-2, -1, 1, 2, 3] {
        raw.push((ex.clone(), scaled(&ex_d, k)));
    }
    let mut second = Comultiplication::zero(2);
    second.set(1, 0, 0, int(1));
    raw.push((ex.clone(), second));
    for s in 0..24 {
        let a = generate_algebra_with_dim(Family::Admissible, 2, s).expect("generator");
        raw.push((a.clone(), Comultiplication::zero(2)));
        let b = generate_algebra_with_dim(Family::Admissible, 2, 1000 + s).expect("generator");
        raw.push((a, comultiplication_from_dual(&b)));
        for dim in [2, 3] {
            let a =
                generate_algebra_with_dim(Family::Associative, dim, 4000 + s).expect("generator");
            let b =
                generate_algebra_with_dim(Family::Associative, dim, 5000 + s).expect("generator");
            raw.push((a, comultiplication_from_dual(&b)));
        }
    }
    for a in [
        matrix_row(),
        matrix_row()
            .direct_sum(&idempotent_line())
            .transport(&Matrix::identity(4))
            .unwrap(),
    ] {
        let grid = GridSpec::parse("-1,0,1", 10_000).unwrap();
        for r in solve_aybe_skew(&a, &grid)
            .expect("desk scale")
            .into_iter()
            .take(12)
        {
            if let Ok(pair) = triangular_bialgebra(&a, &r) {
                raw.push(pair);
            }
        }
    }
    for s in 0..8 {
        let a = generate_algebra_with_dim(Family::Admissible, 3, s).expect("generator");
        for r in solve_aybe_skew(&a, &GridSpec::default()).expect("desk scale") {
            if let Ok(pair) = triangular_bialgebra(&a, &r) {
                raw.push(pair);
            }
        }
    }
    let passing: Vec<_> = raw
        .iter()
        .filter(|(a, d)| check_bialgebra(a, d).map(|r| r.passed()).unwrap_or(false))
        .cloned()
        .collect();
    for (i, (a, d)) in passing.iter().enumerate().take(40) {
        let at = (i * 7) % d.coeffs().len();
        raw.push((a.clone(), perturb(d, at, 1 + (i % 2) as i64)));
    }
    raw.into_iter()
        .filter(|(a, d)| admissible(a) && admissible(&dual_algebra(d)))
        .collect()
}

pub fn three_verdicts(a: &Algebra, d: &Comultiplication) -> Result<[bool; 3]> {
    let astar = dual_algebra(d);
    let bialgebra = check_bialgebra(a, d)?.passed();
    let matched = check_matched_pair(&MatchedPairData::coadjoint(a, &astar)?)?.passed();
    let (dd, bd) = standard_double(a, &astar)?;
    let (s1, s2) = canonical_spans(a.dim());
    let manin = check_manin_triple(&dd, &bd, &s1, &s2)?.passed();
    Ok([bialgebra, matched, manin])
}

pub fn random_actions(n: usize, m: usize, seed: u64, sparse: bool) -> Vec<Matrix> {
    (0..n)
        .map(|i| {
            let g = random_matrix(m, m, seed * 31 + i as u64);
            if sparse {
                // keep only ±1 entries
                let mut out = Matrix::zero(m, m);
                for r in 0..m {
                    for c in 0..m {
                        if g[(r, c)] == int(1) || g[(r, c)] == int(-1) {
                            out[(r, c)] = g[(r, c)].clone();
                        }
                    }
                }
                out
            } else {
                g
            }
        })
        .collect()
}

pub fn matched_pair_candidates() -> &'static [MatchedPairData] {
    static CACHE: OnceLock<Vec<MatchedPairData>> = OnceLock::new();
    CACHE.get_or_init(build_matched_pair_candidates)
}

fn build_matched_pair_candidates() -> Vec<MatchedPairData> {
    let mut out = Vec::new();
    for s in 0..30u64 {
        let fam = [
            Family::Admissible,
            Family::Associative,
            Family::DeformedPlane,
            Family::Random,
        ][s as usize % 4];
        let a = generate_algebra_with_dim(fam, 2, s).expect("generator");
        let b = generate_algebra_with_dim(Family::Admissible, 2, 500 + s).expect("generator");
        out.push(MatchedPairData::trivial(a.clone(), b.clone()));
        let mut mp = MatchedPairData::trivial(a.clone(), b.clone());
        mp.la = random_actions(2, 2, s, true);
        mp.ra = random_actions(2, 2, s + 100, true);
        mp.lb = random_actions(2, 2, s + 200, true);
        mp.rb = random_actions(2, 2, s + 300, true);
        out.push(mp);
        let rho = adjoint_representation(&a);
        let mut semi = MatchedPairData::trivial(a.clone(), Algebra::zero(2));
        semi.la = rho.l.clone();
        semi.ra = rho.r.clone();
        out.push(semi);
        if let Ok(co) = coadjoint_representation(&a) {
            let mut semi = MatchedPairData::trivial(a, Algebra::zero(2));
            semi.la = co.l;
            semi.ra = co.r;
            out.push(semi);
        }
    }
    for (a, d) in bialgebra_instances().iter().take(40) {
        if let Ok(mp) = MatchedPairData::coadjoint(a, &dual_algebra(d)) {
            out.push(mp);
        }
    }
    out
}

pub fn opposite(a: &Algebra) -> Algebra {
    let n = a.dim();
    let mut out = Algebra::zero(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out.set_sc(i, j, k, a.sc(j, i, k).clone());
            }
        }
    }
    out
}

pub fn random_rep(a: &Algebra, d: usize, seed: u64) -> Representation {
    let n = a.dim();
    Representation::new(
        a.clone(),
        random_actions(n, d, seed, true),
        random_actions(n, d, seed + 7, true),
    )
    .expect("shapes match")
}

pub fn conjugate(rho: &Representation, phi: &Matrix) -> Representation {
    let inv = phi.inverse().expect("invertible");
    let c = |m: &Matrix| phi.mul(m).mul(&inv);
    Representation::new(
        rho.algebra.clone(),
        rho.l.iter().map(c).collect(),
        rho.r.iter().map(c).collect(),
    )
    .expect("shapes match")
}

pub fn invertible(n: usize, seed: u64) -> Matrix {
    (seed..)
        .map(|s| random_matrix(n, n, s))
        .find(|m| m.inverse().is_ok())
        .expect("some draw is invertible")
}

/// `brute` and `optimized` agree as results, errors compared by kind only.
pub fn same(brute: Result<CheckReport>, optimized: Result<CheckReport>) -> bool {
    match (brute, optimized) {
        (Ok(x), Ok(y)) => x == y,
        (Err(x), Err(y)) => std::mem::discriminant(&x) == std::mem::discriminant(&y),
        _ => false,
    }
}

pub fn oracle_instance(id: &str, seed: u64) -> (BruteInputs, Result<CheckReport>) {
    let fam = [
        Family::Random,
        Family::Admissible,
        Family::Associative,
        Family::DeformedPlane,
    ][seed as usize % 4];
    let n = match fam {
        Family::Random => 1 + (seed as usize / 4) % 3,
        Family::DeformedPlane => 2,
        _ => 2 + (seed as usize / 4) % 2,
    };
    let a = generate_algebra_with_dim(fam, n, seed).expect("generator");
    let n = a.dim();
    let mut inputs = BruteInputs {
        algebra: Some(a.clone()),
        ..Default::default()
    };
    let optimized = match id {
        "jacobi" => Ok(a3kit::algebra::check_jacobi(&a)),
        "homomorphism" => {
            let b = generate_algebra(Family::Random, seed + 1).expect("generator");
            let phi = if seed.is_multiple_of(3) {
                Matrix::identity(n)
            } else {
                random_matrix(b.dim(), n, seed)
            };
            let b = if seed.is_multiple_of(3) { a.clone() } else { b };
            inputs.target = Some(b.clone());
            inputs.map = Some(phi.clone());
            check_homomorphism(&phi, &a, &b)
        }
        "representation" | "associative-representation" | "admissible-representation" => {
            let rho = match seed % 3 {
                0 => adjoint_representation(&a),
                1 => random_rep(&a, 1 + seed as usize % 3, seed),
                _ => coadjoint_representation(&a).unwrap_or_else(|_| adjoint_representation(&a)),
            };
            inputs.rep = Some(rho.clone());
            Ok(match id {
                "representation" => check_representation(&rho),
                "associative-representation" => check_associative_representation(&rho),
                _ => check_admissible_representation(&rho),
            })
        }
        "equivalence" => {
            let rho = random_rep(&a, 2, seed);
            let phi = if seed % 5 == 4 {
                Matrix::from_ints(&[[1, 1], [1, 1]])
            } else {
                invertible(2, seed)
            };
            let rho2 = if seed.is_multiple_of(2) && seed % 5 != 4 {
                conjugate(&rho, &phi)
            } else {
                random_rep(&a, 2, seed + 50)
            };
            inputs.rep = Some(rho.clone());
            inputs.rep2 = Some(rho2.clone());
            inputs.map = Some(phi.clone());
            check_equivalence(&rho, &rho2, &phi)
        }
        "quadratic" => {
            let (alg, form) = if seed.is_multiple_of(2) {
                let b = generate_algebra_with_dim(Family::Admissible, 2, seed).expect("generator");
                standard_double(&b, &Algebra::zero(2)).expect("admissible")
            } else {
                (
                    a.clone(),
                    BilinearForm::new(random_matrix(n, n, seed)).expect("square"),
                )
            };
            inputs.algebra = Some(alg.clone());
            inputs.form = Some(form.clone());
            check_quadratic(&alg, &form)
        }
        "matched-pair" => {
            let candidates = matched_pair_candidates();
            let mp = candidates[seed as usize * 7 % candidates.len()].clone();
            inputs.matched_pair = Some(mp.clone());
            check_matched_pair(&mp)
        }
        "coalgebra" | "coassociative" | "admissible-coalgebra" | "bialgebra" => {
            let delta = if seed.is_multiple_of(4) {
                idempotent_delta()
            } else {
                comultiplication_from_dual(
                    &generate_algebra_with_dim(Family::Random, n, seed + 9).expect("generator"),
                )
            };
            let alg = if delta.dim() == n {
                a.clone()
            } else {
                admissible_plane()
            };
            inputs.algebra = Some(alg.clone());
            inputs.delta = Some(delta.clone());
            match id {
                "coalgebra" => Ok(check_coalgebra(&delta)),
                "coassociative" => Ok(check_coassociative(&delta)),
                "admissible-coalgebra" => Ok(check_admissible_coalgebra(&delta)),
                _ => check_bialgebra(&alg, &delta),
            }
        }
        "aybe" => {
            let r = if seed.is_multiple_of(2) {
                random_skew_tensor(n, seed)
            } else {
                random_tensor(n, seed)
            };
            inputs.tensor = Some(r.clone());
            check_aybe(&a, &r)
        }
        "relative-rota-baxter" => {
            let d = 1 + seed as usize % 2;
            let rho = if seed.is_multiple_of(3) {
                adjoint_representation(&a)
            } else {
                random_rep(&a, d, seed)
            };
            let t = random_matrix(n, rho.vdim, seed);
            let t = if seed.is_multiple_of(5) {
                Matrix::zero(n, rho.vdim)
            } else {
                t
            };
            inputs.rep = Some(rho.clone());
            inputs.map = Some(t.clone());
            check_relative_rb(&RelativeRbData {
                algebra: a.clone(),
                rep: rho,
                t,
            })
        }
        "connes-cocycle" => {
            let (alg, w) = if seed.is_multiple_of(3) {
                let row = matrix_row();
                let r = Tensor2::from_matrix(&Matrix::from_ints(&[[0, 1], [-1, 0]])).unwrap();
                let w = omega_from_r(&row, &r).expect("invertible");
                (row, w)
            } else {
                let g = random_skew_tensor(n, seed);
                let m = if seed % 7 == 1 {
                    random_matrix(n, n, seed)
                } else {
                    g.as_matrix()
                };
                (a.clone(), BilinearForm::new(m).expect("square"))
            };
            inputs.algebra = Some(alg.clone());
            inputs.form = Some(w.clone());
            check_connes_cocycle(&alg, &w)
        }
        law => Ok(check_law(&a, law.parse::<LawKind>().expect("law name"))),
    };
    (inputs, optimized)
}
