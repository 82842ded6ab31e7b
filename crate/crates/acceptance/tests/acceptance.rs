//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use a3kit::bialgebra::{check_admissible_coalgebra, check_bialgebra, check_coalgebra};
use a3kit::double::{check_matched_pair, matched_pair_product};
use a3kit::examples::{
    admissible_plane, idempotent_delta, idempotent_line, idempotent_line_rb, matrix_row,
    upper_triangular,
};
use a3kit::representation::adjoint_representation;
use a3kit::search::brute::{brute_residual, IDENTITIES};
use a3kit::search::{
    generate_algebra, random_skew_tensor, skew_grid_tensors, solve_aybe_skew, Family, GridSpec,
};
use a3kit::tensor::int;
use a3kit::yangbaxter::{
    aybe_rb_gap, aybe_residual, check_connes_cocycle, check_rb_adjoint, check_rb_operator_form,
    check_relative_rb, omega_from_r, rb_to_ybe, rsharp, RelativeRbData,
};
use a3kit::{check_law, LawKind, Matrix};
use a3kit_cli::commands::{cmd_search, format_residual};
use a3kit_cli::{AlgebraFile, Format, SearchKind};
use acceptance::*;

type Verdict = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn criterion_1() -> Verdict {
    let a = admissible_plane();
    let assoc = check_law(&a, LawKind::Associative);
    let at = assoc
        .failure_at("associative", &[0, 1, 1])
        .map(|f| f.residual.clone());
    let ok = check_law(&a, LawKind::A3).passed()
        && check_law(&a, LawKind::Admissible).passed()
        && !assoc.passed()
        && at == Some(vec![int(0), int(2)]);
    let shown = at
        .as_ref()
        .map(|v| format_residual(v, a.labels()))
        .unwrap_or_else(|| "none".into());
    let msg = format!("a3 and admissible pass, associative residual at (e1,e2,e2) = {shown}");
    if ok {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn criterion_2() -> Verdict {
    let (a, d) = (admissible_plane(), idempotent_delta());
    let verdicts = [
        check_coalgebra(&d).passed(),
        check_admissible_coalgebra(&d).passed(),
        check_bialgebra(&a, &d).map(|r| r.passed()).unwrap_or(false),
    ];
    if verdicts.iter().all(|&v| v) {
        Ok("coalgebra, admissible coalgebra and bialgebra all pass".into())
    } else {
        Err(format!("verdicts {verdicts:?}"))
    }
}

fn criterion_3() -> Verdict {
    let instances = bialgebra_instances();
    let (mut passing, mut disagreements) = (0, Vec::new());
    for (i, (a, d)) in instances.iter().enumerate() {
        match three_verdicts(a, d) {
            Ok(v) if v[0] == v[1] && v[1] == v[2] => passing += v[0] as usize,
            Ok(v) => disagreements.push(format!("#{i}: {v:?}")),
            Err(e) => disagreements.push(format!("#{i}: {e}")),
        }
    }
    let msg = format!(
        "{} instances, {passing} bialgebras, {} disagreements {:?}",
        instances.len(),
        disagreements.len(),
        disagreements.iter().take(3).collect::<Vec<_>>()
    );
    if instances.len() >= 100
        && disagreements.is_empty()
        && passing > 0
        && passing < instances.len()
    {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn criterion_4() -> Verdict {
    let candidates = matched_pair_candidates();
    let (mut passing, mut bad) = (0, Vec::new());
    for (i, mp) in candidates.iter().enumerate() {
        let direct = check_matched_pair(mp).map(|r| r.passed());
        let product = matched_pair_product(mp).map(|d| check_law(&d, LawKind::A3).passed());
        match (direct, product) {
            (Ok(x), Ok(y)) if x == y => passing += x as usize,
            (x, y) => bad.push(format!("#{i}: {x:?} vs {y:?}")),
        }
    }
    let msg = format!(
        "{} candidates, {passing} matched pairs, {} disagreements {:?}",
        candidates.len(),
        bad.len(),
        bad.iter().take(3).collect::<Vec<_>>()
    );
    if candidates.len() >= 100 && bad.is_empty() && passing > 0 && passing < candidates.len() {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn criterion_5() -> Verdict {
    use LawKind::*;
    let mut counter = Vec::new();
    let mut total = 0;
    for family in Family::ALL {
        for seed in 0..100 {
            let a =
                generate_algebra(family, seed).map_err(|e| format!("{family} seed {seed}: {e}"))?;
            total += 1;
            let v = |k: LawKind| check_law(&a, k).passed();
            let implications = [
                ("associative => a3", !v(Associative) || v(A3)),
                ("admissible-poisson => a3", !v(AdmissiblePoisson) || v(A3)),
                ("a3 => lie-admissible", !v(A3) || v(LieAdmissible)),
                (
                    "admissible, left-symmetric, a3 => associative",
                    !(v(Admissible) && v(LeftSymmetric) && v(A3)) || v(Associative),
                ),
                (
                    "admissible, right-symmetric, a3 => associative",
                    !(v(Admissible) && v(RightSymmetric) && v(A3)) || v(Associative),
                ),
            ];
            for (name, holds) in implications {
                if !holds {
                    counter.push(format!("{name} on {family} seed {seed}"));
                }
            }
        }
    }
    let msg = format!(
        "{total} algebras over {} families, {} counterexamples {:?}",
        Family::ALL.len(),
        counter.len(),
        counter.iter().take(3).collect::<Vec<_>>()
    );
    if counter.is_empty() {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn criterion_6() -> Verdict {
    let a = idempotent_line();
    let t = idempotent_line_rb();
    let base_rb = check_rb_adjoint(&a, &t)
        .map_err(|e| e.to_string())?
        .passed();
    let (d, r) = rb_to_ybe(&a, &t).map_err(|e| e.to_string())?;
    let base_ay = aybe_residual(&d, &r).map_err(|e| e.to_string())?.is_zero();
    let mut still_rb = Vec::new();
    let mut verdicts_agree = true;
    for i in 0..2 {
        for j in 0..2 {
            let mut t2 = t.clone();
            t2[(i, j)] += int(1);
            let rb = check_relative_rb(&RelativeRbData {
                algebra: a.clone(),
                rep: adjoint_representation(&a),
                t: t2.clone(),
            })
            .map_err(|e| e.to_string())?
            .passed();
            let (d2, r2) = rb_to_ybe(&a, &t2).map_err(|e| e.to_string())?;
            let ay = aybe_residual(&d2, &r2)
                .map_err(|e| e.to_string())?
                .is_zero();
            verdicts_agree &= rb == ay;
            if rb || ay {
                still_rb.push(format!("T[{i}][{j}]+1 (rb {rb}, ay {ay})"));
            }
        }
    }
    let msg = format!("base rb {base_rb}, AY(r) = 0 {base_ay}; perturbations not rejected: {still_rb:?}; rb and AY verdicts agree on all four: {verdicts_agree}");
    if base_rb && base_ay && still_rb.is_empty() {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn criterion_7() -> Verdict {
    let (d, _) = rb_to_ybe(&idempotent_line(), &idempotent_line_rb()).map_err(|e| e.to_string())?;
    let mut failures = Vec::new();
    let mut count = 0;
    for (name, alg) in [
        ("admissible plane", admissible_plane()),
        ("4-dim double", d),
    ] {
        for seed in 0..100 {
            let r = random_skew_tensor(alg.dim(), seed);
            count += 1;
            if !aybe_rb_gap(&alg, &r)
                .map(|rep| rep.passed())
                .unwrap_or(false)
            {
                failures.push(format!("{name} seed {seed}"));
            }
        }
    }
    let msg = format!(
        "{count} random skew tensors, {} failures {:?}",
        failures.len(),
        failures.iter().take(3).collect::<Vec<_>>()
    );
    if failures.is_empty() {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn criterion_8() -> Verdict {
    let (d, _) = rb_to_ybe(&idempotent_line(), &idempotent_line_rb()).map_err(|e| e.to_string())?;
    let algebras = [
        ("admissible plane", admissible_plane(), GridSpec::default()),
        ("idempotent line", idempotent_line(), GridSpec::default()),
        ("matrix row", matrix_row(), GridSpec::default()),
        ("upper triangular", upper_triangular(), GridSpec::default()),
        (
            "4-dim double",
            d,
            GridSpec::parse("-1,0,1", 10_000).unwrap(),
        ),
    ];
    let (mut total, mut solutions, mut bad) = (0, 0, Vec::new());
    for (name, a, grid) in algebras {
        for r in skew_grid_tensors(a.dim(), &grid).map_err(|e| e.to_string())? {
            total += 1;
            let form = check_rb_operator_form(&a, &r).map(|rep| rep.passed());
            let ay = aybe_residual(&a, &r).map(|t| t.is_zero());
            match (form, ay) {
                (Ok(x), Ok(y)) if x == y => solutions += y as usize,
                (x, y) => bad.push(format!("{name}: {x:?} vs {y:?}")),
            }
        }
    }
    let msg = format!(
        "{total} skew grid tensors on 5 algebras, {solutions} solutions, {} disagreements {:?}",
        bad.len(),
        bad.iter().take(3).collect::<Vec<_>>()
    );
    if bad.is_empty() {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn criterion_9() -> Verdict {
    let row = matrix_row();
    let algebras = [
        ("matrix row", row.clone()),
        (
            "matrix row in another basis",
            row.transport(&Matrix::from_ints(&[[1, 1], [0, 1]]))
                .unwrap(),
        ),
        ("opposite matrix row", opposite(&row)),
        ("matrix row, twice", row.direct_sum(&row)),
        (
            "matrix row and its opposite",
            row.direct_sum(&opposite(&row)),
        ),
        ("admissible plane", admissible_plane()),
        (
            "4-dim double",
            rb_to_ybe(&idempotent_line(), &idempotent_line_rb())
                .map_err(|e| e.to_string())?
                .0,
        ),
    ];
    let (mut solved, mut unsolved, mut bad) = (0, 0, Vec::new());
    for (name, a) in algebras {
        let grid = if a.dim() > 2 {
            GridSpec::parse("-1,0,1", 100_000).unwrap()
        } else {
            GridSpec::default()
        };
        let solutions = solve_aybe_skew(&a, &grid).map_err(|e| e.to_string())?;
        for r in skew_grid_tensors(a.dim(), &grid).map_err(|e| e.to_string())? {
            if rsharp(&r).inverse().is_err() {
                continue;
            }
            let cocycle = omega_from_r(&a, &r)
                .and_then(|w| check_connes_cocycle(&a, &w))
                .map(|rep| rep.passed());
            let is_solution = solutions.contains(&r);
            if is_solution {
                solved += 1;
            } else {
                unsolved += 1;
            }
            if cocycle.as_ref().ok() != Some(&is_solution) {
                bad.push(format!(
                    "{name}: solution {is_solution}, cocycle {cocycle:?}"
                ));
            }
        }
    }
    let msg = format!(
        "{solved} invertible solutions, {unsolved} invertible non-solutions, {} mismatches {:?}",
        bad.len(),
        bad.iter().take(3).collect::<Vec<_>>()
    );
    if bad.is_empty() && solved > 0 && unsolved >= 20 {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn criterion_10() -> Verdict {
    let per_identity = 25;
    let (mut total, mut failing, mut bad) = (0, 0, Vec::new());
    for id in IDENTITIES {
        let start = Instant::now();
        for seed in 0..per_identity {
            let (inputs, optimized) = oracle_instance(id, seed);
            failing += optimized.as_ref().map(|r| !r.passed()).unwrap_or(false) as usize;
            total += 1;
            if !same(brute_residual(id, &inputs), optimized) {
                bad.push(format!("{id} seed {seed}"));
            }
        }
        if std::env::var_os("A3KIT_TIMING").is_some() {
            eprintln!("{id}: {:?}", start.elapsed());
        }
    }
    let msg = format!("{total} instances over {} identities ({failing} with nonzero residuals), {} mismatches {:?}", IDENTITIES.len(), bad.len(), bad.iter().take(5).collect::<Vec<_>>());
    if total >= 500 && bad.is_empty() {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn criterion_11() -> Verdict {
    let (d, _) = rb_to_ybe(&idempotent_line(), &idempotent_line_rb()).map_err(|e| e.to_string())?;
    let max = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
        .max(4);
    let mut checked = Vec::new();
    for (doc, kind, grid) in [
        (
            AlgebraFile::from_algebra(&d).to_json(),
            SearchKind::Aybe,
            "-2,-1,0,1,2",
        ),
        (
            AlgebraFile::from_algebra(&upper_triangular()).to_json(),
            SearchKind::Aybe,
            "-2,-1,0,1,2",
        ),
        (
            AlgebraFile::from_algebra(&admissible_plane()).to_json(),
            SearchKind::Rb,
            "-2,-1,-1/2,0,1/2,1,2",
        ),
    ] {
        for format in [Format::Json, Format::Table] {
            let one = cmd_search(&doc, kind, grid, 100_000, Some(1), format);
            let many = cmd_search(&doc, kind, grid, 100_000, Some(max), format);
            let default = cmd_search(&doc, kind, grid, 100_000, None, format);
            if one.code != 0 || one != many || one != default {
                return Err(format!(
                    "{kind:?} on grid {grid}: outputs differ or failed (exit {})",
                    one.code
                ));
            }
            checked.push(one.stdout.len());
        }
    }
    Ok(format!(
        "6 searches identical for 1 and {max} threads, output sizes {checked:?}"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("admissible plane golden", criterion_1),
        ("idempotent coalgebra golden", criterion_2),
        (
            "bialgebra, matched pair and Manin triple verdicts",
            criterion_3,
        ),
        ("matched pair verdict vs A3 law of the product", criterion_4),
        ("class inclusions", criterion_5),
        ("Rota-Baxter to Yang-Baxter pipeline", criterion_6),
        ("Yang-Baxter and Rota-Baxter gap identity", criterion_7),
        ("operator form vs Yang-Baxter verdict", criterion_8),
        ("Connes cocycle from invertible solutions", criterion_9),
        ("brute-force oracle diff", criterion_10),
        ("search determinism across thread counts", criterion_11),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = run();
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Ok(msg) => println!("PASS criterion {} ({name}): {msg} [{secs:.2}s]", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {} ({name}): {msg} [{secs:.2}s]", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
