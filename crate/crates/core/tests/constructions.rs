use a3kit::bialgebra::{check_bialgebra, dual_algebra};
use a3kit::double::{
    canonical_spans, check_manin_triple, check_matched_pair, standard_double, MatchedPairData,
};
use a3kit::examples::{
    admissible_plane, idempotent_delta, idempotent_line, idempotent_line_rb, matrix_row,
};
use a3kit::representation::adjoint_representation;
use a3kit::search::{solve_aybe_skew, solve_relative_rb, GridSpec};
use a3kit::tensor::Tensor2;
use a3kit::yangbaxter::{check_aybe, check_rb_adjoint, rb_to_ybe, triangular_bialgebra};
use a3kit::{check_law, LawKind};

#[test]
fn bialgebra_matched_pair_and_double_agree_on_the_worked_example() {
    let a = admissible_plane();
    let delta = idempotent_delta();
    let astar = dual_algebra(&delta);
    assert!(check_bialgebra(&a, &delta).unwrap().passed());
    assert!(
        check_matched_pair(&MatchedPairData::coadjoint(&a, &astar).unwrap())
            .unwrap()
            .passed()
    );
    let (d, bd) = standard_double(&a, &astar).unwrap();
    let (sa, sb) = canonical_spans(a.dim());
    assert!(check_manin_triple(&d, &bd, &sa, &sb).unwrap().passed());
}

#[test]
fn skew_solutions_give_triangular_bialgebras() {
    let a = matrix_row();
    let grid = GridSpec::parse("-1,0,1", 100).unwrap();
    let solutions = solve_aybe_skew(&a, &grid).unwrap();
    assert!(solutions.contains(&Tensor2::from_ints(&[[0, 1], [-1, 0]])));
    for r in &solutions {
        let (_, delta) = triangular_bialgebra(&a, r).unwrap();
        assert!(check_bialgebra(&a, &delta).unwrap().passed());
    }
}

#[test]
fn rota_baxter_operator_yields_a_solution_on_the_double() {
    let a = idempotent_line();
    let t = idempotent_line_rb();
    assert!(check_rb_adjoint(&a, &t).unwrap().passed());
    let (d, r) = rb_to_ybe(&a, &t).unwrap();
    assert!(check_law(&d, LawKind::A3).passed());
    assert!(r.is_skew());
    assert!(check_aybe(&d, &r).unwrap().passed());
}

#[test]
fn relative_search_recovers_the_known_operator() {
    let a = idempotent_line();
    let rho = adjoint_representation(&a);
    let grid = GridSpec::parse("-1,0,1", 1000).unwrap();
    let found = solve_relative_rb(&a, &rho, &grid).unwrap();
    assert!(found.contains(&idempotent_line_rb()));
    for t in &found {
        assert!(check_rb_adjoint(&a, t).unwrap().passed());
    }
}
