//! Commands behind the `a3kit` binary. Each returns its full output and exit
//! code so it can be driven without a process.

use std::fmt::Write as _;

use a3kit::algebra::format_combination;
use a3kit::bialgebra::{check_bialgebra, check_coalgebra, dual_algebra};
use a3kit::double::{canonical_spans, check_manin_triple, standard_double};
use a3kit::representation::adjoint_representation;
use a3kit::search::{solve_aybe_skew, solve_relative_rb, GridSpec};
use a3kit::tensor::format_scalar;
use a3kit::yangbaxter::{check_aybe, check_rb_adjoint, delta_from_r, rb_to_ybe};
use a3kit::{check_law, par, CheckReport, Error, LawKind, Vector};
use serde_json::{json, Value};

use crate::file::{AlgebraFile, FileError};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    Json,
    #[default]
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchKind {
    Rb,
    Aybe,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn input_error(message: impl std::fmt::Display) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
            code: EXIT_INPUT,
        }
    }
}

/// What a command produced before rendering.
struct Run {
    checks: Vec<CheckReport>,
    document: Option<AlgebraFile>,
    extra: Vec<(String, Value)>,
    notes: Vec<String>,
    labels: Vec<String>,
}

impl Run {
    fn new(labels: &[String]) -> Self {
        Run {
            checks: Vec::new(),
            document: None,
            extra: Vec::new(),
            notes: Vec::new(),
            labels: labels.to_vec(),
        }
    }

    fn passed(&self) -> bool {
        self.checks.iter().all(CheckReport::passed)
    }
}

enum Failure {
    Input(String),
    /// A construction refused its input; the report says why.
    Precondition(Box<Run>),
}

impl From<FileError> for Failure {
    fn from(e: FileError) -> Self {
        Failure::Input(e.to_string())
    }
}

fn lift(e: Error, labels: &[String]) -> Failure {
    match e {
        Error::AdmissibilityRequired(r)
        | Error::NotYangBaxterSolution(r)
        | Error::Precondition(r) => {
            let mut run = Run::new(labels);
            run.checks.push(*r);
            Failure::Precondition(Box::new(run))
        }
        other => Failure::Input(other.to_string()),
    }
}

fn finish(result: Result<Run, Failure>, format: Format) -> Outcome {
    match result {
        Ok(run) => {
            let code = if run.passed() { EXIT_PASS } else { EXIT_FAIL };
            Outcome {
                stdout: render(&run, format),
                stderr: String::new(),
                code,
            }
        }
        Err(Failure::Precondition(run)) => Outcome {
            stdout: render(&run, format),
            stderr: "error: precondition failed\n".into(),
            code: EXIT_FAIL,
        },
        Err(Failure::Input(message)) => Outcome::input_error(message),
    }
}

fn load(text: &str) -> Result<AlgebraFile, Failure> {
    Ok(AlgebraFile::from_json(text)?)
}

/// Runs the requested laws; an empty list means all of them.
pub fn cmd_check(text: &str, laws: &[String], format: Format) -> Outcome {
    let run = || -> Result<Run, Failure> {
        let file = load(text)?;
        let a = file.algebra()?;
        let kinds: Vec<LawKind> = if laws.is_empty() {
            LawKind::ALL.to_vec()
        } else {
            laws.iter()
                .map(|l| {
                    l.parse::<LawKind>()
                        .map_err(|e| Failure::Input(e.to_string()))
                })
                .collect::<Result<_, _>>()?
        };
        let mut run = Run::new(a.labels());
        run.checks = kinds.into_iter().map(|k| check_law(&a, k)).collect();
        Ok(run)
    };
    finish(run(), format)
}

/// Verdicts for every law. Always exits 0 on valid input.
pub fn cmd_classify(text: &str, format: Format) -> Outcome {
    let file = match AlgebraFile::from_json(text).and_then(|f| f.algebra()) {
        Ok(a) => a,
        Err(e) => return Outcome::input_error(e),
    };
    let verdicts: Vec<(&str, bool)> = LawKind::ALL
        .iter()
        .map(|&k| (k.name(), check_law(&file, k).passed()))
        .collect();
    let stdout = match format {
        Format::Json => {
            let laws: serde_json::Map<String, Value> = verdicts
                .iter()
                .map(|(n, v)| (n.to_string(), Value::Bool(*v)))
                .collect();
            pretty(&json!({ "dim": file.dim(), "laws": laws }))
        }
        Format::Table => {
            let mut s = String::new();
            for (name, v) in verdicts {
                let _ = writeln!(s, "{name:<20} {}", if v { "yes" } else { "no" });
            }
            s
        }
    };
    Outcome {
        stdout,
        stderr: String::new(),
        code: EXIT_PASS,
    }
}

/// The double `A ⊕ A*` of the algebra and its `delta` block, with the
/// bialgebra and Manin triple checks.
pub fn cmd_double(text: &str, format: Format) -> Outcome {
    let run = || -> Result<Run, Failure> {
        let file = load(text)?;
        let a = file.algebra()?;
        let delta = file
            .comultiplication()?
            .ok_or_else(|| Failure::Input("the file has no delta block".into()))?;
        let astar = dual_algebra(&delta);
        let (d, bd) = standard_double(&a, &astar).map_err(|e| lift(e, a.labels()))?;
        let (s1, s2) = canonical_spans(a.dim());
        let mut run = Run::new(d.labels());
        run.checks
            .push(check_bialgebra(&a, &delta).map_err(|e| lift(e, a.labels()))?);
        run.checks
            .push(check_manin_triple(&d, &bd, &s1, &s2).map_err(|e| lift(e, d.labels()))?);
        run.document = Some(AlgebraFile::from_algebra(&d).with_form("B", &bd));
        Ok(run)
    };
    finish(run(), format)
}

/// Replaces the `delta` block by the comultiplication induced by tensor `r`.
pub fn cmd_delta(text: &str, r_name: &str, format: Format) -> Outcome {
    let run = || -> Result<Run, Failure> {
        let file = load(text)?;
        let a = file.algebra()?;
        let r = file.tensor(r_name)?;
        let delta = delta_from_r(&a, &r).map_err(|e| lift(e, a.labels()))?;
        let mut run = Run::new(a.labels());
        run.checks.push(check_coalgebra(&delta));
        run.checks
            .push(check_bialgebra(&a, &delta).map_err(|e| lift(e, a.labels()))?);
        run.document = Some(file.with_delta(&delta));
        Ok(run)
    };
    finish(run(), format)
}

/// The Yang-Baxter residual of tensor `r`.
pub fn cmd_aybe(text: &str, r_name: &str, format: Format) -> Outcome {
    let run = || -> Result<Run, Failure> {
        let file = load(text)?;
        let a = file.algebra()?;
        let r = file.tensor(r_name)?;
        let report = check_aybe(&a, &r).map_err(|e| lift(e, a.labels()))?;
        let mut run = Run::new(a.labels());
        run.notes
            .push(format!("AY({r_name}) = 0: {}", report.passed()));
        run.checks.push(report);
        Ok(run)
    };
    finish(run(), format)
}

/// The double `A ⋉ A*` and skew tensor built from the operator in `maps`.
pub fn cmd_rb2ybe(text: &str, map_name: &str, format: Format) -> Outcome {
    let run = || -> Result<Run, Failure> {
        let file = load(text)?;
        let a = file.algebra()?;
        let t = file.map(map_name)?;
        let rb = check_rb_adjoint(&a, &t).map_err(|e| lift(e, a.labels()))?;
        let (d, r) = rb_to_ybe(&a, &t).map_err(|e| lift(e, a.labels()))?;
        let ay = check_aybe(&d, &r).map_err(|e| lift(e, d.labels()))?;
        let mut run = Run::new(d.labels());
        run.notes
            .push(format!("{map_name} is Rota-Baxter: {}", rb.passed()));
        run.notes.push(format!("AY(r) = 0: {}", ay.passed()));
        run.checks.push(rb);
        run.checks.push(ay);
        run.document = Some(AlgebraFile::from_algebra(&d).with_tensor("r", &r));
        Ok(run)
    };
    finish(run(), format)
}

/// Every grid solution, as named maps `T...` or tensors `r...` added to the
/// input document. `threads` caps the worker pool.
pub fn cmd_search(
    text: &str,
    kind: SearchKind,
    grid: &str,
    max_solutions: usize,
    threads: Option<usize>,
    format: Format,
) -> Outcome {
    let run = || -> Result<Run, Failure> {
        let file = load(text)?;
        let a = file.algebra()?;
        let grid =
            GridSpec::parse(grid, max_solutions).map_err(|e| Failure::Input(e.to_string()))?;
        let mut doc = AlgebraFile::from_algebra(&a);
        let count = match kind {
            SearchKind::Rb => {
                let rho = adjoint_representation(&a);
                let found = par::with_threads(threads, || solve_relative_rb(&a, &rho, &grid))
                    .map_err(|e| lift(e, a.labels()))?;
                let width = digits(found.len());
                for (i, t) in found.iter().enumerate() {
                    doc = doc.with_map(&format!("T{:0width$}", i + 1), t);
                }
                found.len()
            }
            SearchKind::Aybe => {
                let found = par::with_threads(threads, || solve_aybe_skew(&a, &grid))
                    .map_err(|e| lift(e, a.labels()))?;
                let width = digits(found.len());
                for (i, r) in found.iter().enumerate() {
                    doc = doc.with_tensor(&format!("r{:0width$}", i + 1), r);
                }
                found.len()
            }
        };
        let mut run = Run::new(a.labels());
        run.notes.push(format!("solutions: {count}"));
        run.extra.push(("solutions".into(), json!(count)));
        run.extra
            .push(("truncated".into(), json!(count == grid.max_solutions)));
        run.document = Some(doc);
        Ok(run)
    };
    finish(run(), format)
}

fn digits(n: usize) -> usize {
    n.to_string().len()
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn index_label(labels: &[String], index: &[usize]) -> String {
    let parts: Vec<String> = index
        .iter()
        .map(|&i| labels.get(i).cloned().unwrap_or_else(|| i.to_string()))
        .collect();
    format!("({})", parts.join(","))
}

/// A residual in basis labels: a scalar, a vector, or a flattened 2- or 3-tensor.
pub fn format_residual(residual: &[a3kit::Scalar], labels: &[String]) -> String {
    let n = labels.len();
    if residual.len() == 1 {
        return format_scalar(&residual[0]);
    }
    let names: Vec<String> = if residual.len() == n {
        labels.to_vec()
    } else if residual.len() == n * n {
        labels
            .iter()
            .flat_map(|a| labels.iter().map(move |b| format!("{a}⊗{b}")))
            .collect()
    } else if residual.len() == n * n * n {
        labels
            .iter()
            .flat_map(|a| {
                labels
                    .iter()
                    .flat_map(move |b| labels.iter().map(move |c| format!("{a}⊗{b}⊗{c}")))
            })
            .collect()
    } else {
        (1..=residual.len()).map(|i| format!("[{i}]")).collect()
    };
    format_combination(&Vector(residual.to_vec()), &names)
}

fn render(run: &Run, format: Format) -> String {
    match format {
        Format::Json => {
            let checks: Vec<Value> = run
                .checks
                .iter()
                .map(|c| {
                    let failures: Vec<Value> = c
                        .failures
                        .iter()
                        .map(|f| json!({ "part": f.part, "index": f.index, "residual": f.residual.iter().map(format_scalar).collect::<Vec<_>>() }))
                        .collect();
                    json!({ "name": c.name, "passed": c.passed(), "failures": failures })
                })
                .collect();
            let mut obj = serde_json::Map::new();
            obj.insert("checks".into(), Value::Array(checks));
            obj.insert("passed".into(), Value::Bool(run.passed()));
            if let Some(doc) = &run.document {
                obj.insert(
                    "document".into(),
                    serde_json::to_value(doc).expect("plain data serializes"),
                );
            }
            for (k, v) in &run.extra {
                obj.insert(k.clone(), v.clone());
            }
            pretty(&Value::Object(obj))
        }
        Format::Table => {
            let mut s = String::new();
            for c in &run.checks {
                if c.passed() {
                    let _ = writeln!(s, "{}: pass", c.name);
                    continue;
                }
                let _ = writeln!(s, "{}: FAIL ({} nonzero)", c.name, c.failures.len());
                for f in &c.failures {
                    let at = index_label(&run.labels, &f.index);
                    if f.residual.is_empty() {
                        let _ = writeln!(s, "  {} {at}", f.part);
                    } else {
                        let _ = writeln!(
                            s,
                            "  {} {at}: {}",
                            f.part,
                            format_residual(&f.residual, &run.labels)
                        );
                    }
                }
            }
            for note in &run.notes {
                let _ = writeln!(s, "{note}");
            }
            if let Some(doc) = &run.document {
                s.push_str(&doc.to_json());
            }
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use a3kit::examples::{
        admissible_plane, idempotent_delta, idempotent_line, idempotent_line_rb,
    };

    fn plane() -> String {
        AlgebraFile::from_algebra(&admissible_plane())
            .with_delta(&idempotent_delta())
            .to_json()
    }

    #[test]
    fn check_admissible_plane() {
        let ok = cmd_check(&plane(), &["a3".into(), "admissible".into()], Format::Table);
        assert_eq!(ok.code, EXIT_PASS, "{}", ok.stdout);
        let bad = cmd_check(&plane(), &["associative".into()], Format::Table);
        assert_eq!(bad.code, EXIT_FAIL);
        assert!(
            bad.stdout.contains("associative (e1,e2,e2): 2·e2"),
            "{}",
            bad.stdout
        );
    }

    #[test]
    fn zero_denominator_is_an_input_error() {
        let text = plane().replacen("\"2\"", "\"1/0\"", 1);
        let out = cmd_check(&text, &[], Format::Json);
        assert_eq!(out.code, EXIT_INPUT);
        assert!(out.stdout.is_empty());
    }

    #[test]
    fn unknown_law_and_missing_names() {
        assert_eq!(
            cmd_check(&plane(), &["flat".into()], Format::Table).code,
            EXIT_INPUT
        );
        assert_eq!(cmd_aybe(&plane(), "nope", Format::Table).code, EXIT_INPUT);
        assert_eq!(cmd_rb2ybe(&plane(), "nope", Format::Table).code, EXIT_INPUT);
        assert_eq!(cmd_check("{", &[], Format::Table).code, EXIT_INPUT);
    }

    #[test]
    fn classify_zero_algebra() {
        let text = AlgebraFile::from_algebra(&a3kit::Algebra::zero(2)).to_json();
        let out = cmd_classify(&text, Format::Table);
        assert_eq!(out.stdout.matches("yes").count(), 7);
    }

    #[test]
    fn double_of_idempotent_delta() {
        let out = cmd_double(&plane(), Format::Table);
        assert_eq!(out.code, EXIT_PASS, "{}", out.stdout);
        assert!(out.stdout.contains("manin triple: pass"));
    }

    #[test]
    fn delta_of_zero_tensor() {
        let text = AlgebraFile::from_algebra(&admissible_plane())
            .with_tensor("r", &a3kit::Tensor2::zero(2))
            .to_json();
        let out = cmd_delta(&text, "r", Format::Json);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["document"]["delta"], json!({}));
    }

    #[test]
    fn rb2ybe_on_idempotent_line() {
        let text = AlgebraFile::from_algebra(&idempotent_line())
            .with_map("T", &idempotent_line_rb())
            .to_json();
        let out = cmd_rb2ybe(&text, "T", Format::Table);
        assert_eq!(out.code, EXIT_PASS, "{}", out.stdout);
        assert!(out.stdout.contains("AY(r) = 0: true"));
    }

    #[test]
    fn precondition_failure_reports_witness() {
        let mut a = a3kit::Algebra::zero(2);
        a.set_sc(0, 0, 1, a3kit::tensor::int(1));
        a.set_sc(1, 1, 0, a3kit::tensor::int(1));
        a.set_sc(0, 1, 0, a3kit::tensor::int(1));
        let text = AlgebraFile::from_algebra(&a)
            .with_delta(&a3kit::bialgebra::Comultiplication::zero(2))
            .to_json();
        let out = cmd_double(&text, Format::Table);
        assert_eq!(out.code, EXIT_FAIL);
        assert!(out.stdout.contains("FAIL"), "{}", out.stdout);
    }
}
