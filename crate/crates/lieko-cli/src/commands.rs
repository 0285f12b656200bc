//! Report-producing implementations of the CLI subcommands. Everything is
//! deterministic: two runs on the same input produce byte-identical output.

use crate::liefile::{emit_lie, file_from_algebra, parse_lie, LieFile};
use crate::verify;
use lieko::catalog::{catalog_make, catalog_names};
use lieko::homology::betti_numbers;
use lieko::koszul::{invariant_forms, killing_module, quadrable_probe, reduced_koszul, Quadrable};
use lieko::lie::{series, LieAlgebra, SeriesKind};
use lieko::scalars::{parse_domain_spec, ScalarDomain};
use serde_json::{json, Value};

/// Exit status conventions: 0 success, 1 mathematical-assertion failure,
/// 2 input error.
pub enum Outcome {
    Ok(String),
    OkJson(Value),
    MathFailure(String),
    InputError(String),
}

impl Outcome {
    pub fn code(&self) -> i32 {
        match self {
            Outcome::Ok(_) | Outcome::OkJson(_) => 0,
            Outcome::MathFailure(_) => 1,
            Outcome::InputError(_) => 2,
        }
    }
    pub fn render(&self) -> String {
        match self {
            Outcome::Ok(s) | Outcome::MathFailure(s) | Outcome::InputError(s) => s.clone(),
            Outcome::OkJson(v) => serde_json::to_string_pretty(v).unwrap().to_string(),
        }
    }
}

fn load(path: &str) -> Result<(LieFile, LieAlgebra), String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    let file = parse_lie(&text).map_err(|e| format!("{path}: {e}"))?;
    let alg = file.to_algebra().map_err(|e| format!("{path}: {e}"))?;
    Ok((file, alg))
}

fn parse_weight(w: &str) -> Result<Vec<i64>, String> {
    w.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| format!("bad weight entry {t}"))
        })
        .collect()
}

pub fn cmd_check(path: &str, json: bool) -> Outcome {
    match load(path) {
        Err(e) => Outcome::InputError(e),
        Ok((file, alg)) => {
            let s = series(&alg, SeriesKind::LowerCentral);
            let d = series(&alg, SeriesKind::Derived);
            if json {
                Outcome::OkJson(json!({
                    "dim": alg.dim,
                    "graded": alg.grading.is_some(),
                    "form_entries": file.form.len(),
                    "nilpotent": s.nilpotent,
                    "nilpotency_length": s.nilpotency_length,
                    "solvable": d.solvable,
                    "solvability_length": d.solvability_length,
                }))
            } else {
                let mut out = String::new();
                out.push_str(&format!(
                    "ok: Lie algebra of dimension {} over the given domain\n",
                    alg.dim
                ));
                out.push_str(&format!(
                    "nilpotent: {}{}\n",
                    s.nilpotent,
                    s.nilpotency_length
                        .map(|l| format!(" (length {l})"))
                        .unwrap_or_default()
                ));
                out.push_str(&format!(
                    "solvable: {}{}\n",
                    d.solvable,
                    d.solvability_length
                        .map(|l| format!(" (length {l})"))
                        .unwrap_or_default()
                ));
                if alg.grading.is_some() {
                    out.push_str("grading: compatible\n");
                }
                Outcome::Ok(out)
            }
        }
    }
}

pub fn cmd_betti(path: &str, up_to: Option<usize>, weight: Option<&str>, json: bool) -> Outcome {
    let (_, alg) = match load(path) {
        Err(e) => return Outcome::InputError(e),
        Ok(x) => x,
    };
    let w = match weight.map(parse_weight).transpose() {
        Err(e) => return Outcome::InputError(e),
        Ok(w) => w,
    };
    let up_to = up_to.unwrap_or(alg.dim);
    match betti_numbers(&alg, up_to, w.as_deref()) {
        Err(e) => Outcome::InputError(e.to_string()),
        Ok(rep) => {
            if json {
                Outcome::OkJson(json!({
                    "weight": rep.weight,
                    "betti": rep.betti_numbers(),
                    "degrees": rep.degrees.iter().map(|d| json!({
                        "degree": d.degree,
                        "chain_dim": d.chain_dim,
                        "cycles": d.cycle_dim,
                        "boundaries": d.boundary_dim,
                        "betti": d.betti,
                    })).collect::<Vec<_>>(),
                }))
            } else {
                let bs: Vec<String> = rep.betti_numbers().iter().map(|b| b.to_string()).collect();
                Outcome::Ok(format!("{}\n", bs.join(" ")))
            }
        }
    }
}

pub fn cmd_kill(path: &str, filtration: Option<usize>, json: bool) -> Outcome {
    let (_, alg) = match load(path) {
        Err(e) => return Outcome::InputError(e),
        Ok(x) => x,
    };
    match killing_module(&alg, filtration) {
        Err(e) => Outcome::InputError(e.to_string()),
        Ok(kill) => {
            if json {
                Outcome::OkJson(json!({
                    "kill_dim": kill.dim,
                    "filtration": kill.filtration,
                }))
            } else {
                let mut out = format!("dim Kill: {}\n", kill.dim);
                for (i, d) in &kill.filtration {
                    out.push_str(&format!("dim Kill^({i}): {d}\n"));
                }
                Outcome::Ok(out)
            }
        }
    }
}

pub fn cmd_koszul(path: &str, weight: Option<&str>, witness: bool, json: bool) -> Outcome {
    let (_, alg) = match load(path) {
        Err(e) => return Outcome::InputError(e),
        Ok(x) => x,
    };
    let w = match weight.map(parse_weight).transpose() {
        Err(e) => return Outcome::InputError(e),
        Ok(w) => w,
    };
    let kill = match killing_module(&alg, Some(3)) {
        Err(e) => return Outcome::InputError(e.to_string()),
        Ok(k) => k,
    };
    match reduced_koszul(&alg, &kill, w.as_deref()) {
        Err(e) => Outcome::InputError(e.to_string()),
        Ok((image, rank)) => {
            if json {
                Outcome::OkJson(json!({
                    "kill_dim": kill.dim,
                    "reduced_koszul_rank": rank,
                    "weight": w,
                }))
            } else {
                let mut out = format!("dim Kill: {}\nreduced Koszul rank: {rank}\n", kill.dim);
                if witness {
                    let f = alg.base();
                    for (t, v) in image.iter().enumerate() {
                        let cs: Vec<String> = v.iter().map(|x| f.format(x)).collect();
                        out.push_str(&format!("image[{t}]: [{}]\n", cs.join(", ")));
                    }
                }
                Outcome::Ok(out)
            }
        }
    }
}

pub fn cmd_forms(path: &str, witness: bool, json: bool) -> Outcome {
    let (_, alg) = match load(path) {
        Err(e) => return Outcome::InputError(e),
        Ok(x) => x,
    };
    match invariant_forms(&alg) {
        Err(e) => Outcome::InputError(e.to_string()),
        Ok(forms) => {
            if json {
                Outcome::OkJson(json!({ "invariant_forms_dim": forms.len() }))
            } else {
                let mut out = format!("dim invariant symmetric forms: {}\n", forms.len());
                if witness {
                    let f = alg.base();
                    for (t, b) in forms.iter().enumerate() {
                        out.push_str(&format!("form[{t}]:\n"));
                        for i in 0..b.dim() {
                            let row: Vec<String> =
                                (0..b.dim()).map(|j| f.format(b.eval(i, j))).collect();
                            out.push_str(&format!("  [{}]\n", row.join(", ")));
                        }
                    }
                }
                Outcome::Ok(out)
            }
        }
    }
}

pub fn cmd_quadrable(path: &str, json: bool) -> Outcome {
    let (_, alg) = match load(path) {
        Err(e) => return Outcome::InputError(e),
        Ok(x) => x,
    };
    match quadrable_probe(&alg) {
        Err(e) => Outcome::InputError(e.to_string()),
        Ok(v) => {
            let verdict = match &v {
                Quadrable::Nondegenerate(_) => "nondegenerate",
                Quadrable::DegenerateCertified => "degenerate-certified",
                Quadrable::Unknown => "unknown",
            };
            if json {
                Outcome::OkJson(json!({ "quadrable": verdict }))
            } else {
                Outcome::Ok(format!("quadrable probe: {verdict}\n"))
            }
        }
    }
}

pub fn cmd_current_h2(ring: &str, path: &str, json: bool) -> Outcome {
    let (_, alg) = match load(path) {
        Err(e) => return Outcome::InputError(e),
        Ok(x) => x,
    };
    let dom = match parse_domain_spec(ring) {
        Err(e) => return Outcome::InputError(e.to_string()),
        Ok(d) => d,
    };
    let ScalarDomain::Algebra(a) = dom else {
        return Outcome::InputError("current-h2 needs a ring (not a field) for --ring".into());
    };
    let graded = alg.grading.is_some();
    let alg = if graded {
        alg
    } else {
        // treat ungraded input as trivially graded in degree 0
        let zero = lieko::lie::Grading::new(1, vec![], vec![vec![0]; alg.dim]).unwrap();
        match alg.with_grading(Some(zero)) {
            Ok(a) => a,
            Err(e) => return Outcome::InputError(e.to_string()),
        }
    };
    match lieko::current::h2_graded_report(&a, &alg) {
        Err(e) => Outcome::InputError(e.to_string()),
        Ok(rep) => {
            if json {
                Outcome::OkJson(json!({
                    "hh1": rep.hh1,
                    "hc1": rep.hc1,
                    "ia_dim": rep.ia_dim,
                    "a0_dim": rep.a0_dim,
                    "identities_ok": rep.all_ok,
                    "rows": rep.rows.iter().map(|r| json!({
                        "weight": r.weight,
                        "h2_current": r.h2_current,
                        "h2_l": r.h2_l,
                        "kill_l": r.kill_l,
                        "eta_image": r.eta_image,
                    })).collect::<Vec<_>>(),
                }))
            } else {
                let mut out = format!(
                    "HH1(A) = {}, HC1(A) = {}, dim I_A = {}, dim A_0 = {}\n",
                    rep.hh1, rep.hc1, rep.ia_dim, rep.a0_dim
                );
                for r in &rep.rows {
                    let ws: Vec<String> = r.weight.iter().map(|x| x.to_string()).collect();
                    out.push_str(&format!(
                        "weight ({}): dim H2(A x l) = {}  [H2(l) = {}, Kill(l) = {}, Im eta = {}]\n",
                        ws.join(","),
                        r.h2_current,
                        r.h2_l,
                        r.kill_l,
                        r.eta_image
                    ));
                }
                out.push_str(&format!(
                    "corollary identities: {}\n",
                    if rep.all_ok { "all hold" } else { "MISMATCH" }
                ));
                if rep.all_ok {
                    Outcome::Ok(out)
                } else {
                    Outcome::MathFailure(out)
                }
            }
        }
    }
}

pub fn cmd_catalog_list() -> Outcome {
    let mut out = String::new();
    for n in catalog_names() {
        out.push_str(n);
        out.push('\n');
    }
    Outcome::Ok(out)
}

pub fn cmd_catalog_emit(name: &str, field: Option<&str>) -> Outcome {
    let domain = match field {
        None => default_domain_for(name),
        Some(spec) => match parse_domain_spec(spec) {
            Err(e) => return Outcome::InputError(e.to_string()),
            Ok(d) => d,
        },
    };
    match catalog_make(name, &domain) {
        Err(e) => Outcome::InputError(e.to_string()),
        Ok(entry) => {
            let file = file_from_algebra(&entry.algebra, entry.form.as_ref());
            Outcome::Ok(emit_lie(&file))
        }
    }
}

fn default_domain_for(name: &str) -> ScalarDomain {
    match name {
        "char3_octonion" => ScalarDomain::prime_field(3).unwrap(),
        "nonreduced_rank3" => {
            ScalarDomain::truncated_polynomial(lieko::scalars::BaseField::Q, 2).unwrap()
        }
        _ => ScalarDomain::rationals(),
    }
}

pub fn cmd_verify(only: Option<&str>, json: bool) -> Outcome {
    let sections = match verify::run_sections(only) {
        Err(e) => return Outcome::InputError(e),
        Ok(s) => s,
    };
    let all_ok = sections.iter().all(|s| s.ok());
    if json {
        let v = json!({
            "ok": all_ok,
            "sections": sections.iter().map(|s| json!({
                "tag": s.tag,
                "title": s.title,
                "ok": s.ok(),
                "checks": s.checks.iter().map(|c| json!({
                    "name": c.name,
                    "pass": c.pass,
                    "detail": if c.pass { Value::Null } else { Value::String(c.detail.clone()) },
                })).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        });
        if all_ok {
            Outcome::OkJson(v)
        } else {
            Outcome::MathFailure(serde_json::to_string_pretty(&v).unwrap())
        }
    } else {
        let mut out = String::new();
        for s in &sections {
            out.push_str(&format!("== {} ({})\n", s.tag, s.title));
            for c in &s.checks {
                if c.pass {
                    out.push_str(&format!("ok    {}\n", c.name));
                } else {
                    out.push_str(&format!("FAIL  {} -- {}\n", c.name, c.detail));
                }
            }
        }
        let (passed, total): (usize, usize) = (
            sections
                .iter()
                .map(|s| s.checks.iter().filter(|c| c.pass).count())
                .sum(),
            sections.iter().map(|s| s.checks.len()).sum(),
        );
        out.push_str(&format!("verify-paper: {passed}/{total} checks passed\n"));
        if all_ok {
            Outcome::Ok(out)
        } else {
            Outcome::MathFailure(out)
        }
    }
}
