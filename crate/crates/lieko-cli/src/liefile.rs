//! The `.lie` text format: a line-oriented description of a Lie algebra by
//! structure constants, with optional names, grading, and a distinguished
//! symmetric form. `#` starts a comment; indices are 1-based in the text.
//!
//! ```text
//! field Q | field F <p> | ring truncated <Q|F p> <N> | ring table <d>
//! mult <i> <j> = <coeffs>        (ring table only)
//! unit <coeffs>                  (ring table only)
//! dim <n>
//! names <id> ...
//! grading free <d> torsion <m1> ... <ms>
//! weight <basis-index> <t1> ... <t(d+s)>
//! bracket <i> <j> = <c1>*<k1> [+ <c2>*<k2> ...]
//! form <i> <j> = <c>
//! ```
//!
//! Coefficients are rationals (`a/b` or integers); over a `ring` domain a
//! coefficient may also be a coordinate vector `[c0,c1,...]` over the base
//! field.

use lieko::lie::{BilinearForm, BracketTable, Grading, LieAlgebra, LieError};
use lieko::scalars::{BaseField, CommAlgebra, DomainError, RingElem, ScalarDomain, K};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LieFileError {
    #[error("line {line}: syntax error: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {msg}")]
    Semantic { line: usize, msg: String },
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error(transparent)]
    Lie(#[from] LieError),
}

fn syn(line: usize, msg: impl Into<String>) -> LieFileError {
    LieFileError::Syntax {
        line,
        msg: msg.into(),
    }
}

fn sem(line: usize, msg: impl Into<String>) -> LieFileError {
    LieFileError::Semantic {
        line,
        msg: msg.into(),
    }
}

/// Parsed form of a `.lie` file.
#[derive(Clone, Debug)]
pub struct LieFile {
    pub domain: ScalarDomain,
    pub dim: usize,
    pub names: Option<Vec<String>>,
    pub grading: Option<Grading>,
    /// 0-based bracket entries, `i < j`.
    pub brackets: BracketTable,
    /// 0-based form entries `(i, j, c)` with `i <= j`.
    pub form: Vec<(usize, usize, K)>,
}

impl LieFile {
    pub fn to_algebra(&self) -> Result<LieAlgebra, LieError> {
        LieAlgebra::new(
            self.domain.clone(),
            self.dim,
            self.brackets.clone(),
            self.names.clone(),
            self.grading.clone(),
        )
    }

    pub fn bilinear_form(&self) -> Option<BilinearForm> {
        if self.form.is_empty() || !self.domain.is_field() {
            return None;
        }
        Some(BilinearForm::from_entries(
            self.domain.base(),
            self.dim,
            &self.form,
        ))
    }
}

fn parse_base_scalar(f: BaseField, tok: &str, line: usize) -> Result<K, LieFileError> {
    let parse_int = |s: &str| -> Result<i64, LieFileError> {
        s.parse().map_err(|_| syn(line, format!("bad number: {s}")))
    };
    if let Some((n, d)) = tok.split_once('/') {
        let n = parse_int(n)?;
        let d = parse_int(d)?;
        f.from_ratio(n, d)
            .ok_or_else(|| sem(line, format!("non-invertible denominator in {tok}")))
    } else {
        Ok(f.from_i64(parse_int(tok)?))
    }
}

fn parse_coefficient(
    domain: &ScalarDomain,
    tok: &str,
    line: usize,
) -> Result<RingElem, LieFileError> {
    let f = domain.base();
    if let Some(inner) = tok.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
        let coords: Result<Vec<K>, _> = inner
            .split(',')
            .map(|c| parse_base_scalar(f, c.trim(), line))
            .collect();
        let coords = coords?;
        if coords.len() != domain.rank() {
            return Err(sem(
                line,
                format!(
                    "coefficient vector has {} coordinates, domain rank is {}",
                    coords.len(),
                    domain.rank()
                ),
            ));
        }
        Ok(coords)
    } else {
        Ok(domain.from_base(&parse_base_scalar(f, tok, line)?))
    }
}

fn assemble_table(
    base: BaseField,
    d: usize,
    mult_entries: &[(usize, usize, Vec<K>, usize)],
    unit: Option<&Vec<K>>,
) -> Result<ScalarDomain, LieFileError> {
    let unit = unit.ok_or_else(|| sem(0, "ring table without a unit line"))?;
    let mut mult = vec![vec![vec![base.zero(); d]; d]; d];
    for (i, j, coeffs, _) in mult_entries {
        mult[*i][*j] = coeffs.clone();
        mult[*j][*i] = coeffs.clone();
    }
    Ok(ScalarDomain::Algebra(CommAlgebra::new(
        base,
        d,
        mult,
        unit.clone(),
    )?))
}

pub fn parse_lie(text: &str) -> Result<LieFile, LieFileError> {
    let mut domain: Option<ScalarDomain> = None;
    let mut dim: Option<usize> = None;
    let mut names: Option<Vec<String>> = None;
    let mut grading_group: Option<(usize, Vec<u64>)> = None;
    let mut weights: Vec<(usize, Vec<i64>, usize)> = Vec::new(); // (index, weight, line)
    let mut brackets: BracketTable = Vec::new();
    let mut form: Vec<(usize, usize, K)> = Vec::new();
    // pending "ring table" data
    let mut table_dim: Option<usize> = None;
    let mut table_mult: Vec<(usize, usize, Vec<K>, usize)> = Vec::new();
    let mut table_unit: Option<Vec<K>> = None;
    let mut table_base: BaseField = BaseField::Q;

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        match toks[0] {
            "field" | "ring" => {
                if toks.get(1) == Some(&"table") {
                    let d: usize = toks
                        .get(2)
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| syn(line, "ring table <dim>"))?;
                    table_dim = Some(d);
                    // optional base-field suffix: ring table <d> F <p>
                    if toks.get(3) == Some(&"F") {
                        let p: u64 = toks
                            .get(4)
                            .and_then(|s| s.parse().ok())
                            .ok_or_else(|| syn(line, "ring table <dim> F <p>"))?;
                        table_base = BaseField::prime_field(p)?;
                    }
                } else {
                    domain = Some(
                        lieko::scalars::parse_domain_spec(content).map_err(LieFileError::Domain)?,
                    );
                }
            }
            "mult" => {
                let d = table_dim.ok_or_else(|| sem(line, "mult before ring table"))?;
                if toks.len() < 5 || toks[3] != "=" {
                    return Err(syn(line, "mult <i> <j> = <coeffs>"));
                }
                let i: usize = toks[1].parse().map_err(|_| syn(line, "bad index"))?;
                let j: usize = toks[2].parse().map_err(|_| syn(line, "bad index"))?;
                if i < 1 || i > d || j < 1 || j > d {
                    return Err(sem(line, "mult index out of range"));
                }
                let coeffs: Result<Vec<K>, _> = toks[4..]
                    .iter()
                    .map(|t| parse_base_scalar(table_base, t, line))
                    .collect();
                let coeffs = coeffs?;
                if coeffs.len() != d {
                    return Err(sem(line, format!("expected {d} coefficients")));
                }
                table_mult.push((i - 1, j - 1, coeffs, line));
            }
            "unit" => {
                let d = table_dim.ok_or_else(|| sem(line, "unit before ring table"))?;
                let coeffs: Result<Vec<K>, _> = toks[1..]
                    .iter()
                    .map(|t| parse_base_scalar(table_base, t, line))
                    .collect();
                let coeffs = coeffs?;
                if coeffs.len() != d {
                    return Err(sem(line, format!("expected {d} coefficients")));
                }
                table_unit = Some(coeffs);
            }
            "dim" => {
                let n: usize = toks
                    .get(1)
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| syn(line, "dim <n>"))?;
                dim = Some(n);
            }
            "names" => {
                names = Some(toks[1..].iter().map(|s| s.to_string()).collect());
            }
            "grading" => {
                // grading free <d> torsion <m1> ... <ms>
                let mut free = 0usize;
                let mut torsion = Vec::new();
                let mut it = toks[1..].iter();
                while let Some(&t) = it.next() {
                    match t {
                        "free" => {
                            free = it
                                .next()
                                .and_then(|s| s.parse().ok())
                                .ok_or_else(|| syn(line, "grading free <d>"))?;
                        }
                        "torsion" => {
                            for &m in it.by_ref() {
                                torsion
                                    .push(m.parse().map_err(|_| syn(line, "bad torsion modulus"))?);
                            }
                        }
                        _ => return Err(syn(line, "grading free <d> [torsion <m>...]")),
                    }
                }
                grading_group = Some((free, torsion));
            }
            "weight" => {
                let i: usize = toks
                    .get(1)
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| syn(line, "weight <basis-index> <t>..."))?;
                let w: Result<Vec<i64>, _> = toks[2..]
                    .iter()
                    .map(|s| s.parse().map_err(|_| syn(line, "bad weight entry")))
                    .collect();
                weights.push((i, w?, line));
            }
            "bracket" => {
                if toks.len() < 5 || toks[3] != "=" {
                    return Err(syn(line, "bracket <i> <j> = <c>*<k> [+ ...]"));
                }
                let i: usize = toks[1].parse().map_err(|_| syn(line, "bad index"))?;
                let j: usize = toks[2].parse().map_err(|_| syn(line, "bad index"))?;
                if i == j {
                    return Err(sem(line, "diagonal bracket (i = j)"));
                }
                if i > j {
                    return Err(sem(line, "bracket entries must have i < j"));
                }
                let rhs = toks[4..].join(" ");
                if domain.is_none() {
                    if let Some(d) = table_dim.take() {
                        domain = Some(assemble_table(
                            table_base,
                            d,
                            &table_mult,
                            table_unit.as_ref(),
                        )?);
                    }
                }
                let dom = domain
                    .clone()
                    .ok_or_else(|| sem(line, "bracket before domain declaration"))?;
                let mut terms = Vec::new();
                for part in rhs.split('+') {
                    let part = part.trim();
                    let (c, k) = part
                        .rsplit_once('*')
                        .ok_or_else(|| syn(line, format!("expected <c>*<k> in {part}")))?;
                    let coeff = parse_coefficient(&dom, c.trim(), line)?;
                    let k: usize = k
                        .trim()
                        .parse()
                        .map_err(|_| syn(line, format!("bad basis index {k}")))?;
                    terms.push((k, coeff, line));
                }
                brackets.push(((i, j), terms.into_iter().map(|(k, c, _)| (k, c)).collect()));
            }
            "form" => {
                if toks.len() != 5 || toks[3] != "=" {
                    return Err(syn(line, "form <i> <j> = <c>"));
                }
                let i: usize = toks[1].parse().map_err(|_| syn(line, "bad index"))?;
                let j: usize = toks[2].parse().map_err(|_| syn(line, "bad index"))?;
                if domain.is_none() {
                    if let Some(d) = table_dim.take() {
                        domain = Some(assemble_table(
                            table_base,
                            d,
                            &table_mult,
                            table_unit.as_ref(),
                        )?);
                    }
                }
                let dom = domain
                    .clone()
                    .ok_or_else(|| sem(line, "form before domain declaration"))?;
                let c = parse_base_scalar(dom.base(), toks[4], line)?;
                form.push((i, j, c));
            }
            other => return Err(syn(line, format!("unrecognized directive: {other}"))),
        }
    }

    // assemble a ring-table domain if it was declared but never consumed
    if domain.is_none() {
        if let Some(d) = table_dim.take() {
            domain = Some(assemble_table(
                table_base,
                d,
                &table_mult,
                table_unit.as_ref(),
            )?);
        }
    }
    let domain = domain.ok_or_else(|| sem(0, "no domain declared"))?;
    let dim = dim.ok_or_else(|| sem(0, "no dim declared"))?;
    if let Some(ns) = &names {
        if ns.len() != dim {
            return Err(sem(0, "names count does not match dim"));
        }
    }
    // validate and rebase indices
    let mut rebased: BracketTable = Vec::new();
    for ((i, j), terms) in brackets {
        if i < 1 || j > dim {
            return Err(sem(0, format!("bracket index out of range: ({i}, {j})")));
        }
        let mut ts = Vec::new();
        for (k, c) in terms {
            if k < 1 || k > dim {
                return Err(sem(0, format!("bracket target index out of range: {k}")));
            }
            ts.push((k - 1, c));
        }
        rebased.push(((i - 1, j - 1), ts));
    }
    let grading = match grading_group {
        None => {
            if let Some((_, _, line)) = weights.first() {
                return Err(sem(*line, "weight line without a grading declaration"));
            }
            None
        }
        Some((free, torsion)) => {
            let arity = free + torsion.len();
            let mut ws = vec![vec![0i64; arity]; dim];
            for (i, w, line) in weights {
                if i < 1 || i > dim {
                    return Err(sem(line, format!("weight index out of range: {i}")));
                }
                if w.len() != arity {
                    return Err(sem(line, format!("weight arity {} != {arity}", w.len())));
                }
                ws[i - 1] = w;
            }
            Some(Grading::new(free, torsion, ws).map_err(LieFileError::Lie)?)
        }
    };
    let mut rebased_form = Vec::new();
    for (i, j, c) in form {
        if i < 1 || i > dim || j < 1 || j > dim {
            return Err(sem(0, format!("form index out of range: ({i}, {j})")));
        }
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        rebased_form.push((a - 1, b - 1, c));
    }
    Ok(LieFile {
        domain,
        dim,
        names,
        grading,
        brackets: rebased,
        form: rebased_form,
    })
}

fn emit_scalar(f: BaseField, k: &K) -> String {
    f.format(k)
}

fn emit_coefficient(domain: &ScalarDomain, c: &RingElem) -> String {
    let f = domain.base();
    match domain {
        ScalarDomain::Field(_) => emit_scalar(f, &c[0]),
        ScalarDomain::Algebra(_) => {
            let parts: Vec<String> = c.iter().map(|x| emit_scalar(f, x)).collect();
            format!("[{}]", parts.join(","))
        }
    }
}

/// Canonical text emission; `parse_lie(emit_lie(f))` reproduces `f`.
pub fn emit_lie(file: &LieFile) -> String {
    let mut out = String::new();
    match &file.domain {
        ScalarDomain::Field(BaseField::Q) => out.push_str("field Q\n"),
        ScalarDomain::Field(BaseField::Fp(p)) => {
            let _ = writeln!(out, "field F {p}");
        }
        ScalarDomain::Algebra(a) => {
            // recognize truncated polynomial algebras for a compact spelling
            if let Some(n) = truncation_order(a) {
                match a.base {
                    BaseField::Q => {
                        let _ = writeln!(out, "ring truncated Q {n}");
                    }
                    BaseField::Fp(p) => {
                        let _ = writeln!(out, "ring truncated F {p} {n}");
                    }
                }
            } else {
                match a.base {
                    BaseField::Q => {
                        let _ = writeln!(out, "ring table {}", a.dim);
                    }
                    BaseField::Fp(p) => {
                        let _ = writeln!(out, "ring table {} F {p}", a.dim);
                    }
                }
                for i in 0..a.dim {
                    for j in i..a.dim {
                        let prod = a.basis_product(i, j);
                        if prod.iter().any(|x| !a.base.is_zero(x)) {
                            let cs: Vec<String> =
                                prod.iter().map(|x| emit_scalar(a.base, x)).collect();
                            let _ = writeln!(out, "mult {} {} = {}", i + 1, j + 1, cs.join(" "));
                        }
                    }
                }
                let us: Vec<String> = a.unit().iter().map(|x| emit_scalar(a.base, x)).collect();
                let _ = writeln!(out, "unit {}", us.join(" "));
            }
        }
    }
    let _ = writeln!(out, "dim {}", file.dim);
    if let Some(ns) = &file.names {
        let _ = writeln!(out, "names {}", ns.join(" "));
    }
    if let Some(g) = &file.grading {
        let mut line = format!("grading free {}", g.free);
        if !g.torsion.is_empty() {
            line.push_str(" torsion");
            for m in &g.torsion {
                let _ = write!(line, " {m}");
            }
        }
        let _ = writeln!(out, "{line}");
        for (i, w) in g.weights.iter().enumerate() {
            if w.iter().any(|&x| x != 0) {
                let ws: Vec<String> = w.iter().map(|x| x.to_string()).collect();
                let _ = writeln!(out, "weight {} {}", i + 1, ws.join(" "));
            }
        }
    }
    let mut brackets = file.brackets.clone();
    brackets.sort_by_key(|((i, j), _)| (*i, *j));
    for ((i, j), terms) in &brackets {
        let parts: Vec<String> = terms
            .iter()
            .map(|(k, c)| format!("{}*{}", emit_coefficient(&file.domain, c), k + 1))
            .collect();
        if !parts.is_empty() {
            let _ = writeln!(out, "bracket {} {} = {}", i + 1, j + 1, parts.join(" + "));
        }
    }
    let mut form = file.form.clone();
    form.sort_by_key(|(i, j, _)| (*i, *j));
    for (i, j, c) in &form {
        let _ = writeln!(
            out,
            "form {} {} = {}",
            i + 1,
            j + 1,
            emit_scalar(file.domain.base(), c)
        );
    }
    out
}

fn truncation_order(a: &CommAlgebra) -> Option<usize> {
    let d = a.dim;
    let f = a.base;
    let expect = ScalarDomain::truncated_polynomial(f, d).ok()?;
    match expect {
        ScalarDomain::Algebra(t) => (&t == a).then_some(d),
        _ => None,
    }
}

/// Serializes an algebra (plus optional form) in the `.lie` format.
pub fn file_from_algebra(g: &LieAlgebra, form: Option<&BilinearForm>) -> LieFile {
    let mut brackets: BracketTable = Vec::new();
    for i in 0..g.dim {
        for j in (i + 1)..g.dim {
            let terms: Vec<(usize, RingElem)> =
                g.bracket_terms(i, j).map(|(k, c)| (k, c.clone())).collect();
            if !terms.is_empty() {
                brackets.push(((i, j), terms));
            }
        }
    }
    let mut form_entries = Vec::new();
    if let Some(b) = form {
        for i in 0..g.dim {
            for j in i..g.dim {
                let c = b.eval(i, j);
                if !g.base().is_zero(c) {
                    form_entries.push((i, j, c.clone()));
                }
            }
        }
    }
    LieFile {
        domain: g.domain.clone(),
        dim: g.dim,
        names: g.names.clone(),
        grading: g.grading.clone(),
        brackets,
        form: form_entries,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heisenberg_file_parses() {
        let text = "# heisenberg\nfield Q\ndim 3\nnames x y z\nbracket 1 2 = 1*3\n";
        let f = parse_lie(text).unwrap();
        let g = f.to_algebra().unwrap();
        assert_eq!(g.dim, 3);
        assert_eq!(g.name_of(2), "z");
    }

    #[test]
    fn diagonal_bracket_rejected() {
        let text = "field Q\ndim 2\nbracket 1 1 = 1*2\n";
        match parse_lie(text) {
            Err(LieFileError::Semantic { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected semantic error, got {other:?}"),
        }
    }

    #[test]
    fn syntax_error_carries_line() {
        let text = "field Q\ndim 2\nbracket 1 2 = oops\n";
        match parse_lie(text) {
            Err(LieFileError::Syntax { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn ring_coefficients_roundtrip() {
        let text = "ring truncated Q 2\ndim 3\nbracket 1 2 = [0,1]*3\nbracket 2 3 = [0,1]*1\nbracket 1 3 = [0,-1]*2\n";
        let f = parse_lie(text).unwrap();
        let g = f.to_algebra().unwrap();
        assert_eq!(g.dim, 3);
        let out = emit_lie(&f);
        let f2 = parse_lie(&out).unwrap();
        assert_eq!(emit_lie(&f2), out);
    }

    #[test]
    fn ring_table_roundtrip() {
        // Q x Q: e1^2 = e1, e2^2 = e2, e1 e2 = 0, unit (1,1)
        let text = "ring table 2\nmult 1 1 = 1 0\nmult 2 2 = 0 1\nunit 1 1\ndim 2\nbracket 1 2 = [1,-1]*2\n";
        let f = parse_lie(text).unwrap();
        assert_eq!(f.domain.rank(), 2);
        let g = f.to_algebra().unwrap();
        assert_eq!(g.dim, 2);
        let emitted = emit_lie(&f);
        assert!(emitted.starts_with("ring table 2\n"), "{emitted}");
        let f2 = parse_lie(&emitted).unwrap();
        assert_eq!(emit_lie(&f2), emitted);
        assert_eq!(f2.domain, f.domain);
    }

    #[test]
    fn weight_without_grading_rejected() {
        let text = "field Q\ndim 2\nweight 1 1\n";
        assert!(matches!(
            parse_lie(text),
            Err(LieFileError::Semantic { .. })
        ));
    }
}
