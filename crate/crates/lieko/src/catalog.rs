//! Named constructors for the example algebras: the regular quadratic
//! families `w(lambda)`, `X(3k-1)`, `Y(3k)`, the 9-dimensional Kath algebra,
//! the twisted `w(7)`, the 12-dimensional algebra with nonzero reduced Koszul
//! map, the 9-dimensional solvable example, the characteristic-3 octonion
//! algebra, the rank-3 algebra over a non-reduced ring, and assorted small
//! standards (abelian, Heisenberg, filiform, sl2, the split oscillator,
//! coadjoint products, seeded 2-nilpotent randoms).
//!
//! Basis orders follow the printed presentations so that matrix-level
//! comparisons are literal.

use crate::lie::{coadjoint_double, BilinearForm, BracketTable, Grading, LieAlgebra, LieError};
use crate::linalg::Mat;
use crate::scalars::{BaseField, DomainError, ScalarDomain};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown catalog name: {0}")]
    UnknownName(String),
    #[error("bad parameters for {0}: {1}")]
    BadParams(String, String),
    #[error("partition part {0} is congruent to 2 mod 4")]
    BadPartition(usize),
    #[error("{0}")]
    CharacteristicMismatch(String),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Domain(#[from] DomainError),
}

/// Facts the rest of the toolkit re-derives and checks against.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Expected {
    pub dim: usize,
    pub nilpotency_length: Option<usize>,
    pub kill_dim: Option<usize>,
    pub eta_rank: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub algebra: LieAlgebra,
    /// Distinguished invariant form, when the presentation carries one.
    pub form: Option<BilinearForm>,
    /// All gradings attached to this entry (the first is the one carried by
    /// `algebra`).
    pub gradings: Vec<(String, Grading)>,
    pub expected: Expected,
}

/// The catalog names, with their parameter shapes.
pub fn catalog_names() -> Vec<&'static str> {
    vec![
        "abelian(n)",
        "heisenberg(2k+1)",
        "filiform(n)",
        "sl2",
        "oscillator4",
        "w(a1+a2+...)",
        "X(3k-1)",
        "Y(3k)",
        "kath9_4c",
        "w7_twisted",
        "g12",
        "solvable9",
        "char3_octonion",
        "nonreduced_rank3",
        "coadjoint(sl2)",
        "two_nilpotent_random(seed,v,w)",
    ]
}

fn field_only(domain: &ScalarDomain, name: &str) -> Result<BaseField, CatalogError> {
    match domain {
        ScalarDomain::Field(f) => Ok(*f),
        ScalarDomain::Algebra(_) => Err(CatalogError::CharacteristicMismatch(format!(
            "{name} is defined over a field"
        ))),
    }
}

/// Builds a catalog entry by name over the requested domain.
pub fn catalog_make(name: &str, domain: &ScalarDomain) -> Result<CatalogEntry, CatalogError> {
    let (head, args) = split_name(name);
    match head {
        "abelian" => abelian_entry(domain, one_arg(name, &args)?),
        "heisenberg" => heisenberg_entry(domain, one_arg(name, &args)?),
        "filiform" => filiform_entry(domain, one_arg(name, &args)?),
        "sl2" => sl2_entry(domain),
        "oscillator4" => oscillator4_entry(domain),
        "w" => {
            let (parts, r) = parse_partition(name, &args)?;
            w_entry(domain, &parts, r)
        }
        "X" => x_entry(domain, one_arg(name, &args)?),
        "Y" => y_entry(domain, one_arg(name, &args)?),
        "kath9_4c" => kath9_entry(domain),
        "w7_twisted" => w7_sec53_entry(domain, true),
        "g12" => g12_entry(domain),
        "solvable9" => solvable9_entry(domain),
        "char3_octonion" => char3_entry(domain),
        "nonreduced_rank3" => nonreduced_entry(domain),
        "coadjoint" => {
            if args.as_deref() == Some("sl2") {
                coadjoint_sl2_entry(domain)
            } else {
                Err(CatalogError::BadParams(
                    "coadjoint".into(),
                    "only coadjoint(sl2) is in the catalog".into(),
                ))
            }
        }
        "two_nilpotent_random" => {
            let a = args.unwrap_or_default();
            let ps: Vec<&str> = a.split(',').collect();
            if ps.len() != 3 {
                return Err(CatalogError::BadParams(
                    "two_nilpotent_random".into(),
                    "expected (seed,v,w)".into(),
                ));
            }
            let seed: u64 = ps[0].trim().parse().map_err(|_| bad(name, "seed"))?;
            let v: usize = ps[1].trim().parse().map_err(|_| bad(name, "v"))?;
            let w: usize = ps[2].trim().parse().map_err(|_| bad(name, "w"))?;
            two_nilpotent_random_entry(domain, seed, v, w)
        }
        _ => Err(CatalogError::UnknownName(name.to_string())),
    }
}

fn bad(name: &str, what: &str) -> CatalogError {
    CatalogError::BadParams(name.to_string(), format!("bad {what}"))
}

fn split_name(name: &str) -> (&str, Option<String>) {
    match name.find('(') {
        Some(p) if name.ends_with(')') => {
            (&name[..p], Some(name[p + 1..name.len() - 1].to_string()))
        }
        _ => (name, None),
    }
}

fn one_arg(name: &str, args: &Option<String>) -> Result<usize, CatalogError> {
    args.as_ref()
        .and_then(|a| a.trim().parse().ok())
        .ok_or_else(|| bad(name, "argument"))
}

fn parse_partition(
    name: &str,
    args: &Option<String>,
) -> Result<(Vec<usize>, Option<usize>), CatalogError> {
    let a = args.clone().ok_or_else(|| bad(name, "partition"))?;
    let (parts_str, r) = match a.split_once(";r=") {
        Some((p, r)) => (
            p.to_string(),
            Some(r.trim().parse().map_err(|_| bad(name, "r"))?),
        ),
        None => (a, None),
    };
    let mut parts = Vec::new();
    for p in parts_str.split('+') {
        let v: usize = p.trim().parse().map_err(|_| bad(name, "partition part"))?;
        parts.push(v);
    }
    Ok((parts, r))
}

type Entry = ((usize, usize), Vec<(usize, i64)>);

/// Builds an algebra from integer structure constants over any domain.
fn build(
    domain: &ScalarDomain,
    dim: usize,
    entries: Vec<Entry>,
    names: Option<Vec<&str>>,
    grading: Option<Grading>,
) -> Result<LieAlgebra, LieError> {
    let table: BracketTable = entries
        .into_iter()
        .map(|((i, j), ts)| {
            (
                (i, j),
                ts.into_iter()
                    .map(|(k, c)| (k, domain.from_i64(c)))
                    .collect(),
            )
        })
        .collect();
    LieAlgebra::new(
        domain.clone(),
        dim,
        table,
        names.map(|ns| ns.into_iter().map(|s| s.to_string()).collect()),
        grading,
    )
}

fn int_form(f: BaseField, n: usize, entries: &[(usize, usize, i64)]) -> BilinearForm {
    let es: Vec<(usize, usize, crate::scalars::K)> = entries
        .iter()
        .map(|(i, j, c)| (*i, *j, f.from_i64(*c)))
        .collect();
    BilinearForm::from_entries(f, n, &es)
}

fn grading_z(weights: Vec<i64>) -> Grading {
    Grading::new(1, vec![], weights.into_iter().map(|w| vec![w]).collect()).unwrap()
}

fn abelian_entry(domain: &ScalarDomain, n: usize) -> Result<CatalogEntry, CatalogError> {
    let algebra = build(domain, n, vec![], None, None)?;
    Ok(CatalogEntry {
        name: format!("abelian({n})"),
        algebra,
        form: None,
        gradings: vec![],
        expected: Expected {
            dim: n,
            nilpotency_length: Some(if n == 0 { 0 } else { 1 }),
            kill_dim: Some(n * (n + 1) / 2 * domain.rank()),
            eta_rank: Some(0),
        },
    })
}

fn heisenberg_entry(domain: &ScalarDomain, m: usize) -> Result<CatalogEntry, CatalogError> {
    if m < 3 || m.is_multiple_of(2) {
        return Err(bad("heisenberg", "dimension must be odd and >= 3"));
    }
    let k = (m - 1) / 2;
    let mut entries = Vec::new();
    for i in 0..k {
        entries.push(((i, k + i), vec![(2 * k, 1)]));
    }
    let mut weights = vec![1i64; 2 * k];
    weights.push(2);
    let grading = grading_z(weights);
    let algebra = build(domain, m, entries, None, Some(grading.clone()))?;
    let eta = match domain.base() {
        BaseField::Fp(3) => None,
        _ => Some(0), // 2-nilpotent, char != 3
    };
    Ok(CatalogEntry {
        name: format!("heisenberg({m})"),
        algebra,
        form: None,
        gradings: vec![("carnot".into(), grading)],
        expected: Expected {
            dim: m,
            nilpotency_length: Some(2),
            kill_dim: if m == 3 {
                Some(3 * domain.rank())
            } else {
                None
            },
            eta_rank: eta,
        },
    })
}

fn filiform_entry(domain: &ScalarDomain, n: usize) -> Result<CatalogEntry, CatalogError> {
    if n < 3 {
        return Err(bad("filiform", "dimension must be >= 3"));
    }
    let mut entries = Vec::new();
    for i in 1..(n - 1) {
        entries.push(((0, i), vec![(i + 1, 1)]));
    }
    let mut weights = vec![1i64];
    weights.extend((1..n).map(|i| i as i64));
    let grading = grading_z(weights);
    let algebra = build(domain, n, entries, None, Some(grading.clone()))?;
    Ok(CatalogEntry {
        name: format!("filiform({n})"),
        algebra,
        form: None,
        gradings: vec![("positive".into(), grading)],
        expected: Expected {
            dim: n,
            nilpotency_length: Some(n - 1),
            kill_dim: if n >= 5 { Some(3) } else { None },
            eta_rank: if domain.base() == BaseField::Q {
                Some(0)
            } else {
                None
            },
        },
    })
}

fn sl2_entry(domain: &ScalarDomain) -> Result<CatalogEntry, CatalogError> {
    let f = field_only(domain, "sl2")?;
    let grading = grading_z(vec![1, 0, -1]);
    let algebra = build(
        domain,
        3,
        vec![
            ((0, 1), vec![(0, -1)]),
            ((1, 2), vec![(2, -1)]),
            ((0, 2), vec![(1, 1)]),
        ],
        Some(vec!["e1", "e0", "em1"]),
        Some(grading.clone()),
    )?;
    let form = int_form(f, 3, &[(0, 2, 1), (1, 1, 1)]);
    Ok(CatalogEntry {
        name: "sl2".into(),
        algebra,
        form: Some(form),
        gradings: vec![("cartan".into(), grading)],
        expected: Expected {
            dim: 3,
            nilpotency_length: None,
            kill_dim: Some(1),
            eta_rank: Some(1),
        },
    })
}

fn oscillator4_entry(domain: &ScalarDomain) -> Result<CatalogEntry, CatalogError> {
    let f = field_only(domain, "oscillator4")?;
    let grading = grading_z(vec![0, 1, -1, 0]);
    let algebra = build(
        domain,
        4,
        vec![
            ((0, 1), vec![(1, 1)]),
            ((0, 2), vec![(2, -1)]),
            ((1, 2), vec![(3, 1)]),
        ],
        Some(vec!["e", "x", "y", "z"]),
        Some(grading.clone()),
    )?;
    let form = int_form(f, 4, &[(0, 3, 1), (1, 2, 1)]);
    Ok(CatalogEntry {
        name: "oscillator4".into(),
        algebra,
        form: Some(form),
        gradings: vec![("cartan".into(), grading)],
        expected: Expected {
            dim: 4,
            nilpotency_length: None,
            kill_dim: Some(2),
            eta_rank: if f == BaseField::Q { Some(0) } else { None },
        },
    })
}

fn w_entry(
    domain: &ScalarDomain,
    parts: &[usize],
    r_param: Option<usize>,
) -> Result<CatalogEntry, CatalogError> {
    let f = field_only(domain, "w(lambda)")?;
    if parts.is_empty() {
        return Err(bad("w", "empty partition"));
    }
    for &p in parts {
        if p == 0 || p % 4 == 2 {
            return Err(CatalogError::BadPartition(p));
        }
    }
    let odd: Vec<usize> = parts.iter().copied().filter(|p| p % 2 == 1).collect();
    let four: Vec<usize> = parts.iter().copied().filter(|p| p % 4 == 0).collect();
    // basis: x, e-blocks (odd parts), f-blocks (multiples of 4), z
    let mut names: Vec<String> = vec!["x".into()];
    let mut e_pos: Vec<Vec<usize>> = Vec::new();
    let mut pos = 1usize;
    for (i, &a) in odd.iter().enumerate() {
        let mut block = Vec::new();
        for j in 1..=a {
            names.push(format!("e{}{}", i + 1, j));
            block.push(pos);
            pos += 1;
        }
        e_pos.push(block);
    }
    let mut f_pos: Vec<Vec<usize>> = Vec::new();
    for (k, &b) in four.iter().enumerate() {
        let mut block = Vec::new();
        for l in 1..=b {
            names.push(format!("f{}{}", k + 1, l));
            block.push(pos);
            pos += 1;
        }
        f_pos.push(block);
    }
    let z = pos;
    names.push("z".into());
    let n = pos + 1;

    let mut entries: Vec<Entry> = Vec::new();
    for (i, &a) in odd.iter().enumerate() {
        for j in 1..a {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            entries.push(((0, e_pos[i][j - 1]), vec![(e_pos[i][j], sign)]));
        }
        for j in 1..a {
            if j < a - j {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                entries.push(((e_pos[i][j - 1], e_pos[i][a - j - 1]), vec![(z, sign)]));
            }
        }
    }
    for (k, &b) in four.iter().enumerate() {
        for l in 1..=(b - 2) {
            let sign = if l % 2 == 0 { 1 } else { -1 };
            entries.push(((0, f_pos[k][l - 1]), vec![(f_pos[k][l + 1], sign)]));
        }
        for l in 1..=(b - 2) {
            if l < b - 1 - l {
                let sign = if l % 2 == 0 { 1 } else { -1 };
                entries.push(((f_pos[k][l - 1], f_pos[k][b - 1 - l - 1]), vec![(z, sign)]));
            }
        }
    }

    let mut gradings: Vec<(String, Grading)> = Vec::new();
    let uniform = parts.iter().all(|&p| p == parts[0]);
    if uniform {
        let m = parts[0];
        let mut w = vec![1i64];
        if m % 2 == 1 {
            // e_{ij} has degree j, z degree m
            for _ in &e_pos {
                for j in 1..=m {
                    w.push(j as i64);
                }
            }
            w.push(m as i64);
        } else {
            // f_{kl} has degree ceil(l/2), z degree m/2
            for _ in &f_pos {
                for l in 1..=m {
                    w.push(l.div_ceil(2) as i64);
                }
            }
            w.push((m / 2) as i64);
        }
        gradings.push(("carnot".into(), grading_z(w)));
    }
    {
        // {0,1,2}: x in 0, all e/f in 1, z in 2
        let mut w = vec![0i64];
        w.extend(vec![1i64; n - 2]);
        w.push(2);
        gradings.push(("zero-one-two".into(), grading_z(w)));
    }
    {
        // positive grading with parameter r >= a_i - 1, r >= b_k/2 - 1, r >= 1
        let r_min = odd
            .iter()
            .map(|&a| a.saturating_sub(1))
            .chain(four.iter().map(|&b| b / 2 - 1))
            .chain(std::iter::once(1))
            .max()
            .unwrap();
        let r = r_param.unwrap_or(r_min);
        if r < r_min {
            return Err(CatalogError::BadParams(
                "w".into(),
                format!("r = {r} violates the bound r >= {r_min}"),
            ));
        }
        let mut w = vec![2i64];
        for &a in &odd {
            for j in 1..=a {
                w.push(r as i64 - a as i64 + 2 * j as i64);
            }
        }
        for &b in &four {
            for l in 1..=b {
                w.push(r as i64 - (b / 2) as i64 + 2 * l.div_ceil(2) as i64);
            }
        }
        w.push(2 * r as i64);
        gradings.push((format!("positive;r={r}"), grading_z(w)));
    }

    let attached = gradings[0].1.clone();
    let algebra = build(
        domain,
        n,
        entries,
        Some(names.iter().map(|s| s.as_str()).collect()),
        Some(attached),
    )?;
    let mut form_entries: Vec<(usize, usize, i64)> = vec![(0, z, 1)];
    for (i, &a) in odd.iter().enumerate() {
        for j in 1..=a {
            let p = e_pos[i][j - 1];
            let q = e_pos[i][a + 1 - j - 1];
            if p <= q {
                form_entries.push((p, q, 1));
            }
        }
    }
    for (k, &b) in four.iter().enumerate() {
        for l in 1..=b {
            let p = f_pos[k][l - 1];
            let q = f_pos[k][b + 1 - l - 1];
            if p <= q {
                form_entries.push((p, q, 1));
            }
        }
    }
    let form = int_form(f, n, &form_entries);
    let nilp = parts
        .iter()
        .map(|&p| if p % 2 == 1 { p } else { p / 2 })
        .max()
        .unwrap()
        .max(1);
    let parts_str: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
    let kill = match parts {
        [3] => Some(4),
        [4] => Some(7),
        [5] => Some(4),
        [3, 3] => Some(7),
        [7] => Some(4),
        [3, 4] => Some(11),
        _ => None,
    };
    Ok(CatalogEntry {
        name: format!("w({})", parts_str.join("+")),
        algebra,
        form: Some(form),
        gradings,
        expected: Expected {
            dim: n,
            nilpotency_length: Some(nilp),
            kill_dim: kill,
            eta_rank: if f == BaseField::Q { Some(0) } else { None },
        },
    })
}

fn bal(n: i64) -> i64 {
    let r = n.rem_euclid(3);
    if r == 2 {
        r - 3
    } else {
        r
    }
}

/// Shared builder for the `X(3k-1)` and `Y(3k)` quotients of the positive
/// part of the loop algebra of sl2: basis `T_lo..T_hi`, bracket coefficient
/// `bal(a) - bal(b)` with indices above `hi` killed, and the pairing
/// `<T_a, T_b> = (1 - 3|bal(a)|) delta_{a+b, pairing_sum}`.
fn ty_family(
    domain: &ScalarDomain,
    lo: usize,
    hi: usize,
    pairing_sum: usize,
) -> Result<(LieAlgebra, BilinearForm, Grading), CatalogError> {
    let f = field_only(domain, "X/Y family")?;
    let n = hi - lo + 1;
    let idx = |t: usize| t - lo;
    let mut entries: Vec<Entry> = Vec::new();
    for a in lo..=hi {
        for b in (a + 1)..=hi {
            let c = bal(a as i64) - bal(b as i64);
            if c != 0 && a + b <= hi {
                entries.push(((idx(a), idx(b)), vec![(idx(a + b), c)]));
            }
        }
    }
    let mut form_entries = Vec::new();
    for a in lo..=hi {
        if pairing_sum >= a {
            let b = pairing_sum - a;
            if (lo..=hi).contains(&b) && a <= b {
                form_entries.push((idx(a), idx(b), 1 - 3 * bal(a as i64).abs()));
            }
        }
    }
    // Carnot gradings: for X (lo = 1), T_{3i-2} and T_{3i-1} have degree
    // 2i-1 and T_{3i} degree 2i; for Y (lo = 2), X_{m,i} = T_{3m+i} has
    // degree m.
    let weights: Vec<i64> = (lo..=hi)
        .map(|a| {
            let a = a as i64;
            let level = (a - bal(a)) / 3;
            if lo == 1 {
                if bal(a) == 0 {
                    2 * level
                } else {
                    2 * ((a + 2) / 3) - 1
                }
            } else {
                level
            }
        })
        .collect();
    let grading = grading_z(weights);
    let names: Vec<String> = (lo..=hi).map(|a| format!("T{a}")).collect();
    let algebra = build(
        domain,
        n,
        entries,
        Some(names.iter().map(|s| s.as_str()).collect()),
        Some(grading.clone()),
    )?;
    let form = int_form(f, n, &form_entries);
    Ok((algebra, form, grading))
}

fn x_entry(domain: &ScalarDomain, m: usize) -> Result<CatalogEntry, CatalogError> {
    if m % 3 != 2 {
        return Err(bad("X", "argument must be 3k-1"));
    }
    let k = (m + 1) / 3;
    let (algebra, form, grading) = ty_family(domain, 1, m, 3 * k)?;
    Ok(CatalogEntry {
        name: format!("X({m})"),
        algebra,
        form: Some(form),
        gradings: vec![("carnot".into(), grading)],
        expected: Expected {
            dim: m,
            nilpotency_length: Some(2 * k - 1),
            kill_dim: if m == 8 { Some(5) } else { None },
            eta_rank: if domain.base() == BaseField::Q {
                Some(0)
            } else {
                None
            },
        },
    })
}

fn y_entry(domain: &ScalarDomain, m: usize) -> Result<CatalogEntry, CatalogError> {
    if !m.is_multiple_of(3) || m == 0 {
        return Err(bad("Y", "argument must be 3k"));
    }
    let k = m / 3;
    let (algebra, form, grading) = ty_family(domain, 2, 3 * k + 1, 3 * k + 3)?;
    Ok(CatalogEntry {
        name: format!("Y({m})"),
        algebra,
        form: Some(form),
        gradings: vec![("carnot".into(), grading)],
        expected: Expected {
            dim: m,
            nilpotency_length: Some(k),
            kill_dim: if m == 9 { Some(8) } else { None },
            eta_rank: if domain.base() == BaseField::Q {
                Some(0)
            } else {
                None
            },
        },
    })
}

fn kath9_entry(domain: &ScalarDomain) -> Result<CatalogEntry, CatalogError> {
    let f = field_only(domain, "kath9_4c")?;
    let coeffs: [(usize, usize, i64); 9] = [
        (1, 2, -1),
        (2, 3, 1),
        (1, 3, 1),
        (1, 6, -1),
        (3, 6, 1),
        (2, 5, -1),
        (3, 5, 1),
        (2, 7, -1),
        (1, 7, 1),
    ];
    let entries: Vec<Entry> = coeffs
        .iter()
        .map(|&(i, j, c)| ((i - 1, j - 1), vec![(i + j - 1, c)]))
        .collect();
    let indices = grading_z((1..=9).map(|i| i as i64).collect());
    let one_to_five = grading_z(vec![1, 1, 2, 3, 3, 3, 4, 5, 5]);
    let zero_one_two = grading_z(vec![1, 0, 1, 2, 1, 0, 1, 2, 1]);
    let names: Vec<String> = (1..=9).map(|i| format!("X{i}")).collect();
    let algebra = build(
        domain,
        9,
        entries,
        Some(names.iter().map(|s| s.as_str()).collect()),
        Some(indices.clone()),
    )?;
    let mut form_entries = Vec::new();
    for i in 1..=9usize {
        let j = 10 - i;
        if i <= j {
            form_entries.push((i - 1, j - 1, 1));
        }
    }
    Ok(CatalogEntry {
        name: "kath9_4c".into(),
        algebra,
        form: Some(int_form(f, 9, &form_entries)),
        gradings: vec![
            ("indices".into(), indices),
            ("one-to-five".into(), one_to_five),
            ("zero-one-two".into(), zero_one_two),
        ],
        expected: Expected {
            dim: 9,
            nilpotency_length: Some(5),
            kill_dim: Some(8),
            eta_rank: if f == BaseField::Q { Some(0) } else { None },
        },
    })
}

/// The section-5.3 presentation of `w(7)` on the basis `(Y_i)`,
/// `i in {1, 3, 4, ..., 9, 11}`, optionally with the twisting brackets
/// `[Y3,Y4] = Y7`, `[Y3,Y5] = -Y8`, `[Y4,Y5] = Y9`.
pub fn w7_sec53(domain: &ScalarDomain, twisted: bool) -> Result<LieAlgebra, CatalogError> {
    field_only(domain, "w7")?;
    let labels: [usize; 9] = [1, 3, 4, 5, 6, 7, 8, 9, 11];
    let idx = |v: usize| labels.iter().position(|&x| x == v).unwrap();
    let mut entries: Vec<Entry> = Vec::new();
    for i in 3..=8usize {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        entries.push(((idx(1), idx(i)), vec![(idx(i + 1), sign)]));
    }
    for i in 3..=8usize {
        if i < 11 - i {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            entries.push(((idx(i), idx(11 - i)), vec![(idx(11), sign)]));
        }
    }
    if twisted {
        entries.push(((idx(3), idx(4)), vec![(idx(7), 1)]));
        entries.push(((idx(3), idx(5)), vec![(idx(8), -1)]));
        entries.push(((idx(4), idx(5)), vec![(idx(9), 1)]));
    }
    let grading = grading_z(labels.iter().map(|&v| v as i64).collect());
    let names: Vec<String> = labels.iter().map(|v| format!("Y{v}")).collect();
    Ok(build(
        domain,
        9,
        entries,
        Some(names.iter().map(|s| s.as_str()).collect()),
        Some(grading),
    )?)
}

fn w7_sec53_entry(domain: &ScalarDomain, twisted: bool) -> Result<CatalogEntry, CatalogError> {
    let f = field_only(domain, "w7_twisted")?;
    let algebra = w7_sec53(domain, twisted)?;
    let labels: [usize; 9] = [1, 3, 4, 5, 6, 7, 8, 9, 11];
    let idx = |v: usize| labels.iter().position(|&x| x == v).unwrap();
    let mut form_entries = Vec::new();
    for &p in &labels {
        let q = 12 - p;
        if labels.contains(&q) && p <= q {
            form_entries.push((idx(p), idx(q), 1));
        }
    }
    let grading = algebra.grading.clone().unwrap();
    Ok(CatalogEntry {
        name: if twisted { "w7_twisted" } else { "w7_sec53" }.into(),
        algebra,
        form: Some(int_form(f, 9, &form_entries)),
        gradings: vec![("indices".into(), grading)],
        expected: Expected {
            dim: 9,
            nilpotency_length: Some(7),
            kill_dim: Some(4),
            eta_rank: if f == BaseField::Q { Some(0) } else { None },
        },
    })
}

/// The 12-dimensional 7-nilpotent algebra with nonzero reduced Koszul map,
/// on the printed basis `(E3, E9, Y1, Y4..Y8, Y11, Z3, Z6, Z9)`.
fn g12_entry(domain: &ScalarDomain) -> Result<CatalogEntry, CatalogError> {
    let f = field_only(domain, "g12")?;
    let names = [
        "E3", "E9", "Y1", "Y4", "Y5", "Y6", "Y7", "Y8", "Y11", "Z3", "Z6", "Z9",
    ];
    let (e3, e9, y1, y4, y5, y6, y7, y8, y11, z3, z6, z9) = (0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11);
    let entries: Vec<Entry> = vec![
        // the w(5) part
        ((y1, y4), vec![(y5, 1)]),
        ((y1, y5), vec![(y6, -1)]),
        ((y1, y6), vec![(y7, 1)]),
        ((y1, y7), vec![(y8, -1)]),
        ((y4, y7), vec![(y11, 1)]),
        ((y5, y6), vec![(y11, -1)]),
        // the action of E3 (the derivation D)
        ((e3, y1), vec![(y4, 1)]),
        ((e3, y4), vec![(y7, 1), (z3, 1)]),
        ((e3, y5), vec![(y8, -1)]),
        ((e3, y8), vec![(y11, -1)]),
        ((e3, z3), vec![(z6, 1)]),
        ((e3, z6), vec![(z9, -1)]),
        ((e3, z9), vec![(y8, -1)]),
        // central E9 terms
        ((y1, y8), vec![(e9, 1)]),
        ((y4, y5), vec![(e9, 1)]),
        ((z3, z6), vec![(e9, 1)]),
        ((y4, z9), vec![(e9, 1)]),
    ];
    // Z/4 grading by the basis indices
    let weights: Vec<Vec<i64>> = [3, 9, 1, 4, 5, 6, 7, 8, 11, 3, 6, 9]
        .iter()
        .map(|&v: &i64| vec![v % 4])
        .collect();
    let grading = Grading::new(0, vec![4], weights).unwrap();
    let algebra = build(
        domain,
        12,
        entries,
        Some(names.to_vec()),
        Some(grading.clone()),
    )?;
    let form_entries = [
        (e3, e9, 1),
        (y1, y11, 1),
        (y4, y8, 1),
        (y5, y7, 1),
        (y6, y6, 1),
        (z3, z9, 1),
        (z6, z6, 1),
    ];
    Ok(CatalogEntry {
        name: "g12".into(),
        algebra,
        form: Some(int_form(f, 12, &form_entries)),
        gradings: vec![("z4-indices".into(), grading)],
        expected: Expected {
            dim: 12,
            nilpotency_length: Some(7),
            kill_dim: Some(5),
            eta_rank: Some(1),
        },
    })
}

fn solvable9_entry(domain: &ScalarDomain) -> Result<CatalogEntry, CatalogError> {
    let f = field_only(domain, "solvable9")?;
    let names = ["x", "y", "z", "yp", "xp", "u1", "um1", "v1", "vm1"];
    let (x, y, z, yp, xp, u1, um1, v1, vm1) = (0, 1, 2, 3, 4, 5, 6, 7, 8);
    let entries: Vec<Entry> = vec![
        ((x, y), vec![(z, 1)]),
        ((x, z), vec![(yp, -1)]), // [z, x] = y'
        ((y, z), vec![(xp, 1)]),
        ((x, u1), vec![(u1, 1)]),
        ((x, um1), vec![(um1, -1)]),
        ((y, v1), vec![(v1, 1)]),
        ((y, vm1), vec![(vm1, -1)]),
        ((u1, um1), vec![(xp, 1)]),
        ((v1, vm1), vec![(yp, 1)]),
    ];
    let mut weights = vec![vec![0i64, 0]; 5];
    weights.push(vec![1, 0]);
    weights.push(vec![-1, 0]);
    weights.push(vec![0, 1]);
    weights.push(vec![0, -1]);
    let grading = Grading::new(2, vec![], weights).unwrap();
    let algebra = build(
        domain,
        9,
        entries,
        Some(names.to_vec()),
        Some(grading.clone()),
    )?;
    let form_entries = [
        (x, xp, 1),
        (y, yp, 1),
        (z, z, 1),
        (u1, um1, 1),
        (v1, vm1, 1),
    ];
    Ok(CatalogEntry {
        name: "solvable9".into(),
        algebra,
        form: Some(int_form(f, 9, &form_entries)),
        gradings: vec![("cartan-z2".into(), grading)],
        expected: Expected {
            dim: 9,
            nilpotency_length: None,
            kill_dim: Some(4),
            eta_rank: Some(1),
        },
    })
}

/// The alternating "octonion product" table on `(e_i)_{-3 <= i <= 3}`:
/// `((i, j), (k, c))` means `f(e_i, e_j) = c e_k`, listed for `i < j`.
const OCTONION: [((i64, i64), (i64, i64)); 15] = [
    ((-3, 0), (-3, -1)),
    ((-3, 1), (-2, 1)),
    ((-3, 2), (-1, -1)),
    ((-3, 3), (0, 1)),
    ((-2, -1), (-3, -1)),
    ((-2, 0), (-2, 1)),
    ((-2, 2), (0, -1)),
    ((-2, 3), (1, 1)),
    ((-1, 0), (-1, 1)),
    ((-1, 1), (0, -1)),
    ((-1, 3), (2, -1)),
    ((0, 1), (1, 1)),
    ((0, 2), (2, 1)),
    ((0, 3), (3, -1)),
    ((1, 2), (3, 1)),
];

fn char3_entry(domain: &ScalarDomain) -> Result<CatalogEntry, CatalogError> {
    let f = field_only(domain, "char3_octonion")?;
    // g(V, V, f): E_{-3..3} at 0..6, F_{-3..3} at 7..13
    let e = |i: i64| (i + 3) as usize;
    let fv = |i: i64| (i + 3) as usize + 7;
    let entries: Vec<Entry> = OCTONION
        .iter()
        .map(|&((i, j), (k, c))| ((e(i), e(j)), vec![(fv(k), c)]))
        .collect();
    let mut weights: Vec<Vec<i64>> = (-3..=3).map(|i| vec![i, 1]).collect();
    weights.extend((-3..=3).map(|i| vec![i, 2]));
    let grading = Grading::new(2, vec![], weights).unwrap();
    let mut names: Vec<String> = (-3..=3).map(|i| format!("E{i}")).collect();
    names.extend((-3..=3).map(|i| format!("F{i}")));
    let algebra = build(
        domain,
        14,
        entries,
        Some(names.iter().map(|s| s.as_str()).collect()),
        Some(grading.clone()),
    )?;
    let mut form_entries = Vec::new();
    for i in -3..=3i64 {
        let (a, b) = (e(i), fv(-i));
        form_entries.push((a.min(b), a.max(b), 1));
    }
    let eta = match f {
        BaseField::Fp(3) => Some(1),
        BaseField::Q => Some(0),
        _ => None,
    };
    Ok(CatalogEntry {
        name: "char3_octonion".into(),
        algebra,
        form: Some(int_form(f, 14, &form_entries)),
        gradings: vec![("index-layer".into(), grading)],
        expected: Expected {
            dim: 14,
            nilpotency_length: Some(2),
            kill_dim: Some(29),
            eta_rank: eta,
        },
    })
}

fn nonreduced_entry(domain: &ScalarDomain) -> Result<CatalogEntry, CatalogError> {
    let Some(alg) = domain.as_algebra() else {
        return Err(CatalogError::CharacteristicMismatch(
            "nonreduced_rank3 requires a non-reduced coefficient ring".into(),
        ));
    };
    let f = alg.base;
    let eps_idx = (0..alg.dim)
        .find(|&s| alg.basis_product(s, s).iter().all(|c| f.is_zero(c)))
        .ok_or_else(|| {
            CatalogError::CharacteristicMismatch(
                "the coefficient ring has no square-zero basis vector".into(),
            )
        })?;
    let mut eps = domain.zero();
    eps[eps_idx] = f.one();
    // [e_i, e_{i+1}] = eps e_{i+2}, indices mod 3
    let table: BracketTable = vec![
        ((0, 1), vec![(2, eps.clone())]),
        ((1, 2), vec![(0, eps.clone())]),
        ((0, 2), vec![(1, domain.neg(&eps))]),
    ];
    // (Z/2)^3 grading: e_i has weight w_{i+1} + w_{i+2}
    let weights = vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]];
    let grading = Grading::new(0, vec![2, 2, 2], weights).unwrap();
    let algebra = LieAlgebra::new(
        domain.clone(),
        3,
        table,
        Some(vec!["e1".into(), "e2".into(), "e3".into()]),
        Some(grading.clone()),
    )?;
    Ok(CatalogEntry {
        name: "nonreduced_rank3".into(),
        algebra,
        form: None,
        gradings: vec![("z2cubed".into(), grading)],
        expected: Expected {
            dim: 3,
            nilpotency_length: Some(2),
            kill_dim: None,
            eta_rank: None,
        },
    })
}

fn coadjoint_sl2_entry(domain: &ScalarDomain) -> Result<CatalogEntry, CatalogError> {
    let f = field_only(domain, "coadjoint(sl2)")?;
    let sl2 = sl2_entry(domain)?.algebra;
    let algebra = coadjoint_double(&sl2)?;
    // duality form <e_i, e_i*> = 1
    let form_entries: Vec<(usize, usize, i64)> = (0..3).map(|i| (i, 3 + i, 1)).collect();
    let grading = algebra.grading.clone().unwrap();
    Ok(CatalogEntry {
        name: "coadjoint(sl2)".into(),
        algebra,
        form: Some(int_form(f, 6, &form_entries)),
        gradings: vec![("zero-one".into(), grading)],
        expected: Expected {
            dim: 6,
            nilpotency_length: None,
            kill_dim: Some(2),
            eta_rank: Some(1),
        },
    })
}

fn two_nilpotent_random_entry(
    domain: &ScalarDomain,
    seed: u64,
    v: usize,
    w: usize,
) -> Result<CatalogEntry, CatalogError> {
    field_only(domain, "two_nilpotent_random")?;
    let algebra = two_nilpotent_random(domain, seed, v, w)?;
    let eta = match domain.base() {
        BaseField::Fp(3) => None,
        _ => Some(0),
    };
    Ok(CatalogEntry {
        name: format!("two_nilpotent_random({seed},{v},{w})"),
        algebra,
        form: None,
        gradings: vec![],
        expected: Expected {
            dim: v + w,
            nilpotency_length: None,
            kill_dim: None,
            eta_rank: eta,
        },
    })
}

/// A seeded random 2-nilpotent algebra: `V + W` with `[V, V] <= W` central,
/// graded in `{1, 2}`.
pub fn two_nilpotent_random(
    domain: &ScalarDomain,
    seed: u64,
    v: usize,
    w: usize,
) -> Result<LieAlgebra, CatalogError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut entries: BracketTable = Vec::new();
    for i in 0..v {
        for j in (i + 1)..v {
            let mut terms = Vec::new();
            for k in 0..w {
                let c: i64 = rng.gen_range(-2..=2);
                if c != 0 {
                    terms.push((v + k, domain.from_i64(c)));
                }
            }
            if !terms.is_empty() {
                entries.push(((i, j), terms));
            }
        }
    }
    let mut weights = vec![vec![1i64]; v];
    weights.extend(vec![vec![2i64]; w]);
    let grading = Grading::new(1, vec![], weights).unwrap();
    Ok(LieAlgebra::new(
        domain.clone(),
        v + w,
        entries,
        None,
        Some(grading),
    )?)
}

/// A seeded random metabelian algebra: an abelian `V` acting on an abelian
/// ideal `W` by commuting operators (polynomials in one strictly
/// upper-triangular matrix).
pub fn metabelian_random(
    domain: &ScalarDomain,
    seed: u64,
    v: usize,
    w: usize,
) -> Result<LieAlgebra, CatalogError> {
    field_only(domain, "metabelian_random")?;
    let f = domain.base();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut nmat = Mat::zeros(f, w, w);
    for i in 0..w {
        for j in (i + 1)..w {
            nmat.set(i, j, f.from_i64(rng.gen_range(-2..=2)));
        }
    }
    let n2 = nmat.mul(&nmat);
    let n3 = n2.mul(&nmat);
    let pows = [&nmat, &n2, &n3];
    let mut entries: BracketTable = Vec::new();
    for t in 0..v {
        let cs: Vec<i64> = (0..3).map(|_| rng.gen_range(-2..=2)).collect();
        let mut m = Mat::zeros(f, w, w);
        for (p, &c) in cs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let cf = f.from_i64(c);
            for i in 0..w {
                for j in 0..w {
                    let val = f.add(m.at(i, j), &f.mul(&cf, pows[p].at(i, j)));
                    m.set(i, j, val);
                }
            }
        }
        // [v_t, w_j] = sum_i m[i][j] w_i
        for j in 0..w {
            let mut terms = Vec::new();
            for i in 0..w {
                if !f.is_zero(m.at(i, j)) {
                    terms.push((v + i, vec![m.at(i, j).clone()]));
                }
            }
            if !terms.is_empty() {
                entries.push(((t, v + j), terms));
            }
        }
    }
    Ok(LieAlgebra::new(domain.clone(), v + w, entries, None, None)?)
}

/// The 2-dimensional non-abelian Lie algebra `[e, x] = x`, graded in `{0, 1}`.
pub fn two_dim_nonabelian(domain: &ScalarDomain) -> Result<LieAlgebra, CatalogError> {
    field_only(domain, "two_dim_nonabelian")?;
    Ok(build(
        domain,
        2,
        vec![((0, 1), vec![(1, 1)])],
        Some(vec!["e", "x"]),
        Some(grading_z(vec![0, 1])),
    )?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{series, EngelVerdict, SeriesKind};

    fn q() -> ScalarDomain {
        ScalarDomain::rationals()
    }

    #[test]
    fn name_parsing_and_errors() {
        assert!(matches!(
            catalog_make("nosuch", &q()),
            Err(CatalogError::UnknownName(_))
        ));
        assert!(matches!(
            catalog_make("w(2)", &q()),
            Err(CatalogError::BadPartition(2))
        ));
        assert!(matches!(
            catalog_make("w(6)", &q()),
            Err(CatalogError::BadPartition(6))
        ));
        assert!(matches!(
            catalog_make("nonreduced_rank3", &q()),
            Err(CatalogError::CharacteristicMismatch(_))
        ));
    }

    #[test]
    fn dims_and_nilpotency() {
        for (name, dim, nilp) in [
            ("w(3)", 5, Some(3)),
            ("w(4)", 6, Some(2)),
            ("w(5)", 7, Some(5)),
            ("w(3+3)", 8, Some(3)),
            ("w(7)", 9, Some(7)),
            ("w(3+4)", 9, Some(3)),
            ("X(8)", 8, Some(5)),
            ("Y(9)", 9, Some(3)),
            ("kath9_4c", 9, Some(5)),
            ("w7_twisted", 9, Some(7)),
            ("g12", 12, Some(7)),
            ("heisenberg(5)", 5, Some(2)),
            ("filiform(6)", 6, Some(5)),
        ] {
            let e = catalog_make(name, &q()).unwrap();
            assert_eq!(e.algebra.dim, dim, "{name}");
            let s = series(&e.algebra, SeriesKind::LowerCentral);
            assert_eq!(s.nilpotency_length, nilp, "{name}");
            assert_eq!(e.expected.dim, dim);
        }
    }

    #[test]
    fn g12_sign_flip_breaks_jacobi() {
        // flipping the sign of [E3, Z9] must produce a Jacobi failure
        let e = catalog_make("g12", &q()).unwrap();
        let g = &e.algebra;
        let names = g.names.clone().unwrap();
        let mut table: BracketTable = Vec::new();
        for i in 0..12 {
            for j in (i + 1)..12 {
                let mut terms: Vec<(usize, Vec<crate::scalars::K>)> =
                    g.bracket_terms(i, j).map(|(k, c)| (k, c.clone())).collect();
                let (e3, z9) = (0usize, 11usize);
                if (i, j) == (e3, z9) {
                    terms = terms
                        .into_iter()
                        .map(|(k, c)| (k, g.domain.neg(&c)))
                        .collect();
                }
                if !terms.is_empty() {
                    table.push(((i, j), terms));
                }
            }
        }
        let bad = LieAlgebra::new(q(), 12, table, Some(names), None);
        assert!(matches!(bad, Err(LieError::JacobiFails(_, _, _))));
    }

    #[test]
    fn solvable9_structure() {
        let e = catalog_make("solvable9", &q()).unwrap();
        let der = series(&e.algebra, SeriesKind::Derived);
        assert_eq!(der.dims, vec![9, 7, 2, 0]);
        assert_eq!(der.solvability_length, Some(3));
        let lcs = series(&e.algebra, SeriesKind::LowerCentral);
        assert!(!lcs.nilpotent);
        // center-by-metabelian: D^2 g is central
        let d2 = &der.bases[2];
        let f = e.algebra.base();
        for i in 0..9 {
            let mut ei = vec![f.zero(); 9];
            ei[i] = f.one();
            for r in 0..d2.rows {
                let b = crate::lie::bracket_k(&e.algebra, &ei, d2.row(r));
                assert!(b.iter().all(|x| f.is_zero(x)));
            }
        }
    }

    #[test]
    fn w7_twisted_versus_w7() {
        let tw = catalog_make("w7_twisted", &q()).unwrap();
        let plain = w7_sec53(&q(), false).unwrap();
        let d_tw = series(&tw.algebra, SeriesKind::Derived);
        let d_pl = series(&plain, SeriesKind::Derived);
        assert_eq!(d_tw.dims[2], 2);
        assert_eq!(d_pl.dims[2], 1);
    }

    #[test]
    fn forms_are_invariant_and_nondegenerate() {
        for name in [
            "sl2",
            "oscillator4",
            "w(3)",
            "w(4)",
            "w(5)",
            "w(3+3)",
            "w(7)",
            "w(3+4)",
            "X(8)",
            "Y(9)",
            "kath9_4c",
            "w7_twisted",
            "g12",
            "solvable9",
            "coadjoint(sl2)",
        ] {
            let e = catalog_make(name, &q()).unwrap();
            let form = e.form.expect(name);
            assert!(form.is_symmetric(), "{name}");
            assert!(form.is_invariant(&e.algebra), "{name}");
            assert!(form.is_nondegenerate(), "{name}");
        }
        let f3 = ScalarDomain::prime_field(3).unwrap();
        let e = catalog_make("char3_octonion", &f3).unwrap();
        let form = e.form.unwrap();
        assert!(form.is_invariant(&e.algebra));
        assert!(form.is_nondegenerate());
    }

    #[test]
    fn alternative_gradings_are_compatible() {
        for name in ["w(3+4)", "kath9_4c", "w(4)", "X(8)", "Y(9)", "w(3+3)"] {
            let e = catalog_make(name, &q()).unwrap();
            assert!(!e.gradings.is_empty(), "{name}");
            for (gname, gr) in &e.gradings {
                let res = e.algebra.clone().with_grading(Some(gr.clone()));
                assert!(res.is_ok(), "{name} grading {gname}");
            }
        }
    }

    #[test]
    fn g12_is_characteristically_nilpotent() {
        let e = catalog_make("g12", &q()).unwrap();
        let ders = crate::lie::derivation_algebra(&e.algebra).unwrap();
        assert_eq!(ders.len(), 18);
        assert_eq!(
            crate::lie::all_derivations_nilpotent(&e.algebra).unwrap(),
            EngelVerdict::AllNilpotent
        );
    }

    #[test]
    fn nonreduced_rank3_over_dual_numbers() {
        let d = ScalarDomain::truncated_polynomial(BaseField::Q, 2).unwrap();
        let e = catalog_make("nonreduced_rank3", &d).unwrap();
        assert_eq!(e.algebra.dim, 3);
        let s = series(&e.algebra, SeriesKind::LowerCentral);
        assert_eq!(s.nilpotency_length, Some(2));
    }

    #[test]
    fn seeded_families_are_valid() {
        for seed in 0..3 {
            let g = two_nilpotent_random(&q(), seed, 4, 3).unwrap();
            assert_eq!(g.dim, 7);
            let m = metabelian_random(&q(), seed, 3, 4).unwrap();
            let der = series(&m, SeriesKind::Derived);
            // metabelian: second derived term vanishes
            assert_eq!(der.dims.get(2).copied().unwrap_or(0), 0);
        }
    }

    #[test]
    fn w3_times_abelian1_is_non_essential_6dim() {
        let w3 = catalog_make("w(3)", &q()).unwrap().algebra;
        let a1 = catalog_make("abelian(1)", &q()).unwrap().algebra;
        let w3 = w3.with_grading(None).unwrap();
        let a1 = a1.with_grading(None).unwrap();
        let p = crate::lie::direct_product(&w3, &a1).unwrap();
        assert_eq!(p.dim, 6);
        let s = series(&p, SeriesKind::LowerCentral);
        assert_eq!(s.nilpotency_length, Some(3));
    }
}
