//! The `verify-paper` suite: re-derives every quantitative claim the toolkit
//! is built around, organized in tagged sections. Any mismatch is a hard
//! failure (exit code 1 from the CLI).

use crate::liefile::{emit_lie, file_from_algebra, parse_lie};
use lieko::catalog::{catalog_make, metabelian_random, two_dim_nonabelian, two_nilpotent_random};
use lieko::current::{
    algebra_homology, candeco_check, h2_graded_report, nw_boundary_decomposition,
};
use lieko::homology::{
    apply_boundary, betti_numbers, boundary_matrix, homology_class_nonzero, subset_rank,
    weights_in_degree, Chain,
};
use lieko::koszul::{
    eta_on_chain, eta_sym_representative, form_eta_pairing, invariant_forms, killing_module,
    quadrable_probe, quotient_by_form_kernel, reduced_koszul, sym_rank, Quadrable,
};
use lieko::lie::{
    all_derivations_nilpotent, direct_product, quotient_by_ideal, series, BilinearForm,
    EngelVerdict, LieAlgebra, SeriesKind,
};
use lieko::linalg::{restrict_scalars, restrict_vector, Mat, Quotient};
use lieko::scalars::{BaseField, CommAlgebra, ScalarDomain, K};

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct Section {
    pub tag: &'static str,
    pub title: &'static str,
    pub checks: Vec<Check>,
}

impl Section {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

pub const ALL_TAGS: [&str; 9] = [
    "sec6",
    "sec7",
    "char3",
    "nonredu",
    "vanishing",
    "structural",
    "appa",
    "appb",
    "roundtrip",
];

pub fn run_sections(only: Option<&str>) -> Result<Vec<Section>, String> {
    let tags: Vec<&str> = match only {
        Some(t) => {
            if !ALL_TAGS.contains(&t) {
                return Err(format!(
                    "unknown section tag {t}; available: {}",
                    ALL_TAGS.join(", ")
                ));
            }
            vec![t]
        }
        None => ALL_TAGS.to_vec(),
    };
    Ok(tags.into_iter().map(run_section).collect())
}

pub fn run_section(tag: &str) -> Section {
    match tag {
        "sec6" => sec6(),
        "sec7" => sec7(),
        "char3" => char3(),
        "nonredu" => nonredu(),
        "vanishing" => vanishing(),
        "structural" => structural(),
        "appa" => appa(),
        "appb" => appb(),
        "roundtrip" => roundtrip(),
        _ => unreachable!("tag validated by run_sections"),
    }
}

struct Ctx {
    checks: Vec<Check>,
}

impl Ctx {
    fn new() -> Self {
        Ctx { checks: Vec::new() }
    }
    fn chk(&mut self, name: &str, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            pass,
            detail: detail.into(),
        });
    }
    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, name: &str, got: T, want: T) {
        let pass = got == want;
        self.chk(name, pass, format!("got {got:?}, expected {want:?}"));
    }
}

fn q() -> ScalarDomain {
    ScalarDomain::rationals()
}

fn chain_by_names(g: &LieAlgebra, degree: usize, words: &[(i64, &[&str])]) -> Chain {
    let ws: Vec<(i64, Vec<usize>)> = words
        .iter()
        .map(|(c, names)| {
            (
                *c,
                names
                    .iter()
                    .map(|n| g.index_of(n).expect("basis name"))
                    .collect(),
            )
        })
        .collect();
    Chain::from_int_words(g, degree, &ws)
}

// ----------------------------------------------------------------------
// The 12-dimensional algebra (tag sec6)
// ----------------------------------------------------------------------

const PRINTED_MATRIX: [[i64; 8]; 7] = [
    [1, 1, 1, 0, 1, 0, 0, 0],
    [1, 0, 0, 1, 0, 1, 0, 0],
    [-1, 1, 1, 1, 0, 0, 0, 0],
    [0, 1, 0, -1, 0, 1, 0, 0],
    [0, 0, -1, 0, 1, 0, 0, 0],
    [0, -1, 0, 0, 0, 0, 1, 0],
    [0, 0, 1, 0, 0, 0, 0, 1],
];

const G12_CHAINS: [[&str; 3]; 8] = [
    ["E3", "Y1", "Y8"],
    ["E3", "Y4", "Y5"],
    ["E3", "Y4", "Z9"],
    ["Y1", "Y4", "Y7"],
    ["E3", "Z3", "Z6"],
    ["Y1", "Y6", "Y5"],
    ["Y1", "Y4", "Z3"],
    ["E3", "Z6", "Y7"],
];

const G12_KERNEL: [i64; 8] = [2, 4, -3, 1, -3, -3, 4, 3];

/// The 2-chain list `B = (e3, y1, y4, y5, z3, Z3^Y5, Z9^Y7)` as signed wedge
/// pairs in the printed order.
const G12_TWO_CHAINS: [[&str; 2]; 7] = [
    ["E3", "E9"],
    ["Y1", "Y11"],
    ["Y4", "Y8"],
    ["Y5", "Y7"],
    ["Z3", "Z9"],
    ["Z3", "Y5"],
    ["Z9", "Y7"],
];

fn sec6() -> Section {
    let mut checks = sec6_matrix().checks;
    checks.extend(sec6_koszul().checks);
    checks.extend(sec6_betti().checks);
    Section {
        tag: "sec6",
        title: "12-dimensional algebra: boundary matrix, Koszul nonvanishing, Betti numbers",
        checks,
    }
}

/// Criterion 1: the printed 7x8 boundary matrix and its kernel vector.
pub fn sec6_matrix() -> Section {
    let mut c = Ctx::new();
    let entry = catalog_make("g12", &q()).expect("g12");
    let g = &entry.algebra;
    let f = g.base();

    let pair_index: Vec<(usize, i64)> = G12_TWO_CHAINS
        .iter()
        .map(|[a, b]| {
            let (ia, ib) = (g.index_of(a).unwrap(), g.index_of(b).unwrap());
            let (lo, hi, sign) = if ia < ib { (ia, ib, 1) } else { (ib, ia, -1) };
            (subset_rank(12, &[lo, hi]), sign)
        })
        .collect();
    let mut matrix_ok = true;
    let mut support_ok = true;
    let mut computed: Vec<Vec<String>> = Vec::new();
    for (col, names) in G12_CHAINS.iter().enumerate() {
        let ch = chain_by_names(g, 3, &[(1, names.as_slice())]);
        let img = apply_boundary(g, &ch).unwrap();
        // support must lie within the printed 2-chain list
        let allowed: Vec<usize> = pair_index.iter().map(|(i, _)| *i).collect();
        for (i, coeff) in img.coeffs.iter().enumerate() {
            if !g.domain.is_zero(coeff) && !allowed.contains(&i) {
                support_ok = false;
            }
        }
        let mut column = Vec::new();
        for (row, &(idx, sign)) in pair_index.iter().enumerate() {
            let val = f.mul(&img.coeffs[idx][0], &f.from_i64(sign));
            let want = f.from_i64(PRINTED_MATRIX[row][col]);
            if val != want {
                matrix_ok = false;
            }
            column.push(f.format(&val));
        }
        computed.push(column);
    }
    c.chk(
        "d3(c_1..c_8) supported in the printed 2-chain list",
        support_ok,
        "",
    );
    c.chk(
        "7x8 boundary matrix matches entry-for-entry",
        matrix_ok,
        format!("computed columns {computed:?}"),
    );
    let printed = Mat::from_rows(
        f,
        PRINTED_MATRIX
            .iter()
            .map(|r| r.iter().map(|&x| f.from_i64(x)).collect())
            .collect(),
    );
    let kv: Vec<K> = G12_KERNEL.iter().map(|&x| f.from_i64(x)).collect();
    c.chk(
        "(2,4,-3,1,-3,-3,4,3) lies in the kernel",
        printed.apply(&kv).iter().all(|x| f.is_zero(x)),
        "",
    );
    Section {
        tag: "sec6",
        title: "printed boundary matrix and kernel vector",
        checks: c.checks,
    }
}

/// Criterion 2: Koszul nonvanishing and the structure facts of the
/// 12-dimensional algebra.
pub fn sec6_koszul() -> Section {
    let mut c = Ctx::new();
    let entry = catalog_make("g12", &q()).expect("g12");
    let g = &entry.algebra;
    let form = entry.form.clone().expect("g12 form");
    let f = g.base();
    let words: Vec<(i64, &[&str])> = G12_KERNEL
        .iter()
        .zip(G12_CHAINS.iter())
        .map(|(&k, names)| (k, names.as_slice()))
        .collect();
    let cch = chain_by_names(g, 3, &words);
    let bd = apply_boundary(g, &cch).unwrap();
    c.chk("d3(c) = 0", bd.is_zero(g), "");
    let pairing = form_eta_pairing(g, &form, &cch).unwrap();
    c.eq("J(c) = -2", f.format(&pairing), "-2".to_string());
    let kill = killing_module(g, None).unwrap();
    c.eq("dim Kill(g12) = 5", kill.dim, 5);
    let (_, rank) = reduced_koszul(g, &kill, None).unwrap();
    c.eq("reduced Koszul rank = 1", rank, 1);
    let cls = eta_on_chain(g, &kill, &cch);
    c.chk("eta(c) != 0 in Kill", cls.iter().any(|x| !f.is_zero(x)), "");
    let s = series(g, SeriesKind::LowerCentral);
    c.eq("g12 is 7-nilpotent", s.nilpotency_length, Some(7));
    c.chk(
        "Z/4 grading is bracket-compatible",
        g.grading.is_some()
            && g.clone()
                .with_grading(Some(g.grading.clone().unwrap()))
                .is_ok(),
        "",
    );
    c.eq(
        "all derivations nilpotent",
        all_derivations_nilpotent(g).unwrap(),
        EngelVerdict::AllNilpotent,
    );
    Section {
        tag: "sec6",
        title: "Koszul nonvanishing of the 12-dimensional algebra",
        checks: c.checks,
    }
}

/// Criterion 3: the Betti numbers of the 12-dimensional algebra.
pub fn sec6_betti() -> Section {
    let mut c = Ctx::new();
    let entry = catalog_make("g12", &q()).expect("g12");
    let g = &entry.algebra;
    let betti = betti_numbers(g, 12, None).unwrap();
    let b = betti.betti_numbers();
    c.eq(
        "betti (b0..b7) = (1,2,4,9,15,22,26,22)",
        b[..8].to_vec(),
        vec![1, 2, 4, 9, 15, 22, 26, 22],
    );
    c.chk(
        "Poincare duality b_k = b_{12-k}",
        (0..=12).all(|k| b[k] == b[12 - k]),
        format!("{b:?}"),
    );
    let euler: i64 = b
        .iter()
        .enumerate()
        .map(|(k, &x)| if k % 2 == 0 { x as i64 } else { -(x as i64) })
        .sum();
    c.eq("Euler characteristic 0", euler, 0);
    Section {
        tag: "sec6",
        title: "Betti numbers of the 12-dimensional algebra",
        checks: c.checks,
    }
}

// ----------------------------------------------------------------------
// The 9-dimensional solvable algebra (tag sec7)
// ----------------------------------------------------------------------

fn sec7() -> Section {
    let mut c = Ctx::new();
    let entry = catalog_make("solvable9", &q()).expect("solvable9");
    let g = &entry.algebra;
    let form = entry.form.clone().unwrap();
    let f = g.base();
    c.chk(
        "form is invariant and nondegenerate",
        form.is_invariant(g) && form.is_nondegenerate(),
        "",
    );
    let ch = chain_by_names(
        g,
        3,
        &[
            (1, &["x", "y", "z"]),
            (-1, &["u1", "um1", "x"]),
            (-1, &["v1", "vm1", "y"]),
        ],
    );
    c.chk("d3(c) = 0", apply_boundary(g, &ch).unwrap().is_zero(g), "");
    let pairing = form_eta_pairing(g, &form, &ch).unwrap();
    c.eq("J(c) = -1", f.format(&pairing), "-1".to_string());
    let kill = killing_module(g, None).unwrap();
    c.eq("dim Kill = 4", kill.dim, 4);
    let (_, rank) = reduced_koszul(g, &kill, None).unwrap();
    c.eq("reduced Koszul rank = 1 (nonzero)", rank, 1);
    let der = series(g, SeriesKind::Derived);
    c.eq("3-solvable", der.solvability_length, Some(3));
    Section {
        tag: "sec7",
        title: "9-dimensional solvable algebra: J(c) = -1, nonzero reduced Koszul map",
        checks: c.checks,
    }
}

// ----------------------------------------------------------------------
// Characteristic 3 (tag char3)
// ----------------------------------------------------------------------

fn char3_chain(g: &LieAlgebra) -> Chain {
    chain_by_names(
        g,
        3,
        &[
            (1, &["E0", "E1", "E-1"]),
            (1, &["E0", "E2", "E-2"]),
            (1, &["E0", "E-3", "E3"]),
            (-1, &["E1", "E2", "E-3"]),
            (-1, &["E-1", "E-2", "E3"]),
        ],
    )
}

fn char3() -> Section {
    let mut c = Ctx::new();
    let f3 = ScalarDomain::prime_field(3).unwrap();
    let entry = catalog_make("char3_octonion", &f3).expect("char3");
    let g = &entry.algebra;
    let form = entry.form.clone().unwrap();
    let ch = char3_chain(g);
    c.chk(
        "over F3: d3(c) = 0",
        apply_boundary(g, &ch).unwrap().is_zero(g),
        "",
    );
    let pairing = form_eta_pairing(g, &form, &ch).unwrap();
    c.eq(
        "over F3: B(eta(c)) = 1",
        g.base().format(&pairing),
        "1".to_string(),
    );
    let kill = killing_module(g, Some(3)).unwrap();
    c.eq("over F3: dim Kill = 29", kill.dim, 29);
    let (_, rank) = reduced_koszul(g, &kill, None).unwrap();
    c.chk(
        "over F3: reduced Koszul rank >= 1",
        rank >= 1,
        format!("rank {rank}"),
    );
    c.eq("over F3: reduced Koszul rank = 1", rank, 1);

    // over Q the same chain is not a cycle: d3(c) = 3 e0 ^ f0
    let eq = catalog_make("char3_octonion", &q()).expect("char3/Q");
    let gq = &eq.algebra;
    let chq = char3_chain(gq);
    let bd = apply_boundary(gq, &chq).unwrap();
    let fq = gq.base();
    let e0 = gq.index_of("E0").unwrap();
    let g0 = gq.index_of("F0").unwrap();
    let want_idx = subset_rank(14, &[e0.min(g0), e0.max(g0)]);
    let mut ok = !bd.is_zero(gq);
    for (i, coeff) in bd.coeffs.iter().enumerate() {
        let want = if i == want_idx {
            fq.from_i64(3)
        } else {
            fq.zero()
        };
        if coeff[0] != want {
            ok = false;
        }
    }
    c.chk("over Q: d3(c) = 3 e0 ^ f0 != 0", ok, "");
    Section {
        tag: "char3",
        title: "characteristic-3 octonion algebra: nonzero reduced Koszul map",
        checks: c.checks,
    }
}

// ----------------------------------------------------------------------
// Non-reduced coefficient rings (tag nonredu)
// ----------------------------------------------------------------------

fn nonredu() -> Section {
    let mut c = Ctx::new();
    let dom = ScalarDomain::truncated_polynomial(BaseField::Q, 2).unwrap();
    let entry = catalog_make("nonreduced_rank3", &dom).expect("nonreduced_rank3");
    let g = &entry.algebra;
    let ch = Chain::from_int_words(g, 3, &[(1, vec![0, 1, 2])]);
    c.chk(
        "c = e1^e2^e3 is a 3-cycle over R",
        apply_boundary(g, &ch).unwrap().is_zero(g),
        "",
    );
    let kill = killing_module(g, Some(3)).unwrap();
    // base-field membership: eta(c) not in Im(T)
    let rep = eta_sym_representative(g, &ch);
    let flat = restrict_vector(&g.domain, &rep);
    c.chk(
        "eta(c) not in Im(T) (base-field membership)",
        !kill.quotient.contains(&flat),
        "",
    );
    // frozen restriction-of-scalars dimensions
    c.eq("Im(T) has K-dimension 5", kill.quotient.subspace_dim(), 5);
    // in the weight-(0,0,0) component of the (Z/2)^3 grading, Im(T) is the
    // 2-dimensional sum-zero subspace of (eps Q)^3 inside the 6-dimensional
    // base-field space underlying (S^2 g)_0
    c.eq(
        "weight-0 component: dim Kill_0 = 6 - 2 = 4",
        lieko::koszul::kill_graded_dim(g, &[0, 0, 0]).unwrap(),
        4,
    );
    Section {
        tag: "nonredu",
        title: "rank-3 algebra over Q[eps]/(eps^2): eta does not vanish on cycles",
        checks: c.checks,
    }
}

// ----------------------------------------------------------------------
// Vanishing suite
// ----------------------------------------------------------------------

fn vanishing() -> Section {
    let mut c = Ctx::new();
    let entries = [
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
        "filiform(4)",
        "filiform(5)",
        "filiform(6)",
        "filiform(7)",
        "heisenberg(3)",
        "heisenberg(5)",
    ];
    for name in entries {
        let e = catalog_make(name, &q()).unwrap();
        let kill = killing_module(&e.algebra, Some(2)).unwrap();
        let (_, rank) = reduced_koszul(&e.algebra, &kill, None).unwrap();
        c.eq(&format!("eta-bar({name}) = 0"), rank, 0);
    }
    // graded vanishing at nonzero weights for all torsion-free Q-gradings
    let graded_entries = [
        "sl2",
        "oscillator4",
        "solvable9",
        "coadjoint(sl2)",
        "char3_octonion",
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
        "filiform(5)",
        "filiform(7)",
        "heisenberg(3)",
        "heisenberg(5)",
    ];
    for name in graded_entries {
        let e = catalog_make(name, &q()).unwrap();
        let kill = killing_module(&e.algebra, Some(2)).unwrap();
        for (gname, gr) in &e.gradings {
            if !gr.torsion.is_empty() {
                continue; // torsion gradings (g12's Z/4) are not asserted
            }
            let g = e.algebra.clone().with_grading(Some(gr.clone())).unwrap();
            let mut bad = Vec::new();
            for w in weights_in_degree(&g, 3).unwrap() {
                if w.iter().all(|&x| x == 0) {
                    continue;
                }
                let (_, rank) = reduced_koszul(&g, &kill, Some(&w)).unwrap();
                if rank != 0 {
                    bad.push(w);
                }
            }
            c.chk(
                &format!("{name}[{gname}]: eta-bar vanishes in every nonzero weight"),
                bad.is_empty(),
                format!("violations at {bad:?}"),
            );
        }
    }
    // Cor. on p = 3m+1: Heisenberg graded in {1,2} over F7
    let f7 = ScalarDomain::prime_field(7).unwrap();
    let e = catalog_make("heisenberg(3)", &f7).unwrap();
    let kill = killing_module(&e.algebra, Some(2)).unwrap();
    let (_, rank) = reduced_koszul(&e.algebra, &kill, None).unwrap();
    c.eq("heisenberg(3) over F7 graded {1,2}: eta-bar = 0", rank, 0);
    Section {
        tag: "vanishing",
        title: "vanishing of the reduced Koszul map for positively graded algebras",
        checks: c.checks,
    }
}

// ----------------------------------------------------------------------
// Structural identities
// ----------------------------------------------------------------------

fn compose_boundary_zero(g: &LieAlgebra) -> bool {
    // term-by-term: expand d(d(e_S)) through the sparse boundary expansions
    let dom = &g.domain;
    for k in 2..=g.dim {
        let cod = lieko::homology::wedge_basis(g.dim, k - 1);
        let mut acc = vec![dom.zero(); lieko::homology::binomial(g.dim, k.saturating_sub(2))];
        let mut touched = Vec::new();
        for s in lieko::homology::wedge_basis(g.dim, k) {
            for (r1, c1) in lieko::homology::boundary_terms(g, &s) {
                for (r2, c2) in lieko::homology::boundary_terms(g, &cod[r1]) {
                    acc[r2] = dom.add(&acc[r2], &dom.mul(&c1, &c2));
                    touched.push(r2);
                }
            }
            for &r in &touched {
                if !dom.is_zero(&acc[r]) {
                    return false;
                }
                acc[r] = dom.zero();
            }
            touched.clear();
        }
    }
    true
}

fn eta_kills_b3(g: &LieAlgebra) -> bool {
    let f = g.base();
    let kill = killing_module(g, Some(2)).unwrap();
    for s in lieko::homology::wedge_basis(g.dim, 4) {
        let ch = Chain::from_int_words(g, 4, &[(1, s.clone())]);
        let b = apply_boundary(g, &ch).unwrap();
        let cls = eta_on_chain(g, &kill, &b);
        if cls.iter().any(|x| !f.is_zero(x)) {
            return false;
        }
    }
    true
}

fn kill3_dim(g: &LieAlgebra) -> usize {
    let kill = killing_module(g, Some(3)).unwrap();
    kill.filtration
        .iter()
        .find(|(i, _)| *i == 3)
        .map(|(_, d)| *d)
        .unwrap_or(0)
}

fn structural() -> Section {
    let mut c = Ctx::new();
    let catalog_q = [
        "abelian(4)",
        "heisenberg(3)",
        "filiform(5)",
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
        "char3_octonion",
    ];
    // d o d = 0, expected facts, dual pairing, Kill^{(2)}/Kill^{(3)}
    for name in catalog_q {
        let e = catalog_make(name, &q()).unwrap();
        let g = &e.algebra;
        c.chk(&format!("{name}: d o d = 0"), compose_boundary_zero(g), "");
        let kill = killing_module(g, None).unwrap();
        if let Some(kd) = e.expected.kill_dim {
            c.eq(&format!("{name}: dim Kill"), kill.dim, kd);
        }
        if let Some(er) = e.expected.eta_rank {
            let (_, rank) = reduced_koszul(g, &kill, None).unwrap();
            c.eq(&format!("{name}: eta-bar rank"), rank, er);
        }
        if let Some(nl) = e.expected.nilpotency_length {
            let s = series(g, SeriesKind::LowerCentral);
            c.eq(
                &format!("{name}: nilpotency length"),
                s.nilpotency_length,
                Some(nl),
            );
        }
        let forms = invariant_forms(g).unwrap();
        c.eq(
            &format!("{name}: dim invariant forms = dim Kill"),
            forms.len(),
            kill.dim,
        );
        // Kill / Kill^{(3)} has the dimension of S^2(g / [g,g])
        let lcs = series(g, SeriesKind::LowerCentral);
        let h1 = g.dim - lcs.dims[1];
        c.eq(
            &format!("{name}: dim Kill - dim Kill3 = dim S^2(g/[g,g])"),
            kill.dim - kill3_dim(g),
            h1 * (h1 + 1) / 2,
        );
        // nilpotent => Kill^{(k+2)} = 0
        if let Some(k) = lcs.nilpotency_length {
            let kf = killing_module(g, Some(k + 2)).unwrap();
            let last = kf.filtration.last().copied().unwrap_or((2, 0));
            c.chk(
                &format!("{name}: Kill^{{({})}} = 0", k + 2),
                last.1 == 0 && last.0 <= k + 2,
                format!("filtration {:?}", kf.filtration),
            );
        }
        // derived series inside the lower central series: D^i g <= g^(2^i)
        let der = series(g, SeriesKind::Derived);
        let mut incl_ok = true;
        for (i, db) in der.bases.iter().enumerate() {
            let idx = (1usize << i).min(lcs.bases.len()) - 1;
            let target = Quotient::new(
                g.base(),
                db.cols,
                (0..lcs.bases[idx].rows)
                    .map(|r| lcs.bases[idx].row(r).to_vec())
                    .collect::<Vec<_>>(),
            )
            .unwrap();
            for r in 0..db.rows {
                if !target.contains(db.row(r)) {
                    incl_ok = false;
                }
            }
        }
        c.chk(&format!("{name}: D^i g inside g^(2^i)"), incl_ok, "");
    }
    // eta vanishes on boundaries: eta o d4 = 0 on every basis 4-wedge
    for name in catalog_q {
        let e = catalog_make(name, &q()).unwrap();
        c.chk(
            &format!("{name}: eta o d4 = 0"),
            eta_kills_b3(&e.algebra),
            "",
        );
    }
    // and eta is well defined: the three cyclic representatives of each
    // basis triple have the same class in the Killing module
    for name in ["g12", "solvable9", "char3_octonion"] {
        let e = catalog_make(name, &q()).unwrap();
        let g = &e.algebra;
        let kill = killing_module(g, Some(2)).unwrap();
        let f = g.base();
        let n = g.dim;
        let mut ok = true;
        'triples: for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let mut classes = Vec::new();
                    for (a, b, t) in [(i, j, k), (j, k, i), (k, i, j)] {
                        let mut v = vec![f.zero(); lieko::koszul::sym_dim(n)];
                        for (m, cc) in g.bracket_basis(b, t).iter().enumerate() {
                            if !f.is_zero(&cc[0]) {
                                let pp = sym_rank(n, a, m);
                                v[pp] = f.add(&v[pp], &cc[0]);
                            }
                        }
                        classes.push(kill.quotient.class_coords(&v));
                    }
                    if classes[0] != classes[1] || classes[1] != classes[2] {
                        ok = false;
                        break 'triples;
                    }
                }
            }
        }
        c.chk(
            &format!("{name}: cyclic representatives agree in the Killing module"),
            ok,
            "",
        );
    }

    // Lemma: Kill(g)/Kill^{(i+2)} = Kill(g / g^{(i+1)})
    for name in ["heisenberg(3)", "filiform(5)", "w(5)", "g12", "solvable9"] {
        let e = catalog_make(name, &q()).unwrap();
        let g = &e.algebra;
        let kill = killing_module(g, None).unwrap();
        let lcs = series(g, SeriesKind::LowerCentral);
        let mut ok = true;
        let mut detail = String::new();
        for i in 0..4usize {
            let idx = i.min(lcs.bases.len() - 1);
            let sub = &lcs.bases[idx];
            let gens: Vec<Vec<K>> = (0..sub.rows).map(|r| sub.row(r).to_vec()).collect();
            let quot = quotient_by_ideal(g, &gens).unwrap();
            let kq = killing_module(&quot, Some(2)).unwrap();
            let filt_i2 = kill
                .filtration
                .iter()
                .find(|(t, _)| *t == i + 2)
                .map(|(_, d)| *d)
                .unwrap_or(0);
            if kill.dim - filt_i2 != kq.dim {
                ok = false;
                detail = format!("i={i}: {} - {} != {}", kill.dim, filt_i2, kq.dim);
            }
        }
        c.chk(&format!("{name}: killni dims for i = 0..3"), ok, detail);
    }
    // metabelian => Kill^{(5)} = 0, on 20 seeded instances
    let mut ok = true;
    for seed in 0..20u64 {
        let g = metabelian_random(&q(), seed, 3, 4).unwrap();
        let kf = killing_module(&g, Some(5)).unwrap();
        let k5 = kf
            .filtration
            .iter()
            .find(|(i, _)| *i == 5)
            .map(|(_, d)| *d)
            .unwrap_or(0);
        if k5 != 0 {
            ok = false;
        }
    }
    c.chk("metabelian randoms: Kill^{(5)} = 0 (20 seeds)", ok, "");
    // 2-nilpotent over char != 3 => eta-bar = 0, 10 seeds x {Q, F5}
    let f5 = ScalarDomain::prime_field(5).unwrap();
    let mut ok = true;
    for seed in 0..10u64 {
        for dom in [&q(), &f5] {
            let g = two_nilpotent_random(dom, seed, 4, 3).unwrap();
            let kill = killing_module(&g, Some(2)).unwrap();
            let (_, rank) = reduced_koszul(&g, &kill, None).unwrap();
            if rank != 0 {
                ok = false;
            }
        }
    }
    c.chk(
        "2-nilpotent randoms over Q and F5: eta-bar = 0 (20 cases)",
        ok,
        "",
    );
    // direct products: Kill^{(3)} and eta-bar rank both add, 10 seeded pairs
    let mut ok = true;
    let mut detail = String::new();
    for seed in 0..10u64 {
        let a = if seed % 3 == 0 {
            catalog_make("sl2", &q())
                .unwrap()
                .algebra
                .with_grading(None)
                .unwrap()
        } else {
            two_nilpotent_random(&q(), seed, 3, 2)
                .unwrap()
                .with_grading(None)
                .unwrap()
        };
        let b = if seed % 2 == 0 {
            two_nilpotent_random(&q(), 100 + seed, 4, 3)
                .unwrap()
                .with_grading(None)
                .unwrap()
        } else {
            catalog_make("heisenberg(3)", &q())
                .unwrap()
                .algebra
                .with_grading(None)
                .unwrap()
        };
        let p = direct_product(&a, &b).unwrap();
        let (ka, kb, kp) = (kill3_dim(&a), kill3_dim(&b), kill3_dim(&p));
        let ra = reduced_koszul(&a, &killing_module(&a, Some(2)).unwrap(), None)
            .unwrap()
            .1;
        let rb = reduced_koszul(&b, &killing_module(&b, Some(2)).unwrap(), None)
            .unwrap()
            .1;
        let rp = reduced_koszul(&p, &killing_module(&p, Some(2)).unwrap(), None)
            .unwrap()
            .1;
        if kp != ka + kb || rp != ra + rb {
            ok = false;
            detail = format!("seed {seed}: kill3 {kp} vs {ka}+{kb}, eta {rp} vs {ra}+{rb}");
        }
    }
    c.chk(
        "direct products: Kill^{(3)} and eta-bar ranks add (10 pairs)",
        ok,
        detail,
    );
    // N-grading: the image of eta-bar of the coadjoint product equals the
    // pushforward of the image for its degree-0 part (sl2)
    {
        let e = catalog_make("coadjoint(sl2)", &q()).unwrap();
        let g = &e.algebra;
        let sl2 = catalog_make("sl2", &q()).unwrap().algebra;
        let kill6 = killing_module(g, Some(2)).unwrap();
        let (img6, r6) = reduced_koszul(g, &kill6, None).unwrap();
        let kill3m = killing_module(&sl2, Some(2)).unwrap();
        let (img3, _r3) = reduced_koszul(&sl2, &kill3m, None).unwrap();
        // push S^2(sl2) classes into S^2(g): pairs map by identity on indices
        let f = g.base();
        let mut pushed: Vec<Vec<K>> = Vec::new();
        for v in &img3 {
            // rebuild an S^2(sl2) representative from class coordinates:
            // class coords are the complement coordinates of the reduced rep,
            // so lift through the quotient's complement indices
            let comp = kill3m.quotient.complement_indices();
            let mut rep3 = vec![f.zero(); lieko::koszul::sym_dim(3)];
            for (t, &ci) in comp.iter().enumerate() {
                rep3[ci] = v[t].clone();
            }
            let mut rep6 = vec![f.zero(); lieko::koszul::sym_dim(6)];
            for i in 0..3 {
                for j in i..3 {
                    let s = rep3[sym_rank(3, i, j)].clone();
                    if !f.is_zero(&s) {
                        rep6[sym_rank(6, i, j)] = s;
                    }
                }
            }
            pushed.push(kill6.quotient.class_coords(&rep6));
        }
        let span_a = Quotient::new(f, kill6.dim, pushed).unwrap();
        let span_b = Quotient::new(f, kill6.dim, img6.clone()).unwrap();
        let mut joint = img6;
        joint.extend(
            (0..span_a.subspace_basis().rows).map(|r| span_a.subspace_basis().row(r).to_vec()),
        );
        let span_j = Quotient::new(f, kill6.dim, joint).unwrap();
        c.chk(
            "N-grading: Im eta-bar(g |x g*) = pushforward of Im eta-bar(g0)",
            span_a.subspace_dim() == span_b.subspace_dim()
                && span_j.subspace_dim() == span_b.subspace_dim()
                && r6 == 1,
            "",
        );
    }
    // every nonzero-degree homogeneous component of an invariant form pairs
    // to zero on all 3-cycles (torsion-free gradings over Q)
    for name in [
        "coadjoint(sl2)",
        "oscillator4",
        "solvable9",
        "kath9_4c",
        "sl2",
    ] {
        let e = catalog_make(name, &q()).unwrap();
        let g = &e.algebra;
        let grading = g.grading.clone().unwrap();
        if !grading.torsion.is_empty() {
            continue;
        }
        let f = g.base();
        let d3 = restrict_scalars(&g.domain, &boundary_matrix(g, 3).unwrap());
        let z3 = lieko::linalg::nullspace(&d3);
        let chains: Vec<Chain> = z3
            .iter()
            .map(|z| Chain {
                degree: 3,
                coeffs: z.iter().map(|x| vec![x.clone()]).collect(),
            })
            .collect();
        let mut ok = true;
        for b in invariant_forms(g).unwrap() {
            // split B into weight-homogeneous components; each component of a
            // solution of the (graded) invariance system is again invariant
            let mut weights: Vec<Vec<i64>> = Vec::new();
            for i in 0..g.dim {
                for j in 0..g.dim {
                    if !f.is_zero(b.mat.at(i, j)) {
                        let w = grading.add(grading.weight_of(i), grading.weight_of(j));
                        if !weights.contains(&w) {
                            weights.push(w);
                        }
                    }
                }
            }
            for w in weights {
                if w.iter().all(|&x| x == 0) {
                    continue;
                }
                let mut comp = Mat::zeros(f, g.dim, g.dim);
                for i in 0..g.dim {
                    for j in 0..g.dim {
                        if grading.add(grading.weight_of(i), grading.weight_of(j)) == w {
                            comp.set(i, j, b.mat.at(i, j).clone());
                        }
                    }
                }
                let comp = BilinearForm::new(comp);
                if !comp.is_invariant(g) {
                    ok = false;
                }
                for ch in &chains {
                    if !f.is_zero(&form_eta_pairing(g, &comp, ch).unwrap()) {
                        ok = false;
                    }
                }
            }
        }
        c.chk(
            &format!("{name}: nonzero-degree form components kill all 3-cycles"),
            ok,
            "",
        );
    }
    // homogeneous invariant forms of nonzero degree pair to zero on cycles
    {
        let e = catalog_make("coadjoint(sl2)", &q()).unwrap();
        let g = &e.algebra;
        let f = g.base();
        let duality = e.form.clone().unwrap(); // degree 1 for the {0,1} grading
        let d3 = restrict_scalars(&g.domain, &boundary_matrix(g, 3).unwrap());
        let z3 = lieko::linalg::nullspace(&d3);
        let mut ok = true;
        for z in &z3 {
            let ch = Chain {
                degree: 3,
                coeffs: z.iter().map(|x| vec![x.clone()]).collect(),
            };
            let p = form_eta_pairing(g, &duality, &ch).unwrap();
            if !f.is_zero(&p) {
                ok = false;
            }
        }
        c.chk(
            "degree-1 invariant form pairs to 0 on all 3-cycles (exact structure)",
            ok,
            "",
        );
        // and a non-exact nondegenerate structure on the same algebra
        let pullback = BilinearForm::from_entries(f, 6, &[(0, 2, f.one()), (1, 1, f.one())]);
        let mut mixed = Mat::zeros(f, 6, 6);
        for i in 0..6 {
            for j in 0..6 {
                mixed.set(i, j, f.add(duality.mat.at(i, j), pullback.mat.at(i, j)));
            }
        }
        let mixed = BilinearForm::new(mixed);
        let mut detects = false;
        for z in &z3 {
            let ch = Chain {
                degree: 3,
                coeffs: z.iter().map(|x| vec![x.clone()]).collect(),
            };
            if !f.is_zero(&form_eta_pairing(g, &mixed, &ch).unwrap()) {
                detects = true;
            }
        }
        c.chk(
            "duality + sl2-pullback: nondegenerate, invariant, non-exact",
            mixed.is_invariant(g) && mixed.is_nondegenerate() && detects,
            "",
        );
    }
    // quadrability probes
    {
        let e = catalog_make("g12", &q()).unwrap();
        let v = quadrable_probe(&e.algebra).unwrap();
        c.chk(
            "g12 probe finds a nondegenerate invariant form",
            matches!(v, Quadrable::Nondegenerate(_)),
            "",
        );
        let h = catalog_make("heisenberg(3)", &q()).unwrap();
        let v = quadrable_probe(&h.algebra).unwrap();
        c.chk(
            "heisenberg probe certifies degeneracy",
            matches!(v, Quadrable::DegenerateCertified),
            "",
        );
    }
    // quotient by a degenerate form kernel on g12
    {
        let e = catalog_make("g12", &q()).unwrap();
        let g = &e.algebra;
        let f = g.base();
        let forms = invariant_forms(g).unwrap();
        let degenerate = forms.iter().find(|b| !b.is_nondegenerate()).unwrap();
        let (quot, induced) = quotient_by_form_kernel(g, degenerate).unwrap();
        c.chk(
            "g12 quotient by a degenerate form kernel: dim < 12, induced form regular",
            quot.dim < 12 && induced.is_nondegenerate() && induced.is_invariant(&quot),
            format!("dim {}", quot.dim),
        );
        // pairing compatibility: a cycle pairs with B like its pushforward
        // pairs with the induced form
        let kernel = degenerate.kernel();
        let qpres = Quotient::new(f, 12, kernel).unwrap();
        let comp = qpres.complement_indices();
        let d3 = restrict_scalars(&g.domain, &boundary_matrix(g, 3).unwrap());
        let z3 = lieko::linalg::nullspace(&d3);
        let mut ok = true;
        for z in z3.iter().take(5) {
            let ch = Chain {
                degree: 3,
                coeffs: z.iter().map(|x| vec![x.clone()]).collect(),
            };
            let p1 = form_eta_pairing(g, degenerate, &ch).unwrap();
            // push the cycle forward: reduce each basis vector and expand
            let mut coeffs = vec![vec![f.zero()]; lieko::homology::binomial(quot.dim, 3)];
            for (idx, s) in lieko::homology::wedge_basis(12, 3).iter().enumerate() {
                if f.is_zero(&z[idx]) {
                    continue;
                }
                // reduce each leg mod the kernel, expand multilinearly
                let legs: Vec<Vec<K>> = s
                    .iter()
                    .map(|&i| {
                        let mut v = vec![f.zero(); 12];
                        v[i] = f.one();
                        qpres.reduce(&v)
                    })
                    .collect();
                for (a, ca) in legs[0].iter().enumerate() {
                    if f.is_zero(ca) {
                        continue;
                    }
                    for (b, cb) in legs[1].iter().enumerate() {
                        if f.is_zero(cb) {
                            continue;
                        }
                        for (t, ct) in legs[2].iter().enumerate() {
                            if f.is_zero(ct) {
                                continue;
                            }
                            let (pa, pb, pt) = (
                                comp.iter().position(|&x| x == a),
                                comp.iter().position(|&x| x == b),
                                comp.iter().position(|&x| x == t),
                            );
                            let (Some(pa), Some(pb), Some(pt)) = (pa, pb, pt) else {
                                continue;
                            };
                            let mut word = vec![pa, pb, pt];
                            let Some(sgn) = lieko::homology::sort_sign(&mut word) else {
                                continue;
                            };
                            let idx2 = subset_rank(quot.dim, &word);
                            let val = f.mul(&f.mul(ca, &f.mul(cb, ct)), &f.from_i64(sgn));
                            coeffs[idx2][0] = f.add(&coeffs[idx2][0], &val);
                        }
                    }
                }
            }
            let ch2 = Chain { degree: 3, coeffs };
            let p2 = form_eta_pairing(&quot, &induced, &ch2).unwrap();
            if p1 != p2 {
                ok = false;
            }
        }
        c.chk("pairings agree under quotient by the form kernel", ok, "");
    }
    // exceptional agreements: X(5) ~ w(3) and Y(6) ~ w(4) in dims and Betti
    {
        let x5 = catalog_make("X(5)", &q()).unwrap().algebra;
        let w3 = catalog_make("w(3)", &q()).unwrap().algebra;
        let bx = betti_numbers(&x5, 5, None).unwrap().betti_numbers();
        let bw = betti_numbers(&w3, 5, None).unwrap().betti_numbers();
        c.eq("X(5) and w(3) have equal Betti numbers", bx, bw);
        let y6 = catalog_make("Y(6)", &q()).unwrap().algebra;
        let w4 = catalog_make("w(4)", &q()).unwrap().algebra;
        let by = betti_numbers(&y6, 6, None).unwrap().betti_numbers();
        let bw = betti_numbers(&w4, 6, None).unwrap().betti_numbers();
        c.eq("Y(6) and w(4) have equal Betti numbers", by, bw);
    }
    // graded Betti consistency: per-weight sums match the total
    {
        let e = catalog_make("kath9_4c", &q()).unwrap();
        let g = &e.algebra;
        let total = betti_numbers(g, 4, None).unwrap();
        let mut ok = true;
        for k in 0..=4usize {
            let mut sum = 0;
            for w in weights_in_degree(g, k).unwrap() {
                sum += betti_numbers(g, k, Some(&w)).unwrap().degrees[k].betti;
            }
            if sum != total.degrees[k].betti {
                ok = false;
            }
        }
        c.chk(
            "kath9_4c: per-weight Betti numbers sum to the total",
            ok,
            "",
        );
    }
    Section {
        tag: "structural",
        title: "structural identities: boundaries, duality, filtrations, products",
        checks: c.checks,
    }
}

// ----------------------------------------------------------------------
// Current algebras of the coadjoint product: H2 witnesses
// ----------------------------------------------------------------------

fn appa() -> Section {
    let mut c = Ctx::new();
    let e = catalog_make("coadjoint(sl2)", &q()).unwrap();
    let l6 = &e.algebra;
    let b = betti_numbers(l6, 3, None).unwrap().betti_numbers();
    c.eq("H2(sl2 |x sl2*) = 0", b[2], 0);
    c.eq("H1(sl2 |x sl2*) = 0", b[1], 0);
    for n in [2usize, 3] {
        let a = ScalarDomain::truncated_polynomial(BaseField::Q, n).unwrap();
        let cur = lieko::lie::current_algebra(&a, l6).unwrap();
        // witness: t e1 ^ E_{-1} - e1 ^ t E_{-1}; basis (s, i) -> s*6 + i,
        // e1 at 0 and E_{-1} = e1* at 3
        let ch = Chain::from_int_words(&cur, 2, &[(1, vec![6, 3]), (-1, vec![0, 9])]);
        c.chk(
            &format!("N={n}: the witness is a 2-cycle"),
            apply_boundary(&cur, &ch).unwrap().is_zero(&cur),
            "",
        );
        let nonzero = homology_class_nonzero(&cur, &ch, None).unwrap();
        c.chk(
            &format!("N={n}: t e1 ^ E-1 - e1 ^ t E-1 is a nonzero class in H2"),
            nonzero,
            "",
        );
    }
    Section {
        tag: "appa",
        title: "H2 of current algebras of the coadjoint product",
        checks: c.checks,
    }
}

// ----------------------------------------------------------------------
// Canonical decomposition and H2 identities for current algebras
// ----------------------------------------------------------------------

fn trunc(n: usize) -> CommAlgebra {
    match ScalarDomain::truncated_polynomial(BaseField::Q, n).unwrap() {
        ScalarDomain::Algebra(a) => a,
        _ => unreachable!(),
    }
}

fn appb() -> Section {
    let mut c = Ctx::new();
    // frozen truncation homology
    let r = algebra_homology(&trunc(2));
    c.eq("HH1(Q[t]/(t^2)) = 1", r.hh1, 1);
    c.eq("HC1(Q[t]/(t^2)) = 0", r.hc1, 0);
    let r3 = algebra_homology(&trunc(3));
    c.eq("HH1(Q[t]/(t^3)) = 2", r3.hh1, 2);
    c.eq("HC1(Q[t]/(t^3)) = 0", r3.hc1, 0);
    c.chk("Im(T0) inside Im(T)", r3.t0_rank <= r3.t_rank, "");

    let sl2 = catalog_make("sl2", &q()).unwrap().algebra;
    let heis = catalog_make("heisenberg(3)", &q()).unwrap().algebra;
    let l6 = catalog_make("coadjoint(sl2)", &q()).unwrap().algebra;
    let l2 = two_dim_nonabelian(&q()).unwrap();
    let pairs: [(&str, CommAlgebra, &LieAlgebra); 4] = [
        ("(t^2, sl2)", trunc(2), &sl2),
        ("(t^2, heisenberg)", trunc(2), &heis),
        ("(t^2, sl2 |x sl2*)", trunc(2), &l6),
        ("(t^3, 2-dim nonabelian)", trunc(3), &l2),
    ];
    for (name, a, l) in &pairs {
        let rep = candeco_check(a, l).unwrap();
        c.chk(
            &format!("candeco {name}: bijective with both dimension identities"),
            rep.ok,
            format!("{rep:?}"),
        );
        let nw = nw_boundary_decomposition(a, l).unwrap();
        c.chk(
            &format!("boundary decomposition {name}: W1+W1'+W3+W12 = B2"),
            nw.sum_equals_b2,
            format!(
                "sum {} vs B2 {} (W1 {}, W1' {}, W3 {}, W12 {})",
                nw.sum_dim, nw.b2_dim, nw.w1_dim, nw.w1p_dim, nw.w3_dim, nw.w12_dim
            ),
        );
        for row in &nw.coupled {
            c.chk(
                &format!(
                    "coupled cocycles {name} at weight {:?}: split iff Im(eta) = Kill3",
                    row.weight
                ),
                row.biconditional_ok,
                format!("{row:?}"),
            );
        }
    }
    // the coadjoint pair splits in degree 0 (eta-bar surjective there)
    let nw = nw_boundary_decomposition(&trunc(2), &l6).unwrap();
    let row0 = nw.coupled.iter().find(|r| r.weight == vec![0]).unwrap();
    c.chk(
        "(t^2, sl2 |x sl2*): B2 splits in degree 0 (no coupled cocycles)",
        row0.splits && row0.eta_image_dim == row0.kill3_dim,
        format!("{row0:?}"),
    );
    let row1 = nw.coupled.iter().find(|r| r.weight == vec![1]).unwrap();
    c.chk(
        "(t^2, sl2 |x sl2*): coupled cocycles exist in degree 1",
        !row1.splits && row1.eta_image_dim != row1.kill3_dim,
        format!("{row1:?}"),
    );

    // graded H2 reports with every applicable corollary identity
    for (name, a, l) in [
        ("(t^3, sl2 |x sl2*)", trunc(3), &l6),
        ("(t^2, heisenberg)", trunc(2), &heis),
        ("(t^3, 2-dim nonabelian)", trunc(3), &l2),
        ("(t^2, sl2)", trunc(2), &sl2),
    ] {
        let rep = h2_graded_report(&a, l).unwrap();
        c.chk(
            &format!("graded H2 identities {name}"),
            rep.all_ok,
            format!("{:?}", rep.rows),
        );
        if name == "(t^3, sl2 |x sl2*)" {
            let dims: Vec<usize> = rep.rows.iter().map(|r| r.h2_current).collect();
            c.eq(
                "scoadj: (H2_0, H2_1, H2_2) = (HC1, HH1, 0) = (0, 2, 0)",
                dims,
                vec![0, 2, 0],
            );
        }
        if name == "(t^3, 2-dim nonabelian)" {
            let dims: Vec<usize> = rep.rows.iter().map(|r| r.h2_current).collect();
            c.eq(
                "2-dim nonabelian: H2(A x l) = Lambda^2(A) in degree 0",
                dims,
                vec![3, 0, 0],
            );
        }
    }
    Section {
        tag: "appb",
        title: "canonical decomposition and H2 identities for current algebras",
        checks: c.checks,
    }
}

// ----------------------------------------------------------------------
// Round trips
// ----------------------------------------------------------------------

fn algebras_equal(a: &LieAlgebra, b: &LieAlgebra) -> bool {
    if a.dim != b.dim || a.domain != b.domain || a.names != b.names || a.grading != b.grading {
        return false;
    }
    for i in 0..a.dim {
        for j in (i + 1)..a.dim {
            if a.bracket_basis(i, j) != b.bracket_basis(i, j) {
                return false;
            }
        }
    }
    true
}

fn roundtrip() -> Section {
    let mut c = Ctx::new();
    let f3 = ScalarDomain::prime_field(3).unwrap();
    let eps = ScalarDomain::truncated_polynomial(BaseField::Q, 2).unwrap();
    let cases: Vec<(&str, ScalarDomain)> = vec![
        ("abelian(4)", q()),
        ("heisenberg(3)", q()),
        ("filiform(5)", q()),
        ("sl2", q()),
        ("oscillator4", q()),
        ("w(3)", q()),
        ("w(4)", q()),
        ("w(5)", q()),
        ("w(3+3)", q()),
        ("w(7)", q()),
        ("w(3+4)", q()),
        ("X(8)", q()),
        ("Y(9)", q()),
        ("kath9_4c", q()),
        ("w7_twisted", q()),
        ("g12", q()),
        ("solvable9", q()),
        ("coadjoint(sl2)", q()),
        ("two_nilpotent_random(1,4,3)", q()),
        ("char3_octonion", f3),
        ("nonreduced_rank3", eps),
    ];
    for (name, dom) in cases {
        let e = catalog_make(name, &dom).unwrap();
        let file = file_from_algebra(&e.algebra, e.form.as_ref());
        let text = emit_lie(&file);
        match parse_lie(&text) {
            Ok(parsed) => {
                let ok = match parsed.to_algebra() {
                    Ok(g2) => algebras_equal(&e.algebra, &g2),
                    Err(_) => false,
                };
                let stable = emit_lie(&parsed) == text;
                c.chk(
                    &format!("{name}: parse(emit(.)) reproduces the algebra"),
                    ok && stable,
                    "",
                );
            }
            Err(err) => c.chk(&format!("{name}: parse(emit(.))"), false, err.to_string()),
        }
    }
    Section {
        tag: "roundtrip",
        title: "catalog emissions parse back to identical algebras",
        checks: c.checks,
    }
}
