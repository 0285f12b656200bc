//! Cross-module integration checks against frozen reference values for the
//! named example algebras.

use lieko::catalog::catalog_make;
use lieko::homology::{betti_numbers, homology_class_nonzero, Chain};
use lieko::koszul::{
    form_eta_pairing, invariant_forms, kill_graded_dim, killing_module, reduced_koszul,
};
use lieko::lie::{double_extension, BilinearForm, LieAlgebra, LieError};
use lieko::linalg::{Mat, Quotient};
use lieko::scalars::{BaseField, ScalarDomain};

fn q() -> ScalarDomain {
    ScalarDomain::rationals()
}

fn g12() -> (LieAlgebra, BilinearForm) {
    let e = catalog_make("g12", &q()).unwrap();
    (e.algebra, e.form.unwrap())
}

fn chain3(g: &LieAlgebra, words: &[(i64, [&str; 3])]) -> Chain {
    let ws: Vec<(i64, Vec<usize>)> = words
        .iter()
        .map(|(c, names)| (*c, names.iter().map(|n| g.index_of(n).unwrap()).collect()))
        .collect();
    Chain::from_int_words(g, 3, &ws)
}

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

#[test]
fn g12_pairings_of_the_eight_chains() {
    let (g, form) = g12();
    let f = g.base();
    let expected = [1, 1, 1, 1, 1, 1, 0, 0];
    for (names, want) in G12_CHAINS.iter().zip(expected) {
        let ch = chain3(&g, &[(1, *names)]);
        let p = form_eta_pairing(&g, &form, &ch).unwrap();
        assert_eq!(p, f.from_i64(want), "{names:?}");
    }
}

#[test]
fn g12_killing_filtration() {
    let (g, _) = g12();
    let kill = killing_module(&g, None).unwrap();
    assert_eq!(kill.dim, 5);
    assert_eq!(
        kill.filtration,
        vec![
            (2, 5),
            (3, 2),
            (4, 2),
            (5, 1),
            (6, 1),
            (7, 1),
            (8, 1),
            (9, 0)
        ]
    );
    // weakly decreasing images
    for w in kill.filtration.windows(2) {
        assert!(w[1].1 <= w[0].1);
    }
}

#[test]
fn g12_cycle_is_a_nonzero_class() {
    let (g, _) = g12();
    let coeffs = [2i64, 4, -3, 1, -3, -3, 4, 3];
    let words: Vec<(i64, [&str; 3])> = coeffs
        .iter()
        .zip(G12_CHAINS.iter())
        .map(|(&c, names)| (c, *names))
        .collect();
    let ch = chain3(&g, &words);
    // cross-check of the eta-detection: direct B_3 membership
    assert_eq!(homology_class_nonzero(&g, &ch, None), Ok(true));
}

#[test]
fn g12_scalar_product_lies_in_the_invariant_form_space() {
    let (g, form) = g12();
    let f = g.base();
    let forms = invariant_forms(&g).unwrap();
    assert_eq!(forms.len(), 5);
    let flat = |b: &BilinearForm| -> Vec<_> {
        let mut v = Vec::new();
        for i in 0..12 {
            for j in 0..12 {
                v.push(b.mat.at(i, j).clone());
            }
        }
        v
    };
    let span = Quotient::new(f, 144, forms.iter().map(flat).collect::<Vec<_>>()).unwrap();
    assert!(span.contains(&flat(&form)));
}

/// The double extension of the 10-dimensional orthogonal sum (the renamed
/// w(5) plus the abelian (Z3, Z6, Z9) space) by the printed derivation
/// reproduces the 12-dimensional algebra bracket for bracket.
#[test]
fn g12_as_a_double_extension() {
    let d = q();
    let f = BaseField::Q;
    // h basis: Y1 Y4 Y5 Y6 Y7 Y8 Y11 Z3 Z6 Z9 (indices 0..9)
    let names = ["Y1", "Y4", "Y5", "Y6", "Y7", "Y8", "Y11", "Z3", "Z6", "Z9"];
    let ix = |s: &str| names.iter().position(|&x| x == s).unwrap();
    let one = d.one();
    let m1 = d.neg(&one);
    let table = vec![
        ((ix("Y1"), ix("Y4")), vec![(ix("Y5"), one.clone())]),
        ((ix("Y1"), ix("Y5")), vec![(ix("Y6"), m1.clone())]),
        ((ix("Y1"), ix("Y6")), vec![(ix("Y7"), one.clone())]),
        ((ix("Y1"), ix("Y7")), vec![(ix("Y8"), m1.clone())]),
        ((ix("Y4"), ix("Y7")), vec![(ix("Y11"), one.clone())]),
        ((ix("Y5"), ix("Y6")), vec![(ix("Y11"), m1.clone())]),
    ];
    let h = LieAlgebra::new(
        d,
        10,
        table,
        Some(names.iter().map(|s| s.to_string()).collect()),
        None,
    )
    .unwrap();
    let mut fm = Mat::zeros(f, 10, 10);
    let mut put = |a: &str, b: &str| {
        fm.set(ix(a), ix(b), f.one());
        fm.set(ix(b), ix(a), f.one());
    };
    put("Y1", "Y11");
    put("Y4", "Y8");
    put("Y5", "Y7");
    put("Y6", "Y6");
    put("Z3", "Z9");
    put("Z6", "Z6");
    let form = BilinearForm::new(fm);
    // D: Y1 -> Y4, Y4 -> Y7 + Z3, Y5 -> -Y8, Y8 -> -Y11,
    //    Z3 -> Z6, Z6 -> -Z9, Z9 -> -Y8
    let mut dm = Mat::zeros(f, 10, 10);
    let mut dput = |from: &str, to: &str, c: i64| {
        dm.set(ix(to), ix(from), f.from_i64(c));
    };
    dput("Y1", "Y4", 1);
    dput("Y4", "Y7", 1);
    dput("Y4", "Z3", 1);
    dput("Y5", "Y8", -1);
    dput("Y8", "Y11", -1);
    dput("Z3", "Z6", 1);
    dput("Z6", "Z9", -1);
    dput("Z9", "Y8", -1);
    let (ext, ext_form) = double_extension(&h, &form, &dm).unwrap();
    assert_eq!(ext.dim, 12);
    // compare with the catalog table: (e, f) = (E3, E9), then h
    let (cat, cat_form) = g12();
    let order = [
        "E3", "E9", "Y1", "Y4", "Y5", "Y6", "Y7", "Y8", "Y11", "Z3", "Z6", "Z9",
    ];
    // double_extension output is (e, f, h...) which matches 'order' with
    // e = E3 and f = E9
    for (i, a) in order.iter().enumerate() {
        for (j, b) in order.iter().enumerate().skip(i + 1) {
            let ci = cat.index_of(a).unwrap();
            let cj = cat.index_of(b).unwrap();
            assert_eq!(
                ext.bracket_basis(i, j),
                cat.bracket_basis(ci, cj),
                "bracket [{a}, {b}]"
            );
            assert_eq!(ext_form.eval(i, j), cat_form.eval(ci, cj), "<{a}, {b}>");
        }
    }
}

#[test]
fn no_nonzero_nilpotent_skew_derivation_on_the_hyperbolic_plane() {
    // on abelian(2) with the hyperbolic form the only skew map with
    // nilpotent shape is 0; a rank-1 nilpotent candidate must be rejected
    let d = q();
    let f = BaseField::Q;
    let h = LieAlgebra::new(d, 2, vec![], None, None).unwrap();
    let form = BilinearForm::from_entries(f, 2, &[(0, 1, f.one())]);
    let mut dm = Mat::zeros(f, 2, 2);
    dm.set(0, 1, f.one()); // e2 |-> e1, e1 |-> 0
    assert_eq!(
        double_extension(&h, &form, &dm).unwrap_err(),
        LieError::NotSkew
    );
    // the honest smallest nilpotent double extension: abelian(3) with the
    // [3]-partition derivation, which is w(3)
    let w3 = catalog_make("w(3)", &q()).unwrap().algebra;
    assert_eq!(w3.dim, 5);
}

#[test]
fn coadjoint_sl2_bracket_list() {
    // [e0, e_eps] = eps e_eps, [e1, e-1] = e0, [e0, E_eps] = eps E_eps,
    // [e_eps, E_0] = -eps E_eps, [e_eps, E_-eps] = eps E_0
    let e = catalog_make("coadjoint(sl2)", &q()).unwrap();
    let g = &e.algebra;
    let f = g.base();
    let ix = |n: &str| g.index_of(n).unwrap();
    // basis names: e1 e0 em1 e1* e0* em1*; E_eps is the dual of e_{-eps}
    let (e1, e0, em1) = (ix("e1"), ix("e0"), ix("em1"));
    let (cap_e1, cap_e0, cap_em1) = (ix("em1*"), ix("e0*"), ix("e1*"));
    let one = f.one();
    let m1 = f.from_i64(-1);
    let expect = [
        (e0, cap_e1, cap_e1, one.clone()),
        (e0, cap_em1, cap_em1, m1.clone()),
        (e1, cap_e0, cap_e1, m1.clone()),
        (em1, cap_e0, cap_em1, one.clone()),
        (e1, cap_em1, cap_e0, one.clone()),
        (em1, cap_e1, cap_e0, m1.clone()),
    ];
    for (a, b, target, coeff) in expect {
        let br = g.bracket_basis(a, b);
        for (k, c) in br.iter().enumerate() {
            let want = if k == target { coeff.clone() } else { f.zero() };
            assert_eq!(c[0], want, "[{}, {}]", g.name_of(a), g.name_of(b));
        }
    }
}

#[test]
fn pairing_vanishes_on_boundaries() {
    let (g, form) = g12();
    let f = g.base();
    for s in lieko::homology::wedge_basis(12, 4).iter().take(60) {
        let ch = Chain::from_int_words(&g, 4, &[(1, s.clone())]);
        let b = lieko::homology::apply_boundary(&g, &ch).unwrap();
        let p = form_eta_pairing(&g, &form, &b).unwrap();
        assert!(f.is_zero(&p));
    }
}

#[test]
fn coadjoint_sl2_reference_facts() {
    let e = catalog_make("coadjoint(sl2)", &q()).unwrap();
    let g = &e.algebra;
    let b = betti_numbers(g, 6, None).unwrap().betti_numbers();
    assert_eq!(b, vec![1, 0, 0, 2, 0, 0, 1]);
    // Kill is 1-dimensional in degrees 0 and 1, zero in degree 2
    assert_eq!(kill_graded_dim(g, &[0]).unwrap(), 1);
    assert_eq!(kill_graded_dim(g, &[1]).unwrap(), 1);
    assert_eq!(kill_graded_dim(g, &[2]).unwrap(), 0);
    let kill = killing_module(g, Some(3)).unwrap();
    assert_eq!(kill.dim, 2);
    let (_, r0) = reduced_koszul(g, &kill, Some(&[0])).unwrap();
    let (_, r1) = reduced_koszul(g, &kill, Some(&[1])).unwrap();
    assert_eq!((r0, r1), (1, 0));
}

#[test]
fn x_family_against_w_family() {
    // X(2) is abelian; X(5) matches w(3) in dimension, length and Betti
    let x2 = catalog_make("X(2)", &q()).unwrap().algebra;
    assert!(x2.bracket_terms(0, 1).next().is_none());
    let x5 = catalog_make("X(5)", &q()).unwrap().algebra;
    let w3 = catalog_make("w(3)", &q()).unwrap().algebra;
    assert_eq!(
        betti_numbers(&x5, 5, None).unwrap().betti_numbers(),
        betti_numbers(&w3, 5, None).unwrap().betti_numbers()
    );
    // Y(3) is abelian
    let y3 = catalog_make("Y(3)", &q()).unwrap().algebra;
    for i in 0..3 {
        for j in (i + 1)..3 {
            assert!(y3.bracket_terms(i, j).next().is_none());
        }
    }
}
