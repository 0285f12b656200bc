//! The symmetric square, the map `T`, the Killing module and its filtration,
//! the Koszul map and its reduced image, invariant symmetric bilinear forms,
//! the quadrability probe, and quotients by form kernels.
//!
//! Over a commutative-algebra ground ring everything is computed after
//! restriction of scalars and all dimensions are base-field dimensions; only
//! membership and nonvanishing conclusions are meaningful there.

use crate::homology::{self, binomial, graded_boundary_matrix, wedge_basis, Chain, HomologyError};
use crate::lie::{series, BilinearForm, LieAlgebra, LieError, SeriesKind};
use crate::linalg::{self, restrict_scalars, restrict_vector, Mat, Quotient, RMat};
use crate::scalars::{RingElem, K};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Pairs `(i, j)` with `i <= j` in lex order: the basis `e_i (.) e_j` of
/// `S^2 g`.
pub fn sym_basis(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * (n + 1) / 2);
    for i in 0..n {
        for j in i..n {
            out.push((i, j));
        }
    }
    out
}

pub fn sym_dim(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Index of the unordered pair `{i, j}` in the lex basis of `S^2`.
pub fn sym_rank(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    i * (2 * n - i + 1) / 2 + (j - i)
}

/// The matrix of `T : Lambda^2 g (x) g -> S^2 g`,
/// `(x ^ y) (x) z |-> x (.) [y, z] - y (.) [z, x]`, over the ground domain.
/// Columns are indexed by (lex pair, basis index), pair-major.
pub fn t_matrix(g: &LieAlgebra) -> Result<RMat, HomologyError> {
    let n = g.dim;
    let rows = sym_dim(n);
    let cols = binomial(n, 2) * n;
    let d = g.domain.rank();
    linalg::guard(rows * d, cols * d)?;
    let pairs = wedge_basis(n, 2);
    let dom = &g.domain;
    let mut m = RMat::zeros(dom, rows, cols);
    let mut col = 0usize;
    for (i, j) in pairs.iter().map(|p| (p[0], p[1])) {
        for z in 0..n {
            // e_i (.) [e_j, e_z]
            for (k, c) in bracket_terms_signed(g, j, z) {
                m.add_at(dom, sym_rank(n, i, k), col, &c);
            }
            // - e_j (.) [e_z, e_i]
            for (k, c) in bracket_terms_signed(g, z, i) {
                m.add_at(dom, sym_rank(n, j, k), col, &dom.neg(&c));
            }
            col += 1;
        }
    }
    Ok(m)
}

fn bracket_terms_signed(g: &LieAlgebra, a: usize, b: usize) -> Vec<(usize, RingElem)> {
    if a == b {
        return vec![];
    }
    let (i, j, neg) = if a < b { (a, b, false) } else { (b, a, true) };
    g.bracket_terms(i, j)
        .map(|(k, c)| (k, if neg { g.domain.neg(c) } else { c.clone() }))
        .collect()
}

/// The Killing module `Kill(g) = coker(T)` as a quotient presentation of the
/// (restricted) symmetric square, with its filtration dimensions.
#[derive(Clone, Debug)]
pub struct KillingModule {
    /// Quotient of `S^2 g` (base-field coordinates) by `Im(T)`.
    pub quotient: Quotient,
    /// Base-field dimension of `Kill(g)`.
    pub dim: usize,
    /// `(i, dim Kill^{(i)})` for `i = 2, 3, ...` until the filtration hits 0
    /// or stabilizes (or the requested cap).
    pub filtration: Vec<(usize, usize)>,
}

impl KillingModule {
    /// Canonical class coordinates of a (restricted) `S^2` vector.
    pub fn class_of(&self, sym_vec: &[K]) -> Vec<K> {
        self.quotient.class_coords(sym_vec)
    }
}

/// Builds the Killing module; `max_filtration` caps the filtration index.
pub fn killing_module(
    g: &LieAlgebra,
    max_filtration: Option<usize>,
) -> Result<KillingModule, HomologyError> {
    let n = g.dim;
    let f = g.base();
    let d = g.domain.rank();
    let t = t_matrix(g)?;
    let tm = restrict_scalars(&g.domain, &t);
    let cols: Vec<Vec<K>> = (0..tm.cols).map(|c| tm.col(c)).collect();
    let quotient = Quotient::new(f, sym_dim(n) * d, cols)?;
    let dim = quotient.quotient_dim();

    // Kill^{(i)} = image of g (x) g^{(i-1)}; g^{(i)} from the lower central
    // series of the restricted algebra (basis rows in restricted coordinates).
    let lcs = series(g, SeriesKind::LowerCentral);
    let mut filtration = Vec::new();
    let mut i = 2usize;
    loop {
        let idx = (i - 2).min(lcs.bases.len() - 1); // g^{(i-1)} = bases[i-2]
        let sub = &lcs.bases[idx];
        let mut gens: Vec<Vec<K>> = Vec::new();
        for a in 0..n {
            for r in 0..sub.rows {
                gens.extend(sym_generators_restricted(g, a, sub.row(r)));
            }
        }
        let dims = if gens.is_empty() {
            0
        } else {
            let classes: Vec<Vec<K>> = gens.iter().map(|v| quotient.class_coords(v)).collect();
            let m = Mat::from_rows(f, classes);
            linalg::rank(&m)
        };
        filtration.push((i, dims));
        let capped = max_filtration.is_some_and(|m| i >= m);
        let exhausted = idx == lcs.bases.len() - 1
            && filtration.len() >= 2
            && filtration[filtration.len() - 2].1 == dims;
        if dims == 0 || capped || exhausted {
            break;
        }
        i += 1;
    }
    Ok(KillingModule {
        quotient,
        dim,
        filtration,
    })
}

/// Restricted-coordinate generators of the R-submodule `R . (e_a (.) w)` of
/// `S^2 g`, where `w` is given in restricted coordinates (index-major layout
/// `i*d + s`).
fn sym_generators_restricted(g: &LieAlgebra, a: usize, w: &[K]) -> Vec<Vec<K>> {
    let n = g.dim;
    let f = g.base();
    let d = g.domain.rank();
    let mut out = Vec::with_capacity(d);
    match &g.domain {
        crate::scalars::ScalarDomain::Field(_) => {
            let mut v = vec![f.zero(); sym_dim(n)];
            for (iidx, c) in w.iter().enumerate() {
                if !f.is_zero(c) {
                    let p = sym_rank(n, a, iidx);
                    v[p] = f.add(&v[p], c);
                }
            }
            out.push(v);
        }
        crate::scalars::ScalarDomain::Algebra(alg) => {
            for t in 0..d {
                let mut v = vec![f.zero(); sym_dim(n) * d];
                for (x, c) in w.iter().enumerate() {
                    if f.is_zero(c) {
                        continue;
                    }
                    let (i, s) = (x / d, x % d);
                    let p = sym_rank(n, a, i);
                    for (u, m) in alg.basis_product(t, s).iter().enumerate() {
                        if !f.is_zero(m) {
                            v[p * d + u] = f.add(&v[p * d + u], &f.mul(c, m));
                        }
                    }
                }
                out.push(v);
            }
        }
    }
    out
}

/// The raw Koszul representative of a 3-chain in `S^2 g` (over the domain):
/// on the basis `e_i ^ e_j ^ e_k` (i < j < k) the value is
/// `e_i (.) [e_j, e_k]` (first-slot rule; cyclic independence holds in the
/// Killing module, which the test suite verifies).
pub fn eta_sym_representative(g: &LieAlgebra, chain: &Chain) -> Vec<RingElem> {
    assert_eq!(chain.degree, 3);
    let n = g.dim;
    let dom = &g.domain;
    let mut v = vec![dom.zero(); sym_dim(n)];
    for (idx, s) in wedge_basis(n, 3).iter().enumerate() {
        let c = &chain.coeffs[idx];
        if dom.is_zero(c) {
            continue;
        }
        let (i, j, k) = (s[0], s[1], s[2]);
        for (m, cc) in bracket_terms_signed(g, j, k) {
            let p = sym_rank(n, i, m);
            v[p] = dom.add(&v[p], &dom.mul(c, &cc));
        }
    }
    v
}

/// The class of `eta(chain)` in the Killing module, in canonical coordinates.
pub fn eta_on_chain(g: &LieAlgebra, kill: &KillingModule, chain: &Chain) -> Vec<K> {
    let rep = eta_sym_representative(g, chain);
    kill.class_of(&restrict_vector(&g.domain, &rep))
}

/// The matrix of the raw Koszul map `Lambda^3 g -> S^2 g` over the domain.
fn eta_matrix(g: &LieAlgebra) -> Result<RMat, HomologyError> {
    let n = g.dim;
    let rows = sym_dim(n);
    let cols = binomial(n, 3);
    let d = g.domain.rank();
    linalg::guard(rows * d, cols * d)?;
    let dom = &g.domain;
    let mut m = RMat::zeros(dom, rows, cols);
    for (col, s) in wedge_basis(n, 3).iter().enumerate() {
        let (i, j, k) = (s[0], s[1], s[2]);
        for (t, c) in bracket_terms_signed(g, j, k) {
            m.add_at(dom, sym_rank(n, i, t), col, &c);
        }
    }
    Ok(m)
}

/// The image of the reduced Koszul map: a basis (in canonical Killing-module
/// coordinates) of `eta(Z_3)`, optionally restricted to a weight component,
/// and its rank. Per the defining remark, `B_3` need not be subtracted.
pub fn reduced_koszul(
    g: &LieAlgebra,
    kill: &KillingModule,
    weight: Option<&[i64]>,
) -> Result<(Vec<Vec<K>>, usize), HomologyError> {
    let f = g.base();
    let em = restrict_scalars(&g.domain, &eta_matrix(g)?);
    let z3: Vec<Vec<K>> = match weight {
        None => {
            let d3 = restrict_scalars(&g.domain, &homology::boundary_matrix(g, 3)?);
            linalg::nullspace(&d3)
        }
        Some(w) => {
            let gb = graded_boundary_matrix(g, 3, w)?;
            let ns = linalg::nullspace(&gb.mat);
            let d = g.domain.rank();
            let full_cols = binomial(g.dim, 3) * d;
            ns.into_iter()
                .map(|v| {
                    let mut full = vec![f.zero(); full_cols];
                    for (pos, &ci) in gb.col_subsets.iter().enumerate() {
                        for s in 0..d {
                            full[ci * d + s] = v[pos * d + s].clone();
                        }
                    }
                    full
                })
                .collect()
        }
    };
    let mut images: Vec<Vec<K>> = Vec::new();
    for z in &z3 {
        let img = kill.class_of(&em.apply(z));
        if img.iter().any(|x| !f.is_zero(x)) {
            images.push(img);
        }
    }
    let rank = if images.is_empty() {
        0
    } else {
        linalg::rank(&Mat::from_rows(f, images.clone()))
    };
    Ok((images, rank))
}

/// Dimension of the weight component `Kill(g)_beta` (graded algebras over a
/// field): `dim (S^2)_beta - rank T|_beta`.
pub fn kill_graded_dim(g: &LieAlgebra, beta: &[i64]) -> Result<usize, HomologyError> {
    let grading = g.grading.as_ref().ok_or(HomologyError::NotGraded)?;
    let w = grading.normalize(beta);
    let n = g.dim;
    let d = g.domain.rank();
    let sb = sym_basis(n);
    let keep: Vec<usize> = sb
        .iter()
        .enumerate()
        .filter(|(_, (a, b))| grading.add(grading.weight_of(*a), grading.weight_of(*b)) == w)
        .map(|(i, _)| i)
        .collect();
    let t = t_matrix(g)?;
    let tm = restrict_scalars(&g.domain, &t);
    // columns of T of weight w: pair (i,j) (x) z with w_i + w_j + w_z = w
    let pairs = wedge_basis(n, 2);
    let mut cols: Vec<Vec<K>> = Vec::new();
    let mut col = 0usize;
    for p in &pairs {
        for z in 0..n {
            let cw = grading.add(
                &grading.add(grading.weight_of(p[0]), grading.weight_of(p[1])),
                grading.weight_of(z),
            );
            if cw == w {
                for s in 0..d {
                    let full = tm.col(col * d + s);
                    let mut v = Vec::with_capacity(keep.len() * d);
                    for &r in &keep {
                        for u in 0..d {
                            v.push(full[r * d + u].clone());
                        }
                    }
                    cols.push(v);
                }
            }
            col += 1;
        }
    }
    let f = g.base();
    let r = if cols.is_empty() {
        0
    } else {
        linalg::rank(&Mat::from_cols(f, cols, keep.len() * d))
    };
    Ok(keep.len() * d - r)
}

/// Dimension of `Kill^{(3)}(g)_beta`: the weight component of the image of
/// `g (.) [g,g]` in the Killing module.
pub fn kill3_graded_dim(
    g: &LieAlgebra,
    kill: &KillingModule,
    beta: &[i64],
) -> Result<usize, HomologyError> {
    let grading = g.grading.as_ref().ok_or(HomologyError::NotGraded)?;
    let w = grading.normalize(beta);
    let f = g.base();
    let n = g.dim;
    let d = g.domain.rank();
    let lcs = series(g, SeriesKind::LowerCentral);
    let derived = &lcs.bases[1.min(lcs.bases.len() - 1)];
    let sb = sym_basis(n);
    let mut classes: Vec<Vec<K>> = Vec::new();
    for a in 0..n {
        for r in 0..derived.rows {
            for gen in sym_generators_restricted(g, a, derived.row(r)) {
                // project onto the weight-beta coordinates (the subspace is graded)
                let mut proj = vec![f.zero(); gen.len()];
                for (pi, (x, y)) in sb.iter().enumerate() {
                    if grading.add(grading.weight_of(*x), grading.weight_of(*y)) == w {
                        for s in 0..d {
                            proj[pi * d + s] = gen[pi * d + s].clone();
                        }
                    }
                }
                let cls = kill.class_of(&proj);
                if cls.iter().any(|x| !f.is_zero(x)) {
                    classes.push(cls);
                }
            }
        }
    }
    Ok(if classes.is_empty() {
        0
    } else {
        linalg::rank(&Mat::from_rows(f, classes))
    })
}

/// Basis of the space of invariant symmetric bilinear forms (field domains).
pub fn invariant_forms(g: &LieAlgebra) -> Result<Vec<BilinearForm>, LieError> {
    if !g.domain.is_field() {
        return Err(LieError::NotAField);
    }
    let f = g.base();
    let n = g.dim;
    let sb = sym_basis(n);
    let nb = sb.len();
    // unknowns b_p for unordered pairs p; equations B([ei,ej],ek) = B(ei,[ej,ek])
    let mut rows: Vec<Vec<K>> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut row = vec![f.zero(); nb];
                let mut nonzero = false;
                for m in 0..n {
                    let c = g.c(i, j, m);
                    if !f.is_zero(&c[0]) {
                        let p = sym_rank(n, m, k);
                        row[p] = f.add(&row[p], &c[0]);
                        nonzero = true;
                    }
                    let c2 = g.c(j, k, m);
                    if !f.is_zero(&c2[0]) {
                        let p = sym_rank(n, i, m);
                        row[p] = f.sub(&row[p], &c2[0]);
                        nonzero = true;
                    }
                }
                if nonzero {
                    rows.push(row);
                }
            }
        }
    }
    let basis = if rows.is_empty() {
        (0..nb)
            .map(|t| {
                let mut v = vec![f.zero(); nb];
                v[t] = f.one();
                v
            })
            .collect()
    } else {
        linalg::nullspace(&Mat::from_rows(f, rows))
    };
    Ok(basis
        .into_iter()
        .map(|v| {
            let mut m = Mat::zeros(f, n, n);
            for (p, (i, j)) in sb.iter().enumerate() {
                m.set(*i, *j, v[p].clone());
                if i != j {
                    m.set(*j, *i, v[p].clone());
                }
            }
            BilinearForm::new(m)
        })
        .collect())
}

/// `J_B` evaluated on a chain: the sum over the chain's wedge terms of
/// `B(e_i, [e_j, e_k])`. Equals `B` on any `S^2`-representative of
/// `eta(chain)`. The form must be invariant.
pub fn form_eta_pairing(g: &LieAlgebra, b: &BilinearForm, chain: &Chain) -> Result<K, LieError> {
    if !g.domain.is_field() {
        return Err(LieError::NotAField);
    }
    if !b.is_symmetric() || !b.is_invariant(g) {
        return Err(LieError::FormNotInvariant);
    }
    let f = g.base();
    let n = g.dim;
    let mut acc = f.zero();
    for (idx, s) in wedge_basis(n, 3).iter().enumerate() {
        let c = &chain.coeffs[idx];
        if g.domain.is_zero(c) {
            continue;
        }
        let (i, j, k) = (s[0], s[1], s[2]);
        for (m, cc) in bracket_terms_signed(g, j, k) {
            acc = f.add(&acc, &f.mul(&f.mul(&c[0], &cc[0]), b.eval(i, m)));
        }
    }
    Ok(acc)
}

/// Outcome of the quadrability probe.
#[derive(Clone, Debug)]
pub enum Quadrable {
    /// A nondegenerate invariant form was found.
    Nondegenerate(BilinearForm),
    /// Every invariant form is degenerate (certified by grid interpolation of
    /// the determinant polynomial).
    DegenerateCertified,
    /// Sampling found nothing and the certification grid was too large.
    Unknown,
}

const PROBE_POOL: [i64; 8] = [-2, -1, 0, 1, 2, 3, 5, 7];
const PROBE_ATTEMPTS: usize = 200;
const PROBE_GRID_LIMIT: usize = 200_000;

/// Searches the invariant-form space for a nondegenerate element:
/// deterministic seeded sampling first, then exhaustive interpolation of the
/// determinant over a grid of size `(n+1)^s` to certify identical vanishing
/// when that is feasible.
pub fn quadrable_probe(g: &LieAlgebra) -> Result<Quadrable, LieError> {
    let basis = invariant_forms(g)?;
    let f = g.base();
    let n = g.dim;
    if n == 0 {
        return Ok(Quadrable::Nondegenerate(BilinearForm::new(Mat::zeros(
            f, 0, 0,
        ))));
    }
    let s = basis.len();
    if s == 0 {
        return Ok(Quadrable::DegenerateCertified);
    }
    let combine = |coeffs: &[K]| -> BilinearForm {
        let mut m = Mat::zeros(f, n, n);
        for (c, b) in coeffs.iter().zip(&basis) {
            if f.is_zero(c) {
                continue;
            }
            for i in 0..n {
                for j in 0..n {
                    let v = f.add(m.at(i, j), &f.mul(c, b.mat.at(i, j)));
                    m.set(i, j, v);
                }
            }
        }
        BilinearForm::new(m)
    };
    let mut rng = ChaCha8Rng::seed_from_u64(0x4b6f737a756c);
    for _ in 0..PROBE_ATTEMPTS {
        let coeffs: Vec<K> = (0..s)
            .map(|_| f.from_i64(PROBE_POOL[rng.gen_range(0..PROBE_POOL.len())]))
            .collect();
        let b = combine(&coeffs);
        if b.is_nondegenerate() {
            return Ok(Quadrable::Nondegenerate(b));
        }
    }
    // certification: det is a polynomial of per-variable degree <= n; if it
    // vanishes on the grid {0..n}^s it vanishes identically
    let grid = n + 1;
    let total = (0..s).try_fold(1usize, |acc, _| {
        acc.checked_mul(grid).filter(|&t| t <= PROBE_GRID_LIMIT)
    });
    let Some(total) = total else {
        return Ok(Quadrable::Unknown);
    };
    let mut idx = vec![0usize; s];
    for _ in 0..total {
        let coeffs: Vec<K> = idx.iter().map(|&t| f.from_i64(t as i64)).collect();
        let b = combine(&coeffs);
        if b.is_nondegenerate() {
            return Ok(Quadrable::Nondegenerate(b));
        }
        // increment the mixed-radix counter
        for t in 0..s {
            idx[t] += 1;
            if idx[t] < grid {
                break;
            }
            idx[t] = 0;
        }
    }
    Ok(Quadrable::DegenerateCertified)
}

/// Quotient by the kernel of an invariant form, with the induced
/// nondegenerate form on the quotient.
pub fn quotient_by_form_kernel(
    g: &LieAlgebra,
    b: &BilinearForm,
) -> Result<(LieAlgebra, BilinearForm), LieError> {
    if !g.domain.is_field() {
        return Err(LieError::NotAField);
    }
    if !b.is_symmetric() || !b.is_invariant(g) {
        return Err(LieError::FormNotInvariant);
    }
    let f = g.base();
    let kernel = b.kernel();
    let q = Quotient::new(f, g.dim, kernel.clone())?;
    let comp = q.complement_indices();
    let quotient = crate::lie::quotient_by_ideal(g, &kernel)?;
    let m = comp.len();
    let mut fm = Mat::zeros(f, m, m);
    for (a, &i) in comp.iter().enumerate() {
        for (c, &j) in comp.iter().enumerate() {
            fm.set(a, c, b.mat.at(i, j).clone());
        }
    }
    let induced = BilinearForm::new(fm);
    debug_assert!(induced.is_invariant(&quotient));
    Ok((quotient, induced))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{Grading, LieAlgebra};
    use crate::scalars::ScalarDomain;

    fn heisenberg() -> LieAlgebra {
        let d = ScalarDomain::rationals();
        let one = d.one();
        LieAlgebra::new(d, 3, vec![((0, 1), vec![(2, one)])], None, None).unwrap()
    }

    fn sl2() -> LieAlgebra {
        let d = ScalarDomain::rationals();
        LieAlgebra::new(
            d.clone(),
            3,
            vec![
                ((0, 1), vec![(0, d.from_i64(-1))]),
                ((1, 2), vec![(2, d.from_i64(-1))]),
                ((0, 2), vec![(1, d.from_i64(1))]),
            ],
            None,
            Some(Grading::new(1, vec![], vec![vec![1], vec![0], vec![-1]]).unwrap()),
        )
        .unwrap()
    }

    #[test]
    fn t_matrix_ranks() {
        // abelian: T = 0
        let a = LieAlgebra::new(ScalarDomain::rationals(), 3, vec![], None, None).unwrap();
        let t = restrict_scalars(&a.domain, &t_matrix(&a).unwrap());
        assert!(t.is_zero());
        // heisenberg: rank 3 (image x.z, y.z, z.z)
        let h = heisenberg();
        let t = restrict_scalars(&h.domain, &t_matrix(&h).unwrap());
        assert_eq!(linalg::rank(&t), 3);
        // sl2: rank 5, cokernel dim 1
        let s = sl2();
        let t = restrict_scalars(&s.domain, &t_matrix(&s).unwrap());
        assert_eq!(linalg::rank(&t), 5);
    }

    #[test]
    fn killing_dims_and_duality() {
        for (g, expect) in [
            (heisenberg(), 3),
            (sl2(), 1),
            (
                LieAlgebra::new(ScalarDomain::rationals(), 4, vec![], None, None).unwrap(),
                10,
            ),
        ] {
            let k = killing_module(&g, None).unwrap();
            assert_eq!(k.dim, expect);
            let forms = invariant_forms(&g).unwrap();
            assert_eq!(forms.len(), expect);
        }
        // abelian filtration: Kill^{(3)} = 0
        let a = LieAlgebra::new(ScalarDomain::rationals(), 4, vec![], None, None).unwrap();
        let k = killing_module(&a, None).unwrap();
        assert_eq!(k.filtration, vec![(2, 10), (3, 0)]);
    }

    #[test]
    fn eta_cyclic_well_definedness() {
        // classes of e_i(.)[e_j,e_k], e_j(.)[e_k,e_i], e_k(.)[e_i,e_j] agree
        for g in [sl2(), heisenberg()] {
            let kill = killing_module(&g, None).unwrap();
            let n = g.dim;
            for i in 0..n {
                for j in (i + 1)..n {
                    for k in (j + 1)..n {
                        let reps = [(i, j, k), (j, k, i), (k, i, j)];
                        let classes: Vec<Vec<K>> = reps
                            .iter()
                            .map(|&(a, bb, c)| {
                                let mut v = vec![g.domain.zero(); sym_dim(n)];
                                for (m, cc) in bracket_terms_signed(&g, bb, c) {
                                    let p = sym_rank(n, a, m);
                                    v[p] = g.domain.add(&v[p], &cc);
                                }
                                kill.class_of(&restrict_vector(&g.domain, &v))
                            })
                            .collect();
                        assert_eq!(classes[0], classes[1]);
                        assert_eq!(classes[1], classes[2]);
                    }
                }
            }
        }
    }

    #[test]
    fn sl2_reduced_koszul() {
        let g = sl2();
        let kill = killing_module(&g, None).unwrap();
        let (_, rank) = reduced_koszul(&g, &kill, None).unwrap();
        assert_eq!(rank, 1);
        // concentrated in degree zero
        assert_eq!(reduced_koszul(&g, &kill, Some(&[0])).unwrap().1, 1);
        for w in [1i64, -1, 2, 3] {
            assert_eq!(reduced_koszul(&g, &kill, Some(&[w])).unwrap().1, 0);
        }
    }

    #[test]
    fn heisenberg_probe_certifies_degenerate() {
        let h = heisenberg();
        match quadrable_probe(&h).unwrap() {
            Quadrable::DegenerateCertified => {}
            other => panic!("expected DegenerateCertified, got {other:?}"),
        }
        // every invariant form kills the center
        for b in invariant_forms(&h).unwrap() {
            let f = h.base();
            for i in 0..3 {
                assert!(f.is_zero(b.eval(i, 2)));
            }
        }
    }

    #[test]
    fn abelian_probe_finds_identity_like_form() {
        let a = LieAlgebra::new(ScalarDomain::rationals(), 3, vec![], None, None).unwrap();
        match quadrable_probe(&a).unwrap() {
            Quadrable::Nondegenerate(b) => assert!(b.is_nondegenerate()),
            other => panic!("expected Nondegenerate, got {other:?}"),
        }
    }

    #[test]
    fn quotient_by_form_kernel_heisenberg() {
        let h = heisenberg();
        let f = h.base();
        // invariant form with kernel exactly the center: B(x,x)=B(y,y)=1
        let b = BilinearForm::from_entries(f, 3, &[(0, 0, f.one()), (1, 1, f.one())]);
        assert!(b.is_invariant(&h));
        let (q, induced) = quotient_by_form_kernel(&h, &b).unwrap();
        assert_eq!(q.dim, 2);
        assert!(q.bracket_terms(0, 1).next().is_none());
        assert!(induced.is_nondegenerate());
        // nondegenerate form gives back g itself
        let a = LieAlgebra::new(ScalarDomain::rationals(), 2, vec![], None, None).unwrap();
        let id = BilinearForm::new(Mat::identity(f, 2));
        let (q2, _) = quotient_by_form_kernel(&a, &id).unwrap();
        assert_eq!(q2.dim, 2);
    }
}
