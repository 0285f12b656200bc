//! Lie algebras by structure constants: validation (antisymmetry, Jacobi,
//! grading compatibility), lower central / derived series, and the structural
//! constructions used throughout: direct products, quotients by ideals,
//! current algebras, coadjoint semidirect products, double extensions, and
//! derivation algebras with the Engel nilpotency check.

use crate::linalg::{self, Mat, Quotient};
use crate::scalars::{BaseField, RingElem, ScalarDomain, K};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum LieError {
    #[error("bracket table index out of range")]
    IndexOutOfRange,
    #[error("bracket table entries must have i < j")]
    NotUpperTriangular,
    #[error("Jacobi identity fails at basis triple ({0}, {1}, {2})")]
    JacobiFails(usize, usize, usize),
    #[error("grading incompatible with bracket at basis pair ({0}, {1})")]
    GradingIncompatible(usize, usize),
    #[error("weight tuple arity does not match the grading group")]
    WeightArityMismatch,
    #[error("operands live over different scalar domains")]
    DomainMismatch,
    #[error("gradings live in different groups")]
    GradingGroupMismatch,
    #[error(
        "current algebra: the Lie algebra must live over the coefficient algebra's base field"
    )]
    BaseFieldMismatch,
    #[error("the span is not an ideal (bracket [e_{0}, gen_{1}] escapes)")]
    NotAnIdeal(usize, usize),
    #[error("the map is not a derivation")]
    NotADerivation,
    #[error("the derivation is not skew-symmetric for the form")]
    NotSkew,
    #[error("the bilinear form is degenerate")]
    FormDegenerate,
    #[error("the bilinear form is not invariant")]
    FormNotInvariant,
    #[error("operation requires a field domain")]
    NotAField,
    #[error(transparent)]
    Linalg(#[from] linalg::LinalgError),
}

/// A grading group `Z^free x prod Z/m_i`, with one weight per basis vector.
/// Torsion coordinates are kept normalized in `[0, m_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    pub free: usize,
    pub torsion: Vec<u64>,
    pub weights: Vec<Vec<i64>>,
}

impl Grading {
    pub fn new(free: usize, torsion: Vec<u64>, weights: Vec<Vec<i64>>) -> Result<Self, LieError> {
        let arity = free + torsion.len();
        if weights.iter().any(|w| w.len() != arity) {
            return Err(LieError::WeightArityMismatch);
        }
        let mut g = Grading {
            free,
            torsion,
            weights,
        };
        for w in g.weights.iter_mut() {
            normalize_weight(g.free, &g.torsion, w);
        }
        Ok(g)
    }

    pub fn arity(&self) -> usize {
        self.free + self.torsion.len()
    }

    pub fn same_group(&self, other: &Grading) -> bool {
        self.free == other.free && self.torsion == other.torsion
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
        normalize_weight(self.free, &self.torsion, &mut out);
        out
    }

    pub fn normalize(&self, w: &[i64]) -> Vec<i64> {
        let mut out = w.to_vec();
        normalize_weight(self.free, &self.torsion, &mut out);
        out
    }

    pub fn zero(&self) -> Vec<i64> {
        vec![0; self.arity()]
    }

    pub fn weight_of(&self, i: usize) -> &[i64] {
        &self.weights[i]
    }

    /// Sum of the weights of a set of basis indices.
    pub fn weight_of_subset(&self, subset: &[usize]) -> Vec<i64> {
        let mut acc = self.zero();
        for &i in subset {
            acc = self.add(&acc, &self.weights[i]);
        }
        acc
    }
}

fn normalize_weight(free: usize, torsion: &[u64], w: &mut [i64]) {
    for (t, m) in torsion.iter().enumerate() {
        let m = *m as i64;
        w[free + t] = w[free + t].rem_euclid(m);
    }
}

/// A finite-dimensional Lie algebra over an exact scalar domain, given by
/// structure constants `[e_i, e_j] = sum_k c_{ij}^k e_k` for `i < j`.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    pub domain: ScalarDomain,
    pub dim: usize,
    /// Upper-triangular table: entry for pair (i, j), i < j, is the dense
    /// coefficient vector of `[e_i, e_j]`.
    table: Vec<Vec<RingElem>>,
    pub names: Option<Vec<String>>,
    pub grading: Option<Grading>,
}

#[inline]
fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// Sparse bracket table accepted by [`LieAlgebra::new`]: entries
/// `((i, j), coefficient vector)` with `i < j`.
pub type BracketTable = Vec<((usize, usize), Vec<(usize, RingElem)>)>;

impl LieAlgebra {
    pub fn new(
        domain: ScalarDomain,
        dim: usize,
        entries: BracketTable,
        names: Option<Vec<String>>,
        grading: Option<Grading>,
    ) -> Result<Self, LieError> {
        let n = dim;
        let mut table = vec![vec![domain.zero(); n]; n * (n.saturating_sub(1)) / 2];
        for ((i, j), terms) in entries {
            if i >= n || j >= n || terms.iter().any(|(k, _)| *k >= n) {
                return Err(LieError::IndexOutOfRange);
            }
            if i >= j {
                return Err(LieError::NotUpperTriangular);
            }
            let row = &mut table[pair_index(n, i, j)];
            for (k, c) in terms {
                row[k] = domain.add(&row[k], &c);
            }
        }
        if let Some(g) = &grading {
            if g.weights.len() != n {
                return Err(LieError::WeightArityMismatch);
            }
        }
        let alg = LieAlgebra {
            domain,
            dim,
            table,
            names,
            grading,
        };
        alg.check_jacobi()?;
        alg.check_grading()?;
        Ok(alg)
    }

    /// Coefficient vector of `[e_i, e_j]` (antisymmetrized lookup).
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<RingElem> {
        if i == j {
            return vec![self.domain.zero(); self.dim];
        }
        if i < j {
            self.table[pair_index(self.dim, i, j)].clone()
        } else {
            self.table[pair_index(self.dim, j, i)]
                .iter()
                .map(|c| self.domain.neg(c))
                .collect()
        }
    }

    /// Structure constant `c_{ij}^k` (antisymmetrized lookup, no clone).
    pub fn c(&self, i: usize, j: usize, k: usize) -> RingElem {
        if i == j {
            return self.domain.zero();
        }
        if i < j {
            self.table[pair_index(self.dim, i, j)][k].clone()
        } else {
            self.domain.neg(&self.table[pair_index(self.dim, j, i)][k])
        }
    }

    fn raw(&self, i: usize, j: usize) -> &[RingElem] {
        &self.table[pair_index(self.dim, i, j)]
    }

    /// Iterates the nonzero entries of `[e_i, e_j]` for `i < j`.
    pub fn bracket_terms(&self, i: usize, j: usize) -> impl Iterator<Item = (usize, &RingElem)> {
        self.raw(i, j)
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.domain.is_zero(c))
    }

    /// Bracket of coordinate vectors over the domain.
    pub fn bracket(&self, x: &[RingElem], y: &[RingElem]) -> Vec<RingElem> {
        let d = &self.domain;
        let mut out = vec![d.zero(); self.dim];
        for i in 0..self.dim {
            if d.is_zero(&x[i]) {
                continue;
            }
            for j in 0..self.dim {
                if i == j || d.is_zero(&y[j]) {
                    continue;
                }
                let c = d.mul(&x[i], &y[j]);
                let (a, b, sign) = if i < j { (i, j, false) } else { (j, i, true) };
                for (k, coeff) in self.bracket_terms(a, b) {
                    let term = d.mul(&c, coeff);
                    out[k] = if sign {
                        d.sub(&out[k], &term)
                    } else {
                        d.add(&out[k], &term)
                    };
                }
            }
        }
        out
    }

    fn basis_vector(&self, i: usize) -> Vec<RingElem> {
        let mut v = vec![self.domain.zero(); self.dim];
        v[i] = self.domain.one();
        v
    }

    fn check_jacobi(&self) -> Result<(), LieError> {
        let d = &self.domain;
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                for k in (j + 1)..self.dim {
                    let t1 = self.bracket(&self.basis_vector(i), &self.bracket_basis(j, k));
                    let t2 = self.bracket(&self.basis_vector(j), &self.bracket_basis(k, i));
                    let t3 = self.bracket(&self.basis_vector(k), &self.bracket_basis(i, j));
                    for m in 0..self.dim {
                        let s = d.add(&d.add(&t1[m], &t2[m]), &t3[m]);
                        if !d.is_zero(&s) {
                            return Err(LieError::JacobiFails(i, j, k));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn check_grading(&self) -> Result<(), LieError> {
        let Some(g) = &self.grading else {
            return Ok(());
        };
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let w = g.add(g.weight_of(i), g.weight_of(j));
                for (k, _) in self.bracket_terms(i, j) {
                    if g.weight_of(k) != w.as_slice() {
                        return Err(LieError::GradingIncompatible(i, j));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn with_grading(mut self, grading: Option<Grading>) -> Result<Self, LieError> {
        self.grading = grading;
        self.check_grading()?;
        Ok(self)
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.dim);
        self.names = Some(names);
        self
    }

    pub fn name_of(&self, i: usize) -> String {
        match &self.names {
            Some(ns) => ns[i].clone(),
            None => format!("e{}", i + 1),
        }
    }

    /// Index of a named basis vector.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.as_ref()?.iter().position(|n| n == name)
    }

    /// Restriction of scalars: the same bracket viewed as a Lie algebra over
    /// the base field, of dimension `dim * rank(domain)`. Basis order is
    /// `e_0 a_0, e_0 a_1, ..., e_1 a_0, ...` (module index major). For field
    /// domains this is a clone.
    pub fn restricted(&self) -> LieAlgebra {
        let ScalarDomain::Algebra(alg) = &self.domain else {
            return self.clone();
        };
        let f = alg.base;
        let fd = ScalarDomain::Field(f);
        let d = alg.dim;
        let n = self.dim;
        let nd = n * d;
        let mut entries: BracketTable = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                for s in 0..d {
                    for t in 0..d {
                        let ii = i * d + s;
                        let jj = j * d + t;
                        // [e_i a_s, e_j a_t] = sum_k (a_s a_t c_{ij}^k)
                        let mut terms = Vec::new();
                        for (k, c) in self.bracket_terms(i, j) {
                            let prod = alg.mul_coords(alg.basis_product(s, t), c);
                            for (u, x) in prod.into_iter().enumerate() {
                                if !f.is_zero(&x) {
                                    terms.push((k * d + u, vec![x]));
                                }
                            }
                        }
                        if terms.is_empty() {
                            continue;
                        }
                        // ii < jj always since i < j
                        entries.push(((ii, jj), terms));
                    }
                }
            }
        }
        let grading = self.grading.as_ref().map(|g| Grading {
            free: g.free,
            torsion: g.torsion.clone(),
            weights: (0..nd).map(|x| g.weights[x / d].clone()).collect(),
        });
        LieAlgebra::new(fd, nd, entries, None, grading)
            .expect("restriction of scalars preserves Jacobi")
    }

    /// Base field of the domain (coefficients of all reported dimensions).
    pub fn base(&self) -> BaseField {
        self.domain.base()
    }
}

/// Which descending series to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    LowerCentral,
    Derived,
}

/// Exact bases and dimensions of a descending series, with the derived
/// structure flags. Over a commutative-algebra domain everything is computed
/// after restriction of scalars and dimensions are base-field dimensions.
#[derive(Clone, Debug)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    /// `dims[i]` = dim of the i-th term (starting at the whole algebra).
    pub dims: Vec<usize>,
    pub bases: Vec<Mat>,
    pub nilpotent: bool,
    pub solvable: bool,
    pub metabelian: bool,
    /// Smallest k with `g^{(k+1)} = 0` (lower central series only).
    pub nilpotency_length: Option<usize>,
    /// Smallest k with `D^k g = 0` (derived series only).
    pub solvability_length: Option<usize>,
}

pub fn series(g: &LieAlgebra, kind: SeriesKind) -> SeriesReport {
    let ge = g.restricted();
    let f = ge.base();
    let n = ge.dim;
    let full = Mat::identity(f, n);
    let mut bases = vec![full];
    let mut dims = vec![n];
    loop {
        let cur = bases.last().unwrap();
        let mut gens: Vec<Vec<K>> = Vec::new();
        match kind {
            SeriesKind::LowerCentral => {
                for i in 0..n {
                    let ei = basis_k(f, n, i);
                    for r in 0..cur.rows {
                        gens.push(bracket_k(&ge, &ei, cur.row(r)));
                    }
                }
            }
            SeriesKind::Derived => {
                for a in 0..cur.rows {
                    for b in (a + 1)..cur.rows {
                        gens.push(bracket_k(&ge, cur.row(a), cur.row(b)));
                    }
                }
            }
        }
        let q = Quotient::new(f, n, gens).unwrap();
        let next = q.subspace_basis().clone();
        let d = next.rows;
        let stabilized = d == *dims.last().unwrap();
        dims.push(d);
        bases.push(next);
        if d == 0 || stabilized {
            break;
        }
    }
    let last = *dims.last().unwrap();
    match kind {
        SeriesKind::LowerCentral => {
            let nilpotent = last == 0;
            let nilpotency_length = nilpotent.then(|| dims.iter().filter(|&&d| d > 0).count());
            SeriesReport {
                kind,
                dims,
                bases,
                nilpotent,
                solvable: nilpotent,
                metabelian: false,
                nilpotency_length,
                solvability_length: None,
            }
        }
        SeriesKind::Derived => {
            let solvable = last == 0;
            let solvability_length = solvable.then(|| dims.iter().filter(|&&d| d > 0).count());
            let metabelian = dims.len() > 2 && dims[2] == 0 || dims.get(1) == Some(&0);
            SeriesReport {
                kind,
                dims,
                bases,
                nilpotent: false,
                solvable,
                metabelian,
                nilpotency_length: None,
                solvability_length,
            }
        }
    }
}

fn basis_k(f: BaseField, n: usize, i: usize) -> Vec<K> {
    let mut v = vec![f.zero(); n];
    v[i] = f.one();
    v
}

/// Bracket of base-field coordinate vectors of a field-domain algebra.
pub fn bracket_k(g: &LieAlgebra, x: &[K], y: &[K]) -> Vec<K> {
    debug_assert!(g.domain.is_field());
    let f = g.base();
    let mut out = vec![f.zero(); g.dim];
    for i in 0..g.dim {
        if f.is_zero(&x[i]) {
            continue;
        }
        for j in 0..g.dim {
            if i == j || f.is_zero(&y[j]) {
                continue;
            }
            let c = f.mul(&x[i], &y[j]);
            let (a, b, sign) = if i < j { (i, j, false) } else { (j, i, true) };
            for (k, coeff) in g.bracket_terms(a, b) {
                let term = f.mul(&c, &coeff[0]);
                out[k] = if sign {
                    f.sub(&out[k], &term)
                } else {
                    f.add(&out[k], &term)
                };
            }
        }
    }
    out
}

pub fn direct_product(g1: &LieAlgebra, g2: &LieAlgebra) -> Result<LieAlgebra, LieError> {
    if g1.domain != g2.domain {
        return Err(LieError::DomainMismatch);
    }
    let n1 = g1.dim;
    let n = n1 + g2.dim;
    let mut entries: BracketTable = Vec::new();
    for i in 0..n1 {
        for j in (i + 1)..n1 {
            let terms: Vec<_> = g1
                .bracket_terms(i, j)
                .map(|(k, c)| (k, c.clone()))
                .collect();
            if !terms.is_empty() {
                entries.push(((i, j), terms));
            }
        }
    }
    for i in 0..g2.dim {
        for j in (i + 1)..g2.dim {
            let terms: Vec<_> = g2
                .bracket_terms(i, j)
                .map(|(k, c)| (n1 + k, c.clone()))
                .collect();
            if !terms.is_empty() {
                entries.push(((n1 + i, n1 + j), terms));
            }
        }
    }
    let grading = match (&g1.grading, &g2.grading) {
        (Some(a), Some(b)) => {
            if !a.same_group(b) {
                return Err(LieError::GradingGroupMismatch);
            }
            let mut w = a.weights.clone();
            w.extend(b.weights.iter().cloned());
            Some(Grading::new(a.free, a.torsion.clone(), w)?)
        }
        _ => None,
    };
    LieAlgebra::new(g1.domain.clone(), n, entries, None, grading)
}

/// Quotient by the ideal spanned by the given base-field coordinate vectors
/// (of the restricted-scalars space when the domain is a commutative
/// algebra). The span is verified to be an ideal.
pub fn quotient_by_ideal(g: &LieAlgebra, gens: &[Vec<K>]) -> Result<LieAlgebra, LieError> {
    let ge = g.restricted();
    let f = ge.base();
    let n = ge.dim;
    for v in gens {
        if v.len() != n {
            return Err(LieError::Linalg(linalg::LinalgError::DimensionMismatch {
                want: n,
                got: v.len(),
            }));
        }
    }
    let w = Quotient::new(f, n, gens.to_vec())?;
    for i in 0..n {
        let ei = basis_k(f, n, i);
        for r in 0..w.subspace_basis().rows {
            let b = bracket_k(&ge, &ei, w.subspace_basis().row(r));
            if !w.contains(&b) {
                return Err(LieError::NotAnIdeal(i, r));
            }
        }
    }
    let comp = w.complement_indices();
    let m = comp.len();
    let mut entries: BracketTable = Vec::new();
    for a in 0..m {
        for b in (a + 1)..m {
            let v = w.reduce(&bracket_k(
                &ge,
                &basis_k(f, n, comp[a]),
                &basis_k(f, n, comp[b]),
            ));
            let mut terms = Vec::new();
            for (t, &src) in comp.iter().enumerate() {
                if !f.is_zero(&v[src]) {
                    terms.push((t, vec![v[src].clone()]));
                }
            }
            if !terms.is_empty() {
                entries.push(((a, b), terms));
            }
        }
    }
    LieAlgebra::new(ScalarDomain::Field(f), m, entries, None, None)
}

/// The current Lie algebra `A (x) l` over the base field of `A`, of dimension
/// `dim(A) * dim(l)`, with `[a x, b y] = ab (x) [x, y]`. Basis order is
/// `a_0 (x) x_0, ..., a_0 (x) x_{n-1}, a_1 (x) x_0, ...` (coefficient-algebra
/// index major). If `l` is graded the current algebra inherits the grading
/// with `A` in degree 0.
pub fn current_algebra(coeffs: &ScalarDomain, l: &LieAlgebra) -> Result<LieAlgebra, LieError> {
    let ScalarDomain::Algebra(alg) = coeffs else {
        // A = K: the current algebra is l itself
        return Ok(l.clone());
    };
    if !l.domain.is_field() || l.base() != alg.base {
        return Err(LieError::BaseFieldMismatch);
    }
    let f = alg.base;
    let d = alg.dim;
    let n = l.dim;
    let mut entries: BracketTable = Vec::new();
    for s in 0..d {
        for t in 0..d {
            for i in 0..n {
                for j in (i + 1)..n {
                    let ii = s * n + i;
                    let jj = t * n + j;
                    if ii >= jj {
                        continue;
                    }
                    let mut terms = Vec::new();
                    for (k, c) in l.bracket_terms(i, j) {
                        for (u, m) in alg.basis_product(s, t).iter().enumerate() {
                            if f.is_zero(m) {
                                continue;
                            }
                            terms.push((u * n + k, vec![f.mul(m, &c[0])]));
                        }
                    }
                    if !terms.is_empty() {
                        entries.push(((ii, jj), terms));
                    }
                }
            }
        }
    }
    // pairs with s > t and i < j were skipped when ii > jj: recover them from
    // the transposed pair via antisymmetry: [a_s x_i, a_t x_j] with s*n+i > t*n+j
    // equals -[a_t x_j, a_s x_i], which the loop above records at ((t,j),(s,i)).
    for s in 0..d {
        for t in 0..d {
            for i in 0..n {
                for j in (i + 1)..n {
                    let ii = s * n + i;
                    let jj = t * n + j;
                    if ii < jj {
                        continue;
                    }
                    let mut terms = Vec::new();
                    for (k, c) in l.bracket_terms(i, j) {
                        for (u, m) in alg.basis_product(s, t).iter().enumerate() {
                            if f.is_zero(m) {
                                continue;
                            }
                            terms.push((u * n + k, vec![f.neg(&f.mul(m, &c[0]))]));
                        }
                    }
                    if !terms.is_empty() {
                        entries.push(((jj, ii), terms));
                    }
                }
            }
        }
    }
    let grading = l.grading.as_ref().map(|gr| Grading {
        free: gr.free,
        torsion: gr.torsion.clone(),
        weights: (0..d * n).map(|x| gr.weights[x % n].clone()).collect(),
    });
    LieAlgebra::new(ScalarDomain::Field(f), d * n, entries, None, grading)
}

/// The coadjoint semidirect product `g |x g*`: dimension `2n`, `g*` an abelian
/// ideal carrying the coadjoint action `[x, xi] = -xi([x, .])`, graded in
/// `{0, 1}` with `g` in degree 0. Basis order: `e_0..e_{n-1}` then the dual
/// basis `e_0*..e_{n-1}*`.
pub fn coadjoint_double(g: &LieAlgebra) -> Result<LieAlgebra, LieError> {
    if !g.domain.is_field() {
        return Err(LieError::NotAField);
    }
    let f = g.base();
    let n = g.dim;
    let mut entries: BracketTable = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let terms: Vec<_> = g
                .bracket_terms(i, j)
                .map(|(k, c)| (k, vec![c[0].clone()]))
                .collect();
            if !terms.is_empty() {
                entries.push(((i, j), terms));
            }
        }
    }
    // [e_i, e_j*] = -sum_k c_{ik}^j e_k*
    for i in 0..n {
        for j in 0..n {
            let mut terms = Vec::new();
            for k in 0..n {
                let c = g.c(i, k, j);
                if !g.domain.is_zero(&c) {
                    terms.push((n + k, vec![f.neg(&c[0])]));
                }
            }
            if !terms.is_empty() {
                entries.push(((i, n + j), terms));
            }
        }
    }
    let mut weights = vec![vec![0i64]; n];
    weights.extend(vec![vec![1i64]; n]);
    let grading = Grading::new(1, vec![], weights)?;
    let names = (0..n)
        .map(|i| g.name_of(i))
        .chain((0..n).map(|i| format!("{}*", g.name_of(i))))
        .collect();
    LieAlgebra::new(g.domain.clone(), 2 * n, entries, Some(names), Some(grading))
}

/// A symmetric bilinear form on a field-domain Lie algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct BilinearForm {
    pub mat: Mat,
}

impl BilinearForm {
    pub fn new(mat: Mat) -> Self {
        assert_eq!(mat.rows, mat.cols);
        BilinearForm { mat }
    }

    pub fn from_entries(f: BaseField, n: usize, entries: &[(usize, usize, K)]) -> Self {
        let mut m = Mat::zeros(f, n, n);
        for (i, j, c) in entries {
            m.set(*i, *j, c.clone());
            if i != j {
                m.set(*j, *i, c.clone());
            }
        }
        BilinearForm::new(m)
    }

    pub fn dim(&self) -> usize {
        self.mat.rows
    }

    pub fn eval(&self, i: usize, j: usize) -> &K {
        self.mat.at(i, j)
    }

    pub fn eval_vec(&self, x: &[K], y: &[K]) -> K {
        let f = self.mat.field;
        let mut acc = f.zero();
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if f.is_zero(yj) {
                    continue;
                }
                acc = f.add(&acc, &f.mul(&f.mul(xi, yj), self.mat.at(i, j)));
            }
        }
        acc
    }

    pub fn is_symmetric(&self) -> bool {
        self.mat == self.mat.transpose()
    }

    /// `B([x,y],z) = B(x,[y,z])` on all basis triples.
    pub fn is_invariant(&self, g: &LieAlgebra) -> bool {
        debug_assert!(g.domain.is_field());
        let f = self.mat.field;
        let n = g.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut lhs = f.zero();
                    for m in 0..n {
                        let c = g.c(i, j, m);
                        if !f.is_zero(&c[0]) {
                            lhs = f.add(&lhs, &f.mul(&c[0], self.mat.at(m, k)));
                        }
                    }
                    let mut rhs = f.zero();
                    for m in 0..n {
                        let c = g.c(j, k, m);
                        if !f.is_zero(&c[0]) {
                            rhs = f.add(&rhs, &f.mul(&c[0], self.mat.at(i, m)));
                        }
                    }
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Basis of the radical `{v : B(v, .) = 0}`.
    pub fn kernel(&self) -> Vec<Vec<K>> {
        linalg::nullspace(&self.mat)
    }

    pub fn is_nondegenerate(&self) -> bool {
        linalg::rank(&self.mat) == self.mat.rows
    }
}

/// Double extension of a regular quadratic Lie algebra `(h, form)` by a
/// skew-symmetric derivation `D`. The result has basis `(e, f, h_1..h_n)`
/// with `[e, x] = Dx`, `[x, y] = [x, y]_h + <Dx, y> f`, `f` central, and the
/// extended form `<e, f> = 1`, `e, f` isotropic and orthogonal to `h`.
pub fn double_extension(
    h: &LieAlgebra,
    form: &BilinearForm,
    d: &Mat,
) -> Result<(LieAlgebra, BilinearForm), LieError> {
    if !h.domain.is_field() {
        return Err(LieError::NotAField);
    }
    let f = h.base();
    let n = h.dim;
    assert_eq!(d.rows, n);
    assert_eq!(d.cols, n);
    if !form.is_symmetric() || !form.is_invariant(h) {
        return Err(LieError::FormNotInvariant);
    }
    if !form.is_nondegenerate() {
        return Err(LieError::FormDegenerate);
    }
    // D a derivation: D[x,y] = [Dx,y] + [x,Dy] on basis pairs
    for i in 0..n {
        for j in (i + 1)..n {
            let br: Vec<K> = h.bracket_basis(i, j).iter().map(|c| c[0].clone()).collect();
            let lhs = d.apply(&br);
            let di = d.col(i);
            let dj = d.col(j);
            let ei = basis_k(f, n, i);
            let ej = basis_k(f, n, j);
            let rhs1 = bracket_k(h, &di, &ej);
            let rhs2 = bracket_k(h, &ei, &dj);
            for t in 0..n {
                if lhs[t] != f.add(&rhs1[t], &rhs2[t]) {
                    return Err(LieError::NotADerivation);
                }
            }
        }
    }
    // skew: <Dx, y> + <x, Dy> = 0
    for i in 0..n {
        for j in 0..n {
            let di = d.col(i);
            let dj = d.col(j);
            let a = form.eval_vec(&di, &basis_k(f, n, j));
            let b = form.eval_vec(&basis_k(f, n, i), &dj);
            if !f.is_zero(&f.add(&a, &b)) {
                return Err(LieError::NotSkew);
            }
        }
    }
    let m = n + 2; // e at 0, f at 1, h shifted by 2
    let mut entries: BracketTable = Vec::new();
    for i in 0..n {
        // [e, h_i] = D h_i
        let col = d.col(i);
        let terms: Vec<_> = col
            .iter()
            .enumerate()
            .filter(|(_, c)| !f.is_zero(c))
            .map(|(k, c)| (k + 2, vec![c.clone()]))
            .collect();
        if !terms.is_empty() {
            entries.push(((0, i + 2), terms));
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let mut terms: Vec<_> = h
                .bracket_terms(i, j)
                .map(|(k, c)| (k + 2, vec![c[0].clone()]))
                .collect();
            let coeff = form.eval_vec(&d.col(i), &basis_k(f, n, j));
            if !f.is_zero(&coeff) {
                terms.push((1, vec![coeff]));
            }
            if !terms.is_empty() {
                entries.push(((i + 2, j + 2), terms));
            }
        }
    }
    let names: Vec<String> = ["e".to_string(), "f".to_string()]
        .into_iter()
        .chain((0..n).map(|i| h.name_of(i)))
        .collect();
    let alg = LieAlgebra::new(h.domain.clone(), m, entries, Some(names), None)?;
    let mut fm = Mat::zeros(f, m, m);
    fm.set(0, 1, f.one());
    fm.set(1, 0, f.one());
    for i in 0..n {
        for j in 0..n {
            fm.set(i + 2, j + 2, form.mat.at(i, j).clone());
        }
    }
    let out_form = BilinearForm::new(fm);
    if !out_form.is_invariant(&alg) {
        return Err(LieError::FormNotInvariant);
    }
    if !out_form.is_nondegenerate() {
        return Err(LieError::FormDegenerate);
    }
    Ok((alg, out_form))
}

/// Basis of the derivation algebra `Der(g)`: solutions `D` of
/// `D[x,y] = [Dx,y] + [x,Dy]` on all basis pairs, as `n x n` matrices.
pub fn derivation_algebra(g: &LieAlgebra) -> Result<Vec<Mat>, LieError> {
    if !g.domain.is_field() {
        return Err(LieError::NotAField);
    }
    let f = g.base();
    let n = g.dim;
    // unknowns D_{ab} (coefficient of e_a in D e_b), flattened a*n + b
    let mut rows: Vec<Vec<K>> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in 0..n {
                let mut row = vec![f.zero(); n * n];
                let mut nonzero = false;
                for (m, c) in g.bracket_terms(i, j) {
                    row[k * n + m] = f.add(&row[k * n + m], &c[0]);
                    nonzero = true;
                }
                for a in 0..n {
                    let c = g.c(a, j, k);
                    if !f.is_zero(&c[0]) {
                        row[a * n + i] = f.sub(&row[a * n + i], &c[0]);
                        nonzero = true;
                    }
                    let c2 = g.c(i, a, k);
                    if !f.is_zero(&c2[0]) {
                        row[a * n + j] = f.sub(&row[a * n + j], &c2[0]);
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
        // abelian: every matrix is a derivation
        (0..n * n)
            .map(|t| {
                let mut v = vec![f.zero(); n * n];
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
            for a in 0..n {
                for b in 0..n {
                    m.set(a, b, v[a * n + b].clone());
                }
            }
            m
        })
        .collect())
}

/// Verdict of the Engel flag check on `Der(g)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EngelVerdict {
    AllNilpotent,
    /// The joint kernel of the induced derivations became zero at this flag
    /// stage, so some derivation is not nilpotent.
    NotAllNilpotent {
        stage: usize,
    },
}

/// Decides whether every derivation of `g` is nilpotent, by the Engel flag:
/// iteratively take the joint kernel of all derivations on the current
/// quotient. The flag exhausts the space iff all derivations are nilpotent.
pub fn all_derivations_nilpotent(g: &LieAlgebra) -> Result<EngelVerdict, LieError> {
    let ders = derivation_algebra(g)?;
    let f = g.base();
    let n = g.dim;
    let mut u = Quotient::new(f, n, Vec::<Vec<K>>::new())?;
    let mut stage = 0usize;
    loop {
        // W = {v : Dv in U for all D}
        let mut rows: Vec<Vec<K>> = Vec::new();
        for d in &ders {
            let cols: Vec<Vec<K>> = (0..n).map(|b| u.reduce(&d.col(b))).collect();
            for r in 0..n {
                let row: Vec<K> = (0..n).map(|b| cols[b][r].clone()).collect();
                if row.iter().any(|x| !f.is_zero(x)) {
                    rows.push(row);
                }
            }
        }
        let w = if rows.is_empty() {
            Quotient::new(f, n, (0..n).map(|i| basis_k(f, n, i)).collect::<Vec<_>>())?
        } else {
            let ns = linalg::nullspace(&Mat::from_rows(f, rows));
            Quotient::new(f, n, ns)?
        };
        if w.subspace_dim() == n {
            return Ok(EngelVerdict::AllNilpotent);
        }
        if w.subspace_dim() == u.subspace_dim() {
            return Ok(EngelVerdict::NotAllNilpotent { stage });
        }
        u = w;
        stage += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn heisenberg(f: BaseField) -> LieAlgebra {
        let d = ScalarDomain::Field(f);
        let one = d.one();
        LieAlgebra::new(
            d,
            3,
            vec![((0, 1), vec![(2, one)])],
            Some(vec!["x".into(), "y".into(), "z".into()]),
            Some(Grading::new(1, vec![], vec![vec![1], vec![1], vec![2]]).unwrap()),
        )
        .unwrap()
    }

    #[test]
    fn heisenberg_is_valid_and_nilpotent() {
        let g = heisenberg(BaseField::Q);
        let s = series(&g, SeriesKind::LowerCentral);
        assert_eq!(s.dims, vec![3, 1, 0]);
        assert!(s.nilpotent);
        assert_eq!(s.nilpotency_length, Some(2));
    }

    #[test]
    fn jacobi_failure_reported() {
        let d = ScalarDomain::rationals();
        let one = d.one();
        // [x,y] = z together with [x,z] = x has jac(x,y,z) = z != 0
        let bad = LieAlgebra::new(
            d.clone(),
            3,
            vec![((0, 1), vec![(2, one.clone())]), ((0, 2), vec![(0, one)])],
            None,
            None,
        );
        assert!(matches!(bad, Err(LieError::JacobiFails(0, 1, 2))));
    }

    #[test]
    fn grading_incompatibility_reported() {
        let d = ScalarDomain::rationals();
        let one = d.one();
        let bad = LieAlgebra::new(
            d,
            3,
            vec![((0, 1), vec![(2, one)])],
            None,
            Some(Grading::new(1, vec![], vec![vec![1], vec![1], vec![3]]).unwrap()),
        );
        assert!(matches!(bad, Err(LieError::GradingIncompatible(0, 1))));
    }

    #[test]
    fn quotient_of_heisenberg_by_center() {
        let g = heisenberg(BaseField::Q);
        let f = BaseField::Q;
        let center = vec![vec![f.zero(), f.zero(), f.one()]];
        let q = quotient_by_ideal(&g, &center).unwrap();
        assert_eq!(q.dim, 2);
        // abelian
        assert!(q.bracket_terms(0, 1).next().is_none());
        // a non-ideal subspace is rejected
        let not_ideal = vec![vec![f.one(), f.zero(), f.zero()]];
        assert!(matches!(
            quotient_by_ideal(&g, &not_ideal),
            Err(LieError::NotAnIdeal(_, _))
        ));
    }

    #[test]
    fn abelian_products() {
        let d = ScalarDomain::rationals();
        let a2 = LieAlgebra::new(d.clone(), 2, vec![], None, None).unwrap();
        let a3 = LieAlgebra::new(d, 3, vec![], None, None).unwrap();
        let p = direct_product(&a2, &a3).unwrap();
        assert_eq!(p.dim, 5);
        let s = series(&p, SeriesKind::LowerCentral);
        assert_eq!(s.nilpotency_length, Some(1));
    }

    #[test]
    fn current_algebra_of_heisenberg() {
        let l = heisenberg(BaseField::Q);
        let a = ScalarDomain::truncated_polynomial(BaseField::Q, 3).unwrap();
        let c = current_algebra(&a, &l).unwrap();
        assert_eq!(c.dim, 9);
        let s = series(&c, SeriesKind::LowerCentral);
        assert_eq!(s.nilpotency_length, Some(2));
        // A = K gives back l
        let k = ScalarDomain::rationals();
        let same = current_algebra(&k, &l).unwrap();
        assert_eq!(same.dim, 3);
    }

    #[test]
    fn abelian_coadjoint() {
        let d = ScalarDomain::rationals();
        let a = LieAlgebra::new(d, 3, vec![], None, None).unwrap();
        let c = coadjoint_double(&a).unwrap();
        assert_eq!(c.dim, 6);
        let s = series(&c, SeriesKind::LowerCentral);
        assert_eq!(s.nilpotency_length, Some(1));
    }

    #[test]
    fn two_dim_nonabelian_coadjoint_is_solvable() {
        let d = ScalarDomain::rationals();
        let one = d.one();
        let g = LieAlgebra::new(d, 2, vec![((0, 1), vec![(1, one)])], None, None).unwrap();
        let c = coadjoint_double(&g).unwrap();
        assert_eq!(c.dim, 4);
        let s = series(&c, SeriesKind::Derived);
        assert!(s.solvable);
        let lc = series(&c, SeriesKind::LowerCentral);
        assert!(!lc.nilpotent);
    }

    #[test]
    fn trivial_double_extension() {
        let d = ScalarDomain::rationals();
        let f = BaseField::Q;
        let h = LieAlgebra::new(d, 1, vec![], None, None).unwrap();
        let form = BilinearForm::new(Mat::identity(f, 1));
        let dmat = Mat::zeros(f, 1, 1);
        let (g, bf) = double_extension(&h, &form, &dmat).unwrap();
        assert_eq!(g.dim, 3);
        let s = series(&g, SeriesKind::LowerCentral);
        assert_eq!(s.nilpotency_length, Some(1)); // abelian(3)
        assert!(bf.is_nondegenerate());
    }

    #[test]
    fn hyperbolic_double_extension() {
        let d = ScalarDomain::rationals();
        let f = BaseField::Q;
        let h = LieAlgebra::new(d, 2, vec![], None, None).unwrap();
        let form = BilinearForm::from_entries(f, 2, &[(0, 1, f.one())]);
        // a rank-1 nilpotent candidate is not skew for the hyperbolic form
        let mut dm = Mat::zeros(f, 2, 2);
        dm.set(0, 1, f.one());
        assert_eq!(
            double_extension(&h, &form, &dm).unwrap_err(),
            LieError::NotSkew
        );
        // D = diag(1,-1) is skew but not nilpotent: valid input, solvable output
        let mut dm = Mat::zeros(f, 2, 2);
        dm.set(0, 0, f.one());
        dm.set(1, 1, f.from_i64(-1));
        let (g, bf) = double_extension(&h, &form, &dm).unwrap();
        assert_eq!(g.dim, 4);
        assert!(bf.is_nondegenerate());
        assert!(series(&g, SeriesKind::Derived).solvable);
        assert!(!series(&g, SeriesKind::LowerCentral).nilpotent);
    }

    #[test]
    fn derivations_of_small_algebras() {
        let d = ScalarDomain::rationals();
        let ab = LieAlgebra::new(d, 2, vec![], None, None).unwrap();
        let ders = derivation_algebra(&ab).unwrap();
        assert_eq!(ders.len(), 4);
        assert_eq!(
            all_derivations_nilpotent(&ab).unwrap(),
            EngelVerdict::NotAllNilpotent { stage: 0 }
        );
        let h = heisenberg(BaseField::Q);
        let ders = derivation_algebra(&h).unwrap();
        assert_eq!(ders.len(), 6);
        assert!(matches!(
            all_derivations_nilpotent(&h).unwrap(),
            EngelVerdict::NotAllNilpotent { .. }
        ));
    }

    #[test]
    fn lower_central_series_is_a_filtration() {
        // [g^(i), g^(j)] inside g^(i+j), spot-checked on basis rows
        let d = ScalarDomain::rationals();
        let one = d.one();
        let mut entries: BracketTable = Vec::new();
        for i in 1..6 {
            entries.push(((0, i), vec![(i + 1, one.clone())]));
        }
        let g = LieAlgebra::new(d, 7, entries, None, None).unwrap(); // filiform(7)
        let s = series(&g, SeriesKind::LowerCentral);
        let f = g.base();
        for i in 0..s.bases.len() {
            for j in 0..s.bases.len() {
                let tgt = (i + j + 1).min(s.bases.len() - 1);
                let target = Quotient::new(
                    f,
                    7,
                    (0..s.bases[tgt].rows)
                        .map(|r| s.bases[tgt].row(r).to_vec())
                        .collect::<Vec<_>>(),
                )
                .unwrap();
                for a in 0..s.bases[i].rows {
                    for b in 0..s.bases[j].rows {
                        let br = bracket_k(&g, s.bases[i].row(a), s.bases[j].row(b));
                        assert!(target.contains(&br), "i={i} j={j}");
                    }
                }
            }
        }
    }

    #[test]
    fn restriction_of_scalars_algebra() {
        let dom = ScalarDomain::truncated_polynomial(BaseField::Q, 2).unwrap();
        let f = BaseField::Q;
        let eps = vec![f.zero(), f.one()];
        // the rank-3 algebra [e_i, e_{i+1}] = eps e_{i+2} (indices mod 3)
        let g = LieAlgebra::new(
            dom,
            3,
            vec![
                ((0, 1), vec![(2, eps.clone())]),
                ((1, 2), vec![(0, eps.clone())]),
                ((0, 2), vec![(1, vec![f.zero(), f.from_i64(-1)])]),
            ],
            None,
            None,
        )
        .unwrap();
        let r = g.restricted();
        assert_eq!(r.dim, 6);
        let s = series(&g, SeriesKind::LowerCentral);
        assert_eq!(s.nilpotency_length, Some(2));
    }
}
