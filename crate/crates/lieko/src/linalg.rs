//! Exact dense linear algebra over the base field: reduced echelon forms,
//! rank/nullspace, quotient presentations, and restriction of scalars for
//! modules over a commutative algebra.
//!
//! Over `Q` the elimination is fraction-free: rows are cleared to integers and
//! combined by cross-multiplication with a gcd normalization after every step,
//! which keeps intermediate entries small on the sparse matrices this crate
//! produces. Over `F_p` it is plain Gauss-Jordan. Pivots are always the first
//! nonzero entry in column order, so every reported basis is reproducible
//! bit-for-bit.

use crate::scalars::{as_rational, BaseField, RingElem, ScalarDomain, K};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Default guard against runaway dense eliminations.
pub const MAX_ENTRIES: usize = 5_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("vector length {got} does not match ambient dimension {want}")]
    DimensionMismatch { want: usize, got: usize },
    #[error("matrix of {rows} x {cols} entries exceeds the size guard ({max})")]
    TooLarge {
        rows: usize,
        cols: usize,
        max: usize,
    },
}

pub fn guard(rows: usize, cols: usize) -> Result<(), LinalgError> {
    match rows.checked_mul(cols) {
        Some(n) if n <= MAX_ENTRIES => Ok(()),
        _ => Err(LinalgError::TooLarge {
            rows,
            cols,
            max: MAX_ENTRIES,
        }),
    }
}

/// Dense row-major matrix over a base field.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub field: BaseField,
    data: Vec<K>,
}

impl Mat {
    pub fn zeros(field: BaseField, rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: BaseField, n: usize) -> Self {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: BaseField, rows: Vec<Vec<K>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c));
        Mat {
            rows: r,
            cols: c,
            field,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_cols(field: BaseField, cols: Vec<Vec<K>>, ambient: usize) -> Self {
        let c = cols.len();
        let mut m = Mat::zeros(field, ambient, c);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), ambient);
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> &K {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: K) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[K] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<K> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut m = Mat::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(c, r, self.at(r, c).clone());
            }
        }
        m
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows);
        let f = self.field;
        let mut m = Mat::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if f.is_zero(a) {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if f.is_zero(b) {
                        continue;
                    }
                    let v = f.add(m.at(r, c), &f.mul(a, b));
                    m.set(r, c, v);
                }
            }
        }
        m
    }

    pub fn apply(&self, v: &[K]) -> Vec<K> {
        assert_eq!(v.len(), self.cols);
        let f = self.field;
        let mut out = vec![f.zero(); self.rows];
        for r in 0..self.rows {
            let mut acc = f.zero();
            for c in 0..self.cols {
                let a = self.at(r, c);
                if f.is_zero(a) || f.is_zero(&v[c]) {
                    continue;
                }
                acc = f.add(&acc, &f.mul(a, &v[c]));
            }
            out[r] = acc;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }
}

/// Reduced row echelon form together with its pivot columns.
pub struct Rref {
    pub rank: usize,
    pub pivots: Vec<usize>,
    /// The nonzero rows of the RREF (rank-many rows).
    pub mat: Mat,
}

pub fn rref(m: &Mat) -> Rref {
    match m.field {
        BaseField::Q => rref_q(m),
        BaseField::Fp(p) => rref_fp(m, p),
    }
}

fn normalize_int_row(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in row.iter_mut() {
        *x = &*x / &g;
    }
}

fn rref_q(m: &Mat) -> Rref {
    // clear denominators row by row
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(m.rows);
    for r in 0..m.rows {
        let mut lcm = BigInt::one();
        for c in 0..m.cols {
            let x = as_rational(m.at(r, c));
            if !x.is_zero() {
                lcm = lcm.lcm(x.denom());
            }
        }
        let mut row: Vec<BigInt> = Vec::with_capacity(m.cols);
        for c in 0..m.cols {
            let x = as_rational(m.at(r, c));
            row.push(x.numer() * (&lcm / x.denom()));
        }
        normalize_int_row(&mut row);
        rows.push(row);
    }
    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for c in 0..m.cols {
        let mut pr = None;
        for (i, row) in rows.iter().enumerate().skip(rank) {
            if !row[c].is_zero() {
                pr = Some(i);
                break;
            }
        }
        let Some(pr) = pr else { continue };
        rows.swap(rank, pr);
        let pivot = rows[rank][c].clone();
        for i in 0..rows.len() {
            if i == rank || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            // row_i := pivot*row_i - f*row_pivot, then shrink by the gcd
            let (pre, post) = rows.split_at_mut(rank.max(i));
            let (ri, rp) = if i < rank {
                (&mut pre[i], &post[0])
            } else {
                (&mut post[0], &pre[rank])
            };
            for (x, y) in ri.iter_mut().zip(rp.iter()) {
                if y.is_zero() {
                    if !x.is_zero() {
                        *x = &*x * &pivot;
                    }
                } else {
                    *x = &*x * &pivot - &f * y;
                }
            }
            normalize_int_row(ri);
        }
        pivots.push(c);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    // divide each pivot row by its pivot to land in rational RREF
    let mut out = Mat::zeros(BaseField::Q, rank, m.cols);
    for (r, &pc) in pivots.iter().enumerate() {
        let pivot = rows[r][pc].clone();
        for c in 0..m.cols {
            if !rows[r][c].is_zero() {
                out.set(
                    r,
                    c,
                    K::Q(BigRational::new(rows[r][c].clone(), pivot.clone())),
                );
            }
        }
    }
    Rref {
        rank,
        pivots,
        mat: out,
    }
}

fn rref_fp(m: &Mat, p: u64) -> Rref {
    let f = BaseField::Fp(p);
    let get = |x: &K| -> u64 {
        match x {
            K::F(v) => *v,
            _ => unreachable!(),
        }
    };
    let mut rows: Vec<Vec<u64>> = (0..m.rows)
        .map(|r| (0..m.cols).map(|c| get(m.at(r, c))).collect())
        .collect();
    let mulp = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for c in 0..m.cols {
        let mut pr = None;
        for (i, row) in rows.iter().enumerate().skip(rank) {
            if row[c] != 0 {
                pr = Some(i);
                break;
            }
        }
        let Some(pr) = pr else { continue };
        rows.swap(rank, pr);
        let inv = match f.try_inv(&K::F(rows[rank][c])) {
            Some(K::F(v)) => v,
            _ => unreachable!(),
        };
        for x in rows[rank].iter_mut() {
            *x = mulp(*x, inv);
        }
        for i in 0..rows.len() {
            if i == rank || rows[i][c] == 0 {
                continue;
            }
            let fac = rows[i][c];
            let (pre, post) = rows.split_at_mut(rank.max(i));
            let (ri, rp) = if i < rank {
                (&mut pre[i], &post[0])
            } else {
                (&mut post[0], &pre[rank])
            };
            for (x, y) in ri.iter_mut().zip(rp.iter()) {
                if *y != 0 {
                    *x = (*x + p - mulp(fac, *y)) % p;
                }
            }
        }
        pivots.push(c);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    let mut out = Mat::zeros(f, rank, m.cols);
    for r in 0..rank {
        for c in 0..m.cols {
            if rows[r][c] != 0 {
                out.set(r, c, K::F(rows[r][c]));
            }
        }
    }
    Rref {
        rank,
        pivots,
        mat: out,
    }
}

pub fn rank(m: &Mat) -> usize {
    rref(m).rank
}

/// Rank and a nullspace basis (the canonical RREF kernel basis, one vector per
/// free column, in column order).
pub fn rank_nullspace(m: &Mat) -> (usize, Vec<Vec<K>>) {
    let f = m.field;
    let r = rref(m);
    let pivot_set: Vec<bool> = {
        let mut v = vec![false; m.cols];
        for &c in &r.pivots {
            v[c] = true;
        }
        v
    };
    let mut basis = Vec::new();
    for j in 0..m.cols {
        if pivot_set[j] {
            continue;
        }
        let mut v = vec![f.zero(); m.cols];
        v[j] = f.one();
        for (i, &pc) in r.pivots.iter().enumerate() {
            let x = r.mat.at(i, j);
            if !f.is_zero(x) {
                v[pc] = f.neg(x);
            }
        }
        basis.push(v);
    }
    (r.rank, basis)
}

pub fn nullspace(m: &Mat) -> Vec<Vec<K>> {
    rank_nullspace(m).1
}

/// A quotient of `K^ambient` by the span of a set of generators, with a
/// canonical reduction map. `reduce(v) = 0` iff `v` lies in the subspace;
/// the class of `v` is read off on the non-pivot coordinates.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub field: BaseField,
    pub ambient: usize,
    /// RREF basis of the subspace being quotiented out.
    basis: Mat,
    pivots: Vec<usize>,
}

impl Quotient {
    pub fn new<I>(field: BaseField, ambient: usize, gens: I) -> Result<Self, LinalgError>
    where
        I: IntoIterator<Item = Vec<K>>,
    {
        let mut rows = Vec::new();
        for g in gens {
            if g.len() != ambient {
                return Err(LinalgError::DimensionMismatch {
                    want: ambient,
                    got: g.len(),
                });
            }
            rows.push(g);
        }
        let m = Mat::from_rows(field, rows);
        let m = if m.rows == 0 {
            Mat::zeros(field, 0, ambient)
        } else {
            m
        };
        let r = rref(&m);
        Ok(Quotient {
            field,
            ambient,
            basis: r.mat,
            pivots: r.pivots,
        })
    }

    pub fn subspace_dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn quotient_dim(&self) -> usize {
        self.ambient - self.pivots.len()
    }

    /// Basis of the subspace (RREF rows).
    pub fn subspace_basis(&self) -> &Mat {
        &self.basis
    }

    /// Canonical representative of the class of `v`: pivot coordinates are
    /// cleared against the subspace basis. Linear and idempotent.
    pub fn reduce(&self, v: &[K]) -> Vec<K> {
        assert_eq!(v.len(), self.ambient);
        let f = self.field;
        let mut out = v.to_vec();
        for (i, &pc) in self.pivots.iter().enumerate() {
            if f.is_zero(&out[pc]) {
                continue;
            }
            let fac = out[pc].clone();
            for c in 0..self.ambient {
                let b = self.basis.at(i, c);
                if !f.is_zero(b) {
                    out[c] = f.sub(&out[c], &f.mul(&fac, b));
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[K]) -> bool {
        let f = self.field;
        self.reduce(v).iter().all(|x| f.is_zero(x))
    }

    /// Coordinates of the class of `v` in the canonical complement basis
    /// (the non-pivot coordinates of the reduced representative).
    pub fn class_coords(&self, v: &[K]) -> Vec<K> {
        let red = self.reduce(v);
        let mut pivot = vec![false; self.ambient];
        for &c in &self.pivots {
            pivot[c] = true;
        }
        red.into_iter()
            .zip(pivot)
            .filter_map(|(x, p)| if p { None } else { Some(x) })
            .collect()
    }

    /// Indices of the ambient coordinates that represent the quotient.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut pivot = vec![false; self.ambient];
        for &c in &self.pivots {
            pivot[c] = true;
        }
        (0..self.ambient).filter(|&i| !pivot[i]).collect()
    }
}

/// A matrix with entries in a [`ScalarDomain`] (used for maps of free modules
/// over a commutative algebra before restriction of scalars).
#[derive(Clone, Debug)]
pub struct RMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<RingElem>,
}

impl RMat {
    pub fn zeros(domain: &ScalarDomain, rows: usize, cols: usize) -> Self {
        RMat {
            rows,
            cols,
            data: vec![domain.zero(); rows * cols],
        }
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> &RingElem {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: RingElem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_at(&mut self, domain: &ScalarDomain, r: usize, c: usize, v: &RingElem) {
        let cur = self.at(r, c).clone();
        self.set(r, c, domain.add(&cur, v));
    }
}

/// Forgets the algebra action: the K-matrix of the same map, of shape
/// `(rows*d) x (cols*d)` where `d` is the domain rank. For field domains this
/// is the matrix itself.
pub fn restrict_scalars(domain: &ScalarDomain, m: &RMat) -> Mat {
    let f = domain.base();
    let d = domain.rank();
    let mut out = Mat::zeros(f, m.rows * d, m.cols * d);
    match domain {
        ScalarDomain::Field(_) => {
            for r in 0..m.rows {
                for c in 0..m.cols {
                    out.set(r, c, m.at(r, c)[0].clone());
                }
            }
        }
        ScalarDomain::Algebra(alg) => {
            for r in 0..m.rows {
                for c in 0..m.cols {
                    let a = m.at(r, c);
                    if domain.is_zero(a) {
                        continue;
                    }
                    for t in 0..d {
                        // column block entry: coordinates of a * e_t
                        let mut col = vec![f.zero(); d];
                        for (s, coeff) in a.iter().enumerate() {
                            if f.is_zero(coeff) {
                                continue;
                            }
                            for (u, mval) in alg.basis_product(s, t).iter().enumerate() {
                                if !f.is_zero(mval) {
                                    col[u] = f.add(&col[u], &f.mul(coeff, mval));
                                }
                            }
                        }
                        for (u, x) in col.into_iter().enumerate() {
                            if !f.is_zero(&x) {
                                out.set(r * d + u, c * d + t, x);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Flattens a vector of ring elements to base-field coordinates (row-block
/// layout matching [`restrict_scalars`]).
pub fn restrict_vector(domain: &ScalarDomain, v: &[RingElem]) -> Vec<K> {
    let d = domain.rank();
    let mut out = Vec::with_capacity(v.len() * d);
    for e in v {
        assert_eq!(e.len(), d);
        out.extend(e.iter().cloned());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn qmat(rows: Vec<Vec<i64>>) -> Mat {
        let f = BaseField::Q;
        Mat::from_rows(
            f,
            rows.into_iter()
                .map(|r| r.into_iter().map(|x| f.from_i64(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn zero_and_identity() {
        let z = Mat::zeros(BaseField::Q, 3, 3);
        let (r, ns) = rank_nullspace(&z);
        assert_eq!(r, 0);
        assert_eq!(ns.len(), 3);
        let id = Mat::identity(BaseField::Q, 4);
        let (r, ns) = rank_nullspace(&id);
        assert_eq!(r, 4);
        assert!(ns.is_empty());
    }

    #[test]
    fn printed_seven_by_eight_kernel() {
        // the 7x8 matrix of the 12-dimensional example, with its kernel vector
        let m = qmat(vec![
            vec![1, 1, 1, 0, 1, 0, 0, 0],
            vec![1, 0, 0, 1, 0, 1, 0, 0],
            vec![-1, 1, 1, 1, 0, 0, 0, 0],
            vec![0, 1, 0, -1, 0, 1, 0, 0],
            vec![0, 0, -1, 0, 1, 0, 0, 0],
            vec![0, -1, 0, 0, 0, 0, 1, 0],
            vec![0, 0, 1, 0, 0, 0, 0, 1],
        ]);
        let f = BaseField::Q;
        let v: Vec<K> = [2, 4, -3, 1, -3, -3, 4, 3]
            .iter()
            .map(|&x| f.from_i64(x))
            .collect();
        assert!(m.apply(&v).iter().all(|x| f.is_zero(x)));
        let (r, ns) = rank_nullspace(&m);
        assert_eq!(r, 7);
        assert_eq!(ns.len(), 1);
        // the canonical kernel vector is proportional to the printed one
        let q = Quotient::new(f, 8, ns).unwrap();
        assert!(q.contains(&v));
    }

    #[test]
    fn quotient_basics() {
        let f = BaseField::Q;
        let q = Quotient::new(f, 2, vec![vec![f.one(), f.zero()]]).unwrap();
        assert_eq!(q.quotient_dim(), 1);
        let a = q.reduce(&[f.one(), f.one()]);
        let b = q.reduce(&[f.zero(), f.one()]);
        assert_eq!(a, b);
        let full =
            Quotient::new(f, 2, vec![vec![f.one(), f.zero()], vec![f.one(), f.one()]]).unwrap();
        assert_eq!(full.quotient_dim(), 0);
        assert!(full.contains(&[f.from_i64(5), f.from_i64(-3)]));
        let bad = Quotient::new(f, 2, vec![vec![f.one()]]);
        assert!(matches!(bad, Err(LinalgError::DimensionMismatch { .. })));
    }

    #[test]
    fn restriction_of_scalars() {
        let d = ScalarDomain::truncated_polynomial(BaseField::Q, 2).unwrap();
        // identity on rank 2 -> 4x4 identity
        let mut m = RMat::zeros(&d, 2, 2);
        m.set(0, 0, d.one());
        m.set(1, 1, d.one());
        let r = restrict_scalars(&d, &m);
        assert_eq!(r, Mat::identity(BaseField::Q, 4));
        // multiplication by eps on rank 1 -> 2x2 nilpotent of rank 1
        let mut m = RMat::zeros(&d, 1, 1);
        let eps = vec![BaseField::Q.zero(), BaseField::Q.one()];
        m.set(0, 0, eps);
        let r = restrict_scalars(&d, &m);
        assert_eq!(rank(&r), 1);
        assert!(r.mul(&r).is_zero());
    }

    #[test]
    fn fp_rref() {
        let f = BaseField::Fp(5);
        let m = Mat::from_rows(
            f,
            vec![
                vec![f.from_i64(2), f.from_i64(1)],
                vec![f.from_i64(4), f.from_i64(2)],
            ],
        );
        let (r, ns) = rank_nullspace(&m);
        assert_eq!(r, 1);
        assert_eq!(ns.len(), 1);
        assert!(m.apply(&ns[0]).iter().all(|x| f.is_zero(x)));
    }

    #[test]
    fn size_guard() {
        assert!(guard(924, 792).is_ok());
        assert!(matches!(
            guard(10_000, 10_000),
            Err(LinalgError::TooLarge { .. })
        ));
    }

    // independent rank oracle: the largest size of a nonzero minor, with
    // determinants by cofactor expansion
    fn det_cofactor(f: BaseField, m: &[Vec<K>]) -> K {
        let n = m.len();
        if n == 0 {
            return f.one();
        }
        if n == 1 {
            return m[0][0].clone();
        }
        let mut acc = f.zero();
        for (j, top) in m[0].iter().enumerate() {
            if f.is_zero(top) {
                continue;
            }
            let sub: Vec<Vec<K>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != j)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let term = f.mul(top, &det_cofactor(f, &sub));
            acc = if j % 2 == 0 {
                f.add(&acc, &term)
            } else {
                f.sub(&acc, &term)
            };
        }
        acc
    }

    fn rank_by_minors(f: BaseField, rows: &[Vec<K>]) -> usize {
        let nr = rows.len();
        let nc = rows.first().map_or(0, |r| r.len());
        let subsets = |n: usize, k: usize| crate::homology::wedge_basis(n, k);
        for size in (1..=nr.min(nc)).rev() {
            for ri in subsets(nr, size) {
                for ci in subsets(nc, size) {
                    let minor: Vec<Vec<K>> = ri
                        .iter()
                        .map(|&r| ci.iter().map(|&c| rows[r][c].clone()).collect())
                        .collect();
                    if !f.is_zero(&det_cofactor(f, &minor)) {
                        return size;
                    }
                }
            }
        }
        0
    }

    proptest! {
        #[test]
        fn rank_equals_transpose_rank(rows in proptest::collection::vec(proptest::collection::vec(-4i64..5, 4), 1..5)) {
            let m = qmat(rows);
            prop_assert_eq!(rank(&m), rank(&m.transpose()));
        }

        #[test]
        fn rank_matches_the_minor_oracle(rows in proptest::collection::vec(proptest::collection::vec(-3i64..4, 4), 1..5)) {
            for field in [BaseField::Q, BaseField::Fp(5)] {
                let kv: Vec<Vec<K>> = rows
                    .iter()
                    .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
                    .collect();
                let m = Mat::from_rows(field, kv.clone());
                prop_assert_eq!(rank(&m), rank_by_minors(field, &kv));
            }
        }

        #[test]
        fn nullspace_annihilates(rows in proptest::collection::vec(proptest::collection::vec(-4i64..5, 4), 1..5)) {
            let m = qmat(rows.clone());
            let f = BaseField::Q;
            let (r, ns) = rank_nullspace(&m);
            prop_assert_eq!(r + ns.len(), m.cols);
            for v in ns {
                prop_assert!(m.apply(&v).iter().all(|x| f.is_zero(x)));
            }
            // same over F_5
            let f5 = BaseField::Fp(5);
            let m5 = Mat::from_rows(f5, rows.iter().map(|r| r.iter().map(|&x| f5.from_i64(x)).collect()).collect());
            let (r5, ns5) = rank_nullspace(&m5);
            prop_assert_eq!(r5 + ns5.len(), m5.cols);
            for v in ns5 {
                prop_assert!(m5.apply(&v).iter().all(|x| f5.is_zero(x)));
            }
        }

        #[test]
        fn reduce_is_linear_and_idempotent(
            gens in proptest::collection::vec(proptest::collection::vec(-3i64..4, 3), 0..4),
            u in proptest::collection::vec(-3i64..4, 3),
            v in proptest::collection::vec(-3i64..4, 3),
        ) {
            let f = BaseField::Q;
            let gv: Vec<Vec<K>> = gens.iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect();
            let q = Quotient::new(f, 3, gv).unwrap();
            let uv: Vec<K> = u.iter().map(|&x| f.from_i64(x)).collect();
            let vv: Vec<K> = v.iter().map(|&x| f.from_i64(x)).collect();
            let ru = q.reduce(&uv);
            prop_assert_eq!(q.reduce(&ru), ru.clone());
            let sum: Vec<K> = uv.iter().zip(&vv).map(|(a, b)| f.add(a, b)).collect();
            let rsum = q.reduce(&sum);
            let radd: Vec<K> = ru.iter().zip(q.reduce(&vv)).map(|(a, b)| f.add(a, &b)).collect();
            prop_assert_eq!(rsum, radd);
        }

        #[test]
        fn membership_matches_solvability(
            gens in proptest::collection::vec(proptest::collection::vec(-3i64..4, 3), 0..4),
            probe in proptest::collection::vec(-3i64..4, 3),
        ) {
            let f = BaseField::Q;
            let gv: Vec<Vec<K>> = gens.iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect();
            let pv: Vec<K> = probe.iter().map(|&x| f.from_i64(x)).collect();
            let q = Quotient::new(f, 3, gv.clone()).unwrap();
            // solvability of (generators as columns) x = v, via rank comparison
            let a = Mat::from_cols(f, gv.clone(), 3);
            let mut aug_cols = gv;
            aug_cols.push(pv.clone());
            let aug = Mat::from_cols(f, aug_cols, 3);
            let solvable = rank(&a) == rank(&aug);
            prop_assert_eq!(q.contains(&pv), solvable);
        }
    }
}
