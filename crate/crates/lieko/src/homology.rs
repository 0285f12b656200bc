//! The Chevalley-Eilenberg complex: exterior-power bases in lex order, the
//! boundary operators, Betti numbers, and homology-class membership, with
//! weight-restricted (graded) variants throughout.
//!
//! Conventions: the degree-k basis is the k-subsets of the basis indices in
//! lexicographic order; a wedge word with unordered indices is resolved by
//! sorting and multiplying by the permutation sign; a repeated index gives 0.
//! The boundary is
//! `d(x_1 ^ ... ^ x_k) = sum_{i<j} (-1)^{i+j} [x_i, x_j] ^ ... (x_i, x_j omitted)`.

use crate::lie::LieAlgebra;
use crate::linalg::{self, restrict_scalars, restrict_vector, Mat, Quotient, RMat};
use crate::scalars::RingElem;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomologyError {
    #[error(transparent)]
    TooLarge(#[from] linalg::LinalgError),
    #[error("a weight was given but the algebra carries no grading")]
    NotGraded,
    #[error("the chain is not a cycle")]
    NotACycle,
    #[error("chain degree mismatch: expected {want}, got {got}")]
    DegreeMismatch { want: usize, got: usize },
    #[error("the chain is not homogeneous of the requested weight")]
    NotHomogeneous,
}

/// Binomial coefficient as usize (panics on overflow; sizes are guarded).
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num: u128 = 1;
    for t in 0..k {
        num = num * (n - t) as u128 / (t + 1) as u128;
    }
    usize::try_from(num).expect("binomial overflow")
}

/// The k-subsets of `{0..n-1}` in lexicographic order.
pub fn wedge_basis(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial(n, k));
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    if k == 0 {
        out.push(vec![]);
        return out;
    }
    loop {
        out.push(cur.clone());
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Lex rank of a sorted k-subset of `{0..n-1}`.
pub fn subset_rank(n: usize, subset: &[usize]) -> usize {
    let k = subset.len();
    let mut rank = 0usize;
    let mut prev = 0usize;
    for (t, &s) in subset.iter().enumerate() {
        for v in prev..s {
            rank += binomial(n - 1 - v, k - 1 - t);
        }
        prev = s + 1;
    }
    rank
}

/// Sorts a wedge word in place; returns the permutation sign, or `None` if an
/// index repeats (so the wedge is zero).
pub fn sort_sign(word: &mut [usize]) -> Option<i64> {
    let mut sign = 1i64;
    // insertion sort with transposition count
    for i in 1..word.len() {
        let mut j = i;
        while j > 0 && word[j - 1] > word[j] {
            word.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    for w in word.windows(2) {
        if w[0] == w[1] {
            return None;
        }
    }
    Some(sign)
}

/// An exact-coefficient element of `Lambda^k g` in the lex basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Chain {
    pub degree: usize,
    pub coeffs: Vec<RingElem>,
}

impl Chain {
    pub fn zero(g: &LieAlgebra, degree: usize) -> Self {
        Chain {
            degree,
            coeffs: vec![g.domain.zero(); binomial(g.dim, degree)],
        }
    }

    /// Builds a chain from signed wedge words (indices may be unsorted).
    pub fn from_words(g: &LieAlgebra, degree: usize, words: &[(RingElem, Vec<usize>)]) -> Self {
        let mut out = Chain::zero(g, degree);
        let d = &g.domain;
        for (c, word) in words {
            assert_eq!(word.len(), degree);
            let mut w = word.clone();
            let Some(sign) = sort_sign(&mut w) else {
                continue;
            };
            let idx = subset_rank(g.dim, &w);
            let term = if sign < 0 { d.neg(c) } else { c.clone() };
            out.coeffs[idx] = d.add(&out.coeffs[idx], &term);
        }
        out
    }

    /// Convenience constructor with integer coefficients.
    pub fn from_int_words(g: &LieAlgebra, degree: usize, words: &[(i64, Vec<usize>)]) -> Self {
        let ws: Vec<(RingElem, Vec<usize>)> = words
            .iter()
            .map(|(c, w)| (g.domain.from_i64(*c), w.clone()))
            .collect();
        Chain::from_words(g, degree, &ws)
    }

    pub fn is_zero(&self, g: &LieAlgebra) -> bool {
        self.coeffs.iter().all(|c| g.domain.is_zero(c))
    }
}

/// The matrix of `d_k : Lambda^k -> Lambda^{k-1}` over the ground domain, in
/// lex bases.
pub fn boundary_matrix(g: &LieAlgebra, k: usize) -> Result<RMat, HomologyError> {
    let n = g.dim;
    let rows = binomial(n, k.saturating_sub(1));
    let cols = binomial(n, k);
    let d = g.domain.rank();
    linalg::guard(rows * d, cols * d)?;
    let dom = wedge_basis(n, k);
    let mut m = RMat::zeros(&g.domain, rows, cols);
    if k == 0 {
        return Ok(m);
    }
    for (col, s) in dom.iter().enumerate() {
        accumulate_boundary(g, s, |row, coeff| {
            m.add_at(&g.domain, row, col, &coeff);
        });
    }
    Ok(m)
}

/// Expands `d(e_S)` for a sorted subset `S`, calling `sink(row_index, coeff)`.
fn accumulate_boundary<F: FnMut(usize, RingElem)>(g: &LieAlgebra, s: &[usize], mut sink: F) {
    let n = g.dim;
    let k = s.len();
    let d = &g.domain;
    for a in 0..k {
        for b in (a + 1)..k {
            // (-1)^{(a+1)+(b+1)} = (-1)^{a+b}
            let base_sign = if (a + b) % 2 == 0 { 1 } else { -1 };
            let rest: Vec<usize> = s
                .iter()
                .enumerate()
                .filter(|(t, _)| *t != a && *t != b)
                .map(|(_, &x)| x)
                .collect();
            for (m, c) in g.bracket_terms(s[a], s[b]) {
                if rest.contains(&m) {
                    continue;
                }
                let t = rest.iter().filter(|&&r| r < m).count();
                let sign = base_sign * if t % 2 == 0 { 1 } else { -1 };
                let mut new = rest.clone();
                new.push(m);
                new.sort_unstable();
                let row = subset_rank(n, &new);
                let coeff = if sign < 0 { d.neg(c) } else { c.clone() };
                sink(row, coeff);
            }
        }
    }
}

/// Sparse expansion of the boundary of one basis wedge: the nonzero entries
/// of the corresponding column of the boundary matrix, as (row, coefficient)
/// pairs (rows may repeat; callers accumulate).
pub fn boundary_terms(g: &LieAlgebra, subset: &[usize]) -> Vec<(usize, RingElem)> {
    let mut out = Vec::new();
    accumulate_boundary(g, subset, |row, coeff| out.push((row, coeff)));
    out
}

/// Applies the boundary operator to a chain directly.
pub fn apply_boundary(g: &LieAlgebra, chain: &Chain) -> Result<Chain, HomologyError> {
    if chain.degree == 0 {
        return Err(HomologyError::DegreeMismatch { want: 1, got: 0 });
    }
    let dom = wedge_basis(g.dim, chain.degree);
    let mut out = Chain::zero(g, chain.degree - 1);
    let d = &g.domain;
    for (idx, s) in dom.iter().enumerate() {
        let c = &chain.coeffs[idx];
        if d.is_zero(c) {
            continue;
        }
        accumulate_boundary(g, s, |row, coeff| {
            out.coeffs[row] = d.add(&out.coeffs[row], &d.mul(c, &coeff));
        });
    }
    Ok(out)
}

/// Column/row index selections of a weight-restricted boundary matrix.
pub struct GradedBoundary {
    pub mat: Mat,
    /// Positions (in the full lex basis) of the degree-k subsets of weight w.
    pub col_subsets: Vec<usize>,
    pub row_subsets: Vec<usize>,
}

/// The boundary matrix restricted to the weight-`w` component, after
/// restriction of scalars to the base field.
pub fn graded_boundary_matrix(
    g: &LieAlgebra,
    k: usize,
    weight: &[i64],
) -> Result<GradedBoundary, HomologyError> {
    let grading = g.grading.as_ref().ok_or(HomologyError::NotGraded)?;
    let w = grading.normalize(weight);
    let n = g.dim;
    let cod = wedge_basis(n, k.saturating_sub(1));
    let dom = wedge_basis(n, k);
    let col_subsets: Vec<usize> = dom
        .iter()
        .enumerate()
        .filter(|(_, s)| grading.weight_of_subset(s) == w)
        .map(|(i, _)| i)
        .collect();
    let row_subsets: Vec<usize> = cod
        .iter()
        .enumerate()
        .filter(|(_, s)| grading.weight_of_subset(s) == w)
        .map(|(i, _)| i)
        .collect();
    let d = g.domain.rank();
    linalg::guard(row_subsets.len() * d, col_subsets.len() * d)?;
    let mut row_pos = vec![usize::MAX; cod.len()];
    for (t, &r) in row_subsets.iter().enumerate() {
        row_pos[r] = t;
    }
    let mut m = RMat::zeros(&g.domain, row_subsets.len(), col_subsets.len());
    if k > 0 {
        for (cpos, &ci) in col_subsets.iter().enumerate() {
            accumulate_boundary(g, &dom[ci], |row, coeff| {
                // the boundary preserves weight, so the row must be selected
                let rp = row_pos[row];
                debug_assert_ne!(rp, usize::MAX);
                m.add_at(&g.domain, rp, cpos, &coeff);
            });
        }
    }
    Ok(GradedBoundary {
        mat: restrict_scalars(&g.domain, &m),
        col_subsets,
        row_subsets,
    })
}

fn boundary_rank(
    g: &LieAlgebra,
    k: usize,
    weight: Option<&[i64]>,
) -> Result<(usize, usize), HomologyError> {
    // returns (domain dimension over the base field, rank)
    match weight {
        None => {
            let m = boundary_matrix(g, k)?;
            let rm = restrict_scalars(&g.domain, &m);
            Ok((rm.cols, linalg::rank(&rm)))
        }
        Some(w) => {
            let gb = graded_boundary_matrix(g, k, w)?;
            Ok((gb.mat.cols, linalg::rank(&gb.mat)))
        }
    }
}

/// Per-degree dimensions of the Chevalley-Eilenberg complex. All dimensions
/// are base-field dimensions (after restriction of scalars when the ground
/// domain is a commutative algebra).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub degree: usize,
    pub chain_dim: usize,
    pub boundary_rank: usize,
    pub cycle_dim: usize,
    pub boundary_dim: usize,
    pub betti: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyReport {
    pub weight: Option<Vec<i64>>,
    pub degrees: Vec<DegreeReport>,
}

impl HomologyReport {
    pub fn betti_numbers(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.betti).collect()
    }
}

/// Betti numbers through degree `up_to` (inclusive), optionally restricted to
/// a weight component.
pub fn betti_numbers(
    g: &LieAlgebra,
    up_to: usize,
    weight: Option<&[i64]>,
) -> Result<HomologyReport, HomologyError> {
    let n = g.dim;
    let up_to = up_to.min(n);
    // rank of d_k for k = 1..=up_to+1 (d_{n+1} = 0)
    let mut dims = Vec::new();
    let mut ranks = Vec::new();
    for k in 0..=up_to + 1 {
        if k > n {
            dims.push(0);
            ranks.push(0);
        } else {
            let (dk, rk) = boundary_rank(g, k, weight)?;
            dims.push(dk);
            ranks.push(if k == 0 { 0 } else { rk });
        }
    }
    let mut degrees = Vec::new();
    for k in 0..=up_to {
        let chain_dim = dims[k];
        let rk = ranks[k];
        let cycle_dim = chain_dim - rk;
        let boundary_dim = ranks[k + 1];
        degrees.push(DegreeReport {
            degree: k,
            chain_dim,
            boundary_rank: rk,
            cycle_dim,
            boundary_dim,
            betti: cycle_dim - boundary_dim,
        });
    }
    Ok(HomologyReport {
        weight: weight.map(|w| w.to_vec()),
        degrees,
    })
}

/// All weights realized by the degree-k component of a graded algebra,
/// sorted and deduplicated.
pub fn weights_in_degree(g: &LieAlgebra, k: usize) -> Result<Vec<Vec<i64>>, HomologyError> {
    let grading = g.grading.as_ref().ok_or(HomologyError::NotGraded)?;
    let mut ws: Vec<Vec<i64>> = wedge_basis(g.dim, k)
        .iter()
        .map(|s| grading.weight_of_subset(s))
        .collect();
    ws.sort();
    ws.dedup();
    Ok(ws)
}

/// Whether a verified cycle represents a nonzero homology class, i.e. does
/// not lie in the image of the next boundary. With a weight, the cycle must
/// be homogeneous and membership is tested inside that component.
pub fn homology_class_nonzero(
    g: &LieAlgebra,
    cycle: &Chain,
    weight: Option<&[i64]>,
) -> Result<bool, HomologyError> {
    let k = cycle.degree;
    if !apply_boundary(g, cycle)?.is_zero(g) {
        return Err(HomologyError::NotACycle);
    }
    let f = g.base();
    match weight {
        None => {
            let next = boundary_matrix(g, k + 1)?;
            let rm = restrict_scalars(&g.domain, &next);
            let cols: Vec<Vec<_>> = (0..rm.cols).map(|c| rm.col(c)).collect();
            let q = Quotient::new(f, rm.rows, cols)?;
            Ok(!q.contains(&restrict_vector(&g.domain, &cycle.coeffs)))
        }
        Some(w) => {
            let grading = g.grading.as_ref().ok_or(HomologyError::NotGraded)?;
            let wn = grading.normalize(w);
            let dom = wedge_basis(g.dim, k);
            for (i, s) in dom.iter().enumerate() {
                if !g.domain.is_zero(&cycle.coeffs[i]) && grading.weight_of_subset(s) != wn {
                    return Err(HomologyError::NotHomogeneous);
                }
            }
            let gb = graded_boundary_matrix(g, k + 1, &wn)?;
            let cols: Vec<Vec<_>> = (0..gb.mat.cols).map(|c| gb.mat.col(c)).collect();
            let q = Quotient::new(f, gb.mat.rows, cols)?;
            // project the cycle onto the selected subsets
            let d = g.domain.rank();
            let mut v = Vec::with_capacity(gb.row_subsets.len() * d);
            for &si in &gb.row_subsets {
                v.extend(cycle.coeffs[si].iter().cloned());
            }
            // row_subsets here index degree-k subsets because gb was built for d_{k+1}
            Ok(!q.contains(&v))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{Grading, LieAlgebra};
    use crate::scalars::ScalarDomain;

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
            Some(vec!["e1".into(), "e0".into(), "em1".into()]),
            Some(Grading::new(1, vec![], vec![vec![1], vec![0], vec![-1]]).unwrap()),
        )
        .unwrap()
    }

    #[test]
    fn wedge_basis_lex_and_rank() {
        let b = wedge_basis(4, 2);
        assert_eq!(
            b,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        for (i, s) in b.iter().enumerate() {
            assert_eq!(subset_rank(4, s), i);
        }
        assert_eq!(sort_sign(&mut [2, 1, 0]), Some(-1));
        assert_eq!(sort_sign(&mut [1, 0, 2]), Some(-1));
        assert_eq!(sort_sign(&mut [1, 1, 2]), None);
    }

    #[test]
    fn abelian_boundary_is_zero() {
        let d = ScalarDomain::rationals();
        let a = LieAlgebra::new(d, 4, vec![], None, None).unwrap();
        for k in 1..=4 {
            let m = boundary_matrix(&a, k).unwrap();
            let rm = restrict_scalars(&a.domain, &m);
            assert!(rm.is_zero());
        }
        let r = betti_numbers(&a, 4, None).unwrap();
        assert_eq!(r.betti_numbers(), vec![1, 4, 6, 4, 1]);
    }

    #[test]
    fn sl2_top_boundary_vanishes() {
        let g = sl2();
        let m = boundary_matrix(&g, 3).unwrap();
        let rm = restrict_scalars(&g.domain, &m);
        assert!(rm.is_zero());
        let r = betti_numbers(&g, 3, None).unwrap();
        assert_eq!(r.betti_numbers(), vec![1, 0, 0, 1]);
    }

    #[test]
    fn boundary_squares_to_zero() {
        let g = sl2();
        for k in 2..=3 {
            let a = restrict_scalars(&g.domain, &boundary_matrix(&g, k - 1).unwrap());
            let b = restrict_scalars(&g.domain, &boundary_matrix(&g, k).unwrap());
            assert!(a.mul(&b).is_zero());
        }
    }

    #[test]
    fn graded_restriction_consistency() {
        let g = sl2();
        let total = betti_numbers(&g, 3, None).unwrap();
        for k in 0..=3 {
            let mut sum = 0;
            for w in weights_in_degree(&g, k).unwrap() {
                let r = betti_numbers(&g, k, Some(&w)).unwrap();
                sum += r.degrees[k].betti;
            }
            assert_eq!(sum, total.degrees[k].betti);
        }
    }

    #[test]
    fn boundaries_are_trivial_classes() {
        let g = sl2();
        // any boundary represents the trivial class
        let c2 = Chain::from_int_words(&g, 2, &[(1, vec![0, 1])]);
        let b = apply_boundary(&g, &c2).unwrap();
        let class = homology_class_nonzero(&g, &b, None);
        assert_eq!(class, Ok(false));
        let not_cycle = Chain::from_int_words(&g, 2, &[(1, vec![0, 2])]);
        // d(e1 ^ em1) = -e0 != 0, so this is not a cycle
        assert_eq!(
            homology_class_nonzero(&g, &not_cycle, None),
            Err(HomologyError::NotACycle)
        );
    }

    #[test]
    fn euler_characteristic_vanishes() {
        let d = ScalarDomain::rationals();
        let heis =
            LieAlgebra::new(d.clone(), 3, vec![((0, 1), vec![(2, d.one())])], None, None).unwrap();
        for g in [
            sl2(),
            heis,
            LieAlgebra::new(d, 4, vec![], None, None).unwrap(),
        ] {
            let b = betti_numbers(&g, g.dim, None).unwrap().betti_numbers();
            let chi: i64 = b
                .iter()
                .enumerate()
                .map(|(k, &x)| if k % 2 == 0 { x as i64 } else { -(x as i64) })
                .sum();
            assert_eq!(chi, 0);
        }
    }

    #[test]
    fn degree_zero_boundary_rejected() {
        let g = sl2();
        let c = Chain::zero(&g, 0);
        assert!(matches!(
            apply_boundary(&g, &c),
            Err(HomologyError::DegreeMismatch { .. })
        ));
    }
}
