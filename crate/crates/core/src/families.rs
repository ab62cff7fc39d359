//! The concrete code families and their closed-form parameters.
//!
//! The pair code `C(m)` is defined by the check matrix `H_m` whose columns
//! are exactly the weight-2 vectors of length `m`, taken in lexicographic
//! pair order (the column multiset is forced; the order is our convention so
//! that serialization and induced permutations are reproducible). The union
//! family `C[m]`, for even `m ≥ 6`, adjoins the covering coset — the
//! all-ones translate — to `C(m)`.
//!
//! Closed forms below are candidates to be compared against measurements;
//! nothing downstream assumes them.

use alloc::vec::Vec;

use crate::bits::{BitMatrix, BitVec};
use crate::code::{union_with_covering_set, CosetTable, LinearCode};
use crate::error::Error;
use crate::limits;
use crate::regularity::IntersectionArray;

/// `x choose 2`.
pub fn binom2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

/// The bijection between column positions and 2-subsets of `{0, …, m−1}`,
/// in lexicographic order of the ordered pair `(i, j)`, `i < j`.
pub struct PairIndex {
    m: usize,
    pairs: Vec<(u16, u16)>,
}

impl PairIndex {
    pub fn new(m: usize) -> PairIndex {
        assert!(m >= 2 && m < u16::MAX as usize);
        let mut pairs = Vec::with_capacity(m * (m - 1) / 2);
        for i in 0..m {
            for j in i + 1..m {
                pairs.push((i as u16, j as u16));
            }
        }
        PairIndex { m, pairs }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of pairs, `m(m−1)/2`.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pair(&self, idx: usize) -> (usize, usize) {
        let (i, j) = self.pairs[idx];
        (i as usize, j as usize)
    }

    /// Closed-form position of `{i, j}` (requires `i < j < m`).
    pub fn index_of(&self, i: usize, j: usize) -> usize {
        assert!(i < j && j < self.m, "not an ordered pair below m");
        i * self.m - i * (i + 1) / 2 + (j - i - 1)
    }
}

/// The `m × m(m−1)/2` check matrix with one weight-2 column per pair.
pub fn build_hm(m: usize) -> Result<BitMatrix, Error> {
    if m < 3 {
        return Err(Error::InvalidParameter("the pair family needs m ≥ 3"));
    }
    let idx = PairIndex::new(m);
    let mut h = BitMatrix::zeros(m, idx.len());
    for col in 0..idx.len() {
        let (i, j) = idx.pair(col);
        h.set(i, col, true);
        h.set(j, col, true);
    }
    Ok(h)
}

/// The pair code `C(m)`.
pub fn build_cm(m: usize) -> Result<LinearCode, Error> {
    Ok(LinearCode::from_parity_check(&build_hm(m)?))
}

/// The union code `C[m] = C(m) ∪ C(m)(ρ)` for even `m ≥ 6`.
///
/// Constructed honestly via the covering-set union (which verifies that the
/// covering set really is the all-ones coset), then cross-checked against the
/// explicit block generator; a disagreement would be a bug, not bad input.
pub fn build_cm_union(m: usize) -> Result<LinearCode, Error> {
    build_cm_union_with_limit(m, limits::TABLE_BITS)
}

pub fn build_cm_union_with_limit(m: usize, max_bits: usize) -> Result<LinearCode, Error> {
    if m < 6 || m % 2 != 0 {
        return Err(Error::InvalidParameter(
            "the union family needs even m ≥ 6 (odd m is antipodal: the union is not a coset extension)",
        ));
    }
    let code = build_cm(m)?;
    let table = CosetTable::build_with_limit(&code, max_bits)?;
    let union = union_with_covering_set(&code, &table)?;
    let block = union_block_generator(m)?;
    if !row_space_equal(union.generator(), &block) {
        return Err(Error::SelfCheckFailed(
            "union generator disagrees with the block-form generator",
        ));
    }
    Ok(union)
}

/// The explicit block generator of the union code: one triangle row per pair
/// `{a, b}` inside the first `m−1` indices — supported on the three pairs of
/// `{a, b, m−1}`, i.e. an identity block next to the transposed smaller check
/// matrix — plus the all-ones row.
///
/// The triangle rows are `n − m + 1` independent codewords of `C(m)`, so they
/// generate it; the all-ones row adds the covering coset.
pub fn union_block_generator(m: usize) -> Result<BitMatrix, Error> {
    if m < 6 || m % 2 != 0 {
        return Err(Error::InvalidParameter(
            "the union family needs even m ≥ 6 (odd m is antipodal: the union is not a coset extension)",
        ));
    }
    let idx = PairIndex::new(m);
    let n = idx.len();
    let last = m - 1;
    let mut rows = Vec::with_capacity(n - m + 2);
    for a in 0..last {
        for b in a + 1..last {
            let row = BitVec::from_support(
                n,
                &[
                    idx.index_of(a, b),
                    idx.index_of(a, last),
                    idx.index_of(b, last),
                ],
            );
            rows.push(row);
        }
    }
    rows.push(BitVec::ones(n));
    Ok(BitMatrix::from_rows(n, &rows))
}

/// Row-space equality by mutual syndrome tests: every row of each matrix has
/// zero syndrome against a check matrix derived from the other.
pub fn row_space_equal(a: &BitMatrix, b: &BitMatrix) -> bool {
    if a.cols() != b.cols() {
        return false;
    }
    let code_a = LinearCode::from_generator(a);
    let code_b = LinearCode::from_generator(b);
    (0..b.rows()).all(|i| code_a.contains(&b.row(i)))
        && (0..a.rows()).all(|i| code_b.contains(&a.row(i)))
}

/// Closed-form parameters and intersection array for one family member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormSpec {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub rho: usize,
    pub array: IntersectionArray,
}

/// Closed form for `C(m)`: `n = m(m−1)/2`, `k = n − m + 1`, `d = 3`,
/// `ρ = ⌊m/2⌋`, `b_i = binom(m−2i, 2)`, `c_i = binom(2i, 2)`.
pub fn closed_form_cm(m: usize) -> Result<ClosedFormSpec, Error> {
    if m < 3 {
        return Err(Error::InvalidParameter("the pair family needs m ≥ 3"));
    }
    let n = m * (m - 1) / 2;
    let rho = m / 2;
    let b: Vec<u64> = (0..rho).map(|i| binom2((m - 2 * i) as u64)).collect();
    let c: Vec<u64> = (1..=rho).map(|i| binom2(2 * i as u64)).collect();
    Ok(ClosedFormSpec {
        n,
        k: n - m + 1,
        d: 3,
        rho,
        array: IntersectionArray::new(n as u64, b, c),
    })
}

/// Closed form for `C[m]` (even `m ≥ 6`): `n = m(m−1)/2`, `k = n − m + 2`,
/// `d = 3`, `ρ = ⌊m/4⌋`; `b_i = binom(m−2i, 2)` throughout, and
/// `c_i = binom(2i, 2)` except that for `m ≡ 0 (mod 4)` the top entry doubles
/// to `c_ρ = 2·binom(2ρ, 2)`.
pub fn closed_form_cm_union(m: usize) -> Result<ClosedFormSpec, Error> {
    if m < 6 || m % 2 != 0 {
        return Err(Error::InvalidParameter(
            "the union family needs even m ≥ 6 (odd m is antipodal: the union is not a coset extension)",
        ));
    }
    let n = m * (m - 1) / 2;
    let rho = m / 4;
    let b: Vec<u64> = (0..rho).map(|i| binom2((m - 2 * i) as u64)).collect();
    let mut c: Vec<u64> = (1..=rho).map(|i| binom2(2 * i as u64)).collect();
    if m % 4 == 0 {
        if let Some(top) = c.last_mut() {
            *top *= 2;
        }
    }
    Ok(ClosedFormSpec {
        n,
        k: n - m + 2,
        d: 3,
        rho,
        array: IntersectionArray::new(n as u64, b, c),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::MinDistance;

    #[test]
    fn h3_columns() {
        let h = build_hm(3).unwrap();
        assert_eq!((h.rows(), h.cols()), (3, 3));
        assert_eq!(h.column(0), BitVec::from_bits(&[1, 1, 0]));
        assert_eq!(h.column(1), BitVec::from_bits(&[1, 0, 1]));
        assert_eq!(h.column(2), BitVec::from_bits(&[0, 1, 1]));
    }

    #[test]
    fn hm_shape_and_row_weights() {
        let h4 = build_hm(4).unwrap();
        assert_eq!((h4.rows(), h4.cols()), (4, 6));
        for i in 0..4 {
            assert_eq!(h4.row(i).weight(), 3, "each index sits in m−1 pairs");
        }
        let h6 = build_hm(6).unwrap();
        assert_eq!((h6.rows(), h6.cols()), (6, 15));
        // Rank m−1: the rows sum to zero.
        assert_eq!(h6.rank(), 5);
        assert!(build_hm(2).is_err());
    }

    #[test]
    fn hm_columns_distinct_nonzero() {
        let h = build_hm(7).unwrap();
        let mut seen: Vec<BitVec> = Vec::new();
        for j in 0..h.cols() {
            let col = h.column(j);
            assert_eq!(col.weight(), 2);
            assert!(!seen.contains(&col), "duplicate column");
            seen.push(col);
        }
    }

    #[test]
    fn pair_index_bijection() {
        for m in [3usize, 4, 7, 10] {
            let idx = PairIndex::new(m);
            assert_eq!(idx.len(), m * (m - 1) / 2);
            for p in 0..idx.len() {
                let (i, j) = idx.pair(p);
                assert_eq!(idx.index_of(i, j), p);
            }
        }
    }

    #[test]
    fn cm_parameters() {
        for (m, n, k) in [(4usize, 6usize, 3usize), (6, 15, 10), (7, 21, 15)] {
            let c = build_cm(m).unwrap();
            assert_eq!((c.n(), c.k()), (n, k), "m = {m}");
            assert_eq!(
                crate::code::minimum_distance_upto(&c, 4),
                MinDistance::Exact(3)
            );
        }
    }

    #[test]
    fn union_parameters() {
        for (m, n, k) in [(6usize, 15usize, 11usize), (8, 28, 22), (10, 45, 37)] {
            let u = build_cm_union(m).unwrap();
            assert_eq!((u.n(), u.k()), (n, k), "m = {m}");
        }
        assert!(build_cm_union(7).is_err(), "odd m must be rejected");
        assert!(build_cm_union(4).is_err(), "m = 4 is below the family range");
    }

    #[test]
    fn union_matches_block_generator_row_space() {
        // build_cm_union already cross-checks; verify the pieces directly too.
        for m in [6usize, 8, 10, 12] {
            let u = build_cm_union(m).unwrap();
            let block = union_block_generator(m).unwrap();
            assert_eq!(block.rows(), u.k());
            assert!(row_space_equal(u.generator(), &block), "m = {m}");
        }
    }

    #[test]
    fn closed_forms() {
        let cf = closed_form_cm(6).unwrap();
        assert_eq!((cf.n, cf.k, cf.d, cf.rho), (15, 10, 3, 3));
        assert_eq!(cf.array.b, vec![15, 6, 1]);
        assert_eq!(cf.array.c, vec![1, 6, 15]);

        let cf = closed_form_cm(4).unwrap();
        assert_eq!(cf.array.b, vec![6, 1]);
        assert_eq!(cf.array.c, vec![1, 6]);

        let cf = closed_form_cm(5).unwrap();
        assert_eq!(cf.rho, 2);
        assert_eq!(cf.array.b, vec![10, 3]);
        assert_eq!(cf.array.c, vec![1, 6]);

        let cf = closed_form_cm_union(8).unwrap();
        assert_eq!((cf.n, cf.k, cf.rho), (28, 22, 2));
        assert_eq!(cf.array.b, vec![28, 15]);
        assert_eq!(cf.array.c, vec![1, 12], "top entry doubles when 4 divides m");

        let cf = closed_form_cm_union(6).unwrap();
        assert_eq!(cf.rho, 1);
        assert_eq!(cf.array.b, vec![15]);
        assert_eq!(cf.array.c, vec![1]);

        let cf = closed_form_cm_union(10).unwrap();
        assert_eq!(cf.array.b, vec![45, 28]);
        assert_eq!(cf.array.c, vec![1, 6]);
    }
}
