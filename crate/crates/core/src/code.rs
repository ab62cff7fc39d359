//! Generic binary linear code engine: syndromes, coset tables, covering
//! radius, minimum distance, the covering-set structure, and the union and
//! extension constructions.
//!
//! The coset table is the workhorse. A full-rank parity check is derived once
//! up front, so the syndrome space is exactly `F_2^r` with `r = n − k` and a
//! breadth-first search over it — generators are the columns of the check
//! matrix — yields every coset weight and a leader per coset with no
//! reachability bookkeeping. Syndromes are bit-packed integers so the table is
//! a flat array.

use alloc::vec;
use alloc::vec::Vec;

use crate::bits::{BitMatrix, BitVec};
use crate::error::Error;
use crate::limits;

/// A binary linear `[n, k]` code held as a generator / parity-check pair.
///
/// Invariants (checked at construction): `generator` is `k×n` of rank `k`,
/// `check` is `(n−k)×n` of rank `n−k`, and every generator row has zero
/// syndrome.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearCode {
    n: usize,
    k: usize,
    generator: BitMatrix,
    check: BitMatrix,
}

impl LinearCode {
    /// Build from a raw parity-check matrix.
    ///
    /// The stored check matrix is a full-rank row basis of `h_raw` (the
    /// nonzero rows of its reduced echelon form); the generator is a
    /// nullspace basis. Degenerate inputs are allowed: a zero-rank `h_raw`
    /// gives the full space, a square invertible one gives the zero code.
    pub fn from_parity_check(h_raw: &BitMatrix) -> LinearCode {
        let n = h_raw.cols();
        let ech = h_raw.rref();
        let rows: Vec<BitVec> = (0..ech.rank).map(|i| ech.matrix.row(i)).collect();
        let check = BitMatrix::from_rows(n, &rows);
        let generator = BitMatrix::from_rows(n, &check.nullspace());
        let code = LinearCode {
            n,
            k: n - ech.rank,
            generator,
            check,
        };
        code.assert_invariants();
        code
    }

    /// Build from a generator matrix. Dependent rows are replaced by a row
    /// basis; independent rows are kept verbatim.
    pub fn from_generator(g: &BitMatrix) -> LinearCode {
        let n = g.cols();
        let ech = g.rref();
        let generator = if ech.rank == g.rows() {
            g.clone()
        } else {
            let rows: Vec<BitVec> = (0..ech.rank).map(|i| ech.matrix.row(i)).collect();
            BitMatrix::from_rows(n, &rows)
        };
        let check = BitMatrix::from_rows(n, &generator.nullspace());
        let code = LinearCode {
            n,
            k: ech.rank,
            generator,
            check,
        };
        code.assert_invariants();
        code
    }

    /// Build from an explicit generator / check pair, validating the defining
    /// relations. Intended for deserialization.
    pub fn from_parts(generator: BitMatrix, check: BitMatrix) -> Result<LinearCode, Error> {
        if generator.cols() != check.cols() {
            return Err(Error::Dimension {
                expected: generator.cols(),
                got: check.cols(),
            });
        }
        let n = generator.cols();
        let k = generator.rows();
        if check.rows() != n - k
            || generator.rank() != k
            || check.rank() != n - k
        {
            return Err(Error::InvalidParameter(
                "generator/check pair does not have complementary full ranks",
            ));
        }
        for i in 0..k {
            if !check.mat_vec(&generator.row(i))?.is_zero() {
                return Err(Error::InvalidParameter(
                    "a generator row has nonzero syndrome",
                ));
            }
        }
        Ok(LinearCode {
            n,
            k,
            generator,
            check,
        })
    }

    fn assert_invariants(&self) {
        debug_assert_eq!(self.generator.rows(), self.k);
        debug_assert_eq!(self.check.rows(), self.n - self.k);
        for i in 0..self.generator.rows() {
            debug_assert!(self
                .check
                .mat_vec(&self.generator.row(i))
                .unwrap()
                .is_zero());
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Redundancy `r = n − k`, the syndrome length.
    pub fn redundancy(&self) -> usize {
        self.n - self.k
    }

    pub fn generator(&self) -> &BitMatrix {
        &self.generator
    }

    pub fn check(&self) -> &BitMatrix {
        &self.check
    }

    pub fn syndrome(&self, v: &BitVec) -> Result<BitVec, Error> {
        self.check.mat_vec(v)
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        matches!(self.syndrome(v), Ok(s) if s.is_zero())
    }

    /// Syndrome of the all-ones vector.
    pub fn all_ones_syndrome(&self) -> BitVec {
        self.syndrome(&BitVec::ones(self.n)).expect("length matches")
    }
}

/// Exhaustive coset weight table over the full syndrome space `F_2^r`.
///
/// `weight[s]` is the coset weight of the packed syndrome `s`: the minimum
/// number of check-matrix columns summing to `s`, which equals the distance
/// from any coset member to the code. Leaders are stored implicitly as BFS
/// tree back-pointers (the column used to reach each syndrome) and
/// reconstructed on demand; along a shortest path the columns are necessarily
/// distinct, so the reconstructed leader has weight exactly `weight[s]`.
pub struct CosetTable {
    r: usize,
    n: usize,
    weight: Vec<u16>,
    reach: Vec<u16>,
    cols: Vec<u32>,
}

const NO_REACH: u16 = u16::MAX;

impl CosetTable {
    /// Build with the default enumeration guard.
    pub fn build(code: &LinearCode) -> Result<CosetTable, Error> {
        CosetTable::build_with_limit(code, limits::TABLE_BITS)
    }

    /// Build with an explicit redundancy guard (capped at the hard limit).
    pub fn build_with_limit(code: &LinearCode, max_bits: usize) -> Result<CosetTable, Error> {
        let max_bits = max_bits.min(limits::TABLE_BITS_HARD);
        let r = code.redundancy();
        if r > max_bits {
            return Err(Error::TooLarge {
                what: "coset table redundancy (bits)",
                value: r,
                limit: max_bits,
            });
        }
        assert!(code.n() < NO_REACH as usize, "too many columns for back-pointers");
        let cols: Vec<u32> = (0..code.n())
            .map(|j| code.check().column(j).pack_u32())
            .collect();
        let size = 1usize << r;
        let mut weight = vec![u16::MAX; size];
        let mut reach = vec![NO_REACH; size];
        weight[0] = 0;
        let mut frontier = vec![0u32];
        let mut level: u16 = 0;
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &s in &frontier {
                for (ci, &h) in cols.iter().enumerate() {
                    let t = (s ^ h) as usize;
                    if weight[t] == u16::MAX {
                        weight[t] = level + 1;
                        reach[t] = ci as u16;
                        next.push(t as u32);
                    }
                }
            }
            frontier = next;
            level += 1;
        }
        debug_assert!(
            weight.iter().all(|&w| w != u16::MAX),
            "full-rank check must reach every syndrome"
        );
        Ok(CosetTable {
            r,
            n: code.n(),
            weight,
            reach,
            cols,
        })
    }

    /// Number of syndromes, `2^r`.
    pub fn size(&self) -> usize {
        self.weight.len()
    }

    pub fn redundancy(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn weight_of(&self, s: u32) -> usize {
        self.weight[s as usize] as usize
    }

    pub fn weights(&self) -> &[u16] {
        &self.weight
    }

    /// All `n` check columns, bit-packed, in column order (duplicates and
    /// zeros included — neighbor counting needs one entry per coordinate).
    pub fn columns(&self) -> &[u32] {
        &self.cols
    }

    /// The distinct nonzero columns: the connection set of the coset graph.
    pub fn distinct_nonzero_columns(&self) -> Vec<u32> {
        let mut cols = self.cols.clone();
        cols.sort_unstable();
        cols.dedup();
        cols.retain(|&h| h != 0);
        cols
    }

    pub fn pack_syndrome(&self, s: &BitVec) -> u32 {
        assert_eq!(s.len(), self.r, "syndrome length mismatch");
        s.pack_u32()
    }

    /// Reconstruct a minimum-weight coset representative by walking the BFS
    /// tree back to the zero syndrome.
    pub fn leader(&self, s: u32) -> BitVec {
        let mut v = BitVec::zeros(self.n);
        let mut cur = s;
        while cur != 0 {
            let ci = self.reach[cur as usize];
            debug_assert_ne!(ci, NO_REACH);
            debug_assert!(!v.get(ci as usize), "shortest-path columns are distinct");
            v.set(ci as usize, true);
            cur ^= self.cols[ci as usize];
        }
        v
    }

    /// Maximum coset weight.
    pub fn covering_radius(&self) -> usize {
        self.weight.iter().map(|&w| w as usize).max().unwrap_or(0)
    }

    /// Pack the image of this coset's leader under an arbitrary matrix map
    /// with at most 32 rows — e.g. another code's check matrix, or a
    /// redundant (non-full-rank) check whose raw syndromes serve as labels.
    pub fn leader_image_packed(&self, map: &BitMatrix, s: u32) -> Result<u32, Error> {
        assert!(map.rows() <= 32, "packed image needs at most 32 rows");
        Ok(map.mat_vec(&self.leader(s))?.pack_u32())
    }

    /// Entry `i` = number of syndromes of coset weight `i`. The counts sum to
    /// `2^r` and the last index is the covering radius.
    pub fn weight_distribution(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.covering_radius() + 1];
        for &w in &self.weight {
            counts[w as usize] += 1;
        }
        counts
    }
}

/// Smallest dependent-column count up to a small bound, i.e. the minimum
/// distance when it is at most `w_max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinDistance {
    Exact(usize),
    GreaterThan(usize),
}

/// Minimum distance by direct column inspection: a zero column means 1,
/// duplicate columns mean 2, three columns summing to zero mean 3, two
/// disjoint pairs with equal sums mean 4. `w_max` is capped at 4 by contract.
pub fn minimum_distance_upto(code: &LinearCode, w_max: usize) -> MinDistance {
    assert!(w_max <= 4, "distance search is bounded by design");
    assert!(
        code.redundancy() <= 32,
        "column packing covers redundancy up to 32"
    );
    if code.k() == 0 {
        // No nonzero codewords at all.
        return MinDistance::GreaterThan(w_max);
    }
    let cols: Vec<u32> = (0..code.n())
        .map(|j| code.check().column(j).pack_u32())
        .collect();
    if w_max >= 1 && cols.iter().any(|&h| h == 0) {
        return MinDistance::Exact(1);
    }
    let mut sorted = cols.clone();
    sorted.sort_unstable();
    if w_max >= 2 && sorted.windows(2).any(|w| w[0] == w[1]) {
        return MinDistance::Exact(2);
    }
    // Columns are now known distinct and nonzero, so any further collision
    // automatically involves fresh indices.
    if w_max >= 3 {
        for i in 0..cols.len() {
            for j in i + 1..cols.len() {
                if sorted.binary_search(&(cols[i] ^ cols[j])).is_ok() {
                    return MinDistance::Exact(3);
                }
            }
        }
    }
    if w_max >= 4 {
        let mut pair_sums = Vec::with_capacity(cols.len() * (cols.len() - 1) / 2);
        for i in 0..cols.len() {
            for j in i + 1..cols.len() {
                pair_sums.push(cols[i] ^ cols[j]);
            }
        }
        pair_sums.sort_unstable();
        if pair_sums.windows(2).any(|w| w[0] == w[1]) {
            return MinDistance::Exact(4);
        }
    }
    MinDistance::GreaterThan(w_max)
}

/// Outcome of inspecting the covering set `C(ρ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverReport {
    /// True iff exactly one coset attains the covering radius.
    pub single_top_coset: bool,
    /// The packed syndrome of that coset, when unique.
    pub witness: Option<u32>,
    /// True iff the unique top coset is the all-ones translate `C + 1`.
    pub covers_all_ones: bool,
}

/// Check whether the covering set is a single coset, and whether that coset
/// is the all-ones translate. A code with this property is called
/// non-antipodal here; the union construction below requires it.
pub fn nonantipodal_with_coset_cover(code: &LinearCode, table: &CosetTable) -> CoverReport {
    let rho = table.covering_radius() as u16;
    let mut top = table
        .weights()
        .iter()
        .enumerate()
        .filter(|&(_, &w)| w == rho);
    let witness = top.next().map(|(s, _)| s as u32);
    let single = witness.is_some() && top.next().is_none();
    let covers = if single {
        let ones_syndrome = table.pack_syndrome(&code.all_ones_syndrome());
        witness == Some(ones_syndrome)
    } else {
        false
    };
    CoverReport {
        single_top_coset: single,
        witness: if single { witness } else { None },
        covers_all_ones: covers,
    }
}

/// The union `C ∪ C(ρ)` as a linear code.
///
/// Requires the covering set to be the all-ones coset (then the union is the
/// linear code generated by `C` and the all-ones vector) and `ρ ≥ 1`. The
/// returned generator is literally the old rows plus the all-ones row.
pub fn union_with_covering_set(
    code: &LinearCode,
    table: &CosetTable,
) -> Result<LinearCode, Error> {
    let report = nonantipodal_with_coset_cover(code, table);
    if table.covering_radius() == 0 {
        return Err(Error::NotApplicable(
            "covering radius 0: the covering set is the code itself",
        ));
    }
    if !(report.single_top_coset && report.covers_all_ones) {
        return Err(Error::NotApplicable(
            "covering set is not the all-ones coset, union is not linear",
        ));
    }
    let mut g = code.generator().clone();
    g.push_row(&BitVec::ones(code.n()));
    let union = LinearCode::from_generator(&g);
    debug_assert_eq!(union.k(), code.k() + 1);
    Ok(union)
}

/// Extend by an overall parity bit: each generator row gains its own parity;
/// length grows by one, dimension is preserved.
pub fn extend_with_parity(code: &LinearCode) -> LinearCode {
    let rows: Vec<BitVec> = (0..code.k())
        .map(|i| {
            let mut row = code.generator().row(i);
            let parity = row.weight() % 2 == 1;
            row.push_bit(parity);
            row
        })
        .collect();
    LinearCode::from_generator(&BitMatrix::from_rows(code.n() + 1, &rows))
}

/// Coset-weight view of a translate `C + t`: the distance from a coset with
/// syndrome `s` to `C + t` is the weight of `s + syndrome(t)`, so the view is
/// the base table with all syndromes shifted.
pub struct TranslateView<'a> {
    table: &'a CosetTable,
    shift: u32,
}

pub fn translate_view<'a>(
    table: &'a CosetTable,
    code: &LinearCode,
    t: &BitVec,
) -> Result<TranslateView<'a>, Error> {
    let shift = table.pack_syndrome(&code.syndrome(t)?);
    Ok(TranslateView { table, shift })
}

impl TranslateView<'_> {
    #[inline]
    pub fn weight_of(&self, s: u32) -> usize {
        self.table.weight_of(s ^ self.shift)
    }

    pub fn size(&self) -> usize {
        self.table.size()
    }

    pub fn shift(&self) -> u32 {
        self.shift
    }

    pub fn table(&self) -> &CosetTable {
        self.table
    }
}
