//! Dense linear algebra over GF(2), bit-packed into `u64` words.
//!
//! These two types are the computational substrate for the whole crate: the
//! exhaustive loops over syndrome space downstream justify word-parallel XOR
//! and popcount here. Column and row order are always exactly what the caller
//! supplied; nothing in this module re-sorts or canonicalizes, because the
//! construction layer owns ordering conventions.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

const WORD_BITS: usize = 64;

#[inline]
fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

/// A fixed-length vector over GF(2). Addition is entrywise XOR.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    /// The zero vector of the given length.
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// The all-ones vector of the given length.
    pub fn ones(len: usize) -> Self {
        let mut v = BitVec {
            len,
            words: vec![!0u64; words_for(len)],
        };
        v.mask_tail();
        v
    }

    /// Build from a slice of 0/1 entries.
    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = BitVec::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            debug_assert!(b <= 1, "entries must be 0 or 1");
            if b != 0 {
                v.set(i, true);
            }
        }
        v
    }

    /// Build a length-`len` vector with ones exactly at `support`.
    pub fn from_support(len: usize, support: &[usize]) -> Self {
        let mut v = BitVec::zeros(len);
        for &i in support {
            v.set(i, true);
        }
        v
    }

    /// Unpack the low `len` bits of `bits` (bit 0 becomes coordinate 0).
    pub fn from_packed_u32(bits: u32, len: usize) -> Self {
        assert!(len <= 32, "packed form only covers lengths up to 32");
        assert!(
            len == 32 || bits < (1u32 << len),
            "packed value has bits beyond the stated length"
        );
        let mut v = BitVec::zeros(len);
        if len > 0 {
            v.words[0] = bits as u64;
        }
        v
    }

    /// Pack into a `u32` (coordinate 0 becomes bit 0). Length must be ≤ 32.
    pub fn pack_u32(&self) -> u32 {
        assert!(self.len <= 32, "packed form only covers lengths up to 32");
        if self.len == 0 {
            0
        } else {
            self.words[0] as u32
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 != 0
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        let w = &mut self.words[i / WORD_BITS];
        let bit = 1u64 << (i % WORD_BITS);
        if value {
            *w |= bit;
        } else {
            *w &= !bit;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Entrywise XOR with another vector of the same length.
    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "length mismatch in xor");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Inner product mod 2.
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len, "length mismatch in dot product");
        let mut acc = 0u32;
        for (a, b) in self.words.iter().zip(&other.words) {
            acc ^= (a & b).count_ones();
        }
        acc & 1 != 0
    }

    /// Append one coordinate at the end.
    pub fn push_bit(&mut self, value: bool) {
        if self.len % WORD_BITS == 0 {
            self.words.push(0);
        }
        self.len += 1;
        if value {
            self.set(self.len - 1, true);
        }
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    fn mask_tail(&mut self) {
        let extra = self.len % WORD_BITS;
        if extra != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << extra) - 1;
            }
        }
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec({self})")
    }
}

/// Result of reduced row echelon form: the reduced matrix, its rank, and the
/// pivot columns in increasing order.
pub struct Echelon {
    pub matrix: BitMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// A dense row-major matrix over GF(2).
///
/// Rows of zero count are tolerated (they arise from degenerate codes such as
/// the full space, whose parity check is empty).
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    wpr: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let wpr = words_for(cols);
        BitMatrix {
            rows,
            cols,
            wpr,
            data: vec![0; rows * wpr],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BitMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Build from rows, all of length `cols`.
    pub fn from_rows(cols: usize, rows: &[BitVec]) -> Self {
        let mut m = BitMatrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "row {i} has the wrong length");
            m.row_words_mut(i).copy_from_slice(r.words());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.rows && j < self.cols, "entry ({i},{j}) out of range");
        (self.data[i * self.wpr + j / WORD_BITS] >> (j % WORD_BITS)) & 1 != 0
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i < self.rows && j < self.cols, "entry ({i},{j}) out of range");
        let w = &mut self.data[i * self.wpr + j / WORD_BITS];
        let bit = 1u64 << (j % WORD_BITS);
        if value {
            *w |= bit;
        } else {
            *w &= !bit;
        }
    }

    pub fn row(&self, i: usize) -> BitVec {
        assert!(i < self.rows, "row {i} out of range");
        BitVec {
            len: self.cols,
            words: self.row_words(i).to_vec(),
        }
    }

    pub fn column(&self, j: usize) -> BitVec {
        assert!(j < self.cols, "column {j} out of range");
        let mut v = BitVec::zeros(self.rows);
        for i in 0..self.rows {
            if self.get(i, j) {
                v.set(i, true);
            }
        }
        v
    }

    pub(crate) fn row_words(&self, i: usize) -> &[u64] {
        &self.data[i * self.wpr..(i + 1) * self.wpr]
    }

    fn row_words_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.wpr..(i + 1) * self.wpr]
    }

    /// XOR row `src` into row `dst`.
    pub fn xor_row_into(&mut self, src: usize, dst: usize) {
        assert!(src < self.rows && dst < self.rows && src != dst);
        let (src_row, dst_row) = if src < dst {
            let (a, b) = self.data.split_at_mut(dst * self.wpr);
            (&a[src * self.wpr..(src + 1) * self.wpr], &mut b[..self.wpr])
        } else {
            let (a, b) = self.data.split_at_mut(src * self.wpr);
            (&b[..self.wpr], &mut a[dst * self.wpr..(dst + 1) * self.wpr])
        };
        for (d, s) in dst_row.iter_mut().zip(src_row) {
            *d ^= s;
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        assert!(a < self.rows && b < self.rows);
        let (lo, hi) = (a.min(b), a.max(b));
        let (first, second) = self.data.split_at_mut(hi * self.wpr);
        first[lo * self.wpr..(lo + 1) * self.wpr].swap_with_slice(&mut second[..self.wpr]);
    }

    /// Matrix-vector product: entry `i` of the result is the parity of the
    /// columns of row `i` where `v` is supported.
    pub fn mat_vec(&self, v: &BitVec) -> Result<BitVec, Error> {
        if v.len() != self.cols {
            return Err(Error::Dimension {
                expected: self.cols,
                got: v.len(),
            });
        }
        let mut out = BitVec::zeros(self.rows);
        for i in 0..self.rows {
            let mut acc = 0u32;
            for (a, b) in self.row_words(i).iter().zip(v.words()) {
                acc ^= (a & b).count_ones();
            }
            if acc & 1 != 0 {
                out.set(i, true);
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    t.set(j, i, true);
                }
            }
        }
        t
    }

    /// Stack `other` below `self` (column counts must agree).
    pub fn stack(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.cols, "column count mismatch in stack");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        BitMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            wpr: self.wpr,
            data,
        }
    }

    /// Append one row at the bottom.
    pub fn push_row(&mut self, r: &BitVec) {
        assert_eq!(r.len(), self.cols, "row length mismatch in push_row");
        self.data.extend_from_slice(r.words());
        self.rows += 1;
    }

    /// Reduced row echelon form with deterministic leftmost-pivot elimination.
    /// Row space is preserved; over GF(2) there are no pivot ties to break.
    pub fn rref(&self) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut rank = 0usize;
        for col in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(pivot_row) = (rank..m.rows).find(|&i| m.get(i, col)) else {
                continue;
            };
            m.swap_rows(rank, pivot_row);
            for i in 0..m.rows {
                if i != rank && m.get(i, col) {
                    m.xor_row_into(rank, i);
                }
            }
            pivots.push(col);
            rank += 1;
        }
        Echelon { matrix: m, rank, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// A basis of `{v : M·v = 0}`, one vector per free column, free columns
    /// in increasing order. Basis size is `cols − rank`.
    pub fn nullspace(&self) -> Vec<BitVec> {
        let ech = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - ech.rank);
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = BitVec::zeros(self.cols);
            v.set(free, true);
            for (row, &p) in ech.pivots.iter().enumerate() {
                if ech.matrix.get(row, free) {
                    v.set(p, true);
                }
            }
            basis.push(v);
        }
        basis
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {}", self.row(i))?;
        }
        write!(f, "]")
    }
}
