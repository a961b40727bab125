//! Bit-packed symmetric boolean matrices and the reachability product.
//!
//! A [`BoolSymMatrix`] produced by this crate always represents `R(A^n)` for
//! the augmented adjacency matrix `A` of some graph (adjacency plus unit
//! diagonal), where `R` maps every positive entry to 1: `bit(i, j)` is set
//! exactly when `dist(i, j) <= n`. The product kernel exploits that shape.

use std::fmt;

use rayon::prelude::*;

use crate::error::Error;
use crate::graph::Graph;

const WORD_BITS: usize = u64::BITS as usize;

/// Symmetric boolean square matrix with unit diagonal, rows packed into
/// 64-bit words, with a per-row count of set bits kept alongside.
#[derive(Clone, PartialEq, Eq)]
pub struct BoolSymMatrix {
    width: usize,
    words_per_row: usize,
    words: Vec<u64>,
    fill: Vec<u32>,
}

impl BoolSymMatrix {
    /// Adjacency of `g` plus the unit diagonal; equals `R(A^1)`.
    pub fn from_graph(g: &Graph) -> Self {
        let width = g.node_count();
        let words_per_row = width.div_ceil(WORD_BITS);
        let mut m = Self {
            width,
            words_per_row,
            words: vec![0; width * words_per_row],
            fill: vec![0; width],
        };
        for i in 0..width {
            m.set_bit(i, i);
            for j in g.neighbors(i) {
                m.set_bit(i, j);
            }
        }
        m.recount_fill();
        m
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn bit(&self, row: usize, col: usize) -> bool {
        self.words[row * self.words_per_row + col / WORD_BITS] & (1u64 << (col % WORD_BITS)) != 0
    }

    /// Number of set bits in `row`.
    pub fn fill_count(&self, row: usize) -> usize {
        self.fill[row] as usize
    }

    pub fn is_row_full(&self, row: usize) -> bool {
        self.fill[row] as usize == self.width
    }

    /// True iff some row has no zero entry. In power semantics this means
    /// some node reaches every node within the current exponent.
    pub fn has_full_row(&self) -> bool {
        self.fill.iter().any(|&f| f as usize == self.width)
    }

    /// Reachability product: the returned matrix has `bit(l, c)` set exactly
    /// when some `i` has `self.bit(l, i)` and `other.bit(i, c)`, i.e. it is
    /// `R(M * M2)` for the integer product of the two operands.
    ///
    /// Both operands must be powers of the same augmented adjacency matrix;
    /// that makes the integer product symmetric and entrywise at least
    /// `other`, which the kernel assumes: it seeds the result from `other`,
    /// tests only entries still zero there, scans only the upper triangle
    /// and mirrors every hit.
    pub fn multiply(&self, other: &Self) -> Result<Self, Error> {
        self.check_width(other)?;
        let hits = product_hits(self, other);
        let mut out = other.clone();
        for &(l, c) in &hits {
            out.set_bit(l as usize, c as usize);
            out.set_bit(c as usize, l as usize);
        }
        out.recount_fill();
        Ok(out)
    }

    /// Same product as [`BoolSymMatrix::multiply`]; additionally stores
    /// `round` into `layers[l]` for every row `l` that becomes full during
    /// this multiplication, each exactly once.
    ///
    /// `layers` must already hold entries for exactly the rows that were
    /// full in `other`.
    pub fn multiply_tracking(
        &self,
        other: &Self,
        round: u32,
        layers: &mut [Option<u32>],
    ) -> Result<Self, Error> {
        self.check_width(other)?;
        assert_eq!(layers.len(), self.width, "layer map width mismatch");
        let hits = product_hits(self, other);
        let mut out = other.clone();
        let width = out.width as u32;
        let mut newly_full = |row: usize, out: &mut Self| {
            out.fill[row] += 1;
            if out.fill[row] == width {
                debug_assert!(layers[row].is_none(), "row {row} filled twice");
                layers[row] = Some(round);
            }
        };
        for &(l, c) in &hits {
            out.set_bit(l as usize, c as usize);
            newly_full(l as usize, &mut out);
            out.set_bit(c as usize, l as usize);
            newly_full(c as usize, &mut out);
        }
        Ok(out)
    }

    fn check_width(&self, other: &Self) -> Result<(), Error> {
        if self.width != other.width {
            return Err(Error::DimensionMismatch {
                left: self.width,
                right: other.width,
            });
        }
        Ok(())
    }

    fn set_bit(&mut self, row: usize, col: usize) {
        self.words[row * self.words_per_row + col / WORD_BITS] |= 1u64 << (col % WORD_BITS);
    }

    fn row_words(&self, row: usize) -> &[u64] {
        &self.words[row * self.words_per_row..(row + 1) * self.words_per_row]
    }

    fn recount_fill(&mut self) {
        for row in 0..self.width {
            self.fill[row] = self.row_words(row).iter().map(|w| w.count_ones()).sum();
        }
    }

    fn last_word_mask(&self) -> u64 {
        match self.width % WORD_BITS {
            0 => !0,
            bits => (1u64 << bits) - 1,
        }
    }
}

/// Early-exit boolean scalar product over packed rows.
#[inline]
fn and_any(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).any(|(x, y)| x & y != 0)
}

/// Upper-triangle positions `(l, c)` that are zero in `m2` but non-zero in
/// the product. Rows are scanned independently and the per-worker buffers
/// are concatenated in row order, so the hit list (and everything derived
/// from it) does not depend on the number of worker threads.
fn product_hits(m: &BoolSymMatrix, m2: &BoolSymMatrix) -> Vec<(u32, u32)> {
    (0..m.width)
        .into_par_iter()
        .fold(Vec::new, |mut hits, l| {
            scan_row(m, m2, l, &mut hits);
            hits
        })
        .reduce(Vec::new, |mut left, mut right| {
            left.append(&mut right);
            left
        })
}

fn scan_row(m: &BoolSymMatrix, m2: &BoolSymMatrix, l: usize, hits: &mut Vec<(u32, u32)>) {
    if m2.is_row_full(l) {
        return; // nothing left to compute in this row
    }
    let row_m = m.row_words(l);
    let row_m2 = m2.row_words(l);
    let first_word = (l + 1) / WORD_BITS;
    for (w, &m2_word) in row_m2.iter().enumerate().skip(first_word) {
        let mut zeros = !m2_word;
        if w == first_word {
            zeros &= !0u64 << ((l + 1) % WORD_BITS);
        }
        if w == m2.words_per_row - 1 {
            zeros &= m2.last_word_mask();
        }
        while zeros != 0 {
            let c = w * WORD_BITS + zeros.trailing_zeros() as usize;
            zeros &= zeros - 1;
            // Symmetry of m2 turns the column walk into a row AND.
            if and_any(row_m, m2.row_words(c)) {
                hits.push((l as u32, c as u32));
            }
        }
    }
}

impl fmt::Debug for BoolSymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.width > 32 {
            return write!(f, "BoolSymMatrix({}x{})", self.width, self.width);
        }
        writeln!(f, "BoolSymMatrix({}x{}) [", self.width, self.width)?;
        for row in 0..self.width {
            let bits: String = (0..self.width)
                .map(|c| if self.bit(row, c) { '1' } else { '0' })
                .collect();
            writeln!(f, "  {bits}")?;
        }
        write!(f, "]")
    }
}
