//! Dense linear algebra over GF(2).
//!
//! Matrices are stored row-major with one `u64` word per row, so a matrix
//! may have at most 64 columns. Rows are limited to 64 as well, which lets
//! columns be extracted as single words. Both limits are far above the
//! sizes used anywhere in this crate.

use std::fmt;

use crate::error::Error;

/// Maximum number of rows or columns of a [`BitMatrix`].
pub const MAX_DIM: usize = 64;

/// A dense 0/1 matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

/// Reduced row echelon form permuted into `[I_r | D]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardForm {
    /// The permuted matrix `[I_r | D]`.
    pub matrix: BitMatrix,
    /// Original indices of the columns forming `I_r`, in pivot order.
    pub basis_columns: Vec<usize>,
    /// `column_order[k]` is the original index of standard-form column `k`.
    pub column_order: Vec<usize>,
}

impl StandardForm {
    /// The standard form with its columns put back in the original order.
    /// This is the reduced row echelon form of the input.
    pub fn unpermuted(&self) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.matrix.rows, self.matrix.cols);
        for (k, &orig) in self.column_order.iter().enumerate() {
            out.set_col(orig, self.matrix.col(k));
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.basis_columns.len()
    }
}

#[inline]
fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows <= MAX_DIM && cols <= MAX_DIM, "matrix {rows}x{cols} exceeds {MAX_DIM}");
        BitMatrix { rows, cols, data: vec![0; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i] = 1 << i;
        }
        m
    }

    /// Builds a matrix from rows of 0/1 entries.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self, Error> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        if rows.len() > MAX_DIM || cols > MAX_DIM {
            return Err(Error::TooLarge { what: "matrix dimension", limit: MAX_DIM });
        }
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::Parse(format!("row {i} has {} entries, expected {cols}", r.len())));
            }
            for (j, &b) in r.iter().enumerate() {
                match b {
                    0 => {}
                    1 => m.data[i] |= 1 << j,
                    _ => return Err(Error::Parse(format!("entry ({i},{j}) is {b}, not 0 or 1"))),
                }
            }
        }
        Ok(m)
    }

    /// Builds a `rows x cols` matrix from column words (bit `i` of a word is row `i`).
    pub fn from_columns(rows: usize, columns: &[u64]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, &c) in columns.iter().enumerate() {
            m.set_col(j, c);
        }
        m
    }

    pub fn row_count(&self) -> usize {
        self.rows
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.rows && j < self.cols);
        (self.data[i] >> j) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i < self.rows && j < self.cols);
        if value {
            self.data[i] |= 1 << j;
        } else {
            self.data[i] &= !(1 << j);
        }
    }

    /// Row `i` as a bit word (bit `j` is column `j`).
    pub fn row(&self, i: usize) -> u64 {
        self.data[i]
    }

    pub fn rows(&self) -> &[u64] {
        &self.data
    }

    /// Column `j` as a bit word (bit `i` is row `i`).
    pub fn col(&self, j: usize) -> u64 {
        let mut c = 0;
        for (i, &r) in self.data.iter().enumerate() {
            c |= ((r >> j) & 1) << i;
        }
        c
    }

    pub fn columns(&self) -> Vec<u64> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    fn set_col(&mut self, j: usize, c: u64) {
        for (i, r) in self.data.iter_mut().enumerate() {
            *r = (*r & !(1 << j)) | (((c >> i) & 1) << j);
        }
    }

    /// Appends a row given as a bit word.
    pub fn push_row(&mut self, row: u64) {
        assert!(self.rows < MAX_DIM);
        self.data.push(row & low_mask(self.cols));
        self.rows += 1;
    }

    /// The submatrix made of the listed columns, in the listed order.
    pub fn select_columns(&self, cols: &[usize]) -> BitMatrix {
        let mut m = Self::zeros(self.rows, cols.len());
        for (k, &j) in cols.iter().enumerate() {
            m.set_col(k, self.col(j));
        }
        m
    }

    pub fn transpose(&self) -> BitMatrix {
        BitMatrix::from_columns(self.cols, &self.data)
    }

    /// Stacks `other` below `self`.
    pub fn stack(&self, other: &BitMatrix) -> Result<BitMatrix, Error> {
        if self.cols != other.cols {
            return Err(Error::ColumnMismatch { left: self.cols, right: other.cols });
        }
        if self.rows + other.rows > MAX_DIM {
            return Err(Error::TooLarge { what: "matrix dimension", limit: MAX_DIM });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(BitMatrix { rows: self.rows + other.rows, cols: self.cols, data })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&r| r == 0)
    }

    /// GF(2) rank.
    pub fn rank(&self) -> usize {
        rank_of_words(&self.data)
    }

    /// Reduced row echelon form with zero rows removed, and its pivot columns.
    ///
    /// Columns are scanned left to right; for each, the first unused row holding
    /// a 1 in that column becomes the pivot row.
    pub fn rref(&self) -> (BitMatrix, Vec<usize>) {
        let mut rows = self.data.clone();
        let mut pivots = Vec::new();
        let mut next = 0;
        for j in 0..self.cols {
            let bit = 1u64 << j;
            let Some(p) = (next..rows.len()).find(|&i| rows[i] & bit != 0) else {
                continue;
            };
            rows.swap(next, p);
            let pivot_row = rows[next];
            for (i, r) in rows.iter_mut().enumerate() {
                if i != next && *r & bit != 0 {
                    *r ^= pivot_row;
                }
            }
            pivots.push(j);
            next += 1;
            if next == rows.len() {
                break;
            }
        }
        rows.truncate(next);
        (BitMatrix { rows: next, cols: self.cols, data: rows }, pivots)
    }

    /// `[I_r | D]` with r = rank, plus the column permutation that produces it.
    pub fn standard_form(&self) -> StandardForm {
        let (reduced, pivots) = self.rref();
        let mut column_order = pivots.clone();
        column_order.extend((0..self.cols).filter(|j| !pivots.contains(j)));
        StandardForm { matrix: reduced.select_columns(&column_order), basis_columns: pivots, column_order }
    }

    /// True iff both matrices have the same GF(2) row space.
    pub fn row_space_equal(&self, other: &BitMatrix) -> Result<bool, Error> {
        if self.cols != other.cols {
            return Err(Error::ColumnMismatch { left: self.cols, right: other.cols });
        }
        let (a, _) = self.rref();
        let (b, _) = other.rref();
        Ok(a == b)
    }

    /// Parses the matrix text format: `ROWS COLS`, then `ROWS` lines of
    /// `COLS` characters from `{0,1}`, then optionally `labels: l1 ... lN`.
    pub fn parse_text(text: &str) -> Result<(BitMatrix, Option<Vec<String>>), Error> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty matrix file".into()))?;
        let dims: Vec<&str> = header.split_whitespace().collect();
        let [r, c] = dims.as_slice() else {
            return Err(Error::Parse(format!("bad matrix header {header:?}")));
        };
        let parse_dim = |s: &str| s.parse::<usize>().map_err(|_| Error::Parse(format!("bad dimension {s:?}")));
        let (rows, cols) = (parse_dim(r)?, parse_dim(c)?);
        if rows > MAX_DIM || cols > MAX_DIM {
            return Err(Error::TooLarge { what: "matrix dimension", limit: MAX_DIM });
        }
        let mut m = BitMatrix::zeros(rows, cols);
        for i in 0..rows {
            let line = lines.next().ok_or_else(|| Error::Parse(format!("missing matrix row {i}")))?.trim();
            if line.len() != cols {
                return Err(Error::Parse(format!("row {i} has {} characters, expected {cols}", line.len())));
            }
            for (j, ch) in line.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => m.data[i] |= 1 << j,
                    _ => return Err(Error::Parse(format!("invalid character {ch:?} in row {i}"))),
                }
            }
        }
        let labels = match lines.next() {
            None => None,
            Some(l) => {
                let rest = l
                    .trim()
                    .strip_prefix("labels:")
                    .ok_or_else(|| Error::Parse(format!("unexpected trailing line {l:?}")))?;
                let labels: Vec<String> = rest.split_whitespace().map(str::to_owned).collect();
                if labels.len() != cols {
                    return Err(Error::LabelCount { labels: labels.len(), columns: cols });
                }
                Some(labels)
            }
        };
        if let Some(extra) = lines.next() {
            return Err(Error::Parse(format!("unexpected trailing line {extra:?}")));
        }
        Ok((m, labels))
    }

    /// Writes the matrix text format, with a labels line when given.
    pub fn to_text(&self, labels: Option<&[String]>) -> String {
        let mut out = format!("{} {}\n{self}", self.rows, self.cols);
        if let Some(labels) = labels {
            out.push_str("labels:");
            for l in labels {
                out.push(' ');
                out.push_str(l);
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &r in &self.data {
            for j in 0..self.cols {
                f.write_str(if (r >> j) & 1 == 1 { "1" } else { "0" })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}

/// Rank of a set of GF(2) vectors given as words.
pub(crate) fn rank_of_words(words: &[u64]) -> usize {
    let mut basis = XorBasis::default();
    words.iter().filter(|&&w| basis.insert(w)).count()
}

/// Incremental basis of a subspace of GF(2)^64, indexed by leading bit.
#[derive(Clone)]
pub(crate) struct XorBasis {
    by_lead: [u64; 64],
    present: u64,
}

impl Default for XorBasis {
    fn default() -> Self {
        XorBasis { by_lead: [0; 64], present: 0 }
    }
}

impl XorBasis {
    /// Reduces `v` against the basis; the result is zero iff `v` is in the span.
    pub fn reduce(&self, mut v: u64) -> u64 {
        let mut live = v & self.present;
        while live != 0 {
            let b = 63 - live.leading_zeros() as usize;
            v ^= self.by_lead[b];
            live = v & self.present & low_mask(b);
        }
        v
    }

    /// Inserts `v`; returns false if it was already in the span.
    pub fn insert(&mut self, v: u64) -> bool {
        let r = self.reduce(v);
        if r == 0 {
            return false;
        }
        let b = 63 - r.leading_zeros() as usize;
        self.by_lead[b] = r;
        self.present |= 1 << b;
        true
    }
}
