use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The variable `X[row, col]` of a `rows x cols` matrix of indeterminates.
/// Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VarIndex {
    row: usize,
    col: usize,
    dims: (usize, usize),
}

impl VarIndex {
    pub fn new(row: usize, col: usize, dims: (usize, usize)) -> Result<Self> {
        if row == 0 || row > dims.0 || col == 0 || col > dims.1 {
            return Err(Error::IndexOutOfRange(format!(
                "X[{row},{col}] in a {}x{} matrix",
                dims.0, dims.1
            )));
        }
        Ok(VarIndex { row, col, dims })
    }

    pub fn row(&self) -> usize {
        self.row
    }

    pub fn col(&self) -> usize {
        self.col
    }

    pub fn dims(&self) -> (usize, usize) {
        self.dims
    }

    /// Position in the row-major flattening; smaller positions are larger variables.
    pub fn flat(&self) -> usize {
        (self.row - 1) * self.dims.1 + (self.col - 1)
    }
}

/// Order on variables: `X[i,j] > X[i',j']` iff `i < i'`, or `i = i'` and `j < j'`.
pub fn compare_variables(a: &VarIndex, b: &VarIndex) -> Result<Ordering> {
    if a.dims != b.dims {
        return Err(Error::DimensionMismatch {
            expected: a.dims,
            found: b.dims,
        });
    }
    Ok((b.row, b.col).cmp(&(a.row, a.col)))
}

/// Exponent vector of a monomial, stored as a dense `rows x cols` matrix in
/// row-major order. Row-major order is also decreasing variable order, so the
/// lexicographic monomial order is plain lexicographic comparison of `entries`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct ExponentMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

impl ExponentMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExponentMatrix {
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn from_flat(rows: usize, cols: usize, entries: Vec<u32>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::malformed(
                "exponent matrix",
                format!("{} entries for a {rows}x{cols} matrix", entries.len()),
            ));
        }
        Ok(ExponentMatrix { rows, cols, entries })
    }

    /// Builds a matrix from its rows. An empty row list is the `0 x 0` matrix;
    /// use [`ExponentMatrix::zeros`] for `k x 0` shapes.
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::malformed("exponent matrix", "ragged rows"));
        }
        Ok(ExponentMatrix {
            rows: rows.len(),
            cols,
            entries: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn variable(var: &VarIndex) -> Self {
        let (rows, cols) = var.dims();
        let mut m = ExponentMatrix::zeros(rows, cols);
        m.entries[var.flat()] = 1;
        m
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    /// Entry at 0-based position `(r, c)`.
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: u32) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub(crate) fn entries_mut(&mut self) -> &mut [u32] {
        &mut self.entries
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        if self.cols == 0 {
            return vec![Vec::new(); self.rows];
        }
        self.entries.chunks(self.cols).map(<[u32]>::to_vec).collect()
    }

    pub fn degree(&self) -> u32 {
        self.entries.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    fn check_dims(&self, other: &Self) -> Result<()> {
        if self.dims() != other.dims() {
            return Err(Error::DimensionMismatch {
                expected: self.dims(),
                found: other.dims(),
            });
        }
        Ok(())
    }

    /// Whether `self` divides `other` (entrywise `<=`). Dimensions must agree.
    pub fn divides(&self, other: &Self) -> bool {
        self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.entries
            .iter()
            .zip(&other.entries)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_dims(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn lcm(&self, other: &Self) -> Result<Self> {
        self.check_dims(other)?;
        Ok(self.zip_with(other, u32::max))
    }

    /// `self / divisor` if the division is exact.
    pub fn checked_div(&self, divisor: &Self) -> Option<Self> {
        if self.dims() != divisor.dims() || !divisor.divides(self) {
            return None;
        }
        Some(self.zip_with(divisor, |a, b| a - b))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u32, u32) -> u32) -> Self {
        ExponentMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = ExponentMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// Variables of the monomial in decreasing variable order, with repetition:
    /// `(row, col)` pairs, 1-based.
    pub fn variable_word(&self) -> Vec<(usize, usize)> {
        let mut word = Vec::with_capacity(self.degree() as usize);
        for r in 0..self.rows {
            for c in 0..self.cols {
                for _ in 0..self.get(r, c) {
                    word.push((r + 1, c + 1));
                }
            }
        }
        word
    }
}

impl Ord for ExponentMatrix {
    fn cmp(&self, other: &Self) -> Ordering {
        self.dims()
            .cmp(&other.dims())
            .then_with(|| self.entries.cmp(&other.entries))
    }
}

impl PartialOrd for ExponentMatrix {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ExponentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_rows())
    }
}

impl TryFrom<Vec<Vec<u32>>> for ExponentMatrix {
    type Error = Error;

    fn try_from(rows: Vec<Vec<u32>>) -> Result<Self> {
        ExponentMatrix::from_rows(&rows)
    }
}

impl From<ExponentMatrix> for Vec<Vec<u32>> {
    fn from(m: ExponentMatrix) -> Self {
        m.to_rows()
    }
}

/// Lexicographic monomial order induced by [`compare_variables`].
pub fn compare_monomials_lex(a: &ExponentMatrix, b: &ExponentMatrix) -> Result<Ordering> {
    a.check_dims(b)?;
    Ok(a.entries.cmp(&b.entries))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn var(r: usize, c: usize) -> VarIndex {
        VarIndex::new(r, c, (2, 2)).unwrap()
    }

    fn mat(rows: &[&[u32]]) -> ExponentMatrix {
        ExponentMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn variable_order() {
        assert_eq!(
            compare_variables(&var(1, 2), &var(2, 1)).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            compare_variables(&var(1, 1), &var(1, 1)).unwrap(),
            Ordering::Equal
        );
        assert_eq!(
            compare_variables(&var(2, 1), &var(2, 2)).unwrap(),
            Ordering::Greater
        );
        let other = VarIndex::new(1, 1, (2, 3)).unwrap();
        assert!(compare_variables(&var(1, 1), &other).is_err());
    }

    #[test]
    fn var_index_range() {
        assert!(VarIndex::new(0, 1, (2, 2)).is_err());
        assert!(VarIndex::new(3, 1, (2, 2)).is_err());
        assert!(VarIndex::new(1, 3, (2, 2)).is_err());
    }

    #[test]
    fn monomial_order_examples() {
        // X11^2 X22 vs X11 X12 X21
        let a = mat(&[&[2, 0], &[0, 1]]);
        let b = mat(&[&[1, 1], &[1, 0]]);
        assert_eq!(compare_monomials_lex(&a, &b).unwrap(), Ordering::Greater);
        assert_eq!(compare_monomials_lex(&a, &a).unwrap(), Ordering::Equal);
        // X12^2 X21 vs X11 X12 X22
        let c = mat(&[&[0, 2], &[1, 0]]);
        let d = mat(&[&[1, 1], &[0, 1]]);
        assert_eq!(compare_monomials_lex(&c, &d).unwrap(), Ordering::Less);
        assert!(compare_monomials_lex(&a, &ExponentMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn division_and_lcm() {
        let a = mat(&[&[2, 0], &[0, 1]]);
        let b = mat(&[&[1, 0], &[0, 1]]);
        assert!(b.divides(&a));
        assert_eq!(a.checked_div(&b).unwrap(), mat(&[&[1, 0], &[0, 0]]));
        assert!(a.checked_div(&mat(&[&[0, 1], &[0, 0]])).is_none());
        assert_eq!(
            a.lcm(&mat(&[&[1, 1], &[0, 0]])).unwrap(),
            mat(&[&[2, 1], &[0, 1]])
        );
        assert!(a.is_coprime(&mat(&[&[0, 3], &[1, 0]])));
        assert!(!a.is_coprime(&b));
    }

    #[test]
    fn word_and_transpose() {
        let a = mat(&[&[0, 2], &[1, 0]]);
        assert_eq!(a.variable_word(), vec![(1, 2), (1, 2), (2, 1)]);
        assert_eq!(a.transpose(), mat(&[&[0, 1], &[2, 0]]));
        let empty = ExponentMatrix::zeros(3, 0);
        assert_eq!(empty.to_rows(), vec![Vec::<u32>::new(); 3]);
        assert_eq!(empty.transpose().dims(), (0, 3));
    }
}
