//! Sparse exact row reduction over the rationals.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::poly::Rational;

pub type SparseRow = BTreeMap<usize, Rational>;

/// `row -= factor * other`, dropping cancelled entries.
fn axpy(row: &mut SparseRow, factor: &Rational, other: &SparseRow) {
    for (&c, v) in other {
        let delta = factor * v;
        match row.entry(c) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(-delta);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() -= delta;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

/// Row space in echelon form, keyed by pivot column; each pivot entry is 1.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Eliminates pivot columns from the front of `row` until its leading
    /// column is free or it vanishes.
    fn reduce_leading(&self, mut row: SparseRow) -> SparseRow {
        while let Some((&c, v)) = row.first_key_value() {
            match self.rows.get(&c) {
                Some(p) => {
                    let factor = v.clone();
                    axpy(&mut row, &factor, p);
                }
                None => break,
            }
        }
        row
    }

    /// Adds a row; returns whether the rank grew.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let mut row = self.reduce_leading(row);
        let Some((&c, lead)) = row.first_key_value() else {
            return false;
        };
        if !lead.is_one() {
            let inv = lead.recip();
            for v in row.values_mut() {
                *v *= &inv;
            }
        }
        self.rows.insert(c, row);
        true
    }

    /// Whether `row` lies in the row space.
    pub fn contains(&self, row: &SparseRow) -> bool {
        self.reduce_leading(row.clone()).is_empty()
    }

    /// Fully reduced rows: every pivot column is zero outside its own row.
    pub fn reduced(&self) -> BTreeMap<usize, SparseRow> {
        let mut rows = self.rows.clone();
        let pivots: Vec<usize> = rows.keys().rev().copied().collect();
        for &p in &pivots {
            let prow = rows[&p].clone();
            for (&q, row) in rows.range_mut(..p) {
                debug_assert!(q < p);
                if let Some(v) = row.get(&p).cloned() {
                    axpy(row, &v, &prow);
                }
            }
        }
        rows
    }

    /// Basis of `{x : A x = 0}` for the matrix whose rows were inserted,
    /// one vector per free column in increasing order, with a 1 at that
    /// column and zeros at the other free columns.
    pub fn kernel(&self, ncols: usize) -> Vec<SparseRow> {
        let reduced = self.reduced();
        let mut by_column: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
        for (&p, row) in &reduced {
            for (&c, v) in row.range(p + 1..) {
                by_column.entry(c).or_default().push((p, v.clone()));
            }
        }
        (0..ncols)
            .filter(|c| !reduced.contains_key(c))
            .map(|f| {
                let mut v = SparseRow::new();
                v.insert(f, Rational::one());
                for (p, x) in by_column.get(&f).into_iter().flatten() {
                    v.insert(*p, -x.clone());
                }
                v
            })
            .collect()
    }
}

pub fn rank(rows: impl IntoIterator<Item = SparseRow>) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(entries: &[(usize, i64)]) -> SparseRow {
        entries
            .iter()
            .map(|&(c, v)| (c, Rational::from_integer(v.into())))
            .filter(|(_, v)| !v.is_zero())
            .collect()
    }

    fn dense_times(rows: &[SparseRow], x: &SparseRow) -> Vec<Rational> {
        rows.iter()
            .map(|r| {
                r.iter()
                    .map(|(c, v)| v * x.get(c).cloned().unwrap_or_else(Rational::zero))
                    .sum()
            })
            .collect()
    }

    #[test]
    fn rank_and_kernel_small() {
        let rows = vec![
            row(&[(0, 1), (1, 2), (2, 3)]),
            row(&[(0, 2), (1, 4), (2, 6)]),
            row(&[(1, 1), (3, 1)]),
        ];
        let mut e = Echelon::new();
        for r in &rows {
            e.insert(r.clone());
        }
        assert_eq!(e.rank(), 2);
        let ker = e.kernel(4);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(dense_times(&rows, v).iter().all(Zero::is_zero));
        }
        assert_eq!(rank(ker), 2);
    }

    #[test]
    fn membership() {
        let mut e = Echelon::new();
        e.insert(row(&[(0, 1), (1, 1)]));
        e.insert(row(&[(1, 1), (2, 1)]));
        assert!(e.contains(&row(&[(0, 1), (2, -1)])));
        assert!(!e.contains(&row(&[(2, 1)])));
    }

    #[test]
    fn kernel_of_empty_matrix_is_standard_basis() {
        let ker = Echelon::new().kernel(3);
        assert_eq!(ker, vec![row(&[(0, 1)]), row(&[(1, 1)]), row(&[(2, 1)])]);
    }
}
