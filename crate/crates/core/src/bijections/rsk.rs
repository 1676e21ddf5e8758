//! Robinson-Schensted-Knuth row insertion on the biword of a matrix.

use super::tableau::Ssyt;
use crate::error::{Error, Result};
use crate::poly::ExponentMatrix;

/// Inserts `x` into `rows`, returning the row index where a box was added.
fn row_insert(rows: &mut Vec<Vec<u32>>, mut x: u32) -> usize {
    for (r, row) in rows.iter_mut().enumerate() {
        let pos = row.partition_point(|&v| v <= x);
        if pos == row.len() {
            row.push(x);
            return r;
        }
        x = std::mem::replace(&mut row[pos], x);
    }
    rows.push(vec![x]);
    rows.len() - 1
}

/// `M -> (P, Q)`: the pair `(i, j)` is read `M[i][j]` times in row-major
/// order, `j` is row-inserted into `P` and `i` recorded in `Q`. `P` has
/// content bound `cols`, `Q` has content bound `rows`.
pub fn rsk(m: &ExponentMatrix) -> (Ssyt, Ssyt) {
    let (nrows, ncols) = m.dims();
    let mut p: Vec<Vec<u32>> = Vec::new();
    let mut q: Vec<Vec<u32>> = Vec::new();
    for i in 0..nrows {
        for j in 0..ncols {
            for _ in 0..m.get(i, j) {
                let r = row_insert(&mut p, j as u32 + 1);
                if r == q.len() {
                    q.push(Vec::new());
                }
                q[r].push(i as u32 + 1);
            }
        }
    }
    (
        Ssyt::from_rows_unchecked(p, ncols as u32),
        Ssyt::from_rows_unchecked(q, nrows as u32),
    )
}

/// Reverse bumping: the unique matrix (of shape `Q.content_bound x
/// P.content_bound`) with `rsk(M) = (P, Q)`.
pub fn rsk_inverse(p: &Ssyt, q: &Ssyt) -> Result<ExponentMatrix> {
    let p = Ssyt::new(p.rows().to_vec(), p.content_bound())?;
    let q = Ssyt::new(q.rows().to_vec(), q.content_bound())?;
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch(format!(
            "P has shape {}, Q has shape {}",
            p.shape(),
            q.shape()
        )));
    }
    let mut m = ExponentMatrix::zeros(q.content_bound() as usize, p.content_bound() as usize);
    let mut p_rows = p.rows().to_vec();
    let mut q_rows = q.rows().to_vec();
    while !q_rows.is_empty() {
        // The largest recording entry sits at the end of some row; among equal
        // values the rightmost one was added last.
        let (r, value) = q_rows
            .iter()
            .enumerate()
            .map(|(r, row)| (r, *row.last().expect("rows are nonempty")))
            .fold(None, |best: Option<(usize, u32)>, (r, v)| match best {
                Some((_, bv)) if bv > v => best,
                Some((br, bv)) if bv == v && q_rows[br].len() >= q_rows[r].len() => best,
                _ => Some((r, v)),
            })
            .expect("tableau is nonempty");
        q_rows[r].pop();
        let mut x = p_rows[r].pop().expect("P and Q share a shape");
        if q_rows[r].is_empty() {
            q_rows.pop();
            p_rows.pop();
        }
        for row in p_rows[..r].iter_mut().rev() {
            let pos = row.partition_point(|&v| v < x) - 1;
            x = std::mem::replace(&mut row[pos], x);
        }
        let (i, j) = (value as usize - 1, x as usize - 1);
        m.set(i, j, m.get(i, j) + 1);
    }
    Ok(m)
}
