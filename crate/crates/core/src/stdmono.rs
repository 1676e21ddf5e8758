//! Width of nonnegative integer matrices and the standard monomial basis of
//! the excitation ring.
//!
//! A weak diagonal is a chain of distinct positions weakly increasing in both
//! coordinates; the width is the largest entry sum along such a chain. The
//! standard monomials of `S_{m,k}` are the `k x (m-k)` matrices of width at
//! most 2.

use crate::budget::Budget;
use crate::enumeration::narayana;
use crate::error::{Error, Result};
use crate::poly::ExponentMatrix;
use num_traits::ToPrimitive;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WidthReport {
    pub width: u32,
    /// Nonzero positions of a maximal weak diagonal, 1-based, in chain order.
    pub witness_chain: Vec<(usize, usize)>,
}

/// Prefix-maximum table: `best[r][c]` is the width of the submatrix `[0..=r] x [0..=c]`.
fn prefix_widths(m: &ExponentMatrix) -> Vec<Vec<u32>> {
    let (rows, cols) = m.dims();
    let mut best = vec![vec![0u32; cols]; rows];
    for r in 0..rows {
        for c in 0..cols {
            let up = if r > 0 { best[r - 1][c] } else { 0 };
            let left = if c > 0 { best[r][c - 1] } else { 0 };
            best[r][c] = m.get(r, c) + up.max(left);
        }
    }
    best
}

pub fn width(m: &ExponentMatrix) -> WidthReport {
    let (rows, cols) = m.dims();
    if rows == 0 || cols == 0 {
        return WidthReport {
            width: 0,
            witness_chain: Vec::new(),
        };
    }
    let best = prefix_widths(m);
    let mut chain = Vec::new();
    let (mut r, mut c) = (rows - 1, cols - 1);
    loop {
        if m.get(r, c) > 0 {
            chain.push((r + 1, c + 1));
        }
        let up = (r > 0).then(|| best[r - 1][c]);
        let left = (c > 0).then(|| best[r][c - 1]);
        match (up, left) {
            (None, None) => break,
            (Some(u), Some(l)) if l > u => c -= 1,
            (Some(_), _) => r -= 1,
            (None, Some(_)) => c -= 1,
        }
    }
    chain.reverse();
    WidthReport {
        width: best[rows - 1][cols - 1],
        witness_chain: chain,
    }
}

pub fn is_standard(m: &ExponentMatrix) -> bool {
    width(m).width <= 2
}

/// Longest weakly increasing subsequence of `seq`.
fn longest_weak_ascent(seq: &[usize]) -> usize {
    // tails[l] = smallest possible last value of a weak ascent of length l + 1
    let mut tails: Vec<usize> = Vec::new();
    for &x in seq {
        let pos = tails.partition_point(|&t| t <= x);
        if pos == tails.len() {
            tails.push(x);
        } else {
            tails[pos] = x;
        }
    }
    tails.len()
}

/// Standardness read off the monomial word: writing the variables in
/// decreasing order, the column indices contain no weakly increasing triple.
pub fn is_standard_by_ascent(m: &ExponentMatrix) -> bool {
    let cols: Vec<usize> = m.variable_word().into_iter().map(|(_, c)| c).collect();
    longest_weak_ascent(&cols) < 3
}

fn check_mk(m: usize, k: usize) -> Result<()> {
    if k == 0 || k > m {
        return Err(Error::InvalidParameters(format!(
            "need 1 <= k <= m, got m={m}, k={k}"
        )));
    }
    Ok(())
}

/// All width-at-most-2 matrices of shape `k x (m-k)`, ordered by total
/// degree and then by decreasing monomial order.
pub fn enumerate_standard(m: usize, k: usize) -> Result<Vec<ExponentMatrix>> {
    enumerate_standard_with_budget(m, k, &Budget::default())
}

pub fn enumerate_standard_with_budget(m: usize, k: usize, budget: &Budget) -> Result<Vec<ExponentMatrix>> {
    check_mk(m, k)?;
    let expected = narayana(m as u64 + 1, k as u64 + 1);
    let cells = (k * (m - k)) as u128 + 1;
    let needed = expected.to_u128().unwrap_or(u128::MAX).saturating_mul(cells);
    budget.check_states("standard monomial enumeration", needed)?;

    let (rows, cols) = (k, m - k);
    let mut out = Vec::new();
    let mut current = ExponentMatrix::zeros(rows, cols);
    let mut best = vec![0u32; rows * cols];
    fill(0, &mut current, &mut best, &mut out);
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    Ok(out)
}

fn fill(pos: usize, current: &mut ExponentMatrix, best: &mut [u32], out: &mut Vec<ExponentMatrix>) {
    let (rows, cols) = current.dims();
    if pos == rows * cols {
        out.push(current.clone());
        return;
    }
    let (r, c) = (pos / cols, pos % cols);
    let up = if r > 0 { best[pos - cols] } else { 0 };
    let left = if c > 0 { best[pos - 1] } else { 0 };
    let base = up.max(left);
    for value in 0..=2u32.saturating_sub(base) {
        current.set(r, c, value);
        best[pos] = base + value;
        fill(pos + 1, current, best, out);
    }
    current.set(r, c, 0);
}

/// Number of standard monomials in each degree `0..=top`.
pub fn hilbert_function(m: usize, k: usize) -> Result<Vec<u64>> {
    let basis = enumerate_standard(m, k)?;
    let top = basis.iter().map(ExponentMatrix::degree).max().unwrap_or(0) as usize;
    let mut counts = vec![0u64; top + 1];
    for b in &basis {
        counts[b.degree() as usize] += 1;
    }
    Ok(counts)
}
