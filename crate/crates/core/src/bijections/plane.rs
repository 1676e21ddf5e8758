use serde::{Deserialize, Serialize};

use super::tableau::{ssyt_to_gt, GtPattern, Ssyt};
use crate::error::{Error, Result};

/// An `a x b` matrix with entries at most `bound`, weakly decreasing along
/// every row and every column.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanePartition {
    nrows: usize,
    ncols: usize,
    entries: Vec<u32>,
    bound: u32,
}

impl PlanePartition {
    pub fn new(nrows: usize, ncols: usize, rows: Vec<Vec<u32>>, bound: u32) -> Result<Self> {
        if rows.len() != nrows || rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::malformed(
                "plane partition",
                format!("expected a {nrows}x{ncols} matrix"),
            ));
        }
        let entries: Vec<u32> = rows.into_iter().flatten().collect();
        let pp = PlanePartition {
            nrows,
            ncols,
            entries,
            bound,
        };
        pp.validate()?;
        Ok(pp)
    }

    /// Infers the shape from `rows`; the bound defaults to the largest entry.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let bound = rows.iter().flatten().copied().max().unwrap_or(0);
        PlanePartition::new(nrows, ncols, rows, bound)
    }

    pub fn zero(nrows: usize, ncols: usize, bound: u32) -> Self {
        PlanePartition {
            nrows,
            ncols,
            entries: vec![0; nrows * ncols],
            bound,
        }
    }

    fn validate(&self) -> Result<()> {
        for r in 0..self.nrows {
            for c in 0..self.ncols {
                let v = self.get(r, c);
                if v > self.bound {
                    return Err(Error::malformed(
                        "plane partition",
                        format!("entry {v} exceeds bound {}", self.bound),
                    ));
                }
                if (r > 0 && self.get(r - 1, c) < v) || (c > 0 && self.get(r, c - 1) < v) {
                    return Err(Error::malformed(
                        "plane partition",
                        format!("not weakly decreasing at ({}, {})", r + 1, c + 1),
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.nrows, self.ncols)
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    /// Same entries under a different bound.
    pub fn with_bound(&self, bound: u32) -> Result<Self> {
        let pp = PlanePartition {
            bound,
            ..self.clone()
        };
        pp.validate()?;
        Ok(pp)
    }

    /// Entry at 0-based `(r, c)`.
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.entries[r * self.ncols + c]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        (0..self.nrows)
            .map(|r| (0..self.ncols).map(|c| self.get(r, c)).collect())
            .collect()
    }

    pub fn transpose(&self) -> PlanePartition {
        let rows = (0..self.ncols)
            .map(|c| (0..self.nrows).map(|r| self.get(r, c)).collect())
            .collect();
        PlanePartition::new(self.ncols, self.nrows, rows, self.bound)
            .expect("transposition preserves plane partitions")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "entries": self.rows(), "bound": self.bound })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw: PlanePartitionJson =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let pp = PlanePartition::from_rows(raw.entries)?;
        match raw.bound {
            Some(b) => pp.with_bound(b),
            None => Ok(pp),
        }
    }
}

#[derive(Deserialize, Serialize)]
struct PlanePartitionJson {
    entries: Vec<Vec<u32>>,
    bound: Option<u32>,
}

/// Plane partition of a pair of tableaux of equal shape, `P` with entries at
/// most `a` and `Q` with entries at most `b`:
///
/// `B[i][j] = P^{a-i+j}_j` for `i >= j` and `Q^{b-j+i}_i` for `i <= j`
/// (1-based), where `P^l` is level `l` of the Gelfand-Tsetlin pattern of `P`.
/// The bound of the result is the number of columns of the common shape.
pub fn tableaux_to_pp(p: &Ssyt, q: &Ssyt, a: usize, b: usize) -> Result<PlanePartition> {
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch(format!(
            "P has shape {}, Q has shape {}",
            p.shape(),
            q.shape()
        )));
    }
    let gp = ssyt_to_gt(p, a as u32)?;
    let gq = ssyt_to_gt(q, b as u32)?;
    let mut rows = vec![vec![0u32; b]; a];
    for i in 1..=a {
        for j in 1..=b {
            let from_p = (i >= j).then(|| gp.level(a - i + j)[j - 1]);
            let from_q = (i <= j).then(|| gq.level(b - j + i)[i - 1]);
            rows[i - 1][j - 1] = match (from_p, from_q) {
                (Some(x), Some(y)) if x != y => {
                    return Err(Error::malformed(
                        "tableau pair",
                        format!("diagonal entry {i} disagrees: {x} vs {y}"),
                    ))
                }
                (Some(x), _) | (None, Some(x)) => x,
                (None, None) => unreachable!("i >= j or i <= j"),
            };
        }
    }
    PlanePartition::new(a, b, rows, p.shape().part(0))
}

/// Inverse of [`tableaux_to_pp`]: the lower-left triangle of `B` carries the
/// pattern of `P`, the upper-right triangle that of `Q`.
pub fn pp_to_tableaux(pp: &PlanePartition) -> Result<(Ssyt, Ssyt)> {
    let (a, b) = pp.dims();
    let p_levels = (1..=a)
        .map(|l| {
            (1..=l)
                .map(|j| if j <= b { pp.get(a - l + j - 1, j - 1) } else { 0 })
                .collect()
        })
        .collect();
    let q_levels = (1..=b)
        .map(|l| {
            (1..=l)
                .map(|i| if i <= a { pp.get(i - 1, b - l + i - 1) } else { 0 })
                .collect()
        })
        .collect();
    let p = GtPattern::new(p_levels)?.to_ssyt();
    let q = GtPattern::new(q_levels)?.to_ssyt();
    Ok((p, q))
}
