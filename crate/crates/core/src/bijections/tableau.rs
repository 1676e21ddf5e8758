use serde::{Deserialize, Serialize};

use super::partition::Partition;
use crate::error::{Error, Result};

/// A semistandard Young tableau with entries in `1..=content_bound`: rows
/// weakly increase left to right, columns strictly increase downwards.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ssyt {
    rows: Vec<Vec<u32>>,
    content_bound: u32,
}

impl Ssyt {
    pub fn new(rows: Vec<Vec<u32>>, content_bound: u32) -> Result<Self> {
        let bad = |reason: String| Err(Error::malformed("tableau", reason));
        if rows.iter().any(Vec::is_empty) {
            return bad("empty row".into());
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return bad("row lengths must be weakly decreasing".into());
        }
        for (r, row) in rows.iter().enumerate() {
            if let Some(&v) = row.iter().find(|&&v| v == 0 || v > content_bound) {
                return bad(format!("entry {v} outside 1..={content_bound}"));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return bad(format!("row {} is not weakly increasing", r + 1));
            }
            if r > 0 && row.iter().zip(&rows[r - 1]).any(|(below, above)| below <= above) {
                return bad(format!("column strictness fails in row {}", r + 1));
            }
        }
        Ok(Ssyt { rows, content_bound })
    }

    pub fn empty(content_bound: u32) -> Self {
        Ssyt {
            rows: Vec::new(),
            content_bound,
        }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn content_bound(&self) -> u32 {
        self.content_bound
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as u32).collect())
            .expect("tableau rows form a partition")
    }

    /// Shape of the sub-tableau of entries `<= bound`.
    pub fn sub_shape(&self, bound: u32) -> Partition {
        Partition::new(
            self.rows
                .iter()
                .map(|r| r.iter().filter(|&&v| v <= bound).count() as u32)
                .filter(|&len| len > 0)
                .collect(),
        )
        .expect("sub-tableau rows form a partition")
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>, content_bound: u32) -> Self {
        Ssyt { rows, content_bound }
    }
}

/// Gelfand-Tsetlin pattern: level `i` (1-based) holds `i` weakly decreasing
/// nonnegative integers, and consecutive levels interlace.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GtPattern {
    levels: Vec<Vec<u32>>,
}

impl GtPattern {
    pub fn new(levels: Vec<Vec<u32>>) -> Result<Self> {
        for (i, level) in levels.iter().enumerate() {
            if level.len() != i + 1 {
                return Err(Error::malformed(
                    "Gelfand-Tsetlin pattern",
                    format!("level {} has {} entries", i + 1, level.len()),
                ));
            }
            if level.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::malformed(
                    "Gelfand-Tsetlin pattern",
                    format!("level {} is not weakly decreasing", i + 1),
                ));
            }
            if i > 0 {
                let prev = &levels[i - 1];
                let interlaces = prev
                    .iter()
                    .enumerate()
                    .all(|(j, &p)| level[j] >= p && p >= level[j + 1]);
                if !interlaces {
                    return Err(Error::malformed(
                        "Gelfand-Tsetlin pattern",
                        format!("levels {} and {} do not interlace", i, i + 1),
                    ));
                }
            }
        }
        Ok(GtPattern { levels })
    }

    /// Number of levels, i.e. the content bound of the tableau.
    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn levels(&self) -> &[Vec<u32>] {
        &self.levels
    }

    /// Level `i`, 1-based.
    pub fn level(&self, i: usize) -> &[u32] {
        &self.levels[i - 1]
    }

    /// The nested chain of shapes, one per level.
    pub fn shapes(&self) -> Vec<Partition> {
        self.levels
            .iter()
            .map(|l| Partition::from_padded(l).expect("levels are weakly decreasing"))
            .collect()
    }

    pub fn to_ssyt(&self) -> Ssyt {
        let n = self.depth();
        let top = if n == 0 {
            Vec::new()
        } else {
            self.level(n).to_vec()
        };
        let mut rows: Vec<Vec<u32>> = top
            .iter()
            .filter(|&&len| len > 0)
            .map(|&len| Vec::with_capacity(len as usize))
            .collect();
        for value in 1..=n {
            let level = self.level(value);
            for (r, row) in rows.iter_mut().enumerate() {
                let target = level.get(r).copied().unwrap_or(0) as usize;
                while row.len() < target {
                    row.push(value as u32);
                }
            }
        }
        Ssyt::from_rows_unchecked(rows, n as u32)
    }
}

/// Level `i` is the shape of the entries `<= i`, padded with zeros to length `i`.
pub fn ssyt_to_gt(p: &Ssyt, n: u32) -> Result<GtPattern> {
    if let Some(v) = p.rows().iter().flatten().find(|&&v| v > n) {
        return Err(Error::malformed(
            "tableau",
            format!("entry {v} exceeds content bound {n}"),
        ));
    }
    let levels = (1..=n).map(|i| p.sub_shape(i).padded(i as usize)).collect();
    GtPattern::new(levels)
}

pub fn gt_to_ssyt(g: &GtPattern) -> Ssyt {
    g.to_ssyt()
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn example_p() -> Ssyt {
        Ssyt::new(vec![vec![1, 1, 2, 4, 4], vec![2, 3], vec![3]], 4).unwrap()
    }

    pub(crate) fn example_q() -> Ssyt {
        Ssyt::new(vec![vec![1, 2, 2, 3, 4], vec![2, 3], vec![4]], 4).unwrap()
    }

    fn chain(g: &GtPattern) -> Vec<String> {
        g.shapes().iter().map(ToString::to_string).collect()
    }

    #[test]
    fn ssyt_validation() {
        assert!(Ssyt::new(vec![vec![1, 1, 2, 4], vec![2, 3], vec![5]], 5).is_ok());
        assert!(Ssyt::new(vec![vec![1, 1, 2, 4], vec![2, 3], vec![5]], 4).is_err());
        assert!(Ssyt::new(vec![vec![2, 1]], 3).is_err());
        assert!(Ssyt::new(vec![vec![1, 2], vec![1]], 3).is_err());
        assert!(Ssyt::new(vec![vec![1], vec![2, 3]], 3).is_err());
        assert!(Ssyt::new(vec![vec![]], 3).is_err());
    }

    #[test]
    fn example_chains() {
        assert_eq!(
            chain(&ssyt_to_gt(&example_p(), 4).unwrap()),
            ["(2)", "(3,1)", "(3,2,1)", "(5,2,1)"]
        );
        assert_eq!(
            chain(&ssyt_to_gt(&example_q(), 4).unwrap()),
            ["(1)", "(3,1)", "(4,2)", "(5,2,1)"]
        );
        let single = Ssyt::new(vec![vec![1]], 1).unwrap();
        assert_eq!(ssyt_to_gt(&single, 1).unwrap().levels(), &[vec![1]]);
        assert!(ssyt_to_gt(&example_p(), 3).is_err());
    }

    #[test]
    fn gt_round_trip() {
        for t in [example_p(), example_q(), Ssyt::empty(3)] {
            let g = ssyt_to_gt(&t, t.content_bound()).unwrap();
            assert_eq!(gt_to_ssyt(&g), t);
        }
    }

    #[test]
    fn gt_validation() {
        assert!(GtPattern::new(vec![vec![1], vec![2, 0]]).is_ok());
        assert!(GtPattern::new(vec![vec![3], vec![2, 0]]).is_err());
        assert!(GtPattern::new(vec![vec![1], vec![0, 1]]).is_err());
        assert!(GtPattern::new(vec![vec![1], vec![1]]).is_err());
    }
}
