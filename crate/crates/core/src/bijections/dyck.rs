//! Dyck words, their central letters, and the bijection with `k x (m-k) x 2`
//! plane partitions.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::plane::PlanePartition;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    // d sorts before u, matching string order.
    D,
    U,
}

/// A ballot word over `{u, d}` with equally many of each letter.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckWord {
    letters: Vec<Letter>,
}

impl DyckWord {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        let mut height: i64 = 0;
        for (i, l) in letters.iter().enumerate() {
            height += if *l == Letter::U { 1 } else { -1 };
            if height < 0 {
                return Err(Error::malformed(
                    "Dyck word",
                    format!("prefix of length {} has more d's than u's", i + 1),
                ));
            }
        }
        if height != 0 {
            return Err(Error::malformed("Dyck word", "unequal numbers of u and d"));
        }
        Ok(DyckWord { letters })
    }

    pub(crate) fn from_letters_unchecked(letters: Vec<Letter>) -> Self {
        DyckWord { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Half the length.
    pub fn semilength(&self) -> usize {
        self.letters.len() / 2
    }

    /// 0-based positions of the `d` of each `du` factor.
    pub fn valleys(&self) -> Vec<usize> {
        self.letters
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] == Letter::D && w[1] == Letter::U)
            .map(|(i, _)| i)
            .collect()
    }
}

impl FromStr for DyckWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .trim()
            .chars()
            .map(|c| match c {
                'u' | 'U' => Ok(Letter::U),
                'd' | 'D' => Ok(Letter::D),
                other => Err(Error::Parse(format!("unexpected letter {other:?} in Dyck word"))),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckWord::new(letters)
    }
}

impl fmt::Display for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            f.write_str(if *l == Letter::U { "u" } else { "d" })?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DyckStats {
    /// 0-based positions of the `d` in each valley.
    pub valleys: Vec<usize>,
    /// 0-based positions of the central letters.
    pub central: Vec<usize>,
    /// `up[i-1]` is the number of central u's before the `i`-th valley; the last
    /// entry counts all central u's. Length is `valleys + 1`.
    pub up: Vec<usize>,
    pub down: Vec<usize>,
}

/// A letter is central unless it is the first or last letter or belongs to a valley.
pub fn dyck_stats(w: &DyckWord) -> DyckStats {
    let n = w.len();
    let valleys = w.valleys();
    let mut in_valley = vec![false; n];
    for &v in &valleys {
        in_valley[v] = true;
        in_valley[v + 1] = true;
    }
    let central: Vec<usize> = (1..n.saturating_sub(1)).filter(|&i| !in_valley[i]).collect();
    let count_before = |limit: usize, letter: Letter| {
        central
            .iter()
            .filter(|&&i| i < limit && w.letters[i] == letter)
            .count()
    };
    let limits: Vec<usize> = valleys.iter().copied().chain(std::iter::once(n)).collect();
    DyckStats {
        up: limits.iter().map(|&l| count_before(l, Letter::U)).collect(),
        down: limits.iter().map(|&l| count_before(l, Letter::D)).collect(),
        central,
        valleys,
    }
}

/// Rebuilds the word from its `up`/`down` sequences (each of length
/// `valleys + 1`): the central letters read
/// `u^{up_1} d^{down_1} u^{up_2 - up_1} d^{down_2 - down_1} ...`, framed by an
/// initial `u` and final `d` with a valley `du` between consecutive blocks.
pub fn dyck_from_sequences(up: &[usize], down: &[usize]) -> Result<DyckWord> {
    if up.len() != down.len() || up.is_empty() {
        return Err(Error::InvalidParameters(
            "up and down sequences must have the same nonzero length".into(),
        ));
    }
    let increasing = |s: &[usize]| s.windows(2).all(|w| w[0] <= w[1]);
    if !increasing(up) || !increasing(down) {
        return Err(Error::InvalidParameters(
            "sequences must be weakly increasing".into(),
        ));
    }
    if up.iter().zip(down).any(|(u, d)| u < d) {
        return Err(Error::InvalidParameters("need up_i >= down_i".into()));
    }
    if up.last() != down.last() {
        return Err(Error::InvalidParameters(
            "final up and down counts must agree".into(),
        ));
    }
    let mut letters = vec![Letter::U];
    let (mut prev_u, mut prev_d) = (0, 0);
    for (i, (&u, &d)) in up.iter().zip(down).enumerate() {
        if i > 0 {
            letters.extend([Letter::D, Letter::U]);
        }
        letters.extend(std::iter::repeat_n(Letter::U, u - prev_u));
        letters.extend(std::iter::repeat_n(Letter::D, d - prev_d));
        (prev_u, prev_d) = (u, d);
    }
    letters.push(Letter::D);
    DyckWord::new(letters)
}

fn check_family(w: &DyckWord, m: usize, k: usize) -> Result<()> {
    if k > m {
        return Err(Error::InvalidParameters(format!("need k <= m, got m={m}, k={k}")));
    }
    if w.len() != 2 * m + 2 {
        return Err(Error::InvalidParameters(format!(
            "word has length {}, expected {}",
            w.len(),
            2 * m + 2
        )));
    }
    let valleys = w.valleys().len();
    if valleys != k {
        return Err(Error::InvalidParameters(format!(
            "word has {valleys} valleys, expected {k}"
        )));
    }
    Ok(())
}

/// `w` of length `2m+2` with `k` valleys to `B^w` in `B(k, m-k, 2)`:
/// `B[i][j]` is 2 if `down_{k+1-i} >= j`, else 1 if `up_{k+1-i} >= j`, else 0.
pub fn dyck_to_pp(w: &DyckWord, m: usize, k: usize) -> Result<PlanePartition> {
    check_family(w, m, k)?;
    let stats = dyck_stats(w);
    let n = m - k;
    let rows = (1..=k)
        .map(|i| {
            let (up, down) = (stats.up[k - i], stats.down[k - i]);
            (1..=n)
                .map(|j| {
                    if down >= j {
                        2
                    } else if up >= j {
                        1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    PlanePartition::new(k, n, rows, 2)
}

/// Inverse of [`dyck_to_pp`]. Row `i` of `B` contributes `c_i` (its number of
/// 2s) and `c'_i` (its number of nonzero entries); then `up_i = c'_{k+1-i}`
/// and `down_i = c_{k+1-i}`, with `up_{k+1} = down_{k+1} = m - k`.
pub fn pp_to_dyck(pp: &PlanePartition, m: usize, k: usize) -> Result<DyckWord> {
    if k > m || pp.dims() != (k, m - k) {
        return Err(Error::InvalidParameters(format!(
            "plane partition is {:?}, expected {}x{}",
            pp.dims(),
            k,
            m.saturating_sub(k)
        )));
    }
    let rows = pp.rows();
    if let Some(v) = rows.iter().flatten().find(|&&v| v > 2) {
        return Err(Error::InvalidParameters(format!("entry {v} exceeds 2")));
    }
    let twos = |r: &Vec<u32>| r.iter().filter(|&&v| v == 2).count();
    let nonzero = |r: &Vec<u32>| r.iter().filter(|&&v| v > 0).count();
    let mut up: Vec<usize> = (1..=k).map(|i| nonzero(&rows[k - i])).collect();
    let mut down: Vec<usize> = (1..=k).map(|i| twos(&rows[k - i])).collect();
    up.push(m - k);
    down.push(m - k);
    dyck_from_sequences(&up, &down)
}

/// Members of `D(n, r)`: Dyck words of length `2n` with exactly `r - 1` valleys.
pub fn dyck_family(n: usize, r: usize) -> Result<Vec<DyckWord>> {
    if r == 0 {
        return Ok(Vec::new());
    }
    crate::enumeration::enumerate_dyck(n, r - 1)
}
