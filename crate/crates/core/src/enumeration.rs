//! Closed-form counts (Narayana, Catalan, MacMahon's box formula) and the
//! brute-force enumerators used to check them.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::bijections::{DyckWord, Letter, PlanePartition};
use crate::budget::Budget;
use crate::error::Result;

pub type BigCount = BigUint;

pub fn binomial(n: u64, r: u64) -> BigCount {
    if r > n {
        return BigCount::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigCount::one();
    for i in 0..r {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

fn exact_div(num: BigCount, den: &BigCount) -> BigCount {
    let (q, rem) = num.div_rem(den);
    assert!(rem.is_zero(), "closed form must divide exactly");
    q
}

/// `N(n, r) = C(n, r) C(n, r-1) / n`: Dyck words of semilength `n` with
/// `r - 1` valleys. Returns 0 outside `1 <= r <= n`.
pub fn narayana(n: u64, r: u64) -> BigCount {
    if r == 0 || r > n {
        return BigCount::zero();
    }
    exact_div(binomial(n, r) * binomial(n, r - 1), &BigCount::from(n))
}

pub fn catalan(n: u64) -> BigCount {
    exact_div(binomial(2 * n, n), &BigCount::from(n + 1))
}

/// `|B(a, b, c)|`, the number of `a x b` plane partitions with entries at most `c`.
pub fn macmahon_count(a: u64, b: u64, c: u64) -> BigCount {
    let mut num = BigCount::one();
    let mut den = BigCount::one();
    for i in 1..=c {
        num *= binomial(a + b + i - 1, a + i - 1) * binomial(a + b + i - 1, b + i - 1);
        den *= binomial(a + b + i - 1, a) * binomial(b + i - 1, b);
    }
    exact_div(num, &den)
}

pub fn enumerate_pp(a: usize, b: usize, c: u32) -> Result<Vec<PlanePartition>> {
    enumerate_pp_with_budget(a, b, c, &Budget::default())
}

/// All of `B(a, b, c)` in increasing lexicographic order of the row-major entries.
pub fn enumerate_pp_with_budget(a: usize, b: usize, c: u32, budget: &Budget) -> Result<Vec<PlanePartition>> {
    let expected = macmahon_count(a as u64, b as u64, c as u64);
    let needed = expected
        .to_u128()
        .unwrap_or(u128::MAX)
        .saturating_mul((a * b) as u128 + 1);
    budget.check_states("plane partition enumeration", needed)?;

    let mut out = Vec::new();
    let mut entries = vec![0u32; a * b];
    fill_pp(0, a, b, c, &mut entries, &mut out);
    Ok(out)
}

fn fill_pp(pos: usize, a: usize, b: usize, c: u32, entries: &mut [u32], out: &mut Vec<PlanePartition>) {
    if pos == a * b {
        let rows: Vec<Vec<u32>> = if b == 0 {
            vec![Vec::new(); a]
        } else {
            entries.chunks(b).map(<[u32]>::to_vec).collect()
        };
        out.push(PlanePartition::new(a, b, rows, c).expect("enumerated entries are valid"));
        return;
    }
    let (r, col) = (pos / b, pos % b);
    let mut cap = c;
    if r > 0 {
        cap = cap.min(entries[pos - b]);
    }
    if col > 0 {
        cap = cap.min(entries[pos - 1]);
    }
    for v in 0..=cap {
        entries[pos] = v;
        fill_pp(pos + 1, a, b, c, entries, out);
    }
    entries[pos] = 0;
}

pub fn enumerate_dyck(n: usize, valleys: usize) -> Result<Vec<DyckWord>> {
    enumerate_dyck_with_budget(n, valleys, &Budget::default())
}

/// Dyck words of length `2n` with exactly `valleys` valleys, in increasing
/// string order (`d` < `u`).
pub fn enumerate_dyck_with_budget(n: usize, valleys: usize, budget: &Budget) -> Result<Vec<DyckWord>> {
    let needed = catalan(n as u64)
        .to_u128()
        .unwrap_or(u128::MAX)
        .saturating_mul(2 * n as u128 + 1);
    budget.check_states("Dyck word enumeration", needed)?;
    let mut out = Vec::new();
    let mut letters = Vec::with_capacity(2 * n);
    fill_dyck(n, n, valleys, &mut letters, &mut out);
    Ok(out)
}

fn fill_dyck(
    ups_left: usize,
    downs_left: usize,
    valleys_left: usize,
    letters: &mut Vec<Letter>,
    out: &mut Vec<DyckWord>,
) {
    if ups_left == 0 && downs_left == 0 {
        if valleys_left == 0 {
            out.push(DyckWord::from_letters_unchecked(letters.clone()));
        }
        return;
    }
    // A d may follow only if the prefix keeps at least as many u's as d's.
    if downs_left > ups_left {
        letters.push(Letter::D);
        fill_dyck(ups_left, downs_left - 1, valleys_left, letters, out);
        letters.pop();
    }
    if ups_left > 0 {
        let makes_valley = letters.last() == Some(&Letter::D);
        if !makes_valley || valleys_left > 0 {
            letters.push(Letter::U);
            let left = valleys_left - usize::from(makes_valley);
            fill_dyck(ups_left - 1, downs_left, left, letters, out);
            letters.pop();
        }
    }
}
