//! The ideal of 3x3 generalized permanents and its quotient, the excitation ring.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{normal_form_in, rational, s_polynomial, DivisorSet, ExponentMatrix, Polynomial};

/// Row multiset `p <= q <= r` and column multiset `a <= b <= c`, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GeneratorLabel {
    pub rows: [usize; 3],
    pub cols: [usize; 3],
}

impl GeneratorLabel {
    pub fn new(mut rows: [usize; 3], mut cols: [usize; 3], k: usize, n: usize) -> Result<Self> {
        rows.sort_unstable();
        cols.sort_unstable();
        if rows[0] == 0 || rows[2] > k || cols[0] == 0 || cols[2] > n {
            return Err(Error::IndexOutOfRange(format!(
                "label rows {rows:?} cols {cols:?} for a {k}x{n} matrix"
            )));
        }
        Ok(GeneratorLabel { rows, cols })
    }
}

impl fmt::Display for GeneratorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [p, q, r] = self.rows;
        let [a, b, c] = self.cols;
        write!(f, "f_{{{p},{q},{r}}}^{{{a},{b},{c}}}")
    }
}

const PERMUTATIONS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// `sum over the 6 orderings s of (a,b,c) of X[p,s1] X[q,s2] X[r,s3]`.
///
/// Orderings that coincide as multisets contribute repeated terms, which is
/// where the coefficients 1, 2, 3 and 6 come from.
pub fn generator(label: &GeneratorLabel, k: usize, n: usize) -> Polynomial {
    let terms = PERMUTATIONS.iter().map(|perm| {
        let mut exp = ExponentMatrix::zeros(k, n);
        for (slot, &row) in label.rows.iter().enumerate() {
            let col = label.cols[perm[slot]];
            let cur = exp.get(row - 1, col - 1);
            exp.set(row - 1, col - 1, cur + 1);
        }
        (exp, rational(1))
    });
    Polynomial::from_terms((k, n), terms).expect("generator terms share dimensions")
}

fn multisets3(n: usize) -> impl Iterator<Item = [usize; 3]> {
    (1..=n).flat_map(move |a| (a..=n).flat_map(move |b| (b..=n).map(move |c| [a, b, c])))
}

fn check_mk(m: usize, k: usize) -> Result<()> {
    if k == 0 || k > m {
        return Err(Error::InvalidParameters(format!(
            "need 1 <= k <= m, got m={m}, k={k}"
        )));
    }
    Ok(())
}

fn binomial_u128(n: u128, r: u128) -> u128 {
    if r > n {
        return 0;
    }
    (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of generators, `C(k+2,3) * C(m-k+2,3)`.
pub fn generator_count(m: usize, k: usize) -> u128 {
    binomial_u128(k as u128 + 2, 3) * binomial_u128((m - k) as u128 + 2, 3)
}

/// The generators of `I_{m,k}`, in the order (row multiset, column multiset).
#[derive(Debug, Clone)]
pub struct IdealPresentation {
    m: usize,
    k: usize,
    generators: Vec<(GeneratorLabel, Polynomial)>,
}

impl IdealPresentation {
    pub fn new(m: usize, k: usize) -> Result<Self> {
        check_mk(m, k)?;
        let n = m - k;
        let generators = multisets3(k)
            .flat_map(|rows| multisets3(n).map(move |cols| GeneratorLabel { rows, cols }))
            .map(|label| (label, generator(&label, k, n)))
            .collect();
        Ok(IdealPresentation { m, k, generators })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Shape `(k, m-k)` of the variable matrix.
    pub fn dims(&self) -> (usize, usize) {
        (self.k, self.m - self.k)
    }

    pub fn generators(&self) -> &[(GeneratorLabel, Polynomial)] {
        &self.generators
    }

    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.generators.iter().map(|(_, g)| g.clone()).collect()
    }

    /// The same generators rescaled to leading coefficient 1.
    pub fn monic_polynomials(&self) -> Vec<Polynomial> {
        self.generators
            .iter()
            .map(|(_, g)| g.monic().expect("generators are nonzero"))
            .collect()
    }

    pub fn get(&self, label: &GeneratorLabel) -> Option<&Polynomial> {
        self.generators
            .binary_search_by(|(l, _)| l.cmp(label))
            .ok()
            .map(|i| &self.generators[i].1)
    }
}

pub fn generators(m: usize, k: usize) -> Result<IdealPresentation> {
    IdealPresentation::new(m, k)
}

pub fn leading_monomial_set(m: usize, k: usize) -> Result<BTreeSet<ExponentMatrix>> {
    let ideal = IdealPresentation::new(m, k)?;
    Ok(ideal
        .generators
        .iter()
        .map(|(_, g)| g.leading_monomial().expect("generators are nonzero").clone())
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairFailure {
    pub first: GeneratorLabel,
    pub second: GeneratorLabel,
    /// Nonzero normal form of the S-polynomial, in the text format.
    pub remainder: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuchbergerReport {
    pub m: usize,
    pub k: usize,
    pub generators: usize,
    pub pairs_total: usize,
    pub coprime_skipped: usize,
    pub pairs_checked: usize,
    pub all_reduced: bool,
    pub witnesses: Vec<PairFailure>,
}

impl BuchbergerReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "m": self.m,
            "k": self.k,
            "generators": self.generators,
            "pairs_total": self.pairs_total,
            "coprime_skipped": self.coprime_skipped,
            "checked": self.pairs_checked,
            "all_reduced": self.all_reduced,
            "failures": self.witnesses.iter().map(|w| [w.first, w.second]).collect::<Vec<_>>(),
        })
    }
}

/// Buchberger's criterion for the generators of `I_{m,k}`.
///
/// Every unordered pair whose leading monomials share a variable has its
/// S-polynomial reduced against the full generator list; coprime pairs are
/// counted and skipped. Pairs are processed in parallel, the report is
/// ordered by `(label1, label2)`.
pub fn buchberger_verify(m: usize, k: usize) -> Result<BuchbergerReport> {
    buchberger_verify_with_progress(m, k, |_, _| {})
}

pub fn buchberger_verify_with_progress(
    m: usize,
    k: usize,
    progress: impl Fn(usize, usize) + Sync,
) -> Result<BuchbergerReport> {
    let ideal = IdealPresentation::new(m, k)?;
    let polys = ideal.polynomials();
    let count = polys.len();
    let set = DivisorSet::new(ideal.dims(), polys)?;
    let leads: Vec<&ExponentMatrix> = set
        .divisors()
        .iter()
        .map(|g| g.leading_monomial().expect("generators are nonzero"))
        .collect();

    let mut pairs = Vec::new();
    let mut coprime_skipped = 0;
    for i in 0..count {
        for j in (i + 1)..count {
            if leads[i].is_coprime(leads[j]) {
                coprime_skipped += 1;
            } else {
                pairs.push((i, j));
            }
        }
    }

    let done = std::sync::atomic::AtomicUsize::new(0);
    let total = pairs.len();
    let outcomes: Vec<Option<PairFailure>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let g = set.divisors();
            let s = s_polynomial(&g[i], &g[j])?;
            let r = normal_form_in(&s, &set)?;
            let finished = done.fetch_add(1, std::sync::atomic::Ordering::Relaxed) + 1;
            if finished.is_multiple_of(10_000) || finished == total {
                progress(finished, total);
            }
            Ok((!r.is_zero()).then(|| PairFailure {
                first: ideal.generators[i].0,
                second: ideal.generators[j].0,
                remainder: r.to_string(),
            }))
        })
        .collect::<Result<_>>()?;
    let witnesses: Vec<PairFailure> = outcomes.into_iter().flatten().collect();

    Ok(BuchbergerReport {
        m,
        k,
        generators: count,
        pairs_total: count * count.saturating_sub(1) / 2,
        coprime_skipped,
        pairs_checked: total,
        all_reduced: witnesses.is_empty(),
        witnesses,
    })
}

/// The quotient `S_{m,k} = C[X] / I_{m,k}` with its generators preloaded for
/// repeated normal-form computations.
#[derive(Debug, Clone)]
pub struct ExcitationRing {
    ideal: IdealPresentation,
    divisors: DivisorSet,
}

impl ExcitationRing {
    pub fn new(m: usize, k: usize) -> Result<Self> {
        let ideal = IdealPresentation::new(m, k)?;
        let divisors = DivisorSet::new(ideal.dims(), ideal.polynomials())?;
        Ok(ExcitationRing { ideal, divisors })
    }

    pub fn ideal(&self) -> &IdealPresentation {
        &self.ideal
    }

    pub fn dims(&self) -> (usize, usize) {
        self.ideal.dims()
    }

    /// Expansion of `p` in the standard monomial basis.
    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        normal_form_in(p, &self.divisors)
    }
}

pub fn quotient_normal_form(p: &Polynomial, m: usize, k: usize) -> Result<Polynomial> {
    let ring = ExcitationRing::new(m, k)?;
    if p.dims() != ring.dims() {
        return Err(Error::DimensionMismatch {
            expected: ring.dims(),
            found: p.dims(),
        });
    }
    ring.normal_form(p)
}
