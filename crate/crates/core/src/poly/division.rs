use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::Zero;

use super::monomial::ExponentMatrix;
use super::polynomial::Polynomial;
use super::Rational;
use crate::error::{Error, Result};

/// Ordered divisor list with a lookup table from leading monomials to the
/// earliest divisor carrying them.
#[derive(Debug, Clone)]
pub struct DivisorSet {
    dims: (usize, usize),
    divisors: Vec<Polynomial>,
    leads: Vec<ExponentMatrix>,
    first_with_lead: HashMap<ExponentMatrix, usize>,
    lead_degrees: BTreeSet<u32>,
}

impl DivisorSet {
    pub fn new(dims: (usize, usize), divisors: Vec<Polynomial>) -> Result<Self> {
        let mut leads = Vec::with_capacity(divisors.len());
        let mut first_with_lead = HashMap::new();
        let mut lead_degrees = BTreeSet::new();
        for (i, g) in divisors.iter().enumerate() {
            if g.dims() != dims {
                return Err(Error::DimensionMismatch {
                    expected: dims,
                    found: g.dims(),
                });
            }
            let lead = g.leading_monomial()?.clone();
            lead_degrees.insert(lead.degree());
            first_with_lead.entry(lead.clone()).or_insert(i);
            leads.push(lead);
        }
        Ok(DivisorSet {
            dims,
            divisors,
            leads,
            first_with_lead,
            lead_degrees,
        })
    }

    pub fn divisors(&self) -> &[Polynomial] {
        &self.divisors
    }

    pub fn len(&self) -> usize {
        self.divisors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.divisors.is_empty()
    }

    /// Index of the earliest divisor whose leading monomial divides `t`.
    pub fn find_reducer(&self, t: &ExponentMatrix) -> Option<usize> {
        let sub_count: u128 = self.lead_degrees.iter().map(|&d| count_submonomials(t, d)).sum();
        if sub_count > self.leads.len() as u128 {
            return self.leads.iter().position(|l| l.divides(t));
        }
        let mut best: Option<usize> = None;
        let mut scratch = ExponentMatrix::zeros(t.nrows(), t.ncols());
        for &d in &self.lead_degrees {
            for_each_submonomial(t, d, &mut scratch, 0, &mut |s| {
                if let Some(&i) = self.first_with_lead.get(s) {
                    best = Some(best.map_or(i, |b| b.min(i)));
                }
            });
        }
        best
    }
}

fn count_submonomials(t: &ExponentMatrix, degree: u32) -> u128 {
    // Coefficient of z^degree in prod (1 + z + ... + z^e).
    let d = degree as usize;
    let mut ways = vec![0u128; d + 1];
    ways[0] = 1;
    for &e in t.entries() {
        let mut next = vec![0u128; d + 1];
        for (i, &w) in ways.iter().enumerate() {
            if w == 0 {
                continue;
            }
            for j in 0..=(e as usize).min(d - i) {
                next[i + j] = next[i + j].saturating_add(w);
            }
        }
        ways = next;
    }
    ways[d]
}

fn for_each_submonomial(
    t: &ExponentMatrix,
    remaining: u32,
    scratch: &mut ExponentMatrix,
    pos: usize,
    visit: &mut impl FnMut(&ExponentMatrix),
) {
    if remaining == 0 {
        visit(scratch);
        return;
    }
    let n = t.entries().len();
    if pos == n {
        return;
    }
    let available: u32 = t.entries()[pos..].iter().sum();
    if available < remaining {
        return;
    }
    let cap = t.entries()[pos].min(remaining);
    for take in (0..=cap).rev() {
        scratch.entries_mut()[pos] = take;
        for_each_submonomial(t, remaining - take, scratch, pos + 1, visit);
    }
    scratch.entries_mut()[pos] = 0;
}

/// Result of multivariate division: `dividend = sum quotients[i] * divisors[i] + remainder`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

impl Division {
    /// Recomputes `sum q_i g_i + r` and compares it with `dividend`.
    pub fn verify(&self, dividend: &Polynomial, divisors: &[Polynomial]) -> Result<bool> {
        if divisors.len() != self.quotients.len() {
            return Ok(false);
        }
        let mut acc = self.remainder.clone();
        for (q, g) in self.quotients.iter().zip(divisors) {
            acc = acc.add(&q.multiply(g)?)?;
        }
        Ok(acc == *dividend)
    }
}

fn reduce(p: &Polynomial, set: &DivisorSet, track: bool) -> Result<Division> {
    if p.dims() != set.dims {
        return Err(Error::DimensionMismatch {
            expected: set.dims,
            found: p.dims(),
        });
    }
    let mut work = p.to_map();
    let mut remainder: BTreeMap<ExponentMatrix, Rational> = BTreeMap::new();
    let mut quotients: Vec<BTreeMap<ExponentMatrix, Rational>> = if track {
        vec![BTreeMap::new(); set.len()]
    } else {
        Vec::new()
    };
    while let Some((t, c)) = work.pop_last() {
        let Some(i) = set.find_reducer(&t) else {
            remainder.insert(t, c);
            continue;
        };
        let g = &set.divisors[i];
        let (lc, lm) = g.leading_term()?;
        let shift = t.checked_div(&lm).expect("reducer lead divides the term");
        let factor = c / lc;
        // The leading term cancels exactly; only the tail needs subtracting.
        for (e, gc) in &g.terms()[1..] {
            match work.entry(e.mul(&shift)?) {
                Entry::Vacant(slot) => {
                    slot.insert(-(&factor * gc));
                }
                Entry::Occupied(mut slot) => {
                    *slot.get_mut() -= &factor * gc;
                    if slot.get().is_zero() {
                        slot.remove();
                    }
                }
            }
        }
        if track {
            *quotients[i].entry(shift).or_insert_with(Rational::zero) += factor;
        }
    }
    Ok(Division {
        quotients: quotients
            .into_iter()
            .map(|q| Polynomial::from_map(set.dims, q))
            .collect(),
        remainder: Polynomial::from_map(set.dims, remainder),
    })
}

/// Remainder of `p` on division by `divisors`.
///
/// Each step rewrites the lex-largest monomial still divisible by some leading
/// monomial, using the earliest such divisor in list order.
pub fn normal_form(p: &Polynomial, divisors: &[Polynomial]) -> Result<Polynomial> {
    let set = DivisorSet::new(p.dims(), divisors.to_vec())?;
    Ok(reduce(p, &set, false)?.remainder)
}

pub fn normal_form_in(p: &Polynomial, set: &DivisorSet) -> Result<Polynomial> {
    Ok(reduce(p, set, false)?.remainder)
}

/// Like [`normal_form`] but also returns the quotients witnessing membership of
/// `p - remainder` in the ideal.
pub fn divide(p: &Polynomial, divisors: &[Polynomial]) -> Result<Division> {
    let set = DivisorSet::new(p.dims(), divisors.to_vec())?;
    reduce(p, &set, true)
}

pub fn divide_in(p: &Polynomial, set: &DivisorSet) -> Result<Division> {
    reduce(p, set, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VarIndex;
    use num_bigint::BigInt;

    fn q(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    fn mono(rows: &[&[u32]]) -> ExponentMatrix {
        ExponentMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn x(r: usize, c: usize) -> Polynomial {
        Polynomial::variable(&VarIndex::new(r, c, (2, 2)).unwrap())
    }

    #[test]
    fn divisor_reduces_itself() {
        let g = x(1, 1)
            .multiply(&x(2, 2))
            .unwrap()
            .add(&x(1, 2).scale(&q(3)))
            .unwrap();
        assert!(normal_form(&g, std::slice::from_ref(&g)).unwrap().is_zero());
    }

    #[test]
    fn single_step_reduction() {
        // 2 X11^2 X22 + 4 X11 X12 X21 reduces X11^2 X22 to -2 X11 X12 X21.
        let f = Polynomial::from_terms(
            (2, 2),
            [
                (mono(&[&[2, 0], &[0, 1]]), q(2)),
                (mono(&[&[1, 1], &[1, 0]]), q(4)),
            ],
        )
        .unwrap();
        let p = Polynomial::monomial(mono(&[&[2, 0], &[0, 1]]), q(1));
        let r = normal_form(&p, std::slice::from_ref(&f)).unwrap();
        assert_eq!(r, Polynomial::monomial(mono(&[&[1, 1], &[1, 0]]), q(-2)));
        let div = divide(&p, std::slice::from_ref(&f)).unwrap();
        assert!(div.verify(&p, &[f]).unwrap());
    }

    #[test]
    fn earliest_divisor_wins() {
        // X11 X12 is divisible by both leads; list order decides.
        let p = x(1, 1).multiply(&x(1, 2)).unwrap();
        let (g1, g2) = (x(1, 2), x(1, 1));
        let d = divide(&p, &[g1.clone(), g2.clone()]).unwrap();
        assert_eq!(
            (d.quotients[0].clone(), d.quotients[1].is_zero()),
            (x(1, 1), true)
        );
        let d = divide(&p, &[g2, g1]).unwrap();
        assert_eq!(
            (d.quotients[0].clone(), d.quotients[1].is_zero()),
            (x(1, 2), true)
        );
        assert!(d.remainder.is_zero());
    }

    #[test]
    fn submonomial_lookup_matches_scan() {
        let leads: Vec<Polynomial> = [
            mono(&[&[1, 0], &[1, 1]]),
            mono(&[&[0, 2], &[0, 0]]),
            mono(&[&[1, 1], &[0, 0]]),
        ]
        .into_iter()
        .map(|m| Polynomial::monomial(m, q(1)))
        .collect();
        let set = DivisorSet::new((2, 2), leads).unwrap();
        for e in 0..81u32 {
            let t = ExponentMatrix::from_flat(2, 2, vec![e % 3, (e / 3) % 3, (e / 9) % 3, e / 27]).unwrap();
            let scan = set.leads.iter().position(|l| l.divides(&t));
            assert_eq!(set.find_reducer(&t), scan, "{t:?}");
        }
    }
}
