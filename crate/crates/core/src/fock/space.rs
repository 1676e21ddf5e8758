use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::enumeration::binomial;
use crate::error::{Error, Result};
use crate::poly::{parse_rational, Rational};

/// Largest number of spatial orbitals; determinants are 64-bit masks.
pub const MAX_ORBITALS: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spin {
    Down,
    Up,
}

/// `e_{i,alpha}`. The global order is `(1,down) < (1,up) < (2,down) < ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SpinOrbital {
    pub position: usize,
    pub spin: Spin,
}

impl SpinOrbital {
    pub fn new(position: usize, spin: Spin, m: usize) -> Result<Self> {
        if position == 0 || position > m {
            return Err(Error::IndexOutOfRange(format!(
                "orbital position {position} outside 1..={m}"
            )));
        }
        Ok(SpinOrbital { position, spin })
    }

    pub fn down(position: usize) -> Self {
        SpinOrbital {
            position,
            spin: Spin::Down,
        }
    }

    pub fn up(position: usize) -> Self {
        SpinOrbital {
            position,
            spin: Spin::Up,
        }
    }

    /// Bit index in the global order.
    pub fn index(&self) -> usize {
        2 * (self.position - 1) + usize::from(self.spin == Spin::Up)
    }

    pub fn from_index(index: usize) -> Self {
        SpinOrbital {
            position: index / 2 + 1,
            spin: if index.is_multiple_of(2) {
                Spin::Down
            } else {
                Spin::Up
            },
        }
    }
}

impl fmt::Display for SpinOrbital {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arrow = if self.spin == Spin::Up { "up" } else { "down" };
        write!(f, "e[{},{}]", self.position, arrow)
    }
}

/// Wedge product of distinct spin orbitals in increasing global order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SlaterBasisVector {
    m: usize,
    mask: u64,
}

pub(crate) fn check_m(m: usize) -> Result<()> {
    if m > MAX_ORBITALS {
        return Err(Error::InvalidParameters(format!(
            "at most {MAX_ORBITALS} spatial orbitals are supported, got {m}"
        )));
    }
    Ok(())
}

impl SlaterBasisVector {
    /// Orbitals must be strictly increasing.
    pub fn new(orbitals: &[SpinOrbital], m: usize) -> Result<Self> {
        check_m(m)?;
        if orbitals.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::malformed(
                "Slater determinant",
                "orbitals must be strictly increasing",
            ));
        }
        let mut mask = 0u64;
        for o in orbitals {
            SpinOrbital::new(o.position, o.spin, m)?;
            mask |= 1 << o.index();
        }
        Ok(SlaterBasisVector { m, mask })
    }

    pub(crate) fn from_mask(m: usize, mask: u64) -> Self {
        SlaterBasisVector { m, mask }
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of electrons.
    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn orbitals(&self) -> Vec<SpinOrbital> {
        (0..2 * self.m)
            .filter(|&i| self.mask >> i & 1 == 1)
            .map(SpinOrbital::from_index)
            .collect()
    }

    pub fn contains(&self, o: &SpinOrbital) -> bool {
        self.mask >> o.index() & 1 == 1
    }

    /// `S_z` eigenvalue: number of up orbitals minus number of down orbitals.
    pub fn spin_z(&self) -> i64 {
        let up = (self.mask & UP_BITS).count_ones() as i64;
        let down = (self.mask & !UP_BITS).count_ones() as i64;
        up - down
    }
}

const UP_BITS: u64 = 0xAAAA_AAAA_AAAA_AAAA;

/// Lexicographic comparison of the sorted orbital lists of two masks.
pub(crate) fn cmp_masks(a: u64, b: u64) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    let diff = a ^ b;
    let low = diff & diff.wrapping_neg();
    let (lacks, a_has) = if a & low != 0 { (b, true) } else { (a, false) };
    // The list holding the lowest differing orbital is smaller unless the other
    // list stops there, in which case the other is a proper prefix.
    let lacks_continues = lacks & !(low | (low - 1)) != 0;
    match (a_has, lacks_continues) {
        (true, true) | (false, false) => Ordering::Less,
        (true, false) | (false, true) => Ordering::Greater,
    }
}

impl Ord for SlaterBasisVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.m
            .cmp(&other.m)
            .then_with(|| cmp_masks(self.mask, other.mask))
    }
}

impl PartialOrd for SlaterBasisVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SlaterBasisVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mask == 0 {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.orbitals().iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join("^"))
    }
}

pub fn fock_dimension(m: usize, d: usize) -> u128 {
    use num_traits::ToPrimitive;
    binomial(2 * m as u64, d as u64).to_u128().unwrap_or(u128::MAX)
}

pub(crate) fn check_space(m: usize, d: usize, budget: &Budget) -> Result<()> {
    check_m(m)?;
    if d > 2 * m {
        return Err(Error::InvalidParameters(format!(
            "{d} electrons do not fit in {} spin orbitals",
            2 * m
        )));
    }
    budget.check_fock("Fock space dimension", fock_dimension(m, d))
}

/// Masks of all `d`-subsets of the `2m` spin orbitals, lexicographic in the
/// sorted orbital lists.
pub(crate) fn basis_masks(m: usize, d: usize) -> Vec<u64> {
    fn rec(start: usize, n: usize, left: usize, mask: u64, out: &mut Vec<u64>) {
        if left == 0 {
            out.push(mask);
            return;
        }
        for i in start..=(n - left) {
            rec(i + 1, n, left - 1, mask | 1 << i, out);
        }
    }
    let mut out = Vec::new();
    if d <= 2 * m {
        rec(0, 2 * m, d, 0, &mut out);
    }
    out
}

pub fn slater_basis(m: usize, d: usize) -> Result<Vec<SlaterBasisVector>> {
    slater_basis_with_budget(m, d, &Budget::default())
}

pub fn slater_basis_with_budget(m: usize, d: usize, budget: &Budget) -> Result<Vec<SlaterBasisVector>> {
    check_space(m, d, budget)?;
    Ok(basis_masks(m, d)
        .into_iter()
        .map(|mask| SlaterBasisVector::from_mask(m, mask))
        .collect())
}

/// A vector of `H_{m,d}` in the Slater basis, exact and sparse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateVector {
    m: usize,
    d: usize,
    components: BTreeMap<u64, Rational>,
}

impl StateVector {
    pub fn zero(m: usize, d: usize) -> Self {
        StateVector {
            m,
            d,
            components: BTreeMap::new(),
        }
    }

    pub fn basis(v: &SlaterBasisVector) -> Self {
        let mut s = StateVector::zero(v.m, v.len());
        s.components.insert(v.mask, Rational::from_integer(1.into()));
        s
    }

    pub(crate) fn from_map(m: usize, d: usize, mut components: BTreeMap<u64, Rational>) -> Self {
        components.retain(|_, c| !c.is_zero());
        StateVector { m, d, components }
    }

    pub fn from_components<I>(m: usize, d: usize, components: I) -> Result<Self>
    where
        I: IntoIterator<Item = (SlaterBasisVector, Rational)>,
    {
        let mut map: BTreeMap<u64, Rational> = BTreeMap::new();
        for (v, c) in components {
            if v.m != m || v.len() != d {
                return Err(Error::DimensionMismatch {
                    expected: (m, d),
                    found: (v.m, v.len()),
                });
            }
            *map.entry(v.mask).or_insert_with(Rational::zero) += c;
        }
        Ok(StateVector::from_map(m, d, map))
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.m, self.d)
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub(crate) fn raw(&self) -> &BTreeMap<u64, Rational> {
        &self.components
    }

    /// Nonzero components in increasing basis order.
    pub fn components(&self) -> Vec<(SlaterBasisVector, Rational)> {
        let mut out: Vec<_> = self
            .components
            .iter()
            .map(|(&mask, c)| (SlaterBasisVector::from_mask(self.m, mask), c.clone()))
            .collect();
        out.sort_by_key(|a| a.0);
        out
    }

    pub fn coefficient(&self, v: &SlaterBasisVector) -> Rational {
        self.components
            .get(&v.mask)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn support(&self) -> Vec<SlaterBasisVector> {
        self.components().into_iter().map(|(v, _)| v).collect()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dims() != other.dims() {
            return Err(Error::DimensionMismatch {
                expected: self.dims(),
                found: other.dims(),
            });
        }
        let mut map = self.components.clone();
        for (k, c) in &other.components {
            *map.entry(*k).or_insert_with(Rational::zero) += c;
        }
        Ok(StateVector::from_map(self.m, self.d, map))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        StateVector::from_map(
            self.m,
            self.d,
            self.components.iter().map(|(k, x)| (*k, x * c)).collect(),
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .components()
            .into_iter()
            .map(|(v, c)| {
                let orbitals: Vec<serde_json::Value> = v
                    .orbitals()
                    .iter()
                    .map(|o| serde_json::json!([o.position, o.spin]))
                    .collect();
                serde_json::json!({ "orbitals": orbitals, "coeff": c.to_string() })
            })
            .collect();
        serde_json::Value::Array(entries)
    }

    pub fn from_json(value: &serde_json::Value, m: usize, d: usize) -> Result<Self> {
        #[derive(Deserialize)]
        struct Entry {
            orbitals: Vec<(usize, Spin)>,
            coeff: String,
        }
        let entries: Vec<Entry> =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let comps = entries
            .into_iter()
            .map(|e| {
                let orbitals: Vec<SpinOrbital> = e
                    .orbitals
                    .into_iter()
                    .map(|(position, spin)| SpinOrbital::new(position, spin, m))
                    .collect::<Result<_>>()?;
                Ok((SlaterBasisVector::new(&orbitals, m)?, parse_rational(&e.coeff)?))
            })
            .collect::<Result<Vec<_>>>()?;
        StateVector::from_components(m, d, comps)
    }
}
