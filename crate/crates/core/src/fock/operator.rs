use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::poly::Rational;

use super::space::{basis_masks, check_space, SlaterBasisVector, Spin, SpinOrbital, StateVector};

type Column = BTreeMap<u64, Rational>;

/// Sparse exact matrix `H_{m,d_in} -> H_{m,d_out}`, stored by columns keyed by
/// domain determinant masks. Absent columns are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearOperator {
    m: usize,
    d_in: usize,
    d_out: usize,
    columns: BTreeMap<u64, Column>,
}

fn add_into(target: &mut Column, key: u64, value: Rational) {
    if value.is_zero() {
        return;
    }
    match target.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(value);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += value;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// `(-1)^(number of occupied orbitals strictly below bit)`.
fn sign_below(mask: u64, bit: usize) -> bool {
    (mask & ((1u64 << bit) - 1)).count_ones() % 2 == 1
}

fn signed(negative: bool) -> Rational {
    if negative {
        -Rational::one()
    } else {
        Rational::one()
    }
}

impl LinearOperator {
    pub fn zero(m: usize, d_in: usize, d_out: usize) -> Self {
        LinearOperator {
            m,
            d_in,
            d_out,
            columns: BTreeMap::new(),
        }
    }

    pub fn identity(m: usize, d: usize) -> Result<Self> {
        Self::from_basis_map(m, d, d, |mask| vec![(mask, Rational::one())])
    }

    /// Builds the operator column by column from the images of basis vectors.
    pub fn from_basis_map<F>(m: usize, d_in: usize, d_out: usize, f: F) -> Result<Self>
    where
        F: Fn(u64) -> Vec<(u64, Rational)>,
    {
        let budget = Budget::from_env()?;
        check_space(m, d_in, &budget)?;
        let mut columns = BTreeMap::new();
        for mask in basis_masks(m, d_in) {
            let mut col = Column::new();
            for (row, c) in f(mask) {
                add_into(&mut col, row, c);
            }
            if !col.is_empty() {
                columns.insert(mask, col);
            }
        }
        Ok(LinearOperator {
            m,
            d_in,
            d_out,
            columns,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn domain(&self) -> (usize, usize) {
        (self.m, self.d_in)
    }

    pub fn codomain(&self) -> (usize, usize) {
        (self.m, self.d_out)
    }

    pub fn is_zero(&self) -> bool {
        self.columns.is_empty()
    }

    /// Number of stored nonzero entries.
    pub fn nnz(&self) -> usize {
        self.columns.values().map(BTreeMap::len).sum()
    }

    pub fn entry(&self, row: &SlaterBasisVector, col: &SlaterBasisVector) -> Rational {
        self.columns
            .get(&col.mask())
            .and_then(|c| c.get(&row.mask()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Nonzero entries as `(row, column, value)` in increasing column then row order.
    pub fn entries(&self) -> Vec<(SlaterBasisVector, SlaterBasisVector, Rational)> {
        let mut out = Vec::with_capacity(self.nnz());
        for (&c, col) in &self.columns {
            for (&r, v) in col {
                out.push((
                    SlaterBasisVector::from_mask(self.m, r),
                    SlaterBasisVector::from_mask(self.m, c),
                    v.clone(),
                ));
            }
        }
        out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
        out
    }

    pub(crate) fn columns(&self) -> &BTreeMap<u64, Column> {
        &self.columns
    }

    pub fn apply(&self, v: &StateVector) -> Result<StateVector> {
        if v.dims() != self.domain() {
            return Err(Error::DimensionMismatch {
                expected: self.domain(),
                found: v.dims(),
            });
        }
        let mut out = Column::new();
        for (mask, c) in v.raw() {
            if let Some(col) = self.columns.get(mask) {
                for (r, x) in col {
                    add_into(&mut out, *r, x * c);
                }
            }
        }
        Ok(StateVector::from_map(self.m, self.d_out, out))
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &LinearOperator) -> Result<LinearOperator> {
        if rhs.codomain() != self.domain() {
            return Err(Error::DimensionMismatch {
                expected: self.domain(),
                found: rhs.codomain(),
            });
        }
        let mut columns = BTreeMap::new();
        for (&c, rcol) in &rhs.columns {
            let mut out = Column::new();
            for (mid, x) in rcol {
                if let Some(lcol) = self.columns.get(mid) {
                    for (r, y) in lcol {
                        add_into(&mut out, *r, x * y);
                    }
                }
            }
            if !out.is_empty() {
                columns.insert(c, out);
            }
        }
        Ok(LinearOperator {
            m: self.m,
            d_in: rhs.d_in,
            d_out: self.d_out,
            columns,
        })
    }

    fn same_shape(&self, other: &LinearOperator) -> Result<()> {
        if self.domain() != other.domain() {
            return Err(Error::DimensionMismatch {
                expected: self.domain(),
                found: other.domain(),
            });
        }
        if self.codomain() != other.codomain() {
            return Err(Error::DimensionMismatch {
                expected: self.codomain(),
                found: other.codomain(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &LinearOperator) -> Result<LinearOperator> {
        self.same_shape(other)?;
        let mut columns = self.columns.clone();
        for (&c, ocol) in &other.columns {
            let col = columns.entry(c).or_default();
            for (r, v) in ocol {
                add_into(col, *r, v.clone());
            }
        }
        columns.retain(|_, col| !col.is_empty());
        Ok(LinearOperator {
            columns,
            ..self.clone()
        })
    }

    pub fn scale(&self, c: &Rational) -> LinearOperator {
        if c.is_zero() {
            return LinearOperator::zero(self.m, self.d_in, self.d_out);
        }
        let columns = self
            .columns
            .iter()
            .map(|(&k, col)| (k, col.iter().map(|(&r, v)| (r, v * c)).collect()))
            .collect();
        LinearOperator {
            columns,
            ..self.clone()
        }
    }

    pub fn neg(&self) -> LinearOperator {
        self.scale(&-Rational::one())
    }

    pub fn sub(&self, other: &LinearOperator) -> Result<LinearOperator> {
        self.add(&other.neg())
    }

    /// `self ∘ other − other ∘ self`.
    pub fn commutator(&self, other: &LinearOperator) -> Result<LinearOperator> {
        self.compose(other)?.sub(&other.compose(self)?)
    }

    /// `self ∘ other + other ∘ self`.
    pub fn anticommutator(&self, other: &LinearOperator) -> Result<LinearOperator> {
        self.compose(other)?.add(&other.compose(self)?)
    }
}

/// `a†_o : H_{m,d} -> H_{m,d+1}`, wedging `o` on the left.
pub fn creation(o: SpinOrbital, m: usize, d: usize) -> Result<LinearOperator> {
    SpinOrbital::new(o.position, o.spin, m)?;
    let bit = o.index();
    LinearOperator::from_basis_map(m, d, d + 1, |mask| {
        if mask >> bit & 1 == 1 {
            Vec::new()
        } else {
            vec![(mask | 1 << bit, signed(sign_below(mask, bit)))]
        }
    })
}

/// `a_o : H_{m,d} -> H_{m,d-1}`, interior product with `o`.
pub fn annihilation(o: SpinOrbital, m: usize, d: usize) -> Result<LinearOperator> {
    SpinOrbital::new(o.position, o.spin, m)?;
    if d == 0 {
        return Err(Error::InvalidParameters(
            "annihilation is not defined on H_{m,0}".into(),
        ));
    }
    let bit = o.index();
    LinearOperator::from_basis_map(m, d, d - 1, |mask| {
        if mask >> bit & 1 == 0 {
            Vec::new()
        } else {
            vec![(mask & !(1 << bit), signed(sign_below(mask, bit)))]
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sl2Generator {
    SPlus,
    SMinus,
    Sz,
}

impl Sl2Generator {
    pub const ALL: [Sl2Generator; 3] = [Sl2Generator::SPlus, Sl2Generator::SMinus, Sl2Generator::Sz];

    /// Matrix in the standard basis `e1, e2` of `C^2`.
    pub fn matrix(self) -> [[i64; 2]; 2] {
        match self {
            Sl2Generator::SPlus => [[0, 1], [0, 0]],
            Sl2Generator::SMinus => [[0, 0], [1, 0]],
            Sl2Generator::Sz => [[1, 0], [0, -1]],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Sl2Generator::SPlus => "S_plus",
            Sl2Generator::SMinus => "S_minus",
            Sl2Generator::Sz => "S_z",
        }
    }

    /// Image of a spin vector, expanded in the spin basis, with `e_up = e1`
    /// and `e_down = -e2`.
    pub fn on_spin(self, spin: Spin) -> Vec<(Spin, i64)> {
        let g = self.matrix();
        let v = match spin {
            Spin::Up => [1, 0],
            Spin::Down => [0, -1],
        };
        let w = [g[0][0] * v[0] + g[0][1] * v[1], g[1][0] * v[0] + g[1][1] * v[1]];
        let mut out = Vec::new();
        if w[0] != 0 {
            out.push((Spin::Up, w[0]));
        }
        if w[1] != 0 {
            out.push((Spin::Down, -w[1]));
        }
        out
    }
}

/// The Leibniz action of `g` on `H_{m,d}`: `g` hits one wedge factor at a time.
pub fn sl2_action(g: Sl2Generator, m: usize, d: usize) -> Result<LinearOperator> {
    LinearOperator::from_basis_map(m, d, d, |mask| {
        let mut image = Vec::new();
        for bit in (0..2 * m).filter(|&b| mask >> b & 1 == 1) {
            let o = SpinOrbital::from_index(bit);
            for (spin, c) in g.on_spin(o.spin) {
                let target = SpinOrbital {
                    position: o.position,
                    spin,
                }
                .index();
                if target == bit {
                    image.push((mask, Rational::from_integer(c.into())));
                } else if mask >> target & 1 == 0 {
                    // Slide the new factor from slot `bit` to its sorted slot.
                    let (lo, hi) = if target < bit {
                        (target, bit)
                    } else {
                        (bit, target)
                    };
                    let between = mask & ((1u64 << hi) - 1) & !((1u64 << (lo + 1)) - 1);
                    let negative = between.count_ones() % 2 == 1;
                    let value = Rational::from_integer(c.into()) * signed(negative);
                    image.push(((mask & !(1 << bit)) | 1 << target, value));
                }
            }
        }
        image
    })
}

/// `X_{i,j} = a†_{(j+k)↓} a_{i↓} + a†_{(j+k)↑} a_{i↑}` on `H_{m,2k}`.
pub fn excitation_operator(i: usize, j: usize, m: usize, k: usize) -> Result<LinearOperator> {
    if k > m {
        return Err(Error::InvalidParameters(format!("need k <= m, got k={k}, m={m}")));
    }
    if i == 0 || i > k || j == 0 || j > m - k {
        return Err(Error::IndexOutOfRange(format!(
            "X[{i},{j}] outside 1..={k} x 1..={}",
            m - k
        )));
    }
    let d = 2 * k;
    let mut total = LinearOperator::zero(m, d, d);
    for spin in [Spin::Down, Spin::Up] {
        let hop = creation(
            SpinOrbital {
                position: j + k,
                spin,
            },
            m,
            d - 1,
        )?
        .compose(&annihilation(SpinOrbital { position: i, spin }, m, d)?)?;
        total = total.add(&hop)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn det(orbitals: &[SpinOrbital], m: usize) -> SlaterBasisVector {
        SlaterBasisVector::new(orbitals, m).unwrap()
    }

    fn all_orbitals(m: usize) -> Vec<SpinOrbital> {
        (0..2 * m).map(SpinOrbital::from_index).collect()
    }

    #[test]
    fn annihilate_single_orbital() {
        let o = SpinOrbital::up(2);
        let v = StateVector::basis(&det(&[o], 3));
        let out = annihilation(o, 3, 1).unwrap().apply(&v).unwrap();
        assert_eq!(out.components(), vec![(det(&[], 3), q(1))]);
        let other = annihilation(SpinOrbital::down(1), 3, 1)
            .unwrap()
            .apply(&v)
            .unwrap();
        assert!(other.is_zero());
    }

    #[test]
    fn creation_sign_counts_prior_orbitals() {
        let base = det(&[SpinOrbital::down(1), SpinOrbital::up(1)], 2);
        let out = creation(SpinOrbital::down(2), 2, 2)
            .unwrap()
            .apply(&StateVector::basis(&base))
            .unwrap();
        let target = det(
            &[SpinOrbital::down(1), SpinOrbital::up(1), SpinOrbital::down(2)],
            2,
        );
        assert_eq!(out.components(), vec![(target, q(1))]);
        let out = creation(SpinOrbital::up(1), 2, 1)
            .unwrap()
            .apply(&StateVector::basis(&det(&[SpinOrbital::down(1)], 2)))
            .unwrap();
        assert_eq!(out.components(), vec![(base, q(-1))]);
    }

    #[test]
    fn canonical_anticommutation_relations() {
        for m in 1..=3 {
            let orbs = all_orbitals(m);
            for d in 0..=2 * m {
                for &x in &orbs {
                    for &y in &orbs {
                        if d >= 2 {
                            let aa = annihilation(x, m, d - 1)
                                .unwrap()
                                .compose(&annihilation(y, m, d).unwrap())
                                .unwrap();
                            let bb = annihilation(y, m, d - 1)
                                .unwrap()
                                .compose(&annihilation(x, m, d).unwrap())
                                .unwrap();
                            assert!(aa.add(&bb).unwrap().is_zero());
                        }
                        if d + 2 <= 2 * m {
                            let cc = creation(x, m, d + 1)
                                .unwrap()
                                .compose(&creation(y, m, d).unwrap())
                                .unwrap();
                            let dd = creation(y, m, d + 1)
                                .unwrap()
                                .compose(&creation(x, m, d).unwrap())
                                .unwrap();
                            assert!(cc.add(&dd).unwrap().is_zero());
                        }
                        if d >= 1 && d < 2 * m {
                            let ca = creation(x, m, d - 1)
                                .unwrap()
                                .compose(&annihilation(y, m, d).unwrap())
                                .unwrap();
                            let ac = annihilation(y, m, d + 1)
                                .unwrap()
                                .compose(&creation(x, m, d).unwrap())
                                .unwrap();
                            let sum = ca.add(&ac).unwrap();
                            if x == y {
                                assert_eq!(sum, LinearOperator::identity(m, d).unwrap());
                            } else {
                                assert!(sum.is_zero());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn spin_convention() {
        use Sl2Generator::*;
        assert_eq!(SPlus.on_spin(Spin::Down), vec![(Spin::Up, -1)]);
        assert_eq!(SPlus.on_spin(Spin::Up), vec![]);
        assert_eq!(SMinus.on_spin(Spin::Up), vec![(Spin::Down, -1)]);
        assert_eq!(SMinus.on_spin(Spin::Down), vec![]);
        assert_eq!(Sz.on_spin(Spin::Up), vec![(Spin::Up, 1)]);
        assert_eq!(Sz.on_spin(Spin::Down), vec![(Spin::Down, -1)]);
    }

    #[test]
    fn sz_eigenvalues() {
        let sz = sl2_action(Sl2Generator::Sz, 2, 2).unwrap();
        let paired = StateVector::basis(&det(&[SpinOrbital::down(1), SpinOrbital::up(1)], 2));
        assert!(sz.apply(&paired).unwrap().is_zero());
        let ups = StateVector::basis(&det(&[SpinOrbital::up(1), SpinOrbital::up(2)], 2));
        assert_eq!(sz.apply(&ups).unwrap(), ups.scale(&q(2)));
    }

    /// The same action assembled from hopping operators `sum g_{ba} a†_b a_a`.
    fn sl2_from_hops(g: Sl2Generator, m: usize, d: usize) -> LinearOperator {
        let mut total = LinearOperator::zero(m, d, d);
        if d == 0 {
            return total;
        }
        for pos in 1..=m {
            for from in [Spin::Down, Spin::Up] {
                for (to, c) in g.on_spin(from) {
                    let hop = creation(
                        SpinOrbital {
                            position: pos,
                            spin: to,
                        },
                        m,
                        d - 1,
                    )
                    .unwrap()
                    .compose(
                        &annihilation(
                            SpinOrbital {
                                position: pos,
                                spin: from,
                            },
                            m,
                            d,
                        )
                        .unwrap(),
                    )
                    .unwrap();
                    total = total.add(&hop.scale(&q(c))).unwrap();
                }
            }
        }
        total
    }

    #[test]
    fn leibniz_action_matches_hopping_form() {
        for m in 1..=3 {
            for d in 0..=2 * m {
                for g in Sl2Generator::ALL {
                    assert_eq!(
                        sl2_action(g, m, d).unwrap(),
                        sl2_from_hops(g, m, d),
                        "{g:?} {m} {d}"
                    );
                }
            }
        }
    }

    #[test]
    fn sl2_commutation_relations() {
        for (m, d) in [(3, 2), (3, 3), (2, 2), (4, 4)] {
            let sp = sl2_action(Sl2Generator::SPlus, m, d).unwrap();
            let sm = sl2_action(Sl2Generator::SMinus, m, d).unwrap();
            let sz = sl2_action(Sl2Generator::Sz, m, d).unwrap();
            assert_eq!(sp.commutator(&sm).unwrap(), sz);
            assert_eq!(sz.commutator(&sp).unwrap(), sp.scale(&q(2)));
            assert_eq!(sz.commutator(&sm).unwrap(), sm.scale(&q(-2)));
        }
    }

    #[test]
    fn excitation_on_reference_has_two_terms() {
        let m = 4;
        let reference: Vec<SpinOrbital> = (1..=2)
            .flat_map(|p| [SpinOrbital::down(p), SpinOrbital::up(p)])
            .collect();
        let out = excitation_operator(1, 1, m, 2)
            .unwrap()
            .apply(&StateVector::basis(&det(&reference, m)))
            .unwrap();
        let comps = out.components();
        assert_eq!(comps.len(), 2);
        let down_hop = det(
            &[
                SpinOrbital::up(1),
                SpinOrbital::down(2),
                SpinOrbital::up(2),
                SpinOrbital::down(3),
            ],
            m,
        );
        let up_hop = det(
            &[
                SpinOrbital::down(1),
                SpinOrbital::down(2),
                SpinOrbital::up(2),
                SpinOrbital::up(3),
            ],
            m,
        );
        assert_eq!(out.coefficient(&down_hop), q(-1));
        assert_eq!(out.coefficient(&up_hop), q(1));
    }

    #[test]
    fn excitation_operators_commute_with_each_other_and_sl2() {
        for (m, k) in [(3, 1), (4, 2)] {
            let xs: Vec<LinearOperator> = (1..=k)
                .flat_map(|i| (1..=m - k).map(move |j| (i, j)))
                .map(|(i, j)| excitation_operator(i, j, m, k).unwrap())
                .collect();
            for a in &xs {
                for b in &xs {
                    assert!(a.commutator(b).unwrap().is_zero());
                }
                for g in Sl2Generator::ALL {
                    assert!(sl2_action(g, m, 2 * k).unwrap().commutator(a).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn excitation_index_range() {
        assert!(excitation_operator(0, 1, 4, 2).is_err());
        assert!(excitation_operator(3, 1, 4, 2).is_err());
        assert!(excitation_operator(1, 3, 4, 2).is_err());
    }
}
