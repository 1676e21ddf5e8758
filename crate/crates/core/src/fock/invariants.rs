use std::collections::{BTreeSet, HashMap};

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::budget::Budget;
use crate::enumeration::narayana;
use crate::error::{Error, Result};
use crate::ideal::IdealPresentation;
use crate::poly::{ExponentMatrix, Polynomial, Rational};
use crate::stdmono::enumerate_standard_with_budget;

use super::linalg::{Echelon, SparseRow};
use super::operator::{
    annihilation, creation, excitation_operator, sl2_action, LinearOperator, Sl2Generator,
};
use super::space::{basis_masks, check_m, check_space, SlaterBasisVector, SpinOrbital, StateVector};

fn check_k(m: usize, k: usize) -> Result<()> {
    check_m(m)?;
    if k == 0 || k > m {
        return Err(Error::InvalidParameters(format!(
            "need 1 <= k <= m, got m={m}, k={k}"
        )));
    }
    Ok(())
}

/// `e_{1↓} ∧ e_{1↑} ∧ ... ∧ e_{k↓} ∧ e_{k↑}` with coefficient 1.
pub fn reference_state(m: usize, k: usize) -> Result<StateVector> {
    check_m(m)?;
    if k > m {
        return Err(Error::InvalidParameters(format!("need k <= m, got m={m}, k={k}")));
    }
    let mask = if k == 0 { 0 } else { u64::MAX >> (64 - 2 * k) };
    Ok(StateVector::basis(&SlaterBasisVector::from_mask(m, mask)))
}

struct Indexed {
    masks: Vec<u64>,
    index: HashMap<u64, usize>,
}

impl Indexed {
    fn new(m: usize, d: usize) -> Self {
        let masks = basis_masks(m, d);
        let index = masks.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        Indexed { masks, index }
    }

    fn row(&self, v: &StateVector) -> SparseRow {
        v.raw()
            .iter()
            .map(|(mask, c)| (self.index[mask], c.clone()))
            .collect()
    }

    fn state(&self, m: usize, d: usize, row: &SparseRow) -> StateVector {
        StateVector::from_map(
            m,
            d,
            row.iter().map(|(&i, c)| (self.masks[i], c.clone())).collect(),
        )
    }
}

fn sl2_echelon(m: usize, d: usize, basis: &Indexed) -> Result<Echelon> {
    let mut echelon = Echelon::new();
    // S_z first: its rows are unit vectors on nonzero weights and clear most columns.
    for g in [Sl2Generator::Sz, Sl2Generator::SPlus, Sl2Generator::SMinus] {
        let op = sl2_action(g, m, d)?;
        let mut rows: HashMap<u64, SparseRow> = HashMap::new();
        for (col_mask, col) in op.columns() {
            let c = basis.index[col_mask];
            for (row_mask, v) in col {
                rows.entry(*row_mask).or_default().insert(c, v.clone());
            }
        }
        let mut keyed: Vec<(usize, SparseRow)> = rows
            .into_iter()
            .map(|(mask, r)| (basis.index[&mask], r))
            .collect();
        keyed.sort_by_key(|(i, _)| *i);
        for (_, r) in keyed {
            echelon.insert(r);
        }
    }
    Ok(echelon)
}

/// Basis of the common kernel of `S_plus`, `S_minus`, `S_z` on `H_{m,d}`, in
/// reduced-echelon form with respect to the Slater basis order.
pub fn invariant_subspace(m: usize, d: usize) -> Result<Vec<StateVector>> {
    invariant_subspace_with_budget(m, d, &Budget::from_env()?)
}

pub fn invariant_subspace_with_budget(m: usize, d: usize, budget: &Budget) -> Result<Vec<StateVector>> {
    check_space(m, d, budget)?;
    let basis = Indexed::new(m, d);
    let echelon = sl2_echelon(m, d, &basis)?;
    Ok(echelon
        .kernel(basis.masks.len())
        .iter()
        .map(|row| basis.state(m, d, row))
        .collect())
}

pub fn invariant_dimension(m: usize, d: usize) -> Result<usize> {
    check_space(m, d, &Budget::from_env()?)?;
    let basis = Indexed::new(m, d);
    Ok(basis.masks.len() - sl2_echelon(m, d, &basis)?.rank())
}

/// Determinants appearing with nonzero coefficient in some vector.
pub fn support(vectors: &[StateVector]) -> BTreeSet<SlaterBasisVector> {
    vectors.iter().flat_map(StateVector::support).collect()
}

/// Complements the occupied up-set and down-set inside `[m]`.
pub fn particle_hole(v: &SlaterBasisVector) -> SlaterBasisVector {
    let full = if v.m() == 0 {
        0
    } else {
        u64::MAX >> (64 - 2 * v.m())
    };
    SlaterBasisVector::from_mask(v.m(), v.mask() ^ full)
}

/// The basis-index bijection `H_{m,d} -> H_{m,2m-d}`, in domain basis order.
pub fn particle_hole_map(m: usize, d: usize) -> Result<Vec<(SlaterBasisVector, SlaterBasisVector)>> {
    check_space(m, d, &Budget::from_env()?)?;
    Ok(basis_masks(m, d)
        .into_iter()
        .map(|mask| {
            let v = SlaterBasisVector::from_mask(m, mask);
            (v, particle_hole(&v))
        })
        .collect())
}

/// Whether particle-hole carries the invariant support of `H_{m,d}` onto that
/// of `H_{m,2m-d}`.
pub fn particle_hole_preserves_invariant_support(m: usize, d: usize) -> Result<bool> {
    if d > 2 * m {
        return Err(Error::InvalidParameters(format!("{d} > 2m = {}", 2 * m)));
    }
    let source = support(&invariant_subspace(m, d)?);
    let target = support(&invariant_subspace(m, 2 * m - d)?);
    let image: BTreeSet<_> = source.iter().map(particle_hole).collect();
    Ok(image == target)
}

fn excitation_operators(m: usize, k: usize) -> Result<Vec<Vec<LinearOperator>>> {
    (1..=k)
        .map(|i| (1..=m - k).map(|j| excitation_operator(i, j, m, k)).collect())
        .collect()
}

fn monomial_apply(xs: &[Vec<LinearOperator>], exp: &ExponentMatrix, v: &StateVector) -> Result<StateVector> {
    let mut out = v.clone();
    for (i, row) in xs.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            for _ in 0..exp.get(i, j) {
                if out.is_zero() {
                    return Ok(out);
                }
                out = x.apply(&out)?;
            }
        }
    }
    Ok(out)
}

fn monomial_operator(
    xs: &[Vec<LinearOperator>],
    exp: &ExponentMatrix,
    m: usize,
    d: usize,
) -> Result<LinearOperator> {
    let mut out = LinearOperator::identity(m, d)?;
    for (i, row) in xs.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            for _ in 0..exp.get(i, j) {
                out = x.compose(&out)?;
            }
        }
    }
    Ok(out)
}

/// Substitutes `X[i,j] -> X_{i,j}` into `p`, giving an operator on `H_{m,2k}`.
pub fn evaluate_on_operators(p: &Polynomial, m: usize, k: usize) -> Result<LinearOperator> {
    check_k(m, k)?;
    if p.dims() != (k, m - k) {
        return Err(Error::DimensionMismatch {
            expected: (k, m - k),
            found: p.dims(),
        });
    }
    let xs = excitation_operators(m, k)?;
    let mut total = LinearOperator::zero(m, 2 * k, 2 * k);
    for (exp, c) in p.terms() {
        total = total.add(&monomial_operator(&xs, exp, m, 2 * k)?.scale(c))?;
    }
    Ok(total)
}

/// Applies the operator obtained from `p` to the reference state.
pub fn apply_to_reference(p: &Polynomial, m: usize, k: usize) -> Result<StateVector> {
    check_k(m, k)?;
    let xs = excitation_operators(m, k)?;
    let reference = reference_state(m, k)?;
    let mut total = StateVector::zero(m, 2 * k);
    for (exp, c) in p.terms() {
        total = total.add(&monomial_apply(&xs, exp, &reference)?.scale(c))?;
    }
    Ok(total)
}

#[derive(Debug, Clone, Serialize)]
pub struct CubicRelationReport {
    pub m: usize,
    pub k: usize,
    pub relations: usize,
    pub failures: Vec<String>,
}

impl CubicRelationReport {
    pub fn all_vanish(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Evaluates every generator of the ideal on the excitation operators.
pub fn verify_cubic_relations(m: usize, k: usize) -> Result<CubicRelationReport> {
    check_k(m, k)?;
    check_space(m, 2 * k, &Budget::from_env()?)?;
    let ideal = IdealPresentation::new(m, k)?;
    let xs = excitation_operators(m, k)?;
    let mut cache: HashMap<ExponentMatrix, LinearOperator> = HashMap::new();
    let mut failures = Vec::new();
    for (label, g) in ideal.generators() {
        let mut total = LinearOperator::zero(m, 2 * k, 2 * k);
        for (exp, c) in g.terms() {
            if !cache.contains_key(exp) {
                cache.insert(exp.clone(), monomial_operator(&xs, exp, m, 2 * k)?);
            }
            total = total.add(&cache[exp].scale(c))?;
        }
        if !total.is_zero() {
            failures.push(label.to_string());
        }
    }
    Ok(CubicRelationReport {
        m,
        k,
        relations: ideal.generators().len(),
        failures,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExcitationBasisElement {
    pub monomial: ExponentMatrix,
    pub state: StateVector,
}

fn is_invariant(v: &StateVector, ops: &[LinearOperator]) -> Result<bool> {
    for op in ops {
        if !op.apply(v)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `m(X) · ref` for every standard monomial `m`, checked to be invariant and
/// linearly independent.
pub fn excitation_basis(m: usize, k: usize) -> Result<Vec<ExcitationBasisElement>> {
    check_k(m, k)?;
    let budget = Budget::from_env()?;
    check_space(m, 2 * k, &budget)?;
    let monomials = enumerate_standard_with_budget(m, k, &budget)?;
    let xs = excitation_operators(m, k)?;
    let reference = reference_state(m, k)?;
    let sl2: Vec<LinearOperator> = Sl2Generator::ALL
        .iter()
        .map(|&g| sl2_action(g, m, 2 * k))
        .collect::<Result<_>>()?;
    let basis = Indexed::new(m, 2 * k);
    let mut echelon = Echelon::new();
    let mut out = Vec::with_capacity(monomials.len());
    for monomial in monomials {
        let state = monomial_apply(&xs, &monomial, &reference)?;
        if !is_invariant(&state, &sl2)? {
            return Err(Error::PropertyViolation(format!(
                "excitation vector for {:?} is not spin invariant",
                monomial.to_rows()
            )));
        }
        if !echelon.insert(basis.row(&state)) {
            return Err(Error::LinearDependence(format!(
                "excitation vector for {:?} lies in the span of earlier ones",
                monomial.to_rows()
            )));
        }
        out.push(ExcitationBasisElement { monomial, state });
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct SpanReport {
    pub basis_len: usize,
    pub basis_rank: usize,
    pub invariant_dim: usize,
    pub joint_rank: usize,
    pub narayana: u64,
}

impl SpanReport {
    /// Independent, of the predicted size, and spanning the invariant subspace.
    pub fn is_basis(&self) -> bool {
        self.basis_len == self.basis_rank
            && self.basis_rank == self.invariant_dim
            && self.joint_rank == self.invariant_dim
            && self.narayana == self.basis_len as u64
    }
}

/// Compares the span of the excitation vectors with the invariant subspace.
pub fn excitation_span_report(m: usize, k: usize) -> Result<SpanReport> {
    let elements = excitation_basis(m, k)?;
    let invariant = invariant_subspace(m, 2 * k)?;
    let basis = Indexed::new(m, 2 * k);
    let mut echelon = Echelon::new();
    for e in &elements {
        echelon.insert(basis.row(&e.state));
    }
    let basis_rank = echelon.rank();
    for v in &invariant {
        echelon.insert(basis.row(v));
    }
    Ok(SpanReport {
        basis_len: elements.len(),
        basis_rank,
        invariant_dim: invariant.len(),
        joint_rank: echelon.rank(),
        narayana: narayana(m as u64 + 1, k as u64 + 1).to_u64().unwrap_or(u64::MAX),
    })
}

/// Counts violated canonical anticommutation relations on `H_{m,d}`.
pub fn anticommutation_failures(m: usize, d: usize) -> Result<usize> {
    check_space(m, d, &Budget::from_env()?)?;
    let orbitals: Vec<SpinOrbital> = (0..2 * m).map(SpinOrbital::from_index).collect();
    let mut failures = 0;
    let identity = LinearOperator::identity(m, d)?;
    for &x in &orbitals {
        for &y in &orbitals {
            if d >= 2 {
                let s = annihilation(x, m, d - 1)?
                    .compose(&annihilation(y, m, d)?)?
                    .add(&annihilation(y, m, d - 1)?.compose(&annihilation(x, m, d)?)?)?;
                failures += usize::from(!s.is_zero());
            }
            if d + 2 <= 2 * m {
                let s = creation(x, m, d + 1)?
                    .compose(&creation(y, m, d)?)?
                    .add(&creation(y, m, d + 1)?.compose(&creation(x, m, d)?)?)?;
                failures += usize::from(!s.is_zero());
            }
            if d >= 1 && d < 2 * m {
                let s = creation(x, m, d - 1)?
                    .compose(&annihilation(y, m, d)?)?
                    .add(&annihilation(y, m, d + 1)?.compose(&creation(x, m, d)?)?)?;
                let ok = if x == y { s == identity } else { s.is_zero() };
                failures += usize::from(!ok);
            }
        }
    }
    Ok(failures)
}

#[derive(Debug, Clone, Serialize)]
pub struct FockCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct FockReport {
    pub m: usize,
    pub k: usize,
    pub checks: Vec<FockCheck>,
}

impl FockReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Runs every operator-level check at `(m, k)`.
pub fn verify_fock(m: usize, k: usize) -> Result<FockReport> {
    verify_fock_with_progress(m, k, |_| {})
}

pub fn verify_fock_with_progress(m: usize, k: usize, progress: impl Fn(&str)) -> Result<FockReport> {
    check_k(m, k)?;
    let d = 2 * k;
    check_space(m, d, &Budget::from_env()?)?;
    let mut checks = Vec::new();

    progress("anticommutation");
    let mut bad = 0;
    for dd in 0..=2 * m {
        bad += anticommutation_failures(m, dd)?;
    }
    checks.push(FockCheck {
        name: "anticommutation",
        passed: bad == 0,
        detail: format!("{bad} failing relations over d = 0..={}", 2 * m),
    });

    progress("sl2 relations");
    let sp = sl2_action(Sl2Generator::SPlus, m, d)?;
    let sm = sl2_action(Sl2Generator::SMinus, m, d)?;
    let sz = sl2_action(Sl2Generator::Sz, m, d)?;
    let two = Rational::from_integer(2.into());
    let triple = sp.commutator(&sm)? == sz
        && sz.commutator(&sp)? == sp.scale(&two)
        && sz.commutator(&sm)? == sm.scale(&-two.clone());
    checks.push(FockCheck {
        name: "sl2_relations",
        passed: triple,
        detail: "[S+,S-]=Sz, [Sz,S+]=2S+, [Sz,S-]=-2S-".into(),
    });

    progress("excitation operators");
    let xs: Vec<LinearOperator> = excitation_operators(m, k)?.into_iter().flatten().collect();
    let mut noncommuting = 0;
    for (a_idx, a) in xs.iter().enumerate() {
        for b in &xs[a_idx + 1..] {
            noncommuting += usize::from(!a.commutator(b)?.is_zero());
        }
    }
    checks.push(FockCheck {
        name: "excitations_commute",
        passed: noncommuting == 0,
        detail: format!("{noncommuting} non-commuting pairs among {} operators", xs.len()),
    });
    let mut broken = 0;
    for x in &xs {
        for g in [&sp, &sm, &sz] {
            broken += usize::from(!g.commutator(x)?.is_zero());
        }
    }
    checks.push(FockCheck {
        name: "sl2_invariance",
        passed: broken == 0,
        detail: format!("{broken} nonzero commutators [g, X]"),
    });

    progress("cubic relations");
    let cubic = verify_cubic_relations(m, k)?;
    checks.push(FockCheck {
        name: "cubic_relations",
        passed: cubic.all_vanish(),
        detail: format!(
            "{} of {} relations vanish",
            cubic.relations - cubic.failures.len(),
            cubic.relations
        ),
    });

    progress("invariant subspace");
    let span = match excitation_span_report(m, k) {
        Ok(s) => s,
        Err(e @ (Error::LinearDependence(_) | Error::PropertyViolation(_))) => {
            checks.push(FockCheck {
                name: "excitation_basis",
                passed: false,
                detail: e.to_string(),
            });
            return Ok(FockReport { m, k, checks });
        }
        Err(e) => return Err(e),
    };
    checks.push(FockCheck {
        name: "invariant_dimension",
        passed: span.invariant_dim as u64 == span.narayana,
        detail: format!("dim = {}, narayana = {}", span.invariant_dim, span.narayana),
    });
    checks.push(FockCheck {
        name: "excitation_basis",
        passed: span.is_basis(),
        detail: format!(
            "{} vectors, rank {}, joint rank with invariants {}",
            span.basis_len, span.basis_rank, span.joint_rank
        ),
    });

    progress("particle-hole");
    let ph = particle_hole_preserves_invariant_support(m, d)?;
    checks.push(FockCheck {
        name: "particle_hole_support",
        passed: ph,
        detail: format!("H_{{{m},{d}}} -> H_{{{m},{}}}", 2 * m - d),
    });

    Ok(FockReport { m, k, checks })
}
