//! Compositions of the individual bijections: standard matrices, tableau
//! pairs, plane partitions and Dyck words.

use std::collections::BTreeSet;

use num_traits::ToPrimitive;
use serde::Serialize;

use super::dyck::{dyck_family, dyck_to_pp, pp_to_dyck, DyckWord};
use super::plane::{pp_to_tableaux, tableaux_to_pp, PlanePartition};
use super::rsk::{rsk, rsk_inverse};
use super::tableau::Ssyt;
use crate::enumeration::narayana;
use crate::error::{Error, Result};
use crate::poly::ExponentMatrix;
use crate::stdmono::enumerate_standard;

/// RSK followed by the tableau-pair map. The recording tableau (entries are
/// row indices, at most `rows`) goes in the first slot, the insertion tableau
/// in the second, so an `a x b` matrix lands in `B(a, b, width)`.
pub fn matrix_to_pp(m: &ExponentMatrix) -> Result<PlanePartition> {
    let (insertion, recording) = rsk(m);
    let (a, b) = m.dims();
    tableaux_to_pp(&recording, &insertion, a, b)
}

pub fn pp_to_matrix(pp: &PlanePartition) -> Result<ExponentMatrix> {
    let (recording, insertion) = pp_to_tableaux(pp)?;
    rsk_inverse(&insertion, &recording)
}

/// The `(P, Q)` pair in the order consumed by [`tableaux_to_pp`].
pub fn matrix_to_tableaux(m: &ExponentMatrix) -> (Ssyt, Ssyt) {
    let (insertion, recording) = rsk(m);
    (recording, insertion)
}

pub fn matrix_transpose(m: &ExponentMatrix) -> ExponentMatrix {
    m.transpose()
}

pub fn transpose(pp: &PlanePartition) -> PlanePartition {
    pp.transpose()
}

/// Standard monomial of `S_{m,k}` to its Dyck word in `D(m+1, k+1)`.
pub fn standard_to_dyck(mat: &ExponentMatrix, m: usize) -> Result<DyckWord> {
    let k = mat.nrows();
    if k > m || mat.ncols() != m - k {
        return Err(Error::DimensionMismatch {
            expected: (k, m.saturating_sub(k)),
            found: mat.dims(),
        });
    }
    let pp = matrix_to_pp(mat)?.with_bound(2)?;
    pp_to_dyck(&pp, m, k)
}

pub fn dyck_to_standard(w: &DyckWord, m: usize, k: usize) -> Result<ExponentMatrix> {
    let pp = dyck_to_pp(w, m, k)?;
    pp_to_matrix(&pp)
}

/// Outcome of running every standard monomial of `S_{m,k}` through the chain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub m: usize,
    pub k: usize,
    pub standard: usize,
    pub narayana: u64,
    /// `M -> (P, Q) -> M`.
    pub rsk_round_trip: bool,
    /// `(P, Q) -> B -> (P, Q)`.
    pub tableaux_round_trip: bool,
    /// `B -> w -> B`.
    pub dyck_round_trip: bool,
    /// `M -> w -> M`.
    pub full_round_trip: bool,
    /// The words are distinct and exhaust `D(m+1, k+1)`.
    pub onto_family: bool,
    /// `pp(M^T) = pp(M)^T`.
    pub transpose_compatible: bool,
}

impl ChainReport {
    pub fn all_passed(&self) -> bool {
        self.standard as u64 == self.narayana
            && self.rsk_round_trip
            && self.tableaux_round_trip
            && self.dyck_round_trip
            && self.full_round_trip
            && self.onto_family
            && self.transpose_compatible
    }
}

pub fn verify_chain(m: usize, k: usize) -> Result<ChainReport> {
    let basis = enumerate_standard(m, k)?;
    let mut report = ChainReport {
        m,
        k,
        standard: basis.len(),
        narayana: narayana(m as u64 + 1, k as u64 + 1).to_u64().unwrap_or(u64::MAX),
        rsk_round_trip: true,
        tableaux_round_trip: true,
        dyck_round_trip: true,
        full_round_trip: true,
        onto_family: true,
        transpose_compatible: true,
    };
    let mut words = BTreeSet::new();
    for mat in &basis {
        let (insertion, recording) = rsk(mat);
        report.rsk_round_trip &= rsk_inverse(&insertion, &recording)? == *mat;
        let pp = matrix_to_pp(mat)?;
        report.tableaux_round_trip &= pp_to_tableaux(&pp)? == (recording, insertion);
        let pp2 = pp.with_bound(2)?;
        let w = pp_to_dyck(&pp2, m, k)?;
        report.dyck_round_trip &= dyck_to_pp(&w, m, k)? == pp2;
        report.full_round_trip &= dyck_to_standard(&w, m, k)? == *mat;
        report.transpose_compatible &= matrix_to_pp(&mat.transpose())? == pp.transpose();
        words.insert(w);
    }
    let family: BTreeSet<DyckWord> = dyck_family(m + 1, k + 1)?.into_iter().collect();
    report.onto_family = words.len() == basis.len() && words == family;
    Ok(report)
}
