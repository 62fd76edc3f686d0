//! Construction of the Real T-dual of a classified (torus, gerbe) pair over
//! a point.
//!
//! The dual torus has the dual lattice with involution `-sigma0^T`; its
//! Chern class is the linear part of the source gerbe read through the
//! pairing isomorphism `delta`, and the dual gerbe's linear part is the
//! source Chern class read through `delta^T`.  The dual gerbe is unique
//! unless the source Chern class is nonzero while the dual one vanishes, in
//! which case exactly two candidates exist, differing by the ungraded point
//! gerbe.  Both are recorded and all downstream verification runs on both.

use num_bigint::BigInt;
use thiserror::Error;

use crate::gerbe_class::{
    degree_shift_of_twist, reduce_mod_point_gerbes, AffineGerbeClass, GerbeError, PointGerbeClass,
};
use crate::torus_class::{
    canonical_torus, decompose, dual_torus, FactorType, RealTorus, TorusError,
};
use crate::zlinalg::{lattice_contains, IntMatrix};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TdualityError {
    #[error("input gerbe carries a nontrivial grading; strip it into the shift ledger first")]
    GradedInput,
    #[error("shift ledger is missing the twist count of the vertical bundle")]
    LedgerIncomplete,
    #[error("no dual gerbe candidate with index {0}")]
    NoSuchCandidate(usize),
    #[error(transparent)]
    Gerbe(#[from] GerbeError),
    #[error(transparent)]
    Torus(#[from] TorusError),
}

/// Degree bookkeeping for the transform attached to a dual pair: the fiber
/// dimension n, the number of sign-representation summands of the vertical
/// bundle (whose lifting gerbe is the corresponding power of the point
/// generator), and the residual point twist of the source gerbe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftLedger {
    pub fiber_dim: usize,
    pub minus_summands: Option<usize>,
    pub source_twist: PointGerbeClass,
}

/// A classified Real T-dual pair.
///
/// `delta` is the unimodular pairing between the dual lattice and the
/// sign-twisted dual of the source lattice; in the dual basis used here it
/// is the identity.  `target_torus` lives in that dual basis, while the
/// gerbe candidates are attached to the canonical block form of the target
/// (the two agree up to a lattice automorphism, which is invisible at
/// classification level).  `target_candidates` holds one class, or two
/// classes differing by the ungraded point gerbe.
#[derive(Clone, Debug)]
pub struct DualityDatum {
    source_torus: RealTorus,
    source_gerbe: AffineGerbeClass,
    source_factors: Vec<FactorType>,
    target_torus: RealTorus,
    target_candidates: Vec<AffineGerbeClass>,
    target_factors: Vec<FactorType>,
    delta: IntMatrix,
    ledger: ShiftLedger,
}

impl DualityDatum {
    pub fn source_torus(&self) -> &RealTorus {
        &self.source_torus
    }

    pub fn source_gerbe(&self) -> &AffineGerbeClass {
        &self.source_gerbe
    }

    /// Resolved source factors (cyclotomic circles split into T3/T4).
    pub fn source_factors(&self) -> &[FactorType] {
        &self.source_factors
    }

    pub fn target_torus(&self) -> &RealTorus {
        &self.target_torus
    }

    pub fn target_candidates(&self) -> &[AffineGerbeClass] {
        &self.target_candidates
    }

    pub fn target_factors(&self) -> &[FactorType] {
        &self.target_factors
    }

    pub fn delta(&self) -> &IntMatrix {
        &self.delta
    }

    pub fn ledger(&self) -> &ShiftLedger {
        &self.ledger
    }

    /// Chern vector of the target torus: delta^{-1} applied to the source
    /// gerbe's linear part (identity delta here).
    pub fn target_chern_vector(&self) -> Vec<BigInt> {
        self.target_torus
            .chern_vector()
            .expect("target torus was validated on construction")
    }
}

/// Number of sign-representation summands of the vertical bundle of a
/// factor list: one per cyclotomic circle, one per regular pair.
pub fn minus_summands(factors: &[FactorType]) -> usize {
    factors
        .iter()
        .filter(|f| matches!(f, FactorType::T3 | FactorType::T4 | FactorType::T5))
        .count()
}

/// Factorwise duality: T1 <-> T3, T2 <-> T4, T5 <-> T5.
pub fn dualize_classified(factors: &[FactorType]) -> Vec<FactorType> {
    factors
        .iter()
        .map(|f| match f {
            FactorType::T1 => FactorType::T3,
            FactorType::T3 => FactorType::T1,
            FactorType::T2 => FactorType::T4,
            FactorType::T4 => FactorType::T2,
            FactorType::T5 => FactorType::T5,
        })
        .collect()
}

/// Construct the Real T-dual of a classified pair.
///
/// The input gerbe must be trivially graded (a nontrivial grading is a
/// point-gerbe twist on both sides and belongs in the ledger).  The
/// returned candidate set has two elements exactly when the source Chern
/// class is nonzero and the dual one vanishes.
pub fn tdualize(
    torus: &RealTorus,
    gerbe: &AffineGerbeClass,
) -> Result<DualityDatum, TdualityError> {
    if !gerbe.point_twist().is_trivially_graded() {
        return Err(TdualityError::GradedInput);
    }
    let (source_factors, source_twist) = reduce_mod_point_gerbes(gerbe)?;
    let inv = decompose(torus)?;
    let n = torus.rank();

    // dual torus in the dual basis, with Chern representative = the source
    // gerbe's linear part
    let shape = dual_torus(torus);
    let target_torus = shape.with_chern_vector(gerbe.lambda_part())?;

    // dual gerbe's linear part is the source Chern vector; at
    // classification level it is carried by the resolved factor list
    let target_factors_unsorted = dualize_classified(&source_factors);
    let (target_canonical_torus, target_factors) = canonical_torus(&target_factors_unsorted);

    // the dual gerbe candidates live on the canonical form of the target
    let target_signatures: Vec<(u8, u8)> = target_factors
        .iter()
        .filter_map(|f| match f {
            FactorType::T3 => Some((0u8, 0u8)),
            FactorType::T4 => Some((0u8, 1u8)),
            _ => None,
        })
        .collect();

    let c_nonzero = inv.chern_nonzero;
    let chat_nonzero = !lambda_class_is_zero(torus, gerbe.lambda_part());
    let base = AffineGerbeClass::new(
        target_canonical_torus,
        target_signatures,
        source_twist,
    )?;
    let target_candidates = if c_nonzero && !chat_nonzero {
        vec![
            base.clone(),
            base.tensor_point_gerbe(PointGerbeClass::new(0, 1)),
        ]
    } else {
        vec![base]
    };

    let ledger = ShiftLedger {
        fiber_dim: n,
        minus_summands: Some(minus_summands(&source_factors)),
        source_twist,
    };
    Ok(DualityDatum {
        source_torus: torus.clone(),
        source_gerbe: gerbe.clone(),
        source_factors,
        target_torus,
        target_candidates,
        target_factors,
        delta: IntMatrix::identity(n),
        ledger,
    })
}

/// Whether the class of `lambda` in degree-two cohomology of the dual
/// lattice (with involution -sigma^T) vanishes, i.e. lambda is a norm of
/// that involution.
fn lambda_class_is_zero(torus: &RealTorus, lambda: &[BigInt]) -> bool {
    let n = torus.rank();
    let dual_sigma = torus.sigma().transpose().neg();
    let norm = IntMatrix::identity(n).add(&dual_sigma);
    lattice_contains(&norm, lambda)
}

/// The degree map of the transform for one dual-gerbe candidate, as a
/// constant offset: a class in source-table degree j corresponds to
/// target-table degree j + offset, where both tables are read without their
/// point twists.
///
/// offset = 2 * minus_summands - fiber_dim + shift(target twist) - shift(source twist).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeMap {
    pub offset: u8,
}

impl DegreeMap {
    pub fn apply(&self, j: u8) -> u8 {
        (j + self.offset) % 8
    }
}

pub fn fm_degree_map(datum: &DualityDatum, candidate: usize) -> Result<DegreeMap, TdualityError> {
    let target = datum
        .target_candidates
        .get(candidate)
        .ok_or(TdualityError::NoSuchCandidate(candidate))?;
    let b_minus = datum
        .ledger
        .minus_summands
        .ok_or(TdualityError::LedgerIncomplete)?;
    let n = datum.ledger.fiber_dim;
    let source_shift = degree_shift_of_twist(datum.ledger.source_twist) as i64;
    let target_shift = degree_shift_of_twist(target.point_twist()) as i64;
    let offset = (2 * b_minus as i64 - n as i64 + target_shift - source_shift).rem_euclid(8);
    Ok(DegreeMap {
        offset: offset as u8,
    })
}

impl DualityDatum {
    /// Test-support constructor with an explicit, possibly incomplete
    /// ledger.
    pub fn with_ledger(mut self, ledger: ShiftLedger) -> Self {
        self.ledger = ledger;
        self
    }

    /// Re-dualize a candidate and return the resulting datum; used to check
    /// that dualization is an involution on classified data.
    pub fn dualize_candidate(&self, candidate: usize) -> Result<DualityDatum, TdualityError> {
        let gerbe = self
            .target_candidates
            .get(candidate)
            .ok_or(TdualityError::NoSuchCandidate(candidate))?;
        tdualize(gerbe.torus(), gerbe)
    }
}
