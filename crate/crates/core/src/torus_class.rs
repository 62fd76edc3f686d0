//! Classification of a Real affine torus over a point.
//!
//! A torus V/L with affine involution `x -> sigma0(x) + t` is determined up
//! to equivariant isomorphism by the involution lattice (L, sigma0) and the
//! class of `t + sigma0(t)` in degree-two cohomology.  The lattice splits
//! into trivial, cyclotomic and regular summands; this module computes the
//! multiplicities (a, b, r) and the Chern flag from cohomology ranks, and
//! normalizes the result to a multiset of canonical factor types.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::c2cohomology::{cohomology, C2Module};
use crate::zlinalg::{kernel_basis, lattice_contains, IntMatrix};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TorusError {
    #[error("linear part does not square to the identity")]
    NotAnInvolution,
    #[error("t + sigma(t) is not an integral vector")]
    TranslationNotCompatible,
    #[error("translation lift has length {got}, expected {expected}")]
    TranslationLength { expected: usize, got: usize },
    #[error("torus lattice must be free with untwisted involution")]
    LatticeNotFree,
}

/// The five canonical factor types of an indecomposable pair
/// (torus, gerbe class) modulo point gerbes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FactorType {
    /// Trivial circle: sigma(x) = x, trivial gerbe.
    T1,
    /// Half-shift circle: sigma(x) = x + 1/2.
    T2,
    /// Reflected circle with matching fixed-point restrictions.
    T3,
    /// Reflected circle whose gerbe restricts differently to the two fixed
    /// points.  Never produced from torus data alone.
    T4,
    /// Regular two-torus: sigma(x, y) = (y, x).
    T5,
}

impl FactorType {
    pub fn as_str(&self) -> &'static str {
        match self {
            FactorType::T1 => "T1",
            FactorType::T2 => "T2",
            FactorType::T3 => "T3",
            FactorType::T4 => "T4",
            FactorType::T5 => "T5",
        }
    }

    /// Lattice rank contributed by the factor.
    pub fn rank(&self) -> usize {
        match self {
            FactorType::T5 => 2,
            _ => 1,
        }
    }

    fn sort_key(&self) -> u8 {
        match self {
            FactorType::T2 => 0,
            FactorType::T1 => 1,
            FactorType::T3 => 2,
            FactorType::T4 => 3,
            FactorType::T5 => 4,
        }
    }
}

/// Factor of a bare torus: cyclotomic circles stay pending until gerbe data
/// resolves them to T3 or T4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CanonicalFactor {
    T1,
    T2,
    /// Reflected circle awaiting its gerbe restrictions.
    CyclotomicPending,
    T5,
}

impl CanonicalFactor {
    pub fn as_str(&self) -> &'static str {
        match self {
            CanonicalFactor::T1 => "T1",
            CanonicalFactor::T2 => "T2",
            CanonicalFactor::CyclotomicPending => "T3-pending",
            CanonicalFactor::T5 => "T5",
        }
    }
}

/// Real affine torus over a point: free lattice with involution plus a
/// rational lift of the translation part.
#[derive(Clone, Debug)]
pub struct RealTorus {
    lattice: C2Module,
    translation_lift: Vec<BigRational>,
}

/// Multiplicities of the indecomposable lattice summands and the Chern flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecompositionInvariants {
    /// trivial summands
    pub a: usize,
    /// cyclotomic summands
    pub b: usize,
    /// regular summands
    pub r: usize,
    pub chern_nonzero: bool,
}

impl RealTorus {
    pub fn new(lattice: C2Module, translation_lift: Vec<BigRational>) -> Result<Self, TorusError> {
        if lattice.relations().cols() != 0 || lattice.sign_twist() {
            return Err(TorusError::LatticeNotFree);
        }
        let n = lattice.generators();
        if translation_lift.len() != n {
            return Err(TorusError::TranslationLength {
                expected: n,
                got: translation_lift.len(),
            });
        }
        let t = Self {
            lattice,
            translation_lift,
        };
        if !t.sigma().mul(t.sigma()).is_identity() {
            return Err(TorusError::NotAnInvolution);
        }
        if t.chern_vector().is_none() {
            return Err(TorusError::TranslationNotCompatible);
        }
        Ok(t)
    }

    /// Torus with zero translation part.
    pub fn linear(lattice: C2Module) -> Result<Self, TorusError> {
        let n = lattice.generators();
        Self::new(lattice, vec![BigRational::zero(); n])
    }

    /// Build directly from the matrix of the linear part.
    pub fn from_sigma(
        sigma: IntMatrix,
        translation_lift: Vec<BigRational>,
    ) -> Result<Self, TorusError> {
        let lattice = C2Module::free(sigma).map_err(|_| TorusError::NotAnInvolution)?;
        Self::new(lattice, translation_lift)
    }

    pub fn rank(&self) -> usize {
        self.lattice.generators()
    }

    pub fn lattice(&self) -> &C2Module {
        &self.lattice
    }

    pub fn sigma(&self) -> &IntMatrix {
        self.lattice.sigma()
    }

    pub fn translation_lift(&self) -> &[BigRational] {
        &self.translation_lift
    }

    /// Integral vector t + sigma0(t) representing the Chern class.
    pub fn chern_vector(&self) -> Option<Vec<BigInt>> {
        let s = self.sigma();
        let n = self.rank();
        let mut out = Vec::with_capacity(n);
        for row in 0..n {
            let mut acc = self.translation_lift[row].clone();
            for col in 0..n {
                acc += BigRational::from(s.get(row, col).clone()) * &self.translation_lift[col];
            }
            if !acc.is_integer() {
                return None;
            }
            out.push(acc.to_integer());
        }
        Some(out)
    }
}

/// Decomposition invariants from cohomology ranks:
/// a = dim H^2(L), b = dim H^1(L), r = rank of the fixed sublattice minus a.
pub fn decompose(torus: &RealTorus) -> Result<DecompositionInvariants, TorusError> {
    let lattice = torus.lattice();
    let n = torus.rank();
    let a = cohomology(lattice, 2).elementary_two_rank();
    let b = cohomology(lattice, 1).elementary_two_rank();
    let s = torus.sigma();
    let fixed_rank = kernel_basis(&s.sub(&IntMatrix::identity(n))).cols();
    let r = fixed_rank - a;
    assert_eq!(a + b + 2 * r, n, "rank bookkeeping must close");

    let v = torus
        .chern_vector()
        .ok_or(TorusError::TranslationNotCompatible)?;
    // the class of v in H^2 = ker(1-sigma)/im(1+sigma) vanishes iff v is a
    // norm
    let norm = IntMatrix::identity(n).add(s);
    let chern_nonzero = !lattice_contains(&norm, &v);
    if chern_nonzero {
        debug_assert!(a >= 1);
    }
    Ok(DecompositionInvariants {
        a,
        b,
        r,
        chern_nonzero,
    })
}

/// Canonical factor multiset.  A nonzero Chern class is normalized onto a
/// single distinguished half-shift circle; cyclotomic circles stay pending.
pub fn canonical_factors(torus: &RealTorus) -> Result<Vec<CanonicalFactor>, TorusError> {
    Ok(factors_from_invariants(&decompose(torus)?))
}

pub fn factors_from_invariants(inv: &DecompositionInvariants) -> Vec<CanonicalFactor> {
    let mut factors = Vec::with_capacity(inv.a + inv.b + inv.r);
    if inv.chern_nonzero {
        factors.push(CanonicalFactor::T2);
        factors.extend(std::iter::repeat_n(CanonicalFactor::T1, inv.a - 1));
    } else {
        factors.extend(std::iter::repeat_n(CanonicalFactor::T1, inv.a));
    }
    factors.extend(std::iter::repeat_n(CanonicalFactor::CyclotomicPending, inv.b));
    factors.extend(std::iter::repeat_n(CanonicalFactor::T5, inv.r));
    factors
}

/// Dual torus shape: the dual lattice with the dual monodromy `-sigma0^T`.
/// The Chern slot is left open; T-dualization fills it from the gerbe.
#[derive(Clone, Debug)]
pub struct DualTorusShape {
    lattice: C2Module,
}

impl DualTorusShape {
    pub fn lattice(&self) -> &C2Module {
        &self.lattice
    }

    /// Complete the shape with a Chern representative: an integral vector c
    /// fixed by the dual involution; the translation lift is c/2.
    pub fn with_chern_vector(&self, c: &[BigInt]) -> Result<RealTorus, TorusError> {
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let lift: Vec<BigRational> = c
            .iter()
            .map(|x| BigRational::from(x.clone()) * &half)
            .collect();
        RealTorus::new(self.lattice.clone(), lift)
    }
}

/// Dual lattice with involution `-sigma0^T`, in the dual basis.
pub fn dual_torus(torus: &RealTorus) -> DualTorusShape {
    let dual_sigma = torus.sigma().transpose().neg();
    DualTorusShape {
        lattice: C2Module::free(dual_sigma).expect("dual of an involution is an involution"),
    }
}

/// Canonical block torus for a list of factor types, together with the
/// normalized sorted factor list.  Factors are ordered T2, T1, T3, T4, T5;
/// several half-shift circles fold into a single T2 (their Chern classes
/// add up to one nonzero class in the normal form).
pub fn canonical_torus(factors: &[FactorType]) -> (RealTorus, Vec<FactorType>) {
    let mut sorted: Vec<FactorType> = factors.to_vec();
    sorted.sort_by_key(FactorType::sort_key);
    let t2_count = sorted.iter().filter(|f| **f == FactorType::T2).count();
    if t2_count > 1 {
        for f in sorted.iter_mut().skip(1).take(t2_count - 1) {
            *f = FactorType::T1;
        }
        sorted.sort_by_key(FactorType::sort_key);
    }

    let n: usize = sorted.iter().map(FactorType::rank).sum();
    let mut sigma = IntMatrix::zeros(n, n);
    let mut lift = vec![BigRational::zero(); n];
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let mut pos = 0;
    for f in &sorted {
        match f {
            FactorType::T1 => {
                sigma.set(pos, pos, BigInt::one());
            }
            FactorType::T2 => {
                sigma.set(pos, pos, BigInt::one());
                lift[pos] = half.clone();
            }
            FactorType::T3 | FactorType::T4 => {
                sigma.set(pos, pos, BigInt::from(-1));
            }
            FactorType::T5 => {
                sigma.set(pos, pos + 1, BigInt::one());
                sigma.set(pos + 1, pos, BigInt::one());
            }
        }
        pos += f.rank();
    }
    let lattice = C2Module::free(sigma).expect("block matrix is an involution");
    let torus = RealTorus::new(lattice, lift).expect("canonical data is valid");
    (torus, sorted)
}
