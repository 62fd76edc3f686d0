//! Graded Real gerbes over a point and affine gerbe classes on a Real
//! torus.
//!
//! The isomorphism classes of graded Real gerbes over a point form a cyclic
//! group of order four whose elements are pairs (e, mu) of mod-2 classes
//! with the twisted law `(e1, m1)(e2, m2) = (e1+e2, m1+m2+e1*e2)`.  On a
//! torus the trivially-graded affine classes are computed by
//! [`crate::c2cohomology::affine_h2`]; on a reflected circle a class is
//! pinned down by its restrictions to the two fixed points, which is what
//! separates the factor types T3 and T4.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::c2cohomology::{affine_h2, AffineCoefficient, C2Module};
use crate::torus_class::{canonical_factors, CanonicalFactor, FactorType, RealTorus, TorusError};
use crate::zlinalg::FgAbelianGroup;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GerbeError {
    #[error("a cyclotomic factor lacks its fixed-point signature")]
    UnresolvedSignature,
    #[error("expected {expected} fixed-point signatures, got {got}")]
    SignatureCount { expected: usize, got: usize },
    #[error("linear part is not anti-invariant; attach classes to the canonical form of the torus")]
    LambdaNotAntiInvariant,
    #[error(transparent)]
    Torus(#[from] TorusError),
}

/// Graded Dixmier-Douady class of a gerbe over a point: grading class `e`
/// and ungraded class `mu`, both mod 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PointGerbeClass {
    e: u8,
    mu: u8,
}

impl PointGerbeClass {
    pub fn new(e: u8, mu: u8) -> Self {
        Self {
            e: e % 2,
            mu: mu % 2,
        }
    }

    pub fn trivial() -> Self {
        Self { e: 0, mu: 0 }
    }

    /// The generator: lifting gerbe of the sign line, graded class 1.
    pub fn generator() -> Self {
        Self { e: 1, mu: 0 }
    }

    pub fn e(&self) -> u8 {
        self.e
    }

    pub fn mu(&self) -> u8 {
        self.mu
    }

    pub fn is_trivial(&self) -> bool {
        self.e == 0 && self.mu == 0
    }

    pub fn is_trivially_graded(&self) -> bool {
        self.e == 0
    }
}

/// The twisted group law `(e1+e2, m1+m2+e1*e2)`.
pub fn point_gerbe_mul(g1: PointGerbeClass, g2: PointGerbeClass) -> PointGerbeClass {
    PointGerbeClass::new(g1.e + g2.e, g1.mu + g2.mu + g1.e * g2.e)
}

/// Order of an element in the point-gerbe group.
pub fn point_gerbe_order(g: PointGerbeClass) -> usize {
    let mut acc = g;
    for n in 1..=4 {
        if acc.is_trivial() {
            return n;
        }
        acc = point_gerbe_mul(acc, g);
    }
    unreachable!("every class has order dividing four")
}

/// Exponent p with g equal to the p-th power of the generator.
pub fn generator_exponent(g: PointGerbeClass) -> u8 {
    match (g.e, g.mu) {
        (0, 0) => 0,
        (1, 0) => 1,
        (0, 1) => 2,
        (1, 1) => 3,
        _ => unreachable!(),
    }
}

/// Degree added when the twist by `g` is removed from a KR group: a table
/// twisted by the p-th power of the generator in degree j equals the
/// untwisted table in degree j + shift, with shift = -2p mod 8.
pub fn degree_shift_of_twist(g: PointGerbeClass) -> u8 {
    let p = generator_exponent(g) as i64;
    (-2 * p).rem_euclid(8) as u8
}

/// Fixed-point restriction pair of a gerbe class on a reflected circle.
pub type FixedPointSignature = (u8, u8);

/// Affine gerbe class attached to a classified torus.
///
/// `lambda_part` is a representative of the image of the class under the
/// linear-part map, in the dual basis of the torus lattice; it satisfies
/// `sigma*(lambda) = -lambda`.  Each cyclotomic circle factor carries its
/// pair of fixed-point restrictions; `point_twist` is a global twist by a
/// gerbe pulled back from the point.
#[derive(Clone, Debug)]
pub struct AffineGerbeClass {
    torus: RealTorus,
    lambda_part: Vec<BigInt>,
    point_twist: PointGerbeClass,
    cyclotomic_signatures: Vec<FixedPointSignature>,
}

impl AffineGerbeClass {
    /// Assemble a class on a torus whose factor list is known.  One
    /// signature per cyclotomic (T3/T4-shaped) factor, in factor order.
    pub fn new(
        torus: RealTorus,
        cyclotomic_signatures: Vec<FixedPointSignature>,
        point_twist: PointGerbeClass,
    ) -> Result<Self, GerbeError> {
        let factors = canonical_factors(&torus)?;
        let expected = factors
            .iter()
            .filter(|f| **f == CanonicalFactor::CyclotomicPending)
            .count();
        if cyclotomic_signatures.len() != expected {
            return Err(GerbeError::SignatureCount {
                expected,
                got: cyclotomic_signatures.len(),
            });
        }
        let cyclotomic_signatures: Vec<FixedPointSignature> = cyclotomic_signatures
            .into_iter()
            .map(|(a, b)| (a % 2, b % 2))
            .collect();
        let lambda_part = lambda_from_signatures(&torus, &factors, &cyclotomic_signatures);
        // the linear part must be anti-invariant, which pins the class data
        // to the canonical coordinate frame of the torus
        let s_t = torus.sigma().transpose();
        let moved = s_t.add(&crate::zlinalg::IntMatrix::identity(torus.rank()));
        if !moved.mul_vec(&lambda_part).iter().all(Zero::is_zero) {
            return Err(GerbeError::LambdaNotAntiInvariant);
        }
        Ok(Self {
            torus,
            lambda_part,
            point_twist,
            cyclotomic_signatures,
        })
    }

    /// The trivial class on the given torus.
    pub fn trivial(torus: RealTorus) -> Result<Self, GerbeError> {
        let factors = canonical_factors(&torus)?;
        let b = factors
            .iter()
            .filter(|f| **f == CanonicalFactor::CyclotomicPending)
            .count();
        Self::new(torus, vec![(0, 0); b], PointGerbeClass::trivial())
    }

    pub fn torus(&self) -> &RealTorus {
        &self.torus
    }

    pub fn lambda_part(&self) -> &[BigInt] {
        &self.lambda_part
    }

    pub fn point_twist(&self) -> PointGerbeClass {
        self.point_twist
    }

    pub fn cyclotomic_signatures(&self) -> &[FixedPointSignature] {
        &self.cyclotomic_signatures
    }

    pub fn with_point_twist(mut self, twist: PointGerbeClass) -> Self {
        self.point_twist = twist;
        self
    }

    /// Tensor with a point gerbe: multiplies the global twist.
    pub fn tensor_point_gerbe(mut self, g: PointGerbeClass) -> Self {
        self.point_twist = point_gerbe_mul(self.point_twist, g);
        self
    }
}

/// Linear-part representative supported on the cyclotomic coordinates:
/// coordinate s0 + s1 mod 2 on each cyclotomic circle, zero elsewhere.
/// Valid for block tori; for a torus in a rotated basis the vector is the
/// image of that block vector and is only used through its class.
fn lambda_from_signatures(
    torus: &RealTorus,
    factors: &[CanonicalFactor],
    signatures: &[FixedPointSignature],
) -> Vec<BigInt> {
    let n = torus.rank();
    let mut lambda = vec![BigInt::zero(); n];
    // coordinate layout follows the canonical factor order: rank-one
    // factors first (T2 then T1), then cyclotomic circles, then regular
    // pairs
    let mut pos = 0;
    let mut sig = signatures.iter();
    for f in factors {
        match f {
            CanonicalFactor::T1 | CanonicalFactor::T2 => pos += 1,
            CanonicalFactor::CyclotomicPending => {
                let (s0, s1) = sig.next().expect("validated length");
                if (s0 + s1) % 2 == 1 && pos < n {
                    lambda[pos] = BigInt::one();
                }
                pos += 1;
            }
            CanonicalFactor::T5 => pos += 2,
        }
    }
    lambda
}

/// Case tag of an indecomposable factor in the gerbe-class tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GerbeCase {
    /// trivial circle: classes Z/2 (point gerbes)
    Case1,
    /// half-shift circle: no nontrivial classes
    Case2,
    /// reflected circle: Z/2 + Z/2, detected at the two fixed points
    Case3,
    /// regular two-torus: Z/2 (point gerbes)
    Case4,
}

impl GerbeCase {
    pub fn index(&self) -> u8 {
        match self {
            GerbeCase::Case1 => 1,
            GerbeCase::Case2 => 2,
            GerbeCase::Case3 => 3,
            GerbeCase::Case4 => 4,
        }
    }

    fn model(&self) -> AffineCoefficient {
        let half = num_rational::BigRational::new(BigInt::one(), BigInt::from(2));
        let zero = num_rational::BigRational::zero();
        match self {
            GerbeCase::Case1 => {
                AffineCoefficient::new(C2Module::trivial_z(), vec![zero]).unwrap()
            }
            GerbeCase::Case2 => AffineCoefficient::new(C2Module::trivial_z(), vec![half]).unwrap(),
            GerbeCase::Case3 => AffineCoefficient::new(C2Module::minus_z(), vec![zero]).unwrap(),
            GerbeCase::Case4 => {
                AffineCoefficient::new(C2Module::regular(), vec![zero.clone(), zero]).unwrap()
            }
        }
    }

    /// The group of trivially-graded affine gerbe classes on the model
    /// factor, computed from the affine coefficient module.
    pub fn class_group(&self) -> FgAbelianGroup {
        affine_h2(&self.model()).0
    }
}

pub fn case_of_factor(f: CanonicalFactor) -> GerbeCase {
    match f {
        CanonicalFactor::T1 => GerbeCase::Case1,
        CanonicalFactor::T2 => GerbeCase::Case2,
        CanonicalFactor::CyclotomicPending => GerbeCase::Case3,
        CanonicalFactor::T5 => GerbeCase::Case4,
    }
}

/// Factorwise classification of the trivially-graded affine gerbe classes
/// of a torus: the case tag of each canonical factor and the direct sum of
/// the factor class groups, each computed by `affine_h2` on the model
/// factor.
pub fn classify_affine_gerbes(
    torus: &RealTorus,
) -> Result<(FgAbelianGroup, Vec<GerbeCase>), GerbeError> {
    let factors = canonical_factors(torus)?;
    let cases: Vec<GerbeCase> = factors.iter().map(|f| case_of_factor(*f)).collect();
    let mut group = FgAbelianGroup::trivial();
    for c in &cases {
        group = group.direct_sum(&c.class_group());
    }
    Ok((group, cases))
}

/// Resolve the pending cyclotomic factors of a class into T3 or T4 and
/// extract the residual point-gerbe twist.
///
/// Canonical representatives: signature (0,1) for T4 (trivial restriction
/// at the first fixed point) and (0,0) for T3.  A signature whose first bit
/// is set differs from the canonical one by the ungraded point gerbe, which
/// moves into the residual twist.
pub fn reduce_mod_point_gerbes(
    class: &AffineGerbeClass,
) -> Result<(Vec<FactorType>, PointGerbeClass), GerbeError> {
    let factors = canonical_factors(class.torus())?;
    let expected = factors
        .iter()
        .filter(|f| **f == CanonicalFactor::CyclotomicPending)
        .count();
    if class.cyclotomic_signatures().len() != expected {
        return Err(GerbeError::UnresolvedSignature);
    }
    let mut residual = class.point_twist();
    let mut resolved = Vec::with_capacity(factors.len());
    let mut sig = class.cyclotomic_signatures().iter();
    for f in &factors {
        match f {
            CanonicalFactor::T1 => resolved.push(FactorType::T1),
            CanonicalFactor::T2 => resolved.push(FactorType::T2),
            CanonicalFactor::T5 => resolved.push(FactorType::T5),
            CanonicalFactor::CyclotomicPending => {
                let &(s0, s1) = sig.next().expect("validated length");
                if s0 == s1 {
                    resolved.push(FactorType::T3);
                } else {
                    resolved.push(FactorType::T4);
                }
                if s0 == 1 {
                    residual = point_gerbe_mul(residual, PointGerbeClass::new(0, 1));
                }
            }
        }
    }
    Ok((resolved, residual))
}

/// Fixed-point signature of a factor-level class (lambda, u) on the
/// reflected circle: restriction at x0 = 0 is the class of u, restriction
/// at x1 = 1/2 is the class of lambda/2 + u.  Both live in the two-element
/// group {0, 1/2} of the circle.
pub fn signature_of_circle_class(
    lambda: &BigInt,
    u: &num_rational::BigRational,
) -> FixedPointSignature {
    fn half_class(x: &num_rational::BigRational) -> u8 {
        let frac = x - num_rational::BigRational::from(x.floor().to_integer());
        assert!(
            frac.is_zero() || *frac.denom() == BigInt::from(2),
            "restriction of a class must be two-torsion"
        );
        u8::from(!frac.is_zero())
    }
    let at_x1 = num_rational::BigRational::new(lambda.clone(), BigInt::from(2)) + u;
    (half_class(u), half_class(&at_x1))
}
