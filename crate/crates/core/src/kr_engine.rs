//! The coefficient ring of Real K-theory over a point, the KR-group tables
//! of the five indecomposable factor types, product splitting along free
//! circle factors, and degree-wise verification that the transform attached
//! to a dual pair is a group isomorphism.
//!
//! Degrees are stored mod 8 throughout.  The coefficient ring is
//! Z[eta, h] / (2 eta, eta^3, eta h, h^2 - 4) with deg(eta) = -1 and
//! deg(h) = 4, so the group in degree j is Z for j = 0, 4, Z/2 for
//! j = 6, 7, and zero otherwise.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::gerbe_class::{degree_shift_of_twist, PointGerbeClass};
use crate::tduality::{fm_degree_map, DualityDatum, TdualityError};
use crate::torus_class::FactorType;
use crate::zlinalg::FgAbelianGroup;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KrError {
    #[error("KR groups of a product with {0} non-free factors are not tabulated")]
    UnsupportedProduct(usize),
    #[error(transparent)]
    Tduality(#[from] TdualityError),
}

/// Element of the coefficient ring, written on the monomial basis
/// {1, eta, eta^2, h}.  The eta coefficients are stored mod 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RElement {
    pub unit: BigInt,
    pub eta: u8,
    pub eta2: u8,
    pub h: BigInt,
}

impl RElement {
    pub fn new(unit: BigInt, eta: u8, eta2: u8, h: BigInt) -> Self {
        Self {
            unit,
            eta: eta % 2,
            eta2: eta2 % 2,
            h,
        }
    }

    pub fn zero() -> Self {
        Self::new(BigInt::zero(), 0, 0, BigInt::zero())
    }

    pub fn one() -> Self {
        Self::new(BigInt::one(), 0, 0, BigInt::zero())
    }

    pub fn eta() -> Self {
        Self::new(BigInt::zero(), 1, 0, BigInt::zero())
    }

    pub fn eta2() -> Self {
        Self::new(BigInt::zero(), 0, 1, BigInt::zero())
    }

    pub fn h() -> Self {
        Self::new(BigInt::zero(), 0, 0, BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.unit.is_zero() && self.eta == 0 && self.eta2 == 0 && self.h.is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::new(
            &self.unit + &rhs.unit,
            self.eta + rhs.eta,
            self.eta2 + rhs.eta2,
            &self.h + &rhs.h,
        )
    }

    /// Degree of a monomial element (at most one nonzero coefficient), mod 8.
    pub fn monomial_degree(&self) -> Option<u8> {
        let nonzero = [
            (!self.unit.is_zero(), 0u8),
            (self.eta != 0, 7),
            (self.eta2 != 0, 6),
            (!self.h.is_zero(), 4),
        ];
        let mut deg = None;
        for (set, d) in nonzero {
            if set {
                if deg.is_some() {
                    return None;
                }
                deg = Some(d);
            }
        }
        deg
    }
}

/// Product in the coefficient ring, reduced by the relations
/// 2 eta = 0, eta^3 = 0, eta h = 0, h^2 = 4.
pub fn r_mul(x: &RElement, y: &RElement) -> RElement {
    let two = BigInt::from(2);
    let unit = &x.unit * &y.unit + BigInt::from(4) * &x.h * &y.h;
    let eta = (&x.unit * y.eta + &y.unit * x.eta).mod_floor(&two);
    let eta2 =
        (&x.unit * y.eta2 + &y.unit * x.eta2 + BigInt::from(x.eta * y.eta)).mod_floor(&two);
    let h = &x.unit * &y.h + &y.unit * &x.h;
    RElement::new(unit, u8::from(!eta.is_zero()), u8::from(!eta2.is_zero()), h)
}

/// Coefficient group in degree j mod 8.
pub fn kr_point(j: i64) -> FgAbelianGroup {
    match j.rem_euclid(8) {
        0 | 4 => FgAbelianGroup::free(1),
        6 | 7 => FgAbelianGroup::cyclic(2),
        _ => FgAbelianGroup::trivial(),
    }
}

/// Z/8-graded finitely generated abelian group.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedGroupZ8 {
    groups: [FgAbelianGroup; 8],
}

impl GradedGroupZ8 {
    pub fn new(groups: [FgAbelianGroup; 8]) -> Self {
        Self { groups }
    }

    pub fn trivial() -> Self {
        Self::new(std::array::from_fn(|_| FgAbelianGroup::trivial()))
    }

    pub fn point() -> Self {
        Self::new(std::array::from_fn(|j| kr_point(j as i64)))
    }

    pub fn at(&self, j: i64) -> &FgAbelianGroup {
        &self.groups[j.rem_euclid(8) as usize]
    }

    /// Total free rank over the eight degrees.
    pub fn total_free_rank(&self) -> usize {
        self.groups.iter().map(|g| g.free_rank()).sum()
    }
}

impl fmt::Debug for GradedGroupZ8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut map = f.debug_map();
        for (j, g) in self.groups.iter().enumerate() {
            map.entry(&j, &format!("{g}"));
        }
        map.finish()
    }
}

/// Degree shift: `(shift(G, s))[j] = G[j - s]`.
pub fn shift(g: &GradedGroupZ8, s: i64) -> GradedGroupZ8 {
    GradedGroupZ8::new(std::array::from_fn(|j| g.at(j as i64 - s).clone()))
}

/// KR table of one factor type: the graded groups together with generator
/// names and degrees.  For the free types (T1, T3) the generators are a
/// module basis over the coefficient ring and the graded groups expand as
/// R^j + R^{j -/+ 1}; for the other types they are group generators per
/// degree.
#[derive(Clone, Debug)]
pub struct KrTable {
    pub type_tag: Option<FactorType>,
    pub graded: GradedGroupZ8,
    pub generators: Vec<(&'static str, u8)>,
    pub free_over_r: bool,
}

/// The table of the point (empty factor list).
pub fn kr_table_point() -> KrTable {
    KrTable {
        type_tag: None,
        graded: GradedGroupZ8::point(),
        generators: vec![("1", 0)],
        free_over_r: true,
    }
}

pub fn kr_table(t: FactorType) -> KrTable {
    match t {
        FactorType::T1 => KrTable {
            type_tag: Some(t),
            graded: GradedGroupZ8::new(std::array::from_fn(|j| {
                kr_point(j as i64).direct_sum(&kr_point(j as i64 - 1))
            })),
            generators: vec![("1", 0), ("tau", 1)],
            free_over_r: true,
        },
        FactorType::T3 => KrTable {
            type_tag: Some(t),
            graded: GradedGroupZ8::new(std::array::from_fn(|j| {
                kr_point(j as i64).direct_sum(&kr_point(j as i64 + 1))
            })),
            generators: vec![("1", 0), ("tau-", 7)],
            free_over_r: true,
        },
        FactorType::T2 => KrTable {
            type_tag: Some(t),
            graded: GradedGroupZ8::new([
                FgAbelianGroup::free(1),    // 1
                FgAbelianGroup::free(1),    // omega
                FgAbelianGroup::trivial(),
                FgAbelianGroup::cyclic(2),  // eta q
                FgAbelianGroup::free(1),    // q
                FgAbelianGroup::free(1),    // q omega
                FgAbelianGroup::trivial(),
                FgAbelianGroup::cyclic(2),  // eta
            ]),
            generators: vec![
                ("1", 0),
                ("omega", 1),
                ("eta*q", 3),
                ("q", 4),
                ("q*omega", 5),
                ("eta", 7),
            ],
            free_over_r: false,
        },
        FactorType::T4 => KrTable {
            type_tag: Some(t),
            graded: GradedGroupZ8::new([
                FgAbelianGroup::free(1),    // chi0
                FgAbelianGroup::trivial(),
                FgAbelianGroup::cyclic(2),  // eta chi3
                FgAbelianGroup::free(1),    // chi3
                FgAbelianGroup::free(1),    // chi4
                FgAbelianGroup::trivial(),
                FgAbelianGroup::cyclic(2),  // eta chi7
                FgAbelianGroup::free(1),    // chi7
            ]),
            generators: vec![
                ("chi0", 0),
                ("eta*chi3", 2),
                ("chi3", 3),
                ("chi4", 4),
                ("eta*chi7", 6),
                ("chi7", 7),
            ],
            free_over_r: false,
        },
        FactorType::T5 => KrTable {
            type_tag: Some(t),
            graded: GradedGroupZ8::new([
                FgAbelianGroup::free(2),   // 1, tau
                FgAbelianGroup::free(1),   // mu1
                FgAbelianGroup::trivial(),
                FgAbelianGroup::free(1),   // mu3
                FgAbelianGroup::free(2),   // h, h tau
                FgAbelianGroup::free(1),   // mu5
                FgAbelianGroup::cyclic(2).direct_sum(&FgAbelianGroup::cyclic(2)), // eta^2, eta^2 tau
                FgAbelianGroup::cyclic(2)
                    .direct_sum(&FgAbelianGroup::cyclic(2))
                    .direct_sum(&FgAbelianGroup::free(1)), // eta, eta tau, mu7
            ]),
            generators: vec![
                ("1", 0),
                ("tau", 0),
                ("mu1", 1),
                ("mu3", 3),
                ("h", 4),
                ("h*tau", 4),
                ("mu5", 5),
                ("eta^2", 6),
                ("eta^2*tau", 6),
                ("eta", 7),
                ("eta*tau", 7),
                ("mu7", 7),
            ],
            free_over_r: false,
        },
    }
}

/// Declared-unsupported product: the factor tables are returned so a caller
/// can still inspect the pieces.
#[derive(Clone, Debug)]
pub struct PartialResult {
    pub factor_tables: Vec<KrTable>,
    pub twist: PointGerbeClass,
    pub non_free_count: usize,
}

#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum KrTorusResult {
    Full(GradedGroupZ8),
    Partial(PartialResult),
}

impl KrTorusResult {
    pub fn full(self) -> Result<GradedGroupZ8, KrError> {
        match self {
            KrTorusResult::Full(g) => Ok(g),
            KrTorusResult::Partial(p) => Err(KrError::UnsupportedProduct(p.non_free_count)),
        }
    }
}

/// Graded KR groups of a product of factor types twisted by a point gerbe.
///
/// Free circle factors split off one degree at a time: a trivial circle
/// contributes G[j] + G[j-1], a reflected circle G[j] + G[j+1].  Products
/// with two or more non-free factors are not tabulated and come back as a
/// [`PartialResult`].
pub fn kr_torus(factors: &[FactorType], twist: PointGerbeClass) -> KrTorusResult {
    let non_free: Vec<FactorType> = factors
        .iter()
        .copied()
        .filter(|f| !kr_table(*f).free_over_r)
        .collect();
    if non_free.len() >= 2 {
        return KrTorusResult::Partial(PartialResult {
            factor_tables: factors.iter().map(|f| kr_table(*f)).collect(),
            twist,
            non_free_count: non_free.len(),
        });
    }
    let mut graded = match non_free.first() {
        Some(f) => kr_table(*f).graded,
        None => GradedGroupZ8::point(),
    };
    for f in factors {
        match f {
            FactorType::T1 => {
                graded = GradedGroupZ8::new(std::array::from_fn(|j| {
                    graded.at(j as i64).direct_sum(graded.at(j as i64 - 1))
                }));
            }
            FactorType::T3 => {
                graded = GradedGroupZ8::new(std::array::from_fn(|j| {
                    graded.at(j as i64).direct_sum(graded.at(j as i64 + 1))
                }));
            }
            _ => {}
        }
    }
    // twisted table in degree j is the untwisted table in degree j + shift
    let s = degree_shift_of_twist(twist) as i64;
    KrTorusResult::Full(GradedGroupZ8::new(std::array::from_fn(|j| {
        graded.at(j as i64 + s).clone()
    })))
}

/// One row of a verification report: the source group in table degree j
/// against the target group in table degree j' = j + offset.
#[derive(Clone, Debug)]
pub struct DegreeRow {
    pub source_degree: u8,
    pub source: FgAbelianGroup,
    pub target_degree: u8,
    pub target: FgAbelianGroup,
    pub equal: bool,
}

/// Verification of one dual-gerbe candidate.
#[derive(Clone, Debug)]
pub struct CandidateReport {
    pub candidate: usize,
    pub degree_map_offset: u8,
    pub rows: Vec<DegreeRow>,
    pub free_rank_preserved: bool,
    pub pass: bool,
}

/// Degree-wise comparison of the two sides of a dual pair, run for every
/// dual-gerbe candidate.
#[derive(Clone, Debug)]
pub struct FmReport {
    pub candidates: Vec<CandidateReport>,
    pub pass: bool,
}

/// Compare the twisted KR groups of the two sides of a dual pair in all
/// eight degrees, for every dual-gerbe candidate.
///
/// The source table is read without its point twists; the degree map
/// accounts for them along with the lifting-gerbe shift of the vertical
/// bundle and the fiber dimension.
pub fn fm_verify(datum: &DualityDatum) -> Result<FmReport, KrError> {
    let source = kr_torus(datum.source_factors(), PointGerbeClass::trivial()).full()?;
    let target = kr_torus(datum.target_factors(), PointGerbeClass::trivial()).full()?;

    let mut candidates = Vec::new();
    for k in 0..datum.target_candidates().len() {
        let map = fm_degree_map(datum, k)?;
        let mut rows = Vec::with_capacity(8);
        let mut pass = true;
        for j in 0..8u8 {
            let jp = map.apply(j);
            let s = source.at(j as i64).clone();
            let t = target.at(jp as i64).clone();
            let equal = s == t;
            pass &= equal;
            rows.push(DegreeRow {
                source_degree: j,
                source: s,
                target_degree: jp,
                target: t,
                equal,
            });
        }
        let free_rank_preserved = source.total_free_rank() == target.total_free_rank();
        pass &= free_rank_preserved;
        candidates.push(CandidateReport {
            candidate: k,
            degree_map_offset: map.offset,
            rows,
            free_rank_preserved,
            pass,
        });
    }
    let pass = candidates.iter().all(|c| c.pass);
    Ok(FmReport { candidates, pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gerbe_class::AffineGerbeClass;
    use crate::tduality::tdualize;
    use crate::torus_class::canonical_torus;
    use proptest::prelude::*;

    fn z() -> FgAbelianGroup {
        FgAbelianGroup::free(1)
    }

    fn z2() -> FgAbelianGroup {
        FgAbelianGroup::cyclic(2)
    }

    #[test]
    fn ring_relations() {
        let four = RElement::new(BigInt::from(4), 0, 0, BigInt::zero());
        assert_eq!(r_mul(&RElement::h(), &RElement::h()), four);
        assert!(r_mul(&RElement::eta(), &RElement::h()).is_zero());
        let eta2 = r_mul(&RElement::eta(), &RElement::eta());
        assert_eq!(eta2, RElement::eta2());
        assert!(r_mul(&eta2, &RElement::eta()).is_zero());
        let two_eta = r_mul(
            &RElement::new(BigInt::from(2), 0, 0, BigInt::zero()),
            &RElement::eta(),
        );
        assert!(two_eta.is_zero());
    }

    #[test]
    fn point_groups_match_monomials() {
        // each degree's group is generated by the monomials of that degree
        let monomials = [
            (RElement::one(), 0u8, false),
            (RElement::h(), 4, false),
            (RElement::eta(), 7, true),
            (RElement::eta2(), 6, true),
        ];
        for j in 0..8i64 {
            let g = kr_point(j);
            let expected: Vec<&(RElement, u8, bool)> = monomials
                .iter()
                .filter(|(_, d, _)| *d as i64 == j)
                .collect();
            match expected.as_slice() {
                [] => assert!(g.is_trivial(), "degree {j}"),
                [(_, _, torsion)] => {
                    if *torsion {
                        assert_eq!(g, z2(), "degree {j}");
                    } else {
                        assert_eq!(g, z(), "degree {j}");
                    }
                }
                _ => unreachable!(),
            }
        }
    }

    fn arb_relement() -> impl Strategy<Value = RElement> {
        (-9i64..=9, 0u8..=1, 0u8..=1, -9i64..=9).prop_map(|(a, e, e2, h)| {
            RElement::new(BigInt::from(a), e, e2, BigInt::from(h))
        })
    }

    proptest! {
        #[test]
        fn ring_is_commutative_and_associative(
            x in arb_relement(),
            y in arb_relement(),
            z in arb_relement(),
        ) {
            prop_assert_eq!(r_mul(&x, &y), r_mul(&y, &x));
            prop_assert_eq!(r_mul(&r_mul(&x, &y), &z), r_mul(&x, &r_mul(&y, &z)));
        }

        #[test]
        fn ring_distributes(x in arb_relement(), y in arb_relement(), z in arb_relement()) {
            prop_assert_eq!(
                r_mul(&x, &y.add(&z)),
                r_mul(&x, &y).add(&r_mul(&x, &z))
            );
        }
    }

    #[test]
    fn monomial_degrees_add() {
        let monos = [RElement::one(), RElement::eta(), RElement::eta2(), RElement::h()];
        for x in &monos {
            for y in &monos {
                let p = r_mul(x, y);
                if p.is_zero() {
                    continue;
                }
                // h*h = 4 is not monomial-with-unit-coefficient 1 but still degree 0
                let dx = x.monomial_degree().unwrap() as i64;
                let dy = y.monomial_degree().unwrap() as i64;
                let dp = p.monomial_degree().unwrap() as i64;
                assert_eq!(dp, (dx + dy).rem_euclid(8));
            }
        }
    }

    #[test]
    fn free_tables_expand_from_point() {
        let t1 = kr_table(FactorType::T1);
        let t3 = kr_table(FactorType::T3);
        for j in 0..8i64 {
            assert_eq!(
                t1.graded.at(j),
                &kr_point(j).direct_sum(&kr_point(j - 1)),
                "T1 degree {j}"
            );
            assert_eq!(
                t3.graded.at(j),
                &kr_point(j).direct_sum(&kr_point(j + 1)),
                "T3 degree {j}"
            );
        }
        assert!(t1.free_over_r && t3.free_over_r);
        assert!(!kr_table(FactorType::T2).free_over_r);
        assert!(!kr_table(FactorType::T4).free_over_r);
        assert!(!kr_table(FactorType::T5).free_over_r);
    }

    #[test]
    fn table_spot_values() {
        assert_eq!(kr_table(FactorType::T2).graded.at(3), &z2());
        assert_eq!(kr_table(FactorType::T4).graded.at(2), &z2());
        assert_eq!(kr_table(FactorType::T4).graded.at(3), &z());
        assert_eq!(
            kr_table(FactorType::T5).graded.at(7),
            &z2().direct_sum(&z2()).direct_sum(&z())
        );
        assert_eq!(kr_table(FactorType::T1).graded.at(0), &z().direct_sum(&z2()));
    }

    #[test]
    fn tables_are_consistent_with_generators() {
        // spot-assembly: each degree's torsion count and free rank agree
        // with the listed generators (eta-multiples are the torsion ones)
        for t in [FactorType::T2, FactorType::T4, FactorType::T5] {
            let table = kr_table(t);
            for j in 0..8u8 {
                let gens: Vec<_> = table
                    .generators
                    .iter()
                    .filter(|(_, d)| *d == j)
                    .collect();
                let g = table.graded.at(j as i64);
                let torsion = gens
                    .iter()
                    .filter(|(n, _)| n.starts_with("eta"))
                    .count();
                let free = gens.len() - torsion;
                assert_eq!(g.free_rank(), free, "{t:?} degree {j}");
                assert_eq!(g.torsion().len(), torsion, "{t:?} degree {j}");
            }
        }
    }

    #[test]
    fn t4_table_is_four_periodic() {
        let t4 = kr_table(FactorType::T4);
        for j in 0..8i64 {
            assert_eq!(t4.graded.at(j), t4.graded.at(j + 4));
        }
    }

    #[test]
    fn t2_groups_are_four_periodic() {
        let t2 = kr_table(FactorType::T2);
        for j in 0..8i64 {
            assert_eq!(t2.graded.at(j), t2.graded.at(j + 4));
        }
    }

    #[test]
    fn shift_behaviour() {
        let g = GradedGroupZ8::point();
        assert_eq!(shift(&g, 0), g);
        assert_eq!(shift(&g, 4).at(0), &z());
        for s in 0..8i64 {
            for t in 0..8i64 {
                assert_eq!(shift(&shift(&g, s), t), shift(&g, s + t));
            }
        }
    }

    #[test]
    fn two_trivial_circles() {
        // independent expansion: R^j + 2 R^{j-1} + R^{j-2}
        let got = kr_torus(&[FactorType::T1, FactorType::T1], PointGerbeClass::trivial())
            .full()
            .unwrap();
        for j in 0..8i64 {
            let expected = kr_point(j)
                .direct_sum(&kr_point(j - 1))
                .direct_sum(&kr_point(j - 1))
                .direct_sum(&kr_point(j - 2));
            assert_eq!(got.at(j), &expected, "degree {j}");
        }
        assert_eq!(got.at(0), &z().direct_sum(&z2()).direct_sum(&z2()).direct_sum(&z2()));
    }

    #[test]
    fn twisted_regular_torus() {
        let got = kr_torus(&[FactorType::T5], PointGerbeClass::new(1, 0))
            .full()
            .unwrap();
        // shift of the generator twist: the twisted group in degree 2 is the
        // untwisted one in degree 0, which equals the one in degree 4
        assert_eq!(got.at(2), &FgAbelianGroup::free(2));
        assert_eq!(got.at(2), kr_table(FactorType::T5).graded.at(4));
    }

    #[test]
    fn unsupported_products_report_partial() {
        let r = kr_torus(&[FactorType::T2, FactorType::T4], PointGerbeClass::trivial());
        match r {
            KrTorusResult::Partial(p) => {
                assert_eq!(p.non_free_count, 2);
                assert_eq!(p.factor_tables.len(), 2);
            }
            KrTorusResult::Full(_) => panic!("expected a partial result"),
        }
        assert!(matches!(
            kr_torus(&[FactorType::T5, FactorType::T5], PointGerbeClass::trivial()),
            KrTorusResult::Partial(_)
        ));
    }

    fn verify(factors: &[FactorType]) -> FmReport {
        let (torus, sorted) = canonical_torus(factors);
        let sigs: Vec<(u8, u8)> = sorted
            .iter()
            .filter_map(|f| match f {
                FactorType::T3 => Some((0, 0)),
                FactorType::T4 => Some((0, 1)),
                _ => None,
            })
            .collect();
        let gerbe = AffineGerbeClass::new(torus.clone(), sigs, PointGerbeClass::trivial()).unwrap();
        let datum = tdualize(&torus, &gerbe).unwrap();
        fm_verify(&datum).unwrap()
    }

    #[test]
    fn indecomposable_pairs_verify() {
        for f in [
            FactorType::T1,
            FactorType::T2,
            FactorType::T3,
            FactorType::T4,
            FactorType::T5,
        ] {
            let report = verify(&[f]);
            assert!(report.pass, "factor {f:?}: {report:?}");
            for c in &report.candidates {
                assert!(c.free_rank_preserved);
                assert!(c.rows.iter().all(|r| r.equal));
            }
        }
        // the half-shift circle has two dual candidates, both must pass
        assert_eq!(verify(&[FactorType::T2]).candidates.len(), 2);
    }

    #[test]
    fn mixed_two_factor_pairs_verify() {
        let supported = [
            [FactorType::T1, FactorType::T1],
            [FactorType::T1, FactorType::T3],
            [FactorType::T3, FactorType::T3],
            [FactorType::T1, FactorType::T2],
            [FactorType::T3, FactorType::T4],
            [FactorType::T1, FactorType::T5],
            [FactorType::T3, FactorType::T5],
            [FactorType::T2, FactorType::T3],
            [FactorType::T4, FactorType::T1],
        ];
        for pair in supported {
            let report = verify(&pair);
            assert!(report.pass, "pair {pair:?}: {report:?}");
        }
    }

    #[test]
    fn unsupported_pair_is_an_error() {
        let (torus, _) = canonical_torus(&[FactorType::T5, FactorType::T5]);
        let gerbe = AffineGerbeClass::trivial(torus.clone()).unwrap();
        let datum = tdualize(&torus, &gerbe).unwrap();
        assert!(matches!(
            fm_verify(&datum),
            Err(KrError::UnsupportedProduct(2))
        ));
    }
}
