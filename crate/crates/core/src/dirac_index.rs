//! Numeric consequences of a Real spin-c structure of type k on a compact
//! n-manifold with involution.
//!
//! Such a structure lifts the integer index of the Dirac operator to a
//! class in the real K-theory of a point in degree 2k - n, and the
//! forgetful map back to complex K-theory constrains the integer index:
//! surjective in degree 0, image of index two in degree 4, zero in degrees
//! +-2 (and the complex index vanishes outright in odd dimensions).
//! Coupling to flat line bundles replaces the point by the Jacobian torus,
//! and the degree bookkeeping of the pushforward along the Albanese map
//! composed with the transform to the Jacobian is recorded here.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiracError {
    #[error("a free involution has no equivariant Albanese basepoint; the twisted-target variant is not supported")]
    FixedPointFreeUnsupported,
}

/// Dimension, structure type, and the eigenvalue split of the involution on
/// first cohomology.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RealSpinContext {
    /// manifold dimension
    pub n: u32,
    /// structure type, mod 4
    pub k: u32,
    /// dimension of the +1 eigenspace on first cohomology
    pub b_plus: u32,
    /// dimension of the -1 eigenspace on first cohomology
    pub b_minus: u32,
}

impl RealSpinContext {
    pub fn new(n: u32, k: u32) -> Self {
        Self {
            n,
            k: k % 4,
            b_plus: 0,
            b_minus: 0,
        }
    }

    pub fn with_eigenspaces(mut self, b_plus: u32, b_minus: u32) -> Self {
        self.b_plus = b_plus;
        self.b_minus = b_minus;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// degree 0: the forgetful map is onto, no constraint
    Unconstrained,
    /// degree 4: the image is the even integers
    Even,
    /// degrees +-2, or odd dimension: the index vanishes
    Zero,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Unconstrained => "unconstrained",
            Verdict::Even => "even",
            Verdict::Zero => "zero",
        }
    }
}

/// Constraint on the integer Dirac index, the availability of a mod-2
/// refinement, and the degree 2k - n (mod 8) where the real lift lives.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IndexConstraint {
    pub verdict: Verdict,
    pub mod2_index_available: bool,
    pub lift_degree: u8,
}

fn mod8(x: i64) -> u8 {
    x.rem_euclid(8) as u8
}

/// Constraint table: with m = 2k - n mod 8, the verdict is "even" for
/// m = 4, "zero" for m = 2, 6 or any odd m (odd dimension), otherwise
/// unconstrained; the mod-2 index exists for m = 6, 7.
pub fn index_constraint(ctx: &RealSpinContext) -> IndexConstraint {
    let m = mod8(2 * (ctx.k as i64) - ctx.n as i64);
    let verdict = if ctx.n % 2 == 1 {
        Verdict::Zero
    } else {
        match m {
            0 => Verdict::Unconstrained,
            2 | 6 => Verdict::Zero,
            4 => Verdict::Even,
            _ => unreachable!("m is even when n is even"),
        }
    };
    IndexConstraint {
        verdict,
        mod2_index_available: m == 6 || m == 7,
        lift_degree: m,
    }
}

/// Degree bookkeeping for the families index over the Jacobian.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct JacobianDegrees {
    /// degree shift of the pushforward along the Albanese map
    pub albanese_push: u8,
    /// degree shift of the transform from the Albanese to the Jacobian
    pub fm_shift: u8,
    /// degree of the real families index
    pub ind_degree: u8,
}

/// albanese_push = -n + b_plus - b_minus + 2k, fm_shift = -b_plus + b_minus,
/// ind_degree = 2k - n, all mod 8; the first two sum to the third.
pub fn jacobian_degrees(ctx: &RealSpinContext) -> JacobianDegrees {
    let n = ctx.n as i64;
    let k = ctx.k as i64;
    let bp = ctx.b_plus as i64;
    let bm = ctx.b_minus as i64;
    JacobianDegrees {
        albanese_push: mod8(-n + bp - bm + 2 * k),
        fm_shift: mod8(-bp + bm),
        ind_degree: mod8(2 * k - n),
    }
}

/// Variant that refuses involutions without fixed points, where the index
/// would land in a twisted group instead.
pub fn jacobian_degrees_checked(
    ctx: &RealSpinContext,
    has_fixed_point: bool,
) -> Result<JacobianDegrees, DiracError> {
    if !has_fixed_point {
        return Err(DiracError::FixedPointFreeUnsupported);
    }
    Ok(jacobian_degrees(ctx))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn stated_examples() {
        let c = index_constraint(&RealSpinContext::new(4, 0));
        assert_eq!(c.verdict, Verdict::Even);
        assert_eq!(c.lift_degree, 4);
        assert!(!c.mod2_index_available);

        let c = index_constraint(&RealSpinContext::new(2, 0));
        assert_eq!(c.verdict, Verdict::Zero);
        assert_eq!(c.lift_degree, 6);
        assert!(c.mod2_index_available);

        let c = index_constraint(&RealSpinContext::new(0, 0));
        assert_eq!(c.verdict, Verdict::Unconstrained);
        assert_eq!(c.lift_degree, 0);

        let c = index_constraint(&RealSpinContext::new(1, 0));
        assert_eq!(c.verdict, Verdict::Zero);
        assert_eq!(c.lift_degree, 7);
        assert!(c.mod2_index_available);
    }

    #[test]
    fn grid_depends_only_on_residues() {
        for n in 0..8u32 {
            for k in 0..4u32 {
                let base = index_constraint(&RealSpinContext::new(n, k));
                let shifted = index_constraint(&RealSpinContext::new(n + 8, k));
                assert_eq!(base, shifted);
                // (n, k) -> (n + 2, k + 1) preserves m = 2k - n
                let moved = index_constraint(&RealSpinContext::new(n + 2, (k + 1) % 4));
                assert_eq!(base.lift_degree, moved.lift_degree);
                assert_eq!(base.mod2_index_available, moved.mod2_index_available);
                if n % 2 == (n + 2) % 2 {
                    assert_eq!(base.verdict, moved.verdict);
                }
            }
        }
    }

    #[test]
    fn zero_verdicts_cover_odd_dimensions_and_pm_two() {
        for n in 0..16u32 {
            for k in 0..4u32 {
                let c = index_constraint(&RealSpinContext::new(n, k));
                let expect_zero = n % 2 == 1 || c.lift_degree == 2 || c.lift_degree == 6;
                assert_eq!(c.verdict == Verdict::Zero, expect_zero, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn jacobian_examples() {
        let d = jacobian_degrees(&RealSpinContext::new(3, 0).with_eigenspaces(1, 0));
        assert_eq!((d.albanese_push, d.fm_shift, d.ind_degree), (6, 7, 5));

        let d = jacobian_degrees(&RealSpinContext::new(0, 0));
        assert_eq!((d.albanese_push, d.fm_shift, d.ind_degree), (0, 0, 0));
    }

    #[test]
    fn shift_identity_randomized() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..1000 {
            let ctx = RealSpinContext::new(rng.gen_range(0..64), rng.gen_range(0..4))
                .with_eigenspaces(rng.gen_range(0..12), rng.gen_range(0..12));
            let d = jacobian_degrees(&ctx);
            assert_eq!(
                (d.albanese_push + d.fm_shift) % 8,
                d.ind_degree,
                "ctx {ctx:?}"
            );
        }
    }

    #[test]
    fn fixed_point_free_rejected() {
        let ctx = RealSpinContext::new(3, 1);
        assert_eq!(
            jacobian_degrees_checked(&ctx, false),
            Err(DiracError::FixedPointFreeUnsupported)
        );
        assert!(jacobian_degrees_checked(&ctx, true).is_ok());
    }
}
