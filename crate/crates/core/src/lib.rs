//! Exact-arithmetic classification of Real affine tori and their twisted
//! KR-theory.
//!
//! The library classifies a torus `V/Λ` carrying an affine involution
//! `σ(x) = σ₀(x) + t` by the multiplicities of the three indecomposable
//! involution lattices (trivial, cyclotomic, regular) together with an
//! equivariant Chern flag, attaches affine gerbe data to it, constructs the
//! Real T-dual pair, and verifies degree-by-degree that the Fourier–Mukai
//! map between the twisted KR-theory tables of the two sides is a group
//! isomorphism.  All computations are exact: integer matrices with
//! arbitrary-precision entries, Smith normal form, and rational arithmetic
//! for circle-valued data.
//!
//! Module map:
//!
//! * [`zlinalg`] — integer matrices, Smith normal form, finitely generated
//!   abelian groups.
//! * [`c2cohomology`] — group cohomology of the two-element group with
//!   module, circle-quotient and affine-function coefficients.
//! * [`torus_class`] — decomposition invariants and canonical factor types
//!   of a Real affine torus.
//! * [`gerbe_class`] — the order-four group of graded point gerbes and
//!   affine gerbe classes on a torus.
//! * [`tduality`] — construction of the Real T-dual pair and the induced
//!   degree map.
//! * [`kr_engine`] — the coefficient ring of Real K-theory, the five
//!   indecomposable KR tables, product splitting, and Fourier–Mukai
//!   verification.
//! * [`dirac_index`] — numeric index constraints for Real spin-c
//!   structures of type k.

pub mod c2cohomology;
pub mod dirac_index;
pub mod gerbe_class;
pub mod kr_engine;
pub mod tduality;
pub mod torus_class;
pub mod zlinalg;
