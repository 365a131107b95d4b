#![cfg_attr(not(test), no_std)]

//! Gauss algebras of toric algebras generated by monomials of one degree.
//!
//! For monomials `g_1, ..., g_n` of degree `r` in `K[x_1, ..., x_d]` whose
//! exponent matrix has rank `d`, every `d x d` minor of the Jacobian is an
//! integer multiple of `(g_{i_1} ... g_{i_d}) / (x_1 ... x_d)`, the multiple
//! being the determinant of the chosen columns of the exponent matrix. The
//! Gauss algebra is therefore generated by those quotient monomials whose
//! column determinant is nonzero. Everything in this crate works on the
//! exponent side with exact integers.
//!
//! Modules:
//!
//! - [`monomial`], [`matrix`], [`lattice`]: monomials, the Borel order, exact
//!   integer linear algebra and Hermite normal forms.
//! - [`gauss`]: the pruned subset enumeration and the derived analytics
//!   (relation lattice, birationality, saturation gaps).
//! - [`borel`]: strongly stable sets and their Borel generators.
//! - [`veronese`]: squarefree Veronese sets, `Mon(t, r)` and the exchange
//!   property.
//! - [`graphs`]: edge rings of graphs with loops, rooted spanning forests and
//!   the hypersurface scan.

extern crate alloc;

pub mod borel;
pub mod error;
pub mod gauss;
pub mod graphs;
pub mod lattice;
pub mod matrix;
pub mod monomial;
pub mod veronese;

mod cone;
mod scalar;
mod subsets;

pub use error::{Error, Result};
pub use gauss::{GaussResult, RelationReport};
pub use lattice::LatticeBasis;
pub use matrix::IntMatrix;
pub use monomial::{Monomial, MonomialAlgebra, MonomialSet};
