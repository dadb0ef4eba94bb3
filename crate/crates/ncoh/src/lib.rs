//! Finite groups, crossed bimodules, and the first non-abelian cohomology
//! `H¹(G,(A,μ))` computed by explicit enumeration of the derivation group
//! `Der(G,(A,μ))`, together with an integer-lattice backend (Smith normal
//! form) for finitely generated abelian coefficient modules.
//!
//! Everything works on validated multiplication tables: groups are small,
//! actions are stored elementwise, and every axiom the constructions rely on
//! is checked exhaustively rather than assumed. The crate is organised as
//!
//! * [`grp`] — multiplication-table groups, subgroups, quotients, `Aut(A)`;
//! * [`act`] — actions by automorphisms, fixed points, compatibility checks;
//! * [`xmod`] — precrossed / partially crossed / crossed modules and
//!   `G–R`-bimodules with their canonical constructions;
//! * [`der`] — the derivation group `Der(G,(A,μ))` under the `⋆`-product;
//! * [`coh`] — the equivalence relation on derivations, `H¹` as a set or a
//!   group, and the plain-module `H¹(G,A)`;
//! * [`zlat`] — integer lattices: SNF, derivation/principal lattices over
//!   `ℤⁿ`, and `H¹` as a finitely generated abelian group;
//! * [`io`] — the instance catalog, the JSON instance format, and reports.
//!
//! The `examples/` directory contains one runnable example per capability;
//! the `ncoh` binary exposes the same pipelines as CLI tasks.

pub mod act;
pub mod coh;
pub mod der;
pub mod grp;
pub mod io;
pub mod xmod;
pub mod zlat;

pub use act::Action;
pub use coh::H1Result;
pub use der::{DerGroup, Derivation};
pub use grp::{FiniteGroup, GroupDescriptor, Homomorphism, Subgroup};
pub use xmod::{Bimodule, CrossedModule, Crossedness, CrossednessLevel};
pub use zlat::{FgAbelianGroup, IMat, IntRep};
