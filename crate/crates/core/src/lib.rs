//! Planarity for finite lattices: complementary orders, canonical diagrams,
//! e-ladders, traversals, and congruence quotients.
//!
//! A finite lattice is planar exactly when its order `<` admits a
//! complementary strict order `λ`: one relating every incomparable pair in
//! exactly one direction. The [`zilber`] module decides planarity through
//! that equivalence, producing either a witness orientation together with a
//! planar drawing, or a certificate that no orientation exists.
//!
//! The remaining modules analyze a concrete drawing. [`leftright`] recovers
//! the complementary order of a planar diagram from the paths of its maximal
//! chains, [`canonical`] computes the unique imbalance-coordinate form of an
//! oriented lattice, [`ladders`] classifies the local regions between
//! left-right neighbours, [`traversal`] builds the up-right and up-left
//! spanning trees, and [`quotient`] forms join- and meet-congruence
//! quotients, which stay planar.
//!
//! All geometry is exact: coordinates are arbitrary-precision rationals and
//! every predicate is decided by sign computations, never by tolerance.

pub mod canonical;
pub mod diagram;
pub mod enumerate;
pub mod format;
pub mod generate;
pub mod geom;
pub mod ladders;
pub mod lattice;
pub mod leftright;
pub mod quotient;
pub mod traversal;
pub mod zilber;

pub use canonical::OrientedLattice;
pub use diagram::{Diagram, PlanarityReport};
pub use geom::{Point, Rat};
pub use lattice::{Element, Lattice, Poset, StrictRelation};
pub use zilber::PlanarityCertificate;
