//! Exact computational tools for probabilistic zeta functions of finite
//! groups: permutation groups, subgroup lattices and Möbius functions,
//! finite Dirichlet series, chief-series factorisations, useful-index
//! arithmetic and the simple-group elimination ladder.

pub mod arith;
pub mod dirichlet;
pub mod elements;
pub mod error;
pub mod fixtures;
pub mod groups;
pub mod indices;
pub mod ladder;
pub mod lattice;
pub mod perm;
pub mod zeta;

pub use dirichlet::DirichletPoly;
pub use error::{Error, Result};
pub use groups::{catalog_group, catalog_group_with, CatalogOptions};
pub use lattice::{MoebiusTable, SubgroupLattice, SubgroupRecord};
pub use perm::{PermGroup, Permutation};
