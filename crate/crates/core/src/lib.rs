//! Subgroup counts and factorization numbers `F2` of finite abelian
//! p-groups `Z_{p^l1} x Z_{p^l2} x Z_{p^l3}`, computed three ways:
//!
//! * [`closedform`]: closed formulas, numerically or as polynomials in `p`;
//! * [`mobius_engine`]: Möbius inversion over the socle subspaces, with
//!   quotient types from Smith normal form;
//! * [`lattice_oracle`]: brute-force enumeration of the subgroup lattice.

pub mod cli;
pub mod closedform;
pub mod exactpoly;
pub mod grouptypes;
pub mod lattice_oracle;
pub mod mobius_engine;
pub mod report;

pub use closedform::{f2_corollary4, f2_theorem3, f_ext, subgroup_count_f, FormulaResult, Mode};
pub use exactpoly::{InexactDivision, IntPolynomial};
pub use grouptypes::GroupType;
pub use report::VerificationReport;
