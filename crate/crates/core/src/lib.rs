//! Fixed-point analysis for complex rational maps and harmonic maps
//! `f = h + conj(g)`.
//!
//! The library parses polynomial/rational expressions in `z`, finds all
//! fixed points on the extended plane with multipliers, multiplicities and
//! residue fixed-point indices, checks the index-sum identities, and
//! enumerates induced h-fixed points of harmonic maps together with
//! non-attractive witness reports. The `cli` module exposes the same
//! analyses as deterministic subcommands with table/JSON/CSV output and an
//! SVG plot emitter.

pub mod cli;
pub mod corpus;
pub mod expr;
pub mod fixpoint;
pub mod harmonic;
pub mod poly;
pub mod roots;

pub use expr::{format_function, parse_function, FunctionExpr};
pub use fixpoint::{fixed_points, verify_index_sum, FixedPoint, FixedPointReport, Tolerances};
pub use harmonic::{conjecture_witness, induced_h_fixed_points, HarmonicMap};
pub use poly::{ExtComplex, MobiusMap, Polynomial, RationalMap};
