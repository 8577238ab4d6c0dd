//! Nim addition on natural numbers of any width, and the classification of
//! number triples ("triangles") by comparing each number with the Nim sum of
//! the other two.
//!
//! - [`natural`]: the [`Natural`] type and Nim addition.
//! - [`triangle`]: large/aligned/small vertices, flat/tight/loose triangles,
//!   the discriminant bit and the digit case table.
//! - [`mex`]: Nim sum as a minimum excludant and the greedy operation table.
//! - [`applications`]: Nim move advice and class census.
//! - [`render`]: PGM maps of triangle classes.

pub mod applications;
pub mod error;
pub mod mex;
pub mod natural;
pub mod render;
pub mod triangle;

pub use applications::{
    advise_move, census, census_closed_form_check, winning_moves, CensusReport, MoveAdvice,
    NimPosition, Tally,
};
pub use error::{Error, ParseNaturalError, Result};
pub use mex::{
    exclusion_set, greedy_minimal_table, mex_oracle, verify_table_equals_xor, ExclusionSet,
    GreedyTable, TableMismatch,
};
pub use natural::Natural;
pub use render::{render_pgm, Palette, RenderSpec};
pub use triangle::{
    case_table, case_table_lookup, classify_triangle, classify_triple, classify_vertex,
    discriminant_index, reorder_dominant, CaseOutcome, CaseRow, Reordered, Triangle, TriangleClass,
    TriangleClassification, VertexStatus,
};

/// Nim sum of two naturals.
pub fn nim_sum(a: &Natural, b: &Natural) -> Natural {
    a.nim_sum(b)
}
