//! Consequences of the triangle classification: Nim move advice and
//! exhaustive class tallies.

pub mod census;
pub mod nim;

pub use census::{
    census, census_closed_form_check, census_closed_form_check_with_cap, census_with_cap,
    closed_form, CensusReport, Tally, DEFAULT_MAX_K,
};
pub use nim::{advise_move, winning_moves, MoveAdvice, NimPosition};
