//! Exhaustive flat/tight/loose tallies over `[0, 2^k)^3`.

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::triangle::{classify_triple, TriangleClass};
use crate::Natural;

/// Default largest bit width accepted by [`census`].
pub const DEFAULT_MAX_K: u32 = 7;

/// Beyond this width `8^k` no longer fits the counters.
const HARD_MAX_K: u32 = 21;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Tally {
    pub flat: u64,
    pub tight: u64,
    pub loose: u64,
}

impl Tally {
    pub fn total(&self) -> u64 {
        self.flat + self.tight + self.loose
    }

    fn record(&mut self, class: TriangleClass) {
        match class {
            TriangleClass::Flat => self.flat += 1,
            TriangleClass::Tight => self.tight += 1,
            TriangleClass::Loose => self.loose += 1,
        }
    }

    fn merge(self, other: Tally) -> Tally {
        Tally {
            flat: self.flat + other.flat,
            tight: self.tight + other.tight,
            loose: self.loose + other.loose,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusReport {
    pub k: u32,
    pub tally: Tally,
    pub elapsed: Duration,
}

impl CensusReport {
    pub fn flat(&self) -> u64 {
        self.tally.flat
    }

    pub fn tight(&self) -> u64 {
        self.tally.tight
    }

    pub fn loose(&self) -> u64 {
        self.tally.loose
    }

    pub fn total(&self) -> u64 {
        self.tally.total()
    }

    pub fn elapsed_ms(&self) -> u128 {
        self.elapsed.as_millis()
    }

    /// `k=.. flat=.. tight=.. loose=.. elapsed_ms=..`
    pub fn timed_line(&self) -> String {
        format!("{self} elapsed_ms={}", self.elapsed_ms())
    }
}

/// `k=1 flat=4 tight=1 loose=3`; timing is left out so the line is stable.
impl fmt::Display for CensusReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "k={} flat={} tight={} loose={}",
            self.k, self.tally.flat, self.tally.tight, self.tally.loose
        )
    }
}

fn check_k(k: u32, max_k: u32) -> Result<()> {
    let cap = max_k.min(HARD_MAX_K);
    if k > cap {
        return Err(Error::CapExceeded {
            what: "census width k",
            requested: k.to_string(),
            cap: cap as u64,
        });
    }
    Ok(())
}

/// Classifies every triple in `[0, 2^k)^3` with `k <= DEFAULT_MAX_K`.
pub fn census(k: u32) -> Result<CensusReport> {
    census_with_cap(k, DEFAULT_MAX_K)
}

pub fn census_with_cap(k: u32, max_k: u32) -> Result<CensusReport> {
    check_k(k, max_k)?;
    let start = Instant::now();
    let side = 1u64 << k;
    let values: Vec<Natural> = (0..side).map(Natural::from).collect();
    let tally = values
        .par_iter()
        .map(|a| {
            let mut t = Tally::default();
            for b in &values {
                for c in &values {
                    t.record(classify_triple(a, b, c).class);
                }
            }
            t
        })
        .reduce(Tally::default, Tally::merge);
    Ok(CensusReport {
        k,
        tally,
        elapsed: start.elapsed(),
    })
}

/// Predicted tallies: `flat = 4^k`, `tight = 4^(k-1) (2^k - 1)`, and the rest
/// loose.
pub fn closed_form(k: u32) -> Tally {
    let flat = 1u64 << (2 * k);
    let tight = match k {
        0 => 0,
        _ => (1u64 << (2 * (k - 1))) * ((1u64 << k) - 1),
    };
    Tally {
        flat,
        tight,
        loose: (1u64 << (3 * k)) - flat - tight,
    }
}

/// Runs the census and compares it with [`closed_form`].
pub fn census_closed_form_check(k: u32) -> Result<bool> {
    census_closed_form_check_with_cap(k, DEFAULT_MAX_K)
}

pub fn census_closed_form_check_with_cap(k: u32, max_k: u32) -> Result<bool> {
    Ok(census_with_cap(k, max_k)?.tally == closed_form(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_widths() {
        let t = |flat, tight, loose| Tally { flat, tight, loose };
        assert_eq!(census(0).unwrap().tally, t(1, 0, 0));
        assert_eq!(census(1).unwrap().tally, t(4, 1, 3));
        assert_eq!(census(2).unwrap().tally, t(16, 12, 36));
        assert_eq!(census(3).unwrap().tally, t(64, 112, 336));
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(
            closed_form(1),
            Tally {
                flat: 4,
                tight: 1,
                loose: 3
            }
        );
        assert_eq!(
            closed_form(3),
            Tally {
                flat: 64,
                tight: 112,
                loose: 336
            }
        );
        assert_eq!(closed_form(0).total(), 1);
        for k in 1..=3 {
            assert!(census_closed_form_check(k).unwrap());
        }
    }

    #[test]
    fn cap() {
        assert!(matches!(census(8), Err(Error::CapExceeded { cap: 7, .. })));
        assert!(matches!(
            census_with_cap(22, 30),
            Err(Error::CapExceeded { cap: 21, .. })
        ));
    }

    #[test]
    fn report_line() {
        let r = census(1).unwrap();
        assert_eq!(r.to_string(), "k=1 flat=4 tight=1 loose=3");
        assert!(r
            .timed_line()
            .starts_with("k=1 flat=4 tight=1 loose=3 elapsed_ms="));
    }
}
