//! Nim addition as a minimum excludant.
//!
//! For `a`, `b` let `X = {α ^ b | α < a} ∪ {a ^ β | β < b}`. Then `a ^ b` is the
//! smallest natural outside `X`. Filling an operation table row-major with the
//! smallest value not yet used in the current row or column reproduces the XOR
//! table; this module builds both and checks them against [`Natural::nim_sum`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::Natural;

/// Default bound on `a + b` for [`exclusion_set`] and [`mex_oracle`].
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 20;

/// The set `X` for a pair `(a, b)`, sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExclusionSet {
    elements: Vec<Natural>,
}

impl ExclusionSet {
    pub fn elements(&self) -> &[Natural] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: &Natural) -> bool {
        self.elements.binary_search(x).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Natural> {
        self.elements.iter()
    }

    /// Smallest natural not in the set.
    pub fn mex(&self) -> Natural {
        // mex(S) <= |S|, so a bitmap of |S| + 1 slots is enough.
        let n = self.elements.len();
        let mut present = vec![false; n + 1];
        for e in &self.elements {
            if let Some(v) = e.to_u64().filter(|&v| v <= n as u64) {
                present[v as usize] = true;
            }
        }
        let first = present.iter().position(|p| !p).unwrap_or(n);
        Natural::from(first)
    }
}

impl<'a> IntoIterator for &'a ExclusionSet {
    type Item = &'a Natural;
    type IntoIter = std::slice::Iter<'a, Natural>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

fn enumeration_bounds(a: &Natural, b: &Natural, cap: u64) -> Result<(u64, u64)> {
    let total = a + b;
    match total.to_u64() {
        Some(t) if t <= cap => Ok((a.to_u64().unwrap(), b.to_u64().unwrap())),
        _ => Err(Error::CapExceeded {
            what: "a + b",
            requested: total.to_string(),
            cap,
        }),
    }
}

/// `X(a, b)` with the default cap on `a + b`.
pub fn exclusion_set(a: &Natural, b: &Natural) -> Result<ExclusionSet> {
    exclusion_set_with_cap(a, b, DEFAULT_ENUMERATION_CAP)
}

pub fn exclusion_set_with_cap(a: &Natural, b: &Natural, cap: u64) -> Result<ExclusionSet> {
    let (a_len, b_len) = enumeration_bounds(a, b, cap)?;
    let left = (0..a_len).map(|alpha| Natural::from(alpha) ^ b);
    let right = (0..b_len).map(|beta| a ^ &Natural::from(beta));
    let mut elements: Vec<Natural> = left.chain(right).collect();
    elements.sort_unstable();
    elements.dedup();
    Ok(ExclusionSet { elements })
}

/// `min(N \ X(a, b))`, computed by enumeration. Agrees with `a ^ b`.
pub fn mex_oracle(a: &Natural, b: &Natural) -> Result<Natural> {
    Ok(exclusion_set(a, b)?.mex())
}

pub fn mex_oracle_with_cap(a: &Natural, b: &Natural, cap: u64) -> Result<Natural> {
    Ok(exclusion_set_with_cap(a, b, cap)?.mex())
}

/// An `n x n` operation table on `{0, .., n-1}`, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyTable {
    n: usize,
    entries: Vec<u64>,
}

/// Fixed-width bitset over `0..bits`.
struct Bitset {
    words: Vec<u64>,
}

impl Bitset {
    fn new(bits: usize) -> Self {
        Bitset {
            words: vec![0; bits.div_ceil(64)],
        }
    }

    fn insert(&mut self, v: usize) {
        self.words[v / 64] |= 1 << (v % 64);
    }
}

/// Smallest index clear in both sets.
fn first_clear_in_union(x: &Bitset, y: &Bitset) -> Option<usize> {
    x.words
        .iter()
        .zip(&y.words)
        .enumerate()
        .find_map(|(i, (a, b))| {
            let free = !(a | b);
            (free != 0).then(|| i * 64 + free.trailing_zeros() as usize)
        })
}

impl GreedyTable {
    /// Fills the table row-major; each entry is the smallest natural not
    /// already used earlier in its row or column.
    pub fn build(n: usize) -> GreedyTable {
        assert!(n >= 1, "table size must be at least 1");
        // Each cell sees at most 2(n-1) earlier entries, so values stay below 2n.
        let width = 2 * n;
        let mut rows: Vec<Bitset> = (0..n).map(|_| Bitset::new(width)).collect();
        let mut cols: Vec<Bitset> = (0..n).map(|_| Bitset::new(width)).collect();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows.iter_mut() {
            for col in cols.iter_mut() {
                let v = first_clear_in_union(row, col)
                    .expect("value range is large enough for every cell");
                row.insert(v);
                col.insert(v);
                entries.push(v as u64);
            }
        }
        GreedyTable { n, entries }
    }

    /// Table from explicit rows. Returns `None` unless the rows form a
    /// non-empty square.
    pub fn from_rows(rows: Vec<Vec<u64>>) -> Option<GreedyTable> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return None;
        }
        Some(GreedyTable {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> u64 {
        self.entries[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: u64) {
        self.entries[row * self.n + col] = value;
    }

    pub fn row(&self, row: usize) -> &[u64] {
        &self.entries[row * self.n..(row + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u64]> {
        self.entries.chunks(self.n)
    }

    /// No value repeats within any row or any column.
    pub fn is_latin(&self) -> bool {
        let distinct = |values: &mut dyn Iterator<Item = u64>| {
            let mut seen: Vec<u64> = values.collect();
            seen.sort_unstable();
            seen.windows(2).all(|w| w[0] != w[1])
        };
        (0..self.n).all(|i| {
            distinct(&mut self.row(i).iter().copied())
                && distinct(&mut (0..self.n).map(|r| self.get(r, i)))
        })
    }

    /// Whether `value` at `(row, col)` would clash with an entry filled before
    /// it in row-major order.
    pub fn conflicts_with_earlier(&self, row: usize, col: usize, value: u64) -> bool {
        (0..col).any(|b| self.get(row, b) == value) || (0..row).any(|a| self.get(a, col) == value)
    }
}

/// Row and column of an entry that differs from the XOR table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableMismatch {
    pub row: usize,
    pub col: usize,
    pub found: u64,
}

impl fmt::Display for TableMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "entry ({}, {}) is {}, expected {}",
            self.row,
            self.col,
            self.found,
            self.row ^ self.col
        )
    }
}

/// `Ok` iff every entry `(a, b)` equals `a ^ b`; otherwise the first mismatch
/// in row-major order.
pub fn verify_table_equals_xor(t: &GreedyTable) -> std::result::Result<(), TableMismatch> {
    for (a, row) in t.rows().enumerate() {
        let a_nat = Natural::from(a);
        for (b, &v) in row.iter().enumerate() {
            if Natural::from(v) != a_nat.nim_sum(&Natural::from(b)) {
                return Err(TableMismatch {
                    row: a,
                    col: b,
                    found: v,
                });
            }
        }
    }
    Ok(())
}

pub fn greedy_minimal_table(n: usize) -> GreedyTable {
    GreedyTable::build(n)
}

/// One row per line, entries separated by single spaces.
impl fmt::Display for GreedyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let mut first = true;
            for v in row {
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
                first = false;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseTableError {
    #[error("line {line}: {source}")]
    Entry {
        line: usize,
        source: std::num::ParseIntError,
    },
    #[error("table is not a non-empty square")]
    NotSquare,
}

impl FromStr for GreedyTable {
    type Err = ParseTableError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let rows = s
            .lines()
            .filter(|l| !l.trim().is_empty())
            .enumerate()
            .map(|(i, line)| {
                line.split_whitespace()
                    .map(|t| t.parse::<u64>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|source| ParseTableError::Entry {
                        line: i + 1,
                        source,
                    })
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        GreedyTable::from_rows(rows).ok_or(ParseTableError::NotSquare)
    }
}
