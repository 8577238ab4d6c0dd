//! Triangles of numbers.
//!
//! A vertex of the triple `(a, b, c)` is compared against the Nim sum of the
//! other two: it is *large* if greater, *aligned* if equal, *small* if less.
//! If one vertex is aligned, all three are and the triangle is *flat*.
//! Otherwise let `j` be the highest bit where `a_j != b_j ^ c_j`; the digits at
//! `j` decide every status, and the number of large vertices is always 1
//! (*loose*) or 3 (*tight*).

use std::cmp::Ordering;
use std::fmt;

use crate::Natural;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexStatus {
    Large,
    Aligned,
    Small,
}

impl VertexStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            VertexStatus::Large => "large",
            VertexStatus::Aligned => "aligned",
            VertexStatus::Small => "small",
        }
    }
}

impl fmt::Display for VertexStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriangleClass {
    /// Every vertex aligned: `a ^ b ^ c == 0`.
    Flat,
    /// Three large vertices.
    Tight,
    /// One large vertex, two small.
    Loose,
}

impl TriangleClass {
    pub fn as_str(self) -> &'static str {
        match self {
            TriangleClass::Flat => "flat",
            TriangleClass::Tight => "tight",
            TriangleClass::Loose => "loose",
        }
    }

    /// Class for a status triple, or `None` if the multiset cannot occur.
    pub fn from_statuses(statuses: &[VertexStatus; 3]) -> Option<TriangleClass> {
        let count = |s| statuses.iter().filter(|&&x| x == s).count();
        match (count(VertexStatus::Large), count(VertexStatus::Aligned)) {
            (0, 3) => Some(TriangleClass::Flat),
            (3, 0) => Some(TriangleClass::Tight),
            (1, 0) => Some(TriangleClass::Loose),
            _ => None,
        }
    }
}

impl fmt::Display for TriangleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Ordered triple of naturals. Position matters only for reporting.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Triangle {
    pub a: Natural,
    pub b: Natural,
    pub c: Natural,
}

impl Triangle {
    pub fn new(a: impl Into<Natural>, b: impl Into<Natural>, c: impl Into<Natural>) -> Self {
        Triangle {
            a: a.into(),
            b: b.into(),
            c: c.into(),
        }
    }

    pub fn vertices(&self) -> [&Natural; 3] {
        [&self.a, &self.b, &self.c]
    }

    /// `a ^ b ^ c`.
    pub fn nim_total(&self) -> Natural {
        let mut t = &self.a ^ &self.b;
        t ^= &self.c;
        t
    }

    pub fn is_flat(&self) -> bool {
        self.a == &self.b ^ &self.c
    }

    /// Highest bit index `j` with `a_j != b_j ^ c_j`; `None` iff flat.
    pub fn discriminant_index(&self) -> Option<u64> {
        self.nim_total().msb()
    }

    pub fn classify(&self) -> TriangleClassification {
        classify_triple(&self.a, &self.b, &self.c)
    }
}

impl<T: Into<Natural>> From<(T, T, T)> for Triangle {
    fn from((a, b, c): (T, T, T)) -> Self {
        Triangle::new(a, b, c)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TriangleClassification {
    /// Statuses of `a`, `b`, `c` in order.
    pub statuses: [VertexStatus; 3],
    pub class: TriangleClass,
    /// Absent iff the triangle is flat.
    pub discriminant: Option<u64>,
}

impl TriangleClassification {
    pub fn status_a(&self) -> VertexStatus {
        self.statuses[0]
    }

    pub fn status_b(&self) -> VertexStatus {
        self.statuses[1]
    }

    pub fn status_c(&self) -> VertexStatus {
        self.statuses[2]
    }

    pub fn large_count(&self) -> usize {
        self.statuses
            .iter()
            .filter(|&&s| s == VertexStatus::Large)
            .count()
    }
}

/// `loose j=2 a:large b:small c:small`
impl fmt::Display for TriangleClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.class)?;
        if let Some(j) = self.discriminant {
            write!(f, " j={j}")?;
        }
        for (name, status) in ["a", "b", "c"].iter().zip(self.statuses) {
            write!(f, " {name}:{status}")?;
        }
        Ok(())
    }
}

/// Status of vertex `x` in the triangle `(x, y, z)`.
pub fn classify_vertex(x: &Natural, y: &Natural, z: &Natural) -> VertexStatus {
    match x.cmp(&(y ^ z)) {
        Ordering::Greater => VertexStatus::Large,
        Ordering::Equal => VertexStatus::Aligned,
        Ordering::Less => VertexStatus::Small,
    }
}

/// Classification of `(a, b, c)` without building a [`Triangle`].
pub fn classify_triple(a: &Natural, b: &Natural, c: &Natural) -> TriangleClassification {
    let statuses = [
        classify_vertex(a, b, c),
        classify_vertex(b, a, c),
        classify_vertex(c, a, b),
    ];
    let class = TriangleClass::from_statuses(&statuses)
        .expect("a non-flat triangle always has one or three large vertices");
    let mut total = a ^ b;
    total ^= c;
    TriangleClassification {
        statuses,
        class,
        discriminant: total.msb(),
    }
}

pub fn classify_triangle(t: &Triangle) -> TriangleClassification {
    t.classify()
}

pub fn discriminant_index(t: &Triangle) -> Option<u64> {
    t.discriminant_index()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseOutcome {
    Statuses([VertexStatus; 3]),
    /// The digits satisfy `a_j == b_j ^ c_j`, so `j` could not be the
    /// discriminant.
    Contradiction,
}

/// One row of the digit table at the discriminant bit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CaseRow {
    pub digits: (bool, bool, bool),
    pub outcome: CaseOutcome,
}

/// Statuses of `(a, b, c)` implied by their digits at the discriminant bit.
pub fn case_table_lookup(a_j: bool, b_j: bool, c_j: bool) -> CaseOutcome {
    use VertexStatus::{Large as L, Small as S};
    match (a_j, b_j, c_j) {
        (true, true, true) => CaseOutcome::Statuses([L, L, L]),
        (true, false, false) => CaseOutcome::Statuses([L, S, S]),
        (false, true, false) => CaseOutcome::Statuses([S, L, S]),
        (false, false, true) => CaseOutcome::Statuses([S, S, L]),
        _ => CaseOutcome::Contradiction,
    }
}

/// All eight rows, from `111` down to `000`.
pub fn case_table() -> [CaseRow; 8] {
    std::array::from_fn(|i| {
        let code = 7 - i;
        let digits = (code & 4 != 0, code & 2 != 0, code & 1 != 0);
        CaseRow {
            digits,
            outcome: case_table_lookup(digits.0, digits.1, digits.2),
        }
    })
}

/// A permutation `(x, y, z)` of three naturals with `x >= y ^ z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reordered {
    pub values: [Natural; 3],
    /// `values[k]` is input number `permutation[k]` (zero-based).
    pub permutation: [usize; 3],
}

/// Moves the leftmost input that is at least the Nim sum of the other two to
/// the front, keeping the other two in order.
pub fn reorder_dominant(a1: Natural, a2: Natural, a3: Natural) -> Reordered {
    let input = [a1, a2, a3];
    let lead = (0..3)
        .find(|&i| {
            let (y, z) = others(i);
            input[i] >= &input[y] ^ &input[z]
        })
        .expect("every triple has a vertex at least the Nim sum of the others");
    let (y, z) = others(lead);
    let permutation = [lead, y, z];
    let [v1, v2, v3] = input;
    let mut slots = [Some(v1), Some(v2), Some(v3)];
    let values = permutation.map(|i| slots[i].take().unwrap());
    Reordered {
        values,
        permutation,
    }
}

fn others(i: usize) -> (usize, usize) {
    match i {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}
