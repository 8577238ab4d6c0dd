//! Move advice for Nim.
//!
//! A position is lost for the player to move iff the Nim sum of all piles is
//! zero. For three piles that is a flat triangle, and the winning reductions
//! from any other position are exactly its large vertices: shrink a large pile
//! to the Nim sum of the other two. Positions with other pile counts use the
//! same total-XOR rule.

use std::fmt;

use crate::error::{Error, Result};
use crate::triangle::{classify_vertex, VertexStatus};
use crate::Natural;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NimPosition {
    pub piles: Vec<Natural>,
}

impl NimPosition {
    pub fn new(piles: impl IntoIterator<Item = impl Into<Natural>>) -> Self {
        NimPosition {
            piles: piles.into_iter().map(Into::into).collect(),
        }
    }

    /// Nim sum of every pile.
    pub fn nim_total(&self) -> Natural {
        self.piles.iter().fold(Natural::zero(), |acc, p| acc ^ p)
    }

    pub fn is_losing(&self) -> bool {
        self.nim_total().is_zero()
    }

    /// Position after `advice`; unchanged for [`MoveAdvice::NoWinningMove`].
    pub fn apply(&self, advice: &MoveAdvice) -> NimPosition {
        let mut next = self.clone();
        if let MoveAdvice::Winning { pile, new_size } = advice {
            next.piles[*pile] = new_size.clone();
        }
        next
    }
}

impl From<Vec<Natural>> for NimPosition {
    fn from(piles: Vec<Natural>) -> Self {
        NimPosition { piles }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MoveAdvice {
    /// Reduce pile `pile` (zero-based) to `new_size`.
    Winning {
        pile: usize,
        new_size: Natural,
    },
    NoWinningMove,
}

impl MoveAdvice {
    pub fn winning(pile: usize, new_size: impl Into<Natural>) -> Self {
        MoveAdvice::Winning {
            pile,
            new_size: new_size.into(),
        }
    }
}

impl fmt::Display for MoveAdvice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveAdvice::Winning { pile, new_size } => write!(f, "win pile={pile} size={new_size}"),
            MoveAdvice::NoWinningMove => f.write_str("none"),
        }
    }
}

/// Leftmost winning reduction, or [`MoveAdvice::NoWinningMove`] if the Nim sum
/// of all piles is zero.
pub fn advise_move(position: &NimPosition) -> Result<MoveAdvice> {
    if position.piles.is_empty() {
        return Err(Error::EmptyPosition);
    }
    let total = position.nim_total();
    if total.is_zero() {
        return Ok(MoveAdvice::NoWinningMove);
    }
    let (pile, new_size) = position
        .piles
        .iter()
        .enumerate()
        .map(|(i, p)| (i, p ^ &total))
        .find(|(i, target)| *target < position.piles[*i])
        .expect("the pile holding the top bit of a non-zero total can be reduced");
    Ok(MoveAdvice::Winning { pile, new_size })
}

/// Every winning reduction from a three-pile position, leftmost first. There
/// are 0, 1 or 3 of them.
pub fn winning_moves(position: &NimPosition) -> Result<Vec<MoveAdvice>> {
    let [a, b, c] = position.piles.as_slice() else {
        return Err(Error::WrongArity {
            expected: 3,
            found: position.piles.len(),
        });
    };
    let vertices = [(a, b, c), (b, a, c), (c, a, b)];
    Ok(vertices
        .into_iter()
        .enumerate()
        .filter(|(_, (x, y, z))| classify_vertex(x, y, z) == VertexStatus::Large)
        .map(|(i, (_, y, z))| MoveAdvice::Winning {
            pile: i,
            new_size: y ^ z,
        })
        .collect())
}
