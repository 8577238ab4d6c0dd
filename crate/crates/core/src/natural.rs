//! Arbitrary-width natural numbers with binary-expansion access and Nim addition.
//!
//! A [`Natural`] stores its binary expansion as 64-bit limbs, least significant
//! first. Values up to 128 bits live inline; wider values spill to the heap.
//! The representation is always canonical: the most significant stored limb is
//! non-zero, and zero has no limbs at all. Equality is therefore structural.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, BitXor, BitXorAssign};
use std::str::FromStr;

use smallvec::SmallVec;

use crate::error::ParseNaturalError;

const LIMB_BITS: u64 = u64::BITS as u64;

/// Largest power of ten that fits in a limb, and its exponent.
const DECIMAL_CHUNK: u64 = 10_000_000_000_000_000_000;
const DECIMAL_CHUNK_DIGITS: usize = 19;

type Limbs = SmallVec<[u64; 2]>;

/// A non-negative integer of unbounded width.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Natural {
    // Invariant: no trailing zero limb.
    limbs: Limbs,
}

impl Natural {
    pub const ZERO: Natural = Natural {
        limbs: SmallVec::new_const(),
    };

    pub fn zero() -> Self {
        Self::ZERO
    }

    /// Builds a value from little-endian limbs. Trailing zero limbs are dropped.
    pub fn from_limbs(limbs: impl IntoIterator<Item = u64>) -> Self {
        let mut n = Natural {
            limbs: limbs.into_iter().collect(),
        };
        n.normalize();
        n
    }

    /// `2^exponent`.
    pub fn power_of_two(exponent: u64) -> Self {
        let limb = (exponent / LIMB_BITS) as usize;
        let mut limbs = Limbs::from_elem(0, limb + 1);
        limbs[limb] = 1 << (exponent % LIMB_BITS);
        Natural { limbs }
    }

    /// Builds a value from its binary digits, least significant first.
    pub fn from_binary_digits(digits: impl IntoIterator<Item = bool>) -> Self {
        let mut limbs = Limbs::new();
        for (i, d) in digits.into_iter().enumerate() {
            let limb = i / LIMB_BITS as usize;
            if limb >= limbs.len() {
                limbs.resize(limb + 1, 0);
            }
            if d {
                limbs[limb] |= 1 << (i % LIMB_BITS as usize);
            }
        }
        let mut n = Natural { limbs };
        n.normalize();
        n
    }

    /// Little-endian limbs of the canonical representation.
    pub fn limbs(&self) -> &[u64] {
        &self.limbs
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.is_empty()
    }

    /// Binary digit `i` of the expansion. Zero for every index past the most
    /// significant set bit.
    pub fn bit(&self, i: u64) -> bool {
        let limb = i / LIMB_BITS;
        match self.limbs.get(limb as usize) {
            Some(&l) => (l >> (i % LIMB_BITS)) & 1 == 1,
            None => false,
        }
    }

    /// Number of binary digits needed, 0 for zero.
    pub fn bit_len(&self) -> u64 {
        match self.limbs.last() {
            Some(&top) => {
                (self.limbs.len() as u64 - 1) * LIMB_BITS + (LIMB_BITS - top.leading_zeros() as u64)
            }
            None => 0,
        }
    }

    /// Index of the most significant set bit, `None` for zero.
    pub fn msb(&self) -> Option<u64> {
        self.bit_len().checked_sub(1)
    }

    /// The binary expansion `b_0, b_1, ...` up to the most significant set bit.
    pub fn binary_digits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.bit_len()).map(move |i| self.bit(i))
    }

    /// Nim sum: the digit-wise sum of both expansions without carry.
    pub fn nim_sum(&self, other: &Natural) -> Natural {
        let (long, short) = if self.limbs.len() >= other.limbs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut limbs = long.limbs.clone();
        for (l, s) in limbs.iter_mut().zip(short.limbs.iter()) {
            *l ^= s;
        }
        let mut n = Natural { limbs };
        n.normalize();
        n
    }

    /// `|self - other|`.
    pub fn abs_diff(&self, other: &Natural) -> Natural {
        let (big, small) = match self.cmp(other) {
            Ordering::Less => (other, self),
            _ => (self, other),
        };
        let mut limbs = big.limbs.clone();
        let mut borrow = false;
        for (i, l) in limbs.iter_mut().enumerate() {
            let s = small.limbs.get(i).copied().unwrap_or(0);
            if s == 0 && !borrow && i >= small.limbs.len() {
                break;
            }
            let (d, b1) = l.overflowing_sub(s);
            let (d, b2) = d.overflowing_sub(borrow as u64);
            *l = d;
            borrow = b1 || b2;
        }
        debug_assert!(!borrow);
        let mut n = Natural { limbs };
        n.normalize();
        n
    }

    /// Value as `u64`, if it fits.
    pub fn to_u64(&self) -> Option<u64> {
        match self.limbs.len() {
            0 => Some(0),
            1 => Some(self.limbs[0]),
            _ => None,
        }
    }

    /// Value as `u128`, if it fits.
    pub fn to_u128(&self) -> Option<u128> {
        match self.limbs.len() {
            0 => Some(0),
            1 => Some(self.limbs[0] as u128),
            2 => Some(self.limbs[0] as u128 | (self.limbs[1] as u128) << 64),
            _ => None,
        }
    }

    fn normalize(&mut self) {
        while self.limbs.last() == Some(&0) {
            self.limbs.pop();
        }
    }

    /// `self = self * mul + add`, for single-limb operands. Used by the parser.
    fn mul_add_small(&mut self, mul: u64, add: u64) {
        let mut carry = add as u128;
        for l in self.limbs.iter_mut() {
            let v = (*l as u128) * (mul as u128) + carry;
            *l = v as u64;
            carry = v >> 64;
        }
        if carry != 0 {
            self.limbs.push(carry as u64);
        }
        self.normalize();
    }

    /// Divides in place by a single limb and returns the remainder.
    fn div_rem_small(&mut self, div: u64) -> u64 {
        let mut rem: u128 = 0;
        for l in self.limbs.iter_mut().rev() {
            let cur = (rem << 64) | *l as u128;
            *l = (cur / div as u128) as u64;
            rem = cur % div as u128;
        }
        self.normalize();
        rem as u64
    }

    fn parse_radix_pow2(
        digits: &str,
        bits_per_digit: u32,
        offset: usize,
    ) -> Result<Self, ParseNaturalError> {
        let radix = 1u32 << bits_per_digit;
        let mut out = Natural::zero();
        let mut pos = 0u64;
        for (i, ch) in digits.char_indices().rev() {
            if ch == '_' {
                continue;
            }
            let d = ch.to_digit(radix).ok_or(ParseNaturalError::InvalidDigit {
                digit: ch,
                position: offset + i,
            })? as u64;
            let limb = (pos / LIMB_BITS) as usize;
            if limb >= out.limbs.len() {
                out.limbs.resize(limb + 1, 0);
            }
            // Radix digits never straddle a limb boundary for bases 2 and 16.
            out.limbs[limb] |= d << (pos % LIMB_BITS);
            pos += bits_per_digit as u64;
        }
        out.normalize();
        Ok(out)
    }

    fn parse_decimal(digits: &str) -> Result<Self, ParseNaturalError> {
        let mut out = Natural::zero();
        let mut chunk = 0u64;
        let mut chunk_len = 0usize;
        for (i, ch) in digits.char_indices() {
            if ch == '_' {
                continue;
            }
            let d = ch.to_digit(10).ok_or(ParseNaturalError::InvalidDigit {
                digit: ch,
                position: i,
            })? as u64;
            chunk = chunk * 10 + d;
            chunk_len += 1;
            if chunk_len == DECIMAL_CHUNK_DIGITS {
                out.mul_add_small(DECIMAL_CHUNK, chunk);
                chunk = 0;
                chunk_len = 0;
            }
        }
        if chunk_len > 0 {
            out.mul_add_small(10u64.pow(chunk_len as u32), chunk);
        }
        Ok(out)
    }
}

impl FromStr for Natural {
    type Err = ParseNaturalError;

    /// Accepts decimal, `0x`-prefixed hexadecimal and `0b`-prefixed binary.
    /// Underscores between digits are ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.starts_with('-') {
            return Err(ParseNaturalError::Negative);
        }
        let (body, radix) = match s.get(..2) {
            Some("0x") | Some("0X") => (&s[2..], 16),
            Some("0b") | Some("0B") => (&s[2..], 2),
            _ => (s, 10),
        };
        if !body.chars().any(|c| c != '_') {
            return Err(ParseNaturalError::Empty);
        }
        match radix {
            16 => Self::parse_radix_pow2(body, 4, 2),
            2 => Self::parse_radix_pow2(body, 1, 2),
            _ => Self::parse_decimal(body),
        }
    }
}

impl fmt::Display for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(v) = self.to_u64() {
            return fmt::Display::fmt(&v, f);
        }
        let mut rest = self.clone();
        let mut chunks = Vec::new();
        while !rest.is_zero() {
            chunks.push(rest.div_rem_small(DECIMAL_CHUNK));
        }
        let mut s = String::with_capacity(chunks.len() * DECIMAL_CHUNK_DIGITS);
        let mut iter = chunks.iter().rev();
        if let Some(top) = iter.next() {
            s.push_str(&top.to_string());
        }
        for c in iter {
            s.push_str(&format!("{c:019}"));
        }
        f.pad_integral(true, "", &s)
    }
}

impl fmt::Debug for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Natural({self})")
    }
}

impl fmt::LowerHex for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        let mut iter = self.limbs.iter().rev();
        match iter.next() {
            Some(top) => s.push_str(&format!("{top:x}")),
            None => s.push('0'),
        }
        for l in iter {
            s.push_str(&format!("{l:016x}"));
        }
        f.pad_integral(true, "0x", &s)
    }
}

impl fmt::Binary for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = if self.is_zero() {
            "0".into()
        } else {
            (0..self.bit_len())
                .rev()
                .map(|i| if self.bit(i) { '1' } else { '0' })
                .collect()
        };
        f.pad_integral(true, "0b", &s)
    }
}

impl Ord for Natural {
    fn cmp(&self, other: &Self) -> Ordering {
        self.limbs
            .len()
            .cmp(&other.limbs.len())
            .then_with(|| self.limbs.iter().rev().cmp(other.limbs.iter().rev()))
    }
}

impl PartialOrd for Natural {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl BitXor for &Natural {
    type Output = Natural;

    fn bitxor(self, rhs: &Natural) -> Natural {
        self.nim_sum(rhs)
    }
}

impl BitXor for Natural {
    type Output = Natural;

    fn bitxor(mut self, rhs: Natural) -> Natural {
        self ^= &rhs;
        self
    }
}

impl BitXor<&Natural> for Natural {
    type Output = Natural;

    fn bitxor(mut self, rhs: &Natural) -> Natural {
        self ^= rhs;
        self
    }
}

impl BitXorAssign<&Natural> for Natural {
    fn bitxor_assign(&mut self, rhs: &Natural) {
        if rhs.limbs.len() > self.limbs.len() {
            self.limbs.resize(rhs.limbs.len(), 0);
        }
        for (l, r) in self.limbs.iter_mut().zip(rhs.limbs.iter()) {
            *l ^= r;
        }
        self.normalize();
    }
}

impl Add for &Natural {
    type Output = Natural;

    fn add(self, rhs: &Natural) -> Natural {
        let (long, short) = if self.limbs.len() >= rhs.limbs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut limbs = long.limbs.clone();
        let mut carry = false;
        for (i, l) in limbs.iter_mut().enumerate() {
            let s = short.limbs.get(i).copied().unwrap_or(0);
            let (v, c1) = l.overflowing_add(s);
            let (v, c2) = v.overflowing_add(carry as u64);
            *l = v;
            carry = c1 || c2;
        }
        if carry {
            limbs.push(1);
        }
        Natural { limbs }
    }
}

impl Add for Natural {
    type Output = Natural;

    fn add(self, rhs: Natural) -> Natural {
        &self + &rhs
    }
}

macro_rules! from_unsigned {
    ($($t:ty),*) => {$(
        impl From<$t> for Natural {
            fn from(v: $t) -> Self {
                Natural::from(v as u64)
            }
        }
    )*};
}

from_unsigned!(u8, u16, u32, usize);

impl From<u64> for Natural {
    fn from(v: u64) -> Self {
        let mut limbs = Limbs::new();
        if v != 0 {
            limbs.push(v);
        }
        Natural { limbs }
    }
}

impl From<u128> for Natural {
    fn from(v: u128) -> Self {
        Natural::from_limbs([v as u64, (v >> 64) as u64])
    }
}

impl From<bool> for Natural {
    fn from(v: bool) -> Self {
        Natural::from(v as u64)
    }
}
