//! Fixed-width base-10 digit strings and the digit-level primitives the
//! operator catalog is built from.
//!
//! A [`DigitString`] is a width-`k` numeral that keeps its leading zeros, so
//! `"099"` and `"99"` are different values (width 3 vs width 2). Everything in
//! this module is a pure function on `Copy` values; no operation allocates.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported width; 10^9 - 1 still fits a u64 with headroom.
pub const MAX_WIDTH: u8 = 9;

const POW10: [u64; 10] = [
    1,
    10,
    100,
    1_000,
    10_000,
    100_000,
    1_000_000,
    10_000_000,
    100_000_000,
    1_000_000_000,
];

/// 10^width for width 0..=9.
#[inline]
pub fn pow10(width: u8) -> u64 {
    POW10[width as usize]
}

fn check_width(width: u8) -> Result<()> {
    if width == 0 || width > MAX_WIDTH {
        return Err(Error::InvalidWidth(width));
    }
    Ok(())
}

/// A width-`k` base-10 numeral with explicit leading zeros, most significant
/// digit first.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct DigitString {
    digits: [u8; MAX_WIDTH as usize],
    width: u8,
}

impl DigitString {
    /// Zero-padded base-10 expansion of `n` at the given width.
    pub fn from_integer(n: u64, width: u8) -> Result<Self> {
        check_width(width)?;
        let max = pow10(width);
        if n >= max {
            return Err(Error::ValueOutOfRange { value: n, width, max: max - 1 });
        }
        let mut digits = [0u8; MAX_WIDTH as usize];
        let mut rest = n;
        for slot in digits[..width as usize].iter_mut().rev() {
            *slot = (rest % 10) as u8;
            rest /= 10;
        }
        Ok(Self { digits, width })
    }

    /// Positional value of the numeral; inverse of [`from_integer`](Self::from_integer)
    /// at the same width.
    pub fn to_integer(&self) -> u64 {
        self.digits().iter().fold(0, |acc, &d| acc * 10 + u64::from(d))
    }

    pub fn width(&self) -> u8 {
        self.width
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits[..self.width as usize]
    }

    fn from_digits(src: &[u8]) -> Self {
        debug_assert!(!src.is_empty() && src.len() <= MAX_WIDTH as usize);
        let mut digits = [0u8; MAX_WIDTH as usize];
        digits[..src.len()].copy_from_slice(src);
        Self { digits, width: src.len() as u8 }
    }

    /// Digits in nonincreasing order (the Kaprekar `a'`).
    pub fn sort_descending(&self) -> Self {
        let mut out = *self;
        out.digits[..self.width as usize].sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    /// Digits in nondecreasing order (the Kaprekar `a''`).
    pub fn sort_ascending(&self) -> Self {
        let mut out = *self;
        out.digits[..self.width as usize].sort_unstable();
        out
    }

    /// Digits in reversed order, same width.
    pub fn reverse(&self) -> Self {
        let mut out = *self;
        out.digits[..self.width as usize].reverse();
        out
    }

    /// Rearranges digits by a list of 1-based source positions: output digit
    /// `t` is the input digit at `p[t]`.
    pub fn apply_permutation(&self, p: &Permutation) -> Result<Self> {
        if p.width() != self.width {
            return Err(Error::WidthMismatch { left: self.width, right: p.width() });
        }
        let mut out = *self;
        for (t, &src) in p.positions().iter().enumerate() {
            out.digits[t] = self.digits[src as usize - 1];
        }
        Ok(out)
    }

    /// True iff all digits are equal.
    pub fn is_repdigit(&self) -> bool {
        let d = self.digits[0];
        self.digits().iter().all(|&x| x == d)
    }

    /// Drops leading zeros, re-encoding at the value's natural width (zero
    /// keeps a single digit).
    pub fn shrink(&self) -> Self {
        let lead = self.digits().iter().take_while(|&&d| d == 0).count();
        let keep = (self.width as usize - lead).max(1);
        Self::from_digits(&self.digits[self.width as usize - keep..self.width as usize])
    }
}

impl fmt::Display for DigitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in self.digits() {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for DigitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DigitString(\"{self}\")")
    }
}

/// Parses the exact textual form: width is the string length, so `"099"`
/// parses at width 3.
impl FromStr for DigitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() || s.len() > MAX_WIDTH as usize {
            return Err(Error::Parse(format!(
                "digit string must have 1..=9 digits, got {:?}",
                s
            )));
        }
        let mut digits = [0u8; MAX_WIDTH as usize];
        for (i, ch) in s.chars().enumerate() {
            match ch.to_digit(10) {
                Some(d) => digits[i] = d as u8,
                None => {
                    return Err(Error::Parse(format!(
                        "invalid digit {ch:?} in digit string {s:?}"
                    )))
                }
            }
        }
        Ok(Self { digits, width: s.len() as u8 })
    }
}

impl Serialize for DigitString {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for DigitString {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A bijection of `{1..width}` written as the ordered list of source
/// positions, matching the `P({1,2,3}) = {2,3,1}` notation.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Permutation {
    map: [u8; MAX_WIDTH as usize],
    width: u8,
}

impl Permutation {
    /// Builds a permutation from 1-based source positions, rejecting anything
    /// that is not a bijection of `{1..width}`.
    pub fn new(positions: &[u8]) -> Result<Self> {
        let width = positions.len();
        if width == 0 || width > MAX_WIDTH as usize {
            return Err(Error::InvalidPermutation(format!(
                "permutation must have 1..=9 entries, got {width}"
            )));
        }
        let mut seen = [false; MAX_WIDTH as usize];
        for &p in positions {
            if p == 0 || p as usize > width {
                return Err(Error::InvalidPermutation(format!(
                    "position {p} outside 1..={width}"
                )));
            }
            if seen[p as usize - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "position {p} appears more than once (not a bijection of 1..={width})"
                )));
            }
            seen[p as usize - 1] = true;
        }
        let mut map = [0u8; MAX_WIDTH as usize];
        map[..width].copy_from_slice(positions);
        Ok(Self { map, width: width as u8 })
    }

    pub fn identity(width: u8) -> Result<Self> {
        check_width(width)?;
        let mut map = [0u8; MAX_WIDTH as usize];
        for (i, slot) in map[..width as usize].iter_mut().enumerate() {
            *slot = i as u8 + 1;
        }
        Ok(Self { map, width })
    }

    pub fn width(&self) -> u8 {
        self.width
    }

    /// 1-based source positions, one per output slot.
    pub fn positions(&self) -> &[u8] {
        &self.map[..self.width as usize]
    }

    /// The permutation equivalent to applying `self` first and `then` second.
    pub fn compose(&self, then: &Permutation) -> Result<Self> {
        if self.width != then.width {
            return Err(Error::WidthMismatch { left: self.width, right: then.width });
        }
        let mut map = [0u8; MAX_WIDTH as usize];
        for (t, &via) in then.positions().iter().enumerate() {
            map[t] = self.map[via as usize - 1];
        }
        Ok(Self { map, width: self.width })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.positions().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// Parses the comma-separated 1-based form, e.g. `"2,3,1"`.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut positions = Vec::new();
        for part in s.split(',') {
            let p: u8 = part.trim().parse().map_err(|_| {
                Error::Parse(format!("invalid permutation entry {part:?} in {s:?}"))
            })?;
            positions.push(p);
        }
        Self::new(&positions)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
