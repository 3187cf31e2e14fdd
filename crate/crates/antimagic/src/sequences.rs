//! Interval arithmetic for block constructions.
//!
//! `S_p(a)` is the integer interval `[p(a−1)+1, pa]`. Walking one interval
//! upward and another downward in lockstep gives a pair sum that does not
//! depend on the step, which is what makes every block in the constructions
//! have equal row sums. Terms are computed in closed form; nothing here
//! allocates.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Ascending,
    Descending,
}

impl Direction {
    /// Odd labels walk upward, even labels downward.
    pub fn of_label(label: u64) -> Self {
        if label % 2 == 1 {
            Direction::Ascending
        } else {
            Direction::Descending
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            Direction::Ascending => Direction::Descending,
            Direction::Descending => Direction::Ascending,
        }
    }
}

/// One traversal of `S_p(a)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntervalSpec {
    pub p: u64,
    pub a: u64,
    pub direction: Direction,
}

impl IntervalSpec {
    pub fn new(p: u64, a: u64, direction: Direction) -> Result<Self> {
        if p == 0 || a == 0 {
            return Err(Error::InvalidParameter(format!("interval needs p, a >= 1 (got p={p}, a={a})")));
        }
        Ok(IntervalSpec { p, a, direction })
    }

    /// Smallest and largest element.
    pub fn bounds(&self) -> (u64, u64) {
        (self.p * (self.a - 1) + 1, self.p * self.a)
    }

    /// The `i`-th term, `1 <= i <= p`.
    pub fn term(&self, i: u64) -> Result<u64> {
        term(self.p, self.a, self.direction, i)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = u64> {
        let s = *self;
        (1..=s.p).map(move |i| term_unchecked(s.p, s.a, s.direction, i))
    }
}

/// The `i`-th term of `S_p(a)` walked in `direction`.
///
/// ```
/// use antimagic::sequences::{term, Direction};
/// assert_eq!(term(5, 2, Direction::Ascending, 1).unwrap(), 6);
/// assert_eq!(term(7, 6, Direction::Descending, 3).unwrap(), 40);
/// ```
pub fn term(p: u64, a: u64, direction: Direction, i: u64) -> Result<u64> {
    if p == 0 || a == 0 {
        return Err(Error::InvalidParameter(format!("interval needs p, a >= 1 (got p={p}, a={a})")));
    }
    if i == 0 || i > p {
        return Err(Error::IndexOutOfRange { index: i, len: p });
    }
    Ok(term_unchecked(p, a, direction, i))
}

/// [`term`] without range checks, for hot loops whose indices are known good.
#[inline]
pub fn term_unchecked(p: u64, a: u64, direction: Direction, i: u64) -> u64 {
    match direction {
        Direction::Ascending => p * (a - 1) + i,
        Direction::Descending => p * a - i + 1,
    }
}

/// Sum of the `i`-th ascending term of `S_p(a)` and the `i`-th descending
/// term of `S_p(b)`, which is the same for every `i`.
pub fn pair_sum(p: u64, a: u64, b: u64) -> u64 {
    p * (a + b - 1) + 1
}
