use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use serde::{Deserialize, Serialize};

/// Largest number of elements a [`Subset`] can index.
pub const MAX_ELEMENTS: usize = 128;

/// A set of element indices `0..MAX_ELEMENTS`, stored as a bitmask.
///
/// A subset does not know which poset it belongs to; operations that take a
/// poset and a subset check the indices against the poset size.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Subset(u128);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_ELEMENTS);
        if n == MAX_ELEMENTS {
            Subset(u128::MAX)
        } else {
            Subset((1u128 << n) - 1)
        }
    }

    pub fn singleton(x: usize) -> Self {
        assert!(x < MAX_ELEMENTS);
        Subset(1u128 << x)
    }

    pub fn from_bits(bits: u128) -> Self {
        Subset(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    #[inline]
    pub fn contains(self, x: usize) -> bool {
        x < MAX_ELEMENTS && self.0 >> x & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, x: usize) {
        assert!(x < MAX_ELEMENTS);
        self.0 |= 1u128 << x;
    }

    #[inline]
    pub fn remove(&mut self, x: usize) {
        if x < MAX_ELEMENTS {
            self.0 &= !(1u128 << x);
        }
    }

    pub fn with(mut self, x: usize) -> Self {
        self.insert(x);
        self
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: Subset) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest index plus one (0 for the empty set).
    pub fn bound(self) -> usize {
        MAX_ELEMENTS - self.0.leading_zeros() as usize
    }

    pub fn iter(self) -> Members {
        Members(self.0)
    }

    /// All subsets of `self`, including the empty set and `self`, in
    /// increasing bitmask order.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }
}

impl BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Subset) -> Subset {
        Subset(self.0 & rhs.0)
    }
}

impl BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Subset) -> Subset {
        Subset(self.0 | rhs.0)
    }
}

impl Sub for Subset {
    type Output = Subset;
    fn sub(self, rhs: Subset) -> Subset {
        Subset(self.0 & !rhs.0)
    }
}

impl Not for Subset {
    type Output = Subset;
    fn not(self) -> Subset {
        Subset(!self.0)
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Subset::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl IntoIterator for Subset {
    type Item = usize;
    type IntoIter = Members;
    fn into_iter(self) -> Members {
        self.iter()
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Iterator over the members of a [`Subset`] in increasing order.
#[derive(Clone)]
pub struct Members(u128);

impl Iterator for Members {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

/// Iterator over all subsets of a mask (Gosper-free submask walk).
#[derive(Clone)]
pub struct Subsets {
    mask: u128,
    next: Option<u128>,
}

impl Iterator for Subsets {
    type Item = Subset;
    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            // next submask in increasing order
            Some(((cur | !self.mask).wrapping_add(1)) & self.mask)
        };
        Some(Subset(cur))
    }
}
