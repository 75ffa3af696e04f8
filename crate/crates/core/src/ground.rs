//! Ground sets of jointly distributed variables and bit-set subsets of them.
//!
//! Element 0 is the secret, elements `1..=r` are the party shares, and
//! copy-lemma extensions append at indices `>= r + 1`. Appending never
//! renumbers existing elements, so subset coordinates stay stable while a
//! problem grows.

use alloc::string::String;
use alloc::vec::Vec;

pub const MAX_GROUND: usize = 20;

/// A subset of ground-set elements, packed as bits (element `i` is bit `i`).
///
/// The coordinate index of a nonempty subset is its bit pattern read as an
/// integer in `1..=2^n - 1`; the empty set is never a coordinate.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SubsetMask(pub u32);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub fn singleton(i: usize) -> SubsetMask {
        debug_assert!(i < MAX_GROUND);
        SubsetMask(1 << i)
    }

    pub fn from_elements(elements: &[usize]) -> SubsetMask {
        let mut bits = 0u32;
        for &e in elements {
            debug_assert!(e < MAX_GROUND);
            bits |= 1 << e;
        }
        SubsetMask(bits)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn is_subset_of(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 | other.0)
    }

    pub fn intersection(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & other.0)
    }

    pub fn difference(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & !other.0)
    }

    pub fn with(self, i: usize) -> SubsetMask {
        self.union(SubsetMask::singleton(i))
    }

    /// Element indices in ascending order.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..MAX_GROUND).filter(move |i| bits >> i & 1 == 1)
    }

    /// All subsets of `self`, in ascending mask order (starts with the
    /// empty mask, ends with `self`).
    pub fn subsets(self) -> Subsets {
        Subsets {
            universe: self.0,
            next: Some(0),
        }
    }
}

impl core::fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{{")?;
        for (k, e) in self.elements().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Iterator over all submasks of a universe, ascending.
pub struct Subsets {
    universe: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = SubsetMask;

    fn next(&mut self) -> Option<SubsetMask> {
        let cur = self.next?;
        // Standard submask enumeration: (cur - universe) & universe steps
        // to the next submask in increasing order.
        self.next = if cur == self.universe {
            None
        } else {
            Some(cur.wrapping_sub(self.universe) & self.universe)
        };
        Some(SubsetMask(cur))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroundError {
    DuplicateLabel(String),
    TooLarge { requested: usize },
    UnknownLabel(String),
    EmptySubset,
    OutOfRange { index: usize, size: usize },
}

impl core::fmt::Display for GroundError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GroundError::DuplicateLabel(l) => write!(f, "duplicate ground-set label {l:?}"),
            GroundError::TooLarge { requested } => {
                write!(f, "ground set of {requested} elements exceeds the limit of {MAX_GROUND}")
            }
            GroundError::UnknownLabel(l) => write!(f, "unknown ground-set label {l:?}"),
            GroundError::EmptySubset => write!(f, "the empty set is not an entropy coordinate"),
            GroundError::OutOfRange { index, size } => {
                write!(f, "element index {index} out of range for ground set of size {size}")
            }
        }
    }
}

impl core::error::Error for GroundError {}

/// Ordered, uniquely labelled ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundSet {
    names: Vec<String>,
}

impl GroundSet {
    pub fn new(names: Vec<String>) -> Result<GroundSet, GroundError> {
        if names.len() > MAX_GROUND {
            return Err(GroundError::TooLarge {
                requested: names.len(),
            });
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(GroundError::DuplicateLabel(a.clone()));
            }
        }
        Ok(GroundSet { names })
    }

    /// Secret plus `r` shares, labelled `"0"`, `"1"`, ..., `"r"`.
    pub fn secret_sharing(r: usize) -> GroundSet {
        let names = (0..=r).map(|i| alloc::format!("{i}")).collect();
        GroundSet::new(names).expect("small numeric labels are valid")
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(String::as_str)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.names.iter().position(|n| n == label)
    }

    /// Appends one element; existing indices are untouched.
    pub fn push(&mut self, label: String) -> Result<usize, GroundError> {
        if self.names.len() == MAX_GROUND {
            return Err(GroundError::TooLarge {
                requested: self.names.len() + 1,
            });
        }
        if self.names.contains(&label) {
            return Err(GroundError::DuplicateLabel(label));
        }
        self.names.push(label);
        Ok(self.names.len() - 1)
    }

    /// Every element as one mask.
    pub fn full_mask(&self) -> SubsetMask {
        SubsetMask((1u32 << self.size()) - 1)
    }

    pub fn contains_mask(&self, s: SubsetMask) -> bool {
        s.is_subset_of(self.full_mask())
    }
}

/// Coordinate index of a nonempty subset: its bit pattern as an integer.
///
/// Bijective onto `1..=2^n - 1` and stable when the ground set grows.
pub fn coord_index(s: SubsetMask) -> Result<u32, GroundError> {
    if s.is_empty() {
        return Err(GroundError::EmptySubset);
    }
    Ok(s.0)
}

/// Inverse of [`coord_index`].
pub fn coord_mask(index: u32) -> Result<SubsetMask, GroundError> {
    if index == 0 {
        return Err(GroundError::EmptySubset);
    }
    Ok(SubsetMask(index))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coord_index_matches_bit_patterns() {
        assert_eq!(coord_index(SubsetMask::from_elements(&[0])).unwrap(), 1);
        assert_eq!(coord_index(SubsetMask::from_elements(&[0, 1, 2])).unwrap(), 7);
        assert_eq!(coord_index(SubsetMask::from_elements(&[2])).unwrap(), 4);
        assert!(coord_index(SubsetMask::EMPTY).is_err());
    }

    #[test]
    fn coord_index_round_trips_exhaustively() {
        // n = 12 keeps this fast while covering far more than the small cases.
        for idx in 1u32..1 << 12 {
            let mask = coord_mask(idx).unwrap();
            assert_eq!(coord_index(mask).unwrap(), idx);
        }
    }

    #[test]
    fn coord_index_is_stable_under_extension() {
        let mut g = GroundSet::secret_sharing(3);
        let s = SubsetMask::from_elements(&[1, 3]);
        let before = coord_index(s).unwrap();
        g.push("0'".into()).unwrap();
        assert_eq!(coord_index(s).unwrap(), before);
        assert_eq!(g.index_of("0'"), Some(4));
    }

    #[test]
    fn subset_enumeration_is_ascending_and_complete() {
        let u = SubsetMask::from_elements(&[0, 2, 3]);
        let all: Vec<u32> = u.subsets().map(|m| m.0).collect();
        assert_eq!(all, alloc::vec![0b0000, 0b0001, 0b0100, 0b0101, 0b1000, 0b1001, 0b1100, 0b1101]);
    }

    #[test]
    fn ground_set_rejects_duplicates_and_overflow() {
        assert!(GroundSet::new(alloc::vec!["a".into(), "a".into()]).is_err());
        let mut g = GroundSet::secret_sharing(7);
        assert_eq!(g.size(), 8);
        for i in 0..12 {
            g.push(alloc::format!("c{i}")).unwrap();
        }
        assert!(g.push("c12".into()).is_err());
        assert!(g.push("0".into()).is_err());
    }
}
