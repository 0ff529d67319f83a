//! The free-abelian group ℤⁿ as a Garside structure.
//!
//! Atoms are the standard generators, Δ is their product, and the simples
//! are exactly the subsets of atoms, so the simple lattice is boolean. Every
//! element is alone in its conjugacy class, which makes this structure a
//! degenerate-case oracle for the conjugacy machinery.

use crate::error::{Error, Result};
use crate::structure::Structure;

pub const MAX_RANK: usize = 16;

/// A subset of atoms, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct AtomSet(u32);

impl AtomSet {
    pub fn mask(&self) -> u32 {
        self.0
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }
}

/// ℤⁿ with the coordinatewise Garside structure.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FreeAbelian {
    rank: usize,
}

impl FreeAbelian {
    pub fn new(rank: usize) -> Result<Self> {
        if !(1..=MAX_RANK).contains(&rank) {
            return Err(Error::Rank {
                rank,
                min: 1,
                max: MAX_RANK,
            });
        }
        Ok(FreeAbelian { rank })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    fn full(&self) -> u32 {
        (1u32 << self.rank) - 1
    }
}

impl Structure for FreeAbelian {
    type Simple = AtomSet;

    fn name(&self) -> String {
        format!("zn:{}", self.rank)
    }

    fn atom_count(&self) -> usize {
        self.rank
    }

    fn max_word_length(&self) -> usize {
        self.rank
    }

    fn identity(&self) -> AtomSet {
        AtomSet(0)
    }

    fn delta(&self) -> AtomSet {
        AtomSet(self.full())
    }

    fn atom(&self, i: usize) -> AtomSet {
        assert!(i < self.rank, "atom index out of range");
        AtomSet(1 << i)
    }

    fn atom_len(&self, s: &AtomSet) -> usize {
        s.0.count_ones() as usize
    }

    fn meet(&self, a: &AtomSet, b: &AtomSet) -> AtomSet {
        AtomSet(a.0 & b.0)
    }

    fn atom_divides(&self, i: usize, s: &AtomSet) -> bool {
        s.contains(i)
    }

    fn quotient_by_atom(&self, i: usize, s: &AtomSet) -> AtomSet {
        AtomSet(s.0 & !(1 << i))
    }

    fn compose(&self, a: &AtomSet, b: &AtomSet) -> Option<AtomSet> {
        // Products with a repeated atom are no longer squarefree, hence not
        // divisors of Δ.
        if a.0 & b.0 == 0 {
            Some(AtomSet(a.0 | b.0))
        } else {
            None
        }
    }

    fn left_quotient(&self, a: &AtomSet, b: &AtomSet) -> Option<AtomSet> {
        if a.0 & b.0 == a.0 {
            Some(AtomSet(b.0 & !a.0))
        } else {
            None
        }
    }

    fn right_complement(&self, s: &AtomSet) -> AtomSet {
        AtomSet(self.full() & !s.0)
    }

    fn tau(&self, s: &AtomSet, _k: i64) -> AtomSet {
        *s
    }

    fn reverse(&self, s: &AtomSet) -> AtomSet {
        *s
    }

    fn word(&self, s: &AtomSet) -> Vec<usize> {
        (0..self.rank).filter(|&i| s.contains(i)).collect()
    }

    fn simples(&self) -> Box<dyn Iterator<Item = AtomSet> + '_> {
        Box::new((0..=self.full()).map(AtomSet))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_lattice_exhaustive() {
        let z = FreeAbelian::new(3).unwrap();
        let all: Vec<_> = z.simples().collect();
        assert_eq!(all.len(), 8);
        for a in &all {
            for b in &all {
                assert_eq!(z.meet(a, b).mask(), a.mask() & b.mask());
                assert_eq!(z.divides(a, b), a.mask() & b.mask() == a.mask());
            }
            let c = z.right_complement(a);
            assert_eq!(z.compose(a, &c), Some(z.delta()));
            assert_eq!(z.atom_len(a) + z.atom_len(&c), z.max_word_length());
        }
    }

    #[test]
    fn subset_meet_example() {
        let z = FreeAbelian::new(2).unwrap();
        let a = z.atom(0);
        let ab = z.delta();
        assert_eq!(z.meet(&a, &ab), a);
        assert_eq!(z.delta_word().len(), z.max_word_length());
    }

    #[test]
    fn element_join_is_union() {
        use crate::element::Element;
        let z = FreeAbelian::new(3).unwrap();
        for (x, y) in [(0b001u32, 0b010), (0b011, 0b110), (0b101, 0b101)] {
            let ex = Element::from_simple(&z, AtomSet(x));
            let ey = Element::from_simple(&z, AtomSet(y));
            assert_eq!(ex.left_join(&ey), Element::from_simple(&z, AtomSet(x | y)));
            assert_eq!(ex.left_meet(&ey), Element::from_simple(&z, AtomSet(x & y)));
        }
    }

    #[test]
    fn rank_bounds() {
        assert!(FreeAbelian::new(0).is_err());
        assert!(FreeAbelian::new(17).is_err());
    }
}
