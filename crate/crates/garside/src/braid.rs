//! The classical braid monoid Bₙ⁺ as a Garside structure.
//!
//! Simples are permutation braids: positive braids in which every pair of
//! strands crosses at most once, encoded by the permutation they induce on
//! strand positions. Δ is the half twist, whose permutation reverses the
//! strand order. Words are read left to right, and the permutation table
//! maps a strand's starting position to its ending position.

use crate::error::{Error, Result};
use crate::structure::Structure;

/// Default cap on the strand count; keeps simple enumeration, which is n!,
/// out of reach of accidental misuse while leaving desk-scale ranks free.
pub const MAX_STRANDS: usize = 16;

/// A permutation braid on `n` strands, stored as the image table of the
/// induced permutation of positions 0..n.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BraidSimple(Vec<u8>);

impl BraidSimple {
    /// Image table: entry `i` is the ending position of the strand that
    /// starts at position `i` (0-based).
    pub fn images(&self) -> &[u8] {
        &self.0
    }

    fn inversions(&self) -> usize {
        let t = &self.0;
        let mut count = 0;
        for i in 0..t.len() {
            for j in i + 1..t.len() {
                if t[i] > t[j] {
                    count += 1;
                }
            }
        }
        count
    }

    fn inverse_table(&self) -> Vec<u8> {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &img) in self.0.iter().enumerate() {
            inv[img as usize] = i as u8;
        }
        inv
    }
}

/// The braid monoid on a fixed number of strands.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Braid {
    strands: usize,
}

impl Braid {
    /// Braid structure on `n` strands, 2 ≤ n ≤ [`MAX_STRANDS`].
    pub fn new(strands: usize) -> Result<Self> {
        Self::with_max(strands, MAX_STRANDS)
    }

    /// Same as [`Braid::new`] with a caller-chosen cap.
    pub fn with_max(strands: usize, max: usize) -> Result<Self> {
        if strands < 2 || strands > max {
            return Err(Error::Rank {
                rank: strands,
                min: 2,
                max,
            });
        }
        Ok(Braid { strands })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Builds the permutation braid inducing the given position permutation.
    pub fn simple_from_permutation(&self, images: &[usize]) -> Result<BraidSimple> {
        let n = self.strands;
        if images.len() != n {
            return Err(Error::PermutationArity { expected: n });
        }
        let mut seen = vec![false; n];
        for &img in images {
            if img >= n || seen[img] {
                return Err(Error::PermutationArity { expected: n });
            }
            seen[img] = true;
        }
        Ok(BraidSimple(images.iter().map(|&i| i as u8).collect()))
    }

    /// Decides whether a positive word spells a simple element, i.e. whether
    /// every pair of strands crosses at most once along the word.
    pub fn word_is_simple(&self, word: &[usize]) -> bool {
        self.simple_from_word(word).is_some()
    }
}

impl Structure for Braid {
    type Simple = BraidSimple;

    fn name(&self) -> String {
        format!("braid:{}", self.strands)
    }

    fn atom_count(&self) -> usize {
        self.strands - 1
    }

    fn max_word_length(&self) -> usize {
        self.strands * (self.strands - 1) / 2
    }

    fn identity(&self) -> BraidSimple {
        BraidSimple((0..self.strands as u8).collect())
    }

    fn delta(&self) -> BraidSimple {
        BraidSimple((0..self.strands as u8).rev().collect())
    }

    fn atom(&self, i: usize) -> BraidSimple {
        assert!(i + 1 < self.strands, "atom index out of range");
        let mut t: Vec<u8> = (0..self.strands as u8).collect();
        t.swap(i, i + 1);
        BraidSimple(t)
    }

    fn atom_len(&self, s: &BraidSimple) -> usize {
        s.inversions()
    }

    fn atom_divides(&self, i: usize, s: &BraidSimple) -> bool {
        // σᵢ ≤_L s exactly when the strands starting at positions i, i+1
        // cross in s.
        s.0[i] > s.0[i + 1]
    }

    fn quotient_by_atom(&self, i: usize, s: &BraidSimple) -> BraidSimple {
        let mut t = s.0.clone();
        t.swap(i, i + 1);
        BraidSimple(t)
    }

    fn compose(&self, a: &BraidSimple, b: &BraidSimple) -> Option<BraidSimple> {
        let product = BraidSimple(a.0.iter().map(|&i| b.0[i as usize]).collect());
        // The concatenated reduced words stay reduced exactly when the
        // crossing counts add; otherwise some pair crosses twice.
        if product.inversions() == a.inversions() + b.inversions() {
            Some(product)
        } else {
            None
        }
    }

    fn left_quotient(&self, a: &BraidSimple, b: &BraidSimple) -> Option<BraidSimple> {
        let a_inv = a.inverse_table();
        let q = BraidSimple(a_inv.iter().map(|&i| b.0[i as usize]).collect());
        if a.inversions() + q.inversions() == b.inversions() {
            Some(q)
        } else {
            None
        }
    }

    fn right_complement(&self, s: &BraidSimple) -> BraidSimple {
        let n = self.strands as u8;
        let s_inv = s.inverse_table();
        BraidSimple((0..n).map(|j| n - 1 - s_inv[j as usize]).collect())
    }

    fn tau(&self, s: &BraidSimple, k: i64) -> BraidSimple {
        // Δ² is central, so τ has order at most two.
        if k.rem_euclid(2) == 0 {
            return s.clone();
        }
        let n = self.strands;
        BraidSimple((0..n).map(|j| (n - 1) as u8 - s.0[n - 1 - j]).collect())
    }

    fn reverse(&self, s: &BraidSimple) -> BraidSimple {
        // Reversing a reduced word inverts the induced permutation.
        BraidSimple(s.inverse_table())
    }

    fn word(&self, s: &BraidSimple) -> Vec<usize> {
        // Smallest descent first; deterministic reduced word.
        let mut cur = s.clone();
        let mut word = Vec::with_capacity(cur.inversions());
        loop {
            let mut descent = None;
            for i in 0..self.strands - 1 {
                if cur.0[i] > cur.0[i + 1] {
                    descent = Some(i);
                    break;
                }
            }
            match descent {
                Some(i) => {
                    word.push(i);
                    cur.0.swap(i, i + 1);
                }
                None => return word,
            }
        }
    }

    fn simples(&self) -> Box<dyn Iterator<Item = BraidSimple> + '_> {
        Box::new(Permutations::new(self.strands).map(BraidSimple))
    }
}

/// Lexicographic enumeration of all permutations of 0..n.
struct Permutations {
    next: Option<Vec<u8>>,
}

impl Permutations {
    fn new(n: usize) -> Self {
        Permutations {
            next: Some((0..n as u8).collect()),
        }
    }
}

impl Iterator for Permutations {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        // Standard next-permutation step.
        let n = succ.len();
        let mut i = n.saturating_sub(1);
        while i > 0 && succ[i - 1] >= succ[i] {
            i -= 1;
        }
        if i == 0 {
            self.next = None;
        } else {
            let mut j = n - 1;
            while succ[j] <= succ[i - 1] {
                j -= 1;
            }
            succ.swap(i - 1, j);
            succ[i..].reverse();
            self.next = Some(succ);
        }
        Some(cur)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b4() -> Braid {
        Braid::new(4).unwrap()
    }

    #[test]
    fn delta_word_is_half_twist() {
        let b = b4();
        assert_eq!(b.delta_word(), vec![0, 1, 0, 2, 1, 0]);
        assert_eq!(b.delta_word().len(), b.max_word_length());
        assert_eq!(b.delta().images(), &[3, 2, 1, 0]);
    }

    #[test]
    fn word_simplicity() {
        let b = b4();
        assert!(b.word_is_simple(&[0, 1, 0]));
        assert!(!b.word_is_simple(&[0, 0]));
        assert!(b.word_is_simple(&[]));
    }

    #[test]
    fn atom_is_transposition() {
        let b = b4();
        assert_eq!(b.atom(0).images(), &[1, 0, 2, 3]);
        assert_eq!(b.identity().images(), &[0, 1, 2, 3]);
    }

    #[test]
    fn permutation_round_trip() {
        let b = b4();
        for s in b.simples() {
            let word = b.word(&s);
            assert_eq!(word.len(), b.atom_len(&s));
            assert_eq!(b.simple_from_word(&word), Some(s.clone()));
            let rebuilt = b
                .simple_from_permutation(
                    &s.images().iter().map(|&i| i as usize).collect::<Vec<_>>(),
                )
                .unwrap();
            assert_eq!(rebuilt, s);
        }
    }

    #[test]
    fn permutation_arity_checked() {
        let b = b4();
        assert!(b.simple_from_permutation(&[0, 1, 2]).is_err());
        assert!(b.simple_from_permutation(&[0, 0, 1, 2]).is_err());
    }

    #[test]
    fn complement_lengths_sum_to_delta() {
        for n in [3, 4] {
            let b = Braid::new(n).unwrap();
            for s in b.simples() {
                let c = b.right_complement(&s);
                assert_eq!(b.atom_len(&s) + b.atom_len(&c), b.max_word_length());
                assert_eq!(b.compose(&s, &c), Some(b.delta()));
            }
        }
    }

    #[test]
    fn tau_conjugates_by_reversal() {
        for n in [3, 4] {
            let b = Braid::new(n).unwrap();
            let w0 = b.delta();
            for s in b.simples() {
                // τ(s) = Δ⁻¹ s Δ at the permutation level.
                let lhs = b.tau(&s, 1);
                let tmp = BraidSimple(w0.0.iter().map(|&i| s.0[i as usize]).collect());
                let rhs = BraidSimple(tmp.0.iter().map(|&i| w0.0[i as usize]).collect());
                assert_eq!(lhs, rhs);
                assert_eq!(b.tau(&s, 2), s);
                assert_eq!(b.tau(&b.tau(&s, 1), -1), s);
            }
        }
        let b = b4();
        assert_eq!(b.tau(&b.atom(0), 1), b.atom(2));
        assert_eq!(b.tau(&b.atom(1), 1), b.atom(1));
    }

    #[test]
    fn reverse_matches_word_reversal() {
        for n in [3, 4] {
            let b = Braid::new(n).unwrap();
            for s in b.simples() {
                let mut w = b.word(&s);
                w.reverse();
                assert_eq!(b.simple_from_word(&w), Some(b.reverse(&s)));
            }
            assert_eq!(b.reverse(&b.delta()), b.delta());
        }
    }

    /// Exhaustive oracle for divisibility and meets at n ≤ 5: the descent
    /// characterization must agree with brute-force divisor enumeration.
    #[test]
    fn meet_agrees_with_divisor_enumeration() {
        for n in [3, 4, 5] {
            let b = Braid::new(n).unwrap();
            let all: Vec<_> = b.simples().collect();
            for a in &all {
                for c in &all {
                    let brute_divides = all.iter().any(|u| b.compose(a, u).as_ref() == Some(c));
                    assert_eq!(b.divides(a, c), brute_divides, "divides({a:?},{c:?})");
                }
            }
            for x in &all {
                for y in &all {
                    let meet = b.meet(x, y);
                    // Greatest common divisor by exhaustion.
                    let mut best: Option<&BraidSimple> = None;
                    for d in &all {
                        if b.divides(d, x) && b.divides(d, y) {
                            let better = match best {
                                None => true,
                                Some(cur) => b.atom_len(d) > b.atom_len(cur),
                            };
                            if better {
                                best = Some(d);
                            }
                        }
                    }
                    let best = best.unwrap();
                    assert_eq!(&meet, best, "meet({x:?},{y:?})");
                    // Every common divisor divides the meet.
                    for d in &all {
                        if b.divides(d, x) && b.divides(d, y) {
                            assert!(b.divides(d, &meet));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn simple_meet_examples() {
        let b = b4();
        let s = b.simple_from_word(&[0, 1]).unwrap();
        for t in b.simples() {
            assert_eq!(b.meet(&b.delta(), &t), t);
        }
        let t = b.simple_from_word(&[0, 2]).unwrap();
        assert_eq!(b.meet(&s, &t), b.atom(0));
    }

    /// Garside axiom check by exhaustion: every atom divides Δ on both
    /// sides, and the simples are closed under the meet.
    #[test]
    fn atoms_divide_delta_both_sides() {
        for n in [3, 4] {
            let b = Braid::new(n).unwrap();
            let all: Vec<_> = b.simples().collect();
            for i in 0..b.atom_count() {
                let a = b.atom(i);
                assert!(b.divides(&a, &b.delta()));
                assert!(
                    all.iter().any(|u| b.compose(u, &a) == Some(b.delta())),
                    "atom {i} must right-divide delta"
                );
            }
            for x in &all {
                for y in &all {
                    assert!(all.contains(&b.meet(x, y)));
                }
            }
        }
    }

    #[test]
    fn rank_bounds_enforced() {
        assert!(Braid::new(1).is_err());
        assert!(Braid::new(17).is_err());
        assert!(Braid::new(16).is_ok());
        assert!(Braid::with_max(20, 24).is_ok());
    }
}
