//! The Garside-structure contract.
//!
//! A [`Structure`] describes one concrete Garside monoid through its finite
//! lattice of simple elements: the divisors of the Garside element Δ. All
//! element arithmetic (normal forms, meets, joins, conjugacy machinery) is
//! generic over this trait; the crate bundles two implementations, the
//! classical braid monoid ([`crate::braid::Braid`]) and the free-abelian
//! lattice ([`crate::zn::FreeAbelian`]).

use std::fmt::Debug;
use std::hash::Hash;

/// A concrete Garside structure.
///
/// `Simple` values are canonical payloads for divisors of Δ (a permutation
/// for braids, an atom subset for the free-abelian structure). The identity
/// and Δ itself are simples. Implementations must guarantee:
///
/// * every atom left- and right-divides Δ,
/// * the simples form a finite lattice under left divisibility,
/// * `compose(s, right_complement(s)) = Δ` for every simple `s`.
pub trait Structure: Clone + PartialEq + Eq + Debug {
    type Simple: Clone + PartialEq + Eq + Hash + Debug;

    /// Selector string, e.g. `braid:4` or `zn:3`.
    fn name(&self) -> String;

    /// Number of atoms (n−1 for the braid monoid on n strands, n for ℤⁿ).
    fn atom_count(&self) -> usize;

    /// Maximal atom-length of Δ (written L below).
    fn max_word_length(&self) -> usize;

    fn identity(&self) -> Self::Simple;

    fn delta(&self) -> Self::Simple;

    /// The atom with 0-based index `i`.
    fn atom(&self, i: usize) -> Self::Simple;

    /// Atom-length of a simple; 0 for the identity, L for Δ.
    fn atom_len(&self, s: &Self::Simple) -> usize;

    /// Greatest common left-divisor inside the simple lattice.
    ///
    /// The default peels common atom divisors one at a time: any common atom
    /// left-divides the meet, so quotienting both arguments by it and
    /// recursing is exact, and an empty common-atom set certifies a trivial
    /// meet (every nontrivial positive element has an atom divisor).
    fn meet(&self, a: &Self::Simple, b: &Self::Simple) -> Self::Simple {
        let mut a = a.clone();
        let mut b = b.clone();
        let mut word = Vec::new();
        'peel: loop {
            for i in 0..self.atom_count() {
                if self.atom_divides(i, &a) && self.atom_divides(i, &b) {
                    a = self.quotient_by_atom(i, &a);
                    b = self.quotient_by_atom(i, &b);
                    word.push(i);
                    continue 'peel;
                }
            }
            break;
        }
        let mut m = self.identity();
        for i in word {
            m = self
                .compose(&m, &self.atom(i))
                .expect("meet word stays simple");
        }
        m
    }

    /// True when atom `i` left-divides `s`.
    fn atom_divides(&self, i: usize, s: &Self::Simple) -> bool;

    /// Left quotient `atom(i)⁻¹·s`; caller guarantees divisibility.
    fn quotient_by_atom(&self, i: usize, s: &Self::Simple) -> Self::Simple;

    /// `a·b` when the product is again simple, else `None`.
    fn compose(&self, a: &Self::Simple, b: &Self::Simple) -> Option<Self::Simple>;

    /// `a⁻¹·b` when `a` left-divides `b`, else `None`.
    fn left_quotient(&self, a: &Self::Simple, b: &Self::Simple) -> Option<Self::Simple>;

    /// Right complement ∂(s) = s⁻¹Δ, the unique simple with s·∂(s) = Δ.
    fn right_complement(&self, s: &Self::Simple) -> Self::Simple;

    /// τᵏ(s) = Δ⁻ᵏ s Δᵏ; an automorphism of the simple lattice.
    fn tau(&self, s: &Self::Simple, k: i64) -> Self::Simple;

    /// The word-reversal anti-automorphism restricted to simples.
    ///
    /// Fixes Δ and swaps left with right divisibility; used to reduce right
    /// meets (and hence joins) to the left-handed machinery.
    fn reverse(&self, s: &Self::Simple) -> Self::Simple;

    /// Canonical reduced atom word for a simple (0-based indices).
    fn word(&self, s: &Self::Simple) -> Vec<usize>;

    /// All simples in a deterministic order, identity and Δ included.
    ///
    /// Exponential in the rank; callers that iterate this carry a budget.
    fn simples(&self) -> Box<dyn Iterator<Item = Self::Simple> + '_>;

    fn is_identity(&self, s: &Self::Simple) -> bool {
        self.atom_len(s) == 0
    }

    fn is_delta(&self, s: &Self::Simple) -> bool {
        self.atom_len(s) == self.max_word_length()
    }

    /// Left divisibility `a ≤_L b` within the simple lattice.
    fn divides(&self, a: &Self::Simple, b: &Self::Simple) -> bool {
        self.left_quotient(a, b).is_some()
    }

    /// Parses a positive atom word into a simple, or `None` when the word
    /// does not spell a divisor of Δ.
    fn simple_from_word(&self, word: &[usize]) -> Option<Self::Simple> {
        let mut s = self.identity();
        for &i in word {
            s = self.compose(&s, &self.atom(i))?;
        }
        Some(s)
    }

    /// Δ spelled in atoms; has length `max_word_length()`.
    fn delta_word(&self) -> Vec<usize> {
        self.word(&self.delta())
    }

    /// Comparison key used wherever deterministic output ordering matters.
    fn simple_key(&self, s: &Self::Simple) -> (usize, Vec<usize>) {
        (self.atom_len(s), self.word(s))
    }
}
