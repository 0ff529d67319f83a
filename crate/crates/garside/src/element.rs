//! Group elements in left-greedy normal form.
//!
//! Every element is stored as Δʳ s₁⋯s_k where the sᵢ are simples different
//! from 1 and Δ and each sᵢ is the largest simple prefix of sᵢ⋯s_k. The
//! normal form is unique, so structural equality solves the word problem.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::structure::Structure;

/// A group element of the Garside group over `S`, kept in normal form.
#[derive(Clone, Debug)]
pub struct Element<S: Structure> {
    structure: S,
    delta_power: i64,
    factors: Vec<S::Simple>,
}

impl<S: Structure> PartialEq for Element<S> {
    fn eq(&self, other: &Self) -> bool {
        self.structure == other.structure
            && self.delta_power == other.delta_power
            && self.factors == other.factors
    }
}

impl<S: Structure> Eq for Element<S> {}

impl<S: Structure> Hash for Element<S> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.delta_power.hash(state);
        self.factors.hash(state);
    }
}

impl<S: Structure> fmt::Display for Element<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_word())
    }
}

impl<S: Structure> Element<S> {
    pub fn identity(structure: &S) -> Self {
        Element {
            structure: structure.clone(),
            delta_power: 0,
            factors: Vec::new(),
        }
    }

    pub fn delta_power(structure: &S, r: i64) -> Self {
        Element {
            structure: structure.clone(),
            delta_power: r,
            factors: Vec::new(),
        }
    }

    /// Wraps a simple as an element, absorbing 1 and Δ into the Δ-power.
    pub fn from_simple(structure: &S, s: S::Simple) -> Self {
        Element::from_raw(structure.clone(), 0, vec![s])
    }

    pub fn atom_element(structure: &S, i: usize) -> Self {
        Element::from_simple(structure, structure.atom(i))
    }

    /// Normalizes a word of signed atoms. Atoms are 1-based and signed:
    /// `+k` is the k-th atom, `-k` its inverse.
    pub fn normalize(structure: &S, word: &[i64]) -> Result<Self> {
        let count = structure.atom_count();
        for &t in word {
            let idx = t.unsigned_abs() as usize;
            if t == 0 || idx > count {
                return Err(Error::AtomRange { index: idx, count });
            }
        }
        // Fold maximal sign runs; a positive run normalizes in one pass and
        // a negative run is the inverse of one.
        let mut acc = Element::identity(structure);
        let mut i = 0;
        while i < word.len() {
            let positive = word[i] > 0;
            let mut run = Vec::new();
            while i < word.len() && (word[i] > 0) == positive {
                run.push(structure.atom(word[i].unsigned_abs() as usize - 1));
                i += 1;
            }
            let piece = if positive {
                Element::from_raw(structure.clone(), 0, run)
            } else {
                // a⁻¹b⁻¹⋯ = (⋯ba)⁻¹: invert the reversed positive run.
                run.reverse();
                Element::from_raw(structure.clone(), 0, run).inverse()
            };
            acc = acc.multiply(&piece);
        }
        Ok(acc)
    }

    /// Builds an element from a Δ-power and an arbitrary list of simples,
    /// restoring the left-greedy invariant by local sliding.
    pub(crate) fn from_raw(
        structure: S,
        mut delta_power: i64,
        mut factors: Vec<S::Simple>,
    ) -> Self {
        let s = &structure;
        loop {
            factors.retain(|f| !s.is_identity(f));
            let mut changed = false;
            for i in 0..factors.len().saturating_sub(1) {
                let head = &factors[i];
                if s.is_delta(head) {
                    continue;
                }
                let slide = s.meet(&s.right_complement(head), &factors[i + 1]);
                if !s.is_identity(&slide) {
                    let merged = s
                        .compose(&factors[i], &slide)
                        .expect("slide stays below delta");
                    let rest = s
                        .left_quotient(&slide, &factors[i + 1])
                        .expect("slide divides the next factor");
                    factors[i] = merged;
                    factors[i + 1] = rest;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        // After sliding, Δ factors form a prefix: a non-Δ factor directly
        // before a Δ would still have a nontrivial slide.
        let leading = factors.iter().take_while(|f| s.is_delta(f)).count();
        delta_power += leading as i64;
        factors.drain(..leading);
        debug_assert!(factors.iter().all(|f| !s.is_delta(f) && !s.is_identity(f)));
        Element {
            structure,
            delta_power,
            factors,
        }
    }

    pub fn structure(&self) -> &S {
        &self.structure
    }

    pub fn inf(&self) -> i64 {
        self.delta_power
    }

    pub fn sup(&self) -> i64 {
        self.delta_power + self.factors.len() as i64
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// (inf, sup, canonical length).
    pub fn invariants(&self) -> (i64, i64, usize) {
        (self.inf(), self.sup(), self.len())
    }

    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    pub fn factors(&self) -> &[S::Simple] {
        &self.factors
    }

    fn assert_same_structure(&self, other: &Self) {
        assert!(
            self.structure == other.structure,
            "elements belong to different Garside structures"
        );
    }

    pub fn multiply(&self, other: &Self) -> Self {
        self.assert_same_structure(other);
        let s = &self.structure;
        let shift = other.delta_power;
        let mut factors: Vec<S::Simple> = self.factors.iter().map(|f| s.tau(f, shift)).collect();
        factors.extend(other.factors.iter().cloned());
        Element::from_raw(
            self.structure.clone(),
            self.delta_power + other.delta_power,
            factors,
        )
    }

    pub fn inverse(&self) -> Self {
        let s = &self.structure;
        let r = self.delta_power;
        let k = self.factors.len() as i64;
        // (Δʳ s₁⋯s_k)⁻¹ = Δ⁻ʳ⁻ᵏ · τ⁻ʳ⁻ᵏ(∂s_k) · τ⁻ʳ⁻ᵏ⁺¹(∂s_{k−1}) ⋯ τ⁻ʳ⁻¹(∂s₁).
        let factors: Vec<S::Simple> = self
            .factors
            .iter()
            .rev()
            .enumerate()
            .map(|(i, f)| s.tau(&s.right_complement(f), -r - k + i as i64))
            .collect();
        Element::from_raw(self.structure.clone(), -r - k, factors)
    }

    pub fn pow(&self, n: i64) -> Self {
        if n == 0 {
            return Element::identity(&self.structure);
        }
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut exp = n.unsigned_abs();
        let mut acc = Element::identity(&self.structure);
        let mut sq = base;
        loop {
            if exp & 1 == 1 {
                acc = acc.multiply(&sq);
            }
            exp >>= 1;
            if exp == 0 {
                return acc;
            }
            sq = sq.multiply(&sq);
        }
    }

    /// τᵖ(x) = Δ⁻ᵖ x Δᵖ. Acts factorwise and preserves the normal form.
    pub fn tau(&self, p: i64) -> Self {
        let s = &self.structure;
        Element {
            structure: self.structure.clone(),
            delta_power: self.delta_power,
            factors: self.factors.iter().map(|f| s.tau(f, p)).collect(),
        }
    }

    /// w⁻¹·x·w.
    pub fn conjugate(&self, w: &Self) -> Self {
        w.inverse().multiply(self).multiply(w)
    }

    pub fn conjugate_by_simple(&self, c: &S::Simple) -> Self {
        self.conjugate(&Element::from_simple(&self.structure, c.clone()))
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self.multiply(other) == other.multiply(self)
    }

    /// First greedy factor including Δ-powers: x ∧_L Δ for positive x.
    fn positive_head(&self) -> S::Simple {
        if self.delta_power >= 1 {
            self.structure.delta()
        } else if let Some(f) = self.factors.first() {
            f.clone()
        } else {
            self.structure.identity()
        }
    }

    /// Greatest common left-divisor of two positive elements.
    fn positive_meet(&self, other: &Self) -> Self {
        debug_assert!(self.inf() >= 0 && other.inf() >= 0);
        let s = self.structure.clone();
        let mut x = self.clone();
        let mut y = other.clone();
        let mut parts = Vec::new();
        loop {
            let head = s.meet(&x.positive_head(), &y.positive_head());
            if s.is_identity(&head) {
                break;
            }
            let h = Element::from_simple(&s, head.clone());
            let h_inv = h.inverse();
            x = h_inv.multiply(&x);
            y = h_inv.multiply(&y);
            parts.push(head);
        }
        Element::from_raw(s, 0, parts)
    }

    /// x ∧_L y in the group lattice.
    ///
    /// Both arguments are shifted positive by a common right Δ-power, met in
    /// the monoid, and shifted back; right Δ-multiplication commutes with ∧_L.
    pub fn left_meet(&self, other: &Self) -> Self {
        self.assert_same_structure(other);
        let u = 0i64.max(-self.inf()).max(-other.inf());
        let shift = Element::delta_power(&self.structure, u);
        let x = self.multiply(&shift);
        let y = other.multiply(&shift);
        x.positive_meet(&y)
            .multiply(&Element::delta_power(&self.structure, -u))
    }

    /// Word-reversal anti-automorphism extended to elements.
    fn reverse(&self) -> Self {
        let s = &self.structure;
        let r = self.delta_power;
        let factors: Vec<S::Simple> = self
            .factors
            .iter()
            .rev()
            .map(|f| s.tau(&s.reverse(f), r))
            .collect();
        Element::from_raw(self.structure.clone(), r, factors)
    }

    /// x ∨_L y in the group lattice.
    ///
    /// Computed from the meet through the complement anti-isomorphism:
    /// shift positive, map z ↦ z⁻¹Δᴺ into the right-divisor lattice of Δᴺ,
    /// take the right meet there (a reversed left meet), and map back.
    pub fn left_join(&self, other: &Self) -> Self {
        self.assert_same_structure(other);
        let s = &self.structure;
        let u = 0i64.max(-self.inf()).max(-other.inf());
        let shift = Element::delta_power(s, u);
        let x = self.multiply(&shift);
        let y = other.multiply(&shift);
        let n = x.sup().max(y.sup()).max(0);
        let dn = Element::delta_power(s, n);
        let cx = x.inverse().multiply(&dn);
        let cy = y.inverse().multiply(&dn);
        let right_meet = cx.reverse().positive_meet(&cy.reverse()).reverse();
        dn.multiply(&right_meet.inverse())
            .multiply(&Element::delta_power(s, -u))
    }

    /// True when `self ≤_L other`, i.e. self⁻¹·other is positive.
    pub fn left_divides(&self, other: &Self) -> bool {
        self.inverse().multiply(other).inf() >= 0
    }

    /// Expands the normal form back into a signed 1-based atom word.
    pub fn to_signed_atoms(&self) -> Vec<i64> {
        let s = &self.structure;
        let mut out = Vec::new();
        let dw = s.delta_word();
        if self.delta_power >= 0 {
            for _ in 0..self.delta_power {
                out.extend(dw.iter().map(|&a| a as i64 + 1));
            }
        } else {
            for _ in 0..-self.delta_power {
                out.extend(dw.iter().rev().map(|&a| -(a as i64 + 1)));
            }
        }
        for f in &self.factors {
            out.extend(s.word(f).iter().map(|&a| a as i64 + 1));
        }
        out
    }

    /// Deterministic total order on normal forms, used for reproducible
    /// member and edge listings.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.delta_power
            .cmp(&other.delta_power)
            .then_with(|| self.factors.len().cmp(&other.factors.len()))
            .then_with(|| {
                for (a, b) in self.factors.iter().zip(&other.factors) {
                    let ord = self
                        .structure
                        .simple_key(a)
                        .cmp(&self.structure.simple_key(b));
                    if ord != Ordering::Equal {
                        return ord;
                    }
                }
                Ordering::Equal
            })
    }

    /// Canonical textual form, parseable by the CLI word syntax.
    pub fn canonical_word(&self) -> String {
        let mut parts = Vec::new();
        if self.delta_power != 0 || self.factors.is_empty() {
            if self.delta_power == 1 {
                parts.push("D".to_string());
            } else {
                parts.push(format!("D^{}", self.delta_power));
            }
        }
        for f in &self.factors {
            for a in self.structure.word(f) {
                parts.push(format!("s{}", a + 1));
            }
        }
        parts.join(" ")
    }

    /// Verifies the left-greedy invariant factor by factor.
    pub fn is_left_greedy(&self) -> bool {
        let s = &self.structure;
        for f in &self.factors {
            if s.is_identity(f) || s.is_delta(f) {
                return false;
            }
        }
        for pair in self.factors.windows(2) {
            if !s.is_identity(&s.meet(&s.right_complement(&pair[0]), &pair[1])) {
                return false;
            }
        }
        true
    }
}
