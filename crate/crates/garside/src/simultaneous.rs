//! Simultaneous conjugacy of commuting tuples and stable super summit sets.
//!
//! One conjugator transports a whole tuple coordinate by coordinate. For
//! commuting tuples the cycling and decycling conjugators of one coordinate
//! preserve super/ultra summit membership of the others, so the coordinates
//! can be brought to their ultra summit sets one at a time. Applying this
//! to the power tuple (g, g², …, g^L) produces an element all of whose
//! powers are super summit, the seed of the stable super summit set.

use std::collections::{HashMap, VecDeque};

use crate::budget::Budget;
use crate::conjugacy::{
    close_summit_set, cycling_conjugator, decycling_conjugator, on_closed_cycling_orbit,
    summit_invariants, Membership, SummitKind, SummitSet,
};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::structure::Structure;

/// An ordered tuple of pairwise commuting elements.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CommutingTuple<S: Structure> {
    elements: Vec<Element<S>>,
}

impl<S: Structure> CommutingTuple<S> {
    /// Validates pairwise commutation at construction.
    pub fn new(elements: Vec<Element<S>>) -> Result<Self> {
        for i in 0..elements.len() {
            for j in i + 1..elements.len() {
                if !elements[i].commutes_with(&elements[j]) {
                    return Err(Error::NotCommuting);
                }
            }
        }
        Ok(CommutingTuple { elements })
    }

    pub fn elements(&self) -> &[Element<S>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn conjugate(&self, w: &Element<S>) -> Self {
        CommutingTuple {
            elements: self.elements.iter().map(|e| e.conjugate(w)).collect(),
        }
    }
}

/// True when the element is ultra summit: inf and sup are at their summit
/// values and the cycling orbit is closed.
pub fn is_ultra_summit<S: Structure>(h: &Element<S>) -> bool {
    let (inf_s, sup_s) = summit_invariants(h);
    h.inf() == inf_s && h.sup() == sup_s && on_closed_cycling_orbit(h)
}

/// Snapshot of the tuple state and accumulated witness at a trajectory
/// point, keyed by the driven coordinate's value.
type Snapshot<S> = (Vec<Element<S>>, Element<S>);

/// Drives coordinate `index` of the tuple along its decycling then cycling
/// trajectory, conjugating the whole tuple at every step. Commutation keeps
/// already-finished coordinates ultra summit.
fn settle_coordinate<S: Structure>(
    tuple: &mut Vec<Element<S>>,
    witness: &mut Element<S>,
    index: usize,
) {
    enum Phase {
        Down,
        Up,
    }
    for phase in [Phase::Down, Phase::Up] {
        let mut seen: HashMap<Element<S>, Snapshot<S>> = HashMap::new();
        loop {
            let cur = tuple[index].clone();
            if let Some((snap_tuple, snap_witness)) = seen.get(&cur) {
                *tuple = snap_tuple.clone();
                *witness = snap_witness.clone();
                break;
            }
            seen.insert(cur.clone(), (tuple.clone(), witness.clone()));
            let conj = match phase {
                Phase::Down => decycling_conjugator(&cur),
                Phase::Up => cycling_conjugator(&cur),
            };
            let Some(conj) = conj else { break };
            let next = cur.conjugate(&conj);
            let improved = match phase {
                Phase::Down => next.sup() < cur.sup(),
                Phase::Up => next.inf() > cur.inf(),
            };
            for e in tuple.iter_mut() {
                *e = e.conjugate(&conj);
            }
            *witness = witness.multiply(&conj);
            if improved {
                seen.clear();
            }
        }
    }
}

/// Simultaneously conjugates a commuting tuple so that every coordinate is
/// ultra summit. Returns the new tuple and the conjugator `x` with
/// `x⁻¹·tᵢ·x = tᵢ'`.
pub fn tuple_to_uss<S: Structure>(t: &CommutingTuple<S>) -> (CommutingTuple<S>, Element<S>) {
    let first = t
        .elements
        .first()
        .expect("tuple_to_uss needs a nonempty tuple");
    let mut tuple = t.elements.clone();
    let mut witness = Element::identity(first.structure());
    for i in 0..tuple.len() {
        settle_coordinate(&mut tuple, &mut witness, i);
    }
    debug_assert!(tuple.iter().all(is_ultra_summit));
    (CommutingTuple { elements: tuple }, witness)
}

/// Decides simultaneous conjugacy of two commuting tuples; on success the
/// witness `w` satisfies `w⁻¹·t₁ᵢ·w = t₂ᵢ` for every coordinate.
///
/// Both tuples are first made ultra summit coordinatewise; the finite set
/// of all-ultra tuples simultaneously conjugate to the first is then closed
/// under conjugation by every simple. The intersection of the coordinates'
/// ultra convexity sets is closed under ∧_L, which makes the simple-step
/// closure connected, so exhausting it decides the problem exactly.
pub fn is_simultaneously_conjugate<S: Structure>(
    t1: &CommutingTuple<S>,
    t2: &CommutingTuple<S>,
    budget: &Budget,
) -> Result<Option<Element<S>>> {
    if t1.len() != t2.len() {
        return Err(Error::TupleLength {
            left: t1.len(),
            right: t2.len(),
        });
    }
    assert!(
        !t1.is_empty(),
        "simultaneous conjugacy needs nonempty tuples"
    );
    let s = t1.elements[0].structure().clone();
    let (u1, x1) = tuple_to_uss(t1);
    let (u2, x2) = tuple_to_uss(t2);
    for (a, b) in u1.elements.iter().zip(&u2.elements) {
        if (a.inf(), a.sup()) != (b.inf(), b.sup()) {
            return Ok(None);
        }
    }
    let targets: Vec<(i64, i64)> = u1.elements.iter().map(|e| (e.inf(), e.sup())).collect();
    let all_ultra = |tuple: &[Element<S>]| {
        tuple
            .iter()
            .zip(&targets)
            .all(|(e, t)| (e.inf(), e.sup()) == *t && on_closed_cycling_orbit(e))
    };

    let simples: Vec<S::Simple> = {
        let mut v: Vec<_> = s.simples().filter(|c| !s.is_identity(c)).collect();
        v.sort_by_key(|a| s.simple_key(a));
        v
    };

    let mut witness_of: HashMap<Vec<Element<S>>, Element<S>> = HashMap::new();
    let mut queue = VecDeque::new();
    witness_of.insert(u1.elements.clone(), Element::identity(&s));
    queue.push_back(u1.elements.clone());

    while let Some(tuple) = queue.pop_front() {
        if tuple == u2.elements {
            let path = witness_of[&tuple].clone();
            let w = x1.multiply(&path).multiply(&x2.inverse());
            debug_assert!(t1
                .elements
                .iter()
                .zip(&t2.elements)
                .all(|(a, b)| a.conjugate(&w) == *b));
            return Ok(Some(w));
        }
        for c in &simples {
            budget.step()?;
            let next: Vec<Element<S>> = tuple.iter().map(|e| e.conjugate_by_simple(c)).collect();
            if all_ultra(&next) && !witness_of.contains_key(&next) {
                let w = witness_of[&tuple].multiply(&Element::from_simple(&s, c.clone()));
                witness_of.insert(next.clone(), w);
                queue.push_back(next);
            }
        }
    }
    Ok(None)
}

/// True when every power hⁿ for n = 1..=L is a super summit element, which
/// by the finite stability criterion makes all powers super summit.
pub fn is_stable<S: Structure>(h: &Element<S>) -> bool {
    let s = h.structure();
    let mut pw = Element::identity(s);
    for _ in 0..s.max_word_length() {
        pw = pw.multiply(h);
        if (pw.inf(), pw.sup()) != summit_invariants(&pw) {
            return false;
        }
    }
    true
}

/// A stable representative of the class of `g` together with its witness:
/// the power tuple (g, g², …, g^L) is made ultra summit simultaneously,
/// and the first coordinate of the result is stable.
pub fn stable_representative<S: Structure>(g: &Element<S>) -> (Element<S>, Element<S>) {
    let s = g.structure();
    let l = s.max_word_length() as i64;
    if g.is_empty() {
        return (g.clone(), Element::identity(s));
    }
    let powers: Vec<Element<S>> = (1..=l).map(|n| g.pow(n)).collect();
    let tuple = CommutingTuple { elements: powers };
    let (uss_tuple, witness) = tuple_to_uss(&tuple);
    let h = uss_tuple.elements[0].clone();
    debug_assert_eq!(g.conjugate(&witness), h);
    (h, witness)
}

/// The stable super summit set of `g`: all conjugates whose powers are all
/// super summit, with witnesses and minimal-conjugator edges.
pub fn stable_sss<S: Structure>(g: &Element<S>, budget: &Budget) -> Result<SummitSet<S>> {
    let (seed, witness) = stable_representative(g);
    let s = g.structure();
    // Per-power summit invariants of the class, read off the stable seed.
    let table: Vec<(i64, i64)> = (1..=s.max_word_length() as i64)
        .map(|n| {
            let p = seed.pow(n);
            (p.inf(), p.sup())
        })
        .collect();
    let membership = Membership {
        inf_s: seed.inf(),
        sup_s: seed.sup(),
        power_invariants: Some(table),
    };
    close_summit_set(SummitKind::Stable, seed, witness, &membership, budget, None)
}
