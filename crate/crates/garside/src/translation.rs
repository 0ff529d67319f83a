//! Exact rational translation numbers.
//!
//! The word length over the simples and their inverses has the closed form
//! max(sup, 0) − min(inf, 0); a BFS oracle guards it in the tests. The
//! asymptotic summit slopes t_inf and t_sup are pinned exactly: for a
//! stable representative h the powers satisfy inf(hⁿ) = inf_s(gⁿ), each n
//! confines the slope to an interval of width 1/n, and translation numbers
//! are rationals with denominator at most L², so once the running interval
//! contains a single such rational the limit is known exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::budget::Budget;
use crate::element::Element;
use crate::error::Result;
use crate::simultaneous::stable_representative;
use crate::structure::Structure;

/// Exact rational value, always reduced with positive denominator.
pub type Rational = BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Shortest word length of `g` in the alphabet 𝒟 ∪ 𝒟⁻¹.
pub fn word_length<S: Structure>(g: &Element<S>) -> u64 {
    let sup = g.sup().max(0);
    let inf = g.inf().min(0);
    (sup - inf) as u64
}

/// A closed interval with exact rational endpoints.
#[derive(Clone, Debug)]
struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    fn intersect(&mut self, lo: Rational, hi: Rational) {
        if lo > self.lo {
            self.lo = lo;
        }
        if hi < self.hi {
            self.hi = hi;
        }
        debug_assert!(self.lo <= self.hi, "slope intervals must stay consistent");
    }
}

/// The rational of smallest denominator in the closed interval [lo, hi],
/// by continued-fraction descent.
fn simplest_in(lo: &Rational, hi: &Rational) -> Rational {
    debug_assert!(lo <= hi);
    let c = lo.ceil();
    if &c <= hi {
        return c;
    }
    let f = lo.floor();
    let inner = simplest_in(&((hi - &f).recip()), &((lo - &f).recip()));
    f + inner.recip()
}

fn modular_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    // Extended Euclid; gcd(a, m) = 1 is guaranteed by reduced fractions.
    let a = a.mod_floor(m);
    let (mut old_r, mut r) = (a.clone(), m.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    while !r.is_zero() {
        let q = &old_r / &r;
        let tmp_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, tmp_r);
        let tmp_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, tmp_s);
    }
    old_s.mod_floor(m)
}

/// Farey neighbors of `x` (in lowest terms) among rationals with
/// denominator at most `q_max`: the nearest such rational strictly below
/// and strictly above.
fn farey_neighbors(x: &Rational, q_max: &BigInt) -> (Rational, Rational) {
    let p = x.numer().clone();
    let q = x.denom().clone();
    debug_assert!(&q <= q_max);
    if q.is_one() {
        let left = Rational::new(&p * q_max - 1, q_max.clone());
        let right = Rational::new(&p * q_max + 1, q_max.clone());
        return (left, right);
    }
    // Right neighbor r/s: r·q − p·s = 1 with s ≡ −p⁻¹ (mod q) maximal ≤ q_max.
    let p_inv = modular_inverse(&p, &q);
    let s_res = (-&p_inv).mod_floor(&q);
    let s = q_max - (q_max - &s_res).mod_floor(&q);
    let r = (BigInt::one() + &p * &s) / &q;
    let right = Rational::new(r, s);
    // Left neighbor a/b: p·b − a·q = 1 with b ≡ p⁻¹ (mod q) maximal ≤ q_max.
    let b = q_max - (q_max - &p_inv).mod_floor(&q);
    let a = (&p * &b - BigInt::one()) / &q;
    let left = Rational::new(a, b);
    (left, right)
}

/// The unique rational with denominator ≤ `q_max` in [lo, hi], when there
/// is exactly one.
fn unique_bounded_rational(iv: &Interval, q_max: &BigInt) -> Option<Rational> {
    let candidate = simplest_in(&iv.lo, &iv.hi);
    if candidate.denom() > q_max {
        return None;
    }
    let (left, right) = farey_neighbors(&candidate, q_max);
    if left >= iv.lo || right <= iv.hi {
        return None;
    }
    Some(candidate)
}

/// The asymptotic summit slopes (t_inf, t_sup) of `g`: the limits of
/// inf_s(gⁿ)/n and sup_s(gⁿ)/n. Exact rationals with denominator ≤ L².
pub fn summit_slopes<S: Structure>(
    g: &Element<S>,
    budget: &Budget,
) -> Result<(Rational, Rational)> {
    let s = g.structure();
    let l = s.max_word_length() as i64;
    let (h, _) = stable_representative(g);
    if h.is_empty() {
        // Powers of Δʳ have inf = sup = rn exactly.
        let r = Rational::from(BigInt::from(h.inf()));
        return Ok((r.clone(), r));
    }
    let q_max = BigInt::from(l) * BigInt::from(l);
    let mut n: i64 = 1;
    let mut pw = h.clone();
    let from = |v: i64, d: i64| rational(v, d);
    let mut inf_iv = Interval {
        lo: from(pw.inf(), 1),
        hi: from(pw.inf() + 1, 1),
    };
    let mut sup_iv = Interval {
        lo: from(pw.sup() - 1, 1),
        hi: from(pw.sup(), 1),
    };
    // n > 2L⁴ makes the interval shorter than the minimal gap between
    // distinct rationals with denominator ≤ L², so the loop always exits.
    let hard_stop = 4 * l.pow(4);
    loop {
        let t_inf = unique_bounded_rational(&inf_iv, &q_max);
        let t_sup = unique_bounded_rational(&sup_iv, &q_max);
        if let (Some(a), Some(b)) = (t_inf, t_sup) {
            return Ok((a, b));
        }
        budget.charge(1 + pw.len() as u64)?;
        assert!(n <= hard_stop, "slope pinning exceeded its proven horizon");
        pw = pw.multiply(&pw);
        n *= 2;
        inf_iv.intersect(from(pw.inf(), n), from(pw.inf() + 1, n));
        sup_iv.intersect(from(pw.sup() - 1, n), from(pw.sup(), n));
    }
}

/// Exact translation number t_𝒟(g) = lim |gⁿ|_𝒟 / n.
///
/// Computed on a stable representative, whose power word lengths are
/// max(sup, 0) − min(inf, 0) with summit-exact inf and sup, giving
/// t = max(t_sup, 0) − min(t_inf, 0).
pub fn translation_number<S: Structure>(g: &Element<S>, budget: &Budget) -> Result<Rational> {
    let (t_inf, t_sup) = summit_slopes(g, budget)?;
    let zero = Rational::zero();
    Ok(t_sup.max(zero.clone()) - t_inf.min(zero))
}
