//! Finite-time algorithms for abelian subgroups.
//!
//! Translation numbers restrict where an element can sit inside an abelian
//! subgroup: for a basis h₁,…,hₙ with K = max t(hᵢ), the seminorm
//! a ↦ t(Πhᵢ^{aᵢ}) is sandwiched between ‖a‖∞/D₁ and D₂‖a‖∞. The five
//! subgroup problems (basis, membership, conjugacy membership, equality,
//! subgroup conjugacy) reduce to exponent-shell scans inside those bounds.
//! All bound arithmetic is exact; scans are shell-ordered with early exit
//! and budgets convert intractable instances into resource errors.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::budget::Budget;
use crate::conjugacy::is_conjugate;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::intmat::{gcd_of, hnf_complement, IntMat, IntVec};
use crate::simultaneous::{is_simultaneously_conjugate, CommutingTuple};
use crate::structure::Structure;
use crate::translation::{translation_number, Rational};

/// A finite list of commuting generators with cached translation numbers.
#[derive(Clone, Debug)]
pub struct AbelianPresentation<S: Structure> {
    structure: S,
    generators: CommutingTuple<S>,
    translations: Vec<Rational>,
    k_max: Rational,
    is_basis: bool,
}

impl<S: Structure> AbelianPresentation<S> {
    /// Validates pairwise commutation and computes the generators'
    /// translation numbers.
    pub fn new(structure: &S, elements: Vec<Element<S>>, budget: &Budget) -> Result<Self> {
        for e in &elements {
            assert!(
                e.structure() == structure,
                "generator belongs to a different Garside structure"
            );
        }
        let generators = CommutingTuple::new(elements)?;
        let translations: Vec<Rational> = generators
            .elements()
            .iter()
            .map(|e| translation_number(e, budget))
            .collect::<Result<_>>()?;
        let k_max = translations
            .iter()
            .cloned()
            .max()
            .unwrap_or_else(Rational::zero);
        Ok(AbelianPresentation {
            structure: structure.clone(),
            generators,
            translations,
            k_max,
            is_basis: false,
        })
    }

    pub fn generators(&self) -> &[Element<S>] {
        self.generators.elements()
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn translations(&self) -> &[Rational] {
        &self.translations
    }

    /// K = max of the generators' translation numbers.
    pub fn k_max(&self) -> &Rational {
        &self.k_max
    }

    pub fn is_basis(&self) -> bool {
        self.is_basis
    }

    pub fn structure(&self) -> &S {
        &self.structure
    }
}

/// Simultaneous rational approximation by pigeonhole: for rationals x and a
/// positive integer M, finds k ≤ Mⁿ and an integer vector a with
/// ‖k·x − a‖∞ ≤ 1/M, by walking the fractional parts Frac(k·x) through the
/// Mⁿ half-open subcubes of [0,1)ⁿ until two collide.
pub fn dirichlet_approx(x: &[Rational], m: u64) -> (BigInt, IntVec) {
    assert!(m >= 1, "modulus must be positive");
    let m_big = BigInt::from(m);
    let mut cells: HashMap<Vec<BigInt>, (BigInt, IntVec)> = HashMap::new();
    let mut k = BigInt::zero();
    loop {
        let mut floors = Vec::with_capacity(x.len());
        let mut cell = Vec::with_capacity(x.len());
        for xi in x {
            let kx = Rational::from(k.clone()) * xi;
            let floor = kx.floor().to_integer();
            let frac = kx - Rational::from(floor.clone());
            cell.push((frac * Rational::from(m_big.clone())).floor().to_integer());
            floors.push(floor);
        }
        if let Some((k1, f1)) = cells.get(&cell) {
            let diff: IntVec = floors.iter().zip(f1).map(|(a, b)| a - b).collect();
            return (&k - k1, diff);
        }
        cells.insert(cell, (k.clone(), floors));
        k += 1;
    }
}

/// The norm-equivalence constants D₁ = (2L)ⁿ⁺¹(nK)ⁿ and D₂ = nK, evaluated
/// exactly.
pub fn norm_constants(n: usize, k: &Rational, l: u64) -> (Rational, Rational) {
    let two_l = Rational::from(BigInt::from(2 * l));
    let nk = Rational::from(BigInt::from(n as i64)) * k;
    let mut d1 = Rational::one();
    for _ in 0..n + 1 {
        d1 *= &two_l;
    }
    for _ in 0..n {
        d1 *= &nk;
    }
    (d1, nk)
}

/// Shell radius for the relation scan: ⌈2nKL⌉ⁿ.
///
/// With a rational K the Dirichlet modulus must be rounded up to an
/// integer; the resulting bound dominates (2nKL)ⁿ and coincides with it
/// whenever 2nKL is integral, so the seminorm sandwich stays valid.
fn relation_shell_bound(n: usize, k: &Rational, l: u64) -> BigInt {
    let m = (Rational::from(BigInt::from(2 * n as i64 * l as i64)) * k)
        .ceil()
        .to_integer();
    m.pow(n as u32)
}

/// Hardened D₁ = 2L·⌈2nKL⌉ⁿ matching [`relation_shell_bound`].
fn hardened_d1(n: usize, k: &Rational, l: u64) -> Rational {
    Rational::from(BigInt::from(2 * l) * relation_shell_bound(n, k, l))
}

/// Enumerates integer vectors of given dimension with ‖a‖∞ = r, in
/// lexicographic order.
fn shell_vectors(dim: usize, r: i64) -> impl Iterator<Item = Vec<i64>> {
    let mut cur: Option<Vec<i64>> = if dim == 0 { None } else { Some(vec![-r; dim]) };
    std::iter::from_fn(move || loop {
        let c = cur.as_mut()?;
        let item = c.clone();
        // Odometer step.
        let mut i = dim;
        loop {
            if i == 0 {
                cur = None;
                break;
            }
            i -= 1;
            if c[i] < r {
                c[i] += 1;
                for v in &mut c[i + 1..] {
                    *v = -r;
                }
                break;
            }
        }
        if item.iter().any(|&v| v.abs() == r) {
            return Some(item);
        }
    })
}

/// Caches powers of a fixed generator list for shell scans.
struct PowerCache<S: Structure> {
    gens: Vec<Element<S>>,
    identity: Element<S>,
    cache: HashMap<(usize, i64), Element<S>>,
}

impl<S: Structure> PowerCache<S> {
    fn new(structure: &S, gens: Vec<Element<S>>) -> Self {
        PowerCache {
            gens,
            identity: Element::identity(structure),
            cache: HashMap::new(),
        }
    }

    fn power(&mut self, i: usize, e: i64) -> Element<S> {
        if e == 0 {
            return self.identity.clone();
        }
        if let Some(p) = self.cache.get(&(i, e)) {
            return p.clone();
        }
        let p = self.gens[i].pow(e);
        self.cache.insert((i, e), p.clone());
        p
    }

    fn eval(&mut self, a: &[i64]) -> Element<S> {
        let mut acc = self.identity.clone();
        for (i, &e) in a.iter().enumerate() {
            if e != 0 {
                acc = acc.multiply(&self.power(i, e));
            }
        }
        acc
    }
}

fn to_i64(v: &BigInt) -> i64 {
    // Shell radii beyond i64 would require more scan steps than any budget
    // allows, so the conversion is total in practice.
    v.to_i64().expect("shell radius exceeds i64")
}

fn big_vec(a: &[i64]) -> IntVec {
    a.iter().map(|&v| BigInt::from(v)).collect()
}

/// Decides linear independence of the generators. Returns a primitive
/// nonzero exponent vector `a` with Π hᵢ^{aᵢ} = 1 when dependent, `None`
/// when independent; independence is certified by scanning all exponent
/// vectors with 1 ≤ ‖a‖∞ ≤ ⌈2nKL⌉ⁿ.
pub fn integer_relation<S: Structure>(
    pres: &AbelianPresentation<S>,
    budget: &Budget,
) -> Result<Option<IntVec>> {
    let n = pres.rank();
    if n == 0 {
        return Ok(None);
    }
    for (i, g) in pres.generators().iter().enumerate() {
        if g.is_identity() {
            let mut e = vec![BigInt::zero(); n];
            e[i] = BigInt::one();
            return Ok(Some(e));
        }
    }
    let l = pres.structure.max_word_length() as u64;
    let bound = relation_shell_bound(n, pres.k_max(), l);
    let mut cache = PowerCache::new(&pres.structure, pres.generators().to_vec());
    let mut r = BigInt::one();
    while r <= bound {
        let radius = to_i64(&r);
        for a in shell_vectors(n, radius) {
            budget.step()?;
            if cache.eval(&a).is_identity() {
                let mut v = big_vec(&a);
                let g = gcd_of(&v);
                if !g.is_one() {
                    for entry in &mut v {
                        *entry = &*entry / &g;
                    }
                }
                // Torsion-freeness makes the primitive part a relation too.
                let check: Vec<i64> = v.iter().map(to_i64).collect();
                assert!(cache.eval(&check).is_identity());
                return Ok(Some(v));
            }
        }
        r += 1;
    }
    Ok(None)
}

/// A basis together with the expression of each basis element as an
/// exponent vector over the original generators.
struct Reduced<S: Structure> {
    pres: AbelianPresentation<S>,
    expr: IntMat,
    original_rank: usize,
}

fn reduce_to_basis<S: Structure>(
    pres: &AbelianPresentation<S>,
    budget: &Budget,
) -> Result<Reduced<S>> {
    let original_rank = pres.rank();
    let mut current = pres.generators().to_vec();
    let mut expr: IntMat = (0..original_rank)
        .map(|i| {
            (0..original_rank)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    let mut cur_pres = pres.clone();
    while let Some(rel) = integer_relation(&cur_pres, budget)? {
        let n = current.len();
        if n == 1 {
            // A relation on a single generator forces it to be trivial.
            current.clear();
            expr.clear();
        } else {
            let ext = hnf_complement(&rel)?;
            let mut cache = PowerCache::new(&pres.structure, current.clone());
            let mut next = Vec::with_capacity(n - 1);
            let mut next_expr = Vec::with_capacity(n - 1);
            for row in &ext[1..] {
                let exps: Vec<i64> = row.iter().map(to_i64).collect();
                let g = cache.eval(&exps);
                if g.is_identity() {
                    continue;
                }
                let combo: IntVec = (0..original_rank)
                    .map(|col| {
                        row.iter()
                            .zip(&expr)
                            .map(|(c, e)| c * &e[col])
                            .sum::<BigInt>()
                    })
                    .collect();
                next.push(g);
                next_expr.push(combo);
            }
            current = next;
            expr = next_expr;
        }
        cur_pres = AbelianPresentation::new(&pres.structure, current.clone(), budget)?;
    }
    // Canonicalize: a basis is only determined up to sign and order, so
    // prefer the representative with the larger inf+sup (the "positive"
    // direction) and sort, negating the expression rows alongside.
    let mut rows: Vec<(Element<S>, IntVec)> = cur_pres
        .generators()
        .iter()
        .cloned()
        .zip(expr)
        .map(|(g, row)| {
            let inv = g.inverse();
            let keep = g.inf() + g.sup();
            let flip = inv.inf() + inv.sup();
            let prefer_inverse =
                flip > keep || (flip == keep && inv.canonical_cmp(&g) == std::cmp::Ordering::Less);
            if prefer_inverse {
                (inv, row.iter().map(|v| -v).collect())
            } else {
                (g, row)
            }
        })
        .collect();
    rows.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    let (gens, expr): (Vec<_>, Vec<_>) = rows.into_iter().unzip();
    let mut basis = AbelianPresentation::new(&pres.structure, gens, budget)?;
    basis.is_basis = true;
    Ok(Reduced {
        pres: basis,
        expr,
        original_rank,
    })
}

/// Finds a basis of the subgroup generated by commuting elements: extract a
/// primitive relation, extend it to a unimodular matrix, replace the
/// generators by the images of the complementary rows, and recurse.
pub fn abelian_basis<S: Structure>(
    pres: &AbelianPresentation<S>,
    budget: &Budget,
) -> Result<AbelianPresentation<S>> {
    Ok(reduce_to_basis(pres, budget)?.pres)
}

fn membership_scan<S: Structure>(
    g: &Element<S>,
    red: &Reduced<S>,
    budget: &Budget,
    mut test: impl FnMut(&Element<S>, &Element<S>, &Budget) -> Result<Option<Element<S>>>,
) -> Result<Option<(IntVec, Element<S>)>> {
    let s = &red.pres.structure;
    if g.is_identity() {
        return Ok(Some((
            vec![BigInt::zero(); red.original_rank],
            Element::identity(s),
        )));
    }
    let n = red.pres.rank();
    if n == 0 {
        return Ok(None);
    }
    let l = s.max_word_length() as u64;
    let t_g = translation_number(g, budget)?;
    let d1 = hardened_d1(n, red.pres.k_max(), l);
    let d2 = Rational::from(BigInt::from(n as i64)) * red.pres.k_max();
    let lo = (&t_g / d2).ceil().to_integer().max(BigInt::one());
    let hi = (d1 * &t_g).floor().to_integer();
    let mut cache = PowerCache::new(s, red.pres.generators().to_vec());
    let mut r = lo;
    while r <= hi {
        let radius = to_i64(&r);
        for a in shell_vectors(n, radius) {
            budget.step()?;
            let candidate = cache.eval(&a);
            if let Some(witness) = test(g, &candidate, budget)? {
                // Convert exponents over the basis to exponents over the
                // original generators.
                let exps: IntVec = (0..red.original_rank)
                    .map(|col| {
                        a.iter()
                            .zip(&red.expr)
                            .map(|(&c, e)| BigInt::from(c) * &e[col])
                            .sum::<BigInt>()
                    })
                    .collect();
                return Ok(Some((exps, witness)));
            }
        }
        r += 1;
    }
    Ok(None)
}

/// Membership: exponents over the input generators with Π hᵢ^{aᵢ} = g, or
/// `None`. The scan covers t(g)/D₂ ≤ ‖a‖∞ ≤ D₁·t(g) over a basis, which is
/// exhaustive by the seminorm sandwich.
pub fn member<S: Structure>(
    g: &Element<S>,
    pres: &AbelianPresentation<S>,
    budget: &Budget,
) -> Result<Option<IntVec>> {
    let red = reduce_to_basis(pres, budget)?;
    let hit = membership_scan(g, &red, budget, |target, candidate, _| {
        Ok(if target == candidate {
            Some(Element::identity(target.structure()))
        } else {
            None
        })
    })?;
    Ok(hit.map(|(exps, _)| exps))
}

/// Conjugacy membership: exponents and a conjugator `w` with
/// w⁻¹·g·w = Π hᵢ^{aᵢ}, or `None`. Identical shells as [`member`] since
/// translation numbers are conjugacy invariants.
pub fn conj_member<S: Structure>(
    g: &Element<S>,
    pres: &AbelianPresentation<S>,
    budget: &Budget,
) -> Result<Option<(IntVec, Element<S>)>> {
    let red = reduce_to_basis(pres, budget)?;
    membership_scan(g, &red, budget, |target, candidate, budget| {
        is_conjugate(target, candidate, budget)
    })
}

/// Subgroup equality by mutual membership of generators.
pub fn subgroups_equal<S: Structure>(
    p1: &AbelianPresentation<S>,
    p2: &AbelianPresentation<S>,
    budget: &Budget,
) -> Result<bool> {
    let r1 = reduce_to_basis(p1, budget)?;
    let r2 = reduce_to_basis(p2, budget)?;
    let contained = |gens: &AbelianPresentation<S>, red: &Reduced<S>, budget: &Budget| {
        for g in gens.generators() {
            let inside = membership_scan(g, red, budget, |target, candidate, _| {
                Ok(if target == candidate {
                    Some(Element::identity(target.structure()))
                } else {
                    None
                })
            })?;
            if inside.is_none() {
                return Ok::<bool, Error>(false);
            }
        }
        Ok(true)
    };
    Ok(contained(p1, &r2, budget)? && contained(p2, &r1, budget)?)
}

/// Subgroup conjugacy: a witness `w` with w⁻¹⟨gens₁⟩w = ⟨gens₂⟩, or `None`.
///
/// Both inputs are reduced to bases; unequal ranks are never conjugate. A
/// candidate image basis of the first subgroup must lie in the exponent box
/// ‖a‖∞ ≤ D₁·K′ coordinatewise, form a unimodular matrix, and have the
/// target's translation numbers coordinatewise; each surviving tuple is
/// tested for simultaneous conjugacy.
pub fn subgroups_conjugate<S: Structure>(
    p1: &AbelianPresentation<S>,
    p2: &AbelianPresentation<S>,
    budget: &Budget,
) -> Result<Option<Element<S>>> {
    let r1 = reduce_to_basis(p1, budget)?;
    let r2 = reduce_to_basis(p2, budget)?;
    let n = r1.pres.rank();
    if n != r2.pres.rank() {
        return Ok(None);
    }
    let s = &p1.structure;
    if n == 0 {
        return Ok(Some(Element::identity(s)));
    }
    let l = s.max_word_length() as u64;
    let d1 = hardened_d1(n, r1.pres.k_max(), l);
    let radius = to_i64(&(d1 * r2.pres.k_max()).floor().to_integer());

    // Candidate exponent vectors per target coordinate, filtered by the
    // conjugacy-invariant translation number. Homogeneity reduces t of a
    // non-primitive vector to its primitive part.
    let mut cache = PowerCache::new(s, r1.pres.generators().to_vec());
    let mut t_cache: HashMap<Vec<i64>, Rational> = HashMap::new();
    let mut rows: Vec<Vec<Vec<i64>>> = vec![Vec::new(); n];
    let mut box_iter = vec![-radius; n];
    'outer: loop {
        let a = box_iter.clone();
        if a.iter().any(|&v| v != 0) {
            budget.step()?;
            let g = gcd_of(&big_vec(&a));
            let prim: Vec<i64> = a.iter().map(|&v| v / to_i64(&g)).collect();
            let t_prim = match t_cache.get(&prim) {
                Some(t) => t.clone(),
                None => {
                    let t = translation_number(&cache.eval(&prim), budget)?;
                    t_cache.insert(prim.clone(), t.clone());
                    t
                }
            };
            let t_a = Rational::from(g) * t_prim;
            for (i, target) in r2.pres.translations().iter().enumerate() {
                if &t_a == target {
                    rows[i].push(a.clone());
                }
            }
        }
        let mut i = n;
        loop {
            if i == 0 {
                break 'outer;
            }
            i -= 1;
            if box_iter[i] < radius {
                box_iter[i] += 1;
                for v in &mut box_iter[i + 1..] {
                    *v = -radius;
                }
                break;
            }
        }
    }
    if rows.iter().any(|r| r.is_empty()) {
        return Ok(None);
    }

    let target_tuple = CommutingTuple::new(r2.pres.generators().to_vec())?;
    let mut choice = vec![0usize; n];
    loop {
        budget.step()?;
        let mat: IntMat = choice
            .iter()
            .enumerate()
            .map(|(i, &c)| big_vec(&rows[i][c]))
            .collect();
        if crate::intmat::determinant(&mat).abs().is_one() {
            let candidate: Vec<Element<S>> = choice
                .iter()
                .enumerate()
                .map(|(i, &c)| cache.eval(&rows[i][c]))
                .collect();
            let tuple = CommutingTuple::new(candidate)?;
            if let Some(path) = is_simultaneously_conjugate(&tuple, &target_tuple, budget)? {
                return Ok(Some(path));
            }
        }
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            if choice[i] + 1 < rows[i].len() {
                choice[i] += 1;
                for v in &mut choice[i + 1..] {
                    *v = 0;
                }
                break;
            }
        }
    }
}
