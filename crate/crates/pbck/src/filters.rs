//! Filters (deductive systems), their classification, generated filters,
//! congruences and quotient algebras.
//!
//! A filter is a subset `F` with `1 ∈ F` that is closed under modus ponens:
//! `a ∈ F` and `a→b ∈ F` imply `b ∈ F`. On a pseudo-BCK algebra, closure
//! under the `→` rule and under the `⇝` rule are equivalent; we verify both
//! and cross-check the equivalence in the property tests. A filter `F` is
//! *normal* if `a→b ∈ F ⟺ a⇝b ∈ F`, and then
//! `(a, b) ∈ Θ_F ⟺ a→b ∈ F and b→a ∈ F` is a congruence whose quotient is
//! again a pseudo-BCK algebra.
//!
//! Maximality comes in two inequivalent flavours and we report both:
//! `is_maximal` means no proper filter strictly contains `F` (decided by
//! the polynomial escape test: the filter generated by `F ∪ {b}` is the
//! whole algebra for every `b ∉ F`), while `is_maximal_normal` means no
//! proper *normal* filter strictly contains it. The two notions differ on
//! the 5-element chain, where `{c,1}` is a non-normal filter sitting
//! strictly between the normal filter `{1}` and the algebra.

use crate::algebra::{Elem, FiniteAlgebra};
use crate::{Error, Law, Result};

/// Subset of a carrier, kept as a bitmask (carriers stay small).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElemSet {
    n: usize,
    words: Vec<u64>,
}

impl ElemSet {
    pub fn empty(n: usize) -> Self {
        ElemSet {
            n,
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for i in 0..n {
            s.insert(Elem(i));
        }
        s
    }

    pub fn from_elems(n: usize, elems: &[Elem]) -> Self {
        let mut s = Self::empty(n);
        for &e in elems {
            s.insert(e);
        }
        s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, e: Elem) {
        self.words[e.0 / 64] |= 1u64 << (e.0 % 64);
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.words[e.0 / 64] >> (e.0 % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.n).map(Elem).filter(move |&e| self.contains(e))
    }

    pub fn elems(&self) -> Vec<Elem> {
        self.iter().collect()
    }
}

/// A classified subset of the carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilterSet {
    pub subset: ElemSet,
    /// closure under modus ponens (with `1 ∈ F`); fails with `(a, a→b, b)`
    pub is_filter: Law<(Elem, Elem, Elem)>,
    pub is_proper: bool,
    /// `a→b ∈ F ⟺ a⇝b ∈ F`; fails with the pair `(a, b)`
    pub is_normal: Law<(Elem, Elem)>,
    /// maximal among all proper filters; fails with `b ∉ F` whose extension
    /// stays proper
    pub is_maximal: Law<Elem>,
    /// maximal among proper normal filters
    pub is_maximal_normal: Law<Elem>,
}

impl FilterSet {
    pub fn elems(&self) -> Vec<Elem> {
        self.subset.elems()
    }
}

fn mp_witness(alg: &FiniteAlgebra, s: &ElemSet) -> Option<(Elem, Elem, Elem)> {
    if !s.contains(alg.one()) {
        let one = alg.one();
        return Some((one, one, one));
    }
    for a in s.iter() {
        for b in alg.elems() {
            if s.contains(b) {
                continue;
            }
            if s.contains(alg.arrow(a, b)) {
                return Some((a, alg.arrow(a, b), b));
            }
            if s.contains(alg.squiggle(a, b)) {
                return Some((a, alg.squiggle(a, b), b));
            }
        }
    }
    None
}

/// Classify an arbitrary subset: filterhood, properness, normality and both
/// maximality notions, each with a counterexample when false.
pub fn classify_subset(alg: &FiniteAlgebra, subset: &ElemSet) -> FilterSet {
    let is_filter = Law::from_witness(mp_witness(alg, subset));
    let is_proper = subset.len() < alg.n();

    let (is_normal, is_maximal, is_maximal_normal) = if is_filter.holds() {
        let normal = Law::from_witness((|| {
            for a in alg.elems() {
                for b in alg.elems() {
                    if subset.contains(alg.arrow(a, b)) != subset.contains(alg.squiggle(a, b)) {
                        return Some((a, b));
                    }
                }
            }
            None
        })());

        let maximal = if !is_proper {
            Law::Fails(alg.one())
        } else {
            Law::from_witness(
                alg.elems()
                    .filter(|e| !subset.contains(*e))
                    .find(|&b| extend_filter(alg, subset, b).len() < alg.n()),
            )
        };

        let maximal_normal = if !is_proper || !normal.holds() {
            Law::Fails(alg.one())
        } else if maximal.holds() {
            // maximal among all filters is maximal among the normal ones
            Law::Holds
        } else {
            Law::from_witness(alg.elems().filter(|e| !subset.contains(*e)).find(|&b| {
                let mut seed = subset.elems();
                seed.push(b);
                normal_closure(alg, &seed).len() < alg.n()
            }))
        };

        (normal, maximal, maximal_normal)
    } else {
        let one = alg.one();
        (Law::Fails((one, one)), Law::Fails(one), Law::Fails(one))
    };

    FilterSet {
        subset: subset.clone(),
        is_filter,
        is_proper,
        is_normal,
        is_maximal,
        is_maximal_normal,
    }
}

/// Least filter containing the nonempty set `X`, by modus-ponens
/// saturation (equivalent to the finite-word characterization and
/// terminating within `|A|` rounds).
pub fn generated_filter(alg: &FiniteAlgebra, seed: &[Elem]) -> FilterSet {
    assert!(!seed.is_empty(), "generated filter needs a nonempty seed");
    let mut s = ElemSet::from_elems(alg.n(), seed);
    s.insert(alg.one());
    saturate(alg, &mut s);
    classify_subset(alg, &s)
}

fn saturate(alg: &FiniteAlgebra, s: &mut ElemSet) {
    loop {
        let mut grew = false;
        for a in alg.elems() {
            if !s.contains(a) {
                continue;
            }
            for b in alg.elems() {
                if !s.contains(b) && s.contains(alg.arrow(a, b)) {
                    s.insert(b);
                    grew = true;
                }
            }
        }
        if !grew {
            return;
        }
    }
}

/// `F(u)` as iterated implication: `{a | u →ⁿ a = 1 for some n ≥ 0}`.
/// The sequence `u →ⁿ a` is increasing, so it stabilizes within `|A|`
/// steps; the trace records the first `n` reaching `1` per element.
pub fn filter_from_unit(alg: &FiniteAlgebra, u: Elem) -> (ElemSet, Vec<Option<usize>>) {
    let mut set = ElemSet::empty(alg.n());
    let mut trace = vec![None; alg.n()];
    for a in alg.elems() {
        let mut cur = a;
        let mut steps = 0usize;
        loop {
            if cur == alg.one() {
                trace[a.0] = Some(steps);
                set.insert(a);
                break;
            }
            let next = alg.arrow(u, cur);
            if next == cur {
                break;
            }
            cur = next;
            steps += 1;
        }
    }
    (set, trace)
}

/// Filter generated by `F ∪ {b}`: `{a | b →ⁿ a ∈ F for some n}`.
pub fn extend_filter(alg: &FiniteAlgebra, f: &ElemSet, b: Elem) -> ElemSet {
    let mut out = ElemSet::empty(alg.n());
    for a in alg.elems() {
        let mut cur = a;
        loop {
            if f.contains(cur) {
                out.insert(a);
                break;
            }
            let next = alg.arrow(b, cur);
            if next == cur {
                break;
            }
            cur = next;
        }
    }
    out.insert(b);
    out
}

/// Least normal filter containing the seed: saturate under modus ponens
/// and under the normality exchange `a→b ∈ F ⟺ a⇝b ∈ F`.
pub fn normal_closure(alg: &FiniteAlgebra, seed: &[Elem]) -> ElemSet {
    let mut s = ElemSet::from_elems(alg.n(), seed);
    s.insert(alg.one());
    loop {
        saturate(alg, &mut s);
        let mut grew = false;
        for a in alg.elems() {
            for b in alg.elems() {
                let ar = alg.arrow(a, b);
                let sq = alg.squiggle(a, b);
                if s.contains(ar) != s.contains(sq) {
                    s.insert(ar);
                    s.insert(sq);
                    grew = true;
                }
            }
        }
        if !grew {
            return s;
        }
    }
}

const EXHAUSTIVE_BOUND: usize = 16;
const CLOSURE_BOUND: usize = 64;

/// All filters, each classified, sorted by size then pointwise.
///
/// Exhaustive subset scan for carriers up to 16 elements; closure
/// enumeration (breadth-first over single-element extensions) beyond, up
/// to 64 elements. Both paths produce the same list where they overlap.
pub fn all_filters(alg: &FiniteAlgebra) -> Result<Vec<FilterSet>> {
    let n = alg.n();
    let mut sets: Vec<ElemSet> = if n <= EXHAUSTIVE_BOUND {
        let mut found = Vec::new();
        for mask in 0u32..(1u32 << n) {
            if mask >> alg.one().0 & 1 == 0 {
                continue;
            }
            let set = ElemSet {
                n,
                words: vec![mask as u64],
            };
            if mp_witness(alg, &set).is_none() {
                found.push(set);
            }
        }
        found
    } else if n <= CLOSURE_BOUND {
        let mut seen = std::collections::BTreeSet::new();
        let mut queue = vec![{
            let mut s = ElemSet::empty(n);
            s.insert(alg.one());
            saturate(alg, &mut s);
            s
        }];
        while let Some(f) = queue.pop() {
            if !seen.insert(f.clone()) {
                continue;
            }
            for b in alg.elems() {
                if !f.contains(b) {
                    queue.push(extend_filter(alg, &f, b));
                }
            }
        }
        seen.into_iter().collect()
    } else {
        return Err(Error::TooLarge {
            n,
            bound: CLOSURE_BOUND,
        });
    };

    sets.sort_by_key(|s| (s.len(), s.elems()));
    Ok(sets.iter().map(|s| classify_subset(alg, s)).collect())
}

/// Quotient of `A` by a normal filter: classes of `Θ_F`, arrows defined
/// representative-wise, and the result re-verified as a pseudo-BCK algebra.
#[derive(Debug, Clone)]
pub struct QuotientResult {
    pub quotient: FiniteAlgebra,
    /// original element → quotient element
    pub projection: Vec<Elem>,
    /// quotient element → members of its class, ascending
    pub classes: Vec<Vec<Elem>>,
}

pub fn quotient(alg: &FiniteAlgebra, f: &FilterSet) -> Result<QuotientResult> {
    if !f.is_filter.holds() {
        return Err(Error::NotAFilter);
    }
    if !f.is_normal.holds() {
        return Err(Error::NotNormal);
    }
    let n = alg.n();
    let related =
        |a: Elem, b: Elem| f.subset.contains(alg.arrow(a, b)) && f.subset.contains(alg.arrow(b, a));

    // classes keyed by minimum member, in ascending order of that member
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<Elem>> = Vec::new();
    for a in alg.elems() {
        if class_of[a.0] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut members = Vec::new();
        for b in alg.elems() {
            if class_of[b.0] == usize::MAX && related(a, b) {
                class_of[b.0] = id;
                members.push(b);
            }
        }
        classes.push(members);
    }

    // congruence check: the tables must be independent of representatives
    for class in &classes {
        let rep = class[0];
        for &a in class {
            for b in alg.elems() {
                if class_of[alg.arrow(a, b).0] != class_of[alg.arrow(rep, b).0]
                    || class_of[alg.arrow(b, a).0] != class_of[alg.arrow(b, rep).0]
                    || class_of[alg.squiggle(a, b).0] != class_of[alg.squiggle(rep, b).0]
                    || class_of[alg.squiggle(b, a).0] != class_of[alg.squiggle(b, rep).0]
                {
                    return Err(Error::NotNormal);
                }
            }
        }
    }

    let m = classes.len();
    let names: Vec<String> = classes
        .iter()
        .map(|c| format!("{}/F", alg.elem_name(c[0])))
        .collect();
    let mut arrow_cells = Vec::with_capacity(m * m);
    let mut squiggle_cells = Vec::with_capacity(m * m);
    for i in 0..m {
        for j in 0..m {
            let (a, b) = (classes[i][0], classes[j][0]);
            arrow_cells.push(Elem(class_of[alg.arrow(a, b).0]));
            squiggle_cells.push(Elem(class_of[alg.squiggle(a, b).0]));
        }
    }
    let one = Elem(class_of[alg.one().0]);
    let zero = match alg.zero() {
        Some(z) => Some(Elem(class_of[z.0])),
        None => {
            // a quotient of an unbounded algebra may acquire a least class
            let le =
                |i: usize, j: usize| f.subset.contains(alg.arrow(classes[i][0], classes[j][0]));
            (0..m).find(|&i| (0..m).all(|j| le(i, j))).map(Elem)
        }
    };
    let quotient = FiniteAlgebra::from_tables(
        format!("{}/F", alg.name()),
        names,
        arrow_cells,
        squiggle_cells,
        one,
        zero,
    )?;
    let projection = (0..n).map(|i| Elem(class_of[i])).collect();
    Ok(QuotientResult {
        quotient,
        projection,
        classes,
    })
}
