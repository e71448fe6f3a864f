//! Coherence of betting books, de Finetti maps, and convex decomposition
//! of states over state-morphisms.
//!
//! A bookmaker assigns odds `β: A′ → [0,1]` on a finite support. The book
//! is coherent when no stakes vector `σ` gives the bettor a sure win
//! against every possible world `V`, i.e. when for every `σ` some world
//! satisfies `Σ σᵢ(β(aᵢ) − V(aᵢ)) ≥ 0`. With a finite world list this is
//! exactly membership of `β` in the convex hull of the worlds restricted
//! to the support; Farkas duality turns a failed membership into the
//! winning stakes. Both certificate shapes are re-verified by direct
//! arithmetic before being returned:
//!
//! - coherent: convex weights over worlds reproducing `β` on the support;
//! - incoherent: stakes with `Σ σᵢ(β(aᵢ) − V(aᵢ)) < 0` for every world.
//!
//! The default world set is the vertex list of the Bosbach polytope (the
//! state-morphisms); on an algebra with no states every book is
//! incoherent and is reported with the distinct [`CoherenceVerdict::Stateless`]
//! verdict. Total coherent books are exactly the Bosbach states, and every
//! state decomposes as a convex combination over the state-morphisms —
//! the finite-scale form of integral representation.

use num_traits::{One, Signed, Zero};

use crate::algebra::{Elem, FiniteAlgebra};
use crate::polytope::{self, LinearSystem, Membership};
use crate::rat::Rat;
use crate::states::{self, Valuation, ValuationKind};
use crate::{Error, Result};

fn engine_check(cond: bool, what: &str) {
    assert!(cond, "internal contradiction: {what}");
}

/// Partial assignment of betting odds on a nonempty support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Book {
    entries: Vec<(Elem, Rat)>,
}

impl Book {
    /// Validates: nonempty support, no repeated element, values in `[0,1]`.
    pub fn new(alg: &FiniteAlgebra, entries: Vec<(Elem, Rat)>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidBook("empty support".into()));
        }
        for (i, (e, v)) in entries.iter().enumerate() {
            if e.0 >= alg.n() {
                return Err(Error::InvalidBook("element out of range".into()));
            }
            if entries[..i].iter().any(|(f, _)| f == e) {
                return Err(Error::InvalidBook(format!(
                    "element `{}` assigned twice",
                    alg.elem_name(*e)
                )));
            }
            if v.is_negative() || v > &Rat::one() {
                return Err(Error::InvalidBook(format!(
                    "value for `{}` outside [0,1]",
                    alg.elem_name(*e)
                )));
            }
        }
        Ok(Book { entries })
    }

    pub fn entries(&self) -> &[(Elem, Rat)] {
        &self.entries
    }

    pub fn support(&self) -> Vec<Elem> {
        self.entries.iter().map(|(e, _)| *e).collect()
    }
}

/// Verdict with a machine-checkable witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoherenceVerdict {
    /// convex weights over the world list reproducing the book
    Coherent { weights: Vec<Rat> },
    /// stakes (normalized to max |σ| = 1, indexed like the book's support)
    /// that win strictly against every world
    Incoherent { stakes: Vec<Rat> },
    /// the algebra has no worlds at all; every book loses by default
    Stateless,
}

impl CoherenceVerdict {
    pub fn is_coherent(&self) -> bool {
        matches!(self, CoherenceVerdict::Coherent { .. })
    }
}

fn decide(book: &Book, worlds: &[Valuation], n: usize) -> CoherenceVerdict {
    if worlds.is_empty() {
        return CoherenceVerdict::Stateless;
    }
    let coords: Vec<usize> = book.entries.iter().map(|(e, _)| e.0).collect();
    let mut p = vec![Rat::zero(); n];
    for (e, v) in &book.entries {
        p[e.0] = v.clone();
    }
    let points: Vec<Vec<Rat>> = worlds.iter().map(|w| w.values.clone()).collect();
    match polytope::convex_membership(&p, &points, Some(&coords)) {
        Membership::Inside(weights) => CoherenceVerdict::Coherent { weights },
        Membership::Outside { sigma, .. } => {
            // bettor's stakes flip the separator; normalize to max |σ| = 1
            let mut stakes: Vec<Rat> = sigma.iter().map(|s| -s).collect();
            let max = stakes
                .iter()
                .map(Rat::abs)
                .max()
                .expect("support is nonempty");
            engine_check(!max.is_zero(), "zero separator escaped membership");
            for s in stakes.iter_mut() {
                *s /= &max;
            }
            for world in worlds {
                let gain: Rat = book
                    .entries
                    .iter()
                    .zip(&stakes)
                    .map(|((e, beta), s)| s * (beta - world.get(*e)))
                    .sum();
                engine_check(gain.is_negative(), "stakes fail to beat some world");
            }
            CoherenceVerdict::Incoherent { stakes }
        }
    }
}

/// Decide coherence of a book against the given worlds (default: the
/// state-morphisms, i.e. the Bosbach polytope vertices).
pub fn coherence_check(
    alg: &FiniteAlgebra,
    book: &Book,
    worlds: Option<&[Valuation]>,
) -> Result<CoherenceVerdict> {
    let owned;
    let worlds = match worlds {
        Some(w) => w,
        None => {
            owned = states::bosbach_states(alg)?.vertices;
            &owned
        }
    };
    Ok(decide(book, worlds, alg.n()))
}

/// Two-sided check that a total valuation is a de Finetti map: coherence
/// over the full carrier is decided by hull membership and must agree with
/// the Bosbach verdict of [`states::check_state`].
#[derive(Debug, Clone)]
pub struct DeFinettiReport {
    pub is_de_finetti: bool,
    pub is_bosbach: bool,
    pub verdict: CoherenceVerdict,
}

pub fn definetti_total_check(alg: &FiniteAlgebra, values: &[Rat]) -> Result<DeFinettiReport> {
    assert_eq!(values.len(), alg.n(), "valuation must be total");
    let in_range = values
        .iter()
        .all(|v| !v.is_negative() && v <= &Rat::one());
    if !in_range {
        return Err(Error::InvalidBook("values outside [0,1]".into()));
    }
    let book = Book::new(
        alg,
        alg.elems().map(|e| (e, values[e.0].clone())).collect(),
    )?;
    let verdict = coherence_check(alg, &book, None)?;
    let is_de_finetti = verdict.is_coherent();
    let is_bosbach = states::check_state(alg, values)?.is_bosbach();
    engine_check(
        is_de_finetti == is_bosbach,
        "total coherence and the Bosbach laws disagree",
    );
    Ok(DeFinettiReport {
        is_de_finetti,
        is_bosbach,
        verdict,
    })
}

/// Convex decomposition of a Bosbach state over the state-morphisms.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub worlds: Vec<Valuation>,
    pub weights: Vec<Rat>,
    /// whether the weight polytope is a single point
    pub unique: bool,
}

/// Express a Bosbach state as a convex combination of state-morphisms.
/// When several weight vectors work, the lexicographically least vertex of
/// the weight polytope is returned and `unique` is `false`.
pub fn borel_decompose(alg: &FiniteAlgebra, values: &[Rat]) -> Result<Decomposition> {
    let report = states::check_state(alg, values)?;
    if !report.is_bosbach() {
        return Err(Error::NotBosbach("decomposition needs a Bosbach state".into()));
    }
    let worlds = states::bosbach_states(alg)?.vertices;
    engine_check(!worlds.is_empty(), "Bosbach state exists on a stateless algebra");

    let m = worlds.len();
    let mut sys = LinearSystem::new((0..m).map(|j| format!("w{j}")).collect());
    sys.lower = vec![Some(Rat::zero()); m];
    for a in alg.elems() {
        let row: Vec<Rat> = worlds.iter().map(|w| w.get(a).clone()).collect();
        sys.push_eq(row, values[a.0].clone());
    }
    sys.push_eq(vec![Rat::one(); m], Rat::one());

    let list = polytope::vertices(&sys)?;
    engine_check(
        !list.is_empty(),
        "Bosbach state escapes the hull of the state-morphisms",
    );
    let weights = list.vertices[0].point.clone();
    for a in alg.elems() {
        let mixed: Rat = worlds
            .iter()
            .zip(&weights)
            .map(|(w, lambda)| lambda * w.get(a))
            .sum();
        engine_check(mixed == values[a.0], "decomposition fails to reproduce the state");
    }
    Ok(Decomposition {
        unique: list.len() == 1,
        worlds,
        weights,
    })
}

/// Coherence against the extremal state-measures of a unital algebra.
pub fn unital_coherence(
    alg: &FiniteAlgebra,
    unit: Elem,
    book: &Book,
) -> Result<CoherenceVerdict> {
    let worlds = crate::measures::state_measures(alg, Some(unit))?.vertices;
    Ok(decide(book, &worlds, alg.n()))
}

/// Convenience: mix a list of valuations with the given convex weights.
pub fn mix(valuations: &[Valuation], weights: &[Rat]) -> Valuation {
    assert_eq!(valuations.len(), weights.len());
    assert!(!valuations.is_empty());
    let n = valuations[0].values.len();
    let mut out = vec![Rat::zero(); n];
    for (v, w) in valuations.iter().zip(weights) {
        for (acc, val) in out.iter_mut().zip(&v.values) {
            *acc += w * val;
        }
    }
    Valuation::new(out, ValuationKind::Unclassified)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::rat::{rat, ratio};

    fn book(alg: &FiniteAlgebra, entries: &[(&str, Rat)]) -> Book {
        Book::new(
            alg,
            entries
                .iter()
                .map(|(t, v)| (alg.elem_by_name(t).unwrap(), v.clone()))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn a1_books() {
        let a1 = corpus::a1();
        // the unique world is (0,1,1,1,1,1)
        let b = book(&a1, &[("0", rat(0)), ("a", rat(1))]);
        match coherence_check(&a1, &b, None).unwrap() {
            CoherenceVerdict::Coherent { weights } => assert_eq!(weights, vec![rat(1)]),
            v => panic!("expected coherent, got {v:?}"),
        }
        let b = book(&a1, &[("0", ratio(1, 2))]);
        match coherence_check(&a1, &b, None).unwrap() {
            CoherenceVerdict::Incoherent { stakes } => {
                assert_eq!(stakes.len(), 1);
                // normalized: max |σ| = 1
                assert_eq!(stakes[0].abs(), rat(1));
            }
            v => panic!("expected incoherent, got {v:?}"),
        }
    }

    #[test]
    fn stateless_algebras_reject_every_book() {
        for alg in [corpus::diamond(), corpus::chain5()] {
            let b = book(&alg, &[("0", rat(0))]);
            assert_eq!(
                coherence_check(&alg, &b, None).unwrap(),
                CoherenceVerdict::Stateless
            );
        }
    }

    #[test]
    fn restricted_states_are_coherent() {
        let p = corpus::pentagon();
        let state = states::bosbach_states(&p).unwrap().vertices.remove(0);
        for support in [vec!["0", "b"], vec!["a", "c", "1"], vec!["b"]] {
            let entries: Vec<(&str, Rat)> = support
                .iter()
                .map(|t| (*t, state.get(p.elem_by_name(t).unwrap()).clone()))
                .collect();
            let b = book(&p, &entries);
            assert!(coherence_check(&p, &b, None).unwrap().is_coherent());
        }
    }

    #[test]
    fn definetti_total_check_agrees_with_state_laws() {
        let a1 = corpus::a1();
        let state: Vec<Rat> = [0, 1, 1, 1, 1, 1].iter().map(|&x| rat(x)).collect();
        let report = definetti_total_check(&a1, &state).unwrap();
        assert!(report.is_de_finetti && report.is_bosbach);

        let chain2 = corpus::chain2();
        let report = definetti_total_check(&chain2, &[rat(0), rat(1)]).unwrap();
        assert!(report.is_de_finetti);

        // the Riečan valuation of the stateless chain is not a de Finetti map
        let c5 = corpus::chain5();
        let riecan: Vec<Rat> = vec![rat(0), ratio(1, 2), ratio(1, 2), rat(1), rat(1)];
        let report = definetti_total_check(&c5, &riecan).unwrap();
        assert!(!report.is_de_finetti && !report.is_bosbach);
        assert_eq!(report.verdict, CoherenceVerdict::Stateless);
    }

    #[test]
    fn decompose_vertex_states() {
        for alg in [corpus::a1(), corpus::pentagon(), corpus::chain2()] {
            let vertices = states::bosbach_states(&alg).unwrap().vertices;
            for v in &vertices {
                let d = borel_decompose(&alg, &v.values).unwrap();
                assert!(d.unique);
                let self_weight: Rat = d
                    .worlds
                    .iter()
                    .zip(&d.weights)
                    .filter(|(w, _)| w.values == v.values)
                    .map(|(_, lambda)| lambda.clone())
                    .sum();
                assert_eq!(self_weight, rat(1));
            }
        }
    }

    #[test]
    fn decompose_rejects_non_states() {
        let c5 = corpus::chain5();
        let riecan: Vec<Rat> = vec![rat(0), ratio(1, 2), ratio(1, 2), rat(1), rat(1)];
        assert!(matches!(
            borel_decompose(&c5, &riecan),
            Err(Error::NotBosbach(_))
        ));
    }

    #[test]
    fn invalid_books_are_rejected() {
        let a1 = corpus::a1();
        assert!(matches!(
            Book::new(&a1, vec![]),
            Err(Error::InvalidBook(_))
        ));
        let zero = a1.zero().unwrap();
        assert!(matches!(
            Book::new(&a1, vec![(zero, rat(2))]),
            Err(Error::InvalidBook(_))
        ));
        assert!(matches!(
            Book::new(&a1, vec![(zero, rat(0)), (zero, rat(1))]),
            Err(Error::InvalidBook(_))
        ));
    }
}
