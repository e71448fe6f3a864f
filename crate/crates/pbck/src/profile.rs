//! Structural classification of a verified algebra.
//!
//! [`structural_profile`] evaluates every predicate exhaustively over all
//! tuples and attaches a concrete counterexample to every law that fails:
//!
//! - `good`: `x⁻⁼ = x⁼⁻` for all `x` (bounded only);
//! - `pdn`: both double negations equal `x` (pseudo-double-negation);
//! - `jn`: join-negation, `x ∨ᵢ y = x⁻⁼ ∨ᵢ y⁻⁼` for both joins — the
//!   defining identity uses `⁻⁼` in both clauses; the `⁼⁻` variant of the
//!   `∨₂` clause is reported separately as `jn_mixed` rather than guessed
//!   to be the intended reading;
//! - `vee1_commutative` / `vee2_commutative` / `sup_commutative`;
//! - `lattice`: every pair has a least upper bound and a greatest lower
//!   bound;
//! - `pp`: the pseudo-product `x ⊙ y = min{z | x ≤ y→z} = min{z | y ≤ x⇝z}`
//!   exists for every pair ("min" is a least element, not a minimal one);
//! - `rcp`: relative cancellation;
//! - `downwards_directed`: every pair has a common lower bound;
//! - `bck`: the two arrows coincide.

use crate::algebra::{Elem, FiniteAlgebra};
use crate::Law;

/// Outcome of a pseudo-product query `x ⊙ y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PseudoProduct {
    Exists(Elem),
    /// No common least element. `candidates` is `{z | x ≤ y→z}` and
    /// `minimal_antichain` its minimal elements (the obstruction).
    DoesNotExist {
        candidates: Vec<Elem>,
        minimal_antichain: Vec<Elem>,
    },
}

impl PseudoProduct {
    pub fn exists(&self) -> bool {
        matches!(self, PseudoProduct::Exists(_))
    }
}

/// `x ⊙ y`, the common least element of `{z | x ≤ y→z}` and
/// `{z | y ≤ x⇝z}` when both least elements exist and coincide.
pub fn pp_product(alg: &FiniteAlgebra, x: Elem, y: Elem) -> PseudoProduct {
    let set1: Vec<Elem> = alg.elems().filter(|&z| alg.le(x, alg.arrow(y, z))).collect();
    let set2: Vec<Elem> = alg
        .elems()
        .filter(|&z| alg.le(y, alg.squiggle(x, z)))
        .collect();
    let m1 = alg.least(&set1);
    let m2 = alg.least(&set2);
    match (m1, m2) {
        (Some(a), Some(b)) if a == b => PseudoProduct::Exists(a),
        _ => {
            // witness the set lacking a least element (or the disagreement)
            let candidates = if m1.is_none() { set1 } else { set2 };
            let minimal_antichain = alg.minimal(&candidates);
            PseudoProduct::DoesNotExist {
                candidates,
                minimal_antichain,
            }
        }
    }
}

/// Counterexample to the lattice property: a pair whose upper (or lower)
/// bounds have no least (resp. greatest) element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeWitness {
    pub pair: (Elem, Elem),
    /// `true` if the join failed, `false` if the meet failed.
    pub join_failed: bool,
    /// minimal upper bounds (resp. maximal lower bounds) of the pair
    pub frontier: Vec<Elem>,
}

/// Exhaustive structural classification. Negative flags carry witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub bounded: bool,
    /// `x⁻⁼ = x⁼⁻`; fails with `(x, x⁻⁼, x⁼⁻)`. False on unbounded algebras.
    pub good: Law<(Elem, Elem, Elem)>,
    /// `x⁻⁼ = x⁼⁻ = x`; fails with the offending `x`.
    pub pdn: Law<Elem>,
    /// join-negation as defined (both clauses through `⁻⁼`)
    pub jn: Law<(Elem, Elem)>,
    /// the mixed reading: `∨₁` through `⁻⁼`, `∨₂` through `⁼⁻`
    pub jn_mixed: Law<(Elem, Elem)>,
    pub vee1_commutative: Law<(Elem, Elem)>,
    pub vee2_commutative: Law<(Elem, Elem)>,
    pub sup_commutative: bool,
    pub lattice: Law<LatticeWitness>,
    /// pseudo-product totality; fails with the pair and its antichain
    pub pp: Law<((Elem, Elem), Vec<Elem>)>,
    /// relative cancellation; fails with `(a, b, c)`
    pub rcp: Law<(Elem, Elem, Elem)>,
    pub downwards_directed: Law<(Elem, Elem)>,
    pub bck: Law<(Elem, Elem)>,
}

/// `x⁻⁼ = x⁼⁻` for all `x`; the witness carries `(x, x⁻⁼, x⁼⁻)`.
/// Unbounded algebras fail vacuously (negations undefined).
pub fn goodness(alg: &FiniteAlgebra) -> Law<(Elem, Elem, Elem)> {
    if !alg.is_bounded() {
        return Law::Fails((alg.one(), alg.one(), alg.one()));
    }
    Law::from_witness(alg.elems().find_map(|x| {
        let nm = alg.neg_sim(alg.neg_minus(x).unwrap()).unwrap();
        let mn = alg.neg_minus(alg.neg_sim(x).unwrap()).unwrap();
        (nm != mn).then_some((x, nm, mn))
    }))
}

/// Every pair has a common lower bound; the witness is an undirected pair.
pub fn downwards_directed(alg: &FiniteAlgebra) -> Law<(Elem, Elem)> {
    Law::from_witness(pair_witness(alg, |a, b| {
        alg.elems().any(|x| alg.le(x, a) && alg.le(x, b))
    }))
}

/// Evaluate the full profile of a verified algebra.
pub fn structural_profile(alg: &FiniteAlgebra) -> PropertyReport {
    let bounded = alg.is_bounded();
    let good = goodness(alg);

    let pdn = if bounded {
        Law::from_witness(alg.elems().find(|&x| {
            let nm = alg.neg_sim(alg.neg_minus(x).unwrap()).unwrap();
            let mn = alg.neg_minus(alg.neg_sim(x).unwrap()).unwrap();
            nm != x || mn != x
        }))
    } else {
        Law::Fails(alg.one())
    };

    let dneg = |x: Elem| alg.neg_sim(alg.neg_minus(x).unwrap()).unwrap();
    let dneg_mixed = |x: Elem| alg.neg_minus(alg.neg_sim(x).unwrap()).unwrap();

    let jn = if bounded {
        Law::from_witness(pair_witness(alg, |x, y| {
            alg.vee1(x, y) == alg.vee1(dneg(x), dneg(y))
                && alg.vee2(x, y) == alg.vee2(dneg(x), dneg(y))
        }))
    } else {
        Law::Fails((alg.one(), alg.one()))
    };

    let jn_mixed = if bounded {
        Law::from_witness(pair_witness(alg, |x, y| {
            alg.vee1(x, y) == alg.vee1(dneg(x), dneg(y))
                && alg.vee2(x, y) == alg.vee2(dneg_mixed(x), dneg_mixed(y))
        }))
    } else {
        Law::Fails((alg.one(), alg.one()))
    };

    let vee1_commutative =
        Law::from_witness(pair_witness(alg, |x, y| alg.vee1(x, y) == alg.vee1(y, x)));
    let vee2_commutative =
        Law::from_witness(pair_witness(alg, |x, y| alg.vee2(x, y) == alg.vee2(y, x)));
    let sup_commutative = vee1_commutative.holds() && vee2_commutative.holds();

    let lattice = Law::from_witness(lattice_witness(alg));

    let pp = Law::from_witness(alg.elems().find_map(|x| {
        alg.elems().find_map(|y| match pp_product(alg, x, y) {
            PseudoProduct::Exists(_) => None,
            PseudoProduct::DoesNotExist {
                minimal_antichain, ..
            } => Some(((x, y), minimal_antichain)),
        })
    }));

    let rcp = Law::from_witness(rcp_witness(alg));

    let downwards_directed = self::downwards_directed(alg);

    let bck = Law::from_witness(pair_witness(alg, |x, y| {
        alg.arrow(x, y) == alg.squiggle(x, y)
    }));

    PropertyReport {
        bounded,
        good,
        pdn,
        jn,
        jn_mixed,
        vee1_commutative,
        vee2_commutative,
        sup_commutative,
        lattice,
        pp,
        rcp,
        downwards_directed,
        bck,
    }
}

fn pair_witness(
    alg: &FiniteAlgebra,
    ok: impl Fn(Elem, Elem) -> bool,
) -> Option<(Elem, Elem)> {
    for x in alg.elems() {
        for y in alg.elems() {
            if !ok(x, y) {
                return Some((x, y));
            }
        }
    }
    None
}

fn lattice_witness(alg: &FiniteAlgebra) -> Option<LatticeWitness> {
    for x in alg.elems() {
        for y in alg.elems() {
            let uppers: Vec<Elem> = alg
                .elems()
                .filter(|&u| alg.le(x, u) && alg.le(y, u))
                .collect();
            if alg.least(&uppers).is_none() {
                return Some(LatticeWitness {
                    pair: (x, y),
                    join_failed: true,
                    frontier: alg.minimal(&uppers),
                });
            }
            let lowers: Vec<Elem> = alg
                .elems()
                .filter(|&l| alg.le(l, x) && alg.le(l, y))
                .collect();
            let greatest = lowers
                .iter()
                .copied()
                .find(|&m| lowers.iter().all(|&z| alg.le(z, m)));
            if greatest.is_none() {
                let maximal: Vec<Elem> = lowers
                    .iter()
                    .copied()
                    .filter(|&m| lowers.iter().all(|&z| z == m || !alg.le(m, z)))
                    .collect();
                return Some(LatticeWitness {
                    pair: (x, y),
                    join_failed: false,
                    frontier: maximal,
                });
            }
        }
    }
    None
}

fn rcp_witness(alg: &FiniteAlgebra) -> Option<(Elem, Elem, Elem)> {
    for c in alg.elems() {
        for a in alg.elems() {
            if !alg.le(a, c) {
                continue;
            }
            for b in alg.elems() {
                if a == b || !alg.le(b, c) {
                    continue;
                }
                if alg.arrow(c, a) == alg.arrow(c, b) && alg.squiggle(c, a) == alg.squiggle(c, b)
                {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn a1_profile_matches_paper() {
        let a1 = corpus::a1();
        let p = structural_profile(&a1);
        assert!(p.good.holds());
        assert!(p.lattice.holds());
        assert!(!p.pp.holds());
        // c ⊙ b fails with the antichain {b, c} inside {b, c, d, 1}
        let c = a1.elem_by_name("c").unwrap();
        let b = a1.elem_by_name("b").unwrap();
        let d = a1.elem_by_name("d").unwrap();
        match pp_product(&a1, c, b) {
            PseudoProduct::DoesNotExist {
                candidates,
                minimal_antichain,
            } => {
                assert_eq!(candidates, vec![b, c, d, a1.one()]);
                assert_eq!(minimal_antichain, vec![b, c]);
            }
            PseudoProduct::Exists(_) => panic!("c ⊙ b should not exist on a1"),
        }
    }

    #[test]
    fn diamond_profile_matches_paper() {
        let d = corpus::diamond();
        let p = structural_profile(&d);
        // not good, witnessed at a: a⁻⁼ = 1 while a⁼⁻ differs
        match &p.good {
            Law::Fails((x, nm, _mn)) => {
                assert_eq!(d.elem_name(*x), "a");
                assert_eq!(*nm, d.one());
            }
            Law::Holds => panic!("diamond must not be good"),
        }
        assert!(p.downwards_directed.holds());
        assert!(p.rcp.holds());
        assert!(p.lattice.holds());
        assert!(!p.bck.holds());
    }

    #[test]
    fn two_block_profile() {
        let b = corpus::two_block9();
        let p = structural_profile(&b);
        assert!(!p.bck.holds());
        assert!(!p.bounded);
        // first undirected pair in scan order is (o1, o2)
        match &p.downwards_directed {
            Law::Fails((x, y)) => {
                assert_eq!(b.elem_name(*x), "o1");
                assert_eq!(b.elem_name(*y), "o2");
            }
            Law::Holds => panic!("two blocks cannot be downwards-directed"),
        }
    }

    #[test]
    fn pentagon_pp_fails_at_c_b() {
        let p = corpus::pentagon();
        let c = p.elem_by_name("c").unwrap();
        let b = p.elem_by_name("b").unwrap();
        match pp_product(&p, c, b) {
            PseudoProduct::DoesNotExist { candidates, .. } => {
                assert_eq!(candidates, vec![b, c, p.one()]);
            }
            PseudoProduct::Exists(_) => panic!("c ⊙ b should not exist on the pentagon"),
        }
    }

    #[test]
    fn trivial_products() {
        // x ⊙ 1 = x and 1 ⊙ x = x on every bundled algebra
        for alg in corpus::all_algebras() {
            for x in alg.elems() {
                assert_eq!(pp_product(&alg, x, alg.one()), PseudoProduct::Exists(x));
                assert_eq!(pp_product(&alg, alg.one(), x), PseudoProduct::Exists(x));
            }
        }
    }

    #[test]
    fn chain2_is_everything() {
        let p = structural_profile(&corpus::chain2());
        assert!(p.bounded && p.sup_commutative && p.bck.holds());
        assert!(p.good.holds() && p.pdn.holds() && p.jn.holds());
        assert!(p.lattice.holds() && p.pp.holds() && p.rcp.holds());
        assert!(p.downwards_directed.holds());
    }
}
