//! Bosbach states, Riečan states, state-morphisms, kernels and the
//! MV-quotient of a state.
//!
//! A Bosbach state on a bounded algebra is `s: A → [0,1]` with
//!
//! - (B1) `s(x) + s(x→y) = s(y) + s(y→x)`
//! - (B2) `s(x) + s(x⇝y) = s(y) + s(y⇝x)`
//! - (B3) `s(0) = 0` and `s(1) = 1`
//!
//! The set of all Bosbach states is an exact rational polytope; its
//! vertices are the extremal states, which coincide with the
//! state-morphisms (`s(x→y) = s(x⇝y) = min{1−s(x)+s(y), 1}`), with the
//! states satisfying the max-join law `s(x ∨₁ y) = max{s(x), s(y)}`, and
//! with the states whose kernel `{a | s(a) = 1}` is a maximal filter.
//! [`check_state`] evaluates all four characterizations independently and
//! treats any disagreement on a verified Bosbach state as an internal
//! contradiction (a bug in the engine, not a property of the input).
//!
//! Riečan states replace the symmetry identities by additivity over
//! orthogonal pairs: `x ⊥ y` iff `x⁻⁼ ≤ y⁼`, with partial sum
//! `x + y = x ⊕ y`. Orthogonality is defined on good algebras; a
//! permissive variant evaluates the raw `⊕` formula on non-good algebras
//! and labels the result non-canonical.

use num_traits::{One, Zero};

use crate::algebra::{Elem, FiniteAlgebra};
use crate::filters::{self, ElemSet, FilterSet};
use crate::polytope::{self, FarkasCertificate, LinearSystem};
use crate::rat::Rat;
use crate::{Error, Law, Result};

/// Exact rational assignment `element → ℚ`, with the kind its producer
/// claims for it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Valuation {
    pub values: Vec<Rat>,
    pub kind: ValuationKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValuationKind {
    Bosbach,
    Riecan,
    StateMorphism,
    Measure,
    StateMeasure,
    MeasureMorphism,
    Unclassified,
}

impl Valuation {
    pub fn new(values: Vec<Rat>, kind: ValuationKind) -> Self {
        Valuation { values, kind }
    }

    pub fn get(&self, e: Elem) -> &Rat {
        &self.values[e.0]
    }
}

/// `x →Ł y = min{1 − x + y, 1}`, the Łukasiewicz implication on `[0,1]`.
pub fn luk_arrow(x: &Rat, y: &Rat) -> Rat {
    let v = Rat::one() - x + y;
    if v > Rat::one() {
        Rat::one()
    } else {
        v
    }
}

fn engine_check(cond: bool, what: &str) {
    assert!(cond, "internal contradiction: {what}");
}

/// Per-axiom verdicts for a valuation, with witnesses for failures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateReport {
    /// all values inside `[0, 1]`
    pub in_range: Law<Elem>,
    pub b1: Law<(Elem, Elem)>,
    pub b2: Law<(Elem, Elem)>,
    pub b3: bool,
    /// additivity over orthogonal pairs; `None` when the algebra is not
    /// good (orthogonality undefined)
    pub r1: Option<Law<(Elem, Elem)>>,
    pub r2: bool,
    pub sm1: bool,
    /// `s(x→y) = s(x⇝y) = s(x) →Ł s(y)`
    pub sm2: Law<(Elem, Elem)>,
    /// `s(x ∨₁ y) = max{s(x), s(y)}`
    pub max_join_law: Law<(Elem, Elem)>,
    /// extremality of a Bosbach state (`None` when B1–B3 fail)
    pub extremal: Option<bool>,
    pub kernel: FilterSet,
}

impl StateReport {
    pub fn is_bosbach(&self) -> bool {
        self.in_range.holds() && self.b1.holds() && self.b2.holds() && self.b3
    }

    pub fn is_riecan(&self) -> bool {
        self.in_range.holds() && self.r1.as_ref().is_some_and(Law::holds) && self.r2
    }

    pub fn is_state_morphism(&self) -> bool {
        self.in_range.holds() && self.sm1 && self.sm2.holds()
    }
}

/// The equality system cut out by (B1)–(B3) inside the unit box, one
/// variable per element; B1/B2 are generated once per unordered pair.
pub fn bosbach_system(alg: &FiniteAlgebra) -> Result<LinearSystem> {
    let zero = alg.zero().ok_or(Error::NotBounded)?;
    let n = alg.n();
    let mut sys = LinearSystem::unit_box(alg.elem_names().to_vec());

    let mut boundary = vec![Rat::zero(); n];
    boundary[zero.0] = Rat::one();
    sys.push_eq(boundary, Rat::zero());
    let mut boundary = vec![Rat::zero(); n];
    boundary[alg.one().0] = Rat::one();
    sys.push_eq(boundary, Rat::one());

    let mut seen = std::collections::HashSet::new();
    for x in alg.elems() {
        for y in alg.elems() {
            if x.0 >= y.0 {
                continue;
            }
            for (xy, yx) in [
                (alg.arrow(x, y), alg.arrow(y, x)),
                (alg.squiggle(x, y), alg.squiggle(y, x)),
            ] {
                let mut row = vec![Rat::zero(); n];
                row[x.0] += Rat::one();
                row[xy.0] += Rat::one();
                row[y.0] -= Rat::one();
                row[yx.0] -= Rat::one();
                if seen.insert(row.clone()) {
                    sys.push_eq(row, Rat::zero());
                }
            }
        }
    }
    Ok(sys)
}

/// A state polytope: the defining system, its vertices (each one a
/// verified valuation), and the infeasibility certificate when empty.
#[derive(Debug, Clone)]
pub struct StateSpace {
    pub system: LinearSystem,
    pub vertices: Vec<Valuation>,
    pub certificate: Option<FarkasCertificate>,
    /// `false` marks the permissive Riečan space of a non-good algebra
    pub canonical: bool,
}

/// Enumerate all extremal Bosbach states. Every vertex is re-checked to be
/// a Bosbach state and (by the extremality theorem) a state-morphism.
pub fn bosbach_states(alg: &FiniteAlgebra) -> Result<StateSpace> {
    let system = bosbach_system(alg)?;
    let list = polytope::vertices(&system)?;
    let mut vertices = Vec::with_capacity(list.len());
    for v in &list.vertices {
        let report = check_state(alg, &v.point)?;
        engine_check(report.is_bosbach(), "Bosbach polytope vertex fails B1-B3");
        engine_check(
            report.is_state_morphism(),
            "extremal Bosbach state is not a state-morphism",
        );
        vertices.push(Valuation::new(v.point.clone(), ValuationKind::StateMorphism));
    }
    let certificate = if vertices.is_empty() {
        match polytope::feasible(&system) {
            polytope::Feasibility::Infeasible(cert) => Some(cert),
            // a bounded nonempty polytope always has a vertex
            polytope::Feasibility::Feasible(_) => {
                engine_check(false, "empty vertex list on feasible state system");
                None
            }
        }
    } else {
        None
    };
    Ok(StateSpace {
        system,
        vertices,
        certificate,
        canonical: true,
    })
}

/// Exhaustively check every state axiom on a total valuation; on verified
/// Bosbach states the derived laws (join symmetry, arrow agreement,
/// monotonicity, negation complement) and the four extremality
/// characterizations are cross-checked and must agree.
pub fn check_state(alg: &FiniteAlgebra, values: &[Rat]) -> Result<StateReport> {
    let zero = alg.zero().ok_or(Error::NotBounded)?;
    assert_eq!(values.len(), alg.n(), "valuation must be total");
    let v = |e: Elem| &values[e.0];

    let in_range = Law::from_witness(
        alg.elems()
            .find(|&x| v(x) < &Rat::zero() || v(x) > &Rat::one()),
    );

    let pair_law = |ok: &dyn Fn(Elem, Elem) -> bool| -> Law<(Elem, Elem)> {
        for x in alg.elems() {
            for y in alg.elems() {
                if !ok(x, y) {
                    return Law::Fails((x, y));
                }
            }
        }
        Law::Holds
    };

    let b1 = pair_law(&|x, y| {
        v(x) + v(alg.arrow(x, y)) == v(y) + v(alg.arrow(y, x))
    });
    let b2 = pair_law(&|x, y| {
        v(x) + v(alg.squiggle(x, y)) == v(y) + v(alg.squiggle(y, x))
    });
    let b3 = v(zero).is_zero() && v(alg.one()).is_one();

    let good = crate::profile::goodness(alg).holds();
    let r1 = if good {
        let mut law = Law::Holds;
        for pair in orthogonal_pairs(alg)? {
            if v(pair.sum) != &(v(pair.x) + v(pair.y)) {
                law = Law::Fails((pair.x, pair.y));
                break;
            }
        }
        Some(law)
    } else {
        None
    };
    let r2 = v(alg.one()).is_one();

    let sm1 = v(zero).is_zero();
    let sm2 = pair_law(&|x, y| {
        let target = luk_arrow(v(x), v(y));
        v(alg.arrow(x, y)) == &target && v(alg.squiggle(x, y)) == &target
    });

    let max_join_law = pair_law(&|x, y| {
        v(alg.vee1(x, y)) == v(x).max(v(y))
    });

    let kernel_set: Vec<Elem> = alg.elems().filter(|&x| v(x).is_one()).collect();
    let kernel = filters::classify_subset(alg, &ElemSet::from_elems(alg.n(), &kernel_set));

    let bosbach = in_range.holds() && b1.holds() && b2.holds() && b3;
    let extremal = if bosbach {
        // derived laws of Bosbach states; failures are engine bugs
        for x in alg.elems() {
            let nm = alg.neg_minus(x)?;
            let ns = alg.neg_sim(x)?;
            engine_check(
                v(nm) == &(Rat::one() - v(x)) && v(ns) == &(Rat::one() - v(x)),
                "s(x⁻) = 1 − s(x) = s(x⁼) failed on a Bosbach state",
            );
            engine_check(
                v(alg.neg_sim(nm)?) == v(x) && v(alg.neg_minus(ns)?) == v(x),
                "s(x⁻⁼) = s(x) = s(x⁼⁻) failed on a Bosbach state",
            );
            for y in alg.elems() {
                engine_check(
                    v(alg.vee1(x, y)) == v(alg.vee1(y, x))
                        && v(alg.vee1(x, y)) == v(alg.vee2(x, y)),
                    "join symmetry failed on a Bosbach state",
                );
                engine_check(
                    v(alg.arrow(x, y)) == v(alg.squiggle(x, y)),
                    "s(x→y) = s(x⇝y) failed on a Bosbach state",
                );
                if alg.le(x, y) {
                    engine_check(v(x) <= v(y), "monotonicity failed on a Bosbach state");
                }
            }
        }
        // the extremality theorem: max-join ⟺ morphism ⟺ maximal kernel
        let ext = max_join_law.holds();
        engine_check(
            ext == (sm1 && sm2.holds()),
            "max-join law and state-morphism laws disagree",
        );
        engine_check(
            kernel.is_filter.holds() && kernel.is_proper && kernel.is_normal.holds(),
            "kernel of a Bosbach state is not a proper normal filter",
        );
        engine_check(
            ext == kernel.is_maximal.holds(),
            "extremality and kernel maximality disagree",
        );
        if good {
            engine_check(
                r1.as_ref().is_some_and(Law::holds),
                "Bosbach state on a good algebra fails Riečan additivity",
            );
        }
        Some(ext)
    } else {
        None
    };

    Ok(StateReport {
        in_range,
        b1,
        b2,
        b3,
        r1,
        r2,
        sm1,
        sm2,
        max_join_law,
        extremal,
        kernel,
    })
}

/// An orthogonal pair `x ⊥ y` (that is, `x⁻⁼ ≤ y⁼`) with its sum `x ⊕ y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrthoPair {
    pub x: Elem,
    pub y: Elem,
    pub sum: Elem,
}

/// All ordered orthogonal pairs of a good bounded algebra, in carrier scan
/// order.
pub fn orthogonal_pairs(alg: &FiniteAlgebra) -> Result<Vec<OrthoPair>> {
    let good = crate::profile::goodness(alg);
    if !good.holds() {
        let witness = good
            .witness()
            .map(|(x, _, _)| alg.elem_name(*x).to_string())
            .unwrap_or_default();
        return Err(Error::NotGood { witness });
    }
    orthogonal_pairs_permissive(alg)
}

/// Orthogonal pairs by the raw formulas, without requiring goodness; on a
/// non-good algebra the result is non-canonical.
pub fn orthogonal_pairs_permissive(alg: &FiniteAlgebra) -> Result<Vec<OrthoPair>> {
    if !alg.is_bounded() {
        return Err(Error::NotBounded);
    }
    let mut pairs = Vec::new();
    for x in alg.elems() {
        let xns = alg.neg_sim(alg.neg_minus(x)?)?;
        for y in alg.elems() {
            if alg.le(xns, alg.neg_sim(y)?) {
                pairs.push(OrthoPair {
                    x,
                    y,
                    sum: alg.oplus(x, y)?,
                });
            }
        }
    }
    Ok(pairs)
}

/// The Riečan system: additivity rows over all orthogonal pairs plus the
/// normalization `s(1) = 1`, inside the unit box.
pub fn riecan_system(alg: &FiniteAlgebra, pairs: &[OrthoPair]) -> LinearSystem {
    let n = alg.n();
    let mut sys = LinearSystem::unit_box(alg.elem_names().to_vec());
    let mut norm = vec![Rat::zero(); n];
    norm[alg.one().0] = Rat::one();
    sys.push_eq(norm, Rat::one());
    let mut seen = std::collections::HashSet::new();
    for p in pairs {
        let mut row = vec![Rat::zero(); n];
        row[p.sum.0] += Rat::one();
        row[p.x.0] -= Rat::one();
        row[p.y.0] -= Rat::one();
        if seen.insert(row.clone()) {
            sys.push_eq(row, Rat::zero());
        }
    }
    sys
}

/// Enumerate Riečan states of a good bounded algebra. Every Bosbach vertex
/// is asserted to lie inside the Riečan polytope (states embed).
pub fn riecan_states(alg: &FiniteAlgebra) -> Result<StateSpace> {
    let pairs = orthogonal_pairs(alg)?;
    let space = riecan_space(alg, &pairs, true)?;
    let bosbach = bosbach_states(alg)?;
    for v in &bosbach.vertices {
        engine_check(
            space.system.satisfied_by(&v.values),
            "Bosbach state escapes the Riečan polytope of a good algebra",
        );
    }
    Ok(space)
}

/// Permissive Riečan enumeration on any bounded algebra (non-canonical on
/// non-good ones).
pub fn riecan_states_permissive(alg: &FiniteAlgebra) -> Result<StateSpace> {
    let pairs = orthogonal_pairs_permissive(alg)?;
    let canonical = crate::profile::goodness(alg).holds();
    riecan_space(alg, &pairs, canonical)
}

fn riecan_space(alg: &FiniteAlgebra, pairs: &[OrthoPair], canonical: bool) -> Result<StateSpace> {
    let system = riecan_system(alg, pairs);
    let list = polytope::vertices(&system)?;
    let vertices = list
        .vertices
        .iter()
        .map(|v| Valuation::new(v.point.clone(), ValuationKind::Riecan))
        .collect::<Vec<_>>();
    let certificate = if vertices.is_empty() {
        match polytope::feasible(&system) {
            polytope::Feasibility::Infeasible(cert) => Some(cert),
            polytope::Feasibility::Feasible(_) => {
                engine_check(false, "empty vertex list on feasible Riečan system");
                None
            }
        }
    } else {
        None
    };
    Ok(StateSpace {
        system,
        vertices,
        certificate,
        canonical,
    })
}

/// `Ker(v) = {a | v(a) = 1}`, classified. No filterhood is asserted: the
/// kernel of a Riečan state can fail normality (or more).
pub fn kernel_of_state(alg: &FiniteAlgebra, values: &[Rat]) -> FilterSet {
    let members: Vec<Elem> = alg
        .elems()
        .filter(|&x| values[x.0] == Rat::one())
        .collect();
    filters::classify_subset(alg, &ElemSet::from_elems(alg.n(), &members))
}

/// Verification that `A / Ker(s)` is an archimedean MV-algebra carrying
/// the induced state.
#[derive(Debug, Clone)]
pub struct MvQuotientReport {
    pub quotient: FiniteAlgebra,
    pub projection: Vec<Elem>,
    /// `x⁻⁼ = x⁼⁻ = x` on the quotient
    pub pdn: Law<Elem>,
    pub vee1_commutative: Law<(Elem, Elem)>,
    pub vee2_commutative: Law<(Elem, Elem)>,
    pub arrows_coincide: Law<(Elem, Elem)>,
    pub oplus_commutative: Law<(Elem, Elem)>,
    pub oplus_associative: Law<(Elem, Elem, Elem)>,
    pub zero_neg_is_one: bool,
    /// `x ⊕ 0 = x`
    pub add_zero_identity: Law<Elem>,
    /// `x ⊕ 1 = 1`
    pub add_one_absorbs: Law<Elem>,
    /// `x⁻⁻ = x`
    pub double_negation: Law<Elem>,
    /// `y ⊕ (y ⊕ x⁻)⁻ = x ⊕ (x ⊕ y⁻)⁻`
    pub lukasiewicz_axiom: Law<(Elem, Elem)>,
    /// `n·x ≤ x⁻` for all `n` forces `x = 0`
    pub archimedean: Law<Elem>,
    /// the state factors through the projection
    pub state_well_defined: Law<(Elem, Elem)>,
    /// additivity of the induced state on `⊙`-orthogonal pairs
    pub state_additive: Law<(Elem, Elem)>,
}

impl MvQuotientReport {
    pub fn all_pass(&self) -> bool {
        self.pdn.holds()
            && self.vee1_commutative.holds()
            && self.vee2_commutative.holds()
            && self.arrows_coincide.holds()
            && self.oplus_commutative.holds()
            && self.oplus_associative.holds()
            && self.zero_neg_is_one
            && self.add_zero_identity.holds()
            && self.add_one_absorbs.holds()
            && self.double_negation.holds()
            && self.lukasiewicz_axiom.holds()
            && self.archimedean.holds()
            && self.state_well_defined.holds()
            && self.state_additive.holds()
    }
}

/// Build `Q = A / Ker(v)` for a Bosbach state `v` and verify the MV-algebra
/// structure `x ⊕ y = x⁼ → y`, `x⁻ = x → 0` together with the archimedean
/// property and the induced MV-state.
pub fn mv_quotient_check(alg: &FiniteAlgebra, values: &[Rat]) -> Result<MvQuotientReport> {
    let report = check_state(alg, values)?;
    if !report.is_bosbach() {
        let what = if !report.b1.holds() {
            "B1"
        } else if !report.b2.holds() {
            "B2"
        } else {
            "B3/range"
        };
        return Err(Error::NotBosbach(what.into()));
    }
    let q = filters::quotient(alg, &report.kernel)?;
    let quot = &q.quotient;
    let zero = quot.zero().expect("quotient of a bounded algebra is bounded");
    let neg = |x: Elem| quot.arrow(x, zero);
    let oplus = |x: Elem, y: Elem| quot.arrow(quot.squiggle(x, zero), y);

    let elem_law = |ok: &dyn Fn(Elem) -> bool| -> Law<Elem> {
        Law::from_witness(quot.elems().find(|&x| !ok(x)))
    };
    let pdn = elem_law(&|x| {
        quot.squiggle(neg(x), zero) == x && quot.arrow(quot.squiggle(x, zero), zero) == x
    });
    let double_negation = elem_law(&|x| neg(neg(x)) == x);
    let add_zero_identity = elem_law(&|x| oplus(x, zero) == x && oplus(zero, x) == x);
    let add_one_absorbs =
        elem_law(&|x| oplus(x, quot.one()) == quot.one() && oplus(quot.one(), x) == quot.one());

    let pair_law = |ok: &dyn Fn(Elem, Elem) -> bool| -> Law<(Elem, Elem)> {
        for x in quot.elems() {
            for y in quot.elems() {
                if !ok(x, y) {
                    return Law::Fails((x, y));
                }
            }
        }
        Law::Holds
    };
    let vee1_commutative = pair_law(&|x, y| quot.vee1(x, y) == quot.vee1(y, x));
    let vee2_commutative = pair_law(&|x, y| quot.vee2(x, y) == quot.vee2(y, x));
    let arrows_coincide = pair_law(&|x, y| quot.arrow(x, y) == quot.squiggle(x, y));
    let oplus_commutative = pair_law(&|x, y| oplus(x, y) == oplus(y, x));
    let lukasiewicz_axiom =
        pair_law(&|x, y| oplus(y, neg(oplus(y, neg(x)))) == oplus(x, neg(oplus(x, neg(y)))));

    let mut oplus_associative = Law::Holds;
    'assoc: for x in quot.elems() {
        for y in quot.elems() {
            for z in quot.elems() {
                if oplus(oplus(x, y), z) != oplus(x, oplus(y, z)) {
                    oplus_associative = Law::Fails((x, y, z));
                    break 'assoc;
                }
            }
        }
    }

    let zero_neg_is_one = neg(zero) == quot.one();

    // n·x stabilizes within |Q| steps since x ≤ x ⊕ x ≤ …
    let archimedean = Law::from_witness(quot.elems().find(|&x| {
        if x == zero {
            return false;
        }
        let bound = neg(x);
        let mut acc = x;
        for _ in 0..=quot.n() {
            if !quot.le(acc, bound) {
                return false;
            }
            let next = oplus(acc, x);
            if next == acc {
                break;
            }
            acc = next;
        }
        true // every multiple stayed below x⁻ yet x ≠ 0
    }));

    let mut state_well_defined = Law::Holds;
    'wd: for class in &q.classes {
        for &a in class {
            if values[a.0] != values[class[0].0] {
                state_well_defined = Law::Fails((class[0], a));
                break 'wd;
            }
        }
    }
    let induced = |x: Elem| values[q.classes[x.0][0].0].clone();
    let odot = |x: Elem, y: Elem| neg(oplus(neg(x), neg(y)));
    let state_additive = pair_law(&|x, y| {
        odot(x, y) != zero || induced(oplus(x, y)) == induced(x) + induced(y)
    });

    Ok(MvQuotientReport {
        quotient: q.quotient.clone(),
        projection: q.projection,
        pdn,
        vee1_commutative,
        vee2_commutative,
        arrows_coincide,
        oplus_commutative,
        oplus_associative,
        zero_neg_is_one,
        add_zero_identity,
        add_one_absorbs,
        double_negation,
        lukasiewicz_axiom,
        archimedean,
        state_well_defined,
        state_additive,
    })
}

/// The image of a state-morphism inside `[0,1] ∩ ℚ`: closure under the
/// standard MV operations and separation of kernel classes.
#[derive(Debug, Clone)]
pub struct ImageReport {
    /// sorted distinct values
    pub image: Vec<Rat>,
    /// closed under `t ↦ 1 − t`
    pub closed_under_negation: Law<Rat>,
    /// closed under truncated addition `min{1, s + t}`
    pub closed_under_truncated_sum: Law<(Rat, Rat)>,
    /// `a/K = b/K ⟺ v(a) = v(b)`
    pub separates_classes: Law<(Elem, Elem)>,
}

impl ImageReport {
    pub fn all_pass(&self) -> bool {
        self.closed_under_negation.holds()
            && self.closed_under_truncated_sum.holds()
            && self.separates_classes.holds()
    }
}

pub fn image_subalgebra_check(alg: &FiniteAlgebra, values: &[Rat]) -> Result<ImageReport> {
    let report = check_state(alg, values)?;
    if !report.is_state_morphism() {
        return Err(Error::NotStateMorphism(
            if report.sm1 { "SM2" } else { "SM1" }.into(),
        ));
    }
    let mut image: Vec<Rat> = values.to_vec();
    image.sort();
    image.dedup();

    let closed_under_negation = Law::from_witness(
        image
            .iter()
            .find(|t| !image.contains(&(Rat::one() - *t)))
            .cloned(),
    );
    let mut closed_under_truncated_sum = Law::Holds;
    'sum: for s in &image {
        for t in &image {
            let mut sum = s + t;
            if sum > Rat::one() {
                sum = Rat::one();
            }
            if !image.contains(&sum) {
                closed_under_truncated_sum = Law::Fails((s.clone(), t.clone()));
                break 'sum;
            }
        }
    }

    let q = filters::quotient(alg, &report.kernel)?;
    let mut separates_classes = Law::Holds;
    'sep: for a in alg.elems() {
        for b in alg.elems() {
            let same_class = q.projection[a.0] == q.projection[b.0];
            if same_class != (values[a.0] == values[b.0]) {
                separates_classes = Law::Fails((a, b));
                break 'sep;
            }
        }
    }

    Ok(ImageReport {
        image,
        closed_under_negation,
        closed_under_truncated_sum,
        separates_classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::rat::{rat, ratio};

    fn rats(v: &[(i64, i64)]) -> Vec<Rat> {
        v.iter().map(|&(p, q)| ratio(p, q)).collect()
    }

    #[test]
    fn a1_has_the_unique_paper_state() {
        let a1 = corpus::a1();
        let space = bosbach_states(&a1).unwrap();
        assert_eq!(space.vertices.len(), 1);
        assert_eq!(
            space.vertices[0].values,
            rats(&[(0, 1), (1, 1), (1, 1), (1, 1), (1, 1), (1, 1)])
        );
        let report = check_state(&a1, &space.vertices[0].values).unwrap();
        assert!(report.is_bosbach() && report.is_state_morphism());
        assert_eq!(report.extremal, Some(true));
        // kernel is {a, b, c, d, 1}, a proper normal maximal filter
        let kernel_names: Vec<&str> = report
            .kernel
            .elems()
            .iter()
            .map(|&e| a1.elem_name(e))
            .collect();
        assert_eq!(kernel_names, vec!["a", "b", "c", "d", "1"]);
        assert!(report.kernel.is_maximal.holds());
    }

    #[test]
    fn pentagon_has_one_state_morphism() {
        let p = corpus::pentagon();
        let space = bosbach_states(&p).unwrap();
        assert_eq!(space.vertices.len(), 1);
        assert_eq!(
            space.vertices[0].values,
            rats(&[(0, 1), (1, 1), (1, 1), (1, 1), (1, 1)])
        );
        let report = check_state(&p, &space.vertices[0].values).unwrap();
        assert!(report.is_state_morphism());
        let kernel_names: Vec<&str> = report
            .kernel
            .elems()
            .iter()
            .map(|&e| p.elem_name(e))
            .collect();
        assert_eq!(kernel_names, vec!["a", "b", "c", "1"]);
        assert!(report.kernel.is_maximal.holds());
    }

    #[test]
    fn diamond_and_chain5_are_stateless() {
        for alg in [corpus::diamond(), corpus::chain5()] {
            let space = bosbach_states(&alg).unwrap();
            assert!(space.vertices.is_empty(), "{} must be stateless", alg.name());
            let cert = space.certificate.expect("empty polytope carries a certificate");
            assert!(cert.verify(&space.system));
        }
    }

    #[test]
    fn chain5_orthogonality_table_matches_paper() {
        let c = corpus::chain5();
        let at = |t: &str| c.elem_by_name(t).unwrap();
        let pairs = orthogonal_pairs(&c).unwrap();
        let expect = [
            ("0", "0", "0"),
            ("0", "a", "b"),
            ("0", "b", "b"),
            ("0", "c", "1"),
            ("0", "1", "1"),
            ("a", "0", "b"),
            ("a", "a", "1"),
            ("a", "b", "1"),
            ("b", "0", "b"),
            ("b", "a", "1"),
            ("b", "b", "1"),
            ("c", "0", "1"),
            ("1", "0", "1"),
        ];
        assert_eq!(pairs.len(), expect.len());
        for (pair, (x, y, sum)) in pairs.iter().zip(expect) {
            assert_eq!((pair.x, pair.y, pair.sum), (at(x), at(y), at(sum)));
        }
    }

    #[test]
    fn chain5_has_unique_riecan_state() {
        let c = corpus::chain5();
        let space = riecan_states(&c).unwrap();
        assert_eq!(space.vertices.len(), 1);
        let v = &space.vertices[0].values;
        assert_eq!(*v, rats(&[(0, 1), (1, 2), (1, 2), (1, 1), (1, 1)]));

        let report = check_state(&c, v).unwrap();
        assert!(report.is_riecan());
        assert!(!report.is_bosbach());
        // the B2 witness: s(b⇝a) = s(b) = 1/2 but s(b→a) = s(c) = 1
        let at = |t: &str| c.elem_by_name(t).unwrap();
        match &report.b2 {
            Law::Fails((x, y)) => assert_eq!((*x, *y), (at("a"), at("b"))),
            Law::Holds => panic!("B2 must fail"),
        }
        // its kernel {c,1} is a filter, but not normal
        let kernel = kernel_of_state(&c, v);
        let names: Vec<&str> = kernel.elems().iter().map(|&e| c.elem_name(e)).collect();
        assert_eq!(names, vec!["c", "1"]);
        assert!(kernel.is_filter.holds());
        assert!(!kernel.is_normal.holds());
    }

    #[test]
    fn chain2_unique_state() {
        let c = corpus::chain2();
        let space = bosbach_states(&c).unwrap();
        assert_eq!(space.vertices.len(), 1);
        assert_eq!(space.vertices[0].values, vec![rat(0), rat(1)]);
        let r = riecan_states(&c).unwrap();
        assert_eq!(r.vertices.len(), 1);
    }

    #[test]
    fn riecan_requires_goodness() {
        let d = corpus::diamond();
        assert!(matches!(riecan_states(&d), Err(Error::NotGood { .. })));
        // the permissive mode still answers, flagged non-canonical
        let space = riecan_states_permissive(&d).unwrap();
        assert!(!space.canonical);
    }

    #[test]
    fn mv_quotient_of_a1_state_is_two_element() {
        let a1 = corpus::a1();
        let space = bosbach_states(&a1).unwrap();
        let report = mv_quotient_check(&a1, &space.vertices[0].values).unwrap();
        assert_eq!(report.quotient.n(), 2);
        assert!(report.all_pass(), "{report:?}");
    }

    #[test]
    fn mv_quotient_rejects_non_states(){
        let c = corpus::chain5();
        let v = rats(&[(0, 1), (1, 2), (1, 2), (1, 1), (1, 1)]);
        assert!(matches!(
            mv_quotient_check(&c, &v),
            Err(Error::NotBosbach(_))
        ));
    }

    #[test]
    fn image_of_morphisms() {
        let p = corpus::pentagon();
        let space = bosbach_states(&p).unwrap();
        let img = image_subalgebra_check(&p, &space.vertices[0].values).unwrap();
        assert_eq!(img.image, vec![rat(0), rat(1)]);
        assert!(img.all_pass());
    }

    #[test]
    fn two_morphisms_with_equal_kernels_are_equal() {
        // vertex pairs with equal kernels must be identical valuations
        for alg in [corpus::a1(), corpus::pentagon(), corpus::chain2()] {
            let space = bosbach_states(&alg).unwrap();
            for v in &space.vertices {
                for w in &space.vertices {
                    let kv = kernel_of_state(&alg, &v.values);
                    let kw = kernel_of_state(&alg, &w.values);
                    if kv.subset == kw.subset {
                        assert_eq!(v.values, w.values);
                    }
                }
            }
        }
    }
}
