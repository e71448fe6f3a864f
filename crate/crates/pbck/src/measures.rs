//! Measures, state-measures and measure-morphisms, strong units, interval
//! algebras, and the `Ψ = 1 − m` bijection.
//!
//! A measure on a (possibly unbounded) pseudo-BCK algebra is a map
//! `m: A → [0, ∞)` with `m(x→y) = m(x⇝y) = m(y) − m(x)` whenever `y ≤ x`.
//! Normalizing at the zero (bounded case) or at a strong unit `u`
//! (`m(u) = 1`) carves a polytope out of the measure cone; its vertices are
//! the extremal state-measures, which coincide with the measure-morphisms
//! (`m(x→y) = max{0, m(y) − m(x)}` everywhere) on downwards-directed
//! algebras. `Ψ(m) = 1 − m` identifies state-measures on a bounded algebra
//! with Bosbach states and morphisms with state-morphisms.
//!
//! A strong unit is an element whose generated filter is the whole
//! algebra; the saturation trace `u →ⁿ x = 1` both certifies strength and
//! supplies the upper bounds `m(x) ≤ n_x` that make the normalized system
//! a polytope.

use num_traits::{One, Signed, Zero};

use crate::algebra::{Elem, FiniteAlgebra};
use crate::filters::{self, ElemSet, FilterSet};
use crate::polytope::{self, FarkasCertificate, LinearSystem};
use crate::rat::{pos_part, Rat};
use crate::states::{self, Valuation, ValuationKind};
use crate::{Error, Law, Result};

fn engine_check(cond: bool, what: &str) {
    assert!(cond, "internal contradiction: {what}");
}

/// Normalization of a measure system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    /// the raw cone, no normalization row
    Free,
    /// `m(0) = 1` on a bounded algebra
    AtZero,
    /// `m(u) = 1` at a strong unit
    AtUnit(Elem),
}

/// Certificate that `u` generates (or fails to generate) the whole algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitCertificate {
    pub unit: Elem,
    pub is_strong: bool,
    /// per element, the least `n` with `u →ⁿ x = 1`
    pub trace: Vec<Option<usize>>,
    /// an element the saturation never reaches, when not strong
    pub witness: Option<Elem>,
}

/// Saturation certificate for a single candidate unit.
pub fn unit_certificate(alg: &FiniteAlgebra, u: Elem) -> UnitCertificate {
    let (set, trace) = filters::filter_from_unit(alg, u);
    let witness = alg.elems().find(|&x| !set.contains(x));
    UnitCertificate {
        unit: u,
        is_strong: witness.is_none(),
        trace,
        witness,
    }
}

/// Certificates for every element of the carrier.
pub fn strong_units(alg: &FiniteAlgebra) -> Vec<UnitCertificate> {
    alg.elems().map(|u| unit_certificate(alg, u)).collect()
}

/// The defining equalities of a measure: for every comparable pair
/// `y ≤ x`, `m(x→y) = m(y) − m(x) = m(x⇝y)`, with `m ≥ 0` and the chosen
/// normalization (plus the derived bounds `m(x) ≤ n_x` making the
/// normalized region a polytope).
pub fn measure_system(alg: &FiniteAlgebra, norm: Normalization) -> Result<LinearSystem> {
    let n = alg.n();
    let mut sys = LinearSystem::new(alg.elem_names().to_vec());
    sys.lower = vec![Some(Rat::zero()); n];

    let mut seen = std::collections::HashSet::new();
    for x in alg.elems() {
        for y in alg.elems() {
            if !alg.le(y, x) {
                continue;
            }
            for image in [alg.arrow(x, y), alg.squiggle(x, y)] {
                let mut row = vec![Rat::zero(); n];
                row[image.0] += Rat::one();
                row[y.0] -= Rat::one();
                row[x.0] += Rat::one();
                if seen.insert(row.clone()) {
                    sys.push_eq(row, Rat::zero());
                }
            }
        }
    }

    let unit = match norm {
        Normalization::Free => None,
        Normalization::AtZero => Some(alg.zero().ok_or(Error::NotBounded)?),
        Normalization::AtUnit(u) => Some(u),
    };
    if let Some(u) = unit {
        let cert = unit_certificate(alg, u);
        if !cert.is_strong {
            return Err(Error::NotStrongUnit(
                alg.elem_name(u).to_string(),
                alg.elem_name(cert.witness.unwrap()).to_string(),
            ));
        }
        let mut row = vec![Rat::zero(); n];
        row[u.0] = Rat::one();
        sys.push_eq(row, Rat::one());
        // m(x) ≤ n_x whenever u →ⁿˣ x = 1 and m(u) = 1
        for x in alg.elems() {
            let nx = cert.trace[x.0].expect("strong unit reaches every element");
            sys.upper[x.0] = Some(Rat::from_integer(nx.into()));
        }
    }
    Ok(sys)
}

/// `max{0, m(y) − m(x)}` agreement of both arrows over all pairs.
pub fn morphism_law(alg: &FiniteAlgebra, values: &[Rat]) -> Law<(Elem, Elem)> {
    for x in alg.elems() {
        for y in alg.elems() {
            let target = pos_part(&(&values[y.0] - &values[x.0]));
            if values[alg.arrow(x, y).0] != target || values[alg.squiggle(x, y).0] != target {
                return Law::Fails((x, y));
            }
        }
    }
    Law::Holds
}

/// `m(x→y) = m(x⇝y) = m(y) − m(x)` over comparable pairs.
pub fn measure_law(alg: &FiniteAlgebra, values: &[Rat]) -> Law<(Elem, Elem)> {
    for x in alg.elems() {
        for y in alg.elems() {
            if !alg.le(y, x) {
                continue;
            }
            let target = &values[y.0] - &values[x.0];
            if values[alg.arrow(x, y).0] != target || values[alg.squiggle(x, y).0] != target {
                return Law::Fails((x, y));
            }
        }
    }
    Law::Holds
}

/// Structural facts about `A / Ker₀(m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientChecks {
    pub vee1_commutative: bool,
    pub vee2_commutative: bool,
    pub arrows_coincide: bool,
    /// pseudo-double-negation on the quotient, when `A` is bounded
    pub pdn_bounded_case: Option<bool>,
}

/// Exhaustive verification of a valuation against the measure laws.
#[derive(Debug, Clone)]
pub struct MeasureReport {
    pub nonneg: Law<Elem>,
    pub measure_law: Law<(Elem, Elem)>,
    /// `m = 1` at the requested normalization element (`None` for `Free`)
    pub state_measure_norm: Option<bool>,
    pub morphism_law: Law<(Elem, Elem)>,
    /// `m(u →ⁿ x) = max{0, m(x) − n·m(u)}` for all `u, x, n ≤ |A|`
    /// (evaluated only for verified morphisms)
    pub eq42: Option<Law<(Elem, Elem, usize)>>,
    /// `m(x₁→(…→(xₖ→a)…)) = max{0, m(a) − Σ m(xᵢ)}` for `k ≤ 3`
    pub eq43: Option<Law<Vec<Elem>>>,
    pub ker0: FilterSet,
    /// present when the measure law holds
    pub quotient_checks: Option<QuotientChecks>,
}

impl MeasureReport {
    pub fn is_measure(&self) -> bool {
        self.nonneg.holds() && self.measure_law.holds()
    }

    pub fn is_state_measure(&self) -> bool {
        self.is_measure() && self.state_measure_norm == Some(true)
    }

    pub fn is_measure_morphism(&self) -> bool {
        self.nonneg.holds() && self.morphism_law.holds()
    }
}

pub fn check_measure(
    alg: &FiniteAlgebra,
    values: &[Rat],
    norm: Normalization,
) -> Result<MeasureReport> {
    check_measure_inner(alg, values, norm, true)
}

/// Same verdicts as [`check_measure`] but without the exhaustive iterated
/// identity sweeps and the quotient construction (`eq42`, `eq43` and
/// `quotient_checks` stay `None`); used where a per-candidate verdict is
/// needed inside a large enumeration.
pub fn check_measure_basic(
    alg: &FiniteAlgebra,
    values: &[Rat],
    norm: Normalization,
) -> Result<MeasureReport> {
    check_measure_inner(alg, values, norm, false)
}

fn check_measure_inner(
    alg: &FiniteAlgebra,
    values: &[Rat],
    norm: Normalization,
    thorough: bool,
) -> Result<MeasureReport> {
    assert_eq!(values.len(), alg.n(), "valuation must be total");
    let nonneg = Law::from_witness(alg.elems().find(|&x| values[x.0].is_negative()));
    let m_law = measure_law(alg, values);
    let state_measure_norm = match norm {
        Normalization::Free => None,
        Normalization::AtZero => {
            let z = alg.zero().ok_or(Error::NotBounded)?;
            Some(values[z.0].is_one())
        }
        Normalization::AtUnit(u) => Some(values[u.0].is_one()),
    };
    let mor_law = morphism_law(alg, values);

    let (eq42, eq43) = if thorough && mor_law.holds() {
        let mut e42 = Law::Holds;
        'e42: for u in alg.elems() {
            for x in alg.elems() {
                let mut cur = x;
                for n in 0..=alg.n() {
                    let expect = pos_part(
                        &(&values[x.0] - Rat::from_integer(n.into()) * &values[u.0]),
                    );
                    if values[cur.0] != expect {
                        e42 = Law::Fails((u, x, n));
                        break 'e42;
                    }
                    cur = alg.arrow(u, cur);
                }
            }
        }
        // words x₁→(x₂→(x₃→a)) of length 1..=3
        let mut e43 = Law::Holds;
        'e43: for a in alg.elems() {
            for x1 in alg.elems() {
                let v1 = alg.arrow(x1, a);
                if values[v1.0] != pos_part(&(&values[a.0] - &values[x1.0])) {
                    e43 = Law::Fails(vec![x1, a]);
                    break 'e43;
                }
                for x2 in alg.elems() {
                    let v2 = alg.arrow(x2, v1);
                    let t2 = pos_part(&(&values[a.0] - &values[x1.0] - &values[x2.0]));
                    if values[v2.0] != t2 {
                        e43 = Law::Fails(vec![x2, x1, a]);
                        break 'e43;
                    }
                    for x3 in alg.elems() {
                        let v3 = alg.arrow(x3, v2);
                        let t3 = pos_part(
                            &(&values[a.0] - &values[x1.0] - &values[x2.0] - &values[x3.0]),
                        );
                        if values[v3.0] != t3 {
                            e43 = Law::Fails(vec![x3, x2, x1, a]);
                            break 'e43;
                        }
                    }
                }
            }
        }
        (Some(e42), Some(e43))
    } else {
        (None, None)
    };

    let ker0_members: Vec<Elem> = alg.elems().filter(|&x| values[x.0].is_zero()).collect();
    let ker0 = filters::classify_subset(alg, &ElemSet::from_elems(alg.n(), &ker0_members));

    let quotient_checks = if thorough && nonneg.holds() && m_law.holds() {
        engine_check(
            ker0.is_filter.holds() && ker0.is_normal.holds(),
            "Ker₀ of a measure is not a normal filter",
        );
        let q = filters::quotient(alg, &ker0)?;
        let quot = &q.quotient;
        let mut vee1 = true;
        let mut vee2 = true;
        let mut coincide = true;
        for x in quot.elems() {
            for y in quot.elems() {
                vee1 &= quot.vee1(x, y) == quot.vee1(y, x);
                vee2 &= quot.vee2(x, y) == quot.vee2(y, x);
                coincide &= quot.arrow(x, y) == quot.squiggle(x, y);
            }
        }
        engine_check(vee1 && vee2, "measure quotient is not ∨-commutative");
        let pdn_bounded_case = quot.zero().map(|z| {
            quot.elems().all(|x| {
                let nm = quot.squiggle(quot.arrow(x, z), z);
                let mn = quot.arrow(quot.squiggle(x, z), z);
                nm == x && mn == x
            })
        });
        Some(QuotientChecks {
            vee1_commutative: vee1,
            vee2_commutative: vee2,
            arrows_coincide: coincide,
            pdn_bounded_case,
        })
    } else {
        None
    };

    Ok(MeasureReport {
        nonneg,
        measure_law: m_law,
        state_measure_norm,
        morphism_law: mor_law,
        eq42,
        eq43,
        ker0,
        quotient_checks,
    })
}

/// A normalized measure polytope with its enumerated vertices.
#[derive(Debug, Clone)]
pub struct MeasureSpace {
    pub system: LinearSystem,
    pub normalization: Normalization,
    pub vertices: Vec<Valuation>,
    pub certificate: Option<FarkasCertificate>,
}

/// Vertices of the state-measure polytope, normalized at the given strong
/// unit or (default) at the zero of a bounded algebra. On
/// downwards-directed algebras every vertex is checked to satisfy the
/// morphism law.
pub fn state_measures(alg: &FiniteAlgebra, unit: Option<Elem>) -> Result<MeasureSpace> {
    let normalization = match unit {
        Some(u) => Normalization::AtUnit(u),
        None => Normalization::AtZero,
    };
    let system = measure_system(alg, normalization)?;
    let list = polytope::vertices(&system)?;
    let dd = crate::profile::downwards_directed(alg).holds();
    let mut vertices = Vec::with_capacity(list.len());
    for v in &list.vertices {
        let mor = morphism_law(alg, &v.point).holds();
        if dd {
            engine_check(
                mor,
                "extremal state-measure on a downwards-directed algebra is not a morphism",
            );
        }
        let kind = if mor {
            ValuationKind::MeasureMorphism
        } else {
            ValuationKind::StateMeasure
        };
        vertices.push(Valuation::new(v.point.clone(), kind));
    }
    let certificate = if vertices.is_empty() {
        match polytope::feasible(&system) {
            polytope::Feasibility::Infeasible(cert) => Some(cert),
            polytope::Feasibility::Feasible(_) => {
                engine_check(false, "empty vertex list on feasible measure system");
                None
            }
        }
    } else {
        None
    };
    Ok(MeasureSpace {
        system,
        normalization,
        vertices,
        certificate,
    })
}

/// The measure cone of an algebra without a chosen normalization: the
/// homogeneous system together with its extreme rays, computed as the
/// vertices of the slice `Σ m(x) = 1`. An empty ray list means the only
/// measure is `m ≡ 0`.
#[derive(Debug, Clone)]
pub struct MeasureCone {
    pub system: LinearSystem,
    pub rays: Vec<Vec<Rat>>,
}

pub fn measure_cone(alg: &FiniteAlgebra) -> Result<MeasureCone> {
    let system = measure_system(alg, Normalization::Free)?;
    let mut sliced = system.clone();
    sliced.push_eq(vec![Rat::one(); alg.n()], Rat::one());
    let list = polytope::vertices(&sliced)?;
    Ok(MeasureCone {
        system,
        rays: list.points(),
    })
}

/// `1 − v` pointwise.
pub fn psi_pointwise(values: &[Rat]) -> Vec<Rat> {
    values.iter().map(|v| Rat::one() - v).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsiDirection {
    /// state-measure → Bosbach state
    ToState,
    /// Bosbach state → state-measure
    ToMeasure,
}

/// The affine bijection `Ψ(m) = 1 − m` between state-measures and Bosbach
/// states of a bounded algebra, transporting morphisms to morphisms. The
/// input is verified to be of the matching kind.
pub fn psi_transform(
    alg: &FiniteAlgebra,
    valuation: &Valuation,
    direction: PsiDirection,
) -> Result<Valuation> {
    if !alg.is_bounded() {
        return Err(Error::NotBounded);
    }
    let flipped = psi_pointwise(&valuation.values);
    match direction {
        PsiDirection::ToState => {
            let report = check_measure(alg, &valuation.values, Normalization::AtZero)?;
            if !report.is_state_measure() {
                return Err(Error::KindMismatch(
                    "Ψ to a state needs a state-measure".into(),
                ));
            }
            let state = states::check_state(alg, &flipped)?;
            engine_check(state.is_bosbach(), "Ψ of a state-measure is not a Bosbach state");
            engine_check(
                report.is_measure_morphism() == state.is_state_morphism(),
                "Ψ does not transport morphisms to morphisms",
            );
            let kind = if state.is_state_morphism() {
                ValuationKind::StateMorphism
            } else {
                ValuationKind::Bosbach
            };
            Ok(Valuation::new(flipped, kind))
        }
        PsiDirection::ToMeasure => {
            let state = states::check_state(alg, &valuation.values)?;
            if !state.is_bosbach() {
                return Err(Error::KindMismatch(
                    "Ψ to a measure needs a Bosbach state".into(),
                ));
            }
            let report = check_measure(alg, &flipped, Normalization::AtZero)?;
            engine_check(
                report.is_state_measure(),
                "Ψ of a Bosbach state is not a state-measure",
            );
            engine_check(
                report.is_measure_morphism() == state.is_state_morphism(),
                "Ψ does not transport morphisms to morphisms",
            );
            let kind = if report.is_measure_morphism() {
                ValuationKind::MeasureMorphism
            } else {
                ValuationKind::StateMeasure
            };
            Ok(Valuation::new(flipped, kind))
        }
    }
}

/// Facts about `Ker₀(m)` and the quotient it induces.
#[derive(Debug, Clone)]
pub struct Kernel0Report {
    pub ker0: FilterSet,
    pub quotient: FiniteAlgebra,
    pub projection: Vec<Elem>,
    pub vee1_commutative: bool,
    pub vee2_commutative: bool,
    pub arrows_coincide: bool,
    pub is_morphism: bool,
    pub downwards_directed: bool,
    /// morphism ⟺ maximal kernel, evaluated for nonzero measures on
    /// downwards-directed algebras (`None` otherwise)
    pub morphism_iff_maximal: Option<bool>,
}

pub fn kernel0(alg: &FiniteAlgebra, values: &[Rat]) -> Result<Kernel0Report> {
    let report = check_measure(alg, values, Normalization::Free)?;
    if !report.is_measure() {
        return Err(Error::NotAMeasure(match report.measure_law.witness() {
            Some((x, y)) => format!(
                "measure law fails at ({}, {})",
                alg.elem_name(*x),
                alg.elem_name(*y)
            ),
            None => "negative value".into(),
        }));
    }
    let ker0 = report.ker0.clone();
    let q = filters::quotient(alg, &ker0)?;
    let checks = report.quotient_checks.as_ref().unwrap();
    let dd = crate::profile::downwards_directed(alg).holds();
    if dd {
        engine_check(
            checks.arrows_coincide,
            "arrows fail to coincide on the quotient of a downwards-directed algebra",
        );
    }
    let is_morphism = report.is_measure_morphism();
    let nonzero = values.iter().any(|v| !v.is_zero());
    let morphism_iff_maximal = if dd && nonzero {
        let agree = is_morphism == ker0.is_maximal.holds();
        engine_check(agree, "morphism and maximal-kernel disagree");
        Some(agree)
    } else {
        None
    };
    Ok(Kernel0Report {
        ker0,
        quotient: q.quotient,
        projection: q.projection,
        vee1_commutative: checks.vee1_commutative,
        vee2_commutative: checks.vee2_commutative,
        arrows_coincide: checks.arrows_coincide,
        is_morphism,
        downwards_directed: dd,
        morphism_iff_maximal,
    })
}

/// The interval `[u, 1]` as a genuine bounded pseudo-BCK algebra, with the
/// embedding back into the original carrier. Closure of both arrows on the
/// interval is verified, not assumed.
pub fn interval_algebra(alg: &FiniteAlgebra, u: Elem) -> Result<(FiniteAlgebra, Vec<Elem>)> {
    let members: Vec<Elem> = alg.elems().filter(|&x| alg.le(u, x)).collect();
    let index_of = |x: Elem| members.iter().position(|&m| m == x);
    let m = members.len();
    let mut arrow_cells = Vec::with_capacity(m * m);
    let mut squiggle_cells = Vec::with_capacity(m * m);
    for &x in &members {
        for &y in &members {
            let a = alg.arrow(x, y);
            let s = alg.squiggle(x, y);
            let (Some(ai), Some(si)) = (index_of(a), index_of(s)) else {
                engine_check(false, "interval [u,1] is not closed under the arrows");
                unreachable!();
            };
            arrow_cells.push(Elem(ai));
            squiggle_cells.push(Elem(si));
        }
    }
    let names = members
        .iter()
        .map(|&x| alg.elem_name(x).to_string())
        .collect();
    let one = Elem(index_of(alg.one()).unwrap());
    let zero = Elem(index_of(u).unwrap());
    let interval = FiniteAlgebra::from_tables(
        format!("{}[{},1]", alg.name(), alg.elem_name(u)),
        names,
        arrow_cells,
        squiggle_cells,
        one,
        Some(zero),
    )?;
    Ok((interval, members))
}

/// The six equivalent faces of extremality for a state-measure on a unital
/// algebra, each computed independently.
#[derive(Debug, Clone)]
pub struct UnitalReport {
    pub unit: Elem,
    pub interval: FiniteAlgebra,
    /// interval element `i` is original element `embed[i]`
    pub embed: Vec<Elem>,
    /// (a) the measure is a measure-morphism on the whole algebra
    pub clause_morphism: bool,
    /// (b) `1 − m_u` is a state-morphism on `[u, 1]`
    pub clause_restricted_morphism: bool,
    /// (c) `Ker₀(m)` is a maximal filter of `A`
    pub clause_ker0_maximal: bool,
    /// (d) `Ker₀(m_u)` is a maximal filter of `[u, 1]`
    pub clause_restricted_ker0_maximal: bool,
    /// (e) `m` is a vertex of the state-measure polytope of `(A, u)`
    pub clause_extremal: bool,
    /// (f) `m_u` is a vertex of the state-measure polytope of `[u, 1]`
    pub clause_restricted_extremal: bool,
    pub downwards_directed: bool,
    /// all six clauses agree (evaluated on downwards-directed algebras)
    pub clauses_agree: Option<bool>,
    /// `m(u) = 0` forces `m ≡ 0`: the homogeneous system with `m(u) = 0`
    /// and `Σ m = 1` is infeasible
    pub vanishing_criterion: bool,
}

impl UnitalReport {
    pub fn clauses(&self) -> [bool; 6] {
        [
            self.clause_morphism,
            self.clause_restricted_morphism,
            self.clause_ker0_maximal,
            self.clause_restricted_ker0_maximal,
            self.clause_extremal,
            self.clause_restricted_extremal,
        ]
    }
}

/// Precomputed per-unit data shared by clause evaluations of many
/// valuations: the interval algebra, both state-measure polytopes, and the
/// vanishing-criterion verdict.
#[derive(Debug, Clone)]
pub struct UnitalContext {
    pub unit: Elem,
    pub interval: FiniteAlgebra,
    pub embed: Vec<Elem>,
    /// state-measure polytope of `(A, u)`
    pub space: MeasureSpace,
    /// state-measure polytope of `[u, 1]` at its zero
    pub restricted_space: MeasureSpace,
    pub downwards_directed: bool,
    pub vanishing_criterion: bool,
}

pub fn unital_context(alg: &FiniteAlgebra, u: Elem) -> Result<UnitalContext> {
    let cert = unit_certificate(alg, u);
    if !cert.is_strong {
        return Err(Error::NotStrongUnit(
            alg.elem_name(u).to_string(),
            alg.elem_name(cert.witness.unwrap()).to_string(),
        ));
    }
    let (interval, embed) = interval_algebra(alg, u)?;
    let space = state_measures(alg, Some(u))?;
    // when u is the zero the interval is the whole algebra and the two
    // polytopes coincide row for row
    let restricted_space = if Some(u) == alg.zero() {
        space.clone()
    } else {
        state_measures(&interval, None)?
    };
    let dd = crate::profile::downwards_directed(alg).holds();

    // a measure vanishing at a strong unit vanishes everywhere
    let mut vanish = measure_system(alg, Normalization::Free)?;
    let mut urow = vec![Rat::zero(); alg.n()];
    urow[u.0] = Rat::one();
    vanish.push_eq(urow, Rat::zero());
    vanish.push_eq(vec![Rat::one(); alg.n()], Rat::one());
    let vanishing_criterion = !polytope::feasible(&vanish).is_feasible();
    engine_check(
        vanishing_criterion,
        "nonzero measure vanishing at a strong unit",
    );

    Ok(UnitalContext {
        unit: u,
        interval,
        embed,
        space,
        restricted_space,
        downwards_directed: dd,
        vanishing_criterion,
    })
}

/// Evaluate the six clauses for one state-measure against a precomputed
/// context.
pub fn unital_clauses(
    alg: &FiniteAlgebra,
    ctx: &UnitalContext,
    values: &[Rat],
) -> Result<UnitalReport> {
    let report = check_measure_basic(alg, values, Normalization::AtUnit(ctx.unit))?;
    if !report.is_state_measure() {
        return Err(Error::KindMismatch(
            "unital restriction needs a state-measure with m(u) = 1".into(),
        ));
    }
    let restricted: Vec<Rat> = ctx.embed.iter().map(|&x| values[x.0].clone()).collect();
    let restricted_report = check_measure_basic(&ctx.interval, &restricted, Normalization::AtZero)?;
    engine_check(
        restricted_report.is_state_measure(),
        "restriction of a state-measure is not a state-measure on [u,1]",
    );

    let clause_morphism = report.is_measure_morphism();
    let flipped = psi_pointwise(&restricted);
    let clause_restricted_morphism =
        states::check_state(&ctx.interval, &flipped)?.is_state_morphism();
    let clause_ker0_maximal = report.ker0.is_maximal.holds();
    let clause_restricted_ker0_maximal = restricted_report.ker0.is_maximal.holds();
    let clause_extremal = ctx.space.vertices.iter().any(|v| v.values == values);
    let clause_restricted_extremal = ctx
        .restricted_space
        .vertices
        .iter()
        .any(|v| v.values == restricted);

    let clauses = [
        clause_morphism,
        clause_restricted_morphism,
        clause_ker0_maximal,
        clause_restricted_ker0_maximal,
        clause_extremal,
        clause_restricted_extremal,
    ];
    let clauses_agree = if ctx.downwards_directed {
        let agree = clauses.iter().all(|&c| c == clauses[0]);
        engine_check(agree, "six-way extremality equivalence broken");
        Some(agree)
    } else {
        None
    };

    Ok(UnitalReport {
        unit: ctx.unit,
        interval: ctx.interval.clone(),
        embed: ctx.embed.clone(),
        clause_morphism,
        clause_restricted_morphism,
        clause_ker0_maximal,
        clause_restricted_ker0_maximal,
        clause_extremal,
        clause_restricted_extremal,
        downwards_directed: ctx.downwards_directed,
        clauses_agree,
        vanishing_criterion: ctx.vanishing_criterion,
    })
}

/// Restrict a state-measure on `(A, u)` to the interval algebra `[u, 1]`
/// and evaluate the six extremality clauses independently.
pub fn unital_restriction(alg: &FiniteAlgebra, u: Elem, values: &[Rat]) -> Result<UnitalReport> {
    let ctx = unital_context(alg, u)?;
    unital_clauses(alg, &ctx, values)
}
