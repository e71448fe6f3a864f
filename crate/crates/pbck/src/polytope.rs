//! Exact rational linear-algebra engine.
//!
//! Everything downstream (state spaces, measure cones, coherence of books)
//! reduces to three decisions on systems of linear equalities, inequalities
//! and variable bounds over ℚ:
//!
//! - [`feasible`]: an exact feasible point, or a Farkas certificate of
//!   infeasibility re-verifiable by direct arithmetic;
//! - [`vertices`]: the complete vertex set of a bounded feasible region,
//!   deterministically ordered;
//! - [`convex_membership`]: convex weights expressing a point over a vertex
//!   list, or a strictly separating functional.
//!
//! The pipeline first eliminates equalities by exact Gaussian substitution
//! (tracking the row combination of every pivot so certificates can be
//! mapped back), then runs a phase-1 primal simplex with Bland's rule on
//! the reduced inequality system. Vertex enumeration works on the
//! homogenization of the reduced system by the double-description method;
//! a brute-force tight-set enumeration lives in [`oracle`] and the test
//! suite checks the two agree. Every certificate and every sample point is
//! re-verified against the original system before being returned.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rat::Rat;
use crate::{Error, Result};

/// `coeffs · x (= | ≤) rhs`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinRow {
    pub coeffs: Vec<Rat>,
    pub rhs: Rat,
}

impl LinRow {
    pub fn eval(&self, x: &[Rat]) -> Rat {
        dot(&self.coeffs, x)
    }
}

/// A finite system of exact linear constraints over named variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    pub var_names: Vec<String>,
    pub equalities: Vec<LinRow>,
    /// each row means `coeffs · x ≤ rhs`
    pub inequalities: Vec<LinRow>,
    pub lower: Vec<Option<Rat>>,
    pub upper: Vec<Option<Rat>>,
}

impl LinearSystem {
    pub fn new(var_names: Vec<String>) -> Self {
        let n = var_names.len();
        LinearSystem {
            var_names,
            equalities: Vec::new(),
            inequalities: Vec::new(),
            lower: vec![None; n],
            upper: vec![None; n],
        }
    }

    /// Fresh system with every variable boxed into `[0, 1]`.
    pub fn unit_box(var_names: Vec<String>) -> Self {
        let n = var_names.len();
        let mut sys = Self::new(var_names);
        sys.lower = vec![Some(Rat::zero()); n];
        sys.upper = vec![Some(Rat::one()); n];
        sys
    }

    pub fn n_vars(&self) -> usize {
        self.var_names.len()
    }

    /// Add an equality row. All-zero tautologies are dropped;
    /// contradictory zero rows are kept so feasibility sees them.
    /// Duplicate rows are the caller's concern (the eliminator treats
    /// them as redundant).
    pub fn push_eq(&mut self, coeffs: Vec<Rat>, rhs: Rat) {
        debug_assert_eq!(coeffs.len(), self.n_vars());
        let row = LinRow { coeffs, rhs };
        let zero_row = row.coeffs.iter().all(Rat::is_zero);
        if zero_row && row.rhs.is_zero() {
            return;
        }
        self.equalities.push(row);
    }

    pub fn push_ineq(&mut self, coeffs: Vec<Rat>, rhs: Rat) {
        debug_assert_eq!(coeffs.len(), self.n_vars());
        self.inequalities.push(LinRow { coeffs, rhs });
    }

    /// Exact satisfaction check of every constraint.
    pub fn satisfied_by(&self, x: &[Rat]) -> bool {
        if x.len() != self.n_vars() {
            return false;
        }
        self.equalities.iter().all(|r| r.eval(x) == r.rhs)
            && self.inequalities.iter().all(|r| r.eval(x) <= r.rhs)
            && self
                .lower
                .iter()
                .zip(x)
                .all(|(lo, v)| lo.as_ref().is_none_or(|lo| lo <= v))
            && self
                .upper
                .iter()
                .zip(x)
                .all(|(up, v)| up.as_ref().is_none_or(|up| v <= up))
    }
}

/// Combination of the system's constraints adding up to the contradiction
/// `0 ≤ negative`. Equality multipliers may take any sign; inequality and
/// bound multipliers are nonnegative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FarkasCertificate {
    pub eq: Vec<Rat>,
    pub ineq: Vec<Rat>,
    /// multiplier of `-x_j ≤ -lower_j`
    pub lower: Vec<Rat>,
    /// multiplier of `x_j ≤ upper_j`
    pub upper: Vec<Rat>,
}

impl FarkasCertificate {
    fn zeroed(sys: &LinearSystem) -> Self {
        FarkasCertificate {
            eq: vec![Rat::zero(); sys.equalities.len()],
            ineq: vec![Rat::zero(); sys.inequalities.len()],
            lower: vec![Rat::zero(); sys.n_vars()],
            upper: vec![Rat::zero(); sys.n_vars()],
        }
    }

    /// Recombine against the system: multipliers must have legal signs, the
    /// combined coefficient vector must vanish and the combined right-hand
    /// side must be strictly negative.
    pub fn verify(&self, sys: &LinearSystem) -> bool {
        let n = sys.n_vars();
        if self.eq.len() != sys.equalities.len()
            || self.ineq.len() != sys.inequalities.len()
            || self.lower.len() != n
            || self.upper.len() != n
        {
            return false;
        }
        if self.ineq.iter().any(Rat::is_negative)
            || self.lower.iter().any(Rat::is_negative)
            || self.upper.iter().any(Rat::is_negative)
        {
            return false;
        }
        for j in 0..n {
            if !self.lower[j].is_zero() && sys.lower[j].is_none() {
                return false;
            }
            if !self.upper[j].is_zero() && sys.upper[j].is_none() {
                return false;
            }
        }
        let mut combined = vec![Rat::zero(); n];
        let mut rhs = Rat::zero();
        for (m, row) in self.eq.iter().zip(&sys.equalities) {
            for (c, rc) in combined.iter_mut().zip(&row.coeffs) {
                *c += m * rc;
            }
            rhs += m * &row.rhs;
        }
        for (m, row) in self.ineq.iter().zip(&sys.inequalities) {
            for (c, rc) in combined.iter_mut().zip(&row.coeffs) {
                *c += m * rc;
            }
            rhs += m * &row.rhs;
        }
        for j in 0..n {
            if !self.lower[j].is_zero() {
                combined[j] -= &self.lower[j];
                rhs -= &self.lower[j] * sys.lower[j].as_ref().unwrap();
            }
            if !self.upper[j].is_zero() {
                combined[j] += &self.upper[j];
                rhs += &self.upper[j] * sys.upper[j].as_ref().unwrap();
            }
        }
        combined.iter().all(Rat::is_zero) && rhs.is_negative()
    }
}

/// Outcome of an exact feasibility test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    Feasible(Vec<Rat>),
    Infeasible(FarkasCertificate),
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }

    pub fn sample(&self) -> Option<&Vec<Rat>> {
        match self {
            Feasibility::Feasible(x) => Some(x),
            Feasibility::Infeasible(_) => None,
        }
    }
}

/// A vertex together with the constraints tight at it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub point: Vec<Rat>,
    pub tight_inequalities: Vec<usize>,
    pub tight_lower: Vec<usize>,
    pub tight_upper: Vec<usize>,
}

/// Duplicate-free, lexicographically ordered vertex list.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VertexList {
    pub vertices: Vec<Vertex>,
}

impl VertexList {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn points(&self) -> Vec<Vec<Rat>> {
        self.vertices.iter().map(|v| v.point.clone()).collect()
    }
}

/// Convex-hull membership verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    /// weights λ ≥ 0 with Σλ = 1 reproducing the point on the selected
    /// coordinates
    Inside(Vec<Rat>),
    /// functional with `sigma · p > threshold ≥ sigma · v` for every vertex
    Outside { sigma: Vec<Rat>, threshold: Rat },
}

fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

// ---------------------------------------------------------------------------
// equality elimination
// ---------------------------------------------------------------------------

/// Affine expression over the still-unresolved variables (dense, with
/// zero entries at resolved positions), plus the row combination that
/// produced it (tracked only when certificates may be needed).
#[derive(Debug, Clone)]
struct AffineExpr {
    coeffs: Vec<Rat>,
    constant: Rat,
    prov: BTreeMap<usize, Rat>,
}

impl AffineExpr {
    fn add_scaled(&mut self, other: &AffineExpr, factor: &Rat) {
        if factor.is_zero() {
            return;
        }
        for (mine, theirs) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !theirs.is_zero() {
                *mine += factor * theirs;
            }
        }
        if !other.constant.is_zero() {
            self.constant += factor * &other.constant;
        }
        for (&r, c) in &other.prov {
            let entry = self.prov.entry(r).or_insert_with(Rat::zero);
            *entry += factor * c;
            if entry.is_zero() {
                self.prov.remove(&r);
            }
        }
    }
}

/// Result of eliminating the equalities: `x = x0 + N·t` over `k` free
/// variables.
struct Reduction {
    /// per original variable, affine form over free variables `0..k`
    exprs: Vec<(Vec<Rat>, Rat)>,
    free_vars: Vec<usize>,
    /// per original variable, the equality-row combination that expresses
    /// `x_j − (free form)`; empty for free variables
    prov: Vec<BTreeMap<usize, Rat>>,
}

enum ReduceOutcome {
    Reduced(Reduction),
    /// combination of equality rows proving `0 = nonzero`; the value is
    /// the combined `coeffs·x − rhs` constant
    Contradiction(BTreeMap<usize, Rat>, Rat),
}

/// Eliminate the equality rows. `track_prov` switches row-combination
/// bookkeeping on; vertex enumeration never needs it, feasibility does
/// (for Farkas certificates).
fn eliminate_equalities(sys: &LinearSystem, track_prov: bool) -> ReduceOutcome {
    let n = sys.n_vars();
    let mut resolved: Vec<Option<AffineExpr>> = (0..n).map(|_| None).collect();

    for (ri, row) in sys.equalities.iter().enumerate() {
        // acc ≡ coeffs·x − rhs with resolved variables substituted
        let mut acc = AffineExpr {
            coeffs: vec![Rat::zero(); n],
            constant: -row.rhs.clone(),
            prov: if track_prov {
                BTreeMap::from([(ri, Rat::one())])
            } else {
                BTreeMap::new()
            },
        };
        for (j, c) in row.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match &resolved[j] {
                Some(e) => acc.add_scaled(e, c),
                None => acc.coeffs[j] += c,
            }
        }
        // solve for the lowest-index unresolved variable of the row
        let Some(pivot) = acc.coeffs.iter().position(|c| !c.is_zero()) else {
            if acc.constant.is_zero() {
                continue; // redundant row
            }
            return ReduceOutcome::Contradiction(acc.prov, acc.constant);
        };
        let inv = -std::mem::replace(&mut acc.coeffs[pivot], Rat::zero()).recip();
        let mut expr = acc;
        if !inv.is_one() {
            for c in expr.coeffs.iter_mut() {
                if !c.is_zero() {
                    *c *= &inv;
                }
            }
            expr.constant *= &inv;
            for c in expr.prov.values_mut() {
                *c *= &inv;
            }
        }
        expr.prov.retain(|_, c| !c.is_zero());
        for slot in resolved.iter_mut().flatten() {
            if !slot.coeffs[pivot].is_zero() {
                let c = std::mem::replace(&mut slot.coeffs[pivot], Rat::zero());
                slot.add_scaled(&expr, &c);
            }
        }
        resolved[pivot] = Some(expr);
    }

    let free_vars: Vec<usize> = (0..n).filter(|&j| resolved[j].is_none()).collect();
    let k = free_vars.len();
    let mut exprs = Vec::with_capacity(n);
    let mut prov = Vec::with_capacity(n);
    for j in 0..n {
        match &resolved[j] {
            None => {
                let mut coeffs = vec![Rat::zero(); k];
                let t = free_vars.iter().position(|&v| v == j).unwrap();
                coeffs[t] = Rat::one();
                exprs.push((coeffs, Rat::zero()));
                prov.push(BTreeMap::new());
            }
            Some(e) => {
                let coeffs = free_vars.iter().map(|&v| e.coeffs[v].clone()).collect();
                exprs.push((coeffs, e.constant.clone()));
                prov.push(e.prov.clone());
            }
        }
    }
    ReduceOutcome::Reduced(Reduction {
        exprs,
        free_vars,
        prov,
    })
}

// ---------------------------------------------------------------------------
// reduced inequality system
// ---------------------------------------------------------------------------

/// Where a reduced row came from in the original system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum RowSource {
    Ineq(usize),
    Lower(usize),
    Upper(usize),
}

/// `G t ≤ h` over the free variables, with per-row provenance over the
/// equality rows.
struct ReducedSystem {
    k: usize,
    rows: Vec<(Vec<Rat>, Rat, RowSource, BTreeMap<usize, Rat>)>,
}

fn reduce_inequalities(sys: &LinearSystem, red: &Reduction) -> ReducedSystem {
    let k = red.free_vars.len();
    let mut rows = Vec::new();
    let mut push = |coeffs: &[(usize, Rat)], rhs: Rat, src: RowSource| {
        // substitute x = x0 + N t into coeffs·x ≤ rhs
        let mut g = vec![Rat::zero(); k];
        let mut shift = Rat::zero();
        let mut prov: BTreeMap<usize, Rat> = BTreeMap::new();
        for (j, c) in coeffs {
            let (tc, cons) = &red.exprs[*j];
            for (gi, t) in g.iter_mut().zip(tc) {
                if !t.is_zero() {
                    *gi += c * t;
                }
            }
            shift += c * cons;
            for (&r, pc) in &red.prov[*j] {
                let entry = prov.entry(r).or_insert_with(Rat::zero);
                *entry += c * pc;
                if entry.is_zero() {
                    prov.remove(&r);
                }
            }
        }
        rows.push((g, rhs - shift, src, prov));
    };

    for (i, row) in sys.inequalities.iter().enumerate() {
        let sparse: Vec<(usize, Rat)> = row
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (j, c.clone()))
            .collect();
        push(&sparse, row.rhs.clone(), RowSource::Ineq(i));
    }
    for j in 0..sys.n_vars() {
        if let Some(lo) = &sys.lower[j] {
            push(&[(j, -Rat::one())], -lo.clone(), RowSource::Lower(j));
        }
        if let Some(up) = &sys.upper[j] {
            push(&[(j, Rat::one())], up.clone(), RowSource::Upper(j));
        }
    }
    ReducedSystem { k, rows }
}

fn apply_row_multiplier(
    cert: &mut FarkasCertificate,
    src: RowSource,
    prov: &BTreeMap<usize, Rat>,
    m: &Rat,
) {
    match src {
        RowSource::Ineq(i) => cert.ineq[i] += m,
        RowSource::Lower(j) => cert.lower[j] += m,
        RowSource::Upper(j) => cert.upper[j] += m,
    }
    for (&r, c) in prov {
        cert.eq[r] += m * c;
    }
}

// ---------------------------------------------------------------------------
// phase-1 simplex with Bland's rule
// ---------------------------------------------------------------------------

/// Feasibility of `G t ≤ h` with free `t`. Returns a point, or nonnegative
/// row multipliers `μ` with `μᵀG = 0` and `μᵀh < 0`.
fn simplex_feasible(k: usize, rows: &[(Vec<Rat>, Rat)]) -> std::result::Result<Vec<Rat>, Vec<Rat>> {
    let m = rows.len();
    if m == 0 {
        return Ok(vec![Rat::zero(); k]);
    }
    // columns: t+ (k) | t- (k) | slack (m) | artificial (m)
    let cols = 2 * k + 2 * m;
    let mut tab: Vec<Vec<Rat>> = Vec::with_capacity(m);
    let mut rhs: Vec<Rat> = Vec::with_capacity(m);
    let mut sigma: Vec<Rat> = Vec::with_capacity(m);
    for (i, (g, h)) in rows.iter().enumerate() {
        let neg = h.is_negative();
        let s = if neg { -Rat::one() } else { Rat::one() };
        let mut row = vec![Rat::zero(); cols];
        for (j, c) in g.iter().enumerate() {
            if !c.is_zero() {
                row[j] = &s * c;
                row[k + j] = -row[j].clone();
            }
        }
        row[2 * k + i] = s.clone();
        row[2 * k + m + i] = Rat::one();
        tab.push(row);
        rhs.push(if neg { -h } else { h.clone() });
        sigma.push(s);
    }
    // minimize the sum of artificials; they form the starting basis, so
    // the initial reduced costs are c_j − Σ_i tab[i][j]
    let mut obj = vec![Rat::zero(); cols];
    let mut obj_val = Rat::zero();
    for i in 0..m {
        for (oj, tj) in obj.iter_mut().zip(&tab[i]) {
            *oj -= tj;
        }
        obj_val -= &rhs[i];
    }
    for i in 0..m {
        obj[2 * k + m + i] += Rat::one();
    }
    let mut basis: Vec<usize> = (0..m).map(|i| 2 * k + m + i).collect();

    loop {
        // Bland: entering column = lowest index with negative reduced cost
        let Some(enter) = (0..cols).find(|&j| obj[j].is_negative()) else {
            break;
        };
        // ratio test, ties broken by lowest basis variable index
        let mut leave: Option<usize> = None;
        let mut best: Option<Rat> = None;
        for i in 0..m {
            if tab[i][enter].is_positive() {
                let ratio = &rhs[i] / &tab[i][enter];
                let better = match &best {
                    None => true,
                    Some(b) => &ratio < b || (&ratio == b && basis[i] < basis[leave.unwrap()]),
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        let r = leave.expect("phase-1 objective is bounded below");
        let piv = tab[r][enter].clone();
        for c in tab[r].iter_mut() {
            *c /= &piv;
        }
        rhs[r] /= &piv;
        let prow = std::mem::take(&mut tab[r]);
        let prhs = rhs[r].clone();
        for i in 0..m {
            if i != r && !tab[i][enter].is_zero() {
                let f = tab[i][enter].clone();
                for (c, pc) in tab[i].iter_mut().zip(&prow) {
                    if !pc.is_zero() {
                        *c -= &f * pc;
                    }
                }
                rhs[i] -= &f * &prhs;
            }
        }
        if !obj[enter].is_zero() {
            let f = obj[enter].clone();
            for (c, pc) in obj.iter_mut().zip(&prow) {
                if !pc.is_zero() {
                    *c -= &f * pc;
                }
            }
            obj_val -= &f * &prhs;
        }
        tab[r] = prow;
        basis[r] = enter;
    }

    if obj_val.is_zero() {
        let mut t = vec![Rat::zero(); k];
        for i in 0..m {
            let b = basis[i];
            if b < k {
                t[b] += &rhs[i];
            } else if b < 2 * k {
                t[b - k] -= &rhs[i];
            }
        }
        Ok(t)
    } else {
        // dual values from artificial reduced costs: y_i = 1 − rc(a_i);
        // row multipliers μ_i = −σ_i · y_i are nonnegative at optimality
        let mut mu = Vec::with_capacity(m);
        for i in 0..m {
            let y = Rat::one() - &obj[2 * k + m + i];
            mu.push(-(&sigma[i] * y));
        }
        debug_assert!(mu.iter().all(|v| !v.is_negative()));
        Err(mu)
    }
}

// ---------------------------------------------------------------------------
// public operations
// ---------------------------------------------------------------------------

/// Decide feasibility exactly. Every returned sample satisfies the system
/// and every certificate recombines to `0 ≤ negative`; both are re-verified
/// here before being returned.
pub fn feasible(sys: &LinearSystem) -> Feasibility {
    match eliminate_equalities(sys, true) {
        ReduceOutcome::Contradiction(prov, constant) => {
            let mut cert = FarkasCertificate::zeroed(sys);
            // the combination satisfies Σλ·coeffs = 0 and Σλ·rhs = −constant;
            // scale so the combined rhs is strictly negative
            let scale = if constant.is_negative() {
                -Rat::one()
            } else {
                Rat::one()
            };
            for (r, c) in prov {
                cert.eq[r] = &scale * &c;
            }
            finish_infeasible(sys, cert)
        }
        ReduceOutcome::Reduced(red) => {
            let reduced = reduce_inequalities(sys, &red);
            for (g, h, src, prov) in &reduced.rows {
                if g.iter().all(Rat::is_zero) && h.is_negative() {
                    let mut cert = FarkasCertificate::zeroed(sys);
                    apply_row_multiplier(&mut cert, *src, prov, &Rat::one());
                    return finish_infeasible(sys, cert);
                }
            }
            // duplicate reduced rows would inflate the tableau for nothing
            let mut live_idx: Vec<usize> = Vec::new();
            let mut live: Vec<(Vec<Rat>, Rat)> = Vec::new();
            let mut seen = std::collections::HashSet::new();
            for (i, (g, h, _, _)) in reduced.rows.iter().enumerate() {
                if g.iter().all(Rat::is_zero) {
                    continue;
                }
                if seen.insert((g.clone(), h.clone())) {
                    live_idx.push(i);
                    live.push((g.clone(), h.clone()));
                }
            }
            match simplex_feasible(reduced.k, &live) {
                Ok(t) => {
                    let x: Vec<Rat> = red
                        .exprs
                        .iter()
                        .map(|(coeffs, cons)| dot(coeffs, &t) + cons)
                        .collect();
                    assert!(sys.satisfied_by(&x), "feasible point failed re-verification");
                    Feasibility::Feasible(x)
                }
                Err(mu) => {
                    let mut cert = FarkasCertificate::zeroed(sys);
                    for (pos, m) in mu.iter().enumerate() {
                        if !m.is_zero() {
                            let (_, _, src, prov) = &reduced.rows[live_idx[pos]];
                            apply_row_multiplier(&mut cert, *src, prov, m);
                        }
                    }
                    finish_infeasible(sys, cert)
                }
            }
        }
    }
}

fn finish_infeasible(sys: &LinearSystem, cert: FarkasCertificate) -> Feasibility {
    assert!(cert.verify(sys), "Farkas certificate failed re-verification");
    Feasibility::Infeasible(cert)
}

/// All vertices of the (bounded) feasible region, lexicographically sorted
/// and tagged with their tight constraints. Infeasible systems yield the
/// empty list; a nonempty unbounded region is an error carrying an
/// unbounded direction.
pub fn vertices(sys: &LinearSystem) -> Result<VertexList> {
    let red = match eliminate_equalities(sys, false) {
        ReduceOutcome::Contradiction(..) => return Ok(VertexList::default()),
        ReduceOutcome::Reduced(red) => red,
    };
    let reduced = reduce_inequalities(sys, &red);
    let k = reduced.k;

    let mut rows: Vec<(Vec<Rat>, Rat)> = Vec::new();
    for (g, h, _, _) in &reduced.rows {
        if g.iter().all(Rat::is_zero) {
            if h.is_negative() {
                return Ok(VertexList::default());
            }
        } else {
            let r = (g.clone(), h.clone());
            if !rows.contains(&r) {
                rows.push(r);
            }
        }
    }

    if k == 0 {
        let x: Vec<Rat> = red.exprs.iter().map(|(_, cons)| cons.clone()).collect();
        let mut list = VertexList::default();
        if sys.satisfied_by(&x) {
            list.vertices.push(make_vertex(sys, x));
        }
        return Ok(list);
    }

    let rays = match double_description(k, &rows) {
        Ok(rays) => rays,
        Err(Error::Unbounded(_)) => {
            // lineality in the homogenized cone: the region is unbounded
            // when nonempty, otherwise just empty
            return if feasible(sys).is_feasible() {
                Err(Error::Unbounded("lineality direction".into()))
            } else {
                Ok(VertexList::default())
            };
        }
        Err(e) => return Err(e),
    };
    // vertices are the rays with positive homogenizing coordinate; rays at
    // w = 0 are recession directions, meaningful only when the region is
    // nonempty (no w > 0 at all means the region is empty)
    let mut points: BTreeSet<Vec<Rat>> = BTreeSet::new();
    let mut recession: Option<Vec<Rat>> = None;
    for ray in rays {
        let w = &ray[k];
        if w.is_zero() {
            recession = Some(ray[..k].to_vec());
            continue;
        }
        let t: Vec<Rat> = ray[..k].iter().map(|c| c / w).collect();
        let x: Vec<Rat> = red
            .exprs
            .iter()
            .map(|(coeffs, cons)| dot(coeffs, &t) + cons)
            .collect();
        assert!(sys.satisfied_by(&x), "vertex failed re-verification");
        points.insert(x);
    }
    if let Some(dir) = recession {
        if !points.is_empty() {
            let desc: Vec<String> = red
                .free_vars
                .iter()
                .zip(&dir)
                .map(|(v, c)| format!("{}={}", sys.var_names[*v], c))
                .collect();
            return Err(Error::Unbounded(desc.join(", ")));
        }
    }
    let mut list = VertexList::default();
    for x in points {
        list.vertices.push(make_vertex(sys, x));
    }
    Ok(list)
}

fn make_vertex(sys: &LinearSystem, point: Vec<Rat>) -> Vertex {
    let tight_inequalities = sys
        .inequalities
        .iter()
        .enumerate()
        .filter(|(_, r)| r.eval(&point) == r.rhs)
        .map(|(i, _)| i)
        .collect();
    let tight_lower = (0..sys.n_vars())
        .filter(|&j| sys.lower[j].as_ref() == Some(&point[j]))
        .collect();
    let tight_upper = (0..sys.n_vars())
        .filter(|&j| sys.upper[j].as_ref() == Some(&point[j]))
        .collect();
    Vertex {
        point,
        tight_inequalities,
        tight_lower,
        tight_upper,
    }
}

/// Scale a rational vector to a primitive integer direction (positive
/// multiple only), keeping double-description numbers small.
fn normalize_ray(ray: &mut [Rat]) {
    let mut lcm = BigInt::one();
    for r in ray.iter() {
        lcm = lcm.lcm(r.denom());
    }
    let mut gcd = BigInt::zero();
    for r in ray.iter() {
        gcd = gcd.gcd(&(r.numer() * &lcm / r.denom()));
    }
    if gcd.is_zero() {
        return;
    }
    let factor = Rat::new(lcm, gcd);
    for r in ray.iter_mut() {
        *r *= &factor;
    }
}

/// Extreme rays of the homogenized cone `{(t, w) | G t ≤ h w, w ≥ 0}` by
/// incremental double description with the combinatorial adjacency test.
fn double_description(k: usize, rows: &[(Vec<Rat>, Rat)]) -> Result<Vec<Vec<Rat>>> {
    let dim = k + 1;
    let mut hrows: Vec<Vec<Rat>> = rows
        .iter()
        .map(|(g, h)| {
            let mut r = g.clone();
            r.push(-h);
            r
        })
        .collect();
    let mut wrow = vec![Rat::zero(); dim];
    wrow[k] = -Rat::one();
    hrows.push(wrow);

    // initial simplicial cone from `dim` independent rows; rank deficiency
    // means a full line inside the cone, hence an unbounded region
    let base = independent_rows(dim, &hrows)
        .ok_or_else(|| Error::Unbounded("lineality direction".into()))?;
    let base_matrix: Vec<Vec<Rat>> = base.iter().map(|&i| hrows[i].clone()).collect();
    let inverse = invert(&base_matrix).expect("independent rows are invertible");
    // rays = columns of −R⁻¹, so ray_j · row_i = −δ_ij ≤ 0
    let mut rays: Vec<Vec<Rat>> = (0..dim)
        .map(|j| {
            let mut ray: Vec<Rat> = (0..dim).map(|i| -inverse[i][j].clone()).collect();
            normalize_ray(&mut ray);
            ray
        })
        .collect();

    let mut processed: Vec<usize> = base.clone();
    for next in 0..hrows.len() {
        if processed.contains(&next) {
            continue;
        }
        let vals: Vec<Rat> = rays.iter().map(|r| dot(&hrows[next], r)).collect();
        let plus: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        let zero: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_zero()).collect();
        let minus: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        if minus.is_empty() {
            processed.push(next);
            continue;
        }
        let tights: Vec<BTreeSet<usize>> = rays
            .iter()
            .map(|r| {
                processed
                    .iter()
                    .copied()
                    .filter(|&i| dot(&hrows[i], r).is_zero())
                    .collect()
            })
            .collect();
        let mut new_rays: Vec<Vec<Rat>> = Vec::new();
        for &p in &plus {
            for &mi in &minus {
                let common: BTreeSet<usize> =
                    tights[p].intersection(&tights[mi]).copied().collect();
                let adjacent = (0..rays.len())
                    .filter(|&q| q != p && q != mi)
                    .all(|q| !common.is_subset(&tights[q]));
                if !adjacent {
                    continue;
                }
                // new = (r·m)·p − (r·p)·m: tight at `next`, inside elsewhere
                let mut nr: Vec<Rat> = (0..dim)
                    .map(|j| &vals[mi] * &rays[p][j] - &vals[p] * &rays[mi][j])
                    .collect();
                normalize_ray(&mut nr);
                new_rays.push(nr);
            }
        }
        let mut kept: Vec<Vec<Rat>> = Vec::new();
        for &i in plus.iter().chain(&zero) {
            kept.push(rays[i].clone());
        }
        for nr in new_rays {
            if !kept.contains(&nr) {
                kept.push(nr);
            }
        }
        rays = kept;
        processed.push(next);
    }
    Ok(rays)
}

/// Greedy selection of `dim` linearly independent rows, or `None`.
fn independent_rows(dim: usize, rows: &[Vec<Rat>]) -> Option<Vec<usize>> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut basis: Vec<Vec<Rat>> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let mut v = row.clone();
        for b in &basis {
            let pcol = b.iter().position(|c| !c.is_zero()).unwrap();
            if !v[pcol].is_zero() {
                let f = &v[pcol] / &b[pcol];
                for (vc, bc) in v.iter_mut().zip(b) {
                    *vc -= &f * bc;
                }
            }
        }
        if v.iter().any(|c| !c.is_zero()) {
            basis.push(v);
            chosen.push(i);
            if chosen.len() == dim {
                return Some(chosen);
            }
        }
    }
    None
}

/// Exact inverse of a square rational matrix, `None` when singular.
fn invert(m: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let mut inv: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for c in 0..n {
            a[col][c] /= &p;
            inv[col][c] /= &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..n {
                    let ac = &f * &a[col][c];
                    a[r][c] -= ac;
                    let ic = &f * &inv[col][c];
                    inv[r][c] -= ic;
                }
            }
        }
    }
    Some(inv)
}

/// Decide whether `p` (restricted to `restrict`, or all coordinates) lies
/// in the convex hull of the given points. Inside yields exact convex
/// weights; outside yields a strictly separating functional over the
/// selected coordinates. Both are re-verified before being returned.
pub fn convex_membership(
    p: &[Rat],
    points: &[Vec<Rat>],
    restrict: Option<&[usize]>,
) -> Membership {
    let all_coords: Vec<usize> = (0..p.len()).collect();
    let coords: &[usize] = restrict.unwrap_or(&all_coords);
    let m = points.len();

    let mut sys = LinearSystem::new((0..m).map(|j| format!("w{j}")).collect());
    sys.lower = vec![Some(Rat::zero()); m];
    // remember which selected coordinate each equality row encodes; the
    // deduplication in push_eq makes positional mapping unreliable
    let mut row_coord: Vec<Option<usize>> = Vec::new();
    for (ci, &c) in coords.iter().enumerate() {
        let row: Vec<Rat> = points.iter().map(|v| v[c].clone()).collect();
        let before = sys.equalities.len();
        sys.push_eq(row, p[c].clone());
        if sys.equalities.len() > before {
            row_coord.push(Some(ci));
        }
    }
    let before = sys.equalities.len();
    sys.push_eq(vec![Rat::one(); m], Rat::one());
    if sys.equalities.len() > before {
        row_coord.push(None);
    }

    match feasible(&sys) {
        Feasibility::Feasible(weights) => {
            for &c in coords {
                let mixed: Rat = (0..m).map(|j| &weights[j] * &points[j][c]).sum();
                assert_eq!(mixed, p[c], "convex weights failed re-verification");
            }
            Membership::Inside(weights)
        }
        Feasibility::Infeasible(cert) => {
            // for each weight column: Σ_c y_c·v[c] + y_sum ≥ 0, so the
            // functional σ = −y separates with threshold y_sum
            let mut sigma = vec![Rat::zero(); coords.len()];
            let mut threshold = Rat::zero();
            for (slot, mult) in row_coord.iter().zip(&cert.eq) {
                match slot {
                    Some(ci) => sigma[*ci] = -mult.clone(),
                    None => threshold = mult.clone(),
                }
            }
            for (j, v) in points.iter().enumerate() {
                let val: Rat = coords
                    .iter()
                    .enumerate()
                    .map(|(ci, &c)| &sigma[ci] * &v[c])
                    .sum();
                assert!(
                    val <= threshold,
                    "separator fails on point {j}: {val} > {threshold}"
                );
            }
            let pval: Rat = coords
                .iter()
                .enumerate()
                .map(|(ci, &c)| &sigma[ci] * &p[c])
                .sum();
            assert!(pval > threshold, "separator does not separate the point");
            Membership::Outside { sigma, threshold }
        }
    }
}

/// Brute-force reference implementations used by the test suites. These
/// deliberately share no code with the production paths above.
pub mod oracle {
    use super::*;

    /// Unique solution of `rows · x = rhs`, `None` if inconsistent or
    /// underdetermined.
    fn solve_exact(n: usize, rows: &[(Vec<Rat>, Rat)]) -> Option<Vec<Rat>> {
        let mut a: Vec<Vec<Rat>> = rows
            .iter()
            .map(|(c, r)| {
                let mut row = c.clone();
                row.push(r.clone());
                row
            })
            .collect();
        let m = a.len();
        let mut pivot_of_col = vec![usize::MAX; n];
        let mut rank = 0;
        for col in 0..n {
            let Some(pr) = (rank..m).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, pr);
            let p = a[rank][col].clone();
            for c in col..=n {
                a[rank][c] /= &p;
            }
            for r in 0..m {
                if r != rank && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for c in col..=n {
                        let v = &f * &a[rank][c];
                        a[r][c] -= v;
                    }
                }
            }
            pivot_of_col[col] = rank;
            rank += 1;
        }
        for r in rank..m {
            if !a[r][n].is_zero() {
                return None;
            }
        }
        if rank < n {
            return None;
        }
        let mut x = vec![Rat::zero(); n];
        for col in 0..n {
            x[col] = a[pivot_of_col[col]][n].clone();
        }
        Some(x)
    }

    /// All basic feasible solutions by exhaustive tight-set enumeration:
    /// every subset of inequality/bound rows is tried as an equality
    /// completion of the equality rows.
    pub fn brute_force_vertices(sys: &LinearSystem) -> Vec<Vec<Rat>> {
        let n = sys.n_vars();
        let mut le_rows: Vec<(Vec<Rat>, Rat)> = sys
            .inequalities
            .iter()
            .map(|r| (r.coeffs.clone(), r.rhs.clone()))
            .collect();
        for j in 0..n {
            if let Some(lo) = &sys.lower[j] {
                let mut c = vec![Rat::zero(); n];
                c[j] = -Rat::one();
                le_rows.push((c, -lo.clone()));
            }
            if let Some(up) = &sys.upper[j] {
                let mut c = vec![Rat::zero(); n];
                c[j] = Rat::one();
                le_rows.push((c, up.clone()));
            }
        }
        let eq_rows: Vec<(Vec<Rat>, Rat)> = sys
            .equalities
            .iter()
            .map(|r| (r.coeffs.clone(), r.rhs.clone()))
            .collect();

        let m = le_rows.len();
        assert!(m <= 24, "oracle is for small systems only");
        let mut found: BTreeSet<Vec<Rat>> = BTreeSet::new();
        for mask in 0u32..(1u32 << m) {
            if (mask.count_ones() as usize) > n {
                continue;
            }
            let mut rows = eq_rows.clone();
            for (i, row) in le_rows.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    rows.push(row.clone());
                }
            }
            if let Some(x) = solve_exact(n, &rows) {
                if sys.satisfied_by(&x) {
                    found.insert(x);
                }
            }
        }
        found.into_iter().collect()
    }
}
