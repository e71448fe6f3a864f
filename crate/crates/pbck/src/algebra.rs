//! Finite pseudo-BCK algebras: carrier, arrow tables, derived order, and
//! exhaustive axiom verification.
//!
//! A pseudo-BCK algebra `(A, ≤, →, ⇝, 1)` satisfies, for all `x, y, z`:
//!
//! - (A1) `x→y ≤ (y→z) ⇝ (x→z)` and `x⇝y ≤ (y⇝z) → (x⇝z)`
//! - (A2) `x ≤ (x→y) ⇝ y` and `x ≤ (x⇝y) → y`
//! - (A3) `x ≤ x`
//! - (A4) `x ≤ 1`
//! - (A5) `x ≤ y` and `y ≤ x` imply `x = y`
//! - (A6) `x ≤ y` iff `x→y = 1` iff `x⇝y = 1`
//!
//! The order is not stored in input data; it is derived from the tables via
//! (A6) and kept as an explicit boolean matrix, so every `≤` query is O(1).
//! [`FiniteAlgebra::from_tables`] runs the full O(n³) check and refuses any
//! table set that is not a pseudo-BCK algebra, reporting the violated axiom
//! together with a concrete witness tuple.

use std::fmt;

use crate::{Error, Result};

/// An element of a finite algebra, identified by its dense carrier index.
///
/// Indices are stable for the life of the algebra; display names live in
/// the owning [`FiniteAlgebra`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub usize);

impl Elem {
    pub fn index(self) -> usize {
        self.0
    }
}

/// Which of the two implications a table encodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArrowKind {
    /// `→`
    Arrow,
    /// `⇝`
    Squiggle,
}

impl fmt::Display for ArrowKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArrowKind::Arrow => write!(f, "->"),
            ArrowKind::Squiggle => write!(f, "~>"),
        }
    }
}

/// Total n×n operation table, row-major: `cells[x*n + y] = x ∘ y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrowTable {
    pub kind: ArrowKind,
    n: usize,
    cells: Vec<Elem>,
}

impl ArrowTable {
    pub fn new(kind: ArrowKind, n: usize, cells: Vec<Elem>) -> Result<Self> {
        if cells.len() != n * n {
            return Err(Error::MalformedTable(format!(
                "{kind} table has {} cells, expected {}",
                cells.len(),
                n * n
            )));
        }
        if let Some(bad) = cells.iter().find(|e| e.0 >= n) {
            return Err(Error::MalformedTable(format!(
                "{kind} table entry {} out of range (n = {n})",
                bad.0
            )));
        }
        Ok(ArrowTable { kind, n, cells })
    }

    #[inline]
    pub fn get(&self, x: Elem, y: Elem) -> Elem {
        self.cells[x.0 * self.n + y.0]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[Elem] {
        &self.cells
    }
}

/// Identifier of a violated construction invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
    /// declared zero is not below every element
    ZeroLeast,
    /// declared top differs from the element acting as `1`
    TopMismatch,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::A1 => "A1",
            Axiom::A2 => "A2",
            Axiom::A3 => "A3",
            Axiom::A4 => "A4",
            Axiom::A5 => "A5",
            Axiom::A6 => "A6",
            Axiom::ZeroLeast => "zero-least",
            Axiom::TopMismatch => "top-mismatch",
        };
        write!(f, "{s}")
    }
}

/// Derived term shapes evaluable on any (suitably bounded) algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Term {
    /// `x ∨₁ y = (x→y) ⇝ y`
    Vee1,
    /// `x ∨₂ y = (x⇝y) → y`
    Vee2,
    /// `x⁻ = x→0` (bounded only)
    NegMinus,
    /// `x⁼ = x⇝0` (bounded only)
    NegSim,
    /// `x ⊕ y = x⁼ → (y⁼)⁻` (bounded only; the good-algebra laws need the
    /// `good` flag, the formula itself is total)
    OPlus,
    /// `x →ⁿ y`
    ArrowPow(usize),
    /// `x ⇝ⁿ y`
    SquigPow(usize),
}

impl Term {
    pub fn arity(self) -> usize {
        match self {
            Term::NegMinus | Term::NegSim => 1,
            _ => 2,
        }
    }
}

/// Immutable verified finite pseudo-BCK algebra.
///
/// Construction via [`FiniteAlgebra::from_tables`] is the only way to obtain
/// one, so every value of this type satisfies (A1)–(A6); all operations are
/// pure lookups and the value is safe to share across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAlgebra {
    name: String,
    names: Vec<String>,
    arrow: ArrowTable,
    squiggle: ArrowTable,
    one: Elem,
    zero: Option<Elem>,
    le: Vec<bool>,
}

impl FiniteAlgebra {
    /// Build and fully verify an algebra from its two Cayley tables.
    ///
    /// `names` must be unique non-empty tokens without whitespace. The
    /// tables are given row-major as element indices. The derived order is
    /// checked to agree between the two tables (A6), and all of (A1)–(A6)
    /// are verified over every tuple; if a zero is declared it must be the
    /// least element.
    pub fn from_tables(
        name: impl Into<String>,
        names: Vec<String>,
        arrow_cells: Vec<Elem>,
        squiggle_cells: Vec<Elem>,
        one: Elem,
        zero: Option<Elem>,
    ) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::MalformedTable("empty carrier".into()));
        }
        for (i, tok) in names.iter().enumerate() {
            if tok.is_empty() || tok.chars().any(|c| c.is_whitespace()) {
                return Err(Error::MalformedTable(format!("bad element token `{tok}`")));
            }
            if names[..i].contains(tok) {
                return Err(Error::MalformedTable(format!("duplicate element `{tok}`")));
            }
        }
        if one.0 >= n {
            return Err(Error::MalformedTable("top index out of range".into()));
        }
        if let Some(z) = zero {
            if z.0 >= n {
                return Err(Error::MalformedTable("zero index out of range".into()));
            }
        }
        let arrow = ArrowTable::new(ArrowKind::Arrow, n, arrow_cells)?;
        let squiggle = ArrowTable::new(ArrowKind::Squiggle, n, squiggle_cells)?;

        // Derived order per (A6): x ≤ y iff x→y = 1; the ⇝ table must induce
        // the same relation.
        let mut le = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                let via_arrow = arrow.get(Elem(x), Elem(y)) == one;
                let via_squiggle = squiggle.get(Elem(x), Elem(y)) == one;
                if via_arrow != via_squiggle {
                    return Err(Error::OrderMismatch {
                        x: names[x].clone(),
                        y: names[y].clone(),
                    });
                }
                le[x * n + y] = via_arrow;
            }
        }

        let alg = FiniteAlgebra {
            name: name.into(),
            names,
            arrow,
            squiggle,
            one,
            zero,
            le,
        };
        alg.verify_axioms()?;
        Ok(alg)
    }

    /// Convenience builder from name tokens rather than indices.
    pub fn from_named_tables(
        name: impl Into<String>,
        names: Vec<String>,
        arrow_rows: &[Vec<String>],
        squiggle_rows: &[Vec<String>],
        one: &str,
        zero: Option<&str>,
    ) -> Result<Self> {
        let idx = |tok: &str| -> Result<Elem> {
            names
                .iter()
                .position(|t| t == tok)
                .map(Elem)
                .ok_or_else(|| Error::UnknownElement(tok.to_string()))
        };
        let n = names.len();
        let flatten = |rows: &[Vec<String>], kind: ArrowKind| -> Result<Vec<Elem>> {
            if rows.len() != n {
                return Err(Error::MalformedTable(format!(
                    "{kind} table has {} rows, expected {n}",
                    rows.len()
                )));
            }
            let mut cells = Vec::with_capacity(n * n);
            for row in rows {
                if row.len() != n {
                    return Err(Error::MalformedTable(format!(
                        "{kind} table row has {} entries, expected {n}",
                        row.len()
                    )));
                }
                for tok in row {
                    cells.push(idx(tok)?);
                }
            }
            Ok(cells)
        };
        let arrow_cells = flatten(arrow_rows, ArrowKind::Arrow)?;
        let squiggle_cells = flatten(squiggle_rows, ArrowKind::Squiggle)?;
        let one = idx(one)?;
        let zero = zero.map(idx).transpose()?;
        Self::from_tables(name, names, arrow_cells, squiggle_cells, one, zero)
    }

    fn violation(&self, axiom: Axiom, tuple: &[Elem]) -> Error {
        let witness = tuple
            .iter()
            .map(|e| self.names[e.0].clone())
            .collect::<Vec<_>>()
            .join(", ");
        Error::AxiomViolation { axiom, witness }
    }

    fn verify_axioms(&self) -> Result<()> {
        let n = self.n();
        let els = || (0..n).map(Elem);

        // A3, A4
        for x in els() {
            if !self.le(x, x) {
                return Err(self.violation(Axiom::A3, &[x]));
            }
            if !self.le(x, self.one) {
                return Err(self.violation(Axiom::A4, &[x]));
            }
        }
        // A5
        for x in els() {
            for y in els() {
                if x != y && self.le(x, y) && self.le(y, x) {
                    return Err(self.violation(Axiom::A5, &[x, y]));
                }
            }
        }
        // A2
        for x in els() {
            for y in els() {
                if !self.le(x, self.squiggle(self.arrow(x, y), y)) {
                    return Err(self.violation(Axiom::A2, &[x, y]));
                }
                if !self.le(x, self.arrow(self.squiggle(x, y), y)) {
                    return Err(self.violation(Axiom::A2, &[x, y]));
                }
            }
        }
        // A1
        for x in els() {
            for y in els() {
                for z in els() {
                    let lhs1 = self.arrow(x, y);
                    let rhs1 = self.squiggle(self.arrow(y, z), self.arrow(x, z));
                    if !self.le(lhs1, rhs1) {
                        return Err(self.violation(Axiom::A1, &[x, y, z]));
                    }
                    let lhs2 = self.squiggle(x, y);
                    let rhs2 = self.arrow(self.squiggle(y, z), self.squiggle(x, z));
                    if !self.le(lhs2, rhs2) {
                        return Err(self.violation(Axiom::A1, &[x, y, z]));
                    }
                }
            }
        }
        if let Some(z) = self.zero {
            for x in els() {
                if !self.le(z, x) {
                    return Err(self.violation(Axiom::ZeroLeast, &[z, x]));
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn elems(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.n()).map(Elem)
    }

    pub fn elem_name(&self, e: Elem) -> &str {
        &self.names[e.0]
    }

    pub fn elem_names(&self) -> &[String] {
        &self.names
    }

    pub fn elem_by_name(&self, tok: &str) -> Option<Elem> {
        self.names.iter().position(|t| t == tok).map(Elem)
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn zero(&self) -> Option<Elem> {
        self.zero
    }

    pub fn is_bounded(&self) -> bool {
        self.zero.is_some()
    }

    pub fn arrow_table(&self, kind: ArrowKind) -> &ArrowTable {
        match kind {
            ArrowKind::Arrow => &self.arrow,
            ArrowKind::Squiggle => &self.squiggle,
        }
    }

    /// `x → y`
    #[inline]
    pub fn arrow(&self, x: Elem, y: Elem) -> Elem {
        self.arrow.get(x, y)
    }

    /// `x ⇝ y`
    #[inline]
    pub fn squiggle(&self, x: Elem, y: Elem) -> Elem {
        self.squiggle.get(x, y)
    }

    #[inline]
    pub fn le(&self, x: Elem, y: Elem) -> bool {
        self.le[x.0 * self.n() + y.0]
    }

    /// Whether `→` and `⇝` coincide, i.e. the algebra is a BCK algebra.
    pub fn is_bck(&self) -> bool {
        self.arrow.cells() == self.squiggle.cells()
    }

    /// `x ∨₁ y = (x→y) ⇝ y`
    pub fn vee1(&self, x: Elem, y: Elem) -> Elem {
        self.squiggle(self.arrow(x, y), y)
    }

    /// `x ∨₂ y = (x⇝y) → y`
    pub fn vee2(&self, x: Elem, y: Elem) -> Elem {
        self.arrow(self.squiggle(x, y), y)
    }

    /// `x⁻ = x → 0`
    pub fn neg_minus(&self, x: Elem) -> Result<Elem> {
        let z = self.zero.ok_or(Error::NotBounded)?;
        Ok(self.arrow(x, z))
    }

    /// `x⁼ = x ⇝ 0`
    pub fn neg_sim(&self, x: Elem) -> Result<Elem> {
        let z = self.zero.ok_or(Error::NotBounded)?;
        Ok(self.squiggle(x, z))
    }

    /// `x ⊕ y = x⁼ → (y⁼)⁻`. Total on any bounded algebra; the usual ⊕ laws
    /// (idempotence of `⁻⁼`, associativity) additionally need goodness.
    pub fn oplus(&self, x: Elem, y: Elem) -> Result<Elem> {
        let ys = self.neg_sim(y)?;
        let ysn = self.neg_minus(ys)?;
        Ok(self.arrow(self.neg_sim(x)?, ysn))
    }

    /// `x →ⁿ y = x → (x →ⁿ⁻¹ y)`, with `x →⁰ y = y`.
    pub fn arrow_pow(&self, x: Elem, n: usize, y: Elem) -> Elem {
        let mut acc = y;
        for _ in 0..n {
            acc = self.arrow(x, acc);
        }
        acc
    }

    /// `x ⇝ⁿ y = x ⇝ (x ⇝ⁿ⁻¹ y)`, with `x ⇝⁰ y = y`.
    pub fn squig_pow(&self, x: Elem, n: usize, y: Elem) -> Elem {
        let mut acc = y;
        for _ in 0..n {
            acc = self.squiggle(x, acc);
        }
        acc
    }

    /// Evaluate a derived term. Panics on wrong arity; returns `NotBounded`
    /// when a negation/⊕ is asked of an unbounded algebra.
    pub fn eval_term(&self, t: Term, args: &[Elem]) -> Result<Elem> {
        assert_eq!(args.len(), t.arity(), "term arity mismatch");
        match t {
            Term::Vee1 => Ok(self.vee1(args[0], args[1])),
            Term::Vee2 => Ok(self.vee2(args[0], args[1])),
            Term::NegMinus => self.neg_minus(args[0]),
            Term::NegSim => self.neg_sim(args[0]),
            Term::OPlus => self.oplus(args[0], args[1]),
            Term::ArrowPow(n) => Ok(self.arrow_pow(args[0], n.min(self.n()), args[1])),
            Term::SquigPow(n) => Ok(self.squig_pow(args[0], n.min(self.n()), args[1])),
        }
    }

    /// Least element of `S` under the derived order, if one exists.
    pub fn least(&self, s: &[Elem]) -> Option<Elem> {
        s.iter()
            .copied()
            .find(|&m| s.iter().all(|&x| self.le(m, x)))
    }

    /// Minimal elements of `S` (the antichain of elements with nothing of
    /// `S` strictly below them).
    pub fn minimal(&self, s: &[Elem]) -> Vec<Elem> {
        s.iter()
            .copied()
            .filter(|&m| s.iter().all(|&x| x == m || !self.le(x, m)))
            .collect()
    }
}
