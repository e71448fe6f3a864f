//! Workbench for finite pseudo-BCK algebras.
//!
//! A pseudo-BCK algebra is a set with two implications `→`, `⇝` and a top
//! element `1`; it generalizes BCK algebras by dropping the requirement that
//! the two implications coincide. This crate represents such algebras
//! exactly (Cayley tables over a finite carrier), verifies every axiom
//! exhaustively, and computes the analytic objects attached to them:
//!
//! - [`algebra`]: carrier, arrow tables, derived order, axiom verification,
//!   derived terms (`∨₁`, `∨₂`, negations, `⊕`, iterated arrows);
//! - [`profile`]: structural classification (good, pDN, join-negation,
//!   sup-commutativity, lattice, pseudo-product, RCP, directedness) with
//!   concrete counterexamples for every failed law;
//! - [`filters`]: filters, normal/maximal classification, generated filters,
//!   congruences and quotient algebras;
//! - [`polytope`]: the exact rational linear engine — feasibility with
//!   Farkas certificates, vertex enumeration, convex membership;
//! - [`states`]: Bosbach and Riečan states, state-morphisms, kernels, and
//!   MV-quotient verification;
//! - [`measures`]: measures, state-measures, measure-morphisms, strong
//!   units, interval algebras, and the `Ψ = 1 − m` bijection;
//! - [`coherence`]: de Finetti coherence of betting books with
//!   machine-checkable certificates, and convex decomposition of states
//!   over state-morphisms;
//! - [`lgroup`]: generators of pseudo-BCK algebras from interval boxes of
//!   `ℤᵈ`, plus isomorphism search;
//! - [`corpus`]: the bundled worked examples used throughout the tests.
//!
//! Everything is exact: values are arbitrary-precision rationals and all
//! verdicts are decided by integer arithmetic, never by floating point.

pub mod algebra;
pub mod coherence;
pub mod corpus;
pub mod filters;
pub mod lgroup;
pub mod measures;
pub mod polytope;
pub mod profile;
pub mod rat;
pub mod states;

pub use algebra::{Axiom, Elem, FiniteAlgebra, Term};
pub use rat::Rat;

use thiserror::Error;

/// A law that either holds or fails with a concrete counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Law<W> {
    Holds,
    Fails(W),
}

impl<W> Law<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Law::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Law::Holds => None,
            Law::Fails(w) => Some(w),
        }
    }

    /// `Holds` when `witness` is `None`, otherwise `Fails`.
    pub fn from_witness(witness: Option<W>) -> Self {
        match witness {
            None => Law::Holds,
            Some(w) => Law::Fails(w),
        }
    }
}

/// Errors shared by all modules of the workbench.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("axiom {axiom} violated at ({witness})")]
    AxiomViolation { axiom: Axiom, witness: String },
    #[error("the two arrows induce different orders at ({x}, {y})")]
    OrderMismatch { x: String, y: String },
    #[error("algebra is not bounded")]
    NotBounded,
    #[error("algebra is not good: {witness}")]
    NotGood { witness: String },
    #[error("carrier too large for exhaustive enumeration (n = {n}, bound = {bound})")]
    TooLarge { n: usize, bound: usize },
    #[error("subset is not a filter")]
    NotAFilter,
    #[error("filter is not normal")]
    NotNormal,
    #[error("feasible region is unbounded in direction {0}")]
    Unbounded(String),
    #[error("valuation does not have the required kind: {0}")]
    KindMismatch(String),
    #[error("{0} is not a strong unit (filter generated by it omits {1})")]
    NotStrongUnit(String, String),
    #[error("valuation is not a Bosbach state: {0}")]
    NotBosbach(String),
    #[error("valuation is not a state-morphism: {0}")]
    NotStateMorphism(String),
    #[error("valuation is not a measure: {0}")]
    NotAMeasure(String),
    #[error("unknown element token `{0}`")]
    UnknownElement(String),
    #[error("invalid book: {0}")]
    InvalidBook(String),
}

pub type Result<T> = std::result::Result<T, Error>;
