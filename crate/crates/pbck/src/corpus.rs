//! Bundled worked examples: the Cayley-table algebras used across the test
//! suite and shipped with the CLI corpus.
//!
//! Each constructor returns a fully verified [`FiniteAlgebra`]. The tables
//! are transcribed cell-for-cell; nothing here is generated.

use crate::algebra::{Elem, FiniteAlgebra};

fn toks(row: &str) -> Vec<String> {
    row.split_whitespace().map(str::to_string).collect()
}

fn build(
    name: &str,
    elements: &str,
    arrow: &[&str],
    squiggle: &[&str],
    one: &str,
    zero: Option<&str>,
) -> FiniteAlgebra {
    let names = toks(elements);
    let arrow: Vec<Vec<String>> = arrow.iter().map(|r| toks(r)).collect();
    let squiggle: Vec<Vec<String>> = squiggle.iter().map(|r| toks(r)).collect();
    FiniteAlgebra::from_named_tables(name, names, &arrow, &squiggle, one, zero)
        .unwrap_or_else(|e| panic!("bundled algebra `{name}` failed verification: {e}"))
}

/// Two incomparable 4-element blocks below a common top; a pseudo-BCK
/// algebra that is not a BCK algebra and has no least element.
pub fn two_block9() -> FiniteAlgebra {
    build(
        "two_block9",
        "o1 a1 b1 c1 o2 a2 b2 c2 1",
        &[
            "1  1  1  1  o2 a2 b2 c2 1",
            "o1 1  b1 1  o2 a2 b2 c2 1",
            "a1 a1 1  1  o2 a2 b2 c2 1",
            "o1 a1 b1 1  o2 a2 b2 c2 1",
            "o1 a1 b1 c1 1  1  1  1  1",
            "o1 a1 b1 c1 o2 1  b2 1  1",
            "o1 a1 b1 c1 c2 c2 1  1  1",
            "o1 a1 b1 c1 o2 c2 b2 1  1",
            "o1 a1 b1 c1 o2 a2 b2 c2 1",
        ],
        &[
            "1  1  1  1  o2 a2 b2 c2 1",
            "b1 1  b1 1  o2 a2 b2 c2 1",
            "o1 a1 1  1  o2 a2 b2 c2 1",
            "o1 a1 b1 1  o2 a2 b2 c2 1",
            "o1 a1 b1 c1 1  1  1  1  1",
            "o1 a1 b1 c1 b2 1  b2 1  1",
            "o1 a1 b1 c1 b2 c2 1  1  1",
            "o1 a1 b1 c1 b2 c2 b2 1  1",
            "o1 a1 b1 c1 o2 a2 b2 c2 1",
        ],
        "1",
        None,
    )
}

/// Bounded diamond `0 < a,b < c < 1` (`a`, `b` incomparable); not good, and
/// admits no Bosbach state.
pub fn diamond() -> FiniteAlgebra {
    let (names, arrow, squiggle, one, zero) = diamond_raw();
    FiniteAlgebra::from_tables("diamond", names, arrow, squiggle, one, zero)
        .expect("bundled diamond failed verification")
}

/// Raw pieces of [`diamond`], for mutation tests.
pub fn diamond_raw() -> (Vec<String>, Vec<Elem>, Vec<Elem>, Elem, Option<Elem>) {
    let alg = build(
        "diamond",
        "0 a b c 1",
        &[
            "1 1 1 1 1",
            "0 1 b 1 1",
            "a a 1 1 1",
            "0 a b 1 1",
            "0 a b c 1",
        ],
        &[
            "1 1 1 1 1",
            "b 1 b 1 1",
            "0 a 1 1 1",
            "0 a b 1 1",
            "0 a b c 1",
        ],
        "1",
        Some("0"),
    );
    (
        alg.elem_names().to_vec(),
        alg.arrow_table(crate::algebra::ArrowKind::Arrow).cells().to_vec(),
        alg.arrow_table(crate::algebra::ArrowKind::Squiggle).cells().to_vec(),
        alg.one(),
        alg.zero(),
    )
}

/// Good 6-element lattice `0 < a < b,c < d < 1` (`b`, `c` incomparable); a
/// good pseudo-BCK lattice without the pseudo-product condition, with a
/// unique Bosbach state and a unique state-measure.
pub fn a1() -> FiniteAlgebra {
    build(
        "a1",
        "0 a b c d 1",
        &[
            "1 1 1 1 1 1",
            "0 1 1 1 1 1",
            "0 a 1 c 1 1",
            "0 b b 1 1 1",
            "0 a b c 1 1",
            "0 a b c d 1",
        ],
        &[
            "1 1 1 1 1 1",
            "0 1 1 1 1 1",
            "0 c 1 c 1 1",
            "0 a b 1 1 1",
            "0 a b c 1 1",
            "0 a b c d 1",
        ],
        "1",
        Some("0"),
    )
}

/// Bounded lattice `0 < a < b,c < 1` (`b`, `c` incomparable) with a unique
/// state-morphism; lacks the pseudo-product at `c ⊙ b`.
pub fn pentagon() -> FiniteAlgebra {
    build(
        "pentagon",
        "0 a b c 1",
        &[
            "1 1 1 1 1",
            "0 1 1 1 1",
            "0 a 1 c 1",
            "0 b b 1 1",
            "0 a b c 1",
        ],
        &[
            "1 1 1 1 1",
            "0 1 1 1 1",
            "0 c 1 c 1",
            "0 a b 1 1",
            "0 a b c 1",
        ],
        "1",
        Some("0"),
    )
}

/// Good linear algebra `0 < a < b < c < 1` with no Bosbach state but a
/// unique Riečan state `(0, 1/2, 1/2, 1, 1)`.
pub fn chain5() -> FiniteAlgebra {
    build(
        "chain5",
        "0 a b c 1",
        &[
            "1 1 1 1 1",
            "b 1 1 1 1",
            "b c 1 1 1",
            "0 a b 1 1",
            "0 a b c 1",
        ],
        &[
            "1 1 1 1 1",
            "b 1 1 1 1",
            "b b 1 1 1",
            "0 b b 1 1",
            "0 a b c 1",
        ],
        "1",
        Some("0"),
    )
}

/// Two-element chain with classical implication in both tables; the
/// smallest bounded pseudo-BCK algebra.
pub fn chain2() -> FiniteAlgebra {
    build(
        "chain2",
        "0 1",
        &["1 1", "0 1"],
        &["1 1", "0 1"],
        "1",
        Some("0"),
    )
}

/// The five paper algebras, in a fixed order.
pub fn paper_algebras() -> Vec<FiniteAlgebra> {
    vec![two_block9(), diamond(), a1(), pentagon(), chain5()]
}

/// Paper algebras plus the trivial 2-chain.
pub fn all_algebras() -> Vec<FiniteAlgebra> {
    let mut v = paper_algebras();
    v.push(chain2());
    v
}
