//! Pseudo-BCK algebras generated from interval boxes of `ℤᵈ`, and
//! isomorphism search between small algebras.
//!
//! On the negative interval `[-u, 0]` of `ℤᵈ` (componentwise order) the
//! arrows are `x→y = (y−x) ∧ 0` and `x⇝y = (−x+y) ∧ 0`; on `[0, u]` they
//! are `x→y = (u−x+y) ∧ u` and `x⇝y = (y−x+u) ∧ u`. Only abelian sources
//! are generated — finite boxes of non-abelian lattice-ordered groups do
//! not exist — so both arrows always coincide and the generated algebras
//! are BCK. The generator trusts the arrow formulas and re-verifies the
//! axioms from scratch; the derived negations are whatever the tables
//! give (`x⁻ = −u−x` on the negative interval), computed rather than
//! assumed.

use crate::algebra::{Elem, FiniteAlgebra};
use crate::{Error, Result};

const MAX_CARRIER: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoxVariant {
    /// `[-u, 0]`, top `0`, bottom `-u`
    NegInterval,
    /// `[0, u]`, top `u`, bottom `0`
    PosInterval,
}

/// A box `[-u, 0]` or `[0, u]` over `ℤᵈ` with unit `u ≥ 1` componentwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxSpec {
    pub dims: usize,
    pub unit: Vec<u32>,
    pub variant: BoxVariant,
}

impl BoxSpec {
    pub fn neg(unit: Vec<u32>) -> Self {
        BoxSpec {
            dims: unit.len(),
            unit,
            variant: BoxVariant::NegInterval,
        }
    }

    pub fn pos(unit: Vec<u32>) -> Self {
        BoxSpec {
            dims: unit.len(),
            unit,
            variant: BoxVariant::PosInterval,
        }
    }

    pub fn carrier_size(&self) -> usize {
        self.unit.iter().map(|&u| u as usize + 1).product()
    }

    fn validate(&self) -> Result<()> {
        if self.dims == 0 || self.unit.len() != self.dims {
            return Err(Error::MalformedTable("box needs at least one dimension".into()));
        }
        if self.unit.iter().any(|&u| u == 0) {
            return Err(Error::MalformedTable("box unit must be ≥ 1 in every coordinate".into()));
        }
        if self.carrier_size() > MAX_CARRIER {
            return Err(Error::TooLarge {
                n: self.carrier_size(),
                bound: MAX_CARRIER,
            });
        }
        Ok(())
    }

    /// Lattice points in ascending lexicographic order.
    fn points(&self) -> Vec<Vec<i64>> {
        let (lo, hi): (Vec<i64>, Vec<i64>) = match self.variant {
            BoxVariant::NegInterval => (
                self.unit.iter().map(|&u| -(u as i64)).collect(),
                vec![0; self.dims],
            ),
            BoxVariant::PosInterval => (
                vec![0; self.dims],
                self.unit.iter().map(|&u| u as i64).collect(),
            ),
        };
        let mut out = Vec::with_capacity(self.carrier_size());
        let mut cur = lo.clone();
        loop {
            out.push(cur.clone());
            let mut i = self.dims;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur[i] < hi[i] {
                    cur[i] += 1;
                    for (j, c) in cur.iter_mut().enumerate().skip(i + 1) {
                        *c = lo[j];
                    }
                    break;
                }
            }
        }
    }
}

/// All box shapes with at most `limit` carrier elements, one representative
/// per coordinate permutation class (units listed non-increasing), in a
/// fixed deterministic order. Permuting coordinates yields isomorphic
/// algebras, so this enumerates every box up to isomorphism.
pub fn neg_box_shapes(limit: usize) -> Vec<Vec<u32>> {
    fn rec(limit: usize, max_u: u32, prefix: &mut Vec<u32>, size: usize, out: &mut Vec<Vec<u32>>) {
        if !prefix.is_empty() {
            out.push(prefix.clone());
        }
        let mut u = max_u;
        while u >= 1 {
            let next = size * (u as usize + 1);
            if next <= limit {
                prefix.push(u);
                rec(limit, u, prefix, next, out);
                prefix.pop();
            }
            u -= 1;
        }
    }
    let mut out = Vec::new();
    if limit >= 2 {
        rec(limit, limit as u32 - 1, &mut Vec::new(), 1, &mut out);
    }
    out
}

fn point_name(p: &[i64]) -> String {
    if p.len() == 1 {
        p[0].to_string()
    } else {
        let coords: Vec<String> = p.iter().map(i64::to_string).collect();
        format!("({})", coords.join(","))
    }
}

/// Generate the box algebra and run the full axiom verification on it.
pub fn box_algebra(spec: &BoxSpec) -> Result<FiniteAlgebra> {
    spec.validate()?;
    let points = spec.points();
    let n = points.len();
    let index_of = |p: &[i64]| -> Elem {
        Elem(
            points
                .binary_search_by(|q| q.as_slice().cmp(p))
                .expect("arrow image stays inside the box"),
        )
    };

    let unit: Vec<i64> = spec.unit.iter().map(|&u| u as i64).collect();
    let arrow = |x: &[i64], y: &[i64]| -> Vec<i64> {
        match spec.variant {
            BoxVariant::NegInterval => x
                .iter()
                .zip(y)
                .map(|(xi, yi)| (yi - xi).min(0))
                .collect(),
            BoxVariant::PosInterval => x
                .iter()
                .zip(y)
                .zip(&unit)
                .map(|((xi, yi), ui)| (ui - xi + yi).min(*ui))
                .collect(),
        }
    };

    let mut cells = Vec::with_capacity(n * n);
    for x in &points {
        for y in &points {
            cells.push(index_of(&arrow(x, y)));
        }
    }
    let names = points.iter().map(|p| point_name(p)).collect();
    let (one, zero) = match spec.variant {
        BoxVariant::NegInterval => (
            index_of(&vec![0; spec.dims]),
            index_of(&unit.iter().map(|u| -u).collect::<Vec<_>>()),
        ),
        BoxVariant::PosInterval => (index_of(&unit), index_of(&vec![0; spec.dims])),
    };
    let tag = match spec.variant {
        BoxVariant::NegInterval => "negbox",
        BoxVariant::PosInterval => "posbox",
    };
    let unit_s: Vec<String> = spec.unit.iter().map(u32::to_string).collect();
    let alg = FiniteAlgebra::from_tables(
        format!("{tag}_{}", unit_s.join("x")),
        names,
        cells.clone(),
        cells,
        one,
        Some(zero),
    )?;
    assert!(alg.is_bck(), "abelian box generated a non-BCK algebra");
    Ok(alg)
}

/// Same carrier with the two arrow tables exchanged (re-verified).
pub fn swap_arrows(alg: &FiniteAlgebra) -> Result<FiniteAlgebra> {
    use crate::algebra::ArrowKind;
    FiniteAlgebra::from_tables(
        format!("{}_swapped", alg.name()),
        alg.elem_names().to_vec(),
        alg.arrow_table(ArrowKind::Squiggle).cells().to_vec(),
        alg.arrow_table(ArrowKind::Arrow).cells().to_vec(),
        alg.one(),
        alg.zero(),
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoResult {
    /// `map[a] = image of a in the second algebra`
    Isomorphic(Vec<Elem>),
    NotIsomorphic,
}

/// Whether `map` is a bijection commuting with both arrows.
pub fn is_isomorphism(a: &FiniteAlgebra, b: &FiniteAlgebra, map: &[Elem]) -> bool {
    if a.n() != b.n() || map.len() != a.n() {
        return false;
    }
    let mut seen = vec![false; b.n()];
    for &m in map {
        if m.0 >= b.n() || seen[m.0] {
            return false;
        }
        seen[m.0] = true;
    }
    for x in a.elems() {
        for y in a.elems() {
            if map[a.arrow(x, y).0] != b.arrow(map[x.0], map[y.0])
                || map[a.squiggle(x, y).0] != b.squiggle(map[x.0], map[y.0])
            {
                return false;
            }
        }
    }
    true
}

/// Backtracking isomorphism search; candidates are tried in index order,
/// so the first isomorphism found is deterministic.
pub fn iso_search(a: &FiniteAlgebra, b: &FiniteAlgebra) -> IsoResult {
    if a.n() != b.n() || a.is_bounded() != b.is_bounded() {
        return IsoResult::NotIsomorphic;
    }
    let n = a.n();
    // order profile used for pruning: (|down-set|, |up-set|)
    let profile = |alg: &FiniteAlgebra, x: Elem| -> (usize, usize) {
        (
            alg.elems().filter(|&y| alg.le(y, x)).count(),
            alg.elems().filter(|&y| alg.le(x, y)).count(),
        )
    };
    let pa: Vec<(usize, usize)> = a.elems().map(|x| profile(a, x)).collect();
    let pb: Vec<(usize, usize)> = b.elems().map(|x| profile(b, x)).collect();

    let mut map: Vec<Option<Elem>> = vec![None; n];
    let mut used = vec![false; n];

    fn consistent(
        a: &FiniteAlgebra,
        b: &FiniteAlgebra,
        map: &[Option<Elem>],
        x: Elem,
    ) -> bool {
        let fx = map[x.0].unwrap();
        for y in a.elems() {
            let Some(fy) = map[y.0] else { continue };
            for (u, v, fu, fv) in [(x, y, fx, fy), (y, x, fy, fx)] {
                if let Some(fim) = map[a.arrow(u, v).0] {
                    if fim != b.arrow(fu, fv) {
                        return false;
                    }
                } else if map.iter().flatten().any(|&e| e == b.arrow(fu, fv)) {
                    // image already taken by another element
                    return false;
                }
                if let Some(fim) = map[a.squiggle(u, v).0] {
                    if fim != b.squiggle(fu, fv) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn dfs(
        a: &FiniteAlgebra,
        b: &FiniteAlgebra,
        pa: &[(usize, usize)],
        pb: &[(usize, usize)],
        map: &mut Vec<Option<Elem>>,
        used: &mut Vec<bool>,
        next: usize,
    ) -> bool {
        if next == a.n() {
            let full: Vec<Elem> = map.iter().map(|m| m.unwrap()).collect();
            return is_isomorphism(a, b, &full);
        }
        let x = Elem(next);
        for cand in b.elems() {
            if used[cand.0] || pa[next] != pb[cand.0] {
                continue;
            }
            if (x == a.one()) != (cand == b.one()) || (Some(x) == a.zero()) != (Some(cand) == b.zero()) {
                continue;
            }
            map[next] = Some(cand);
            used[cand.0] = true;
            if consistent(a, b, map, x) && dfs(a, b, pa, pb, map, used, next + 1) {
                return true;
            }
            map[next] = None;
            used[cand.0] = false;
        }
        false
    }

    if dfs(a, b, &pa, &pb, &mut map, &mut used, 0) {
        IsoResult::Isomorphic(map.into_iter().map(Option::unwrap).collect())
    } else {
        IsoResult::NotIsomorphic
    }
}
