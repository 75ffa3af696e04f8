//! Sparse linear expressions over entropy coordinates, and tagged
//! constraints built from them.
//!
//! By convention `h_{}` (the empty set) is identically zero, so expression
//! constructors drop empty-mask terms instead of storing a degenerate
//! coordinate.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::ground::SubsetMask;
use crate::rat::Rat;

/// Sparse map from entropy coordinates to rational coefficients, plus a
/// rational constant. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LinExpr {
    terms: BTreeMap<SubsetMask, Rat>,
    constant: Rat,
}

impl LinExpr {
    pub fn zero() -> LinExpr {
        LinExpr::default()
    }

    pub fn constant(value: Rat) -> LinExpr {
        LinExpr {
            terms: BTreeMap::new(),
            constant: value,
        }
    }

    /// H(S): a single coordinate with coefficient one. H of the empty set
    /// is the zero expression.
    pub fn entropy(s: SubsetMask) -> LinExpr {
        let mut e = LinExpr::zero();
        e.add_term(s, Rat::from_integer(1.into()));
        e
    }

    /// H(A | C) = H(A ∪ C) − H(C).
    pub fn conditional_entropy(a: SubsetMask, c: SubsetMask) -> LinExpr {
        let mut e = LinExpr::zero();
        let one = Rat::from_integer(1.into());
        e.add_term(a.union(c), one.clone());
        e.add_term(c, -one);
        e
    }

    /// I(A : B | C) = H(A ∪ C) + H(B ∪ C) − H(C) − H(A ∪ B ∪ C).
    ///
    /// Sets may overlap; coefficients cancel through the shared map, so
    /// e.g. I(A : A) collapses to H(A).
    pub fn conditional_mutual_information(a: SubsetMask, b: SubsetMask, c: SubsetMask) -> LinExpr {
        let mut e = LinExpr::zero();
        let one = Rat::from_integer(1.into());
        e.add_term(a.union(c), one.clone());
        e.add_term(b.union(c), one.clone());
        e.add_term(c, -one.clone());
        e.add_term(a.union(b).union(c), -one);
        e
    }

    /// Adds `coeff * h_S`, dropping the term if the result cancels and
    /// ignoring the empty mask entirely.
    pub fn add_term(&mut self, s: SubsetMask, coeff: Rat) {
        if s.is_empty() || coeff.is_zero() {
            return;
        }
        match self.terms.entry(s) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_constant(&mut self, value: Rat) {
        self.constant += value;
    }

    pub fn add_scaled(&mut self, other: &LinExpr, scale: &Rat) {
        if scale.is_zero() {
            return;
        }
        for (s, c) in &other.terms {
            self.add_term(*s, c * scale);
        }
        self.constant += &other.constant * scale;
    }

    pub fn scale(&mut self, factor: &Rat) {
        if factor.is_zero() {
            *self = LinExpr::zero();
            return;
        }
        for c in self.terms.values_mut() {
            *c *= factor;
        }
        self.constant *= factor;
    }

    pub fn coeff(&self, s: SubsetMask) -> Rat {
        self.terms.get(&s).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn constant_part(&self) -> &Rat {
        &self.constant
    }

    pub fn terms(&self) -> impl Iterator<Item = (SubsetMask, &Rat)> {
        self.terms.iter().map(|(s, c)| (*s, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.constant.is_zero()
    }

    /// Every coordinate rewritten through `map`; used by the orbit
    /// quotient. Coefficients of coordinates that collide are merged.
    pub fn rewritten(&self, mut map: impl FnMut(SubsetMask) -> SubsetMask) -> LinExpr {
        let mut out = LinExpr::constant(self.constant.clone());
        for (s, c) in &self.terms {
            out.add_term(map(*s), c.clone());
        }
        out
    }

    /// Evaluates the expression against a coordinate assignment.
    pub fn eval(&self, mut value_of: impl FnMut(SubsetMask) -> Rat) -> Rat {
        let mut acc = self.constant.clone();
        for (s, c) in &self.terms {
            acc += c * value_of(*s);
        }
        acc
    }
}

impl core::ops::AddAssign<&LinExpr> for LinExpr {
    fn add_assign(&mut self, other: &LinExpr) {
        for (s, c) in &other.terms {
            self.add_term(*s, c.clone());
        }
        self.constant += &other.constant;
    }
}

impl core::ops::SubAssign<&LinExpr> for LinExpr {
    fn sub_assign(&mut self, other: &LinExpr) {
        for (s, c) in &other.terms {
            self.add_term(*s, -c.clone());
        }
        self.constant -= &other.constant;
    }
}

/// Relation of a constraint expression to zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    /// expr >= 0
    GeZero,
    /// expr = 0
    EqZero,
}

/// Where a constraint came from. Set at creation, immutable afterwards.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Provenance {
    Elemental,
    Scheme,
    Copy,
    Symmetry,
    Normalization,
    ObjectiveLink,
}

impl Provenance {
    pub fn name(self) -> &'static str {
        match self {
            Provenance::Elemental => "elemental",
            Provenance::Scheme => "scheme",
            Provenance::Copy => "copy",
            Provenance::Symmetry => "symmetry",
            Provenance::Normalization => "normalization",
            Provenance::ObjectiveLink => "objective-link",
        }
    }
}

/// A tagged linear constraint over entropy coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub expr: LinExpr,
    pub relation: Relation,
    pub provenance: Provenance,
}

impl Constraint {
    pub fn ge_zero(expr: LinExpr, provenance: Provenance) -> Constraint {
        Constraint {
            expr,
            relation: Relation::GeZero,
            provenance,
        }
    }

    pub fn eq_zero(expr: LinExpr, provenance: Provenance) -> Constraint {
        Constraint {
            expr,
            relation: Relation::EqZero,
            provenance,
        }
    }

    /// Sorted `(mask, coefficient)` pairs, mostly for tests and export.
    pub fn sorted_terms(&self) -> Vec<(SubsetMask, Rat)> {
        self.expr.terms().map(|(s, c)| (s, c.clone())).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{frac, int};

    fn m(elements: &[usize]) -> SubsetMask {
        SubsetMask::from_elements(elements)
    }

    #[test]
    fn entropy_expressions() {
        let e = LinExpr::entropy(m(&[1, 2]));
        assert_eq!(e.coeff(m(&[1, 2])), int(1));
        assert_eq!(e.num_terms(), 1);
        assert!(LinExpr::entropy(SubsetMask::EMPTY).is_zero());
        let single = LinExpr::entropy(m(&[0]));
        assert_eq!(single.coeff(m(&[0])), int(1));
    }

    #[test]
    fn cmi_expansion_matches_definition() {
        // I({1}:{2}) = h1 + h2 - h12
        let e = LinExpr::conditional_mutual_information(m(&[1]), m(&[2]), SubsetMask::EMPTY);
        assert_eq!(e.coeff(m(&[1])), int(1));
        assert_eq!(e.coeff(m(&[2])), int(1));
        assert_eq!(e.coeff(m(&[1, 2])), int(-1));
        assert_eq!(e.num_terms(), 3);

        // I({1}:{2}|{3}) = h13 + h23 - h3 - h123
        let e = LinExpr::conditional_mutual_information(m(&[1]), m(&[2]), m(&[3]));
        assert_eq!(e.coeff(m(&[1, 3])), int(1));
        assert_eq!(e.coeff(m(&[2, 3])), int(1));
        assert_eq!(e.coeff(m(&[3])), int(-1));
        assert_eq!(e.coeff(m(&[1, 2, 3])), int(-1));

        // I(A:A) collapses to H(A)
        let e = LinExpr::conditional_mutual_information(m(&[1]), m(&[1]), SubsetMask::EMPTY);
        assert_eq!(e.coeff(m(&[1])), int(1));
        assert_eq!(e.num_terms(), 1);
    }

    #[test]
    fn arithmetic_keeps_the_map_sparse() {
        let mut e = LinExpr::entropy(m(&[1]));
        e.add_term(m(&[1]), int(-1));
        assert!(e.is_zero());

        let mut e = LinExpr::conditional_entropy(m(&[1]), m(&[2]));
        e.scale(&frac(1, 2));
        assert_eq!(e.coeff(m(&[1, 2])), frac(1, 2));
        e.scale(&int(0));
        assert!(e.is_zero());
    }

    #[test]
    fn eval_is_linear() {
        let e = LinExpr::conditional_mutual_information(m(&[1]), m(&[2]), SubsetMask::EMPTY);
        // Independent uniform bits: h1 = h2 = 1, h12 = 2 -> zero information.
        let v = |s: SubsetMask| int(s.len() as i64);
        assert_eq!(e.eval(v), int(0));
        // Identical bits: h1 = h2 = h12 = 1 -> one bit of information.
        let v = |_: SubsetMask| int(1);
        assert_eq!(e.eval(v), int(1));
    }
}
