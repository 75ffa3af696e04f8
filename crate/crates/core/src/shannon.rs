//! The elemental basis of Shannon-type inequalities.
//!
//! For `n` variables the basis consists of the `n` tail entropies
//! `H(X_i | X_rest) >= 0` followed by the `C(n,2) * 2^(n-2)` instances
//! `I(X_i : X_j | X_K) >= 0`, which together generate every Shannon-type
//! inequality. Working with this basis instead of all submodularity
//! instances keeps the row count at `n + C(n,2) * 2^(n-2)` without changing
//! the cone.

use alloc::vec::Vec;

use crate::expr::{Constraint, LinExpr, Provenance, Relation};
use crate::ground::{coord_mask, GroundError, SubsetMask, MAX_GROUND};
use crate::rat::Rat;

/// Number of elemental inequalities at ground size `n`.
pub fn elemental_count(n: usize) -> u64 {
    let n = n as u64;
    if n < 2 {
        return n;
    }
    n + n * (n - 1) / 2 * (1u64 << (n - 2))
}

/// The `index`-th elemental inequality in canonical order: first the `n`
/// conditional entropies by `i` ascending, then the conditional mutual
/// informations ordered by `(i, j, K-as-integer)`.
pub fn elemental_by_index(n: usize, index: u64) -> Constraint {
    debug_assert!(index < elemental_count(n));
    let full = SubsetMask((1u32 << n) - 1);
    if index < n as u64 {
        let i = index as usize;
        let rest = full.difference(SubsetMask::singleton(i));
        return Constraint::ge_zero(
            LinExpr::conditional_entropy(SubsetMask::singleton(i), rest),
            Provenance::Elemental,
        );
    }
    let per_pair = 1u64 << (n - 2);
    let mut k = index - n as u64;
    let (pair_rank, cond_rank) = (k / per_pair, k % per_pair);
    // Unrank the pair (i, j), i < j, ordered lexicographically.
    let mut i = 0usize;
    k = pair_rank;
    loop {
        let count = (n - 1 - i) as u64;
        if k < count {
            break;
        }
        k -= count;
        i += 1;
    }
    let j = i + 1 + k as usize;
    let others = full
        .difference(SubsetMask::singleton(i))
        .difference(SubsetMask::singleton(j));
    // cond_rank indexes the subsets of `others` in ascending mask order;
    // deposit its bits onto the actual positions of `others`.
    let mut cond = SubsetMask::EMPTY;
    for (bit, e) in others.elements().enumerate() {
        if cond_rank >> bit & 1 == 1 {
            cond = cond.with(e);
        }
    }
    Constraint::ge_zero(
        LinExpr::conditional_mutual_information(
            SubsetMask::singleton(i),
            SubsetMask::singleton(j),
            cond,
        ),
        Provenance::Elemental,
    )
}

/// Streams the elemental family in canonical order without materializing
/// it; the catalog's largest instances run to a couple million rows.
pub fn elemental_iter(n: usize) -> impl Iterator<Item = Constraint> {
    (0..elemental_count(n)).map(move |k| elemental_by_index(n, k))
}

/// The full elemental family as a vector.
pub fn elemental_inequalities(n: usize) -> Result<Vec<Constraint>, GroundError> {
    if n == 0 || n > MAX_GROUND {
        return Err(GroundError::TooLarge { requested: n });
    }
    Ok(elemental_iter(n).collect())
}

/// Exact feasibility of a full coordinate vector against every elemental
/// inequality. `v[coord_index(S) - 1]` holds the value of `h_S`.
pub fn is_shannon_feasible(n: usize, v: &[Rat]) -> Result<bool, GroundError> {
    if n == 0 || n > MAX_GROUND {
        return Err(GroundError::TooLarge { requested: n });
    }
    let expected = (1usize << n) - 1;
    if v.len() != expected {
        return Err(GroundError::OutOfRange {
            index: v.len(),
            size: expected,
        });
    }
    let value_of = |s: SubsetMask| v[s.0 as usize - 1].clone();
    for c in elemental_iter(n) {
        if c.expr.eval(value_of) < Rat::from_integer(0.into()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Convenience for tests and feasible-point construction: evaluates a rank
/// function over every nonempty subset into coordinate order.
pub fn vector_from_fn(n: usize, mut f: impl FnMut(SubsetMask) -> Rat) -> Vec<Rat> {
    (1..1u32 << n)
        .map(|idx| f(coord_mask(idx).expect("nonzero index")))
        .collect()
}
